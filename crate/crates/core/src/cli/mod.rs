//! The `hopfseq` command line.

pub mod report;
pub mod targets;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::caps::{self, CapOverrides};
use crate::error::{Error, Result};
use crate::exact::{
    bicrossed_sequence, composition_series_hopf, dualize_sequence, explore_series, jh_compare, ChainChoice,
    SeriesStrategy,
};
use crate::fusion::{
    a6_simplicity_check, comp_series_cat, family_simplicity_check, validate_type, CatStrategy, SimplicityCertificate,
    TypeData, Verdict,
};
use crate::group::{
    compare_rows, dump_group, exact_factorizations, identify, rows_from_lattice, IsoLabel, SubgroupLattice,
    A5_CLASSES, A6_CLASSES,
};
use crate::hopf::{
    bicrossed_product, dump_hopf, verify_hopf_axioms, verify_hopf_axioms_sampled, HopfAlgebra, PairedCocycles,
    Provenance,
};
use report::{Format, Table};

#[derive(Debug, Parser)]
#[command(name = "hopfseq", version, about = "Exact sequences of Hopf algebras and fusion-category simplicity checks")]
pub struct Cli {
    /// Output format for tables.
    #[arg(long, value_enum, default_value_t = Format::Markdown, global = true)]
    pub format: Format,
    /// Override the group-order cap.
    #[arg(long, global = true)]
    pub cap_order: Option<usize>,
    /// Scalar field Q(ζ_N) for bicrossed-product targets.
    #[arg(long, global = true)]
    pub conductor: Option<u32>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Subgroups up to conjugacy with |T|, |T̂| and [N(T):T].
    Table { group: String },
    /// Exact factorizations G = A·B up to conjugacy.
    Factorize {
        group: String,
        /// Include the trivial factorizations G = G·1.
        #[arg(long)]
        all: bool,
    },
    /// Build a Hopf algebra, matched pair or group and write it out.
    Build {
        target: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check Hopf axioms, matched-pair axioms or an exact sequence.
    Verify {
        target: String,
        /// Check this many random instances instead of all.
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Verify the canonical exact sequence of a bicrossed product and its dual.
        #[arg(long)]
        sequence: bool,
    },
    /// Composition series of a Hopf algebra or fusion category.
    Compseries {
        target: String,
        /// Strategy; repeat to compare. Categories: a6, iterated or pairs
        /// like "S5*Z6,S4*Z5". Hopf algebras: first-maximal, last-maximal,
        /// smallest-normal.
        #[arg(long = "chain")]
        chains: Vec<String>,
        /// Exhaust every chain of catalog normal subalgebras.
        #[arg(long)]
        explore: bool,
    },
    /// Simplicity certificate: a6-simple or a category expression.
    Certify {
        target: String,
        /// Also write the key=value trace to this file.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Print a previously written trace instead of computing one.
        #[arg(long)]
        load: bool,
    },
    /// Dimension facts of a category expression, or the standard type checks.
    Ledger { expr: Option<String> },
}

/// Exit status for an error: 2 parse, 3 cap, 1 otherwise.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } | Error::InvalidArgument(_) | Error::InvalidPerm(_) => 2,
        Error::CapExceeded { .. } => 3,
        _ => 1,
    }
}

/// Output of one invocation.
#[derive(Debug, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    if let Some(n) = cli.cap_order {
        caps::set_overrides(CapOverrides {
            order: Some(n),
            ..CapOverrides::default()
        });
    }
    let mut out = Outcome::default();
    match execute(&cli, &mut out) {
        Ok(code) => out.code = code,
        Err(e) => {
            out.stderr.push_str(&format!("error: {e}\n"));
            out.code = exit_code(&e);
        }
    }
    out
}

fn execute(cli: &Cli, out: &mut Outcome) -> Result<i32> {
    match &cli.command {
        Command::Table { group } => table(group, cli.format, out),
        Command::Factorize { group, all } => factorize(group, *all, cli.format, out),
        Command::Build { target, out: path } => build(target, cli.conductor, path.as_ref(), out),
        Command::Verify {
            target,
            samples,
            seed,
            sequence,
        } => verify(target, cli.conductor, *samples, *seed, *sequence, out),
        Command::Compseries { target, chains, explore } => compseries(target, chains, *explore, cli.conductor, out),
        Command::Certify { target, out: path, load } => certify(target, path.as_ref(), *load, cli.format, out),
        Command::Ledger { expr } => ledger(expr.as_deref(), cli.format, out),
    }
}

fn table(spec: &str, format: Format, out: &mut Outcome) -> Result<i32> {
    let g = targets::group(spec)?;
    let lattice = SubgroupLattice::compute(&g)?;
    let rows = rows_from_lattice(&g, &lattice)?;
    let mut t = Table::new(&["Representative", "Isomorphism class", "|T|", "|T̂|", "[N(T):T]"]);
    for r in &rows {
        let gens: Vec<String> = r.representative.iter().map(|p| p.to_string()).collect();
        t.push(vec![
            format!("⟨{}⟩", gens.join(", ")),
            r.iso_label.to_string(),
            r.order.to_string(),
            r.char_group_order.to_string(),
            r.normalizer_index.to_string(),
        ]);
    }
    out.stdout.push_str(&t.render(format));
    let reference = match identify(g.table()?) {
        IsoLabel::Alternating(6) => Some(&A6_CLASSES[..]),
        IsoLabel::Alternating(5) => Some(&A5_CLASSES[..]),
        _ => None,
    };
    if let Some(reference) = reference {
        let diff = compare_rows(&rows, reference);
        if diff.is_empty() {
            out.stderr.push_str(&format!("reference table: match ({} classes)\n", rows.len()));
        } else {
            for d in diff {
                out.stderr.push_str(&format!("reference table mismatch: {d}\n"));
            }
            return Ok(1);
        }
    }
    Ok(0)
}

fn factorize(spec: &str, all: bool, format: Format, out: &mut Outcome) -> Result<i32> {
    let g = targets::group(spec)?;
    let facts = exact_factorizations(&g, !all)?;
    let mut t = Table::new(&["Left", "Right", "|Left|", "|Right|", "Verified"]);
    let mut code = 0;
    for f in &facts {
        let ok = f.verify().is_ok();
        if !ok {
            code = 1;
        }
        t.push(vec![
            f.left_label().to_string(),
            f.right_label().to_string(),
            f.left.count_ones(..).to_string(),
            f.right.count_ones(..).to_string(),
            if ok { "yes" } else { "no" }.to_string(),
        ]);
    }
    out.stdout.push_str(&t.render(format));
    out.stderr.push_str(&format!("{} exact factorizations\n", facts.len()));
    Ok(code)
}

/// Hopf targets honouring `--conductor` for bicrossed products.
fn hopf_target(spec: &str, conductor: Option<u32>) -> Result<std::sync::Arc<HopfAlgebra>> {
    let h = targets::hopf(spec)?;
    match (conductor, h.provenance()) {
        (Some(n), Provenance::Bicrossed(mp)) if n != h.conductor() => {
            let mp = mp.clone();
            Ok(std::sync::Arc::new(bicrossed_product(&mp, &PairedCocycles::trivial(&mp), n)?))
        }
        _ => Ok(h),
    }
}

fn build(spec: &str, conductor: Option<u32>, path: Option<&PathBuf>, out: &mut Outcome) -> Result<i32> {
    let text = if spec.starts_with("mp:") {
        let mp = targets::matched_pair(spec)?;
        let v = mp.verify_compatibility()?;
        if !v.is_empty() {
            return Err(Error::Verification(format!("matched pair fails: {}", v[0])));
        }
        mp.dump()
    } else if let Some(g) = spec.strip_prefix("group:") {
        dump_group(&*targets::group(g)?)
    } else {
        dump_hopf(&*hopf_target(spec, conductor)?)
    };
    match path {
        Some(p) => {
            std::fs::write(p, &text).map_err(|e| Error::InvalidArgument(format!("cannot write {}: {e}", p.display())))?;
            out.stderr.push_str(&format!("wrote {}\n", p.display()));
        }
        None => out.stdout.push_str(&text),
    }
    Ok(0)
}

fn verify(
    spec: &str,
    conductor: Option<u32>,
    samples: Option<usize>,
    seed: u64,
    sequence: bool,
    out: &mut Outcome,
) -> Result<i32> {
    if spec.starts_with("mp:") || spec.ends_with(".mp") {
        let mp = if spec.starts_with("mp:") {
            targets::matched_pair(spec)?
        } else {
            let text = std::fs::read_to_string(spec).map_err(|e| Error::InvalidArgument(format!("cannot read {spec}: {e}")))?;
            crate::matched_pair::MatchedPair::load(&text)?
        };
        let v = mp.verify_compatibility()?;
        for x in &v {
            out.stdout.push_str(&format!("violation: {x}\n"));
        }
        out.stdout.push_str(&format!("matched pair: {}\n", if v.is_empty() { "PASS" } else { "FAIL" }));
        return Ok(if v.is_empty() { 0 } else { 1 });
    }
    let h = hopf_target(spec, conductor)?;
    if sequence {
        let seq = bicrossed_sequence(&h)?;
        out.stdout.push_str("sequence k -> k^Γ -> H -> kG -> k\n");
        out.stdout.push_str(&seq.status.report());
        let dual = dualize_sequence(&seq)?;
        out.stdout.push_str("\ndual sequence\n");
        out.stdout.push_str(&dual.status.report());
        return Ok(if seq.is_exact() && dual.is_exact() { 0 } else { 1 });
    }
    let report = match samples {
        Some(n) => verify_hopf_axioms_sampled(&h, n, seed),
        None => verify_hopf_axioms(&h),
    };
    out.stdout.push_str(&format!("dimension: {}\n", h.dim()));
    out.stdout.push_str(&format!("instances checked: {}\n", report.checked));
    for v in report.violations.iter().take(50) {
        out.stdout.push_str(&format!("violation: {v}\n"));
    }
    if report.violations.len() > 50 {
        out.stdout.push_str(&format!("... {} more\n", report.violations.len() - 50));
    }
    out.stdout.push_str(&format!("hopf axioms: {}\n", if report.is_empty() { "PASS" } else { "FAIL" }));
    Ok(if report.is_empty() { 0 } else { 1 })
}

fn compseries(spec: &str, chains: &[String], explore: bool, conductor: Option<u32>, out: &mut Outcome) -> Result<i32> {
    if targets::is_category(spec) {
        let c = targets::category(spec)?;
        let names: Vec<String> = if chains.is_empty() { vec!["a6".into()] } else { chains.to_vec() };
        let mut all = Vec::new();
        for name in &names {
            let s = comp_series_cat(&c, &CatStrategy::by_name(name)?)?;
            out.stdout.push_str(&format!("chain: {name}\n{}\n", s.render()));
            all.push((name.clone(), s));
        }
        for w in all.windows(2) {
            let (a, b) = (&w[0], &w[1]);
            let verdict = if a.1.sorted_factor_names() == b.1.sorted_factor_names() {
                "factor multisets agree"
            } else {
                "factor multisets differ"
            };
            out.stdout.push_str(&format!(
                "compare {} (length {}) vs {} (length {}): {verdict}\n",
                a.0,
                a.1.len(),
                b.0,
                b.1.len()
            ));
        }
        return Ok(0);
    }
    let h = hopf_target(spec, conductor)?;
    let names: Vec<String> = if chains.is_empty() { vec!["first-maximal".into()] } else { chains.to_vec() };
    let mut series = Vec::new();
    for name in &names {
        let choice = match name.as_str() {
            "first-maximal" => ChainChoice::FirstMaximal,
            "last-maximal" => ChainChoice::LastMaximal,
            "smallest-normal" => ChainChoice::SmallestNormal,
            other => return Err(Error::InvalidArgument(format!("unknown chain {other:?} for a Hopf algebra"))),
        };
        let strategy = SeriesStrategy {
            choice,
            ..SeriesStrategy::default()
        };
        let s = composition_series_hopf(&h, &strategy)?;
        out.stdout.push_str(&format!("chain: {name}\nfactors: {}\n", s.factor_string()));
        for step in &s.chain {
            out.stdout.push_str(&format!("step: {step}\n"));
        }
        series.push((name.clone(), s));
    }
    for w in series.windows(2) {
        let verdict = if jh_compare(&w[0].1, &w[1].1) {
            "factor multisets agree"
        } else {
            "factor multisets differ"
        };
        out.stdout.push_str(&format!("compare {} vs {}: {verdict}\n", w[0].0, w[1].0));
    }
    if explore {
        let ex = explore_series(&h)?;
        out.stdout.push_str(&format!("explored chains: {}\n", ex.chains));
        for m in &ex.multisets {
            let parts: Vec<String> = m.iter().map(|f| f.to_string()).collect();
            out.stdout.push_str(&format!("multiset: {{{}}}\n", parts.join(", ")));
        }
        out.stdout.push_str(&format!(
            "jordan-holder: {}\n",
            if ex.jordan_holder_holds() { "holds" } else { "fails" }
        ));
    }
    Ok(0)
}

fn certify(spec: &str, path: Option<&PathBuf>, load: bool, format: Format, out: &mut Outcome) -> Result<i32> {
    let cert = if load {
        let text = std::fs::read_to_string(spec).map_err(|e| Error::InvalidArgument(format!("cannot read {spec}: {e}")))?;
        SimplicityCertificate::load(&text)?
    } else if spec == "a6-simple" {
        a6_simplicity_check()?
    } else {
        family_simplicity_check(&targets::category(spec)?)?
    };
    match format {
        Format::Csv => {
            let mut t = Table::new(&["stage", "hypothesis", "eliminated", "reason"]);
            for e in &cert.trace {
                t.push(vec![e.stage.clone(), e.hypothesis.clone(), e.eliminated.to_string(), e.reason.clone()]);
            }
            out.stdout.push_str(&format!("# target: {}, verdict: {}\n", cert.target, cert.verdict));
            out.stdout.push_str(&t.render(Format::Csv));
        }
        _ => out.stdout.push_str(&cert.render()),
    }
    if let Some(p) = path {
        std::fs::write(p, cert.dump()).map_err(|e| Error::InvalidArgument(format!("cannot write {}: {e}", p.display())))?;
    }
    Ok(if cert.verdict == Verdict::Simple { 0 } else { 1 })
}

/// Type constants checked by `ledger` with no argument: name, type data
/// and expected total.
fn standard_types() -> Vec<(&'static str, TypeData, u64)> {
    vec![
        ("(1,12; 4,3)", TypeData::from_dims(&[(1, 12), (4, 3)]), 60),
        ("(1,72; 4,18)", TypeData::from_dims(&[(1, 72), (4, 18)]), 360),
        ("(1,24; 2,12; 4,6; 8,3)", TypeData::from_dims(&[(1, 24), (2, 12), (4, 6), (8, 3)]), 360),
        ("coalgebra A1: 1 + 2·9 + 16 + 25", TypeData::from_dims(&[(1, 1), (3, 2), (4, 1), (5, 1)]), 60),
        ("coalgebra A0: 12 + 3·16", TypeData::from_dims(&[(1, 12), (4, 3)]), 60),
        ("coalgebra B: 4 + 6·4 + 2·16", TypeData::from_dims(&[(1, 4), (2, 6), (4, 2)]), 60),
    ]
}

fn ledger(expr: Option<&str>, format: Format, out: &mut Outcome) -> Result<i32> {
    match expr {
        None => {
            let mut t = Table::new(&["type", "sum", "expected", "valid"]);
            let mut code = 0;
            for (name, data, total) in standard_types() {
                let total = num_rational::BigRational::from_integer(total.into());
                let ok = validate_type(&data, &total);
                if !ok {
                    code = 1;
                }
                t.push(vec![name.into(), data.total().to_string(), total.to_string(), ok.to_string()]);
            }
            out.stdout.push_str(&t.render(format));
            Ok(code)
        }
        Some(e) => {
            let c = targets::category(e)?;
            let mut t = Table::new(&["fact", "value"]);
            t.push(vec!["expression".into(), c.to_string()]);
            t.push(vec!["FPdim".into(), c.fpdim.to_string()]);
            t.push(vec!["integral".into(), c.integral.to_string()]);
            t.push(vec![
                "pointed".into(),
                c.pointed.map_or("unknown".into(), |p| p.to_string()),
            ]);
            let ty = match &c.type_data {
                Some(d) => {
                    let parts: Vec<String> = d.0.iter().map(|(d2, m)| format!("{d2}:{m}")).collect();
                    let valid = validate_type(d, &c.fpdim);
                    format!("{} (squared dimension:multiplicity), sum valid: {valid}", parts.join("; "))
                }
                None => "unknown".into(),
            };
            t.push(vec!["type".into(), ty]);
            out.stdout.push_str(&t.render(format));
            Ok(0)
        }
    }
}
