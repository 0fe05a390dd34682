//! Triviality of 2-cocycle classes and counts of invertible objects.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::group::{Bits, GroupRef, GroupTable, PermGroup};
use crate::hopf::TwoCocycle;

/// Largest carrier for the brute-force coboundary search.
pub const BRUTE_FORCE_CAP: usize = 64;

/// Whether the class of `psi` in `H²(T, k^×)` is trivial.
///
/// For abelian `T` the class is trivial iff the alternating form
/// `ψ(a,b)/ψ(b,a)` is identically 1; for other carriers this falls back to
/// [`coboundary_search`].
pub fn cocycle_class_trivial(psi: &TwoCocycle) -> Result<bool> {
    if psi.carrier.is_abelian() {
        Ok(alternating_form_vanishes(psi))
    } else {
        coboundary_search(psi).map(|f| f.is_some())
    }
}

pub fn alternating_form_vanishes(psi: &TwoCocycle) -> bool {
    let n = psi.carrier.order();
    (0..n).all(|a| (0..n).all(|b| psi.value(a, b) == psi.value(b, a)))
}

/// Searches for `f: T → μ_M`, `M = N·|T|`, with `ψ = δf`, that is
/// `ψ(a,b) = f(a) f(b) / f(ab)`. Returns the exponents of `f` on success.
///
/// `f` is determined by its values on a generating set, so the search
/// runs over those values and propagates along the Cayley graph.
pub fn coboundary_search(psi: &TwoCocycle) -> Result<Option<Vec<u64>>> {
    let t = psi.carrier.table()?;
    let n = t.order();
    if n > BRUTE_FORCE_CAP {
        return Err(Error::CapExceeded {
            what: "coboundary search",
            size: n,
            cap: BRUTE_FORCE_CAP,
        });
    }
    let m = psi.conductor as u64 * n as u64;
    let lift = n as u64;
    let psi_m = |a: usize, b: usize| psi.value(a, b) as u64 * lift % m;
    let gens = t.generators_of(&t.whole());
    let k = gens.len();
    let e = t.identity() as usize;
    let mut choice = vec![0u64; k];
    loop {
        if let Some(f) = propagate(t, &gens, &choice, e, m, &psi_m) {
            let ok = (0..n).all(|a| {
                (0..n).all(|b| {
                    let ab = t.mul(a as u32, b as u32) as usize;
                    (f[a] + f[b] + m - f[ab]) % m == psi_m(a, b)
                })
            });
            if ok {
                return Ok(Some(f));
            }
        }
        // odometer over generator values
        let mut i = 0;
        loop {
            if i == k {
                return Ok(None);
            }
            choice[i] += 1;
            if choice[i] < m {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

fn propagate(
    t: &GroupTable,
    gens: &[u32],
    choice: &[u64],
    e: usize,
    m: u64,
    psi_m: &impl Fn(usize, usize) -> u64,
) -> Option<Vec<u64>> {
    let n = t.order();
    let mut f: Vec<Option<u64>> = vec![None; n];
    // ψ(e,e) = f(e)
    f[e] = Some(psi_m(e, e));
    let mut queue = vec![e];
    while let Some(g) = queue.pop() {
        let fg = f[g].unwrap();
        for (s, &gen) in gens.iter().enumerate() {
            let gs = t.mul(g as u32, gen) as usize;
            // f(gs) = f(g) + f(s) - ψ(g, s)
            let v = (fg + choice[s] + m - psi_m(g, gen as usize)) % m;
            match f[gs] {
                None => {
                    f[gs] = Some(v);
                    queue.push(gs);
                }
                Some(w) if w != v => return None,
                _ => {}
            }
        }
    }
    f.into_iter().collect()
}

/// `ψ^g(h1, h2) = ψ(h1, h2) ψ(g⁻¹h2⁻¹g, g⁻¹h1⁻¹g)` for `g ∈ N_G(T)`, as a
/// cocycle on `T` (indices of `psi.carrier`).
pub fn conjugated_cocycle(g_table: &GroupTable, t_in_g: &[u32], g: u32, psi: &TwoCocycle) -> Result<TwoCocycle> {
    let n = t_in_g.len();
    let pos = |x: u32| t_in_g.iter().position(|&y| y == x);
    let mut values = vec![0u32; n * n];
    for a in 0..n {
        for b in 0..n {
            let h1 = t_in_g[a];
            let h2 = t_in_g[b];
            let x = g_table.conj(g_table.inv(h2), g);
            let y = g_table.conj(g_table.inv(h1), g);
            let (px, py) = pos(x)
                .zip(pos(y))
                .ok_or_else(|| Error::InvalidArgument("g does not normalize T".into()))?;
            values[a * n + b] = (psi.value(a, b) + psi.value(px, py)) % psi.conductor;
        }
    }
    TwoCocycle::new(psi.carrier.clone(), psi.conductor, values)
}

/// Outcome of [`invertible_group_order`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InvertibleOrder {
    Exact(usize),
    /// The formula does not apply; the reason is recorded.
    Inconclusive(String),
}

/// `|K(ψ)|·|T̂|` with `K(ψ) = {gT ∈ N_G(T)/T : ψ^g has trivial class}`.
///
/// `psi.carrier` must be `T` as a permutation group on the same points
/// as `G` (for instance `g.subgroup(t)`).
pub fn invertible_group_order(g: &PermGroup, t: &Bits, psi: &TwoCocycle) -> Result<InvertibleOrder> {
    let table = g.table()?;
    if !table.is_subgroup(t) {
        return Err(Error::NotSubgroup("T is not a subgroup of G".into()));
    }
    let t_order = t.count_ones(..);
    if psi.carrier.order() != t_order {
        return Err(Error::InvalidArgument("cocycle carrier does not match T".into()));
    }
    let char_order = t_order / table.commutator_subgroup(t).count_ones(..);
    let normalizer = table.normalizer(t);
    if psi.is_trivial() {
        return Ok(InvertibleOrder::Exact(normalizer.count_ones(..) / t_order * char_order));
    }
    if !psi.carrier.is_abelian() {
        return Ok(InvertibleOrder::Inconclusive(
            "nontrivial ψ on a non-abelian T is outside the displayed formula".into(),
        ));
    }
    let t_in_g = carrier_embedding(g, t, &psi.carrier)?;
    let mut kept = 0usize;
    for x in normalizer.ones() {
        let conj = conjugated_cocycle(table, &t_in_g, x as u32, psi)?;
        if cocycle_class_trivial(&conj)? {
            kept += 1;
        }
    }
    Ok(InvertibleOrder::Exact(kept / t_order * char_order))
}

/// Indices in `g` of the carrier's elements.
fn carrier_embedding(g: &PermGroup, t: &Bits, carrier: &GroupRef) -> Result<Vec<u32>> {
    let direct: Option<Vec<u32>> = carrier
        .elements()
        .iter()
        .map(|p| g.index_of(p).map(|i| i as u32))
        .collect();
    if let Some(v) = direct {
        if v.iter().all(|&i| t.contains(i as usize)) {
            return Ok(v);
        }
    }
    Err(Error::InvalidArgument(
        "cocycle carrier must be T as a subgroup of G".into(),
    ))
}

/// The bilinear cocycle `β(a, b) = Σ c_ij a_i b_j` on `Z_{n1} × … × Z_{nk}`,
/// given the coordinates of each carrier element. Entries of `c` must
/// satisfy `c_ij·n_i ≡ c_ij·n_j ≡ 0 (mod N)` for `β` to be well defined.
pub fn bilinear_cocycle(
    carrier: GroupRef,
    coords: &[Vec<usize>],
    moduli: &[usize],
    c: &[Vec<u32>],
    conductor: u32,
) -> Result<TwoCocycle> {
    let k = moduli.len();
    for i in 0..k {
        for j in 0..k {
            let cij = c[i][j] as usize;
            if !(cij * moduli[i]).is_multiple_of(conductor as usize) || !(cij * moduli[j]).is_multiple_of(conductor as usize) {
                return Err(Error::InvalidArgument(format!("coefficient c[{i}][{j}] is not well defined")));
            }
        }
    }
    let n = coords.len();
    let mut values = vec![0u32; n * n];
    for a in 0..n {
        for b in 0..n {
            let mut s = 0usize;
            for i in 0..k {
                for j in 0..k {
                    s += c[i][j] as usize * coords[a][i] * coords[b][j];
                }
            }
            values[a * n + b] = (s % conductor as usize) as u32;
        }
    }
    TwoCocycle::new(carrier, conductor, values)
}

/// `Z_{n1} × … × Z_{nk}` as a permutation group, with each element's
/// coordinates in the order of [`PermGroup::elements`].
pub fn abelian_group(moduli: &[usize]) -> Result<(GroupRef, Vec<Vec<usize>>)> {
    let n: usize = moduli.iter().product();
    let decode = |mut x: usize| {
        let mut v = vec![0; moduli.len()];
        for (i, &m) in moduli.iter().enumerate().rev() {
            v[i] = x % m;
            x /= m;
        }
        v
    };
    let encode = |v: &[usize]| v.iter().zip(moduli).fold(0, |acc, (&a, &m)| acc * m + a);
    let mut mul = vec![0u32; n * n];
    for a in 0..n {
        for b in 0..n {
            let (va, vb) = (decode(a), decode(b));
            let s: Vec<usize> = va.iter().zip(&vb).zip(moduli).map(|((x, y), m)| (x + y) % m).collect();
            mul[a * n + b] = encode(&s) as u32;
        }
    }
    let table = GroupTable::new(n, mul)?;
    let (g, pos) = PermGroup::from_table_with_map(&table);
    let mut coords = vec![Vec::new(); n];
    for a in 0..n {
        coords[pos[a] as usize] = decode(a);
    }
    Ok((g.into_ref(), coords))
}

/// Coefficient choices `c` making [`bilinear_cocycle`] well defined.
pub fn bilinear_coefficients(moduli: &[usize], conductor: u32) -> Vec<Vec<Vec<u32>>> {
    let k = moduli.len();
    let allowed = |i: usize, j: usize| -> Vec<u32> {
        (0..conductor)
            .filter(|&c| {
                (c as usize * moduli[i]).is_multiple_of(conductor as usize) && (c as usize * moduli[j]).is_multiple_of(conductor as usize)
            })
            .collect()
    };
    let slots: Vec<(usize, usize)> = (0..k).flat_map(|i| (0..k).map(move |j| (i, j))).collect();
    let options: Vec<Vec<u32>> = slots.iter().map(|&(i, j)| allowed(i, j)).collect();
    let mut out = Vec::new();
    let mut idx = vec![0usize; slots.len()];
    loop {
        let mut c = vec![vec![0u32; k]; k];
        for (s, &(i, j)) in slots.iter().enumerate() {
            c[i][j] = options[s][idx[s]];
        }
        out.push(c);
        let mut s = 0;
        loop {
            if s == slots.len() {
                return out;
            }
            idx[s] += 1;
            if idx[s] < options[s].len() {
                break;
            }
            idx[s] = 0;
            s += 1;
        }
    }
}

/// `gcd` helper shared by the certificates.
pub(crate) fn gcd(a: usize, b: usize) -> usize {
    a.gcd(&b)
}
