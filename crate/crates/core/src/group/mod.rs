//! Permutation-group engine.

mod factor;
mod io;
mod label;
mod perm;
mod perm_group;
mod reference;
mod series;
mod subgroups;
mod table;

pub use factor::{
    check_bijection, exact_factorizations, exact_factorizations_in, find_factorization,
    verify_factorization, verify_iterated_factorization, ExactFactorizationG,
};
pub use io::{dump_group, parse_group, parse_group_spec, GroupSpec};
pub use label::{abelian_invariants, identify, is_prime, IsoLabel};
pub use perm::Perm;
pub use reference::{compare_rows, ClassTuple, A5_CLASSES, A6_CLASSES};
pub use perm_group::{named, GroupRef, PermGroup, TABLE_CAP};
pub use series::{all_chain_factor_multisets, composition_series_group, count_chains, factors_of_table};
pub use subgroups::{
    class_metrics, metrics_of, rows_from_lattice, subgroup_classes, ClassMetrics, SubgroupClass,
    SubgroupClassRow, SubgroupLattice,
};
pub use table::{Bits, GroupTable};

/// Closure of `generators` on `degree` points.
pub fn elements(generators: Vec<Perm>, degree: usize) -> crate::Result<PermGroup> {
    PermGroup::generate(degree, generators)
}
