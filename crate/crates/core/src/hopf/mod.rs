//! Hopf algebras given by exact structure constants.

mod algebra;
mod antipode;
mod construct;
mod dual;
mod io;
pub mod linalg;
mod morphism;
pub mod scalar;
mod verify;

pub use algebra::{CoTerm, HopfAlgebra, HopfData, Provenance, SparseTensor};
pub use antipode::solve_antipode;
pub use construct::{
    bicrossed_bialgebra, bicrossed_product, drinfeld_double, dual_group_algebra, group_algebra, split_extension,
    trivial_hopf, PairedCocycles, TwoCocycle,
};
pub use dual::dual_hopf;
pub use io::{dump_hopf, load_hopf};
pub use linalg::{Echelon, SparseVec};
pub use morphism::HopfMorphism;
pub use scalar::CycScalar;
pub use verify::{verify_hopf_axioms, verify_hopf_axioms_sampled, Axiom, AxiomViolation, HopfReport};
