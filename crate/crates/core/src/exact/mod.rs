//! Normal Hopf subalgebras, Hopf kernels and cokernels, exact sequences
//! and composition series.

pub mod identify;
pub mod kernel;
pub mod normality;
pub mod sequence;
pub mod series;
pub mod subalgebra;

pub use kernel::{coinvariants, hopf_cokernel, hopf_kernel, quotient_by_ideal, Side};
pub use normality::{is_normal_subalgebra, AdjointSide, NormalityResult, NormalityWitness};
pub use sequence::{
    bicrossed_sequence, cokernel_sequence, dualize_sequence, group_quotient_sequence, verify_exact_sequence,
    ExactSequenceH, SequenceStatus,
};
pub use subalgebra::HopfSubalgebra;
pub use identify::{group_structure, GroupKind};
pub use series::{
    composition_series_hopf, explore_series, jh_compare, ChainChoice, ChainExploration, FactorDescriptor,
    HopfCompSeries, SeriesStrategy,
};
