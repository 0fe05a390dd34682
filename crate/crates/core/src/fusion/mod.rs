//! Fusion-category expressions, dimension arithmetic, simplicity
//! certificates and categorical composition series.

pub mod certificate;
pub mod cocycle;
pub mod expr;
pub mod series;

pub use certificate::{a6_simplicity_check, family_simplicity_check, SimplicityCertificate, TraceEntry, Verdict};
pub use cocycle::{
    abelian_group, alternating_form_vanishes, bilinear_coefficients, bilinear_cocycle, coboundary_search,
    cocycle_class_trivial, conjugated_cocycle, invertible_group_order, InvertibleOrder,
};
pub use expr::{fpdim, validate_type, CatExpr, CatGroup, CatNode, TypeData, TRIVIAL_OMEGA};
pub use series::{
    cat_factorization_from_group, comp_series_cat, CatCompSeries, CatFactorization, CatRule, CatStep, CatStrategy,
    TerminalStatus,
};
