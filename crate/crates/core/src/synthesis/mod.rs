//! Isogeny classes of supersingular threefolds, which contain Jacobians,
//! and explicit quartics realizing them.

pub mod catalog;
pub mod census;
pub mod construct;
pub mod tables;

pub use catalog::{contains_jacobian, enumerate_classes, lookup, CatalogEntry, IsogenyClassSpec, Verdict};
pub use census::{census, verify_tables, CensusOptions, CensusReport, TableReport};
pub use construct::{
    construct_cubic_type, construct_extremal, construct_for_weil, construct_quadratic_type, construct_split,
    construct_template, extremal_weil, quartic_from_data, ASet, Construction, Witness,
};
pub use tables::{template_attained, templates_for, Template};
