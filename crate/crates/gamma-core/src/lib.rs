//! Ordered Γ-groups over a finite group Γ: simplicial and ultrasimplicial groups, their
//! decomposition witnesses, the Shen factorization step, direct limits, extensions, and
//! the graded matricial rings whose Grothendieck Γ-groups realize them.

pub mod error;
pub mod extension;
pub mod finite_group;
pub mod gamma_maps;
pub mod gamma_module;
pub mod graded_matricial;
pub mod hom_realization;
pub mod group_ring;
pub mod lattice;
pub mod limits;
pub mod ordered_simplicial;
pub mod schema;
pub mod sdp;
pub mod shen;
pub mod telescope;

pub use error::{Error, Result};
