pub mod axring;
pub mod cartan;
pub mod classical;
pub mod chartab;
pub mod decompose;
pub mod error;
pub mod exec;
pub mod expr;
pub mod laurent;
pub mod lattice;
mod literal;
pub mod quiverdim;
pub mod series;
pub mod suites;

pub use axring::AXElem;
pub use cartan::{CartanDatum, Root, Weight};
pub use chartab::CharTable;
pub use error::{Error, Result};
pub use exec::Exec;
pub use laurent::Laurent;
pub use lattice::{Lattice, XElem, YElem};
