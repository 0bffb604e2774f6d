pub mod automaton;
pub mod braid;
pub mod calibration;
pub mod catalog;
pub mod error;
pub mod fusion;
pub mod laurent;
pub mod oracle;
pub mod qtensor;
pub mod spinnet;
pub mod verify;

pub use automaton::{Automaton, RunReport};
pub use braid::{BraidWord, Crossing, Letter, LinkDiagram, PlatSpec};
pub use catalog::{Catalog, CatalogEntry};
pub use error::{Error, Result};
pub use fusion::{Decoration, FusionTree, Shape, StateVector};
pub use laurent::LaurentPoly;
pub use oracle::BracketResult;
pub use qtensor::{FMatrix, QContext, QRacahKey, Spin};
pub use spinnet::{CouplingGraph, GrowthTable};
