pub mod algebra;
pub mod backend;
pub mod error;
pub mod green;
pub mod lattice;
pub mod linalg;
pub mod modcat;
pub mod module;
pub mod oracle;
pub mod orders;
pub mod report;
pub mod verify;

pub use algebra::{AlgebraSpec, Orient};
pub use error::{Error, Result};
pub use green::{EquivClass, ExchangePair, GreenAnalysis, HnResult, Mgs, SiltingSummand, SummandSet};
pub use lattice::TorsionLattice;
pub use modcat::{ModCat, Options, TorsionClass};
pub use module::{Descriptor, DimVector, IdSet, Indec, IndecId, ModuleSum, SesRecord};
