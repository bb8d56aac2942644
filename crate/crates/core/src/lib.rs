pub mod blocks;
pub mod coinvariant;
pub mod error;
pub mod hecke;
pub mod laurent;
pub mod linalg;
pub mod ratpoly;
pub mod root_system;
pub mod weyl;

pub use blocks::{BlockDesc, GradedMatrix, K0Vector};
pub use coinvariant::{CellularDatum, Coinvariant, FreeBasis, SchubertElem};
pub use error::{Error, Result};
pub use hecke::{HeckeAlgebra, HeckeElem, KlTable};
pub use laurent::{LaurentPoly, QPoly};
pub use root_system::{CartanType, RootDatum, SimpleSubset, Weight};
pub use weyl::{ElemId, Side, WeylElem, WeylGroup};
