//! Exact algebra for the Ore extensions `Λ(f) = K[x][y; f·d/dx]` over finite
//! fields: eigengroups of polynomials, eigenforms, centres, automorphisms,
//! isomorphism testing, simple modules and spectra.

pub mod eigengroup;
pub mod error;
pub mod expr;
pub mod gf;
pub mod lambda_aut;
pub mod matrix;
pub mod modules;
pub mod ore;
pub mod poly;
pub mod space;

pub use error::{Error, Result};
pub use gf::{Caps, Field, FieldRef, FieldTower, Fq};
pub use poly::Poly;
pub use space::FpSpace;
pub use ore::{OreAlgebra, OreElement};
pub use eigengroup::{AffineAut, Eigenform, Eigengroup, EigengroupDesc, Level, ShiftSpace, SubgroupSpec};
pub use lambda_aut::{AutGroup, IsoWitness, LambdaAut};
pub use matrix::Matrix;
pub use modules::{SimpleModule, Spectrum};
