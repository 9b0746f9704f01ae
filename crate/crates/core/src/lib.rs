//! Exact construction and verification of correspondences on P1 x P1 that are
//! compatible with the point-line incidence of the Fano plane, together with
//! the degree-7 Galois pencils P - TQ they produce, and the analogous small
//! degree constructions for V4, D4, D5 and D6.

pub mod bigfloat;
pub mod complex;
pub mod corr;
pub mod covariants;
pub mod error;
pub mod fano;
pub mod linalg;
pub mod multipoly;
pub mod pencil;
pub mod perm;
pub mod poly;
pub mod quartet;
pub mod rational;
pub mod recon;
pub mod resroute;
pub mod resultant;
pub mod roots;
pub mod scalar;
pub mod section3;
pub mod smalldeg;

pub use bigfloat::BigFloat;
pub use complex::BigComplex;
pub use error::{Error, Result};
pub use linalg::RatMatrix;
pub use poly::{BiPoly, UniPoly, Var};
pub use rational::Rational;
pub use scalar::Scalar;
