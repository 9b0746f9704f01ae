//! Dense univariate and bivariate polynomials over an abstract scalar.

pub mod bi;
pub mod interp;
pub mod uni;

pub use bi::BiPoly;
pub use uni::UniPoly;

/// Variable tag carried by every polynomial.
#[derive(Copy, Clone, PartialEq, Eq, Debug, Hash)]
pub enum Var {
    X,
    Y,
    Z,
    T,
}

impl std::fmt::Display for Var {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Var::X => "X",
            Var::Y => "Y",
            Var::Z => "Z",
            Var::T => "T",
        };
        f.write_str(s)
    }
}
