//! Exact rational arithmetic, polynomials over the fixed alphabet
//! `D, x, λ, μ, t`, affine substitution, and simple field extensions.

mod extfield;
mod parse;
mod poly;
pub mod qlinalg;
mod subst;
mod upoly;

pub use extfield::{ExtFieldElem, FieldContext};
pub use parse::{parse_expr, parse_poly, Expr};
pub use poly::{Monomial, MultiPoly, Var, NVARS};
pub use subst::{substitute_affine, Affine, Substitution};
pub use upoly::UPoly;

/// Arbitrary-precision rational, always in lowest terms.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// `n!` as a rational.
pub fn factorial(n: u32) -> Rational {
    (1..=n as i64).fold(rat(1), |acc, k| acc * rat(k))
}

/// `binom(n, k)`; zero when `k > n`.
pub fn binomial(n: u32, k: u32) -> Rational {
    if k > n {
        return rat(0);
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// Falling factorial `n (n-1) ⋯ (n-k+1)`.
pub fn falling(n: u32, k: u32) -> Rational {
    if k > n {
        return rat(0);
    }
    ((n - k + 1)..=n).fold(rat(1), |acc, j| acc * rat(j as i64))
}
