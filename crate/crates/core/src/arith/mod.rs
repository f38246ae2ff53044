//! Exact arithmetic substrate: rationals, dense univariate polynomials over
//! any exact field, rational functions, bivariate polynomials, exact linear
//! solving and the expression grammar.

mod bipoly;
mod linsolve;
mod parse;
mod poly;
mod ratfun;
mod rational;

use std::fmt::{Debug, Display};

pub use num_traits::{One, Zero};

pub use bipoly::BiPoly;
pub use linsolve::{nullspace, solve_linear_exact, solve_over_field, Rhs, Solution};
pub use parse::{parse_expr, parse_ratfun, parse_ratfun2, Expr, ParsedExpr};
pub use poly::{DensePoly, Poly};
pub use ratfun::{Frac, RatFun, RatFun2};
pub use rational::{bit_size, divisors, int, lcm_of_denominators, rat, render_decimal, Rational};

/// Operations every coefficient domain must provide.
///
/// Implemented for [`Rational`] and for rational functions over a field,
/// which gives the tower Q, Q(n), Q(n)(k) used by the telescoping engine.
pub trait Field: Clone + PartialEq + Debug + Display + Send + Sync + Zero + One + 'static {
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    /// Panics on zero.
    fn inv(&self) -> Self;
    fn from_rational(q: &Rational) -> Self;

    fn over(&self, other: &Self) -> Self {
        self.times(&other.inv())
    }
    fn from_i64(v: i64) -> Self {
        Self::from_rational(&Rational::from_integer(v.into()))
    }
    /// Rough size measure used to pick cheap pivots.
    fn cost(&self) -> u64;
    /// The value as a plain rational, when it is one.
    fn as_rational(&self) -> Option<Rational>;
    /// Map to Q by sending every parameter to `point`; `None` at a pole.
    fn specialize(&self, point: i64) -> Option<Rational>;
    /// Variable name used when printing polynomials over this field.
    fn poly_var() -> &'static str;

    /// Polynomial gcd over this field by a faster route than plain
    /// Euclid, when one exists. Must return a monic result.
    fn poly_gcd(_a: &DensePoly<Self>, _b: &DensePoly<Self>) -> Option<DensePoly<Self>> {
        None
    }
    /// The same hook for polynomials over `Frac<Self>`.
    fn frac_poly_gcd(_a: &DensePoly<Frac<Self>>, _b: &DensePoly<Frac<Self>>) -> Option<DensePoly<Frac<Self>>> {
        None
    }
}

impl Field for Rational {
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        self.recip()
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
    fn cost(&self) -> u64 {
        bit_size(self)
    }
    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
    fn specialize(&self, _point: i64) -> Option<Rational> {
        Some(self.clone())
    }
    fn poly_var() -> &'static str {
        "n"
    }
    fn frac_poly_gcd(a: &DensePoly<RatFun>, b: &DensePoly<RatFun>) -> Option<DensePoly<RatFun>> {
        Some(ratfun::gcd_over_qn(a, b))
    }
}
