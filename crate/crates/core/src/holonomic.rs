//! Algebraic equation -> linear ODE -> coefficient recurrence, and the
//! recurrence utilities used to check sequences against them.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::arith::{lcm_of_denominators, solve_over_field, BiPoly, DensePoly, Poly, RatFun, Rational};
use crate::error::{Error, Result};
use crate::series::Series;

/// Scales a family of polynomials to primitive integer coefficients (jointly),
/// with the leading coefficient of the last nonzero member positive.
fn normalize_family(polys: &[Poly]) -> Vec<Poly> {
    let l = lcm_of_denominators(polys.iter().flat_map(|p| p.coeffs()));
    let lr = Rational::from_integer(l);
    let scaled: Vec<Poly> = polys.iter().map(|p| p.scale(&lr)).collect();
    let g = scaled
        .iter()
        .flat_map(|p| p.coeffs())
        .fold(BigInt::zero(), |g, c| g.gcd(&c.to_integer()));
    if g.is_zero() {
        return scaled;
    }
    let lead_negative = scaled
        .iter()
        .rev()
        .find(|p| !p.is_zero())
        .is_some_and(|p| p.lc().is_negative());
    let mut factor = Rational::from_integer(g).recip();
    if lead_negative {
        factor = -factor;
    }
    scaled.iter().map(|p| p.scale(&factor)).collect()
}

/// Divides out the common polynomial factor of a family.
fn remove_common_factor(polys: &[Poly]) -> Vec<Poly> {
    let g = polys.iter().fold(Poly::zero(), |g, p| Poly::gcd(&g, p));
    if g.is_zero() || g.is_constant() {
        return polys.to_vec();
    }
    polys.iter().map(|p| p.exact_div(&g).expect("gcd divides")).collect()
}

/// `sum_j coeffs[j](x) * y^(j)(x) = 0`.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct LinearOde {
    #[serde(serialize_with = "ser_polys_x")]
    coeffs: Vec<Poly>,
}

impl LinearOde {
    /// Drops trailing zero coefficients; panics if every coefficient is zero.
    pub fn new(mut coeffs: Vec<Poly>) -> Self {
        while coeffs.last().is_some_and(Poly::is_zero) {
            coeffs.pop();
        }
        assert!(!coeffs.is_empty(), "zero differential operator");
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    /// Integer-cleared, content-free, common factor removed, leading sign positive.
    pub fn normalized(&self) -> Self {
        Self::new(normalize_family(&remove_common_factor(&self.coeffs)))
    }

    /// Applies the operator to a truncated series. The result is exact up to
    /// order `series.order() - self.order()`.
    pub fn apply(&self, series: &Series) -> Series {
        let order = series.order().saturating_sub(self.order());
        let mut acc = Series::zero(order);
        let mut deriv = series.clone();
        for (j, c) in self.coeffs.iter().enumerate() {
            if j > 0 {
                deriv = deriv.derivative();
            }
            let mut term = Series::zero(order);
            for (i, a) in c.coeffs().iter().enumerate() {
                if !a.is_zero() {
                    term = term.add(&deriv.shift_up(i).scale(a).truncate(order));
                }
            }
            acc = acc.add(&term.truncate(order));
        }
        acc
    }
}

impl fmt::Display for LinearOde {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let d = match j {
                0 => "y".to_string(),
                1..=3 => format!("y{}", "'".repeat(j)),
                _ => format!("y^({j})"),
            };
            parts.push(format!("({})*{d}", c.to_string_in("x")));
        }
        write!(f, "{} = 0", parts.join(" + "))
    }
}

impl fmt::Debug for LinearOde {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearOde({self})")
    }
}

fn ser_polys_x<S: serde::Serializer>(polys: &[Poly], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(polys.iter().map(|p| p.to_string_in("x")))
}

fn ser_polys_n<S: serde::Serializer>(polys: &[Poly], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(polys.iter().map(|p| p.to_string_in("n")))
}

/// `sum_i coeffs[i](n) * a(n + i) = 0` for every `n >= valid_from`.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct Recurrence {
    #[serde(serialize_with = "ser_polys_n")]
    coeffs: Vec<Poly>,
    valid_from: i64,
}

impl Recurrence {
    /// Strips zero coefficients at both ends, re-indexing as needed, and
    /// normalizes. Panics if all coefficients are zero.
    pub fn new(coeffs: Vec<Poly>, valid_from: i64) -> Self {
        let low = coeffs
            .iter()
            .position(|p| !p.is_zero())
            .expect("zero recurrence operator");
        let high = coeffs.iter().rposition(|p| !p.is_zero()).unwrap();
        let shift = low as i64;
        let coeffs: Vec<Poly> = coeffs[low..=high]
            .iter()
            .map(|p| if shift == 0 { p.clone() } else { p.shift_int(-shift) })
            .collect();
        Self {
            coeffs: normalize_family(&coeffs),
            valid_from: valid_from + shift,
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn valid_from(&self) -> i64 {
        self.valid_from
    }

    pub fn with_valid_from(mut self, valid_from: i64) -> Self {
        self.valid_from = valid_from;
        self
    }

    /// Same operator with the common polynomial factor of all coefficients
    /// removed; used to compare recurrences from different routes.
    pub fn primitive_part(&self) -> Self {
        Self {
            coeffs: normalize_family(&remove_common_factor(&self.coeffs)),
            valid_from: self.valid_from,
        }
    }

    /// Same operator up to a common polynomial factor.
    pub fn equivalent(&self, other: &Self) -> bool {
        self.primitive_part().coeffs == other.primitive_part().coeffs
    }

    /// `sum_i p_i(n) * a(n + i)` with `a` given by a lookup.
    pub fn residual_with(&self, n: i64, a: impl Fn(i64) -> Rational) -> Rational {
        let nn = Rational::from_integer(n.into());
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, p)| !p.is_zero())
            .map(|(i, p)| {
                let v = a(n + i as i64);
                if v.is_zero() {
                    Rational::zero()
                } else {
                    p.eval(&nn) * v
                }
            })
            .sum()
    }

    /// Coefficient strings in the expression grammar, lowest shift first.
    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|p| p.to_string_in("n")).collect()
    }
}

impl fmt::Display for Recurrence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, p)| !p.is_zero())
            .map(|(i, p)| {
                let a = if i == 0 {
                    "a(n)".to_string()
                } else {
                    format!("a(n+{i})")
                };
                format!("({})*{a}", p.to_string_in("n"))
            })
            .collect();
        write!(f, "{} = 0  (n >= {})", parts.join(" + "), self.valid_from)
    }
}

impl fmt::Debug for Recurrence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Recurrence({self})")
    }
}

/// `P(x, y) = 0` defining an algebraic function `y(x)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraicEquation {
    p: BiPoly,
}

impl AlgebraicEquation {
    pub fn new(p: BiPoly) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::InvalidArgument("zero polynomial".into()));
        }
        if p.deg_y().unwrap_or(0) == 0 {
            return Err(Error::InvalidArgument("equation does not involve y".into()));
        }
        Ok(Self { p })
    }

    pub fn poly(&self) -> &BiPoly {
        &self.p
    }
}

/// Element of Q(x)[y] / (Q) represented by its reduced polynomial in y.
type QuotientElem = DensePoly<RatFun>;

fn derive_in_quotient(e: &QuotientElem, y_prime: &QuotientElem, modulus: &QuotientElem) -> QuotientElem {
    let coeff_part = e.map_coeffs(RatFun::derivative);
    let chain = (&e.derivative() * y_prime).rem(modulus);
    &coeff_part + &chain
}

fn elem_vector(e: &QuotientElem, dim: usize) -> Vec<RatFun> {
    (0..dim).map(|i| e.coeff(i)).collect()
}

/// Successive derivatives `y, y', y'', ...` of a root of `eq`, each reduced
/// modulo the squarefree part of `P` and written in the basis `1, y, ..., y^(d-1)`.
pub fn derivative_vectors(eq: &AlgebraicEquation, count: usize) -> Result<Vec<Vec<RatFun>>> {
    let (modulus, y_prime) = quotient_setup(eq)?;
    let dim = modulus.degree().unwrap();
    let mut cur = DensePoly::<RatFun>::var().rem(&modulus);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        out.push(elem_vector(&cur, dim));
        cur = derive_in_quotient(&cur, &y_prime, &modulus);
    }
    Ok(out)
}

fn quotient_setup(eq: &AlgebraicEquation) -> Result<(QuotientElem, QuotientElem)> {
    let p = eq.p.as_poly_in_y();
    let modulus = p.squarefree_part();
    if modulus.deg() < 1 {
        return Err(Error::DegenerateEquation("no dependence on y".into()));
    }
    let p_y = modulus.derivative();
    let p_x = modulus.map_coeffs(RatFun::derivative);
    let (g, s, _) = DensePoly::ext_gcd(&p_y.rem(&modulus), &modulus);
    if g.deg() != 0 {
        return Err(Error::DegenerateEquation(
            "derivative in y is not invertible modulo the equation".into(),
        ));
    }
    let y_prime = (&(-&p_x) * &s).rem(&modulus);
    Ok((modulus, y_prime))
}

/// Minimal-order homogeneous linear ODE satisfied by every root of `eq`.
pub fn algeq_to_ode(eq: &AlgebraicEquation) -> Result<LinearOde> {
    let (modulus, y_prime) = quotient_setup(eq)?;
    let dim = modulus.degree().unwrap();
    let mut cur = DensePoly::<RatFun>::var().rem(&modulus);
    let mut columns: Vec<Vec<RatFun>> = Vec::new();
    for _ in 0..=dim {
        columns.push(elem_vector(&cur, dim));
        let k = columns.len();
        let matrix: Vec<Vec<RatFun>> = (0..dim)
            .map(|row| columns.iter().map(|c| c[row].clone()).collect())
            .collect();
        let (_, ns) = solve_over_field(&matrix, k, None).expect("homogeneous systems are consistent");
        if let Some(v) = ns.into_iter().next() {
            return Ok(ode_from_kernel(&v));
        }
        cur = derive_in_quotient(&cur, &y_prime, &modulus);
    }
    unreachable!("d + 1 vectors in a d-dimensional space are dependent")
}

fn ode_from_kernel(v: &[RatFun]) -> LinearOde {
    let den = v.iter().fold(Poly::one(), |l, f| {
        let g = Poly::gcd(&l, f.den());
        &l * &f.den().exact_div(&g).expect("gcd divides")
    });
    let coeffs = v
        .iter()
        .map(|f| {
            let scale = den.exact_div(f.den()).expect("lcm divisible");
            &f.num().clone() * &scale
        })
        .collect();
    LinearOde::new(coeffs).normalized()
}

/// Coefficient recurrence of a power-series solution of `ode`.
pub fn ode_to_rec(ode: &LinearOde) -> Recurrence {
    // x^i * f^(j) contributes (n-i+1)...(n-i+j) * a(n-i+j) at x^n
    let mut terms: Vec<(i64, Poly)> = Vec::new();
    for (j, c) in ode.coeffs().iter().enumerate() {
        for (i, a) in c.coeffs().iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            terms.push((j as i64 - i as i64, factorial_weight(a, i as i64, j as i64)));
        }
    }
    let smin = terms.iter().map(|t| t.0).min().expect("nonzero operator");
    let smax = terms.iter().map(|t| t.0).max().unwrap();
    let mut coeffs = vec![Poly::zero(); (smax - smin + 1) as usize];
    for (s, p) in terms {
        // reindex m = n + smin
        let idx = (s - smin) as usize;
        coeffs[idx] = &coeffs[idx] + &p.shift_int(-smin);
    }
    Recurrence::new(coeffs, smin.max(0))
}

/// `a * (n-i+1)(n-i+2)...(n-i+j)` as a polynomial in `n`.
fn factorial_weight(a: &Rational, i: i64, j: i64) -> Poly {
    (1..=j).fold(Poly::constant(a.clone()), |acc, t| &acc * &Poly::from_ints(&[t - i, 1]))
}

/// Outcome of evaluating a recurrence along a sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResidualReport {
    pub checked_from: i64,
    pub checked_to: i64,
    pub first_failure: Option<i64>,
}

impl ResidualReport {
    pub fn all_zero(&self) -> bool {
        self.first_failure.is_none()
    }
}

/// Evaluates `rec` at every admissible `n >= max(from, valid_from)` where
/// `seq[n + order]` exists. `seq[i]` is `a(i)`.
pub fn rec_check(rec: &Recurrence, seq: &[Rational], from: i64) -> Result<ResidualReport> {
    let start = from.max(rec.valid_from()).max(0);
    let last = seq.len() as i64 - 1 - rec.order() as i64;
    if last < start {
        return Err(Error::WindowTooLong {
            window: (start + rec.order() as i64 + 1) as usize,
            len: seq.len(),
        });
    }
    let first_failure = (start..=last).find(|&n| !rec.residual_with(n, |i| seq[i as usize].clone()).is_zero());
    Ok(ResidualReport {
        checked_from: start,
        checked_to: last,
        first_failure,
    })
}

/// First-order recurrence `den(n) a(n+1) - num(n) a(n) = 0` of a
/// hypergeometric term with the given consecutive-term ratio.
pub fn hyperterm_to_rec(ratio: &RatFun) -> Result<Recurrence> {
    if ratio.is_zero() {
        return Err(Error::InvalidArgument("zero term ratio".into()));
    }
    Ok(Recurrence::new(vec![-ratio.num(), ratio.den().clone()], 0))
}

/// Extends a sequence from `initial = [a(start), ..., a(start + order - 1)]`
/// to `count` terms `a(start) .. a(start + count - 1)`.
pub fn rec_unroll(rec: &Recurrence, start: i64, initial: &[Rational], count: usize) -> Result<Vec<Rational>> {
    let d = rec.order();
    if initial.len() < d {
        return Err(Error::InsufficientInitialValues {
            needed: d,
            got: initial.len(),
        });
    }
    if start < rec.valid_from() {
        return Err(Error::InvalidArgument(format!(
            "start {start} precedes the recurrence's valid range (n >= {})",
            rec.valid_from()
        )));
    }
    let mut out: Vec<Rational> = initial.iter().take(count).cloned().collect();
    let lead = &rec.coeffs()[d];
    while out.len() < count {
        let n = start + (out.len() - d) as i64;
        let nn = Rational::from_integer(n.into());
        let l = lead.eval(&nn);
        if l.is_zero() {
            return Err(Error::LeadingCoefficientZero(n));
        }
        let base = out.len() - d;
        let s: Rational = rec.coeffs()[..d]
            .iter()
            .enumerate()
            .map(|(i, p)| p.eval(&nn) * &out[base + i])
            .sum();
        out.push(-s / l);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, parse_expr, One};

    fn p(cs: &[i64]) -> Poly {
        Poly::from_ints(cs)
    }

    fn eq(text: &str) -> AlgebraicEquation {
        AlgebraicEquation::new(parse_expr(text, &["x", "y"]).unwrap().into_bipoly().unwrap()).unwrap()
    }

    #[test]
    fn geometric_series_ode() {
        let ode = algeq_to_ode(&eq("(1-x)*y - 1")).unwrap();
        // (1-x) y' - y = 0, normalized so the leading coefficient is positive
        assert_eq!(ode, LinearOde::new(vec![p(&[1]), p(&[-1, 1])]));
    }

    #[test]
    fn square_root_ode() {
        let ode = algeq_to_ode(&eq("y^2 - (1-x)")).unwrap();
        // 2(1-x) y' + y = 0
        assert_eq!(ode, LinearOde::new(vec![p(&[-1]), p(&[-2, 2])]));
    }

    #[test]
    fn degenerate_equation_reported() {
        // squarefree part of y^2 is y, fine; but P_y must be invertible mod P
        assert!(algeq_to_ode(&eq("y^2")).is_ok());
        assert!(AlgebraicEquation::new(parse_expr("x", &["x", "y"]).unwrap().into_bipoly().unwrap()).is_err());
    }

    #[test]
    fn ode_to_rec_examples() {
        // (1-x) y' - y = 0  ->  (n+1) a(n+1) - (n+1) a(n) = 0
        let rec = ode_to_rec(&LinearOde::new(vec![p(&[-1]), p(&[1, -1])]));
        assert_eq!(rec.coeffs(), &[p(&[-1, -1]), p(&[1, 1])]);
        assert_eq!(rec.valid_from(), 0);
        // y' - y = 0  ->  (n+1) a(n+1) - a(n) = 0
        let rec = ode_to_rec(&LinearOde::new(vec![p(&[-1]), p(&[1])]));
        assert_eq!(rec.coeffs(), &[p(&[-1]), p(&[1, 1])]);
    }

    #[test]
    fn rec_check_examples() {
        let r = Recurrence::new(vec![p(&[-1]), p(&[1])], 0);
        assert!(rec_check(&r, &[int(4), int(4), int(4)], 0).unwrap().all_zero());
        assert_eq!(
            rec_check(&r, &[int(1), int(2), int(3)], 0).unwrap().first_failure,
            Some(0)
        );
        assert!(matches!(rec_check(&r, &[int(1)], 0), Err(Error::WindowTooLong { .. })));
    }

    #[test]
    fn hyperterm_examples() {
        // n! : ratio n + 1
        let r = hyperterm_to_rec(&RatFun::from_poly(p(&[1, 1]))).unwrap();
        assert_eq!(r.coeffs(), &[p(&[-1, -1]), p(&[1])]);
        let r = hyperterm_to_rec(&RatFun::one()).unwrap();
        assert_eq!(r.coeffs(), &[p(&[-1]), p(&[1])]);
        assert!(hyperterm_to_rec(&RatFun::zero()).is_err());
    }

    #[test]
    fn unroll_examples() {
        let r = Recurrence::new(vec![p(&[-1]), p(&[1])], 0);
        assert_eq!(rec_unroll(&r, 0, &[int(1)], 5).unwrap(), vec![int(1); 5]);
        assert!(matches!(
            rec_unroll(&r, 0, &[], 5),
            Err(Error::InsufficientInitialValues { needed: 1, got: 0 })
        ));
        // n a(n+1) = a(n): leading coefficient vanishes at n = 0
        let r = Recurrence::new(vec![p(&[-1]), p(&[0, 1])], 0);
        assert_eq!(rec_unroll(&r, 0, &[int(1)], 3), Err(Error::LeadingCoefficientZero(0)));
    }

    #[test]
    fn low_zero_coefficients_are_reindexed() {
        // 0*a(n) + a(n+1) - (n+1) a(n+2): becomes a(m) - m a(m+1), valid from 1
        let r = Recurrence::new(vec![Poly::zero(), p(&[1]), p(&[-1, -1])], 0);
        assert_eq!(r.order(), 1);
        assert_eq!(r.valid_from(), 1);
        assert_eq!(r.coeffs(), &[p(&[-1]), p(&[0, 1])]);
    }
}
