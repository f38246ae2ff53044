use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::{write_term, Poly};
use super::ratfun::RatFun;
use super::rational::{lcm_of_denominators, Rational};
use super::DensePoly;

/// Sparse polynomial in two variables, keyed by `(deg_x, deg_y)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), Rational>,
}

/// Graded-lex key with the second variable ranking above the first.
fn grlex(m: &(u32, u32)) -> (u32, u32, u32) {
    (m.0 + m.1, m.1, m.0)
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_terms([((0, 0), c)])
    }

    pub fn x() -> Self {
        Self::from_terms([((1, 0), Rational::one())])
    }

    pub fn y() -> Self {
        Self::from_terms([((0, 1), Rational::one())])
    }

    pub fn from_terms<I: IntoIterator<Item = ((u32, u32), Rational)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    /// Builds `sum_j coeffs[j](x) * y^j`.
    pub fn from_y_coeffs(coeffs: &[Poly]) -> Self {
        let mut p = Self::zero();
        for (j, c) in coeffs.iter().enumerate() {
            for (i, a) in c.coeffs().iter().enumerate() {
                p.add_term((i as u32, j as u32), a);
            }
        }
        p
    }

    fn add_term(&mut self, m: (u32, u32), c: &Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, dx: u32, dy: u32) -> Rational {
        self.terms.get(&(dx, dy)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rational)> {
        self.terms.iter()
    }

    pub fn support_size(&self) -> usize {
        self.terms.len()
    }

    pub fn deg_x(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.0).max()
    }

    pub fn deg_y(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.1).max()
    }

    /// Highest monomial in graded-lex order with y > x.
    pub fn leading_monomial(&self) -> Option<(u32, u32)> {
        self.terms.keys().copied().max_by_key(grlex)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, a)| (*m, a * c)))
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (*m, -c)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for ((a, b), c) in &self.terms {
            for ((d, e), f) in &other.terms {
                out.add_term((a + d, b + e), &(c * f));
            }
        }
        out
    }

    /// Coefficients of `y^j` as polynomials in `x`.
    pub fn y_coeffs(&self) -> Vec<Poly> {
        let dy = match self.deg_y() {
            None => return Vec::new(),
            Some(d) => d as usize,
        };
        let dx = self.deg_x().unwrap_or(0) as usize;
        (0..=dy)
            .map(|j| Poly::new((0..=dx).map(|i| self.coeff(i as u32, j as u32)).collect()))
            .collect()
    }

    /// The same polynomial viewed in `y` over the field Q(x).
    pub fn as_poly_in_y(&self) -> DensePoly<RatFun> {
        DensePoly::new(self.y_coeffs().into_iter().map(RatFun::from_poly).collect())
    }

    /// Univariate polynomial in `y` after substituting `x = x0`.
    pub fn eval_x(&self, x0: &Rational) -> Poly {
        Poly::new(self.y_coeffs().iter().map(|c| c.eval(x0)).collect())
    }

    pub fn eval(&self, x0: &Rational, y0: &Rational) -> Rational {
        self.eval_x(x0).eval(y0)
    }

    pub fn derivative_x(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|(m, _)| m.0 > 0)
                .map(|(m, c)| ((m.0 - 1, m.1), c * Rational::from_integer(m.0.into()))),
        )
    }

    pub fn derivative_y(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|(m, _)| m.1 > 0)
                .map(|(m, c)| ((m.0, m.1 - 1), c * Rational::from_integer(m.1.into()))),
        )
    }

    /// Primitive integer coefficients with a positive coefficient on the
    /// graded-lex leading monomial.
    pub fn canonical(&self) -> Self {
        let lead = match self.leading_monomial() {
            None => return Self::zero(),
            Some(m) => m,
        };
        let l = lcm_of_denominators(self.terms.values());
        let ints: Vec<((u32, u32), BigInt)> = self
            .terms
            .iter()
            .map(|(m, c)| (*m, (c * Rational::from_integer(l.clone())).to_integer()))
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |g, (_, c)| g.gcd(c));
        let sign = if self.terms[&lead].is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        Self::from_terms(
            ints.into_iter()
                .map(|(m, c)| (m, Rational::from_integer(c / &g * &sign))),
        )
    }

    pub fn to_string_in(&self, vx: &str, vy: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut monos: Vec<_> = self.terms.iter().collect();
        monos.sort_by_key(|(m, _)| std::cmp::Reverse(grlex(m)));
        let mut out = String::new();
        for ((i, j), c) in monos {
            let mut parts = Vec::new();
            match i {
                0 => {}
                1 => parts.push(vx.to_string()),
                _ => parts.push(format!("{vx}^{i}")),
            }
            match j {
                0 => {}
                1 => parts.push(vy.to_string()),
                _ => parts.push(format!("{vy}^{j}")),
            }
            write_term(&mut out, c, &parts.join("*"));
        }
        out
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("x", "y"))
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::int;

    #[test]
    fn canonical_form_and_order() {
        // -2*x*y^2 + 4*y - 6
        let p = BiPoly::from_terms([((1, 2), int(-2)), ((0, 1), int(4)), ((0, 0), int(-6))]);
        let c = p.canonical();
        assert_eq!(c.coeff(1, 2), int(1));
        assert_eq!(c.coeff(0, 1), int(-2));
        assert_eq!(c.to_string(), "x*y^2 - 2*y + 3");
        assert_eq!(c.leading_monomial(), Some((1, 2)));
    }

    #[test]
    fn arithmetic() {
        let p = BiPoly::x().add(&BiPoly::y());
        let sq = p.mul(&p);
        assert_eq!(sq.coeff(1, 1), int(2));
        assert_eq!(sq.to_string(), "y^2 + 2*x*y + x^2");
        assert_eq!(sq.derivative_y().to_string(), "2*y + 2*x");
        assert_eq!(sq.eval(&int(1), &int(2)), int(9));
        assert!(p.sub(&p).is_zero());
    }
}
