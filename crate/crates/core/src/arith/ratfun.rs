use std::fmt;

use num_traits::{One, Zero};

use super::poly::DensePoly;
use super::rational::Rational;
use super::Field;
use crate::error::{Error, Result};

/// Quotient of two polynomials over `F`, kept in lowest terms with a monic
/// denominator. Two equal rational functions always compare equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Frac<F> {
    num: DensePoly<F>,
    den: DensePoly<F>,
}

/// Rational function in one variable (conventionally `n`) over Q.
pub type RatFun = Frac<Rational>;

/// Rational function in `k` whose coefficients are rational functions in `n`.
pub type RatFun2 = Frac<RatFun>;

impl<F: Field> Frac<F> {
    /// Panics on a zero denominator; see [`Frac::try_new`].
    pub fn new(num: DensePoly<F>, den: DensePoly<F>) -> Self {
        Self::try_new(num, den).expect("zero denominator")
    }

    pub fn try_new(num: DensePoly<F>, den: DensePoly<F>) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(Self::zero_frac());
        }
        let g = DensePoly::gcd(&num, &den);
        let (mut num, mut den) = if g.is_constant() {
            (num, den)
        } else {
            (
                num.exact_div(&g).expect("gcd divides"),
                den.exact_div(&g).expect("gcd divides"),
            )
        };
        let lc = den.lc();
        if !lc.is_one() {
            let inv = lc.inv();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Some(Self { num, den })
    }

    fn zero_frac() -> Self {
        Self {
            num: DensePoly::zero(),
            den: DensePoly::one(),
        }
    }

    pub fn from_poly(p: DensePoly<F>) -> Self {
        Self {
            num: p,
            den: DensePoly::one(),
        }
    }

    pub fn constant(c: F) -> Self {
        Self::from_poly(DensePoly::constant(c))
    }

    pub fn var() -> Self {
        Self::from_poly(DensePoly::var())
    }

    pub fn num(&self) -> &DensePoly<F> {
        &self.num
    }

    pub fn den(&self) -> &DensePoly<F> {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn eval(&self, at: &F) -> Result<F> {
        let d = self.den.eval(at);
        if d.is_zero() {
            return Err(Error::Pole(at.to_string()));
        }
        Ok(self.num.eval(at).over(&d))
    }

    /// `f(var + by)`.
    pub fn shift(&self, by: &F) -> Self {
        Self::new(self.num.shift(by), self.den.shift(by))
    }

    pub fn shift_int(&self, by: i64) -> Self {
        self.shift(&F::from_i64(by))
    }

    pub fn derivative(&self) -> Self {
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        Self::new(n, &self.den * &self.den)
    }

    pub fn powi(&self, e: i32) -> Self {
        let base = if e < 0 { self.inv() } else { self.clone() };
        let m = e.unsigned_abs();
        Self::new(base.num.pow(m), base.den.pow(m))
    }

    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> Frac<G> {
        Frac::new(self.num.map_coeffs(&f), self.den.map_coeffs(&f))
    }

    pub fn to_string_in(&self, var: &str) -> String {
        if self.den.is_constant() {
            return self.num.to_string_in(var);
        }
        format!("({})/({})", self.num.to_string_in(var), self.den.to_string_in(var))
    }
}

impl RatFun {
    /// Numerator and denominator rescaled so the denominator is a primitive
    /// integer polynomial with positive leading coefficient.
    pub fn integer_parts(&self) -> (DensePoly<Rational>, DensePoly<Rational>) {
        let den = self.den.primitive();
        let s = den.lc();
        (self.num.scale(&s), den)
    }

    /// Limit at infinity, when finite.
    pub fn limit_at_infinity(&self) -> Option<Rational> {
        match self.num.deg().cmp(&self.den.deg()) {
            std::cmp::Ordering::Less => Some(Rational::zero()),
            std::cmp::Ordering::Equal => Some(self.num.lc() / self.den.lc()),
            std::cmp::Ordering::Greater => None,
        }
    }

    /// Grammar form with integer numerator and denominator sharing no
    /// common integer factor, denominator leading coefficient positive.
    pub fn to_string_in_var(&self, var: &str) -> String {
        if self.den.is_constant() {
            return self.num.scale(&self.den.lc().recip()).to_string_in(var);
        }
        let (n, d) = self.integer_parts();
        let l = Rational::from_integer(crate::arith::lcm_of_denominators(n.coeffs()));
        let (n, d) = (n.scale(&l), d.scale(&l));
        let g = n
            .coeffs()
            .iter()
            .chain(d.coeffs())
            .fold(num_bigint::BigInt::zero(), |g, c| {
                num_integer::Integer::gcd(&g, c.numer())
            });
        let g = Rational::from_integer(g).recip();
        let (n, d) = (n.scale(&g), d.scale(&g));
        format!("({})/({})", n.to_string_in(var), d.to_string_in(var))
    }
}

impl RatFun2 {
    /// Substitute `n -> n + by` in every coefficient.
    pub fn shift_outer(&self, by: i64) -> Self {
        self.map_coeffs(|c| c.shift_int(by))
    }

    /// Specialize `n` to a rational number.
    pub fn at_outer(&self, n: &Rational) -> Result<RatFun> {
        let eval = |p: &DensePoly<RatFun>| -> Result<DensePoly<Rational>> {
            Ok(DensePoly::new(
                p.coeffs().iter().map(|c| c.eval(n)).collect::<Result<Vec<_>>>()?,
            ))
        };
        let den = eval(&self.den)?;
        if den.is_zero() {
            return Err(Error::Pole(format!("n = {n}")));
        }
        Ok(Frac::new(eval(&self.num)?, den))
    }

    pub fn eval2(&self, n: &Rational, k: &Rational) -> Result<Rational> {
        // substitute k first so cancellations at special n are not lost
        let num = self.num.eval(&RatFun::constant(k.clone()));
        let den = self.den.eval(&RatFun::constant(k.clone()));
        let d = den.eval(n)?;
        if d.is_zero() {
            return Err(Error::Pole(format!("(n, k) = ({n}, {k})")));
        }
        Ok(num.eval(n)? / d)
    }

    /// Embed a rational function of `n` as a constant in `k`.
    pub fn outer_constant(f: RatFun) -> Self {
        Self::constant(f)
    }

    /// `f(alpha*n + beta*k + gamma)` for a univariate `f`.
    pub fn compose_affine(f: &RatFun, alpha: i64, beta: i64, gamma: i64) -> Self {
        let inner = DensePoly::linear(
            RatFun::from_i64(beta),
            RatFun::from_poly(DensePoly::from_i64s(&[gamma, alpha])),
        );
        let sub = |p: &DensePoly<Rational>| -> DensePoly<RatFun> {
            p.coeffs().iter().rev().fold(DensePoly::zero(), |acc, c| {
                &(&acc * &inner) + &DensePoly::constant(RatFun::constant(c.clone()))
            })
        };
        Frac::new(sub(f.num()), sub(f.den()))
    }
}

impl<F: Field> Zero for Frac<F> {
    fn zero() -> Self {
        Self::zero_frac()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl<F: Field> One for Frac<F> {
    fn one() -> Self {
        Self::constant(F::one())
    }
}

impl<F: Field> std::ops::Add for Frac<F> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Field::plus(&self, &rhs)
    }
}

impl<F: Field> std::ops::Mul for Frac<F> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Field::times(&self, &rhs)
    }
}

impl<F: Field> std::ops::Add for &Frac<F> {
    type Output = Frac<F>;
    fn add(self, rhs: Self) -> Frac<F> {
        self.plus(rhs)
    }
}

impl<F: Field> std::ops::Sub for &Frac<F> {
    type Output = Frac<F>;
    fn sub(self, rhs: Self) -> Frac<F> {
        self.minus(rhs)
    }
}

impl<F: Field> std::ops::Mul for &Frac<F> {
    type Output = Frac<F>;
    fn mul(self, rhs: Self) -> Frac<F> {
        self.times(rhs)
    }
}

impl<F: Field> std::ops::Neg for &Frac<F> {
    type Output = Frac<F>;
    fn neg(self) -> Frac<F> {
        self.negated()
    }
}

impl<F: Field> Field for Frac<F> {
    fn plus(&self, other: &Self) -> Self {
        if self.den == other.den {
            return Self::new(&self.num + &other.num, self.den.clone());
        }
        Self::new(
            &(&self.num * &other.den) + &(&other.num * &self.den),
            &self.den * &other.den,
        )
    }
    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negated())
    }
    fn times(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero_frac();
        }
        Self::new(&self.num * &other.num, &self.den * &other.den)
    }
    fn negated(&self) -> Self {
        Self {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero rational function");
        Self::new(self.den.clone(), self.num.clone())
    }
    fn from_rational(q: &Rational) -> Self {
        Self::constant(F::from_rational(q))
    }
    fn cost(&self) -> u64 {
        let c = |p: &DensePoly<F>| p.coeffs().iter().map(|x| x.cost() + 1).sum::<u64>();
        c(&self.num) + c(&self.den)
    }
    fn as_rational(&self) -> Option<Rational> {
        if self.num.is_zero() {
            return Some(Rational::zero());
        }
        if self.num.is_constant() && self.den.is_constant() {
            let q = self.num.lc().as_rational()? / self.den.lc().as_rational()?;
            return Some(q);
        }
        None
    }
    fn specialize(&self, point: i64) -> Option<Rational> {
        let at = |p: &DensePoly<F>| -> Option<Rational> {
            let x = Rational::from_integer(point.into());
            p.coeffs()
                .iter()
                .rev()
                .try_fold(Rational::zero(), |acc, c| Some(acc * &x + c.specialize(point)?))
        };
        let d = at(&self.den)?;
        if d.is_zero() {
            return None;
        }
        Some(at(&self.num)? / d)
    }
    fn poly_gcd(a: &DensePoly<Self>, b: &DensePoly<Self>) -> Option<DensePoly<Self>> {
        F::frac_poly_gcd(a, b)
    }
    fn poly_var() -> &'static str {
        if F::poly_var() == "n" {
            "k"
        } else {
            "z"
        }
    }
}

impl<F: Field> fmt::Display for Frac<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let var = if F::poly_var() == "n" { "n" } else { "k" };
        if self.den.is_one_poly() {
            return f.write_str(&self.num.to_string_in(var));
        }
        write!(f, "{}", self.to_string_in(var))
    }
}

impl<F: Field> fmt::Debug for Frac<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Frac({self})")
    }
}

impl<F: Field> DensePoly<F> {
    fn is_one_poly(&self) -> bool {
        self.is_constant() && self.lc().is_one()
    }
}

impl From<DensePoly<Rational>> for RatFun {
    fn from(p: DensePoly<Rational>) -> Self {
        Self::from_poly(p)
    }
}

impl RatFun {
    pub fn from_integer(v: i64) -> Self {
        Self::constant(Rational::from_integer(v.into()))
    }

    pub fn is_one_frac(&self) -> bool {
        self.num.is_constant() && self.num.lc().is_one() && self.den.is_constant()
    }
}

/// Coefficients in `k` of a polynomial over `Q[n]`.
type IntegralRow = Vec<DensePoly<Rational>>;

fn clear_denominators(p: &DensePoly<RatFun>) -> IntegralRow {
    let common = p.coeffs().iter().fold(DensePoly::one(), |acc: DensePoly<Rational>, c| {
        let g = DensePoly::gcd(&acc, c.den());
        &acc * &c.den().exact_div(&g).expect("gcd divides")
    });
    p.coeffs()
        .iter()
        .map(|c| c.num() * &common.exact_div(c.den()).expect("lcm multiple"))
        .collect()
}

fn primitive_row(row: &[DensePoly<Rational>]) -> IntegralRow {
    let content = row.iter().fold(DensePoly::zero(), |acc, c| DensePoly::gcd(&acc, c));
    row.iter()
        .map(|c| c.exact_div(&content).expect("content divides"))
        .collect()
}

fn trim_row(row: &mut IntegralRow) {
    while row.last().is_some_and(DensePoly::is_zero) {
        row.pop();
    }
}

fn pseudo_rem(a: &[DensePoly<Rational>], b: &[DensePoly<Rational>]) -> IntegralRow {
    let lb = b.last().expect("nonzero divisor");
    let mut r = a.to_vec();
    trim_row(&mut r);
    while r.len() >= b.len() {
        let lr = r.last().expect("nonempty").clone();
        let shift = r.len() - b.len();
        for c in r.iter_mut() {
            *c = &*c * lb;
        }
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] = &r[shift + j] - &(&lr * bj);
        }
        trim_row(&mut r);
    }
    r
}

/// Monic gcd in `Q(n)[k]`.
///
/// A specialization `n -> n0` that keeps both leading coefficients nonzero
/// cannot lose a common factor, so a trivial gcd there proves coprimality.
/// Otherwise a primitive pseudo-remainder sequence over `Q[n]` avoids the
/// coefficient swell of Euclid over `Q(n)`.
pub(crate) fn gcd_over_qn(a: &DensePoly<RatFun>, b: &DensePoly<RatFun>) -> DensePoly<RatFun> {
    if a.is_zero() || b.is_zero() {
        return if a.is_zero() { b.monic() } else { a.monic() };
    }
    if a.deg() == 0 || b.deg() == 0 {
        return DensePoly::one();
    }
    let ra = clear_denominators(a);
    let rb = clear_denominators(b);
    let at = |row: &IntegralRow, n0: &Rational| DensePoly::new(row.iter().map(|c| c.eval(n0)).collect());
    let probe = (0..32i64)
        .map(|i| Rational::from_integer((3 + 5 * i).into()))
        .find(|n0| !ra.last().expect("nonzero").eval(n0).is_zero() && !rb.last().expect("nonzero").eval(n0).is_zero());
    if let Some(n0) = probe {
        if DensePoly::gcd(&at(&ra, &n0), &at(&rb, &n0)).deg() == 0 {
            return DensePoly::one();
        }
    }
    let (mut x, mut y) = (primitive_row(&ra), primitive_row(&rb));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    loop {
        let r = pseudo_rem(&x, &y);
        if r.is_empty() {
            break;
        }
        x = std::mem::replace(&mut y, primitive_row(&r));
    }
    DensePoly::new(y.into_iter().map(RatFun::from_poly).collect()).monic()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::poly::Poly;
    use crate::arith::rational::{int, rat};
    use num_traits::One;

    fn p(cs: &[i64]) -> Poly {
        Poly::from_ints(cs)
    }

    #[test]
    fn normalizes_to_lowest_terms() {
        // (2n^2 - 2) / (4n - 4) = (n + 1)/2
        let f = RatFun::new(p(&[-2, 0, 2]), p(&[-4, 4]));
        assert!(f.is_polynomial());
        assert_eq!(f.num(), &Poly::new(vec![rat(1, 2), rat(1, 2)]));
        assert_eq!(f.den(), &p(&[1]));
    }

    #[test]
    fn eval_and_pole() {
        let f = RatFun::new(p(&[1]), p(&[-3, 1]));
        assert!(matches!(f.eval(&int(3)), Err(Error::Pole(_))));
        assert_eq!(f.eval(&int(4)).unwrap(), int(1));
        let c = RatFun::constant(rat(5, 27));
        assert_eq!(c.eval(&int(11)).unwrap(), rat(5, 27));
    }

    #[test]
    fn field_ops() {
        let a = RatFun::new(p(&[1]), p(&[0, 1]));
        let b = RatFun::new(p(&[1]), p(&[1, 1]));
        // 1/n - 1/(n+1) = 1/(n(n+1))
        assert_eq!(a.minus(&b), RatFun::new(p(&[1]), p(&[0, 1, 1])));
        assert_eq!(a.times(&a.inv()), RatFun::one());
        assert_eq!(a.derivative(), RatFun::new(p(&[-1]), p(&[0, 0, 1])));
        assert_eq!(a.limit_at_infinity(), Some(int(0)));
    }

    #[test]
    fn bivariate_shifts() {
        // n - k as a rational function in k over Q(n)
        let f = RatFun2::compose_affine(&RatFun::var(), 1, -1, 0);
        let g = f.shift_outer(1).minus(&f.shift_int(-1));
        assert!(g.is_zero());
        assert_eq!(f.eval2(&int(7), &int(2)).unwrap(), int(5));
    }

    #[test]
    fn printing_clears_denominators() {
        let f = RatFun::new(Poly::new(vec![rat(1, 3)]), p(&[2, 1]));
        assert_eq!(f.to_string_in_var("n"), "(1)/(3*n + 6)");
        let g = RatFun::new(p(&[0, 10]), p(&[5, 3]));
        assert_eq!(g.to_string_in_var("n"), "(10*n)/(3*n + 5)");
    }
}
