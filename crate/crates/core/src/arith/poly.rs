use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{divisors, lcm_of_denominators, Rational};
use super::Field;

/// Dense univariate polynomial; `coeffs[i]` is the coefficient of `var^i`.
///
/// Never stores a trailing zero, so the zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DensePoly<F> {
    coeffs: Vec<F>,
}

/// Polynomial with rational coefficients.
pub type Poly = DensePoly<Rational>;

impl<F: Field> DensePoly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Self::new(vec![c])
    }

    /// `c * var^d`
    pub fn monomial(c: F, d: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![F::zero(); d + 1];
        coeffs[d] = c;
        Self { coeffs }
    }

    /// The polynomial `var`.
    pub fn var() -> Self {
        Self::monomial(F::one(), 1)
    }

    /// `a * var + b`
    pub fn linear(a: F, b: F) -> Self {
        Self::new(vec![b, a])
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| F::from_i64(c)).collect())
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the convention deg(0) = -1.
    pub fn deg(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn coeff(&self, i: usize) -> F {
        self.coeffs.get(i).cloned().unwrap_or_else(F::zero)
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn lc(&self) -> F {
        self.coeffs.last().cloned().unwrap_or_else(F::zero)
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|a| a.times(c)).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let inv = self.lc().inv();
        self.scale(&inv)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Quotient and remainder; panics when dividing by zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let lc_inv = divisor.lc().inv();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![F::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = rem[i + dd].times(&lc_inv);
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].minus(&c.times(d));
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    /// Division that must be exact; `None` when a remainder is left.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        if let Some(g) = F::poly_gcd(a, b) {
            return g;
        }
        let mut a = a.clone();
        let mut b = b.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Returns `(g, s, t)` with `s*a + t*b = g`, `g` monic.
    pub fn ext_gcd(a: &Self, b: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = r0.lc().inv();
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    pub fn eval(&self, at: &F) -> F {
        self.coeffs.iter().rev().fold(F::zero(), |acc, c| acc.times(at).plus(c))
    }

    /// Substitute `var -> alpha * var + beta`.
    pub fn compose_linear(&self, alpha: &F, beta: &F) -> Self {
        let lin = Self::linear(alpha.clone(), beta.clone());
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * &lin) + &Self::constant(c.clone()))
    }

    /// `p(var + by)`.
    pub fn shift(&self, by: &F) -> Self {
        self.compose_linear(&F::one(), by)
    }

    pub fn shift_int(&self, by: i64) -> Self {
        self.shift(&F::from_i64(by))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.times(&F::from_i64(i as i64)))
                .collect(),
        )
    }

    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> DensePoly<G> {
        DensePoly::new(self.coeffs.iter().map(f).collect())
    }

    /// `p / gcd(p, p')`, monic.
    pub fn squarefree_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let g = Self::gcd(self, &self.derivative());
        self.exact_div(&g).expect("gcd divides").monic()
    }

    /// Resultant by the Euclidean remainder sequence.
    pub fn resultant(a: &Self, b: &Self) -> F {
        if a.is_zero() || b.is_zero() {
            return F::zero();
        }
        let (m, n) = (a.deg(), b.deg());
        if n == 0 {
            return pow_field(&b.lc(), m as u32);
        }
        if m < n {
            let r = Self::resultant(b, a);
            return if (m * n) % 2 == 1 { r.negated() } else { r };
        }
        let r = a.rem(b);
        if r.is_zero() {
            return F::zero();
        }
        // res(a, b) = (-1)^(mn) lc(b)^(m - deg r) res(b, r)
        let factor = pow_field(&b.lc(), (m - r.deg()) as u32);
        let sub = Self::resultant(b, &r).times(&factor);
        if (m * n) % 2 == 1 {
            sub.negated()
        } else {
            sub
        }
    }

    /// Formats with the given variable name in the expression grammar.
    pub fn to_string_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match d {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{d}"),
            };
            write_term(&mut out, c, &mono);
        }
        out
    }
}

pub(crate) fn pow_field<F: Field>(base: &F, e: u32) -> F {
    let mut r = F::one();
    for _ in 0..e {
        r = r.times(base);
    }
    r
}

/// Appends `coeff * mono` to a sum being printed.
pub(crate) fn write_term<F: Field>(out: &mut String, coeff: &F, mono: &str) {
    let first = out.is_empty();
    let (negative, body) = match coeff.as_rational() {
        Some(q) => {
            let neg = q.is_negative();
            let mag = q.abs();
            let body = if mono.is_empty() {
                mag.to_string()
            } else if mag.is_one() {
                mono.to_string()
            } else {
                format!("{mag}*{mono}")
            };
            (neg, body)
        }
        None => {
            let c = format!("({coeff})");
            let body = if mono.is_empty() { c } else { format!("{c}*{mono}") };
            (false, body)
        }
    };
    match (first, negative) {
        (true, true) => out.push('-'),
        (true, false) => {}
        (false, true) => out.push_str(" - "),
        (false, false) => out.push_str(" + "),
    }
    out.push_str(&body);
}

impl Poly {
    /// Rational-coefficient poly from integers, lowest degree first.
    pub fn from_ints(cs: &[i64]) -> Self {
        Self::from_i64s(cs)
    }

    /// Product of linear factors `a*var + b`, times `scale`.
    pub fn from_linear_factors(scale: i64, factors: &[(i64, i64)]) -> Self {
        factors.iter().fold(Self::from_ints(&[scale]), |acc, &(a, b)| {
            &acc * &Self::from_ints(&[b, a])
        })
    }

    /// Integer coefficient vector proportional to `self`, with content 1 and
    /// positive leading coefficient. Empty for zero.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let l = lcm_of_denominators(self.coeffs());
        let ints: Vec<BigInt> = self
            .coeffs()
            .iter()
            .map(|c| (c * Rational::from_integer(l.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        let sign = if ints.last().unwrap().is_negative() { -1 } else { 1 };
        ints.into_iter().map(|c| c / &g * sign).collect()
    }

    /// `self` scaled to primitive integer coefficients with positive leading coefficient.
    pub fn primitive(&self) -> Self {
        Self::new(
            self.primitive_integer()
                .into_iter()
                .map(Rational::from_integer)
                .collect(),
        )
    }

    /// All distinct rational roots, ascending, via the rational root test.
    pub fn rational_roots(&self) -> Vec<Rational> {
        let mut ints = self.primitive_integer();
        let mut roots = Vec::new();
        if ints.is_empty() {
            return roots;
        }
        if ints[0].is_zero() {
            roots.push(Rational::zero());
            let lead_zeros = ints.iter().take_while(|c| c.is_zero()).count();
            ints.drain(..lead_zeros);
        }
        if ints.len() > 1 {
            let p = Self::new(ints.iter().cloned().map(Rational::from_integer).collect());
            let num_divs = divisors(&ints[0]);
            let den_divs = divisors(ints.last().unwrap());
            for d in &den_divs {
                for nd in &num_divs {
                    for s in [1, -1] {
                        let cand = Rational::new(nd * s, d.clone());
                        if p.eval(&cand).is_zero() && !roots.contains(&cand) {
                            roots.push(cand);
                        }
                    }
                }
            }
        }
        roots.sort();
        roots
    }

    /// Fujiwara upper bound on the modulus of every complex root.
    pub fn root_bound(&self) -> f64 {
        let n = match self.degree() {
            None | Some(0) => return 0.0,
            Some(n) => n,
        };
        let lc = super::rational::to_f64(&self.lc()).abs();
        let mut bound: f64 = 0.0;
        for i in 1..=n {
            let c = super::rational::to_f64(&self.coeff(n - i)).abs() / lc;
            let root = if i == n {
                (c / 2.0).powf(1.0 / i as f64)
            } else {
                c.powf(1.0 / i as f64)
            };
            bound = bound.max(root);
        }
        2.0 * bound * (1.0 + 1e-9) + 1e-9
    }

    /// Nonnegative integers `j` with `resultant(a(var), b(var + j)) = 0`,
    /// searched exhaustively below a root-modulus bound.
    pub fn nonneg_integer_shifts(a: &Self, b: &Self) -> Vec<i64> {
        if a.deg() < 1 || b.deg() < 1 {
            return Vec::new();
        }
        let bound = (a.root_bound() + b.root_bound()).ceil() as i64;
        (0..=bound)
            .filter(|&j| Self::resultant(a, &b.shift_int(j)).is_zero())
            .collect()
    }
}

impl<F: Field> fmt::Display for DensePoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in(F::poly_var()))
    }
}

impl<F: Field> fmt::Debug for DensePoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DensePoly({})", self.to_string_in(F::poly_var()))
    }
}

impl<F: Field> Add for &DensePoly<F> {
    type Output = DensePoly<F>;
    fn add(self, rhs: Self) -> DensePoly<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        DensePoly::new((0..n).map(|i| self.coeff(i).plus(&rhs.coeff(i))).collect())
    }
}

impl<F: Field> Sub for &DensePoly<F> {
    type Output = DensePoly<F>;
    fn sub(self, rhs: Self) -> DensePoly<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        DensePoly::new((0..n).map(|i| self.coeff(i).minus(&rhs.coeff(i))).collect())
    }
}

impl<F: Field> Mul for &DensePoly<F> {
    type Output = DensePoly<F>;
    fn mul(self, rhs: Self) -> DensePoly<F> {
        if self.is_zero() || rhs.is_zero() {
            return DensePoly::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].plus(&a.times(b));
            }
        }
        DensePoly::new(out)
    }
}

impl<F: Field> Neg for &DensePoly<F> {
    type Output = DensePoly<F>;
    fn neg(self) -> DensePoly<F> {
        DensePoly::new(self.coeffs.iter().map(|c| c.negated()).collect())
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl<F: Field> $tr for DensePoly<F> {
            type Output = DensePoly<F>;
            fn $m(self, rhs: Self) -> DensePoly<F> {
                (&self).$m(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl<F: Field> Neg for DensePoly<F> {
    type Output = DensePoly<F>;
    fn neg(self) -> DensePoly<F> {
        -&self
    }
}
