//! Truncated formal power series over Q.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::Rational;
use crate::error::{Error, Result};

/// `sum_{i <= order} c_i x^i + O(x^(order+1))`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Series {
    coeffs: Vec<Rational>,
}

impl Series {
    /// Pads or truncates `coeffs` to exactly `order + 1` entries.
    pub fn new(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        Self { coeffs }
    }

    pub fn from_ints(cs: &[i64], order: usize) -> Self {
        Self::new(cs.iter().map(|&c| Rational::from_integer(c.into())).collect(), order)
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![Rational::one()], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff_of(&self, n: usize) -> Result<&Rational> {
        self.coeffs.get(n).ok_or(Error::BeyondTruncation {
            index: n,
            order: self.order(),
        })
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(
            self.coeffs[..=order.min(self.order())].to_vec(),
            order.min(self.order()),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self {
            coeffs: (0..=order).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiply by `x^k`, keeping the truncation order.
    pub fn shift_up(&self, k: usize) -> Self {
        let order = self.order();
        let mut coeffs = vec![Rational::zero(); k.min(order + 1)];
        coeffs.extend(self.coeffs.iter().take(order + 1 - coeffs.len()).cloned());
        Self::new(coeffs, order)
    }

    /// Truncated Cauchy product. Integer-valued inputs take a big-integer
    /// path that skips per-term gcds.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let integral = |s: &Self| s.coeffs[..=order].iter().all(|c| c.is_integer());
        if integral(self) && integral(other) {
            let a: Vec<BigInt> = self.coeffs[..=order].iter().map(|c| c.to_integer()).collect();
            let b: Vec<BigInt> = other.coeffs[..=order].iter().map(|c| c.to_integer()).collect();
            let coeffs = (0..=order)
                .map(|n| {
                    let mut acc = BigInt::zero();
                    for i in 0..=n {
                        if a[i].is_zero() || b[n - i].is_zero() {
                            continue;
                        }
                        acc += &a[i] * &b[n - i];
                    }
                    Rational::from_integer(acc)
                })
                .collect();
            return Self { coeffs };
        }
        let coeffs = (0..=order)
            .map(|n| {
                (0..=n)
                    .filter(|&i| !self.coeffs[i].is_zero() && !other.coeffs[n - i].is_zero())
                    .map(|i| &self.coeffs[i] * &other.coeffs[n - i])
                    .sum()
            })
            .collect();
        Self { coeffs }
    }

    /// `self^r` by binary exponentiation; `r = 0` is rejected.
    pub fn pow(&self, r: u32) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidArgument("series power must be at least 1".into()));
        }
        let mut result: Option<Self> = None;
        let mut base = self.clone();
        let mut e = r;
        loop {
            if e & 1 == 1 {
                result = Some(match result {
                    None => base.clone(),
                    Some(acc) => acc.mul(&base),
                });
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            base = base.mul(&base);
        }
        Ok(result.expect("r >= 1"))
    }

    /// All powers `self^1 ..= self^r` by repeated multiplication.
    pub fn powers(&self, r: u32) -> Vec<Self> {
        let mut out: Vec<Self> = Vec::with_capacity(r as usize);
        for i in 0..r {
            let next = if i == 0 {
                self.clone()
            } else {
                out[i as usize - 1].mul(self)
            };
            out.push(next);
        }
        out
    }

    pub fn derivative(&self) -> Self {
        let order = self.order().saturating_sub(1);
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rational::from_integer(i.into()))
            .collect();
        Self::new(coeffs, order)
    }

    /// Coefficients as strings, the machine-readable serialization.
    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let poly = crate::arith::Poly::new(self.coeffs.clone());
        write!(f, "{} + O(x^{})", poly.to_string_in("x"), self.order() + 1)
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series({self})")
    }
}
