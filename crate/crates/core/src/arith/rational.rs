use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision fraction, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Combined bit length of numerator and denominator.
pub fn bit_size(q: &Rational) -> u64 {
    q.numer().bits() + q.denom().bits()
}

pub fn lcm_of_denominators<'a, I: IntoIterator<Item = &'a Rational>>(values: I) -> BigInt {
    values.into_iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

/// Positive divisors of `n` (sign ignored) by trial division. `divisors(0)` is empty.
pub fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut n = n.abs();
    if n.is_zero() {
        return Vec::new();
    }
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut p = BigInt::from(2u32);
    while &p * &p <= n {
        let mut e = 0;
        while (&n % &p).is_zero() {
            n /= &p;
            e += 1;
        }
        if e > 0 {
            factors.push((p.clone(), e));
        }
        p += if p == BigInt::from(2u32) { 1u32 } else { 2u32 };
    }
    if !n.is_one() {
        factors.push((n, 1));
    }
    let mut out = vec![BigInt::one()];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for d in &out {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        out = next;
    }
    out.sort();
    out
}

fn round_half_even(q: &Rational) -> BigInt {
    let floor = q.floor().to_integer();
    let frac = q - Rational::from_integer(floor.clone());
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    if frac > half || (frac == half && floor.is_odd()) {
        floor + 1
    } else {
        floor
    }
}

/// Decimal rendering with `significant` digits, rounding half to even.
pub fn render_decimal(q: &Rational, significant: usize) -> String {
    assert!(significant > 0, "need at least one significant digit");
    if q.is_zero() {
        return "0".to_string();
    }
    let a = q.abs();
    let ten = BigInt::from(10);
    let digits = |b: &BigInt| b.to_string().len() as i64;
    let mut e = digits(a.numer()) - digits(a.denom());
    let pow10 = |k: i64| -> Rational {
        let p = Rational::from_integer(num_traits::pow(ten.clone(), k.unsigned_abs() as usize));
        if k >= 0 {
            p
        } else {
            p.recip()
        }
    };
    while a < pow10(e) {
        e -= 1;
    }
    while a >= pow10(e + 1) {
        e += 1;
    }
    let sig = significant as i64;
    let mut m = round_half_even(&(&a * pow10(sig - 1 - e)));
    if m == num_traits::pow(ten.clone(), significant) {
        m /= &ten;
        e += 1;
    }
    let ds = m.to_string();
    let body = if e < 0 {
        format!("0.{}{}", "0".repeat((-e - 1) as usize), ds)
    } else if e >= sig - 1 {
        format!("{}{}", ds, "0".repeat((e - sig + 1) as usize))
    } else {
        let split = (e + 1) as usize;
        format!("{}.{}", &ds[..split], &ds[split..])
    };
    if q.is_negative() {
        format!("-{body}")
    } else {
        body
    }
}

pub(crate) fn to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}
