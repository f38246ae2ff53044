//! Gosper's algorithm and Zeilberger's creative telescoping.
//!
//! Terms are described only by their shift ratios. A univariate term `t(k)`
//! carries `t(k+1)/t(k)`; a bivariate term `F(n, k)` carries both
//! `F(n+1,k)/F(n,k)` and `F(n,k+1)/F(n,k)` as rational functions in `k`
//! over `Q(n)`.
//!
//! Both algorithms share one Gosper core written against [`Field`], so the
//! same code runs over `Q` (plain Gosper) and over `Q(n)` (Zeilberger).

use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::{solve_over_field, DensePoly, Field, Frac, Poly, RatFun, RatFun2, Rational};
use crate::error::{Error, Result};
use crate::holonomic::{Recurrence, ResidualReport};

/// Univariate hypergeometric term given by `ratio = t(k+1)/t(k)`.
#[derive(Debug, Clone, PartialEq)]
pub struct HyperTerm1 {
    ratio: RatFun,
}

impl HyperTerm1 {
    pub fn new(ratio: RatFun) -> Result<Self> {
        if ratio.is_zero() {
            return Err(Error::InvalidArgument("zero term ratio".into()));
        }
        Ok(Self { ratio })
    }

    pub fn ratio(&self) -> &RatFun {
        &self.ratio
    }
}

/// Where `F(n, k)` may be nonzero, for the numeric summation check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Support {
    /// `F(n, k) = 0` unless `lower <= k <= n + upper_offset`.
    Window { lower: i64, upper_offset: i64 },
    /// `F(n, k) = 0` for `k < lower`; above it the term must terminate on
    /// its own, through a zero of the numerator of the `k` ratio.
    Natural { lower: i64 },
}

impl Support {
    fn lower(&self) -> i64 {
        match *self {
            Support::Window { lower, .. } | Support::Natural { lower } => lower,
        }
    }
}

/// Bivariate hypergeometric term.
#[derive(Debug, Clone, PartialEq)]
pub struct HyperTerm2 {
    ratio_n: RatFun2,
    ratio_k: RatFun2,
    support: Support,
    /// `(n0, F(n0, lower))`, the value that numeric summation starts from.
    anchor: (i64, Rational),
}

impl HyperTerm2 {
    /// Rejects ratio pairs that do not commute:
    /// `ratio_n(n,k+1) ratio_k(n,k) = ratio_k(n+1,k) ratio_n(n,k)`.
    pub fn new(ratio_n: RatFun2, ratio_k: RatFun2, support: Support, anchor: (i64, Rational)) -> Result<Self> {
        if ratio_n.is_zero() || ratio_k.is_zero() {
            return Err(Error::InvalidArgument("zero shift ratio".into()));
        }
        let lhs = &ratio_n.shift_int(1) * &ratio_k;
        let rhs = &ratio_k.shift_outer(1) * &ratio_n;
        if lhs != rhs {
            return Err(Error::InvalidArgument(
                "shift ratios are not compatible (n and k shifts do not commute)".into(),
            ));
        }
        Ok(Self {
            ratio_n,
            ratio_k,
            support,
            anchor,
        })
    }

    pub fn ratio_n(&self) -> &RatFun2 {
        &self.ratio_n
    }

    pub fn ratio_k(&self) -> &RatFun2 {
        &self.ratio_k
    }

    pub fn support(&self) -> Support {
        self.support
    }

    /// `F(n+i, k) / F(n, k)` for `i = 0..=order`.
    fn n_shift_quotients(&self, order: usize) -> Vec<RatFun2> {
        let mut out = vec![RatFun2::one()];
        for i in 0..order {
            let next = &out[i] * &self.ratio_n.shift_outer(i as i64);
            out.push(next);
        }
        out
    }
}

/// Telescoping certificate: `sum_i p_i(n) F(n+i,k) = G(n,k+1) - G(n,k)`
/// with `G = R F`.
#[derive(Debug, Clone, PartialEq)]
pub struct Certificate {
    pub r: RatFun2,
    pub operator: Recurrence,
}

impl Serialize for Certificate {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Certificate", 2)?;
        st.serialize_field("R", &self.r.to_string())?;
        st.serialize_field("operator", &self.operator)?;
        st.end()
    }
}

/// Antidifference certificate: `R(k+1) ratio(k) - R(k) = 1`, i.e.
/// `G = R t` satisfies `G(k+1) - G(k) = t(k)`. `None` when `t` has no
/// hypergeometric antidifference.
pub fn gosper(term: &HyperTerm1) -> Option<RatFun> {
    let (a, b, c) = normal_form(term.ratio.num(), term.ratio.den());
    let b1 = b.shift_int(-1);
    let d = degree_bound(&a, &b1, c.deg())?;
    let (matrix, rows) = gosper_columns(&a, &b1, d);
    let rhs: Vec<Rational> = (0..rows).map(|m| c.coeff(m)).collect();
    let (x, _) = solve_over_field(&matrix, d + 1, Some(&rhs))?;
    let x = DensePoly::new(x);
    Some(Frac::new(&b1 * &x, c))
}

/// Lowest-order telescoper with `1 <= order <= max_order`.
pub fn zeilberger(term: &HyperTerm2, max_order: usize) -> Option<Certificate> {
    (1..=max_order).find_map(|order| zeilberger_at(term, order))
}

fn zeilberger_at(term: &HyperTerm2, order: usize) -> Option<Certificate> {
    let quotients = term.n_shift_quotients(order);
    let den = quotients
        .iter()
        .fold(DensePoly::<RatFun>::one(), |acc, q| lcm(&acc, q.den()));
    let nums: Vec<DensePoly<RatFun>> = quotients
        .iter()
        .map(|q| &q.num().clone() * &den.exact_div(q.den()).expect("lcm multiple"))
        .collect();

    // k-ratio of F(n,k)/Den(k), the part of the summand that is free of p
    let r0 = &term.ratio_k * &Frac::new(den.clone(), den.shift_int(1));
    let (a, b, c0) = normal_form(r0.num(), r0.den());
    let b1 = b.shift_int(-1);
    let max_num = nums.iter().map(DensePoly::deg).max().unwrap_or(0);
    let d = degree_bound(&a, &b1, c0.deg() + max_num)?;

    let (mut matrix, x_rows) = gosper_columns(&a, &b1, d);
    let p_cols: Vec<DensePoly<RatFun>> = nums.iter().map(|p| -(&c0 * p)).collect();
    let rows = x_rows.max(p_cols.iter().map(|p| p.coeffs().len()).max().unwrap_or(0));
    matrix.resize(rows, vec![RatFun::zero(); d + 1]);
    for (m, row) in matrix.iter_mut().enumerate() {
        row.extend(p_cols.iter().map(|p| p.coeff(m)));
    }
    let (_, kernel) = solve_over_field(&matrix, d + 1 + order + 1, None)?;
    let sol = kernel.into_iter().find(|v| {
        let p = &v[d + 1..];
        !p[0].is_zero() && !p[order].is_zero()
    })?;

    let x = DensePoly::new(sol[..=d].to_vec());
    let p: Vec<RatFun> = sol[d + 1..].to_vec();
    let r = Frac::new(&b1 * &x, &c0 * &den);

    let (operator, scale) = normalize_operator(&p);
    let cert = Certificate {
        r: &r * &RatFun2::constant(scale),
        operator,
    };
    debug_assert!(verify_certificate(term, &cert));
    Some(cert)
}

/// Clears denominators of `p_i(n)` and normalizes the resulting operator;
/// returns it with the factor `lambda(n)` such that new `p = lambda * p`.
fn normalize_operator(p: &[RatFun]) -> (Recurrence, RatFun) {
    let common = p.iter().fold(Poly::one(), |acc, c| poly_lcm(&acc, c.den()));
    let polys: Vec<Poly> = p
        .iter()
        .map(|c| &c.num().clone() * &common.exact_div(c.den()).expect("lcm multiple"))
        .collect();
    let rec = Recurrence::new(polys, 0);
    let lead = p.last().expect("nonempty operator");
    let new_lead = RatFun::from_poly(rec.coeffs().last().expect("nonempty").clone());
    let scale = new_lead.over(lead);
    (rec, scale)
}

/// Symbolic check of the telescoping identity divided by `F(n, k)`:
/// `sum_i p_i(n) F(n+i,k)/F(n,k) - (R(n,k+1) ratio_k(n,k) - R(n,k)) = 0`.
pub fn verify_certificate(term: &HyperTerm2, cert: &Certificate) -> bool {
    let order = cert.operator.order();
    let quotients = term.n_shift_quotients(order);
    let lhs = cert
        .operator
        .coeffs()
        .iter()
        .zip(&quotients)
        .fold(RatFun2::zero(), |acc, (p, q)| {
            &acc + &(&RatFun2::constant(RatFun::from_poly(p.clone())) * q)
        });
    let rhs = &(&cert.r.shift_int(1) * &term.ratio_k) - &cert.r;
    (&lhs - &rhs).is_zero()
}

/// Exact definite sums `S(n) = sum_k F(n, k)` over the declared support,
/// for `n` in `from..=to`.
pub fn definite_sums(term: &HyperTerm2, from: i64, to: i64) -> Result<Vec<Rational>> {
    let lower = term.support.lower();
    let (n0, ref v0) = term.anchor;
    let mut out = Vec::new();
    let mut start = v0.clone();
    let mut start_n = n0;
    for n in from..=to {
        let Some(upper) = upper_limit(term, n)? else {
            out.push(Rational::zero());
            continue;
        };
        if upper < lower {
            out.push(Rational::zero());
            continue;
        }
        if n < n0 {
            return Err(Error::InvalidArgument(format!(
                "term values are anchored at n = {n0}; cannot sum at n = {n}"
            )));
        }
        while start_n < n {
            let step = term.ratio_n.eval2(&int_q(start_n), &int_q(lower))?;
            start *= step;
            start_n += 1;
        }
        let rk = term.ratio_k.at_outer(&int_q(n))?;
        let mut f = start.clone();
        let mut total = Rational::zero();
        for k in lower..=upper {
            total += &f;
            if k < upper {
                f *= rk.eval(&int_q(k))?;
            }
        }
        out.push(total);
    }
    Ok(out)
}

/// Top of the summation range at `n`; `None` when the row is empty.
fn upper_limit(term: &HyperTerm2, n: i64) -> Result<Option<i64>> {
    let lower = term.support.lower();
    match term.support {
        Support::Window { upper_offset, .. } => Ok(Some(n + upper_offset).filter(|&u| u >= lower)),
        Support::Natural { .. } => {
            let num = term.ratio_k.at_outer(&int_q(n))?.num().clone();
            num.rational_roots()
                .into_iter()
                .filter(|q| q.is_integer())
                .map(|q| q.to_integer())
                .filter_map(|z| i64::try_from(z).ok())
                .filter(|&z| z >= lower)
                .min()
                .map(Some)
                .ok_or(Error::InfiniteSupport)
        }
    }
}

/// Applies `operator` to the exact sums `S(n)` for `n` in `from..=to`.
pub fn numeric_sum_check(term: &HyperTerm2, operator: &Recurrence, from: i64, to: i64) -> Result<ResidualReport> {
    let d = operator.order() as i64;
    let sums = definite_sums(term, from, to + d)?;
    let first_failure = (from..=to).find(|&n| {
        !operator
            .residual_with(n, |i| sums[(i - from) as usize].clone())
            .is_zero()
    });
    Ok(ResidualReport {
        checked_from: from,
        checked_to: to,
        first_failure,
    })
}

fn int_q(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

fn lcm<F: Field>(a: &DensePoly<F>, b: &DensePoly<F>) -> DensePoly<F> {
    let g = DensePoly::gcd(a, b);
    (a * &b.exact_div(&g).expect("gcd divides")).monic()
}

fn poly_lcm(a: &Poly, b: &Poly) -> Poly {
    lcm(a, b)
}

/// Nonnegative integers `h` with `gcd(a(k), b(k+h))` nonconstant.
///
/// Candidates come from an integer specialization of the coefficient
/// field; each is then confirmed by an exact gcd.
fn dispersion_set<F: Field>(a: &DensePoly<F>, b: &DensePoly<F>) -> Vec<i64> {
    if a.deg() < 1 || b.deg() < 1 {
        return Vec::new();
    }
    let specialize = |p: &DensePoly<F>, at: i64| -> Option<Poly> {
        let cs = p
            .coeffs()
            .iter()
            .map(|c| c.specialize(at))
            .collect::<Option<Vec<_>>>()?;
        let q = Poly::new(cs);
        (q.deg() == p.deg()).then_some(q)
    };
    let candidates = (0..64)
        .map(|i| 11 + 7 * i)
        .find_map(|at| Some((specialize(a, at)?, specialize(b, at)?)))
        .map(|(sa, sb)| Poly::nonneg_integer_shifts(&sa, &sb))
        .unwrap_or_default();
    candidates
        .into_iter()
        .filter(|&h| DensePoly::gcd(a, &b.shift_int(h)).deg() > 0)
        .collect()
}

/// Gosper normal form `ratio = a(k)/b(k) * c(k+1)/c(k)` with
/// `gcd(a(k), b(k+h)) = 1` for every `h >= 0`.
fn normal_form<F: Field>(num: &DensePoly<F>, den: &DensePoly<F>) -> (DensePoly<F>, DensePoly<F>, DensePoly<F>) {
    let scale = num.lc().over(&den.lc());
    let mut a = num.monic();
    let mut b = den.monic();
    let mut c = DensePoly::one();
    for h in dispersion_set(&a, &b) {
        loop {
            let g = DensePoly::gcd(&a, &b.shift_int(h));
            if g.deg() < 1 {
                break;
            }
            a = a.exact_div(&g).expect("gcd divides");
            b = b.exact_div(&g.shift_int(-h)).expect("shifted gcd divides");
            for i in 1..=h {
                c = &c * &g.shift_int(-i);
            }
        }
    }
    (a.scale(&scale), b, c)
}

/// Degree bound for polynomial solutions `x` of
/// `a(k) x(k+1) - b1(k) x(k) = c(k)`, where `deg c = dc`.
fn degree_bound<F: Field>(a: &DensePoly<F>, b1: &DensePoly<F>, dc: i64) -> Option<usize> {
    let (da, db) = (a.deg(), b1.deg());
    let bound = if da != db || a.lc() != b1.lc() {
        dc - da.max(db)
    } else {
        let d = da;
        let generic = dc - d + 1;
        let top = |p: &DensePoly<F>| if d >= 1 { p.coeff(d as usize - 1) } else { F::zero() };
        let special = top(b1)
            .minus(&top(a))
            .over(&a.lc())
            .as_rational()
            .filter(|q| q.is_integer() && *q >= Rational::zero())
            .and_then(|q| i64::try_from(q.to_integer()).ok());
        special.map_or(generic, |s| generic.max(s))
    };
    usize::try_from(bound).ok()
}

/// Columns `a(k)(k+1)^j - b1(k) k^j` for `j = 0..=d`, laid out as a dense
/// row-major matrix over the coefficients of `k^m`.
fn gosper_columns<F: Field>(a: &DensePoly<F>, b1: &DensePoly<F>, d: usize) -> (Vec<Vec<F>>, usize) {
    let k = DensePoly::<F>::var();
    let k1 = DensePoly::linear(F::one(), F::one());
    let cols: Vec<DensePoly<F>> = (0..=d)
        .map(|j| &(a * &k1.pow(j as u32)) - &(b1 * &k.pow(j as u32)))
        .collect();
    let rows = cols.iter().map(|c| c.coeffs().len()).max().unwrap_or(0).max(1);
    let matrix = (0..rows).map(|m| cols.iter().map(|c| c.coeff(m)).collect()).collect();
    (matrix, rows)
}
