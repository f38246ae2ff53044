//! Guessing by exact linear algebra: P-recursive recurrences, rational
//! functions of `n`, and algebraic equations for power series.
//!
//! Every engine fits on a leading window, then checks the fitted object
//! against all supplied data. A candidate that fails the held-out data is
//! discarded, so a returned object always agrees with every input value.

use num_traits::Zero;
use serde::Serialize;

use crate::arith::{nullspace, BiPoly, Poly, RatFun, Rational};
use crate::holonomic::Recurrence;
use crate::series::Series;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GuessConfig {
    pub max_order: usize,
    pub max_poly_degree: usize,
    /// Extra equations beyond the unknown count required in the fit window.
    pub overdetermination_margin: usize,
    /// Trailing data points kept out of the fit and used only for checking.
    pub holdout: usize,
}

impl Default for GuessConfig {
    fn default() -> Self {
        Self {
            max_order: 4,
            max_poly_degree: 12,
            overdetermination_margin: 10,
            holdout: 20,
        }
    }
}

impl GuessConfig {
    pub fn with_bounds(max_order: usize, max_poly_degree: usize) -> Self {
        Self {
            max_order,
            max_poly_degree,
            ..Self::default()
        }
    }

    fn margin(&self) -> usize {
        self.overdetermination_margin.max(1)
    }
}

fn pow_i(n: i64, e: usize) -> Rational {
    Rational::from_integer(num_traits::pow(num_bigint::BigInt::from(n), e))
}

/// Smallest recurrence `sum_i p_i(n) a(n+i) = 0` with `deg p_i <= degree`,
/// searched by increasing `order + degree`, then by order.
///
/// `seq[i]` holds `a(offset + i)`; the result is valid from `offset`.
pub fn guess_recurrence(seq: &[Rational], offset: i64, cfg: &GuessConfig) -> Option<Recurrence> {
    if seq.iter().all(Zero::is_zero) {
        return None;
    }
    for total in 1..=cfg.max_order + cfg.max_poly_degree {
        for order in 1..=total.min(cfg.max_order) {
            let degree = total - order;
            if degree > cfg.max_poly_degree {
                continue;
            }
            if let Some(rec) = fit_recurrence(seq, offset, order, degree, cfg) {
                return Some(rec);
            }
        }
    }
    None
}

fn fit_recurrence(seq: &[Rational], offset: i64, order: usize, degree: usize, cfg: &GuessConfig) -> Option<Recurrence> {
    let unknowns = (order + 1) * (degree + 1);
    let equations = seq.len().checked_sub(order + cfg.holdout)?;
    if equations < unknowns + cfg.margin() {
        return None;
    }
    let rows: Vec<Vec<Rational>> = (0..equations)
        .map(|t| {
            let n = offset + t as i64;
            let mut row = Vec::with_capacity(unknowns);
            for i in 0..=order {
                for e in 0..=degree {
                    row.push(pow_i(n, e) * &seq[t + i]);
                }
            }
            row
        })
        .collect();
    let kernel = nullspace(&rows, unknowns);
    let v = kernel.first()?;
    let coeffs: Vec<Poly> = (0..=order)
        .map(|i| Poly::new(v[i * (degree + 1)..(i + 1) * (degree + 1)].to_vec()))
        .collect();
    if coeffs.iter().all(Poly::is_zero) {
        return None;
    }
    let rec = Recurrence::new(coeffs, offset);
    annihilates(&rec, seq, offset).then_some(rec)
}

fn annihilates(rec: &Recurrence, seq: &[Rational], offset: i64) -> bool {
    let end = offset + seq.len() as i64 - rec.order() as i64;
    (rec.valid_from().max(offset)..end).all(|n| rec.residual_with(n, |i| seq[(i - offset) as usize].clone()).is_zero())
}

/// Minimal-degree `u(n)/v(n)` through the samples, both degrees bounded by
/// `cfg.max_poly_degree`.
pub fn guess_ratfun_of_n(samples: &[(i64, Rational)], cfg: &GuessConfig) -> Option<RatFun> {
    let fit_len = samples.len().checked_sub(cfg.holdout)?;
    for d in 0..=cfg.max_poly_degree {
        let unknowns = 2 * (d + 1);
        if fit_len < unknowns + cfg.margin() {
            break;
        }
        let rows: Vec<Vec<Rational>> = samples[..fit_len]
            .iter()
            .map(|(n, val)| {
                let powers: Vec<Rational> = (0..=d).map(|e| pow_i(*n, e)).collect();
                powers
                    .iter()
                    .cloned()
                    .chain(powers.iter().map(|p| -(p * val)))
                    .collect()
            })
            .collect();
        let kernel = nullspace(&rows, unknowns);
        let Some(v) = kernel.first() else { continue };
        let u = Poly::new(v[..=d].to_vec());
        let w = Poly::new(v[d + 1..].to_vec());
        if w.is_zero() {
            continue;
        }
        let fits_all = samples.iter().all(|(n, val)| {
            let nn = Rational::from_integer((*n).into());
            let wv = w.eval(&nn);
            !wv.is_zero() && u.eval(&nn) == val * wv
        });
        if fits_all {
            return Some(RatFun::new(u, w));
        }
    }
    None
}

/// Nonzero `P(x, y)` with `deg_x P <= deg_x`, `deg_y P <= deg_y` and
/// `P(x, series) = 0` to the full truncation order, in canonical form.
pub fn guess_algeq(series: &Series, deg_y: usize, deg_x: usize, cfg: &GuessConfig) -> Option<BiPoly> {
    let unknowns = (deg_x + 1) * (deg_y + 1);
    let order = series.order();
    let fit_top = order.checked_sub(cfg.holdout)?;
    if fit_top + 1 < unknowns + cfg.margin() {
        return None;
    }
    let mut powers = vec![Series::one(order)];
    for j in 1..=deg_y {
        powers.push(powers[j - 1].mul(series));
    }
    let coeff = |i: usize, j: usize, m: usize| -> Rational {
        if m < i {
            Rational::zero()
        } else {
            powers[j].coeffs()[m - i].clone()
        }
    };
    let rows: Vec<Vec<Rational>> = (0..=fit_top)
        .map(|m| {
            let mut row = Vec::with_capacity(unknowns);
            for j in 0..=deg_y {
                for i in 0..=deg_x {
                    row.push(coeff(i, j, m));
                }
            }
            row
        })
        .collect();
    let to_bipoly = |v: &[Rational]| {
        BiPoly::from_terms(
            (0..=deg_y).flat_map(|j| (0..=deg_x).map(move |i| ((i as u32, j as u32), v[j * (deg_x + 1) + i].clone()))),
        )
        .canonical()
    };
    let mut candidates: Vec<BiPoly> = nullspace(&rows, unknowns).iter().map(|v| to_bipoly(v)).collect();
    candidates.sort_by_key(|p| {
        let lm = p.leading_monomial().unwrap_or((0, 0));
        (p.support_size(), lm.0 + lm.1, lm.1, lm.0)
    });
    candidates.into_iter().find(|p| {
        (0..=order).all(|m| {
            p.terms()
                .map(|(&(i, j), c)| c * coeff(i as usize, j as usize, m))
                .sum::<Rational>()
                .is_zero()
        })
    })
}
