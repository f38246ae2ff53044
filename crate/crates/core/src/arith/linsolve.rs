use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::rational::{lcm_of_denominators, Rational};
use super::Field;
use crate::error::{Error, Result};

/// Right-hand side of a linear system.
#[derive(Debug, Clone, PartialEq)]
pub enum Rhs {
    Vector(Vec<Rational>),
    Homogeneous,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Solution {
    Inconsistent,
    /// `particular` is the zero vector for homogeneous systems. Nullspace
    /// vectors have a 1 in their own free coordinate and 0 in the others.
    Solved {
        particular: Vec<Rational>,
        nullspace: Vec<Vec<Rational>>,
    },
}

impl Solution {
    pub fn nullspace(&self) -> &[Vec<Rational>] {
        match self {
            Solution::Inconsistent => &[],
            Solution::Solved { nullspace, .. } => nullspace,
        }
    }
}

/// Exact solve over Q by fraction-free (Bareiss) elimination on the
/// integer-cleared system, followed by rational back substitution.
pub fn solve_linear_exact(matrix: &[Vec<Rational>], rhs: Rhs) -> Result<Solution> {
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, Vec::len);
    if matrix.iter().any(|r| r.len() != cols) {
        return Err(Error::Dimension("matrix rows have different lengths".into()));
    }
    let b = match &rhs {
        Rhs::Vector(v) => {
            if v.len() != rows {
                return Err(Error::Dimension(format!("{} rows but rhs of length {}", rows, v.len())));
            }
            Some(v)
        }
        Rhs::Homogeneous => None,
    };
    let width = cols + usize::from(b.is_some());
    let mut a: Vec<Vec<BigInt>> = (0..rows)
        .map(|i| {
            let mut row: Vec<&Rational> = matrix[i].iter().collect();
            if let Some(b) = b {
                row.push(&b[i]);
            }
            let l = lcm_of_denominators(row.iter().copied());
            let lr = Rational::from_integer(l);
            row.iter().map(|q| (*q * &lr).to_integer()).collect()
        })
        .collect();

    let mut pivots: Vec<usize> = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..width {
        if r == rows {
            break;
        }
        let best = (r..rows)
            .filter(|&i| !a[i][c].is_zero())
            .min_by_key(|&i| a[i][c].bits());
        let Some(p) = best else { continue };
        a.swap(r, p);
        let (top, bottom) = a.split_at_mut(r + 1);
        let prow = &top[r];
        let piv = &prow[c];
        for row in bottom.iter_mut() {
            let factor = std::mem::take(&mut row[c]);
            for j in c + 1..width {
                let v = piv * &row[j] - &factor * &prow[j];
                row[j] = if prev.is_one() { v } else { v / &prev };
            }
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }

    if b.is_some() && pivots.last() == Some(&cols) {
        return Ok(Solution::Inconsistent);
    }
    let rank = pivots.len();
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();

    let back_substitute = |x: &mut Vec<Rational>, with_rhs: bool| {
        for i in (0..rank).rev() {
            let pc = pivots[i];
            let mut acc = if with_rhs {
                Rational::from_integer(a[i][cols].clone())
            } else {
                Rational::zero()
            };
            for j in pc + 1..cols {
                if !x[j].is_zero() && !a[i][j].is_zero() {
                    acc -= &x[j] * Rational::from_integer(a[i][j].clone());
                }
            }
            x[pc] = acc / Rational::from_integer(a[i][pc].clone());
        }
    };

    let mut particular = vec![Rational::zero(); cols];
    if b.is_some() {
        back_substitute(&mut particular, true);
    }
    let nullspace = free
        .iter()
        .map(|&f| {
            let mut x = vec![Rational::zero(); cols];
            x[f] = Rational::one();
            back_substitute(&mut x, false);
            x
        })
        .collect();
    Ok(Solution::Solved { particular, nullspace })
}

/// Nullspace basis of a rational matrix with `cols` columns.
pub fn nullspace(matrix: &[Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
    if matrix.is_empty() {
        return (0..cols)
            .map(|f| {
                (0..cols)
                    .map(|j| if j == f { Rational::one() } else { Rational::zero() })
                    .collect()
            })
            .collect();
    }
    match solve_linear_exact(matrix, Rhs::Homogeneous) {
        Ok(Solution::Solved { nullspace, .. }) => nullspace,
        _ => Vec::new(),
    }
}

/// Gauss-Jordan elimination over an arbitrary exact field.
///
/// Returns `None` when inconsistent, otherwise a particular solution (zero
/// for `rhs = None`) and a nullspace basis in the same convention as
/// [`solve_linear_exact`].
pub fn solve_over_field<F: Field>(matrix: &[Vec<F>], cols: usize, rhs: Option<&[F]>) -> Option<(Vec<F>, Vec<Vec<F>>)> {
    let rows = matrix.len();
    let width = cols + usize::from(rhs.is_some());
    let mut a: Vec<Vec<F>> = (0..rows)
        .map(|i| {
            let mut row = matrix[i].clone();
            assert_eq!(row.len(), cols, "ragged matrix");
            if let Some(b) = rhs {
                row.push(b[i].clone());
            }
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..width {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows)
            .filter(|&i| !a[i][c].is_zero())
            .min_by_key(|&i| a[i][c].cost())
        else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].inv();
        for x in &mut a[r][c..width] {
            *x = x.times(&inv);
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (x, p) in row[c..width].iter_mut().zip(&pivot_row[c..width]) {
                if !p.is_zero() {
                    *x = x.minus(&factor.times(p));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if rhs.is_some() && pivots.last() == Some(&cols) {
        return None;
    }
    let mut particular = vec![F::zero(); cols];
    if rhs.is_some() {
        for (i, &pc) in pivots.iter().enumerate() {
            particular[pc] = a[i][cols].clone();
        }
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let nullspace = free
        .iter()
        .map(|&f| {
            let mut x = vec![F::zero(); cols];
            x[f] = F::one();
            for (i, &pc) in pivots.iter().enumerate() {
                x[pc] = a[i][f].negated();
            }
            x
        })
        .collect();
    Some((particular, nullspace))
}
