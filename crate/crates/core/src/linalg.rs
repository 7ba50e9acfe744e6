//! Dense exact linear algebra for change-of-basis blocks.

use crate::rational::Rational;
use num_traits::{One, Zero};

pub(crate) type Matrix = Vec<Vec<Rational>>;

/// Gauss-Jordan inverse; `None` when singular.
pub(crate) fn invert(a: &Matrix) -> Option<Matrix> {
    let n = a.len();
    let mut work: Matrix = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !work[r][col].is_zero())?;
        work.swap(col, pivot);
        let inv = work[col][col].recip();
        for v in work[col].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = work[col].clone();
        for (r, row) in work.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &factor * p;
                }
            }
        }
    }
    Some(work.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Row vector times matrix.
pub(crate) fn row_times(v: &[Rational], a: &Matrix) -> Vec<Rational> {
    let cols = a.first().map_or(0, Vec::len);
    let mut out = vec![Rational::zero(); cols];
    for (x, row) in v.iter().zip(a) {
        if x.is_zero() {
            continue;
        }
        for (o, y) in out.iter_mut().zip(row) {
            if !y.is_zero() {
                *o += x * y;
            }
        }
    }
    out
}
