//! Dense exact linear solves over the rationals.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Solves `matrix * x = rhs` by Gaussian elimination with exact pivots.
/// `matrix` is row-major and square.
pub(crate) fn solve(mut matrix: Vec<Vec<Rational>>, mut rhs: Vec<Rational>) -> Result<Vec<Rational>> {
    let n = rhs.len();
    debug_assert!(matrix.len() == n && matrix.iter().all(|r| r.len() == n));
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !matrix[r][col].is_zero())
            .ok_or(Error::DivisionByZero)?;
        matrix.swap(col, pivot);
        rhs.swap(col, pivot);
        let inv = matrix[col][col].recip();
        for k in col..n {
            matrix[col][k] = &matrix[col][k] * &inv;
        }
        rhs[col] = &rhs[col] * &inv;
        for r in 0..n {
            if r == col || matrix[r][col].is_zero() {
                continue;
            }
            let factor = matrix[r][col].clone();
            for k in col..n {
                if !matrix[col][k].is_zero() {
                    let delta = &factor * &matrix[col][k];
                    matrix[r][k] -= delta;
                }
            }
            let delta = &factor * &rhs[col];
            rhs[r] -= delta;
        }
    }
    Ok(rhs)
}
