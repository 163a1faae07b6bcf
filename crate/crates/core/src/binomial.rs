//! Exact binomial coefficients.

use crate::{Error, Result};

/// `C(n, k)` for signed arguments, zero when `k < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> Result<u64> {
    if n < 0 || k < 0 || k > n {
        return Ok(0);
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut acc: u128 = 1;
    for j in 1..=k {
        // acc * (n - k + j) / j stays exact: acc is C(n - k + j - 1, j - 1)
        acc = acc
            .checked_mul(u128::from(n - k + j))
            .ok_or(Error::Overflow)?
            / u128::from(j);
        if acc > u128::from(u64::MAX) {
            return Err(Error::Overflow);
        }
    }
    Ok(acc as u64)
}

/// [`binomial`] for unsigned arguments.
pub fn choose(n: usize, k: usize) -> Result<u64> {
    binomial(n as i64, k as i64)
}
