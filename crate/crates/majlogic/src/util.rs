//! Numeric helpers shared across modules: compensated summation, exact small
//! binomial coefficients, and bit-word validation.

use crate::{Error, Result};

/// Kahan–Babuška compensated accumulator.
///
/// The closed-form error-rate expressions sum up to millions of same-sign
/// products spanning many orders of magnitude; naive summation loses digits
/// that the acceptance tolerances (relative `1e-9` against brute-force
/// oracles) do not forgive.
#[derive(Debug, Clone, Copy, Default)]
pub struct KahanSum {
    sum: f64,
    compensation: f64,
}

impl KahanSum {
    /// Create an accumulator starting at zero.
    pub fn new() -> Self {
        Self::default()
    }

    /// Add one term.
    #[inline]
    pub fn add(&mut self, value: f64) {
        let t = self.sum + value;
        if self.sum.abs() >= value.abs() {
            self.compensation += (self.sum - t) + value;
        } else {
            self.compensation += (value - t) + self.sum;
        }
        self.sum = t;
    }

    /// Current compensated total.
    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

/// Exact binomial coefficient `C(n, k)` as `f64`.
///
/// Uses the multiplicative formula with intermediate rounding only in the
/// final few bits; exact for every value representable in an `f64` mantissa
/// and accurate to machine precision for the sizes used here (`n <= 200`).
/// Returns `0.0` when `k > n`.
pub fn binomial(n: u64, k: u64) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    let mut acc = 1.0_f64;
    for i in 0..k {
        // Multiply before dividing to stay on ratios of integers.
        acc = acc * (n - i) as f64 / (i + 1) as f64;
    }
    acc.round_ties_even()
}

/// Exact binomial coefficient `C(n, k)` as `u128`, or `None` on overflow.
pub fn binomial_u128(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as u128)?;
        acc /= (i + 1) as u128; // always divides exactly at this point
    }
    Some(acc)
}

/// Validate that `p` is a probability in `[lo, hi]`.
pub fn check_prob_range(name: &str, p: f64, lo: f64, hi: f64) -> Result<()> {
    if !p.is_finite() || p < lo || p > hi {
        return Err(Error::param(format!(
            "{name} must be a finite probability in [{lo}, {hi}], got {p}"
        )));
    }
    Ok(())
}

/// Validate that every entry of `word` is a 0/1 bit.
pub fn check_bits(name: &str, word: &[u8]) -> Result<()> {
    if let Some(pos) = word.iter().position(|&b| b > 1) {
        return Err(Error::param(format!(
            "{name} must contain only bits 0/1, found {} at index {pos}",
            word[pos]
        )));
    }
    Ok(())
}

/// Iterate over all `k`-element subsets of `0..n` in lexicographic order,
/// invoking `f` with the current subset. Returning `false` from `f` stops the
/// enumeration early; the function then returns `false` as well.
pub fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    if k > n {
        return true;
    }
    if k == 0 {
        return f(&[]);
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if !f(&idx) {
            return false;
        }
        // Advance to the next combination in lexicographic order.
        let mut i = k;
        loop {
            if i == 0 {
                return true;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return true;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}
