//! Exhaustive vertex-expansion checking.
//!
//! The guaranteed-correction results in [`crate::bounds`] assume the code
//! graph is an `(αn, δγ)` vertex expander: every set `S` of at most `⌊αn⌋`
//! variables sees at least `δγ|S|` distinct checks. Deciding this property is
//! coNP-hard in general, so this module does the only thing that yields a
//! trustworthy answer on small codes: it enumerates every candidate subset,
//! smallest sizes first, under an explicit budget.

use super::TannerGraph;
use crate::util::{binomial_u128, for_each_subset};
use crate::{Error, Result};

/// Outcome of an exhaustive expansion check.
#[derive(Debug, Clone, PartialEq)]
pub struct ExpansionReport {
    /// `true` iff every subset up to the size limit expands.
    pub satisfied: bool,
    /// The subset-size limit that was checked, `⌊αn⌋`.
    pub max_subset_size: usize,
    /// Number of subsets examined.
    pub subsets_checked: u128,
    /// The first violating subset found (smallest size, lexicographically
    /// first), when `satisfied` is `false`.
    pub witness: Option<ExpansionWitness>,
}

/// A subset refuting the expansion property.
#[derive(Debug, Clone, PartialEq)]
pub struct ExpansionWitness {
    /// Variable indices of the violating set, ascending.
    pub variables: Vec<usize>,
    /// Number of distinct checks adjacent to the set.
    pub neighborhood_size: usize,
    /// The required lower bound `δγ|S|` the set failed to meet.
    pub required: f64,
}

impl TannerGraph {
    /// Exhaustively decide whether the graph is an `(αn, δγ)` expander.
    ///
    /// Checks `|N(S)| >= delta_factor · γ · |S|` for every nonempty variable
    /// subset `S` with `|S| <= ⌊αn⌋`, in ascending size and lexicographic
    /// order, stopping at the first violation.
    ///
    /// # Errors
    ///
    /// - [`Error::InvalidParameter`] unless `0 < alpha <= 1` and
    ///   `0 < delta_factor <= 1`.
    /// - [`Error::BudgetExceeded`] if `Σ_{k=1}^{⌊αn⌋) C(n, k)` exceeds
    ///   `budget` — determined *before* any enumeration, so a refused call
    ///   does no work.
    pub fn check_expansion(
        &self,
        alpha: f64,
        delta_factor: f64,
        budget: u128,
    ) -> Result<ExpansionReport> {
        if !alpha.is_finite() || alpha <= 0.0 || alpha > 1.0 {
            return Err(Error::param(format!(
                "alpha must lie in (0, 1], got {alpha}"
            )));
        }
        if !delta_factor.is_finite() || delta_factor <= 0.0 || delta_factor > 1.0 {
            return Err(Error::param(format!(
                "delta_factor must lie in (0, 1], got {delta_factor}"
            )));
        }
        let n = self.n();
        let max_size = ((alpha * n as f64).floor() as usize).min(n);
        let mut work: u128 = 0;
        for k in 1..=max_size {
            let c = binomial_u128(n as u64, k as u64)
                .ok_or_else(|| Error::BudgetExceeded("subset count overflows u128".into()))?;
            work = work
                .checked_add(c)
                .ok_or_else(|| Error::BudgetExceeded("subset count overflows u128".into()))?;
        }
        if work > budget {
            return Err(Error::BudgetExceeded(format!(
                "checking all subsets up to size {max_size} needs {work} enumerations, \
                 budget is {budget}"
            )));
        }

        let words = self.m().div_ceil(64);
        let mut checked: u128 = 0;
        for k in 1..=max_size {
            let required = delta_factor * self.gamma() as f64 * k as f64;
            let mut witness: Option<ExpansionWitness> = None;
            for_each_subset(n, k, |subset| {
                checked += 1;
                let mut union = vec![0u64; words];
                for &v in subset {
                    for &c in self.checks_of(v) {
                        union[c / 64] |= 1u64 << (c % 64);
                    }
                }
                let size: u32 = union.iter().map(|w| w.count_ones()).sum();
                if (size as f64) < required {
                    witness = Some(ExpansionWitness {
                        variables: subset.to_vec(),
                        neighborhood_size: size as usize,
                        required,
                    });
                    false
                } else {
                    true
                }
            });
            if let Some(w) = witness {
                return Ok(ExpansionReport {
                    satisfied: false,
                    max_subset_size: max_size,
                    subsets_checked: checked,
                    witness: Some(w),
                });
            }
        }
        Ok(ExpansionReport {
            satisfied: true,
            max_subset_size: max_size,
            subsets_checked: checked,
            witness: None,
        })
    }
}
