//! Closed-form error rates for one round of majority-vote decoding with
//! unreliable XOR gates.
//!
//! Setting: each bit `v` of a `(γ, ρ)`-regular code with girth ≥ 6 receives
//! `γ` parity estimates, one per adjacent check, each computed by a
//! `(ρ-1)`-input XOR gate over the *other* received bits of that check. The
//! decoded bit is the strict majority of the estimates; on a tie (even `γ`)
//! the received channel bit is kept. Girth ≥ 6 makes the gates' input sets
//! pairwise disjoint, so the estimates are independent given the gate failure
//! probabilities — which is what makes everything here exact rather than
//! approximate.
//!
//! Main entry points:
//!
//! - [`misdecode_prob`]: exact per-bit error probability for an arbitrary
//!   per-gate failure-probability vector (and [`misdecode_prob_vn`], the
//!   closed binomial form when all gates share one rate).
//! - [`gos_bit_prob`] / [`gos_ber_bounds`] / [`dependence_factor`]: the
//!   switching-failure model, conditioned on how many of a bit's gates keep a
//!   stable ideal output across consecutive transmissions, plus the two-sided
//!   BER envelope and its spread.
//! - [`conditional_ber`]: exact BER conditioned on a concrete window of
//!   transmitted codewords, by exhaustive enumeration of gate states, for any
//!   [`FailureModel`].
//!
//! Channel and state noise are independent across transmission slots: the
//! state a gate conditions on is the noisy history it actually observed,
//! drawn with fresh channel noise per slot, independent of the noise on the
//! word being decoded.

use crate::codes::TannerGraph;
use crate::fault::{FailureModel, GateState};
use crate::util::{binomial, check_prob_range, for_each_subset, KahanSum};
use crate::{Error, Result};
use std::collections::HashMap;

/// Largest vote width `γ` accepted by the exact subset enumeration
/// (`γ · C(γ, ⌈γ/2⌉)` products stay below ~10^8).
pub const MAX_VOTE_WIDTH: usize = 25;

/// Largest `l` for which [`subset_array`] will materialize all rows.
pub const MAX_SUBSET_ARRAY_BASE: usize = 20;

/// All `u`-subsets of `{1, …, l}` in lexicographic order, each row listing
/// the subset ascending followed by its complement ascending.
///
/// This is the bookkeeping array behind [`misdecode_prob`]: row `(S, S̄)`
/// enumerates one way to pick which gate estimates are wrong.
///
/// # Example
///
/// ```
/// let rows = majlogic::analytic::subset_array(2, 4).unwrap();
/// assert_eq!(rows[0], vec![1, 2, 3, 4]);
/// assert_eq!(rows[1], vec![1, 3, 2, 4]);
/// assert_eq!(rows[5], vec![3, 4, 1, 2]);
/// ```
///
/// # Errors
///
/// - [`Error::InvalidParameter`] if `u > l` or `l == 0`.
/// - [`Error::TooLarge`] if `l` exceeds [`MAX_SUBSET_ARRAY_BASE`].
pub fn subset_array(u: usize, l: usize) -> Result<Vec<Vec<usize>>> {
    if l == 0 || u > l {
        return Err(Error::param(format!(
            "subset_array requires 1 <= l and u <= l, got u={u}, l={l}"
        )));
    }
    if l > MAX_SUBSET_ARRAY_BASE {
        return Err(Error::TooLarge(format!(
            "subset_array materializes C({l},{u}) rows of {l} entries; \
             the limit is l <= {MAX_SUBSET_ARRAY_BASE}"
        )));
    }
    let mut rows = Vec::new();
    for_each_subset(l, u, |s| {
        let mut row = Vec::with_capacity(l);
        row.extend(s.iter().map(|x| x + 1));
        let mut inside = vec![false; l + 1];
        for &x in s {
            inside[x + 1] = true;
        }
        row.extend((1..=l).filter(|&x| !inside[x]));
        rows.push(row);
        true
    });
    Ok(rows)
}

/// Probability `A` that a reliable `(ρ-1)`-input XOR over bits received
/// through a crossover-`p` channel outputs the wrong parity:
/// `A = (1 - (1-2p)^(ρ-1)) / 2`.
///
/// # Errors
///
/// Returns [`Error::InvalidParameter`] unless `ρ >= 2` and `0 <= p <= 1/2`.
pub fn xor_error_prob(p: f64, rho: usize) -> Result<f64> {
    check_rho(rho)?;
    check_prob_range("p", p, 0.0, 0.5)?;
    Ok(0.5 * (1.0 - (1.0 - 2.0 * p).powi((rho - 1) as i32)))
}

/// Probability `B` that channel noise flips the parity of a gate's inputs
/// between two consecutive slots: an odd number of the `2(ρ-1)` involved
/// received bits is flipped, `B = (1 - (1-2p)^(2(ρ-1))) / 2`.
///
/// # Errors
///
/// Returns [`Error::InvalidParameter`] unless `ρ >= 2` and `0 <= p <= 1/2`.
pub fn switch_parity_prob(p: f64, rho: usize) -> Result<f64> {
    check_rho(rho)?;
    check_prob_range("p", p, 0.0, 0.5)?;
    Ok(0.5 * (1.0 - (1.0 - 2.0 * p).powi(2 * (rho - 1) as i32)))
}

/// Exact probability that one bit is decoded incorrectly, given per-gate
/// failure probabilities `gate_eps` (length `γ`).
///
/// Gate `j`'s estimate is wrong with probability
/// `P_j = ε_j (1 - A) + (1 - ε_j) A` where `A` is [`xor_error_prob`]; the
/// result sums the probability of every configuration with a strict majority
/// of wrong estimates, plus — for even `γ` — the tie configurations weighted
/// by `p` (a tie keeps the received bit).
///
/// # Errors
///
/// - [`Error::InvalidParameter`] for `ρ < 2`, `p` outside `[0, 1/2]`, an
///   empty `gate_eps`, or entries outside `[0, 1]`.
/// - [`Error::TooLarge`] if `γ` exceeds [`MAX_VOTE_WIDTH`].
pub fn misdecode_prob(p: f64, rho: usize, gate_eps: &[f64]) -> Result<f64> {
    check_rho(rho)?;
    check_prob_range("p", p, 0.0, 0.5)?;
    for (j, &e) in gate_eps.iter().enumerate() {
        check_prob_range(&format!("gate_eps[{j}]"), e, 0.0, 1.0)?;
    }
    let a = xor_error_prob(p, rho)?;
    let wrong: Vec<f64> = gate_eps.iter().map(|&e| e + a - 2.0 * e * a).collect();
    majority_wrong_prob(p, &wrong)
}

/// Exact per-bit error probability when every gate fails independently with
/// the same rate `eps` (the uniform-failure special case, in closed binomial
/// form — no subset enumeration, so any `γ` is accepted).
///
/// # Errors
///
/// Returns [`Error::InvalidParameter`] for `ρ < 2`, `γ == 0`, `p` outside
/// `[0, 1/2]`, or `eps` outside `[0, 1]`.
pub fn misdecode_prob_vn(p: f64, eps: f64, gamma: usize, rho: usize) -> Result<f64> {
    check_rho(rho)?;
    check_gamma(gamma)?;
    check_prob_range("p", p, 0.0, 0.5)?;
    check_prob_range("eps", eps, 0.0, 1.0)?;
    let a = xor_error_prob(p, rho)?;
    let big_p = eps + a - 2.0 * eps * a;
    let g = gamma as u64;
    let mut acc = KahanSum::new();
    for i in (gamma / 2 + 1)..=gamma {
        acc.add(
            binomial(g, i as u64)
                * big_p.powi(i as i32)
                * (1.0 - big_p).powi((gamma - i) as i32),
        );
    }
    if gamma % 2 == 0 {
        let half = (gamma / 2) as i32;
        acc.add(p * binomial(g, g / 2) * big_p.powi(half) * (1.0 - big_p).powi(half));
    }
    Ok(acc.value())
}

/// Two-sided envelope for a bit-error rate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BerBounds {
    /// Best-case (lowest) error rate.
    pub lower: f64,
    /// Worst-case (highest) error rate.
    pub upper: f64,
}

/// Exact per-bit error probability under the switching-failure model,
/// conditioned on `stable_gates` of the bit's `γ` gates having an unchanged
/// ideal output between the previous and current transmitted words.
///
/// A stable gate becomes failure-prone only if channel noise flips its input
/// parity across the two slots (probability `B`, see
/// [`switch_parity_prob`]); a switching gate is failure-prone unless noise
/// happens to cancel the switch (probability `1 - B`). Failure-prone gates
/// fail with `eps_bar`, others not at all; summing [`misdecode_prob`] over
/// the number of failure-prone gates with these weights gives the result.
///
/// # Errors
///
/// - [`Error::InvalidParameter`] for `ρ < 2`, `γ == 0`,
///   `stable_gates > γ`, `p` outside `[0, 1/2]`, or `eps_bar` outside
///   `[0, 1]`.
/// - [`Error::TooLarge`] if `γ` exceeds [`MAX_VOTE_WIDTH`].
pub fn gos_bit_prob(
    p: f64,
    eps_bar: f64,
    gamma: usize,
    rho: usize,
    stable_gates: usize,
) -> Result<f64> {
    check_rho(rho)?;
    check_gamma(gamma)?;
    check_prob_range("p", p, 0.0, 0.5)?;
    check_prob_range("eps_bar", eps_bar, 0.0, 1.0)?;
    if stable_gates > gamma {
        return Err(Error::param(format!(
            "stable_gates {stable_gates} exceeds gamma {gamma}"
        )));
    }
    let b = switch_parity_prob(p, rho)?;
    let t_v = stable_gates;
    let mut acc = KahanSum::new();
    let mut hot_eps = Vec::with_capacity(gamma);
    for t in 0..=gamma {
        hot_eps.clear();
        hot_eps.resize(t, eps_bar);
        hot_eps.resize(gamma, 0.0);
        let pv = misdecode_prob(p, rho, &hot_eps)?;
        // Probability that exactly t gates are failure-prone: j of them from
        // the t_v stable gates (each prone with probability B), t - j from
        // the γ - t_v switching gates (each prone with probability 1 - B).
        let mut weight = KahanSum::new();
        let j_lo = (t + t_v).saturating_sub(gamma);
        let j_hi = t_v.min(t);
        for j in j_lo..=j_hi {
            weight.add(
                binomial(t_v as u64, j as u64)
                    * binomial((gamma - t_v) as u64, (t - j) as u64)
                    * b.powi((gamma + 2 * j - t_v - t) as i32)
                    * (1.0 - b).powi((t_v + t - 2 * j) as i32),
            );
        }
        acc.add(pv * weight.value());
    }
    Ok(acc.value())
}

/// Two-sided BER bounds under the switching-failure model over all possible
/// transmitted-codeword sequences: the lower bound is attained when every
/// bit has all `γ` gates stable (consecutive identical codewords), the upper
/// bound when none are (consecutive complementary codewords).
///
/// # Errors
///
/// Same conditions as [`gos_bit_prob`].
pub fn gos_ber_bounds(p: f64, eps_bar: f64, gamma: usize, rho: usize) -> Result<BerBounds> {
    Ok(BerBounds {
        lower: gos_bit_prob(p, eps_bar, gamma, rho, gamma)?,
        upper: gos_bit_prob(p, eps_bar, gamma, rho, 0)?,
    })
}

/// Spread of the switching-failure envelope: `lower / upper` of
/// [`gos_ber_bounds`], measuring how strongly the error rate depends on the
/// transmitted data. Defined as `1` when both bounds are zero.
///
/// # Errors
///
/// Same conditions as [`gos_bit_prob`].
pub fn dependence_factor(p: f64, eps_bar: f64, gamma: usize, rho: usize) -> Result<f64> {
    let bounds = gos_ber_bounds(p, eps_bar, gamma, rho)?;
    if bounds.upper == 0.0 {
        Ok(1.0)
    } else {
        Ok(bounds.lower / bounds.upper)
    }
}

/// Largest total gate-input bit count `(ρ-1) · γ · memory` accepted by the
/// exhaustive state enumeration in [`conditional_ber`].
pub const MAX_WINDOW_STATE_BITS: usize = 24;

/// Exact BER of one decoding round conditioned on a concrete window of
/// transmitted codewords, for an arbitrary failure model.
///
/// `window` lists the transmitted codewords oldest-first; the last entry is
/// the word being decoded. For every variable and every gate, all noisy gate
/// states over the model's memory are enumerated with their channel
/// probabilities, the per-gate failure probabilities are aggregated, and the
/// per-bit error probability is averaged over all `n` variables. State noise
/// is independent of the noise on the decoded word.
///
/// State-independent models short-circuit to [`misdecode_prob_vn`]; for the
/// rest the graph must satisfy
/// `(ρ-1) · γ · memory <=` [`MAX_WINDOW_STATE_BITS`].
///
/// # Errors
///
/// - [`Error::InvalidParameter`] if the graph's girth is below 6 (estimates
///   would not be independent), `window` is empty or shorter than the
///   model's memory, any window entry is not a codeword, `p` lies outside
///   `[0, 1/2]`, or the model's parameters are invalid.
/// - [`Error::TooLarge`] if the state enumeration exceeds
///   [`MAX_WINDOW_STATE_BITS`] bits.
pub fn conditional_ber(
    graph: &TannerGraph,
    window: &[Vec<u8>],
    model: &FailureModel,
    p: f64,
) -> Result<f64> {
    check_prob_range("p", p, 0.0, 0.5)?;
    model.validate()?;
    if window.is_empty() {
        return Err(Error::param("window must hold at least one codeword".into()));
    }
    for (i, w) in window.iter().enumerate() {
        if !graph.is_codeword(w)? {
            return Err(Error::param(format!("window word {i} is not a codeword")));
        }
    }
    let mem = model.memory();
    if window.len() < mem {
        return Err(Error::param(format!(
            "window holds {} words but the model conditions on {mem}",
            window.len()
        )));
    }
    if !graph.girth().is_at_least(6) {
        return Err(Error::param(
            "graph girth is below 6: gate inputs overlap and the exact \
             per-bit formula does not apply"
            .into(),
        ));
    }
    let gamma = graph.gamma();
    let rho = graph.rho();
    match model {
        FailureModel::Reliable => return misdecode_prob_vn(p, 0.0, gamma, rho),
        FailureModel::VonNeumann { eps } => return misdecode_prob_vn(p, *eps, gamma, rho),
        _ => {}
    }
    let width = rho - 1;
    let state_bits = width * mem;
    if width * gamma * mem > MAX_WINDOW_STATE_BITS {
        return Err(Error::TooLarge(format!(
            "state enumeration needs (rho-1)*gamma*memory = {} bits, limit is {}",
            width * gamma * mem,
            MAX_WINDOW_STATE_BITS
        )));
    }
    let recent = &window[window.len() - mem..];

    let mut total = KahanSum::new();
    let mut memo: HashMap<Vec<u64>, f64> = HashMap::new();
    let mut eps_key: Vec<u64> = Vec::with_capacity(gamma);
    for v in 0..graph.n() {
        // Per gate: aggregate state-noise probability mass by failure rate.
        let mut gates: Vec<Vec<(f64, f64)>> = Vec::with_capacity(gamma);
        for &c in graph.checks_of(v) {
            let inputs: Vec<usize> =
                graph.vars_of(c).iter().copied().filter(|&u| u != v).collect();
            let mut agg: Vec<(f64, f64)> = Vec::new();
            for pat in 0u32..(1 << state_bits) {
                let flips = pat.count_ones() as i32;
                let weight = p.powi(flips) * (1.0 - p).powi(state_bits as i32 - flips);
                if weight == 0.0 {
                    continue;
                }
                let mut rows = Vec::with_capacity(mem);
                for (r, word) in recent.iter().enumerate() {
                    let mut mask = 0u64;
                    for (i, &u) in inputs.iter().enumerate() {
                        let noisy =
                            word[u] ^ ((pat >> (r * width + i)) & 1) as u8;
                        mask |= u64::from(noisy) << i;
                    }
                    rows.push(mask);
                }
                let eps = model.failure_prob(&GateState::new(width, rows)?)?;
                match agg.iter_mut().find(|(e, _)| e.to_bits() == eps.to_bits()) {
                    Some((_, w)) => *w += weight,
                    None => agg.push((eps, weight)),
                }
            }
            gates.push(agg);
        }
        // Combine the independent gates: walk the product distribution over
        // per-gate failure rates, reusing the vote computation per distinct
        // rate multiset.
        let mut eps_vec = vec![0.0f64; gamma];
        let mut pv = KahanSum::new();
        combine_gates(
            &gates, 0, 1.0, &mut eps_vec, &mut pv, &mut memo, &mut eps_key, p, rho,
        )?;
        total.add(pv.value());
    }
    Ok(total.value() / graph.n() as f64)
}

#[allow(clippy::too_many_arguments)]
fn combine_gates(
    gates: &[Vec<(f64, f64)>],
    depth: usize,
    prob: f64,
    eps_vec: &mut Vec<f64>,
    acc: &mut KahanSum,
    memo: &mut HashMap<Vec<u64>, f64>,
    eps_key: &mut Vec<u64>,
    p: f64,
    rho: usize,
) -> Result<()> {
    if depth == gates.len() {
        eps_key.clear();
        eps_key.extend(eps_vec.iter().map(|e| e.to_bits()));
        eps_key.sort_unstable();
        let pv = match memo.get(eps_key.as_slice()) {
            Some(&pv) => pv,
            None => {
                let pv = misdecode_prob(p, rho, eps_vec)?;
                memo.insert(eps_key.clone(), pv);
                pv
            }
        };
        acc.add(prob * pv);
        return Ok(());
    }
    for &(eps, weight) in &gates[depth] {
        if weight == 0.0 {
            continue;
        }
        eps_vec[depth] = eps;
        combine_gates(
            gates,
            depth + 1,
            prob * weight,
            eps_vec,
            acc,
            memo,
            eps_key,
            p,
            rho,
        )?;
    }
    Ok(())
}

/// Shared vote step: probability that strictly more than `γ/2` of the
/// independent wrong-indicators fire, plus `p` times the tie probability for
/// even `γ`. `wrong[j]` is the probability that estimate `j` is wrong.
fn majority_wrong_prob(p: f64, wrong: &[f64]) -> Result<f64> {
    let gamma = wrong.len();
    check_gamma(gamma)?;
    if gamma > MAX_VOTE_WIDTH {
        return Err(Error::TooLarge(format!(
            "vote width {gamma} exceeds the exact-enumeration limit {MAX_VOTE_WIDTH}"
        )));
    }
    let mut acc = KahanSum::new();
    let mut subset_mask = vec![false; gamma];
    let mut sum_for = |count: usize, acc: &mut KahanSum| {
        for_each_subset(gamma, count, |s| {
            for m in subset_mask.iter_mut() {
                *m = false;
            }
            for &x in s {
                subset_mask[x] = true;
            }
            let mut prod = 1.0;
            for (j, &w) in wrong.iter().enumerate() {
                prod *= if subset_mask[j] { w } else { 1.0 - w };
            }
            acc.add(prod);
            true
        });
    };
    for i in (gamma / 2 + 1)..=gamma {
        sum_for(i, &mut acc);
    }
    if gamma % 2 == 0 {
        let mut tie = KahanSum::new();
        sum_for(gamma / 2, &mut tie);
        acc.add(p * tie.value());
    }
    Ok(acc.value())
}

fn check_rho(rho: usize) -> Result<()> {
    if rho < 2 {
        return Err(Error::param(format!(
            "check degree rho must be at least 2, got {rho}"
        )));
    }
    Ok(())
}

fn check_gamma(gamma: usize) -> Result<()> {
    if gamma == 0 {
        return Err(Error::param("variable degree gamma must be at least 1".into()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    // Expected values in this module were frozen from an independent
    // brute-force enumeration (raw bit patterns and outcome vectors, no
    // shared code with the implementation).

    #[test]
    fn subset_array_matches_reference_layout() {
        let rows = subset_array(2, 4).unwrap();
        assert_eq!(
            rows,
            vec![
                vec![1, 2, 3, 4],
                vec![1, 3, 2, 4],
                vec![1, 4, 2, 3],
                vec![2, 3, 1, 4],
                vec![2, 4, 1, 3],
                vec![3, 4, 1, 2],
            ]
        );
        assert_eq!(subset_array(3, 3).unwrap(), vec![vec![1, 2, 3]]);
        assert_eq!(subset_array(0, 2).unwrap(), vec![vec![1, 2]]);
    }

    #[test]
    fn subset_array_rejects_bad_sizes() {
        assert!(subset_array(3, 2).is_err());
        assert!(subset_array(0, 0).is_err());
        assert!(matches!(
            subset_array(10, MAX_SUBSET_ARRAY_BASE + 1).unwrap_err(),
            Error::TooLarge(_)
        ));
    }

    #[test]
    fn xor_error_prob_known_values() {
        assert_relative_eq!(xor_error_prob(0.1, 3).unwrap(), 0.17999999999999994);
        assert_relative_eq!(xor_error_prob(1e-3, 5).unwrap(), 0.003988015991999994);
        assert_eq!(xor_error_prob(0.0, 4).unwrap(), 0.0);
        assert_eq!(xor_error_prob(0.5, 4).unwrap(), 0.5);
        // ρ = 2: a single input, so the gate output is wrong iff that input is.
        assert_relative_eq!(xor_error_prob(0.12, 2).unwrap(), 0.12);
        assert!(xor_error_prob(0.6, 3).is_err());
        assert!(xor_error_prob(0.1, 1).is_err());
    }

    #[test]
    fn switch_parity_prob_known_values() {
        assert_relative_eq!(switch_parity_prob(0.1, 3).unwrap(), 0.29519999999999996);
        assert_relative_eq!(switch_parity_prob(1e-3, 5).unwrap(), 0.007944223440895126);
        assert_relative_eq!(switch_parity_prob(0.02, 3).unwrap(), 0.07532672000000007);
    }

    #[test]
    fn switch_parity_prob_equals_odd_flip_binomial_sum() {
        // Independent identity: B is the probability of an odd number of
        // flips among 2(ρ-1) independent Bernoulli(p) bits.
        for &(p, rho) in &[(0.01, 3usize), (0.2, 5), (0.37, 2), (0.5, 4)] {
            let k = 2 * (rho - 1) as u64;
            let mut direct = 0.0;
            let mut odd = 1;
            while odd <= k {
                direct += binomial(k, odd)
                    * p.powi(odd as i32)
                    * (1.0 - p).powi((k - odd) as i32);
                odd += 2;
            }
            assert_relative_eq!(
                switch_parity_prob(p, rho).unwrap(),
                direct,
                max_relative = 1e-12
            );
        }
    }

    #[test]
    fn misdecode_prob_frozen_oracle_values() {
        // Uniform rates, even γ (tie term active).
        assert_relative_eq!(
            misdecode_prob(0.02, 4, &[0.05; 4]).unwrap(),
            0.0049098952932342685,
            max_relative = 1e-12
        );
        // Distinct per-gate rates including a zero.
        assert_relative_eq!(
            misdecode_prob(0.07, 3, &[0.01, 0.3, 0.0, 0.12]).unwrap(),
            0.03818207845007961,
            max_relative = 1e-12
        );
        // Noiseless channel: the vote fails iff ≥ 2 of 3 gates fail.
        assert_relative_eq!(
            misdecode_prob(0.0, 2, &[0.1; 3]).unwrap(),
            0.028,
            max_relative = 1e-12
        );
        // Fault-free decoding of the (5,5) configuration.
        assert_relative_eq!(
            misdecode_prob(1e-3, 5, &[0.0; 5]).unwrap(),
            6.304767576311657e-07,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            misdecode_prob(1e-3, 5, &[1e-2; 5]).unwrap(),
            2.6345910323964934e-05,
            max_relative = 1e-12
        );
    }

    #[test]
    fn all_half_rates_give_one_half_for_odd_gamma() {
        // Every estimate is a coin flip, so an odd-width vote errs half the
        // time regardless of the channel.
        for gamma in [1usize, 3, 5, 7] {
            for &p in &[0.0, 0.2, 0.5] {
                assert_relative_eq!(
                    misdecode_prob(p, 4, &vec![0.5; gamma]).unwrap(),
                    0.5,
                    max_relative = 1e-12
                );
            }
        }
    }

    #[test]
    fn uniform_misdecode_matches_binomial_form() {
        for gamma in 1..=10usize {
            for &(p, eps, rho) in &[(0.03, 0.1, 3usize), (0.2, 0.02, 4), (0.0, 0.3, 5)] {
                let subsets = misdecode_prob(p, rho, &vec![eps; gamma]).unwrap();
                let closed = misdecode_prob_vn(p, eps, gamma, rho).unwrap();
                assert_relative_eq!(subsets, closed, max_relative = 1e-11);
            }
        }
    }

    #[test]
    fn misdecode_prob_validates_domain() {
        assert!(misdecode_prob(0.7, 3, &[0.1]).is_err());
        assert!(misdecode_prob(0.1, 1, &[0.1]).is_err());
        assert!(misdecode_prob(0.1, 3, &[]).is_err());
        assert!(misdecode_prob(0.1, 3, &[1.5]).is_err());
        assert!(matches!(
            misdecode_prob(0.1, 3, &vec![0.1; MAX_VOTE_WIDTH + 1]).unwrap_err(),
            Error::TooLarge(_)
        ));
    }

    #[test]
    fn gos_bit_prob_frozen_oracle_values() {
        // (γ, ρ) = (5, 5), p = 1e-3, ε̄ = 1e-2.
        let cases = [
            (0, 2.590368224377536e-05),
            (1, 1.5008576754720017e-05),
            (2, 7.905134334131444e-06),
            (3, 3.739030244233114e-06),
            (4, 1.6294421873530074e-06),
            (5, 6.685182176012721e-07),
        ];
        for (stable, expect) in cases {
            assert_relative_eq!(
                gos_bit_prob(1e-3, 1e-2, 5, 5, stable).unwrap(),
                expect,
                max_relative = 1e-12
            );
        }
        // (γ, ρ) = (3, 3), p = 0.02, ε̄ = 0.05.
        let cases = [
            (0, 0.01898306430781679),
            (1, 0.01310328200659243),
            (2, 0.008504648405289882),
            (3, 0.005307064337752307),
        ];
        for (stable, expect) in cases {
            assert_relative_eq!(
                gos_bit_prob(0.02, 0.05, 3, 3, stable).unwrap(),
                expect,
                max_relative = 1e-12
            );
        }
    }

    #[test]
    fn gos_bit_prob_decreases_with_stability() {
        // More stable gates -> fewer failure-prone gates -> lower error rate.
        for &(p, eb, gamma, rho) in &[(0.02, 0.1, 4usize, 3usize), (1e-3, 1e-2, 5, 5)] {
            let mut last = f64::INFINITY;
            for stable in 0..=gamma {
                let val = gos_bit_prob(p, eb, gamma, rho, stable).unwrap();
                assert!(val < last, "stable={stable}: {val} !< {last}");
                last = val;
            }
        }
    }

    #[test]
    fn gos_bounds_and_dependence_factor() {
        let b = gos_ber_bounds(1e-3, 1e-2, 5, 5).unwrap();
        assert_relative_eq!(b.lower, 6.685182176012721e-07, max_relative = 1e-12);
        assert_relative_eq!(b.upper, 2.590368224377536e-05, max_relative = 1e-12);
        let f = dependence_factor(1e-3, 1e-2, 5, 5).unwrap();
        assert_relative_eq!(f, 0.025807845051138114, max_relative = 1e-12);
        // Degenerate: p = 0, ε̄ = 0 -> both bounds zero -> factor defined as 1.
        assert_eq!(dependence_factor(0.0, 0.0, 3, 3).unwrap(), 1.0);
    }

    #[test]
    fn gos_bit_prob_validates_domain() {
        assert!(gos_bit_prob(0.1, 0.1, 3, 3, 4).is_err());
        assert!(gos_bit_prob(0.1, 1.5, 3, 3, 0).is_err());
        assert!(gos_bit_prob(0.6, 0.1, 3, 3, 0).is_err());
        assert!(gos_bit_prob(0.1, 0.1, 0, 3, 0).is_err());
    }

    mod conditional {
        use super::*;
        use crate::codes::{build_ag, build_pg, TannerGraph};
        use crate::fault::{FailureModel, FailureTable};

        #[test]
        fn window_ber_matches_brute_force_on_seven_variable_code() {
            let graph = build_pg(1).unwrap().graph;
            let x_prev = vec![0, 1, 1, 1, 1, 0, 0];
            let x_cur = vec![0, 1, 1, 0, 0, 1, 1];
            assert!(graph.is_codeword(&x_prev).unwrap());
            assert!(graph.is_codeword(&x_cur).unwrap());
            let model = FailureModel::Gos { eps_bar: 0.1 };
            let got = conditional_ber(&graph, &[x_prev, x_cur], &model, 0.03).unwrap();
            assert_relative_eq!(got, 0.0348426255078296, max_relative = 1e-9);
        }

        #[test]
        fn repeated_word_window_matches_all_stable_closed_form() {
            let graph = build_pg(1).unwrap().graph;
            let zero = vec![0u8; 7];
            let model = FailureModel::Gos { eps_bar: 0.1 };
            let got = conditional_ber(&graph, &[zero.clone(), zero], &model, 0.03).unwrap();
            assert_relative_eq!(got, 0.013200014494013045, max_relative = 1e-9);
            let closed = gos_bit_prob(0.03, 0.1, 3, 3, 3).unwrap();
            assert_relative_eq!(got, closed, max_relative = 1e-9);
        }

        #[test]
        fn window_ber_matches_brute_force_on_k4_code_with_ties() {
            let graph = build_ag(1).unwrap().graph;
            let x_prev = vec![1, 1, 1, 1, 0, 0];
            let x_cur = vec![0, 1, 1, 0, 1, 0];
            assert!(graph.is_codeword(&x_prev).unwrap());
            assert!(graph.is_codeword(&x_cur).unwrap());
            let model = FailureModel::Gos { eps_bar: 0.2 };
            let got = conditional_ber(&graph, &[x_prev, x_cur], &model, 0.04).unwrap();
            assert_relative_eq!(got, 0.040275574478424905, max_relative = 1e-9);
        }

        #[test]
        fn state_independent_models_shortcut_to_uniform_form() {
            let graph = build_pg(2).unwrap().graph;
            let zero = vec![0u8; graph.n()];
            let vn = conditional_ber(
                &graph,
                &[zero.clone()],
                &FailureModel::VonNeumann { eps: 0.03 },
                0.02,
            )
            .unwrap();
            assert_relative_eq!(
                vn,
                misdecode_prob_vn(0.02, 0.03, 5, 5).unwrap(),
                max_relative = 1e-12
            );
            let rel =
                conditional_ber(&graph, &[zero.clone()], &FailureModel::Reliable, 0.02).unwrap();
            assert_relative_eq!(
                rel,
                misdecode_prob_vn(0.02, 0.0, 5, 5).unwrap(),
                max_relative = 1e-12
            );
        }

        #[test]
        fn table_model_with_uniform_entries_matches_uniform_form() {
            // A memory-1 table assigning the same rate to every state is the
            // uniform model in disguise.
            let graph = build_pg(1).unwrap().graph;
            let zero = vec![0u8; 7];
            let table = FailureTable::new(1, 2, vec![], Some(0.07)).unwrap();
            let got =
                conditional_ber(&graph, &[zero], &FailureModel::Table(table), 0.05).unwrap();
            assert_relative_eq!(
                got,
                misdecode_prob_vn(0.05, 0.07, 3, 3).unwrap(),
                max_relative = 1e-11
            );
        }

        #[test]
        fn rejects_low_girth_graphs() {
            // Two checks sharing two variables: girth 4.
            let graph =
                TannerGraph::from_edges(2, 2, &[(0, 0), (0, 1), (1, 0), (1, 1)]).unwrap();
            let zero = vec![0u8; 2];
            let err = conditional_ber(&graph, &[zero], &FailureModel::Reliable, 0.1).unwrap_err();
            assert!(err.to_string().contains("girth"), "{err}");
        }

        #[test]
        fn rejects_bad_windows() {
            let graph = build_pg(1).unwrap().graph;
            let model = FailureModel::Gos { eps_bar: 0.1 };
            // Empty window.
            assert!(conditional_ber(&graph, &[], &model, 0.1).is_err());
            // Too short for the model's memory.
            let zero = vec![0u8; 7];
            assert!(conditional_ber(&graph, &[zero.clone()], &model, 0.1).is_err());
            // Not a codeword.
            let mut bad = zero.clone();
            bad[0] = 1;
            assert!(conditional_ber(&graph, &[zero.clone(), bad], &model, 0.1).is_err());
        }

        #[test]
        fn rejects_oversized_state_enumeration() {
            // γ = ρ = 5 with memory 2: (ρ-1)·γ·mem = 40 bits > 24.
            let graph = build_pg(2).unwrap().graph;
            let zero = vec![0u8; graph.n()];
            let err = conditional_ber(
                &graph,
                &[zero.clone(), zero],
                &FailureModel::Gos { eps_bar: 0.1 },
                0.02,
            )
            .unwrap_err();
            assert!(matches!(err, Error::TooLarge(_)), "{err}");
        }
    }
}
