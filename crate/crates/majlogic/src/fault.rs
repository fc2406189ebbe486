//! Gate-level failure models for the check-side XOR logic.
//!
//! Each parity estimate fed to a majority vote is produced by a `(ρ-1)`-input
//! XOR gate. A [`FailureModel`] decides, per evaluation, the probability that
//! the gate emits the complement of its ideal output:
//!
//! - [`FailureModel::Reliable`]: never fails.
//! - [`FailureModel::VonNeumann`]: fails independently with a fixed
//!   probability `ε` regardless of the data (the classic wiring-error model).
//! - [`FailureModel::Gos`]: *gate-output switching* — fails with probability
//!   `ε̄` only on evaluations where the ideal output differs from the ideal
//!   output of the previous evaluation, and never fails otherwise. This is
//!   the data-dependent model of timing faults: a gate whose output does not
//!   need to toggle cannot miss its deadline.
//! - [`FailureModel::Table`]: arbitrary map from the last `M` input rows to a
//!   failure probability, for experimenting with other data-dependent models.
//!
//! The majority gates themselves are assumed reliable throughout the crate;
//! all observed misbehavior comes from the XOR stage.

use crate::codes::TannerGraph;
use crate::{Error, Result};
use rand::Rng;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

/// The input history of one XOR gate: `rows` of input-bit masks, oldest
/// first, the last row being the evaluation under consideration.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GateState {
    width: usize,
    rows: Vec<u64>,
}

impl GateState {
    /// Build a state from input-row bitmasks (bit `i` of a row is input `i`).
    ///
    /// # Errors
    ///
    /// Returns [`Error::InvalidParameter`] if `width == 0` or `width > 64`,
    /// `rows` is empty, or a row sets bits at or above `width`.
    pub fn new(width: usize, rows: Vec<u64>) -> Result<Self> {
        if width == 0 || width > 64 {
            return Err(Error::param(format!(
                "gate width must be in 1..=64, got {width}"
            )));
        }
        if rows.is_empty() {
            return Err(Error::param("gate state needs at least one input row".into()));
        }
        let mask = if width == 64 { u64::MAX } else { (1u64 << width) - 1 };
        if let Some(bad) = rows.iter().position(|r| r & !mask != 0) {
            return Err(Error::param(format!(
                "row {bad} sets bits beyond gate width {width}"
            )));
        }
        Ok(Self { width, rows })
    }

    /// Build a state from explicit bit slices, oldest first.
    ///
    /// # Errors
    ///
    /// Returns [`Error::InvalidParameter`] on empty input, length mismatch
    /// between rows, non-bit entries, or width outside `1..=64`.
    pub fn from_bit_rows(rows: &[&[u8]]) -> Result<Self> {
        let Some(first) = rows.first() else {
            return Err(Error::param("gate state needs at least one input row".into()));
        };
        let width = first.len();
        let mut packed = Vec::with_capacity(rows.len());
        for row in rows {
            crate::util::check_bits("gate input row", row)?;
            if row.len() != width {
                return Err(Error::param(format!(
                    "gate input rows must share a width, got {} and {width}",
                    row.len()
                )));
            }
            let mut mask = 0u64;
            for (i, &b) in row.iter().enumerate() {
                mask |= u64::from(b) << i;
            }
            packed.push(mask);
        }
        Self::new(width, packed)
    }

    /// Number of gate inputs.
    pub fn width(&self) -> usize {
        self.width
    }

    /// Input rows, oldest first.
    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    /// XOR of the inputs in row `i` (the gate's ideal output for that row).
    ///
    /// # Panics
    ///
    /// Panics if `i` is out of range.
    pub fn row_parity(&self, i: usize) -> u8 {
        (self.rows[i].count_ones() & 1) as u8
    }
}

/// A data-dependent failure table: maps the last `memory` input rows of a
/// `width`-input gate to a failure probability.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FailureTable {
    memory: usize,
    width: usize,
    /// Explicit entries; states not listed fall back to `default`.
    entries: Vec<TableEntry>,
    default: Option<f64>,
    #[serde(skip)]
    index: HashMap<Vec<u64>, f64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct TableEntry {
    /// Input rows, oldest first, as bit arrays.
    rows: Vec<Vec<u8>>,
    prob: f64,
}

impl FailureTable {
    /// Build a table from `(rows, probability)` pairs plus an optional
    /// default for unlisted states.
    ///
    /// # Errors
    ///
    /// Returns [`Error::InvalidParameter`] for bad dimensions, a repeated
    /// state, or probabilities outside `[0, 1]`.
    pub fn new(
        memory: usize,
        width: usize,
        entries: Vec<(Vec<Vec<u8>>, f64)>,
        default: Option<f64>,
    ) -> Result<Self> {
        let raw = entries
            .into_iter()
            .map(|(rows, prob)| TableEntry { rows, prob })
            .collect();
        let mut table = Self {
            memory,
            width,
            entries: raw,
            default,
            index: HashMap::new(),
        };
        table.validate_and_index()?;
        Ok(table)
    }

    /// Parse a table from its JSON form.
    ///
    /// # Errors
    ///
    /// Returns [`Error::InvalidParameter`] for syntactically valid JSON with
    /// bad contents, or a message naming the JSON error otherwise.
    pub fn from_json(text: &str) -> Result<Self> {
        let mut table: FailureTable = serde_json::from_str(text)
            .map_err(|e| Error::param(format!("failure-table JSON: {e}")))?;
        table.validate_and_index()?;
        Ok(table)
    }

    /// Serialize the table to pretty JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("table serializes")
    }

    /// Number of history rows a state must carry.
    pub fn memory(&self) -> usize {
        self.memory
    }

    /// Gate width the table applies to.
    pub fn width(&self) -> usize {
        self.width
    }

    fn validate_and_index(&mut self) -> Result<()> {
        if self.memory == 0 {
            return Err(Error::param("table memory must be at least 1".into()));
        }
        if self.width == 0 || self.width > 64 {
            return Err(Error::param(format!(
                "table width must be in 1..=64, got {}",
                self.width
            )));
        }
        if let Some(d) = self.default {
            crate::util::check_prob_range("table default", d, 0.0, 1.0)?;
        }
        self.index.clear();
        for (i, entry) in self.entries.iter().enumerate() {
            crate::util::check_prob_range("table entry probability", entry.prob, 0.0, 1.0)?;
            if entry.rows.len() != self.memory {
                return Err(Error::param(format!(
                    "table entry {i} has {} rows, table memory is {}",
                    entry.rows.len(),
                    self.memory
                )));
            }
            let mut key = Vec::with_capacity(self.memory);
            for row in &entry.rows {
                if row.len() != self.width {
                    return Err(Error::param(format!(
                        "table entry {i} has a row of width {}, table width is {}",
                        row.len(),
                        self.width
                    )));
                }
                crate::util::check_bits("table entry row", row)?;
                let mut mask = 0u64;
                for (b, &bit) in row.iter().enumerate() {
                    mask |= u64::from(bit) << b;
                }
                key.push(mask);
            }
            if self.index.insert(key, entry.prob).is_some() {
                return Err(Error::param(format!(
                    "table entry {i} repeats an earlier state"
                )));
            }
        }
        Ok(())
    }
}

/// Per-evaluation failure behavior of the XOR gates.
#[derive(Debug, Clone)]
pub enum FailureModel {
    /// Gates never fail.
    Reliable,
    /// Every evaluation fails independently with probability `eps`.
    VonNeumann {
        /// Failure probability per evaluation, in `[0, 1]`.
        eps: f64,
    },
    /// An evaluation fails with probability `eps_bar` iff the ideal output
    /// differs from the previous evaluation's ideal output.
    Gos {
        /// Failure probability per switching evaluation, in `[0, 1]`.
        eps_bar: f64,
    },
    /// Failure probability looked up from the gate's recent input rows.
    Table(FailureTable),
}

impl FailureModel {
    /// Validate the model's parameters.
    ///
    /// # Errors
    ///
    /// Returns [`Error::InvalidParameter`] when a probability lies outside
    /// `[0, 1]`.
    pub fn validate(&self) -> Result<()> {
        match self {
            FailureModel::Reliable => Ok(()),
            FailureModel::VonNeumann { eps } => {
                crate::util::check_prob_range("eps", *eps, 0.0, 1.0)
            }
            FailureModel::Gos { eps_bar } => {
                crate::util::check_prob_range("eps_bar", *eps_bar, 0.0, 1.0)
            }
            FailureModel::Table(_) => Ok(()), // validated at construction
        }
    }

    /// Number of input rows (current evaluation included) the model reads:
    /// 1 for [`Reliable`](Self::Reliable) and
    /// [`VonNeumann`](Self::VonNeumann), 2 for [`Gos`](Self::Gos), and the
    /// table's memory for [`Table`](Self::Table).
    pub fn memory(&self) -> usize {
        match self {
            FailureModel::Reliable | FailureModel::VonNeumann { .. } => 1,
            FailureModel::Gos { .. } => 2,
            FailureModel::Table(t) => t.memory(),
        }
    }

    /// `true` for models whose failure probability depends on the data.
    pub fn is_data_dependent(&self) -> bool {
        self.memory() > 1
    }

    /// Probability that the evaluation described by the *last* row of
    /// `state` fails.
    ///
    /// # Errors
    ///
    /// - [`Error::InvalidParameter`] if the model's parameters are invalid or
    ///   `state` has fewer rows than [`memory`](Self::memory) (or the wrong
    ///   width for a table model).
    /// - [`Error::UncoveredGateState`] for a table model with no matching
    ///   entry and no default.
    pub fn failure_prob(&self, state: &GateState) -> Result<f64> {
        self.validate()?;
        if state.rows().len() < self.memory() {
            return Err(Error::param(format!(
                "model needs {} input rows, state has {}",
                self.memory(),
                state.rows().len()
            )));
        }
        match self {
            FailureModel::Reliable => Ok(0.0),
            FailureModel::VonNeumann { eps } => Ok(*eps),
            FailureModel::Gos { eps_bar } => {
                let k = state.rows().len();
                if state.row_parity(k - 1) != state.row_parity(k - 2) {
                    Ok(*eps_bar)
                } else {
                    Ok(0.0)
                }
            }
            FailureModel::Table(t) => {
                if state.width() != t.width() {
                    return Err(Error::param(format!(
                        "table is for width-{} gates, state has width {}",
                        t.width(),
                        state.width()
                    )));
                }
                let k = state.rows().len();
                let key = &state.rows()[k - t.memory()..];
                if let Some(&p) = t.index.get(key) {
                    Ok(p)
                } else if let Some(d) = t.default {
                    Ok(d)
                } else {
                    Err(Error::UncoveredGateState(format!(
                        "no entry for rows {key:?} and no default"
                    )))
                }
            }
        }
    }

    /// Sample the gate's output for the evaluation in the last row of
    /// `state`: the ideal XOR of that row, complemented with probability
    /// [`failure_prob`](Self::failure_prob).
    ///
    /// # Errors
    ///
    /// Same conditions as [`failure_prob`](Self::failure_prob).
    pub fn sample_gate_output(&self, state: &GateState, rng: &mut impl Rng) -> Result<u8> {
        let p = self.failure_prob(state)?;
        let ideal = state.row_parity(state.rows().len() - 1);
        let fails = p > 0.0 && rng.gen::<f64>() < p;
        Ok(ideal ^ u8::from(fails))
    }
}

/// Count how many of variable `v`'s gates keep their ideal output unchanged
/// when the decoder input moves from codeword `x_prev` to codeword `x_cur`.
///
/// Gate `j` of variable `v` computes the XOR of the other `ρ-1` variables of
/// the `j`-th adjacent check; its output is stable iff an even number of
/// those inputs differ between the two words. Stable gates are the ones a
/// switching-failure model cannot upset on error-free inputs, so this count
/// is the quantity the closed-form analysis conditions on. For codewords the
/// difference is itself a codeword, which forces the count to be either `γ`
/// or `0`: every check parity of the difference word is zero, so the inputs
/// of gate `(v, j)` change parity exactly when `v` itself changes.
///
/// # Errors
///
/// Returns [`Error::InvalidParameter`] if `v` is out of range, either word
/// has the wrong length or non-bit entries, or either word fails the parity
/// checks.
pub fn stable_gate_count(
    graph: &TannerGraph,
    x_prev: &[u8],
    x_cur: &[u8],
    v: usize,
) -> Result<usize> {
    if v >= graph.n() {
        return Err(Error::param(format!(
            "variable {v} out of range for n={}",
            graph.n()
        )));
    }
    for (name, w) in [("x_prev", x_prev), ("x_cur", x_cur)] {
        if !graph.is_codeword(w)? {
            return Err(Error::param(format!("{name} is not a codeword")));
        }
    }
    let mut stable = 0;
    for &c in graph.checks_of(v) {
        let mut diff = 0u8;
        for &u in graph.vars_of(c) {
            if u != v {
                diff ^= x_prev[u] ^ x_cur[u];
            }
        }
        stable += usize::from(diff == 0);
    }
    Ok(stable)
}
