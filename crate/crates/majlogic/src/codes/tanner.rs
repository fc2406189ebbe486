//! Bipartite Tanner-graph representation of a regular parity-check matrix.

use crate::{Error, Result};

/// A `(γ, ρ)`-regular bipartite graph between `n` variable nodes and `m`
/// check nodes.
///
/// Every variable node has exactly `γ` adjacent checks and every check node
/// exactly `ρ` adjacent variables; parallel edges are rejected. Adjacency
/// lists are stored sorted ascending, so two graphs constructed from the same
/// edge set compare equal and serialize identically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TannerGraph {
    n: usize,
    m: usize,
    gamma: usize,
    rho: usize,
    var_to_check: Vec<Vec<usize>>,
    check_to_var: Vec<Vec<usize>>,
}

impl TannerGraph {
    /// Build a graph from `(check, variable)` edge pairs.
    ///
    /// # Errors
    ///
    /// - [`Error::InvalidParameter`] if `n == 0`, `m == 0`, or an endpoint is
    ///   out of range.
    /// - [`Error::IrregularGraph`] if an edge repeats or the degrees are not
    ///   uniform across all variables and across all checks (the failing node
    ///   is named in the message).
    pub fn from_edges(n: usize, m: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 || m == 0 {
            return Err(Error::param(format!(
                "graph must have at least one variable and one check, got n={n}, m={m}"
            )));
        }
        let mut var_to_check = vec![Vec::new(); n];
        let mut check_to_var = vec![Vec::new(); m];
        for &(c, v) in edges {
            if c >= m || v >= n {
                return Err(Error::param(format!(
                    "edge ({c}, {v}) out of range for m={m} checks, n={n} variables"
                )));
            }
            var_to_check[v].push(c);
            check_to_var[c].push(v);
        }
        for list in var_to_check.iter_mut().chain(check_to_var.iter_mut()) {
            list.sort_unstable();
        }
        for (v, list) in var_to_check.iter().enumerate() {
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::IrregularGraph(format!(
                    "repeated edge at variable {v}"
                )));
            }
        }
        let gamma = var_to_check[0].len();
        let rho = check_to_var[0].len();
        if gamma == 0 || rho == 0 {
            return Err(Error::IrregularGraph(
                "every node must have nonzero degree".into(),
            ));
        }
        for (v, list) in var_to_check.iter().enumerate() {
            if list.len() != gamma {
                return Err(Error::IrregularGraph(format!(
                    "variable {v} has degree {}, expected {gamma}",
                    list.len()
                )));
            }
        }
        for (c, list) in check_to_var.iter().enumerate() {
            if list.len() != rho {
                return Err(Error::IrregularGraph(format!(
                    "check {c} has degree {}, expected {rho}",
                    list.len()
                )));
            }
        }
        Ok(Self {
            n,
            m,
            gamma,
            rho,
            var_to_check,
            check_to_var,
        })
    }

    /// Number of variable nodes (code length).
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of check nodes (parity-check rows).
    pub fn m(&self) -> usize {
        self.m
    }

    /// Variable-node degree `γ`.
    pub fn gamma(&self) -> usize {
        self.gamma
    }

    /// Check-node degree `ρ`.
    pub fn rho(&self) -> usize {
        self.rho
    }

    /// Checks adjacent to variable `v`, sorted ascending.
    ///
    /// # Panics
    ///
    /// Panics if `v >= n`.
    pub fn checks_of(&self, v: usize) -> &[usize] {
        &self.var_to_check[v]
    }

    /// Variables adjacent to check `c`, sorted ascending.
    ///
    /// # Panics
    ///
    /// Panics if `c >= m`.
    pub fn vars_of(&self, c: usize) -> &[usize] {
        &self.check_to_var[c]
    }

    /// Parity of every check under `word`: entry `c` is
    /// `⊕_{v ∈ N(c)} word[v]`.
    ///
    /// # Errors
    ///
    /// Returns [`Error::InvalidParameter`] if `word` has the wrong length or
    /// non-bit entries.
    pub fn syndrome(&self, word: &[u8]) -> Result<Vec<u8>> {
        self.check_word(word)?;
        Ok(self
            .check_to_var
            .iter()
            .map(|vars| vars.iter().fold(0u8, |acc, &v| acc ^ word[v]))
            .collect())
    }

    /// `true` iff every check parity is zero under `word`.
    ///
    /// # Errors
    ///
    /// Same conditions as [`syndrome`](Self::syndrome).
    pub fn is_codeword(&self, word: &[u8]) -> Result<bool> {
        self.check_word(word)?;
        Ok(self
            .check_to_var
            .iter()
            .all(|vars| vars.iter().fold(0u8, |acc, &v| acc ^ word[v]) == 0))
    }

    pub(crate) fn check_word(&self, word: &[u8]) -> Result<()> {
        crate::util::check_bits("word", word)?;
        if word.len() != self.n {
            return Err(Error::param(format!(
                "word length {} does not match code length {}",
                word.len(),
                self.n
            )));
        }
        Ok(())
    }
}
