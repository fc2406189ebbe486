//! `GF(2)` encoder: null-space basis of the parity-check matrix.

use super::TannerGraph;
use crate::{Error, Result};
use rand::Rng;

/// An encoder for the code defined by a [`TannerGraph`].
///
/// Construction performs Gauss–Jordan elimination on the parity-check matrix
/// over `GF(2)` and stores a basis of its null space; every codeword is a
/// unique `GF(2)` combination of the basis vectors.
#[derive(Debug, Clone)]
pub struct Encoder {
    n: usize,
    rank: usize,
    basis: Vec<Vec<u8>>,
}

impl Encoder {
    /// Build the encoder for `graph`'s code.
    pub fn from_graph(graph: &TannerGraph) -> Self {
        let n = graph.n();
        let words = n.div_ceil(64);
        let mut rows: Vec<Vec<u64>> = (0..graph.m())
            .map(|c| {
                let mut row = vec![0u64; words];
                for &v in graph.vars_of(c) {
                    row[v / 64] |= 1 << (v % 64);
                }
                row
            })
            .collect();

        // Gauss–Jordan to reduced row-echelon form.
        let mut pivot_cols: Vec<usize> = Vec::new();
        let mut r = 0usize;
        for col in 0..n {
            let bit = |row: &[u64]| row[col / 64] >> (col % 64) & 1 == 1;
            let Some(src) = (r..rows.len()).find(|&i| bit(&rows[i])) else {
                continue;
            };
            rows.swap(r, src);
            let pivot_row = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != r && bit(row) {
                    for (w, p) in row.iter_mut().zip(&pivot_row) {
                        *w ^= p;
                    }
                }
            }
            pivot_cols.push(col);
            r += 1;
            if r == rows.len() {
                break;
            }
        }
        let rank = r;

        // One basis vector per free column f: set x_f = 1 and read each pivot
        // coordinate off its reduced row.
        let mut is_pivot = vec![false; n];
        for &c in &pivot_cols {
            is_pivot[c] = true;
        }
        let mut basis = Vec::with_capacity(n - rank);
        for f in 0..n {
            if is_pivot[f] {
                continue;
            }
            let mut v = vec![0u8; n];
            v[f] = 1;
            for (i, &p) in pivot_cols.iter().enumerate() {
                v[p] = (rows[i][f / 64] >> (f % 64) & 1) as u8;
            }
            basis.push(v);
        }
        Self { n, rank, basis }
    }

    /// Code length `n`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Code dimension `k = n - rank(H)`.
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Rank of the parity-check matrix over `GF(2)`.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// The stored null-space basis vectors (each of length `n`).
    pub fn basis(&self) -> &[Vec<u8>] {
        &self.basis
    }

    /// Encode a message of `dimension()` bits as the corresponding basis
    /// combination.
    ///
    /// # Errors
    ///
    /// Returns [`Error::InvalidParameter`] if `message` has the wrong length
    /// or non-bit entries.
    pub fn encode(&self, message: &[u8]) -> Result<Vec<u8>> {
        crate::util::check_bits("message", message)?;
        if message.len() != self.dimension() {
            return Err(Error::param(format!(
                "message length {} does not match code dimension {}",
                message.len(),
                self.dimension()
            )));
        }
        let mut word = vec![0u8; self.n];
        for (bit, basis_vec) in message.iter().zip(&self.basis) {
            if *bit == 1 {
                for (w, b) in word.iter_mut().zip(basis_vec) {
                    *w ^= *b;
                }
            }
        }
        Ok(word)
    }

    /// Draw a uniformly random codeword (uniform over the full code,
    /// including the zero word).
    pub fn random_codeword(&self, rng: &mut impl Rng) -> Vec<u8> {
        let message: Vec<u8> = (0..self.dimension()).map(|_| rng.gen_range(0..=1)).collect();
        self.encode(&message).expect("generated message is valid")
    }

    /// Exact minimum distance by enumerating all nonzero codewords.
    ///
    /// Returns `None` for the trivial code of dimension zero.
    ///
    /// # Errors
    ///
    /// Returns [`Error::TooLarge`] if the dimension exceeds 24 (&gt; 16M
    /// codewords).
    pub fn min_distance_by_enumeration(&self) -> Result<Option<usize>> {
        let k = self.dimension();
        if k == 0 {
            return Ok(None);
        }
        if k > 24 {
            return Err(Error::TooLarge(format!(
                "minimum-distance enumeration needs 2^{k} codewords; limit is 2^24"
            )));
        }
        // Gray-code walk: flip one basis vector per step.
        let words = self.n.div_ceil(64);
        let packed: Vec<Vec<u64>> = self
            .basis
            .iter()
            .map(|v| {
                let mut w = vec![0u64; words];
                for (i, &b) in v.iter().enumerate() {
                    if b == 1 {
                        w[i / 64] |= 1 << (i % 64);
                    }
                }
                w
            })
            .collect();
        let mut current = vec![0u64; words];
        let mut best = usize::MAX;
        for step in 1u64..(1u64 << k) {
            let flip = step.trailing_zeros() as usize;
            for (c, p) in current.iter_mut().zip(&packed[flip]) {
                *c ^= p;
            }
            let weight: u32 = current.iter().map(|w| w.count_ones()).sum();
            best = best.min(weight as usize);
        }
        Ok(Some(best))
    }
}
