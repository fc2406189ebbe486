//! Construction and inspection of regular LDPC codes.
//!
//! The codes used throughout this crate are the classic finite-geometry
//! constructions over `GF(2^s)`:
//!
//! - **Projective-plane codes** ([`build_pg`]): variables are the points of
//!   `PG(2, 2^s)`, checks are its lines. Both node degrees equal `2^s + 1`,
//!   the graph has girth 6, and the minimum distance is `2^s + 2`.
//! - **Affine-plane codes** ([`build_ag`]): variables are the *lines* of
//!   `AG(2, 2^s)` and checks are its points, giving variable degree `2^s`
//!   (the points on a line) and check degree `2^s + 1` (the lines through a
//!   point), girth 6, and minimum distance `2^s + 1`.
//!
//! [`TannerGraph`] is the common representation: a bipartite adjacency list
//! validated to be `(γ, ρ)`-regular with no repeated edges. Graphs round-trip
//! through the MacKay alist format ([`to_alist`]/[`from_alist`]), report their
//! [`girth`](TannerGraph::girth), can be exhaustively checked for vertex
//! expansion ([`check_expansion`](TannerGraph::check_expansion)), and yield a
//! `GF(2)` [`Encoder`] for sampling random codewords.

mod alist;
mod encode;
mod expansion;
mod geometry;
mod gf;
mod girth;
mod tanner;

pub use alist::{from_alist, to_alist};
pub use encode::Encoder;
pub use expansion::{ExpansionReport, ExpansionWitness};
pub use geometry::{build_ag, build_pg, CodeFamily, GeometryCode};
pub use gf::BinaryField;
pub use girth::Girth;
pub use tanner::TannerGraph;

/// Hamming distance between two equal-length bit words.
///
/// # Errors
///
/// Returns [`crate::Error::InvalidParameter`] if the words differ in length
/// or contain non-bit entries.
pub fn hamming_distance(a: &[u8], b: &[u8]) -> crate::Result<usize> {
    crate::util::check_bits("a", a)?;
    crate::util::check_bits("b", b)?;
    if a.len() != b.len() {
        return Err(crate::Error::InvalidParameter(format!(
            "hamming_distance requires equal lengths, got {} and {}",
            a.len(),
            b.len()
        )));
    }
    Ok(a.iter().zip(b).filter(|(x, y)| x != y).count())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hamming_distance_counts_differing_positions() {
        assert_eq!(hamming_distance(&[0, 1, 1, 0], &[1, 1, 0, 0]).unwrap(), 2);
        assert_eq!(hamming_distance(&[], &[]).unwrap(), 0);
    }

    #[test]
    fn hamming_distance_rejects_bad_input() {
        assert!(hamming_distance(&[0, 1], &[1]).is_err());
        assert!(hamming_distance(&[0, 2], &[1, 1]).is_err());
    }
}
