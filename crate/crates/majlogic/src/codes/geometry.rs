//! LDPC codes from finite projective and affine planes over `GF(2^s)`.
//!
//! Both constructions give graphs of girth 6 (two distinct points share
//! exactly one line), which is what makes the gate-level analysis in
//! [`crate::analytic`] exact: the input sets of the `γ` XOR gates feeding one
//! majority vote are pairwise disjoint apart from the voted variable itself.

use super::{BinaryField, TannerGraph};
use crate::Result;

/// Which plane a [`GeometryCode`] was built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CodeFamily {
    /// Projective plane `PG(2, 2^s)`: variables are points, checks are lines.
    Projective,
    /// Affine plane `AG(2, 2^s)`: variables are lines, checks are points.
    Affine,
}

impl CodeFamily {
    /// Lower-case name used by file formats and the CLI (`"pg"` / `"ag"`).
    pub fn name(&self) -> &'static str {
        match self {
            CodeFamily::Projective => "pg",
            CodeFamily::Affine => "ag",
        }
    }
}

/// A finite-geometry LDPC code: the Tanner graph plus its construction
/// metadata.
#[derive(Debug, Clone)]
pub struct GeometryCode {
    /// The `(γ, ρ)`-regular Tanner graph.
    pub graph: TannerGraph,
    /// Which plane the graph came from.
    pub family: CodeFamily,
    /// Field degree: the plane is over `GF(2^s)`.
    pub s: u32,
    /// Known minimum distance of the code: `2^s + 2` for the projective
    /// family, `2^s + 1` for the affine family.
    pub min_distance: usize,
}

/// Build the projective-plane code over `GF(2^s)`.
///
/// Points and lines of `PG(2, q)`, `q = 2^s`, are the `q^2 + q + 1`
/// one-dimensional subspaces of `GF(q)^3`, enumerated by their normalized
/// representative (leading coordinate 1) in lexicographic order. Variable `v`
/// is point `v`, check `c` is line `c`, and they are adjacent iff the dot
/// product of the representatives vanishes in `GF(q)`.
///
/// The resulting graph has `n = m = q^2 + q + 1` and `γ = ρ = q + 1`.
///
/// # Errors
///
/// Returns [`crate::Error::InvalidParameter`] unless `1 <= s <= 6`.
pub fn build_pg(s: u32) -> Result<GeometryCode> {
    let field = BinaryField::new(s)?;
    let q = u32::from(field.order());
    let points = projective_points(&field);
    let count = (q * q + q + 1) as usize;
    debug_assert_eq!(points.len(), count);

    let mut edges = Vec::with_capacity(count * (q as usize + 1));
    for (c, line) in points.iter().enumerate() {
        for (v, point) in points.iter().enumerate() {
            let dot = (0..3).fold(0u16, |acc, i| {
                field.add(acc, field.mul(line[i], point[i]))
            });
            if dot == 0 {
                edges.push((c, v));
            }
        }
    }
    let graph = TannerGraph::from_edges(count, count, &edges)?;
    Ok(GeometryCode {
        graph,
        family: CodeFamily::Projective,
        s,
        min_distance: (1usize << s) + 2,
    })
}

/// Build the affine-plane code over `GF(2^s)`.
///
/// The plane `AG(2, q)`, `q = 2^s`, has `q^2` points `(a, b)` and `q^2 + q`
/// lines: the sloped lines `y = mx + c` (enumerated by `(m, c)` lexicographic)
/// followed by the vertical lines `x = c`. **Lines are the variables** and
/// points are the checks, so the graph has `n = q^2 + q`, `m = q^2`,
/// `γ = q` (points per line) and `ρ = q + 1` (lines through a point).
///
/// # Errors
///
/// Returns [`crate::Error::InvalidParameter`] unless `1 <= s <= 6`.
pub fn build_ag(s: u32) -> Result<GeometryCode> {
    let field = BinaryField::new(s)?;
    let q = usize::from(field.order());
    let n = q * q + q; // lines = variables
    let m = q * q; // points = checks

    let point_index = |a: usize, b: usize| a * q + b;
    let mut edges = Vec::with_capacity(n * q);
    // Sloped lines y = mx + c, line index m*q + c.
    for slope in 0..q {
        for c in 0..q {
            let line = slope * q + c;
            for x in 0..q {
                let y = field.add(field.mul(slope as u16, x as u16), c as u16);
                edges.push((point_index(x, usize::from(y)), line));
            }
        }
    }
    // Vertical lines x = c, line index q^2 + c.
    for c in 0..q {
        let line = q * q + c;
        for y in 0..q {
            edges.push((point_index(c, y), line));
        }
    }
    let graph = TannerGraph::from_edges(n, m, &edges)?;
    Ok(GeometryCode {
        graph,
        family: CodeFamily::Affine,
        s,
        min_distance: (1usize << s) + 1,
    })
}

/// Normalized homogeneous coordinates of the points of `PG(2, q)`, sorted
/// lexicographically: `(0,0,1)`, then `(0,1,a)`, then `(1,a,b)`.
fn projective_points(field: &BinaryField) -> Vec<[u16; 3]> {
    let q = field.order();
    let mut pts = Vec::new();
    pts.push([0, 0, 1]);
    for a in 0..q {
        pts.push([0, 1, a]);
    }
    for a in 0..q {
        for b in 0..q {
            pts.push([1, a, b]);
        }
    }
    pts
}
