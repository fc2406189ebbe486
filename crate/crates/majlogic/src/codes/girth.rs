//! Shortest-cycle computation for Tanner graphs.

use super::TannerGraph;
use std::collections::VecDeque;

/// Length of a shortest cycle, or [`Girth::Infinite`] for forests.
///
/// Tanner graphs are bipartite, so any finite girth is an even number `>= 4`;
/// girth `>= 6` is equivalent to "no two checks share two variables".
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Girth {
    /// Shortest cycle length.
    Finite(usize),
    /// The graph is acyclic.
    Infinite,
}

impl Girth {
    /// The cycle length as `Some(len)`, or `None` when acyclic.
    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(g) => Some(g),
            Girth::Infinite => None,
        }
    }

    /// `true` iff the girth is finite and at least `g`.
    pub fn is_at_least(self, g: usize) -> bool {
        match self {
            Girth::Finite(x) => x >= g,
            Girth::Infinite => true,
        }
    }
}

impl std::fmt::Display for Girth {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => write!(f, "infinite"),
        }
    }
}

impl TannerGraph {
    /// Compute the girth of the bipartite graph.
    ///
    /// Runs one truncated BFS per variable node over the combined
    /// variable+check vertex set. During the BFS from root `r`, an edge
    /// between two already-discovered vertices `a` and `b` witnesses a closed
    /// walk of length `dist[a] + dist[b] + 1` through `r`; the minimum such
    /// witness over all roots is the girth. Every cycle contains a variable
    /// node, so variable roots suffice. Each BFS stops expanding beyond half
    /// the best cycle length found so far.
    pub fn girth(&self) -> Girth {
        let n = self.n();
        let total = n + self.m();
        let neighbors = |x: usize| -> &[usize] {
            if x < n {
                self.checks_of(x)
            } else {
                self.vars_of(x - n)
            }
        };
        // Map a vertex's neighbor to the combined index space.
        let to_combined = |x: usize, nb: usize| if x < n { nb + n } else { nb };

        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; total];
        let mut parent = vec![usize::MAX; total];
        let mut touched: Vec<usize> = Vec::new();
        let mut queue: VecDeque<usize> = VecDeque::new();

        for root in 0..n {
            for &t in &touched {
                dist[t] = usize::MAX;
                parent[t] = usize::MAX;
            }
            touched.clear();
            queue.clear();
            dist[root] = 0;
            touched.push(root);
            queue.push_back(root);
            while let Some(a) = queue.pop_front() {
                // A cycle through vertices at depth d has length >= 2d; once
                // 2*dist[a] >= best, no shorter cycle can be found here.
                if best != usize::MAX && 2 * dist[a] >= best {
                    break;
                }
                for &nb in neighbors(a) {
                    let b = to_combined(a, nb);
                    if b == parent[a] {
                        continue;
                    }
                    if dist[b] == usize::MAX {
                        dist[b] = dist[a] + 1;
                        parent[b] = a;
                        touched.push(b);
                        queue.push_back(b);
                    } else {
                        // Non-tree edge: closed walk through the root.
                        let cycle = dist[a] + dist[b] + 1;
                        if cycle < best {
                            best = cycle;
                        }
                    }
                }
            }
            if best == 4 {
                break; // bipartite minimum; cannot improve
            }
        }
        if best == usize::MAX {
            Girth::Infinite
        } else {
            Girth::Finite(best)
        }
    }
}
