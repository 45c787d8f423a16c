use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexSet};

/// Length of a shortest cycle; forests are [`Girth::Acyclic`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Girth {
    Finite(usize),
    Acyclic,
}

impl Girth {
    /// True when every cycle has length at least `g` (vacuous for forests).
    pub fn at_least(self, g: usize) -> bool {
        match self {
            Girth::Finite(x) => x >= g,
            Girth::Acyclic => true,
        }
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(x) => Some(x),
            Girth::Acyclic => None,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Acyclic => f.write_str("acyclic"),
        }
    }
}

/// Shortest cycle length via a breadth-first search from every vertex.
///
/// A non-tree edge `uw` met during the search from `r` closes a walk of
/// length `d(u) + d(w) + 1` that contains a cycle; the minimum over all
/// roots is attained on a shortest cycle.
pub fn girth(g: &Graph) -> Girth {
    let n = g.order();
    let mut best = usize::MAX;
    let mut dist = [usize::MAX; 64];
    let mut parent = [usize::MAX; 64];
    let mut queue = [0usize; 64];
    for r in 0..n {
        dist[..n].fill(usize::MAX);
        dist[r] = 0;
        parent[r] = usize::MAX;
        let (mut head, mut tail) = (0, 1);
        queue[0] = r;
        'bfs: while head < tail {
            let u = queue[head];
            head += 1;
            if 2 * dist[u] + 1 >= best {
                break;
            }
            for w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue[tail] = w;
                    tail += 1;
                } else if w != parent[u] {
                    best = best.min(dist[u] + dist[w] + 1);
                    if best == 3 {
                        break 'bfs;
                    }
                }
            }
        }
        if best == 3 {
            break;
        }
    }
    if best == usize::MAX {
        Girth::Acyclic
    } else {
        Girth::Finite(best)
    }
}

/// True when `v` is reachable from `u` by a path of at most `max_len` edges.
pub(crate) fn within_distance(g: &Graph, u: usize, v: usize, max_len: usize) -> bool {
    let adj = g.adjacency();
    let target = 1u64 << v;
    let mut seen = 1u64 << u;
    let mut frontier = seen;
    for _ in 0..max_len {
        let mut next = 0;
        for w in VertexSet::from_bits(frontier) {
            next |= adj[w];
        }
        if next & target != 0 {
            return true;
        }
        frontier = next & !seen;
        if frontier == 0 {
            return false;
        }
        seen |= frontier;
    }
    u == v
}
