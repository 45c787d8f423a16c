use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Graph, GraphError, VertexSet};

/// Cycle listing is exponential; refuse larger inputs.
pub const MAX_CYCLE_LISTING_N: usize = 14;

/// Shortest-path length, or [`Distance::Unreachable`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Distance {
    Finite(usize),
    Unreachable,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Unreachable => None,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Unreachable => f.write_str("unreachable"),
        }
    }
}

/// Breadth-first distance between `u` and `v`, one frontier word per layer.
pub fn distance(g: &Graph, u: usize, v: usize) -> Result<Distance, GraphError> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    let target = 1u64 << v;
    let mut seen = 1u64 << u;
    let mut frontier = seen;
    let mut d = 0;
    while frontier != 0 {
        if frontier & target != 0 {
            return Ok(Distance::Finite(d));
        }
        let mut next = 0;
        for w in VertexSet::from_bits(frontier) {
            next |= g.adjacency()[w];
        }
        frontier = next & !seen;
        seen |= next;
        d += 1;
    }
    Ok(Distance::Unreachable)
}

/// Vertices reachable from `start` inside `within` (which must contain `start`).
pub(crate) fn reach(g: &Graph, start: usize, within: u64) -> u64 {
    let adj = g.adjacency();
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        for w in VertexSet::from_bits(frontier) {
            next |= adj[w];
        }
        frontier = next & within & !seen;
        seen |= frontier;
    }
    seen
}

/// Components of the subgraph induced by `within`, sorted by least vertex.
pub(crate) fn components_within(g: &Graph, within: VertexSet) -> Vec<VertexSet> {
    let mut rest = within.bits();
    let mut out = Vec::new();
    while rest != 0 {
        let s = rest.trailing_zeros() as usize;
        let c = reach(g, s, within.bits());
        out.push(VertexSet::from_bits(c));
        rest &= !c;
    }
    out
}

/// Maximal connected vertex sets, sorted by least vertex.
pub fn connected_components(g: &Graph) -> Vec<VertexSet> {
    components_within(g, g.vertices())
}

/// Lowpoint DFS shared by [`cutvertices`] and [`blocks`].
struct LowLink<'a> {
    g: &'a Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    cut: VertexSet,
    edge_stack: Vec<(usize, usize)>,
    blocks: Vec<VertexSet>,
}

impl<'a> LowLink<'a> {
    fn run(g: &'a Graph) -> Self {
        let n = g.order();
        let mut ll = LowLink {
            g,
            disc: vec![usize::MAX; n],
            low: vec![0; n],
            time: 0,
            cut: VertexSet::EMPTY,
            edge_stack: Vec::new(),
            blocks: Vec::new(),
        };
        for r in 0..n {
            if ll.disc[r] == usize::MAX {
                let children = ll.dfs(r, usize::MAX);
                if children >= 2 {
                    ll.cut.insert(r);
                }
            }
        }
        ll
    }

    /// Returns the number of DFS children of `u`.
    fn dfs(&mut self, u: usize, parent: usize) -> usize {
        self.disc[u] = self.time;
        self.low[u] = self.time;
        self.time += 1;
        let mut children = 0;
        for w in self.g.neighbors(u) {
            if self.disc[w] == usize::MAX {
                children += 1;
                self.edge_stack.push((u, w));
                self.dfs(w, u);
                self.low[u] = self.low[u].min(self.low[w]);
                if self.low[w] >= self.disc[u] {
                    if parent != usize::MAX {
                        self.cut.insert(u);
                    }
                    let mut block = VertexSet::EMPTY;
                    while let Some((a, b)) = self.edge_stack.pop() {
                        block.insert(a);
                        block.insert(b);
                        if (a, b) == (u, w) {
                            break;
                        }
                    }
                    self.blocks.push(block);
                }
            } else if w != parent && self.disc[w] < self.disc[u] {
                self.edge_stack.push((u, w));
                self.low[u] = self.low[u].min(self.disc[w]);
            }
        }
        children
    }
}

/// Articulation points, ascending.
pub fn cutvertices(g: &Graph) -> Vec<usize> {
    LowLink::run(g).cut.to_vec()
}

/// Blocks (maximal 2-connected subgraphs and bridges) as vertex sets,
/// sorted. Isolated vertices form no block.
pub fn blocks(g: &Graph) -> Vec<VertexSet> {
    let mut b = LowLink::run(g).blocks;
    b.sort();
    b
}

/// All separating pairs `{u, v}` (u < v) of a connected graph without a
/// cutvertex, in lexicographic order.
pub fn two_cuts(g: &Graph) -> Result<Vec<(usize, usize)>, GraphError> {
    if connected_components(g).len() > 1 {
        return Err(GraphError::Precondition("graph is not connected".into()));
    }
    if let Some(&x) = cutvertices(g).first() {
        return Err(GraphError::Precondition(format!("graph has cutvertex {x}")));
    }
    let n = g.order();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let rest = g
                .vertices()
                .difference(VertexSet::singleton(u))
                .difference(VertexSet::singleton(v));
            if components_within(g, rest).len() >= 2 {
                out.push((u, v));
            }
        }
    }
    Ok(out)
}

/// Every simple cycle with at most `max_len` vertices, each once.
///
/// A cycle is reported starting at its least vertex and oriented so that
/// the smaller of that vertex's two cycle neighbours comes second. Output
/// is sorted by length, then lexicographically.
pub fn all_cycles(g: &Graph, max_len: usize) -> Result<Vec<Vec<usize>>, GraphError> {
    if g.order() > MAX_CYCLE_LISTING_N {
        return Err(GraphError::SizeLimit {
            n: g.order(),
            limit: MAX_CYCLE_LISTING_N,
        });
    }
    let mut out = Vec::new();
    let mut path = Vec::with_capacity(g.order());
    for s in 0..g.order() {
        // vertices above s only, so s is the least vertex of every cycle found
        let allowed = g.vertices().bits() & !((2u64 << s) - 1);
        path.clear();
        path.push(s);
        extend_cycles(g, s, allowed, 1u64 << s, &mut path, max_len, &mut out);
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

fn extend_cycles(
    g: &Graph,
    s: usize,
    allowed: u64,
    on_path: u64,
    path: &mut Vec<usize>,
    max_len: usize,
    out: &mut Vec<Vec<usize>>,
) {
    let last = *path.last().unwrap();
    if path.len() >= 3 && g.has_edge(last, s) && path[1] < last {
        out.push(path.clone());
    }
    if path.len() >= max_len {
        return;
    }
    for w in VertexSet::from_bits(g.adjacency()[last] & allowed & !on_path) {
        path.push(w);
        extend_cycles(g, s, allowed, on_path | 1u64 << w, path, max_len, out);
        path.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
        let off = a.order();
        let mut g = Graph::empty(off + b.order()).unwrap();
        for (u, v) in a.edges() {
            g.add_edge(u, v).unwrap();
        }
        for (u, v) in b.edges() {
            g.add_edge(u + off, v + off).unwrap();
        }
        g
    }

    #[test]
    fn distance_examples() {
        let c6 = Graph::cycle(6).unwrap();
        assert_eq!(distance(&c6, 0, 3).unwrap(), Distance::Finite(3));
        assert_eq!(distance(&c6, 2, 2).unwrap(), Distance::Finite(0));
        let two = disjoint_union(&Graph::cycle(3).unwrap(), &Graph::cycle(4).unwrap());
        assert_eq!(distance(&two, 0, 5).unwrap(), Distance::Unreachable);
        assert!(matches!(
            distance(&c6, 0, 6),
            Err(GraphError::VertexOutOfRange { vertex: 6, n: 6 })
        ));
    }

    #[test]
    fn component_examples() {
        let c5 = Graph::cycle(5).unwrap();
        let comps = connected_components(&c5);
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].len(), 5);
        let e3 = Graph::empty(3).unwrap();
        assert_eq!(
            connected_components(&e3),
            vec![
                VertexSet::singleton(0),
                VertexSet::singleton(1),
                VertexSet::singleton(2)
            ]
        );
        let two = disjoint_union(&Graph::cycle(3).unwrap(), &Graph::cycle(4).unwrap());
        let sizes: Vec<usize> = connected_components(&two).iter().map(|c| c.len()).collect();
        assert_eq!(sizes, vec![3, 4]);
    }

    #[test]
    fn cutvertex_examples() {
        let bowtie =
            Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        assert_eq!(cutvertices(&bowtie), vec![2]);
        assert_eq!(cutvertices(&Graph::cycle(5).unwrap()), Vec::<usize>::new());
        assert_eq!(cutvertices(&Graph::path(4).unwrap()), vec![1, 2]);
        assert_eq!(blocks(&bowtie).len(), 2);
        assert_eq!(blocks(&Graph::path(4).unwrap()).len(), 3);
    }

    #[test]
    fn two_cut_examples() {
        // brute force over pairs of C5: removing a non-adjacent pair leaves
        // an isolated vertex and an edge, an adjacent pair leaves a path
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(
            two_cuts(&c5).unwrap(),
            vec![(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)]
        );
        assert!(two_cuts(&Graph::complete(4).unwrap()).unwrap().is_empty());
        assert!(two_cuts(&Graph::path(3).unwrap()).is_err());
        assert!(two_cuts(&Graph::empty(2).unwrap()).is_err());
    }

    #[test]
    fn cycle_examples() {
        assert_eq!(
            all_cycles(&Graph::cycle(5).unwrap(), 10).unwrap(),
            vec![vec![0, 1, 2, 3, 4]]
        );
        let k4 = all_cycles(&Graph::complete(4).unwrap(), 4).unwrap();
        assert_eq!(k4.len(), 7);
        assert_eq!(k4.iter().filter(|c| c.len() == 3).count(), 4);
        assert!(all_cycles(&Graph::path(6).unwrap(), 6).unwrap().is_empty());
        assert!(all_cycles(&Graph::empty(15).unwrap(), 3).is_err());
    }

    #[test]
    fn cycle_rotation_is_canonical() {
        let c = all_cycles(&Graph::cycle(6).unwrap(), 6).unwrap();
        assert_eq!(c, vec![vec![0, 1, 2, 3, 4, 5]]);
        let k4 = all_cycles(&Graph::complete(4).unwrap(), 3).unwrap();
        assert_eq!(
            k4,
            vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]]
        );
    }
}
