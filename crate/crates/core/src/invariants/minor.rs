use crate::graph::{Graph, GraphError, VertexSet};

/// Exhaustive certificate searches refuse graphs above this size.
pub const MAX_CERTIFICATE_N: usize = 14;

/// Series-parallel recognition by degree-≤2 reduction.
///
/// Vertices of degree 0 or 1 are deleted. A degree-2 vertex is deleted and
/// its two neighbours are joined unless already adjacent, so the working
/// graph stays simple. The input is K4-minor-free iff the reduction empties
/// the graph; every component reduces independently.
pub fn is_k4_minor_free(g: &Graph) -> bool {
    let n = g.order();
    let mut adj = [0u64; 64];
    adj[..n].copy_from_slice(g.adjacency());
    let mut alive = g.vertices().bits();
    'outer: while alive != 0 {
        let mut rest = alive;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let nb = adj[v];
            match nb.count_ones() {
                0 | 1 => {}
                2 => {
                    let a = nb.trailing_zeros() as usize;
                    let b = (nb & (nb - 1)).trailing_zeros() as usize;
                    adj[a] |= 1 << b;
                    adj[b] |= 1 << a;
                }
                _ => continue,
            }
            for w in VertexSet::from_bits(nb) {
                adj[w] &= !(1u64 << v);
            }
            adj[v] = 0;
            alive &= !(1u64 << v);
            continue 'outer;
        }
        return false;
    }
    true
}

/// Searches for four disjoint connected vertex sets with an edge between
/// every two of them.
///
/// K4 has maximum degree 3, so it is a minor exactly when some subdivision
/// of it is a subgraph. The search tries every 4-set of vertices of degree
/// at least 3 as branch vertices and routes six internally disjoint paths
/// between them by backtracking. Each path interior is then absorbed into
/// the branch set of its first endpoint.
pub fn find_k4_minor(g: &Graph) -> Result<Option<[VertexSet; 4]>, GraphError> {
    if g.order() > MAX_CERTIFICATE_N {
        return Err(GraphError::SizeLimit {
            n: g.order(),
            limit: MAX_CERTIFICATE_N,
        });
    }
    let hubs: Vec<usize> = (0..g.order()).filter(|&v| g.degree(v) >= 3).collect();
    let mut router = Router {
        g,
        branch: [0; 4],
        paths: Vec::with_capacity(6),
    };
    for (ia, &a) in hubs.iter().enumerate() {
        for (ib, &b) in hubs.iter().enumerate().skip(ia + 1) {
            for (ic, &c) in hubs.iter().enumerate().skip(ib + 1) {
                for &d in hubs.iter().skip(ic + 1) {
                    router.branch = [a, b, c, d];
                    router.paths.clear();
                    let used = (1u64 << a) | (1u64 << b) | (1u64 << c) | (1u64 << d);
                    if router.route(0, used) {
                        return Ok(Some(router.branch_sets()));
                    }
                }
            }
        }
    }
    Ok(None)
}

const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

struct Router<'a> {
    g: &'a Graph,
    branch: [usize; 4],
    /// Interior vertices of each routed path, ordered from the first endpoint.
    paths: Vec<Vec<usize>>,
}

impl Router<'_> {
    fn route(&mut self, pair: usize, used: u64) -> bool {
        if pair == PAIRS.len() {
            return true;
        }
        if !self.degrees_feasible(pair, used) {
            return false;
        }
        let (x, y) = PAIRS[pair];
        let (x, y) = (self.branch[x], self.branch[y]);
        let mut interior = Vec::new();
        self.walk(pair, x, y, used, &mut interior)
    }

    /// Extends the partial path ending at `cur` towards `target`.
    fn walk(
        &mut self,
        pair: usize,
        cur: usize,
        target: usize,
        used: u64,
        interior: &mut Vec<usize>,
    ) -> bool {
        if self.g.has_edge(cur, target) {
            self.paths.push(interior.clone());
            if self.route(pair + 1, used) {
                return true;
            }
            self.paths.pop();
        }
        let free = self.g.adjacency()[cur] & !used;
        for w in VertexSet::from_bits(free) {
            interior.push(w);
            if self.walk(pair, w, target, used | 1u64 << w, interior) {
                return true;
            }
            interior.pop();
        }
        false
    }

    /// Every branch vertex needs one free incident edge per unrouted path.
    fn degrees_feasible(&self, pair: usize, used: u64) -> bool {
        for (i, &x) in self.branch.iter().enumerate() {
            let mut need = 0;
            let mut avail = (self.g.adjacency()[x] & !used).count_ones();
            for &(p, q) in &PAIRS[pair..] {
                let other = if p == i {
                    q
                } else if q == i {
                    p
                } else {
                    continue;
                };
                need += 1;
                if self.g.has_edge(x, self.branch[other]) {
                    avail += 1;
                }
            }
            if avail < need {
                return false;
            }
        }
        true
    }

    fn branch_sets(&self) -> [VertexSet; 4] {
        let mut sets = self.branch.map(VertexSet::singleton);
        for (&(p, _), interior) in PAIRS.iter().zip(&self.paths) {
            for &v in interior {
                sets[p].insert(v);
            }
        }
        sets
    }
}

/// Checks that `sets` is a K4 model in `g`: disjoint, each connected, and
/// pairwise joined by an edge.
pub fn is_k4_model(g: &Graph, sets: &[VertexSet; 4]) -> bool {
    for (i, a) in sets.iter().enumerate() {
        let Some(s) = a.first() else { return false };
        if !a.is_subset(g.vertices()) {
            return false;
        }
        if crate::graph::reach(g, s, a.bits()) != a.bits() {
            return false;
        }
        for b in &sets[i + 1..] {
            if !a.is_disjoint(*b) {
                return false;
            }
            let touch = a.iter().any(|v| !g.neighbors(v).is_disjoint(*b));
            if !touch {
                return false;
            }
        }
    }
    true
}
