//! Seeded random graph generators for the property suites.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{cutvertices, Graph};
use crate::invariants::{girth, is_k4_minor_free};

/// A random K4-minor-free graph on `n` vertices.
///
/// Builds a random 2-tree (each new vertex joined to both ends of an
/// existing edge), keeps each edge with probability `keep`, and relabels the
/// vertices at random. Every K4-minor-free graph is a subgraph of a 2-tree,
/// so every such graph can come out.
pub fn random_series_parallel<R: Rng>(rng: &mut R, n: usize, keep: f64) -> Graph {
    let mut edges: Vec<(usize, usize)> = Vec::new();
    if n >= 2 {
        edges.push((0, 1));
    }
    for v in 2..n {
        let (a, b) = edges[rng.gen_range(0..edges.len())];
        edges.push((a, v));
        edges.push((b, v));
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut g = Graph::empty(n).unwrap();
    for (u, v) in edges {
        if rng.gen_bool(keep) {
            g.add_edge(perm[u], perm[v]).unwrap();
        }
    }
    g
}

/// A random 2-connected K4-minor-free block of girth at least 5: a cycle of
/// length 5 to 8 with up to two ears added where they keep both properties.
fn random_block<R: Rng>(rng: &mut R, max_n: usize) -> Graph {
    let len = rng.gen_range(5..=8.min(max_n));
    let mut g = Graph::cycle(len).unwrap();
    for _ in 0..rng.gen_range(0..=2) {
        let room = max_n - g.order();
        let ear = rng.gen_range(1..=4);
        if ear - 1 > room {
            continue;
        }
        let u = rng.gen_range(0..g.order());
        let v = rng.gen_range(0..g.order());
        if u == v || g.has_edge(u, v) {
            continue;
        }
        let mut h = g.clone();
        let mut prev = u;
        for _ in 0..ear - 1 {
            let w = h.add_vertex().unwrap();
            h.add_edge(prev, w).unwrap();
            prev = w;
        }
        h.add_edge(prev, v).unwrap();
        if girth(&h).at_least(5) && is_k4_minor_free(&h) {
            g = h;
        }
    }
    g
}

/// A random connected K4-minor-free graph of girth at least 5 with a
/// cutvertex, a cycle, and at most `max_n` vertices (`max_n >= 9`).
///
/// Random blocks and pendant edges are glued at random vertices, then the
/// vertices are relabelled at random.
pub fn random_girth5_with_cutvertex<R: Rng>(rng: &mut R, max_n: usize) -> Graph {
    assert!(max_n >= 9, "two 5-cycles need 9 vertices");
    loop {
        let mut g = random_block(rng, max_n - 1);
        while g.order() < max_n && rng.gen_bool(0.75) {
            let at = rng.gen_range(0..g.order());
            if rng.gen_bool(0.25) {
                let w = g.add_vertex().unwrap();
                g.add_edge(at, w).unwrap();
                continue;
            }
            let room = max_n - g.order() + 1;
            if room < 5 {
                break;
            }
            let b = random_block(rng, room);
            let offset = g.order();
            let mut map = vec![0; b.order()];
            for (i, slot) in map.iter_mut().enumerate() {
                *slot = if i == 0 { at } else { offset + i - 1 };
            }
            for _ in 1..b.order() {
                g.add_vertex().unwrap();
            }
            for (u, v) in b.edges() {
                g.add_edge(map[u], map[v]).unwrap();
            }
        }
        if cutvertices(&g).is_empty() {
            continue;
        }
        let mut perm: Vec<usize> = (0..g.order()).collect();
        perm.shuffle(rng);
        return g.permuted(&perm);
    }
}

/// A uniformly random labelled graph where each edge appears with
/// probability `p`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    for j in 1..n {
        for i in 0..j {
            if rng.gen_bool(p) {
                g.add_edge(i, j).unwrap();
            }
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::connected_components;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn series_parallel_samples() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..200 {
            let n = rng.gen_range(1..=10);
            let g = random_series_parallel(&mut rng, n, 0.8);
            assert_eq!(g.order(), n);
            assert!(is_k4_minor_free(&g));
        }
        let full = random_series_parallel(&mut rng, 10, 1.0);
        assert_eq!(full.edge_count(), 2 * 10 - 3);
    }

    #[test]
    fn cutvertex_samples() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..100 {
            let g = random_girth5_with_cutvertex(&mut rng, 12);
            assert!(g.order() <= 12);
            assert!(girth(&g).at_least(5) && girth(&g).finite().is_some());
            assert!(is_k4_minor_free(&g));
            assert_eq!(connected_components(&g).len(), 1);
            assert!(!cutvertices(&g).is_empty());
        }
    }
}
