//! Canonical labelling of small graphs.
//!
//! The graph6 body lists the upper triangle column by column, so the bits
//! contributed by the vertex placed at position `j` (its adjacency to
//! positions `0..j`) all come before any bit of later positions. A labelling
//! can therefore be built one position at a time while comparing the string
//! prefix it fixes. Two prunings are exact:
//!
//! * at each position only candidates whose new column is extremal among the
//!   remaining vertices can lead to the extremal string;
//! * twins (vertices with equal neighbourhoods apart from each other) are
//!   swapped by an automorphism that fixes everything already placed, so one
//!   representative per twin class is enough.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::minor::MAX_CERTIFICATE_N;
use crate::graph::{decode_graph6, encode_graph6, Graph, GraphError};

/// Lexicographically least graph6 string over all relabellings of a graph.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CanonicalForm(String);

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn to_graph(&self) -> Graph {
        decode_graph6(&self.0).expect("canonical forms hold valid graph6")
    }

    pub fn into_string(self) -> String {
        self.0
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.0)
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

fn check_size(g: &Graph) -> Result<(), GraphError> {
    if g.order() > MAX_CERTIFICATE_N {
        Err(GraphError::SizeLimit {
            n: g.order(),
            limit: MAX_CERTIFICATE_N,
        })
    } else {
        Ok(())
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, GraphError> {
    let perm = canonical_labeling(g)?;
    Ok(CanonicalForm(encode_graph6(&g.permuted(&perm))))
}

/// Relabelling `perm` (vertex `v` becomes `perm[v]`) that realises the
/// canonical form.
pub fn canonical_labeling(g: &Graph) -> Result<Vec<usize>, GraphError> {
    check_size(g)?;
    let n = g.order();
    let mut s = MinSearch {
        adj: g.adjacency(),
        n,
        order: [0; 16],
        cur: [0; 16],
        best: [0; 16],
        best_order: [0; 16],
        have_best: false,
    };
    s.search(0, g.vertices().bits(), &[0; 16]);
    let mut perm = vec![0; n];
    for (pos, &v) in s.best_order[..n].iter().enumerate() {
        perm[v] = pos;
    }
    Ok(perm)
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool, GraphError> {
    check_size(g)?;
    check_size(h)?;
    if g.order() != h.order() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return Ok(false);
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}

#[inline]
fn twins(adj: &[u64], v: usize, w: usize) -> bool {
    (adj[v] ^ adj[w]) & !(1u64 << v | 1u64 << w) == 0
}

/// Next-level column keys after placing `p`: each key gains one low bit.
#[inline]
fn shift_keys(adj: &[u64], keys: &[u64; 16], remaining: u64, p: usize) -> [u64; 16] {
    let mut next = [0u64; 16];
    let mut r = remaining;
    while r != 0 {
        let w = r.trailing_zeros() as usize;
        r &= r - 1;
        next[w] = keys[w] << 1 | (adj[w] >> p & 1);
    }
    next
}

struct MinSearch<'a> {
    adj: &'a [u64],
    n: usize,
    order: [usize; 16],
    cur: [u64; 16],
    best: [u64; 16],
    best_order: [usize; 16],
    have_best: bool,
}

impl MinSearch<'_> {
    fn search(&mut self, depth: usize, remaining: u64, keys: &[u64; 16]) {
        if depth == self.n {
            if !self.have_best || self.cur[..self.n] < self.best[..self.n] {
                self.best = self.cur;
                self.best_order = self.order;
                self.have_best = true;
            }
            return;
        }
        let mut kmin = u64::MAX;
        let mut r = remaining;
        while r != 0 {
            let v = r.trailing_zeros() as usize;
            r &= r - 1;
            kmin = kmin.min(keys[v]);
        }
        if self.have_best {
            let ord = self.cur[..depth]
                .cmp(&self.best[..depth])
                .then(kmin.cmp(&self.best[depth]));
            if ord == Ordering::Greater {
                return;
            }
        }
        self.cur[depth] = kmin;
        let mut tried = 0u64;
        let mut r = remaining;
        while r != 0 {
            let v = r.trailing_zeros() as usize;
            r &= r - 1;
            if keys[v] != kmin {
                continue;
            }
            let mut t = tried;
            let mut dup = false;
            while t != 0 {
                let w = t.trailing_zeros() as usize;
                t &= t - 1;
                if twins(self.adj, v, w) {
                    dup = true;
                    break;
                }
            }
            if dup {
                continue;
            }
            tried |= 1u64 << v;
            self.order[depth] = v;
            let rest = remaining & !(1u64 << v);
            let next = shift_keys(self.adj, keys, rest, v);
            // a sibling may have lowered `best`; the prefix check above is
            // redone by the child
            self.cur[depth] = kmin;
            self.search(depth + 1, rest, &next);
        }
    }
}

/// True when no relabelling gives a lexicographically greater graph6 string.
///
/// This is the canonicity test of the orderly generator: with "greatest
/// string" as representative, deleting the last edge (in graph6 bit order)
/// of a representative yields a representative again.
pub(crate) fn is_max_canonical(g: &Graph) -> bool {
    let n = g.order();
    debug_assert!(n <= 16);
    let adj = g.adjacency();
    let mut own = [0u64; 16];
    for (j, slot) in own.iter_mut().enumerate().take(n) {
        let mut key = 0;
        for i in 0..j {
            key = key << 1 | (adj[j] >> i & 1);
        }
        *slot = key;
    }
    !exceeds(adj, n, &own, 0, g.vertices().bits(), &[0; 16])
}

/// Searches labellings whose prefix equals the identity's; true as soon as
/// one produces a greater column.
fn exceeds(
    adj: &[u64],
    n: usize,
    own: &[u64; 16],
    depth: usize,
    remaining: u64,
    keys: &[u64; 16],
) -> bool {
    if depth == n {
        return false;
    }
    let target = own[depth];
    let mut matching = 0u64;
    let mut r = remaining;
    while r != 0 {
        let v = r.trailing_zeros() as usize;
        r &= r - 1;
        match keys[v].cmp(&target) {
            Ordering::Greater => return true,
            Ordering::Equal => matching |= 1u64 << v,
            Ordering::Less => {}
        }
    }
    let mut tried = 0u64;
    let mut m = matching;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        let mut t = tried;
        let mut dup = false;
        while t != 0 {
            let w = t.trailing_zeros() as usize;
            t &= t - 1;
            if twins(adj, v, w) {
                dup = true;
                break;
            }
        }
        if dup {
            continue;
        }
        tried |= 1u64 << v;
        let rest = remaining & !(1u64 << v);
        let next = shift_keys(adj, keys, rest, v);
        if exceeds(adj, n, own, depth + 1, rest, &next) {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Reference: minimum over all n! relabellings.
    fn brute_min(g: &Graph) -> String {
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best = encode_graph6(g);
        permute_all(&mut perm, 0, &mut |p| {
            let s = encode_graph6(&g.permuted(p));
            if s < best {
                best = s;
            }
        });
        best
    }

    fn brute_max(g: &Graph) -> String {
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best = encode_graph6(g);
        permute_all(&mut perm, 0, &mut |p| {
            let s = encode_graph6(&g.permuted(p));
            if s > best {
                best = s;
            }
        });
        best
    }

    fn permute_all(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == p.len() {
            f(p);
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            permute_all(p, k + 1, f);
            p.swap(k, i);
        }
    }

    fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
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

    #[test]
    fn matches_brute_force_on_small_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let n = rng.gen_range(0..=7);
            let p = rng.gen_range(0.1..0.9);
            let g = random_graph(&mut rng, n, p);
            assert_eq!(canonical_form(&g).unwrap().as_str(), brute_min(&g), "{g:?}");
            assert_eq!(
                is_max_canonical(&g),
                encode_graph6(&g) == brute_max(&g),
                "{g:?}"
            );
        }
    }

    #[test]
    fn relabelling_invariance() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let n = rng.gen_range(1..=12);
            let p = rng.gen_range(0.1..0.6);
            let g = random_graph(&mut rng, n, p);
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            let h = g.permuted(&perm);
            assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
            assert!(are_isomorphic(&g, &h).unwrap());
        }
    }

    #[test]
    fn distinguishes_examples() {
        let c5 = Graph::cycle(5).unwrap();
        let p5 = Graph::path(5).unwrap();
        assert_ne!(canonical_form(&c5).unwrap(), canonical_form(&p5).unwrap());
        assert!(!are_isomorphic(&c5, &p5).unwrap());
        // C6 versus two disjoint triangles: same degree sequence
        let tt = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!are_isomorphic(&Graph::cycle(6).unwrap(), &tt).unwrap());
        assert!(canonical_form(&Graph::empty(15).unwrap()).is_err());
    }

    #[test]
    fn canonical_form_decodes_to_isomorphic_graph() {
        let g = Graph::from_edges(7, &[(0, 3), (3, 5), (5, 6), (6, 1), (1, 0), (2, 4)]).unwrap();
        let cf = canonical_form(&g).unwrap();
        let h = cf.to_graph();
        assert_eq!(canonical_form(&h).unwrap(), cf);
        assert_eq!(h.edge_count(), 6);
    }

    #[test]
    fn highly_symmetric_inputs_finish() {
        // empty and perfect matchings have huge automorphism groups
        let e = Graph::empty(14).unwrap();
        assert_eq!(canonical_form(&e).unwrap().as_str(), encode_graph6(&e));
        let m =
            Graph::from_edges(12, &(0..6).map(|i| (2 * i, 2 * i + 1)).collect::<Vec<_>>()).unwrap();
        assert!(canonical_form(&m).is_ok());
        let mut perm: Vec<usize> = (0..12).collect();
        perm.reverse();
        assert!(are_isomorphic(&m, &m.permuted(&perm)).unwrap());
    }
}
