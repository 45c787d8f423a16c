//! Brute-force reference for the extremal search: every labelled graph on
//! `n` vertices is tested directly.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::graph::{Graph, GraphError};
use crate::invariants::{canonical_form, girth, is_k4_minor_free, CanonicalForm};

/// Largest `n` the oracle accepts (`2^21` labelled graphs).
pub const MAX_ORACLE_N: usize = 7;

/// Maximum edge count over labelled graphs on `n` vertices with girth at
/// least `g` and no K4 minor, and the isomorphism classes attaining it.
pub fn naive_extremal(n: usize, g: usize) -> Result<(usize, Vec<CanonicalForm>), GraphError> {
    if n > MAX_ORACLE_N {
        return Err(GraphError::SizeLimit {
            n,
            limit: MAX_ORACLE_N,
        });
    }
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let total = 1u64 << pairs.len();
    let chunk = 1u64 << pairs.len().saturating_sub(6);
    let (best, graphs) = (0..total.div_ceil(chunk))
        .into_par_iter()
        .map(|c| {
            let mut best = 0usize;
            let mut found: Vec<Graph> = Vec::new();
            for mask in c * chunk..((c + 1) * chunk).min(total) {
                let m = mask.count_ones() as usize;
                if m < best {
                    continue;
                }
                let mut h = Graph::empty(n).unwrap();
                for (b, &(u, v)) in pairs.iter().enumerate() {
                    if mask >> b & 1 == 1 {
                        h.add_edge(u, v).unwrap();
                    }
                }
                if !girth(&h).at_least(g) || !is_k4_minor_free(&h) {
                    continue;
                }
                if m > best {
                    best = m;
                    found.clear();
                }
                found.push(h);
            }
            (best, found)
        })
        .reduce(
            || (0, Vec::new()),
            |a, b| match a.0.cmp(&b.0) {
                std::cmp::Ordering::Greater => a,
                std::cmp::Ordering::Less => b,
                std::cmp::Ordering::Equal => (a.0, a.1.into_iter().chain(b.1).collect()),
            },
        );
    let forms: BTreeSet<CanonicalForm> = graphs
        .iter()
        .map(canonical_form)
        .collect::<Result<_, _>>()?;
    Ok((best, forms.into_iter().collect()))
}
