//! Regenerates `catalog/h1-h8.g6` from an exhaustive search.
//!
//! Run with `cargo run --release -p sp-extremal --example derive_catalog`.
//! Only the 2-connected extremal classes are labelled. Each is matched from
//! embedding-free signatures; the program panics if the signatures do not
//! single out exactly one class per label. The ninth 2-connected class has
//! no label and is reported separately.

use sp_extremal::enumerate::{extremal_search, SearchConfig, SearchMode};
use sp_extremal::graph::{all_cycles, cutvertices, distance, Graph};
use sp_extremal::invariants::{girth, Girth};

fn signature(g: &Graph) -> &'static str {
    let deg = g.degrees();
    let of = |d: usize| (0..g.order()).filter(|&v| deg[v] == d).collect::<Vec<_>>();
    let (d4, d3) = (of(4), of(3));
    let has_9 = all_cycles(g, 9).unwrap().iter().any(|c| c.len() == 9);
    match (d4.len(), d3.len()) {
        (2, 0) if girth(g) == Girth::Finite(6) => "H8",
        (2, 0) => "H6",
        (0, 4) if has_9 => "unlisted",
        (0, 4) => "H3",
        (1, 2) => {
            let x = d4[0];
            let (y, z) = (d3[0], d3[1]);
            if has_9 {
                return "H1";
            }
            if g.has_edge(x, y) || g.has_edge(x, z) {
                return "H2";
            }
            let mut d: Vec<usize> = [y, z]
                .iter()
                .map(|&w| distance(g, x, w).unwrap().finite().unwrap())
                .collect();
            d.sort();
            match (d.as_slice(), g.has_edge(y, z)) {
                ([2, 3], _) => "H7",
                ([2, 2], false) => "H4",
                ([2, 2], true) => "H5",
                _ => "?",
            }
        }
        _ => "?",
    }
}

fn main() {
    let r = extremal_search(&SearchConfig::new(10, 5, SearchMode::MaxAndEnumerate)).unwrap();
    eprintln!(
        "max_edges={} classes={} nodes={} elapsed={:?}",
        r.max_edges,
        r.count(),
        r.nodes_explored,
        r.elapsed
    );
    let mut labelled: Vec<(&str, String)> = r
        .extremal
        .iter()
        .filter(|cf| cutvertices(&cf.to_graph()).is_empty())
        .map(|cf| (signature(&cf.to_graph()), cf.to_string()))
        .collect();
    labelled.sort();
    for (label, g6) in &labelled {
        eprintln!("{label} {g6} degrees={:?}", {
            let mut d = sp_extremal::graph::decode_graph6(g6).unwrap().degrees();
            d.sort_unstable_by(|a, b| b.cmp(a));
            d
        });
    }
    let labels: Vec<&str> = labelled.iter().map(|(l, _)| *l).collect();
    assert_eq!(
        labels,
        ["H1", "H2", "H3", "H4", "H5", "H6", "H7", "H8", "unlisted"],
        "ambiguous labels"
    );
    for (label, g6) in labelled {
        if label != "unlisted" {
            println!("{g6}");
        }
    }
}
