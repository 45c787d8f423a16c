use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use sp_extremal::enumerate::{extremal_search, SearchConfig, SearchMode};
use sp_extremal::graph::{
    all_cycles, connected_components, cutvertices, decode_graph6, distance, encode_graph6,
    Distance, Graph, VertexSet,
};
use sp_extremal::invariants::{canonical_form, girth, is_k4_minor_free, Girth};
use sp_extremal::sample::{random_girth5_with_cutvertex, random_series_parallel};
use sp_extremal::structure::{
    bridges, check_proposition1, crossing, cut_reduction, default_cut_choice, make_two_connected,
};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::empty(n).unwrap();
            let mut it = bits.into_iter();
            for j in 1..n {
                for i in 0..j {
                    if it.next().unwrap() {
                        g.add_edge(i, j).unwrap();
                    }
                }
            }
            g
        })
    })
}

fn graph_and_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

fn series_parallel(max_n: usize) -> impl Strategy<Value = Graph> {
    (any::<u64>(), 3..=max_n, 0.4f64..1.0).prop_map(|(seed, n, keep)| {
        random_series_parallel(&mut ChaCha8Rng::seed_from_u64(seed), n, keep)
    })
}

/// Number of components by a plain union-find.
fn component_count(g: &Graph) -> usize {
    let n = g.order();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for (u, v) in g.edges() {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        parent[a] = b;
    }
    (0..n).filter(|&v| find(&mut parent, v) == v).count()
}

/// Cycles as vertex sequences, found by trying every ordering of every
/// vertex subset.
fn naive_cycles(g: &Graph) -> BTreeSet<Vec<usize>> {
    fn orders(
        rest: &mut Vec<usize>,
        path: &mut Vec<usize>,
        g: &Graph,
        out: &mut BTreeSet<Vec<usize>>,
    ) {
        if rest.is_empty() {
            let k = path.len();
            if k >= 3 && path[1] < path[k - 1] && g.has_edge(path[k - 1], path[0]) {
                out.insert(path.clone());
            }
            return;
        }
        for i in 0..rest.len() {
            let v = rest.remove(i);
            if g.has_edge(*path.last().unwrap(), v) {
                path.push(v);
                orders(rest, path, g, out);
                path.pop();
            }
            rest.insert(i, v);
        }
    }
    let n = g.order();
    let mut out = BTreeSet::new();
    for mask in 0u32..1 << n {
        if mask.count_ones() < 3 {
            continue;
        }
        let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let mut rest = vs[1..].to_vec();
        orders(&mut rest, &mut vec![vs[0]], g, &mut out);
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn distance_is_relabelling_invariant((g, perm) in graph_and_perm(10)) {
        let h = g.permuted(&perm);
        for u in 0..g.order() {
            for v in 0..g.order() {
                prop_assert_eq!(distance(&g, u, v).unwrap(), distance(&h, perm[u], perm[v]).unwrap());
            }
        }
    }

    #[test]
    fn components_partition_the_vertices(g in graph(12)) {
        let comps = connected_components(&g);
        let mut seen = VertexSet::EMPTY;
        for c in &comps {
            prop_assert!(seen.is_disjoint(*c));
            seen = seen.union(*c);
            let first = c.first().unwrap();
            for v in c.iter() {
                prop_assert_ne!(distance(&g, first, v).unwrap(), Distance::Unreachable);
            }
        }
        prop_assert_eq!(seen, g.vertices());
        prop_assert_eq!(comps.len(), component_count(&g));
        let firsts: Vec<usize> = comps.iter().map(|c| c.first().unwrap()).collect();
        prop_assert!(firsts.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn cutvertices_match_remove_and_recount(g in graph(10)) {
        let base = component_count(&g);
        let naive: Vec<usize> = (0..g.order())
            .filter(|&v| {
                // removing an isolated vertex also removes a component
                component_count(&g.without_vertices(VertexSet::singleton(v)))
                    > base - usize::from(g.degree(v) == 0)
            })
            .collect();
        prop_assert_eq!(cutvertices(&g), naive);
    }

    #[test]
    fn graph6_round_trips(g in graph(12)) {
        prop_assert_eq!(decode_graph6(encode_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn cycle_listing_matches_subset_oracle(g in graph(7)) {
        let listed: BTreeSet<Vec<usize>> = all_cycles(&g, 7).unwrap().into_iter().collect();
        prop_assert_eq!(listed, naive_cycles(&g));
    }

    #[test]
    fn girth_is_relabelling_invariant_and_witnessed((g, perm) in graph_and_perm(9)) {
        let gi = girth(&g);
        prop_assert_eq!(gi, girth(&g.permuted(&perm)));
        let shortest = naive_cycles_len(&g);
        prop_assert_eq!(gi, shortest.map_or(Girth::Acyclic, Girth::Finite));
    }

    #[test]
    fn canonical_form_is_relabelling_invariant((g, perm) in graph_and_perm(10)) {
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&g.permuted(&perm)).unwrap());
    }

    #[test]
    fn crossing_is_symmetric(g in series_parallel(10)) {
        for c in all_cycles(&g, g.order()).unwrap() {
            let bs = bridges(&g, &c).unwrap();
            for a in &bs {
                for b in &bs {
                    prop_assert_eq!(crossing(a, b, &c).unwrap(), crossing(b, a, &c).unwrap());
                }
            }
        }
    }

    #[test]
    fn series_parallel_bridges_have_two_attachments(g in series_parallel(10)) {
        let r = check_proposition1(&g).unwrap();
        prop_assert!(r.max_attachments <= 2);
        prop_assert!(r.violations.iter().all(|v| v.bridge.legs > 2));
    }

    #[test]
    fn cut_reduction_preserves_the_class(seed in any::<u64>()) {
        let g = random_girth5_with_cutvertex(&mut ChaCha8Rng::seed_from_u64(seed), 12);
        let (x, v1, v2) = default_cut_choice(&g).unwrap();
        let h = cut_reduction(&g, x, v1, v2).unwrap();
        prop_assert_eq!((h.order(), h.edge_count()), (g.order(), g.edge_count()));
        prop_assert!(girth(&h).at_least(5));
        prop_assert!(is_k4_minor_free(&h));
        let t = make_two_connected(&g).unwrap();
        prop_assert_eq!((t.order(), t.edge_count()), (g.order(), g.edge_count()));
        prop_assert!(cutvertices(&t).is_empty());
        prop_assert!(girth(&t).at_least(5) && is_k4_minor_free(&t));
    }
}

fn naive_cycles_len(g: &Graph) -> Option<usize> {
    naive_cycles(g).iter().map(Vec::len).min()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn search_is_deterministic_and_pruning_safe(n in 3usize..=8, g in 4usize..=7, jobs in 0usize..=4) {
        let base = SearchConfig::new(n, g, SearchMode::MaxAndEnumerate);
        let a = extremal_search(&base).unwrap();
        let b = extremal_search(&base.with_jobs(jobs)).unwrap();
        let c = extremal_search(&base.with_pruning(false)).unwrap();
        prop_assert_eq!(a.max_edges, b.max_edges);
        prop_assert_eq!(&a.extremal, &b.extremal);
        prop_assert_eq!(a.max_edges, c.max_edges);
        prop_assert_eq!(&a.extremal, &c.extremal);
        prop_assert!(c.nodes_explored >= a.nodes_explored);
        for h in a.graphs() {
            prop_assert_eq!((h.order(), h.edge_count()), (n, a.max_edges));
            prop_assert!(naive_cycles_len(&h).is_none_or(|l| l >= g));
            prop_assert!(is_k4_minor_free(&h));
        }
        prop_assert!(a.extremal.windows(2).all(|w| w[0] < w[1]));
    }
}
