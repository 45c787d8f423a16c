//! The built-in verification suite: one [`Item`] per checked claim, grouped
//! so a caller can run a subset.

use std::collections::BTreeSet;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::construct::{
    bound_even_girth, bound_girth5, g5_family, g5_long_path_edges, parse_catalog, subdivide, theta,
    H_CATALOG_G6,
};
use crate::enumerate::{extremal_search, ExtremalResult, SearchConfig, SearchMode};
use crate::graph::{all_cycles, connected_components, cutvertices, Graph};
use crate::invariants::{
    are_isomorphic, canonical_form, find_k4_minor, girth, is_k4_minor_free, is_k4_model,
    CanonicalForm, Girth, MAX_CERTIFICATE_N,
};
use crate::oracle::naive_extremal;
use crate::sample::{random_girth5_with_cutvertex, random_graph, random_series_parallel};
use crate::structure::{check_proposition1, make_two_connected, ViolationKind};

pub const GROUPS: [&str; 6] = [
    "even",
    "girth5",
    "bridges",
    "cutvertex",
    "oracle",
    "recognition",
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Item {
    pub id: &'static str,
    pub group: &'static str,
    pub title: &'static str,
    pub pass: bool,
    pub detail: String,
}

impl fmt::Display for Item {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.pass { "PASS" } else { "FAIL" };
        write!(
            f,
            "{verdict} {:<3} {:<11} {}: {}",
            self.id, self.group, self.title, self.detail
        )
    }
}

#[derive(Debug, Clone)]
pub struct SuiteOptions {
    /// Run only this group.
    pub only: Option<String>,
    /// Catalog text, one graph6 string per line.
    pub catalog: String,
    pub jobs: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            only: None,
            catalog: H_CATALOG_G6.to_owned(),
            jobs: 1,
        }
    }
}

/// Runs the selected groups in order.
pub fn run(opts: &SuiteOptions) -> Vec<Item> {
    let wants = |g: &str| opts.only.as_deref().is_none_or(|o| o == g);
    let catalog = parse_catalog(&opts.catalog).map_err(|e| e.to_string());
    let mut items = Vec::new();
    if wants("even") {
        items.push(even_girth_tightness());
        items.push(even_girth_uniqueness(opts.jobs));
    }
    if wants("girth5") {
        items.push(girth5_base_cases(opts.jobs));
        items.push(girth5_odd());
        items.push(girth5_even());
        let r = ten_vertex_search(opts.jobs);
        items.push(classification(&r, &catalog));
        items.push(signatures(&r));
        items.push(catalog_membership(&r, &catalog));
    }
    if wants("bridges") {
        items.push(bridge_legs(&catalog));
        items.push(bridge_attachments(&catalog));
    }
    if wants("cutvertex") {
        items.push(cutvertex_elimination());
    }
    if wants("oracle") {
        items.push(oracle_equivalence(opts.jobs));
    }
    if wants("recognition") {
        items.push(recognition(&reference_graphs(
            catalog.as_deref().unwrap_or(&[]),
        )));
    }
    items
}

fn item(
    id: &'static str,
    group: &'static str,
    title: &'static str,
    pass: bool,
    detail: String,
) -> Item {
    Item {
        id,
        group,
        title,
        pass,
        detail,
    }
}

fn search(n: usize, g: usize, jobs: usize) -> ExtremalResult {
    extremal_search(&SearchConfig::new(n, g, SearchMode::MaxAndEnumerate).with_jobs(jobs))
        .expect("parameters are within the search guards")
}

fn single_class_like(r: &ExtremalResult, h: &Graph) -> bool {
    r.count() == 1 && are_isomorphic(&r.extremal[0].to_graph(), h).unwrap()
}

/// theta(k, s) for 2 <= k <= 5 and 2 <= s <= 6: size, girth 2k, no K4 minor,
/// and the even-girth bound met with equality.
pub fn even_girth_tightness() -> Item {
    let mut bad = Vec::new();
    for k in 2..=5 {
        for s in 2..=6 {
            let t = theta(k, s).unwrap();
            let n = s * (k - 1) + 2;
            let ok = t.order() == n
                && t.edge_count() == k * s
                && girth(&t) == Girth::Finite(2 * k)
                && is_k4_minor_free(&t)
                && bound_even_girth(n, k).unwrap() == k * s;
            if !ok {
                bad.push(format!("theta({k},{s})"));
            }
        }
    }
    let detail = if bad.is_empty() {
        "20 theta graphs checked".into()
    } else {
        bad.join(", ")
    };
    item(
        "1",
        "even",
        "even-girth bound is tight on theta graphs",
        bad.is_empty(),
        detail,
    )
}

/// (n=8, g=6) has the single extremal class theta(3,3) with 9 edges, and
/// (n=6, g=4) the single class K_{2,4} with 8 edges.
pub fn even_girth_uniqueness(jobs: usize) -> Item {
    let a = search(8, 6, jobs);
    let b = search(6, 4, jobs);
    let pass = a.max_edges == 9
        && single_class_like(&a, &theta(3, 3).unwrap())
        && b.max_edges == 8
        && single_class_like(&b, &theta(2, 4).unwrap());
    let detail = format!(
        "(8,6): max {} with {} class(es); (6,4): max {} with {} class(es)",
        a.max_edges,
        a.count(),
        b.max_edges,
        b.count()
    );
    item(
        "2",
        "even",
        "theta graphs are the unique extremal graphs",
        pass,
        detail,
    )
}

/// Maxima 5, 6, 8 at n = 5, 6, 7 equal the girth-5 bound, and C6 is the
/// only extremal class at n = 6.
pub fn girth5_base_cases(jobs: usize) -> Item {
    let mut pass = true;
    let mut parts = Vec::new();
    for (n, want) in [(5, 5), (6, 6), (7, 8)] {
        let r = search(n, 5, jobs);
        pass &= r.max_edges == want && r.max_edges == bound_girth5(n).unwrap();
        if n == 6 {
            pass &= single_class_like(&r, &Graph::cycle(6).unwrap());
        }
        parts.push(format!(
            "n={n}: max {} with {} class(es)",
            r.max_edges,
            r.count()
        ));
    }
    item("3", "girth5", "girth-5 base cases", pass, parts.join("; "))
}

/// g5_family(s) for 2 <= s <= 5 meets the girth-5 bound at odd n.
pub fn girth5_odd() -> Item {
    let mut bad = Vec::new();
    for s in 2..=5 {
        let g = g5_family(s).unwrap();
        let ok = g.order() == 2 * s + 1
            && g.edge_count() == 3 * s - 1
            && g.edge_count() == bound_girth5(2 * s + 1).unwrap()
            && girth(&g) == Girth::Finite(5)
            && is_k4_minor_free(&g);
        if !ok {
            bad.push(format!("s={s}"));
        }
    }
    let detail = if bad.is_empty() {
        "s = 2..5".into()
    } else {
        bad.join(", ")
    };
    item(
        "4",
        "girth5",
        "girth-5 bound is tight for odd n",
        bad.is_empty(),
        detail,
    )
}

/// Subdividing any 3-path edge of g5_family(s - 1), 3 <= s <= 5, meets the
/// girth-5 bound at n = 2s. The girth is checked as computed: 5 for s >= 4,
/// while for s = 3 the base graph is C5 and the result is C6.
pub fn girth5_even() -> Item {
    let mut bad = Vec::new();
    let mut checked = 0;
    for s in 3..=5 {
        let base = g5_family(s - 1).unwrap();
        for e in g5_long_path_edges(s - 1).unwrap() {
            let g = subdivide(&base, e).unwrap();
            checked += 1;
            let want = if s == 3 { 6 } else { 5 };
            let ok = g.order() == 2 * s
                && g.edge_count() == 3 * s - 3
                && g.edge_count() == bound_girth5(2 * s).unwrap()
                && girth(&g) == Girth::Finite(want)
                && is_k4_minor_free(&g);
            if !ok {
                bad.push(format!("s={s} edge {e:?}"));
            }
        }
    }
    let detail = if bad.is_empty() {
        format!("{checked} subdivisions; girth 6 at s=3 (C6), 5 otherwise")
    } else {
        bad.join(", ")
    };
    item(
        "5",
        "girth5",
        "girth-5 bound is tight for even n",
        bad.is_empty(),
        detail,
    )
}

/// The exhaustive search at n = 10, girth 5.
pub fn ten_vertex_search(jobs: usize) -> ExtremalResult {
    search(10, 5, jobs)
}

fn forms(graphs: &[Graph]) -> BTreeSet<CanonicalForm> {
    graphs.iter().map(|g| canonical_form(g).unwrap()).collect()
}

/// Exactly eight classes at n = 10 with 12 edges, equal to the catalog.
pub fn classification(r: &ExtremalResult, catalog: &Result<Vec<Graph>, String>) -> Item {
    let title = "n=10 search gives exactly the 8 catalog graphs";
    let catalog = match catalog {
        Ok(c) => c,
        Err(e) => {
            return item(
                "6a",
                "girth5",
                title,
                false,
                format!("catalog unreadable: {e}"),
            )
        }
    };
    let found: BTreeSet<CanonicalForm> = r.extremal.iter().cloned().collect();
    let listed = forms(catalog);
    let two_connected = r
        .graphs()
        .iter()
        .filter(|g| cutvertices(g).is_empty())
        .count();
    let pass = r.max_edges == 12 && r.count() == 8 && found == listed;
    let detail = format!(
        "max {} with {} classes ({} 2-connected); {} of {} catalog graphs found; {} classes not in the catalog",
        r.max_edges,
        r.count(),
        two_connected,
        listed.intersection(&found).count(),
        listed.len(),
        found.difference(&listed).count()
    );
    item("6a", "girth5", title, pass, detail)
}

fn longest_cycle(g: &Graph) -> usize {
    all_cycles(g, g.order())
        .unwrap()
        .iter()
        .map(Vec::len)
        .max()
        .unwrap_or(0)
}

/// Among the n = 10 classes, exactly one has two degree-4 vertices and
/// exactly one has longest cycle 9.
pub fn signatures(r: &ExtremalResult) -> Item {
    let graphs = r.graphs();
    let two_deg4 = graphs
        .iter()
        .filter(|g| g.degrees().iter().filter(|&&d| d == 4).count() == 2)
        .count();
    let nine = graphs.iter().filter(|g| longest_cycle(g) == 9).count();
    let pass = two_deg4 == 1 && nine == 1;
    let detail = format!(
        "{two_deg4} classes with two degree-4 vertices; {nine} classes with longest cycle 9"
    );
    item(
        "6b",
        "girth5",
        "n=10 degree and cycle signatures are unique",
        pass,
        detail,
    )
}

/// Every catalog graph is a distinct extremal class found by the search.
pub fn catalog_membership(r: &ExtremalResult, catalog: &Result<Vec<Graph>, String>) -> Item {
    let title = "catalog graphs are distinct n=10 extremal classes";
    let catalog = match catalog {
        Ok(c) => c,
        Err(e) => {
            return item(
                "6c",
                "girth5",
                title,
                false,
                format!("catalog unreadable: {e}"),
            )
        }
    };
    let found: BTreeSet<CanonicalForm> = r.extremal.iter().cloned().collect();
    let listed = forms(catalog);
    let well_formed = catalog.iter().all(|g| {
        g.order() == 10 && g.edge_count() == 12 && girth(g).at_least(5) && is_k4_minor_free(g)
    });
    let pass = catalog.len() == 8 && listed.len() == 8 && well_formed && listed.is_subset(&found);
    let detail = format!(
        "{} graphs, {} distinct, well-formed: {well_formed}, all found: {}",
        catalog.len(),
        listed.len(),
        listed.is_subset(&found)
    );
    item("6c", "girth5", title, pass, detail)
}

fn bridge_corpus(catalog: &[Graph]) -> Vec<Graph> {
    let mut corpus = Vec::new();
    for k in 2..=4 {
        for s in 2..=4 {
            corpus.push(theta(k, s).unwrap());
        }
    }
    corpus.extend(catalog.iter().cloned());
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..200 {
        let n = rng.gen_range(3..=10);
        let keep = rng.gen_range(0.5..1.0);
        corpus.push(random_series_parallel(&mut rng, n, keep));
    }
    corpus
}

struct BridgeTally {
    graphs: usize,
    cycles: usize,
    leg_graphs: usize,
    crossing_graphs: usize,
    attachment_graphs: usize,
    example: Option<String>,
}

fn bridge_tally(catalog: &Result<Vec<Graph>, String>) -> Result<BridgeTally, String> {
    let catalog = catalog
        .as_ref()
        .map_err(|e| format!("catalog unreadable: {e}"))?;
    let mut t = BridgeTally {
        graphs: 0,
        cycles: 0,
        leg_graphs: 0,
        crossing_graphs: 0,
        attachment_graphs: 0,
        example: None,
    };
    for g in bridge_corpus(catalog) {
        let r = check_proposition1(&g).map_err(|e| format!("{g}: {e}"))?;
        t.graphs += 1;
        t.cycles += r.cycles;
        let legs = r
            .violations
            .iter()
            .any(|v| v.kind == ViolationKind::TooManyLegs);
        t.leg_graphs += legs as usize;
        t.crossing_graphs += r
            .violations
            .iter()
            .any(|v| v.kind != ViolationKind::TooManyLegs) as usize;
        t.attachment_graphs += (r.max_attachments > 2) as usize;
        if legs && t.example.is_none() {
            let v = r
                .violations
                .iter()
                .find(|v| v.kind == ViolationKind::TooManyLegs)
                .unwrap();
            t.example = Some(format!(
                "{g} cycle {:?} bridge {:?} with {} legs on attachments {:?}",
                v.cycle, v.bridge.interior, v.bridge.legs, v.bridge.attachments
            ));
        }
    }
    Ok(t)
}

/// Every bridge of every cycle has at most two legs and bridges do not
/// cross, over theta graphs, the catalog and 200 random series-parallel
/// graphs.
pub fn bridge_legs(catalog: &Result<Vec<Graph>, String>) -> Item {
    let title = "bridges have at most 2 legs and do not cross";
    match bridge_tally(catalog) {
        Err(e) => item("7", "bridges", title, false, e),
        Ok(t) => {
            let pass = t.leg_graphs == 0 && t.crossing_graphs == 0;
            let mut detail = format!(
                "{} graphs, {} cycles; {} graphs with a bridge of 3+ legs, {} with crossings",
                t.graphs, t.cycles, t.leg_graphs, t.crossing_graphs
            );
            if let Some(ex) = t.example {
                detail.push_str(&format!("; e.g. {ex}"));
            }
            item("7", "bridges", title, pass, detail)
        }
    }
}

/// The same corpus with legs counted by attachment vertex.
pub fn bridge_attachments(catalog: &Result<Vec<Graph>, String>) -> Item {
    let title = "bridges have at most 2 attachments and do not cross";
    match bridge_tally(catalog) {
        Err(e) => item("7b", "bridges", title, false, e),
        Ok(t) => {
            let pass = t.attachment_graphs == 0 && t.crossing_graphs == 0;
            let detail = format!(
                "{} graphs, {} cycles; {} graphs with 3+ attachments, {} with crossings",
                t.graphs, t.cycles, t.attachment_graphs, t.crossing_graphs
            );
            item("7b", "bridges", title, pass, detail)
        }
    }
}

/// make_two_connected on 100 random girth-5 series-parallel graphs with a
/// cutvertex keeps n, e, girth >= 5 and K4-minor-freeness and leaves no
/// cutvertex.
pub fn cutvertex_elimination() -> Item {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut bad = Vec::new();
    for _ in 0..100 {
        let g = random_girth5_with_cutvertex(&mut rng, 12);
        let ok = match make_two_connected(&g) {
            Ok(h) => {
                h.order() == g.order()
                    && h.edge_count() == g.edge_count()
                    && girth(&h).at_least(5)
                    && is_k4_minor_free(&h)
                    && connected_components(&h).len() == 1
                    && cutvertices(&h).is_empty()
            }
            Err(_) => false,
        };
        if !ok {
            bad.push(g.to_string());
        }
    }
    let detail = if bad.is_empty() {
        "100 graphs".into()
    } else {
        format!("failed on {}", bad.join(" "))
    };
    item(
        "8",
        "cutvertex",
        "cutvertex elimination preserves the class",
        bad.is_empty(),
        detail,
    )
}

/// The search agrees with brute force for 3 <= n <= 7 and g in {4, 5, 6}.
pub fn oracle_equivalence(jobs: usize) -> Item {
    let mut bad = Vec::new();
    for n in 3..=7 {
        for g in 4..=6 {
            let r = search(n, g, jobs);
            let (max, list) = naive_extremal(n, g).unwrap();
            if r.max_edges != max || r.extremal != list {
                bad.push(format!("({n},{g})"));
            }
        }
    }
    let detail = if bad.is_empty() {
        "15 (n, g) pairs".into()
    } else {
        bad.join(", ")
    };
    item(
        "9",
        "oracle",
        "search equals brute force",
        bad.is_empty(),
        detail,
    )
}

/// The constructed and extremal graphs used by items 1 to 6 that are small
/// enough for the certificate search.
pub fn reference_graphs(catalog: &[Graph]) -> Vec<Graph> {
    let mut out = Vec::new();
    for k in 2..=5 {
        for s in 2..=6 {
            out.push(theta(k, s).unwrap());
        }
    }
    for s in 2..=5 {
        out.push(g5_family(s).unwrap());
    }
    for s in 3..=5 {
        let base = g5_family(s - 1).unwrap();
        for e in g5_long_path_edges(s - 1).unwrap() {
            out.push(subdivide(&base, e).unwrap());
        }
    }
    for (n, g) in [(8, 6), (6, 4), (5, 5), (6, 5), (7, 5), (10, 5)] {
        out.extend(search(n, g, 1).graphs());
    }
    out.extend(catalog.iter().cloned());
    out.retain(|g| g.order() <= MAX_CERTIFICATE_N);
    out
}

/// Recognition agrees with the certificate search on 500 random graphs
/// with n <= 8 and on `extra`; every certificate is a valid K4 model.
pub fn recognition(extra: &[Graph]) -> Item {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let mut graphs: Vec<Graph> = (0..500)
        .map(|_| {
            let n = rng.gen_range(1..=8);
            let p = rng.gen_range(0.1..0.7);
            random_graph(&mut rng, n, p)
        })
        .collect();
    graphs.extend(extra.iter().cloned());
    let mut bad = Vec::new();
    let mut with_minor = 0;
    for g in &graphs {
        let cert = find_k4_minor(g).unwrap();
        with_minor += cert.is_some() as usize;
        let ok =
            is_k4_minor_free(g) == cert.is_none() && cert.is_none_or(|sets| is_k4_model(g, &sets));
        if !ok {
            bad.push(g.to_string());
        }
    }
    let detail = if bad.is_empty() {
        format!("{} graphs, {} with a K4 minor", graphs.len(), with_minor)
    } else {
        format!("disagreement on {}", bad.join(" "))
    };
    item(
        "10",
        "recognition",
        "recognition agrees with certificates",
        bad.is_empty(),
        detail,
    )
}
