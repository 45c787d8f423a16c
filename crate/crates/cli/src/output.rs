//! Text and JSON formatting. The binary prints exactly what these return.

use serde::Serialize;
use sp_extremal::enumerate::{BoundReport, ExtremalResult};
use sp_extremal::graph::{encode_graph6, Graph};
use sp_extremal::invariants::{
    canonical_form, find_k4_minor, girth, is_k4_minor_free, MAX_CERTIFICATE_N,
};
use sp_extremal::structure::{Decomposition, Prop1Report, ViolationKind};
use sp_extremal::suite::Item;

#[derive(Debug, Serialize)]
pub struct BoundRecord {
    pub n: usize,
    pub g: usize,
    pub bound: usize,
}

pub fn bound_text(r: &BoundRecord) -> String {
    format!("{}\n", r.bound)
}

pub fn json<T: Serialize>(value: &T) -> String {
    format!("{}\n", serde_json::to_string(value).expect("serialisable"))
}

#[derive(Debug, Serialize)]
pub struct CheckRecord {
    pub graph: String,
    pub n: usize,
    pub e: usize,
    /// `null` for forests.
    pub girth: Option<usize>,
    pub k4_minor_free: bool,
    /// Absent above the canonical labelling size limit.
    pub canonical: Option<String>,
    /// Branch sets of a K4 minor, when one exists and the graph is small
    /// enough to search.
    pub k4_minor: Option<Vec<Vec<usize>>>,
}

pub fn check_record(g: &Graph) -> CheckRecord {
    let small = g.order() <= MAX_CERTIFICATE_N;
    let free = is_k4_minor_free(g);
    CheckRecord {
        graph: encode_graph6(g),
        n: g.order(),
        e: g.edge_count(),
        girth: girth(g).finite(),
        k4_minor_free: free,
        canonical: small.then(|| canonical_form(g).unwrap().into_string()),
        k4_minor: (small && !free)
            .then(|| {
                find_k4_minor(g)
                    .unwrap()
                    .map(|sets| sets.iter().map(|s| s.to_vec()).collect())
            })
            .flatten(),
    }
}

pub fn check_text(r: &CheckRecord) -> String {
    let girth = r.girth.map_or("acyclic".to_owned(), |x| x.to_string());
    let mut s = format!(
        "{} n={} e={} girth={girth} k4-minor-free={}",
        r.graph, r.n, r.e, r.k4_minor_free
    );
    if let Some(c) = &r.canonical {
        s.push_str(&format!(" canonical={c}"));
    }
    if let Some(sets) = &r.k4_minor {
        s.push_str(&format!(" k4-minor={sets:?}"));
    }
    s.push('\n');
    s
}

#[derive(Debug, Serialize)]
pub struct BridgeRecord {
    pub interior: Vec<usize>,
    pub legs: Vec<(usize, usize)>,
    pub attachments: Vec<usize>,
}

#[derive(Debug, Serialize)]
pub struct DecompositionRecord {
    pub cycle: Vec<usize>,
    pub bridges: Vec<BridgeRecord>,
    pub chords: Vec<(usize, usize)>,
}

pub fn decomposition_record(d: &Decomposition) -> DecompositionRecord {
    DecompositionRecord {
        cycle: d.cycle.clone(),
        bridges: d
            .bridges
            .iter()
            .map(|b| BridgeRecord {
                interior: b.interior.to_vec(),
                legs: b.legs.clone(),
                attachments: b.attachments.clone(),
            })
            .collect(),
        chords: d.chords.clone(),
    }
}

pub fn decomposition_text(d: &DecompositionRecord) -> String {
    let mut s = format!("cycle {:?}\n", d.cycle);
    for b in &d.bridges {
        s.push_str(&format!(
            "bridge interior={:?} legs={:?} attachments={:?}\n",
            b.interior, b.legs, b.attachments
        ));
    }
    s.push_str(&format!("chords {:?}\n", d.chords));
    s
}

pub fn prop1_text(graph: &str, r: &Prop1Report) -> String {
    let mut s = format!(
        "{graph} cycles={} bridges={} chords={} max_legs={} max_attachments={} violations={}\n",
        r.cycles,
        r.bridges,
        r.chords,
        r.max_legs,
        r.max_attachments,
        r.violations.len()
    );
    for v in &r.violations {
        match &v.kind {
            ViolationKind::TooManyLegs => s.push_str(&format!(
                "  cycle {:?}: bridge {:?} has {} legs on {:?}\n",
                v.cycle, v.bridge.interior, v.bridge.legs, v.bridge.attachments
            )),
            ViolationKind::Crossing { with } => s.push_str(&format!(
                "  cycle {:?}: {:?} on {:?} crosses {:?} on {:?}\n",
                v.cycle, v.bridge.interior, v.bridge.attachments, with.interior, with.attachments
            )),
        }
    }
    s
}

/// Summary line, or with `list` the edge count followed by one graph6
/// string per class.
pub fn enumerate_text(r: &ExtremalResult, list: bool) -> String {
    if list {
        let mut s = format!("{}\n", r.max_edges);
        for c in &r.extremal {
            s.push_str(c.as_str());
            s.push('\n');
        }
        return s;
    }
    format!(
        "n={} g={} max_edges={} count={} nodes={} ms={}\n",
        r.params.n,
        r.params.g,
        r.max_edges,
        r.count(),
        r.nodes_explored,
        r.elapsed.as_millis()
    )
}

/// A `.g6` line file of the classes.
pub fn g6_lines(r: &ExtremalResult) -> String {
    r.extremal.iter().map(|c| format!("{c}\n")).collect()
}

pub fn bound_report_text(r: &BoundReport) -> String {
    let bound = r.bound.map_or("none".to_owned(), |b| b.to_string());
    format!(
        "n={} g={} max_edges={} bound={bound} within_bound={} tight={}\n",
        r.n, r.g, r.max_edges, r.within_bound, r.tight
    )
}

pub fn suite_text(items: &[Item]) -> String {
    let mut s: String = items.iter().map(|i| format!("{i}\n")).collect();
    let failed = items.iter().filter(|i| !i.pass).count();
    s.push_str(&format!(
        "{} passed, {failed} failed\n",
        items.len() - failed
    ));
    s
}
