//! Bridges of a cycle and the cutvertex-elimination rewrite.
//!
//! A bridge of a cycle `C` is a component of `G - C` together with its legs,
//! the edges from the component to `C`. Chords of `C` have no interior and are
//! listed separately by [`decompose`].

use serde::Serialize;
use thiserror::Error;

use crate::graph::{
    all_cycles, blocks, components_within, connected_components, cutvertices, reach, Graph,
    GraphError, VertexSet,
};
use crate::invariants::{girth, is_k4_minor_free};

/// Largest order accepted by [`check_proposition1`], the cycle listing limit.
pub const MAX_PROP1_N: usize = crate::graph::MAX_CYCLE_LISTING_N;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("not a cycle of the graph: {0:?}")]
    NotACycle(Vec<usize>),
    #[error("bridges were computed against different cycles")]
    CycleMismatch,
    #[error("graph has a K4 minor")]
    HasK4Minor,
    #[error("girth is below 5")]
    ShortCycle,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is a forest")]
    Acyclic,
    #[error("graph has no cutvertex")]
    NoCutvertex,
    #[error("vertex {0} is not a cutvertex")]
    NotCutvertex(usize),
    #[error("{v1} and {v2} must be neighbours of {x} in different components of G - {x}")]
    NotSeparated { x: usize, v1: usize, v2: usize },
    #[error("graph has {n} vertices, need at least {min}")]
    TooSmall { n: usize, min: usize },
}

/// One bridge of a cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bridge {
    /// Vertices of the component of `G - C`.
    pub interior: VertexSet,
    /// Legs as `(interior vertex, cycle vertex)`, sorted.
    pub legs: Vec<(usize, usize)>,
    /// Cycle endpoints of the legs, each once, in cycle order.
    pub attachments: Vec<usize>,
    /// The normalised cycle the bridge belongs to.
    pub cycle: Vec<usize>,
}

/// Bridges and chords of one cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub cycle: Vec<usize>,
    pub bridges: Vec<Bridge>,
    /// Edges `(u, v)`, `u < v`, joining non-consecutive cycle vertices.
    pub chords: Vec<(usize, usize)>,
}

/// Rotates a cycle to start at its least vertex, followed by the smaller of
/// its two neighbours.
pub fn normalize_cycle(cycle: &[usize]) -> Vec<usize> {
    let len = cycle.len();
    if len == 0 {
        return Vec::new();
    }
    let start = (0..len).min_by_key(|&i| cycle[i]).unwrap();
    let fwd: Vec<usize> = (0..len).map(|i| cycle[(start + i) % len]).collect();
    if len > 2 && fwd[len - 1] < fwd[1] {
        let mut rev = vec![fwd[0]];
        rev.extend(fwd[1..].iter().rev());
        rev
    } else {
        fwd
    }
}

fn checked_cycle(g: &Graph, cycle: &[usize]) -> Result<Vec<usize>, StructureError> {
    let bad = || StructureError::NotACycle(cycle.to_vec());
    if cycle.len() < 3 {
        return Err(bad());
    }
    let mut seen = VertexSet::EMPTY;
    for &v in cycle {
        g.check_vertex(v)?;
        if seen.contains(v) {
            return Err(bad());
        }
        seen.insert(v);
    }
    let len = cycle.len();
    if (0..len).any(|i| !g.has_edge(cycle[i], cycle[(i + 1) % len])) {
        return Err(bad());
    }
    Ok(normalize_cycle(cycle))
}

/// Splits `G - C` into bridges and lists the chords of `C`.
pub fn decompose(g: &Graph, cycle: &[usize]) -> Result<Decomposition, StructureError> {
    let cycle = checked_cycle(g, cycle)?;
    let on_cycle: VertexSet = cycle.iter().copied().collect();
    let mut pos = vec![usize::MAX; g.order()];
    for (i, &v) in cycle.iter().enumerate() {
        pos[v] = i;
    }
    let bridges = components_within(g, g.vertices().difference(on_cycle))
        .into_iter()
        .map(|interior| {
            let mut legs = Vec::new();
            let mut att = VertexSet::EMPTY;
            for v in interior {
                for c in g.neighbors(v).intersection(on_cycle) {
                    legs.push((v, c));
                    att.insert(c);
                }
            }
            let mut attachments = att.to_vec();
            attachments.sort_by_key(|&c| pos[c]);
            Bridge {
                interior,
                legs,
                attachments,
                cycle: cycle.clone(),
            }
        })
        .collect();
    let len = cycle.len();
    let chords = g
        .edges()
        .into_iter()
        .filter(|&(u, v)| {
            on_cycle.contains(u) && on_cycle.contains(v) && {
                let d = pos[u].abs_diff(pos[v]);
                d != 1 && d != len - 1
            }
        })
        .collect();
    Ok(Decomposition {
        cycle,
        bridges,
        chords,
    })
}

/// Bridges of `cycle`, ordered by least interior vertex. Chords are left out.
pub fn bridges(g: &Graph, cycle: &[usize]) -> Result<Vec<Bridge>, StructureError> {
    Ok(decompose(g, cycle)?.bridges)
}

/// True when two attachment lists interleave around `cycle`: there are
/// distinct `a1, a2` from `a` and `b1, b2` from `b` appearing as
/// `a1, b1, a2, b2` in cyclic order. Vertices not on the cycle are ignored.
pub fn attachments_cross(cycle: &[usize], a: &[usize], b: &[usize]) -> bool {
    let positions = |xs: &[usize]| -> Vec<usize> {
        let mut p: Vec<usize> = xs
            .iter()
            .filter_map(|x| cycle.iter().position(|c| c == x))
            .collect();
        p.sort_unstable();
        p.dedup();
        p
    };
    let (pa, pb) = (positions(a), positions(b));
    for (i, &a1) in pa.iter().enumerate() {
        for &a2 in &pa[i + 1..] {
            let inside = pb.iter().any(|&p| a1 < p && p < a2);
            let outside = pb.iter().any(|&p| p < a1 || p > a2);
            if inside && outside {
                return true;
            }
        }
    }
    false
}

/// Whether two bridges of the same cycle cross.
pub fn crossing(b1: &Bridge, b2: &Bridge, cycle: &[usize]) -> Result<bool, StructureError> {
    let c = normalize_cycle(cycle);
    if b1.cycle != c || b2.cycle != c {
        return Err(StructureError::CycleMismatch);
    }
    if b1 == b2 {
        return Ok(false);
    }
    Ok(attachments_cross(&c, &b1.attachments, &b2.attachments))
}

/// A bridge or chord as it appears in a report. Chords have an empty interior.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Part {
    pub interior: Vec<usize>,
    pub legs: usize,
    pub attachments: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ViolationKind {
    TooManyLegs,
    Crossing { with: Part },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub cycle: Vec<usize>,
    pub bridge: Part,
    #[serde(flatten)]
    pub kind: ViolationKind,
}

/// Result of checking every cycle of a graph.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Prop1Report {
    pub cycles: usize,
    pub bridges: usize,
    pub chords: usize,
    pub max_legs: usize,
    pub max_attachments: usize,
    /// Every bridge of every cycle has exactly two legs.
    pub all_two_legs: bool,
    pub violations: Vec<Violation>,
}

impl Prop1Report {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks, for every cycle, that bridges have at most two legs and that no
/// two bridges or chords cross. Requires a K4-minor-free graph.
pub fn check_proposition1(g: &Graph) -> Result<Prop1Report, StructureError> {
    if !is_k4_minor_free(g) {
        return Err(StructureError::HasK4Minor);
    }
    diagnose_proposition1(g)
}

/// [`check_proposition1`] without the K4-minor-freeness precondition.
pub fn diagnose_proposition1(g: &Graph) -> Result<Prop1Report, StructureError> {
    if g.order() > MAX_PROP1_N {
        return Err(GraphError::SizeLimit {
            n: g.order(),
            limit: MAX_PROP1_N,
        }
        .into());
    }
    let mut report = Prop1Report {
        all_two_legs: true,
        ..Default::default()
    };
    for cycle in all_cycles(g, g.order())? {
        let d = decompose(g, &cycle)?;
        report.cycles += 1;
        report.bridges += d.bridges.len();
        report.chords += d.chords.len();
        let mut parts: Vec<Part> = d
            .bridges
            .iter()
            .map(|b| Part {
                interior: b.interior.to_vec(),
                legs: b.legs.len(),
                attachments: b.attachments.clone(),
            })
            .collect();
        for p in &parts {
            report.max_legs = report.max_legs.max(p.legs);
            report.max_attachments = report.max_attachments.max(p.attachments.len());
            report.all_two_legs &= p.legs == 2;
            if p.legs > 2 {
                report.violations.push(Violation {
                    cycle: d.cycle.clone(),
                    bridge: p.clone(),
                    kind: ViolationKind::TooManyLegs,
                });
            }
        }
        parts.extend(d.chords.iter().map(|&(u, v)| Part {
            interior: Vec::new(),
            legs: 0,
            attachments: vec![u, v],
        }));
        for i in 0..parts.len() {
            for j in i + 1..parts.len() {
                if attachments_cross(&d.cycle, &parts[i].attachments, &parts[j].attachments) {
                    report.violations.push(Violation {
                        cycle: d.cycle.clone(),
                        bridge: parts[i].clone(),
                        kind: ViolationKind::Crossing {
                            with: parts[j].clone(),
                        },
                    });
                }
            }
        }
    }
    Ok(report)
}

fn check_girth5_series_parallel(g: &Graph) -> Result<(), StructureError> {
    if !girth(g).at_least(5) {
        return Err(StructureError::ShortCycle);
    }
    if !is_k4_minor_free(g) {
        return Err(StructureError::HasK4Minor);
    }
    Ok(())
}

/// Deletes the edge `v2 x` and adds `v1 v2`.
///
/// `x` must be a cutvertex and `v1`, `v2` neighbours of `x` in different
/// components of `G - x`. The input must have girth at least 5 and no K4
/// minor; both properties then hold for the output.
pub fn cut_reduction(g: &Graph, x: usize, v1: usize, v2: usize) -> Result<Graph, StructureError> {
    for v in [x, v1, v2] {
        g.check_vertex(v)?;
    }
    check_girth5_series_parallel(g)?;
    if !cutvertices(g).contains(&x) {
        return Err(StructureError::NotCutvertex(x));
    }
    let rest = g.vertices().difference(VertexSet::singleton(x)).bits();
    let separated =
        g.has_edge(x, v1) && g.has_edge(x, v2) && reach(g, v1, rest) & (1u64 << v2) == 0;
    if !separated {
        return Err(StructureError::NotSeparated { x, v1, v2 });
    }
    let mut h = g.clone();
    h.remove_edge(v2, x)?;
    h.add_edge(v1, v2)?;
    Ok(h)
}

/// The default arguments for [`cut_reduction`]: the least cutvertex `x`, and
/// the least neighbour of `x` in each of the two components of `G - x` with
/// the smallest least vertices.
pub fn default_cut_choice(g: &Graph) -> Result<(usize, usize, usize), StructureError> {
    let x = *cutvertices(g).first().ok_or(StructureError::NoCutvertex)?;
    let sides = sides_of(g, x);
    let pick = |side: VertexSet| g.neighbors(x).intersection(side).first().unwrap();
    Ok((x, pick(sides[0]), pick(sides[1])))
}

/// Components of `G - x` that contain a neighbour of `x`.
fn sides_of(g: &Graph, x: usize) -> Vec<VertexSet> {
    let rest = g.vertices().difference(VertexSet::singleton(x));
    components_within(g, rest)
        .into_iter()
        .filter(|c| !c.is_disjoint(g.neighbors(x)))
        .collect()
}

/// Applies [`cut_reduction`] until no cutvertex is left.
///
/// Each step picks the least cutvertex `x` that lies on a block with a
/// cycle. `v2` is the least neighbour of `x` in the first such block and `v1`
/// the least neighbour of `x` in the first other component of `G - x`. The
/// edge `v2 x` is then replaced by a path through `v1`, which merges the two
/// blocks into one, so the number of blocks drops by one per step.
///
/// Forests are rejected: a connected graph with a cycle always has such a
/// cutvertex while it has one at all, but a tree never does.
pub fn make_two_connected(g: &Graph) -> Result<Graph, StructureError> {
    if g.order() < 3 {
        return Err(StructureError::TooSmall {
            n: g.order(),
            min: 3,
        });
    }
    if connected_components(g).len() != 1 {
        return Err(StructureError::Disconnected);
    }
    check_girth5_series_parallel(g)?;
    if g.edge_count() < g.order() {
        return Err(StructureError::Acyclic);
    }
    let mut h = g.clone();
    let mut block_count = blocks(&h).len();
    while block_count > 1 {
        let (x, v1, v2) = merge_choice(&h);
        h = cut_reduction(&h, x, v1, v2)?;
        let next = blocks(&h).len();
        assert!(next < block_count, "block count must decrease");
        block_count = next;
    }
    Ok(h)
}

fn merge_choice(g: &Graph) -> (usize, usize, usize) {
    let cyclic: Vec<VertexSet> = blocks(g).into_iter().filter(|b| b.len() >= 3).collect();
    for x in cutvertices(g) {
        let Some(block) = cyclic.iter().find(|b| b.contains(x)) else {
            continue;
        };
        let v2 = g.neighbors(x).intersection(*block).first().unwrap();
        let side = sides_of(g, x)
            .into_iter()
            .find(|s| !s.contains(v2))
            .unwrap();
        let v1 = g.neighbors(x).intersection(side).first().unwrap();
        return (x, v1, v2);
    }
    unreachable!("a connected graph with a cycle and a cutvertex has a cutvertex on a cyclic block")
}
