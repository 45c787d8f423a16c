//! Exhaustive extremal search by orderly generation.
//!
//! Every isomorphism class is represented by its labelling with the
//! lexicographically greatest graph6 string. Removing the last edge (in
//! graph6 bit order) of such a representative gives another representative,
//! so the classes form a tree rooted at the edgeless graph: a node is
//! extended only by edges after its last edge, and a child is kept only if
//! it is again a representative. Girth at least `g` and K4-minor-freeness
//! are both closed under edge deletion, so pruning invalid children keeps
//! every valid class reachable.

use std::collections::BTreeSet;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::construct::GirthClassParams;
use crate::graph::{Graph, GraphError};
use crate::invariants::{
    canonical_form, is_k4_minor_free, is_max_canonical, within_distance, CanonicalForm,
};

/// Largest vertex count the search accepts.
pub const MAX_SEARCH_N: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("search needs {min} <= n <= {max}, got n={n}")]
    Size { n: usize, min: usize, max: usize },
    #[error("search needs girth >= 4, got {0}")]
    Girth(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SearchMode {
    /// Maximum edge count only; the extremal list stays empty.
    MaxOnly,
    /// Maximum edge count and every extremal class.
    MaxAndEnumerate,
    /// Every class with exactly this many edges.
    CountAtEdges(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    pub n: usize,
    pub g: usize,
    pub mode: SearchMode,
    pub upper_bound_pruning: bool,
    /// Worker threads; 0 and 1 both mean a sequential search.
    pub parallel_width: usize,
}

impl SearchConfig {
    pub fn new(n: usize, g: usize, mode: SearchMode) -> Self {
        SearchConfig {
            n,
            g,
            mode,
            upper_bound_pruning: true,
            parallel_width: 1,
        }
    }

    pub fn with_jobs(mut self, jobs: usize) -> Self {
        self.parallel_width = jobs;
        self
    }

    pub fn with_pruning(mut self, on: bool) -> Self {
        self.upper_bound_pruning = on;
        self
    }

    /// Checks the size guards against `max_n` (at most [`MAX_SEARCH_N`]).
    pub fn validate(&self, max_n: usize) -> Result<GirthClassParams, SearchError> {
        let max = max_n.min(MAX_SEARCH_N);
        if self.n < 3 || self.n > max {
            return Err(SearchError::Size {
                n: self.n,
                min: 3,
                max,
            });
        }
        GirthClassParams::new(self.n, self.g).map_err(|_| SearchError::Girth(self.g))
    }
}

/// Outcome of a search.
///
/// In [`SearchMode::CountAtEdges`] mode `max_edges` holds the queried edge
/// count and `extremal` the classes found at that count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalResult {
    pub params: GirthClassParams,
    pub max_edges: usize,
    pub extremal: Vec<CanonicalForm>,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

impl ExtremalResult {
    pub fn count(&self) -> usize {
        self.extremal.len()
    }

    pub fn graphs(&self) -> Vec<Graph> {
        self.extremal.iter().map(CanonicalForm::to_graph).collect()
    }

    pub fn record(&self) -> ResultRecord {
        ResultRecord {
            n: self.params.n,
            g: self.params.g,
            max_edges: self.max_edges,
            count: self.count(),
            graphs: self
                .extremal
                .iter()
                .map(|c| c.as_str().to_owned())
                .collect(),
            nodes: self.nodes_explored,
            ms: self.elapsed.as_millis() as u64,
        }
    }
}

/// The JSON form of a result:
/// `{"n":..,"g":..,"max_edges":..,"count":..,"graphs":[..],"nodes":..,"ms":..}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub n: usize,
    pub g: usize,
    pub max_edges: usize,
    pub count: usize,
    pub graphs: Vec<String>,
    pub nodes: u64,
    pub ms: u64,
}

pub fn extremal_search(cfg: &SearchConfig) -> Result<ExtremalResult, SearchError> {
    let params = cfg.validate(MAX_SEARCH_N)?;
    let start = Instant::now();
    let n = cfg.n;
    let slots = n * (n - 1) / 2;
    let edge_at: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let cap = if cfg.upper_bound_pruning {
        params.closed_form_bound().map(|b| b.max(n - 1))
    } else {
        None
    };
    let ctx = Ctx {
        g: cfg.g,
        mode: cfg.mode,
        pruning: cfg.upper_bound_pruning,
        cap,
        slots,
        edge_at: &edge_at,
        shared_best: AtomicUsize::new(0),
    };

    let root = Node {
        graph: Graph::empty(n)?,
        edges: 0,
        next_slot: 0,
    };
    let mut acc = Acc::default();
    if cfg.parallel_width <= 1 {
        ctx.dfs(&root, &mut acc);
    } else {
        // expand the top of the tree breadth-first until there is enough
        // independent work, then hand each subtree to the pool
        let target = 8 * cfg.parallel_width;
        let mut level = vec![root];
        while level.len() < target && !level.is_empty() {
            let mut next = Vec::new();
            for node in &level {
                ctx.visit(node, &mut acc);
                if ctx.should_expand(node) {
                    let (children, budget) = ctx.children(node);
                    if !ctx.prune(node, budget) {
                        next.extend(children);
                    }
                }
            }
            level = next;
        }
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.parallel_width)
            .build()
            .expect("thread pool");
        let parts: Vec<Acc> = pool.install(|| {
            level
                .par_iter()
                .map(|node| {
                    let mut a = Acc::default();
                    ctx.dfs(node, &mut a);
                    a
                })
                .collect()
        });
        for p in parts {
            acc.merge(p);
        }
    }

    let max_edges = match cfg.mode {
        SearchMode::CountAtEdges(m) => m,
        _ => acc.best,
    };
    let extremal = match cfg.mode {
        SearchMode::MaxOnly => Vec::new(),
        _ => {
            let mut forms = BTreeSet::new();
            for g in &acc.graphs {
                forms.insert(canonical_form(g)?);
            }
            debug_assert_eq!(
                forms.len(),
                acc.graphs.len(),
                "orderly generation produced a duplicate"
            );
            forms.into_iter().collect()
        }
    };
    Ok(ExtremalResult {
        params,
        max_edges,
        extremal,
        nodes_explored: acc.nodes,
        elapsed: start.elapsed(),
    })
}

/// Number of isomorphism classes with exactly `m` edges, and the classes.
pub fn count_at_edges(
    n: usize,
    g: usize,
    m: usize,
) -> Result<(usize, Vec<CanonicalForm>), SearchError> {
    let r = extremal_search(&SearchConfig::new(n, g, SearchMode::CountAtEdges(m)))?;
    Ok((r.count(), r.extremal))
}

/// Exhaustive maximum compared with the closed-form bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub n: usize,
    pub g: usize,
    pub max_edges: usize,
    /// `None` when no closed form covers `(n, g)`.
    pub bound: Option<usize>,
    pub within_bound: bool,
    pub tight: bool,
}

pub fn verify_bound(n: usize, g: usize) -> Result<BoundReport, SearchError> {
    let r = extremal_search(&SearchConfig::new(n, g, SearchMode::MaxOnly))?;
    let bound = r.params.closed_form_bound();
    Ok(BoundReport {
        n,
        g,
        max_edges: r.max_edges,
        bound,
        within_bound: bound.is_none_or(|b| r.max_edges <= b),
        tight: bound == Some(r.max_edges),
    })
}

struct Node {
    graph: Graph,
    edges: usize,
    /// First edge slot (graph6 bit position) that may still be added.
    next_slot: usize,
}

#[derive(Default)]
struct Acc {
    best: usize,
    graphs: Vec<Graph>,
    nodes: u64,
}

impl Acc {
    fn record(&mut self, g: &Graph, edges: usize) {
        if edges > self.best {
            self.best = edges;
            self.graphs.clear();
        }
        if edges == self.best {
            self.graphs.push(g.clone());
        }
    }

    fn merge(&mut self, other: Acc) {
        self.nodes += other.nodes;
        if other.best > self.best {
            self.best = other.best;
            self.graphs = other.graphs;
        } else if other.best == self.best {
            self.graphs.extend(other.graphs);
        }
    }
}

struct Ctx<'a> {
    g: usize,
    mode: SearchMode,
    pruning: bool,
    cap: Option<usize>,
    slots: usize,
    edge_at: &'a [(usize, usize)],
    shared_best: AtomicUsize,
}

impl Ctx<'_> {
    fn visit(&self, node: &Node, acc: &mut Acc) {
        acc.nodes += 1;
        match self.mode {
            SearchMode::CountAtEdges(m) => {
                if node.edges == m {
                    acc.graphs.push(node.graph.clone());
                }
            }
            _ => {
                acc.record(&node.graph, node.edges);
                self.shared_best.fetch_max(node.edges, Ordering::Relaxed);
            }
        }
    }

    fn should_expand(&self, node: &Node) -> bool {
        match self.mode {
            SearchMode::CountAtEdges(m) => node.edges < m,
            _ => true,
        }
    }

    fn dfs(&self, node: &Node, acc: &mut Acc) {
        self.visit(node, acc);
        if !self.should_expand(node) {
            return;
        }
        let (children, budget) = self.children(node);
        if self.prune(node, budget) {
            return;
        }
        for child in &children {
            self.dfs(child, acc);
        }
    }

    /// Valid canonical children, and the number of later slots whose edge
    /// alone keeps the graph valid (an upper bound on further edges).
    fn children(&self, node: &Node) -> (Vec<Node>, usize) {
        let mut out = Vec::new();
        let mut budget = 0;
        for slot in node.next_slot..self.slots {
            let (u, v) = self.edge_at[slot];
            // the new edge closes a cycle of length dist(u, v) + 1
            if within_distance(&node.graph, u, v, self.g - 2) {
                continue;
            }
            let mut h = node.graph.clone();
            h.set_edge_unchecked(u, v);
            if !is_k4_minor_free(&h) {
                continue;
            }
            budget += 1;
            if is_max_canonical(&h) {
                out.push(Node {
                    graph: h,
                    edges: node.edges + 1,
                    next_slot: slot + 1,
                });
            }
        }
        (out, budget)
    }

    fn prune(&self, node: &Node, budget: usize) -> bool {
        if !self.pruning {
            return false;
        }
        let mut reach = node.edges + budget;
        if let Some(cap) = self.cap {
            reach = reach.min(cap);
        }
        match self.mode {
            SearchMode::CountAtEdges(m) => reach < m,
            SearchMode::MaxAndEnumerate => reach < self.shared_best.load(Ordering::Relaxed),
            SearchMode::MaxOnly => reach <= self.shared_best.load(Ordering::Relaxed),
        }
    }
}
