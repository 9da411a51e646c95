//! Exact extremal numbers by isomorph-free exhaustive generation, a
//! naive labeled-graph oracle, an independent edge-based strategy, and
//! the dependent-random-choice set extraction.

use std::cell::{Cell, RefCell};
use std::collections::HashSet;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use crate::canon::certificate;
use crate::error::SearchError;
use crate::graph::{Graph, GraphBuilder, VertexSet};
use crate::patterns::{ConstraintSet, Mode};

/// Environment variable overriding the default node budget.
pub const BUDGET_ENV: &str = "TURANLAB_BUDGET_NODES";

#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub node_budget: u64,
    pub time_budget_ms: u64,
    pub witness_cap: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        let node_budget = std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|v| v.parse().ok())
            .unwrap_or(200_000_000);
        SearchConfig {
            node_budget,
            time_budget_ms: u64::MAX,
            witness_cap: 100,
        }
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SearchStats {
    pub nodes_expanded: u64,
    pub pruned: u64,
    pub wall_ms: u64,
    pub witness_overflow: u64,
}

/// Exact extremal number with isomorph-free witnesses.
#[derive(Debug)]
pub struct SearchResult {
    pub n: usize,
    pub constraints: String,
    pub max_edges: usize,
    pub witnesses: Vec<Graph>,
    pub stats: SearchStats,
}

impl SearchResult {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "n": self.n,
            "constraints": self.constraints,
            "max_edges": self.max_edges,
            "witnesses": self.witnesses.iter().map(crate::graph6::write_graph6).collect::<Vec<_>>(),
            "stats": self.stats,
        })
    }
}

struct Explorer<'a> {
    n: usize,
    constraints: &'a ConstraintSet,
    cfg: &'a SearchConfig,
    seen: Vec<HashSet<Vec<u8>>>,
    stats: SearchStats,
    start: Instant,
}

impl<'a> Explorer<'a> {
    fn new(n: usize, constraints: &'a ConstraintSet, cfg: &'a SearchConfig) -> Self {
        Explorer {
            n,
            constraints,
            cfg,
            seen: vec![HashSet::new(); n + 1],
            stats: SearchStats::default(),
            start: Instant::now(),
        }
    }

    fn check_budget(&self) -> Result<(), SearchError> {
        if self.stats.nodes_expanded > self.cfg.node_budget {
            return Err(SearchError::BudgetExhausted(self.cfg.node_budget));
        }
        if self.stats.nodes_expanded.is_multiple_of(1024)
            && self.start.elapsed().as_millis() as u64 > self.cfg.time_budget_ms
        {
            return Err(SearchError::TimeExhausted(self.cfg.time_budget_ms));
        }
        Ok(())
    }

    /// Extends `g` by one vertex with every neighborhood bitmask.
    /// Both constraint modes are hereditary (closed under taking induced
    /// subgraphs), so pruning failing children is sound. Returns false
    /// when the leaf visitor asked to stop.
    fn extend(
        &mut self,
        g: &Graph,
        prune: &dyn Fn(&Graph, usize) -> bool,
        leaf: &mut dyn FnMut(&Graph) -> bool,
    ) -> Result<bool, SearchError> {
        let k = g.n();
        if k == self.n {
            return Ok(leaf(g));
        }
        for mask in 0u64..(1 << k) {
            self.stats.nodes_expanded += 1;
            self.check_budget()?;
            let child = g.with_vertex(mask);
            if !self.constraints.satisfied_at(&child, k) {
                self.stats.pruned += 1;
                continue;
            }
            if prune(&child, self.n - k - 1) {
                self.stats.pruned += 1;
                continue;
            }
            let cert = certificate(&child)?;
            if !self.seen[k + 1].insert(cert) {
                continue;
            }
            if !self.extend(&child, prune, leaf)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn run(
        mut self,
        prune: &dyn Fn(&Graph, usize) -> bool,
        leaf: &mut dyn FnMut(&Graph) -> bool,
    ) -> Result<SearchStats, SearchError> {
        let root = Graph::empty(1);
        self.extend(&root, prune, leaf)?;
        self.stats.wall_ms = self.start.elapsed().as_millis() as u64;
        Ok(self.stats)
    }
}

fn validate(n: usize, c: &ConstraintSet) -> Result<(), SearchError> {
    if c.constraints.is_empty() {
        return Err(SearchError::EmptyConstraints);
    }
    if c.constraints.iter().any(|p| p.pattern.n() < 2) {
        return Err(SearchError::PatternTooSmall);
    }
    if n < 1 {
        return Err(SearchError::InvalidParameter("n must be >= 1".into()));
    }
    Ok(())
}

/// Exact maximum edge count over n-vertex graphs satisfying `c`, with
/// one canonical witness per isomorphism class of extremal graphs.
pub fn extremal_number(
    n: usize,
    c: &ConstraintSet,
    cfg: &SearchConfig,
) -> Result<SearchResult, SearchError> {
    validate(n, c)?;
    let best: Cell<usize> = Cell::new(0);
    let witnesses: RefCell<Vec<Graph>> = RefCell::new(Vec::new());
    let overflow: Cell<u64> = Cell::new(0);

    let pairs_left = |added: usize, k: usize| added * added.saturating_sub(1) / 2 + added * k;
    let prune = |g: &Graph, remaining: usize| {
        // admissible: even completing all remaining slots cannot beat best
        g.edge_count() + pairs_left(remaining, g.n()) < best.get()
    };
    let mut leaf = |g: &Graph| {
        let e = g.edge_count();
        match e.cmp(&best.get()) {
            std::cmp::Ordering::Greater => {
                best.set(e);
                witnesses.replace(vec![g.clone()]);
                overflow.set(0);
            }
            std::cmp::Ordering::Equal => {
                let mut w = witnesses.borrow_mut();
                if w.len() < cfg.witness_cap {
                    w.push(g.clone());
                } else {
                    overflow.set(overflow.get() + 1);
                }
            }
            std::cmp::Ordering::Less => {}
        }
        true
    };

    let mut stats = Explorer::new(n, c, cfg).run(&prune, &mut leaf)?;
    stats.witness_overflow = overflow.get();
    let mut seen = HashSet::new();
    let mut canonical = Vec::new();
    for g in witnesses.into_inner() {
        let form = crate::canon::canonical_form(&g)?;
        if seen.insert(form.certificate) {
            canonical.push(g.relabel(&form.relabeling));
        }
    }
    let witnesses = canonical;
    Ok(SearchResult {
        n,
        constraints: c.describe(),
        max_edges: best.get(),
        witnesses,
        stats,
    })
}

/// One representative per isomorphism class of n-vertex graphs
/// satisfying `c`, stopping once `limit` graphs are collected.
pub fn enumerate_graphs(
    n: usize,
    c: &ConstraintSet,
    cfg: &SearchConfig,
    limit: usize,
) -> Result<Vec<Graph>, SearchError> {
    validate(n, c)?;
    let out: RefCell<Vec<Graph>> = RefCell::new(Vec::new());
    let mut leaf = |g: &Graph| {
        let mut v = out.borrow_mut();
        v.push(g.clone());
        v.len() < limit
    };
    Explorer::new(n, c, cfg).run(&|_, _| false, &mut leaf)?;
    Ok(out.into_inner())
}

/// Ground-truth oracle: iterates every labeled graph on `n <= 6`
/// vertices with no isomorphism logic at all.
pub fn exhaustive_oracle(n: usize, c: &ConstraintSet) -> Result<usize, SearchError> {
    validate(n, c)?;
    if n > 6 {
        return Err(SearchError::OracleTooLarge(n));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    let mut max_edges = 0;
    for mask in 0u64..(1 << pairs.len()) {
        if (mask.count_ones() as usize) <= max_edges {
            continue;
        }
        let mut b = GraphBuilder::new(n);
        for (bit, &(u, v)) in pairs.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                b.add_edge(u, v);
            }
        }
        let g = b.build();
        if c.satisfied_by(&g) {
            max_edges = g.edge_count();
        }
    }
    Ok(max_edges)
}

/// Independent second strategy: branch-and-bound over edge slots in
/// lexicographic order. Sound only for subgraph-mode constraints, which
/// are closed under edge deletion.
pub fn edge_branch_and_bound(n: usize, c: &ConstraintSet) -> Result<usize, SearchError> {
    validate(n, c)?;
    if c.constraints.iter().any(|p| p.mode == Mode::Induced) {
        return Err(SearchError::InducedUnsupported);
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();

    let mut best = 0usize;
    let mut adj = vec![0u64; n];
    fn walk(
        adj: &mut Vec<u64>,
        pairs: &[(usize, usize)],
        idx: usize,
        e: usize,
        best: &mut usize,
        c: &ConstraintSet,
    ) {
        if idx == pairs.len() {
            if e > *best {
                *best = e;
            }
            return;
        }
        if e + (pairs.len() - idx) <= *best {
            return;
        }
        let (u, v) = pairs[idx];
        // include the edge when no forbidden pattern appears through it
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
        let g = {
            let mut b = GraphBuilder::new(adj.len());
            for x in 0..adj.len() {
                for y in (x + 1)..adj.len() {
                    if adj[x] >> y & 1 == 1 {
                        b.add_edge(x, y);
                    }
                }
            }
            b.build()
        };
        if c.satisfied_at(&g, u) {
            walk(adj, pairs, idx + 1, e + 1, best, c);
        }
        adj[u] &= !(1 << v);
        adj[v] &= !(1 << u);
        walk(adj, pairs, idx + 1, e, best, c);
    }
    walk(&mut adj, &pairs, 0, 0, &mut best, c);
    Ok(best)
}

/// Randomized search for a vertex set whose every `s`-subset has at
/// least `r` common neighbors. Each sample picks some vertices with
/// repetition (count supplied, or swept over 0..=n including the empty
/// pick whose common neighborhood is all of V), intersects their
/// neighborhoods, then deletes a vertex from every violating s-subset.
/// Returns the largest surviving set across samples, verified before
/// return; `None` when every sample collapsed to the empty set.
pub fn drc_find_set(
    g: &Graph,
    s: usize,
    r: usize,
    samples: usize,
    rng_seed: u64,
    t_exp: Option<usize>,
) -> Result<Option<VertexSet>, SearchError> {
    if s < 1 || samples < 1 {
        return Err(SearchError::InvalidParameter(
            "drc needs s >= 1 and samples >= 1".into(),
        ));
    }
    let n = g.n();
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let mut best: Option<VertexSet> = None;

    for i in 0..samples {
        let t = t_exp.unwrap_or(i % (n + 1));
        let mut a = VertexSet::full(n);
        for _ in 0..t {
            let v = rng.gen_range(0..n);
            a = a.intersect(g.neighbors(v));
        }
        // delete one vertex from each violating s-subset until stable
        while let Some(bad) = violating_subset(g, a, s, r) {
            a.remove(bad.iter().next().unwrap());
        }
        if !a.is_empty() && best.is_none_or(|b| a.len() > b.len()) {
            best = Some(a);
        }
    }
    if let Some(a) = best {
        debug_assert!(violating_subset(g, a, s, r).is_none());
    }
    Ok(best)
}

/// First `s`-subset of `a` (in lexicographic member order) with fewer
/// than `r` common neighbors in `g`, or `None`.
pub fn violating_subset(g: &Graph, a: VertexSet, s: usize, r: usize) -> Option<VertexSet> {
    let members: Vec<usize> = a.iter().collect();
    if members.len() < s {
        return None;
    }
    let mut chosen = Vec::with_capacity(s);
    fn rec(
        g: &Graph,
        members: &[usize],
        start: usize,
        chosen: &mut Vec<usize>,
        s: usize,
        r: usize,
    ) -> Option<VertexSet> {
        if chosen.len() == s {
            let set = VertexSet::from_iter(chosen.iter().copied());
            let common = g.common_neighborhood(set).expect("non-empty subset");
            return (common.len() < r).then_some(set);
        }
        for i in start..members.len() {
            chosen.push(members[i]);
            if let Some(bad) = rec(g, members, i + 1, chosen, s, r) {
                return Some(bad);
            }
            chosen.pop();
        }
        None
    }
    rec(g, &members, 0, &mut chosen, s, r)
}

/// Smallest `n` at which no red/blue edge coloring of K_n avoids both a
/// red K_a and a blue K_b, found by isomorph-free search over the red
/// graphs (red = the graph, blue = its complement). Searches n up to
/// `max_n`; `None` if a witness coloring still exists there.
pub fn brute_force_ramsey(a: usize, b: usize, max_n: usize) -> Result<Option<usize>, SearchError> {
    use crate::graph::named_graph;
    use crate::patterns::{contains_subgraph, PatternSpec};
    let ka = named_graph("K", &[a]).map_err(|e| SearchError::InvalidParameter(e.to_string()))?;
    let kb = named_graph("K", &[b]).map_err(|e| SearchError::InvalidParameter(e.to_string()))?;
    let cfg = SearchConfig::default();
    for n in 1..=max_n {
        let c = ConstraintSet::new(vec![PatternSpec::new(ka.clone(), Mode::Subgraph, "Ka")]);
        let witness_found: Cell<bool> = Cell::new(false);
        let mut leaf = |g: &Graph| {
            if !contains_subgraph(&g.complement(), &kb) {
                witness_found.set(true);
                return false;
            }
            true
        };
        Explorer::new(n, &c, &cfg).run(&|_, _| false, &mut leaf)?;
        if !witness_found.get() {
            return Ok(Some(n));
        }
    }
    Ok(None)
}
