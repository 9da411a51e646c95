//! Containment testing and exact clique / independent-set counting.

use serde::Serialize;

use crate::graph::{Graph, VertexSet};

/// How a forbidden pattern is matched against a host.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Injective map preserving edges; non-edges unconstrained.
    Subgraph,
    /// Injective map preserving edges and non-edges.
    Induced,
}

/// One forbidden pattern. For complete patterns the two modes coincide;
/// that is documented behavior, not an error.
#[derive(Clone, Debug)]
pub struct PatternSpec {
    pub pattern: Graph,
    pub mode: Mode,
    /// Display name ("C4", "K2,3", ...) used in reports.
    pub name: String,
}

impl PatternSpec {
    pub fn new(pattern: Graph, mode: Mode, name: impl Into<String>) -> Self {
        assert!(pattern.n() > 0, "empty pattern");
        PatternSpec {
            pattern,
            mode,
            name: name.into(),
        }
    }

    pub fn describe(&self) -> String {
        match self.mode {
            Mode::Subgraph => format!("{}-sub", self.name),
            Mode::Induced => format!("{}-ind", self.name),
        }
    }
}

/// The list of patterns a graph must avoid.
#[derive(Clone, Debug, Default)]
pub struct ConstraintSet {
    pub constraints: Vec<PatternSpec>,
}

impl ConstraintSet {
    pub fn new(constraints: Vec<PatternSpec>) -> Self {
        ConstraintSet { constraints }
    }

    pub fn describe(&self) -> String {
        self.constraints
            .iter()
            .map(|c| c.describe())
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// True iff `g` avoids every pattern.
    pub fn satisfied_by(&self, g: &Graph) -> bool {
        self.constraints.iter().all(|c| find_embedding(g, c).is_none())
    }

    /// True iff `g` avoids every pattern when only embeddings through
    /// `anchor` need checking (sound when `g` minus `anchor` already
    /// satisfied the constraints).
    pub fn satisfied_at(&self, g: &Graph, anchor: usize) -> bool {
        self.constraints
            .iter()
            .all(|c| find_embedding_through(g, c, anchor).is_none())
    }
}

/// Pattern vertices ordered by descending degree, ties broken by index.
fn match_order(pattern: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..pattern.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(pattern.degree(v)), v));
    order
}

#[allow(clippy::too_many_arguments)]
fn embed(
    host: &Graph,
    pattern: &Graph,
    mode: Mode,
    order: &[usize],
    depth: usize,
    map: &mut Vec<usize>,
    used: &mut VertexSet,
    forced: Option<(usize, usize)>,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let p = order[depth];
    for h in 0..host.n() {
        if let Some((fd, fh)) = forced {
            if depth == fd && h != fh {
                continue;
            }
            if depth != fd && h == fh {
                continue;
            }
        }
        if used.contains(h) {
            continue;
        }
        if host.degree(h) < pattern.degree(p) && mode == Mode::Subgraph {
            continue;
        }
        let mut ok = true;
        for (d, &q) in order.iter().enumerate().take(depth) {
            let pe = pattern.has_edge(p, q);
            let he = host.has_edge(h, map[d]);
            let bad = match mode {
                Mode::Subgraph => pe && !he,
                Mode::Induced => pe != he,
            };
            if bad {
                ok = false;
                break;
            }
        }
        if !ok {
            continue;
        }
        map.push(h);
        used.insert(h);
        if embed(host, pattern, mode, order, depth + 1, map, used, forced) {
            return true;
        }
        used.remove(h);
        map.pop();
    }
    false
}

/// Finds one embedding of `spec` into `host`, as host vertices listed in
/// the pattern's match order. `None` when the host avoids the pattern.
pub fn find_embedding(host: &Graph, spec: &PatternSpec) -> Option<Vec<usize>> {
    if spec.pattern.n() > host.n() {
        return None;
    }
    let order = match_order(&spec.pattern);
    let mut map = Vec::with_capacity(order.len());
    let mut used = VertexSet::EMPTY;
    embed(
        host,
        &spec.pattern,
        spec.mode,
        &order,
        0,
        &mut map,
        &mut used,
        None,
    )
    .then(|| {
        // Return in pattern-vertex order.
        let mut by_pattern = vec![0; order.len()];
        for (d, &p) in order.iter().enumerate() {
            by_pattern[p] = map[d];
        }
        by_pattern
    })
}

/// Finds an embedding whose image contains `anchor`, trying each pattern
/// slot as the anchored one. Used for incremental checks after adding a
/// vertex: only embeddings through the new vertex can be new.
fn find_embedding_through(host: &Graph, spec: &PatternSpec, anchor: usize) -> Option<Vec<usize>> {
    if spec.pattern.n() > host.n() {
        return None;
    }
    let order = match_order(&spec.pattern);
    for fd in 0..order.len() {
        let mut map = Vec::with_capacity(order.len());
        let mut used = VertexSet::EMPTY;
        if embed(
            host,
            &spec.pattern,
            spec.mode,
            &order,
            0,
            &mut map,
            &mut used,
            Some((fd, anchor)),
        ) {
            return Some(map);
        }
    }
    None
}

pub fn contains_subgraph(host: &Graph, pattern: &Graph) -> bool {
    find_embedding(host, &PatternSpec::new(pattern.clone(), Mode::Subgraph, "")).is_some()
}

pub fn contains_induced(host: &Graph, pattern: &Graph) -> bool {
    find_embedding(host, &PatternSpec::new(pattern.clone(), Mode::Induced, "")).is_some()
}

fn count_cliques_rec(g: &Graph, cand: VertexSet, remaining: usize) -> u64 {
    if remaining == 0 {
        return 1;
    }
    if cand.len() < remaining {
        return 0;
    }
    let mut total = 0;
    let mut rest = cand;
    for v in cand.iter() {
        rest.remove(v);
        // only extend with later candidates: each clique counted once
        total += count_cliques_rec(g, rest.intersect(g.neighbors(v)), remaining - 1);
    }
    total
}

/// Exact number of `m`-vertex complete subgraphs, `t_m(G)`.
pub fn count_cliques(g: &Graph, m: usize) -> u64 {
    assert!(m >= 1);
    if m > g.n() {
        return 0;
    }
    count_cliques_rec(g, g.vertices(), m)
}

/// `|I_s(G)| = t_s` of the complement; single audited counting path.
pub fn count_independent_sets(g: &Graph, s: usize) -> u64 {
    count_cliques(&g.complement(), s)
}

fn max_clique_rec(g: &Graph, current: usize, cand: VertexSet, best: &mut usize) {
    if current > *best {
        *best = current;
    }
    if current + cand.len() <= *best {
        return;
    }
    let mut rest = cand;
    for v in cand.iter() {
        if current + rest.len() <= *best {
            return;
        }
        rest.remove(v);
        max_clique_rec(g, current + 1, rest.intersect(g.neighbors(v)), best);
    }
}

/// Maximum clique order via branch-and-bound. Errors on the empty graph.
pub fn clique_number(g: &Graph) -> Result<usize, crate::error::GraphError> {
    if g.n() == 0 {
        return Err(crate::error::GraphError::EmptyVertexSet);
    }
    let mut best = 0;
    max_clique_rec(g, 0, g.vertices(), &mut best);
    Ok(best)
}

pub fn independence_number(g: &Graph) -> Result<usize, crate::error::GraphError> {
    clique_number(&g.complement())
}

/// Outcome of checking one pattern against a host.
#[derive(Clone, Debug, Serialize)]
pub struct ConstraintCheck {
    pub constraint: String,
    pub passed: bool,
    /// Host vertices of one violating embedding, in pattern-vertex order.
    pub witness: Option<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConstraintReport {
    pub checks: Vec<ConstraintCheck>,
    pub all_passed: bool,
}

/// Per-constraint pass/fail; each failure carries the first witness found.
pub fn check_constraints(g: &Graph, c: &ConstraintSet) -> ConstraintReport {
    let checks: Vec<ConstraintCheck> = c
        .constraints
        .iter()
        .map(|spec| {
            let witness = find_embedding(g, spec);
            ConstraintCheck {
                constraint: spec.describe(),
                passed: witness.is_none(),
                witness,
            }
        })
        .collect();
    let all_passed = checks.iter().all(|c| c.passed);
    ConstraintReport { checks, all_passed }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named_graph;

    fn g(family: &str, params: &[usize]) -> Graph {
        named_graph(family, params).unwrap()
    }

    #[test]
    fn subgraph_containment() {
        assert!(contains_subgraph(&g("K", &[4]), &g("C", &[4])));
        assert!(contains_subgraph(&g("C", &[5]), &g("P", &[4])));
        // Petersen has girth 5
        let petersen = g("petersen", &[]);
        assert!(!contains_subgraph(&petersen, &g("C", &[4])));
        assert!(!contains_subgraph(&petersen, &g("C", &[3])));
        assert!(contains_subgraph(&petersen, &g("C", &[5])));
        // pattern larger than host
        assert!(!contains_subgraph(&g("C", &[4]), &g("C", &[5])));
    }

    #[test]
    fn induced_containment() {
        assert!(!contains_induced(&g("K", &[4]), &g("C", &[4])));
        assert!(contains_induced(&g("K", &[2, 3]), &g("C", &[4])));
        // complete bipartite graphs have no induced P4
        for m in 1..=6 {
            assert!(!contains_induced(&g("K", &[m, m]), &g("P", &[4])));
        }
        // induced implies subgraph
        assert!(contains_subgraph(&g("K", &[2, 3]), &g("C", &[4])));
    }

    #[test]
    fn clique_counting() {
        assert_eq!(count_cliques(&g("K", &[4]), 3), 4);
        // t_4 of complete 4-partite with parts of size 2: one vertex per part
        let mut b = crate::graph::GraphBuilder::new(8);
        for u in 0..8 {
            for v in (u + 1)..8 {
                if u / 2 != v / 2 {
                    b.add_edge(u, v);
                }
            }
        }
        assert_eq!(count_cliques(&b.build(), 4), 16);
        assert_eq!(count_cliques(&g("C", &[5]), 7), 0);
    }

    #[test]
    fn cliques_match_naive_enumeration() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..40 {
            let n = rng.gen_range(1..=12usize);
            let mut b = crate::graph::GraphBuilder::new(n);
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.gen_bool(0.5) {
                        b.add_edge(u, v);
                    }
                }
            }
            let graph = b.build();
            assert_eq!(count_cliques(&graph, 2), graph.edge_count() as u64);
            for m in 1..=4 {
                let naive = naive_clique_count(&graph, m);
                assert_eq!(count_cliques(&graph, m), naive, "n={n} m={m}");
            }
        }
    }

    fn naive_clique_count(graph: &Graph, m: usize) -> u64 {
        let n = graph.n();
        let mut count = 0;
        for mask in 0u64..(1 << n) {
            if mask.count_ones() as usize != m {
                continue;
            }
            let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if vs
                .iter()
                .enumerate()
                .all(|(i, &u)| vs.iter().skip(i + 1).all(|&v| graph.has_edge(u, v)))
            {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn independent_sets() {
        assert_eq!(count_independent_sets(&g("K", &[2, 3]), 2), 4);
        assert_eq!(count_independent_sets(&g("C", &[5]), 3), 0);
        assert_eq!(count_independent_sets(&g("K", &[6]), 2), 0);
    }

    #[test]
    fn clique_and_independence_numbers() {
        assert_eq!(clique_number(&g("K", &[3, 3])).unwrap(), 2);
        assert_eq!(clique_number(&g("petersen", &[])).unwrap(), 2);
        assert_eq!(independence_number(&g("C", &[5])).unwrap(), 2);
        assert_eq!(independence_number(&g("petersen", &[])).unwrap(), 4);
        assert_eq!(independence_number(&g("K", &[2, 3])).unwrap(), 3);
        assert!(clique_number(&Graph::empty(0)).is_err());
        // Turán graph T(7,3) = K(3,2,2)
        let t73 = crate::constructions::turan_graph(7, 3).unwrap();
        assert_eq!(clique_number(&t73).unwrap(), 3);
    }

    #[test]
    fn constraint_reports() {
        let c = ConstraintSet::new(vec![
            PatternSpec::new(g("C", &[3]), Mode::Subgraph, "C3"),
            PatternSpec::new(g("C", &[4]), Mode::Induced, "C4"),
        ]);
        assert!(check_constraints(&g("C", &[5]), &c).all_passed);

        let forbid_k23 = ConstraintSet::new(vec![PatternSpec::new(
            g("K", &[2, 3]),
            Mode::Induced,
            "K2,3",
        )]);
        let report = check_constraints(&g("K", &[2, 3]), &forbid_k23);
        assert!(!report.all_passed);
        let mut witness = report.checks[0].witness.clone().unwrap();
        witness.sort_unstable();
        assert_eq!(witness, vec![0, 1, 2, 3, 4]);

        let forbid_k4 = ConstraintSet::new(vec![PatternSpec::new(g("K", &[4]), Mode::Subgraph, "K4")]);
        assert!(!check_constraints(&g("K", &[4]), &forbid_k4).all_passed);
    }

    /// In K_r-free graphs, every (m-1)-clique Q whose common neighborhood
    /// is bigger than R(r-m+1, s) carries at least (d(Q)/(2(r+s)^s))^s
    /// s-independent sets in it (r=4, m=3, s=2 here).
    #[test]
    fn independent_sets_in_clique_neighborhoods() {
        use rand::{Rng, SeedableRng};
        let (r, s) = (4u32, 2u32);
        let k4 = g("K", &[4]);
        let ramsey_2_2 = 2; // R(r-m+1, s) = R(2,2)
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(55);
        let mut collected = 0;
        while collected < 100 {
            let n = rng.gen_range(6..=14usize);
            let mut b = crate::graph::GraphBuilder::new(n);
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.gen_bool(0.3) {
                        b.add_edge(u, v);
                    }
                }
            }
            let host = b.build();
            if contains_subgraph(&host, &k4) {
                continue; // rejection-sample K_4-free hosts
            }
            collected += 1;
            for (u, v) in host.edges() {
                let q = crate::graph::VertexSet::from_iter([u, v]);
                let common = host.common_neighborhood(q).unwrap();
                if common.len() <= ramsey_2_2 {
                    continue;
                }
                let gamma = host.induced_on(common).unwrap();
                let needed =
                    (common.len() as f64 / (2.0 * ((r + s) as f64).powi(s as i32))).powi(s as i32);
                assert!(
                    count_independent_sets(&gamma, s as usize) as f64 >= needed,
                    "d(Q)={} too few independent pairs",
                    common.len()
                );
            }
        }
    }
}
