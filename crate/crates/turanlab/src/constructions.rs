//! Builders for the extremal graphs the bounds are measured against:
//! Turán graphs, projective-plane incidence and polarity graphs, the
//! point-doubled incidence construction, subgroup orbit graphs avoiding
//! K_{2,t+1}, and a local-search max cut.

use serde::Serialize;

use crate::error::{FieldError, GraphError};
use crate::gf::PrimePowerField;
use crate::graph::{named_graph, Graph, GraphBuilder, VertexSet};
use crate::patterns;

/// Complete multipartite graph on `n` vertices with `r` near-equal parts.
pub fn turan_graph(n: usize, r: usize) -> Result<Graph, GraphError> {
    if r < 2 {
        return Err(GraphError::InvalidParameter(format!("turan: r={r} < 2")));
    }
    if n < 1 {
        return Err(GraphError::InvalidParameter("turan: n=0".into()));
    }
    let mut part = vec![0usize; n];
    for (v, p) in part.iter_mut().enumerate() {
        *p = v % r;
    }
    part.sort_unstable();
    let mut b = GraphBuilder::new(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if part[u] != part[v] {
                b.add_edge(u, v);
            }
        }
    }
    Ok(b.build())
}

/// K_{a,b} with the `a`-side first in vertex order.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, GraphError> {
    named_graph("K", &[a, b])
}

/// Normalized homogeneous coordinates of the points of PG(2,q):
/// first nonzero coordinate is 1. Exactly q^2 + q + 1 triples.
fn projective_points(f: &PrimePowerField) -> Vec<[usize; 3]> {
    let q = f.q();
    let mut pts = Vec::with_capacity(q * q + q + 1);
    for y in 0..q {
        for z in 0..q {
            pts.push([1, y, z]);
        }
    }
    for z in 0..q {
        pts.push([0, 1, z]);
    }
    pts.push([0, 0, 1]);
    pts
}

/// Bipartite point/line incidence graph of PG(2,q): points 0..N, lines
/// N..2N (lines carry the dual coordinates), adjacency = zero dot product.
/// (q+1)-regular on 2(q^2+q+1) vertices, girth 6.
pub fn projective_plane_incidence(f: &PrimePowerField) -> Graph {
    let pts = projective_points(f);
    let n = pts.len();
    let mut b = GraphBuilder::new(2 * n);
    for (i, p) in pts.iter().enumerate() {
        for (j, l) in pts.iter().enumerate() {
            if f.dot(p, l) == 0 {
                b.add_edge(i, n + j);
            }
        }
    }
    b.build()
}

/// Erdős–Rényi polarity graph ER_q: vertices are the points of PG(2,q),
/// x ~ y iff x·y = 0. Loops at absolute points are discarded, keeping
/// n = q^2 + q + 1 and e = q(q+1)^2 / 2. K_{2,2}-subgraph-free.
pub fn polarity_graph(f: &PrimePowerField) -> Graph {
    let pts = projective_points(f);
    let n = pts.len();
    let mut b = GraphBuilder::new(n);
    for i in 0..n {
        for j in (i + 1)..n {
            if f.dot(&pts[i], &pts[j]) == 0 {
                b.add_edge(i, j);
            }
        }
    }
    b.build()
}

/// Point-doubled incidence graph: every point of the incidence graph is
/// replaced by an adjacent pair, both copies joined to all lines through
/// the point. 3(q^2+q+1) vertices; C5-subgraph-free and induced-C4-free.
/// Point i becomes vertices 2i and 2i+1; line j becomes 2N + j.
pub fn bollobas_gyori(f: &PrimePowerField) -> Graph {
    let pts = projective_points(f);
    let n = pts.len();
    let mut b = GraphBuilder::new(3 * n);
    for i in 0..n {
        b.add_edge(2 * i, 2 * i + 1);
        for (j, l) in pts.iter().enumerate() {
            if f.dot(&pts[i], l) == 0 {
                b.add_edge(2 * i, 2 * n + j);
                b.add_edge(2 * i + 1, 2 * n + j);
            }
        }
    }
    b.build()
}

/// K_{2,t+1}-free orbit graph: H is the order-t subgroup of GF(q)*,
/// vertices are the H-orbits of GF(q)^2 minus the origin under
/// coordinatewise scaling, and orbits <a,b> ~ <x,y> iff ax + by lies in H.
/// Requires t | q - 1; yields (q^2 - 1)/t vertices.
pub fn furedi_k2t(f: &PrimePowerField, t: usize) -> Result<Graph, FieldError> {
    let q = f.q();
    let subgroup = f.subgroup(t)?;
    let in_h = |x: usize| subgroup.binary_search(&x).is_ok();

    // orbit representative: lexicographically smallest scaled pair
    let mut reps: Vec<(usize, usize)> = Vec::new();
    let mut rep_index = vec![usize::MAX; q * q];
    for a in 0..q {
        for b in 0..q {
            if a == 0 && b == 0 {
                continue;
            }
            let rep = subgroup
                .iter()
                .map(|&h| (f.mul(h, a), f.mul(h, b)))
                .min()
                .unwrap();
            if rep == (a, b) {
                rep_index[a * q + b] = reps.len();
                reps.push(rep);
            }
        }
    }
    debug_assert_eq!(reps.len(), (q * q - 1) / t);

    let mut b = GraphBuilder::new(reps.len());
    for (i, &(a1, b1)) in reps.iter().enumerate() {
        for (j, &(a2, b2)) in reps.iter().enumerate().skip(i + 1) {
            if in_h(f.add(f.mul(a1, a2), f.mul(b1, b2))) {
                b.add_edge(i, j);
            }
        }
    }
    Ok(b.build())
}

/// A locally optimal bipartition: no vertex has strictly more same-side
/// than cross-side neighbors. Guarantees cut_edges >= e/2.
#[derive(Clone, Debug)]
pub struct CutResult {
    pub side_a: VertexSet,
    pub cut_edges: usize,
}

fn cut_size(g: &Graph, side_a: VertexSet) -> usize {
    (0..g.n())
        .map(|v| {
            let cross = if side_a.contains(v) {
                g.neighbors(v).minus(side_a)
            } else {
                g.neighbors(v).intersect(side_a)
            };
            cross.len()
        })
        .sum::<usize>()
        / 2
}

/// First-improvement local search from the even/odd-index bipartition,
/// deterministic vertex scan order.
pub fn local_max_cut(g: &Graph) -> CutResult {
    local_max_cut_from(g, VertexSet::from_iter((0..g.n()).filter(|v| v % 2 == 0)))
}

pub fn local_max_cut_from(g: &Graph, start: VertexSet) -> CutResult {
    let mut side_a = start;
    loop {
        let mut moved = false;
        for v in 0..g.n() {
            let same = if side_a.contains(v) {
                g.neighbors(v).intersect(side_a)
            } else {
                g.neighbors(v).minus(side_a)
            };
            let deg = g.degree(v);
            if same.len() * 2 > deg {
                if side_a.contains(v) {
                    side_a.remove(v);
                } else {
                    side_a.insert(v);
                }
                moved = true;
            }
        }
        if !moved {
            break;
        }
    }
    CutResult {
        side_a,
        cut_edges: cut_size(g, side_a),
    }
}

/// Spanning subgraph keeping only the edges crossing the cut. Bipartite
/// with parts `side_a` and its complement.
pub fn cut_subgraph(g: &Graph, side_a: VertexSet) -> Graph {
    let mut b = GraphBuilder::new(g.n());
    for (u, v) in g.edges() {
        if side_a.contains(u) != side_a.contains(v) {
            b.add_edge(u, v);
        }
    }
    b.build()
}

/// Record of one construction run: family, parameters, sizes, and the
/// pass/fail results of its certification checks.
#[derive(Debug, Serialize)]
pub struct ConstructionManifest {
    pub family: String,
    pub params: std::collections::BTreeMap<String, usize>,
    pub n: usize,
    pub e: usize,
    pub certification: patterns::ConstraintReport,
}

impl ConstructionManifest {
    pub fn new(
        family: &str,
        params: &[(String, usize)],
        g: &Graph,
        certification: &patterns::ConstraintReport,
    ) -> Self {
        ConstructionManifest {
            family: family.to_string(),
            params: params.iter().cloned().collect(),
            n: g.n(),
            e: g.edge_count(),
            certification: certification.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named_graph;
    use crate::patterns::{contains_induced, contains_subgraph};

    fn field(q: usize) -> PrimePowerField {
        PrimePowerField::new(q).unwrap()
    }

    #[test]
    fn turan_graphs() {
        let t42 = turan_graph(4, 2).unwrap();
        assert_eq!(t42.edge_count(), 4);
        let t73 = turan_graph(7, 3).unwrap();
        assert_eq!(t73.edge_count(), 16);
        let t62 = turan_graph(6, 2).unwrap();
        assert_eq!(t62.edge_count(), 9);
        assert!(turan_graph(5, 1).is_err());
    }

    #[test]
    fn complete_bipartite_basics() {
        let g = complete_bipartite(2, 3).unwrap();
        assert_eq!((g.n(), g.edge_count()), (5, 6));
        assert!(!contains_induced(
            &complete_bipartite(3, 3).unwrap(),
            &named_graph("P", &[4]).unwrap()
        ));
        assert_eq!(complete_bipartite(1, 1).unwrap().edge_count(), 1);
    }

    #[test]
    fn heawood_graph() {
        let g = projective_plane_incidence(&field(2));
        assert_eq!((g.n(), g.edge_count()), (14, 21));
        assert!((0..14).all(|v| g.degree(v) == 3));
        // girth 6
        for k in 3..=5 {
            assert!(!contains_subgraph(&g, &named_graph("C", &[k]).unwrap()));
        }
        assert!(contains_subgraph(&g, &named_graph("C", &[6]).unwrap()));
    }

    #[test]
    fn incidence_q3() {
        let g = projective_plane_incidence(&field(3));
        assert_eq!((g.n(), g.edge_count()), (26, 52));
        assert!((0..26).all(|v| g.degree(v) == 4));
        assert!(!contains_subgraph(&g, &named_graph("C", &[4]).unwrap()));
    }

    #[test]
    fn polarity_graphs() {
        for q in [2usize, 3] {
            let g = polarity_graph(&field(q));
            assert_eq!(g.n(), q * q + q + 1);
            assert_eq!(g.edge_count(), q * (q + 1) * (q + 1) / 2);
            assert!(!contains_subgraph(&g, &named_graph("K", &[2, 2]).unwrap()));
            // no two vertices share two common neighbors
            for u in 0..g.n() {
                for v in (u + 1)..g.n() {
                    assert!(g.neighbors(u).intersect(g.neighbors(v)).len() <= 1);
                }
            }
        }
    }

    #[test]
    fn point_doubling() {
        let g = bollobas_gyori(&field(2));
        assert_eq!(g.n(), 21);
        // achieved edge count is (2q+3)(q^2+q+1)
        assert_eq!(g.edge_count(), 7 * 7);
        assert!(!contains_subgraph(&g, &named_graph("C", &[5]).unwrap()));
        assert!(!contains_induced(&g, &named_graph("C", &[4]).unwrap()));
        // but C4 does occur as a non-induced subgraph
        assert!(contains_subgraph(&g, &named_graph("C", &[4]).unwrap()));
    }

    #[test]
    fn orbit_graph_sizes() {
        let g = furedi_k2t(&field(5), 2).unwrap();
        assert_eq!(g.n(), 12);
        assert!(!contains_subgraph(&g, &named_graph("K", &[2, 3]).unwrap()));

        let g = furedi_k2t(&field(4), 3).unwrap();
        assert_eq!(g.n(), 5);
        assert!(!contains_subgraph(&g, &named_graph("K", &[2, 4]).unwrap()));

        assert!(furedi_k2t(&field(5), 3).is_err());
    }

    #[test]
    fn local_cut_guarantees() {
        let c5 = named_graph("C", &[5]).unwrap();
        let cut = local_max_cut(&c5);
        assert!(cut.cut_edges >= 3);

        let k4 = named_graph("K", &[4]).unwrap();
        assert_eq!(local_max_cut(&k4).cut_edges, 4);

        // proper 2-coloring of K33 is locally optimal: all 9 edges cut
        let k33 = named_graph("K", &[3, 3]).unwrap();
        let cut = local_max_cut_from(&k33, VertexSet::from_iter(0..3));
        assert_eq!(cut.cut_edges, 9);
    }

    #[test]
    fn cut_edge_floor() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..30 {
            let n = rng.gen_range(2..=16usize);
            let mut b = GraphBuilder::new(n);
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.gen_bool(0.4) {
                        b.add_edge(u, v);
                    }
                }
            }
            let g = b.build();
            let cut = local_max_cut(&g);
            assert!(2 * cut.cut_edges >= g.edge_count());
            // per-vertex majority condition
            for v in 0..g.n() {
                let same = if cut.side_a.contains(v) {
                    g.neighbors(v).intersect(cut.side_a)
                } else {
                    g.neighbors(v).minus(cut.side_a)
                };
                assert!(2 * same.len() <= g.degree(v));
            }
            // cut subgraph is bipartite by construction
            let sub = cut_subgraph(&g, cut.side_a);
            for (u, v) in sub.edges() {
                assert_ne!(cut.side_a.contains(u), cut.side_a.contains(v));
            }
            assert_eq!(sub.edge_count(), cut.cut_edges);
        }
    }
}
