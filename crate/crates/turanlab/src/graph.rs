//! Immutable simple graphs on up to 64 vertices with bitset adjacency rows.

use std::fmt;

use crate::error::GraphError;

/// Maximum vertex count for the single-word fast path.
pub const MAX_VERTICES: usize = 64;

/// A set of vertices of a host graph, stored as one machine word.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut bits = 0u64;
        for v in iter {
            bits |= 1u64 << v;
        }
        VertexSet(bits)
    }

    /// All vertices `0..n`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub fn union(&self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersect(&self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn minus(&self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset_of(&self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Iterates members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// An immutable simple graph. Adjacency is symmetric and loop-free by
/// construction; all mutation goes through [`GraphBuilder`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Empty graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "vertex count {n} exceeds {MAX_VERTICES}");
        Graph {
            n,
            adj: vec![0; n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Neighbor bitset of `v`.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Complement: `u~v` iff `u != v` and `u` is not adjacent to `v` here.
    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n).0;
        let adj = (0..self.n)
            .map(|v| (full & !self.adj[v]) & !(1u64 << v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Subgraph induced on `s`, vertices relabeled `0..|s|-1` preserving order.
    pub fn induced_on(&self, s: VertexSet) -> Result<Graph, GraphError> {
        if !s.is_subset_of(self.vertices()) {
            return Err(GraphError::VertexOutOfRange);
        }
        let members: Vec<usize> = s.iter().collect();
        let mut b = GraphBuilder::new(members.len());
        for (i, &u) in members.iter().enumerate() {
            for (j, &v) in members.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    b.add_edge(i, j);
                }
            }
        }
        Ok(b.build())
    }

    /// Vertices adjacent to every member of `s`. Errors on empty `s`.
    pub fn common_neighborhood(&self, s: VertexSet) -> Result<VertexSet, GraphError> {
        if s.is_empty() {
            return Err(GraphError::EmptyVertexSet);
        }
        if !s.is_subset_of(self.vertices()) {
            return Err(GraphError::VertexOutOfRange);
        }
        let mut common = VertexSet::full(self.n);
        for v in s.iter() {
            common = common.intersect(self.neighbors(v));
        }
        Ok(common)
    }

    /// New graph with one extra vertex whose neighborhood is `mask`.
    pub fn with_vertex(&self, mask: u64) -> Graph {
        let k = self.n;
        assert!(k < MAX_VERTICES);
        debug_assert_eq!(mask & !VertexSet::full(k).0, 0);
        let mut adj = self.adj.clone();
        for (v, row) in adj.iter_mut().enumerate() {
            if mask >> v & 1 == 1 {
                *row |= 1u64 << k;
            }
        }
        adj.push(mask);
        Graph { n: k + 1, adj }
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut b = GraphBuilder::new(self.n);
        for (u, v) in self.edges() {
            b.add_edge(perm[u], perm[v]);
        }
        b.build()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, e={}, {:?})", self.n, self.edge_count(), self.edges())
    }
}

/// Mutable construction stage for [`Graph`].
pub struct GraphBuilder {
    n: usize,
    adj: Vec<u64>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "vertex count {n} exceeds {MAX_VERTICES}");
        GraphBuilder {
            n,
            adj: vec![0; n],
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n && u != v, "bad edge ({u},{v}) for n={}", self.n);
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
    }

    pub fn build(self) -> Graph {
        Graph {
            n: self.n,
            adj: self.adj,
        }
    }
}

/// Builds a named graph family with a canonical vertex ordering:
/// cycles and paths are numbered along the walk, complete bipartite
/// graphs list the first side before the second, the Petersen graph
/// uses the outer 5-cycle 0..4 followed by the inner 5-star.
pub fn named_graph(family: &str, params: &[usize]) -> Result<Graph, GraphError> {
    match (family, params) {
        ("C", &[k]) => {
            if k < 3 {
                return Err(GraphError::InvalidParameter(format!("C{k}: cycle needs length >= 3")));
            }
            let mut b = GraphBuilder::new(k);
            for v in 0..k {
                b.add_edge(v, (v + 1) % k);
            }
            Ok(b.build())
        }
        ("P", &[k]) => {
            if k < 1 {
                return Err(GraphError::InvalidParameter("P0: path needs >= 1 vertex".into()));
            }
            let mut b = GraphBuilder::new(k);
            for v in 1..k {
                b.add_edge(v - 1, v);
            }
            Ok(b.build())
        }
        ("K", &[r]) => {
            if r < 1 {
                return Err(GraphError::InvalidParameter("K0: clique needs >= 1 vertex".into()));
            }
            let mut b = GraphBuilder::new(r);
            for u in 0..r {
                for v in (u + 1)..r {
                    b.add_edge(u, v);
                }
            }
            Ok(b.build())
        }
        ("K", &[a, b_side]) => {
            if a < 1 || b_side < 1 {
                return Err(GraphError::InvalidParameter("K{a,b}: sides need >= 1 vertex".into()));
            }
            let mut b = GraphBuilder::new(a + b_side);
            for u in 0..a {
                for v in a..a + b_side {
                    b.add_edge(u, v);
                }
            }
            Ok(b.build())
        }
        ("petersen", &[]) => {
            let mut b = GraphBuilder::new(10);
            for v in 0..5 {
                b.add_edge(v, (v + 1) % 5);
                b.add_edge(v, v + 5);
                b.add_edge(v + 5, (v + 2) % 5 + 5);
            }
            Ok(b.build())
        }
        _ => Err(GraphError::UnknownFamily(format!("{family}{params:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_families() {
        let c5 = named_graph("C", &[5]).unwrap();
        assert_eq!(c5.n(), 5);
        assert_eq!(c5.edge_count(), 5);
        assert!((0..5).all(|v| c5.degree(v) == 2));

        let k23 = named_graph("K", &[2, 3]).unwrap();
        assert_eq!(k23.n(), 5);
        assert_eq!(k23.edge_count(), 6);

        let p4 = named_graph("P", &[4]).unwrap();
        assert_eq!(p4.n(), 4);
        assert_eq!(p4.edge_count(), 3);

        assert!(named_graph("C", &[2]).is_err());
        assert!(named_graph("Q", &[3]).is_err());

        let pet = named_graph("petersen", &[]).unwrap();
        assert_eq!(pet.n(), 10);
        assert_eq!(pet.edge_count(), 15);
        assert!((0..10).all(|v| pet.degree(v) == 3));
    }

    #[test]
    fn complement_basics() {
        let k5 = named_graph("K", &[5]).unwrap();
        assert_eq!(k5.complement().edge_count(), 0);

        let c5 = named_graph("C", &[5]).unwrap();
        // C5 is self-complementary.
        assert_eq!(c5.complement().edge_count(), 5);
        assert!((0..5).all(|v| c5.complement().degree(v) == 2));
    }

    #[test]
    fn induced_subgraphs() {
        let k23 = named_graph("K", &[2, 3]).unwrap();
        let side = VertexSet::from_iter([2, 3, 4]);
        assert_eq!(k23.induced_on(side).unwrap().edge_count(), 0);

        let c6 = named_graph("C", &[6]).unwrap();
        let g = c6.induced_on(VertexSet::from_iter([0, 1, 2, 3])).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edge_count(), 3); // P4

        let all = c6.induced_on(c6.vertices()).unwrap();
        assert_eq!(all, c6);

        assert!(k23.induced_on(VertexSet::from_iter([7])).is_err());
    }

    #[test]
    fn common_neighborhoods() {
        let k23 = named_graph("K", &[2, 3]).unwrap();
        let two_side = VertexSet::from_iter([0, 1]);
        let common = k23.common_neighborhood(two_side).unwrap();
        assert_eq!(common, VertexSet::from_iter([2, 3, 4]));

        let c5 = named_graph("C", &[5]).unwrap();
        let common = c5.common_neighborhood(VertexSet::from_iter([0, 2])).unwrap();
        assert_eq!(common, VertexSet::singleton(1));

        assert!(c5.common_neighborhood(VertexSet::EMPTY).is_err());
    }
}
