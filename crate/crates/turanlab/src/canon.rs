//! Isomorphism-invariant canonical labeling via equitable partition
//! refinement with backtracking over the refinement-stabilized cells.

use crate::error::SearchError;
use crate::graph::{Graph, MAX_VERTICES};

/// A canonical relabeling and the certificate it produces. Isomorphic
/// graphs yield identical certificates, and the certificate determines
/// the graph up to isomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    /// `relabeling[v]` is the canonical position of original vertex `v`.
    pub relabeling: Vec<usize>,
    pub certificate: Vec<u8>,
}

type Partition = Vec<Vec<usize>>;

fn cell_bits(cell: &[usize]) -> u64 {
    cell.iter().fold(0u64, |acc, &v| acc | 1u64 << v)
}

/// Equitable refinement: split cells by neighbor counts into every cell
/// until stable. Cell order is deterministic (subcells ordered by count).
fn refine(g: &Graph, mut cells: Partition) -> Partition {
    'outer: loop {
        for si in 0..cells.len() {
            let splitter = cell_bits(&cells[si]);
            let mut next: Partition = Vec::with_capacity(cells.len());
            let mut changed = false;
            for cell in &cells {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut groups: std::collections::BTreeMap<u32, Vec<usize>> = Default::default();
                for &v in cell {
                    let cnt = (g.neighbors(v).0 & splitter).count_ones();
                    groups.entry(cnt).or_default().push(v);
                }
                if groups.len() > 1 {
                    changed = true;
                }
                next.extend(groups.into_values());
            }
            if changed {
                cells = next;
                continue 'outer;
            }
        }
        return cells;
    }
}

/// A stable partition is homogeneous when every cell induces a clique or
/// an independent set and every cell pair is completely joined or
/// completely non-adjacent. Then any ordering consistent with the cell
/// order yields the same adjacency matrix, so no branching is needed.
fn homogeneous(g: &Graph, cells: &Partition) -> bool {
    let bits: Vec<u64> = cells.iter().map(|c| cell_bits(c)).collect();
    for (i, cell) in cells.iter().enumerate() {
        let v = cell[0];
        let inner = (g.neighbors(v).0 & bits[i]).count_ones() as usize;
        if inner != 0 && inner != cell.len() - 1 {
            return false;
        }
        for (j, other) in cells.iter().enumerate() {
            if i == j {
                continue;
            }
            let cross = (g.neighbors(v).0 & bits[j]).count_ones() as usize;
            if cross != 0 && cross != other.len() {
                return false;
            }
        }
    }
    true
}

fn certificate_for(g: &Graph, order: &[usize]) -> Vec<u8> {
    let n = order.len();
    let mut bytes = vec![n as u8];
    let mut acc = 0u8;
    let mut filled = 0;
    for i in 0..n {
        for j in (i + 1)..n {
            acc = acc << 1 | u8::from(g.has_edge(order[i], order[j]));
            filled += 1;
            if filled == 8 {
                bytes.push(acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push(acc << (8 - filled));
    }
    bytes
}

fn search(g: &Graph, cells: Partition, best: &mut Option<(Vec<u8>, Vec<usize>)>) {
    let cells = refine(g, cells);
    if cells.iter().all(|c| c.len() == 1) || homogeneous(g, &cells) {
        let order: Vec<usize> = cells.iter().flatten().copied().collect();
        let cert = certificate_for(g, &order);
        if best.as_ref().is_none_or(|(b, _)| cert < *b) {
            *best = Some((cert, order));
        }
        return;
    }
    // branch on the first smallest non-singleton cell
    let (idx, _) = cells
        .iter()
        .enumerate()
        .filter(|(_, c)| c.len() > 1)
        .min_by_key(|(i, c)| (c.len(), *i))
        .unwrap();
    for &v in &cells[idx] {
        let mut child: Partition = Vec::with_capacity(cells.len() + 1);
        for (i, cell) in cells.iter().enumerate() {
            if i == idx {
                child.push(vec![v]);
                child.push(cell.iter().copied().filter(|&u| u != v).collect());
            } else {
                child.push(cell.clone());
            }
        }
        search(g, child, best);
    }
}

/// Deterministic, isomorphism-invariant canonical form for graphs on at
/// most 64 vertices.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, SearchError> {
    let n = g.n();
    if n > MAX_VERTICES {
        return Err(SearchError::CanonTooLarge(n));
    }
    if n == 0 {
        return Ok(CanonicalForm {
            relabeling: Vec::new(),
            certificate: vec![0],
        });
    }
    let mut best = None;
    search(g, vec![(0..n).collect()], &mut best);
    let (certificate, order) = best.unwrap();
    let mut relabeling = vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        relabeling[v] = pos;
    }
    Ok(CanonicalForm {
        relabeling,
        certificate,
    })
}

/// Certificate only; the common case for isomorph rejection.
pub fn certificate(g: &Graph) -> Result<Vec<u8>, SearchError> {
    canonical_form(g).map(|c| c.certificate)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{named_graph, Graph, GraphBuilder};
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};

    fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
        let mut b = GraphBuilder::new(n);
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.gen_bool(p) {
                    b.add_edge(u, v);
                }
            }
        }
        b.build()
    }

    #[test]
    fn invariant_under_relabeling() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let n = rng.gen_range(1..=12usize);
            let p = rng.gen_range(0.1..0.9);
            let g = random_graph(&mut rng, n, p);
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            let h = g.relabel(&perm);
            assert_eq!(certificate(&g).unwrap(), certificate(&h).unwrap());
        }
    }

    #[test]
    fn cycle_relabelings_agree() {
        let c5 = named_graph("C", &[5]).unwrap();
        let shifted = c5.relabel(&[2, 3, 4, 0, 1]);
        assert_eq!(certificate(&c5).unwrap(), certificate(&shifted).unwrap());
    }

    #[test]
    fn distinguishes_non_isomorphic() {
        // K4 plus isolated vertex vs K_{2,3}: same n, different structure
        let k4_iso = {
            let mut b = GraphBuilder::new(5);
            for u in 0..4 {
                for v in (u + 1)..4 {
                    b.add_edge(u, v);
                }
            }
            b.build()
        };
        let k23 = named_graph("K", &[2, 3]).unwrap();
        assert_ne!(certificate(&k4_iso).unwrap(), certificate(&k23).unwrap());
    }

    #[test]
    fn relabeling_reproduces_certificate() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        for _ in 0..50 {
            let n = rng.gen_range(1..=10usize);
            let g = random_graph(&mut rng, n, 0.5);
            let form = canonical_form(&g).unwrap();
            let canon = g.relabel(&form.relabeling);
            let identity: Vec<usize> = (0..n).collect();
            assert_eq!(certificate_for(&canon, &identity), form.certificate);
        }
    }

    #[test]
    fn all_four_vertex_classes_distinct() {
        // enumerate all 2^6 labeled graphs on 4 vertices; exactly 11 classes
        let mut certs = std::collections::HashSet::new();
        for mask in 0u32..64 {
            let mut b = GraphBuilder::new(4);
            let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
            for (bit, &(u, v)) in pairs.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    b.add_edge(u, v);
                }
            }
            certs.insert(certificate(&b.build()).unwrap());
        }
        assert_eq!(certs.len(), 11);
    }

    #[test]
    fn symmetric_graphs_terminate_quickly() {
        // pathological symmetry: empty, complete, complete bipartite
        for g in [
            Graph::empty(14),
            named_graph("K", &[14]).unwrap(),
            named_graph("K", &[7, 7]).unwrap(),
            named_graph("C", &[14]).unwrap(),
        ] {
            certificate(&g).unwrap();
        }
    }
}
