//! Undirected simple graphs on up to 64 vertices as bitset adjacency
//! rows, named families with closed-form spectra, and the structural
//! predicates the verification harness filters on.

use crate::eigen::Spectrum;
use crate::error::{Error, Result};
use crate::matrix::SymmetricMatrix;

/// Maximum vertex count for the bitset representation.
pub const MAX_VERTICES: usize = 64;

/// Undirected simple graph: symmetric bitset adjacency, zero diagonal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::OrderOutOfRange { n, cap: MAX_VERTICES });
        }
        Ok(Self { n, rows: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n {
            return Err(Error::IndexOutOfRange { index: u, n: self.n });
        }
        if v >= self.n {
            return Err(Error::IndexOutOfRange { index: v, n: self.n });
        }
        if u == v {
            // self-loops are not representable
            return Err(Error::IndexOutOfRange { index: u, n: self.n });
        }
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    /// Neighborhood of `v` as a bitmask.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.rows[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    /// 0/1 adjacency matrix.
    pub fn adjacency(&self) -> SymmetricMatrix {
        SymmetricMatrix::from_fn(self.n, |i, j| if i != j && self.has_edge(i, j) { 1.0 } else { 0.0 })
            .expect("graph order is within the matrix cap")
    }

    /// Mask of all vertices reachable from `start` while staying inside
    /// `allowed`.
    fn reach(&self, start: usize, allowed: u64) -> u64 {
        debug_assert!(allowed >> start & 1 == 1);
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.rows[v] & allowed & !seen;
            }
            seen |= next;
            frontier = next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        let all = full_mask(self.n);
        self.reach(0, all) == all
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) == self.n - 1)
    }

    /// Vertex-disjoint connected components as bitmasks, ordered by their
    /// smallest vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut remaining = full_mask(self.n);
        let mut out = Vec::new();
        while remaining != 0 {
            let v = remaining.trailing_zeros() as usize;
            let comp = self.reach(v, remaining);
            out.push(comp);
            remaining &= !comp;
        }
        out
    }

    /// Subgraph induced by `keep` (as vertex indices), relabeled
    /// 0..|keep|-1 preserving order.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Result<Graph> {
        if keep.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        if let Some(&bad) = keep.iter().find(|&&v| v >= self.n) {
            return Err(Error::IndexOutOfRange { index: bad, n: self.n });
        }
        let mut g = Graph::empty(keep.len())?;
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.rows[i] |= 1 << j;
                    g.rows[j] |= 1 << i;
                }
            }
        }
        Ok(g)
    }

    /// Subgraph induced by a vertex bitmask.
    pub fn induced_subgraph_mask(&self, mask: u64) -> Result<Graph> {
        let keep: Vec<usize> = mask_vertices(mask);
        self.induced_subgraph(&keep)
    }

    /// Graph with one vertex removed.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced_subgraph(&keep)
    }

    /// Extends by a fresh vertex adjacent to the vertices in `mask`.
    pub fn with_new_vertex(&self, mask: u64) -> Result<Graph> {
        let n = self.n + 1;
        if n > MAX_VERTICES {
            return Err(Error::OrderOutOfRange { n, cap: MAX_VERTICES });
        }
        debug_assert_eq!(mask & !full_mask(self.n), 0);
        let mut rows = self.rows.clone();
        rows.push(mask);
        let mut m = mask;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            rows[v] |= 1 << self.n;
        }
        Ok(Graph { n, rows })
    }

    /// Disjoint union, vertices of `other` relabeled after `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::OrderOutOfRange { n, cap: MAX_VERTICES });
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().map(|r| r << self.n));
        Ok(Graph { n, rows })
    }

    /// Applies a vertex relabeling: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n).expect("same order");
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.has_edge(u, v) {
                    g.rows[perm[u]] |= 1 << perm[v];
                    g.rows[perm[v]] |= 1 << perm[u];
                }
            }
        }
        g
    }

    /// Structural facts used by the theorem filters.
    pub fn predicates(&self) -> StructuralReport {
        let components = self.components();
        let connected = components.len() == 1;
        let complete = self.is_complete();
        let dominating_vertices: Vec<usize> =
            (0..self.n).filter(|&v| self.degree(v) == self.n - 1).collect();
        let is_disjoint_union_of_cliques = components.iter().all(|&mask| {
            mask_vertices(mask).iter().all(|&v| {
                // inside its component every vertex must see all others
                (self.rows[v] & mask) | (1 << v) == mask
            })
        });
        StructuralReport {
            connected,
            complete,
            dominating_vertices,
            is_disjoint_union_of_cliques,
            components,
        }
    }
}

/// Mask with the lowest `n` bits set.
#[inline]
pub fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Vertex indices of a bitmask, ascending.
pub fn mask_vertices(mut mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        out.push(mask.trailing_zeros() as usize);
        mask &= mask - 1;
    }
    out
}

/// Result of [`Graph::predicates`].
#[derive(Clone, Debug)]
pub struct StructuralReport {
    pub connected: bool,
    pub complete: bool,
    pub dominating_vertices: Vec<usize>,
    pub is_disjoint_union_of_cliques: bool,
    pub components: Vec<u64>,
}

/// Named graph families with canonical vertex labelings.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    Star,
    Edgeless,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::Star => "star",
            Family::Edgeless => "edgeless",
        }
    }
}

/// Builds a family member on `n` vertices: paths and cycles labeled in
/// order, stars centered at vertex 0.
pub fn family(kind: Family, n: usize) -> Result<Graph> {
    let min = if kind == Family::Cycle { 3 } else { 1 };
    if n < min {
        return Err(Error::FamilyOrder { family: kind.name(), n, min });
    }
    let mut g = Graph::empty(n)?;
    match kind {
        Family::Path => {
            for i in 0..n - 1 {
                g.add_edge(i, i + 1)?;
            }
        }
        Family::Cycle => {
            for i in 0..n - 1 {
                g.add_edge(i, i + 1)?;
            }
            g.add_edge(n - 1, 0)?;
        }
        Family::Complete => {
            for i in 0..n {
                for j in (i + 1)..n {
                    g.add_edge(i, j)?;
                }
            }
        }
        Family::Star => {
            for i in 1..n {
                g.add_edge(0, i)?;
            }
        }
        Family::Edgeless => {}
    }
    Ok(g)
}

/// Parses the family mini-language: `P7`, `C12`, `K5`, `S4` (star with 4
/// leaves, i.e. 5 vertices), `E3` (edgeless).
pub fn parse_family_spec(spec: &str) -> Result<(Family, usize)> {
    let spec = spec.trim();
    let Some(head) = spec.chars().next() else {
        return Err(Error::InvalidFamily(spec.into()));
    };
    let count: usize = spec[head.len_utf8()..]
        .parse()
        .map_err(|_| Error::InvalidFamily(spec.into()))?;
    match head.to_ascii_uppercase() {
        'P' => Ok((Family::Path, count)),
        'C' => Ok((Family::Cycle, count)),
        'K' => Ok((Family::Complete, count)),
        // S<l> is the star with l leaves
        'S' => Ok((Family::Star, count + 1)),
        'E' => Ok((Family::Edgeless, count)),
        _ => Err(Error::InvalidFamily(spec.into())),
    }
}

/// Closed-form adjacency spectra: `2 cos(k pi / (n+1))` for paths,
/// `2 cos(2 pi k / n)` for cycles, `{n-1, -1 x (n-1)}` for complete
/// graphs and `{sqrt(l), 0 x (l-1), -sqrt(l)}` for stars.
pub fn closed_form_spectrum(kind: Family, n: usize) -> Result<Spectrum> {
    let min = if kind == Family::Cycle { 3 } else { 1 };
    if n < min {
        return Err(Error::FamilyOrder { family: kind.name(), n, min });
    }
    use std::f64::consts::PI;
    let values: Vec<f64> = match kind {
        Family::Path => (1..=n).map(|k| 2.0 * (k as f64 * PI / (n as f64 + 1.0)).cos()).collect(),
        Family::Cycle => (0..n).map(|k| 2.0 * (2.0 * PI * k as f64 / n as f64).cos()).collect(),
        Family::Complete => {
            let mut v = vec![-1.0; n];
            v[0] = (n - 1) as f64;
            v
        }
        Family::Star => {
            let leaves = (n - 1) as f64;
            let mut v = vec![0.0; n];
            if n > 1 {
                v[0] = leaves.sqrt();
                v[n - 1] = -leaves.sqrt();
            }
            v
        }
        Family::Edgeless => return Err(Error::InvalidFamily("edgeless has no closed form entry".into())),
    };
    // scale mirrors eigenvalues(): max row sum of the adjacency matrix
    let scale = match kind {
        Family::Path => if n > 1 { 2.0 } else { 0.0 },
        Family::Cycle => 2.0,
        Family::Complete => (n - 1) as f64,
        Family::Star => (n - 1) as f64,
        Family::Edgeless => 0.0,
    };
    Ok(Spectrum::new(values, scale))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eigen::eigenvalues;
    use approx::assert_abs_diff_eq;

    #[test]
    fn family_construction() {
        assert_eq!(family(Family::Path, 2).unwrap().edge_count(), 1);
        assert_eq!(family(Family::Complete, 4).unwrap().edge_count(), 6);
        let star = family(Family::Star, 4).unwrap();
        assert_eq!(star.degree_sequence(), vec![1, 1, 1, 3]);
        assert!(family(Family::Cycle, 2).is_err());
    }

    #[test]
    fn family_spec_parsing() {
        assert_eq!(parse_family_spec("P7").unwrap(), (Family::Path, 7));
        assert_eq!(parse_family_spec("C12").unwrap(), (Family::Cycle, 12));
        assert_eq!(parse_family_spec("K5").unwrap(), (Family::Complete, 5));
        // S4 is the star with 4 leaves
        assert_eq!(parse_family_spec("S4").unwrap(), (Family::Star, 5));
        assert!(parse_family_spec("X3").is_err());
        assert!(parse_family_spec("P").is_err());
    }

    #[test]
    fn adjacency_entries() {
        let p3 = family(Family::Path, 3).unwrap();
        assert_eq!(
            p3.adjacency().as_slice(),
            &[0.0, 1.0, 0.0, 1.0, 0.0, 1.0, 0.0, 1.0, 0.0]
        );
        let e3 = family(Family::Edgeless, 3).unwrap();
        assert_eq!(e3.adjacency().as_slice(), &[0.0; 9]);
    }

    #[test]
    fn closed_forms_match_solver() {
        for (kind, n) in [
            (Family::Path, 7),
            (Family::Cycle, 4),
            (Family::Complete, 5),
            (Family::Star, 6),
        ] {
            let computed = eigenvalues(&family(kind, n).unwrap().adjacency()).unwrap();
            let closed = closed_form_spectrum(kind, n).unwrap();
            for (a, b) in computed.values().iter().zip(closed.values()) {
                assert_abs_diff_eq!(a, b, epsilon = 1e-10);
            }
        }
        // spot values
        let c4 = closed_form_spectrum(Family::Cycle, 4).unwrap();
        assert_abs_diff_eq!(c4.values()[0], 2.0, epsilon = 1e-12);
        assert_abs_diff_eq!(c4.values()[1], 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(c4.values()[3], -2.0, epsilon = 1e-12);
        // largest path eigenvalue stays below 2
        for n in [2, 10, 100] {
            assert!(closed_form_spectrum(Family::Path, n).unwrap().max() < 2.0);
        }
    }

    #[test]
    fn predicates_on_small_graphs() {
        let k4 = family(Family::Complete, 4).unwrap();
        let p = k4.predicates();
        assert!(p.connected && p.complete && p.is_disjoint_union_of_cliques);
        assert_eq!(p.dominating_vertices.len(), 4);

        let p3 = family(Family::Path, 3).unwrap();
        let p = p3.predicates();
        assert!(p.connected && !p.complete && !p.is_disjoint_union_of_cliques);
        assert_eq!(p.dominating_vertices, vec![1]);

        let both = family(Family::Complete, 3)
            .unwrap()
            .disjoint_union(&family(Family::Complete, 2).unwrap())
            .unwrap();
        let p = both.predicates();
        assert!(!p.connected && p.is_disjoint_union_of_cliques);
        assert_eq!(p.components.len(), 2);
    }

    #[test]
    fn induced_subgraphs() {
        let p4 = family(Family::Path, 4).unwrap();
        let p3 = p4.induced_subgraph(&[0, 1, 2]).unwrap();
        assert_eq!(p3, family(Family::Path, 3).unwrap());

        let same = p4.induced_subgraph(&[0, 1, 2, 3]).unwrap();
        assert_eq!(same, p4);

        let k5 = family(Family::Complete, 5).unwrap();
        let k3 = k5.induced_subgraph(&[1, 2, 4]).unwrap();
        assert_eq!(k3, family(Family::Complete, 3).unwrap());

        assert!(p4.induced_subgraph(&[]).is_err());
    }

    #[test]
    fn relabeling_preserves_degree_sequence() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (1, 3)]).unwrap();
        let h = g.relabel(&[2, 0, 3, 1]);
        assert_eq!(g.degree_sequence(), h.degree_sequence());
        assert!(h.has_edge(2, 0));
    }
}
