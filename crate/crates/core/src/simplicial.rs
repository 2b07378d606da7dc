//! Abstract and geometric simplicial complexes: Rips, one-dimensional Čech
//! and general flag complexes, induced spans and cone detection.
//!
//! Simplices are strictly increasing vertex lists. Each dimension is kept in
//! lexicographic order, which fixes the row and column order of every
//! boundary matrix built from a complex.

use std::collections::{BTreeSet, HashSet};

use thiserror::Error;

use crate::geometry::{dist2, GeometryError, Point, Rational};

pub type Simplex = Vec<usize>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("points {0} and {1} coincide")]
    DuplicatePoint(usize, usize),
    #[error("scale must be positive")]
    NonPositiveScale,
    #[error("dimension cap must be at least 1")]
    DimCapTooSmall,
    #[error("expected points in dimension {expected}, got {got}")]
    WrongDimension { expected: usize, got: usize },
    #[error("points do not share a single ambient dimension")]
    MixedDimensions,
    #[error("unknown vertex {0}")]
    UnknownVertex(usize),
    #[error("operation requires a flag complex")]
    NotFlag,
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

/// How a complex was produced. Certificate checks consult this to decide
/// whether their hypotheses hold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComplexKind {
    Rips { scale: Rational },
    Cech1d { scale: Rational },
    Quasi { lower: Rational, upper: Rational },
    Abstract,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    n_vertices: usize,
    coords: Option<Vec<Point>>,
    /// `simplices[k]` holds the k-simplices, lexicographically sorted.
    simplices: Vec<Vec<Simplex>>,
    dim_cap: usize,
    flag: bool,
    kind: ComplexKind,
    adjacency: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    /// Flag complex of a graph, materialized through dimension `dim_cap`.
    pub fn flag_from_graph(
        n_vertices: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
        dim_cap: usize,
    ) -> Result<Self, ComplexError> {
        let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n_vertices];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n_vertices {
                    return Err(ComplexError::UnknownVertex(w));
                }
            }
            if u != v {
                adj[u].insert(v);
                adj[v].insert(u);
            }
        }
        let adjacency: Vec<Vec<usize>> = adj.into_iter().map(|s| s.into_iter().collect()).collect();
        let simplices = enumerate_cliques(&adjacency, dim_cap);
        Ok(Self {
            n_vertices,
            coords: None,
            simplices,
            dim_cap,
            flag: true,
            kind: ComplexKind::Abstract,
            adjacency,
        })
    }

    /// Closure under faces of a list of simplices (each given in any vertex
    /// order). The result is not marked flag even when it happens to be.
    pub fn from_simplices(
        n_vertices: usize,
        generators: impl IntoIterator<Item = Simplex>,
    ) -> Result<Self, ComplexError> {
        let mut by_dim: Vec<BTreeSet<Simplex>> = Vec::new();
        for mut s in generators {
            s.sort_unstable();
            s.dedup();
            if let Some(&v) = s.iter().find(|&&v| v >= n_vertices) {
                return Err(ComplexError::UnknownVertex(v));
            }
            if s.is_empty() {
                continue;
            }
            // every nonempty subset
            let k = s.len();
            for mask in 1u64..(1u64 << k) {
                let face: Simplex = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| s[i]).collect();
                let d = face.len() - 1;
                if by_dim.len() <= d {
                    by_dim.resize_with(d + 1, BTreeSet::new);
                }
                by_dim[d].insert(face);
            }
        }
        if by_dim.is_empty() {
            by_dim.push(BTreeSet::new());
        }
        by_dim[0] = (0..n_vertices).map(|v| vec![v]).collect();
        let dim_cap = by_dim.len().saturating_sub(1).max(1);
        by_dim.resize_with(dim_cap + 1, BTreeSet::new);
        let simplices: Vec<Vec<Simplex>> = by_dim.into_iter().map(|s| s.into_iter().collect()).collect();
        let mut adjacency = vec![Vec::new(); n_vertices];
        for e in &simplices[1] {
            adjacency[e[0]].push(e[1]);
            adjacency[e[1]].push(e[0]);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Self {
            n_vertices,
            coords: None,
            simplices,
            dim_cap,
            flag: false,
            kind: ComplexKind::Abstract,
            adjacency,
        })
    }

    pub fn with_coords(mut self, coords: Vec<Point>) -> Self {
        assert_eq!(coords.len(), self.n_vertices);
        self.coords = Some(coords);
        self
    }

    pub fn with_kind(mut self, kind: ComplexKind) -> Self {
        self.kind = kind;
        self
    }

    /// Re-materializes a flag complex to a different dimension cap.
    pub fn with_dim_cap(&self, dim_cap: usize) -> Result<Self, ComplexError> {
        if !self.flag {
            return Err(ComplexError::NotFlag);
        }
        if dim_cap < 1 {
            return Err(ComplexError::DimCapTooSmall);
        }
        let mut out = self.clone();
        out.simplices = enumerate_cliques(&self.adjacency, dim_cap);
        out.dim_cap = dim_cap;
        Ok(out)
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn coords(&self) -> Option<&[Point]> {
        self.coords.as_deref()
    }

    pub fn ambient_dim(&self) -> Option<usize> {
        self.coords.as_ref().and_then(|c| c.first()).map(Point::dim)
    }

    pub fn dim_cap(&self) -> usize {
        self.dim_cap
    }

    pub fn is_flag(&self) -> bool {
        self.flag
    }

    pub fn kind(&self) -> &ComplexKind {
        &self.kind
    }

    /// k-simplices in lexicographic order (empty above the cap).
    pub fn simplices(&self, k: usize) -> &[Simplex] {
        self.simplices.get(k).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn count(&self, k: usize) -> usize {
        self.simplices(k).len()
    }

    /// Simplex counts per dimension 0..=dim_cap.
    pub fn census(&self) -> Vec<usize> {
        self.simplices.iter().map(Vec::len).collect()
    }

    /// Highest dimension with at least one simplex.
    pub fn dimension(&self) -> usize {
        self.simplices.iter().rposition(|s| !s.is_empty()).unwrap_or(0)
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.simplices(1).iter().map(|e| (e[0], e[1]))
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adjacency.get(u).is_some_and(|n| n.binary_search(&v).is_ok())
    }

    pub fn contains(&self, simplex: &[usize]) -> bool {
        let k = simplex.len().wrapping_sub(1);
        self.simplices
            .get(k)
            .is_some_and(|list| list.binary_search_by(|s| s.as_slice().cmp(simplex)).is_ok())
    }

    /// Index of a simplex within its dimension's list.
    pub fn index_of(&self, simplex: &[usize]) -> Option<usize> {
        let k = simplex.len().checked_sub(1)?;
        self.simplices
            .get(k)?
            .binary_search_by(|s| s.as_slice().cmp(simplex))
            .ok()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.simplices
            .iter()
            .enumerate()
            .map(|(k, s)| if k % 2 == 0 { s.len() as i64 } else { -(s.len() as i64) })
            .sum()
    }

    /// True when the materialized simplices are exactly the cliques of the
    /// 1-skeleton up to the cap.
    pub fn satisfies_flag_condition(&self) -> bool {
        enumerate_cliques(&self.adjacency, self.dim_cap) == self.simplices
    }

    /// True when every simplex of `self` is a simplex of `other` (same vertex
    /// indexing).
    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.n_vertices <= other.n_vertices && self.simplices.iter().flatten().all(|s| other.contains(s))
    }

    /// Connected components of the 1-skeleton, as a component label per vertex.
    pub fn component_labels(&self) -> (usize, Vec<usize>) {
        let mut label = vec![usize::MAX; self.n_vertices];
        let mut count = 0;
        for start in 0..self.n_vertices {
            if label[start] != usize::MAX {
                continue;
            }
            let mut stack = vec![start];
            label[start] = count;
            while let Some(v) = stack.pop() {
                for &w in &self.adjacency[v] {
                    if label[w] == usize::MAX {
                        label[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        (count, label)
    }

    /// The subcomplex spanned by a vertex set: every simplex whose vertices
    /// all lie in `verts`. Vertex indices are preserved.
    pub fn induced_span(&self, verts: &[usize]) -> Result<SimplicialComplex, ComplexError> {
        let keep: HashSet<usize> = verts.iter().copied().collect();
        if let Some(&v) = verts.iter().find(|&&v| v >= self.n_vertices) {
            return Err(ComplexError::UnknownVertex(v));
        }
        let mut out = self.clone();
        for list in &mut out.simplices {
            list.retain(|s| s.iter().all(|v| keep.contains(v)));
        }
        for (v, nbrs) in out.adjacency.iter_mut().enumerate() {
            if keep.contains(&v) {
                nbrs.retain(|w| keep.contains(w));
            } else {
                nbrs.clear();
            }
        }
        Ok(out)
    }

    /// Smallest vertex of the span adjacent to every other vertex of the span.
    /// For a flag complex this is exactly the cone condition. Vertices with
    /// no simplices at all (outside the span) are ignored.
    pub fn cone_apex(&self) -> Result<Option<usize>, ComplexError> {
        if !self.flag {
            return Err(ComplexError::NotFlag);
        }
        let support: Vec<usize> = self.support();
        Ok(support
            .iter()
            .copied()
            .find(|&v| support.iter().all(|&w| w == v || self.has_edge(v, w))))
    }

    /// Vertices that carry a 0-simplex.
    pub fn support(&self) -> Vec<usize> {
        self.simplices(0).iter().map(|s| s[0]).collect()
    }

    /// Shortest path in the 1-skeleton, restricted to `allowed` vertices,
    /// breaking ties toward smaller vertex indices.
    pub fn shortest_path(&self, from: usize, to: usize, allowed: &[usize]) -> Option<Vec<usize>> {
        let allowed: HashSet<usize> = allowed.iter().copied().collect();
        if !allowed.contains(&from) || !allowed.contains(&to) {
            return None;
        }
        let mut parent = vec![usize::MAX; self.n_vertices];
        let mut queue = std::collections::VecDeque::from([from]);
        parent[from] = from;
        while let Some(v) = queue.pop_front() {
            if v == to {
                let mut path = vec![to];
                let mut cur = to;
                while cur != from {
                    cur = parent[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            for &w in &self.adjacency[v] {
                if allowed.contains(&w) && parent[w] == usize::MAX {
                    parent[w] = v;
                    queue.push_back(w);
                }
            }
        }
        None
    }
}

/// All cliques of size at most `dim_cap + 1`, grouped by dimension, each
/// dimension in lexicographic order. Requires sorted adjacency lists.
fn enumerate_cliques(adjacency: &[Vec<usize>], dim_cap: usize) -> Vec<Vec<Simplex>> {
    let mut out: Vec<Vec<Simplex>> = vec![Vec::new(); dim_cap + 1];
    let mut current = Vec::with_capacity(dim_cap + 1);
    for v in 0..adjacency.len() {
        let higher: Vec<usize> = adjacency[v].iter().copied().filter(|&w| w > v).collect();
        current.push(v);
        extend(adjacency, &mut current, &higher, dim_cap, &mut out);
        current.pop();
    }
    out
}

// Depth-first extension by larger vertices emits cliques in lexicographic
// order within each dimension.
fn extend(
    adjacency: &[Vec<usize>],
    current: &mut Vec<usize>,
    candidates: &[usize],
    dim_cap: usize,
    out: &mut [Vec<Simplex>],
) {
    out[current.len() - 1].push(current.clone());
    if current.len() > dim_cap {
        return;
    }
    for (i, &w) in candidates.iter().enumerate() {
        let next: Vec<usize> = candidates[i + 1..]
            .iter()
            .copied()
            .filter(|x| adjacency[w].binary_search(x).is_ok())
            .collect();
        current.push(w);
        extend(adjacency, current, &next, dim_cap, out);
        current.pop();
    }
}

/// Rejects empty-dimension mixes and coincident points.
pub fn validate_points(points: &[Point]) -> Result<usize, ComplexError> {
    let dim = points.first().map(Point::dim).unwrap_or(0);
    if points.iter().any(|p| p.dim() != dim) {
        return Err(ComplexError::MixedDimensions);
    }
    let mut seen = std::collections::HashMap::with_capacity(points.len());
    for (i, p) in points.iter().enumerate() {
        if let Some(&j) = seen.get(p) {
            return Err(ComplexError::DuplicatePoint(j, i));
        }
        seen.insert(p, i);
    }
    Ok(dim)
}

/// Pairs `(i, j)`, `i < j`, whose squared distance satisfies `keep`.
pub(crate) fn pairs_where(points: &[Point], mut keep: impl FnMut(&Rational) -> bool) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            let d = dist2(&points[i], &points[j]).expect("validated dimensions");
            if keep(&d) {
                out.push((i, j));
            }
        }
    }
    out
}

/// Rips complex at scale `epsilon`: an edge joins points at distance at most
/// `epsilon`, and every clique of size at most `dim_cap + 1` is a simplex.
pub fn build_rips(points: &[Point], epsilon: &Rational, dim_cap: usize) -> Result<SimplicialComplex, ComplexError> {
    if epsilon <= &Rational::from_integer(0.into()) {
        return Err(ComplexError::NonPositiveScale);
    }
    if dim_cap < 1 {
        return Err(ComplexError::DimCapTooSmall);
    }
    validate_points(points)?;
    let eps2 = epsilon * epsilon;
    let edges = pairs_where(points, |d| d <= &eps2);
    Ok(SimplicialComplex::flag_from_graph(points.len(), edges, dim_cap)?
        .with_coords(points.to_vec())
        .with_kind(ComplexKind::Rips { scale: epsilon.clone() }))
}

/// Čech complex of points on a line: a subset spans a simplex when it fits
/// in a closed interval of length `epsilon`.
pub fn build_cech_1d(points: &[Point], epsilon: &Rational, dim_cap: usize) -> Result<SimplicialComplex, ComplexError> {
    if epsilon <= &Rational::from_integer(0.into()) {
        return Err(ComplexError::NonPositiveScale);
    }
    if dim_cap < 1 {
        return Err(ComplexError::DimCapTooSmall);
    }
    let dim = validate_points(points)?;
    if !points.is_empty() && dim != 1 {
        return Err(ComplexError::WrongDimension { expected: 1, got: dim });
    }
    // Sweep sorted coordinates: every subset of a window of span <= epsilon
    // is a simplex; windows are the maximal simplices.
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&a, &b| points[a].x().cmp(points[b].x()));
    let mut facets: Vec<Simplex> = Vec::new();
    let mut end = 0;
    for start in 0..order.len() {
        end = end.max(start);
        while end + 1 < order.len() && points[order[end + 1]].x() - points[order[start]].x() <= *epsilon {
            end += 1;
        }
        facets.push(order[start..=end].to_vec());
    }
    let mut generators = Vec::new();
    for facet in facets {
        let mut f = facet;
        f.sort_unstable();
        generators.extend(subsets_up_to(&f, dim_cap + 1));
    }
    let mut complex = SimplicialComplex::from_simplices(points.len(), generators)?;
    // pad or trim to the requested cap
    complex.simplices.resize_with(dim_cap + 1, Vec::new);
    complex.dim_cap = dim_cap;
    complex.flag = true;
    Ok(complex
        .with_coords(points.to_vec())
        .with_kind(ComplexKind::Cech1d { scale: epsilon.clone() }))
}

/// Subsets of a sorted list with at most `max_len` elements (nonempty).
fn subsets_up_to(items: &[usize], max_len: usize) -> Vec<Simplex> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(items: &[usize], start: usize, max_len: usize, cur: &mut Vec<usize>, out: &mut Vec<Simplex>) {
        for i in start..items.len() {
            cur.push(items[i]);
            out.push(cur.clone());
            if cur.len() < max_len {
                rec(items, i + 1, max_len, cur, out);
            }
            cur.pop();
        }
    }
    rec(items, 0, max_len, &mut cur, &mut out);
    out
}

/// A coloring of vertices by three colors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexColoring {
    colors: Vec<u8>,
}

impl VertexColoring {
    pub fn new(colors: Vec<u8>) -> Self {
        Self { colors }
    }

    pub fn color(&self, v: usize) -> u8 {
        self.colors[v]
    }

    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// No edge of `complex` joins two vertices of the same color, and every
    /// color is 0, 1 or 2.
    pub fn is_proper(&self, complex: &SimplicialComplex) -> bool {
        self.colors.len() == complex.n_vertices()
            && self.colors.iter().all(|&c| c < 3)
            && complex.edges().all(|(u, v)| self.colors[u] != self.colors[v])
    }
}
