//! Walks in a complex, lifts of shadow paths, and words of planar loops in
//! the free group on the holes of a shadow.
//!
//! Each uncovered face of the shadow gets an anchor point and a vertical
//! ray going up from it. A loop's word records, in order, which rays it
//! crosses and in which direction; a loop in the shadow is null-homotopic
//! exactly when that word reduces to the identity.

use std::cmp::Ordering;
use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::geometry::{on_segment, segment_intersection, Point, Rational, Segment, SegmentIntersection};
use crate::shadow::{hole_anchors, ShadowComplex};
use crate::simplicial::{ComplexKind, SimplicialComplex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LiftError {
    #[error("({0}, {1}) is not an edge")]
    NotAnEdge(usize, usize),
    #[error("walk is empty")]
    EmptyWalk,
    #[error("loop is not closed")]
    NotClosed,
    #[error("shadow vertices {0} and {1} are not joined by a shadow edge")]
    BrokenPath(usize, usize),
    #[error("shadow edge ({0}, {1}) has no covering edge")]
    EmptyProvenance(usize, usize),
    #[error("projections of the two edges are disjoint")]
    DisjointProjections,
    #[error("no path from {0} to {1} inside the span; the complex is not a planar Rips complex")]
    NoChain(usize, usize),
    #[error("loop passes through anchor {0}")]
    ThroughAnchor(usize),
    #[error("contractibility is only decided for Rips complexes")]
    NotRips,
    #[error("complex has no coordinates")]
    MissingCoordinates,
}

/// A vertex sequence whose consecutive entries span edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RipsWalk {
    vertices: Vec<usize>,
}

impl RipsWalk {
    pub fn new(vertices: Vec<usize>, c: &SimplicialComplex) -> Result<Self, LiftError> {
        if vertices.is_empty() {
            return Err(LiftError::EmptyWalk);
        }
        if let Some(w) = vertices.windows(2).find(|w| !c.has_edge(w[0], w[1])) {
            return Err(LiftError::NotAnEdge(w[0], w[1]));
        }
        Ok(Self { vertices })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_closed(&self) -> bool {
        self.vertices.first() == self.vertices.last()
    }

    pub fn first_edge(&self) -> Option<(usize, usize)> {
        (self.vertices.len() >= 2).then(|| (self.vertices[0], self.vertices[1]))
    }

    pub fn last_edge(&self) -> Option<(usize, usize)> {
        let n = self.vertices.len();
        (n >= 2).then(|| (self.vertices[n - 2], self.vertices[n - 1]))
    }

    /// Planar polyline through the vertex positions.
    pub fn polyline(&self, c: &SimplicialComplex) -> Result<Vec<Point>, LiftError> {
        let coords = c.coords().ok_or(LiftError::MissingCoordinates)?;
        Ok(self.vertices.iter().map(|&v| coords[v].clone()).collect())
    }
}

/// A letter `a_i` or its inverse; anchors are numbered from 1 when printed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub anchor: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn inv(self) -> Self {
        Letter {
            anchor: self.anchor,
            inverse: !self.inverse,
        }
    }
}

/// A freely reduced word in the free group on the anchors.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct HoleWord {
    letters: Vec<Letter>,
}

impl HoleWord {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            if out.last() == Some(&l.inv()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Self { letters: out }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &HoleWord) -> HoleWord {
        HoleWord::from_letters(self.letters.iter().chain(&other.letters).copied())
    }

    pub fn inverse(&self) -> HoleWord {
        HoleWord {
            letters: self.letters.iter().rev().map(|l| l.inv()).collect(),
        }
    }

    /// Exponent sum of each anchor, i.e. winding numbers.
    pub fn abelianization(&self, n_anchors: usize) -> Vec<i64> {
        let mut out = vec![0; n_anchors];
        for l in &self.letters {
            out[l.anchor] += if l.inverse { -1 } else { 1 };
        }
        out
    }

    /// Canonical representative of the conjugacy class: cyclically reduced,
    /// then rotated to the lexicographically least rotation.
    pub fn cyclic_normal_form(&self) -> HoleWord {
        let mut l = self.letters.as_slice();
        while l.len() >= 2 && l[0] == l[l.len() - 1].inv() {
            l = &l[1..l.len() - 1];
        }
        let best = (0..l.len())
            .map(|r| l[r..].iter().chain(&l[..r]).copied().collect::<Vec<_>>())
            .min()
            .unwrap_or_default();
        HoleWord { letters: best }
    }

    pub fn is_conjugate_to(&self, other: &HoleWord) -> bool {
        self.cyclic_normal_form() == other.cyclic_normal_form()
    }
}

impl fmt::Display for HoleWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|l| format!("a{}{}", l.anchor + 1, if l.inverse { "^-1" } else { "" }))
            .collect();
        f.write_str(&parts.join(" "))
    }
}

fn segment_of(c: &SimplicialComplex, (u, v): (usize, usize)) -> Result<Segment, LiftError> {
    let coords = c.coords().ok_or(LiftError::MissingCoordinates)?;
    Segment::new(coords[u].clone(), coords[v].clone()).map_err(|_| LiftError::NotAnEdge(u, v))
}

/// Walk `A, B, ..., C, D` inside the span of `{A, B, C, D}`: the edge AB, a
/// shortest path from B to C (ties toward smaller indices), then CD.
pub fn chaining_sequence(ab: (usize, usize), cd: (usize, usize), c: &SimplicialComplex) -> Result<RipsWalk, LiftError> {
    let ((a, b), (cc, d)) = (ab, cd);
    for (u, v) in [ab, cd] {
        if !c.has_edge(u, v) {
            return Err(LiftError::NotAnEdge(u, v));
        }
    }
    if segment_intersection(&segment_of(c, ab)?, &segment_of(c, cd)?) == SegmentIntersection::Disjoint {
        return Err(LiftError::DisjointProjections);
    }
    let mut span = vec![a, b, cc, d];
    span.sort_unstable();
    span.dedup();
    let path = c.shortest_path(b, cc, &span).ok_or(LiftError::NoChain(b, cc))?;
    let mut out = vec![a];
    out.extend(path);
    out.push(d);
    RipsWalk::new(out, c)
}

/// Which covering edge to use when several edges contain a shadow edge.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ProvenanceChoice {
    #[default]
    Smallest,
    Largest,
}

fn covering_edges(
    shadow_path: &[usize],
    s: &ShadowComplex,
    choice: ProvenanceChoice,
) -> Result<Vec<(usize, usize)>, LiftError> {
    let mut out: Vec<(usize, usize)> = Vec::new();
    for w in shadow_path.windows(2) {
        let e = s.edge_between(w[0], w[1]).ok_or(LiftError::BrokenPath(w[0], w[1]))?;
        let prov = &s.edges()[e].provenance;
        let picked = match choice {
            ProvenanceChoice::Smallest => prov.iter().next(),
            ProvenanceChoice::Largest => prov.iter().next_back(),
        };
        let &(u, v) = picked.ok_or(LiftError::EmptyProvenance(w[0], w[1]))?;
        // orient along the path
        let chain = s.chain(u, v).expect("provenance edges have chains");
        let i = chain.iter().position(|&x| x == w[0]).expect("on chain");
        let j = chain.iter().position(|&x| x == w[1]).expect("on chain");
        let oriented = if i < j { (u, v) } else { (v, u) };
        if out.last() != Some(&oriented) {
            out.push(oriented);
        }
    }
    Ok(out)
}

fn chain_edges(edges: &[(usize, usize)], c: &SimplicialComplex) -> Result<Vec<usize>, LiftError> {
    let mut walk = vec![edges[0].0, edges[0].1];
    for w in edges.windows(2) {
        let seq = chaining_sequence(w[0], w[1], c)?;
        walk.extend_from_slice(&seq.vertices()[2..]);
    }
    Ok(walk)
}

/// Lift a shadow path (a sequence of shadow vertex ids) to a walk whose
/// first and last edges cover the first and last shadow edges.
pub fn lift_path(shadow_path: &[usize], s: &ShadowComplex, c: &SimplicialComplex) -> Result<RipsWalk, LiftError> {
    lift_path_with(shadow_path, s, c, ProvenanceChoice::Smallest)
}

pub fn lift_path_with(
    shadow_path: &[usize],
    s: &ShadowComplex,
    c: &SimplicialComplex,
    choice: ProvenanceChoice,
) -> Result<RipsWalk, LiftError> {
    if shadow_path.len() < 2 {
        return Err(LiftError::EmptyWalk);
    }
    let edges = covering_edges(shadow_path, s, choice)?;
    RipsWalk::new(chain_edges(&edges, c)?, c)
}

/// Lift a closed shadow loop to a closed walk starting at the first covering
/// edge's tail.
pub fn lift_loop(
    shadow_loop: &[usize],
    s: &ShadowComplex,
    c: &SimplicialComplex,
    choice: ProvenanceChoice,
) -> Result<RipsWalk, LiftError> {
    if shadow_loop.len() < 2 {
        return Err(LiftError::EmptyWalk);
    }
    if shadow_loop.first() != shadow_loop.last() {
        return Err(LiftError::NotClosed);
    }
    let mut edges = covering_edges(shadow_loop, s, choice)?;
    edges.push(edges[0]);
    let mut walk = chain_edges(&edges, c)?;
    // the walk now ends with the first edge again; stop at its tail
    walk.pop();
    RipsWalk::new(walk, c)
}

/// Word of a closed polyline relative to the anchors.
///
/// Anchors sharing an x-coordinate get their rays shifted right by
/// infinitesimals ordered by height, so points on the line `x = a.x` count
/// as left of the ray. Crossing a ray right to left contributes `a_i`, left
/// to right `a_i^-1`.
pub fn loop_word(polyline: &[Point], anchors: &[Point]) -> Result<HoleWord, LiftError> {
    let mut pts: Vec<&Point> = polyline.iter().collect();
    if pts.len() >= 2 && pts.first() != pts.last() {
        pts.push(pts[0]);
    }
    // infinitesimal rank of each anchor's ray among anchors with its x
    let rank: Vec<usize> = anchors
        .iter()
        .map(|a| anchors.iter().filter(|b| b.x() == a.x() && b.y() < a.y()).count())
        .collect();
    let mut letters = Vec::new();
    for w in pts.windows(2) {
        let (p, q) = (w[0], w[1]);
        let mut crossings: Vec<(&Rational, usize, Letter)> = Vec::new();
        for (i, a) in anchors.iter().enumerate() {
            if p == a || (p != q && on_segment(a, p, q)) {
                return Err(LiftError::ThroughAnchor(i));
            }
            let (pl, ql) = (p.x() <= a.x(), q.x() <= a.x());
            if pl == ql {
                continue;
            }
            let y = p.y() + (a.x() - p.x()) * (q.y() - p.y()) / (q.x() - p.x());
            match y.cmp(a.y()) {
                Ordering::Greater => crossings.push((a.x(), rank[i], Letter { anchor: i, inverse: pl })),
                Ordering::Equal => return Err(LiftError::ThroughAnchor(i)),
                Ordering::Less => {}
            }
        }
        let rightward = p.x() < q.x();
        crossings.sort_by(|l, r| {
            let o = l.0.cmp(r.0).then(l.1.cmp(&r.1));
            if rightward {
                o
            } else {
                o.reverse()
            }
        });
        letters.extend(crossings.into_iter().map(|c| c.2));
    }
    Ok(HoleWord::from_letters(letters))
}

fn closed_polyline(walk: &RipsWalk, c: &SimplicialComplex) -> Result<Vec<Point>, LiftError> {
    if !walk.is_closed() {
        return Err(LiftError::NotClosed);
    }
    walk.polyline(c)
}

/// Word of a closed walk's projection relative to the shadow's holes.
pub fn walk_word(walk: &RipsWalk, c: &SimplicialComplex, s: &ShadowComplex) -> Result<HoleWord, LiftError> {
    loop_word(&closed_polyline(walk, c)?, &hole_anchors(s))
}

/// Whether a closed walk in a planar Rips complex is null-homotopic.
pub fn is_contractible(walk: &RipsWalk, c: &SimplicialComplex, s: &ShadowComplex) -> Result<bool, LiftError> {
    if !matches!(c.kind(), ComplexKind::Rips { .. }) {
        return Err(LiftError::NotRips);
    }
    Ok(walk_word(walk, c, s)?.is_identity())
}

/// Whether the loop is zero in first homology (winding number zero around
/// every hole). Weaker than contractibility: commutators pass.
pub fn is_null_homologous(walk: &RipsWalk, c: &SimplicialComplex, s: &ShadowComplex) -> Result<bool, LiftError> {
    let n = hole_anchors(s).len();
    Ok(walk_word(walk, c, s)?.abelianization(n).iter().all(Zero::is_zero))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::rat;
    use crate::shadow::build_shadow;
    use crate::simplicial::build_rips;

    fn p(x: (i64, i64), y: (i64, i64)) -> Point {
        Point::planar(x, y)
    }

    fn square(cx: i64, cy: i64, ccw: bool) -> Vec<Point> {
        let mut v = vec![
            p((cx - 1, 1), (cy - 1, 1)),
            p((cx + 1, 1), (cy - 1, 1)),
            p((cx + 1, 1), (cy + 1, 1)),
            p((cx - 1, 1), (cy + 1, 1)),
        ];
        if !ccw {
            v.reverse();
        }
        v
    }

    #[test]
    fn word_reduction_and_normal_form() {
        let a = Letter {
            anchor: 0,
            inverse: false,
        };
        let b = Letter {
            anchor: 1,
            inverse: false,
        };
        let w = HoleWord::from_letters([a, b, b.inv(), a]);
        assert_eq!(w.letters(), &[a, a]);
        assert!(w.concat(&w.inverse()).is_identity());
        let x = HoleWord::from_letters([a, b, a.inv()]);
        assert!(x.is_conjugate_to(&HoleWord::from_letters([b])));
        assert_eq!(x.to_string(), "a1 a2 a1^-1");
        assert_eq!(x.abelianization(2), vec![0, 1]);
    }

    #[test]
    fn ccw_square_gives_generator() {
        let anchors = [p((0, 1), (0, 1))];
        assert_eq!(loop_word(&square(0, 0, true), &anchors).unwrap().to_string(), "a1");
        assert_eq!(loop_word(&square(0, 0, false), &anchors).unwrap().to_string(), "a1^-1");
        assert!(loop_word(&square(5, 5, true), &anchors).unwrap().is_identity());
    }

    #[test]
    fn figure_eight() {
        let anchors = [p((0, 1), (0, 1)), p((4, 1), (0, 1))];
        // ccw around the first anchor, then cw around the second, based at (2, 0)
        let poly = vec![
            p((2, 1), (0, 1)),
            p((1, 1), (1, 1)),
            p((-1, 1), (1, 1)),
            p((-1, 1), (-1, 1)),
            p((1, 1), (-1, 1)),
            p((2, 1), (0, 1)),
            p((3, 1), (1, 1)),
            p((5, 1), (1, 1)),
            p((5, 1), (-1, 1)),
            p((3, 1), (-1, 1)),
        ];
        // from (2,0) up-left to (1,1): no crossing; top edge right to left crosses a1
        let w = loop_word(&poly, &anchors).unwrap();
        assert_eq!(w.to_string(), "a1 a2^-1");
        assert_eq!(w.abelianization(2), vec![1, -1]);
    }

    #[test]
    fn vertex_on_ray_is_handled() {
        // diamond with a vertex straight above the anchor
        let anchors = [p((0, 1), (0, 1))];
        let diamond = vec![
            p((1, 1), (0, 1)),
            p((0, 1), (1, 1)),
            p((-1, 1), (0, 1)),
            p((0, 1), (-1, 1)),
        ];
        assert_eq!(loop_word(&diamond, &anchors).unwrap().to_string(), "a1");
        // stacked anchors share a vertical line
        let stacked = [p((0, 1), (-1, 2)), p((0, 1), (1, 2))];
        let w = loop_word(&square(0, 0, true), &stacked).unwrap();
        assert_eq!(w.abelianization(2), vec![1, 1]);
        let through = [p((1, 1), (0, 1))];
        assert_eq!(
            loop_word(&square(0, 0, true), &through),
            Err(LiftError::ThroughAnchor(0))
        );
    }

    #[test]
    fn chaining_examples() {
        let pts = vec![
            p((0, 1), (0, 1)),
            p((1, 1), (0, 1)),
            p((1, 2), (1, 2)),
            p((1, 2), (-1, 2)),
        ];
        let r = build_rips(&pts, &rat(1, 1), 2).unwrap();
        assert_eq!(chaining_sequence((0, 1), (2, 3), &r).unwrap().vertices(), &[0, 1, 2, 3]);
        assert_eq!(chaining_sequence((0, 1), (1, 2), &r).unwrap().vertices(), &[0, 1, 2]);
    }

    #[test]
    fn chaining_through_a_detour() {
        // AB and CD cross, BC is missing but AD exists: the walk goes B -> A -> D -> C
        let pts = vec![
            p((0, 1), (0, 1)),
            p((4, 1), (0, 1)),
            p((3, 1), (2, 1)),
            p((1, 1), (-2, 1)),
        ];
        let c = SimplicialComplex::flag_from_graph(4, [(0, 1), (2, 3), (0, 3), (0, 2), (1, 3)], 2)
            .unwrap()
            .with_coords(pts);
        // remove the A-C chord to force the long route
        let c2 = SimplicialComplex::flag_from_graph(4, [(0, 1), (2, 3), (0, 3), (1, 3)], 2)
            .unwrap()
            .with_coords(c.coords().unwrap().to_vec());
        assert_eq!(
            chaining_sequence((0, 1), (2, 3), &c).unwrap().vertices(),
            &[0, 1, 0, 2, 3]
        );
        assert_eq!(
            chaining_sequence((0, 1), (2, 3), &c2).unwrap().vertices(),
            &[0, 1, 3, 2, 3]
        );
        let c3 = SimplicialComplex::flag_from_graph(4, [(0, 1), (2, 3), (0, 3)], 2)
            .unwrap()
            .with_coords(c.coords().unwrap().to_vec());
        assert_eq!(
            chaining_sequence((0, 1), (2, 3), &c3).unwrap().vertices(),
            &[0, 1, 0, 3, 2, 3]
        );
    }

    #[test]
    fn contractibility_of_square_and_triangle() {
        let sq = vec![
            p((0, 1), (0, 1)),
            p((1, 1), (0, 1)),
            p((1, 1), (1, 1)),
            p((0, 1), (1, 1)),
        ];
        let r = build_rips(&sq, &rat(1, 1), 2).unwrap();
        let s = build_shadow(&r).unwrap();
        let walk = RipsWalk::new(vec![0, 1, 2, 3, 0], &r).unwrap();
        assert!(!is_contractible(&walk, &r, &s).unwrap());
        assert!(!is_null_homologous(&walk, &r, &s).unwrap());

        let tri = vec![p((0, 1), (0, 1)), p((1, 1), (0, 1)), p((1, 2), (1, 2))];
        let r = build_rips(&tri, &rat(1, 1), 2).unwrap();
        let s = build_shadow(&r).unwrap();
        let walk = RipsWalk::new(vec![0, 1, 2, 0], &r).unwrap();
        assert!(is_contractible(&walk, &r, &s).unwrap());
        let abstract_c = r.clone().with_kind(ComplexKind::Abstract);
        assert_eq!(is_contractible(&walk, &abstract_c, &s), Err(LiftError::NotRips));
    }

    #[test]
    fn lift_single_edge_and_crossing() {
        let pts = vec![
            p((0, 1), (0, 1)),
            p((1, 1), (0, 1)),
            p((1, 2), (1, 2)),
            p((1, 2), (-1, 2)),
        ];
        let r = build_rips(&pts, &rat(1, 1), 2).unwrap();
        let s = build_shadow(&r).unwrap();
        let chain = s.chain(0, 1).unwrap();
        assert_eq!(chain.len(), 3);
        assert_eq!(lift_path(&chain, &s, &r).unwrap().vertices(), &[0, 1]);
        // along AB to the crossing, then down CD
        let x = chain[1];
        let path = [chain[0], x, s.shadow_vertex_of(3)];
        let walk = lift_path(&path, &s, &r).unwrap();
        assert_eq!(walk.first_edge(), Some((0, 1)));
        assert_eq!(walk.last_edge(), Some((2, 3)));
    }
}
