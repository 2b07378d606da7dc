//! Exact planar shadow of a complex with 2-D coordinates.
//!
//! Every edge is projected to a segment and split at all points it shares
//! with other edges or vertices, giving a planar graph. Faces are traced on
//! its half-edge structure; a bounded face is covered when it lies inside
//! some projected triangle. The shadow is the 1-skeleton together with the
//! covered faces.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::geometry::{
    point_in_polygon, point_in_triangle, segment_intersection, signed_area2, to_f64, Containment, Point, Rational,
    Segment, SegmentIntersection,
};
use crate::simplicial::SimplicialComplex;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ShadowError {
    #[error("complex has no coordinates")]
    MissingCoordinates,
    #[error("shadows need planar coordinates, got dimension {0}")]
    NotPlanar(usize),
    #[error("edge ({0}, {1}) has coincident endpoints")]
    DegenerateEdge(usize, usize),
    #[error("flag complex capped at dimension {0}; triangles are required")]
    MissingTriangles(usize),
}

/// A vertex of the arrangement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShadowVertex {
    pub point: Point,
    /// Index of the complex vertex sitting here, if any.
    pub original: Option<usize>,
    /// Edges of the complex whose segment passes through this point.
    pub rips_edges: BTreeSet<(usize, usize)>,
}

/// A piece of the arrangement between two consecutive shadow vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShadowEdge {
    /// Shadow vertex ids, smaller first.
    pub ends: (usize, usize),
    /// Edges of the complex containing this piece.
    pub provenance: BTreeSet<(usize, usize)>,
}

/// A bounded face of the arrangement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShadowFace {
    /// Counterclockwise boundary walk as shadow vertex ids (not repeated at
    /// the end). Dangling edges appear twice.
    pub boundary: Vec<usize>,
    pub area2: Rational,
    /// Component of the 1-skeleton the boundary belongs to.
    pub component: usize,
    /// Components of the 1-skeleton lying directly inside this face.
    pub islands: Vec<usize>,
    pub witness: Point,
    /// Witness from a different boundary edge, for the independence check.
    pub alt_witness: Point,
    pub covered: bool,
    pub alt_covered: bool,
}

#[derive(Clone, Debug)]
pub struct ShadowComplex {
    vertices: Vec<ShadowVertex>,
    edges: Vec<ShadowEdge>,
    edge_index: HashMap<(usize, usize), usize>,
    faces: Vec<ShadowFace>,
    /// One unbounded boundary walk per component (empty for isolated vertices).
    outer_walks: Vec<Vec<usize>>,
    component_of: Vec<usize>,
    n_components: usize,
    original: Vec<usize>,
    chains: BTreeMap<(usize, usize), Vec<usize>>,
}

fn cross2(ax: &Rational, ay: &Rational, bx: &Rational, by: &Rational) -> Rational {
    ax * by - ay * bx
}

fn angle_cmp(d1: (&Rational, &Rational), d2: (&Rational, &Rational)) -> Ordering {
    let half = |(x, y): (&Rational, &Rational)| u8::from(!(y.is_positive() || (y.is_zero() && x.is_positive())));
    half(d1).cmp(&half(d2)).then_with(|| {
        let c = cross2(d1.0, d1.1, d2.0, d2.1);
        if c.is_positive() {
            Ordering::Less
        } else if c.is_negative() {
            Ordering::Greater
        } else {
            Ordering::Equal
        }
    })
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        Self((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }
    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.0[a.max(b)] = a.min(b);
        }
    }
}

pub fn build_shadow(c: &SimplicialComplex) -> Result<ShadowComplex, ShadowError> {
    let coords = c.coords().ok_or(ShadowError::MissingCoordinates)?;
    if let Some(p) = coords.iter().find(|p| p.dim() != 2) {
        return Err(ShadowError::NotPlanar(p.dim()));
    }
    if c.is_flag() && c.dim_cap() < 2 && c.edges().next().is_some() {
        return Err(ShadowError::MissingTriangles(c.dim_cap()));
    }
    let rips_edges: Vec<(usize, usize)> = c.edges().collect();
    let segments: Vec<Segment> = rips_edges
        .iter()
        .map(|&(u, v)| {
            Segment::new(coords[u].clone(), coords[v].clone()).map_err(|_| ShadowError::DegenerateEdge(u, v))
        })
        .collect::<Result<_, _>>()?;

    // points on each edge
    let mut on_edge: Vec<BTreeSet<Point>> = segments
        .iter()
        .map(|s| BTreeSet::from([s.a().clone(), s.b().clone()]))
        .collect();
    let bbox = |s: &Segment| {
        let (a, b) = (s.a(), s.b());
        (
            a.x().min(b.x()).clone(),
            a.x().max(b.x()).clone(),
            a.y().min(b.y()).clone(),
            a.y().max(b.y()).clone(),
        )
    };
    let boxes: Vec<_> = segments.iter().map(bbox).collect();
    for i in 0..segments.len() {
        for j in i + 1..segments.len() {
            let (bi, bj) = (&boxes[i], &boxes[j]);
            if bi.1 < bj.0 || bj.1 < bi.0 || bi.3 < bj.2 || bj.3 < bi.2 {
                continue;
            }
            match segment_intersection(&segments[i], &segments[j]) {
                SegmentIntersection::Disjoint | SegmentIntersection::SharedEndpoint(_) => {}
                SegmentIntersection::Point(p) => {
                    on_edge[i].insert(p.clone());
                    on_edge[j].insert(p);
                }
                SegmentIntersection::Overlap(s) => {
                    for k in [i, j] {
                        on_edge[k].insert(s.a().clone());
                        on_edge[k].insert(s.b().clone());
                    }
                }
            }
        }
    }
    // vertices that no edge ends at may still sit inside an edge
    for (v, p) in coords.iter().enumerate() {
        if !c.neighbors(v).is_empty() {
            continue;
        }
        for (i, s) in segments.iter().enumerate() {
            if s.contains(p) {
                on_edge[i].insert(p.clone());
            }
        }
    }

    let mut all_points: BTreeMap<Point, usize> = BTreeMap::new();
    for p in coords.iter().chain(on_edge.iter().flatten()) {
        all_points.entry(p.clone()).or_insert(0);
    }
    for (id, slot) in all_points.values_mut().enumerate() {
        *slot = id;
    }
    let mut vertices: Vec<ShadowVertex> = all_points
        .keys()
        .map(|p| ShadowVertex {
            point: p.clone(),
            original: None,
            rips_edges: BTreeSet::new(),
        })
        .collect();
    let original: Vec<usize> = coords.iter().map(|p| all_points[p]).collect();
    for (v, &id) in original.iter().enumerate() {
        vertices[id].original = Some(v);
    }

    let mut edge_map: BTreeMap<(usize, usize), BTreeSet<(usize, usize)>> = BTreeMap::new();
    let mut chains = BTreeMap::new();
    for (i, &(u, v)) in rips_edges.iter().enumerate() {
        // collinear points: lexicographic order is the order along the segment
        let mut ids: Vec<usize> = on_edge[i].iter().map(|p| all_points[p]).collect();
        for &id in &ids {
            vertices[id].rips_edges.insert((u, v));
        }
        for w in ids.windows(2) {
            edge_map
                .entry((w[0].min(w[1]), w[0].max(w[1])))
                .or_default()
                .insert((u, v));
        }
        if coords[u] > coords[v] {
            ids.reverse();
        }
        chains.insert((u, v), ids);
    }
    let edges: Vec<ShadowEdge> = edge_map
        .into_iter()
        .map(|(ends, provenance)| ShadowEdge { ends, provenance })
        .collect();
    let edge_index: HashMap<(usize, usize), usize> = edges.iter().enumerate().map(|(i, e)| (e.ends, i)).collect();

    // half-edge h = 2e + d runs ends.0 -> ends.1 when d = 0
    let src = |h: usize| {
        if h % 2 == 0 {
            edges[h / 2].ends.0
        } else {
            edges[h / 2].ends.1
        }
    };
    let dst = |h: usize| src(h ^ 1);
    let nv = vertices.len();
    let mut outgoing: Vec<Vec<usize>> = vec![Vec::new(); nv];
    for h in 0..2 * edges.len() {
        outgoing[src(h)].push(h);
    }
    for (v, out) in outgoing.iter_mut().enumerate() {
        let p = &vertices[v].point;
        let dirs: HashMap<usize, (Rational, Rational)> = out
            .iter()
            .map(|&h| {
                let q = &vertices[dst(h)].point;
                (h, (q.x() - p.x(), q.y() - p.y()))
            })
            .collect();
        out.sort_by(|a, b| {
            let (da, db) = (&dirs[a], &dirs[b]);
            angle_cmp((&da.0, &da.1), (&db.0, &db.1))
        });
    }
    let mut position = vec![0usize; 2 * edges.len()];
    for out in &outgoing {
        for (i, &h) in out.iter().enumerate() {
            position[h] = i;
        }
    }
    let next = |h: usize| {
        let v = dst(h);
        let out = &outgoing[v];
        out[(position[h ^ 1] + out.len() - 1) % out.len()]
    };

    let mut uf = UnionFind::new(nv);
    for e in &edges {
        uf.union(e.ends.0, e.ends.1);
    }
    let mut comp_id: BTreeMap<usize, usize> = BTreeMap::new();
    let mut component_of = vec![0; nv];
    for (v, slot) in component_of.iter_mut().enumerate() {
        let root = uf.find(v);
        let n = comp_id.len();
        *slot = *comp_id.entry(root).or_insert(n);
    }
    let n_components = comp_id.len();

    let mut visited = vec![false; 2 * edges.len()];
    let mut walks: Vec<Vec<usize>> = Vec::new();
    for start in 0..2 * edges.len() {
        if visited[start] {
            continue;
        }
        let mut walk = Vec::new();
        let mut h = start;
        while !visited[h] {
            visited[h] = true;
            walk.push(h);
            h = next(h);
        }
        walks.push(walk);
    }

    let mut outer_walks = vec![Vec::new(); n_components];
    let mut raw_faces = Vec::new();
    for walk in walks {
        let ids: Vec<usize> = walk.iter().map(|&h| src(h)).collect();
        let polygon: Vec<Point> = ids.iter().map(|&v| vertices[v].point.clone()).collect();
        let area2 = signed_area2(&polygon);
        let component = component_of[ids[0]];
        if area2.is_positive() {
            raw_faces.push((walk, ids, polygon, area2, component));
        } else {
            debug_assert!(outer_walks[component].is_empty(), "one unbounded walk per component");
            outer_walks[component] = ids;
        }
    }

    // place every component inside the smallest face of another component around it
    let mut representative = vec![usize::MAX; n_components];
    for v in (0..nv).rev() {
        representative[component_of[v]] = v;
    }
    let mut islands: Vec<Vec<usize>> = vec![Vec::new(); raw_faces.len()];
    for (comp, &rep) in representative.iter().enumerate() {
        let p = &vertices[rep].point;
        let host = raw_faces
            .iter()
            .enumerate()
            .filter(|(_, f)| f.4 != comp && point_in_polygon(p, &f.2))
            .min_by(|a, b| a.1 .3.cmp(&b.1 .3))
            .map(|(i, _)| i);
        if let Some(i) = host {
            islands[i].push(comp);
        }
    }

    // only the face's own boundary and the components inside it can block
    // a ray into the face
    let mut comp_edges: Vec<Vec<usize>> = vec![Vec::new(); n_components];
    for (i, e) in edges.iter().enumerate() {
        comp_edges[component_of[e.ends.0]].push(i);
    }
    let isolated_in: Vec<Option<usize>> = (0..n_components)
        .map(|comp| Some(representative[comp]).filter(|&v| outgoing[v].is_empty()))
        .collect();
    let witness_from = |h: usize, walk: &[usize], islands: &[usize]| -> Point {
        let (p, q) = (&vertices[src(h)].point, &vertices[dst(h)].point);
        let mx = (p.x() + q.x()) / Rational::from_integer(2.into());
        let my = (p.y() + q.y()) / Rational::from_integer(2.into());
        // left normal of p -> q
        let (nx, ny) = (-(q.y() - p.y()), q.x() - p.x());
        let nn = &nx * &nx + &ny * &ny;
        let mut best: Option<Rational> = None;
        let mut offer = |t: Rational| {
            if t.is_positive() && best.as_ref().is_none_or(|b| &t < b) {
                best = Some(t);
            }
        };
        let mut candidates: Vec<usize> = walk.iter().map(|&g| g / 2).collect();
        candidates.extend(islands.iter().flat_map(|&comp| comp_edges[comp].iter().copied()));
        candidates.sort_unstable();
        candidates.dedup();
        for e in candidates.iter().map(|&i| &edges[i]) {
            let (a, b) = (&vertices[e.ends.0].point, &vertices[e.ends.1].point);
            let (rx, ry) = (a.x() - &mx, a.y() - &my);
            let (wx, wy) = (b.x() - a.x(), b.y() - a.y());
            let denom = cross2(&nx, &ny, &wx, &wy);
            if denom.is_zero() {
                if cross2(&rx, &ry, &nx, &ny).is_zero() {
                    let ta = (&rx * &nx + &ry * &ny) / &nn;
                    let tb = ((b.x() - &mx) * &nx + (b.y() - &my) * &ny) / &nn;
                    offer(ta.min(tb));
                }
                continue;
            }
            let t = cross2(&rx, &ry, &wx, &wy) / &denom;
            let s = cross2(&rx, &ry, &nx, &ny) / &denom;
            if !s.is_negative() && s <= Rational::from_integer(1.into()) {
                offer(t);
            }
        }
        for a in islands
            .iter()
            .filter_map(|&comp| isolated_in[comp])
            .map(|v| &vertices[v].point)
        {
            let (rx, ry) = (a.x() - &mx, a.y() - &my);
            if cross2(&rx, &ry, &nx, &ny).is_zero() {
                offer((&rx * &nx + &ry * &ny) / &nn);
            }
        }
        let t = best.expect("a bounded face is enclosed") / Rational::from_integer(2.into());
        Point::xy(&mx + &t * &nx, &my + &t * &ny)
    };

    let triangles: Vec<[&Point; 3]> = c
        .simplices(2)
        .iter()
        .map(|s| [&coords[s[0]], &coords[s[1]], &coords[s[2]]])
        .collect();
    // conservative floating-point boxes rule out most triangles cheaply
    let fbox = |t: &[&Point; 3]| {
        let xs = t.map(|p| to_f64(p.x()));
        let ys = t.map(|p| to_f64(p.y()));
        let lo = |v: [f64; 3]| v.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = |v: [f64; 3]| v.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let pad = |v: f64| 1e-9 * (1.0 + v.abs());
        let (x0, x1, y0, y1) = (lo(xs), hi(xs), lo(ys), hi(ys));
        (x0 - pad(x0), x1 + pad(x1), y0 - pad(y0), y1 + pad(y1))
    };
    let boxes: Vec<(f64, f64, f64, f64)> = triangles.iter().map(fbox).collect();
    let covered_at = |w: &Point| {
        let (x, y) = (to_f64(w.x()), to_f64(w.y()));
        triangles.iter().zip(&boxes).any(|(t, b)| {
            x >= b.0
                && x <= b.1
                && y >= b.2
                && y <= b.3
                && point_in_triangle(w, t[0], t[1], t[2]) != Containment::Outside
        })
    };

    let faces: Vec<ShadowFace> = raw_faces
        .into_iter()
        .zip(islands)
        .map(|((walk, ids, _, area2, component), islands)| {
            let mut hs = walk.clone();
            hs.sort_unstable();
            let witness = witness_from(hs[0], &walk, &islands);
            let alt_witness = witness_from(hs[1], &walk, &islands);
            let covered = covered_at(&witness);
            let alt_covered = covered_at(&alt_witness);
            ShadowFace {
                boundary: ids,
                area2,
                component,
                islands,
                witness,
                alt_witness,
                covered,
                alt_covered,
            }
        })
        .collect();

    Ok(ShadowComplex {
        vertices,
        edges,
        edge_index,
        faces,
        outer_walks,
        component_of,
        n_components,
        original,
        chains,
    })
}

impl ShadowComplex {
    pub fn vertices(&self) -> &[ShadowVertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[ShadowEdge] {
        &self.edges
    }

    pub fn faces(&self) -> &[ShadowFace] {
        &self.faces
    }

    pub fn outer_walks(&self) -> &[Vec<usize>] {
        &self.outer_walks
    }

    /// Components of the 1-skeleton (before covered faces join islands).
    pub fn skeleton_components(&self) -> usize {
        self.n_components
    }

    pub fn component_of(&self, v: usize) -> usize {
        self.component_of[v]
    }

    /// Shadow vertex at the position of complex vertex `v`.
    pub fn shadow_vertex_of(&self, v: usize) -> usize {
        self.original[v]
    }

    pub fn edge_between(&self, a: usize, b: usize) -> Option<usize> {
        self.edge_index.get(&(a.min(b), a.max(b))).copied()
    }

    /// Shadow vertices along the complex edge from `u` to `v`, in order.
    pub fn chain(&self, u: usize, v: usize) -> Option<Vec<usize>> {
        let mut ids = self.chains.get(&(u.min(v), u.max(v)))?.clone();
        if u > v {
            ids.reverse();
        }
        Some(ids)
    }

    /// Shadow vertex sequence traced by a walk in the complex.
    pub fn project_walk(&self, walk: &[usize]) -> Option<Vec<usize>> {
        let mut out = vec![self.original[*walk.first()?]];
        for w in walk.windows(2) {
            let chain = self.chain(w[0], w[1])?;
            out.extend_from_slice(&chain[1..]);
        }
        Some(out)
    }

    pub fn covered_faces(&self) -> impl Iterator<Item = &ShadowFace> {
        self.faces.iter().filter(|f| f.covered)
    }

    pub fn uncovered_faces(&self) -> impl Iterator<Item = &ShadowFace> {
        self.faces.iter().filter(|f| !f.covered)
    }

    /// Both witnesses of every face agree on coverage.
    pub fn coverage_consistent(&self) -> bool {
        self.faces.iter().all(|f| f.covered == f.alt_covered)
    }

    /// `b1` from the Euler characteristic of the shadow: a covered face with
    /// `h` islands inside is an open disk with `h` holes.
    pub fn euler_b1(&self) -> i64 {
        let (b0, _) = shadow_betti(self);
        let chi_faces: i64 = self.covered_faces().map(|f| 1 - f.islands.len() as i64).sum();
        b0 as i64 - self.vertices.len() as i64 + self.edges.len() as i64 - chi_faces
    }
}

/// `(b0, b1)` of the shadow. `b1` is the number of uncovered bounded faces.
pub fn shadow_betti(s: &ShadowComplex) -> (usize, usize) {
    let mut uf = UnionFind::new(s.n_components);
    for f in s.covered_faces() {
        for &i in &f.islands {
            uf.union(f.component, i);
        }
    }
    let b0 = (0..s.n_components).filter(|&i| uf.find(i) == i).count();
    (b0, s.uncovered_faces().count())
}

/// One interior point per uncovered bounded face, in face order.
pub fn hole_anchors(s: &ShadowComplex) -> Vec<Point> {
    s.uncovered_faces().map(|f| f.witness.clone()).collect()
}

fn fmt_num(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return "0".into();
    }
    let magnitude = v.abs().log10().floor() as i32;
    let decimals = (11 - magnitude).max(0) as usize;
    let s = format!("{v:.decimals$}");
    let s = if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    };
    if s == "-0" {
        "0".into()
    } else {
        s
    }
}

/// Deterministic SVG 1.1 drawing: the covered region as one filled path,
/// uncovered faces hatched, shadow edges, vertices, anchors and an optional
/// overlay polyline.
pub fn render_svg(s: &ShadowComplex, overlay: Option<&[Point]>) -> String {
    let pts: Vec<(f64, f64)> = s
        .vertices
        .iter()
        .map(|v| (to_f64(v.point.x()), to_f64(v.point.y())))
        .collect();
    let (mut x0, mut x1, mut y0, mut y1) = (0.0f64, 1.0f64, 0.0f64, 1.0f64);
    if let Some(&(x, y)) = pts.first() {
        (x0, x1, y0, y1) = (x, x, y, y);
        for &(x, y) in &pts {
            x0 = x0.min(x);
            x1 = x1.max(x);
            y0 = y0.min(y);
            y1 = y1.max(y);
        }
    }
    let span = (x1 - x0).max(y1 - y0).max(1e-9);
    let pad = 0.05 * span;
    let r = 0.01 * span;
    // flip y so the picture has the usual orientation
    let px = |x: f64| fmt_num(x - x0 + pad);
    let py = |y: f64| fmt_num(y1 - y + pad);
    let poly_d = |ids: &[usize]| {
        let mut d = String::new();
        for (i, &v) in ids.iter().enumerate() {
            let _ = write!(
                d,
                "{}{} {} ",
                if i == 0 { "M" } else { "L" },
                px(pts[v].0),
                py(pts[v].1)
            );
        }
        d.push('Z');
        d
    };

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="600" height="600" viewBox="0 0 {} {}">"#,
        fmt_num(x1 - x0 + 2.0 * pad),
        fmt_num(y1 - y0 + 2.0 * pad)
    );
    let _ = writeln!(
        out,
        r##"<defs><pattern id="hatch" patternUnits="userSpaceOnUse" width="{w}" height="{w}"><path d="M0 0 L{w} {w}" stroke="#b2182b" stroke-width="{sw}"/></pattern></defs>"##,
        w = fmt_num(4.0 * r),
        sw = fmt_num(0.3 * r)
    );
    let covered: Vec<String> = s.covered_faces().map(|f| poly_d(&f.boundary)).collect();
    if !covered.is_empty() {
        let _ = writeln!(
            out,
            r##"<path class="covered" fill="#9ecae1" fill-rule="nonzero" stroke="none" d="{}"/>"##,
            covered.join(" ")
        );
    }
    for f in s.uncovered_faces() {
        let _ = writeln!(
            out,
            r##"<path class="hole" fill="url(#hatch)" stroke="none" d="{}"/>"##,
            poly_d(&f.boundary)
        );
    }
    for e in &s.edges {
        let (a, b) = (pts[e.ends.0], pts[e.ends.1]);
        let _ = writeln!(
            out,
            r##"<line class="edge" x1="{}" y1="{}" x2="{}" y2="{}" stroke="#08306b" stroke-width="{}"/>"##,
            px(a.0),
            py(a.1),
            px(b.0),
            py(b.1),
            fmt_num(0.3 * r)
        );
    }
    for (i, v) in s.vertices.iter().enumerate() {
        if v.original.is_some() {
            let _ = writeln!(
                out,
                r##"<circle class="vertex" cx="{}" cy="{}" r="{}" fill="#08306b"/>"##,
                px(pts[i].0),
                py(pts[i].1),
                fmt_num(r)
            );
        }
    }
    for a in hole_anchors(s) {
        let (x, y) = (to_f64(a.x()), to_f64(a.y()));
        let _ = writeln!(
            out,
            r##"<circle class="anchor" cx="{}" cy="{}" r="{}" fill="#b2182b"/>"##,
            px(x),
            py(y),
            fmt_num(0.7 * r)
        );
    }
    if let Some(line) = overlay {
        let coords: Vec<String> = line
            .iter()
            .map(|p| format!("{},{}", px(to_f64(p.x())), py(to_f64(p.y()))))
            .collect();
        let _ = writeln!(
            out,
            r##"<polyline class="overlay" fill="none" stroke="#fd8d3c" stroke-width="{}" points="{}"/>"##,
            fmt_num(0.5 * r),
            coords.join(" ")
        );
    }
    out.push_str("</svg>\n");
    out
}
