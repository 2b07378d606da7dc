//! Quasi-Rips complexes: pairs closer than `ε` are joined, pairs at least
//! `ε'` apart are not, and pairs in between are decided by a policy.
//!
//! Also the construction realizing a finitely presented group: presentation
//! complex, its barycentric subdivision colored by cell dimension, the
//! blowup that replaces gluing by joins, and a planar placement of the
//! blowup near the corners of an equilateral triangle.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::geometry::{dist2, parse_rational, rat, sqrt_approx, sqrt_error_bound, Point, Rational};
use crate::homology::{
    betti_numbers, h1_from_boundaries, induced_h1_rank, integer_h1, BettiProfile, Field, HomologyError, IntegerH1,
    SparseMatrix,
};
use crate::shadow::{build_shadow, shadow_betti, ShadowError};
use crate::simplicial::{
    build_rips, pairs_where, validate_points, ComplexError, ComplexKind, Simplex, SimplicialComplex, VertexColoring,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuasiError {
    #[error("interval needs 0 < lower < upper")]
    InvalidInterval,
    #[error("cannot parse interval {0:?}")]
    IntervalSyntax(String),
    #[error("policy selects ({0}, {1}), which is at least the upper bound apart")]
    ForbiddenEdge(usize, usize),
    #[error("policy names vertex {0}, out of range")]
    UnknownVertex(usize),
    #[error("probability must lie in [0, 1]")]
    InvalidProbability,
    #[error("relator {0:?}: {1}")]
    BadRelator(String, String),
    #[error("coloring is not proper")]
    ImproperColoring,
    #[error("blowup input must have dimension at most 2")]
    TooHighDimension,
    #[error("ball radius {radius} is too large for lower bound {lower}")]
    RadiusTooLarge { radius: String, lower: String },
    #[error("placement audit failed after {0} attempts")]
    AuditFailed(usize),
    #[error("intervals overlap: lower upper bound {0} exceeds upper lower bound {1}")]
    OverlappingIntervals(String, String),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
    #[error(transparent)]
    Shadow(#[from] ShadowError),
}

/// Open band `(lower, upper)` of distances whose edges are undetermined.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UncertaintyInterval {
    lower: Rational,
    upper: Rational,
}

/// Where a squared distance falls relative to an interval.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Band {
    Forced,
    Uncertain,
    Forbidden,
}

impl UncertaintyInterval {
    pub fn new(lower: Rational, upper: Rational) -> Result<Self, QuasiError> {
        if lower <= rat(0, 1) || lower >= upper {
            return Err(QuasiError::InvalidInterval);
        }
        Ok(Self { lower, upper })
    }

    pub fn lower(&self) -> &Rational {
        &self.lower
    }

    pub fn upper(&self) -> &Rational {
        &self.upper
    }

    pub fn classify(&self, d2: &Rational) -> Band {
        if d2 <= &(&self.lower * &self.lower) {
            Band::Forced
        } else if d2 >= &(&self.upper * &self.upper) {
            Band::Forbidden
        } else {
            Band::Uncertain
        }
    }
}

impl FromStr for UncertaintyInterval {
    type Err = QuasiError;

    /// `"lower,upper"` with each bound an exact rational.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || QuasiError::IntervalSyntax(s.to_string());
        let (a, b) = s.split_once(',').ok_or_else(bad)?;
        let lo = parse_rational(a.trim()).map_err(|_| bad())?;
        let hi = parse_rational(b.trim()).map_err(|_| bad())?;
        Self::new(lo, hi)
    }
}

impl fmt::Display for UncertaintyInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.lower, self.upper)
    }
}

/// Which uncertain pairs become edges.
#[derive(Clone, Debug, PartialEq)]
pub enum EdgePolicy {
    /// Exactly the listed uncertain pairs. Forced pairs may be listed too.
    Explicit(BTreeSet<(usize, usize)>),
    SeededRandom {
        seed: u64,
        probability: f64,
    },
    All,
    None,
}

/// A quasi-Rips complex together with the pairs that were up to the policy.
#[derive(Clone, Debug)]
pub struct QuasiComplex {
    pub complex: SimplicialComplex,
    pub interval: UncertaintyInterval,
    pub uncertain: Vec<(usize, usize)>,
    pub selected: Vec<(usize, usize)>,
}

pub fn build_quasi(
    points: &[Point],
    interval: &UncertaintyInterval,
    policy: &EdgePolicy,
    dim_cap: usize,
) -> Result<QuasiComplex, QuasiError> {
    validate_points(points)?;
    let n = points.len();
    let mut forced = Vec::new();
    let mut uncertain = Vec::new();
    let mut band_of: HashMap<(usize, usize), Band> = HashMap::new();
    for (i, j) in pairs_where(points, |_| true) {
        let band = interval.classify(&dist2(&points[i], &points[j]).map_err(ComplexError::from)?);
        band_of.insert((i, j), band);
        match band {
            Band::Forced => forced.push((i, j)),
            Band::Uncertain => uncertain.push((i, j)),
            Band::Forbidden => {}
        }
    }
    let selected: Vec<(usize, usize)> = match policy {
        EdgePolicy::All => uncertain.clone(),
        EdgePolicy::None => Vec::new(),
        EdgePolicy::SeededRandom { seed, probability } => {
            if !(0.0..=1.0).contains(probability) {
                return Err(QuasiError::InvalidProbability);
            }
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            uncertain
                .iter()
                .copied()
                .filter(|_| rng.gen_bool(*probability))
                .collect()
        }
        EdgePolicy::Explicit(set) => {
            let mut out = Vec::new();
            for &(a, b) in set {
                if let Some(v) = [a, b].into_iter().find(|&v| v >= n) {
                    return Err(QuasiError::UnknownVertex(v));
                }
                let key = (a.min(b), a.max(b));
                match band_of.get(&key) {
                    Some(Band::Uncertain) => out.push(key),
                    Some(Band::Forbidden) => return Err(QuasiError::ForbiddenEdge(key.0, key.1)),
                    _ => {}
                }
            }
            out.sort_unstable();
            out.dedup();
            out
        }
    };
    let complex = SimplicialComplex::flag_from_graph(n, forced.iter().chain(&selected).copied(), dim_cap)?
        .with_coords(points.to_vec())
        .with_kind(ComplexKind::Quasi {
            lower: interval.lower.clone(),
            upper: interval.upper.clone(),
        });
    Ok(QuasiComplex {
        complex,
        interval: interval.clone(),
        uncertain,
        selected,
    })
}

/// Every pair within the lower bound is an edge and no pair at or beyond the
/// upper bound is.
pub fn audit_quasi(points: &[Point], interval: &UncertaintyInterval, c: &SimplicialComplex) -> bool {
    pairs_where(points, |_| true).into_iter().all(|(i, j)| {
        let d2 = dist2(&points[i], &points[j]).expect("same dimension");
        match interval.classify(&d2) {
            Band::Forced => c.has_edge(i, j),
            Band::Forbidden => !c.has_edge(i, j),
            Band::Uncertain => true,
        }
    })
}

// ---------------------------------------------------------------------------
// group presentations

/// Generator index and whether it is inverted.
pub type GroupLetter = (usize, bool);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupPresentation {
    generators: usize,
    relators: Vec<Vec<GroupLetter>>,
}

impl GroupPresentation {
    /// Relators are written with letters `a`, `b`, ... for the generators
    /// and a trailing apostrophe for an inverse, e.g. `"aba'b'"`.
    pub fn parse(generators: usize, relators: &[&str]) -> Result<Self, QuasiError> {
        let mut out = Vec::new();
        for r in relators {
            let bad = |why: &str| QuasiError::BadRelator(r.to_string(), why.to_string());
            let mut word: Vec<GroupLetter> = Vec::new();
            let mut chars = r.chars().filter(|c| !c.is_whitespace()).peekable();
            while let Some(ch) = chars.next() {
                if !ch.is_ascii_lowercase() {
                    return Err(bad("expected a lowercase generator letter"));
                }
                let g = (ch as u8 - b'a') as usize;
                if g >= generators {
                    return Err(bad("generator out of range"));
                }
                let inv = chars.next_if_eq(&'\'').is_some();
                if word.last() == Some(&(g, !inv)) {
                    word.pop();
                } else {
                    word.push((g, inv));
                }
            }
            if word.is_empty() {
                return Err(bad("relator reduces to the identity"));
            }
            out.push(word);
        }
        Ok(Self {
            generators,
            relators: out,
        })
    }

    /// Named presentations: `z`, `torus`, `rp2`, `klein`.
    pub fn preset(name: &str) -> Option<Self> {
        let p = match name {
            "z" => Self::parse(1, &[]),
            "torus" => Self::parse(2, &["aba'b'"]),
            "rp2" => Self::parse(1, &["aa"]),
            "klein" => Self::parse(2, &["abab'"]),
            _ => return None,
        };
        p.ok()
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn relators(&self) -> &[Vec<GroupLetter>] {
        &self.relators
    }
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = (0..self.generators)
            .map(|g| ((b'a' + g as u8) as char).to_string())
            .collect();
        let rels: Vec<String> = self
            .relators
            .iter()
            .map(|w| {
                w.iter()
                    .map(|&(g, inv)| format!("{}{}", (b'a' + g as u8) as char, if inv { "'" } else { "" }))
                    .collect()
            })
            .collect();
        write!(f, "<{} | {}>", gens.join(", "), rels.join(", "))
    }
}

/// A complex with a proper vertex coloring.
#[derive(Clone, Debug)]
pub struct ColoredComplex {
    pub complex: SimplicialComplex,
    pub coloring: VertexColoring,
}

/// Barycentric subdivision of the presentation complex, colored by the
/// dimension of the cell each vertex stands for.
///
/// The cell structure is regular: each generator loop is split into two
/// edges through a midpoint, and each relator disk is a cone from a center
/// over its boundary walk, with one radial edge and one triangle per
/// boundary position. The subdivision is the order complex of the face
/// poset, which is flag with the comparability graph as 1-skeleton.
pub fn presentation_to_colored_complex(p: &GroupPresentation) -> Result<ColoredComplex, QuasiError> {
    let mut dims: Vec<u8> = Vec::new();
    let mut faces: Vec<Vec<usize>> = Vec::new();
    let mut cell = |dim: u8, closure: Vec<usize>| {
        dims.push(dim);
        faces.push(closure);
        dims.len() - 1
    };
    let base = cell(0, vec![]);
    let mut gens = Vec::new();
    for _ in 0..p.generators {
        let mid = cell(0, vec![]);
        let first = cell(1, vec![base, mid]);
        let second = cell(1, vec![mid, base]);
        gens.push((mid, first, second));
    }
    for word in &p.relators {
        // boundary walk: positions and the edge leaving each position
        let mut positions = Vec::new();
        let mut boundary = Vec::new();
        for &(g, inv) in word {
            let (mid, first, second) = gens[g];
            positions.extend([base, mid]);
            boundary.extend(if inv { [second, first] } else { [first, second] });
        }
        let center = cell(0, vec![]);
        let m = positions.len();
        let radial: Vec<usize> = positions.iter().map(|&q| cell(1, vec![center, q])).collect();
        for i in 0..m {
            let j = (i + 1) % m;
            cell(
                2,
                vec![center, positions[i], positions[j], radial[i], radial[j], boundary[i]],
            );
        }
    }
    let mut edges = Vec::new();
    for (s, closure) in faces.iter().enumerate() {
        for &t in closure {
            edges.push((t, s));
        }
    }
    let complex = SimplicialComplex::flag_from_graph(dims.len(), edges, 3)?;
    let coloring = VertexColoring::new(dims);
    debug_assert!(coloring.is_proper(&complex));
    Ok(ColoredComplex { complex, coloring })
}

// ---------------------------------------------------------------------------
// blowup

/// Disjoint copies of the simplices of a complex. Instead of being glued,
/// the copy of a face τ is joined to the τ-face of the copy of each simplex
/// containing it.
#[derive(Clone, Debug)]
pub struct BlowupComplex {
    /// `(σ, v)`: the copy of vertex `v` inside the copy of simplex `σ`.
    pub vertices: Vec<(Simplex, usize)>,
    pub edges: Vec<(usize, usize)>,
    pub coloring: VertexColoring,
}

impl BlowupComplex {
    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn flag_complex(&self, dim_cap: usize) -> Result<SimplicialComplex, ComplexError> {
        SimplicialComplex::flag_from_graph(self.vertices.len(), self.edges.iter().copied(), dim_cap)
    }
}

fn proper_faces(s: &[usize]) -> Vec<Simplex> {
    let n = s.len();
    (1..(1u32 << n) - 1)
        .map(|mask| (0..n).filter(|i| mask & (1 << i) != 0).map(|i| s[i]).collect())
        .collect()
}

pub fn blowup(k: &SimplicialComplex, coloring: &VertexColoring) -> Result<BlowupComplex, QuasiError> {
    if !coloring.is_proper(k) {
        return Err(QuasiError::ImproperColoring);
    }
    if k.count(3) > 0 {
        return Err(QuasiError::TooHighDimension);
    }
    let mut vertices = Vec::new();
    let mut base: HashMap<Simplex, usize> = HashMap::new();
    for d in 0..=2 {
        for s in k.simplices(d) {
            base.insert(s.clone(), vertices.len());
            vertices.extend(s.iter().map(|&v| (s.clone(), v)));
        }
    }
    let mut edges = Vec::new();
    for d in 1..=2 {
        for s in k.simplices(d) {
            let bs = base[s];
            for i in 0..s.len() {
                for j in i + 1..s.len() {
                    edges.push((bs + i, bs + j));
                }
            }
            // the copy of a face is joined to the matching face of this copy
            for t in proper_faces(s) {
                let bt = base[&t];
                for i in 0..t.len() {
                    for &w in &t {
                        let j = s.iter().position(|&x| x == w).expect("face vertex");
                        edges.push((bt + i, bs + j));
                    }
                }
            }
        }
    }
    edges.sort_unstable();
    let colors = vertices.iter().map(|(_, v)| coloring.color(*v)).collect();
    Ok(BlowupComplex {
        vertices,
        edges,
        coloring: VertexColoring::new(colors),
    })
}

// ---------------------------------------------------------------------------
// planar placement

/// Distances realized by a placement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlacementAudit {
    pub min_cross_color_d2: Rational,
    pub max_cross_color_d2: Rational,
    pub max_same_color_d2: Rational,
    pub passed: bool,
}

#[derive(Clone, Debug)]
pub struct Embedding {
    pub points: Vec<Point>,
    /// Quasi-Rips complex on the points, stored through dimension 1 (its
    /// monochromatic cliques are far too large to list).
    pub complex: SimplicialComplex,
    pub coloring: VertexColoring,
    pub audit: PlacementAudit,
    pub radius: Rational,
    pub attempts: usize,
}

const GRID: i64 = 64;
const MAX_ATTEMPTS: usize = 16;

/// Triangle corners with side `s`, up to the accuracy of a rational `√3`.
fn triangle_corners(s: &Rational, tol: &Rational) -> [Point; 3] {
    let q = sqrt_approx(3, tol);
    debug_assert!(sqrt_error_bound(&q, 3) < *tol);
    let half = s / rat(2, 1);
    [
        Point::xy(rat(0, 1), rat(0, 1)),
        Point::xy(s.clone(), rat(0, 1)),
        Point::xy(half.clone(), &half * &q),
    ]
}

fn audit_placement(points: &[Point], colors: &VertexColoring, interval: &UncertaintyInterval) -> PlacementAudit {
    let lo2 = &interval.lower * &interval.lower;
    let hi2 = &interval.upper * &interval.upper;
    let mut min_cross: Option<Rational> = None;
    let mut max_cross: Option<Rational> = None;
    let mut max_same = rat(0, 1);
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            let d2 = dist2(&points[i], &points[j]).expect("planar");
            if colors.color(i) == colors.color(j) {
                if d2 > max_same {
                    max_same = d2;
                }
            } else {
                if min_cross.as_ref().is_none_or(|m| &d2 < m) {
                    min_cross = Some(d2.clone());
                }
                if max_cross.as_ref().is_none_or(|m| &d2 > m) {
                    max_cross = Some(d2);
                }
            }
        }
    }
    let min_cross = min_cross.unwrap_or_else(|| hi2.clone());
    let max_cross = max_cross.unwrap_or_else(|| lo2.clone());
    let passed = min_cross > lo2 && max_cross < hi2 && max_same <= lo2;
    PlacementAudit {
        min_cross_color_d2: min_cross,
        max_cross_color_d2: max_cross,
        max_same_color_d2: max_same,
        passed,
    }
}

/// Place the blowup vertices in balls of radius `(ε' - ε)/8` around the
/// corners of a near-equilateral triangle of side `(ε + ε')/2`, one corner
/// per color, and connect them by the blowup edges plus all same-color
/// pairs.
pub fn embed_blowup(b: &BlowupComplex, interval: &UncertaintyInterval, seed: u64) -> Result<Embedding, QuasiError> {
    let radius = (&interval.upper - &interval.lower) / rat(8, 1);
    if &radius * rat(2, 1) > interval.lower {
        return Err(QuasiError::RadiusTooLarge {
            radius: radius.to_string(),
            lower: interval.lower.to_string(),
        });
    }
    let side = (&interval.upper + &interval.lower) / rat(2, 1);
    let corners = triangle_corners(&side, &(&radius / (&side * rat(2, 1))));
    let n = b.n_vertices();
    for attempt in 0..MAX_ATTEMPTS {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(attempt as u64));
        let mut used: HashSet<(u8, i64, i64)> = HashSet::new();
        let mut points = Vec::with_capacity(n);
        for v in 0..n {
            let color = b.coloring.color(v);
            let (i, j) = loop {
                let i = rng.gen_range(-GRID..=GRID);
                let j = rng.gen_range(-GRID..=GRID);
                if i * i + j * j < GRID * GRID && used.insert((color, i, j)) {
                    break (i, j);
                }
            };
            let c = &corners[color as usize];
            points.push(Point::xy(
                c.x() + &radius * rat(i, GRID),
                c.y() + &radius * rat(j, GRID),
            ));
        }
        let audit = audit_placement(&points, &b.coloring, interval);
        if !audit.passed {
            continue;
        }
        let mut edges = b.edges.clone();
        for i in 0..n {
            for j in i + 1..n {
                if b.coloring.color(i) == b.coloring.color(j) {
                    edges.push((i, j));
                }
            }
        }
        let complex = SimplicialComplex::flag_from_graph(n, edges, 1)?
            .with_coords(points.clone())
            .with_kind(ComplexKind::Quasi {
                lower: interval.lower.clone(),
                upper: interval.upper.clone(),
            });
        return Ok(Embedding {
            points,
            complex,
            coloring: b.coloring.clone(),
            audit,
            radius,
            attempts: attempt + 1,
        });
    }
    Err(QuasiError::AuditFailed(MAX_ATTEMPTS))
}

/// Triangles of a flag complex that use at least two colors, read off its
/// graph (the complex need not have its triangles materialized).
pub fn multicolor_triangles(c: &SimplicialComplex, colors: &VertexColoring) -> Vec<[usize; 3]> {
    let mut out = BTreeSet::new();
    for (u, w) in c.edges() {
        if colors.color(u) == colors.color(w) {
            continue;
        }
        let (nu, nw) = (c.neighbors(u), c.neighbors(w));
        let (mut i, mut j) = (0, 0);
        while i < nu.len() && j < nw.len() {
            match nu[i].cmp(&nw[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    let mut t = [u, w, nu[i]];
                    t.sort_unstable();
                    out.insert(t);
                    i += 1;
                    j += 1;
                }
            }
        }
    }
    out.into_iter().collect()
}

/// Integral H1 of a flag complex whose color classes are cliques.
///
/// Each color class spans a simplex; collapsing the disjoint simplices to
/// points is a homotopy equivalence. The quotient has one vertex per color,
/// the multicolored edges, and the multicolored triangles, whose
/// monochromatic sides collapse away.
pub fn collapsed_h1(c: &SimplicialComplex, colors: &VertexColoring) -> IntegerH1 {
    let palette: BTreeSet<u8> = colors.colors().iter().copied().collect();
    let color_row: HashMap<u8, usize> = palette.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let edges: Vec<(usize, usize)> = c.edges().filter(|&(u, w)| colors.color(u) != colors.color(w)).collect();
    let edge_row: HashMap<(usize, usize), usize> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let d1 = SparseMatrix {
        n_rows: palette.len(),
        columns: edges
            .iter()
            .map(|&(u, w)| {
                let mut col = vec![(color_row[&colors.color(u)], -1), (color_row[&colors.color(w)], 1)];
                col.sort_unstable();
                col
            })
            .collect(),
    };
    let d2_columns = multicolor_triangles(c, colors)
        .into_iter()
        .map(|[a, b, d]| {
            let mut col: Vec<(usize, i64)> = [((b, d), 1), ((a, d), -1), ((a, b), 1)]
                .into_iter()
                .filter_map(|(e, sign)| edge_row.get(&e).map(|&r| (r, sign)))
                .collect();
            col.sort_unstable();
            col
        })
        .collect();
    let d2 = SparseMatrix {
        n_rows: edges.len(),
        columns: d2_columns,
    };
    h1_from_boundaries(&d1, &d2)
}

/// Multicolored triangles of the placed complex that are not triangles of
/// the flag completion of the blowup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonochromaticCheck {
    pub multicolor_triangles: usize,
    pub outside_blowup: usize,
    pub example: Option<[usize; 3]>,
}

impl MonochromaticCheck {
    pub fn holds(&self) -> bool {
        self.outside_blowup == 0
    }
}

pub fn monochromatic_check(e: &Embedding, b: &BlowupComplex) -> MonochromaticCheck {
    let blow: HashSet<(usize, usize)> = b.edges.iter().copied().collect();
    let tris = multicolor_triangles(&e.complex, &e.coloring);
    let outside: Vec<[usize; 3]> = tris
        .iter()
        .copied()
        .filter(|&[x, y, z]| !(blow.contains(&(x, y)) && blow.contains(&(x, z)) && blow.contains(&(y, z))))
        .collect();
    MonochromaticCheck {
        multicolor_triangles: tris.len(),
        outside_blowup: outside.len(),
        example: outside.first().copied(),
    }
}

/// Everything computed along the presentation-to-placement route.
#[derive(Clone, Debug)]
pub struct PipelineReport {
    pub presentation: GroupPresentation,
    pub k_census: Vec<usize>,
    pub k_betti: BettiProfile,
    pub k_h1: IntegerH1,
    pub blowup_vertices: usize,
    pub blowup_edges: usize,
    pub blowup_betti: BettiProfile,
    pub quasi_h1: IntegerH1,
    pub audit: PlacementAudit,
    pub attempts: usize,
    pub monochromatic: MonochromaticCheck,
    /// Components of the Rips complex at the lower bound on the same points.
    pub lower_rips_components: usize,
}

impl PipelineReport {
    pub fn betti_agree(&self) -> bool {
        self.k_betti.betti == self.blowup_betti.betti
    }

    pub fn torsion_transported(&self) -> bool {
        self.k_h1.torsion == self.quasi_h1.torsion
    }

    pub fn quasi_torsion(&self) -> &[BigInt] {
        &self.quasi_h1.torsion
    }
}

pub fn run_pipeline(
    p: &GroupPresentation,
    interval: &UncertaintyInterval,
    seed: u64,
) -> Result<(PipelineReport, Embedding, BlowupComplex), QuasiError> {
    let k = presentation_to_colored_complex(p)?;
    let k_betti = betti_numbers(&k.complex, Field::Rationals, 2)?;
    let k_h1 = integer_h1(&k.complex)?;
    let b = blowup(&k.complex, &k.coloring)?;
    let flag_b = b.flag_complex(3)?;
    let blowup_betti = betti_numbers(&flag_b, Field::Rationals, 2)?;
    let e = embed_blowup(&b, interval, seed)?;
    let quasi_h1 = collapsed_h1(&e.complex, &e.coloring);
    let monochromatic = monochromatic_check(&e, &b);
    let lower = build_rips(&e.points, &interval.lower, 1)?;
    let report = PipelineReport {
        presentation: p.clone(),
        k_census: k.complex.census(),
        k_betti,
        k_h1,
        blowup_vertices: b.n_vertices(),
        blowup_edges: b.edges.len(),
        blowup_betti,
        quasi_h1,
        audit: e.audit.clone(),
        attempts: e.attempts,
        monochromatic,
        lower_rips_components: lower.component_labels().0,
    };
    Ok((report, e, b))
}

// ---------------------------------------------------------------------------
// pairs of observations

#[derive(Clone, Debug)]
pub struct PairReport {
    pub middle_scale: Rational,
    pub image_rank: usize,
    pub middle_b1: usize,
    pub shadow_b1: Option<usize>,
    pub lower_census: Vec<usize>,
    pub upper_census: Vec<usize>,
}

impl PairReport {
    pub fn bound_holds(&self) -> bool {
        self.image_rank <= self.middle_b1
    }
}

/// Rank of `H1(R_Q) -> H1(R_Q')` for two quasi-Rips complexes on the same
/// points with disjoint intervals, against `b1` of the Rips complex at the
/// middle scale, which sits between them.
pub fn pair_image_analysis(
    points: &[Point],
    lower: (&UncertaintyInterval, &EdgePolicy),
    upper: (&UncertaintyInterval, &EdgePolicy),
) -> Result<PairReport, QuasiError> {
    if lower.0.upper > upper.0.lower {
        return Err(QuasiError::OverlappingIntervals(
            lower.0.upper.to_string(),
            upper.0.lower.to_string(),
        ));
    }
    let q = build_quasi(points, lower.0, lower.1, 2)?;
    let q2 = build_quasi(points, upper.0, upper.1, 2)?;
    let middle_scale = (&lower.0.upper + &upper.0.lower) / rat(2, 1);
    let mid = build_rips(points, &middle_scale, 2)?;
    let image_rank = induced_h1_rank(&q.complex, &q2.complex)?;
    let middle_b1 = betti_numbers(&mid, Field::Rationals, 1)?.betti[1];
    let shadow_b1 = match points.first().map(Point::dim) {
        Some(2) => Some(shadow_betti(&build_shadow(&mid)?).1),
        _ => None,
    };
    Ok(PairReport {
        middle_scale,
        image_rank,
        middle_b1,
        shadow_b1,
        lower_census: q.complex.census(),
        upper_census: q2.complex.census(),
    })
}
