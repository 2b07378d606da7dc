//! Report builders behind the `ripshadow` binary.
//!
//! Every command returns a serializable report; the binary only handles
//! files and exit codes. Rationals are written as strings such as `"11/20"`.

use std::collections::BTreeSet;
use std::path::Path;

use ripshadow::geometry::{parse_rational, Point, Rational};
use ripshadow::homology::{betti_numbers, boundary_matrix, integer_h1, BettiProfile, Field, IntegerH1};
use ripshadow::lifting::{is_contractible, walk_word, RipsWalk};
use ripshadow::quasi::{
    pair_image_analysis, run_pipeline, EdgePolicy, GroupPresentation, QuasiError, UncertaintyInterval,
};
use ripshadow::shadow::{build_shadow, render_svg, shadow_betti, ShadowComplex};
use ripshadow::simplicial::{build_rips, ComplexError, SimplicialComplex};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const SCHEMA: &str = "rips-shadow/1";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("audit failed: {0}")]
    Audit(String),
    #[error("this command needs planar points, got dimension {0}")]
    Dimension(usize),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) | CliError::Io { .. } => 2,
            CliError::Audit(_) => 3,
            CliError::Dimension(_) => 4,
        }
    }
}

impl From<ComplexError> for CliError {
    fn from(e: ComplexError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<QuasiError> for CliError {
    fn from(e: QuasiError) -> Self {
        match e {
            QuasiError::AuditFailed(_) | QuasiError::RadiusTooLarge { .. } => CliError::Audit(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

fn audit_err(e: impl std::fmt::Display) -> CliError {
    CliError::Audit(e.to_string())
}

// ---------------------------------------------------------------------------
// documents

/// Point set on disk. Coordinates are strings: `"11/20"`, `"0.55"`, `"-3"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointSetDocument {
    #[serde(default = "schema_string")]
    pub schema: String,
    pub dimension: usize,
    pub points: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

fn schema_string() -> String {
    SCHEMA.to_string()
}

impl PointSetDocument {
    pub fn from_points(points: &[Point]) -> Self {
        Self {
            schema: SCHEMA.to_string(),
            dimension: points.first().map(Point::dim).unwrap_or(0),
            points: points
                .iter()
                .map(|p| p.coords().iter().map(ToString::to_string).collect())
                .collect(),
            labels: None,
        }
    }

    pub fn to_points(&self) -> Result<Vec<Point>, CliError> {
        if self.schema != SCHEMA {
            return Err(CliError::Input(format!("unsupported schema {:?}", self.schema)));
        }
        if let Some(labels) = &self.labels {
            if labels.len() != self.points.len() {
                return Err(CliError::Input("labels and points differ in length".into()));
            }
        }
        self.points
            .iter()
            .enumerate()
            .map(|(i, coords)| {
                if coords.len() != self.dimension {
                    return Err(CliError::Input(format!(
                        "point {i} has {} coordinates, expected {}",
                        coords.len(),
                        self.dimension
                    )));
                }
                let c: Result<Vec<Rational>, _> = coords.iter().map(|s| parse_rational(s)).collect();
                c.map(Point::new)
                    .map_err(|e| CliError::Input(format!("point {i}: {e}")))
            })
            .collect()
    }
}

/// Presentation file: `{"generators": 2, "relators": ["aba'b'"]}`.
#[derive(Clone, Debug, Deserialize)]
pub struct PresentationDocument {
    pub generators: usize,
    #[serde(default)]
    pub relators: Vec<String>,
}

pub fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn read_points(path: &Path) -> Result<Vec<Point>, CliError> {
    let doc: PointSetDocument =
        serde_json::from_str(&read_file(path)?).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    doc.to_points()
}

pub fn read_presentation(path: &Path) -> Result<GroupPresentation, CliError> {
    let doc: PresentationDocument =
        serde_json::from_str(&read_file(path)?).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let rels: Vec<&str> = doc.relators.iter().map(String::as_str).collect();
    Ok(GroupPresentation::parse(doc.generators, &rels)?)
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

// ---------------------------------------------------------------------------
// argument parsing

pub fn parse_scale(s: &str) -> Result<Rational, CliError> {
    parse_rational(s.trim()).map_err(|e| CliError::Input(e.to_string()))
}

pub fn parse_interval(s: &str) -> Result<UncertaintyInterval, CliError> {
    Ok(s.parse::<UncertaintyInterval>()?)
}

/// `none`, `all`, `random:P` (drawn from `seed`) or `explicit:0-1;2-3`.
pub fn parse_policy(s: &str, seed: u64) -> Result<EdgePolicy, CliError> {
    let bad = || CliError::Input(format!("cannot parse edge policy {s:?}"));
    let s = s.trim();
    match s {
        "none" => return Ok(EdgePolicy::None),
        "all" => return Ok(EdgePolicy::All),
        _ => {}
    }
    if let Some(p) = s.strip_prefix("random:") {
        let probability: f64 = p.parse().map_err(|_| bad())?;
        return Ok(EdgePolicy::SeededRandom { seed, probability });
    }
    if let Some(list) = s.strip_prefix("explicit:") {
        let mut set = BTreeSet::new();
        for pair in list.split(';').filter(|p| !p.trim().is_empty()) {
            let (a, b) = pair.split_once('-').ok_or_else(bad)?;
            let a: usize = a.trim().parse().map_err(|_| bad())?;
            let b: usize = b.trim().parse().map_err(|_| bad())?;
            set.insert((a.min(b), a.max(b)));
        }
        return Ok(EdgePolicy::Explicit(set));
    }
    Err(bad())
}

/// `lo,hi,policy` as taken by the pair command.
pub fn parse_observation(s: &str, seed: u64) -> Result<(UncertaintyInterval, EdgePolicy), CliError> {
    let mut parts = s.splitn(3, ',');
    let (lo, hi, pol) = match (parts.next(), parts.next(), parts.next()) {
        (Some(a), Some(b), Some(c)) => (a, b, c),
        _ => return Err(CliError::Input(format!("expected \"lo,hi,policy\", got {s:?}"))),
    };
    Ok((parse_interval(&format!("{lo},{hi}"))?, parse_policy(pol, seed)?))
}

pub fn parse_loop(s: &str) -> Result<Vec<usize>, CliError> {
    s.split(',')
        .map(|v| {
            v.trim()
                .parse()
                .map_err(|_| CliError::Input(format!("cannot parse loop {s:?}")))
        })
        .collect()
}

// ---------------------------------------------------------------------------
// reports

#[derive(Clone, Debug, Serialize)]
pub struct BettiSection {
    pub field: &'static str,
    pub betti: Vec<usize>,
}

impl From<&BettiProfile> for BettiSection {
    fn from(b: &BettiProfile) -> Self {
        let field = match b.field {
            Field::Gf2 => "GF(2)",
            Field::Rationals => "Q",
        };
        Self {
            field,
            betti: b.betti.clone(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct H1Section {
    pub rank: usize,
    pub torsion: Vec<String>,
}

impl From<&IntegerH1> for H1Section {
    fn from(h: &IntegerH1) -> Self {
        Self {
            rank: h.rank,
            torsion: h.torsion_strings(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ComplexSection {
    pub n_points: usize,
    pub dimension: usize,
    pub epsilon: String,
    pub dim_cap: usize,
    pub census: Vec<usize>,
    pub euler_characteristic: i64,
    pub betti: Vec<BettiSection>,
    pub integer_h1: H1Section,
}

#[derive(Clone, Debug, Serialize)]
pub struct ShadowSection {
    pub vertices: usize,
    pub edges: usize,
    pub bounded_faces: usize,
    pub covered_faces: usize,
    pub betti: [usize; 2],
    pub holes: usize,
    pub euler_b1: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Certificate {
    pub b0_equal: bool,
    pub b1_equal: bool,
    pub torsion_free: bool,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct LoopSection {
    pub vertices: Vec<usize>,
    pub word: String,
    pub contractible: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub schema: &'static str,
    pub command: &'static str,
    pub complex: ComplexSection,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub shadow: Option<ShadowSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
    #[serde(rename = "loop", skip_serializing_if = "Option::is_none")]
    pub loop_verdict: Option<LoopSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

fn complex_section(c: &SimplicialComplex, points: &[Point], epsilon: &Rational) -> Result<ComplexSection, CliError> {
    // Betti numbers are exact below the cap; the top materialized degree is
    // reported only when nothing above it was truncated
    let top = c.dimension().min(c.dim_cap().saturating_sub(1));
    for k in 1..=c.dim_cap() {
        if !boundary_matrix(c, k - 1).mul(&boundary_matrix(c, k)).is_zero() {
            return Err(CliError::Audit(format!(
                "boundary of boundary is nonzero in degree {k}"
            )));
        }
    }
    let q = betti_numbers(c, Field::Rationals, top).map_err(audit_err)?;
    let g = betti_numbers(c, Field::Gf2, top).map_err(audit_err)?;
    if c.dimension() < c.dim_cap()
        && (q.euler_characteristic() != c.euler_characteristic()
            || g.euler_characteristic() != c.euler_characteristic())
    {
        return Err(CliError::Audit(
            "Euler characteristic disagrees with Betti numbers".into(),
        ));
    }
    let h1 = if c.dim_cap() >= 2 {
        integer_h1(c).map_err(audit_err)?
    } else {
        IntegerH1 {
            rank: q.betti.get(1).copied().unwrap_or(0),
            torsion: vec![],
        }
    };
    Ok(ComplexSection {
        n_points: points.len(),
        dimension: points.first().map(Point::dim).unwrap_or(0),
        epsilon: epsilon.to_string(),
        dim_cap: c.dim_cap(),
        census: c.census(),
        euler_characteristic: c.euler_characteristic(),
        betti: vec![(&q).into(), (&g).into()],
        integer_h1: (&h1).into(),
    })
}

pub fn cmd_rips(points: &[Point], epsilon: &Rational, dim_cap: usize) -> Result<AnalysisReport, CliError> {
    let c = build_rips(points, epsilon, dim_cap)?;
    Ok(AnalysisReport {
        schema: SCHEMA,
        command: "rips",
        complex: complex_section(&c, points, epsilon)?,
        shadow: None,
        certificate: None,
        loop_verdict: None,
        timing_ms: None,
    })
}

/// Output of the shadow command: the report and the SVG drawing.
pub struct ShadowOutput {
    pub report: AnalysisReport,
    pub svg: String,
}

pub fn cmd_shadow(
    points: &[Point],
    epsilon: &Rational,
    loop_vertices: Option<&[usize]>,
) -> Result<ShadowOutput, CliError> {
    if let Some(p) = points.iter().find(|p| p.dim() != 2) {
        return Err(CliError::Dimension(p.dim()));
    }
    let c = build_rips(points, epsilon, 2)?;
    let complex = complex_section(&c, points, epsilon)?;
    let s: ShadowComplex = build_shadow(&c).map_err(audit_err)?;
    if !s.coverage_consistent() {
        return Err(CliError::Audit("face coverage depends on the witness point".into()));
    }
    let (b0, b1) = shadow_betti(&s);
    let q = &complex.betti[0].betti;
    let b0_equal = q.first() == Some(&b0);
    let b1_equal = q.get(1).copied().unwrap_or(0) == b1;
    let torsion_free = complex.integer_h1.torsion.is_empty();
    let certificate = Certificate {
        b0_equal,
        b1_equal,
        torsion_free,
        passed: b0_equal && b1_equal && torsion_free,
    };
    let (loop_verdict, overlay) = match loop_vertices {
        Some(vs) => {
            let walk = RipsWalk::new(vs.to_vec(), &c).map_err(|e| CliError::Input(e.to_string()))?;
            let word = walk_word(&walk, &c, &s).map_err(|e| CliError::Input(e.to_string()))?;
            let contractible = is_contractible(&walk, &c, &s).map_err(|e| CliError::Input(e.to_string()))?;
            let overlay = walk.polyline(&c).map_err(|e| CliError::Input(e.to_string()))?;
            let section = LoopSection {
                vertices: vs.to_vec(),
                word: word.to_string(),
                contractible,
            };
            (Some(section), Some(overlay))
        }
        None => (None, None),
    };
    let svg = render_svg(&s, overlay.as_deref());
    let shadow = ShadowSection {
        vertices: s.vertices().len(),
        edges: s.edges().len(),
        bounded_faces: s.faces().len(),
        covered_faces: s.covered_faces().count(),
        betti: [b0, b1],
        holes: s.uncovered_faces().count(),
        euler_b1: s.euler_b1(),
    };
    Ok(ShadowOutput {
        report: AnalysisReport {
            schema: SCHEMA,
            command: "shadow",
            complex,
            shadow: Some(shadow),
            certificate: Some(certificate),
            loop_verdict,
            timing_ms: None,
        },
        svg,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct AuditSection {
    pub min_cross_color_d2: String,
    pub max_cross_color_d2: String,
    pub max_same_color_d2: String,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct MonochromaticSection {
    pub multicolor_triangles: usize,
    pub outside_blowup: usize,
    pub example: Option<[usize; 3]>,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct QuasiReport {
    pub schema: &'static str,
    pub command: &'static str,
    pub presentation: String,
    pub interval: [String; 2],
    pub seed: u64,
    pub k_census: Vec<usize>,
    pub k_betti: BettiSection,
    pub k_h1: H1Section,
    pub blowup_vertices: usize,
    pub blowup_edges: usize,
    pub blowup_betti: BettiSection,
    pub betti_agree: bool,
    pub audit: AuditSection,
    pub attempts: usize,
    pub quasi_h1: H1Section,
    pub torsion_transported: bool,
    pub monochromatic: MonochromaticSection,
    pub lower_rips_components: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

pub fn cmd_quasi(p: &GroupPresentation, interval: &UncertaintyInterval, seed: u64) -> Result<QuasiReport, CliError> {
    let (r, _, _) = run_pipeline(p, interval, seed)?;
    Ok(QuasiReport {
        schema: SCHEMA,
        command: "quasi",
        presentation: p.to_string(),
        interval: [interval.lower().to_string(), interval.upper().to_string()],
        seed,
        k_census: r.k_census.clone(),
        k_betti: (&r.k_betti).into(),
        k_h1: (&r.k_h1).into(),
        blowup_vertices: r.blowup_vertices,
        blowup_edges: r.blowup_edges,
        blowup_betti: (&r.blowup_betti).into(),
        betti_agree: r.betti_agree(),
        audit: AuditSection {
            min_cross_color_d2: r.audit.min_cross_color_d2.to_string(),
            max_cross_color_d2: r.audit.max_cross_color_d2.to_string(),
            max_same_color_d2: r.audit.max_same_color_d2.to_string(),
            passed: r.audit.passed,
        },
        attempts: r.attempts,
        quasi_h1: (&r.quasi_h1).into(),
        torsion_transported: r.torsion_transported(),
        monochromatic: MonochromaticSection {
            multicolor_triangles: r.monochromatic.multicolor_triangles,
            outside_blowup: r.monochromatic.outside_blowup,
            example: r.monochromatic.example,
            holds: r.monochromatic.holds(),
        },
        lower_rips_components: r.lower_rips_components,
        timing_ms: None,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct PairSection {
    pub middle_scale: String,
    pub image_rank: usize,
    pub middle_b1: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub middle_shadow_b1: Option<usize>,
    pub lower_census: Vec<usize>,
    pub upper_census: Vec<usize>,
    pub bound_holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct PairReport {
    pub schema: &'static str,
    pub command: &'static str,
    pub n_points: usize,
    pub lower: [String; 2],
    pub upper: [String; 2],
    pub pair: PairSection,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

pub fn cmd_pair(
    points: &[Point],
    lower: &(UncertaintyInterval, EdgePolicy),
    upper: &(UncertaintyInterval, EdgePolicy),
) -> Result<PairReport, CliError> {
    let r = pair_image_analysis(points, (&lower.0, &lower.1), (&upper.0, &upper.1))?;
    let ends = |iv: &UncertaintyInterval| [iv.lower().to_string(), iv.upper().to_string()];
    Ok(PairReport {
        schema: SCHEMA,
        command: "pair",
        n_points: points.len(),
        lower: ends(&lower.0),
        upper: ends(&upper.0),
        pair: PairSection {
            middle_scale: r.middle_scale.to_string(),
            image_rank: r.image_rank,
            middle_b1: r.middle_b1,
            middle_shadow_b1: r.shadow_b1,
            lower_census: r.lower_census.clone(),
            upper_census: r.upper_census.clone(),
            bound_holds: r.bound_holds(),
        },
        timing_ms: None,
    })
}
