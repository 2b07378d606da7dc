//! Boundary matrices, Betti numbers over GF(2) and the rationals, integer
//! first homology through Smith normal form, and ranks of maps induced by
//! inclusions.
//!
//! Simplices are oriented by increasing vertex index, so the boundary of
//! `[v0, ..., vk]` is `sum_i (-1)^i [v0, ..., v̂i, ..., vk]`.
//!
//! All arithmetic is exact. Rational ranks run fraction-free on machine
//! integers and fall back to big integers if an intermediate value would
//! overflow; torsion is read off a Smith normal form computed with big
//! integers.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::simplicial::SimplicialComplex;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomologyError {
    #[error("degree {degree} needs simplices through dimension {needed}, but the complex is capped at {dim_cap}")]
    InsufficientDimCap {
        degree: usize,
        needed: usize,
        dim_cap: usize,
    },
    #[error("subcomplex is not contained in the target complex")]
    NotContained,
}

/// Coefficient field for Betti numbers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Gf2,
    Rationals,
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Field::Gf2 => "GF(2)",
            Field::Rationals => "Q",
        })
    }
}

/// Sparse integer matrix stored by columns; each column is sorted by row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    pub n_rows: usize,
    pub columns: Vec<Vec<(usize, i64)>>,
}

impl SparseMatrix {
    pub fn n_cols(&self) -> usize {
        self.columns.len()
    }

    /// Exact product `self * rhs`.
    pub fn mul(&self, rhs: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.n_cols(), rhs.n_rows);
        let columns = rhs
            .columns
            .iter()
            .map(|col| {
                let mut acc: HashMap<usize, i64> = HashMap::new();
                for &(k, b) in col {
                    for &(i, a) in &self.columns[k] {
                        *acc.entry(i).or_default() += a * b;
                    }
                }
                let mut out: Vec<(usize, i64)> = acc.into_iter().filter(|&(_, v)| v != 0).collect();
                out.sort_unstable();
                out
            })
            .collect();
        SparseMatrix {
            n_rows: self.n_rows,
            columns,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![0; self.n_cols()]; self.n_rows];
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, v) in col {
                out[i][j] = v;
            }
        }
        out
    }
}

/// Boundary map from k-simplices (columns) to (k-1)-simplices (rows).
/// For `k = 0` the result has zero rows.
pub fn boundary_matrix(c: &SimplicialComplex, k: usize) -> SparseMatrix {
    if k == 0 {
        return SparseMatrix {
            n_rows: 0,
            columns: vec![Vec::new(); c.count(0)],
        };
    }
    let faces = c.simplices(k - 1);
    let index: HashMap<&[usize], usize> = faces.iter().enumerate().map(|(i, s)| (s.as_slice(), i)).collect();
    let columns = c
        .simplices(k)
        .iter()
        .map(|s| {
            let mut col: Vec<(usize, i64)> = (0..s.len())
                .map(|i| {
                    let face: Vec<usize> = s.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &v)| v).collect();
                    let row = index[face.as_slice()];
                    (row, if i % 2 == 0 { 1 } else { -1 })
                })
                .collect();
            col.sort_unstable();
            col
        })
        .collect();
    SparseMatrix {
        n_rows: faces.len(),
        columns,
    }
}

// ---------------------------------------------------------------------------
// exact integer coefficients

trait Coeff: Clone + PartialEq + fmt::Debug {
    fn from_i64(v: i64) -> Self;
    fn is_nil(&self) -> bool;
    fn is_unit(&self) -> bool;
    fn checked_mul(&self, other: &Self) -> Option<Self>;
    fn checked_sub(&self, other: &Self) -> Option<Self>;
    fn gcd_c(&self, other: &Self) -> Self;
    fn div_exact(&self, other: &Self) -> Self;
    fn is_neg(&self) -> bool;
    fn negated(&self) -> Self;
    fn to_big(&self) -> BigInt;
}

impl Coeff for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
    fn is_nil(&self) -> bool {
        *self == 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn checked_mul(&self, other: &Self) -> Option<Self> {
        i64::checked_mul(*self, *other)
    }
    fn checked_sub(&self, other: &Self) -> Option<Self> {
        i64::checked_sub(*self, *other)
    }
    fn gcd_c(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, other: &Self) -> Self {
        self / other
    }
    fn is_neg(&self) -> bool {
        *self < 0
    }
    fn negated(&self) -> Self {
        -*self
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Coeff for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
    fn checked_mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn checked_sub(&self, other: &Self) -> Option<Self> {
        Some(self - other)
    }
    fn gcd_c(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, other: &Self) -> Self {
        self / other
    }
    fn is_neg(&self) -> bool {
        Signed::is_negative(self)
    }
    fn negated(&self) -> Self {
        -self
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

type Column<T> = Vec<(usize, T)>;

fn convert<T: Coeff>(m: &SparseMatrix) -> Vec<Column<T>> {
    m.columns
        .iter()
        .map(|c| c.iter().map(|&(r, v)| (r, T::from_i64(v))).collect())
        .collect()
}

/// `alpha * x - beta * y` on sorted sparse columns.
fn combine<T: Coeff>(alpha: &T, x: &Column<T>, beta: &T, y: &Column<T>) -> Option<Column<T>> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j >= y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i >= x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push((x[i].0, alpha.checked_mul(&x[i].1)?));
            i += 1;
        } else if take_y {
            out.push((y[j].0, T::from_i64(0).checked_sub(&beta.checked_mul(&y[j].1)?)?));
            j += 1;
        } else {
            let v = alpha.checked_mul(&x[i].1)?.checked_sub(&beta.checked_mul(&y[j].1)?)?;
            if !v.is_nil() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    Some(out)
}

fn normalize_content<T: Coeff>(col: &mut Column<T>) {
    let Some(first) = col.first() else { return };
    let mut g = first.1.clone();
    for (_, v) in col.iter().skip(1) {
        g = g.gcd_c(v);
        if g.is_unit() {
            break;
        }
    }
    if g.is_neg() {
        g = g.negated();
    }
    if !g.is_unit() {
        for (_, v) in col.iter_mut() {
            *v = v.div_exact(&g);
        }
    }
}

/// Left-to-right column reduction over Q (fraction-free). Returns for each
/// column whether it survived (is independent of the columns before it).
fn reduce_rational<T: Coeff>(mut cols: Vec<Column<T>>, n_rows: usize) -> Option<Vec<bool>> {
    let mut pivot_of_row: Vec<Option<usize>> = vec![None; n_rows];
    let mut survived = vec![false; cols.len()];
    for j in 0..cols.len() {
        normalize_content(&mut cols[j]);
        while let Some(&(low, ref a)) = cols[j].last() {
            match pivot_of_row[low] {
                None => {
                    pivot_of_row[low] = Some(j);
                    survived[j] = true;
                    break;
                }
                Some(p) => {
                    let a = a.clone();
                    let b = cols[p].last().expect("pivot column nonempty").1.clone();
                    let g = a.gcd_c(&b);
                    let (alpha, beta) = (b.div_exact(&g), a.div_exact(&g));
                    let mut next = combine(&alpha, &cols[j], &beta, &cols[p])?;
                    normalize_content(&mut next);
                    cols[j] = next;
                }
            }
        }
    }
    Some(survived)
}

fn rational_survivors(columns: &[Column<i64>], n_rows: usize) -> Vec<bool> {
    reduce_rational(columns.to_vec(), n_rows).unwrap_or_else(|| {
        let big: Vec<Column<BigInt>> = columns
            .iter()
            .map(|c| c.iter().map(|(r, v)| (*r, BigInt::from(*v))).collect())
            .collect();
        reduce_rational(big, n_rows).expect("big integers do not overflow")
    })
}

fn gf2_survivors(columns: &[Column<i64>], n_rows: usize) -> Vec<bool> {
    let mut cols: Vec<Vec<usize>> = columns
        .iter()
        .map(|c| {
            c.iter()
                .filter(|(_, v)| v.rem_euclid(2) == 1)
                .map(|(r, _)| *r)
                .collect()
        })
        .collect();
    let mut pivot_of_row: Vec<Option<usize>> = vec![None; n_rows];
    let mut survived = vec![false; cols.len()];
    for j in 0..cols.len() {
        while let Some(&low) = cols[j].last() {
            match pivot_of_row[low] {
                None => {
                    pivot_of_row[low] = Some(j);
                    survived[j] = true;
                    break;
                }
                Some(p) => {
                    let merged = symmetric_difference(&cols[j], &cols[p]);
                    cols[j] = merged;
                }
            }
        }
    }
    survived
}

fn symmetric_difference(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j >= b.len() || (i < a.len() && a[i] < b[j]) {
            out.push(a[i]);
            i += 1;
        } else if i >= a.len() || b[j] < a[i] {
            out.push(b[j]);
            j += 1;
        } else {
            i += 1;
            j += 1;
        }
    }
    out
}

/// Rank of an integer matrix over the given field.
pub fn rank(m: &SparseMatrix, field: Field) -> usize {
    let survived = match field {
        Field::Gf2 => gf2_survivors(&m.columns, m.n_rows),
        Field::Rationals => rational_survivors(&m.columns, m.n_rows),
    };
    survived.iter().filter(|&&s| s).count()
}

// ---------------------------------------------------------------------------
// Smith normal form

/// Rank and nontrivial invariant factors (each > 1, each dividing the next)
/// of an integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

/// Smith normal form invariants of a sparse integer matrix.
///
/// Unit pivots are eliminated on the sparse structure first (this is exact:
/// a unit pivot contributes an invariant factor 1 and leaves a smaller
/// equivalent matrix). Whatever remains is diagonalized densely with
/// smallest-magnitude pivoting.
pub fn smith_normal_form(m: &SparseMatrix) -> SmithDecomposition {
    let (units, rest) = eliminate_unit_pivots::<i64>(convert(m), m.n_rows)
        .unwrap_or_else(|| eliminate_unit_pivots::<BigInt>(convert(m), m.n_rows).expect("no overflow"));
    let diagonal = dense_smith_diagonal(rest);
    let mut torsion: Vec<BigInt> = diagonal.iter().filter(|d| !d.is_one()).cloned().collect();
    torsion.sort();
    SmithDecomposition {
        rank: units + diagonal.len(),
        torsion,
    }
}

/// Returns the number of unit pivots removed and the remaining matrix as
/// dense big-integer rows.
fn eliminate_unit_pivots<T: Coeff>(mut cols: Vec<Column<T>>, n_rows: usize) -> Option<(usize, Vec<Vec<BigInt>>)> {
    let mut rows: Vec<HashSet<usize>> = vec![HashSet::new(); n_rows];
    for (j, c) in cols.iter().enumerate() {
        for (r, _) in c {
            rows[*r].insert(j);
        }
    }
    let mut alive = vec![true; cols.len()];
    let mut units = 0;
    let mut progress = true;
    while progress {
        progress = false;
        for j in 0..cols.len() {
            if !alive[j] || cols[j].is_empty() {
                continue;
            }
            // unit entry whose row is shortest keeps fill-in low
            let Some(&(r, ref u)) = cols[j]
                .iter()
                .filter(|(_, v)| v.is_unit())
                .min_by_key(|(r, _)| rows[*r].len())
            else {
                continue;
            };
            let u = u.clone();
            let pivot = std::mem::take(&mut cols[j]);
            for (pr, _) in &pivot {
                rows[*pr].remove(&j);
            }
            let others: Vec<usize> = rows[r].iter().copied().collect();
            for k in others {
                let a = cols[k].iter().find(|(rr, _)| *rr == r).expect("indexed").1.clone();
                // col_k - (a * u) * pivot clears row r since u * u = 1
                let factor = a.checked_mul(&u)?;
                let next = combine(&T::from_i64(1), &cols[k], &factor, &pivot)?;
                for (pr, _) in &cols[k] {
                    rows[*pr].remove(&k);
                }
                for (pr, _) in &next {
                    rows[*pr].insert(k);
                }
                cols[k] = next;
            }
            debug_assert!(rows[r].is_empty());
            alive[j] = false;
            units += 1;
            progress = true;
        }
    }
    let used_rows: Vec<usize> = (0..n_rows).filter(|&r| !rows[r].is_empty()).collect();
    let row_pos: HashMap<usize, usize> = used_rows.iter().enumerate().map(|(i, &r)| (r, i)).collect();
    let live_cols: Vec<usize> = (0..cols.len()).filter(|&j| alive[j] && !cols[j].is_empty()).collect();
    let mut dense = vec![vec![BigInt::zero(); live_cols.len()]; used_rows.len()];
    for (jj, &j) in live_cols.iter().enumerate() {
        for (r, v) in &cols[j] {
            dense[row_pos[r]][jj] = v.to_big();
        }
    }
    Some((units, dense))
}

/// Nonzero diagonal of the Smith normal form of a dense matrix.
fn dense_smith_diagonal(mut a: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut diagonal = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // smallest nonzero magnitude in the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !a[i][j].is_zero() && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut done = true;
            // clear column t below the pivot
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                for j in t..cols {
                    let v = &a[t][j] * &q;
                    a[i][j] -= v;
                }
                if !a[i][t].is_zero() {
                    done = false;
                }
            }
            // clear row t right of the pivot
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for i in t..rows {
                    let v = &a[i][t] * &q;
                    a[i][j] -= v;
                }
                if !a[t][j].is_zero() {
                    done = false;
                }
            }
            if done {
                // divisibility: fold an offending row into row t and repeat
                let offender = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !(&a[i][j] % &a[t][t]).is_zero()));
                match offender {
                    Some(i) => {
                        for j in t..cols {
                            let v = a[i][j].clone();
                            a[t][j] += v;
                        }
                    }
                    None => break,
                }
            }
            // move the smallest entry of row/column t into the pivot
            let mut best = (t, t);
            for i in t..rows {
                if !a[i][t].is_zero() && a[i][t].abs() < a[best.0][best.1].abs() {
                    best = (i, t);
                }
            }
            for j in t..cols {
                if !a[t][j].is_zero() && a[t][j].abs() < a[best.0][best.1].abs() {
                    best = (t, j);
                }
            }
            a.swap(t, best.0);
            for row in a.iter_mut() {
                row.swap(t, best.1);
            }
        }
        diagonal.push(a[t][t].abs());
        t += 1;
    }
    diagonal
}

// ---------------------------------------------------------------------------
// homology of complexes

/// Betti numbers b0..b_top over a field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiProfile {
    pub field: Field,
    pub betti: Vec<usize>,
}

impl BettiProfile {
    pub fn euler_characteristic(&self) -> i64 {
        self.betti
            .iter()
            .enumerate()
            .map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }
}

fn check_cap(c: &SimplicialComplex, degree: usize) -> Result<(), HomologyError> {
    // Flag complexes may have cliques above the cap; explicit complexes list
    // every simplex they have.
    if c.is_flag() && degree + 1 > c.dim_cap() {
        return Err(HomologyError::InsufficientDimCap {
            degree,
            needed: degree + 1,
            dim_cap: c.dim_cap(),
        });
    }
    Ok(())
}

/// `b_k = dim ker d_k - rank d_{k+1}` for `k = 0..=top_dim`.
pub fn betti_numbers(c: &SimplicialComplex, field: Field, top_dim: usize) -> Result<BettiProfile, HomologyError> {
    check_cap(c, top_dim)?;
    let ranks: Vec<usize> = (0..=top_dim + 1)
        .map(|k| if k == 0 { 0 } else { rank(&boundary_matrix(c, k), field) })
        .collect();
    let betti = (0..=top_dim).map(|k| c.count(k) - ranks[k] - ranks[k + 1]).collect();
    Ok(BettiProfile { field, betti })
}

/// First integral homology `Z^rank (+) Z/d1 (+) ...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerH1 {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

impl IntegerH1 {
    pub fn is_torsion_free(&self) -> bool {
        self.torsion.is_empty()
    }

    pub fn torsion_strings(&self) -> Vec<String> {
        self.torsion.iter().map(ToString::to_string).collect()
    }
}

impl fmt::Display for IntegerH1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if self.rank > 0 {
            parts.push(if self.rank == 1 {
                "Z".into()
            } else {
                format!("Z^{}", self.rank)
            });
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// H1 of a chain complex given by its two boundary maps.
pub fn h1_from_boundaries(d1: &SparseMatrix, d2: &SparseMatrix) -> IntegerH1 {
    let rank_d1 = rank(d1, Field::Rationals);
    let snf = smith_normal_form(d2);
    IntegerH1 {
        rank: d1.n_cols() - rank_d1 - snf.rank,
        torsion: snf.torsion,
    }
}

pub fn integer_h1(c: &SimplicialComplex) -> Result<IntegerH1, HomologyError> {
    if c.dim_cap() < 2 {
        return Err(HomologyError::InsufficientDimCap {
            degree: 1,
            needed: 2,
            dim_cap: c.dim_cap(),
        });
    }
    Ok(h1_from_boundaries(&boundary_matrix(c, 1), &boundary_matrix(c, 2)))
}

/// Fundamental cycles of a spanning forest of the 1-skeleton, as signed edge
/// combinations indexed by `target`'s edge list.
fn cycle_basis(c: &SimplicialComplex, target: &SimplicialComplex) -> Vec<Column<i64>> {
    let n = c.n_vertices();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    let mut tree: HashSet<(usize, usize)> = HashSet::new();
    for root in 0..n {
        if parent[root] != usize::MAX {
            continue;
        }
        parent[root] = root;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &w in c.neighbors(v) {
                if parent[w] == usize::MAX {
                    parent[w] = v;
                    depth[w] = depth[v] + 1;
                    tree.insert((v.min(w), v.max(w)));
                    queue.push_back(w);
                }
            }
        }
    }
    let mut out = Vec::new();
    for (u, v) in c.edges() {
        if tree.contains(&(u, v)) {
            continue;
        }
        // cycle u -> v, then tree path v -> u
        let mut acc: HashMap<usize, i64> = HashMap::new();
        let mut push = |a: usize, b: usize| {
            let idx = target.index_of(&[a.min(b), a.max(b)]).expect("edge in target");
            *acc.entry(idx).or_default() += if a < b { 1 } else { -1 };
        };
        push(u, v);
        let (mut x, mut y) = (v, u);
        let mut tail = Vec::new();
        while x != y {
            if depth[x] >= depth[y] {
                push(x, parent[x]);
                x = parent[x];
            } else {
                tail.push((parent[y], y));
                y = parent[y];
            }
        }
        for (a, b) in tail.into_iter().rev() {
            push(a, b);
        }
        let mut col: Column<i64> = acc.into_iter().filter(|&(_, v)| v != 0).collect();
        col.sort_unstable();
        out.push(col);
    }
    out
}

/// Rank over Q of `H1(sub) -> H1(sup)` induced by inclusion.
///
/// This is `dim(Z1(sub) + B1(sup)) - dim B1(sup)`, computed by reducing the
/// boundaries of `sup` first and counting the cycles of `sub` that survive.
pub fn induced_h1_rank(sub: &SimplicialComplex, sup: &SimplicialComplex) -> Result<usize, HomologyError> {
    if sup.dim_cap() < 2 {
        return Err(HomologyError::InsufficientDimCap {
            degree: 1,
            needed: 2,
            dim_cap: sup.dim_cap(),
        });
    }
    if !sub.is_subcomplex_of(sup) {
        return Err(HomologyError::NotContained);
    }
    // a cone has trivial H1
    if sup.is_flag() && sup.cone_apex().ok().flatten().is_some() {
        return Ok(0);
    }
    let d2 = boundary_matrix(sup, 2);
    let n_boundaries = d2.n_cols();
    let mut columns = d2.columns;
    columns.extend(cycle_basis(sub, sup));
    let survived = rational_survivors(&columns, sup.count(1));
    Ok(survived[n_boundaries..].iter().filter(|&&s| s).count())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> SimplicialComplex {
        SimplicialComplex::flag_from_graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)], 2).unwrap()
    }

    fn coned_square() -> SimplicialComplex {
        SimplicialComplex::flag_from_graph(5, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (1, 4), (2, 4), (3, 4)], 3)
            .unwrap()
    }

    /// Minimal 6-vertex triangulation of the projective plane.
    pub(crate) fn rp2_six() -> SimplicialComplex {
        let facets = [
            [0, 1, 2],
            [0, 2, 3],
            [0, 3, 4],
            [0, 4, 5],
            [0, 1, 5],
            [1, 2, 4],
            [2, 3, 5],
            [1, 3, 4],
            [1, 3, 5],
            [2, 4, 5],
        ];
        SimplicialComplex::from_simplices(6, facets.iter().map(|f| f.to_vec())).unwrap()
    }

    /// Independent oracle: dense integer elimination computing the
    /// determinantal divisors of a small matrix by brute force over minors.
    fn determinantal_invariants(m: &[Vec<i64>]) -> Vec<BigInt> {
        fn det(m: &[Vec<BigInt>]) -> BigInt {
            // Bareiss fraction-free elimination
            let n = m.len();
            let mut a = m.to_vec();
            let mut sign = BigInt::one();
            let mut prev = BigInt::one();
            for k in 0..n {
                if a[k][k].is_zero() {
                    let Some(s) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                        return BigInt::zero();
                    };
                    a.swap(k, s);
                    sign = -sign;
                }
                for i in k + 1..n {
                    for j in k + 1..n {
                        a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                    }
                }
                prev = a[k][k].clone();
            }
            sign * &a[n - 1][n - 1]
        }
        fn combos(n: usize, k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            if n < k {
                return vec![];
            }
            let mut out = combos(n - 1, k);
            for mut c in combos(n - 1, k - 1) {
                c.push(n - 1);
                out.push(c);
            }
            out
        }
        let rows = m.len();
        let cols = m.first().map_or(0, Vec::len);
        let mut divisors = vec![BigInt::one()];
        for k in 1..=rows.min(cols) {
            let mut g = BigInt::zero();
            for rs in combos(rows, k) {
                for cs in combos(cols, k) {
                    let minor: Vec<Vec<BigInt>> = rs
                        .iter()
                        .map(|&r| cs.iter().map(|&c| BigInt::from(m[r][c])).collect())
                        .collect();
                    g = Integer::gcd(&g, &det(&minor));
                }
            }
            if g.is_zero() {
                break;
            }
            divisors.push(g);
        }
        divisors.windows(2).map(|w| &w[1] / &w[0]).collect()
    }

    #[test]
    fn boundary_of_boundary_vanishes() {
        let c = coned_square();
        for k in 1..3 {
            assert!(boundary_matrix(&c, k).mul(&boundary_matrix(&c, k + 1)).is_zero());
        }
    }

    #[test]
    fn betti_examples() {
        assert_eq!(betti_numbers(&square(), Field::Rationals, 1).unwrap().betti, vec![1, 1]);
        let simplex =
            SimplicialComplex::flag_from_graph(4, (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j))), 4).unwrap();
        assert_eq!(
            betti_numbers(&simplex, Field::Rationals, 3).unwrap().betti,
            vec![1, 0, 0, 0]
        );
        assert!(matches!(
            betti_numbers(&square(), Field::Rationals, 2),
            Err(HomologyError::InsufficientDimCap { .. })
        ));
    }

    #[test]
    fn rp2_torsion_and_field_dependence() {
        let rp2 = rp2_six();
        let h1 = integer_h1(&rp2).unwrap();
        assert_eq!(h1.rank, 0);
        assert_eq!(h1.torsion, vec![BigInt::from(2)]);
        assert_eq!(betti_numbers(&rp2, Field::Rationals, 2).unwrap().betti, vec![1, 0, 0]);
        assert_eq!(betti_numbers(&rp2, Field::Gf2, 2).unwrap().betti, vec![1, 1, 1]);
        assert_eq!(smith_normal_form(&boundary_matrix(&rp2, 2)).rank, 10);
    }

    #[test]
    fn snf_matches_minor_oracle_on_small_matrices() {
        let cases: Vec<Vec<Vec<i64>>> = vec![
            vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]],
            vec![vec![6, 0], vec![0, 4]],
            vec![vec![3, 1], vec![1, 3], vec![2, 2]],
            vec![vec![0, 0], vec![0, 0]],
        ];
        for dense in cases {
            let m = SparseMatrix {
                n_rows: dense.len(),
                columns: (0..dense[0].len())
                    .map(|j| {
                        (0..dense.len())
                            .filter(|&i| dense[i][j] != 0)
                            .map(|i| (i, dense[i][j]))
                            .collect()
                    })
                    .collect(),
            };
            let oracle = determinantal_invariants(&dense);
            let snf = smith_normal_form(&m);
            assert_eq!(snf.rank, oracle.len(), "{dense:?}");
            let nontrivial: Vec<BigInt> = oracle.into_iter().filter(|d| !d.is_one()).collect();
            assert_eq!(snf.torsion, nontrivial, "{dense:?}");
        }
    }

    #[test]
    fn h1_examples() {
        let h1 = integer_h1(&square()).unwrap();
        assert_eq!((h1.rank, h1.torsion.len()), (1, 0));
        assert_eq!(h1.to_string(), "Z");
        let capped = square().with_dim_cap(1).unwrap();
        assert!(integer_h1(&capped).is_err());
    }

    #[test]
    fn induced_rank_examples() {
        let sq = square();
        let cone = coned_square();
        // same vertex indexing: the square lives on vertices 0..4 of the cone
        let sq5 = SimplicialComplex::flag_from_graph(5, [(0, 1), (1, 2), (2, 3), (0, 3)], 2).unwrap();
        assert_eq!(induced_h1_rank(&sq5, &cone).unwrap(), 0);
        assert_eq!(induced_h1_rank(&sq, &sq).unwrap(), 1);
        assert_eq!(induced_h1_rank(&cone, &sq5), Err(HomologyError::NotContained));
    }

    #[test]
    fn induced_rank_without_cone_shortcut() {
        // two squares sharing vertex 0; the second square gets filled
        let sub =
            SimplicialComplex::flag_from_graph(7, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (4, 5), (5, 6), (0, 6)], 2)
                .unwrap();
        let sup = SimplicialComplex::flag_from_graph(
            7,
            [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (4, 5), (5, 6), (0, 6), (0, 5)],
            2,
        )
        .unwrap();
        assert_eq!(induced_h1_rank(&sub, &sup).unwrap(), 1);
        assert_eq!(induced_h1_rank(&sub, &sub).unwrap(), 2);
    }
}
