//! Exact integer and rational linear algebra.
//!
//! Everything here works over [`BigInt`] / [`BigRational`]; there is no
//! floating point anywhere in this module.

use std::fmt;
use std::ops::Index;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::{Serialize, SerializeSeq, Serializer};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MatrixError {
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not symmetric (entry ({row},{col}) differs from its transpose)")]
    NotSymmetric { row: usize, col: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

/// Dense integer matrix with unbounded entries, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_entries(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self, MatrixError> {
        if entries.len() != rows * cols {
            return Err(MatrixError::DimensionMismatch(format!(
                "{} entries supplied for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(Self { rows, cols, entries })
    }

    /// Builds a matrix from rows of machine integers. All rows must have equal length.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self, MatrixError> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(MatrixError::DimensionMismatch(format!(
                    "row {i} has {} entries, expected {cols}",
                    r.len()
                )));
            }
            entries.extend(r.iter().map(|&x| BigInt::from(x)));
        }
        Ok(Self { rows: rows.len(), cols, entries })
    }

    /// Square diagonal matrix.
    pub fn diagonal(diag: &[i64]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n, n);
        for (i, &d) in diag.iter().enumerate() {
            m.entries[i * n + i] = BigInt::from(d);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_nested(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Returns the entries as `i64` if every one of them fits.
    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|x| x.to_i64()).collect::<Option<Vec<_>>>())
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.entries[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.first_asymmetry().is_none()
    }

    fn first_asymmetry(&self) -> Option<(usize, usize)> {
        if !self.is_square() {
            return Some((0, 0));
        }
        for i in 0..self.rows {
            for j in i + 1..self.cols {
                if self.get(i, j) != self.get(j, i) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub(crate) fn require_square(&self) -> Result<(), MatrixError> {
        if self.is_square() {
            Ok(())
        } else {
            Err(MatrixError::NotSquare { rows: self.rows, cols: self.cols })
        }
    }

    pub(crate) fn require_symmetric(&self) -> Result<(), MatrixError> {
        self.require_square()?;
        match self.first_asymmetry() {
            None => Ok(()),
            Some((row, col)) => Err(MatrixError::NotSymmetric { row, col }),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self, MatrixError> {
        if self.cols != rhs.rows {
            return Err(MatrixError::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out.entries[i * rhs.cols + j] += a * rhs.get(k, j);
                }
            }
        }
        Ok(out)
    }

    /// `sᵀ · self · s`.
    pub fn congruent(&self, s: &Self) -> Result<Self, MatrixError> {
        s.transpose().mul(&self.mul(s)?)
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| x * factor).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&BigInt::from(-1))
    }

    /// Block-diagonal matrix `diag(self, other)`.
    pub fn block_diag(&self, other: &Self) -> Self {
        let rows = self.rows + other.rows;
        let cols = self.cols + other.cols;
        let mut out = Self::zeros(rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.entries[i * cols + j] = self.get(i, j).clone();
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out.entries[(self.rows + i) * cols + self.cols + j] = other.get(i, j).clone();
            }
        }
        out
    }

    /// Bilinear form `uᵀ · self · v` on integer coordinate vectors.
    pub fn bilinear(&self, u: &[BigInt], v: &[BigInt]) -> BigInt {
        debug_assert_eq!(u.len(), self.rows);
        debug_assert_eq!(v.len(), self.cols);
        let mut acc = BigInt::zero();
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            let mut row = BigInt::zero();
            for (j, vj) in v.iter().enumerate() {
                if !vj.is_zero() {
                    row += self.get(i, j) * vj;
                }
            }
            acc += ui * row;
        }
        acc
    }

    /// `self · v` for a column vector `v`.
    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.entries.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.entries.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[target] += factor * row[source]
    fn add_row_multiple(&mut self, target: usize, source: usize, factor: &BigInt) {
        for j in 0..self.cols {
            let v = self.get(source, j) * factor;
            self.entries[target * self.cols + j] += v;
        }
    }

    /// col[target] += factor * col[source]
    fn add_col_multiple(&mut self, target: usize, source: usize, factor: &BigInt) {
        for i in 0..self.rows {
            let v = self.get(i, source) * factor;
            self.entries[i * self.cols + target] += v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self.get(i, j);
            self.entries[i * self.cols + j] = v;
        }
    }
}

impl Index<(usize, usize)> for IntegerMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        self.get(i, j)
    }
}

impl fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for IntegerMatrix {
    /// Formats as `[[a,b],[c,d]]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Serializes as a nested JSON array. Entries that fit in `i64` become numbers,
/// larger ones become decimal strings.
impl Serialize for IntegerMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut outer = serializer.serialize_seq(Some(self.rows))?;
        for i in 0..self.rows {
            let row: Vec<serde_json::Value> = self.row(i).iter().map(bigint_json).collect();
            outer.serialize_element(&row)?;
        }
        outer.end()
    }
}

pub(crate) fn bigint_json(x: &BigInt) -> serde_json::Value {
    match x.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::from(x.to_string()),
    }
}

/// Counts of positive, negative and zero eigenvalues of a real symmetric matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, serde::Serialize)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Inertia {
    pub fn new(positive: usize, negative: usize, zero: usize) -> Self {
        Self { positive, negative, zero }
    }

    pub fn dimension(&self) -> usize {
        self.positive + self.negative + self.zero
    }

    /// Inertia of the negated form.
    pub fn swapped(&self) -> Self {
        Self { positive: self.negative, negative: self.positive, zero: self.zero }
    }

    pub fn is_positive_definite(&self) -> bool {
        self.negative == 0 && self.zero == 0
    }

    pub fn is_negative_definite(&self) -> bool {
        self.positive == 0 && self.zero == 0
    }

    pub fn is_definite(&self) -> bool {
        self.zero == 0 && (self.positive == 0 || self.negative == 0)
    }
}

impl std::ops::Add for Inertia {
    type Output = Inertia;

    fn add(self, rhs: Inertia) -> Inertia {
        Inertia {
            positive: self.positive + rhs.positive,
            negative: self.negative + rhs.negative,
            zero: self.zero + rhs.zero,
        }
    }
}

impl fmt::Display for Inertia {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.positive, self.negative, self.zero)
    }
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn determinant(m: &IntegerMatrix) -> Result<BigInt, MatrixError> {
    m.require_square()?;
    let n = m.rows();
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a = m.to_nested();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                // Exact by Sylvester's identity.
                a[i][j] = num / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}

/// Smith normal form `left · m · right = diag(factors)` with unimodular transforms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    /// `min(rows, cols)` nonnegative invariant factors, each dividing the next.
    /// Zeros (if any) come last.
    pub factors: Vec<BigInt>,
    pub left: IntegerMatrix,
    pub right: IntegerMatrix,
}

impl SmithForm {
    pub fn diagonal_matrix(&self, rows: usize, cols: usize) -> IntegerMatrix {
        let mut d = IntegerMatrix::zeros(rows, cols);
        for (i, f) in self.factors.iter().enumerate() {
            d.set(i, i, f.clone());
        }
        d
    }
}

pub fn smith_normal_form(m: &IntegerMatrix) -> SmithForm {
    let (rows, cols) = (m.rows(), m.cols());
    let mut d = m.clone();
    let mut left = IntegerMatrix::identity(rows);
    let mut right = IntegerMatrix::identity(cols);
    let steps = rows.min(cols);

    for t in 0..steps {
        // Smallest nonzero entry of the trailing block becomes the pivot.
        let Some((pi, pj)) = smallest_nonzero(&d, t) else { break };
        d.swap_rows(t, pi);
        left.swap_rows(t, pi);
        d.swap_cols(t, pj);
        right.swap_cols(t, pj);

        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if d.get(i, t).is_zero() {
                    continue;
                }
                let q = -d.get(i, t).div_floor(d.get(t, t));
                d.add_row_multiple(i, t, &q);
                left.add_row_multiple(i, t, &q);
                if !d.get(i, t).is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                if d.get(t, j).is_zero() {
                    continue;
                }
                let q = -d.get(t, j).div_floor(d.get(t, t));
                d.add_col_multiple(j, t, &q);
                right.add_col_multiple(j, t, &q);
                if !d.get(t, j).is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                let (pi, pj) = smallest_in_cross(&d, t);
                d.swap_rows(t, pi);
                left.swap_rows(t, pi);
                d.swap_cols(t, pj);
                right.swap_cols(t, pj);
                continue;
            }
            // Row and column are clear; enforce divisibility of the trailing block.
            let pivot = d.get(t, t).clone();
            let offender = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !d.get(i, j).is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    let one = BigInt::one();
                    d.add_row_multiple(t, i, &one);
                    left.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if d.get(t, t).is_negative() {
            d.negate_row(t);
            left.negate_row(t);
        }
    }

    let factors = (0..steps).map(|i| d.get(i, i).clone()).collect();
    SmithForm { factors, left, right }
}

fn smallest_nonzero(d: &IntegerMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..d.rows() {
        for j in t..d.cols() {
            let x = d.get(i, j);
            if x.is_zero() {
                continue;
            }
            if best.map_or(true, |(bi, bj)| x.abs() < d.get(bi, bj).abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

fn smallest_in_cross(d: &IntegerMatrix, t: usize) -> (usize, usize) {
    let mut best = (t, t);
    let mut best_abs = d.get(t, t).abs();
    let mut consider = |i: usize, j: usize, best: &mut (usize, usize)| {
        let x = d.get(i, j);
        if !x.is_zero() && (best_abs.is_zero() || x.abs() < best_abs) {
            best_abs = x.abs();
            *best = (i, j);
        }
    };
    for i in t + 1..d.rows() {
        consider(i, t, &mut best);
    }
    for j in t + 1..d.cols() {
        consider(t, j, &mut best);
    }
    best
}

/// Inertia of a symmetric integer matrix by exact congruence diagonalization over ℚ.
pub fn symmetric_inertia(g: &IntegerMatrix) -> Result<Inertia, MatrixError> {
    g.require_symmetric()?;
    let n = g.rows();
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| g.row(i).iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect();
    let mut active: Vec<usize> = (0..n).collect();
    let mut inertia = Inertia::default();

    while !active.is_empty() {
        if let Some(pos) = active.iter().position(|&i| !a[i][i].is_zero()) {
            let k = active.remove(pos);
            let pivot = a[k][k].clone();
            if pivot.is_positive() {
                inertia.positive += 1;
            } else {
                inertia.negative += 1;
            }
            for &i in &active {
                if a[i][k].is_zero() {
                    continue;
                }
                let f = &a[i][k] / &pivot;
                for &j in &active {
                    let delta = &f * &a[k][j];
                    a[i][j] -= delta;
                }
            }
            continue;
        }
        // Every remaining diagonal entry vanishes: split off a hyperbolic block.
        let pair = active.iter().enumerate().find_map(|(pi, &i)| {
            active[pi + 1..].iter().find(|&&j| !a[i][j].is_zero()).map(|&j| (i, j))
        });
        let Some((p, q)) = pair else {
            inertia.zero += active.len();
            break;
        };
        active.retain(|&x| x != p && x != q);
        // Block [[0,b],[b,0]] has inverse [[0,1/b],[1/b,0]]; Schur complement:
        // a_ij -= (a_ip a_qj + a_iq a_pj) / b
        let b = a[p][q].clone();
        let snapshot: Vec<(BigRational, BigRational)> =
            active.iter().map(|&i| (a[i][p].clone(), a[i][q].clone())).collect();
        for (ii, &i) in active.iter().enumerate() {
            for (jj, &j) in active.iter().enumerate() {
                let (ip, iq) = &snapshot[ii];
                let (jp, jq) = &snapshot[jj];
                let delta = (ip * jq + iq * jp) / &b;
                a[i][j] -= delta;
            }
        }
        inertia.positive += 1;
        inertia.negative += 1;
    }
    Ok(inertia)
}

/// Row-style Hermite reduction of a generating set: returns a basis (as rows)
/// of the ℤ-span of the given integer vectors.
pub fn lattice_basis(generators: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let Some(dim) = generators.first().map(Vec::len) else { return Vec::new() };
    let mut rows: Vec<Vec<BigInt>> = generators.to_vec();
    let mut basis = Vec::new();
    for col in 0..dim {
        // Euclid on column `col` among remaining rows.
        loop {
            let nonzero: Vec<usize> = (0..rows.len()).filter(|&i| !rows[i][col].is_zero()).collect();
            if nonzero.len() <= 1 {
                break;
            }
            let &pivot = nonzero.iter().min_by_key(|&&i| rows[i][col].abs()).unwrap();
            for &i in &nonzero {
                if i == pivot {
                    continue;
                }
                let q = rows[i][col].div_floor(&rows[pivot][col]);
                let sub: Vec<BigInt> = rows[pivot].iter().map(|x| x * &q).collect();
                for (x, s) in rows[i].iter_mut().zip(sub) {
                    *x -= s;
                }
            }
        }
        if let Some(i) = (0..rows.len()).find(|&i| !rows[i][col].is_zero()) {
            let mut r = rows.swap_remove(i);
            if r[col].is_negative() {
                r.iter_mut().for_each(|x| *x = -x.clone());
            }
            basis.push(r);
        }
        rows.retain(|r| r.iter().any(|x| !x.is_zero()));
    }
    basis
}
