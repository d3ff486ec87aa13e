//! Exact dense linear algebra over F = Q(√3, √5) and over Z.
//!
//! Ranks, kernels and solutions are computed by Gauss–Jordan elimination with
//! exact field arithmetic and first-nonzero pivoting. Because F embeds in R
//! and rank is invariant under field extension, a rank computed here *is* the
//! rank of the same matrix read as a real matrix; that bridging fact is part
//! of the contract and is what lets integer dimension counts over F certify
//! real dimensions of cohomology spaces.
//!
//! Integer matrices get a Smith normal form (for abelianizations), and 3×3
//! complex hermitian matrices get an exact signature via Descartes' rule of
//! signs on the characteristic polynomial, whose roots are all real.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::field::{forward_binop, FieldElement, Quaternion};

/// Dense row-major matrix over F.
#[derive(Clone, PartialEq, Eq)]
pub struct FMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<FieldElement>,
}

impl FMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        FMatrix { rows, cols, entries: vec![FieldElement::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = FMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = FieldElement::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<FieldElement>>) -> Self {
        let nr = rows.len();
        let nc = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == nc), "ragged rows");
        FMatrix { rows: nr, cols: nc, entries: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> FieldElement) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        FMatrix { rows, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(FieldElement::is_zero)
    }

    pub fn transpose(&self) -> FMatrix {
        FMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn scale(&self, f: &FieldElement) -> FMatrix {
        FMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * f).collect(),
        }
    }

    pub fn set_column(&mut self, j: usize, col: &[FieldElement]) {
        assert_eq!(col.len(), self.rows);
        for (i, v) in col.iter().enumerate() {
            self[(i, j)] = v.clone();
        }
    }

    pub fn column(&self, j: usize) -> Vec<FieldElement> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    /// Copies `block` into this matrix with its upper-left corner at (r0, c0).
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &FMatrix) {
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols);
        for i in 0..block.rows {
            for j in 0..block.cols {
                self[(r0 + i, c0 + j)] = block[(i, j)].clone();
            }
        }
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(blocks: &[&FMatrix]) -> FMatrix {
        let cols = blocks.first().map_or(0, |b| b.cols);
        assert!(blocks.iter().all(|b| b.cols == cols));
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut out = FMatrix::zeros(rows, cols);
        let mut r = 0;
        for b in blocks {
            out.set_block(r, 0, b);
            r += b.rows;
        }
        out
    }

    pub fn mul_vec(&self, v: &[FieldElement]) -> Vec<FieldElement> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut s = FieldElement::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        s = &s + &(a * b);
                    }
                }
                s
            })
            .collect()
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    /// In-place Gauss–Jordan reduction restricted to the first `pivot_cols`
    /// columns; returns the pivot column indices (and thereby the rank).
    fn reduce(&mut self, pivot_cols: usize) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..pivot_cols {
            let Some(p) = (rank..self.rows).find(|&r| !self[(r, col)].is_zero()) else {
                continue;
            };
            self.swap_rows(rank, p);
            let inv = self[(rank, col)].inv().expect("pivot is nonzero");
            for c in col..self.cols {
                let v = &self[(rank, c)] * &inv;
                self[(rank, c)] = v;
            }
            for r in 0..self.rows {
                if r == rank || self[(r, col)].is_zero() {
                    continue;
                }
                let factor = self[(r, col)].clone();
                for c in col..self.cols {
                    let v = &self[(r, c)] - &(&factor * &self[(rank, c)]);
                    self[(r, c)] = v;
                }
            }
            pivots.push(col);
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        pivots
    }

    /// Rank over F (equivalently over R, since field extension preserves rank).
    pub fn rank(&self) -> usize {
        self.clone().reduce(self.cols).len()
    }

    /// Pivot columns of the reduced form; their count is the rank.
    pub(crate) fn pivot_columns(&self) -> Vec<usize> {
        self.clone().reduce(self.cols)
    }

    /// Basis of the right null space {v : M·v = 0}, in echelon order: one
    /// vector per free column, carrying 1 at that coordinate.
    pub fn kernel_basis(&self) -> Vec<Vec<FieldElement>> {
        let mut m = self.clone();
        let pivots = m.reduce(m.cols);
        let mut basis = Vec::new();
        let mut piv_iter = pivots.iter().copied().peekable();
        let mut free_cols = Vec::new();
        for c in 0..self.cols {
            if piv_iter.peek() == Some(&c) {
                piv_iter.next();
            } else {
                free_cols.push(c);
            }
        }
        for fc in free_cols {
            let mut v = vec![FieldElement::zero(); self.cols];
            v[fc] = FieldElement::one();
            for (prow, &pcol) in pivots.iter().enumerate() {
                v[pcol] = -&m[(prow, fc)];
            }
            basis.push(v);
        }
        basis
    }

    /// Some exact solution of M·x = b, or None when the system is inconsistent.
    pub fn solve(&self, b: &[FieldElement]) -> Option<Vec<FieldElement>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = FMatrix::zeros(self.rows, self.cols + 1);
        aug.set_block(0, 0, self);
        aug.set_column(self.cols, b);
        let pivots = aug.reduce(self.cols);
        for r in pivots.len()..self.rows {
            if !aug[(r, self.cols)].is_zero() {
                return None;
            }
        }
        let mut x = vec![FieldElement::zero(); self.cols];
        for (prow, &pcol) in pivots.iter().enumerate() {
            x[pcol] = aug[(prow, self.cols)].clone();
        }
        Some(x)
    }

    /// Exact inverse of a square matrix, or None when singular.
    pub fn inverse(&self) -> Option<FMatrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = FMatrix::zeros(n, 2 * n);
        aug.set_block(0, 0, self);
        aug.set_block(0, n, &FMatrix::identity(n));
        let pivots = aug.reduce(n);
        if pivots.len() < n {
            return None;
        }
        let mut out = FMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                out[(i, j)] = aug[(i, n + j)].clone();
            }
        }
        Some(out)
    }
}

impl Index<(usize, usize)> for FMatrix {
    type Output = FieldElement;
    fn index(&self, (i, j): (usize, usize)) -> &FieldElement {
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for FMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut FieldElement {
        &mut self.entries[i * self.cols + j]
    }
}

impl Add<&FMatrix> for &FMatrix {
    type Output = FMatrix;
    fn add(self, rhs: &FMatrix) -> FMatrix {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols);
        FMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub<&FMatrix> for &FMatrix {
    type Output = FMatrix;
    fn sub(self, rhs: &FMatrix) -> FMatrix {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols);
        FMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Mul<&FMatrix> for &FMatrix {
    type Output = FMatrix;
    fn mul(self, rhs: &FMatrix) -> FMatrix {
        assert_eq!(self.cols, rhs.rows);
        let mut out = FMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for t in 0..self.cols {
                let a = &self[(i, t)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(t, j)];
                    if b.is_zero() {
                        continue;
                    }
                    let v = &out[(i, j)] + &(a * b);
                    out[(i, j)] = v;
                }
            }
        }
        out
    }
}

impl Neg for &FMatrix {
    type Output = FMatrix;
    fn neg(self) -> FMatrix {
        FMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }
}

forward_binop!(Add, add for FMatrix);
forward_binop!(Sub, sub for FMatrix);
forward_binop!(Mul, mul for FMatrix);

impl fmt::Debug for FMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|e| e.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Dense row-major matrix over Z.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

/// Cokernel data of an integer matrix: Z^rows / im(M) ≅ ⊕ Z/dᵢ ⊕ Z^free_rank,
/// with the trivial factors dᵢ = 1 dropped and d₁ | d₂ | … .
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SmithNormalForm {
    pub invariant_factors: Vec<BigUint>,
    pub free_rank: usize,
}

impl SmithNormalForm {
    /// Short human description of the cokernel, e.g. "Z", "Z^2", "Z/3 + Z/3".
    pub fn describe(&self) -> String {
        let mut parts: Vec<String> =
            self.invariant_factors.iter().map(|d| format!("Z/{d}")).collect();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, entries: vec![BigInt::zero(); rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let nr = rows.len();
        let nc = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == nc), "ragged rows");
        IntMatrix { rows: nr, cols: nc, entries: rows.into_iter().flatten().collect() }
    }

    pub fn from_i64(rows: Vec<Vec<i64>>) -> Self {
        IntMatrix::from_rows(
            rows.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Invariant factors and free rank of the cokernel Z^rows / im(M),
    /// by unimodular row/column reduction to diagonal form with a
    /// divisibility chain.
    pub fn smith_normal_form(&self) -> SmithNormalForm {
        let mut m: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|i| self.entries[i * self.cols..(i + 1) * self.cols].to_vec())
            .collect();
        let rows = self.rows;
        let cols = self.cols;
        let mut diag: Vec<BigInt> = Vec::new();
        let bound = rows.min(cols);
        for t in 0..bound {
            // smallest nonzero |entry| in the remaining block becomes the pivot
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if m[i][j].is_zero() {
                        continue;
                    }
                    let better = match pivot {
                        Some((pi, pj)) => m[i][j].abs() < m[pi][pj].abs(),
                        None => true,
                    };
                    if better {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = pivot else { break };
            m.swap(t, pi);
            for row in m.iter_mut() {
                row.swap(t, pj);
            }
            'reduce: loop {
                // clear column t; a nonzero remainder becomes the smaller pivot
                for i in t + 1..rows {
                    if m[i][t].is_zero() {
                        continue;
                    }
                    let q = &m[i][t] / &m[t][t];
                    let (pivot_row, rest) = m.split_at_mut(t + 1);
                    let (pivot_row, target) = (&pivot_row[t], &mut rest[i - t - 1]);
                    for (a, b) in target[t..].iter_mut().zip(&pivot_row[t..]) {
                        *a -= &q * b;
                    }
                    if !m[i][t].is_zero() {
                        m.swap(t, i);
                        continue 'reduce;
                    }
                }
                // clear row t likewise
                for j in t + 1..cols {
                    if m[t][j].is_zero() {
                        continue;
                    }
                    let q = &m[t][j] / &m[t][t];
                    for row in m.iter_mut().skip(t) {
                        let v = &row[j] - &q * &row[t];
                        row[j] = v;
                    }
                    if !m[t][j].is_zero() {
                        for row in m.iter_mut() {
                            row.swap(t, j);
                        }
                        continue 'reduce;
                    }
                }
                // pivot must divide the rest of the block for d₁ | d₂ | …
                for i in t + 1..rows {
                    for j in t + 1..cols {
                        if (&m[i][j] % &m[t][t]).is_zero() {
                            continue;
                        }
                        let (top, rest) = m.split_at_mut(t + 1);
                        for (a, b) in top[t][t..].iter_mut().zip(&rest[i - t - 1][t..]) {
                            *a += b;
                        }
                        continue 'reduce;
                    }
                }
                break;
            }
            if m[t][t].is_negative() {
                m[t][t] = -m[t][t].clone();
            }
            diag.push(m[t][t].clone());
        }
        let nonzero = diag.iter().filter(|d| !d.is_zero()).count();
        SmithNormalForm {
            invariant_factors: diag
                .iter()
                .filter(|d| !d.is_zero() && !d.is_one())
                .map(|d| d.to_biguint().expect("positive"))
                .collect(),
            free_rank: rows - nonzero,
        }
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.entries[i * self.cols + j]
    }
}

/// 3×3 quaternion matrix; houses group elements of Sp(2,1), hermitian forms
/// and Lie-algebra elements.
#[derive(Clone, PartialEq, Eq)]
pub struct QuatMatrix {
    entries: [[Quaternion; 3]; 3],
}

impl QuatMatrix {
    pub fn new(entries: [[Quaternion; 3]; 3]) -> Self {
        QuatMatrix { entries }
    }

    pub fn zero() -> Self {
        let q = Quaternion::zero;
        QuatMatrix::new([
            [q(), q(), q()],
            [q(), q(), q()],
            [q(), q(), q()],
        ])
    }

    pub fn identity() -> Self {
        let mut m = QuatMatrix::zero();
        for i in 0..3 {
            m.entries[i][i] = Quaternion::one();
        }
        m
    }

    pub fn diagonal(d0: Quaternion, d1: Quaternion, d2: Quaternion) -> Self {
        let mut m = QuatMatrix::zero();
        m.entries[0][0] = d0;
        m.entries[1][1] = d1;
        m.entries[2][2] = d2;
        m
    }

    /// q·I.
    pub fn scalar(q: Quaternion) -> Self {
        QuatMatrix::diagonal(q.clone(), q.clone(), q)
    }

    pub fn get(&self, i: usize, j: usize) -> &Quaternion {
        &self.entries[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, q: Quaternion) {
        self.entries[i][j] = q;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(Quaternion::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        *self == QuatMatrix::identity()
    }

    pub fn is_complex(&self) -> bool {
        self.entries.iter().flatten().all(Quaternion::is_complex)
    }

    /// Conjugate transpose M* (quaternion conjugation entrywise).
    pub fn conj_transpose(&self) -> QuatMatrix {
        let mut out = QuatMatrix::zero();
        for i in 0..3 {
            for j in 0..3 {
                out.entries[i][j] = self.entries[j][i].conj();
            }
        }
        out
    }

    pub fn is_hermitian(&self) -> bool {
        self.conj_transpose() == *self
    }

    pub fn trace(&self) -> Quaternion {
        &(self.entries[0][0].clone() + self.entries[1][1].clone()) + &self.entries[2][2]
    }

    pub fn scale(&self, f: &FieldElement) -> QuatMatrix {
        let mut out = self.clone();
        for row in out.entries.iter_mut() {
            for e in row.iter_mut() {
                *e = e.scale(f);
            }
        }
        out
    }

    /// Determinant of a complex-entry matrix. The entries commute, so the
    /// classical cofactor formula applies; not defined for genuinely
    /// quaternionic matrices.
    pub fn complex_det(&self) -> Result<Quaternion> {
        if !self.is_complex() {
            return Err(Error::NotComplex);
        }
        let e = |i: usize, j: usize| &self.entries[i][j];
        let minor = |r: [usize; 2], c: [usize; 2]| {
            &(e(r[0], c[0]) * e(r[1], c[1])) - &(e(r[0], c[1]) * e(r[1], c[0]))
        };
        Ok(&(&(e(0, 0) * &minor([1, 2], [1, 2])) - &(e(0, 1) * &minor([1, 2], [0, 2])))
            + &(e(0, 2) * &minor([1, 2], [0, 1])))
    }

    /// Exact inverse of a complex-entry matrix via the adjugate.
    pub fn complex_inverse(&self) -> Result<QuatMatrix> {
        let det = self.complex_det()?;
        if det.is_zero() {
            return Err(Error::DegenerateForm);
        }
        let det_inv = det.inv()?;
        let e = |i: usize, j: usize| &self.entries[i][j];
        let mut out = QuatMatrix::zero();
        for i in 0..3 {
            for j in 0..3 {
                let r: Vec<usize> = (0..3).filter(|&t| t != j).collect();
                let c: Vec<usize> = (0..3).filter(|&t| t != i).collect();
                let minor = &(e(r[0], c[0]) * e(r[1], c[1])) - &(e(r[0], c[1]) * e(r[1], c[0]));
                let cof = if (i + j) % 2 == 0 { minor } else { -minor };
                out.entries[i][j] = &cof * &det_inv;
            }
        }
        Ok(out)
    }

    /// Signature (p, q) of a nondegenerate complex hermitian matrix: counts
    /// of positive and negative eigenvalues, via Descartes' rule of signs on
    /// the characteristic polynomial (exact, since all roots are real).
    pub fn hermitian_signature(&self) -> Result<(usize, usize)> {
        if !self.is_complex() {
            return Err(Error::NotComplex);
        }
        if !self.is_hermitian() {
            return Err(Error::NotHermitian);
        }
        let real_of = |q: Quaternion| -> FieldElement {
            debug_assert!(q.is_real(), "hermitian invariants are real");
            q.w
        };
        let e = |i: usize, j: usize| &self.entries[i][j];
        let minor = |a: usize, b: usize| &(e(a, a) * e(b, b)) - &(e(a, b) * e(b, a));
        let tr = real_of(self.trace());
        let c1 = real_of(&(minor(0, 1) + minor(0, 2)) + &minor(1, 2));
        let det = real_of(self.complex_det()?);
        if det.is_zero() {
            return Err(Error::DegenerateForm);
        }
        // char poly t³ − tr·t² + c1·t − det; all roots real
        let coeffs = [FieldElement::one(), -&tr, c1, -&det];
        let variations = |signs: &[i8]| -> usize {
            let nz: Vec<i8> = signs.iter().copied().filter(|&s| s != 0).collect();
            nz.windows(2).filter(|w| w[0] != w[1]).count()
        };
        let signs: Vec<i8> = coeffs.iter().map(FieldElement::signum).collect();
        let alt: Vec<i8> =
            signs.iter().enumerate().map(|(i, &s)| if i % 2 == 0 { s } else { -s }).collect();
        let p = variations(&signs);
        let q = variations(&alt);
        debug_assert_eq!(p + q, 3);
        Ok((p, q))
    }
}

impl Add<&QuatMatrix> for &QuatMatrix {
    type Output = QuatMatrix;
    fn add(self, rhs: &QuatMatrix) -> QuatMatrix {
        let mut out = self.clone();
        for i in 0..3 {
            for j in 0..3 {
                out.entries[i][j] = &out.entries[i][j] + &rhs.entries[i][j];
            }
        }
        out
    }
}

impl Sub<&QuatMatrix> for &QuatMatrix {
    type Output = QuatMatrix;
    fn sub(self, rhs: &QuatMatrix) -> QuatMatrix {
        let mut out = self.clone();
        for i in 0..3 {
            for j in 0..3 {
                out.entries[i][j] = &out.entries[i][j] - &rhs.entries[i][j];
            }
        }
        out
    }
}

impl Mul<&QuatMatrix> for &QuatMatrix {
    type Output = QuatMatrix;
    fn mul(self, rhs: &QuatMatrix) -> QuatMatrix {
        let mut out = QuatMatrix::zero();
        for i in 0..3 {
            for j in 0..3 {
                let mut s = Quaternion::zero();
                for t in 0..3 {
                    let (a, b) = (&self.entries[i][t], &rhs.entries[t][j]);
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    s = &s + &(a * b);
                }
                out.entries[i][j] = s;
            }
        }
        out
    }
}

impl Neg for &QuatMatrix {
    type Output = QuatMatrix;
    fn neg(self) -> QuatMatrix {
        let mut out = self.clone();
        for row in out.entries.iter_mut() {
            for e in row.iter_mut() {
                *e = -&*e;
            }
        }
        out
    }
}

forward_binop!(Add, add for QuatMatrix);
forward_binop!(Sub, sub for QuatMatrix);
forward_binop!(Mul, mul for QuatMatrix);

impl fmt::Debug for QuatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "QuatMatrix [")?;
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|q| q.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fe(n: i64) -> FieldElement {
        FieldElement::from_int(n)
    }

    #[test]
    fn rank_basics() {
        assert_eq!(FMatrix::identity(3).rank(), 3);
        assert_eq!(FMatrix::zeros(5, 7).rank(), 0);
        let m = FMatrix::from_rows(vec![vec![fe(1), fe(1)], vec![fe(1), fe(1)]]);
        assert_eq!(m.rank(), 1);
        assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn kernel_basics() {
        assert!(FMatrix::identity(3).kernel_basis().is_empty());
        let m = FMatrix::from_rows(vec![vec![fe(1), fe(1)], vec![fe(1), fe(1)]]);
        let ker = m.kernel_basis();
        assert_eq!(ker.len(), 1);
        assert_eq!(ker[0], vec![fe(-1), fe(1)]);
        assert!(m.mul_vec(&ker[0]).iter().all(FieldElement::is_zero));
        assert_eq!(m.rank() + ker.len(), m.cols());
    }

    #[test]
    fn solve_basics() {
        let id = FMatrix::identity(2);
        let b = vec![fe(1), FieldElement::sqrt3()];
        assert_eq!(id.solve(&b).unwrap(), b);
        let zero = FMatrix::zeros(2, 2);
        assert!(zero.solve(&[fe(1), fe(0)]).is_none());
        assert!(zero.solve(&[fe(0), fe(0)]).is_some());
    }

    #[test]
    fn inverse_roundtrip() {
        let m = FMatrix::from_rows(vec![
            vec![fe(2), fe(1), fe(0)],
            vec![fe(0), FieldElement::sqrt3(), fe(1)],
            vec![fe(1), fe(0), fe(1)],
        ]);
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, FMatrix::identity(3));
        assert!(FMatrix::zeros(2, 2).inverse().is_none());
    }

    #[test]
    fn snf_examples() {
        // diag(2,3) ~ diag(1,6)
        let snf = IntMatrix::from_i64(vec![vec![2, 0], vec![0, 3]]).smith_normal_form();
        assert_eq!(snf.invariant_factors, vec![BigUint::from(6u32)]);
        assert_eq!(snf.free_rank, 0);

        let snf = IntMatrix::zeros(2, 2).smith_normal_form();
        assert!(snf.invariant_factors.is_empty());
        assert_eq!(snf.free_rank, 2);
        assert_eq!(snf.describe(), "Z^2");

        // figure-eight relator column
        let snf = IntMatrix::from_i64(vec![vec![-1], vec![1]]).smith_normal_form();
        assert!(snf.invariant_factors.is_empty());
        assert_eq!(snf.free_rank, 1);
        assert_eq!(snf.describe(), "Z");

        let snf = IntMatrix::from_i64(vec![vec![3, 0], vec![0, 3]]).smith_normal_form();
        assert_eq!(snf.invariant_factors, vec![BigUint::from(3u32), BigUint::from(3u32)]);
        assert_eq!(snf.free_rank, 0);
        assert_eq!(snf.describe(), "Z/3 + Z/3");
    }

    #[test]
    fn snf_nonsquare() {
        let snf = IntMatrix::from_i64(vec![vec![2, 4, 4]]).smith_normal_form();
        assert_eq!(snf.invariant_factors, vec![BigUint::from(2u32)]);
        assert_eq!(snf.free_rank, 0);
        let snf = IntMatrix::from_i64(vec![vec![2], vec![4], vec![4]]).smith_normal_form();
        assert_eq!(snf.invariant_factors, vec![BigUint::from(2u32)]);
        assert_eq!(snf.free_rank, 2);
    }

    #[test]
    fn signature_examples() {
        let id = QuatMatrix::identity();
        assert_eq!(id.hermitian_signature().unwrap(), (3, 0));

        let mut anti = QuatMatrix::zero();
        anti.set(0, 2, Quaternion::one());
        anti.set(1, 1, Quaternion::one());
        anti.set(2, 0, Quaternion::one());
        assert_eq!(anti.hermitian_signature().unwrap(), (2, 1));

        let lorentz = QuatMatrix::diagonal(
            Quaternion::one(),
            Quaternion::one(),
            -Quaternion::one(),
        );
        assert_eq!(lorentz.hermitian_signature().unwrap(), (2, 1));

        assert!(matches!(
            QuatMatrix::zero().hermitian_signature(),
            Err(Error::DegenerateForm)
        ));
        let mut nonherm = QuatMatrix::identity();
        nonherm.set(0, 1, Quaternion::i());
        assert!(matches!(nonherm.hermitian_signature(), Err(Error::NotHermitian)));
        let quat = QuatMatrix::scalar(Quaternion::j());
        assert!(matches!(quat.hermitian_signature(), Err(Error::NotComplex)));
    }

    #[test]
    fn complex_inverse_roundtrip() {
        let mut m = QuatMatrix::identity();
        m.set(0, 1, Quaternion::complex(FieldElement::one(), FieldElement::sqrt3()));
        m.set(1, 2, Quaternion::i());
        let inv = m.complex_inverse().unwrap();
        assert!((&m * &inv).is_identity());
        assert!(matches!(
            QuatMatrix::scalar(Quaternion::j()).complex_inverse(),
            Err(Error::NotComplex)
        ));
    }
}
