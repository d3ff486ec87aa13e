//! Invariant hermitian forms, Lie-algebra bases for sp(2,1), u(2,1), su(2,1)
//! and the complement m, adjoint matrices, and evaluation of group-ring
//! elements through Ad∘ρ.
//!
//! A form J (complex hermitian, signature (2,1)) pins down the groups
//!
//! * Sp(2,1) = {g with quaternion entries : g*Jg = J},
//! * U(2,1)  = its complex-entry subgroup,
//!
//! and their Lie algebras {X : X*J + JX = 0}. Realified over F these have
//! dimensions 21 and 9; the j,k-part complement m (dimension 12) is an
//! invariant real module under complex-entry conjugation, so sp(2,1)
//! decomposes as u(2,1) ⊕ m and the sp21 basis produced here is ordered with
//! the u(2,1) block first.
//!
//! All bases arise as exact kernels of the defining linear systems over F in
//! a fixed coordinate order (entries row-major, then the quaternion
//! coordinates w, x, y, z), so every run of the pipeline is reproducible.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exactla::{FMatrix, QuatMatrix};
use crate::field::{FieldElement, Quaternion, Rational};
use crate::words::{FreeWord, GroupRingElement};

/// Lie-algebra flavor selecting which coefficient module the pipeline uses.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Flavor {
    Sp21,
    U21,
    Su21,
    M,
}

impl Flavor {
    pub const ALL: [Flavor; 4] = [Flavor::Sp21, Flavor::U21, Flavor::Su21, Flavor::M];

    pub fn name(self) -> &'static str {
        match self {
            Flavor::Sp21 => "sp21",
            Flavor::U21 => "u21",
            Flavor::Su21 => "su21",
            Flavor::M => "m",
        }
    }

    /// Real dimension of the module: 21, 9, 8, 12.
    pub fn dimension(self) -> usize {
        match self {
            Flavor::Sp21 => 21,
            Flavor::U21 => 9,
            Flavor::Su21 => 8,
            Flavor::M => 12,
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Flavor {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sp21" => Ok(Flavor::Sp21),
            "u21" => Ok(Flavor::U21),
            "su21" => Ok(Flavor::Su21),
            "m" => Ok(Flavor::M),
            other => Err(Error::Manifest(format!(
                "unknown flavor '{other}' (expected sp21, u21, su21 or m)"
            ))),
        }
    }
}

/// A complex hermitian form of signature (2,1), with its exact inverse.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HermitianForm {
    matrix: QuatMatrix,
    inverse: QuatMatrix,
}

impl HermitianForm {
    /// Validates J: complex entries, J* = J, signature (2,1).
    pub fn new(matrix: QuatMatrix) -> Result<Self> {
        if !matrix.is_complex() {
            return Err(Error::NotComplex);
        }
        if !matrix.is_hermitian() {
            return Err(Error::NotHermitian);
        }
        let (p, q) = matrix.hermitian_signature()?;
        if (p, q) != (2, 1) {
            return Err(Error::WrongSignature(p, q));
        }
        let inverse = matrix.complex_inverse()?;
        Ok(HermitianForm { matrix, inverse })
    }

    /// The antidiagonal form with 1s on the antidiagonal. Both shipped
    /// representations preserve this one.
    pub fn antidiagonal() -> Self {
        let mut m = QuatMatrix::zero();
        m.set(0, 2, Quaternion::one());
        m.set(1, 1, Quaternion::one());
        m.set(2, 0, Quaternion::one());
        HermitianForm::new(m).expect("antidiagonal form is valid")
    }

    /// diag(1, 1, −1).
    pub fn diagonal_21() -> Self {
        let m = QuatMatrix::diagonal(Quaternion::one(), Quaternion::one(), -Quaternion::one());
        HermitianForm::new(m).expect("diag(1,1,-1) is valid")
    }

    pub fn matrix(&self) -> &QuatMatrix {
        &self.matrix
    }

    pub fn inverse(&self) -> &QuatMatrix {
        &self.inverse
    }

    /// Membership test g*Jg = J.
    pub fn contains(&self, g: &QuatMatrix) -> bool {
        &(&g.conj_transpose() * &self.matrix) * g == self.matrix
    }

    /// Group inverse g⁻¹ = J⁻¹g*J, valid exactly when g*Jg = J. This avoids
    /// Gaussian elimination over the noncommutative quaternions.
    pub fn group_inverse(&self, g: &QuatMatrix) -> QuatMatrix {
        &(&self.inverse * &g.conj_transpose()) * &self.matrix
    }

    /// The same form scaled by a positive rational; the scaled form defines
    /// the same group and Lie algebras.
    pub fn rescaled(&self, factor: &Rational) -> Result<Self> {
        let f = FieldElement::from_rational(factor.clone());
        HermitianForm::new(self.matrix.scale(&f))
    }
}

/// A representation of a free group into Sp(2,1): one image matrix per
/// generator, each verified to preserve the form exactly.
#[derive(Clone, Debug)]
pub struct Representation {
    form: HermitianForm,
    generators: Vec<char>,
    images: Vec<QuatMatrix>,
    inverses: Vec<QuatMatrix>,
    zariski_dense: bool,
}

impl Representation {
    pub fn new(form: HermitianForm, generators: Vec<char>, images: Vec<QuatMatrix>) -> Result<Self> {
        if generators.len() != images.len() {
            return Err(Error::InvalidGenerators(
                "generator and image counts differ".to_string(),
            ));
        }
        for (g, img) in generators.iter().zip(&images) {
            if !form.contains(img) {
                return Err(Error::NotInGroup(format!("image of generator '{g}'")));
            }
        }
        let inverses = images.iter().map(|img| form.group_inverse(img)).collect();
        Ok(Representation { form, generators, images, inverses, zariski_dense: false })
    }

    /// Records the (uncertified) claim that the image is Zariski dense;
    /// metadata only, echoed in reports.
    pub fn with_zariski_hint(mut self, dense: bool) -> Self {
        self.zariski_dense = dense;
        self
    }

    pub fn zariski_dense_hint(&self) -> bool {
        self.zariski_dense
    }

    pub fn form(&self) -> &HermitianForm {
        &self.form
    }

    pub fn generators(&self) -> &[char] {
        &self.generators
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn image(&self, index: usize) -> &QuatMatrix {
        &self.images[index]
    }

    pub fn images(&self) -> &[QuatMatrix] {
        &self.images
    }

    /// True when every generator image has complex entries, i.e. the image
    /// lies in U(2,1).
    pub fn all_complex(&self) -> bool {
        self.images.iter().all(QuatMatrix::is_complex)
    }

    /// ρ(w): product of images and exact group inverses, left to right.
    pub fn evaluate_word(&self, w: &FreeWord) -> Result<QuatMatrix> {
        let mut out = QuatMatrix::identity();
        for l in w.letters() {
            if l.generator >= self.images.len() {
                return Err(Error::GeneratorMismatch);
            }
            let m = if l.inverse { &self.inverses[l.generator] } else { &self.images[l.generator] };
            out = &out * m;
        }
        Ok(out)
    }
}

/// Quaternion coordinates of a 3×3 matrix in the fixed realification order:
/// entries row-major, each contributing (w, x, y, z). Length 36.
fn matrix_coords(m: &QuatMatrix) -> Vec<FieldElement> {
    let mut out = Vec::with_capacity(36);
    for i in 0..3 {
        for j in 0..3 {
            for c in m.get(i, j).coords() {
                out.push(c.clone());
            }
        }
    }
    out
}

/// Precomputed data for expanding matrices in a basis: a set of coordinate
/// rows forming an invertible square submatrix, plus its exact inverse.
#[derive(Clone, Debug)]
struct BasisExpander {
    coords: FMatrix, // 36 × d, column i = coordinates of basis element i
    pivot_rows: Vec<usize>,
    inverse: FMatrix, // d × d
}

impl BasisExpander {
    fn new(elements: &[QuatMatrix]) -> Self {
        let d = elements.len();
        let columns: Vec<Vec<FieldElement>> = elements.iter().map(matrix_coords).collect();
        let coords = FMatrix::from_fn(36, d, |r, c| columns[c][r].clone());
        let pivot_rows = coords.transpose().pivot_columns();
        assert_eq!(pivot_rows.len(), d, "basis elements must be independent");
        let sub = FMatrix::from_fn(d, d, |i, j| coords[(pivot_rows[i], j)].clone());
        let inverse = sub.inverse().expect("pivot submatrix is invertible");
        BasisExpander { coords, pivot_rows, inverse }
    }

    fn expand(&self, m: &QuatMatrix) -> Option<Vec<FieldElement>> {
        let v = matrix_coords(m);
        let picked: Vec<FieldElement> =
            self.pivot_rows.iter().map(|&r| v[r].clone()).collect();
        let c = self.inverse.mul_vec(&picked);
        if self.coords.mul_vec(&c) == v {
            Some(c)
        } else {
            None
        }
    }
}

/// Ordered exact basis of one of the four modules, tied to its form.
#[derive(Clone, Debug)]
pub struct LieBasis {
    flavor: Flavor,
    form: HermitianForm,
    elements: Vec<QuatMatrix>,
    split: Option<usize>,
    expander: BasisExpander,
}

impl LieBasis {
    fn assemble(
        form: HermitianForm,
        flavor: Flavor,
        elements: Vec<QuatMatrix>,
        split: Option<usize>,
    ) -> Self {
        assert_eq!(
            elements.len(),
            flavor.dimension(),
            "solution space dimension mismatch for {flavor}"
        );
        let expander = BasisExpander::new(&elements);
        LieBasis { flavor, form, elements, split, expander }
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn form(&self) -> &HermitianForm {
        &self.form
    }

    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[QuatMatrix] {
        &self.elements
    }

    /// For sp21: index where the u(2,1) block ends and the m block starts.
    pub fn split_index(&self) -> Option<usize> {
        self.split
    }

    /// Exact coordinates of `m` in this basis, or None when `m` is outside
    /// the span.
    pub fn expand(&self, m: &QuatMatrix) -> Option<Vec<FieldElement>> {
        self.expander.expand(m)
    }

    /// The same basis with elements reordered by `perm` (element i of the
    /// result is element perm[i] of self). The sp21 split survives only when
    /// the permutation preserves the u(2,1) block.
    pub fn permuted(&self, perm: &[usize]) -> LieBasis {
        let d = self.dim();
        assert_eq!(perm.len(), d);
        let mut seen = vec![false; d];
        for &p in perm {
            assert!(p < d && !seen[p], "not a permutation");
            seen[p] = true;
        }
        let elements: Vec<QuatMatrix> = perm.iter().map(|&p| self.elements[p].clone()).collect();
        let split = self.split.filter(|&s| {
            perm.iter().take(s).all(|&p| p < s) && perm.iter().skip(s).all(|&p| p >= s)
        });
        LieBasis::assemble(self.form.clone(), self.flavor, elements, split)
    }
}

fn unknown_units(flavor: Flavor) -> Vec<Quaternion> {
    match flavor {
        Flavor::U21 | Flavor::Su21 => vec![Quaternion::one(), Quaternion::i()],
        Flavor::M => vec![Quaternion::j(), Quaternion::k()],
        Flavor::Sp21 => {
            vec![Quaternion::one(), Quaternion::i(), Quaternion::j(), Quaternion::k()]
        }
    }
}

/// Kernel of X ↦ X*J + JX over the flavor's coordinate space (plus trace = 0
/// for su21), in the deterministic unknown order.
fn solve_flavor(form: &HermitianForm, flavor: Flavor) -> Vec<QuatMatrix> {
    let units = unknown_units(flavor);
    let mut unknowns: Vec<(usize, usize, Quaternion)> = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            for u in &units {
                unknowns.push((i, j, u.clone()));
            }
        }
    }
    let extra = if flavor == Flavor::Su21 { 4 } else { 0 };
    let mut eq = FMatrix::zeros(36 + extra, unknowns.len());
    for (c, (i, j, unit)) in unknowns.iter().enumerate() {
        let mut e = QuatMatrix::zero();
        e.set(*i, *j, unit.clone());
        let d = &(&e.conj_transpose() * form.matrix()) + &(form.matrix() * &e);
        for (r, v) in matrix_coords(&d).into_iter().enumerate() {
            eq[(r, c)] = v;
        }
        if extra > 0 {
            let tr = e.trace();
            for (r, v) in tr.coords().into_iter().enumerate() {
                eq[(36 + r, c)] = v.clone();
            }
        }
    }
    eq.kernel_basis()
        .into_iter()
        .map(|v| {
            let mut m = QuatMatrix::zero();
            for (c, (i, j, unit)) in unknowns.iter().enumerate() {
                if v[c].is_zero() {
                    continue;
                }
                let updated = m.get(*i, *j) + unit.scale(&v[c]);
                m.set(*i, *j, updated);
            }
            m
        })
        .collect()
}

/// Ordered basis of the requested module. For sp21 the basis is the u(2,1)
/// basis followed by the m basis, recording the split index.
pub fn lie_basis(form: &HermitianForm, flavor: Flavor) -> LieBasis {
    match flavor {
        Flavor::Sp21 => {
            let mut elements = solve_flavor(form, Flavor::U21);
            let split = elements.len();
            elements.extend(solve_flavor(form, Flavor::M));
            LieBasis::assemble(form.clone(), flavor, elements, Some(split))
        }
        _ => LieBasis::assemble(form.clone(), flavor, solve_flavor(form, flavor), None),
    }
}

/// Matrix of the adjoint action in a basis: column i holds the coordinates
/// of g·Xᵢ·g⁻¹.
pub type AdjointMatrix = FMatrix;

/// Exact d×d matrix of X ↦ gXg⁻¹ on the basis, with g⁻¹ = J⁻¹g*J.
pub fn adjoint_matrix(g: &QuatMatrix, basis: &LieBasis) -> Result<AdjointMatrix> {
    if !basis.form().contains(g) {
        return Err(Error::NotInGroup("adjoint argument".to_string()));
    }
    let gi = basis.form().group_inverse(g);
    let d = basis.dim();
    let mut out = FMatrix::zeros(d, d);
    for (idx, x) in basis.elements().iter().enumerate() {
        let conjugated = &(g * x) * &gi;
        let col = basis
            .expand(&conjugated)
            .ok_or(Error::SubspaceNotPreserved(basis.flavor().name()))?;
        out.set_column(idx, &col);
    }
    Ok(out)
}

/// Σ m_σ · Ad(ρ(σ)) as an exact d×d matrix, the image of a group-ring
/// element under the ring homomorphism extending Ad∘ρ.
pub fn evaluate_ad(
    u: &GroupRingElement,
    rep: &Representation,
    basis: &LieBasis,
) -> Result<FMatrix> {
    let d = basis.dim();
    let mut out = FMatrix::zeros(d, d);
    for (word, coeff) in u.terms() {
        let g = rep.evaluate_word(word)?;
        let ad = adjoint_matrix(&g, basis)?;
        let f = FieldElement::from_rational(Rational::from_integer(coeff.clone()));
        out = &out + &ad.scale(&f);
    }
    Ok(out)
}

/// ρ(w) as a matrix; thin wrapper kept for symmetry with the other
/// pipeline entry points.
pub fn evaluate_word_matrix(w: &FreeWord, rep: &Representation) -> Result<QuatMatrix> {
    rep.evaluate_word(w)
}

/// dim ker(Ad(g) − I): the dimension of the fixed space of Ad(g), which is
/// the Lie algebra of the centralizer of g.
pub fn centralizer_dimension(g: &QuatMatrix, basis: &LieBasis) -> Result<usize> {
    let ad = adjoint_matrix(g, basis)?;
    let delta = &ad - &FMatrix::identity(basis.dim());
    Ok(basis.dim() - delta.rank())
}

/// Solves {g*Jg = J for all g, J* = J} for a complex hermitian J. The
/// solution space must be one-dimensional; the result is scaled so the first
/// nonzero entry (row-major, real part first) has leading coefficient 1 and
/// the signature is (2,1) (negating if it comes out (1,2)).
pub fn derive_invariant_form(mats: &[QuatMatrix]) -> Result<HermitianForm> {
    if mats.iter().any(|m| !m.is_complex()) {
        return Err(Error::NotComplex);
    }
    let herm = hermitian_coordinate_matrices();
    let mut eq = FMatrix::zeros(36 * mats.len(), herm.len());
    for (c, h) in herm.iter().enumerate() {
        for (k, g) in mats.iter().enumerate() {
            let d = &(&(&g.conj_transpose() * h) * g) - h;
            for (r, v) in matrix_coords(&d).into_iter().enumerate() {
                eq[(36 * k + r, c)] = v;
            }
        }
    }
    let kernel = eq.kernel_basis();
    let vec = match kernel.len() {
        0 => return Err(Error::NoInvariantForm),
        1 => &kernel[0],
        n => return Err(Error::AmbiguousInvariantForm(n)),
    };
    let mut j = QuatMatrix::zero();
    for (c, h) in herm.iter().enumerate() {
        if vec[c].is_zero() {
            continue;
        }
        j = &j + &h.scale(&vec[c]);
    }
    let lead = leading_coefficient(&j).expect("kernel vector is nonzero");
    j = j.scale(&lead.inv()?);
    let (p, q) = j.hermitian_signature()?;
    if (p, q) == (1, 2) {
        j = -&j;
    }
    HermitianForm::new(j)
}

/// The 9 coordinate matrices of the real vector space of complex hermitian
/// 3×3 matrices: diagonal real units, then (real, imaginary) units for each
/// off-diagonal pair, row-major.
fn hermitian_coordinate_matrices() -> Vec<QuatMatrix> {
    let mut out = Vec::with_capacity(9);
    for d in 0..3 {
        let mut m = QuatMatrix::zero();
        m.set(d, d, Quaternion::one());
        out.push(m);
    }
    for (a, b) in [(0, 1), (0, 2), (1, 2)] {
        let mut re = QuatMatrix::zero();
        re.set(a, b, Quaternion::one());
        re.set(b, a, Quaternion::one());
        out.push(re);
        let mut im = QuatMatrix::zero();
        im.set(a, b, Quaternion::i());
        im.set(b, a, -Quaternion::i());
        out.push(im);
    }
    out
}

fn leading_coefficient(m: &QuatMatrix) -> Option<FieldElement> {
    for i in 0..3 {
        for j in 0..3 {
            let q = m.get(i, j);
            if q.is_zero() {
                continue;
            }
            return Some(if q.w.is_zero() { q.x.clone() } else { q.w.clone() });
        }
    }
    None
}
