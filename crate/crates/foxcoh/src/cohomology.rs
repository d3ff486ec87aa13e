//! Assembly of the coboundary and cocycle matrices and the dimension counts
//! dim H⁰, dim Z¹, dim B¹, dim H¹ for a presentation and representation.
//!
//! For generators x₁,…,x_n and relators R₁,…,R_m acting on a module of
//! dimension d through Ad∘ρ:
//!
//! * the coboundary matrix is the (n·d)×d stack of the blocks Ad(ρ(xᵢ)) − I,
//!   whose column space is B¹ and whose kernel is H⁰;
//! * the cocycle matrix is the (m·d)×(n·d) block matrix with block (j, i)
//!   equal to the image of the Fox derivative ∂ᵢR_j under Ad∘ρ, whose kernel
//!   is Z¹.
//!
//! dim H¹ = dim Z¹ − dim B¹ is the Zariski tangent dimension the reports
//! quote; this module never claims a variety dimension. Everything is exact:
//! the ranks are ranks over F, which equal the corresponding real ranks.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactla::{FMatrix, SmithNormalForm};
use crate::lie::{adjoint_matrix, evaluate_ad, lie_basis, Flavor, LieBasis, Representation};
use crate::words::{fox_derivative, Presentation};

/// dim H¹ restricted to the u(2,1) and m blocks of sp(2,1).
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct SplitDims {
    pub u21: usize,
    pub m: usize,
}

/// Full result of the H¹ pipeline for one flavor.
#[derive(Clone, Debug)]
pub struct CohomologyReport {
    pub flavor: Flavor,
    /// d: dimension of the coefficient module.
    pub basis_dim: usize,
    /// n: number of generators.
    pub generator_count: usize,
    /// m: number of relators.
    pub relator_count: usize,
    pub h0: usize,
    pub z1: usize,
    pub b1: usize,
    pub h1: usize,
    /// Present only for sp21 with all generator images complex.
    pub split: Option<SplitDims>,
    /// dim ker(Ad(ρ(xᵢ)) − I) per generator, in generator order.
    pub centralizer_dims: Vec<usize>,
    pub abelianization: SmithNormalForm,
    pub notes: Vec<String>,
}

fn check_generators(rep: &Representation, pres: &Presentation) -> Result<()> {
    if rep.generators() != pres.generators() {
        return Err(Error::GeneratorMismatch);
    }
    Ok(())
}

/// Verifies every relator maps to the identity matrix; the Fox-calculus
/// formulas presuppose it, so failure is a hard error.
pub fn verify_relators(rep: &Representation, pres: &Presentation) -> Result<()> {
    check_generators(rep, pres)?;
    for (index, r) in pres.relators().iter().enumerate() {
        if !rep.evaluate_word(r)?.is_identity() {
            return Err(Error::NotARepresentation { index });
        }
    }
    Ok(())
}

/// The (n·d)×d stack of Ad(ρ(xᵢ)) − I. Its column space is B¹.
pub fn coboundary_matrix(rep: &Representation, basis: &LieBasis) -> Result<FMatrix> {
    let d = basis.dim();
    let id = FMatrix::identity(d);
    let mut blocks = Vec::with_capacity(rep.generator_count());
    for img in rep.images() {
        blocks.push(&adjoint_matrix(img, basis)? - &id);
    }
    let refs: Vec<&FMatrix> = blocks.iter().collect();
    Ok(FMatrix::vstack(&refs))
}

/// The (m·d)×(n·d) cocycle matrix with block (j, i) = Ad ρ(∂ᵢR_j). Its
/// kernel is Z¹. Relators are verified to map to the identity first.
pub fn cocycle_matrix(
    rep: &Representation,
    basis: &LieBasis,
    pres: &Presentation,
) -> Result<FMatrix> {
    verify_relators(rep, pres)?;
    let d = basis.dim();
    let n = pres.generator_count();
    let m = pres.relators().len();
    let mut out = FMatrix::zeros(m * d, n * d);
    for (j, relator) in pres.relators().iter().enumerate() {
        for i in 0..n {
            let block = evaluate_ad(&fox_derivative(i, relator), rep, basis)?;
            out.set_block(j * d, i * d, &block);
        }
    }
    Ok(out)
}

/// dim H⁰: the dimension of the common kernel of the Ad(ρ(xᵢ)) − I.
pub fn h0_dimension(rep: &Representation, basis: &LieBasis) -> Result<usize> {
    let cob = coboundary_matrix(rep, basis)?;
    Ok(basis.dim() - cob.rank())
}

struct CoreDims {
    h0: usize,
    z1: usize,
    b1: usize,
    h1: usize,
    centralizer_dims: Vec<usize>,
}

fn core_dims(rep: &Representation, basis: &LieBasis, pres: &Presentation) -> Result<CoreDims> {
    let d = basis.dim();
    let n = pres.generator_count();
    let cob = coboundary_matrix(rep, basis)?;
    let rank_cob = cob.rank();
    let h0 = cob.kernel_basis().len();
    // dim B¹ both as the coboundary rank and as d − dim H⁰
    assert_eq!(rank_cob, d - h0, "rank/kernel cross-check failed");
    let b1 = rank_cob;
    let coc = cocycle_matrix(rep, basis, pres)?;
    let z1 = n * d - coc.rank();
    assert!(z1 >= b1, "B¹ must embed in Z¹");
    let mut centralizer_dims = Vec::with_capacity(n);
    for img in rep.images() {
        let ad = adjoint_matrix(img, basis)?;
        let delta = &ad - &FMatrix::identity(d);
        centralizer_dims.push(d - delta.rank());
    }
    Ok(CoreDims { h0, z1, b1, h1: z1 - b1, centralizer_dims })
}

/// Runs the full pipeline for one flavor and assembles the report. On sp21
/// with all generator images complex, the adjoint action is block-diagonal
/// for the u(2,1) ⊕ m split, so the u21 and m sub-pipelines are run as well
/// and their H¹ dimensions recorded.
pub fn h1_dimension(
    rep: &Representation,
    basis: &LieBasis,
    pres: &Presentation,
) -> Result<CohomologyReport> {
    check_generators(rep, pres)?;
    let dims = core_dims(rep, basis, pres)?;
    let mut notes = vec![
        "dim H1 is the Zariski tangent dimension of the character variety at the \
         representation class; no smoothness is asserted"
            .to_string(),
    ];
    let split = if basis.flavor() == Flavor::Sp21
        && basis.split_index().is_some()
        && rep.all_complex()
    {
        let u_basis = lie_basis(basis.form(), Flavor::U21);
        let m_basis = lie_basis(basis.form(), Flavor::M);
        let u = core_dims(rep, &u_basis, pres)?;
        let m = core_dims(rep, &m_basis, pres)?;
        assert_eq!(u.h1 + m.h1, dims.h1, "split must refine dim H1");
        notes.push(format!(
            "sp21 splits as u21 + m: {} = {} + {}",
            dims.h1, u.h1, m.h1
        ));
        Some(SplitDims { u21: u.h1, m: m.h1 })
    } else {
        None
    };
    Ok(CohomologyReport {
        flavor: basis.flavor(),
        basis_dim: basis.dim(),
        generator_count: pres.generator_count(),
        relator_count: pres.relators().len(),
        h0: dims.h0,
        z1: dims.z1,
        b1: dims.b1,
        h1: dims.h1,
        split,
        centralizer_dims: dims.centralizer_dims,
        abelianization: pres.abelianization_matrix().smith_normal_form(),
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::QuatMatrix;
    use crate::lie::HermitianForm;

    fn trivial_rep(form: HermitianForm) -> Representation {
        Representation::new(
            form,
            vec!['a', 'b'],
            vec![QuatMatrix::identity(), QuatMatrix::identity()],
        )
        .unwrap()
    }

    #[test]
    fn trivial_representation_has_zero_coboundary() {
        let form = HermitianForm::antidiagonal();
        let basis = lie_basis(&form, Flavor::Sp21);
        let rep = trivial_rep(form);
        let cob = coboundary_matrix(&rep, &basis).unwrap();
        assert_eq!((cob.rows(), cob.cols()), (42, 21));
        assert!(cob.is_zero());
        assert_eq!(h0_dimension(&rep, &basis).unwrap(), 21);
    }

    #[test]
    fn empty_relator_gives_zero_block_row() {
        let form = HermitianForm::antidiagonal();
        let basis = lie_basis(&form, Flavor::Su21);
        let rep = trivial_rep(form);
        let pres = Presentation::parse(&['a', 'b'], &[""]).unwrap();
        let coc = cocycle_matrix(&rep, &basis, &pres).unwrap();
        assert_eq!((coc.rows(), coc.cols()), (8, 16));
        assert!(coc.is_zero());
    }

    #[test]
    fn non_representation_is_a_hard_error() {
        use crate::field::Quaternion;
        // g = antidiag(-1, 1, -1) preserves the antidiagonal form and is an
        // involution, so relator "a" fails while "aa" holds
        let mut g = QuatMatrix::zero();
        g.set(0, 2, -Quaternion::one());
        g.set(1, 1, Quaternion::one());
        g.set(2, 0, -Quaternion::one());
        let form = HermitianForm::antidiagonal();
        assert!(form.contains(&g));
        let basis = lie_basis(&form, Flavor::Su21);
        let rep =
            Representation::new(form, vec!['a', 'b'], vec![g, QuatMatrix::identity()]).unwrap();
        let pres = Presentation::parse(&['a', 'b'], &["a"]).unwrap();
        let err = cocycle_matrix(&rep, &basis, &pres).unwrap_err();
        assert!(matches!(err, Error::NotARepresentation { index: 0 }));
        let pres_sq = Presentation::parse(&['a', 'b'], &["aa"]).unwrap();
        assert!(cocycle_matrix(&rep, &basis, &pres_sq).is_ok());
    }

    #[test]
    fn generator_mismatch_is_rejected() {
        let form = HermitianForm::antidiagonal();
        let basis = lie_basis(&form, Flavor::Su21);
        let rep = trivial_rep(form);
        let pres = Presentation::parse(&['x', 'y'], &[]).unwrap();
        assert!(matches!(
            h1_dimension(&rep, &basis, &pres),
            Err(Error::GeneratorMismatch)
        ));
    }
}
