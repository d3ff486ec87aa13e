//! foxcoh — exact twisted group cohomology for finitely presented groups
//! with coefficients in sp(2,1), u(2,1), su(2,1) or the complement m, under
//! the adjoint action of a given representation.
//!
//! The pipeline: parse a presentation ⟨x₁,…,x_n | R₁,…,R_m⟩ and matrix images
//! ρ(xᵢ) with entries in the quaternion algebra over F = Q(√3, √5), verify
//! exactly that the images preserve a hermitian form of signature (2,1) and
//! kill the relators, take Fox derivatives ∂ᵢR_j, push them through Ad∘ρ, and
//! read off dim H⁰, dim Z¹, dim B¹ and dim H¹ from exact ranks over F.
//! dim H¹ is the Zariski tangent dimension of the character variety at the
//! class of ρ, which is what separates a rigid representation from a
//! deformable one.
//!
//! Every number is exact: scalars live in F (coordinates over the basis
//! {1, √3, √5, √15}), linear algebra is fraction-free-capable Gauss–Jordan
//! over F, and signs are decided by interval refinement. There is no floating
//! point anywhere.
//!
//! See the `book/` directory for a guided tour; its code snippets are
//! compiled and run as doc-tests.

pub mod cli;
pub mod cohomology;
pub mod error;
pub mod exactla;
pub mod field;
pub mod lie;
pub mod manifest;
pub mod words;

#[cfg(doctest)]
mod guide;

pub use cohomology::{
    coboundary_matrix, cocycle_matrix, h0_dimension, h1_dimension, verify_relators,
    CohomologyReport, SplitDims,
};
pub use error::{Error, Result};
pub use exactla::{FMatrix, IntMatrix, QuatMatrix, SmithNormalForm};
pub use field::{FieldElement, Quaternion, Rational};
pub use lie::{
    adjoint_matrix, centralizer_dimension, derive_invariant_form, evaluate_ad,
    evaluate_word_matrix, lie_basis, AdjointMatrix, Flavor, HermitianForm, LieBasis,
    Representation,
};
pub use manifest::{parse_entry, Manifest};
pub use words::{fox_derivative, FreeWord, GroupRingElement, Letter, Presentation};
