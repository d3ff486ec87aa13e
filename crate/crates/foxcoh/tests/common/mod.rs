//! Helpers shared by the integration test targets.
#![allow(dead_code)]

use std::path::PathBuf;

use foxcoh::{
    lie_basis, Flavor, FreeWord, HermitianForm, LieBasis, Manifest, Presentation, QuatMatrix,
    Quaternion, Rational, Representation,
};
use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::ChaCha20Rng;

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

pub struct Fixture {
    pub manifest: Manifest,
    pub presentation: Presentation,
    pub representation: Representation,
}

pub fn load_fixture(name: &str) -> Fixture {
    let manifest = Manifest::load(&fixture_path(name)).expect("fixture loads");
    let presentation = manifest.presentation().expect("presentation");
    let representation = manifest.representation().expect("representation");
    Fixture { manifest, presentation, representation }
}

pub fn basis_for(fixture: &Fixture, flavor: Flavor) -> LieBasis {
    lie_basis(fixture.representation.form(), flavor)
}

/// ω = (−1 + i√3)/2, a primitive cube root of unity.
pub fn omega() -> Quaternion {
    Quaternion::complex(
        foxcoh::FieldElement::ratio(-1, 2),
        foxcoh::FieldElement::sqrt3()
            .scale(&Rational::new(BigInt::from(1), BigInt::from(2))),
    )
}

/// diag(1, ω, ω), the normal form of an order-3 regular elliptic element.
pub fn order_three_diagonal() -> QuatMatrix {
    QuatMatrix::diagonal(Quaternion::one(), omega(), omega())
}

pub fn random_word(rng: &mut ChaCha20Rng, generators: usize, max_len: usize) -> FreeWord {
    let len = rng.gen_range(0..=max_len);
    FreeWord::from_letters((0..len).map(|_| {
        foxcoh::Letter::new(rng.gen_range(0..generators), rng.gen_bool(0.5))
    }))
}

pub fn diagonal_form() -> HermitianForm {
    HermitianForm::diagonal_21()
}
