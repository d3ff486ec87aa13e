//! Randomized exact property tests for the spec-level invariants of the
//! arithmetic, linear algebra, word and Lie layers.

mod common;

use common::*;
use foxcoh::{
    adjoint_matrix, h1_dimension, lie_basis, parse_entry, FMatrix, FieldElement, Flavor,
    FreeWord, IntMatrix, Letter, QuatMatrix, Quaternion, Rational,
};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

// ---------------------------------------------------------------------------
// field: exact arithmetic invariants
// ---------------------------------------------------------------------------

fn rational_strategy() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=12)
        .prop_map(|(p, q)| Rational::new(BigInt::from(p), BigInt::from(q)))
}

fn field_strategy() -> impl Strategy<Value = FieldElement> {
    (rational_strategy(), rational_strategy(), rational_strategy(), rational_strategy())
        .prop_map(|(a, b, c, d)| FieldElement::new(a, b, c, d))
}

fn quaternion_strategy() -> impl Strategy<Value = Quaternion> {
    (field_strategy(), field_strategy(), field_strategy(), field_strategy())
        .prop_map(|(w, x, y, z)| Quaternion::new(w, x, y, z))
}

proptest! {
    #[test]
    fn field_mul_commutes(a in field_strategy(), b in field_strategy()) {
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn field_mul_associates(a in field_strategy(), b in field_strategy(), c in field_strategy()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn field_inverse_roundtrip(a in field_strategy()) {
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv().unwrap(), FieldElement::one());
        }
    }

    #[test]
    fn field_sign_is_multiplicative(a in field_strategy(), b in field_strategy()) {
        prop_assert_eq!((&a * &b).signum(), a.signum() * b.signum());
        prop_assert_eq!(a.signum() == 0, a.is_zero());
    }

    #[test]
    fn quaternion_conj_antihomomorphism(p in quaternion_strategy(), q in quaternion_strategy()) {
        prop_assert_eq!((&p * &q).conj(), &q.conj() * &p.conj());
        prop_assert_eq!((&p * &q).norm_sq(), &p.norm_sq() * &q.norm_sq());
    }

    #[test]
    fn quaternion_norm_nonnegative(q in quaternion_strategy()) {
        prop_assert!(q.norm_sq().signum() >= 0);
        prop_assert_eq!(q.norm_sq().is_zero(), q.is_zero());
    }

    #[test]
    fn canonical_print_parse_roundtrip(q in quaternion_strategy()) {
        let printed = q.to_string();
        let reparsed = parse_entry(&printed).unwrap();
        prop_assert_eq!(&reparsed, &q);
        // printing is idempotent on canonical strings
        prop_assert_eq!(reparsed.to_string(), printed);
    }
}

// ---------------------------------------------------------------------------
// words: parse/print and free reduction
// ---------------------------------------------------------------------------

fn letters_strategy() -> impl Strategy<Value = Vec<(usize, bool)>> {
    prop::collection::vec((0usize..3, prop::bool::ANY), 0..64)
}

proptest! {
    #[test]
    fn word_parse_print_roundtrip(letters in letters_strategy()) {
        let gens = ['a', 'b', 'c'];
        let w = FreeWord::from_letters(letters.into_iter().map(|(g, inv)| Letter::new(g, inv)));
        let printed = w.display(&gens);
        let reparsed = FreeWord::parse(&printed, &gens).unwrap();
        prop_assert_eq!(&reparsed, &w);
        prop_assert_eq!(reparsed.display(&gens), printed);
    }

    #[test]
    fn free_reduction_is_confluent(letters in letters_strategy(), seed in any::<u64>()) {
        // inserting a cancelling pair anywhere never changes the reduced word
        let base: Vec<Letter> =
            letters.into_iter().map(|(g, inv)| Letter::new(g, inv)).collect();
        let w = FreeWord::from_letters(base.iter().copied());
        let mut rng = ChaCha20Rng::seed_from_u64(seed);
        let mut padded = base;
        for _ in 0..4 {
            let pos = rng.gen_range(0..=padded.len());
            let l = Letter::new(rng.gen_range(0..3), rng.gen_bool(0.5));
            padded.insert(pos, l.inverted());
            padded.insert(pos, l);
        }
        prop_assert_eq!(FreeWord::from_letters(padded), w);
    }

    #[test]
    fn inverse_cancels(letters in letters_strategy()) {
        let w = FreeWord::from_letters(letters.into_iter().map(|(g, inv)| Letter::new(g, inv)));
        prop_assert!((&w * &w.inverse()).is_identity());
        prop_assert!((&w.inverse() * &w).is_identity());
    }
}

// ---------------------------------------------------------------------------
// exactla: rank, kernel, Smith normal form, signature
// ---------------------------------------------------------------------------

fn random_field_element(rng: &mut ChaCha20Rng) -> FieldElement {
    if rng.gen_bool(0.3) {
        return FieldElement::zero();
    }
    let mut coords = [0i64; 4];
    for c in coords.iter_mut() {
        *c = rng.gen_range(-4..=4);
    }
    FieldElement::new(
        Rational::from_integer(BigInt::from(coords[0])),
        Rational::from_integer(BigInt::from(coords[1])),
        Rational::from_integer(BigInt::from(coords[2])),
        Rational::from_integer(BigInt::from(coords[3])),
    )
}

fn random_fmatrix(rng: &mut ChaCha20Rng, rows: usize, cols: usize) -> FMatrix {
    FMatrix::from_fn(rows, cols, |_, _| random_field_element(rng))
}

#[test]
fn rank_equals_transpose_rank_and_kernel_is_exact() {
    let mut rng = ChaCha20Rng::seed_from_u64(0x4a11);
    for _ in 0..200 {
        let rows = rng.gen_range(1..7);
        let cols = rng.gen_range(1..7);
        let m = random_fmatrix(&mut rng, rows, cols);
        assert_eq!(m.rank(), m.transpose().rank());
        let kernel = m.kernel_basis();
        assert_eq!(m.rank() + kernel.len(), cols);
        for v in &kernel {
            assert!(m.mul_vec(v).iter().all(FieldElement::is_zero));
        }
    }
}

#[test]
fn rank_is_invariant_under_row_operations() {
    let mut rng = ChaCha20Rng::seed_from_u64(0x4a12);
    for _ in 0..200 {
        let rows = rng.gen_range(2..6);
        let cols = rng.gen_range(2..6);
        let m = random_fmatrix(&mut rng, rows, cols);
        let rank = m.rank();
        // multiply on the left by an invertible matrix with unit diagonal
        let mut u = FMatrix::identity(rows);
        for _ in 0..4 {
            let i = rng.gen_range(0..rows);
            let j = rng.gen_range(0..rows);
            if i != j {
                u[(i, j)] = random_field_element(&mut rng);
            }
        }
        assert_eq!((&u * &m).rank(), rank);
    }
}

fn random_int_matrix(rng: &mut ChaCha20Rng, rows: usize, cols: usize) -> IntMatrix {
    IntMatrix::from_rows(
        (0..rows)
            .map(|_| (0..cols).map(|_| BigInt::from(rng.gen_range(-6i64..=6))).collect())
            .collect(),
    )
}

#[test]
fn snf_factors_are_divisibility_ordered_and_unimodular_invariant() {
    let mut rng = ChaCha20Rng::seed_from_u64(0x5f00);
    for _ in 0..200 {
        let rows = rng.gen_range(1..5);
        let cols = rng.gen_range(1..5);
        let m = random_int_matrix(&mut rng, rows, cols);
        let snf = m.smith_normal_form();
        for pair in snf.invariant_factors.windows(2) {
            assert!((&pair[1] % &pair[0]) == 0u32.into(), "divisibility chain violated");
        }
        // apply a random sequence of unimodular row/column operations
        let mut t = m.clone();
        for _ in 0..6 {
            match rng.gen_range(0..4) {
                0 => {
                    // row_i += c * row_j
                    let i = rng.gen_range(0..rows);
                    let j = rng.gen_range(0..rows);
                    if i != j {
                        let c = BigInt::from(rng.gen_range(-3i64..=3));
                        for col in 0..cols {
                            let v = &t[(i, col)] + &c * &t[(j, col)];
                            t[(i, col)] = v;
                        }
                    }
                }
                1 => {
                    // col_i += c * col_j
                    let i = rng.gen_range(0..cols);
                    let j = rng.gen_range(0..cols);
                    if i != j {
                        let c = BigInt::from(rng.gen_range(-3i64..=3));
                        for row in 0..rows {
                            let v = &t[(row, i)] + &c * &t[(row, j)];
                            t[(row, i)] = v;
                        }
                    }
                }
                2 => {
                    // negate a row
                    let i = rng.gen_range(0..rows);
                    for col in 0..cols {
                        let v = -t[(i, col)].clone();
                        t[(i, col)] = v;
                    }
                }
                _ => {
                    // swap two columns
                    let i = rng.gen_range(0..cols);
                    let j = rng.gen_range(0..cols);
                    for row in 0..rows {
                        let (a, b) = (t[(row, i)].clone(), t[(row, j)].clone());
                        t[(row, i)] = b;
                        t[(row, j)] = a;
                    }
                }
            }
        }
        assert_eq!(t.smith_normal_form(), snf, "SNF changed under unimodular ops");
    }
}

fn random_complex_quaternion(rng: &mut ChaCha20Rng) -> Quaternion {
    Quaternion::complex(
        FieldElement::from_int(rng.gen_range(-3i64..=3)),
        FieldElement::from_int(rng.gen_range(-3i64..=3)),
    )
}

#[test]
fn hermitian_signature_is_congruence_invariant() {
    let mut rng = ChaCha20Rng::seed_from_u64(0x51c0);
    let forms = [
        foxcoh::HermitianForm::antidiagonal(),
        foxcoh::HermitianForm::diagonal_21(),
    ];
    let mut cases = 0;
    while cases < 200 {
        let j = forms[rng.gen_range(0..forms.len())].matrix().clone();
        let mut u = QuatMatrix::zero();
        for a in 0..3 {
            for b in 0..3 {
                u.set(a, b, random_complex_quaternion(&mut rng));
            }
        }
        let Ok(det) = u.complex_det() else { continue };
        if det.is_zero() {
            continue;
        }
        let congruent = &(&u.conj_transpose() * &j) * &u;
        assert_eq!(
            congruent.hermitian_signature().unwrap(),
            j.hermitian_signature().unwrap(),
            "signature must be a congruence invariant"
        );
        cases += 1;
    }
}

// ---------------------------------------------------------------------------
// lie: bracket equivariance and the block structure of Ad
// ---------------------------------------------------------------------------

#[test]
fn bracket_equivariance_under_adjoint() {
    let mut rng = ChaCha20Rng::seed_from_u64(0xb4ac);
    let fx = load_fixture("gamma8_rho0.json");
    for flavor in [Flavor::Su21, Flavor::U21] {
        let basis = basis_for(&fx, flavor);
        for _ in 0..25 {
            let w = random_word(&mut rng, 2, 4);
            let g = fx.representation.evaluate_word(&w).unwrap();
            let gi = fx.representation.form().group_inverse(&g);
            let ad = adjoint_matrix(&g, &basis).unwrap();
            let x = &basis.elements()[rng.gen_range(0..basis.dim())];
            let y = &basis.elements()[rng.gen_range(0..basis.dim())];
            let bracket = &(x * y) - &(y * x);
            // Ad(g)·coords([X,Y]) = coords([gXg⁻¹, gYg⁻¹])
            let lhs = ad.mul_vec(&basis.expand(&bracket).expect("bracket stays in the algebra"));
            let gx = &(&g * x) * &gi;
            let gy = &(&g * y) * &gi;
            let conj_bracket = &(&gx * &gy) - &(&gy * &gx);
            let rhs = basis.expand(&conj_bracket).expect("conjugated bracket in the algebra");
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn adjoint_is_block_diagonal_for_complex_elements() {
    let fx = load_fixture("gammaW_rhoW.json");
    let basis = basis_for(&fx, Flavor::Sp21);
    let split = basis.split_index().expect("sp21 has the split");
    assert_eq!(split, 9);
    for img in fx.representation.images() {
        assert!(img.is_complex());
        let ad = adjoint_matrix(img, &basis).unwrap();
        for i in 0..basis.dim() {
            for j in 0..basis.dim() {
                if (i < split) != (j < split) {
                    assert!(
                        ad[(i, j)].is_zero(),
                        "u(2,1) and m must not mix under a complex element"
                    );
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// cohomology: central split identity for all shipped fixtures
// ---------------------------------------------------------------------------

#[test]
fn central_split_identity_holds_for_all_fixtures() {
    for name in ["gamma8_rho0.json", "gammaW_rhoW.json", "z3z3_rhoW.json"] {
        let fx = load_fixture(name);
        let free_rank =
            fx.presentation.abelianization_matrix().smith_normal_form().free_rank;
        let u = h1_dimension(
            &fx.representation,
            &lie_basis(fx.representation.form(), Flavor::U21),
            &fx.presentation,
        )
        .unwrap();
        let su = h1_dimension(
            &fx.representation,
            &lie_basis(fx.representation.form(), Flavor::Su21),
            &fx.presentation,
        )
        .unwrap();
        assert_eq!(
            u.h1,
            su.h1 + free_rank,
            "u(2,1) = u(1) ⊕ su(2,1) with trivial central action ({name})"
        );
    }
}
