//! Hurwitz moves preserve the total monodromy up to the expected conjugation,
//! the Euler characteristic and the first homology.

use fibration::factorization::from_blocks;
use fibration::*;
use mcg_engine::{homology_action, SymplecticMatrix, TwistWord};
use proptest::prelude::*;
use surface_model::word::canonical;
use surface_model::Word;

fn words_of(f: &Factorization) -> Vec<Word> {
    f.monodromy().letters.iter().map(|(n, _)| canonical(f.arrangement().passages(n).unwrap())).collect()
}

#[test]
fn rotation_by_zero_is_the_identity() {
    let arr = load_dataset(1, 1, None).unwrap();
    let f = lemma52_factorization(1, 1, &arr).unwrap();
    assert_eq!(f.apply(&HurwitzMove::Rotate(0)).unwrap(), f);
    assert_eq!(f.apply(&HurwitzMove::Rotate(f.len())).unwrap(), f);
}

#[test]
fn rotation_splits_the_closed_word() {
    let (h, n) = (1, 2);
    let arr = load_dataset(h, n, None).unwrap();
    let f = enk_factorization(h, n, &arr).unwrap();
    let len = gurtas_length(h, n);
    let r = f.apply(&HurwitzMove::Rotate(len)).unwrap();
    let w = gurtas_word(h, n).unwrap();
    let phi = torus_knot_monodromy(h).unwrap();
    let expected = from_blocks(&arr, Base::Sphere, &[(Some(&phi), "k"), (None, ""), (None, "w"), (Some(&phi), "l")], &w)
        .unwrap();
    assert_eq!(words_of(&r), words_of(&expected));
    assert!(r.total_action().unwrap().is_identity());
}

#[test]
fn conjugation_carries_one_half_to_the_other() {
    for (h, n) in [(1, 1), (2, 2)] {
        let arr = load_dataset(h, n, None).unwrap();
        let w = gurtas_word(h, n).unwrap();
        let phi = torus_knot_monodromy(h).unwrap();
        let half = from_blocks(&arr, Base::Disk, &[(Some(&phi), "k"), (None, "")], &w).unwrap();
        let moved = half.apply(&HurwitzMove::Conjugate(phi.inverse())).unwrap();
        let target = lemma52_factorization(h, n, &arr).unwrap();
        assert_eq!(words_of(&moved), words_of(&target), "h={h} n={n}");
    }
}

#[test]
fn transposition_out_of_range() {
    let arr = load_dataset(1, 1, None).unwrap();
    let f = lemma52_factorization(1, 1, &arr).unwrap();
    assert!(matches!(f.apply(&HurwitzMove::Transpose(f.len() - 1)), Err(FibrationError::IndexOutOfRange { .. })));
}

#[test]
fn json_round_trip_is_deterministic() {
    let arr = load_dataset(1, 2, None).unwrap();
    let f = lemma52_factorization(1, 2, &arr).unwrap();
    let s = f.to_json();
    let g = Factorization::from_json(&s).unwrap();
    assert_eq!(g.to_json(), s);
    assert_eq!(g.monodromy(), f.monodromy());
    assert_eq!(g.base(), Base::Disk);
    assert!(Factorization::from_json("{}").is_err());
}

#[test]
fn sphere_factorizations_need_a_cycle_and_positive_letters() {
    let arr = load_dataset(1, 1, None).unwrap();
    assert!(Factorization::new(Base::Sphere, arr.clone(), TwistWord::identity()).is_err());
    let neg: TwistWord = "a1^-1".parse().unwrap();
    assert!(Factorization::new(Base::Disk, arr.clone(), neg).is_err());
    let twice: TwistWord = "a1^+1 a1^+1".parse().unwrap();
    assert!(Factorization::new(Base::Disk, arr, twice).is_err());
}

fn expected_total(f: &Factorization, mv: &HurwitzMove) -> SymplecticMatrix {
    let m = f.total_action().unwrap();
    match mv {
        HurwitzMove::Rotate(k) => {
            let k = k % f.len();
            let head = TwistWord::new(f.monodromy().letters[..k].to_vec());
            let p = homology_action(f.arrangement(), &head).unwrap();
            &(&p.symplectic_inverse() * &m) * &p
        }
        HurwitzMove::Transpose(_) => m,
        HurwitzMove::Conjugate(phi) => {
            let p = homology_action(f.arrangement(), phi).unwrap();
            &(&p * &m) * &p.symplectic_inverse()
        }
    }
}

fn a_move() -> impl Strategy<Value = (u8, usize, Vec<(bool, bool)>)> {
    (0u8..3, 0usize..64, proptest::collection::vec((any::<bool>(), any::<bool>()), 1..3))
}

fn decode(f: &Factorization, (kind, k, phi): &(u8, usize, Vec<(bool, bool)>)) -> HurwitzMove {
    match kind {
        0 => HurwitzMove::Rotate(k % f.len()),
        1 => HurwitzMove::Transpose(k % (f.len() - 1)),
        _ => HurwitzMove::Conjugate(TwistWord::new(
            phi.iter()
                .map(|(which, sign)| (if *which { "a1" } else { "a2" }.to_string(), if *sign { 1 } else { -1 }))
                .collect(),
        )),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn moves_preserve_invariants(moves in proptest::collection::vec(a_move(), 1..4), sphere: bool) {
        let arr = load_dataset(1, 1, None).unwrap();
        let mut f = if sphere {
            enk_factorization(1, 1, &arr).unwrap()
        } else {
            lemma52_factorization(1, 1, &arr).unwrap()
        };
        let inv = f.invariants().unwrap();
        for mv in &moves {
            let mv = decode(&f, mv);
            let expected = expected_total(&f, &mv);
            let g = f.apply(&mv).unwrap();
            prop_assert_eq!(g.len(), f.len());
            prop_assert_eq!(g.total_action().unwrap(), expected);
            prop_assert_eq!(&g.invariants().unwrap(), &inv);
            f = g;
        }
        if sphere {
            prop_assert!(f.total_action().unwrap().is_identity());
        }
    }
}
