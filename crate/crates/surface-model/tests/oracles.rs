//! Independent intersection oracles checked against the local-move engine.

use std::collections::{HashMap, HashSet};
use std::sync::{Mutex, OnceLock};

use itertools::Itertools;
use proptest::prelude::*;
use surface_model::arrangement::{intersection_number, is_simple, Strand};
use surface_model::word::{canonical, cyclic_reduce, inverse, rotate, to_generators};
use surface_model::{build_surface, Arrangement, Curve, SurfaceModel, Verdict};

/// Word-combinatorial count of essential crossings: every maximal common
/// stretch of the two cyclic words (or of one with the other reversed) is a
/// crossing when the two curves enter and leave it on opposite sides.
fn formula(s: &SurfaceModel, u: &[i32], v: &[i32]) -> usize {
    let nu = u.len();
    let mut count = 0;
    for (forward, w) in [(true, v.to_vec()), (false, inverse(v))] {
        let nw = w.len();
        for i in 0..nu {
            for j in 0..nw {
                let inu = -u[(i + nu - 1) % nu];
                let inw = -w[(j + nw - 1) % nw];
                if inu == inw {
                    continue;
                }
                let mut k = 0;
                let mut parallel = false;
                while u[(i + k) % nu] == w[(j + k) % nw] {
                    k += 1;
                    if k > nu + nw + 2 {
                        parallel = true;
                        break;
                    }
                }
                if parallel {
                    continue;
                }
                if k == 0 {
                    if !forward {
                        continue;
                    }
                    let (ou, ow) = (u[i], w[j]);
                    let distinct: HashSet<i32> = [inu, inw, ou, ow].into_iter().collect();
                    if distinct.len() < 4 {
                        continue;
                    }
                    if s.ccw_before(ou, inw, inu) != s.ccw_before(ou, ow, inu) {
                        count += 1;
                    }
                } else {
                    let start = u[i];
                    let end = -u[(i + k - 1) % nu];
                    let (ou, ow) = (u[(i + k) % nu], w[(j + k) % nw]);
                    if s.ccw_before(start, inu, inw) == s.ccw_before(end, ou, ow) {
                        count += 1;
                    }
                }
            }
        }
    }
    count
}

/// Minimum crossing count over every strand order in which both curves are
/// embedded.
fn brute_force(s: &SurfaceModel, u: &[i32], v: &[i32]) -> usize {
    let curves = vec![Curve::new("u", u.to_vec()), Curve::new("v", v.to_vec())];
    let mut per_band: Vec<Vec<Strand>> = vec![Vec::new(); s.handle_count()];
    for (ci, w) in [u, v].iter().enumerate() {
        for (i, &l) in w.iter().enumerate() {
            per_band[l.unsigned_abs() as usize - 1].push(Strand { curve: ci, index: i });
        }
    }
    let choices: Vec<Vec<Vec<Strand>>> = per_band
        .iter()
        .map(|b| b.iter().copied().permutations(b.len()).collect())
        .collect();
    let mut best = usize::MAX;
    for bands in choices.iter().map(|c| c.iter()).multi_cartesian_product() {
        let bands: Vec<Vec<Strand>> = bands.into_iter().cloned().collect();
        let a = Arrangement::with_orders(s.clone(), curves.clone(), bands).unwrap();
        if a.validate() == Verdict::Valid {
            best = best.min(a.total_crossings());
        }
    }
    best
}

/// Simple cyclically reduced words up to the given length, one per class.
fn simple_pool(s: &SurfaceModel, max_len: usize) -> Vec<Vec<i32>> {
    let n = s.handle_count() as i32;
    let letters: Vec<i32> = (1..=n).flat_map(|k| [k, -k]).collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for len in 1..=max_len {
        for w in (0..len).map(|_| letters.iter().copied()).multi_cartesian_product() {
            if cyclic_reduce(&w) != w {
                continue;
            }
            let c = canonical(&w);
            if seen.insert(c.clone()) && is_simple(s, &c) {
                out.push(c);
            }
        }
    }
    out
}

#[test]
fn engine_matches_word_formula_on_all_short_simple_pairs() {
    for g in [1, 2] {
        let s = build_surface(g).unwrap();
        let pool = simple_pool(&s, if g == 1 { 6 } else { 4 });
        for u in &pool {
            for v in &pool {
                assert_eq!(
                    intersection_number(&s, u, v),
                    formula(&s, u, v),
                    "g={g} u={u:?} v={v:?}"
                );
            }
        }
    }
}

#[test]
fn engine_matches_brute_force_on_small_pairs() {
    for g in [1, 2] {
        let s = build_surface(g).unwrap();
        let pool = simple_pool(&s, 3);
        for u in &pool {
            for v in &pool {
                assert_eq!(intersection_number(&s, u, v), brute_force(&s, u, v), "u={u:?} v={v:?}");
            }
        }
    }
}

#[test]
fn simplicity_agrees_with_brute_force() {
    let s = build_surface(2).unwrap();
    let letters: Vec<i32> = vec![1, -1, 2, -2, 3, -3, 4, -4];
    for len in 1..=4 {
        for w in (0..len).map(|_| letters.iter().copied()).multi_cartesian_product() {
            if cyclic_reduce(&w) != w {
                continue;
            }
            let curves = vec![Curve::new("w", w.clone())];
            let mut per_band: Vec<Vec<Strand>> = vec![Vec::new(); 4];
            for (i, &l) in w.iter().enumerate() {
                per_band[l.unsigned_abs() as usize - 1].push(Strand { curve: 0, index: i });
            }
            let choices: Vec<Vec<Vec<Strand>>> = per_band
                .iter()
                .map(|b| b.iter().copied().permutations(b.len()).collect())
                .collect();
            let some_embedded = choices.iter().map(|c| c.iter()).multi_cartesian_product().any(|b| {
                let bands = b.into_iter().cloned().collect();
                Arrangement::with_orders(s.clone(), curves.clone(), bands).unwrap().validate().is_valid()
            });
            assert_eq!(is_simple(&s, &w), some_embedded, "w={w:?}");
        }
    }
}

#[test]
fn torus_twisted_beta() {
    let s = build_surface(1).unwrap();
    let twisted = vec![1, 1, 2];
    assert_eq!(intersection_number(&s, &twisted, &[2]), 2);
    assert_eq!(intersection_number(&s, &twisted, &[1]), 1);
    assert_eq!(brute_force(&s, &twisted, &[2]), 2);
}

#[test]
fn boundary_word_is_a_commutator_product_up_to_rotation_and_inversion() {
    for g in 1..=4 {
        let s = build_surface(g).unwrap();
        let word = to_generators(&s.boundary_word());
        let target: Vec<i32> =
            (1..=g as i32).flat_map(|i| [2 * i - 1, 2 * i, -(2 * i - 1), -(2 * i)]).collect();
        let matches = [word.clone(), inverse(&word)]
            .iter()
            .any(|w| (0..w.len()).any(|r| rotate(w, r) == target));
        assert!(matches, "g={g}");
    }
}

type PoolCache = HashMap<(i64, usize), Vec<Vec<i32>>>;

fn pool_strategy(g: i64, max_len: usize) -> (SurfaceModel, Vec<Vec<i32>>) {
    static POOLS: OnceLock<Mutex<PoolCache>> = OnceLock::new();
    let s = build_surface(g).unwrap();
    let mut pools = POOLS.get_or_init(Default::default).lock().unwrap();
    let p = pools.entry((g, max_len)).or_insert_with(|| simple_pool(&s, max_len)).clone();
    (s, p)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn reduce_is_idempotent_and_monotone(
        picks in proptest::collection::vec(0usize..10_000, 1..5),
        g in 1i64..=2,
    ) {
        let (s, pool) = pool_strategy(g, 4);
        let curves: Vec<Curve> = picks
            .iter()
            .enumerate()
            .map(|(k, p)| Curve::new(format!("c{k}"), pool[p % pool.len()].clone()))
            .collect();
        let a = Arrangement::from_curves(s, curves).unwrap();
        let r = a.reduce();
        prop_assert!(r.total_crossings() <= a.total_crossings());
        prop_assert_eq!(r.reduce(), r.clone());
        prop_assert!(r.validate().is_valid());
        for c in a.curves() {
            prop_assert_eq!(a.homology_class(&c.name).unwrap(), r.homology_class(&c.name).unwrap());
        }
    }

    #[test]
    fn intersection_bounded_below_by_pairing(i in 0usize..10_000, j in 0usize..10_000, g in 1i64..=2) {
        let (s, pool) = pool_strategy(g, 5);
        let (u, v) = (&pool[i % pool.len()], &pool[j % pool.len()]);
        let a = Arrangement::from_curves(
            s,
            vec![Curve::new("u", u.clone()), Curve::new("v", v.clone())],
        )
        .unwrap();
        let p = a.homology_class("u").unwrap().pairing(&a.homology_class("v").unwrap());
        prop_assert!(a.geometric_intersection("u", "v").unwrap() as i64 >= p.abs());
    }

    #[test]
    fn crossing_word_abelianizes_to_class(i in 0usize..10_000, g in 1i64..=2) {
        let (s, pool) = pool_strategy(g, 5);
        let u = &pool[i % pool.len()];
        let a = Arrangement::from_curves(s.clone(), vec![Curve::new("u", u.clone())]).unwrap();
        let w = a.crossing_word("u").unwrap();
        let ab = surface_model::word::abelianize(&w, s.genus());
        prop_assert_eq!(ab, a.homology_class("u").unwrap().0);
    }

    #[test]
    fn curves_equal_respects_rotation_and_reversal(i in 0usize..10_000, r in 0usize..8, rev: bool) {
        let (s, pool) = pool_strategy(2, 4);
        let u = pool[i % pool.len()].clone();
        let mut v = rotate(&u, r);
        if rev {
            v = inverse(&v);
        }
        let other = pool[(i + 1) % pool.len()].clone();
        let a = Arrangement::from_curves(
            s,
            vec![Curve::new("u", u), Curve::new("v", v), Curve::new("w", other)],
        )
        .unwrap();
        prop_assert!(a.curves_equal("u", "v").unwrap());
        prop_assert!(a.curves_equal("v", "u").unwrap());
        let uw = a.curves_equal("u", "w").unwrap();
        prop_assert_eq!(uw, a.curves_equal("v", "w").unwrap());
        if uw {
            prop_assert_eq!(a.homology_class("u").unwrap(), a.homology_class("w").unwrap());
        }
    }
}
