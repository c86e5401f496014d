use fibration::{lemma52_factorization, load_dataset, AbelianGroup, Base, Factorization};
use kirby::shadow::BOUNDARY_LABEL;
use kirby::tietze::Presentation;
use kirby::{build_kirby, replay, run_schedule, KirbyShadow, MoveCertificate, Schedule, SlideHint, TwoHandle};
use mcg_engine::TwistWord;
use proptest::prelude::*;
use surface_model::{dual_arc_label, Arrangement, SurfaceModel};

fn greedy() -> Schedule {
    Schedule {
        slides: vec![],
        waves: vec![],
        excluded: vec![BOUNDARY_LABEL.to_string()],
        greedy_fallback: true,
        max_steps: None,
    }
}

fn tietze_agrees(k: &KirbyShadow, c: &MoveCertificate) {
    let mut p = Presentation::from_shadow(&k.presentation());
    p.follow(c).unwrap();
    let (free_rank, torsion) = p.abelian_invariants();
    assert_eq!(p.generators.len(), c.summary.generators);
    assert_eq!(p.relators.len(), c.summary.relators);
    assert_eq!(AbelianGroup { free_rank, torsion }.to_string(), c.summary.h1);
}

#[test]
fn product_with_a_disk() {
    for g in 1..=3 {
        let arr = Arrangement::empty(SurfaceModel::standard(g).unwrap());
        let f = Factorization::new(Base::Disk, arr, TwistWord::identity()).unwrap();
        let k = build_kirby(&f).unwrap();
        assert_eq!(k.one_handle_count(), 2 * g);
        assert_eq!(k.two_handle_count(), 1);
        assert_eq!(k.h1(), AbelianGroup { free_rank: 2 * g, torsion: vec![] });
        let bd = k.handle(BOUNDARY_LABEL).unwrap();
        assert_eq!(bd.level, 0);
        let expected: Vec<i32> = (1..=g as i32).flat_map(|i| [2 * i - 1, 2 * i, 1 - 2 * i, -2 * i]).collect();
        assert_eq!(bd.word, expected);
        assert_eq!(k.presentation().generators.len(), 2 * g);
    }
}

#[test]
fn disk_piece_counts_and_levels() {
    let ds = load_dataset(3, 2, None).unwrap();
    let f = lemma52_factorization(3, 2, &ds).unwrap();
    let k = build_kirby(&f).unwrap();
    assert_eq!(k.one_handle_count(), 14);
    assert_eq!(k.two_handle_count(), 25);
    assert_eq!(k.h1(), AbelianGroup { free_rank: 0, torsion: vec![] });
    for (i, name) in f.cycles().into_iter().enumerate() {
        assert_eq!(k.handle(name).unwrap().level, i as i64 + 1);
    }
}

#[test]
fn sphere_base_is_rejected() {
    let ds = load_dataset(1, 1, None).unwrap();
    let f = fibration::enk_factorization(1, 1, &ds).unwrap();
    assert!(matches!(build_kirby(&f), Err(kirby::KirbyError::DiskBaseRequired)));
}

#[test]
fn middle_blocks_cancel_from_the_last_one() {
    for h in 1..=3 {
        for n in 2..=3 {
            let ds = load_dataset(h, n, None).unwrap();
            let k = build_kirby(&lemma52_factorization(h, n, &ds).unwrap()).unwrap();
            let last = 2 * (2 * h + n - 1) - 1;
            assert!(k.find_canceling_pairs().contains(&(last, "c1".to_string())), "h={h} n={n}");
            let k = k.cancel(last, "c1").unwrap();
            assert!(!k.active().contains(&last));
            if n >= 3 {
                assert!(k.find_canceling_pairs().contains(&(last - 2, "c3".to_string())), "h={h} n={n}");
            }
        }
    }
}

#[test]
fn greedy_run_on_a_disk_piece() {
    let ds = load_dataset(1, 2, None).unwrap();
    let k = build_kirby(&lemma52_factorization(1, 2, &ds).unwrap()).unwrap();
    let c = run_schedule(&k, &greedy(), "greedy").unwrap();
    assert!(c.steps.iter().all(|s| s.verdict.ok && s.verdict.euler_before == k.euler()));
    assert_eq!(replay(&c).unwrap().to_json(), c.to_json());
    tietze_agrees(&k, &c);
}

#[test]
fn stalled_schedule_is_reported() {
    let hs = vec![
        TwoHandle { label: BOUNDARY_LABEL.into(), level: 0, word: vec![1, 2, -1, -2], curve: None },
        TwoHandle { label: "t".into(), level: 1, word: vec![1, 1], curve: None },
    ];
    let k = KirbyShadow::from_words(1, hs).unwrap();
    let c = run_schedule(&k, &greedy(), "stall").unwrap();
    assert!(!c.summary.success);
    assert_eq!(c.summary.h1, "Z + Z/2");
    assert!(c.summary.stalled.as_deref().unwrap().starts_with("no canceling pair"));
    let budget = Schedule { max_steps: Some(0), ..greedy() };
    let c = run_schedule(&k, &budget, "budget").unwrap();
    assert!(c.steps.is_empty());
    assert!(c.summary.stalled.as_deref().unwrap().starts_with("step budget of 0"));
    assert_eq!(replay(&c).unwrap(), c);
}

#[test]
fn certificate_round_trips() {
    let ds = load_dataset(2, 1, None).unwrap();
    let k = build_kirby(&lemma52_factorization(2, 1, &ds).unwrap()).unwrap();
    let c = run_schedule(&k, &greedy(), "round trip").unwrap();
    let back = MoveCertificate::from_json(&c.to_json()).unwrap();
    assert_eq!(back, c);
    assert!(MoveCertificate::from_json(&c.to_json().replace("kirby-certificate/1", "other/9")).is_err());
    assert_eq!(dual_arc_label(1), "alpha*1");
}

fn random_diagram() -> impl Strategy<Value = (usize, Vec<Vec<i32>>, Vec<(usize, usize)>)> {
    (1usize..=3).prop_flat_map(|g| {
        let letter = (1..=2 * g as i32, any::<bool>()).prop_map(|(l, s)| if s { l } else { -l });
        (
            Just(g),
            prop::collection::vec(prop::collection::vec(letter, 1..6), 1..6),
            prop::collection::vec((0usize..8, 0usize..8), 0..5),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn moves_keep_invariants_and_replay((g, words, slides) in random_diagram()) {
        let mut hs = vec![TwoHandle {
            label: BOUNDARY_LABEL.into(),
            level: 0,
            word: (1..=g as i32).flat_map(|i| [2 * i - 1, 2 * i, 1 - 2 * i, -2 * i]).collect(),
            curve: None,
        }];
        for (i, w) in words.into_iter().enumerate() {
            hs.push(TwoHandle { label: format!("r{i}"), level: i as i64 + 1, word: w, curve: None });
        }
        let k = KirbyShadow::from_words(g, hs).unwrap().reduce();
        let mut labels: Vec<String> = k.handles().iter().map(|h| h.label.clone()).collect();
        let mut hints = Vec::new();
        for (s, (i, j)) in slides.into_iter().enumerate() {
            let (i, j) = (i % labels.len(), j % labels.len());
            if i == j || k.handles().iter().any(|h| h.label == labels[i] && h.word.is_empty()) {
                continue;
            }
            let result = format!("s{s}");
            hints.push(SlideHint { moving: labels[i].clone(), over: labels[j].clone(), result: result.clone(), band: None });
            labels[i] = result;
        }
        let schedule = Schedule { slides: hints, ..greedy() };
        let c = match run_schedule(&k, &schedule, "random") {
            Ok(c) => c,
            Err(kirby::KirbyError::BadBand(_)) => return Ok(()),
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        };
        for s in &c.steps {
            prop_assert!(s.verdict.ok);
            prop_assert_eq!(s.verdict.euler_before, k.euler());
            prop_assert_eq!(s.verdict.euler_after, k.euler());
            prop_assert_eq!(&s.verdict.h1_after, &k.h1().to_string());
        }
        prop_assert_eq!(c.summary.euler, k.euler());
        prop_assert_eq!(replay(&c).unwrap().to_json(), c.to_json());
        tietze_agrees(&k, &c);
    }
}
