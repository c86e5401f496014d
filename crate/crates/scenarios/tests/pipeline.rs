use fibration::load_dataset;
use kirby::Schedule;
use mcg_engine::TwistWord;
use scenarios::{
    assemble_theorem, lemma52_schedule, run_lemma52, run_lemma52_with, verify, verify_conjugation_identities,
    verify_with, ScenarioError, VerifyReport,
};

#[test]
fn grid_is_certified() {
    for h in 1..=3 {
        for n in 1..=3 {
            let ds = load_dataset(h, n, None).unwrap();
            let r = verify(h, n, &ds).unwrap();
            let s = &r.certificate.summary;
            assert!(r.certified(), "h={h} n={n}");
            assert_eq!((s.handles.zero, s.handles.one, s.handles.two), (1, 0, 6 * n - 1));
            let t = r.theorem.unwrap();
            let v = t.handle_vector;
            assert_eq!(v, [1, 0, 12 * n - 2, 0, 1]);
            assert_eq!(t.euler, (v[0] + v[2] + v[4]) as i64 - (v[1] + v[3]) as i64);
            assert_eq!(t.euler, 12 * n as i64);
            assert_eq!(t.euler_from_fibration, t.euler);
            assert_eq!(t.b2, v[2]);
            assert_eq!(t.note.is_some(), n == 1);
        }
    }
}

#[test]
fn schedule_pairs_the_gurtas_handles() {
    let s = lemma52_schedule(3, 2);
    let names: Vec<(&str, &str, &str)> =
        s.slides.iter().map(|x| (x.moving.as_str(), x.over.as_str(), x.result.as_str())).collect();
    assert_eq!(names[0], ("D0p", "D0", "h1"));
    assert_eq!(names[5], ("D5p", "D5", "h6"));
    assert_eq!(names[6], ("D6", "D5", "h5,6"));
    assert_eq!(names[11], ("D1", "D0", "h0,1"));
    assert_eq!(s.excluded, vec!["D0".to_string(), "bd".to_string()]);
    assert!(s.waves[0].handles.contains(&"c1".to_string()));
    assert!(s.waves[0].handles.contains(&"c2pb".to_string()));
    assert!(!s.waves[0].handles.contains(&"c3b".to_string()));
}

#[test]
fn corollary_note_for_n_one() {
    let ds = load_dataset(2, 1, None).unwrap();
    let t = verify(2, 1, &ds).unwrap().theorem.unwrap();
    assert_eq!(t.handle_vector, [1, 0, 10, 0, 1]);
    assert!(t.note.unwrap().starts_with("E(1)_{2,5} admits a handle decomposition without 1- and 3-handles"));
}

#[test]
fn identity_fixes_the_middle_curves_only() {
    let ds = load_dataset(2, 2, None).unwrap();
    let r = verify_with(2, 2, &ds, &TwistWord::identity()).unwrap();
    for c in &r.checks {
        assert_eq!(c.holds, c.name.starts_with("Phi^-1(c"), "{}", c.name);
    }
    assert!(verify_conjugation_identities(2, 2, &ds).unwrap().holds());
}

#[test]
fn wrong_dataset_is_input_error() {
    let ds = load_dataset(1, 1, None).unwrap();
    let e = run_lemma52(1, 2, &ds).unwrap_err();
    assert!(e.is_input_error(), "{e}");
    assert!(run_lemma52(0, 1, &ds).unwrap_err().is_input_error());
}

#[test]
fn exhausted_budget_fails_assembly() {
    let ds = load_dataset(1, 1, None).unwrap();
    let s = Schedule { max_steps: Some(2), ..lemma52_schedule(1, 1) };
    let run = run_lemma52_with(1, 1, &ds, &s).unwrap();
    assert!(!run.certificate.summary.success);
    assert_eq!(run.certificate.steps.len(), 2);
    assert!(matches!(assemble_theorem(&run, &ds), Err(ScenarioError::CertificateFailed(_))));
}

#[test]
fn reports_are_deterministic() {
    let ds = load_dataset(2, 2, None).unwrap();
    let a = verify(2, 2, &ds).unwrap();
    let b = verify(2, 2, &load_dataset(2, 2, None).unwrap()).unwrap();
    assert_eq!(a.to_json(), b.to_json());
    assert_eq!(a.to_text(), b.to_text());
    assert_eq!(VerifyReport::from_json(&a.to_json()).unwrap(), a);
}
