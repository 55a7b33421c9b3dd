//! Suite registry, determinism, starvation and counterexample replay.

use krel::harness::{suite_ids, REQUIRED_SUITES};
use krel::{replay, run_suite, Error, GeneratorConfig, Status};

fn cfg(seed: u64, trials: usize) -> GeneratorConfig {
    GeneratorConfig { seed, trials, ..Default::default() }
}

#[test]
fn registry_holds_every_required_suite() {
    let ids = suite_ids();
    assert_eq!(REQUIRED_SUITES.len(), 21);
    for id in REQUIRED_SUITES {
        assert!(ids.contains(&id), "{id} missing");
    }
}

#[test]
fn unknown_suite_is_an_error() {
    assert_eq!(run_suite("unknown", &cfg(0, 5)).unwrap_err(), Error::UnknownSuite("unknown".into()));
}

#[test]
fn invalid_config_is_rejected() {
    let bad = GeneratorConfig { max_dim: 0, ..cfg(0, 5) };
    assert!(matches!(run_suite("prop3.4", &bad).unwrap_err(), Error::PreconditionUnmet(_)));
}

#[test]
fn golden_example_runs_one_trial() {
    for seed in [0, 1, 99] {
        let r = run_suite("example5.19", &cfg(seed, 500)).unwrap();
        assert_eq!((r.trials, r.failures, r.applicable, r.status), (1, 0, 1, Status::Pass));
    }
}

#[test]
fn reports_are_deterministic() {
    for id in ["prop3.4", "thm5.5", "prop5.20-literal"] {
        let a = run_suite(id, &cfg(11, 20)).unwrap();
        let b = run_suite(id, &cfg(11, 20)).unwrap();
        assert_eq!(a.deterministic_json(), b.deterministic_json(), "{id}");
    }
    let a = run_suite("prop3.4", &cfg(11, 20)).unwrap();
    let c = run_suite("prop3.4", &cfg(12, 20)).unwrap();
    assert_eq!(a.status, c.status);
}

#[test]
fn zero_trials_are_starved() {
    let r = run_suite("prop3.4", &cfg(0, 0)).unwrap();
    assert_eq!(r.status, Status::HypothesisStarved);
    assert_eq!(r.applicable, 0);
}

#[test]
fn literal_triviality_fails_and_replays() {
    let r = run_suite("prop5.20-literal", &cfg(3, 10)).unwrap();
    assert_eq!(r.status, Status::Fail);
    let c = r.first_counterexample.clone().expect("counterexample");
    assert_eq!(c.suite, "prop5.20-literal");
    assert!(c.instance.get("kind").is_some());

    let again = replay(&c).unwrap();
    assert_eq!(again.status, Status::Fail);
    let c2 = again.first_counterexample.unwrap();
    assert_eq!((c2.trial, &c2.message, &c2.instance), (c.trial, &c.message, &c.instance));

    // The stored form survives a JSON round trip.
    let text = serde_json::to_string(&c).unwrap();
    let back: krel::Counterexample = serde_json::from_str(&text).unwrap();
    assert_eq!(back, c);
}

#[test]
fn report_lines_are_json() {
    let r = run_suite("prop4.2", &cfg(5, 10)).unwrap();
    let v: serde_json::Value = serde_json::from_str(&r.to_json_line()).unwrap();
    assert_eq!(v["suiteId"], "prop4.2");
    assert_eq!(v["trials"], 10);
    assert!(v.get("elapsedMs").is_some());
}

/// Every registered suite passes a short run with a fresh seed.
#[test]
fn required_suites_pass_short_runs() {
    let mut bad = Vec::new();
    for id in REQUIRED_SUITES {
        let r = run_suite(id, &cfg(2024, 40)).unwrap();
        println!("{id}: {:?} {}/{} applicable", r.status, r.applicable, r.trials);
        if r.status != Status::Pass {
            bad.push((id, r.status, r.first_counterexample.map(|c| c.message)));
        }
    }
    assert!(bad.is_empty(), "{bad:?}");
}

#[test]
fn extra_suites_pass_short_runs() {
    for id in ["adjoint-routes", "main-transform", "weyl-symmetry"] {
        let r = run_suite(id, &cfg(77, 30)).unwrap();
        assert_eq!(r.status, Status::Pass, "{id}: {:?}", r.first_counterexample);
    }
}
