use hollow_core::catalog::{self, MonoidSpec};
use hollow_core::construct::{amalgam, regular, theta_power};
use hollow_core::format::ActFile;
use hollow_core::lab::{self, ClaimReport, Corpus, Mode, NO_FINITE_WITNESS};
use hollow_core::{act_isomorphic, ElemSet, Error, Execution};

fn strip_timing(reports: &[ClaimReport]) -> Vec<String> {
    reports
        .iter()
        .map(|r| {
            let mut v = serde_json::to_value(r).unwrap();
            v["elapsed"] = serde_json::Value::Null;
            v.to_string()
        })
        .collect()
}

#[test]
fn reports_do_not_depend_on_scheduling() {
    let corpus = Corpus::catalog(3);
    let par = lab::run_suite_with(&corpus, None, Mode::Both, Execution::Parallel).unwrap();
    let seq = lab::run_suite_with(&corpus, None, Mode::Both, Execution::Sequential).unwrap();
    assert_eq!(strip_timing(&par), strip_timing(&seq));
    let ids: Vec<(&str, Option<_>)> = par.iter().map(|r| (r.claim.as_str(), r.reading)).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
}

#[test]
fn every_reported_failure_replays() {
    let corpus = Corpus::catalog(3);
    for r in lab::run_suite(&corpus, None, Mode::Both).unwrap() {
        assert!(r.failures.len() as u64 <= r.failure_count);
        for f in &r.failures {
            let text = f.instance.to_json();
            let loaded = ActFile::parse(&text).unwrap().load().unwrap();
            let again = lab::replay(&r.claim, r.reading, &loaded).unwrap();
            assert_eq!(again.as_ref(), Some(&f.detail), "{} on {}", r.claim, text);
        }
    }
}

#[test]
fn hollow_characterization_holds_up_to_three_elements() {
    let corpus = Corpus::catalog(3);
    let reports = lab::run_suite(&corpus, Some(&["T3.4".to_string()]), Mode::Both).unwrap();
    assert_eq!(reports.len(), 1);
    assert!(reports[0].instances_checked > 0);
    assert_eq!(reports[0].failure_count, 0);
}

#[test]
fn trivial_monoid_passes_everything() {
    let corpus = Corpus::from_specs(&[MonoidSpec::Trivial], 1).unwrap();
    let reports = lab::run_suite(&corpus, None, Mode::Both).unwrap();
    assert!(reports.iter().all(ClaimReport::passed));
    assert!(reports.iter().map(|r| r.instances_checked).sum::<u64>() > 0);
    assert!(lab::suite_passed(&reports));
}

#[test]
fn unknown_claims_are_rejected() {
    let corpus = Corpus::catalog(1);
    let err = lab::run_suite(&corpus, Some(&["bogus".to_string()]), Mode::Both).unwrap_err();
    assert_eq!(err, Error::UnknownClaim("bogus".into()));
}

#[test]
fn registry_ids_are_unique() {
    let ids: Vec<&str> = lab::registry().iter().map(|c| c.id).collect();
    let mut dedup = ids.clone();
    dedup.dedup();
    assert_eq!(ids, dedup);
    assert!(lab::find("T4.4").is_some());
}

#[test]
fn replay_refuses_instances_outside_the_hypotheses() {
    // L2.3 needs an indecomposable act.
    let a = theta_power(&catalog::s2(), 2);
    let file = ActFile::from_act(&a).with_subset("B", &a, ElemSet::singleton(0));
    assert!(lab::replay("L2.3", None, &file.load().unwrap()).is_err());
    let s = regular(&catalog::s2());
    let file = ActFile::from_act(&s).with_subset("B", &s, ElemSet::singleton(1));
    assert_eq!(lab::replay("L2.3", None, &file.load().unwrap()).unwrap(), None);
}

#[test]
fn strictness_witnesses_at_three_elements() {
    let entries = lab::strictness_witness_search(&Corpus::catalog(3));
    let get = |name: &str| entries.iter().find(|e| e.implication == name).unwrap();
    let witness = |name: &str| get(name).witness.as_ref().unwrap().load().unwrap();

    let w = witness("co-uniform ⇏ hollow");
    assert!(act_isomorphic(&w.act, &theta_power(&w.monoid, 2)).unwrap());

    let w = witness("coessential ⇏ superfluous");
    assert!(act_isomorphic(&w.act, &theta_power(&w.monoid, 2)).unwrap());

    let w = witness("indecomposable ⇏ hollow");
    let s = regular(&w.monoid);
    let am = amalgam(&s, s.subact(ElemSet::singleton(1)).unwrap()).unwrap();
    assert!(act_isomorphic(&w.act, &am).unwrap());

    assert!(get("supplemented ⇏ co-uniform").found);
    for gap in ["hollow ⇏ locally cyclic", "locally cyclic ⇏ cyclic"] {
        assert!(!get(gap).found);
        assert!(get(gap).note.as_ref().unwrap().starts_with(NO_FINITE_WITNESS));
    }
}
