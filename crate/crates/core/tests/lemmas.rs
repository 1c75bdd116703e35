mod common;

use common::Tally;

fn assert_clean(name: &str, t: &Tally) {
    println!("{name}: {} instances, {} with hypotheses", t.instances, t.hits);
    assert!(t.violations.is_empty(), "{name}: {:?}", t.violations);
}

#[test]
fn cone_lemma() {
    let t = common::cone_suite(1);
    assert_clean("cone", &t);
    assert!(t.instances >= 100);
}

#[test]
fn extended_cone_lemma() {
    let t = common::extended_cone_suite(1);
    assert_clean("extended cone", &t);
    assert!(t.hits > 0);
}

#[test]
fn extended_cone_converse_fails_for_suspended_circle() {
    let (pair_chordal, link_chordal) = common::extended_cone_converse_fixture();
    assert!(pair_chordal);
    assert!(!link_chordal);
}

#[test]
fn links_lemma() {
    let t = common::links_suite(1);
    assert_clean("links", &t);
    assert!(t.hits > 0);
}

#[test]
fn links_lemma_hypotheses_are_needed() {
    assert!(common::links_tightness_fixture());
}

#[test]
fn join_lemma() {
    let t = common::join_suite(1);
    assert_clean("join", &t);
    assert!(t.hits > 0);
}

#[test]
fn gluing_lemma() {
    let t = common::gluing_suite(1);
    assert_clean("gluing", &t);
    assert!(t.hits > 0);
}
