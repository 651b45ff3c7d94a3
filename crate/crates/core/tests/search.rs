use sdm::algebra::{enumerate, heterogenize, validate, Flags, HeteroAlgebra};
use sdm::calculus::{check_proof, corpus, search, Budget, Prover, SearchError, System};
use sdm::syntax::parse_sequent;

fn models() -> Vec<HeteroAlgebra> {
    enumerate(5, &Flags::new())
        .unwrap()
        .iter()
        .map(|a| heterogenize(a).unwrap())
        .collect()
}

#[test]
fn translated_neg_bot_within_depth_20() {
    let g = parse_sequent("(seq htop (box (sim (circ bot))))").unwrap();
    let t = search(&g, System::Sm, Budget::depth(20)).unwrap();
    assert!(t.height() <= 20);
    assert!(check_proof(&t, System::Sm).accepted);
}

#[test]
fn found_proofs_are_valid_in_their_class() {
    let all = models();
    for e in corpus() {
        let goal = e.goal();
        let t = Prover::new(e.system).search(&goal, Budget::default()).unwrap();
        let r = check_proof(&t, e.system);
        assert!(r.accepted && r.cut_free, "{}", e.name);
        for (i, hh) in all.iter().enumerate().filter(|(_, h)| e.system.admits(h.flags())) {
            assert!(validate(&goal, hh).unwrap().is_valid(), "{} fails in algebra {i}", e.name);
        }
    }
}

#[test]
fn extension_axioms_are_not_found_in_the_base_calculus() {
    for e in corpus().into_iter().filter(|e| e.system != System::Sm) {
        match search(&e.goal(), System::Sm, Budget::default()) {
            Err(SearchError::Refuted { .. }) => {}
            other => panic!("{}: {:?}", e.name, other.map(|t| t.height())),
        }
    }
}
