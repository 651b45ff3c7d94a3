use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

use sdm::algebra::{enumerate, heterogenize, validate, validate_single, FiniteSma, Flags};
use sdm::calculus::{
    check_proof, cut_complexities, cut_instance, dm_less, identity_proof, random_formula,
    reduce_cut, search, Budget, System, CUT_PATTERNS,
};
use sdm::inductive::{
    brute_force_inductive, check_witness, is_analytic_inductive, signed_tree, SignedTree,
};
use sdm::syntax::{parse_any_term, parse_formula, render, translate, Formula, Sequent, Sort};

fn smas() -> &'static [FiniteSma] {
    use std::sync::OnceLock;
    static ALL: OnceLock<Vec<FiniteSma>> = OnceLock::new();
    ALL.get_or_init(|| enumerate(4, &Flags::new()).unwrap())
}

fn formulas() -> &'static [Formula] {
    use std::sync::OnceLock;
    static ALL: OnceLock<Vec<Formula>> = OnceLock::new();
    ALL.get_or_init(|| Formula::enumerate(&["p", "q"], 2))
}

fn term(seed: u64, sort: Sort, depth: usize) -> sdm::syntax::Term {
    random_formula(&mut StdRng::seed_from_u64(seed), sort, depth)
}

/// Descending-sorted lexicographic comparison; equals the multiset
/// ordering for a total order on the elements.
fn dm_lex(m: &[usize], n: &[usize]) -> bool {
    let mut a = m.to_vec();
    let mut b = n.to_vec();
    a.sort_unstable_by(|x, y| y.cmp(x));
    b.sort_unstable_by(|x, y| y.cmp(x));
    a < b
}

fn mirrored(pos: &SignedTree, neg: &SignedTree) -> bool {
    pos.term == neg.term
        && pos.sign == neg.sign.flip()
        && pos.children.len() == neg.children.len()
        && pos.children.iter().zip(&neg.children).all(|(a, b)| mirrored(a, b))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cut_reduction_invariants(seed in any::<u64>(), k in 0..CUT_PATTERNS.len()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let (t, path) = cut_instance(&mut rng, CUT_PATTERNS[k]);
        prop_assert!(check_proof(&t, System::Sm).accepted);
        let r = reduce_cut(&t, &path).unwrap();
        prop_assert_eq!(&r.conclusion, &t.conclusion);
        prop_assert!(check_proof(&r, System::Sm).accepted);
        prop_assert!(dm_less(&cut_complexities(&r), &cut_complexities(&t)));
    }

    #[test]
    fn dm_matches_sorted_lex(
        m in proptest::collection::vec(0usize..6, 0..6),
        n in proptest::collection::vec(0usize..6, 0..6),
    ) {
        prop_assert_eq!(dm_less(&m, &n), dm_lex(&m, &n));
        prop_assert!(!(dm_less(&m, &n) && dm_less(&n, &m)));
    }

    #[test]
    fn dm_replacing_by_smaller_decreases(
        rest in proptest::collection::vec(0usize..8, 0..5),
        x in 1usize..8,
        smaller in proptest::collection::vec(0usize..8, 0..6),
    ) {
        let mut n = rest.clone();
        n.push(x);
        let mut m = rest;
        m.extend(smaller.into_iter().map(|s| s % x));
        prop_assert!(dm_less(&m, &n));
    }

    #[test]
    fn sign_propagation_mirrors(seed in any::<u64>(), depth in 1usize..6, k in any::<bool>()) {
        let t = term(seed, if k { Sort::K } else { Sort::Dl }, depth);
        let pos = signed_tree(&t, sdm::syntax::Polarity::Pos);
        let neg = signed_tree(&t, sdm::syntax::Polarity::Neg);
        prop_assert!(mirrored(&pos, &neg));
        prop_assert_eq!(pos.flipped().flipped(), pos);
    }

    #[test]
    fn classifier_witnesses_check(a in any::<u64>(), b in any::<u64>(), depth in 1usize..4) {
        let lhs = term(a, Sort::Dl, depth);
        let rhs = term(b, Sort::Dl, depth);
        let vars = sdm::inductive::variables(&[&lhs, &rhs]);
        prop_assume!(vars.len() <= 3);
        match is_analytic_inductive(&lhs, &rhs) {
            Some(w) => prop_assert!(check_witness(&lhs, &rhs, &w)),
            None => prop_assert!(!brute_force_inductive(&lhs, &rhs)),
        }
    }

    #[test]
    fn render_parse_roundtrip(seed in any::<u64>(), depth in 1usize..6, k in any::<bool>()) {
        let t = term(seed, if k { Sort::K } else { Sort::Dl }, depth);
        prop_assert_eq!(parse_any_term(&render(&t)).unwrap(), t);
    }

    #[test]
    fn formula_text_roundtrip(i in 0usize..40) {
        let f = &formulas()[i];
        prop_assert_eq!(&parse_formula(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn translation_preserves_validity(i in 0usize..40, j in 0usize..40, k in any::<prop::sample::Index>()) {
        let a = &smas()[k.index(smas().len())];
        let hh = heterogenize(a).unwrap();
        let (f, g) = (&formulas()[i], &formulas()[j]);
        let single = validate_single(f, g, a).unwrap().is_valid();
        let multi = validate(&Sequent::new(translate(f), translate(g)), &hh).unwrap().is_valid();
        prop_assert_eq!(single, multi);
    }

    #[test]
    fn identity_proofs_check(seed in any::<u64>(), depth in 1usize..6, k in any::<bool>()) {
        let t = term(seed, if k { Sort::K } else { Sort::Dl }, depth);
        let p = identity_proof(&t).unwrap();
        prop_assert_eq!(&p.conclusion, &Sequent::new(t.clone(), t));
        let r = check_proof(&p, System::Sm);
        prop_assert!(r.accepted && r.cut_free && r.subformula);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    /// Proofs returned by search always check; refutations agree with
    /// validity on the refuting algebra.
    #[test]
    fn search_is_sound(i in 0usize..40, j in 0usize..40) {
        let (f, g) = (&formulas()[i], &formulas()[j]);
        let goal = Sequent::new(translate(f), translate(g));
        match search(&goal, System::Sm, Budget { max_depth: 30, max_visited: 20_000 }) {
            Ok(t) => {
                prop_assert_eq!(&t.conclusion, &goal);
                let r = check_proof(&t, System::Sm);
                prop_assert!(r.accepted && r.cut_free);
            }
            Err(sdm::calculus::SearchError::Refuted { .. }) => {
                prop_assert!(smas().iter().any(|a| !validate_single(f, g, a).unwrap().is_valid()));
            }
            Err(_) => {}
        }
    }
}
