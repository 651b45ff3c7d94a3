//! Hand-checked derivations of the translated axioms of semi De Morgan
//! logic and its extensions, each in the weakest calculus that proves it.

use crate::syntax::{parse_formula_sequent, translate, Formula, Sequent};

use super::proof::{parse_linear, ProofTree};
use super::rules::System;

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub system: System,
    /// The single-type axiom, `(seq A B)`.
    pub axiom: &'static str,
    pub text: &'static str,
}

impl CorpusEntry {
    pub fn formulas(&self) -> (Formula, Formula) {
        parse_formula_sequent(self.axiom).expect("corpus axiom parses")
    }

    /// The translated axiom, which the proof must conclude.
    pub fn goal(&self) -> Sequent {
        let (a, b) = self.formulas();
        Sequent::new(translate(&a), translate(&b))
    }

    pub fn proof(&self) -> ProofTree {
        parse_linear(self.text).expect("corpus proof parses")
    }
}

macro_rules! entry {
    ($name:literal, $sys:expr, $ax:literal) => {
        CorpusEntry {
            name: $name,
            system: $sys,
            axiom: $ax,
            text: include_str!(concat!("corpus/", $name, ".proof")),
        }
    };
}

pub fn corpus() -> Vec<CorpusEntry> {
    use System::*;
    vec![
        entry!("dneg_meet", Sm, "(seq (and (not (not p)) (not (not q))) (not (not (and p q))))"),
        entry!("neg_tneg", Sm, "(seq (not p) (not (not (not p))))"),
        entry!("tneg_neg", Sm, "(seq (not (not (not p))) (not p))"),
        entry!("neg_join", Sm, "(seq (and (not p) (not q)) (not (or p q)))"),
        entry!("neg_bot", Sm, "(seq top (not bot))"),
        entry!("neg_top", Sm, "(seq (not top) bot)"),
        entry!("lqm", Lqm, "(seq p (not (not p)))"),
        entry!("uqm", Uqm, "(seq (not (not p)) p)"),
        entry!("dp", Dp, "(seq (and (not p) (not (not p))) bot)"),
        entry!("ap", Ap, "(seq (and (not p) p) bot)"),
        entry!("ws", Ws, "(seq top (or (not (not p)) (not p)))"),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::check_proof;

    #[test]
    fn every_entry_checks() {
        for e in corpus() {
            let t = e.proof();
            assert_eq!(t.conclusion, e.goal(), "{}", e.name);
            let r = check_proof(&t, e.system);
            assert!(r.accepted, "{}: {:?}", e.name, r.diagnostics);
            assert!(r.cut_free && r.subformula, "{}", e.name);
        }
    }

    #[test]
    fn extension_proofs_need_their_rule() {
        for e in corpus().into_iter().filter(|e| e.system != System::Sm) {
            assert!(!check_proof(&e.proof(), System::Sm).accepted, "{}", e.name);
        }
    }
}
