//! Derived identity: a cut-free proof of `A ⊢ A` for every formula `A`,
//! built by induction on `A`. The primitive `Id` only covers atoms.

use crate::syntax::{Conn, Sequent, Term};

use super::proof::ProofTree;

fn seq(a: Term, b: Term) -> Sequent {
    Sequent::new(a, b)
}

fn un(rule: &str, a: Term, b: Term, p: ProofTree) -> ProofTree {
    ProofTree::node(rule, seq(a, b), vec![p])
}

/// Proof of `a ⊢ a`, or `None` when `a` is not a formula.
pub fn identity_proof(a: &Term) -> Option<ProofTree> {
    use Conn::*;
    if !a.is_formula() {
        return None;
    }
    let u = |c: Conn, x: &Term| Term::unary(c, x.clone());
    let bin = |c: Conn, x: &Term, y: &Term| Term::binary(c, x.clone(), y.clone());
    Some(match a {
        Term::Atom(_) => ProofTree::leaf("Id", seq(a.clone(), a.clone())),
        Term::Const(c) => {
            let (ax, rule, ax_seq) = match c {
                Top => ("top_r", "top_l", seq(Term::konst(HTop), a.clone())),
                One => ("one_r", "one_l", seq(Term::konst(HOne), a.clone())),
                Bot => ("bot_l", "bot_r", seq(a.clone(), Term::konst(CBot))),
                Zero => ("zero_l", "zero_r", seq(a.clone(), Term::konst(CZero))),
                _ => return None,
            };
            ProofTree::node(rule, seq(a.clone(), a.clone()), vec![ProofTree::leaf(ax, ax_seq)])
        }
        Term::Unary(c, x) => {
            let px = identity_proof(x)?;
            match c {
                Box => {
                    let l = un("box_l", a.clone(), u(CBox, x), px);
                    un("box_r", a.clone(), a.clone(), l)
                }
                Sim => {
                    let s = u(TStar, x);
                    let c = un("cont.dn", s.clone(), s.clone(), px);
                    let l = un("sim_l", a.clone(), s, c);
                    un("sim_r", a.clone(), a.clone(), l)
                }
                Circ => {
                    let t = u(TCirc, x);
                    let c = un("tcirc", t.clone(), t.clone(), px);
                    let r = un("circ_r", t, a.clone(), c);
                    un("circ_l", a.clone(), a.clone(), r)
                }
                _ => return None,
            }
        }
        Term::Binary(c, x, y) => {
            let (px, py) = (identity_proof(x)?, identity_proof(y)?);
            let (two, intro, finish, left_first) = match c {
                And => (HAnd, "and_r", "and_l", true),
                Cap => (HCap, "cap_r", "cap_l", true),
                Or => (CVee, "or_l", "or_r", false),
                Cup => (CCup, "cup_l", "cup_r", false),
                _ => return None,
            };
            let s = bin(two, x, y);
            let mid = if left_first {
                seq(s, a.clone())
            } else {
                seq(a.clone(), s)
            };
            let m = ProofTree::node(intro, mid, vec![px, py]);
            ProofTree::node(finish, seq(a.clone(), a.clone()), vec![m])
        }
        Term::Meta(_) => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::{check_proof, System};
    use crate::syntax::{parse_any_term, translate, Formula};

    #[test]
    fn small_formulas() {
        for f in Formula::enumerate(&["p", "q"], 2) {
            let t = translate(&f);
            let pr = identity_proof(&t).unwrap();
            assert_eq!(pr.conclusion, seq(t.clone(), t.clone()));
            let r = check_proof(&pr, System::Sm);
            assert!(r.accepted && r.cut_free && r.subformula, "{f}: {:?}", r.diagnostics);
        }
    }

    #[test]
    fn k_formulas() {
        let t = parse_any_term("(cup (cap one (circ p)) (sim zero))").unwrap();
        let r = check_proof(&identity_proof(&t).unwrap(), System::Sm);
        assert!(r.accepted, "{:?}", r.diagnostics);
        assert!(identity_proof(&parse_any_term("(hand p q)").unwrap()).is_none());
    }
}
