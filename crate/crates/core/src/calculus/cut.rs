//! Principal cut reduction and generators of principal cuts.
//!
//! A cut is principal when both premises end with the introduction of the
//! cut formula. Each such cut is rewritten into cuts on immediate
//! subformulas (or removed, for atoms and constants), bridged by display
//! and exchange steps.

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;

use crate::syntax::{Conn, Sequent, Sort, Term};

use super::identity::identity_proof;
use super::proof::ProofTree;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CutPattern {
    Atom,
    Constant,
    Sim,
    Binary,
    Box,
    Circ,
}

pub const CUT_PATTERNS: [CutPattern; 6] = [
    CutPattern::Atom,
    CutPattern::Constant,
    CutPattern::Sim,
    CutPattern::Binary,
    CutPattern::Box,
    CutPattern::Circ,
];

impl CutPattern {
    pub fn name(self) -> &'static str {
        match self {
            CutPattern::Atom => "atoms",
            CutPattern::Constant => "constants",
            CutPattern::Sim => "sim",
            CutPattern::Binary => "binary",
            CutPattern::Box => "box",
            CutPattern::Circ => "circ",
        }
    }
}

impl fmt::Display for CutPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum CutError {
    #[error("no node at path {0:?}")]
    NoSuchNode(Vec<usize>),
    #[error("node is `{0}`, not a cut")]
    NotACut(String),
    #[error("cut on {formula} is not principal on both sides (premises end with {left} and {right})")]
    NotPrincipal {
        formula: String,
        left: String,
        right: String,
    },
}

fn seq(a: Term, b: Term) -> Sequent {
    Sequent::new(a, b)
}

fn un(rule: &str, s: Sequent, p: ProofTree) -> ProofTree {
    ProofTree::node(rule, s, vec![p])
}

fn cut_rule(sort: Sort) -> &'static str {
    match sort {
        Sort::Dl => "Cut_L",
        Sort::K => "Cut_D",
    }
}

fn cut(left: ProofTree, right: ProofTree) -> ProofTree {
    let s = seq(left.conclusion.ant.clone(), right.conclusion.suc.clone());
    let r = cut_rule(left.conclusion.suc.sort());
    ProofTree::node(r, s, vec![left, right])
}

/// The cut formula of a cut node.
pub fn cut_formula(t: &ProofTree) -> Option<&Term> {
    if t.rule != "Cut_L" && t.rule != "Cut_D" {
        return None;
    }
    Some(&t.premises.first()?.conclusion.suc)
}

/// Which displayed reduction applies to the cut at the root of `t`.
pub fn cut_pattern(t: &ProofTree) -> Result<CutPattern, CutError> {
    use Conn::*;
    let f = cut_formula(t).ok_or_else(|| CutError::NotACut(t.rule.clone()))?;
    let (l, r) = (t.premises[0].rule.as_str(), t.premises[1].rule.as_str());
    let ok = match f {
        Term::Atom(_) => (l == "Id" && r == "Id").then_some(CutPattern::Atom),
        Term::Const(c) => {
            let want = match c {
                Top => ("top_r", "top_l"),
                Bot => ("bot_r", "bot_l"),
                One => ("one_r", "one_l"),
                Zero => ("zero_r", "zero_l"),
                _ => ("", ""),
            };
            ((l, r) == want).then_some(CutPattern::Constant)
        }
        Term::Unary(c, _) => {
            let (want, p) = match c {
                Sim => (("sim_r", "sim_l"), CutPattern::Sim),
                Box => (("box_r", "box_l"), CutPattern::Box),
                Circ => (("circ_r", "circ_l"), CutPattern::Circ),
                _ => (("", ""), CutPattern::Sim),
            };
            ((l, r) == want).then_some(p)
        }
        Term::Binary(c, _, _) => {
            let want = match c {
                And => ("and_r", "and_l"),
                Or => ("or_r", "or_l"),
                Cap => ("cap_r", "cap_l"),
                Cup => ("cup_r", "cup_l"),
                _ => ("", ""),
            };
            ((l, r) == want).then_some(CutPattern::Binary)
        }
        Term::Meta(_) => None,
    };
    ok.ok_or_else(|| CutError::NotPrincipal {
        formula: f.to_string(),
        left: l.to_string(),
        right: r.to_string(),
    })
}

/// Rewrites the principal cut at `path` one step. The conclusion of the
/// tree is unchanged and every new cut is on a proper subformula of the
/// old cut formula.
pub fn reduce_cut(t: &ProofTree, path: &[usize]) -> Result<ProofTree, CutError> {
    let node = t.get(path).ok_or_else(|| CutError::NoSuchNode(path.to_vec()))?;
    let new = reduce_here(node)?;
    debug_assert_eq!(new.conclusion, node.conclusion);
    Ok(t.replace(path, new).expect("path checked above"))
}

fn reduce_here(t: &ProofTree) -> Result<ProofTree, CutError> {
    use Conn::*;
    let pattern = cut_pattern(t)?;
    let f = cut_formula(t).expect("pattern implies a cut").clone();
    let (l, r) = (&t.premises[0], &t.premises[1]);
    let u = |c: Conn, x: &Term| Term::unary(c, x.clone());
    let b = |c: Conn, x: &Term, y: &Term| Term::binary(c, x.clone(), y.clone());
    Ok(match pattern {
        CutPattern::Atom => l.clone(),
        CutPattern::Constant => match f {
            Term::Const(Top | One) => r.premises[0].clone(),
            _ => l.premises[0].clone(),
        },
        CutPattern::Sim => {
            let Term::Unary(_, a) = &f else { unreachable!() };
            let (p1, p2) = (l.premises[0].clone(), r.premises[0].clone());
            let (g, d) = (&t.conclusion.ant, &t.conclusion.suc);
            let s1 = un("adj_star_l.dn", seq(u(TStar, d), (**a).clone()), p2);
            let s2 = un("adj_star_r.dn", seq((**a).clone(), u(TStar, g)), p1);
            un("cont.up", t.conclusion.clone(), cut(s1, s2))
        }
        CutPattern::Box => {
            let Term::Unary(_, a) = &f else { unreachable!() };
            let (p1, p2) = (l.premises[0].clone(), r.premises[0].clone());
            let x = &t.conclusion.ant;
            let s1 = un("adj_LD.dn", seq(u(HLoz, x), (**a).clone()), p1);
            un("adj_LD.up", t.conclusion.clone(), cut(s1, p2))
        }
        CutPattern::Circ => {
            let Term::Unary(_, a) = &f else { unreachable!() };
            let (p1, p2) = (l.premises[0].clone(), r.premises[0].clone());
            let (g, d) = (&t.conclusion.ant, &t.conclusion.suc);
            let s1 = un("adj_DL_r.dn", seq(u(HBulL, g), (**a).clone()), p1);
            let s2 = un("adj_DL_l.dn", seq((**a).clone(), u(CBulR, d)), p2);
            un("tbul", t.conclusion.clone(), cut(s1, s2))
        }
        CutPattern::Binary => {
            let Term::Binary(c, a1, a2) = &f else { unreachable!() };
            let (a1, a2) = (&**a1, &**a2);
            match c {
                And | Cap => {
                    let (two, arrow, res, exch) = if *c == And {
                        (HAnd, CArr, "res_L_l", "E_L_l")
                    } else {
                        (HCap, CSup, "res_D_l", "E_D_l")
                    };
                    let (p1, p2, p3) = (
                        l.premises[0].clone(),
                        l.premises[1].clone(),
                        r.premises[0].clone(),
                    );
                    let x = p1.conclusion.ant.clone();
                    let y = p2.conclusion.ant.clone();
                    let z = t.conclusion.suc.clone();
                    let dn = format!("{res}.dn");
                    let up = format!("{res}.up");
                    let s1 = un(&dn, seq(a2.clone(), b(arrow, a1, &z)), p3);
                    let s2 = cut(p2, s1);
                    let s3 = un(&up, seq(b(two, a1, &y), z.clone()), s2);
                    let s4 = un(exch, seq(b(two, &y, a1), z.clone()), s3);
                    let s5 = un(&dn, seq(a1.clone(), b(arrow, &y, &z)), s4);
                    let s6 = cut(p1, s5);
                    let s7 = un(&up, seq(b(two, &y, &x), z.clone()), s6);
                    un(exch, t.conclusion.clone(), s7)
                }
                _ => {
                    let (two, excl, res, exch) = if *c == Or {
                        (CVee, HExcl, "res_L_r", "E_L_r")
                    } else {
                        (CCup, HSup, "res_D_r", "E_D_r")
                    };
                    let (p1, p2, p3) = (
                        l.premises[0].clone(),
                        r.premises[0].clone(),
                        r.premises[1].clone(),
                    );
                    let x = t.conclusion.ant.clone();
                    let y = p2.conclusion.suc.clone();
                    let z = p3.conclusion.suc.clone();
                    let dn = format!("{res}.dn");
                    let up = format!("{res}.up");
                    let s1 = un(&dn, seq(b(excl, a1, &x), a2.clone()), p1);
                    let s2 = cut(s1, p3);
                    let s3 = un(&up, seq(x.clone(), b(two, a1, &z)), s2);
                    let s4 = un(exch, seq(x.clone(), b(two, &z, a1)), s3);
                    let s5 = un(&dn, seq(b(excl, &z, &x), a1.clone()), s4);
                    let s6 = cut(s5, p2);
                    let s7 = un(&up, seq(x.clone(), b(two, &z, &y)), s6);
                    un(exch, t.conclusion.clone(), s7)
                }
            }
        }
    })
}

/// Complexities of all cut formulas in `t`.
pub fn cut_complexities(t: &ProofTree) -> Vec<usize> {
    let mut out = Vec::new();
    t.walk(&mut |_, n| {
        if let Some(f) = cut_formula(n) {
            out.push(f.complexity());
        }
    });
    out.sort_unstable();
    out
}

/// Strict Dershowitz–Manna multiset ordering on naturals: `m < n` iff the
/// multisets differ and every element with more copies in `m` is dominated
/// by a larger element with more copies in `n`.
pub fn dm_less(m: &[usize], n: &[usize]) -> bool {
    let mut diff: BTreeMap<usize, i64> = BTreeMap::new();
    for &x in m {
        *diff.entry(x).or_default() += 1;
    }
    for &x in n {
        *diff.entry(x).or_default() -= 1;
    }
    diff.retain(|_, d| *d != 0);
    if diff.is_empty() {
        return false;
    }
    diff.iter()
        .filter(|(_, &d)| d > 0)
        .all(|(&x, _)| diff.iter().any(|(&y, &d)| d < 0 && y > x))
}

/// A random formula of the given sort and depth at most `depth` (a leaf has
/// depth 1).
pub fn random_formula<R: Rng>(rng: &mut R, sort: Sort, depth: usize) -> Term {
    use Conn::*;
    const ATOMS: [&str; 3] = ["p", "q", "r"];
    let leaf = |rng: &mut R| match sort {
        Sort::Dl => match rng.gen_range(0..8) {
            0 => Term::konst(Top),
            1 => Term::konst(Bot),
            i => Term::atom(ATOMS[i % 3]),
        },
        Sort::K => Term::konst(if rng.gen_bool(0.5) { One } else { Zero }),
    };
    if depth <= 1 {
        return leaf(rng);
    }
    let d = depth - 1;
    match (sort, rng.gen_range(0..5)) {
        (Sort::Dl, 0) => leaf(rng),
        (Sort::Dl, 1) => Term::unary(Box, random_formula(rng, Sort::K, d)),
        (Sort::Dl, i) => {
            let c = if i % 2 == 0 { And } else { Or };
            Term::binary(c, random_formula(rng, sort, d), random_formula(rng, sort, d))
        }
        (Sort::K, 0) => Term::unary(Sim, random_formula(rng, sort, d)),
        (Sort::K, 1 | 2) => Term::unary(Circ, random_formula(rng, Sort::Dl, d)),
        (Sort::K, i) => {
            let c = if i == 3 { Cap } else { Cup };
            Term::binary(c, random_formula(rng, sort, d), random_formula(rng, sort, d))
        }
    }
}

fn id(a: &Term) -> ProofTree {
    identity_proof(a).expect("formula")
}

fn weak_names(sort: Sort) -> (Conn, &'static str, Conn, &'static str) {
    match sort {
        Sort::Dl => (Conn::HAnd, "W_L_l", Conn::CVee, "W_L_r"),
        Sort::K => (Conn::HCap, "W_D_l", Conn::CCup, "W_D_r"),
    }
}

/// Possibly weakens the antecedent of `t` with a random formula.
fn pad_left<R: Rng>(rng: &mut R, t: ProofTree) -> ProofTree {
    if rng.gen_bool(0.5) {
        return t;
    }
    let sort = t.conclusion.sort();
    let (two, w, _, _) = weak_names(sort);
    let z = random_formula(rng, sort, 2);
    let s = seq(Term::binary(two, t.conclusion.ant.clone(), z), t.conclusion.suc.clone());
    un(w, s, t)
}

/// Possibly weakens the succedent of `t` with a random formula.
fn pad_right<R: Rng>(rng: &mut R, t: ProofTree) -> ProofTree {
    if rng.gen_bool(0.5) {
        return t;
    }
    let sort = t.conclusion.sort();
    let (_, _, two, w) = weak_names(sort);
    let z = random_formula(rng, sort, 2);
    let s = seq(t.conclusion.ant.clone(), Term::binary(two, t.conclusion.suc.clone(), z));
    un(w, s, t)
}

/// A cut-free proof of `X ⊢ A ∗ B` or `A ∗ B ⊢ X`, with `∗` the structural
/// pair `two` and the other component supplied by weakening.
fn pair_proof<R: Rng>(rng: &mut R, a: &Term, b: &Term, left: bool) -> ProofTree {
    let sort = a.sort();
    let (hat, wl, check, wr) = weak_names(sort);
    let (el, er) = match sort {
        Sort::Dl => ("E_L_l", "E_L_r"),
        Sort::K => ("E_D_l", "E_D_r"),
    };
    let pick_first = rng.gen_bool(0.5);
    let (kept, other) = if pick_first { (a, b) } else { (b, a) };
    if left {
        // kept ∘ other ⊢ Y from kept ⊢ Y
        let p = pad_right(rng, id(kept));
        let y = p.conclusion.suc.clone();
        let w = un(wl, seq(Term::binary(hat, kept.clone(), other.clone()), y.clone()), p);
        if pick_first {
            w
        } else {
            un(el, seq(Term::binary(hat, a.clone(), b.clone()), y), w)
        }
    } else {
        let p = pad_left(rng, id(kept));
        let x = p.conclusion.ant.clone();
        let w = un(wr, seq(x.clone(), Term::binary(check, kept.clone(), other.clone())), p);
        if pick_first {
            w
        } else {
            un(er, seq(x, Term::binary(check, a.clone(), b.clone())), w)
        }
    }
}

/// A random principal cut of the given pattern. Returns the tree and the
/// path to the cut, which sometimes sits under a weakening.
pub fn cut_instance<R: Rng>(rng: &mut R, pattern: CutPattern) -> (ProofTree, Vec<usize>) {
    use Conn::*;
    let u = |c: Conn, x: &Term| Term::unary(c, x.clone());
    let c = match pattern {
        CutPattern::Atom => {
            let p = Term::atom(["p", "q", "r"][rng.gen_range(0..3)]);
            cut(id(&p), id(&p))
        }
        CutPattern::Constant => match rng.gen_range(0..4) {
            0 | 1 => {
                let (c, hat, ax, intro) = if rng.gen_bool(0.5) {
                    (Top, HTop, "top_r", "top_l")
                } else {
                    (One, HOne, "one_r", "one_l")
                };
                let k = Term::konst(c);
                let axiom = ProofTree::leaf(ax, seq(Term::konst(hat), k.clone()));
                let pi = pad_right(rng, axiom.clone());
                let r = un(intro, seq(k, pi.conclusion.suc.clone()), pi);
                cut(axiom, r)
            }
            _ => {
                let (c, check, ax, intro) = if rng.gen_bool(0.5) {
                    (Bot, CBot, "bot_l", "bot_r")
                } else {
                    (Zero, CZero, "zero_l", "zero_r")
                };
                let k = Term::konst(c);
                let axiom = ProofTree::leaf(ax, seq(k.clone(), Term::konst(check)));
                let pi = pad_left(rng, axiom.clone());
                let l = un(intro, seq(pi.conclusion.ant.clone(), k), pi);
                cut(l, axiom)
            }
        },
        CutPattern::Sim => {
            let a = random_formula(rng, Sort::K, 3);
            let na = u(Sim, &a);
            let sa = u(TStar, &a);
            let cont = un("cont.dn", seq(sa.clone(), sa.clone()), id(&a));
            let p1 = pad_left(rng, un("sim_l", seq(na.clone(), sa.clone()), cont.clone()));
            let p2 = pad_right(rng, un("sim_r", seq(sa.clone(), na.clone()), cont));
            let l = un("sim_r", seq(p1.conclusion.ant.clone(), na.clone()), p1);
            let r = un("sim_l", seq(na, p2.conclusion.suc.clone()), p2);
            cut(l, r)
        }
        CutPattern::Box => {
            let a = random_formula(rng, Sort::K, 3);
            let ba = u(Box, &a);
            let p1 = pad_left(rng, un("box_l", seq(ba.clone(), u(CBox, &a)), id(&a)));
            let p2 = pad_right(rng, id(&a));
            let l = un("box_r", seq(p1.conclusion.ant.clone(), ba.clone()), p1);
            let r = un("box_l", seq(ba, u(CBox, &p2.conclusion.suc)), p2);
            cut(l, r)
        }
        CutPattern::Circ => {
            let a = random_formula(rng, Sort::Dl, 3);
            let ca = u(Circ, &a);
            let ta = u(TCirc, &a);
            let t = un("tcirc", seq(ta.clone(), ta.clone()), id(&a));
            let p1 = pad_left(rng, un("circ_l", seq(ca.clone(), ta.clone()), t));
            let inner = pad_right(rng, id(&a));
            let p2 = un(
                "tcirc",
                seq(ta.clone(), u(TCirc, &inner.conclusion.suc)),
                inner,
            );
            let l = un("circ_r", seq(p1.conclusion.ant.clone(), ca.clone()), p1);
            let r = un("circ_l", seq(ca, p2.conclusion.suc.clone()), p2);
            cut(l, r)
        }
        CutPattern::Binary => {
            let (c, sort) = [(And, Sort::Dl), (Or, Sort::Dl), (Cap, Sort::K), (Cup, Sort::K)]
                [rng.gen_range(0..4)];
            let a = random_formula(rng, sort, 2);
            let b = random_formula(rng, sort, 2);
            let f = Term::binary(c, a.clone(), b.clone());
            let (hat, check) = match sort {
                Sort::Dl => (HAnd, CVee),
                Sort::K => (HCap, CCup),
            };
            match c {
                And | Cap => {
                    let (intro_r, intro_l) = if c == And {
                        ("and_r", "and_l")
                    } else {
                        ("cap_r", "cap_l")
                    };
                    let p1 = pad_left(rng, id(&a));
                    let p2 = pad_left(rng, id(&b));
                    let x = Term::binary(hat, p1.conclusion.ant.clone(), p2.conclusion.ant.clone());
                    let l = ProofTree::node(intro_r, seq(x, f.clone()), vec![p1, p2]);
                    let p3 = pair_proof(rng, &a, &b, true);
                    let r = un(intro_l, seq(f, p3.conclusion.suc.clone()), p3);
                    cut(l, r)
                }
                _ => {
                    let (intro_r, intro_l) = if c == Or {
                        ("or_r", "or_l")
                    } else {
                        ("cup_r", "cup_l")
                    };
                    let p2 = pad_right(rng, id(&a));
                    let p3 = pad_right(rng, id(&b));
                    let y = Term::binary(check, p2.conclusion.suc.clone(), p3.conclusion.suc.clone());
                    let r = ProofTree::node(intro_l, seq(f.clone(), y), vec![p2, p3]);
                    let p1 = pair_proof(rng, &a, &b, false);
                    let l = un(intro_r, seq(p1.conclusion.ant.clone(), f), p1);
                    cut(l, r)
                }
            }
        }
    };
    if rng.gen_bool(0.5) {
        let s = c.conclusion.sort();
        let (hat, w, _, _) = weak_names(s);
        let z = random_formula(rng, s, 2);
        let conc = seq(Term::binary(hat, c.conclusion.ant.clone(), z), c.conclusion.suc.clone());
        (un(w, conc, c), vec![0])
    } else {
        (c, vec![])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::{check_proof, System};
    use crate::syntax::parse_sequent;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    #[test]
    fn atom_cut_disappears() {
        let p = Term::atom("p");
        let t = cut(id(&p), id(&p));
        let r = reduce_cut(&t, &[]).unwrap();
        assert_eq!(r.rule, "Id");
        assert!(cut_complexities(&r).is_empty());
    }

    #[test]
    fn conjunction_cut_keeps_conclusion() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..20 {
            let (t, path) = cut_instance(&mut rng, CutPattern::Binary);
            let r = reduce_cut(&t, &path).unwrap();
            assert_eq!(r.conclusion, t.conclusion);
            assert!(check_proof(&r, System::Sm).accepted);
        }
    }

    #[test]
    fn box_cut_goes_through_adjunction() {
        let mut rng = StdRng::seed_from_u64(3);
        let (t, path) = cut_instance(&mut rng, CutPattern::Box);
        let r = reduce_cut(&t, &path).unwrap();
        let node = r.get(&path).unwrap();
        assert_eq!(node.rule, "adj_LD.up");
        assert_eq!(node.premises[0].rule, "Cut_D");
    }

    #[test]
    fn non_principal_cut_rejected() {
        let a = parse_sequent("(seq (hand p q) p)").unwrap();
        let w = un("W_L_l", a, id(&Term::atom("p")));
        let t = cut(w, id(&Term::atom("p")));
        assert!(matches!(reduce_cut(&t, &[]), Err(CutError::NotPrincipal { .. })));
        assert!(matches!(reduce_cut(&t, &[0]), Err(CutError::NotACut(_))));
        assert!(matches!(reduce_cut(&t, &[5]), Err(CutError::NoSuchNode(_))));
    }

    #[test]
    fn dm_ordering() {
        assert!(dm_less(&[], &[3]));
        assert!(dm_less(&[2, 2, 2, 1], &[3]));
        assert!(!dm_less(&[3], &[3]));
        assert!(!dm_less(&[4], &[3, 3]));
        assert!(dm_less(&[3, 1], &[3, 2]));
    }
}
