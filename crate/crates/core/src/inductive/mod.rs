//! Signed generation trees and the analytic inductive test for inequalities
//! of the multi-type formula language.
//!
//! Variables are DL atoms and K-sorted formula letters (`?a`). Constants
//! are leaves that carry no variable and are never critical.

mod oracle;

use std::fmt;

use crate::exec::Exec;
use crate::syntax::{unicode, Conn, Polarity, Term};

pub use oracle::{brute_force_inductive, check_witness, inequalities_over_one_variable};

/// Skeleton roles of Table-1 style node classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Skeleton {
    DeltaAdjoint,
    Slr,
}

/// PIA roles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pia {
    Sra,
    Srr,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NodeClass {
    /// A variable.
    Leaf,
    /// A constant.
    Constant,
    Inner {
        skeleton: Option<Skeleton>,
        pia: Option<Pia>,
    },
}

/// Classification of a node with head `c` and sign `sign`.
pub fn classify_node(c: Conn, sign: Polarity) -> NodeClass {
    use Conn::*;
    use Polarity::*;
    let (skeleton, pia) = match (sign, c) {
        (Pos, Or | Cup) => (Some(Skeleton::DeltaAdjoint), Some(Pia::Srr)),
        (Neg, And | Cap) => (Some(Skeleton::DeltaAdjoint), Some(Pia::Srr)),
        (Pos, And | Cap | Circ | Sim) => (Some(Skeleton::Slr), Some(Pia::Sra)),
        (Neg, Or | Cup | Circ | Sim) => (Some(Skeleton::Slr), Some(Pia::Sra)),
        (Pos, Box) => (None, Some(Pia::Sra)),
        (Neg, Box) => (Some(Skeleton::Slr), None),
        (_, Top | Bot | One | Zero) => return NodeClass::Constant,
        _ => (None, None),
    };
    NodeClass::Inner { skeleton, pia }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedTree {
    pub term: Term,
    pub sign: Polarity,
    pub class: NodeClass,
    pub children: Vec<SignedTree>,
}

/// The signed generation tree of `t` with root sign `sign`.
pub fn signed_tree(t: &Term, sign: Polarity) -> SignedTree {
    let (class, children) = match t {
        Term::Atom(_) | Term::Meta(_) => (NodeClass::Leaf, vec![]),
        Term::Const(c) => (classify_node(*c, sign), vec![]),
        Term::Unary(c, a) => (
            classify_node(*c, sign),
            vec![signed_tree(a, sign.compose(c.polarity(0)))],
        ),
        Term::Binary(c, a, b) => (
            classify_node(*c, sign),
            vec![
                signed_tree(a, sign.compose(c.polarity(0))),
                signed_tree(b, sign.compose(c.polarity(1))),
            ],
        ),
    };
    SignedTree {
        term: t.clone(),
        sign,
        class,
        children,
    }
}

impl SignedTree {
    /// Every root-to-leaf path, as child-index sequences.
    pub fn branches(&self) -> Vec<Vec<usize>> {
        if self.children.is_empty() {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for (i, c) in self.children.iter().enumerate() {
            for mut b in c.branches() {
                b.insert(0, i);
                out.push(b);
            }
        }
        out
    }

    /// The nodes along `path`, root first, leaf last.
    pub fn nodes(&self, path: &[usize]) -> Vec<&SignedTree> {
        let mut out = vec![self];
        let mut cur = self;
        for &i in path {
            cur = &cur.children[i];
            out.push(cur);
        }
        out
    }

    /// Signed variable leaves below this node.
    pub fn leaves(&self) -> Vec<(&Term, Polarity)> {
        if self.class == NodeClass::Leaf {
            return vec![(&self.term, self.sign)];
        }
        self.children.iter().flat_map(|c| c.leaves()).collect()
    }

    /// The same tree with every sign flipped.
    pub fn flipped(&self) -> SignedTree {
        signed_tree(&self.term, self.sign.flip())
    }
}

/// An order type: `Pos` is 1, `Neg` is ∂.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrderType(pub Vec<Polarity>);

impl OrderType {
    pub fn opposite(&self) -> OrderType {
        OrderType(self.0.iter().map(|p| p.flip()).collect())
    }

    /// Whether the signed leaf `(i, sign)` is critical.
    pub fn critical(&self, i: usize, sign: Polarity) -> bool {
        self.0[i] == sign
    }
}

impl fmt::Display for OrderType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<&str> = self
            .0
            .iter()
            .map(|p| match p {
                Polarity::Pos => "1",
                Polarity::Neg => "∂",
            })
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// `+lhs`
    Lhs,
    /// `−rhs`
    Rhs,
}

/// How one branch splits: the first `skeleton` non-leaf nodes from the
/// root form the Skeleton path, the remaining ones the PIA path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchSplit {
    pub side: Side,
    pub path: Vec<usize>,
    pub skeleton: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InductiveWitness {
    pub vars: Vec<Term>,
    pub epsilon: OrderType,
    /// `(k, i)` means `vars[k] <Ω vars[i]`.
    pub omega: Vec<(usize, usize)>,
    pub branches: Vec<BranchSplit>,
}

impl InductiveWitness {
    pub fn omega_text(&self) -> String {
        let pairs: Vec<String> = self
            .omega
            .iter()
            .map(|&(k, i)| format!("({}, {})", unicode(&self.vars[k]), unicode(&self.vars[i])))
            .collect();
        format!("{{{}}}", pairs.join(", "))
    }
}

impl fmt::Display for InductiveWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vars: Vec<String> = self.vars.iter().map(unicode).collect();
        write!(
            f,
            "vars ({}) ε = {} Ω = {}",
            vars.join(", "),
            self.epsilon,
            self.omega_text()
        )
    }
}

/// The distinct variables of `terms`, sorted.
pub fn variables(terms: &[&Term]) -> Vec<Term> {
    let mut out = Vec::new();
    for t in terms {
        t.visit(&mut |n: &Term| {
            if matches!(n, Term::Atom(_) | Term::Meta(_)) && !out.contains(n) {
                out.push(n.clone());
            }
        });
    }
    out.sort();
    out
}

/// Candidate strict orders: the linear orders on `n` variables, as lists
/// of pairs, in lexicographic order of permutations.
fn linear_orders(n: usize) -> Vec<Vec<(usize, usize)>> {
    fn perms(rest: &mut Vec<usize>, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(acc.clone());
            return;
        }
        for j in 0..rest.len() {
            let x = rest.remove(j);
            acc.push(x);
            perms(rest, acc, out);
            acc.pop();
            rest.insert(j, x);
        }
    }
    let mut ps = Vec::new();
    perms(&mut (0..n).collect(), &mut Vec::new(), &mut ps);
    ps.into_iter()
        .map(|p| {
            let mut pairs = Vec::new();
            for a in 0..n {
                for b in a + 1..n {
                    pairs.push((p[a], p[b]));
                }
            }
            pairs.sort();
            pairs
        })
        .collect()
}

fn order_types(n: usize) -> Vec<OrderType> {
    (0..1usize << n)
        .map(|m| {
            OrderType(
                (0..n)
                    .map(|i| if m >> (n - 1 - i) & 1 == 0 { Polarity::Pos } else { Polarity::Neg })
                    .collect(),
            )
        })
        .collect()
}

struct Ctx<'a> {
    vars: &'a [Term],
    eps: &'a OrderType,
    omega: &'a [(usize, usize)],
}

impl Ctx<'_> {
    fn index(&self, v: &Term) -> usize {
        self.vars.iter().position(|x| x == v).expect("known variable")
    }

    /// Clause 2 for the SRR node `node`, entered through child `through`,
    /// on a critical branch with leaf variable `i`.
    fn srr_ok(&self, node: &SignedTree, through: usize, i: usize) -> bool {
        let side = &node.children[1 - through];
        side.leaves().iter().all(|(v, s)| {
            let k = self.index(v);
            !self.eps.critical(k, *s) && self.omega.contains(&(k, i))
        })
    }

    /// The split of one branch, preferring the longest PIA part.
    fn split(&self, tree: &SignedTree, path: &[usize]) -> Option<usize> {
        let nodes = tree.nodes(path);
        let leaf = nodes.last().expect("nonempty");
        let inner = &nodes[..nodes.len() - 1];
        let critical = match leaf.class {
            NodeClass::Leaf => {
                let i = self.index(&leaf.term);
                self.eps.critical(i, leaf.sign).then_some(i)
            }
            _ => None,
        };
        (0..=inner.len()).find(|&k| {
            let skel_ok = inner[..k].iter().all(|n| {
                matches!(n.class, NodeClass::Inner { skeleton: Some(_), .. })
            });
            let pia_ok = inner[k..].iter().enumerate().all(|(j, n)| match n.class {
                NodeClass::Inner { pia: Some(Pia::Sra), .. } => true,
                NodeClass::Inner { pia: Some(Pia::Srr), .. } => match critical {
                    Some(i) => self.srr_ok(n, path[k + j], i),
                    None => true,
                },
                _ => false,
            });
            skel_ok && pia_ok
        })
    }
}

/// Clause check of one (ε, Ω) candidate on `+lhs` and `−rhs`.
fn witness_for(
    lhs: &SignedTree,
    rhs: &SignedTree,
    vars: &[Term],
    eps: &OrderType,
    omega: &[(usize, usize)],
) -> Option<InductiveWitness> {
    let ctx = Ctx { vars, eps, omega };
    let mut branches = Vec::new();
    for (side, tree) in [(Side::Lhs, lhs), (Side::Rhs, rhs)] {
        for path in tree.branches() {
            let skeleton = ctx.split(tree, &path)?;
            branches.push(BranchSplit {
                side,
                path,
                skeleton,
            });
        }
    }
    Some(InductiveWitness {
        vars: vars.to_vec(),
        epsilon: eps.clone(),
        omega: omega.to_vec(),
        branches,
    })
}

/// The first (ε, Ω) witness, in a fixed candidate order, making `lhs ≤ rhs`
/// analytic inductive; Ω ranges over linear orders.
pub fn is_analytic_inductive(lhs: &Term, rhs: &Term) -> Option<InductiveWitness> {
    is_analytic_inductive_with(lhs, rhs, Exec::Sequential)
}

pub fn is_analytic_inductive_with(lhs: &Term, rhs: &Term, exec: Exec) -> Option<InductiveWitness> {
    let vars = variables(&[lhs, rhs]);
    let (l, r) = (signed_tree(lhs, Polarity::Pos), signed_tree(rhs, Polarity::Neg));
    let mut candidates = Vec::new();
    for eps in order_types(vars.len()) {
        for omega in linear_orders(vars.len()) {
            candidates.push((eps.clone(), omega));
        }
    }
    exec.find_map_first(&candidates, |(eps, omega)| witness_for(&l, &r, &vars, eps, omega))
}

/// The heterogeneous conditions H6a, H6b, H7 and H8 as multi-type
/// inequalities, with their names.
pub fn heterogeneous_conditions() -> Vec<(&'static str, Term, Term)> {
    use Conn::*;
    let p = Term::atom("p");
    let a = Term::Meta(crate::syntax::MetaVar::from_letter("a").expect("K letter"));
    let bc = |t: Term| Term::unary(Box, Term::unary(Circ, t));
    vec![
        ("H6a", p.clone(), bc(p.clone())),
        ("H6b", bc(p.clone()), p.clone()),
        (
            "H7",
            Term::binary(
                And,
                Term::unary(Box, Term::unary(Sim, Term::unary(Circ, p.clone()))),
                p,
            ),
            Term::konst(Bot),
        ),
        (
            "H8",
            Term::konst(Top),
            Term::binary(
                Or,
                Term::unary(Box, Term::unary(Sim, a.clone())),
                Term::unary(Box, a),
            ),
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_any_term;

    fn t(s: &str) -> Term {
        parse_any_term(s).unwrap()
    }

    #[test]
    fn conjunction_tree() {
        let s = signed_tree(&t("(and p q)"), Polarity::Pos);
        assert_eq!(
            s.class,
            NodeClass::Inner {
                skeleton: Some(Skeleton::Slr),
                pia: Some(Pia::Sra)
            }
        );
        assert!(s.children.iter().all(|c| c.sign == Polarity::Pos));
    }

    #[test]
    fn negation_flips() {
        let s = signed_tree(&t("(sim (circ p))"), Polarity::Neg);
        assert_eq!(s.children[0].sign, Polarity::Pos);
        let b = signed_tree(&t("(box one)"), Polarity::Pos);
        assert_eq!(b.children[0].sign, Polarity::Pos);
    }

    #[test]
    fn heterogeneous_conditions_are_analytic() {
        for (name, l, r) in heterogeneous_conditions() {
            let w = is_analytic_inductive(&l, &r).unwrap_or_else(|| panic!("{name}"));
            assert!(check_witness(&l, &r, &w), "{name}");
        }
    }

    #[test]
    fn meet_below_left_conjunct() {
        let w = is_analytic_inductive(&t("(and p q)"), &t("p")).unwrap();
        assert_eq!(w.vars.len(), 2);
    }

    #[test]
    fn failing_inequality() {
        // −□ (Skeleton only) below +□ (PIA only)
        let l = t("(box (sim (circ (box (circ p)))))");
        let r = t("p");
        assert!(is_analytic_inductive(&l, &r).is_none());
        assert!(!brute_force_inductive(&l, &r));
    }

    #[test]
    fn agrees_with_oracle_on_one_variable() {
        let mut yes = 0;
        for (l, r) in inequalities_over_one_variable(2) {
            let w = is_analytic_inductive(&l, &r);
            assert_eq!(w.is_some(), brute_force_inductive(&l, &r), "{l} ≤ {r}");
            if let Some(w) = w {
                assert!(check_witness(&l, &r, &w));
                yes += 1;
            }
        }
        assert!(yes > 0);
    }

    #[test]
    fn parallel_agrees() {
        let l = t("(and (box (sim (circ p))) q)");
        let r = t("(or p (box (circ q)))");
        assert_eq!(
            is_analytic_inductive(&l, &r),
            is_analytic_inductive_with(&l, &r, Exec::Parallel)
        );
    }
}
