//! Single-type formulas and the translation into the multi-type language.

use std::fmt;
use std::sync::Arc;

use super::conn::Conn;
use super::term::{Atom, Term};

/// `A ::= p | ⊤ | ⊥ | ¬A | A ∧ A | A ∨ A`
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Atom(Atom),
    Top,
    Bot,
    Neg(Arc<Formula>),
    And(Arc<Formula>, Arc<Formula>),
    Or(Arc<Formula>, Arc<Formula>),
}

impl Formula {
    pub fn atom(name: &str) -> Formula {
        Formula::Atom(Arc::from(name))
    }

    pub fn neg(a: Formula) -> Formula {
        Formula::Neg(Arc::new(a))
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Arc::new(a), Arc::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Arc::new(a), Arc::new(b))
    }

    /// Height, counting a leaf as 1.
    pub fn depth(&self) -> usize {
        match self {
            Formula::Neg(a) => 1 + a.depth(),
            Formula::And(a, b) | Formula::Or(a, b) => 1 + a.depth().max(b.depth()),
            _ => 1,
        }
    }

    pub fn neg_count(&self) -> usize {
        match self {
            Formula::Neg(a) => 1 + a.neg_count(),
            Formula::And(a, b) | Formula::Or(a, b) => a.neg_count() + b.neg_count(),
            _ => 0,
        }
    }

    pub fn atoms(&self) -> Vec<Atom> {
        let mut out = Vec::new();
        fn go(f: &Formula, out: &mut Vec<Atom>) {
            match f {
                Formula::Atom(a) => out.push(a.clone()),
                Formula::Neg(a) => go(a, out),
                Formula::And(a, b) | Formula::Or(a, b) => {
                    go(a, out);
                    go(b, out);
                }
                _ => {}
            }
        }
        go(self, &mut out);
        out.sort();
        out.dedup();
        out
    }

    /// Every formula over `atoms` with depth at most `depth`, shallow first.
    pub fn enumerate(atoms: &[&str], depth: usize) -> Vec<Formula> {
        if depth == 0 {
            return Vec::new();
        }
        let mut layers: Vec<Vec<Formula>> = Vec::new();
        let mut leaves: Vec<Formula> = atoms.iter().map(|a| Formula::atom(a)).collect();
        leaves.push(Formula::Top);
        leaves.push(Formula::Bot);
        layers.push(leaves);
        for d in 1..depth {
            let below: Vec<&Formula> = layers.iter().flatten().collect();
            let prev = &layers[d - 1];
            let mut next = Vec::new();
            for a in prev {
                next.push(Formula::neg(a.clone()));
            }
            // binary nodes whose taller child sits exactly one layer down
            for a in &below {
                for b in &below {
                    if a.depth() == d || b.depth() == d {
                        next.push(Formula::and((*a).clone(), (*b).clone()));
                        next.push(Formula::or((*a).clone(), (*b).clone()));
                    }
                }
            }
            layers.push(next);
        }
        layers.into_iter().flatten().collect()
    }
}

/// τ: homomorphic on atoms, constants, ∧ and ∨, with ¬A ↦ □∼∘A^τ.
pub fn translate(a: &Formula) -> Term {
    match a {
        Formula::Atom(p) => Term::Atom(p.clone()),
        Formula::Top => Term::Const(Conn::Top),
        Formula::Bot => Term::Const(Conn::Bot),
        Formula::Neg(b) => Term::unary(
            Conn::Box,
            Term::unary(Conn::Sim, Term::unary(Conn::Circ, translate(b))),
        ),
        Formula::And(x, y) => Term::binary(Conn::And, translate(x), translate(y)),
        Formula::Or(x, y) => Term::binary(Conn::Or, translate(x), translate(y)),
    }
}

/// Left inverse of [`translate`] on its image.
pub fn untranslate(t: &Term) -> Option<Formula> {
    Some(match t {
        Term::Atom(p) => Formula::Atom(p.clone()),
        Term::Const(Conn::Top) => Formula::Top,
        Term::Const(Conn::Bot) => Formula::Bot,
        Term::Unary(Conn::Box, s) => match &**s {
            Term::Unary(Conn::Sim, c) => match &**c {
                Term::Unary(Conn::Circ, b) => Formula::neg(untranslate(b)?),
                _ => return None,
            },
            _ => return None,
        },
        Term::Binary(Conn::And, x, y) => Formula::and(untranslate(x)?, untranslate(y)?),
        Term::Binary(Conn::Or, x, y) => Formula::or(untranslate(x)?, untranslate(y)?),
        _ => return None,
    })
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Atom(p) => write!(f, "{p}"),
            Formula::Top => f.write_str("top"),
            Formula::Bot => f.write_str("bot"),
            Formula::Neg(a) => write!(f, "(not {a})"),
            Formula::And(a, b) => write!(f, "(and {a} {b})"),
            Formula::Or(a, b) => write!(f, "(or {a} {b})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_counts() {
        let two = ["p", "q"];
        assert_eq!(Formula::enumerate(&two, 1).len(), 4);
        assert_eq!(Formula::enumerate(&two, 2).len(), 4 + 4 + 2 * 16);
        let d3 = Formula::enumerate(&two, 3);
        assert_eq!(d3.len(), 4 + 40 * 40 * 2 + 40);
        assert!(d3.iter().all(|f| f.depth() <= 3));
        let mut sorted = d3.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), d3.len());
    }

    #[test]
    fn translation_examples() {
        let p = Formula::atom("p");
        assert_eq!(translate(&p), Term::atom("p"));
        let np = translate(&Formula::neg(p.clone()));
        assert_eq!(super::super::render(&np), "(box (sim (circ p)))");
        let nnp = translate(&Formula::neg(Formula::neg(p)));
        assert_eq!(
            super::super::render(&nnp),
            "(box (sim (circ (box (sim (circ p))))))"
        );
    }
}
