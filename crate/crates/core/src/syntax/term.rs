//! Multi-type formulas, structures and sequents.
//!
//! A single tree type carries both levels: formula connectives may only have
//! formula children, structural connectives take structures, and a formula
//! may sit anywhere a structure of its sort is expected.

use std::fmt;
use std::sync::Arc;

use super::conn::{Conn, Level, Sort};

/// A propositional variable. Atoms are DL-sorted.
pub type Atom = Arc<str>;

/// What a schema letter may stand for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MetaKind {
    Structure,
    Formula,
    Atom,
}

/// A schema letter occurring in rule patterns.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MetaVar {
    pub name: Arc<str>,
    pub sort: Sort,
    pub kind: MetaKind,
}

impl MetaVar {
    /// Conventional reading of a letter: `X Y Z W` DL structures,
    /// `G D T P S` (Γ Δ Θ Π Σ) K structures, `A B` DL formulas,
    /// `a b` (α β) K formulas, `p q` atoms.
    pub fn from_letter(name: &str) -> Option<MetaVar> {
        let first = name.chars().next()?;
        let (sort, kind) = match first {
            'X' | 'Y' | 'Z' | 'W' | 'U' | 'V' => (Sort::Dl, MetaKind::Structure),
            'G' | 'D' | 'T' | 'P' | 'S' | 'R' => (Sort::K, MetaKind::Structure),
            'A' | 'B' | 'C' => (Sort::Dl, MetaKind::Formula),
            'a' | 'b' | 'c' => (Sort::K, MetaKind::Formula),
            'p' | 'q' => (Sort::Dl, MetaKind::Atom),
            _ => return None,
        };
        Some(MetaVar {
            name: Arc::from(name),
            sort,
            kind,
        })
    }
}

/// A multi-type formula, structure, or rule pattern.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Atom(Atom),
    Meta(MetaVar),
    Const(Conn),
    Unary(Conn, Arc<Term>),
    Binary(Conn, Arc<Term>, Arc<Term>),
}

/// Ill-sorted or ill-formed term.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SortError {
    #[error("sort mismatch: {conn} expects a {expected} argument, got {found} term {subterm}")]
    Mismatch {
        conn: &'static str,
        expected: Sort,
        found: Sort,
        subterm: String,
    },
    #[error("formula connective {conn} applied to structure {subterm}")]
    LevelMismatch { conn: &'static str, subterm: String },
    #[error("arity error: {conn} takes {expected} arguments, got {found}")]
    Arity {
        conn: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("expected a {expected} term, got {found} term {subterm}")]
    Expected {
        expected: Sort,
        found: Sort,
        subterm: String,
    },
}

impl Term {
    pub fn atom(name: &str) -> Term {
        Term::Atom(Arc::from(name))
    }

    pub fn konst(c: Conn) -> Term {
        debug_assert_eq!(c.arity(), 0);
        Term::Const(c)
    }

    pub fn unary(c: Conn, a: Term) -> Term {
        debug_assert_eq!(c.arity(), 1);
        Term::Unary(c, Arc::new(a))
    }

    pub fn binary(c: Conn, a: Term, b: Term) -> Term {
        debug_assert_eq!(c.arity(), 2);
        Term::Binary(c, Arc::new(a), Arc::new(b))
    }

    /// Builds a node from a connective and its arguments.
    pub fn app(c: Conn, mut args: Vec<Term>) -> Term {
        match args.len() {
            0 => Term::Const(c),
            1 => Term::Unary(c, Arc::new(args.pop().unwrap())),
            _ => {
                let b = args.pop().unwrap();
                let a = args.pop().unwrap();
                Term::Binary(c, Arc::new(a), Arc::new(b))
            }
        }
    }

    pub fn sort(&self) -> Sort {
        match self {
            Term::Atom(_) => Sort::Dl,
            Term::Meta(m) => m.sort,
            Term::Const(c) | Term::Unary(c, _) | Term::Binary(c, _, _) => c.sort(),
        }
    }

    pub fn head(&self) -> Option<Conn> {
        match self {
            Term::Const(c) | Term::Unary(c, _) | Term::Binary(c, _, _) => Some(*c),
            _ => None,
        }
    }

    pub fn children(&self) -> Vec<&Term> {
        match self {
            Term::Unary(_, a) => vec![a],
            Term::Binary(_, a, b) => vec![a, b],
            _ => vec![],
        }
    }

    /// True when the term is operational throughout (no structural
    /// connective and no structure-kind metavariable).
    pub fn is_formula(&self) -> bool {
        match self {
            Term::Atom(_) => true,
            Term::Meta(m) => m.kind != MetaKind::Structure,
            Term::Const(c) => c.level() == Level::Formula,
            Term::Unary(c, a) => c.level() == Level::Formula && a.is_formula(),
            Term::Binary(c, a, b) => {
                c.level() == Level::Formula && a.is_formula() && b.is_formula()
            }
        }
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        match self {
            Term::Unary(_, a) => 1 + a.size(),
            Term::Binary(_, a, b) => 1 + a.size() + b.size(),
            _ => 1,
        }
    }

    /// Height, counting a leaf as 1.
    pub fn depth(&self) -> usize {
        match self {
            Term::Unary(_, a) => 1 + a.depth(),
            Term::Binary(_, a, b) => 1 + a.depth().max(b.depth()),
            _ => 1,
        }
    }

    /// Total sort checker: connective signatures, levels, arities.
    pub fn check(&self) -> Result<Sort, SortError> {
        match self {
            Term::Atom(_) => Ok(Sort::Dl),
            Term::Meta(m) => Ok(m.sort),
            Term::Const(c) => {
                if c.arity() != 0 {
                    return Err(SortError::Arity {
                        conn: c.token(),
                        expected: c.arity(),
                        found: 0,
                    });
                }
                Ok(c.sort())
            }
            Term::Unary(c, a) => self.check_args(*c, &[a]),
            Term::Binary(c, a, b) => self.check_args(*c, &[a, b]),
        }
    }

    fn check_args(&self, c: Conn, args: &[&Arc<Term>]) -> Result<Sort, SortError> {
        if c.arity() != args.len() {
            return Err(SortError::Arity {
                conn: c.token(),
                expected: c.arity(),
                found: args.len(),
            });
        }
        for (arg, &want) in args.iter().zip(c.arg_sorts()) {
            let got = arg.check()?;
            if got != want {
                return Err(SortError::Mismatch {
                    conn: c.token(),
                    expected: want,
                    found: got,
                    subterm: super::render(arg),
                });
            }
            if c.level() == Level::Formula && !arg.is_formula() {
                return Err(SortError::LevelMismatch {
                    conn: c.token(),
                    subterm: super::render(arg),
                });
            }
        }
        Ok(c.sort())
    }

    /// Atoms occurring in the term, sorted and deduplicated.
    pub fn atoms(&self) -> Vec<Atom> {
        let mut out = Vec::new();
        self.collect_atoms(&mut out);
        out.sort();
        out.dedup();
        out
    }

    fn collect_atoms(&self, out: &mut Vec<Atom>) {
        match self {
            Term::Atom(a) => out.push(a.clone()),
            Term::Unary(_, a) => a.collect_atoms(out),
            Term::Binary(_, a, b) => {
                a.collect_atoms(out);
                b.collect_atoms(out);
            }
            _ => {}
        }
    }

    /// Metavariables occurring in the term, in first-occurrence order.
    pub fn metas(&self) -> Vec<MetaVar> {
        let mut out: Vec<MetaVar> = Vec::new();
        self.visit(&mut |t| {
            if let Term::Meta(m) = t {
                if !out.contains(m) {
                    out.push(m.clone());
                }
            }
        });
        out
    }

    /// Pre-order traversal.
    pub fn visit<F: FnMut(&Term)>(&self, f: &mut F) {
        f(self);
        match self {
            Term::Unary(_, a) => a.visit(f),
            Term::Binary(_, a, b) => {
                a.visit(f);
                b.visit(f);
            }
            _ => {}
        }
    }

    /// Maximal formula subterms (the formulas embedded in a structure).
    pub fn formula_leaves(&self) -> Vec<&Term> {
        let mut out = Vec::new();
        self.collect_formula_leaves(&mut out);
        out
    }

    fn collect_formula_leaves<'a>(&'a self, out: &mut Vec<&'a Term>) {
        if self.is_formula() {
            if !matches!(self, Term::Meta(_)) {
                out.push(self);
            }
            return;
        }
        match self {
            Term::Unary(_, a) => a.collect_formula_leaves(out),
            Term::Binary(_, a, b) => {
                a.collect_formula_leaves(out);
                b.collect_formula_leaves(out);
            }
            _ => {}
        }
    }

    /// All subterms of a formula, including itself.
    pub fn subformulas(&self) -> Vec<&Term> {
        let mut out = Vec::new();
        self.visit_ref(&mut out);
        out
    }

    fn visit_ref<'a>(&'a self, out: &mut Vec<&'a Term>) {
        out.push(self);
        match self {
            Term::Unary(_, a) => a.visit_ref(out),
            Term::Binary(_, a, b) => {
                a.visit_ref(out);
                b.visit_ref(out);
            }
            _ => {}
        }
    }

    /// Complexity of a formula: its number of connectives and leaves.
    pub fn complexity(&self) -> usize {
        self.size()
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::render(self))
    }
}

/// `antecedent ⊢ succedent`, both of the same sort.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sequent {
    pub ant: Term,
    pub suc: Term,
}

impl Sequent {
    pub fn new(ant: Term, suc: Term) -> Sequent {
        Sequent { ant, suc }
    }

    pub fn sort(&self) -> Sort {
        self.ant.sort()
    }

    pub fn check(&self) -> Result<Sort, SortError> {
        let a = self.ant.check()?;
        let s = self.suc.check()?;
        if a != s {
            return Err(SortError::Expected {
                expected: a,
                found: s,
                subterm: super::render(&self.suc),
            });
        }
        Ok(a)
    }

    pub fn size(&self) -> usize {
        self.ant.size() + self.suc.size()
    }

    pub fn atoms(&self) -> Vec<Atom> {
        let mut v = self.ant.atoms();
        v.extend(self.suc.atoms());
        v.sort();
        v.dedup();
        v
    }
}

impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::render_sequent(self))
    }
}
