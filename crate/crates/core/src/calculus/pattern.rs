//! Matching sequent patterns against concrete sequents.

use std::fmt;
use std::sync::Arc;

use crate::syntax::{render, MetaKind, MetaVar, Sequent, Term};

/// A substitution for schema letters. Schemas have at most a handful of
/// letters, so a vector beats a map here.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Subst {
    pairs: Vec<(MetaVar, Term)>,
}

impl Subst {
    pub fn new() -> Subst {
        Subst::default()
    }

    pub fn get(&self, name: &str) -> Option<&Term> {
        self.pairs
            .iter()
            .find(|(m, _)| &*m.name == name)
            .map(|(_, t)| t)
    }

    pub fn bind(&mut self, m: MetaVar, t: Term) {
        if let Some(slot) = self.pairs.iter_mut().find(|(n, _)| n.name == m.name) {
            slot.1 = t;
        } else {
            self.pairs.push((m, t));
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&MetaVar, &Term)> {
        self.pairs.iter().map(|(m, t)| (m, t))
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

impl fmt::Display for Subst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .pairs
            .iter()
            .map(|(m, t)| format!("{} ↦ {}", m.name, render(t)))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Why a pattern failed to match.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum MatchError {
    #[error("shape mismatch: expected {pattern}, found {found}")]
    Shape { pattern: String, found: String },
    #[error("metavariable {var} needs {kind}, found {found}")]
    Kind {
        var: Arc<str>,
        kind: &'static str,
        found: String,
    },
    #[error("metavariable {var} has sort {expected}, found {found}")]
    Sort {
        var: Arc<str>,
        expected: crate::syntax::Sort,
        found: String,
    },
    #[error("metavariable {var} bound inconsistently: {first} vs {second}")]
    Inconsistent {
        var: Arc<str>,
        first: String,
        second: String,
    },
    #[error("metavariable {0} unbound")]
    Unbound(Arc<str>),
}

/// Extends `s` so that the pattern equals the term, without building
/// diagnostics. On failure `s` may hold partial bindings.
pub fn try_match(pat: &Term, t: &Term, s: &mut Subst) -> bool {
    match (pat, t) {
        (Term::Meta(m), _) => {
            let kind_ok = match m.kind {
                MetaKind::Structure => true,
                MetaKind::Formula => t.is_formula(),
                MetaKind::Atom => matches!(t, Term::Atom(_)),
            };
            if !kind_ok || t.sort() != m.sort {
                return false;
            }
            match s.get(&m.name) {
                Some(prev) => prev == t,
                None => {
                    s.bind(m.clone(), t.clone());
                    true
                }
            }
        }
        (Term::Atom(a), Term::Atom(b)) => a == b,
        (Term::Const(c), Term::Const(d)) => c == d,
        (Term::Unary(c, x), Term::Unary(d, y)) => c == d && try_match(x, y, s),
        (Term::Binary(c, x1, x2), Term::Binary(d, y1, y2)) => {
            c == d && try_match(x1, y1, s) && try_match(x2, y2, s)
        }
        _ => false,
    }
}

pub fn try_match_sequent(pat: &Sequent, s: &Sequent, sub: &mut Subst) -> bool {
    try_match(&pat.ant, &s.ant, sub) && try_match(&pat.suc, &s.suc, sub)
}

/// Extends `s` so that the pattern equals the term.
pub fn match_term(pat: &Term, t: &Term, s: &mut Subst) -> Result<(), MatchError> {
    match (pat, t) {
        (Term::Meta(m), _) => {
            if t.sort() != m.sort {
                return Err(MatchError::Sort {
                    var: m.name.clone(),
                    expected: m.sort,
                    found: render(t),
                });
            }
            let kind_ok = match m.kind {
                MetaKind::Structure => true,
                MetaKind::Formula => t.is_formula(),
                MetaKind::Atom => matches!(t, Term::Atom(_)),
            };
            if !kind_ok {
                return Err(MatchError::Kind {
                    var: m.name.clone(),
                    kind: match m.kind {
                        MetaKind::Formula => "a formula",
                        _ => "an atom",
                    },
                    found: render(t),
                });
            }
            match s.get(&m.name) {
                Some(prev) if prev != t => Err(MatchError::Inconsistent {
                    var: m.name.clone(),
                    first: render(prev),
                    second: render(t),
                }),
                Some(_) => Ok(()),
                None => {
                    s.bind(m.clone(), t.clone());
                    Ok(())
                }
            }
        }
        (Term::Atom(a), Term::Atom(b)) if a == b => Ok(()),
        (Term::Const(c), Term::Const(d)) if c == d => Ok(()),
        (Term::Unary(c, x), Term::Unary(d, y)) if c == d => match_term(x, y, s),
        (Term::Binary(c, x1, x2), Term::Binary(d, y1, y2)) if c == d => {
            match_term(x1, y1, s)?;
            match_term(x2, y2, s)
        }
        _ => Err(MatchError::Shape {
            pattern: render(pat),
            found: render(t),
        }),
    }
}

pub fn match_sequent(pat: &Sequent, s: &Sequent, sub: &mut Subst) -> Result<(), MatchError> {
    match_term(&pat.ant, &s.ant, sub)?;
    match_term(&pat.suc, &s.suc, sub)
}

/// Most general match of a single term.
pub fn matches(pat: &Term, t: &Term) -> Option<Subst> {
    let mut s = Subst::new();
    match_term(pat, t, &mut s).ok().map(|_| s)
}

/// Replaces every letter by its binding.
pub fn instantiate(pat: &Term, s: &Subst) -> Result<Term, MatchError> {
    Ok(match pat {
        Term::Meta(m) => s
            .get(&m.name)
            .cloned()
            .ok_or_else(|| MatchError::Unbound(m.name.clone()))?,
        Term::Atom(_) | Term::Const(_) => pat.clone(),
        Term::Unary(c, a) => Term::Unary(*c, Arc::new(instantiate(a, s)?)),
        Term::Binary(c, a, b) => Term::Binary(
            *c,
            Arc::new(instantiate(a, s)?),
            Arc::new(instantiate(b, s)?),
        ),
    })
}

pub fn instantiate_sequent(pat: &Sequent, s: &Subst) -> Result<Sequent, MatchError> {
    Ok(Sequent::new(instantiate(&pat.ant, s)?, instantiate(&pat.suc, s)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_any_term, parse_pattern, parse_sequent};

    fn pat(s: &str) -> Term {
        parse_pattern(&format!("(seq {s} ?Z9)")).unwrap().ant
    }

    #[test]
    fn decomposes() {
        let p = pat("(hand ?X ?Y)");
        let t = parse_any_term("(hand p (cvee q r))").unwrap();
        let s = matches(&p, &t).unwrap();
        assert_eq!(render(s.get("X").unwrap()), "p");
        assert_eq!(render(s.get("Y").unwrap()), "(cvee q r)");
        assert_eq!(instantiate(&p, &s).unwrap(), t);
    }

    #[test]
    fn kinds() {
        let a = pat("?A");
        assert!(matches(&a, &parse_any_term("(hand p q)").unwrap()).is_none());
        assert!(matches(&a, &parse_any_term("(and p q)").unwrap()).is_some());
        let id = parse_pattern("(seq ?p ?p)").unwrap();
        let mut s = Subst::new();
        let err = match_sequent(&id, &parse_sequent("(seq (and q r) (and q r))").unwrap(), &mut s);
        assert!(matches!(err, Err(MatchError::Kind { .. })));
        let mut s = Subst::new();
        let err = match_sequent(&id, &parse_sequent("(seq p q)").unwrap(), &mut s).unwrap_err();
        assert!(err.to_string().contains("metavariable p bound inconsistently"));
    }
}
