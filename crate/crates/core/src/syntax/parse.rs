//! Parenthesized prefix grammar.
//!
//! ```text
//! term    ::= atom | const | "(" conn term+ ")"
//! sequent ::= "(" "seq" term term ")"
//! ```
//! Single-type formulas additionally admit `(not _)`. Rule patterns admit
//! schema letters written `?X`.

use std::sync::Arc;

use super::conn::{Conn, Sort};
use super::formula::Formula;
use super::term::{MetaVar, Sequent, SortError, Term};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("lexical error at byte {pos}: unexpected character {ch:?}")]
    Lexical { pos: usize, ch: char },
    #[error("unexpected end of input")]
    Eof,
    #[error("unexpected {found:?} at byte {pos}")]
    Unexpected { pos: usize, found: String },
    #[error("trailing input at byte {pos}")]
    Trailing { pos: usize },
    #[error("unknown token {token:?} at byte {pos}")]
    UnknownToken { pos: usize, token: String },
    #[error("arity error at byte {pos}: {token} takes {expected} arguments, got {found}")]
    Arity {
        pos: usize,
        token: String,
        expected: usize,
        found: usize,
    },
    #[error("{0}")]
    Sort(#[from] SortError),
}

#[derive(Clone, Debug)]
enum Sexp {
    Word(String, usize),
    List(Vec<Sexp>, usize),
}

impl Sexp {
    fn pos(&self) -> usize {
        match self {
            Sexp::Word(_, p) | Sexp::List(_, p) => *p,
        }
    }
}

fn is_word_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '?' || c == '\''
}

fn read_sexp(text: &str) -> Result<Sexp, ParseError> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut i = 0;
    let out = read_one(&chars, &mut i)?;
    skip_ws(&chars, &mut i);
    if i < chars.len() {
        return Err(ParseError::Trailing { pos: chars[i].0 });
    }
    Ok(out)
}

fn skip_ws(chars: &[(usize, char)], i: &mut usize) {
    while *i < chars.len() && chars[*i].1.is_whitespace() {
        *i += 1;
    }
}

fn read_one(chars: &[(usize, char)], i: &mut usize) -> Result<Sexp, ParseError> {
    skip_ws(chars, i);
    let Some(&(pos, c)) = chars.get(*i) else {
        return Err(ParseError::Eof);
    };
    if c == '(' {
        *i += 1;
        let mut items = Vec::new();
        loop {
            skip_ws(chars, i);
            match chars.get(*i) {
                None => return Err(ParseError::Eof),
                Some(&(_, ')')) => {
                    *i += 1;
                    return Ok(Sexp::List(items, pos));
                }
                Some(_) => items.push(read_one(chars, i)?),
            }
        }
    } else if is_word_char(c) {
        let start = *i;
        while *i < chars.len() && is_word_char(chars[*i].1) {
            *i += 1;
        }
        let word: String = chars[start..*i].iter().map(|&(_, c)| c).collect();
        Ok(Sexp::Word(word, pos))
    } else if c == ')' {
        Err(ParseError::Unexpected {
            pos,
            found: ")".into(),
        })
    } else {
        Err(ParseError::Lexical { pos, ch: c })
    }
}

fn is_reserved(w: &str) -> bool {
    w == "seq" || w == "not" || Conn::from_token(w).is_some()
}

fn is_atom_name(w: &str) -> bool {
    let mut cs = w.chars();
    matches!(cs.next(), Some(c) if c.is_ascii_lowercase())
        && w.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
        && !is_reserved(w)
}

fn to_term(s: &Sexp, metas: bool) -> Result<Term, ParseError> {
    match s {
        Sexp::Word(w, pos) => {
            if let Some(name) = w.strip_prefix('?') {
                if metas {
                    if let Some(m) = MetaVar::from_letter(name) {
                        return Ok(Term::Meta(m));
                    }
                }
                return Err(ParseError::UnknownToken {
                    pos: *pos,
                    token: w.clone(),
                });
            }
            if let Some(c) = Conn::from_token(w) {
                if c.arity() != 0 {
                    return Err(ParseError::Arity {
                        pos: *pos,
                        token: w.clone(),
                        expected: c.arity(),
                        found: 0,
                    });
                }
                return Ok(Term::Const(c));
            }
            if is_atom_name(w) {
                return Ok(Term::Atom(Arc::from(w.as_str())));
            }
            Err(ParseError::UnknownToken {
                pos: *pos,
                token: w.clone(),
            })
        }
        Sexp::List(items, pos) => {
            let (head, args) = split_head(items, *pos)?;
            let Some(c) = Conn::from_token(head) else {
                return Err(ParseError::UnknownToken {
                    pos: *pos,
                    token: head.to_string(),
                });
            };
            if c.arity() != args.len() || c.arity() == 0 {
                return Err(ParseError::Arity {
                    pos: *pos,
                    token: head.to_string(),
                    expected: c.arity(),
                    found: args.len(),
                });
            }
            let args = args
                .iter()
                .map(|a| to_term(a, metas))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Term::app(c, args))
        }
    }
}

fn split_head(items: &[Sexp], pos: usize) -> Result<(&str, &[Sexp]), ParseError> {
    match items.first() {
        Some(Sexp::Word(w, _)) => Ok((w.as_str(), &items[1..])),
        Some(other) => Err(ParseError::Unexpected {
            pos: other.pos(),
            found: "(".into(),
        }),
        None => Err(ParseError::Unexpected {
            pos,
            found: "()".into(),
        }),
    }
}

fn expect_sort(t: &Term, want: Sort) -> Result<(), ParseError> {
    let got = t.check()?;
    if got != want {
        return Err(SortError::Expected {
            expected: want,
            found: got,
            subterm: super::render(t),
        }
        .into());
    }
    Ok(())
}

/// Parses a multi-type formula or structure of the given sort.
pub fn parse_term(text: &str, sort: Sort) -> Result<Term, ParseError> {
    let t = to_term(&read_sexp(text)?, false)?;
    expect_sort(&t, sort)?;
    Ok(t)
}

/// Parses a multi-type term and infers its sort.
pub fn parse_any_term(text: &str) -> Result<Term, ParseError> {
    let t = to_term(&read_sexp(text)?, false)?;
    t.check()?;
    Ok(t)
}

fn to_sequent(s: &Sexp, metas: bool) -> Result<Sequent, ParseError> {
    let Sexp::List(items, pos) = s else {
        return Err(ParseError::Unexpected {
            pos: s.pos(),
            found: "term where (seq _ _) was expected".into(),
        });
    };
    let (head, args) = split_head(items, *pos)?;
    if head != "seq" {
        return Err(ParseError::Unexpected {
            pos: *pos,
            found: head.to_string(),
        });
    }
    if args.len() != 2 {
        return Err(ParseError::Arity {
            pos: *pos,
            token: "seq".into(),
            expected: 2,
            found: args.len(),
        });
    }
    let seq = Sequent::new(to_term(&args[0], metas)?, to_term(&args[1], metas)?);
    seq.check()?;
    Ok(seq)
}

/// Parses `(seq X Y)`.
pub fn parse_sequent(text: &str) -> Result<Sequent, ParseError> {
    to_sequent(&read_sexp(text)?, false)
}

/// Parses a sequent pattern whose leaves may be schema letters `?X`.
pub fn parse_pattern(text: &str) -> Result<Sequent, ParseError> {
    to_sequent(&read_sexp(text)?, true)
}

fn to_formula(s: &Sexp) -> Result<Formula, ParseError> {
    match s {
        Sexp::Word(w, pos) => match w.as_str() {
            "top" => Ok(Formula::Top),
            "bot" => Ok(Formula::Bot),
            _ if is_atom_name(w) => Ok(Formula::atom(w)),
            _ => Err(ParseError::UnknownToken {
                pos: *pos,
                token: w.clone(),
            }),
        },
        Sexp::List(items, pos) => {
            let (head, args) = split_head(items, *pos)?;
            let want = match head {
                "not" => 1,
                "and" | "or" => 2,
                _ => {
                    return Err(ParseError::UnknownToken {
                        pos: *pos,
                        token: head.to_string(),
                    })
                }
            };
            if args.len() != want {
                return Err(ParseError::Arity {
                    pos: *pos,
                    token: head.to_string(),
                    expected: want,
                    found: args.len(),
                });
            }
            let args = args.iter().map(to_formula).collect::<Result<Vec<_>, _>>()?;
            let mut it = args.into_iter();
            Ok(match head {
                "not" => Formula::neg(it.next().unwrap()),
                "and" => Formula::and(it.next().unwrap(), it.next().unwrap()),
                _ => Formula::or(it.next().unwrap(), it.next().unwrap()),
            })
        }
    }
}

/// Parses a single-type formula.
pub fn parse_formula(text: &str) -> Result<Formula, ParseError> {
    to_formula(&read_sexp(text)?)
}

/// Parses a single-type sequent `(seq A B)`.
pub fn parse_formula_sequent(text: &str) -> Result<(Formula, Formula), ParseError> {
    let s = read_sexp(text)?;
    let Sexp::List(items, pos) = &s else {
        return Err(ParseError::Unexpected {
            pos: 0,
            found: "term where (seq _ _) was expected".into(),
        });
    };
    let (head, args) = split_head(items, *pos)?;
    if head != "seq" || args.len() != 2 {
        return Err(ParseError::Unexpected {
            pos: *pos,
            found: head.to_string(),
        });
    }
    Ok((to_formula(&args[0])?, to_formula(&args[1])?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_examples() {
        let t = parse_term("(and p q)", Sort::Dl).unwrap();
        assert_eq!(t, Term::binary(Conn::And, Term::atom("p"), Term::atom("q")));
        let t = parse_term("(box (sim (circ p)))", Sort::Dl).unwrap();
        assert_eq!(
            t,
            Term::unary(
                Conn::Box,
                Term::unary(Conn::Sim, Term::unary(Conn::Circ, Term::atom("p")))
            )
        );
    }

    #[test]
    fn cap_over_dl_atoms_is_a_sort_error() {
        let e = parse_term("(cap p q)", Sort::K).unwrap_err();
        match e {
            ParseError::Sort(SortError::Mismatch {
                conn,
                expected,
                found,
                subterm,
            }) => {
                assert_eq!(conn, "cap");
                assert_eq!(expected, Sort::K);
                assert_eq!(found, Sort::Dl);
                assert_eq!(subterm, "p");
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn errors() {
        assert!(matches!(
            parse_term("(and p $)", Sort::Dl),
            Err(ParseError::Lexical { pos: 7, ch: '$' })
        ));
        assert!(matches!(
            parse_term("(and p)", Sort::Dl),
            Err(ParseError::Arity { expected: 2, found: 1, .. })
        ));
        assert!(matches!(parse_term("(and p q", Sort::Dl), Err(ParseError::Eof)));
        assert!(matches!(
            parse_term("p q", Sort::Dl),
            Err(ParseError::Trailing { .. })
        ));
        assert!(matches!(
            parse_term("(and (hand p q) p)", Sort::Dl),
            Err(ParseError::Sort(SortError::LevelMismatch { .. }))
        ));
        assert!(parse_term("p", Sort::K).is_err());
        assert!(parse_term("top", Sort::Dl).is_ok());
        assert!(parse_term("(top)", Sort::Dl).is_err());
        assert!(parse_term("and", Sort::Dl).is_err());
    }

    #[test]
    fn sequents_and_patterns() {
        let s = parse_sequent("(seq htop (box (sim (circ bot))))").unwrap();
        assert_eq!(s.sort(), Sort::Dl);
        assert!(parse_sequent("(seq p one)").is_err());
        assert!(parse_sequent("(seq ?X p)").is_err());
        let pat = parse_pattern("(seq (hand ?X ?Y) ?Z)").unwrap();
        assert_eq!(pat.ant.metas().len(), 2);
        let k = parse_pattern("(seq (tstar ?G) ?D)").unwrap();
        assert_eq!(k.sort(), Sort::K);
    }

    #[test]
    fn single_type() {
        let f = parse_formula("(and (not p) (or top q))").unwrap();
        assert_eq!(f.to_string(), "(and (not p) (or top q))");
        assert!(parse_formula("(box p)").is_err());
    }
}
