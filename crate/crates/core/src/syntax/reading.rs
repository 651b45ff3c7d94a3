//! Operational reading of structures as terms over the logical connectives
//! and their residuals/adjoints.

use std::fmt;

use super::conn::{Conn, Polarity, Sort};
use super::term::{Atom, MetaVar, Term};

/// Position of a substructure in a sequent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Position {
    Precedent,
    Succedent,
}

impl Position {
    pub fn under(self, p: Polarity) -> Position {
        match (self, p) {
            (x, Polarity::Pos) => x,
            (Position::Precedent, Polarity::Neg) => Position::Succedent,
            (Position::Succedent, Polarity::Neg) => Position::Precedent,
        }
    }
}

/// Operations available to extended terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExtOp {
    Top,
    Bot,
    Box,
    And,
    Or,
    One,
    Zero,
    Circ,
    Sim,
    Cap,
    Cup,
    /// a → b on L
    HeytingArrow,
    /// a > b on L
    CoImp,
    /// α ⊃ β on D, right residual of ∩
    KArrow,
    /// co-implication on D, left residual of ∪
    KCoImp,
    /// left adjoint of h
    HLeft,
    /// right adjoint of h
    HRight,
    /// left adjoint of e
    ELeft,
}

impl ExtOp {
    pub fn name(self) -> &'static str {
        use ExtOp::*;
        match self {
            Top => "top",
            Bot => "bot",
            Box => "box",
            And => "and",
            Or => "or",
            One => "one",
            Zero => "zero",
            Circ => "circ",
            Sim => "sim",
            Cap => "cap",
            Cup => "cup",
            HeytingArrow => "heyting-arrow",
            CoImp => "co-implication",
            KArrow => "k-heyting",
            KCoImp => "k-co-implication",
            HLeft => "h-left",
            HRight => "h-right",
            ELeft => "e-left",
        }
    }

    pub fn sort(self) -> Sort {
        use ExtOp::*;
        match self {
            Top | Bot | Box | And | Or | HeytingArrow | CoImp | HLeft | HRight => Sort::Dl,
            _ => Sort::K,
        }
    }

    pub fn is_derived(self) -> bool {
        use ExtOp::*;
        matches!(
            self,
            HeytingArrow | CoImp | KArrow | KCoImp | HLeft | HRight | ELeft
        )
    }

    fn of_formula(c: Conn) -> Option<ExtOp> {
        use ExtOp::*;
        Some(match c {
            Conn::Top => Top,
            Conn::Bot => Bot,
            Conn::Box => Box,
            Conn::And => And,
            Conn::Or => Or,
            Conn::One => One,
            Conn::Zero => Zero,
            Conn::Circ => Circ,
            Conn::Sim => Sim,
            Conn::Cap => Cap,
            Conn::Cup => Cup,
            _ => return None,
        })
    }

    /// The operation interpreting a structural connective.
    pub fn of_structural(c: Conn) -> ExtOp {
        use ExtOp::*;
        match c {
            Conn::HTop => Top,
            Conn::CBot => Bot,
            Conn::CBox => Box,
            Conn::HBulL => HLeft,
            Conn::CBulR => HRight,
            Conn::HAnd => And,
            Conn::CVee => Or,
            Conn::HExcl => CoImp,
            Conn::CArr => HeytingArrow,
            Conn::HOne => One,
            Conn::CZero => Zero,
            Conn::TCirc => Circ,
            Conn::HLoz => ELeft,
            Conn::TStar => Sim,
            Conn::HCap => Cap,
            Conn::CCup => Cup,
            Conn::HSup => KCoImp,
            Conn::CSup => KArrow,
            other => ExtOp::of_formula(other).expect("formula connective"),
        }
    }
}

/// Formulas extended with the derived operations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExtTerm {
    Atom(Atom),
    Meta(MetaVar),
    Op(ExtOp, Vec<ExtTerm>),
}

impl ExtTerm {
    pub fn sort(&self) -> Sort {
        match self {
            ExtTerm::Atom(_) => Sort::Dl,
            ExtTerm::Meta(m) => m.sort,
            ExtTerm::Op(o, _) => o.sort(),
        }
    }

    pub fn uses_derived(&self) -> bool {
        match self {
            ExtTerm::Op(o, args) => o.is_derived() || args.iter().any(|a| a.uses_derived()),
            _ => false,
        }
    }

    /// Embeds a parser-level formula.
    pub fn from_formula(t: &Term) -> ExtTerm {
        reading(t, Position::Precedent)
    }
}

impl fmt::Display for ExtTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtTerm::Atom(a) => write!(f, "{a}"),
            ExtTerm::Meta(m) => write!(f, "?{}", m.name),
            ExtTerm::Op(o, args) if args.is_empty() => f.write_str(o.name()),
            ExtTerm::Op(o, args) => {
                write!(f, "({}", o.name())?;
                for a in args {
                    write!(f, " {a}")?;
                }
                f.write_str(")")
            }
        }
    }
}

/// Replaces structural connectives by their interpretations. The position is
/// propagated along coordinate polarities; the interpreting operation of each
/// connective is the same in both positions.
pub fn reading(s: &Term, pos: Position) -> ExtTerm {
    match s {
        Term::Atom(a) => ExtTerm::Atom(a.clone()),
        Term::Meta(m) => ExtTerm::Meta(m.clone()),
        Term::Const(c) => ExtTerm::Op(ExtOp::of_structural(*c), vec![]),
        Term::Unary(c, a) => ExtTerm::Op(
            ExtOp::of_structural(*c),
            vec![reading(a, pos.under(c.polarity(0)))],
        ),
        Term::Binary(c, a, b) => ExtTerm::Op(
            ExtOp::of_structural(*c),
            vec![
                reading(a, pos.under(c.polarity(0))),
                reading(b, pos.under(c.polarity(1))),
            ],
        ),
    }
}

/// Position each structural connective is designed for: hatted symbols in
/// precedent, checked ones in succedent, tilded ones in either.
pub fn home_position(c: Conn) -> Option<Position> {
    use Conn::*;
    match c {
        HTop | HBulL | HAnd | HExcl | HOne | HLoz | HCap | HSup => Some(Position::Precedent),
        CBot | CBox | CBulR | CVee | CArr | CZero | CCup | CSup => Some(Position::Succedent),
        _ => None,
    }
}

/// Structural connectives occurring outside their home position.
pub fn misplaced(s: &Term, pos: Position) -> Vec<Conn> {
    let mut out = Vec::new();
    fn go(t: &Term, pos: Position, out: &mut Vec<Conn>) {
        if let Some(c) = t.head() {
            if let Some(home) = home_position(c) {
                if home != pos {
                    out.push(c);
                }
            }
            for (i, ch) in t.children().into_iter().enumerate() {
                go(ch, pos.under(c.polarity(i)), out);
            }
        }
    }
    go(s, pos, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::super::parse::parse_term;
    use super::*;

    fn read(text: &str, sort: Sort, pos: Position) -> String {
        reading(&parse_term(text, sort).unwrap(), pos).to_string()
    }

    #[test]
    fn examples() {
        assert_eq!(
            read("(box (sim (circ p)))", Sort::Dl, Position::Succedent),
            "(box (sim (circ p)))"
        );
        assert_eq!(
            read("(hand p q)", Sort::Dl, Position::Precedent),
            "(and p q)"
        );
        assert_eq!(
            read("(carr p q)", Sort::Dl, Position::Succedent),
            "(heyting-arrow p q)"
        );
        assert_eq!(read("(hloz p)", Sort::K, Position::Precedent), "(e-left p)");
    }

    #[test]
    fn misplacement() {
        let t = parse_term("(carr (hand p q) r)", Sort::Dl).unwrap();
        assert!(misplaced(&t, Position::Succedent).is_empty());
        assert_eq!(misplaced(&t, Position::Precedent), vec![Conn::CArr, Conn::HAnd]);
        let k = parse_term("(tstar (hcap one one))", Sort::K).unwrap();
        assert!(misplaced(&k, Position::Succedent).is_empty());
    }
}
