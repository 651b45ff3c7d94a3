//! Connective table shared by the parser, the renderers, the operational
//! reading and the signed generation trees.

use std::fmt;

/// The two types of the multi-type language.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sort {
    /// Distributive-lattice terms.
    Dl,
    /// Kernel (De Morgan) terms.
    K,
}

impl fmt::Display for Sort {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sort::Dl => "DL",
            Sort::K => "K",
        })
    }
}

/// Whether a node is operational (a formula) or structural.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Level {
    Formula,
    Structure,
}

/// Polarity of a coordinate: positive keeps the position, negative flips it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Polarity {
    Pos,
    Neg,
}

impl Polarity {
    pub fn flip(self) -> Polarity {
        match self {
            Polarity::Pos => Polarity::Neg,
            Polarity::Neg => Polarity::Pos,
        }
    }

    pub fn compose(self, other: Polarity) -> Polarity {
        if self == other {
            Polarity::Pos
        } else {
            Polarity::Neg
        }
    }
}

/// Every connective of the multi-type language, operational and structural.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Conn {
    // DL formulas
    Top,
    Bot,
    Box,
    And,
    Or,
    // K formulas
    One,
    Zero,
    Circ,
    Sim,
    Cap,
    Cup,
    // DL structures
    HTop,
    CBot,
    CBox,
    HBulL,
    CBulR,
    HAnd,
    CVee,
    HExcl,
    CArr,
    // K structures
    HOne,
    CZero,
    TCirc,
    HLoz,
    TStar,
    HCap,
    CCup,
    HSup,
    CSup,
}

pub const ALL_CONNS: [Conn; 29] = [
    Conn::Top,
    Conn::Bot,
    Conn::Box,
    Conn::And,
    Conn::Or,
    Conn::One,
    Conn::Zero,
    Conn::Circ,
    Conn::Sim,
    Conn::Cap,
    Conn::Cup,
    Conn::HTop,
    Conn::CBot,
    Conn::CBox,
    Conn::HBulL,
    Conn::CBulR,
    Conn::HAnd,
    Conn::CVee,
    Conn::HExcl,
    Conn::CArr,
    Conn::HOne,
    Conn::CZero,
    Conn::TCirc,
    Conn::HLoz,
    Conn::TStar,
    Conn::HCap,
    Conn::CCup,
    Conn::HSup,
    Conn::CSup,
];

impl Conn {
    pub fn token(self) -> &'static str {
        use Conn::*;
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
            HTop => "htop",
            CBot => "cbot",
            CBox => "cbox",
            HBulL => "hbul",
            CBulR => "cbur",
            HAnd => "hand",
            CVee => "cvee",
            HExcl => "hexcl",
            CArr => "carr",
            HOne => "hone",
            CZero => "czero",
            TCirc => "tcirc",
            HLoz => "hloz",
            TStar => "tstar",
            HCap => "hcap",
            CCup => "ccup",
            HSup => "hsup",
            CSup => "csup",
        }
    }

    pub fn from_token(tok: &str) -> Option<Conn> {
        ALL_CONNS.iter().copied().find(|c| c.token() == tok)
    }

    pub fn symbol(self) -> &'static str {
        use Conn::*;
        match self {
            Top => "⊤",
            Bot => "⊥",
            Box => "□",
            And => "∧",
            Or => "∨",
            One => "1",
            Zero => "0",
            Circ => "∘",
            Sim => "∼",
            Cap => "∩",
            Cup => "∪",
            HTop => "⊤̂",
            CBot => "⊥̌",
            CBox => "□̌",
            HBulL => "•̂ℓ",
            CBulR => "•̌r",
            HAnd => "∧̂",
            CVee => "∨̌",
            HExcl => ">̂",
            CArr => "→̌",
            HOne => "1̂",
            CZero => "0̌",
            TCirc => "∘̃",
            HLoz => "◆̂",
            TStar => "∗̃",
            HCap => "∩̂",
            CCup => "∪̌",
            HSup => "⊃̂",
            CSup => "⊃̌",
        }
    }

    pub fn arity(self) -> usize {
        self.arg_sorts().len()
    }

    /// Sort of the term headed by this connective.
    pub fn sort(self) -> Sort {
        use Conn::*;
        match self {
            Top | Bot | Box | And | Or | HTop | CBot | CBox | HBulL | CBulR | HAnd | CVee
            | HExcl | CArr => Sort::Dl,
            _ => Sort::K,
        }
    }

    pub fn arg_sorts(self) -> &'static [Sort] {
        use Conn::*;
        use Sort::{Dl, K};
        match self {
            Top | Bot | One | Zero | HTop | CBot | HOne | CZero => &[],
            Box | CBox | HBulL | CBulR | Sim | TStar => &[K],
            Circ | TCirc | HLoz => &[Dl],
            And | Or | HAnd | CVee | HExcl | CArr => &[Dl, Dl],
            Cap | Cup | HCap | CCup | HSup | CSup => &[K, K],
        }
    }

    pub fn level(self) -> Level {
        use Conn::*;
        match self {
            Top | Bot | Box | And | Or | One | Zero | Circ | Sim | Cap | Cup => Level::Formula,
            _ => Level::Structure,
        }
    }

    /// Polarity of coordinate `i`: only the star-like connectives and the
    /// first argument of the residuals are antitone.
    pub fn polarity(self, i: usize) -> Polarity {
        use Conn::*;
        match (self, i) {
            (Sim | TStar, 0) => Polarity::Neg,
            (HExcl | CArr | HSup | CSup, 0) => Polarity::Neg,
            _ => Polarity::Pos,
        }
    }

    /// Infix binary connectives in the unicode renderer.
    pub fn is_binary(self) -> bool {
        self.arity() == 2
    }
}

impl fmt::Display for Conn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tokens_are_unique_and_roundtrip() {
        for c in ALL_CONNS {
            assert_eq!(Conn::from_token(c.token()), Some(c));
        }
        let mut toks: Vec<_> = ALL_CONNS.iter().map(|c| c.token()).collect();
        toks.sort();
        toks.dedup();
        assert_eq!(toks.len(), ALL_CONNS.len());
    }

    #[test]
    fn negative_coordinates() {
        let neg: Vec<_> = ALL_CONNS
            .iter()
            .flat_map(|&c| (0..c.arity()).map(move |i| (c, i)))
            .filter(|&(c, i)| c.polarity(i) == Polarity::Neg)
            .collect();
        assert_eq!(
            neg,
            vec![
                (Conn::Sim, 0),
                (Conn::HExcl, 0),
                (Conn::CArr, 0),
                (Conn::TStar, 0),
                (Conn::HSup, 0),
                (Conn::CSup, 0)
            ]
        );
    }
}
