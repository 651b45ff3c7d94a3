//! Sorted syntax: single-type formulas, multi-type formulas and structures,
//! the concrete grammar, printers, the translation τ and the operational
//! reading of structures.

mod conn;
mod formula;
mod parse;
mod reading;
mod render;
mod term;

pub use conn::{Conn, Level, Polarity, Sort, ALL_CONNS};
pub use formula::{translate, untranslate, Formula};
pub use parse::{
    parse_any_term, parse_formula, parse_formula_sequent, parse_pattern, parse_sequent,
    parse_term, ParseError,
};
pub use reading::{home_position, misplaced, reading, ExtOp, ExtTerm, Position};
pub use render::{render, render_sequent, unicode, unicode_sequent};
pub use term::{Atom, MetaKind, MetaVar, Sequent, SortError, Term};

/// Reads a sequent's two sides in their positions.
pub fn operational_reading(s: &Term, pos: Position) -> ExtTerm {
    reading(s, pos)
}
