//! Canonical prefix printer and a unicode infix printer for display.

use super::term::{MetaVar, Sequent, Term};

/// Canonical text; `parse` inverts it.
pub fn render(t: &Term) -> String {
    let mut out = String::new();
    write_prefix(t, &mut out);
    out
}

fn write_prefix(t: &Term, out: &mut String) {
    match t {
        Term::Atom(a) => out.push_str(a),
        Term::Meta(m) => {
            out.push('?');
            out.push_str(&m.name);
        }
        Term::Const(c) => out.push_str(c.token()),
        Term::Unary(c, a) => {
            out.push('(');
            out.push_str(c.token());
            out.push(' ');
            write_prefix(a, out);
            out.push(')');
        }
        Term::Binary(c, a, b) => {
            out.push('(');
            out.push_str(c.token());
            out.push(' ');
            write_prefix(a, out);
            out.push(' ');
            write_prefix(b, out);
            out.push(')');
        }
    }
}

pub fn render_sequent(s: &Sequent) -> String {
    format!("(seq {} {})", render(&s.ant), render(&s.suc))
}

fn meta_symbol(m: &MetaVar) -> String {
    let mut cs = m.name.chars();
    let first = cs.next().unwrap_or('?');
    let rest: String = cs.collect();
    let greek = match first {
        'G' => "Γ",
        'D' => "Δ",
        'T' => "Θ",
        'P' => "Π",
        'S' => "Σ",
        'a' => "α",
        'b' => "β",
        'c' => "γ",
        _ => return m.name.to_string(),
    };
    format!("{greek}{rest}")
}

/// Infix rendering with unicode connectives, for humans only.
pub fn unicode(t: &Term) -> String {
    let mut out = String::new();
    write_unicode(t, &mut out, true);
    out
}

fn write_unicode(t: &Term, out: &mut String, top: bool) {
    match t {
        Term::Atom(a) => out.push_str(a),
        Term::Meta(m) => out.push_str(&meta_symbol(m)),
        Term::Const(c) => out.push_str(c.symbol()),
        Term::Unary(c, a) => {
            out.push_str(c.symbol());
            write_unicode(a, out, false);
        }
        Term::Binary(c, a, b) => {
            if !top {
                out.push('(');
            }
            write_unicode(a, out, false);
            out.push(' ');
            out.push_str(c.symbol());
            out.push(' ');
            write_unicode(b, out, false);
            if !top {
                out.push(')');
            }
        }
    }
}

pub fn unicode_sequent(s: &Sequent) -> String {
    format!("{} ⊢ {}", unicode(&s.ant), unicode(&s.suc))
}

#[cfg(test)]
mod tests {
    use super::super::parse::{parse_pattern, parse_term};
    use super::super::Sort;
    use super::*;

    #[test]
    fn prefix_examples() {
        let t = parse_term("(box (sim (circ p)))", Sort::Dl).unwrap();
        assert_eq!(render(&t), "(box (sim (circ p)))");
        let s = parse_pattern("(seq (hand ?X ?Y) ?Z)").unwrap();
        assert_eq!(render(&s.ant), "(hand ?X ?Y)");
    }

    #[test]
    fn unicode_examples() {
        let t = parse_term("(box (sim (circ p)))", Sort::Dl).unwrap();
        assert_eq!(unicode(&t), "□∼∘p");
        let t = parse_term("(hand p (cvee q r))", Sort::Dl).unwrap();
        assert_eq!(unicode(&t), "p ∧̂ (q ∨̌ r)");
        let s = parse_pattern("(seq (tstar ?G) ?D)").unwrap();
        assert_eq!(unicode_sequent(&s), "∗̃Γ ⊢ Δ");
    }
}
