//! Independent re-implementation of the analytic inductive test, used to
//! check the classifier: its own sign propagation and role table, and an
//! exhaustive search over all order types and all strict partial orders.

use crate::syntax::{Conn, Sort, Term};

use super::{variables, InductiveWitness, Side};

/// Roles by (sign, connective token): skeleton roles then PIA roles.
const TABLE: &[(char, &str, &[&str])] = &[
    ('+', "or", &["DA", "SRR"]),
    ('+', "cup", &["DA", "SRR"]),
    ('-', "and", &["DA", "SRR"]),
    ('-', "cap", &["DA", "SRR"]),
    ('+', "and", &["SLR", "SRA"]),
    ('+', "cap", &["SLR", "SRA"]),
    ('+', "circ", &["SLR", "SRA"]),
    ('+', "sim", &["SLR", "SRA"]),
    ('+', "box", &["SRA"]),
    ('-', "or", &["SLR", "SRA"]),
    ('-', "cup", &["SLR", "SRA"]),
    ('-', "circ", &["SLR", "SRA"]),
    ('-', "sim", &["SLR", "SRA"]),
    ('-', "box", &["SLR"]),
];

fn roles(sign: char, token: &str) -> &'static [&'static str] {
    TABLE
        .iter()
        .find(|(s, t, _)| *s == sign && *t == token)
        .map(|(_, _, r)| *r)
        .unwrap_or(&[])
}

fn skeleton(sign: char, token: &str) -> bool {
    roles(sign, token).iter().any(|r| *r == "DA" || *r == "SLR")
}

fn pia(sign: char, token: &str) -> Option<&'static str> {
    roles(sign, token).iter().copied().find(|r| *r == "SRA" || *r == "SRR")
}

fn flip(c: char) -> char {
    if c == '+' {
        '-'
    } else {
        '+'
    }
}

/// One node of a branch: sign, token, and (for binary nodes) the sibling
/// subtree not on the branch with its sign.
#[derive(Clone)]
struct Step<'a> {
    sign: char,
    token: &'static str,
    sibling: Option<(&'a Term, char)>,
}

/// Every branch: the inner steps and the signed leaf at the end.
fn branches(t: &Term, sign: char) -> Vec<(Vec<Step<'_>>, &Term, char)> {
    match t {
        Term::Atom(_) | Term::Meta(_) | Term::Const(_) => vec![(vec![], t, sign)],
        Term::Unary(c, a) => {
            let child = if *c == Conn::Sim { flip(sign) } else { sign };
            branches(a, child)
                .into_iter()
                .map(|(mut steps, leaf, s)| {
                    steps.insert(
                        0,
                        Step {
                            sign,
                            token: c.token(),
                            sibling: None,
                        },
                    );
                    (steps, leaf, s)
                })
                .collect()
        }
        Term::Binary(c, a, b) => {
            let mut out = Vec::new();
            for (x, y) in [(a, b), (b, a)] {
                for (mut steps, leaf, s) in branches(x, sign) {
                    steps.insert(
                        0,
                        Step {
                            sign,
                            token: c.token(),
                            sibling: Some((&**y, sign)),
                        },
                    );
                    out.push((steps, leaf, s));
                }
            }
            out
        }
    }
}

/// Signed variables below `t`.
fn signed_vars(t: &Term, sign: char, out: &mut Vec<(Term, char)>) {
    match t {
        Term::Atom(_) | Term::Meta(_) => out.push((t.clone(), sign)),
        Term::Const(_) => {}
        Term::Unary(c, a) => signed_vars(a, if *c == Conn::Sim { flip(sign) } else { sign }, out),
        Term::Binary(_, a, b) => {
            signed_vars(a, sign, out);
            signed_vars(b, sign, out);
        }
    }
}

/// `eps[i]` is `'1'` or `'d'`.
fn critical(eps: &[char], i: usize, sign: char) -> bool {
    (sign == '+' && eps[i] == '1') || (sign == '-' && eps[i] == 'd')
}

fn split_ok(
    steps: &[Step<'_>],
    leaf: &Term,
    leaf_sign: char,
    k: usize,
    vars: &[Term],
    eps: &[char],
    less: &dyn Fn(usize, usize) -> bool,
) -> bool {
    if !steps[..k].iter().all(|s| skeleton(s.sign, s.token)) {
        return false;
    }
    let crit = vars
        .iter()
        .position(|v| v == leaf)
        .filter(|&i| critical(eps, i, leaf_sign));
    steps[k..].iter().all(|s| match pia(s.sign, s.token) {
        None => false,
        Some("SRR") => match (crit, s.sibling) {
            (Some(i), Some((sib, sign))) => {
                let mut sv = Vec::new();
                signed_vars(sib, sign, &mut sv);
                sv.iter().all(|(v, sg)| {
                    let k = vars.iter().position(|x| x == v).expect("variable");
                    !critical(eps, k, *sg) && less(k, i)
                })
            }
            _ => true,
        },
        Some(_) => true,
    })
}

fn all_good(lhs: &Term, rhs: &Term, vars: &[Term], eps: &[char], less: &dyn Fn(usize, usize) -> bool) -> bool {
    [(lhs, '+'), (rhs, '-')].iter().all(|(t, s)| {
        branches(t, *s).iter().all(|(steps, leaf, ls)| {
            (0..=steps.len()).any(|k| split_ok(steps, leaf, *ls, k, vars, eps, less))
        })
    })
}

/// Exhaustive test over every order type and every strict partial order.
pub fn brute_force_inductive(lhs: &Term, rhs: &Term) -> bool {
    let vars = variables(&[lhs, rhs]);
    let n = vars.len();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (0..n).filter(move |&b| b != a).map(move |b| (a, b)))
        .collect();
    for em in 0..1usize << n {
        let eps: Vec<char> = (0..n).map(|i| if em >> i & 1 == 0 { '1' } else { 'd' }).collect();
        for rm in 0..1usize << pairs.len() {
            let rel: Vec<(usize, usize)> =
                (0..pairs.len()).filter(|j| rm >> j & 1 == 1).map(|j| pairs[j]).collect();
            let transitive = rel.iter().all(|&(a, b)| {
                rel.iter()
                    .filter(|&&(c, _)| c == b)
                    .all(|&(_, d)| a != d && rel.contains(&(a, d)))
            });
            if !transitive {
                continue;
            }
            if all_good(lhs, rhs, &vars, &eps, &|k, i| rel.contains(&(k, i))) {
                return true;
            }
        }
    }
    false
}

/// Clause-by-clause recheck of a witness: ε has the right length, Ω is a
/// strict order, every branch of `+lhs` and `−rhs` is listed once, and
/// every listed split is valid.
pub fn check_witness(lhs: &Term, rhs: &Term, w: &InductiveWitness) -> bool {
    let vars = variables(&[lhs, rhs]);
    if vars != w.vars || w.epsilon.0.len() != vars.len() {
        return false;
    }
    let n = vars.len();
    let rel = &w.omega;
    if rel.iter().any(|&(a, b)| a == b || a >= n || b >= n) {
        return false;
    }
    let transitive = rel.iter().all(|&(a, b)| {
        rel.iter()
            .filter(|&&(c, _)| c == b)
            .all(|&(_, d)| rel.contains(&(a, d)))
    });
    if !transitive {
        return false;
    }
    let eps: Vec<char> = w
        .epsilon
        .0
        .iter()
        .map(|p| if *p == crate::syntax::Polarity::Pos { '1' } else { 'd' })
        .collect();
    let less = |k: usize, i: usize| rel.contains(&(k, i));
    for (side, t, s) in [(Side::Lhs, lhs, '+'), (Side::Rhs, rhs, '-')] {
        let listed: Vec<_> = w.branches.iter().filter(|b| b.side == side).collect();
        let all = branches(t, s);
        if listed.len() != all.len() {
            return false;
        }
        for b in listed {
            // walk the listed path independently
            let mut cur = t;
            let mut sign = s;
            let mut steps = Vec::new();
            for &i in &b.path {
                match cur {
                    Term::Unary(c, a) if i == 0 => {
                        steps.push(Step {
                            sign,
                            token: c.token(),
                            sibling: None,
                        });
                        if *c == Conn::Sim {
                            sign = flip(sign);
                        }
                        cur = a;
                    }
                    Term::Binary(c, a, bb) if i < 2 => {
                        let (x, y) = if i == 0 { (a, bb) } else { (bb, a) };
                        steps.push(Step {
                            sign,
                            token: c.token(),
                            sibling: Some((&**y, sign)),
                        });
                        cur = x;
                    }
                    _ => return false,
                }
            }
            let is_leaf = matches!(cur, Term::Atom(_) | Term::Meta(_) | Term::Const(_));
            if !is_leaf || b.skeleton > steps.len() {
                return false;
            }
            if !split_ok(&steps, cur, sign, b.skeleton, &vars, &eps, &less) {
                return false;
            }
        }
    }
    true
}

fn terms(sort: Sort, depth: usize) -> Vec<Term> {
    use Conn::*;
    if depth == 0 {
        return vec![];
    }
    let mut out = match sort {
        Sort::Dl => vec![Term::atom("p"), Term::konst(Top), Term::konst(Bot)],
        Sort::K => vec![Term::konst(One), Term::konst(Zero)],
    };
    if depth == 1 {
        return out;
    }
    let same = terms(sort, depth - 1);
    let other = terms(if sort == Sort::Dl { Sort::K } else { Sort::Dl }, depth - 1);
    let (unary_other, unary_same, bins): (Conn, Option<Conn>, [Conn; 2]) = match sort {
        Sort::Dl => (Box, None, [And, Or]),
        Sort::K => (Circ, Some(Sim), [Cap, Cup]),
    };
    out.extend(other.iter().map(|a| Term::unary(unary_other, a.clone())));
    if let Some(u) = unary_same {
        out.extend(same.iter().map(|a| Term::unary(u, a.clone())));
    }
    for c in bins {
        for a in &same {
            for b in &same {
                out.push(Term::binary(c, a.clone(), b.clone()));
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Every well-sorted inequality `s ≤ t` with both sides of depth at most
/// `depth` (a leaf has depth 1) whose only variable is `p`.
pub fn inequalities_over_one_variable(depth: usize) -> Vec<(Term, Term)> {
    let mut out = Vec::new();
    for sort in [Sort::Dl, Sort::K] {
        let ts = terms(sort, depth);
        for a in &ts {
            for b in &ts {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inequality_counts() {
        // DL: p ⊤ ⊥, □1 □0, 9 meets, 9 joins; K: 1 0, ∘p ∘⊤ ∘⊥, ∼1 ∼0, 4 ∩, 4 ∪
        assert_eq!(terms(Sort::Dl, 2).len(), 23);
        assert_eq!(terms(Sort::K, 2).len(), 15);
        assert_eq!(inequalities_over_one_variable(2).len(), 23 * 23 + 15 * 15);
    }

    #[test]
    fn table_roles() {
        assert!(skeleton('+', "or") && pia('+', "or") == Some("SRR"));
        assert!(!skeleton('+', "box") && pia('-', "box").is_none());
    }
}
