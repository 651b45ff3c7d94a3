//! Rule soundness on a finite heterogeneous algebra.
//!
//! Structural connectives are read by position, schema letters range over
//! the carrier of their sort, and a rule is sound when every assignment that
//! validates all premises validates the conclusion.

use std::fmt;

use crate::calculus::RuleSchema;
use crate::syntax::{reading, ExtTerm, MetaVar, Position, Sequent};

use super::eval::{carrier_size, leq_in, EvalError, Program};
use super::hetero::HeteroAlgebra;

/// Values for the schema letters of a rule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assignment(pub Vec<(MetaVar, usize)>);

impl Assignment {
    pub fn get(&self, name: &str) -> Option<usize> {
        self.0.iter().find(|(m, _)| &*m.name == name).map(|p| p.1)
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(m, v)| format!("{} ↦ {}", m.name, v))
            .collect();
        write!(f, "{}", parts.join(", "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Soundness {
    Sound,
    Counter(Assignment),
}

impl Soundness {
    pub fn is_sound(&self) -> bool {
        matches!(self, Soundness::Sound)
    }
}

struct Compiled {
    lhs: Program,
    rhs: Program,
    sort: crate::syntax::Sort,
}

fn compile(s: &Sequent, metas: &[MetaVar]) -> Result<Compiled, EvalError> {
    let mut slot = |leaf: &ExtTerm| match leaf {
        ExtTerm::Meta(m) => Ok(metas.iter().position(|x| x == m).expect("collected")),
        ExtTerm::Atom(a) => Err(EvalError::MissingAtom(a.to_string())),
        ExtTerm::Op(..) => unreachable!(),
    };
    Ok(Compiled {
        lhs: Program::compile(&reading(&s.ant, Position::Precedent), &mut slot)?,
        rhs: Program::compile(&reading(&s.suc, Position::Succedent), &mut slot)?,
        sort: s.sort(),
    })
}

/// Exhaustive check over all assignments of the schema letters.
pub fn rule_sound(rule: &RuleSchema, hh: &HeteroAlgebra) -> Soundness {
    let mut metas: Vec<MetaVar> = Vec::new();
    for s in rule.premises.iter().chain(std::iter::once(&rule.conclusion)) {
        for m in s.ant.metas().into_iter().chain(s.suc.metas()) {
            if !metas.contains(&m) {
                metas.push(m);
            }
        }
    }
    let prem: Vec<Compiled> = rule
        .premises
        .iter()
        .map(|s| compile(s, &metas).expect("schemas have no atoms"))
        .collect();
    let conc = compile(&rule.conclusion, &metas).expect("schemas have no atoms");
    let sizes: Vec<usize> = metas.iter().map(|m| carrier_size(hh, m.sort)).collect();
    let mut env = vec![0; metas.len()];
    let mut stack = Vec::new();
    let holds = |c: &Compiled, env: &[usize], stack: &mut Vec<usize>| {
        let a = c.lhs.run(hh, env, stack);
        let b = c.rhs.run(hh, env, stack);
        leq_in(hh, c.sort, a, b)
    };
    loop {
        if prem.iter().all(|p| holds(p, &env, &mut stack)) && !holds(&conc, &env, &mut stack) {
            return Soundness::Counter(Assignment(
                metas.iter().cloned().zip(env.iter().copied()).collect(),
            ));
        }
        let mut i = env.len();
        loop {
            if i == 0 {
                return Soundness::Sound;
            }
            i -= 1;
            env[i] += 1;
            if env[i] < sizes[i] {
                break;
            }
            env[i] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{heterogenize, FiniteSma};
    use crate::calculus::{find_rule, System};

    #[test]
    fn ws_rule() {
        let ws = find_rule(System::Ws, "WS").unwrap();
        let good = heterogenize(&FiniteSma::three_chain(0)).unwrap();
        assert!(rule_sound(ws, &good).is_sound());
        let bad = heterogenize(&FiniteSma::three_chain(1)).unwrap();
        match rule_sound(ws, &bad) {
            Soundness::Counter(a) => assert_eq!(a.get("X"), Some(1)),
            Soundness::Sound => panic!("WS should fail when m' = m"),
        }
    }

    #[test]
    fn display_rules_sound() {
        let hh = heterogenize(&FiniteSma::three_chain(1)).unwrap();
        for name in ["res_L_l.dn", "res_L_l.up", "adj_LD.dn", "adj_DL_r.up", "cont.up"] {
            let r = find_rule(System::Sm, name).unwrap();
            assert!(rule_sound(r, &hh).is_sound(), "{name}");
        }
    }
}
