//! Evaluation of extended terms and validity of sequents.

use std::collections::BTreeMap;

use crate::syntax::{reading, Atom, ExtOp, ExtTerm, Formula, Position, Sequent, Sort};

use super::hetero::HeteroAlgebra;
use super::sma::FiniteSma;

/// Assignment of DL atoms to elements of `L`.
pub type Valuation = BTreeMap<Atom, usize>;

/// Largest number of atoms [`validate`] enumerates over.
pub const MAX_ATOMS: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error("no binding for atom {0}")]
    MissingAtom(String),
    #[error("no binding for metavariable {0}")]
    MissingMeta(String),
    #[error("sequent has {0} atoms; at most {MAX_ATOMS} are enumerated")]
    TooManyAtoms(usize),
}

/// Verdict of [`validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Validity {
    Valid,
    Countermodel(Valuation),
}

impl Validity {
    pub fn is_valid(&self) -> bool {
        matches!(self, Validity::Valid)
    }
}

#[derive(Clone, Debug)]
enum Instr {
    Load(usize),
    Op(ExtOp),
}

/// A term compiled to postfix code over numbered leaves.
#[derive(Clone, Debug)]
pub struct Program {
    code: Vec<Instr>,
    sort: Sort,
}

impl Program {
    /// `slot` numbers the leaves (atoms and metavariables).
    pub fn compile<F>(t: &ExtTerm, slot: &mut F) -> Result<Program, EvalError>
    where
        F: FnMut(&ExtTerm) -> Result<usize, EvalError>,
    {
        let mut code = Vec::new();
        fn go<F>(t: &ExtTerm, slot: &mut F, code: &mut Vec<Instr>) -> Result<(), EvalError>
        where
            F: FnMut(&ExtTerm) -> Result<usize, EvalError>,
        {
            match t {
                ExtTerm::Op(o, args) => {
                    for a in args {
                        go(a, slot, code)?;
                    }
                    code.push(Instr::Op(*o));
                }
                leaf => code.push(Instr::Load(slot(leaf)?)),
            }
            Ok(())
        }
        go(t, slot, &mut code)?;
        Ok(Program {
            code,
            sort: t.sort(),
        })
    }

    pub fn sort(&self) -> Sort {
        self.sort
    }

    pub fn run(&self, hh: &HeteroAlgebra, env: &[usize], stack: &mut Vec<usize>) -> usize {
        stack.clear();
        for ins in &self.code {
            match ins {
                Instr::Load(i) => stack.push(env[*i]),
                Instr::Op(o) => {
                    let v = apply(hh, *o, stack);
                    stack.push(v);
                }
            }
        }
        stack.pop().expect("nonempty program")
    }
}

fn apply(hh: &HeteroAlgebra, o: ExtOp, stack: &mut Vec<usize>) -> usize {
    let l = hh.l();
    let d = hh.d().lattice();
    let ops = hh.derived_ops();
    let mut pop = || stack.pop().expect("operand");
    use ExtOp::*;
    match o {
        Top => l.top(),
        Bot => l.bot(),
        One => d.top(),
        Zero => d.bot(),
        Box => hh.e(pop()),
        Circ => hh.h(pop()),
        Sim => hh.d().star(pop()),
        HLeft => ops.h_left(pop()),
        HRight => ops.h_right(pop()),
        ELeft => ops.e_left(pop()),
        _ => {
            let b = pop();
            let a = pop();
            match o {
                And => l.meet(a, b),
                Or => l.join(a, b),
                Cap => d.meet(a, b),
                Cup => d.join(a, b),
                HeytingArrow => ops.l_arrow(a, b),
                CoImp => ops.l_coimp(a, b),
                KArrow => ops.d_arrow(a, b),
                KCoImp => ops.d_coimp(a, b),
                _ => unreachable!("unary or nullary handled above"),
            }
        }
    }
}

/// Order of the carrier a sort is interpreted in.
pub fn leq_in(hh: &HeteroAlgebra, sort: Sort, a: usize, b: usize) -> bool {
    match sort {
        Sort::Dl => hh.l().leq(a, b),
        Sort::K => hh.d().lattice().leq(a, b),
    }
}

/// Size of the carrier a sort is interpreted in.
pub fn carrier_size(hh: &HeteroAlgebra, sort: Sort) -> usize {
    match sort {
        Sort::Dl => hh.l().size(),
        Sort::K => hh.d().size(),
    }
}

/// Compositional evaluation under a valuation of the atoms.
pub fn eval(t: &ExtTerm, hh: &HeteroAlgebra, v: &Valuation) -> Result<usize, EvalError> {
    let mut env = Vec::new();
    let prog = Program::compile(t, &mut |leaf| match leaf {
        ExtTerm::Atom(a) => {
            let x = *v.get(a).ok_or_else(|| EvalError::MissingAtom(a.to_string()))?;
            env.push(x);
            Ok(env.len() - 1)
        }
        ExtTerm::Meta(m) => Err(EvalError::MissingMeta(m.name.to_string())),
        ExtTerm::Op(..) => unreachable!(),
    })?;
    Ok(prog.run(hh, &env, &mut Vec::new()))
}

/// Valid iff the antecedent's reading is below the succedent's reading for
/// every valuation of the atoms over `L`.
pub fn validate(s: &Sequent, hh: &HeteroAlgebra) -> Result<Validity, EvalError> {
    let atoms = s.atoms();
    if atoms.len() > MAX_ATOMS {
        return Err(EvalError::TooManyAtoms(atoms.len()));
    }
    let mut slot = |leaf: &ExtTerm| match leaf {
        ExtTerm::Atom(a) => Ok(atoms.iter().position(|b| b == a).expect("collected")),
        ExtTerm::Meta(m) => Err(EvalError::MissingMeta(m.name.to_string())),
        ExtTerm::Op(..) => unreachable!(),
    };
    let lhs = Program::compile(&reading(&s.ant, Position::Precedent), &mut slot)?;
    let rhs = Program::compile(&reading(&s.suc, Position::Succedent), &mut slot)?;
    let n = hh.l().size();
    let k = atoms.len();
    let mut env = vec![0; k];
    let mut stack = Vec::new();
    loop {
        let a = lhs.run(hh, &env, &mut stack);
        let b = rhs.run(hh, &env, &mut stack);
        if !leq_in(hh, s.sort(), a, b) {
            let v = atoms.iter().cloned().zip(env.iter().copied()).collect();
            return Ok(Validity::Countermodel(v));
        }
        // odometer, last atom fastest
        let mut i = k;
        loop {
            if i == 0 {
                return Ok(Validity::Valid);
            }
            i -= 1;
            env[i] += 1;
            if env[i] < n {
                break;
            }
            env[i] = 0;
        }
    }
}

/// Value of a single-type formula, reading ¬ as `′`.
pub fn eval_formula(f: &Formula, a: &FiniteSma, v: &Valuation) -> Result<usize, EvalError> {
    let l = a.lattice();
    Ok(match f {
        Formula::Atom(p) => *v.get(p).ok_or_else(|| EvalError::MissingAtom(p.to_string()))?,
        Formula::Top => l.top(),
        Formula::Bot => l.bot(),
        Formula::Neg(x) => a.neg(eval_formula(x, a, v)?),
        Formula::And(x, y) => l.meet(eval_formula(x, a, v)?, eval_formula(y, a, v)?),
        Formula::Or(x, y) => l.join(eval_formula(x, a, v)?, eval_formula(y, a, v)?),
    })
}

/// Single-type validity of `lhs ⊢ rhs` in an SMA.
pub fn validate_single(lhs: &Formula, rhs: &Formula, a: &FiniteSma) -> Result<Validity, EvalError> {
    let mut atoms = lhs.atoms();
    atoms.extend(rhs.atoms());
    atoms.sort();
    atoms.dedup();
    if atoms.len() > MAX_ATOMS {
        return Err(EvalError::TooManyAtoms(atoms.len()));
    }
    for v in valuations(&atoms, a.size()) {
        if !a.lattice().leq(eval_formula(lhs, a, &v)?, eval_formula(rhs, a, &v)?) {
            return Ok(Validity::Countermodel(v));
        }
    }
    Ok(Validity::Valid)
}

/// All valuations of `atoms` over `0..n`, last atom varying fastest.
pub fn valuations(atoms: &[Atom], n: usize) -> Vec<Valuation> {
    let total = n.pow(atoms.len() as u32);
    (0..total)
        .map(|mut code| {
            let mut vals = vec![0; atoms.len()];
            for i in (0..atoms.len()).rev() {
                vals[i] = code % n;
                code /= n;
            }
            atoms.iter().cloned().zip(vals).collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::heterogenize;
    use crate::syntax::{parse_sequent, parse_term};

    fn val(pairs: &[(&str, usize)]) -> Valuation {
        pairs.iter().map(|&(a, x)| (Atom::from(a), x)).collect()
    }

    #[test]
    fn eval_examples() {
        let hh = heterogenize(&FiniteSma::three_chain(0)).unwrap();
        let t = ExtTerm::from_formula(&parse_term("(box (circ p))", Sort::Dl).unwrap());
        assert_eq!(eval(&t, &hh, &val(&[("p", 1)])).unwrap(), 2);
        let t = ExtTerm::from_formula(&parse_term("(box (sim (circ p)))", Sort::Dl).unwrap());
        assert_eq!(eval(&t, &hh, &val(&[("p", 1)])).unwrap(), 0);
        let top = ExtTerm::from_formula(&parse_term("top", Sort::Dl).unwrap());
        assert_eq!(eval(&top, &hh, &val(&[])).unwrap(), 2);
        assert!(matches!(
            eval(&t, &hh, &val(&[])),
            Err(EvalError::MissingAtom(_))
        ));
    }

    #[test]
    fn validate_examples() {
        let hh = heterogenize(&FiniteSma::three_chain(0)).unwrap();
        let s = parse_sequent("(seq bot p)").unwrap();
        assert!(validate(&s, &hh).unwrap().is_valid());
        let s = parse_sequent("(seq (box (sim (circ (box (sim (circ p)))))) p)").unwrap();
        assert_eq!(
            validate(&s, &hh).unwrap(),
            Validity::Countermodel(val(&[("p", 1)]))
        );
        let many = parse_sequent("(seq (and (and p q) (and r s)) t)").unwrap();
        assert!(matches!(validate(&many, &hh), Err(EvalError::TooManyAtoms(5))));
    }
}
