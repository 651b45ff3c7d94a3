//! Semi De Morgan algebras and their subvarieties.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::lattice::FiniteLattice;
use super::report::{Check, Report};
use super::AlgebraError;

/// A finite SMA: a bounded distributive lattice with `′` satisfying S2–S5.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteSma {
    lattice: FiniteLattice,
    neg: Vec<usize>,
}

/// Subvarieties recognised by [`FiniteSma::classify`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Variety {
    #[serde(rename = "LQMA")]
    Lqma,
    #[serde(rename = "UQMA")]
    Uqma,
    #[serde(rename = "DPL")]
    Dpl,
    #[serde(rename = "APL")]
    Apl,
    #[serde(rename = "WSA")]
    Wsa,
    #[serde(rename = "DMA")]
    Dma,
    #[serde(rename = "BA")]
    Ba,
}

pub const ALL_VARIETIES: [Variety; 7] = [
    Variety::Lqma,
    Variety::Uqma,
    Variety::Dpl,
    Variety::Apl,
    Variety::Wsa,
    Variety::Dma,
    Variety::Ba,
];

impl Variety {
    pub fn name(self) -> &'static str {
        match self {
            Variety::Lqma => "LQMA",
            Variety::Uqma => "UQMA",
            Variety::Dpl => "DPL",
            Variety::Apl => "APL",
            Variety::Wsa => "WSA",
            Variety::Dma => "DMA",
            Variety::Ba => "BA",
        }
    }

    pub fn parse(s: &str) -> Option<Variety> {
        ALL_VARIETIES
            .iter()
            .copied()
            .find(|v| v.name().eq_ignore_ascii_case(s))
    }
}

impl fmt::Display for Variety {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub type Flags = BTreeSet<Variety>;

pub fn flags_string(flags: &Flags) -> String {
    flags.iter().map(|v| v.name()).collect::<Vec<_>>().join(" ")
}

pub(crate) fn check_unary_table(n: usize, table: &[usize], what: &str) -> Result<(), AlgebraError> {
    if table.len() != n {
        return Err(AlgebraError::Malformed(format!(
            "{what} table has {} entries, expected {n}",
            table.len()
        )));
    }
    if let Some(&bad) = table.iter().find(|&&x| x >= n) {
        return Err(AlgebraError::Malformed(format!(
            "{what} table entry {bad} out of range 0..{n}"
        )));
    }
    Ok(())
}

pub(crate) fn search_tuples<F>(n: usize, arity: usize, mut bad: F) -> Option<(Vec<usize>, String)>
where
    F: FnMut(&[usize]) -> Option<String>,
{
    let mut t = vec![0; arity];
    loop {
        if let Some(msg) = bad(&t) {
            return Some((t, msg));
        }
        let mut i = 0;
        loop {
            if i == arity {
                return None;
            }
            t[i] += 1;
            if t[i] < n {
                break;
            }
            t[i] = 0;
            i += 1;
        }
    }
}

fn s2(l: &FiniteLattice, neg: &[usize]) -> Option<(Vec<usize>, String)> {
    if neg[l.bot()] != l.top() {
        return Some((vec![l.bot()], format!("at bottom: ⊥′ = {} ≠ ⊤", neg[l.bot()])));
    }
    if neg[l.top()] != l.bot() {
        return Some((vec![l.top()], format!("at top: ⊤′ = {} ≠ ⊥", neg[l.top()])));
    }
    None
}

fn s3(l: &FiniteLattice, neg: &[usize]) -> Option<(Vec<usize>, String)> {
    search_tuples(l.size(), 2, |t| {
        let (a, b) = (t[0], t[1]);
        let lhs = neg[l.join(a, b)];
        let rhs = l.meet(neg[a], neg[b]);
        (lhs != rhs).then(|| format!("at ({a}, {b}): (a∨b)′ = {lhs} ≠ a′∧b′ = {rhs}"))
    })
}

fn s4(l: &FiniteLattice, neg: &[usize]) -> Option<(Vec<usize>, String)> {
    search_tuples(l.size(), 2, |t| {
        let (a, b) = (t[0], t[1]);
        let lhs = neg[neg[l.meet(a, b)]];
        let rhs = l.meet(neg[neg[a]], neg[neg[b]]);
        (lhs != rhs).then(|| format!("at ({a}, {b}): (a∧b)″ = {lhs} ≠ a″∧b″ = {rhs}"))
    })
}

fn s5(l: &FiniteLattice, neg: &[usize]) -> Option<(Vec<usize>, String)> {
    search_tuples(l.size(), 1, |t| {
        let a = t[0];
        (neg[a] != neg[neg[neg[a]]])
            .then(|| format!("at {a}: a′ = {} ≠ a‴ = {}", neg[a], neg[neg[neg[a]]]))
    })
}

/// Checks S1–S5 for a candidate given by its order and negation tables.
pub fn check_sma(
    leq: &[Vec<bool>],
    neg: &[usize],
) -> Result<(Report, Option<FiniteSma>), AlgebraError> {
    let n = leq.len();
    if leq.iter().any(|r| r.len() != n) {
        return Err(AlgebraError::Malformed("leq table is not square".into()));
    }
    check_unary_table(n, neg, "neg")?;
    let mut report = Report::default();
    let lattice = match FiniteLattice::from_leq(leq) {
        Ok(l) => l,
        Err(AlgebraError::NotLattice(msg)) => {
            report.push(Check::fail("S1", vec![], msg));
            return Ok((report, None));
        }
        Err(e) => return Err(e),
    };
    report.push(Check::from_search(
        "S1",
        lattice.distributivity_failure().map(|(a, b, c)| {
            (
                vec![a, b, c],
                format!("at ({a}, {b}, {c}): lattice is not distributive"),
            )
        }),
    ));
    report.push(Check::from_search("S2", s2(&lattice, neg)));
    report.push(Check::from_search("S3", s3(&lattice, neg)));
    report.push(Check::from_search("S4", s4(&lattice, neg)));
    report.push(Check::from_search("S5", s5(&lattice, neg)));
    let sma = report.passed().then(|| FiniteSma {
        lattice,
        neg: neg.to_vec(),
    });
    Ok((report, sma))
}

impl FiniteSma {
    /// Validating constructor.
    pub fn new(lattice: FiniteLattice, neg: Vec<usize>) -> Result<FiniteSma, AlgebraError> {
        let (report, sma) = check_sma(&lattice.leq_table(), &neg)?;
        sma.ok_or_else(|| AlgebraError::Axiom(report.failures().next().unwrap().to_string()))
    }

    /// Skips the axiom check; callers guarantee S1–S5.
    pub(crate) fn new_unchecked(lattice: FiniteLattice, neg: Vec<usize>) -> FiniteSma {
        debug_assert!(check_sma(&lattice.leq_table(), &neg).unwrap().0.passed());
        FiniteSma { lattice, neg }
    }

    /// The 3-chain 0 < m < 1 with the given value of m′.
    pub fn three_chain(m_neg: usize) -> FiniteSma {
        FiniteSma::new(FiniteLattice::chain(3), vec![2, m_neg, 0]).expect("3-chain SMA")
    }

    /// The two-element Boolean algebra.
    pub fn two_chain() -> FiniteSma {
        FiniteSma::new(FiniteLattice::chain(2), vec![1, 0]).expect("2-chain SMA")
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn size(&self) -> usize {
        self.lattice.size()
    }

    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    pub fn neg_table(&self) -> &[usize] {
        &self.neg
    }

    /// Per-variety verdicts with witnesses.
    pub fn variety_report(&self) -> Report {
        let l = &self.lattice;
        let n = l.size();
        let ng = &self.neg;
        let dn = |a: usize| ng[ng[a]];
        let mut r = Report::default();
        r.push(Check::from_search(
            "LQMA",
            search_tuples(n, 1, |t| {
                (!l.leq(t[0], dn(t[0]))).then(|| format!("S6a at {}: a ≰ a″", t[0]))
            }),
        ));
        r.push(Check::from_search(
            "UQMA",
            search_tuples(n, 1, |t| {
                (!l.leq(dn(t[0]), t[0])).then(|| format!("S6b at {}: a″ ≰ a", t[0]))
            }),
        ));
        r.push(Check::from_search(
            "DPL",
            search_tuples(n, 1, |t| {
                (l.meet(ng[t[0]], dn(t[0])) != l.bot())
                    .then(|| format!("S7 at {}: a′∧a″ ≠ ⊥", t[0]))
            }),
        ));
        r.push(Check::from_search(
            "APL",
            search_tuples(n, 1, |t| {
                (l.meet(t[0], ng[t[0]]) != l.bot()).then(|| format!("S8 at {}: a∧a′ ≠ ⊥", t[0]))
            }),
        ));
        r.push(Check::from_search(
            "WSA",
            search_tuples(n, 1, |t| {
                (l.join(ng[t[0]], dn(t[0])) != l.top())
                    .then(|| format!("S9 at {}: a′∨a″ ≠ ⊤", t[0]))
            }),
        ));
        let dma = super::dma::dm_report(l, ng);
        let is_dma = dma.passed();
        r.push(Check::from_search(
            "DMA",
            dma.failures().next().map(|c| (c.witness.clone(), c.to_string())),
        ));
        let b1 = search_tuples(n, 1, |t| {
            (l.join(t[0], ng[t[0]]) != l.top()).then(|| format!("B1 at {}: a∨a′ ≠ ⊤", t[0]))
        });
        r.push(Check::from_search(
            "BA",
            if is_dma {
                b1
            } else {
                Some((vec![], "not a DMA".into()))
            },
        ));
        r
    }

    /// The set of subvarieties the algebra belongs to.
    pub fn classify(&self) -> Flags {
        let r = self.variety_report();
        ALL_VARIETIES
            .iter()
            .copied()
            .filter(|v| r.holds(v.name()))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fl(vs: &[Variety]) -> Flags {
        vs.iter().copied().collect()
    }

    #[test]
    fn spec_examples() {
        let two = FiniteSma::two_chain();
        assert_eq!(two.classify(), ALL_VARIETIES.iter().copied().collect());
        let pc = FiniteSma::three_chain(0);
        use Variety::*;
        assert_eq!(pc.classify(), fl(&[Lqma, Dpl, Apl, Wsa]));
        let kleene = FiniteSma::three_chain(1);
        assert_eq!(kleene.classify(), fl(&[Lqma, Uqma, Dma]));
    }

    #[test]
    fn bad_bottom() {
        let l = FiniteLattice::chain(3);
        let (r, sma) = check_sma(&l.leq_table(), &[0, 0, 0]).unwrap();
        assert!(sma.is_none());
        let s2 = r.get("S2").unwrap();
        assert!(!s2.passed);
        assert_eq!(s2.witness, vec![0]);
        assert!(s2.to_string().starts_with("S2 fails at bottom"));
    }

    #[test]
    fn malformed() {
        let l = FiniteLattice::chain(3);
        assert!(check_sma(&l.leq_table(), &[2, 1]).is_err());
        assert!(check_sma(&l.leq_table(), &[2, 7, 0]).is_err());
    }
}
