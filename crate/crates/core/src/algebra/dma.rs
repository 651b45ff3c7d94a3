//! De Morgan and Boolean algebras.

use super::lattice::FiniteLattice;
use super::report::{Check, Report};
use super::sma::search_tuples;
use super::AlgebraError;

/// A finite De Morgan algebra. The lattice operations are ∩, ∪, 1, 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteDma {
    lattice: FiniteLattice,
    star: Vec<usize>,
}

/// D1–D5 for a lattice with a unary operation.
pub(crate) fn dm_report(l: &FiniteLattice, star: &[usize]) -> Report {
    let n = l.size();
    let mut r = Report::default();
    r.push(Check::from_search(
        "D1",
        l.distributivity_failure()
            .map(|(a, b, c)| (vec![a, b, c], format!("at ({a}, {b}, {c}): not distributive"))),
    ));
    let d2 = if star[l.bot()] != l.top() {
        Some((vec![l.bot()], "at bottom: 0* ≠ 1".to_string()))
    } else if star[l.top()] != l.bot() {
        Some((vec![l.top()], "at top: 1* ≠ 0".to_string()))
    } else {
        None
    };
    r.push(Check::from_search("D2", d2));
    r.push(Check::from_search(
        "D3",
        search_tuples(n, 2, |t| {
            (star[l.join(t[0], t[1])] != l.meet(star[t[0]], star[t[1]]))
                .then(|| format!("at ({}, {}): (a∪b)* ≠ a*∩b*", t[0], t[1]))
        }),
    ));
    r.push(Check::from_search(
        "D4",
        search_tuples(n, 2, |t| {
            (star[l.meet(t[0], t[1])] != l.join(star[t[0]], star[t[1]]))
                .then(|| format!("at ({}, {}): (a∩b)* ≠ a*∪b*", t[0], t[1]))
        }),
    ));
    r.push(Check::from_search(
        "D5",
        search_tuples(n, 1, |t| {
            (star[star[t[0]]] != t[0]).then(|| format!("at {}: a** ≠ a", t[0]))
        }),
    ));
    r
}

fn b1(l: &FiniteLattice, star: &[usize]) -> Check {
    Check::from_search(
        "B1",
        search_tuples(l.size(), 1, |t| {
            (l.join(t[0], star[t[0]]) != l.top()).then(|| format!("at {}: a∪a* ≠ 1", t[0]))
        }),
    )
}

/// Checks D1–D5 and reports B1 as an extra line.
pub fn check_dma(leq: &[Vec<bool>], star: &[usize]) -> Result<(Report, Option<FiniteDma>), AlgebraError> {
    let lattice = FiniteLattice::from_leq(leq)?;
    super::sma::check_unary_table(lattice.size(), star, "star")?;
    let r = dm_report(&lattice, star);
    let ok = r.passed();
    let mut full = r;
    full.push(b1(&lattice, star));
    Ok((
        full,
        ok.then(|| FiniteDma {
            lattice,
            star: star.to_vec(),
        }),
    ))
}

impl FiniteDma {
    pub fn new(lattice: FiniteLattice, star: Vec<usize>) -> Result<FiniteDma, AlgebraError> {
        super::sma::check_unary_table(lattice.size(), &star, "star")?;
        let r = dm_report(&lattice, &star);
        if let Some(c) = r.failures().next() {
            return Err(AlgebraError::Axiom(c.to_string()));
        }
        Ok(FiniteDma { lattice, star })
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn size(&self) -> usize {
        self.lattice.size()
    }

    pub fn star(&self, a: usize) -> usize {
        self.star[a]
    }

    pub fn star_table(&self) -> &[usize] {
        &self.star
    }

    pub fn is_boolean(&self) -> bool {
        b1(&self.lattice, &self.star).passed
    }

    /// D1–D5 plus B1.
    pub fn report(&self) -> Report {
        let mut r = dm_report(&self.lattice, &self.star);
        r.push(b1(&self.lattice, &self.star));
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kleene_and_boolean() {
        let k = FiniteDma::new(FiniteLattice::chain(3), vec![2, 1, 0]).unwrap();
        assert!(!k.is_boolean());
        let b = FiniteDma::new(FiniteLattice::boolean(2), vec![3, 2, 1, 0]).unwrap();
        assert!(b.is_boolean());
        assert!(FiniteDma::new(FiniteLattice::chain(3), vec![2, 0, 0]).is_err());
    }
}
