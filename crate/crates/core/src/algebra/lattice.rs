//! Finite bounded lattices given by their order table.

use super::AlgebraError;

/// A finite bounded lattice on `0..n`. Meets and joins are precomputed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteLattice {
    n: usize,
    leq: Vec<bool>,
    meet: Vec<usize>,
    join: Vec<usize>,
    bot: usize,
    top: usize,
}

impl FiniteLattice {
    /// Validates that `leq` is a partial order with all binary meets and
    /// joins and two distinct bounds. Distributivity is checked separately.
    pub fn from_leq(leq: &[Vec<bool>]) -> Result<FiniteLattice, AlgebraError> {
        let n = leq.len();
        if n < 2 {
            return Err(AlgebraError::Malformed(format!(
                "lattice needs at least 2 elements, got {n}"
            )));
        }
        if let Some(row) = leq.iter().position(|r| r.len() != n) {
            return Err(AlgebraError::Malformed(format!(
                "leq table is not square (row {row} has {} entries, expected {n})",
                leq[row].len()
            )));
        }
        let le = |a: usize, b: usize| leq[a][b];
        for a in 0..n {
            if !le(a, a) {
                return Err(AlgebraError::NotLattice(format!("leq not reflexive at {a}")));
            }
            for b in 0..n {
                if a != b && le(a, b) && le(b, a) {
                    return Err(AlgebraError::NotLattice(format!(
                        "leq not antisymmetric at ({a}, {b})"
                    )));
                }
                for c in 0..n {
                    if le(a, b) && le(b, c) && !le(a, c) {
                        return Err(AlgebraError::NotLattice(format!(
                            "leq not transitive at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                let lower: Vec<usize> = (0..n).filter(|&c| le(c, a) && le(c, b)).collect();
                let glb = lower.iter().copied().find(|&c| lower.iter().all(|&d| le(d, c)));
                let upper: Vec<usize> = (0..n).filter(|&c| le(a, c) && le(b, c)).collect();
                let lub = upper.iter().copied().find(|&c| upper.iter().all(|&d| le(c, d)));
                match (glb, lub) {
                    (Some(m), Some(j)) => {
                        meet[a * n + b] = m;
                        join[a * n + b] = j;
                    }
                    _ => {
                        return Err(AlgebraError::NotLattice(format!(
                            "no meet or join for ({a}, {b})"
                        )))
                    }
                }
            }
        }
        let bot = (0..n).find(|&b| (0..n).all(|c| le(b, c))).ok_or_else(|| {
            AlgebraError::NotLattice("no bottom element".into())
        })?;
        let top = (0..n).find(|&t| (0..n).all(|c| le(c, t))).ok_or_else(|| {
            AlgebraError::NotLattice("no top element".into())
        })?;
        Ok(FiniteLattice {
            n,
            leq: leq.iter().flatten().copied().collect(),
            meet,
            join,
            bot,
            top,
        })
    }

    /// The chain `0 < 1 < … < n-1`.
    pub fn chain(n: usize) -> FiniteLattice {
        let leq: Vec<Vec<bool>> = (0..n).map(|a| (0..n).map(|b| a <= b).collect()).collect();
        FiniteLattice::from_leq(&leq).expect("chain is a lattice")
    }

    /// The lattice of subsets of an `k`-element set, elements as bitmasks.
    pub fn boolean(k: usize) -> FiniteLattice {
        let n = 1usize << k;
        let leq: Vec<Vec<bool>> = (0..n)
            .map(|a| (0..n).map(|b| a & !b == 0).collect())
            .collect();
        FiniteLattice::from_leq(&leq).expect("powerset is a lattice")
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.n + b]
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.n + b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.n + b]
    }

    pub fn bot(&self) -> usize {
        self.bot
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn leq_table(&self) -> Vec<Vec<bool>> {
        (0..self.n)
            .map(|a| (0..self.n).map(|b| self.leq(a, b)).collect())
            .collect()
    }

    /// First triple violating a∧(b∨c) = (a∧b)∨(a∧c).
    pub fn distributivity_failure(&self) -> Option<(usize, usize, usize)> {
        for a in self.elements() {
            for b in self.elements() {
                for c in self.elements() {
                    let l = self.meet(a, self.join(b, c));
                    let r = self.join(self.meet(a, b), self.meet(a, c));
                    if l != r {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn is_distributive(&self) -> bool {
        self.distributivity_failure().is_none()
    }

    /// Elements with exactly one lower cover.
    pub fn join_irreducibles(&self) -> Vec<usize> {
        self.elements()
            .filter(|&a| a != self.bot && self.lower_covers(a).len() == 1)
            .collect()
    }

    pub fn lower_covers(&self, a: usize) -> Vec<usize> {
        self.elements()
            .filter(|&b| {
                b != a
                    && self.leq(b, a)
                    && !self
                        .elements()
                        .any(|c| c != a && c != b && self.leq(b, c) && self.leq(c, a))
            })
            .collect()
    }

    /// Meet of a set; the empty meet is the top.
    pub fn meet_all<I: IntoIterator<Item = usize>>(&self, it: I) -> usize {
        it.into_iter().fold(self.top, |m, x| self.meet(m, x))
    }

    pub fn join_all<I: IntoIterator<Item = usize>>(&self, it: I) -> usize {
        it.into_iter().fold(self.bot, |m, x| self.join(m, x))
    }

    /// Least element of `set` if it has one.
    pub fn least<I: IntoIterator<Item = usize>>(&self, set: I) -> Option<usize> {
        let v: Vec<usize> = set.into_iter().collect();
        v.iter().copied().find(|&x| v.iter().all(|&y| self.leq(x, y)))
    }

    /// Greatest element of `set` if it has one.
    pub fn greatest<I: IntoIterator<Item = usize>>(&self, set: I) -> Option<usize> {
        let v: Vec<usize> = set.into_iter().collect();
        v.iter().copied().find(|&x| v.iter().all(|&y| self.leq(y, x)))
    }

    /// Order restricted to a subset, reindexed by position in `subset`.
    pub fn restrict(&self, subset: &[usize]) -> Result<FiniteLattice, AlgebraError> {
        let leq: Vec<Vec<bool>> = subset
            .iter()
            .map(|&a| subset.iter().map(|&b| self.leq(a, b)).collect())
            .collect();
        FiniteLattice::from_leq(&leq)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chains_and_cubes() {
        let c = FiniteLattice::chain(3);
        assert_eq!((c.bot(), c.top()), (0, 2));
        assert_eq!(c.meet(1, 2), 1);
        assert_eq!(c.join(0, 1), 1);
        assert_eq!(c.join_irreducibles(), vec![1, 2]);
        assert!(c.is_distributive());
        let b = FiniteLattice::boolean(2);
        assert_eq!(b.join_irreducibles(), vec![1, 2]);
        assert_eq!(b.join(1, 2), 3);
    }

    #[test]
    fn rejects_non_lattices() {
        // two incomparable maximal elements
        let leq = vec![
            vec![true, true, true],
            vec![false, true, false],
            vec![false, false, true],
        ];
        assert!(FiniteLattice::from_leq(&leq).is_err());
        assert!(FiniteLattice::from_leq(&[vec![true]]).is_err());
        assert!(FiniteLattice::from_leq(&[vec![true, true], vec![false]]).is_err());
    }

    #[test]
    fn diamond_is_not_distributive() {
        // M3: 0 < a, b, c < 1
        let n = 5;
        let leq: Vec<Vec<bool>> = (0..n)
            .map(|x| (0..n).map(|y| x == y || x == 0 || y == 4).collect())
            .collect();
        let l = FiniteLattice::from_leq(&leq).unwrap();
        assert!(l.distributivity_failure().is_some());
    }
}
