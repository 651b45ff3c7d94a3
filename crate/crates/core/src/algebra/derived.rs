//! Residuals and adjoints computed by min/max scans.

use super::dma::FiniteDma;
use super::lattice::FiniteLattice;
use super::AlgebraError;

/// Tables for the operations interpreting the structural connectives that
/// have no logical counterpart.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DerivedOps {
    n: usize,
    m: usize,
    l_arrow: Vec<usize>,
    l_coimp: Vec<usize>,
    d_arrow: Vec<usize>,
    d_coimp: Vec<usize>,
    h_left: Vec<usize>,
    h_right: Vec<usize>,
    e_left: Vec<usize>,
}

fn missing(what: &str, args: &[usize]) -> AlgebraError {
    AlgebraError::AdjointMissing(format!("{what} undefined at {args:?}"))
}

fn residuals(l: &FiniteLattice) -> Result<(Vec<usize>, Vec<usize>), AlgebraError> {
    let n = l.size();
    let mut arrow = vec![0; n * n];
    let mut coimp = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            arrow[a * n + b] = l
                .greatest((0..n).filter(|&c| l.leq(l.meet(a, c), b)))
                .ok_or_else(|| missing("arrow", &[a, b]))?;
            coimp[a * n + b] = l
                .least((0..n).filter(|&c| l.leq(b, l.join(a, c))))
                .ok_or_else(|| missing("co-implication", &[a, b]))?;
        }
    }
    Ok((arrow, coimp))
}

impl DerivedOps {
    /// Computes every table and verifies its defining adjunction.
    pub fn compute(
        l: &FiniteLattice,
        d: &FiniteDma,
        e: &[usize],
        h: &[usize],
    ) -> Result<DerivedOps, AlgebraError> {
        let dl = d.lattice();
        let (n, m) = (l.size(), dl.size());
        let (l_arrow, l_coimp) = residuals(l)?;
        let (d_arrow, d_coimp) = residuals(dl)?;
        let mut h_left = vec![0; m];
        let mut h_right = vec![0; m];
        for g in 0..m {
            h_left[g] = l
                .least((0..n).filter(|&x| dl.leq(g, h[x])))
                .ok_or_else(|| missing("h-left", &[g]))?;
            h_right[g] = l
                .greatest((0..n).filter(|&x| dl.leq(h[x], g)))
                .ok_or_else(|| missing("h-right", &[g]))?;
        }
        let mut e_left = vec![0; n];
        for a in 0..n {
            e_left[a] = dl
                .least((0..m).filter(|&al| l.leq(a, e[al])))
                .ok_or_else(|| missing("e-left", &[a]))?;
        }
        let ops = DerivedOps {
            n,
            m,
            l_arrow,
            l_coimp,
            d_arrow,
            d_coimp,
            h_left,
            h_right,
            e_left,
        };
        ops.verify(l, d, e, h)?;
        Ok(ops)
    }

    fn verify(
        &self,
        l: &FiniteLattice,
        d: &FiniteDma,
        e: &[usize],
        h: &[usize],
    ) -> Result<(), AlgebraError> {
        let dl = d.lattice();
        let bad = |what: &str, args: &[usize]| {
            Err(AlgebraError::AdjointMissing(format!(
                "{what} adjunction fails at {args:?}"
            )))
        };
        for a in 0..self.n {
            for b in 0..self.n {
                for c in 0..self.n {
                    if l.leq(l.meet(a, c), b) != l.leq(c, self.l_arrow(a, b)) {
                        return bad("arrow", &[a, b, c]);
                    }
                    if l.leq(b, l.join(a, c)) != l.leq(self.l_coimp(a, b), c) {
                        return bad("co-implication", &[a, b, c]);
                    }
                }
            }
        }
        for a in 0..self.m {
            for b in 0..self.m {
                for c in 0..self.m {
                    if dl.leq(dl.meet(a, c), b) != dl.leq(c, self.d_arrow(a, b)) {
                        return bad("k-heyting", &[a, b, c]);
                    }
                    if dl.leq(b, dl.join(a, c)) != dl.leq(self.d_coimp(a, b), c) {
                        return bad("k-co-implication", &[a, b, c]);
                    }
                }
            }
        }
        for g in 0..self.m {
            for x in 0..self.n {
                if l.leq(self.h_left(g), x) != dl.leq(g, h[x]) {
                    return bad("h-left", &[g, x]);
                }
                if l.leq(x, self.h_right(g)) != dl.leq(h[x], g) {
                    return bad("h-right", &[g, x]);
                }
                if dl.leq(self.e_left(x), g) != l.leq(x, e[g]) {
                    return bad("e-left", &[x, g]);
                }
            }
        }
        Ok(())
    }

    pub fn l_arrow(&self, a: usize, b: usize) -> usize {
        self.l_arrow[a * self.n + b]
    }

    pub fn l_coimp(&self, a: usize, b: usize) -> usize {
        self.l_coimp[a * self.n + b]
    }

    pub fn d_arrow(&self, a: usize, b: usize) -> usize {
        self.d_arrow[a * self.m + b]
    }

    pub fn d_coimp(&self, a: usize, b: usize) -> usize {
        self.d_coimp[a * self.m + b]
    }

    pub fn h_left(&self, g: usize) -> usize {
        self.h_left[g]
    }

    pub fn h_right(&self, g: usize) -> usize {
        self.h_right[g]
    }

    pub fn e_left(&self, a: usize) -> usize {
        self.e_left[a]
    }
}
