//! Isomorphism search by backtracking over order-preserving bijections.

use super::dma::FiniteDma;
use super::lattice::FiniteLattice;
use super::sma::FiniteSma;

/// A finite lattice with one unary operation.
pub trait UnaryAlgebra {
    fn lattice(&self) -> &FiniteLattice;
    fn op(&self, a: usize) -> usize;
}

impl UnaryAlgebra for FiniteSma {
    fn lattice(&self) -> &FiniteLattice {
        FiniteSma::lattice(self)
    }
    fn op(&self, a: usize) -> usize {
        self.neg(a)
    }
}

impl UnaryAlgebra for FiniteDma {
    fn lattice(&self) -> &FiniteLattice {
        FiniteDma::lattice(self)
    }
    fn op(&self, a: usize) -> usize {
        self.star(a)
    }
}

/// A bijection `f` with `a ≤ b ⇔ f(a) ≤ f(b)` and `f(op a) = op f(a)`.
pub fn find_iso<A: UnaryAlgebra>(a: &A, b: &A) -> Option<Vec<usize>> {
    let (la, lb) = (a.lattice(), b.lattice());
    if la.size() != lb.size() {
        return None;
    }
    let opa: Vec<usize> = la.elements().map(|x| a.op(x)).collect();
    let opb: Vec<usize> = lb.elements().map(|x| b.op(x)).collect();
    let mut out = None;
    bijections(la, lb, Some((&opa, &opb)), &mut |f| {
        out = Some(f.to_vec());
        true
    });
    out
}

/// Every automorphism of a lattice (ignoring any operation).
pub fn automorphisms(l: &FiniteLattice) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    bijections(l, l, None, &mut |f| {
        out.push(f.to_vec());
        false
    });
    out
}

/// Enumerates order isomorphisms `la → lb` compatible with the optional
/// operation tables; `visit` returns true to stop.
fn bijections(
    la: &FiniteLattice,
    lb: &FiniteLattice,
    ops: Option<(&[usize], &[usize])>,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) {
    let n = la.size();
    let mut f = vec![usize::MAX; n];
    let mut used = vec![false; n];
    // invariant filter: elements must match in number of elements below and above
    let sig = |l: &FiniteLattice, x: usize| {
        let below = l.elements().filter(|&y| l.leq(y, x)).count();
        let above = l.elements().filter(|&y| l.leq(x, y)).count();
        (below, above)
    };
    let sa: Vec<_> = la.elements().map(|x| sig(la, x)).collect();
    let sb: Vec<_> = lb.elements().map(|x| sig(lb, x)).collect();
    fn go(
        i: usize,
        la: &FiniteLattice,
        lb: &FiniteLattice,
        ops: Option<(&[usize], &[usize])>,
        sa: &[(usize, usize)],
        sb: &[(usize, usize)],
        f: &mut Vec<usize>,
        used: &mut Vec<bool>,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        let n = la.size();
        if i == n {
            return visit(f);
        }
        for y in 0..n {
            if used[y] || sa[i] != sb[y] {
                continue;
            }
            let ok = (0..i).all(|x| {
                la.leq(x, i) == lb.leq(f[x], y) && la.leq(i, x) == lb.leq(y, f[x])
            });
            if !ok {
                continue;
            }
            f[i] = y;
            used[y] = true;
            let op_ok = match ops {
                None => true,
                Some((oa, ob)) => (0..=i).all(|x| oa[x] > i || ob[f[x]] == f[oa[x]]),
            };
            if op_ok && go(i + 1, la, lb, ops, sa, sb, f, used, visit) {
                return true;
            }
            used[y] = false;
            f[i] = usize::MAX;
        }
        false
    }
    go(0, la, lb, ops, &sa, &sb, &mut f, &mut used, visit);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chains() {
        let a = FiniteSma::three_chain(0);
        assert_eq!(find_iso(&a, &a), Some(vec![0, 1, 2]));
        assert_eq!(find_iso(&a, &FiniteSma::three_chain(1)), None);
        assert_eq!(automorphisms(&FiniteLattice::chain(4)).len(), 1);
        assert_eq!(automorphisms(&FiniteLattice::boolean(2)).len(), 2);
        assert_eq!(automorphisms(&FiniteLattice::boolean(3)).len(), 6);
    }
}
