//! Kernels and heterogeneous presentations.

use serde::Serialize;

use super::derived::DerivedOps;
use super::dma::FiniteDma;
use super::lattice::FiniteLattice;
use super::report::{Check, Report};
use super::sma::{check_unary_table, search_tuples, FiniteSma, Variety};
use super::AlgebraError;

/// Kernel of an SMA together with the inclusion `e` and the map `h(a) = a″`.
#[derive(Clone, Debug)]
pub struct Kernel {
    pub k: FiniteDma,
    /// Kernel element `i` is `members[i]` in the source lattice.
    pub members: Vec<usize>,
    pub e: Vec<usize>,
    pub h: Vec<usize>,
}

fn inconsistent(msg: String) -> AlgebraError {
    AlgebraError::Inconsistent(msg)
}

/// Builds the kernel by K1–K6 and checks the resulting algebra.
pub fn kernel(a: &FiniteSma) -> Result<Kernel, AlgebraError> {
    let l = a.lattice();
    let dn = |x: usize| a.neg(a.neg(x));
    let mut members: Vec<usize> = l.elements().map(dn).collect();
    members.sort();
    members.dedup();
    let index = |x: usize| members.iter().position(|&y| y == x);
    let e = members.clone();
    let h: Vec<usize> = l
        .elements()
        .map(|x| index(dn(x)).expect("a″ lies in the kernel"))
        .collect();
    let kl = l.restrict(&members)?;
    let m = members.len();

    // K2–K6, computed as written and compared with the induced order.
    for al in 0..m {
        for be in 0..m {
            let cup = h[dn(l.join(e[al], e[be]))];
            if cup != h[l.join(e[al], e[be])] {
                return Err(inconsistent(format!(
                    "K2: h((eα∨eβ)″) ≠ h(eα∨eβ) at ({al}, {be})"
                )));
            }
            if cup != kl.join(al, be) {
                return Err(inconsistent(format!("K2 join mismatch at ({al}, {be})")));
            }
            let cap = h[l.meet(e[al], e[be])];
            if cap != kl.meet(al, be) {
                return Err(inconsistent(format!("K3 meet mismatch at ({al}, {be})")));
            }
        }
    }
    if h[l.top()] != kl.top() || h[l.bot()] != kl.bot() {
        return Err(inconsistent("K4/K5 bounds mismatch".into()));
    }
    let star: Vec<usize> = (0..m).map(|al| h[a.neg(e[al])]).collect();
    let k = FiniteDma::new(kl, star).map_err(|err| inconsistent(format!("kernel: {err}")))?;
    for (al, &x) in e.iter().enumerate() {
        if h[x] != al {
            return Err(inconsistent(format!("h∘e ≠ id at {al}")));
        }
    }
    if a.classify().contains(&Variety::Dpl) && !k.is_boolean() {
        return Err(inconsistent("kernel of a DPL is not Boolean".into()));
    }
    Ok(Kernel { k, members, e, h })
}

/// Conditions beyond H1–H5.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct HeteroFlags {
    pub h6a: bool,
    pub h6b: bool,
    pub boolean: bool,
    pub h7: bool,
    pub h8: bool,
}

/// A heterogeneous algebra `(L, D, e, h)` satisfying H1–H5, with the
/// derived operation tables.
#[derive(Clone, Debug)]
pub struct HeteroAlgebra {
    l: FiniteLattice,
    d: FiniteDma,
    e: Vec<usize>,
    h: Vec<usize>,
    flags: HeteroFlags,
    ops: DerivedOps,
}

/// Outcome of [`check_hetero`]: H1–H5 and the optional conditions.
#[derive(Clone, Debug, Default, Serialize)]
pub struct HeteroReport {
    pub core: Report,
    pub optional: Report,
}

impl HeteroReport {
    pub fn passed(&self) -> bool {
        self.core.passed()
    }
}

/// Checks H1–H8 on raw tables.
pub fn check_hetero(
    l_leq: &[Vec<bool>],
    d_leq: &[Vec<bool>],
    star: &[usize],
    e: &[usize],
    h: &[usize],
) -> Result<(HeteroReport, Option<HeteroAlgebra>), AlgebraError> {
    let l = FiniteLattice::from_leq(l_leq)?;
    let dl = FiniteLattice::from_leq(d_leq)?;
    let (n, m) = (l.size(), dl.size());
    check_unary_table(m, star, "star")?;
    check_unary_table(n, h, "h")?;
    if e.len() != m {
        return Err(AlgebraError::Malformed(format!(
            "e table has {} entries, expected {m}",
            e.len()
        )));
    }
    if let Some(&bad) = e.iter().find(|&&x| x >= n) {
        return Err(AlgebraError::Malformed(format!("e entry {bad} out of range")));
    }
    let mut core = Report::default();
    core.push(Check::from_search(
        "H1",
        l.distributivity_failure()
            .map(|(a, b, c)| (vec![a, b, c], format!("at ({a}, {b}, {c}): L not distributive"))),
    ));
    let dm = super::dma::dm_report(&dl, star);
    core.push(Check::from_search(
        "H2a",
        dm.failures().next().map(|c| (c.witness.clone(), c.to_string())),
    ));
    let h3 = search_tuples(m, 2, |t| {
        let (a, b) = (t[0], t[1]);
        if dl.leq(a, b) != l.leq(e[a], e[b]) {
            return Some(format!("at ({a}, {b}): e is not an order embedding"));
        }
        if l.meet(e[a], e[b]) != e[dl.meet(a, b)] {
            return Some(format!("at ({a}, {b}): e(α)∧e(β) ≠ e(α∩β)"));
        }
        None
    })
    .or_else(|| {
        (e[dl.top()] != l.top()).then(|| (vec![dl.top()], "e(1) ≠ ⊤".to_string()))
    })
    .or_else(|| {
        (e[dl.bot()] != l.bot()).then(|| (vec![dl.bot()], "e(0) ≠ ⊥".to_string()))
    });
    core.push(Check::from_search("H3", h3));
    let h4 = (0..m)
        .find(|&g| !h.contains(&g))
        .map(|g| (vec![g], format!("h is not surjective: {g} has no preimage")))
        .or_else(|| {
            search_tuples(n, 2, |t| {
                let (a, b) = (t[0], t[1]);
                if h[l.meet(a, b)] != dl.meet(h[a], h[b]) {
                    return Some(format!("at ({a}, {b}): h(a∧b) ≠ h(a)∩h(b)"));
                }
                if h[l.join(a, b)] != dl.join(h[a], h[b]) {
                    return Some(format!("at ({a}, {b}): h(a∨b) ≠ h(a)∪h(b)"));
                }
                None
            })
        })
        .or_else(|| {
            (h[l.top()] != dl.top() || h[l.bot()] != dl.bot())
                .then(|| (vec![], "h does not preserve bounds".to_string()))
        });
    core.push(Check::from_search("H4", h4));
    core.push(Check::from_search(
        "H5",
        (0..m)
            .find(|&g| h[e[g]] != g)
            .map(|g| (vec![g], format!("at {g}: h(e({g})) = {} ≠ {g}", h[e[g]]))),
    ));

    let mut optional = Report::default();
    let b1 = search_tuples(m, 1, |t| {
        (dl.join(t[0], star[t[0]]) != dl.top()).then(|| format!("at {}: α∪α* ≠ 1", t[0]))
    });
    optional.push(Check::from_search(
        "H2b",
        if dm.passed() {
            b1
        } else {
            Some((vec![], "D is not a DMA".into()))
        },
    ));
    optional.push(Check::from_search(
        "H6a",
        (0..n)
            .find(|&a| !l.leq(a, e[h[a]]))
            .map(|a| (vec![a], format!("at {a}: a ≰ eh(a)"))),
    ));
    optional.push(Check::from_search(
        "H6b",
        (0..n)
            .find(|&a| !l.leq(e[h[a]], a))
            .map(|a| (vec![a], format!("at {a}: eh(a) ≰ a"))),
    ));
    optional.push(Check::from_search(
        "H7",
        (0..n)
            .find(|&a| l.meet(e[star[h[a]]], a) != l.bot())
            .map(|a| (vec![a], format!("at {a}: e(h(a)*)∧a ≠ ⊥"))),
    ));
    // α ranges over D.
    optional.push(Check::from_search(
        "H8",
        (0..m)
            .find(|&g| l.join(e[star[g]], e[g]) != l.top())
            .map(|g| (vec![g], format!("at {g}: e(α*)∨e(α) ≠ ⊤"))),
    ));
    let report = HeteroReport { core, optional };
    if !report.passed() {
        return Ok((report, None));
    }
    let d = FiniteDma::new(dl, star.to_vec())?;
    let flags = HeteroFlags {
        h6a: report.optional.holds("H6a"),
        h6b: report.optional.holds("H6b"),
        boolean: report.optional.holds("H2b"),
        h7: report.optional.holds("H7"),
        h8: report.optional.holds("H8"),
    };
    let ops = DerivedOps::compute(&l, &d, e, h)?;
    let hh = HeteroAlgebra {
        l,
        d,
        e: e.to_vec(),
        h: h.to_vec(),
        flags,
        ops,
    };
    Ok((report, Some(hh)))
}

/// A⁺: the lattice reduct, the kernel, and e, h.
pub fn heterogenize(a: &FiniteSma) -> Result<HeteroAlgebra, AlgebraError> {
    let k = kernel(a)?;
    let (report, hh) = check_hetero(
        &a.lattice().leq_table(),
        &k.k.lattice().leq_table(),
        k.k.star_table(),
        &k.e,
        &k.h,
    )?;
    let hh = hh.ok_or_else(|| {
        inconsistent(format!(
            "A⁺ is not an HSMA: {}",
            report.core.failures().next().unwrap()
        ))
    })?;
    let v = a.classify();
    let f = hh.flags;
    let transfer = [
        (Variety::Lqma, f.h6a, "LQMA→H6a"),
        (Variety::Uqma, f.h6b, "UQMA→H6b"),
        (Variety::Dpl, f.boolean, "DPL→Boolean D"),
        (Variety::Apl, f.h7, "APL→H7"),
        (Variety::Wsa, f.h8, "WSA→H8"),
    ];
    for (var, flag, what) in transfer {
        if v.contains(&var) && !flag {
            return Err(inconsistent(format!("flag transfer {what} fails")));
        }
    }
    Ok(hh)
}

/// H₊: the lattice `L` with `a′ = e(h(a)*)`.
pub fn dehetero(hh: &HeteroAlgebra) -> Result<FiniteSma, AlgebraError> {
    let neg: Vec<usize> = hh
        .l
        .elements()
        .map(|a| hh.e[hh.d.star(hh.h[a])])
        .collect();
    let sma = FiniteSma::new(hh.l.clone(), neg).map_err(|e| inconsistent(format!("H₊: {e}")))?;
    let v = sma.classify();
    let f = hh.flags;
    let transfer = [
        (f.h6a, Variety::Lqma, "H6a→LQMA"),
        (f.h6b, Variety::Uqma, "H6b→UQMA"),
        (f.boolean, Variety::Dpl, "Boolean D→DPL"),
        (f.boolean && f.h7, Variety::Apl, "H7→APL"),
        (f.boolean && f.h8, Variety::Wsa, "H8→WSA"),
    ];
    for (flag, var, what) in transfer {
        if flag && !v.contains(&var) {
            return Err(inconsistent(format!("flag transfer {what} fails")));
        }
    }
    Ok(sma)
}

impl HeteroAlgebra {
    pub fn l(&self) -> &FiniteLattice {
        &self.l
    }

    pub fn d(&self) -> &FiniteDma {
        &self.d
    }

    pub fn e(&self, a: usize) -> usize {
        self.e[a]
    }

    pub fn h(&self, a: usize) -> usize {
        self.h[a]
    }

    pub fn e_table(&self) -> &[usize] {
        &self.e
    }

    pub fn h_table(&self) -> &[usize] {
        &self.h
    }

    pub fn flags(&self) -> HeteroFlags {
        self.flags
    }

    pub fn derived_ops(&self) -> &DerivedOps {
        &self.ops
    }

    /// Rebuilds from tables, for tampering experiments.
    pub fn with_h(&self, h: Vec<usize>) -> Result<(HeteroReport, Option<HeteroAlgebra>), AlgebraError> {
        check_hetero(
            &self.l.leq_table(),
            &self.d.lattice().leq_table(),
            self.d.star_table(),
            &self.e,
            &h,
        )
    }
}

/// Derived operation tables of a heterogeneous algebra.
pub fn derived_ops(hh: &HeteroAlgebra) -> &DerivedOps {
    hh.derived_ops()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_examples() {
        let k = kernel(&FiniteSma::three_chain(0)).unwrap();
        assert_eq!(k.members, vec![0, 2]);
        assert_eq!(k.k.star_table(), &[1, 0]);
        assert_eq!(k.h[1], 1);
        let k = kernel(&FiniteSma::three_chain(1)).unwrap();
        assert_eq!(k.members, vec![0, 1, 2]);
        assert_eq!(k.k.star_table(), &[2, 1, 0]);
        let k = kernel(&FiniteSma::two_chain()).unwrap();
        assert_eq!(k.members, vec![0, 1]);
    }

    #[test]
    fn heterogenize_examples() {
        let pc = FiniteSma::three_chain(0);
        let hh = heterogenize(&pc).unwrap();
        assert!(hh.flags().h7 && hh.flags().boolean);
        // e(h(m)*) ∧ m = e(0) ∧ m = 0
        assert_eq!(hh.l().meet(hh.e(hh.d().star(hh.h(1))), 1), 0);
        assert_eq!(hh.derived_ops().e_left(1), 1);

        let two = heterogenize(&FiniteSma::two_chain()).unwrap();
        assert_eq!(two.e_table(), &[0, 1]);
        assert_eq!(two.h_table(), &[0, 1]);
        assert!(two.d().is_boolean());

        let kl = heterogenize(&FiniteSma::three_chain(1)).unwrap();
        assert_eq!(kl.e_table(), &[0, 1, 2]);
        assert_eq!(kl.h_table(), &[0, 1, 2]);
        assert!(!kl.flags().h8);
    }

    #[test]
    fn tampered_h_fails_h5() {
        let kl = heterogenize(&FiniteSma::three_chain(1)).unwrap();
        let (r, hh) = kl.with_h(vec![0, 0, 2]).unwrap();
        assert!(hh.is_none());
        let h5 = r.core.get("H5").unwrap();
        assert!(!h5.passed);
        assert_eq!(h5.witness, vec![1]);
    }

    #[test]
    fn roundtrip() {
        for a in [
            FiniteSma::two_chain(),
            FiniteSma::three_chain(0),
            FiniteSma::three_chain(1),
            FiniteSma::three_chain(2),
        ] {
            let hh = heterogenize(&a).unwrap();
            assert_eq!(dehetero(&hh).unwrap(), a);
        }
    }

    #[test]
    fn derived_examples() {
        let two = heterogenize(&FiniteSma::two_chain()).unwrap();
        let ops = two.derived_ops();
        assert_eq!(ops.l_arrow(1, 0), 0);
        assert_eq!((ops.l_arrow(0, 0), ops.l_arrow(0, 1)), (1, 1));
        let kl = heterogenize(&FiniteSma::three_chain(1)).unwrap();
        assert_eq!(kl.derived_ops().l_arrow(1, 0), 0);
    }
}
