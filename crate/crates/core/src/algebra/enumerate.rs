//! Enumeration of finite SMAs up to isomorphism.
//!
//! Distributive lattices come from their posets of join-irreducibles
//! (Birkhoff). `′` is determined by its values on join-irreducibles, since
//! S3 forces `a′ = ⋀{ j′ : j ≤ a, j join-irreducible }`.

use crate::exec::Exec;

use super::iso::automorphisms;
use super::lattice::FiniteLattice;
use super::sma::{Flags, FiniteSma};
use super::AlgebraError;

/// Default upper bound on lattice size.
pub const DEFAULT_BOUND: usize = 8;

/// A naturally labelled poset: `below[i]` is the bitmask of elements
/// strictly below `i`, all of which have smaller labels.
type Poset = Vec<u32>;

fn downsets(p: &Poset) -> Vec<u32> {
    let m = p.len();
    (0u32..(1 << m))
        .filter(|&s| (0..m).all(|i| s & (1 << i) == 0 || p[i] & !s == 0))
        .collect()
}

fn grow(p: &Poset, max_size: usize, out: &mut Vec<Poset>) {
    if downsets(p).len() > max_size {
        return;
    }
    if !p.is_empty() {
        out.push(p.clone());
    }
    if p.len() + 1 >= max_size {
        return;
    }
    // the new element is maximal; its strict downset is any downset
    for s in downsets(p) {
        let mut q = p.clone();
        q.push(s);
        grow(&q, max_size, out);
    }
}

fn permute(p: &Poset, perm: &[usize]) -> Vec<u32> {
    // relation matrix of the relabelled poset, as rows of bitmasks
    let m = p.len();
    let mut rows = vec![0u32; m];
    for i in 0..m {
        for j in 0..m {
            if p[i] & (1 << j) != 0 {
                rows[perm[i]] |= 1 << perm[j];
            }
        }
    }
    rows
}

fn permutations(m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..m).collect();
    fn heap(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(cur.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, cur, out);
            if k % 2 == 0 {
                cur.swap(i, k - 1);
            } else {
                cur.swap(0, k - 1);
            }
        }
    }
    heap(m, &mut cur, &mut out);
    out
}

/// Smallest relation encoding over relabellings that keep labels natural.
fn canonical(p: &Poset) -> Poset {
    permutations(p.len())
        .iter()
        .map(|perm| permute(p, perm))
        .filter(|rows| rows.iter().enumerate().all(|(i, r)| r >> i == 0))
        .min()
        .expect("identity is natural")
}

/// Downset lattice, elements ordered by (cardinality, bitmask).
fn downset_lattice(p: &Poset) -> FiniteLattice {
    let mut ds = downsets(p);
    ds.sort_by_key(|&s| (s.count_ones(), s));
    let leq: Vec<Vec<bool>> = ds
        .iter()
        .map(|&a| ds.iter().map(|&b| a & !b == 0).collect())
        .collect();
    FiniteLattice::from_leq(&leq).expect("downsets form a lattice")
}

/// Every distributive lattice with `2..=max_size` elements, up to iso.
pub fn distributive_lattices(max_size: usize) -> Vec<FiniteLattice> {
    if max_size < 2 {
        return Vec::new();
    }
    let mut posets = Vec::new();
    grow(&Vec::new(), max_size, &mut posets);
    let mut canon: Vec<Poset> = posets.iter().map(canonical).collect();
    canon.sort_by(|a, b| {
        (downsets(a).len(), a.len(), a).cmp(&(downsets(b).len(), b.len(), b))
    });
    canon.dedup();
    canon.iter().map(downset_lattice).collect()
}

/// Every neg table on `l` satisfying S2–S5, one per automorphism class.
pub fn neg_tables(l: &FiniteLattice) -> Vec<Vec<usize>> {
    let n = l.size();
    let js = l.join_irreducibles();
    let mut vals = vec![0; js.len()];
    let mut found = Vec::new();
    fn go(
        i: usize,
        l: &FiniteLattice,
        js: &[usize],
        vals: &mut Vec<usize>,
        found: &mut Vec<Vec<usize>>,
    ) {
        if i == js.len() {
            let neg: Vec<usize> = l
                .elements()
                .map(|a| {
                    l.meet_all(
                        js.iter()
                            .zip(vals.iter())
                            .filter(|(&j, _)| l.leq(j, a))
                            .map(|(_, &v)| v),
                    )
                })
                .collect();
            if is_sma(l, &neg) {
                found.push(neg);
            }
            return;
        }
        for v in l.elements() {
            // antitone on join-irreducibles
            let ok = (0..i).all(|k| {
                (!l.leq(js[k], js[i]) || l.leq(v, vals[k]))
                    && (!l.leq(js[i], js[k]) || l.leq(vals[k], v))
            });
            if ok {
                vals[i] = v;
                go(i + 1, l, js, vals, found);
            }
        }
    }
    go(0, l, &js, &mut vals, &mut found);
    let autos = automorphisms(l);
    let mut canon: Vec<Vec<usize>> = found
        .iter()
        .map(|t| {
            autos
                .iter()
                .map(|s| {
                    let mut u = vec![0; n];
                    for a in 0..n {
                        u[s[a]] = s[t[a]];
                    }
                    u
                })
                .min()
                .expect("identity automorphism")
        })
        .collect();
    canon.sort();
    canon.dedup();
    canon
}

fn is_sma(l: &FiniteLattice, neg: &[usize]) -> bool {
    if neg[l.bot()] != l.top() || neg[l.top()] != l.bot() {
        return false;
    }
    let dn = |a: usize| neg[neg[a]];
    l.elements().all(|a| neg[a] == neg[dn(a)])
        && l.elements().all(|a| {
            l.elements().all(|b| {
                neg[l.join(a, b)] == l.meet(neg[a], neg[b])
                    && dn(l.meet(a, b)) == l.meet(dn(a), dn(b))
            })
        })
}

/// SMAs on lattices of size `2..=max_size` whose classification contains
/// `variety`, deduplicated up to iso, in a fixed order.
pub fn enumerate(max_size: usize, variety: &Flags) -> Result<Vec<FiniteSma>, AlgebraError> {
    enumerate_with(Exec::default(), max_size, variety)
}

pub fn enumerate_with(
    exec: Exec,
    max_size: usize,
    variety: &Flags,
) -> Result<Vec<FiniteSma>, AlgebraError> {
    if max_size > DEFAULT_BOUND {
        return Err(AlgebraError::BoundExceeded {
            requested: max_size,
            bound: DEFAULT_BOUND,
        });
    }
    let lattices = distributive_lattices(max_size);
    let per: Vec<Vec<FiniteSma>> = exec.map(&lattices, |l| {
        neg_tables(l)
            .into_iter()
            .map(|t| FiniteSma::new_unchecked(l.clone(), t))
            .filter(|a| variety.is_subset(&a.classify()))
            .collect()
    });
    Ok(per.into_iter().flatten().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lattice_counts() {
        // distributive lattices with 2..=8 elements: 1, 1, 2, 3, 5, 8, 15
        let counts: Vec<usize> = (2..=8)
            .map(|k| {
                distributive_lattices(k)
                    .iter()
                    .filter(|l| l.size() == k)
                    .count()
            })
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 8, 15]);
    }

    #[test]
    fn small_sizes() {
        assert!(enumerate(1, &Flags::new()).unwrap().is_empty());
        let two = enumerate(2, &Flags::new()).unwrap();
        assert_eq!(two, vec![FiniteSma::two_chain()]);
        let three = enumerate(3, &Flags::new()).unwrap();
        for m in 0..3 {
            assert!(three.contains(&FiniteSma::three_chain(m)));
        }
        assert!(enumerate(9, &Flags::new()).is_err());
    }
}
