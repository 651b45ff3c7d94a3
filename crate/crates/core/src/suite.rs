//! The acceptance battery: eight criteria, each returning a pass/fail
//! verdict with a one-line summary.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::SeedableRng;

use crate::algebra::{
    dehetero, enumerate_with, find_iso, heterogenize, kernel, rule_sound, validate,
    validate_single, FiniteSma, Flags, HeteroAlgebra, Soundness, Variety,
};
use crate::calculus::{
    check_proof, corpus, cut_complexities, cut_instance, dm_less, find_rule, identity_proof,
    reduce_cut, system_rules, Budget, Prover, System, ALL_SYSTEMS, CUT_PATTERNS,
};
use crate::exec::Exec;
use crate::inductive::{
    brute_force_inductive, check_witness, heterogeneous_conditions, inequalities_over_one_variable,
    is_analytic_inductive,
};
use crate::syntax::{translate, Formula, Sequent};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Profile {
    /// Reduced bounds, for a fast smoke run.
    Quick,
    /// The bounds of the acceptance criteria.
    Full,
}

impl FromStr for Profile {
    type Err = String;
    fn from_str(s: &str) -> Result<Profile, String> {
        match s {
            "quick" => Ok(Profile::Quick),
            "full" => Ok(Profile::Full),
            _ => Err(format!("unknown profile `{s}` (expected quick or full)")),
        }
    }
}

struct Bounds {
    identity_depth: usize,
    algebra_size: usize,
    soundness_size: usize,
    translation_size: usize,
    cut_instances: usize,
    search_corpus: bool,
}

impl Profile {
    fn bounds(self) -> Bounds {
        match self {
            Profile::Full => Bounds {
                identity_depth: 3,
                algebra_size: 6,
                soundness_size: 5,
                translation_size: 6,
                cut_instances: 100,
                search_corpus: true,
            },
            Profile::Quick => Bounds {
                identity_depth: 2,
                algebra_size: 4,
                soundness_size: 4,
                translation_size: 4,
                cut_instances: 20,
                search_corpus: false,
            },
        }
    }
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub id: usize,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "criterion {} {:<28} {}  ({:.1?})  {}",
            self.id,
            self.title,
            if self.passed { "PASS" } else { "FAIL" },
            self.elapsed,
            self.detail
        )
    }
}

pub const TITLES: [&str; 8] = [
    "axiom derivability",
    "identity derivability",
    "algebraic equivalence",
    "rule soundness",
    "translation invariance",
    "cut reduction",
    "classifier",
    "search completeness",
];

/// Runs criterion `id` (1-based).
pub fn run_criterion(id: usize, profile: Profile, exec: Exec) -> Outcome {
    let b = profile.bounds();
    let t0 = Instant::now();
    let r = match id {
        1 => axioms(),
        2 => identities(b.identity_depth, exec),
        3 => algebraic(b.algebra_size, exec),
        4 => soundness(b.soundness_size, exec),
        5 => translation(b.translation_size, exec),
        6 => cuts(b.cut_instances),
        7 => classifier(exec),
        8 => search_all(b.identity_depth, b.search_corpus, exec),
        _ => Err(format!("no criterion {id}")),
    };
    let (passed, detail) = match r {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    Outcome {
        id,
        title: TITLES.get(id.wrapping_sub(1)).copied().unwrap_or("?"),
        passed,
        detail,
        elapsed: t0.elapsed(),
    }
}

pub fn run_suite(profile: Profile, exec: Exec) -> Vec<Outcome> {
    (1..=8).map(|i| run_criterion(i, profile, exec)).collect()
}

type Verdict = Result<String, String>;

fn axioms() -> Verdict {
    let entries = corpus();
    for e in &entries {
        let t = e.proof();
        if t.conclusion != e.goal() {
            return Err(format!("{}: conclusion differs from the translated axiom", e.name));
        }
        let r = check_proof(&t, e.system);
        if !r.accepted {
            return Err(format!("{}: {}", e.name, r.diagnostics[0]));
        }
        if !r.cut_free || !r.subformula {
            return Err(format!("{}: cut-free {} subformula {}", e.name, r.cut_free, r.subformula));
        }
    }
    Ok(format!("{} derivations accepted, cut-free, subformula property", entries.len()))
}

fn identity_goals(depth: usize) -> Vec<Sequent> {
    Formula::enumerate(&["p", "q"], depth)
        .iter()
        .map(|f| {
            let t = translate(f);
            Sequent::new(t.clone(), t)
        })
        .collect()
}

fn identities(depth: usize, exec: Exec) -> Verdict {
    let goals = identity_goals(depth);
    let bad = exec.find_map_first(&goals, |g| {
        let Some(t) = identity_proof(&g.ant) else {
            return Some(format!("no identity proof for {}", g.ant));
        };
        if t.conclusion != *g {
            return Some(format!("wrong conclusion for {}", g.ant));
        }
        ALL_SYSTEMS.iter().find_map(|&s| {
            let r = check_proof(&t, s);
            (!r.accepted).then(|| format!("{} in {s}: {}", g.ant, r.diagnostics[0]))
        })
    });
    match bad {
        Some(e) => Err(e),
        None => Ok(format!("{} formulas × {} systems", goals.len(), ALL_SYSTEMS.len())),
    }
}

fn smas(max: usize, exec: Exec) -> Result<Vec<FiniteSma>, String> {
    enumerate_with(exec, max, &Flags::new()).map_err(|e| e.to_string())
}

fn algebraic_one(a: &FiniteSma) -> Result<(), String> {
    let v = a.classify();
    let k = kernel(a).map_err(|e| format!("kernel: {e}"))?;
    let rep = k.k.report();
    for d in ["D1", "D2", "D3", "D4", "D5"] {
        if !rep.holds(d) {
            return Err(format!("kernel fails {d}"));
        }
    }
    if v.contains(&Variety::Dpl) && !rep.holds("B1") {
        return Err("DPL kernel fails B1".into());
    }
    let hh = heterogenize(a).map_err(|e| format!("A⁺: {e}"))?;
    let f = hh.flags();
    let transfer = [
        (v.contains(&Variety::Lqma), f.h6a, "H6a"),
        (v.contains(&Variety::Uqma), f.h6b, "H6b"),
        (v.contains(&Variety::Dpl), f.boolean, "H2b"),
        (v.contains(&Variety::Apl), f.boolean && f.h7, "H7"),
        (v.contains(&Variety::Wsa), f.boolean && f.h8, "H8"),
    ];
    if let Some((_, _, what)) = transfer.iter().find(|(x, y, _)| x != y) {
        return Err(format!("flag transfer for {what}"));
    }
    let back = dehetero(&hh).map_err(|e| format!("(A⁺)₊: {e}"))?;
    if back.lattice() != a.lattice() || back.neg_table() != a.neg_table() {
        return Err("(A⁺)₊ is not A under the identity map".into());
    }
    let kk = kernel(&back).map_err(|e| format!("kernel of H₊: {e}"))?;
    if find_iso(&kk.k, hh.d()).is_none() {
        return Err("kernel(H₊) ≇ D".into());
    }
    if (v.contains(&Variety::Apl) || v.contains(&Variety::Wsa)) && !v.contains(&Variety::Dpl) {
        return Err("S7 fails in an APL or WSA".into());
    }
    Ok(())
}

fn algebraic(max: usize, exec: Exec) -> Verdict {
    let all = smas(max, exec)?;
    let bad = exec.find_map_first(&all, |a| {
        algebraic_one(a).err().map(|e| format!("SMA neg {:?}: {e}", a.neg_table()))
    });
    match bad {
        Some(e) => Err(e),
        None => Ok(format!("{} SMAs of size ≤ {max}", all.len())),
    }
}

fn heteros(max: usize, exec: Exec) -> Result<Vec<HeteroAlgebra>, String> {
    let all = smas(max, exec)?;
    let hs = exec.map(&all, heterogenize);
    hs.into_iter().collect::<Result<_, _>>().map_err(|e| e.to_string())
}

fn soundness(max: usize, exec: Exec) -> Verdict {
    let hs = heteros(max, exec)?;
    let mut checks = 0;
    for s in ALL_SYSTEMS {
        let models: Vec<&HeteroAlgebra> = hs.iter().filter(|h| s.admits(h.flags())).collect();
        let rules = system_rules(s);
        let work: Vec<(usize, usize)> = (0..rules.len())
            .flat_map(|r| (0..models.len()).map(move |m| (r, m)))
            .collect();
        checks += work.len();
        let bad = exec.find_map_first(&work, |&(r, m)| match rule_sound(rules[r], models[m]) {
            Soundness::Sound => None,
            Soundness::Counter(a) => Some(format!("{s}: {} unsound ({a})", rules[r].name)),
        });
        if let Some(e) = bad {
            return Err(e);
        }
    }
    let ws = find_rule(System::Ws, "WS").ok_or("WS rule missing")?;
    let counter = hs
        .iter()
        .filter(|h| !(h.flags().boolean && h.flags().h8))
        .find_map(|h| match rule_sound(ws, h) {
            Soundness::Counter(a) => Some((h.l().size(), a)),
            Soundness::Sound => None,
        });
    match counter {
        Some((n, a)) => Ok(format!(
            "{checks} rule/algebra pairs sound; WS fails on a non-HWSA with |L| = {n} at {a}"
        )),
        None => Err("WS rule holds on every non-HWSA".into()),
    }
}

fn translation(max: usize, exec: Exec) -> Verdict {
    let all = smas(max, exec)?;
    let fs = Formula::enumerate(&["p", "q"], 2);
    let mut pairs = Vec::new();
    for a in &fs {
        for b in &fs {
            pairs.push((a, b));
        }
    }
    for sma in &all {
        let hh = heterogenize(sma).map_err(|e| e.to_string())?;
        let bad = exec.find_map_first(&pairs, |(a, b)| {
            let single = validate_single(a, b, sma).ok()?.is_valid();
            let s = Sequent::new(translate(a), translate(b));
            let multi = validate(&s, &hh).ok()?.is_valid();
            (single != multi).then(|| format!("{a} ⊢ {b} on neg {:?}", sma.neg_table()))
        });
        if let Some(e) = bad {
            return Err(e);
        }
    }
    Ok(format!("{} sequents × {} SMAs of size ≤ {max}", pairs.len(), all.len()))
}

fn cuts(per_pattern: usize) -> Verdict {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for p in CUT_PATTERNS {
        for i in 0..per_pattern {
            let (t, path) = cut_instance(&mut rng, p);
            let before = check_proof(&t, System::Sm);
            if !before.accepted {
                return Err(format!("{p} #{i}: generated instance rejected: {}", before.diagnostics[0]));
            }
            let r = reduce_cut(&t, &path).map_err(|e| format!("{p} #{i}: {e}"))?;
            if r.conclusion != t.conclusion {
                return Err(format!("{p} #{i}: conclusion changed"));
            }
            let after = check_proof(&r, System::Sm);
            if !after.accepted {
                return Err(format!("{p} #{i}: reduct rejected: {}", after.diagnostics[0]));
            }
            if !dm_less(&cut_complexities(&r), &cut_complexities(&t)) {
                return Err(format!("{p} #{i}: cut multiset did not decrease"));
            }
        }
    }
    Ok(format!("{per_pattern} instances × {} patterns", CUT_PATTERNS.len()))
}

fn classifier(exec: Exec) -> Verdict {
    let mut names = Vec::new();
    for (name, l, r) in heterogeneous_conditions() {
        match is_analytic_inductive(&l, &r) {
            Some(w) if check_witness(&l, &r, &w) => names.push(format!("{name} ε={}", w.epsilon)),
            Some(_) => return Err(format!("{name}: witness rejected by the clause checker")),
            None => return Err(format!("{name}: no witness")),
        }
    }
    let ineqs = inequalities_over_one_variable(2);
    let bad = exec.find_map_first(&ineqs, |(l, r)| {
        let w = is_analytic_inductive(l, r);
        if let Some(w) = &w {
            if !check_witness(l, r, w) {
                return Some(format!("{l} ≤ {r}: witness rejected"));
            }
        }
        (w.is_some() != brute_force_inductive(l, r)).then(|| format!("{l} ≤ {r}: disagrees with oracle"))
    });
    match bad {
        Some(e) => Err(e),
        None => Ok(format!("{}; {} inequalities agree with the oracle", names.join(", "), ineqs.len())),
    }
}

fn search_all(depth: usize, with_corpus: bool, exec: Exec) -> Verdict {
    let budget = Budget::depth(40);
    let mut goals: Vec<(System, Sequent, String)> = Vec::new();
    if with_corpus {
        for e in corpus() {
            goals.push((e.system, e.goal(), e.name.to_string()));
        }
    }
    let ids = identity_goals(depth);
    for s in ALL_SYSTEMS {
        for g in &ids {
            goals.push((s, g.clone(), format!("identity {}", g.ant)));
        }
    }
    // one prover per chunk: provers hold caches and are not shared
    let chunks: Vec<&[(System, Sequent, String)]> = goals.chunks(64).collect();
    let results = exec.map(&chunks, |chunk| {
        let mut provers: Vec<Prover> = Vec::new();
        for (s, g, name) in chunk.iter() {
            if !provers.iter().any(|p| p.system() == *s) {
                provers.push(Prover::new(*s));
            }
            let p = provers.iter_mut().find(|p| p.system() == *s).expect("just added");
            match p.search(g, budget) {
                Ok(t) => {
                    let r = check_proof(&t, *s);
                    if !(r.accepted && r.cut_free) || t.conclusion != *g {
                        return Err(format!("{name} in {s}: search returned a bad proof"));
                    }
                }
                Err(e) => return Err(format!("{name} in {s}: {e}")),
            }
        }
        Ok(chunk.len())
    });
    let mut n = 0;
    for r in results {
        n += r?;
    }
    Ok(format!("{n} goals re-derived within depth 40"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_cheap_criteria() {
        for id in [1, 2, 6, 7] {
            let o = run_criterion(id, Profile::Quick, Exec::default());
            assert!(o.passed, "{o}");
        }
    }

    #[test]
    fn unknown_criterion() {
        assert!(!run_criterion(9, Profile::Quick, Exec::Sequential).passed);
    }
}
