//! Bounded backward proof search.
//!
//! Goals are expanded bottom-up by matching rule conclusions; cut is never
//! applied. Invertible introductions are committed to as soon as they
//! apply. Other moves are tried in the order operational, shrinking,
//! targeted, weakening, growing. Growing and weakening moves draw on a
//! per-branch quota; each quota stage is searched with increasing depth
//! before the next stage is tried.
//! Every goal is first evaluated on a fixed set of small algebras of the
//! system's class, and goals with a countermodel are dropped, which is
//! sound because every rule preserves validity on those algebras.

use std::cell::OnceCell;
use std::collections::{HashMap, HashSet};
use std::rc::Rc;

use crate::algebra::{enumerate, heterogenize, validate, HeteroAlgebra, Validity, Valuation};
use crate::syntax::{Conn, Sequent, Term};

use super::pattern::{instantiate_sequent, try_match_sequent, Subst};
use super::proof::ProofTree;
use super::rules::{all_rules, RuleKind, RuleSchema, System};

const INVERTIBLE: &[&str] = &[
    "top_l", "bot_r", "and_l", "or_r", "one_l", "zero_r", "cap_l", "cup_r", "sim_l", "sim_r",
    "circ_l", "circ_r", "box_r",
];

/// Structural rules read upwards that are equivalences and only shrink the
/// goal; committed to like invertible introductions.
const EAGER: &[&str] = &[
    "cont.dn", "tcirc_cbox.up", "hloz_hone",
];

/// Unit insertions, only used inside [`unit_axiom`].
const UNIT_GROWTH: &[&str] = &["htop.up", "cbot.up", "hone.up", "czero.up"];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Maximum proof height.
    pub max_depth: usize,
    /// Maximum number of goal expansions over the whole run.
    pub max_visited: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_depth: 40,
            max_visited: 2_000_000,
        }
    }
}

impl Budget {
    pub fn depth(max_depth: usize) -> Budget {
        Budget {
            max_depth,
            ..Budget::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SearchError {
    /// The goal fails in one of the pruning algebras, so it is not derivable.
    #[error("goal has a countermodel in pruning algebra #{model}")]
    Refuted { model: usize, valuation: Valuation },
    #[error("search budget exhausted after {visited} expansions (depth {depth})")]
    Exhausted { visited: usize, depth: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum MoveClass {
    Operational,
    Shrink,
    Targeted,
    Weaken,
    Grow,
}

struct Move {
    member: usize,
    rule: &'static RuleSchema,
    /// A second rule applied above `rule`, with its conclusion.
    via: Option<(&'static RuleSchema, Sequent)>,
    premises: Vec<Sequent>,
    class: MoveClass,
}

/// A sequent reachable from the class root by display, exchange and
/// associativity steps. `parent` is the sequent this one was obtained from
/// by reading `rule` upwards.
struct Member {
    seq: Sequent,
    parent: usize,
    rule: Option<&'static RuleSchema>,
    dist: usize,
}

/// Per-branch allowance of growing and weakening moves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
struct Quota {
    grow: usize,
    weaken: usize,
}

const STAGES: [Quota; 4] = [
    Quota { grow: 0, weaken: 0 },
    Quota { grow: 1, weaken: 1 },
    Quota { grow: 1, weaken: 2 },
    Quota { grow: 2, weaken: 2 },
];

const CLASS_CAP: usize = 4000;
/// Longest run of display steps explored from one goal.
const MAX_REACH: usize = 8;
const FAILED_CAP: usize = 1_000_000;
/// Total class members kept in the cache.
const CACHE_CAP: usize = 2_000_000;

struct Class {
    members: Vec<Member>,
    canon: Sequent,
    moves: OnceCell<Vec<Move>>,
}

/// Search state for one system. Caches survive across goals, so proving
/// many related sequents with one `Prover` is much cheaper than calling
/// [`search`] repeatedly.
pub struct Prover {
    system: System,
    axioms: Vec<&'static RuleSchema>,
    invertible: Vec<&'static RuleSchema>,
    display: Vec<&'static RuleSchema>,
    others: Vec<&'static RuleSchema>,
    models: Vec<HeteroAlgebra>,
    valid: HashMap<Sequent, bool>,
    classes: HashMap<(Sequent, usize), Rc<Class>>,
    cached: usize,
    failed: HashMap<(Sequent, Quota), usize>,
    visited: usize,
    limit: usize,
}

/// Heterogeneous algebras of `system`'s class built from SMAs with at most
/// `max_size` elements.
pub fn pruning_models(system: System, max_size: usize) -> Vec<HeteroAlgebra> {
    enumerate(max_size, &Default::default())
        .expect("size within bound")
        .iter()
        .filter_map(|a| heterogenize(a).ok())
        .filter(|h| system.admits(h.flags()))
        .collect()
}

fn premises_of(r: &RuleSchema, g: &Sequent) -> Option<Vec<Sequent>> {
    let mut s = Subst::new();
    if !try_match_sequent(&r.conclusion, g, &mut s) {
        return None;
    }
    r.premises
        .iter()
        .map(|p| instantiate_sequent(p, &s))
        .collect::<Result<Vec<_>, _>>()
        .ok()
}

fn leaves(s: &Sequent) -> Vec<Term> {
    let mut out: Vec<Term> = s.ant.formula_leaves().into_iter().cloned().collect();
    out.extend(s.suc.formula_leaves().into_iter().cloned());
    out.sort();
    out
}

/// Growth moves tried before the others: duplicating a structure that a
/// binary introduction is about to split.
fn targeted(rule: &str, g: &Sequent) -> bool {
    let head = |t: &Term| match t {
        Term::Const(c) | Term::Unary(c, _) | Term::Binary(c, _, _) => Some(*c),
        _ => None,
    };
    let (a, s) = (head(&g.ant), head(&g.suc));
    match rule {
        "C_L_l" => s == Some(Conn::And),
        "C_L_r" => a == Some(Conn::Or),
        "C_D_l" => s == Some(Conn::Cap) || s == Some(Conn::CZero),
        "C_D_r" => a == Some(Conn::Cup),
        _ => false,
    }
}

/// `X ⊢ ⊤`, `⊥ ⊢ Y`, `Γ ⊢ 1` and `0 ⊢ Δ` follow from the constant
/// axioms by weakening, exchange and the unit rule.
fn unit_axiom(g: &Sequent) -> Option<ProofTree> {
    use Conn::*;
    // (unit, axiom, weakening, exchange, unit rule, pairing, constant on the right)
    let (unit, ax, weak, exch, intro, two, right) = match (&g.ant, &g.suc) {
        (_, Term::Const(Top)) => (HTop, "top_r", "W_L_l", "E_L_l", "htop.up", HAnd, true),
        (_, Term::Const(One)) => (HOne, "one_r", "W_D_l", "E_D_l", "hone.up", HCap, true),
        (Term::Const(Bot), _) => (CBot, "bot_l", "W_L_r", "E_L_r", "cbot.up", CVee, false),
        (Term::Const(Zero), _) => (CZero, "zero_l", "W_D_r", "E_D_r", "czero.up", CCup, false),
        _ => return None,
    };
    let (fixed, ctx) = if right { (&g.suc, &g.ant) } else { (&g.ant, &g.suc) };
    let side = |t: Term| {
        if right {
            Sequent::new(t, fixed.clone())
        } else {
            Sequent::new(fixed.clone(), t)
        }
    };
    let u = Term::konst(unit);
    let axiom = ProofTree::leaf(ax, side(u.clone()));
    let w = ProofTree::node(weak, side(Term::binary(two, u.clone(), ctx.clone())), vec![axiom]);
    let e = ProofTree::node(exch, side(Term::binary(two, ctx.clone(), u)), vec![w]);
    Some(ProofTree::node(intro, g.clone(), vec![e]))
}

impl Prover {
    pub fn new(system: System) -> Prover {
        Prover::with_models(system, pruning_models(system, 4))
    }

    pub fn with_models(system: System, models: Vec<HeteroAlgebra>) -> Prover {
        let mut axioms = Vec::new();
        let mut invertible = Vec::new();
        let mut display = Vec::new();
        let mut others = Vec::new();
        for r in all_rules().iter().filter(|r| r.in_system(system) && !r.is_cut) {
            if r.kind == RuleKind::Axiom {
                axioms.push(r);
            } else if INVERTIBLE.contains(&r.name.as_str()) || EAGER.contains(&r.name.as_str()) {
                invertible.push(r);
            } else if r.kind == RuleKind::Display
                || r.name.starts_with("E_")
                || r.name.starts_with("A_")
            {
                display.push(r);
            } else {
                others.push(r);
            }
        }
        Prover {
            system,
            axioms,
            invertible,
            display,
            others,
            models,
            valid: HashMap::new(),
            classes: HashMap::new(),
            cached: 0,
            failed: HashMap::new(),
            visited: 0,
            limit: 0,
        }
    }

    pub fn system(&self) -> System {
        self.system
    }

    pub fn models(&self) -> &[HeteroAlgebra] {
        &self.models
    }

    /// A countermodel among the pruning algebras, if any.
    pub fn refute(&self, s: &Sequent) -> Option<(usize, Valuation)> {
        self.models
            .iter()
            .enumerate()
            .find_map(|(i, hh)| match validate(s, hh) {
                Ok(Validity::Countermodel(v)) => Some((i, v)),
                _ => None,
            })
    }

    fn is_valid(&mut self, s: &Sequent) -> bool {
        if let Some(&v) = self.valid.get(s) {
            return v;
        }
        let v = self.refute(s).is_none();
        self.valid.insert(s.clone(), v);
        v
    }

    pub fn search(&mut self, goal: &Sequent, budget: Budget) -> Result<ProofTree, SearchError> {
        if let Some((model, valuation)) = self.refute(goal) {
            return Err(SearchError::Refuted { model, valuation });
        }
        self.visited = 0;
        self.limit = budget.max_visited;
        let mut depth = 0;
        for quota in STAGES {
            depth = 0;
            while depth < budget.max_depth {
                depth = (depth + 10).min(budget.max_depth);
                let mut path = HashSet::new();
                if let Some(t) = self.prove(goal, depth, quota, &mut path) {
                    debug_assert!(t.height() <= depth);
                    return Ok(t);
                }
                if self.visited > self.limit {
                    return Err(SearchError::Exhausted {
                        visited: self.visited,
                        depth,
                    });
                }
            }
        }
        Err(SearchError::Exhausted {
            visited: self.visited,
            depth,
        })
    }

    /// Members of `g`'s display class within `reach` steps of `g`.
    fn class(&mut self, g: &Sequent, reach: usize) -> Rc<Class> {
        let reach = reach.min(MAX_REACH);
        let key = (g.clone(), reach);
        if let Some(c) = self.classes.get(&key) {
            return c.clone();
        }
        let mut out = vec![Member {
            seq: g.clone(),
            parent: 0,
            rule: None,
            dist: 0,
        }];
        let mut seen: HashSet<Sequent> = HashSet::from([g.clone()]);
        let mut i = 0;
        while i < out.len() && out.len() < CLASS_CAP {
            let dist = out[i].dist + 1;
            if dist >= reach {
                break;
            }
            for r in &self.display {
                let Some(mut ps) = premises_of(r, &out[i].seq) else {
                    continue;
                };
                let p = ps.pop().expect("display rules are unary");
                if seen.insert(p.clone()) {
                    out.push(Member {
                        seq: p,
                        parent: i,
                        rule: Some(r),
                        dist,
                    });
                }
            }
            i += 1;
        }
        let canon = out.iter().map(|m| &m.seq).min().expect("nonempty").clone();
        let c = Rc::new(Class {
            members: out,
            canon,
            moves: OnceCell::new(),
        });
        self.cached += c.members.len();
        if self.cached > CACHE_CAP {
            self.classes.clear();
            self.cached = c.members.len();
        }
        self.classes.insert(key, c.clone());
        c
    }

    /// Wraps a proof of member `m` into a proof of the class root.
    fn lift(cls: &[Member], mut m: usize, mut t: ProofTree) -> ProofTree {
        while let Some(r) = cls[m].rule {
            let p = cls[m].parent;
            t = ProofTree::node(&r.name, cls[p].seq.clone(), vec![t]);
            m = p;
        }
        t
    }

    fn moves(&self, cls: &[Member]) -> Vec<Move> {
        let mut out: Vec<Move> = Vec::new();
        let mut seen: HashSet<Vec<Sequent>> = HashSet::new();
        // weakenings of display-equivalent members mostly coincide up to display
        let mut weakened: HashSet<Vec<Term>> = HashSet::new();
        for (i, m) in cls.iter().enumerate() {
            let size = m.seq.size();
            for r in &self.others {
                let Some(mut premises) = premises_of(r, &m.seq) else {
                    continue;
                };
                let mut via = None;
                match r.name.as_str() {
                    // only useful when ∘̃ can then be stripped from both sides
                    "tcirc_cbox.dn" => {
                        let t = self.others.iter().find(|r| r.name == "tcirc").copied();
                        let Some((t, up)) = t.and_then(|t| Some((t, premises_of(t, &premises[0])?)))
                        else {
                            continue;
                        };
                        via = Some((t, premises.pop().expect("unary")));
                        out.push(Move {
                            member: i,
                            rule: r,
                            via,
                            premises: up,
                            class: MoveClass::Targeted,
                        });
                        continue;
                    }
                    // undone by the eager direction
                    "cont.up" => continue,
                    _ => {}
                }
                let class = if r.kind == RuleKind::Operational {
                    MoveClass::Operational
                } else {
                    let after: usize = premises.iter().map(Sequent::size).sum();
                    if r.name.starts_with("W_") {
                        MoveClass::Weaken
                    } else if r.name == "cbox_czero" {
                        // the only way to use a ⊥̌ succedent besides weakening
                        MoveClass::Shrink
                    } else if after < size {
                        MoveClass::Shrink
                    } else if targeted(&r.name, &m.seq) {
                        MoveClass::Targeted
                    } else if UNIT_GROWTH.contains(&r.name.as_str()) {
                        continue;
                    } else {
                        MoveClass::Grow
                    }
                };
                if !seen.insert(premises.clone()) {
                    continue;
                }
                if class == MoveClass::Weaken && !weakened.insert(leaves(&premises[0])) {
                    continue;
                }
                out.push(Move {
                    member: i,
                    rule: r,
                    via,
                    premises,
                    class,
                });
            }
        }
        out.sort_by_key(|m| (m.class, cls[m.member].dist));
        out
    }

    fn prove(
        &mut self,
        g: &Sequent,
        depth: usize,
        quota: Quota,
        path: &mut HashSet<Sequent>,
    ) -> Option<ProofTree> {
        if depth == 0 || self.visited > self.limit {
            return None;
        }
        if !self.is_valid(g) {
            return None;
        }
        self.visited += 1;
        let class = self.class(g, depth);
        let cls = &class.members;
        if path.contains(&class.canon) {
            return None;
        }
        let key = (g.clone(), quota);
        if self.failed.get(&key).is_some_and(|&d| d >= depth) {
            return None;
        }
        // axioms anywhere in the class
        for (i, m) in cls.iter().enumerate().filter(|(_, m)| m.dist < depth) {
            if let Some(r) = self.axioms.iter().find(|r| premises_of(r, &m.seq).is_some()) {
                return Some(Self::lift(cls, i, ProofTree::leaf(&r.name, m.seq.clone())));
            }
        }
        for (i, m) in cls.iter().enumerate().filter(|(_, m)| m.dist + 4 <= depth) {
            if let Some(t) = unit_axiom(&m.seq) {
                return Some(Self::lift(cls, i, t));
            }
        }
        path.insert(class.canon.clone());
        let found = self.expand(&class, depth, quota, path);
        path.remove(&class.canon);
        if found.is_none() && self.visited <= self.limit {
            if self.failed.len() > FAILED_CAP {
                self.failed.clear();
            }
            let slot = self.failed.entry(key).or_insert(0);
            *slot = (*slot).max(depth);
        }
        found
    }

    fn expand(
        &mut self,
        class: &Class,
        depth: usize,
        quota: Quota,
        path: &mut HashSet<Sequent>,
    ) -> Option<ProofTree> {
        let cls = &class.members;
        let invertible = cls.iter().enumerate().filter(|(_, m)| m.dist < depth).find_map(|(i, m)| {
            self.invertible.iter().find_map(|r| {
                let p = premises_of(r, &m.seq)?.pop()?;
                Some((i, *r, p))
            })
        });
        if let Some((i, r, p)) = invertible {
            let left = depth.checked_sub(cls[i].dist + 1)?;
            let sub = self.prove(&p, left, quota, path)?;
            let t = ProofTree::node(&r.name, cls[i].seq.clone(), vec![sub]);
            return Some(Self::lift(cls, i, t));
        }
        'moves: for m in class.moves.get_or_init(|| self.moves(cls)) {
            let cost = cls[m.member].dist + 1 + usize::from(m.via.is_some());
            let Some(left) = depth.checked_sub(cost) else {
                continue;
            };
            let q = match m.class {
                MoveClass::Grow | MoveClass::Targeted => match quota.grow.checked_sub(1) {
                    Some(g) => Quota { grow: g, ..quota },
                    None => continue,
                },
                MoveClass::Weaken => match quota.weaken.checked_sub(1) {
                    Some(w) => Quota { weaken: w, ..quota },
                    None => continue,
                },
                _ => quota,
            };
            let mut subs = Vec::with_capacity(m.premises.len());
            for p in &m.premises {
                match self.prove(p, left, q, path) {
                    Some(t) => subs.push(t),
                    None => continue 'moves,
                }
            }
            let subs = match &m.via {
                Some((r, mid)) => vec![ProofTree::node(&r.name, mid.clone(), subs)],
                None => subs,
            };
            let t = ProofTree::node(&m.rule.name, cls[m.member].seq.clone(), subs);
            return Some(Self::lift(cls, m.member, t));
        }
        None
    }
}

/// One-shot search with a fresh [`Prover`].
pub fn search(goal: &Sequent, system: System, budget: Budget) -> Result<ProofTree, SearchError> {
    Prover::new(system).search(goal, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::{check_proof, corpus};
    use crate::syntax::parse_sequent;

    #[test]
    fn atom_identity() {
        let t = search(&parse_sequent("(seq p p)").unwrap(), System::Sm, Budget::default()).unwrap();
        assert_eq!(t.size(), 1);
        assert_eq!(t.rule, "Id");
    }

    #[test]
    fn compound_identity() {
        let g = parse_sequent("(seq (and (box (sim (circ p))) q) (and (box (sim (circ p))) q))").unwrap();
        let t = search(&g, System::Sm, Budget::default()).unwrap();
        assert!(check_proof(&t, System::Sm).accepted);
    }

    #[test]
    fn refuted_goal() {
        let g = parse_sequent("(seq (box (sim (circ (box (sim (circ p)))))) p)").unwrap();
        assert!(matches!(
            search(&g, System::Sm, Budget::default()),
            Err(SearchError::Refuted { .. })
        ));
    }

    #[test]
    fn short_corpus_goals() {
        // the long derivations are covered by the acceptance run
        for e in corpus().into_iter().filter(|e| !["dneg_meet", "dp", "ws"].contains(&e.name)) {
            let mut pr = Prover::new(e.system);
            let t = pr.search(&e.goal(), Budget::default()).unwrap();
            let r = check_proof(&t, e.system);
            assert!(r.accepted && r.cut_free, "{}", e.name);
        }
    }
}
