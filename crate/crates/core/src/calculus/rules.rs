//! The rule catalogue of D.SM and its five extensions.
//!
//! Schema letters: `X Y Z W` DL structures, `G D T P S` for Γ Δ Θ Π Σ,
//! `A B` DL formulas, `a b` for α β, `p` atoms. Double-line rules become two
//! schemas: `.dn` reads the display top-down, `.up` bottom-up.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::syntax::{parse_pattern, render_sequent, unicode_sequent, MetaVar, Sequent};

/// The six calculi.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum System {
    Sm,
    Lqm,
    Uqm,
    Dp,
    Ap,
    Ws,
}

pub const ALL_SYSTEMS: [System; 6] = [
    System::Sm,
    System::Lqm,
    System::Uqm,
    System::Dp,
    System::Ap,
    System::Ws,
];

impl System {
    pub fn name(self) -> &'static str {
        match self {
            System::Sm => "sm",
            System::Lqm => "lqm",
            System::Uqm => "uqm",
            System::Dp => "dp",
            System::Ap => "ap",
            System::Ws => "ws",
        }
    }

    /// Whether a heterogeneous algebra with these flags belongs to the
    /// class this system is sound for.
    pub fn admits(self, f: crate::algebra::HeteroFlags) -> bool {
        match self {
            System::Sm => true,
            System::Lqm => f.h6a,
            System::Uqm => f.h6b,
            System::Dp => f.boolean,
            System::Ap => f.boolean && f.h7,
            System::Ws => f.boolean && f.h8,
        }
    }

    /// Systems whose rules this one includes, itself included.
    pub fn includes(self, other: System) -> bool {
        use System::*;
        other == Sm
            || self == other
            || (other == Dp && matches!(self, Ap | Ws))
    }
}

impl fmt::Display for System {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("unknown system {0:?} (expected sm, lqm, uqm, dp, ap or ws)")]
pub struct UnknownSystem(pub String);

impl FromStr for System {
    type Err = UnknownSystem;
    fn from_str(s: &str) -> Result<System, UnknownSystem> {
        ALL_SYSTEMS
            .iter()
            .copied()
            .find(|x| x.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| UnknownSystem(s.to_string()))
    }
}

/// Coarse role of a rule, used to order backward search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RuleKind {
    Axiom,
    Cut,
    Display,
    Structural,
    Operational,
}

/// An inference rule given by sequent patterns.
#[derive(Clone, Debug)]
pub struct RuleSchema {
    pub name: String,
    pub premises: Vec<Sequent>,
    pub conclusion: Sequent,
    /// The system that introduces the rule; every extension inherits it.
    pub origin: System,
    pub kind: RuleKind,
    pub is_cut: bool,
}

impl RuleSchema {
    pub fn in_system(&self, s: System) -> bool {
        s.includes(self.origin)
    }

    /// Metavariables of the premises not bound by the conclusion.
    pub fn free_premise_metas(&self) -> Vec<MetaVar> {
        let bound: Vec<MetaVar> = {
            let mut v = self.conclusion.ant.metas();
            v.extend(self.conclusion.suc.metas());
            v
        };
        let mut out = Vec::new();
        for p in &self.premises {
            for m in p.ant.metas().into_iter().chain(p.suc.metas()) {
                if !bound.contains(&m) && !out.contains(&m) {
                    out.push(m);
                }
            }
        }
        out
    }

    pub fn display(&self) -> String {
        let prem: Vec<String> = self.premises.iter().map(unicode_sequent).collect();
        format!(
            "{}: {} / {}",
            self.name,
            prem.join(" ; "),
            unicode_sequent(&self.conclusion)
        )
    }

    pub fn text(&self) -> String {
        let prem: Vec<String> = self.premises.iter().map(render_sequent).collect();
        format!(
            "{} [{}] {}",
            self.name,
            prem.join(", "),
            render_sequent(&self.conclusion)
        )
    }
}

struct Entry {
    name: &'static str,
    premises: &'static [&'static str],
    conclusion: &'static str,
    kind: RuleKind,
    double: bool,
    origin: System,
}

const fn single(
    name: &'static str,
    premises: &'static [&'static str],
    conclusion: &'static str,
    kind: RuleKind,
) -> Entry {
    Entry {
        name,
        premises,
        conclusion,
        kind,
        double: false,
        origin: System::Sm,
    }
}

const fn double(
    name: &'static str,
    top: &'static [&'static str],
    bottom: &'static str,
    kind: RuleKind,
) -> Entry {
    Entry {
        name,
        premises: top,
        conclusion: bottom,
        kind,
        double: true,
        origin: System::Sm,
    }
}

const fn ext(mut s: Entry, origin: System) -> Entry {
    s.origin = origin;
    s
}

use RuleKind::{Axiom, Cut, Display, Operational, Structural};

const CATALOGUE: &[Entry] = &[
    // identity and cut
    single("Id", &[], "(seq ?p ?p)", Axiom),
    single("Cut_L", &["(seq ?X ?A)", "(seq ?A ?Y)"], "(seq ?X ?Y)", Cut),
    single("Cut_D", &["(seq ?G ?a)", "(seq ?a ?D)"], "(seq ?G ?D)", Cut),
    // pure DL display
    double("res_L_l", &["(seq (hand ?X ?Y) ?Z)"], "(seq ?Y (carr ?X ?Z))", Display),
    double("res_L_r", &["(seq ?X (cvee ?Y ?Z))"], "(seq (hexcl ?Y ?X) ?Z)", Display),
    // pure K display
    double("res_D_l", &["(seq (hcap ?G ?D) ?T)"], "(seq ?D (csup ?G ?T))", Display),
    double("res_D_r", &["(seq ?G (ccup ?D ?T))"], "(seq (hsup ?D ?G) ?T)", Display),
    double("adj_star_l", &["(seq (tstar ?G) ?D)"], "(seq (tstar ?D) ?G)", Display),
    double("adj_star_r", &["(seq ?G (tstar ?D))"], "(seq ?D (tstar ?G))", Display),
    // multi-type display
    double("adj_LD", &["(seq ?X (cbox ?G))"], "(seq (hloz ?X) ?G)", Display),
    double("adj_DL_l", &["(seq (tcirc ?X) ?G)"], "(seq ?X (cbur ?G))", Display),
    double("adj_DL_r", &["(seq ?G (tcirc ?X))"], "(seq (hbul ?G) ?X)", Display),
    // pure DL structural
    double("htop", &["(seq ?X ?Y)"], "(seq (hand ?X htop) ?Y)", Structural),
    double("cbot", &["(seq ?X ?Y)"], "(seq ?X (cvee ?Y cbot))", Structural),
    single("E_L_l", &["(seq (hand ?X ?Y) ?Z)"], "(seq (hand ?Y ?X) ?Z)", Structural),
    single("E_L_r", &["(seq ?X (cvee ?Y ?Z))"], "(seq ?X (cvee ?Z ?Y))", Structural),
    double(
        "A_L_l",
        &["(seq (hand (hand ?X ?Y) ?Z) ?W)"],
        "(seq (hand ?X (hand ?Y ?Z)) ?W)",
        Structural,
    ),
    double(
        "A_L_r",
        &["(seq ?X (cvee (cvee ?Y ?Z) ?W))"],
        "(seq ?X (cvee ?Y (cvee ?Z ?W)))",
        Structural,
    ),
    single("W_L_l", &["(seq ?X ?Y)"], "(seq (hand ?X ?Z) ?Y)", Structural),
    single("W_L_r", &["(seq ?X ?Y)"], "(seq ?X (cvee ?Y ?Z))", Structural),
    single("C_L_l", &["(seq (hand ?X ?X) ?Y)"], "(seq ?X ?Y)", Structural),
    single("C_L_r", &["(seq ?X (cvee ?Y ?Y))"], "(seq ?X ?Y)", Structural),
    // pure K structural
    double("hone", &["(seq ?G ?D)"], "(seq (hcap ?G hone) ?D)", Structural),
    double("czero", &["(seq ?G ?D)"], "(seq ?G (ccup ?D czero))", Structural),
    single("E_D_l", &["(seq (hcap ?G ?D) ?T)"], "(seq (hcap ?D ?G) ?T)", Structural),
    single("E_D_r", &["(seq ?G (ccup ?D ?T))"], "(seq ?G (ccup ?T ?D))", Structural),
    double(
        "A_D_l",
        &["(seq (hcap (hcap ?G ?D) ?T) ?P)"],
        "(seq (hcap ?G (hcap ?D ?T)) ?P)",
        Structural,
    ),
    double(
        "A_D_r",
        &["(seq ?G (ccup (ccup ?D ?T) ?P))"],
        "(seq ?G (ccup ?D (ccup ?T ?P)))",
        Structural,
    ),
    single("W_D_l", &["(seq ?G ?D)"], "(seq (hcap ?G ?T) ?D)", Structural),
    single("W_D_r", &["(seq ?G ?D)"], "(seq ?G (ccup ?D ?T))", Structural),
    single("C_D_l", &["(seq (hcap ?G ?G) ?D)"], "(seq ?G ?D)", Structural),
    single("C_D_r", &["(seq ?G (ccup ?D ?D))"], "(seq ?G ?D)", Structural),
    double("cont", &["(seq ?G ?D)"], "(seq (tstar ?D) (tstar ?G))", Structural),
    // multi-type structural
    single("tcirc", &["(seq ?X ?Y)"], "(seq (tcirc ?X) (tcirc ?Y))", Structural),
    single("tbul", &["(seq (hbul ?G) (cbur ?D))"], "(seq ?G ?D)", Structural),
    single("hloz_hone", &["(seq hone ?G)"], "(seq (hloz htop) ?G)", Structural),
    single("cbox_czero", &["(seq ?X (cbox czero))"], "(seq ?X cbot)", Structural),
    double("tcirc_cbox", &["(seq ?G (tcirc (cbox ?D)))"], "(seq ?G ?D)", Structural),
    // pure DL operational
    single("top_l", &["(seq htop ?X)"], "(seq top ?X)", Operational),
    single("top_r", &[], "(seq htop top)", Axiom),
    single("bot_l", &[], "(seq bot cbot)", Axiom),
    single("bot_r", &["(seq ?X cbot)"], "(seq ?X bot)", Operational),
    single("and_l", &["(seq (hand ?A ?B) ?X)"], "(seq (and ?A ?B) ?X)", Operational),
    single(
        "and_r",
        &["(seq ?X ?A)", "(seq ?Y ?B)"],
        "(seq (hand ?X ?Y) (and ?A ?B))",
        Operational,
    ),
    single(
        "or_l",
        &["(seq ?A ?X)", "(seq ?B ?Y)"],
        "(seq (or ?A ?B) (cvee ?X ?Y))",
        Operational,
    ),
    single("or_r", &["(seq ?X (cvee ?A ?B))"], "(seq ?X (or ?A ?B))", Operational),
    // pure K operational
    single("one_l", &["(seq hone ?G)"], "(seq one ?G)", Operational),
    single("one_r", &[], "(seq hone one)", Axiom),
    single("zero_l", &[], "(seq zero czero)", Axiom),
    single("zero_r", &["(seq ?G czero)"], "(seq ?G zero)", Operational),
    single("cap_l", &["(seq (hcap ?a ?b) ?G)"], "(seq (cap ?a ?b) ?G)", Operational),
    single(
        "cap_r",
        &["(seq ?G ?a)", "(seq ?D ?b)"],
        "(seq (hcap ?G ?D) (cap ?a ?b))",
        Operational,
    ),
    single(
        "cup_l",
        &["(seq ?a ?G)", "(seq ?b ?D)"],
        "(seq (cup ?a ?b) (ccup ?G ?D))",
        Operational,
    ),
    single("cup_r", &["(seq ?G (ccup ?a ?b))"], "(seq ?G (cup ?a ?b))", Operational),
    single("sim_l", &["(seq (tstar ?a) ?G)"], "(seq (sim ?a) ?G)", Operational),
    single("sim_r", &["(seq ?G (tstar ?a))"], "(seq ?G (sim ?a))", Operational),
    // multi-type operational
    single("circ_l", &["(seq (tcirc ?A) ?G)"], "(seq (circ ?A) ?G)", Operational),
    single("circ_r", &["(seq ?G (tcirc ?A))"], "(seq ?G (circ ?A))", Operational),
    single("box_l", &["(seq ?a ?G)"], "(seq (box ?a) (cbox ?G))", Operational),
    single("box_r", &["(seq ?X (cbox ?a))"], "(seq ?X (box ?a))", Operational),
    // extensions
    ext(
        single("LQM", &["(seq ?X ?Y)"], "(seq ?X (cbox (tcirc ?Y)))", Structural),
        System::Lqm,
    ),
    ext(
        single("UQM", &["(seq (hbul (hloz ?X)) ?Y)"], "(seq ?X ?Y)", Structural),
        System::Uqm,
    ),
    ext(
        double(
            "res_B",
            &["(seq (hcap ?G ?D) ?S)"],
            "(seq ?D (ccup (tstar ?G) ?S))",
            Display,
        ),
        System::Dp,
    ),
    ext(
        single(
            "AP",
            &["(seq ?X (cbox (tstar (tcirc ?Y))))"],
            "(seq (hand ?X ?Y) cbot)",
            Structural,
        ),
        System::Ap,
    ),
    ext(
        single(
            "WS",
            &["(seq (hloz ?X) ?D)"],
            "(seq (hloz (hexcl (cbox (tstar (tcirc ?X))) htop)) ?D)",
            Structural,
        ),
        System::Ws,
    ),
];

fn build() -> Vec<RuleSchema> {
    let parse = |s: &str| parse_pattern(s).unwrap_or_else(|e| panic!("bad schema {s}: {e}"));
    let mut out = Vec::new();
    for entry in CATALOGUE {
        let prem: Vec<Sequent> = entry.premises.iter().map(|p| parse(p)).collect();
        let conc = parse(entry.conclusion);
        let mk = |name: String, premises: Vec<Sequent>, conclusion: Sequent| RuleSchema {
            name,
            premises,
            conclusion,
            origin: entry.origin,
            kind: entry.kind,
            is_cut: entry.kind == RuleKind::Cut,
        };
        if entry.double {
            out.push(mk(format!("{}.dn", entry.name), prem.clone(), conc.clone()));
            out.push(mk(format!("{}.up", entry.name), vec![conc], prem[0].clone()));
        } else {
            out.push(mk(entry.name.to_string(), prem, conc));
        }
    }
    out
}

/// Every schema of every system.
pub fn all_rules() -> &'static [RuleSchema] {
    static RULES: OnceLock<Vec<RuleSchema>> = OnceLock::new();
    RULES.get_or_init(build)
}

/// Schemas of one system, extensions included.
pub fn system_rules(system: System) -> Vec<&'static RuleSchema> {
    all_rules().iter().filter(|r| r.in_system(system)).collect()
}

/// Looks a schema up by name within a system.
pub fn find_rule(system: System, name: &str) -> Option<&'static RuleSchema> {
    all_rules()
        .iter()
        .find(|r| r.name == name && r.in_system(system))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalogue_is_well_formed() {
        let rules = all_rules();
        let mut names: Vec<&str> = rules.iter().map(|r| r.name.as_str()).collect();
        names.sort();
        let n = names.len();
        names.dedup();
        assert_eq!(names.len(), n, "rule names are unique");
        for r in rules {
            assert!(r.premises.len() <= 2);
            for s in r.premises.iter().chain(std::iter::once(&r.conclusion)) {
                s.check().unwrap();
            }
            let free = r.free_premise_metas();
            if r.is_cut {
                assert_eq!(free.len(), 1, "{}", r.name);
            } else {
                assert!(free.is_empty(), "{} has free {:?}", r.name, free);
            }
        }
    }

    #[test]
    fn system_membership() {
        let sm = system_rules(System::Sm);
        assert!(sm.iter().any(|r| r.name == "res_L_l.dn"));
        assert!(sm.iter().any(|r| r.name == "res_L_l.up"));
        assert!(!sm.iter().any(|r| r.name.starts_with("res_B")));
        let dp = system_rules(System::Dp);
        assert_eq!(dp.len(), sm.len() + 2);
        let ap = system_rules(System::Ap);
        assert!(dp.iter().all(|r| ap.iter().any(|s| s.name == r.name)));
        assert_eq!(ap.len(), dp.len() + 1);
        assert_eq!(system_rules(System::Ws).len(), dp.len() + 1);
        assert_eq!(system_rules(System::Lqm).len(), sm.len() + 1);
        assert!(find_rule(System::Sm, "WS").is_none());
        assert!(find_rule(System::Ws, "WS").is_some());
        assert!("SM".parse::<System>().is_ok());
        assert!("xx".parse::<System>().is_err());
    }
}
