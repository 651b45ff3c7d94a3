//! Proof trees, the checker, and the two proof file formats.
//!
//! JSON: `{"rule": name, "conclusion": "(seq ..)", "premises": [..]}`.
//!
//! Linear: one inference per line in the order a bussproofs source lists
//! them, `ax RULE SEQ` for leaves, `un RULE SEQ` and `bin RULE SEQ` for
//! rules consuming the last one or two lines on the stack. `#` starts a
//! comment.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::syntax::{parse_sequent, render_sequent, ParseError, Sequent, Term};

use super::pattern::{match_sequent, try_match_sequent, MatchError, Subst};
use super::rules::{all_rules, find_rule, RuleSchema, System};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProofTree {
    pub conclusion: Sequent,
    pub rule: String,
    pub premises: Vec<ProofTree>,
}

impl ProofTree {
    pub fn leaf(rule: &str, conclusion: Sequent) -> ProofTree {
        ProofTree {
            conclusion,
            rule: rule.to_string(),
            premises: Vec::new(),
        }
    }

    pub fn node(rule: &str, conclusion: Sequent, premises: Vec<ProofTree>) -> ProofTree {
        ProofTree {
            conclusion,
            rule: rule.to_string(),
            premises,
        }
    }

    /// Number of inferences.
    pub fn size(&self) -> usize {
        1 + self.premises.iter().map(ProofTree::size).sum::<usize>()
    }

    /// Longest branch, counted in inferences.
    pub fn height(&self) -> usize {
        1 + self.premises.iter().map(ProofTree::height).max().unwrap_or(0)
    }

    /// Pre-order walk with the path to each node.
    pub fn walk<'a, F: FnMut(&[usize], &'a ProofTree)>(&'a self, f: &mut F) {
        fn go<'a, F: FnMut(&[usize], &'a ProofTree)>(
            t: &'a ProofTree,
            path: &mut Vec<usize>,
            f: &mut F,
        ) {
            f(path, t);
            for (i, p) in t.premises.iter().enumerate() {
                path.push(i);
                go(p, path, f);
                path.pop();
            }
        }
        go(self, &mut Vec::new(), f);
    }

    pub fn get(&self, path: &[usize]) -> Option<&ProofTree> {
        let mut t = self;
        for &i in path {
            t = t.premises.get(i)?;
        }
        Some(t)
    }

    /// Replaces the subtree at `path`.
    pub fn replace(&self, path: &[usize], new: ProofTree) -> Option<ProofTree> {
        match path.split_first() {
            None => Some(new),
            Some((&i, rest)) => {
                let mut t = self.clone();
                let child = t.premises.get(i)?.replace(rest, new)?;
                t.premises[i] = child;
                Some(t)
            }
        }
    }

    pub fn rules_used(&self) -> Vec<String> {
        let mut out: Vec<String> = Vec::new();
        self.walk(&mut |_, t| {
            if !out.contains(&t.rule) {
                out.push(t.rule.clone());
            }
        });
        out
    }

    pub fn to_json(&self) -> ProofJson {
        ProofJson {
            rule: self.rule.clone(),
            conclusion: render_sequent(&self.conclusion),
            premises: self.premises.iter().map(ProofTree::to_json).collect(),
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("serializable")
    }

    pub fn to_linear(&self) -> String {
        let mut out = String::new();
        fn go(t: &ProofTree, out: &mut String) {
            for p in &t.premises {
                go(p, out);
            }
            let kw = match t.premises.len() {
                0 => "ax",
                1 => "un",
                _ => "bin",
            };
            out.push_str(&format!("{kw} {} {}\n", t.rule, render_sequent(&t.conclusion)));
        }
        go(self, &mut out);
        out
    }

    /// Indented text, conclusion first.
    pub fn outline(&self) -> String {
        let mut out = String::new();
        self.walk(&mut |path, t| {
            out.push_str(&"  ".repeat(path.len()));
            out.push_str(&format!("{}  {}\n", t.rule, render_sequent(&t.conclusion)));
        });
        out
    }
}

impl fmt::Display for ProofTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.outline())
    }
}

/// Serialized proof node.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProofJson {
    pub rule: String,
    pub conclusion: String,
    #[serde(default)]
    pub premises: Vec<ProofJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ProofFormatError {
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("line {line}: {source}")]
    Sequent { line: usize, source: ParseError },
    #[error("at node {path:?}: {source}")]
    Node { path: Vec<usize>, source: ParseError },
    #[error("line {line}: {msg}")]
    Linear { line: usize, msg: String },
}

impl ProofJson {
    pub fn to_tree(&self) -> Result<ProofTree, ProofFormatError> {
        fn go(j: &ProofJson, path: &mut Vec<usize>) -> Result<ProofTree, ProofFormatError> {
            let conclusion =
                parse_sequent(&j.conclusion).map_err(|source| ProofFormatError::Node {
                    path: path.clone(),
                    source,
                })?;
            let mut premises = Vec::new();
            for (i, p) in j.premises.iter().enumerate() {
                path.push(i);
                premises.push(go(p, path)?);
                path.pop();
            }
            Ok(ProofTree {
                conclusion,
                rule: j.rule.clone(),
                premises,
            })
        }
        go(self, &mut Vec::new())
    }
}

pub fn parse_proof_json(text: &str) -> Result<ProofTree, ProofFormatError> {
    let j: ProofJson =
        serde_json::from_str(text).map_err(|e| ProofFormatError::Json(e.to_string()))?;
    j.to_tree()
}

/// Reads the linear format.
pub fn parse_linear(text: &str) -> Result<ProofTree, ProofFormatError> {
    let mut stack: Vec<ProofTree> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let err = |msg: &str| ProofFormatError::Linear {
            line,
            msg: msg.to_string(),
        };
        let (kw, rest) = body.split_once(char::is_whitespace).ok_or_else(|| err("expected `ax|un|bin RULE SEQUENT`"))?;
        let (rule, seq) = rest
            .trim()
            .split_once(char::is_whitespace)
            .ok_or_else(|| err("expected a rule name and a sequent"))?;
        let arity = match kw {
            "ax" => 0,
            "un" => 1,
            "bin" => 2,
            _ => return Err(err(&format!("unknown keyword {kw:?}"))),
        };
        if stack.len() < arity {
            return Err(err("not enough premises on the stack"));
        }
        let conclusion =
            parse_sequent(seq.trim()).map_err(|source| ProofFormatError::Sequent { line, source })?;
        let premises = stack.split_off(stack.len() - arity);
        stack.push(ProofTree::node(rule, conclusion, premises));
    }
    match stack.len() {
        1 => Ok(stack.pop().unwrap()),
        0 => Err(ProofFormatError::Linear {
            line: 0,
            msg: "empty proof".into(),
        }),
        n => Err(ProofFormatError::Linear {
            line: 0,
            msg: format!("{n} unconnected subproofs"),
        }),
    }
}

/// A problem at one node of a proof.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Diagnostic {
    pub path: Vec<usize>,
    pub rule: String,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "node {:?} ({}): {}", self.path, self.rule, self.message)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub accepted: bool,
    pub diagnostics: Vec<Diagnostic>,
    pub cut_free: bool,
    pub subformula: bool,
    pub size: usize,
    pub height: usize,
}

/// Instantiates `rule` against a node's conclusion and premise conclusions.
pub fn instantiate_rule(
    rule: &RuleSchema,
    conclusion: &Sequent,
    premises: &[&Sequent],
) -> Result<Subst, MatchError> {
    let mut s = Subst::new();
    match_sequent(&rule.conclusion, conclusion, &mut s)?;
    for (p, q) in rule.premises.iter().zip(premises) {
        match_sequent(p, q, &mut s)?;
    }
    Ok(s)
}

/// Rules of `system` that license this inference.
pub fn infer_rules(system: System, conclusion: &Sequent, premises: &[&Sequent]) -> Vec<&'static RuleSchema> {
    all_rules()
        .iter()
        .filter(|r| r.in_system(system) && r.premises.len() == premises.len())
        .filter(|r| {
            let mut s = Subst::new();
            try_match_sequent(&r.conclusion, conclusion, &mut s)
                && r.premises.iter().zip(premises).all(|(p, q)| try_match_sequent(p, q, &mut s))
        })
        .collect()
}

pub fn check_proof(t: &ProofTree, system: System) -> CheckReport {
    let mut diagnostics = Vec::new();
    let mut cut_free = true;
    t.walk(&mut |path, node| {
        let mut diag = |message: String| {
            diagnostics.push(Diagnostic {
                path: path.to_vec(),
                rule: node.rule.clone(),
                message,
            })
        };
        if let Err(e) = node.conclusion.check() {
            diag(format!("ill-sorted conclusion: {e}"));
            return;
        }
        let Some(rule) = find_rule(system, &node.rule) else {
            if all_rules().iter().any(|r| r.name == node.rule) {
                diag(format!("rule {} is not in D.{}", node.rule, system.name().to_uppercase()));
            } else {
                diag(format!("unknown rule {}", node.rule));
            }
            return;
        };
        if rule.is_cut {
            cut_free = false;
        }
        if rule.premises.len() != node.premises.len() {
            diag(format!(
                "rule takes {} premises, node has {}",
                rule.premises.len(),
                node.premises.len()
            ));
            return;
        }
        let prem: Vec<&Sequent> = node.premises.iter().map(|p| &p.conclusion).collect();
        if let Err(e) = instantiate_rule(rule, &node.conclusion, &prem) {
            diag(e.to_string());
        }
    });
    CheckReport {
        accepted: diagnostics.is_empty(),
        diagnostics,
        cut_free,
        subformula: subformula_property(t),
        size: t.size(),
        height: t.height(),
    }
}

/// Every formula in the tree is a subformula of one in the end sequent.
pub fn subformula_property(t: &ProofTree) -> bool {
    let mut allowed: HashSet<&Term> = HashSet::new();
    for f in t
        .conclusion
        .ant
        .formula_leaves()
        .into_iter()
        .chain(t.conclusion.suc.formula_leaves())
    {
        allowed.extend(f.subformulas());
    }
    let mut ok = true;
    t.walk(&mut |_, n| {
        for f in n
            .conclusion
            .ant
            .formula_leaves()
            .into_iter()
            .chain(n.conclusion.suc.formula_leaves())
        {
            if !allowed.contains(f) {
                ok = false;
            }
        }
    });
    ok
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> Sequent {
        parse_sequent(s).unwrap()
    }

    #[test]
    fn id_nodes() {
        let good = ProofTree::leaf("Id", seq("(seq p p)"));
        let r = check_proof(&good, System::Sm);
        assert!(r.accepted && r.cut_free && r.subformula);
        let bad = ProofTree::leaf("Id", seq("(seq p q)"));
        let r = check_proof(&bad, System::Sm);
        assert!(!r.accepted);
        assert!(r.diagnostics[0]
            .message
            .contains("metavariable p bound inconsistently"));
    }

    #[test]
    fn rule_outside_system() {
        let t = ProofTree::node(
            "LQM",
            seq("(seq p (cbox (tcirc p)))"),
            vec![ProofTree::leaf("Id", seq("(seq p p)"))],
        );
        assert!(check_proof(&t, System::Lqm).accepted);
        let r = check_proof(&t, System::Sm);
        assert!(r.diagnostics[0].message.contains("not in D.SM"));
    }

    #[test]
    fn formats_roundtrip() {
        let t = ProofTree::node(
            "and_r",
            seq("(seq (hand p q) (and p q))"),
            vec![
                ProofTree::leaf("Id", seq("(seq p p)")),
                ProofTree::leaf("Id", seq("(seq q q)")),
            ],
        );
        assert!(check_proof(&t, System::Sm).accepted);
        assert_eq!(parse_proof_json(&t.to_json_string()).unwrap(), t);
        assert_eq!(parse_linear(&t.to_linear()).unwrap(), t);
        assert!(matches!(parse_proof_json("{"), Err(ProofFormatError::Json(_))));
        assert!(parse_linear("un Id (seq p p)").is_err());
        assert!(parse_linear("ax Id (seq p p)\nax Id (seq p p)").is_err());
    }

    #[test]
    fn cut_flags() {
        let t = ProofTree::node(
            "Cut_L",
            seq("(seq p p)"),
            vec![
                ProofTree::leaf("Id", seq("(seq p p)")),
                ProofTree::leaf("Id", seq("(seq p p)")),
            ],
        );
        let r = check_proof(&t, System::Sm);
        assert!(r.accepted && !r.cut_free);
    }
}
