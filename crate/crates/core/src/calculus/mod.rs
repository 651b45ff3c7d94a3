//! The display calculi: rule schemas, matching, proof checking, backward
//! search, identity proofs and principal cut reduction.

mod corpus;
mod cut;
mod identity;
mod pattern;
mod proof;
mod rules;
mod search;

pub use corpus::{corpus, CorpusEntry};
pub use cut::{
    cut_complexities, cut_formula, cut_instance, cut_pattern, dm_less, random_formula, reduce_cut, CutError,
    CutPattern, CUT_PATTERNS,
};
pub use identity::identity_proof;
pub use pattern::{
    instantiate, instantiate_sequent, match_sequent, match_term, matches, try_match, try_match_sequent,
    MatchError, Subst,
};
pub use rules::{
    all_rules, find_rule, system_rules, RuleKind, RuleSchema, System, UnknownSystem, ALL_SYSTEMS,
};
pub use proof::{
    check_proof, infer_rules, instantiate_rule, parse_linear, parse_proof_json, subformula_property,
    CheckReport, Diagnostic, ProofFormatError, ProofJson, ProofTree,
};
pub use search::{pruning_models, search, Budget, Prover, SearchError};
