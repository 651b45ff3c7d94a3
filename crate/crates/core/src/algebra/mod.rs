//! Finite-algebra semantics: SMAs and their subvarieties, kernels,
//! heterogeneous algebras, residuals and adjoints, evaluation, validity,
//! enumeration and rule soundness.

mod derived;
mod dma;
mod enumerate;
mod eval;
mod hetero;
mod iso;
mod json;
mod lattice;
mod report;
mod sma;
mod soundness;

pub use derived::DerivedOps;
pub use dma::{check_dma, FiniteDma};
pub use enumerate::{
    distributive_lattices, enumerate, enumerate_with, neg_tables, DEFAULT_BOUND,
};
pub use eval::{
    carrier_size, eval, eval_formula, leq_in, validate, validate_single, valuations, EvalError,
    Program, Validity, Valuation, MAX_ATOMS,
};
pub use hetero::{
    check_hetero, dehetero, derived_ops, heterogenize, kernel, HeteroAlgebra, HeteroFlags,
    HeteroReport, Kernel,
};
pub use iso::{automorphisms, find_iso, UnaryAlgebra};
pub use json::{parse_algebra_file, AlgebraFile, DmaFile, HeteroFile, LatticeFile, SmaFile};
pub use lattice::FiniteLattice;
pub use report::{Check, Report};
pub use sma::{check_sma, flags_string, Flags, FiniteSma, Variety, ALL_VARIETIES};
pub use soundness::{rule_sound, Assignment, Soundness};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("malformed table: {0}")]
    Malformed(String),
    #[error("not a bounded lattice: {0}")]
    NotLattice(String),
    #[error("axiom violated: {0}")]
    Axiom(String),
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
    #[error("adjoint missing: {0}")]
    AdjointMissing(String),
    #[error("size bound exceeded: requested {requested}, bound is {bound}")]
    BoundExceeded { requested: usize, bound: usize },
}
