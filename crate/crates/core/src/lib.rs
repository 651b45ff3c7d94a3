//! Display calculi for semi De Morgan logic and its extensions, together
//! with the finite-algebra semantics used to check them.
//!
//! | module | contents |
//! |---|---|
//! | [`syntax`] | terms, grammar, translation, operational reading |
//! | [`algebra`] | finite SMAs, kernels, heterogeneous algebras, validity |
//! | [`calculus`] | rule schemas, proof checking, search, cut reduction |
//! | [`inductive`] | signed generation trees and the analytic inductive test |
//! | [`suite`] | the acceptance battery |

pub mod algebra;
pub mod calculus;
pub mod exec;
pub mod inductive;
pub mod suite;
pub mod syntax;

pub use exec::Exec;
