//! A desk-scale realizability engine for constructive set theory.
//!
//! The engine has four layers:
//!
//! * [`pca`] — the applicative structure: values, fuel-bounded application,
//!   bracket abstraction, recursion-theorem fixed points, and the derived
//!   combinators everything else is built from.
//! * [`typesys`] and [`trees`] — Gödel-coded types over the algebra, set
//!   codes `sup(A,f)`, and the well-founded trees that present sets.
//! * [`formulas`], [`realizability`], and [`hf`] — the set-theoretic
//!   language, the clause-by-clause checker for `e ⊩ φ`, the `‖φ‖` type
//!   compiler, and the brute-force classical oracle over hereditarily
//!   finite sets that everything is tested against.
//! * [`m_model`] — the six axiom realizers for the tree `M` (transitivity,
//!   bounded separation, union, infinity, strong collection, subset
//!   collection) together with finite-instance verification drivers.

pub mod ctx;
pub mod formulas;
pub mod hf;
pub mod m_model;
pub mod pca;
pub mod realizability;
pub mod sexpr;
pub mod trees;
pub mod typesys;
pub mod verdict;

pub use ctx::{Error, EvalCtx, Result};
pub use pca::{EvalResult, Term, Value};
pub use trees::Tree;
pub use typesys::{TypeCode, VCode};
pub use verdict::{UnknownReason, Verdict};
