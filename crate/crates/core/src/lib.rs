//! Finite topological spaces: the specialization preorder, separation
//! axioms, standard constructions, frames of opens, exhaustive enumeration
//! and a verification harness.

pub mod axioms;
pub mod constructions;
pub mod enumeration;
pub mod error;
pub mod frames;
pub mod json;
pub mod map;
pub mod mask;
pub mod preorder;
pub mod report;
pub mod space;
pub mod verify;

pub use axioms::{
    characterization_clauses, characterization_suite, check, urysohn_function, Axiom, Clause,
};
pub use error::{Error, Result};
pub use frames::{Frame, FrameCongruence, FrameHom};
pub use json::{parse_space, write_space, SpaceDocument};
pub use map::{MapPredicates, SpaceMap};
pub use mask::SubsetMask;
pub use preorder::{transitive_reflexive_closure, Preorder};
pub use report::{Failure, VerdictReport};
pub use space::{alexandroff_space, FiniteSpace, MAX_POINTS};
pub use verify::{
    implication_dag, mine, registry, run_suite, DagReport, EdgeStatus, EdgeVerdict, MinerOutcome,
    MinerResult, PropositionCheck, Scope,
};
