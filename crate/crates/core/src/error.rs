use thiserror::Error;

use crate::mask::SubsetMask;

/// Which clause of the topology axioms a candidate open family violates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TopologyViolation {
    MissingEmpty,
    MissingFull,
    Union(SubsetMask, SubsetMask),
    Intersection(SubsetMask, SubsetMask),
}

/// Which gluing-data condition failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CocycleClause {
    /// `U_aa` is not the whole piece or `h_aa` is not the identity.
    Diagonal,
    /// `U_ab` is not open in piece `a`.
    OverlapNotOpen,
    /// `h_ab` does not carry `U_ab ∩ U_ag` onto `U_ba ∩ U_bg`.
    TripleOverlap,
    /// `h_bg ∘ h_ab ≠ h_ag` on the triple overlap.
    Composition,
    /// `h_ba` is not the inverse of `h_ab`.
    Inverse,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("point count {n} outside supported range 1..={max}")]
    PointCount { n: usize, max: usize },

    #[error("mask {mask:?} has points outside 0..{n}")]
    MaskOutOfRange { mask: SubsetMask, n: usize },

    #[error("not a topology: {0:?}")]
    NotATopology(TopologyViolation),

    #[error("relation is not a preorder: ({0}, {1}) violates {2}")]
    NotAPreorder(usize, usize, &'static str),

    #[error("invalid map table: {0}")]
    InvalidMap(String),

    #[error("map is not continuous: preimage of {0:?} is not open")]
    NotContinuous(SubsetMask),

    #[error("codomain is not T0")]
    CodomainNotT0,

    #[error("codomain is not sober")]
    CodomainNotSober,

    #[error("size {size} exceeds cap {cap}")]
    SizeCapExceeded { size: usize, cap: usize },

    #[error("enumeration cap exceeded: n = {n}, cap = {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("sets are not disjoint")]
    NotDisjoint,

    #[error("no continuous separating function: component of point {0} meets both sets")]
    NoSeparation(usize),

    #[error("set {0:?} is not open")]
    NotOpen(SubsetMask),

    #[error("gluing data violates {clause:?} at ({alpha}, {beta}, {gamma})")]
    CocycleViolation {
        clause: CocycleClause,
        alpha: usize,
        beta: usize,
        gamma: usize,
    },

    #[error("gluing map ({alpha}, {beta}) is not a homeomorphism between the overlaps")]
    NotAHomeomorphism { alpha: usize, beta: usize },

    #[error("not a frame congruence: ({0}, {1}) violates {2}")]
    NotACongruence(usize, usize, &'static str),

    #[error("not a frame homomorphism: {0}")]
    NotAFrameHom(String),

    #[error("frame homomorphism is not an isomorphism")]
    NotAnIsomorphism,

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("unknown proposition id {0:?}")]
    UnknownPropositionId(String),

    #[error("unknown axiom {0:?}")]
    UnknownAxiom(String),

    #[error("invalid document: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
