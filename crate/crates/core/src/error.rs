use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("duplicate vertex id `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate edge id `{0}`")]
    DuplicateEdge(String),
    #[error("edge `{edge}` references undeclared vertex `{vertex}`")]
    UnknownVertex { edge: String, vertex: String },
    #[error("hyperedge {0} is empty")]
    EmptyHyperedge(usize),
    #[error("unknown edge id `{0}`")]
    UnknownEdge(String),
    #[error("graph has {count} {what}, at most {limit} are supported")]
    TooLarge {
        what: &'static str,
        count: usize,
        limit: usize,
    },
    #[error("enumeration over {count} edges exceeds the guard of {limit}")]
    EnumerationGuard { count: usize, limit: usize },
    #[error("operation requires a connected graph")]
    Disconnected,
    #[error("operation requires rational components (vertex `{0}` has positive genus)")]
    PositiveGenus(String),
    #[error("edge subset {0} is not in the cographic matroid")]
    NotIndependent(String),
    #[error("polarization is not general")]
    NonGeneralPolarization,
    #[error("polarization has non-integral total degree {0}")]
    NonIntegralTotal(String),
    #[error("polarization has {got} entries but the graph has {expected} vertices")]
    PolarizationLength { expected: usize, got: usize },
    #[error("cannot substitute: {0}")]
    Substitution(String),
    #[error("series is not a Laurent polynomial in u = q/(1-q)^2: {0}")]
    NotExpressibleInU(String),
    #[error("exponential is only defined on the augmentation ideal (constant term {0})")]
    NonzeroConstantTerm(String),
    #[error("vertex classes over different host graphs")]
    HostMismatch,
    #[error("invalid automorphism: {0}")]
    InvalidAutomorphism(String),
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("catalog already has a graph named `{0}`")]
    DuplicateCatalogName(String),
    #[error("unknown catalog graph `{0}`")]
    UnknownCatalogGraph(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
