use thiserror::Error;

/// Errors surfaced by the symbolic and numeric layers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("polynomial has y-degree {found}, expected {expected}")]
    WrongDegree { expected: usize, found: usize },

    #[error("polynomial is not reciprocal: {0}")]
    NotReciprocal(String),

    #[error("temperedness undecidable symbolically: face {face} depends on k")]
    SymbolicUndecidable { face: String },

    #[error("family spec violates {clause}")]
    SpecViolation { clause: String },

    #[error("degenerate parameter value k = {k}: {why}")]
    DegenerateK { k: String, why: String },

    #[error("quotient substitution did not produce a polynomial in X^2: {0}")]
    SubstitutionFailure(String),

    #[error("quartic is degenerate (vanishing discriminant)")]
    DegenerateQuartic,

    #[error("curve family is identically degenerate")]
    IdenticallyDegenerate,

    #[error("singular curve: discriminant is zero")]
    SingularCurve,

    #[error("polynomial is not squarefree")]
    NotSquarefree,

    #[error("quadrature did not converge at level {level}, last delta {last_delta}")]
    NoConvergence { level: usize, last_delta: String },

    #[error("sign of functional equation ambiguous (test values below noise)")]
    EpsilonAmbiguous,

    #[error("-{0} is not the discriminant of a real odd primitive character")]
    NotOddPrimitive(u64),

    #[error("root collision on integration path near t = {t}; further splitting failed")]
    PathDegeneracy { t: String },

    #[error("syntax error at line {line}, column {col}: {msg}")]
    SyntaxError { line: usize, col: usize, msg: String },

    #[error("root isolation failed: {0}")]
    RootIsolation(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("{0}")]
    Other(String),
}
