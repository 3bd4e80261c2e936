use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("genus must be at least 2, got {0}")]
    InvalidGenus(u32),

    #[error("genus mismatch: expected {expected}, found {found}")]
    GenusMismatch { expected: u32, found: u32 },

    #[error("cannot parse token {token:?}: {reason}")]
    Token { token: String, reason: String },

    #[error("expected {expected} generator images, found {found}")]
    ImageCount { expected: usize, found: usize },

    #[error("missing image for generator {0}")]
    MissingImage(String),

    #[error("supplied inverse does not invert the map: {0}")]
    NotInverse(String),

    /// The image of the surface word is not conjugate to it. Carries the
    /// cyclically reduced image for diagnostics.
    #[error("map is not in N: cyclically reduced image of zeta is {zeta_image}")]
    NotInN { zeta_image: String },

    #[error("conjugator {conjugator} is not a witness: phi(zeta) != u zeta u^-1")]
    BadWitness { conjugator: String },

    #[error("matrix is not invertible over the integers (determinant {det})")]
    NotUnimodular { det: i128 },

    #[error("catalog entry {name} failed verification: {reason}")]
    Catalog { name: String, reason: String },

    #[error("unknown builtin {0:?}")]
    UnknownBuiltin(String),

    #[error("invalid automorphism file: {0}")]
    Format(String),

    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),

    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
