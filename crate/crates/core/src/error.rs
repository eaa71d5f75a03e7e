use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("graphs are limited to {max} vertices, got {n}")]
    TooManyVertices { n: usize, max: usize },

    #[error("vertex subset must be nonempty")]
    EmptySubset,

    #[error("vertex {0} is not simplicial in the complement")]
    NotSimplicialInComplement(usize),

    #[error("complement is not chordal")]
    NotCoChordal,

    #[error("parameter r must be at least 1")]
    ZeroR,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("operation undefined on the void complex")]
    VoidComplex,

    #[error("regularity is undefined for the zero ideal")]
    ZeroIdeal,

    #[error("{0} is not prime")]
    NotPrime(u32),

    #[error("Betti number does not fit in 64 bits")]
    Overflow,

    /// A structural guarantee of the collapse construction failed. Seeing this
    /// means a bug, not bad input.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}
