pub mod admissible;
pub mod betti;
pub mod buchberger;
pub mod caterpillar;
pub mod closedness;
pub mod corpus;
pub mod error;
pub mod graph;
pub mod io;
pub mod primes;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{BipartiteStar, Classification, Graph, Labeling};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/groebner.md")]
    mod groebner {}
    #[doc = include_str!("../../../book/src/closedness.md")]
    mod closedness {}
    #[doc = include_str!("../../../book/src/caterpillars.md")]
    mod caterpillars {}
    #[doc = include_str!("../../../book/src/primes.md")]
    mod primes {}
    #[doc = include_str!("../../../book/src/betti.md")]
    mod betti {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
