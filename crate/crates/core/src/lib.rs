//! Binomial edge ideals of closed graphs.
//!
//! * [`graph`]: bitset graphs on labels `1..=n`.
//! * [`closed`]: proper interval recognition and the interval facet normal form.
//! * [`cutsets`]: cut sets, minimal primes and Krull dimension.
//! * [`classifier`]: Cohen-Macaulay, sequentially, almost and approximately
//!   Cohen-Macaulay verdicts from the facet combinatorics.
//! * [`oracle`]: an independent check of those verdicts through the
//!   Stanley–Reisner complex of the squarefree initial ideal.
//! * [`enumerate`]: exhaustive and pseudorandom closed graph generators.

pub mod bits;
pub mod classifier;
pub mod closed;
pub mod cutsets;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod oracle;

pub use classifier::{classify, Classification};
pub use closed::{recognize, recognize_closed, ClosedForm, ClosedLabeling, IntervalFacets, Segment};
pub use error::{Error, Result};
pub use graph::Graph;
