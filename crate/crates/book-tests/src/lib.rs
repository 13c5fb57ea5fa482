//! Compiles every chapter of the guide as a doc-test.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/exact-arithmetic.md")]
pub mod exact_arithmetic {}
#[doc = include_str!("../../../book/src/recurrences.md")]
pub mod recurrences {}
#[doc = include_str!("../../../book/src/determinants.md")]
pub mod determinants {}
#[doc = include_str!("../../../book/src/bernoulli.md")]
pub mod bernoulli {}
#[doc = include_str!("../../../book/src/chebyshev.md")]
pub mod chebyshev {}
#[doc = include_str!("../../../book/src/partitions.md")]
pub mod partitions {}
#[doc = include_str!("../../../book/src/series.md")]
pub mod series {}
#[doc = include_str!("../../../book/src/progressions.md")]
pub mod progressions {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
