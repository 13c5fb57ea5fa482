//! Exact power sums `1^k + 2^k + ... + n^k` by many independent routes,
//! Faulhaber polynomials, Bernoulli numbers and sums over arithmetic
//! progressions. All arithmetic is over arbitrary-precision rationals.
//!
//! ```
//! use faulhaber::powersum::{faulhaber_poly, Basis, Parity};
//!
//! let s2 = faulhaber_poly(Parity::Even, 1, Basis::N);
//! assert_eq!(s2.body.display_with("N"), "1/3 N^3 - 1/12 N");
//! assert_eq!(s2.eval(3).to_string(), "14");
//! ```

pub mod arithprog;
pub mod bernoulli;
pub mod chebyshev;
pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod linalg;
pub mod poly;
pub mod powersum;
pub mod rational;
pub mod series;
