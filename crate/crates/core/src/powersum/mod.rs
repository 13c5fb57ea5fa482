//! Power sums `S_k(n) = 1^k + 2^k + ... + n^k` by every route that does not
//! need Chebyshev machinery, plus the identities that tie them together.

mod doubling;
mod exotic;
mod faulhaber;
mod identities;
mod operator;
mod recurrence;

pub use doubling::{doubling_identities, DoublingForms};
pub use exotic::{exotic_powersum, pk_polynomial};
pub use faulhaber::{
    coefficient_matrix, eval_faulhaber, faulhaber_poly, faulhaber_poly_with_matrix, Basis, Factor,
    FaulhaberPolynomial,
};
pub use identities::{
    binomial_recurrences_hold, fit_exotic_recurrence, verify_identities, weighted_ratio,
    IdentityCheck, IdentityReport,
};
pub use operator::{
    powersum_via_operator, powersum_via_q, powersum_via_stirling, q_polynomial, QForm,
};
pub use recurrence::solve_power_sum_recurrence;

use num_bigint::BigInt;

/// Which half of the power sums a formula produces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    /// `S_2, S_4, ..., S_2k`.
    Even,
    /// `S_1, S_3, ..., S_2k-1`.
    Odd,
}

impl Parity {
    /// The exponent represented by half-index `k`: `2k` or `2k - 1`.
    pub fn power(self, k: u32) -> u32 {
        match self {
            Parity::Even => 2 * k,
            Parity::Odd => 2 * k - 1,
        }
    }

    /// Splits an exponent `p >= 1` into parity and half-index.
    pub fn split(power: u32) -> (Parity, u32) {
        if power % 2 == 0 {
            (Parity::Even, power / 2)
        } else {
            (Parity::Odd, power.div_ceil(2))
        }
    }
}

/// Direct summation of `r^k` for `r = 1..=n`.
pub fn powersum_oracle(k: u32, n: u64) -> BigInt {
    (1..=n).map(|r| BigInt::from(r).pow(k)).sum()
}
