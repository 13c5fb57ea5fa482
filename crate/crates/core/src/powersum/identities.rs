//! Checkers for the identities linking the even and odd power sums.

use num_bigint::BigInt;

use super::{powersum_oracle, solve_power_sum_recurrence, Parity};
use crate::combinatorics::binomial;
use crate::linalg::fit_and_validate;
use crate::rational::{int, Rational};

/// Points beyond the fit used to validate a fitted recurrence.
const VALIDATION_POINTS: u64 = 5;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub k: u32,
    pub n: u64,
    pub ok: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IdentityReport {
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn all_ok(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(|c| !c.ok)
    }
}

fn weighted_sums(k: u32, n: u64) -> (BigInt, BigInt) {
    let even = solve_power_sum_recurrence(Parity::Even, k, n).expect("even recurrence is integral");
    let odd = solve_power_sum_recurrence(Parity::Odd, k, n).expect("odd recurrence is integral");
    let four = |j: u32| BigInt::from(4u32).pow(j);
    let e = (1..=k)
        .map(|j| four(j) * binomial(2 * k as i64 + 1, 2 * j as i64) * &even[j as usize - 1])
        .sum();
    let o = (1..=k)
        .map(|j| four(j) * binomial(2 * k as i64, 2 * j as i64 - 1) * &odd[j as usize - 1])
        .sum();
    (e, o)
}

/// `2 · (sum_j 4^j C(2k+1, 2j) S_2j) / (sum_j 4^j C(2k, 2j-1) S_2j-1)`,
/// which equals `2n + 1`.
pub fn weighted_ratio(k: u32, n: u64) -> Rational {
    let (e, o) = weighted_sums(k, n);
    Rational::new(2 * e, o)
}

/// The two binomial recurrences without powers of four:
/// `sum C(2k+1, 2j) S_2j = ((n+1)^{2k+1} + n^{2k+1} - 2n - 1) / 2` and
/// `sum C(2k, 2j-1) S_2j-1 = ((n+1)^{2k} + n^{2k} - 1) / 2`.
pub fn binomial_recurrences_hold(k: u32, n: u64) -> (bool, bool) {
    let nb = BigInt::from(n);
    let n1 = BigInt::from(n + 1);
    let even_lhs: BigInt = (1..=k)
        .map(|j| binomial(2 * k as i64 + 1, 2 * j as i64) * powersum_oracle(2 * j, n))
        .sum();
    let even_rhs = (n1.pow(2 * k + 1) + nb.pow(2 * k + 1) - 2 * &nb - 1u32) / 2u32;
    let odd_lhs: BigInt = (1..=k)
        .map(|j| binomial(2 * k as i64, 2 * j as i64 - 1) * powersum_oracle(2 * j - 1, n))
        .sum();
    let odd_rhs = (n1.pow(2 * k) + nb.pow(2 * k) - 1u32) / 2u32;
    (even_lhs == even_rhs, odd_lhs == odd_rhs)
}

/// `sum_{j=1..n} (-1)^{n+j} 4^j j^k C(n+j, 2j)`.
pub fn alternating_moment(k: u32, n: u64) -> BigInt {
    (1..=n)
        .map(|j| {
            let term = BigInt::from(4u32).pow(j as u32)
                * BigInt::from(j).pow(k)
                * binomial((n + j) as i64, 2 * j as i64);
            if (n + j) % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

/// Coefficients `c_{k,1}, ..., c_{k,k}` with
/// `sum_r c_{k,r} S_2r(n) = alternating_moment(k, n)`, fitted on
/// `n = 1..=k` and validated on the next five `n`.
pub fn fit_exotic_recurrence(k: u32) -> Option<Vec<Rational>> {
    fit_and_validate(
        k as usize,
        VALIDATION_POINTS,
        |n, r| int(powersum_oracle(2 * (r as u32 + 1), n)),
        |n| int(alternating_moment(k, n)),
    )
}

/// Runs the ratio identity, both binomial recurrences and the fitted
/// alternating recurrence at one `(k, n)`.
pub fn verify_identities(k: u32, n: u64) -> IdentityReport {
    let mut checks = Vec::new();
    let mut push = |name, ok, detail: String| {
        checks.push(IdentityCheck {
            name,
            k,
            n,
            ok,
            detail,
        })
    };

    let ratio = weighted_ratio(k, n);
    let expected = int(2 * n + 1);
    push(
        "ratio",
        ratio == expected,
        format!("ratio {ratio}, expected {expected}"),
    );

    let (even, odd) = binomial_recurrences_hold(k, n);
    push("binomial-even", even, String::new());
    push("binomial-odd", odd, String::new());

    match fit_exotic_recurrence(k) {
        Some(c) => {
            let lhs = c.iter().enumerate().fold(int(0), |acc, (r, c)| {
                acc + c * int(powersum_oracle(2 * (r as u32 + 1), n))
            });
            let rhs = int(alternating_moment(k, n));
            push(
                "alternating-fit",
                lhs == rhs,
                format!("lhs {lhs}, rhs {rhs}"),
            );
            let total: Rational = c.iter().sum();
            push(
                "alternating-sum",
                total == int(4),
                format!("coefficient sum {total}"),
            );
        }
        None => push(
            "alternating-fit",
            false,
            "fit failed validation".to_string(),
        ),
    }
    IdentityReport { checks }
}
