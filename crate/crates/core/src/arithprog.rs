//! Power sums over an arithmetic progression,
//! `S_k^{a,d} = a^k + (a+d)^k + ... + (a+(n-1)d)^k`.

use num_bigint::BigInt;

use crate::combinatorics::{binomial, factorial};
use crate::error::{Error, Result};
use crate::linalg::fit_and_validate;
use crate::poly::Polynomial;
use crate::rational::{int, rat, to_integer, Rational};
use crate::series::TruncatedSeries;

/// Initial term `a >= 0`, common difference `d >= 1`, term count `n >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct APParams {
    a: u64,
    d: u64,
    n: u64,
}

impl APParams {
    pub fn new(a: u64, d: u64, n: u64) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidArgument(
                "common difference d must be at least 1".into(),
            ));
        }
        if n == 0 {
            return Err(Error::InvalidArgument(
                "term count n must be at least 1".into(),
            ));
        }
        Ok(APParams { a, d, n })
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// `N_{a,d} = n + a/d - 1/2`.
    pub fn shifted_midpoint(&self) -> Rational {
        int(self.n) + rat(self.a as i64, self.d as i64) - rat(1, 2)
    }
}

/// Direct summation.
pub fn ap_oracle(k: u32, p: &APParams) -> BigInt {
    (0..p.n).map(|r| BigInt::from(p.a + r * p.d).pow(k)).sum()
}

/// `k!` times the `x^k` coefficient of
/// `(e^{(a+nd)x} - e^{ax}) / (e^{dx} - 1)`.
pub fn ap_series(k: u32, p: &APParams) -> Result<BigInt> {
    let order = k as usize + 1;
    let num = &TruncatedSeries::exp(&int(p.a + p.n * p.d), order)
        - &TruncatedSeries::exp(&int(p.a), order);
    let den = &TruncatedSeries::exp(&int(p.d), order) - &TruncatedSeries::constant(int(1), order);
    let q = num.div(&den)?;
    to_integer(
        &q.derivative_at_zero(k as usize),
        "progression generating function",
    )
}

/// `S_1^{a,d} = c_0 + c_1 N_{a,d}^2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApFirstPower {
    /// `a/2 - a^2/(2d) - d/8`.
    pub c0: Rational,
    /// `d/2`.
    pub c1: Rational,
    pub midpoint: Rational,
    pub value: Rational,
}

pub fn ap_faulhaber_k1(p: &APParams) -> ApFirstPower {
    let a = int(p.a);
    let d = int(p.d);
    let c0 = &a / int(2) - &a * &a / (int(2) * &d) - &d / int(8);
    let c1 = &d / int(2);
    let midpoint = p.shifted_midpoint();
    let value = &c0 + &c1 * &midpoint * &midpoint;
    ApFirstPower {
        c0,
        c1,
        midpoint,
        value,
    }
}

/// `A_{k,j}(a, d) = sum_{i=0..j} (-1)^i [(j+1-i) d - a]^k C(k+1, i)`.
pub fn a_coefficient(k: u32, j: u32, a: &BigInt, d: &BigInt) -> BigInt {
    (0..=j)
        .map(|i| {
            let base = BigInt::from(j + 1 - i) * d - a;
            let term = base.pow(k) * binomial(k as i64 + 1, i as i64);
            if i % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

/// `T_k(x, a, d) = sum_{j=0..k} A_{k,j}(a, d) x^j`.
pub fn t_polynomial(k: u32, a: &BigInt, d: &BigInt) -> Polynomial {
    let coeffs: Vec<BigInt> = (0..=k).map(|j| a_coefficient(k, j, a, d)).collect();
    Polynomial::from_bigints(&coeffs)
}

/// `Q_n^{a,d}(x; k) = a^k x (x-1)^{k+1} + x^{n+1} T_k(x, a+d(n-1), -d) - x^2 T_k(x, a, -d)`.
pub fn q_ap_polynomial(k: u32, p: &APParams) -> Polynomial {
    let a = BigInt::from(p.a);
    let neg_d = -BigInt::from(p.d);
    let last = BigInt::from(p.a + p.d * (p.n - 1));
    let lead = Polynomial::from_ints(&[-1, 1])
        .pow(k + 1)
        .shift(1)
        .scale(&int(a.pow(k)));
    let upper = t_polynomial(k, &last, &neg_d).shift(p.n as usize + 1);
    let lower = t_polynomial(k, &a, &neg_d).shift(2);
    &(&lead + &upper) - &lower
}

/// `S_k^{a,d} = Q^{(k+1)}(1) / (k+1)!`.
pub fn ap_via_numerator(k: u32, p: &APParams) -> Result<BigInt> {
    let q = q_ap_polynomial(k, p);
    let value = q.derivative(k as usize + 1).eval(&int(1)) / int(factorial(k + 1));
    to_integer(&value, "progression numerator polynomial")
}

/// Coefficients `d_{k,1}, ..., d_{k,k}` with
/// `1^{2k-1} + 3^{2k-1} + ... + (2n-1)^{2k-1} = sum_r d_{k,r} n^{2r}`,
/// fitted on `n = 1..=k` and checked on the next five `n`.
pub fn odd_number_coefficients(k: u32) -> Option<Vec<Rational>> {
    assert!(k >= 1);
    fit_and_validate(
        k as usize,
        5,
        |n, r| int(BigInt::from(n).pow(2 * (r as u32 + 1))),
        |n| int(ap_oracle(2 * k - 1, &APParams { a: 1, d: 2, n })),
    )
}
