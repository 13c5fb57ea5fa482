//! Faulhaber polynomials from determinants of the triangular recurrence
//! systems.
//!
//! The `k × k` system for the even sums has matrix entries `C(2i+1, 2j)`
//! (after the powers of four are pulled out) and right-hand side
//! `(2N)^{2i} - 1`; the odd system uses `C(2i, 2j-1)`. Replacing the last
//! column by the right-hand side and expanding along that column turns the
//! symbolic determinant into `k` numeric cofactors.

use num_bigint::BigInt;

use super::Parity;
use crate::combinatorics::{binomial, factorial};
use crate::error::{Error, Result};
use crate::linalg::ExactMatrix;
use crate::poly::Polynomial;
use crate::rational::{int, rat, Rational};

/// Variable in which a Faulhaber polynomial is written.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Basis {
    /// `N = n + 1/2`.
    N,
    /// `S_1 = n(n+1)/2`.
    S1,
}

/// Multiplier standing in front of the stored polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Factor {
    One,
    /// `S_2 = n(n+1)(2n+1)/6`.
    S2,
    /// `S_1^2`.
    S1Squared,
}

/// `S_2k` or `S_2k-1` written as `factor · body(variable)`.
///
/// In basis `N` the factor is always one: the even sums are odd
/// polynomials of degree `2k+1`, the odd sums even polynomials of degree
/// `2k`. In basis `S_1` the even sums are `S_2 · (degree k-1)` and, for
/// `k >= 2`, the odd sums are `S_1^2 · (degree k-2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaulhaberPolynomial {
    pub parity: Parity,
    pub k: u32,
    pub basis: Basis,
    pub factor: Factor,
    pub body: Polynomial,
}

impl FaulhaberPolynomial {
    /// The exponent of the power sum this polynomial represents.
    pub fn power(&self) -> u32 {
        self.parity.power(self.k)
    }

    pub fn eval(&self, n: u64) -> Rational {
        eval_faulhaber(self, n)
    }
}

/// `(k+1)! / ((2k+2)! 2^{k-1})`, the prefactor of `N · det` for `S_2k`.
pub fn even_prefactor(k: u32) -> Rational {
    Rational::new(
        factorial(k + 1),
        factorial(2 * k + 2) * BigInt::from(2u32).pow(k - 1),
    )
}

/// `1 / (k! 8^k)`, the prefactor of the determinant for `S_2k-1`.
pub fn odd_prefactor(k: u32) -> Rational {
    Rational::new(BigInt::from(1), factorial(k) * BigInt::from(8u32).pow(k))
}

/// `3 (k+1)! / ((2k+2)! 2^k)`, the prefactor of `(S_2/S_1) · det` in the
/// `S_1` basis.
pub fn s1_even_prefactor(k: u32) -> Rational {
    Rational::new(
        BigInt::from(3) * factorial(k + 1),
        factorial(2 * k + 2) * BigInt::from(2u32).pow(k),
    )
}

/// The numeric `k × k` lower-triangular system matrix: `C(2i+1, 2j)` for
/// the even sums, `C(2i, 2j-1)` for the odd sums (`i, j` from 1).
///
/// Its last column is overwritten by the symbolic right-hand side when the
/// Faulhaber polynomial is built, so only the first `k - 1` columns matter.
pub fn coefficient_matrix(parity: Parity, k: u32) -> ExactMatrix {
    ExactMatrix::from_fn(k as usize, |i, j| {
        let (i, j) = (i as i64 + 1, j as i64 + 1);
        int(match parity {
            Parity::Even => binomial(2 * i + 1, 2 * j),
            Parity::Odd => binomial(2 * i, 2 * j - 1),
        })
    })
}

/// Builds the Faulhaber polynomial of `S_2k` or `S_2k-1` by last-column
/// cofactor expansion.
pub fn faulhaber_poly(parity: Parity, k: u32, basis: Basis) -> FaulhaberPolynomial {
    assert!(k >= 1, "Faulhaber polynomials are indexed from k = 1");
    faulhaber_poly_with_matrix(parity, k, basis, &coefficient_matrix(parity, k))
        .expect("the binomial system always factors")
}

/// Same as [`faulhaber_poly`] but with a caller-supplied system matrix, so
/// that altered entries can be tried out.
///
/// Fails if `matrix` is not `k × k`, or if in the `S_1` basis the odd
/// determinant is not divisible by `S_1^2` (which only happens for a
/// matrix that is not the true system).
pub fn faulhaber_poly_with_matrix(
    parity: Parity,
    k: u32,
    basis: Basis,
    matrix: &ExactMatrix,
) -> Result<FaulhaberPolynomial> {
    if k == 0 || matrix.dim() != k as usize {
        return Err(Error::InvalidArgument(format!(
            "expected a {k}×{k} system matrix with k >= 1, got {}×{}",
            matrix.dim(),
            matrix.dim()
        )));
    }
    let last = k as usize - 1;
    let (var, rhs): (Polynomial, fn(&Polynomial, u32) -> Polynomial) = match basis {
        // (2N)^{2i} - 1
        Basis::N => (Polynomial::from_ints(&[0, 2]), |v, i| {
            &v.pow(2 * i) - &Polynomial::one()
        }),
        // (1 + 8 S_1)^i - 1
        Basis::S1 => (Polynomial::from_ints(&[1, 8]), |v, i| {
            &v.pow(i) - &Polynomial::one()
        }),
    };
    let det = (0..k as usize).fold(Polynomial::zero(), |acc, row| {
        let cofactor = matrix.cofactor(row, last);
        &acc + &rhs(&var, row as u32 + 1).scale(&cofactor)
    });
    let (factor, body) = match (basis, parity) {
        (Basis::N, Parity::Even) => (Factor::One, det.shift(1).scale(&even_prefactor(k))),
        (Basis::N, Parity::Odd) => (Factor::One, det.scale(&odd_prefactor(k))),
        (Basis::S1, Parity::Even) => {
            let inner = det
                .divide_by_x_power(1)
                .expect("last column vanishes at S_1 = 0");
            (Factor::S2, inner.scale(&s1_even_prefactor(k)))
        }
        (Basis::S1, Parity::Odd) => {
            let full = det.scale(&odd_prefactor(k));
            if k == 1 {
                (Factor::One, full)
            } else {
                let inner = full.divide_by_x_power(2).ok_or_else(|| {
                    Error::InvalidArgument(format!(
                        "odd determinant for k = {k} is not divisible by S_1^2"
                    ))
                })?;
                (Factor::S1Squared, inner)
            }
        }
    };
    Ok(FaulhaberPolynomial {
        parity,
        k,
        basis,
        factor,
        body,
    })
}

/// Evaluates at integer `n` by substituting `N = n + 1/2` or
/// `S_1 = n(n+1)/2` (and `S_2` where it appears as the factor).
pub fn eval_faulhaber(fp: &FaulhaberPolynomial, n: u64) -> Rational {
    let n = int(n);
    let s1 = &n * (&n + int(1)) / int(2);
    let variable = match fp.basis {
        Basis::N => &n + rat(1, 2),
        Basis::S1 => s1.clone(),
    };
    let factor = match fp.factor {
        Factor::One => int(1),
        Factor::S2 => &n * (&n + int(1)) * (int(2) * &n + int(1)) / int(6),
        Factor::S1Squared => &s1 * &s1,
    };
    factor * fp.body.eval(&variable)
}
