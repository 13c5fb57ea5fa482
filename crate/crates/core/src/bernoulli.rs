//! Even-index Bernoulli numbers by two determinants, by differentiating
//! the Faulhaber polynomial, and by the classical recurrence.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinatorics::{binomial, factorial};
use crate::linalg::ExactMatrix;
use crate::powersum::{faulhaber_poly, Basis, Parity};
use crate::rational::{int, rat, Rational};

/// `B_2k` with its index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BernoulliValue {
    pub index: u32,
    pub value: Rational,
}

impl BernoulliValue {
    pub fn new(index: u32, value: Rational) -> Self {
        assert!(
            index >= 2 && index % 2 == 0,
            "only even indices 2k >= 2 are represented"
        );
        BernoulliValue { index, value }
    }

    /// von Staudt–Clausen: the denominator of `B_2k` is the product of the
    /// primes `p` with `(p - 1) | 2k`.
    pub fn satisfies_staudt_clausen(&self) -> bool {
        self.value.denom() == &staudt_clausen_denominator(self.index)
    }
}

/// Product of all primes `p` with `(p - 1)` dividing `index`.
pub fn staudt_clausen_denominator(index: u32) -> BigInt {
    (1..=index)
        .filter(|d| index % d == 0)
        .map(|d| d + 1)
        .filter(|&p| is_prime(p))
        .fold(BigInt::one(), |acc, p| acc * p)
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BernoulliMethod {
    Determinant,
    VanMalderen,
    Faulhaber,
    Oracle,
}

/// `B_2k` by the chosen route.
pub fn bernoulli(k: u32, method: BernoulliMethod) -> BernoulliValue {
    let value = match method {
        BernoulliMethod::Determinant => bernoulli_det(k),
        BernoulliMethod::VanMalderen => bernoulli_vanmalderen(k),
        BernoulliMethod::Faulhaber => bernoulli_from_faulhaber(k),
        BernoulliMethod::Oracle => bernoulli_oracle(2 * k),
    };
    BernoulliValue::new(2 * k, value)
}

/// `B_0 ..= B_m` from `sum_{j=0..m} C(m+1, j) B_j = 0`, with `B_1 = -1/2`.
pub fn bernoulli_numbers(m: u32) -> Vec<Rational> {
    let mut b: Vec<Rational> = vec![int(1)];
    for i in 1..=m {
        let acc = b.iter().enumerate().fold(Rational::zero(), |acc, (j, bj)| {
            acc + int(binomial(i as i64 + 1, j as i64)) * bj
        });
        b.push(-acc / int(i + 1));
    }
    b
}

pub fn bernoulli_oracle(m: u32) -> Rational {
    bernoulli_numbers(m).pop().unwrap()
}

/// `4 (k+1)! / ((2k+2)! 2^k)`.
pub fn det_prefactor(k: u32) -> Rational {
    Rational::new(
        BigInt::from(4) * factorial(k + 1),
        factorial(2 * k + 2) * BigInt::from(2u32).pow(k),
    )
}

/// The `k × k` matrix with `C(2i+1, 2j)` in the first `k - 1` columns
/// and `1, 2, ..., k` in the last.
pub fn det_matrix(k: u32) -> ExactMatrix {
    let last = k as usize - 1;
    ExactMatrix::from_fn(k as usize, |i, j| {
        if j == last {
            int(i as u64 + 1)
        } else {
            int(binomial(2 * i as i64 + 3, 2 * j as i64 + 2))
        }
    })
}

/// `B_2k = det_prefactor(k) · det(det_matrix(k))`.
pub fn bernoulli_det(k: u32) -> Rational {
    assert!(k >= 1);
    det_prefactor(k) * det_matrix(k).determinant()
}

/// Lower Hessenberg matrix with `1/(2(i-j)+3)!` on and below the
/// diagonal and ones on the superdiagonal.
pub fn vanmalderen_matrix(k: u32) -> ExactMatrix {
    ExactMatrix::from_fn(k as usize, |i, j| {
        if j <= i {
            Rational::new(BigInt::one(), factorial(2 * (i - j) as u32 + 3))
        } else if j == i + 1 {
            int(1)
        } else {
            int(0)
        }
    })
}

/// `B_2k = (-1)^{k+1} (2k)! / (2 (2^{2k-1} - 1)) · det(vanmalderen_matrix(k))`.
pub fn bernoulli_vanmalderen(k: u32) -> Rational {
    assert!(k >= 1);
    let mut prefactor = Rational::new(
        factorial(2 * k),
        BigInt::from(2) * (BigInt::from(2u32).pow(2 * k - 1) - 1u32),
    );
    if k % 2 == 0 {
        prefactor = -prefactor;
    }
    prefactor * vanmalderen_matrix(k).determinant()
}

/// Derivative in `n` of the `S_2k` polynomial at `n = 0`, i.e. the
/// `N`-derivative at `N = 1/2`.
pub fn bernoulli_from_faulhaber(k: u32) -> Rational {
    faulhaber_poly(Parity::Even, k, Basis::N)
        .body
        .derivative(1)
        .eval(&rat(1, 2))
}
