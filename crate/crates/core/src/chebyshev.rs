//! Chebyshev polynomials of the second kind and the power-sum formulas
//! obtained by differentiating `U_2n(cos(x/2))` and
//! `U_n(cos(x/2)) sin(nx/2)` at the origin.

use num_bigint::BigInt;

use crate::combinatorics::{binomial, factorial, partition_tuples};
use crate::error::Result;
use crate::poly::Polynomial;
use crate::rational::{int, rat, to_integer, Rational};
use crate::series::TruncatedSeries;

/// `U_n` together with its index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChebyshevU {
    pub n: u32,
    pub poly: Polynomial,
}

/// `U_n` from `U_0 = 1`, `U_1 = 2x`, `U_n = 2x U_{n-1} - U_{n-2}`.
pub fn cheb_u(n: u32) -> ChebyshevU {
    let two_x = Polynomial::from_ints(&[0, 2]);
    let mut prev = Polynomial::one();
    let mut cur = two_x.clone();
    if n == 0 {
        cur = prev.clone();
    }
    for _ in 1..n {
        let next = &(&two_x * &cur) - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    ChebyshevU { n, poly: cur }
}

/// `U_n(x) = sum_{j=0..n/2} (-1)^j C(n-j, j) (2x)^{n-2j}`.
pub fn cheb_u_explicit(n: u32) -> Polynomial {
    (0..=n / 2).fold(Polynomial::zero(), |acc, j| {
        let mut c = binomial((n - j) as i64, j as i64) * BigInt::from(2u32).pow(n - 2 * j);
        if j % 2 == 1 {
            c = -c;
        }
        &acc + &Polynomial::monomial(int(c), (n - 2 * j) as usize)
    })
}

/// `U_n^{(j)}(1) = 2^j j! C(n+j+1, 2j+1)`.
pub fn cheb_u_derivative_at_1(n: u32, j: u32) -> BigInt {
    BigInt::from(2u32).pow(j) * factorial(j) * binomial((n + j + 1) as i64, (2 * j + 1) as i64)
}

fn partition_sum(j: u32, mut f: impl FnMut(u32) -> BigInt) -> Rational {
    partition_tuples(j).iter().fold(int(0), |acc, t| {
        let m = t.part_count();
        acc + t.half_angle_cosine_weight() * int(f(m))
    })
}

/// `S_2k` as a Faà di Bruno sum over the partitions of `k`:
/// `1/2 sum_b w(b) 2^m m! C(2n+m+1, 2m+1)`.
pub fn faa_even(k: u32, n: u64) -> Result<BigInt> {
    let value = partition_sum(k, |m| {
        BigInt::from(2u32).pow(m)
            * factorial(m)
            * binomial((2 * n + m as u64 + 1) as i64, (2 * m + 1) as i64)
    }) / int(2);
    to_integer(&value, "even Faà di Bruno sum")
}

/// `S_2k-1` as
/// `2/4^k [(n+1) n^{2k-1} + sum_{j=1..k-1} 4^j n^{2k-2j-1} C(2k-1, 2j) F_j(n)]`
/// where `F_j(n) = sum_b w(b) 2^m m! C(n+m+1, 2m+1)` over partitions of `j`.
pub fn faa_odd(k: u32, n: u64) -> Result<BigInt> {
    let nb = BigInt::from(n);
    let p = 2 * k - 1;
    let mut bracket = int((&nb + 1u32) * nb.pow(p));
    for j in 1..k {
        let inner = partition_sum(j, |m| {
            BigInt::from(2u32).pow(m)
                * factorial(m)
                * binomial((n + m as u64 + 1) as i64, (2 * m + 1) as i64)
        });
        let outer =
            BigInt::from(4u32).pow(j) * nb.pow(p - 2 * j) * binomial(p as i64, 2 * j as i64);
        bracket += int(outer) * inner;
    }
    let value = bracket * rat(2, 1) / int(BigInt::from(4u32).pow(k));
    to_integer(&value, "odd Faà di Bruno sum")
}

/// Coefficients `p_{k,m}` (for `m = 1..=k`) of
/// `S_2k = sum_m p_{k,m} C(2n+m+1, 2m+1)`.
pub fn even_binomial_coefficients(k: u32) -> Vec<Rational> {
    let mut out = vec![int(0); k as usize];
    for t in partition_tuples(k) {
        let m = t.part_count();
        out[m as usize - 1] +=
            t.half_angle_cosine_weight() * int(BigInt::from(2u32).pow(m) * factorial(m)) / int(2);
    }
    out
}

/// Polynomials `Q_{k,j}(n)` (for `j = 1..=k`) of
/// `S_2k-1 = 2/4^k sum_j Q_{k,j}(n) C(n+j, 2j-1)`.
pub fn odd_binomial_coefficients(k: u32) -> Vec<Polynomial> {
    let p = 2 * k - 1;
    let mut out = vec![Polynomial::zero(); k as usize];
    out[0] = Polynomial::monomial(int(1), p as usize);
    for i in 1..k {
        let outer = int(BigInt::from(4u32).pow(i) * binomial(p as i64, 2 * i as i64));
        for t in partition_tuples(i) {
            let m = t.part_count();
            let c = &outer
                * t.half_angle_cosine_weight()
                * int(BigInt::from(2u32).pow(m) * factorial(m));
            let term = Polynomial::monomial(c, (p - 2 * i) as usize);
            out[m as usize] = &out[m as usize] + &term;
        }
    }
    out
}

/// `S_p` by series composition: for even `p = 2k` the value
/// `(-1)^k / 2 · D^{2k} U_2n(cos(x/2))` at zero, for odd `p = 2k - 1`
/// `(-1)^{k-1} D^{2k-1} [U_n(cos(x/2)) sin(nx/2)]` at zero.
pub fn powersum_via_chebyshev_series(power: u32, n: u64) -> Result<BigInt> {
    assert!(
        power >= 1,
        "the Chebyshev series route needs a positive exponent"
    );
    let order = power as usize;
    let half_cos = TruncatedSeries::cos(&rat(1, 2), order);
    let value = if power % 2 == 0 {
        let k = power / 2;
        let u = cheb_u(2 * n as u32).poly;
        let d = half_cos.compose_polynomial(&u).derivative_at_zero(order) / int(2);
        if k % 2 == 0 {
            d
        } else {
            -d
        }
    } else {
        let k = power.div_ceil(2);
        let u = cheb_u(n as u32).poly;
        let product =
            &half_cos.compose_polynomial(&u) * &TruncatedSeries::sin(&rat(n as i64, 2), order);
        let d = product.derivative_at_zero(order);
        if k % 2 == 1 {
            d
        } else {
            -d
        }
    };
    to_integer(&value, "Chebyshev series composition")
}
