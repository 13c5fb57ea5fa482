use num_bigint::BigInt;

use super::Parity;
use crate::combinatorics::binomial;
use crate::error::Result;
use crate::rational::{int, rat, to_integer, Rational};

/// Forward substitution in the triangular systems
///
/// ```text
/// sum_{j=1..i} 4^j C(2i+1, 2j) S_2j   = 4^i N^{2i+1} - N
/// sum_{j=1..i} 4^j C(2i, 2j-1) S_2j-1 = 4^i N^{2i} - 1
/// ```
///
/// for `i = 1..=k` with `N = n + 1/2`. Returns the whole prefix
/// `[S_2, ..., S_2k]` or `[S_1, ..., S_2k-1]`.
pub fn solve_power_sum_recurrence(parity: Parity, k: u32, n: u64) -> Result<Vec<BigInt>> {
    let big_n = int(n) + rat(1, 2);
    let mut solved: Vec<Rational> = Vec::with_capacity(k as usize);
    for i in 1..=k {
        let four_i = int(BigInt::from(4u32).pow(i));
        let (rhs, coeff): (Rational, fn(u32, u32) -> BigInt) = match parity {
            Parity::Even => (&four_i * pow(&big_n, 2 * i + 1) - &big_n, |i, j| {
                binomial(2 * i as i64 + 1, 2 * j as i64)
            }),
            Parity::Odd => (&four_i * pow(&big_n, 2 * i) - int(1), |i, j| {
                binomial(2 * i as i64, 2 * j as i64 - 1)
            }),
        };
        let known = solved.iter().enumerate().fold(int(0), |acc, (idx, s)| {
            let j = idx as u32 + 1;
            acc + int(BigInt::from(4u32).pow(j) * coeff(i, j)) * s
        });
        let diagonal = four_i * int(coeff(i, i));
        solved.push((rhs - known) / diagonal);
    }
    solved
        .iter()
        .map(|s| to_integer(s, "triangular power-sum recurrence"))
        .collect()
}

fn pow(base: &Rational, exp: u32) -> Rational {
    num_traits::pow(base.clone(), exp as usize)
}
