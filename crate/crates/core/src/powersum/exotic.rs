use num_bigint::BigInt;

use crate::combinatorics::{binomial, falling_factorial_poly, partition_tuples};
use crate::error::Result;
use crate::poly::Polynomial;
use crate::rational::{int, to_integer, Rational};

/// `P_k(j) = 2^k sum_{b} w(b) (2j)_m`, summed over partition tuples `b` of
/// `k` with `m` parts and half-angle cosine weight `w(b)`. A polynomial in
/// `j` of degree `k` with no constant term.
pub fn pk_polynomial(k: u32) -> Polynomial {
    let scale = int(BigInt::from(2u32).pow(k));
    partition_tuples(k)
        .iter()
        .fold(Polynomial::zero(), |acc, t| {
            let term =
                falling_factorial_poly(2, t.part_count()).scale(&t.half_angle_cosine_weight());
            &acc + &term
        })
        .scale(&scale)
}

/// `S_2k = 2^{-(k+1)} sum_{j=1..n} (-1)^{n+j} 4^j P_k(j) C(n+j, 2j)`.
pub fn exotic_powersum(k: u32, n: u64) -> Result<BigInt> {
    let pk = pk_polynomial(k);
    let sum = (1..=n).fold(Rational::from_integer(BigInt::from(0)), |acc, j| {
        let term = int(BigInt::from(4u32).pow(j as u32) * binomial((n + j) as i64, 2 * j as i64))
            * pk.eval(&int(j));
        if (n + j) % 2 == 0 {
            acc + term
        } else {
            acc - term
        }
    });
    let value = sum / int(BigInt::from(2u32).pow(k + 1));
    to_integer(&value, "alternating binomial sum")
}
