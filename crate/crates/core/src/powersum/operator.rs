//! Routes through the geometric polynomial `1 + x + ... + x^n` and the
//! operator `x · d/dx`.

use num_bigint::BigInt;

use crate::combinatorics::{binomial, eulerian_polynomial, factorial, stirling2};
use crate::error::Result;
use crate::poly::Polynomial;
use crate::rational::{int, to_integer, Rational};

/// Two closed forms of the numerator polynomial `Q_n(x; k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QForm {
    Stirling,
    Eulerian,
}

fn geometric(n: u64) -> Polynomial {
    Polynomial::from_coeffs(vec![int(1); n as usize + 1])
}

fn one_minus_x() -> Polynomial {
    Polynomial::from_ints(&[1, -1])
}

/// `Q_n(x; k)`, the numerator of `(x d/dx)^k (1 - x^{n+1}) / (1 - x)` over
/// `(1 - x)^{k+1}`. It has degree `n + k + 1`.
pub fn q_polynomial(k: u32, n: u64, form: QForm) -> Polynomial {
    let mut q_pows = vec![Polynomial::one()];
    for _ in 0..k {
        q_pows.push(q_pows.last().unwrap() * &one_minus_x());
    }
    let tail = n as usize + 1;
    match form {
        QForm::Stirling => {
            // x^r (1-x)^{k-r}
            let basis: Vec<Polynomial> = (0..=k as usize)
                .map(|r| q_pows[k as usize - r].shift(r))
                .collect();
            (0..=k).fold(Polynomial::zero(), |acc, j| {
                let weight = int(factorial(j) * stirling2(k, j));
                let inner = (0..=j).fold(Polynomial::zero(), |inner, r| {
                    let c = int(binomial(n as i64 + 1, (j - r) as i64));
                    &inner + &basis[r as usize].scale(&c)
                });
                &acc + &(&basis[j as usize] - &inner.shift(tail)).scale(&weight)
            })
        }
        QForm::Eulerian => {
            let n1 = BigInt::from(n + 1);
            let inner = (0..=k).fold(Polynomial::zero(), |acc, j| {
                let c = int(binomial(k as i64, j as i64) * n1.pow(j));
                &acc + &(&q_pows[j as usize] * &eulerian_polynomial(k - j)).scale(&c)
            });
            &eulerian_polynomial(k) - &inner.shift(tail)
        }
    }
}

/// `S_k = (-1)^{k+1} / (k+1)! · Q_n^{(k+1)}(1)`.
pub fn powersum_via_q(k: u32, n: u64, form: QForm) -> Result<BigInt> {
    let q = q_polynomial(k, n, form);
    let mut value = q.derivative(k as usize + 1).eval(&int(1)) / int(factorial(k + 1));
    if k % 2 == 0 {
        value = -value;
    }
    to_integer(&value, "numerator polynomial derivative")
}

/// `(x d/dx)^k` applied to the geometric polynomial, evaluated at one.
pub fn powersum_via_operator(k: u32, n: u64) -> Result<BigInt> {
    to_integer(&geometric(n).xddx(k).eval(&int(1)), "x d/dx operator")
}

/// `sum_j {k, j} · G^{(j)}(1)` with `G` the geometric polynomial.
pub fn powersum_via_stirling(k: u32, n: u64) -> Result<BigInt> {
    let g = geometric(n);
    let value = (1..=k).fold(Rational::from_integer(BigInt::from(0)), |acc, j| {
        acc + int(stirling2(k, j)) * g.derivative(j as usize).eval(&int(1))
    });
    to_integer(&value, "Stirling expansion of x d/dx")
}
