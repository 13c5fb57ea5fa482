//! Truncated formal power series over the rationals.
//!
//! A series knows the order up to which its coefficients are exact. Every
//! operation returns the order it can actually guarantee, so a quotient with
//! a removable singularity at the origin comes back shorter than its inputs.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::combinatorics::factorial;
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::{int, to_integer, Rational};

/// Coefficients of `x^0 ..= x^order`; zeros are kept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Trig {
    Sin,
    Cos,
}

impl TruncatedSeries {
    /// Takes ownership of `coeffs`; the order is `coeffs.len() - 1`.
    ///
    /// # Panics
    /// If `coeffs` is empty.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a truncated series needs at least one coefficient"
        );
        TruncatedSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// Truncates a polynomial to the given order.
    pub fn from_polynomial(p: &Polynomial, order: usize) -> Self {
        TruncatedSeries {
            coeffs: (0..=order).map(|i| p.coeff(i)).collect(),
        }
    }

    /// `exp(c x)`.
    pub fn exp(c: &Rational, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut term = int(1);
        for k in 0..=order {
            if k > 0 {
                term = term * c / int(k as u64);
            }
            coeffs.push(term.clone());
        }
        TruncatedSeries { coeffs }
    }

    /// `sin(c x)` or `cos(c x)`.
    pub fn trig(kind: Trig, c: &Rational, order: usize) -> Self {
        let e = Self::exp(c, order);
        let offset = match kind {
            Trig::Cos => 0,
            Trig::Sin => 1,
        };
        let coeffs = e
            .coeffs
            .into_iter()
            .enumerate()
            .map(|(k, v)| {
                if k % 2 != offset {
                    Rational::zero()
                } else if (k / 2) % 2 == 0 {
                    v
                } else {
                    -v
                }
            })
            .collect();
        TruncatedSeries { coeffs }
    }

    pub fn sin(c: &Rational, order: usize) -> Self {
        Self::trig(Trig::Sin, c, order)
    }

    pub fn cos(c: &Rational, order: usize) -> Self {
        Self::trig(Trig::Cos, c, order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// # Panics
    /// If `i` exceeds the truncation order.
    pub fn coeff(&self, i: usize) -> &Rational {
        assert!(
            i <= self.order(),
            "coefficient x^{i} is beyond order {}",
            self.order()
        );
        &self.coeffs[i]
    }

    /// `j!` times the coefficient of `x^j`: the `j`-th derivative at zero.
    pub fn derivative_at_zero(&self, j: usize) -> Rational {
        self.coeff(j) * int(factorial(j as u32))
    }

    /// Index of the lowest nonzero coefficient, or `None` if every known
    /// coefficient vanishes.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs[..=order.min(self.order())].to_vec(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Exact quotient. When the denominator has valuation `v`, the
    /// numerator must vanish to at least the same order; both are shifted
    /// down by `x^v` and the result has order `min(orders) - v`.
    pub fn div(&self, den: &TruncatedSeries) -> Result<TruncatedSeries> {
        let v = den
            .valuation()
            .ok_or(Error::ZeroDivisor { order: den.order() })?;
        let order = self.order().min(den.order());
        if v > order {
            return Err(Error::ZeroDivisor { order });
        }
        if let Some(nv) = self.valuation() {
            if nv < v {
                return Err(Error::NonRemovableSingularity {
                    numerator: nv,
                    denominator: v,
                });
            }
        }
        let out_order = order - v;
        let num = &self.coeffs[v..];
        let den = &den.coeffs[v..];
        let lead = &den[0];
        let mut q: Vec<Rational> = Vec::with_capacity(out_order + 1);
        for i in 0..=out_order {
            let mut acc = num[i].clone();
            for j in 1..=i {
                if !den[j].is_zero() {
                    acc -= &den[j] * &q[i - j];
                }
            }
            q.push(acc / lead);
        }
        Ok(TruncatedSeries { coeffs: q })
    }

    /// Evaluates `p` at this series by Horner's rule.
    pub fn compose_polynomial(&self, p: &Polynomial) -> TruncatedSeries {
        let order = self.order();
        p.coeffs().iter().rev().fold(Self::zero(order), |acc, c| {
            &(&acc * self) + &Self::constant(c.clone(), order)
        })
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=order)
                .map(|i| &self.coeffs[i] + &rhs.coeffs[i])
                .collect(),
        }
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=order)
                .map(|i| &self.coeffs[i] - &rhs.coeffs[i])
                .collect(),
        }
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(order + 1 - i).enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        TruncatedSeries { coeffs }
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// How [`powersum_from_egf`] builds the generating function
/// `sum_k S_k x^k / k!`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EgfRoute {
    /// `e^x + e^{2x} + ... + e^{nx}` term by term.
    DirectSum,
    /// The closed geometric form `(e^{(n+1)x} - e^x) / (e^x - 1)`.
    Division,
}

/// `1^k + ... + n^k` read off the exponential generating function.
pub fn powersum_from_egf(k: u32, n: u64, route: EgfRoute) -> Result<BigInt> {
    let order = k as usize;
    let egf = match route {
        EgfRoute::DirectSum => (1..=n).fold(TruncatedSeries::zero(order), |acc, r| {
            &acc + &TruncatedSeries::exp(&int(r), order)
        }),
        EgfRoute::Division => {
            let one = TruncatedSeries::constant(int(1), order + 1);
            let num = &TruncatedSeries::exp(&int(n + 1), order + 1)
                - &TruncatedSeries::exp(&int(1), order + 1);
            let den = &TruncatedSeries::exp(&int(1), order + 1) - &one;
            num.div(&den)?
        }
    };
    to_integer(
        &egf.derivative_at_zero(order),
        "power sum from generating function",
    )
}
