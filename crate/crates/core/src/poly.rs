//! Dense univariate polynomials with rational coefficients.
//!
//! The indeterminate is anonymous: the same type carries polynomials in `x`,
//! in `N = n + 1/2`, in `S_1`, or in a summation index, and only the caller
//! knows which.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::rational::{format_rational, int, Rational};

/// Coefficients are stored lowest degree first with no trailing zeros; the
/// zero polynomial has no coefficients at all.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(int(1))
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(int(1), 1)
    }

    pub fn monomial(c: Rational, degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree];
        coeffs.push(c);
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn from_bigints(coeffs: &[BigInt]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|c| int(c.clone())).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^i`; zero past the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coeff(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplies by `x^shift`.
    pub fn shift(&self, shift: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); shift];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    /// Exact division by `x^power`, or `None` if some low coefficient is
    /// nonzero.
    pub fn divide_by_x_power(&self, power: usize) -> Option<Self> {
        if self.coeffs.iter().take(power).any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_coeffs(
            self.coeffs.iter().skip(power).cloned().collect(),
        ))
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Substitutes `inner` for the indeterminate.
    pub fn compose(&self, inner: &Polynomial) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| {
            &(&acc * inner) + &Self::constant(c.clone())
        })
    }

    /// Horner evaluation.
    pub fn eval(&self, x0: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x0 + c)
    }

    /// The `times`-fold formal derivative.
    pub fn derivative(&self, times: usize) -> Self {
        if times == 0 {
            return self.clone();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(times)
            .map(|(i, c)| {
                let falling: BigInt = (0..times).map(|t| BigInt::from(i - t)).product();
                c * int(falling)
            })
            .collect();
        Self::from_coeffs(coeffs)
    }

    /// Applies `x · d/dx` the given number of times: the coefficient of
    /// `x^r` is multiplied by `r^times`.
    pub fn xddx(&self, times: u32) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(r, c)| c * int(BigInt::from(r).pow(times)))
            .collect();
        Self::from_coeffs(coeffs)
    }

    /// True if every nonzero coefficient sits at a power of the given parity.
    pub fn has_parity(&self, odd: bool) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(i, c)| c.is_zero() || (i % 2 == 1) == odd)
    }

    /// Coefficients as `"p/q"` strings, lowest degree first.
    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(format_rational).collect()
    }

    /// Plain text in descending powers, e.g. `1/3 N^3 - 1/12 N`.
    pub fn display_with(&self, var: &str) -> String {
        self.render(
            var,
            format_rational,
            |var, e| format!("{var}^{e}"),
            " ",
        )
    }

    /// LaTeX in descending powers, e.g. `\frac{1}{3}N^3 - \frac{1}{12}N`.
    pub fn to_latex(&self, var: &str) -> String {
        self.render(
            var,
            |c| {
                if c.denom().is_one() {
                    c.numer().to_string()
                } else {
                    format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom())
                }
            },
            |var, e| {
                if e < 10 {
                    format!("{var}^{e}")
                } else {
                    format!("{var}^{{{e}}}")
                }
            },
            "",
        )
    }

    fn render(
        &self,
        var: &str,
        coeff: impl Fn(&Rational) -> String,
        power: impl Fn(&str, usize) -> String,
        gap: &str,
    ) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let monomial = match i {
                0 => String::new(),
                1 => var.to_string(),
                e => power(var, e),
            };
            if monomial.is_empty() {
                out.push_str(&coeff(&magnitude));
            } else if magnitude.is_one() {
                out.push_str(&monomial);
            } else {
                out.push_str(&coeff(&magnitude));
                out.push_str(gap);
                out.push_str(&monomial);
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("x"))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_coeffs((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_coeffs((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial { (&self).$method(&rhs) }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial { (&self).$method(rhs) }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}
