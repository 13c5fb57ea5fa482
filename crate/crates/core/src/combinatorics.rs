//! Binomials, factorials, Stirling and Eulerian numbers, and integer
//! partitions in multiplicity form.
//!
//! The triangular tables are grown lazily behind a lock and never mutated
//! once a row exists, so every function here is pure from the caller's
//! point of view.

use std::sync::{LazyLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::poly::Polynomial;
use crate::rational::{int, Rational};

/// Rows beyond this index are computed on the fly instead of cached.
const MAX_CACHED_ROW: usize = 512;

struct Triangle {
    rows: RwLock<Vec<Vec<BigInt>>>,
    next_row: fn(usize, &[BigInt]) -> Vec<BigInt>,
}

impl Triangle {
    fn new(first: Vec<BigInt>, next_row: fn(usize, &[BigInt]) -> Vec<BigInt>) -> Self {
        Triangle {
            rows: RwLock::new(vec![first]),
            next_row,
        }
    }

    fn get(&self, row: usize, col: usize) -> Option<BigInt> {
        {
            let rows = self.rows.read().unwrap();
            if let Some(r) = rows.get(row) {
                return Some(r.get(col).cloned().unwrap_or_default());
            }
        }
        if row > MAX_CACHED_ROW {
            return None;
        }
        let mut rows = self.rows.write().unwrap();
        while rows.len() <= row {
            let n = rows.len();
            let next = (self.next_row)(n, &rows[n - 1]);
            rows.push(next);
        }
        Some(rows[row].get(col).cloned().unwrap_or_default())
    }
}

fn at(row: &[BigInt], i: usize) -> BigInt {
    row.get(i).cloned().unwrap_or_default()
}

static PASCAL: LazyLock<Triangle> = LazyLock::new(|| {
    Triangle::new(vec![BigInt::one()], |n, prev| {
        (0..=n)
            .map(|k| {
                if k == 0 {
                    BigInt::one()
                } else {
                    at(prev, k - 1) + at(prev, k)
                }
            })
            .collect()
    })
});

static STIRLING2: LazyLock<Triangle> = LazyLock::new(|| {
    Triangle::new(vec![BigInt::one()], |n, prev| {
        (0..=n)
            .map(|j| {
                if j == 0 {
                    BigInt::zero()
                } else {
                    at(prev, j - 1) + BigInt::from(j) * at(prev, j)
                }
            })
            .collect()
    })
});

// Row j holds <j, 0>, ..., <j, j> with <0, 0> = 1 and <j, 0> = 0 for j >= 1,
// so that A_j(x) = sum_i <j, i> x^i satisfies A_1(x) = x.
static EULERIAN: LazyLock<Triangle> = LazyLock::new(|| {
    Triangle::new(vec![BigInt::one()], |j, prev| {
        (0..=j)
            .map(|i| {
                if i == 0 {
                    BigInt::zero()
                } else {
                    BigInt::from(i) * at(prev, i) + BigInt::from(j - i + 1) * at(prev, i - 1)
                }
            })
            .collect()
    })
});

static FACTORIALS: LazyLock<RwLock<Vec<BigInt>>> =
    LazyLock::new(|| RwLock::new(vec![BigInt::one()]));

pub fn factorial(n: u32) -> BigInt {
    let n = n as usize;
    {
        let cache = FACTORIALS.read().unwrap();
        if let Some(f) = cache.get(n) {
            return f.clone();
        }
    }
    let mut cache = FACTORIALS.write().unwrap();
    while cache.len() <= n {
        let next = cache.last().unwrap() * BigInt::from(cache.len());
        cache.push(next);
    }
    cache[n].clone()
}

/// Binomial coefficient for any integer `n`. For `n >= 0` this is zero when
/// `k < 0` or `k > n`; negative `n` uses the upper-negation identity.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    if n < 0 {
        let value = binomial(k - n - 1, k);
        return if k % 2 == 0 { value } else { -value };
    }
    if k > n {
        return BigInt::zero();
    }
    if let Some(v) = PASCAL.get(n as usize, k as usize) {
        return v;
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `x (x - 1) ... (x - m + 1)`, with the empty product equal to one.
pub fn falling_factorial(x: &Rational, m: u32) -> Rational {
    (0..m).fold(int(1), |acc, i| acc * (x - int(i)))
}

/// The falling factorial `(c·y)_m` as a polynomial in `y`.
pub fn falling_factorial_poly(scale: i64, m: u32) -> Polynomial {
    (0..m).fold(Polynomial::one(), |acc, i| {
        acc * Polynomial::from_ints(&[-(i as i64), scale])
    })
}

/// Stirling number of the second kind `{k, j}`.
pub fn stirling2(k: u32, j: u32) -> BigInt {
    if j > k {
        return BigInt::zero();
    }
    STIRLING2
        .get(k as usize, j as usize)
        .unwrap_or_else(|| stirling2_direct(k, j))
}

fn stirling2_direct(k: u32, j: u32) -> BigInt {
    let mut row = vec![BigInt::one()];
    for n in 1..=k as usize {
        row = (STIRLING2.next_row)(n, &row);
    }
    at(&row, j as usize)
}

/// Eulerian number `<j, i>` indexed so that `A_j(x) = sum_{i=1..j} <j,i> x^i`.
pub fn eulerian_number(j: u32, i: u32) -> BigInt {
    if i > j {
        return BigInt::zero();
    }
    EULERIAN.get(j as usize, i as usize).unwrap_or_else(|| {
        let mut row = vec![BigInt::one()];
        for n in 1..=j as usize {
            row = (EULERIAN.next_row)(n, &row);
        }
        at(&row, i as usize)
    })
}

/// `A_j(x)`, with `A_0(x) = 1` and `A_1(x) = x`.
pub fn eulerian_polynomial(j: u32) -> Polynomial {
    Polynomial::from_coeffs((0..=j).map(|i| int(eulerian_number(j, i))).collect())
}

/// A tuple `(b_1, ..., b_k)` of non-negative integers with
/// `b_1 + 2 b_2 + ... + k b_k = k`, i.e. an integer partition of `k` where
/// `b_r` counts the parts equal to `r`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartitionTuple {
    parts: Vec<u32>,
}

impl PartitionTuple {
    /// Checks the weighted-sum constraint; returns `None` if it fails.
    pub fn new(parts: Vec<u32>) -> Option<Self> {
        let weighted: u64 = parts
            .iter()
            .enumerate()
            .map(|(r, &b)| (r as u64 + 1) * b as u64)
            .sum();
        (weighted == parts.len() as u64).then_some(PartitionTuple { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The `k` being partitioned.
    pub fn order(&self) -> u32 {
        self.parts.len() as u32
    }

    /// Total number of parts, `m = b_1 + ... + b_k`.
    pub fn part_count(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// `(2k)! / (b_1! ... b_k!) · prod_r (4^r (2r)!)^{-b_r}`.
    ///
    /// This is the Faà di Bruno weight of the partition in the `2k`-th
    /// derivative at zero of `f(cos(x/2))`, with the sign `(-1)^k` coming
    /// from the cosine derivatives already removed.
    pub fn half_angle_cosine_weight(&self) -> Rational {
        let k = self.order();
        let mut denom = BigInt::one();
        for (idx, &b) in self.parts.iter().enumerate() {
            let r = idx as u32 + 1;
            let block = BigInt::from(4u32).pow(r) * factorial(2 * r);
            denom *= factorial(b) * block.pow(b);
        }
        Rational::new(factorial(2 * k), denom)
    }
}

/// All partition tuples of `k` in ascending lexicographic order of
/// `(b_1, ..., b_k)`. `k = 0` yields the single empty tuple.
pub fn partition_tuples(k: u32) -> Vec<PartitionTuple> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    descending_partitions(k, k, &mut current, &mut out);
    let mut tuples: Vec<PartitionTuple> = out
        .into_iter()
        .map(|parts: Vec<u32>| {
            let mut counts = vec![0u32; k as usize];
            for p in parts {
                counts[p as usize - 1] += 1;
            }
            PartitionTuple { parts: counts }
        })
        .collect();
    tuples.sort();
    tuples
}

fn descending_partitions(
    remaining: u32,
    max_part: u32,
    current: &mut Vec<u32>,
    out: &mut Vec<Vec<u32>>,
) {
    if remaining == 0 {
        out.push(current.clone());
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        current.push(part);
        descending_partitions(remaining - part, part, current, out);
        current.pop();
    }
}
