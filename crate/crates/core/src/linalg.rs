//! Exact determinants of square rational matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{int, Rational};

/// Matrices up to this size are eliminated directly over the rationals.
const RATIONAL_ELIMINATION_MAX: usize = 4;

/// Square matrix of rationals stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    dim: usize,
    entries: Vec<Rational>,
}

impl ExactMatrix {
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::InvalidArgument(
                "matrix dimension must be at least 1".into(),
            ));
        }
        if let Some((row, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != dim) {
            return Err(Error::NotSquare {
                rows: dim,
                row,
                len: r.len(),
            });
        }
        Ok(ExactMatrix {
            dim,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| int(v)).collect())
                .collect(),
        )
    }

    /// # Panics
    /// If `dim == 0`.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        assert!(dim >= 1, "matrix dimension must be at least 1");
        let entries = (0..dim * dim).map(|idx| f(idx / dim, idx % dim)).collect();
        ExactMatrix { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &Rational {
        &self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Rational) {
        self.entries[row * self.dim + col] = value;
    }

    pub fn row(&self, row: usize) -> &[Rational] {
        &self.entries[row * self.dim..(row + 1) * self.dim]
    }

    /// The matrix with `row` and `col` removed, or `None` for a 1×1 matrix.
    pub fn minor(&self, row: usize, col: usize) -> Option<ExactMatrix> {
        if self.dim == 1 {
            return None;
        }
        let dim = self.dim - 1;
        Some(ExactMatrix::from_fn(dim, |i, j| {
            let si = if i < row { i } else { i + 1 };
            let sj = if j < col { j } else { j + 1 };
            self.get(si, sj).clone()
        }))
    }

    /// Signed cofactor of `(row, col)`. The cofactor of a 1×1 matrix is 1.
    pub fn cofactor(&self, row: usize, col: usize) -> Rational {
        let minor = self
            .minor(row, col)
            .map_or_else(|| int(1), |m| m.determinant());
        if (row + col) % 2 == 0 {
            minor
        } else {
            -minor
        }
    }

    /// Exact determinant.
    ///
    /// Small matrices use Gaussian elimination over the rationals. Larger
    /// ones have each column scaled to integers by the LCM of its
    /// denominators and then go through fraction-free Bareiss elimination.
    pub fn determinant(&self) -> Rational {
        let n = self.dim;
        if (0..n).any(|j| (0..n).all(|i| self.get(i, j).is_zero())) {
            return Rational::zero();
        }
        if n <= RATIONAL_ELIMINATION_MAX {
            return self.rational_elimination();
        }
        let mut scale = BigInt::one();
        let mut ints = vec![BigInt::zero(); n * n];
        for j in 0..n {
            let lcm = (0..n).fold(BigInt::one(), |acc, i| acc.lcm(self.get(i, j).denom()));
            for i in 0..n {
                let e = self.get(i, j);
                ints[i * n + j] = e.numer() * (&lcm / e.denom());
            }
            scale *= lcm;
        }
        Rational::new(bareiss(n, ints), scale)
    }

    fn rational_elimination(&self) -> Rational {
        let n = self.dim;
        let mut a: Vec<Vec<Rational>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut det = int(1);
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
                return Rational::zero();
            };
            if p != k {
                a.swap(p, k);
                det = -det;
            }
            let pivot = a[k][k].clone();
            det *= &pivot;
            for i in k + 1..n {
                if a[i][k].is_zero() {
                    continue;
                }
                let factor = &a[i][k] / &pivot;
                for j in k..n {
                    let delta = &factor * &a[k][j];
                    a[i][j] -= delta;
                }
            }
        }
        det
    }

    /// Solves `self · x = rhs` exactly; `None` if the matrix is singular.
    pub fn solve(&self, rhs: &[Rational]) -> Option<Vec<Rational>> {
        let n = self.dim;
        assert_eq!(
            rhs.len(),
            n,
            "right-hand side length must match the dimension"
        );
        let mut a: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                let mut row = self.row(i).to_vec();
                row.push(rhs[i].clone());
                row
            })
            .collect();
        for k in 0..n {
            let p = (k..n).find(|&i| !a[i][k].is_zero())?;
            a.swap(p, k);
            let pivot = a[k][k].clone();
            for v in a[k].iter_mut() {
                *v /= &pivot;
            }
            for i in 0..n {
                if i == k || a[i][k].is_zero() {
                    continue;
                }
                let factor = a[i][k].clone();
                for j in k..=n {
                    let delta = &factor * &a[k][j];
                    a[i][j] -= delta;
                }
            }
        }
        Some(a.into_iter().map(|mut row| row.pop().unwrap()).collect())
    }
}

/// Fits `unknowns` coefficients `c_r` so that `sum_r c_r basis(t, r) =
/// target(t)` for `t = 1..=unknowns`, then checks the fitted relation on
/// `t = unknowns+1 ..= unknowns+extra`. `None` if the fit system is singular
/// or the relation fails on a validation point.
pub fn fit_and_validate(
    unknowns: usize,
    extra: u64,
    basis: impl Fn(u64, usize) -> Rational,
    target: impl Fn(u64) -> Rational,
) -> Option<Vec<Rational>> {
    let m = ExactMatrix::from_fn(unknowns, |i, r| basis(i as u64 + 1, r));
    let rhs: Vec<Rational> = (1..=unknowns as u64).map(&target).collect();
    let coeffs = m.solve(&rhs)?;
    let end = unknowns as u64 + extra;
    let holds = (unknowns as u64 + 1..=end).all(|t| {
        let lhs = coeffs
            .iter()
            .enumerate()
            .fold(Rational::zero(), |acc, (r, c)| acc + c * basis(t, r));
        lhs == target(t)
    });
    holds.then_some(coeffs)
}

/// Fraction-free elimination on an `n × n` integer matrix (row-major).
/// Every division is exact.
fn bareiss(n: usize, mut a: Vec<BigInt>) -> BigInt {
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        let Some(p) = (k..n).find(|&i| !a[i * n + k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            for j in 0..n {
                a.swap(p * n + j, k * n + j);
            }
            negate = !negate;
        }
        let pivot = a[k * n + k].clone();
        for i in k + 1..n {
            let lead = a[i * n + k].clone();
            for j in k + 1..n {
                let v = (&a[i * n + j] * &pivot - &lead * &a[k * n + j]) / &prev;
                a[i * n + j] = v;
            }
            a[i * n + k] = BigInt::zero();
        }
        prev = pivot;
    }
    let det = a[n * n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use proptest::prelude::*;

    /// Independent oracle: Laplace expansion along the first row.
    fn laplace(m: &[Vec<Rational>]) -> Rational {
        let n = m.len();
        if n == 1 {
            return m[0][0].clone();
        }
        let mut acc = Rational::zero();
        for j in 0..n {
            if m[0][j].is_zero() {
                continue;
            }
            let sub: Vec<Vec<Rational>> = m[1..]
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|(c, _)| *c != j)
                        .map(|(_, v)| v.clone())
                        .collect()
                })
                .collect();
            let term = &m[0][j] * laplace(&sub);
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    fn rows_of(m: &ExactMatrix) -> Vec<Vec<Rational>> {
        (0..m.dim()).map(|i| m.row(i).to_vec()).collect()
    }

    #[test]
    fn small_determinants() {
        assert_eq!(
            ExactMatrix::from_int_rows(&[vec![3]])
                .unwrap()
                .determinant(),
            int(3)
        );
        let m = ExactMatrix::from_int_rows(&[vec![3, 0], vec![10, 5]]).unwrap();
        assert_eq!(m.determinant(), int(15));
        let zero_col =
            ExactMatrix::from_int_rows(&[vec![1, 0, 2], vec![3, 0, 4], vec![5, 0, 6]]).unwrap();
        assert_eq!(zero_col.determinant(), int(0));
    }

    #[test]
    fn errors_on_bad_shapes() {
        assert!(matches!(
            ExactMatrix::from_rows(vec![]),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(
            ExactMatrix::from_int_rows(&[vec![1, 2], vec![3]]),
            Err(Error::NotSquare {
                rows: 2,
                row: 1,
                len: 1
            })
        ));
    }

    fn six_by_six(entry: i64) -> ExactMatrix {
        ExactMatrix::from_int_rows(&[
            vec![3, 0, 0, 0, 0, 1],
            vec![10, 5, 0, 0, 0, 2],
            vec![21, 35, 7, 0, 0, 3],
            vec![36, 126, 84, 9, 0, 4],
            vec![55, 330, entry, 165, 11, 5],
            vec![78, 715, 1716, 1287, 286, 6],
        ])
        .unwrap()
    }

    #[test]
    fn bernoulli_twelve_matrix() {
        let m = six_by_six(462);
        assert_eq!(m.determinant(), int(-70_050_816));
        assert_eq!(laplace(&rows_of(&m)), int(-70_050_816));
        assert_eq!(m.determinant() * rat(1, 276_756_480), rat(-691, 2730));
        let misprinted = six_by_six(463);
        assert_ne!(
            misprinted.determinant() * rat(1, 276_756_480),
            rat(-691, 2730)
        );
    }

    #[test]
    fn triangular_is_diagonal_product() {
        for k in 1..=12usize {
            let m = ExactMatrix::from_fn(k, |i, j| {
                if j > i {
                    int(0)
                } else {
                    rat((i * 7 + j * 3 + 1) as i64, (j + 1) as i64)
                }
            });
            let diag = (0..k).fold(int(1), |acc, i| acc * m.get(i, i));
            assert_eq!(m.determinant(), diag, "k = {k}");
        }
    }

    #[test]
    fn solve_recovers_solution() {
        let m = ExactMatrix::from_int_rows(&[vec![2, 1, 0], vec![1, 3, 1], vec![0, 1, 4]]).unwrap();
        let x = vec![rat(1, 2), int(-3), rat(5, 7)];
        let rhs: Vec<Rational> = (0..3)
            .map(|i| (0..3).fold(int(0), |acc, j| acc + m.get(i, j) * &x[j]))
            .collect();
        assert_eq!(m.solve(&rhs).unwrap(), x);
        let singular = ExactMatrix::from_int_rows(&[vec![1, 2], vec![2, 4]]).unwrap();
        assert!(singular.solve(&[int(1), int(1)]).is_none());
    }

    fn matrix(max_dim: usize) -> impl Strategy<Value = ExactMatrix> {
        (1..=max_dim).prop_flat_map(|n| {
            prop::collection::vec((-12i64..12, 1i64..7), n * n).prop_map(move |vals| {
                ExactMatrix::from_fn(n, |i, j| {
                    let (p, q) = vals[i * n + j];
                    rat(p, q)
                })
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]
        #[test]
        fn matches_laplace(m in matrix(6)) {
            prop_assert_eq!(m.determinant(), laplace(&rows_of(&m)));
        }

        #[test]
        fn row_swap_and_scaling(m in matrix(6), p in -5i64..6, q in 1i64..5) {
            let n = m.dim();
            let base = m.determinant();
            if n >= 2 {
                let swapped = ExactMatrix::from_fn(n, |i, j| {
                    let i = match i { 0 => 1, 1 => 0, other => other };
                    m.get(i, j).clone()
                });
                prop_assert_eq!(swapped.determinant(), -base.clone());
            }
            let c = rat(p, q);
            let scaled = ExactMatrix::from_fn(n, |i, j| if i == n - 1 { m.get(i, j) * &c } else { m.get(i, j).clone() });
            prop_assert_eq!(scaled.determinant(), base * c);
        }
    }
}
