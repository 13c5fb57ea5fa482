use num_bigint::BigInt;

use crate::combinatorics::binomial;
use crate::powersum::powersum_oracle;

/// Three expressions for `S_2k-1(2n)` in terms of power sums up to `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoublingForms {
    /// `(2n+1) n^{2k-1} + 2 sum_{j=1..k-1} C(2k-1, 2j) S_2j n^{2k-2j-1}`.
    pub even_sums: BigInt,
    /// `2 S_2k-1 + n^{2k} + sum_{j=1..2k-2} C(2k-1, j) S_j n^{2k-1-j}`.
    pub all_sums: BigInt,
    /// `4 S_2k-1 - n^{2k-1} + 2 sum_{j=1..k-1} C(2k-1, 2j-1) S_2j-1 n^{2k-2j}`.
    pub odd_sums: BigInt,
}

impl DoublingForms {
    pub fn agree(&self) -> bool {
        self.even_sums == self.all_sums && self.all_sums == self.odd_sums
    }
}

pub fn doubling_identities(k: u32, n: u64) -> DoublingForms {
    assert!(k >= 1, "doubling identities need k >= 1");
    let nb = BigInt::from(n);
    let p = 2 * k - 1;
    let choose = |j: u32| binomial(p as i64, j as i64);
    let s = |j: u32| powersum_oracle(j, n);

    let even_sums = (2 * n + 1) * nb.pow(p)
        + 2 * (1..k)
            .map(|j| choose(2 * j) * s(2 * j) * nb.pow(p - 2 * j))
            .sum::<BigInt>();
    let all_sums = 2 * s(p)
        + nb.pow(p + 1)
        + (1..p)
            .map(|j| choose(j) * s(j) * nb.pow(p - j))
            .sum::<BigInt>();
    let odd_sums = 4 * s(p) - nb.pow(p)
        + 2 * (1..k)
            .map(|j| choose(2 * j - 1) * s(2 * j - 1) * nb.pow(p + 1 - 2 * j))
            .sum::<BigInt>();
    DoublingForms {
        even_sums,
        all_sums,
        odd_sums,
    }
}
