//! Exact counting helpers on arbitrary-precision integers.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

/// `(2n+1)(2n+3)…(2n+2l−1)`, the size of the `l`-th level below a matching
/// with `n` edges. Empty product for `l = 0`.
pub fn level_size(n: usize, l: usize) -> BigUint {
    (0..l).fold(BigUint::one(), |acc, j| acc * BigUint::from(2 * n + 2 * j + 1))
}

/// `(2n−1)!!`, the number of perfect matchings on `2n` points.
pub fn double_factorial_odd(n: usize) -> BigUint {
    level_size(0, n)
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    // Each partial product is itself a binomial coefficient, so the division is exact.
    (0..k).fold(BigUint::one(), |acc, i| acc * BigUint::from(n - i) / BigUint::from(i + 1))
}

pub fn catalan(n: usize) -> BigUint {
    binomial(2 * n, n) / BigUint::from(n + 1)
}

/// Divides exactly, panicking if the remainder is nonzero. Used by the
/// closed-form class counts whose rational factors must cancel.
pub(crate) fn exact_div(num: &BigUint, den: &BigUint, what: &str) -> BigUint {
    let q = num / den;
    assert!(&q * den == *num, "{what}: {num} is not divisible by {den}");
    q
}

/// Converts to `u64`, saturating at `u64::MAX`.
pub fn saturating_u64(x: &BigUint) -> u64 {
    x.to_u64().unwrap_or(u64::MAX)
}
