//! Binomial coefficients, q-integers and Gaussian (q-binomial) coefficients.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Zero};

/// `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binom(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        // exact at every step: acc = C(n, i) * (n - i) / (i + 1) = C(n, i + 1)
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `[i]_q = (q^i - 1)/(q - 1)` for `i >= 1`, and `0` for `i < 1`.
pub fn q_int(i: i64, q: u64) -> BigInt {
    if i < 1 {
        return BigInt::zero();
    }
    let q = BigInt::from(q);
    let num: BigInt = Pow::pow(&q, i as u64) - 1u32;
    num / (q - 1u32)
}

/// `q^e` as a big integer.
pub fn q_pow(q: u64, e: u64) -> BigInt {
    Pow::pow(&BigInt::from(q), e)
}

/// Number of `j`-dimensional subspaces of `GF(q)^i`, computed as the quotient
/// `[i]_q [i-1]_q ... [i-j+1]_q / ([j]_q ... [1]_q)`. Zero when `j < 0` or `j > i`.
///
/// Panics if the quotient is not integral, which cannot happen for `q >= 2`.
pub fn q_binom(i: i64, j: i64, q: u64) -> BigInt {
    if i < 0 || j < 0 || j > i {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for t in 0..j {
        num *= q_int(i - t, q);
        den *= q_int(t + 1, q);
    }
    let (quot, rem) = num.div_rem(&den);
    assert!(rem.is_zero(), "q-binomial quotient not integral for ({i}, {j}, {q})");
    quot
}
