//! Exact integer sequences used by the closed forms.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// `C(n, k)` by the multiplicative formula, zero when `k < 0` or `k > n`
/// (and for negative `n`).
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `F_1 = F_2 = 1`, `F_n = F_{n-1} + F_{n-2}`; `F_0 = 0`.
pub fn fibonacci(n: usize) -> BigInt {
    let (mut a, mut b) = (BigInt::zero(), BigInt::one());
    for _ in 0..n {
        let next = &a + &b;
        a = b;
        b = next;
    }
    a
}

/// `C_n = C(2n, n) / (n + 1)`.
pub fn catalan(n: usize) -> BigInt {
    binomial(2 * n as i64, n as i64) / BigInt::from(n + 1)
}

pub fn pow2(e: usize) -> BigInt {
    BigInt::one() << e
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(4, 5), BigInt::zero());
        assert_eq!(binomial(4, -1), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
        assert_eq!(binomial(30, 15), BigInt::from(155_117_520u64));
    }

    #[test]
    fn fibonacci_convention() {
        let v: alloc::vec::Vec<_> = (1..=10).map(fibonacci).collect();
        let expect: alloc::vec::Vec<BigInt> = [1, 1, 2, 3, 5, 8, 13, 21, 34, 55].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(v, expect);
    }

    #[test]
    fn catalan_numbers() {
        let v: alloc::vec::Vec<_> = (0..8).map(catalan).collect();
        let expect: alloc::vec::Vec<BigInt> = [1, 1, 2, 5, 14, 42, 132, 429].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(v, expect);
    }
}
