use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::Rational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Binomial coefficient `C(n, k)`, zero when `k < 0` or `k > n`.
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

/// Generalized binomial `alpha (alpha-1) ... (alpha-n+1) / n!`.
pub fn gen_binomial(alpha: &Rational, n: usize) -> Rational {
    let mut acc = Rational::one();
    for i in 0..n {
        acc = acc * (alpha - int(i as i64)) / int(i as i64 + 1);
    }
    acc
}

/// The product `l (l+2) (l+4) ... (l+2n-2)` of `n` factors.
///
/// This is the ratio of double factorials `(2n+l-2)!! / (l-2)!!`, read as a
/// product so that it is well defined (and zero for `n > 0`) at `l = 0`.
pub fn rising_even_product(l: i64, n: usize) -> BigInt {
    (0..n as i64).fold(BigInt::one(), |acc, i| acc * BigInt::from(l + 2 * i))
}

/// Splits `n = s^2 * r` with `r` square-free. Returns `(s, r)`.
///
/// Trial division; the inputs in this crate are products of factorials so
/// their prime factors are small.
pub fn square_free_split(n: &BigUint) -> (BigUint, BigUint) {
    let mut rest = n.clone();
    let mut square = BigUint::one();
    let mut free = BigUint::one();
    if rest.is_zero() {
        return (BigUint::zero(), BigUint::zero());
    }
    let mut d = BigUint::from(2u32);
    while &d * &d <= rest {
        let mut count = 0u32;
        while (&rest % &d).is_zero() {
            rest /= &d;
            count += 1;
        }
        for _ in 0..count / 2 {
            square *= &d;
        }
        if count % 2 == 1 {
            free *= &d;
        }
        d += 1u32;
    }
    free *= rest;
    (square, free)
}

pub(crate) fn to_u64_radicand(r: &BigUint) -> u64 {
    r.to_u64()
        .unwrap_or_else(|| panic!("square-free radicand {r} exceeds u64"))
}

pub(crate) fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(3, 4), BigInt::zero());
        assert_eq!(binomial(3, -1), BigInt::zero());
        assert_eq!(gen_binomial(&rat(-1, 2), 2), rat(3, 8));
        assert_eq!(gen_binomial(&int(-1), 3), int(-1));
    }

    #[test]
    fn double_factorial_ratio() {
        // (1-X)^{-1/2}: coefficient of X^n is (2n-1)!!/(2^n n!)
        assert_eq!(rising_even_product(1, 3), BigInt::from(15));
        assert_eq!(rising_even_product(0, 0), BigInt::one());
        assert_eq!(rising_even_product(0, 2), BigInt::zero());
    }

    #[test]
    fn square_free() {
        let (s, r) = square_free_split(&BigUint::from(72u32));
        assert_eq!((s, r), (BigUint::from(6u32), BigUint::from(2u32)));
        let (s, r) = square_free_split(&BigUint::from(1u32));
        assert_eq!((s, r), (BigUint::one(), BigUint::one()));
    }
}
