use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// `C(a, b)`, taken to be 0 when `b < 0`, `a < 0` or `a < b`.
pub fn binomial(a: i64, b: i64) -> BigInt {
    if b < 0 || a < 0 || a < b {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for i in 0..b {
        acc = acc * BigInt::from(a - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

pub fn rational(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

/// The integer value of `q`, if it is one.
pub fn to_integer(q: &BigRational) -> Option<BigInt> {
    q.is_integer().then(|| q.to_integer())
}

/// `(-1)^e` as an `i64`.
pub fn sign_pow(e: usize) -> i64 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn abs(v: &BigInt) -> BigInt {
    v.abs()
}
