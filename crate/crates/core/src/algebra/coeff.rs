use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact coefficient type used throughout the engine.
pub type Coeff = BigRational;

pub fn rational(num: i64, den: i64) -> Coeff {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub(crate) fn rational_i128(num: i128, den: i128) -> Coeff {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// `k / 2` as an exact rational; converts a doubled index back to its value.
pub fn half(k: i64) -> Coeff {
    rational(k, 2)
}

pub fn quarter(k: i64) -> Coeff {
    rational(k, 4)
}

pub fn factorial(n: u32) -> Coeff {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    BigRational::from_integer(acc)
}

/// Ordinary binomial coefficient `C(n, k)`; zero when `k > n`.
pub fn binomial(n: u32, k: u32) -> Coeff {
    if k > n {
        return Coeff::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    BigRational::from_integer(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), rational(10, 1));
        assert_eq!(binomial(4, 0), rational(1, 1));
        assert_eq!(binomial(3, 4), rational(0, 1));
        assert_eq!(factorial(5), rational(120, 1));
        assert_eq!(half(-3), rational(-3, 2));
    }
}
