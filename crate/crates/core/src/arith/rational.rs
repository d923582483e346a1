//! Exact scalars. All intersection numbers, Hecke eigenvalues and q-series
//! coefficients live in `Rat`; invariants (reduced form, positive denominator)
//! are maintained by `num_rational`.

use num_bigint::BigInt;
pub use num_rational::BigRational as Rat;
use num_traits::{One, Signed, Zero};

/// Rational from a pair of machine integers.
pub fn rat(num: i64, den: i64) -> Rat {
    assert!(den != 0, "zero denominator");
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Rational from a single integer.
pub fn rat_i(num: i64) -> Rat {
    Rat::from_integer(BigInt::from(num))
}

/// True if `x` is an integer.
pub fn is_integer(x: &Rat) -> bool {
    x.denom().is_one()
}

/// Floor of a rational as a `BigInt`.
pub fn floor_int(x: &Rat) -> BigInt {
    x.floor().to_integer()
}

/// Exact sign: -1, 0, +1.
pub fn sign(x: &Rat) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_invariants() {
        let x = rat(6, -4);
        assert_eq!(x, rat(-3, 2));
        assert!(x.denom() > &BigInt::from(0));
        assert_eq!(sign(&x), -1);
        assert!(!is_integer(&x));
        assert!(is_integer(&rat(8, 4)));
        assert_eq!(floor_int(&rat(-3, 2)), BigInt::from(-2));
    }
}
