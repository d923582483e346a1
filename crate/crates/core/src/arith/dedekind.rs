//! Dedekind sums and the Rademacher function, the exact ingredients of the
//! eta-quotient period of omega_E.

use super::rational::{rat_i, Rat};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ArithError {
    #[error("dedekind_sum requires gcd(d, c) = 1, got gcd = {0}")]
    NotCoprime(BigInt),
}

/// Dedekind sum s(d, c) = sum_{k=1}^{c-1} ((k/c)) ((kd/c)) for c >= 1,
/// computed by the reciprocity descent (O(log c) exact steps):
///   s(d, c) = -1/4 + (c/d' + d'/c + 1/(c d'))/12 - s(c mod d', d')
/// with d' = d mod c normalized, plus s(d, 1) = 0 and periodicity in d.
pub fn dedekind_sum(d: &BigInt, c: &BigInt) -> Result<Rat, ArithError> {
    assert!(c > &BigInt::zero(), "modulus must be positive");
    let g = d.gcd(c);
    if g != BigInt::from(1) {
        return Err(ArithError::NotCoprime(g));
    }
    let mut d = d.mod_floor(c);
    let mut c = c.clone();
    let mut acc = Rat::zero();
    let mut sign = 1i64;
    loop {
        if c == BigInt::from(1) {
            break;
        }
        if d.is_zero() {
            // gcd(d, c) = 1 with c > 1 prevents this
            unreachable!("d = 0 with c > 1");
        }
        // reciprocity: s(d,c) + s(c,d) = -1/4 + (c/d + d/c + 1/(cd))/12
        let cr = Rat::from_integer(c.clone());
        let dr = Rat::from_integer(d.clone());
        let recip =
            rat_i(-1) / rat_i(4) + (&cr / &dr + &dr / &cr + rat_i(1) / (&cr * &dr)) / rat_i(12);
        acc += recip * rat_i(sign);
        sign = -sign;
        let new_d = c.mod_floor(&d);
        c = std::mem::replace(&mut d, new_d);
    }
    Ok(acc)
}

/// Rademacher Phi of a matrix in SL_2(Z) with c != 0:
///   Phi(gamma) = (a + d)/c - 12 sign(c) s(d, |c|).
/// For c = 0 (gamma = +-(1 b; 0 1) up to sign), Phi = b/d (= b for d = 1).
pub fn rademacher_phi(m: &[BigInt; 4]) -> Rat {
    let (a, b, c, d) = (&m[0], &m[1], &m[2], &m[3]);
    debug_assert_eq!(a * d - b * c, BigInt::from(1), "not in SL2(Z)");
    if c.is_zero() {
        // (a b; 0 d) with ad = 1, so a = d = +-1 and Phi = b/d
        return Rat::new(b.clone(), d.clone());
    }
    let s = dedekind_sum(d, &c.abs()).expect("gcd(d, c) = 1 in SL2(Z)");
    let sgn = if c.is_positive() { 1 } else { -1 };
    Rat::new(a + d, c.clone()) - rat_i(12 * sgn) * s
}
