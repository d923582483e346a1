//! Divisors, p-deprived divisor sums, continued fractions, Pell equations.

use super::rational::Rat;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Positive divisors of n >= 1, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1);
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// sigma_1^{(p)}(n) = sum of divisors of n coprime to p.
pub fn sigma1_p(n: u64, p: u64) -> u64 {
    divisors(n).into_iter().filter(|d| d % p != 0).sum()
}

/// Deterministic primality for the small moduli used here.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Convergents p_k/q_k of the simple continued fraction of x, the last one
/// equal to x itself.
pub fn continued_fraction(x: &Rat) -> Vec<Rat> {
    let mut convergents = Vec::new();
    // p_{-1}/q_{-1} = 1/0, p_0/q_0 = a_0/1
    let mut p_prev = BigInt::one();
    let mut q_prev = BigInt::zero();
    let mut num = x.numer().clone();
    let mut den = x.denom().clone();
    let mut p_cur: Option<(BigInt, BigInt)> = None;
    loop {
        let a = num.div_floor(&den);
        let (p, q) = match &p_cur {
            None => (a.clone(), BigInt::one()),
            Some((pc, qc)) => (&a * pc + &p_prev, &a * qc + &q_prev),
        };
        convergents.push(Rat::new(p.clone(), q.clone()));
        if let Some((pc, qc)) = p_cur.take() {
            p_prev = pc;
            q_prev = qc;
        }
        p_cur = Some((p, q));
        let r = &num - &a * &den;
        if r.is_zero() {
            break;
        }
        num = den;
        den = r;
    }
    convergents
}

/// Integer square root if n is a perfect square.
pub fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

/// Smallest nontrivial solution (t, u), u >= 1, of t^2 - D u^2 = 4 for D > 0
/// not a perfect square. Small u is searched directly (the fundamental
/// solution of the +-4 Pell equation need not be a convergent of sqrt(D));
/// beyond the search bound we fall back to doubling the fundamental solution
/// of x^2 - D y^2 = 1 from the continued fraction of sqrt(D).
pub fn pell_like(d: u64) -> Option<(BigInt, BigInt)> {
    let dd = BigInt::from(d);
    if exact_sqrt(&dd).is_some() || d == 0 {
        return None;
    }
    for u in 1u128..2_000_000 {
        let v = (d as u128) * u * u + 4;
        let r = v.isqrt();
        if r * r == v {
            return Some((BigInt::from(r), BigInt::from(u)));
        }
    }
    // continued fraction expansion of sqrt(D): periodic algorithm for the
    // classical Pell equation, then (2x)^2 - D (2y)^2 = 4.
    let a0 = dd.sqrt();
    let (mut m, mut k, mut a) = (BigInt::zero(), BigInt::one(), a0.clone());
    let mut p_prev = BigInt::one();
    let mut q_prev = BigInt::zero();
    let mut p = a0.clone();
    let mut q = BigInt::one();
    for _ in 0..100_000 {
        let val = &p * &p - &dd * &q * &q;
        if val == BigInt::one() {
            return Some((2 * &p, 2 * &q));
        }
        if val == BigInt::from(-1) {
            // (p + q sqrt(D))^2 has norm +1
            return Some((2 * (&p * &p + &dd * &q * &q), 4 * &p * &q));
        }
        m = &a * &k - &m;
        k = (&dd - &m * &m) / &k;
        a = (&a0 + &m).div_floor(&k);
        let p_new = &a * &p + &p_prev;
        let q_new = &a * &q + &q_prev;
        p_prev = std::mem::replace(&mut p, p_new);
        q_prev = std::mem::replace(&mut q, q_new);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::rat;

    #[test]
    fn divisor_lists() {
        assert_eq!(divisors(6), vec![1, 2, 3, 6]);
        assert_eq!(divisors(1), vec![1]);
    }

    #[test]
    fn sigma_p_deprived() {
        assert_eq!(sigma1_p(1, 11), 1);
        assert_eq!(sigma1_p(4, 11), 7);
        assert_eq!(sigma1_p(11, 11), 1);
        assert_eq!(sigma1_p(22, 11), 1 + 2);
    }

    #[test]
    fn cf_of_zero() {
        assert_eq!(continued_fraction(&rat(0, 1)), vec![rat(0, 1)]);
    }

    #[test]
    fn cf_of_22_over_7() {
        assert_eq!(continued_fraction(&rat(22, 7)), vec![rat(3, 1), rat(22, 7)]);
    }

    #[test]
    fn cf_neighbor_determinants() {
        // |p_k q_{k-1} - p_{k-1} q_k| = 1 along the convergents of 3/7
        for x in [rat(3, 7), rat(-17, 13), rat(355, 113)] {
            let cs = continued_fraction(&x);
            assert_eq!(cs.last().unwrap(), &x);
            for w in cs.windows(2) {
                let det = w[1].numer() * w[0].denom() - w[0].numer() * w[1].denom();
                assert_eq!(det.abs(), BigInt::one(), "x = {}", x);
            }
        }
    }

    #[test]
    fn pell_small() {
        let (t, u) = pell_like(5).unwrap();
        assert_eq!((t, u), (BigInt::from(3), BigInt::from(1)));
        for d in [5u64, 8, 12, 13, 21, 24, 28, 40, 44, 61, 76] {
            let (t, u) = pell_like(d).unwrap();
            assert!(u >= BigInt::one());
            assert_eq!(&t * &t - BigInt::from(d) * &u * &u, BigInt::from(4), "D = {}", d);
        }
        assert!(pell_like(9).is_none());
        assert!(pell_like(16).is_none());
    }
}
