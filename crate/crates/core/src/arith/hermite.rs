//! Physicist's Hermite polynomials H_d(t) = (2t - d/dt)^d . 1.

use num_bigint::BigInt;
use num_traits::Zero;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermitePoly {
    /// coeffs[k] = coefficient of t^k; length = degree + 1.
    pub coeffs: Vec<BigInt>,
}

impl HermitePoly {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Evaluate at a float argument.
    pub fn eval_f64(&self, t: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            // coefficients of H_d for the degrees used here fit in f64 exactly
            let cf = bigint_to_f64(c);
            acc = acc * t + cf;
        }
        acc
    }
}

fn bigint_to_f64(x: &BigInt) -> f64 {
    let s = x.to_string();
    s.parse::<f64>().expect("bigint to f64")
}

/// The degree-d physicist's Hermite polynomial, via the recurrence
/// H_{d+1}(t) = 2t H_d(t) - H_d'(t).
pub fn hermite_poly(d: usize) -> HermitePoly {
    let mut h = vec![BigInt::from(1)]; // H_0 = 1
    for _ in 0..d {
        let deg = h.len() - 1;
        let mut next = vec![BigInt::zero(); deg + 2];
        // 2t * H
        for (k, c) in h.iter().enumerate() {
            next[k + 1] += 2 * c;
        }
        // - H'
        for (k, c) in h.iter().enumerate().skip(1) {
            next[k - 1] -= k * c;
        }
        h = next;
    }
    HermitePoly { coeffs: h }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::qseries::QSeries;
    use crate::arith::rational::{rat_i, Rat};
    use num_traits::One;

    fn coeffs_i64(p: &HermitePoly) -> Vec<i64> {
        p.coeffs
            .iter()
            .map(|c| i64::try_from(c).expect("fits i64"))
            .collect()
    }

    #[test]
    fn first_values() {
        assert_eq!(coeffs_i64(&hermite_poly(0)), vec![1]);
        assert_eq!(coeffs_i64(&hermite_poly(1)), vec![0, 2]);
        assert_eq!(coeffs_i64(&hermite_poly(2)), vec![-2, 0, 4]);
        assert_eq!(coeffs_i64(&hermite_poly(3)), vec![0, -12, 0, 8]);
    }

    #[test]
    fn structure_invariants() {
        for d in 0..=20 {
            let h = hermite_poly(d);
            assert_eq!(h.degree(), d);
            // leading coefficient 2^d
            assert_eq!(h.coeffs[d], BigInt::from(2).pow(d as u32));
            // parity: coeff_k = 0 unless k = d mod 2
            for (k, c) in h.coeffs.iter().enumerate() {
                if (d - k) % 2 == 1 {
                    assert!(c.is_zero(), "H_{} has nonzero coeff at t^{}", d, k);
                }
            }
        }
    }

    /// Generating series identity exp(2tu - u^2) = sum_d H_d(t) u^d / d!,
    /// checked coefficientwise in u to order 20 with t symbolic: we compare
    /// the coefficient of t^k u^d on both sides as exact rationals.
    #[test]
    fn generating_series() {
        let order = 20usize;
        // left side: sum_{a,b} (2t)^a u^a / a! * (-1)^b u^{2b} / b!
        // coefficient of u^d: sum_{a + 2b = d} 2^a t^a (-1)^b / (a! b!)
        let mut fact = vec![Rat::one()];
        for i in 1..=order {
            let prev = fact[i - 1].clone();
            fact.push(prev * rat_i(i as i64));
        }
        for d in 0..=order {
            // left coefficient of u^d as polynomial in t (QSeries in "t")
            let mut lhs = QSeries::zero(order);
            let mut b = 0usize;
            while 2 * b <= d {
                let a = d - 2 * b;
                let sign = if b % 2 == 0 { 1 } else { -1 };
                let c = rat_i(sign) * rat_i(2).pow(a as i32) / (&fact[a] * &fact[b]);
                lhs.set_coeff(a, lhs.coeff(a) + c);
                b += 1;
            }
            // right: H_d(t)/d!
            let h = hermite_poly(d);
            let mut rhs = QSeries::zero(order);
            for (k, c) in h.coeffs.iter().enumerate() {
                rhs.set_coeff(k, Rat::from_integer(c.clone()) / &fact[d]);
            }
            assert_eq!(lhs, rhs, "generating series mismatch at u^{}", d);
        }
    }
}
