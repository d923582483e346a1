//! Truncated power series in q with exact rational coefficients.
//!
//! A `QSeries` of precision Q stores the coefficients of q^0 .. q^Q and all
//! ring operations truncate to the minimum precision of the operands, so
//! arithmetic never reads beyond the stated precision.

use super::rational::Rat;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QSeries {
    coeffs: Vec<Rat>,
}

impl QSeries {
    /// Zero series of precision `q`.
    pub fn zero(q: usize) -> Self {
        QSeries {
            coeffs: vec![Rat::zero(); q + 1],
        }
    }

    /// Series with the given coefficients; precision = len - 1.
    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty(), "a q-series needs at least q^0");
        QSeries { coeffs }
    }

    /// Series 1 + 0q + ... of precision `q`.
    pub fn one(q: usize) -> Self {
        let mut s = Self::zero(q);
        s.coeffs[0] = Rat::from_integer(1.into());
        s
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of q^n (zero beyond precision is a caller bug: panics).
    pub fn coeff(&self, n: usize) -> &Rat {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, n: usize, c: Rat) {
        self.coeffs[n] = c;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Truncate (or zero-extend is forbidden: `q` must be <= precision).
    pub fn truncate(&self, q: usize) -> QSeries {
        assert!(q <= self.precision(), "cannot extend a truncated series");
        QSeries {
            coeffs: self.coeffs[..=q].to_vec(),
        }
    }

    pub fn add(&self, other: &QSeries) -> QSeries {
        let q = self.precision().min(other.precision());
        let coeffs = (0..=q)
            .map(|n| &self.coeffs[n] + &other.coeffs[n])
            .collect();
        QSeries { coeffs }
    }

    pub fn sub(&self, other: &QSeries) -> QSeries {
        let q = self.precision().min(other.precision());
        let coeffs = (0..=q)
            .map(|n| &self.coeffs[n] - &other.coeffs[n])
            .collect();
        QSeries { coeffs }
    }

    pub fn mul(&self, other: &QSeries) -> QSeries {
        let q = self.precision().min(other.precision());
        let mut coeffs = vec![Rat::zero(); q + 1];
        for i in 0..=q {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(q - i) {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                coeffs[i + j] += &self.coeffs[i] * &other.coeffs[j];
            }
        }
        QSeries { coeffs }
    }

    pub fn scale(&self, c: &Rat) -> QSeries {
        QSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn neg(&self) -> QSeries {
        QSeries {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    /// Strict equality requires equal precision as well as equal coefficients.
    pub fn eq_strict(&self, other: &QSeries) -> bool {
        self == other
    }
}

impl fmt::Debug for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match n {
                0 => write!(f, "{}", c)?,
                1 => write!(f, "({})q", c)?,
                _ => write!(f, "({})q^{}", c, n)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.precision() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::{rat, rat_i};
    use proptest::prelude::*;

    fn geom(q: usize) -> QSeries {
        QSeries::from_coeffs(vec![rat_i(1); q + 1])
    }

    #[test]
    fn difference_of_squares() {
        let one_plus = QSeries::from_coeffs(vec![rat_i(1), rat_i(1), rat_i(0)]);
        let one_minus = QSeries::from_coeffs(vec![rat_i(1), rat_i(-1), rat_i(0)]);
        let expect = QSeries::from_coeffs(vec![rat_i(1), rat_i(0), rat_i(-1)]);
        assert_eq!(one_plus.mul(&one_minus), expect);
    }

    #[test]
    fn truncate_geometric() {
        let s = geom(10).truncate(3);
        assert_eq!(
            s,
            QSeries::from_coeffs(vec![rat_i(1), rat_i(1), rat_i(1), rat_i(1)])
        );
    }

    #[test]
    fn scalar_multiple() {
        let s = QSeries::from_coeffs(vec![rat_i(1), rat_i(2)]).scale(&rat(5, 12));
        assert_eq!(s, QSeries::from_coeffs(vec![rat(5, 12), rat(5, 6)]));
    }

    fn arb_qseries(q: usize) -> impl Strategy<Value = QSeries> {
        proptest::collection::vec((-20i64..20, 1i64..8), q + 1)
            .prop_map(|v| QSeries::from_coeffs(v.into_iter().map(|(n, d)| rat(n, d)).collect()))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_qseries(8), b in arb_qseries(8), c in arb_qseries(8)) {
            // associativity and distributivity, exact
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
        }
    }
}
