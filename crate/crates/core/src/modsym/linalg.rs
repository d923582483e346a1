//! Dense exact linear algebra over Q and Z, sized for modular-symbol spaces
//! (dimensions up to a few dozen).

use crate::arith::rational::Rat;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Vec_ = Vec<Rat>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    pub rows: Vec<Vec<Rat>>,
}

impl Mat {
    pub fn zero(r: usize, c: usize) -> Self {
        Mat {
            rows: vec![vec![Rat::zero(); c]; r],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            m.rows[i][i] = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        if let Some(first) = rows.first() {
            let c = first.len();
            assert!(rows.iter().all(|r| r.len() == c));
        }
        Mat { rows }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.rows.first().map_or(0, |r| r.len())
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.ncols(), other.nrows());
        let mut out = Mat::zero(self.nrows(), other.ncols());
        for i in 0..self.nrows() {
            for k in 0..self.ncols() {
                if self.rows[i][k].is_zero() {
                    continue;
                }
                for j in 0..other.ncols() {
                    if other.rows[k][j].is_zero() {
                        continue;
                    }
                    let prod = &self.rows[i][k] * &other.rows[k][j];
                    out.rows[i][j] += prod;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.ncols(), v.len());
        self.rows
            .iter()
            .map(|row| {
                let mut acc = Rat::zero();
                for (a, b) in row.iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!(self.nrows(), other.nrows());
        assert_eq!(self.ncols(), other.ncols());
        Mat::from_rows(
            self.rows
                .iter()
                .zip(&other.rows)
                .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rat) -> Mat {
        Mat::from_rows(
            self.rows
                .iter()
                .map(|r| r.iter().map(|x| x * c).collect())
                .collect(),
        )
    }

    pub fn transpose(&self) -> Mat {
        let mut out = Mat::zero(self.ncols(), self.nrows());
        for i in 0..self.nrows() {
            for j in 0..self.ncols() {
                out.rows[j][i] = self.rows[i][j].clone();
            }
        }
        out
    }

    pub fn trace(&self) -> Rat {
        (0..self.nrows().min(self.ncols()))
            .map(|i| self.rows[i][i].clone())
            .sum()
    }

    /// In-place reduced row echelon form; returns pivot column indices.
    pub fn rref(&mut self) -> Vec<usize> {
        let (nr, nc) = (self.nrows(), self.ncols());
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..nc {
            if r == nr {
                break;
            }
            let Some(pr) = (r..nr).find(|&i| !self.rows[i][c].is_zero()) else {
                continue;
            };
            self.rows.swap(r, pr);
            let inv = self.rows[r][c].clone();
            for x in &mut self.rows[r] {
                *x = &*x / &inv;
            }
            for i in 0..nr {
                if i != r && !self.rows[i][c].is_zero() {
                    let f = self.rows[i][c].clone();
                    for j in 0..nc {
                        let sub = &self.rows[r][j] * &f;
                        self.rows[i][j] -= sub;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the right kernel {x : Ax = 0}.
    pub fn kernel(&self) -> Vec<Vec<Rat>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let nc = self.ncols();
        let free: Vec<usize> = (0..nc).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::new();
        for &f in &free {
            let mut v = vec![Rat::zero(); nc];
            v[f] = Rat::one();
            for (pi, &pc) in pivots.iter().enumerate() {
                v[pc] = -m.rows[pi][f].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Solve A x = b; None if inconsistent. Returns one solution.
    pub fn solve(&self, b: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(self.nrows(), b.len());
        let mut aug = Mat::from_rows(
            self.rows
                .iter()
                .zip(b)
                .map(|(r, x)| {
                    let mut row = r.clone();
                    row.push(x.clone());
                    row
                })
                .collect(),
        );
        let pivots = aug.rref();
        let nc = self.ncols();
        if pivots.contains(&nc) {
            return None; // pivot in the constant column
        }
        let mut x = vec![Rat::zero(); nc];
        for (pi, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.rows[pi][nc].clone();
        }
        Some(x)
    }

    /// Characteristic polynomial (monic), coefficients ascending:
    /// det(xI - A) = c[0] + c[1] x + ... + x^n. Faddeev-LeVerrier.
    pub fn charpoly(&self) -> Vec<Rat> {
        let n = self.nrows();
        assert_eq!(n, self.ncols());
        let mut coeffs = vec![Rat::zero(); n + 1];
        coeffs[n] = Rat::one();
        let mut m = Mat::identity(n);
        for k in 1..=n {
            m = self.mul(&m);
            let c = -m.trace() / Rat::from_integer(BigInt::from(k as i64));
            coeffs[n - k] = c.clone();
            for i in 0..n {
                m.rows[i][i] += &c;
            }
        }
        coeffs
    }
}

/// Integer (ascending-coefficient, monic after scaling) rational-root
/// extraction: returns the integer roots with multiplicity and the deflated
/// cofactor. Assumes the polynomial is monic with integer coefficients,
/// which holds for charpolys of integral Hecke actions.
pub fn integer_roots(poly: &[Rat]) -> (Vec<(BigInt, usize)>, Vec<Rat>) {
    let mut p: Vec<Rat> = poly.to_vec();
    let mut roots: Vec<(BigInt, usize)> = Vec::new();
    loop {
        // strip trailing zero degrees handled by caller; here find a root
        let deg = p.len() - 1;
        if deg == 0 {
            break;
        }
        let candidates = root_candidates(&p);
        let mut found = None;
        for r in candidates {
            if eval_poly(&p, &Rat::from_integer(r.clone())).is_zero() {
                found = Some(r);
                break;
            }
        }
        let Some(r) = found else { break };
        p = deflate(&p, &Rat::from_integer(r.clone()));
        if let Some(entry) = roots.iter_mut().find(|(x, _)| *x == r) {
            entry.1 += 1;
        } else {
            roots.push((r, 1));
        }
    }
    (roots, p)
}

fn root_candidates(p: &[Rat]) -> Vec<BigInt> {
    let c0 = &p[0];
    if c0.is_zero() {
        return vec![BigInt::zero()];
    }
    // integer roots divide the constant term (monic integer polynomial)
    let c = c0.numer().abs();
    let mut cands = vec![];
    let mut d = BigInt::one();
    while &d * &d <= c {
        if (&c % &d).is_zero() {
            let e = &c / &d;
            for b in [d.clone(), e] {
                cands.push(b.clone());
                cands.push(-b);
            }
        }
        d += 1;
    }
    cands.sort();
    cands.dedup();
    cands
}

fn eval_poly(p: &[Rat], x: &Rat) -> Rat {
    let mut acc = Rat::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn deflate(p: &[Rat], r: &Rat) -> Vec<Rat> {
    // synthetic division by (x - r)
    let n = p.len() - 1;
    let mut out = vec![Rat::zero(); n];
    let mut carry = Rat::zero();
    for k in (0..n).rev() {
        carry = &p[k + 1] + r * &carry;
        out[k] = carry.clone();
    }
    out
}

/// Column-style Hermite reduction with transform: finds U unimodular with
/// A U = [H | 0] and returns the columns of U spanning the integer kernel
/// {x in Z^n : A x = 0}.
pub fn integer_kernel(a: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let nr = a.len();
    let nc = if nr == 0 { 0 } else { a[0].len() };
    // work on columns: cols[j] = (a-column j, u-column j)
    let mut acols: Vec<Vec<BigInt>> = (0..nc).map(|j| (0..nr).map(|i| a[i][j].clone()).collect()).collect();
    let mut ucols: Vec<Vec<BigInt>> = (0..nc)
        .map(|j| {
            (0..nc)
                .map(|i| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect();
    let mut pivot_row = 0;
    let mut pivot_col = 0;
    while pivot_row < nr && pivot_col < nc {
        // gcd-eliminate across columns pivot_col..nc in row pivot_row
        loop {
            let mut best: Option<usize> = None;
            for j in pivot_col..nc {
                if !acols[j][pivot_row].is_zero() {
                    best = match best {
                        None => Some(j),
                        Some(b) => {
                            if acols[j][pivot_row].abs() < acols[b][pivot_row].abs() {
                                Some(j)
                            } else {
                                Some(b)
                            }
                        }
                    };
                }
            }
            let Some(b) = best else { break };
            acols.swap(pivot_col, b);
            ucols.swap(pivot_col, b);
            let mut done = true;
            for j in (pivot_col + 1)..nc {
                if acols[j][pivot_row].is_zero() {
                    continue;
                }
                let q = acols[j][pivot_row].div_floor(&acols[pivot_col][pivot_row]);
                if !q.is_zero() {
                    for i in 0..nr {
                        let sub = &q * &acols[pivot_col][i];
                        acols[j][i] -= sub;
                    }
                    for i in 0..nc {
                        let sub = &q * &ucols[pivot_col][i];
                        ucols[j][i] -= sub;
                    }
                }
                if !acols[j][pivot_row].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if !acols[pivot_col][pivot_row].is_zero() {
            pivot_col += 1;
        }
        pivot_row += 1;
    }
    // columns pivot_col..nc of U are the kernel (their A-columns are zero)
    (pivot_col..nc)
        .filter(|&j| acols[j].iter().all(|x| x.is_zero()))
        .map(|j| ucols[j].clone())
        .collect()
}

/// Primitive integer vector spanning the same line as the rational vector.
pub fn primitive_integer(v: &[Rat]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * &lcm / x.denom()).collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}
