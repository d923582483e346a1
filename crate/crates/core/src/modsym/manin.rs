//! Manin-symbol presentation of the relative homology H_1(X_0(p), cusps; Q).
//!
//! Manin symbols are indexed by P^1(F_p): index x in 0..p is the class
//! (x : 1), index p is (1 : 0). The symbol (c:d) is the class of the
//! directed Farey edge g{0, oo} for any lift g in SL_2(Z) with bottom row
//! congruent to (c, d). The 2-term and 3-term relations cut out the
//! relative homology, and the boundary map lands in the two cusp classes
//! {0, oo} of level p.

use super::linalg::{integer_kernel, Mat};
use crate::arith::rational::{rat_i, Rat};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A point of P^1(Q): `infinity` or the reduced fraction num/den.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cusp {
    Infinity,
    Finite(BigInt, BigInt), // num, den > 0, coprime
}

impl Cusp {
    pub fn from_rat(x: &Rat) -> Self {
        Cusp::Finite(x.numer().clone(), x.denom().clone())
    }

    pub fn zero() -> Self {
        Cusp::Finite(BigInt::zero(), BigInt::one())
    }

    pub fn from_pair(num: BigInt, den: BigInt) -> Self {
        if den.is_zero() {
            return Cusp::Infinity;
        }
        let g = num.gcd(&den);
        let (mut n, mut d) = (num / &g, den / &g);
        if d.is_negative() {
            n = -n;
            d = -d;
        }
        Cusp::Finite(n, d)
    }

    /// Moebius action of an integer matrix with positive determinant.
    pub fn apply(&self, m: &[BigInt; 4]) -> Cusp {
        match self {
            Cusp::Infinity => Cusp::from_pair(m[0].clone(), m[2].clone()),
            Cusp::Finite(n, d) => Cusp::from_pair(&m[0] * n + &m[1] * d, &m[2] * n + &m[3] * d),
        }
    }
}

/// Index of the cusp class of a point of P^1(Q) on X_0(p): 0 for the class
/// of oo (denominator divisible by p), 1 for the class of 0.
fn cusp_class(c: &Cusp, p: u64) -> usize {
    match c {
        Cusp::Infinity => 0,
        Cusp::Finite(_, d) => {
            if (d % BigInt::from(p)).is_zero() {
                0
            } else {
                1
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct ModSymSpace {
    pub p: u64,
    /// dimension of the relative homology (2g + 1 for prime p)
    pub dim: usize,
    /// genus of X_0(p)
    pub genus: usize,
    /// projection Q^{p+1} -> Q^dim on Manin-symbol generators
    proj: Mat,
    /// section: basis vector j of the quotient -> generator index
    section: Vec<usize>,
    /// boundary matrix on quotient coordinates: dim -> 2 cusp classes
    boundary: Mat,
    /// basis (rows) of the cuspidal integral lattice in quotient coordinates
    pub cuspidal_lattice: Vec<Vec<Rat>>,
}

/// Normalize (c, d) to an index in 0..=p of P^1(F_p).
pub fn p1_index(c: i64, d: i64, p: u64) -> usize {
    let pi = p as i64;
    let c = c.rem_euclid(pi);
    let d = d.rem_euclid(pi);
    assert!(c != 0 || d != 0, "invalid P1 point");
    if d == 0 {
        return p as usize;
    }
    // (c : d) = (c d^{-1} : 1)
    let dinv = mod_inverse(d, pi);
    ((c * dinv).rem_euclid(pi)) as usize
}

fn mod_inverse(a: i64, m: i64) -> i64 {
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (m, a.rem_euclid(m));
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    assert_eq!(r, 1, "not invertible");
    t.rem_euclid(m)
}

/// Right action of a matrix on a P^1 index: (c:d) . m = bottom row of g m.
fn p1_act(idx: usize, m: [i64; 4], p: u64) -> usize {
    let (c, d) = index_to_cd(idx, p);
    p1_index(c * m[0] + d * m[2], c * m[1] + d * m[3], p)
}

fn index_to_cd(idx: usize, p: u64) -> (i64, i64) {
    if idx == p as usize {
        (1, 0)
    } else {
        (idx as i64, 1)
    }
}

/// A lift of the symbol with this index to SL_2(Z), bottom row = (c, d).
pub fn symbol_lift(idx: usize, p: u64) -> [BigInt; 4] {
    let (c, d) = index_to_cd(idx, p);
    if d == 0 {
        // (1:0): S
        [
            BigInt::zero(),
            BigInt::from(-1),
            BigInt::one(),
            BigInt::zero(),
        ]
    } else {
        // (c:1): (1 0; c 1)
        [BigInt::one(), BigInt::zero(), BigInt::from(c), BigInt::one()]
    }
}

pub fn genus_x0(p: u64) -> usize {
    // prime level
    let mu = p + 1;
    let nu2 = if p == 2 {
        1
    } else if p % 4 == 1 {
        2
    } else {
        0
    };
    let nu3 = if p == 3 {
        1
    } else if p % 3 == 1 {
        2
    } else {
        0
    };
    let twelve_g = 12 + mu as i64 - 3 * nu2 as i64 - 4 * nu3 as i64 - 6 * 2;
    assert!(twelve_g % 12 == 0);
    (twelve_g / 12) as usize
}

impl ModSymSpace {
    pub fn build(p: u64) -> ModSymSpace {
        assert!(crate::arith::is_prime(p), "level must be prime");
        let n = p as usize + 1;
        let s = [0i64, -1, 1, 0];
        let st = [0i64, -1, 1, 1];
        let st2 = [-1i64, -1, 1, 0];
        let mut rel_rows: Vec<Vec<Rat>> = Vec::new();
        for x in 0..n {
            // 2-term: x + xS
            let mut row = vec![Rat::zero(); n];
            row[x] += rat_i(1);
            row[p1_act(x, s, p)] += rat_i(1);
            rel_rows.push(row);
            // 3-term: x + x(ST) + x(ST)^2
            let mut row = vec![Rat::zero(); n];
            row[x] += rat_i(1);
            row[p1_act(x, st, p)] += rat_i(1);
            row[p1_act(x, st2, p)] += rat_i(1);
            rel_rows.push(row);
        }
        let mut rel = Mat::from_rows(rel_rows);
        let pivots = rel.rref();
        let rank = pivots.len();
        let dim = n - rank;
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        // projection: e_j -> coordinates in the free-generator basis
        let mut proj = Mat::zero(dim, n);
        for (bi, &j) in free.iter().enumerate() {
            proj.rows[bi][j] = Rat::one();
        }
        for (pi, &pc) in pivots.iter().enumerate() {
            // e_pc = -sum_{j free} rel[pi][j] e_j in the quotient
            for (bi, &j) in free.iter().enumerate() {
                proj.rows[bi][pc] = -rel.rows[pi][j].clone();
            }
        }
        // boundary on generators, then on the quotient basis
        let mut bnd_gen = Mat::zero(2, n);
        for idx in 0..n {
            let g = symbol_lift(idx, p);
            let target = Cusp::from_pair(g[0].clone(), g[2].clone()); // g(oo)
            let source = Cusp::from_pair(g[1].clone(), g[3].clone()); // g(0)
            bnd_gen.rows[cusp_class(&target, p)][idx] += rat_i(1);
            bnd_gen.rows[cusp_class(&source, p)][idx] -= rat_i(1);
        }
        // boundary of quotient basis vector bi = boundary of generator free[bi]
        let mut boundary = Mat::zero(2, dim);
        for (bi, &j) in free.iter().enumerate() {
            for r in 0..2 {
                boundary.rows[r][bi] = bnd_gen.rows[r][j].clone();
            }
        }
        let genus = genus_x0(p);
        assert_eq!(dim, 2 * genus + 1, "relative dimension 2g + 1 at p = {}", p);

        // integral structure: lattice spanned by the images of the generators
        let gen_images: Vec<Vec<Rat>> = (0..n)
            .map(|j| (0..dim).map(|bi| proj.rows[bi][j].clone()).collect())
            .collect();
        let cuspidal_lattice = cuspidal_lattice_basis(&gen_images, &boundary, dim, 2 * genus);

        ModSymSpace {
            p,
            dim,
            genus,
            proj,
            section: free,
            boundary,
            cuspidal_lattice,
        }
    }

    /// Class of a single Manin symbol in quotient coordinates.
    pub fn symbol_class(&self, idx: usize) -> Vec<Rat> {
        (0..self.dim)
            .map(|bi| self.proj.rows[bi][idx].clone())
            .collect()
    }

    /// Lift a quotient vector to a chain on the p+1 Manin generators using
    /// the canonical section (free generators).
    pub fn lift_chain(&self, v: &[Rat]) -> Vec<Rat> {
        let n = self.p as usize + 1;
        let mut chain = vec![Rat::zero(); n];
        for (bi, &j) in self.section.iter().enumerate() {
            chain[j] = v[bi].clone();
        }
        chain
    }

    /// The class of the modular symbol {alpha, beta} via Manin's trick.
    pub fn path_class(&self, alpha: &Cusp, beta: &Cusp) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); self.dim];
        self.add_path(&mut v, alpha, beta, &Rat::one());
        v
    }

    /// v += c * {alpha, beta}
    pub fn add_path(&self, v: &mut [Rat], alpha: &Cusp, beta: &Cusp, c: &Rat) {
        self.add_inf_path(v, beta, c);
        self.add_inf_path(v, alpha, &-c.clone());
    }

    /// v += c * {oo, x}
    fn add_inf_path(&self, v: &mut [Rat], x: &Cusp, c: &Rat) {
        let Cusp::Finite(num, den) = x else {
            return; // {oo, oo} = 0
        };
        let x = Rat::new(num.clone(), den.clone());
        let convergents = crate::arith::continued_fraction(&x);
        // {oo, p0/q0}: symbol of (1 a0; 0 1) reversed
        let idx0 = p1_index(0, 1, self.p);
        for (bi, coeff) in self.symbol_class(idx0).into_iter().enumerate() {
            v[bi] -= coeff * c;
        }
        // consecutive convergents: {p_{k-1}/q_{k-1}, p_k/q_k} is the symbol of
        // g = (p_k, s p_{k-1}; q_k, s q_{k-1}) with s = (-1)^{k-1}, so only the
        // bottom row (q_k, s q_{k-1}) mod p is needed.
        for (i, w) in convergents.windows(2).enumerate() {
            let qk1 = w[0].denom();
            let qk = w[1].denom();
            let sign = if i % 2 == 0 { 1 } else { -1 }; // (-1)^{k-1}, k = i + 1
            let cc = i64::try_from(qk % BigInt::from(self.p)).unwrap();
            let dd = i64::try_from((BigInt::from(sign) * qk1) % BigInt::from(self.p)).unwrap();
            let idx = p1_index(cc, dd, self.p);
            for (bi, coeff) in self.symbol_class(idx).into_iter().enumerate() {
                v[bi] += coeff * c;
            }
        }
    }

    pub fn boundary_of(&self, v: &[Rat]) -> Vec<Rat> {
        self.boundary.mul_vec(v)
    }

    pub fn is_cuspidal(&self, v: &[Rat]) -> bool {
        self.boundary_of(v).iter().all(|x| x.is_zero())
    }

    /// Matrix of the Hecke operator T_n on the quotient basis.
    pub fn hecke_matrix(&self, n: u64) -> Mat {
        let mut cols: Vec<Vec<Rat>> = Vec::with_capacity(self.dim);
        for bi in 0..self.dim {
            let idx = self.section[bi];
            let g = symbol_lift(idx, self.p);
            let alpha = Cusp::from_pair(g[1].clone(), g[3].clone()); // g(0)
            let beta = Cusp::from_pair(g[0].clone(), g[2].clone()); // g(oo)
            let mut acc = vec![Rat::zero(); self.dim];
            for d in crate::arith::divisors(n) {
                if d % self.p == 0 {
                    continue;
                }
                let dp = n / d;
                for b in 0..dp {
                    let m = [
                        BigInt::from(d),
                        BigInt::from(b),
                        BigInt::zero(),
                        BigInt::from(dp),
                    ];
                    self.add_path(&mut acc, &alpha.apply(&m), &beta.apply(&m), &Rat::one());
                }
            }
            cols.push(acc);
        }
        // columns -> matrix
        let mut m = Mat::zero(self.dim, self.dim);
        for (j, col) in cols.iter().enumerate() {
            for i in 0..self.dim {
                m.rows[i][j] = col[i].clone();
            }
        }
        m
    }

    /// Star involution {alpha, beta} -> {-beta, -alpha} on the quotient basis.
    pub fn star_matrix(&self) -> Mat {
        let mut m = Mat::zero(self.dim, self.dim);
        for bi in 0..self.dim {
            let idx = self.section[bi];
            let g = symbol_lift(idx, self.p);
            let alpha = Cusp::from_pair(g[1].clone(), g[3].clone());
            let beta = Cusp::from_pair(g[0].clone(), g[2].clone());
            let neg = |c: &Cusp| match c {
                Cusp::Infinity => Cusp::Infinity,
                Cusp::Finite(n, d) => Cusp::from_pair(-n.clone(), d.clone()),
            };
            let col = self.path_class(&neg(&beta), &neg(&alpha));
            for i in 0..self.dim {
                m.rows[i][bi] = col[i].clone();
            }
        }
        m
    }
}

fn cuspidal_lattice_basis(
    gen_images: &[Vec<Rat>],
    boundary: &Mat,
    dim: usize,
    expected_rank: usize,
) -> Vec<Vec<Rat>> {
    // lattice L = Z-span of generator images inside Q^dim; we need a Z-basis
    // of {x in L : boundary(x) = 0}.
    // Scale to integers: D * images are integer vectors.
    let mut denom_lcm = BigInt::one();
    for v in gen_images {
        for x in v {
            denom_lcm = denom_lcm.lcm(x.denom());
        }
    }
    let int_gens: Vec<Vec<BigInt>> = gen_images
        .iter()
        .map(|v| v.iter().map(|x| x.numer() * &denom_lcm / x.denom()).collect())
        .collect();
    // Hermite basis of the span of int_gens (rows)
    let hb = hermite_row_basis(&int_gens, dim);
    assert_eq!(hb.len(), dim, "generator images must span");
    // boundary composed with the lattice basis, cleared to integers
    let mut bl = Mat::zero(boundary.nrows(), dim);
    for j in 0..dim {
        let col: Vec<Rat> = hb[j]
            .iter()
            .map(|x| Rat::new(x.clone(), denom_lcm.clone()))
            .collect();
        let img = boundary.mul_vec(&col);
        for i in 0..boundary.nrows() {
            bl.rows[i][j] = img[i].clone();
        }
    }
    let mut bl_lcm = BigInt::one();
    for row in &bl.rows {
        for x in row {
            bl_lcm = bl_lcm.lcm(x.denom());
        }
    }
    let bl_int: Vec<Vec<BigInt>> = bl
        .rows
        .iter()
        .map(|r| r.iter().map(|x| x.numer() * &bl_lcm / x.denom()).collect())
        .collect();
    let kern = integer_kernel(&bl_int);
    assert_eq!(kern.len(), expected_rank, "cuspidal rank");
    // back to quotient coordinates: basis vectors sum_j kern[j] * hb-row j / D
    kern.into_iter()
        .map(|co| {
            let mut v = vec![Rat::zero(); dim];
            for (j, c) in co.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for i in 0..dim {
                    v[i] += Rat::new(c * &hb[j][i], denom_lcm.clone());
                }
            }
            v
        })
        .collect()
}

/// Row Hermite form basis of the Z-span of the given integer rows.
fn hermite_row_basis(rows: &[Vec<BigInt>], ncols: usize) -> Vec<Vec<BigInt>> {
    let mut work: Vec<Vec<BigInt>> = rows.to_vec();
    let mut basis: Vec<Vec<BigInt>> = Vec::new();
    for col in 0..ncols {
        loop {
            // find row with minimal nonzero |entry| in this column
            let mut best: Option<usize> = None;
            for (i, r) in work.iter().enumerate() {
                if r[col].is_zero() {
                    continue;
                }
                best = match best {
                    None => Some(i),
                    Some(b) => {
                        if r[col].abs() < work[b][col].abs() {
                            Some(i)
                        } else {
                            Some(b)
                        }
                    }
                };
            }
            let Some(b) = best else { break };
            let pivot = work.swap_remove(b);
            let mut all_zero = true;
            for r in work.iter_mut() {
                if r[col].is_zero() {
                    continue;
                }
                let q = r[col].div_floor(&pivot[col]);
                if !q.is_zero() {
                    for k in 0..ncols {
                        let sub = &q * &pivot[k];
                        r[k] -= sub;
                    }
                }
                if !r[col].is_zero() {
                    all_zero = false;
                }
            }
            work.push(pivot);
            if all_zero {
                // move the pivot row to the basis
                let pivot = work.pop().unwrap();
                basis.push(pivot);
                break;
            }
        }
    }
    // reduce rows above pivots for a cleaner basis (optional), keep as is
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p1_indexing() {
        let p = 11;
        assert_eq!(p1_index(0, 1, p), 0);
        assert_eq!(p1_index(1, 0, p), 11);
        assert_eq!(p1_index(3, 1, p), 3);
        // (2 : 3) = (2 * 3^{-1} : 1) = (2 * 4 : 1) = (8 : 1)
        assert_eq!(p1_index(2, 3, p), 8);
        // scaling invariance
        assert_eq!(p1_index(4, 6, p), 8);
    }

    #[test]
    fn dims_match_genus() {
        for (p, g) in [(2u64, 0usize), (3, 0), (5, 0), (7, 0), (11, 1), (13, 0), (17, 1), (19, 1), (37, 2)] {
            let s = ModSymSpace::build(p);
            assert_eq!(s.genus, g, "genus at p = {}", p);
            assert_eq!(s.dim, 2 * g + 1, "relative dim at p = {}", p);
            assert_eq!(s.cuspidal_lattice.len(), 2 * g, "cuspidal dim at p = {}", p);
        }
    }

    #[test]
    fn manin_symbol_count() {
        assert_eq!(ModSymSpace::build(11).p as usize + 1, 12);
    }

    #[test]
    fn path_additivity_and_degenerates() {
        let s = ModSymSpace::build(11);
        let zero = Cusp::zero();
        let inf = Cusp::Infinity;
        let third = Cusp::from_pair(BigInt::from(1), BigInt::from(3));
        // {0,0} = 0
        assert!(s.path_class(&zero, &zero).iter().all(|x| x.is_zero()));
        // {0,oo} + {oo,0} = 0
        let a = s.path_class(&zero, &inf);
        let b = s.path_class(&inf, &zero);
        assert!(a.iter().zip(&b).all(|(x, y)| (x + y).is_zero()));
        // concatenation {0, 1/3} + {1/3, oo} = {0, oo}
        let mut v = vec![Rat::zero(); s.dim];
        s.add_path(&mut v, &zero, &third, &Rat::one());
        s.add_path(&mut v, &third, &inf, &Rat::one());
        assert_eq!(v, s.path_class(&zero, &inf));
        // {0, oo} is nonzero in relative homology
        assert!(!a.iter().all(|x| x.is_zero()));
    }

    #[test]
    fn boundary_of_winding() {
        let s = ModSymSpace::build(11);
        let w = s.path_class(&Cusp::zero(), &Cusp::Infinity);
        let b = s.boundary_of(&w);
        // boundary [oo] - [0]
        assert_eq!(b, vec![rat_i(1), rat_i(-1)]);
        assert!(!s.is_cuspidal(&w));
    }

    #[test]
    fn hecke_t1_is_identity() {
        let s = ModSymSpace::build(11);
        let t1 = s.hecke_matrix(1);
        assert_eq!(t1, Mat::identity(s.dim));
    }

    #[test]
    fn hecke_commute_and_compose() {
        let s = ModSymSpace::build(11);
        let t2 = s.hecke_matrix(2);
        let t3 = s.hecke_matrix(3);
        let t6 = s.hecke_matrix(6);
        assert_eq!(t2.mul(&t3), t3.mul(&t2));
        assert_eq!(t2.mul(&t3), t6);
        for (m, n) in [(2u64, 5u64), (3, 7), (5, 7)] {
            let a = s.hecke_matrix(m);
            let b = s.hecke_matrix(n);
            assert_eq!(a.mul(&b), b.mul(&a), "T_{} T_{}", m, n);
        }
    }

    #[test]
    fn star_involution_properties() {
        for p in [11u64, 37] {
            let s = ModSymSpace::build(p);
            let star = s.star_matrix();
            assert_eq!(star.mul(&star), Mat::identity(s.dim), "star^2 at {}", p);
            // star({0,oo}) = -{0,oo}
            let w = s.path_class(&Cusp::zero(), &Cusp::Infinity);
            let sw = star.mul_vec(&w);
            assert!(sw.iter().zip(&w).all(|(x, y)| (x + y).is_zero()));
            // star commutes with T_n, (n, p) = 1
            for n in [2u64, 3] {
                let t = s.hecke_matrix(n);
                assert_eq!(star.mul(&t), t.mul(&star), "star T_{} at {}", n, p);
            }
        }
    }

    #[test]
    fn hecke_preserves_cuspidal() {
        let s = ModSymSpace::build(11);
        let t2 = s.hecke_matrix(2);
        for v in &s.cuspidal_lattice {
            assert!(s.is_cuspidal(&t2.mul_vec(v)));
        }
    }
}
