//! Exact dense linear algebra over arbitrary-precision integers and
//! rationals.
//!
//! Rank is computed by fraction-free (Bareiss) elimination over `BigInt`,
//! so every reported rank is exact.  A rank can optionally be cross-checked
//! modulo a prime; the modular result is only ever advisory, the exact
//! elimination is authoritative.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Dense matrix over `BigInt`, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMat { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMat::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = BigInt::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        IntMat { rows, cols, data }
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        debug_assert!(rows.iter().all(|row| row.len() == c));
        IntMat::from_fn(r, c, |i, j| BigInt::from(rows[i][j]))
    }

    /// Builds a matrix whose columns are the given coordinate vectors.
    pub fn from_columns(dim: usize, cols: &[Vec<BigInt>]) -> Self {
        debug_assert!(cols.iter().all(|col| col.len() == dim));
        IntMat::from_fn(dim, cols.len(), |i, j| cols[j][i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut BigInt {
        &mut self.data[r * self.cols + c]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn mul(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.rows, "dimension mismatch in mul");
        let mut out = IntMat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if !b.is_zero() {
                        *out.at_mut(i, j) += a * b;
                    }
                }
            }
        }
        out
    }

    /// Exact rank by fraction-free Bareiss elimination with full pivoting.
    pub fn rank(&self) -> usize {
        let mut m = self.data.clone();
        let (rows, cols) = (self.rows, self.cols);
        let idx = |r: usize, c: usize| r * cols + c;
        let mut prev = BigInt::one();
        let mut rank = 0;
        let steps = rows.min(cols);
        // Column permutation is tracked implicitly by swapping in place.
        for k in 0..steps {
            let mut pivot = None;
            'search: for r in k..rows {
                for c in k..cols {
                    if !m[idx(r, c)].is_zero() {
                        pivot = Some((r, c));
                        break 'search;
                    }
                }
            }
            let (pr, pc) = match pivot {
                Some(p) => p,
                None => break,
            };
            if pr != k {
                for c in 0..cols {
                    m.swap(idx(k, c), idx(pr, c));
                }
            }
            if pc != k {
                for r in 0..rows {
                    m.swap(idx(r, k), idx(r, pc));
                }
            }
            for i in (k + 1)..rows {
                if m[idx(i, k)].is_zero() {
                    // Row already eliminated in column k; still must rescale.
                    for j in (k + 1)..cols {
                        if !m[idx(i, j)].is_zero() {
                            let t = &m[idx(k, k)] * &m[idx(i, j)];
                            m[idx(i, j)] = &t / &prev;
                        }
                    }
                    continue;
                }
                for j in (k + 1)..cols {
                    let t = &m[idx(k, k)] * &m[idx(i, j)] - &m[idx(i, k)] * &m[idx(k, j)];
                    m[idx(i, j)] = &t / &prev;
                }
                m[idx(i, k)] = BigInt::zero();
            }
            prev = m[idx(k, k)].clone();
            rank += 1;
        }
        rank
    }

    /// Rank over the prime field `F_p` by ordinary Gaussian elimination.
    ///
    /// Always a lower bound for the exact rank; used as a cross-check only.
    pub fn rank_mod(&self, p: u64) -> usize {
        assert!(p > 1);
        let (rows, cols) = (self.rows, self.cols);
        let mut m: Vec<u64> = self
            .data
            .iter()
            .map(|x| {
                let r = x.mod_floor(&BigInt::from(p));
                // mod_floor of a BigInt by a positive modulus is in [0, p).
                let (_, digits) = r.to_u64_digits();
                digits.first().copied().unwrap_or(0)
            })
            .collect();
        let idx = |r: usize, c: usize| r * cols + c;
        let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % p as u128) as u64;
        let mut rank = 0;
        let mut row = 0;
        for col in 0..cols {
            if row >= rows {
                break;
            }
            let pivot_row = (row..rows).find(|&r| m[idx(r, col)] != 0);
            let pr = match pivot_row {
                Some(r) => r,
                None => continue,
            };
            if pr != row {
                for c in 0..cols {
                    m.swap(idx(row, c), idx(pr, c));
                }
            }
            let inv = modinv(m[idx(row, col)], p);
            for r in (row + 1)..rows {
                let factor = mulmod(m[idx(r, col)], inv);
                if factor == 0 {
                    continue;
                }
                for c in col..cols {
                    let sub = mulmod(factor, m[idx(row, c)]);
                    m[idx(r, c)] = (m[idx(r, c)] + p - sub) % p;
                }
            }
            row += 1;
            rank += 1;
        }
        rank
    }

    /// Exact rank plus an optional modular cross-check.
    pub fn rank_checked(&self, prime: Option<u64>) -> RankOutcome {
        let rank = self.rank();
        let modular = prime.map(|p| ModularCheck { prime: p, rank: self.rank_mod(p) });
        RankOutcome { rank, modular }
    }
}

/// Result of [`IntMat::rank_checked`]: the exact rank is authoritative;
/// a disagreeing modular rank is surfaced for logging, never resolved
/// silently in favour of the modular value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankOutcome {
    pub rank: usize,
    pub modular: Option<ModularCheck>,
}

impl RankOutcome {
    pub fn agreed(&self) -> Option<bool> {
        self.modular.as_ref().map(|m| m.rank == self.rank)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModularCheck {
    pub prime: u64,
    pub rank: usize,
}

fn modinv(a: u64, p: u64) -> u64 {
    // Fermat; p is prime in all call sites.
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc: u64 = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % p as u128) as u64;
        }
        base = ((base as u128 * base as u128) % p as u128) as u64;
        exp >>= 1;
    }
    acc
}

impl fmt::Display for IntMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.at(r, c))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Dense matrix over `BigRational`, row major.  Used for the classical
/// defining representations, where bracket-generated root vectors pick up
/// small rational scalings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMat {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RatMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMat { rows, cols, data: vec![BigRational::zero(); rows * cols] }
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> BigRational,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        RatMat { rows, cols, data }
    }

    pub fn from_int(m: &IntMat) -> Self {
        RatMat::from_fn(m.rows(), m.cols(), |r, c| {
            BigRational::from_integer(m.at(r, c).clone())
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &BigRational {
        &self.data[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut BigRational {
        &mut self.data[r * self.cols + c]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn add(&self, other: &RatMat) -> RatMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        RatMat::from_fn(self.rows, self.cols, |r, c| self.at(r, c) + other.at(r, c))
    }

    pub fn sub(&self, other: &RatMat) -> RatMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        RatMat::from_fn(self.rows, self.cols, |r, c| self.at(r, c) - other.at(r, c))
    }

    pub fn scale(&self, s: &BigRational) -> RatMat {
        RatMat::from_fn(self.rows, self.cols, |r, c| self.at(r, c) * s)
    }

    pub fn mul(&self, other: &RatMat) -> RatMat {
        assert_eq!(self.cols, other.rows, "dimension mismatch in mul");
        let mut out = RatMat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if !b.is_zero() {
                        let t = a * b;
                        *out.at_mut(i, j) += t;
                    }
                }
            }
        }
        out
    }

    /// `[A, B] = AB - BA`.
    pub fn commutator(&self, other: &RatMat) -> RatMat {
        self.mul(other).sub(&other.mul(self))
    }

    /// Clears denominators row by row; rank is unchanged.
    pub fn clear_denominators(&self) -> IntMat {
        let mut out = IntMat::zero(self.rows, self.cols);
        for r in 0..self.rows {
            let mut l = BigInt::one();
            for c in 0..self.cols {
                let d = self.at(r, c).denom();
                if !d.is_one() {
                    l = l.lcm(d);
                }
            }
            for c in 0..self.cols {
                let x = self.at(r, c);
                *out.at_mut(r, c) = x.numer() * (&l / x.denom());
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        self.clear_denominators().rank()
    }

    /// Returns `Some(c)` with `self == c * other` if the matrices are
    /// proportional and `other` is nonzero.
    pub fn proportionality(&self, other: &RatMat) -> Option<BigRational> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut ratio: Option<BigRational> = None;
        for i in 0..self.data.len() {
            let (a, b) = (&self.data[i], &other.data[i]);
            match (a.is_zero(), b.is_zero()) {
                (true, true) => continue,
                (false, true) => return None,
                _ => {
                    let r = a / b;
                    match &ratio {
                        None => ratio = Some(r),
                        Some(prev) if *prev == r => {}
                        Some(_) => return None,
                    }
                }
            }
        }
        ratio
    }
}

/// Ranks of successive powers `M^1, M^2, ...` until the power vanishes.
///
/// Errors with the first non-vanishing power if `M` is not nilpotent
/// (no power up to `M.rows()` vanishes).
pub fn nilpotent_rank_sequence(m: &IntMat) -> Result<Vec<usize>, (usize, usize)> {
    assert_eq!(m.rows(), m.cols(), "rank sequence needs a square matrix");
    let n = m.rows();
    let mut seq = Vec::new();
    let mut power = m.clone();
    let mut k = 1;
    loop {
        let r = power.rank();
        if r == 0 {
            return Ok(seq);
        }
        seq.push(r);
        if k >= n {
            return Err((k, r));
        }
        power = power.mul(m);
        k += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rational_gauss_rank(rows: &[Vec<i64>]) -> usize {
        // Independent oracle: plain Gaussian elimination over BigRational.
        let r = rows.len();
        if r == 0 {
            return 0;
        }
        let c = rows[0].len();
        let mut m: Vec<Vec<BigRational>> = rows
            .iter()
            .map(|row| row.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
            .collect();
        let mut rank = 0;
        let mut row = 0;
        for col in 0..c {
            if row >= r {
                break;
            }
            let piv = (row..r).find(|&i| !m[i][col].is_zero());
            let piv = match piv {
                Some(p) => p,
                None => continue,
            };
            m.swap(row, piv);
            for i in (row + 1)..r {
                if m[i][col].is_zero() {
                    continue;
                }
                let f = &m[i][col] / &m[row][col];
                for j in col..c {
                    let t = &m[row][j] * &f;
                    m[i][j] = &m[i][j] - &t;
                }
            }
            row += 1;
            rank += 1;
        }
        rank
    }

    #[test]
    fn identity_rank() {
        assert_eq!(IntMat::identity(7).rank(), 7);
        assert_eq!(IntMat::zero(4, 9).rank(), 0);
    }

    #[test]
    fn singular_example() {
        let m = IntMat::from_i64_rows(&[vec![1, 2, 3], vec![2, 4, 6], vec![1, 1, 1]]);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.rank_mod(1_000_000_007), 2);
    }

    #[test]
    fn modular_agrees_generically() {
        let m = IntMat::from_i64_rows(&[
            vec![3, 1, 4, 1],
            vec![5, 9, 2, 6],
            vec![5, 3, 5, 8],
            vec![9, 7, 9, 3],
        ]);
        let out = m.rank_checked(Some(1_000_000_007));
        assert_eq!(out.rank, 4);
        assert_eq!(out.agreed(), Some(true));
    }

    #[test]
    fn rank_sequence_of_jordan_block() {
        // Single nilpotent Jordan block of size 5: ranks 4, 3, 2, 1.
        let m = IntMat::from_fn(5, 5, |r, c| {
            if c == r + 1 { BigInt::one() } else { BigInt::zero() }
        });
        assert_eq!(nilpotent_rank_sequence(&m).unwrap(), vec![4, 3, 2, 1]);
    }

    #[test]
    fn non_nilpotent_rejected() {
        let m = IntMat::identity(3);
        assert!(nilpotent_rank_sequence(&m).is_err());
    }

    #[test]
    fn clear_denominators_preserves_rank() {
        let m = RatMat::from_fn(3, 3, |r, c| {
            BigRational::new(BigInt::from((r + c) as i64), BigInt::from((1 + r * c) as i64 + 1))
        });
        assert_eq!(m.rank(), m.clear_denominators().rank());
    }

    proptest! {
        #[test]
        fn bareiss_matches_gauss(rows in proptest::collection::vec(
            proptest::collection::vec(-20i64..=20, 5), 1..=6)
        ) {
            let m = IntMat::from_i64_rows(&rows);
            prop_assert_eq!(m.rank(), rational_gauss_rank(&rows));
        }

        #[test]
        fn rank_bounded_and_transpose_invariant(rows in proptest::collection::vec(
            proptest::collection::vec(-9i64..=9, 4), 1..=5)
        ) {
            let m = IntMat::from_i64_rows(&rows);
            let t = IntMat::from_fn(m.cols(), m.rows(), |r, c| m.at(c, r).clone());
            let rk = m.rank();
            prop_assert!(rk <= m.rows().min(m.cols()));
            prop_assert_eq!(rk, t.rank());
        }
    }
}
