//! Finite root systems of types A-G, built from Cartan matrices.
//!
//! Roots are integer coordinate vectors over the simple roots; there is no
//! Euclidean realization.  All pairings go through the Cartan matrix, so
//! everything is exact.  The root list is kept in a canonical order
//! (height, then lexicographic on coordinates) that is stable across runs
//! and is the basis for every downstream determinism guarantee.
//!
//! Numbering follows Bourbaki with one exception: in D4 the trivalent
//! node is numbered 3 (adjacent to 1, 2, 4).

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Simple Lie type families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Result<Family> {
        Ok(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            other => return Err(Error::BadInput(format!("unknown family letter {other:?}"))),
        })
    }

    /// Order of the Weyl group, from the classical product formulas.
    pub fn weyl_order(self, rank: usize) -> u64 {
        fn fact(n: u64) -> u64 {
            (1..=n).product::<u64>().max(1)
        }
        let n = rank as u64;
        match self {
            Family::A => fact(n + 1),
            Family::B | Family::C => (1u64 << n) * fact(n),
            Family::D => (1u64 << (n.saturating_sub(1))) * fact(n),
            Family::E => match rank {
                6 => 51_840,
                7 => 2_903_040,
                8 => 696_729_600,
                _ => 0,
            },
            Family::F => 1152,
            Family::G => 12,
        }
    }
}

/// Declared type plus its Cartan matrix, `cartan[i][j] = <alpha_j, alpha_i^v>`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootSystemSpec {
    pub family: Family,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
}

impl RootSystemSpec {
    /// The canonical Cartan matrix for a family and rank (Bourbaki
    /// numbering; D4 uses node 3 as the trivalent center).
    pub fn standard(family: Family, rank: usize) -> Result<Self> {
        let cartan = standard_cartan(family, rank)?;
        Ok(RootSystemSpec { family, rank, cartan })
    }

    /// Validates a user-supplied Cartan matrix against the canonical one.
    pub fn from_cartan(family: Family, rank: usize, cartan: Vec<Vec<i64>>) -> Result<Self> {
        let spec = RootSystemSpec::standard(family, rank)?;
        if cartan.len() != rank || cartan.iter().any(|row| row.len() != rank) {
            return Err(Error::InvalidCartan(format!(
                "expected a {rank}x{rank} matrix for {}{rank}",
                family.letter()
            )));
        }
        for i in 0..rank {
            if cartan[i][i] != 2 {
                return Err(Error::InvalidCartan(format!("diagonal entry ({i},{i}) is not 2")));
            }
            for j in 0..rank {
                if i != j && cartan[i][j] > 0 {
                    return Err(Error::InvalidCartan(format!(
                        "off-diagonal entry ({i},{j}) is positive"
                    )));
                }
                if i != j && (cartan[i][j] == 0) != (cartan[j][i] == 0) {
                    return Err(Error::InvalidCartan(format!(
                        "zero pattern not symmetric at ({i},{j})"
                    )));
                }
            }
        }
        if cartan != spec.cartan {
            return Err(Error::InvalidCartan(format!(
                "matrix is not the canonical Cartan matrix of {}{rank} \
                 (Bourbaki numbering, D4 center node 3)",
                family.letter()
            )));
        }
        Ok(spec)
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.family.letter(), self.rank)
    }
}

fn standard_cartan(family: Family, rank: usize) -> Result<Vec<Vec<i64>>> {
    let n = rank;
    let bad = |msg: &str| -> Result<Vec<Vec<i64>>> {
        Err(Error::InvalidCartan(format!("{}{rank}: {msg}", family.letter())))
    };
    let mut m = vec![vec![0i64; n]; n];
    for i in 0..n {
        m[i][i] = 2;
    }
    let bond = |i: usize, j: usize, m: &mut Vec<Vec<i64>>| {
        m[i][j] = -1;
        m[j][i] = -1;
    };
    match family {
        Family::A => {
            if n == 0 {
                return bad("rank must be positive");
            }
            for i in 0..n.saturating_sub(1) {
                bond(i, i + 1, &mut m);
            }
        }
        Family::B => {
            // alpha_n short; <alpha_{n-1}, alpha_n^v> = -2.
            if n < 2 {
                return bad("rank must be at least 2");
            }
            for i in 0..n - 2 {
                bond(i, i + 1, &mut m);
            }
            m[n - 2][n - 1] = -1;
            m[n - 1][n - 2] = -2;
        }
        Family::C => {
            // alpha_n long; transpose of B_n.
            if n < 2 {
                return bad("rank must be at least 2");
            }
            for i in 0..n - 2 {
                bond(i, i + 1, &mut m);
            }
            m[n - 2][n - 1] = -2;
            m[n - 1][n - 2] = -1;
        }
        Family::D => {
            if n < 3 {
                return bad("rank must be at least 3");
            }
            if n == 4 {
                // Node 3 is the trivalent center, adjacent to 1, 2, 4.
                for outer in [0usize, 1, 3] {
                    bond(outer, 2, &mut m);
                }
            } else {
                for i in 0..n - 2 {
                    bond(i, i + 1, &mut m);
                }
                bond(n - 3, n - 1, &mut m);
            }
        }
        Family::E => {
            if !(6..=8).contains(&n) {
                return bad("rank must be 6, 7 or 8");
            }
            let path: Vec<usize> = core::iter::once(0).chain(2..n).collect();
            for w in path.windows(2) {
                bond(w[0], w[1], &mut m);
            }
            bond(1, 3, &mut m);
        }
        Family::F => {
            if n != 4 {
                return bad("rank must be 4");
            }
            bond(0, 1, &mut m);
            bond(2, 3, &mut m);
            // alpha_2 long, alpha_3 short.
            m[1][2] = -1;
            m[2][1] = -2;
        }
        Family::G => {
            if n != 2 {
                return bad("rank must be 2");
            }
            // alpha_1 short, alpha_2 long.
            m[0][1] = -3;
            m[1][0] = -1;
        }
    }
    Ok(m)
}

/// A root, stored as integer coordinates over the simple roots.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root {
    pub coeffs: Vec<i64>,
    pub height: i64,
}

impl Root {
    pub fn new(coeffs: Vec<i64>) -> Self {
        let height = coeffs.iter().sum();
        Root { coeffs, height }
    }

    pub fn is_positive(&self) -> bool {
        self.height > 0
    }

    pub fn negated(&self) -> Root {
        Root::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// A complete finite root system with canonical ordering and pairing table.
///
/// Immutable after construction; all lookups are by index into `roots`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootSystem {
    pub spec: RootSystemSpec,
    /// All roots in canonical (height, lex) order.
    pub roots: Vec<Root>,
    /// Indices of the positive roots, ascending.
    pub positive: Vec<usize>,
    /// `simple[i]` is the index of the i-th simple root.
    pub simple: Vec<usize>,
    /// `pairing[r][i] = <roots[r], alpha_i^v>`.
    pub pairing: Vec<Vec<i64>>,
    /// Normalized half square lengths of the simple roots (short = 1).
    pub d: Vec<i64>,
    #[serde(skip)]
    index: BTreeMap<Vec<i64>, usize>,
}

impl RootSystem {
    pub fn rank(&self) -> usize {
        self.spec.rank
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    /// Index of a root given its coordinates, if it is a root.
    pub fn index_of(&self, coeffs: &[i64]) -> Option<usize> {
        self.index.get(coeffs).copied()
    }

    pub fn root(&self, idx: usize) -> &Root {
        &self.roots[idx]
    }

    /// Index of the i-th simple root.
    pub fn simple_root(&self, i: usize) -> usize {
        self.simple[i]
    }

    /// `<roots[r], alpha_i^v>`.
    pub fn pair(&self, r: usize, i: usize) -> i64 {
        self.pairing[r][i]
    }

    pub fn is_positive(&self, idx: usize) -> bool {
        self.roots[idx].is_positive()
    }

    /// Index of `-roots[idx]`.
    pub fn negate(&self, idx: usize) -> usize {
        let neg = self.roots[idx].negated();
        self.index[&neg.coeffs]
    }

    /// Applies the simple reflection `s_i` to a root by index.
    pub fn reflect_index(&self, i: usize, r: usize) -> usize {
        let mut coeffs = self.roots[r].coeffs.clone();
        let p = self.pairing[r][i];
        coeffs[i] -= p;
        self.index[&coeffs]
    }

    /// Reflects an arbitrary root vector, validating membership.
    pub fn reflect(&self, i: usize, root: &Root) -> Result<Root> {
        if i >= self.rank() {
            return Err(Error::BadInput(format!("simple index {i} out of range")));
        }
        let idx = self
            .index_of(&root.coeffs)
            .ok_or_else(|| Error::NotARoot(format!("{:?}", root.coeffs)))?;
        Ok(self.roots[self.reflect_index(i, idx)].clone())
    }

    /// Half square length of a root (1 for short, 2 or 3 for long).
    pub fn half_square_length(&self, idx: usize) -> i64 {
        let r = &self.roots[idx];
        let mut acc = 0i64;
        for i in 0..self.rank() {
            acc += r.coeffs[i] * self.d[i] * self.pairing[idx][i];
        }
        debug_assert_eq!(acc % 2, 0);
        acc / 2
    }

    /// Coefficients of the coroot `alpha^v` over the simple coroots.
    pub fn coroot_coeffs(&self, idx: usize) -> Vec<i64> {
        let r = &self.roots[idx];
        let da = self.half_square_length(idx);
        (0..self.rank())
            .map(|j| {
                let num = r.coeffs[j] * self.d[j];
                debug_assert_eq!(num % da, 0);
                num / da
            })
            .collect()
    }

    /// The highest root (last in canonical order).
    pub fn highest_root(&self) -> usize {
        self.roots.len() - 1
    }
}

/// Closes the simple roots under simple reflections and assembles the
/// canonically ordered root system.
pub fn build_root_system(spec: RootSystemSpec) -> Result<RootSystem> {
    // Revalidate so systems built from a deserialized spec are checked too.
    let spec = RootSystemSpec::from_cartan(spec.family, spec.rank, spec.cartan)?;
    let rank = spec.rank;
    let cartan = spec.cartan.clone();

    let pair_vec =
        |coeffs: &[i64], i: usize| -> i64 { (0..rank).map(|j| coeffs[j] * cartan[i][j]).sum() };

    let mut seen: BTreeMap<Vec<i64>, ()> = BTreeMap::new();
    let mut queue: Vec<Vec<i64>> = Vec::new();
    for i in 0..rank {
        let mut e = vec![0i64; rank];
        e[i] = 1;
        seen.insert(e.clone(), ());
        queue.push(e);
    }
    while let Some(v) = queue.pop() {
        for i in 0..rank {
            let mut w = v.clone();
            w[i] -= pair_vec(&v, i);
            if !seen.contains_key(&w) {
                seen.insert(w.clone(), ());
                queue.push(w);
            }
        }
        if seen.len() > 4096 {
            return Err(Error::InvalidCartan(String::from(
                "reflection closure did not terminate; matrix is not finite type",
            )));
        }
    }

    let mut roots: Vec<Root> = seen.keys().map(|c| Root::new(c.clone())).collect();
    roots.sort_by(|a, b| (a.height, &a.coeffs).cmp(&(b.height, &b.coeffs)));

    let index: BTreeMap<Vec<i64>, usize> =
        roots.iter().enumerate().map(|(i, r)| (r.coeffs.clone(), i)).collect();

    // Sign coherence: every root is all-nonnegative or all-nonpositive.
    for r in &roots {
        let pos = r.coeffs.iter().any(|&c| c > 0);
        let neg = r.coeffs.iter().any(|&c| c < 0);
        if pos && neg {
            return Err(Error::InvalidCartan(format!(
                "mixed-sign root {:?}; matrix is not finite type",
                r.coeffs
            )));
        }
    }

    let positive: Vec<usize> =
        roots.iter().enumerate().filter(|(_, r)| r.is_positive()).map(|(i, _)| i).collect();
    if positive.len() * 2 != roots.len() {
        return Err(Error::InvalidCartan(String::from("R is not R+ and -R+")));
    }

    let simple: Vec<usize> = (0..rank)
        .map(|i| {
            let mut e = vec![0i64; rank];
            e[i] = 1;
            index[&e]
        })
        .collect();

    let pairing: Vec<Vec<i64>> =
        roots.iter().map(|r| (0..rank).map(|i| pair_vec(&r.coeffs, i)).collect()).collect();

    let d = symmetrizer(&spec.cartan, rank)?;

    Ok(RootSystem { spec, roots, positive, simple, pairing, d, index })
}

/// Solves `d_i * cartan[i][j] == d_j * cartan[j][i]` with positive integers,
/// normalized so the shortest simple roots get 1.
fn symmetrizer(cartan: &[Vec<i64>], rank: usize) -> Result<Vec<i64>> {
    let mut num = vec![0i64; rank];
    let mut den = vec![0i64; rank];
    for start in 0..rank {
        if num[start] != 0 {
            continue;
        }
        num[start] = 1;
        den[start] = 1;
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for j in 0..rank {
                if i == j || cartan[i][j] == 0 {
                    continue;
                }
                // d_j = d_i * a_ij / a_ji; both entries negative, ratio > 0.
                let mut n = num[i] * cartan[i][j];
                let mut dd = den[i] * cartan[j][i];
                if dd < 0 {
                    n = -n;
                    dd = -dd;
                }
                let g = num_integer::gcd(n.abs(), dd);
                let (n, dd) = (n / g, dd / g);
                if num[j] == 0 {
                    num[j] = n;
                    den[j] = dd;
                    stack.push(j);
                } else if (num[j], den[j]) != (n, dd) {
                    return Err(Error::InvalidCartan(String::from("matrix is not symmetrizable")));
                }
            }
        }
    }
    let l = den.iter().fold(1i64, |acc, &x| num_integer::lcm(acc, x));
    let mut d: Vec<i64> = (0..rank).map(|i| num[i] * (l / den[i])).collect();
    let g = d.iter().fold(0i64, |acc, &x| num_integer::gcd(acc, x));
    for x in d.iter_mut() {
        *x /= g;
    }
    if d.iter().any(|&x| x <= 0) {
        return Err(Error::InvalidCartan(String::from("matrix is not symmetrizable")));
    }
    Ok(d)
}

/// Rebuilds a root system from a bare spec (used by cache loading).
pub fn rebuild(spec: &RootSystemSpec) -> Result<RootSystem> {
    build_root_system(spec.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn rs(family: Family, rank: usize) -> RootSystem {
        build_root_system(RootSystemSpec::standard(family, rank).unwrap()).unwrap()
    }

    #[test]
    fn a1_has_two_roots() {
        let r = rs(Family::A, 1);
        assert_eq!(r.num_roots(), 2);
        assert_eq!(r.num_positive(), 1);
    }

    #[test]
    fn b2_has_eight_roots() {
        let r = rs(Family::B, 2);
        assert_eq!(r.num_roots(), 8);
        assert_eq!(r.num_positive(), 4);
    }

    #[test]
    fn d4_has_twentyfour_roots() {
        let r = rs(Family::D, 4);
        assert_eq!(r.num_roots(), 24);
        assert_eq!(r.num_positive(), 12);
    }

    #[test]
    fn expected_counts_across_families() {
        for (f, n, pos) in [
            (Family::A, 2, 3),
            (Family::A, 5, 15),
            (Family::B, 3, 9),
            (Family::C, 3, 9),
            (Family::D, 5, 20),
            (Family::G, 2, 6),
            (Family::F, 4, 24),
        ] {
            let r = rs(f, n);
            assert_eq!(r.num_positive(), pos, "{}{}", f.letter(), n);
            assert_eq!(r.num_roots(), 2 * pos);
        }
    }

    #[test]
    fn reflection_is_involution_and_permutes_positives() {
        for (f, n) in [(Family::B, 2), (Family::G, 2), (Family::D, 4), (Family::A, 3)] {
            let r = rs(f, n);
            for i in 0..n {
                for idx in 0..r.num_roots() {
                    let once = r.reflect_index(i, idx);
                    assert_eq!(r.reflect_index(i, once), idx);
                }
                let simple_idx = r.simple_root(i);
                for &p in &r.positive {
                    let img = r.reflect_index(i, p);
                    if p == simple_idx {
                        assert_eq!(img, r.negate(p));
                    } else {
                        assert!(r.is_positive(img), "{}{} s_{} broke positivity", f.letter(), n, i);
                    }
                }
            }
        }
    }

    #[test]
    fn d4_center_convention() {
        // s_3 adds alpha_3 to each outer simple root.
        let r = rs(Family::D, 4);
        for outer in [0usize, 1, 3] {
            let img = r.reflect_index(2, r.simple_root(outer));
            let mut expect = vec![0i64; 4];
            expect[outer] = 1;
            expect[2] = 1;
            assert_eq!(r.root(img).coeffs, expect);
        }
    }

    #[test]
    fn b2_long_short_convention() {
        // beta = alpha_1 long, alpha = alpha_2 short; s_alpha(beta) = beta + 2 alpha.
        let r = rs(Family::B, 2);
        let beta = r.simple_root(0);
        assert_eq!(r.half_square_length(beta), 2);
        assert_eq!(r.half_square_length(r.simple_root(1)), 1);
        let img = r.reflect_index(1, beta);
        assert_eq!(r.root(img).coeffs, vec![1, 2]);
    }

    #[test]
    fn g2_lengths() {
        let r = rs(Family::G, 2);
        assert_eq!(r.half_square_length(r.simple_root(0)), 1);
        assert_eq!(r.half_square_length(r.simple_root(1)), 3);
        // s_1(alpha_2) = alpha_2 + 3 alpha_1.
        let img = r.reflect_index(0, r.simple_root(1));
        assert_eq!(r.root(img).coeffs, vec![3, 1]);
    }

    #[test]
    fn canonical_order_is_stable() {
        let r1 = rs(Family::D, 4);
        let r2 = build_root_system(r1.spec.clone()).unwrap();
        assert_eq!(r1.roots, r2.roots);
        assert_eq!(r1.positive, r2.positive);
    }

    #[test]
    fn malformed_cartan_rejected() {
        let m = vec![vec![2, -1], vec![-5, 2]];
        assert!(RootSystemSpec::from_cartan(Family::B, 2, m).is_err());
        // Wrong type tag for a valid matrix.
        let m = vec![vec![2, -1], vec![-1, 2]];
        assert!(RootSystemSpec::from_cartan(Family::B, 2, m).is_err());
        assert!(RootSystemSpec::standard(Family::G, 3).is_err());
        assert!(RootSystemSpec::standard(Family::E, 5).is_err());
    }

    #[test]
    fn coroot_pairing_is_two() {
        for (f, n) in [(Family::B, 3), (Family::C, 3), (Family::G, 2), (Family::F, 4)] {
            let r = rs(f, n);
            for idx in 0..r.num_roots() {
                let cr = r.coroot_coeffs(idx);
                let lhs: i64 = (0..n).map(|j| cr[j] * r.pair(idx, j)).sum();
                assert_eq!(lhs, 2, "{}{} root {idx}", f.letter(), n);
            }
            for i in 0..n {
                let mut e = vec![0i64; n];
                e[i] = 1;
                assert_eq!(r.coroot_coeffs(r.simple_root(i)), e);
            }
        }
    }

    #[test]
    fn highest_root_is_dominant() {
        for (f, n) in [(Family::B, 2), (Family::G, 2), (Family::D, 4), (Family::F, 4)] {
            let r = rs(f, n);
            let theta = r.highest_root();
            for i in 0..n {
                assert!(r.pair(theta, i) >= 0);
            }
        }
    }
}
