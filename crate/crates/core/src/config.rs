//! Configurations (integer matrices whose columns are the lattice vectors),
//! the conformal partial order, primitive canonical moves and pointedness.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::intmat::IntMat;
use crate::ratlp;
use crate::vecops;

/// An integer configuration: columns are the vectors a_1..a_n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Configuration {
    mat: IntMat,
    rho: usize,
}

impl Configuration {
    /// Build from a d x n row-major entry list. Zero columns are rejected.
    pub fn new(d: usize, n: usize, entries: Vec<i64>) -> Result<Configuration> {
        assert_eq!(entries.len(), d * n);
        let mat = IntMat::new(d, n, entries);
        for j in 0..n {
            if (0..d).all(|i| mat[(i, j)] == 0) {
                return Err(Error::ZeroColumn(j));
            }
        }
        let rho = mat.rank()?;
        Ok(Configuration { mat, rho })
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Configuration> {
        let m = IntMat::from_rows(rows);
        let (d, n) = (m.rows(), m.cols());
        let mut entries = Vec::with_capacity(d * n);
        for i in 0..d {
            entries.extend_from_slice(m.row(i));
        }
        Configuration::new(d, n, entries)
    }

    pub fn d(&self) -> usize {
        self.mat.rows()
    }

    pub fn n(&self) -> usize {
        self.mat.cols()
    }

    pub fn rho(&self) -> usize {
        self.rho
    }

    pub fn matrix(&self) -> &IntMat {
        &self.mat
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.mat[(i, j)]
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        self.mat.col(j)
    }

    pub fn mul_vec(&self, v: &[i64]) -> Result<Vec<i64>> {
        self.mat.mul_vec(v)
    }

    pub fn in_kernel(&self, v: &[i64]) -> Result<bool> {
        Ok(vecops::is_zero(&self.mul_vec(v)?))
    }

    /// Basis of the saturated kernel lattice {v in Z^n : M v = 0},
    /// computed by column-style Hermite reduction.
    pub fn kernel_lattice_basis(&self) -> Result<Vec<Vec<i64>>> {
        let (rank, basis) = self.mat.kernel_basis()?;
        debug_assert_eq!(rank, self.rho);
        Ok(basis)
    }

    pub fn kernel_rank(&self) -> usize {
        self.n() - self.rho
    }

    /// True iff the kernel contains no nonzero nonnegative vector.
    ///
    /// Decided exactly via Gordan's theorem: the configuration is pointed
    /// iff some functional y has y . a_j >= 1 for every column a_j.
    pub fn is_pointed(&self) -> bool {
        self.pointed_witness().is_some()
    }

    /// A strictly positive functional certificate for pointedness, if any.
    pub fn pointed_witness(&self) -> Option<Vec<BigRational>> {
        let ineqs: Vec<Vec<BigRational>> = (0..self.n())
            .map(|j| {
                self.column(j)
                    .into_iter()
                    .map(|x| BigRational::from_integer(BigInt::from(x)))
                    .collect()
            })
            .collect();
        ratlp::feasible_point(&[], &ineqs)
    }

    /// Integer-scaled pointedness witness: w with w . a_j >= 1 for all j.
    pub(crate) fn pointed_witness_integer(&self) -> Option<Vec<i64>> {
        let w = self.pointed_witness()?;
        let denom = w
            .iter()
            .fold(BigInt::from(1), |acc, x| num_integer::lcm(acc, x.denom().clone()));
        let scaled: Option<Vec<i64>> = w
            .iter()
            .map(|x| {
                let v = x.numer() * (&denom / x.denom());
                i64::try_from(&v).ok()
            })
            .collect();
        scaled
    }
}

/// Componentwise sign-compatible domination: for each i, either
/// 0 <= a_i <= b_i or 0 >= a_i >= b_i.
pub fn conformal_leq(a: &[i64], b: &[i64]) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            expected: b.len(),
            got: a.len(),
        });
    }
    Ok(a.iter()
        .zip(b)
        .all(|(&x, &y)| (0 <= x && x <= y) || (0 >= x && x >= y)))
}

/// A primitive integer vector with canonical sign (first nonzero entry
/// positive). The element of a kernel lattice when attached to one.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Move {
    coords: Vec<i64>,
}

impl Move {
    /// Divide by the gcd of the entries and normalize the sign.
    pub fn primitive_canonical(v: &[i64]) -> Result<Move> {
        if vecops::is_zero(v) {
            return Err(Error::ZeroVector);
        }
        let mut g: i64 = 0;
        for &x in v {
            g = gcd(g, x.checked_abs().ok_or(Error::Overflow)?);
        }
        let mut coords: Vec<i64> = v.iter().map(|&x| x / g).collect();
        if coords.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
            coords = vecops::neg(&coords);
        }
        Ok(Move { coords })
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn one_norm(&self) -> i64 {
        vecops::one_norm(&self.coords).expect("canonical move norms fit in i64")
    }

    pub fn negated_coords(&self) -> Vec<i64> {
        vecops::neg(&self.coords)
    }

    pub fn support(&self) -> Vec<usize> {
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .map(|(i, _)| i)
            .collect()
    }
}

impl PartialOrd for Move {
    fn partial_cmp(&self, other: &Move) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical basis order: ascending 1-norm, then lexicographic.
impl Ord for Move {
    fn cmp(&self, other: &Move) -> std::cmp::Ordering {
        self.one_norm()
            .cmp(&other.one_norm())
            .then_with(|| self.coords.cmp(&other.coords))
    }
}

fn gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn twisted_cubic() -> Configuration {
        Configuration::new(2, 4, vec![3, 2, 1, 0, 0, 1, 2, 3]).unwrap()
    }

    #[test]
    fn kernel_basis_of_twisted_cubic() {
        let m = twisted_cubic();
        let basis = m.kernel_lattice_basis().unwrap();
        assert_eq!(basis.len(), 2);
        for v in &basis {
            assert!(m.in_kernel(v).unwrap());
        }
        let reference = vec![vec![1, -2, 1, 0], vec![0, 1, -2, 1]];
        assert!(crate::intmat::same_lattice(&basis, &reference, 4).unwrap());
    }

    #[test]
    fn kernel_basis_trivial_cases() {
        let id = Configuration::new(2, 2, vec![1, 0, 0, 1]).unwrap();
        assert!(id.kernel_lattice_basis().unwrap().is_empty());
        let row = Configuration::new(1, 2, vec![1, 1]).unwrap();
        let k = row.kernel_lattice_basis().unwrap();
        assert_eq!(k.len(), 1);
        let m = Move::primitive_canonical(&k[0]).unwrap();
        assert_eq!(m.coords(), &[1, -1]);
    }

    #[test]
    fn conformal_examples() {
        assert!(conformal_leq(&[1, 0, -1], &[2, 1, -1]).unwrap());
        assert!(!conformal_leq(&[1, -1], &[1, 1]).unwrap());
        assert!(conformal_leq(&[0, 0], &[5, -7]).unwrap());
        assert!(conformal_leq(&[0; 3], &[1, -2, 3]).unwrap());
        assert!(conformal_leq(&[1, 2], &[1, 2]).unwrap());
        assert_eq!(
            conformal_leq(&[1], &[1, 2]),
            Err(Error::LengthMismatch { expected: 2, got: 1 })
        );
    }

    #[test]
    fn primitive_canonical_examples() {
        assert_eq!(
            Move::primitive_canonical(&[-2, 4, -2, 0]).unwrap().coords(),
            &[1, -2, 1, 0]
        );
        assert_eq!(
            Move::primitive_canonical(&[1, -1]).unwrap().coords(),
            &[1, -1]
        );
        assert_eq!(
            Move::primitive_canonical(&[0, 0, -3]).unwrap().coords(),
            &[0, 0, 1]
        );
        assert_eq!(Move::primitive_canonical(&[0, 0]), Err(Error::ZeroVector));
    }

    #[test]
    fn pointedness() {
        assert!(twisted_cubic().is_pointed());
        let m = Configuration::new(1, 2, vec![1, -1]).unwrap();
        assert!(!m.is_pointed());
    }

    #[test]
    fn pointed_witness_scales_to_integers() {
        let m = twisted_cubic();
        let w = m.pointed_witness_integer().unwrap();
        for j in 0..m.n() {
            assert!(vecops::checked_dot(&w, &m.column(j)).unwrap() >= 1);
        }
    }
}
