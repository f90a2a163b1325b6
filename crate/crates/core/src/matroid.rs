//! Sign vectors, covector tests against circuits, and exact face
//! certification by rational feasibility.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::circuits::{self, CircuitSet};
use crate::config::Configuration;
use crate::error::{Error, Result};
use crate::lawrence;
use crate::ratlp;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Minus,
    Zero,
    Plus,
}

impl Sign {
    pub fn of_i64(x: i64) -> Sign {
        match x.cmp(&0) {
            std::cmp::Ordering::Less => Sign::Minus,
            std::cmp::Ordering::Equal => Sign::Zero,
            std::cmp::Ordering::Greater => Sign::Plus,
        }
    }

    pub fn opposite(self) -> Sign {
        match self {
            Sign::Minus => Sign::Plus,
            Sign::Zero => Sign::Zero,
            Sign::Plus => Sign::Minus,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Sign::Minus => '-',
            Sign::Zero => '0',
            Sign::Plus => '+',
        }
    }
}

/// A vector over {+, 0, -}, one entry per configuration column.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignVector {
    signs: Vec<Sign>,
}

impl SignVector {
    pub fn new(signs: Vec<Sign>) -> SignVector {
        SignVector { signs }
    }

    pub fn of_i64(v: &[i64]) -> SignVector {
        SignVector {
            signs: v.iter().map(|&x| Sign::of_i64(x)).collect(),
        }
    }

    /// Parse a string like "+0-0+".
    pub fn parse(s: &str) -> Result<SignVector> {
        let mut signs = Vec::with_capacity(s.len());
        for (k, c) in s.char_indices() {
            signs.push(match c {
                '+' => Sign::Plus,
                '0' => Sign::Zero,
                '-' => Sign::Minus,
                _ => {
                    return Err(Error::Parse {
                        line: 1,
                        column: k + 1,
                        message: format!("expected '+', '0' or '-', found {c:?}"),
                    })
                }
            });
        }
        Ok(SignVector { signs })
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.signs.iter().all(|&s| s == Sign::Zero)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.signs.iter().all(|&s| s != Sign::Minus)
    }

    pub fn negated(&self) -> SignVector {
        SignVector {
            signs: self.signs.iter().map(|s| s.opposite()).collect(),
        }
    }

    /// Indices carrying a zero.
    pub fn zero_set(&self) -> Vec<usize> {
        self.signs
            .iter()
            .enumerate()
            .filter(|(_, &s)| s == Sign::Zero)
            .map(|(i, _)| i)
            .collect()
    }
}

impl std::fmt::Display for SignVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for s in &self.signs {
            write!(f, "{}", s.to_char())?;
        }
        Ok(())
    }
}

/// Componentwise sign of l . M (one entry per column).
pub fn sign_vector(l: &[BigRational], m: &Configuration) -> Result<SignVector> {
    if l.len() != m.d() {
        return Err(Error::LengthMismatch {
            expected: m.d(),
            got: l.len(),
        });
    }
    let signs = (0..m.n())
        .map(|j| {
            let dot: BigRational = m
                .column(j)
                .iter()
                .zip(l)
                .map(|(&a, x)| x * BigRational::from_integer(BigInt::from(a)))
                .fold(BigRational::zero(), |acc, t| acc + t);
            if dot.is_positive() {
                Sign::Plus
            } else if dot.is_negative() {
                Sign::Minus
            } else {
                Sign::Zero
            }
        })
        .collect();
    Ok(SignVector::new(signs))
}

pub fn sign_vector_int(l: &[i64], m: &Configuration) -> Result<SignVector> {
    let rat: Vec<BigRational> = l
        .iter()
        .map(|&x| BigRational::from_integer(BigInt::from(x)))
        .collect();
    sign_vector(&rat, m)
}

/// Combinatorial orthogonality: the sign products over the common support
/// either vanish entirely or include both + and -.
pub fn orthogonal(x: &SignVector, y: &SignVector) -> Result<bool> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch {
            expected: x.len(),
            got: y.len(),
        });
    }
    let mut saw_plus = false;
    let mut saw_minus = false;
    for (&a, &b) in x.signs.iter().zip(&y.signs) {
        if a == Sign::Zero || b == Sign::Zero {
            continue;
        }
        if a == b {
            saw_plus = true;
        } else {
            saw_minus = true;
        }
    }
    Ok(saw_plus == saw_minus)
}

/// Covector test against a precomputed circuit set.
pub fn is_covector_with(x: &SignVector, circuits: &CircuitSet) -> Result<bool> {
    for c in circuits.elements() {
        let cx = SignVector::of_i64(c.coords());
        if !orthogonal(x, &cx)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Covector test: orthogonality to every circuit of M (both orientations,
/// which coincide because orthogonality is negation-invariant).
pub fn is_covector(m: &Configuration, x: &SignVector) -> Result<bool> {
    if x.len() != m.n() {
        return Err(Error::LengthMismatch {
            expected: m.n(),
            got: x.len(),
        });
    }
    let cs = circuits::circuits(m)?;
    is_covector_with(x, &cs)
}

/// A functional vanishing exactly on the columns of a face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceCertificate {
    pub functional: Vec<BigRational>,
    pub zero_set: Vec<usize>,
}

/// Search for a functional with l . a = 0 on the given columns and
/// l . a >= 1 elsewhere (strict positivity normalized to 1; valid since
/// the system is homogeneous). All arithmetic exact rational. With every
/// column listed, the zero functional certifies the improper face.
pub fn face_certificate(m: &Configuration, c: &[usize]) -> Result<Option<FaceCertificate>> {
    let mut in_c = vec![false; m.n()];
    for &j in c {
        if j >= m.n() {
            return Err(Error::LengthMismatch {
                expected: m.n(),
                got: j + 1,
            });
        }
        in_c[j] = true;
    }
    let col_rat = |j: usize| -> Vec<BigRational> {
        m.column(j)
            .into_iter()
            .map(|x| BigRational::from_integer(BigInt::from(x)))
            .collect()
    };
    let eq: Vec<Vec<BigRational>> = (0..m.n()).filter(|&j| in_c[j]).map(col_rat).collect();
    let ineq: Vec<Vec<BigRational>> = (0..m.n()).filter(|&j| !in_c[j]).map(col_rat).collect();
    let Some(l) = ratlp::feasible_point(&eq, &ineq) else {
        return Ok(None);
    };
    let mut zero_set: Vec<usize> = c.to_vec();
    zero_set.sort();
    zero_set.dedup();
    Ok(Some(FaceCertificate {
        functional: l,
        zero_set,
    }))
}

/// Restriction test: C indexes columns of lift(M, r); every choice of c of
/// the r table rows induces a zero pattern on lift(M, c), and all of them
/// must be faces there.
pub fn face_test_by_restriction(
    base: &Configuration,
    r: usize,
    c_set: &[usize],
    c: usize,
) -> Result<bool> {
    if c >= r {
        return Err(Error::BadRestriction { level: c, order: r });
    }
    let n = base.n();
    let mut in_c = vec![false; r * n];
    for &j in c_set {
        if j >= r * n {
            return Err(Error::LengthMismatch {
                expected: r * n,
                got: j + 1,
            });
        }
        in_c[j] = true;
    }
    let small = lawrence::lift(base, c)?;
    let mut ok = true;
    circuits::for_each_subset(r, c, |rows| {
        if !ok {
            return Ok(());
        }
        let mut restricted: Vec<usize> = Vec::new();
        for (pos, &j) in rows.iter().enumerate() {
            for i in 0..n {
                if in_c[j * n + i] {
                    restricted.push(pos * n + i);
                }
            }
        }
        if face_certificate(small.matrix(), &restricted)?.is_none() {
            ok = false;
        }
        Ok(())
    })?;
    Ok(ok)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn twisted_cubic() -> Configuration {
        Configuration::new(2, 4, vec![3, 2, 1, 0, 0, 1, 2, 3]).unwrap()
    }

    #[test]
    fn sign_vector_basics() {
        let m = twisted_cubic();
        let zero = sign_vector_int(&[0, 0], &m).unwrap();
        assert!(zero.is_zero());
        let row = sign_vector_int(&[1, 0], &m).unwrap();
        assert_eq!(row, SignVector::parse("+++0").unwrap());
        assert!(sign_vector_int(&[1], &m).is_err());
    }

    #[test]
    fn orthogonality_examples() {
        let x = SignVector::parse("+-0").unwrap();
        let y = SignVector::parse("++0").unwrap();
        assert!(orthogonal(&x, &y).unwrap());
        let x = SignVector::parse("+0").unwrap();
        assert!(!orthogonal(&x, &x).unwrap());
        let a = SignVector::parse("+0-0").unwrap();
        let b = SignVector::parse("0+0-").unwrap();
        assert!(orthogonal(&a, &b).unwrap());
        assert_eq!(orthogonal(&a, &x), Err(Error::LengthMismatch { expected: 4, got: 2 }));
    }

    #[test]
    fn covectors_from_functionals() {
        let m = twisted_cubic();
        for l in [[1, 0], [0, 1], [1, 1], [-2, 3]] {
            let x = sign_vector_int(&l, &m).unwrap();
            assert!(is_covector(&m, &x).unwrap());
        }
        assert!(is_covector(&m, &SignVector::parse("0000").unwrap()).unwrap());
        // (+,-,+,-) clashes with the circuit (1,-2,1,0)
        assert!(!is_covector(&m, &SignVector::parse("+-+-").unwrap()).unwrap());
    }

    #[test]
    fn face_certificates() {
        let m = twisted_cubic();
        // vertex {0} is a face: minimize along l = (-1, 1) scaled
        let cert = face_certificate(&m, &[0]).unwrap().unwrap();
        assert_eq!(cert.zero_set, vec![0]);
        // the middle columns alone form no face
        assert!(face_certificate(&m, &[1]).unwrap().is_none());
        // improper face
        let all = face_certificate(&m, &[0, 1, 2, 3]).unwrap().unwrap();
        assert!(all.functional.iter().all(|x| x.is_zero()));
    }

    #[test]
    fn restriction_requires_smaller_level() {
        let m = twisted_cubic();
        assert_eq!(
            face_test_by_restriction(&m, 2, &[], 2),
            Err(Error::BadRestriction { level: 2, order: 2 })
        );
    }

    #[test]
    fn restriction_of_a_face() {
        let m = twisted_cubic();
        // zero pattern: vertex column (0,0) of the second lifting
        assert!(face_test_by_restriction(&m, 2, &[0], 1).unwrap());
    }
}
