//! Graver bases by completion over the conformal order.
//!
//! The completion is Pottier-style: start from a kernel lattice basis,
//! saturate under pairwise sums followed by conformal normal form, then
//! inter-reduce so only conformally minimal elements remain.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

use crate::config::{conformal_leq, Configuration, Move};
use crate::error::{Error, Result};
use crate::vecops::{self, SignMask};

/// The Graver basis of a configuration: one canonical representative per
/// +/- pair, sorted ascending by (1-norm, lexicographic).
#[derive(Debug, Clone)]
pub struct GraverBasis {
    config: Configuration,
    elements: Vec<Move>,
}

impl GraverBasis {
    pub(crate) fn from_parts(config: Configuration, mut elements: Vec<Move>) -> GraverBasis {
        elements.sort();
        GraverBasis { config, elements }
    }

    pub fn config(&self) -> &Configuration {
        &self.config
    }

    pub fn elements(&self) -> &[Move] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn max_one_norm(&self) -> i64 {
        self.elements.iter().map(|m| m.one_norm()).max().unwrap_or(0)
    }

    /// The "Graver matrix": elements as the columns of a new configuration.
    pub fn to_matrix(&self) -> Result<Configuration> {
        if self.elements.is_empty() {
            return Err(Error::EmptyKernel);
        }
        let n = self.config.n();
        let k = self.elements.len();
        let mut entries = vec![0i64; n * k];
        for (j, m) in self.elements.iter().enumerate() {
            for (i, &x) in m.coords().iter().enumerate() {
                entries[i * k + j] = x;
            }
        }
        Configuration::new(n, k, entries)
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        match Move::primitive_canonical(v) {
            Ok(m) => {
                // a Graver element is primitive, so the canonical form of a
                // member must equal the member itself up to global sign
                let mv = m.coords();
                (mv == v || vecops::neg(mv) == v) && self.elements.binary_search(&m).is_ok()
            }
            Err(_) => false,
        }
    }
}

struct Elem {
    v: Vec<i64>,
    mask: SignMask,
}

/// Conformal reduction as used inside the completion: subtract the largest
/// applicable multiple of the first reducer found. Returns true if fully
/// reduced to zero.
fn reduce_full(v: &mut Vec<i64>, set: &[Elem]) -> Result<bool> {
    'outer: loop {
        if vecops::is_zero(v) {
            return Ok(true);
        }
        let mask = SignMask::of(v);
        for e in set {
            if e.mask.fits_in(mask) {
                if let Some(q) = conformal_multiple(&e.v, v) {
                    *v = vecops::checked_sub_mul(v, q, &e.v)?;
                    continue 'outer;
                }
            }
            if e.mask.negated().fits_in(mask) {
                if let Some(q) = conformal_multiple_neg(&e.v, v) {
                    // v -= q * (-e.v)
                    *v = vecops::checked_sub_mul(v, -q, &e.v)?;
                    continue 'outer;
                }
            }
        }
        return Ok(false);
    }
}

/// Largest q >= 1 with q*s conformally <= v, assuming sign masks fit.
fn conformal_multiple(s: &[i64], v: &[i64]) -> Option<i64> {
    let mut q = i64::MAX;
    for (&a, &b) in s.iter().zip(v) {
        if a != 0 {
            if a > 0 {
                if b < a {
                    return None;
                }
                q = q.min(b / a);
            } else {
                if b > a {
                    return None;
                }
                q = q.min(b / a);
            }
        }
    }
    (q >= 1).then_some(q)
}

fn conformal_multiple_neg(s: &[i64], v: &[i64]) -> Option<i64> {
    let mut q = i64::MAX;
    for (&a, &b) in s.iter().zip(v) {
        if a != 0 {
            let a = -a;
            if a > 0 {
                if b < a {
                    return None;
                }
                q = q.min(b / a);
            } else {
                if b > a {
                    return None;
                }
                q = q.min(b / a);
            }
        }
    }
    (q >= 1).then_some(q)
}

/// Conformal normal form of `v` against S union -S.
///
/// Deterministic: at each step the first applicable element of S (in the
/// given order, positive orientation tried before negative) is subtracted
/// once; repeats until nothing applies.
pub fn normal_form(v: &[i64], s: &[Move]) -> Result<Vec<i64>> {
    let mut cur = v.to_vec();
    'outer: loop {
        if vecops::is_zero(&cur) {
            return Ok(cur);
        }
        for m in s {
            if conformal_leq(m.coords(), &cur)? {
                cur = vecops::checked_sub(&cur, m.coords())?;
                continue 'outer;
            }
            let neg = m.negated_coords();
            if conformal_leq(&neg, &cur)? {
                cur = vecops::checked_sub(&cur, &neg)?;
                continue 'outer;
            }
        }
        return Ok(cur);
    }
}

/// Completion on an explicit generating set of a saturated kernel lattice.
pub(crate) fn complete(n: usize, generators: &[Vec<i64>]) -> Result<Vec<Move>> {
    assert!(n <= 128, "sign masks support up to 128 coordinates");
    let mut set: Vec<Elem> = Vec::new();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    // queue of candidate sums keyed by (1-norm of sum, indices, sign)
    let mut queue: BinaryHeap<Reverse<(i64, u32, u32, bool)>> = BinaryHeap::new();

    let push_elem = |set: &mut Vec<Elem>,
                         seen: &mut HashSet<Vec<i64>>,
                         queue: &mut BinaryHeap<Reverse<(i64, u32, u32, bool)>>,
                         v: Vec<i64>|
     -> Result<()> {
        let canon = Move::primitive_canonical(&v)?;
        // keep the unscaled vector (the lattice must stay generated), but
        // dedupe on the canonical primitive form when v is already primitive
        let key = if canon.coords() == v.as_slice() || canon.negated_coords() == v {
            canon.coords().to_vec()
        } else {
            let mut w = v.clone();
            if w.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
                w = vecops::neg(&w);
            }
            w
        };
        if !seen.insert(key.clone()) {
            return Ok(());
        }
        let mask = SignMask::of(&key);
        let t = set.len() as u32;
        for (i, e) in set.iter().enumerate() {
            let i = i as u32;
            if e.mask.conflicts(mask) {
                let s = vecops::checked_add(&e.v, &key)?;
                if !vecops::is_zero(&s) {
                    queue.push(Reverse((vecops::one_norm(&s)?, i, t, true)));
                }
            }
            if e.mask.conflicts(mask.negated()) {
                let s = vecops::checked_sub(&e.v, &key)?;
                if !vecops::is_zero(&s) {
                    queue.push(Reverse((vecops::one_norm(&s)?, i, t, false)));
                }
            }
        }
        set.push(Elem { v: key, mask });
        Ok(())
    };

    for g in generators {
        if !vecops::is_zero(g) {
            push_elem(&mut set, &mut seen, &mut queue, g.clone())?;
        }
    }

    while let Some(Reverse((_, i, j, plus))) = queue.pop() {
        let s = if plus {
            vecops::checked_add(&set[i as usize].v, &set[j as usize].v)?
        } else {
            vecops::checked_sub(&set[i as usize].v, &set[j as usize].v)?
        };
        let mut nf = s;
        if !reduce_full(&mut nf, &set)? {
            push_elem(&mut set, &mut seen, &mut queue, nf)?;
        }
    }

    // inter-reduction: keep only the conformally minimal elements
    let mut out = Vec::new();
    'cand: for (idx, e) in set.iter().enumerate() {
        for (jdx, f) in set.iter().enumerate() {
            if idx == jdx {
                continue;
            }
            if f.mask.fits_in(e.mask) && conformal_multiple(&f.v, &e.v).is_some() {
                continue 'cand;
            }
            if f.mask.negated().fits_in(e.mask) && conformal_multiple_neg(&f.v, &e.v).is_some() {
                continue 'cand;
            }
        }
        out.push(Move::primitive_canonical(&e.v)?);
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// The Graver basis: the conformally minimal nonzero kernel lattice
/// elements, one canonical representative per +/- pair.
pub fn graver_basis(m: &Configuration) -> Result<GraverBasis> {
    let gens = m.kernel_lattice_basis()?;
    let elements = complete(m.n(), &gens)?;
    Ok(GraverBasis::from_parts(m.clone(), elements))
}

/// Brute-force oracle, independent of the completion: `v` is a Graver
/// element iff no conformal predecessor other than 0 and v itself lies in
/// the kernel. Enumerates the whole conformal box below v.
pub fn is_graver_element(m: &Configuration, v: &[i64]) -> Result<bool> {
    if vecops::is_zero(v) {
        return Err(Error::ZeroVector);
    }
    if !m.in_kernel(v)? {
        return Err(Error::NotInKernel);
    }
    let n = v.len();
    let mut b = vec![0i64; n];
    // odometer over the conformal box [0, v_i] (sign-aware)
    loop {
        // advance
        let mut pos = 0;
        loop {
            if pos == n {
                return Ok(true);
            }
            if b[pos] != v[pos] {
                b[pos] += v[pos].signum();
                break;
            }
            b[pos] = 0;
            pos += 1;
        }
        if b != v && !vecops::is_zero(&b) && m.in_kernel(&b)? {
            return Ok(false);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn twisted_cubic() -> Configuration {
        Configuration::new(2, 4, vec![3, 2, 1, 0, 0, 1, 2, 3]).unwrap()
    }

    fn mv(v: &[i64]) -> Move {
        Move::primitive_canonical(v).unwrap()
    }

    #[test]
    fn normal_form_examples() {
        let s = vec![mv(&[1, -2, 1, 0])];
        assert_eq!(normal_form(&[2, -4, 2, 0], &s).unwrap(), vec![0, 0, 0, 0]);
        assert_eq!(
            normal_form(&[1, -1, -1, 1], &s).unwrap(),
            vec![1, -1, -1, 1]
        );
        // no reduction fires: (1,-1,-1,1) is not conformally below (1,0,-3,2)
        let s = vec![mv(&[1, -1, -1, 1])];
        assert!(!conformal_leq(&[1, -1, -1, 1], &[1, 0, -3, 2]).unwrap());
        assert_eq!(normal_form(&[1, 0, -3, 2], &s).unwrap(), vec![1, 0, -3, 2]);
    }

    #[test]
    fn graver_of_twisted_cubic() {
        let g = graver_basis(&twisted_cubic()).unwrap();
        let expect: Vec<Move> = [
            [1, -2, 1, 0],
            [1, -1, -1, 1],
            [0, 1, -2, 1],
            [1, 0, -3, 2],
            [2, -3, 0, 1],
        ]
        .iter()
        .map(|v| mv(v))
        .collect();
        let mut expect = expect;
        expect.sort();
        assert_eq!(g.elements(), expect.as_slice());
    }

    #[test]
    fn graver_of_trivial_kernel_is_empty() {
        let m = Configuration::new(1, 1, vec![1]).unwrap();
        assert!(graver_basis(&m).unwrap().is_empty());
    }

    #[test]
    fn oracle_on_twisted_cubic() {
        let m = twisted_cubic();
        assert!(is_graver_element(&m, &[2, -3, 0, 1]).unwrap());
        assert!(!is_graver_element(&m, &[2, -4, 2, 0]).unwrap());
        assert_eq!(
            is_graver_element(&m, &[1, 1, 1, 1]),
            Err(Error::NotInKernel)
        );
    }

    #[test]
    fn graver_matrix_shape() {
        let g = graver_basis(&twisted_cubic()).unwrap();
        let b = g.to_matrix().unwrap();
        assert_eq!((b.d(), b.n()), (4, 5));
        assert_eq!(b.rho(), 2);
    }
}
