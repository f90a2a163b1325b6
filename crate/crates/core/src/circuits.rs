//! Circuits: support-minimal primitive kernel vectors, enumerated by the
//! Cramer construction over (rank+1)-subsets of columns.

use std::collections::HashMap;

use crate::config::{Configuration, Move};
use crate::error::{Error, Result};
use crate::intmat::IntMat;
use crate::vecops;

/// All circuits of a configuration, one canonical Move per support.
#[derive(Debug, Clone)]
pub struct CircuitSet {
    config: Configuration,
    elements: Vec<Move>,
}

impl CircuitSet {
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

    /// Circuits as the columns of a new configuration.
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
}

/// Lexicographic k-subsets of 0..n.
pub(crate) fn for_each_subset<F: FnMut(&[usize]) -> Result<()>>(
    n: usize,
    k: usize,
    mut f: F,
) -> Result<()> {
    if k > n {
        return Ok(());
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx)?;
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return Ok(());
            }
            i -= 1;
            if idx[i] != i + n - k {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Row indices of a maximal independent row set of `m`.
fn independent_rows(m: &IntMat) -> Result<Vec<usize>> {
    let rows = m.rows();
    let cols = m.cols();
    let mut chosen: Vec<usize> = Vec::new();
    let mut work: Vec<Vec<i128>> = Vec::new();
    for r in 0..rows {
        let cand: Vec<i128> = m.row(r).iter().map(|&x| x as i128).collect();
        let mut test = work.clone();
        test.push(cand);
        let mut probe = test.clone();
        let rank = rank_of(&mut probe, cols)?;
        if rank == test.len() {
            work = test;
            chosen.push(r);
        }
    }
    Ok(chosen)
}

fn rank_of(a: &mut [Vec<i128>], cols: usize) -> Result<usize> {
    // forward to the shared fraction-free elimination via IntMat is not
    // possible for i128 rows, so repeat the small routine here
    let rows = a.len();
    let mut rank = 0usize;
    let mut col = 0usize;
    while rank < rows && col < cols {
        let Some(p) = (rank..rows).find(|&i| a[i][col] != 0) else {
            col += 1;
            continue;
        };
        a.swap(rank, p);
        for i in rank + 1..rows {
            if a[i][col] == 0 {
                continue;
            }
            let f1 = a[rank][col];
            let f2 = a[i][col];
            for j in col..cols {
                let t = a[i][j]
                    .checked_mul(f1)
                    .and_then(|x| a[rank][j].checked_mul(f2).and_then(|y| x.checked_sub(y)))
                    .ok_or(Error::Overflow)?;
                a[i][j] = t;
            }
        }
        rank += 1;
        col += 1;
    }
    Ok(rank)
}

/// Enumerate all circuits. Rank-deficient subsets are skipped; a final
/// support-minimality filter double-checks the result and reports an
/// internal inconsistency if it ever removes a candidate.
pub fn circuits(m: &Configuration) -> Result<CircuitSet> {
    let n = m.n();
    let rho = m.rho();
    let mut by_support: HashMap<Vec<usize>, Move> = HashMap::new();
    if rho < n {
        for_each_subset(n, rho + 1, |j_set| {
            let sub = m.matrix().restrict_columns(j_set);
            let rows = independent_rows(&sub)?;
            if rows.len() != rho {
                return Ok(()); // rank-deficient subset
            }
            // kernel vector by alternating-sign maximal minors
            let mut v = vec![0i64; n];
            for (k, &col) in j_set.iter().enumerate() {
                let other_cols: Vec<usize> = (0..rho + 1).filter(|&c| c != k).collect();
                let d = sub.submatrix(&rows, &other_cols).det()?;
                let sign = if k % 2 == 0 { 1 } else { -1 };
                v[col] = d.checked_mul(sign).ok_or(Error::Overflow)?;
            }
            if vecops::is_zero(&v) {
                return Ok(());
            }
            let mv = Move::primitive_canonical(&v)?;
            let support = mv.support();
            by_support.entry(support).or_insert(mv);
            Ok(())
        })?;
    }
    let mut elements: Vec<Move> = by_support.into_values().collect();
    // safety net: discard supports strictly containing another support
    let supports: Vec<Vec<usize>> = elements.iter().map(|m| m.support()).collect();
    let keep: Vec<bool> = supports
        .iter()
        .map(|s| {
            !supports
                .iter()
                .any(|t| t.len() < s.len() && t.iter().all(|x| s.contains(x)))
        })
        .collect();
    if keep.iter().any(|&k| !k) {
        return Err(Error::Inconsistent);
    }
    elements.retain({
        let mut it = keep.into_iter();
        move |_| it.next().unwrap()
    });
    elements.sort();
    Ok(CircuitSet {
        config: m.clone(),
        elements,
    })
}

/// Oracle: true iff v is in the kernel, has coprime entries, and no
/// nonzero kernel vector has support strictly inside supp(v).
pub fn is_circuit(m: &Configuration, v: &[i64]) -> Result<bool> {
    if vecops::is_zero(v) {
        return Err(Error::ZeroVector);
    }
    if v.len() != m.n() {
        return Err(Error::LengthMismatch {
            expected: m.n(),
            got: v.len(),
        });
    }
    if !m.in_kernel(v)? {
        return Ok(false);
    }
    let canon = Move::primitive_canonical(v)?;
    if canon.coords() != v && canon.negated_coords() != v {
        return Ok(false); // entries not coprime
    }
    let support = canon.support();
    // strictly smaller support with nonzero kernel exists iff dropping some
    // support column leaves a dependent column set
    for &skip in &support {
        let cols: Vec<usize> = support.iter().copied().filter(|&c| c != skip).collect();
        if cols.is_empty() {
            continue;
        }
        let sub = m.matrix().restrict_columns(&cols);
        if sub.rank()? < cols.len() {
            return Ok(false);
        }
    }
    Ok(true)
}
