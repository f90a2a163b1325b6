//! Markov, Graver and circuit complexities of a configuration, plus the
//! closed-form upper bounds derived from maximal minors.

use num_bigint::BigInt;
use num_traits::One;

use crate::circuits::{self, for_each_subset};
use crate::config::{Configuration, Move};
use crate::error::{Error, Result};
use crate::graver;
use crate::lawrence::{self, Table};
use crate::markov;
use crate::vecops;

/// Graver complexity: the maximum type of a Graver table over all
/// liftings. Computed on the Graver matrix B (columns = Graver basis of
/// M): the answer is the largest 1-norm in the Graver basis of B, floored
/// at 2 because opposite-row tables (b, -b) always exist. The witness is
/// an attaining signed multiplicity vector over the columns of B, empty
/// in the floor case.
pub fn graver_complexity(m: &Configuration) -> Result<(i64, Vec<i64>)> {
    let g = graver::graver_basis(m)?;
    if g.is_empty() {
        return Err(Error::EmptyKernel);
    }
    let b = g.to_matrix()?;
    let gb = graver::graver_basis(&b)?;
    let best = gb
        .elements()
        .iter()
        .max_by_key(|psi| psi.one_norm())
        .filter(|psi| psi.one_norm() >= 2);
    match best {
        Some(psi) => Ok((psi.one_norm(), psi.coords().to_vec())),
        None => Ok((2, Vec::new())),
    }
}

/// Closed-form upper bounds: D = largest absolute full-rank minor,
/// degree = (rho+1)(n-rho)D, then cardinality and complexity bounds
/// N <= (2 degree)^n and g <= n (2 degree)^(2n-rho).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraverBounds {
    pub d_max: i64,
    pub degree: BigInt,
    pub cardinality: BigInt,
    pub complexity: BigInt,
}

pub fn graver_complexity_bounds(m: &Configuration) -> Result<GraverBounds> {
    let rho = m.rho();
    let n = m.n();
    let mut d_max: i64 = 0;
    if rho > 0 {
        for_each_subset(m.d(), rho, |rows| {
            for_each_subset(n, rho, |cols| {
                let det = m.matrix().submatrix(rows, cols).det()?;
                d_max = d_max.max(det.checked_abs().ok_or(Error::Overflow)?);
                Ok(())
            })
        })?;
    }
    let degree = BigInt::from(rho as i64 + 1) * BigInt::from((n - rho) as i64) * BigInt::from(d_max);
    let base = BigInt::from(2) * &degree;
    let cardinality = pow_big(&base, n);
    let complexity = BigInt::from(n as i64) * pow_big(&base, 2 * n - rho);
    Ok(GraverBounds {
        d_max,
        degree,
        cardinality,
        complexity,
    })
}

fn pow_big(b: &BigInt, e: usize) -> BigInt {
    let mut acc = BigInt::one();
    for _ in 0..e {
        acc *= b;
    }
    acc
}

/// Maximum table type seen in minimal Markov bases of the liftings
/// r = 2..r_max, with the per-r profile and a stabilization flag (set
/// when the last two levels introduced no new maximum).
pub fn markov_complexity(
    m: &Configuration,
    r_max: Option<usize>,
) -> Result<(usize, bool, Vec<(usize, usize)>)> {
    if !m.is_pointed() {
        return Err(Error::NotPointed);
    }
    let horizon = match r_max {
        Some(r) => r,
        None => graver_complexity(m)?.0 as usize,
    };
    let mut profile: Vec<(usize, usize)> = Vec::new();
    let mut overall = 0usize;
    for r in 2..=horizon {
        let l = lawrence::lift(m, r)?;
        let g = l.graver_basis()?;
        let mb = markov::minimal_markov_from_candidates(&g)?;
        let max_type = mb
            .elements()
            .iter()
            .map(|mv| l.table_from_flat(mv.coords()).table_type())
            .max()
            .unwrap_or(0);
        profile.push((r, max_type));
        overall = overall.max(max_type);
    }
    let stabilized = profile.len() >= 3
        && profile[..profile.len() - 2]
            .iter()
            .map(|&(_, t)| t)
            .max()
            .unwrap_or(0)
            == overall;
    Ok((overall, stabilized, profile))
}

/// Circuit complexity: the maximum type of a circuit table over all
/// liftings. Candidates are circuits of the circuit matrix C (columns =
/// circuits of M); the type of a candidate is its support size. Each
/// extremal candidate is verified against the direct circuit oracle on
/// the actual lifted table before being reported; the floor of 2 covers
/// the opposite-row tables. Never exceeds n - rho + 1.
pub fn circuit_complexity(m: &Configuration) -> Result<(usize, Vec<i64>)> {
    let cs = circuits::circuits(m)?;
    if cs.is_empty() {
        return Err(Error::EmptyKernel);
    }
    let c = cs.to_matrix()?;
    let cc = circuits::circuits(&c)?;
    let mut cands: Vec<&Move> = cc.elements().iter().collect();
    cands.sort_by_key(|phi| std::cmp::Reverse(phi.support().len()));
    for phi in cands {
        let ty = phi.support().len();
        if ty <= 2 {
            break;
        }
        // build the candidate table: one row per nonzero coefficient
        let rows: Vec<Vec<i64>> = phi
            .coords()
            .iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .map(|(k, &x)| vecops::checked_scale(cs.elements()[k].coords(), x))
            .collect::<Result<_>>()?;
        let table = Table::from_rows(&rows);
        let flat = Move::primitive_canonical(table.flatten())?;
        let l = lawrence::lift(m, ty)?;
        if circuits::is_circuit(l.matrix(), flat.coords())? {
            debug_assert!(ty <= m.n() - m.rho() + 1);
            return Ok((ty, phi.coords().to_vec()));
        }
    }
    Ok((2, Vec::new()))
}

/// Summary of all complexity measures of one configuration.
#[derive(Debug, Clone)]
pub struct ComplexityReport {
    pub markov: Option<(usize, bool, Vec<(usize, usize)>)>,
    pub graver: i64,
    pub graver_witness: Vec<i64>,
    pub circuit: usize,
    pub circuit_witness: Vec<i64>,
    pub bounds: GraverBounds,
}

impl ComplexityReport {
    /// Compute everything; the Markov part is skipped for non-pointed
    /// configurations (fibers would be infinite).
    pub fn compute(m: &Configuration, r_max: Option<usize>) -> Result<ComplexityReport> {
        let (graver, graver_witness) = graver_complexity(m)?;
        let (circuit, circuit_witness) = circuit_complexity(m)?;
        let bounds = graver_complexity_bounds(m)?;
        let markov = if m.is_pointed() {
            Some(markov_complexity(m, r_max)?)
        } else {
            None
        };
        if let Some((mc, _, _)) = &markov {
            debug_assert!(*mc as i64 <= graver);
        }
        debug_assert!(circuit as i64 <= graver.max(2));
        Ok(ComplexityReport {
            markov,
            graver,
            graver_witness,
            circuit,
            circuit_witness,
            bounds,
        })
    }
}
