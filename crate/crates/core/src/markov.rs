//! Fibers and minimal Markov bases.
//!
//! A Markov basis is obtained by pruning the Graver basis: margins that
//! need checking are exactly those of the candidates' positive parts, and
//! candidates are deleted greedily while every such fiber stays connected.

use std::collections::{BTreeSet, HashMap};

use crate::config::{Configuration, Move};
use crate::error::{Error, Result};
use crate::graver::{self, GraverBasis};
use crate::vecops;

/// Point limit for a single fiber enumeration. Overridable through the
/// LAWRENCE_MAX_FIBER environment variable; exceeding it is a hard error,
/// never a silent truncation.
pub fn default_fiber_limit() -> usize {
    std::env::var("LAWRENCE_MAX_FIBER")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(1_000_000)
}

/// All nonnegative integer solutions of config . x = margin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fiber {
    config: Configuration,
    margin: Vec<i64>,
    points: Vec<Vec<i64>>, // sorted
}

impl Fiber {
    pub fn config(&self) -> &Configuration {
        &self.config
    }

    pub fn margin(&self) -> &[i64] {
        &self.margin
    }

    pub fn points(&self) -> &[Vec<i64>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

pub fn fiber(m: &Configuration, b: &[i64]) -> Result<Fiber> {
    fiber_with_limit(m, b, default_fiber_limit())
}

/// Depth-first enumeration with exact pruning. Each coordinate is bounded
/// through a strictly positive integer functional w (w . a_j >= 1 for all
/// columns), which exists exactly when the configuration is pointed; for
/// nonnegative matrices the residual margin tightens the bound further.
pub fn fiber_with_limit(m: &Configuration, b: &[i64], limit: usize) -> Result<Fiber> {
    if b.len() != m.d() {
        return Err(Error::LengthMismatch {
            expected: m.d(),
            got: b.len(),
        });
    }
    let w = m.pointed_witness_integer().ok_or(Error::NotPointed)?;
    let n = m.n();
    let cols: Vec<Vec<i64>> = (0..n).map(|j| m.column(j)).collect();
    let wa: Vec<i128> = cols
        .iter()
        .map(|c| c.iter().zip(&w).map(|(&a, &x)| a as i128 * x as i128).sum())
        .collect();
    let nonneg = cols.iter().all(|c| c.iter().all(|&x| x >= 0));
    let mut points: Vec<Vec<i64>> = Vec::new();
    let mut x = vec![0i64; n];
    let mut res: Vec<i64> = b.to_vec();
    let mut wres: i128 = res.iter().zip(&w).map(|(&r, &y)| r as i128 * y as i128).sum();
    dfs(
        0, &mut x, &mut res, &mut wres, &cols, &wa, nonneg, limit, &mut points,
    )?;
    points.sort();
    Ok(Fiber {
        config: m.clone(),
        margin: b.to_vec(),
        points,
    })
}

#[allow(clippy::too_many_arguments)]
fn dfs(
    j: usize,
    x: &mut Vec<i64>,
    res: &mut Vec<i64>,
    wres: &mut i128,
    cols: &[Vec<i64>],
    wa: &[i128],
    nonneg: bool,
    limit: usize,
    points: &mut Vec<Vec<i64>>,
) -> Result<()> {
    if *wres < 0 {
        return Ok(());
    }
    if nonneg && res.iter().any(|&r| r < 0) {
        return Ok(());
    }
    if j == cols.len() {
        if vecops::is_zero(res) {
            if points.len() >= limit {
                return Err(Error::Resource { limit });
            }
            points.push(x.clone());
        }
        return Ok(());
    }
    let mut ub = (*wres / wa[j]) as i64;
    if nonneg {
        for (i, &a) in cols[j].iter().enumerate() {
            if a > 0 {
                ub = ub.min(res[i] / a);
            }
        }
    }
    for t in 0..=ub.max(-1) {
        x[j] = t;
        if t > 0 {
            for (i, &a) in cols[j].iter().enumerate() {
                res[i] = res[i].checked_sub(a).ok_or(Error::Overflow)?;
            }
            *wres -= wa[j];
        }
        dfs(j + 1, x, res, wres, cols, wa, nonneg, limit, points)?;
    }
    if ub > 0 {
        for (i, &a) in cols[j].iter().enumerate() {
            res[i] = res[i]
                .checked_add(a.checked_mul(ub).ok_or(Error::Overflow)?)
                .ok_or(Error::Overflow)?;
        }
        *wres += wa[j] * ub as i128;
    }
    x[j] = 0;
    Ok(())
}

/// Connectivity of the fiber graph whose edges join points differing by a
/// move (either sign). Empty and singleton fibers count as connected.
pub fn fiber_connected(f: &Fiber, moves: &[Move]) -> bool {
    let k = f.points.len();
    if k <= 1 {
        return true;
    }
    let mut seen = vec![false; k];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut reached = 1usize;
    while let Some(i) = stack.pop() {
        for mv in moves {
            for dir in [1i64, -1] {
                let mut q = f.points[i].clone();
                let mut ok = true;
                for (c, &g) in q.iter_mut().zip(mv.coords()) {
                    match c.checked_add(dir * g) {
                        Some(v) if v >= 0 => *c = v,
                        _ => {
                            ok = false;
                            break;
                        }
                    }
                }
                if !ok {
                    continue;
                }
                if let Ok(idx) = f.points.binary_search_by(|p| p.as_slice().cmp(&q)) {
                    if !seen[idx] {
                        seen[idx] = true;
                        reached += 1;
                        stack.push(idx);
                    }
                }
            }
        }
    }
    reached == k
}

/// A minimal (irredundant) Markov basis.
#[derive(Debug, Clone)]
pub struct MarkovBasis {
    config: Configuration,
    elements: Vec<Move>,
}

impl MarkovBasis {
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
}

pub fn minimal_markov_basis(m: &Configuration) -> Result<MarkovBasis> {
    let g = graver::graver_basis(m)?;
    minimal_markov_from_candidates(&g)
}

struct FiberGraph {
    npoints: usize,
    // (point, point, candidate index); fixed for the whole pruning run
    edges: Vec<(u32, u32, u32)>,
}

fn connected_with(fg: &FiberGraph, kept: &[bool]) -> bool {
    if fg.npoints <= 1 {
        return true;
    }
    let mut parent: Vec<u32> = (0..fg.npoints as u32).collect();
    fn find(parent: &mut [u32], mut x: u32) -> u32 {
        while parent[x as usize] != x {
            parent[x as usize] = parent[parent[x as usize] as usize];
            x = parent[x as usize];
        }
        x
    }
    let mut comps = fg.npoints;
    for &(a, b, c) in &fg.edges {
        if !kept[c as usize] {
            continue;
        }
        let ra = find(&mut parent, a);
        let rb = find(&mut parent, b);
        if ra != rb {
            parent[ra as usize] = rb;
            comps -= 1;
            if comps == 1 {
                return true;
            }
        }
    }
    comps == 1
}

/// Prune a Graver basis down to an irredundant connecting set.
///
/// Margins checked are the positive-part margins of the candidates; the
/// Graver basis connects every fiber, so the connectivity invariant holds
/// initially and is maintained by each accepted deletion. Edge lists per
/// fiber are computed once up front (they depend only on the fiber and the
/// full candidate list, not on the surviving subset). Deletion order is
/// descending (1-norm, lexicographic), keeping low-degree moves.
pub fn minimal_markov_from_candidates(g: &GraverBasis) -> Result<MarkovBasis> {
    let m = g.config();
    let limit = default_fiber_limit();
    let cands = g.elements();
    let index: HashMap<&[i64], usize> = cands
        .iter()
        .enumerate()
        .map(|(i, c)| (c.coords(), i))
        .collect();
    let mut margins: BTreeSet<Vec<i64>> = BTreeSet::new();
    for mv in cands {
        margins.insert(m.mul_vec(&vecops::positive_part(mv.coords()))?);
    }
    let mut graphs: Vec<FiberGraph> = Vec::new();
    let mut incidence: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); cands.len()];
    for b in &margins {
        let f = fiber_with_limit(m, b, limit)?;
        let fi = graphs.len();
        let mut edges = Vec::new();
        for a in 0..f.len() {
            for bb in a + 1..f.len() {
                let mut diff: Vec<i64> = f.points[bb]
                    .iter()
                    .zip(&f.points[a])
                    .map(|(&x, &y)| x - y)
                    .collect();
                if diff.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
                    diff = vecops::neg(&diff);
                }
                if let Some(&ci) = index.get(diff.as_slice()) {
                    edges.push((a as u32, bb as u32, ci as u32));
                    incidence[ci].insert(fi);
                }
            }
        }
        graphs.push(FiberGraph {
            npoints: f.len(),
            edges,
        });
    }

    let mut kept = vec![true; cands.len()];
    let mut order: Vec<usize> = (0..cands.len()).collect();
    order.sort_by(|&a, &b| cands[b].cmp(&cands[a])); // descending (1-norm, lex)
    for idx in order {
        kept[idx] = false;
        let ok = incidence[idx].iter().all(|&fi| connected_with(&graphs[fi], &kept));
        if !ok {
            kept[idx] = true;
        }
    }
    // full re-verification of connectivity on the final set
    for fg in &graphs {
        if !connected_with(fg, &kept) {
            return Err(Error::Inconsistent);
        }
    }
    let elements: Vec<Move> = cands
        .iter()
        .zip(&kept)
        .filter(|(_, &k)| k)
        .map(|(c, _)| c.clone())
        .collect();
    Ok(MarkovBasis {
        config: m.clone(),
        elements,
    })
}
