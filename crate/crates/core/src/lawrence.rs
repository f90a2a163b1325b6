//! Higher Lawrence liftings: the block configuration whose kernel consists
//! of r x n integer tables with zero column sums and every row a linear
//! relation of the base configuration.

use std::collections::{HashMap, HashSet};

use crate::config::{Configuration, Move};
use crate::error::{Error, Result};
use crate::graver::{self, GraverBasis};
use crate::vecops;

/// An r x n integer table, identified with a flat kernel vector of the
/// r-th lifting. Flattening is row-major by (lift row, base column),
/// matching the lifting's column order bit-exactly.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Table {
    data: Vec<i64>,
    r: usize,
    n: usize,
}

impl Table {
    pub fn new(r: usize, n: usize, data: Vec<i64>) -> Table {
        assert_eq!(data.len(), r * n);
        Table { data, r, n }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Table {
        let r = rows.len();
        let n = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * n);
        for row in rows {
            assert_eq!(row.len(), n);
            data.extend_from_slice(row);
        }
        Table { data, r, n }
    }

    pub fn from_flat(flat: &[i64], r: usize, n: usize) -> Table {
        Table::new(r, n, flat.to_vec())
    }

    pub fn flatten(&self) -> &[i64] {
        &self.data
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[i64]> {
        (0..self.r).map(|i| self.row(i))
    }

    /// The type of the table: the number of nonzero rows.
    pub fn table_type(&self) -> usize {
        self.rows().filter(|row| !vecops::is_zero(row)).count()
    }

    /// Append zero rows up to `r` rows total.
    pub fn pad(&self, r: usize) -> Result<Table> {
        if r < self.r {
            return Err(Error::PadTooSmall {
                rows: self.r,
                target: r,
            });
        }
        let mut data = self.data.clone();
        data.resize(r * self.n, 0);
        Ok(Table::new(r, self.n, data))
    }

    /// Signed row-multiplicity vector with respect to the columns of B:
    /// entry i counts rows equal to b_i minus rows equal to -b_i.
    ///
    /// Tables with a pair of opposite rows are rejected, as are rows that
    /// are not plus or minus a column of B.
    pub fn psi(&self, b: &Configuration) -> Result<Vec<i64>> {
        let nz: Vec<&[i64]> = self.rows().filter(|row| !vecops::is_zero(row)).collect();
        for i in 0..nz.len() {
            for j in i + 1..nz.len() {
                if vecops::is_zero(&vecops::checked_add(nz[i], nz[j])?) {
                    return Err(Error::OppositeRows);
                }
            }
        }
        let cols: Vec<Vec<i64>> = (0..b.n()).map(|j| b.column(j)).collect();
        let mut out = vec![0i64; b.n()];
        'rows: for (ri, row) in self.rows().enumerate() {
            if vecops::is_zero(row) {
                continue;
            }
            for (j, c) in cols.iter().enumerate() {
                if row == c.as_slice() {
                    out[j] = out[j].checked_add(1).ok_or(Error::Overflow)?;
                    continue 'rows;
                }
                if vecops::neg(c) == row {
                    out[j] = out[j].checked_sub(1).ok_or(Error::Overflow)?;
                    continue 'rows;
                }
            }
            return Err(Error::UnknownRow(ri));
        }
        Ok(out)
    }
}

/// The r-th Lawrence lifting of a base configuration.
#[derive(Debug, Clone)]
pub struct Lifting {
    base: Configuration,
    r: usize,
    matrix: Configuration,
}

impl Lifting {
    pub fn base(&self) -> &Configuration {
        &self.base
    }

    pub fn order(&self) -> usize {
        self.r
    }

    pub fn matrix(&self) -> &Configuration {
        &self.matrix
    }

    pub fn table_from_flat(&self, flat: &[i64]) -> Table {
        Table::from_flat(flat, self.r, self.base.n())
    }

    /// Graver basis computed through the lifting structure; agrees with the
    /// generic completion on the lifted matrix but scales much further.
    pub fn graver_basis(&self) -> Result<GraverBasis> {
        let elements = lifted_graver_moves(&self.base, self.r)?;
        Ok(GraverBasis::from_parts(self.matrix.clone(), elements))
    }
}

/// Build the (d*r + n) x (r*n) lifted configuration: r diagonal copies of
/// the base above a band of r identity blocks. Column (j, i) sits at index
/// j*n + i and represents cell (row j, base column i) of tables.
pub fn lift(base: &Configuration, r: usize) -> Result<Lifting> {
    assert!(r >= 1, "lifting order must be at least 1");
    let d = base.d();
    let n = base.n();
    let rows = d * r + n;
    let cols = r * n;
    let mut entries = vec![0i64; rows * cols];
    for j in 0..r {
        for i in 0..n {
            let col = j * n + i;
            for row in 0..d {
                entries[(j * d + row) * cols + col] = base.entry(row, i);
            }
            entries[(d * r + i) * cols + col] = 1;
        }
    }
    let matrix = Configuration::new(rows, cols, entries)?;
    Ok(Lifting {
        base: base.clone(),
        r,
        matrix,
    })
}

/// All kernel vectors of `base` lying conformally below `bound`
/// (including 0 and `bound` itself when it is in the kernel).
fn kernel_in_box(base: &Configuration, bound: &[i64]) -> Result<Vec<Vec<i64>>> {
    let n = bound.len();
    let mut out = Vec::new();
    let mut w = vec![0i64; n];
    loop {
        if base.in_kernel(&w)? {
            out.push(w.clone());
        }
        let mut pos = 0;
        loop {
            if pos == n {
                return Ok(out);
            }
            if w[pos] != bound[pos] {
                w[pos] += bound[pos].signum();
                break;
            }
            w[pos] = 0;
            pos += 1;
        }
    }
}

/// Exact conformal-indecomposability test for a table over the lifting:
/// the table (given by its nonzero rows) is a Graver element iff the only
/// row-wise conformal kernel subtables summing to zero are 0 and itself.
pub(crate) fn table_is_graver(base: &Configuration, rows: &[Vec<i64>]) -> Result<bool> {
    let p = rows.len();
    let n = base.n();
    let options: Vec<Vec<Vec<i64>>> = rows
        .iter()
        .map(|row| kernel_in_box(base, row))
        .collect::<Result<_>>()?;
    // per-coordinate remaining slack below each depth
    let mut cap = vec![vec![0i64; n]; p + 1];
    for i in (0..p).rev() {
        for j in 0..n {
            cap[i][j] = cap[i + 1][j] + rows[i][j].abs();
        }
    }
    // DFS over choices, rejecting the all-zero and all-full assignments
    fn dfs(
        depth: usize,
        sum: &mut Vec<i64>,
        all_zero: bool,
        all_full: bool,
        rows: &[Vec<i64>],
        options: &[Vec<Vec<i64>>],
        cap: &[Vec<i64>],
    ) -> bool {
        let p = rows.len();
        if depth == p {
            return !(all_zero || all_full) && vecops::is_zero(sum);
        }
        'opt: for w in &options[depth] {
            for j in 0..sum.len() {
                let s = sum[j] + w[j];
                if s.abs() > cap[depth + 1][j] {
                    continue 'opt;
                }
            }
            for j in 0..sum.len() {
                sum[j] += w[j];
            }
            let z = all_zero && vecops::is_zero(w);
            let f = all_full && w == &rows[depth];
            if dfs(depth + 1, sum, z, f, rows, options, cap) {
                for j in 0..sum.len() {
                    sum[j] -= w[j];
                }
                return true;
            }
            for j in 0..sum.len() {
                sum[j] -= w[j];
            }
        }
        false
    }
    let mut sum = vec![0i64; n];
    Ok(!dfs(0, &mut sum, true, true, rows, &options, &cap))
}

/// Set partitions of 0..t into at most `max_blocks` blocks, via restricted
/// growth strings. Calls `f` with the block assignment of each item.
fn for_each_partition<F: FnMut(&[usize], usize) -> Result<()>>(
    t: usize,
    max_blocks: usize,
    f: &mut F,
) -> Result<()> {
    fn rec<F: FnMut(&[usize], usize) -> Result<()>>(
        assign: &mut Vec<usize>,
        used: usize,
        t: usize,
        max_blocks: usize,
        f: &mut F,
    ) -> Result<()> {
        if assign.len() == t {
            return f(assign, used);
        }
        let limit = (used + 1).min(max_blocks);
        for b in 0..limit {
            assign.push(b);
            rec(assign, used.max(b + 1), t, max_blocks, f)?;
            assign.pop();
        }
        Ok(())
    }
    let mut assign = Vec::with_capacity(t);
    rec(&mut assign, 0, t, max_blocks, f)
}

/// Graver basis of the r-th lifting, generated from the base's Graver
/// basis: type-2 tables (b, -b), plus row-merges of the "pure" tables
/// whose signed row multiset is a Graver element of the Graver matrix,
/// each merge verified by the exact indecomposability test.
fn lifted_graver_moves(base: &Configuration, r: usize) -> Result<Vec<Move>> {
    let n = base.n();
    let b = graver::graver_basis(base)?;
    let mut out: HashSet<Vec<i64>> = HashSet::new();
    if b.is_empty() || r < 2 {
        return Ok(Vec::new());
    }
    // type-2 tables: b in one row, -b in another
    for mv in b.elements() {
        for i in 0..r {
            for j in 0..r {
                if i == j {
                    continue;
                }
                let mut flat = vec![0i64; r * n];
                flat[i * n..(i + 1) * n].copy_from_slice(mv.coords());
                let neg = mv.negated_coords();
                flat[j * n..(j + 1) * n].copy_from_slice(&neg);
                out.insert(canonical_flat(flat));
            }
        }
    }
    // pure tables and their row merges
    let bmat = b.to_matrix()?;
    let psi_basis = graver::graver_basis(&bmat)?;
    let mut verdict: HashMap<Vec<Vec<i64>>, bool> = HashMap::new();
    for psi in psi_basis.elements() {
        let mut items: Vec<Vec<i64>> = Vec::new();
        for (idx, &c) in psi.coords().iter().enumerate() {
            let col = b.elements()[idx].coords();
            for _ in 0..c.abs() {
                items.push(if c > 0 {
                    col.to_vec()
                } else {
                    vecops::neg(col)
                });
            }
        }
        let t = items.len();
        for_each_partition(t, r.min(t), &mut |assign, blocks| {
            if blocks < 2 {
                return Ok(()); // a single block sums to zero
            }
            let mut rows = vec![vec![0i64; n]; blocks];
            for (item, &blk) in items.iter().zip(assign) {
                rows[blk] = vecops::checked_add(&rows[blk], item)?;
            }
            if rows.iter().any(|row| vecops::is_zero(row)) {
                return Ok(());
            }
            let mut key = rows.clone();
            key.sort();
            let is_graver = match verdict.get(&key) {
                Some(&v) => v,
                None => {
                    let v = table_is_graver(base, &key)?;
                    verdict.insert(key.clone(), v);
                    v
                }
            };
            if is_graver {
                emit_arrangements(&key, r, n, &mut out);
            }
            Ok(())
        })?;
    }
    let mut moves: Vec<Move> = out
        .into_iter()
        .map(|flat| Move::primitive_canonical(&flat))
        .collect::<Result<_>>()?;
    moves.sort();
    moves.dedup();
    Ok(moves)
}

/// All distinct placements of the given nonzero rows into r slots.
fn emit_arrangements(rows: &[Vec<i64>], r: usize, n: usize, out: &mut HashSet<Vec<i64>>) {
    let p = rows.len();
    debug_assert!(p <= r);
    let mut slots: Vec<Option<usize>> = vec![None; r];
    fn rec(
        next: usize,
        rows: &[Vec<i64>],
        slots: &mut Vec<Option<usize>>,
        r: usize,
        n: usize,
        out: &mut HashSet<Vec<i64>>,
    ) {
        if next == rows.len() {
            let mut flat = vec![0i64; r * n];
            for (slot, content) in slots.iter().enumerate() {
                if let Some(row_idx) = content {
                    flat[slot * n..(slot + 1) * n].copy_from_slice(&rows[*row_idx]);
                }
            }
            out.insert(canonical_flat(flat));
            return;
        }
        // skip placements identical to an earlier equal row
        if next > 0 && rows[next] == rows[next - 1] {
            let prev_slot = slots
                .iter()
                .position(|s| *s == Some(next - 1))
                .expect("previous row placed");
            for slot in prev_slot + 1..r {
                if slots[slot].is_none() {
                    slots[slot] = Some(next);
                    rec(next + 1, rows, slots, r, n, out);
                    slots[slot] = None;
                }
            }
            return;
        }
        for slot in 0..r {
            if slots[slot].is_none() {
                slots[slot] = Some(next);
                rec(next + 1, rows, slots, r, n, out);
                slots[slot] = None;
            }
        }
    }
    rec(0, rows, &mut slots, r, n, out);
}

fn canonical_flat(mut flat: Vec<i64>) -> Vec<i64> {
    if flat.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
        flat = vecops::neg(&flat);
    }
    flat
}
