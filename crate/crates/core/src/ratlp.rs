//! Exact rational linear feasibility.
//!
//! Solves homogeneous strict systems normalized to `E x = 0`, `G x >= 1`
//! (the right-hand side 1 is valid because the systems of interest are
//! homogeneous in x). Two-phase dense simplex over BigRational with
//! Bland's rule, so termination is guaranteed and there are no tolerances.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Find x with eq_i . x = 0 for all rows of `eq` and in_i . x >= 1 for all
/// rows of `ineq`. Returns None iff infeasible. All rows must share one
/// length (the dimension); with no inequality rows, x = 0 is returned.
pub fn feasible_point(
    eq: &[Vec<BigRational>],
    ineq: &[Vec<BigRational>],
) -> Option<Vec<BigRational>> {
    let m = eq
        .first()
        .or_else(|| ineq.first())
        .map(|r| r.len())
        .unwrap_or(0);
    if ineq.is_empty() {
        return Some(vec![BigRational::zero(); m]);
    }
    let e = eq.len();
    let k = ineq.len();
    let rows = e + k;
    // structural variables: u(m), v(m) with x = u - v, slacks s(k)
    let n_struct = 2 * m + k;
    let n_total = n_struct + rows; // + artificials
    let mut t: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); n_total + 1]; rows];
    for (i, row) in eq.iter().enumerate() {
        for j in 0..m {
            t[i][j] = row[j].clone();
            t[i][m + j] = -row[j].clone();
        }
        // rhs 0
    }
    for (i, row) in ineq.iter().enumerate() {
        let r = e + i;
        for j in 0..m {
            t[r][j] = row[j].clone();
            t[r][m + j] = -row[j].clone();
        }
        t[r][2 * m + i] = -BigRational::one(); // surplus
        t[r][n_total] = BigRational::one(); // rhs
    }
    for i in 0..rows {
        t[i][n_struct + i] = BigRational::one(); // artificial
    }
    let mut basis: Vec<usize> = (0..rows).map(|i| n_struct + i).collect();
    // phase-1 reduced costs: z_j = -sum_i t[i][j] for structural columns,
    // 0 for artificials; objective value = -sum of rhs
    let mut obj: Vec<BigRational> = vec![BigRational::zero(); n_total + 1];
    for j in 0..=n_total {
        let mut s = BigRational::zero();
        for row in t.iter() {
            s += &row[j];
        }
        obj[j] = -s;
    }
    for i in 0..rows {
        obj[n_struct + i] = BigRational::zero();
    }

    loop {
        // Bland: smallest-index column with negative reduced cost
        let Some(enter) = (0..n_total).find(|&j| obj[j].is_negative()) else {
            break;
        };
        // ratio test, Bland tie-break on basis variable index
        let mut leave: Option<usize> = None;
        let mut best: Option<BigRational> = None;
        for i in 0..rows {
            if t[i][enter].is_positive() {
                let ratio = &t[i][n_total] / &t[i][enter];
                let better = match &best {
                    None => true,
                    Some(b) => {
                        ratio < *b
                            || (ratio == *b
                                && basis[i] < basis[leave.expect("leave set with best")])
                    }
                };
                if better {
                    best = Some(ratio);
                    leave = Some(i);
                }
            }
        }
        let leave = leave?; // unbounded phase-1 cannot happen; defensive
        pivot(&mut t, &mut obj, leave, enter, n_total);
        basis[leave] = enter;
    }

    if !obj[n_total].is_zero() {
        return None; // positive phase-1 optimum: infeasible
    }
    let mut u = vec![BigRational::zero(); m];
    let mut v = vec![BigRational::zero(); m];
    for i in 0..rows {
        let b = basis[i];
        if b < m {
            u[b] = t[i][n_total].clone();
        } else if b < 2 * m {
            v[b - m] = t[i][n_total].clone();
        }
    }
    Some((0..m).map(|j| &u[j] - &v[j]).collect())
}

fn pivot(
    t: &mut [Vec<BigRational>],
    obj: &mut [BigRational],
    leave: usize,
    enter: usize,
    width: usize,
) {
    let p = t[leave][enter].clone();
    for j in 0..=width {
        t[leave][j] = &t[leave][j] / &p;
    }
    for i in 0..t.len() {
        if i == leave || t[i][enter].is_zero() {
            continue;
        }
        let f = t[i][enter].clone();
        for j in 0..=width {
            let d = &t[leave][j] * &f;
            t[i][j] = &t[i][j] - d;
        }
    }
    if !obj[enter].is_zero() {
        let f = obj[enter].clone();
        for j in 0..=width {
            let d = &t[leave][j] * &f;
            obj[j] = &obj[j] - d;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn rat(i: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(i))
    }

    #[test]
    fn strictly_positive_functional_exists() {
        // columns of the twisted cubic all lie in the open halfplane x+y>0
        let cols = [[3, 0], [2, 1], [1, 2], [0, 3]];
        let ineq: Vec<Vec<BigRational>> = cols
            .iter()
            .map(|c| c.iter().map(|&x| rat(x)).collect())
            .collect();
        let x = feasible_point(&[], &ineq).unwrap();
        for c in &cols {
            let dot: BigRational = c.iter().zip(&x).map(|(&a, v)| rat(a) * v).sum();
            assert!(dot >= rat(1));
        }
    }

    #[test]
    fn opposite_columns_are_infeasible() {
        let ineq = vec![vec![rat(1)], vec![rat(-1)]];
        assert!(feasible_point(&[], &ineq).is_none());
    }

    #[test]
    fn equalities_are_respected() {
        // x1 = x2, x1 + x2 >= 1
        let eq = vec![vec![rat(1), rat(-1)]];
        let ineq = vec![vec![rat(1), rat(1)]];
        let x = feasible_point(&eq, &ineq).unwrap();
        assert_eq!(x[0], x[1]);
        assert!(&x[0] + &x[1] >= rat(1));
    }

    #[test]
    fn no_inequalities_gives_zero() {
        let eq = vec![vec![rat(2), rat(3)]];
        let x = feasible_point(&eq, &[]).unwrap();
        assert!(x.iter().all(|v| v.is_zero()));
    }
}
