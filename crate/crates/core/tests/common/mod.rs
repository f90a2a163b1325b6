//! Shared fixtures for the integration suites.

#![allow(dead_code)]

use lawrence_core::{model_matrix, parse_brackets, Configuration, ModelSpec};

/// The running example: (3 2 1 0 / 0 1 2 3).
pub fn tc() -> Configuration {
    Configuration::new(2, 4, vec![3, 2, 1, 0, 0, 1, 2, 3]).unwrap()
}

/// Graver elements of the twisted cubic.
pub fn tc_graver_vectors() -> Vec<Vec<i64>> {
    vec![
        vec![1, -2, 1, 0],
        vec![1, -1, -1, 1],
        vec![0, 1, -2, 1],
        vec![1, 0, -3, 2],
        vec![2, -3, 0, 1],
    ]
}

/// The 4x5 Graver matrix of the twisted cubic in the reference column
/// order (1,-2,1,0),(2,-3,0,1),(1,-1,-1,1),(1,0,-3,2),(0,1,-2,1).
pub fn tc_graver_matrix_reference_order() -> Configuration {
    Configuration::from_rows(&[
        vec![1, 2, 1, 1, 0],
        vec![-2, -3, -1, 0, 1],
        vec![1, 0, -1, -3, -2],
        vec![0, 1, 1, 2, 1],
    ])
    .unwrap()
}

/// One-row base {1, 2, 1} of the boundary example.
pub fn base_121() -> Configuration {
    Configuration::new(1, 3, vec![1, 2, 1]).unwrap()
}

/// 4x3 table that is conformally indecomposable over the 4th lifting.
pub fn u_prime_rows() -> Vec<Vec<i64>> {
    vec![
        vec![0, -1, 2],
        vec![2, -1, 0],
        vec![-1, 1, -1],
        vec![-1, 1, -1],
    ]
}

/// The 3x3 merge of the same table; decomposable over the 3rd lifting.
pub fn u_rows() -> Vec<Vec<i64>> {
    vec![vec![0, -1, 2], vec![2, -1, 0], vec![-2, 2, -2]]
}

/// The mother configuration of the face-separation example.
pub fn a_mother() -> Configuration {
    Configuration::from_rows(&[
        vec![4, 0, 0, 2, 1, 1],
        vec![0, 4, 0, 1, 2, 1],
        vec![0, 0, 4, 1, 1, 2],
    ])
    .unwrap()
}

/// Its companion: same oriented matroid, yet the third liftings have
/// different face lattices. The symmetric variant with first column
/// (6,-1,-1) does not separate (an explicit functional exists for it);
/// breaking the symmetry does.
pub fn a_mother_prime() -> Configuration {
    Configuration::from_rows(&[
        vec![6, 0, 0, 2, 1, 1],
        vec![-1, 4, 0, 1, 2, 1],
        vec![0, 0, 4, 1, 1, 2],
    ])
    .unwrap()
}

/// The functional certifying the face of the third lifting of a_mother.
pub fn face_functional() -> Vec<i64> {
    vec![3, -1, -1, -1, 3, -1, -1, -1, 3, 4, 4, 4, 0, 0, 0]
}

/// The 3x6 sign pattern of that face, flattened in lifting column order
/// (row-block j, base column i) -> j*6 + i.
pub fn face_sign_pattern() -> String {
    ["+00+00", "0+00+0", "00+00+"].concat()
}

/// The independence model for 3x3 tables.
pub fn delta22() -> Configuration {
    let spec = ModelSpec::new(&parse_brackets("[1][2]").unwrap(), vec![3, 3]).unwrap();
    model_matrix(&spec).unwrap()
}

/// Five 3x3 moves and multiplicities whose weighted sum is the zero
/// matrix; the multiplicity vector attains the complexity bound 9.
pub fn delta22_decomposition() -> (Vec<Vec<i64>>, Vec<i64>) {
    let moves = vec![
        vec![1, -1, 0, 0, 0, 0, -1, 1, 0],
        vec![-1, 1, 0, 0, -1, 1, 1, 0, -1],
        vec![1, 0, -1, -1, 1, 0, 0, -1, 1],
        vec![-1, 0, 1, 0, 1, -1, 1, -1, 0],
        vec![0, 1, -1, 1, -1, 0, -1, 0, 1],
    ];
    (moves, vec![3, 2, 1, 2, 1])
}

pub fn flat_from_rows(rows: &[Vec<i64>]) -> Vec<i64> {
    rows.iter().flatten().copied().collect()
}
