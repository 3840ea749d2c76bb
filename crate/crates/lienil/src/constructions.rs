//! The named algebras: matrix families gl/t/u/sl with structure constants
//! derived from matrix commutators, plus the two small bracket-table
//! examples. Basis orders are fixed; downstream index maps depend on them.
//!
//!   t(n): upper triangular E_ij (i <= j), row-major; t(2) = (E11, E12, E22)
//!   u(n): strictly upper E_ij (i < j), row-major; u(3) = (E12, E13, E23)
//!   gl(n): all E_ij, row-major; gl(2) = (E11, E12, E21, E22)
//!   sl(n): E_ij (i != j) row-major, then H_i = E_ii - E_{i+1,i+1}

use std::sync::Arc;

use crate::algebra::LieAlgebra;
use crate::field::Field;
use crate::linalg::{solve_coords, Mat};

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum MatrixFamily {
    Gl,
    T,
    U,
    Sl,
}

/// Labeled basis matrices for a family, in the documented order.
pub fn basis_matrices(family: MatrixFamily, n: usize, f: &Field) -> (Vec<String>, Vec<Mat>) {
    assert!(n >= 1, "matrix algebras need n >= 1");
    let unit = |i: usize, j: usize| {
        let mut m = Mat::zeros(f, n, n);
        m.set(i, j, f.one());
        m
    };
    let mut labels = Vec::new();
    let mut mats = Vec::new();
    match family {
        MatrixFamily::Gl => {
            for i in 0..n {
                for j in 0..n {
                    labels.push(format!("E{}{}", i + 1, j + 1));
                    mats.push(unit(i, j));
                }
            }
        }
        MatrixFamily::T => {
            for i in 0..n {
                for j in i..n {
                    labels.push(format!("E{}{}", i + 1, j + 1));
                    mats.push(unit(i, j));
                }
            }
        }
        MatrixFamily::U => {
            for i in 0..n {
                for j in i + 1..n {
                    labels.push(format!("E{}{}", i + 1, j + 1));
                    mats.push(unit(i, j));
                }
            }
        }
        MatrixFamily::Sl => {
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        labels.push(format!("E{}{}", i + 1, j + 1));
                        mats.push(unit(i, j));
                    }
                }
            }
            for i in 0..n - 1 {
                let mut m = Mat::zeros(f, n, n);
                m.set(i, i, f.one());
                m.set(i + 1, i + 1, f.neg(f.one()));
                labels.push(format!("H{}", i + 1));
                mats.push(m);
            }
        }
    }
    (labels, mats)
}

fn flatten(m: &Mat) -> Vec<crate::field::FieldElement> {
    let mut v = Vec::with_capacity(m.rows() * m.cols());
    for i in 0..m.rows() {
        v.extend_from_slice(m.row(i));
    }
    v
}

pub fn commutator(f: &Field, a: &Mat, b: &Mat) -> Mat {
    let ab = a.matmul(f, b);
    let ba = b.matmul(f, a);
    let mut out = Mat::zeros(f, a.rows(), a.cols());
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            out.set(i, j, f.sub(ab.get(i, j), ba.get(i, j)));
        }
    }
    out
}

/// Structure constants of a commutator-closed matrix basis: compute each
/// basis commutator and express it back in the basis.
fn algebra_from_matrices(field: Arc<Field>, labels: Vec<String>, mats: &[Mat]) -> LieAlgebra {
    let f = &*field;
    let dim = mats.len();
    let rows: Vec<Vec<crate::field::FieldElement>> = mats.iter().map(flatten).collect();
    let cols = if dim == 0 { 0 } else { rows[0].len() };
    let basis = Mat::from_rows(cols, &rows);
    let mut sc = vec![f.zero(); dim * dim * dim];
    for i in 0..dim {
        for j in 0..dim {
            let comm = commutator(f, &mats[i], &mats[j]);
            let coords = solve_coords(f, &basis, &flatten(&comm))
                .expect("commutator left the span of the basis");
            for k in 0..dim {
                sc[(i * dim + j) * dim + k] = coords[k];
            }
        }
    }
    LieAlgebra::new(field, labels, sc).expect("matrix commutators satisfy the Lie axioms")
}

fn matrix_algebra(family: MatrixFamily, n: usize, field: Arc<Field>) -> LieAlgebra {
    let (labels, mats) = basis_matrices(family, n, &field);
    algebra_from_matrices(field, labels, &mats)
}

/// All n x n matrices under the commutator bracket.
pub fn gl(n: usize, field: Arc<Field>) -> LieAlgebra {
    matrix_algebra(MatrixFamily::Gl, n, field)
}

/// Upper triangular n x n matrices.
pub fn t(n: usize, field: Arc<Field>) -> LieAlgebra {
    matrix_algebra(MatrixFamily::T, n, field)
}

/// Strictly upper triangular n x n matrices.
pub fn u(n: usize, field: Arc<Field>) -> LieAlgebra {
    matrix_algebra(MatrixFamily::U, n, field)
}

/// Traceless n x n matrices with the standard basis.
pub fn sl(n: usize, field: Arc<Field>) -> LieAlgebra {
    matrix_algebra(MatrixFamily::Sl, n, field)
}

/// Basis {x, y} with [x, y] = y: solvable, not nilpotent.
pub fn two_dim_nonabelian(field: Arc<Field>) -> LieAlgebra {
    LieAlgebra::from_brackets(field, vec!["x".into(), "y".into()], &[(0, 1, 1, 1)])
        .expect("fixed table is valid")
}

/// Basis {e, f, g} with [e, f] = 0, [e, g] = e, [f, g] = f.
pub fn three_dim_example(field: Arc<Field>) -> LieAlgebra {
    LieAlgebra::from_brackets(
        field,
        vec!["e".into(), "f".into(), "g".into()],
        &[(0, 2, 0, 1), (1, 2, 1, 1)],
    )
    .expect("fixed table is valid")
}
