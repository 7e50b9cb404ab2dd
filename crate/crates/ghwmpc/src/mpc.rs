//! Matrix-product codes and their structure matrices.
//!
//! The matrix-product code [C_1, .., C_s] . A of length n*h takes one word
//! v_l from each constituent and mixes them into h blocks, block i being
//! sum_l a_{li} v_l. Constituents may be zero codes. The non-singular by
//! columns (NSC) property of A, the row-code distances delta_l, and the
//! Vandermonde and GRM structure matrices live here too.

use std::sync::Arc;

use crate::codes::{min_distance_with, LinearCode};
use crate::combin::combinations;
use crate::gfield::{Field, FieldElement};
use crate::linalg::Matrix;
use crate::{EnumOptions, Error, Result};

/// A matrix-product code together with the data it was built from.
#[derive(Clone, Debug)]
pub struct MpcCode {
    constituents: Vec<LinearCode>,
    matrix: Matrix,
    code: LinearCode,
}

impl MpcCode {
    /// Number of constituent codes (rows of A).
    pub fn s(&self) -> usize {
        self.constituents.len()
    }

    /// Number of blocks (columns of A).
    pub fn h(&self) -> usize {
        self.matrix.cols()
    }

    /// Common length of the constituents; the code itself has length n*h.
    pub fn n(&self) -> usize {
        self.constituents[0].n()
    }

    pub fn dim(&self) -> usize {
        self.code.dim()
    }

    pub fn code(&self) -> &LinearCode {
        &self.code
    }

    pub fn constituents(&self) -> &[LinearCode] {
        &self.constituents
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn field(&self) -> &Arc<Field> {
        self.code.field()
    }
}

/// Builds [C_1, .., C_s] . A. Requires matching fields, a common length,
/// and a full-rank A (which makes the dimension additive). A does not have
/// to be NSC and the constituents do not have to be nested; bounds that
/// need those properties re-check them.
pub fn mpc_construct(constituents: &[LinearCode], a: &Matrix) -> Result<MpcCode> {
    let s = a.rows();
    let h = a.cols();
    if s == 0 || s > h {
        return Err(Error::Shape(format!(
            "structure matrix must be s x h with 1 <= s <= h, got {s} x {h}"
        )));
    }
    if constituents.len() != s {
        return Err(Error::Shape(format!(
            "{} constituent codes for a structure matrix with {s} rows",
            constituents.len()
        )));
    }
    let field = a.field();
    let n = constituents[0].n();
    for c in constituents {
        if c.field() != field {
            return Err(Error::Shape(
                "constituents and structure matrix must share a field".into(),
            ));
        }
        if c.n() != n {
            return Err(Error::Shape(
                "constituent codes must share a common length".into(),
            ));
        }
    }
    if a.rank() != s {
        return Err(Error::Precondition(format!(
            "structure matrix must have full rank {s}"
        )));
    }

    let want_dim: usize = constituents.iter().map(|c| c.dim()).sum();
    let mut data: Vec<FieldElement> = Vec::with_capacity(want_dim * n * h);
    for (l, c) in constituents.iter().enumerate() {
        for row in 0..c.dim() {
            let v = c.generator().row(row);
            for i in 0..h {
                let coef = a.get(l, i);
                for &e in v {
                    data.push(field.mul(coef, e));
                }
            }
        }
    }
    let gen = Matrix::new(field.clone(), want_dim, n * h, data)?;
    let code = LinearCode::from_generator(&gen);
    if code.dim() != want_dim {
        return Err(Error::Internal(
            "full-rank structure matrix did not give an additive dimension".into(),
        ));
    }
    Ok(MpcCode {
        constituents: constituents.to_vec(),
        matrix: a.clone(),
        code,
    })
}

/// Result of the non-singular-by-columns check. On failure, `witness`
/// holds the first offending minor in lexicographic (t, columns) order;
/// columns are 1-based as in the A(j_1, .., j_t) notation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NscReport {
    pub is_nsc: bool,
    pub witness: Option<(usize, Vec<usize>)>,
}

/// Checks every t x t minor of the first t rows of `a`, for t up to s.
pub fn is_nsc(a: &Matrix) -> Result<NscReport> {
    let s = a.rows();
    let h = a.cols();
    if s == 0 || s > h {
        return Err(Error::Shape(format!(
            "NSC is defined for s x h matrices with 1 <= s <= h, got {s} x {h}"
        )));
    }
    for t in 1..=s {
        for cols in combinations(h, t) {
            let mut data = Vec::with_capacity(t * t);
            for row in 0..t {
                for &c in &cols {
                    data.push(a.get(row, c));
                }
            }
            let minor = Matrix::new(a.field().clone(), t, t, data)?;
            if minor.rank() < t {
                return Ok(NscReport {
                    is_nsc: false,
                    witness: Some((t, cols.iter().map(|&c| c + 1).collect())),
                });
            }
        }
    }
    Ok(NscReport {
        is_nsc: true,
        witness: None,
    })
}

/// Errors with the witness minor unless `a` is NSC.
pub fn require_nsc(a: &Matrix) -> Result<()> {
    let report = is_nsc(a)?;
    match report.witness {
        None => Ok(()),
        Some((t, cols)) => Err(Error::NotNsc { t, cols }),
    }
}

/// delta_l: minimum distance of the length-h code spanned by the first l
/// rows of A. For an NSC matrix this is h - l + 1.
pub fn row_code_delta(a: &Matrix, ell: usize) -> Result<u64> {
    row_code_delta_with(a, ell, &EnumOptions::default())
}

pub fn row_code_delta_with(a: &Matrix, ell: usize, opts: &EnumOptions) -> Result<u64> {
    if ell == 0 || ell > a.rows() {
        return Err(Error::Range(format!(
            "row index {ell} out of range for a matrix with {} rows",
            a.rows()
        )));
    }
    let rows: Vec<Vec<u32>> = (0..ell)
        .map(|r| a.row(r).iter().map(|e| e.value() as u32).collect())
        .collect();
    let row_code = LinearCode::from_generator(&Matrix::from_rows(a.field().clone(), &rows)?);
    min_distance_with(&row_code, opts)
}

/// The s x |nodes| matrix with entry (i, j) = node_j^i, i = 0..s-1.
pub fn vandermonde_matrix(field: Arc<Field>, s: usize, nodes: &[FieldElement]) -> Result<Matrix> {
    if s == 0 || s > nodes.len() {
        return Err(Error::Shape(format!(
            "Vandermonde matrix needs 1 <= s <= number of nodes, got s = {s} with {} nodes",
            nodes.len()
        )));
    }
    for (i, a) in nodes.iter().enumerate() {
        for b in &nodes[i + 1..] {
            if a == b {
                return Err(Error::Precondition(format!(
                    "Vandermonde nodes must be distinct, {a} repeats"
                )));
            }
        }
    }
    let mut data = Vec::with_capacity(s * nodes.len());
    for i in 0..s {
        for &x in nodes {
            data.push(field.pow(x, i as u64));
        }
    }
    Matrix::new(field, s, nodes.len(), data)
}

/// The q x q matrix with entries prod_{l<i} (a_j - a_l) / (a_i - a_l) over
/// the canonical element order a_1 = 0, a_2 = 1, ... It is upper
/// unitriangular and NSC, and realizes the Reed-Muller recursion.
pub fn grm_matrix(field: Arc<Field>) -> Matrix {
    let q = field.q() as usize;
    let alphas: Vec<FieldElement> = field.elements().collect();
    let mut data = Vec::with_capacity(q * q);
    for i in 0..q {
        // The denominator depends only on the row.
        let mut den = field.one();
        for l in 0..i {
            den = field.mul(den, field.sub(alphas[i], alphas[l]));
        }
        let den_inv = field.inv(den).expect("distinct elements give a nonzero product");
        for j in 0..q {
            let mut num = field.one();
            for l in 0..i {
                num = field.mul(num, field.sub(alphas[j], alphas[l]));
            }
            data.push(field.mul(num, den_inv));
        }
    }
    Matrix::new(field, q, q, data).expect("q x q entries are constructed in-field")
}
