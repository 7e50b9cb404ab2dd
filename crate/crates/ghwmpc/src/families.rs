//! Reed-Solomon and q-ary Reed-Muller code constructors.
//!
//! Both families are defined by evaluation over the canonical element
//! order of the field, so two calls with equal parameters build identical
//! generator matrices. Reed-Muller codes come in two equivalent forms: as
//! evaluations of reduced monomials, and through the recursive
//! matrix-product construction over the GRM matrix.

use std::sync::Arc;

use crate::codes::LinearCode;
use crate::gfield::{Field, FieldElement};
use crate::linalg::Matrix;
use crate::mpc::{grm_matrix, mpc_construct, vandermonde_matrix};
use crate::{Error, Result};

/// RS(n, k): evaluations of polynomials of degree < k at the first n
/// field elements. Requires 1 <= k <= n <= q.
pub fn rs_code(field: Arc<Field>, n: usize, k: usize) -> Result<LinearCode> {
    if n > field.q() as usize {
        return Err(Error::Range(format!(
            "Reed-Solomon length {n} exceeds the field size {}",
            field.q()
        )));
    }
    let points: Vec<FieldElement> = field.elements().take(n).collect();
    rs_code_with_points(field, &points, k)
}

/// RS over explicit distinct evaluation points. Requires 1 <= k <= n.
pub fn rs_code_with_points(
    field: Arc<Field>,
    points: &[FieldElement],
    k: usize,
) -> Result<LinearCode> {
    if k == 0 || k > points.len() {
        return Err(Error::Range(format!(
            "Reed-Solomon dimension {k} must satisfy 1 <= k <= {}",
            points.len()
        )));
    }
    let gen = vandermonde_matrix(field, k, points)?;
    Ok(LinearCode::from_generator(&gen))
}

/// Exponent vectors of the reduced monomials x^e with every e_j <= q - 1
/// and total degree <= nu, in graded lexicographic order.
fn reduced_exponents(q: usize, nu: i64, m: usize) -> Vec<Vec<usize>> {
    if nu < 0 {
        return Vec::new();
    }
    let cap = (nu as usize).min(m * (q - 1));
    let mut out = Vec::new();
    let mut stack = vec![(Vec::<usize>::new(), 0usize)];
    while let Some((prefix, used)) = stack.pop() {
        if prefix.len() == m {
            out.push(prefix);
            continue;
        }
        // Reverse push order keeps the traversal lexicographic.
        for e in (0..=(q - 1).min(cap - used)).rev() {
            let mut next = prefix.clone();
            next.push(e);
            stack.push((next, used + e));
        }
    }
    out.sort_by_key(|e| (e.iter().sum::<usize>(), e.clone()));
    out
}

/// RM_q(nu, m): evaluations of the reduced monomials of total degree at
/// most nu at all q^m points. Point t has coordinates x_j = element
/// number (t / q^j) mod q. Negative nu gives the zero code; nu at least
/// m(q - 1) gives the full space.
pub fn rm_code(field: Arc<Field>, nu: i64, m: usize) -> Result<LinearCode> {
    let q = field.q() as usize;
    let length = q.checked_pow(m as u32).filter(|&l| l <= 1 << 20).ok_or_else(|| {
        Error::Range(format!("Reed-Muller length {q}^{m} is out of range"))
    })?;
    let exponents = reduced_exponents(q, nu, m);
    if exponents.is_empty() {
        return Ok(LinearCode::zero(field, length));
    }
    let alphas: Vec<FieldElement> = field.elements().collect();
    let mut data = Vec::with_capacity(exponents.len() * length);
    for e in &exponents {
        for t in 0..length {
            let mut val = field.one();
            let mut rest = t;
            for &ej in e.iter() {
                let x = alphas[rest % q];
                rest /= q;
                val = field.mul(val, field.pow(x, ej as u64));
            }
            data.push(val);
        }
    }
    let gen = Matrix::new(field, exponents.len(), length, data)?;
    Ok(LinearCode::from_generator(&gen))
}

/// The right-hand side of the Reed-Muller recursion:
/// [RM(nu, m-1), RM(nu - 1, m-1), .., RM(nu - q + 1, m-1)] . GRM.
/// Equals rm_code(nu, m) as a code. Requires m >= 1.
pub fn rm_recursive_rhs(field: Arc<Field>, nu: i64, m: usize) -> Result<LinearCode> {
    if m == 0 {
        return Err(Error::Range(
            "the Reed-Muller recursion needs at least one variable".into(),
        ));
    }
    let q = field.q() as i64;
    let constituents: Vec<LinearCode> = (0..q)
        .map(|i| rm_code(field.clone(), nu - i, m - 1))
        .collect::<Result<_>>()?;
    let a = grm_matrix(field);
    let mpc = mpc_construct(&constituents, &a)?;
    Ok(mpc.code().clone())
}
