//! Dense exact linear algebra over a [`Field`].
//!
//! Everything is built on reduced row echelon form. RREF is unique for a
//! given row space, so matrices in RREF with zero rows dropped double as
//! canonical representatives: two row spaces are equal iff their canonical
//! matrices compare equal entry for entry.

use std::sync::Arc;

use crate::gfield::{Field, FieldElement};
use crate::{Error, Result};

/// Row-major matrix with entries in a shared [`Field`].
#[derive(Clone)]
pub struct Matrix {
    field: Arc<Field>,
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.rows == other.rows
            && self.cols == other.cols
            && self.data == other.data
    }
}

impl Eq for Matrix {}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{} over GF({})", self.rows, self.cols, self.field.q())?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|e| e.to_string()).collect();
            writeln!(f, "  [{}]", row.join(" "))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn new(
        field: Arc<Field>,
        rows: usize,
        cols: usize,
        data: Vec<FieldElement>,
    ) -> Result<Matrix> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{}x{} matrix needs {} entries, got {}",
                rows,
                cols,
                rows * cols,
                data.len()
            )));
        }
        if data.iter().any(|e| e.value() as u32 >= field.q()) {
            return Err(Error::Range(
                "matrix entry is not an element of the declared field".into(),
            ));
        }
        Ok(Matrix { field, rows, cols, data })
    }

    /// Builds a matrix from unsigned integer encodings.
    pub fn from_rows(field: Arc<Field>, rows: &[Vec<u32>]) -> Result<Matrix> {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::Shape("ragged rows in matrix literal".into()));
            }
            for &v in r {
                data.push(field.elem(v)?);
            }
        }
        Matrix::new(field, rows.len(), cols, data)
    }

    pub fn zeros(field: Arc<Field>, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            data: vec![FieldElement::ZERO; rows * cols],
        }
    }

    pub fn identity(field: Arc<Field>, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, FieldElement::ONE);
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> FieldElement {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: FieldElement) {
        self.data[r * self.cols + c] = v;
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[FieldElement] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.field.clone(), self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c));
            }
        }
        out
    }

    pub fn matmul(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::Shape("matrix product across different fields".into()));
        }
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Matrix::zeros(self.field.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let cur = out.get(i, j);
                    out.set(i, j, f.add(cur, f.mul(a, other.get(k, j))));
                }
            }
        }
        Ok(out)
    }

    /// Vertical stack; both operands keep their column count.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field || self.cols != other.cols {
            return Err(Error::Shape("vertical stack needs matching columns and field".into()));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix::new(self.field.clone(), self.rows + other.rows, self.cols, data)
    }

    /// New matrix keeping only the listed columns, in the given order.
    pub fn select_cols(&self, cols: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.field.clone(), self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                out.set(r, j, self.get(r, c));
            }
        }
        out
    }

    /// Reduced row echelon form with zero rows dropped, plus the pivot
    /// columns in increasing order. The result is the canonical
    /// representative of the row space.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let rank = pivots.len();
        m.data.truncate(rank * m.cols);
        m.rows = rank;
        (m, pivots)
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field.clone();
        let mut pivots = Vec::new();
        let mut pr = 0;
        for pc in 0..self.cols {
            // Find a pivot at or below pr in column pc.
            let Some(sel) = (pr..self.rows).find(|&r| !self.get(r, pc).is_zero()) else {
                continue;
            };
            self.swap_rows(pr, sel);
            let inv = f
                .inv(self.get(pr, pc))
                .expect("pivot entry is nonzero by selection");
            self.scale_row(pr, inv);
            for r in 0..self.rows {
                if r != pr {
                    let factor = self.get(r, pc);
                    if !factor.is_zero() {
                        self.row_axpy(r, pr, f.neg(factor));
                    }
                }
            }
            pivots.push(pc);
            pr += 1;
            if pr == self.rows {
                break;
            }
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, s: FieldElement) {
        let f = self.field.clone();
        for c in 0..self.cols {
            let v = self.get(r, c);
            self.set(r, c, f.mul(v, s));
        }
    }

    /// row[dst] += s * row[src]
    fn row_axpy(&mut self, dst: usize, src: usize, s: FieldElement) {
        let f = self.field.clone();
        for c in 0..self.cols {
            let add = f.mul(s, self.get(src, c));
            if !add.is_zero() {
                let v = self.get(dst, c);
                self.set(dst, c, f.add(v, add));
            }
        }
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref_in_place().len()
    }

    /// Basis of the right kernel {x : M x = 0}, canonicalized, one solution
    /// per row. The row count is cols - rank.
    pub fn kernel(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let rank = pivots.len();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let f = &self.field;
        let mut basis = Matrix::zeros(self.field.clone(), free.len(), self.cols);
        for (i, &fc) in free.iter().enumerate() {
            basis.set(i, fc, FieldElement::ONE);
            for (pi, &pc) in pivots.iter().enumerate() {
                basis.set(i, pc, f.neg(r.get(pi, fc)));
            }
        }
        debug_assert_eq!(basis.rows, self.cols - rank);
        let (canon, _) = basis.rref();
        canon
    }

    /// Canonical basis of the sum of the two row spaces.
    pub fn row_space_sum(&self, other: &Matrix) -> Result<Matrix> {
        let (sum, _) = self.vstack(other)?.rref();
        Ok(sum)
    }

    /// Canonical basis of the intersection of the two row spaces, computed
    /// by row-reducing the stacked block matrix [A A; B 0]: rows whose left
    /// half vanishes carry the intersection in their right half.
    pub fn row_space_intersection(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field || self.cols != other.cols {
            return Err(Error::Shape("intersection needs matching columns and field".into()));
        }
        let n = self.cols;
        let mut block = Matrix::zeros(self.field.clone(), self.rows + other.rows, 2 * n);
        for r in 0..self.rows {
            for c in 0..n {
                let v = self.get(r, c);
                block.set(r, c, v);
                block.set(r, n + c, v);
            }
        }
        for r in 0..other.rows {
            for c in 0..n {
                block.set(self.rows + r, c, other.get(r, c));
            }
        }
        let (red, _) = block.rref();
        let mut rows: Vec<Vec<u32>> = Vec::new();
        for r in 0..red.rows() {
            if (0..n).all(|c| red.get(r, c).is_zero()) {
                rows.push((n..2 * n).map(|c| red.get(r, c).value() as u32).collect());
            }
        }
        if rows.is_empty() {
            return Ok(Matrix::zeros(self.field.clone(), 0, n));
        }
        let (canon, _) = Matrix::from_rows(self.field.clone(), &rows)?.rref();
        Ok(canon)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(q: u32) -> Arc<Field> {
        Arc::new(Field::from_order(q).unwrap())
    }

    fn m(q: u32, rows: &[Vec<u32>]) -> Matrix {
        Matrix::from_rows(f(q), rows).unwrap()
    }

    #[test]
    fn rref_drops_zero_rows_and_reports_pivots() {
        // Rank-2 input with a dependent third row.
        let a = m(3, &[vec![1, 2, 0], vec![0, 1, 1], vec![1, 0, 1]]);
        let (r, pivots) = a.rref();
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(r.rows(), 2);
        assert_eq!(r.row(0).iter().map(|e| e.value()).collect::<Vec<_>>(), [1, 0, 1]);
        assert_eq!(r.row(1).iter().map(|e| e.value()).collect::<Vec<_>>(), [0, 1, 1]);
    }

    #[test]
    fn rref_is_canonical_for_the_row_space() {
        // Same row space written two ways: b's rows are r1 + r2 and
        // r1 + 2 r2 of a.
        let a = m(5, &[vec![1, 2, 3], vec![0, 1, 4]]);
        let b = m(5, &[vec![1, 3, 2], vec![1, 4, 1]]);
        assert_eq!(a.rref().0, b.rref().0);
    }

    #[test]
    fn rank_of_fixture_generator() {
        let g1 = m(
            3,
            &[
                vec![0, 1, 0, 0, 0, 1, 1, 0],
                vec![2, 1, 0, 1, 2, 1, 0, 1],
                vec![2, 1, 2, 1, 1, 1, 1, 0],
            ],
        );
        assert_eq!(g1.rank(), 3);
        assert_eq!(g1.rref().0.rows(), 3);
    }

    #[test]
    fn kernel_dimension_matches_rank_nullity() {
        let a = m(2, &[vec![1, 0, 1, 1], vec![0, 1, 1, 0]]);
        let k = a.kernel();
        assert_eq!(k.rows(), 2);
        // Every kernel row really solves M x = 0.
        let prod = a.matmul(&k.transpose()).unwrap();
        assert!(prod.is_zero());
    }

    #[test]
    fn kernel_of_full_rank_square_is_empty() {
        let a = Matrix::identity(f(7), 4);
        assert_eq!(a.kernel().rows(), 0);
    }

    #[test]
    fn sum_and_intersection_dimensions_are_modular() {
        let a = m(3, &[vec![1, 0, 0, 2], vec![0, 1, 0, 1]]);
        let b = m(3, &[vec![0, 1, 0, 1], vec![0, 0, 1, 1]]);
        let sum = a.row_space_sum(&b).unwrap();
        let int = a.row_space_intersection(&b).unwrap();
        assert_eq!(sum.rows() + int.rows(), a.rank() + b.rank());
        assert_eq!(int.rows(), 1);
        // The intersection row must lie in both row spaces.
        assert_eq!(a.row_space_sum(&int).unwrap(), a.rref().0);
        assert_eq!(b.row_space_sum(&int).unwrap(), b.rref().0);
    }

    #[test]
    fn intersection_of_disjoint_spaces_is_zero() {
        let a = m(2, &[vec![1, 0, 0]]);
        let b = m(2, &[vec![0, 1, 0]]);
        assert_eq!(a.row_space_intersection(&b).unwrap().rows(), 0);
    }

    #[test]
    fn matmul_agrees_with_hand_example() {
        let a = m(3, &[vec![1, 2], vec![0, 1]]);
        let b = m(3, &[vec![1, 1, 0], vec![2, 0, 1]]);
        let c = a.matmul(&b).unwrap();
        assert_eq!(c.row(0).iter().map(|e| e.value()).collect::<Vec<_>>(), [2, 1, 2]);
        assert_eq!(c.row(1).iter().map(|e| e.value()).collect::<Vec<_>>(), [2, 0, 1]);
    }

    #[test]
    fn shape_errors_are_reported() {
        let a = m(3, &[vec![1, 0]]);
        let b = m(3, &[vec![1, 0, 0]]);
        assert!(a.matmul(&b).is_err());
        assert!(a.vstack(&b).is_err());
        assert!(Matrix::from_rows(f(3), &[vec![1], vec![1, 2]]).is_err());
        assert!(Matrix::from_rows(f(3), &[vec![5]]).is_err());
    }
}
