//! Linear codes in canonical form, their supports, block views and the
//! exact weight computations.
//!
//! A [`LinearCode`] always stores the unique reduced row echelon basis of
//! its row space with zero rows dropped, so code equality is entrywise
//! comparison of generator matrices. The zero code is the 0 x n matrix.

mod enumerate;
mod ghw;

pub use enumerate::{enumerate_subspaces, subspace_count, SubspaceIter};
pub use ghw::{ghw, ghw_with, ghw_with_witness, min_distance, min_distance_with, weight_hierarchy, weight_hierarchy_with};

use std::sync::Arc;

use crate::gfield::{Field, FieldElement};
use crate::linalg::Matrix;
use crate::{Error, Result};

/// A linear code over a small finite field, canonically represented.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearCode {
    gen: Matrix,
}

impl std::fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}, {}] code over GF({})", self.n(), self.dim(), self.field().q())?;
        if f.alternate() {
            write!(f, "\n{:?}", self.gen)?;
        }
        Ok(())
    }
}

impl LinearCode {
    /// The code spanned by the rows of `g`, canonicalized. Rank-deficient
    /// and unordered generators are fine; the dimension is the rank.
    pub fn from_generator(g: &Matrix) -> LinearCode {
        let (gen, _) = g.rref();
        LinearCode { gen }
    }

    pub fn zero(field: Arc<Field>, n: usize) -> LinearCode {
        LinearCode {
            gen: Matrix::zeros(field, 0, n),
        }
    }

    /// The full space F_q^n.
    pub fn full(field: Arc<Field>, n: usize) -> LinearCode {
        LinearCode {
            gen: Matrix::identity(field, n),
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.gen.cols()
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.gen.rows()
    }

    #[inline]
    pub fn field(&self) -> &Arc<Field> {
        self.gen.field()
    }

    /// Canonical generator matrix (RREF, zero rows dropped).
    pub fn generator(&self) -> &Matrix {
        &self.gen
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// Support of the whole code: coordinates where some codeword is
    /// nonzero, which is the union of the generator rows' supports.
    pub fn support(&self) -> SupportSet {
        let mut hit = vec![false; self.n()];
        for r in 0..self.dim() {
            for (c, e) in self.gen.row(r).iter().enumerate() {
                if !e.is_zero() {
                    hit[c] = true;
                }
            }
        }
        SupportSet::from_flags(&hit)
    }

    /// Membership test for a single word.
    pub fn contains(&self, word: &[FieldElement]) -> Result<bool> {
        if word.len() != self.n() {
            return Err(Error::Shape("word length differs from code length".into()));
        }
        let m = Matrix::new(
            self.field().clone(),
            1,
            self.n(),
            word.to_vec(),
        )?;
        Ok(self.gen.row_space_sum(&m)?.rows() == self.dim())
    }

    /// Sum of two codes of the same length.
    pub fn sum(&self, other: &LinearCode) -> Result<LinearCode> {
        Ok(LinearCode {
            gen: self.gen.row_space_sum(&other.gen)?,
        })
    }

    /// Intersection of two codes of the same length.
    pub fn intersection(&self, other: &LinearCode) -> Result<LinearCode> {
        Ok(LinearCode {
            gen: self.gen.row_space_intersection(&other.gen)?,
        })
    }

    /// Whether `self` is contained in `other`.
    pub fn is_subcode_of(&self, other: &LinearCode) -> Result<bool> {
        if self.field() != other.field() || self.n() != other.n() {
            return Err(Error::Shape("containment needs matching length and field".into()));
        }
        Ok(other.gen.row_space_sum(&self.gen)?.rows() == other.dim())
    }

    /// Splits the support by blocks of length n/h.
    pub fn support_blocks(&self, h: usize) -> Result<Vec<SupportSet>> {
        let blen = block_len(self.n(), h)?;
        let supp = self.support();
        let mut out = vec![Vec::new(); h];
        for &p in supp.positions() {
            out[p / blen].push(p);
        }
        Ok(out.into_iter().map(SupportSet::from_sorted).collect())
    }

    /// The subcode of words vanishing on every block selected by `y`,
    /// without puncturing: the length stays n.
    pub fn shorten_blocks(&self, y: &BlockMask) -> Result<LinearCode> {
        let h = y.len();
        let blen = block_len(self.n(), h)?;
        let masked: Vec<usize> = y
            .support()
            .iter()
            .flat_map(|&b| b * blen..(b + 1) * blen)
            .collect();
        if masked.is_empty() {
            return Ok(self.clone());
        }
        // Coefficient vectors x with x G zero on the masked columns form
        // the left kernel of those columns.
        let gt = self.gen.select_cols(&masked).transpose();
        let coeffs = gt.kernel();
        let sub = coeffs.matmul(&self.gen)?;
        Ok(LinearCode::from_generator(&sub))
    }

    /// Raw generator entries, row-major, for enumeration inner loops.
    pub(crate) fn gen_bytes(&self) -> Vec<u8> {
        (0..self.dim())
            .flat_map(|r| self.gen.row(r).iter().map(|e| e.value()))
            .collect()
    }
}

fn block_len(n: usize, h: usize) -> Result<usize> {
    if h == 0 || !n.is_multiple_of(h) {
        return Err(Error::Shape(format!(
            "length {n} does not split into {h} equal blocks"
        )));
    }
    Ok(n / h)
}

/// A sorted set of coordinate positions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SupportSet(Vec<usize>);

impl SupportSet {
    pub fn from_sorted(positions: Vec<usize>) -> SupportSet {
        debug_assert!(positions.windows(2).all(|w| w[0] < w[1]));
        SupportSet(positions)
    }

    pub fn from_flags(flags: &[bool]) -> SupportSet {
        SupportSet(
            flags
                .iter()
                .enumerate()
                .filter_map(|(i, &b)| b.then_some(i))
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn positions(&self) -> &[usize] {
        &self.0
    }

    pub fn contains(&self, p: usize) -> bool {
        self.0.binary_search(&p).is_ok()
    }
}

impl std::fmt::Display for SupportSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

/// Selects a subset of the h blocks of a block-structured code.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BlockMask {
    bits: Vec<bool>,
}

impl BlockMask {
    pub fn zero(h: usize) -> BlockMask {
        BlockMask { bits: vec![false; h] }
    }

    /// The mask selecting exactly block `i`.
    pub fn unit(h: usize, i: usize) -> BlockMask {
        let mut m = BlockMask::zero(h);
        m.bits[i] = true;
        m
    }

    pub fn from_indices(h: usize, indices: &[usize]) -> BlockMask {
        let mut m = BlockMask::zero(h);
        for &i in indices {
            m.bits[i] = true;
        }
        m
    }

    pub fn from_bits(bits: Vec<bool>) -> BlockMask {
        BlockMask { bits }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn bit(&self, i: usize) -> bool {
        self.bits[i]
    }

    /// Indices of the selected blocks, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.bits
            .iter()
            .enumerate()
            .filter_map(|(i, &b)| b.then_some(i))
            .collect()
    }
}
