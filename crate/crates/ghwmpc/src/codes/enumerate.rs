//! Exactly-once enumeration of the r-dimensional subcodes of a code.
//!
//! Subcodes are parameterized by r x k coefficient matrices in reduced row
//! echelon form: the pivot-column choice runs through the r-subsets of
//! {0,..,k-1} in lexicographic order, and for each choice the free entries
//! run through all q^f fillings as a little-endian base-q odometer. This
//! hits every r-dimensional subspace exactly once, so the stream length is
//! the Gaussian binomial [k choose r]_q. The pivot-pattern blocks are the
//! unit of work distribution for the parallel scans.

use crate::combin::{combinations, gaussian_binomial};
use crate::linalg::Matrix;
use crate::{Error, Result};

use super::LinearCode;

/// Number of r-dimensional subcodes of `c`.
pub fn subspace_count(c: &LinearCode, r: usize) -> u128 {
    gaussian_binomial(c.dim(), r, c.field().q())
}

/// One pivot-pattern block of the enumeration.
pub(crate) struct PivotBlock {
    /// Pivot columns, increasing.
    pub pivots: Vec<usize>,
    /// Free coefficient positions (row, col), row-major. Entry order is the
    /// odometer digit order, least significant first.
    pub free: Vec<(usize, usize)>,
    /// Number of candidates in this block: q^free.len().
    pub count: u64,
    /// Global index of the block's first candidate.
    pub offset: u64,
}

/// Splits the enumeration into pivot-pattern blocks with global offsets.
/// Fails if the total exceeds `guard`.
pub(crate) fn pivot_blocks(k: usize, r: usize, q: u32, guard: u64) -> Result<Vec<PivotBlock>> {
    let total = gaussian_binomial(k, r, q);
    if total > guard as u128 {
        return Err(Error::ScaleGuard(format!(
            "{total} candidate subspaces exceed the guard of {guard}"
        )));
    }
    let mut blocks = Vec::new();
    let mut offset = 0u64;
    for pivots in combinations(k, r) {
        let mut free = Vec::new();
        for (i, &p) in pivots.iter().enumerate() {
            for col in p + 1..k {
                if !pivots.contains(&col) {
                    free.push((i, col));
                }
            }
        }
        // In RREF, entries left of the pivot, in pivot columns, and the
        // pivot itself are forced; only `free` positions vary.
        let count = (q as u64)
            .checked_pow(free.len() as u32)
            .ok_or_else(|| Error::ScaleGuard("candidate count overflows u64".into()))?;
        blocks.push(PivotBlock { pivots, free, count, offset });
        offset = offset
            .checked_add(count)
            .ok_or_else(|| Error::ScaleGuard("candidate count overflows u64".into()))?;
    }
    debug_assert_eq!(offset as u128, total);
    Ok(blocks)
}

/// Writes the coefficient matrix for `counter` within a block into `mat`
/// (row-major r x k). The matrix is fully rewritten.
pub(crate) fn fill_coeffs(block: &PivotBlock, k: usize, q: u32, counter: u64, mat: &mut [u8]) {
    mat.fill(0);
    for (i, &p) in block.pivots.iter().enumerate() {
        mat[i * k + p] = 1;
    }
    let mut c = counter;
    for &(row, col) in &block.free {
        mat[row * k + col] = (c % q as u64) as u8;
        c /= q as u64;
    }
}

/// Streaming iterator over all r-dimensional subcodes, each canonicalized.
pub struct SubspaceIter {
    code: LinearCode,
    blocks: Vec<PivotBlock>,
    k: usize,
    r: usize,
    q: u32,
    block_idx: usize,
    counter: u64,
    scratch: Vec<u8>,
}

impl Iterator for SubspaceIter {
    type Item = LinearCode;

    fn next(&mut self) -> Option<LinearCode> {
        loop {
            let block = self.blocks.get(self.block_idx)?;
            if self.counter == block.count {
                self.block_idx += 1;
                self.counter = 0;
                continue;
            }
            fill_coeffs(block, self.k, self.q, self.counter, &mut self.scratch);
            self.counter += 1;
            let field = self.code.field().clone();
            let coeffs = Matrix::new(
                field.clone(),
                self.r,
                self.k,
                self.scratch
                    .iter()
                    .map(|&v| field.elem(v as u32).expect("digit below q"))
                    .collect(),
            )
            .expect("scratch has r*k entries");
            let sub = coeffs
                .matmul(self.code.generator())
                .expect("coefficient shape matches generator");
            return Some(LinearCode::from_generator(&sub));
        }
    }
}

/// All r-dimensional subcodes of `c` in the canonical enumeration order.
/// `r = 0` yields exactly the zero code.
pub fn enumerate_subspaces(c: &LinearCode, r: usize) -> Result<SubspaceIter> {
    let k = c.dim();
    if r > k {
        return Err(Error::Range(format!(
            "cannot enumerate {r}-dimensional subcodes of a code of dimension {k}"
        )));
    }
    // The iterator is lazy; the guard here only protects the block table.
    let blocks = pivot_blocks(k, r, c.field().q(), u64::MAX)?;
    Ok(SubspaceIter {
        code: c.clone(),
        blocks,
        k,
        r,
        q: c.field().q(),
        block_idx: 0,
        counter: 0,
        scratch: vec![0u8; r * k],
    })
}
