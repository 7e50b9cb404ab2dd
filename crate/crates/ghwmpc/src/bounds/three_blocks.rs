//! GHW lower bounds for codes spread over three blocks: three nested
//! constituents with a 3x3 NSC matrix, and two nested constituents with
//! a 2x3 NSC matrix.
//!
//! Both bounds minimize a three-term sum B over a tuple set. The tuples
//! (alpha, gamma, beta) track, per block i, how much of an r-dimensional
//! subcode survives shortening outside block i (alpha_i), how much lands
//! in the deepest constituent (gamma_i), and a shared budget beta for
//! the middle one. Index arithmetic over the blocks is cyclic mod 3.

use crate::codes::LinearCode;
use crate::linalg::Matrix;
use crate::mpc::require_nsc;
use crate::{EnumOptions, Error, Result};

use super::{BoundReport, ExtendedWeight, Hierarchy, Method, Witness};

fn check_constituents(cs: &[&LinearCode], a: &Matrix) -> Result<()> {
    for c in cs {
        if c.field() != a.field() {
            return Err(Error::Shape(
                "constituents and matrix must share a field".into(),
            ));
        }
        if c.n() != cs[0].n() {
            return Err(Error::Shape(
                "constituent codes must share a common length".into(),
            ));
        }
    }
    for w in cs.windows(2) {
        if !w[1].is_subcode_of(w[0])? {
            return Err(Error::Precondition(
                "constituents must be nested, each containing the next".into(),
            ));
        }
    }
    Ok(())
}

fn check_r(r: usize, k_total: usize) -> Result<()> {
    if r == 0 || r > k_total {
        return Err(Error::Range(format!(
            "GHW index {r} must satisfy 1 <= r <= {k_total}"
        )));
    }
    Ok(())
}

/// Visits every admissible (alpha, gamma, beta) in lexicographic order.
fn y3_scan<F>(k1: usize, k2: usize, k3: usize, r: usize, mut visit: F) -> Result<()>
where
    F: FnMut(&[usize; 3], &[usize; 3], usize) -> Result<()>,
{
    let a_lo = r.saturating_sub(k1);
    let g_hi = r.min(k3);
    for a1 in a_lo..=r {
        for a2 in a_lo..=r {
            for a3 in a_lo..=r {
                let alpha = [a1, a2, a3];
                for g1 in 0..=g_hi {
                    for g2 in 0..=g_hi {
                        for g3 in 0..=g_hi {
                            let gamma = [g1, g2, g3];
                            // alpha_i covers the two gammas it feeds.
                            if (0..3).any(|i| gamma[(i + 1) % 3] + gamma[(i + 2) % 3] > alpha[i]) {
                                continue;
                            }
                            // Summing that cover over i gives
                            // sum(alpha) >= 2 sum(gamma), so the slack
                            // sum(alpha_i - gamma_i) never underflows
                            // even when a single term is negative.
                            let slack =
                                alpha.iter().sum::<usize>() - gamma.iter().sum::<usize>();
                            let b_lo = (0..3)
                                .map(|i| {
                                    (alpha[(i + 1) % 3] + alpha[(i + 2) % 3])
                                        .saturating_sub(gamma[i])
                                })
                                .max()
                                .unwrap();
                            let b_hi = r.min(slack).min(k2 + alpha.iter().min().unwrap());
                            for beta in b_lo..=b_hi {
                                // Derived, never imposed: each pair
                                // alpha_i + gamma_i fits under beta.
                                debug_assert!(
                                    (0..3).all(|i| alpha[i] + gamma[i] <= beta),
                                    "derived constraint failed at {alpha:?} {gamma:?} {beta}"
                                );
                                visit(&alpha, &gamma, beta)?;
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// Visits every admissible (alpha, beta) of the two-constituent,
/// three-block tuple set in lexicographic order.
fn y3_s2_scan<F>(k1: usize, k2: usize, r: usize, mut visit: F) -> Result<()>
where
    F: FnMut(&[usize; 3], usize) -> Result<()>,
{
    let a_lo = r.saturating_sub(k1);
    for a1 in a_lo..=r {
        for a2 in a_lo..=r {
            for a3 in a_lo..=r {
                let alpha = [a1, a2, a3];
                let b_lo = (0..3)
                    .map(|i| alpha[(i + 1) % 3] + alpha[(i + 2) % 3])
                    .max()
                    .unwrap();
                let b_hi = r
                    .min(alpha.iter().sum())
                    .min(k2 + alpha.iter().min().unwrap());
                for beta in b_lo..=b_hi {
                    visit(&alpha, beta)?;
                }
            }
        }
    }
    Ok(())
}

/// The admissible (alpha, beta) tuples for dimensions k1 >= k2 and GHW
/// index r, in the order the bound scans them.
pub fn y_h3_s2_tuples(k1: usize, k2: usize, r: usize) -> Vec<([usize; 3], usize)> {
    let mut out = Vec::new();
    let _ = y3_s2_scan(k1, k2, r, |alpha, beta| {
        out.push((*alpha, beta));
        Ok(())
    });
    out
}

/// Lower bound on d_r([C_1, C_2, C_3] . A) for nested constituents and
/// a 3x3 NSC matrix.
pub fn lb_h3_nested(
    c1: &LinearCode,
    c2: &LinearCode,
    c3: &LinearCode,
    a: &Matrix,
    r: usize,
    opts: &EnumOptions,
) -> Result<BoundReport> {
    if a.rows() != 3 || a.cols() != 3 {
        return Err(Error::Shape(format!(
            "this bound needs a 3 x 3 matrix, got {} x {}",
            a.rows(),
            a.cols()
        )));
    }
    check_constituents(&[c1, c2, c3], a)?;
    require_nsc(a)?;
    let (k1, k2, k3) = (c1.dim(), c2.dim(), c3.dim());
    check_r(r, k1 + k2 + k3)?;

    let h1 = Hierarchy::of(c1, opts)?;
    let h2 = Hierarchy::of(c2, opts)?;
    let h3 = Hierarchy::of(c3, opts)?;
    let mut best: Option<(u64, [usize; 3], [usize; 3], usize)> = None;
    y3_scan(k1, k2, k3, r, |alpha, gamma, beta| {
        let mut b = 0u64;
        for i in 0..3 {
            b += h1
                .fin(r - alpha[i])?
                .max(h2.fin(beta - alpha[i])?)
                .max(h3.fin(gamma[i])?);
        }
        if best.is_none_or(|(v, ..)| b < v) {
            best = Some((b, *alpha, *gamma, beta));
        }
        Ok(())
    })?;
    let (value, alpha, gamma, beta) = best.ok_or_else(|| {
        Error::Internal(format!("empty tuple set for r = {r}, which cannot happen"))
    })?;
    Ok(BoundReport::new(
        Method::H3Nested,
        r,
        ExtendedWeight::Finite(value),
        Witness::ThreeBlocks { alpha, gamma, beta },
    ))
}

/// Lower bound on d_r([C_1, C_2] . A) for nested constituents and a
/// 2x3 NSC matrix. This is the three-constituent bound with the third
/// code pinned to zero.
pub fn lb_h3_s2(
    c1: &LinearCode,
    c2: &LinearCode,
    a: &Matrix,
    r: usize,
    opts: &EnumOptions,
) -> Result<BoundReport> {
    if a.rows() != 2 || a.cols() != 3 {
        return Err(Error::Shape(format!(
            "this bound needs a 2 x 3 matrix, got {} x {}",
            a.rows(),
            a.cols()
        )));
    }
    check_constituents(&[c1, c2], a)?;
    require_nsc(a)?;
    let (k1, k2) = (c1.dim(), c2.dim());
    check_r(r, k1 + k2)?;

    let h1 = Hierarchy::of(c1, opts)?;
    let h2 = Hierarchy::of(c2, opts)?;
    let mut best: Option<(u64, [usize; 3], usize)> = None;
    y3_s2_scan(k1, k2, r, |alpha, beta| {
        let mut b = 0u64;
        for &ai in alpha {
            b += h1.fin(r - ai)?.max(h2.fin(beta - ai)?);
        }
        if best.is_none_or(|(v, ..)| b < v) {
            best = Some((b, *alpha, beta));
        }
        Ok(())
    })?;
    let (value, alpha, beta) = best.ok_or_else(|| {
        Error::Internal(format!("empty tuple set for r = {r}, which cannot happen"))
    })?;
    Ok(BoundReport::new(
        Method::H3S2,
        r,
        ExtendedWeight::Finite(value),
        Witness::ThreeBlocksS2 { alpha, beta },
    ))
}
