//! GHW lower bounds for two constituents over two blocks, plus the
//! minimum-distance bounds they generalize.
//!
//! The three 2x2 variants share one skeleton: scan a set Y of pairs
//! (alpha_1, alpha_2) and take the minimum of a two-term sum B whose
//! summands are extended weights of C_1, C_2, C_1 + C_2 and C_1 int C_2.
//! The variants differ in which codes appear in B and in the admissible
//! ranges. A zero at a_22 is normalized away by swapping the two block
//! columns, which permutes the code coordinates and so changes no weight.

use crate::codes::{min_distance_with, LinearCode};
use crate::linalg::Matrix;
use crate::mpc::{require_nsc, row_code_delta_with};
use crate::{EnumOptions, Error, Result};

use super::{BoundReport, ExtendedWeight, Hierarchy, Method, Witness};

/// Which 2x2 bound to apply. `General` accepts any NSC matrix; the
/// other two insist on the matching a_21 pattern and are sharper.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant2x2 {
    General,
    A21Nonzero,
    A21Zero,
}

impl Variant2x2 {
    fn method(&self) -> Method {
        match self {
            Variant2x2::General => Method::TwoGeneral,
            Variant2x2::A21Nonzero => Method::TwoNz,
            Variant2x2::A21Zero => Method::TwoZ,
        }
    }
}

fn check_two_constituents(c1: &LinearCode, c2: &LinearCode, a: &Matrix) -> Result<()> {
    if c1.field() != c2.field() || c1.field() != a.field() {
        return Err(Error::Shape(
            "constituents and matrix must share a field".into(),
        ));
    }
    if c1.n() != c2.n() {
        return Err(Error::Shape(
            "constituent codes must share a common length".into(),
        ));
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

/// Lower bound on d_r([C_1, C_2] . A) for a 2x2 NSC matrix.
pub fn lb_2x2(
    c1: &LinearCode,
    c2: &LinearCode,
    a: &Matrix,
    r: usize,
    variant: Variant2x2,
    opts: &EnumOptions,
) -> Result<BoundReport> {
    if a.rows() != 2 || a.cols() != 2 {
        return Err(Error::Shape(format!(
            "this bound needs a 2 x 2 matrix, got {} x {}",
            a.rows(),
            a.cols()
        )));
    }
    check_two_constituents(c1, c2, a)?;
    require_nsc(a)?;
    check_r(r, c1.dim() + c2.dim())?;

    // Normalize a_22 != 0. Swapping the block columns of A permutes the
    // blocks of the code, and NSC survives: both first-row entries stay
    // nonzero and the determinant only changes sign.
    let (a, swapped) = if a.get(1, 1).is_zero() {
        (a.select_cols(&[1, 0]), true)
    } else {
        (a.clone(), false)
    };
    let a21_zero = a.get(1, 0).is_zero();
    match variant {
        Variant2x2::General => {}
        Variant2x2::A21Nonzero if a21_zero => {
            return Err(Error::Precondition(
                "this variant needs a_21 != 0 after normalization".into(),
            ));
        }
        Variant2x2::A21Zero if !a21_zero => {
            return Err(Error::Precondition(
                "this variant needs a_21 = 0 after normalization".into(),
            ));
        }
        _ => {}
    }

    let k1 = c1.dim();
    let k2 = c2.dim();
    let sum = Hierarchy::of(&c1.sum(c2)?, opts)?;
    let int = Hierarchy::of(&c1.intersection(c2)?, opts)?;
    let s_dim = sum.dim();
    let t_dim = int.dim();

    // Per-variant ranges for alpha_1 / alpha_2 and the two summands of B.
    // All weight indices stay within the dimensions by construction.
    let lo_s = r.saturating_sub(s_dim);
    let (a1_lo, a1_hi, a2_lo, a2_hi) = match variant {
        Variant2x2::General => (lo_s, r.min(k2), lo_s, r.min(t_dim)),
        Variant2x2::A21Nonzero => (lo_s, r.min(t_dim), lo_s, r.min(t_dim)),
        Variant2x2::A21Zero => (r.saturating_sub(k1), r.min(k2), lo_s, r.min(t_dim)),
    };
    let h1 = match variant {
        Variant2x2::A21Zero => Some(Hierarchy::of(c1, opts)?),
        _ => None,
    };
    let h2 = match variant {
        Variant2x2::General | Variant2x2::A21Zero => Some(Hierarchy::of(c2, opts)?),
        Variant2x2::A21Nonzero => None,
    };
    let term = |alpha1: usize, alpha2: usize| -> Result<u64> {
        let b = match variant {
            Variant2x2::General => {
                sum.fin(r - alpha1)?.max(int.fin(alpha2)?)
                    + sum.fin(r - alpha2)?.max(h2.as_ref().unwrap().fin(alpha1)?)
            }
            Variant2x2::A21Nonzero => {
                sum.fin(r - alpha1)?.max(int.fin(alpha2)?)
                    + sum.fin(r - alpha2)?.max(int.fin(alpha1)?)
            }
            Variant2x2::A21Zero => {
                h1.as_ref().unwrap().fin(r - alpha1)?.max(int.fin(alpha2)?)
                    + sum.fin(r - alpha2)?.max(h2.as_ref().unwrap().fin(alpha1)?)
            }
        };
        Ok(b)
    };

    let mut best: Option<(u64, [usize; 2])> = None;
    for alpha1 in a1_lo..=a1_hi {
        for alpha2 in a2_lo..=a2_hi.min(r - alpha1) {
            let b = term(alpha1, alpha2)?;
            if best.is_none_or(|(v, _)| b < v) {
                best = Some((b, [alpha1, alpha2]));
            }
        }
    }
    let (value, alpha) = best.ok_or_else(|| {
        Error::Internal(format!("empty tuple set for r = {r}, which cannot happen"))
    })?;
    let mut report = BoundReport::new(
        variant.method(),
        r,
        ExtendedWeight::Finite(value),
        Witness::Pair { alpha },
    );
    report.swapped_columns = swapped;
    Ok(report)
}

/// Lower bound on d_r([C_1, C_2] . A) for nested constituents C_2
/// within C_1. Needs only the hierarchies of C_1 and C_2 and is what
/// the 2x2 variants collapse to in the nested case.
pub fn lb_h2_nested(
    c1: &LinearCode,
    c2: &LinearCode,
    a: &Matrix,
    r: usize,
    opts: &EnumOptions,
) -> Result<BoundReport> {
    if a.rows() != 2 || a.cols() != 2 {
        return Err(Error::Shape(format!(
            "this bound needs a 2 x 2 matrix, got {} x {}",
            a.rows(),
            a.cols()
        )));
    }
    check_two_constituents(c1, c2, a)?;
    if !c2.is_subcode_of(c1)? {
        return Err(Error::Precondition(
            "the second constituent must be a subcode of the first".into(),
        ));
    }
    require_nsc(a)?;
    let k1 = c1.dim();
    let k2 = c2.dim();
    check_r(r, k1 + k2)?;

    let h1 = Hierarchy::of(c1, opts)?;
    let h2 = Hierarchy::of(c2, opts)?;
    let lo = r.saturating_sub(k1);
    let hi = r.min(k2);
    let mut best: Option<(u64, [usize; 2])> = None;
    for alpha1 in lo..=hi {
        for alpha2 in lo..=hi.min(r - alpha1) {
            let b = h1.fin(r - alpha1)?.max(h2.fin(alpha2)?)
                + h1.fin(r - alpha2)?.max(h2.fin(alpha1)?);
            if best.is_none_or(|(v, _)| b < v) {
                best = Some((b, [alpha1, alpha2]));
            }
        }
    }
    let (value, alpha) = best.ok_or_else(|| {
        Error::Internal(format!("empty tuple set for r = {r}, which cannot happen"))
    })?;
    Ok(BoundReport::new(
        Method::H2Nested,
        r,
        ExtendedWeight::Finite(value),
        Witness::Pair { alpha },
    ))
}

/// Minimum-distance lower bound min_l d_1(C_l) delta_l for a full-rank
/// structure matrix, where delta_l is the distance of the code spanned
/// by the first l rows of A. Zero constituents never reach the minimum
/// and are skipped.
pub fn min_dist_lower_eq2(
    a: &Matrix,
    constituents: &[LinearCode],
    opts: &EnumOptions,
) -> Result<BoundReport> {
    let deltas: Result<Vec<u64>> = (1..=a.rows())
        .map(|ell| row_code_delta_with(a, ell, opts))
        .collect();
    min_dist_lower(a, constituents, &deltas?, Method::Eq2, opts)
}

/// The NSC sharpening of the minimum-distance bound: delta_l becomes
/// h - l + 1 because the row codes of an NSC matrix are MDS.
pub fn min_dist_lower_eq3(
    a: &Matrix,
    constituents: &[LinearCode],
    opts: &EnumOptions,
) -> Result<BoundReport> {
    require_nsc(a)?;
    let h = a.cols();
    let deltas: Vec<u64> = (1..=a.rows()).map(|ell| (h - ell + 1) as u64).collect();
    min_dist_lower(a, constituents, &deltas, Method::Eq3, opts)
}

fn min_dist_lower(
    a: &Matrix,
    constituents: &[LinearCode],
    deltas: &[u64],
    method: Method,
    opts: &EnumOptions,
) -> Result<BoundReport> {
    let s = a.rows();
    if s == 0 || s > a.cols() {
        return Err(Error::Shape(format!(
            "structure matrix must be s x h with 1 <= s <= h, got {s} x {}",
            a.cols()
        )));
    }
    if constituents.len() != s {
        return Err(Error::Shape(format!(
            "{} constituent codes for a structure matrix with {s} rows",
            constituents.len()
        )));
    }
    for c in constituents {
        if c.field() != a.field() {
            return Err(Error::Shape(
                "constituents and matrix must share a field".into(),
            ));
        }
        if c.n() != constituents[0].n() {
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
    let mut best: Option<(u64, usize)> = None;
    for (idx, c) in constituents.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let v = min_distance_with(c, opts)? * deltas[idx];
        if best.is_none_or(|(b, _)| v < b) {
            best = Some((v, idx + 1));
        }
    }
    let (value, ell) = best.ok_or(Error::ZeroCode)?;
    Ok(BoundReport::new(
        method,
        1,
        ExtendedWeight::Finite(value),
        Witness::Constituent { ell },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gfield::Field;
    use std::sync::Arc;

    fn f(q: u32) -> Arc<Field> {
        Arc::new(Field::from_order(q).unwrap())
    }

    fn code_signed(q: u32, rows: &[Vec<i64>]) -> LinearCode {
        let field = f(q);
        let data: Vec<_> = rows
            .iter()
            .flat_map(|r| r.iter().map(|&v| field.elem_signed(v).unwrap()))
            .collect();
        let gen = Matrix::new(field, rows.len(), rows[0].len(), data).unwrap();
        LinearCode::from_generator(&gen)
    }

    fn mat(q: u32, rows: &[Vec<i64>]) -> Matrix {
        let field = f(q);
        let data: Vec<_> = rows
            .iter()
            .flat_map(|r| r.iter().map(|&v| field.elem_signed(v).unwrap()))
            .collect();
        Matrix::new(field, rows.len(), rows[0].len(), data).unwrap()
    }

    /// The ternary pair used across the regression tests: an [8,3] code,
    /// an [8,2] code meeting it trivially, and the two mixing matrices.
    fn ternary_pair() -> (LinearCode, LinearCode, Matrix, Matrix) {
        let c1 = code_signed(
            3,
            &[
                vec![0, 1, 0, 0, 0, 1, 1, 0],
                vec![-1, 1, 0, 1, -1, 1, 0, 1],
                vec![-1, 1, -1, 1, 1, 1, 1, 0],
            ],
        );
        let c2 = code_signed(
            3,
            &[vec![-1, 0, 1, 1, -1, 1, -1, 0], vec![1, 1, 0, 1, -1, -1, -1, -1]],
        );
        let a1 = mat(3, &[vec![1, 1], vec![0, 1]]);
        let a2 = mat(3, &[vec![1, 1], vec![1, -1]]);
        (c1, c2, a1, a2)
    }

    #[test]
    fn ternary_pair_hierarchies_are_the_expected_ones() {
        let (c1, c2, _, _) = ternary_pair();
        let opts = EnumOptions::default();
        assert_eq!(Hierarchy::of(&c1, &opts).unwrap().weights(), &[3, 6, 8]);
        assert_eq!(Hierarchy::of(&c2, &opts).unwrap().weights(), &[5, 8]);
        let sum = c1.sum(&c2).unwrap();
        assert_eq!(Hierarchy::of(&sum, &opts).unwrap().weights(), &[3, 5, 6, 7, 8]);
        assert!(c1.intersection(&c2).unwrap().is_zero());
    }

    #[test]
    fn a21_zero_bound_matches_the_frozen_row() {
        let (c1, c2, a1, _) = ternary_pair();
        let opts = EnumOptions::default();
        let expect = [5u64, 8, 11, 14, 16];
        for r in 1..=5usize {
            let rep = lb_2x2(&c1, &c2, &a1, r, Variant2x2::A21Zero, &opts).unwrap();
            assert_eq!(rep.value, ExtendedWeight::Finite(expect[r - 1]), "r = {r}");
            assert!(!rep.swapped_columns);
            assert_eq!(rep.method, Method::TwoZ);
        }
        // The r = 3 minimum sits at alpha = (2, 0): the three admissible
        // terms evaluate to 14, 12, 11.
        let rep = lb_2x2(&c1, &c2, &a1, 3, Variant2x2::A21Zero, &opts).unwrap();
        assert_eq!(rep.witness, Witness::Pair { alpha: [2, 0] });
    }

    #[test]
    fn a21_nonzero_bound_matches_the_frozen_row() {
        let (c1, c2, _, a2) = ternary_pair();
        let opts = EnumOptions::default();
        let expect = [6u64, 10, 12, 14, 16];
        for r in 1..=5usize {
            let rep = lb_2x2(&c1, &c2, &a2, r, Variant2x2::A21Nonzero, &opts).unwrap();
            assert_eq!(rep.value, ExtendedWeight::Finite(expect[r - 1]), "r = {r}");
            // The intersection is zero, so the only admissible pair is (0,0).
            assert_eq!(rep.witness, Witness::Pair { alpha: [0, 0] });
        }
    }

    #[test]
    fn general_variant_accepts_both_matrices() {
        let (c1, c2, a1, a2) = ternary_pair();
        let opts = EnumOptions::default();
        for a in [&a1, &a2] {
            for r in 1..=5usize {
                let rep = lb_2x2(&c1, &c2, a, r, Variant2x2::General, &opts).unwrap();
                assert!(rep.value.is_finite());
            }
        }
    }

    #[test]
    fn variant_mismatch_is_a_precondition_error() {
        let (c1, c2, a1, a2) = ternary_pair();
        let opts = EnumOptions::default();
        assert!(matches!(
            lb_2x2(&c1, &c2, &a1, 1, Variant2x2::A21Nonzero, &opts),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            lb_2x2(&c1, &c2, &a2, 1, Variant2x2::A21Zero, &opts),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn a22_zero_is_normalized_by_a_column_swap() {
        let (c1, c2, _, _) = ternary_pair();
        let opts = EnumOptions::default();
        // ((1,1),(1,0)) swaps into ((1,1),(0,1)): the a_21 = 0 shape.
        let a = mat(3, &[vec![1, 1], vec![1, 0]]);
        for r in 1..=5usize {
            let rep = lb_2x2(&c1, &c2, &a, r, Variant2x2::A21Zero, &opts).unwrap();
            assert!(rep.swapped_columns);
            let plain = lb_2x2(&c1, &c2, &mat(3, &[vec![1, 1], vec![0, 1]]), r, Variant2x2::A21Zero, &opts)
                .unwrap();
            assert_eq!(rep.value, plain.value, "r = {r}");
        }
    }

    #[test]
    fn non_nsc_matrices_are_rejected_with_a_witness() {
        let (c1, c2, _, _) = ternary_pair();
        let a = mat(3, &[vec![1, 0], vec![0, 1]]);
        match lb_2x2(&c1, &c2, &a, 1, Variant2x2::General, &EnumOptions::default()) {
            Err(Error::NotNsc { t, cols }) => {
                assert_eq!((t, cols), (1, vec![2]));
            }
            other => panic!("expected an NSC failure, got {other:?}"),
        }
    }

    #[test]
    fn out_of_range_r_is_rejected() {
        let (c1, c2, a1, _) = ternary_pair();
        let opts = EnumOptions::default();
        assert!(lb_2x2(&c1, &c2, &a1, 0, Variant2x2::General, &opts).is_err());
        assert!(lb_2x2(&c1, &c2, &a1, 6, Variant2x2::General, &opts).is_err());
    }

    #[test]
    fn nested_bound_coincides_with_all_three_variants() {
        // [8,3] ternary code containing an [8,1] subcode spanned by the
        // sum of its generator rows.
        let c1 = code_signed(
            3,
            &[
                vec![1, 0, 0, 1, 2, 0, 1, 1],
                vec![0, 1, 0, 2, 1, 1, 0, 1],
                vec![0, 0, 1, 1, 1, 2, 2, 0],
            ],
        );
        let c2 = code_signed(3, &[vec![1, 1, 1, 1, 1, 0, 0, 2]]);
        assert!(c2.is_subcode_of(&c1).unwrap());
        let nz = mat(3, &[vec![1, 1], vec![1, -1]]);
        let z = mat(3, &[vec![1, 1], vec![0, 1]]);
        let opts = EnumOptions::default();
        for r in 1..=4usize {
            let nested = lb_h2_nested(&c1, &c2, &z, r, &opts).unwrap().value;
            for (a, variant) in [
                (&nz, Variant2x2::General),
                (&nz, Variant2x2::A21Nonzero),
                (&z, Variant2x2::General),
                (&z, Variant2x2::A21Zero),
            ] {
                let got = lb_2x2(&c1, &c2, a, r, variant, &opts).unwrap().value;
                assert_eq!(got, nested, "r = {r}, variant {variant:?}");
            }
        }
    }

    #[test]
    fn nested_bound_with_equal_codes_gives_the_distance_at_r_one() {
        let c = code_signed(3, &[vec![1, 0, 1, 1], vec![0, 1, 1, 2]]);
        let a = mat(3, &[vec![1, 1], vec![1, -1]]);
        let rep = lb_h2_nested(&c, &c, &a, 1, &EnumOptions::default()).unwrap();
        // alpha = (0, 1) is admissible and collapses B to d_1(C) = 3: every
        // nonzero word of this [4,2] code has weight 3.
        assert_eq!(rep.value, ExtendedWeight::Finite(3));
        assert_eq!(rep.witness, Witness::Pair { alpha: [0, 1] });
    }

    #[test]
    fn nested_bound_rejects_non_nested_constituents() {
        let (c1, c2, a1, _) = ternary_pair();
        assert!(matches!(
            lb_h2_nested(&c1, &c2, &a1, 1, &EnumOptions::default()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn min_distance_bounds_match_hand_values() {
        let (c1, c2, a1, _) = ternary_pair();
        let opts = EnumOptions::default();
        let eq2 = min_dist_lower_eq2(&a1, &[c1.clone(), c2.clone()], &opts).unwrap();
        assert_eq!(eq2.value, ExtendedWeight::Finite(5));
        assert_eq!(eq2.witness, Witness::Constituent { ell: 2 });
        let eq3 = min_dist_lower_eq3(&a1, &[c1, c2], &opts).unwrap();
        assert_eq!(eq3.value, ExtendedWeight::Finite(5));
    }

    #[test]
    fn single_constituent_reduces_to_its_distance() {
        let c = code_signed(3, &[vec![1, 1, 0, 1]]);
        let a = mat(3, &[vec![1]]);
        let rep = min_dist_lower_eq2(&a, &[c], &EnumOptions::default()).unwrap();
        assert_eq!(rep.value, ExtendedWeight::Finite(3));
        assert_eq!(rep.witness, Witness::Constituent { ell: 1 });
    }

    #[test]
    fn nsc_bound_on_a_reed_solomon_pair_over_three_blocks() {
        let field = f(4);
        let c1 = crate::families::rs_code(field.clone(), 4, 3).unwrap();
        let c2 = crate::families::rs_code(field.clone(), 4, 1).unwrap();
        let nodes: Vec<_> = field.elements().take(3).collect();
        let a = crate::mpc::vandermonde_matrix(field, 2, &nodes).unwrap();
        let rep = min_dist_lower_eq3(&a, &[c1, c2], &EnumOptions::default()).unwrap();
        assert_eq!(rep.value, ExtendedWeight::Finite(6));
    }

    #[test]
    fn zero_constituents_are_skipped_or_fatal() {
        let c = code_signed(3, &[vec![1, 1, 0, 1]]);
        let z = LinearCode::zero(f(3), 4);
        let a = mat(3, &[vec![1, 1], vec![0, 1]]);
        let opts = EnumOptions::default();
        let rep = min_dist_lower_eq2(&a, &[c, z.clone()], &opts).unwrap();
        assert_eq!(rep.value, ExtendedWeight::Finite(6));
        assert_eq!(rep.witness, Witness::Constituent { ell: 1 });
        assert!(matches!(
            min_dist_lower_eq2(&a, &[z.clone(), z], &opts),
            Err(Error::ZeroCode)
        ));
    }
}
