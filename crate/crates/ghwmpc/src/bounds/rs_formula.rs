//! Closed-form GHW hierarchy for a pair of nested Reed-Solomon codes
//! mixed by any 2x2 NSC matrix.
//!
//! With k_2 <= k_1 and t = max(k_1 - k_2, k_2), the weight d_r is
//! 2n + r - (k_1 + k_2) above t (the code is t-MDS there) and
//! min(2 d_r(RS(k_1)), d_r(RS(k_2))) otherwise, where a weight past a
//! constituent dimension drops out of the min as infinite.

use crate::{Error, Result};

use super::ExtendedWeight;

/// d_r of an [n, k] MDS code: n - k + r within range, infinity past k.
pub fn mds_extended_weight(n: usize, k: usize, r: usize) -> ExtendedWeight {
    if r == 0 {
        ExtendedWeight::Finite(0)
    } else if r <= k {
        ExtendedWeight::Finite((n - k + r) as u64)
    } else {
        ExtendedWeight::Infinite
    }
}

/// The exact r-th GHW of [RS(k_1), RS(k_2)] . A for nested dimensions
/// k_2 <= k_1 and any 2x2 NSC matrix A.
pub fn rs_ghw_closed_form(n: usize, k1: usize, k2: usize, r: usize) -> Result<u64> {
    if k2 == 0 || k2 > k1 || k1 > n {
        return Err(Error::Range(format!(
            "dimensions must satisfy 1 <= k2 <= k1 <= n, got k1 = {k1}, k2 = {k2}, n = {n}"
        )));
    }
    if r == 0 || r > k1 + k2 {
        return Err(Error::Range(format!(
            "GHW index {r} must satisfy 1 <= r <= {}",
            k1 + k2
        )));
    }
    let t = (k1 - k2).max(k2);
    if r > t {
        return Ok((2 * n + r - (k1 + k2)) as u64);
    }
    // r <= t <= k1 keeps the first branch finite; the second drops out
    // of the min when r exceeds k2.
    let mut best = 2 * (n - k1 + r) as u64;
    if r <= k2 {
        best = best.min((n - k2 + r) as u64);
    }
    Ok(best)
}

/// The two-branch closed form of the summand B at a tuple (alpha_1,
/// alpha_2) with 0 < alpha_i < r, for nested Reed-Solomon constituents.
/// Requires k_2 <= k_1 <= n and a tuple admissible for index r.
pub fn mds_pair_b(n: usize, k1: usize, k2: usize, r: usize, alpha: (usize, usize)) -> u64 {
    debug_assert!(k2 <= k1 && k1 <= n);
    let z = alpha.0 + alpha.1;
    debug_assert!(z <= r);
    if r >= k1 - k2 + z {
        (2 * (n - k1 + r) - z) as u64
    } else {
        (2 * (n - k2) + z) as u64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frozen_values_for_the_quaternary_pair() {
        // n = 4, k1 = 3, k2 = 1: t = 2.
        assert_eq!(rs_ghw_closed_form(4, 3, 1, 1).unwrap(), 4);
        assert_eq!(rs_ghw_closed_form(4, 3, 1, 2).unwrap(), 6);
        assert_eq!(rs_ghw_closed_form(4, 3, 1, 3).unwrap(), 7);
        assert_eq!(rs_ghw_closed_form(4, 3, 1, 4).unwrap(), 8);
    }

    #[test]
    fn the_top_weight_is_the_full_length() {
        for (n, k1, k2) in [(4, 3, 1), (5, 4, 2), (7, 3, 3)] {
            assert_eq!(
                rs_ghw_closed_form(n, k1, k2, k1 + k2).unwrap(),
                2 * n as u64
            );
        }
    }

    #[test]
    fn parameter_violations_are_rejected() {
        assert!(rs_ghw_closed_form(4, 3, 0, 1).is_err());
        assert!(rs_ghw_closed_form(4, 1, 3, 1).is_err());
        assert!(rs_ghw_closed_form(3, 4, 1, 1).is_err());
        assert!(rs_ghw_closed_form(4, 3, 1, 0).is_err());
        assert!(rs_ghw_closed_form(4, 3, 1, 5).is_err());
    }

    #[test]
    fn hierarchy_is_strictly_increasing_and_singleton_tight_past_t() {
        for n in 2..=7usize {
            for k1 in 1..=n {
                for k2 in 1..=k1 {
                    let t = (k1 - k2).max(k2);
                    let mut prev = 0u64;
                    for r in 1..=(k1 + k2) {
                        let d = rs_ghw_closed_form(n, k1, k2, r).unwrap();
                        assert!(d > prev, "n={n} k1={k1} k2={k2} r={r}");
                        prev = d;
                        let singleton = (2 * n + r - (k1 + k2)) as u64;
                        assert!(d <= singleton);
                        if r > t {
                            assert_eq!(d, singleton, "n={n} k1={k1} k2={k2} r={r}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn pair_summand_matches_direct_evaluation_on_interior_tuples() {
        for n in 2..=6usize {
            for k1 in 1..=n {
                for k2 in 1..=k1 {
                    for r in 2..=(k1 + k2) {
                        for a1 in 1..r {
                            for a2 in 1..r {
                                let inside = a1 + a2 <= r
                                    && a1.max(a2) <= k2
                                    && a1.min(a2) + k1 >= r;
                                if !inside {
                                    continue;
                                }
                                let direct = {
                                    let t1 = (n - k1 + r - a1).max(n - k2 + a2);
                                    let t2 = (n - k1 + r - a2).max(n - k2 + a1);
                                    (t1 + t2) as u64
                                };
                                assert_eq!(
                                    mds_pair_b(n, k1, k2, r, (a1, a2)),
                                    direct,
                                    "n={n} k1={k1} k2={k2} r={r} alpha=({a1},{a2})"
                                );
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn extended_mds_weights_follow_the_three_cases() {
        assert_eq!(mds_extended_weight(4, 3, 0), ExtendedWeight::Finite(0));
        assert_eq!(mds_extended_weight(4, 3, 2), ExtendedWeight::Finite(3));
        assert_eq!(mds_extended_weight(4, 1, 2), ExtendedWeight::Infinite);
    }
}
