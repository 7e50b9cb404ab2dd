//! Combination streams and the counting functions that size the
//! exhaustive scans before they start.

/// Binomial coefficient, saturating at `u128::MAX`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// Gaussian binomial [k choose r]_q: the number of r-dimensional subspaces
/// of a k-dimensional space over GF(q). Saturating.
pub fn gaussian_binomial(k: usize, r: usize, q: u32) -> u128 {
    if r > k {
        return 0;
    }
    // Pascal-style recurrence g[n][j] = g[n-1][j-1] + q^j g[n-1][j]; exact
    // in u128 until saturation, and saturation only ever overestimates.
    let mut row = vec![0u128; r + 1];
    row[0] = 1;
    for _ in 1..=k {
        for j in (1..=r).rev() {
            let qj = pow_sat(q as u128, j as u32);
            row[j] = row[j - 1].saturating_add(qj.saturating_mul(row[j]));
        }
    }
    row[r]
}

fn pow_sat(base: u128, exp: u32) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base);
    }
    acc
}

/// All k-element subsets of {0, .., n-1} in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // Advance: find the rightmost index that can move up.
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// All k-element subsets of {0, .., n-1} as bitmasks, in ascending mask
/// order (Gosper's hack). Requires n <= 63.
pub fn combination_masks(n: usize, k: usize) -> Vec<u64> {
    assert!(n <= 63, "mask combinations support at most 63 positions");
    if k > n {
        return Vec::new();
    }
    if k == 0 {
        return vec![0];
    }
    let mut out = Vec::new();
    let limit = 1u64 << n;
    let mut v: u64 = (1 << k) - 1;
    while v < limit {
        out.push(v);
        let t = v | (v - 1);
        v = (t + 1) | (((!t & t.wrapping_add(1)) - 1) >> (v.trailing_zeros() + 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(16, 8), 12870);
        assert_eq!(binomial(4, 0), 1);
        assert_eq!(binomial(3, 5), 0);
    }

    #[test]
    fn gaussian_binomial_known_values() {
        // Subspace counts checked against the product formula by hand:
        // [2 1]_2 = 3, [4 2]_2 = 35, [3 1]_3 = 13, [5 2]_3 = 1210.
        assert_eq!(gaussian_binomial(2, 1, 2), 3);
        assert_eq!(gaussian_binomial(4, 2, 2), 35);
        assert_eq!(gaussian_binomial(3, 1, 3), 13);
        assert_eq!(gaussian_binomial(5, 2, 3), 1210);
        assert_eq!(gaussian_binomial(4, 2, 4), 357);
        assert_eq!(gaussian_binomial(7, 0, 5), 1);
        assert_eq!(gaussian_binomial(3, 4, 2), 0);
    }

    #[test]
    fn gaussian_binomial_symmetry() {
        for k in 0..=8 {
            for r in 0..=k {
                for q in [2u32, 3, 4] {
                    assert_eq!(
                        gaussian_binomial(k, r, q),
                        gaussian_binomial(k, k - r, q)
                    );
                }
            }
        }
    }

    #[test]
    fn combinations_are_lexicographic_and_complete() {
        let cs = combinations(5, 3);
        assert_eq!(cs.len(), 10);
        assert_eq!(cs.first().unwrap(), &vec![0, 1, 2]);
        assert_eq!(cs.last().unwrap(), &vec![2, 3, 4]);
        let mut sorted = cs.clone();
        sorted.sort();
        assert_eq!(cs, sorted);
    }

    #[test]
    fn combination_masks_count_and_weight() {
        for n in 0..=10 {
            for k in 0..=n {
                let masks = combination_masks(n, k);
                assert_eq!(masks.len() as u128, binomial(n, k));
                assert!(masks.iter().all(|m| m.count_ones() as usize == k));
                let mut sorted = masks.clone();
                sorted.sort();
                assert_eq!(masks, sorted);
            }
        }
    }
}
