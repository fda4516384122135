//! Exact rank of integer matrices.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Rank over the rationals by fraction-free (Bareiss) elimination.
///
/// After `k` pivots every live entry is a `(k+1) x (k+1)` minor of the
/// input, so dividing by the previous pivot is exact even when pivotless
/// columns are skipped.
pub fn rank(mut rows: Vec<Vec<BigInt>>) -> usize {
    let m = rows.len();
    let Some(ncols) = rows.first().map(Vec::len) else {
        return 0;
    };
    let mut prev = BigInt::one();
    let mut r = 0;
    for col in 0..ncols {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let (top, rest) = rows.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = &pivot_row[col];
        for row in rest.iter_mut() {
            let factor = std::mem::take(&mut row[col]);
            for c in col + 1..ncols {
                let v = pivot * &row[c] - &factor * &pivot_row[c];
                debug_assert!((&v % &prev).is_zero(), "Bareiss division not exact");
                row[c] = v / &prev;
            }
        }
        prev = pivot.clone();
        r += 1;
    }
    r
}
