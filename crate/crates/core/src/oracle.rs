//! Brute-force oracles that do not use the closed-form Hilbert symbol.

use alloc::vec;

use crate::localfield::Sign;

/// `(x, y)₂` over `Q_p` from solvability of `z² = x X² + y Y²`.
///
/// `x` and `y` must have `p`-adic valuation 0 or 1. A solution mod `p⁴`
/// with `X` or `Y` a unit lifts by Hensel's lemma (the relevant partial
/// derivative has valuation at most 1), and a primitive solution must have
/// `X` or `Y` a unit, so the search is exact.
pub fn conic_hilbert(p: u64, x: i64, y: i64) -> Sign {
    let p = p as i64;
    let m = p * p * p * p;
    let mut is_square = vec![false; m as usize];
    for z in 0..m {
        is_square[(z * z % m) as usize] = true;
    }
    let (xr, yr) = (x.rem_euclid(m), y.rem_euclid(m));
    for a in 0..m {
        let ax = xr * (a * a % m) % m;
        for b in 0..m {
            if a % p == 0 && b % p == 0 {
                continue;
            }
            if is_square[((ax + yr * (b * b % m)) % m) as usize] {
                return Sign::Plus;
            }
        }
    }
    Sign::Minus
}

/// `(x, y)₂` over `R` from a grid search: `z² = x X² + y Y²` has a real
/// solution with `(X, Y) ≠ 0` iff the form takes a nonnegative value on
/// some nonzero grid point.
pub fn real_grid_hilbert(x: i64, y: i64) -> Sign {
    for a in -3i64..=3 {
        for b in -3i64..=3 {
            if (a, b) != (0, 0) && x * a * a + y * b * b >= 0 {
                return Sign::Plus;
            }
        }
    }
    Sign::Minus
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classic_values() {
        // (3,3)_3 = (3,-1)_3 = -1 and (-1,-1)_3 = 1.
        assert_eq!(conic_hilbert(3, 3, 3), Sign::Minus);
        assert_eq!(conic_hilbert(3, -1, -1), Sign::Plus);
        assert_eq!(conic_hilbert(5, 2, 5), Sign::Minus);
        assert_eq!(conic_hilbert(5, 5, 5), Sign::Plus);
        assert_eq!(real_grid_hilbert(-1, -2), Sign::Minus);
        assert_eq!(real_grid_hilbert(-1, 2), Sign::Plus);
    }
}
