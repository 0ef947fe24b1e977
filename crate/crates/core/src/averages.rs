//! Discrete midpoints.
//!
//! Averaging two integers rarely lands on an integer, so each operation here
//! commits to a rounding rule. [`floor_average`] and [`ceil_average`] always
//! round the same way. [`fc_average`] and [`cf_average`] steer by the parity
//! of the *first* argument: `fc` rounds down after an even entry and up after
//! an odd one, `cf` does the opposite. That steering is what makes the
//! entrywise averaging of interval vectors conserve their sum.
//!
//! On the pulse circle, [`residue_average`] walks from `a` halfway toward `b`
//! (measuring the gap clockwise), and [`vertex_average`] does the equivalent
//! construction on polygon vertices: rotate `p` by the discrete square root
//! of the rotation carrying `p` to `q`. The two agree, and the exhaustive
//! tests below hold them together.

use crate::error::Error;
use crate::residue::Residue;

/// `(a + b) / 2` rounded toward negative infinity.
pub fn floor_average(a: i64, b: i64) -> i64 {
    ((i128::from(a) + i128::from(b)).div_euclid(2)) as i64
}

/// `(a + b) / 2` rounded toward positive infinity.
pub fn ceil_average(a: i64, b: i64) -> i64 {
    ((i128::from(a) + i128::from(b) + 1).div_euclid(2)) as i64
}

/// Floor the average after an even first argument, ceil it after an odd one.
pub fn fc_average(a: i64, b: i64) -> i64 {
    if a.rem_euclid(2) == 0 {
        floor_average(a, b)
    } else {
        ceil_average(a, b)
    }
}

/// Ceil the average after an even first argument, floor it after an odd one.
pub fn cf_average(a: i64, b: i64) -> i64 {
    if a.rem_euclid(2) == 0 {
        ceil_average(a, b)
    } else {
        floor_average(a, b)
    }
}

/// Walks from `a` halfway (rounded down) along the clockwise gap to `b`.
///
/// The result lies in the cyclic interval `[a, b)` whenever `a != b`, and
/// `residue_average(a, a) == a`.
pub fn residue_average(a: Residue, b: Residue) -> Result<Residue, Error> {
    let gap = b.sub(a)?;
    a.add(gap.half())
}

/// The discrete square root of a polygon vertex: halve its exponent,
/// dropping the remainder.
pub fn vertex_sqrt(p: Residue) -> Residue {
    p.half()
}

/// Midpoint vertex of the polygon edge from `p` to `q`: rotate `p` by the
/// square root of the rotation carrying `p` to `q`.
pub fn vertex_average(p: Residue, q: Residue) -> Result<Residue, Error> {
    let ratio = p.neg().add(q)?;
    p.add(vertex_sqrt(ratio))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(value: u32, modulus: u32) -> Residue {
        Residue::new(value, modulus).unwrap()
    }

    #[test]
    fn plain_averages_round_as_promised() {
        assert_eq!(floor_average(3, 8), 5);
        assert_eq!(ceil_average(3, 8), 6);
        assert_eq!(floor_average(4, 4), 4);
        // floor means toward -infinity, not toward zero
        assert_eq!(floor_average(-3, 2), -1);
        assert_eq!(ceil_average(-3, 2), 0);
    }

    #[test]
    fn parity_steered_averages() {
        assert_eq!(fc_average(2, 5), 3);
        assert_eq!(fc_average(3, 6), 5);
        assert_eq!(fc_average(4, 4), 4);
        assert_eq!(cf_average(2, 5), 4);
        assert_eq!(cf_average(3, 6), 4);
        assert_eq!(cf_average(4, 4), 4);
    }

    #[test]
    fn parity_of_negatives_is_mathematical() {
        // -3 is odd, -4 is even
        assert_eq!(fc_average(-3, -2), -2);
        assert_eq!(fc_average(-4, -1), -3);
        assert_eq!(fc_average(-1, 0), 0);
        assert_eq!(cf_average(-3, -2), -3);
        assert_eq!(cf_average(-4, -1), -2);
    }

    #[test]
    fn residue_average_frozen_values() {
        assert_eq!(residue_average(r(3, 7), r(3, 7)).unwrap(), r(3, 7));
        assert_eq!(residue_average(r(3, 16), r(7, 16)).unwrap(), r(5, 16));
        assert_eq!(residue_average(r(14, 16), r(0, 16)).unwrap(), r(15, 16));
        assert_eq!(residue_average(r(12, 16), r(4, 16)).unwrap(), r(0, 16));
    }

    #[test]
    fn vertex_average_frozen_values() {
        assert_eq!(vertex_sqrt(r(7, 16)), r(3, 16));
        assert_eq!(vertex_sqrt(r(0, 16)), r(0, 16));
        assert_eq!(vertex_average(r(14, 16), r(0, 16)).unwrap(), r(15, 16));
        assert_eq!(vertex_average(r(12, 16), r(4, 16)).unwrap(), r(0, 16));
    }

    #[test]
    fn residue_average_lands_in_the_leading_arc() {
        for n in 2..=12u32 {
            for a in 0..n {
                for b in 0..n {
                    let (ra, rb) = (r(a, n), r(b, n));
                    let mid = residue_average(ra, rb).unwrap();
                    if a == b {
                        assert_eq!(mid, ra);
                    } else {
                        assert!(mid.in_arc(ra, rb).unwrap(), "av({a},{b}) mod {n} = {mid}");
                    }
                }
            }
        }
    }

    #[test]
    fn residue_and_vertex_averages_agree() {
        for n in 2..=12u32 {
            for a in 0..n {
                for b in 0..n {
                    let z = residue_average(r(a, n), r(b, n)).unwrap();
                    let v = vertex_average(r(a, n), r(b, n)).unwrap();
                    assert_eq!(z, v, "a={a} b={b} n={n}");
                    if a != b {
                        assert!(v.in_arc(r(a, n), r(b, n)).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn residue_average_matches_the_unwrapped_form() {
        // split by whether the gap wraps: plain floor average when a <= b,
        // otherwise average against b + n and reduce
        for n in 2..=12u32 {
            for a in 0..n {
                for b in 0..n {
                    let got = residue_average(r(a, n), r(b, n)).unwrap().value();
                    let (a, b, n) = (i64::from(a), i64::from(b), i64::from(n));
                    let expect = if a <= b {
                        floor_average(a, b)
                    } else {
                        floor_average(a, b + n).rem_euclid(n)
                    };
                    assert_eq!(i64::from(got), expect, "a={a} b={b} n={n}");
                }
            }
        }
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn floor_and_ceil_bracket_the_sum(a in -1000i64..1000, b in -1000i64..1000) {
                prop_assert_eq!(floor_average(a, b) + ceil_average(a, b), a + b);
                prop_assert!(floor_average(a, b) <= ceil_average(a, b));
            }

            #[test]
            fn steered_averages_stay_between_their_arguments(a in -1000i64..1000, b in -1000i64..1000) {
                let lo = a.min(b);
                let hi = a.max(b);
                prop_assert!((lo..=hi).contains(&fc_average(a, b)));
                prop_assert!((lo..=hi).contains(&cf_average(a, b)));
            }

            #[test]
            fn shifting_both_arguments_swaps_the_steering(p in -1000i64..1000, q in -1000i64..1000) {
                prop_assert_eq!(fc_average(p + 1, q + 1), cf_average(p, q) + 1);
                prop_assert_eq!(cf_average(p + 1, q + 1), fc_average(p, q) + 1);
            }
        }
    }
}
