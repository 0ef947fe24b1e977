//! Arithmetic in the cyclic group of pulse positions.
//!
//! A [`Residue`] is a pulse position `0 <= value < modulus` tagged with its
//! modulus, so positions from different cycle lengths cannot be mixed up
//! silently. All arithmetic wraps: adding 2 to position 14 of a 16-pulse
//! cycle lands on 0.

use crate::error::Error;

/// A value in `{0, 1, ..., modulus - 1}` with wrapping arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Residue {
    value: u32,
    modulus: u32,
}

// the fallible signatures (mixed moduli are an error) rule out the std
// operator traits
#[allow(clippy::should_implement_trait)]
impl Residue {
    /// Wraps an arbitrary integer into `0..modulus` (remainder map).
    ///
    /// Negative inputs wrap upward: `-1` mod 16 is 15.
    pub fn reduce(value: i64, modulus: u32) -> Result<Self, Error> {
        if modulus < 2 {
            return Err(Error::ModulusTooSmall(modulus));
        }
        let value = value.rem_euclid(i64::from(modulus)) as u32;
        Ok(Residue { value, modulus })
    }

    /// Builds a residue from a value that must already lie in `0..modulus`.
    pub fn new(value: u32, modulus: u32) -> Result<Self, Error> {
        if modulus < 2 {
            return Err(Error::ModulusTooSmall(modulus));
        }
        if value >= modulus {
            return Err(Error::ValueOutOfRange {
                value: i64::from(value),
                modulus,
            });
        }
        Ok(Residue { value, modulus })
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn modulus(self) -> u32 {
        self.modulus
    }

    /// Wrapping addition. Fails if the moduli differ.
    pub fn add(self, other: Self) -> Result<Self, Error> {
        let other = self.check_same_modulus(other)?;
        Ok(Residue {
            value: (self.value + other.value) % self.modulus,
            modulus: self.modulus,
        })
    }

    /// Wrapping subtraction: the gap walked forward from `other` to `self`.
    pub fn sub(self, other: Self) -> Result<Self, Error> {
        let other = self.check_same_modulus(other)?;
        let value = (self.value + self.modulus - other.value) % self.modulus;
        Ok(Residue {
            value,
            modulus: self.modulus,
        })
    }

    /// The additive inverse.
    pub fn neg(self) -> Self {
        Residue {
            value: (self.modulus - self.value) % self.modulus,
            modulus: self.modulus,
        }
    }

    /// Halves the value, rounding down. Stays a residue since the value only
    /// shrinks.
    pub fn half(self) -> Self {
        Residue {
            value: self.value / 2,
            modulus: self.modulus,
        }
    }

    /// Membership in the half-open cyclic interval `[from, to)`.
    ///
    /// The interval runs clockwise from `from` up to but excluding `to`,
    /// wrapping through 0 when `from > to`. It is empty when `from == to`.
    pub fn in_arc(self, from: Self, to: Self) -> Result<bool, Error> {
        let from = self.check_same_modulus(from)?;
        let to = self.check_same_modulus(to)?;
        let offset = self.sub(from)?.value;
        let span = to.sub(from)?.value;
        Ok(offset < span)
    }

    fn check_same_modulus(self, other: Self) -> Result<Self, Error> {
        if self.modulus == other.modulus {
            Ok(other)
        } else {
            Err(Error::ModulusMismatch {
                left: self.modulus,
                right: other.modulus,
            })
        }
    }
}

impl std::fmt::Display for Residue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(value: u32, modulus: u32) -> Residue {
        Residue::new(value, modulus).unwrap()
    }

    #[test]
    fn addition_wraps_past_the_top() {
        assert_eq!(r(14, 16).add(r(2, 16)).unwrap(), r(0, 16));
        assert_eq!(r(7, 16).add(r(4, 16)).unwrap(), r(11, 16));
        assert_eq!(r(13, 16).add(r(4, 16)).unwrap(), r(1, 16));
    }

    #[test]
    fn reduce_maps_negatives_upward() {
        assert_eq!(Residue::reduce(-1, 16).unwrap(), r(15, 16));
        assert_eq!(Residue::reduce(-17, 16).unwrap(), r(15, 16));
        assert_eq!(Residue::reduce(16, 16).unwrap(), r(0, 16));
        assert_eq!(Residue::reduce(25, 12).unwrap(), r(1, 12));
    }

    #[test]
    fn mixed_moduli_are_rejected() {
        assert_eq!(
            r(3, 16).add(r(3, 12)),
            Err(Error::ModulusMismatch { left: 16, right: 12 })
        );
        assert!(matches!(r(3, 16).sub(r(1, 8)), Err(Error::ModulusMismatch { .. })));
    }

    #[test]
    fn constructors_validate() {
        assert_eq!(Residue::new(5, 5), Err(Error::ValueOutOfRange { value: 5, modulus: 5 }));
        assert_eq!(Residue::new(0, 1), Err(Error::ModulusTooSmall(1)));
        assert_eq!(Residue::reduce(9, 0), Err(Error::ModulusTooSmall(0)));
    }

    #[test]
    fn subtraction_walks_backward() {
        assert_eq!(r(2, 16).sub(r(14, 16)).unwrap(), r(4, 16));
        assert_eq!(r(14, 16).sub(r(2, 16)).unwrap(), r(12, 16));
        assert_eq!(r(0, 12).neg(), r(0, 12));
        assert_eq!(r(5, 12).neg(), r(7, 12));
    }

    #[test]
    fn arcs_wrap_and_exclude_the_endpoint() {
        assert!(r(14, 16).in_arc(r(12, 16), r(3, 16)).unwrap());
        assert!(r(1, 16).in_arc(r(12, 16), r(3, 16)).unwrap());
        assert!(!r(3, 16).in_arc(r(12, 16), r(3, 16)).unwrap());
        assert!(!r(7, 16).in_arc(r(12, 16), r(3, 16)).unwrap());
        // [a, a) is empty
        assert!(!r(5, 16).in_arc(r(5, 16), r(5, 16)).unwrap());
    }

    #[test]
    fn exhaustive_arc_membership_matches_walking() {
        // walk the circle from `from` and see whether we pass `x` before `to`
        for n in 2..=10u32 {
            for from in 0..n {
                for to in 0..n {
                    for x in 0..n {
                        let mut expect = false;
                        let mut cursor = from;
                        while cursor != to {
                            if cursor == x {
                                expect = true;
                                break;
                            }
                            cursor = (cursor + 1) % n;
                        }
                        let got = r(x, n).in_arc(r(from, n), r(to, n)).unwrap();
                        assert_eq!(got, expect, "x={x} in [{from},{to}) mod {n}");
                    }
                }
            }
        }
    }
}
