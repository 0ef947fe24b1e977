//! Interval vectors and the maps that act on them.
//!
//! The clockwise gaps of an ascending cycle form a [`DifferenceVector`]: a
//! tuple of integers that, for an `N`-pulse rhythm, lies in `[0, N-1]^n` and
//! sums to `N`. The averaging step on cycles becomes the entrywise
//! [`fc_average`] of consecutive gaps ([`DifferenceVector::average_step`]),
//! which conserves the sum — intervals are redistributed, never created.
//!
//! A second family of maps (rotation, reversal, shifting every entry by one)
//! doesn't care about the sum constraint and is defined on all integer
//! tuples. Shifting changes the sum, so it deliberately forgets the pulse
//! context; rotation and reversal keep it. The composite maps
//! [`parity_raise`] and [`parity_raise_step`] conjugate an odd-minimum
//! vector into an even-minimum one without disturbing its width or the
//! number of minimal entries, which is what lets every minimum-parity case
//! be reduced to the even one.
//!
//! [`parity_raise`]: DifferenceVector::parity_raise
//! [`parity_raise_step`]: DifferenceVector::parity_raise_step

use std::hash::{Hash, Hasher};

use crate::averages::{cf_average, fc_average};
use crate::error::Error;

/// A nonempty tuple of integers, usually the inter-onset intervals of some
/// rhythm.
///
/// When the vector is known to be the gap tuple of an `N`-pulse cycle it
/// carries `N` along as context. The context is bookkeeping, not identity:
/// equality and hashing look at the entries alone.
#[derive(Debug, Clone)]
pub struct DifferenceVector {
    entries: Vec<i64>,
    modulus: Option<u32>,
}

impl PartialEq for DifferenceVector {
    fn eq(&self, other: &Self) -> bool {
        self.entries == other.entries
    }
}

impl Eq for DifferenceVector {}

impl Hash for DifferenceVector {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.entries.hash(state);
    }
}

impl DifferenceVector {
    /// An arbitrary integer tuple with no pulse context.
    pub fn new(entries: Vec<i64>) -> Result<Self, Error> {
        if entries.is_empty() {
            return Err(Error::EmptyVector);
        }
        Ok(DifferenceVector {
            entries,
            modulus: None,
        })
    }

    /// A gap tuple for an `N`-pulse cycle: every entry in `0..N`, entries
    /// summing to `N`.
    pub fn with_modulus(entries: Vec<i64>, modulus: u32) -> Result<Self, Error> {
        if modulus < 2 {
            return Err(Error::ModulusTooSmall(modulus));
        }
        if entries.is_empty() {
            return Err(Error::EmptyVector);
        }
        for (index, &value) in entries.iter().enumerate() {
            if value < 0 || value >= i64::from(modulus) {
                return Err(Error::EntryOutOfRange {
                    index,
                    value,
                    modulus,
                });
            }
        }
        let sum: i64 = entries.iter().sum();
        if sum != i64::from(modulus) {
            return Err(Error::WrongEntrySum { sum, modulus });
        }
        Ok(DifferenceVector {
            entries,
            modulus: Some(modulus),
        })
    }

    /// Trusted constructor for gap tuples produced by a validated cycle.
    pub(crate) fn from_cycle_gaps(entries: Vec<i64>, modulus: u32) -> Self {
        debug_assert_eq!(entries.iter().sum::<i64>(), i64::from(modulus));
        debug_assert!(entries.iter().all(|&g| g >= 1));
        DifferenceVector {
            entries,
            modulus: Some(modulus),
        }
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The pulse count this vector is a gap tuple for, if known.
    pub fn context_modulus(&self) -> Option<u32> {
        self.modulus
    }

    pub fn sum(&self) -> i64 {
        self.entries.iter().sum()
    }

    pub fn min(&self) -> i64 {
        *self.entries.iter().min().expect("nonempty")
    }

    pub fn max(&self) -> i64 {
        *self.entries.iter().max().expect("nonempty")
    }

    /// Spread of the entries: `max - min`. Zero for constant vectors.
    pub fn width(&self) -> i64 {
        self.max() - self.min()
    }

    pub(crate) fn same_context(&self, entries: Vec<i64>) -> Self {
        DifferenceVector {
            entries,
            modulus: self.modulus,
        }
    }

    fn no_context(&self, entries: Vec<i64>) -> Self {
        DifferenceVector {
            entries,
            modulus: None,
        }
    }

    /// Entrywise parity-steered average of each entry with its cyclic
    /// successor. Conserves the sum, so gap tuples stay gap tuples.
    pub fn average_step(&self) -> Self {
        let mut out = Vec::new();
        fc_step_into(&self.entries, &mut out);
        self.same_context(out)
    }

    /// The mirrored variant: entrywise [`cf_average`] with the successor.
    pub fn average_step_cf(&self) -> Self {
        let n = self.entries.len();
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(cf_average(self.entries[k], self.entries[(k + 1) % n]));
        }
        self.same_context(out)
    }

    /// Rotation moving the last entry to the front.
    pub fn rotate_right(&self) -> Self {
        let mut entries = self.entries.clone();
        entries.rotate_right(1);
        self.same_context(entries)
    }

    /// Rotation moving the first entry to the back.
    pub fn rotate_left(&self) -> Self {
        let mut entries = self.entries.clone();
        entries.rotate_left(1);
        self.same_context(entries)
    }

    /// Reversal of the reading order.
    pub fn reversed(&self) -> Self {
        let mut entries = self.entries.clone();
        entries.reverse();
        self.same_context(entries)
    }

    /// Adds one to every entry. The sum grows by `n`, so any pulse context
    /// is dropped.
    pub fn shift_up(&self) -> Self {
        self.no_context(self.entries.iter().map(|d| d + 1).collect())
    }

    /// Subtracts one from every entry, dropping any pulse context.
    pub fn shift_down(&self) -> Self {
        self.no_context(self.entries.iter().map(|d| d - 1).collect())
    }

    /// Reverse, then shift up: turns a vector with odd minimum `m` into one
    /// with even minimum `m + 1`, preserving width and the number of
    /// minimal entries.
    pub fn parity_raise(&self) -> Self {
        self.reversed().shift_up()
    }

    /// Where [`parity_raise`] lands after one averaging step: rotate right,
    /// reverse, shift up.
    ///
    /// One step commutes across the raise —
    /// `d.parity_raise().average_step() == d.average_step().parity_raise_step()`
    /// — and iterating slides the frame: `k` steps after the raise equal
    /// `parity_raise_step` of the `k`-step image rotated right `k - 1`
    /// times.
    ///
    /// [`parity_raise`]: DifferenceVector::parity_raise
    pub fn parity_raise_step(&self) -> Self {
        self.rotate_right().reversed().shift_up()
    }

    /// Least `p >= 1` such that rotating by `p` reproduces the vector.
    /// Always a divisor of the length.
    pub fn rotation_period(&self) -> usize {
        let n = self.entries.len();
        (1..=n)
            .filter(|&p| n.is_multiple_of(p))
            .find(|&p| (0..n).all(|i| self.entries[i] == self.entries[(i + p) % n]))
            .expect("the full length always works")
    }

    /// Whether some rotation of `other` equals `self`.
    pub fn is_rotation_of(&self, other: &Self) -> bool {
        let n = self.entries.len();
        if other.entries.len() != n {
            return false;
        }
        (0..n).any(|r| (0..n).all(|i| self.entries[i] == other.entries[(i + r) % n]))
    }
}

impl std::fmt::Display for DifferenceVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (k, d) in self.entries.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

/// Allocation-free averaging step for hot loops: writes the entrywise
/// [`fc_average`] of consecutive entries of `src` into `out`.
pub fn fc_step_into(src: &[i64], out: &mut Vec<i64>) {
    let n = src.len();
    out.clear();
    out.reserve(n);
    for k in 0..n {
        out.push(fc_average(src[k], src[(k + 1) % n]));
    }
}
