//! Rhythm representations and the averaging step.
//!
//! The same rhythm shows up in three guises:
//!
//! * [`OnsetRhythm`] — the set of sounded pulses, order-free;
//! * [`AscendingCycle`] — a tuple of pulse positions that climbs strictly and
//!   wraps past the top exactly once (think of reading the onsets clockwise
//!   starting anywhere);
//! * [`PolygonView`] — the onsets as vertices of a polygon inscribed in the
//!   pulse circle, stored by exponent.
//!
//! Conversions between them are lossless. Each carries an `average_step`
//! that replaces every onset with the discrete midpoint between itself and
//! its clockwise successor; the three steps agree under the conversions.

use std::collections::BTreeSet;

use crate::averages::{residue_average, vertex_average};
use crate::error::Error;
use crate::residue::Residue;
use crate::transforms::DifferenceVector;

/// A set of onsets in an `N`-pulse cycle. At least one pulse sounds and at
/// least one is silent.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OnsetRhythm {
    pulses: u32,
    onsets: BTreeSet<u32>,
}

impl OnsetRhythm {
    pub fn new(pulses: u32, onsets: impl IntoIterator<Item = u32>) -> Result<Self, Error> {
        if pulses < 3 {
            return Err(Error::PulseCountTooSmall(pulses));
        }
        let mut set = BTreeSet::new();
        for onset in onsets {
            if onset >= pulses {
                return Err(Error::OnsetOutOfRange { onset, pulses });
            }
            if !set.insert(onset) {
                return Err(Error::DuplicateOnset(onset));
            }
        }
        let n = set.len();
        if n == 0 || n >= pulses as usize {
            return Err(Error::BadOnsetCount { onsets: n, pulses });
        }
        Ok(OnsetRhythm { pulses, onsets: set })
    }

    pub fn pulses(&self) -> u32 {
        self.pulses
    }

    pub fn onset_count(&self) -> usize {
        self.onsets.len()
    }

    /// Onsets in ascending pulse order.
    pub fn onsets(&self) -> impl Iterator<Item = u32> + '_ {
        self.onsets.iter().copied()
    }

    pub fn contains(&self, pulse: u32) -> bool {
        self.onsets.contains(&pulse)
    }

    /// Reads the onsets clockwise starting from the smallest.
    ///
    /// Needs at least two onsets; a single onset has no cycle to walk.
    pub fn to_cycle(&self) -> Result<AscendingCycle, Error> {
        AscendingCycle::new(self.onsets().collect(), self.pulses)
    }

    /// One round of onset smoothing: every onset moves to the discrete
    /// midpoint between itself and its clockwise successor.
    pub fn average_step(&self) -> Result<OnsetRhythm, Error> {
        self.to_cycle()?.average_step().to_rhythm()
    }
}

/// A tuple of distinct pulse positions that ascends strictly except for a
/// single wrap past pulse 0.
///
/// Every rotation of a sorted onset list qualifies, and nothing else does.
/// The position of the wrap is the tuple's [`jumping_number`].
///
/// [`jumping_number`]: AscendingCycle::jumping_number
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AscendingCycle {
    entries: Vec<u32>,
    modulus: u32,
    jump: usize,
}

impl AscendingCycle {
    pub fn new(entries: Vec<u32>, modulus: u32) -> Result<Self, Error> {
        if modulus < 2 {
            return Err(Error::ModulusTooSmall(modulus));
        }
        if entries.len() < 2 {
            return Err(Error::CycleTooShort(entries.len()));
        }
        for &e in &entries {
            if e >= modulus {
                return Err(Error::ValueOutOfRange {
                    value: i64::from(e),
                    modulus,
                });
            }
        }
        let jump = Self::find_single_descent(&entries)?;
        Ok(AscendingCycle {
            entries,
            modulus,
            jump,
        })
    }

    /// Index of the unique `k` with `entries[k] > entries[k + 1]`, reading
    /// cyclically. Errors unless exactly one such `k` exists.
    fn find_single_descent(entries: &[u32]) -> Result<usize, Error> {
        let n = entries.len();
        let mut descent = None;
        for k in 0..n {
            let (a, b) = (entries[k], entries[(k + 1) % n]);
            if a == b {
                return Err(Error::NotAscendingCycle(format!(
                    "entries {k} and {} are both {a}",
                    (k + 1) % n
                )));
            }
            if a > b {
                if let Some(first) = descent {
                    return Err(Error::NotAscendingCycle(format!(
                        "descents at both {first} and {k}"
                    )));
                }
                descent = Some(k);
            }
        }
        descent.ok_or_else(|| {
            Error::NotAscendingCycle("no descent; entries never wrap".to_string())
        })
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Where the cycle wraps: the unique index whose successor is smaller.
    pub fn jumping_number(&self) -> usize {
        self.jump
    }

    /// Entrywise discrete midpoint with the clockwise successor.
    pub fn average_step(&self) -> AscendingCycle {
        let n = self.entries.len();
        let mut next = Vec::with_capacity(n);
        for k in 0..n {
            let a = Residue::new(self.entries[k], self.modulus).expect("entries are residues");
            let b = Residue::new(self.entries[(k + 1) % n], self.modulus)
                .expect("entries are residues");
            next.push(residue_average(a, b).expect("same modulus").value());
        }
        AscendingCycle::new(next, self.modulus)
            .expect("averaging keeps entries distinct and single-wrapped")
    }

    /// Clockwise gaps to each successor. The gaps are all positive and sum
    /// to the modulus.
    pub fn intervals(&self) -> DifferenceVector {
        let n = self.entries.len();
        let m = i64::from(self.modulus);
        let mut gaps = Vec::with_capacity(n);
        for k in 0..n {
            let a = i64::from(self.entries[k]);
            let b = i64::from(self.entries[(k + 1) % n]);
            gaps.push((b - a).rem_euclid(m));
        }
        DifferenceVector::from_cycle_gaps(gaps, self.modulus)
    }

    /// Forgets the starting point, keeping the onset set.
    ///
    /// Fails only when the cycle sounds every pulse, which a rhythm cannot.
    pub fn to_rhythm(&self) -> Result<OnsetRhythm, Error> {
        if self.entries.len() == self.modulus as usize {
            return Err(Error::NoRestPulse);
        }
        OnsetRhythm::new(self.modulus, self.entries.iter().copied())
    }

    /// The inscribed polygon with these entries as vertex exponents.
    pub fn to_polygon(&self) -> PolygonView {
        PolygonView {
            exponents: self.entries.clone(),
            modulus: self.modulus,
        }
    }
}

/// A polygon inscribed in the circle of `N`-th roots of unity, stored as the
/// exponent of each vertex in counterclockwise reading order.
///
/// Only consecutive vertices must differ, so this type is slightly roomier
/// than [`AscendingCycle`]; converting back validates the single-wrap
/// property.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolygonView {
    exponents: Vec<u32>,
    modulus: u32,
}

impl PolygonView {
    pub fn new(exponents: Vec<u32>, modulus: u32) -> Result<Self, Error> {
        if modulus < 2 {
            return Err(Error::ModulusTooSmall(modulus));
        }
        if exponents.len() < 2 {
            return Err(Error::CycleTooShort(exponents.len()));
        }
        let n = exponents.len();
        for (k, &e) in exponents.iter().enumerate() {
            if e >= modulus {
                return Err(Error::ValueOutOfRange {
                    value: i64::from(e),
                    modulus,
                });
            }
            if e == exponents[(k + 1) % n] {
                return Err(Error::RepeatedVertex(k, (k + 1) % n));
            }
        }
        Ok(PolygonView { exponents, modulus })
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Replaces every vertex with the midpoint vertex of the edge to its
    /// successor.
    pub fn average_step(&self) -> PolygonView {
        let n = self.exponents.len();
        let mut next = Vec::with_capacity(n);
        for k in 0..n {
            let p = Residue::new(self.exponents[k], self.modulus).expect("exponents are residues");
            let q = Residue::new(self.exponents[(k + 1) % n], self.modulus)
                .expect("exponents are residues");
            next.push(vertex_average(p, q).expect("same modulus").value());
        }
        // midpoints of adjacent edges land in disjoint arcs, so they differ
        PolygonView::new(next, self.modulus).expect("edge midpoints stay distinct")
    }

    /// Reads the vertices back as an ascending cycle, validating that they
    /// wrap exactly once.
    pub fn to_cycle(&self) -> Result<AscendingCycle, Error> {
        AscendingCycle::new(self.exponents.clone(), self.modulus)
    }
}
