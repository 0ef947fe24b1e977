//! Brute-force cross-checks for everything the other modules claim.
//!
//! Nothing here is needed to *run* the averaging dynamics; all of it exists
//! to catch the fast paths lying. The module enumerates entire state spaces
//! (interval vectors of a given pulse count, single-wrap cycles), re-derives
//! their sizes from binomial formulas, replays every algebraic identity the
//! transforms rely on over those spaces, and rebuilds orbit structure with a
//! generic functional-graph walk that knows nothing about widths or
//! parities.
//!
//! The identity suite takes its three load-bearing primitives — the
//! parity-steered average, wrapping addition, and the single-descent
//! membership test — through a [`Primitives`] table. Tests swap in broken
//! variants to prove the suite would actually notice; everything else
//! always runs against the real library.

use std::collections::HashMap;
use std::fmt::Write as _;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::averages::{cf_average, fc_average, residue_average, vertex_average};
use crate::dynamics::{classify, TerminalClass};
use crate::error::Error;
use crate::residue::Residue;
use crate::rhythm::{AscendingCycle, OnsetRhythm};
use crate::transforms::DifferenceVector;

const RANDOM_SEED: u64 = 0xbea7_5eed;
const RANDOM_VECTORS_PER_LEN: usize = 300;
const ITERATE_DEPTH: usize = 5;

/// Binomial coefficient, exact in `u128` for the sizes used here.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
    }
    acc
}

/// Number of length-`parts` vectors over `0..pulses` summing to `pulses`.
pub fn interval_vector_count(pulses: u32, parts: usize) -> u128 {
    let (n, p) = (u64::from(pulses), parts as u64);
    if p == 0 {
        return 0;
    }
    // compositions with parts >= 0, minus the `parts` many that put the
    // whole sum on one entry (the only way to break the < pulses bound)
    binomial(n + p - 1, p - 1).saturating_sub(u128::from(p))
}

/// Number of those with every entry positive: gap tuples of actual cycles.
pub fn positive_interval_vector_count(pulses: u32, parts: usize) -> u128 {
    let (n, p) = (u64::from(pulses), parts as u64);
    if p < 2 || p > n {
        // a single positive entry would have to equal `pulses`, out of range
        return 0;
    }
    binomial(n - 1, p - 1)
}

/// Number of single-wrap cycles: each of the `C(pulses, parts)` onset sets
/// read from each of its `parts` starting points.
pub fn cycle_count(pulses: u32, parts: usize) -> u128 {
    binomial(u64::from(pulses), parts as u64) * parts as u128
}

fn visit_compositions(
    buf: &mut Vec<i64>,
    remaining: i64,
    parts_left: usize,
    lo: i64,
    hi: i64,
    f: &mut impl FnMut(&[i64]),
) {
    if parts_left == 1 {
        if (lo..=hi).contains(&remaining) {
            buf.push(remaining);
            f(buf);
            buf.pop();
        }
        return;
    }
    let rest = parts_left as i64 - 1;
    let first = lo.max(remaining - hi * rest);
    let last = hi.min(remaining - lo * rest);
    for v in first..=last {
        buf.push(v);
        visit_compositions(buf, remaining - v, parts_left - 1, lo, hi, f);
        buf.pop();
    }
}

/// Visits every length-`parts` vector over `0..pulses` summing to `pulses`,
/// in lexicographic order, without allocating per vector.
pub fn for_each_interval_vector(pulses: u32, parts: usize, mut f: impl FnMut(&[i64])) {
    if parts == 0 {
        return;
    }
    let mut buf = Vec::with_capacity(parts);
    visit_compositions(
        &mut buf,
        i64::from(pulses),
        parts,
        0,
        i64::from(pulses) - 1,
        &mut f,
    );
}

/// Like [`for_each_interval_vector`] but with every entry at least 1.
pub fn for_each_positive_interval_vector(pulses: u32, parts: usize, mut f: impl FnMut(&[i64])) {
    if parts == 0 {
        return;
    }
    let mut buf = Vec::with_capacity(parts);
    visit_compositions(
        &mut buf,
        i64::from(pulses),
        parts,
        1,
        i64::from(pulses) - 1,
        &mut f,
    );
}

/// Materialized, lexicographically ordered interval-vector space.
pub fn enumerate_interval_vectors(pulses: u32, parts: usize) -> Vec<DifferenceVector> {
    let mut out = Vec::new();
    for_each_interval_vector(pulses, parts, |entries| {
        out.push(
            DifferenceVector::with_modulus(entries.to_vec(), pulses)
                .expect("enumeration yields valid gap tuples"),
        );
    });
    out
}

/// The subset with positive entries — exactly the images of cycles.
pub fn enumerate_positive_interval_vectors(pulses: u32, parts: usize) -> Vec<DifferenceVector> {
    let mut out = Vec::new();
    for_each_positive_interval_vector(pulses, parts, |entries| {
        out.push(
            DifferenceVector::with_modulus(entries.to_vec(), pulses)
                .expect("enumeration yields valid gap tuples"),
        );
    });
    out
}

fn visit_subsets(pulses: u32, parts: usize, f: &mut impl FnMut(&[u32])) {
    fn rec(start: u32, pulses: u32, left: usize, buf: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
        if left == 0 {
            f(buf);
            return;
        }
        if (pulses - start) < left as u32 {
            return;
        }
        for v in start..=pulses - left as u32 {
            buf.push(v);
            rec(v + 1, pulses, left - 1, buf, f);
            buf.pop();
        }
    }
    if parts as u32 <= pulses {
        rec(0, pulses, parts, &mut Vec::with_capacity(parts), f);
    }
}

/// Every single-wrap cycle with `parts` entries mod `pulses`, sorted
/// lexicographically by entries.
pub fn enumerate_cycles(pulses: u32, parts: usize) -> Vec<AscendingCycle> {
    let mut out = Vec::new();
    visit_subsets(pulses, parts, &mut |sorted| {
        for r in 0..sorted.len() {
            let mut rotated = sorted.to_vec();
            rotated.rotate_left(r);
            out.push(
                AscendingCycle::new(rotated, pulses).expect("rotations of sorted sets wrap once"),
            );
        }
    });
    out.sort_by(|a, b| a.entries().cmp(b.entries()));
    out
}

/// The three primitives the identity suite routes through, swappable so the
/// suite itself can be tested against deliberately broken arithmetic.
#[derive(Clone, Copy)]
pub struct Primitives {
    /// Parity-steered average of two integers.
    pub fc_average: fn(i64, i64) -> i64,
    /// Wrapping addition of two integers mod the given modulus.
    pub mod_add: fn(i64, i64, u32) -> i64,
    /// Membership test for single-wrap cycles.
    pub cycle_check: fn(&[u32], u32) -> bool,
}

impl Primitives {
    /// The real library operations.
    pub fn reference() -> Self {
        Primitives {
            fc_average,
            mod_add: |a, b, modulus| {
                let a = Residue::reduce(a, modulus).expect("modulus >= 2");
                let b = Residue::reduce(b, modulus).expect("modulus >= 2");
                i64::from(a.add(b).expect("same modulus").value())
            },
            cycle_check: |entries, modulus| AscendingCycle::new(entries.to_vec(), modulus).is_ok(),
        }
    }
}

/// One verified identity: how many cases ran and the first counterexample,
/// if any.
#[derive(Debug, Clone)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub cases: u64,
    pub failure: Option<String>,
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Results of the whole identity suite.
#[derive(Debug, Clone)]
pub struct IdentityReport {
    pub max_pulses: u32,
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(IdentityCheck::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn check(&self, name: &str) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

struct Check {
    name: &'static str,
    cases: u64,
    failure: Option<String>,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Check {
            name,
            cases: 0,
            failure: None,
        }
    }

    fn verify(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(witness());
        }
    }

    fn into_result(self) -> IdentityCheck {
        IdentityCheck {
            name: self.name,
            cases: self.cases,
            failure: self.failure,
        }
    }
}

struct Suite {
    residue_average_in_arc: Check,
    vertex_average_in_arc: Check,
    residue_vertex_agreement: Check,
    residue_average_case_split: Check,
    average_bounded_by_endpoints: Check,
    shift_parity_exchange: Check,
    unique_descent_membership: Check,
    intervals_land_in_gap_space: Check,
    interval_commutation: Check,
    sum_conservation: Check,
    width_monotone: Check,
    rotation_equivariance: Check,
    reverse_conjugation: Check,
    shift_conjugation: Check,
    raise_preserves_measures: Check,
    raise_intertwines_step: Check,
    raise_intertwines_iterates: Check,
}

impl Suite {
    fn new() -> Self {
        Suite {
            residue_average_in_arc: Check::new("residue_average_in_arc"),
            vertex_average_in_arc: Check::new("vertex_average_in_arc"),
            residue_vertex_agreement: Check::new("residue_vertex_agreement"),
            residue_average_case_split: Check::new("residue_average_case_split"),
            average_bounded_by_endpoints: Check::new("average_bounded_by_endpoints"),
            shift_parity_exchange: Check::new("shift_parity_exchange"),
            unique_descent_membership: Check::new("unique_descent_membership"),
            intervals_land_in_gap_space: Check::new("intervals_land_in_gap_space"),
            interval_commutation: Check::new("interval_commutation"),
            sum_conservation: Check::new("sum_conservation"),
            width_monotone: Check::new("width_monotone"),
            rotation_equivariance: Check::new("rotation_equivariance"),
            reverse_conjugation: Check::new("reverse_conjugation"),
            shift_conjugation: Check::new("shift_conjugation"),
            raise_preserves_measures: Check::new("raise_preserves_measures"),
            raise_intertwines_step: Check::new("raise_intertwines_step"),
            raise_intertwines_iterates: Check::new("raise_intertwines_iterates"),
        }
    }

    fn into_report(self, max_pulses: u32) -> IdentityReport {
        IdentityReport {
            max_pulses,
            checks: vec![
                self.residue_average_in_arc.into_result(),
                self.vertex_average_in_arc.into_result(),
                self.residue_vertex_agreement.into_result(),
                self.residue_average_case_split.into_result(),
                self.average_bounded_by_endpoints.into_result(),
                self.shift_parity_exchange.into_result(),
                self.unique_descent_membership.into_result(),
                self.intervals_land_in_gap_space.into_result(),
                self.interval_commutation.into_result(),
                self.sum_conservation.into_result(),
                self.width_monotone.into_result(),
                self.rotation_equivariance.into_result(),
                self.reverse_conjugation.into_result(),
                self.shift_conjugation.into_result(),
                self.raise_preserves_measures.into_result(),
                self.raise_intertwines_step.into_result(),
                self.raise_intertwines_iterates.into_result(),
            ],
        }
    }
}

/// The walking-halfway average built from the swappable wrapping addition.
fn residue_average_prim(a: u32, b: u32, modulus: u32, prim: &Primitives) -> i64 {
    let gap = (prim.mod_add)(i64::from(b) - i64::from(a), 0, modulus);
    (prim.mod_add)(i64::from(a), gap.div_euclid(2), modulus)
}

/// Entrywise parity-steered averaging built from the swappable average.
fn fc_step_prim(entries: &[i64], prim: &Primitives) -> Vec<i64> {
    let n = entries.len();
    (0..n)
        .map(|k| (prim.fc_average)(entries[k], entries[(k + 1) % n]))
        .collect()
}

fn fmt_entries(entries: &[i64]) -> String {
    let mut s = String::new();
    for (k, e) in entries.iter().enumerate() {
        if k > 0 {
            s.push(',');
        }
        let _ = write!(s, "{e}");
    }
    s
}

/// Membership of `x` in the clockwise half-open interval `[from, to)`,
/// done with plain integer arithmetic.
fn in_arc_raw(x: i64, from: i64, to: i64, modulus: i64) -> bool {
    (x - from).rem_euclid(modulus) < (to - from).rem_euclid(modulus)
}

fn residue_pass(max_pulses: u32, prim: &Primitives, suite: &mut Suite) {
    for modulus in 2..=max_pulses {
        let m = i64::from(modulus);
        for a in 0..modulus {
            for b in 0..modulus {
                let (ra, rb) = (
                    Residue::new(a, modulus).unwrap(),
                    Residue::new(b, modulus).unwrap(),
                );
                let via_prim = residue_average_prim(a, b, modulus, prim);
                let lib_z = i64::from(residue_average(ra, rb).unwrap().value());
                let lib_v = i64::from(vertex_average(ra, rb).unwrap().value());
                let (a, b) = (i64::from(a), i64::from(b));

                suite.residue_average_in_arc.verify(
                    if a == b {
                        via_prim == a
                    } else {
                        (0..m).contains(&via_prim) && in_arc_raw(via_prim, a, b, m)
                    },
                    || format!("N={modulus} a={a} b={b}: average {via_prim} escapes [{a},{b})"),
                );

                suite.vertex_average_in_arc.verify(
                    if a == b {
                        lib_v == a
                    } else {
                        in_arc_raw(lib_v, a, b, m)
                    },
                    || format!("N={modulus} p={a} q={b}: vertex average {lib_v} escapes [{a},{b})"),
                );

                suite.residue_vertex_agreement.verify(
                    via_prim == lib_v && lib_z == lib_v,
                    || {
                        format!(
                            "N={modulus} a={a} b={b}: wrapped {via_prim}, residue {lib_z}, vertex {lib_v}"
                        )
                    },
                );

                // the same average without any wrapping: plain floor when
                // the walk does not cross the seam, else wrap b forward
                let unwrapped = if a <= b {
                    (a + b).div_euclid(2)
                } else {
                    (a + b + m).div_euclid(2).rem_euclid(m)
                };
                suite.residue_average_case_split.verify(
                    lib_z == unwrapped,
                    || format!("N={modulus} a={a} b={b}: wrapped {lib_z}, unwrapped {unwrapped}"),
                );
            }
        }
    }
}

fn shift_grid_pass(prim: &Primitives, suite: &mut Suite) {
    for p in -8i64..=8 {
        for q in -8i64..=8 {
            let fc = (prim.fc_average)(p, q);
            let (lo, hi) = (p.min(q), p.max(q));
            suite.average_bounded_by_endpoints.verify(
                (lo..=hi).contains(&fc) && (lo..=hi).contains(&cf_average(p, q)),
                || format!("p={p} q={q}: averages escape [{lo},{hi}]"),
            );
            suite.shift_parity_exchange.verify(
                (prim.fc_average)(p + 1, q + 1) == cf_average(p, q) + 1,
                || {
                    format!(
                        "p={p} q={q}: fc(p+1,q+1)={} but cf(p,q)+1={}",
                        (prim.fc_average)(p + 1, q + 1),
                        cf_average(p, q) + 1
                    )
                },
            );
        }
    }
}

/// Scans every small tuple, admitted or not, and holds the membership
/// primitive to its contract: admitted tuples have exactly one strict
/// cyclic descent and no equal neighbours, and their total count per
/// `(pulses, parts)` matches the closed formula.
fn membership_pass(max_pulses: u32, prim: &Primitives, suite: &mut Suite) {
    for pulses in 3..=max_pulses.min(6) {
        for parts in 2..=pulses as usize {
            let mut admitted: u128 = 0;
            let mut tuple = vec![0u32; parts];
            loop {
                if (prim.cycle_check)(&tuple, pulses) {
                    admitted += 1;
                    let mut descents = 0;
                    let mut equal_pair = false;
                    for k in 0..parts {
                        let (a, b) = (tuple[k], tuple[(k + 1) % parts]);
                        if a > b {
                            descents += 1;
                        } else if a == b {
                            equal_pair = true;
                        }
                    }
                    suite.unique_descent_membership.verify(
                        descents == 1 && !equal_pair,
                        || {
                            format!(
                                "N={pulses} tuple=({}) admitted with {descents} descents",
                                tuple.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
                            )
                        },
                    );
                }
                // odometer over [0, pulses)^parts
                let mut k = parts;
                loop {
                    if k == 0 {
                        break;
                    }
                    k -= 1;
                    tuple[k] += 1;
                    if tuple[k] < pulses {
                        break;
                    }
                    tuple[k] = 0;
                }
                if tuple.iter().all(|&v| v == 0) {
                    break;
                }
            }
            suite.unique_descent_membership.verify(
                admitted == cycle_count(pulses, parts),
                || {
                    format!(
                        "N={pulses} n={parts}: admitted {admitted}, expected {}",
                        cycle_count(pulses, parts)
                    )
                },
            );
        }
    }
}

fn cycle_pass(max_pulses: u32, prim: &Primitives, suite: &mut Suite) {
    for pulses in 3..=max_pulses {
        for parts in 2..=pulses as usize {
            for cycle in enumerate_cycles(pulses, parts) {
                let d = cycle.intervals();
                let entries = d.entries();
                suite.intervals_land_in_gap_space.verify(
                    entries.iter().all(|&g| g >= 1 && g < i64::from(pulses))
                        && d.sum() == i64::from(pulses),
                    || format!("N={pulses} cycle {:?} has gaps ({d})", cycle.entries()),
                );

                let stepped = cycle.average_step().intervals();
                let via_prim = fc_step_prim(entries, prim);
                suite.interval_commutation.verify(
                    stepped.entries() == via_prim.as_slice(),
                    || {
                        format!(
                            "N={pulses} cycle {:?}: gaps after step ({}), averaged gaps ({})",
                            cycle.entries(),
                            fmt_entries(stepped.entries()),
                            fmt_entries(&via_prim)
                        )
                    },
                );
            }
        }
    }
}

fn vector_checks(d: &[i64], label: &str, prim: &Primitives, suite: &mut Suite) {
    let n = d.len();
    let next = fc_step_prim(d, prim);
    let sum: i64 = d.iter().sum();
    let (lo, hi) = (d.iter().min().unwrap(), d.iter().max().unwrap());
    let (nlo, nhi) = (next.iter().min().unwrap(), next.iter().max().unwrap());

    suite.sum_conservation.verify(
        next.iter().sum::<i64>() == sum,
        || format!("{label} d=({}): step sums to {}", fmt_entries(d), next.iter().sum::<i64>()),
    );

    suite.width_monotone.verify(
        nlo >= lo && nhi <= hi,
        || {
            format!(
                "{label} d=({}): range [{lo},{hi}] grew to [{nlo},{nhi}]",
                fmt_entries(d)
            )
        },
    );

    let rotated: Vec<i64> = {
        let mut v = d.to_vec();
        v.rotate_right(1);
        v
    };
    let mut step_then_rotate = next.clone();
    step_then_rotate.rotate_right(1);
    suite.rotation_equivariance.verify(
        fc_step_prim(&rotated, prim) == step_then_rotate,
        || format!("{label} d=({})", fmt_entries(d)),
    );

    let dv = DifferenceVector::new(d.to_vec()).unwrap();

    // reversing swaps the step for its mirror
    let lhs: Vec<i64> = {
        let mut v = next.clone();
        v.rotate_right(1);
        v.reverse();
        v
    };
    let rhs = dv.reversed().average_step_cf();
    suite.reverse_conjugation.verify(
        lhs == rhs.entries(),
        || {
            format!(
                "{label} d=({}): lhs ({}), rhs ({})",
                fmt_entries(d),
                fmt_entries(&lhs),
                fmt_entries(rhs.entries())
            )
        },
    );

    // shifting everything up swaps the mirror step back
    let lhs: Vec<i64> = dv
        .average_step_cf()
        .entries()
        .iter()
        .map(|e| e + 1)
        .collect();
    let shifted: Vec<i64> = d.iter().map(|e| e + 1).collect();
    let rhs = fc_step_prim(&shifted, prim);
    suite.shift_conjugation.verify(
        lhs == rhs,
        || {
            format!(
                "{label} d=({}): shifted-mirror ({}), mirrored-shift ({})",
                fmt_entries(d),
                fmt_entries(&lhs),
                fmt_entries(&rhs)
            )
        },
    );

    // the parity raise must not disturb width, minimum count, or min + 1
    let raised = dv.parity_raise();
    let stepped_raise = dv.parity_raise_step();
    let min_count = |v: &[i64]| {
        let lo = v.iter().min().unwrap();
        v.iter().filter(|e| *e == lo).count()
    };
    suite.raise_preserves_measures.verify(
        raised.width() == dv.width()
            && stepped_raise.width() == dv.width()
            && raised.min() == dv.min() + 1
            && stepped_raise.min() == dv.min() + 1
            && min_count(raised.entries()) == min_count(d)
            && min_count(stepped_raise.entries()) == min_count(d),
        || format!("{label} d=({})", fmt_entries(d)),
    );

    // one averaging step commutes across the raise...
    let lhs = fc_step_prim(raised.entries(), prim);
    let rhs = {
        let mut v = DifferenceVector::new(next.clone()).unwrap();
        v = v.parity_raise_step();
        v
    };
    suite.raise_intertwines_step.verify(
        lhs == rhs.entries(),
        || {
            format!(
                "{label} d=({}): step-of-raise ({}), raise-of-step ({})",
                fmt_entries(d),
                fmt_entries(&lhs),
                fmt_entries(rhs.entries())
            )
        },
    );

    // ...and k steps commute once the image is rotated k - 1 times
    let mut after_raise = raised.entries().to_vec();
    let mut plain = d.to_vec();
    for k in 1..=ITERATE_DEPTH {
        after_raise = fc_step_prim(&after_raise, prim);
        plain = fc_step_prim(&plain, prim);
        let mut framed = plain.clone();
        framed.rotate_right((k - 1) % n.max(1));
        let framed = DifferenceVector::new(framed).unwrap().parity_raise_step();
        suite.raise_intertwines_iterates.verify(
            after_raise == framed.entries(),
            || {
                format!(
                    "{label} d=({}) k={k}: iterated-raise ({}), framed ({})",
                    fmt_entries(d),
                    fmt_entries(&after_raise),
                    fmt_entries(framed.entries())
                )
            },
        );
    }
}

fn vector_pass(max_pulses: u32, prim: &Primitives, suite: &mut Suite) {
    for pulses in 3..=max_pulses {
        for parts in 2..pulses as usize {
            let label = format!("N={pulses}");
            for_each_interval_vector(pulses, parts, |entries| {
                vector_checks(entries, &label, prim, suite);
            });
        }
    }
    let mut rng = StdRng::seed_from_u64(RANDOM_SEED);
    for len in 1..=8usize {
        for _ in 0..RANDOM_VECTORS_PER_LEN {
            let entries: Vec<i64> = (0..len).map(|_| rng.random_range(-8..=8)).collect();
            vector_checks(&entries, "random", prim, suite);
        }
    }
}

/// Replays every algebraic identity the averaging dynamics rely on, over
/// the full interval-vector and cycle spaces up to `max_pulses` pulses plus
/// a seeded batch of arbitrary integer vectors. Failures are collected, not
/// raised; each check reports its first counterexample.
pub fn verify_identities(max_pulses: u32) -> IdentityReport {
    verify_identities_with(max_pulses, &Primitives::reference())
}

/// [`verify_identities`] with swappable primitives; see [`Primitives`].
pub fn verify_identities_with(max_pulses: u32, prim: &Primitives) -> IdentityReport {
    let mut suite = Suite::new();
    residue_pass(max_pulses, prim, &mut suite);
    shift_grid_pass(prim, &mut suite);
    membership_pass(max_pulses, prim, &mut suite);
    cycle_pass(max_pulses, prim, &mut suite);
    vector_pass(max_pulses, prim, &mut suite);
    suite.into_report(max_pulses)
}

/// One state of the averaging map over a fixed pulse count and length.
#[derive(Debug, Clone)]
pub struct GraphNode {
    pub entries: Vec<i64>,
    pub width: i64,
    pub class: TerminalClass,
    /// Found by the generic walk, not by classification.
    pub on_cycle: bool,
    /// Steps to reach the recurrent set; 0 on a cycle.
    pub distance: usize,
    /// Length of the cycle this node drains into.
    pub cycle_len: usize,
}

/// The full functional graph of the averaging step on the interval-vector
/// space for one `(pulses, parts)` pair.
#[derive(Debug, Clone)]
pub struct TransitionGraph {
    pub pulses: u32,
    pub parts: usize,
    pub nodes: Vec<GraphNode>,
    /// `successor[i]` is the index of the averaging image of node `i`.
    pub successor: Vec<usize>,
}

/// Builds the graph and annotates every node with cycle membership,
/// distance, and cycle length found by a generic coloring walk that treats
/// the step as an opaque function.
pub fn build_graph(pulses: u32, parts: usize, budget: u64) -> Result<TransitionGraph, Error> {
    let count = interval_vector_count(pulses, parts);
    if count > u128::from(budget) {
        return Err(Error::GraphTooLarge {
            pulses,
            parts,
            count,
            budget,
        });
    }
    let space = enumerate_interval_vectors(pulses, parts);
    let successor: Vec<usize> = {
        let index: HashMap<&[i64], usize> = space
            .iter()
            .enumerate()
            .map(|(i, d)| (d.entries(), i))
            .collect();
        space
            .iter()
            .map(|d| {
                let next = d.average_step();
                *index
                    .get(next.entries())
                    .expect("averaging stays inside the space")
            })
            .collect()
    };

    // generic functional-graph coloring: follow successors until hitting
    // either the current path (a new cycle) or an already resolved node,
    // then unwind the path backwards
    const NEW: u8 = 0;
    const ACTIVE: u8 = 1;
    const DONE: u8 = 2;
    let n = space.len();
    let mut state = vec![NEW; n];
    let mut on_cycle = vec![false; n];
    let mut distance = vec![0usize; n];
    let mut cycle_len = vec![0usize; n];
    for start in 0..n {
        if state[start] != NEW {
            continue;
        }
        let mut path = Vec::new();
        let mut v = start;
        while state[v] == NEW {
            state[v] = ACTIVE;
            path.push(v);
            v = successor[v];
        }
        let mut resolved_from = path.len();
        if state[v] == ACTIVE {
            let pos = path.iter().position(|&u| u == v).expect("v is on the path");
            let len = path.len() - pos;
            for &u in &path[pos..] {
                on_cycle[u] = true;
                distance[u] = 0;
                cycle_len[u] = len;
                state[u] = DONE;
            }
            resolved_from = pos;
        }
        for &u in path[..resolved_from].iter().rev() {
            let next = successor[u];
            distance[u] = if on_cycle[next] { 1 } else { distance[next] + 1 };
            cycle_len[u] = cycle_len[next];
            state[u] = DONE;
        }
    }

    let nodes = space
        .into_iter()
        .enumerate()
        .map(|(i, d)| GraphNode {
            width: d.width(),
            class: classify(&d),
            on_cycle: on_cycle[i],
            distance: distance[i],
            cycle_len: cycle_len[i],
            entries: d.entries().to_vec(),
        })
        .collect();

    Ok(TransitionGraph {
        pulses,
        parts,
        nodes,
        successor,
    })
}

impl TransitionGraph {
    /// Index of the node with the given entries, if present.
    pub fn find(&self, entries: &[i64]) -> Option<usize> {
        self.nodes.iter().position(|n| n.entries == entries)
    }

    /// Graphviz rendering: one oval per state, doubled outline on the
    /// terminal cycles.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        out.push_str("digraph averaging {\n");
        let _ = writeln!(out, "    label=\"{} pulses, {} intervals\";", self.pulses, self.parts);
        out.push_str("    rankdir=LR;\n    node [shape=oval];\n");
        for node in &self.nodes {
            let label = fmt_entries(&node.entries);
            let extra = if node.on_cycle { " peripheries=2" } else { "" };
            let _ = writeln!(
                out,
                "    \"{label}\" [class=\"{}\" w=\"{}\" dist=\"{}\"{extra}];",
                node.class.name(),
                node.width,
                node.distance
            );
        }
        for (i, &succ) in self.successor.iter().enumerate() {
            let _ = writeln!(
                out,
                "    \"{}\" -> \"{}\";",
                fmt_entries(&self.nodes[i].entries),
                fmt_entries(&self.nodes[succ].entries)
            );
        }
        out.push_str("}\n");
        out
    }
}

/// Number of pulses where exactly one of the rhythms has an onset.
pub fn hamming_distance(a: &OnsetRhythm, b: &OnsetRhythm) -> Result<u32, Error> {
    if a.pulses() != b.pulses() {
        return Err(Error::ModulusMismatch {
            left: a.pulses(),
            right: b.pulses(),
        });
    }
    Ok((0..a.pulses())
        .filter(|&p| a.contains(p) != b.contains(p))
        .count() as u32)
}
