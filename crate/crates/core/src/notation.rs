//! Text notations for rhythms.
//!
//! Three formats are understood, all writing pulse 0 first:
//!
//! * binary — one character per pulse, `1` for an onset: `1001001000100100`;
//! * onset list — comma-separated pulse numbers, needs the pulse count
//!   passed separately: `0,3,6,10,12`;
//! * interval list — `i:` followed by the clockwise gaps between onsets:
//!   `i:3,4,7,2`. The pulse count is the sum and the first onset sits at
//!   pulse 0, so this format names a rhythm up to rotation only.
//!
//! Disambiguation is by shape: an `i:` prefix means intervals, a comma means
//! an onset list, and a bare token is binary — unless a pulse count is given
//! that its length does not match, in which case it is read as a single
//! onset number. `101` alone is the three-pulse pattern; `101` with
//! `pulses = 256` is one onset at pulse 101.

use crate::error::ParseError;
use crate::rhythm::OnsetRhythm;

/// Parses any of the three notations, applying the shape rules above.
pub fn parse_rhythm(input: &str, pulses: Option<u32>) -> Result<OnsetRhythm, ParseError> {
    let input = input.trim();
    if input.is_empty() {
        return Err(ParseError::Empty);
    }
    if let Some(rest) = input.strip_prefix("i:") {
        return parse_intervals(rest, pulses);
    }
    if input.contains(',') {
        return parse_onsets(input, pulses);
    }
    match pulses {
        None => parse_binary(input),
        Some(p) if input.len() == p as usize && input.chars().all(|c| c == '0' || c == '1') => {
            parse_binary(input)
        }
        Some(_) => parse_onsets(input, pulses),
    }
}

fn parse_binary(input: &str) -> Result<OnsetRhythm, ParseError> {
    if let Some(c) = input.chars().find(|&c| c != '0' && c != '1') {
        return Err(ParseError::NotBinary(c));
    }
    let onsets = input
        .chars()
        .enumerate()
        .filter(|&(_, c)| c == '1')
        .map(|(k, _)| k as u32);
    Ok(OnsetRhythm::new(input.len() as u32, onsets)?)
}

fn parse_onsets(input: &str, pulses: Option<u32>) -> Result<OnsetRhythm, ParseError> {
    let pulses = pulses.ok_or(ParseError::PulsesRequired)?;
    let mut onsets = Vec::new();
    for token in input.split(',') {
        let token = token.trim();
        onsets.push(
            token
                .parse::<u32>()
                .map_err(|_| ParseError::BadNumber(token.to_string()))?,
        );
    }
    Ok(OnsetRhythm::new(pulses, onsets)?)
}

fn parse_intervals(input: &str, pulses: Option<u32>) -> Result<OnsetRhythm, ParseError> {
    let mut gaps = Vec::new();
    for token in input.split(',') {
        let token = token.trim();
        let gap: u64 = token
            .parse()
            .ok()
            .filter(|&g| g >= 1)
            .ok_or_else(|| ParseError::BadInterval(token.to_string()))?;
        gaps.push(gap);
    }
    let sum: u64 = gaps.iter().sum();
    if let Some(p) = pulses {
        if sum != u64::from(p) {
            return Err(ParseError::IntervalSumMismatch { sum, pulses: p });
        }
    }
    let total = u32::try_from(sum).map_err(|_| ParseError::BadInterval(sum.to_string()))?;
    let mut onsets = Vec::with_capacity(gaps.len());
    let mut at = 0u64;
    for gap in gaps {
        onsets.push(at as u32);
        at += gap;
    }
    Ok(OnsetRhythm::new(total, onsets)?)
}

/// One character per pulse, `1` for onsets, pulse 0 leftmost.
pub fn binary_string(rhythm: &OnsetRhythm) -> String {
    (0..rhythm.pulses())
        .map(|p| if rhythm.contains(p) { '1' } else { '0' })
        .collect()
}

/// Comma-separated onsets in ascending order.
pub fn onset_string(rhythm: &OnsetRhythm) -> String {
    let mut out = String::new();
    for (k, onset) in rhythm.onsets().enumerate() {
        if k > 0 {
            out.push(',');
        }
        out.push_str(&onset.to_string());
    }
    out
}

/// Clockwise gaps between consecutive onsets, starting from the smallest.
///
/// A single onset loops all the way around: its gap is the pulse count.
pub fn rhythm_intervals(rhythm: &OnsetRhythm) -> Vec<u32> {
    let onsets: Vec<u32> = rhythm.onsets().collect();
    let n = onsets.len();
    (0..n)
        .map(|k| {
            let next = onsets[(k + 1) % n];
            (next + rhythm.pulses() - onsets[k]) % rhythm.pulses()
        })
        .map(|gap| if gap == 0 { rhythm.pulses() } else { gap })
        .collect()
}

/// The `i:` interval notation for the rhythm. Drops the rotation: parsing
/// it back anchors the first onset at pulse 0.
pub fn interval_string(rhythm: &OnsetRhythm) -> String {
    let gaps: Vec<String> = rhythm_intervals(rhythm)
        .iter()
        .map(|g| g.to_string())
        .collect();
    format!("i:{}", gaps.join(","))
}
