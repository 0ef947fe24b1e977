use thiserror::Error;

/// Errors raised by rhythm construction and the averaging dynamics.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus must be at least 2, got {0}")]
    ModulusTooSmall(u32),

    #[error("pulse count must be at least 3, got {0}")]
    PulseCountTooSmall(u32),

    #[error("residue moduli differ: {left} vs {right}")]
    ModulusMismatch { left: u32, right: u32 },

    #[error("value {value} is not a residue mod {modulus}")]
    ValueOutOfRange { value: i64, modulus: u32 },

    #[error("rhythm needs between 1 and {pulses} - 1 onsets, got {onsets}")]
    BadOnsetCount { onsets: usize, pulses: u32 },

    #[error("duplicate onset {0}")]
    DuplicateOnset(u32),

    #[error("onset {onset} is outside the {pulses}-pulse cycle")]
    OnsetOutOfRange { onset: u32, pulses: u32 },

    #[error("cycle needs at least 2 entries, got {0}")]
    CycleTooShort(usize),

    #[error("sequence does not wrap exactly once: {0}")]
    NotAscendingCycle(String),

    #[error("polygon vertices {0} and {1} coincide")]
    RepeatedVertex(usize, usize),

    #[error("cycle visits every pulse; no rest remains to anchor a rhythm")]
    NoRestPulse,

    #[error("vector must not be empty")]
    EmptyVector,

    #[error("entry {value} at index {index} is not a residue gap mod {modulus}")]
    EntryOutOfRange {
        index: usize,
        value: i64,
        modulus: u32,
    },

    #[error("entries sum to {sum}, expected the pulse count {modulus}")]
    WrongEntrySum { sum: i64, modulus: u32 },

    #[error("operation needs spread >= 2, input has spread {0}")]
    SpreadTooSmall(i64),

    #[error("iteration cap of {0} steps exceeded; this should be unreachable")]
    CapExceeded(usize),

    #[error("state space for {pulses} pulses / {parts} parts has {count} nodes, over the budget of {budget}")]
    GraphTooLarge {
        pulses: u32,
        parts: usize,
        count: u128,
        budget: u64,
    },
}

/// Errors raised while parsing rhythm notation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty rhythm specification")]
    Empty,

    #[error("binary notation allows only '0' and '1', found {0:?}")]
    NotBinary(char),

    #[error("onset list notation requires --pulses")]
    PulsesRequired,

    #[error("interval list sums to {sum} but --pulses says {pulses}")]
    IntervalSumMismatch { sum: u64, pulses: u32 },

    #[error("interval {0} must be a positive integer")]
    BadInterval(String),

    #[error("invalid number {0:?}")]
    BadNumber(String),

    #[error(transparent)]
    Rhythm(#[from] Error),
}
