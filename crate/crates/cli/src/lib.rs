//! Shared pieces of the command line front end: the bundled timelines, the
//! serializable trace document, and the text, CSV, and JSON renderers.

use std::fmt::Display;
use std::fmt::Write as _;

use serde::Serialize;

use evenbeat::dynamics::{self, classify, distance_to_cycle, iterate, orbit_labeled, OrbitReport};
use evenbeat::notation::{binary_string, rhythm_intervals};
use evenbeat::{DifferenceVector, Error, OnsetRhythm, TerminalClass};

/// A named rhythm shipped with the binary, together with the number of
/// averaging steps it is known to need before settling.
#[derive(Debug, Clone, Copy)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub pulses: u32,
    pub onsets: &'static [u32],
    pub expected_distance: usize,
}

/// Sixteen-pulse timelines with five onsets each, ordered by how many
/// averaging steps they need to settle.
pub const CORPUS: &[CorpusEntry] = &[
    CorpusEntry {
        name: "Bossa",
        pulses: 16,
        onsets: &[0, 3, 6, 10, 13],
        expected_distance: 0,
    },
    CorpusEntry {
        name: "Shiko",
        pulses: 16,
        onsets: &[0, 4, 6, 10, 12],
        expected_distance: 1,
    },
    CorpusEntry {
        name: "Son",
        pulses: 16,
        onsets: &[0, 3, 6, 10, 12],
        expected_distance: 1,
    },
    CorpusEntry {
        name: "Rumba",
        pulses: 16,
        onsets: &[0, 3, 7, 10, 12],
        expected_distance: 1,
    },
    CorpusEntry {
        name: "Soukous",
        pulses: 16,
        onsets: &[0, 3, 6, 10, 11],
        expected_distance: 3,
    },
    CorpusEntry {
        name: "Gahu",
        pulses: 16,
        onsets: &[0, 3, 6, 10, 14],
        expected_distance: 3,
    },
];

impl CorpusEntry {
    pub fn rhythm(&self) -> OnsetRhythm {
        OnsetRhythm::new(self.pulses, self.onsets.iter().copied())
            .expect("bundled rhythms are valid")
    }
}

/// One row of a rendered orbit.
#[derive(Debug, Clone, Serialize)]
pub struct TraceStep {
    pub k: usize,
    pub a: Vec<u32>,
    pub d: Vec<i64>,
    pub width: i64,
}

/// A complete labeled orbit in renderable form. JSON output serializes the
/// fields in exactly this order.
#[derive(Debug, Clone, Serialize)]
pub struct TraceDocument {
    pub pulses: u32,
    pub onsets: Vec<u32>,
    pub steps: Vec<TraceStep>,
    pub distance_to_cycle: usize,
    pub terminal_class: String,
    pub period: usize,
    pub cap_hit: bool,
}

impl TraceDocument {
    pub fn from_report(rhythm: &OnsetRhythm, report: &OrbitReport) -> Self {
        let steps = report
            .steps
            .iter()
            .map(|s| TraceStep {
                k: s.index,
                a: s.cycle.as_ref().expect("labeled orbit").entries().to_vec(),
                d: s.intervals.entries().to_vec(),
                width: s.width,
            })
            .collect();
        TraceDocument {
            pulses: rhythm.pulses(),
            onsets: rhythm.onsets().collect(),
            steps,
            distance_to_cycle: report.distance,
            terminal_class: report.class.name().to_string(),
            period: report.period,
            cap_hit: report.cap_hit,
        }
    }
}

/// Runs the labeled orbit for a rhythm and packages it for rendering.
pub fn trace_rhythm(rhythm: &OnsetRhythm, cap: Option<usize>) -> Result<TraceDocument, Error> {
    let cycle = rhythm.to_cycle()?;
    let d = cycle.intervals();
    let cap = cap.unwrap_or_else(|| dynamics::default_cap(&d));
    Ok(TraceDocument::from_report(
        rhythm,
        &orbit_labeled(&cycle, cap),
    ))
}

fn join<T: Display>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    let mut out = String::new();
    for (k, item) in items.into_iter().enumerate() {
        if k > 0 {
            out.push_str(sep);
        }
        let _ = write!(out, "{item}");
    }
    out
}

fn pad(s: &str, width: usize) -> String {
    format!("{s:<width$}")
}

pub fn render_trace_text(doc: &TraceDocument) -> String {
    let a_col: Vec<String> = doc
        .steps
        .iter()
        .map(|s| format!("({})", join(&s.a, ",")))
        .collect();
    let d_col: Vec<String> = doc
        .steps
        .iter()
        .map(|s| format!("({})", join(&s.d, ",")))
        .collect();
    let k_width = doc
        .steps
        .last()
        .map_or(1, |s| s.k.to_string().len())
        .max(1);
    let a_width = a_col.iter().map(String::len).max().unwrap_or(1).max(1);
    let d_width = d_col.iter().map(String::len).max().unwrap_or(1).max(1);

    let mut out = format!("pulses {}, onsets {}\n", doc.pulses, join(&doc.onsets, ","));
    let _ = writeln!(
        out,
        "{}  {}  {}  w",
        pad("k", k_width),
        pad("a", a_width),
        pad("d", d_width)
    );
    for (step, (a, d)) in doc.steps.iter().zip(a_col.iter().zip(&d_col)) {
        let _ = writeln!(
            out,
            "{}  {}  {}  {}",
            pad(&step.k.to_string(), k_width),
            pad(a, a_width),
            pad(d, d_width),
            step.width
        );
    }
    if doc.cap_hit {
        let _ = writeln!(
            out,
            "step cap hit after {} steps; orbit still transient",
            doc.distance_to_cycle
        );
    } else {
        let _ = writeln!(out, "distance to cycle: {}", doc.distance_to_cycle);
        let _ = writeln!(out, "terminal: {}, period {}", doc.terminal_class, doc.period);
    }
    out
}

pub fn render_trace_csv(doc: &TraceDocument) -> String {
    let mut out = String::from("k,a,d,width\n");
    for s in &doc.steps {
        let _ = writeln!(out, "{},{},{},{}", s.k, join(&s.a, ";"), join(&s.d, ";"), s.width);
    }
    out
}

pub fn render_trace_json(doc: &TraceDocument) -> String {
    let mut out = serde_json::to_string_pretty(doc).expect("plain data serializes");
    out.push('\n');
    out
}

/// The settled form of a rhythm, in every notation the parser accepts.
#[derive(Debug, Clone, Serialize)]
pub struct EvenReport {
    pub pulses: u32,
    pub onsets: Vec<u32>,
    pub binary: String,
    pub intervals: Vec<u32>,
}

impl EvenReport {
    pub fn from_rhythm(r: &OnsetRhythm) -> Self {
        EvenReport {
            pulses: r.pulses(),
            onsets: r.onsets().collect(),
            binary: binary_string(r),
            intervals: rhythm_intervals(r),
        }
    }
}

/// Iterates a rhythm to its terminal cycle and reports the first rhythm on
/// the cycle.
pub fn even_rhythm(rhythm: &OnsetRhythm, cap: Option<usize>) -> Result<EvenReport, Error> {
    let cycle = rhythm.to_cycle()?;
    let d = cycle.intervals();
    let cap = cap.unwrap_or_else(|| dynamics::default_cap(&d));
    let report = orbit_labeled(&cycle, cap);
    if report.cap_hit {
        return Err(Error::CapExceeded(report.distance));
    }
    let settled = report
        .terminal()
        .cycle
        .as_ref()
        .expect("labeled orbit")
        .to_rhythm()?;
    Ok(EvenReport::from_rhythm(&settled))
}

pub fn render_even_text(report: &EvenReport) -> String {
    format!(
        "pulses:    {}\nbinary:    {}\nonsets:    {}\nintervals: i:{}\n",
        report.pulses,
        report.binary,
        join(&report.onsets, ","),
        join(&report.intervals, ",")
    )
}

pub fn render_even_csv(report: &EvenReport) -> String {
    format!(
        "pulses,onsets,binary,intervals\n{},{},{},{}\n",
        report.pulses,
        join(&report.onsets, ";"),
        report.binary,
        join(&report.intervals, ";")
    )
}

pub fn render_even_json(report: &EvenReport) -> String {
    let mut out = serde_json::to_string_pretty(report).expect("plain data serializes");
    out.push('\n');
    out
}

/// One-line terminal classification of an interval vector.
pub fn classify_line(entries: &[i64]) -> Result<String, Error> {
    let d = DifferenceVector::new(entries.to_vec())?;
    let class = classify(&d);
    let min = d.min();
    let parity = if min.rem_euclid(2) == 0 { "even" } else { "odd" };
    let mut line = format!("{} width={} min={min} ({parity})", class.name(), d.width());
    match class {
        TerminalClass::Transient => {}
        TerminalClass::PeriodicWidth1OddMin => {
            let _ = write!(line, " period={}", d.rotation_period());
        }
        _ => line.push_str(" period=1"),
    }
    Ok(line)
}

/// A corpus entry with everything the corpus table prints, plus the data
/// needed to self-check it.
#[derive(Debug, Clone)]
pub struct CorpusRow {
    pub name: &'static str,
    pub onsets: String,
    pub intervals: String,
    pub distance: usize,
    pub expected: usize,
    pub class: TerminalClass,
    pub terminal: DifferenceVector,
}

/// Computes settling data for every bundled rhythm.
pub fn corpus_rows() -> Vec<CorpusRow> {
    CORPUS
        .iter()
        .map(|entry| {
            let rhythm = entry.rhythm();
            let d = rhythm
                .to_cycle()
                .expect("bundled rhythms have enough onsets")
                .intervals();
            let distance = distance_to_cycle(&d).expect("bundled rhythms settle");
            let terminal = iterate(&d, distance);
            CorpusRow {
                name: entry.name,
                onsets: join(entry.onsets, ","),
                intervals: join(d.entries(), ","),
                distance,
                expected: entry.expected_distance,
                class: classify(&terminal),
                terminal,
            }
        })
        .collect()
}

pub fn render_corpus_table(rows: &[CorpusRow]) -> String {
    let name_w = rows.iter().map(|r| r.name.len()).max().unwrap_or(4).max(4);
    let onsets_w = rows.iter().map(|r| r.onsets.len()).max().unwrap_or(6).max(6);
    let ivl_w = rows
        .iter()
        .map(|r| r.intervals.len())
        .max()
        .unwrap_or(9)
        .max(9);
    let mut out = format!(
        "{}  {}  {}  dist  class\n",
        pad("name", name_w),
        pad("onsets", onsets_w),
        pad("intervals", ivl_w)
    );
    for r in rows {
        let _ = writeln!(
            out,
            "{}  {}  {}  {}  {}",
            pad(r.name, name_w),
            pad(&r.onsets, onsets_w),
            pad(&r.intervals, ivl_w),
            pad(&r.distance.to_string(), 4),
            r.class.name()
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use evenbeat::notation::parse_rhythm;

    #[test]
    fn corpus_entries_parse_and_settle_as_stored() {
        let rows = corpus_rows();
        assert_eq!(rows.len(), 6);
        for row in &rows {
            assert_eq!(row.distance, row.expected, "{}", row.name);
            assert_eq!(row.class, TerminalClass::PeriodicWidth1OddMin, "{}", row.name);
        }
    }

    #[test]
    fn trace_document_records_the_whole_orbit() {
        let rhythm = parse_rhythm("i:3,4,7,2", None).unwrap();
        let doc = trace_rhythm(&rhythm, None).unwrap();
        assert_eq!(doc.pulses, 16);
        assert_eq!(doc.onsets, vec![0, 3, 7, 14]);
        assert_eq!(doc.distance_to_cycle, 4);
        assert_eq!(doc.period, 1);
        assert_eq!(doc.terminal_class, "FixedWidth0");
        assert!(!doc.cap_hit);
        assert_eq!(doc.steps.len(), 6);
        assert_eq!(doc.steps[0].a, vec![0, 3, 7, 14]);
        assert_eq!(doc.steps[0].d, vec![3, 4, 7, 2]);
        assert_eq!(doc.steps[1].a, vec![1, 5, 10, 15]);
        assert_eq!(doc.steps[4].d, vec![4, 4, 4, 4]);
        assert_eq!(doc.steps[5].d, vec![4, 4, 4, 4]);
    }

    #[test]
    fn json_rendering_is_schema_stable() {
        let rhythm = parse_rhythm("i:4,4,4,4", None).unwrap();
        let doc = trace_rhythm(&rhythm, None).unwrap();
        let json = render_trace_json(&doc);
        assert_eq!(json, render_trace_json(&doc));
        let keys: Vec<usize> = [
            "\"pulses\"",
            "\"onsets\"",
            "\"steps\"",
            "\"distance_to_cycle\"",
            "\"terminal_class\"",
            "\"period\"",
            "\"cap_hit\"",
        ]
        .iter()
        .map(|k| json.find(k).expect("key present"))
        .collect();
        let mut sorted = keys.clone();
        sorted.sort_unstable();
        assert_eq!(keys, sorted, "fields keep declaration order");
    }

    #[test]
    fn csv_rendering_uses_semicolon_lists() {
        let rhythm = parse_rhythm("i:3,4,7,2", None).unwrap();
        let doc = trace_rhythm(&rhythm, None).unwrap();
        let csv = render_trace_csv(&doc);
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("k,a,d,width"));
        assert_eq!(lines.next(), Some("0,0;3;7;14,3;4;7;2,5"));
        assert_eq!(lines.next(), Some("1,1;5;10;15,4;5;5;2,3"));
    }

    #[test]
    fn even_report_lists_all_notations() {
        let shiko = CORPUS[1].rhythm();
        let report = even_rhythm(&shiko, None).unwrap();
        assert_eq!(report.onsets, vec![2, 5, 8, 11, 14]);
        assert_eq!(report.intervals, vec![3, 3, 3, 3, 4]);
        assert_eq!(report.binary, "0010010010010010");
        let text = render_even_text(&report);
        assert!(text.contains("onsets:    2,5,8,11,14"));
        assert!(text.contains("intervals: i:3,3,3,3,4"));
    }

    #[test]
    fn even_leaves_settled_input_alone() {
        let bossa = CORPUS[0].rhythm();
        let report = even_rhythm(&bossa, None).unwrap();
        assert_eq!(report.onsets, vec![0, 3, 6, 10, 13]);
    }

    #[test]
    fn classification_lines() {
        assert_eq!(
            classify_line(&[3, 3, 4, 3, 3]).unwrap(),
            "PeriodicWidth1OddMin width=1 min=3 (odd) period=5"
        );
        assert_eq!(
            classify_line(&[4, 4, 4, 4]).unwrap(),
            "FixedWidth0 width=0 min=4 (even) period=1"
        );
        assert_eq!(
            classify_line(&[2, 3, 2, 3]).unwrap(),
            "FixedWidth1EvenMin width=1 min=2 (even) period=1"
        );
        assert_eq!(
            classify_line(&[3, 4, 7, 2]).unwrap(),
            "Transient width=5 min=2 (even)"
        );
    }

    #[test]
    fn capped_trace_is_marked() {
        let rhythm = parse_rhythm("i:3,4,7,2", None).unwrap();
        let doc = trace_rhythm(&rhythm, Some(2)).unwrap();
        assert!(doc.cap_hit);
        assert_eq!(doc.distance_to_cycle, 2);
        assert_eq!(doc.period, 0);
        assert_eq!(doc.steps.len(), 3);
        assert!(render_trace_text(&doc).contains("step cap hit after 2 steps"));
    }
}
