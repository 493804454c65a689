//! Parallel check driver over graph streams.
//!
//! One reader hands fixed-size chunks to stateless workers; worker-local
//! reports merge associatively (sums, extremes, set union, sorted
//! counterexample lists), so the result is independent of worker count and
//! chunk scheduling.

use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::sync::Mutex;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::checks::{evaluate, CheckId, CheckStatus};
use crate::codec::encode_graph6;
use crate::error::{Error, Result};
use crate::graph::Graph;

const CHUNK: usize = 256;

/// A graph that failed a check, with the observed values of the violation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub graph6: String,
    pub observed: BTreeMap<String, i64>,
}

/// Aggregate result of one check over one stream.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub check: CheckId,
    pub relaxed: bool,
    /// Graphs examined (valid records reaching the check).
    pub total: u64,
    pub passed: u64,
    pub failed: u64,
    pub not_applicable: u64,
    /// Malformed lines skipped by a lenient stream; set by the caller.
    pub skipped_lines: u64,
    /// Sorted by graph6 string, independent of scheduling.
    pub counterexamples: Vec<Counterexample>,
    /// Name of the aggregated per-graph quantity.
    pub quantity: String,
    pub min_quantity: Option<i64>,
    pub max_quantity: Option<i64>,
    /// For `forbidden_values`: every eta value `<= 4n` seen in the stream.
    pub realized: BTreeSet<i64>,
    /// Milliseconds; excluded from determinism comparisons.
    pub wall_time_ms: u64,
}

impl ScanReport {
    fn empty(check: CheckId, relaxed: bool) -> Self {
        ScanReport {
            check,
            relaxed,
            total: 0,
            passed: 0,
            failed: 0,
            not_applicable: 0,
            skipped_lines: 0,
            counterexamples: Vec::new(),
            quantity: check.quantity().to_string(),
            min_quantity: None,
            max_quantity: None,
            realized: BTreeSet::new(),
            wall_time_ms: 0,
        }
    }

    fn absorb(&mut self, other: ScanReport) {
        self.total += other.total;
        self.passed += other.passed;
        self.failed += other.failed;
        self.not_applicable += other.not_applicable;
        self.counterexamples.extend(other.counterexamples);
        self.min_quantity = match (self.min_quantity, other.min_quantity) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        self.max_quantity = match (self.max_quantity, other.max_quantity) {
            (Some(a), Some(b)) => Some(a.max(b)),
            (a, b) => a.or(b),
        };
        self.realized.extend(other.realized);
    }

    /// True when the scan found no counterexample.
    pub fn clean(&self) -> bool {
        self.failed == 0
    }
}

/// Runs `check` over every graph of `stream` on `workers` threads.
///
/// Check-evaluation errors abort the scan and carry the offending graph's
/// graph6 string. Two scans of the same stream yield identical reports
/// (modulo `wall_time_ms`) regardless of worker count.
pub fn scan<I>(stream: I, check: CheckId, relaxed: bool, workers: usize) -> Result<ScanReport>
where
    I: Iterator<Item = Result<Graph>> + Send,
{
    let workers = workers.max(1);
    let started = Instant::now();
    let source = Mutex::new(stream);
    let failure: Mutex<Option<Error>> = Mutex::new(None);

    let partials: Vec<ScanReport> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|_| {
                scope.spawn(|| {
                    let mut local = ScanReport::empty(check, relaxed);
                    let mut chunk: Vec<Graph> = Vec::with_capacity(CHUNK);
                    loop {
                        if failure.lock().unwrap().is_some() {
                            return local;
                        }
                        chunk.clear();
                        {
                            let mut src = source.lock().unwrap();
                            while chunk.len() < CHUNK {
                                match src.next() {
                                    Some(Ok(g)) => chunk.push(g),
                                    Some(Err(e)) => {
                                        let mut slot = failure.lock().unwrap();
                                        if slot.is_none() {
                                            *slot = Some(e);
                                        }
                                        return local;
                                    }
                                    None => break,
                                }
                            }
                        }
                        if chunk.is_empty() {
                            return local;
                        }
                        for g in &chunk {
                            if let Err(e) = apply(check, relaxed, g, &mut local) {
                                let mut slot = failure.lock().unwrap();
                                if slot.is_none() {
                                    *slot = Some(e);
                                }
                                return local;
                            }
                        }
                    }
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });

    if let Some(err) = failure.into_inner().unwrap() {
        return Err(err);
    }
    let mut report = ScanReport::empty(check, relaxed);
    for partial in partials {
        report.absorb(partial);
    }
    report
        .counterexamples
        .sort_by(|a, b| a.graph6.cmp(&b.graph6));
    report.wall_time_ms = started.elapsed().as_millis() as u64;
    Ok(report)
}

fn apply(check: CheckId, relaxed: bool, g: &Graph, local: &mut ScanReport) -> Result<()> {
    let outcome = evaluate(check, g, relaxed).map_err(|e| Error::CheckEvaluation {
        check: check.name().to_string(),
        graph6: encode_graph6(g),
        source: Box::new(e),
    })?;
    local.total += 1;
    if let Some(q) = outcome.quantity {
        local.min_quantity = Some(local.min_quantity.map_or(q, |m| m.min(q)));
        local.max_quantity = Some(local.max_quantity.map_or(q, |m| m.max(q)));
        if check == CheckId::ForbiddenValues && q <= 4 * g.n() as i64 {
            local.realized.insert(q);
        }
    }
    match outcome.status {
        CheckStatus::Pass => local.passed += 1,
        CheckStatus::NotApplicable => local.not_applicable += 1,
        CheckStatus::Fail => {
            local.failed += 1;
            local.counterexamples.push(Counterexample {
                graph6: encode_graph6(g),
                observed: outcome.observed,
            });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::{builtin_enumerate, GraphFilter};

    fn two_connected(n: usize) -> Vec<Graph> {
        builtin_enumerate(
            n,
            &GraphFilter {
                two_connected: true,
                ..GraphFilter::default()
            },
        )
        .unwrap()
    }

    #[test]
    fn main1_clean_at_six() {
        let graphs = two_connected(6);
        let report = scan(graphs.into_iter().map(Ok), CheckId::Main1, false, 2).unwrap();
        assert_eq!(report.total, 56);
        assert!(report.clean());
        assert_eq!(report.failed, 0);
        // K6 is complete, hence not applicable.
        assert_eq!(report.not_applicable, 1);
        assert_eq!(report.min_quantity, Some(0));
    }

    #[test]
    fn relaxed_conjecture4_finds_small_violators() {
        let graphs = two_connected(6);
        let report = scan(graphs.into_iter().map(Ok), CheckId::Conjecture4, true, 2).unwrap();
        assert!(report.failed > 0);
        assert!(!report.clean());
        // K_6^3 is among the violators.
        let knt63 =
            crate::families::build(&crate::families::FamilySpec::Knt { n: 6, t: 3 }).unwrap();
        let key = crate::canonical::canonical_key(&knt63);
        let hit = report.counterexamples.iter().any(|ce| {
            let g = crate::codec::parse_graph6(ce.graph6.as_bytes()).unwrap();
            crate::canonical::canonical_key(&g) == key
        });
        assert!(hit, "expected K_6^3 among the violators");
    }

    #[test]
    fn worker_counts_agree() {
        let mut reports = Vec::new();
        for workers in [1usize, 3, 8] {
            let graphs = two_connected(6);
            let mut r = scan(graphs.into_iter().map(Ok), CheckId::Main3, false, workers).unwrap();
            r.wall_time_ms = 0;
            reports.push(r);
        }
        assert_eq!(reports[0], reports[1]);
        assert_eq!(reports[1], reports[2]);
    }

    #[test]
    fn stream_errors_abort_with_line() {
        let text = "B_\noops!\n";
        let stream = crate::enumeration::stream_graph6(text.as_bytes());
        let err = scan(stream, CheckId::Eq1, false, 2).unwrap_err();
        assert!(matches!(err, Error::StreamLine { line: 2, .. }));
    }

    #[test]
    fn check_errors_name_the_graph() {
        // A disconnected record makes the check itself fail.
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let enc = encode_graph6(&g);
        let err = scan([Ok(g)].into_iter(), CheckId::Main1, false, 1).unwrap_err();
        match err {
            Error::CheckEvaluation { graph6, .. } => assert_eq!(graph6, enc),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn forbidden_values_records_realized_etas() {
        let filter = GraphFilter {
            connected: true,
            ..GraphFilter::default()
        };
        let graphs = builtin_enumerate(5, &filter).unwrap();
        let report = scan(
            graphs.into_iter().map(Ok),
            CheckId::ForbiddenValues,
            false,
            2,
        )
        .unwrap();
        assert!(report.clean());
        assert!(report.realized.contains(&0));
        assert!(report.realized.contains(&2));
        assert!(!report.realized.contains(&1));
        assert!(!report.realized.contains(&3));
    }
}
