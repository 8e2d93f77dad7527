//! Sweeps bound checkers over a graph corpus.
//!
//! The corpus is consumed as a stream in fixed-size chunks; each chunk is
//! checked in parallel and folded into the running reports in corpus order,
//! so the output does not depend on the worker count.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use thiserror::Error;

use crate::bounds::{check_family, BoundCheck, BoundError, BoundFamily, BoundId, Form, Reading};
use crate::graph::Graph;
use crate::graph_io::generators::complete;
use crate::graph_io::to_graph6;

const CHUNK: usize = 4096;

/// A non-empty list of finite exponents, kept in the order given.
#[derive(Debug, Clone, PartialEq)]
pub struct AlphaGrid(Vec<f64>);

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AlphaGridError {
    #[error("alpha grid is empty")]
    Empty,
    #[error("alpha {0} is not finite")]
    NonFinite(f64),
    #[error("cannot parse alpha {0:?}")]
    Parse(String),
}

impl AlphaGrid {
    pub const DEFAULT: [f64; 8] = [-2.0, -1.0, -0.5, 0.5, 1.0, 1.5, 2.0, 3.0];

    pub fn new(values: Vec<f64>) -> Result<Self, AlphaGridError> {
        if values.is_empty() {
            return Err(AlphaGridError::Empty);
        }
        if let Some(&bad) = values.iter().find(|a| !a.is_finite()) {
            return Err(AlphaGridError::NonFinite(bad));
        }
        Ok(AlphaGrid(values))
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }
}

impl Default for AlphaGrid {
    fn default() -> Self {
        AlphaGrid(Self::DEFAULT.to_vec())
    }
}

/// `"default"` or a comma-separated list such as `"-1,0.5,2"`.
impl FromStr for AlphaGrid {
    type Err = AlphaGridError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.trim() == "default" {
            return Ok(AlphaGrid::default());
        }
        let values = s
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<f64>().map_err(|_| AlphaGridError::Parse(t.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        AlphaGrid::new(values)
    }
}

impl fmt::Display for AlphaGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(f64::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub families: Vec<BoundFamily>,
    pub alphas: AlphaGrid,
    pub reading: Reading,
    /// Worker threads; `None` uses the global rayon pool.
    pub threads: Option<usize>,
    /// Swap lhs and rhs of every check (harness self-test).
    pub negative_control: bool,
    /// Keep only these ids; `None` keeps every id of the selected families.
    pub only: Option<Vec<BoundId>>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            families: BoundFamily::ALL.to_vec(),
            alphas: AlphaGrid::default(),
            reading: Reading::Verified,
            threads: None,
            negative_control: false,
            only: None,
        }
    }
}

impl VerifyOptions {
    pub fn families(mut self, families: impl IntoIterator<Item = BoundFamily>) -> Self {
        self.families = families.into_iter().collect();
        self
    }

    /// Restricts the sweep to exactly `ids`, selecting their families.
    pub fn bounds(mut self, ids: impl IntoIterator<Item = BoundId>) -> Self {
        let ids: Vec<BoundId> = ids.into_iter().collect();
        self.families = ids.iter().map(|id| id.family()).collect();
        self.only = Some(ids);
        self
    }

    pub fn alphas(mut self, alphas: impl Into<Vec<f64>>) -> Result<Self, AlphaGridError> {
        self.alphas = AlphaGrid::new(alphas.into())?;
        Ok(self)
    }

    /// `(family, alpha)` pairs in sweep order; families without an exponent
    /// appear once with `None`.
    fn work_items(&self) -> Vec<(BoundFamily, Option<f64>)> {
        let mut families = self.families.clone();
        families.sort();
        families.dedup();
        families
            .into_iter()
            .flat_map(|f| {
                let alphas: Vec<Option<f64>> =
                    if f.takes_alpha() { self.alphas.values().iter().copied().map(Some).collect() } else { vec![None] };
                alphas.into_iter().map(move |a| (f, a))
            })
            .collect()
    }
}

/// Every applicable check of the configured families on one graph, in sweep
/// order. Inapplicable combinations (too few vertices or edges, no claim at
/// this exponent) are skipped.
pub fn checks_for_graph(g: &Graph, opts: &VerifyOptions) -> Vec<BoundCheck> {
    checks_for_items(g, &opts.work_items(), opts)
}

fn checks_for_items(g: &Graph, items: &[(BoundFamily, Option<f64>)], opts: &VerifyOptions) -> Vec<BoundCheck> {
    let mut out = Vec::new();
    for &(family, alpha) in items {
        match check_family(family, g, alpha, opts.reading) {
            Ok(checks) => {
                let kept = checks.into_iter().filter(|c| opts.only.as_ref().is_none_or(|ids| ids.contains(&c.bound)));
                if opts.negative_control {
                    out.extend(kept.map(|c| c.with_sides_swapped()));
                } else {
                    out.extend(kept);
                }
            }
            Err(BoundError::NoEdges(_) | BoundError::TooFewVertices { .. } | BoundError::NoClaim { .. }) => {}
            Err(e) => unreachable!("alpha grid is validated: {e}"),
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    /// Position of the graph in the corpus stream.
    pub graph_index: usize,
    pub graph6: String,
    pub check: BoundCheck,
}

/// Aggregate of one `(bound, alpha)` pair over a corpus.
#[derive(Debug, Clone, PartialEq)]
pub struct EnumerationReport {
    pub bound: BoundId,
    pub alpha: Option<f64>,
    pub form: Form,
    pub graphs_checked: usize,
    pub violations: Vec<Violation>,
    /// Corpus indices of graphs where the bound is tight.
    pub equality_witnesses: Vec<usize>,
    /// Corpus indices where predicted and observed equality disagree.
    pub equality_mismatches: Vec<usize>,
    pub runtime: Duration,
}

impl EnumerationReport {
    fn empty(bound: BoundId, alpha: Option<f64>, form: Form) -> Self {
        EnumerationReport {
            bound,
            alpha,
            form,
            graphs_checked: 0,
            violations: Vec::new(),
            equality_witnesses: Vec::new(),
            equality_mismatches: Vec::new(),
            runtime: Duration::ZERO,
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn key(&self) -> (BoundId, Option<f64>) {
        (self.bound, self.alpha)
    }
}

/// Reports for every `(bound, alpha)` the options can produce, found by
/// probing a graph that satisfies every precondition.
fn planned_reports(items: &[(BoundFamily, Option<f64>)], opts: &VerifyOptions) -> Vec<EnumerationReport> {
    let probe = complete(3).expect("K3");
    checks_for_items(&probe, items, opts)
        .into_iter()
        .map(|c| EnumerationReport::empty(c.bound, c.alpha, c.form))
        .collect()
}

fn slot(reports: &[EnumerationReport], check: &BoundCheck) -> usize {
    reports.iter().position(|r| r.key() == (check.bound, check.alpha)).expect("every check kind is planned")
}

fn fold_chunk(reports: &mut [EnumerationReport], start: usize, results: Vec<(Vec<BoundCheck>, &Graph)>) {
    for (offset, (checks, g)) in results.into_iter().enumerate() {
        let index = start + offset;
        for check in checks {
            let r = &mut reports[slot(reports, &check)];
            r.graphs_checked += 1;
            if check.equality_observed {
                r.equality_witnesses.push(index);
            }
            if check.equality_mismatch() {
                r.equality_mismatches.push(index);
            }
            if !check.holds {
                let graph6 = to_graph6(g).unwrap_or_default();
                r.violations.push(Violation { graph_index: index, graph6, check });
            }
        }
    }
}

/// Runs the configured checkers over a fallible graph stream. The first
/// stream error aborts the sweep.
pub fn try_verify_corpus<I, E>(corpus: I, opts: &VerifyOptions) -> Result<Vec<EnumerationReport>, E>
where
    I: IntoIterator<Item = Result<Graph, E>>,
{
    let items = opts.work_items();
    let mut reports = planned_reports(&items, opts);
    let pool = opts.threads.map(|t| rayon::ThreadPoolBuilder::new().num_threads(t).build().expect("thread pool"));
    let mut stream = corpus.into_iter();
    let mut start = 0;
    let mut per_kind = vec![Duration::ZERO; reports.len()];
    loop {
        let mut chunk = Vec::with_capacity(CHUNK);
        for item in stream.by_ref().take(CHUNK) {
            chunk.push(item?);
        }
        if chunk.is_empty() {
            break;
        }
        let work = || chunk.par_iter().map(|g| (checks_for_items(g, &items, opts), g)).collect::<Vec<_>>();
        let chunk_began = Instant::now();
        let results = match &pool {
            Some(p) => p.install(work),
            None => work(),
        };
        let elapsed = chunk_began.elapsed();
        // Wall time is shared across kinds in proportion to their checks.
        let before: Vec<usize> = reports.iter().map(|r| r.graphs_checked).collect();
        fold_chunk(&mut reports, start, results);
        let total: usize = reports.iter().zip(&before).map(|(r, b)| r.graphs_checked - b).sum();
        for ((r, b), t) in reports.iter().zip(&before).zip(per_kind.iter_mut()) {
            if total > 0 {
                *t += elapsed.mul_f64((r.graphs_checked - b) as f64 / total as f64);
            }
        }
        start += chunk.len();
    }
    for (r, t) in reports.iter_mut().zip(per_kind) {
        r.runtime = t;
    }
    Ok(reports)
}

/// Infallible form of [`try_verify_corpus`].
pub fn verify_corpus<I>(corpus: I, opts: &VerifyOptions) -> Vec<EnumerationReport>
where
    I: IntoIterator<Item = Graph>,
{
    match try_verify_corpus(corpus.into_iter().map(Ok::<_, std::convert::Infallible>), opts) {
        Ok(r) => r,
        Err(never) => match never {},
    }
}

/// Visits every check in corpus order on the calling thread.
pub fn for_each_check<I, F>(corpus: I, opts: &VerifyOptions, mut observer: F)
where
    I: IntoIterator<Item = Graph>,
    F: FnMut(usize, &Graph, &BoundCheck),
{
    let items = opts.work_items();
    for (i, g) in corpus.into_iter().enumerate() {
        for check in checks_for_items(&g, &items, opts) {
            observer(i, &g, &check);
        }
    }
}
