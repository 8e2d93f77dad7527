//! Flat report records and their CSV / JSON encodings.
//!
//! Reals are rounded to 12 significant digits before serialization and then
//! written in shortest round-trip form, so a CSV file parses back into the
//! identical records and output never depends on locale.

use std::io;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bounds::{BoundCheck, BoundId, Form, Relation};
use crate::graph::Graph;
use crate::graph_io::generators::{generate_family, Family, GeneratorError};
use crate::graph_io::to_graph6;
use crate::indices::{
    closed_form_complete, closed_form_complete_bipartite, closed_form_cycle, closed_form_path, evaluate,
    general_sombor, IndexId, PathVariant,
};
use crate::verify::EnumerationReport;

/// Relative tolerance below which a closed form and a direct evaluation agree.
pub const CLOSED_FORM_TOLERANCE: f64 = 1e-12;

/// Rounds to 12 significant digits; `-0` becomes `0`.
pub fn round_sig12(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { 0.0 } else { x };
    }
    format!("{x:.11e}").parse().expect("formatted float parses")
}

mod sig12 {
    use serde::Serializer;

    pub fn serialize<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_f64(super::round_sig12(*x))
    }

    pub mod opt {
        use serde::Serializer;

        pub fn serialize<S: Serializer>(x: &Option<f64>, s: S) -> Result<S::Ok, S::Error> {
            match x {
                Some(x) => s.serialize_some(&super::super::round_sig12(*x)),
                None => s.serialize_none(),
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub bound_id: BoundId,
    #[serde(serialize_with = "sig12::opt::serialize")]
    pub alpha: Option<f64>,
    pub n: usize,
    pub m: usize,
    pub graph6: String,
    #[serde(serialize_with = "sig12::serialize")]
    pub lhs: f64,
    #[serde(serialize_with = "sig12::serialize")]
    pub rhs: f64,
    pub direction: Relation,
    #[serde(serialize_with = "sig12::serialize")]
    pub slack: f64,
    pub holds: bool,
    pub eq_pred: Option<bool>,
    pub eq_obs: bool,
}

impl CheckRecord {
    pub fn new(g: &Graph, check: &BoundCheck) -> Self {
        CheckRecord {
            bound_id: check.bound,
            alpha: check.alpha,
            n: g.order(),
            m: g.size(),
            graph6: to_graph6(g).unwrap_or_default(),
            lhs: check.lhs,
            rhs: check.rhs,
            direction: check.relation,
            slack: check.slack,
            holds: check.holds,
            eq_pred: check.equality_predicted,
            eq_obs: check.equality_observed,
        }
    }
}

/// One line per `(bound, alpha)` of a sweep. Runtime is left out so reports
/// are byte-identical across runs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SummaryRecord {
    pub bound_id: BoundId,
    #[serde(serialize_with = "sig12::opt::serialize")]
    pub alpha: Option<f64>,
    pub form: Form,
    pub graphs_checked: usize,
    pub violations: usize,
    pub equality_witnesses: usize,
    pub equality_mismatches: usize,
}

impl From<&EnumerationReport> for SummaryRecord {
    fn from(r: &EnumerationReport) -> Self {
        SummaryRecord {
            bound_id: r.bound,
            alpha: r.alpha,
            form: r.form,
            graphs_checked: r.graphs_checked,
            violations: r.violations.len(),
            equality_witnesses: r.equality_witnesses.len(),
            equality_mismatches: r.equality_mismatches.len(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IndexRecord {
    /// Position of the graph in the input.
    pub graph: usize,
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub index: IndexId,
    #[serde(serialize_with = "sig12::opt::serialize")]
    pub parameter: Option<f64>,
    /// Empty where the index is undefined (`M1P` with `p < 0` and an isolated vertex).
    #[serde(serialize_with = "sig12::opt::serialize")]
    pub value: Option<f64>,
}

/// Every index of `g`; parametric ones once per exponent, in index order.
pub fn index_records(graph: usize, g: &Graph, parameters: &[f64]) -> Vec<IndexRecord> {
    let graph6 = to_graph6(g).unwrap_or_default();
    let mut out = Vec::new();
    for id in IndexId::ALL {
        let params: Vec<Option<f64>> =
            if id.is_parametric() { parameters.iter().copied().map(Some).collect() } else { vec![None] };
        for parameter in params {
            out.push(IndexRecord {
                graph,
                graph6: graph6.clone(),
                n: g.order(),
                m: g.size(),
                index: id,
                parameter,
                value: evaluate(g, id, parameter).ok().map(|v| v.value),
            });
        }
    }
    out
}

/// Closed form against direct evaluation for one family member.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FamilyRecord {
    pub family: Family,
    pub params: String,
    pub n: usize,
    pub m: usize,
    #[serde(serialize_with = "sig12::serialize")]
    pub alpha: f64,
    #[serde(serialize_with = "sig12::serialize")]
    pub closed_form: f64,
    #[serde(serialize_with = "sig12::serialize")]
    pub direct: f64,
    /// `direct - closed_form`.
    #[serde(serialize_with = "sig12::serialize")]
    pub diff: f64,
    /// The commonly quoted path formula, for paths only.
    #[serde(serialize_with = "sig12::opt::serialize")]
    pub paper_variant: Option<f64>,
    /// `"erratum"` when the quoted path formula disagrees with the direct value.
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FamilyError {
    #[error(transparent)]
    Generator(#[from] GeneratorError),
    #[error("{family} has no closed form for parameters {params:?}")]
    NoClosedForm { family: Family, params: Vec<usize> },
}

fn agrees(a: f64, b: f64) -> bool {
    (a - b).abs() <= CLOSED_FORM_TOLERANCE * a.abs().max(b.abs())
}

pub fn family_record(family: Family, params: &[usize], alpha: f64) -> Result<FamilyRecord, FamilyError> {
    let g = generate_family(family, params)?;
    let n = g.order();
    let no_form = || FamilyError::NoClosedForm { family, params: params.to_vec() };
    let (closed_form, paper_variant) = match family {
        Family::Complete => (closed_form_complete(n, alpha).map_err(|_| no_form())?, None),
        Family::Empty => (0.0, None),
        Family::Cycle => (closed_form_cycle(n, alpha).map_err(|_| no_form())?, None),
        Family::Path => (
            closed_form_path(n, alpha, PathVariant::Corrected).map_err(|_| no_form())?,
            Some(closed_form_path(n, alpha, PathVariant::Paper).map_err(|_| no_form())?),
        ),
        Family::Star => (closed_form_complete_bipartite(1, n - 1, alpha).map_err(|_| no_form())?, None),
        Family::CompleteBipartite => {
            (closed_form_complete_bipartite(params[0], params[1], alpha).map_err(|_| no_form())?, None)
        }
    };
    let direct = general_sombor(&g, alpha);
    let note = match paper_variant {
        Some(p) if !agrees(p, direct) => "erratum",
        _ => "",
    };
    Ok(FamilyRecord {
        family,
        params: params.iter().map(usize::to_string).collect::<Vec<_>>().join(","),
        n,
        m: g.size(),
        alpha,
        closed_form,
        direct,
        diff: direct - closed_form,
        paper_variant,
        note: note.to_string(),
    })
}

/// Closed forms for `K_n`, the edgeless graph, `C_n` and `P_n` with
/// `n = 1..=max_n` wherever the family is defined, for every exponent.
pub fn standard_family_table(max_n: usize, alphas: &[f64]) -> Vec<FamilyRecord> {
    let mut out = Vec::new();
    for family in [Family::Complete, Family::Empty, Family::Cycle, Family::Path] {
        for n in 1..=max_n {
            for &alpha in alphas {
                if let Ok(r) = family_record(family, &[n], alpha) {
                    out.push(r);
                }
            }
        }
    }
    out
}

#[derive(Debug, Error)]
pub enum ReportError {
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// A flat record with a fixed CSV header.
pub trait Record: Serialize {
    const COLUMNS: &'static [&'static str];
}

impl Record for CheckRecord {
    const COLUMNS: &'static [&'static str] =
        &["bound_id", "alpha", "n", "m", "graph6", "lhs", "rhs", "direction", "slack", "holds", "eq_pred", "eq_obs"];
}

impl Record for SummaryRecord {
    const COLUMNS: &'static [&'static str] =
        &["bound_id", "alpha", "form", "graphs_checked", "violations", "equality_witnesses", "equality_mismatches"];
}

impl Record for IndexRecord {
    const COLUMNS: &'static [&'static str] = &["graph", "graph6", "n", "m", "index", "parameter", "value"];
}

impl Record for FamilyRecord {
    const COLUMNS: &'static [&'static str] =
        &["family", "params", "n", "m", "alpha", "closed_form", "direct", "diff", "paper_variant", "note"];
}

/// Header plus one row per record; the header is written even with no rows.
pub fn write_csv<T: Record, W: io::Write>(records: &[T], out: W) -> Result<(), ReportError> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
    w.write_record(T::COLUMNS)?;
    for r in records {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_csv<T: DeserializeOwned, R: io::Read>(input: R) -> Result<Vec<T>, ReportError> {
    csv::Reader::from_reader(input).deserialize().collect::<Result<Vec<T>, _>>().map_err(ReportError::from)
}

pub fn write_json<T: Serialize + ?Sized, W: io::Write>(value: &T, mut out: W) -> Result<(), ReportError> {
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}
