//! Batch analysis, ranking and single-shot logic evaluation, plus the JSON
//! rendering shared by the command-line tool.
//!
//! Every floating-point number in rendered JSON is rounded to 12 significant
//! digits, so reports are stable across platforms and easy to diff.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::batch::RecordBatch;
use crate::error::{Error, Result};
use crate::measures::{compare_scores, score, DefinednessProfile, ScalarReport};
use crate::norms::TNormFamily;
use crate::penta_def::{decompose5d, intersect5d, negate5d, union5d, PentaDefVector};
use crate::penta_sat::{decompose5s, intersect5s, negate5s, union5s, PentaSatVector};
use crate::tetra::{decompose4, intersect4, negate4, union4, TetraVector};
use crate::types::{NeutrosophicTriple, Partition};

pub const TOOL_NAME: &str = "neutro";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Indeterminacies {
    pub tetra: f64,
    pub penta_sat: f64,
    pub penta_def: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RecordReport {
    pub index: usize,
    pub id: Option<String>,
    pub input: NeutrosophicTriple,
    pub scalars: ScalarReport,
    pub tetra: TetraVector,
    pub penta_sat: PentaSatVector,
    pub penta_def: PentaDefVector,
    pub indeterminacy: Indeterminacies,
}

impl RecordReport {
    pub fn of(
        index: usize,
        id: Option<String>,
        q: NeutrosophicTriple,
        profile: DefinednessProfile,
    ) -> Self {
        let tetra = decompose4(q);
        let penta_sat = decompose5s(q);
        let penta_def = decompose5d(q, profile);
        RecordReport {
            index,
            id,
            input: q,
            scalars: ScalarReport::of(q, profile),
            tetra,
            penta_sat,
            penta_def,
            indeterminacy: Indeterminacies {
                tetra: tetra.indeterminacy(),
                penta_sat: penta_sat.indeterminacy(),
                penta_def: penta_def.indeterminacy(),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FeatureReport {
    pub tool: &'static str,
    pub version: &'static str,
    pub profile: String,
    pub tnorm: String,
    pub count: usize,
    pub records: Vec<RecordReport>,
}

impl FeatureReport {
    pub fn to_json(&self) -> String {
        render_json(self)
    }
}

/// One report entry per record, in input order. Records are evaluated in
/// parallel; the result is identical to sequential evaluation.
pub fn run_analyze(
    batch: &RecordBatch,
    profile: DefinednessProfile,
    family: TNormFamily,
) -> FeatureReport {
    let records: Vec<RecordReport> = batch
        .records
        .par_iter()
        .enumerate()
        .map(|(index, r)| RecordReport::of(index, r.id.clone(), r.triple, profile))
        .collect();
    FeatureReport {
        tool: TOOL_NAME,
        version: TOOL_VERSION,
        profile: profile.to_string(),
        tnorm: family.to_string(),
        count: records.len(),
        records,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RankEntry {
    pub rank: usize,
    pub index: usize,
    pub id: Option<String>,
    pub eta: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Ranking {
    pub tool: &'static str,
    pub version: &'static str,
    pub profile: String,
    pub ranking: Vec<RankEntry>,
}

impl Ranking {
    pub fn to_json(&self) -> String {
        render_json(self)
    }
}

/// Sorts records by score, highest first.
///
/// Scores are first sorted exactly; runs of neighbours whose consecutive
/// scores differ by at most [`crate::measures::SCORE_TIE_TOL`] then form a
/// tie group that keeps input order.
pub fn run_rank(batch: &RecordBatch, profile: DefinednessProfile) -> Ranking {
    let mut scored: Vec<(usize, f64)> = batch
        .records
        .iter()
        .enumerate()
        .map(|(i, r)| (i, score(r.triple, profile)))
        .collect();
    scored.sort_by(|a, b| b.1.total_cmp(&a.1).then(a.0.cmp(&b.0)));

    let mut start = 0;
    while start < scored.len() {
        let mut end = start + 1;
        while end < scored.len() && compare_scores(scored[end - 1].1, scored[end].1).is_eq() {
            end += 1;
        }
        scored[start..end].sort_by_key(|&(i, _)| i);
        start = end;
    }

    let ranking = scored
        .into_iter()
        .enumerate()
        .map(|(pos, (index, eta))| RankEntry {
            rank: pos + 1,
            index,
            id: batch.records[index].id.clone(),
            eta,
        })
        .collect();
    Ranking {
        tool: TOOL_NAME,
        version: TOOL_VERSION,
        profile: profile.to_string(),
        ranking,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LogicOp {
    Union,
    Intersection,
    Negation,
}

impl FromStr for LogicOp {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "union" => Ok(LogicOp::Union),
            "intersection" => Ok(LogicOp::Intersection),
            "negation" => Ok(LogicOp::Negation),
            _ => Err(Error::UnknownOperator(s.to_string())),
        }
    }
}

impl fmt::Display for LogicOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LogicOp::Union => "union",
            LogicOp::Intersection => "intersection",
            LogicOp::Negation => "negation",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Scheme {
    #[default]
    Tetra,
    PentaSat,
    PentaDef,
}

impl FromStr for Scheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "tetra" => Ok(Scheme::Tetra),
            "penta-sat" => Ok(Scheme::PentaSat),
            "penta-def" => Ok(Scheme::PentaDef),
            _ => Err(Error::UnknownScheme(s.to_string())),
        }
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Scheme::Tetra => "tetra",
            Scheme::PentaSat => "penta-sat",
            Scheme::PentaDef => "penta-def",
        })
    }
}

/// A decomposed vector in one of the three schemes.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(untagged)]
pub enum SchemeVector {
    Tetra(TetraVector),
    PentaSat(PentaSatVector),
    PentaDef(PentaDefVector),
}

impl SchemeVector {
    pub fn decompose(scheme: Scheme, q: NeutrosophicTriple, profile: DefinednessProfile) -> Self {
        match scheme {
            Scheme::Tetra => SchemeVector::Tetra(decompose4(q)),
            Scheme::PentaSat => SchemeVector::PentaSat(decompose5s(q)),
            Scheme::PentaDef => SchemeVector::PentaDef(decompose5d(q, profile)),
        }
    }

    pub fn components(&self) -> Vec<f64> {
        match self {
            SchemeVector::Tetra(v) => v.components(),
            SchemeVector::PentaSat(v) => v.components(),
            SchemeVector::PentaDef(v) => v.components(),
        }
    }

    pub fn labels(&self) -> &'static [&'static str] {
        match self {
            SchemeVector::Tetra(_) => TetraVector::LABELS,
            SchemeVector::PentaSat(_) => PentaSatVector::LABELS,
            SchemeVector::PentaDef(_) => PentaDefVector::LABELS,
        }
    }

    pub fn component_sum(&self) -> f64 {
        self.components().iter().sum()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Operand {
    pub triple: NeutrosophicTriple,
    pub vector: SchemeVector,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LogicOutcome {
    pub op: String,
    pub scheme: String,
    pub tnorm: String,
    pub profile: String,
    pub lhs: Operand,
    pub rhs: Option<Operand>,
    pub result: SchemeVector,
    pub result_sum: f64,
}

impl LogicOutcome {
    pub fn to_json(&self) -> String {
        render_json(self)
    }
}

/// Decomposes the operands in `scheme` and applies `op`. The profile only
/// matters for the definedness-based scheme.
pub fn run_logic(
    op: LogicOp,
    scheme: Scheme,
    family: TNormFamily,
    profile: DefinednessProfile,
    lhs: NeutrosophicTriple,
    rhs: Option<NeutrosophicTriple>,
) -> Result<LogicOutcome> {
    let rhs = match (op, rhs) {
        (LogicOp::Negation, Some(_)) => {
            return Err(Error::InvalidParameter(
                "negation takes a single operand".into(),
            ))
        }
        (LogicOp::Negation, None) => None,
        (_, None) => return Err(Error::MissingOperand),
        (_, Some(r)) => Some(r),
    };
    let a = SchemeVector::decompose(scheme, lhs, profile);
    let b = rhs.map(|r| SchemeVector::decompose(scheme, r, profile));

    let result = match (a, b) {
        (SchemeVector::Tetra(x), None) => SchemeVector::Tetra(negate4(&x)),
        (SchemeVector::PentaSat(x), None) => SchemeVector::PentaSat(negate5s(&x)),
        (SchemeVector::PentaDef(x), None) => SchemeVector::PentaDef(negate5d(&x)),
        (SchemeVector::Tetra(x), Some(SchemeVector::Tetra(y))) => SchemeVector::Tetra(match op {
            LogicOp::Union => union4(&x, &y, family),
            _ => intersect4(&x, &y, family),
        }),
        (SchemeVector::PentaSat(x), Some(SchemeVector::PentaSat(y))) => {
            SchemeVector::PentaSat(match op {
                LogicOp::Union => union5s(&x, &y, family),
                _ => intersect5s(&x, &y, family),
            })
        }
        (SchemeVector::PentaDef(x), Some(SchemeVector::PentaDef(y))) => {
            SchemeVector::PentaDef(match op {
                LogicOp::Union => union5d(&x, &y, family),
                _ => intersect5d(&x, &y, family),
            })
        }
        _ => unreachable!("operands decomposed in the same scheme"),
    };

    Ok(LogicOutcome {
        op: op.to_string(),
        scheme: scheme.to_string(),
        tnorm: family.to_string(),
        profile: profile.to_string(),
        lhs: Operand {
            triple: lhs,
            vector: a,
        },
        rhs: rhs
            .zip(b)
            .map(|(triple, vector)| Operand { triple, vector }),
        result_sum: result.component_sum(),
        result,
    })
}

/// Rounds to 12 significant digits; negative zero becomes zero.
pub fn round_sig12(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return if x == 0.0 { 0.0 } else { x };
    }
    let r: f64 = format!("{x:.11e}").parse().expect("formatted float parses");
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

fn round_numbers(v: &mut Value) {
    match v {
        Value::Number(n) if n.is_f64() => {
            if let Some(x) = n.as_f64() {
                if let Some(r) = serde_json::Number::from_f64(round_sig12(x)) {
                    *n = r;
                }
            }
        }
        Value::Array(items) => items.iter_mut().for_each(round_numbers),
        Value::Object(map) => map.values_mut().for_each(round_numbers),
        _ => {}
    }
}

/// Pretty JSON with every float rounded by [`round_sig12`], newline-terminated.
pub fn render_json<T: Serialize>(value: &T) -> String {
    let mut tree = serde_json::to_value(value).expect("report types serialize");
    round_numbers(&mut tree);
    let mut out = serde_json::to_string_pretty(&tree).expect("value serializes");
    out.push('\n');
    out
}
