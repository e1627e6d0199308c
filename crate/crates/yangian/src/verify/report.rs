//! Relation identifiers, run configuration, and serializable reports.
//!
//! Report field names and case ordering are stable: identical configuration
//! and seed produce byte-identical JSON.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::liemod::Verdict;

/// Every relation and derived identity the engine can check.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum RelationId {
    // defining relations
    HH,
    HX,
    XX,
    ExHX,
    ExXX,
    Serre,
    CartanExt,
    // minimalistic presentation
    HHmin,
    HXmin,
    XXmin,
    ExHX2min,
    ExXXmin,
    SerreMin,
    // derived chain
    L24a,
    L24b,
    L25,
    L26,
    L27,
    L28,
    P29,
    L210,
    L211c1,
    L211c2,
    L211c3,
    L211c4,
    L212,
    L213,
    P214,
    P215,
    HH2,
    // pure-Lie operator identities
    VW1,
    VW2,
    VW3,
    VW4,
    SQ1,
    SQ2,
    SQ3,
    Kill,
    JRoot,
    JHV,
    CorJJ,
    Part2Cancel,
    ImaginaryDropout,
    OmegaBasis,
    CasimirComm,
    // coproduct
    DeltaHTildeRoutes,
    DeltaX1Recursion,
    Coassoc,
    // two-parameter
    HXve1,
    HXve2,
    XXve,
    Equiv1,
    Equiv2,
    Equiv3,
    CAlpha,
}

impl RelationId {
    pub fn name(&self) -> &'static str {
        match self {
            RelationId::HH => "HH",
            RelationId::HX => "HX",
            RelationId::XX => "XX",
            RelationId::ExHX => "exHX",
            RelationId::ExXX => "exXX",
            RelationId::Serre => "serre",
            RelationId::CartanExt => "cartan_ext",
            RelationId::HHmin => "HH'",
            RelationId::HXmin => "HX'",
            RelationId::XXmin => "XX'",
            RelationId::ExHX2min => "exHX2'",
            RelationId::ExXXmin => "exXX'",
            RelationId::SerreMin => "serre'",
            RelationId::L24a => "L2.4a",
            RelationId::L24b => "L2.4b",
            RelationId::L25 => "L2.5",
            RelationId::L26 => "L2.6",
            RelationId::L27 => "L2.7",
            RelationId::L28 => "L2.8",
            RelationId::P29 => "P2.9",
            RelationId::L210 => "L2.10",
            RelationId::L211c1 => "L2.11(1)",
            RelationId::L211c2 => "L2.11(2)",
            RelationId::L211c3 => "L2.11(3)",
            RelationId::L211c4 => "L2.11(4)",
            RelationId::L212 => "L2.12",
            RelationId::L213 => "L2.13",
            RelationId::P214 => "P2.14",
            RelationId::P215 => "P2.15",
            RelationId::HH2 => "HH2",
            RelationId::VW1 => "VW1",
            RelationId::VW2 => "VW2",
            RelationId::VW3 => "VW3",
            RelationId::VW4 => "VW4",
            RelationId::SQ1 => "SQ1",
            RelationId::SQ2 => "SQ2",
            RelationId::SQ3 => "SQ3",
            RelationId::Kill => "KILL",
            RelationId::JRoot => "JROOT",
            RelationId::JHV => "JHV",
            RelationId::CorJJ => "CORJJ",
            RelationId::Part2Cancel => "PART2CANCEL",
            RelationId::ImaginaryDropout => "IMDROP",
            RelationId::OmegaBasis => "OMBASIS",
            RelationId::CasimirComm => "CASCOMM",
            RelationId::DeltaHTildeRoutes => "DELTA_HT_ROUTES",
            RelationId::DeltaX1Recursion => "DELTA_X1_REC",
            RelationId::Coassoc => "COASSOC",
            RelationId::HXve1 => "HXve1",
            RelationId::HXve2 => "HXve2",
            RelationId::XXve => "XXve",
            RelationId::Equiv1 => "EQUIV1",
            RelationId::Equiv2 => "EQUIV2",
            RelationId::Equiv3 => "EQUIV3",
            RelationId::CAlpha => "CALPHA",
        }
    }
}

impl fmt::Display for RelationId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exact status of one relation instance.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

/// A single nonzero matrix entry disproving a relation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub row: String,
    pub col: String,
    pub value: String,
}

/// Verdict for one quantified relation instance.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CaseReport {
    pub relation: String,
    pub params: BTreeMap<String, String>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl CaseReport {
    pub fn from_verdict(relation: RelationId, params: BTreeMap<String, String>, v: Verdict) -> Self {
        match v {
            Verdict::Pass { window } => {
                let mut params = params;
                params.insert("window".into(), window.to_string());
                CaseReport {
                    relation: relation.name().to_string(),
                    params,
                    status: Status::Pass,
                    witness: None,
                    reason: None,
                }
            }
            Verdict::Fail { row, col, value } => CaseReport {
                relation: relation.name().to_string(),
                params,
                status: Status::Fail,
                witness: Some(Witness { row, col, value }),
                reason: None,
            },
            Verdict::Inconclusive => CaseReport {
                relation: relation.name().to_string(),
                params,
                status: Status::Inconclusive,
                witness: None,
                reason: Some("certified window is empty at this depth".into()),
            },
        }
    }

    pub fn inconclusive(relation: RelationId, params: BTreeMap<String, String>, reason: &str) -> Self {
        CaseReport {
            relation: relation.name().to_string(),
            params,
            status: Status::Inconclusive,
            witness: None,
            reason: Some(reason.to_string()),
        }
    }
}

/// Aggregate counts over a suite run.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub inconclusive: usize,
}

/// Serializable run configuration; a report embeds the exact configuration
/// that produced it.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConfigDump {
    pub algebra: String,
    pub suite: String,
    pub depth: u32,
    pub rmax: usize,
    pub backend: String,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<String>,
}

/// Full suite report.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub config: ConfigDump,
    pub cases: Vec<CaseReport>,
    pub summary: Summary,
}

impl SuiteReport {
    pub fn new(suite: &str, config: ConfigDump, cases: Vec<CaseReport>) -> Self {
        let mut summary = Summary::default();
        for c in &cases {
            match c.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Inconclusive => summary.inconclusive += 1,
            }
        }
        SuiteReport { suite: suite.to_string(), config, cases, summary }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }
}
