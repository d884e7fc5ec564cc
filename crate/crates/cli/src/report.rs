//! JSON documents printed by `--format json`. Every document deserializes
//! back into the same type.

use serde::{Deserialize, Serialize};

pub use cfmonoid::analysis::probe::TraceView;
pub use cfmonoid::analysis::{DehnProfile, GrowthSeries, IdentityCheck, ProbeSummary};
pub use cfmonoid::completion::ConfluenceSummary;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct NormalizeReport {
    pub input: String,
    pub normal_form: String,
    pub steps: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct EqualReport {
    pub u: String,
    pub v: String,
    pub normal_forms: [String; 2],
    pub equal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleView {
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CompletionReport {
    pub completed: bool,
    pub steps: usize,
    /// Pending equations left when a limit stopped completion.
    pub unresolved: usize,
    pub rules: Vec<RuleView>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct EnumerationReport {
    pub max_len: usize,
    pub words: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum WitnessMethod {
    Constructive,
    Search,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct WitnessReport {
    pub word: String,
    pub normal_form: String,
    pub method: WitnessMethod,
    pub found: bool,
    pub x: Option<String>,
    pub y: Option<String>,
    /// Search states visited when no witness was found.
    pub explored: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum ProbeStatusView {
    Collapsed,
    Undetermined,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ProbeReport {
    pub u: String,
    pub v: String,
    pub radius: usize,
    pub status: ProbeStatusView,
    pub truncated: usize,
    pub trace_len: Option<usize>,
    pub class_count: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<TraceView>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum AreaStatus {
    Area,
    NotEqual,
    ResourceLimit,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct AreaReport {
    pub u: String,
    pub v: String,
    pub max_len: usize,
    pub status: AreaStatus,
    pub area: Option<usize>,
    /// Words of the derivation, `0` for the zero vertex.
    pub derivation: Vec<String>,
    pub explored: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct IdentityReport {
    pub n: usize,
    pub passed: usize,
    pub failed: usize,
    pub checks: Vec<IdentityCheck>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogListing {
    pub entries: Vec<CatalogListingEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogListingEntry {
    pub name: String,
    pub provenance: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogDump {
    pub name: String,
    pub presentation: String,
}
