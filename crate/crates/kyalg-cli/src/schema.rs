//! JSON documents emitted by `ky`.  Every output parses back into one of
//! these types.

use kyalg::exactmath::Poly;
use kyalg::gram::ModuleLabel;
use kyalg::morphisms::{EmbeddingReport, XiChainRow};
use kyalg::roots::RootReport;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Cached payload of `gram`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GramPayload {
    pub label: ModuleLabel,
    pub dim: usize,
    pub det: Poly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GramOut {
    pub label: ModuleLabel,
    pub dim: usize,
    pub det: Poly,
    pub det_text: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub smith: Option<Vec<String>>,
}

/// Cached payload of `series`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesPayload {
    pub c: Poly,
    pub anchor: i64,
    pub p_anchor: Poly,
    pub p_next: Poly,
    pub d: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesOut {
    pub l: i64,
    pub lambda: Vec<usize>,
    pub d: usize,
    pub c: String,
    pub anchor: i64,
    /// `P_n` for `n` from the anchor up to `--max-n`, keyed by `n`.
    pub terms: BTreeMap<String, String>,
    /// `P_n = Σ_s c_s P^U_{n−s}`, keyed by the shift `s`.
    pub u_shifts: BTreeMap<String, String>,
    pub ramping: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FibreOut {
    pub dim: String,
    pub det: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mvf: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexOut {
    pub p: usize,
    pub lambda: Vec<usize>,
    pub fibre: BTreeMap<String, FibreOut>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RolletOut {
    pub l: i64,
    pub vertices: Vec<VertexOut>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArmRow {
    pub p: usize,
    pub n: usize,
    pub m: usize,
    pub holds: bool,
    /// `𝒞/𝒱`, `"1"` when the property holds.
    pub residual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArmOut {
    pub l: i64,
    pub lambda: Vec<usize>,
    pub all_hold: bool,
    pub checks: Vec<ArmRow>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootsEntry {
    pub n: i64,
    pub polynomial: String,
    pub report: RootReport,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootsOut {
    pub l: i64,
    pub lambda: Vec<usize>,
    pub entries: Vec<RootsEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct XiCoeff {
    /// 1-based cup endpoints.
    pub cup: (usize, usize),
    /// 1-based index into the orthogonal Specht frame.
    pub specht: usize,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct XiOut {
    pub label: ModuleLabel,
    pub d: String,
    pub p_n: String,
    pub p_divides_d: bool,
    pub c_lambda_fixes: bool,
    pub coeffs: Vec<XiCoeff>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BootstrapOut {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub xi: Option<XiOut>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chain: Option<Vec<XiChainRow>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub embedding: Option<EmbeddingReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleOut {
    pub seed: u64,
    pub cases: usize,
    pub mismatches: Vec<String>,
}
