//! JSON shapes written one per line.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use subcubic_core::certificate::Certificate;
use subcubic_core::packing::{Theorem3Report, Verdict};
use subcubic_core::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CheckStatus {
    #[serde(rename = "pass")]
    Pass,
    /// The check does not apply to this graph.
    #[serde(rename = "n/a")]
    NotApplicable,
    /// The input does not meet the check's precondition.
    #[serde(rename = "unmet")]
    Unmet,
    #[serde(rename = "fail")]
    Fail,
}

impl CheckStatus {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        }
    }
}

impl<W> From<&Verdict<W>> for CheckStatus {
    fn from(v: &Verdict<W>) -> Self {
        CheckStatus::from_bool(v.passed())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRecord {
    pub graph6: String,
    pub n: usize,
    pub girth: Option<usize>,
    pub alpha: usize,
    pub gamma: usize,
    pub idom: usize,
    pub rho: usize,
    /// `idom == 3 * rho`.
    pub equality: bool,
    pub catalog_match: Option<String>,
    pub checks: BTreeMap<String, CheckStatus>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateRecord {
    pub s: Vec<usize>,
    pub n_set: Vec<usize>,
    pub r_set: Vec<usize>,
    pub a_set: Vec<usize>,
    pub sa1: Vec<usize>,
    pub sa2: Vec<usize>,
    pub sa3: Vec<usize>,
    pub t_set: Vec<usize>,
    pub z_set: Vec<usize>,
    pub ahat: Vec<usize>,
    pub f_map: Vec<(usize, usize)>,
    pub bound_3s: usize,
    pub valid: bool,
}

fn v(s: VertexSet) -> Vec<usize> {
    s.to_vec()
}

impl CertificateRecord {
    pub fn new(c: &Certificate, valid: bool) -> Self {
        CertificateRecord {
            s: v(c.packing),
            n_set: v(c.n_set),
            r_set: v(c.r_set),
            a_set: v(c.a_set),
            sa1: v(c.sa_parts[0]),
            sa2: v(c.sa_parts[1]),
            sa3: v(c.sa_parts[2]),
            t_set: v(c.t_set),
            z_set: v(c.z_set),
            ahat: v(c.ahat),
            f_map: c.f_map.clone(),
            bound_3s: c.bound_3s(),
            valid,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertifyRecord {
    pub graph6: String,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub idom: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rho: Option<usize>,
    /// `idom <= 3 * rho`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound_holds: Option<bool>,
    /// Number of maximal packings.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub packings: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_ahat: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub min_s: Option<usize>,
    /// Packings where taking the smallest free admissible image in vertex
    /// order would not have given an injective map.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub greedy_failures: Option<usize>,
    #[serde(default)]
    pub certificates: Vec<CertificateRecord>,
    pub status: CheckStatus,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundRecord {
    pub graph6: String,
    pub n: usize,
    pub girth: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rho: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound_n_plus_1_over_8: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound_2n_over_15: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub claim12: Option<CheckStatus>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub claim13: Option<CheckStatus>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub claim15: Option<CheckStatus>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lemma11: Option<CheckStatus>,
    /// `rho >= bound_n_plus_1_over_8`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rho_bound: Option<CheckStatus>,
    pub status: CheckStatus,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl BoundRecord {
    pub fn from_report(graph6: String, r: &Theorem3Report) -> Self {
        let rho_bound = CheckStatus::from_bool(r.rho >= r.bound_n_plus_1_over_8 && r.rho >= r.bound_2n_over_15);
        let claims = [
            CheckStatus::from(&r.claim12),
            CheckStatus::from(&r.claim13),
            CheckStatus::from(&r.claim15),
            CheckStatus::from(&r.lemma11),
        ];
        BoundRecord {
            graph6,
            n: r.n,
            girth: Some(r.girth),
            rho: Some(r.rho),
            bound_n_plus_1_over_8: Some(r.bound_n_plus_1_over_8),
            bound_2n_over_15: Some(r.bound_2n_over_15),
            claim12: Some(claims[0]),
            claim13: Some(claims[1]),
            claim15: Some(claims[2]),
            lemma11: Some(claims[3]),
            rho_bound: Some(rho_bound),
            status: claims.into_iter().chain([rho_bound]).max().expect("nonempty"),
            error: None,
        }
    }
}
