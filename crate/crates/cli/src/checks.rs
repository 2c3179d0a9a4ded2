//! Per-graph pipelines behind the subcommands.

use std::collections::BTreeMap;

use subcubic_core::canon::are_isomorphic;
use subcubic_core::certificate::{
    self, certify_all_packings, certify_packing, lemma_checks, structure_checks, CertifyError, DecomposeError,
};
use subcubic_core::invariants::{self, InvariantReport};
use subcubic_core::packing::theorem3_check;
use subcubic_core::{Graph, Named};

use crate::graph6;
use crate::records::{BoundRecord, CertificateRecord, CertifyRecord, CheckStatus, ScanRecord};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, clap::ValueEnum)]
pub enum Check {
    /// `i = 3ρ` exactly for the four extremal graphs.
    Equality,
    /// Certificates for every maximal packing and `i ≤ 3ρ`.
    Theorem4,
    /// `ρ` by direct packing search equals `α(G²)`.
    Obs6,
    /// On equality graphs: `S_1 = ∅`, `S_2 = S^A_2`, `f` bijective, and
    /// degree-1 `H` vertices outside `A` lie in `W`, for every packing.
    Lemma4,
    /// On equality graphs: cubic, every maximal packing maximum, `H` a
    /// matching, and the `Z*`/`A` partition facts, for every packing.
    Structure,
    /// Cubic graphs without `K_{2,3}` other than `C5 □ K2` have `i ≤ 3n/8`.
    Lemma9,
    /// Every check above.
    All,
}

impl Check {
    pub const EACH: [Check; 6] = [
        Check::Equality,
        Check::Theorem4,
        Check::Obs6,
        Check::Lemma4,
        Check::Structure,
        Check::Lemma9,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Equality => "equality",
            Check::Theorem4 => "theorem4",
            Check::Obs6 => "obs6",
            Check::Lemma4 => "lemma4",
            Check::Structure => "structure",
            Check::Lemma9 => "lemma9",
            Check::All => "all",
        }
    }

    /// Expands `All`; otherwise the check itself.
    pub fn expand(checks: &[Check]) -> Vec<Check> {
        let mut out: Vec<Check> = checks
            .iter()
            .flat_map(|&c| if c == Check::All { Check::EACH.to_vec() } else { vec![c] })
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// First catalog graph isomorphic to `g`, in catalog order.
pub fn catalog_match(g: &Graph) -> Option<Named> {
    Named::ALL.into_iter().find(|h| are_isomorphic(g, &h.graph()))
}

pub fn scan_record(graph6: String, g: &Graph, checks: &[Check]) -> ScanRecord {
    let inv = InvariantReport::compute(g);
    let equality = inv.idom == 3 * inv.rho;
    let matched = catalog_match(g);
    let mut out = BTreeMap::new();
    for &c in &Check::expand(checks) {
        let status = match c {
            Check::Equality => {
                let extremal = matched.is_some_and(|h| Named::EXTREMAL.contains(&h));
                CheckStatus::from_bool(equality == extremal)
            }
            Check::Theorem4 => theorem4_status(g),
            Check::Obs6 => CheckStatus::from_bool(invariants::packing_number_direct(g) == inv.rho),
            Check::Lemma4 | Check::Structure => equality_family_status(g, c, equality, inv.rho),
            Check::Lemma9 => lemma9_status(g, inv.idom),
            Check::All => unreachable!("expanded above"),
        };
        out.insert(c.name().to_owned(), status);
    }
    ScanRecord {
        graph6,
        n: g.n(),
        girth: g.girth(),
        alpha: inv.alpha,
        gamma: inv.gamma,
        idom: inv.idom,
        rho: inv.rho,
        equality,
        catalog_match: matched.map(|h| h.name().to_owned()),
        checks: out,
    }
}

fn is_precondition(e: &CertifyError) -> bool {
    matches!(
        e,
        CertifyError::NotConnected
            | CertifyError::Decompose(DecomposeError::NotSubcubic { .. })
            | CertifyError::Decompose(DecomposeError::IsolatedPackingVertex { .. })
    )
}

fn theorem4_status(g: &Graph) -> CheckStatus {
    match certify_all_packings(g) {
        Ok(s) => CheckStatus::from_bool(s.bound_holds),
        Err(e) if is_precondition(&e) => CheckStatus::Unmet,
        Err(_) => CheckStatus::Fail,
    }
}

fn equality_family_status(g: &Graph, c: Check, equality: bool, rho: usize) -> CheckStatus {
    if !equality {
        return CheckStatus::NotApplicable;
    }
    if !g.is_subcubic() || !g.is_connected() || g.n() < 2 {
        return CheckStatus::Unmet;
    }
    for s in invariants::maximal_packings(g) {
        let Ok(run) = certify_packing(g, s) else {
            return CheckStatus::Fail;
        };
        let (d, sel, cert) = (&run.decomposition, &run.selection, &run.certificate);
        let ok = match c {
            Check::Lemma4 => lemma_checks(g, d, sel, cert).passed(),
            _ => structure_checks(g, d, sel, cert, rho).passed(),
        };
        if !ok {
            return CheckStatus::Fail;
        }
    }
    CheckStatus::Pass
}

fn lemma9_status(g: &Graph, idom: usize) -> CheckStatus {
    if !g.is_cubic()
        || !g.is_connected()
        || invariants::has_k23_subgraph(g)
        || are_isomorphic(g, &Named::C5xK2.graph())
    {
        return CheckStatus::NotApplicable;
    }
    CheckStatus::from_bool(8 * idom <= 3 * g.n())
}

/// `index = None` certifies every maximal packing.
pub fn certify_record(graph6: String, g: &Graph, index: Option<usize>) -> CertifyRecord {
    let mut rec = CertifyRecord {
        graph6,
        n: g.n(),
        idom: None,
        rho: None,
        bound_holds: None,
        packings: None,
        max_ahat: None,
        min_s: None,
        greedy_failures: None,
        certificates: Vec::new(),
        status: CheckStatus::Pass,
        error: None,
    };
    let fail = |mut rec: CertifyRecord, e: CertifyError| {
        rec.status = if is_precondition(&e) {
            CheckStatus::Unmet
        } else {
            CheckStatus::Fail
        };
        rec.error = Some(e.to_string());
        rec
    };
    let summary = match certify_all_packings(g) {
        Ok(s) => s,
        Err(e) => return fail(rec, e),
    };
    rec.idom = Some(summary.idom);
    rec.rho = Some(summary.rho);
    rec.bound_holds = Some(summary.bound_holds);
    rec.packings = Some(summary.packings);
    rec.max_ahat = Some(summary.max_ahat);
    rec.min_s = Some(summary.min_s);
    rec.greedy_failures = Some(summary.greedy_failures);
    let packings = invariants::maximal_packings(g);
    let chosen: Vec<_> = match index {
        None => packings,
        Some(i) => match packings.get(i) {
            Some(&s) => vec![s],
            None => {
                rec.status = CheckStatus::Unmet;
                rec.error = Some(format!("packing index {i} out of range: {} maximal packings", packings.len()));
                return rec;
            }
        },
    };
    for s in chosen {
        match certify_packing(g, s) {
            Ok(run) => {
                let valid = run.certificate.is_valid(g)
                    && certificate::verify_property1(g, &run.certificate).is_ok();
                if !valid {
                    rec.status = CheckStatus::Fail;
                }
                rec.certificates.push(CertificateRecord::new(&run.certificate, valid));
            }
            Err(e) => return fail(rec, e),
        }
    }
    rec
}

pub fn bound_record(graph6: String, g: &Graph) -> BoundRecord {
    match theorem3_check(g) {
        Ok(r) => BoundRecord::from_report(graph6, &r),
        Err(e) => BoundRecord {
            graph6,
            n: g.n(),
            girth: g.girth(),
            rho: None,
            bound_n_plus_1_over_8: None,
            bound_2n_over_15: None,
            claim12: None,
            claim13: None,
            claim15: None,
            lemma11: None,
            rho_bound: None,
            status: CheckStatus::Unmet,
            error: Some(e.to_string()),
        },
    }
}

pub fn encode(g: &Graph) -> String {
    graph6::encode(g)
}
