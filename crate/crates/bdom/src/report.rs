//! JSON payloads and the run-report envelope.
//!
//! Every payload is a `serde_json::Value` built from `Map`s, which keep keys
//! sorted, so identical results serialize to identical bytes.

use std::path::Path;

use bdom_core::audit::{ClaimStatus, EmbeddedGridAudit, GridIntervalAudit, StarAudit};
use bdom_core::interval::JumpCertificate;
use bdom_core::lattice::EfficiencyReport;
use bdom_core::{DominationInterval, GammaResult, Params, WalkTrace};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

pub fn gamma_payload(res: &GammaResult, p: Params) -> Value {
    json!({
        "gamma": res.gamma,
        "witness": res.witness.members(),
        "t": p.t,
        "r": p.r,
    })
}

pub fn oracle_payload(exact: &GammaResult, brute: &GammaResult, p: Params) -> Value {
    json!({
        "gamma": exact.gamma,
        "witness": exact.witness.members(),
        "bruteforce_gamma": brute.gamma,
        "bruteforce_witness": brute.witness.members(),
        "agree": exact.gamma == brute.gamma,
        "t": p.t,
        "r": p.r,
    })
}

pub fn interval_payload(iv: &DominationInterval, keep_witnesses: bool) -> Value {
    let mut v = json!({
        "d": iv.min,
        "D": iv.max,
        "attained": iv.attained,
        "full": iv.full,
    });
    if keep_witnesses {
        let w: serde_json::Map<String, Value> = iv
            .witnesses
            .iter()
            .map(|(k, bits)| (k.to_string(), Value::String(bits.to_string())))
            .collect();
        v["witnesses"] = Value::Object(w);
    }
    v
}

pub fn walk_payload(trace: &WalkTrace) -> Value {
    json!({
        "flip_sequence": trace.flip_sequence,
        "gamma_sequence": trace.gamma_sequence,
        "max_step": trace.max_step(),
    })
}

pub fn efficiency_payload(rep: &EfficiencyReport) -> Value {
    let violations: Vec<Value> = rep
        .violations
        .iter()
        .map(|&((i, j), rec)| json!({"cell": [i, j], "reception": rec}))
        .collect();
    json!({
        "pattern": rep.pattern,
        "torus": [rep.torus.0, rep.torus.1],
        "dominating": rep.dominating,
        "density": rep.density.to_string(),
        "strict_efficient": rep.strict_efficient,
        "nontower_exact": rep.nontower_exact,
        "clause_interpretation": rep.clause_interpretation.as_str(),
        "violations": violations,
        "min_reception": rep.min_reception,
        "max_reception": rep.max_reception,
    })
}

pub fn jump_payload(c: &JumpCertificate) -> Value {
    json!({
        "n": c.graph.n(),
        "edges": c.graph.edges().iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>(),
        "bits": c.bits.to_string(),
        "edge": c.edge,
        "gamma_before": c.gamma_before,
        "gamma_after": c.gamma_after,
        "delta": c.delta(),
    })
}

/// One audited statement at one instance.
#[derive(Debug, Clone)]
pub struct ClaimRow {
    pub claim: String,
    pub instance: String,
    pub status: ClaimStatus,
    pub detail: String,
}

impl ClaimRow {
    fn new(claim: &str, instance: String, status: ClaimStatus, detail: String) -> Self {
        ClaimRow {
            claim: claim.to_owned(),
            instance,
            status,
            detail,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "claim": self.claim,
            "instance": self.instance,
            "status": self.status.as_str(),
            "detail": self.detail,
        })
    }
}

pub fn star_rows(audits: &[StarAudit]) -> Vec<ClaimRow> {
    audits
        .iter()
        .map(|a| {
            ClaimRow::new(
                "star interval closed form and fullness",
                format!("S_{} (t,r)=({},{})", a.n, a.params.t, a.params.r),
                a.status(),
                format!(
                    "claimed [{}, {}], enumerated [{}, {}] attained {:?}",
                    a.claimed.min, a.claimed.max, a.enumerated.min, a.enumerated.max, a.enumerated.attained
                ),
            )
        })
        .collect()
}

pub fn grid_rows(audits: &[GridIntervalAudit]) -> Vec<ClaimRow> {
    let mut rows = Vec::new();
    for a in audits {
        let instance = format!("G_{{{},{}}} (2,2)", a.m, a.n);
        rows.push(ClaimRow::new(
            "small-grid upper endpoint attained and inside [d, D]",
            instance.clone(),
            a.upper_status(),
            format!(
                "claimed upper {}, enumerated [{}, {}], max #(indeg <= 1) = {}",
                a.claimed_upper, a.interval.min, a.interval.max, a.max_low_indegree
            ),
        ));
        rows.push(ClaimRow::new(
            "small-grid interval containment",
            instance,
            a.containment_status(),
            format!(
                "claimed [{}, {}] vs attained {:?}",
                a.claimed_lower, a.claimed_upper, a.interval.attained
            ),
        ));
    }
    rows
}

pub fn embedded_rows(audits: &[EmbeddedGridAudit]) -> Vec<ClaimRow> {
    let mut rows = Vec::new();
    for a in audits {
        let instance = format!("G_{{{},{}}} (2,2), n mod 3 = {}", a.m, a.n, a.residue);
        let enumerated = match &a.enumerated {
            Some(iv) => format!("enumerated [{}, {}]", iv.min, iv.max),
            None => "not enumerable".to_owned(),
        };
        rows.push(ClaimRow::new(
            "lattice-embedded grid lower endpoint",
            instance.clone(),
            a.lower_status(),
            format!(
                "claimed {}, undirected gamma {}, {}",
                a.claimed_lower, a.undirected_gamma, enumerated
            ),
        ));
        rows.push(ClaimRow::new(
            "lattice-embedded grid upper endpoint",
            instance,
            a.upper_status(),
            format!(
                "claimed {}, cropped-pattern gamma {}, {}",
                a.claimed_upper, a.construction_gamma, enumerated
            ),
        ));
    }
    rows
}

pub fn rows_json(rows: &[ClaimRow]) -> Value {
    let count = |s: ClaimStatus| rows.iter().filter(|r| r.status == s).count();
    json!({
        "claims": rows.iter().map(ClaimRow::to_json).collect::<Vec<_>>(),
        "summary": {
            "confirmed": count(ClaimStatus::Confirmed),
            "refuted-at-instance": count(ClaimStatus::RefutedAtInstance),
            "unverifiable": count(ClaimStatus::Unverifiable),
        },
    })
}

pub fn rows_markdown(title: &str, rows: &[ClaimRow]) -> String {
    let mut out = format!("# {title}\n\n| claim | instance | status | detail |\n|---|---|---|---|\n");
    for r in rows {
        out.push_str(&format!(
            "| {} | {} | {} | {} |\n",
            r.claim,
            r.instance,
            r.status.as_str(),
            r.detail
        ));
    }
    out
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Envelope around a command payload.
pub struct RunReport<'a> {
    pub command: &'a [String],
    pub inputs: &'a [(&'a Path, Vec<u8>)],
    pub params: Option<Params>,
    pub results: Value,
    pub timing_ms: u128,
}

impl RunReport<'_> {
    pub fn to_json(&self) -> Value {
        let digests: serde_json::Map<String, Value> = self
            .inputs
            .iter()
            .map(|(path, bytes)| (path.display().to_string(), Value::String(sha256_hex(bytes))))
            .collect();
        json!({
            "command": self.command,
            "inputs_digest": digests,
            "params": self.params.map(|p| json!({"t": p.t, "r": p.r})),
            "results": self.results,
            "timing_ms": self.timing_ms,
            "version": env!("CARGO_PKG_VERSION"),
        })
    }
}
