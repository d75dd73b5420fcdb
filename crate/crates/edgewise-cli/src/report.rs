//! Structured analysis reports: human-readable text plus a machine-readable
//! JSON form. Wall times appear only in the text rendering, so the JSON
//! form is byte-identical across runs of the same command on the same
//! input.

use serde::{Deserialize, Serialize};

use edgewise::cm::Witness;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub input: String,
    pub fingerprint: String,
    pub field: String,
    pub entries: Vec<ReportEntry>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReportEntry {
    pub property: String,
    pub verdict: serde_json::Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip)]
    pub wall_ms: f64,
}

impl AnalysisReport {
    pub fn new(input: &str, fingerprint: String, field: impl ToString) -> AnalysisReport {
        AnalysisReport {
            input: input.to_owned(),
            fingerprint,
            field: field.to_string(),
            entries: Vec::new(),
        }
    }

    pub fn push(
        &mut self,
        property: impl Into<String>,
        verdict: serde_json::Value,
        witness: Option<Witness>,
        wall_ms: f64,
    ) {
        self.entries.push(ReportEntry {
            property: property.into(),
            verdict,
            witness,
            wall_ms,
        });
    }

    /// Whether some boolean entry is false.
    pub fn any_failure(&self) -> bool {
        self.entries
            .iter()
            .any(|e| e.verdict == serde_json::Value::Bool(false))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "input {} [{}], field {}\n",
            self.input, self.fingerprint, self.field
        ));
        for e in &self.entries {
            let verdict = match &e.verdict {
                serde_json::Value::Bool(true) => "holds".to_owned(),
                serde_json::Value::Bool(false) => "FAILS".to_owned(),
                other => other.to_string(),
            };
            out.push_str(&format!(
                "  {}: {} ({:.1} ms)\n",
                e.property, verdict, e.wall_ms
            ));
            if let Some(w) = &e.witness {
                out.push_str(&format!("    witness: {}\n", describe_witness(w)));
            }
        }
        out
    }
}

/// Compact one-line rendering of a witness.
pub fn describe_witness(w: &Witness) -> String {
    match w {
        Witness::NotPure {
            small_facet,
            large_facet,
        } => format!(
            "order complex is not pure: facets {{{}}} and {{{}}}",
            small_facet.join(","),
            large_facet.join(",")
        ),
        Witness::LinkHomology {
            face,
            betti_dim,
            betti,
        } => format!(
            "link of {{{}}} has b_{} = {}",
            face.join(","),
            betti_dim,
            betti
        ),
        Witness::IntervalHomology {
            lo,
            hi,
            betti_dim,
            betti,
        } => {
            let end = |e: &Option<String>, bound: &str| {
                e.clone().unwrap_or_else(|| bound.to_owned())
            };
            format!(
                "open interval ({}, {}) has b_{} = {}",
                end(lo, "0̂"),
                end(hi, "1̂"),
                betti_dim,
                betti
            )
        }
        Witness::TopBettiNotOne {
            face,
            betti_dim,
            betti,
        } => format!(
            "link of {{{}}} has top b_{} = {}, expected 1",
            face.join(","),
            betti_dim,
            betti
        ),
        Witness::RankTooSmall { required, found } => {
            format!("rank {found} is below the required {required}")
        }
        Witness::DeletionBreaks { removed, cause } => format!(
            "deleting {{{}}}: {}",
            removed.join(","),
            describe_witness(cause)
        ),
        Witness::EmptyAfterDeletion { removed } => {
            format!("deleting {{{}}} leaves nothing", removed.join(","))
        }
        Witness::IntervalRemovalBreaks { lo, hi, cause } => format!(
            "removing the edges of [{lo}, {hi}]: {}",
            describe_witness(cause)
        ),
        Witness::NotGraded => "maximal chains of unequal length".to_owned(),
        Witness::RankChanged { expected, found } => {
            format!("rank changed from {expected} to {found}")
        }
        Witness::NotShellable => "no shelling order exists".to_owned(),
    }
}
