//! On-disk document formats: poset documents, violation certificates, and
//! search-run manifests. Everything is UTF-8 JSON with a fixed field order,
//! so identical inputs serialize byte-identically.

use std::fmt;

use serde::{Deserialize, Serialize};

use edgewise::cm::{CmVerdict, EdgewiseLevel};
use edgewise::homology::FieldSpec;
use edgewise::lattice::mobius_function;
use edgewise::poset::Poset;
use edgewise::sample::SamplerParams;
use edgewise::Analyzer;

#[derive(Debug)]
pub enum FormatError {
    Json(String),
    Poset(String),
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormatError::Json(msg) => write!(f, "malformed document: {msg}"),
            FormatError::Poset(msg) => write!(f, "invalid poset: {msg}"),
        }
    }
}

impl std::error::Error for FormatError {}

/// The poset document: a name, the element labels, and the cover pairs.
/// The covers must form a Hasse diagram or parsing rejects the document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetDoc {
    pub name: String,
    pub elements: Vec<String>,
    pub covers: Vec<(String, String)>,
}

impl PosetDoc {
    pub fn from_poset(name: &str, p: &Poset) -> PosetDoc {
        PosetDoc {
            name: name.to_owned(),
            elements: p.labels().to_vec(),
            covers: p
                .covers()
                .iter()
                .map(|&(a, b)| (p.label(a).to_owned(), p.label(b).to_owned()))
                .collect(),
        }
    }

    pub fn to_poset(&self) -> Result<Poset, FormatError> {
        let covers: Vec<(&str, &str)> = self
            .covers
            .iter()
            .map(|(a, b)| (a.as_str(), b.as_str()))
            .collect();
        let labels: Vec<&str> = self.elements.iter().map(|s| s.as_str()).collect();
        Poset::new(&labels, &covers).map_err(|e| FormatError::Poset(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }
}

/// Parse and validate a poset document.
pub fn parse_poset_doc(text: &str) -> Result<(PosetDoc, Poset), FormatError> {
    let doc: PosetDoc =
        serde_json::from_str(text).map_err(|e| FormatError::Json(e.to_string()))?;
    let poset = doc.to_poset()?;
    Ok((doc, poset))
}

/// 64-bit FNV-1a, used as the stable input fingerprint in reports.
pub fn fingerprint(text: &str) -> String {
    let mut hash: u64 = 0xcbf2_9ce4_8422_2325;
    for byte in text.as_bytes() {
        hash ^= u64::from(*byte);
        hash = hash.wrapping_mul(0x100_0000_01b3);
    }
    format!("{hash:016x}")
}

/// What a persisted counterexample certificate claims.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Violation {
    /// μ(lo, hi) = 0 in the bounded extension of the poset; `None`
    /// endpoints are the artificial bounds.
    MobiusZero {
        lo: Option<String>,
        hi: Option<String>,
    },
    /// A property check failed with this exact verdict.
    PropertyFailure { verdict: CmVerdict },
}

/// A replayable counterexample: the poset, the field, and the violation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Certificate {
    pub question: String,
    /// Trial index for randomized searches, instance name for sweeps.
    pub source: String,
    pub field: FieldSpec,
    pub poset: PosetDoc,
    pub violation: Violation,
}

impl Certificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }
}

pub fn parse_certificate(text: &str) -> Result<Certificate, FormatError> {
    serde_json::from_str(text).map_err(|e| FormatError::Json(e.to_string()))
}

/// Re-run a certificate through the library; true when the recorded
/// violation still holds exactly.
pub fn replay_certificate(cert: &Certificate) -> Result<bool, FormatError> {
    let poset = cert.poset.to_poset()?;
    match &cert.violation {
        Violation::MobiusZero { lo, hi } => {
            let hat = poset.add_bounds();
            let (bot, top) = poset.bound_indices();
            let resolve = |end: &Option<String>, fallback: usize| match end {
                Some(label) => hat.index_of(label),
                None => Some(fallback),
            };
            let (Some(lo_i), Some(hi_i)) = (resolve(lo, bot), resolve(hi, top)) else {
                return Ok(false);
            };
            let (table, _) = mobius_function(&hat);
            Ok(table.is_zero_at(lo_i, hi_i) == Some(true))
        }
        Violation::PropertyFailure { verdict } => {
            let analyzer = Analyzer::new(cert.field.clone());
            let recomputed =
                run_property(&analyzer, &poset, &verdict.property).map_err(FormatError::Poset)?;
            Ok(&recomputed == verdict)
        }
    }
}

/// Run a property by its report name.
pub fn run_property(
    analyzer: &Analyzer,
    poset: &Poset,
    property: &str,
) -> Result<CmVerdict, String> {
    let level = if property == "edgewise-strong-cm" {
        Some(EdgewiseLevel::Strong)
    } else if let Some(k) = property
        .strip_prefix("edgewise-")
        .and_then(|s| s.strip_suffix("-cm"))
        .and_then(|s| s.parse::<u32>().ok())
    {
        Some(EdgewiseLevel::K(k))
    } else {
        None
    };
    if let Some(level) = level {
        return analyzer
            .is_edgewise_k_cm(poset, level)
            .map_err(|e| e.to_string());
    }
    if property == "cm" {
        return analyzer
            .is_cm(poset, edgewise::Route::Both)
            .map_err(|e| e.to_string());
    }
    if property == "gorenstein*" {
        return analyzer.is_gorenstein_star(poset).map_err(|e| e.to_string());
    }
    if let Some(k) = property
        .strip_suffix("-cm")
        .and_then(|s| s.parse::<u32>().ok())
    {
        return analyzer.is_k_cm(poset, k).map_err(|e| e.to_string());
    }
    Err(format!("unknown property {property:?}"))
}

/// Manifest describing a search run; byte-identical for identical inputs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Manifest {
    pub command: Vec<String>,
    pub question: String,
    pub seed: u64,
    pub trials: u64,
    pub max_elements: usize,
    pub field: FieldSpec,
    pub sampler: SamplerParams,
    pub generated: u64,
    pub checked: u64,
    pub violations: u64,
    pub instances: Vec<InstanceOutcome>,
    pub version: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceOutcome {
    pub name: String,
    pub elements: usize,
    pub holds: bool,
}

impl Manifest {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("manifest serializes")
    }
}
