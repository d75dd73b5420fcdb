//! Randomized and sweep-based counterexample searches for the open
//! questions, with replayable certificates and a run manifest.
//!
//! Absence of violations is reported as "no counterexample found in N
//! trials", never as a proof.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use edgewise::catalog;
use edgewise::cm::EdgewiseLevel;
use edgewise::homology::FieldSpec;
use edgewise::lattice::mobius_function;
use edgewise::poset::Poset;
use edgewise::sample::{random_graded_poset, CounterRng, SamplerParams};
use edgewise::Analyzer;

use crate::format::{Certificate, InstanceOutcome, Manifest, PosetDoc, Violation};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Question {
    MobiusNowhereZero,
    GeometricStrongEcm,
}

impl Question {
    pub fn parse(name: &str) -> Option<Question> {
        match name {
            "mobius-nowhere-zero" | "mobius_nowhere_zero" => Some(Question::MobiusNowhereZero),
            "geometric-strong-ecm" | "geometric_strongECM" => Some(Question::GeometricStrongEcm),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Question::MobiusNowhereZero => "mobius-nowhere-zero",
            Question::GeometricStrongEcm => "geometric-strong-ecm",
        }
    }
}

#[derive(Debug, Clone)]
pub struct SearchOptions {
    pub question: Question,
    pub seed: u64,
    pub trials: u64,
    pub max_elements: usize,
    pub field: FieldSpec,
    pub out_dir: PathBuf,
    pub argv: Vec<String>,
}

#[derive(Debug)]
pub struct SearchSummary {
    pub manifest: Manifest,
    pub certificate_paths: Vec<PathBuf>,
}

pub fn run_search(opts: &SearchOptions) -> io::Result<SearchSummary> {
    fs::create_dir_all(&opts.out_dir)?;
    let analyzer = Analyzer::new(opts.field.clone());
    let sampler = SamplerParams::desk(opts.max_elements);

    let mut generated = 0u64;
    let mut checked = 0u64;
    let mut certificates: Vec<Certificate> = Vec::new();
    let mut instances: Vec<InstanceOutcome> = Vec::new();

    match opts.question {
        Question::MobiusNowhereZero => {
            // Seeded random graded posets, filtered to the edgewise doubly
            // Cohen-Macaulay ones; check that the bounded extension has a
            // nowhere zero Möbius function.
            for trial in 0..opts.trials {
                let mut rng = CounterRng::stream(opts.seed, trial);
                let p = random_graded_poset(&mut rng, &sampler);
                generated += 1;
                let e2 = analyzer
                    .is_edgewise_k_cm(&p, EdgewiseLevel::K(2))
                    .expect("sampled posets are nonempty");
                if !e2.holds {
                    continue;
                }
                checked += 1;
                let hat = p.add_bounds();
                let (table, nowhere_zero) = mobius_function(&hat);
                if !nowhere_zero {
                    let (lo, hi) = table.zero_pairs()[0];
                    let as_end = |i: usize| {
                        if i < p.len() {
                            Some(hat.label(i).to_owned())
                        } else {
                            None
                        }
                    };
                    certificates.push(Certificate {
                        question: opts.question.name().to_owned(),
                        source: format!("trial-{trial}"),
                        field: opts.field.clone(),
                        poset: PosetDoc::from_poset(&format!("trial-{trial}"), &p),
                        violation: Violation::MobiusZero {
                            lo: as_end(lo),
                            hi: as_end(hi),
                        },
                    });
                }
            }
        }
        Question::GeometricStrongEcm => {
            // Sweep the catalog's geometric lattices (plus the sec5 face
            // lattice as a deliberately non-geometric control) through the
            // strong edgewise Cohen-Macaulay check.
            for (name, lattice) in geometric_sweep_instances() {
                let proper = lattice.proper_part().expect("catalog lattices are bounded");
                if proper.is_empty() || proper.len() > opts.max_elements {
                    continue;
                }
                generated += 1;
                checked += 1;
                let verdict = analyzer
                    .is_edgewise_k_cm(&proper, EdgewiseLevel::Strong)
                    .expect("nonempty");
                instances.push(InstanceOutcome {
                    name: name.clone(),
                    elements: proper.len(),
                    holds: verdict.holds,
                });
                if !verdict.holds {
                    certificates.push(Certificate {
                        question: opts.question.name().to_owned(),
                        source: name.clone(),
                        field: opts.field.clone(),
                        poset: PosetDoc::from_poset(&name, &proper),
                        violation: Violation::PropertyFailure { verdict },
                    });
                }
            }
        }
    }

    let mut certificate_paths = Vec::new();
    for (i, cert) in certificates.iter().enumerate() {
        let path = opts.out_dir.join(format!("cert_{i:03}.json"));
        fs::write(&path, cert.to_json())?;
        certificate_paths.push(path);
    }

    let manifest = Manifest {
        command: opts.argv.clone(),
        question: opts.question.name().to_owned(),
        seed: opts.seed,
        trials: opts.trials,
        max_elements: opts.max_elements,
        field: opts.field.clone(),
        sampler,
        generated,
        checked,
        violations: certificates.len() as u64,
        instances,
        version: env!("CARGO_PKG_VERSION").to_owned(),
    };
    fs::write(opts.out_dir.join("manifest.json"), manifest.to_json())?;
    Ok(SearchSummary {
        manifest,
        certificate_paths,
    })
}

/// The lattices swept by the geometric question: Boolean and partition
/// lattices, plus the sec5 face lattice as a non-geometric control known
/// to fail.
pub fn geometric_sweep_instances() -> Vec<(String, Poset)> {
    let mut out: Vec<(String, Poset)> = Vec::new();
    for n in 2..=4 {
        out.push((format!("boolean({n})"), catalog::boolean(n)));
    }
    for n in 3..=4 {
        out.push((format!("partition({n})"), catalog::partition(n)));
    }
    out.push(("sec5-lattice".to_owned(), catalog::sec5_lattice()));
    out
}

/// Summarize a finished run for the console.
pub fn render_summary(summary: &SearchSummary) -> String {
    let m = &summary.manifest;
    let mut out = String::new();
    out.push_str(&format!(
        "question {}: {} generated, {} checked, {} violation(s)\n",
        m.question, m.generated, m.checked, m.violations
    ));
    for inst in &m.instances {
        out.push_str(&format!(
            "  {} ({} elements): {}\n",
            inst.name,
            inst.elements,
            if inst.holds { "holds" } else { "VIOLATION" }
        ));
    }
    if m.violations == 0 {
        out.push_str(&format!(
            "no counterexample found in {} trial(s); this is not a proof\n",
            m.checked
        ));
    } else {
        out.push_str("violation certificates written next to manifest.json\n");
    }
    out
}

/// Load every certificate in a findings directory, in file order.
pub fn load_certificates(dir: &Path) -> io::Result<Vec<(PathBuf, Certificate)>> {
    let mut paths: Vec<PathBuf> = fs::read_dir(dir)?
        .filter_map(|e| e.ok())
        .map(|e| e.path())
        .filter(|p| {
            p.file_name()
                .and_then(|n| n.to_str())
                .is_some_and(|n| n.starts_with("cert_") && n.ends_with(".json"))
        })
        .collect();
    paths.sort();
    let mut out = Vec::new();
    for path in paths {
        let text = fs::read_to_string(&path)?;
        let cert = crate::format::parse_certificate(&text)
            .map_err(|e| io::Error::new(io::ErrorKind::InvalidData, e.to_string()))?;
        out.push((path, cert));
    }
    Ok(out)
}
