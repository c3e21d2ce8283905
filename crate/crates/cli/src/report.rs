//! The JSON report written by every subcommand.
//!
//! Reports hold no timings or absolute paths, so the same input, flags and
//! seed always serialize to the same bytes.

use germforge::fiber::FiberReport;
use germforge::germ::Field;
use germforge::ideal::Limits;
use germforge::tame::{EquivalentForms, GermInclusionVerdict, StratumSummary, TamenessReport};
use serde::{Deserialize, Serialize};

/// Stable verdict keys.
pub mod labels {
    pub const MILNOR_INCLUSION: &str = "eq-2.1";
    pub const TAME: &str = "eq-2.2";
    pub const TAMELY_COMPOSABLE: &str = "eq-3.1";
    pub const WITH_SINGULAR_LOCUS: &str = "eq-3.2";
    pub const IMAGE_FORM: &str = "eq-3.3";
    pub const COROLLARY: &str = "eq-3.9";
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapEcho {
    pub name: String,
    pub source: Vec<String>,
    pub target_dim: usize,
    pub components: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputEcho {
    pub file: String,
    pub field: Field,
    pub assert_locally_open: bool,
    pub maps: Vec<MapEcho>,
}

/// One checked condition. `subject` names the map (or pair) it is about.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictEntry {
    pub label: String,
    pub subject: String,
    pub verdict: GermInclusionVerdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapAnalysis {
    pub map: String,
    pub strata: Vec<StratumSummary>,
    pub singular_locus: String,
    pub discriminant: String,
    pub milnor_union_ideal: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompositionSummary {
    pub composite: String,
    pub strata: Vec<StratumSummary>,
    pub caveats: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisDump {
    pub vars: Vec<String>,
    pub order: String,
    pub generators: Vec<String>,
    pub basis: Vec<String>,
    pub leading_monomials: Vec<String>,
    pub dimension: i64,
    pub colength: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Resources {
    pub limits: Limits,
    pub pairs: u64,
    pub bases: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GermReport {
    pub command: String,
    pub seed: u64,
    pub input: Option<InputEcho>,
    pub verdicts: Vec<VerdictEntry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub analyses: Vec<MapAnalysis>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub tameness: Vec<TamenessReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub composition: Option<CompositionSummary>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub equivalent_forms: Option<EquivalentForms>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fiber: Option<FiberReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<BasisDump>,
    pub caveats: Vec<String>,
    pub resources: Resources,
}

impl GermReport {
    pub fn new(command: impl Into<String>, seed: u64, limits: Limits) -> Self {
        GermReport {
            command: command.into(),
            seed,
            input: None,
            verdicts: Vec::new(),
            analyses: Vec::new(),
            tameness: Vec::new(),
            composition: None,
            equivalent_forms: None,
            fiber: None,
            basis: None,
            caveats: Vec::new(),
            resources: Resources { limits, pairs: 0, bases: 0 },
        }
    }

    pub fn push(&mut self, label: &str, subject: &str, verdict: GermInclusionVerdict) {
        for c in &verdict.caveats {
            if !self.caveats.contains(c) {
                self.caveats.push(c.clone());
            }
        }
        self.verdicts.push(VerdictEntry { label: label.into(), subject: subject.into(), verdict });
    }

    pub fn note(&mut self, caveat: impl Into<String>) {
        let c = caveat.into();
        if !self.caveats.contains(&c) {
            self.caveats.push(c);
        }
    }

    pub fn verdict(&self, label: &str, subject: &str) -> Option<&GermInclusionVerdict> {
        self.verdicts.iter().find(|v| v.label == label && v.subject == subject).map(|v| &v.verdict)
    }

    pub fn all_hold(&self) -> bool {
        self.verdicts.iter().all(|v| v.verdict.holds)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports contain only strings, numbers and booleans")
    }

    /// Plain-text summary for the terminal.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        if let Some(input) = &self.input {
            out.push_str(&format!("{} ({} field)\n", input.file, input.field));
        }
        for a in &self.analyses {
            out.push_str(&format!("map {}: {} strata\n", a.map, a.strata.len()));
            for s in &a.strata {
                out.push_str(&format!("  {:<5} dim {:>2}  rank {}  {}\n", s.label, s.dim, s.rank, s.closure));
            }
            out.push_str(&format!("  singular locus {}\n  discriminant   {}\n  Milnor set     {}\n", a.singular_locus, a.discriminant, a.milnor_union_ideal));
        }
        if let Some(c) = &self.composition {
            out.push_str(&format!("composite {} ({} adapted strata)\n", c.composite, c.strata.len()));
        }
        for v in &self.verdicts {
            let word = if v.verdict.holds { "HOLDS" } else { "FAILS" };
            out.push_str(&format!("{:<7} {:<6} {:<5} {} ⊆ {}\n", v.label, v.subject, word, v.verdict.lhs_ideal, v.verdict.rhs));
        }
        if let Some(f) = &self.fiber {
            out.push_str(&format!(
                "mu_G = {}, mu_ICIS = {}, N = {}\nchi(Fib F) = {}, chi(Fib G) = {}, chi(Fib H) = {}\n",
                f.mu_g, f.mu_icis, f.n_cells, f.chi_fib_f, f.chi_fib_g, f.chi_fib_h
            ));
            for p in &f.pieces {
                out.push_str(&format!("  piece on {:<5} dim {:>2}{}\n", p.stratum, p.dim, if p.smooth { "  smooth" } else { "" }));
            }
            for n in &f.notes {
                out.push_str(&format!("note: {n}\n"));
            }
        }
        if let Some(b) = &self.basis {
            out.push_str(&format!("basis over ({}) in {}\n", b.vars.join(", "), b.order));
            for g in &b.basis {
                out.push_str(&format!("  {g}\n"));
            }
            let colength = b.colength.map_or("infinite".to_string(), |c| c.to_string());
            out.push_str(&format!("dimension {}, colength {}\n", b.dimension, colength));
        }
        for c in &self.caveats {
            out.push_str(&format!("caveat: {c}\n"));
        }
        out.push_str(&format!("{} S-pairs, {} bases\n", self.resources.pairs, self.resources.bases));
        out
    }
}
