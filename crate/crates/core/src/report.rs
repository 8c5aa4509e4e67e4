//! JSON report schemas emitted by the library and the CLI. All indices
//! and word letters are 1-based; ordering follows the deterministic rules
//! of the producing modules, so output bytes are stable for a fixed
//! input.

use serde::{Deserialize, Serialize};

use crate::census::{PropertyReport, SolutionCensus};
use crate::document::SolutionDocument;
use crate::error::Result;
use crate::folding::FoldingReport;
use crate::garside::DivisorLattice;
use crate::mask::{self, Mask};
use crate::parabolic;
use crate::solution::SolutionTable;

fn subset_json(m: Mask) -> Vec<usize> {
    mask::elements(m).iter().map(|i| i + 1).collect()
}

/// Axiom booleans printed by `ybx check`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckReport {
    pub nondegenerate: bool,
    pub involutive: bool,
    pub braided: bool,
    pub symmetric: bool,
    pub qybe: bool,
    pub unitary: bool,
}

impl CheckReport {
    pub fn of(s: &SolutionTable) -> Self {
        let q = s.check_qybe();
        CheckReport {
            nondegenerate: s.is_nondegenerate(),
            involutive: s.is_involutive(),
            braided: s.is_braided(),
            symmetric: s.is_symmetric(),
            qybe: q.qybe,
            unitary: q.unitary,
        }
    }

    pub fn render_text(&self) -> String {
        format!(
            "nondegenerate: {}\ninvolutive:    {}\nbraided:       {}\nsymmetric:     {}\nqybe:          {}\nunitary:       {}",
            self.nondegenerate, self.involutive, self.braided, self.symmetric, self.qybe, self.unitary
        )
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ParabolicEntry {
    pub support: Vec<usize>,
    pub delta_word: Vec<usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DeltaClassFlags {
    pub product_ok: bool,
    pub commute_ok: bool,
    pub gcd_trivial_ok: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DeltaClassesEntry {
    pub classes: Vec<Vec<usize>>,
    pub flags: DeltaClassFlags,
}

/// Full analysis of one solution.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub invariant_subsets: Vec<Vec<usize>>,
    pub parabolics: Vec<ParabolicEntry>,
    pub decomposable: bool,
    pub delta_pure: bool,
    pub delta_classes: DeltaClassesEntry,
}

impl AnalysisReport {
    pub fn of(s: &SolutionTable, lat: &DivisorLattice) -> Result<Self> {
        let invariant_subsets = s
            .invariant_subsets()?
            .into_iter()
            .map(subset_json)
            .collect();
        let parabolics = parabolic::standard_parabolics(lat)?
            .into_iter()
            .map(|d| ParabolicEntry {
                support: subset_json(d.support),
                delta_word: lat.simple(d.delta).word().to_one_based(),
            })
            .collect();
        let classes = parabolic::delta_classes(s, lat)?;
        Ok(AnalysisReport {
            invariant_subsets,
            parabolics,
            decomposable: parabolic::is_decomposable(s)?,
            delta_pure: parabolic::is_delta_pure(s, lat)?,
            delta_classes: DeltaClassesEntry {
                classes: classes.classes.iter().map(|&c| subset_json(c)).collect(),
                flags: DeltaClassFlags {
                    product_ok: classes.product_ok,
                    commute_ok: classes.commute_ok,
                    gcd_trivial_ok: classes.gcd_trivial_ok,
                },
            },
        })
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str("invariant subsets:\n");
        for s in &self.invariant_subsets {
            out.push_str(&format!("  {}\n", fmt_set(s)));
        }
        out.push_str("standard parabolic supports:\n");
        for p in &self.parabolics {
            out.push_str(&format!(
                "  {}  (delta = {})\n",
                fmt_set(&p.support),
                fmt_word(&p.delta_word)
            ));
        }
        out.push_str(&format!("decomposable: {}\n", self.decomposable));
        out.push_str(&format!("delta-pure:   {}\n", self.delta_pure));
        out.push_str("delta classes:\n");
        for c in &self.delta_classes.classes {
            out.push_str(&format!("  {}\n", fmt_set(c)));
        }
        let f = &self.delta_classes.flags;
        out.push_str(&format!(
            "delta-class flags: product={} commute={} gcd_trivial={}",
            f.product_ok, f.commute_ok, f.gcd_trivial_ok
        ));
        out
    }
}

/// One divisor of `Δ` in the lattice dump.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LatticeEntry {
    pub x_ell: Vec<usize>,
    pub x_r: Vec<usize>,
    pub word: Vec<usize>,
    pub balanced: bool,
}

/// Dump of the divisor lattice, ordered by size then lexicographically
/// on `x_ell`.
pub fn lattice_dump(lat: &DivisorLattice) -> Vec<LatticeEntry> {
    let mut ids: Vec<Mask> = (0..lat.simple_count() as Mask).collect();
    ids.sort_by(|&a, &b| mask::cmp_size_lex(a, b));
    ids.into_iter()
        .map(|id| {
            let s = lat.simple(id);
            LatticeEntry {
                x_ell: subset_json(s.x_ell()),
                x_r: subset_json(s.x_r()),
                word: s.word().to_one_based(),
                balanced: s.is_balanced(),
            }
        })
        .collect()
}

/// A folding in report form.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FoldingEntry {
    pub partition: Vec<Vec<usize>>,
    pub deltas: Vec<Vec<usize>>,
    pub induced: SolutionDocument,
    pub strong: bool,
}

impl FoldingEntry {
    pub fn of(lat: &DivisorLattice, rep: &FoldingReport) -> Self {
        FoldingEntry {
            partition: rep.partition.iter().map(|&b| subset_json(b)).collect(),
            deltas: rep
                .block_deltas
                .iter()
                .map(|&d| lat.simple(d).word().to_one_based())
                .collect(),
            induced: SolutionDocument::from_table(&rep.induced),
            strong: rep.strong,
        }
    }

    pub fn render_text(&self) -> String {
        let blocks = self
            .partition
            .iter()
            .map(|b| fmt_set(b))
            .collect::<Vec<_>>()
            .join(" | ");
        let deltas = self
            .deltas
            .iter()
            .map(|w| fmt_word(w))
            .collect::<Vec<_>>()
            .join(", ");
        format!(
            "partition {}  deltas [{}]  strong={}",
            blocks, deltas, self.strong
        )
    }
}

/// Trailing summary record of a census file.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CensusSummary {
    pub n: usize,
    pub raw_count: usize,
    pub iso_count: usize,
}

/// Census as JSON lines: one canonical solution document per line, then
/// the summary record.
pub fn census_jsonl(census: &SolutionCensus) -> String {
    let mut out = String::new();
    for class in &census.classes {
        out.push_str(&SolutionDocument::from_table(class).to_json());
        out.push('\n');
    }
    let summary = CensusSummary {
        n: census.n,
        raw_count: census.raw_count,
        iso_count: census.iso_count,
    };
    out.push_str(&serde_json::to_string(&summary).expect("summary serializes"));
    out.push('\n');
    out
}

/// Verdict list of the property suite.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PropertyEntry {
    pub name: String,
    pub passed: bool,
    pub advisory: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

pub fn property_entries(rep: &PropertyReport) -> Vec<PropertyEntry> {
    rep.checks
        .iter()
        .map(|c| PropertyEntry {
            name: c.name.to_string(),
            passed: c.passed,
            advisory: c.advisory,
            witness: c.witness.clone(),
        })
        .collect()
}

/// `{1,2,3}` rendering of a 1-based subset.
pub fn fmt_set(xs: &[usize]) -> String {
    format!(
        "{{{}}}",
        xs.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",")
    )
}

/// `x1 x2` rendering of a 1-based word; the empty word prints as `1`.
pub fn fmt_word(w: &[usize]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    w.iter()
        .map(|a| format!("x{a}"))
        .collect::<Vec<_>>()
        .join(" ")
}
