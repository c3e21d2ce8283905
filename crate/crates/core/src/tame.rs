//! Set-germ inclusions at the origin and the tameness conditions built on them.
//!
//! Every verdict is decided by a local dimension: the germ of `V(A)` lies in
//! `{0}` iff the local dimension of `A` at the origin is at most 0, and
//! `V(A) ⊆ V(B)` as germs iff, for each generator `b` of `B`, the closure of
//! `V(A) \ V(b)` misses the origin. Over the reals, ideals are first passed
//! through the sum-of-squares reduction of [`crate::germ::real_reduce`];
//! "holds" verdicts are then sound, while "fails" may be caused by complex
//! points the reduction could not remove.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::germ::{
    adapted_stratifications, milnor_set, real_local_dimension, real_reduce, realify, realify_stratification, Field, MapGerm, Stratification,
};
use crate::ideal::{Budget, Ideal};

const REAL_CAVEAT: &str = "real zero sets are decided by sum-of-squares reduction, which is incomplete; the failure may come from complex points only";
const REALIFIED_CAVEAT: &str = "Milnor sets of complex germs are computed on the realification x = x_re + i x_im";

fn realified(mut v: GermInclusionVerdict) -> GermInclusionVerdict {
    v.caveats.push(REALIFIED_CAVEAT.to_string());
    v
}

/// Evidence behind a germ verdict. Each variant names an ideal computation
/// that can be rerun.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Certificate {
    /// A local standard basis element with nonzero constant term.
    OriginExcluded { witness: String },
    /// Local dimension of the decisive ideal at the origin.
    LocalDim { dimension: i64 },
    /// The zero fibre itself is the origin, so the condition holds for any Milnor set.
    ZeroFibreIsOrigin { dimension: i64 },
    /// `Sing ∩ zero fibre ⊂ {0}`.
    SingularZeroFibre { dimension: i64 },
    /// One certificate per generator of the right-hand side.
    PerGenerator { checks: Vec<GeneratorCheck> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorCheck {
    pub generator: String,
    pub certificate: Certificate,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GermInclusionVerdict {
    pub holds: bool,
    pub lhs_ideal: String,
    pub rhs: String,
    pub certificate: Certificate,
    pub caveats: Vec<String>,
}

impl GermInclusionVerdict {
    /// Local dimension reported by the certificate (`-1` for an excluded
    /// origin); for per-generator certificates, the largest one.
    pub fn dimension(&self) -> i64 {
        cert_dimension(&self.certificate)
    }
}

fn cert_dimension(c: &Certificate) -> i64 {
    match c {
        Certificate::OriginExcluded { .. } => -1,
        Certificate::LocalDim { dimension } | Certificate::ZeroFibreIsOrigin { dimension } | Certificate::SingularZeroFibre { dimension } => *dimension,
        Certificate::PerGenerator { checks } => checks.iter().map(|c| cert_dimension(&c.certificate)).max().unwrap_or(-1),
    }
}

/// Local dimension at the origin, with a certificate.
fn local_certificate(a: &Ideal, field: Field, budget: &Budget) -> Result<(Certificate, Ideal)> {
    let (dim, decisive) = match field {
        Field::Complex => (a.local_dimension_at_origin(budget)?.dimension, a.clone()),
        Field::Real => {
            let (d, reduced) = real_local_dimension(a, budget)?;
            (d.dimension, reduced)
        }
    };
    if dim >= 0 {
        return Ok((Certificate::LocalDim { dimension: dim }, decisive));
    }
    let basis = decisive.standard_basis(budget)?;
    let witness = basis.elements.iter().find(|e| !num_traits::Zero::is_zero(&e.constant_term()));
    let witness = witness.map_or_else(|| "1".to_string(), |e| e.to_string());
    Ok((Certificate::OriginExcluded { witness }, decisive))
}

/// `V(A) ⊂ {0}` as germs at the origin.
pub fn germ_subset_of_origin(a: &Ideal, field: Field, budget: &Budget) -> Result<GermInclusionVerdict> {
    let (certificate, decisive) = local_certificate(a, field, budget)?;
    let holds = cert_dimension(&certificate) <= 0;
    Ok(GermInclusionVerdict {
        holds,
        lhs_ideal: decisive.to_string(),
        rhs: "{0}".into(),
        certificate,
        caveats: caveats(field, holds),
    })
}

/// `V(A) ⊆ V(B)` as germs at the origin.
pub fn germ_subset(a: &Ideal, b: &Ideal, field: Field, budget: &Budget) -> Result<GermInclusionVerdict> {
    subset_with_tolerance(a, b, field, -1, budget)
}

/// `V(A) ⊆ V(B) ∪ {0}` as germs at the origin.
pub fn germ_subset_away_from_origin(a: &Ideal, b: &Ideal, field: Field, budget: &Budget) -> Result<GermInclusionVerdict> {
    subset_with_tolerance(a, b, field, 0, budget)
}

fn subset_with_tolerance(a: &Ideal, b: &Ideal, field: Field, tolerance: i64, budget: &Budget) -> Result<GermInclusionVerdict> {
    a.ring().check_same(b.ring())?;
    let (a, b) = match field {
        Field::Complex => (a.clone(), b.clone()),
        // local reduction first: saturating an unreduced ideal keeps complex-only branches
        Field::Real => (real_local_dimension(a, budget)?.1, real_reduce(b, budget)?),
    };
    let mut checks = Vec::new();
    let mut holds = true;
    for g in b.generators() {
        let rest = a.saturate_by(g, budget)?;
        let (certificate, _) = local_certificate(&rest, field, budget)?;
        let ok = cert_dimension(&certificate) <= tolerance;
        checks.push(GeneratorCheck { generator: g.to_string(), certificate });
        if !ok {
            holds = false;
            break;
        }
    }
    let rhs = if tolerance < 0 { format!("V{b}") } else { format!("V{b} ∪ {{0}}") };
    Ok(GermInclusionVerdict {
        holds,
        lhs_ideal: a.to_string(),
        rhs,
        certificate: Certificate::PerGenerator { checks },
        caveats: caveats(field, holds),
    })
}

fn caveats(field: Field, holds: bool) -> Vec<String> {
    if field == Field::Real && !holds {
        vec![REAL_CAVEAT.to_string()]
    } else {
        Vec::new()
    }
}

/// `Sing F`, taken as everything when the target is larger than the source.
pub fn singular_ideal(f: &MapGerm) -> Result<Ideal> {
    if f.source_dim() < f.target_dim() {
        Ok(Ideal::zero(f.source()))
    } else {
        f.singular_locus_ideal()
    }
}

/// `closure(M \ V(I)) ∩ V(I)` for each piece of a Milnor set.
fn boundary_pieces(pieces: &[(String, Ideal)], zero: &Ideal, budget: &Budget) -> Result<Vec<(String, Ideal)>> {
    pieces
        .iter()
        .map(|(label, m)| Ok((label.clone(), m.saturate(zero, budget)?.sum(zero)?.reduced(budget)?)))
        .collect()
}

/// Worst verdict over pieces: the first failing one, or the last.
fn worst<I>(verdicts: I) -> Result<GermInclusionVerdict>
where
    I: IntoIterator<Item = Result<GermInclusionVerdict>>,
{
    let mut last = None;
    for v in verdicts {
        let v = v?;
        if !v.holds {
            return Ok(v);
        }
        last = Some(v);
    }
    last.ok_or_else(|| Error::Invalid("no pieces to check".into()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumSummary {
    pub label: String,
    pub dim: i64,
    pub rank: usize,
    pub closure: String,
}

pub fn summarize(s: &Stratification, map: &str) -> Vec<StratumSummary> {
    s.strata
        .iter()
        .map(|t| StratumSummary { label: t.label.clone(), dim: t.dim, rank: t.rank(map).unwrap_or(0), closure: t.closure.to_string() })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TamenessReport {
    pub map: String,
    pub strata: Vec<StratumSummary>,
    pub milnor_union_ideal: Option<String>,
    pub tame: GermInclusionVerdict,
}

/// Tameness of `g` with respect to `strat`. A zero fibre that is the origin,
/// or meets the singular locus only there, settles the question without the
/// Milnor set.
pub fn is_tame(g: &MapGerm, strat: &Stratification, field: Field, budget: &Budget) -> Result<TamenessReport> {
    let zero = g.zero_fibre_ideal();
    let strata = summarize(strat, g.label());
    let fibre = germ_subset_of_origin(&zero, field, budget)?;
    if fibre.holds {
        let tame = GermInclusionVerdict { certificate: Certificate::ZeroFibreIsOrigin { dimension: fibre.dimension() }, ..fibre };
        return Ok(TamenessReport { map: g.label().into(), strata, milnor_union_ideal: None, tame });
    }
    if remark_36_shortcut(g, field, budget)? {
        let sing = singular_ideal(g)?.sum(&zero)?;
        let v = germ_subset_of_origin(&sing, field, budget)?;
        let tame = GermInclusionVerdict { certificate: Certificate::SingularZeroFibre { dimension: v.dimension() }, ..v };
        return Ok(TamenessReport { map: g.label().into(), strata, milnor_union_ideal: None, tame });
    }
    if field == Field::Complex {
        let real = realify(g)?;
        let (union, tame) = milnor_tameness(&real, &realify_stratification(strat)?, Field::Real, budget)?;
        return Ok(TamenessReport { map: g.label().into(), strata, milnor_union_ideal: Some(union.to_string()), tame: realified(tame) });
    }
    let (union, tame) = milnor_tameness(g, strat, field, budget)?;
    Ok(TamenessReport { map: g.label().into(), strata, milnor_union_ideal: Some(union.to_string()), tame })
}

fn milnor_tameness(g: &MapGerm, strat: &Stratification, field: Field, budget: &Budget) -> Result<(Ideal, GermInclusionVerdict)> {
    let ms = milnor_set(g, strat, budget)?;
    let union = ms.union_ideal(budget)?;
    let pieces = boundary_pieces(&ms.per_stratum, &g.zero_fibre_ideal(), budget)?;
    let tame = worst(pieces.iter().map(|(_, t)| germ_subset_of_origin(t, field, budget)))?;
    Ok((union, tame))
}

/// `Sing F ∩ F^{-1}(0) ⊂ {0}`, which implies tameness.
pub fn remark_36_shortcut(f: &MapGerm, field: Field, budget: &Budget) -> Result<bool> {
    let a = singular_ideal(f)?.sum(&f.zero_fibre_ideal())?;
    Ok(germ_subset_of_origin(&a, field, budget)?.holds)
}

/// Outcome of the composition check for `H = G∘F` over adapted stratifications.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CompositionReport {
    pub composite: String,
    pub strata: Vec<StratumSummary>,
    /// `closure(M_W(H) \ H^{-1}(0)) ∩ H^{-1}(0) ⊂ F^{-1}(0)`.
    pub tamely_composable: GermInclusionVerdict,
    /// The same left-hand side `⊂ {0}`: tameness of `H` on the adapted strata.
    pub composite_tame: GermInclusionVerdict,
    pub caveats: Vec<String>,
    #[serde(skip)]
    boundary: Vec<(String, Ideal)>,
}

const WHITNEY_CAVEAT: &str = "Whitney regularity of the constructed stratifications is assumed, not certified";

/// Over the complexes the check runs on the realified pair; the verdict
/// ideals are then in the real coordinates.
pub fn is_tamely_composable(f: &MapGerm, g: &MapGerm, field: Field, budget: &Budget) -> Result<CompositionReport> {
    if field == Field::Complex {
        let mut report = is_tamely_composable(&realify(f)?, &realify(g)?, Field::Real, budget)?;
        report.composite = g.compose(f)?.relabel(report_label(&report)).to_string();
        report.tamely_composable = realified(report.tamely_composable);
        report.composite_tame = realified(report.composite_tame);
        report.caveats.push(REALIFIED_CAVEAT.into());
        return Ok(report);
    }
    let adapted = adapted_stratifications(f, g, field, budget)?;
    let h = &adapted.composite;
    let ms = milnor_set(h, &adapted.w, budget)?;
    let zero_h = h.zero_fibre_ideal();
    let zero_f = f.zero_fibre_ideal();
    let boundary = boundary_pieces(&ms.per_stratum, &zero_h, budget)?;
    let tamely_composable = worst(boundary.iter().map(|(_, a)| germ_subset(a, &zero_f, field, budget)))?;
    let composite_tame = worst(boundary.iter().map(|(_, a)| germ_subset_of_origin(a, field, budget)))?;
    Ok(CompositionReport {
        composite: h.to_string(),
        strata: summarize(&adapted.w, h.label()),
        tamely_composable,
        composite_tame,
        caveats: vec![WHITNEY_CAVEAT.into()],
        boundary,
    })
}

fn report_label(r: &CompositionReport) -> String {
    r.composite.split(" : ").next().unwrap_or("H").to_string()
}

/// Agreement between the three formulations of tame composability.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivalentForms {
    /// Left-hand side intersected with `Sing H`, `⊂ F^{-1}(0)`.
    pub with_singular_locus: GermInclusionVerdict,
    /// Image under `F` of the Milnor set of `H`, closure away from `G^{-1}(0)`, `⊂ {0}`.
    pub image_form: GermInclusionVerdict,
    /// The left-hand sides with and without `Sing H` agree off the origin.
    pub sides_agree: bool,
    pub agree: bool,
    pub caveats: Vec<String>,
}

pub fn check_equivalent_forms(
    f: &MapGerm,
    g: &MapGerm,
    report: &CompositionReport,
    field: Field,
    budget: &Budget,
) -> Result<EquivalentForms> {
    if field == Field::Complex {
        let mut forms = check_equivalent_forms(&realify(f)?, &realify(g)?, report, Field::Real, budget)?;
        forms.with_singular_locus = realified(forms.with_singular_locus);
        forms.image_form = realified(forms.image_form);
        return Ok(forms);
    }
    let h = g.compose(f)?;
    let sing_h = singular_ideal(&h)?;
    let zero_f = f.zero_fibre_ideal();
    let zero_g = g.zero_fibre_ideal();
    let mut with_sing = Vec::new();
    let mut sides_agree = true;
    for (_, a) in &report.boundary {
        let narrowed = a.sum(&sing_h)?;
        if sides_agree && !germ_subset_away_from_origin(a, &narrowed, field, budget)?.holds {
            sides_agree = false;
        }
        with_sing.push(narrowed);
    }
    let with_singular_locus = worst(with_sing.iter().map(|a| germ_subset(a, &zero_f, field, budget)))?;
    let mut images = Vec::new();
    // On a closed ball the image of the closure is the closure of the image, so
    // the image side is F applied to the boundary pieces. Real points are
    // isolated first; Zariski closures of real images are too coarse otherwise.
    for (_, b) in &report.boundary {
        let b = match field {
            Field::Real => real_local_dimension(b, budget)?.1,
            Field::Complex => b.clone(),
        };
        images.push(f.image_ideal(&b, budget)?.sum(&zero_g)?);
    }
    let image_form = worst(images.iter().map(|a| germ_subset_of_origin(a, field, budget)))?;
    let main = report.tamely_composable.holds;
    let agree = with_singular_locus.holds == main && image_form.holds == main;
    let mut caveats = Vec::new();
    if !sides_agree {
        caveats.push("left-hand sides with and without Sing H differ as computed ideals".to_string());
    }
    if !agree {
        caveats.push("equivalent forms disagree at the ideal level (scheme-theoretic or real-reduction effect)".to_string());
    }
    Ok(EquivalentForms { with_singular_locus, image_form, sides_agree, agree, caveats })
}

/// `(Disc F ∪ Sing G) ∩ G^{-1}(0) ⊂ {0}`.
pub fn corollary_condition(f: &MapGerm, g: &MapGerm, field: Field, budget: &Budget) -> Result<GermInclusionVerdict> {
    let disc = f.image_ideal(&singular_ideal(f)?, budget)?;
    let union = disc.intersection(&singular_ideal(g)?, budget)?;
    germ_subset_of_origin(&union.sum(&g.zero_fibre_ideal())?, field, budget)
}

/// `M ∩ F^{-1}(0) ⊆ Sing F ∪ {0}` as germs, for the Milnor set over `strat`.
pub fn milnor_inclusion(f: &MapGerm, strat: &Stratification, field: Field, budget: &Budget) -> Result<GermInclusionVerdict> {
    if field == Field::Complex {
        return Ok(realified(milnor_inclusion(&realify(f)?, &realify_stratification(strat)?, Field::Real, budget)?));
    }
    let zero = f.zero_fibre_ideal();
    let sing = singular_ideal(f)?.sum(&zero)?;
    let ms = milnor_set(f, strat, budget)?;
    worst(ms.per_stratum.iter().map(|(_, m)| {
        let lhs = m.sum(&zero)?;
        germ_subset_away_from_origin(&lhs, &sing, field, budget)
    }))
}
