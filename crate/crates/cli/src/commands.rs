use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use germforge::fiber::{nemethi_report, FiberOptions};
use germforge::germ::{milnor_set, rank_stratification, realify, realify_stratification, Field, MapGerm, Stratification};
use germforge::ideal::{Budget, Ideal, Limits};
use germforge::poly::{parse_expr, MonomialOrder, Polynomial, Rational, Ring};
use germforge::syntax::{tokenize, Cursor, Tok};
use germforge::tame::{check_equivalent_forms, corollary_condition, is_tame, is_tamely_composable, milnor_inclusion, singular_ideal};

use crate::germfile::{parse_germ_file, GermFile, LOCALLY_OPEN};
use crate::report::{labels, BasisDump, CompositionSummary, GermReport, InputEcho, MapAnalysis, MapEcho};

/// Settings shared by all subcommands.
#[derive(Debug, Clone, Default)]
pub struct Options {
    pub strict: bool,
    pub seed: u64,
    pub limits: Limits,
    pub assert_locally_open: bool,
}

#[derive(Debug, Clone)]
pub enum Command {
    Analyze { file: PathBuf },
    TameCheck { file: PathBuf, map: String },
    ComposeCheck { file: PathBuf, inner: String, outer: String },
    FiberReport { file: PathBuf, inner: String, outer: String },
    Gb { ideal: String, vars: Option<Vec<String>>, order: String },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Analyze { .. } => "analyze",
            Command::TameCheck { .. } => "tame-check",
            Command::ComposeCheck { .. } => "compose-check",
            Command::FiberReport { .. } => "fiber-report",
            Command::Gb { .. } => "gb",
        }
    }
}

/// Subject label for verdicts about a pair.
pub fn pair_subject(inner: &str, outer: &str) -> String {
    format!("{outer}∘{inner}")
}

pub fn run(cmd: &Command, opts: &Options) -> anyhow::Result<GermReport> {
    let budget = Budget::new(opts.limits);
    let mut report = GermReport::new(cmd.name(), opts.seed, opts.limits);
    match cmd {
        Command::Analyze { file } => {
            let germs = load(file, &mut report)?;
            for def in germs.maps() {
                analyze_map(&germs, &def.name, &mut report, &budget)?;
            }
        }
        Command::TameCheck { file, map } => {
            let germs = load(file, &mut report)?;
            tame_check(&germs, map, &mut report, &budget)?;
        }
        Command::ComposeCheck { file, inner, outer } => {
            let germs = load(file, &mut report)?;
            compose_check(&germs, inner, outer, &mut report, &budget)?;
        }
        Command::FiberReport { file, inner, outer } => {
            let germs = load(file, &mut report)?;
            let (f, g) = pair(&germs, inner, outer)?;
            let locally_open = opts.assert_locally_open || germs.has_flag(LOCALLY_OPEN);
            let fiber = nemethi_report(&f, &g, FiberOptions { seed: opts.seed, locally_open, field: germs.field() }, &budget)?;
            report.fiber = Some(fiber);
        }
        Command::Gb { ideal, vars, order } => {
            report.basis = Some(basis_dump(ideal, vars.as_deref(), order, &budget)?);
        }
    }
    report.resources.pairs = budget.pairs_used();
    report.resources.bases = budget.bases_computed();
    Ok(report)
}

/// Process exit status for a finished run.
pub fn exit_code(report: &GermReport, opts: &Options) -> i32 {
    if opts.strict && !report.all_hold() {
        1
    } else {
        0
    }
}

fn load(path: &Path, report: &mut GermReport) -> anyhow::Result<GermFile> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let germs = parse_germ_file(&text).with_context(|| format!("parsing {}", path.display()))?;
    report.input = Some(InputEcho {
        file: path.display().to_string(),
        field: germs.field(),
        assert_locally_open: germs.has_flag(LOCALLY_OPEN),
        maps: germs
            .maps()
            .map(|m| MapEcho {
                name: m.name.clone(),
                source: m.source.vars().to_vec(),
                target_dim: m.components.len(),
                components: m.components.iter().map(|c| c.to_string()).collect(),
            })
            .collect(),
    });
    Ok(germs)
}

fn stratification(germs: &GermFile, f: &MapGerm, field: Field, budget: &Budget) -> anyhow::Result<Stratification> {
    match germs.strata(f.label(), budget)? {
        Some(s) => Ok(s),
        None => Ok(rank_stratification(f, field, budget)?),
    }
}

fn analyze_map(germs: &GermFile, name: &str, report: &mut GermReport, budget: &Budget) -> anyhow::Result<()> {
    let field = germs.field();
    let f = germs.germ(name)?;
    let strat = stratification(germs, &f, field, budget)?;
    let singular = singular_ideal(&f)?.reduced(budget)?;
    let discriminant = f.image_ideal(&singular, budget)?.reduced(budget)?;
    let milnor = match field {
        Field::Real => milnor_set(&f, &strat, budget)?,
        Field::Complex => milnor_set(&realify(&f)?, &realify_stratification(&strat)?, budget)?,
    };
    let milnor = milnor.union_ideal(budget)?.reduced(budget)?;
    report.analyses.push(MapAnalysis {
        map: name.into(),
        strata: germforge::tame::summarize(&strat, name),
        singular_locus: singular.to_string(),
        discriminant: discriminant.to_string(),
        milnor_union_ideal: milnor.to_string(),
    });
    report.push(labels::MILNOR_INCLUSION, name, milnor_inclusion(&f, &strat, field, budget)?);
    let tame = is_tame(&f, &strat, field, budget)?;
    report.push(labels::TAME, name, tame.tame.clone());
    report.tameness.push(tame);
    Ok(())
}

fn tame_check(germs: &GermFile, name: &str, report: &mut GermReport, budget: &Budget) -> anyhow::Result<()> {
    let field = germs.field();
    let f = germs.germ(name)?;
    let strat = stratification(germs, &f, field, budget)?;
    let tame = is_tame(&f, &strat, field, budget)?;
    report.push(labels::TAME, name, tame.tame.clone());
    report.tameness.push(tame);
    Ok(())
}

fn pair(germs: &GermFile, inner: &str, outer: &str) -> anyhow::Result<(MapGerm, MapGerm)> {
    let g = germs.germ(outer)?;
    let f = germs.germ(inner)?;
    if f.target_dim() != g.source_dim() {
        bail!("`{inner}` has {} components but `{outer}` takes {} variables", f.target_dim(), g.source_dim());
    }
    let f = f.retarget(g.source())?;
    Ok((f, g))
}

fn compose_check(germs: &GermFile, inner: &str, outer: &str, report: &mut GermReport, budget: &Budget) -> anyhow::Result<()> {
    let field = germs.field();
    let (f, g) = pair(germs, inner, outer)?;
    let subject = pair_subject(inner, outer);
    for map in [&f, &g] {
        let strat = stratification(germs, map, field, budget)?;
        let tame = is_tame(map, &strat, field, budget)?;
        report.push(labels::TAME, map.label(), tame.tame.clone());
        report.tameness.push(tame);
    }
    let comp = is_tamely_composable(&f, &g, field, budget)?;
    report.push(labels::TAMELY_COMPOSABLE, &subject, comp.tamely_composable.clone());
    let forms = check_equivalent_forms(&f, &g, &comp, field, budget)?;
    report.push(labels::WITH_SINGULAR_LOCUS, &subject, forms.with_singular_locus.clone());
    report.push(labels::IMAGE_FORM, &subject, forms.image_form.clone());
    for c in &forms.caveats {
        report.note(c.clone());
    }
    report.push(labels::COROLLARY, &subject, corollary_condition(&f, &g, field, budget)?);
    report.push(labels::TAME, &subject, comp.composite_tame.clone());
    for c in &comp.caveats {
        report.note(c.clone());
    }
    report.composition = Some(CompositionSummary { composite: comp.composite.clone(), strata: comp.strata.clone(), caveats: comp.caveats.clone() });
    report.equivalent_forms = Some(forms);
    Ok(())
}

fn parse_order(name: &str) -> anyhow::Result<MonomialOrder> {
    Ok(match name {
        "degrevlex" => MonomialOrder::degrevlex(),
        "lex" => MonomialOrder::lex(),
        "local" => MonomialOrder::local(),
        other => bail!("unknown monomial order `{other}` (expected degrevlex, lex or local)"),
    })
}

/// Polynomials separated by commas, optionally wrapped in brackets.
fn parse_generators(text: &str, ring: &Ring) -> anyhow::Result<Vec<Polynomial>> {
    let toks = tokenize(text)?;
    let mut cur = Cursor::new(&toks);
    let bracketed = cur.eat_sym('[');
    let mut out = Vec::new();
    loop {
        out.push(parse_expr(&mut cur, ring)?);
        if !cur.eat_sym(',') {
            break;
        }
    }
    if bracketed {
        cur.expect_sym(']')?;
    }
    if !cur.at_eof() {
        return Err(cur.error(format!("unexpected {}", cur.peek())).into());
    }
    Ok(out)
}

fn identifiers(text: &str) -> anyhow::Result<Vec<String>> {
    let mut names: Vec<String> = Vec::new();
    for t in tokenize(text)? {
        if let Tok::Ident(s) = t.tok {
            if !names.contains(&s) {
                names.push(s);
            }
        }
    }
    Ok(names)
}

fn basis_dump(text: &str, vars: Option<&[String]>, order: &str, budget: &Budget) -> anyhow::Result<BasisDump> {
    let vars = match vars {
        Some(v) => v.to_vec(),
        None => identifiers(text)?,
    };
    if vars.is_empty() {
        bail!("no variables: pass --vars or use at least one variable");
    }
    let order = parse_order(order)?;
    let local = !order.is_global();
    let ring = Ring::new(vars.clone(), if local { MonomialOrder::degrevlex() } else { order.clone() });
    let gens = parse_generators(text, &ring)?;
    let ideal = Ideal::new(&ring, gens.clone())?;
    let basis = if local { ideal.standard_basis(budget)? } else { ideal.groebner(budget)? };
    let (dimension, colength) = if local {
        (ideal.local_dimension_at_origin(budget)?.dimension, ideal.colength(budget)?)
    } else {
        (ideal.dimension(budget)?.dimension, ideal.global_colength(budget)?)
    };
    Ok(BasisDump {
        vars,
        order: order.to_string(),
        generators: gens.iter().map(|g| g.to_string()).collect(),
        basis: basis.elements.iter().map(|g| g.to_string()).collect(),
        leading_monomials: basis
            .leading_monomials()
            .into_iter()
            .map(|m| Polynomial::monomial(&ring, m, Rational::from_integer(1.into())).to_string())
            .collect(),
        dimension,
        colength,
    })
}

/// Applies `key=value` overrides such as `max-pairs=5000,max-degree=40`.
pub fn apply_limit_overrides(base: Limits, spec: &str) -> anyhow::Result<Limits> {
    let mut limits = base;
    for item in spec.split([',', ' ']).filter(|s| !s.is_empty()) {
        let (key, value) = item.split_once('=').with_context(|| format!("expected key=value, found `{item}`"))?;
        let key = key.trim().trim_start_matches("--").replace('_', "-");
        let value = value.trim();
        match key.as_str() {
            "max-pairs" => limits.max_pairs = value.parse().with_context(|| format!("bad max-pairs `{value}`"))?,
            "max-degree" => limits.max_degree = value.parse().with_context(|| format!("bad max-degree `{value}`"))?,
            "max-bits" => limits.max_bits = value.parse().with_context(|| format!("bad max-bits `{value}`"))?,
            other => bail!("unknown limit `{other}`"),
        }
    }
    Ok(limits)
}
