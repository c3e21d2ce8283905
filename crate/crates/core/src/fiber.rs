//! Topology of the Milnor fibre of `H = G∘F` for an ICIS `F: (C^{n+1},0) -> (C^2,0)`
//! and a plane curve `G: (C^2,0) -> (C,0)`.
//!
//! Euler characteristics follow the bouquet theorems: the fibre of `G` is
//! connected with first Betti number `μ(G)`, the ICIS fibre of `F` is a bouquet
//! of `μ_ICIS` spheres of dimension `n - 1`, and the fibre of `H` is obtained
//! from a fibration with base `Fib G` and fibre `Fib F` by attaching `N` cells
//! of dimension `n`.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::germ::{adapted_stratifications, minors, Field, MapGerm, Stratification};
use crate::ideal::{Budget, Ideal};
use crate::poly::{Polynomial, Rational, Ring};
use crate::tame::{germ_subset_of_origin, singular_ideal};

/// Largest numerator and denominator of a generic rational draw.
pub const GENERIC_HEIGHT: i64 = 97;

/// Seeded source of generic rational values.
#[derive(Debug, Clone)]
pub struct GenericValues {
    rng: ChaCha8Rng,
}

impl GenericValues {
    pub fn new(seed: u64) -> Self {
        GenericValues { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// A nonzero rational `±p/q` with `1 <= p, q <= 97`.
    pub fn draw(&mut self) -> Rational {
        let p = self.rng.gen_range(1..=GENERIC_HEIGHT);
        let q = self.rng.gen_range(1..=GENERIC_HEIGHT);
        let sign = if self.rng.gen_bool(0.5) { 1 } else { -1 };
        Rational::new((sign * p).into(), q.into())
    }

    pub fn vector(&mut self, n: usize) -> Vec<Rational> {
        (0..n).map(|_| self.draw()).collect()
    }
}

/// `μ(f)`: local colength of the Jacobian ideal at the origin.
pub fn milnor_number_hypersurface(f: &Polynomial, budget: &Budget) -> Result<u64> {
    if !f.constant_term().is_zero() {
        return Err(Error::InvalidGerm(format!("{f} does not vanish at the origin")));
    }
    let ring = f.ring();
    let partials = (0..ring.nvars()).map(|i| f.partial_derivative(i)).collect::<Result<Vec<_>>>()?;
    Ideal::new(ring, partials)?
        .colength(budget)?
        .ok_or_else(|| Error::NonIsolated(format!("Jacobian ideal of {f} has infinite colength")))
}

/// Lê–Greuel: `μ(f, g) = colength((φ) + maximal minors) - μ(φ)` with `φ` a
/// generic combination of the two components. Two draws must agree. For a
/// two-variable source the fibre is finite and `μ` is its length minus one.
fn icis_milnor_number(f: &Polynomial, g: &Polynomial, draws: &mut GenericValues, budget: &Budget) -> Result<u64> {
    let ring = f.ring();
    if ring.nvars() == 2 {
        let len = Ideal::new(ring, [f.clone(), g.clone()])?
            .colength(budget)?
            .ok_or_else(|| Error::NotIcis(format!("({f}, {g}) has a positive-dimensional zero set")))?;
        return Ok(len.saturating_sub(1));
    }
    let jac = crate::germ::jacobian_of(&[f.clone(), g.clone()], ring.nvars());
    let max_minors = minors(&jac, 2);
    let mut values = Vec::new();
    for _ in 0..2 {
        let (a, b) = (draws.draw(), draws.draw());
        let phi = &f.scale(&a) + &g.scale(&b);
        let mu_phi = milnor_number_hypersurface(&phi, budget)
            .map_err(|_| Error::GenericityFailure(format!("combination {phi} is not isolated")))?;
        let mut gens = max_minors.clone();
        gens.push(phi);
        let total = Ideal::new(ring, gens)?
            .colength(budget)?
            .ok_or_else(|| Error::NotIcis(format!("({f}, {g}) is not an isolated complete intersection")))?;
        values.push(total.checked_sub(mu_phi).ok_or_else(|| Error::GenericityFailure("negative Milnor number".into()))?);
    }
    if values[0] != values[1] {
        return Err(Error::GenericityFailure(format!("Milnor numbers {} and {} differ between draws", values[0], values[1])));
    }
    Ok(values[0])
}

/// Milnor number of the fibre germ of a pair `(f, g)` through `point`.
pub fn milnor_number_icis_point(f: &MapGerm, point: &[Rational], draws: &mut GenericValues, budget: &Budget) -> Result<u64> {
    if f.target_dim() != 2 {
        return Err(Error::DimensionMismatch(format!("{} must have two components", f.label())));
    }
    let shifted = f
        .components()
        .iter()
        .map(|c| {
            let t = c.translate(point)?;
            Ok(&t - &Polynomial::constant(t.ring(), t.constant_term()))
        })
        .collect::<Result<Vec<_>>>()?;
    let smooth = crate::germ::jacobian_of(&shifted, f.source_dim());
    let regular = minors(&smooth, 2).iter().any(|m| !m.constant_term().is_zero());
    if regular {
        return Ok(0);
    }
    if shifted.iter().any(|c| c.is_zero()) {
        let nonzero: Vec<_> = shifted.iter().filter(|c| !c.is_zero()).collect();
        return match nonzero.as_slice() {
            [h] => milnor_number_hypersurface(h, budget),
            _ => Err(Error::NonIsolated(format!("fibre of {} through the point is not a complete intersection", f.label()))),
        };
    }
    icis_milnor_number(&shifted[0], &shifted[1], draws, budget)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberPiece {
    pub stratum: String,
    pub fiber_ideal: String,
    pub dim: i64,
    /// The map has full rank on the stratum, so this piece is a manifold.
    pub smooth: bool,
}

/// Pieces `V ∩ H^{-1}(a)` of a generic fibre, one per stratum it meets.
pub fn fiber_decomposition(h: &MapGerm, w: &Stratification, a: &[Rational], budget: &Budget) -> Result<Vec<FiberPiece>> {
    if a.len() != h.target_dim() {
        return Err(Error::Arity { expected: h.target_dim(), got: a.len() });
    }
    let level: Vec<Polynomial> =
        h.components().iter().zip(a).map(|(c, v)| c - &Polynomial::constant(c.ring(), v.clone())).collect();
    let mut out = Vec::new();
    for s in &w.strata {
        let mut piece = s.closure.with(level.iter().cloned())?;
        for fr in &s.frontiers {
            if piece.is_unit(budget)? {
                break;
            }
            piece = piece.saturate(fr, budget)?;
        }
        if piece.is_unit(budget)? {
            continue;
        }
        let piece = piece.reduced(budget)?;
        let dim = piece.dimension(budget)?.dimension;
        out.push(FiberPiece {
            stratum: s.label.clone(),
            fiber_ideal: piece.to_string(),
            dim,
            smooth: s.rank(h.label()) == Some(h.target_dim()),
        });
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MuEntry {
    pub points: String,
    pub mu: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberReport {
    pub pieces: Vec<FiberPiece>,
    #[serde(rename = "mu_G")]
    pub mu_g: u64,
    pub mu_icis: u64,
    pub mu_list: Vec<MuEntry>,
    #[serde(rename = "N")]
    pub n_cells: u64,
    #[serde(rename = "chi_fib_F")]
    pub chi_fib_f: i64,
    #[serde(rename = "chi_fib_G")]
    pub chi_fib_g: i64,
    #[serde(rename = "chi_fib_H")]
    pub chi_fib_h: i64,
    pub n: usize,
    pub generic_values: Vec<String>,
    /// Whether homotopy-level conclusions may be drawn (local openness of `F` asserted).
    pub homotopy_level: bool,
    pub notes: Vec<String>,
}

impl FiberReport {
    pub fn euler_identity_holds(&self) -> bool {
        let sign = if self.n.is_multiple_of(2) { 1 } else { -1 };
        self.chi_fib_h == self.chi_fib_g * self.chi_fib_f + sign * self.n_cells as i64
    }
}

/// Options for [`nemethi_report`].
#[derive(Debug, Clone, Copy, Default)]
pub struct FiberOptions {
    pub seed: u64,
    pub locally_open: bool,
    pub field: Field,
}

/// Number of critical points of `F` on a generic fibre `H = t` near the
/// origin, counted with Milnor numbers: the local length at `t = 0` of the
/// flat family cut out by the maximal minors of `J_F` and `H - t`.
fn cell_count(f: &MapGerm, h: &Polynomial, budget: &Budget) -> Result<(u64, String)> {
    let ring = f.source();
    let m = ring.nvars();
    let name = (0..).map(|i| if i == 0 { "t".to_string() } else { format!("t{i}") }).find(|n| ring.var_index(n).is_none()).unwrap();
    let ext = ring.extended(&[name.as_str()], crate::poly::MonomialOrder::degrevlex());
    let embed: Vec<usize> = (0..m).collect();
    let t = Polynomial::var(&ext, m)?;
    let mut gens = minors(&f.jacobian(), 2).iter().map(|p| p.map_vars(&ext, &embed)).collect::<Result<Vec<_>>>()?;
    let crit = Ideal::new(ring, minors(&f.jacobian(), 2))?;
    gens.push(&h.map_vars(&ext, &embed)? - &t);
    let family = Ideal::new(&ext, gens)?.saturate_by(&t, budget)?;
    let special = family.with([t])?;
    let n = special
        .colength(budget)?
        .ok_or_else(|| Error::NotIcis("critical points on the generic fibre do not stay isolated".into()))?;
    Ok((n, format!("Sing F ∩ H^-1(t) for generic t, Sing F = V{crit}")))
}

/// The fibre report for `H = G∘F`, with `F: (C^{n+1},0) -> (C^2,0)` an ICIS
/// and `G` a plane curve with an isolated singularity.
pub fn nemethi_report(f: &MapGerm, g: &MapGerm, opts: FiberOptions, budget: &Budget) -> Result<FiberReport> {
    if f.target_dim() != 2 || g.source_dim() != 2 || g.target_dim() != 1 {
        return Err(Error::DimensionMismatch(format!(
            "fibre report needs F: n+1 -> 2 and G: 2 -> 1, got {} -> {} and {} -> {}",
            f.source_dim(),
            f.target_dim(),
            g.source_dim(),
            g.target_dim()
        )));
    }
    if f.source_dim() < 2 {
        return Err(Error::DimensionMismatch("the source of F needs at least two variables".into()));
    }
    let icis = singular_ideal(f)?.sum(&f.zero_fibre_ideal())?;
    if !germ_subset_of_origin(&icis, Field::Complex, budget)?.holds {
        return Err(Error::NotIcis(format!("{}: Sing F meets F^-1(0) away from the origin", f.label())));
    }
    let n = f.source_dim() - 1;
    let mut draws = GenericValues::new(opts.seed);
    let g0 = &g.components()[0];
    let mu_g = milnor_number_hypersurface(g0, budget)?;
    let mu_icis = icis_milnor_number(&f.components()[0], &f.components()[1], &mut draws, budget)?;
    let h = g.compose(f)?.relabel("H");
    let (n_cells, points) = cell_count(f, &h.components()[0], budget)?;

    let chi_fib_g = 1 - mu_g as i64;
    let chi_fib_f = 1 + if n % 2 == 1 { mu_icis as i64 } else { -(mu_icis as i64) };
    let sign = if n.is_multiple_of(2) { 1 } else { -1 };
    let chi_fib_h = chi_fib_g * chi_fib_f + sign * n_cells as i64;

    let adapted = adapted_stratifications(f, g, Field::Complex, budget)?;
    let h = adapted.composite.clone();
    let a1 = draws.vector(1);
    let a2 = draws.vector(1);
    let pieces = fiber_decomposition(&h, &adapted.w, &a1, budget)?;
    let again = fiber_decomposition(&h, &adapted.w, &a2, budget)?;
    let shape = |p: &[FiberPiece]| p.iter().map(|x| (x.stratum.clone(), x.dim, x.smooth)).collect::<Vec<_>>();
    if shape(&pieces) != shape(&again) {
        return Err(Error::GenericityFailure(format!("fibre decompositions at {} and {} differ", a1[0], a2[0])));
    }

    let mut notes = vec![
        "Euler characteristics are those of complex Milnor fibres".to_string(),
        "per-piece gluing data is not computed".to_string(),
    ];
    if opts.field == Field::Real {
        notes.push("input declared over the reals: germ-condition verdicts only".to_string());
    }
    if !opts.locally_open {
        notes.push("local openness of F not asserted: homotopy-level conclusions withheld".to_string());
    }
    Ok(FiberReport {
        pieces,
        mu_g,
        mu_icis,
        mu_list: vec![MuEntry { points, mu: n_cells }],
        n_cells,
        chi_fib_f,
        chi_fib_g,
        chi_fib_h,
        n,
        generic_values: vec![a1[0].to_string(), a2[0].to_string()],
        homotopy_level: opts.locally_open && opts.field == Field::Complex,
        notes,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SebastianiThom {
    pub mu_f: u64,
    pub mu_g: u64,
    pub mu_sum: u64,
    pub holds: bool,
}

/// Compares `μ(f ⊕ g)` with `μ(f)·μ(g)` for `f`, `g` in separate variables.
pub fn sebastiani_thom_check(f: &Polynomial, g: &Polynomial, budget: &Budget) -> Result<SebastianiThom> {
    let (rf, rg) = (f.ring(), g.ring());
    if rf.vars().iter().any(|v| rg.var_index(v).is_some()) {
        return Err(Error::Invalid("the two functions must use disjoint variables".into()));
    }
    let joint = Ring::new(rf.vars().iter().chain(rg.vars()).cloned(), crate::poly::MonomialOrder::degrevlex());
    let (nf, ng) = (rf.nvars(), rg.nvars());
    let sum = &f.map_vars(&joint, &(0..nf).collect::<Vec<_>>())? + &g.map_vars(&joint, &(nf..nf + ng).collect::<Vec<_>>())?;
    let mu_f = milnor_number_hypersurface(f, budget)?;
    let mu_g = milnor_number_hypersurface(g, budget)?;
    let mu_sum = milnor_number_hypersurface(&sum, budget)?;
    Ok(SebastianiThom { mu_f, mu_g, mu_sum, holds: mu_sum == mu_f * mu_g })
}
