//! Map germs and their singularity-theoretic invariants: Jacobians, singular
//! loci, discriminants, composition, rank stratifications and Milnor sets.

mod milnor;
mod real;
mod realify;
mod strata;

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::{Budget, Ideal};
use crate::poly::{MonomialOrder, Polynomial, Ring};

pub use milnor::{milnor_set, MilnorSetResult};
pub use real::{real_local_dimension, real_reduce};
pub use realify::{realify, realify_ideal, realify_polynomial, realify_ring, realify_stratification};
pub use strata::{adapted_stratifications, pullback_refine, rank_stratification, refine, AdaptedStratifications, Piece, Stratification, Stratum};

/// Ground field of the germs. Verdicts about set germs differ between the two:
/// `x^2 + y^2` cuts out a point over the reals and two lines over the complexes.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Field {
    #[default]
    Real,
    Complex,
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Field::Real => "real",
            Field::Complex => "complex",
        })
    }
}

/// A polynomial map germ `(K^m, 0) -> (K^p, 0)`.
#[derive(Debug, Clone, PartialEq)]
pub struct MapGerm {
    label: String,
    source: Ring,
    target: Ring,
    components: Vec<Polynomial>,
}

pub type JacobianMatrix = Vec<Vec<Polynomial>>;

impl MapGerm {
    /// Every component must live in `source` and vanish at the origin;
    /// `target` supplies the names of the target coordinates.
    pub fn new(label: impl Into<String>, source: &Ring, target: &Ring, components: Vec<Polynomial>) -> Result<Self> {
        let label = label.into();
        if source.nvars() == 0 || target.nvars() == 0 {
            return Err(Error::InvalidGerm(format!("{label}: source and target dimensions must be positive")));
        }
        if components.len() != target.nvars() {
            return Err(Error::Arity { expected: target.nvars(), got: components.len() });
        }
        for (i, c) in components.iter().enumerate() {
            source.check_same(c.ring())?;
            if !c.constant_term().eq(&num_traits::Zero::zero()) {
                return Err(Error::InvalidGerm(format!("{label}: component {} does not vanish at the origin", i + 1)));
            }
        }
        Ok(MapGerm { label, source: source.clone(), target: target.clone(), components })
    }

    /// Target coordinates named `y1..yp`.
    pub fn with_default_target(label: impl Into<String>, source: &Ring, components: Vec<Polynomial>) -> Result<Self> {
        let target = default_target(components.len());
        Self::new(label, source, &target, components)
    }

    /// Same components, target coordinates renamed to those of `target`.
    pub fn retarget(self, target: &Ring) -> Result<Self> {
        Self::new(self.label, &self.source, target, self.components)
    }

    pub fn identity(ring: &Ring) -> Self {
        let components = (0..ring.nvars()).map(|i| Polynomial::var(ring, i).unwrap()).collect();
        MapGerm { label: "id".into(), source: ring.clone(), target: ring.clone(), components }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn relabel(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn source(&self) -> &Ring {
        &self.source
    }

    pub fn target(&self) -> &Ring {
        &self.target
    }

    pub fn source_dim(&self) -> usize {
        self.source.nvars()
    }

    pub fn target_dim(&self) -> usize {
        self.target.nvars()
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    /// The ideal generated by the components; its variety is the zero fibre.
    pub fn zero_fibre_ideal(&self) -> Ideal {
        Ideal::new(&self.source, self.components.iter().cloned()).expect("components share the source ring")
    }

    pub fn jacobian(&self) -> JacobianMatrix {
        jacobian_of(&self.components, self.source_dim())
    }

    /// `V` of the `p×p` minors of the Jacobian: the points where the rank drops.
    pub fn singular_locus_ideal(&self) -> Result<Ideal> {
        let (m, p) = (self.source_dim(), self.target_dim());
        if m < p {
            return Err(Error::DimensionMismatch(format!("{}: singular locus needs m >= p, got {m} -> {p}", self.label)));
        }
        Ideal::new(&self.source, minors(&self.jacobian(), p))
    }

    /// Closure of the image of the singular locus, in the target ring.
    pub fn discriminant_ideal(&self, budget: &Budget) -> Result<Ideal> {
        let sing = self.singular_locus_ideal()?;
        self.image_ideal(&sing, budget)
    }

    /// Zariski closure of `F(V(a))` for an ideal `a` of the source ring.
    pub fn image_ideal(&self, a: &Ideal, budget: &Budget) -> Result<Ideal> {
        let (m, p) = (self.source_dim(), self.target_dim());
        let names: Vec<String> = self.source.vars().iter().chain(self.target.vars()).cloned().collect();
        let graph = Ring::new(names, MonomialOrder::degrevlex());
        let embed: Vec<usize> = (0..m).collect();
        let mut gens: Vec<Polynomial> = a.generators().iter().map(|g| g.map_vars(&graph, &embed)).collect::<Result<_>>()?;
        for (i, c) in self.components.iter().enumerate() {
            gens.push(&Polynomial::var(&graph, m + i)? - &c.map_vars(&graph, &embed)?);
        }
        let keep: Vec<usize> = (m..m + p).collect();
        let image = Ideal::new(&graph, gens)?.eliminate(&keep, budget)?;
        let restricted: Vec<Polynomial> =
            image.generators().iter().map(|g| g.restrict(&self.target, &keep)).collect::<Result<_>>()?;
        Ideal::new(&self.target, restricted)?.reduced(budget)
    }

    /// `F^#`: substitutes the components into an ideal of the target ring.
    pub fn pullback(&self, a: &Ideal) -> Result<Ideal> {
        self.target.check_same(a.ring())?;
        a.pullback(&self.components, &self.source)
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &MapGerm) -> Result<MapGerm> {
        compose(self, inner)
    }
}

impl fmt::Display for MapGerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} : {} -> {} = [", self.label, self.source_dim(), self.target_dim())?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

pub fn default_target(p: usize) -> Ring {
    Ring::new((1..=p).map(|i| format!("y{i}")), MonomialOrder::degrevlex())
}

/// `H = G ∘ F`, labelled `G∘F`, with `F`'s source and `G`'s target.
pub fn compose(g: &MapGerm, f: &MapGerm) -> Result<MapGerm> {
    if f.target_dim() != g.source_dim() {
        return Err(Error::DimensionMismatch(format!(
            "cannot compose {} ({} -> {}) after {} ({} -> {})",
            g.label,
            g.source_dim(),
            g.target_dim(),
            f.label,
            f.source_dim(),
            f.target_dim()
        )));
    }
    let components = g.components.iter().map(|c| c.substitute(&f.components)).collect::<Result<Vec<_>>>()?;
    Ok(MapGerm { label: format!("{}∘{}", g.label, f.label), source: f.source.clone(), target: g.target.clone(), components })
}

pub fn jacobian(f: &MapGerm) -> JacobianMatrix {
    f.jacobian()
}

pub(crate) fn jacobian_of(polys: &[Polynomial], nvars: usize) -> JacobianMatrix {
    polys.iter().map(|p| (0..nvars).map(|j| p.partial_derivative(j).expect("index in range")).collect()).collect()
}

/// Product of two polynomial matrices.
pub fn mat_mul(a: &JacobianMatrix, b: &JacobianMatrix) -> JacobianMatrix {
    let inner = b.len();
    a.iter()
        .map(|row| {
            (0..b.first().map_or(0, |r| r.len()))
                .map(|j| {
                    let mut acc = Polynomial::zero(row[0].ring());
                    for k in 0..inner {
                        acc = &acc + &(&row[k] * &b[k][j]);
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Determinant by cofactor expansion; the matrices here are at most 6×6.
pub fn determinant(rows: &[&[Polynomial]], cols: &[usize]) -> Polynomial {
    debug_assert_eq!(rows.len(), cols.len());
    match rows.len() {
        1 => rows[0][cols[0]].clone(),
        2 => &(&rows[0][cols[0]] * &rows[1][cols[1]]) - &(&rows[0][cols[1]] * &rows[1][cols[0]]),
        k => {
            let mut acc = Polynomial::zero(rows[0][0].ring());
            for (pos, &c) in cols.iter().enumerate() {
                let entry = &rows[0][c];
                if entry.is_zero() {
                    continue;
                }
                let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                let sub = determinant(&rows[1..k], &rest);
                let term = entry * &sub;
                acc = if pos % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
    }
}

/// All nonzero `k×k` minors, made monic and deduplicated. `k = 0` gives `[1]`;
/// `k` larger than either side gives no minors.
pub fn minors(matrix: &[Vec<Polynomial>], k: usize) -> Vec<Polynomial> {
    let Some(first) = matrix.iter().find_map(|r| r.first()) else { return Vec::new() };
    let ring = first.ring().clone();
    if k == 0 {
        return vec![Polynomial::one(&ring)];
    }
    let ncols = matrix[0].len();
    if k > matrix.len() || k > ncols {
        return Vec::new();
    }
    let mut out: Vec<Polynomial> = Vec::new();
    for rows in (0..matrix.len()).combinations(k) {
        let sub: Vec<&[Polynomial]> = rows.iter().map(|&r| matrix[r].as_slice()).collect();
        if sub.iter().any(|r| r.iter().all(|e| e.is_zero())) {
            continue;
        }
        for cols in (0..ncols).combinations(k) {
            let d = determinant(&sub, &cols);
            if !d.is_zero() {
                let d = d.monic();
                if !out.contains(&d) {
                    out.push(d);
                }
            }
        }
    }
    out
}

/// Minors of size `k` as an ideal of `ring`. An empty matrix (no rows) has the
/// single `0×0` minor `1` and no larger ones.
pub(crate) fn minor_ideal(ring: &Ring, matrix: &[Vec<Polynomial>], k: usize) -> Ideal {
    if k == 0 {
        return Ideal::unit(ring);
    }
    Ideal::new(ring, minors(matrix, k)).expect("minors live in the ring")
}
