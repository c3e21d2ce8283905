//! Ideal-theoretic decision procedures: Gröbner and local standard bases,
//! sums, intersections, quotients, saturation, elimination, radical
//! membership, dimension, local dimension at the origin and colength.

mod dim;
mod groebner;
mod mora;
mod ops;

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring};

pub use dim::{monomial_dimension, DimensionResult};
pub use groebner::buchberger;
pub use mora::{mora_normal_form, mora_standard_basis};
pub use ops::{eliminate, ideal_intersection, ideal_quotient, ideal_sum, radical_membership, saturate};

/// Caps that turn runaway computations into a reportable error.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    pub max_pairs: u64,
    pub max_degree: u32,
    pub max_bits: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_pairs: 200_000, max_degree: 60, max_bits: 1_000_000 }
    }
}

/// Limits plus usage counters shared by every computation of one analysis run.
#[derive(Debug, Default)]
pub struct Budget {
    pub limits: Limits,
    pairs: AtomicU64,
    bases: AtomicU64,
}

impl Budget {
    pub fn new(limits: Limits) -> Self {
        Budget { limits, pairs: AtomicU64::new(0), bases: AtomicU64::new(0) }
    }

    pub(crate) fn note_pair(&self) {
        self.pairs.fetch_add(1, AtomicOrdering::Relaxed);
    }

    pub(crate) fn note_basis(&self) {
        self.bases.fetch_add(1, AtomicOrdering::Relaxed);
    }

    pub fn pairs_used(&self) -> u64 {
        self.pairs.load(AtomicOrdering::Relaxed)
    }

    pub fn bases_computed(&self) -> u64 {
        self.bases.load(AtomicOrdering::Relaxed)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BasisKind {
    ReducedGroebner,
    StandardLocal,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Basis {
    pub elements: Vec<Polynomial>,
    pub order: MonomialOrder,
    pub kind: BasisKind,
}

impl Basis {
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements.iter().filter_map(|p| p.leading_monomial().cloned()).collect()
    }

    pub fn is_unit(&self) -> bool {
        self.elements.iter().any(|p| p.leading_monomial().is_some_and(|m| m.is_one()))
    }

    /// Remainder of `p` modulo the basis: a full normal form for Gröbner bases,
    /// Mora's weak normal form for local standard bases.
    pub fn normal_form(&self, p: &Polynomial, budget: &Budget) -> Result<Polynomial> {
        match self.kind {
            BasisKind::ReducedGroebner => {
                let ring = self.elements.first().map(|e| e.ring().clone()).unwrap_or_else(|| p.ring().clone());
                let p = p.to_ring(&ring)?;
                let refs: Vec<&Polynomial> = self.elements.iter().collect();
                Ok(groebner::reduce(&p, &refs))
            }
            BasisKind::StandardLocal => {
                let ring = p.ring().with_order(self.order.clone());
                mora_normal_form(&p.to_ring(&ring)?, &self.elements, budget)
            }
        }
    }
}

/// Full normal form of `p` with respect to a basis.
pub fn normal_form(p: &Polynomial, basis: &Basis, budget: &Budget) -> Result<Polynomial> {
    basis.normal_form(p, budget)
}

/// An ideal of a polynomial ring with lazily computed, write-once bases.
#[derive(Clone)]
pub struct Ideal {
    ring: Ring,
    generators: Vec<Polynomial>,
    groebner: OnceLock<Basis>,
    standard: OnceLock<Basis>,
}

impl Ideal {
    pub fn new(ring: &Ring, generators: impl IntoIterator<Item = Polynomial>) -> Result<Self> {
        let mut gens = Vec::new();
        for g in generators {
            let g = if g.ring() == ring { g } else { g.to_ring(ring)? };
            if !g.is_zero() && !gens.contains(&g) {
                gens.push(g);
            }
        }
        Ok(Ideal { ring: ring.clone(), generators: gens, groebner: OnceLock::new(), standard: OnceLock::new() })
    }

    pub fn zero(ring: &Ring) -> Self {
        Ideal::new(ring, []).expect("empty generator list")
    }

    pub fn unit(ring: &Ring) -> Self {
        Ideal::new(ring, [Polynomial::one(ring)]).expect("ring-local generator")
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// Reduced Gröbner basis in the ideal's ring (which must carry a global order).
    pub fn groebner(&self, budget: &Budget) -> Result<&Basis> {
        if let Some(b) = self.groebner.get() {
            return Ok(b);
        }
        let elements = buchberger(&self.generators, &self.ring, budget)?;
        budget.note_basis();
        Ok(self.groebner.get_or_init(|| Basis {
            elements,
            order: self.ring.order().clone(),
            kind: BasisKind::ReducedGroebner,
        }))
    }

    /// Standard basis for the local degree order at the origin.
    pub fn standard_basis(&self, budget: &Budget) -> Result<&Basis> {
        if let Some(b) = self.standard.get() {
            return Ok(b);
        }
        let local = self.ring.with_order(MonomialOrder::local());
        let gens: Vec<Polynomial> = self.generators.iter().map(|g| g.to_ring(&local)).collect::<Result<_>>()?;
        let elements = mora_standard_basis(&gens, &local, budget)?;
        budget.note_basis();
        Ok(self.standard.get_or_init(|| Basis { elements, order: MonomialOrder::local(), kind: BasisKind::StandardLocal }))
    }

    pub fn normal_form(&self, p: &Polynomial, budget: &Budget) -> Result<Polynomial> {
        self.ring.check_same(p.ring())?;
        self.groebner(budget)?.normal_form(p, budget)
    }

    pub fn contains(&self, p: &Polynomial, budget: &Budget) -> Result<bool> {
        Ok(self.normal_form(p, budget)?.is_zero())
    }

    pub fn contains_ideal(&self, other: &Ideal, budget: &Budget) -> Result<bool> {
        for g in &other.generators {
            if !self.contains(g, budget)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Ideal equality via reduced Gröbner bases.
    pub fn same_ideal(&self, other: &Ideal, budget: &Budget) -> Result<bool> {
        self.ring.check_same(&other.ring)?;
        Ok(self.groebner(budget)?.elements == other.groebner(budget)?.elements)
    }

    pub fn is_unit(&self, budget: &Budget) -> Result<bool> {
        if self.generators.iter().any(|g| g.is_constant()) {
            return Ok(true);
        }
        Ok(self.groebner(budget)?.is_unit())
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// Replaces the generators by the reduced Gröbner basis.
    pub fn reduced(&self, budget: &Budget) -> Result<Ideal> {
        let b = self.groebner(budget)?.clone();
        let out = Ideal::new(&self.ring, b.elements.clone())?;
        let _ = out.groebner.set(b);
        Ok(out)
    }

    /// Moves the ideal into `target`, sending variable `i` to `var_map[i]`.
    pub fn map_vars(&self, target: &Ring, var_map: &[usize]) -> Result<Ideal> {
        Ideal::new(target, self.generators.iter().map(|g| g.map_vars(target, var_map)).collect::<Result<Vec<_>>>()?)
    }

    /// Pulls the ideal back along a polynomial map: each generator `g` becomes `g(images)`.
    pub fn pullback(&self, images: &[Polynomial], target: &Ring) -> Result<Ideal> {
        Ideal::new(target, self.generators.iter().map(|g| g.substitute(images)).collect::<Result<Vec<_>>>()?)
    }
}

impl PartialEq for Ideal {
    /// Structural equality of rings and generator lists; use [`Ideal::same_ideal`]
    /// for mathematical equality.
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.generators == other.generators
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, g) in self.generators.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        if self.generators.is_empty() {
            write!(f, "0")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
