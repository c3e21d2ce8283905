use num_traits::Zero;

use super::{Budget, Ideal};
use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring};

const AUX: &str = "@t";

impl Polynomial {
    /// Exact quotient `self / divisor` under a global order, or `None` if the
    /// division leaves a remainder.
    pub fn div_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        if divisor.is_zero() {
            return None;
        }
        let ring = self.ring();
        let lmd = divisor.leading_monomial()?;
        let lcd = divisor.leading_coefficient()?;
        let mut rest = self.clone();
        let mut quotient = Vec::new();
        while let Some(lm) = rest.leading_monomial().cloned() {
            if !lmd.divides(&lm) {
                return None;
            }
            let c = rest.leading_coefficient().unwrap() / lcd;
            let m = lm.div(lmd);
            rest = rest.sub_mul_term(&c, &m, divisor);
            quotient.push((m, c));
        }
        Some(Polynomial::from_terms(ring, quotient))
    }

    /// Moves a polynomial into `target`, where target variable `j` is source
    /// variable `source[j]`. Fails if a dropped variable occurs.
    pub(crate) fn restrict(&self, target: &Ring, source: &[usize]) -> Result<Polynomial> {
        let n = self.ring().nvars();
        let mut keep = vec![false; n];
        for &s in source {
            keep[s] = true;
        }
        let mut terms = Vec::with_capacity(self.nterms());
        for (m, c) in self.terms() {
            if m.support().any(|i| !keep[i]) {
                return Err(Error::Invalid(format!("{self} involves an eliminated variable")));
            }
            let e: Vec<u32> = source.iter().map(|&s| m.exponents()[s]).collect();
            terms.push((Monomial::from_exponents(e), c.clone()));
        }
        Ok(Polynomial::from_terms(target, terms))
    }
}

impl Ideal {
    /// `A + B`; its variety is `V(A) ∩ V(B)`.
    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.ring().check_same(other.ring())?;
        Ideal::new(self.ring(), self.generators().iter().chain(other.generators()).cloned())
    }

    /// Adds generators to the ideal.
    pub fn with(&self, extra: impl IntoIterator<Item = Polynomial>) -> Result<Ideal> {
        Ideal::new(self.ring(), self.generators().iter().cloned().chain(extra))
    }

    /// `A ∩ B` via `t*A + (1-t)*B` and elimination of `t`; its variety is `V(A) ∪ V(B)`.
    pub fn intersection(&self, other: &Ideal, budget: &Budget) -> Result<Ideal> {
        let ring = self.ring();
        ring.check_same(other.ring())?;
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(ring));
        }
        if self.is_unit(budget)? {
            return Ok(other.clone());
        }
        if other.is_unit(budget)? {
            return Ok(self.clone());
        }
        let n = ring.nvars();
        let mut perm = vec![n];
        perm.extend(0..n);
        let ext = ring.extended(&[AUX], MonomialOrder::elimination(1).with_perm(perm));
        let embed: Vec<usize> = (0..n).collect();
        let t = Polynomial::var(&ext, n)?;
        let one_minus_t = &Polynomial::one(&ext) - &t;
        let mut gens = Vec::new();
        for g in self.generators() {
            gens.push(&g.map_vars(&ext, &embed)? * &t);
        }
        for g in other.generators() {
            gens.push(&g.map_vars(&ext, &embed)? * &one_minus_t);
        }
        let gb = super::buchberger(&gens, &ext, budget)?;
        budget.note_basis();
        let kept = gb
            .iter()
            .filter(|p| p.terms().iter().all(|(m, _)| m.exponents()[n] == 0))
            .map(|p| p.restrict(ring, &embed))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, kept)?.reduced(budget)
    }

    /// `A : f = { g : g*f ∈ A }`.
    pub fn quotient(&self, f: &Polynomial, budget: &Budget) -> Result<Ideal> {
        let ring = self.ring();
        ring.check_same(f.ring())?;
        if f.is_zero() {
            return Err(Error::Invalid("ideal quotient by the zero polynomial".into()));
        }
        if f.is_constant() {
            return Ok(self.clone());
        }
        let principal = Ideal::new(ring, [f.clone()])?;
        let meet = self.intersection(&principal, budget)?;
        let mut gens = Vec::with_capacity(meet.generators().len());
        for h in meet.generators() {
            let q = h
                .div_exact(f)
                .ok_or_else(|| Error::Invalid(format!("intersection element {h} not divisible by {f}")))?;
            gens.push(q);
        }
        Ideal::new(ring, gens)?.reduced(budget)
    }

    /// `A : f^∞`, by iterating quotients until the reduced basis stabilises.
    pub fn saturate_by(&self, f: &Polynomial, budget: &Budget) -> Result<Ideal> {
        if f.is_zero() {
            return Ok(Ideal::unit(self.ring()));
        }
        if f.is_constant() {
            return Ok(self.clone());
        }
        let mut current = self.reduced(budget)?;
        loop {
            if current.is_unit(budget)? {
                return Ok(current);
            }
            let next = current.quotient(f, budget)?;
            if next.same_ideal(&current, budget)? {
                return Ok(current);
            }
            current = next;
        }
    }

    /// `A : B^∞ = ⋂_b A : b^∞` over the generators `b` of `B`; its variety is
    /// the Zariski closure of `V(A) \ V(B)`.
    pub fn saturate(&self, other: &Ideal, budget: &Budget) -> Result<Ideal> {
        self.ring().check_same(other.ring())?;
        if other.is_zero() {
            return Ok(Ideal::unit(self.ring()));
        }
        let mut acc: Option<Ideal> = None;
        for b in other.generators() {
            let s = self.saturate_by(b, budget)?;
            acc = Some(match acc {
                None => s,
                Some(a) => a.intersection(&s, budget)?,
            });
        }
        Ok(acc.expect("nonzero ideal has generators"))
    }

    /// `A ∩ K[keep]`, computed with a block elimination order. The result is
    /// expressed in the same ring and only involves the kept variables.
    pub fn eliminate(&self, keep: &[usize], budget: &Budget) -> Result<Ideal> {
        let ring = self.ring();
        let n = ring.nvars();
        if let Some(&bad) = keep.iter().find(|&&k| k >= n) {
            return Err(Error::VariableIndex { index: bad, count: n });
        }
        let elim: Vec<usize> = (0..n).filter(|i| !keep.contains(i)).collect();
        if elim.is_empty() {
            return Ok(self.clone());
        }
        let mut perm = elim.clone();
        perm.extend(keep.iter().copied());
        let er = ring.with_order(MonomialOrder::elimination(elim.len()).with_perm(perm));
        let gens: Vec<Polynomial> = self.generators().iter().map(|g| g.to_ring(&er)).collect::<Result<_>>()?;
        let gb = super::buchberger(&gens, &er, budget)?;
        budget.note_basis();
        let kept = gb
            .into_iter()
            .filter(|p| p.terms().iter().all(|(m, _)| elim.iter().all(|&i| m.exponents()[i] == 0)))
            .map(|p| p.to_ring(ring))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, kept)?.reduced(budget)
    }

    /// Whether `f` lies in the radical of the ideal, i.e. `V(A) ⊆ V(f)`;
    /// decided by `1 ∈ A + (1 - t*f)`.
    pub fn radical_contains(&self, f: &Polynomial, budget: &Budget) -> Result<bool> {
        let ring = self.ring();
        ring.check_same(f.ring())?;
        if f.is_zero() || self.contains(f, budget)? {
            return Ok(true);
        }
        let n = ring.nvars();
        let ext = ring.extended(&[AUX], MonomialOrder::degrevlex());
        let embed: Vec<usize> = (0..n).collect();
        let t = Polynomial::var(&ext, n)?;
        let mut gens: Vec<Polynomial> =
            self.generators().iter().map(|g| g.map_vars(&ext, &embed)).collect::<Result<_>>()?;
        gens.push(&Polynomial::one(&ext) - &(&t * &f.map_vars(&ext, &embed)?));
        let gb = super::buchberger(&gens, &ext, budget)?;
        budget.note_basis();
        Ok(gb.len() == 1 && gb[0].is_constant() && !gb[0].constant_term().is_zero())
    }
}

/// `A + B`.
pub fn ideal_sum(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    a.sum(b)
}

/// `A ∩ B`.
pub fn ideal_intersection(a: &Ideal, b: &Ideal, budget: &Budget) -> Result<Ideal> {
    a.intersection(b, budget)
}

/// `A : f`.
pub fn ideal_quotient(a: &Ideal, f: &Polynomial, budget: &Budget) -> Result<Ideal> {
    a.quotient(f, budget)
}

/// `A : B^∞`.
pub fn saturate(a: &Ideal, b: &Ideal, budget: &Budget) -> Result<Ideal> {
    a.saturate(b, budget)
}

/// `A ∩ K[keep]`.
pub fn eliminate(a: &Ideal, keep: &[usize], budget: &Budget) -> Result<Ideal> {
    a.eliminate(keep, budget)
}

/// `f ∈ √A`.
pub fn radical_membership(f: &Polynomial, a: &Ideal, budget: &Budget) -> Result<bool> {
    a.radical_contains(f, budget)
}
