//! Real zero sets. A polynomial `Σ c_i m_i^2` with all `c_i > 0` and monomials
//! `m_i` vanishes at a real point exactly when every `m_i` does, so it may be
//! replaced by the `m_i`. Applied to a fixed point this keeps the real zero
//! set and often shrinks the complex one; it is sound but not complete.

use itertools::Itertools;
use num_traits::{One, Signed};

use crate::error::Result;
use crate::ideal::{monomial_dimension, Basis, Budget, DimensionResult, Ideal};
use crate::poly::{Monomial, Polynomial};

/// Zero-set generators for `p = m * Σ c_i m_i^2` with `m` the monomial content
/// and all `c_i` of one sign: over the reals `V(p) = ∩ V(m * m_i)`, and each
/// product is returned as its radical. A constant term yields `[rad m]`.
fn sos_roots(p: &Polynomial) -> Option<Vec<Monomial>> {
    let first = p.terms().first()?;
    let positive = first.1.is_positive();
    let content = p.terms().iter().skip(1).fold(first.0.clone(), |g, (m, _)| {
        Monomial::from_exponents(g.exponents().iter().zip(m.exponents()).map(|(a, b)| *a.min(b)).collect())
    });
    let mut out = Vec::with_capacity(p.nterms());
    for (m, c) in p.terms() {
        let q = m.div(&content);
        if c.is_positive() != positive || q.exponents().iter().any(|e| e % 2 == 1) {
            return None;
        }
        out.push(Monomial::from_exponents(m.exponents().iter().map(|&e| e.min(1)).collect()));
    }
    Some(out)
}

fn lowest_form(p: &Polynomial) -> Polynomial {
    let low = p.low_degree().unwrap_or(0);
    Polynomial::from_terms(p.ring(), p.terms().iter().filter(|(m, _)| m.degree() == low).cloned())
}

fn roots_as_polys(p: &Polynomial, roots: Vec<Monomial>) -> Vec<Polynomial> {
    roots.into_iter().map(|m| Polynomial::monomial(p.ring(), m, One::one())).collect()
}

/// Global real reduction of an ideal, iterated until no reduced Gröbner basis
/// element is a sum of even monomials with equal signs.
pub fn real_reduce(ideal: &Ideal, budget: &Budget) -> Result<Ideal> {
    let mut current = ideal.reduced(budget)?;
    loop {
        let mut extra = Vec::new();
        for g in current.generators() {
            if let Some(roots) = sos_roots(g) {
                if g.nterms() > 1 || roots.iter().any(|m| m != g.leading_monomial().unwrap()) {
                    extra.extend(roots_as_polys(g, roots));
                }
            }
        }
        if extra.is_empty() {
            return Ok(current);
        }
        current = current.with(extra)?.reduced(budget)?;
    }
}

/// Roots of `g` if it is a sum of even monomials with equal signs, or a unit
/// times one in the local ring described by `basis`.
fn local_sos_roots(g: &Polynomial, basis: &Basis, budget: &Budget) -> Result<Option<Vec<Monomial>>> {
    match sos_roots(g) {
        Some(r) if g.nterms() > 1 => Ok(Some(r)),
        _ => {
            let low = lowest_form(g);
            match sos_roots(&low) {
                Some(r) if low.nterms() > 1 && basis.normal_form(&low, budget)?.is_zero() => Ok(Some(r)),
                _ => Ok(None),
            }
        }
    }
}

/// Searches the elimination ideals onto coordinate subsets, smallest first,
/// for elements that real reduction can use.
fn eliminant_roots(ideal: &Ideal, basis: &Basis, budget: &Budget) -> Result<Vec<Polynomial>> {
    let n = ideal.ring().nvars();
    for size in 1..n {
        for keep in (0..n).combinations(size) {
            let elim = ideal.eliminate(&keep, budget)?;
            let mut extra = Vec::new();
            for g in elim.generators() {
                if let Some(roots) = local_sos_roots(g, basis, budget)? {
                    extra.extend(roots_as_polys(g, roots));
                }
            }
            if !extra.is_empty() {
                return Ok(extra);
            }
        }
    }
    Ok(Vec::new())
}

/// Local dimension at the origin of the real zero set, after local real
/// reduction: besides sums of squares themselves, a basis element whose
/// lowest-degree form is such a sum contributes when that form lies in the
/// local ideal (i.e. the element is a unit times the sum of squares). When
/// the basis offers nothing, elimination ideals are searched as well.
/// Returns the dimension and the reduced ideal.
pub fn real_local_dimension(ideal: &Ideal, budget: &Budget) -> Result<(DimensionResult, Ideal)> {
    let mut current = real_reduce(ideal, budget)?;
    loop {
        let basis = current.standard_basis(budget)?;
        if basis.is_unit() {
            return Ok((DimensionResult::empty(), current));
        }
        let mut extra = Vec::new();
        for g in &basis.elements {
            if let Some(roots) = local_sos_roots(g, basis, budget)? {
                let g = g.to_ring(current.ring())?;
                extra.extend(roots_as_polys(&g, roots));
            }
        }
        if extra.is_empty() {
            let dim = monomial_dimension(&basis.leading_monomials(), current.ring().nvars());
            if dim.dimension > 0 {
                extra = eliminant_roots(&current, basis, budget)?;
            }
            if extra.is_empty() {
                return Ok((dim, current));
            }
        }
        current = real_reduce(&current.with(extra)?, budget)?;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_polynomial, MonomialOrder, Ring};

    fn ideal(gens: &[&str], r: &Ring) -> Ideal {
        Ideal::new(r, gens.iter().map(|g| parse_polynomial(g, r).unwrap())).unwrap()
    }

    #[test]
    fn sums_of_squares_collapse() {
        let budget = Budget::default();
        let r = Ring::new(["x", "y", "u", "v"], MonomialOrder::degrevlex());
        let f = ideal(&["(x^2+y^2)*(1+u)", "(x^2+y^2)*v", "u^2+v^2"], &r);
        let reduced = real_reduce(&f, &budget).unwrap();
        assert!(reduced.same_ideal(&ideal(&["x", "y", "u", "v"], &r), &budget).unwrap());
        assert_eq!(f.dimension(&budget).unwrap().dimension, 2);
        assert_eq!(reduced.dimension(&budget).unwrap().dimension, 0);
    }

    #[test]
    fn unit_factors_are_seen_locally() {
        let budget = Budget::default();
        let r = Ring::new(["x", "y", "u", "v"], MonomialOrder::degrevlex());
        let h = ideal(&["(x^2+y^2)*(1+u)", "(x^2+y^2)*(1+u)^2*v^2"], &r);
        assert_eq!(real_reduce(&h, &budget).unwrap().dimension(&budget).unwrap().dimension, 3);
        let (dim, _) = real_local_dimension(&h, &budget).unwrap();
        assert_eq!(dim.dimension, 2);
        let positive = ideal(&["x^2 + y^2 + 1"], &r);
        assert_eq!(real_local_dimension(&positive, &budget).unwrap().0.dimension, -1);
    }

    #[test]
    fn hidden_sums_of_squares_are_found_by_elimination() {
        let budget = Budget::default();
        let r = Ring::new(["x", "y", "u", "v"], MonomialOrder::degrevlex());
        let t = ideal(&["x^2 + y^2 - 2*u^2 - 2*v^2 - 2*u", "(x^2+y^2)*(1+u)", "(x^2+y^2)*v"], &r);
        let (dim, reduced) = real_local_dimension(&t, &budget).unwrap();
        assert_eq!(dim.dimension, 1);
        assert!(reduced.contains(&parse_polynomial("x", &r).unwrap(), &budget).unwrap());
    }

    #[test]
    fn monomial_multiples_of_squares() {
        let budget = Budget::default();
        let r = Ring::new(["u", "v", "w"], MonomialOrder::degrevlex());
        let i = ideal(&["v*w", "u*w", "u^2 + v^2 - w^2", "w^3"], &r);
        assert_eq!(i.local_dimension_at_origin(&budget).unwrap().dimension, 1);
        assert_eq!(real_local_dimension(&i, &budget).unwrap().0.dimension, 0);
        let one = ideal(&["v*(u^2 + v^2)"], &r);
        let (dim, reduced) = real_local_dimension(&one, &budget).unwrap();
        assert_eq!(dim.dimension, 2);
        assert!(reduced.contains(&parse_polynomial("u*v", &r).unwrap(), &budget).unwrap());
    }

    #[test]
    fn mixed_signs_are_left_alone() {
        let budget = Budget::default();
        let r = Ring::new(["x", "y"], MonomialOrder::degrevlex());
        let i = ideal(&["x^2 - y^2"], &r);
        assert_eq!(real_local_dimension(&i, &budget).unwrap().0.dimension, 1);
    }
}
