//! Standard bases for the local order at the origin.
//!
//! The primary algorithm is Mora's tangent cone algorithm with the écart
//! weak normal form. Unit factors can make that normal form expand a power
//! series for a very long time, so the total number of reduction steps is
//! capped; past the cap the basis is recomputed with Lazard's method
//! (homogenize, run Buchberger under the degree-then-local order, dehomogenize),
//! which always terminates within ordinary Gröbner-basis cost.

use super::groebner::{buchberger, count_pair, homogenize, pick_pair, s_polynomial, update, Pair};
use super::Budget;
use crate::error::{Error, LimitKind, Result};
use crate::poly::{rat, Monomial, Polynomial, Ring};

/// Reduction steps Mora may spend on one standard basis before switching to Lazard's method.
const MORA_STEP_ALLOWANCE: u64 = 5_000;
/// Remainder size (terms, coefficient bits) past which Mora also gives way.
const MORA_MAX_TERMS: usize = 400;
const MORA_MAX_BITS: u64 = 2_048;

/// deg(f) - deg(LM(f)).
fn ecart(f: &Polynomial) -> u32 {
    f.degree().unwrap_or(0) - f.leading_monomial().map(|m| m.degree()).unwrap_or(0)
}

/// Mora's weak normal form: returns `h` with `u*f - h` in the ideal for some
/// unit `u`, and `LM(h)` not divisible by any leading monomial of `basis`
/// (or `h = 0`). Reducers are chosen with minimal écart; the intermediate
/// remainder joins the reducer set whenever the chosen reducer has larger écart.
pub fn mora_normal_form(f: &Polynomial, basis: &[Polynomial], budget: &Budget) -> Result<Polynomial> {
    let mut unlimited = u64::MAX;
    Ok(weak_normal_form(f, basis, budget, &mut unlimited)?.expect("unlimited allowance"))
}

/// `None` when `allowance` runs out before the normal form is reached.
fn weak_normal_form(
    f: &Polynomial,
    basis: &[Polynomial],
    budget: &Budget,
    allowance: &mut u64,
) -> Result<Option<Polynomial>> {
    weak_normal_form_within(f, basis, budget, allowance, usize::MAX, u64::MAX)
}

fn weak_normal_form_within(
    f: &Polynomial,
    basis: &[Polynomial],
    budget: &Budget,
    allowance: &mut u64,
    max_terms: usize,
    max_bits: u64,
) -> Result<Option<Polynomial>> {
    let mut h = f.clone();
    let mut extra: Vec<(Polynomial, u32)> = Vec::new();
    let fixed: Vec<u32> = basis.iter().map(ecart).collect();
    let mut steps = 0u64;
    while let Some(lm) = h.leading_monomial().cloned() {
        let mut best: Option<(&Polynomial, u32)> = None;
        for (g, &e) in basis.iter().zip(&fixed).chain(extra.iter().map(|(g, e)| (g, e))) {
            if g.leading_monomial().unwrap().divides(&lm) && best.is_none_or(|(_, be)| e < be) {
                best = Some((g, e));
            }
        }
        let Some((g, eg)) = best else { break };
        if *allowance == 0 {
            return Ok(None);
        }
        *allowance -= 1;
        let g = g.clone();
        let eh = ecart(&h);
        if eg > eh {
            extra.push((h.clone(), eh));
        }
        h = s_polynomial(&h, &g);
        steps += 1;
        if steps.is_multiple_of(64) {
            if h.degree().unwrap_or(0) > budget.limits.max_degree {
                return Err(Error::ResourceLimit { kind: LimitKind::Degree, cap: budget.limits.max_degree as u64 });
            }
            if steps > budget.limits.max_pairs.saturating_mul(16) {
                return Err(Error::ResourceLimit { kind: LimitKind::Pairs, cap: budget.limits.max_pairs });
            }
        }
        let bits = h.coefficient_bits();
        if h.terms().len() > max_terms || bits > max_bits {
            return Ok(None);
        }
        if bits > budget.limits.max_bits {
            return Err(Error::ResourceLimit { kind: LimitKind::CoefficientBits, cap: budget.limits.max_bits });
        }
    }
    Ok(Some(h))
}

/// If the monomial content of `h` is one of its terms, `h` is that monomial
/// times a unit of the local ring and may be replaced by the monomial.
fn strip_unit(h: &Polynomial) -> Polynomial {
    let Some((first, _)) = h.terms().first() else { return h.clone() };
    let mut content = first.exponents().to_vec();
    for (m, _) in h.terms() {
        for (c, e) in content.iter_mut().zip(m.exponents()) {
            *c = (*c).min(*e);
        }
    }
    let content = Monomial::from_exponents(content);
    if h.terms().len() > 1 && h.terms().iter().any(|(m, _)| *m == content) {
        Polynomial::monomial(h.ring(), content, rat(1))
    } else {
        h.clone()
    }
}

/// Standard basis of the ideal generated by `gens` with respect to the local
/// order of `ring`. The result is minimal (no leading monomial divides another)
/// and monic; it is not tail-reduced.
pub fn mora_standard_basis(gens: &[Polynomial], ring: &Ring, budget: &Budget) -> Result<Vec<Polynomial>> {
    if ring.order().is_global() {
        return Err(Error::Invalid(format!("order {} is not local", ring.order())));
    }
    for g in gens {
        ring.check_same(g.ring())?;
    }
    match tangent_cone(gens, ring, budget)? {
        Some(basis) => Ok(basis),
        None => lazard(gens, ring, budget),
    }
}

enum Found {
    Unit,
    Element(Polynomial),
}

fn classify(h: Polynomial) -> Option<Found> {
    if h.is_zero() {
        return None;
    }
    let h = strip_unit(&h);
    if h.leading_monomial().unwrap().is_one() {
        Some(Found::Unit)
    } else {
        Some(Found::Element(h.monic()))
    }
}

fn capped(f: &Polynomial, basis: &[Polynomial], budget: &Budget, allowance: &mut u64) -> Result<Option<Polynomial>> {
    weak_normal_form_within(f, basis, budget, allowance, MORA_MAX_TERMS, MORA_MAX_BITS)
}

/// Mora's algorithm; `None` once the step allowance is spent.
fn tangent_cone(gens: &[Polynomial], ring: &Ring, budget: &Budget) -> Result<Option<Vec<Polynomial>>> {
    let mut allowance = MORA_STEP_ALLOWANCE;
    let mut polys: Vec<Polynomial> = Vec::new();
    let mut sugars: Vec<u32> = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let mut input: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    input.sort_by_key(|g| g.degree());
    for g in input {
        let current: Vec<Polynomial> = active.iter().map(|&k| polys[k].clone()).collect();
        let Some(h) = capped(&g, &current, budget, &mut allowance)? else { return Ok(None) };
        match classify(h) {
            None => continue,
            Some(Found::Unit) => return Ok(Some(vec![Polynomial::one(ring)])),
            Some(Found::Element(h)) => {
                polys.push(h);
                sugars.push(g.degree().unwrap_or(0));
                update(&polys, &sugars, &mut active, &mut pairs, polys.len() - 1, false);
            }
        }
    }

    let mut processed = 0u64;
    while !pairs.is_empty() {
        let pair = pick_pair(&mut pairs, ring);
        count_pair(&mut processed, budget)?;
        let s = s_polynomial(&polys[pair.i], &polys[pair.j]);
        let current: Vec<Polynomial> = active.iter().map(|&k| polys[k].clone()).collect();
        let Some(h) = capped(&s, &current, budget, &mut allowance)? else { return Ok(None) };
        match classify(h) {
            None => continue,
            Some(Found::Unit) => return Ok(Some(vec![Polynomial::one(ring)])),
            Some(Found::Element(h)) => {
                let sugar = pair.sugar.max(h.degree().unwrap_or(0));
                polys.push(h);
                sugars.push(sugar);
                update(&polys, &sugars, &mut active, &mut pairs, polys.len() - 1, false);
            }
        }
    }
    Ok(Some(minimalize(active.iter().map(|&k| polys[k].clone()).collect(), ring)))
}

/// Lazard's method: the dehomogenized Gröbner basis of the homogenized
/// generators under the degree-then-local order is a local standard basis.
fn lazard(gens: &[Polynomial], ring: &Ring, budget: &Budget) -> Result<Vec<Polynomial>> {
    let n = ring.nvars();
    let hring = ring.extended(&["@h"], ring.order().clone().homogenize());
    let homogeneous: Vec<Polynomial> = gens.iter().map(|g| homogenize(g, &hring)).collect();
    let basis = buchberger(&homogeneous, &hring, budget)?;
    let mut all = Vec::with_capacity(basis.len());
    for b in &basis {
        let terms = b.terms().iter().map(|(m, c)| (Monomial::from_exponents(m.exponents()[..n].to_vec()), c.clone()));
        match classify(Polynomial::from_terms(ring, terms)) {
            None => {}
            Some(Found::Unit) => return Ok(vec![Polynomial::one(ring)]),
            Some(Found::Element(h)) => all.push(h),
        }
    }
    Ok(minimalize(all, ring))
}

/// Keeps elements whose leading monomial is not divisible by another's.
/// Divisors are larger in a local order, so the scan runs from the top.
fn minimalize(mut all: Vec<Polynomial>, ring: &Ring) -> Vec<Polynomial> {
    all.sort_by(|a, b| ring.cmp(b.leading_monomial().unwrap(), a.leading_monomial().unwrap()));
    let mut out: Vec<Polynomial> = Vec::new();
    for g in all {
        let lg = g.leading_monomial().unwrap();
        if !out.iter().any(|m| m.leading_monomial().unwrap().divides(lg)) {
            out.push(g);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_polynomial, MonomialOrder};

    fn local() -> Ring {
        Ring::new(["x", "y", "z"], MonomialOrder::local())
    }

    fn leading(basis: &[Polynomial]) -> Vec<Vec<u32>> {
        let mut v: Vec<_> = basis.iter().map(|p| p.leading_monomial().unwrap().exponents().to_vec()).collect();
        v.sort();
        v
    }

    #[test]
    fn unit_multiples_collapse_to_monomials() {
        let r = local();
        let p = parse_polynomial("z*(3 - 2*x*y + y^2*z)", &r).unwrap();
        assert_eq!(strip_unit(&p), parse_polynomial("z", &r).unwrap());
        let q = parse_polynomial("z + x^2", &r).unwrap();
        assert_eq!(strip_unit(&q), q);
    }

    #[test]
    fn both_algorithms_agree() {
        let r = local();
        let budget = Budget::default();
        for src in [
            ["x^2 + y^3", "x*y", "z - x^2"],
            ["x - x^2", "y^2 - y*z", "z^3"],
            ["x^2*z + y^3", "y^2 - x*z", "x^3 - z^2"],
        ] {
            let gens: Vec<Polynomial> = src.iter().map(|s| parse_polynomial(s, &r).unwrap()).collect();
            let mora = tangent_cone(&gens, &r, &budget).unwrap().unwrap();
            let laz = lazard(&gens, &r, &budget).unwrap();
            assert_eq!(leading(&mora), leading(&laz), "{src:?}");
        }
    }

    #[test]
    fn unit_factors_do_not_stall() {
        let r = local();
        let budget = Budget::default();
        let gens: Vec<Polynomial> = [
            "(6*x*z^2 + 6*y*z^2 - 3*z^3 - 3*z^2)*(1 + x - 2*y)",
            "(2*x^2*y^2 + 3*x)*(1 + 2*z)",
            "-4*x^3*y*z + 2*x^3*y + 6*y*z^3",
        ]
        .iter()
        .map(|s| parse_polynomial(s, &r).unwrap())
        .collect();
        let basis = mora_standard_basis(&gens, &r, &budget).unwrap();
        assert!(!basis.is_empty());
    }

    fn arb_poly(r: Ring) -> impl proptest::strategy::Strategy<Value = Polynomial> {
        use proptest::prelude::*;
        proptest::collection::vec(((0u32..=2, 0u32..=2, 0u32..=2), -3i64..=3), 1..=3).prop_map(move |terms| {
            Polynomial::from_terms(&r, terms.into_iter().map(|((a, b, c), k)| (Monomial::from_exponents(vec![a, b, c]), rat(k))))
        })
    }

    proptest::proptest! {
        #![proptest_config(proptest::test_runner::Config::with_cases(64))]
        #[test]
        fn mora_and_lazard_share_leading_ideal(gens in proptest::collection::vec(arb_poly(local()), 1..=4)) {
            let r = local();
            let budget = Budget::default();
            if let Some(mora) = tangent_cone(&gens, &r, &budget).unwrap() {
                let laz = lazard(&gens, &r, &budget).unwrap();
                proptest::prop_assert_eq!(leading(&mora), leading(&laz));
            }
        }
    }
}
