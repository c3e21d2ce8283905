use std::cmp::Ordering;

use super::Budget;
use crate::error::{Error, LimitKind, Result};
use crate::poly::{Monomial, Polynomial, Ring};

#[derive(Debug, Clone)]
pub(crate) struct Pair {
    pub i: usize,
    pub j: usize,
    pub lcm: Monomial,
    pub sugar: u32,
}

pub(crate) fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (lf, lg) = (f.leading_monomial().unwrap(), g.leading_monomial().unwrap());
    let lcm = lf.lcm(lg);
    let cf = f.leading_coefficient().unwrap().recip();
    let cg = g.leading_coefficient().unwrap().recip();
    let a = f.mul_term(&lcm.div(lf), &cf);
    a.sub_mul_term(&cg, &lcm.div(lg), g)
}

pub(crate) fn pick_pair(pairs: &mut Vec<Pair>, ring: &Ring) -> Pair {
    let global = ring.order().is_global();
    let mut best = 0;
    for k in 1..pairs.len() {
        let (a, b) = (&pairs[k], &pairs[best]);
        let ord = if global {
            ring.cmp(&a.lcm, &b.lcm).then_with(|| a.sugar.cmp(&b.sugar))
        } else {
            a.sugar.cmp(&b.sugar).then_with(|| a.lcm.degree().cmp(&b.lcm.degree()))
        }
            .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)));
        if ord == Ordering::Less {
            best = k;
        }
    }
    pairs.swap_remove(best)
}

/// Gebauer–Möller update: adds the pairs of the new element `h` (index `hi`)
/// and drops redundant old pairs and basis elements.
pub(crate) fn update(
    polys: &[Polynomial],
    sugars: &[u32],
    active: &mut Vec<usize>,
    pairs: &mut Vec<Pair>,
    hi: usize,
    drop_redundant: bool,
) {
    let h = &polys[hi];
    let lh = h.leading_monomial().unwrap();
    let cand: Vec<(usize, Monomial)> =
        active.iter().map(|&g| (g, lh.lcm(polys[g].leading_monomial().unwrap()))).collect();

    // Chain criterion among new pairs.
    let mut keep = vec![true; cand.len()];
    for a in 0..cand.len() {
        let lg = polys[cand[a].0].leading_monomial().unwrap();
        if lh.is_coprime(lg) {
            continue;
        }
        for b in 0..cand.len() {
            if a == b || !keep[b] {
                continue;
            }
            if cand[b].1.divides(&cand[a].1) && (cand[b].1 != cand[a].1 || b < a) {
                keep[a] = false;
                break;
            }
        }
    }
    let mut new_pairs = Vec::new();
    for (k, (g, lcm)) in cand.iter().enumerate() {
        if !keep[k] {
            continue;
        }
        let lg = polys[*g].leading_monomial().unwrap();
        if lh.is_coprime(lg) {
            continue;
        }
        let sugar = (sugars[hi] + lcm.degree() - lh.degree()).max(sugars[*g] + lcm.degree() - lg.degree());
        new_pairs.push(Pair { i: *g, j: hi, lcm: lcm.clone(), sugar });
    }

    pairs.retain(|p| {
        if !lh.divides(&p.lcm) {
            return true;
        }
        let li = lh.lcm(polys[p.i].leading_monomial().unwrap());
        let lj = lh.lcm(polys[p.j].leading_monomial().unwrap());
        li == p.lcm || lj == p.lcm
    });
    pairs.extend(new_pairs);

    if drop_redundant {
        active.retain(|&g| !lh.divides(polys[g].leading_monomial().unwrap()));
    }
    active.push(hi);
}

/// Full reduction of `p` modulo `basis` (global order). Returns the remainder.
pub(crate) fn reduce(p: &Polynomial, basis: &[&Polynomial]) -> Polynomial {
    let ring = p.ring().clone();
    let mut rest = p.clone();
    let mut rem: Vec<(Monomial, crate::poly::Rational)> = Vec::new();
    'outer: while let Some(lm) = rest.leading_monomial().cloned() {
        for g in basis {
            let lg = g.leading_monomial().unwrap();
            if lg.divides(&lm) {
                let c = rest.leading_coefficient().unwrap() / g.leading_coefficient().unwrap();
                rest = rest.sub_mul_term(&c, &lm.div(lg), g);
                continue 'outer;
            }
        }
        rem.push(rest.pop_leading().unwrap());
    }
    Polynomial::from_sorted_terms(&ring, rem)
}

fn check_limits(h: &Polynomial, budget: &Budget) -> Result<()> {
    let l = &budget.limits;
    if h.degree().unwrap_or(0) > l.max_degree {
        return Err(Error::ResourceLimit { kind: LimitKind::Degree, cap: l.max_degree as u64 });
    }
    if h.coefficient_bits() > l.max_bits {
        return Err(Error::ResourceLimit { kind: LimitKind::CoefficientBits, cap: l.max_bits });
    }
    Ok(())
}

pub(crate) fn count_pair(processed: &mut u64, budget: &Budget) -> Result<()> {
    *processed += 1;
    budget.note_pair();
    if *processed > budget.limits.max_pairs {
        return Err(Error::ResourceLimit { kind: LimitKind::Pairs, cap: budget.limits.max_pairs });
    }
    Ok(())
}

/// Active basis elements sorted ascending by leading monomial; trying small
/// divisors first keeps coefficient growth down.
fn reducers<'a>(polys: &'a [Polynomial], active: &[usize], ring: &Ring) -> Vec<&'a Polynomial> {
    let mut out: Vec<&Polynomial> = active.iter().map(|&k| &polys[k]).collect();
    out.sort_by(|a, b| ring.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    out
}

/// Reduced Gröbner basis of the ideal generated by `gens` in `ring` (global order).
///
/// Orders that do not refine total degree are handled by homogenizing, computing
/// under the homogenized order, and dehomogenizing.
pub fn buchberger(gens: &[Polynomial], ring: &Ring, budget: &Budget) -> Result<Vec<Polynomial>> {
    if !ring.order().is_global() {
        return Err(Error::NotGlobalOrder(ring.order().to_string()));
    }
    for g in gens {
        ring.check_same(g.ring())?;
    }
    if ring.order().is_degree_compatible() {
        return buchberger_direct(gens, ring, budget);
    }
    let n = ring.nvars();
    let hring = ring.extended(&["@h"], ring.order().clone().homogenize());
    let homogeneous: Vec<Polynomial> = gens.iter().map(|g| homogenize(g, &hring)).collect();
    let basis = buchberger_direct(&homogeneous, &hring, budget)?;
    let mut out = Vec::with_capacity(basis.len());
    for b in &basis {
        let terms = b.terms().iter().map(|(m, c)| (Monomial::from_exponents(m.exponents()[..n].to_vec()), c.clone()));
        let d = Polynomial::from_terms(ring, terms);
        if d.is_constant() {
            return Ok(vec![Polynomial::one(ring)]);
        }
        out.push(d);
    }
    Ok(interreduce(out))
}

pub(crate) fn homogenize(g: &Polynomial, hring: &Ring) -> Polynomial {
    let d = g.degree().unwrap_or(0);
    let terms = g.terms().iter().map(|(m, c)| {
        let mut e = m.exponents().to_vec();
        e.push(d - m.degree());
        (Monomial::from_exponents(e), c.clone())
    });
    Polynomial::from_terms(hring, terms)
}

fn buchberger_direct(gens: &[Polynomial], ring: &Ring, budget: &Budget) -> Result<Vec<Polynomial>> {
    let mut polys: Vec<Polynomial> = Vec::new();
    let mut sugars: Vec<u32> = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let mut input: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if input.iter().any(|g| g.is_constant()) {
        return Ok(vec![Polynomial::one(ring)]);
    }
    // Generators enter unreduced, smallest leading monomial first. Reducing
    // them on entry changes the pair sequence and can cause severe
    // coefficient swell.
    input.sort_by(|a, b| ring.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    for g in input {
        check_limits(&g, budget)?;
        sugars.push(g.degree().unwrap_or(0));
        polys.push(g.monic());
        update(&polys, &sugars, &mut active, &mut pairs, polys.len() - 1, true);
    }

    let mut processed = 0u64;
    while !pairs.is_empty() {
        let pair = pick_pair(&mut pairs, ring);
        count_pair(&mut processed, budget)?;
        let s = s_polynomial(&polys[pair.i], &polys[pair.j]);
        let basis = reducers(&polys, &active, ring);
        let h = reduce(&s, &basis);
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return Ok(vec![Polynomial::one(ring)]);
        }
        check_limits(&h, budget)?;
        polys.push(h.monic());
        sugars.push(pair.sugar);
        update(&polys, &sugars, &mut active, &mut pairs, polys.len() - 1, true);
    }

    let basis: Vec<Polynomial> = active.iter().map(|&k| polys[k].clone()).collect();
    Ok(interreduce(basis))
}

/// Minimalizes and fully reduces a Gröbner basis; output is monic and sorted
/// ascending by leading monomial.
pub(crate) fn interreduce(mut basis: Vec<Polynomial>) -> Vec<Polynomial> {
    if basis.is_empty() {
        return basis;
    }
    let ring = basis[0].ring().clone();
    basis.sort_by(|a, b| ring.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    let mut minimal: Vec<Polynomial> = Vec::new();
    for g in basis {
        let lg = g.leading_monomial().unwrap();
        if minimal.iter().any(|m| m.leading_monomial().unwrap().divides(lg)) {
            continue;
        }
        minimal.push(g);
    }
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<&Polynomial> = minimal.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, p)| p).collect();
        let mut tail = minimal[k].clone();
        let lead = tail.pop_leading().unwrap();
        let tail = reduce(&tail, &others);
        out.push(Polynomial::from_sorted_terms(&ring, std::iter::once(lead).chain(tail.terms().iter().cloned()).collect()).monic());
    }
    out
}
