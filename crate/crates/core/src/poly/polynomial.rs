use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ring::{Monomial, Ring};
use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Sparse polynomial over the rationals. Terms are kept sorted strictly
/// descending in the ring's monomial order with no zero coefficients.
#[derive(Clone)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<(Monomial, Rational)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        for (m, c) in &self.terms {
            m.hash(state);
            c.hash(state);
        }
    }
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &Ring, c: Rational) -> Self {
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.push((Monomial::one(ring.nvars()), c));
        }
        p
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, Rational::one())
    }

    pub fn var(ring: &Ring, index: usize) -> Result<Self> {
        if index >= ring.nvars() {
            return Err(Error::VariableIndex { index, count: ring.nvars() });
        }
        Ok(Polynomial { ring: ring.clone(), terms: vec![(Monomial::var(ring.nvars(), index), Rational::one())] })
    }

    pub fn monomial(ring: &Ring, m: Monomial, c: Rational) -> Self {
        debug_assert_eq!(m.nvars(), ring.nvars());
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.push((m, c));
        }
        p
    }

    /// Builds a canonical polynomial from arbitrary (possibly repeated, unsorted) terms.
    pub fn from_terms(ring: &Ring, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), ring.nvars());
            *acc.entry(m).or_insert_with(Rational::zero) += c;
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| ring.cmp(&b.0, &a.0));
        Polynomial { ring: ring.clone(), terms }
    }

    /// Wraps terms that are already canonical (sorted strictly descending, nonzero).
    pub(crate) fn from_sorted_terms(ring: &Ring, terms: Vec<(Monomial, Rational)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| ring.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial { ring: ring.clone(), terms }
    }

    pub(crate) fn pop_leading(&mut self) -> Option<(Monomial, Rational)> {
        if self.terms.is_empty() {
            None
        } else {
            Some(self.terms.remove(0))
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.terms.first().map(|t| &t.1)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Lowest total degree among the terms (order of vanishing at 0).
    pub fn low_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).min()
    }

    pub fn constant_term(&self) -> Rational {
        self.terms
            .iter()
            .find(|(m, _)| m.is_one())
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    /// Largest numerator-plus-denominator bit size among the coefficients.
    pub fn coefficient_bits(&self) -> u64 {
        self.terms.iter().map(|(_, c)| c.numer().bits() + c.denom().bits()).max().unwrap_or(0)
    }

    /// Indices of variables that occur in some term.
    pub fn variables(&self) -> Vec<usize> {
        let mut used = vec![false; self.ring.nvars()];
        for (m, _) in &self.terms {
            for i in m.support() {
                used[i] = true;
            }
        }
        used.iter().enumerate().filter(|(_, &u)| u).map(|(i, _)| i).collect()
    }

    fn merge(&self, other: &Polynomial, scale: Option<(&Monomial, &Rational)>) -> Polynomial {
        // self + c*m*other
        let ring = &self.ring;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut i = 0;
        let mut j = 0;
        let scaled = |t: &(Monomial, Rational)| -> (Monomial, Rational) {
            match scale {
                Some((m, c)) => (t.0.mul(m), &t.1 * c),
                None => t.clone(),
            }
        };
        let mut pending = other.terms.first().map(scaled);
        while i < self.terms.len() || pending.is_some() {
            match (&self.terms.get(i), &pending) {
                (Some(a), Some(b)) => match ring.cmp(&a.0, &b.0) {
                    Ordering::Greater => {
                        out.push((*a).clone());
                        i += 1;
                    }
                    Ordering::Less => {
                        out.push(pending.take().unwrap());
                        j += 1;
                        pending = other.terms.get(j).map(scaled);
                    }
                    Ordering::Equal => {
                        let c = &a.1 + &b.1;
                        if !c.is_zero() {
                            out.push((a.0.clone(), c));
                        }
                        i += 1;
                        j += 1;
                        pending = other.terms.get(j).map(scaled);
                    }
                },
                (Some(a), None) => {
                    out.push((*a).clone());
                    i += 1;
                }
                (None, Some(_)) => {
                    out.push(pending.take().unwrap());
                    j += 1;
                    pending = other.terms.get(j).map(scaled);
                }
                (None, None) => unreachable!(),
            }
        }
        Polynomial { ring: ring.clone(), terms: out }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check_same(&other.ring)?;
        Ok(self.merge(other, None))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check_same(&other.ring)?;
        let one = Monomial::one(self.ring.nvars());
        Ok(self.merge(other, Some((&one, &-Rational::one()))))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check_same(&other.ring)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.mul_term(m, c);
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_term(m, c);
        }
        let mut acc: HashMap<Monomial, Rational> = HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                *acc.entry(ma.mul(mb)).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| self.ring.cmp(&b.0, &a.0));
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// `self * c * m`. Multiplying by a monomial preserves the term order.
    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(t, k)| (t.mul(m), k * c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect() }
    }

    /// `self - c * m * other`, the elementary reduction step.
    pub fn sub_mul_term(&self, c: &Rational, m: &Monomial, other: &Polynomial) -> Polynomial {
        debug_assert!(self.ring == other.ring);
        let neg = -c;
        self.merge(other, Some((m, &neg)))
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coefficient() {
            Some(c) if !c.is_one() => self.scale(&c.recip()),
            _ => self.clone(),
        }
    }

    pub fn partial_derivative(&self, index: usize) -> Result<Polynomial> {
        let n = self.ring.nvars();
        if index >= n {
            return Err(Error::VariableIndex { index, count: n });
        }
        let terms = self.terms.iter().filter(|(m, _)| m.exponents()[index] > 0).map(|(m, c)| {
            let mut e = m.exponents().to_vec();
            let k = e[index];
            e[index] -= 1;
            (Monomial::from_exponents(e), c * Rational::from_integer(BigInt::from(k)))
        });
        Ok(Polynomial::from_terms(&self.ring, terms))
    }

    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        let n = self.ring.nvars();
        if point.len() != n {
            return Err(Error::Arity { expected: n, got: point.len() });
        }
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    v *= num_traits::pow(point[i].clone(), e as usize);
                }
            }
            total += v;
        }
        Ok(total)
    }

    /// Replaces variable `i` by `images[i]`; every image must live in the same target ring.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        let n = self.ring.nvars();
        if images.len() != n {
            return Err(Error::Arity { expected: n, got: images.len() });
        }
        let Some(first) = images.first() else {
            return Err(Error::Arity { expected: n, got: 0 });
        };
        let target = first.ring.clone();
        for im in images {
            target.check_same(&im.ring)?;
        }
        let mut powers: Vec<Vec<Polynomial>> = images.iter().map(|p| vec![Polynomial::one(&target), p.clone()]).collect();
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(&target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul_unchecked(&images[i]);
                    powers[i].push(next);
                }
                term = term.mul_unchecked(&powers[i][e as usize]);
            }
            for (tm, tc) in term.terms {
                *acc.entry(tm).or_insert_with(Rational::zero) += tc;
            }
        }
        Ok(Polynomial::from_terms(&target, acc))
    }

    /// Same polynomial viewed in a ring with the same variables but another order.
    pub fn to_ring(&self, ring: &Ring) -> Result<Polynomial> {
        if !self.ring.same_vars(ring) {
            return Err(Error::RingMismatch(format!("{} vs {}", self.ring, ring)));
        }
        if &self.ring == ring {
            return Ok(self.clone());
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| ring.cmp(&b.0, &a.0));
        Ok(Polynomial { ring: ring.clone(), terms })
    }

    /// Moves the polynomial into `target`, sending variable `i` to `var_map[i]`.
    pub fn map_vars(&self, target: &Ring, var_map: &[usize]) -> Result<Polynomial> {
        let n = self.ring.nvars();
        if var_map.len() != n {
            return Err(Error::Arity { expected: n, got: var_map.len() });
        }
        let tn = target.nvars();
        if let Some(&bad) = var_map.iter().find(|&&j| j >= tn) {
            return Err(Error::VariableIndex { index: bad, count: tn });
        }
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = vec![0u32; tn];
            for (i, &k) in m.exponents().iter().enumerate() {
                e[var_map[i]] += k;
            }
            (Monomial::from_exponents(e), c.clone())
        });
        Ok(Polynomial::from_terms(target, terms))
    }

    /// Translates the polynomial so that `point` moves to the origin: `p(x + point)`.
    pub fn translate(&self, point: &[Rational]) -> Result<Polynomial> {
        let n = self.ring.nvars();
        if point.len() != n {
            return Err(Error::Arity { expected: n, got: point.len() });
        }
        let images: Vec<Polynomial> = (0..n)
            .map(|i| {
                Polynomial::var(&self.ring, i).unwrap().merge(&Polynomial::constant(&self.ring, point[i].clone()), None)
            })
            .collect();
        self.substitute(&images)
    }

    /// Makes the coefficients integral with content 1 and a positive leading coefficient.
    pub fn primitive(&self) -> Polynomial {
        use num_integer::Integer;
        if self.is_zero() {
            return self.clone();
        }
        let mut lcm = BigInt::one();
        for (_, c) in &self.terms {
            lcm = lcm.lcm(c.denom());
        }
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            let v = c.numer() * (&lcm / c.denom());
            g = g.gcd(&v);
        }
        let mut f = Rational::new(lcm, g);
        if self.terms[0].1.is_negative() {
            f = -f;
        }
        self.scale(&f)
    }
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("polynomial ring mismatch")
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("polynomial ring mismatch")
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("polynomial ring mismatch")
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, c: &Rational) -> fmt::Result {
    if c.is_integer() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let abs = c.abs();
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut need_star = false;
            if m.is_one() || !abs.is_one() {
                write_rational(f, &abs)?;
                need_star = true;
            }
            for i in m.support() {
                if need_star {
                    write!(f, "*")?;
                }
                write!(f, "{}", self.ring.var_name(i))?;
                let e = m.exponents()[i];
                if e > 1 {
                    write!(f, "^{e}")?;
                }
                need_star = true;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
