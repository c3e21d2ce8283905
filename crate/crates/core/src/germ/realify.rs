//! Complex germs as real germs in twice as many variables.
//!
//! Milnor sets are defined through the Hermitian distance, which is not a
//! complex polynomial. Writing each coordinate as `x = x_re + i x_im` turns
//! a holomorphic map `C^m -> C^p` into a real polynomial map `R^2m -> R^2p`
//! with the same Milnor set, and its real rank is twice the complex rank.

use crate::error::Result;
use crate::ideal::Ideal;
use crate::poly::{Polynomial, Ring};

use super::{MapGerm, Stratification, Stratum};

/// Coordinates `x_re, x_im` for each variable `x`, interleaved.
pub fn realify_ring(ring: &Ring) -> Ring {
    let names = ring.vars().iter().flat_map(|v| [format!("{v}_re"), format!("{v}_im")]);
    Ring::new(names, ring.order().clone())
}

type Pair = (Polynomial, Polynomial);

fn mul(a: &Pair, b: &Pair) -> Pair {
    (&(&a.0 * &b.0) - &(&a.1 * &b.1), &(&a.0 * &b.1) + &(&a.1 * &b.0))
}

/// Real and imaginary parts of `p` over `realify_ring(p.ring())`.
pub fn realify_polynomial(p: &Polynomial, real: &Ring) -> Result<Pair> {
    let zero = Polynomial::zero(real);
    let coords: Vec<Pair> = (0..p.ring().nvars())
        .map(|j| Ok((Polynomial::var(real, 2 * j)?, Polynomial::var(real, 2 * j + 1)?)))
        .collect::<Result<_>>()?;
    let mut out = (zero.clone(), zero.clone());
    for (m, c) in p.terms() {
        let mut term = (Polynomial::constant(real, c.clone()), zero.clone());
        for (j, &e) in m.exponents().iter().enumerate() {
            for _ in 0..e {
                term = mul(&term, &coords[j]);
            }
        }
        out = (&out.0 + &term.0, &out.1 + &term.1);
    }
    Ok(out)
}

fn realify_all(polys: &[Polynomial], real: &Ring) -> Result<Vec<Polynomial>> {
    let mut out = Vec::with_capacity(2 * polys.len());
    for p in polys {
        let (re, im) = realify_polynomial(p, real)?;
        out.push(re);
        out.push(im);
    }
    Ok(out)
}

/// Real zero set of `realify(a)` is the complex zero set of `a`.
pub fn realify_ideal(a: &Ideal) -> Result<Ideal> {
    let real = realify_ring(a.ring());
    Ideal::new(&real, realify_all(a.generators(), &real)?)
}

pub fn realify(f: &MapGerm) -> Result<MapGerm> {
    let real = realify_ring(f.source());
    MapGerm::new(f.label(), &real, &realify_ring(f.target()), realify_all(f.components(), &real)?)
}

/// Same strata, as real manifolds: dimensions and ranks double.
pub fn realify_stratification(s: &Stratification) -> Result<Stratification> {
    let ring = realify_ring(&s.ring);
    let strata = s
        .strata
        .iter()
        .map(|t| {
            Ok(Stratum {
                label: t.label.clone(),
                closure: realify_ideal(&t.closure)?,
                constraints: realify_all(&t.constraints, &ring)?,
                frontiers: t.frontiers.iter().map(realify_ideal).collect::<Result<_>>()?,
                dim: if t.dim < 0 { t.dim } else { 2 * t.dim },
                ranks: t.ranks.iter().map(|(k, r)| (k.clone(), 2 * r)).collect(),
            })
        })
        .collect::<Result<_>>()?;
    Ok(Stratification { ring, strata })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::Budget;
    use crate::poly::{parse_polynomial, MonomialOrder};

    #[test]
    fn squares_split_into_real_and_imaginary_parts() {
        let r = Ring::new(["z", "w"], MonomialOrder::degrevlex());
        let real = realify_ring(&r);
        let (re, im) = realify_polynomial(&parse_polynomial("z^2 + w", &r).unwrap(), &real).unwrap();
        assert_eq!(re, parse_polynomial("z_re^2 - z_im^2 + w_re", &real).unwrap());
        assert_eq!(im, parse_polynomial("2*z_re*z_im + w_im", &real).unwrap());
    }

    #[test]
    fn isotropic_lines_are_complex_points_only() {
        let budget = Budget::default();
        let r = Ring::new(["y", "z"], MonomialOrder::degrevlex());
        let a = Ideal::new(&r, [parse_polynomial("y^2 + z^2", &r).unwrap()]).unwrap();
        assert_eq!(a.local_dimension_at_origin(&budget).unwrap().dimension, 1);
        // two complex lines are two real planes in R^4
        assert_eq!(realify_ideal(&a).unwrap().local_dimension_at_origin(&budget).unwrap().dimension, 2);
    }
}
