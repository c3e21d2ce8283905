use germforge::ideal::{Budget, Ideal};
use germforge::poly::{rat, Monomial, MonomialOrder, Polynomial, Rational, Ring};
use proptest::prelude::*;

fn ring() -> Ring {
    Ring::new(["x", "y", "z"], MonomialOrder::degrevlex())
}

/// Exponent vectors of total degree at most 4.
fn exponents() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0u32..=4, 3).prop_filter("total degree at most 4", |e| e.iter().sum::<u32>() <= 4)
}

fn poly_strategy() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((exponents(), -3i64..=3), 1..=3).prop_map(|terms| {
        let r = ring();
        Polynomial::from_terms(&r, terms.into_iter().map(|(e, c)| (Monomial::from_exponents(e), rat(c))))
    })
}

fn ideal_strategy() -> impl Strategy<Value = Vec<Polynomial>> {
    prop::collection::vec(poly_strategy(), 1..=3)
}

fn ideal(gens: &[Polynomial]) -> Ideal {
    Ideal::new(&ring(), gens.iter().cloned()).unwrap()
}

fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (mf, mg) = (f.leading_monomial().unwrap(), g.leading_monomial().unwrap());
    let l = mf.lcm(mg);
    let cf = Rational::from_integer(1.into()) / f.leading_coefficient().unwrap();
    let cg = Rational::from_integer(1.into()) / g.leading_coefficient().unwrap();
    &f.mul_term(&l.div(mf), &cf) - &g.mul_term(&l.div(mg), &cg)
}

fn shuffled_copies() -> impl Strategy<Value = (Vec<Polynomial>, [Vec<Polynomial>; 3])> {
    ideal_strategy().prop_flat_map(|g| {
        let shuffle = || Just(g.clone()).prop_shuffle();
        (Just(g.clone()), [shuffle(), shuffle(), shuffle()])
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn groebner_basis_satisfies_buchberger_criterion(gens in ideal_strategy()) {
        let budget = Budget::default();
        let i = ideal(&gens);
        let basis = i.groebner(&budget).unwrap().clone();
        for g in &gens {
            prop_assert!(basis.normal_form(g, &budget).unwrap().is_zero());
        }
        for a in 0..basis.elements.len() {
            for b in a + 1..basis.elements.len() {
                let s = s_polynomial(&basis.elements[a], &basis.elements[b]);
                prop_assert!(basis.normal_form(&s, &budget).unwrap().is_zero());
            }
            prop_assert!(basis.elements[a].leading_coefficient().unwrap() == &rat(1));
        }
    }

    #[test]
    fn reduced_basis_ignores_generator_order((gens, shuffles) in shuffled_copies()) {
        let budget = Budget::default();
        let reference = ideal(&gens).groebner(&budget).unwrap().elements.clone();
        for s in &shuffles {
            let basis = ideal(s).groebner(&budget).unwrap().elements.clone();
            prop_assert_eq!(basis, reference.clone());
        }
    }

    #[test]
    fn saturation_is_idempotent(gens in ideal_strategy(), v in 0usize..3) {
        let budget = Budget::default();
        let f = Polynomial::var(&ring(), v).unwrap();
        let once = ideal(&gens).saturate_by(&f, &budget).unwrap();
        let twice = once.saturate_by(&f, &budget).unwrap();
        prop_assert!(once.same_ideal(&twice, &budget).unwrap());
        prop_assert!(once.contains_ideal(&ideal(&gens), &budget).unwrap());
    }

    #[test]
    fn finite_colength_iff_isolated_at_origin(gens in ideal_strategy()) {
        let budget = Budget::default();
        let i = ideal(&gens);
        let local = i.local_dimension_at_origin(&budget).unwrap().dimension;
        let colength = i.colength(&budget).unwrap();
        prop_assert_eq!(colength.is_some(), local <= 0);
        prop_assert_eq!(colength == Some(0), local < 0);
        let origin_on_variety = gens.iter().all(|g| g.constant_term() == rat(0));
        if origin_on_variety {
            prop_assert!(local >= 0);
        }
    }

}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn sums_and_intersections_are_monotone(a in ideal_strategy(), b in ideal_strategy()) {
        let budget = Budget::default();
        let (ia, ib) = (ideal(&a), ideal(&b));
        let sum = ia.sum(&ib).unwrap();
        prop_assert!(sum.contains_ideal(&ia, &budget).unwrap());
        prop_assert!(sum.dimension(&budget).unwrap().dimension <= ia.dimension(&budget).unwrap().dimension);
        let meet = ia.intersection(&ib, &budget).unwrap();
        prop_assert!(ia.contains_ideal(&meet, &budget).unwrap());
        prop_assert!(ib.contains_ideal(&meet, &budget).unwrap());
        let product: Vec<Polynomial> = a.iter().flat_map(|f| b.iter().map(move |g| f * g)).collect();
        prop_assert!(meet.contains_ideal(&ideal(&product), &budget).unwrap());
    }

    #[test]
    fn radical_contains_every_member(gens in ideal_strategy(), extra in poly_strategy()) {
        let budget = Budget::default();
        let i = ideal(&gens);
        let member = &gens[0] * &extra;
        prop_assert!(i.radical_contains(&member, &budget).unwrap());
        prop_assert!(i.radical_contains(&gens[0].pow(2), &budget).unwrap());
    }

    #[test]
    fn elimination_vanishes_on_image_points(
        f in poly_strategy(),
        pts in prop::collection::vec(-4i64..=4, 1..=4),
    ) {
        // graph of t -> (t, f(t, t, t)) in the plane (x, z), eliminating y
        let budget = Budget::default();
        let r = ring();
        let y = Polynomial::var(&r, 1).unwrap();
        let x = Polynomial::var(&r, 0).unwrap();
        let z = Polynomial::var(&r, 2).unwrap();
        let along = f.substitute(&[y.clone(), y.clone(), y.clone()]).unwrap();
        let graph = Ideal::new(&r, [&x - &y, &z - &along]).unwrap();
        let image = graph.eliminate(&[0, 2], &budget).unwrap();
        for g in image.generators() {
            prop_assert!(g.variables().iter().all(|&v| v != 1));
            for &t in &pts {
                let t: Rational = rat(t);
                let fz = along.evaluate(&[rat(0), t.clone(), rat(0)]).unwrap();
                prop_assert_eq!(g.evaluate(&[t, rat(0), fz]).unwrap(), rat(0));
            }
        }
    }

    #[test]
    fn standard_basis_generates_the_local_ideal(gens in ideal_strategy()) {
        let budget = Budget::default();
        let i = ideal(&gens);
        let sb = i.standard_basis(&budget).unwrap().clone();
        let origin_on_variety = gens.iter().all(|g| g.constant_term() == rat(0));
        prop_assert_eq!(sb.is_unit(), !origin_on_variety);
        if sb.is_unit() {
            return Ok(());
        }
        for g in &gens {
            prop_assert!(sb.normal_form(g, &budget).unwrap().is_zero(), "{} does not reduce to 0", g);
        }
    }

    #[test]
    fn colength_ignores_local_units(gens in ideal_strategy(), v in 0usize..3) {
        let budget = Budget::default();
        let r = ring();
        let unit = &Polynomial::one(&r) + &Polynomial::var(&r, v).unwrap();
        let scaled: Vec<Polynomial> = gens.iter().map(|g| g * &unit).collect();
        prop_assert_eq!(ideal(&gens).colength(&budget).unwrap(), ideal(&scaled).colength(&budget).unwrap());
    }
}
