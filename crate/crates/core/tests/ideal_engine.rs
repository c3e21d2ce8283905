use germforge::ideal::{Budget, Ideal};
use germforge::poly::{parse_polynomial, rat, MonomialOrder, Polynomial, Ring};

fn ring(vars: &[&str]) -> Ring {
    Ring::new(vars.iter().copied(), MonomialOrder::degrevlex())
}

fn p(s: &str, r: &Ring) -> Polynomial {
    parse_polynomial(s, r).unwrap()
}

fn ideal(gens: &[&str], r: &Ring) -> Ideal {
    Ideal::new(r, gens.iter().map(|g| p(g, r))).unwrap()
}

fn same(a: &Ideal, b: &Ideal, budget: &Budget) -> bool {
    a.same_ideal(b, budget).unwrap()
}

#[test]
fn buchberger_examples() {
    let budget = Budget::default();
    let r = ring(&["x", "y"]);
    let gb = ideal(&["x^2+y^2", "x^2-y^2"], &r).groebner(&budget).unwrap().elements.clone();
    let expected: Vec<Polynomial> = vec![p("y^2", &r), p("x^2", &r)];
    assert_eq!(gb.len(), 2);
    for e in &expected {
        assert!(gb.contains(e), "{gb:?}");
    }
    let unit = ideal(&["1"], &r).groebner(&budget).unwrap().elements.clone();
    assert_eq!(unit, vec![Polynomial::one(&r)]);

    // twisted cubic under lex z > y > x
    let lex = Ring::new(["x", "y", "z"], MonomialOrder::lex().with_perm(vec![2, 1, 0]));
    let tc = ideal(&["y-x^2", "z-x^3"], &lex);
    let b = tc.groebner(&budget).unwrap();
    assert!(b.elements.contains(&p("z-x^3", &lex)));
    assert!(b.elements.contains(&p("y-x^2", &lex)));
    assert!(tc.contains(&p("z^2-y^3", &lex), &budget).unwrap());
}

#[test]
fn normal_form_examples() {
    let budget = Budget::default();
    let r = ring(&["x", "y"]);
    let b = ideal(&["x^2", "y^2"], &r);
    assert!(b.normal_form(&p("x^2+y^2", &r), &budget).unwrap().is_zero());
    let b = ideal(&["x^2"], &r);
    assert_eq!(b.normal_form(&p("x+1", &r), &budget).unwrap(), p("x+1", &r));
    let b = ideal(&["x^2-y", "y^2-x"], &r);
    assert_eq!(b.normal_form(&p("x y", &r), &budget).unwrap(), p("x y", &r));
}

#[test]
fn mora_examples() {
    let budget = Budget::default();
    let r = ring(&["x", "y"]);
    let i = ideal(&["x - x^2"], &r);
    let lm = i.standard_basis(&budget).unwrap().leading_monomials();
    assert_eq!(lm.len(), 1);
    assert_eq!(lm[0].exponents(), &[1, 0]);

    let i = ideal(&["x^2+y^3"], &r);
    let lm = i.standard_basis(&budget).unwrap().leading_monomials();
    assert_eq!(lm[0].exponents(), &[2, 0]);

    let i = ideal(&["3x^2", "2y"], &r);
    assert_eq!(i.colength(&budget).unwrap(), Some(2));
}

#[test]
fn sum_examples() {
    let budget = Budget::default();
    let r = ring(&["x", "y", "z"]);
    assert!(same(&ideal(&["x"], &r).sum(&ideal(&["y"], &r)).unwrap(), &ideal(&["x", "y"], &r), &budget));
    let a = ideal(&["x y", "z^2"], &r);
    assert!(same(&a.sum(&Ideal::zero(&r)).unwrap(), &a, &budget));
    let s = ideal(&["z"], &r).sum(&ideal(&["x", "y"], &r)).unwrap();
    assert_eq!(s.dimension(&budget).unwrap().dimension, 0);
}

#[test]
fn intersection_examples() {
    let budget = Budget::default();
    let r = ring(&["x", "y", "z"]);
    let i = ideal(&["x"], &r).intersection(&ideal(&["y"], &r), &budget).unwrap();
    assert!(same(&i, &ideal(&["x y"], &r), &budget));
    let a = ideal(&["x^2 - y", "x z"], &r);
    assert!(same(&a.intersection(&a, &budget).unwrap(), &a, &budget));
    let i = ideal(&["x", "y"], &r).intersection(&ideal(&["z"], &r), &budget).unwrap();
    let expected = ideal(&["x z", "y z"], &r);
    assert!(i.contains_ideal(&expected, &budget).unwrap());
    assert!(expected.contains_ideal(&i, &budget).unwrap());
}

#[test]
fn quotient_examples() {
    let budget = Budget::default();
    let r = ring(&["x", "y"]);
    let q = ideal(&["x y"], &r).quotient(&p("x", &r), &budget).unwrap();
    assert!(same(&q, &ideal(&["y"], &r), &budget));
    let a = ideal(&["x^3", "y^2 x"], &r);
    assert!(same(&a.quotient(&Polynomial::one(&r), &budget).unwrap(), &a, &budget));
    let q = ideal(&["x^2", "x y"], &r).quotient(&p("x", &r), &budget).unwrap();
    let expected = ideal(&["x", "y"], &r);
    assert!(q.contains_ideal(&expected, &budget).unwrap() && expected.contains_ideal(&q, &budget).unwrap());
}

#[test]
fn saturation_examples() {
    let budget = Budget::default();
    let r = ring(&["x", "y", "z"]);
    let s = ideal(&["x y"], &r).saturate(&ideal(&["x"], &r), &budget).unwrap();
    assert!(same(&s, &ideal(&["y"], &r), &budget));
    // Removing V((1)) = ∅ removes nothing: A : (1)^∞ = A.
    let a = ideal(&["x^2 - y z"], &r);
    assert!(same(&a.saturate(&Ideal::unit(&r), &budget).unwrap(), &a, &budget));
    let s = ideal(&["x^2 z", "y z"], &r).saturate(&ideal(&["z"], &r), &budget).unwrap();
    assert!(same(&s, &ideal(&["x^2", "y"], &r), &budget));
}

#[test]
fn elimination_examples() {
    let budget = Budget::default();
    let r = ring(&["x", "y", "u", "v"]);
    let e = ideal(&["u - x", "v - y^2", "y"], &r).eliminate(&[2, 3], &budget).unwrap();
    assert!(same(&e, &ideal(&["v"], &r), &budget));
    let r2 = ring(&["x", "u"]);
    let e = ideal(&["u - x"], &r2).eliminate(&[1], &budget).unwrap();
    assert!(e.is_zero());
    let r3 = ring(&["x", "u", "v"]);
    let e = ideal(&["u - x^2", "v - x^3"], &r3).eliminate(&[1, 2], &budget).unwrap();
    assert!(same(&e, &ideal(&["u^3 - v^2"], &r3), &budget));
}

#[test]
fn radical_membership_examples() {
    let budget = Budget::default();
    let r = ring(&["x", "y"]);
    assert!(ideal(&["x^2"], &r).radical_contains(&p("x", &r), &budget).unwrap());
    assert!(!ideal(&["x"], &r).radical_contains(&p("y", &r), &budget).unwrap());
    let a = ideal(&["x^2", "y^2"], &r);
    assert!(a.radical_contains(&p("x+y", &r), &budget).unwrap());
    // oracle: (x+y)^3 expands into terms each divisible by x^2 or y^2
    assert!(a.contains(&p("(x+y)^3", &r), &budget).unwrap());
    assert!(!a.contains(&p("x+y", &r), &budget).unwrap());
}

#[test]
fn dimension_examples() {
    let budget = Budget::default();
    let r = ring(&["x", "y", "z"]);
    assert_eq!(ideal(&["x", "y", "z"], &r).dimension(&budget).unwrap().dimension, 0);
    assert_eq!(Ideal::zero(&r).dimension(&budget).unwrap().dimension, 3);
    let d = ideal(&["x z", "y z"], &r).dimension(&budget).unwrap();
    assert_eq!(d.dimension, 2);
    assert_eq!(d.witness_independent_set, vec![0, 1]);
    assert_eq!(Ideal::unit(&r).dimension(&budget).unwrap().dimension, -1);
}

#[test]
fn local_dimension_examples() {
    let budget = Budget::default();
    let r = ring(&["x", "y"]);
    assert_eq!(ideal(&["x - x^2"], &r).local_dimension_at_origin(&budget).unwrap().dimension, 1);
    let r3 = ring(&["x", "y", "z"]);
    assert_eq!(ideal(&["x", "y", "z"], &r3).local_dimension_at_origin(&budget).unwrap().dimension, 0);
    assert_eq!(ideal(&["1 + x"], &r).local_dimension_at_origin(&budget).unwrap().dimension, -1);
    // globally the same ideal contains the far point x = 1 as well
    let two_points = ideal(&["x - x^2", "y"], &r);
    assert_eq!(two_points.local_dimension_at_origin(&budget).unwrap().dimension, 0);
    assert_eq!(two_points.global_colength(&budget).unwrap(), Some(2));
    assert_eq!(two_points.colength(&budget).unwrap(), Some(1));
}

#[test]
fn colength_examples() {
    let budget = Budget::default();
    let r = ring(&["x", "y"]);
    assert_eq!(ideal(&["x", "y"], &r).colength(&budget).unwrap(), Some(1));
    assert_eq!(ideal(&["3x^2", "3y^2"], &r).colength(&budget).unwrap(), Some(4));
    assert_eq!(ideal(&["x"], &r).colength(&budget).unwrap(), None);
}

#[test]
fn resource_limits_are_reported() {
    use germforge::ideal::Limits;
    use germforge::{Error, LimitKind};
    let r = ring(&["w", "x", "y", "z"]);
    let tight = Budget::new(Limits { max_pairs: 2, ..Limits::default() });
    let i = ideal(&["w + x + y + z", "w x + x y + y z + z w", "w x y + x y z + y z w + z w x", "w x y z - 1"], &r);
    match i.groebner(&tight) {
        Err(Error::ResourceLimit { kind: LimitKind::Pairs, cap: 2 }) => {}
        other => panic!("expected pair-limit error, got {other:?}"),
    }
    let tight = Budget::new(Limits { max_degree: 3, ..Limits::default() });
    let i = ideal(&["x^3 - y^2", "x y^2 - z^3"], &r);
    assert!(matches!(i.groebner(&tight), Err(Error::ResourceLimit { kind: LimitKind::Degree, .. })));
}

#[test]
fn evaluate_constant_after_saturation() {
    // the ideal of the origin-free branch of x - x^2 keeps the point x = 1
    let budget = Budget::default();
    let r = ring(&["x"]);
    let s = ideal(&["x - x^2"], &r).saturate(&ideal(&["x"], &r), &budget).unwrap();
    let g = &s.generators()[0];
    assert_eq!(g.evaluate(&[rat(1)]).unwrap(), rat(0));
    assert_ne!(g.constant_term(), rat(0));
}
