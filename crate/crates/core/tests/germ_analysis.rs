use germforge::germ::{adapted_stratifications, milnor_set, rank_stratification, Field, MapGerm};
use germforge::ideal::{Budget, Ideal};
use germforge::poly::{parse_polynomial, MonomialOrder, Ring};
use germforge::tame::{germ_subset_away_from_origin, milnor_inclusion};

fn germ(label: &str, vars: &[&str], comps: &[&str]) -> MapGerm {
    let r = Ring::new(vars.iter().copied(), MonomialOrder::degrevlex());
    let c = comps.iter().map(|s| parse_polynomial(s, &r).unwrap()).collect();
    MapGerm::with_default_target(label, &r, c).unwrap()
}

fn untame_composite() -> (MapGerm, MapGerm) {
    let g = germ("G", &["r", "s", "t"], &["r", "s"]);
    let f = germ("F", &["x", "y", "u", "v"], &["(x^2+y^2)*(1+u)", "(x^2+y^2)*v", "u^2+v^2"]).retarget(g.source()).unwrap();
    (f, g)
}

#[test]
fn projection_milnor_ideal_is_the_last_coordinate() {
    let b = Budget::default();
    let f = germ("F", &["x", "y", "z"], &["x", "y"]);
    let w = rank_stratification(&f, Field::Complex, &b).unwrap();
    let union = milnor_set(&f, &w, &b).unwrap().union_ideal(&b).unwrap();
    let z = Ideal::new(f.source(), [parse_polynomial("z", f.source()).unwrap()]).unwrap();
    assert_eq!(union.reduced(&b).unwrap().generators(), z.reduced(&b).unwrap().generators());
}

#[test]
fn adapted_strata_carry_both_ranks() {
    let b = Budget::default();
    let (f, g) = untame_composite();
    let a = adapted_stratifications(&f, &g, Field::Real, &b).unwrap();
    assert!(a.w.strata.iter().all(|s| s.rank("F").is_some() && s.rank("H").is_some()));
    assert!(a.w.strata.iter().all(|s| s.rank("H") <= s.rank("F")));
    assert_eq!(a.w.strata[0].dim, 4);
    assert_eq!(a.q.len(), 1);
    assert_eq!(a.s.len(), 1);
}

#[test]
fn composite_milnor_set_sits_inside_that_of_the_inner_map() {
    let b = Budget::default();
    let (f, g) = untame_composite();
    let a = adapted_stratifications(&f, &g, Field::Real, &b).unwrap();
    let mh = milnor_set(&a.composite, &a.w, &b).unwrap();
    let mf = milnor_set(&f, &a.w, &b).unwrap();
    for ((label, h), (_, f)) in mh.per_stratum.iter().zip(&mf.per_stratum) {
        assert!(germ_subset_away_from_origin(h, f, Field::Real, &b).unwrap().holds, "stratum {label}");
    }
}

#[test]
fn milnor_set_meets_the_zero_fibre_inside_the_singular_locus() {
    let b = Budget::default();
    for (vars, comps) in [
        (&["x", "y", "z"][..], &["x", "y"][..]),
        (&["x", "y", "z"], &["x", "y^2+z^2"]),
        (&["x", "y"], &["x^2 - y^3"]),
        (&["x", "y", "z"], &["x*y", "z"]),
    ] {
        let f = germ("F", vars, comps);
        let w = rank_stratification(&f, Field::Real, &b).unwrap();
        assert!(milnor_inclusion(&f, &w, Field::Real, &b).unwrap().holds, "{f}");
    }
}
