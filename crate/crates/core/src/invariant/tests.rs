use proptest::prelude::*;

use super::*;
use crate::cyclotomic::{signed_pair_sum, sum_t, sum_u};
use crate::laurent::LaurentPoly;
use crate::link::catalog;
use crate::link::{closed_braid, BraidLetter};
use crate::skein::colored_jones;

fn lvl(p: i64) -> PrimeLevel {
    PrimeLevel::new(p).unwrap()
}

fn get(name: &str) -> LinkDiagram {
    catalog::get(name).unwrap()
}

const FREE: Budget = Budget::UNLIMITED;

fn bo(level: PrimeLevel) -> CycElem {
    unknot_bracket_b(0, level)
}

/// The p-bracket summed in the Laurent ring with colored Jones polynomials
/// computed one coloring at a time, then reduced.
fn bracket_oracle(d: &LinkDiagram, level: PrimeLevel) -> CycElem {
    let m = level.m() as i64;
    let mut acc = LaurentPoly::zero();
    for k in grid(d.num_components(), 1, m) {
        let mut t = colored_jones(d, &k);
        for (i, &ki) in k.iter().enumerate() {
            t = &t * &framed_quantum_int(d.framings()[i], ki);
        }
        acc += &t;
    }
    CycElem::reduce(&acc, level)
}

#[test]
fn grid_enumeration() {
    assert_eq!(grid(0, 1, 3), vec![Vec::<i64>::new()]);
    assert_eq!(grid(2, 0, 1), vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
}

#[test]
fn framed_unknot_bracket_is_b() {
    for p in [3, 5, 7, 11] {
        let level = lvl(p);
        for a in -3..=3 {
            let u = get(&format!("unknot_{a}"));
            assert_eq!(p_bracket_direct(&u, level, &FREE).unwrap(), unknot_bracket_b(a, level));
            assert_eq!(p_bracket_via_phi(&u, level, &FREE).unwrap(), unknot_bracket_b(a, level));
        }
    }
}

#[test]
fn direct_path_matches_laurent_oracle() {
    for name in ["hopf", "trefoil_right", "whitehead"] {
        for p in [3, 5, 7] {
            let d = get(name);
            assert_eq!(p_bracket_direct(&d, lvl(p), &FREE).unwrap(), bracket_oracle(&d, lvl(p)), "{name} p={p}");
        }
    }
    let framed = get("hopf").with_framings(vec![2, -1]);
    assert_eq!(p_bracket_direct(&framed, lvl(5), &FREE).unwrap(), bracket_oracle(&framed, lvl(5)));
}

#[test]
fn two_paths_agree_on_catalog() {
    for d in catalog::all() {
        for p in [3, 5] {
            let a = p_bracket_direct(&d, lvl(p), &FREE).unwrap();
            let b = p_bracket_via_phi(&d, lvl(p), &FREE).unwrap();
            assert_eq!(a, b, "{} p={p}", d.name());
        }
    }
    let framed = get("whitehead").with_framings(vec![1, -2]);
    assert_eq!(
        p_bracket_direct(&framed, lvl(7), &FREE).unwrap(),
        p_bracket_via_phi(&framed, lvl(7), &FREE).unwrap()
    );
}

#[test]
fn calibration_anchors() {
    for p in [5, 7, 11] {
        let level = lvl(p);
        let b0 = bo(level);
        let w = p_bracket_direct(&get("whitehead"), level, &FREE).unwrap();
        assert_eq!(w, &b0 * &sum_t(1, level), "p={p}");
        let mirror_framed = get("whitehead").mirror().with_framings(vec![1, 0]);
        let m = level.m() as i64;
        let target = &b0 * &sum_t(m, level);
        assert_eq!(p_bracket_direct(&mirror_framed, level, &FREE).unwrap(), target, "p={p}");
        let t = p_bracket_direct(&get("trefoil_right"), level, &FREE).unwrap();
        assert_eq!(&unknot_bracket_b(1, level) * &t, target, "p={p}");
    }
    // at p = 5 the two trefoils are told apart
    let level = lvl(5);
    let target = &bo(level) * &sum_t(2, level);
    let left = p_bracket_direct(&get("trefoil_left"), level, &FREE).unwrap();
    assert_ne!(&unknot_bracket_b(1, level) * &left, target);
}

#[test]
fn borromean_and_cables() {
    for p in [5, 7] {
        let level = lvl(p);
        let b2 = &bo(level) * &bo(level);
        let b = p_bracket_direct(&get("borromean"), level, &FREE).unwrap();
        assert_eq!(b, &b2 * &sum_u(level));
        let plus = p_bracket_direct(&get("borromean_cable_2"), level, &FREE).unwrap();
        assert_eq!(plus, &b2 * &signed_pair_sum(-1, level));
        let minus = p_bracket_direct(&get("borromean_cable_-2"), level, &FREE).unwrap();
        assert_eq!(minus, &b2 * &signed_pair_sum(1, level));
    }
}

#[test]
fn p_norm_examples() {
    let level = lvl(7);
    assert!(p_norm(&LinkDiagram::empty(), level).is_one());
    let n = level.n();
    let zero = p_norm(&get("unknot"), level);
    assert_eq!(zero, bo(level).div_h_power(n).unwrap());
    assert_eq!(zero.p_order(), Order::Finite(n));
    assert_eq!(p_norm(&get("unknot_1"), level), unknot_bracket_b(1, level));
    assert_eq!(p_norm(&get("unknot_-4"), level), unknot_bracket_b(-1, level));
    let w = p_norm(&get("whitehead"), level);
    assert_eq!(w.p_order(), Order::Finite(2 * n));
    let u = p_norm(&get("hopf").with_framings(vec![2, 0]), level);
    // the form [[2,1],[1,0]] is indefinite
    assert_eq!(u, &unknot_bracket_b(1, level) * &unknot_bracket_b(-1, level));
    assert_eq!(w, zero.pow(2));
}

#[test]
fn tau_examples() {
    for p in [5, 7, 11] {
        let level = lvl(p);
        let s3 = InvariantReport::compute(&LinkDiagram::empty(), level, &Options::default()).unwrap();
        assert!(s3.tau.is_one());
        assert_eq!(s3.order, Order::Finite(0));
        let u = InvariantReport::compute(&get("unknot"), level, &Options { budget: FREE, depth: 3 }).unwrap();
        assert_eq!(u.tau, CycElem::h(level).pow(level.n()));
        assert_eq!(u.order, Order::Finite(level.n()));
        assert_eq!(u.projections.len(), 4);
        assert_eq!((u.b, u.b_p), (1, 1));
    }
    let f = InvariantReport::compute(&get("unknot_5"), lvl(5), &Options::default()).unwrap();
    assert_eq!((f.b, f.b_p, f.order), (0, 1, Order::Finite(1)));
    assert_eq!(f.torsion, Some(5.into()));
}

#[test]
fn tau_three_is_one() {
    for d in catalog::all() {
        assert!(tau_p(&d, lvl(3), &FREE).unwrap().is_one(), "{}", d.name());
    }
}

#[test]
fn manifold_orders() {
    for p in [5, 7] {
        let level = lvl(p);
        let n = Order::Finite(level.n());
        for name in ["unknot", "whitehead", "borromean", "borromean_cable_2", "borromean_cable_-2"] {
            let r = InvariantReport::compute(&get(name), level, &Options::default()).unwrap();
            assert_eq!(r.order, n, "{name} p={p}");
            assert!(r.all_bounds_hold(), "{name} p={p}: {:?}", r.bounds);
        }
    }
}

#[test]
fn trefoil_zero_surgery_vanishes_at_seven() {
    let t = tau_p(&get("trefoil_right"), lvl(7), &FREE).unwrap();
    assert!(t.is_zero());
    assert!(sum_t(3, lvl(7)).is_zero());
    let t5 = tau_p(&get("trefoil_right"), lvl(5), &FREE).unwrap();
    assert_eq!(t5.p_order(), Order::Finite(1));
}

#[test]
fn same_manifold_from_two_presentations() {
    for p in [5, 7, 11] {
        let level = lvl(p);
        let via_whitehead = get("whitehead").mirror().with_framings(vec![1, 0]);
        assert_eq!(
            tau_p(&via_whitehead, level, &FREE).unwrap(),
            tau_p(&get("trefoil_right"), level, &FREE).unwrap(),
            "p={p}"
        );
    }
}

#[test]
fn multiplicativity() {
    let level = lvl(5);
    let a = get("whitehead");
    let b = get("trefoil_right").with_framings(vec![2]);
    let u = a.distant_union(&b);
    let ba = p_bracket_direct(&a, level, &FREE).unwrap();
    let bb = p_bracket_direct(&b, level, &FREE).unwrap();
    assert_eq!(p_bracket_direct(&u, level, &FREE).unwrap(), &ba * &bb);
    let ta = tau_p(&a, level, &FREE).unwrap();
    let tb = tau_p(&b, level, &FREE).unwrap();
    assert_eq!(tau_p(&u, level, &FREE).unwrap(), &ta * &tb);
    let ra = InvariantReport::compute(&a, level, &Options::default()).unwrap();
    let rb = InvariantReport::compute(&b, level, &Options::default()).unwrap();
    let sum = ra.connected_sum(&rb).unwrap();
    assert_eq!(sum.tau, &ta * &tb);
    assert_eq!(sum.b_p, ra.b_p + rb.b_p);
}

#[test]
fn blow_ups() {
    for p in [3, 5, 7] {
        let level = lvl(p);
        for name in ["unknot", "hopf", "trefoil_left", "whitehead", "borromean"] {
            let d = get(name);
            let t = tau_p(&d, level, &FREE).unwrap();
            for a in [1, -1] {
                let blown = d.distant_union(&get(&format!("unknot_{a}")));
                assert_eq!(tau_p(&blown, level, &FREE).unwrap(), t, "{name} {a} p={p}");
            }
        }
    }
}

#[test]
fn kirby_slide_of_hopf() {
    // surgery on the Hopf link with framings (a, 0) is S^3 for every a
    for p in [5, 7] {
        for a in -2..=2 {
            let d = get("hopf").with_framings(vec![a, 0]);
            assert!(tau_p(&d, lvl(p), &FREE).unwrap().is_one(), "a={a} p={p}");
        }
    }
}

#[test]
fn lens_spaces() {
    for p in [5, 7] {
        let level = lvl(p);
        for k in 1..=10 {
            let r = InvariantReport::compute(&lens_space(k), level, &Options::default()).unwrap();
            let sphere = k % p != 0;
            assert_eq!(r.order == Order::Finite(0), sphere, "k={k} p={p}");
            assert_eq!(r.torsion, Some(k.into()));
        }
    }
}

#[test]
fn chirality() {
    for p in [5, 7] {
        let level = lvl(p);
        let w = tau_p(&get("whitehead"), level, &FREE).unwrap();
        let wm = tau_p(&get("whitehead").mirror(), level, &FREE).unwrap();
        assert_ne!(w, wm);
        let plus = tau_p(&get("borromean_cable_2"), level, &FREE).unwrap();
        let minus = tau_p(&get("borromean_cable_-2"), level, &FREE).unwrap();
        let n = level.n();
        assert_eq!(plus.pi_d(n), minus.pi_d(n));
        assert_ne!(plus.pi_d(n + 1), minus.pi_d(n + 1));
    }
}

#[test]
fn casson_series_of_plus_one_trefoil_surgery() {
    for p in [5, 7, 11] {
        for name in ["trefoil_right", "trefoil_left"] {
            let tau = tau_p(&get(name).with_framings(vec![1]), lvl(p), &FREE).unwrap();
            assert_eq!(casson_lambda(&tau), (true, Some(1)), "{name} p={p}");
        }
    }
}

#[test]
fn bounds_report_fields() {
    let r = InvariantReport::compute(&get("whitehead"), lvl(7), &Options { budget: FREE, depth: 2 }).unwrap();
    let names: Vec<&str> = r.bounds.iter().map(|b| b.name.as_str()).collect();
    assert!(names.iter().any(|n| n.contains("b_p n / 3")));
    assert!(names.iter().any(|n| n.contains("l + m")));
    assert!(names.iter().any(|n| n.contains("S^1 x S^2")));
    assert!(r.all_bounds_hold());
    let v = r.to_json();
    assert_eq!(v["order"], "2");
    assert_eq!(v["b_p"], "2");
    assert_eq!(v["projections"].as_array().unwrap().len(), 3);
    assert_eq!(v["projections"][0], json!(["0", "0", "7"]));
    let h = InvariantReport::compute(&get("hopf"), lvl(5), &Options::default()).unwrap();
    assert!(h.bounds.iter().all(|b| !b.name.contains("l + m")));
    let bare = get("whitehead").with_metadata(None, None);
    let r = InvariantReport::compute(&bare, lvl(5), &Options::default()).unwrap();
    assert!(r.bounds.iter().any(|b| b.pass.is_none()));
    assert!(r.bounds.iter().any(|b| b.notice.is_some()));
}

#[test]
fn budget_overrun_is_an_error() {
    let b = get("borromean");
    let few = Budget { max_crossings: 5, max_width: 20 };
    assert!(matches!(p_bracket_direct(&b, lvl(7), &few), Err(Error::Budget(_))));
    assert!(matches!(p_bracket_via_phi(&b, lvl(7), &few), Err(Error::Budget(_))));
    let narrow = Budget { max_crossings: 48, max_width: 8 };
    assert!(matches!(p_bracket_direct(&b, lvl(7), &narrow), Err(Error::Budget(_))));
    let enough = Budget { max_crossings: 6, max_width: 20 };
    assert!(p_bracket_direct(&b, lvl(5), &enough).is_ok());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn two_paths_agree_on_random_framed_braids(
        w in prop::collection::vec(prop_oneof![Just(1i32), Just(-1), Just(2), Just(-2)], 0..6),
        a in prop::collection::vec(-3i64..=3, 3),
        p in prop_oneof![Just(3i64), Just(5)],
    ) {
        let d = closed_braid("r", 3, &BraidLetter::word(&w), None).unwrap();
        let d = d.clone().with_framings(a[..d.num_components()].to_vec());
        let level = lvl(p);
        let direct = p_bracket_direct(&d, level, &FREE).unwrap();
        prop_assert_eq!(&direct, &p_bracket_via_phi(&d, level, &FREE).unwrap());
        let r = InvariantReport::from_bracket(&d, direct, 1).unwrap();
        prop_assert!(r.order >= Order::Finite(0));
        prop_assert!(r.all_bounds_hold(), "{:?}", r.bounds);
    }
}
