use num_bigint::BigInt;
use proptest::prelude::*;

use super::*;
use crate::laurent::quantum_int;
use crate::link::{closed_braid, BraidLetter};

fn braid(n: usize, w: &[i32]) -> LinkDiagram {
    closed_braid("b", n, &BraidLetter::word(w), None).unwrap()
}

fn two() -> LaurentPoly {
    quantum_int(2)
}

fn trefoil() -> LaurentPoly {
    // [2] times the Jones polynomial q + q^3 - q^4 of the right trefoil, q = t^4
    LaurentPoly::from_terms([(2, 1), (6, 1), (10, 1), (18, -1)])
}

#[test]
fn bracket_basics() {
    assert_eq!(raw_bracket(&LinkDiagram::empty()), LaurentPoly::one());
    let delta = -LaurentPoly::from_terms([(2, 1), (-2, 1)]);
    assert_eq!(raw_bracket(&LinkDiagram::unlink(1)), delta);
    assert_eq!(raw_bracket(&LinkDiagram::unlink(2)), delta.pow(2));
}

#[test]
fn jones_of_unlinks_and_hopf() {
    assert_eq!(jones_J(&LinkDiagram::unlink(1)), two());
    for c in 0..4 {
        assert_eq!(jones_J(&LinkDiagram::unlink(c)), two().pow(c as u32));
    }
    assert_eq!(jones_J(&braid(2, &[1, 1])), quantum_int(4));
    assert_eq!(jones_J(&braid(2, &[-1, -1])), quantum_int(4));
}

#[test]
fn trefoil_value() {
    let t = braid(2, &[1, 1, 1]);
    assert_eq!(jones_J(&t), trefoil());
    assert_eq!(jones_J(&t.mirror()), trefoil().substitute_power(-1));
}

#[test]
fn colored_unknot_and_hopf() {
    let u = LinkDiagram::unlink(1);
    for k in -4..=6 {
        assert_eq!(colored_jones(&u, &[k]), quantum_int(k), "k = {k}");
    }
    let h = braid(2, &[1, 1]);
    for j in 1..=3 {
        for k in 1..=3 {
            assert_eq!(colored_jones(&h, &[j, k]), quantum_int(j * k), "({j}, {k})");
        }
    }
    assert_eq!(colored_jones(&h, &[1, 1]), LaurentPoly::one());
}

#[test]
fn chebyshev_and_odd_colors() {
    let w = braid(3, &[-1, 2, -1, 2, 2]);
    assert_eq!(colored_jones(&w, &[2, 2]), jones_J(&w));
    assert_eq!(colored_jones(&w, &[-2, 3]), -colored_jones(&w, &[2, 3]));
    assert_eq!(colored_jones(&w, &[0, 3]), LaurentPoly::zero());
}

#[test]
fn sweep_matches_state_sum() {
    let cases = [
        braid(2, &[1, 1, 1]),
        braid(3, &[-1, 2, -1, 2, 2]),
        braid(3, &[1, -2, 1, -2, 1, -2]),
        braid(4, &[1, 2, 3, -1, 2, -3, 2, 1]),
        braid(2, &[1, 1]).cable(&[2, 2]).unwrap(),
        braid(2, &[1, 1, 1]).cable(&[2]).unwrap(),
    ];
    for d in &cases {
        let oracle = state_sum_bracket(d, SMOOTHING_EXPONENT).unwrap();
        assert_eq!(raw_bracket(d), oracle, "{d:?}");
    }
}

#[test]
fn cyclic_rings_agree_with_reduction() {
    let d = braid(3, &[-1, 2, -1, 2, 2]).cable(&[2, 2]).unwrap();
    let j = jones_J(&d);
    for p in [3u64, 5, 7] {
        let folded = jones_folded(&d, p, &Budget::UNLIMITED).unwrap();
        let mut want = vec![BigInt::from(0); p as usize];
        for (e, c) in j.terms() {
            want[e.rem_euclid(p as i64) as usize] += c;
        }
        assert_eq!(*folded, want);
        let plan = SweepPlan::new(&d);
        let big = sweep_bracket(&CyclicBig::new(p), &d, &plan, SMOOTHING_EXPONENT);
        let small = CyclicI128::new(p);
        let v = sweep_bracket(&small, &d, &plan, SMOOTHING_EXPONENT);
        assert!(!small.overflowed());
        assert_eq!(big, v.iter().map(|&c| BigInt::from(c)).collect::<Vec<_>>());
    }
}

#[test]
fn budget_is_enforced() {
    let d = braid(3, &[1, -2, 1, -2, 1, -2]).cable(&[2, 2, 2]).unwrap();
    let tight = Budget { max_crossings: 10, max_width: MAX_WIDTH };
    assert!(matches!(jones_folded(&d, 5, &tight), Err(Error::Budget(_))));
    let narrow = Budget { max_crossings: usize::MAX, max_width: 2 };
    assert!(matches!(jones_folded(&d, 13, &narrow), Err(Error::Budget(_))));
}

#[test]
fn kink_and_orientation_invariance() {
    let w = braid(3, &[-1, 2, -1, 2, 2]);
    let j = jones_J(&w);
    assert_eq!(jones_J(&w.add_kink(0, true)), j);
    assert_eq!(jones_J(&w.add_kink(1, false).add_kink(1, false)), j);
    assert_eq!(jones_J(&w.reverse_component(1).unwrap()), j);
    let u = LinkDiagram::unlink(1);
    assert_eq!(jones_J(&u.add_kink(0, true)), two());
    assert_eq!(jones_J(&u.add_kink(0, false)), two());
    let b = braid(3, &[1, -2, 1, -2, 1, -2]);
    assert_eq!(jones_J(&b.reverse_component(0).unwrap()), jones_J(&b));
}

#[test]
fn multiplicative_under_distant_union() {
    let t = braid(2, &[1, 1, 1]);
    let h = braid(2, &[1, 1]);
    assert_eq!(jones_J(&t.distant_union(&h)), jones_J(&t) * jones_J(&h));
}

#[test]
fn phi_examples() {
    assert_eq!(ohtsuki_phi(&LinkDiagram::unlink(1)), LaurentPoly::zero());
    assert_eq!(ohtsuki_phi(&LinkDiagram::empty()), LaurentPoly::one());
    let h = braid(2, &[1, 1]);
    let phi = ohtsuki_phi(&h);
    assert_eq!(phi, quantum_int(4) - two().pow(2));
    assert_eq!(phi.order().finite(), Some(2));
    assert_eq!(jones_from_phi(&h), quantum_int(4));
    assert_eq!(jones_from_phi(&LinkDiagram::unlink(1)), two());
}

#[test]
fn phi_reconstruction() {
    let links = [
        braid(2, &[1, 1, 1]),
        braid(3, &[-1, 2, -1, 2, 2]),
        braid(3, &[1, -2, 1, -2, 1, -2]),
        braid(3, &[-1, 2, -1, 2, 2]).cable(&[2, 1]).unwrap(),
    ];
    for d in &links {
        assert_eq!(jones_from_phi(d), jones_J(d));
        assert_eq!(pi_projection(d).jones(), ohtsuki_phi(d));
    }
}

#[test]
fn projection_and_involution() {
    let w = braid(3, &[-1, 2, -1, 2, 2]);
    let t = braid(2, &[1, 1, 1]);
    assert_eq!(pi_projection(&LinkDiagram::unlink(1)).jones(), LaurentPoly::zero());
    for d in [&w, &t] {
        let p = pi_projection(d);
        assert_eq!(p.pi().jones(), p.jones());
        assert_eq!(delta_involution(d).delta().jones(), jones_J(d));
    }
    let lhs = LinkCombo::single(&w.distant_union(&t)).pi().jones();
    let rhs = pi_projection(&w).distant_union(&pi_projection(&t)).jones();
    assert_eq!(lhs, rhs);
    let e = delta_involution(&LinkDiagram::empty());
    assert_eq!(e.len(), 1);
    assert_eq!(e.jones(), LaurentPoly::one());
}

/// Ohtsuki's normalization: `Φ_L = (-1)^l X_{δ(L)}` equals `φ_L / [2]^l`, and
/// `X_L` is the sum of `Φ_S` over sublinks. Cleared of denominators by
/// multiplying through with `[2]^l`.
#[test]
fn x_phi_symmetry() {
    for d in [braid(2, &[1, 1, 1]), braid(3, &[-1, 2, -1, 2, 2]), braid(3, &[1, -2, 1, -2, 1, -2])] {
        let l = d.num_components();
        let mut phi_big = LaurentPoly::zero();
        for (s, c) in delta_involution(&d).terms() {
            let k = s.num_components();
            phi_big += &(jones_J(s) * two().pow((l - k) as u32)).scale(c);
        }
        let sign = if l % 2 == 0 { 1 } else { -1 };
        assert_eq!(phi_big.scale(&BigInt::from(sign)), ohtsuki_phi(&d));
        let mut x_big = LaurentPoly::zero();
        for (s, c) in delta_involution(&d).terms() {
            let k = s.num_components();
            let per_term = if k % 2 == 0 { 1 } else { -1 };
            x_big += &(ohtsuki_phi(s) * two().pow((l - k) as u32)).scale(&(c * per_term));
        }
        assert_eq!(x_big, jones_J(&d));
    }
}

#[test]
fn phi_orders() {
    let h = braid(2, &[1, 1]);
    let w = braid(3, &[-1, 2, -1, 2, 2]);
    let b = braid(3, &[1, -2, 1, -2, 1, -2]);
    assert!(ohtsuki_phi(&h).order().finite().unwrap() >= 2);
    assert!(ohtsuki_phi(&w).order().finite().unwrap() >= 3);
    assert!(ohtsuki_phi(&b).order().finite().unwrap() >= 4);
    let u2 = LinkDiagram::unlink(2);
    assert!(ohtsuki_phi(&u2).order().is_infinite());
    let t = braid(2, &[1, 1, 1]);
    assert!(ohtsuki_phi(&t.distant_union(&t)).order().finite().unwrap() >= 4);
}

fn small_braid() -> impl Strategy<Value = (usize, Vec<i32>)> {
    (2usize..=4).prop_flat_map(|n| {
        let g = (1..n as i32).prop_flat_map(|j| prop_oneof![Just(j), Just(-j)]);
        (Just(n), prop::collection::vec(g, 0..9))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn engines_agree_on_random_braids((n, w) in small_braid()) {
        let d = braid(n, &w);
        prop_assert_eq!(raw_bracket(&d), state_sum_bracket(&d, SMOOTHING_EXPONENT).unwrap());
    }

    #[test]
    fn jones_is_kink_free((n, w) in small_braid(), comp in 0usize..4, positive: bool) {
        let d = braid(n, &w);
        let c = comp % d.num_components();
        prop_assert_eq!(jones_J(&d.add_kink(c, positive)), jones_J(&d));
    }

    #[test]
    fn reconstruction_on_random_braids((n, w) in small_braid()) {
        let d = braid(n, &w);
        prop_assert_eq!(jones_from_phi(&d), jones_J(&d));
    }
}
