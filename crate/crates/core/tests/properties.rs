//! Property tests for the structural invariants of each module.

mod common;

use molien::cycarith::{divisors, rat, CycNum, RootOfUnity};
use molien::invariants::{
    downup_trace, generated_by_bireflections, hdet_from_trace, hdet_matrix, molien, AlgebraCtx,
};
use molien::matgroup::{classify, close_group, Family, Mat2, MatGroup};
use molien::polyrat::{cyclotomic_poly, IntPoly, RatFunc};
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use common::*;

fn cyc_strategy() -> impl Strategy<Value = CycNum> {
    (1u64..=12).prop_flat_map(|n| {
        prop::collection::vec(-6i64..=6, n as usize)
            .prop_map(move |c| CycNum::from_ints(n, &c).unwrap())
    })
}

fn root_strategy() -> impl Strategy<Value = RootOfUnity> {
    (1u64..=60, 0i64..60).prop_map(|(n, k)| RootOfUnity::new(n, k))
}

/// Monomial matrices whose every combination generates a small finite group.
fn pool() -> Vec<Mat2> {
    vec![
        Mat2::swap(),
        Mat2::quarter_turn(),
        Mat2::flip_first(),
        Mat2::flip_second(),
        Mat2::torus_primitive(3),
        Mat2::signed_torus_primitive(4),
        Mat2::diag(RootOfUnity::new(5, 1).to_cyc(), CycNum::one()),
    ]
}

fn pick_gens(picks: &[usize]) -> Vec<Mat2> {
    let pool = pool();
    picks
        .iter()
        .map(|&i| pool[i % pool.len()].clone())
        .collect()
}

fn sweep_instances() -> Vec<(AlgebraCtx, String, MatGroup)> {
    let groups = sweep_groups();
    let mut out = Vec::new();
    for &(a, b) in &SWEEP_ALGEBRAS {
        let ctx = AlgebraCtx::down_up(rat(a), rat(b)).unwrap();
        let shape = ctx.aut_shape().unwrap();
        for g in &groups {
            if g.gens.iter().all(|m| shape.admits(m)) {
                out.push((ctx.clone(), g.name.clone(), close_group(&g.gens).unwrap()));
            }
        }
    }
    out
}

/// Each sweep group once, on the first algebra admitting it.
fn sweep_once() -> Vec<(AlgebraCtx, String, MatGroup)> {
    let mut seen = std::collections::HashSet::new();
    sweep_instances()
        .into_iter()
        .filter(|(_, name, _)| seen.insert(name.clone()))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn promotion_round_trip(x in cyc_strategy(), k in 1u64..=6) {
        let y = x.promote(k * x.conductor()).unwrap();
        prop_assert_eq!(y.conductor(), k * x.conductor());
        prop_assert_eq!(&y, &x);
    }

    #[test]
    fn root_order_is_exact(r in root_strategy(), flip in any::<bool>()) {
        let r = if flip { r.mul(&RootOfUnity::minus_one()) } else { r };
        let x = r.to_cyc();
        let m = x.root_of_unity_order().unwrap();
        prop_assert_eq!(m, r.order());
        prop_assert!(x.pow(m as i64).unwrap().is_one());
        for d in divisors(m).into_iter().filter(|&d| d < m) {
            prop_assert!(!x.pow(d as i64).unwrap().is_one());
        }
    }

    #[test]
    fn non_roots_have_no_order(r in root_strategy(), c in 2i64..5) {
        let x = &r.to_cyc() * &CycNum::from_int(c);
        prop_assert_eq!(x.root_of_unity_order(), None);
    }

    #[test]
    fn stanley_numerators_are_palindromic(
        num in prop::collection::vec(-3i64..=3, 1..6),
        palindrome in any::<bool>(),
        ks in prop::collection::vec(1usize..=6, 1..4),
    ) {
        let mut num = num;
        if palindrome {
            let rev: Vec<i64> = num.iter().rev().copied().collect();
            num.extend(rev);
        }
        prop_assume!(num.iter().any(|&c| c != 0));
        let f = RatFunc::new(IntPoly::from_i64(&num), RatFunc::inverse_of_one_minus(&ks).den().clone()).unwrap();
        if let Some((_, _)) = f.stanley_gorenstein_test() {
            let n = f.num();
            let rev = n.reversed();
            let neg = rev.scale(&(-1).into());
            // Reversal up to sign, ignoring any power of t dividing num.
            let strip = |p: &IntPoly| {
                let c = p.coeffs();
                let lo = c.iter().position(|x| !x.is_zero()).unwrap();
                IntPoly::new(c[lo..].to_vec())
            };
            prop_assert!(strip(n) == strip(&rev) || strip(n) == strip(&neg), "{}", n);
        }
    }

    #[test]
    fn lagrange(picks in prop::collection::vec(0usize..7, 1..=2), extra in 0usize..7) {
        let gens = pick_gens(&picks);
        let mut bigger = gens.clone();
        bigger.extend(pick_gens(&[extra]));
        if let (Ok(h), Ok(k)) = (close_group(&gens), close_group(&bigger)) {
            prop_assert_eq!(k.order() % h.order(), 0);
            for g in h.elements() {
                prop_assert!(k.contains(g));
            }
        }
    }

    #[test]
    fn random_element_eigenvalues(
        picks in prop::collection::vec(0usize..7, 1..=3),
        pick in any::<prop::sample::Index>(),
    ) {
        if let Ok(h) = close_group(&pick_gens(&picks)) {
            let g = pick.get(h.elements());
            let (l, m) = g.eigenvalues().unwrap();
            prop_assert_eq!(&l + &m, g.trace());
            prop_assert_eq!(&l * &m, g.det());
        }
    }
}

#[test]
fn cyclotomic_polynomials_divide_t_pow_minus_one() {
    for d in 1..=200u64 {
        let p = cyclotomic_poly(d);
        assert!(
            IntPoly::one_minus_t_pow(d as usize).div_exact(&p).is_some(),
            "Φ_{d}"
        );
        let total: usize = divisors(d)
            .iter()
            .map(|&e| cyclotomic_poly(e).degree().unwrap())
            .sum();
        assert_eq!(total, d as usize);
    }
}

#[test]
fn group_exponent_divides_order() {
    for (_, name, h) in sweep_once() {
        let n = h.order() as i64;
        for g in h.elements() {
            assert!(g.pow(n).unwrap().is_identity(), "{name}: {g}^{n}");
        }
    }
}

#[test]
fn eigenvalues_match_trace_and_det() {
    for (_, name, h) in sweep_once() {
        for g in h.elements() {
            let (l, m) = g.eigenvalues().unwrap();
            assert_eq!(&l + &m, g.trace(), "{name}: {g}");
            assert_eq!(&l * &m, g.det(), "{name}: {g}");
        }
    }
}

#[test]
fn tetrahedral_generators_close() {
    let bt = sweep_groups()
        .into_iter()
        .find(|g| g.name == "BT24")
        .unwrap();
    let h = close_group(&bt.gens).unwrap();
    assert_eq!(h.order(), 24);
    assert_eq!(classify(&h).unwrap().family, Family::BinaryTetrahedral);
}

#[test]
fn two_q8_presentations_agree() {
    for n in 1..=8u64 {
        let c = Mat2::signed_torus_primitive(4 * n);
        let a = close_group(&[Mat2::swap(), c.clone()]).unwrap();
        let b = close_group(&[Mat2::quarter_turn(), c]).unwrap();
        assert_eq!(a.order() as u64, 8 * n);
        assert_eq!(a.order(), b.order());
        let (la, lb) = (classify(&a).unwrap(), classify(&b).unwrap());
        assert_eq!(la.family, Family::Q8, "n={n}");
        assert_eq!(la.primary(), lb.primary(), "n={n}");
    }
}

#[test]
fn molien_series_are_hilbert_series() {
    for (ctx, name, h) in sweep_instances() {
        let coeffs = molien(&ctx, &h).unwrap().series_coeffs(40);
        assert_eq!(coeffs[0], rat(1), "{name}");
        for (k, c) in coeffs.iter().enumerate() {
            assert!(
                c.is_integer() && !c.is_negative(),
                "{name}: coefficient {k} is {c}"
            );
        }
    }
}

#[test]
fn hdet_from_trace_matches_matrix() {
    for (ctx, name, h) in sweep_once() {
        for g in h.elements() {
            let tr = downup_trace(&ctx, g).unwrap();
            let by_matrix = hdet_matrix(g);
            assert_eq!(by_matrix, &g.det() * &g.det(), "{name}: {g}");
            assert_eq!(tr.hdet(3).value, by_matrix, "{name}: {g}");
            // Traces with coefficients in ℚ also go through the expanded form.
            if let Ok(f) = tr.to_ratfunc() {
                assert_eq!(
                    hdet_from_trace(&f, 3).unwrap().value,
                    by_matrix,
                    "{name}: {g}"
                );
            }
        }
    }
}

#[test]
fn sl2_groups_have_trivial_hdet_and_are_generated_by_bireflections() {
    for (ctx, name, h) in sweep_instances()
        .into_iter()
        .filter(|(_, _, h)| h.is_in_sl2())
    {
        assert!(
            h.elements().iter().all(|g| hdet_matrix(g).is_one()),
            "{name}"
        );
        assert!(generated_by_bireflections(&ctx, &h).unwrap(), "{name}");
    }
}

#[test]
fn series_depend_only_on_the_matrices() {
    let mut by_group: std::collections::HashMap<String, RatFunc> = Default::default();
    for (ctx, name, h) in sweep_instances() {
        let f = molien(&ctx, &h).unwrap();
        match by_group.get(&name) {
            Some(prev) => assert_eq!(prev, &f, "{name}"),
            None => {
                by_group.insert(name, f);
            }
        }
    }
}

#[test]
fn no_quasi_reflections_on_down_up_algebras() {
    for (ctx, name, h) in sweep_instances() {
        for g in h.elements().iter().filter(|g| !g.is_identity()) {
            let pole = downup_trace(&ctx, g).unwrap().pole_order_at_one();
            assert_ne!(pole, 2, "{name}: {g}");
        }
    }
}
