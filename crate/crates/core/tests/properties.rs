use macbax_core::gamma::{gamma_q_coeff, gamma_qt_coeff, gamma_qt_finite_ratio};
use macbax_core::laurent::{constant_term_pair, LaurentSeries};
use macbax_core::partition::{dominance_leq, partitions_of, Partition};
use macbax_core::ratfunc::{int, q, t, LMono};
use macbax_core::symfunc::{monomial_sym, sp_kappa, sp_q, sp_qt, sp_torus, weight_delta, SymFunc, WeightKind};
use macbax_core::xpoly::{exps_from, XPoly};
use macbax_core::{RatFunc, Var};
use proptest::prelude::*;

fn partition_strategy(max_weight: u32) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..=max_weight, 0..=max_weight as usize).prop_filter_map("weight", move |v| {
        let p = Partition::from_unsorted(&v);
        (p.weight() <= max_weight).then_some(p)
    })
}

/// Small polynomial in q, t with integer coefficients.
fn qt_poly() -> impl Strategy<Value = RatFunc> {
    prop::collection::vec((-3i64..=3, 0i64..=2, 0i64..=2), 1..4).prop_map(|terms| {
        let mut r = RatFunc::zero();
        for (c, a, b) in terms {
            r = r.add(&q().pow(a).mul(&t().pow(b)).scale_int(c));
        }
        r
    })
}

fn nonzero_qt_poly() -> impl Strategy<Value = RatFunc> {
    qt_poly().prop_filter("nonzero", |r| !r.is_zero())
}

/// Laurent polynomial in n variables with exponents in [−2, 2].
fn laurent(n: usize) -> impl Strategy<Value = XPoly<RatFunc>> {
    prop::collection::vec((prop::collection::vec(-2i64..=2, n), -3i64..=3), 0..5).prop_map(move |terms| {
        let mut p = XPoly::zero(n);
        for (e, c) in terms {
            p.add_term(exps_from(&e), int(c));
        }
        p
    })
}

/// Random homogeneous symmetric function of degree d in rank n.
fn symfunc(n: usize, d: u32) -> impl Strategy<Value = SymFunc> {
    let ps = partitions_of(d, n);
    let k = ps.len();
    prop::collection::vec(-3i64..=3, k).prop_map(move |cs| {
        let mut s = SymFunc::zero(n);
        for (p, c) in ps.iter().zip(cs) {
            s = s.add(&monomial_sym(p, n).unwrap().scale(&int(c)));
        }
        s
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]
    #[test]
    fn conjugation_is_an_involution(p in partition_strategy(12)) {
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        prop_assert_eq!(p.conjugate().weight(), p.weight());
    }
}

#[test]
fn dominance_is_a_partial_order() {
    for w in 0..=8 {
        let ps = partitions_of(w, w as usize);
        for a in &ps {
            assert!(dominance_leq(a, a));
            for b in &ps {
                if dominance_leq(a, b) && dominance_leq(b, a) {
                    assert_eq!(a, b);
                }
                for c in &ps {
                    if dominance_leq(a, b) && dominance_leq(b, c) {
                        assert!(dominance_leq(a, c));
                    }
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn ratfunc_canonical_under_association(a in qt_poly(), b in nonzero_qt_poly(), c in nonzero_qt_poly()) {
        prop_assert_eq!(a.div(&b).div(&c), a.div(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b).div(&c), a.mul(&b.div(&c)));
        prop_assert_eq!(a.div(&b).add(&c.div(&b)), a.add(&c).div(&b));
    }

    #[test]
    fn constant_term_linear_and_symmetric(f in laurent(2), g in laurent(2), h in laurent(2), a in -3i64..=3, b in -3i64..=3) {
        prop_assert_eq!(constant_term_pair(&f, &g), constant_term_pair(&g, &f));
        let direct = LaurentSeries::exact(f.mul(&g.invert_vars())).constant_term();
        prop_assert_eq!(direct, constant_term_pair(&f, &g));
        let lin = f.scale(&int(a)).add(&h.scale(&int(b)));
        let lhs = constant_term_pair(&lin, &g);
        let rhs = constant_term_pair(&f, &g).scale_int(a).add(&constant_term_pair(&h, &g).scale_int(b));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn truncated_multiplication_associative(
        a in laurent(1), b in laurent(1), c in laurent(1),
        qa in 0i64..=3, qb in 0i64..=3, k in 0i32..=4,
    ) {
        let a = LaurentSeries::truncated(a.scale(&q().pow(qa).add(&int(1))), k).unwrap();
        let b = LaurentSeries::truncated(b.scale(&int(1).sub(&q().pow(qb))), k).unwrap();
        let c = LaurentSeries::truncated(c, k).unwrap();
        let l = a.mul(&b).unwrap().mul(&c).unwrap();
        let r = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(l.poly(), r.poly());
    }

    #[test]
    fn finite_ratio_cocycle(n in -4i64..=4, m in -4i64..=4, a in 1i32..=3, b in -2i32..=2, c in 0i32..=2) {
        let x: LMono = [2 * b, 2 * c, 0, 2 * a];
        let xn: LMono = [2 * b + 2 * n as i32, 2 * c, 0, 2 * a];
        let lhs = gamma_qt_finite_ratio(x, n).unwrap().mul(&gamma_qt_finite_ratio(xn, m).unwrap());
        prop_assert_eq!(lhs, gamma_qt_finite_ratio(x, n + m).unwrap());
    }
}

/// Σ_{n≤N} b_(n)xⁿ against (tx;q)_∞/(x;q)_∞ expanded through x^N and q^D.
/// Both sides are polynomials in t of degree ≤ n at each xⁿ, so agreement at
/// N + 1 integer values of t is equality in t.
#[test]
fn gamma_qt_series_matches_product() {
    let (nmax, d) = (8u32, 6i64);
    let xm = |m: u32, c: RatFunc| XPoly::monomial(1, exps_from(&[m as i64]), c);
    for t0 in -4i64..=4 {
        let mut p = XPoly::one(1);
        for j in 0..=d {
            let qj = q().pow(j);
            let mut geo = XPoly::zero(1);
            for m in 0..=nmax {
                geo = geo.add(&xm(m, qj.pow(m as i64)));
            }
            let num = XPoly::one(1).sub(&xm(1, qj.scale_int(t0)));
            p = p.mul(&geo).mul(&num).filter(|e| e[0] <= nmax as i16);
            p = p.try_map_coeffs(|c| c.truncate_q(2 * d as i32)).unwrap();
        }
        for n in 0..=nmax {
            let got = p.coeff(&exps_from(&[n as i64]));
            let want = gamma_qt_coeff(n).subs_int(Var::T, t0).unwrap().truncate_q(2 * d as i32).unwrap();
            assert_eq!(got, want, "t={} n={}", t0, n);
        }
    }
}

#[test]
fn gamma_q_is_t_zero_specialization() {
    for n in 0..=8 {
        assert_eq!(gamma_q_coeff(n), gamma_qt_coeff(n).subs_zero(Var::T).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]
    #[test]
    fn scalar_products_symmetric_bilinear(
        (f, g, h) in (1usize..=4).prop_flat_map(|n| (Just(n), 1u32..=n as u32)).prop_flat_map(|(n, d)| (symfunc(n, d), symfunc(n, d), symfunc(n, d))),
        a in -2i64..=2, b in -2i64..=2,
    ) {
        for sp in [sp_qt, sp_q, sp_kappa] {
            prop_assert_eq!(sp(&f, &g).unwrap(), sp(&g, &f).unwrap());
            let lhs = sp(&f.scale(&int(a)).add(&h.scale(&int(b))), &g).unwrap();
            let rhs = sp(&f, &g).unwrap().scale_int(a).add(&sp(&h, &g).unwrap().scale_int(b));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn torus_product_symmetric(f in symfunc(2, 2), g in symfunc(2, 2), f1 in symfunc(2, 1), g3 in symfunc(2, 3)) {
        let kinds = [
            WeightKind::Macdonald { k: 1 },
            WeightKind::Macdonald { k: 2 },
            WeightKind::QWhittaker { q_order: 3 },
            WeightKind::Jack { kappa: 1 },
            WeightKind::Jack { kappa: 2 },
        ];
        for w in kinds {
            prop_assert_eq!(sp_torus(&f, &g, w).unwrap(), sp_torus(&g, &f, w).unwrap());
            prop_assert_eq!(sp_torus(&f1.add(&f), &g3, w).unwrap(), sp_torus(&g3, &f1.add(&f), w).unwrap());
        }
    }
}

#[test]
fn macdonald_weight_is_permutation_invariant() {
    let perms: [&[usize]; 3] = [&[1, 0, 2], &[2, 0, 1], &[0, 2, 1]];
    for k in 1..=2 {
        let d = weight_delta(WeightKind::Macdonald { k }, 3).unwrap();
        for p in perms {
            assert_eq!(&d.poly().embed(3, p), d.poly());
        }
    }
}

/// At t = q the (q,t) weight on every p_λ collapses to 1, leaving the Hall
/// product, and the Gram matrix of monomials equals the t = q torus constant term in the
/// stable rank (computed on monomial expansions).
#[test]
fn schur_case_at_t_equals_q() {
    for d in 1..=4u32 {
        let ps = partitions_of(d, d as usize);
        for a in &ps {
            let z = macbax_core::symfunc::weight_qt(a).subs_mono(Var::T, [2, 0, 0, 0]).unwrap();
            assert_eq!(z, RatFunc::one());
            for b in &ps {
                let ma = monomial_sym(a, d as usize).unwrap();
                let mb = monomial_sym(b, d as usize).unwrap();
                let alg = sp_qt(&ma, &mb).unwrap().subs_mono(Var::T, [2, 0, 0, 0]).unwrap();
                let ct = sp_torus(&ma, &mb, WeightKind::Macdonald { k: 1 }).unwrap();
                assert_eq!(alg, ct, "{:?} {:?}", a, b);
            }
        }
    }
}
