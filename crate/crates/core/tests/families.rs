use macbax_core::baxter::apply_baxter;
use macbax_core::jack::{jack_branch, jack_dual_apply, jack_gs, jack_mixed_check, jack_pieri_phi, sekiguchi_apply, sekiguchi_eigenvalue};
use macbax_core::macdonald::{
    apply_macdonald_op, macdonald_branch, macdonald_eigenvalue, macdonald_gs, macdonald_gs_ext, pieri_phi, Extension,
};
use macbax_core::partition::{interlaces, partitions_of, partitions_up_to, Partition};
use macbax_core::pfunc::PartitionFunction;
use macbax_core::qwhittaker::{
    apply_toda, apply_toda_dual, delta_q, qwhit, qwhit_kernel, qwhit_pieri_phi, qwhit_recursion_sum,
};
use macbax_core::ratfunc::int;
use macbax_core::symfunc::{monomial_sym, sp_kappa, sp_torus, SymFunc, WeightKind};
use macbax_core::{RatFunc, Var};
use proptest::prelude::*;

fn p(v: &[i64]) -> Partition {
    Partition::new(v).unwrap()
}

/// Random symmetric function of degree ≤ max_deg in rank n, integer m-coefficients.
fn symfunc(n: usize, max_deg: u32) -> impl Strategy<Value = SymFunc> {
    let ps = partitions_up_to(max_deg, n);
    let k = ps.len();
    prop::collection::vec(-2i64..=2, k).prop_map(move |cs| {
        let mut s = SymFunc::zero(n);
        for (lam, c) in ps.iter().zip(cs) {
            s = s.add(&monomial_sym(lam, n).unwrap().scale(&int(c)));
        }
        s
    })
}

/// Random RatFunc-valued function on partitions of weight ≤ 3, length ≤ n.
fn pfunc(n: usize) -> impl Strategy<Value = PartitionFunction<RatFunc>> {
    let ps = partitions_up_to(3, n);
    let k = ps.len();
    prop::collection::vec(-2i64..=2, k).prop_map(move |cs| {
        ps.iter().cloned().zip(cs).filter(|(_, c)| *c != 0).map(|(l, c)| (l, int(c))).collect()
    })
}

fn pf_eq(a: &PartitionFunction<RatFunc>, b: &PartitionFunction<RatFunc>) -> bool {
    let keys: std::collections::BTreeSet<_> = a.keys().chain(b.keys()).collect();
    keys.into_iter().all(|k| a.get(k).cloned().unwrap_or_else(RatFunc::zero) == b.get(k).cloned().unwrap_or_else(RatFunc::zero))
}

#[test]
fn macdonald_eigenfunctions() {
    for n in 1..=3 {
        for lam in partitions_up_to(5, n) {
            let pl = macdonald_gs(&lam, n).unwrap();
            for r in 1..=n {
                let got = apply_macdonald_op(r, &pl).unwrap();
                assert_eq!(got, pl.scale(&macdonald_eigenvalue(&lam, r, n)), "{:?} r={}", lam, r);
            }
        }
    }
}

#[test]
fn gram_schmidt_independent_of_extension() {
    for n in 1..=4 {
        for lam in partitions_up_to(6, n) {
            let a = macdonald_gs_ext(&lam, n, Extension::NStat).unwrap();
            let b = macdonald_gs_ext(&lam, n, Extension::Lex).unwrap();
            assert_eq!(a, b, "{:?} n={}", lam, n);
            assert_eq!(a.coeff(&lam), int(1));
        }
    }
}

#[test]
fn torus_orthogonality_at_t_power_of_q() {
    for k in 1..=2i64 {
        for n in 1..=3 {
            let ps = partitions_up_to(3, n);
            let polys: Vec<_> = ps.iter().map(|l| macdonald_gs(l, n).unwrap().at_t_qpow(k).unwrap()).collect();
            for i in 0..ps.len() {
                for j in 0..i {
                    let v = sp_torus(&polys[i], &polys[j], WeightKind::Macdonald { k: k as u32 }).unwrap();
                    assert!(v.is_zero(), "k={} {:?} {:?}", k, ps[i], ps[j]);
                }
            }
        }
    }
}

#[test]
fn pieri_coefficients_vanish_off_interlacing() {
    for n in 1..=3 {
        for lam in partitions_up_to(3, n) {
            for m in 0..=3 {
                for mu in partitions_of(lam.weight() + m, n) {
                    if interlaces(&mu, &lam) {
                        continue;
                    }
                    assert!(pieri_phi(&mu, &lam, n).unwrap().is_zero(), "{:?}/{:?}", mu, lam);
                    assert!(qwhit_pieri_phi(&mu, &lam, n).is_zero(), "{:?}/{:?}", mu, lam);
                    assert!(jack_pieri_phi(&mu, &lam, n).unwrap().is_zero(), "{:?}/{:?}", mu, lam);
                }
            }
        }
    }
}

/// Branching sum against Gram–Schmidt at t = 0, so the two sides are built
/// by different routes.
#[test]
fn qwhittaker_constructions_agree() {
    for n in 1..=4 {
        for lam in partitions_up_to(6, n) {
            let direct = qwhit(&lam, n).unwrap();
            let rec = qwhit_recursion_sum(&lam, n, &|mu: &Partition| qwhit(mu, n - 1)).unwrap();
            assert_eq!(direct, rec, "{:?} n={}", lam, n);
            let gs = macdonald_gs(&lam, n).unwrap().try_map(|c| c.subs_zero(Var::T)).unwrap();
            assert_eq!(direct, gs.scale(&int(1).div(&delta_q(&lam, n))), "{:?} n={}", lam, n);
        }
    }
}

#[test]
fn qwhittaker_kernel_is_macdonald_at_t_zero() {
    for n in 1..=3 {
        for lam in partitions_up_to(4, n) {
            for m in 0..=3 {
                for mu in partitions_of(lam.weight() + m, n) {
                    if !interlaces(&mu, &lam) {
                        continue;
                    }
                    let mac = pieri_phi(&mu, &lam, n).unwrap().subs_zero(Var::T).unwrap();
                    assert_eq!(qwhit_kernel(&mu, &lam, n), mac.div(&delta_q(&lam, n)), "{:?}/{:?}", mu, lam);
                }
            }
        }
    }
}

#[test]
fn jack_orthogonality() {
    for n in 1..=4 {
        for w in 0..=5 {
            let ps = partitions_of(w, n);
            let polys: Vec<_> = ps.iter().map(|l| jack_gs(l, n).unwrap()).collect();
            for i in 0..ps.len() {
                for j in 0..i {
                    if w as usize <= n {
                        assert!(sp_kappa(&polys[i], &polys[j]).unwrap().is_zero(), "{:?} {:?}", ps[i], ps[j]);
                    }
                }
            }
            if w as usize > n {
                // outside the stable range: compare against the stable-rank polynomials
                for l in &ps {
                    assert_eq!(jack_gs(l, w as usize).unwrap().with_rank(n), jack_gs(l, n).unwrap());
                }
            }
        }
    }
}

#[test]
fn sekiguchi_eigen_relation() {
    for n in 1..=3 {
        for lam in partitions_up_to(4, n) {
            let pl = jack_branch(&lam, n).unwrap();
            let got = sekiguchi_apply(&pl).unwrap();
            let ev = sekiguchi_eigenvalue(&lam, n);
            assert_eq!(got.len(), ev.len());
            for (g, e) in got.iter().zip(&ev) {
                assert_eq!(g, &pl.scale(e), "{:?}", lam);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]
    #[test]
    fn macdonald_operators_commute(f in symfunc(3, 4)) {
        let ops: Vec<SymFunc> = (1..=3).map(|r| apply_macdonald_op(r, &f).unwrap()).collect();
        for r in 1..=3 {
            for s in 1..r {
                let rs = apply_macdonald_op(r, &ops[s - 1]).unwrap();
                let sr = apply_macdonald_op(s, &ops[r - 1]).unwrap();
                prop_assert_eq!(rs, sr);
            }
        }
    }

    #[test]
    fn dual_toda_operators_commute(f in symfunc(3, 4)) {
        let ops: Vec<SymFunc> = (1..=3).map(|r| apply_toda_dual(r, &f).unwrap()).collect();
        for r in 1..=3 {
            for s in 1..r {
                prop_assert_eq!(apply_toda_dual(r, &ops[s - 1]).unwrap(), apply_toda_dual(s, &ops[r - 1]).unwrap());
            }
        }
    }

    #[test]
    fn baxter_commutes_with_hamiltonians(f in symfunc(2, 3), gamma in -1i64..=1, k in 1u32..=2) {
        let fk = f.at_t_qpow(k as i64).unwrap();
        let qf = apply_baxter(&fk, gamma, k).unwrap();
        for r in 1..=2 {
            let a = apply_macdonald_op(r, &qf).unwrap().at_t_qpow(k as i64).unwrap();
            let mf = apply_macdonald_op(r, &fk).unwrap().at_t_qpow(k as i64).unwrap();
            let b = apply_baxter(&mf, gamma, k).unwrap();
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn lambda_side_operators_commute(f in pfunc(3)) {
        for r in 1..=3 {
            for s in 1..r {
                let a = apply_toda(r, 3, &apply_toda(s, 3, &f));
                let b = apply_toda(s, 3, &apply_toda(r, 3, &f));
                prop_assert!(pf_eq(&a, &b), "toda r={} s={}", r, s);
                let a = jack_dual_apply(r, 3, &jack_dual_apply(s, 3, &f));
                let b = jack_dual_apply(s, 3, &jack_dual_apply(r, 3, &f));
                prop_assert!(pf_eq(&a, &b), "jack r={} s={}", r, s);
            }
        }
    }
}

#[test]
fn small_examples() {
    let b = macdonald_branch(&p(&[2]), 2).unwrap();
    assert_eq!(b, macdonald_gs(&p(&[2]), 2).unwrap());
    assert_eq!(qwhit(&p(&[1]), 2).unwrap(), monomial_sym(&p(&[1]), 2).unwrap().scale(&int(1).div(&int(1).sub(&macbax_core::ratfunc::q()))));
}

#[test]
fn jack_mixed_rank_three() {
    for kappa in 1..=2 {
        for lam in partitions_up_to(3, 3) {
            let r = jack_mixed_check(&lam, 3, kappa).unwrap();
            assert!(r.passed, "{:?} kappa={} {:?}", lam, kappa, r.witness);
        }
    }
}
