//! verify: named sweeps of the library's identities.

use std::time::Instant;

use clap::ValueEnum;
use macbax_core::baxter::{
    baxter_check, baxter_equation_check, dual_baxter_check, dual_baxter_equation_check, mixed_check,
};
use macbax_core::gamma::{euler_inversion_check, jack_limit_check, reflection_check, reflection_q_check};
use macbax_core::jack::{
    elementary_sym, jack_baxter_check, jack_baxter_equation_check, jack_branch, jack_cauchy_check,
    jack_dual_baxter_check, jack_dual_baxter_equation_check, jack_dual_on_family, jack_gs, jack_macdonald_limit_check,
    jack_mixed_check, jack_norm_check, jack_pieri_check, sekiguchi_apply, sekiguchi_eigenvalue,
};
use macbax_core::macdonald::{
    apply_macdonald_op, b_norm, cauchy_check, dual_op_terms, macdonald_branch, macdonald_eigenvalue, macdonald_gs,
    pieri_check, self_duality_check, torus_norm_at,
};
use macbax_core::partition::Partition;
use macbax_core::pfunc::is_partition_tuple;
use macbax_core::qwhittaker::{
    apply_toda_dual, qwhit, qwhit_baxter_check, qwhit_baxter_equation_check, qwhit_cauchy_check,
    qwhit_dual_baxter_check, qwhit_dual_baxter_equation_check, qwhit_mixed_check, qwhit_norm_check, qwhit_pieri_check,
    qwhit_recursion_sum, toda_dual_eigenvalue, toda_terms,
};
use macbax_core::ratfunc::int;
use macbax_core::symfunc::{monomial_sym, sp_kappa, sp_q, sp_qt, sp_torus, SymFunc, WeightKind};
use macbax_core::{Error, RatFunc, Report};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::job::{invalid, CliError, Family, JobArgs, Param};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Orthogonality,
    Norms,
    Eigen,
    DualEigen,
    Pieri,
    Cauchy,
    Baxter,
    DualBaxter,
    BaxterEquation,
    DualBaxterEquation,
    Branching,
    Mixed,
    Duality,
    Gamma,
    Limits,
}

type Run = Box<dyn Fn() -> Result<Report, Error> + Send + Sync>;

pub struct Case {
    pub key: String,
    pub run: Run,
}

fn case(key: impl Into<String>, run: impl Fn() -> Result<Report, Error> + Send + Sync + 'static) -> Case {
    Case { key: key.into(), run: Box::new(run) }
}

fn single(name: &str, ok: bool, witness: impl FnOnce() -> String) -> Report {
    let mut r = Report::new(name);
    r.check(ok, witness);
    r
}

fn on_family(
    terms: Vec<(Vec<i64>, RatFunc)>,
    n: usize,
    family: &dyn Fn(&Partition, usize) -> Result<SymFunc, Error>,
) -> Result<SymFunc, Error> {
    let mut s = SymFunc::zero(n);
    for (nu, c) in terms {
        if !c.is_zero() && is_partition_tuple(&nu) {
            s = s.add(&family(&Partition::new(&nu)?, n)?.scale(&c));
        }
    }
    Ok(s)
}

/// Perturbation added to the expected side of the first case.
fn bump(perturb: bool, first: bool) -> RatFunc {
    if perturb && first {
        int(1)
    } else {
        int(0)
    }
}

fn gammas(a: &JobArgs) -> Vec<i64> {
    match a.gamma {
        Some(g) => vec![g],
        None => vec![-1, 0, 1],
    }
}

fn need_k(p: Param, what: &str) -> Result<i64, CliError> {
    match p {
        Param::TPow(k) => Ok(k),
        _ => invalid(format!("{} needs --t-spec q^k", what)),
    }
}

fn need_kappa(p: Param, what: &str) -> Result<u32, CliError> {
    match p {
        Param::Kappa(k) => Ok(k),
        _ => invalid(format!("{} needs --kappa", what)),
    }
}

fn symbolic_only(p: Param, what: &str) -> Result<(), CliError> {
    match p {
        Param::Symbolic => Ok(()),
        _ => invalid(format!("{} runs in the symbolic regime only", what)),
    }
}

fn supports_perturbation(s: Suite) -> bool {
    matches!(s, Suite::Orthogonality | Suite::Eigen | Suite::DualEigen | Suite::Branching | Suite::Gamma)
}

pub fn build_cases(suite: Suite, a: &JobArgs, perturb: bool) -> Result<Vec<Case>, CliError> {
    if perturb && !supports_perturbation(suite) {
        return invalid(format!("--debug-perturb is not available for suite {:?}", suite));
    }
    let mut cases = Vec::new();
    match suite {
        Suite::Gamma => {
            let kq = JobArgs::need(a.q_order, "--q-order")?;
            for k in 1..=3u32 {
                let pert = perturb && k == 1;
                cases.push(case(format!("reflection k={}", k), move || reflection_check(kq, k, pert)));
            }
            cases.push(case("reflection q", move || reflection_q_check(kq, 20, false)));
            cases.push(case("euler inversion", move || euler_inversion_check(6, kq)));
            return Ok(cases);
        }
        Suite::Limits => {
            let n = a.rank()?;
            let kappas: Vec<u32> = match a.param()? {
                Param::Kappa(k) => vec![k],
                Param::Symbolic => vec![1, 2],
                Param::TPow(_) => return invalid("limits takes --kappa"),
            };
            for &k in &kappas {
                cases.push(case(format!("gamma limit kappa={}", k), move || {
                    Ok(jack_limit_check(0.5, k, &[1e-2, 5e-3, 2.5e-3])?.0)
                }));
                for lam in a.sweep_partitions(n)? {
                    cases.push(case(format!("{:?} kappa={}", lam, k), move || {
                        jack_macdonald_limit_check(&lam, n, k, 1e-4, 1e-3)
                    }));
                }
            }
            return Ok(cases);
        }
        _ => {}
    }
    let (f, p) = a.family_param()?;
    let n = a.rank()?;
    let lams = a.sweep_partitions(n)?;
    match (suite, f) {
        (Suite::Orthogonality, _) => {
            symbolic_only(p, "orthogonality")?;
            let mut first = true;
            for (i, lam) in lams.iter().enumerate() {
                for mu in &lams[..i] {
                    let (lam, mu) = (lam.clone(), mu.clone());
                    let extra = bump(perturb, first);
                    first = false;
                    cases.push(case(format!("{:?} {:?}", lam, mu), move || {
                        // the algebraic products need degree ≤ rank
                        let r = n.max(lam.weight() as usize).max(mu.weight() as usize);
                        let v = match f {
                            Family::Macdonald => sp_qt(&macdonald_gs(&lam, r)?, &macdonald_gs(&mu, r)?)?,
                            Family::Qwhittaker => sp_q(&qwhit(&lam, r)?, &qwhit(&mu, r)?)?,
                            Family::Jack => sp_kappa(&jack_gs(&lam, r)?, &jack_gs(&mu, r)?)?,
                        };
                        Ok(single("orthogonality", v == extra, || format!("<P{:?},P{:?}> = {}", lam, mu, v)))
                    }));
                }
            }
        }
        (Suite::Norms, Family::Macdonald) => {
            for lam in lams {
                cases.push(case(format!("{:?}", lam), move || {
                    let r = n.max(lam.weight() as usize);
                    let pl = macdonald_gs(&lam, r)?;
                    let v = sp_qt(&pl, &pl)?.mul(&b_norm(&lam));
                    let mut rep = single("norms", v.is_one(), || format!("<P,P>·b = {}", v));
                    if let Param::TPow(k) = p {
                        let pk = macdonald_gs(&lam, n)?.at_t_qpow(k)?;
                        let ct = sp_torus(&pk, &pk, WeightKind::Macdonald { k: k as u32 })?;
                        let want = torus_norm_at(&lam, n, k)?;
                        rep.check(ct == want, || format!("torus {} vs {}", ct, want));
                    }
                    Ok(rep)
                }));
            }
        }
        (Suite::Norms, Family::Qwhittaker) => {
            let k = JobArgs::need(a.q_order, "--q-order")?;
            for lam in lams {
                cases.push(case(format!("{:?}", lam), move || qwhit_norm_check(&lam, n, k)));
            }
        }
        (Suite::Norms, Family::Jack) => {
            let k = need_kappa(p, "jack norms")?;
            for lam in lams {
                cases.push(case(format!("{:?}", lam), move || jack_norm_check(&lam, n, k)));
            }
        }
        (Suite::Eigen, _) => {
            symbolic_only(p, "eigen")?;
            for (i, lam) in lams.into_iter().enumerate() {
                let extra = bump(perturb, i == 0);
                cases.push(case(format!("{:?}", lam), move || {
                    let mut rep = Report::new("eigen");
                    match f {
                        Family::Macdonald => {
                            let pl = macdonald_gs(&lam, n)?;
                            for r in 1..=n {
                                let ev = macdonald_eigenvalue(&lam, r, n).add(&extra);
                                rep.check(apply_macdonald_op(r, &pl)? == pl.scale(&ev), || format!("M_{}", r));
                            }
                        }
                        Family::Qwhittaker => {
                            let pl = qwhit(&lam, n)?;
                            for r in 1..=n {
                                let ev = toda_dual_eigenvalue(&lam, r, n).add(&extra);
                                rep.check(apply_toda_dual(r, &pl)? == pl.scale(&ev), || format!("H^v_{}", r));
                            }
                        }
                        Family::Jack => {
                            let pl = jack_branch(&lam, n)?;
                            let got = sekiguchi_apply(&pl)?;
                            let mut ev = sekiguchi_eigenvalue(&lam, n);
                            ev[0] = ev[0].add(&extra);
                            for (j, (g, e)) in got.iter().zip(&ev).enumerate() {
                                rep.check(*g == pl.scale(e), || format!("X^{} coefficient", j));
                            }
                        }
                    }
                    Ok(rep)
                }));
            }
        }
        (Suite::DualEigen, _) => {
            symbolic_only(p, "dual-eigen")?;
            for (i, lam) in lams.into_iter().enumerate() {
                let pert = perturb && i == 0;
                cases.push(case(format!("{:?}", lam), move || {
                    let mut rep = Report::new("dual-eigen");
                    for r in 1..=n {
                        let er = elementary_sym(n, r)?;
                        let (lhs, pl) = match f {
                            Family::Macdonald => (
                                on_family(dual_op_terms(r, &lam.padded(n)), n, &|m, n| macdonald_branch(m, n))?,
                                macdonald_branch(&lam, n)?,
                            ),
                            Family::Qwhittaker => {
                                (on_family(toda_terms(r, &lam.padded(n)), n, &|m, n| qwhit(m, n))?, qwhit(&lam, n)?)
                            }
                            Family::Jack => (jack_dual_on_family(r, &lam, n)?, jack_branch(&lam, n)?),
                        };
                        let mut rhs = er.mul(&pl);
                        if pert {
                            rhs = rhs.add(&er);
                        }
                        rep.check(lhs == rhs, || format!("r={}: {}", r, lhs.sub(&rhs)));
                    }
                    Ok(rep)
                }));
            }
        }
        (Suite::Pieri, _) => {
            symbolic_only(p, "pieri")?;
            for lam in lams {
                for m in 0..=3u32 {
                    let lam = lam.clone();
                    cases.push(case(format!("{:?} m={}", lam, m), move || match f {
                        Family::Macdonald => pieri_check(&lam, m, n),
                        Family::Qwhittaker => qwhit_pieri_check(&lam, m, n),
                        Family::Jack => jack_pieri_check(&lam, m, n),
                    }));
                }
            }
        }
        (Suite::Cauchy, _) => {
            let d = JobArgs::need(a.max_degree, "--max-degree")?;
            let kappa = match p {
                Param::Kappa(k) => Some(k as i64),
                Param::Symbolic => None,
                Param::TPow(_) => return invalid("cauchy runs symbolically"),
            };
            for m in 1..=n {
                cases.push(case(format!("n={} m={}", n, m), move || match f {
                    Family::Macdonald => cauchy_check(n, m, d),
                    Family::Qwhittaker => qwhit_cauchy_check(n, m, d),
                    Family::Jack => jack_cauchy_check(n, m, d, kappa),
                }));
            }
        }
        (Suite::Baxter, Family::Macdonald) => {
            let k = need_k(p, "macdonald baxter")?;
            for lam in lams {
                for g in gammas(a) {
                    let lam = lam.clone();
                    cases.push(case(format!("{:?} gamma={}", lam, g), move || baxter_check(&lam, g, k as u32, n)));
                }
            }
        }
        (Suite::Baxter, Family::Qwhittaker) => {
            let mz = JobArgs::need(a.z_order, "--z-order")?;
            for lam in lams {
                cases.push(case(format!("{:?}", lam), move || qwhit_baxter_check(&lam, n, mz)));
            }
        }
        (Suite::Baxter, Family::Jack) => {
            let k = need_kappa(p, "jack baxter")?;
            for lam in lams {
                for g in gammas(a) {
                    let lam = lam.clone();
                    cases.push(case(format!("{:?} gamma={}", lam, g), move || jack_baxter_check(&lam, g, n, k)));
                }
            }
        }
        (Suite::DualBaxter, Family::Qwhittaker) => {
            let kq = JobArgs::need(a.q_order, "--q-order")?;
            for lam in lams {
                for g in gammas(a) {
                    let lam = lam.clone();
                    cases.push(case(format!("{:?} gamma={}", lam, g), move || qwhit_dual_baxter_check(&lam, g, n, kq)));
                }
            }
        }
        (Suite::DualBaxter, _) => {
            symbolic_only(p, "dual-baxter")?;
            let mz = JobArgs::need(a.z_order, "--z-order")?;
            for lam in lams {
                cases.push(case(format!("{:?}", lam), move || match f {
                    Family::Jack => jack_dual_baxter_check(&lam, n, mz),
                    _ => dual_baxter_check(&lam, n, mz),
                }));
            }
        }
        (Suite::BaxterEquation, Family::Macdonald) => {
            let k = need_k(p, "macdonald baxter-equation")?;
            for lam in lams {
                for g in gammas(a) {
                    let lam = lam.clone();
                    cases.push(case(format!("{:?} gamma={}", lam, g), move || baxter_equation_check(&lam, g, k, n)));
                }
            }
        }
        (Suite::BaxterEquation, Family::Qwhittaker) => {
            let mz = JobArgs::need(a.z_order, "--z-order")?;
            for lam in lams {
                cases.push(case(format!("{:?}", lam), move || qwhit_baxter_equation_check(&lam, n, mz)));
            }
        }
        (Suite::BaxterEquation, Family::Jack) => {
            let k = need_kappa(p, "jack baxter-equation")?;
            for lam in lams {
                for g in gammas(a) {
                    let lam = lam.clone();
                    cases.push(case(format!("{:?} gamma={}", lam, g), move || {
                        jack_baxter_equation_check(&lam, g, n, k)
                    }));
                }
            }
        }
        (Suite::DualBaxterEquation, Family::Macdonald) => {
            let mz = JobArgs::need(a.z_order, "--z-order")?;
            let k = match p {
                Param::TPow(k) => Some(k),
                _ => None,
            };
            cases.push(case(format!("n={} M={}", n, mz), move || dual_baxter_equation_check(n, mz, k)));
        }
        (Suite::DualBaxterEquation, Family::Qwhittaker) => {
            for lam in lams {
                for g in gammas(a) {
                    let lam = lam.clone();
                    cases.push(case(format!("{:?} gamma={}", lam, g), move || {
                        qwhit_dual_baxter_equation_check(&lam, g, n)
                    }));
                }
            }
        }
        (Suite::DualBaxterEquation, Family::Jack) => {
            let mz = JobArgs::need(a.z_order, "--z-order")?;
            for lam in lams {
                cases.push(case(format!("{:?}", lam), move || jack_dual_baxter_equation_check(&lam, n, mz)));
            }
        }
        (Suite::Branching, _) => {
            symbolic_only(p, "branching")?;
            for (i, lam) in lams.into_iter().enumerate() {
                let pert = perturb && i == 0;
                cases.push(case(format!("{:?}", lam), move || {
                    let (a, mut b) = match f {
                        Family::Macdonald => (macdonald_gs(&lam, n)?, macdonald_branch(&lam, n)?),
                        Family::Qwhittaker => {
                            let lower = |mu: &Partition| qwhit(mu, n - 1);
                            (qwhit(&lam, n)?, qwhit_recursion_sum(&lam, n, &lower)?)
                        }
                        Family::Jack => (jack_gs(&lam, n)?, jack_branch(&lam, n)?),
                    };
                    if pert {
                        b = b.add(&monomial_sym(&lam, n)?);
                    }
                    Ok(single("branching", a == b, || format!("{}", a.sub(&b))))
                }));
            }
        }
        (Suite::Mixed, _) => {
            let run: Box<dyn Fn(&Partition) -> Result<Report, Error> + Send + Sync> = match f {
                Family::Macdonald => {
                    let k = need_k(p, "macdonald mixed")? as u32;
                    Box::new(move |l| mixed_check(l, n, k))
                }
                Family::Qwhittaker => {
                    let kq = JobArgs::need(a.q_order, "--q-order")?;
                    Box::new(move |l| qwhit_mixed_check(l, n, kq))
                }
                Family::Jack => {
                    let k = need_kappa(p, "jack mixed")?;
                    Box::new(move |l| jack_mixed_check(l, n, k))
                }
            };
            let run = std::sync::Arc::new(run);
            for lam in lams {
                let run = run.clone();
                cases.push(case(format!("{:?}", lam), move || run(&lam)));
            }
        }
        (Suite::Duality, Family::Macdonald) => {
            let k = need_k(p, "duality")?;
            for lam in &lams {
                for mu in &lams {
                    let (lam, mu) = (lam.clone(), mu.clone());
                    cases.push(case(format!("{:?} {:?}", lam, mu), move || self_duality_check(&lam, &mu, n, k)));
                }
            }
        }
        (Suite::Duality, _) => return invalid("duality is a macdonald suite"),
        (Suite::Gamma | Suite::Limits, _) => unreachable!(),
    }
    Ok(cases)
}

#[derive(Serialize)]
struct CaseRecord {
    key: String,
    status: &'static str,
    checks: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<String>,
}

/// Runs the cases on `jobs` threads; the document lists cases in input
/// order regardless of scheduling.
pub fn run(suite: Suite, a: &JobArgs, perturb: bool) -> Result<(Value, bool), CliError> {
    let cases = build_cases(suite, a, perturb)?;
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(a.jobs.max(1))
        .build()
        .map_err(|e| CliError::Invalid(format!("thread pool: {}", e)))?;
    let results: Vec<CaseRecord> = pool.install(|| {
        cases
            .par_iter()
            .map(|c| match (c.run)() {
                Ok(r) => CaseRecord {
                    key: c.key.clone(),
                    status: if r.passed { "pass" } else { "fail" },
                    checks: r.cases,
                    witness: r.witness,
                },
                Err(e) => CaseRecord { key: c.key.clone(), status: "error", checks: 0, witness: Some(e.to_string()) },
            })
            .collect()
    });
    let passed = results.iter().all(|r| r.status == "pass");
    let first = results
        .iter()
        .find(|r| r.status != "pass")
        .map(|r| json!({ "key": r.key, "witness": r.witness }));
    let doc = json!({
        "command": "verify",
        "suite": suite,
        "parameters": a.params(),
        "passed": passed,
        "cases": results,
        "first_failure": first,
        "elapsed_ms": start.elapsed().as_millis() as u64,
    });
    Ok((doc, passed))
}
