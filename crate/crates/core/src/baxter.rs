//! Baxter operators for Macdonald polynomials: the torus-integral operator
//! Q_γ, the Pieri-sum dual operator, both Baxter equations, the type-I
//! recursion and the mixed representations.

use std::collections::HashMap;

use crate::gamma::{gamma_coeff_base, gamma_qt_coeff, qm, qtm, GammaRatio, T, T_OVER_Q};
use crate::laurent::LaurentSeries;
use crate::macdonald::{b_norm, branching_psi, macdonald_branch, pieri_phi, torus_norm_at};
use crate::partition::{interlacing_above, interlacing_below, partitions_of, Partition};
use crate::ratfunc::{LMono, RatFunc};
use crate::report::Report;
use crate::symfunc::{factorial, monomial_sym, weight_delta, SymFunc, WeightKind};
use crate::xpoly::{XPoly, MAXVARS};
use crate::{Error, Var};

/// Multiplies by (x₁⋯x_n)^γ; fails if a negative exponent would appear.
pub fn shift_all(f: &SymFunc, gamma: i64) -> Result<SymFunc, Error> {
    let n = f.rank();
    let mut out = SymFunc::zero(n);
    for (p, c) in f.terms() {
        let v: Vec<i64> = p.padded(n).iter().map(|x| x + gamma).collect();
        if v.iter().any(|&x| x < 0) {
            return Err(Error::Domain(format!("(x₁⋯x_n)^{} · m_{:?} is not a polynomial", gamma, p)));
        }
        out.add_term(Partition::new(&v)?, c.clone());
    }
    Ok(out)
}

/// g_m(x) = [y^m] ∏ᵢ G(xᵢy) for G(u) = Σ cₖuᵏ, in rank n.
pub fn kernel_slice(n: usize, m: u32, coef: &dyn Fn(u32) -> RatFunc) -> SymFunc {
    let mut s = SymFunc::zero(n);
    for mu in partitions_of(m, n) {
        let mut c = RatFunc::one();
        for &p in mu.parts() {
            c = c.mul(&coef(p));
        }
        s.add_term(mu.clone(), c);
    }
    s
}

/// CT_y[(∏yⱼ)^γ ∏_{i≤N, j≤r} G(xᵢyⱼ) h(y)] multiplied by (∏xᵢ)^γ, for a
/// Laurent polynomial h in r variables. Coefficients are truncated after
/// q^K when `trunc` is set.
pub fn kernel_apply(
    h: &XPoly<RatFunc>,
    gamma: i64,
    big_n: usize,
    coef: &dyn Fn(u32) -> RatFunc,
    trunc: Option<u32>,
) -> Result<SymFunc, Error> {
    let r = h.nvars();
    let cut = |s: SymFunc| -> Result<SymFunc, Error> {
        match trunc {
            Some(k) => s.truncate_q(k as i32),
            None => Ok(s),
        }
    };
    let mut slices: HashMap<u32, SymFunc> = HashMap::new();
    let mut prods: HashMap<Vec<u32>, SymFunc> = HashMap::new();
    let mut acc = SymFunc::zero(big_n);
    for (e, c) in h.terms() {
        let mut ms = Vec::with_capacity(r);
        let mut ok = true;
        for j in 0..r {
            let m = -(e[j] as i64) - gamma;
            if m < 0 {
                ok = false;
                break;
            }
            ms.push(m as u32);
        }
        if !ok {
            continue;
        }
        ms.sort_unstable();
        if !prods.contains_key(&ms) {
            let mut p = SymFunc::one(big_n);
            for &m in &ms {
                let g = slices.entry(m).or_insert_with(|| kernel_slice(big_n, m, coef)).clone();
                p = cut(p.mul(&g))?;
            }
            prods.insert(ms.clone(), p);
        }
        acc = acc.add(&prods[&ms].scale(c));
    }
    shift_all(&cut(acc)?, gamma)
}

/// h(y) = Δ(y) f(y⁻¹).
pub fn weighted_reflection(f: &SymFunc, delta: &LaurentSeries) -> Result<XPoly<RatFunc>, Error> {
    let fi = f.to_xpoly().invert_vars();
    let fl = match delta.q_order() {
        Some(k) => LaurentSeries::truncated(fi, k)?,
        None => LaurentSeries::exact(fi),
    };
    Ok(fl.mul(delta)?.poly().clone())
}

/// Γ_{q,q^k} Euler coefficient.
pub fn gamma_coeff_qk(k: i64) -> impl Fn(u32) -> RatFunc {
    move |m| gamma_coeff_base(m, qm(k))
}

/// Q_γ f at t = q^k, including the 1/n! of the torus measure.
pub fn apply_baxter(f: &SymFunc, gamma: i64, k: u32) -> Result<SymFunc, Error> {
    let n = f.rank();
    let delta = weight_delta(WeightKind::Macdonald { k }, n)?;
    let h = weighted_reflection(f, &delta)?;
    let raw = kernel_apply(&h, gamma, n, &gamma_coeff_qk(k as i64), None)?;
    Ok(raw.scale(&RatFunc::from_bigint(factorial(n)).inv()))
}

/// L_γ(λ) = ∏ᵢ Γ_{q,tq⁻¹}(q)/Γ_{q,tq⁻¹}(t^{n−i}q^{λᵢ−γ+1}); `None` on the
/// zero branch λ_n < γ.
pub fn baxter_eigenvalue(lam: &Partition, gamma: i64, n: usize) -> Option<GammaRatio> {
    let l = lam.padded(n);
    if l[n - 1] < gamma {
        return None;
    }
    let mut g = GammaRatio::new(T_OVER_Q);
    for i in 0..n {
        g.push(qm(1), qtm(l[i] - gamma + 1, (n - 1 - i) as i64));
    }
    Some(g)
}

/// L_γ(λ) at t = q^s (any integer s).
pub fn baxter_eigenvalue_at(lam: &Partition, gamma: i64, n: usize, s: i64) -> Result<RatFunc, Error> {
    match baxter_eigenvalue(lam, gamma, n) {
        None => Ok(RatFunc::zero()),
        Some(g) => g.specialize_t(s),
    }
}

/// λ − γ on all n parts, if it stays a partition.
pub fn shift_partition(lam: &Partition, gamma: i64, n: usize) -> Option<Partition> {
    if gamma >= 0 {
        lam.shift_down(gamma as u32, n)
    } else {
        Some(lam.shift_up((-gamma) as u32, n))
    }
}

/// b_{λ−γ}·⟨P_λ,P_λ⟩' at t = q^k (the product form from the proof).
pub fn baxter_eigenvalue_product_at(lam: &Partition, gamma: i64, n: usize, k: i64) -> Result<RatFunc, Error> {
    match shift_partition(lam, gamma, n) {
        None => Ok(RatFunc::zero()),
        Some(mu) => Ok(b_norm(&mu).subs_mono(Var::T, qm(k))?.mul(&torus_norm_at(lam, n, k)?)),
    }
}

/// Q_γ P_λ = L_γ(λ) P_λ at t = q^k; also compares the two eigenvalue forms.
pub fn baxter_check(lam: &Partition, gamma: i64, k: u32, n: usize) -> Result<Report, Error> {
    let mut rep = Report::new("macdonald baxter")
        .param("lambda", format!("{:?}", lam))
        .param("gamma", gamma)
        .param("k", k)
        .param("rank", n);
    let pl = macdonald_branch(lam, n)?.at_t_qpow(k as i64)?;
    let l = baxter_eigenvalue_at(lam, gamma, n, k as i64)?;
    let lp = baxter_eigenvalue_product_at(lam, gamma, n, k as i64)?;
    rep.check(l == lp, || format!("eigenvalue forms differ: {} vs {}", l, lp));
    let lhs = apply_baxter(&pl, gamma, k)?;
    let rhs = pl.scale(&l);
    rep.check(lhs == rhs, || format!("Q P - L P = {}", lhs.sub(&rhs)));
    Ok(rep)
}

/// c(λ+kϱ; −q^{−γ}) L_γ(λ+kϱ) at t = q^{−k} against L_{γ+1}(λ+(k−1)ϱ) at
/// t = q^{1−k}.
pub fn baxter_equation_check(lam: &Partition, gamma: i64, k: i64, n: usize) -> Result<Report, Error> {
    let mut rep = Report::new("macdonald baxter equation")
        .param("lambda", format!("{:?}", lam))
        .param("gamma", gamma)
        .param("k", k)
        .param("rank", n);
    let l = lam.padded(n);
    let lifted = |s: i64| -> Result<Partition, Error> {
        Partition::new(&(0..n).map(|i| l[i] + s * (n - 1 - i) as i64).collect::<Vec<_>>())
    };
    let lk = lifted(k)?;
    let lk1 = lifted(k - 1)?;
    // c_{n}(λ; X) = (1 − t)^{−n} ∏(1 + t^{ϱᵢ} q^{λᵢ} X), then t = q^{−k}, X = −q^{−γ}
    let lkp = lk.padded(n);
    let mut c = RatFunc::one_minus(T).pow(-(n as i64));
    for i in 0..n {
        let y = RatFunc::lmono(qtm(lkp[i], (n - 1 - i) as i64));
        c = c.mul(&RatFunc::one().sub(&y.mul(&RatFunc::lmono(qm(-gamma)))));
    }
    let c = c.subs_mono(Var::T, qm(-k))?;
    let lhs = c.mul(&baxter_eigenvalue_at(&lk, gamma, n, -k)?);
    let rhs = baxter_eigenvalue_at(&lk1, gamma + 1, n, 1 - k)?;
    rep.check(lhs == rhs, || format!("{} vs {}", lhs, rhs));
    Ok(rep)
}

/// z^m coefficients (m = 0..M) of the dual Baxter operator on P_λ:
/// Σ_{|μ|−|λ|=m} φ_{μ/λ} P_μ.
pub fn dual_baxter_apply(lam: &Partition, n: usize, m_max: u32) -> Result<Vec<SymFunc>, Error> {
    let mut out = Vec::new();
    for m in 0..=m_max {
        let mut s = SymFunc::zero(n);
        for mu in interlacing_above(lam, n, m) {
            let c = pieri_phi(&mu, lam, n)?;
            if !c.is_zero() {
                s = s.add(&macdonald_branch(&mu, n)?.scale(&c));
            }
        }
        out.push(s);
    }
    Ok(out)
}

/// Dual Baxter coefficients against [z^m] ∏Γ_{q,t}(z xᵢ)·P_λ, and the one-row
/// slice against b_{(m)} P_{(m)}.
pub fn dual_baxter_check(lam: &Partition, n: usize, m_max: u32) -> Result<Report, Error> {
    let mut rep = Report::new("macdonald dual baxter")
        .param("lambda", format!("{:?}", lam))
        .param("rank", n)
        .param("M", m_max);
    let pl = macdonald_branch(lam, n)?;
    let coeffs = dual_baxter_apply(lam, n, m_max)?;
    for (m, c) in coeffs.iter().enumerate() {
        let g = kernel_slice(n, m as u32, &gamma_qt_coeff);
        let rhs = g.mul(&pl);
        rep.check(*c == rhs, || format!("z^{}: {}", m, c.sub(&rhs)));
        let row = macdonald_branch(&Partition::row(m as u32), n)?.scale(&gamma_qt_coeff(m as u32));
        rep.check(g == row, || format!("slice z^{} differs from b_(m) P_(m)", m));
    }
    Ok(rep)
}

/// ∏(1 − z xᵢ)·L^∨_z(x; q, T) = L^∨_{qz}(x; q, T q⁻¹) through z^M, with T
/// either symbolic t (`k = None`) or q^{−k}.
pub fn dual_baxter_equation_check(n: usize, m_max: u32, k: Option<i64>) -> Result<Report, Error> {
    let mut rep = Report::new("macdonald dual baxter equation").param("rank", n).param("M", m_max);
    let (base, lower): (LMono, LMono) = match k {
        None => (T, T_OVER_Q),
        Some(k) => {
            rep = rep.param("k", k);
            (qm(-k), qm(-k - 1))
        }
    };
    let c = move |m: u32| gamma_coeff_base(m, base);
    let c1 = move |m: u32| gamma_coeff_base(m, lower);
    let es: Vec<SymFunc> = (0..=n.min(m_max as usize))
        .map(|j| monomial_sym(&Partition::from_sorted(vec![1; j]), n).expect("length ≤ n"))
        .collect();
    for m in 0..=m_max {
        let mut lhs = SymFunc::zero(n);
        for (j, e) in es.iter().enumerate().filter(|(j, _)| *j as u32 <= m) {
            let term = e.mul(&kernel_slice(n, m - j as u32, &c));
            lhs = if j % 2 == 0 { lhs.add(&term) } else { lhs.sub(&term) };
        }
        let rhs = kernel_slice(n, m, &c1).scale(&RatFunc::lmono(qm(m as i64)));
        rep.check(lhs == rhs, || format!("z^{}: {}", m, lhs.sub(&rhs)));
    }
    Ok(rep)
}

/// The raw type-I integral: CT over ℓ torus variables of
/// (∏x)^c Π_{ℓ+1,ℓ}(x, y) Δ(y) f(y⁻¹) ∏y^c at t = q^k.
pub fn recursion_i_raw(c: i64, f: &SymFunc, k: u32) -> Result<SymFunc, Error> {
    let l = f.rank();
    if l == 0 {
        return shift_all(&f.with_rank(1), c);
    }
    let delta = weight_delta(WeightKind::Macdonald { k }, l)?;
    let h = weighted_reflection(f, &delta)?;
    kernel_apply(&h, c, l + 1, &gamma_coeff_qk(k as i64), None)
}

/// The constant the raw type-I integral produces on P_{λ'}:
/// ℓ!·b_{λ'−c}·⟨P_{λ'},P_{λ'}⟩' at t = q^k.
pub fn recursion_i_constant(lam: &Partition, n: usize, k: u32) -> Result<RatFunc, Error> {
    let l = n - 1;
    let c = lam.part(l) as i64;
    let top = lam.truncate(l);
    if l == 0 {
        return Ok(RatFunc::one());
    }
    let shifted = shift_partition(&top, c, l).ok_or_else(|| Error::Domain("λ' − c not a partition".into()))?;
    Ok(RatFunc::from_bigint(factorial(l))
        .mul(&b_norm(&shifted).subs_mono(Var::T, qm(k as i64))?)
        .mul(&torus_norm_at(&top, l, k as i64)?))
}

/// P_λ in rank n from P_{λ'} in rank n − 1 by the type-I integral,
/// normalized by [`recursion_i_constant`].
pub fn recursion_i_apply(lam: &Partition, n: usize, f: &SymFunc, k: u32) -> Result<SymFunc, Error> {
    let raw = recursion_i_raw(lam.part(n - 1) as i64, f, k)?;
    Ok(raw.scale(&recursion_i_constant(lam, n, k)?.inv()))
}

/// Stage of a mixed representation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Stage {
    I,
    II,
}

/// P_λ of rank n built by composing R^{ε_j}_{j+1,j} from the rank-1 seed;
/// all stages at t = q^k. `eps` has length n − 1.
pub fn mixed_representation(lam: &Partition, n: usize, eps: &[Stage], k: u32) -> Result<SymFunc, Error> {
    if eps.len() + 1 != n {
        return Err(Error::Domain(format!("need {} stages, got {}", n - 1, eps.len())));
    }
    let mut memo: HashMap<(Partition, usize), SymFunc> = HashMap::new();
    mixed_rec(lam, n, eps, k, &mut memo)
}

fn mixed_rec(
    lam: &Partition,
    j: usize,
    eps: &[Stage],
    k: u32,
    memo: &mut HashMap<(Partition, usize), SymFunc>,
) -> Result<SymFunc, Error> {
    if let Some(v) = memo.get(&(lam.clone(), j)) {
        return Ok(v.clone());
    }
    let out = if j == 1 {
        let mut s = SymFunc::zero(1);
        s.add_term(lam.clone(), RatFunc::one());
        s
    } else {
        match eps[j - 2] {
            Stage::I => {
                let lower = mixed_rec(&lam.truncate(j - 1), j - 1, eps, k, memo)?;
                recursion_i_apply(lam, j, &lower, k)?
            }
            Stage::II => {
                let mut acc = XPoly::zero(j);
                let map: Vec<usize> = (0..j - 1).collect();
                for mu in interlacing_below(lam, j) {
                    let c = branching_psi(lam, &mu, j)?.subs_mono(Var::T, qm(k as i64))?;
                    if c.is_zero() {
                        continue;
                    }
                    let mut e = [0i16; MAXVARS];
                    e[j - 1] = (lam.weight() - mu.weight()) as i16;
                    let p = mixed_rec(&mu, j - 1, eps, k, memo)?;
                    acc = acc.add(&p.to_xpoly().embed(j, &map).mul_exps(&e).scale(&c));
                }
                SymFunc::from_xpoly(&acc)?
            }
        }
    };
    memo.insert((lam.clone(), j), out.clone());
    Ok(out)
}

/// All 2^{n−1} stage arrays.
pub fn all_stage_arrays(n: usize) -> Vec<Vec<Stage>> {
    (0..1u32 << (n - 1))
        .map(|mask| (0..n - 1).map(|i| if mask & (1 << i) != 0 { Stage::I } else { Stage::II }).collect())
        .collect()
}

/// Every stage array reproduces P_λ at t = q^k.
pub fn mixed_check(lam: &Partition, n: usize, k: u32) -> Result<Report, Error> {
    let mut rep = Report::new("macdonald mixed representations")
        .param("lambda", format!("{:?}", lam))
        .param("rank", n)
        .param("k", k);
    let target = macdonald_branch(lam, n)?.at_t_qpow(k as i64)?;
    for eps in all_stage_arrays(n) {
        let v = mixed_representation(lam, n, &eps, k)?;
        rep.check(v == target, || format!("{:?}: {}", eps, v.sub(&target)));
    }
    Ok(rep)
}
