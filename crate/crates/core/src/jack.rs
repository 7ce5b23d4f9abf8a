//! Jack polynomials P^{(κ)}_λ over ℚ(κ): Gram–Schmidt and branching
//! constructions, Sekiguchi operators, dual difference Hamiltonians,
//! Pieri/Cauchy, both Baxter operators and the recursions.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock};

use crate::baxter::{kernel_apply, kernel_slice, shift_all, shift_partition, weighted_reflection, Stage};
use crate::gamma::{gamma_kappa_coeff, KGammaRatio};
use crate::macdonald::{branch_sum, cauchy_generic, divide_by_vandermonde, extension_order, macdonald_gs, pieri_check_with, Extension};
use crate::memo::WriteOnce;
use crate::partition::{interlaces, interlacing_above, interlacing_below, partitions_of, Partition};
use crate::pfunc::{apply_shift, is_partition_tuple, shifted, subsets, Linear, PartitionFunction};
use crate::ratfunc::RatFunc;
use crate::report::Report;
use crate::symfunc::{distinct_permutations, factorial, gram_schmidt, monomial_sym, sp_torus, weight_delta, weight_kappa, SymFunc, WeightKind};
use crate::xpoly::{Exps, XPoly, MAXVARS};
use crate::{Error, Var};

fn kap() -> RatFunc {
    RatFunc::var(Var::K)
}

/// a + bκ.
fn lin(a: i64, b: i64) -> RatFunc {
    kap().scale_int(b).add(&RatFunc::from_int(a))
}

fn at_k(c: &RatFunc, kappa: i64) -> Result<RatFunc, Error> {
    c.subs_int(Var::K, kappa)
}

/// (κ − 1)!.
fn gamma_int(kappa: i64) -> RatFunc {
    RatFunc::from_bigint(factorial((kappa - 1) as usize))
}

#[derive(Clone, Debug, PartialEq)]
pub struct JackEntry {
    pub lam: Partition,
    pub rank: usize,
    pub poly: SymFunc,
}

type GsTable = BTreeMap<Partition, (BTreeMap<Partition, RatFunc>, RatFunc)>;

fn gs_degree(w: u32, ext: Extension) -> Arc<GsTable> {
    static C: OnceLock<WriteOnce<(u32, Extension), GsTable>> = OnceLock::new();
    C.get_or_init(WriteOnce::default)
        .get_or_try::<(), _>(&(w, ext), || {
            let order = extension_order(w, w.max(1) as usize, ext);
            Ok(gram_schmidt(&order, weight_kappa).into_iter().map(|(l, m, n)| (l, (m, n))).collect())
        })
        .expect("infallible")
}

pub fn jack_gs_ext(lam: &Partition, n: usize, ext: Extension) -> Result<SymFunc, Error> {
    if lam.len() > n {
        return Err(Error::LengthOverflow { len: lam.len(), rank: n });
    }
    let (m, _) = &gs_degree(lam.weight(), ext)[lam];
    Ok(SymFunc::from_map(lam.weight().max(1) as usize, m.clone())?.with_rank(n))
}

/// P^{(κ)}_λ by Gram–Schmidt against the κ scalar product.
pub fn jack_gs(lam: &Partition, n: usize) -> Result<SymFunc, Error> {
    jack_gs_ext(lam, n, Extension::NStat)
}

pub fn jack_entry(lam: &Partition, n: usize) -> Result<JackEntry, Error> {
    Ok(JackEntry { lam: lam.clone(), rank: n, poly: jack_gs(lam, n)? })
}

/// ⟨P^{(κ)}_λ, P^{(κ)}_λ⟩_κ from the Gram–Schmidt run.
pub fn jack_gs_norm(lam: &Partition) -> RatFunc {
    gs_degree(lam.weight(), Extension::NStat)[lam].1.clone()
}

/// Pushes the degenerate Γ_{q,tq⁻¹}(t^d q^a)/Γ_{q,tq⁻¹}(t^d q^b), i.e.
/// Γ(a + dκ)Γ(b − 1 + (d+1)κ)/(Γ(a − 1 + (d+1)κ)Γ(b + dκ)).
fn push_limit(g: &mut KGammaRatio, d: i64, a: i64, b: i64) {
    g.push((a, d), (a - 1, d + 1));
    g.push((b - 1, d + 1), (b, d));
}

/// Branching coefficient ψ^{(κ)}_{λ/μ}.
pub fn jack_psi(lam: &Partition, mu: &Partition, n: usize) -> Result<RatFunc, Error> {
    if n == 0 || lam.len() > n || mu.len() + 1 > n.max(1) || !interlaces(lam, mu) {
        return Ok(RatFunc::zero());
    }
    let l = lam.padded(n + 1);
    let m = mu.padded(n);
    let mut g = KGammaRatio::default();
    for i in 0..n - 1 {
        for j in i..n - 1 {
            let d = (j - i) as i64;
            push_limit(&mut g, d, m[i] - m[j] + 1, l[i] - m[j] + 1);
            push_limit(&mut g, d, l[i] - l[j + 1] + 1, m[i] - l[j + 1] + 1);
        }
    }
    g.value()
}

/// P^{(κ)}_λ by branching.
pub fn jack_branch(lam: &Partition, n: usize) -> Result<SymFunc, Error> {
    static C: OnceLock<WriteOnce<(Partition, usize), SymFunc>> = OnceLock::new();
    let v = C.get_or_init(WriteOnce::default).get_or_try(&(lam.clone(), n), || {
        jack_recursion_sum(lam, n, &|mu| jack_branch(mu, n - 1))
    })?;
    Ok((*v).clone())
}

/// Sum-type recursion: Σ_μ x_n^{|λ|−|μ|} ψ^{(κ)}_{λ/μ} P_μ(x₁..x_{n−1}).
pub fn jack_recursion_sum(lam: &Partition, n: usize, lower: &dyn Fn(&Partition) -> Result<SymFunc, Error>) -> Result<SymFunc, Error> {
    let x = branch_sum(lam, n, lower, |mu| jack_psi(lam, mu, n))?;
    SymFunc::from_xpoly(&x)
}

/// b^{(κ)}_λ by the box product.
pub fn jack_b(lam: &Partition) -> RatFunc {
    let c = lam.conjugate();
    let mut r = RatFunc::one();
    for i in 0..lam.len() {
        for j in 0..lam.part(i) as usize {
            let li = lam.part(i) as i64;
            let cj = c.part(j) as i64;
            let (i1, j1) = (i as i64 + 1, j as i64 + 1);
            r = r.mul(&lin(li - j1, cj + 1 - i1)).div(&lin(li + 1 - j1, cj - i1));
        }
    }
    r
}

/// ⟨P^{(κ)}_λ, P^{(κ)}_λ⟩' as Γ factors (unpaired slopes; evaluate at integer κ).
pub fn jack_torus_norm(lam: &Partition, n: usize) -> KGammaRatio {
    let l = lam.padded(n);
    let mut g = KGammaRatio::default();
    for i in 0..n {
        for j in i + 1..n {
            let d = (j - i) as i64;
            let a = l[i] - l[j];
            g.push((a, d + 1), (a, d));
            g.push((a + 1, d - 1), (a + 1, d));
        }
    }
    g
}

pub fn jack_torus_norm_at(lam: &Partition, n: usize, kappa: i64) -> Result<RatFunc, Error> {
    Ok(RatFunc::from_ratio(&jack_torus_norm(lam, n).value_at(kappa)?))
}

/// Torus norm formula against the constant term at integer κ.
pub fn jack_norm_check(lam: &Partition, n: usize, kappa: u32) -> Result<Report, Error> {
    let mut rep = Report::new("jack torus norm").param("lambda", format!("{:?}", lam)).param("rank", n).param("kappa", kappa);
    let p = jack_gs(lam, n)?.at_kappa(kappa as i64)?;
    let ct = sp_torus(&p, &p, WeightKind::Jack { kappa })?;
    let f = jack_torus_norm_at(lam, n, kappa as i64)?;
    rep.check(ct == f, || format!("constant term {} vs formula {}", ct, f));
    Ok(rep)
}

fn rho(n: usize) -> Vec<i64> {
    (0..n).map(|i| (n - 1 - i) as i64).collect()
}

/// Coefficients (X⁰..Xⁿ) of a product ∏(X + cᵢ).
fn poly_in_x(cs: &[RatFunc]) -> Vec<RatFunc> {
    let mut out = vec![RatFunc::one()];
    for c in cs {
        let mut next = vec![RatFunc::zero(); out.len() + 1];
        for (r, a) in out.iter().enumerate() {
            next[r + 1] = next[r + 1].add(a);
            next[r] = next[r].add(&a.mul(c));
        }
        out = next;
    }
    out
}

/// 𝒟_n(X) f as X-coefficients (X⁰..Xⁿ): the antisymmetrized product of
/// xᵢ^{σ(ϱᵢ)}{X + σ(ϱᵢ)κ + xᵢ∂ᵢ} on f, divided by the Vandermonde.
pub fn sekiguchi_apply(f: &SymFunc) -> Result<Vec<SymFunc>, Error> {
    let n = f.rank();
    let fx = f.to_xpoly();
    let mut nums = vec![XPoly::zero(n); n + 1];
    for a in distinct_permutations(&rho(n)) {
        let mut inv = 0;
        for i in 0..n {
            for j in i + 1..n {
                if a[i] < a[j] {
                    inv += 1;
                }
            }
        }
        let sign = if inv % 2 == 1 { RatFunc::from_int(-1) } else { RatFunc::one() };
        for (e, c) in fx.terms() {
            let cs: Vec<RatFunc> = (0..n).map(|i| lin(e[i] as i64, a[i] as i64)).collect();
            let mut ea: Exps = *e;
            for i in 0..n {
                ea[i] += a[i];
            }
            for (r, x) in poly_in_x(&cs).into_iter().enumerate() {
                nums[r].add_term(ea, c.mul(&x).mul(&sign));
            }
        }
    }
    nums.iter().map(divide_by_vandermonde).collect()
}

/// X-coefficients of ∏(X + λᵢ + ϱᵢκ).
pub fn sekiguchi_eigenvalue(lam: &Partition, n: usize) -> Vec<RatFunc> {
    let l = lam.padded(n);
    let r = rho(n);
    poly_in_x(&(0..n).map(|i| lin(l[i], r[i])).collect::<Vec<_>>())
}

/// Evaluates X-coefficients at X = x.
pub fn at_x(cs: &[SymFunc], x: &RatFunc) -> SymFunc {
    let mut acc = SymFunc::zero(cs[0].rank());
    let mut pw = RatFunc::one();
    for c in cs {
        acc = acc.add(&c.scale(&pw));
        pw = pw.mul(x);
    }
    acc
}

/// ℋ₁ = Σ(xᵢ∂ᵢ + ϱᵢκ).
pub fn hamiltonian_1(f: &SymFunc) -> SymFunc {
    let n = f.rank();
    let r = rho(n);
    let mut out = SymFunc::zero(n);
    for (p, c) in f.terms() {
        let m = lin(p.weight() as i64, r.iter().sum());
        out.add_term(p.clone(), c.mul(&m));
    }
    out
}

/// ℋ₂ = Σ_{i<j}(Dᵢ + ϱᵢκ)(Dⱼ + ϱⱼκ) + κΣᵢ(ϱᵢ + Σ_{j≠i} xᵢ/(xⱼ − xᵢ))Dᵢ with
/// Dᵢ = xᵢ∂ᵢ.
pub fn hamiltonian_2(f: &SymFunc) -> Result<SymFunc, Error> {
    let n = f.rank();
    let r = rho(n);
    let fx = f.to_xpoly();
    let euler = |i: usize| fx.map_terms(|e, c| (*e, c.mul(&RatFunc::from_int(e[i] as i64))));
    let mut acc = fx.map_terms(|e, c| {
        let mut m = RatFunc::zero();
        for i in 0..n {
            for j in i + 1..n {
                m = m.add(&lin(e[i] as i64, r[i]).mul(&lin(e[j] as i64, r[j])));
            }
            m = m.add(&kap().mul(&RatFunc::from_int(r[i] * e[i] as i64)));
        }
        (*e, c.mul(&m))
    });
    for i in 0..n {
        for j in i + 1..n {
            let num = XPoly::var(n, i).mul(&euler(i)).sub(&XPoly::var(n, j).mul(&euler(j)));
            let den = XPoly::var(n, j).sub(&XPoly::var(n, i));
            acc = acc.add(&num.div_exact(&den)?.scale(&kap()));
        }
    }
    SymFunc::from_xpoly(&acc)
}

/// ℋ^∨_r terms at λ: product over i ∈ I, j ∉ I, j < i of
/// ((i−j+1)κ+λⱼ−λᵢ−1)/((i−j)κ+λⱼ−λᵢ−1) · ((i−j−1)κ+λⱼ−λᵢ)/((i−j)κ+λⱼ−λᵢ).
pub fn jack_dual_terms(r: usize, lam: &[i64]) -> Vec<(Vec<i64>, RatFunc)> {
    let n = lam.len();
    let mut out = Vec::new();
    for set in subsets(n, r) {
        let mut inside = vec![false; n];
        for &i in &set {
            inside[i] = true;
        }
        let mut c = RatFunc::one();
        for &i in &set {
            for j in (0..i).filter(|j| !inside[*j]) {
                let d = (i - j) as i64;
                let a = lam[j] - lam[i];
                c = c.mul(&lin(a - 1, d + 1)).div(&lin(a - 1, d));
                c = c.mul(&lin(a, d - 1)).div(&lin(a, d));
            }
        }
        out.push((shifted(lam, &set), c));
    }
    out
}

pub fn jack_dual_apply<V: Linear>(r: usize, n: usize, f: &PartitionFunction<V>) -> PartitionFunction<V> {
    apply_shift(n, f, &|l: &[i64]| jack_dual_terms(r, l))
}

/// φ^{(κ)}_{μ/λ}; zero off the interlacing support.
pub fn jack_pieri_phi(mu: &Partition, lam: &Partition, n: usize) -> Result<RatFunc, Error> {
    if mu.len() > n || !interlaces(mu, lam) {
        return Ok(RatFunc::zero());
    }
    let m = mu.padded(n);
    let l = lam.padded(n);
    let mut g = KGammaRatio::default();
    for i in 0..n {
        for j in i..n {
            let d = (j - i) as i64;
            g.push((m[i] - m[j] + 1, d), (m[i] - m[j], d + 1));
            g.push((m[i] - l[j], d + 1), (m[i] - l[j] + 1, d));
            if j + 1 < n {
                g.push((l[i] - l[j + 1] + 1, d), (l[i] - l[j + 1], d + 1));
                g.push((l[i] - m[j + 1], d + 1), (l[i] - m[j + 1] + 1, d));
            }
        }
    }
    g.value()
}

pub fn jack_pieri_check(lam: &Partition, m: u32, n: usize) -> Result<Report, Error> {
    pieri_check_with(
        "jack pieri",
        lam,
        m,
        n,
        |p| jack_branch(p, n),
        |mu| jack_pieri_phi(mu, lam, n),
        &jack_b(&Partition::row(m)),
    )
}

/// Cauchy identity for ∏(1 − xᵢyⱼ)^{−κ}; symbolic κ when `kappa` is `None`.
pub fn jack_cauchy_check(n: usize, m: usize, d: u32, kappa: Option<i64>) -> Result<Report, Error> {
    let spec = |c: RatFunc| -> Result<RatFunc, Error> {
        match kappa {
            Some(k) => at_k(&c, k),
            None => Ok(c),
        }
    };
    let rep = cauchy_generic(
        "jack cauchy",
        n,
        m,
        d,
        |l, r| {
            let p = jack_branch(l, r)?;
            match kappa {
                Some(k) => p.at_kappa(k),
                None => Ok(p),
            }
        },
        |l| spec(jack_b(l)),
        |j| spec(gamma_kappa_coeff(j)).expect("polynomial in κ"),
    )?;
    Ok(match kappa {
        Some(k) => rep.param("kappa", k),
        None => rep.param("kappa", "symbolic"),
    })
}

fn kernel_coef(kappa: i64) -> impl Fn(u32) -> RatFunc {
    move |j| at_k(&gamma_kappa_coeff(j), kappa).expect("polynomial in κ")
}

/// 𝒬_γ f at integer κ: the torus integral with Δ_{(κ)} and kernel
/// ∏(xᵢyᵢ)^γ ∏(1 − xᵢyⱼ)^{−κ}, normalized by Γ(κ)ⁿ/n!.
pub fn jack_baxter_apply(f: &SymFunc, gamma: i64, kappa: u32) -> Result<SymFunc, Error> {
    let n = f.rank();
    let k = kappa as i64;
    let f = f.at_kappa(k)?;
    let delta = weight_delta(WeightKind::Jack { kappa }, n)?;
    let h = weighted_reflection(&f, &delta)?;
    let raw = kernel_apply(&h, gamma, n, &kernel_coef(k), None)?;
    Ok(raw.scale(&gamma_int(k).pow(n as i64).div(&RatFunc::from_bigint(factorial(n)))))
}

/// ℒ_γ(λ) = ∏ Γ(λᵢ − γ + (ϱᵢ+1)κ)/Γ(λᵢ − γ + ϱᵢκ + 1); zero for γ > λ_n.
pub fn jack_baxter_eigenvalue(lam: &Partition, gamma: i64, n: usize, kappa: u32) -> Result<RatFunc, Error> {
    let l = lam.padded(n);
    if gamma > l[n - 1] {
        return Ok(RatFunc::zero());
    }
    let r = rho(n);
    let mut g = KGammaRatio::default();
    for i in 0..n {
        g.push((l[i] - gamma, r[i] + 1), (l[i] - gamma + 1, r[i]));
    }
    Ok(RatFunc::from_ratio(&g.value_at(kappa as i64)?))
}

/// The same eigenvalue as Γ(κ)ⁿ·b^{(κ)}_{λ−γ}·⟨P_λ,P_λ⟩'.
pub fn jack_baxter_eigenvalue_product(lam: &Partition, gamma: i64, n: usize, kappa: u32) -> Result<RatFunc, Error> {
    let k = kappa as i64;
    match shift_partition(lam, gamma, n) {
        None => Ok(RatFunc::zero()),
        Some(s) => Ok(gamma_int(k).pow(n as i64).mul(&at_k(&jack_b(&s), k)?).mul(&jack_torus_norm_at(lam, n, k)?)),
    }
}

pub fn jack_baxter_check(lam: &Partition, gamma: i64, n: usize, kappa: u32) -> Result<Report, Error> {
    let mut rep = Report::new("jack baxter")
        .param("lambda", format!("{:?}", lam))
        .param("gamma", gamma)
        .param("rank", n)
        .param("kappa", kappa);
    let ev = jack_baxter_eigenvalue(lam, gamma, n, kappa)?;
    let prod = jack_baxter_eigenvalue_product(lam, gamma, n, kappa)?;
    rep.check(ev == prod, || format!("closed form {} vs product {}", ev, prod));
    let p = jack_gs(lam, n)?.at_kappa(kappa as i64)?;
    let q = jack_baxter_apply(&p, gamma, kappa)?;
    let want = p.scale(&ev);
    rep.check(q == want, || format!("operator difference {}", q.sub(&want)));
    Ok(rep)
}

/// 𝒟(κ − γ)𝒬_γ f = 𝒟(1 − γ)𝒬_{γ−1} f on f = P_λ and on the
/// non-eigenfunction m_λ, plus the cross-multiplied spectral identity.
pub fn jack_baxter_equation_check(lam: &Partition, gamma: i64, n: usize, kappa: u32) -> Result<Report, Error> {
    let mut rep = Report::new("jack baxter equation")
        .param("lambda", format!("{:?}", lam))
        .param("gamma", gamma)
        .param("rank", n)
        .param("kappa", kappa);
    let k = kappa as i64;
    let l = lam.padded(n);
    let r = rho(n);
    let mut a = jack_baxter_eigenvalue(lam, gamma, n, kappa)?;
    let mut b = jack_baxter_eigenvalue(lam, gamma - 1, n, kappa)?;
    for i in 0..n {
        a = a.mul(&RatFunc::from_int(k - gamma + l[i] + r[i] * k));
        b = b.mul(&RatFunc::from_int(1 - gamma + l[i] + r[i] * k));
    }
    rep.check(a == b, || format!("spectral {} vs {}", a, b));
    let xl = RatFunc::from_int(k - gamma);
    let xr = RatFunc::from_int(1 - gamma);
    for f in [jack_gs(lam, n)?, monomial_sym(lam, n)?] {
        let lhs = at_x(&sekiguchi_apply(&jack_baxter_apply(&f, gamma, kappa)?)?, &xl).at_kappa(k)?;
        let rhs = at_x(&sekiguchi_apply(&jack_baxter_apply(&f, gamma - 1, kappa)?)?, &xr).at_kappa(k)?;
        rep.check(lhs == rhs, || format!("operator form {}", lhs.sub(&rhs)));
    }
    Ok(rep)
}

/// z^m coefficients of ∨𝒬_z P_λ = Σ_μ ∨Q(μ,λ;z) P_μ, symbolic κ.
pub fn jack_dual_baxter_apply(lam: &Partition, n: usize, m_max: u32) -> Result<Vec<SymFunc>, Error> {
    let mut out = Vec::new();
    for m in 0..=m_max {
        let mut s = SymFunc::zero(n);
        for mu in interlacing_above(lam, n, m) {
            let c = jack_pieri_phi(&mu, lam, n)?;
            if !c.is_zero() {
                s = s.add(&jack_branch(&mu, n)?.scale(&c));
            }
        }
        out.push(s);
    }
    Ok(out)
}

/// Coefficient of z^m in ∏(1 − z xᵢ)^{−κ}.
pub fn jack_dual_row(n: usize, m: u32) -> SymFunc {
    kernel_slice(n, m, &gamma_kappa_coeff)
}

pub fn jack_dual_baxter_check(lam: &Partition, n: usize, m_max: u32) -> Result<Report, Error> {
    let mut rep = Report::new("jack dual baxter").param("lambda", format!("{:?}", lam)).param("rank", n).param("M", m_max);
    let p = jack_branch(lam, n)?;
    for (m, c) in jack_dual_baxter_apply(lam, n, m_max)?.iter().enumerate() {
        let want = jack_dual_row(n, m as u32).mul(&p);
        rep.check(*c == want, || format!("z^{}: {}", m, c.sub(&want)));
    }
    Ok(rep)
}

/// 𝒟^∨(−z) applied on the λ-side of ∨𝒬_z P equals ∏(1 − zxᵢ)^{−(κ−1)}P_λ,
/// and the per-factor identity (1 − u)(1 − u)^{−κ} = (1 − u)^{−(κ−1)}.
pub fn jack_dual_baxter_equation_check(lam: &Partition, n: usize, m_max: u32) -> Result<Report, Error> {
    let mut rep = Report::new("jack dual baxter equation")
        .param("lambda", format!("{:?}", lam))
        .param("rank", n)
        .param("M", m_max);
    let lower = |j: u32| gamma_kappa_coeff(j).subs(Var::K, &kap().sub(&RatFunc::one())).expect("polynomial in κ");
    for m in 0..=m_max {
        let mut s = gamma_kappa_coeff(m);
        if m > 0 {
            s = s.sub(&gamma_kappa_coeff(m - 1));
        }
        rep.check(s == lower(m), || format!("per-factor z^{}", m));
    }
    let l = lam.padded(n);
    let mut cache: HashMap<Partition, Vec<SymFunc>> = HashMap::new();
    let mut qz = |nu: &Partition| -> Result<Vec<SymFunc>, Error> {
        if let Some(v) = cache.get(nu) {
            return Ok(v.clone());
        }
        let v = jack_dual_baxter_apply(nu, n, m_max)?;
        cache.insert(nu.clone(), v.clone());
        Ok(v)
    };
    let p = jack_branch(lam, n)?;
    for m in 0..=m_max {
        let mut lhs = SymFunc::zero(n);
        for r in 0..=n.min(m as usize) {
            let terms = if r == 0 { vec![(l.clone(), RatFunc::one())] } else { jack_dual_terms(r, &l) };
            for (s, c) in terms {
                if c.is_zero() || !is_partition_tuple(&s) {
                    continue;
                }
                let x = qz(&Partition::new(&s)?)?[m as usize - r].scale(&c);
                lhs = if r % 2 == 0 { lhs.add(&x) } else { lhs.sub(&x) };
            }
        }
        let rhs = kernel_slice(n, m, &lower).mul(&p);
        rep.check(lhs == rhs, || format!("z^{}: {}", m, lhs.sub(&rhs)));
    }
    Ok(rep)
}

/// Raw integral-type recursion at integer κ: CT over ℓ variables of
/// x_{ℓ+1}^c ∏(xᵢyᵢ)^c ∏(1 − xᵢyⱼ)^{−κ} Δ_{(κ)}(y) f(y⁻¹).
pub fn jack_recursion_integral_raw(c: i64, f: &SymFunc, kappa: u32) -> Result<SymFunc, Error> {
    let l = f.rank();
    let f = f.at_kappa(kappa as i64)?;
    if l == 0 {
        return shift_all(&f.with_rank(1), c);
    }
    let delta = weight_delta(WeightKind::Jack { kappa }, l)?;
    let h = weighted_reflection(&f, &delta)?;
    kernel_apply(&h, c, l + 1, &kernel_coef(kappa as i64), None)
}

/// ℓ!·b^{(κ)}_{λ'−c}·⟨P_{λ'},P_{λ'}⟩' with λ' the first ℓ parts, c = λ_{ℓ+1}.
pub fn jack_recursion_integral_constant(lam: &Partition, n: usize, kappa: u32) -> Result<RatFunc, Error> {
    let l = n - 1;
    if l == 0 {
        return Ok(RatFunc::one());
    }
    let k = kappa as i64;
    let c = lam.part(l) as i64;
    let top = lam.truncate(l);
    let s = shift_partition(&top, c, l).ok_or_else(|| Error::Domain("λ' − c not a partition".into()))?;
    Ok(RatFunc::from_bigint(factorial(l)).mul(&at_k(&jack_b(&s), k)?).mul(&jack_torus_norm_at(&top, l, k)?))
}

pub fn jack_recursion_integral(lam: &Partition, n: usize, f: &SymFunc, kappa: u32) -> Result<SymFunc, Error> {
    let raw = jack_recursion_integral_raw(lam.part(n - 1) as i64, f, kappa)?;
    Ok(raw.scale(&jack_recursion_integral_constant(lam, n, kappa)?.inv()))
}

/// P^{(κ)}_λ through a stage array at integer κ.
pub fn jack_mixed(lam: &Partition, n: usize, eps: &[Stage], kappa: u32) -> Result<SymFunc, Error> {
    if eps.len() + 1 != n {
        return Err(Error::Domain(format!("need {} stages, got {}", n - 1, eps.len())));
    }
    fn rec(lam: &Partition, j: usize, eps: &[Stage], kappa: u32, memo: &mut HashMap<(Partition, usize), SymFunc>) -> Result<SymFunc, Error> {
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
                    let lower = rec(&lam.truncate(j - 1), j - 1, eps, kappa, memo)?;
                    jack_recursion_integral(lam, j, &lower, kappa)?
                }
                Stage::II => {
                    let mut lowers = HashMap::new();
                    for mu in interlacing_below(lam, j) {
                        lowers.insert(mu.clone(), rec(&mu, j - 1, eps, kappa, memo)?);
                    }
                    // lower stages hold only at this κ; specialize before symmetrizing
                    let x = branch_sum(lam, j, |mu| Ok(lowers[mu].clone()), |mu| jack_psi(lam, mu, j))?;
                    SymFunc::from_xpoly(&x.try_map_coeffs(|c| c.subs_int(Var::K, kappa as i64))?)?
                }
            }
        };
        memo.insert((lam.clone(), j), out.clone());
        Ok(out)
    }
    rec(lam, n, eps, kappa, &mut HashMap::new())
}

pub fn jack_mixed_check(lam: &Partition, n: usize, kappa: u32) -> Result<Report, Error> {
    let mut rep = Report::new("jack mixed representations")
        .param("lambda", format!("{:?}", lam))
        .param("rank", n)
        .param("kappa", kappa);
    let target = jack_gs(lam, n)?.at_kappa(kappa as i64)?;
    for eps in crate::baxter::all_stage_arrays(n) {
        let v = jack_mixed(lam, n, &eps, kappa)?;
        rep.check(v == target, || format!("{:?}: {}", eps, v.sub(&target)));
    }
    Ok(rep)
}

/// The explicit 𝔤𝔩₂ sum divided by Γ(κ):
/// Σ_μ Γ(κ+λ₁−μ)Γ(κ+μ−λ₂)/(Γ(κ)Γ(κ+λ₁−λ₂))·C(λ₁−λ₂, μ−λ₂)·x₁^μ x₂^{λ₁+λ₂−μ}.
pub fn gl2_example(l1: i64, l2: i64) -> Result<SymFunc, Error> {
    if l2 < 0 || l1 < l2 {
        return Err(Error::Domain(format!("({}, {}) is not a partition", l1, l2)));
    }
    let mut x = XPoly::zero(2);
    for mu in l2..=l1 {
        let mut g = KGammaRatio::default();
        g.push((l1 - mu, 1), (l1 - l2, 1));
        g.push((mu - l2, 1), (0, 1));
        let binom = RatFunc::from_bigint(factorial((l1 - l2) as usize))
            .div(&RatFunc::from_bigint(factorial((l1 - mu) as usize)))
            .div(&RatFunc::from_bigint(factorial((mu - l2) as usize)));
        let mut e: Exps = [0; MAXVARS];
        e[0] = mu as i16;
        e[1] = (l1 + l2 - mu) as i16;
        x.add_term(e, g.value()?.mul(&binom));
    }
    SymFunc::from_xpoly(&x)
}

/// The 𝔤𝔩₂ sum equals Γ(κ)·P^{(κ)}_λ: the measured ratio to the monic
/// polynomial is Γ(κ) for every λ, checked symbolically (after dividing Γ(κ)
/// out) and numerically at integer κ.
pub fn gl2_check(l1: i64, l2: i64) -> Result<Report, Error> {
    let mut rep = Report::new("jack gl2 example").param("lambda", format!("({}, {})", l1, l2)).param("ratio", "Γ(κ)");
    let lam = Partition::new(&[l1, l2])?;
    let s = gl2_example(l1, l2)?;
    let p = jack_gs(&lam, 2)?;
    rep.check(s == p, || format!("difference {}", s.sub(&p)));
    for k in 1..=3 {
        let full = s.at_kappa(k)?.scale(&gamma_int(k));
        let want = p.at_kappa(k)?.scale(&gamma_int(k));
        rep.check(full == want, || format!("κ={}", k));
    }
    Ok(rep)
}

/// Jack coefficients as ħ → 0 limits of Macdonald coefficients at
/// q = e^{−ħ}, t = e^{−κħ}.
pub fn jack_macdonald_limit_check(lam: &Partition, n: usize, kappa: u32, hbar: f64, tol: f64) -> Result<Report, Error> {
    let mut rep = Report::new("jack vs macdonald limit")
        .param("lambda", format!("{:?}", lam))
        .param("rank", n)
        .param("kappa", kappa)
        .param("hbar", hbar);
    let mac = macdonald_gs(lam, n)?;
    let jack = jack_gs(lam, n)?;
    let qv = (-hbar).exp();
    let tv = (-(kappa as f64) * hbar).exp();
    for (mu, c) in jack.terms() {
        let j = c.to_f64(&[None, None, Some(kappa as f64), None])?;
        let m = mac.coeff(mu).to_f64(&[Some(qv), Some(tv), None, None])?;
        let err = ((m - j) / j).abs();
        rep.check(err < tol, || format!("m_{:?}: macdonald {} jack {} relative error {}", mu, m, j, err));
    }
    Ok(rep)
}

/// e_r(x) as a symmetric function in rank n.
pub fn elementary_sym(n: usize, r: usize) -> Result<SymFunc, Error> {
    monomial_sym(&Partition::from_sorted(vec![1; r]), n)
}

/// ℋ^∨_r on the family λ ↦ P^{(κ)}_λ at λ.
pub fn jack_dual_on_family(r: usize, lam: &Partition, n: usize) -> Result<SymFunc, Error> {
    let mut s = SymFunc::zero(n);
    for (nu, c) in jack_dual_terms(r, &lam.padded(n)) {
        if !c.is_zero() && is_partition_tuple(&nu) {
            s = s.add(&jack_branch(&Partition::new(&nu)?, n)?.scale(&c));
        }
    }
    Ok(s)
}

/// Partitions of |λ| ≤ w with at most n parts.
pub fn small_partitions(w: u32, n: usize) -> Vec<Partition> {
    (0..=w).flat_map(|d| partitions_of(d, n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratfunc::{int, kappa};
    use crate::symfunc::sp_kappa;

    fn p(v: &[i64]) -> Partition {
        Partition::new(v).unwrap()
    }

    #[test]
    fn gs_examples() {
        assert_eq!(jack_gs(&p(&[1]), 1).unwrap(), monomial_sym(&p(&[1]), 1).unwrap());
        let want = monomial_sym(&p(&[2]), 2)
            .unwrap()
            .add(&monomial_sym(&p(&[1, 1]), 2).unwrap().scale(&kappa().scale_int(2).div(&kappa().add(&int(1)))));
        assert_eq!(jack_gs(&p(&[2]), 2).unwrap(), want);
        assert_eq!(jack_gs(&p(&[1, 1]), 2).unwrap(), monomial_sym(&p(&[1, 1]), 2).unwrap());
    }

    #[test]
    fn constructions_agree() {
        for n in 1..=3 {
            for lam in small_partitions(4, n) {
                let g = jack_gs(&lam, n).unwrap();
                assert_eq!(g, jack_gs_ext(&lam, n, Extension::Lex).unwrap());
                assert_eq!(g, jack_branch(&lam, n).unwrap(), "{:?} n={}", lam, n);
            }
        }
    }

    #[test]
    fn orthogonal() {
        let ps = partitions_of(4, 4);
        for a in &ps {
            for b in &ps {
                let v = sp_kappa(&jack_gs(a, 4).unwrap(), &jack_gs(b, 4).unwrap()).unwrap();
                assert_eq!(v.is_zero(), a != b);
            }
        }
    }

    #[test]
    fn norms() {
        assert_eq!(jack_b(&p(&[1])), kappa());
        for kk in 1..=2 {
            for lam in small_partitions(3, 2) {
                let r = jack_norm_check(&lam, 2, kk).unwrap();
                assert!(r.passed, "{}", r);
            }
        }
    }

    #[test]
    fn sekiguchi() {
        let one = sekiguchi_apply(&SymFunc::one(2)).unwrap();
        let ev = sekiguchi_eigenvalue(&p(&[]), 2);
        assert_eq!(one.iter().map(|s| s.coeff(&p(&[]))).collect::<Vec<_>>(), ev);
        for n in 1..=3 {
            for lam in small_partitions(3, n) {
                let pl = jack_gs(&lam, n).unwrap();
                let got = sekiguchi_apply(&pl).unwrap();
                for (g, e) in got.iter().zip(sekiguchi_eigenvalue(&lam, n)) {
                    assert_eq!(*g, pl.scale(&e), "{:?}", lam);
                }
            }
        }
    }

    #[test]
    fn printed_hamiltonians() {
        for n in 2..=3 {
            for lam in small_partitions(3, n) {
                let f = monomial_sym(&lam, n).unwrap();
                let d = sekiguchi_apply(&f).unwrap();
                assert_eq!(d[n - 1], hamiltonian_1(&f));
                assert_eq!(d[n - 2], hamiltonian_2(&f).unwrap(), "{:?}", lam);
            }
        }
    }

    #[test]
    fn dual_hamiltonians() {
        // (1,1) + e₂ is not a partition, so only the e₁ shift survives
        let t = jack_dual_terms(1, &[1, 1]);
        let c1 = t.iter().find(|(s, _)| s == &vec![2, 1]).unwrap().1.clone();
        let mut f = PartitionFunction::new();
        f.insert(p(&[2, 1]), int(1));
        assert_eq!(jack_dual_apply(1, 2, &f)[&p(&[1, 1])], c1);
        assert!(jack_dual_terms(2, &[2, 1]).iter().all(|(_, c)| c.is_one()));
        for n in 1..=3 {
            for lam in small_partitions(3, n) {
                let pl = jack_branch(&lam, n).unwrap();
                for r in 1..=n {
                    assert_eq!(jack_dual_on_family(r, &lam, n).unwrap(), elementary_sym(n, r).unwrap().mul(&pl));
                }
            }
        }
    }

    #[test]
    fn pieri_cauchy() {
        assert!(jack_pieri_phi(&p(&[2, 1]), &p(&[2, 1]), 2).unwrap().is_one());
        for n in 1..=3 {
            for lam in small_partitions(2, n) {
                for m in 0..=2 {
                    let r = jack_pieri_check(&lam, m, n).unwrap();
                    assert!(r.passed, "{}", r);
                }
            }
        }
        for k in [Some(1), Some(2), None] {
            let r = jack_cauchy_check(2, 2, 3, k).unwrap();
            assert!(r.passed, "{}", r);
        }
    }

    #[test]
    fn baxter() {
        assert!(jack_baxter_eigenvalue(&p(&[1]), 3, 2, 2).unwrap().is_zero());
        for kk in 1..=2 {
            for lam in [p(&[]), p(&[1]), p(&[2, 1]), p(&[1, 1])] {
                for gamma in -1..=1 {
                    let r = jack_baxter_check(&lam, gamma, 2, kk).unwrap();
                    assert!(r.passed, "{}", r);
                    let r = jack_baxter_equation_check(&lam, gamma, 2, kk).unwrap();
                    assert!(r.passed, "{}", r);
                }
            }
        }
    }

    #[test]
    fn dual_baxter() {
        let q = jack_dual_baxter_apply(&p(&[]), 2, 1).unwrap();
        assert_eq!(q[0], SymFunc::one(2));
        assert_eq!(q[1], monomial_sym(&p(&[1]), 2).unwrap().scale(&kappa()));
        for lam in [p(&[]), p(&[1]), p(&[2, 1])] {
            assert!(jack_dual_baxter_check(&lam, 2, 3).unwrap().passed);
            let r = jack_dual_baxter_equation_check(&lam, 2, 3).unwrap();
            assert!(r.passed, "{}", r);
        }
    }

    #[test]
    fn recursions() {
        let r = jack_mixed_check(&p(&[2, 1]), 2, 2).unwrap();
        assert!(r.passed, "{}", r);
        let schur = jack_mixed(&p(&[2]), 2, &[Stage::I], 1).unwrap();
        let want = monomial_sym(&p(&[2]), 2).unwrap().add(&monomial_sym(&p(&[1, 1]), 2).unwrap());
        assert_eq!(schur, want);
        let r = gl2_check(1, 0).unwrap();
        assert!(r.passed, "{}", r);
        assert!(gl2_check(3, 1).unwrap().passed);
    }

    #[test]
    fn macdonald_limit() {
        for lam in small_partitions(3, 2) {
            let r = jack_macdonald_limit_check(&lam, 2, 2, 1e-4, 1e-3).unwrap();
            assert!(r.passed, "{}", r);
        }
    }
}
