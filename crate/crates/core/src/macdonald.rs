//! Macdonald polynomials P_λ(x; q, t): Gram–Schmidt and branching
//! constructions, norms, the difference operators M_r and their duals, Pieri
//! coefficients, the Cauchy kernel and self-duality.

use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use crate::gamma::{finite_ratio, gamma_qt_coeff, lm_mul, qm, qtm, GammaRatio, T, T_OVER_Q};
use crate::memo::WriteOnce;
use crate::partition::{
    dominance_extension, interlaces, interlacing_below, lex_extension, partitions_of, Partition,
};
use crate::pfunc::{apply_shift, shifted, subsets, PartitionFunction};
use crate::poly::Poly;
use crate::ratfunc::{LMono, RatFunc};
use crate::report::Report;
use crate::symfunc::{gram_schmidt, weight_qt, SymFunc};
use crate::xpoly::{vandermonde, Exps, XPoly, MAXVARS};
use crate::{Error, Var};

/// Linear extension of dominance used by Gram–Schmidt.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Extension {
    NStat,
    Lex,
}

/// Orders partitions of `w` (at most `len` parts) along the extension.
pub fn extension_order(w: u32, len: usize, ext: Extension) -> Vec<Partition> {
    let mut ps = partitions_of(w, len);
    match ext {
        Extension::NStat => dominance_extension(&mut ps),
        Extension::Lex => lex_extension(&mut ps),
    }
    ps
}

type GsTable = BTreeMap<Partition, (BTreeMap<Partition, RatFunc>, RatFunc)>;

fn gs_cache() -> &'static WriteOnce<(u32, Extension), GsTable> {
    static C: OnceLock<WriteOnce<(u32, Extension), GsTable>> = OnceLock::new();
    C.get_or_init(WriteOnce::default)
}

fn gs_degree(w: u32, ext: Extension) -> Arc<GsTable> {
    gs_cache()
        .get_or_try::<(), _>(&(w, ext), || {
            let order = extension_order(w, w.max(1) as usize, ext);
            Ok(gram_schmidt(&order, weight_qt).into_iter().map(|(l, m, n)| (l, (m, n))).collect())
        })
        .expect("infallible")
}

/// P_λ by Gram–Schmidt against the (q,t) product, in the stable rank and
/// restricted to n variables.
pub fn macdonald_gs_ext(lam: &Partition, n: usize, ext: Extension) -> Result<SymFunc, Error> {
    if lam.len() > n {
        return Err(Error::LengthOverflow { len: lam.len(), rank: n });
    }
    let t = gs_degree(lam.weight(), ext);
    let (m, _) = &t[lam];
    Ok(SymFunc::from_map(lam.weight().max(1) as usize, m.clone())?.with_rank(n))
}

pub fn macdonald_gs(lam: &Partition, n: usize) -> Result<SymFunc, Error> {
    macdonald_gs_ext(lam, n, Extension::NStat)
}

/// ⟨P_λ, P_λ⟩_{q,t} from the Gram–Schmidt run.
pub fn gs_norm(lam: &Partition) -> RatFunc {
    gs_degree(lam.weight(), Extension::NStat)[lam].1.clone()
}

/// t^a q^b as a Laurent monomial, whole units.
fn tq(a: i64, b: i64) -> LMono {
    qtm(b, a)
}

/// ψ_{λ/μ} for λ of length ≤ n and μ of length ≤ n − 1.
pub fn branching_psi(lam: &Partition, mu: &Partition, n: usize) -> Result<RatFunc, Error> {
    if n == 0 || lam.len() > n || mu.len() + 1 > n.max(1) || !interlaces(lam, mu) {
        return Ok(RatFunc::zero());
    }
    let l = lam.padded(n + 1);
    let m = mu.padded(n);
    let mut g = GammaRatio::new(T_OVER_Q);
    for i in 0..n - 1 {
        for j in i..n - 1 {
            let d = (j - i) as i64;
            g.push(tq(d, m[i] - m[j] + 1), tq(d, l[i] - m[j] + 1));
            g.push(tq(d, l[i] - l[j + 1] + 1), tq(d, m[i] - l[j + 1] + 1));
        }
    }
    g.value()
}

fn branch_cache() -> &'static WriteOnce<(Partition, usize), SymFunc> {
    static C: OnceLock<WriteOnce<(Partition, usize), SymFunc>> = OnceLock::new();
    C.get_or_init(WriteOnce::default)
}

/// P_λ(x₁..x_n) = Σ_μ x_n^{|λ|−|μ|} ψ_{λ/μ} P_μ(x₁..x_{n−1}).
pub fn macdonald_branch(lam: &Partition, n: usize) -> Result<SymFunc, Error> {
    let key = (lam.clone(), n);
    let v = branch_cache().get_or_try(&key, || {
        let x = branch_sum(lam, n, |mu| macdonald_branch(mu, n - 1), |mu| branching_psi(lam, mu, n))?;
        SymFunc::from_xpoly(&x)
    })?;
    Ok((*v).clone())
}

/// Σ_μ x_n^{|λ|−|μ|} w(μ) P_μ(x₁..x_{n−1}) over μ interlacing below λ; the
/// rank-1 seed is x^{λ₁}.
pub fn branch_sum<P, W>(lam: &Partition, n: usize, lower: P, w: W) -> Result<XPoly<RatFunc>, Error>
where
    P: Fn(&Partition) -> Result<SymFunc, Error>,
    W: Fn(&Partition) -> Result<RatFunc, Error>,
{
    if lam.len() > n {
        return Err(Error::LengthOverflow { len: lam.len(), rank: n });
    }
    if n == 1 {
        let mut e = [0i16; MAXVARS];
        e[0] = lam.part(0) as i16;
        return Ok(XPoly::monomial(1, e, RatFunc::one()));
    }
    let map: Vec<usize> = (0..n - 1).collect();
    let mut acc = XPoly::zero(n);
    for mu in interlacing_below(lam, n) {
        let c = w(&mu)?;
        if c.is_zero() {
            continue;
        }
        let mut e = [0i16; MAXVARS];
        e[n - 1] = (lam.weight() - mu.weight()) as i16;
        let p = lower(&mu)?.to_xpoly().embed(n, &map).mul_exps(&e).scale(&c);
        acc = acc.add(&p);
    }
    Ok(acc)
}

/// b_λ by the arm/leg product over boxes.
pub fn b_norm(lam: &Partition) -> RatFunc {
    let c = lam.conjugate();
    let mut r = RatFunc::one();
    for i in 0..lam.len() {
        for j in 0..lam.part(i) as usize {
            let li = lam.part(i) as i64;
            let cj = c.part(j) as i64;
            let (i1, j1) = (i as i64 + 1, j as i64 + 1);
            let num = RatFunc::one_minus(tq(cj + 1 - i1, li - j1));
            let den = RatFunc::one_minus(tq(cj - i1, li + 1 - j1));
            r = r.mul(&num).div(&den);
        }
    }
    r
}

/// b_λ from the factored form: ∏ b_{(λᵢ−λᵢ₊₁)} times a Γ-ratio double product.
pub fn b_norm_factored(lam: &Partition, n: usize) -> Result<RatFunc, Error> {
    let l = lam.padded(n + 1);
    let mut r = RatFunc::one();
    for i in 0..n {
        r = r.mul(&gamma_qt_coeff((l[i] - l[i + 1]) as u32));
    }
    let mut g = GammaRatio::new(T_OVER_Q);
    for i in 0..n {
        for j in i + 1..n {
            let d = (j - i) as i64;
            g.push(tq(d, l[i] - l[j] + 1), tq(d, l[i] - l[j + 1] + 1));
        }
    }
    Ok(r.mul(&g.value()?))
}

/// ⟨P_λ,P_λ⟩' as a formal Γ_{q,tq⁻¹}-ratio.
pub fn torus_norm(lam: &Partition, n: usize) -> GammaRatio {
    let l = lam.padded(n);
    let mut g = GammaRatio::new(T_OVER_Q);
    for i in 0..n {
        for j in i + 1..n {
            let d = (j - i) as i64;
            g.push(tq(d - 1, l[i] - l[j] + 1), tq(d, l[i] - l[j] + 1));
        }
    }
    g
}

/// ⟨P_λ,P_λ⟩' at t = q^k.
pub fn torus_norm_at(lam: &Partition, n: usize, k: i64) -> Result<RatFunc, Error> {
    torus_norm(lam, n).specialize_t(k)
}

/// Σ over the numerators of one Hamiltonian family, divided by the
/// Vandermonde. `term(I)` returns the numerator contribution of subset I.
pub(crate) fn divide_by_vandermonde(num: &XPoly<RatFunc>) -> Result<SymFunc, Error> {
    let n = num.nvars();
    let (p, den) = num.clear_denominators();
    let quo = p.div_exact(&vandermonde::<Poly>(n))?;
    let den = RatFunc::from_poly(den);
    SymFunc::from_xpoly(&quo.to_ratfunc().map_coeffs(|c| c.div(&den)))
}

fn lin(n: usize, i: usize, ci: RatFunc, j: usize, cj: RatFunc) -> XPoly<RatFunc> {
    let mut ei: Exps = [0; MAXVARS];
    ei[i] = 1;
    let mut ej: Exps = [0; MAXVARS];
    ej[j] = 1;
    XPoly::monomial(n, ei, ci).add(&XPoly::monomial(n, ej, cj))
}

/// sign·∏_{a<b same side of I}(x_a − x_b) = V(x)/∏_{i∈I,j∉I}(xᵢ − xⱼ).
pub(crate) fn vandermonde_cofactor(n: usize, inside: &[bool]) -> XPoly<RatFunc> {
    let mut w = XPoly::one(n);
    let mut flips = 0;
    for a in 0..n {
        for b in a + 1..n {
            if inside[a] == inside[b] {
                w = w.mul(&lin(n, a, RatFunc::one(), b, RatFunc::from_int(-1)));
            } else if inside[b] {
                flips += 1;
            }
        }
    }
    if flips % 2 == 1 {
        w.neg()
    } else {
        w
    }
}

/// M_r f = t^{r(r−1)/2} Σ_I ∏_{i∈I,j∉I}(t xᵢ − xⱼ)/(xᵢ − xⱼ) T_I f.
pub fn apply_macdonald_op(r: usize, f: &SymFunc) -> Result<SymFunc, Error> {
    let n = f.rank();
    if r == 0 || r > n {
        return Err(Error::IndexOutOfRange { index: r, len: n });
    }
    let fx = f.to_xpoly();
    let mut num = XPoly::zero(n);
    for set in subsets(n, r) {
        let mut inside = vec![false; n];
        for &i in &set {
            inside[i] = true;
        }
        let mut term = fx.shift(&set, qm(1));
        for &i in &set {
            for j in (0..n).filter(|j| !inside[*j]) {
                term = term.mul(&lin(n, i, RatFunc::var(Var::T), j, RatFunc::from_int(-1)));
            }
        }
        num = num.add(&term.mul(&vandermonde_cofactor(n, &inside)));
    }
    let pre = RatFunc::lmono(qtm(0, (r * (r - 1) / 2) as i64));
    divide_by_vandermonde(&num.scale(&pre))
}

/// e_r(y) with yᵢ = t^{n−i} q^{λᵢ}.
pub fn macdonald_eigenvalue(lam: &Partition, r: usize, n: usize) -> RatFunc {
    let l = lam.padded(n);
    let y: Vec<RatFunc> = (0..n).map(|i| RatFunc::lmono(tq((n - 1 - i) as i64, l[i]))).collect();
    elementary(&y, r)
}

/// e_r of a list of values.
pub fn elementary(y: &[RatFunc], r: usize) -> RatFunc {
    let mut e = vec![RatFunc::zero(); r + 1];
    e[0] = RatFunc::one();
    for v in y {
        for k in (1..=r).rev() {
            e[k] = e[k].add(&e[k - 1].mul(v));
        }
    }
    e[r].clone()
}

/// Coefficients of the reduced dual operator t^{−rℓ/2}M^∨_r at λ: pairs
/// (λ + ε_I, c_I(λ)).
pub fn dual_op_terms(r: usize, lam: &[i64]) -> Vec<(Vec<i64>, RatFunc)> {
    let n = lam.len();
    let mut out = Vec::new();
    for set in subsets(n, r) {
        let mut c = RatFunc::one();
        for &i in &set {
            for j in (0..i).filter(|j| !set.contains(j)) {
                let d = (i - j) as i64;
                let a = lam[j] - lam[i];
                c = c
                    .mul(&RatFunc::one_minus(tq(d + 1, a - 1)))
                    .div(&RatFunc::one_minus(tq(d, a - 1)))
                    .mul(&RatFunc::one_minus(tq(d - 1, a)))
                    .div(&RatFunc::one_minus(tq(d, a)));
            }
        }
        out.push((shifted(lam, &set), c));
    }
    out
}

/// The reduced dual operator on a function of partitions of length ≤ n.
pub fn apply_dual_op<V: crate::pfunc::Linear>(
    r: usize,
    n: usize,
    f: &PartitionFunction<V>,
) -> PartitionFunction<V> {
    apply_shift(n, f, &|l: &[i64]| dual_op_terms(r, l))
}

/// φ_{μ/λ} for partitions of length ≤ n; zero off the interlacing support.
pub fn pieri_phi(mu: &Partition, lam: &Partition, n: usize) -> Result<RatFunc, Error> {
    if mu.len() > n || lam.len() > n || !interlaces(mu, lam) {
        return Ok(RatFunc::zero());
    }
    let m = mu.padded(n);
    let l = lam.padded(n);
    let mut g = GammaRatio::new(T_OVER_Q);
    for i in 0..n {
        for j in i..n {
            let d = (j - i) as i64;
            g.push(tq(d, m[i] - m[j] + 1), tq(d, m[i] - l[j] + 1));
            if j + 1 < n {
                g.push(tq(d, l[i] - l[j + 1] + 1), tq(d, l[i] - m[j + 1] + 1));
            }
        }
    }
    g.value()
}

/// Checks P_{(n₀)}·P_λ = b_{(n₀)}⁻¹ Σ_μ φ_{μ/λ} P_μ for the given basis.
pub fn pieri_check_with<P, F>(name: &str, lam: &Partition, n0: u32, n: usize, basis: P, phi: F, b_row: &RatFunc) -> Result<Report, Error>
where
    P: Fn(&Partition) -> Result<SymFunc, Error>,
    F: Fn(&Partition) -> Result<RatFunc, Error>,
{
    let mut rep = Report::new(name).param("lambda", format!("{:?}", lam)).param("n0", n0).param("rank", n);
    let lhs = basis(&Partition::row(n0))?.mul(&basis(lam)?);
    let mut rhs = SymFunc::zero(n);
    for mu in crate::partition::interlacing_above(lam, n, n0) {
        let c = phi(&mu)?;
        if !c.is_zero() {
            rhs = rhs.add(&basis(&mu)?.scale(&c));
        }
    }
    let rhs = rhs.scale(&b_row.inv());
    rep.check(lhs == rhs, || format!("difference {}", lhs.sub(&rhs)));
    Ok(rep)
}

pub fn pieri_check(lam: &Partition, n0: u32, n: usize) -> Result<Report, Error> {
    pieri_check_with(
        "macdonald pieri",
        lam,
        n0,
        n,
        |p| macdonald_branch(p, n),
        |mu| pieri_phi(mu, lam, n),
        &gamma_qt_coeff(n0),
    )
}

/// Nonnegative integer matrices with the given row and column sums.
pub fn contingency_tables(rows: &[i64], cols: &[i64]) -> Vec<Vec<Vec<u32>>> {
    fn rec(i: usize, rows: &[i64], cols: &mut Vec<i64>, cur: &mut Vec<Vec<u32>>, out: &mut Vec<Vec<Vec<u32>>>) {
        if i == rows.len() {
            if cols.iter().all(|&c| c == 0) {
                out.push(cur.clone());
            }
            return;
        }
        let mut row = vec![0u32; cols.len()];
        fill(0, rows[i], i, rows, cols, &mut row, cur, out);
    }
    #[allow(clippy::too_many_arguments)]
    fn fill(
        j: usize,
        rem: i64,
        i: usize,
        rows: &[i64],
        cols: &mut Vec<i64>,
        row: &mut Vec<u32>,
        cur: &mut Vec<Vec<u32>>,
        out: &mut Vec<Vec<Vec<u32>>>,
    ) {
        if j == cols.len() {
            if rem == 0 {
                cur.push(row.clone());
                rec(i + 1, rows, cols, cur, out);
                cur.pop();
            }
            return;
        }
        for v in 0..=rem.min(cols[j]) {
            row[j] = v as u32;
            cols[j] -= v;
            fill(j + 1, rem - v, i, rows, cols, row, cur, out);
            cols[j] += v;
        }
        row[j] = 0;
    }
    let mut out = Vec::new();
    let mut cols = cols.to_vec();
    rec(0, rows, &mut cols, &mut Vec::new(), &mut out);
    out
}

/// Compares Σ_λ b_λ P_λ(x)P_λ(y) with ∏ᵢⱼ G(xᵢyⱼ), G = Σ cₖ uᵏ, on every
/// coefficient x^μ y^ν of total degree ≤ D. `b(λ)` may depend on both ranks.
pub fn cauchy_generic<P, B, C>(name: &str, n: usize, m: usize, d_max: u32, basis: P, b: B, coef: C) -> Result<Report, Error>
where
    P: Fn(&Partition, usize) -> Result<SymFunc, Error>,
    B: Fn(&Partition) -> Result<RatFunc, Error>,
    C: Fn(u32) -> RatFunc,
{
    let mut rep = Report::new(name).param("n", n).param("m", m).param("D", d_max);
    let lo = n.min(m);
    for d in 0..=d_max {
        let lams = partitions_of(d, lo);
        let mut px = Vec::new();
        for lam in &lams {
            px.push((b(lam)?, basis(lam, n)?, basis(lam, m)?));
        }
        let cs: Vec<RatFunc> = (0..=d).map(&coef).collect();
        for mu in partitions_of(d, n) {
            for nu in partitions_of(d, m) {
                let mut lhs = RatFunc::zero();
                for (bl, p, q) in &px {
                    let a = p.coeff(&mu);
                    if a.is_zero() {
                        continue;
                    }
                    lhs = lhs.add(&bl.mul(&a).mul(&q.coeff(&nu)));
                }
                let mut rhs = RatFunc::zero();
                for tab in contingency_tables(&mu.padded(n), &nu.padded(m)) {
                    let mut c = RatFunc::one();
                    for row in &tab {
                        for &v in row {
                            c = c.mul(&cs[v as usize]);
                        }
                    }
                    rhs = rhs.add(&c);
                }
                rep.check(lhs == rhs, || format!("x^{:?} y^{:?}: sum {} vs kernel {}", mu, nu, lhs, rhs));
            }
        }
    }
    Ok(rep)
}

pub fn cauchy_check(n: usize, m: usize, d_max: u32) -> Result<Report, Error> {
    cauchy_generic("macdonald cauchy", n, m, d_max, macdonald_branch, |l| Ok(b_norm(l)), gamma_qt_coeff)
}

/// 2ρᵢ = n − 1 − 2i (0-based).
fn rho_half(n: usize, i: usize) -> i32 {
    n as i32 - 1 - 2 * i as i32
}

/// Φ̃_λ(q^μ t^ρ) = t^{ρ(λ)} ∏_{a<b} Γ(t^{b−a}q^{λa−λb})/Γ(t^{b−a}) · P_λ(q^μ t^ρ),
/// generic in (q, t^{1/2}).
pub fn phi_tilde_at(lam: &Partition, mu: &Partition, n: usize) -> Result<RatFunc, Error> {
    let l = lam.padded(n);
    let m = mu.padded(n);
    let mut c = RatFunc::lmono([0, (0..n).map(|i| rho_half(n, i) * l[i] as i32).sum(), 0, 0]);
    for a in 0..n {
        for b in a + 1..n {
            c = c.mul(&finite_ratio(tq((b - a) as i64, 0), l[a] - l[b], T)?);
        }
    }
    let pts: Vec<LMono> = (0..n).map(|i| lm_mul(qm(m[i]), [0, rho_half(n, i), 0, 0])).collect();
    Ok(c.mul(&macdonald_branch(lam, n)?.to_xpoly().eval_lmono(&pts)))
}

/// Φ_λ(q^{μ−kρ}) = Φ_μ(q^{λ−kρ}) at t = q^{−k}.
pub fn self_duality_check(lam: &Partition, mu: &Partition, n: usize, k: i64) -> Result<Report, Error> {
    let mut rep = Report::new("macdonald self-duality")
        .param("lambda", format!("{:?}", lam))
        .param("mu", format!("{:?}", mu))
        .param("k", k);
    let a = phi_tilde_at(lam, mu, n)?.subs_mono(Var::T, qm(-k))?;
    let b = phi_tilde_at(mu, lam, n)?.subs_mono(Var::T, qm(-k))?;
    rep.check(a == b, || format!("{} vs {}", a, b));
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratfunc::{int, q, t};
    use crate::symfunc::{monomial_sym, sp_qt, sp_torus, sym_from, WeightKind};

    fn p(v: &[i64]) -> Partition {
        Partition::new(v).unwrap()
    }

    #[test]
    fn gs_example_two_rows() {
        let p2 = macdonald_gs(&p(&[2]), 2).unwrap();
        let c = int(1).add(&q()).mul(&int(1).sub(&t())).div(&int(1).sub(&q().mul(&t())));
        assert_eq!(p2, sym_from(2, &[(&[2], int(1)), (&[1, 1], c)]));
        assert_eq!(macdonald_gs(&p(&[1, 1]), 2).unwrap(), monomial_sym(&p(&[1, 1]), 2).unwrap());
    }

    #[test]
    fn constructions_agree_small() {
        for n in 1..=3 {
            for w in 0..=4 {
                for lam in partitions_of(w, n) {
                    assert_eq!(macdonald_gs(&lam, n).unwrap(), macdonald_branch(&lam, n).unwrap(), "{:?} {}", lam, n);
                    assert_eq!(macdonald_gs(&lam, n).unwrap(), macdonald_gs_ext(&lam, n, Extension::Lex).unwrap());
                }
            }
        }
    }

    #[test]
    fn psi_is_one_at_t_equal_q() {
        for n in 2..=3 {
            for w in 0..=4 {
                for lam in partitions_of(w, n) {
                    for mu in interlacing_below(&lam, n) {
                        let v = branching_psi(&lam, &mu, n).unwrap();
                        assert_eq!(v.subs_mono(Var::T, qm(1)).unwrap(), int(1));
                    }
                }
            }
        }
        assert!(branching_psi(&p(&[1, 1]), &p(&[2]), 2).unwrap().is_zero());
    }

    #[test]
    fn norms() {
        assert_eq!(b_norm(&p(&[1])), int(1).sub(&t()).div(&int(1).sub(&q())));
        assert_eq!(b_norm(&Partition::empty()), int(1));
        for w in 0..=4 {
            for lam in partitions_of(w, 4) {
                let b = b_norm(&lam);
                assert_eq!(b, b_norm_factored(&lam, 4).unwrap());
                assert_eq!(b, b_norm_factored(&lam, lam.len().max(1)).unwrap());
                assert_eq!(b.mul(&gs_norm(&lam)), int(1), "{:?}", lam);
            }
        }
        let l = p(&[2, 1]);
        let pl = macdonald_gs(&l, 3).unwrap();
        assert_eq!(sp_qt(&pl, &pl).unwrap().mul(&b_norm(&l)), int(1));
    }

    #[test]
    fn torus_norm_matches_constant_term() {
        assert_eq!(torus_norm_at(&p(&[3]), 1, 2).unwrap(), int(1));
        for k in 1..=2u32 {
            for lam in [p(&[]), p(&[1]), p(&[2]), p(&[1, 1]), p(&[2, 1])] {
                let pl = macdonald_branch(&lam, 2).unwrap().at_t_qpow(k as i64).unwrap();
                let ct = sp_torus(&pl, &pl, WeightKind::Macdonald { k }).unwrap();
                assert_eq!(ct, torus_norm_at(&lam, 2, k as i64).unwrap(), "{:?} k={}", lam, k);
            }
        }
        let g = torus_norm(&p(&[1]), 3).reduce().unwrap();
        assert!(!g.is_closed());
    }

    #[test]
    fn operator_examples() {
        let p1 = macdonald_gs(&p(&[1]), 2).unwrap();
        let r = apply_macdonald_op(1, &p1).unwrap();
        assert_eq!(r, p1.scale(&t().mul(&q()).add(&int(1))));
        let p11 = macdonald_gs(&p(&[1, 1]), 2).unwrap();
        assert_eq!(apply_macdonald_op(2, &p11).unwrap(), p11.scale(&t().mul(&q().pow(2))));
        assert_eq!(apply_macdonald_op(1, &SymFunc::one(2)).unwrap(), SymFunc::one(2).scale(&t().add(&int(1))));
    }

    #[test]
    fn eigenfunctions() {
        for n in 1..=3 {
            for w in 0..=3 {
                for lam in partitions_of(w, n) {
                    let pl = macdonald_branch(&lam, n).unwrap();
                    for r in 1..=n {
                        let lhs = apply_macdonald_op(r, &pl).unwrap();
                        assert_eq!(lhs, pl.scale(&macdonald_eigenvalue(&lam, r, n)), "{:?} r={}", lam, r);
                    }
                }
            }
        }
        assert_eq!(macdonald_eigenvalue(&p(&[2, 1]), 3, 3), RatFunc::lmono(qtm(3, 3)));
    }

    #[test]
    fn dual_eigen() {
        let terms = dual_op_terms(1, &[1, 1]);
        assert!(terms.iter().find(|(s, _)| s == &vec![1, 2]).unwrap().1.is_zero());
        let n = 2;
        for w in 0..=3 {
            for lam in partitions_of(w, n) {
                let pl = macdonald_branch(&lam, n).unwrap();
                for r in 1..=n {
                    let mut lhs = SymFunc::zero(n);
                    for (s, c) in dual_op_terms(r, &lam.padded(n)) {
                        if c.is_zero() {
                            continue;
                        }
                        lhs = lhs.add(&macdonald_branch(&Partition::new(&s).unwrap(), n).unwrap().scale(&c));
                    }
                    let er = monomial_sym(&Partition::from_sorted(vec![1; r]), n).unwrap();
                    assert_eq!(lhs, er.mul(&pl), "{:?} r={}", lam, r);
                }
            }
        }
    }

    #[test]
    fn pieri() {
        assert_eq!(pieri_phi(&p(&[2, 1]), &p(&[2, 1]), 3).unwrap(), int(1));
        for m in 0..=3 {
            assert_eq!(pieri_phi(&p(&[m + 1]), &p(&[1]), 1).unwrap(), gamma_qt_coeff(m as u32));
        }
        assert!(pieri_check(&p(&[1]), 1, 2).unwrap().passed);
        assert!(pieri_check(&p(&[2, 1]), 2, 3).unwrap().passed);
    }

    #[test]
    fn cauchy() {
        for (n, m) in [(2, 1), (2, 2)] {
            let r = cauchy_check(n, m, 3).unwrap();
            assert!(r.passed, "{}", r);
        }
    }

    #[test]
    fn duality() {
        for k in 1..=2 {
            let r = self_duality_check(&p(&[1]), &p(&[2]), 2, k).unwrap();
            assert!(r.passed, "{}", r);
        }
        assert!(self_duality_check(&p(&[1, 1]), &p(&[1]), 2, 2).unwrap().passed);
    }

    #[test]
    fn contingency() {
        assert_eq!(contingency_tables(&[1, 1], &[1, 1]).len(), 2);
        assert_eq!(contingency_tables(&[2], &[1, 1]).len(), 1);
    }

    #[test]
    fn dual_op_on_function() {
        // full shift at r = n
        let mut f = PartitionFunction::new();
        f.insert(p(&[2, 1]), int(3));
        let g = apply_dual_op(2, 2, &f);
        assert_eq!(g[&p(&[1])], int(3));
    }
}
