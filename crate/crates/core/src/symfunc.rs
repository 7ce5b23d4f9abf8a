//! Symmetric polynomials in the monomial basis, power sums, scalar products
//! and torus weights.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use parking_lot::Mutex;

use crate::laurent::{constant_term_pair, LaurentSeries};
use crate::partition::{partitions_of, Partition};
use crate::ratfunc::RatFunc;
use crate::xpoly::{exps_from, Exps, XPoly, MAXVARS};
use crate::{Error, Var};

/// A symmetric polynomial of rank n: Σ c_λ m_λ with ℓ(λ) ≤ n.
#[derive(Clone, PartialEq, Default)]
pub struct SymFunc {
    n: usize,
    coeffs: BTreeMap<Partition, RatFunc>,
}

impl SymFunc {
    pub fn zero(n: usize) -> SymFunc {
        SymFunc { n, coeffs: BTreeMap::new() }
    }

    pub fn one(n: usize) -> SymFunc {
        SymFunc::constant(n, RatFunc::one())
    }

    pub fn constant(n: usize, c: RatFunc) -> SymFunc {
        let mut s = SymFunc::zero(n);
        s.add_term(Partition::empty(), c);
        s
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn from_map(n: usize, coeffs: BTreeMap<Partition, RatFunc>) -> Result<SymFunc, Error> {
        let mut s = SymFunc::zero(n);
        for (p, c) in coeffs {
            if p.len() > n {
                return Err(Error::LengthOverflow { len: p.len(), rank: n });
            }
            s.add_term(p, c);
        }
        Ok(s)
    }

    pub fn add_term(&mut self, p: Partition, c: RatFunc) {
        if c.is_zero() || p.len() > self.n {
            return;
        }
        let e = self.coeffs.entry(p.clone()).or_insert_with(RatFunc::zero);
        *e = e.add(&c);
        if e.is_zero() {
            self.coeffs.remove(&p);
        }
    }

    pub fn coeff(&self, p: &Partition) -> RatFunc {
        self.coeffs.get(p).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &RatFunc)> {
        self.coeffs.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Partition> {
        self.coeffs.keys()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.coeffs.keys().map(|p| p.weight()).max().unwrap_or(0)
    }

    pub fn add(&self, o: &SymFunc) -> SymFunc {
        let mut r = self.clone();
        r.n = self.n.max(o.n);
        for (p, c) in &o.coeffs {
            r.add_term(p.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, o: &SymFunc) -> SymFunc {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> SymFunc {
        self.map(|c| c.neg())
    }

    pub fn scale(&self, c: &RatFunc) -> SymFunc {
        if c.is_zero() {
            return SymFunc::zero(self.n);
        }
        self.map(|x| x.mul(c))
    }

    pub fn map<F: Fn(&RatFunc) -> RatFunc>(&self, f: F) -> SymFunc {
        let mut s = SymFunc::zero(self.n);
        for (p, c) in &self.coeffs {
            s.add_term(p.clone(), f(c));
        }
        s
    }

    pub fn try_map<F: Fn(&RatFunc) -> Result<RatFunc, Error>>(&self, f: F) -> Result<SymFunc, Error> {
        let mut s = SymFunc::zero(self.n);
        for (p, c) in &self.coeffs {
            s.add_term(p.clone(), f(c)?);
        }
        Ok(s)
    }

    /// The same coefficients viewed in rank `n`; partitions too long for the
    /// new rank are dropped (setting the extra variables to zero).
    pub fn with_rank(&self, n: usize) -> SymFunc {
        let mut s = SymFunc::zero(n);
        for (p, c) in &self.coeffs {
            s.add_term(p.clone(), c.clone());
        }
        s
    }

    /// Homogeneous component of degree `d`.
    pub fn component(&self, d: u32) -> SymFunc {
        let mut s = SymFunc::zero(self.n);
        for (p, c) in self.coeffs.iter().filter(|(p, _)| p.weight() == d) {
            s.add_term(p.clone(), c.clone());
        }
        s
    }

    pub fn to_xpoly(&self) -> XPoly<RatFunc> {
        let mut x = XPoly::zero(self.n);
        for (p, c) in &self.coeffs {
            for e in distinct_permutations(&p.padded(self.n)) {
                x.add_term(e, c.clone());
            }
        }
        x
    }

    /// Reads a symmetric polynomial back; fails if `x` is not symmetric.
    pub fn from_xpoly(x: &XPoly<RatFunc>) -> Result<SymFunc, Error> {
        let n = x.nvars();
        let mut s = SymFunc::zero(n);
        for (e, c) in x.terms() {
            if e.iter().any(|&v| v < 0) {
                return Err(Error::Domain("negative exponent in a symmetric polynomial".into()));
            }
            let mut v: Vec<u32> = e[..n].iter().map(|&v| v as u32).collect();
            v.sort_unstable_by(|a, b| b.cmp(a));
            let sorted = v.iter().map(|&a| a as i16).collect::<Vec<_>>();
            if sorted[..] == e[..n] {
                s.add_term(Partition::from_sorted(v), c.clone());
            }
        }
        let back = s.to_xpoly();
        if &back != x {
            return Err(Error::Domain("polynomial is not symmetric".into()));
        }
        Ok(s)
    }

    pub fn mul(&self, o: &SymFunc) -> SymFunc {
        let n = self.n.max(o.n);
        let a = self.with_rank(n).to_xpoly();
        let b = o.with_rank(n).to_xpoly();
        SymFunc::from_xpoly(&a.mul(&b)).expect("product of symmetric polynomials")
    }

    /// Substitutes t = q^k in every coefficient.
    pub fn at_t_qpow(&self, k: i64) -> Result<SymFunc, Error> {
        self.try_map(|c| c.subs_mono(Var::T, [2 * k as i32, 0, 0, 0]))
    }

    /// Substitutes κ = k in every coefficient.
    pub fn at_kappa(&self, k: i64) -> Result<SymFunc, Error> {
        self.try_map(|c| c.subs_int(Var::K, k))
    }

    /// Coefficients truncated as q-series through q^K.
    pub fn truncate_q(&self, k: i32) -> Result<SymFunc, Error> {
        self.try_map(|c| c.truncate_q(2 * k))
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<&Partition> = self.coeffs.keys().collect();
        keys.sort_by(|a, b| b.cmp_graded(a));
        for (i, p) in keys.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({})*m{}", self.coeffs[*p], p)?;
        }
        Ok(())
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All distinct permutations of an exponent vector.
pub fn distinct_permutations(v: &[i64]) -> Vec<Exps> {
    let mut a = v.to_vec();
    a.sort_unstable();
    let mut out = Vec::new();
    loop {
        out.push(exps_from(&a));
        // next lexicographic permutation
        let Some(i) = (0..a.len().saturating_sub(1)).rev().find(|&i| a[i] < a[i + 1]) else { break };
        let j = (i + 1..a.len()).rev().find(|&j| a[j] > a[i]).unwrap();
        a.swap(i, j);
        a[i + 1..].reverse();
    }
    out
}

pub fn monomial_sym(lam: &Partition, n: usize) -> Result<SymFunc, Error> {
    if lam.len() > n {
        return Err(Error::LengthOverflow { len: lam.len(), rank: n });
    }
    let mut s = SymFunc::zero(n);
    s.add_term(lam.clone(), RatFunc::one());
    Ok(s)
}

/// Coefficient of m_μ in p_ρ: assignments of the parts of ρ to the rows of
/// μ with matching row sums.
fn p_to_m_count(rho: &[u32], mu: &[u32]) -> BigInt {
    fn rec(i: usize, rho: &[u32], rem: &mut Vec<i64>) -> BigInt {
        if i == rho.len() {
            return if rem.iter().all(|&r| r == 0) { BigInt::one() } else { BigInt::zero() };
        }
        let mut acc = BigInt::zero();
        for j in 0..rem.len() {
            if rem[j] >= rho[i] as i64 {
                rem[j] -= rho[i] as i64;
                acc += rec(i + 1, rho, rem);
                rem[j] += rho[i] as i64;
            }
        }
        acc
    }
    let mut rem: Vec<i64> = mu.iter().map(|&x| x as i64).collect();
    rec(0, rho, &mut rem)
}

pub fn power_sum(lam: &Partition, n: usize) -> SymFunc {
    let mut s = SymFunc::zero(n);
    for mu in partitions_of(lam.weight(), n) {
        let c = p_to_m_count(lam.parts(), mu.parts());
        if !c.is_zero() {
            s.add_term(mu, RatFunc::from_bigint(c));
        }
    }
    s
}

/// Change-of-basis data at one degree: `inv[μ][ρ]` is the coefficient of
/// p_ρ in m_μ (stable range).
struct PowerTable {
    parts: Vec<Partition>,
    index: HashMap<Partition, usize>,
    inv: Vec<Vec<BigRational>>,
}

fn power_table(d: u32) -> Arc<PowerTable> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<PowerTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = cache.lock().get(&d) {
        return t.clone();
    }
    let parts = partitions_of(d, d as usize);
    let k = parts.len();
    // a[ρ][μ]: p_ρ = Σ_μ a[ρ][μ] m_μ
    let a: Vec<Vec<BigRational>> = parts
        .iter()
        .map(|rho| parts.iter().map(|mu| BigRational::from_integer(p_to_m_count(rho.parts(), mu.parts()))).collect())
        .collect();
    // invert a: m_μ = Σ_ρ inv[μ][ρ] p_ρ with inv = a⁻¹ transposed appropriately
    let mut m = a.clone();
    let mut id: Vec<Vec<BigRational>> =
        (0..k).map(|i| (0..k).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }).collect()).collect();
    for col in 0..k {
        let piv = (col..k).find(|&r| !m[r][col].is_zero()).expect("power sums are a basis in the stable range");
        m.swap(col, piv);
        id.swap(col, piv);
        let pv = m[col][col].clone();
        for j in 0..k {
            m[col][j] = &m[col][j] / &pv;
            id[col][j] = &id[col][j] / &pv;
        }
        for r in 0..k {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for j in 0..k {
                    let x = &f * &m[col][j];
                    m[r][j] -= x;
                    let y = &f * &id[col][j];
                    id[r][j] -= y;
                }
            }
        }
    }
    // id = a⁻¹, so m_μ = Σ_ρ (a⁻¹)[μ][ρ] p_ρ
    let index = parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let t = Arc::new(PowerTable { parts, index, inv: id });
    cache.lock().insert(d, t.clone());
    t
}

fn ratio_to_ratfunc(r: &BigRational) -> RatFunc {
    RatFunc::from_ratio(r)
}

/// Power-sum coefficients of `f`, treating f as a stable symmetric function
/// (no rank check).
fn to_power_stable(f: &SymFunc) -> BTreeMap<Partition, RatFunc> {
    let mut out: BTreeMap<Partition, RatFunc> = BTreeMap::new();
    for (mu, c) in f.terms() {
        let tab = power_table(mu.weight());
        let i = tab.index[mu];
        for (j, rho) in tab.parts.iter().enumerate() {
            let v = &tab.inv[i][j];
            if !v.is_zero() {
                let e = out.entry(rho.clone()).or_insert_with(RatFunc::zero);
                *e = e.add(&c.mul(&ratio_to_ratfunc(v)));
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Coefficients c_ρ with f = Σ c_ρ p_ρ; requires degree ≤ rank.
pub fn to_power_basis(f: &SymFunc) -> Result<BTreeMap<Partition, RatFunc>, Error> {
    if f.degree() as usize > f.rank() {
        return Err(Error::StableRange { degree: f.degree() as usize, rank: f.rank() });
    }
    Ok(to_power_stable(f))
}

/// Bilinear form diagonal in power sums: ⟨p_ρ, p_ρ⟩ = z_ρ·w(ρ).
pub fn sp_power_weighted<W: Fn(&Partition) -> RatFunc>(a: &BTreeMap<Partition, RatFunc>, b: &BTreeMap<Partition, RatFunc>, w: &W) -> RatFunc {
    let mut acc = RatFunc::zero();
    for (rho, x) in a {
        if let Some(y) = b.get(rho) {
            let z = RatFunc::from_bigint(rho.z());
            acc = acc.add(&x.mul(y).mul(&z).mul(&w(rho)));
        }
    }
    acc
}

pub fn weight_qt(rho: &Partition) -> RatFunc {
    let mut r = RatFunc::one();
    for &k in rho.parts() {
        let k = k as i32;
        r = r.mul(&RatFunc::one_minus([2 * k, 0, 0, 0]).div(&RatFunc::one_minus([0, 2 * k, 0, 0])));
    }
    r
}

pub fn weight_q(rho: &Partition) -> RatFunc {
    let mut r = RatFunc::one();
    for &k in rho.parts() {
        r = r.mul(&RatFunc::one_minus([2 * k as i32, 0, 0, 0]));
    }
    r
}

pub fn weight_kappa(rho: &Partition) -> RatFunc {
    RatFunc::var(Var::K).pow(-(rho.len() as i64))
}

fn sp_with<W: Fn(&Partition) -> RatFunc>(f: &SymFunc, g: &SymFunc, w: W) -> Result<RatFunc, Error> {
    let a = to_power_basis(f)?;
    let b = to_power_basis(g)?;
    Ok(sp_power_weighted(&a, &b, &w))
}

/// The (q,t) scalar product.
pub fn sp_qt(f: &SymFunc, g: &SymFunc) -> Result<RatFunc, Error> {
    sp_with(f, g, weight_qt)
}

/// The q scalar product (t = 0).
pub fn sp_q(f: &SymFunc, g: &SymFunc) -> Result<RatFunc, Error> {
    sp_with(f, g, weight_q)
}

/// The Jack scalar product.
pub fn sp_kappa(f: &SymFunc, g: &SymFunc) -> Result<RatFunc, Error> {
    sp_with(f, g, weight_kappa)
}

/// Stable version of the weighted product (rank ignored).
pub fn sp_stable<W: Fn(&Partition) -> RatFunc>(f: &SymFunc, g: &SymFunc, w: W) -> RatFunc {
    sp_power_weighted(&to_power_stable(f), &to_power_stable(g), &w)
}

/// Gram–Schmidt in degree `d` along the given linear extension of
/// dominance: returns (λ, P_λ as m-coefficients, ⟨P_λ,P_λ⟩) for all λ ⊢ d.
pub fn gram_schmidt<W: Fn(&Partition) -> RatFunc>(
    order: &[Partition],
    w: W,
) -> Vec<(Partition, BTreeMap<Partition, RatFunc>, RatFunc)> {
    let mut done: Vec<(Partition, BTreeMap<Partition, RatFunc>, BTreeMap<Partition, RatFunc>, RatFunc)> = Vec::new();
    for lam in order {
        let mut m: BTreeMap<Partition, RatFunc> = BTreeMap::new();
        m.insert(lam.clone(), RatFunc::one());
        let mut mf = SymFunc::zero(lam.weight().max(1) as usize);
        mf.add_term(lam.clone(), RatFunc::one());
        let mp = to_power_stable(&mf);
        let mut pp = mp.clone();
        for (nu, pm, pv, norm) in &done {
            let _ = nu;
            let c = sp_power_weighted(&mp, pv, &w).div(norm);
            if c.is_zero() {
                continue;
            }
            for (k, v) in pm {
                let e = m.entry(k.clone()).or_insert_with(RatFunc::zero);
                *e = e.sub(&c.mul(v));
            }
            for (k, v) in pv {
                let e = pp.entry(k.clone()).or_insert_with(RatFunc::zero);
                *e = e.sub(&c.mul(v));
            }
        }
        m.retain(|_, c| !c.is_zero());
        pp.retain(|_, c| !c.is_zero());
        let norm = sp_power_weighted(&pp, &pp, &w);
        done.push((lam.clone(), m, pp, norm));
    }
    done.into_iter().map(|(l, m, _, n)| (l, m, n)).collect()
}

/// Torus weight functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightKind {
    /// t = q^k, k ≥ 1.
    Macdonald { k: u32 },
    /// t = 0, truncated after q^K.
    QWhittaker { q_order: u32 },
    /// Integer κ ≥ 1.
    Jack { kappa: u32 },
}

/// Δ(z) for the weight kind in rank n.
pub fn weight_delta(w: WeightKind, n: usize) -> Result<LaurentSeries, Error> {
    let unit = |i: usize, j: usize, c: RatFunc| {
        let mut e = [0i16; MAXVARS];
        e[i] += 1;
        e[j] -= 1;
        XPoly::one(n).sub(&XPoly::monomial(n, e, c))
    };
    match w {
        WeightKind::Macdonald { k } => {
            if k == 0 {
                return Err(Error::Domain("macdonald weight needs k ≥ 1".into()));
            }
            let mut p = XPoly::one(n);
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        for r in 0..k as i32 {
                            p = p.mul(&unit(i, j, RatFunc::lmono([2 * r, 0, 0, 0])));
                        }
                    }
                }
            }
            Ok(LaurentSeries::exact(p))
        }
        WeightKind::Jack { kappa } => {
            if kappa == 0 {
                return Err(Error::Domain("jack weight needs κ ≥ 1".into()));
            }
            let mut p = XPoly::one(n);
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        p = p.mul(&unit(i, j, RatFunc::one()).pow(kappa));
                    }
                }
            }
            Ok(LaurentSeries::exact(p))
        }
        WeightKind::QWhittaker { q_order } => {
            let mut s = LaurentSeries::truncated(XPoly::one(n), q_order as i32)?;
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        for r in 0..=q_order as i32 {
                            // (z_i⁻¹ z_j; q)_∞
                            let f = unit(j, i, RatFunc::lmono([2 * r, 0, 0, 0]));
                            s = s.mul(&LaurentSeries::truncated(f, q_order as i32)?)?;
                        }
                    }
                }
            }
            Ok(s)
        }
    }
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |a, i| a * BigInt::from(i))
}

/// (1/n!)·CT[f(z) g(z⁻¹) Δ(z)].
pub fn sp_torus(f: &SymFunc, g: &SymFunc, w: WeightKind) -> Result<RatFunc, Error> {
    if f.rank() != g.rank() {
        return Err(Error::Domain(format!("rank mismatch {} vs {}", f.rank(), g.rank())));
    }
    let n = f.rank();
    let delta = weight_delta(w, n)?;
    let fd = LaurentSeries::exact(f.to_xpoly());
    let h = match w {
        WeightKind::QWhittaker { q_order } => {
            LaurentSeries::truncated(f.to_xpoly(), q_order as i32)?.mul(&delta)?
        }
        _ => fd.mul(&delta)?,
    };
    let mut ct = constant_term_pair(h.poly(), &g.to_xpoly());
    if let WeightKind::QWhittaker { q_order } = w {
        ct = ct.truncate_q(2 * q_order as i32)?;
    }
    Ok(ct.div(&RatFunc::from_bigint(factorial(n))))
}

/// Helper for tests and suites: m-basis element from (partition, coefficient) pairs.
pub fn sym_from(n: usize, terms: &[(&[i64], RatFunc)]) -> SymFunc {
    let mut s = SymFunc::zero(n);
    for (p, c) in terms {
        s.add_term(Partition::new(p).unwrap(), c.clone());
    }
    s
}

/// Exps of a partition padded to n.
pub fn partition_exps(p: &Partition, n: usize) -> Exps {
    exps_from(&p.padded(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratfunc::{int, kappa, q, t};

    fn p(v: &[i64]) -> Partition {
        Partition::new(v).unwrap()
    }

    #[test]
    fn monomials() {
        let m = monomial_sym(&p(&[1]), 2).unwrap().to_xpoly();
        assert_eq!(m, XPoly::var(2, 0).add(&XPoly::var(2, 1)));
        let m = monomial_sym(&p(&[1, 1]), 2).unwrap().to_xpoly();
        assert_eq!(m, XPoly::var(2, 0).mul(&XPoly::var(2, 1)));
        let m = monomial_sym(&p(&[2]), 2).unwrap().to_xpoly();
        assert_eq!(m, XPoly::var(2, 0).pow(2).add(&XPoly::var(2, 1).pow(2)));
        assert!(monomial_sym(&p(&[1, 1, 1]), 2).is_err());
    }

    #[test]
    fn power_sums() {
        assert_eq!(power_sum(&p(&[2]), 2), sym_from(2, &[(&[2], int(1))]));
        assert_eq!(power_sum(&p(&[1, 1]), 2), sym_from(2, &[(&[2], int(1)), (&[1, 1], int(2))]));
        assert_eq!(power_sum(&p(&[1]), 3), sym_from(3, &[(&[1], int(1))]));
        let direct = power_sum(&p(&[1]), 3).mul(&power_sum(&p(&[2]), 3));
        assert_eq!(direct, power_sum(&p(&[2, 1]), 3));
    }

    #[test]
    fn power_basis() {
        let c = to_power_basis(&monomial_sym(&p(&[1, 1]), 2).unwrap()).unwrap();
        assert_eq!(c[&p(&[1, 1])], int(1).div(&int(2)));
        assert_eq!(c[&p(&[2])], int(-1).div(&int(2)));
        let c = to_power_basis(&power_sum(&p(&[2]), 2)).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[&p(&[2])], int(1));
        assert!(to_power_basis(&monomial_sym(&p(&[3]), 2).unwrap()).is_err());
    }

    #[test]
    fn scalar_products() {
        let p1 = power_sum(&p(&[1]), 2);
        let p2 = power_sum(&p(&[2]), 2);
        let p11 = power_sum(&p(&[1, 1]), 2);
        assert_eq!(sp_qt(&p1, &p1).unwrap(), int(1).sub(&q()).div(&int(1).sub(&t())));
        assert!(sp_qt(&p1, &p2).unwrap().is_zero());
        let want = int(2).mul(&int(1).sub(&q().pow(2))).div(&int(1).sub(&t().pow(2)));
        assert_eq!(sp_qt(&p2, &p2).unwrap(), want);
        assert_eq!(sp_q(&p1, &p1).unwrap(), int(1).sub(&q()));
        assert!(sp_q(&p1, &p11).unwrap().is_zero());
        assert_eq!(sp_kappa(&p1, &p1).unwrap(), kappa().inv());
        assert_eq!(sp_kappa(&p11, &p11).unwrap(), int(2).div(&kappa().pow(2)));
        assert!(sp_kappa(&p11, &p2).unwrap().is_zero());
    }

    #[test]
    fn deltas() {
        let d = weight_delta(WeightKind::Macdonald { k: 1 }, 2).unwrap();
        let mut e = [0i16; MAXVARS];
        e[0] = 1;
        e[1] = -1;
        let a = XPoly::one(2).sub(&XPoly::monomial(2, e, int(1)));
        e[0] = -1;
        e[1] = 1;
        let b = XPoly::one(2).sub(&XPoly::monomial(2, e, int(1)));
        assert_eq!(d.poly(), &a.mul(&b));
        let j = weight_delta(WeightKind::Jack { kappa: 1 }, 2).unwrap();
        assert_eq!(j.poly(), d.poly());
        let w = weight_delta(WeightKind::QWhittaker { q_order: 1 }, 2).unwrap();
        // through q¹: (1−u)(1−qu)(1−v)(1−qv) with u=z₂/z₁, v=z₁/z₂
        assert_eq!(w.constant_term(), int(2).add(&q().scale_int(2)));
    }

    #[test]
    fn torus_products() {
        let one1 = SymFunc::one(1);
        assert_eq!(sp_torus(&one1, &one1, WeightKind::Macdonald { k: 1 }).unwrap(), int(1));
        let one2 = SymFunc::one(2);
        assert_eq!(sp_torus(&one2, &one2, WeightKind::Macdonald { k: 1 }).unwrap(), int(1));
    }

    #[test]
    fn hall_product_at_t_equal_q() {
        // Gram matrix of m_λ under sp_qt at t = q against the torus product
        // with the Vandermonde weight in rank d ≥ degree.
        for d in 1..=4u32 {
            let n = d as usize;
            let ps = partitions_of(d, n);
            for a in &ps {
                for b in &ps {
                    let ma = monomial_sym(a, n).unwrap();
                    let mb = monomial_sym(b, n).unwrap();
                    let alg = sp_qt(&ma, &mb).unwrap().subs(Var::T, &q()).unwrap();
                    let tor = sp_torus(&ma, &mb, WeightKind::Macdonald { k: 1 }).unwrap();
                    assert_eq!(alg, tor, "{:?} {:?}", a, b);
                }
            }
        }
    }
}
