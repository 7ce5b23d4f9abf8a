//! (q,t)-Gamma, q-Gamma and κ-Gamma functions: Euler coefficients, finite
//! ratios, formal ratio objects, the θ₁ series and identity checks.
//!
//! Infinite products only ever appear through their coefficients, through
//! telescoped finite ratios Γ(xqⁿ)/Γ(x), or as truncated series at t = q^k.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::laurent::LaurentSeries;
use crate::ratfunc::{LMono, RatFunc};
use crate::report::Report;
use crate::xpoly::{exps_from, XPoly};
use crate::Error;

/// The letter t as a Laurent monomial.
pub const T: LMono = [0, 2, 0, 0];
/// tq⁻¹.
pub const T_OVER_Q: LMono = [-2, 2, 0, 0];

pub fn lm_mul(a: LMono, b: LMono) -> LMono {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]]
}

pub fn lm_pow(a: LMono, k: i32) -> LMono {
    [a[0] * k, a[1] * k, a[2] * k, a[3] * k]
}

/// q^n as a Laurent monomial (n in whole units).
pub fn qm(n: i64) -> LMono {
    [2 * n as i32, 0, 0, 0]
}

/// q^a t^b (whole units).
pub fn qtm(a: i64, b: i64) -> LMono {
    [2 * a as i32, 2 * b as i32, 0, 0]
}

/// Coefficient of xⁿ in Γ_{q,T}(x) for the base T given as a monomial:
/// ∏_{i=1}^{n}(1 − T q^{n−i})/(1 − q^{n+1−i}).
pub fn gamma_coeff_base(n: u32, tm: LMono) -> RatFunc {
    let mut num = RatFunc::one();
    let mut den = RatFunc::one();
    for i in 1..=n as i64 {
        num = num.mul(&RatFunc::one_minus(lm_mul(tm, qm(n as i64 - i))));
        den = den.mul(&RatFunc::one_minus(qm(n as i64 + 1 - i)));
    }
    num.div(&den)
}

/// Coefficient of xⁿ in Γ_{q,t}(x).
pub fn gamma_qt_coeff(n: u32) -> RatFunc {
    gamma_coeff_base(n, T)
}

/// Coefficient of zⁿ in Γ_q(z) = 1/(z;q)_∞.
pub fn gamma_q_coeff(n: u32) -> RatFunc {
    q_factorial(n).inv()
}

/// Coefficient of zⁿ in (1 − z)^{−κ}: κ(κ+1)⋯(κ+n−1)/n!.
pub fn gamma_kappa_coeff(n: u32) -> RatFunc {
    let k = RatFunc::var(crate::Var::K);
    let mut r = RatFunc::one();
    for j in 0..n as i64 {
        r = r.mul(&k.add(&RatFunc::from_int(j))).div(&RatFunc::from_int(j + 1));
    }
    r
}

/// (a; q)_n = ∏_{j<n}(1 − a q^j) for a monomial a.
pub fn q_pochhammer(a: LMono, n: u32) -> RatFunc {
    let mut r = RatFunc::one();
    for j in 0..n as i64 {
        r = r.mul(&RatFunc::one_minus(lm_mul(a, qm(j))));
    }
    r
}

/// (n)_q! = ∏_{i=1}^{n}(1 − q^i).
pub fn q_factorial(n: u32) -> RatFunc {
    q_pochhammer(qm(1), n)
}

/// Γ_{q,T}(x qⁿ)/Γ_{q,T}(x).
pub fn finite_ratio(x: LMono, n: i64, tm: LMono) -> Result<RatFunc, Error> {
    let mut num = RatFunc::one();
    let mut den = RatFunc::one();
    if n < 0 {
        // Γ(y)/Γ(yq^{|n|}) with y = xqⁿ
        let y = lm_mul(x, qm(n));
        for j in 0..-n {
            num = num.mul(&RatFunc::one_minus(lm_mul(tm, lm_mul(y, qm(j)))));
            den = den.mul(&RatFunc::one_minus(lm_mul(y, qm(j))));
        }
    } else {
        for j in 0..n {
            num = num.mul(&RatFunc::one_minus(lm_mul(x, qm(j))));
            den = den.mul(&RatFunc::one_minus(lm_mul(tm, lm_mul(x, qm(j)))));
        }
    }
    num.checked_div(&den).map_err(|_| Error::Pole(format!("Γ ratio at x={:?}, n={}", x, n)))
}

/// Γ_{q,t}(x qⁿ)/Γ_{q,t}(x).
pub fn gamma_qt_finite_ratio(x: LMono, n: i64) -> Result<RatFunc, Error> {
    finite_ratio(x, n, T)
}

/// Γ_{q,q^m}(x) as a finite product.
pub fn gamma_at_qpow_base(x: LMono, m: i64) -> Result<RatFunc, Error> {
    if m >= 0 {
        q_pochhammer(x, m as u32).checked_inv().map_err(|_| Error::Pole(format!("Γ_{{q,q^{}}} at {:?}", m, x)))
    } else {
        let mut r = RatFunc::one();
        for s in 1..=(-m) {
            r = r.mul(&RatFunc::one_minus(lm_mul(x, qm(-s))));
        }
        Ok(r)
    }
}

/// A product of Γ_{q,T} factors ∏Γ(num)/∏Γ(den) times a rational prefactor.
#[derive(Clone, Debug)]
pub struct GammaRatio {
    pub base: LMono,
    pub num: Vec<LMono>,
    pub den: Vec<LMono>,
    pub coeff: RatFunc,
}

fn same_slope(a: LMono, b: LMono) -> Option<i64> {
    if a[1..] == b[1..] && (a[0] - b[0]) % 2 == 0 {
        Some(((a[0] - b[0]) / 2) as i64)
    } else {
        None
    }
}

impl GammaRatio {
    pub fn new(base: LMono) -> GammaRatio {
        GammaRatio { base, num: Vec::new(), den: Vec::new(), coeff: RatFunc::one() }
    }

    pub fn push(&mut self, num: LMono, den: LMono) {
        self.num.push(num);
        self.den.push(den);
    }

    /// Telescopes every numerator against a denominator of equal slope
    /// (same non-q exponents, integer q-offset) into the prefactor. Pairs
    /// pushed together are tried first.
    pub fn reduce(&self) -> Result<GammaRatio, Error> {
        let mut out = GammaRatio::new(self.base);
        out.coeff = self.coeff.clone();
        let mut num: Vec<Option<LMono>> = self.num.iter().map(|&x| Some(x)).collect();
        let mut den: Vec<Option<LMono>> = self.den.iter().map(|&x| Some(x)).collect();
        for i in 0..num.len().min(den.len()) {
            if let (Some(a), Some(b)) = (num[i], den[i]) {
                if let Some(n) = same_slope(a, b) {
                    out.coeff = out.coeff.mul(&finite_ratio(b, n, self.base)?);
                    num[i] = None;
                    den[i] = None;
                }
            }
        }
        for i in 0..num.len() {
            let Some(a) = num[i] else { continue };
            for d in den.iter_mut() {
                if let Some(b) = *d {
                    if let Some(n) = same_slope(a, b) {
                        out.coeff = out.coeff.mul(&finite_ratio(b, n, self.base)?);
                        num[i] = None;
                        *d = None;
                        break;
                    }
                }
            }
        }
        out.num = num.into_iter().flatten().collect();
        out.den = den.into_iter().flatten().collect();
        Ok(out)
    }

    pub fn is_closed(&self) -> bool {
        self.num.is_empty() && self.den.is_empty()
    }

    /// Exact value; fails if unpaired factors remain and the base is not a
    /// pure integer power of q.
    pub fn value(&self) -> Result<RatFunc, Error> {
        let r = self.reduce()?;
        if r.is_closed() {
            return Ok(r.coeff);
        }
        if r.base[1..] != [0, 0, 0] || r.base[0] % 2 != 0 {
            return Err(Error::UnpairedGamma(r.describe()));
        }
        let m = (r.base[0] / 2) as i64;
        let mut v = r.coeff.clone();
        for x in &r.num {
            v = v.mul(&gamma_at_qpow_base(*x, m)?);
        }
        for x in &r.den {
            let d = gamma_at_qpow_base(*x, m)?;
            v = v.checked_div(&d).map_err(|_| Error::Pole(format!("1/Γ at {:?}", x)))?;
        }
        Ok(v)
    }

    /// Substitutes t = q^k throughout (after generic telescoping) and
    /// evaluates.
    pub fn specialize_t(&self, k: i64) -> Result<RatFunc, Error> {
        let r = self.reduce()?;
        let sub = |x: LMono| -> LMono { [x[0] + x[1] * k as i32, 0, x[2], x[3]] };
        let coeff = r.coeff.subs_mono(crate::Var::T, qm(k))?;
        let s = GammaRatio { base: sub(r.base), num: r.num.iter().map(|&x| sub(x)).collect(), den: r.den.iter().map(|&x| sub(x)).collect(), coeff };
        s.value()
    }

    pub fn describe(&self) -> String {
        let f = |v: &[LMono]| {
            v.iter().map(|x| format!("Γ({})", RatFunc::lmono(*x))).collect::<Vec<_>>().join("·")
        };
        format!("({}) · {} / {} [base {}]", self.coeff, f(&self.num), f(&self.den), RatFunc::lmono(self.base))
    }
}

/// Classical Γ(a + bκ) factors for the Jack layer, paired by equal κ-slope.
#[derive(Clone, Debug, Default)]
pub struct KGammaRatio {
    pub num: Vec<(i64, i64)>,
    pub den: Vec<(i64, i64)>,
}

/// Γ(a + bκ + n)/Γ(a + bκ) as a rational function of κ.
pub fn rising(a: i64, b: i64, n: i64) -> RatFunc {
    let k = RatFunc::var(crate::Var::K);
    let x = k.scale_int(b).add(&RatFunc::from_int(a));
    if n >= 0 {
        let mut r = RatFunc::one();
        for j in 0..n {
            r = r.mul(&x.add(&RatFunc::from_int(j)));
        }
        r
    } else {
        rising(a + n, b, -n).inv()
    }
}

fn factorial_big(m: i64) -> BigInt {
    (1..=m.max(0)).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

impl KGammaRatio {
    pub fn push(&mut self, num: (i64, i64), den: (i64, i64)) {
        self.num.push(num);
        self.den.push(den);
    }

    /// Pairs equal slopes; returns the telescoped part and leftovers.
    fn reduce(&self) -> (RatFunc, Vec<(i64, i64)>, Vec<(i64, i64)>) {
        let mut c = RatFunc::one();
        let mut den: Vec<Option<(i64, i64)>> = self.den.iter().map(|&x| Some(x)).collect();
        let mut left = Vec::new();
        for &(a, b) in &self.num {
            let pos = den.iter().position(|d| matches!(d, Some((_, bb)) if *bb == b));
            match pos {
                Some(p) => {
                    let (a2, _) = den[p].take().unwrap();
                    c = c.mul(&rising(a2, b, a - a2));
                }
                None => left.push((a, b)),
            }
        }
        (c, left, den.into_iter().flatten().collect())
    }

    /// Exact value in ℚ(κ); fails on unpaired slopes.
    pub fn value(&self) -> Result<RatFunc, Error> {
        let (c, n, d) = self.reduce();
        if !n.is_empty() || !d.is_empty() {
            return Err(Error::UnpairedGamma(format!("num {:?} den {:?}", n, d)));
        }
        Ok(c)
    }

    /// Value at an integer κ, using Γ(m) = (m−1)! and 1/Γ(m) = 0 for m ≤ 0.
    pub fn value_at(&self, kappa: i64) -> Result<BigRational, Error> {
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for &(a, b) in &self.num {
            let m = a + b * kappa;
            if m <= 0 {
                return Err(Error::Pole(format!("Γ({})", m)));
            }
            num *= factorial_big(m - 1);
        }
        for &(a, b) in &self.den {
            let m = a + b * kappa;
            if m <= 0 {
                return Ok(BigRational::zero());
            }
            den *= factorial_big(m - 1);
        }
        Ok(BigRational::new(num, den))
    }
}

/// θ₁(w; q)·i/q^{1/4} = (w − w⁻¹)∏_{j≥1}(1 − q^j)(1 − w²q^j)(1 − w⁻²q^j)
/// through q-order K, as a Laurent series in w (with z = w²). The omitted
/// prefactor q^{1/4}/i is common to every use.
pub fn theta1_series(k: u32) -> Result<LaurentSeries, Error> {
    let w = |e: i64, c: RatFunc| XPoly::monomial(1, exps_from(&[e]), c);
    let one = RatFunc::one();
    let mut s = LaurentSeries::truncated(w(1, one.clone()).sub(&w(-1, one.clone())), k as i32)?;
    for j in 1..=k as i64 {
        let qj = RatFunc::lmono(qm(j));
        for e in [0i64, 2, -2] {
            let f = w(0, one.clone()).sub(&w(e, qj.clone()));
            s = s.mul(&LaurentSeries::truncated(f, k as i32)?)?;
        }
    }
    Ok(s)
}

/// Jacobi triple product form of the same series: Σ_n (−1)ⁿ q^{n(n+1)/2} w^{2n+1}.
pub fn theta1_triple_product(k: u32) -> XPoly<RatFunc> {
    let mut p = XPoly::zero(1);
    let mut n: i64 = -((2 * k as i64) + 4);
    while n <= 2 * k as i64 + 4 {
        let e = n * (n + 1) / 2;
        if e <= k as i64 {
            let sign = if n.rem_euclid(2) == 0 { 1 } else { -1 };
            p.add_term(exps_from(&[2 * n + 1]), RatFunc::lmono(qm(e)).scale_int(sign));
        }
        n += 1;
    }
    p
}

fn lseries(terms: &[(i64, LMono, i64)], order_half: i32) -> Result<LaurentSeries, Error> {
    let mut p = XPoly::zero(1);
    for &(e, m, c) in terms {
        p.add_term(exps_from(&[e]), RatFunc::lmono(m).scale_int(c));
    }
    let mut s = LaurentSeries::exact(p);
    s = s.mul(&LaurentSeries::truncated(XPoly::one(1), order_half / 2)?)?;
    Ok(s)
}

/// P(w) = ∏_{j=1}^{J}(1 − q^j)(1 − w²q^{j+s})(1 − w⁻²q^{j−s}), truncated.
fn theta_product(jmax: i64, s_half: i32, order: i32) -> Result<LaurentSeries, Error> {
    let mut p = LaurentSeries::truncated(XPoly::one(1), order)?;
    for j in 1..=jmax {
        let a = lseries(&[(0, qm(0), 1), (0, qm(j), -1)], 2 * order)?;
        let b = lseries(&[(0, qm(0), 1), (2, [2 * j as i32 + s_half, 0, 0, 0], -1)], 2 * order)?;
        let c = lseries(&[(0, qm(0), 1), (-2, [2 * j as i32 - s_half, 0, 0, 0], -1)], 2 * order)?;
        p = p.mul(&a)?.mul(&b)?.mul(&c)?;
    }
    Ok(p)
}

/// Checks Γ_{q,t}(z)Γ_{q,t⁻¹}(q/z) = t^{1/2}θ₁((tz)^{1/2})/θ₁(z^{1/2}) at t = q^k
/// through q-order K, in the cross-multiplied i-free form
/// ∏_{r<k}(1 − z⁻¹q^{−r})·(w − w⁻¹)P(w) = q^{k/2}(q^{k/2}w − q^{−k/2}w⁻¹)P(q^{k/2}w)∏_{r<k}(1 − zq^r)
/// with z = w². With `perturb` the left side is deliberately altered.
pub fn reflection_check(kq: u32, k: u32, perturb: bool) -> Result<Report, Error> {
    let mut rep = Report::new("reflection_qt").param("K", kq).param("k", k);
    let ki = k as i64;
    // lowest q-power any factor can contribute
    let slack = (ki * (ki - 1) / 2 + ki + 2) as i32;
    let order = kq as i32 + slack;
    let jmax = order as i64 + ki + 2;
    let mut lhs = theta_product(jmax, 0, order)?;
    lhs = lhs.mul(&lseries(&[(1, qm(0), 1), (-1, qm(0), -1)], 2 * order)?)?;
    for r in 0..ki {
        lhs = lhs.mul(&lseries(&[(0, qm(0), 1), (-2, qm(-r), -1)], 2 * order)?)?;
    }
    let mut rhs = theta_product(jmax, 2 * k as i32, order)?;
    let kh = k as i32;
    rhs = rhs.mul(&lseries(&[(1, [2 * kh, 0, 0, 0], 1), (-1, [0, 0, 0, 0], -1)], 2 * order)?)?;
    for r in 0..ki {
        rhs = rhs.mul(&lseries(&[(0, qm(0), 1), (2, qm(r), -1)], 2 * order)?)?;
    }
    if perturb {
        lhs = lhs.add(&lseries(&[(1, qm(1), 1)], 2 * order)?)?;
    }
    compare_q_truncated(&mut rep, lhs.poly(), rhs.poly(), 2 * kq as i32, None)?;
    Ok(rep)
}

/// Compares two Laurent polynomials in one variable coefficientwise modulo
/// q-powers above `order_half`; optionally only exponents ≤ `max_exp`.
fn compare_q_truncated(
    rep: &mut Report,
    a: &XPoly<RatFunc>,
    b: &XPoly<RatFunc>,
    order_half: i32,
    max_exp: Option<i16>,
) -> Result<(), Error> {
    let d = a.sub(b);
    let mut keys: Vec<_> = d.terms().map(|(e, _)| *e).collect();
    keys.sort();
    for e in keys {
        if let Some(m) = max_exp {
            if e[0] > m {
                continue;
            }
        }
        let c = d.coeff(&e).q_series(order_half)?;
        rep.check(c.is_empty(), || {
            let (qe, v) = &c[0];
            format!("mismatch at q^({}/2) z^{}: difference {}", qe, e[0], v)
        });
    }
    if rep.cases == 0 {
        rep.cases = 1;
    }
    Ok(())
}

/// Checks Γ_q(z)Γ_q(q/z)(1 − z)·∏_{j≥1}(1 − q^j)(1 − zq^j)(1 − z⁻¹q^j) = (q;q)_∞ through
/// q-order K. Γ_q(z) is summed to z-order `m`; only z-exponents whose
/// coefficients are complete at that order are compared.
pub fn reflection_q_check(kq: u32, m: u32, perturb: bool) -> Result<Report, Error> {
    let mut rep = Report::new("reflection_q").param("K", kq).param("M", m);
    let order = kq as i32;
    let mut a = XPoly::zero(1);
    for n in 0..=m {
        a.add_term(exps_from(&[n as i64]), gamma_q_coeff(n));
    }
    let mut b = XPoly::zero(1);
    for n in 0..=kq {
        b.add_term(exps_from(&[-(n as i64)]), gamma_q_coeff(n).mul(&RatFunc::lmono(qm(n as i64))));
    }
    let mut c = LaurentSeries::truncated(XPoly::one(1).sub(&XPoly::var(1, 0)), order)?;
    for j in 1..=kq as i64 {
        for e in [0i64, 1, -1] {
            let f = XPoly::one(1).sub(&XPoly::monomial(1, exps_from(&[e]), RatFunc::lmono(qm(j))));
            c = c.mul(&LaurentSeries::truncated(f, order)?)?;
        }
    }
    let span = c.poly().terms().map(|(e, _)| (e[0] as i64).abs()).max().unwrap_or(0);
    let mut lhs = LaurentSeries::truncated(a, order)?.mul(&LaurentSeries::truncated(b, order)?)?.mul(&c)?;
    if perturb {
        lhs = lhs.add(&LaurentSeries::truncated(XPoly::constant(1, RatFunc::lmono(qm(1))), order)?)?;
    }
    let rhs = XPoly::constant(1, q_pochhammer(qm(1), kq).truncate_q(2 * order)?);
    let window = m as i64 - kq as i64 - span;
    if window < 0 {
        return Err(Error::Domain("z-order too small for the requested q-order".into()));
    }
    compare_q_truncated(&mut rep, lhs.poly(), &rhs, 2 * order, Some(window as i16))?;
    Ok(rep)
}

/// log Γ_{q,t}(x) for real 0 < q, t < 1 by summing until the tail is
/// negligible.
fn log_gamma_qt_f64(x: f64, q: f64, t: f64) -> Result<f64, Error> {
    if !(0.0..1.0).contains(&q) {
        return Err(Error::Domain(format!("|q| = {} is not < 1", q)));
    }
    let cut = (1e-15f64).ln() / q.ln();
    if !cut.is_finite() || cut > 5.0e7 {
        return Err(Error::Domain(format!("q = {} too close to 1", q)));
    }
    let mut s = 0.0;
    let mut qn = 1.0;
    for _ in 0..(cut.ceil() as usize + 1) {
        s += (-t * x * qn).ln_1p() - (-x * qn).ln_1p();
        qn *= q;
    }
    Ok(s)
}

fn ln_gamma_int(m: u32) -> f64 {
    (1..m).map(|i| (i as f64).ln()).sum()
}

/// Euler coefficients recovered as constant terms CT[x^{−n}G(x)]: against the
/// Γ-ratio Γ_{q,tq⁻¹}(q)/Γ_{q,tq⁻¹}(q^{n+1}) symbolically, and against
/// independently expanded products for Γ_{q,q^k}, Γ_q (mod q^{K+1}) and
/// (1 − x)^{−κ} at integer κ; Γ(κ+n)/(Γ(κ)n!) symbolically.
pub fn euler_inversion_check(nmax: u32, kq: u32) -> Result<Report, Error> {
    let mut rep = Report::new("euler_inversion").param("n_max", nmax).param("K", kq);
    let x = |m: u32, c: RatFunc| XPoly::monomial(1, exps_from(&[m as i64]), c);
    let ct = |s: &XPoly<RatFunc>, n: u32| LaurentSeries::exact(s.mul_exps(&exps_from(&[-(n as i64)]))).constant_term();
    let geom = |a: &RatFunc| {
        let mut g = XPoly::zero(1);
        for m in 0..=nmax {
            g = g.add(&x(m, a.pow(m as i64)));
        }
        g
    };
    let cut = |p: XPoly<RatFunc>| p.filter(|e| e[0] <= nmax as i16);
    let mut s_qt = XPoly::zero(1);
    for m in 0..=nmax {
        s_qt = s_qt.add(&x(m, gamma_qt_coeff(m)));
    }
    for n in 0..=nmax {
        let mut g = GammaRatio::new(T_OVER_Q);
        g.push(qm(1), qm(n as i64 + 1));
        let v = g.value()?;
        let c = ct(&s_qt, n);
        rep.check(c == v, || format!("Γ_qt n={}: {} vs {}", n, c, v));
    }
    for k in 1..=3i64 {
        let mut p = XPoly::one(1);
        for r in 0..k {
            p = cut(p.mul(&geom(&RatFunc::lmono(qm(r)))));
        }
        for n in 0..=nmax {
            let want = gamma_qt_coeff(n).subs_mono(crate::Var::T, qm(k))?;
            let c = ct(&p, n);
            rep.check(c == want, || format!("Γ_(q,q^{}) n={}: {} vs {}", k, n, c, want));
        }
    }
    let mut p = XPoly::one(1);
    for j in 0..=kq as i64 {
        p = cut(p.mul(&geom(&RatFunc::lmono(qm(j))))).try_map_coeffs(|c| c.truncate_q(2 * kq as i32))?;
    }
    for n in 0..=nmax {
        let c = ct(&p, n);
        let want = gamma_q_coeff(n).truncate_q(2 * kq as i32)?;
        rep.check(c == want, || format!("Γ_q n={}: {} vs {}", n, c, want));
    }
    for kap in 1..=3i64 {
        let mut p = XPoly::one(1);
        for _ in 0..kap {
            p = cut(p.mul(&geom(&RatFunc::one())));
        }
        for n in 0..=nmax {
            let want = gamma_kappa_coeff(n).subs_int(crate::Var::K, kap)?;
            let c = ct(&p, n);
            rep.check(c == want, || format!("Γ^(κ={}) n={}: {} vs {}", kap, n, c, want));
        }
    }
    for n in 0..=nmax {
        let mut g = KGammaRatio::default();
        g.push((n as i64, 1), (0, 1));
        let v = g.value()?.div(&RatFunc::from_bigint(factorial_big(n as i64)));
        rep.check(v == gamma_kappa_coeff(n), || format!("Γ(κ+{})/(Γ(κ){}!)", n, n));
    }
    Ok(rep)
}

/// Numeric degeneration check of Γ_{q,t}(x₀) → (1 − x₀)^{−κ} and
/// b_{(n)} → Γ(n+κ)/(Γ(n+1)Γ(κ)) under q = e^{−ħ}, t = e^{−κħ}. Errors must
/// shrink with ħ, with ratio 2 ± 0.2 between successive halvings (or vanish).
pub fn jack_limit_check(x0: f64, kappa: u32, hbars: &[f64]) -> Result<(Report, Vec<Vec<f64>>), Error> {
    let mut rep = Report::new("jack_limit").param("x0", x0).param("kappa", kappa);
    let target_gamma = -(kappa as f64) * (1.0 - x0).ln();
    let mut series: Vec<Vec<f64>> = vec![Vec::new(); 4];
    for &h in hbars {
        let q = (-h).exp();
        let t = (-(kappa as f64) * h).exp();
        let g = log_gamma_qt_f64(x0, q, t)?;
        let eg = (g.exp() - target_gamma.exp()).abs();
        series[0].push(eg);
        let qr = BigRational::from_float(q).ok_or_else(|| Error::Domain("q".into()))?;
        let tr = BigRational::from_float(t).ok_or_else(|| Error::Domain("t".into()))?;
        for n in 1..=3u32 {
            let b = gamma_qt_coeff(n).eval_rational(&[Some(qr.clone()), Some(tr.clone()), None, None])?;
            let b = b.to_f64().unwrap_or(f64::NAN);
            let target = (ln_gamma_int(n + kappa) - ln_gamma_int(n + 1) - ln_gamma_int(kappa)).exp();
            series[n as usize].push((b - target).abs());
        }
    }
    for s in &series {
        for w in s.windows(2) {
            let negligible = w[0] < 1e-11 && w[1] < 1e-11;
            let ratio = w[0] / w[1];
            rep.check(negligible || (ratio - 2.0).abs() <= 0.2, || format!("error ratio {} from {:?}", ratio, w));
        }
        if let Some(&last) = s.last() {
            rep.check(last < 1e-1, || format!("error {} not small", last));
        }
    }
    Ok((rep, series))
}

/// Rounds a non-negative big rational to f64 for diagnostics.
pub fn ratio_f64(r: &BigRational) -> f64 {
    let sign = if r.is_negative() { -1.0 } else { 1.0 };
    sign * r.abs().to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratfunc::{int, kappa, q, t};

    fn om(x: &RatFunc) -> RatFunc {
        int(1).sub(x)
    }

    #[test]
    fn euler_coefficients() {
        assert_eq!(gamma_qt_coeff(0), int(1));
        assert_eq!(gamma_qt_coeff(1), om(&t()).div(&om(&q())));
        let two = om(&t()).mul(&om(&t().mul(&q()))).div(&om(&q()).mul(&om(&q().pow(2))));
        assert_eq!(gamma_qt_coeff(2), two);
        assert_eq!(gamma_q_coeff(0), int(1));
        assert_eq!(gamma_q_coeff(1), om(&q()).inv());
        assert_eq!(gamma_q_coeff(2), om(&q()).mul(&om(&q().pow(2))).inv());
        assert_eq!(gamma_kappa_coeff(0), int(1));
        assert_eq!(gamma_kappa_coeff(1), kappa());
        assert_eq!(gamma_kappa_coeff(2), kappa().mul(&kappa().add(&int(1))).div(&int(2)));
        for n in 0..=8 {
            assert_eq!(gamma_q_coeff(n), gamma_qt_coeff(n).subs_zero(crate::Var::T).unwrap());
        }
    }

    #[test]
    fn finite_ratios() {
        let x: LMono = [0, 0, 0, 2];
        let xr = RatFunc::lmono(x);
        assert_eq!(gamma_qt_finite_ratio(x, 0).unwrap(), int(1));
        assert_eq!(gamma_qt_finite_ratio(x, 1).unwrap(), om(&xr).div(&om(&t().mul(&xr))));
        let xq = xr.div(&q());
        assert_eq!(gamma_qt_finite_ratio(x, -1).unwrap(), om(&t().mul(&xq)).div(&om(&xq)));
    }

    #[test]
    fn qpow_base_matches_ratio() {
        for m in -3i64..=3 {
            let x: LMono = [1, 0, 0, 2];
            let direct = gamma_at_qpow_base(x, m).unwrap();
            if m >= 0 {
                assert_eq!(direct.mul(&q_pochhammer(x, m as u32)), int(1));
            } else {
                assert_eq!(direct, q_pochhammer(lm_mul(x, qm(m)), (-m) as u32));
            }
        }
    }

    #[test]
    fn gamma_ratio_pairs_and_specializes() {
        let mut g = GammaRatio::new(T_OVER_Q);
        g.push(qtm(3, 1), qtm(1, 1));
        let v = g.value().unwrap();
        assert_eq!(v, finite_ratio(qtm(1, 1), 2, T_OVER_Q).unwrap());
        let mut h = GammaRatio::new(T_OVER_Q);
        h.push(qtm(1, 0), qtm(1, 1));
        assert!(matches!(h.value(), Err(Error::UnpairedGamma(_))));
        // at t = q: base is 1, Γ_{q,1} ≡ 1
        assert_eq!(h.specialize_t(1).unwrap(), int(1));
        // at t = q²: Γ_{q,q}(q)/Γ_{q,q}(q³) = (1 − q³)/(1 − q)
        let want = om(&q().pow(3)).div(&om(&q()));
        assert_eq!(h.specialize_t(2).unwrap(), want);
    }

    #[test]
    fn kgamma_values() {
        let mut g = KGammaRatio::default();
        g.push((3, 1), (1, 1));
        assert_eq!(g.value().unwrap(), kappa().add(&int(1)).mul(&kappa().add(&int(2))));
        let mut h = KGammaRatio::default();
        h.push((0, 2), (1, 0));
        assert!(h.value().is_err());
        assert_eq!(h.value_at(2).unwrap(), BigRational::from_integer(6.into()));
        let mut z = KGammaRatio::default();
        z.push((1, 0), (-1, 1));
        assert!(z.value_at(1).unwrap().is_zero());
    }

    #[test]
    fn theta_series_matches_triple_product() {
        for k in 0..=6 {
            let s = theta1_series(k).unwrap();
            assert_eq!(s.poly(), &theta1_triple_product(k), "K={}", k);
        }
        let s = theta1_series(1).unwrap();
        // q^1 coefficient is −(w³ − w⁻³)
        let c3 = s.coeff(&exps_from(&[3]));
        let cm3 = s.coeff(&exps_from(&[-3]));
        assert_eq!(c3, q().neg());
        assert_eq!(cm3, q());
        assert_eq!(s.coeff(&exps_from(&[1])), int(1));
        // odd under w ↦ w⁻¹
        assert_eq!(s.poly().invert_vars(), s.poly().neg());
    }

    #[test]
    fn reflection_identities() {
        for k in 1..=3 {
            for kq in [0, 3, 5] {
                let r = reflection_check(kq, k, false).unwrap();
                assert!(r.passed, "{}", r);
            }
        }
        let bad = reflection_check(3, 1, true).unwrap();
        assert!(!bad.passed);
        assert!(bad.witness.is_some());
        let r = reflection_q_check(5, 20, false).unwrap();
        assert!(r.passed, "{}", r);
        assert!(!reflection_q_check(5, 20, true).unwrap().passed);
    }

    #[test]
    fn euler_inversion_by_constant_term() {
        // ∫ x^{-n} Γ_{q,t}(x) = Γ_{q,tq^{-1}}(q)/Γ_{q,tq^{-1}}(q^{n+1})
        for n in 0..=6u32 {
            let mut g = GammaRatio::new(T_OVER_Q);
            g.push(qm(1), qm(n as i64 + 1));
            let mut s = XPoly::zero(1);
            for m in 0..=8u32 {
                s.add_term(exps_from(&[m as i64]), gamma_qt_coeff(m));
            }
            let ct = LaurentSeries::exact(s.mul_exps(&exps_from(&[-(n as i64)]))).constant_term();
            assert_eq!(ct, g.value().unwrap());
        }
    }

    #[test]
    fn euler_inversion_report() {
        let r = euler_inversion_check(6, 5).unwrap();
        assert!(r.passed, "{}", r);
    }

    #[test]
    fn jack_limit() {
        let (r, series) = jack_limit_check(0.5, 2, &[1e-2, 5e-3, 2.5e-3]).unwrap();
        assert!(r.passed, "{} {:?}", r, series);
        let (r1, _) = jack_limit_check(0.5, 1, &[1e-2, 5e-3]).unwrap();
        assert!(r1.passed, "{}", r1);
        let (r3, s3) = jack_limit_check(0.3, 3, &[1e-3]).unwrap();
        assert!(r3.passed);
        assert!(s3[1][0] < 1e-2);
    }
}
