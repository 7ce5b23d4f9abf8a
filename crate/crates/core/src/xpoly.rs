//! Polynomials and Laurent polynomials in the variables x₁..x_n with
//! coefficients in a ring of parameters.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;

use crate::poly::Poly;
use crate::ratfunc::{LMono, RatFunc};
use crate::Error;

/// Maximum number of x-variables.
pub const MAXVARS: usize = 8;

/// Signed exponent vector. Array order is lex order with x₁ most significant.
pub type Exps = [i16; MAXVARS];

/// Coefficient ring interface.
pub trait Coef: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(c: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplication by a monomial in the parameter letters.
    fn mul_lmono(&self, e: LMono) -> Self;
}

impl Coef for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn from_int(c: i64) -> Self {
        RatFunc::from_int(c)
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        RatFunc::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        RatFunc::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        RatFunc::mul(self, o)
    }
    fn neg(&self) -> Self {
        RatFunc::neg(self)
    }
    fn mul_lmono(&self, e: LMono) -> Self {
        if e == [0; 4] {
            return self.clone();
        }
        RatFunc::mul(self, &RatFunc::lmono(e))
    }
}

impl Coef for Poly {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn from_int(c: i64) -> Self {
        Poly::constant(c)
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        Poly::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        Poly::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        Poly::mul(self, o)
    }
    fn neg(&self) -> Self {
        Poly::neg(self)
    }
    fn mul_lmono(&self, e: LMono) -> Self {
        assert!(e.iter().all(|&x| x >= 0), "negative exponent on a polynomial coefficient");
        let m = crate::poly::Mono::new([e[0] as u32, e[1] as u32, e[2] as u32, e[3] as u32]);
        self.mul_mono(m)
    }
}

/// A (Laurent) polynomial in `n` variables.
#[derive(Clone, PartialEq)]
pub struct XPoly<C: Coef> {
    n: usize,
    terms: BTreeMap<Exps, C>,
}

pub fn exps_from(v: &[i64]) -> Exps {
    let mut e = [0i16; MAXVARS];
    for (i, &x) in v.iter().enumerate() {
        e[i] = x as i16;
    }
    e
}

impl<C: Coef> XPoly<C> {
    pub fn zero(n: usize) -> Self {
        assert!(n <= MAXVARS);
        XPoly { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        XPoly::constant(n, C::one())
    }

    pub fn constant(n: usize, c: C) -> Self {
        XPoly::monomial(n, [0; MAXVARS], c)
    }

    pub fn monomial(n: usize, e: Exps, c: C) -> Self {
        let mut p = XPoly::zero(n);
        if !c.is_zero() {
            p.terms.insert(e, c);
        }
        p
    }

    /// The variable xᵢ (0-based).
    pub fn var(n: usize, i: usize) -> Self {
        let mut e = [0; MAXVARS];
        e[i] = 1;
        XPoly::monomial(n, e, C::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (Exps, C)>>(n: usize, it: I) -> Self {
        let mut p = XPoly::zero(n);
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &C)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &Exps) -> C {
        self.terms.get(e).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, e: Exps, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v = v.add(&c);
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(*e, c.clone());
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(*e, c.neg());
        }
        r
    }

    pub fn neg(&self) -> Self {
        XPoly { n: self.n, terms: self.terms.iter().map(|(e, c)| (*e, c.neg())).collect() }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return XPoly::zero(self.n);
        }
        XPoly::from_terms(self.n, self.terms.iter().map(|(e, x)| (*e, x.mul(c))))
    }

    pub fn mul(&self, o: &Self) -> Self {
        let n = self.n.max(o.n);
        let mut acc: HashMap<Exps, C> = HashMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &o.terms {
                let mut e = *ea;
                for i in 0..MAXVARS {
                    e[i] += eb[i];
                }
                let c = ca.mul(cb);
                match acc.get_mut(&e) {
                    Some(v) => *v = v.add(&c),
                    None => {
                        acc.insert(e, c);
                    }
                }
            }
        }
        XPoly { n, terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut r = XPoly::one(self.n);
        for _ in 0..k {
            r = r.mul(self);
        }
        r
    }

    /// Multiplies by the monomial x^e.
    pub fn mul_exps(&self, e: &Exps) -> Self {
        XPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(f, c)| {
                    let mut g = *f;
                    for i in 0..MAXVARS {
                        g[i] += e[i];
                    }
                    (g, c.clone())
                })
                .collect(),
        }
    }

    /// Applies a term-wise map that is injective on exponents.
    pub fn map_terms<F: Fn(&Exps, &C) -> (Exps, C)>(&self, f: F) -> Self {
        XPoly::from_terms(self.n, self.terms.iter().map(|(e, c)| f(e, c)))
    }

    pub fn map_coeffs<D: Coef, F: Fn(&C) -> D>(&self, f: F) -> XPoly<D> {
        XPoly::from_terms(self.n, self.terms.iter().map(|(e, c)| (*e, f(c))))
    }

    pub fn try_map_coeffs<D: Coef, F: Fn(&C) -> Result<D, Error>>(&self, f: F) -> Result<XPoly<D>, Error> {
        let mut out = XPoly::zero(self.n);
        for (e, c) in &self.terms {
            out.add_term(*e, f(c)?);
        }
        Ok(out)
    }

    /// The shift T_{s,xᵢ} for each i in `vars`: x^e ↦ s^{Σ e_i} x^e where `s` is a
    /// parameter monomial.
    pub fn shift(&self, vars: &[usize], s: LMono) -> Self {
        self.map_terms(|e, c| {
            let k: i32 = vars.iter().map(|&i| e[i] as i32).sum();
            (*e, c.mul_lmono([s[0] * k, s[1] * k, s[2] * k, s[3] * k]))
        })
    }

    /// T_{q,xᵢ}.
    pub fn q_shift(&self, i: usize) -> Result<Self, Error> {
        if i >= self.n {
            return Err(Error::IndexOutOfRange { index: i, len: self.n });
        }
        Ok(self.shift(&[i], [2, 0, 0, 0]))
    }

    /// Re-indexes variables: variable i goes to position `map[i]` in a ring
    /// of `n` variables.
    pub fn embed(&self, n: usize, map: &[usize]) -> Self {
        XPoly::from_terms(
            n,
            self.terms.iter().map(|(e, c)| {
                let mut f = [0i16; MAXVARS];
                for i in 0..self.n {
                    f[map[i]] += e[i];
                }
                (f, c.clone())
            }),
        )
    }

    /// Substitutes xᵢ ↦ xᵢ⁻¹ for every variable.
    pub fn invert_vars(&self) -> Self {
        self.map_terms(|e, c| {
            let mut f = *e;
            for x in f.iter_mut() {
                *x = -*x;
            }
            (f, c.clone())
        })
    }

    pub fn total_degree(&self) -> i64 {
        self.terms.keys().map(|e| e.iter().map(|&x| x as i64).sum::<i64>()).max().unwrap_or(0)
    }

    pub fn leading(&self) -> Option<(&Exps, &C)> {
        self.terms.iter().next_back()
    }

    /// Exact division by `d`, whose lex-leading coefficient must be ±1.
    pub fn div_exact(&self, d: &Self) -> Result<Self, Error> {
        let (de, dc) = d.leading().ok_or(Error::DivisionByZero)?;
        let sign = if *dc == C::one() {
            C::one()
        } else if *dc == C::one().neg() {
            C::one().neg()
        } else {
            return Err(Error::Domain("divisor leading coefficient must be a unit".into()));
        };
        let de = *de;
        let mut r = self.clone();
        let mut quo = XPoly::zero(self.n);
        while let Some((re, rc)) = r.leading() {
            let mut e = [0i16; MAXVARS];
            for i in 0..MAXVARS {
                e[i] = re[i] - de[i];
                if e[i] < 0 {
                    return Err(Error::NonzeroRemainder);
                }
            }
            let c = rc.mul(&sign);
            for (fe, fc) in &d.terms {
                let mut g = *fe;
                for i in 0..MAXVARS {
                    g[i] += e[i];
                }
                r.add_term(g, fc.mul(&c).neg());
            }
            quo.add_term(e, c);
        }
        Ok(quo)
    }

    /// Sums coefficients of terms whose exponent satisfies `keep`.
    pub fn filter<F: Fn(&Exps) -> bool>(&self, keep: F) -> Self {
        XPoly { n: self.n, terms: self.terms.iter().filter(|(e, _)| keep(e)).map(|(e, c)| (*e, c.clone())).collect() }
    }

    pub fn into_terms(self) -> BTreeMap<Exps, C> {
        self.terms
    }
}

impl XPoly<RatFunc> {
    /// Evaluates at xᵢ = parameter monomials.
    pub fn eval_lmono(&self, pts: &[LMono]) -> RatFunc {
        let mut acc = RatFunc::zero();
        for (e, c) in &self.terms {
            let mut m = [0i32; 4];
            for i in 0..self.n {
                for k in 0..4 {
                    m[k] += pts[i][k] * e[i] as i32;
                }
            }
            acc = acc.add(&c.mul(&RatFunc::lmono(m)));
        }
        acc
    }

    /// Common denominator of all coefficients and the numerator polynomial
    /// with coefficients in ℤ[params].
    pub fn clear_denominators(&self) -> (XPoly<Poly>, Poly) {
        let mut l = Poly::one();
        for c in self.terms.values() {
            l = crate::gcd::lcm(&l, c.denom());
        }
        let p = XPoly::from_terms(
            self.n,
            self.terms.iter().map(|(e, c)| {
                let f = l.div_exact(c.denom()).expect("lcm divisible");
                (*e, c.numer().mul(&f))
            }),
        );
        (p, l)
    }
}

impl XPoly<Poly> {
    pub fn to_ratfunc(&self) -> XPoly<RatFunc> {
        self.map_coeffs(|c| RatFunc::from_poly(c.clone()))
    }
}

/// ∏_{i<j}(xᵢ − xⱼ).
pub fn vandermonde<C: Coef>(n: usize) -> XPoly<C> {
    let mut v = XPoly::one(n);
    for i in 0..n {
        for j in i + 1..n {
            v = v.mul(&XPoly::var(n, i).sub(&XPoly::var(n, j)));
        }
    }
    v
}

fn fmt_exps(f: &mut fmt::Formatter<'_>, e: &Exps, n: usize) -> fmt::Result {
    let mut first = true;
    for (i, &x) in e.iter().take(n).enumerate() {
        if x == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        if x == 1 {
            write!(f, "x{}", i + 1)?;
        } else {
            write!(f, "x{}^{}", i + 1, x)?;
        }
    }
    if first {
        write!(f, "1")?;
    }
    Ok(())
}

impl<C: Coef> fmt::Display for XPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({})*", c)?;
            fmt_exps(f, e, self.n)?;
        }
        Ok(())
    }
}

impl<C: Coef> fmt::Debug for XPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Integer-coefficient helper used by combinatorial expansions.
pub fn int_coef<C: Coef>(c: &BigInt) -> C {
    use num_traits::ToPrimitive;
    match c.to_i64() {
        Some(v) => C::from_int(v),
        None => {
            let s = c.to_string();
            let mut acc = C::zero();
            let ten = C::from_int(10);
            let neg = s.starts_with('-');
            for ch in s.trim_start_matches('-').chars() {
                acc = acc.mul(&ten).add(&C::from_int(ch.to_digit(10).unwrap() as i64));
            }
            if neg {
                acc.neg()
            } else {
                acc
            }
        }
    }
}
