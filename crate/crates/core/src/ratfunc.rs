//! Rational functions in the parameter letters with exponents on the
//! half-integer lattice.
//!
//! A value is kept in canonical form: numerator and denominator are coprime
//! polynomials with nonnegative exponents, and the graded-lex leading
//! coefficient of the denominator is positive. Structural equality is then
//! mathematical equality.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::gcd::gcd;
use crate::poly::{Mono, Poly, Var, NVARS};
use crate::Error;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

/// Signed half-unit exponent vector, used for Laurent monomials.
pub type LMono = [i32; NVARS];

fn split_laurent(terms: Vec<(LMono, BigInt)>) -> (Poly, Mono) {
    let mut lo = [0i32; NVARS];
    for (e, _) in &terms {
        for i in 0..NVARS {
            lo[i] = lo[i].min(e[i]);
        }
    }
    let shift = Mono::new([
        (-lo[0]) as u32,
        (-lo[1]) as u32,
        (-lo[2]) as u32,
        (-lo[3]) as u32,
    ]);
    let t = terms
        .into_iter()
        .map(|(e, c)| {
            let mut u = [0u32; NVARS];
            for i in 0..NVARS {
                u[i] = (e[i] - lo[i]) as u32;
            }
            (Mono::new(u), c)
        })
        .collect();
    (Poly::from_terms(t), shift)
}

impl RatFunc {
    pub fn zero() -> RatFunc {
        RatFunc { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> RatFunc {
        RatFunc { num: Poly::one(), den: Poly::one() }
    }

    pub fn from_int(c: i64) -> RatFunc {
        RatFunc { num: Poly::constant(c), den: Poly::one() }
    }

    pub fn from_bigint(c: BigInt) -> RatFunc {
        RatFunc { num: Poly::constant(c), den: Poly::one() }
    }

    pub fn from_ratio(r: &BigRational) -> RatFunc {
        RatFunc::new(Poly::constant(r.numer().clone()), Poly::constant(r.denom().clone()))
    }

    pub fn from_poly(p: Poly) -> RatFunc {
        RatFunc { num: p, den: Poly::one() }
    }

    /// The letter `v`.
    pub fn var(v: Var) -> RatFunc {
        RatFunc::from_poly(Poly::var(v))
    }

    /// Laurent monomial with half-unit exponents.
    pub fn lmono(e: LMono) -> RatFunc {
        let (p, shift) = split_laurent(vec![(e, BigInt::one())]);
        RatFunc::new(p, Poly::monomial(shift, BigInt::one()))
    }

    /// `v^n` for an integer `n`.
    pub fn var_pow(v: Var, n: i64) -> RatFunc {
        let mut e = [0; NVARS];
        e[v.index()] = 2 * n as i32;
        RatFunc::lmono(e)
    }

    /// `q^n`.
    pub fn q_pow(n: i64) -> RatFunc {
        RatFunc::var_pow(Var::Q, n)
    }

    /// Builds `num/den` and normalizes.
    pub fn new(num: Poly, den: Poly) -> RatFunc {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RatFunc::zero();
        }
        let (num, den) = if den.is_constant() || num.is_constant() || num.is_monomial() || den.is_monomial() {
            (num, den)
        } else {
            let g = gcd(&num, &den);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
            }
        };
        RatFunc::finish(num, den)
    }

    /// Normalizes integer content and sign of already coprime parts.
    fn finish(num: Poly, den: Poly) -> RatFunc {
        let c = num.content().gcd(&den.content());
        let (mut num, mut den) = if c.is_one() { (num, den) } else { (num.div_int(&c), den.div_int(&c)) };
        // drop common monomial content (gcd skips it for constants)
        let m = num.min_mono().min(den.min_mono());
        if !m.is_one() {
            num = num.div_mono(m);
            den = den.div_mono(m);
        }
        if den.grlex_lc().map(|c| c.is_negative()).unwrap_or(false) {
            num = num.neg();
            den = den.neg();
        }
        RatFunc { num, den }
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is an integer constant.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn inv(&self) -> RatFunc {
        assert!(!self.is_zero(), "inverse of zero");
        RatFunc::finish(self.den.clone(), self.num.clone())
    }

    pub fn checked_inv(&self) -> Result<RatFunc, Error> {
        if self.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(self.inv())
        }
    }

    pub fn add(&self, o: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            let n = self.num.add(&o.num);
            if n.is_zero() {
                return RatFunc::zero();
            }
            if self.den.is_one() {
                return RatFunc { num: n, den: Poly::one() };
            }
            return RatFunc::new(n, self.den.clone());
        }
        if self.den.is_one() {
            let n = self.num.mul(&o.den).add(&o.num);
            return RatFunc::finish(n, o.den.clone());
        }
        if o.den.is_one() {
            let n = o.num.mul(&self.den).add(&self.num);
            return RatFunc::finish(n, self.den.clone());
        }
        let g = gcd(&self.den, &o.den);
        let bd = self.den.div_exact(&g).expect("gcd divides");
        let dd = o.den.div_exact(&g).expect("gcd divides");
        let n = self.num.mul(&dd).add(&o.num.mul(&bd));
        if n.is_zero() {
            return RatFunc::zero();
        }
        let den = self.den.mul(&dd);
        if g.is_constant() {
            return RatFunc::finish(n, den);
        }
        let h = gcd(&n, &g);
        if h.is_one() {
            RatFunc::finish(n, den)
        } else {
            RatFunc::finish(n.div_exact(&h).expect("gcd divides"), den.div_exact(&h).expect("gcd divides"))
        }
    }

    pub fn sub(&self, o: &RatFunc) -> RatFunc {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &RatFunc) -> RatFunc {
        if self.is_zero() || o.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return RatFunc { num: self.num.mul(&o.num), den: Poly::one() };
        }
        let g1 = if self.num.is_constant() || o.den.is_constant() { Poly::one() } else { gcd(&self.num, &o.den) };
        let g2 = if o.num.is_constant() || self.den.is_constant() { Poly::one() } else { gcd(&o.num, &self.den) };
        let a = if g1.is_one() { self.num.clone() } else { self.num.div_exact(&g1).unwrap() };
        let d = if g1.is_one() { o.den.clone() } else { o.den.div_exact(&g1).unwrap() };
        let c = if g2.is_one() { o.num.clone() } else { o.num.div_exact(&g2).unwrap() };
        let b = if g2.is_one() { self.den.clone() } else { self.den.div_exact(&g2).unwrap() };
        RatFunc::finish(a.mul(&c), b.mul(&d))
    }

    pub fn div(&self, o: &RatFunc) -> RatFunc {
        self.mul(&o.inv())
    }

    pub fn checked_div(&self, o: &RatFunc) -> Result<RatFunc, Error> {
        Ok(self.mul(&o.checked_inv()?))
    }

    pub fn scale_int(&self, c: i64) -> RatFunc {
        self.mul(&RatFunc::from_int(c))
    }

    pub fn pow(&self, e: i64) -> RatFunc {
        if e < 0 {
            return self.inv().pow(-e);
        }
        RatFunc::finish(self.num.pow(e as u32), self.den.pow(e as u32))
    }

    /// Substitutes the Laurent monomial `target` for the letter `v`. The letter's
    /// half-unit exponents must pair with `target` to whole half-units.
    pub fn subs_mono(&self, v: Var, target: LMono) -> Result<RatFunc, Error> {
        let (n, sn) = subs_mono_poly(&self.num, v, target)?;
        let (d, sd) = subs_mono_poly(&self.den, v, target)?;
        if d.is_zero() {
            return Err(Error::Pole(format!("{} at {}", self, v.name())));
        }
        // n / sn divided by d / sd
        Ok(RatFunc::new(n.mul_mono(sd), d.mul_mono(sn)))
    }

    /// Sets the letter `v` to zero.
    pub fn subs_zero(&self, v: Var) -> Result<RatFunc, Error> {
        let i = v.index();
        let n = self.num.filter(|m| m.get(i) == 0);
        let d = self.den.filter(|m| m.get(i) == 0);
        if d.is_zero() {
            return Err(Error::Pole(format!("{} at {}=0", self, v.name())));
        }
        Ok(RatFunc::new(n, d))
    }

    /// Substitutes an integer for the letter `v` (integer exponents only).
    pub fn subs_int(&self, v: Var, x: i64) -> Result<RatFunc, Error> {
        let n = subs_int_poly(&self.num, v, x)?;
        let d = subs_int_poly(&self.den, v, x)?;
        if d.is_zero() {
            return Err(Error::Pole(format!("{} at {}={}", self, v.name(), x)));
        }
        Ok(RatFunc::new(n, d))
    }

    /// Substitutes a rational function for `v` (integer exponents only).
    pub fn subs(&self, v: Var, x: &RatFunc) -> Result<RatFunc, Error> {
        let n = subs_poly(&self.num, v, x)?;
        let d = subs_poly(&self.den, v, x)?;
        if d.is_zero() {
            return Err(Error::Pole(format!("{} at {}={}", self, v.name(), x)));
        }
        Ok(n.div(&d))
    }

    /// Exact evaluation at rational values of the letters that occur.
    pub fn eval_rational(&self, vals: &[Option<BigRational>; NVARS]) -> Result<BigRational, Error> {
        let n = eval_poly_rational(&self.num, vals)?;
        let d = eval_poly_rational(&self.den, vals)?;
        if d.is_zero() {
            return Err(Error::Pole(format!("{}", self)));
        }
        Ok(n / d)
    }

    pub fn uses_var(&self, v: Var) -> bool {
        self.num.uses_var(v.index()) || self.den.uses_var(v.index())
    }

    /// Laurent expansion in q, keeping exponents ≤ `order_half` half-units.
    /// Only the letter q may occur.
    pub fn truncate_q(&self, order_half: i32) -> Result<RatFunc, Error> {
        let terms = self.q_series(order_half)?;
        Ok(from_q_terms(&terms))
    }

    /// Laurent coefficients in q (half-unit exponent, coefficient) with
    /// exponents ≤ `order_half`.
    pub fn q_series(&self, order_half: i32) -> Result<Vec<(i32, BigRational)>, Error> {
        for v in [Var::T, Var::K, Var::U] {
            if self.uses_var(v) {
                return Err(Error::Domain(format!("q-series of {} involves {}", self, v.name())));
            }
        }
        let qi = Var::Q.index();
        let dlo = self.den.min_mono().get(qi) as i32;
        let nlo = self.num.min_mono().get(qi) as i32;
        // den = q^dlo * D with D(0) != 0
        let mut d: Vec<BigRational> = Vec::new();
        for (m, c) in self.den.terms() {
            let e = (m.get(qi) as i32 - dlo) as usize;
            if d.len() <= e {
                d.resize(e + 1, BigRational::zero());
            }
            d[e] = BigRational::from_integer(c.clone());
        }
        let mut n: Vec<BigRational> = Vec::new();
        for (m, c) in self.num.terms() {
            let e = (m.get(qi) as i32 - nlo) as usize;
            if n.len() <= e {
                n.resize(e + 1, BigRational::zero());
            }
            n[e] = BigRational::from_integer(c.clone());
        }
        let base = nlo - dlo;
        if base > order_half {
            return Ok(Vec::new());
        }
        let len = (order_half - base + 1) as usize;
        let d0inv = d[0].recip();
        let mut out: Vec<BigRational> = vec![BigRational::zero(); len];
        for k in 0..len {
            let mut acc = if k < n.len() { n[k].clone() } else { BigRational::zero() };
            for j in 1..d.len().min(k + 1) {
                if !d[j].is_zero() {
                    acc -= &d[j] * &out[k - j];
                }
            }
            out[k] = acc * &d0inv;
        }
        Ok(out
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (base + k as i32, c))
            .collect())
    }

    /// Total degree of numerator minus denominator in half-units (used by
    /// limit checks and diagnostics).
    pub fn degree_pair(&self) -> (u32, u32) {
        (self.num.total_degree(), self.den.total_degree())
    }

    /// `(1 - m)` for a Laurent monomial `m`.
    pub fn one_minus(e: LMono) -> RatFunc {
        RatFunc::one().sub(&RatFunc::lmono(e))
    }

    pub fn to_f64(&self, vals: &[Option<f64>; NVARS]) -> Result<f64, Error> {
        let n = eval_poly_f64(&self.num, vals)?;
        let d = eval_poly_f64(&self.den, vals)?;
        Ok(n / d)
    }
}

/// Builds a Laurent polynomial in q from half-unit exponent terms.
pub fn from_q_terms(terms: &[(i32, BigRational)]) -> RatFunc {
    let mut l = BigInt::one();
    for (_, c) in terms {
        l = l.lcm(c.denom());
    }
    let t: Vec<(LMono, BigInt)> = terms
        .iter()
        .map(|(e, c)| ([*e, 0, 0, 0], c.numer() * (&l / c.denom())))
        .collect();
    if t.is_empty() {
        return RatFunc::zero();
    }
    let (p, shift) = split_laurent(t);
    RatFunc::new(p, Poly::monomial(shift, l))
}

fn subs_mono_poly(p: &Poly, v: Var, target: LMono) -> Result<(Poly, Mono), Error> {
    let i = v.index();
    let mut terms = Vec::with_capacity(p.len());
    for (m, c) in p.terms() {
        let e = m.get(i) as i32;
        let mut x = [0i32; NVARS];
        for j in 0..NVARS {
            x[j] = if j == i { 0 } else { m.get(j) as i32 };
        }
        for j in 0..NVARS {
            let prod = e * target[j];
            if prod % 2 != 0 {
                return Err(Error::Domain(format!("{}^{}/2 does not fit the half lattice", v.name(), e)));
            }
            x[j] += prod / 2;
        }
        terms.push((x, c.clone()));
    }
    if terms.is_empty() {
        return Ok((Poly::zero(), Mono::ONE));
    }
    Ok(split_laurent(terms))
}

fn subs_int_poly(p: &Poly, v: Var, x: i64) -> Result<Poly, Error> {
    let i = v.index();
    let xb = BigInt::from(x);
    let mut terms = Vec::with_capacity(p.len());
    for (m, c) in p.terms() {
        let e = m.get(i);
        if e % 2 != 0 {
            return Err(Error::Domain(format!("half-integer power of {}", v.name())));
        }
        let rest = Mono(m.0 - (e as u64) * Mono::var(v, 1).0);
        terms.push((rest, c * num_traits::pow(xb.clone(), (e / 2) as usize)));
    }
    Ok(Poly::from_terms(terms))
}

fn subs_poly(p: &Poly, v: Var, x: &RatFunc) -> Result<RatFunc, Error> {
    let parts = p.to_univariate(v.index());
    let mut acc = RatFunc::zero();
    for (e, c) in parts.iter().enumerate().rev() {
        if e % 2 != 0 {
            if !c.is_zero() {
                return Err(Error::Domain(format!("half-integer power of {}", v.name())));
            }
            continue;
        }
        acc = acc.mul(x).add(&RatFunc::from_poly(c.clone()));
    }
    Ok(acc)
}

fn eval_poly_rational(p: &Poly, vals: &[Option<BigRational>; NVARS]) -> Result<BigRational, Error> {
    let mut acc = BigRational::zero();
    for (m, c) in p.terms() {
        let mut term = BigRational::from_integer(c.clone());
        for i in 0..NVARS {
            let e = m.get(i);
            if e == 0 {
                continue;
            }
            if e % 2 != 0 {
                return Err(Error::Domain("half-integer power in rational evaluation".into()));
            }
            let v = vals[i]
                .as_ref()
                .ok_or_else(|| Error::Domain(format!("no value for {}", Var::ALL[i].name())))?;
            term *= num_traits::pow(v.clone(), (e / 2) as usize);
        }
        acc += term;
    }
    Ok(acc)
}

fn eval_poly_f64(p: &Poly, vals: &[Option<f64>; NVARS]) -> Result<f64, Error> {
    let mut acc = 0.0;
    for (m, c) in p.terms() {
        let mut term = c.to_f64().unwrap_or(f64::NAN);
        for i in 0..NVARS {
            let e = m.get(i);
            if e == 0 {
                continue;
            }
            let v = vals[i].ok_or_else(|| Error::Domain(format!("no value for {}", Var::ALL[i].name())))?;
            term *= v.powf(e as f64 / 2.0);
        }
        acc += term;
    }
    Ok(acc)
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else if self.num.len() == 1 {
            write!(f, "{}/({})", self.num, self.den)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Default for RatFunc {
    fn default() -> Self {
        RatFunc::zero()
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl<'a> $tr<&'a RatFunc> for &'a RatFunc {
            type Output = RatFunc;
            fn $m(self, o: &'a RatFunc) -> RatFunc {
                RatFunc::$f(self, o)
            }
        }
    };
}

forward_binop!(Add, add, add);
forward_binop!(Sub, sub, sub);
forward_binop!(Mul, mul, mul);
forward_binop!(Div, div, div);

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc::neg(self)
    }
}

/// Shorthands for the common letters.
pub fn q() -> RatFunc {
    RatFunc::var(Var::Q)
}

pub fn t() -> RatFunc {
    RatFunc::var(Var::T)
}

pub fn kappa() -> RatFunc {
    RatFunc::var(Var::K)
}

pub fn int(c: i64) -> RatFunc {
    RatFunc::from_int(c)
}

/// `q^a t^b` with integer exponents.
pub fn qt(a: i64, b: i64) -> RatFunc {
    RatFunc::lmono([2 * a as i32, 2 * b as i32, 0, 0])
}
