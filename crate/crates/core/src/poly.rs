//! Sparse multivariate polynomials over ℤ in the parameter letters q, t, κ and
//! an auxiliary letter u.
//!
//! Exponents are stored in half-units so that q^{1/2} and t^{1/2} are ordinary
//! monomials. Four 16-bit fields are packed into a `u64` with q in the high bits,
//! so integer comparison of packed monomials is the lexicographic order
//! q > t > κ > u.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub const NVARS: usize = 4;

/// Parameter letters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Q = 0,
    T = 1,
    K = 2,
    U = 3,
}

impl Var {
    pub const ALL: [Var; NVARS] = [Var::Q, Var::T, Var::K, Var::U];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::Q => "q",
            Var::T => "t",
            Var::K => "k",
            Var::U => "u",
        }
    }
}

const SHIFT: [u32; NVARS] = [48, 32, 16, 0];
const FIELD: u64 = 0xffff;

/// Packed exponent vector (half-units).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mono(pub u64);

impl Mono {
    pub const ONE: Mono = Mono(0);

    pub fn new(e: [u32; NVARS]) -> Mono {
        let mut m = 0u64;
        for (i, &x) in e.iter().enumerate() {
            assert!(x <= FIELD as u32, "exponent overflow");
            m |= (x as u64) << SHIFT[i];
        }
        Mono(m)
    }

    /// Monomial `v^(half/2)`.
    pub fn var(v: Var, half: u32) -> Mono {
        let mut e = [0; NVARS];
        e[v.index()] = half;
        Mono::new(e)
    }

    #[inline]
    pub fn get(self, i: usize) -> u32 {
        ((self.0 >> SHIFT[i]) & FIELD) as u32
    }

    pub fn exps(self) -> [u32; NVARS] {
        [self.get(0), self.get(1), self.get(2), self.get(3)]
    }

    #[inline]
    pub fn mul(self, o: Mono) -> Mono {
        debug_assert!((0..NVARS).all(|i| self.get(i) + o.get(i) <= FIELD as u32));
        Mono(self.0 + o.0)
    }

    pub fn divides(self, o: Mono) -> bool {
        (0..NVARS).all(|i| self.get(i) <= o.get(i))
    }

    /// `o / self`, assuming divisibility.
    #[inline]
    pub fn div_of(self, o: Mono) -> Mono {
        Mono(o.0 - self.0)
    }

    pub fn min(self, o: Mono) -> Mono {
        let mut e = [0; NVARS];
        for (i, x) in e.iter_mut().enumerate() {
            *x = self.get(i).min(o.get(i));
        }
        Mono::new(e)
    }

    pub fn degree(self) -> u32 {
        (0..NVARS).map(|i| self.get(i)).sum()
    }

    pub fn is_one(self) -> bool {
        self.0 == 0
    }

    /// Graded-lex comparison.
    pub fn cmp_grlex(self, o: Mono) -> Ordering {
        self.degree().cmp(&o.degree()).then(self.0.cmp(&o.0))
    }
}

/// A polynomial as a list of terms sorted by decreasing lex monomial, with
/// nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: Vec<(Mono, BigInt)>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly::constant(BigInt::one())
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Poly {
        Poly::monomial(Mono::ONE, c.into())
    }

    pub fn monomial(m: Mono, c: BigInt) -> Poly {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    /// The letter `v` to the first power.
    pub fn var(v: Var) -> Poly {
        Poly::monomial(Mono::var(v, 2), BigInt::one())
    }

    /// Builds a polynomial from arbitrary (possibly repeated) terms.
    pub fn from_terms(mut t: Vec<(Mono, BigInt)>) -> Poly {
        t.sort_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(Mono, BigInt)> = Vec::with_capacity(t.len());
        for (m, c) in t {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 += c,
                _ => {
                    if let Some(last) = out.last() {
                        if last.1.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if let Some(last) = out.last() {
            if last.1.is_zero() {
                out.pop();
            }
        }
        Poly { terms: out }
    }

    fn from_sorted(terms: Vec<(Mono, BigInt)>) -> Poly {
        Poly { terms }
    }

    pub fn terms(&self) -> &[(Mono, BigInt)] {
        &self.terms
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

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn constant_value(&self) -> Option<BigInt> {
        if self.terms.is_empty() {
            Some(BigInt::zero())
        } else if self.is_constant() {
            Some(self.terms[0].1.clone())
        } else {
            None
        }
    }

    /// Coefficient at the constant monomial (value at the origin).
    pub fn constant_coeff(&self) -> BigInt {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => BigInt::zero(),
        }
    }

    pub fn coeff(&self, m: Mono) -> BigInt {
        match self.terms.binary_search_by(|p| m.cmp(&p.0)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    /// Lex-leading term.
    pub fn lt(&self) -> Option<&(Mono, BigInt)> {
        self.terms.first()
    }

    /// Coefficient of the graded-lex leading monomial.
    pub fn grlex_lc(&self) -> Option<&BigInt> {
        self.terms
            .iter()
            .max_by(|a, b| a.0.cmp_grlex(b.0))
            .map(|p| &p.1)
    }

    pub fn neg(&self) -> Poly {
        Poly::from_sorted(self.terms.iter().map(|(m, c)| (*m, -c)).collect())
    }

    pub fn add(&self, o: &Poly) -> Poly {
        self.merge(o, false)
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.merge(o, true)
    }

    fn merge(&self, o: &Poly, negate: bool) -> Poly {
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &o.terms;
        while i < a.len() || j < b.len() {
            let ord = if i == a.len() {
                Ordering::Less
            } else if j == b.len() {
                Ordering::Greater
            } else {
                a[i].0.cmp(&b[j].0)
            };
            match ord {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Poly::from_sorted(out)
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::from_sorted(self.terms.iter().map(|(m, x)| (*m, x * c)).collect())
    }

    pub fn mul_mono(&self, m: Mono) -> Poly {
        Poly::from_sorted(self.terms.iter().map(|(x, c)| (x.mul(m), c.clone())).collect())
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        if o.terms.len() == 1 {
            let (m, c) = &o.terms[0];
            return Poly::from_sorted(self.terms.iter().map(|(x, d)| (x.mul(*m), d * c)).collect());
        }
        if self.terms.len() == 1 {
            return o.mul(self);
        }
        let mut acc: HashMap<u64, BigInt> = HashMap::with_capacity(self.terms.len() * o.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                let m = ma.mul(*mb).0;
                let p = ca * cb;
                match acc.get_mut(&m) {
                    Some(v) => *v += p,
                    None => {
                        acc.insert(m, p);
                    }
                }
            }
        }
        let mut t: Vec<(Mono, BigInt)> = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (Mono(m), c))
            .collect();
        t.sort_by(|a, b| b.0.cmp(&a.0));
        Poly::from_sorted(t)
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut r = Poly::one();
        let mut b = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                r = r.mul(&b);
            }
            e >>= 1;
            if e > 0 {
                b = b.mul(&b);
            }
        }
        r
    }

    /// Nonnegative gcd of the integer coefficients.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn div_int(&self, c: &BigInt) -> Poly {
        Poly::from_sorted(self.terms.iter().map(|(m, x)| (*m, x / c)).collect())
    }

    /// Primitive part with positive lex-leading coefficient.
    pub fn primitive(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut c = self.content();
        if self.terms[0].1.is_negative() {
            c = -c;
        }
        if c.is_one() {
            self.clone()
        } else {
            self.div_int(&c)
        }
    }

    pub fn max_norm(&self) -> BigInt {
        self.terms.iter().map(|(_, c)| c.abs()).max().unwrap_or_else(BigInt::zero)
    }

    /// Componentwise minimum exponent over all terms.
    pub fn min_mono(&self) -> Mono {
        let mut it = self.terms.iter();
        let mut m = match it.next() {
            Some((m, _)) => *m,
            None => return Mono::ONE,
        };
        for (x, _) in it {
            m = m.min(*x);
        }
        m
    }

    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.get(i)).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    pub fn uses_var(&self, i: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.get(i) != 0)
    }

    /// Divides by a monomial, assuming divisibility.
    pub fn div_mono(&self, m: Mono) -> Poly {
        Poly::from_sorted(self.terms.iter().map(|(x, c)| (m.div_of(*x), c.clone())).collect())
    }

    /// Exact division; `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Poly::zero());
        }
        if d.terms.len() == 1 {
            let (dm, dc) = &d.terms[0];
            let mut out = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                if !dm.divides(*m) {
                    return None;
                }
                let (q, r) = c.div_rem(dc);
                if !r.is_zero() {
                    return None;
                }
                out.push((dm.div_of(*m), q));
            }
            return Some(Poly::from_sorted(out));
        }
        let (dm, dc) = d.terms[0].clone();
        let mut rem: std::collections::BTreeMap<Mono, BigInt> = self.terms.iter().cloned().collect();
        let mut quot = Vec::new();
        while let Some((&m, _)) = rem.iter().next_back() {
            let c = rem.remove(&m).unwrap();
            if !dm.divides(m) {
                return None;
            }
            let (qc, r) = c.div_rem(&dc);
            if !r.is_zero() {
                return None;
            }
            let qm = dm.div_of(m);
            for (tm, tc) in d.terms.iter().skip(1) {
                let key = tm.mul(qm);
                let v = tc * &qc;
                let e = rem.entry(key).or_insert_with(BigInt::zero);
                *e -= v;
                if e.is_zero() {
                    rem.remove(&key);
                }
            }
            quot.push((qm, qc));
            if quot.len() > 1_000_000 {
                return None;
            }
        }
        Some(Poly::from_sorted(quot))
    }

    /// Applies `f` to every exponent vector; the map must be injective.
    pub fn map_monos<F: Fn(Mono) -> Mono>(&self, f: F) -> Poly {
        Poly::from_terms(self.terms.iter().map(|(m, c)| (f(*m), c.clone())).collect())
    }

    /// Splits into coefficients of powers of letter `i` (in the stored exponent
    /// units): index `e` holds the coefficient of `v^e`.
    pub fn to_univariate(&self, i: usize) -> Vec<Poly> {
        let deg = self.degree_in(i) as usize;
        let mut parts: Vec<Vec<(Mono, BigInt)>> = vec![Vec::new(); deg + 1];
        let strip = Mono::var(Var::ALL[i], 1);
        for (m, c) in &self.terms {
            let e = m.get(i);
            let rest = Mono(m.0 - (e as u64) * strip.0);
            parts[e as usize].push((rest, c.clone()));
        }
        parts.into_iter().map(Poly::from_terms).collect()
    }

    pub fn from_univariate(i: usize, coeffs: &[Poly]) -> Poly {
        let strip = Mono::var(Var::ALL[i], 1);
        let mut t = Vec::new();
        for (e, c) in coeffs.iter().enumerate() {
            for (m, x) in c.terms() {
                t.push((Mono(m.0 + (e as u64) * strip.0), x.clone()));
            }
        }
        Poly::from_terms(t)
    }

    /// Substitutes the integer `x` for letter `i` (stored exponent units).
    pub fn eval_int(&self, i: usize, x: &BigInt) -> Poly {
        let parts = self.to_univariate(i);
        let mut acc = Poly::zero();
        for c in parts.iter().rev() {
            acc = acc.scale(x).add(c);
        }
        acc
    }

    /// Coefficientwise symmetric remainder modulo `m`.
    pub fn smod(&self, m: &BigInt) -> Poly {
        let half = m >> 1usize;
        Poly::from_terms(
            self.terms
                .iter()
                .map(|(x, c)| {
                    let mut r = c.mod_floor(m);
                    if r > half {
                        r -= m;
                    }
                    (*x, r)
                })
                .collect(),
        )
    }

    /// Keeps only the terms satisfying the predicate.
    pub fn filter<F: Fn(Mono) -> bool>(&self, f: F) -> Poly {
        Poly::from_sorted(self.terms.iter().filter(|(m, _)| f(*m)).cloned().collect())
    }
}

fn fmt_exp(half: u32) -> String {
    if half % 2 == 0 {
        format!("{}", half / 2)
    } else {
        format!("({}/2)", half)
    }
}

pub(crate) fn fmt_mono(m: Mono) -> String {
    let mut parts = Vec::new();
    for v in Var::ALL {
        let e = m.get(v.index());
        if e == 0 {
            continue;
        }
        if e == 2 {
            parts.push(v.name().to_string());
        } else {
            parts.push(format!("{}^{}", v.name(), fmt_exp(e)));
        }
    }
    parts.join("*")
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut t: Vec<&(Mono, BigInt)> = self.terms.iter().collect();
        t.sort_by(|a, b| a.0.cmp_grlex(b.0));
        for (k, (m, c)) in t.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            if m.is_one() {
                write!(f, "{}", a)?;
            } else if a.is_one() {
                write!(f, "{}", fmt_mono(*m))?;
            } else {
                write!(f, "{}*{}", a, fmt_mono(*m))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Poly {
        Poly::var(Var::Q)
    }
    fn t() -> Poly {
        Poly::var(Var::T)
    }

    #[test]
    fn arithmetic() {
        let a = Poly::one().sub(&q());
        let b = Poly::one().add(&q());
        let p = a.mul(&b);
        assert_eq!(p, Poly::one().sub(&q().pow(2)));
        assert_eq!(p.div_exact(&a).unwrap(), b);
        assert!(p.div_exact(&t()).is_none());
    }

    #[test]
    fn multivariate_division() {
        let a = q().add(&t()).pow(3);
        let b = q().sub(&t().mul(&q())).add(&Poly::constant(3));
        let p = a.mul(&b);
        assert_eq!(p.div_exact(&b).unwrap(), a);
        assert_eq!(p.div_exact(&a).unwrap(), b);
        assert!(p.add(&Poly::one()).div_exact(&a).is_none());
    }

    #[test]
    fn univariate_split() {
        let p = q().mul(&t()).add(&t().pow(2)).add(&Poly::constant(5));
        let parts = p.to_univariate(Var::T.index());
        assert_eq!(Poly::from_univariate(Var::T.index(), &parts), p);
        assert_eq!(p.eval_int(Var::Q.index(), &BigInt::from(0)), t().pow(2).add(&Poly::constant(5)));
    }
}
