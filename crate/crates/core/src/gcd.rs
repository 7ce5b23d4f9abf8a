//! Multivariate gcd over ℤ.
//!
//! Heuristic gcd (evaluation at a large integer, recursive gcd of the images,
//! ξ-adic reconstruction and a trial division) with a primitive PRS fallback.
//! Before either runs, the monomial content and the integer content are split
//! off and every letter is deflated by the gcd of its exponents, so q^{1/2}
//! inputs cost the same as integer-lattice ones.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

use crate::poly::{Mono, Poly, NVARS};

/// Greatest common divisor, normalized to positive lex-leading coefficient.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.normalize_sign();
    }
    if b.is_zero() {
        return a.normalize_sign();
    }
    if a == b {
        return a.normalize_sign();
    }
    if a.is_constant() || b.is_constant() {
        let c = a.content().gcd(&b.content());
        return Poly::constant(c);
    }
    let ma = a.min_mono();
    let mb = b.min_mono();
    let m = ma.min(mb);
    let a1 = if ma.is_one() { a.clone() } else { a.div_mono(ma) };
    let b1 = if mb.is_one() { b.clone() } else { b.div_mono(mb) };
    let ca = a1.content();
    let cb = b1.content();
    let c = ca.gcd(&cb);
    let a2 = a1.div_int(&ca);
    let b2 = b1.div_int(&cb);

    let mut defl = [0u32; NVARS];
    for (i, d) in defl.iter_mut().enumerate() {
        let mut g = 0u32;
        for (mm, _) in a2.terms().iter().chain(b2.terms().iter()) {
            g = g.gcd(&mm.get(i));
        }
        *d = g.max(1);
    }
    let deflate = |p: &Poly| {
        if defl.iter().all(|&d| d == 1) {
            p.clone()
        } else {
            p.map_monos(|mm| {
                let mut e = mm.exps();
                for i in 0..NVARS {
                    e[i] /= defl[i];
                }
                Mono::new(e)
            })
        }
    };
    let g = gcd_primitive(&deflate(&a2), &deflate(&b2));
    let g = if defl.iter().all(|&d| d == 1) {
        g
    } else {
        g.map_monos(|mm| {
            let mut e = mm.exps();
            for i in 0..NVARS {
                e[i] *= defl[i];
            }
            Mono::new(e)
        })
    };
    g.scale(&c).mul_mono(m).normalize_sign()
}

impl Poly {
    /// Multiplies by −1 if the lex-leading coefficient is negative.
    pub fn normalize_sign(&self) -> Poly {
        match self.lt() {
            Some((_, c)) if c.is_negative() => self.neg(),
            _ => self.clone(),
        }
    }
}

fn gcd_general(a: &Poly, b: &Poly) -> Poly {
    gcd(a, b)
}

/// Gcd of two primitive polynomials without monomial content.
fn gcd_primitive(a: &Poly, b: &Poly) -> Poly {
    if a.is_constant() || b.is_constant() {
        return Poly::one();
    }
    // Letters present in only one operand: replace that operand by its content
    // with respect to those letters.
    let mut a = a.clone();
    let mut b = b.clone();
    for i in 0..NVARS {
        let ua = a.uses_var(i);
        let ub = b.uses_var(i);
        if ua && !ub {
            a = content_in(&a, i);
        } else if ub && !ua {
            b = content_in(&b, i);
        }
        if a.is_constant() || b.is_constant() {
            return Poly::one();
        }
    }
    if a == b {
        return a.primitive();
    }
    if let Some(g) = heuristic(&a, &b) {
        return g;
    }
    prs(&a, &b)
}

/// Gcd of the coefficients of `p` viewed as a polynomial in letter `i`.
fn content_in(p: &Poly, i: usize) -> Poly {
    let parts = p.to_univariate(i);
    let mut g = Poly::zero();
    for c in parts.iter().filter(|c| !c.is_zero()) {
        g = if g.is_zero() { c.normalize_sign() } else { gcd_general(&g, c) };
        if g.is_one() {
            break;
        }
    }
    g
}

fn heuristic(a: &Poly, b: &Poly) -> Option<Poly> {
    // choose the main letter with the largest degree
    let var = (0..NVARS)
        .filter(|&i| a.uses_var(i))
        .max_by_key(|&i| a.degree_in(i).max(b.degree_in(i)))?;
    let deg = a.degree_in(var).max(b.degree_in(var)) as u64;
    let na = a.max_norm();
    let nb = b.max_norm();
    let mut xi: BigInt = na.min(nb) * 2 + 29;
    for _ in 0..6 {
        if xi.bits() * deg > 400_000 {
            return None;
        }
        let ea = a.eval_int(var, &xi);
        let eb = b.eval_int(var, &xi);
        if ea.is_zero() || eb.is_zero() {
            xi = &xi * 73794 / 27011;
            continue;
        }
        let g = gcd(&ea, &eb);
        // ξ-adic reconstruction
        let mut coeffs = Vec::new();
        let mut h = g;
        while !h.is_zero() {
            let c = h.smod(&xi);
            h = h.sub(&c).div_int(&xi);
            coeffs.push(c);
            if coeffs.len() as u64 > deg + 1 {
                break;
            }
        }
        if h.is_zero() {
            let cand = Poly::from_univariate(var, &coeffs).primitive();
            if cand.is_constant() {
                // ξ exceeds twice the smaller norm, so a constant image
                // reconstruction certifies coprimality
                return Some(Poly::one());
            }
            if cand.degree_in(var) <= deg as u32
                && a.div_exact(&cand).is_some()
                && b.div_exact(&cand).is_some()
            {
                return Some(cand);
            }
        }
        xi = &xi * 73794 / 27011;
    }
    None
}

/// Primitive polynomial remainder sequence in the letter of highest degree.
fn prs(a: &Poly, b: &Poly) -> Poly {
    let var = (0..NVARS)
        .filter(|&i| a.uses_var(i) && b.uses_var(i))
        .max_by_key(|&i| a.degree_in(i).max(b.degree_in(i)))
        .expect("prs needs a shared letter");
    let mut ua = a.to_univariate(var);
    let mut ub = b.to_univariate(var);
    let ca = univ_content(&ua);
    let cb = univ_content(&ub);
    let cont = gcd_general(&ca, &cb);
    ua = univ_div(&ua, &ca);
    ub = univ_div(&ub, &cb);
    if ua.len() < ub.len() {
        std::mem::swap(&mut ua, &mut ub);
    }
    while !(ub.len() == 1 && ub[0].is_zero()) && !ub.is_empty() {
        let r = prem(&ua, &ub);
        ua = ub;
        if r.is_empty() {
            break;
        }
        let c = univ_content(&r);
        ub = univ_div(&r, &c);
    }
    let g = Poly::from_univariate(var, &ua);
    g.primitive().mul(&cont).primitive()
}

fn trim(v: &mut Vec<Poly>) {
    while let Some(l) = v.last() {
        if l.is_zero() {
            v.pop();
        } else {
            break;
        }
    }
}

fn univ_content(v: &[Poly]) -> Poly {
    let mut g = Poly::zero();
    for c in v.iter().filter(|c| !c.is_zero()) {
        g = if g.is_zero() { c.normalize_sign() } else { gcd_general(&g, c) };
        if g.is_one() {
            break;
        }
    }
    g
}

fn univ_div(v: &[Poly], c: &Poly) -> Vec<Poly> {
    if c.is_one() {
        return v.to_vec();
    }
    v.iter().map(|x| x.div_exact(c).expect("content divides")).collect()
}

/// Pseudo-remainder of `a` by `b` (dense coefficient vectors, low degree first).
fn prem(a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    let mut r = a.to_vec();
    trim(&mut r);
    let mut bb = b.to_vec();
    trim(&mut bb);
    let db = bb.len() - 1;
    let lb = bb[db].clone();
    while !r.is_empty() && r.len() - 1 >= db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        for x in r.iter_mut() {
            *x = x.mul(&lb);
        }
        for (k, c) in bb.iter().enumerate() {
            r[k + shift] = r[k + shift].sub(&c.mul(&lr));
        }
        trim(&mut r);
    }
    r
}

/// Least common multiple with positive lex-leading coefficient.
pub fn lcm(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() || b.is_zero() {
        return Poly::zero();
    }
    let g = gcd(a, b);
    a.div_exact(&g).expect("gcd divides").mul(b).normalize_sign()
}
