//! Laurent polynomials in torus variables, optionally truncated as series in q,
//! and the constant-term functional.

use crate::ratfunc::RatFunc;
use crate::xpoly::{Exps, XPoly, MAXVARS};
use crate::Error;

#[derive(Clone, Debug, PartialEq)]
pub struct LaurentSeries {
    poly: XPoly<RatFunc>,
    /// Largest retained q-exponent in half-units; `None` means exact.
    q_order: Option<i32>,
}

impl LaurentSeries {
    pub fn exact(poly: XPoly<RatFunc>) -> LaurentSeries {
        LaurentSeries { poly, q_order: None }
    }

    /// Series truncated after q^K (K in whole units).
    pub fn truncated(poly: XPoly<RatFunc>, k: i32) -> Result<LaurentSeries, Error> {
        let mut s = LaurentSeries { poly, q_order: Some(2 * k) };
        s.reduce()?;
        Ok(s)
    }

    pub fn one(n: usize) -> LaurentSeries {
        LaurentSeries::exact(XPoly::one(n))
    }

    pub fn q_order(&self) -> Option<i32> {
        self.q_order.map(|h| h / 2)
    }

    pub fn poly(&self) -> &XPoly<RatFunc> {
        &self.poly
    }

    fn reduce(&mut self) -> Result<(), Error> {
        if let Some(h) = self.q_order {
            self.poly = self.poly.try_map_coeffs(|c| c.truncate_q(h))?;
        }
        Ok(())
    }

    fn join(a: Option<i32>, b: Option<i32>) -> Option<i32> {
        match (a, b) {
            (Some(x), Some(y)) => Some(x.min(y)),
            (x, None) => x,
            (None, y) => y,
        }
    }

    pub fn add(&self, o: &LaurentSeries) -> Result<LaurentSeries, Error> {
        let mut s = LaurentSeries { poly: self.poly.add(&o.poly), q_order: Self::join(self.q_order, o.q_order) };
        s.reduce()?;
        Ok(s)
    }

    pub fn mul(&self, o: &LaurentSeries) -> Result<LaurentSeries, Error> {
        let mut s = LaurentSeries { poly: self.poly.mul(&o.poly), q_order: Self::join(self.q_order, o.q_order) };
        s.reduce()?;
        Ok(s)
    }

    /// Coefficient of z⁰.
    pub fn constant_term(&self) -> RatFunc {
        self.poly.coeff(&[0; MAXVARS])
    }

    pub fn coeff(&self, e: &Exps) -> RatFunc {
        self.poly.coeff(e)
    }

    /// T_{q,zᵢ}.
    pub fn q_shift(&self, i: usize) -> Result<LaurentSeries, Error> {
        let mut s = LaurentSeries { poly: self.poly.q_shift(i)?, q_order: self.q_order };
        s.reduce()?;
        Ok(s)
    }

    /// f(z) ↦ f(z⁻¹).
    pub fn invert(&self) -> LaurentSeries {
        LaurentSeries { poly: self.poly.invert_vars(), q_order: self.q_order }
    }
}

/// Constant term of f(z)·g(z⁻¹) without forming the full product.
pub fn constant_term_pair(f: &XPoly<RatFunc>, g: &XPoly<RatFunc>) -> RatFunc {
    let mut acc = RatFunc::zero();
    for (e, c) in f.terms() {
        let d = g.coeff(e);
        if !d.is_zero() {
            acc = acc.add(&c.mul(&d));
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratfunc::{int, q};
    use crate::xpoly::exps_from;

    fn z(n: usize, e: &[i64]) -> XPoly<RatFunc> {
        XPoly::monomial(n, exps_from(e), RatFunc::one())
    }

    #[test]
    fn constant_terms() {
        let f = z(1, &[1]).add(&z(1, &[0])).add(&z(1, &[-1]));
        assert_eq!(LaurentSeries::exact(f).constant_term(), int(1));
        let a = z(2, &[0]).sub(&z(2, &[1, -1]));
        let b = z(2, &[0]).sub(&z(2, &[-1, 1]));
        assert_eq!(LaurentSeries::exact(a.mul(&b)).constant_term(), int(2));
    }

    #[test]
    fn truncation() {
        let f = XPoly::constant(1, int(1)).sub(&XPoly::monomial(1, exps_from(&[1]), q()));
        let s = LaurentSeries::truncated(f, 2).unwrap();
        let s3 = s.mul(&s).unwrap().mul(&s).unwrap();
        // (1 − qz)³ keeps q-powers ≤ 2
        assert_eq!(s3.coeff(&exps_from(&[3])), int(0));
        assert_eq!(s3.coeff(&exps_from(&[2])), q().pow(2).scale_int(3));
    }

    #[test]
    fn pairing_symmetry() {
        let f = z(2, &[1, 0]).add(&z(2, &[0, 2]).scale(&q()));
        let g = z(2, &[0, 2]).add(&z(2, &[1, 0]).scale(&int(3)));
        assert_eq!(constant_term_pair(&f, &g), constant_term_pair(&g, &f));
        let direct = LaurentSeries::exact(f.mul(&g.invert_vars())).constant_term();
        assert_eq!(direct, constant_term_pair(&f, &g));
    }
}
