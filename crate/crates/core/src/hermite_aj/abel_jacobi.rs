use num_traits::Zero;

use crate::exactpoly::Poly;
use crate::field::qf;
use crate::{Rational, UniPoly};

use super::{correspondence_polys, HermiteError, QuarticCurve};

#[derive(Clone, Debug, PartialEq)]
pub enum AJImage {
    Infinity,
    Point { xi: Rational, eta: Rational },
}

/// Image of `pt` under the Abel-Jacobi map that sends `base` to the origin
/// of the Jacobian. In the closed formula `base = (x0, -w0)`.
pub fn abel_jacobi(
    h: &QuarticCurve,
    base: (&Rational, &Rational),
    pt: (&Rational, &Rational),
) -> Result<AJImage, HermiteError> {
    let (x0, bw) = base;
    let (x, w) = pt;
    if !h.contains(x0, bw) || !h.contains(x, w) {
        return Err(HermiteError::NotOnCurve);
    }
    let w0 = -bw.clone();
    let p = h.poly();
    let dp = p.derivative();
    if x == x0 {
        if w0.is_zero() {
            return Err(HermiteError::BasePointRamified);
        }
        if w == bw {
            return Ok(AJImage::Infinity);
        }
        let q = correspondence_polys(h).q;
        let p0 = p.eval(x0);
        let bracket = dp.eval(x0) * q.eval(x0) - p0.clone() * q.derivative().eval(x0);
        let xi = -q.eval(x0) / p0;
        let eta = bracket / (qf(2, 1) * w0.pow(3));
        return Ok(AJImage::Point { xi, eta });
    }
    let r = correspondence_polys(h).r.eval(x, x0);
    let d = x.clone() - x0.clone();
    let xi = qf(2, 1) * (r - w.clone() * w0.clone()) / (d.clone() * d.clone());
    let eta = qf(4, 1) * w.clone() * w0.clone() * (w.clone() - w0.clone()) / d.pow(3)
        - (dp.eval(x) * w0 + dp.eval(x0) * w.clone()) / (d.clone() * d);
    Ok(AJImage::Point { xi, eta })
}

/// `a(x) + b(x) w` in `Q[x][w] / (w^2 - P(x))`.
#[derive(Clone, Debug, PartialEq)]
pub struct CurveFunction {
    pub a: UniPoly,
    pub b: UniPoly,
}

impl CurveFunction {
    pub fn from_poly(a: UniPoly) -> Self {
        CurveFunction { a, b: Poly::zero() }
    }

    pub fn w() -> Self {
        CurveFunction { a: Poly::zero(), b: Poly::one() }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        CurveFunction { a: &self.a + &o.a, b: &self.b + &o.b }
    }

    pub fn sub(&self, o: &Self) -> Self {
        CurveFunction { a: &self.a - &o.a, b: &self.b - &o.b }
    }

    pub fn scale_poly(&self, c: &UniPoly) -> Self {
        CurveFunction { a: &self.a * c, b: &self.b * c }
    }

    pub fn mul(&self, o: &Self, p: &UniPoly) -> Self {
        CurveFunction {
            a: &(&self.a * &o.a) + &(&(&self.b * &o.b) * p),
            b: &(&self.a * &o.b) + &(&self.b * &o.a),
        }
    }

    /// Value at a point `(x, w)` of the curve.
    pub fn eval(&self, x: &Rational, w: &Rational) -> Rational {
        self.a.eval(x) + self.b.eval(x) * w.clone()
    }
}

/// The Abel-Jacobi map as functions on the curve:
/// `xi = xi_num / (x - x0)^2` and `eta = eta_num / (x - x0)^3`.
#[derive(Clone, Debug)]
pub struct AJFunctions {
    pub p: UniPoly,
    pub xi_num: CurveFunction,
    pub eta_num: CurveFunction,
    /// `x - x0`.
    pub denom: UniPoly,
}

impl AJFunctions {
    /// `eta_num^2 - xi_num^3 - f xi_num d^4 - g d^6`, which vanishes exactly
    /// when the image lies on the Jacobian.
    pub fn weierstrass_residual(&self, f: &Rational, g: &Rational) -> CurveFunction {
        let p = &self.p;
        let d2 = &self.denom * &self.denom;
        let d4 = &d2 * &d2;
        let d6 = &d4 * &d2;
        let eta2 = self.eta_num.mul(&self.eta_num, p);
        let xi3 = self.xi_num.mul(&self.xi_num, p).mul(&self.xi_num, p);
        let fx = self.xi_num.scale_poly(&d4.scale(f));
        let gx = CurveFunction::from_poly(d6.scale(g));
        eta2.sub(&xi3).sub(&fx).sub(&gx)
    }
}

pub fn abel_jacobi_functions(h: &QuarticCurve, base: (&Rational, &Rational)) -> Result<AJFunctions, HermiteError> {
    let (x0, bw) = base;
    if !h.contains(x0, bw) {
        return Err(HermiteError::NotOnCurve);
    }
    let w0 = -bw.clone();
    let p = h.poly();
    let dp = p.derivative();
    let r = correspondence_polys(h).r.at_x0(x0);
    let w = CurveFunction::w();
    let two = qf(2, 1);
    let xi_num = CurveFunction { a: r.scale(&two), b: Poly::constant(-two * w0.clone()) };
    let ww0w = w.mul(&w.scale_poly(&Poly::constant(w0.clone())), &p).sub(&w.scale_poly(&Poly::constant(w0.clone() * w0.clone())));
    let denom = Poly::new(vec![-x0.clone(), Rational::from_integer(1.into())]);
    let lin = CurveFunction { a: dp.scale(&w0), b: Poly::constant(dp.eval(x0)) }.scale_poly(&denom);
    let eta_num = ww0w.scale_poly(&Poly::constant(qf(4, 1))).sub(&lin);
    Ok(AJFunctions { p, xi_num, eta_num, denom })
}
