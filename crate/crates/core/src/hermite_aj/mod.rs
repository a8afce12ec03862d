//! Genus-one quartics `w^2 = P(x)` and their Jacobians.
//!
//! Hermite's invariants give the Jacobian `eta^2 = xi^3 + f xi + g`. The
//! symmetric polynomials `R` and `R1` satisfy
//! `R(x,x0)^2 + R1(x,x0)(x-x0)^2 = P(x)P(x0)` and drive both the pointwise
//! Abel-Jacobi map and the symmetric `(2,2)` correspondence curve.

mod abel_jacobi;
mod surface;

use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactpoly::{HomPoly as Form, Poly, Vars};
use crate::field::qf;
use crate::{HomPoly, MPoly, Rational, UniPoly};

pub use abel_jacobi::{abel_jacobi, abel_jacobi_functions, AJFunctions, AJImage, CurveFunction};
pub use surface::{
    build_theorem59_surface, symmetry_identity, lemma57_transform, solve_c0, double_quadric_constraint,
    DoubleQuadricParams, SymmetryCase, DoubleQuadricSurface,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HermiteError {
    #[error("point is not on the curve")]
    NotOnCurve,
    #[error("base point is a ramification point; no closed formula for its image")]
    BasePointRamified,
    #[error("the curve is singular")]
    SingularCurve,
    #[error("the quartic x^4 + a2 x^2 + a1 x + a0 is singular")]
    SingularH,
    #[error("c0 * cinf must differ from 1")]
    UnitViolation,
    #[error("scale factor must be nonzero")]
    ZeroScale,
    #[error("the transformation needs c0 and cinf nonzero")]
    InfiniteParameter,
    #[error("the constraint does not determine c0")]
    ConstraintDegenerate,
}

/// `w^2 = a0 + a1 x + a2 x^2 + a3 x^3 + a4 x^4`.
#[derive(Clone, Debug, PartialEq)]
pub struct QuarticCurve {
    pub a: [Rational; 5],
}

impl QuarticCurve {
    pub fn new(a: [Rational; 5]) -> Self {
        QuarticCurve { a }
    }

    pub fn from_ints(a: [i64; 5]) -> Self {
        QuarticCurve { a: a.map(|x| Rational::from_integer(x.into())) }
    }

    pub fn poly(&self) -> UniPoly {
        Poly::new(self.a.to_vec())
    }

    pub fn contains(&self, x: &Rational, w: &Rational) -> bool {
        w.clone() * w.clone() == self.poly().eval(x)
    }

    /// Discriminant of the binary quartic, so a vanishing `a4` counts as a
    /// root at infinity.
    pub fn discriminant(&self) -> Rational {
        binary_quartic_discriminant(&self.a)
    }
}

impl fmt::Display for QuarticCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w^2 = {}", self.poly())
    }
}

/// `eta^2 = xi^3 + f xi + g`.
#[derive(Clone, Debug, PartialEq)]
pub struct ShortCubic {
    pub f: Rational,
    pub g: Rational,
}

impl ShortCubic {
    pub fn discriminant(&self) -> Rational {
        let f3 = self.f.clone() * self.f.clone() * self.f.clone();
        -(qf(4, 1) * f3) - qf(27, 1) * self.g.clone() * self.g.clone()
    }

    pub fn contains(&self, xi: &Rational, eta: &Rational) -> bool {
        eta.clone() * eta.clone() == xi.clone() * xi.clone() * xi.clone() + self.f.clone() * xi.clone() + self.g.clone()
    }

    /// `j = 6912 f^3 / (4 f^3 + 27 g^2)`.
    pub fn j_invariant(&self) -> Result<Rational, HermiteError> {
        let d = -self.discriminant();
        if d.is_zero() {
            return Err(HermiteError::SingularCurve);
        }
        Ok(qf(6912, 1) * self.f.clone() * self.f.clone() * self.f.clone() / d)
    }
}

/// Hermite's invariants of the quartic.
pub fn jacobian_quartic(h: &QuarticCurve) -> ShortCubic {
    let [a0, a1, a2, a3, a4] = h.a.clone();
    let f = qf(-4, 1) * a0.clone() * a4.clone() + a1.clone() * a3.clone() - a2.clone() * a2.clone() / qf(3, 1);
    let g = qf(-8, 3) * a0.clone() * a2.clone() * a4.clone() + a0 * a3.clone() * a3.clone()
        + a1.clone() * a1.clone() * a4
        - a1 * a2.clone() * a3 / qf(3, 1)
        + qf(2, 27) * a2.clone() * a2.clone() * a2;
    ShortCubic { f, g }
}

/// Discriminant of `sum a_i X^i Z^(4-i)`. A unimodular change `Z -> Z + cX`
/// moves any root away from infinity without changing the discriminant.
pub fn binary_quartic_discriminant(a: &[Rational; 5]) -> Rational {
    if a.iter().all(|c| c.is_zero()) {
        return Rational::zero();
    }
    for c in 0i64.. {
        let c = Rational::from_integer(c.into());
        let line = Poly::new(vec![Rational::one(), c]);
        let mut p = Poly::zero();
        for (i, ai) in a.iter().enumerate() {
            if !ai.is_zero() {
                p = &p + &(&Poly::monomial(ai.clone(), i) * &line.pow(4 - i as u32));
            }
        }
        if p.degree() == Some(4) {
            return p.discriminant().expect("degree four");
        }
    }
    unreachable!()
}

/// A polynomial of bidegree at most `(2,2)` in `(x, x0)`; `c[i][j]` is the
/// coefficient of `x^i x0^j`.
#[derive(Clone, Debug, PartialEq)]
pub struct Biquadratic {
    pub c: [[Rational; 3]; 3],
}

impl Biquadratic {
    pub fn zero() -> Self {
        Biquadratic { c: std::array::from_fn(|_| std::array::from_fn(|_| Rational::zero())) }
    }

    /// Symmetric polynomial from its coefficients on the basis
    /// `x^2x0^2, x x0(x+x0), x^2+x0^2, x x0, x+x0, 1`.
    pub fn symmetric(k: [Rational; 6]) -> Self {
        let [k22, k21, k20, k11, k10, k00] = k;
        let mut b = Self::zero();
        b.c[2][2] = k22;
        b.c[2][1] = k21.clone();
        b.c[1][2] = k21;
        b.c[2][0] = k20.clone();
        b.c[0][2] = k20;
        b.c[1][1] = k11;
        b.c[1][0] = k10.clone();
        b.c[0][1] = k10;
        b.c[0][0] = k00;
        b
    }

    /// `(x - x0)^2`.
    pub fn diff_squared() -> Self {
        let mut b = Self::zero();
        b.c[2][0] = Rational::one();
        b.c[0][2] = Rational::one();
        b.c[1][1] = qf(-2, 1);
        b
    }

    pub fn is_symmetric(&self) -> bool {
        (0..3).all(|i| (0..3).all(|j| self.c[i][j] == self.c[j][i]))
    }

    pub fn eval(&self, x: &Rational, x0: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for i in 0..3 {
            for j in 0..3 {
                acc += self.c[i][j].clone() * x.pow(i as i32) * x0.pow(j as i32);
            }
        }
        acc
    }

    /// Restriction to the diagonal `x0 = x`.
    pub fn diagonal(&self) -> UniPoly {
        let mut v = vec![Rational::zero(); 5];
        for i in 0..3 {
            for j in 0..3 {
                v[i + j] += self.c[i][j].clone();
            }
        }
        Poly::new(v)
    }

    /// Coefficient of `x0^j`, a polynomial in `x`.
    pub fn coeff_x0(&self, j: usize) -> UniPoly {
        Poly::new((0..3).map(|i| self.c[i][j].clone()).collect())
    }

    /// Specialise `x0`.
    pub fn at_x0(&self, x0: &Rational) -> UniPoly {
        let mut acc = Poly::zero();
        for j in 0..3 {
            acc = &acc + &self.coeff_x0(j).scale(&x0.pow(j as i32));
        }
        acc
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Biquadratic { c: std::array::from_fn(|i| std::array::from_fn(|j| self.c[i][j].clone() * k.clone())) }
    }

    pub fn add(&self, o: &Self) -> Self {
        Biquadratic { c: std::array::from_fn(|i| std::array::from_fn(|j| self.c[i][j].clone() + o.c[i][j].clone())) }
    }

    /// As a polynomial in two variables, `x` first.
    pub fn to_mpoly(&self) -> MPoly {
        let mut m = MPoly::zero(2);
        for i in 0..3 {
            for j in 0..3 {
                m.add_term(vec![i as u32, j as u32], self.c[i][j].clone());
            }
        }
        m
    }
}

/// `R`, `R1` and `Q = R1(x,x)` of a quartic.
#[derive(Clone, Debug, PartialEq)]
pub struct CorrespondencePolys {
    pub r: Biquadratic,
    pub r1: Biquadratic,
    pub q: UniPoly,
}

pub fn correspondence_polys(h: &QuarticCurve) -> CorrespondencePolys {
    let [a0, a1, a2, a3, a4] = h.a.clone();
    let r = Biquadratic::symmetric([
        a4.clone(),
        a3.clone() / qf(2, 1),
        a2.clone() / qf(6, 1),
        qf(2, 3) * a2.clone(),
        a1.clone() / qf(2, 1),
        a0.clone(),
    ]);
    let r1 = Biquadratic::symmetric([
        (qf(8, 1) * a2.clone() * a4.clone() - qf(3, 1) * a3.clone() * a3.clone()) / qf(12, 1),
        (qf(6, 1) * a1.clone() * a4.clone() - a2.clone() * a3.clone()) / qf(6, 1),
        (qf(36, 1) * a0.clone() * a4.clone() - a2.clone() * a2.clone()) / qf(36, 1),
        (qf(36, 1) * a0.clone() * a4 + qf(9, 1) * a1.clone() * a3.clone() - qf(5, 1) * a2.clone() * a2.clone())
            / qf(18, 1),
        (qf(6, 1) * a0.clone() * a3 - a1.clone() * a2.clone()) / qf(6, 1),
        (qf(8, 1) * a0 * a2 - qf(3, 1) * a1.clone() * a1) / qf(12, 1),
    ]);
    let q = r1.diagonal();
    CorrespondencePolys { r, r1, q }
}

/// `Q = P P''/3 - P'^2/4`, computed from `P` alone.
pub fn q_from_derivatives(p: &UniPoly) -> UniPoly {
    let d1 = p.derivative();
    let d2 = d1.derivative();
    &(p * &d2).scale(&qf(1, 3)) - &(&d1 * &d1).scale(&qf(1, 4))
}

#[derive(Clone, Debug, PartialEq)]
pub struct DiscrRelation {
    pub disc_p: Rational,
    pub disc_q: Rational,
    /// `S(0) = g`.
    pub s0: Rational,
}

impl DiscrRelation {
    pub fn holds(&self, cubic: &ShortCubic) -> bool {
        self.disc_q == self.s0.clone() * self.s0.clone() * self.disc_p.clone() && self.disc_p == cubic.discriminant()
    }
}

/// Discriminants of `P` and `Q` as binary quartics, with `S(0)`.
pub fn discr_relation_check(h: &QuarticCurve) -> DiscrRelation {
    let cp = correspondence_polys(h);
    let qa: [Rational; 5] = std::array::from_fn(|i| cp.q.coeff(i));
    DiscrRelation { disc_p: h.discriminant(), disc_q: binary_quartic_discriminant(&qa), s0: jacobian_quartic(h).g }
}

/// The curve `Phi(x, x0) = xi^2 (x-x0)^2 - 4 xi R - 4 R1 = 0` of bidegree
/// `(2,2)`, with `Phi = gamma(x,1) x0^2 + alpha(x,1) x0 + delta(x,1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Biquadratic22 {
    pub phi: Biquadratic,
    pub gamma: HomPoly,
    pub alpha: HomPoly,
    pub delta: HomPoly,
}

impl Biquadratic22 {
    pub fn from_phi(phi: Biquadratic) -> Self {
        let form = |j: usize| Form::homogenize(Vars::XY, &phi.coeff_x0(j), 2);
        Biquadratic22 { gamma: form(2), alpha: form(1), delta: form(0), phi }
    }

    /// `alpha^2 - 4 gamma delta`, the branch quartic of the projection to `x`.
    pub fn discriminant_in_x0(&self) -> QuarticCurve {
        let d = &(&self.alpha * &self.alpha) - &(&self.gamma * &self.delta).scale(&qf(4, 1));
        // coefficient k of the form is x^(4-k) y^k
        QuarticCurve { a: std::array::from_fn(|i| d.coeff(4 - i)) }
    }
}

pub fn correspondence_22(h: &QuarticCurve, xi: &Rational) -> Biquadratic22 {
    let cp = correspondence_polys(h);
    let phi = Biquadratic::diff_squared()
        .scale(&(xi.clone() * xi.clone()))
        .add(&cp.r.scale(&(qf(-4, 1) * xi.clone())))
        .add(&cp.r1.scale(&qf(-4, 1)));
    Biquadratic22::from_phi(phi)
}

pub fn j_invariant_quartic(h: &QuarticCurve) -> Result<Rational, HermiteError> {
    jacobian_quartic(h).j_invariant()
}

/// j-invariant of a `(2,2)` curve through the branch quartic of one of its
/// projections.
pub fn j_invariant_22(c: &Biquadratic22) -> Result<Rational, HermiteError> {
    j_invariant_quartic(&c.discriminant_in_x0())
}

/// Whether two short cubics have equal j-invariants, tested without
/// division as `f1^3 D2 = f2^3 D1` with both `D` nonzero.
pub fn same_j(e1: &ShortCubic, e2: &ShortCubic) -> bool {
    let (d1, d2) = (e1.discriminant(), e2.discriminant());
    !d1.is_zero()
        && !d2.is_zero()
        && e1.f.clone() * e1.f.clone() * e1.f.clone() * d2 == e2.f.clone() * e2.f.clone() * e2.f.clone() * d1
}
