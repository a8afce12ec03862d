use num_traits::{One, Zero};

use crate::duality::{table2_generate, Table2};
use crate::exactpoly::{BiHomPoly as BiForm, HomPoly as Form, Vars};
use crate::field::qf;
use crate::{BiHomPoly, HomPoly, MPoly, Rational};

use super::{correspondence_22, Biquadratic22, HermiteError, QuarticCurve};

/// Parameters `(delta0, alpha0, gamma0, alpha1, alpha2, gamma2; c0, cinf)`
/// of the double quadric
/// `W^2 = (S - c0 T)(T - cinf S) U V (gamma(U,V) S^2 + alpha(U,V) S T + delta(U,V) T^2)`
/// with `alpha = alpha2 x^2 + alpha1 xy + alpha0 y^2`,
/// `gamma = gamma2 x^2 + alpha2 xy + gamma0 y^2` and
/// `delta = gamma0 x^2 + alpha0 xy + delta0 y^2`.
#[derive(Clone, Debug, PartialEq)]
pub struct DoubleQuadricParams {
    pub delta0: Rational,
    pub alpha0: Rational,
    pub gamma0: Rational,
    pub alpha1: Rational,
    pub alpha2: Rational,
    pub gamma2: Rational,
    pub c0: Rational,
    pub cinf: Rational,
}

impl DoubleQuadricParams {
    pub fn from_ints(v: [i64; 8]) -> Self {
        let q = |i: usize| Rational::from_integer(v[i].into());
        DoubleQuadricParams {
            delta0: q(0),
            alpha0: q(1),
            gamma0: q(2),
            alpha1: q(3),
            alpha2: q(4),
            gamma2: q(5),
            c0: q(6),
            cinf: q(7),
        }
    }

    /// Read the parameters off forms obeying the symmetric normalisation;
    /// `None` if they do not.
    pub fn from_forms(gamma: &HomPoly, alpha: &HomPoly, delta: &HomPoly, c0: Rational, cinf: Rational) -> Option<Self> {
        if gamma.coeff(1) != alpha.coeff(0) || delta.coeff(0) != gamma.coeff(2) || delta.coeff(1) != alpha.coeff(2) {
            return None;
        }
        Some(DoubleQuadricParams {
            delta0: delta.coeff(2),
            alpha0: alpha.coeff(2),
            gamma0: gamma.coeff(2),
            alpha1: alpha.coeff(1),
            alpha2: alpha.coeff(0),
            gamma2: gamma.coeff(0),
            c0,
            cinf,
        })
    }

    /// `(gamma, alpha, delta)` in the given variables.
    pub fn forms(&self, vars: Vars) -> (HomPoly, HomPoly, HomPoly) {
        let f = |a: &Rational, b: &Rational, c: &Rational| Form::new(vars, vec![a.clone(), b.clone(), c.clone()]);
        (
            f(&self.gamma2, &self.alpha2, &self.gamma0),
            f(&self.alpha2, &self.alpha1, &self.alpha0),
            f(&self.gamma0, &self.alpha0, &self.delta0),
        )
    }

    /// The branch curve of bidegree `(4,4)` in `([S:T], [U:V])`.
    pub fn branch(&self) -> BiHomPoly {
        let st = Vars::CAP_ST;
        let one = Rational::one();
        let lines = &Form::linear(st, one.clone(), -self.c0.clone()) * &Form::linear(st, -self.cinf.clone(), one);
        let uv = Form::monomial(Vars::CAP_UV, 2, 1, Rational::one());
        let (g, a, d) = self.forms(Vars::CAP_UV);
        let curve = BiForm::sum_of_products(&[
            (Form::monomial(st, 2, 0, Rational::one()), g),
            (Form::monomial(st, 2, 1, Rational::one()), a),
            (Form::monomial(st, 2, 2, Rational::one()), d),
        ]);
        &BiForm::outer(&lines, &uv) * &curve
    }

    fn coeffs(&self) -> [Rational; 6] {
        [
            self.delta0.clone(),
            self.alpha0.clone(),
            self.gamma0.clone(),
            self.alpha1.clone(),
            self.alpha2.clone(),
            self.gamma2.clone(),
        ]
    }

    fn with_coeffs(v: [Rational; 6], c0: Rational, cinf: Rational) -> Self {
        let [delta0, alpha0, gamma0, alpha1, alpha2, gamma2] = v;
        DoubleQuadricParams { delta0, alpha0, gamma0, alpha1, alpha2, gamma2, c0, cinf }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum SymmetryCase {
    /// Scale the curve coefficients by `lambda`.
    Scale(Rational),
    /// `(T, V) -> (mu T, mu V)`.
    Rescale(Rational),
    /// `S <-> T`, `U <-> V`.
    Swap,
    /// Exchange of the two rulings composed with the shears by `c0`, `cinf`.
    Shear,
}

pub fn lemma57_transform(p: &DoubleQuadricParams, case: &SymmetryCase) -> Result<DoubleQuadricParams, HermiteError> {
    let [d0, a0, g0, a1, a2, g2] = p.coeffs();
    let (c0, ci) = (p.c0.clone(), p.cinf.clone());
    Ok(match case {
        SymmetryCase::Scale(l) => {
            if l.is_zero() {
                return Err(HermiteError::ZeroScale);
            }
            DoubleQuadricParams::with_coeffs(p.coeffs().map(|x| x * l.clone()), c0, ci)
        }
        SymmetryCase::Rescale(m) => {
            if m.is_zero() {
                return Err(HermiteError::ZeroScale);
            }
            let mp = |e: i32| m.pow(e);
            DoubleQuadricParams::with_coeffs(
                [d0 * mp(4), a0 * mp(3), g0 * mp(2), a1 * mp(2), a2 * mp(1), g2],
                m.clone() * c0,
                ci / m.clone(),
            )
        }
        SymmetryCase::Swap => {
            if c0.is_zero() || ci.is_zero() {
                return Err(HermiteError::InfiniteParameter);
            }
            DoubleQuadricParams::with_coeffs([g2, a2, g0, a1, a0, d0], c0.recip(), ci.recip())
        }
        SymmetryCase::Shear => {
            let two = qf(2, 1);
            let three = qf(3, 1);
            let four = qf(4, 1);
            let s = a1.clone() + two.clone() * g0.clone();
            let c = |e: i32| c0.pow(e);
            let k = |e: i32| ci.pow(e);
            let nd0 = g2.clone() * c(4) + two.clone() * a2.clone() * c(3) + s.clone() * c(2)
                + two.clone() * a0.clone() * c0.clone()
                + d0.clone();
            let na0 = (a2.clone() * ci.clone() + two.clone() * g2.clone()) * c(3)
                + (s.clone() * ci.clone() + three.clone() * a2.clone()) * c(2)
                + (three.clone() * a0.clone() * ci.clone() + s.clone()) * c0.clone()
                + two.clone() * d0.clone() * ci.clone()
                + a0.clone();
            let ng0 = (g0.clone() * k(2) + a2.clone() * ci.clone() + g2.clone()) * c(2)
                + (a0.clone() * k(2) + a1.clone() * ci.clone() + a2.clone()) * c0.clone()
                + d0.clone() * k(2)
                + a0.clone() * ci.clone()
                + g0.clone();
            let na1 = (a1.clone() * k(2) + four.clone() * a2.clone() * ci.clone() + four.clone() * g2.clone()) * c(2)
                + (four.clone() * a0.clone() * k(2)
                    + two.clone() * (a1.clone() + four.clone() * g0.clone()) * ci.clone()
                    + four.clone() * a2.clone())
                    * c0.clone()
                + four.clone() * d0.clone() * k(2)
                + four * a0.clone() * ci.clone()
                + a1.clone();
            let na2 = (a0.clone() * c0.clone() + two.clone() * d0.clone()) * k(3)
                + (s.clone() * c0.clone() + three.clone() * a0.clone()) * k(2)
                + (three * a2.clone() * c0.clone() + s.clone()) * ci.clone()
                + two.clone() * g2.clone() * c0.clone()
                + a2.clone();
            let ng2 = d0 * k(4) + two.clone() * a0 * k(3) + s * k(2) + two * a2 * ci.clone() + g2;
            DoubleQuadricParams::with_coeffs([nd0, na0, ng0, na1, na2, ng2], -c0, -ci)
        }
    })
}

/// Check that the branch curves before and after the transformation differ
/// by the expected change of coordinates and scalar, as an identity of
/// polynomials in `S, T, U, V`.
pub fn symmetry_identity(p: &DoubleQuadricParams, case: &SymmetryCase) -> Result<bool, HermiteError> {
    let q = lemma57_transform(p, case)?;
    let b = p.branch().to_mpoly();
    let bq = q.branch().to_mpoly();
    let v = |i: usize| MPoly::var(4, i);
    let k = |c: &Rational| MPoly::constant(4, c.clone());
    let (lhs, rhs) = match case {
        SymmetryCase::Scale(l) => (bq, b.scale(l)),
        SymmetryCase::Rescale(m) => {
            let sub = b.subst(&[v(0), &k(m) * &v(1), v(2), &k(m) * &v(3)]);
            (sub, bq.scale(&(m.clone() * m.clone())))
        }
        SymmetryCase::Swap => (b.subst(&[v(1), v(0), v(3), v(2)]), bq.scale(&(p.c0.clone() * p.cinf.clone()))),
        SymmetryCase::Shear => {
            let (c0, ci) = (&p.c0, &p.cinf);
            let sub = b.subst(&[
                &v(2) + &(&k(c0) * &v(3)),
                &(&k(ci) * &v(2)) + &v(3),
                &v(0) + &(&k(c0) * &v(1)),
                &(&k(ci) * &v(0)) + &v(1),
            ]);
            let u = c0.clone() * ci.clone() - Rational::one();
            (sub, bq.scale(&(u.clone() * u)))
        }
    };
    Ok((&lhs - &rhs).is_zero())
}

/// `2 alpha0 gamma2 - alpha1 alpha2 + 2 alpha2 gamma0`.
pub fn double_quadric_constraint(p: &DoubleQuadricParams) -> Rational {
    let two = qf(2, 1);
    two.clone() * p.alpha0.clone() * p.gamma2.clone() - p.alpha1.clone() * p.alpha2.clone()
        + two * p.alpha2.clone() * p.gamma0.clone()
}

/// The value of `c0` for which the sheared parameters satisfy
/// `double_quadric_constraint = 0`. After removing the factor
/// `(c0 cinf - 1)^2` the constraint is linear in `c0`; this is checked.
pub fn solve_c0(p: &DoubleQuadricParams, cinf: &Rational) -> Result<Rational, HermiteError> {
    let reduced = |c0: Rational| -> Rational {
        let mut q = p.clone();
        q.c0 = c0.clone();
        q.cinf = cinf.clone();
        let u = c0 * cinf.clone() - Rational::one();
        let e = double_quadric_constraint(&lemma57_transform(&q, &SymmetryCase::Shear).expect("shear is total"));
        e / (u.clone() * u)
    };
    let samples: Vec<Rational> = (0i64..)
        .map(|k| Rational::from_integer(k.into()))
        .filter(|c| c.clone() * cinf.clone() != Rational::one())
        .take(3)
        .collect();
    let vals: Vec<Rational> = samples.iter().map(|c| reduced(c.clone())).collect();
    let slope = (vals[1].clone() - vals[0].clone()) / (samples[1].clone() - samples[0].clone());
    let predicted = vals[0].clone() + slope.clone() * (samples[2].clone() - samples[0].clone());
    if predicted != vals[2] || slope.is_zero() {
        return Err(HermiteError::ConstraintDegenerate);
    }
    let c0 = samples[0].clone() - vals[0].clone() / slope;
    if c0.clone() * cinf.clone() == Rational::one() {
        return Err(HermiteError::UnitViolation);
    }
    Ok(c0)
}

/// The double quadric built from `H: w^2 = x^4 + a2 x^2 + a1 x + a0` and a
/// point `xi` of its Jacobian.
#[derive(Clone, Debug)]
pub struct DoubleQuadricSurface {
    pub curve: QuarticCurve,
    pub xi: Rational,
    pub correspondence: Biquadratic22,
    pub params: DoubleQuadricParams,
    pub branch: BiHomPoly,
    pub table2: Table2,
}

/// `16a0a2^4 - 4a1^2a2^3 - 128a0^2a2^2 + 144a0a1^2a2 - 27a1^4 + 256a0^3`.
pub fn depressed_quartic_discriminant(a0: &Rational, a1: &Rational, a2: &Rational) -> Rational {
    let q = |n: i64| qf(n, 1);
    q(16) * a0.clone() * a2.pow(4) - q(4) * a1.pow(2) * a2.pow(3) - q(128) * a0.pow(2) * a2.pow(2)
        + q(144) * a0.clone() * a1.pow(2) * a2.clone()
        - q(27) * a1.pow(4)
        + q(256) * a0.pow(3)
}

pub fn build_theorem59_surface(
    a0: &Rational,
    a1: &Rational,
    a2: &Rational,
    xi: &Rational,
    c0: &Rational,
    cinf: &Rational,
) -> Result<DoubleQuadricSurface, HermiteError> {
    if c0.clone() * cinf.clone() == Rational::one() {
        return Err(HermiteError::UnitViolation);
    }
    if depressed_quartic_discriminant(a0, a1, a2).is_zero() {
        return Err(HermiteError::SingularH);
    }
    let z = Rational::zero();
    let curve = QuarticCurve::new([a0.clone(), a1.clone(), a2.clone(), z, Rational::one()]);
    let correspondence = correspondence_22(&curve, xi);
    let params = DoubleQuadricParams::from_forms(
        &correspondence.gamma,
        &correspondence.alpha,
        &correspondence.delta,
        c0.clone(),
        cinf.clone(),
    )
    .expect("the correspondence is symmetric");
    let branch = params.branch();
    let (g, a, d) = params.forms(Vars::XY);
    let table2 = table2_generate(&a, &g, &d).expect("symmetric forms are normalised");
    Ok(DoubleQuadricSurface { curve, xi: xi.clone(), correspondence, params, branch, table2 })
}
