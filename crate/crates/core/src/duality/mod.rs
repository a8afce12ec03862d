//! Surface constructions relating the F-theory and CHL families: base
//! change and twist of a rational elliptic surface, the van Geemen-Sarti
//! dual pair, ruling swaps of double quadrics, the generators for the two
//! tables of defining equations, and the double 4H / three-lines families.
//!
//! Forms follow the [`HomPoly`] convention: entry `k` is the coefficient of
//! `s^(d-k) t^k`.

mod four_h;
mod tables;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::elliptic::{invariants, EllipticError, WeierstrassModel};
use crate::exactpoly::{BiHomPoly as BiForm, HomPoly as Form, Vars};
use crate::field::qf;
use crate::{BiHomPoly, HomPoly, Rational};

pub use four_h::{
    four_h_surface, normalize_three_i0star, normalize_three_i0star_all, relative_jacobian_4h, three_lines_cubic_model,
    FourHData, FourHSurface, RelativeJacobian4H, ThreeI0StarModel, ThreeLinesCubicParams, Z_VARS,
};
pub use tables::{table2_generate, table3_generate, DualRuling, Table2, Table3};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DualityError {
    #[error("d0 * dinf = 1")]
    UnitViolation,
    #[error("a fibre over a branch point of the double cover is singular")]
    SingularBranchFiber,
    #[error("the double cover degenerates (d0 = 1 or dinf = 1)")]
    DegenerateCover,
    #[error("no factorization B = C D is attached")]
    MissingFactorization,
    #[error("the forms do not satisfy the symmetric normalization")]
    NormalizationViolated,
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("genericity violated: {0}")]
    GenericityViolated(String),
    #[error("parameter constraint violated: {0}")]
    ParameterConstraintViolated(String),
    #[error("the shift cubic has no rational root")]
    NoRationalCubicRoot,
    #[error("c1^2 has no rational square root")]
    NonSquareDiscriminant,
    #[error("every branch divides by zero")]
    DivisionGuard,
    #[error("the Weierstrass model is degenerate")]
    DegenerateModel,
}

impl From<EllipticError> for DualityError {
    fn from(_: EllipticError) -> Self {
        DualityError::DegenerateModel
    }
}

fn model(a2: HomPoly, a4: HomPoly, a6: HomPoly, weight: usize) -> WeierstrassModel<Rational> {
    WeierstrassModel::new(a2, a4, a6, weight).expect("degrees fixed by construction")
}

fn two_torsion(a2: HomPoly, a4: HomPoly, weight: usize) -> WeierstrassModel<Rational> {
    let vars = a2.vars();
    model(a2, a4, Form::zero(vars, 6 * weight), weight)
}

fn short(f: HomPoly, g: HomPoly, weight: usize) -> WeierstrassModel<Rational> {
    let vars = f.vars();
    model(Form::zero(vars, 2 * weight), f, g, weight)
}

fn mono(vars: Vars, deg: usize, k: usize) -> HomPoly {
    Form::monomial(vars, deg, k, Rational::one())
}

/// Hermite's invariants of the binary quartic `sum a_i s^(4-i) t^i`, whose
/// coefficients are themselves forms of a common degree:
/// `f = -4a0a4 + a1a3 - a2^2/3`,
/// `g = -8/3 a0a2a4 + a0a3^2 + a1^2a4 - 1/3 a1a2a3 + 2/27 a2^3`.
pub fn hermite_pair(a: &[HomPoly; 5]) -> (HomPoly, HomPoly) {
    let [a0, a1, a2, a3, a4] = a;
    let f = &(&(&(a0 * a4).scale(&qf(-4, 1)) + &(a1 * a3)) - &(a2 * a2).scale(&qf(1, 3)));
    let g = [
        (&(a0 * a2) * a4).scale(&qf(-8, 3)),
        &(a0 * a3) * a3,
        &(a1 * a1) * a4,
        (&(a1 * a2) * a3).scale(&qf(-1, 3)),
        (&(a2 * a2) * a2).scale(&qf(2, 27)),
    ]
    .iter()
    .fold(Form::zero(a0.vars(), 3 * a0.degree()), |acc, x| &acc + x);
    (f.clone(), g)
}

/// A rational elliptic surface `y^2 = x^3 + f x + g`, `deg f = 4`, `deg g = 6`.
#[derive(Clone, Debug, PartialEq)]
pub struct RESData {
    pub f: HomPoly,
    pub g: HomPoly,
}

impl RESData {
    pub fn new(f: HomPoly, g: HomPoly) -> Result<Self, DualityError> {
        if f.degree() != 4 || g.degree() != 6 {
            return Err(DualityError::DegenerateInput("RES needs deg f = 4, deg g = 6".into()));
        }
        let r = RESData { f, g };
        invariants(&r.model())?;
        Ok(r)
    }

    /// Depressed form of a weight-one model.
    pub fn from_model(m: &WeierstrassModel<Rational>) -> Result<Self, DualityError> {
        if m.weight != 1 {
            return Err(DualityError::DegenerateInput("RES models have weight 1".into()));
        }
        let (f, g) = m.depressed();
        Self::new(f, g)
    }

    pub fn model(&self) -> WeierstrassModel<Rational> {
        short(self.f.clone(), self.g.clone(), 1)
    }
}

fn check_unit(d0: &Rational, dinf: &Rational) -> Result<(), DualityError> {
    if (d0.clone() * dinf.clone()).is_one() {
        return Err(DualityError::UnitViolation);
    }
    Ok(())
}

/// The double cover `[u:v] -> [U:V]` branched over `[d0:1]` and `[1:dinf]`:
/// `U = (1-d0) u^2 + d0 (1-dinf) v^2`, `V = dinf (1-d0) u^2 + (1-dinf) v^2`.
pub fn double_cover_map(d0: &Rational, dinf: &Rational) -> (HomPoly, HomPoly) {
    let one = Rational::one();
    let z = Rational::zero();
    let a = Form::new(Vars::UV, vec![one.clone() - d0, z.clone(), d0.clone() * (one.clone() - dinf)]);
    let b = Form::new(Vars::UV, vec![dinf.clone() * (one.clone() - d0), z, one - dinf]);
    (a, b)
}

/// Pull a rational elliptic surface back along [`double_cover_map`].
pub fn base_change_k3(r: &RESData, d0: &Rational, dinf: &Rational) -> Result<WeierstrassModel<Rational>, DualityError> {
    check_unit(d0, dinf)?;
    if d0.is_one() || dinf.is_one() {
        return Err(DualityError::DegenerateCover);
    }
    let delta = invariants(&r.model())?.delta;
    let one = Rational::one();
    for (s, t) in [(d0, &one), (&one, dinf), (&one, &one)] {
        if delta.eval(s, t).is_zero() {
            return Err(DualityError::SingularBranchFiber);
        }
    }
    let (a, b) = double_cover_map(d0, dinf);
    Ok(r.model().pullback(&a, &b))
}

/// Quadratic twist of `r` by `(U - d0 V)(dinf U - V)`, viewed as a K3 surface.
pub fn twist_model(r: &RESData, d0: &Rational, dinf: &Rational) -> Result<WeierstrassModel<Rational>, DualityError> {
    check_unit(d0, dinf)?;
    let vars = r.f.vars();
    let l = &Form::linear(vars, Rational::one(), -d0.clone()) * &Form::linear(vars, dinf.clone(), -Rational::one());
    let l2 = &l * &l;
    let f = &l2 * &r.f;
    let g = &(&l2 * &l) * &r.g;
    Ok(short(f, g, 2))
}

/// `y^2 = x (x^2 - A x + B)` with `deg A = 4`, `deg B = 8`, optionally with
/// a factorization `B = C D` into quartics.
#[derive(Clone, Debug, PartialEq)]
pub struct AlternatePair {
    pub a: HomPoly,
    pub b: HomPoly,
    pub factorization: Option<(HomPoly, HomPoly)>,
}

impl AlternatePair {
    pub fn new(a: HomPoly, b: HomPoly) -> Result<Self, DualityError> {
        if a.degree() != 4 || b.degree() != 8 {
            return Err(DualityError::DegenerateInput("need deg A = 4, deg B = 8".into()));
        }
        if b.is_zero() {
            return Err(DualityError::DegenerateInput("B vanishes".into()));
        }
        Ok(AlternatePair { a, b, factorization: None })
    }

    pub fn with_factorization(a: HomPoly, c: HomPoly, d: HomPoly) -> Result<Self, DualityError> {
        if c.degree() != 4 || d.degree() != 4 {
            return Err(DualityError::DegenerateInput("need deg C = deg D = 4".into()));
        }
        let mut p = Self::new(a, &c * &d)?;
        p.factorization = Some((c, d));
        Ok(p)
    }

    pub fn model(&self) -> WeierstrassModel<Rational> {
        two_torsion(-&self.a, self.b.clone(), 2)
    }
}

/// Translation by the 2-torsion section: `(A, B) -> (-2A, A^2 - 4B)`.
pub fn vgs_dual(p: &AlternatePair) -> AlternatePair {
    let a = p.a.scale(&qf(-2, 1));
    let b = &(&p.a * &p.a) - &p.b.scale(&qf(4, 1));
    AlternatePair { a, b, factorization: None }
}

/// Coefficients of `C U^2 - A UV + D V^2` after swapping the ruling, and the
/// relative Jacobian of the other elliptic pencil.
#[derive(Clone, Debug, PartialEq)]
pub struct RulingSwapData {
    pub c: HomPoly,
    pub a: HomPoly,
    pub d: HomPoly,
    /// `coeffs[i]` is the quadratic form in `(U, V)` multiplying `s^i t^(4-i)`.
    pub coeffs: [HomPoly; 5],
    pub f: HomPoly,
    pub g: HomPoly,
    /// `y^2 = x^3 + U^2V^2 f x + U^3V^3 g`.
    pub y_tilde: WeierstrassModel<Rational>,
}

impl RulingSwapData {
    /// Both sides of the defining identity as bi-forms in `(s,t), (U,V)`.
    pub fn identity_sides(&self) -> (BiHomPoly, BiHomPoly) {
        let uv = Vars::CAP_UV;
        let lhs = BiForm::sum_of_products(&[
            (self.c.clone(), mono(uv, 2, 0)),
            (-&self.a, mono(uv, 2, 1)),
            (self.d.clone(), mono(uv, 2, 2)),
        ]);
        let terms: Vec<_> = (0..5).map(|i| (mono(Vars::ST, 4, 4 - i), self.coeffs[i].clone())).collect();
        (lhs, BiForm::sum_of_products(&terms))
    }
}

pub fn ruling_swap(c: &HomPoly, a: &HomPoly, d: &HomPoly) -> RulingSwapData {
    let coeffs: [HomPoly; 5] = std::array::from_fn(|i| {
        Form::new(Vars::CAP_UV, vec![c.coeff(4 - i), -a.coeff(4 - i), d.coeff(4 - i)])
    });
    let (f, g) = hermite_pair(&coeffs);
    let uv = mono(Vars::CAP_UV, 2, 1);
    let uv2 = &uv * &uv;
    let y_tilde = short(&uv2 * &f, &(&uv2 * &uv) * &g, 2);
    RulingSwapData { c: c.clone(), a: a.clone(), d: d.clone(), coeffs, f, g, y_tilde }
}

/// The double quadric `w^2 = C u^4 - A u^2v^2 + D v^4` together with the
/// Jacobian `y^2 = x^3 + f(u^2,v^2) x + g(u^2,v^2)` of its second pencil.
#[derive(Clone, Debug, PartialEq)]
pub struct GSurface {
    pub branch: BiHomPoly,
    pub y: WeierstrassModel<Rational>,
    pub swap: RulingSwapData,
}

pub fn g_surface(p: &AlternatePair) -> Result<GSurface, DualityError> {
    let (c, d) = p.factorization.as_ref().ok_or(DualityError::MissingFactorization)?;
    let branch = BiForm::sum_of_products(&[
        (c.clone(), mono(Vars::UV, 4, 0)),
        (-&p.a, mono(Vars::UV, 4, 2)),
        (d.clone(), mono(Vars::UV, 4, 4)),
    ]);
    let swap = ruling_swap(c, &p.a, d);
    let y = short(swap.f.at_squares().with_vars(Vars::UV), swap.g.at_squares().with_vars(Vars::UV), 2);
    Ok(GSurface { branch, y, swap })
}

/// The two-parameter family of double quadrics and the Jacobian model of
/// their first pencil.
#[derive(Clone, Debug, PartialEq)]
pub struct TwoParamFamily {
    /// `(U - d0 V)(dinf U - V)(C U^2 - A UV + D V^2)`.
    pub branch: BiHomPoly,
    pub model: WeierstrassModel<Rational>,
    /// `(d0 dinf - 1)^2 (C + dinf^2 D - dinf A)^2 (d0^2 C + D - d0 A)^2 (A^2 - 4CD)`.
    pub delta: HomPoly,
}

pub fn two_param_family(
    c: &HomPoly,
    a: &HomPoly,
    d: &HomPoly,
    d0: &Rational,
    dinf: &Rational,
) -> Result<TwoParamFamily, DualityError> {
    check_unit(d0, dinf)?;
    let uv = Vars::CAP_UV;
    let l = &Form::linear(uv, Rational::one(), -d0.clone()) * &Form::linear(uv, dinf.clone(), -Rational::one());
    let branch = BiForm::sum_of_products(&[
        (c.clone(), &l * &mono(uv, 2, 0)),
        (-a, &l * &mono(uv, 2, 1)),
        (d.clone(), &l * &mono(uv, 2, 2)),
    ]);
    let (a2n, p, q) = moduli_involution(a, c, d, d0, dinf)?;
    let model = two_torsion(-&a2n, &p * &q, 2);
    let k = d0.clone() * dinf.clone() - Rational::one();
    let disc = &(a * a) - &(c * d).scale(&qf(4, 1));
    let delta = (&(&(&p * &p) * &(&q * &q)) * &disc).scale(&(k.clone() * k));
    Ok(TwoParamFamily { branch, model, delta })
}

/// `(A, C, D) -> (2d0 C + 2dinf D - (1 + d0 dinf) A, C + dinf^2 D - dinf A, d0^2 C + D - d0 A)`.
pub fn moduli_involution(
    a: &HomPoly,
    c: &HomPoly,
    d: &HomPoly,
    d0: &Rational,
    dinf: &Rational,
) -> Result<(HomPoly, HomPoly, HomPoly), DualityError> {
    check_unit(d0, dinf)?;
    let two = qf(2, 1);
    let one = Rational::one();
    let a1 = &(&c.scale(&(two.clone() * d0)) + &d.scale(&(two * dinf))) - &a.scale(&(one + d0.clone() * dinf.clone()));
    let c1 = &(c + &d.scale(&(dinf.clone() * dinf.clone()))) - &a.scale(dinf);
    let d1 = &(&c.scale(&(d0.clone() * d0.clone())) + d) - &a.scale(d0);
    Ok((a1, c1, d1))
}

/// Members of the rank-14 subfamilies built from `f` of degree 2 and `g`
/// of degree 3.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Subfamily {
    /// `f((u^2-v^2)^2, (u^2+v^2)^2)`, `g(...)`.
    Z,
    /// `(u^2-v^2)^2 f(u^2,v^2)`, `(u^2-v^2)^3 g(u^2,v^2)`.
    YSub,
    /// `U^2V^2(U-V)^2 f`, `U^3V^3(U-V)^3 g`.
    YTildeSub,
    /// `(U-V)^2 f`, `(U-V)^3 g`, weight one.
    Res,
}

pub fn subfamily_models(kind: Subfamily, f: &HomPoly, g: &HomPoly) -> Result<WeierstrassModel<Rational>, DualityError> {
    if f.degree() != 2 || g.degree() != 3 {
        return Err(DualityError::DegenerateInput("need deg f = 2, deg g = 3".into()));
    }
    let one = Rational::one();
    let (f, g) = (f.clone().with_vars(Vars::CAP_UV), g.clone().with_vars(Vars::CAP_UV));
    let m = match kind {
        Subfamily::Z => {
            let diff = Form::new(Vars::UV, vec![one.clone(), Rational::zero(), -one.clone()]);
            let sum = Form::new(Vars::UV, vec![one.clone(), Rational::zero(), one]);
            let (p, q) = (&diff * &diff, &sum * &sum);
            short(f.subst(&p, &q), g.subst(&p, &q), 2)
        }
        Subfamily::YSub => {
            let l = Form::new(Vars::UV, vec![one.clone(), Rational::zero(), -one]);
            let l2 = &l * &l;
            let fs = f.at_squares().with_vars(Vars::UV);
            let gs = g.at_squares().with_vars(Vars::UV);
            short(&l2 * &fs, &(&l2 * &l) * &gs, 2)
        }
        Subfamily::YTildeSub => {
            let l = &mono(Vars::CAP_UV, 2, 1) * &Form::linear(Vars::CAP_UV, one.clone(), -one);
            let l2 = &l * &l;
            short(&l2 * &f, &(&l2 * &l) * &g, 2)
        }
        Subfamily::Res => {
            let l = Form::linear(Vars::CAP_UV, one.clone(), -one);
            let l2 = &l * &l;
            short(&l2 * &f, &(&l2 * &l) * &g, 1)
        }
    };
    invariants(&m)?;
    Ok(m)
}
