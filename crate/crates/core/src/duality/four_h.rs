use num_traits::{One, Zero};

use crate::elliptic::WeierstrassModel;
use crate::exactpoly::{rational_roots, HomPoly as Form, Poly, Vars};
use crate::field::{qf, rational_sqrt};
use crate::{HomPoly, Rational, UniPoly};

use super::{model, DualityError};

/// Plane coordinates `(Z2, Z3)` carrying the reconstructed cubic.
pub const Z_VARS: Vars = Vars("Z2", "Z3");

/// Four curves `rho_1 s U + rho_2 U + rho_3 s + rho_4 = 0` of bidegree
/// `(1,1)`; `rho[k][j]` is `rho^(k+1)_(j+1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct FourHData {
    pub rho: [[Rational; 4]; 4],
}

impl FourHData {
    pub fn from_ints(rho: [[i64; 4]; 4]) -> Self {
        FourHData { rho: rho.map(|row| row.map(|x| Rational::from_integer(x.into()))) }
    }

    /// Curve `k` is `U m_k(s) + n_k(s)`.
    fn m(&self, k: usize) -> UniPoly {
        Poly::new(vec![self.rho[k][1].clone(), self.rho[k][0].clone()])
    }

    fn n(&self, k: usize) -> UniPoly {
        Poly::new(vec![self.rho[k][3].clone(), self.rho[k][2].clone()])
    }

    /// `P^(ij)` for `1 <= i, j <= 4`: eliminating `U` from curves `i` and `j`.
    pub fn p(&self, i: usize, j: usize) -> UniPoly {
        let (i, j) = (i - 1, j - 1);
        &(&self.m(i) * &self.n(j)) - &(&self.n(i) * &self.m(j))
    }

    /// `P^(ij)` as a binary quadric in `(s, t)`.
    pub fn p_form(&self, i: usize, j: usize) -> HomPoly {
        Form::homogenize(Vars::ST, &self.p(i, j), 2)
    }

    /// The three genericity conditions: irreducible curves, two distinct
    /// intersection points per pair, no common point of three curves.
    pub fn check_genericity(&self) -> Result<(), DualityError> {
        for k in 0..4 {
            let r = &self.rho[k];
            if (r[0].clone() * r[3].clone() - r[1].clone() * r[2].clone()).is_zero() {
                return Err(DualityError::GenericityViolated(format!("curve H{} is reducible", k + 1)));
            }
        }
        for i in 1..=4 {
            for j in i + 1..=4 {
                let p = self.p_form(i, j);
                let disc = p.coeff(1) * p.coeff(1) - qf(4, 1) * p.coeff(0) * p.coeff(2);
                if p.is_zero() || disc.is_zero() {
                    return Err(DualityError::GenericityViolated(format!(
                        "H{i} and H{j} do not meet in two distinct points"
                    )));
                }
            }
        }
        for i in 1..=4 {
            for j in 1..=4 {
                for k in j + 1..=4 {
                    if i == j || i == k {
                        continue;
                    }
                    if quadric_resultant(&self.p_form(i, j), &self.p_form(i, k)).is_zero() {
                        let mut idx = [i, j, k];
                        idx.sort();
                        return Err(DualityError::GenericityViolated(format!(
                            "H{}, H{} and H{} share a point",
                            idx[0], idx[1], idx[2]
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Resultant of two binary quadrics `p0 s^2 + p1 st + p2 t^2`, `q0 s^2 + ...`.
fn quadric_resultant(p: &HomPoly, q: &HomPoly) -> Rational {
    let (p0, p1, p2) = (p.coeff(0), p.coeff(1), p.coeff(2));
    let (q0, q1, q2) = (q.coeff(0), q.coeff(1), q.coeff(2));
    let a = p0.clone() * q2.clone() - p2.clone() * q0.clone();
    a.clone() * a - (p0 * q1.clone() - p1.clone() * q0) * (p1 * q2 - p2 * q1)
}

#[derive(Clone, Debug, PartialEq)]
pub struct FourHSurface {
    /// `Y^2 = X (X - P12 P34) (X - P13 P24)`.
    pub model: WeierstrassModel<Rational>,
    pub p12p34: HomPoly,
    pub p13p24: HomPoly,
    /// `a[i][j-1]`: `A_i = a_(i,1) xi + a_(i,2) mu + a_(i,3) nu`, the
    /// coefficient of `s^i` in the genus-one fibration over `xi`.
    pub a: [[Rational; 3]; 5],
}

impl FourHSurface {
    /// `A = P12 P34 + P13 P24`, `C = P12 P34 - P13 P24`, so that
    /// `(A + C)/2 = P12 P34` and `(A - C)/2 = P13 P24`.
    pub fn induced_ac(&self) -> (HomPoly, HomPoly) {
        (&self.p12p34 + &self.p13p24, &self.p12p34 - &self.p13p24)
    }

    /// `A_i` as a polynomial in `xi`.
    pub fn a_poly(&self, i: usize, mu: &Rational, nu: &Rational) -> UniPoly {
        let r = &self.a[i];
        Poly::new(vec![r[1].clone() * mu.clone() + r[2].clone() * nu.clone(), r[0].clone()])
    }
}

pub fn four_h_surface(rho: &FourHData) -> Result<FourHSurface, DualityError> {
    rho.check_genericity()?;
    let p12p34 = &rho.p_form(1, 2) * &rho.p_form(3, 4);
    let p13p24 = &rho.p_form(1, 3) * &rho.p_form(2, 4);
    let a2 = -&(&p12p34 + &p13p24);
    let a4 = &p12p34 * &p13p24;
    let m = model(a2, a4, Form::zero(Vars::ST, 12), 2);
    // coefficient of s^i is entry 4 - i of a quartic form
    let a = std::array::from_fn(|i| {
        let (x, y) = (p12p34.coeff(4 - i), p13p24.coeff(4 - i));
        [x.clone() - y.clone(), x, -y]
    });
    Ok(FourHSurface { model: m, p12p34, p13p24, a })
}

/// Parameters of `Y^2 = (Z1 - Z2 + mu Z3)(Z1 - Z2 + nu Z3) Z3 C(Z1, Z2, Z3)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ThreeLinesCubicParams {
    pub mu: Rational,
    pub nu: Rational,
    pub c0: Rational,
    pub c1: Rational,
    pub d0: Rational,
    pub d1: Rational,
    pub d2: Rational,
    pub e0: Rational,
    pub e1: Rational,
    pub e2: Rational,
}

impl ThreeLinesCubicParams {
    /// Order: `mu, nu, c0, c1, d0, d1, d2, e0, e1, e2`.
    pub fn from_ints(v: [i64; 10]) -> Self {
        let q = |i: usize| Rational::from_integer(v[i].into());
        ThreeLinesCubicParams {
            mu: q(0),
            nu: q(1),
            c0: q(2),
            c1: q(3),
            d0: q(4),
            d1: q(5),
            d2: q(6),
            e0: q(7),
            e1: q(8),
            e2: q(9),
        }
    }

    pub fn check(&self) -> Result<(), DualityError> {
        let bad = |m: &str| Err(DualityError::ParameterConstraintViolated(m.into()));
        if self.c1.is_zero() {
            return bad("c1 = 0");
        }
        if (self.c1.clone() + self.d2.clone()).is_zero() {
            return bad("c1 + d2 = 0");
        }
        if self.mu == self.nu {
            return bad("mu = nu");
        }
        Ok(())
    }

    /// The reduced form with `c1 = 1` and `mu + nu = (1 + d2/2)(c0 + e2)`, `d2 != -1`.
    pub fn is_normalized(&self) -> bool {
        let one = Rational::one();
        self.c1.is_one()
            && self.d1.is_zero()
            && self.d2 != -one.clone()
            && self.mu.clone() + self.nu.clone()
                == (one + self.d2.clone() * qf(1, 2)) * (self.c0.clone() + self.e2.clone())
    }

    /// Coefficients of the standard fibration in the shape of
    /// [`ThreeI0StarModel`].
    pub fn tilde(&self) -> ThreeI0StarModel {
        let k = self.c1.clone() + self.d2.clone();
        let k2 = k.clone() * k.clone();
        ThreeI0StarModel {
            mu: self.mu.clone(),
            nu: self.nu.clone(),
            c: [
                self.c0.clone() + self.d1.clone() + self.e2.clone(),
                -(self.c1.clone() + qf(2, 1) * self.d2.clone()),
            ],
            d: [
                k.clone() * (self.d0.clone() + self.e1.clone()),
                -k.clone() * (self.d1.clone() + qf(2, 1) * self.e2.clone()),
                k * self.d2.clone(),
            ],
            e: [
                k2.clone() * self.e0.clone(),
                -k2.clone() * self.e1.clone(),
                k2 * self.e2.clone(),
                Rational::zero(),
            ],
        }
    }
}

/// `Y^2 = X^3 + m (c1 t + c0) X^2 + m^2 (d2 t^2 + d1 t + d0) X + m^3 (e3 t^3 + ... + e0)`
/// with `m = (t + mu)(t + nu)`; coefficient arrays are indexed by the power of `t`.
#[derive(Clone, Debug, PartialEq)]
pub struct ThreeI0StarModel {
    pub mu: Rational,
    pub nu: Rational,
    pub c: [Rational; 2],
    pub d: [Rational; 3],
    pub e: [Rational; 4],
}

impl ThreeI0StarModel {
    fn m(&self) -> UniPoly {
        &Poly::new(vec![self.mu.clone(), Rational::one()]) * &Poly::new(vec![self.nu.clone(), Rational::one()])
    }

    /// Weight-two model over `[t : z]`.
    pub fn model(&self) -> WeierstrassModel<Rational> {
        let m = self.m();
        let h = |p: UniPoly, d: usize| Form::homogenize(Vars::TZ, &p, d);
        let a2 = &m * &Poly::new(self.c.to_vec());
        let a4 = &m.pow(2) * &Poly::new(self.d.to_vec());
        let a6 = &m.pow(3) * &Poly::new(self.e.to_vec());
        model(h(a2, 4), h(a4, 8), h(a6, 12), 2)
    }

    /// Read the coefficients back from a weight-two model over `[t : z]`.
    pub fn from_model(w: &WeierstrassModel<Rational>, mu: &Rational, nu: &Rational) -> Option<Self> {
        if w.weight != 2 {
            return None;
        }
        let mut out = ThreeI0StarModel {
            mu: mu.clone(),
            nu: nu.clone(),
            c: Default::default(),
            d: Default::default(),
            e: Default::default(),
        };
        let m = out.m();
        let quot = |p: &HomPoly, k: u32, len: usize| -> Option<Vec<Rational>> {
            let q = p.dehomogenize().exact_div(&m.pow(k))?;
            if q.degree().is_some_and(|d| d >= len) {
                return None;
            }
            Some((0..len).map(|i| q.coeff(i)).collect())
        };
        out.c = quot(&w.a2, 1, 2)?.try_into().ok()?;
        out.d = quot(&w.a4, 2, 3)?.try_into().ok()?;
        out.e = quot(&w.a6, 3, 4)?.try_into().ok()?;
        Some(out)
    }

    /// Shift `X -> X + rho t (t + mu)(t + nu)`.
    pub fn shifted(&self, rho: &Rational) -> Self {
        let [c0, c1] = self.c.clone();
        let [d0, d1, d2] = self.d.clone();
        let [e0, e1, e2, e3] = self.e.clone();
        let r = rho.clone();
        let r2 = r.clone() * r.clone();
        let three = qf(3, 1);
        let two = qf(2, 1);
        ThreeI0StarModel {
            mu: self.mu.clone(),
            nu: self.nu.clone(),
            c: [c0.clone(), c1.clone() + three.clone() * r.clone()],
            d: [
                d0.clone(),
                d1.clone() + two.clone() * r.clone() * c0.clone(),
                d2.clone() + two * r.clone() * c1.clone() + three * r2.clone(),
            ],
            e: [
                e0,
                e1 + r.clone() * d0,
                e2 + r.clone() * d1 + r2.clone() * c0,
                e3 + r.clone() * d2 + r2.clone() * c1 + r2 * r,
            ],
        }
    }
}

pub fn three_lines_cubic_model(p: &ThreeLinesCubicParams) -> Result<WeierstrassModel<Rational>, DualityError> {
    p.check()?;
    Ok(p.tilde().model())
}

/// Every parameter set produced by the normalization, over all admissible
/// choices of the shift root `rho` and the sign of `c1`. Roots are tried
/// with `rho = 0` first, then in increasing order; `c1` takes the
/// nonnegative square root first.
pub fn normalize_three_i0star_all(w: &ThreeI0StarModel) -> Result<Vec<ThreeLinesCubicParams>, DualityError> {
    let cubic = Poly::new(vec![w.e[3].clone(), w.d[2].clone(), w.c[1].clone(), Rational::one()]);
    let mut roots = rational_roots(&cubic);
    roots.sort();
    roots.dedup();
    if let Some(i) = roots.iter().position(|r| r.is_zero()) {
        let z = roots.remove(i);
        roots.insert(0, z);
    }
    if roots.is_empty() {
        return Err(DualityError::NoRationalCubicRoot);
    }
    let mut out = Vec::new();
    let mut saw_square = false;
    for rho in roots {
        let s = w.shifted(&rho);
        let [c0t, c1t] = s.c.clone();
        let [d0t, d1t, d2t] = s.d.clone();
        let [e0t, e1t, e2t, _] = s.e.clone();
        let Some(root) = rational_sqrt(&(c1t.clone() * c1t.clone() - qf(4, 1) * d2t)) else {
            continue;
        };
        saw_square = true;
        let mut signs = vec![root.clone()];
        if !root.is_zero() {
            signs.push(-root);
        }
        for c1 in signs {
            let k = c1.clone() - c1t.clone();
            if k.is_zero() {
                continue;
            }
            let k2 = k.clone() * k.clone();
            let two = qf(2, 1);
            let four = qf(4, 1);
            let p = ThreeLinesCubicParams {
                mu: s.mu.clone(),
                nu: s.nu.clone(),
                c0: two.clone() * d1t.clone() / k.clone() + four.clone() * e2t.clone() / k2.clone() + c0t.clone(),
                d0: two.clone() * d0t.clone() / k.clone() + four.clone() * e1t.clone() / k2.clone(),
                e0: four.clone() * e0t.clone() / k2.clone(),
                d1: -two * d1t.clone() / k.clone() - qf(8, 1) * e2t.clone() / k2.clone(),
                e1: -four.clone() * e1t.clone() / k2.clone(),
                d2: -(c1.clone() + c1t.clone()) / qf(2, 1),
                e2: four * e2t.clone() / k2,
                c1,
            };
            if p.check().is_ok() {
                out.push(p);
            }
        }
    }
    if out.is_empty() {
        return Err(if saw_square { DualityError::DivisionGuard } else { DualityError::NonSquareDiscriminant });
    }
    Ok(out)
}

/// First admissible parameter set of [`normalize_three_i0star_all`].
pub fn normalize_three_i0star(w: &ThreeI0StarModel) -> Result<ThreeLinesCubicParams, DualityError> {
    Ok(normalize_three_i0star_all(w)?.remove(0))
}

#[derive(Clone, Debug, PartialEq)]
pub struct RelativeJacobian4H {
    pub surface: FourHSurface,
    /// `X^3 + m A2 X^2 + m^2 (A1A3 - 4A0A4) X + m^3 (A1^2A4 + A0A3^2 - 4A0A2A4)`.
    pub jacobian: ThreeI0StarModel,
    pub params: ThreeLinesCubicParams,
    pub normalized_model: WeierstrassModel<Rational>,
    /// `0 = Z1^3 + f(Z2, Z3) Z1 + g(Z2, Z3)`.
    pub cubic_f: HomPoly,
    pub cubic_g: HomPoly,
}

/// Relative Jacobian of the genus-one fibration over `xi` whose fibres
/// degenerate at `xi = -mu`, `xi = -nu`, then its three-lines normal form
/// and the plane cubic `E`.
pub fn relative_jacobian_4h(
    rho: &FourHData,
    mu: &Rational,
    nu: &Rational,
) -> Result<RelativeJacobian4H, DualityError> {
    if mu == nu {
        return Err(DualityError::ParameterConstraintViolated("mu = nu".into()));
    }
    let surface = four_h_surface(rho)?;
    let a: Vec<UniPoly> = (0..5).map(|i| surface.a_poly(i, mu, nu)).collect();
    let d = &(&a[1] * &a[3]) - &(&a[0] * &a[4]).scale(&qf(4, 1));
    let e = &(&(&(&a[1] * &a[1]) * &a[4]) + &(&(&a[0] * &a[3]) * &a[3])) - &(&(&a[0] * &a[2]) * &a[4]).scale(&qf(4, 1));
    let jacobian = ThreeI0StarModel {
        mu: mu.clone(),
        nu: nu.clone(),
        c: [a[2].coeff(0), a[2].coeff(1)],
        d: std::array::from_fn(|i| d.coeff(i)),
        e: std::array::from_fn(|i| e.coeff(i)),
    };
    let params = normalize_three_i0star(&jacobian)?;
    let normalized_model = three_lines_cubic_model(&params)?;
    let (cubic_f, cubic_g) = plane_cubic(&params);
    Ok(RelativeJacobian4H { surface, jacobian, params, normalized_model, cubic_f, cubic_g })
}

/// Drop the factor `m` from the normal form, depress the cubic in `X` and
/// move the base to `(U, V) = (-(t + nu z), -(t + mu z))`.
fn plane_cubic(p: &ThreeLinesCubicParams) -> (HomPoly, HomPoly) {
    let w = p.tilde();
    let h = |v: &[Rational]| Form::homogenize(Vars::TZ, &Poly::new(v.to_vec()), v.len() - 1);
    let (a, b, c) = (h(&w.c), h(&w.d), h(&w.e));
    let third = qf(1, 3);
    let f = &b - &(&a * &a).scale(&third);
    let g = &(&c - &(&a * &b).scale(&third)) + &(&(&a * &a) * &a).scale(&qf(2, 27));
    let k = Rational::one() / (p.mu.clone() - p.nu.clone());
    let t = Form::new(Z_VARS, vec![-p.mu.clone() * k.clone(), p.nu.clone() * k.clone()]);
    let z = Form::new(Z_VARS, vec![k.clone(), -k]);
    (f.subst(&t, &z), g.subst(&t, &z))
}
