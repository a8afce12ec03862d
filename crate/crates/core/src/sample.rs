//! Random instances for the randomized suites. Coefficients are integers
//! drawn uniformly from `-9..=9`; a draw that fails the genericity gate of
//! its family is discarded and redrawn.

use num_traits::{One, Zero};
use rand::Rng;

use crate::duality::{
    relative_jacobian_4h, three_lines_cubic_model, AlternatePair, FourHData, RESData, RelativeJacobian4H,
    ThreeLinesCubicParams,
};
use crate::elliptic::{invariants, WeierstrassModel};
use crate::exactpoly::{HomPoly as Form, Poly, Vars};
use crate::hermite_aj::QuarticCurve;
use crate::{HomPoly, Rational};

pub const BOUND: i64 = 9;

pub fn coeff<R: Rng>(rng: &mut R) -> Rational {
    Rational::from_integer(rng.gen_range(-BOUND..=BOUND).into())
}

pub fn nonzero<R: Rng>(rng: &mut R) -> Rational {
    loop {
        let c = coeff(rng);
        if !c.is_zero() {
            return c;
        }
    }
}

pub fn form<R: Rng>(rng: &mut R, vars: Vars, deg: usize) -> HomPoly {
    Form::new(vars, (0..=deg).map(|_| coeff(rng)).collect())
}

/// Nonzero with no repeated linear factor, counting the root at infinity.
pub fn is_squarefree(h: &HomPoly) -> bool {
    !h.is_zero() && h.squarefree_split().is_ok_and(|s| s.factors.iter().all(|(_, e)| *e == 1))
}

pub fn coprime(a: &HomPoly, b: &HomPoly) -> bool {
    a.gcd(b).degree() == 0
}

fn squarefree_coprime(parts: &[&HomPoly]) -> bool {
    parts.iter().all(|p| is_squarefree(p))
        && (0..parts.len()).all(|i| (i + 1..parts.len()).all(|j| coprime(parts[i], parts[j])))
}

fn nonzero_at_poles(h: &HomPoly) -> bool {
    !h.coeff(0).is_zero() && !h.coeff(h.degree()).is_zero()
}

fn draw<R: Rng, T>(rng: &mut R, mut f: impl FnMut(&mut R) -> Option<T>) -> T {
    loop {
        if let Some(x) = f(rng) {
            return x;
        }
    }
}

/// Rational elliptic surface in `(U, V)` with twelve distinct `I1` fibres.
pub fn res<R: Rng>(rng: &mut R) -> RESData {
    draw(rng, |r| {
        let data = RESData::new(form(r, Vars::CAP_UV, 4), form(r, Vars::CAP_UV, 6)).ok()?;
        is_squarefree(&invariants(&data.model()).ok()?.delta).then_some(data)
    })
}

/// `(d0, dinf)` with smooth fibres of `r` over `[d0:1]`, `[1:dinf]`, `[1:1]`.
pub fn cover_params<R: Rng>(rng: &mut R, r: &RESData) -> (Rational, Rational) {
    let delta = invariants(&r.model()).expect("RES is nondegenerate").delta;
    let one = Rational::one();
    draw(rng, |g| {
        let (d0, di) = (coeff(g), coeff(g));
        let ok = !d0.is_one()
            && !di.is_one()
            && !(d0.clone() * di.clone()).is_one()
            && !delta.eval(&d0, &one).is_zero()
            && !delta.eval(&one, &di).is_zero()
            && !delta.eval(&one, &one).is_zero();
        ok.then_some((d0, di))
    })
}

/// `(A, B)` with `B` and `A^2 - 4B` square-free and coprime.
pub fn alternate_pair<R: Rng>(rng: &mut R) -> AlternatePair {
    draw(rng, |r| {
        let p = AlternatePair::new(form(r, Vars::ST, 4), form(r, Vars::ST, 8)).ok()?;
        let disc = &(&p.a * &p.a) - &p.b.scale(&Rational::from_integer(4.into()));
        squarefree_coprime(&[&p.b, &disc]).then_some(p)
    })
}

/// `(C, A, D)` with `CD` and `A^2 - 4CD` square-free and coprime.
pub fn cad<R: Rng>(rng: &mut R) -> (HomPoly, HomPoly, HomPoly) {
    draw(rng, |r| {
        let (c, a, d) = (form(r, Vars::ST, 4), form(r, Vars::ST, 4), form(r, Vars::ST, 4));
        let cd = &c * &d;
        let disc = &(&a * &a) - &cd.scale(&Rational::from_integer(4.into()));
        squarefree_coprime(&[&cd, &disc]).then_some((c, a, d))
    })
}

/// Symmetric `(alpha, gamma, delta)`: `gamma = (g2, a2, g0)`, `alpha = (a2, a1, a0)`,
/// `delta = (g0, a0, d0)`, with `gamma delta` and `alpha^2 - 4 gamma delta`
/// square-free, coprime and nonzero at `0` and `infinity`.
pub fn table2_forms<R: Rng>(rng: &mut R) -> (HomPoly, HomPoly, HomPoly) {
    draw(rng, |r| {
        let [a2, a1, a0, g2, g0, d0] = std::array::from_fn(|_| coeff(r));
        let alpha = Form::new(Vars::XY, vec![a2.clone(), a1, a0.clone()]);
        let gamma = Form::new(Vars::XY, vec![g2, a2, g0.clone()]);
        let delta = Form::new(Vars::XY, vec![g0, a0, d0]);
        let gd = &gamma * &delta;
        let disc = &(&alpha * &alpha) - &gd.scale(&Rational::from_integer(4.into()));
        (squarefree_coprime(&[&gd, &disc]) && nonzero_at_poles(&gd) && nonzero_at_poles(&disc))
            .then_some((alpha, gamma, delta))
    })
}

/// `(A, C)` with `A - C`, `A + C`, `C` square-free and pairwise coprime.
pub fn table3_forms<R: Rng>(rng: &mut R) -> (HomPoly, HomPoly) {
    draw(rng, |r| {
        let (a, c) = (form(r, Vars::ST, 4), form(r, Vars::ST, 4));
        squarefree_coprime(&[&(&a - &c), &(&a + &c), &c]).then_some((a, c))
    })
}

/// Four curves passing the three genericity conditions, and in addition
/// with `P12, P34` (and likewise the other two complementary pairs)
/// coprime, so no fibre collects two intersection points.
pub fn four_h<R: Rng>(rng: &mut R) -> FourHData {
    draw(rng, |r| {
        let rho = FourHData { rho: std::array::from_fn(|_| std::array::from_fn(|_| coeff(r))) };
        rho.check_genericity().ok()?;
        let complementary = [((1, 2), (3, 4)), ((1, 3), (2, 4)), ((1, 4), (2, 3))];
        complementary
            .iter()
            .all(|&((i, j), (k, l))| coprime(&rho.p_form(i, j), &rho.p_form(k, l)))
            .then_some(rho)
    })
}

/// A generic four-curve configuration whose relative Jacobian normalizes
/// over the rationals and has reduced discriminant away from the three
/// `I0*` fibres. Returns the result and the number of draws used.
pub fn four_h_rational<R: Rng>(rng: &mut R, mu: &Rational, nu: &Rational) -> (RelativeJacobian4H, usize) {
    let mut tries = 0;
    loop {
        tries += 1;
        let rho = four_h(rng);
        if let Ok(rj) = relative_jacobian_4h(&rho, mu, nu) {
            if reduced_away_from_lines(&rj.normalized_model, &rj.params.mu, &rj.params.nu) {
                return (rj, tries);
            }
        }
    }
}

/// Which coefficients of the cubic vanish.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CubicSpecialization {
    Generic,
    D2,
    D2E2,
    D2E2E1,
}

/// Parameters with the chosen coefficients set to zero, the next one in
/// the chain `d2, e2, e1, e0` nonzero (specializations also take the
/// normalized `d1 = 0`, without which `e1 = 0` does not deepen the fibre at
/// infinity), and the discriminant of the standard
/// fibration square-free away from `t = -mu`, `t = -nu`, `t = infinity`.
pub fn three_lines<R: Rng>(rng: &mut R, kind: CubicSpecialization) -> ThreeLinesCubicParams {
    draw(rng, |r| {
        let mut p = ThreeLinesCubicParams {
            mu: coeff(r),
            nu: coeff(r),
            c0: coeff(r),
            c1: coeff(r),
            d0: coeff(r),
            d1: coeff(r),
            d2: coeff(r),
            e0: coeff(r),
            e1: coeff(r),
            e2: coeff(r),
        };
        let zero = Rational::zero();
        let (vanish, next): (Vec<&mut Rational>, Rational) = match kind {
            CubicSpecialization::Generic => (vec![], p.d2.clone()),
            CubicSpecialization::D2 => (vec![&mut p.d2], p.e2.clone()),
            CubicSpecialization::D2E2 => (vec![&mut p.d2, &mut p.e2], p.e1.clone()),
            CubicSpecialization::D2E2E1 => (vec![&mut p.d2, &mut p.e2, &mut p.e1], p.e0.clone()),
        };
        for v in vanish {
            *v = zero.clone();
        }
        if kind != CubicSpecialization::Generic {
            p.d1 = zero.clone();
        }
        if next.is_zero() {
            return None;
        }
        let m = three_lines_cubic_model(&p).ok()?;
        reduced_away_from_lines(&m, &p.mu, &p.nu).then_some(p)
    })
}

/// The discriminant of a standard fibration over `(t, z)` is square-free
/// once the `I0*` fibres at `t = -mu`, `t = -nu` (and infinity) are removed.
fn reduced_away_from_lines(m: &WeierstrassModel<Rational>, mu: &Rational, nu: &Rational) -> bool {
    let Ok(inv) = invariants(m) else {
        return false;
    };
    let delta = inv.delta.dehomogenize();
    let lines = &Poly::new(vec![mu.clone(), Rational::one()]) * &Poly::new(vec![nu.clone(), Rational::one()]);
    let Some(rest) = delta.exact_div(&lines.pow(6)) else {
        return false;
    };
    rest.gcd(&rest.derivative()).degree() == Some(0) && rest.gcd(&lines).degree() == Some(0)
}

/// `f` of degree 2 and `g` of degree 3 in `(U, V)` with `4f^3 + 27g^2`
/// square-free and nonzero at `U = 0`, `V = 0` and `U = V`.
pub fn subfamily_fg<R: Rng>(rng: &mut R) -> (HomPoly, HomPoly) {
    draw(rng, |r| {
        let (f, g) = (form(r, Vars::CAP_UV, 2), form(r, Vars::CAP_UV, 3));
        let d = &(&(&f * &f) * &f).scale(&Rational::from_integer(4.into()))
            + &(&g * &g).scale(&Rational::from_integer(27.into()));
        let one = Rational::one();
        let zero = Rational::zero();
        let ok = is_squarefree(&d)
            && !d.eval(&zero, &one).is_zero()
            && !d.eval(&one, &zero).is_zero()
            && !d.eval(&one, &one).is_zero();
        ok.then_some((f, g))
    })
}

/// Quartic `w^2 = P(x)` with `a4 != 0` and nonzero discriminant.
pub fn quartic<R: Rng>(rng: &mut R) -> QuarticCurve {
    draw(rng, |r| {
        let h = QuarticCurve::new(std::array::from_fn(|_| coeff(r)));
        (!h.a[4].is_zero() && !h.discriminant().is_zero()).then_some(h)
    })
}

/// Smooth quartic through a rational point `(x0, w0)` with `w0 != 0`:
/// `a0` is solved from the other coefficients.
pub fn quartic_with_point<R: Rng>(rng: &mut R) -> (QuarticCurve, Rational, Rational) {
    draw(rng, |r| {
        let (x0, w0) = (coeff(r), nonzero(r));
        let mut a: [Rational; 5] = std::array::from_fn(|_| coeff(r));
        a[0] = Rational::zero();
        let rest = Poly::new(a.to_vec()).eval(&x0);
        a[0] = w0.clone() * w0.clone() - rest;
        let h = QuarticCurve::new(a);
        (!h.a[4].is_zero() && !h.discriminant().is_zero()).then_some((h, x0, w0))
    })
}
