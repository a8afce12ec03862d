mod common;

use common::*;
use k3kit::duality::*;
use k3kit::elliptic::{
    fiber_configuration, invariants, two_torsion_sections, FiberConfiguration, KodairaType, WeierstrassModel,
};
use k3kit::exactpoly::{discriminant_univ, parse_hom, HomPoly as Form, MPoly, Poly, Vars};
use k3kit::field::{q, qf};
use k3kit::hermite_aj::{jacobian_quartic, QuarticCurve};
use k3kit::sample::{self, CubicSpecialization};
use k3kit::{HomPoly, Rational};
use num_traits::{One, Zero};

use KodairaType::*;

type Model = WeierstrassModel<Rational>;

fn pw(x: &Rational, e: i32) -> Rational {
    num_traits::Pow::pow(x, e)
}

fn config(m: &Model) -> FiberConfiguration<Rational> {
    fiber_configuration(m).expect("nondegenerate model")
}

fn assert_config(m: &Model, want: &[(usize, KodairaType)], euler: u32) {
    let c = config(m);
    assert!(c.matches(want), "got {c}, want {want:?}");
    assert_eq!(c.total_euler, euler);
}

/// Product of the places of type `t`, scaled to lead with 1.
fn places(m: &Model, t: KodairaType) -> HomPoly {
    let c = config(m);
    let vars = m.vars();
    c.places_of(t).iter().fold(Form::one(vars), |acc, p| &acc * &p.factor).normalized()
}

/// Product of the distinct irreducible factors.
fn radical(h: &HomPoly) -> HomPoly {
    let s = h.squarefree_split().unwrap();
    s.factors.iter().fold(Form::one(h.vars()), |acc, (f, _)| &acc * f).normalized()
}

fn proportional(a: &HomPoly, b: &HomPoly) -> bool {
    !a.is_zero() && !b.is_zero() && a.normalized() == b.normalized()
}

fn hp(text: &str, vars: Vars) -> HomPoly {
    parse_hom(text, vars).unwrap()
}

/// Discriminant of the fibre cubic `x^3 + a2 x^2 + a4 x + a6` at one point,
/// times 16: the normalisation of the model discriminant.
fn fibre_delta(m: &Model, s: &Rational, t: &Rational) -> Rational {
    let cubic = Poly::new(vec![m.a6.eval(s, t), m.a4.eval(s, t), m.a2.eval(s, t), Rational::one()]);
    discriminant_univ(&cubic).unwrap() * q(16)
}

#[test]
fn base_change_doubles_degrees_and_gives_24_i1() {
    let mut r = rng(11);
    for _ in 0..20 {
        let res = sample::res(&mut r);
        let (d0, di) = sample::cover_params(&mut r, &res);
        let m = base_change_k3(&res, &d0, &di).unwrap();
        assert_eq!((m.a4.degree(), m.a6.degree()), (8, 12));
        assert_config(&m, &[(24, I(1))], 24);
    }
}

#[test]
fn base_change_at_zero_is_the_squaring_map() {
    let mut r = rng(12);
    let res = sample::res(&mut r);
    let m = base_change_k3(&res, &q(0), &q(0)).unwrap();
    // f(u^2, v^2): coefficient 2k of the pullback is coefficient k of f
    for k in 0..=8 {
        let want = if k % 2 == 0 { res.f.coeff(k / 2) } else { Rational::zero() };
        assert_eq!(m.a4.coeff(k), want);
    }
    for k in 0..=12 {
        let want = if k % 2 == 0 { res.g.coeff(k / 2) } else { Rational::zero() };
        assert_eq!(m.a6.coeff(k), want);
    }
}

#[test]
fn base_change_errors() {
    let mut r = rng(13);
    let res = sample::res(&mut r);
    assert_eq!(base_change_k3(&res, &q(2), &qf(1, 2)), Err(DualityError::UnitViolation));
    assert_eq!(base_change_k3(&res, &q(1), &q(3)), Err(DualityError::DegenerateCover));
    // move a root of the discriminant to [d0 : 1]
    let f = hp("U^4 - 3*V^4", Vars::CAP_UV);
    let g = hp("U^6 + 2*V^6", Vars::CAP_UV);
    let res = RESData::new(f, g).unwrap();
    let delta = invariants(&res.model()).unwrap().delta;
    assert!(delta.eval(&q(0), &q(1)).is_zero());
    assert_eq!(base_change_k3(&res, &q(0), &q(5)), Err(DualityError::SingularBranchFiber));
}

#[test]
fn twist_gives_two_i0_star_at_the_branch_points() {
    let mut r = rng(14);
    for _ in 0..20 {
        let res = sample::res(&mut r);
        let (d0, di) = sample::cover_params(&mut r, &res);
        let m = twist_model(&res, &d0, &di).unwrap();
        assert_config(&m, &[(2, IStar(0)), (12, I(1))], 24);
        let l0 = Form::linear(Vars::CAP_UV, q(1), -d0.clone());
        let l1 = Form::linear(Vars::CAP_UV, di.clone(), q(-1));
        assert_eq!(places(&m, IStar(0)), (&l0 * &l1).normalized());
        assert!(two_torsion_sections(&m).is_empty());
    }
    let res = sample::res(&mut r);
    assert_eq!(twist_model(&res, &q(3), &qf(1, 3)), Err(DualityError::UnitViolation));
}

#[test]
fn vgs_dual_discriminants_and_square() {
    let mut r = rng(15);
    for _ in 0..20 {
        let p = sample::alternate_pair(&mut r);
        let d = vgs_dual(&p);
        let disc = &(&p.a * &p.a) - &p.b.scale(&q(4));
        let dx = invariants(&p.model()).unwrap().delta;
        let dxp = invariants(&d.model()).unwrap().delta;
        assert_eq!(dx, (&(&p.b * &p.b) * &disc).scale(&q(16)));
        assert_eq!(dxp, (&(&disc * &disc) * &p.b).scale(&q(256)));
        // pointwise oracle for the model discriminant
        for (s, t) in [(q(1), q(2)), (q(-3), q(1)), (q(2), q(-5))] {
            assert_eq!(dx.eval(&s, &t), fibre_delta(&p.model(), &s, &t));
        }
        let dd = vgs_dual(&d);
        assert_eq!(dd.a, p.a.scale(&q(4)));
        assert_eq!(dd.b, p.b.scale(&q(16)));
        assert_config(&p.model(), &[(8, I(2)), (8, I(1))], 24);
        assert_config(&d.model(), &[(8, I(2)), (8, I(1))], 24);
        assert_eq!(places(&p.model(), I(2)), places(&d.model(), I(1)));
        assert_eq!(places(&p.model(), I(1)), places(&d.model(), I(2)));
    }
}

#[test]
fn vgs_dual_place_sets_swap_for_s8_minus_t8() {
    let a = hp("s^4", Vars::ST);
    let b = hp("s^8 - t^8", Vars::ST);
    let p = AlternatePair::new(a, b.clone()).unwrap();
    let d = vgs_dual(&p);
    assert_eq!(places(&p.model(), I(2)), b.normalized());
    assert_eq!(places(&p.model(), I(2)), places(&d.model(), I(1)));
    assert_eq!(places(&p.model(), I(1)), places(&d.model(), I(2)));
    assert_eq!(places(&d.model(), I(2)), hp("3*s^8 - 4*t^8", Vars::ST).normalized());
}

#[test]
fn ruling_swap_monomial_example() {
    let c = hp("s^4", Vars::ST);
    let a = Form::zero(Vars::ST, 4);
    let d = hp("t^4", Vars::ST);
    let rs = ruling_swap(&c, &a, &d);
    assert_eq!(rs.coeffs[4], hp("U^2", Vars::CAP_UV));
    assert_eq!(rs.coeffs[0], hp("V^2", Vars::CAP_UV));
    for i in 1..4 {
        assert!(rs.coeffs[i].is_zero());
    }
    assert_eq!(rs.f, hp("-4*U^2*V^2", Vars::CAP_UV));
    assert!(rs.g.is_zero());
}

#[test]
fn ruling_swap_identity_and_configuration() {
    let mut r = rng(16);
    for _ in 0..20 {
        let (c, a, d) = sample::cad(&mut r);
        let rs = ruling_swap(&c, &a, &d);
        let (lhs, rhs) = rs.identity_sides();
        assert_eq!(lhs, rhs);
        // pointwise: both sides and the Hermite pair of the numeric quartic
        let (s, t, u, v) = (rand_q(&mut r), rand_q(&mut r), rand_q(&mut r), rand_q(&mut r));
        let left = c.eval(&s, &t) * u.clone() * u.clone() - a.eval(&s, &t) * u.clone() * v.clone()
            + d.eval(&s, &t) * v.clone() * v.clone();
        let right = (0..5).fold(Rational::zero(), |acc, i| {
            acc + rs.coeffs[i].eval(&u, &v) * pw(&s, i as i32) * pw(&t, 4 - i as i32)
        });
        assert_eq!(left, right);
        let quartic = QuarticCurve::new(std::array::from_fn(|i| rs.coeffs[i].eval(&u, &v)));
        let e = jacobian_quartic(&quartic);
        assert_eq!((e.f, e.g), (rs.f.eval(&u, &v), rs.g.eval(&u, &v)));
        assert_config(&rs.y_tilde, &[(2, IStar(0)), (12, I(1))], 24);
    }
}

#[test]
fn g_surface_relations() {
    let mut r = rng(17);
    let p = sample::alternate_pair(&mut r);
    assert_eq!(g_surface(&p).unwrap_err(), DualityError::MissingFactorization);
    for _ in 0..10 {
        let (c, a, d) = sample::cad(&mut r);
        let p = AlternatePair::with_factorization(a.clone(), c.clone(), d.clone()).unwrap();
        let g = g_surface(&p).unwrap();
        let swapped = g_surface(&AlternatePair::with_factorization(a, d, c).unwrap()).unwrap();
        for _ in 0..5 {
            let pt: [Rational; 4] = std::array::from_fn(|_| rand_q(&mut r));
            assert_eq!(g.branch.eval(&pt[0], &pt[1], &pt[2], &pt[3]), swapped.branch.eval(&pt[0], &pt[1], &pt[3], &pt[2]));
        }
        let res = RESData::new(g.swap.f.clone(), g.swap.g.clone()).unwrap();
        if let Ok(y) = base_change_k3(&res, &q(0), &q(0)) {
            assert_eq!(y, g.y);
        }
        assert_eq!(config(&g.y).total_euler, 24);
    }
}

#[test]
fn two_param_family_discriminant() {
    let mut r = rng(18);
    for _ in 0..10 {
        let (c, a, d) = sample::cad(&mut r);
        let disc = &(&a * &a) - &(&c * &d).scale(&q(4));
        let mut i1_places = Vec::new();
        for _ in 0..2 {
            let (d0, di) = loop {
                let (x, y) = (rand_q(&mut r), rand_q(&mut r));
                if !(x.clone() * y.clone()).is_one() {
                    break (x, y);
                }
            };
            let fam = two_param_family(&c, &a, &d, &d0, &di).unwrap();
            let delta = invariants(&fam.model).unwrap().delta;
            assert!(proportional(&delta, &fam.delta));
            let k = d0.clone() * di.clone() - q(1);
            let base = two_param_base(&c, &a, &d, &d0, &di);
            assert_eq!(delta, base.scale(&(k.clone() * k * q(16))));
            let cfg = config(&fam.model);
            if cfg.count(I(1)) == 8 {
                i1_places.push(places(&fam.model, I(1)));
            }
        }
        for p in &i1_places {
            assert_eq!(*p, radical(&disc));
        }
    }
    assert_eq!(
        two_param_family(&Form::zero(Vars::ST, 4), &Form::zero(Vars::ST, 4), &Form::zero(Vars::ST, 4), &q(2), &qf(1, 2))
            .unwrap_err(),
        DualityError::UnitViolation
    );
}

/// `(C + dinf^2 D - dinf A)^2 (d0^2 C + D - d0 A)^2 (A^2 - 4CD)`, evaluated
/// directly from the inputs.
fn two_param_base(c: &HomPoly, a: &HomPoly, d: &HomPoly, d0: &Rational, di: &Rational) -> HomPoly {
    let p = &(c + &d.scale(&(di.clone() * di.clone()))) - &a.scale(di);
    let qq = &(&c.scale(&(d0.clone() * d0.clone())) + d) - &a.scale(d0);
    let disc = &(a * a) - &(c * d).scale(&q(4));
    &(&(&p * &p) * &(&qq * &qq)) * &disc
}

#[test]
fn two_param_family_at_origin_is_the_alternate_model() {
    let mut r = rng(19);
    let (c, a, d) = sample::cad(&mut r);
    let fam = two_param_family(&c, &a, &d, &q(0), &q(0)).unwrap();
    let alt = AlternatePair::with_factorization(a, c, d).unwrap().model();
    // x -> -x
    assert_eq!(fam.model.a2, -&alt.a2);
    assert_eq!(fam.model.a4, alt.a4);
    assert_eq!(fam.model.a6, -&alt.a6);
    // the branch (U)(-V)(...) differs from UV(...) by the sign absorbed in W -> iW
    let uv = Form::monomial(Vars::CAP_UV, 2, 1, q(1));
    let (c, a, d) = sample::cad(&mut r);
    let fam = two_param_family(&c, &a, &d, &q(0), &q(0)).unwrap();
    let quad = [Form::monomial(Vars::CAP_UV, 2, 0, q(1)), Form::monomial(Vars::CAP_UV, 2, 1, q(1)), Form::monomial(Vars::CAP_UV, 2, 2, q(1))];
    let direct = k3kit::exactpoly::BiHomPoly::sum_of_products(&[
        (c.clone(), &uv * &quad[0]),
        (-&a, &uv * &quad[1]),
        (d.clone(), &uv * &quad[2]),
    ]);
    assert_eq!(fam.branch, -&direct);
}

/// The involution on `(A, C, D)` with symbolic `d0`, `dinf`, written over
/// five variables `A, C, D, d0, dinf`.
fn involution_symbolic(x: &[MPoly<Rational>; 3], d0: &MPoly<Rational>, di: &MPoly<Rational>) -> [MPoly<Rational>; 3] {
    let two = MPoly::constant(5, q(2));
    let one = MPoly::constant(5, q(1));
    let [a, c, d] = x;
    let a1 = &(&(&(&two * d0) * c) + &(&(&two * di) * d)) - &(&(&one + &(d0 * di)) * a);
    let c1 = &(c + &(&(di * di) * d)) - &(di * a);
    let d1 = &(&(&(d0 * d0) * c) + d) - &(d0 * a);
    [a1, c1, d1]
}

#[test]
fn moduli_involution_squares_to_a_scalar() {
    let v = |i| MPoly::var(5, i);
    let x = [v(0), v(1), v(2)];
    let (d0, di) = (v(3), v(4));
    let once = involution_symbolic(&x, &d0, &di);
    let twice = involution_symbolic(&once, &d0, &di);
    let k = &(&d0 * &di) - &MPoly::constant(5, q(1));
    let k2 = &k * &k;
    for i in 0..3 {
        assert_eq!(twice[i], &k2 * &x[i]);
    }
    // A^2 - 4CD picks up the same scalar
    let disc = |y: &[MPoly<Rational>; 3]| &(&y[0] * &y[0]) - &(&(&y[1] * &y[2]).scale(&q(4)));
    assert_eq!(disc(&once), &k2 * &disc(&x));

    let mut r = rng(20);
    for _ in 0..20 {
        let (c, a, d) = sample::cad(&mut r);
        let (d0, di) = (rand_q(&mut r), rand_q(&mut r));
        if (d0.clone() * di.clone()).is_one() {
            continue;
        }
        let k = d0.clone() * di.clone() - q(1);
        let (a1, c1, e1) = moduli_involution(&a, &c, &d, &d0, &di).unwrap();
        let (a2, c2, e2) = moduli_involution(&a1, &c1, &e1, &d0, &di).unwrap();
        let k2 = k.clone() * k;
        assert_eq!((a2, c2, e2), (a.scale(&k2), c.scale(&k2), d.scale(&k2)));
    }
    let (c, a, d) = sample::cad(&mut r);
    assert_eq!(moduli_involution(&a, &c, &d, &q(0), &q(0)).unwrap(), (-&a, c.clone(), d.clone()));
    assert_eq!(moduli_involution(&a, &c, &d, &q(4), &qf(1, 4)), Err(DualityError::UnitViolation));
}

#[test]
fn table2_rows() {
    let mut r = rng(21);
    for _ in 0..20 {
        let (alpha, gamma, delta) = sample::table2_forms(&mut r);
        let t = table2_generate(&alpha, &gamma, &delta).unwrap();
        for (name, b) in t.branches() {
            assert!(b.agree(), "{name}");
        }
        // defining identity, pointwise
        let (s, tt, u, v) = (rand_q(&mut r), rand_q(&mut r), rand_q(&mut r), rand_q(&mut r));
        let lhs = gamma.eval(&s, &tt) * u.clone() * u.clone() + alpha.eval(&s, &tt) * u.clone() * v.clone()
            + delta.eval(&s, &tt) * v.clone() * v.clone();
        let rhs = t.c.eval(&u, &v) * s.clone() * s.clone() + t.a.eval(&u, &v) * s.clone() * tt.clone()
            + t.d.eval(&u, &v) * tt.clone() * tt.clone();
        assert_eq!(lhs, rhs);
        assert!(t.x.a6.is_zero());
        for m in [&t.x, &t.x_dual, &t.y, &t.y_dual] {
            assert_config(m, &[(8, I(2)), (8, I(1))], 24);
        }
        for m in [&t.x_tilde, &t.x_tilde_dual, &t.y_tilde, &t.y_tilde_dual] {
            assert_config(m, &[(2, IStar(0)), (4, I(2)), (4, I(1))], 24);
        }
        for m in [&t.r_tilde, &t.r_tilde_dual, &t.r, &t.r_dual] {
            assert_config(m, &[(4, I(2)), (4, I(1))], 12);
        }
        let gd = (&gamma * &delta).at_squares().with_vars(Vars::ST);
        assert_eq!(places(&t.x, I(2)), radical(&gd));
    }
    let a = hp("x^2 + y^2", Vars::XY);
    let g = hp("x^2 + 2*x*y + y^2", Vars::XY);
    let d = hp("x^2 + y^2", Vars::XY);
    assert_eq!(table2_generate(&a, &g, &d).unwrap_err(), DualityError::NormalizationViolated);
}

#[test]
fn table3_rows() {
    let mut r = rng(22);
    for _ in 0..20 {
        let (a, c) = sample::table3_forms(&mut r);
        let t = table3_generate(&a, &c).unwrap();
        let (s, tt, u, v) = (rand_q(&mut r), rand_q(&mut r), rand_q(&mut r), rand_q(&mut r));
        let lhs = a.eval(&s, &tt) * (u.clone() - v.clone()) / q(2) - c.eval(&s, &tt) * (u.clone() + v.clone()) / q(2);
        let rhs = (0..5).fold(Rational::zero(), |acc, i| {
            acc + t.coeffs[i].eval(&u, &v) * pw(&s, 4 - i as i32) * pw(&tt, i as i32)
        });
        assert_eq!(lhs, rhs);
        assert!(t.coeffs.iter().all(|h| h.degree() == 1));
        assert_eq!(t.x.a4, (&(&a * &a) - &(&c * &c)).scale(&qf(1, 4)));
        assert_config(&t.x, &[(12, I(2))], 24);
        let mut torsion: Vec<HomPoly> = two_torsion_sections(&t.x);
        torsion.sort_by_key(|h| h.to_string());
        let half = qf(1, 2);
        let mut want = vec![Form::zero(Vars::ST, 4), (&a + &c).scale(&half), (&a - &c).scale(&half)];
        want.sort_by_key(|h| h.to_string());
        assert_eq!(torsion, want);
        assert!(t.g_branch.agree());
        assert!(t.f_branch.agree());
        assert_eq!(t.g_dual_branch.second, -&t.g_dual_branch.first);
        assert_config(&t.x_dual, &[(4, I(4)), (8, I(1))], 24);
    }
    let a = hp("s^4 + t^4", Vars::ST);
    assert!(matches!(table3_generate(&a, &a), Err(DualityError::DegenerateInput(_))));
}

#[test]
fn table3_chl_rows() {
    let mut r = rng(23);
    let mut checked = 0;
    while checked < 20 {
        let (a, c) = sample::table3_forms(&mut r);
        let t = table3_generate(&a, &c).unwrap();
        let d = &(&(&t.f * &t.f) * &t.f).scale(&q(4)) + &(&t.g * &t.g).scale(&q(27));
        if !sample::is_squarefree(&d) {
            continue;
        }
        checked += 1;
        assert_config(&t.r, &[(1, IStar(0)), (6, I(1))], 12);
        assert_config(&t.y, &[(2, IStar(0)), (12, I(1))], 24);
        assert_config(&t.y_tilde, &[(3, IStar(0)), (6, I(1))], 24);
        assert_config(&t.y_dual, &[(24, I(1))], 24);
        assert_config(&t.r_dual, &[(12, I(1))], 12);
    }
}

#[test]
fn four_h_surface_has_twelve_i2() {
    let mut r = rng(24);
    for _ in 0..20 {
        let rho = sample::four_h(&mut r);
        let s = four_h_surface(&rho).unwrap();
        assert_config(&s.model, &[(12, I(2))], 24);
        let mut torsion: Vec<String> = two_torsion_sections(&s.model).iter().map(|h| h.to_string()).collect();
        torsion.sort();
        let mut want: Vec<String> =
            [Form::zero(Vars::ST, 4), s.p12p34.clone(), s.p13p24.clone()].iter().map(|h| h.to_string()).collect();
        want.sort();
        assert_eq!(torsion, want);
        // P^(ij) is the resultant in U of curves i and j
        let x = rand_q(&mut r);
        for (i, j) in [(1, 2), (3, 4), (1, 3), (2, 4)] {
            let h = |k: usize| {
                let row = &rho.rho[k - 1];
                Poly::new(vec![row[2].clone() * x.clone() + row[3].clone(), row[0].clone() * x.clone() + row[1].clone()])
            };
            assert_eq!(rho.p(i, j).eval(&x), sylvester_resultant_linear(&h(i), &h(j)));
        }
        // the genus-one fibration over xi
        let (xi, mu, nu) = (rand_q(&mut r), rand_q(&mut r), rand_q(&mut r));
        let lhs: Vec<Rational> = (0..5).map(|i| s.a_poly(i, &mu, &nu).eval(&xi)).collect();
        let p1 = &rho.p(1, 2) * &rho.p(3, 4);
        let p2 = &rho.p(1, 3) * &rho.p(2, 4);
        let rhs = &(&(&p1 - &p2).scale(&xi) + &p1.scale(&mu)) - &p2.scale(&nu);
        for i in 0..5 {
            assert_eq!(lhs[i], rhs.coeff(i));
        }
    }
}

fn sylvester_resultant_linear(p: &Poly<Rational>, qq: &Poly<Rational>) -> Rational {
    if p.degree() == Some(1) && qq.degree() == Some(1) {
        sylvester_resultant(p, qq)
    } else {
        p.coeff(1) * qq.coeff(0) - p.coeff(0) * qq.coeff(1)
    }
}

#[test]
fn four_h_genericity_gates() {
    let proportional_rows = FourHData::from_ints([[1, 2, 3, 5], [2, 4, 6, 10], [1, -1, 2, 7], [3, 1, -2, 1]]);
    assert!(matches!(four_h_surface(&proportional_rows), Err(DualityError::GenericityViolated(_))));
    let reducible = FourHData::from_ints([[1, 2, 2, 4], [1, 0, 0, 1], [1, -1, 2, 7], [3, 1, -2, 1]]);
    let err = four_h_surface(&reducible).unwrap_err();
    assert_eq!(err, DualityError::GenericityViolated("curve H1 is reducible".into()));
}

#[test]
fn three_lines_configurations() {
    let mut r = rng(25);
    let cases = [
        (CubicSpecialization::Generic, vec![(3, IStar(0)), (6, I(1))]),
        (CubicSpecialization::D2, vec![(1, IStar(1)), (2, IStar(0)), (5, I(1))]),
        (CubicSpecialization::D2E2, vec![(1, IStar(2)), (2, IStar(0)), (4, I(1))]),
        (CubicSpecialization::D2E2E1, vec![(1, IStar(3)), (2, IStar(0)), (3, I(1))]),
    ];
    for (kind, want) in cases {
        for _ in 0..20 {
            let p = sample::three_lines(&mut r, kind);
            let m = three_lines_cubic_model(&p).unwrap();
            assert_config(&m, &want, 24);
            let at = |t: Rational| Form::linear(Vars::TZ, q(1), t);
            let mut i0 = vec![at(p.mu.clone()), at(p.nu.clone())];
            if kind == CubicSpecialization::Generic {
                i0.push(Form::t(Vars::TZ));
            }
            let prod = i0.iter().fold(Form::one(Vars::TZ), |acc, f| &acc * f);
            assert_eq!(places(&m, IStar(0)), prod.normalized());
        }
    }
}

#[test]
fn three_lines_discriminant_shape() {
    let mut r = rng(26);
    for _ in 0..10 {
        let p = sample::three_lines(&mut r, CubicSpecialization::Generic);
        let m = three_lines_cubic_model(&p).unwrap();
        let delta = invariants(&m).unwrap().delta.dehomogenize();
        let lines = &Poly::new(vec![p.mu.clone(), q(1)]) * &Poly::new(vec![p.nu.clone(), q(1)]);
        let k = p.c1.clone() + p.d2.clone();
        let rest = delta.exact_div(&lines.pow(6)).unwrap().scale(&(q(1) / (k.clone() * k)));
        assert_eq!(rest.degree(), Some(6));
        // leading coefficient c1^2 d2^2 up to the normalisation of Delta
        let lead = p.c1.clone() * p.c1.clone() * p.d2.clone() * p.d2.clone();
        assert!(!(rest.lead() / lead).is_zero());
    }
    let bad = ThreeLinesCubicParams::from_ints([1, 2, 3, 0, 1, 1, 1, 1, 1, 1]);
    assert!(matches!(three_lines_cubic_model(&bad), Err(DualityError::ParameterConstraintViolated(_))));
    let bad = ThreeLinesCubicParams::from_ints([1, 1, 3, 2, 1, 1, 1, 1, 1, 1]);
    assert!(matches!(three_lines_cubic_model(&bad), Err(DualityError::ParameterConstraintViolated(_))));
}

#[test]
fn normalization_round_trip() {
    let mut r = rng(27);
    for _ in 0..30 {
        let p = sample::three_lines(&mut r, CubicSpecialization::Generic);
        let m = three_lines_cubic_model(&p).unwrap();
        let w = ThreeI0StarModel::from_model(&m, &p.mu, &p.nu).unwrap();
        assert_eq!(w, p.tilde());
        let all = normalize_three_i0star_all(&w).unwrap();
        assert!(all.contains(&p), "{p:?} not among {all:?}");
        for b in &all {
            assert!(is_shift_of(&w, b));
        }
        let rho = nonzero_small(&mut r);
        let shifted = w.shifted(&rho);
        assert!(is_shift_of(&shifted, &normalize_three_i0star(&shifted).unwrap()));
        assert!(normalize_three_i0star_all(&shifted).unwrap().contains(&p));
    }
}

/// The standard model of `p` is `w` after the shift `X -> X + rho m`,
/// with `rho` read off from the linear coefficient of `a2`.
fn is_shift_of(w: &ThreeI0StarModel, p: &ThreeLinesCubicParams) -> bool {
    let back = ThreeI0StarModel::from_model(&three_lines_cubic_model(p).unwrap(), &w.mu, &w.nu).unwrap();
    let rho = (back.c[1].clone() - w.c[1].clone()) / q(3);
    back.e[3].is_zero() && w.shifted(&rho) == back
}

fn nonzero_small<R: rand::Rng>(r: &mut R) -> Rational {
    loop {
        let x = q(r.gen_range(-3..=3));
        if !x.is_zero() {
            return x;
        }
    }
}

#[test]
fn normalization_gates() {
    let model = |c: [i64; 2], d: [i64; 3], e: [i64; 4]| ThreeI0StarModel {
        mu: q(1),
        nu: q(2),
        c: c.map(q),
        d: d.map(q),
        e: e.map(q),
    };
    // rho^3 = 2 has no rational root
    assert_eq!(normalize_three_i0star(&model([1, 0], [1, 1, 0], [1, 1, 1, -2])), Err(DualityError::NoRationalCubicRoot));
    // rho = 0 is the only root and c1^2 = -4
    assert_eq!(normalize_three_i0star(&model([1, 0], [1, 1, 1], [1, 1, 1, 0])), Err(DualityError::NonSquareDiscriminant));
    // e3 = d2 = 0: rho = 0, and only c1 = -c1~ avoids the division by zero
    let w = model([3, 2], [1, 5, 0], [1, 1, 1, 0]);
    let all = normalize_three_i0star_all(&w).unwrap();
    assert_eq!(all[0].c1, q(-2));
    assert!(all.iter().all(|p| is_shift_of(&w, p)));
}

#[test]
fn relative_jacobian_matches_table3_hermite_pair() {
    let mut r = rng(28);
    let (mu, nu) = (q(0), q(1));
    let mut total = 0;
    for _ in 0..10 {
        let (rj, tries) = sample::four_h_rational(&mut r, &mu, &nu);
        total += tries;
        assert_config(&rj.normalized_model, &[(3, IStar(0)), (6, I(1))], 24);
        let (a, c) = rj.surface.induced_ac();
        let t3 = table3_generate(&a, &c).unwrap();
        assert_eq!(rj.cubic_f, t3.f);
        assert_eq!(rj.cubic_g, t3.g);
    }
    assert!(total < 100_000);
    let bad = FourHData::from_ints([[1, 2, 3, 5], [2, 4, 6, 10], [1, -1, 2, 7], [3, 1, -2, 1]]);
    assert!(relative_jacobian_4h(&bad, &mu, &nu).is_err());
}

#[test]
fn subfamilies() {
    let mut r = rng(29);
    for _ in 0..20 {
        let (f, g) = sample::subfamily_fg(&mut r);
        let res = subfamily_models(Subfamily::Res, &f, &g).unwrap();
        assert_eq!(res.weight, 1);
        assert_config(&res, &[(1, IStar(0)), (6, I(1))], 12);
        let yt = subfamily_models(Subfamily::YTildeSub, &f, &g).unwrap();
        assert_config(&yt, &[(3, IStar(0)), (6, I(1))], 24);
        let y = subfamily_models(Subfamily::YSub, &f, &g).unwrap();
        assert_config(&y, &[(2, IStar(0)), (12, I(1))], 24);
        assert_eq!(places(&y, IStar(0)), hp("u^2 - v^2", Vars::UV));
        let z = subfamily_models(Subfamily::Z, &f, &g).unwrap();
        assert_eq!(config(&z).total_euler, 24);
    }
    let f = Form::zero(Vars::CAP_UV, 2);
    let g = Form::zero(Vars::CAP_UV, 3);
    assert_eq!(subfamily_models(Subfamily::Res, &f, &g), Err(DualityError::DegenerateModel));
}
