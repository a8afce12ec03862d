mod common;

use common::*;
use k3kit::exactpoly::{
    discriminant_univ, gcd_poly, parse_hom, parse_hom_with_degree, rational_roots, refine_against, resultant,
    squarefree_split, HomPoly as GHom, MPoly as GM, Poly, PolyError, Vars,
};
use k3kit::field::{q, qf};
use k3kit::{HomPoly, Rational, UniPoly};
use num_rational::Ratio;
use num_traits::{One, Zero};
use rand::Rng;

fn up(cs: &[i64]) -> UniPoly {
    Poly::from_ints(cs)
}

fn hp(text: &str) -> HomPoly {
    parse_hom(text, Vars::ST).unwrap()
}

fn as_set(v: &[(HomPoly, u32)]) -> Vec<(String, u32)> {
    let mut out: Vec<(String, u32)> = v.iter().map(|(f, m)| (f.to_string(), *m)).collect();
    out.sort();
    out
}

#[test]
fn gcd_example() {
    let a = &(&up(&[-1, 1]) * &up(&[-1, 1])) * &up(&[2, 1]);
    let b = &up(&[-1, 1]) * &up(&[3, 1]);
    assert_eq!(gcd_poly(&a, &b), up(&[-1, 1]));
    assert!(gcd_poly(&UniPoly::zero(), &UniPoly::zero()).is_zero());
}

#[test]
fn squarefree_examples() {
    let split = squarefree_split(&hp("s^3*t^6 - s^2*t^7")).unwrap();
    assert_eq!(as_set(&split.factors), as_set(&[(hp("s"), 2), (hp("t"), 6), (hp("s - t"), 1)]));
    assert!(split.unit.is_one());

    let split = squarefree_split(&hp("s^8 - t^8")).unwrap();
    assert_eq!(as_set(&split.factors), vec![("s^8 - t^8".to_string(), 1)]);

    let split = squarefree_split(&hp("s^2 + t^2").pow(3)).unwrap();
    assert_eq!(as_set(&split.factors), vec![("s^2 + t^2".to_string(), 3)]);

    assert_eq!(squarefree_split(&HomPoly::zero(Vars::ST, 3)), Err(PolyError::ZeroPolynomial));
}

#[test]
fn resultant_examples() {
    assert_eq!(resultant(&up(&[1, 0, 1]), &up(&[-1, 0, 1])), q(4));
    assert_eq!(resultant(&up(&[-2, 1]), &up(&[-3, 1])).abs_sub_one(), true);
    let p = up(&[3, -1, 4, 1]);
    assert!(resultant(&p, &p).is_zero());
}

trait AbsOne {
    fn abs_sub_one(&self) -> bool;
}
impl AbsOne for Rational {
    fn abs_sub_one(&self) -> bool {
        self == &q(1) || self == &q(-1)
    }
}

#[test]
fn discriminant_examples() {
    assert_eq!(discriminant_univ(&up(&[0, -4, 0, 1])).unwrap(), q(256));
    assert_eq!(discriminant_univ(&up(&[1, 0, 0, 0, 1])).unwrap(), q(256));
    assert_eq!(discriminant_univ(&up(&[1, 1])), Err(PolyError::DegreeTooLow { degree: 1, needed: 2 }));
    let mut r = rng(3);
    for _ in 0..50 {
        let f = rand_q(&mut r);
        let g = rand_q(&mut r);
        let p = Poly::new(vec![g.clone(), f.clone(), q(0), q(1)]);
        assert_eq!(discriminant_univ(&p).unwrap(), -q(4) * f.clone() * f.clone() * f - q(27) * g.clone() * g);
    }
}

#[test]
fn refine_examples() {
    let out = refine_against(&[(hp("s^2 - s*t"), 1)], &hp("s"));
    assert_eq!(as_set(&out), as_set(&[(hp("s"), 1), (hp("s - t"), 1)]));
    let target = hp("s - t").pow(3);
    let out = refine_against(&[(hp("s^2 - 3*s*t + 2*t^2"), 1)], &target);
    assert_eq!(as_set(&out), as_set(&[(hp("s - t"), 1), (hp("s - 2*t"), 1)]));
}

#[test]
fn refine_separates_multiplicities() {
    // s has valuation 1, (s - t) valuation 2, (s + t) valuation 0 in q.
    let f = hp("s^3 - s*t^2");
    let qq = &hp("s") * &hp("s - t").pow(2);
    let out = refine_against(&[(f, 4)], &qq);
    assert_eq!(out.len(), 3);
    for (piece, m) in &out {
        assert_eq!(*m, 4);
        assert_eq!(piece.degree(), 1);
    }
    let vals: Vec<u32> = out.iter().map(|(p, _)| qq.valuation(p).unwrap()).collect();
    let mut sorted = vals.clone();
    sorted.sort();
    assert_eq!(sorted, vec![0, 1, 2]);
}

#[test]
fn parser_accepts_and_rejects() {
    let p = parse_hom("3/4*s^2*t - t^3 + 2*s^3", Vars::ST).unwrap();
    assert_eq!(p.coeffs(), &[q(2), qf(3, 4), q(0), q(-1)]);
    assert_eq!(p.to_string(), "2*s^3 + 3/4*s^2*t - t^3");
    assert_eq!(parse_hom("s^4 \u{2212} t^4", Vars::ST).unwrap(), hp("s^4 - t^4"));
    let err = parse_hom("s^2 + s*t + t", Vars::ST).unwrap_err();
    assert_eq!(err.column, 13);
    assert!(parse_hom("s^2 + w", Vars::ST).is_err());
    assert!(parse_hom("1/0*s", Vars::ST).is_err());
    assert!(parse_hom("", Vars::ST).is_err());
    let z = parse_hom_with_degree("0", Vars::ST, 4).unwrap();
    assert!(z.is_zero() && z.degree() == 4);
    assert!(parse_hom_with_degree("s^2", Vars::ST, 3).is_err());
}

#[test]
fn rational_roots_found() {
    // (2x - 3)(x + 5)(7x^2 + 1)
    let p = &(&up(&[-3, 2]) * &up(&[5, 1])) * &up(&[1, 0, 7]);
    assert_eq!(rational_roots(&p), vec![q(-5), qf(3, 2)]);
    let big = &up(&[-1_000_000_007, 1]) * &up(&[123_456_789, 1000]);
    assert_eq!(rational_roots(&big), vec![qf(-123_456_789, 1000), q(1_000_000_007)]);
    assert!(rational_roots(&up(&[2, 0, 1])).is_empty());
    assert_eq!(rational_roots(&up(&[0, 0, 1])), vec![q(0)]);
}

#[test]
fn generic_over_small_rationals() {
    type R = Ratio<i64>;
    let a: Poly<R> = &(&Poly::from_ints(&[-1, 1]) * &Poly::from_ints(&[-1, 1])) * &Poly::from_ints(&[2, 1]);
    let b: Poly<R> = &Poly::from_ints(&[-1, 1]) * &Poly::from_ints(&[3, 1]);
    assert_eq!(a.gcd(&b), Poly::from_ints(&[-1, 1]));
    let p: Poly<R> = Poly::from_ints(&[1, 0, 0, 0, 1]);
    assert_eq!(p.discriminant().unwrap(), R::from_integer(256));
    let h: GHom<R> = GHom::from_ints(Vars::ST, &[0, 0, 1, -1]);
    let split = h.squarefree_split().unwrap();
    assert_eq!(split.factors.len(), 2);
}

#[test]
fn resultant_matches_sylvester_and_is_multiplicative() {
    let mut r = rng(11);
    for _ in 0..100 {
        let dp = r.gen_range(1..5);
        let dq = r.gen_range(1..5);
        let dr = r.gen_range(1..5);
        let p = rand_uni(&mut r, dp);
        let qq = rand_uni(&mut r, dq);
        let rr = rand_uni(&mut r, dr);
        assert_eq!(resultant(&p, &qq), sylvester_resultant(&p, &qq));
        assert_eq!(resultant(&(&p * &qq), &rr), resultant(&p, &rr) * resultant(&qq, &rr));
    }
}

#[test]
fn gcd_divides_inputs() {
    let mut r = rng(12);
    for _ in 0..100 {
        let (dc, da, db) = (r.gen_range(0..3), r.gen_range(0..4), r.gen_range(0..4));
        let c = rand_uni(&mut r, dc);
        let a = &rand_uni(&mut r, da) * &c;
        let b = &rand_uni(&mut r, db) * &c;
        let g = gcd_poly(&a, &b);
        assert!(g.divides(&a) && g.divides(&b));
        assert!(c.monic().divides(&g));
    }
}

#[test]
fn squarefree_reconstructs() {
    let mut r = rng(13);
    for _ in 0..200 {
        let mut p = HomPoly::constant(Vars::ST, rand_nonzero_q(&mut r));
        for _ in 0..r.gen_range(1..4) {
            let deg = r.gen_range(1..3);
            let f = rand_hom(&mut r, Vars::ST, deg);
            if f.is_zero() {
                continue;
            }
            p = &p * &f.pow(r.gen_range(1..4));
        }
        let split = squarefree_split(&p).unwrap();
        let mut back = HomPoly::constant(Vars::ST, split.unit.clone());
        for (i, (f, m)) in split.factors.iter().enumerate() {
            back = &back * &f.pow(*m);
            let df = f.dehomogenize();
            if df.degree().unwrap_or(0) > 0 {
                assert!(df.gcd(&df.derivative()).degree() == Some(0), "factor not square-free");
            }
            for (g, _) in &split.factors[i + 1..] {
                assert_eq!(f.gcd(g).degree(), 0, "factors not coprime");
            }
        }
        assert_eq!(back, p);
    }
}

#[test]
fn discriminant_is_shift_invariant() {
    let mut r = rng(14);
    let p = rand_uni(&mut r, 5);
    let d = discriminant_univ(&p).unwrap();
    for _ in 0..100 {
        let c = Rational::new(r.gen_range(-50..50).into(), r.gen_range(1..9).into());
        assert_eq!(discriminant_univ(&p.shift(&c)).unwrap(), d);
    }
}

#[test]
fn homogenize_round_trip() {
    let mut r = rng(15);
    for _ in 0..100 {
        let deg = r.gen_range(0..7);
        let p = rand_uni(&mut r, deg);
        let extra = r.gen_range(0..3);
        let h = HomPoly::homogenize(Vars::ST, &p, deg + extra);
        assert_eq!(h.dehomogenize(), p);
        assert_eq!(h.t_order(), Some(extra));
    }
}

#[test]
fn substitution_agrees_with_multivariate() {
    let mut r = rng(16);
    for _ in 0..20 {
        let p = rand_hom(&mut r, Vars::ST, 3);
        let a = rand_hom(&mut r, Vars::UV, 2);
        let b = rand_hom(&mut r, Vars::UV, 2);
        let direct = p.subst(&a, &b).to_mpoly(2, 0, 1);
        let via = p.to_mpoly(2, 0, 1).subst(&[a.to_mpoly(2, 0, 1), b.to_mpoly(2, 0, 1)]);
        assert_eq!(direct, via);
        let x: GM<Rational> = GM::var(2, 0);
        assert_eq!((&x * &x).total_degree(), Some(2));
    }
}

#[test]
fn exact_division_respects_degree() {
    let p = hp("s^2*t");
    assert_eq!(p.exact_div(&hp("t")), Some(hp("s^2")));
    assert_eq!(p.exact_div(&hp("s")), Some(hp("s*t")));
    assert_eq!(p.exact_div(&hp("s - t")), None);
    assert_eq!(hp("s^3").valuation(&hp("s")), Some(3));
    assert_eq!(HomPoly::zero(Vars::ST, 2).valuation(&hp("s")), None);
    let one = HomPoly::one(Vars::ST);
    assert!(!one.is_zero() && Rational::one() == one.coeff(0));
}
