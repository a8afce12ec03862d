use num_traits::Zero;

use crate::exactpoly::{rational_roots, HomPoly, Poly};
use crate::{Rational, UniPoly};

use super::{invariants, WeierstrassModel};

/// Sections `X = x(s,t)` of degree `2k` with `x^3 + a2 x^2 + a4 x + a6 = 0`,
/// i.e. the nonzero 2-torsion sections of the fibration.
///
/// Any such root is a polynomial. At a base point `s0` with nonzero
/// discriminant its value is a simple rational root of the fibre cubic, so
/// each candidate is lifted as a power series in `s - s0` to order `2k` and
/// then checked exactly.
pub fn two_torsion_sections(m: &WeierstrassModel<Rational>) -> Vec<HomPoly<Rational>> {
    let Ok(inv) = invariants(m) else {
        return Vec::new();
    };
    let n = 2 * m.weight;
    let a = [m.a6.dehomogenize(), m.a4.dehomogenize(), m.a2.dehomogenize(), Poly::one()];
    let delta = inv.delta.dehomogenize();
    let s0 = (0i64..)
        .flat_map(|k| [k, -k - 1])
        .map(|k| Rational::from_integer(k.into()))
        .find(|x| !delta.eval(x).is_zero())
        .expect("a nonzero polynomial has a non-root");
    let shifted: Vec<UniPoly> = a.iter().map(|p| p.shift(&s0)).collect();
    let fibre = Poly::new(shifted.iter().map(|p| p.coeff(0)).collect());
    let dfibre = fibre.derivative();
    let back = Poly::new(vec![-s0.clone(), Rational::from_integer(1.into())]);
    let mut out = Vec::new();
    for r in rational_roots(&fibre) {
        let slope = dfibre.eval(&r);
        let mut x = Poly::constant(r);
        for j in 1..=n {
            let val = eval_cubic(&shifted, &x);
            let c = val.coeff(j);
            if !c.is_zero() {
                x = &x - &Poly::monomial(c / slope.clone(), j);
            }
        }
        let xs = x.compose(&back);
        if xs.degree().unwrap_or(0) <= n && eval_cubic(&a, &xs).is_zero() {
            out.push(HomPoly::homogenize(m.vars(), &xs, n));
        }
    }
    out
}

fn eval_cubic(a: &[UniPoly], x: &UniPoly) -> UniPoly {
    let mut acc = a[3].clone();
    for c in a[..3].iter().rev() {
        acc = &(&acc * x) + c;
    }
    acc
}
