use num_traits::One;

use crate::elliptic::WeierstrassModel;
use crate::exactpoly::{BiHomPoly as BiForm, HomPoly as Form, Vars};
use crate::field::qf;
use crate::{BiHomPoly, HomPoly, Rational};

use super::{hermite_pair, mono, short, two_torsion, DualityError};

/// Branch locus of a double quadric written once in each ruling. Both
/// sides use the same variable order, so they can be compared directly.
#[derive(Clone, Debug, PartialEq)]
pub struct DualRuling {
    pub first: BiHomPoly,
    pub second: BiHomPoly,
}

impl DualRuling {
    pub fn agree(&self) -> bool {
        self.first == self.second
    }
}

/// Rows of the table attached to symmetric `(gamma, alpha, delta)`.
/// Model fields ending in `_dual` are the van Geemen-Sarti partners.
#[derive(Clone, Debug, PartialEq)]
pub struct Table2 {
    pub c: HomPoly,
    pub a: HomPoly,
    pub d: HomPoly,
    pub x: WeierstrassModel<Rational>,
    pub x_dual: WeierstrassModel<Rational>,
    pub y: WeierstrassModel<Rational>,
    pub y_dual: WeierstrassModel<Rational>,
    pub x_tilde: WeierstrassModel<Rational>,
    pub x_tilde_dual: WeierstrassModel<Rational>,
    pub y_tilde: WeierstrassModel<Rational>,
    pub y_tilde_dual: WeierstrassModel<Rational>,
    pub r_tilde: WeierstrassModel<Rational>,
    pub r_tilde_dual: WeierstrassModel<Rational>,
    pub r: WeierstrassModel<Rational>,
    pub r_dual: WeierstrassModel<Rational>,
    pub g: DualRuling,
    pub f: DualRuling,
    pub g_tilde: DualRuling,
    pub f_tilde: DualRuling,
}

impl Table2 {
    pub fn models(&self) -> Vec<(&'static str, &WeierstrassModel<Rational>)> {
        vec![
            ("X", &self.x),
            ("X'", &self.x_dual),
            ("Y", &self.y),
            ("Y'", &self.y_dual),
            ("X~", &self.x_tilde),
            ("X~'", &self.x_tilde_dual),
            ("Y~", &self.y_tilde),
            ("Y~'", &self.y_tilde_dual),
            ("R~", &self.r_tilde),
            ("R~'", &self.r_tilde_dual),
            ("R", &self.r),
            ("R'", &self.r_dual),
        ]
    }

    pub fn branches(&self) -> Vec<(&'static str, &DualRuling)> {
        vec![("G", &self.g), ("F", &self.f), ("G~", &self.g_tilde), ("F~", &self.f_tilde)]
    }
}

fn is_normalized(alpha: &HomPoly, gamma: &HomPoly, delta: &HomPoly) -> bool {
    [alpha, gamma, delta].iter().all(|p| p.degree() == 2)
        && gamma.coeff(1) == alpha.coeff(0)
        && delta.coeff(0) == gamma.coeff(2)
        && delta.coeff(1) == alpha.coeff(2)
}

/// The pair `(x^3 + a2 x^2 + a4 x)` and its dual `(x^3 - 2a2 x^2 + (a2^2 - 4a4) x)`.
fn dual_pair(a2: HomPoly, a4: HomPoly, weight: usize) -> (WeierstrassModel<Rational>, WeierstrassModel<Rational>) {
    let b2 = a2.scale(&qf(-2, 1));
    let b4 = &(&a2 * &a2) - &a4.scale(&qf(4, 1));
    (two_torsion(a2, a4, weight), two_torsion(b2, b4, weight))
}

/// All rows for `gamma(S,T) U^2 + alpha(S,T) UV + delta(S,T) V^2`, where the
/// three quadrics satisfy `gamma = (g2, a2, g0)`, `alpha = (a2, a1, a0)`,
/// `delta = (g0, a0, d0)` in coefficient order.
pub fn table2_generate(alpha: &HomPoly, gamma: &HomPoly, delta: &HomPoly) -> Result<Table2, DualityError> {
    if !is_normalized(alpha, gamma, delta) {
        return Err(DualityError::NormalizationViolated);
    }
    let col = |k: usize| Form::new(Vars::CAP_UV, vec![gamma.coeff(k), alpha.coeff(k), delta.coeff(k)]);
    let (c, a, d) = (col(0), col(1), col(2));

    let on = |p: &HomPoly, v: Vars| p.clone().with_vars(v);
    let (al_st, gd_st) = (on(alpha, Vars::CAP_ST), on(&(gamma * delta), Vars::CAP_ST));
    let cd = &c * &d;

    let (x, x_dual) = dual_pair(al_st.at_squares().with_vars(Vars::ST), gd_st.at_squares().with_vars(Vars::ST), 2);
    let (y_dual, y) = dual_pair(a.at_squares().with_vars(Vars::UV), cd.at_squares().with_vars(Vars::UV), 2);
    let st = mono(Vars::CAP_ST, 2, 1);
    let (x_tilde, x_tilde_dual) = dual_pair(&st * &al_st, &(&st * &st) * &gd_st, 2);
    let uv = mono(Vars::CAP_UV, 2, 1);
    let (y_tilde_dual, y_tilde) = dual_pair(&uv * &a, &(&uv * &uv) * &cd, 2);
    let (r_tilde, r_tilde_dual) = dual_pair(al_st.clone(), gd_st.clone(), 1);
    let (r_dual, r) = dual_pair(a.clone(), cd.clone(), 1);

    // G: first pencil in (s,t), second in (u,v)
    let sq = |p: &HomPoly, v: Vars| p.at_squares().with_vars(v);
    let u4 = [mono(Vars::UV, 4, 0), mono(Vars::UV, 4, 2), mono(Vars::UV, 4, 4)];
    let s4 = [mono(Vars::ST, 4, 0), mono(Vars::ST, 4, 2), mono(Vars::ST, 4, 4)];
    let ruling_st = [gamma, alpha, delta];
    let ruling_uv = [&c, &a, &d];
    let g = DualRuling {
        first: sum(&ruling_st.map(|p| sq(p, Vars::ST)), &u4),
        second: sum(&s4, &ruling_uv.map(|p| sq(p, Vars::UV))),
    };
    let uv_quad = [mono(Vars::CAP_UV, 2, 0), mono(Vars::CAP_UV, 2, 1), mono(Vars::CAP_UV, 2, 2)].map(|m| &uv * &m);
    let f = DualRuling {
        first: sum(&ruling_st.map(|p| sq(p, Vars::ST)), &uv_quad),
        second: sum(&s4, &ruling_uv.map(|p| &uv * p)),
    };
    let st_quad = [mono(Vars::CAP_ST, 2, 0), mono(Vars::CAP_ST, 2, 1), mono(Vars::CAP_ST, 2, 2)].map(|m| &st * &m);
    let g_tilde = DualRuling {
        first: sum(&ruling_st.map(|p| &st * &on(p, Vars::CAP_ST)), &u4),
        second: sum(&st_quad, &ruling_uv.map(|p| sq(p, Vars::UV))),
    };
    let f_tilde = DualRuling {
        first: sum(&ruling_st.map(|p| &st * &on(p, Vars::CAP_ST)), &uv_quad),
        second: sum(&st_quad, &ruling_uv.map(|p| &uv * p)),
    };

    Ok(Table2 {
        c,
        a,
        d,
        x,
        x_dual,
        y,
        y_dual,
        x_tilde,
        x_tilde_dual,
        y_tilde,
        y_tilde_dual,
        r_tilde,
        r_tilde_dual,
        r,
        r_dual,
        g,
        f,
        g_tilde,
        f_tilde,
    })
}

fn sum(left: &[HomPoly; 3], right: &[HomPoly; 3]) -> BiHomPoly {
    let terms: Vec<_> = left.iter().cloned().zip(right.iter().cloned()).collect();
    BiForm::sum_of_products(&terms)
}

/// Rows of the table attached to quartics `A`, `C`, with
/// `B = (A^2 - C^2)/4`.
#[derive(Clone, Debug, PartialEq)]
pub struct Table3 {
    /// `coeffs[i]` is the linear form in `(U, V)` multiplying `s^(4-i) t^i`.
    pub coeffs: [HomPoly; 5],
    pub f: HomPoly,
    pub g: HomPoly,
    pub x: WeierstrassModel<Rational>,
    pub x_dual: WeierstrassModel<Rational>,
    pub y_dual: WeierstrassModel<Rational>,
    pub y: WeierstrassModel<Rational>,
    pub y_tilde: WeierstrassModel<Rational>,
    pub r_dual: WeierstrassModel<Rational>,
    pub r: WeierstrassModel<Rational>,
    /// The two sides differ by an overall sign, absorbed by `W -> iW`.
    pub g_dual_branch: DualRuling,
    pub g_branch: DualRuling,
    pub f_branch: DualRuling,
}

impl Table3 {
    pub fn models(&self) -> Vec<(&'static str, &WeierstrassModel<Rational>)> {
        vec![
            ("X", &self.x),
            ("X'", &self.x_dual),
            ("Y'", &self.y_dual),
            ("Y", &self.y),
            ("Y~", &self.y_tilde),
            ("R'", &self.r_dual),
            ("R", &self.r),
        ]
    }
}

/// All rows for `A(s,t) (U-V)/2 - C(s,t) (U+V)/2 = sum a_i(U,V) s^(4-i) t^i`.
pub fn table3_generate(a: &HomPoly, c: &HomPoly) -> Result<Table3, DualityError> {
    if a.degree() != 4 || c.degree() != 4 {
        return Err(DualityError::DegenerateInput("need deg A = deg C = 4".into()));
    }
    let b4 = &(a * a) - &(c * c);
    if b4.is_zero() {
        return Err(DualityError::DegenerateInput("A^2 - C^2 vanishes".into()));
    }
    if c.is_zero() {
        return Err(DualityError::DegenerateInput("C vanishes".into()));
    }
    let half = qf(1, 2);
    let coeffs: [HomPoly; 5] = std::array::from_fn(|i| {
        let (ai, ci) = (a.coeff(i) * half.clone(), c.coeff(i) * half.clone());
        Form::new(Vars::CAP_UV, vec![ai.clone() - ci.clone(), -ai - ci])
    });
    let (f, g) = hermite_pair(&coeffs);

    let x = two_torsion(-a, b4.scale(&qf(1, 4)), 2);
    let x_dual = two_torsion(a.scale(&qf(2, 1)), c * c, 2);

    let one = Rational::one();
    let zero = Rational::from_integer(0.into());
    let diff = Form::new(Vars::UV, vec![one.clone(), zero.clone(), -one.clone()]);
    let sum2 = Form::new(Vars::UV, vec![one.clone(), zero, one.clone()]);
    let (p, q) = (&diff * &diff, &sum2 * &sum2);
    let y_dual = short(f.subst(&p, &q), g.subst(&p, &q), 2);
    let sqs = |h: &HomPoly| h.at_squares().with_vars(Vars::UV);
    let diff2 = &diff * &diff;
    let y = short(&diff2 * &sqs(&f), &(&diff2 * &diff) * &sqs(&g), 2);
    let uv = mono(Vars::CAP_UV, 2, 1);
    let l = Form::linear(Vars::CAP_UV, one.clone(), -one);
    let w = &uv * &l;
    let w2 = &w * &w;
    let y_tilde = short(&w2 * &f, &(&w2 * &w) * &g, 2);
    let r_dual = short(sqs(&f), sqs(&g), 1);
    let l2 = &l * &l;
    let r = short(&l2 * &f, &(&l2 * &l) * &g, 1);

    let s4: Vec<HomPoly> = (0..5).map(|i| mono(Vars::ST, 4, i)).collect();
    let amc = (a - c).scale(&half);
    let apc = (a + c).scale(&half);
    let sides = |lin: &dyn Fn(&HomPoly) -> HomPoly, u: HomPoly, v: HomPoly| {
        let first = BiForm::sum_of_products(&[(amc.clone(), lin(&u)), (-&apc, lin(&v))]);
        let terms: Vec<_> = (0..5).map(|i| (s4[i].clone(), lin(&coeffs[i].subst(&u, &v)))).collect();
        DualRuling { first, second: BiForm::sum_of_products(&terms) }
    };
    let g_dual_branch = {
        let first = BiForm::sum_of_products(&[
            (c.clone(), mono(Vars::UV, 4, 0)),
            (a.scale(&qf(2, 1)), mono(Vars::UV, 4, 2)),
            (c.clone(), mono(Vars::UV, 4, 4)),
        ]);
        let terms: Vec<_> = (0..5).map(|i| (s4[i].clone(), coeffs[i].subst(&p, &q))).collect();
        DualRuling { first, second: BiForm::sum_of_products(&terms) }
    };
    let g_branch = sides(&|h: &HomPoly| &diff * h, mono(Vars::UV, 2, 0), mono(Vars::UV, 2, 2));
    let f_branch = sides(&|h: &HomPoly| &w * h, mono(Vars::CAP_UV, 1, 0), mono(Vars::CAP_UV, 1, 1));

    Ok(Table3 { coeffs, f, g, x, x_dual, y_dual, y, y_tilde, r_dual, r, g_dual_branch, g_branch, f_branch })
}
