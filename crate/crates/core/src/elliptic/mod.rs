//! Weierstrass fibrations `Y^2 = X^3 + a2 X^2 + a4 X + a6` over the
//! projective line, their invariants, and the Kodaira types of their
//! singular fibres.
//!
//! Coefficients are binary forms of degrees `2k`, `4k`, `6k` for weight
//! `k`: weight 1 gives rational elliptic surfaces, weight 2 gives K3
//! surfaces, and weight 0 is a single curve. Places are the square-free
//! factors of the discriminant, including the factor `t` for the point at
//! infinity, so no chart change is needed.

mod kodaira;
mod torsion;

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::exactpoly::{HomPoly, PolyError, Vars};
use crate::field::Field;

pub use kodaira::{kodaira_from_valuations, minimalize_valuations, valuations_consistent, KodairaType, Val};
pub use torsion::two_torsion_sections;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EllipticError {
    #[error("coefficient {name} has degree {found}, expected {expected}")]
    DegreeMismatch { name: &'static str, found: usize, expected: usize },
    #[error("the discriminant vanishes identically")]
    DegenerateModel,
    #[error("valuations are not minimal")]
    NonMinimal,
    #[error("valuations ({v_c4}, {v_c6}, {v_delta}) cannot occur together")]
    InconsistentValuations { v_c4: Val, v_c6: Val, v_delta: u32 },
}

impl From<PolyError> for EllipticError {
    fn from(_: PolyError) -> Self {
        EllipticError::DegenerateModel
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct WeierstrassModel<F: Field> {
    pub a2: HomPoly<F>,
    pub a4: HomPoly<F>,
    pub a6: HomPoly<F>,
    pub weight: usize,
}

impl<F: Field> WeierstrassModel<F> {
    pub fn new(a2: HomPoly<F>, a4: HomPoly<F>, a6: HomPoly<F>, weight: usize) -> Result<Self, EllipticError> {
        for (name, p, k) in [("a2", &a2, 2), ("a4", &a4, 4), ("a6", &a6, 6)] {
            if p.degree() != k * weight {
                return Err(EllipticError::DegreeMismatch { name, found: p.degree(), expected: k * weight });
            }
        }
        Ok(WeierstrassModel { a2, a4, a6, weight })
    }

    /// `Y^2 = X^3 + f X + g`.
    pub fn short(f: HomPoly<F>, g: HomPoly<F>, weight: usize) -> Result<Self, EllipticError> {
        let vars = f.vars();
        Self::new(HomPoly::zero(vars, 2 * weight), f, g, weight)
    }

    /// `Y^2 = X (X^2 + a2 X + a4)`, the shape with a 2-torsion section.
    pub fn with_two_torsion(a2: HomPoly<F>, a4: HomPoly<F>, weight: usize) -> Result<Self, EllipticError> {
        let vars = a2.vars();
        Self::new(a2, a4, HomPoly::zero(vars, 6 * weight), weight)
    }

    pub fn vars(&self) -> Vars {
        self.a2.vars()
    }

    /// Pull back along `(s, t) -> (a(u,v), b(u,v))` with `a`, `b` of common
    /// degree `e`; the weight is multiplied by `e`.
    pub fn pullback(&self, a: &HomPoly<F>, b: &HomPoly<F>) -> Self {
        WeierstrassModel {
            a2: self.a2.subst(a, b),
            a4: self.a4.subst(a, b),
            a6: self.a6.subst(a, b),
            weight: self.weight * a.degree(),
        }
    }

    /// Depressed form `X^3 + f X + g` obtained by `X -> X - a2/3`.
    pub fn depressed(&self) -> (HomPoly<F>, HomPoly<F>) {
        let third = F::from_frac(1, 3);
        let a2 = &self.a2;
        let a2sq = a2 * a2;
        let f = &self.a4 - &a2sq.scale(&third);
        let g = &(&self.a6 - &(a2 * &self.a4).scale(&third)) + &(&a2sq * a2).scale(&F::from_frac(2, 27));
        (f, g)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ModelInvariants<F: Field> {
    pub c4: HomPoly<F>,
    pub c6: HomPoly<F>,
    pub delta: HomPoly<F>,
    /// `j = j_num / j_den` with `j_num = c4^3`, `j_den = delta`.
    pub j_num: HomPoly<F>,
    pub j_den: HomPoly<F>,
}

/// `c4 = 16(a2^2 - 3a4)`, `c6 = -32(2a2^3 - 9a2a4 + 27a6)`,
/// `Delta = (c4^3 - c6^2)/1728`.
pub fn invariants<F: Field>(m: &WeierstrassModel<F>) -> Result<ModelInvariants<F>, EllipticError> {
    let (a2, a4, a6) = (&m.a2, &m.a4, &m.a6);
    let a2sq = a2 * a2;
    let c4 = (&a2sq - &a4.scale(&F::from_int(3))).scale(&F::from_int(16));
    let c6 = (&(&(&a2sq * a2).scale(&F::from_int(2)) - &(a2 * a4).scale(&F::from_int(9))) + &a6.scale(&F::from_int(27)))
        .scale(&F::from_int(-32));
    let c4cube = &(&c4 * &c4) * &c4;
    let delta = (&c4cube - &(&c6 * &c6)).scale(&F::from_frac(1, 1728));
    if delta.is_zero() {
        return Err(EllipticError::DegenerateModel);
    }
    Ok(ModelInvariants { c4, c6, j_num: c4cube, j_den: delta.clone(), delta })
}

/// A place of the base together with its fibre.
#[derive(Clone, Debug, PartialEq)]
pub struct FiberPlace<F: Field> {
    /// Square-free factor whose roots are the places; `t` is infinity.
    pub factor: HomPoly<F>,
    /// Valuations after minimalisation.
    pub v_c4: Val,
    pub v_c6: Val,
    pub v_delta: u32,
    pub kodaira: KodairaType,
    /// Number of geometric points, the degree of `factor`.
    pub root_count: usize,
}

impl<F: Field> FiberPlace<F> {
    pub fn is_infinity(&self) -> bool {
        self.factor == HomPoly::t(self.factor.vars())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FiberConfiguration<F: Field> {
    pub places: Vec<FiberPlace<F>>,
    pub total_euler: u32,
}

impl<F: Field> FiberConfiguration<F> {
    /// Number of singular fibres of each type, counted over the algebraic
    /// closure.
    pub fn counts(&self) -> BTreeMap<KodairaType, usize> {
        let mut m = BTreeMap::new();
        for p in &self.places {
            *m.entry(p.kodaira).or_insert(0) += p.root_count;
        }
        m
    }

    pub fn count(&self, t: KodairaType) -> usize {
        self.counts().get(&t).copied().unwrap_or(0)
    }

    /// Whether the configuration is exactly the given multiset.
    pub fn matches(&self, expected: &[(usize, KodairaType)]) -> bool {
        let mut want = BTreeMap::new();
        for &(n, t) in expected {
            *want.entry(t).or_insert(0) += n;
        }
        want.retain(|_, n| *n > 0);
        want == self.counts()
    }

    /// The places carrying a given fibre type.
    pub fn places_of(&self, t: KodairaType) -> Vec<&FiberPlace<F>> {
        self.places.iter().filter(|p| p.kodaira == t).collect()
    }
}

impl<F: Field> fmt::Display for FiberConfiguration<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let counts = self.counts();
        let mut parts: Vec<(KodairaType, usize)> = counts.into_iter().collect();
        // Star fibres first, then by decreasing Euler number.
        parts.sort_by_key(|(t, _)| (!matches!(t, KodairaType::IStar(_) | KodairaType::IVStar | KodairaType::IIIStar | KodairaType::IIStar), std::cmp::Reverse(t.euler()), *t));
        let text: Vec<String> = parts.iter().map(|(t, n)| format!("{n}{t}")).collect();
        if text.is_empty() {
            write!(f, "smooth")
        } else {
            write!(f, "{}", text.join(" + "))
        }
    }
}

/// Valuations of `(c4, c6, Delta)` along `place`, reduced to a minimal
/// model.
pub fn minimalize_at<F: Field>(m: &WeierstrassModel<F>, place: &HomPoly<F>) -> Result<(Val, Val, u32), EllipticError> {
    let inv = invariants(m)?;
    let vd = inv.delta.valuation(place).expect("nonzero discriminant");
    let v4 = Val::from(inv.c4.valuation(place));
    let v6 = Val::from(inv.c6.valuation(place));
    Ok(minimalize_valuations(v4, v6, vd))
}

/// Singular fibres of the fibration.
pub fn fiber_configuration<F: Field>(m: &WeierstrassModel<F>) -> Result<FiberConfiguration<F>, EllipticError> {
    let inv = invariants(m)?;
    let split = inv.delta.squarefree_split()?;
    let mut pieces = crate::exactpoly::refine_against(&split.factors, &inv.c4);
    pieces = crate::exactpoly::refine_against(&pieces, &inv.c6);
    let mut places = Vec::new();
    for (factor, vd) in pieces {
        let v4 = Val::from(inv.c4.valuation(&factor));
        let v6 = Val::from(inv.c6.valuation(&factor));
        let (v4, v6, vd) = minimalize_valuations(v4, v6, vd);
        let kodaira = kodaira_from_valuations(v4, v6, vd)?;
        if kodaira == KodairaType::I(0) {
            continue;
        }
        places.push(FiberPlace { root_count: factor.degree(), factor, v_c4: v4, v_c6: v6, v_delta: vd, kodaira });
    }
    places.sort_by(|a, b| {
        (a.kodaira, a.factor.degree(), a.factor.to_string()).cmp(&(b.kodaira, b.factor.degree(), b.factor.to_string()))
    });
    let total_euler = places.iter().map(|p| p.kodaira.euler() * p.root_count as u32).sum();
    Ok(FiberConfiguration { places, total_euler })
}

pub fn euler_number<F: Field>(m: &WeierstrassModel<F>) -> Result<u32, EllipticError> {
    Ok(fiber_configuration(m)?.total_euler)
}

/// `(d a2, d^2 a4, d^3 a6)`; `d` must have even degree.
pub fn quadratic_twist<F: Field>(m: &WeierstrassModel<F>, d: &HomPoly<F>) -> Result<WeierstrassModel<F>, EllipticError> {
    if d.degree() % 2 == 1 {
        return Err(EllipticError::DegreeMismatch { name: "twist", found: d.degree(), expected: d.degree() + 1 });
    }
    let d2 = d * d;
    Ok(WeierstrassModel {
        a2: d * &m.a2,
        a4: &d2 * &m.a4,
        a6: &(&d2 * d) * &m.a6,
        weight: m.weight + d.degree() / 2,
    })
}
