use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::field::Field;

use super::{MPoly, Poly, PolyError};

/// Names of the two variables of a binary form. Labels only: they do not
/// take part in equality.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Vars(pub &'static str, pub &'static str);

impl Vars {
    pub const ST: Vars = Vars("s", "t");
    pub const UV: Vars = Vars("u", "v");
    pub const CAP_UV: Vars = Vars("U", "V");
    pub const CAP_ST: Vars = Vars("S", "T");
    pub const XY: Vars = Vars("x", "y");
    pub const TZ: Vars = Vars("t", "z");
}

/// Binary form of a fixed degree `d`. Entry `k` of `coeffs` is the
/// coefficient of `s^(d-k) t^k`; the vector always has length `d + 1`, so
/// the zero form still remembers its degree.
#[derive(Clone, Debug)]
pub struct HomPoly<F: Field> {
    coeffs: Vec<F>,
    vars: Vars,
}

/// Square-free factors of a binary form: each factor is normalised so its
/// first nonzero coefficient is 1 (monic in `s`, or `t^k` for pure powers
/// of `t`), and `unit` is the leftover constant.
#[derive(Clone, Debug, PartialEq)]
pub struct SquarefreeSplit<F: Field> {
    pub factors: Vec<(HomPoly<F>, u32)>,
    pub unit: F,
}

impl<F: Field> PartialEq for HomPoly<F> {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl<F: Field> HomPoly<F> {
    pub fn new(vars: Vars, coeffs: Vec<F>) -> Self {
        assert!(!coeffs.is_empty(), "a binary form needs degree + 1 coefficients");
        HomPoly { coeffs, vars }
    }

    pub fn from_ints(vars: Vars, cs: &[i64]) -> Self {
        Self::new(vars, cs.iter().map(|&c| F::from_int(c)).collect())
    }

    pub fn zero(vars: Vars, degree: usize) -> Self {
        Self::new(vars, vec![F::zero(); degree + 1])
    }

    pub fn constant(vars: Vars, c: F) -> Self {
        Self::new(vars, vec![c])
    }

    pub fn one(vars: Vars) -> Self {
        Self::constant(vars, F::one())
    }

    /// The linear form `a s + b t`.
    pub fn linear(vars: Vars, a: F, b: F) -> Self {
        Self::new(vars, vec![a, b])
    }

    /// The first variable `s`.
    pub fn s(vars: Vars) -> Self {
        Self::linear(vars, F::one(), F::zero())
    }

    /// The second variable `t`.
    pub fn t(vars: Vars) -> Self {
        Self::linear(vars, F::zero(), F::one())
    }

    /// `c s^(d-k) t^k`.
    pub fn monomial(vars: Vars, degree: usize, k: usize, c: F) -> Self {
        let mut v = Self::zero(vars, degree);
        v.coeffs[k] = c;
        v
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn vars(&self) -> Vars {
        self.vars
    }

    pub fn with_vars(mut self, vars: Vars) -> Self {
        self.vars = vars;
        self
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    /// Coefficient of `s^(d-k) t^k`.
    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Homogenise `p(s)` to degree `d`.
    pub fn homogenize(vars: Vars, p: &Poly<F>, d: usize) -> Self {
        assert!(p.degree().unwrap_or(0) <= d, "degree exceeds the target degree");
        let mut v = vec![F::zero(); d + 1];
        for (j, c) in p.coeffs().iter().enumerate() {
            v[d - j] = c.clone();
        }
        Self::new(vars, v)
    }

    /// Restriction to `t = 1`, a polynomial in `s`.
    pub fn dehomogenize(&self) -> Poly<F> {
        Poly::new(self.coeffs.iter().rev().cloned().collect())
    }

    /// Restriction to `s = 1`, a polynomial in `t`.
    pub fn dehomogenize_s(&self) -> Poly<F> {
        Poly::new(self.coeffs.clone())
    }

    pub fn eval(&self, s: &F, t: &F) -> F {
        let d = self.degree();
        let mut acc = F::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc = acc + c.clone() * s.powi((d - k) as u32) * t.powi(k as u32);
            }
        }
        acc
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::new(self.vars, self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.vars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exchange the roles of `s` and `t`.
    pub fn swap(&self) -> Self {
        let mut v = self.coeffs.clone();
        v.reverse();
        Self::new(self.vars, v)
    }

    /// `self(a, b)` for two forms of a common degree `e`; the result has
    /// degree `d e` and the variables of `a`.
    pub fn subst(&self, a: &Self, b: &Self) -> Self {
        assert_eq!(a.degree(), b.degree(), "substituted forms need equal degrees");
        let d = self.degree();
        let apow: Vec<Self> = pow_table(a, d);
        let bpow: Vec<Self> = pow_table(b, d);
        let mut acc = Self::zero(a.vars, d * a.degree());
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc = &acc + &(&apow[d - k] * &bpow[k]).scale(c);
            }
        }
        acc
    }

    /// `self(s^2, t^2)`.
    pub fn at_squares(&self) -> Self {
        let mut v = vec![F::zero(); 2 * self.degree() + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            v[2 * k] = c.clone();
        }
        Self::new(self.vars, v)
    }

    /// Largest `a` with `t^a | self`; `None` for the zero form.
    pub fn t_order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Exact quotient, if `q` divides `self`.
    pub fn exact_div(&self, q: &Self) -> Option<Self> {
        let (d, e) = (self.degree(), q.degree());
        if e > d || q.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero(self.vars, d - e));
        }
        let r = self.dehomogenize().exact_div(&q.dehomogenize())?;
        if r.degree().unwrap_or(0) > d - e {
            return None;
        }
        Some(Self::homogenize(self.vars, &r, d - e))
    }

    /// Number of times the nonconstant form `f` divides `self`; `None` means
    /// `self` is identically zero (infinite valuation).
    pub fn valuation(&self, f: &Self) -> Option<u32> {
        assert!(f.degree() > 0, "valuation needs a nonconstant factor");
        if self.is_zero() {
            return None;
        }
        let mut p = self.clone();
        let mut v = 0;
        while let Some(q) = p.exact_div(f) {
            p = q;
            v += 1;
        }
        Some(v)
    }

    /// Scale so that the first nonzero coefficient is 1.
    pub fn normalized(&self) -> Self {
        match self.coeffs.iter().find(|c| !c.is_zero()) {
            Some(c) => self.scale(&c.inv()),
            None => self.clone(),
        }
    }

    /// Normalised gcd. The gcd of two zero forms is the zero form of
    /// degree 0.
    pub fn gcd(&self, other: &Self) -> Self {
        match (self.t_order(), other.t_order()) {
            (None, None) => Self::zero(self.vars, 0),
            (None, Some(_)) => other.normalized(),
            (Some(_), None) => self.normalized(),
            (Some(a), Some(b)) => {
                let g = self.dehomogenize().gcd(&other.dehomogenize());
                let dg = g.degree().unwrap_or(0);
                let tg = Self::t(self.vars).pow(a.min(b) as u32);
                (&Self::homogenize(self.vars, &g, dg) * &tg).normalized()
            }
        }
    }

    pub fn squarefree_split(&self) -> Result<SquarefreeSplit<F>, PolyError> {
        let a = self.t_order().ok_or(PolyError::ZeroPolynomial)?;
        let p = self.dehomogenize();
        let (parts, unit) = p.squarefree()?;
        let mut factors: Vec<(Self, u32)> = parts
            .into_iter()
            .map(|(f, m)| {
                let d = f.degree().unwrap();
                (Self::homogenize(self.vars, &f, d), m)
            })
            .collect();
        if a > 0 {
            factors.push((Self::t(self.vars), a as u32));
        }
        Ok(SquarefreeSplit { factors, unit })
    }

    pub fn derivative_s(&self) -> Self {
        let d = self.degree();
        if d == 0 {
            return Self::zero(self.vars, 0);
        }
        Self::new(
            self.vars,
            (0..d).map(|k| self.coeffs[k].clone() * F::from_int((d - k) as i64)).collect(),
        )
    }

    pub fn derivative_t(&self) -> Self {
        let d = self.degree();
        if d == 0 {
            return Self::zero(self.vars, 0);
        }
        Self::new(
            self.vars,
            (1..=d).map(|k| self.coeffs[k].clone() * F::from_int(k as i64)).collect(),
        )
    }

    /// Embed in a multivariate ring with `s`, `t` at the given indices.
    pub fn to_mpoly(&self, nvars: usize, is: usize, it: usize) -> MPoly<F> {
        let d = self.degree();
        let mut out = MPoly::zero(nvars);
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let mut e = vec![0u32; nvars];
                e[is] += (d - k) as u32;
                e[it] += k as u32;
                out.add_term(e, c.clone());
            }
        }
        out
    }
}

fn pow_table<F: Field>(a: &HomPoly<F>, n: usize) -> Vec<HomPoly<F>> {
    let mut v = vec![HomPoly::one(a.vars)];
    for i in 0..n {
        let next = &v[i] * a;
        v.push(next);
    }
    v
}

pub(super) fn refine_against<F: Field>(split: &[(HomPoly<F>, u32)], q: &HomPoly<F>) -> Vec<(HomPoly<F>, u32)> {
    let mut out = Vec::new();
    for (f, m) in split {
        if q.is_zero() {
            out.push((f.clone(), *m));
            continue;
        }
        let g = f.gcd(q);
        if g.degree() == 0 {
            out.push((f.clone(), *m));
            continue;
        }
        let rest = f.exact_div(&g).expect("gcd divides");
        if rest.degree() > 0 {
            out.push((rest.normalized(), *m));
        }
        // Peel off roots of g by their multiplicity in q.
        let mut g = g;
        let mut qq = q.clone();
        while g.degree() > 0 {
            qq = qq.exact_div(&g).expect("every root of g still divides q");
            let deeper = g.gcd(&qq);
            let exact = g.exact_div(&deeper).expect("gcd divides");
            if exact.degree() > 0 {
                out.push((exact.normalized(), *m));
            }
            g = deeper;
        }
    }
    out
}

impl<F: Field> Add for &HomPoly<F> {
    type Output = HomPoly<F>;
    fn add(self, o: &HomPoly<F>) -> HomPoly<F> {
        assert_eq!(self.degree(), o.degree(), "adding forms of different degrees");
        HomPoly::new(
            self.vars,
            self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a.clone() + b.clone()).collect(),
        )
    }
}

impl<F: Field> Sub for &HomPoly<F> {
    type Output = HomPoly<F>;
    fn sub(self, o: &HomPoly<F>) -> HomPoly<F> {
        assert_eq!(self.degree(), o.degree(), "subtracting forms of different degrees");
        HomPoly::new(
            self.vars,
            self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a.clone() - b.clone()).collect(),
        )
    }
}

impl<F: Field> Mul for &HomPoly<F> {
    type Output = HomPoly<F>;
    fn mul(self, o: &HomPoly<F>) -> HomPoly<F> {
        let mut v = vec![F::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] = v[i + j].clone() + a.clone() * b.clone();
                }
            }
        }
        HomPoly::new(self.vars, v)
    }
}

impl<F: Field> Neg for &HomPoly<F> {
    type Output = HomPoly<F>;
    fn neg(self) -> HomPoly<F> {
        HomPoly::new(self.vars, self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl<F: Field> fmt::Display for HomPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree();
        let terms: Vec<(F, Vec<(&str, usize)>)> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| (c.clone(), vec![(self.vars.0, d - k), (self.vars.1, k)]))
            .collect();
        super::write_terms(f, &terms)
    }
}
