use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::field::Field;

use super::{HomPoly, MPoly, Vars};

/// Form of bidegree `(d1, d2)` in two pairs of variables. Entry `(i, j)` is
/// the coefficient of `s^(d1-i) t^i u^(d2-j) v^j`.
#[derive(Clone, Debug)]
pub struct BiHomPoly<F: Field> {
    d1: usize,
    d2: usize,
    coeffs: Vec<Vec<F>>,
    vars: (Vars, Vars),
}

impl<F: Field> PartialEq for BiHomPoly<F> {
    fn eq(&self, other: &Self) -> bool {
        self.d1 == other.d1 && self.d2 == other.d2 && self.coeffs == other.coeffs
    }
}

impl<F: Field> BiHomPoly<F> {
    pub fn zero(vars: (Vars, Vars), d1: usize, d2: usize) -> Self {
        BiHomPoly { d1, d2, coeffs: vec![vec![F::zero(); d2 + 1]; d1 + 1], vars }
    }

    pub fn from_matrix(vars: (Vars, Vars), coeffs: Vec<Vec<F>>) -> Self {
        let d1 = coeffs.len() - 1;
        let d2 = coeffs[0].len() - 1;
        assert!(coeffs.iter().all(|r| r.len() == d2 + 1), "ragged coefficient matrix");
        BiHomPoly { d1, d2, coeffs, vars }
    }

    /// `p(s,t) q(u,v)`.
    pub fn outer(p: &HomPoly<F>, q: &HomPoly<F>) -> Self {
        let coeffs = p
            .coeffs()
            .iter()
            .map(|a| q.coeffs().iter().map(|b| a.clone() * b.clone()).collect())
            .collect();
        BiHomPoly { d1: p.degree(), d2: q.degree(), coeffs, vars: (p.vars(), q.vars()) }
    }

    /// `sum_k p_k(s,t) q_k(u,v)`.
    pub fn sum_of_products(terms: &[(HomPoly<F>, HomPoly<F>)]) -> Self {
        let mut it = terms.iter();
        let (p, q) = it.next().expect("at least one term");
        let mut acc = Self::outer(p, q);
        for (p, q) in it {
            acc = &acc + &Self::outer(p, q);
        }
        acc
    }

    pub fn degrees(&self) -> (usize, usize) {
        (self.d1, self.d2)
    }

    pub fn vars(&self) -> (Vars, Vars) {
        self.vars
    }

    pub fn coeff(&self, i: usize, j: usize) -> F {
        self.coeffs[i][j].clone()
    }

    pub fn matrix(&self) -> &[Vec<F>] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().flatten().all(|c| c.is_zero())
    }

    /// Coefficient of `s^(d1-i) t^i`, a form in `(u, v)`.
    pub fn coeff_first(&self, i: usize) -> HomPoly<F> {
        HomPoly::new(self.vars.1, self.coeffs[i].clone())
    }

    /// Coefficient of `u^(d2-j) v^j`, a form in `(s, t)`.
    pub fn coeff_second(&self, j: usize) -> HomPoly<F> {
        HomPoly::new(self.vars.0, self.coeffs.iter().map(|r| r[j].clone()).collect())
    }

    pub fn scale(&self, c: &F) -> Self {
        let coeffs = self.coeffs.iter().map(|r| r.iter().map(|a| a.clone() * c.clone()).collect()).collect();
        BiHomPoly { coeffs, ..self.clone() }
    }

    /// Exchange the two pairs of variables.
    pub fn transpose(&self) -> Self {
        let coeffs = (0..=self.d2).map(|j| (0..=self.d1).map(|i| self.coeffs[i][j].clone()).collect()).collect();
        BiHomPoly { d1: self.d2, d2: self.d1, coeffs, vars: (self.vars.1, self.vars.0) }
    }

    pub fn eval(&self, s: &F, t: &F, u: &F, v: &F) -> F {
        let mut acc = F::zero();
        for i in 0..=self.d1 {
            for j in 0..=self.d2 {
                let c = &self.coeffs[i][j];
                if !c.is_zero() {
                    acc = acc
                        + c.clone()
                            * s.powi((self.d1 - i) as u32)
                            * t.powi(i as u32)
                            * u.powi((self.d2 - j) as u32)
                            * v.powi(j as u32);
                }
            }
        }
        acc
    }

    /// Embed in a four-variable ring ordered `(s, t, u, v)`.
    pub fn to_mpoly(&self) -> MPoly<F> {
        let mut out = MPoly::zero(4);
        for i in 0..=self.d1 {
            for j in 0..=self.d2 {
                let c = &self.coeffs[i][j];
                if !c.is_zero() {
                    out.add_term(
                        vec![(self.d1 - i) as u32, i as u32, (self.d2 - j) as u32, j as u32],
                        c.clone(),
                    );
                }
            }
        }
        out
    }
}

impl<F: Field> Add for &BiHomPoly<F> {
    type Output = BiHomPoly<F>;
    fn add(self, o: &BiHomPoly<F>) -> BiHomPoly<F> {
        assert_eq!(self.degrees(), o.degrees(), "adding forms of different bidegrees");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&o.coeffs)
            .map(|(r, q)| r.iter().zip(q).map(|(a, b)| a.clone() + b.clone()).collect())
            .collect();
        BiHomPoly { coeffs, ..self.clone() }
    }
}

impl<F: Field> Sub for &BiHomPoly<F> {
    type Output = BiHomPoly<F>;
    fn sub(self, o: &BiHomPoly<F>) -> BiHomPoly<F> {
        self + &(-o)
    }
}

impl<F: Field> Neg for &BiHomPoly<F> {
    type Output = BiHomPoly<F>;
    fn neg(self) -> BiHomPoly<F> {
        self.scale(&-F::one())
    }
}

impl<F: Field> Mul for &BiHomPoly<F> {
    type Output = BiHomPoly<F>;
    fn mul(self, o: &BiHomPoly<F>) -> BiHomPoly<F> {
        let mut out: BiHomPoly<F> = BiHomPoly::zero(self.vars, self.d1 + o.d1, self.d2 + o.d2);
        for (i1, r1) in self.coeffs.iter().enumerate() {
            for (j1, a) in r1.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (i2, r2) in o.coeffs.iter().enumerate() {
                    for (j2, b) in r2.iter().enumerate() {
                        if !b.is_zero() {
                            let cell: &mut F = &mut out.coeffs[i1 + i2][j1 + j2];
                            *cell = cell.clone() + a.clone() * b.clone();
                        }
                    }
                }
            }
        }
        out
    }
}

impl<F: Field> fmt::Display for BiHomPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.vars;
        let mut terms = Vec::new();
        for i in 0..=self.d1 {
            for j in 0..=self.d2 {
                terms.push((
                    self.coeffs[i][j].clone(),
                    vec![(a.0, self.d1 - i), (a.1, i), (b.0, self.d2 - j), (b.1, j)],
                ));
            }
        }
        super::write_terms(f, &terms)
    }
}
