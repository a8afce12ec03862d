#![allow(dead_code)]

use k3kit::exactpoly::{HomPoly as GHom, Poly, Vars};
use k3kit::field::q;
use k3kit::{HomPoly, Rational, UniPoly};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rand_q<R: Rng>(r: &mut R) -> Rational {
    q(r.gen_range(-9..=9))
}

pub fn rand_nonzero_q<R: Rng>(r: &mut R) -> Rational {
    loop {
        let c = rand_q(r);
        if !c.is_zero() {
            return c;
        }
    }
}

pub fn rand_uni<R: Rng>(r: &mut R, deg: usize) -> UniPoly {
    let mut cs: Vec<Rational> = (0..deg).map(|_| rand_q(r)).collect();
    cs.push(rand_nonzero_q(r));
    Poly::new(cs)
}

pub fn rand_hom<R: Rng>(r: &mut R, vars: Vars, deg: usize) -> HomPoly {
    GHom::new(vars, (0..=deg).map(|_| rand_q(r)).collect())
}

/// Determinant by cofactor-free Gaussian elimination, written out here so
/// the resultant can be checked against the Sylvester matrix.
pub fn det(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut sign = Rational::from_integer(1.into());
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            m.swap(p, c);
            sign = -sign;
        }
        for r in c + 1..n {
            let f = m[r][c].clone() / m[c][c].clone();
            for k in c..n {
                let v = m[c][k].clone() * f.clone();
                m[r][k] = m[r][k].clone() - v;
            }
        }
    }
    (0..n).fold(sign, |acc, i| acc * m[i][i].clone())
}

pub fn sylvester_resultant(p: &UniPoly, qq: &UniPoly) -> Rational {
    let m = p.degree().unwrap();
    let n = qq.degree().unwrap();
    let size = m + n;
    if size == 0 {
        return Rational::from_integer(1.into());
    }
    let mut rows = Vec::new();
    for i in 0..n {
        let mut row = vec![Rational::zero(); size];
        for (k, c) in p.coeffs().iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![Rational::zero(); size];
        for (k, c) in qq.coeffs().iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    det(rows)
}
