use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::Rational;

use super::Poly;

/// Distinct rational roots of a nonzero polynomial, in increasing order.
///
/// The polynomial is scaled to a primitive integer polynomial
/// `a_n x^n + ... + a_0` and substituted `y = a_n x`, which makes it monic
/// with integer coefficients; its rational roots are then integers and are
/// found by Sturm-sequence bisection.
pub fn rational_roots(p: &Poly<Rational>) -> Vec<Rational> {
    if p.is_zero() {
        return Vec::new();
    }
    let p = p.exact_div(&p.gcd(&p.derivative())).expect("gcd divides");
    let n = p.degree().unwrap();
    if n == 0 {
        return Vec::new();
    }
    let den = p.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p.coeffs().iter().map(|c| (c * Rational::from_integer(den.clone())).to_integer()).collect();
    let lead = ints[n].clone();
    let monic: Vec<BigInt> = (0..=n)
        .map(|k| if k == n { BigInt::one() } else { &ints[k] * num_traits::pow(lead.clone(), n - 1 - k) })
        .collect();
    let mut roots: Vec<Rational> = integer_roots_monic(&monic)
        .into_iter()
        .map(|y| Rational::new(y, lead.clone()))
        .collect();
    roots.sort();
    roots
}

/// Integer roots of a monic integer polynomial given by ascending
/// coefficients.
pub fn integer_roots_monic(coeffs: &[BigInt]) -> Vec<BigInt> {
    let q = Poly::new(coeffs.iter().map(|c| Rational::from_integer(c.clone())).collect());
    let n = match q.degree() {
        None | Some(0) => return Vec::new(),
        Some(n) => n,
    };
    let sq = q.exact_div(&q.gcd(&q.derivative())).expect("gcd divides");
    let mut out = Vec::new();
    let bound = coeffs[..n].iter().map(|c| c.abs()).max().unwrap_or_else(BigInt::zero) + BigInt::one();
    let sturm = sturm_sequence(&sq);
    bisect(&sq, &sturm, -bound.clone(), bound, &mut out);
    out.sort();
    out.dedup();
    out
}

fn sturm_sequence(p: &Poly<Rational>) -> Vec<Poly<Rational>> {
    let mut seq = vec![p.clone(), p.derivative()];
    loop {
        let k = seq.len();
        if seq[k - 1].is_zero() {
            seq.pop();
            break;
        }
        let r = seq[k - 2].rem(&seq[k - 1]).expect("nonzero divisor");
        if r.is_zero() {
            break;
        }
        seq.push(-&r);
    }
    seq
}

fn sign_changes(seq: &[Poly<Rational>], x: &BigInt) -> usize {
    let xq = Rational::from_integer(x.clone());
    let signs: Vec<i8> = seq
        .iter()
        .map(|p| {
            let v = p.eval(&xq);
            if v.is_positive() {
                1
            } else if v.is_negative() {
                -1
            } else {
                0
            }
        })
        .filter(|&s| s != 0)
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Collect integer roots in `(lo, hi]`.
fn bisect(p: &Poly<Rational>, sturm: &[Poly<Rational>], lo: BigInt, hi: BigInt, out: &mut Vec<BigInt>) {
    let count = sign_changes(sturm, &lo) as i64 - sign_changes(sturm, &hi) as i64;
    if count <= 0 {
        return;
    }
    if &hi - &lo == BigInt::one() {
        if p.eval(&Rational::from_integer(hi.clone())).is_zero() {
            out.push(hi);
        }
        return;
    }
    let mid: BigInt = (&lo + &hi).div_floor(&BigInt::from(2));
    bisect(p, sturm, lo, mid.clone(), out);
    bisect(p, sturm, mid, hi, out);
}
