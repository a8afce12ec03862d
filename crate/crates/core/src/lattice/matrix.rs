use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::Rational;

pub type IntMatrix = Vec<Vec<BigInt>>;

pub fn identity(n: usize) -> IntMatrix {
    (0..n).map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect()
}

pub fn mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let (n, m, p) = (a.len(), b.len(), b.first().map_or(0, |r| r.len()));
    (0..n)
        .map(|i| {
            (0..p)
                .map(|j| (0..m).fold(BigInt::zero(), |acc, k| acc + &a[i][k] * &b[k][j]))
                .collect()
        })
        .collect()
}

pub fn transpose(a: &IntMatrix) -> IntMatrix {
    let m = a.first().map_or(0, |r| r.len());
    (0..m).map(|j| a.iter().map(|r| r[j].clone()).collect()).collect()
}

/// Determinant by Bareiss fraction-free elimination.
pub fn det(a: &IntMatrix) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m = a.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Smith normal form `U A V = D` of a square matrix. Returns the diagonal
/// (nonnegative, each entry dividing the next) together with `U` and `V`.
pub fn smith(a: &IntMatrix) -> (Vec<BigInt>, IntMatrix, IntMatrix) {
    let n = a.len();
    let mut m = a.clone();
    let mut u = identity(n);
    let mut v = identity(n);
    for k in 0..n {
        loop {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            let mut best: Option<(usize, usize)> = None;
            for i in k..n {
                for j in k..n {
                    if !m[i][j].is_zero() && best.is_none_or(|(bi, bj)| m[i][j].abs() < m[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return finish(m, u, v);
            };
            m.swap(k, pi);
            u.swap(k, pi);
            for row in m.iter_mut() {
                row.swap(k, pj);
            }
            for row in v.iter_mut() {
                row.swap(k, pj);
            }
            let mut clean = true;
            for i in k + 1..n {
                let qt = m[i][k].div_floor(&m[k][k]);
                if !qt.is_zero() {
                    row_axpy(&mut m, i, k, &qt);
                    row_axpy(&mut u, i, k, &qt);
                }
                if !m[i][k].is_zero() {
                    clean = false;
                }
            }
            for j in k + 1..n {
                let qt = m[k][j].div_floor(&m[k][k]);
                if !qt.is_zero() {
                    col_axpy(&mut m, j, k, &qt);
                    col_axpy(&mut v, j, k, &qt);
                }
                if !m[k][j].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // The pivot must divide the whole trailing block.
            let bad = (k + 1..n).find(|&i| (k + 1..n).any(|j| !(&m[i][j] % &m[k][k]).is_zero()));
            match bad {
                Some(i) => {
                    let one = -BigInt::one();
                    row_axpy(&mut m, k, i, &one);
                    row_axpy(&mut u, k, i, &one);
                }
                None => break,
            }
        }
    }
    finish(m, u, v)
}

fn finish(mut m: IntMatrix, mut u: IntMatrix, v: IntMatrix) -> (Vec<BigInt>, IntMatrix, IntMatrix) {
    let n = m.len();
    for i in 0..n {
        if m[i][i].is_negative() {
            for x in m[i].iter_mut() {
                *x = -x.clone();
            }
            for x in u[i].iter_mut() {
                *x = -x.clone();
            }
        }
    }
    ((0..n).map(|i| m[i][i].clone()).collect(), u, v)
}

/// row_i -= q * row_k
fn row_axpy(m: &mut IntMatrix, i: usize, k: usize, q: &BigInt) {
    let rk = m[k].clone();
    for (x, y) in m[i].iter_mut().zip(rk) {
        *x -= q * y;
    }
}

/// col_j -= q * col_k
fn col_axpy(m: &mut IntMatrix, j: usize, k: usize, q: &BigInt) {
    for row in m.iter_mut() {
        let y = row[k].clone();
        row[j] -= q * y;
    }
}

/// Basis of the row lattice spanned by integer rows (Hermite-style row
/// echelon form with the zero rows removed).
pub fn row_basis(rows: &IntMatrix) -> IntMatrix {
    let mut m = rows.clone();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..ncols {
        loop {
            let nz: Vec<usize> = (r..m.len()).filter(|&i| !m[i][c].is_zero()).collect();
            if nz.is_empty() {
                break;
            }
            let p = *nz.iter().min_by_key(|&&i| m[i][c].abs()).unwrap();
            m.swap(r, p);
            let mut done = true;
            for i in r + 1..m.len() {
                if !m[i][c].is_zero() {
                    let qt = m[i][c].div_floor(&m[r][c]);
                    row_axpy(&mut m, i, r, &qt);
                    if !m[i][c].is_zero() {
                        done = false;
                    }
                }
            }
            if done {
                r += 1;
                break;
            }
        }
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    m
}

/// Inertia `(positive, negative, zero)` of a symmetric matrix, by rational
/// congruence diagonalisation.
pub fn inertia(a: &IntMatrix) -> (usize, usize, usize) {
    let n = a.len();
    let mut m: Vec<Vec<Rational>> =
        a.iter().map(|r| r.iter().map(|x| Rational::from_integer(x.clone())).collect()).collect();
    let (mut pos, mut neg, mut zero) = (0, 0, 0);
    let mut k = 0;
    while k < n {
        if m[k][k].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !m[j][j].is_zero()) {
                m.swap(k, j);
                for row in m.iter_mut() {
                    row.swap(k, j);
                }
            } else if let Some(j) = (k + 1..n).find(|&j| !m[k][j].is_zero()) {
                // e_k <- e_k + e_j makes the diagonal entry 2 m[k][j].
                for c in 0..n {
                    let add = m[j][c].clone();
                    m[k][c] += add;
                }
                for row in m.iter_mut() {
                    let add = row[j].clone();
                    row[k] += add;
                }
            } else {
                zero += 1;
                k += 1;
                continue;
            }
        }
        let p = m[k][k].clone();
        if p.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        for i in k + 1..n {
            let f = m[i][k].clone() / p.clone();
            if f.is_zero() {
                continue;
            }
            for c in k..n {
                let sub = f.clone() * m[k][c].clone();
                m[i][c] -= sub;
            }
        }
        for i in k + 1..n {
            m[k][i] = Rational::zero();
            m[i][k] = Rational::zero();
        }
        k += 1;
    }
    (pos, neg, zero)
}
