//! Even lattices given by integral Gram matrices: root lattices and the
//! other building blocks, discriminant groups via Smith normal form, and
//! Nikulin's invariants of 2-elementary lattices.

pub mod matrix;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::Rational;
use matrix::IntMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("unknown lattice '{0}'")]
    UnknownLattice(String),
    #[error("scale factor must be nonzero")]
    ZeroScale,
    #[error("the Gram matrix is degenerate")]
    DegenerateLattice,
    #[error("the discriminant group is not 2-elementary")]
    NotTwoElementary,
    #[error("the lattice is not even")]
    NotEven,
    #[error("glue vectors do not give an integral lattice")]
    NotIntegral,
    #[error("invariants only classify even indefinite 2-elementary lattices")]
    NotApplicable,
    #[error("bad lattice expression at column {column}: {message}")]
    Parse { column: usize, message: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    gram: IntMatrix,
}

impl Lattice {
    pub fn from_gram(gram: IntMatrix) -> Self {
        let n = gram.len();
        assert!(gram.iter().all(|r| r.len() == n), "Gram matrix must be square");
        for i in 0..n {
            for j in 0..i {
                assert_eq!(gram[i][j], gram[j][i], "Gram matrix must be symmetric");
            }
        }
        Lattice { gram }
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::from_gram(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
    }

    pub fn gram(&self) -> &IntMatrix {
        &self.gram
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn det(&self) -> BigInt {
        matrix::det(&self.gram)
    }

    pub fn is_even(&self) -> bool {
        self.gram.iter().enumerate().all(|(i, r)| r[i].is_even())
    }

    /// `(positive, negative)`; errors on a degenerate form.
    pub fn signature(&self) -> Result<(usize, usize), LatticeError> {
        let (p, n, z) = matrix::inertia(&self.gram);
        if z > 0 {
            return Err(LatticeError::DegenerateLattice);
        }
        Ok((p, n))
    }

    pub fn is_definite(&self) -> Result<bool, LatticeError> {
        let (p, n) = self.signature()?;
        Ok(p == 0 || n == 0)
    }

    /// Gram matrix in a new basis: `U^T G U`.
    pub fn change_basis(&self, u: &IntMatrix) -> Lattice {
        Lattice { gram: matrix::mul(&matrix::mul(&matrix::transpose(u), &self.gram), u) }
    }

    pub fn pairing(&self, x: &[Rational], y: &[Rational]) -> Rational {
        let n = self.rank();
        let mut acc = Rational::zero();
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if !y[j].is_zero() && !self.gram[i][j].is_zero() {
                    acc += x[i].clone() * y[j].clone() * Rational::from_integer(self.gram[i][j].clone());
                }
            }
        }
        acc
    }
}

impl fmt::Display for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.gram {
            let row: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// The hyperbolic plane `H`.
pub fn hyperbolic() -> Lattice {
    Lattice::from_ints(&[&[0, 1], &[1, 0]])
}

/// The rank-one lattice `<k>`.
pub fn diag(k: i64) -> Result<Lattice, LatticeError> {
    if k == 0 {
        return Err(LatticeError::ZeroScale);
    }
    Ok(Lattice::from_ints(&[&[k]]))
}

fn cartan(n: usize, edges: &[(usize, usize)]) -> Lattice {
    let mut g = vec![vec![BigInt::zero(); n]; n];
    for (i, row) in g.iter_mut().enumerate() {
        row[i] = BigInt::from(2);
    }
    for &(a, b) in edges {
        g[a][b] = BigInt::from(-1);
        g[b][a] = BigInt::from(-1);
    }
    Lattice::from_gram(g)
}

/// Positive definite root lattice `A_n`.
pub fn root_a(n: usize) -> Result<Lattice, LatticeError> {
    if n == 0 {
        return Err(LatticeError::UnknownLattice("A0".into()));
    }
    let edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
    Ok(cartan(n, &edges))
}

/// Positive definite root lattice `D_n`, `n >= 4`.
pub fn root_d(n: usize) -> Result<Lattice, LatticeError> {
    if n < 4 {
        return Err(LatticeError::UnknownLattice(format!("D{n}")));
    }
    let mut edges: Vec<(usize, usize)> = (0..n - 2).map(|i| (i, i + 1)).collect();
    edges.push((n - 3, n - 1));
    Ok(cartan(n, &edges))
}

/// Positive definite `E_8`.
pub fn root_e8() -> Lattice {
    cartan(8, &[(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)])
}

/// `N`: the overlattice of `A_1(-1)^8` obtained by adjoining half the sum of
/// the basis vectors.
pub fn nikulin_n() -> Lattice {
    let base = direct_sum(&vec![diag(-2).unwrap(); 8]);
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    overlattice(&base, &[vec![half; 8]]).expect("the glue vector has even norm")
}

/// The rank 12 lattice `K0` of determinant `2^6`, given by its Gram matrix
/// in the basis of the glued `A_2 + A_3^3` chains.
pub fn k0() -> Lattice {
    let first = [4, -1, 1, 1, -1, 1, 1, -1, 1, 1, -1, 1];
    let mut g = vec![vec![0i64; 12]; 12];
    for (j, &x) in first.iter().enumerate() {
        g[0][j] = x;
        g[j][0] = x;
    }
    for (a, b) in [(1, 2), (3, 5), (6, 8), (9, 11)] {
        for i in a..=b {
            g[i][i] = 2;
            if i < b {
                g[i][i + 1] = -1;
                g[i + 1][i] = -1;
            }
        }
    }
    Lattice::from_gram(g.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect())
}

/// Look up a building block by name: `H`, `An`, `Dn`, `E8`, `N`, `K0` or
/// `<k>`.
pub fn standard_lattice(name: &str) -> Result<Lattice, LatticeError> {
    let unknown = || LatticeError::UnknownLattice(name.to_string());
    let name = name.trim();
    match name {
        "H" => return Ok(hyperbolic()),
        "E8" => return Ok(root_e8()),
        "N" => return Ok(nikulin_n()),
        "K0" => return Ok(k0()),
        _ => {}
    }
    if let Some(inner) = name.strip_prefix('<').and_then(|x| x.strip_suffix('>')) {
        let k: i64 = inner.trim().parse().map_err(|_| unknown())?;
        return diag(k);
    }
    let (head, tail) = name.split_at(1);
    let n: usize = tail.parse().map_err(|_| unknown())?;
    match head {
        "A" => root_a(n).map_err(|_| unknown()),
        "D" => root_d(n).map_err(|_| unknown()),
        _ => Err(unknown()),
    }
}

pub fn direct_sum(parts: &[Lattice]) -> Lattice {
    let n: usize = parts.iter().map(|l| l.rank()).sum();
    let mut g = vec![vec![BigInt::zero(); n]; n];
    let mut off = 0;
    for l in parts {
        for (i, row) in l.gram.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                g[off + i][off + j] = x.clone();
            }
        }
        off += l.rank();
    }
    Lattice::from_gram(g)
}

/// `L(k)`: the Gram matrix multiplied by `k`.
pub fn rescale(l: &Lattice, k: i64) -> Result<Lattice, LatticeError> {
    if k == 0 {
        return Err(LatticeError::ZeroScale);
    }
    let k = BigInt::from(k);
    Ok(Lattice::from_gram(l.gram.iter().map(|r| r.iter().map(|x| x * &k).collect()).collect()))
}

/// The lattice spanned by `L` and the rational glue vectors (coordinates in
/// the basis of `L`); errors if the result is not integral.
pub fn overlattice(l: &Lattice, glue: &[Vec<Rational>]) -> Result<Lattice, LatticeError> {
    let n = l.rank();
    let den = glue.iter().flatten().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut rows: IntMatrix = matrix::identity(n).into_iter().map(|r| r.into_iter().map(|x| x * &den).collect()).collect();
    for v in glue {
        rows.push(v.iter().map(|x| (x * Rational::from_integer(den.clone())).to_integer()).collect());
    }
    let basis = matrix::row_basis(&rows);
    let dq = Rational::from_integer(den);
    let vecs: Vec<Vec<Rational>> =
        basis.iter().map(|r| r.iter().map(|x| Rational::from_integer(x.clone()) / dq.clone()).collect()).collect();
    let mut g = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let x = l.pairing(&vecs[i], &vecs[j]);
            if !x.is_integer() {
                return Err(LatticeError::NotIntegral);
            }
            g[i][j] = x.to_integer();
        }
    }
    Ok(Lattice::from_gram(g))
}

/// `A_L = L^vee / L` with the discriminant quadratic form on generators.
#[derive(Clone, Debug, PartialEq)]
pub struct DiscriminantGroup {
    /// Elementary divisors greater than one.
    pub divisors: Vec<BigInt>,
    /// Generators of the cyclic factors, in coordinates of the basis of `L`.
    pub generators: Vec<Vec<Rational>>,
    /// `q(x) = x.x` for each generator, reduced into `[0, 2)`.
    pub q_values: Vec<Rational>,
}

impl DiscriminantGroup {
    pub fn order(&self) -> BigInt {
        self.divisors.iter().product()
    }
}

pub fn discriminant_group(l: &Lattice) -> Result<DiscriminantGroup, LatticeError> {
    if l.det().is_zero() {
        return Err(LatticeError::DegenerateLattice);
    }
    let (d, _u, v) = matrix::smith(&l.gram);
    let n = l.rank();
    let mut out = DiscriminantGroup { divisors: Vec::new(), generators: Vec::new(), q_values: Vec::new() };
    let two = Rational::from_integer(BigInt::from(2));
    for (i, di) in d.iter().enumerate() {
        if di.is_one() {
            continue;
        }
        let dq = Rational::from_integer(di.clone());
        let x: Vec<Rational> = (0..n).map(|r| Rational::from_integer(v[r][i].clone()) / dq.clone()).collect();
        let qv = l.pairing(&x, &x);
        let reduced = qv.clone() - two.clone() * (qv / two.clone()).floor();
        out.divisors.push(di.clone());
        out.generators.push(x);
        out.q_values.push(reduced);
    }
    Ok(out)
}

/// Nikulin's invariants of an even 2-elementary lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TwoElementaryInvariants {
    pub rank: usize,
    pub signature: (usize, usize),
    /// Number of elementary divisors equal to 2.
    pub length: usize,
    pub is_two_elementary: bool,
    /// `delta`: 0 when `q` takes integer values on the discriminant group.
    /// Only defined for 2-elementary lattices.
    pub parity: Option<u8>,
}

impl TwoElementaryInvariants {
    pub fn parity(&self) -> Result<u8, LatticeError> {
        self.parity.ok_or(LatticeError::NotTwoElementary)
    }
}

impl fmt::Display for TwoElementaryInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let delta = self.parity.map_or("-".to_string(), |d| d.to_string());
        write!(f, "rank {} signature ({},{}) l {} delta {}", self.rank, self.signature.0, self.signature.1, self.length, delta)
    }
}

pub fn two_elementary_invariants(l: &Lattice) -> Result<TwoElementaryInvariants, LatticeError> {
    if !l.is_even() {
        return Err(LatticeError::NotEven);
    }
    let signature = l.signature()?;
    let dg = discriminant_group(l)?;
    let two = BigInt::from(2);
    let is_two_elementary = dg.divisors.iter().all(|d| d == &two);
    let parity = is_two_elementary.then(|| if dg.q_values.iter().all(|q| q.is_integer()) { 0 } else { 1 });
    Ok(TwoElementaryInvariants {
        rank: l.rank(),
        signature,
        length: dg.divisors.iter().filter(|d| *d == &two).count(),
        is_two_elementary,
        parity,
    })
}

/// Whether two even indefinite 2-elementary lattices are isometric, decided
/// by Nikulin's invariants.
pub fn nikulin_equivalent(a: &Lattice, b: &Lattice) -> Result<bool, LatticeError> {
    let mut inv = Vec::new();
    for l in [a, b] {
        if l.is_definite()? {
            return Err(LatticeError::NotApplicable);
        }
        match two_elementary_invariants(l) {
            Ok(i) if i.is_two_elementary => inv.push(i),
            Ok(_) | Err(LatticeError::NotEven) => return Err(LatticeError::NotApplicable),
            Err(e) => return Err(e),
        }
    }
    Ok(inv[0] == inv[1])
}

/// `Lambda_{2,c}`: `H(2)` for `c = 0` and `<2> + <-2>` for `c = 1`.
pub fn lambda_2(c: u8) -> Result<Lattice, LatticeError> {
    match c {
        0 => rescale(&hyperbolic(), 2),
        1 => Ok(direct_sum(&[diag(2)?, diag(-2)?])),
        _ => Err(LatticeError::UnknownLattice(format!("Lambda_2,{c}"))),
    }
}

/// `Gamma_{2,c} = Lambda_{2,c} + H + D4(-1)^2`.
pub fn gamma_2(c: u8) -> Result<Lattice, LatticeError> {
    let d4 = rescale(&root_d(4)?, -1)?;
    Ok(direct_sum(&[lambda_2(c)?, hyperbolic(), d4.clone(), d4]))
}

/// Parse sums such as `H + E8(-2) + A1(-1)^4 + <2>`.
pub fn parse_lattice(text: &str) -> Result<Lattice, LatticeError> {
    let mut parts = Vec::new();
    let mut offset = 0;
    for raw in text.split('+') {
        let col = offset + raw.len() - raw.trim_start().len() + 1;
        offset += raw.len() + 1;
        let term = raw.trim();
        let err = |m: &str| LatticeError::Parse { column: col, message: m.to_string() };
        if term.is_empty() {
            return Err(err("empty summand"));
        }
        let (body, power) = match term.rsplit_once('^') {
            Some((b, p)) if !b.ends_with('<') => (b.trim(), p.trim().parse::<usize>().map_err(|_| err("bad exponent"))?),
            _ => (term, 1),
        };
        let (name, scale) = match body.strip_suffix(')').and_then(|b| b.split_once('(')) {
            Some((n, s)) => (n.trim(), s.trim().parse::<i64>().map_err(|_| err("bad scale"))?),
            None => (body, 1),
        };
        let base = standard_lattice(name).map_err(|e| err(&e.to_string()))?;
        let piece = rescale(&base, scale).map_err(|e| err(&e.to_string()))?;
        for _ in 0..power {
            parts.push(piece.clone());
        }
    }
    Ok(direct_sum(&parts))
}

/// Determinant as `i64` when it fits.
pub fn det_i64(l: &Lattice) -> Option<i64> {
    l.det().to_i64()
}

impl Lattice {
    pub fn is_unimodular(&self) -> bool {
        self.det().abs().is_one()
    }
}
