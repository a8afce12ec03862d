//! Line-oriented scenario files.
//!
//! ```text
//! # comment
//! scenario alternate-example
//! kind fiber-config
//! model alternate
//! poly A 4 = s^4
//! poly B 8 = s^8 - t^8
//! expect config 8 I2 + 8 I1
//! expect euler 24
//! ```
//!
//! A file holds one or more scenarios, each opened by a `scenario` line.
//! Polynomials are parsed with the variables of the slot they fill and must
//! be homogeneous of the declared degree.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use k3kit::duality::Subfamily;
use k3kit::elliptic::KodairaType;
use k3kit::exactpoly::{parse_hom, Vars};
use k3kit::lattice::{parse_lattice, Lattice};
use k3kit::sample::CubicSpecialization;
use k3kit::{HomPoly, Rational};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScenarioError {
    #[error("line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("line {line}, column {column}: '{name}' must be homogeneous of degree {expected}: {message}")]
    DegreeMismatch { line: usize, column: usize, name: String, expected: usize, message: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Kind {
    FiberConfig,
    LatticeIdentity,
    HermiteIdentity,
    ConstructionRoundtrip,
    TableConsistency,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::FiberConfig => "fiber-config",
            Kind::LatticeIdentity => "lattice-identity",
            Kind::HermiteIdentity => "hermite-identity",
            Kind::ConstructionRoundtrip => "construction-roundtrip",
            Kind::TableConsistency => "table-consistency",
        }
    }

    fn parse(s: &str) -> Option<Kind> {
        [Kind::FiberConfig, Kind::LatticeIdentity, Kind::HermiteIdentity, Kind::ConstructionRoundtrip, Kind::TableConsistency]
            .into_iter()
            .find(|k| k.as_str() == s)
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A model given by explicit data.
#[derive(Clone, Debug, PartialEq)]
pub enum Builder {
    Weierstrass { a2: HomPoly, a4: HomPoly, a6: HomPoly, weight: usize },
    Alternate { a: HomPoly, b: HomPoly },
    VgsDual { a: HomPoly, b: HomPoly },
    Res { f: HomPoly, g: HomPoly },
    BaseChange { f: HomPoly, g: HomPoly, d0: Rational, dinf: Rational },
    Twist { f: HomPoly, g: HomPoly, d0: Rational, dinf: Rational },
    RulingSwap { c: HomPoly, a: HomPoly, d: HomPoly },
    Table2 { alpha: HomPoly, gamma: HomPoly, delta: HomPoly, row: String },
    Table3 { a: HomPoly, c: HomPoly, row: String },
    FourH { rho: Vec<Rational> },
    ThreeLines { params: Vec<Rational> },
    Subfamily { kind: Subfamily, f: HomPoly, g: HomPoly },
}

/// A family of random instances.
#[derive(Clone, Debug, PartialEq)]
pub enum Family {
    Res,
    BaseChange,
    Twist,
    Alternate,
    VgsDual,
    RulingSwap,
    GSurface,
    Table2(String),
    Table3(String),
    FourH,
    RelativeJacobian,
    ThreeLines(CubicSpecialization),
    Subfamily(Subfamily),
}

#[derive(Clone, Debug, PartialEq)]
pub enum Source {
    Explicit(Builder),
    Sampled(Family),
}

#[derive(Clone, Debug, PartialEq)]
pub struct FiberSpec {
    pub source: Source,
    pub config: Option<Vec<(usize, KodairaType)>>,
    pub euler: Option<u32>,
    /// Product of the places of a type, compared up to scaling.
    pub places: Vec<(KodairaType, String)>,
    /// I2 and I1 place sets swap between the model and its dual.
    pub dual_swap: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub enum LatticeCheck {
    Equivalent(String, String),
    Det(String, i64),
    NegativeDefinite(String),
    Invariants { name: String, rank: usize, signature: (usize, usize), length: usize, delta: u8 },
}

#[derive(Clone, Debug, PartialEq)]
pub struct LatticeSpec {
    pub lattices: BTreeMap<String, (String, Lattice)>,
    pub checks: Vec<LatticeCheck>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HermiteSuite {
    RIdentity,
    Discriminants,
    AbelJacobi,
    JEquality,
}

#[derive(Clone, Debug, PartialEq)]
pub enum HermiteCheck {
    Jacobian(Rational, Rational),
    Discriminant(Rational),
    J(Rational),
    /// Base point, point, and the image (`None` for infinity).
    AbelJacobi([Rational; 4], Option<(Rational, Rational)>),
}

#[derive(Clone, Debug, PartialEq)]
pub enum HermiteSpec {
    Suite(HermiteSuite),
    Curve([Rational; 5], Vec<HermiteCheck>),
}

#[derive(Clone, Debug, PartialEq)]
pub enum Construction {
    VgsSquare,
    InvolutionSquare,
    Normalize,
    Reconstruct4H,
    Symmetries,
    /// `(a0, a1, a2, xi, c0, cinf)`.
    QuadricSurface(Vec<Rational>),
}

#[derive(Clone, Debug, PartialEq)]
pub enum Body {
    Fiber(FiberSpec),
    Lattice(LatticeSpec),
    Hermite(HermiteSpec),
    Roundtrip(Construction),
    Table(u8),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Scenario {
    pub name: String,
    pub kind: Kind,
    pub body: Body,
    pub trials: Option<usize>,
    /// Name of the error the run must end in, if any.
    pub expect_error: Option<String>,
}

/// Text of one directive with its position.
#[derive(Clone, Debug)]
struct Line {
    no: usize,
    /// Column of `rest` within the line, 1-based.
    col: usize,
    head: String,
    rest: String,
}

impl Line {
    fn err<T>(&self, column_offset: usize, message: impl Into<String>) -> Result<T, ScenarioError> {
        Err(ScenarioError::Parse { line: self.no, column: self.col + column_offset, message: message.into() })
    }

    fn words(&self) -> Vec<&str> {
        self.rest.split_whitespace().collect()
    }
}

pub fn parse_scenarios(text: &str) -> Result<Vec<Scenario>, ScenarioError> {
    let mut blocks: Vec<(Line, Vec<Line>)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let no = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        let trimmed = content.trim_start();
        if trimmed.trim().is_empty() {
            continue;
        }
        let indent = content.len() - trimmed.len();
        let (head, rest, sep) = match trimmed.split_once(char::is_whitespace) {
            Some((h, r)) => (h, r, 1),
            None => (trimmed, "", 0),
        };
        let rest_trim = rest.trim_start();
        let col = indent + head.len() + sep + (rest.len() - rest_trim.len()) + 1;
        let line = Line { no, col, head: head.to_string(), rest: rest_trim.trim_end().to_string() };
        if line.head == "scenario" {
            blocks.push((line, Vec::new()));
        } else if let Some(b) = blocks.last_mut() {
            b.1.push(line);
        } else {
            return Err(ScenarioError::Parse { line: no, column: indent + 1, message: "expected 'scenario <name>'".into() });
        }
    }
    blocks.into_iter().map(|(h, body)| parse_block(&h, &body)).collect()
}

pub fn parse_scenario(text: &str) -> Result<Scenario, ScenarioError> {
    let mut all = parse_scenarios(text)?;
    match all.len() {
        1 => Ok(all.remove(0)),
        n => Err(ScenarioError::Parse { line: 1, column: 1, message: format!("expected one scenario, found {n}") }),
    }
}

fn rational(line: &Line, word: &str) -> Result<Rational, ScenarioError> {
    let off = line.rest.find(word).unwrap_or(0);
    Rational::from_str(word).or_else(|_| line.err(off, format!("expected a rational number, found '{word}'")))
}

fn number<T: FromStr>(line: &Line, word: &str) -> Result<T, ScenarioError> {
    let off = line.rest.find(word).unwrap_or(0);
    word.parse().or_else(|_| line.err(off, format!("expected a number, found '{word}'")))
}

/// `8 I2 + 8 I1`.
fn parse_config(line: &Line, text: &str) -> Result<Vec<(usize, KodairaType)>, ScenarioError> {
    let mut out = Vec::new();
    for part in text.split('+') {
        let w: Vec<&str> = part.split_whitespace().collect();
        let [n, t] = w[..] else {
            return line.err(0, format!("expected '<count> <type>', found '{}'", part.trim()));
        };
        let Some(kt) = KodairaType::parse(t) else {
            return line.err(0, format!("unknown fibre type '{t}'"));
        };
        out.push((number(line, n)?, kt));
    }
    Ok(out)
}

fn kodaira(line: &Line, t: &str) -> Result<KodairaType, ScenarioError> {
    KodairaType::parse(t).map_or_else(|| line.err(0, format!("unknown fibre type '{t}'")), Ok)
}

/// Raw `poly NAME DEG = EXPR` directive.
struct RawPoly {
    line: Line,
    degree: usize,
    expr: String,
    expr_col: usize,
}

struct Collected {
    polys: BTreeMap<String, RawPoly>,
    values: BTreeMap<String, (Line, Vec<Rational>)>,
}

impl Collected {
    fn poly(&self, header: &Line, name: &str, vars: Vars, degree: usize) -> Result<HomPoly, ScenarioError> {
        let Some(raw) = self.polys.get(name) else {
            return header.err(0, format!("missing 'poly {name} {degree} = ...'"));
        };
        let mismatch = |column: usize, message: String| ScenarioError::DegreeMismatch {
            line: raw.line.no,
            column,
            name: name.to_string(),
            expected: degree,
            message,
        };
        if raw.degree != degree {
            return Err(mismatch(raw.line.col, format!("declared degree {}", raw.degree)));
        }
        match parse_hom(&raw.expr, vars) {
            Ok(p) if p.degree() == degree || p.is_zero() => Ok(if p.is_zero() { HomPoly::zero(vars, degree) } else { p }),
            Ok(p) => Err(mismatch(raw.expr_col, format!("found degree {}", p.degree()))),
            Err(e) if e.message.starts_with("term of degree") => Err(mismatch(raw.expr_col + e.column - 1, e.message)),
            Err(e) => Err(ScenarioError::Parse { line: raw.line.no, column: raw.expr_col + e.column - 1, message: e.message }),
        }
    }

    fn values(&self, header: &Line, name: &str, count: usize) -> Result<Vec<Rational>, ScenarioError> {
        let Some((line, v)) = self.values.get(name) else {
            return header.err(0, format!("missing 'value {name} = ...'"));
        };
        if v.len() != count {
            return line.err(0, format!("'{name}' needs {count} values, found {}", v.len()));
        }
        Ok(v.clone())
    }

    fn value(&self, header: &Line, name: &str) -> Result<Rational, ScenarioError> {
        Ok(self.values(header, name, 1)?.remove(0))
    }
}

fn subfamily(line: &Line, w: &str) -> Result<Subfamily, ScenarioError> {
    Ok(match w {
        "res" => Subfamily::Res,
        "y" => Subfamily::YSub,
        "y~" => Subfamily::YTildeSub,
        "z" => Subfamily::Z,
        _ => return line.err(0, format!("unknown subfamily '{w}'")),
    })
}

fn specialization(line: &Line, w: &str) -> Result<CubicSpecialization, ScenarioError> {
    Ok(match w {
        "generic" => CubicSpecialization::Generic,
        "d2" => CubicSpecialization::D2,
        "d2e2" => CubicSpecialization::D2E2,
        "d2e2e1" => CubicSpecialization::D2E2E1,
        _ => return line.err(0, format!("unknown specialization '{w}'")),
    })
}

fn row_arg(line: &Line, words: &[&str], rows: &[&str]) -> Result<String, ScenarioError> {
    match words.get(1) {
        Some(r) if rows.contains(r) => Ok(r.to_string()),
        Some(r) => line.err(0, format!("unknown row '{r}'")),
        None => line.err(0, "missing row label"),
    }
}

const TABLE2_ROWS: [&str; 12] = ["X", "X'", "Y", "Y'", "X~", "X~'", "Y~", "Y~'", "R~", "R~'", "R", "R'"];
const TABLE3_ROWS: [&str; 7] = ["X", "X'", "Y'", "Y", "Y~", "R'", "R"];

fn build(line: &Line, c: &Collected) -> Result<Builder, ScenarioError> {
    let w = line.words();
    let st = Vars::ST;
    let uv = Vars::CAP_UV;
    Ok(match w.first().copied().unwrap_or("") {
        "weierstrass" => {
            let weight: usize = number(line, &c.value(line, "weight")?.to_string())?;
            Builder::Weierstrass {
                a2: c.poly(line, "a2", st, 2 * weight)?,
                a4: c.poly(line, "a4", st, 4 * weight)?,
                a6: c.poly(line, "a6", st, 6 * weight)?,
                weight,
            }
        }
        "alternate" => Builder::Alternate { a: c.poly(line, "A", st, 4)?, b: c.poly(line, "B", st, 8)? },
        "vgs-dual" => Builder::VgsDual { a: c.poly(line, "A", st, 4)?, b: c.poly(line, "B", st, 8)? },
        "res" => Builder::Res { f: c.poly(line, "f", uv, 4)?, g: c.poly(line, "g", uv, 6)? },
        "base-change" | "twist" => {
            let (f, g) = (c.poly(line, "f", uv, 4)?, c.poly(line, "g", uv, 6)?);
            let (d0, dinf) = (c.value(line, "d0")?, c.value(line, "dinf")?);
            if w[0] == "twist" {
                Builder::Twist { f, g, d0, dinf }
            } else {
                Builder::BaseChange { f, g, d0, dinf }
            }
        }
        "ruling-swap" => Builder::RulingSwap {
            c: c.poly(line, "C", st, 4)?,
            a: c.poly(line, "A", st, 4)?,
            d: c.poly(line, "D", st, 4)?,
        },
        "table2" => Builder::Table2 {
            alpha: c.poly(line, "alpha", Vars::XY, 2)?,
            gamma: c.poly(line, "gamma", Vars::XY, 2)?,
            delta: c.poly(line, "delta", Vars::XY, 2)?,
            row: row_arg(line, &w, &TABLE2_ROWS)?,
        },
        "table3" => Builder::Table3 {
            a: c.poly(line, "A", st, 4)?,
            c: c.poly(line, "C", st, 4)?,
            row: row_arg(line, &w, &TABLE3_ROWS)?,
        },
        "four-h" => Builder::FourH { rho: c.values(line, "rho", 16)? },
        "three-lines" => Builder::ThreeLines { params: c.values(line, "params", 10)? },
        "subfamily" => {
            let kind = subfamily(line, w.get(1).copied().unwrap_or(""))?;
            Builder::Subfamily { kind, f: c.poly(line, "f", uv, 2)?, g: c.poly(line, "g", uv, 3)? }
        }
        other => return line.err(0, format!("unknown model '{other}'")),
    })
}

fn family(line: &Line) -> Result<Family, ScenarioError> {
    let w = line.words();
    let arg = w.get(1).copied().unwrap_or("");
    Ok(match w.first().copied().unwrap_or("") {
        "res" => Family::Res,
        "base-change" => Family::BaseChange,
        "twist" => Family::Twist,
        "alternate" => Family::Alternate,
        "vgs-dual" => Family::VgsDual,
        "ruling-swap" => Family::RulingSwap,
        "g-surface" => Family::GSurface,
        "table2" => Family::Table2(row_arg(line, &w, &TABLE2_ROWS)?),
        "table3" => Family::Table3(row_arg(line, &w, &TABLE3_ROWS)?),
        "four-h" => Family::FourH,
        "relative-jacobian" => Family::RelativeJacobian,
        "three-lines" => Family::ThreeLines(specialization(line, arg)?),
        "subfamily" => Family::Subfamily(subfamily(line, arg)?),
        other => return line.err(0, format!("unknown family '{other}'")),
    })
}

fn parse_block(header: &Line, lines: &[Line]) -> Result<Scenario, ScenarioError> {
    let name = header.rest.trim().to_string();
    if name.is_empty() || name.contains(char::is_whitespace) {
        return header.err(0, "scenario name must be one word");
    }
    let mut kind = None;
    let mut trials = None;
    let mut expect_error = None;
    let mut model = None;
    let mut sample = None;
    let mut expects = Vec::new();
    let mut lattices = BTreeMap::new();
    let mut collected = Collected { polys: BTreeMap::new(), values: BTreeMap::new() };
    let mut suite = None;
    let mut curve = None;
    let mut construction = None;
    let mut table = None;

    for line in lines {
        match line.head.as_str() {
            "kind" => {
                kind = Some(Kind::parse(&line.rest).map_or_else(|| line.err(0, format!("unknown kind '{}'", line.rest)), Ok)?)
            }
            "trials" => trials = Some(number(line, &line.rest)?),
            "model" => model = Some(line.clone()),
            "sample" => sample = Some(family(line)?),
            "poly" => {
                let Some((lhs, expr)) = line.rest.split_once('=') else {
                    return line.err(0, "expected 'poly <name> <degree> = <expression>'");
                };
                let w: Vec<&str> = lhs.split_whitespace().collect();
                let [pname, deg] = w[..] else {
                    return line.err(0, "expected 'poly <name> <degree> = <expression>'");
                };
                let expr_col = line.col + lhs.len() + 1 + (expr.len() - expr.trim_start().len());
                collected.polys.insert(
                    pname.to_string(),
                    RawPoly { line: line.clone(), degree: number(line, deg)?, expr: expr.trim().to_string(), expr_col },
                );
            }
            "value" => {
                let Some((lhs, rhs)) = line.rest.split_once('=') else {
                    return line.err(0, "expected 'value <name> = <rationals>'");
                };
                let vals = rhs.split_whitespace().map(|w| rational(line, w)).collect::<Result<Vec<_>, _>>()?;
                collected.values.insert(lhs.trim().to_string(), (line.clone(), vals));
            }
            "lattice" => {
                let Some((lhs, rhs)) = line.rest.split_once('=') else {
                    return line.err(0, "expected 'lattice <name> = <sum>'");
                };
                let offset = lhs.len() + 1 + (rhs.len() - rhs.trim_start().len());
                let l = parse_lattice(rhs.trim()).map_err(|e| {
                    let column = match &e {
                        k3kit::lattice::LatticeError::Parse { column, .. } => line.col + offset + column - 1,
                        _ => line.col + offset,
                    };
                    ScenarioError::Parse { line: line.no, column, message: e.to_string() }
                })?;
                lattices.insert(lhs.trim().to_string(), (rhs.trim().to_string(), l));
            }
            "suite" => {
                suite = Some(match line.rest.as_str() {
                    "r-identity" => HermiteSuite::RIdentity,
                    "discriminants" => HermiteSuite::Discriminants,
                    "abel-jacobi" => HermiteSuite::AbelJacobi,
                    "j-equality" => HermiteSuite::JEquality,
                    other => return line.err(0, format!("unknown suite '{other}'")),
                })
            }
            "curve" => {
                let v = line.words().iter().map(|w| rational(line, w)).collect::<Result<Vec<_>, _>>()?;
                let Ok(a) = <[Rational; 5]>::try_from(v) else {
                    return line.err(0, "a curve needs five coefficients a0 .. a4");
                };
                curve = Some(a);
            }
            "construction" => construction = Some(line.clone()),
            "table" => {
                table = Some(match line.rest.as_str() {
                    "2" => 2,
                    "3" => 3,
                    other => return line.err(0, format!("unknown table '{other}'")),
                })
            }
            "expect" => {
                let w = line.words();
                if w.first() == Some(&"error") {
                    match w.get(1) {
                        Some(e) => expect_error = Some(e.to_string()),
                        None => return line.err(0, "missing error name"),
                    }
                } else {
                    expects.push(line.clone());
                }
            }
            other => {
                let column = line.col - line.head.len() - 1;
                return Err(ScenarioError::Parse { line: line.no, column, message: format!("unknown directive '{other}'") });
            }
        }
    }

    let Some(kind) = kind else {
        return header.err(0, format!("scenario '{name}' has no 'kind' line"));
    };
    let body = match kind {
        Kind::FiberConfig => {
            let source = match (&model, sample) {
                (Some(m), None) => Source::Explicit(build(m, &collected)?),
                (None, Some(f)) => Source::Sampled(f),
                _ => return header.err(0, "a fiber-config scenario needs exactly one of 'model' or 'sample'"),
            };
            let mut spec = FiberSpec { source, config: None, euler: None, places: Vec::new(), dual_swap: false };
            for e in &expects {
                let w = e.words();
                match w[0] {
                    "config" => spec.config = Some(parse_config(e, e.rest["config".len()..].trim())?),
                    "euler" => spec.euler = Some(number(e, w.get(1).copied().unwrap_or(""))?),
                    "places" => {
                        let Some((lhs, rhs)) = e.rest["places".len()..].split_once('=') else {
                            return e.err(0, "expected 'expect places <type> = <polynomial>'");
                        };
                        spec.places.push((kodaira(e, lhs.trim())?, rhs.trim().to_string()));
                    }
                    "dual-swap" => spec.dual_swap = true,
                    other => return e.err(0, format!("unknown expectation '{other}' for {kind}")),
                }
            }
            Body::Fiber(spec)
        }
        Kind::LatticeIdentity => {
            let mut checks = Vec::new();
            let known = |e: &Line, n: &str| {
                if lattices.contains_key(n) {
                    Ok(n.to_string())
                } else {
                    e.err(0, format!("unknown lattice '{n}'"))
                }
            };
            for e in &expects {
                let w = e.words();
                checks.push(match w[..] {
                    ["equivalent", a, b] => LatticeCheck::Equivalent(known(e, a)?, known(e, b)?),
                    ["det", a, d] => LatticeCheck::Det(known(e, a)?, number(e, d)?),
                    ["negative-definite", a] => LatticeCheck::NegativeDefinite(known(e, a)?),
                    ["invariants", a, rank, p, m, l, delta] => LatticeCheck::Invariants {
                        name: known(e, a)?,
                        rank: number(e, rank)?,
                        signature: (number(e, p)?, number(e, m)?),
                        length: number(e, l)?,
                        delta: number(e, delta)?,
                    },
                    _ => return e.err(0, format!("unknown lattice expectation '{}'", e.rest)),
                });
            }
            Body::Lattice(LatticeSpec { lattices, checks })
        }
        Kind::HermiteIdentity => match (suite, curve) {
            (Some(s), None) => Body::Hermite(HermiteSpec::Suite(s)),
            (None, Some(a)) => {
                let mut checks = Vec::new();
                for e in &expects {
                    let w = e.words();
                    let r = |i: usize| rational(e, w.get(i).copied().unwrap_or(""));
                    checks.push(match w[0] {
                        "jacobian" => HermiteCheck::Jacobian(r(1)?, r(2)?),
                        "discriminant" => HermiteCheck::Discriminant(r(1)?),
                        "j" => HermiteCheck::J(r(1)?),
                        "aj" => {
                            let pts = [r(1)?, r(2)?, r(3)?, r(4)?];
                            if w.get(5) != Some(&"=") {
                                return e.err(0, "expected 'expect aj x0 w0 x w = xi eta' or '= infinity'");
                            }
                            let image = if w.get(6) == Some(&"infinity") { None } else { Some((r(6)?, r(7)?)) };
                            HermiteCheck::AbelJacobi(pts, image)
                        }
                        other => return e.err(0, format!("unknown expectation '{other}' for {kind}")),
                    });
                }
                Body::Hermite(HermiteSpec::Curve(a, checks))
            }
            _ => return header.err(0, "a hermite-identity scenario needs exactly one of 'suite' or 'curve'"),
        },
        Kind::ConstructionRoundtrip => {
            let Some(c) = construction else {
                return header.err(0, "missing 'construction' line");
            };
            Body::Roundtrip(match c.rest.as_str() {
                "vgs-square" => Construction::VgsSquare,
                "involution-square" => Construction::InvolutionSquare,
                "normalize" => Construction::Normalize,
                "reconstruct-4h" => Construction::Reconstruct4H,
                "quadric-symmetries" => Construction::Symmetries,
                "quadric-surface" => Construction::QuadricSurface(collected.values(&c, "params", 6)?),
                other => return c.err(0, format!("unknown construction '{other}'")),
            })
        }
        Kind::TableConsistency => match table {
            Some(t) => Body::Table(t),
            None => return header.err(0, "missing 'table' line"),
        },
    };
    Ok(Scenario { name, kind, body, trials, expect_error })
}
