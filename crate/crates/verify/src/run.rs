use std::fmt::Debug;

use k3kit::duality::{
    base_change_k3, four_h_surface, g_surface, moduli_involution, normalize_three_i0star_all, ruling_swap,
    subfamily_models, table2_generate, table3_generate, three_lines_cubic_model, twist_model, vgs_dual, AlternatePair,
    FourHData, RESData, ThreeI0StarModel, ThreeLinesCubicParams,
};
use k3kit::elliptic::{fiber_configuration, FiberConfiguration, KodairaType, WeierstrassModel};
use k3kit::exactpoly::{parse_hom, resultant, BiHomPoly, HomPoly as Form, MPoly, Poly, Vars};
use k3kit::hermite_aj::{
    abel_jacobi, abel_jacobi_functions, build_theorem59_surface, correspondence_22, correspondence_polys,
    jacobian_quartic, j_invariant_quartic, symmetry_identity, q_from_derivatives, same_j, double_quadric_constraint,
    AJImage, Biquadratic, DoubleQuadricParams, SymmetryCase, QuarticCurve,
};
use k3kit::lattice::{nikulin_equivalent, two_elementary_invariants};
use k3kit::sample;
use k3kit::{HomPoly, Rational, UniPoly};
use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::report::{place_rows, Report, ScenarioReport, Status};
use crate::scenario::*;

pub const DEFAULT_TRIALS: usize = 100;

#[derive(Clone, Copy, Debug)]
pub struct RunOptions {
    pub seed: u64,
    /// Overrides the trial count of every randomized scenario.
    pub trials: Option<usize>,
}

type Model = WeierstrassModel<Rational>;

/// Why a scenario did not pass.
#[derive(Debug)]
enum Failure {
    Fail(String),
    /// A module error, by variant name.
    Error(String, String),
}

type Outcome<T = ()> = Result<T, Failure>;

fn error_name<E: Debug>(e: &E) -> String {
    let dbg = format!("{e:?}");
    dbg.split(|c: char| !c.is_alphanumeric()).next().unwrap_or("").to_string()
}

fn module<T, E: Debug + std::fmt::Display>(r: Result<T, E>) -> Outcome<T> {
    r.map_err(|e| Failure::Error(error_name(&e), e.to_string()))
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(Failure::Fail(msg()))
    }
}

/// Stable 64-bit FNV-1a, so each scenario gets its own stream whatever
/// else is selected.
fn name_hash(name: &str) -> u64 {
    name.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

pub fn scenario_seed(seed: u64, name: &str) -> u64 {
    seed ^ name_hash(name)
}

pub fn run_all(scenarios: &[Scenario], opts: &RunOptions) -> Report {
    let reports: Vec<ScenarioReport> = scenarios.par_iter().map(|s| run(s, opts)).collect();
    Report::new(opts.seed, reports)
}

pub fn run(s: &Scenario, opts: &RunOptions) -> ScenarioReport {
    let mut rep = ScenarioReport::new(&s.name, s.kind.as_str());
    let seed = scenario_seed(opts.seed, &s.name);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let trials = opts.trials.or(s.trials).unwrap_or(DEFAULT_TRIALS);
    if is_randomized(&s.body) {
        rep.seed = Some(seed);
        rep.trials = Some(trials);
    }
    let outcome = match &s.body {
        Body::Fiber(spec) => run_fiber(spec, trials, &mut rng, &mut rep),
        Body::Lattice(spec) => run_lattice(spec, &mut rep),
        Body::Hermite(spec) => run_hermite(spec, trials, &mut rng, &mut rep),
        Body::Roundtrip(c) => run_construction(c, trials, &mut rng, &mut rep),
        Body::Table(t) => run_table(*t, trials, &mut rng),
    };
    match (outcome, &s.expect_error) {
        (Ok(()), None) => {}
        (Ok(()), Some(want)) => {
            rep.status = Status::Fail;
            rep.message = Some(format!("expected error {want}, but the run succeeded"));
        }
        (Err(Failure::Error(name, msg)), Some(want)) if &name == want => {
            rep.facts.insert("error".into(), format!("{name}: {msg}"));
        }
        (Err(Failure::Fail(m)), _) => {
            rep.status = Status::Fail;
            rep.message = Some(m);
        }
        (Err(Failure::Error(name, msg)), _) => {
            rep.status = Status::Error;
            rep.message = Some(format!("{name}: {msg}"));
        }
    }
    rep
}

fn is_randomized(b: &Body) -> bool {
    match b {
        Body::Fiber(f) => matches!(f.source, Source::Sampled(_)),
        Body::Hermite(h) => matches!(h, HermiteSpec::Suite(_)),
        Body::Roundtrip(c) => !matches!(c, Construction::QuadricSurface(_)),
        Body::Table(_) => true,
        Body::Lattice(_) => false,
    }
}

fn row<'a>(models: Vec<(&'static str, &'a Model)>, label: &str) -> Model {
    models.into_iter().find(|(n, _)| *n == label).map(|(_, m)| m.clone()).expect("row labels are validated on parse")
}

fn explicit_model(b: &Builder) -> Outcome<(Model, Option<Model>)> {
    Ok(match b {
        Builder::Weierstrass { a2, a4, a6, weight } => {
            (module(WeierstrassModel::new(a2.clone(), a4.clone(), a6.clone(), *weight))?, None)
        }
        Builder::Alternate { a, b } => {
            let p = module(AlternatePair::new(a.clone(), b.clone()))?;
            (p.model(), Some(vgs_dual(&p).model()))
        }
        Builder::VgsDual { a, b } => {
            let p = module(AlternatePair::new(a.clone(), b.clone()))?;
            (vgs_dual(&p).model(), Some(p.model()))
        }
        Builder::Res { f, g } => (module(RESData::new(f.clone(), g.clone()))?.model(), None),
        Builder::BaseChange { f, g, d0, dinf } => {
            let r = module(RESData::new(f.clone(), g.clone()))?;
            (module(base_change_k3(&r, d0, dinf))?, None)
        }
        Builder::Twist { f, g, d0, dinf } => {
            let r = module(RESData::new(f.clone(), g.clone()))?;
            (module(twist_model(&r, d0, dinf))?, None)
        }
        Builder::RulingSwap { c, a, d } => (ruling_swap(c, a, d).y_tilde, None),
        Builder::Table2 { alpha, gamma, delta, row: label } => {
            let t = module(table2_generate(alpha, gamma, delta))?;
            (row(t.models(), label), None)
        }
        Builder::Table3 { a, c, row: label } => {
            let t = module(table3_generate(a, c))?;
            (row(t.models(), label), None)
        }
        Builder::FourH { rho } => {
            let data = FourHData { rho: std::array::from_fn(|i| std::array::from_fn(|j| rho[4 * i + j].clone())) };
            (module(four_h_surface(&data))?.model, None)
        }
        Builder::ThreeLines { params } => (module(three_lines_cubic_model(&three_lines(params)))?, None),
        Builder::Subfamily { kind, f, g } => (module(subfamily_models(*kind, f, g))?, None),
    })
}

fn three_lines(v: &[Rational]) -> ThreeLinesCubicParams {
    let q = |i: usize| v[i].clone();
    ThreeLinesCubicParams {
        mu: q(0),
        nu: q(1),
        c0: q(2),
        c1: q(3),
        d0: q(4),
        d1: q(5),
        d2: q(6),
        e0: q(7),
        e1: q(8),
        e2: q(9),
    }
}

fn sampled_model<R: Rng>(f: &Family, rng: &mut R) -> Outcome<(Model, Option<Model>)> {
    Ok(match f {
        Family::Res => (sample::res(rng).model(), None),
        Family::BaseChange | Family::Twist => {
            let r = sample::res(rng);
            let (d0, dinf) = sample::cover_params(rng, &r);
            let m = if *f == Family::Twist { twist_model(&r, &d0, &dinf) } else { base_change_k3(&r, &d0, &dinf) };
            (module(m)?, None)
        }
        Family::Alternate => {
            let p = sample::alternate_pair(rng);
            (p.model(), Some(vgs_dual(&p).model()))
        }
        Family::VgsDual => {
            let p = sample::alternate_pair(rng);
            (vgs_dual(&p).model(), Some(p.model()))
        }
        Family::RulingSwap => {
            let (c, a, d) = sample::cad(rng);
            (ruling_swap(&c, &a, &d).y_tilde, None)
        }
        Family::GSurface => {
            let (c, a, d) = sample::cad(rng);
            let p = module(AlternatePair::with_factorization(a, c, d))?;
            (module(g_surface(&p))?.y, None)
        }
        Family::Table2(label) => {
            let (alpha, gamma, delta) = sample::table2_forms(rng);
            let t = module(table2_generate(&alpha, &gamma, &delta))?;
            (row(t.models(), label), None)
        }
        Family::Table3(label) => loop {
            let (a, c) = sample::table3_forms(rng);
            let t = module(table3_generate(&a, &c))?;
            // rows built from the Hermite pair need 4f^3 + 27g^2 squarefree
            let four = Rational::from_integer(4.into());
            let d = &(&(&t.f * &t.f) * &t.f).scale(&four) + &(&t.g * &t.g).scale(&Rational::from_integer(27.into()));
            if label == "X" || label == "X'" || sample::is_squarefree(&d) {
                break (row(t.models(), label), None);
            }
        },
        Family::FourH => (module(four_h_surface(&sample::four_h(rng)))?.model, None),
        Family::RelativeJacobian => {
            let (rj, _) = sample::four_h_rational(rng, &Rational::zero(), &Rational::one());
            (rj.normalized_model, None)
        }
        Family::ThreeLines(kind) => (module(three_lines_cubic_model(&sample::three_lines(rng, *kind)))?, None),
        Family::Subfamily(kind) => {
            let (f, g) = sample::subfamily_fg(rng);
            (module(subfamily_models(*kind, &f, &g))?, None)
        }
    })
}

fn places_product(c: &FiberConfiguration<Rational>, t: KodairaType, vars: Vars) -> HomPoly {
    c.places_of(t).iter().fold(Form::one(vars), |acc, p| &acc * &p.factor).normalized()
}

fn check_fiber(spec: &FiberSpec, m: &Model, dual: Option<&Model>) -> Outcome<FiberConfiguration<Rational>> {
    let c = module(fiber_configuration(m))?;
    if let Some(want) = &spec.config {
        ensure(c.matches(want), || {
            let w: Vec<String> = want.iter().map(|(n, t)| format!("{n}{t}")).collect();
            format!("configuration {c}, expected {}", w.join(" + "))
        })?;
    }
    if let Some(e) = spec.euler {
        ensure(c.total_euler == e, || format!("Euler number {}, expected {e}", c.total_euler))?;
    }
    for (t, text) in &spec.places {
        let want = parse_hom(text, m.vars()).map_err(|e| Failure::Error("ParseError".into(), e.to_string()))?;
        let got = places_product(&c, *t, m.vars());
        ensure(got == want.normalized(), || format!("{t} places {got}, expected {want}"))?;
    }
    if spec.dual_swap {
        let Some(d) = dual else {
            return Err(Failure::Fail("dual-swap needs a model with a dual".into()));
        };
        let cd = module(fiber_configuration(d))?;
        let v = m.vars();
        let (i1, i2) = (KodairaType::I(1), KodairaType::I(2));
        ensure(
            places_product(&c, i2, v) == places_product(&cd, i1, v) && places_product(&c, i1, v) == places_product(&cd, i2, v),
            || format!("I2/I1 places do not swap: {c} against dual {cd}"),
        )?;
    }
    Ok(c)
}

fn run_fiber<R: Rng>(spec: &FiberSpec, trials: usize, rng: &mut R, rep: &mut ScenarioReport) -> Outcome {
    match &spec.source {
        Source::Explicit(b) => {
            let (m, dual) = explicit_model(b)?;
            let c = module(fiber_configuration(&m))?;
            rep.configuration = Some(c.to_string());
            rep.places = place_rows(&c);
            rep.facts.insert("euler".into(), c.total_euler.to_string());
            check_fiber(spec, &m, dual.as_ref()).map(|_| ())
        }
        Source::Sampled(f) => {
            for k in 0..trials {
                let (m, dual) = sampled_model(f, rng)?;
                let c = check_fiber(spec, &m, dual.as_ref()).map_err(|e| match e {
                    Failure::Fail(msg) => Failure::Fail(format!("trial {k}: {msg}")),
                    e => e,
                })?;
                if k == 0 {
                    rep.configuration = Some(c.to_string());
                    rep.places = place_rows(&c);
                    rep.facts.insert("euler".into(), c.total_euler.to_string());
                }
            }
            Ok(())
        }
    }
}

fn run_lattice(spec: &LatticeSpec, rep: &mut ScenarioReport) -> Outcome {
    for (name, (text, l)) in &spec.lattices {
        let inv = module(two_elementary_invariants(l))?;
        rep.facts.insert(format!("{name} = {text}"), format!("{inv}, det {}", l.det()));
    }
    let get = |n: &String| &spec.lattices[n].1;
    for c in &spec.checks {
        match c {
            LatticeCheck::Equivalent(a, b) => {
                ensure(module(nikulin_equivalent(get(a), get(b)))?, || format!("{a} and {b} have different invariants"))?
            }
            LatticeCheck::Det(a, d) => {
                let got = get(a).det();
                ensure(got == (*d).into(), || format!("det {a} = {got}, expected {d}"))?
            }
            LatticeCheck::NegativeDefinite(a) => {
                let l = get(a);
                let (p, _) = module(l.signature())?;
                ensure(p == 0 && module(l.is_definite())?, || format!("{a} is not negative definite"))?
            }
            LatticeCheck::Invariants { name, rank, signature, length, delta } => {
                let inv = module(two_elementary_invariants(get(name)))?;
                let ok = inv.rank == *rank
                    && inv.signature == *signature
                    && inv.length == *length
                    && inv.is_two_elementary
                    && inv.parity == Some(*delta);
                ensure(ok, || format!("{name}: {inv}"))?
            }
        }
    }
    Ok(())
}

fn random_quartic<R: Rng>(rng: &mut R) -> QuarticCurve {
    QuarticCurve::new(std::array::from_fn(|_| sample::coeff(rng)))
}

/// Discriminant of `a` as a binary quartic, through the resultant of `P`
/// and `P'`; a vanishing top coefficient is a root at infinity.
fn binary_discriminant(a: &[Rational; 5]) -> Rational {
    let p: UniPoly = Poly::new(a.to_vec());
    let disc = |p: &UniPoly| {
        let n = p.degree().expect("nonzero");
        let sign = if (n * (n - 1) / 2) % 2 == 0 { Rational::one() } else { -Rational::one() };
        sign * resultant(p, &p.derivative()) / p.lead()
    };
    match p.degree() {
        Some(4) => disc(&p),
        Some(3) => a[3].clone() * a[3].clone() * disc(&p),
        _ => Rational::zero(),
    }
}

fn hermite_identities(h: &QuarticCurve) -> Outcome {
    let p = h.poly();
    let cp = correspondence_polys(h);
    ensure(cp.r.diagonal() == p, || format!("R(x,x) != P(x) for {h}"))?;
    ensure(cp.r1.diagonal() == cp.q, || format!("R1(x,x) != Q(x) for {h}"))?;
    ensure(cp.q == q_from_derivatives(&p), || format!("Q differs from PP''/3 - P'^2/4 for {h}"))?;
    let x = |i: usize| {
        let v = MPoly::var(2, i);
        (0..5).fold(MPoly::zero(2), |acc, k| &acc + &v.pow(k as u32).scale(&p.coeff(k)))
    };
    let (r, r1) = (cp.r.to_mpoly(), cp.r1.to_mpoly());
    let lhs = &(&r * &r) + &(&r1 * &Biquadratic::diff_squared().to_mpoly());
    ensure((&lhs - &(&x(0) * &x(1))).is_zero(), || format!("R^2 + R1 (x-x0)^2 != P(x)P(x0) for {h}"))
}

fn discriminant_relations(h: &QuarticCurve) -> Outcome {
    let e = jacobian_quartic(h);
    let dp = binary_discriminant(&h.a);
    let q = correspondence_polys(h).q;
    let dq = binary_discriminant(&std::array::from_fn(|i| q.coeff(i)));
    ensure(dp == e.discriminant(), || format!("Discr(P) != -4f^3 - 27g^2 for {h}"))?;
    ensure(dq == e.g.clone() * e.g.clone() * dp, || format!("Discr(Q) != g^2 Discr(P) for {h}"))
}

fn run_hermite<R: Rng>(spec: &HermiteSpec, trials: usize, rng: &mut R, rep: &mut ScenarioReport) -> Outcome {
    match spec {
        HermiteSpec::Suite(suite) => {
            for _ in 0..trials {
                match suite {
                    HermiteSuite::RIdentity => hermite_identities(&random_quartic(rng))?,
                    HermiteSuite::Discriminants => discriminant_relations(&random_quartic(rng))?,
                    HermiteSuite::AbelJacobi => {
                        let (h, x0, w0) = sample::quartic_with_point(rng);
                        let e = jacobian_quartic(&h);
                        let fns = module(abel_jacobi_functions(&h, (&x0, &-w0.clone())))?;
                        ensure(fns.weierstrass_residual(&e.f, &e.g).is_zero(), || format!("AJ image leaves the Jacobian for {h}"))?;
                    }
                    HermiteSuite::JEquality => loop {
                        let h = sample::quartic(rng);
                        let xi = sample::coeff(rng);
                        let c = correspondence_22(&h, &xi);
                        let e2 = jacobian_quartic(&c.discriminant_in_x0());
                        if e2.discriminant().is_zero() {
                            continue;
                        }
                        ensure(c.phi.is_symmetric(), || format!("correspondence not symmetric for {h}"))?;
                        ensure(same_j(&jacobian_quartic(&h), &e2), || format!("j differs for {h}, xi = {xi}"))?;
                        break;
                    },
                }
            }
            Ok(())
        }
        HermiteSpec::Curve(a, checks) => {
            let h = QuarticCurve::new(a.clone());
            let e = jacobian_quartic(&h);
            rep.facts.insert("curve".into(), h.to_string());
            rep.facts.insert("jacobian".into(), format!("f = {}, g = {}", e.f, e.g));
            for c in checks {
                match c {
                    HermiteCheck::Jacobian(f, g) => {
                        ensure(&e.f == f && &e.g == g, || format!("jacobian ({}, {}), expected ({f}, {g})", e.f, e.g))?
                    }
                    HermiteCheck::Discriminant(d) => {
                        ensure(&h.discriminant() == d, || format!("discriminant {}, expected {d}", h.discriminant()))?;
                        discriminant_relations(&h)?;
                    }
                    HermiteCheck::J(j) => {
                        let got = module(j_invariant_quartic(&h))?;
                        ensure(&got == j, || format!("j = {got}, expected {j}"))?
                    }
                    HermiteCheck::AbelJacobi([x0, w0, x, w], want) => {
                        let got = module(abel_jacobi(&h, (x0, w0), (x, w)))?;
                        let expected = match want {
                            None => AJImage::Infinity,
                            Some((xi, eta)) => AJImage::Point { xi: xi.clone(), eta: eta.clone() },
                        };
                        rep.facts.insert(format!("aj({x}, {w})"), format!("{got:?}"));
                        ensure(got == expected, || format!("AJ image {got:?}, expected {expected:?}"))?;
                        if let AJImage::Point { xi, eta } = &got {
                            ensure(e.contains(xi, eta), || "AJ image is not on the Jacobian".into())?;
                        }
                    }
                }
            }
            Ok(())
        }
    }
}

fn nonunit_pair<R: Rng>(rng: &mut R) -> (Rational, Rational) {
    loop {
        let (a, b) = (sample::coeff(rng), sample::coeff(rng));
        if !(a.clone() * b.clone()).is_one() {
            return (a, b);
        }
    }
}

fn random_double_quadric<R: Rng>(rng: &mut R) -> DoubleQuadricParams {
    loop {
        let p = DoubleQuadricParams::from_ints(std::array::from_fn(|_| rng.gen_range(-5..=5)));
        if !(p.c0.clone() * p.cinf.clone()).is_one() && !p.c0.is_zero() && !p.cinf.is_zero() {
            return p;
        }
    }
}

fn run_construction<R: Rng>(c: &Construction, trials: usize, rng: &mut R, rep: &mut ScenarioReport) -> Outcome {
    if let Construction::QuadricSurface(v) = c {
        let s = module(build_theorem59_surface(&v[0], &v[1], &v[2], &v[3], &v[4], &v[5]))?;
        rep.facts.insert("gamma".into(), s.correspondence.gamma.to_string());
        rep.facts.insert("alpha".into(), s.correspondence.alpha.to_string());
        rep.facts.insert("delta".into(), s.correspondence.delta.to_string());
        ensure(s.correspondence.phi.is_symmetric(), || "correspondence is not symmetric".into())?;
        ensure(double_quadric_constraint(&s.params).is_zero(), || "constraint does not vanish".into())?;
        for (name, b) in s.table2.branches() {
            ensure(b.agree(), || format!("rulings of {name} disagree"))?;
        }
        return Ok(());
    }
    for k in 0..trials {
        let fail = |m: String| Failure::Fail(format!("trial {k}: {m}"));
        match c {
            Construction::VgsSquare => {
                let p = sample::alternate_pair(rng);
                let dd = vgs_dual(&vgs_dual(&p));
                let (four, sixteen) = (Rational::from_integer(4.into()), Rational::from_integer(16.into()));
                if dd.a != p.a.scale(&four) || dd.b != p.b.scale(&sixteen) {
                    return Err(fail(format!("dual of dual of ({}, {}) is not (4A, 16B)", p.a, p.b)));
                }
            }
            Construction::InvolutionSquare => {
                let (cc, a, d) = sample::cad(rng);
                let (d0, dinf) = nonunit_pair(rng);
                let once = module(moduli_involution(&a, &cc, &d, &d0, &dinf))?;
                let (a2, c2, e2) = module(moduli_involution(&once.0, &once.1, &once.2, &d0, &dinf))?;
                let k = d0.clone() * dinf.clone() - Rational::one();
                let k2 = k.clone() * k;
                if (a2, c2, e2) != (a.scale(&k2), cc.scale(&k2), d.scale(&k2)) {
                    return Err(fail(format!("square is not (d0 dinf - 1)^2 at d0 = {d0}, dinf = {dinf}")));
                }
            }
            Construction::Normalize => {
                let p = sample::three_lines(rng, sample::CubicSpecialization::Generic);
                let m = module(three_lines_cubic_model(&p))?;
                let w = ThreeI0StarModel::from_model(&m, &p.mu, &p.nu).ok_or_else(|| fail("model lost its shape".into()))?;
                let all = module(normalize_three_i0star_all(&w))?;
                if !all.contains(&p) {
                    return Err(fail(format!("{p:?} is not among the normal forms")));
                }
            }
            Construction::Reconstruct4H => {
                let (rj, _) = sample::four_h_rational(rng, &Rational::zero(), &Rational::one());
                let (a, cc) = rj.surface.induced_ac();
                let t3 = module(table3_generate(&a, &cc))?;
                if rj.cubic_f != t3.f || rj.cubic_g != t3.g {
                    return Err(fail("reconstructed cubic differs from the Hermite pair".into()));
                }
            }
            Construction::Symmetries => {
                let p = random_double_quadric(rng);
                let l = loop {
                    let l = sample::coeff(rng);
                    if !l.is_zero() {
                        break l;
                    }
                };
                for case in [SymmetryCase::Scale(l.clone()), SymmetryCase::Rescale(l), SymmetryCase::Swap, SymmetryCase::Shear] {
                    if !module(symmetry_identity(&p, &case))? {
                        return Err(fail(format!("{case:?} breaks the branch identity")));
                    }
                }
            }
            Construction::QuadricSurface(_) => unreachable!(),
        }
    }
    Ok(())
}

fn run_table<R: Rng>(t: u8, trials: usize, rng: &mut R) -> Outcome {
    for k in 0..trials {
        let fail = |m: String| Failure::Fail(format!("trial {k}: {m}"));
        if t == 2 {
            let (alpha, gamma, delta) = sample::table2_forms(rng);
            let tab = module(table2_generate(&alpha, &gamma, &delta))?;
            for (name, b) in tab.branches() {
                if !b.agree() {
                    return Err(fail(format!("rulings of {name} disagree")));
                }
            }
            // gamma u^2 + alpha uv + delta v^2 = c s^2 + a st + d t^2: the two
            // coefficient matrices are transposes of each other
            let by_st = [&gamma, &alpha, &delta];
            let by_uv = [&tab.c, &tab.a, &tab.d];
            let transposed = (0..3).all(|i| (0..3).all(|j| by_st[j].coeff(i) == by_uv[i].coeff(j)));
            if !transposed {
                return Err(fail("dual-ruling coefficients differ".into()));
            }
        } else {
            let (a, c) = sample::table3_forms(rng);
            let tab = module(table3_generate(&a, &c))?;
            let st = |i: usize| Form::monomial(Vars::ST, 4, i, Rational::one());
            let lhs = BiHomPoly::sum_of_products(&(0..5).map(|i| (st(i), tab.coeffs[i].clone())).collect::<Vec<_>>());
            let half = Rational::new(1.into(), 2.into());
            let u_minus_v = Form::linear(Vars::CAP_UV, half.clone(), -half.clone());
            let u_plus_v = Form::linear(Vars::CAP_UV, -half.clone(), -half);
            let rhs = BiHomPoly::sum_of_products(&[(a.clone(), u_minus_v), (c.clone(), u_plus_v)]);
            if lhs != rhs {
                return Err(fail("coefficient identity fails".into()));
            }
            if !(tab.g_branch.agree() && tab.f_branch.agree() && tab.g_dual_branch.second == -&tab.g_dual_branch.first) {
                return Err(fail("rulings disagree".into()));
            }
        }
    }
    Ok(())
}
