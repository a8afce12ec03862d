//! One line per acceptance criterion. Every criterion runs even when an
//! earlier one fails; the target exits nonzero if any did. Built without
//! the libtest harness so the lines show up in plain `cargo test` output.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;

use k3kit::duality::table3_generate;
use k3kit::elliptic::{kodaira_from_valuations, EllipticError, KodairaType, Val};
use k3kit::exactpoly::{MPoly, Poly};
use k3kit::hermite_aj::*;
use k3kit::lattice::{nikulin_equivalent, parse_lattice, two_elementary_invariants, Lattice};
use k3kit::sample;
use k3kit::{Rational, UniPoly};
use k3verify::{bundled, run_all, RunOptions, Status};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = fn() -> Result<String, String>;

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn rand_q<R: Rng>(r: &mut R) -> Rational {
    q(r.gen_range(-9..=9))
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

// ---------------------------------------------------------------------------
// Oracles

fn det(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut acc = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            m.swap(p, c);
            acc = -acc;
        }
        for r in c + 1..n {
            let f = m[r][c].clone() / m[c][c].clone();
            for k in c..n {
                let v = m[c][k].clone() * f.clone();
                m[r][k] -= v;
            }
        }
        acc *= m[c][c].clone();
    }
    acc
}

fn sylvester(p: &UniPoly, r: &UniPoly) -> Rational {
    let (m, n) = (p.degree().unwrap(), r.degree().unwrap());
    let size = m + n;
    let mut rows = Vec::new();
    for (poly, deg, copies) in [(p, m, n), (r, n, m)] {
        for k in 0..copies {
            let mut row = vec![Rational::zero(); size];
            for i in 0..=deg {
                row[k + i] = poly.coeff(deg - i);
            }
            rows.push(row);
        }
    }
    det(rows)
}

/// Discriminant of `a0 + a1 x + .. + a4 x^4` as a binary quartic.
fn binary_disc(a: &[Rational; 5]) -> Rational {
    let p: UniPoly = Poly::new(a.to_vec());
    let disc = |p: &UniPoly| {
        let n = p.degree().unwrap();
        let sign = if (n * (n - 1) / 2) % 2 == 0 { q(1) } else { q(-1) };
        sign * sylvester(p, &p.derivative()) / p.lead()
    };
    match p.degree() {
        Some(4) => disc(&p),
        Some(3) => a[3].clone() * a[3].clone() * disc(&p),
        _ => Rational::zero(),
    }
}

/// `(f, g)` of the Jacobian from the classical invariants `I`, `J` of a
/// binary quartic with coefficients `a0 .. a4` (symmetric in the order).
fn jacobian_from_ij(a: &[Rational; 5]) -> (Rational, Rational) {
    let [a0, a1, a2, a3, a4] = a.clone();
    let i = q(12) * &a0 * &a4 - q(3) * &a1 * &a3 + &a2 * &a2;
    let j = q(72) * &a0 * &a2 * &a4 + q(9) * &a1 * &a2 * &a3
        - q(27) * &a0 * &a3 * &a3
        - q(27) * &a4 * &a1 * &a1
        - q(2) * &a2 * &a2 * &a2;
    (-i / q(3), -j / q(27))
}

fn rational_sqrt(v: &Rational) -> Option<Rational> {
    if *v < Rational::zero() {
        return None;
    }
    let c = Rational::new(v.numer().sqrt(), v.denom().sqrt());
    (&c * &c == *v).then_some(c)
}

fn in_x(p: &UniPoly, var: usize) -> MPoly<Rational> {
    let x = MPoly::var(2, var);
    (0..=p.degree().unwrap_or(0)).fold(MPoly::zero(2), |acc, i| &acc + &x.pow(i as u32).scale(&p.coeff(i)))
}

// ---------------------------------------------------------------------------
// Criteria

fn hermite_identities() -> Result<String, String> {
    let mut r = rng(101);
    let (x, x0) = (MPoly::var(2, 0), MPoly::var(2, 1));
    let diff = &x - &x0;
    let diff2 = &diff * &diff;
    for n in 0..200 {
        let h = QuarticCurve::new(std::array::from_fn(|_| rand_q(&mut r)));
        let p = h.poly();
        let cp = correspondence_polys(&h);
        let (rm, r1m) = (cp.r.to_mpoly(), cp.r1.to_mpoly());
        let lhs = &(&rm * &rm) + &(&r1m * &diff2);
        ensure((&lhs - &(&in_x(&p, 0) * &in_x(&p, 1))).is_zero(), || format!("quartic {n}: R^2 + R1 (x-x0)^2"))?;
        ensure(cp.r.diagonal() == p, || format!("quartic {n}: R(x,x)"))?;
        ensure(cp.r1.diagonal() == cp.q, || format!("quartic {n}: R1(x,x)"))?;
        let (d1, d2) = (p.derivative(), p.derivative().derivative());
        let want = &(&p * &d2).scale(&Rational::new(1.into(), 3.into())) - &(&d1 * &d1).scale(&Rational::new(1.into(), 4.into()));
        ensure(cp.q == want, || format!("quartic {n}: Q"))?;
    }
    Ok("200 random quartics".into())
}

fn discriminant_relations() -> Result<String, String> {
    let mut r = rng(101);
    let mut nonzero = 0;
    for n in 0..200 {
        let a: [Rational; 5] = std::array::from_fn(|_| rand_q(&mut r));
        let h = QuarticCurve::new(a.clone());
        let e = jacobian_quartic(&h);
        let dp = binary_disc(&a);
        let (f, g) = (e.f.clone(), e.g.clone());
        ensure(dp == -q(4) * &f * &f * &f - q(27) * &g * &g, || format!("quartic {n}: Discr(P)"))?;
        let qq = correspondence_polys(&h).q;
        let dq = binary_disc(&std::array::from_fn(|i| qq.coeff(i)));
        ensure(dq == &g * &g * &dp, || format!("quartic {n}: Discr(Q)"))?;
        nonzero += usize::from(!dp.is_zero());
    }
    Ok(format!("200 quartics, {nonzero} with nonzero discriminant"))
}

fn abel_jacobi_check() -> Result<String, String> {
    let h = QuarticCurve::new([q(1), q(2), q(0), q(0), q(1)]);
    let img = abel_jacobi(&h, (&q(0), &q(-1)), (&q(1), &q(2))).map_err(|e| e.to_string())?;
    ensure(img == AJImage::Point { xi: q(0), eta: q(-2) }, || format!("worked instance gave {img:?}"))?;
    let mut r = rng(103);
    let mut extra = 0;
    for n in 0..50 {
        let (h, x0, w0) = sample::quartic_with_point(&mut r);
        let (f, g) = jacobian_from_ij(&h.a);
        let base = -w0.clone();
        let fns = abel_jacobi_functions(&h, (&x0, &base)).map_err(|e| e.to_string())?;
        ensure(fns.weierstrass_residual(&f, &g).is_zero(), || format!("quartic {n}: residual"))?;
        // spot checks at rational points of the curve
        for k in 1..=20 {
            let x = x0.clone() + q(k);
            let Some(w) = rational_sqrt(&h.poly().eval(&x)) else { continue };
            let AJImage::Point { xi, eta } = abel_jacobi(&h, (&x0, &base), (&x, &w)).map_err(|e| e.to_string())? else {
                return Err(format!("quartic {n}: image at infinity"));
            };
            ensure(&eta * &eta == &xi * &xi * &xi + &f * &xi + &g, || format!("quartic {n}: point off the cubic"))?;
            extra += 1;
        }
    }
    Ok(format!("50 quartics, worked instance, {extra} extra rational points"))
}

fn j_equality() -> Result<String, String> {
    let mut r = rng(104);
    let mut done = 0;
    while done < 50 {
        let h = sample::quartic(&mut r);
        let xi = rand_q(&mut r);
        let c = correspondence_22(&h, &xi);
        let (f1, g1) = jacobian_from_ij(&h.a);
        let (f2, g2) = jacobian_from_ij(&c.discriminant_in_x0().a);
        let d = |f: &Rational, g: &Rational| q(4) * f * f * f + q(27) * g * g;
        let (d1, d2) = (d(&f1, &g1), d(&f2, &g2));
        if d2.is_zero() {
            continue;
        }
        ensure(&f1 * &f1 * &f1 * &d2 == &f2 * &f2 * &f2 * &d1, || format!("j differs for {h}, xi = {xi}"))?;
        done += 1;
    }
    Ok("50 smooth pairs".into())
}

fn scenario_group(names: &[&str], min_trials: usize) -> Result<String, String> {
    let list: Vec<_> = bundled().into_iter().filter(|s| names.contains(&s.name.as_str())).collect();
    ensure(list.len() == names.len(), || format!("found {} of {} scenarios", list.len(), names.len()))?;
    let report = run_all(&list, &RunOptions { seed: 7, trials: None });
    for s in &report.scenarios {
        ensure(s.status == Status::Pass, || format!("{}: {}", s.name, s.message.clone().unwrap_or_default()))?;
        if let Some(n) = s.trials {
            ensure(n >= min_trials, || format!("{} runs only {n} trials", s.name))?;
        }
    }
    Ok(format!("{} scenarios", report.scenarios.len()))
}

fn fiber_suite() -> Result<String, String> {
    scenario_group(
        &[
            "base-change-24-i1",
            "twist-two-i0star",
            "lemma-3.9",
            "alternate-dual-swap",
            "weight-one-res-subfamily",
            "weight-one-table2-r",
            "four-h-twelve-i2",
            "relative-jacobian-three-i0star",
            "three-lines-generic",
            "three-lines-i1star",
            "three-lines-i2star",
            "three-lines-i3star",
            "rank10-y-base-change",
            "rank10-r",
            "rank14-9-y",
            "rank14-9-y-tilde",
            "rank14-9-r",
            "rank14-13-y",
            "rank14-13-y-tilde",
        ],
        20,
    )
}

fn lattice(text: &str) -> Lattice {
    parse_lattice(text).unwrap_or_else(|e| panic!("{text}: {e}"))
}

fn lattice_suite() -> Result<String, String> {
    let pairs = [
        ("H + E8(-2)", "H(2) + N"),
        ("H + N", "H(2) + D4(-1)^2"),
        ("H + D4(-1)^2 + A1(-1)^4", "H + D6(-1) + A1(-1)^6"),
        ("H + D6(-1) + A1(-1)^6", "<2> + <-2> + D4(-1)^3"),
    ];
    for (a, b) in pairs {
        let ok = nikulin_equivalent(&lattice(a), &lattice(b)).map_err(|e| e.to_string())?;
        ensure(ok, || format!("{a} vs {b}"))?;
    }
    let k0 = lattice("K0");
    ensure(k0.det() == 64.into(), || format!("det K0 = {}", k0.det()))?;
    let n = lattice("N");
    ensure(n.det() == 64.into(), || format!("det N = {}", n.det()))?;
    ensure(n.signature().map_err(|e| e.to_string())? == (0, 8), || "N is not negative definite".into())?;
    let inv = two_elementary_invariants(&n).map_err(|e| e.to_string())?;
    ensure(inv.parity == Some(0), || format!("N: {inv}"))?;
    Ok("4 isomorphisms, det K0 = det N = 64, N negative definite with delta 0".into())
}

fn round_trips() -> Result<String, String> {
    scenario_group(
        &[
            "vgs-dual-square",
            "moduli-involution-square",
            "three-lines-normalization",
            "table2-dual-rulings",
            "table3-coefficients",
        ],
        20,
    )
}

fn reconstruction() -> Result<String, String> {
    let mut r = rng(108);
    let mut draws = 0;
    for n in 0..20 {
        let (rj, tries) = sample::four_h_rational(&mut r, &q(0), &q(1));
        draws += tries;
        let (a, c) = rj.surface.induced_ac();
        let t3 = table3_generate(&a, &c).map_err(|e| e.to_string())?;
        ensure(rj.cubic_f == t3.f && rj.cubic_g == t3.g, || format!("instance {n}: (f, g) differ"))?;
        // pointwise against I and J of the induced quartic
        for _ in 0..3 {
            let (u, v) = (rand_q(&mut r), rand_q(&mut r));
            let coeffs: [Rational; 5] = std::array::from_fn(|i| t3.coeffs[i].eval(&u, &v));
            let (f, g) = jacobian_from_ij(&coeffs);
            ensure(rj.cubic_f.eval(&u, &v) == f && rj.cubic_g.eval(&u, &v) == g, || {
                format!("instance {n}: invariants differ at ({u}, {v})")
            })?;
        }
    }
    Ok(format!("20 configurations from {draws} draws"))
}

#[derive(Debug, PartialEq)]
enum Tate {
    Type(KodairaType),
    NonMinimal,
}

/// Tate's algorithm on `y^2 = x^3 + A x + B` over a local ring, from the
/// valuations of `A`, `B` and the discriminant (None for zero).
fn tate(va: Option<u32>, vb: Option<u32>, vd: u32) -> Tate {
    use KodairaType::*;
    let (va, vb) = (va.unwrap_or(u32::MAX), vb.unwrap_or(u32::MAX));
    if vd == 0 {
        return Tate::Type(I(0));
    }
    if va == 0 {
        return Tate::Type(I(vd));
    }
    if vb < 2 {
        return Tate::Type(II);
    }
    if va < 2 {
        return Tate::Type(III);
    }
    if vb < 3 {
        return Tate::Type(IV);
    }
    if va == 2 || vb == 3 {
        return Tate::Type(IStar(vd - 6));
    }
    if vb == 4 {
        return Tate::Type(IVStar);
    }
    if va == 3 {
        return Tate::Type(IIIStar);
    }
    if vb == 5 {
        return Tate::Type(IIStar);
    }
    Tate::NonMinimal
}

/// Valuation triples of `(A, B, 4A^3 + 27B^2)` realized by local models
/// `A = a t^i`, `B = b t^j`, plus the cancelling family
/// `A = -3 t^2m`, `B = 2 t^3m + t^e`.
fn realizable(max_vd: u32) -> Vec<(Option<u32>, Option<u32>, u32)> {
    let mut out = Vec::new();
    let exps: Vec<Option<u32>> = (0..=8).map(Some).chain([None]).collect();
    for &ea in &exps {
        for &eb in &exps {
            let vd = match (ea, eb) {
                (None, None) => continue,
                (Some(a), None) => 3 * a,
                (None, Some(b)) => 2 * b,
                // 4 + 27 never cancels
                (Some(a), Some(b)) => (3 * a).min(2 * b),
            };
            out.push((ea, eb, vd));
        }
    }
    // 4(-3)^3 t^6m + 27 (2 t^3m + t^e)^2 = 108 t^(3m+e) + 27 t^(2e)
    for m in 0..=4u32 {
        for e in 3 * m + 1..=3 * m + max_vd {
            out.push((Some(2 * m), Some(3 * m), 3 * m + e));
        }
    }
    out
}

fn kodaira_oracle() -> Result<String, String> {
    let real = realizable(14);
    let vals: Vec<Val> = (0..=8).map(Val::Finite).chain([Val::Infinite]).collect();
    let opt = |v: Val| match v {
        Val::Finite(n) => Some(n),
        Val::Infinite => None,
    };
    let mut typed = 0;
    let mut total = 0;
    for &v4 in &vals {
        for &v6 in &vals {
            for vd in 0..=14 {
                total += 1;
                let got = kodaira_from_valuations(v4, v6, vd);
                let key = (opt(v4), opt(v6), vd);
                if !real.contains(&key) {
                    ensure(matches!(got, Err(EllipticError::InconsistentValuations { .. })), || {
                        format!("{key:?} is not realizable but gave {got:?}")
                    })?;
                    continue;
                }
                match tate(key.0, key.1, vd) {
                    Tate::Type(t) => {
                        ensure(got == Ok(t), || format!("{key:?}: {got:?}, Tate gives {t}"))?;
                        typed += 1;
                    }
                    Tate::NonMinimal => {
                        ensure(got == Err(EllipticError::NonMinimal), || format!("{key:?}: {got:?}, expected non-minimal"))?
                    }
                }
            }
        }
    }
    Ok(format!("{total} tuples, {typed} classified"))
}

fn cli_determinism() -> Result<String, String> {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_verify"))
            .args(["--all", "--seed", "7", "--format", "json"])
            .output()
            .map_err(|e| e.to_string())
    };
    let (a, b) = (run()?, run()?);
    ensure(a.status.code() == Some(0), || format!("exit code {:?}", a.status.code()))?;
    ensure(b.status.code() == Some(0), || format!("exit code {:?}", b.status.code()))?;
    ensure(a.stdout == b.stdout, || "outputs differ".into())?;
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).map_err(|e| e.to_string())?;
    Ok(format!("{} bytes, {} scenarios", a.stdout.len(), v["summary"]["total"]))
}

fn main() {
    let criteria: [(&str, Check); 10] = [
        ("Hermite identity suite", hermite_identities),
        ("discriminant relations", discriminant_relations),
        ("Abel-Jacobi functional check", abel_jacobi_check),
        ("j-equality", j_equality),
        ("fiber-configuration golden suite", fiber_suite),
        ("lattice identity suite", lattice_suite),
        ("construction round trips", round_trips),
        ("4H reconstruction", reconstruction),
        ("Kodaira classifier against Tate", kodaira_oracle),
        ("CLI determinism", cli_determinism),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let res = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or(p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        match res {
            Ok(detail) => println!("PASS  {:>2}. {name}: {detail}", i + 1),
            Err(why) => {
                println!("FAIL  {:>2}. {name}: {why}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
