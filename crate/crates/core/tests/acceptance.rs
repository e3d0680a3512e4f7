//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits non-zero if any fails.
//!
//! Expected values come from oracles written here (cross products, a small
//! rational elimination, bisection), not from the crate's own routines.

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use rigidplane::engine::{graph_form, EmbeddedRoot};
use rigidplane::verify::{
    bezout_audit, emit_certificate, normal_crossings_report, parse_certificate,
    singular_locus_oracle, smoothness_check, verify_batch, verify_certificate, Smoothness,
};
use rigidplane::{
    Certificate, ComponentId, Config, HomForm, IntervalQ, Monomial, ProjLine, ProjPoint, Strategy,
    UniPoly,
};

// Pinned limits.
const QUAD_LIMIT: Duration = Duration::from_millis(10);
const GADGET_SWEEP_LIMIT: Duration = Duration::from_secs(30);
const ROUND_TRIP_LIMIT: Duration = Duration::from_secs(60);
const EMBED_LIMIT: Duration = Duration::from_secs(5);
const CHAIN_2_20_LIMIT: Duration = Duration::from_secs(2);
const ORACLE_FUZZ_LIMIT: Duration = Duration::from_secs(30);
const GADGET_RANGE: i64 = 30;
const RATIONAL_RANGE: i64 = 20;
const ROUND_TRIP_TARGETS: usize = 200;
const MAX_HEIGHT: i64 = 100;
const TAMPER_CERTS: usize = 50;
const TAMPER_POSITIONS: usize = 20;
const REFINE_WIDTH_DENOM: i64 = 1_000_000;
const NAIVE_COMPARISON: i64 = 1000;
const ORACLE_CONFIGS: usize = 100;
const ORACLE_MAX_LINES: usize = 25;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn pt(x: i64, y: i64, z: i64) -> ProjPoint {
    ProjPoint::new(x, y, z).unwrap()
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// Cross product of integer triples, the test's own incidence oracle.
fn cross(u: &[BigInt; 3], v: &[BigInt; 3]) -> [BigInt; 3] {
    [
        &u[1] * &v[2] - &u[2] * &v[1],
        &u[2] * &v[0] - &u[0] * &v[2],
        &u[0] * &v[1] - &u[1] * &v[0],
    ]
}

fn dot(u: &[BigInt; 3], v: &[BigInt; 3]) -> BigInt {
    &u[0] * &v[0] + &u[1] * &v[1] + &u[2] * &v[2]
}

fn is_recorded(cfg: &Config, p: &ProjPoint) -> bool {
    cfg.find(p).is_some()
}

fn line_witnesses(cfg: &Config, p: &ProjPoint) -> Option<usize> {
    let r = cfg.record(cfg.find(p)?)?;
    Some(
        r.witnesses
            .iter()
            .filter(|c| matches!(c, ComponentId::Line(_)))
            .count(),
    )
}

fn random_target(rng: &mut ChaCha8Rng) -> ProjPoint {
    loop {
        let v = [0; 3].map(|_| rng.gen_range(-MAX_HEIGHT..=MAX_HEIGHT));
        if let Ok(p) = ProjPoint::new(v[0], v[1], v[2]) {
            return p;
        }
    }
}

fn certificate_for(p: &ProjPoint, strategy: Strategy) -> Certificate {
    let mut cfg = Config::init_quadrilateral();
    cfg.construct_point(p, strategy).unwrap();
    Certificate::from_config(&cfg, Some(strategy))
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let cfg = Config::init_quadrilateral();
    let oracle = singular_locus_oracle(&cfg);
    let elapsed = start.elapsed();
    let lines: Vec<ProjLine> = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]]
        .iter()
        .map(|v| ProjLine::new(v[0], v[1], v[2]).unwrap())
        .collect();
    ensure(cfg.lines() == lines.as_slice(), || {
        format!("lines {:?}", cfg.lines())
    })?;
    let expected: BTreeSet<ProjPoint> = [
        pt(1, 0, 0),
        pt(0, 1, 0),
        pt(0, 0, 1),
        pt(1, -1, 0),
        pt(1, 0, -1),
        pt(0, 1, -1),
    ]
    .into();
    let recorded: BTreeSet<ProjPoint> = cfg.singular_points().map(|s| s.point).collect();
    ensure(recorded == expected, || format!("points {recorded:?}"))?;
    for s in cfg.singular_points() {
        let incident = lines
            .iter()
            .filter(|l| dot(s.point.coords(), l.coords()).is_zero())
            .count();
        ensure(s.witnesses.len() == 2 && incident == 2, || {
            format!("{} has witnesses {:?}", s.point, s.witnesses)
        })?;
    }
    ensure(oracle.agrees() && oracle.points.len() == 6, || {
        format!("oracle {oracle:?}")
    })?;
    ensure(elapsed < QUAD_LIMIT, || format!("took {elapsed:?}"))?;
    Ok(format!(
        "4 lines, 6 double points, oracle agrees, {elapsed:?}"
    ))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let mut cases = 0;
    for p in -GADGET_RANGE..=GADGET_RANGE {
        for q in -GADGET_RANGE..=GADGET_RANGE {
            let mut cfg = Config::init_quadrilateral();
            let sp = cfg
                .construct_integer(&p.into(), Strategy::AdditionChain)
                .unwrap();
            let sq = cfg
                .construct_integer(&q.into(), Strategy::AdditionChain)
                .unwrap();
            let out = cfg
                .gadget_add_integers(sp, sq)
                .map_err(|e| format!("{p}+{q}: {e}"))?;
            ensure(cfg.point(out) == Some(&pt(0, p + q, 1)), || {
                format!("{p}+{q} landed on {:?}", cfg.point(out))
            })?;
            for m in [pt(-1, p, 1), pt(-1, p, 0), pt(-1, p + q, 1)] {
                ensure(is_recorded(&cfg, &m), || {
                    format!("{p}+{q}: intermediate {m} missing")
                })?;
            }
            cases += 1;
        }
    }
    for p in -RATIONAL_RANGE..=RATIONAL_RANGE {
        for q in 1..=RATIONAL_RANGE {
            if p.gcd(&q) != 1 {
                continue;
            }
            let mut cfg = Config::init_quadrilateral();
            let out = cfg
                .construct_rational(&p.into(), &q.into(), Strategy::AdditionChain)
                .unwrap();
            ensure(cfg.point(out) == Some(&pt(p, 0, q)), || {
                format!("{p}/{q} landed on {:?}", cfg.point(out))
            })?;
            ensure(is_recorded(&cfg, &pt(1, -q, 0)), || {
                format!("{p}/{q}: (1:-{q}:0) missing")
            })?;
            cases += 1;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < GADGET_SWEEP_LIMIT, || format!("took {elapsed:?}"))?;
    Ok(format!("{cases} cases, {elapsed:?}"))
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut certs = Vec::with_capacity(ROUND_TRIP_TARGETS);
    for _ in 0..ROUND_TRIP_TARGETS {
        let target = random_target(&mut rng);
        let cert = certificate_for(&target, Strategy::default());
        let bytes = emit_certificate(&cert);
        let parsed = parse_certificate(&bytes).map_err(|e| format!("{target}: {e}"))?;
        ensure(emit_certificate(&parsed) == bytes, || {
            format!("{target}: re-emission differs")
        })?;
        ensure(parsed == cert, || format!("{target}: parsed value differs"))?;
        certs.push(parsed);
    }
    let reports = verify_batch(&certs);
    let failed = reports.iter().filter(|r| !r.ok).count();
    ensure(failed == 0, || {
        format!(
            "{failed} certificates rejected, first: {:?}",
            reports.iter().find(|r| !r.ok).unwrap().failure
        )
    })?;
    let elapsed = start.elapsed();
    ensure(elapsed < ROUND_TRIP_LIMIT, || format!("took {elapsed:?}"))?;
    Ok(format!(
        "{ROUND_TRIP_TARGETS}/{ROUND_TRIP_TARGETS} verified, byte-identical, {elapsed:?}"
    ))
}

/// JSON paths to every integer: numbers, integer strings, and both parts
/// of rational strings.
#[derive(Clone, Debug)]
enum Slot {
    Number(Vec<PathStep>),
    Text(Vec<PathStep>, usize),
}

#[derive(Clone, Debug)]
enum PathStep {
    Key(String),
    Index(usize),
}

fn collect_slots(v: &Value, path: &mut Vec<PathStep>, out: &mut Vec<Slot>) {
    match v {
        Value::Number(_) => out.push(Slot::Number(path.clone())),
        Value::String(s) => {
            let parts: Vec<&str> = s.split('/').collect();
            if parts.iter().all(|p| {
                p.trim_start_matches('-')
                    .chars()
                    .all(|c| c.is_ascii_digit())
                    && !p.is_empty()
            }) {
                for k in 0..parts.len() {
                    out.push(Slot::Text(path.clone(), k));
                }
            }
        }
        Value::Array(a) => {
            for (i, x) in a.iter().enumerate() {
                path.push(PathStep::Index(i));
                collect_slots(x, path, out);
                path.pop();
            }
        }
        Value::Object(m) => {
            for (k, x) in m {
                path.push(PathStep::Key(k.clone()));
                collect_slots(x, path, out);
                path.pop();
            }
        }
        _ => {}
    }
}

fn slot_mut<'a>(v: &'a mut Value, path: &[PathStep]) -> &'a mut Value {
    path.iter().fold(v, |v, s| match s {
        PathStep::Key(k) => &mut v[k.as_str()],
        PathStep::Index(i) => &mut v[*i],
    })
}

fn mutate(v: &mut Value, slot: &Slot, delta: i64) {
    match slot {
        Slot::Number(path) => {
            let x = slot_mut(v, path);
            let n = x.as_u64().unwrap() as i64;
            let m = if n + delta < 0 {
                n + delta.abs()
            } else {
                n + delta
            };
            *x = Value::from(m as u64);
        }
        Slot::Text(path, part) => {
            let x = slot_mut(v, path);
            let mut parts: Vec<BigInt> = x
                .as_str()
                .unwrap()
                .split('/')
                .map(|p| p.parse().unwrap())
                .collect();
            parts[*part] += delta;
            let s = parts
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join("/");
            *x = Value::String(s);
        }
    }
}

fn criterion_4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut trials = 0;
    let (mut parse_rejects, mut verify_rejects) = (0, 0);
    for k in 0..TAMPER_CERTS {
        let target = random_target(&mut rng);
        let strategy = if k % 5 == 0 {
            Strategy::Naive
        } else {
            Strategy::AdditionChain
        };
        let bytes = emit_certificate(&certificate_for(&target, strategy));
        let value: Value = serde_json::from_slice(&bytes).unwrap();
        let mut slots = Vec::new();
        collect_slots(&value, &mut Vec::new(), &mut slots);
        for _ in 0..TAMPER_POSITIONS {
            let slot = &slots[rng.gen_range(0..slots.len())];
            let delta = if rng.gen_bool(0.5) {
                1
            } else {
                -rng.gen_range(1..=5)
            };
            let mut tampered = value.clone();
            mutate(&mut tampered, slot, delta);
            let tb = serde_json::to_vec(&tampered).unwrap();
            trials += 1;
            match parse_certificate(&tb) {
                Err(_) => parse_rejects += 1,
                Ok(c) => {
                    let r = verify_certificate(&c);
                    ensure(!r.ok, || {
                        format!("false accept: target {target}, slot {slot:?}, delta {delta}")
                    })?;
                    verify_rejects += 1;
                }
            }
        }
    }
    Ok(format!(
        "{trials} mutations rejected ({parse_rejects} at parse, {verify_rejects} at replay)"
    ))
}

/// Rank over Q by plain Gaussian elimination on rationals.
fn rank_q(rows: &[Vec<BigRational>]) -> usize {
    let mut m = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for r in 0..m.len() {
            if r != rank && !m[r][c].is_zero() {
                let f = &m[r][c] / &m[rank][c];
                let pivot = m[rank].clone();
                for (x, y) in m[r].iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn conic_row(p: &ProjPoint) -> Vec<BigRational> {
    let [x, y, z] = p.coords();
    [x * x, x * y, x * z, y * y, y * z, z * z]
        .into_iter()
        .map(BigRational::from_integer)
        .collect()
}

fn eval_q(coeffs: &[i64], x: &BigRational) -> BigRational {
    coeffs.iter().rev().fold(BigRational::zero(), |acc, c| {
        acc * x + BigRational::from_integer((*c).into())
    })
}

fn embed(coeffs: &[i64], lo: i64, hi: i64) -> Result<(Config, EmbeddedRoot), String> {
    let mut cfg = Config::init_quadrilateral();
    let out = cfg
        .embed_algebraic(
            &UniPoly::from_ints(coeffs),
            &IntervalQ::new(rat(lo, 1), rat(hi, 1)).unwrap(),
            &rat(1, REFINE_WIDTH_DENOM),
            Strategy::AdditionChain,
        )
        .map_err(|e| e.to_string())?;
    Ok((cfg, out))
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let (cfg, out) = embed(&[-2, 0, 1], 0, 2)?;
    let EmbeddedRoot::Algebraic(w) = out else {
        return Err("root reported rational".into());
    };
    let anchors: Vec<ProjPoint> = (0..5).map(|k| pt(k, k * k - 2, 1)).collect();
    let rows: Vec<_> = anchors.iter().map(conic_row).collect();
    ensure(rank_q(&rows) == 5, || {
        "conditions do not have rank 5 (kernel dimension is not 1)".into()
    })?;
    ensure(cfg.curves().len() == 1, || {
        format!("{} curves", cfg.curves().len())
    })?;
    let conic = &cfg.curves()[0];
    for p in &anchors {
        ensure(conic.vanishes_at(p) && is_recorded(&cfg, p), || {
            format!("anchor {p}")
        })?;
    }
    // X² − Y·Z − 2Z² is the kernel vector: it vanishes on all five anchors.
    let expected = HomForm::new(
        2,
        [((2, 0, 0), 1), ((0, 1, 1), -1), ((0, 0, 2), -2)]
            .map(|((i, j, k), c)| (Monomial::new(i, j, k), BigInt::from(c))),
    )
    .unwrap();
    ensure(
        conic == &expected
            || HomForm::new(2, expected.terms().iter().map(|(m, c)| (*m, -c))).as_ref()
                == Ok(conic),
        || format!("conic {conic}"),
    )?;
    let audit = bezout_audit(&cfg).map_err(|e| e.to_string())?;
    ensure(audit.iter().all(|e| e.passes()), || {
        "Bezout audit failed".into()
    })?;
    let (lo, hi) = (w.interval.lo().clone(), w.interval.hi().clone());
    ensure(&hi - &lo <= rat(1, REFINE_WIDTH_DENOM), || {
        format!("interval width {}", &hi - &lo)
    })?;
    let f = [-2, 0, 1];
    ensure(
        eval_q(&f, &lo).signum() * eval_q(&f, &hi).signum() == -BigRational::one(),
        || format!("no sign change on ({lo}, {hi})"),
    )?;
    let report = verify_certificate(&Certificate::from_config(&cfg, None));
    ensure(report.ok, || format!("{:?}", report.failure))?;
    let elapsed = start.elapsed();
    ensure(elapsed < EMBED_LIMIT, || format!("took {elapsed:?}"))?;
    Ok(format!(
        "conic {conic}, {} Bezout pairs, root in ({lo}, {hi}), {elapsed:?}",
        audit.len()
    ))
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let (cfg, _) = embed(&[-2, 0, 0, 1], 1, 2)?;
    // Y·Z² − X³ + 2Z³, sign-normalized by the crate.
    let cubic = graph_form(&UniPoly::from_ints(&[-2, 0, 0, 1])).unwrap();
    let expect = [((0, 1, 2), 1), ((3, 0, 0), -1), ((0, 0, 3), 2)];
    for ((i, j, k), c) in expect {
        let got = cubic.coefficient(Monomial::new(i, j, k));
        ensure(got.abs() == BigInt::from(c).abs(), || {
            format!("cubic {cubic}")
        })?;
    }
    ensure(cfg.curves() == [cubic.clone()], || "cubic not added".into())?;
    // All three partials vanish at (0:1:0): computed by hand as
    // ∂X = −3X², ∂Y = Z², ∂Z = 2YZ + 6Z².
    let s = smoothness_check(&cubic);
    ensure(
        matches!(&s, Smoothness::Singular { points, .. } if points == &[pt(0, 1, 0)]),
        || format!("{s:?}"),
    )?;
    let report = verify_certificate(&Certificate::from_config(&cfg, None));
    ensure(report.ok, || format!("{:?}", report.failure))?;
    let elapsed = start.elapsed();
    ensure(elapsed < EMBED_LIMIT, || format!("took {elapsed:?}"))?;
    Ok(format!(
        "singular at (0:1:0), certificate verifies, {elapsed:?}"
    ))
}

fn criterion_7() -> Outcome {
    let mut cfg = Config::init_quadrilateral();
    let before = normal_crossings_report(&cfg);
    ensure(before.normal_crossings, || {
        format!("quadrilateral: {before:?}")
    })?;
    cfg.gadget_unit().map_err(|e| e.to_string())?;
    let after = normal_crossings_report(&cfg);
    // Witness counts from the test's own meets of all line pairs.
    let mut through: BTreeMap<ProjPoint, BTreeSet<usize>> = BTreeMap::new();
    let lines = cfg.lines();
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            let p = ProjPoint::from_triple(cross(lines[i].coords(), lines[j].coords())).unwrap();
            through.entry(p).or_default().extend([i, j]);
        }
    }
    let triple: BTreeSet<ProjPoint> = through
        .into_iter()
        .filter(|(_, s)| s.len() >= 3)
        .map(|(p, _)| p)
        .collect();
    let recorded: BTreeSet<ProjPoint> = cfg
        .singular_points()
        .filter(|s| s.witnesses.len() >= 3)
        .map(|s| s.point)
        .collect();
    ensure(!after.normal_crossings, || "still normal crossings".into())?;
    ensure(recorded == triple, || {
        format!("recorded {recorded:?} vs oracle {triple:?}")
    })?;
    let flagged: BTreeSet<ProjPoint> = after
        .multiple_points
        .iter()
        .map(|(p, _)| p.clone())
        .collect();
    ensure(
        flagged == triple && after.violation_points() == triple,
        || format!("flagged {flagged:?}"),
    )?;
    Ok(format!(
        "NC before, {} multiple points after the unit gadget",
        triple.len()
    ))
}

fn criterion_8() -> Outcome {
    let start = Instant::now();
    let target = pt(0, 1 << 20, 1);
    let cert = certificate_for(&target, Strategy::AdditionChain);
    let report = verify_certificate(
        &parse_certificate(&emit_certificate(&cert)).map_err(|e| e.to_string())?,
    );
    let elapsed = start.elapsed();
    ensure(report.ok, || format!("{:?}", report.failure))?;
    ensure(elapsed < CHAIN_2_20_LIMIT, || format!("took {elapsed:?}"))?;
    let lengths = [Strategy::Naive, Strategy::AdditionChain].map(|s| {
        let mut cfg = Config::init_quadrilateral();
        cfg.construct_point(&pt(0, NAIVE_COMPARISON, 1), s).unwrap();
        cfg.trace().len()
    });
    ensure(lengths[1] < lengths[0], || {
        format!("chain {} vs naive {}", lengths[1], lengths[0])
    })?;
    Ok(format!(
        "2^20 chain: {} steps, verified in {elapsed:?}; at {NAIVE_COMPARISON}: naive {} steps, chain {} steps",
        cert.steps.len(),
        lengths[0],
        lengths[1]
    ))
}

fn criterion_9() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut total_lines = 0;
    for _ in 0..ORACLE_CONFIGS {
        let mut cfg = Config::init_quadrilateral();
        let goal = rng.gen_range(5..=ORACLE_MAX_LINES);
        let mut attempts = 0;
        while cfg.lines().len() < goal && attempts < 1000 {
            attempts += 1;
            let n = cfg.singular_count();
            let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
            if i != j {
                let _ = cfg.add_line_or_skip(i, j).unwrap();
            }
        }
        total_lines += cfg.lines().len();
        let lines = cfg.lines();
        let mut through: BTreeMap<ProjPoint, BTreeSet<usize>> = BTreeMap::new();
        for i in 0..lines.len() {
            for j in i + 1..lines.len() {
                let p =
                    ProjPoint::from_triple(cross(lines[i].coords(), lines[j].coords())).unwrap();
                through.entry(p).or_default().extend([i, j]);
            }
        }
        let recorded: BTreeSet<ProjPoint> = cfg.singular_points().map(|s| s.point).collect();
        let oracle: BTreeSet<ProjPoint> = through.keys().cloned().collect();
        ensure(recorded == oracle, || {
            format!(
                "{} recorded vs {} oracle points",
                recorded.len(),
                oracle.len()
            )
        })?;
        for (p, s) in &through {
            ensure(line_witnesses(&cfg, p) == Some(s.len()), || {
                format!("{p}: multiplicity {}", s.len())
            })?;
        }
        ensure(singular_locus_oracle(&cfg).agrees(), || {
            "crate oracle disagrees".into()
        })?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < ORACLE_FUZZ_LIMIT, || format!("took {elapsed:?}"))?;
    Ok(format!(
        "{ORACLE_CONFIGS} configs, {total_lines} lines, {elapsed:?}"
    ))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("quadrilateral fixture", criterion_1),
        ("gadget soundness sweep", criterion_2),
        ("certificate round trip", criterion_3),
        ("tamper soundness", criterion_4),
        ("sqrt(2) end to end", criterion_5),
        ("cubic self-singularity", criterion_6),
        ("normal crossings", criterion_7),
        ("strategy scaling", criterion_8),
        ("oracle equality fuzz", criterion_9),
    ];
    let filter: Vec<String> = std::env::args()
        .skip(1)
        .filter(|a| !a.starts_with('-'))
        .collect();
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let n = k + 1;
        if !filter.is_empty() && !filter.iter().any(|f| f == &n.to_string()) {
            continue;
        }
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            Err(e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default())
        });
        match outcome {
            Ok(detail) => println!("criterion {n} ({name}): PASS  {detail}"),
            Err(why) => {
                failed += 1;
                println!("criterion {n} ({name}): FAIL  {why}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
