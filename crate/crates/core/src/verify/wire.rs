//! Canonical JSON encoding of certificates.
//!
//! Keys are sorted, geometric integers are decimal strings, indices and
//! exponents are JSON numbers. Parsing accepts only canonical values
//! (normalized points, lines, forms and reduced rationals), so
//! `emit ∘ parse` is the identity on emitted bytes.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Map, Value};

use super::certificate::{CertStep, Certificate, Counts, TargetClaim, FORMAT_VERSION};
use crate::engine::{AlgebraicWitness, ComponentId, NonRational, SingRecord, Strategy};
use crate::error::ParseError;
use crate::exact::{BinaryForm, HomForm, IntervalQ, Monomial, ProjLine, ProjPoint, Rat, UniPoly};

fn int(v: &BigInt) -> Value {
    Value::String(v.to_string())
}

fn triple(v: &[BigInt; 3]) -> Value {
    Value::Array(v.iter().map(int).collect())
}

fn rational(r: &Rat) -> Value {
    Value::String(r.to_string())
}

pub(crate) fn form_value(f: &HomForm) -> Value {
    let monomials: Vec<Value> = f
        .terms()
        .iter()
        .map(|(m, c)| json!([m.x, m.y, m.z, c.to_string()]))
        .collect();
    json!({ "degree": f.degree(), "monomials": monomials })
}

fn component(c: &ComponentId) -> Value {
    match c {
        ComponentId::Line(i) => json!({ "index": i, "kind": "line" }),
        ComponentId::Curve(i) => json!({ "index": i, "kind": "curve" }),
    }
}

fn record(r: &SingRecord) -> Value {
    json!({
        "point": triple(r.point.coords()),
        "self_singular": r.self_singular,
        "witnesses": r.witnesses.iter().map(component).collect::<Vec<_>>(),
    })
}

fn step(s: &CertStep) -> Value {
    match s {
        CertStep::Init => json!({ "kind": "init" }),
        CertStep::AddLine {
            anchors,
            line,
            derived,
        } => json!({
            "kind": "add_line",
            "anchors": anchors,
            "line": triple(line.coords()),
            "derived": derived.iter().map(record).collect::<Vec<_>>(),
        }),
        CertStep::AddCurve {
            anchors,
            form,
            derived,
            nonrational,
        } => json!({
            "kind": "add_curve",
            "degree": form.degree(),
            "anchors": anchors,
            "form": form_value(form),
            "derived": derived.iter().map(record).collect::<Vec<_>>(),
            "nonrational": nonrational
                .iter()
                .map(|nr| json!({
                    "line": nr.line,
                    "factor": nr.factor.coeffs().iter().map(int).collect::<Vec<_>>(),
                }))
                .collect::<Vec<_>>(),
        }),
    }
}

/// `m` with `hi - lo = 2^-m`.
pub(crate) fn dyadic_precision(iv: &IntervalQ) -> u64 {
    iv.width().denom().bits() - 1
}

fn claim(c: &TargetClaim) -> Value {
    match c {
        TargetClaim::RationalPoint { point, record } => json!({
            "kind": "rational",
            "point": triple(point.coords()),
            "record": record,
        }),
        TargetClaim::AlgebraicPoint(w) => json!({
            "kind": "algebraic",
            "minpoly": w.minpoly.coeffs().iter().map(rational).collect::<Vec<_>>(),
            "interval": [rational(w.interval.lo()), rational(w.interval.hi())],
            "precision": dyadic_precision(&w.interval),
            "curve": w.curve,
        }),
        TargetClaim::EmbeddedCurve { form, component: c } => json!({
            "kind": "curve",
            "form": form_value(form),
            "component": component(c),
        }),
    }
}

pub fn emit_certificate(cert: &Certificate) -> Vec<u8> {
    let mut top = Map::new();
    top.insert(
        "claims".into(),
        Value::Array(cert.claims.iter().map(claim).collect()),
    );
    top.insert(
        "counts".into(),
        json!({
            "curves": cert.counts.curves,
            "lines": cert.counts.lines,
            "singular_points": cert.counts.singular_points,
            "steps": cert.counts.steps,
        }),
    );
    top.insert(
        "steps".into(),
        Value::Array(cert.steps.iter().map(step).collect()),
    );
    if let Some(s) = cert.strategy {
        top.insert("strategy".into(), Value::String(s.name().into()));
    }
    top.insert("version".into(), json!(cert.version));
    let mut out = serde_json::to_vec(&Value::Object(top)).expect("values serialize");
    out.push(b'\n');
    out
}

type Res<T> = Result<T, ParseError>;

fn err<T>(path: &str, reason: impl Into<String>) -> Res<T> {
    Err(ParseError::new(path, reason))
}

fn object<'a>(
    v: &'a Value,
    path: &str,
    required: &[&str],
    optional: &[&str],
) -> Res<&'a Map<String, Value>> {
    let Some(m) = v.as_object() else {
        return err(path, "expected an object");
    };
    for k in required {
        if !m.contains_key(*k) {
            return err(path, format!("missing key \"{k}\""));
        }
    }
    if let Some(k) = m
        .keys()
        .find(|k| !required.contains(&k.as_str()) && !optional.contains(&k.as_str()))
    {
        return err(path, format!("unexpected key \"{k}\""));
    }
    Ok(m)
}

fn field<'a>(m: &'a Map<String, Value>, key: &str, path: &str) -> (&'a Value, String) {
    (&m[key], format!("{path}.{key}"))
}

fn array<'a>(v: &'a Value, path: &str) -> Res<&'a [Value]> {
    v.as_array()
        .map(Vec::as_slice)
        .ok_or_else(|| ParseError::new(path, "expected an array"))
}

fn uint(v: &Value, path: &str) -> Res<usize> {
    v.as_u64()
        .and_then(|x| usize::try_from(x).ok())
        .ok_or_else(|| ParseError::new(path, "expected a nonnegative integer"))
}

fn exponent(v: &Value, path: &str) -> Res<u32> {
    uint(v, path)
        .and_then(|x| u32::try_from(x).map_err(|_| ParseError::new(path, "exponent too large")))
}

fn string<'a>(v: &'a Value, path: &str) -> Res<&'a str> {
    v.as_str()
        .ok_or_else(|| ParseError::new(path, "expected a string"))
}

fn canonical_decimal(s: &str) -> bool {
    let digits = s.strip_prefix('-').unwrap_or(s);
    !digits.is_empty()
        && digits.bytes().all(|b| b.is_ascii_digit())
        && (digits == "0" && !s.starts_with('-') || !digits.starts_with('0'))
}

fn decimal(s: &str, path: &str) -> Res<BigInt> {
    if !canonical_decimal(s) {
        return err(path, format!("\"{s}\" is not a canonical decimal integer"));
    }
    Ok(s.parse().expect("checked digits"))
}

fn bigint(v: &Value, path: &str) -> Res<BigInt> {
    decimal(string(v, path)?, path)
}

fn rat(v: &Value, path: &str) -> Res<Rat> {
    let s = string(v, path)?;
    match s.split_once('/') {
        None => Ok(Rat::from_integer(decimal(s, path)?)),
        Some((n, d)) => {
            let (n, d) = (decimal(n, path)?, decimal(d, path)?);
            if !d.is_positive() || d.is_one() {
                return err(path, "denominator must exceed 1");
            }
            let r = Rat::new(n.clone(), d.clone());
            if r.numer() != &n || r.denom() != &d {
                return err(path, "rational is not reduced");
            }
            Ok(r)
        }
    }
}

fn triple_of(v: &Value, path: &str) -> Res<[BigInt; 3]> {
    let a = array(v, path)?;
    if a.len() != 3 {
        return err(path, "expected three coordinates");
    }
    Ok([
        bigint(&a[0], &format!("{path}[0]"))?,
        bigint(&a[1], &format!("{path}[1]"))?,
        bigint(&a[2], &format!("{path}[2]"))?,
    ])
}

fn point(v: &Value, path: &str) -> Res<ProjPoint> {
    ProjPoint::from_normalized(triple_of(v, path)?)
        .ok_or_else(|| ParseError::new(path, "point is not normalized"))
}

fn line(v: &Value, path: &str) -> Res<ProjLine> {
    ProjLine::from_normalized(triple_of(v, path)?)
        .ok_or_else(|| ParseError::new(path, "line is not normalized"))
}

fn form(v: &Value, path: &str) -> Res<HomForm> {
    let m = object(v, path, &["degree", "monomials"], &[])?;
    let (d, dp) = field(m, "degree", path);
    let degree = exponent(d, &dp)?;
    let (ms, mp) = field(m, "monomials", path);
    let mut terms = Vec::new();
    for (i, t) in array(ms, &mp)?.iter().enumerate() {
        let tp = format!("{mp}[{i}]");
        let t = array(t, &tp)?;
        if t.len() != 4 {
            return err(&tp, "expected [i, j, k, coefficient]");
        }
        let e = [0, 1, 2].map(|k| exponent(&t[k], &format!("{tp}[{k}]")));
        let [x, y, z] = [e[0].clone()?, e[1].clone()?, e[2].clone()?];
        terms.push((Monomial::new(x, y, z), bigint(&t[3], &format!("{tp}[3]"))?));
    }
    HomForm::from_normalized(degree, terms)
        .ok_or_else(|| ParseError::new(path, "form is not normalized"))
}

fn component_of(v: &Value, path: &str) -> Res<ComponentId> {
    let m = object(v, path, &["index", "kind"], &[])?;
    let (i, ip) = field(m, "index", path);
    let index = uint(i, &ip)?;
    let (k, kp) = field(m, "kind", path);
    match string(k, &kp)? {
        "line" => Ok(ComponentId::Line(index)),
        "curve" => Ok(ComponentId::Curve(index)),
        other => err(&kp, format!("unknown component kind \"{other}\"")),
    }
}

fn record_of(v: &Value, path: &str) -> Res<SingRecord> {
    let m = object(v, path, &["point", "self_singular", "witnesses"], &[])?;
    let (p, pp) = field(m, "point", path);
    let (s, sp) = field(m, "self_singular", path);
    let (w, wp) = field(m, "witnesses", path);
    let witnesses = array(w, &wp)?
        .iter()
        .enumerate()
        .map(|(i, c)| component_of(c, &format!("{wp}[{i}]")))
        .collect::<Res<Vec<_>>>()?;
    Ok(SingRecord {
        point: point(p, &pp)?,
        self_singular: s
            .as_bool()
            .ok_or_else(|| ParseError::new(&sp, "expected a boolean"))?,
        witnesses,
    })
}

fn records(v: &Value, path: &str) -> Res<Vec<SingRecord>> {
    array(v, path)?
        .iter()
        .enumerate()
        .map(|(i, r)| record_of(r, &format!("{path}[{i}]")))
        .collect()
}

fn indices(v: &Value, path: &str) -> Res<Vec<usize>> {
    array(v, path)?
        .iter()
        .enumerate()
        .map(|(i, x)| uint(x, &format!("{path}[{i}]")))
        .collect()
}

fn step_of(v: &Value, path: &str) -> Res<CertStep> {
    let kind = v
        .get("kind")
        .ok_or_else(|| ParseError::new(path, "missing key \"kind\""))
        .and_then(|k| string(k, &format!("{path}.kind")))?;
    match kind {
        "init" => {
            object(v, path, &["kind"], &[])?;
            Ok(CertStep::Init)
        }
        "add_line" => {
            let m = object(v, path, &["anchors", "derived", "kind", "line"], &[])?;
            let (a, ap) = field(m, "anchors", path);
            let anchors = indices(a, &ap)?;
            let [i, j] = anchors[..] else {
                return err(&ap, "expected two anchors");
            };
            let (l, lp) = field(m, "line", path);
            let (d, dp) = field(m, "derived", path);
            Ok(CertStep::AddLine {
                anchors: [i, j],
                line: line(l, &lp)?,
                derived: records(d, &dp)?,
            })
        }
        "add_curve" => {
            let m = object(
                v,
                path,
                &[
                    "anchors",
                    "degree",
                    "derived",
                    "form",
                    "kind",
                    "nonrational",
                ],
                &[],
            )?;
            let (a, ap) = field(m, "anchors", path);
            let (f, fp) = field(m, "form", path);
            let form = form(f, &fp)?;
            let (d, dp) = field(m, "degree", path);
            if exponent(d, &dp)? != form.degree() {
                return err(&dp, "degree differs from the form's degree");
            }
            let (dv, dvp) = field(m, "derived", path);
            let (n, np) = field(m, "nonrational", path);
            let mut nonrational = Vec::new();
            for (i, e) in array(n, &np)?.iter().enumerate() {
                let ep = format!("{np}[{i}]");
                let em = object(e, &ep, &["factor", "line"], &[])?;
                let (l, lp) = field(em, "line", &ep);
                let (c, cp) = field(em, "factor", &ep);
                let coeffs = array(c, &cp)?
                    .iter()
                    .enumerate()
                    .map(|(k, x)| bigint(x, &format!("{cp}[{k}]")))
                    .collect::<Res<Vec<_>>>()?;
                let factor = BinaryForm::from_normalized(coeffs)
                    .ok_or_else(|| ParseError::new(&cp, "factor is not normalized"))?;
                nonrational.push(NonRational {
                    line: uint(l, &lp)?,
                    factor,
                });
            }
            Ok(CertStep::AddCurve {
                anchors: indices(a, &ap)?,
                form,
                derived: records(dv, &dvp)?,
                nonrational,
            })
        }
        other => err(
            &format!("{path}.kind"),
            format!("unknown step kind \"{other}\""),
        ),
    }
}

fn claim_of(v: &Value, path: &str) -> Res<TargetClaim> {
    let kind = v
        .get("kind")
        .ok_or_else(|| ParseError::new(path, "missing key \"kind\""))
        .and_then(|k| string(k, &format!("{path}.kind")))?;
    match kind {
        "rational" => {
            let m = object(v, path, &["kind", "point", "record"], &[])?;
            let (p, pp) = field(m, "point", path);
            let (r, rp) = field(m, "record", path);
            Ok(TargetClaim::RationalPoint {
                point: point(p, &pp)?,
                record: uint(r, &rp)?,
            })
        }
        "algebraic" => {
            let m = object(
                v,
                path,
                &["curve", "interval", "kind", "minpoly", "precision"],
                &[],
            )?;
            let (p, pp) = field(m, "minpoly", path);
            let coeffs = array(p, &pp)?
                .iter()
                .enumerate()
                .map(|(i, c)| rat(c, &format!("{pp}[{i}]")))
                .collect::<Res<Vec<_>>>()?;
            if coeffs.last().is_none_or(Zero::is_zero) {
                return err(&pp, "leading coefficient must be nonzero");
            }
            let (iv, ivp) = field(m, "interval", path);
            let ends = array(iv, &ivp)?;
            if ends.len() != 2 {
                return err(&ivp, "expected [lo, hi]");
            }
            let lo = rat(&ends[0], &format!("{ivp}[0]"))?;
            let hi = rat(&ends[1], &format!("{ivp}[1]"))?;
            let interval =
                IntervalQ::new(lo, hi).map_err(|e| ParseError::new(&ivp, e.to_string()))?;
            let (pr, prp) = field(m, "precision", path);
            let precision = uint(pr, &prp)?;
            if !interval.is_adjacent_dyadic() || dyadic_precision(&interval) != precision as u64 {
                return err(
                    &ivp,
                    format!("not a dyadic interval of width 2^-{precision}"),
                );
            }
            let (c, cp) = field(m, "curve", path);
            Ok(TargetClaim::AlgebraicPoint(AlgebraicWitness {
                minpoly: UniPoly::new(coeffs),
                interval,
                curve: uint(c, &cp)?,
            }))
        }
        "curve" => {
            let m = object(v, path, &["component", "form", "kind"], &[])?;
            let (f, fp) = field(m, "form", path);
            let (c, cp) = field(m, "component", path);
            Ok(TargetClaim::EmbeddedCurve {
                form: form(f, &fp)?,
                component: component_of(c, &cp)?,
            })
        }
        other => err(
            &format!("{path}.kind"),
            format!("unknown claim kind \"{other}\""),
        ),
    }
}

pub fn parse_certificate(bytes: &[u8]) -> Result<Certificate, ParseError> {
    let v: Value = serde_json::from_slice(bytes).map_err(|e| {
        ParseError::new(
            format!("line {} column {}", e.line(), e.column()),
            e.to_string(),
        )
    })?;
    let top = object(
        &v,
        "$",
        &["claims", "counts", "steps", "version"],
        &["strategy"],
    )?;
    let (ver, verp) = field(top, "version", "$");
    let version = uint(ver, &verp)? as u64;
    if version != FORMAT_VERSION {
        return err(&verp, format!("unsupported version {version}"));
    }
    let strategy = match top.get("strategy") {
        None => None,
        Some(s) => Some(match string(s, "$.strategy")? {
            "naive" => Strategy::Naive,
            "chain" => Strategy::AdditionChain,
            other => return err("$.strategy", format!("unknown strategy \"{other}\"")),
        }),
    };
    let (c, cp) = field(top, "counts", "$");
    let cm = object(
        c,
        &cp,
        &["curves", "lines", "singular_points", "steps"],
        &[],
    )?;
    let count = |k: &str| {
        let (x, xp) = field(cm, k, &cp);
        uint(x, &xp)
    };
    let counts = Counts {
        lines: count("lines")?,
        curves: count("curves")?,
        singular_points: count("singular_points")?,
        steps: count("steps")?,
    };
    let (s, sp) = field(top, "steps", "$");
    let steps = array(s, &sp)?
        .iter()
        .enumerate()
        .map(|(i, x)| step_of(x, &format!("{sp}[{i}]")))
        .collect::<Res<Vec<_>>>()?;
    let (cl, clp) = field(top, "claims", "$");
    let claims = array(cl, &clp)?
        .iter()
        .enumerate()
        .map(|(i, x)| claim_of(x, &format!("{clp}[{i}]")))
        .collect::<Res<Vec<_>>>()?;
    Ok(Certificate {
        version,
        strategy,
        steps,
        claims,
        counts,
    })
}
