//! Human and JSON renderings of reports. JSON follows the certificate's
//! conventions: sorted keys, integers as decimal strings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::Signed;
use rigidplane::engine::{ComponentId, StatsReport, TargetStats};
use rigidplane::verify::{BezoutEntry, CertStep, Counts, NcReport, OracleReport, Smoothness};
use rigidplane::{Certificate, TargetClaim, VerificationReport, VerifyError};
use serde_json::{json, Value};

fn dec(n: impl ToString) -> Value {
    Value::String(n.to_string())
}

pub fn to_json_line(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("values serialize");
    s.push('\n');
    s
}

pub fn failure_kind(e: &VerifyError) -> &'static str {
    match e {
        VerifyError::Parse(_) => "ParseError",
        VerifyError::StepMismatch { .. } => "StepMismatch",
        VerifyError::ClaimFailed { .. } => "ClaimFailed",
    }
}

pub fn failure_line(e: &VerifyError) -> String {
    format!("{}: {e}", failure_kind(e))
}

fn counts_json(c: &Counts) -> Value {
    json!({
        "curves": dec(c.curves),
        "lines": dec(c.lines),
        "singular_points": dec(c.singular_points),
        "steps": dec(c.steps),
    })
}

pub fn verification_text(r: &VerificationReport) -> String {
    let c = &r.counts;
    let mut s = String::new();
    match &r.failure {
        None => {
            let _ = writeln!(
                s,
                "verified: {} steps, {} claims",
                r.steps.len(),
                r.claims.len()
            );
        }
        Some(e) => {
            let _ = writeln!(s, "rejected: {}", failure_line(e));
        }
    }
    let _ = writeln!(
        s,
        "lines {}, curves {}, singular points {}",
        c.lines, c.curves, c.singular_points
    );
    if let Some(nc) = &r.normal_crossings {
        let _ = writeln!(
            s,
            "normal crossings: {}",
            if nc.normal_crossings { "yes" } else { "no" }
        );
    }
    s
}

pub fn verification_json(r: &VerificationReport) -> Value {
    let results = |v: &[rigidplane::verify::ClaimResult]| -> Vec<Value> {
        v.iter()
            .map(|c| json!({"ok": c.ok, "reason": c.reason}))
            .collect()
    };
    let failure = r.failure.as_ref().map(|e| {
        let (step, claim) = match e {
            VerifyError::StepMismatch { step, .. } => (Some(dec(step)), None),
            VerifyError::ClaimFailed { claim, .. } => (None, Some(dec(claim))),
            VerifyError::Parse(_) => (None, None),
        };
        json!({"kind": failure_kind(e), "message": e.to_string(), "step": step, "claim": claim})
    });
    json!({
        "ok": r.ok,
        "steps": results(&r.steps),
        "claims": results(&r.claims),
        "counts": counts_json(&r.counts),
        "normal_crossings": r.normal_crossings.as_ref().map(|n| n.normal_crossings),
        "bezout_passes": r.bezout_audit.iter().all(BezoutEntry::passes),
        "failure": failure,
    })
}

/// Stats recovered from a certificate alone. Each claim is charged with the
/// steps after the previous claim's charge up to the step that produced its
/// point or component; gadget counts are not part of the wire format.
pub fn stats_from_certificate(cert: &Certificate) -> StatsReport {
    let mut first_seen = BTreeMap::new();
    let mut line_steps = vec![0; 4];
    let mut curve_steps = Vec::new();
    for (k, s) in cert.steps.iter().enumerate() {
        let derived = match s {
            CertStep::Init => continue,
            CertStep::AddLine { derived, .. } => {
                line_steps.push(k);
                derived
            }
            CertStep::AddCurve { derived, .. } => {
                curve_steps.push(k);
                derived
            }
        };
        for r in derived {
            first_seen.entry(r.point.clone()).or_insert(k);
        }
    }
    let max_abs =
        |v: &mut dyn Iterator<Item = &BigInt>| v.map(|c| c.abs()).max().unwrap_or_default();
    let mut charged = 1.min(cert.steps.len());
    let mut targets = Vec::new();
    for claim in &cert.claims {
        let (label, height, step) = match claim {
            TargetClaim::RationalPoint { point, .. } => (
                point.to_string(),
                point.height(),
                first_seen.get(point).copied().unwrap_or(0),
            ),
            TargetClaim::AlgebraicPoint(w) => (
                format!("root of {} in {}", w.minpoly, w.interval),
                max_abs(&mut w.minpoly.primitive_integer_coeffs().iter()),
                curve_steps.get(w.curve).copied().unwrap_or(0),
            ),
            TargetClaim::EmbeddedCurve { form, component } => {
                let step = match component {
                    ComponentId::Line(i) => line_steps.get(*i),
                    ComponentId::Curve(i) => curve_steps.get(*i),
                };
                (
                    format!("curve {form}"),
                    max_abs(&mut form.terms().iter().map(|(_, c)| c)),
                    step.copied().unwrap_or(0),
                )
            }
        };
        let end = charged.max(step + 1).min(cert.steps.len());
        let range = &cert.steps[charged..end];
        let lines_added = range
            .iter()
            .filter(|s| matches!(s, CertStep::AddLine { .. }))
            .count();
        let curves_added = range
            .iter()
            .filter(|s| matches!(s, CertStep::AddCurve { .. }))
            .count();
        targets.push(TargetStats {
            label,
            height,
            lines_added,
            curves_added,
            steps: range.len(),
            gadgets: BTreeMap::new(),
        });
        charged = end;
    }
    StatsReport {
        targets,
        lines: cert.counts.lines,
        curves: cert.counts.curves,
        singular_points: cert.counts.singular_points,
        trace_len: cert.counts.steps,
    }
}

pub fn stats_text(s: &StatsReport) -> String {
    let mut out = String::new();
    if !s.targets.is_empty() {
        let width = s
            .targets
            .iter()
            .map(|t| t.label.len())
            .max()
            .unwrap_or(0)
            .max(6);
        let _ = writeln!(
            out,
            "{:<width$}  {:>8}  {:>6}  {:>6}  {:>6}  gadgets",
            "target", "height", "lines", "curves", "steps"
        );
        for t in &s.targets {
            let gadgets: Vec<String> = t
                .gadgets
                .iter()
                .map(|(k, n)| format!("{}={n}", k.name()))
                .collect();
            let _ = writeln!(
                out,
                "{:<width$}  {:>8}  {:>6}  {:>6}  {:>6}  {}",
                t.label,
                t.height,
                t.lines_added,
                t.curves_added,
                t.steps,
                if gadgets.is_empty() {
                    "-".to_string()
                } else {
                    gadgets.join(" ")
                }
            );
        }
    }
    let _ = writeln!(
        out,
        "total: {} lines, {} curves, {} singular points, {} steps",
        s.lines, s.curves, s.singular_points, s.trace_len
    );
    out
}

pub fn stats_json(s: &StatsReport) -> Value {
    let targets: Vec<Value> = s
        .targets
        .iter()
        .map(|t| {
            let gadgets: serde_json::Map<String, Value> = t
                .gadgets
                .iter()
                .map(|(k, n)| (k.name().to_string(), dec(n)))
                .collect();
            json!({
                "label": t.label,
                "height": dec(&t.height),
                "lines_added": dec(t.lines_added),
                "curves_added": dec(t.curves_added),
                "steps": dec(t.steps),
                "gadgets": gadgets,
            })
        })
        .collect();
    json!({
        "targets": targets,
        "lines": dec(s.lines),
        "curves": dec(s.curves),
        "singular_points": dec(s.singular_points),
        "steps": dec(s.trace_len),
    })
}

fn smoothness_label(s: &Smoothness) -> String {
    match s {
        Smoothness::Smooth => "smooth".into(),
        Smoothness::Singular {
            along_component: true,
            ..
        } => "repeated component".into(),
        Smoothness::Singular { points, .. } => {
            format!(
                "singular at {}",
                points
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(", ")
            )
        }
        Smoothness::Unknown { .. } => "undecided".into(),
    }
}

pub fn oracle_text(o: &OracleReport, bezout: &[BezoutEntry], nc: &NcReport) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "oracle: {} ({} line meets)",
        if o.agrees() { "agrees" } else { "DISAGREES" },
        o.points.len()
    );
    for p in &o.missing {
        let _ = writeln!(s, "  missing record {p}");
    }
    for p in &o.unexpected {
        let _ = writeln!(s, "  unexplained record {p}");
    }
    for (p, rec, got) in &o.count_mismatches {
        let _ = writeln!(s, "  {p}: {rec} recorded lines, {got} by oracle");
    }
    let failing: Vec<&BezoutEntry> = bezout.iter().filter(|e| !e.passes()).collect();
    let _ = writeln!(
        s,
        "bezout: {}/{} pairs pass",
        bezout.len() - failing.len(),
        bezout.len()
    );
    for e in failing {
        let _ = writeln!(
            s,
            "  {} / {}: {} of {}",
            e.pair.0, e.pair.1, e.total, e.expected
        );
    }
    let _ = writeln!(
        s,
        "normal crossings: {}",
        if nc.normal_crossings { "yes" } else { "no" }
    );
    for (p, m) in &nc.multiple_points {
        let _ = writeln!(s, "  {p} on {m} components");
    }
    for t in &nc.tangencies {
        let at = t
            .point
            .as_ref()
            .map_or("a non-rational point".to_string(), ToString::to_string);
        let _ = writeln!(
            s,
            "  {} tangent to {} at {at} (multiplicity {})",
            t.components.0, t.components.1, t.multiplicity
        );
    }
    for (c, sm) in &nc.singular_components {
        let _ = writeln!(s, "  {c}: {}", smoothness_label(sm));
    }
    s
}

pub fn oracle_json(o: &OracleReport, bezout: &[BezoutEntry], nc: &NcReport) -> Value {
    let pts = |v: &[rigidplane::ProjPoint]| v.iter().map(|p| p.to_string()).collect::<Vec<_>>();
    json!({
        "oracle": {
            "agrees": o.agrees(),
            "meets": dec(o.points.len()),
            "missing": pts(&o.missing),
            "unexpected": pts(&o.unexpected),
            "count_mismatches": o.count_mismatches.iter()
                .map(|(p, r, g)| json!({"point": p.to_string(), "recorded": dec(r), "oracle": dec(g)}))
                .collect::<Vec<_>>(),
        },
        "bezout": bezout.iter().map(|e| json!({
            "pair": [e.pair.0.to_string(), e.pair.1.to_string()],
            "total": dec(e.total),
            "expected": dec(e.expected),
        })).collect::<Vec<_>>(),
        "normal_crossings": {
            "ok": nc.normal_crossings,
            "multiple_points": nc.multiple_points.iter()
                .map(|(p, m)| json!({"point": p.to_string(), "components": dec(m)}))
                .collect::<Vec<_>>(),
            "tangencies": nc.tangencies.iter().map(|t| json!({
                "components": [t.components.0.to_string(), t.components.1.to_string()],
                "point": t.point.as_ref().map(ToString::to_string),
                "multiplicity": dec(t.multiplicity),
            })).collect::<Vec<_>>(),
            "singular_components": nc.singular_components.iter()
                .map(|(c, sm)| json!({"component": c.to_string(), "status": smoothness_label(sm)}))
                .collect::<Vec<_>>(),
        },
    })
}
