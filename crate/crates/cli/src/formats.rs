//! Input/output formats: quotient-rule JSON descriptors, certificate JSON
//! (all numbers as decimal strings with explicit error radii plus an exact
//! rational form), and the certificate re-checker behind `verify`.

use anyhow::{anyhow, bail, Context, Result};
use serde_json::{json, Map, Value};

use lpq_core::certifier::{
    grace_apolar_witness, lemma_q2_floor, positivity_with_m, rouche_margin, s4_circle_min,
    tail_bound_r5, NonMembershipCertificate, Verdict,
};
use lpq_core::rat::{parse_rat, rat_to_decimal, rat_to_frac_string, Rat};
use lpq_core::series::{CoefficientSeries, QuotientRule};
use num_traits::{One, Signed, Zero};

/// Digits used for the decimal renderings in JSON artifacts.
const DECIMAL_DIGITS: u32 = 24;

/// Parses a quotient-rule descriptor: `{"type":"constant","q":v}`,
/// `{"type":"list","q":[...]}` or `{"type":"limit-increasing","c":v,"d":w}`,
/// each with optional `"a0"`, `"a1"` (default 1).
pub fn parse_rule_json(text: &str) -> Result<(QuotientRule, Rat, Rat)> {
    let v: Value = serde_json::from_str(text).context("rule descriptor is not valid JSON")?;
    let obj = v.as_object().ok_or_else(|| anyhow!("rule must be a JSON object"))?;
    let kind = obj
        .get("type")
        .and_then(Value::as_str)
        .ok_or_else(|| anyhow!("rule needs a string \"type\" field"))?;
    let num = |key: &str| -> Result<Rat> {
        json_rat(
            obj.get(key)
                .ok_or_else(|| anyhow!("rule of type {kind:?} needs field {key:?}"))?,
        )
    };
    let rule = match kind {
        "constant" => QuotientRule::Constant { q: num("q")? },
        "limit-increasing" => QuotientRule::LimitIncreasing {
            c: num("c")?,
            d: num("d")?,
        },
        "list" => {
            let arr = obj
                .get("q")
                .and_then(Value::as_array)
                .ok_or_else(|| anyhow!("list rule needs an array field \"q\""))?;
            let q = arr.iter().map(json_rat).collect::<Result<Vec<_>>>()?;
            QuotientRule::List { q }
        }
        other => bail!("unknown rule type {other:?}"),
    };
    let opt = |key: &str| -> Result<Rat> {
        match obj.get(key) {
            Some(v) => json_rat(v),
            None => Ok(Rat::one()),
        }
    };
    Ok((rule, opt("a0")?, opt("a1")?))
}

/// Exact rational from a JSON number or string. `serde_json`'s shortest
/// round-trip rendering recovers the literal the user wrote ("3.2" → 16/5).
fn json_rat(v: &Value) -> Result<Rat> {
    let s = match v {
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.clone(),
        other => bail!("expected a number, got {other}"),
    };
    parse_rat(&s).map_err(|e| anyhow!("bad number {s:?}: {e}"))
}

/// Renders a rule back to its JSON descriptor.
pub fn rule_to_json(rule: &QuotientRule, a0: &Rat, a1: &Rat) -> Value {
    let mut obj = Map::new();
    match rule {
        QuotientRule::Constant { q } => {
            obj.insert("type".into(), "constant".into());
            obj.insert("q".into(), Value::String(rat_to_frac_string(q)));
        }
        QuotientRule::List { q } => {
            obj.insert("type".into(), "list".into());
            obj.insert(
                "q".into(),
                Value::Array(
                    q.iter()
                        .map(|x| Value::String(rat_to_frac_string(x)))
                        .collect(),
                ),
            );
        }
        QuotientRule::LimitIncreasing { c, d } => {
            obj.insert("type".into(), "limit-increasing".into());
            obj.insert("c".into(), Value::String(rat_to_frac_string(c)));
            obj.insert("d".into(), Value::String(rat_to_frac_string(d)));
        }
    }
    obj.insert("a0".into(), Value::String(rat_to_frac_string(a0)));
    obj.insert("a1".into(), Value::String(rat_to_frac_string(a1)));
    Value::Object(obj)
}

/// A number in certificate JSON: decimal string, error radius, exact form.
pub fn num_json(x: &Rat) -> Value {
    let (dec, err) = rat_to_decimal(x, DECIMAL_DIGITS);
    json!({
        "decimal": dec,
        "radius": rat_to_frac_string(&err),
        "exact": rat_to_frac_string(x),
    })
}

fn num_from_json(v: &Value) -> Result<Rat> {
    let s = v
        .get("exact")
        .and_then(Value::as_str)
        .ok_or_else(|| anyhow!("certificate number missing \"exact\" field"))?;
    parse_rat(s).map_err(|e| anyhow!("bad exact value {s:?}: {e}"))
}

/// Serializes a certificate, embedding the rule that generated the series so
/// `verify` can re-check every claim.
pub fn certificate_to_json(cert: &NonMembershipCertificate, rule: &Value) -> Value {
    let mut obj = Map::new();
    obj.insert("conclusion".into(), "NOT_IN_LP".into());
    obj.insert("rule".into(), rule.clone());
    obj.insert("q2".into(), num_json(&cert.q2));
    obj.insert("q3".into(), num_json(&cert.q3));
    obj.insert("q4".into(), num_json(&cert.q4));
    obj.insert("limit".into(), num_json(&cert.limit));
    obj.insert(
        "qinf_bracket".into(),
        json!({"lo": num_json(&cert.qinf_lo), "hi": num_json(&cert.qinf_hi)}),
    );
    obj.insert(
        "q2_floor".into(),
        json!({
            "residual": num_json(&cert.q2_floor.residual),
            "reduced": num_json(&cert.q2_floor.reduced),
            "q2_at_least_2": cert.q2_floor.q2_at_least_2,
            "verdict": match cert.q2_floor.verdict {
                Verdict::NotInLp => "NOT_IN_LP",
                Verdict::Inconclusive => "INCONCLUSIVE",
            },
        }),
    );
    obj.insert(
        "positivity".into(),
        match &cert.positivity {
            None => Value::Null,
            Some(w) => json!({
                "m": w.m,
                "q2": num_json(&w.q2),
                "trace": w.trace.iter().map(|t| json!({
                    "lo": num_json(&t.lo),
                    "hi": num_json(&t.hi),
                    "method": t.method,
                })).collect::<Vec<_>>(),
            }),
        },
    );
    obj.insert(
        "circle_lower_bound".into(),
        match &cert.circle {
            None => Value::Null,
            Some(c) => json!({
                "bound": num_json(&c.bound),
                "certified": c.certified,
                "sampled_min_sq": num_json(&c.sampled_min_sq),
                "samples": c.samples,
                "sampled_ok": c.sampled_ok,
            }),
        },
    );
    obj.insert(
        "tail_upper_bound".into(),
        match &cert.tail {
            None => Value::Null,
            Some(t) => json!({
                "bound": num_json(&t.bound),
                "samples": t.samples,
                "sampled_ok": t.sampled_ok,
                "truncation": t.truncation,
            }),
        },
    );
    obj.insert(
        "rouche_margin".into(),
        cert.rouche_margin.as_ref().map(num_json).unwrap_or(Value::Null),
    );
    obj.insert(
        "grace_witness".into(),
        match &cert.grace {
            None => Value::Null,
            Some(g) => json!({
                "q_coefficients": g.q_poly.coeffs().iter().map(num_json).collect::<Vec<_>>(),
                "roots": g.roots.iter().map(num_json).collect::<Vec<_>>(),
                "apolarity_residual": num_json(&g.apolarity_residual),
                "roots_in_disk": g.roots_in_disk,
                "inside_count": g.inside_count,
            }),
        },
    );
    Value::Object(obj)
}

/// Outcome of re-checking a serialized certificate.
#[derive(Debug)]
pub struct VerifyReport {
    pub checks: Vec<(String, bool)>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|(_, ok)| *ok)
    }
}

/// Re-checks a serialized certificate without re-running any search: every
/// bound is recomputed from the stated quotients, the floor residual and
/// apolarity residual are recomputed exactly, and the positivity cover is
/// re-verified with the stated section index `m`.
pub fn verify_certificate(doc: &Value) -> Result<VerifyReport> {
    let obj = doc
        .as_object()
        .ok_or_else(|| anyhow!("certificate must be a JSON object"))?;
    if obj.get("conclusion").and_then(Value::as_str) != Some("NOT_IN_LP") {
        bail!("certificate conclusion must be NOT_IN_LP");
    }
    let get = |k: &str| obj.get(k).ok_or_else(|| anyhow!("missing field {k:?}"));
    let q2 = num_from_json(get("q2")?)?;
    let q3 = num_from_json(get("q3")?)?;
    let q4 = num_from_json(get("q4")?)?;
    let limit = num_from_json(get("limit")?)?;
    let mut checks: Vec<(String, bool)> = Vec::new();
    let mut push = |name: &str, ok: bool| checks.push((name.to_string(), ok));

    // rebuild the series from the embedded rule
    let rule_v = get("rule")?;
    let (rule, a0, a1) = parse_rule_json(&rule_v.to_string())?;
    let series = CoefficientSeries::from_rule(rule.clone(), a0, a1, 8)
        .map_err(|e| anyhow!("embedded rule does not materialize: {e}"))?;
    let normalized = series.normalize();
    let mat = normalized
        .materialize_to(5)
        .map_err(|e| anyhow!("materialization failed: {e}"))?;
    let prof = lpq_core::series::quotients(&mat, 5).map_err(|e| anyhow!("{e}"))?;
    push("stated q2 matches the rule", *prof.q_n(2) == q2);
    push("stated q3 matches the rule", *prof.q_n(3) == q3);
    push("stated q4 matches the rule", *prof.q_n(4) == q4);
    push(
        "stated limit matches the rule",
        rule.limit().as_ref() == Some(&limit),
    );

    // floor lemma, recomputed exactly
    let floor_v = get("q2_floor")?;
    let b = mat.coeffs();
    let rec = lemma_q2_floor(&b[0], &b[1], &b[2], &b[3]).map_err(|e| anyhow!("{e}"))?;
    push(
        "floor residual matches",
        num_from_json(
            floor_v
                .get("residual")
                .ok_or_else(|| anyhow!("q2_floor.residual missing"))?,
        )? == rec.residual,
    );
    push(
        "reduced floor form matches",
        num_from_json(
            floor_v
                .get("reduced")
                .ok_or_else(|| anyhow!("q2_floor.reduced missing"))?,
        )? == rec.reduced,
    );

    let pipeline = !get("positivity")?.is_null();
    if !pipeline {
        // short certificate: the floor lemma itself must conclude
        push(
            "floor lemma concludes (residual < 0)",
            rec.verdict == Verdict::NotInLp,
        );
        return Ok(VerifyReport { checks });
    }

    // positivity with the stated m (no search)
    let m = get("positivity")?
        .get("m")
        .and_then(Value::as_u64)
        .ok_or_else(|| anyhow!("positivity.m missing"))? as usize;
    push(
        "positivity cover re-verified at stated m",
        positivity_with_m(&normalized, &limit, m).is_ok(),
    );

    // circle and tail bounds, recomputed
    let circle = s4_circle_min(&q2, &q3, &q4).map_err(|e| anyhow!("{e}"))?;
    push(
        "circle bound matches",
        num_from_json(
            get("circle_lower_bound")?
                .get("bound")
                .ok_or_else(|| anyhow!("circle bound missing"))?,
        )? == circle.bound,
    );
    push("circle bound certified on the whole circle", circle.certified);
    let tail = tail_bound_r5(&q2, &q3, &q4).map_err(|e| anyhow!("{e}"))?;
    push(
        "tail bound matches",
        num_from_json(
            get("tail_upper_bound")?
                .get("bound")
                .ok_or_else(|| anyhow!("tail bound missing"))?,
        )? == tail.bound,
    );
    push("tail samples below bound", tail.sampled_ok);
    let margin = rouche_margin(&q2, &q3, &q4).map_err(|e| anyhow!("{e}"))?;
    push("Rouche margin positive", margin.is_positive());
    push(
        "stated Rouche margin matches",
        num_from_json(get("rouche_margin")?)? == margin,
    );

    // Grace witness
    let grace = grace_apolar_witness(&q2, &q3, &q4).map_err(|e| anyhow!("{e}"))?;
    push(
        "apolarity residual exactly zero",
        grace.apolarity_residual.is_zero(),
    );
    push("apolar roots in closed disk", grace.roots_in_disk);
    push("S_4 has a zero in the open disk", grace.inside_count >= 1);
    let stated_inside = get("grace_witness")?
        .get("inside_count")
        .and_then(Value::as_i64)
        .ok_or_else(|| anyhow!("grace inside_count missing"))?;
    push(
        "stated inside count matches",
        stated_inside == grace.inside_count,
    );
    Ok(VerifyReport { checks })
}

/// CSV for `(n, c_n_lo, c_n_hi)` rows.
pub fn cn_csv(rows: &[(usize, Rat, Rat)]) -> String {
    let mut out = String::from("n,c_n_lo,c_n_hi\n");
    for (n, lo, hi) in rows {
        out.push_str(&format!(
            "{n},{},{}\n",
            rat_to_decimal(lo, DECIMAL_DIGITS).0,
            rat_to_decimal(hi, DECIMAL_DIGITS).0
        ));
    }
    out
}

/// CSV for `(k, a_tilde_lo, a_tilde_hi)` rows.
pub fn spectrum_csv(rows: &[(usize, f64, f64)]) -> String {
    let mut out = String::from("k,a_tilde_lo,a_tilde_hi\n");
    for (k, lo, hi) in rows {
        out.push_str(&format!("{k},{lo:.12},{hi:.12}\n"));
    }
    out
}

/// CSV for `(n, p_n, q_n)` rows; `q_1` has no value and is left empty.
pub fn quotients_csv(p: &[Rat], q: &[Rat]) -> String {
    let mut out = String::from("n,p_n,q_n\n");
    for (i, pn) in p.iter().enumerate() {
        let n = i + 1;
        let qn = if n >= 2 {
            rat_to_decimal(&q[n - 2], DECIMAL_DIGITS).0
        } else {
            String::new()
        };
        out.push_str(&format!(
            "{n},{},{qn}\n",
            rat_to_decimal(pn, DECIMAL_DIGITS).0
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use lpq_core::rat::{rat_frac, rat_i64};

    #[test]
    fn numbers_round_trip_through_json() {
        for x in [rat_i64(0), rat_frac(16, 5), rat_frac(-7, 3), rat_frac(1, 1 << 40)] {
            let v = num_json(&x);
            assert_eq!(num_from_json(&v).unwrap(), x);
            assert!(v.get("decimal").is_some() && v.get("radius").is_some());
        }
    }

    #[test]
    fn rules_round_trip_through_json() {
        let (rule, a0, a1) =
            parse_rule_json(r#"{"type":"limit-increasing","c":"16/5","d":"1/5"}"#).unwrap();
        assert_eq!(a0, rat_i64(1));
        assert_eq!(a1, rat_i64(1));
        let v = rule_to_json(&rule, &a0, &a1);
        let (rule2, _, _) = parse_rule_json(&v.to_string()).unwrap();
        assert_eq!(rule2.q(2), rule.q(2));
        assert_eq!(rule2.limit(), rule.limit());
        // numeric literals are accepted alongside fraction strings
        let (r3, a0b, _) = parse_rule_json(r#"{"type":"constant","q":4,"a0":"3/2"}"#).unwrap();
        assert_eq!(r3.q(5), Some(rat_i64(4)));
        assert_eq!(a0b, rat_frac(3, 2));
    }

    #[test]
    fn quotients_csv_has_fixed_columns() {
        let csv = quotients_csv(&[rat_i64(1), rat_i64(4)], &[rat_i64(4)]);
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("n,p_n,q_n"));
    }
}
