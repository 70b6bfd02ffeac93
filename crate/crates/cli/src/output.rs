//! Text, CSV and JSON renderings. Every number is an exact `p/q` string.

use std::fmt::Write as _;

use qpade_core::arith::rat;
use qpade_core::{BasePointList, PadePair, Poly, Rat, Status, VerificationReport};
use serde::Serialize;

use crate::Format;

pub fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("reports serialize")
}

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
        Status::Skipped => "SKIP",
    }
}

fn witness_string(w: &std::collections::BTreeMap<String, String>) -> String {
    w.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ")
}

pub fn report_text(r: &VerificationReport) -> String {
    let i = &r.instance;
    let mut out = String::new();
    let mut params = vec![format!("q={}", i.q)];
    params.extend(i.a.iter().enumerate().map(|(k, v)| format!("a{}={v}", k + 1)));
    params.extend(i.b.iter().enumerate().map(|(k, v)| format!("b{}={v}", k + 1)));
    params.extend(i.c.iter().map(|v| format!("c={v}")));
    params.extend(i.d.iter().map(|v| format!("d={v}")));
    let _ = writeln!(out, "{} {} m={} n={} steps={}", i.ptype, params.join(" "), i.m, i.n, i.steps);
    for c in &r.checks {
        let line = format!(
            "  {} {:<10} {:<16} {}",
            status_word(c.status),
            c.equation_tag,
            c.check_id,
            witness_string(&c.witness)
        );
        let _ = writeln!(out, "{}", line.trim_end());
    }
    for e in &r.errors {
        let _ = writeln!(out, "  ERROR {} at {}: {}", e.kind, e.stage, e.message);
    }
    let s = r.summary;
    let _ = writeln!(out, "  {} checks: {} pass, {} fail, {} skipped", s.total, s.pass, s.fail, s.skipped);
    out
}

fn csv_string(rows: Vec<Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
}

/// One row per check.
pub fn checks_csv(reports: &[VerificationReport]) -> String {
    let mut rows = vec![["instance", "type", "m", "n", "check_id", "equation_tag", "status", "witness"]
        .map(String::from)
        .to_vec()];
    for (idx, r) in reports.iter().enumerate() {
        for c in &r.checks {
            rows.push(vec![
                idx.to_string(),
                r.instance.ptype.name().into(),
                r.instance.m.to_string(),
                r.instance.n.to_string(),
                c.check_id.clone(),
                c.equation_tag.clone(),
                status_word(c.status).to_lowercase(),
                witness_string(&c.witness),
            ]);
        }
    }
    csv_string(rows)
}

fn coeffs(p: &Poly) -> Vec<String> {
    p.coeffs().iter().map(rat::fmt).collect()
}

#[derive(Serialize)]
struct PadeOut {
    p: Vec<String>,
    q: Vec<String>,
}

pub fn pade(pair: &PadePair, format: Format) -> String {
    let out = PadeOut { p: coeffs(&pair.p), q: coeffs(&pair.q) };
    match format {
        Format::Json => json(&out) + "\n",
        Format::Csv => {
            let len = out.p.len().max(out.q.len());
            let get = |v: &[String], i: usize| v.get(i).cloned().unwrap_or_default();
            let mut rows = vec![vec!["degree".to_string(), "p".into(), "q".into()]];
            rows.extend((0..len).map(|i| vec![i.to_string(), get(&out.p, i), get(&out.q, i)]));
            csv_string(rows)
        }
        Format::Text => format!("P = [{}]\nQ = [{}]\n", out.p.join(", "), out.q.join(", ")),
    }
}

#[derive(Serialize)]
struct TauRow {
    m: i64,
    n: i64,
    k: i64,
    tau: String,
}

pub fn tau_table(rows: &[(i64, i64, i64, Rat)], format: Format) -> String {
    let rows: Vec<TauRow> =
        rows.iter().map(|(m, n, k, v)| TauRow { m: *m, n: *n, k: *k, tau: rat::fmt(v) }).collect();
    match format {
        Format::Json => json(&rows) + "\n",
        Format::Csv => {
            let mut out = vec![["m", "n", "k", "tau"].map(String::from).to_vec()];
            out.extend(rows.iter().map(|r| vec![r.m.to_string(), r.n.to_string(), r.k.to_string(), r.tau.clone()]));
            csv_string(out)
        }
        Format::Text => rows.iter().fold(String::new(), |mut s, r| {
            let _ = writeln!(s, "tau[m={}, n={}, k={}] = {}", r.m, r.n, r.k, r.tau);
            s
        }),
    }
}

#[derive(Clone, Serialize)]
struct PointOut {
    f: String,
    g: String,
    loci: Vec<String>,
    multiplicity: u8,
    #[serde(skip_serializing_if = "Option::is_none")]
    tangent: Option<String>,
}

pub fn base_points(list: &BasePointList, format: Format) -> String {
    let rows: Vec<PointOut> = list
        .points
        .iter()
        .flat_map(|p| {
            // a double point is listed once per unit of multiplicity
            let row = PointOut {
                f: p.f.fmt_exact(),
                g: p.g.fmt_exact(),
                loci: p.loci.iter().map(|l| l.describe()).collect(),
                multiplicity: p.multiplicity,
                tangent: p.tangent.as_ref().map(rat::fmt),
            };
            std::iter::repeat_n(row, usize::from(p.multiplicity))
        })
        .collect();
    match format {
        Format::Json => json(&rows) + "\n",
        Format::Csv => {
            let mut out = vec![["f", "g", "loci", "multiplicity", "tangent"].map(String::from).to_vec()];
            out.extend(rows.iter().map(|r| {
                vec![
                    r.f.clone(),
                    r.g.clone(),
                    r.loci.join(";"),
                    r.multiplicity.to_string(),
                    r.tangent.clone().unwrap_or_default(),
                ]
            }));
            csv_string(out)
        }
        Format::Text => rows.iter().fold(String::new(), |mut s, r| {
            let tangent = r.tangent.as_ref().map(|t| format!("  g/f -> {t}")).unwrap_or_default();
            let _ = writeln!(s, "(f, g) = ({}, {})  on {}{}", r.f, r.g, r.loci.join(", "), tangent);
            s
        }),
    }
}
