//! Structured analysis reports and their two serializations: a
//! machine-readable JSON document with fixed key order, and a plain
//! human-readable form. Both are deterministic for a given input and
//! tool version; wall-clock timings never enter the report body.

use std::fmt::Write as _;

use gbent_core::analysis::CharacterizationCertificate;
use gbent_core::GbFunc;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Structured,
    Plain,
}

#[derive(Debug, Clone)]
pub struct InputEcho {
    pub p: u64,
    pub l: u32,
    pub n: u32,
    pub k: u32,
    pub points: usize,
    pub digest: String,
}

impl InputEcho {
    pub fn of(f: &GbFunc) -> Self {
        InputEcho {
            p: f.p(),
            l: f.l(),
            n: f.n(),
            k: f.k(),
            points: f.domain_size(),
            digest: table_digest(f),
        }
    }
}

/// FNV-1a over the shape and table; enough to recognize an input echo.
pub fn table_digest(f: &GbFunc) -> String {
    let mut h: u64 = 0xcbf29ce484222325;
    let mut eat = |v: u64| {
        for b in v.to_le_bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x100000001b3);
        }
    };
    eat(f.p());
    eat(f.l() as u64);
    eat(f.n() as u64);
    eat(f.k() as u64);
    for &v in f.table() {
        eat(v);
    }
    format!("fnv1a64:{h:016x}")
}

#[derive(Debug, Clone)]
pub struct GbentField {
    pub verdict: bool,
    pub witness: Option<usize>,
}

#[derive(Debug, Clone)]
pub struct ZpkField {
    pub all_scalars: bool,
    pub prime_powers: bool,
}

#[derive(Debug, Clone)]
pub struct CharField {
    pub mode: String,
    pub t: u32,
    pub s: u32,
    pub verdict: bool,
    pub agrees_with_gbent: bool,
    pub certificate: CharacterizationCertificate,
}

#[derive(Debug, Clone)]
pub struct RdsField {
    pub params: (u64, u64, u64, u64),
    pub bruteforce: bool,
    pub bruteforce_failure: Option<(usize, u64)>,
    pub characters: bool,
}

#[derive(Debug, Clone)]
pub struct GrayField {
    pub expected_order: u32,
    pub order: Option<u32>,
    pub uniform_shift: Option<bool>,
    pub verdict: bool,
}

/// Everything one command run may report. Absent sections are omitted
/// from both serializations.
#[derive(Debug, Clone, Default)]
pub struct Report {
    pub input: Option<InputEcho>,
    pub gbent: Option<GbentField>,
    pub regularity: Option<String>,
    pub dual: Option<Vec<u64>>,
    pub sign_pattern: Option<Vec<i8>>,
    pub gauss_factor: Option<bool>,
    pub zpk_bent: Option<ZpkField>,
    pub characterization: Vec<CharField>,
    pub rds: Option<RdsField>,
    pub gray_plateaued: Option<GrayField>,
}

pub fn emit_report(report: &Report, format: Format) -> String {
    match format {
        Format::Structured => emit_structured(report),
        Format::Plain => emit_plain(report),
    }
}

fn json_usizes(values: impl IntoIterator<Item = usize>) -> String {
    let items: Vec<String> = values.into_iter().map(|v| v.to_string()).collect();
    format!("[{}]", items.join(","))
}

fn json_u64s(values: &[u64]) -> String {
    json_usizes(values.iter().map(|&v| v as usize))
}

fn json_signs(values: &[i8]) -> String {
    let items: Vec<String> = values.iter().map(|v| v.to_string()).collect();
    format!("[{}]", items.join(","))
}

fn json_opt_usize(v: Option<usize>) -> String {
    v.map_or_else(|| "null".into(), |x| x.to_string())
}

fn emit_structured(report: &Report) -> String {
    let mut fields: Vec<String> = Vec::new();
    if let Some(input) = &report.input {
        fields.push(format!(
            "\"input\":{{\"p\":{},\"l\":{},\"n\":{},\"k\":{},\"points\":{},\"digest\":\"{}\"}}",
            input.p, input.l, input.n, input.k, input.points, input.digest
        ));
    }
    if let Some(g) = &report.gbent {
        fields.push(format!(
            "\"gbent\":{{\"verdict\":{},\"witness\":{}}}",
            g.verdict,
            json_opt_usize(g.witness)
        ));
    }
    if let Some(r) = &report.regularity {
        fields.push(format!("\"regularity\":\"{r}\""));
    }
    if let Some(d) = &report.dual {
        fields.push(format!("\"dual\":{}", json_u64s(d)));
    }
    if let Some(s) = &report.sign_pattern {
        fields.push(format!("\"sign_pattern\":{}", json_signs(s)));
    }
    if let Some(g) = report.gauss_factor {
        fields.push(format!("\"gauss_factor\":{g}"));
    }
    if let Some(z) = &report.zpk_bent {
        fields.push(format!(
            "\"zpk_bent\":{{\"all_scalars\":{},\"prime_powers\":{}}}",
            z.all_scalars, z.prime_powers
        ));
    }
    if !report.characterization.is_empty() {
        let entries: Vec<String> = report
            .characterization
            .iter()
            .map(|c| {
                let points: Vec<String> = c
                    .certificate
                    .points
                    .iter()
                    .map(|pt| match pt {
                        None => "null".to_string(),
                        Some(pt) => format!(
                            "{{\"j\":{},\"d\":{},\"signs\":{}}}",
                            pt.j,
                            json_u64s(&pt.d),
                            json_signs(&pt.signs)
                        ),
                    })
                    .collect();
                format!(
                    "{{\"mode\":\"{}\",\"t\":{},\"s\":{},\"verdict\":{},\"agrees_with_gbent\":{},\"points\":[{}]}}",
                    c.mode,
                    c.t,
                    c.s,
                    c.verdict,
                    c.agrees_with_gbent,
                    points.join(",")
                )
            })
            .collect();
        fields.push(format!("\"characterization\":[{}]", entries.join(",")));
    }
    if let Some(r) = &report.rds {
        let failure = r.bruteforce_failure.map_or_else(
            || "null".to_string(),
            |(x, y)| format!("[{x},{y}]"),
        );
        fields.push(format!(
            "\"rds\":{{\"params\":[{},{},{},{}],\"bruteforce\":{},\"bruteforce_failure\":{},\"characters\":{}}}",
            r.params.0, r.params.1, r.params.2, r.params.3, r.bruteforce, failure, r.characters
        ));
    }
    if let Some(g) = &report.gray_plateaued {
        let order = g.order.map_or_else(|| "null".into(), |o| o.to_string());
        let uniform = g
            .uniform_shift
            .map_or_else(|| "null".into(), |u| u.to_string());
        fields.push(format!(
            "\"gray_plateaued\":{{\"expected_order\":{},\"order\":{},\"uniform_shift\":{},\"verdict\":{}}}",
            g.expected_order, order, uniform, g.verdict
        ));
    }
    format!("{{{}}}\n", fields.join(","))
}

fn emit_plain(report: &Report) -> String {
    let mut out = String::new();
    if let Some(input) = &report.input {
        let _ = writeln!(
            out,
            "input: p={} l={} n={} k={} points={} digest={}",
            input.p, input.l, input.n, input.k, input.points, input.digest
        );
    }
    if let Some(g) = &report.gbent {
        match g.witness {
            Some(w) if !g.verdict => {
                let _ = writeln!(out, "gbent: false (first failure at u index {w})");
            }
            _ => {
                let _ = writeln!(out, "gbent: {}", g.verdict);
            }
        }
    }
    if let Some(r) = &report.regularity {
        let _ = writeln!(out, "regularity: {r}");
    }
    if let Some(d) = &report.dual {
        let values: Vec<String> = d.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "dual: {}", values.join(" "));
    }
    if let Some(s) = &report.sign_pattern {
        let marks: Vec<&str> = s.iter().map(|&v| if v >= 0 { "+" } else { "-" }).collect();
        let _ = writeln!(out, "signs: {}", marks.join(""));
    }
    if let Some(g) = report.gauss_factor {
        let _ = writeln!(out, "gauss-factor: {g}");
    }
    if let Some(z) = &report.zpk_bent {
        let _ = writeln!(
            out,
            "zpk-bent: all-scalars={} prime-powers={}",
            z.all_scalars, z.prime_powers
        );
    }
    for c in &report.characterization {
        let _ = writeln!(
            out,
            "characterization mode {} (t={} s={}): verdict={} agrees-with-gbent={}",
            c.mode, c.t, c.s, c.verdict, c.agrees_with_gbent
        );
    }
    if let Some(r) = &report.rds {
        let _ = writeln!(
            out,
            "rds params: ({}, {}, {}, {})",
            r.params.0, r.params.1, r.params.2, r.params.3
        );
        match r.bruteforce_failure {
            Some((x, y)) if !r.bruteforce => {
                let _ = writeln!(out, "rds bruteforce: false (first failure at ({x}, {y}))");
            }
            _ => {
                let _ = writeln!(out, "rds bruteforce: {}", r.bruteforce);
            }
        }
        let _ = writeln!(out, "rds characters: {}", r.characters);
    }
    if let Some(g) = &report.gray_plateaued {
        match (g.order, g.uniform_shift) {
            (Some(order), Some(uniform)) => {
                let _ = writeln!(
                    out,
                    "gray image: {}-plateaued (uniform-shift={uniform}), expected order {} -> {}",
                    order, g.expected_order, g.verdict
                );
            }
            _ => {
                let _ = writeln!(
                    out,
                    "gray image: not plateaued, expected order {} -> {}",
                    g.expected_order, g.verdict
                );
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn structured_is_deterministic_and_minimal() {
        let f = GbFunc::constant(3, 1, 1, 1, 0).unwrap();
        let report = Report {
            input: Some(InputEcho::of(&f)),
            gbent: Some(GbentField { verdict: false, witness: Some(0) }),
            ..Report::default()
        };
        let a = emit_report(&report, Format::Structured);
        let b = emit_report(&report, Format::Structured);
        assert_eq!(a, b);
        assert!(a.starts_with("{\"input\":{\"p\":3,"));
        assert!(a.contains("\"witness\":0"));
        assert!(!a.contains("regularity"));
    }

    #[test]
    fn digest_distinguishes_tables() {
        let f = GbFunc::constant(3, 1, 1, 1, 0).unwrap();
        let g = GbFunc::constant(3, 1, 1, 1, 1).unwrap();
        assert_ne!(table_digest(&f), table_digest(&g));
        assert_eq!(table_digest(&f), table_digest(&f));
    }

    #[test]
    fn plain_mentions_witness() {
        let report = Report {
            gbent: Some(GbentField { verdict: false, witness: Some(4) }),
            ..Report::default()
        };
        let text = emit_report(&report, Format::Plain);
        assert!(text.contains("u index 4"));
    }
}
