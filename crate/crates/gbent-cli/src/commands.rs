//! One function per CLI subcommand. Each returns the text to print and
//! whether the run counts as verified (exit 0) or failed (exit 1);
//! anything unusable about the input surfaces as [`CliError`] (exit 2).

use std::fmt;

use gbent_core::analysis::{
    characterization_check, classify_spectrum, is_gbent_spectrum, plateaued_order,
    zpk_bent_verdicts, AnalysisError, Mode,
};
use gbent_core::constructions::{
    default_balanced_map, gf_make, lift_bent, quadratic_gbent_lk, regular_spread, spread_gbent,
};
use gbent_core::rds::{graph_of, rds_bruteforce, rds_characters, GroupSpec};
use gbent_core::transform::wht_fast;
use gbent_core::GbFunc;

use crate::report::{
    emit_report, CharField, Format, GbentField, GrayField, InputEcho, RdsField, Report, ZpkField,
};
use crate::table::emit_table;

/// Input or usage problem; maps to exit status 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError(pub String);

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for CliError {}

fn input_err(msg: impl Into<String>) -> CliError {
    CliError(msg.into())
}

/// What a command run produced: the report text and the verification
/// verdict that decides the exit status.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub stdout: String,
    pub verified: bool,
}

/// `analyze`: gbent verdict, and for gbent inputs the regularity class,
/// dual table, and sign pattern. Verified means gbent.
pub fn analyze(f: &GbFunc, format: Format) -> Result<Outcome, CliError> {
    let spectrum = wht_fast(f);
    let check = is_gbent_spectrum(&spectrum);
    let mut report = Report {
        input: Some(InputEcho::of(f)),
        gbent: Some(GbentField { verdict: check.gbent, witness: check.witness }),
        ..Report::default()
    };
    if check.gbent {
        let (class, cert) = classify_spectrum(f, &spectrum)
            .map_err(|e| input_err(format!("cannot classify this spectrum: {e}")))?;
        report.regularity = Some(class.to_string());
        report.dual = Some(cert.dual.table().to_vec());
        report.sign_pattern = Some(cert.signs.clone());
        report.gauss_factor = Some(cert.gauss_flag);
    }
    Ok(Outcome { stdout: emit_report(&report, format), verified: check.gbent })
}

/// `zpkbent`: both the all-scalars and the prime-power-ladder routes.
/// Verified means both say yes (they agree on every input).
pub fn zpkbent(f: &GbFunc, format: Format) -> Result<Outcome, CliError> {
    let check = is_gbent_spectrum(&wht_fast(f));
    let (all_scalars, prime_powers) =
        zpk_bent_verdicts(f).map_err(|e| input_err(e.to_string()))?;
    let report = Report {
        input: Some(InputEcho::of(f)),
        gbent: Some(GbentField { verdict: check.gbent, witness: check.witness }),
        zpk_bent: Some(ZpkField { all_scalars, prime_powers }),
        ..Report::default()
    };
    Ok(Outcome {
        stdout: emit_report(&report, format),
        verified: all_scalars && prime_powers,
    })
}

/// `characterize`: one component characterization at the given mode and
/// parameters. Verified means the characterization verdict agrees with
/// the direct gbent test, which is the equivalence the mode asserts.
pub fn characterize(
    f: &GbFunc,
    mode: Mode,
    t: u32,
    s: u32,
    format: Format,
) -> Result<Outcome, CliError> {
    let check = is_gbent_spectrum(&wht_fast(f));
    let (verdict, certificate) = characterization_check(f, mode, t, s).map_err(|e| match e {
        AnalysisError::BadMode(_) => input_err(e.to_string()),
        other => input_err(other.to_string()),
    })?;
    let agrees = verdict == check.gbent;
    let report = Report {
        input: Some(InputEcho::of(f)),
        gbent: Some(GbentField { verdict: check.gbent, witness: check.witness }),
        characterization: vec![CharField {
            mode: mode.to_string(),
            t,
            s,
            verdict,
            agrees_with_gbent: agrees,
            certificate,
        }],
        ..Report::default()
    };
    Ok(Outcome { stdout: emit_report(&report, format), verified: agrees })
}

/// `rds`: both relative-difference-set checks on the graph of `f` with
/// the graph parameters `(p^n, p^k, p^n, p^{n−k})`. Verified means both
/// hold.
pub fn rds(f: &GbFunc, format: Format) -> Result<Outcome, CliError> {
    if f.l() != 1 {
        return Err(input_err("rds requires a function on Z_p^n (l = 1)"));
    }
    if f.n() < f.k() {
        return Err(input_err(format!(
            "rds graph parameters need n >= k for an integral count, got n = {} < k = {}",
            f.n(),
            f.k()
        )));
    }
    let p = f.p();
    let params = (p.pow(f.n()), p.pow(f.k()), p.pow(f.n()), p.pow(f.n() - f.k()));
    let spec = GroupSpec::new(p, f.n(), f.k()).map_err(|e| input_err(e.to_string()))?;
    let graph = graph_of(f, &spec).map_err(|e| input_err(e.to_string()))?;
    let brute = rds_bruteforce(&graph, &spec, params).map_err(|e| input_err(e.to_string()))?;
    let chars = rds_characters(&graph, &spec).map_err(|e| input_err(e.to_string()))?;
    let report = Report {
        input: Some(InputEcho::of(f)),
        rds: Some(RdsField {
            params,
            bruteforce: brute.holds,
            bruteforce_failure: brute.failure,
            characters: chars,
        }),
        ..Report::default()
    };
    Ok(Outcome {
        stdout: emit_report(&report, format),
        verified: brute.holds && chars,
    })
}

/// `gray`: plateaued order of the generalized Gray image. Verified means
/// the order is exactly `k − 1`.
pub fn gray(f: &GbFunc, format: Format) -> Result<Outcome, CliError> {
    if f.l() != 1 {
        return Err(input_err("gray requires a function on Z_p^n (l = 1)"));
    }
    let check = is_gbent_spectrum(&wht_fast(f));
    let image = f.gray_image().map_err(|e| input_err(e.to_string()))?;
    let plateaued = plateaued_order(&image).map_err(|e| input_err(e.to_string()))?;
    let expected = f.k() - 1;
    let verdict = plateaued.is_some_and(|p| p.order == expected);
    let report = Report {
        input: Some(InputEcho::of(f)),
        gbent: Some(GbentField { verdict: check.gbent, witness: check.witness }),
        gray_plateaued: Some(GrayField {
            expected_order: expected,
            order: plateaued.map(|p| p.order),
            uniform_shift: plateaued.map(|p| p.uniform_shift),
            verdict,
        }),
        ..Report::default()
    };
    Ok(Outcome { stdout: emit_report(&report, format), verified: verdict })
}

/// `construct --spread p m k`: the spread function on `Z_p^{2m}` with the
/// default balanced map, as a table file.
pub fn construct_spread(p: u64, m: u32, k: u32) -> Result<String, CliError> {
    let field = gf_make(p, m).map_err(|e| input_err(e.to_string()))?;
    let spread = regular_spread(&field);
    let map = default_balanced_map(p, m, k).map_err(|e| input_err(e.to_string()))?;
    let f = spread_gbent(&spread, &map, k).map_err(|e| input_err(e.to_string()))?;
    Ok(emit_table(&f))
}

/// `construct --lift k`: lifts a p-ary table to `Z_{p^k}` by `p^{k−1}·g`.
pub fn construct_lift(g: &GbFunc, k: u32) -> Result<String, CliError> {
    let f = lift_bent(g, k).map_err(|e| input_err(e.to_string()))?;
    Ok(emit_table(&f))
}

/// `construct --quad p l k n`: the quadratic witness
/// `p^{k−l}·Σ x_i² mod p^k` on `Z_{p^l}^n`.
pub fn construct_quad(p: u64, l: u32, k: u32, n: u32) -> Result<String, CliError> {
    let f = quadratic_gbent_lk(p, l, k, n).map_err(|e| input_err(e.to_string()))?;
    Ok(emit_table(&f))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lift_of_product() -> GbFunc {
        let g = GbFunc::from_fn(3, 1, 2, 1, |x| x[0] * x[1] % 3).unwrap();
        lift_bent(&g, 2).unwrap()
    }

    #[test]
    fn analyze_gbent_input() {
        let out = analyze(&lift_of_product(), Format::Plain).unwrap();
        assert!(out.verified);
        assert!(out.stdout.contains("gbent: true"));
        assert!(out.stdout.contains("regularity: regular"));
    }

    #[test]
    fn analyze_zero_input() {
        let f = GbFunc::constant(3, 1, 2, 2, 0).unwrap();
        let out = analyze(&f, Format::Plain).unwrap();
        assert!(!out.verified);
        assert!(out.stdout.contains("gbent: false"));
        assert!(!out.stdout.contains("regularity"));
    }

    #[test]
    fn zpkbent_rejects_lift() {
        let out = zpkbent(&lift_of_product(), Format::Plain).unwrap();
        assert!(!out.verified);
        assert!(out.stdout.contains("all-scalars=false"));
        assert!(out.stdout.contains("prime-powers=false"));
    }

    #[test]
    fn characterize_agreement_is_the_verdict() {
        // the zero function is not gbent and the characterization agrees,
        // so the equivalence is verified
        let f = GbFunc::constant(3, 1, 2, 2, 0).unwrap();
        let out = characterize(&f, Mode::C, 1, 1, Format::Plain).unwrap();
        assert!(out.verified);
        assert!(out.stdout.contains("verdict=false agrees-with-gbent=true"));
    }

    #[test]
    fn characterize_bad_params_is_input_error() {
        let f = GbFunc::constant(3, 1, 2, 2, 0).unwrap();
        assert!(characterize(&f, Mode::C, 3, 1, Format::Plain).is_err());
    }

    #[test]
    fn rds_lift_fails_both() {
        let out = rds(&lift_of_product(), Format::Plain).unwrap();
        assert!(!out.verified);
        assert!(out.stdout.contains("rds bruteforce: false"));
        assert!(out.stdout.contains("rds characters: false"));
    }

    #[test]
    fn rds_needs_integral_count() {
        let f = GbFunc::constant(3, 1, 1, 2, 0).unwrap();
        assert!(rds(&f, Format::Plain).is_err());
    }

    #[test]
    fn gray_on_lift() {
        let out = gray(&lift_of_product(), Format::Plain).unwrap();
        assert!(out.verified);
        assert!(out.stdout.contains("1-plateaued"));
    }

    #[test]
    fn construct_quad_roundtrip() {
        let text = construct_quad(3, 2, 3, 1).unwrap();
        let f = crate::table::parse_table(&text).unwrap();
        assert_eq!((f.p(), f.l(), f.n(), f.k()), (3, 2, 1, 3));
    }
}
