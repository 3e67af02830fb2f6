//! The `selftest` command: the identity suite run end to end with a
//! fixed seed, reporting pass counts per suite. Covers the cyclotomic
//! identities, fast-vs-naive transform agreement, the two
//! `Z_{p^k}`-bentness routes, and the two relative-difference-set routes.

use std::fmt::Write as _;

use gbent_core::analysis::zpk_bent_verdicts;
use gbent_core::constructions::{
    default_balanced_map, gf_make, lift_bent, regular_spread, spread_gbent,
};
use gbent_core::cyclotomic::{
    digit_identity_check, gamma, gamma_inversion_check, gamma_product_form, gauss_sum,
    vectors_over, CycInt, CycloParams,
};
use gbent_core::rds::{graph_of, rds_bruteforce, rds_characters, GroupSpec, SubsetR};
use gbent_core::transform::{inverse_check, wht_fast, wht_naive};
use gbent_core::GbFunc;

/// xorshift64*; deterministic inputs make selftest output reproducible.
struct XorShift(u64);

impl XorShift {
    fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.0 = x;
        x.wrapping_mul(0x2545F4914F6CDD1D)
    }

    fn below(&mut self, bound: u64) -> u64 {
        self.next() % bound
    }
}

fn random_func(rng: &mut XorShift, p: u64, l: u32, n: u32, k: u32) -> GbFunc {
    let modulus = p.pow(k);
    let size = (p.pow(l) as usize).pow(n);
    let table = (0..size).map(|_| rng.below(modulus)).collect();
    GbFunc::new(p, l, n, k, table).unwrap()
}

pub struct SuiteResult {
    pub name: &'static str,
    pub passed: u32,
    pub total: u32,
}

impl SuiteResult {
    pub fn ok(&self) -> bool {
        self.passed == self.total
    }
}

fn suite_cyclotomic() -> SuiteResult {
    let mut passed = 0;
    let mut total = 0;

    for (p, t, k) in [(3u64, 1u32, 2u32), (3, 1, 3), (3, 2, 3), (5, 1, 2)] {
        total += 1;
        let params = CycloParams::new(p, k).unwrap();
        if (0..p.pow(t)).all(|a| digit_identity_check(a, t, params)) {
            passed += 1;
        }
    }
    for (p, t, l, k) in [(3u64, 1u32, 2u32, 2u32), (3, 1, 3, 3), (5, 1, 2, 2)] {
        let params = CycloParams::new(p, k).unwrap();
        total += 1;
        if gamma_inversion_check(params, t, l) {
            passed += 1;
        }
        total += 1;
        if vectors_over((l - 1) as usize, p.pow(t)).into_iter().all(|c| {
            gamma(params, t, &c).unwrap() == gamma_product_form(params, t, &c).unwrap()
        }) {
            passed += 1;
        }
    }
    for p in [3u64, 5, 7] {
        for k in 1..=2 {
            total += 1;
            let params = CycloParams::new(p, k).unwrap();
            let g = gauss_sum(params);
            let sign = if p % 4 == 1 { 1 } else { -1 };
            if g.mul(&g).unwrap() == CycInt::from_i64(params, sign * p as i64) {
                passed += 1;
            }
        }
    }
    SuiteResult { name: "cyclotomic-identities", passed, total }
}

fn suite_transform(rng: &mut XorShift) -> SuiteResult {
    let shapes = [
        (3u64, 1u32, 2u32, 2u32),
        (3, 1, 3, 1),
        (3, 1, 1, 3),
        (3, 2, 1, 2),
        (3, 2, 2, 2),
        (5, 1, 1, 2),
    ];
    let mut passed = 0;
    let mut total = 0;
    for &(p, l, n, k) in &shapes {
        for _ in 0..5 {
            total += 1;
            let f = random_func(rng, p, l, n, k);
            let fast = wht_fast(&f);
            if fast == wht_naive(&f) && fast.parseval_check() && inverse_check(&f, &fast) {
                passed += 1;
            }
        }
    }
    SuiteResult { name: "transform-oracle", passed, total }
}

fn suite_scalar_routes(rng: &mut XorShift) -> SuiteResult {
    let mut passed = 0;
    let mut total = 0;

    let run = |f: &GbFunc, expect: Option<bool>| -> bool {
        let (a, b) = zpk_bent_verdicts(f).unwrap();
        a == b && expect.is_none_or(|want| a == want)
    };

    let field = gf_make(3, 2).unwrap();
    let spread = regular_spread(&field);
    let map = default_balanced_map(3, 2, 2).unwrap();
    let spread_f = spread_gbent(&spread, &map, 2).unwrap();
    total += 1;
    if run(&spread_f, Some(true)) {
        passed += 1;
    }

    let g = GbFunc::from_fn(3, 1, 2, 1, |x| x[0] * x[1] % 3).unwrap();
    let lift = lift_bent(&g, 2).unwrap();
    total += 1;
    if run(&lift, Some(false)) {
        passed += 1;
    }

    for _ in 0..20 {
        total += 1;
        let f = random_func(rng, 3, 1, 2, 2);
        if run(&f, None) {
            passed += 1;
        }
    }
    SuiteResult { name: "scalar-route-agreement", passed, total }
}

fn suite_rds_routes(rng: &mut XorShift) -> SuiteResult {
    let mut passed = 0;
    let mut total = 0;

    let spec = GroupSpec::new(3, 2, 2).unwrap();
    let group_size = spec.group_size() as u64;
    for _ in 0..20 {
        total += 1;
        // sample nine distinct group elements
        let mut picks = Vec::new();
        while picks.len() < 9 {
            let idx = rng.below(group_size) as usize;
            if !picks.contains(&idx) {
                picks.push(idx);
            }
        }
        let elements = picks
            .into_iter()
            .map(|idx| (idx % spec.x_size(), (idx / spec.x_size()) as u64))
            .collect();
        let r = SubsetR::new(&spec, elements).unwrap();
        let brute = rds_bruteforce(&r, &spec, (9, 9, 9, 1)).unwrap();
        if brute.holds == rds_characters(&r, &spec).unwrap() {
            passed += 1;
        }
    }

    // constructed graphs: one true case, one false case
    let field = gf_make(3, 2).unwrap();
    let spread = regular_spread(&field);
    let map = default_balanced_map(3, 2, 2).unwrap();
    let spread_f = spread_gbent(&spread, &map, 2).unwrap();
    let spec42 = GroupSpec::new(3, 4, 2).unwrap();
    let graph = graph_of(&spread_f, &spec42).unwrap();
    total += 1;
    let brute = rds_bruteforce(&graph, &spec42, (81, 9, 81, 9)).unwrap();
    if brute.holds && rds_characters(&graph, &spec42).unwrap() {
        passed += 1;
    }

    let g = GbFunc::from_fn(3, 1, 2, 1, |x| x[0] * x[1] % 3).unwrap();
    let lift = lift_bent(&g, 2).unwrap();
    let graph = graph_of(&lift, &spec).unwrap();
    total += 1;
    let brute = rds_bruteforce(&graph, &spec, (9, 9, 9, 1)).unwrap();
    if !brute.holds && !rds_characters(&graph, &spec).unwrap() {
        passed += 1;
    }

    SuiteResult { name: "rds-route-agreement", passed, total }
}

pub fn run_selftest() -> (String, bool) {
    let mut rng = XorShift(0x9E3779B97F4A7C15);
    let suites = vec![
        suite_cyclotomic(),
        suite_transform(&mut rng),
        suite_scalar_routes(&mut rng),
        suite_rds_routes(&mut rng),
    ];
    let mut out = String::new();
    let mut all_ok = true;
    for s in &suites {
        let status = if s.ok() { "ok" } else { "FAILED" };
        let _ = writeln!(out, "suite {}: {}/{} {}", s.name, s.passed, s.total, status);
        all_ok &= s.ok();
    }
    let _ = writeln!(out, "selftest: {}", if all_ok { "all suites passed" } else { "FAILURES" });
    (out, all_ok)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn selftest_passes_and_is_deterministic() {
        let (a, ok) = run_selftest();
        assert!(ok, "selftest failed:\n{a}");
        let (b, _) = run_selftest();
        assert_eq!(a, b);
    }
}
