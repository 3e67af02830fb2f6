//! Cross-module invariants on a sweep of gbent witnesses: classification
//! never fails on a gbent input, the digit-wise dual reconstruction and
//! the Gray-image plateaued shape hold for every one, and the scalar
//! routes agree. Exercises both the even-domain and the odd-domain
//! (Gauss-factor) branches.

use gbent_core::analysis::{
    classify_and_dual, is_gbent, verify_dual_formula, verify_gray_plateaued, zpk_bent_verdicts,
    RegularityClass,
};
use gbent_core::constructions::{
    default_balanced_map, gf_make, lift_bent, quadratic_gbent_lk, regular_spread, spread_gbent,
};
use gbent_core::cyclotomic::vectors_over;
use gbent_core::func::GbFunc;

/// All gbent lifts `p^{k−1}·g` over every p-ary g on one variable
/// (odd domain, so the spectra carry the Gauss factor), plus standard
/// two-variable witnesses.
fn gbent_witnesses() -> Vec<(String, GbFunc)> {
    let mut out = Vec::new();

    for table in vectors_over(3, 3) {
        let g = GbFunc::new(3, 1, 1, 1, table.clone()).unwrap();
        for k in [2u32, 3] {
            let f = lift_bent(&g, k).unwrap();
            if is_gbent(&f).gbent {
                out.push((format!("lift k={k} of 1-var table {table:?}"), f));
            }
        }
    }

    let product = GbFunc::from_fn(3, 1, 2, 1, |x| x[0] * x[1] % 3).unwrap();
    for k in [1u32, 2, 3] {
        out.push((format!("lift k={k} of x1*x2"), lift_bent(&product, k).unwrap()));
    }

    let field = gf_make(3, 2).unwrap();
    let spread = regular_spread(&field);
    for k in [1u32, 2] {
        let map = default_balanced_map(3, 2, k).unwrap();
        out.push((format!("spread m=2 k={k}"), spread_gbent(&spread, &map, k).unwrap()));
    }

    out.push(("quad l=1".into(), quadratic_gbent_lk(3, 1, 2, 2).unwrap()));
    out
}

#[test]
fn dual_and_gray_hold_on_every_witness() {
    let witnesses = gbent_witnesses();
    // the one-variable sweep must contribute both quadratic lifts
    assert!(witnesses.len() > 10, "witness sweep unexpectedly small");
    for (name, f) in &witnesses {
        assert!(is_gbent(f).gbent, "{name} is not gbent");
        let (_, cert) = classify_and_dual(f).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(cert.gauss_flag, (f.l() * f.n()) % 2 == 1, "{name}");
        assert!(verify_dual_formula(f).unwrap(), "{name}: dual reconstruction failed");
        assert!(verify_gray_plateaued(f).unwrap(), "{name}: Gray image shape failed");
    }
}

#[test]
fn spread_spectrum_at_zero_is_plus_p_half_n() {
    // at u = 0 the spread function's Walsh sum is +p^{n/2}·ζ^0
    let field = gf_make(3, 2).unwrap();
    let spread = regular_spread(&field);
    let map = default_balanced_map(3, 2, 2).unwrap();
    let f = spread_gbent(&spread, &map, 2).unwrap();
    let (class, cert) = classify_and_dual(&f).unwrap();
    assert_eq!(cert.dual.value(0), 0);
    assert_eq!(cert.signs[0], 1);
    assert_eq!(class, RegularityClass::Regular);
}

#[test]
fn wide_domain_witness_classifies() {
    // the l = 2 quadratic witness also has the rigid ±p^{ln/2}·root shape
    let f = quadratic_gbent_lk(3, 2, 3, 1).unwrap();
    let (_, cert) = classify_and_dual(&f).unwrap();
    assert!(!cert.gauss_flag);
    // dual values are multiples of p^{k-l} = 3, living in the ζ_9 subring
    assert!(cert.dual.table().iter().all(|v| v % 3 == 0));
}

#[test]
fn scalar_routes_agree_on_witnesses() {
    for (name, f) in gbent_witnesses() {
        if f.l() != 1 {
            continue;
        }
        let (by_def, by_ladder) = zpk_bent_verdicts(&f).unwrap();
        assert_eq!(by_def, by_ladder, "{name}: scalar routes disagree");
    }
}
