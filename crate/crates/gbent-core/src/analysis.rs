//! Decision procedures over exact Walsh spectra: the gbent test,
//! regularity classification and dual extraction, component-function
//! characterizations, `Z_{p^k}`-bentness, plateaued order, Gray-image
//! verification, and vectorial bentness.
//!
//! Everything here works on unnormalized sums, so every verdict is an
//! exact integer identity. A gbent function has `|S_f(u)|² = p^{ln}` for
//! all `u`; its spectrum values then take the rigid shape
//! `ε(u)·p^{⌊ln/2⌋}·g_p^{[ln odd]}·ζ^{f*(u)}` with `ε(u) ∈ {±1}`, which
//! is what [`classify_and_dual`] recovers. The quadratic Gauss sum `g_p`
//! stands in for `√p` (and for `√−1·√p` when `p ≡ 3 mod 4`), so no field
//! extension beyond `Q(ζ_{p^k})` is ever needed.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::cyclotomic::{unit_match, vectors_over, CycloParams, Sign};
use crate::func::{linear_combination, ComponentForm, FuncError, GbFunc};
use crate::transform::{wht_fast, Spectrum};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnalysisError {
    /// Operation requires a gbent input; carries the first failing u.
    NotGbent { witness: usize },
    /// A gbent spectrum value failed to match its normal form. This
    /// cannot happen for a correct implementation, so it is surfaced
    /// loudly instead of being folded into a verdict.
    NormalFormFailed { u: usize },
    /// Operation is only defined for domain radix exponent l = 1.
    DomainNotPrime,
    /// Operation is only defined for p-ary functions (k = 1).
    CodomainNotPrime,
    /// Mode parameters violate the mode's constraints.
    BadMode(&'static str),
    /// Input functions have inconsistent shapes.
    ShapeMismatch(&'static str),
    Func(FuncError),
}

impl fmt::Display for AnalysisError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnalysisError::NotGbent { witness } => {
                write!(f, "function is not gbent (first failure at u index {witness})")
            }
            AnalysisError::NormalFormFailed { u } => {
                write!(f, "spectrum value at u index {u} has no ±p^e·g^?·root shape; this indicates a bug")
            }
            AnalysisError::DomainNotPrime => write!(f, "operation requires domain radix exponent l = 1"),
            AnalysisError::CodomainNotPrime => write!(f, "operation requires a p-ary function (k = 1)"),
            AnalysisError::BadMode(what) => write!(f, "bad characterization parameters: {what}"),
            AnalysisError::ShapeMismatch(what) => write!(f, "shape mismatch: {what}"),
            AnalysisError::Func(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for AnalysisError {}

impl From<FuncError> for AnalysisError {
    fn from(e: FuncError) -> Self {
        AnalysisError::Func(e)
    }
}

/// Outcome of the gbent test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GbentCheck {
    pub gbent: bool,
    /// First u index with `|S_f(u)|² ≠ p^{ln}` when not gbent.
    pub witness: Option<usize>,
}

/// Tests `|S_f(u)|² = p^{ln}` for every `u`, on an already computed
/// spectrum.
pub fn is_gbent_spectrum(spectrum: &Spectrum) -> GbentCheck {
    let params = spectrum.params();
    let target = crate::cyclotomic::CycInt::from_bigint(
        params,
        BigInt::from(spectrum.p()).pow(spectrum.norm_exp()),
    );
    for (u, s) in spectrum.table().iter().enumerate() {
        if s.norm_sq() != target {
            return GbentCheck { gbent: false, witness: Some(u) };
        }
    }
    GbentCheck { gbent: true, witness: None }
}

/// Tests whether `f` is gbent: every generalized Walsh–Hadamard
/// coefficient has absolute value one.
pub fn is_gbent(f: &GbFunc) -> GbentCheck {
    is_gbent_spectrum(&wht_fast(f))
}

/// How a gbent function's spectrum signs behave across `u`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegularityClass {
    /// `H_f(u) = ζ^{f*(u)}` for every u.
    Regular,
    /// `H_f(u) = α·ζ^{f*(u)}` with one fixed unit `α`; the stored sign is
    /// `ε` relative to `+g_p` in the odd-`ln` case, the literal `±1`
    /// otherwise.
    WeaklyRegular(Sign),
    /// The sign `ε(u)` varies with `u`.
    NonWeaklyRegular,
}

impl fmt::Display for RegularityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RegularityClass::Regular => write!(f, "regular"),
            RegularityClass::WeaklyRegular(1) => write!(f, "weakly-regular(+1)"),
            RegularityClass::WeaklyRegular(_) => write!(f, "weakly-regular(-1)"),
            RegularityClass::NonWeaklyRegular => write!(f, "non-weakly-regular"),
        }
    }
}

/// The dual table together with everything needed to reconstruct the
/// spectrum: `S_f(u) = ε(u)·p^{⌊ln/2⌋}·g_p^{[gauss]}·ζ^{f*(u)}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualCertificate {
    pub dual: GbFunc,
    pub signs: Vec<Sign>,
    /// Set exactly when `l·n` is odd, i.e. when the `g_p` factor is
    /// present.
    pub gauss_flag: bool,
}

/// Extracts the dual and classifies regularity of a gbent function.
///
/// Errors with [`AnalysisError::NotGbent`] on non-gbent input and with
/// [`AnalysisError::NormalFormFailed`] if any value evades the normal
/// form, which a gbent spectrum cannot do.
pub fn classify_and_dual(f: &GbFunc) -> Result<(RegularityClass, DualCertificate), AnalysisError> {
    classify_spectrum(f, &wht_fast(f))
}

/// Same as [`classify_and_dual`] but reuses an already computed spectrum.
pub fn classify_spectrum(
    f: &GbFunc,
    spectrum: &Spectrum,
) -> Result<(RegularityClass, DualCertificate), AnalysisError> {
    let check = is_gbent_spectrum(spectrum);
    if !check.gbent {
        return Err(AnalysisError::NotGbent { witness: check.witness.unwrap_or(0) });
    }
    let params = spectrum.params();
    let scale_exp = spectrum.norm_exp() / 2;
    let gauss_flag = spectrum.norm_exp() % 2 == 1;

    let mut dual_table = Vec::with_capacity(spectrum.table().len());
    let mut signs = Vec::with_capacity(spectrum.table().len());
    for (u, s) in spectrum.table().iter().enumerate() {
        let (sign, e) = unit_match(s, scale_exp, gauss_flag, params)
            .ok_or(AnalysisError::NormalFormFailed { u })?;
        dual_table.push(e);
        signs.push(sign);
    }
    let dual = GbFunc::new(f.p(), f.l(), f.n(), f.k(), dual_table)?;

    let all_plus = signs.iter().all(|&s| s == 1);
    let constant = signs.iter().all(|&s| s == signs[0]);
    let no_sqrt_minus_one = !gauss_flag || f.p() % 4 == 1;
    let class = if all_plus && no_sqrt_minus_one {
        RegularityClass::Regular
    } else if constant {
        RegularityClass::WeaklyRegular(signs[0])
    } else {
        RegularityClass::NonWeaklyRegular
    };
    Ok((class, DualCertificate { dual, signs, gauss_flag }))
}

/// Checks the digit-wise dual reconstruction for a gbent `f` on `Z_p^n`:
/// with base-p digits `f = Σ p^i·a_i`, the dual must satisfy
/// `f* = Σ p^i·b_i` where `b_{k−1} = a*_{k−1}` and
/// `b_j = (a_{k−1} + a_j)* − a*_{k−1}`.
pub fn verify_dual_formula(f: &GbFunc) -> Result<bool, AnalysisError> {
    if f.l() != 1 {
        return Err(AnalysisError::DomainNotPrime);
    }
    let (_, cert) = classify_and_dual(f)?;
    let p = f.p();
    let k = f.k();
    let digits = f.digit_decompose(1)?;
    let top = &digits.blocks()[(k - 1) as usize];
    let (_, top_cert) = classify_and_dual(top)?;
    let top_dual = top_cert.dual;

    let size = f.domain_size();
    let mut assembled = vec![0u64; size];
    for j in 0..(k - 1) as usize {
        let combined = linear_combination(&[top, &digits.blocks()[j]], &[1, 1])?;
        let (_, j_cert) = classify_and_dual(&combined)?;
        let place = p.pow(j as u32);
        for (slot, (cj, ct)) in assembled
            .iter_mut()
            .zip(j_cert.dual.table().iter().zip(top_dual.table()))
        {
            let b = (cj + p - ct) % p;
            *slot += place * b;
        }
    }
    let place = p.pow(k - 1);
    for (slot, &bt) in assembled.iter_mut().zip(top_dual.table()) {
        *slot += place * bt;
    }
    Ok(assembled == cert.dual.table())
}

/// Which component-function characterization to run.
///
/// * `A`: pair split `h + c·p^{k−2t}·g` over `c ∈ Z_{p^t}`; needs `k ≥ 2t`.
/// * `B`: nested form over `c ∈ Z_{p^t}^{s−1}`; needs `s·t ≤ k`.
/// * `C`: block mix `b_{k/t} + Σ c_j·b_j` over `c ∈ Z_{p^t}^{k/t−1}`;
///   needs `t | k`.
/// * `D`: base-p digit mix for domains `Z_{p^l}^n` with `l < k`, over
///   `c ∈ Z_p^{k−l}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    A,
    B,
    C,
    D,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::A => write!(f, "A"),
            Mode::B => write!(f, "B"),
            Mode::C => write!(f, "C"),
            Mode::D => write!(f, "D"),
        }
    }
}

/// Per-`u` witness data: the shared root exponent `j`, the shared vector
/// `d`, and one sign per component `c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointCertificate {
    pub j: u64,
    pub d: Vec<u64>,
    pub signs: Vec<Sign>,
}

/// Witness of a component-function characterization run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterizationCertificate {
    pub mode: Mode,
    pub t: u32,
    pub s: u32,
    /// The component coefficient vectors, in enumeration order.
    pub c_vectors: Vec<Vec<u64>>,
    /// One entry per `u`; `None` where no `(j, d)` exists, in which case
    /// the overall verdict is false.
    pub points: Vec<Option<PointCertificate>>,
}

struct ModeLayout {
    /// Component codomain exponent `k'`.
    out_k: u32,
    /// Exponent radix of the dot product, `p^{ct}`.
    dot_radix: u64,
    /// Embedding factor `p^{k'−ct}` placing `ζ_{p^{ct}}^{c·d}` inside
    /// `Z_{p^{k'}}`.
    embed: u64,
    arity: usize,
    forms: Vec<ComponentForm>,
    c_vectors: Vec<Vec<u64>>,
}

fn mode_layout(f: &GbFunc, mode: Mode, t: u32, s: u32) -> Result<ModeLayout, AnalysisError> {
    let p = f.p();
    let k = f.k();
    let l = f.l();
    match mode {
        Mode::A => {
            if t == 0 || k < 2 * t {
                return Err(AnalysisError::BadMode("mode A requires 1 <= t and k >= 2t"));
            }
            let out_k = k - t;
            if out_k < l {
                return Err(AnalysisError::BadMode("mode A component codomain below domain radix"));
            }
            let dot_radix = p.pow(t);
            let c_vectors = vectors_over(1, dot_radix);
            let forms = c_vectors
                .iter()
                .map(|c| ComponentForm::PairSplit { t, c: c[0] })
                .collect();
            Ok(ModeLayout { out_k, dot_radix, embed: p.pow(out_k - t), arity: 1, forms, c_vectors })
        }
        Mode::B => {
            if t == 0 || s == 0 || s.checked_mul(t).is_none_or(|st| st > k) {
                return Err(AnalysisError::BadMode("mode B requires 1 <= s, 1 <= t, s*t <= k"));
            }
            let out_k = k - (s - 1) * t;
            if out_k < l {
                return Err(AnalysisError::BadMode("mode B component codomain below domain radix"));
            }
            let dot_radix = p.pow(t);
            let arity = (s - 1) as usize;
            let c_vectors = vectors_over(arity, dot_radix);
            let forms = c_vectors
                .iter()
                .map(|c| ComponentForm::Nested { t, s, c: c.clone() })
                .collect();
            Ok(ModeLayout { out_k, dot_radix, embed: p.pow(out_k - t), arity, forms, c_vectors })
        }
        Mode::C => {
            if t == 0 || !k.is_multiple_of(t) {
                return Err(AnalysisError::BadMode("mode C requires t dividing k"));
            }
            if t < l {
                return Err(AnalysisError::BadMode("mode C component codomain below domain radix"));
            }
            let blocks = k / t;
            let dot_radix = p.pow(t);
            let arity = (blocks - 1) as usize;
            let c_vectors = vectors_over(arity, dot_radix);
            let forms = c_vectors
                .iter()
                .map(|c| ComponentForm::BlockMix { t, c: c.clone() })
                .collect();
            Ok(ModeLayout { out_k: t, dot_radix, embed: 1, arity, forms, c_vectors })
        }
        Mode::D => {
            if l >= k {
                return Err(AnalysisError::BadMode("mode D requires l < k"));
            }
            let arity = (k - l) as usize;
            let c_vectors = vectors_over(arity, p);
            let forms = c_vectors
                .iter()
                .map(|c| ComponentForm::DigitMix { c: c.clone() })
                .collect();
            Ok(ModeLayout { out_k: l, dot_radix: p, embed: p.pow(l - 1), arity, forms, c_vectors })
        }
    }
}

/// Runs one component-function characterization: for every `u`, tries to
/// find shared `(j, d)` such that each component spectrum value matches
/// `±p^{⌊ln/2⌋}·g_p^{[ln odd]}·ζ_{p^{k'}}^{j}·ζ_{p^{ct}}^{c·d}`.
///
/// The verdict equals the gbent-ness of `f`; both directions follow from
/// the uniqueness of the `±·g_p·root` normal form, so the search from
/// `c = 0` and the unit vectors is complete. `t` is ignored by mode D and
/// `s` by all modes but B.
pub fn characterization_check(
    f: &GbFunc,
    mode: Mode,
    t: u32,
    s: u32,
) -> Result<(bool, CharacterizationCertificate), AnalysisError> {
    let layout = mode_layout(f, mode, t, s)?;
    let ring = CycloParams::new(f.p(), layout.out_k).expect("component ring parameters are valid");
    let norm_exp = f.l() * f.n();
    let scale_exp = norm_exp / 2;
    let gauss = norm_exp % 2 == 1;
    let out_mod = ring.modulus();

    let spectra: Vec<Spectrum> = layout
        .forms
        .iter()
        .map(|form| Ok(wht_fast(&f.component(form)?)))
        .collect::<Result<_, AnalysisError>>()?;

    let size = f.domain_size();
    let mut points = Vec::with_capacity(size);
    let mut all_matched = true;
    'per_u: for u in 0..size {
        let mut matches = Vec::with_capacity(spectra.len());
        for spec in &spectra {
            match unit_match(spec.value(u), scale_exp, gauss, ring) {
                Some(m) => matches.push(m),
                None => {
                    all_matched = false;
                    points.push(None);
                    continue 'per_u;
                }
            }
        }
        // c = 0 comes first in enumeration order and pins j.
        let j = matches[0].1;
        // The unit vector e_i sits at index dot_radix^i and pins d_i.
        let mut d = Vec::with_capacity(layout.arity);
        for i in 0..layout.arity {
            let idx = (layout.dot_radix as usize).pow(i as u32);
            let delta = (matches[idx].1 + out_mod - j) % out_mod;
            if !delta.is_multiple_of(layout.embed) {
                all_matched = false;
                points.push(None);
                continue 'per_u;
            }
            d.push(delta / layout.embed);
        }
        // Every remaining c must be consistent with the shared (j, d).
        for (c, m) in layout.c_vectors.iter().zip(&matches) {
            let dot = c
                .iter()
                .zip(&d)
                .fold(0u64, |acc, (&ci, &di)| (acc + ci * di) % layout.dot_radix);
            if m.1 != (j + dot * layout.embed) % out_mod {
                all_matched = false;
                points.push(None);
                continue 'per_u;
            }
        }
        points.push(Some(PointCertificate {
            j,
            d,
            signs: matches.iter().map(|m| m.0).collect(),
        }));
    }
    let cert = CharacterizationCertificate {
        mode,
        t,
        s,
        c_vectors: layout.c_vectors,
        points,
    };
    Ok((all_matched, cert))
}

/// `Z_{p^k}`-bentness by the definition: `a·f` is gbent for every nonzero
/// scalar `a ∈ Z_{p^k}`. Requires `l = 1`.
pub fn is_zpk_bent_all_scalars(f: &GbFunc) -> Result<bool, AnalysisError> {
    if f.l() != 1 {
        return Err(AnalysisError::DomainNotPrime);
    }
    for a in 1..f.codomain_modulus() {
        if !is_gbent(&f.scale(a)).gbent {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `Z_{p^k}`-bentness through the prime-power ladder: it suffices that
/// `p^t·f` is gbent for `t = 0, …, k−1`, because the remaining scalars
/// are Galois conjugates of these. Requires `l = 1`.
pub fn is_zpk_bent_prime_powers(f: &GbFunc) -> Result<bool, AnalysisError> {
    if f.l() != 1 {
        return Err(AnalysisError::DomainNotPrime);
    }
    for t in 0..f.k() {
        if !is_gbent(&f.scale(f.p().pow(t))).gbent {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Both `Z_{p^k}`-bent checks; they agree on every input.
pub fn zpk_bent_verdicts(f: &GbFunc) -> Result<(bool, bool), AnalysisError> {
    Ok((is_zpk_bent_all_scalars(f)?, is_zpk_bent_prime_powers(f)?))
}

/// Plateaued verdict for a p-ary function.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Plateaued {
    /// The order `s`: nonzero Walsh values have `|W(u)|² = p^{n+s}`.
    pub order: u32,
    /// Whether the per-`u` root exponent `a(u)` is one constant across
    /// all nonzero values.
    pub uniform_shift: bool,
}

/// Finds the plateaued order of a p-ary function, if any: every
/// unnormalized Walsh value must be zero or of the exact shape
/// `±p^{⌊(n+s)/2⌋}·g_p^{[(n+s) odd]}·ζ_p^{a(u)}`. The shift `a(u)` is
/// allowed to vary with `u`; uniformity is reported separately.
pub fn plateaued_order(g: &GbFunc) -> Result<Option<Plateaued>, AnalysisError> {
    if g.k() != 1 {
        return Err(AnalysisError::CodomainNotPrime);
    }
    if g.l() != 1 {
        return Err(AnalysisError::DomainNotPrime);
    }
    let spectrum = wht_fast(g);
    let params = spectrum.params();
    let p = g.p();
    let n = g.n();

    // The order is fixed by the common norm of the nonzero values.
    let mut norm: Option<BigInt> = None;
    for s in spectrum.table() {
        if s.is_zero() {
            continue;
        }
        let nsq = s.norm_sq();
        let Some(r) = nsq.as_rational_int() else { return Ok(None) };
        match &norm {
            None => norm = Some(r.clone()),
            Some(prev) if prev == r => {}
            Some(_) => return Ok(None),
        }
    }
    let Some(norm) = norm else { return Ok(None) };
    let mut power = 0u32;
    let mut rest = norm;
    let big_p = BigInt::from(p);
    let one = BigInt::from(1);
    while rest > one && (&rest % &big_p).is_zero() {
        rest /= &big_p;
        power += 1;
    }
    if rest != one || power < n {
        return Ok(None);
    }
    let order = power - n;

    let scale_exp = (n + order) / 2;
    let gauss = (n + order) % 2 == 1;
    let mut shift: Option<u64> = None;
    let mut uniform = true;
    for s in spectrum.table() {
        if s.is_zero() {
            continue;
        }
        let Some((_, a)) = unit_match(s, scale_exp, gauss, params) else {
            return Ok(None);
        };
        match shift {
            None => shift = Some(a),
            Some(prev) if prev == a => {}
            Some(_) => uniform = false,
        }
    }
    Ok(Some(Plateaued { order, uniform_shift: uniform }))
}

/// Verifies that the Gray image of `f` is `(k−1)`-plateaued, the exact
/// spectral shape the image of a gbent function must have.
pub fn verify_gray_plateaued(f: &GbFunc) -> Result<bool, AnalysisError> {
    let gray = f.gray_image()?;
    Ok(plateaued_order(&gray)?.is_some_and(|p| p.order == f.k() - 1))
}

/// Tests whether the span of the given p-ary functions consists of bent
/// functions: every nonzero `Z_p`-combination must be bent.
pub fn is_vectorial_bent(components: &[&GbFunc]) -> Result<bool, AnalysisError> {
    if components.is_empty() {
        return Err(AnalysisError::ShapeMismatch("empty component list"));
    }
    if components.iter().any(|g| g.k() != 1) {
        return Err(AnalysisError::CodomainNotPrime);
    }
    let p = components[0].p();
    for coeffs in vectors_over(components.len(), p) {
        if coeffs.iter().all(|&c| c == 0) {
            continue;
        }
        let combo = linear_combination(components, &coeffs)?;
        if !is_gbent(&combo).gbent {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bent_product(p: u64, n: u32) -> GbFunc {
        // x_1·x_2 + x_3·x_4 + … , the standard quadratic bent function
        GbFunc::from_fn(p, 1, n, 1, |x| {
            x.chunks(2)
                .map(|pair| if pair.len() == 2 { pair[0] * pair[1] } else { 0 })
                .sum::<u64>()
                % p
        })
        .unwrap()
    }

    fn lifted(g: &GbFunc, k: u32) -> GbFunc {
        let place = g.p().pow(k - 1);
        GbFunc::new(g.p(), g.l(), g.n(), k, g.table().iter().map(|&v| place * v).collect())
            .unwrap()
    }

    #[test]
    fn zero_is_not_gbent() {
        let f = GbFunc::constant(3, 1, 2, 2, 0).unwrap();
        let check = is_gbent(&f);
        assert!(!check.gbent);
        assert_eq!(check.witness, Some(0));
    }

    #[test]
    fn lifted_bent_is_gbent() {
        let f = lifted(&bent_product(3, 2), 2);
        assert!(is_gbent(&f).gbent);
    }

    #[test]
    fn classify_lifted_product() {
        // f = 3·(x_1x_2): S(u) = 3·ζ_9^{3·(−u_1u_2 mod 3)}, all signs +1
        let f = lifted(&bent_product(3, 2), 2);
        let (class, cert) = classify_and_dual(&f).unwrap();
        assert_eq!(class, RegularityClass::Regular);
        assert!(!cert.gauss_flag);
        assert!(cert.signs.iter().all(|&s| s == 1));
        for u in 0..9 {
            let coords = f.coords_of(u);
            let expected = 3 * ((9 - coords[0] * coords[1]) % 3);
            assert_eq!(cert.dual.value(u), expected, "u = {u}");
        }
    }

    #[test]
    fn classify_odd_domain_uses_gauss() {
        // n = 1, p = 3: f(x) = x² has S(u) = g_3·ζ_3^{−u²·4^{-1}}
        let f = GbFunc::from_fn(3, 1, 1, 1, |x| x[0] * x[0] % 3).unwrap();
        let (class, cert) = classify_and_dual(&f).unwrap();
        assert!(cert.gauss_flag);
        // p ≡ 3 (mod 4): never regular in the strict sense
        assert_eq!(class, RegularityClass::WeaklyRegular(1));
        assert_eq!(cert.dual.table(), &[0, 2, 2]);
    }

    #[test]
    fn classify_odd_domain_mod_one_prime() {
        // p = 5 ≡ 1 (mod 4): g_5 = +√5 exactly, so an all-plus sign
        // pattern on an odd domain is still regular
        let f = GbFunc::from_fn(5, 1, 1, 1, |x| x[0] * x[0] % 5).unwrap();
        let (class, cert) = classify_and_dual(&f).unwrap();
        assert!(cert.gauss_flag);
        assert!(cert.signs.iter().all(|&s| s == 1));
        assert_eq!(class, RegularityClass::Regular);
    }

    #[test]
    fn classify_rejects_non_gbent() {
        let f = GbFunc::constant(3, 1, 2, 2, 0).unwrap();
        assert_eq!(
            classify_and_dual(&f),
            Err(AnalysisError::NotGbent { witness: 0 })
        );
    }

    #[test]
    fn dual_formula_on_lift() {
        // a_0 ≡ 0 so b_0 = a_1* − a_1* = 0 and the dual is 3·a_1*
        let f = lifted(&bent_product(3, 2), 2);
        assert!(verify_dual_formula(&f).unwrap());
    }

    #[test]
    fn dual_formula_k1_trivial() {
        assert!(verify_dual_formula(&bent_product(3, 2)).unwrap());
    }

    #[test]
    fn characterization_matches_gbent_on_small_suite() {
        let gbent_f = lifted(&bent_product(3, 2), 2);
        let zero = GbFunc::constant(3, 1, 2, 2, 0).unwrap();
        let skew = GbFunc::from_fn(3, 1, 2, 2, |x| (x[0] + 4 * x[1] * x[1]) % 9).unwrap();
        for f in [&gbent_f, &zero, &skew] {
            let expect = is_gbent(f).gbent;
            let (a, _) = characterization_check(f, Mode::A, 1, 1).unwrap();
            let (b2, _) = characterization_check(f, Mode::B, 1, 2).unwrap();
            let (b1, _) = characterization_check(f, Mode::B, 1, 1).unwrap();
            let (c, _) = characterization_check(f, Mode::C, 1, 1).unwrap();
            assert_eq!(a, expect);
            assert_eq!(b2, expect);
            assert_eq!(b1, expect);
            assert_eq!(c, expect);
        }
    }

    #[test]
    fn characterization_certificate_shape_on_lift() {
        // f = lift of bent g: every component equals g, so d = 0 and
        // j = g*(u).
        let g = bent_product(3, 2);
        let f = lifted(&g, 2);
        let (ok, cert) = characterization_check(&f, Mode::C, 1, 1).unwrap();
        assert!(ok);
        let (_, gcert) = classify_and_dual(&g).unwrap();
        for (u, point) in cert.points.iter().enumerate() {
            let point = point.as_ref().unwrap();
            assert_eq!(point.d, vec![0]);
            assert_eq!(point.j, gcert.dual.value(u));
        }
    }

    #[test]
    fn characterization_mode_d_quadratic() {
        // f(x) = 3x² mod 27 on Z_9: gbent, and mode D agrees
        let f = GbFunc::from_fn(3, 2, 1, 3, |x| 3 * x[0] * x[0] % 27).unwrap();
        assert!(is_gbent(&f).gbent);
        let (ok, _) = characterization_check(&f, Mode::D, 1, 1).unwrap();
        assert!(ok);

        let zero = GbFunc::constant(3, 2, 1, 3, 0).unwrap();
        assert!(!is_gbent(&zero).gbent);
        let (ok, _) = characterization_check(&zero, Mode::D, 1, 1).unwrap();
        assert!(!ok);
    }

    #[test]
    fn characterization_rejects_bad_params() {
        let f = GbFunc::constant(3, 1, 1, 2, 0).unwrap();
        assert!(characterization_check(&f, Mode::A, 2, 1).is_err()); // k < 2t
        assert!(characterization_check(&f, Mode::B, 1, 3).is_err()); // st > k
        assert!(characterization_check(&f, Mode::C, 3, 1).is_err()); // t does not divide k
        let square = GbFunc::constant(3, 1, 1, 1, 0).unwrap();
        assert!(characterization_check(&square, Mode::D, 1, 1).is_err()); // l = k
    }

    #[test]
    fn zpk_bent_paths_agree_and_reject_lift() {
        // gbent but not Z_{p^k}-bent: 3·f scales to the zero function
        let f = lifted(&bent_product(3, 2), 2);
        let (by_def, by_ladder) = zpk_bent_verdicts(&f).unwrap();
        assert!(!by_def);
        assert!(!by_ladder);

        // k = 1: Z_p-bent coincides with bent
        let g = bent_product(3, 2);
        let (by_def, by_ladder) = zpk_bent_verdicts(&g).unwrap();
        assert!(by_def);
        assert!(by_ladder);
    }

    #[test]
    fn plateaued_cases() {
        // bent → 0-plateaued
        let g = bent_product(3, 2);
        let p = plateaued_order(&g).unwrap().unwrap();
        assert_eq!(p.order, 0);

        // linear → n-plateaued (single spike)
        let lin = GbFunc::from_fn(3, 1, 2, 1, |x| (x[0] + 2 * x[1]) % 3).unwrap();
        let p = plateaued_order(&lin).unwrap().unwrap();
        assert_eq!(p.order, 2);

        // x_1·x_2 on three variables → 1-plateaued
        let g3 = GbFunc::from_fn(3, 1, 3, 1, |x| x[0] * x[1] % 3).unwrap();
        let p = plateaued_order(&g3).unwrap().unwrap();
        assert_eq!(p.order, 1);

        // not plateaued at all
        let odd = GbFunc::new(3, 1, 2, 1, vec![0, 1, 0, 0, 0, 0, 0, 0, 0]).unwrap();
        assert_eq!(plateaued_order(&odd).unwrap(), None);
    }

    #[test]
    fn gray_plateaued_on_gbent() {
        let f = lifted(&bent_product(3, 2), 2);
        assert!(verify_gray_plateaued(&f).unwrap());
        // k = 1: the image is f itself and bent means 0-plateaued
        assert!(verify_gray_plateaued(&bent_product(3, 2)).unwrap());
    }

    #[test]
    fn vectorial_bent_cases() {
        let g = bent_product(3, 2);
        assert!(is_vectorial_bent(&[&g]).unwrap());
        let zero = GbFunc::constant(3, 1, 2, 1, 0).unwrap();
        assert!(!is_vectorial_bent(&[&g, &zero]).unwrap());
    }
}
