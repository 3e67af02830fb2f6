//! Exact arithmetic in the ring of integers `Z[ζ]` of the `p^k`-th
//! cyclotomic field, for an odd prime `p`.
//!
//! Elements are dense coefficient vectors over the power basis
//! `{ζ^j : 0 ≤ j < (p−1)·p^{k−1}}` with arbitrary-precision integer
//! coefficients. The power basis is an integral basis, so the
//! representation is canonical and equality is coefficient-wise; no
//! rounding occurs anywhere.
//!
//! Roots of unity of order `p^t` for `t ≤ k` embed via
//! `ζ_{p^t} = ζ^{p^{k−t}}`, which is how Walsh kernels and character
//! sums for mixed radices are evaluated in a single ring.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Errors from cyclotomic constructors and ring operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CycloError {
    /// The modulus base must be an odd prime.
    NotOddPrime(u64),
    /// `k` must be at least 1.
    ZeroExponent,
    /// `p^k` or the basis degree does not fit in the machine word.
    SizeOverflow,
    /// Two operands belong to different rings.
    ParamMismatch,
    /// A Galois index must be coprime to `p`.
    NonCoprimeIndex(u64),
    /// Vector argument has the wrong length or an out-of-range entry.
    ShapeMismatch(&'static str),
}

impl fmt::Display for CycloError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CycloError::NotOddPrime(p) => write!(f, "{p} is not an odd prime"),
            CycloError::ZeroExponent => write!(f, "prime-power exponent must be at least 1"),
            CycloError::SizeOverflow => write!(f, "ring parameters overflow the machine word"),
            CycloError::ParamMismatch => write!(f, "operands belong to different cyclotomic rings"),
            CycloError::NonCoprimeIndex(j) => write!(f, "Galois index {j} is divisible by p"),
            CycloError::ShapeMismatch(what) => write!(f, "shape mismatch: {what}"),
        }
    }
}

impl core::error::Error for CycloError {}

/// Trial-division primality test restricted to odd primes.
///
/// All parameters in this crate are desk-scale, so trial division is
/// entirely adequate.
pub fn is_odd_prime(p: u64) -> bool {
    if p < 3 || p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Ring parameters: the odd prime `p` and exponent `k` fixing the field
/// `Q(ζ)` with `ζ` a primitive `p^k`-th root of unity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CycloParams {
    p: u64,
    k: u32,
    /// `(p−1)·p^{k−1}`, the degree of the field over `Q`.
    degree: usize,
    /// `p^k`, the order of `ζ`.
    modulus: u64,
}

impl CycloParams {
    pub fn new(p: u64, k: u32) -> Result<Self, CycloError> {
        if !is_odd_prime(p) {
            return Err(CycloError::NotOddPrime(p));
        }
        if k == 0 {
            return Err(CycloError::ZeroExponent);
        }
        let modulus = p.checked_pow(k).ok_or(CycloError::SizeOverflow)?;
        let degree = (p - 1)
            .checked_mul(modulus / p)
            .and_then(|d| usize::try_from(d).ok())
            .ok_or(CycloError::SizeOverflow)?;
        Ok(CycloParams { p, k, degree, modulus })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Degree of the field over `Q`: `(p−1)·p^{k−1}`.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Order of the distinguished root: `p^k`.
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Exponent that embeds `ζ_{p^t}` as `ζ^{p^{k−t}}`. Requires `t ≤ k`.
    pub fn embed_factor(&self, t: u32) -> u64 {
        assert!(t <= self.k, "subring order p^{t} does not divide p^{}", self.k);
        self.p.pow(self.k - t)
    }
}

/// Index of the Galois automorphism `ζ ↦ ζ^j`, with `gcd(j, p) = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GaloisIndex {
    j: u64,
}

impl GaloisIndex {
    /// Normalizes `j` modulo `p^k` and checks coprimality with `p`.
    pub fn new(j: i64, params: CycloParams) -> Result<Self, CycloError> {
        let m = params.modulus() as i64;
        let j = j.rem_euclid(m) as u64;
        if j.is_multiple_of(params.p()) {
            return Err(CycloError::NonCoprimeIndex(j));
        }
        Ok(GaloisIndex { j })
    }

    pub fn j(&self) -> u64 {
        self.j
    }
}

/// An element of `Z[ζ]`, stored as its coefficient vector on the power
/// basis. Immutable apart from construction; all operations are pure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycInt {
    params: CycloParams,
    coeffs: Vec<BigInt>,
}

impl CycInt {
    pub fn zero(params: CycloParams) -> Self {
        CycInt { params, coeffs: vec![BigInt::zero(); params.degree()] }
    }

    pub fn one(params: CycloParams) -> Self {
        Self::from_bigint(params, BigInt::one())
    }

    pub fn from_bigint(params: CycloParams, value: BigInt) -> Self {
        let mut coeffs = vec![BigInt::zero(); params.degree()];
        coeffs[0] = value;
        CycInt { params, coeffs }
    }

    pub fn from_i64(params: CycloParams, value: i64) -> Self {
        Self::from_bigint(params, BigInt::from(value))
    }

    /// Builds an element directly from its power-basis coefficient vector.
    pub fn from_coeffs(params: CycloParams, coeffs: Vec<BigInt>) -> Result<Self, CycloError> {
        if coeffs.len() != params.degree() {
            return Err(CycloError::ShapeMismatch("coefficient vector length must equal the degree"));
        }
        Ok(CycInt { params, coeffs })
    }

    /// Canonical representation of `ζ^exponent`; any integer exponent is
    /// accepted and reduced modulo `p^k` first.
    ///
    /// Exponents at or above the degree are rewritten through the minimal
    /// polynomial relation `ζ^{(p−1)p^{k−1}} = −Σ_{j=0}^{p−2} ζ^{j·p^{k−1}}`.
    pub fn root(params: CycloParams, exponent: i64) -> Self {
        let e = exponent.rem_euclid(params.modulus() as i64) as u64;
        let mut coeffs = vec![BigInt::zero(); params.degree()];
        add_root_scaled(&mut coeffs, params, e, &BigInt::one());
        CycInt { params, coeffs }
    }

    /// Builds `Σ_e counts[e]·ζ^e` from a table of multiplicities indexed
    /// by exponent in `[0, p^k)`. This is the cheap accumulation path for
    /// character sums, which are sums of many roots of unity.
    pub fn from_exponent_counts(params: CycloParams, counts: &[i64]) -> Self {
        assert_eq!(counts.len(), params.modulus() as usize);
        let mut coeffs = vec![BigInt::zero(); params.degree()];
        for (e, &c) in counts.iter().enumerate() {
            if c != 0 {
                add_root_scaled(&mut coeffs, params, e as u64, &BigInt::from(c));
            }
        }
        CycInt { params, coeffs }
    }

    pub fn params(&self) -> CycloParams {
        self.params
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// If the element is a rational integer (all non-constant coefficients
    /// zero), returns it.
    pub fn as_rational_int(&self) -> Option<&BigInt> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, CycloError> {
        if self.params != rhs.params {
            return Err(CycloError::ParamMismatch);
        }
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(CycInt { params: self.params, coeffs })
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, CycloError> {
        if self.params != rhs.params {
            return Err(CycloError::ParamMismatch);
        }
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(CycInt { params: self.params, coeffs })
    }

    pub fn neg(&self) -> Self {
        CycInt {
            params: self.params,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Accumulating addition over a shared ring; used by the transform
    /// inner loops to avoid reallocating on every term.
    pub(crate) fn add_assign_unchecked(&mut self, rhs: &Self) {
        debug_assert_eq!(self.params, rhs.params);
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }

    /// Exact ring product by schoolbook exponent convolution followed by
    /// per-monomial reduction. Degrees stay small at desk scale, so no
    /// FFT-based polynomial multiplication is used.
    pub fn mul(&self, rhs: &Self) -> Result<Self, CycloError> {
        if self.params != rhs.params {
            return Err(CycloError::ParamMismatch);
        }
        let params = self.params;
        let pk = params.modulus() as usize;
        // First fold the raw convolution modulo ζ^{p^k} = 1, then rewrite
        // the exponents in [degree, p^k) through the basis relation.
        let mut folded = vec![BigInt::zero(); pk];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let mut e = i + j;
                if e >= pk {
                    e -= pk;
                }
                folded[e] += a * b;
            }
        }
        Ok(Self::from_folded(params, folded))
    }

    /// Multiplies by the integer `scale`.
    pub fn mul_scalar(&self, scale: &BigInt) -> Self {
        CycInt {
            params: self.params,
            coeffs: self.coeffs.iter().map(|c| c * scale).collect(),
        }
    }

    /// Multiplies by `ζ^exponent`; a rotation of the basis monomials, much
    /// cheaper than a general product.
    pub fn mul_by_root(&self, exponent: i64) -> Self {
        let params = self.params;
        let pk = params.modulus();
        let e = exponent.rem_euclid(pk as i64) as u64;
        let mut coeffs = vec![BigInt::zero(); params.degree()];
        self.rotate_into(e, &mut coeffs);
        CycInt { params, coeffs }
    }

    /// Adds `self·ζ^e` into an accumulator sharing the ring. `e` must lie
    /// in `[0, p^k)`.
    pub fn rotate_into_acc(&self, e: u64, acc: &mut CycInt) {
        debug_assert_eq!(self.params, acc.params);
        self.rotate_into(e, &mut acc.coeffs);
    }

    /// Adds `self·ζ^e` into a raw coefficient accumulator. `e` must lie in
    /// `[0, p^k)`.
    pub(crate) fn rotate_into(&self, e: u64, acc: &mut [BigInt]) {
        let pk = self.params.modulus();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut shifted = i as u64 + e;
            if shifted >= pk {
                shifted -= pk;
            }
            add_root_scaled(acc, self.params, shifted, c);
        }
    }

    fn from_folded(params: CycloParams, mut folded: Vec<BigInt>) -> Self {
        let degree = params.degree();
        let pk = params.modulus() as usize;
        let step = pk / params.p() as usize; // p^{k−1}
        for e in degree..pk {
            if folded[e].is_zero() {
                continue;
            }
            let c = core::mem::take(&mut folded[e]);
            let r = e - degree;
            for j in 0..(params.p() - 1) as usize {
                folded[r + j * step] -= &c;
            }
        }
        folded.truncate(degree);
        CycInt { params, coeffs: folded }
    }

    /// Applies the automorphism `ζ ↦ ζ^j` monomial-wise and re-reduces.
    /// This is a ring homomorphism.
    pub fn galois(&self, s: GaloisIndex) -> Self {
        let params = self.params;
        let pk = params.modulus();
        let mut coeffs = vec![BigInt::zero(); params.degree()];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = (i as u64 * s.j()) % pk;
            add_root_scaled(&mut coeffs, params, e, c);
        }
        CycInt { params, coeffs }
    }

    /// Complex conjugation, `ζ ↦ ζ^{−1}`.
    pub fn conj(&self) -> Self {
        let idx = GaloisIndex::new(-1, self.params).expect("-1 is coprime to p");
        self.galois(idx)
    }

    /// `|z|² = z·z̄` as an exact ring element. For a Walsh sum of a gbent
    /// function this is the rational constant `p^{ln}`.
    pub fn norm_sq(&self) -> Self {
        self.mul(&self.conj()).expect("conjugate shares the ring")
    }
}

impl fmt::Display for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            let term = match (i, mag.is_one()) {
                (0, _) => format!("{mag}"),
                (1, true) => String::from("z"),
                (1, false) => format!("{mag}*z"),
                (_, true) => format!("z^{i}"),
                (_, false) => format!("{mag}*z^{i}"),
            };
            if parts.is_empty() {
                if c.is_negative() {
                    parts.push(format!("-{term}"));
                } else {
                    parts.push(term);
                }
            } else {
                parts.push(format!("{sign} {term}"));
            }
        }
        if parts.is_empty() {
            return write!(f, "0");
        }
        write!(f, "{}", parts.join(" "))
    }
}

/// Adds `scale·ζ^e` (with `e` already in `[0, p^k)`) into a coefficient
/// vector, applying the basis relation when `e` is above the degree.
fn add_root_scaled(coeffs: &mut [BigInt], params: CycloParams, e: u64, scale: &BigInt) {
    let degree = params.degree() as u64;
    if e < degree {
        coeffs[e as usize] += scale;
    } else {
        // ζ^{degree + r} = −Σ_{j=0}^{p−2} ζ^{r + j·p^{k−1}}, all exponents
        // strictly below the degree.
        let r = (e - degree) as usize;
        let step = (params.modulus() / params.p()) as usize;
        for j in 0..(params.p() - 1) as usize {
            coeffs[r + j * step] -= scale;
        }
    }
}

/// The quadratic Gauss sum `g_p = Σ_{j ∈ Z_p} ζ_p^{j²}`, embedded via
/// `ζ_p = ζ^{p^{k−1}}`. Satisfies `g_p² = (−1)^{(p−1)/2}·p` exactly, which
/// lets `√p` and `√−1·√p` live inside `Z[ζ]` without adjoining anything.
pub fn gauss_sum(params: CycloParams) -> CycInt {
    let p = params.p();
    let embed = params.embed_factor(1);
    let mut counts = vec![0i64; params.modulus() as usize];
    for j in 0..p {
        let e = (j * j % p) * embed;
        counts[e as usize] += 1;
    }
    CycInt::from_exponent_counts(params, &counts)
}

/// The basis element `γ_c = Σ_{d ∈ Z_{p^t}^{l−1}} ζ_{p^t}^{−c·d}·ζ^{Σ_j p^{(j−1)t} d_j}`
/// for `c ∈ Z_{p^t}^{l−1}` (with `l − 1 = c.len()`).
///
/// Requires `(l−1)·t < k` so every combined exponent stays below `p^k`,
/// and every entry of `c` below `p^t`.
pub fn gamma(params: CycloParams, t: u32, c: &[u64]) -> Result<CycInt, CycloError> {
    let lm1 = c.len() as u32;
    if t == 0 || t > params.k() || lm1.checked_mul(t).is_none_or(|v| v >= params.k()) {
        return Err(CycloError::ShapeMismatch("gamma requires (l-1)*t < k and 1 <= t <= k"));
    }
    let pt = params.p().pow(t);
    if c.iter().any(|&cj| cj >= pt) {
        return Err(CycloError::ShapeMismatch("gamma coefficient out of Z_{p^t}"));
    }
    let embed = params.embed_factor(t);
    let pk = params.modulus();
    let mut counts = vec![0i64; pk as usize];
    let mut d = vec![0u64; c.len()];
    loop {
        // character part: ζ_{p^t}^{−c·d} embedded as ζ^{p^{k−t}·(−c·d mod p^t)}
        let dot: u64 = c.iter().zip(&d).map(|(cj, dj)| cj * dj % pt).sum::<u64>() % pt;
        let chi = ((pt - dot) % pt) * embed;
        // positional part: ζ^{Σ_j p^{(j−1)t} d_j}
        let mut pos = 0u64;
        let mut base = 1u64;
        for &dj in &d {
            pos += base * dj;
            base *= pt;
        }
        counts[((chi + pos) % pk) as usize] += 1;
        if !next_vector(&mut d, pt) {
            break;
        }
    }
    Ok(CycInt::from_exponent_counts(params, &counts))
}

/// The product form of the same `γ_c`:
/// `Π_{i=1}^{l−1} Σ_{v ∈ Z_{p^t}} ζ_{p^t}^{−v·c_i}·ζ^{p^{(i−1)t} v}`.
pub fn gamma_product_form(params: CycloParams, t: u32, c: &[u64]) -> Result<CycInt, CycloError> {
    let lm1 = c.len() as u32;
    if t == 0 || t > params.k() || lm1.checked_mul(t).is_none_or(|v| v >= params.k()) {
        return Err(CycloError::ShapeMismatch("gamma requires (l-1)*t < k and 1 <= t <= k"));
    }
    let pt = params.p().pow(t);
    if c.iter().any(|&cj| cj >= pt) {
        return Err(CycloError::ShapeMismatch("gamma coefficient out of Z_{p^t}"));
    }
    let embed = params.embed_factor(t);
    let pk = params.modulus();
    let mut acc = CycInt::one(params);
    for (i, &ci) in c.iter().enumerate() {
        let mut counts = vec![0i64; pk as usize];
        let place = pt.pow(i as u32); // p^{(i−1)t} with i 1-indexed
        for v in 0..pt {
            let chi = ((pt - v * ci % pt) % pt) * embed;
            counts[((chi + place * v) % pk) as usize] += 1;
        }
        let factor = CycInt::from_exponent_counts(params, &counts);
        acc = acc.mul(&factor)?;
    }
    Ok(acc)
}

/// Verifies the digit-extraction identity
/// `p^t·ζ^a = Σ_{i ∈ Z_{p^t}} (Σ_{j ∈ Z_{p^t}} ζ_{p^t}^{(a−i)j})·ζ^i`
/// exactly, with denominators cleared. Requires `t ≤ k` and `a < p^t`.
pub fn digit_identity_check(a: u64, t: u32, params: CycloParams) -> bool {
    assert!(t >= 1 && t <= params.k(), "digit identity needs 1 <= t <= k");
    let pt = params.p().pow(t);
    assert!(a < pt, "a must lie in Z_{{p^t}}");
    let embed = params.embed_factor(t);

    let lhs = CycInt::root(params, a as i64).mul_scalar(&BigInt::from(pt));
    let mut rhs = CycInt::zero(params);
    for i in 0..pt {
        let mut counts = vec![0i64; params.modulus() as usize];
        for j in 0..pt {
            let e = (a + pt - i) % pt * j % pt * embed;
            counts[e as usize] += 1;
        }
        let inner = CycInt::from_exponent_counts(params, &counts);
        rhs.add_assign_unchecked(&inner.mul_by_root(i as i64));
    }
    lhs == rhs
}

/// Verifies the inversion identity
/// `p^{t(l−1)}·ζ^{Σ_j u_j p^{(j−1)t}} = Σ_c ζ_{p^t}^{c·u}·γ_c` for every
/// `u ∈ Z_{p^t}^{l−1}`, with denominators cleared. This is what makes
/// `{γ_c}` a basis over `Q(ζ_{p^t})` when `k = l·t`.
pub fn gamma_inversion_check(params: CycloParams, t: u32, l: u32) -> bool {
    assert!(l >= 1, "l must be at least 1");
    let lm1 = (l - 1) as usize;
    let pt = params.p().pow(t);
    let embed = params.embed_factor(t);

    let gammas: Vec<(Vec<u64>, CycInt)> = vectors_over(lm1, pt)
        .into_iter()
        .map(|c| {
            let g = gamma(params, t, &c).expect("checked shape");
            (c, g)
        })
        .collect();

    let scale = BigInt::from(pt).pow(lm1 as u32);
    for u in vectors_over(lm1, pt) {
        let mut pos = 0u64;
        let mut base = 1u64;
        for &uj in &u {
            pos += base * uj;
            base *= pt;
        }
        let lhs = CycInt::root(params, pos as i64).mul_scalar(&scale);
        let mut rhs = CycInt::zero(params);
        for (c, g) in &gammas {
            let dot: u64 = c.iter().zip(&u).map(|(cj, uj)| cj * uj % pt).sum::<u64>() % pt;
            rhs.add_assign_unchecked(&g.mul_by_root((dot * embed) as i64));
        }
        if lhs != rhs {
            return false;
        }
    }
    true
}

/// Sign of a matched unit, `+1` or `−1`.
pub type Sign = i8;

/// Recognizes `s = sign·p^{scale_exp}·g_p^{[with_gauss]}·ζ^e` by exhaustive
/// match over `e ∈ Z_{p^k}` and both signs. Distinct `±ζ^e` are distinct
/// ring elements, so a match is unique; `None` means "not of this shape".
pub fn unit_match(
    s: &CycInt,
    scale_exp: u32,
    with_gauss: bool,
    params: CycloParams,
) -> Option<(Sign, u64)> {
    let scale = BigInt::from(params.p()).pow(scale_exp);
    let base = if with_gauss {
        gauss_sum(params).mul_scalar(&scale)
    } else {
        CycInt::from_bigint(params, scale)
    };
    for e in 0..params.modulus() {
        let cand = base.mul_by_root(e as i64);
        if &cand == s {
            return Some((1, e));
        }
        if cand.neg() == *s {
            return Some((-1, e));
        }
    }
    None
}

/// Enumerates all vectors of the given length with entries in `[0, radix)`,
/// in little-endian counting order (the all-zero vector first).
pub fn vectors_over(len: usize, radix: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut v = vec![0u64; len];
    loop {
        out.push(v.clone());
        if !next_vector(&mut v, radix) {
            break;
        }
    }
    out
}

/// Advances a mixed-radix counter in place; false once it wraps to zero.
pub fn next_vector(v: &mut [u64], radix: u64) -> bool {
    for digit in v.iter_mut() {
        *digit += 1;
        if *digit < radix {
            return true;
        }
        *digit = 0;
    }
    false
}
