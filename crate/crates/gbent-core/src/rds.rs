//! Relative-difference-set verification in `G = Z_p^n × Z_{p^k}` with
//! forbidden subgroup `N = {0} × Z_{p^k}`, both by exhaustive difference
//! counting and by exact character sums.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

use crate::cyclotomic::{is_odd_prime, CycInt, CycloParams};
use crate::func::GbFunc;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RdsError {
    NotOddPrime(u64),
    SizeOverflow,
    /// Group element out of range or repeated.
    BadElement(&'static str),
    /// The (u, v, k, λ) parameters contradict the group or subset sizes.
    ParamsInconsistent(&'static str),
    /// graph_of requires a function on Z_p^n (l = 1).
    DomainNotPrime,
}

impl fmt::Display for RdsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RdsError::NotOddPrime(p) => write!(f, "{p} is not an odd prime"),
            RdsError::SizeOverflow => write!(f, "group size overflows the machine word"),
            RdsError::BadElement(what) => write!(f, "bad subset element: {what}"),
            RdsError::ParamsInconsistent(what) => write!(f, "inconsistent parameters: {what}"),
            RdsError::DomainNotPrime => write!(f, "graph requires domain radix exponent l = 1"),
        }
    }
}

impl core::error::Error for RdsError {}

/// The ambient group `Z_p^n × Z_{p^k}`. Elements are encoded as
/// `(index of x, y)` with the x index little-endian in base p.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroupSpec {
    p: u64,
    n: u32,
    k: u32,
}

/// One group element: the x part as an index in `[0, p^n)`, the y part
/// as a value in `[0, p^k)`.
pub type Element = (usize, u64);

impl GroupSpec {
    pub fn new(p: u64, n: u32, k: u32) -> Result<Self, RdsError> {
        if !is_odd_prime(p) {
            return Err(RdsError::NotOddPrime(p));
        }
        if n == 0 || k == 0 {
            return Err(RdsError::BadElement("n and k must be at least 1"));
        }
        p.checked_pow(n + k)
            .and_then(|s| usize::try_from(s).ok())
            .ok_or(RdsError::SizeOverflow)?;
        Ok(GroupSpec { p, n, k })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// `p^n`, the number of x parts.
    pub fn x_size(&self) -> usize {
        self.p.pow(self.n) as usize
    }

    /// `p^k`, the order of the forbidden subgroup.
    pub fn y_size(&self) -> u64 {
        self.p.pow(self.k)
    }

    /// `p^{n+k}`, the group order.
    pub fn group_size(&self) -> usize {
        self.p.pow(self.n + self.k) as usize
    }

    fn x_coords(&self, index: usize) -> Vec<u64> {
        let mut rest = index as u64;
        (0..self.n)
            .map(|_| {
                let d = rest % self.p;
                rest /= self.p;
                d
            })
            .collect()
    }

    /// Index of the coordinate-wise difference of two x parts.
    fn x_sub(&self, a: usize, b: usize) -> usize {
        let (av, bv) = (self.x_coords(a), self.x_coords(b));
        let mut idx = 0u64;
        for (ai, bi) in av.iter().zip(&bv).rev() {
            idx = idx * self.p + (ai + self.p - bi) % self.p;
        }
        idx as usize
    }
}

/// A duplicate-free subset of the group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetR {
    elements: Vec<Element>,
}

impl SubsetR {
    pub fn new(spec: &GroupSpec, elements: Vec<Element>) -> Result<Self, RdsError> {
        let x_size = spec.x_size();
        let y_size = spec.y_size();
        if elements.iter().any(|&(x, y)| x >= x_size || y >= y_size) {
            return Err(RdsError::BadElement("element outside the group"));
        }
        let mut seen = vec![false; spec.group_size()];
        for &(x, y) in &elements {
            let idx = x + x_size * y as usize;
            if seen[idx] {
                return Err(RdsError::BadElement("duplicate element"));
            }
            seen[idx] = true;
        }
        Ok(SubsetR { elements })
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// The graph `R = {(x, f(x))}` of a function on `Z_p^n`.
pub fn graph_of(f: &GbFunc, spec: &GroupSpec) -> Result<SubsetR, RdsError> {
    if f.l() != 1 {
        return Err(RdsError::DomainNotPrime);
    }
    if f.p() != spec.p() || f.n() != spec.n() || f.k() != spec.k() {
        return Err(RdsError::ParamsInconsistent("function shape does not match the group"));
    }
    let elements = (0..f.domain_size()).map(|x| (x, f.value(x))).collect();
    SubsetR::new(spec, elements)
}

/// Outcome of a difference count, with the first offending group element
/// when the property fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RdsCheck {
    pub holds: bool,
    pub failure: Option<Element>,
}

/// Exhaustively counts all `|R|²` ordered differences and checks the
/// `(u, v, kk, λ)` relative-difference-set property: every element
/// outside `N` hit exactly `λ` times, no nonzero element of `N` hit,
/// identity hit `|R|` times.
pub fn rds_bruteforce(
    r: &SubsetR,
    spec: &GroupSpec,
    params: (u64, u64, u64, u64),
) -> Result<RdsCheck, RdsError> {
    let (u, v, kk, lambda) = params;
    let group_size = spec.group_size() as u64;
    if u.checked_mul(v) != Some(group_size) {
        return Err(RdsError::ParamsInconsistent("u*v must equal |G|"));
    }
    if v != spec.y_size() {
        return Err(RdsError::ParamsInconsistent("v must equal |N| = p^k"));
    }
    if kk != r.len() as u64 {
        return Err(RdsError::ParamsInconsistent("k must equal |R|"));
    }

    let x_size = spec.x_size();
    let y_size = spec.y_size();
    let mut counts = vec![0u64; spec.group_size()];
    for &(x1, y1) in r.elements() {
        for &(x2, y2) in r.elements() {
            let dx = spec.x_sub(x1, x2);
            let dy = (y1 + y_size - y2) % y_size;
            counts[dx + x_size * dy as usize] += 1;
        }
    }

    for (idx, &count) in counts.iter().enumerate() {
        let x = idx % x_size;
        let y = (idx / x_size) as u64;
        let expected = if x == 0 && y == 0 {
            r.len() as u64
        } else if x == 0 {
            0
        } else {
            lambda
        };
        if count != expected {
            return Ok(RdsCheck { holds: false, failure: Some((x, y)) });
        }
    }
    Ok(RdsCheck { holds: true, failure: None })
}

/// Character-sum test of the same property: for every character
/// `χ_{u,a}(x, y) = ζ_p^{−u·x}·ζ_{p^k}^{ay}`, the exact value of `|χ(R)|²`
/// must be `p^{2n}` at the principal character, `0` when `a = 0` and
/// `u ≠ 0`, and `p^n` otherwise.
pub fn rds_characters(r: &SubsetR, spec: &GroupSpec) -> Result<bool, RdsError> {
    let params = CycloParams::new(spec.p(), spec.k()).map_err(|_| RdsError::SizeOverflow)?;
    let pk = params.modulus();
    let embed = params.embed_factor(1);
    let p = spec.p();
    let x_size = spec.x_size();

    let coords: Vec<Vec<u64>> = (0..x_size).map(|x| spec.x_coords(x)).collect();
    let principal = CycInt::from_bigint(params, BigInt::from(p).pow(2 * spec.n()));
    let offdiag = CycInt::from_bigint(params, BigInt::from(p).pow(spec.n()));
    let zero = CycInt::zero(params);

    for u in 0..x_size {
        for a in 0..pk {
            let mut counts = vec![0i64; pk as usize];
            for &(x, y) in r.elements() {
                let dot = coords[u]
                    .iter()
                    .zip(&coords[x])
                    .fold(0u64, |acc, (&ui, &xi)| (acc + ui * xi) % p);
                let e = ((p - dot) % p * embed + a * y) % pk;
                counts[e as usize] += 1;
            }
            let chi = CycInt::from_exponent_counts(params, &counts);
            let norm = chi.norm_sq();
            let expected = if u == 0 && a == 0 {
                &principal
            } else if a == 0 {
                &zero
            } else {
                &offdiag
            };
            if norm != *expected {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
