//! Concrete test-vector factories: small finite fields, regular spreads
//! of `Z_p^{2m}`, the spread-based `Z_{p^k}`-bent construction, lifts of
//! p-ary bent functions, and quadratic witnesses for the `l < k` domain.
//!
//! Everything here is deterministic: the field modulus is the
//! lexicographically smallest irreducible, spread subspaces are indexed
//! by the ascending integer encoding of field elements, and the default
//! balanced map is `s ↦ (s−1) mod p^k`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::cyclotomic::{is_odd_prime, next_vector};
use crate::func::{FuncError, GbFunc};

/// Desk-scale cap on `p^m` for field construction.
const MAX_FIELD_SIZE: u64 = 10_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConstructError {
    NotOddPrime(u64),
    /// `p^m` exceeds the desk-scale cap.
    FieldTooLarge(u64),
    BadShape(&'static str),
    /// The map does not hit every value the same number of times.
    UnbalancedMap,
    /// The subspace family does not partition the nonzero vectors.
    InvalidSpread,
    Func(FuncError),
}

impl fmt::Display for ConstructError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructError::NotOddPrime(p) => write!(f, "{p} is not an odd prime"),
            ConstructError::FieldTooLarge(q) => {
                write!(f, "field size {q} exceeds the desk-scale cap {MAX_FIELD_SIZE}")
            }
            ConstructError::BadShape(what) => write!(f, "bad construction shape: {what}"),
            ConstructError::UnbalancedMap => write!(f, "map is not balanced"),
            ConstructError::InvalidSpread => {
                write!(f, "subspaces do not partition the nonzero vectors")
            }
            ConstructError::Func(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for ConstructError {}

impl From<FuncError> for ConstructError {
    fn from(e: FuncError) -> Self {
        ConstructError::Func(e)
    }
}

/// `F_{p^m}` as `Z_p[x]` modulo a fixed monic irreducible of degree `m`.
/// Elements are encoded as integers in `[0, p^m)` whose base-p digits are
/// the polynomial coefficients, constant term first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldSpec {
    p: u64,
    m: u32,
    /// Monic modulus, length `m + 1`, coefficient of `x^i` at position `i`.
    modulus: Vec<u64>,
}

impl FieldSpec {
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// `p^m`.
    pub fn size(&self) -> u64 {
        self.p.pow(self.m)
    }

    pub fn element_coords(&self, a: u64) -> Vec<u64> {
        let mut rest = a;
        (0..self.m)
            .map(|_| {
                let d = rest % self.p;
                rest /= self.p;
                d
            })
            .collect()
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        let (av, bv) = (self.element_coords(a), self.element_coords(b));
        let mut enc = 0u64;
        for (ai, bi) in av.iter().zip(&bv).rev() {
            enc = enc * self.p + (ai + bi) % self.p;
        }
        enc
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        let (av, bv) = (self.element_coords(a), self.element_coords(b));
        let m = self.m as usize;
        let mut prod = vec![0u64; 2 * m - 1];
        for (i, &ai) in av.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in bv.iter().enumerate() {
                prod[i + j] = (prod[i + j] + ai * bj) % self.p;
            }
        }
        // reduce modulo the monic modulus, highest power first
        for i in (m..prod.len()).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for (j, &mj) in self.modulus.iter().enumerate().take(m) {
                let idx = i - m + j;
                prod[idx] = (prod[idx] + c * (self.p - mj) % self.p) % self.p;
            }
        }
        let mut enc = 0u64;
        for &c in prod[..m].iter().rev() {
            enc = enc * self.p + c;
        }
        enc
    }
}

/// Evaluates a polynomial (coefficient vector, constant first) at `x`
/// over `Z_p`.
fn poly_eval(poly: &[u64], x: u64, p: u64) -> u64 {
    poly.iter().rev().fold(0u64, |acc, &c| (acc * x + c) % p)
}

/// Remainder of `a` modulo monic `b` over `Z_p`; true iff it is zero.
fn divides(b: &[u64], a: &[u64], p: u64) -> bool {
    let mut rem: Vec<u64> = a.to_vec();
    let db = b.len() - 1;
    while rem.len() > db {
        let lead = *rem.last().unwrap();
        if lead != 0 {
            let offset = rem.len() - 1 - db;
            for (j, &bj) in b.iter().enumerate() {
                rem[offset + j] = (rem[offset + j] + lead * (p - bj) % p) % p;
            }
        }
        rem.pop();
        while rem.len() > db && *rem.last().unwrap() == 0 {
            rem.pop();
        }
    }
    rem.iter().all(|&c| c == 0)
}

/// Enumerates monic polynomials of the given degree by ascending integer
/// encoding of the non-leading coefficients.
fn monic_polys(degree: u32, p: u64) -> impl Iterator<Item = Vec<u64>> {
    let d = degree as usize;
    let total = p.pow(degree);
    (0..total).map(move |enc| {
        let mut poly = vec![0u64; d + 1];
        let mut rest = enc;
        for c in poly.iter_mut().take(d) {
            *c = rest % p;
            rest /= p;
        }
        poly[d] = 1;
        poly
    })
}

fn is_irreducible(poly: &[u64], p: u64) -> bool {
    let degree = (poly.len() - 1) as u32;
    if degree == 1 {
        return true;
    }
    // no roots, then no monic factor of degree up to degree/2
    for x in 0..p {
        if poly_eval(poly, x, p) == 0 {
            return false;
        }
    }
    for d in 2..=degree / 2 {
        for cand in monic_polys(d, p) {
            if divides(&cand, poly, p) {
                return false;
            }
        }
    }
    true
}

/// Builds `F_{p^m}` with the lexicographically smallest monic irreducible
/// modulus, found by trial division.
pub fn gf_make(p: u64, m: u32) -> Result<FieldSpec, ConstructError> {
    if !is_odd_prime(p) {
        return Err(ConstructError::NotOddPrime(p));
    }
    if m == 0 {
        return Err(ConstructError::BadShape("field degree m must be at least 1"));
    }
    let size = p.checked_pow(m).filter(|&s| s <= MAX_FIELD_SIZE);
    let Some(size) = size else {
        return Err(ConstructError::FieldTooLarge(p.checked_pow(m).unwrap_or(u64::MAX)));
    };
    let _ = size;
    let modulus = monic_polys(m, p)
        .find(|poly| is_irreducible(poly, p))
        .expect("an irreducible of every degree exists over Z_p");
    Ok(FieldSpec { p, m, modulus })
}

/// A spread of `Z_p^{2m}`: `p^m + 1` subspaces of dimension `m` with
/// pairwise trivial intersection, each given by an `m × 2m` basis matrix.
/// Index 0 is the distinguished subspace `U_0 = {(0, y)}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpreadFamily {
    p: u64,
    m: u32,
    subspaces: Vec<Vec<Vec<u64>>>,
}

impl SpreadFamily {
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn subspace_count(&self) -> usize {
        self.subspaces.len()
    }

    pub fn basis(&self, index: usize) -> &[Vec<u64>] {
        &self.subspaces[index]
    }

    /// All `p^m` vectors of one subspace: the span of its basis rows.
    pub fn subspace_elements(&self, index: usize) -> Vec<Vec<u64>> {
        let basis = &self.subspaces[index];
        let dim = basis.len();
        let width = 2 * self.m as usize;
        let mut out = Vec::with_capacity(self.p.pow(self.m) as usize);
        let mut coeffs = vec![0u64; dim];
        loop {
            let mut v = vec![0u64; width];
            for (c, row) in coeffs.iter().zip(basis) {
                for (slot, &r) in v.iter_mut().zip(row) {
                    *slot = (*slot + c * r) % self.p;
                }
            }
            out.push(v);
            if !next_vector(&mut coeffs, self.p) {
                break;
            }
        }
        out
    }

    /// Checks the spread axioms constructively: every subspace has `p^m`
    /// distinct elements and the nonzero vectors are partitioned.
    pub fn verify(&self) -> bool {
        let width = 2 * self.m as usize;
        let total = self.p.pow(2 * self.m) as usize;
        let expected = self.p.pow(self.m) as usize;
        if self.subspaces.len() != expected + 1 {
            return false;
        }
        let mut hits = vec![0u32; total];
        for idx in 0..self.subspaces.len() {
            let elems = self.subspace_elements(idx);
            if elems.len() != expected {
                return false;
            }
            let mut seen = vec![false; total];
            for v in &elems {
                let enc = encode_vector(v, self.p);
                if seen[enc] {
                    return false; // dependent basis rows
                }
                seen[enc] = true;
                hits[enc] += 1;
            }
            let _ = width;
        }
        // zero hit by every subspace, everything else exactly once
        hits[0] == self.subspaces.len() as u32 && hits[1..].iter().all(|&h| h == 1)
    }
}

fn encode_vector(v: &[u64], p: u64) -> usize {
    let mut enc = 0u64;
    for &c in v.iter().rev() {
        enc = enc * p + c;
    }
    enc as usize
}

/// The regular spread of `Z_p^{2m} ≅ F_{p^m} × F_{p^m}`:
/// `U_0 = {(0, y)}` and `U_{1+s} = {(x, s·x)}` for each field element
/// `s`, in ascending encoding order.
pub fn regular_spread(field: &FieldSpec) -> SpreadFamily {
    let p = field.p();
    let m = field.m();
    let md = m as usize;
    let mut subspaces = Vec::with_capacity(field.size() as usize + 1);

    let mut u0 = Vec::with_capacity(md);
    for i in 0..md {
        let mut row = vec![0u64; 2 * md];
        row[md + i] = 1;
        u0.push(row);
    }
    subspaces.push(u0);

    for s in 0..field.size() {
        let mut basis = Vec::with_capacity(md);
        for i in 0..md {
            let e_i = p.pow(i as u32); // the field element x^i
            let sx = field.mul(s, e_i);
            let mut row = vec![0u64; 2 * md];
            row[i] = 1;
            for (j, &c) in field.element_coords(sx).iter().enumerate() {
                row[md + j] = c;
            }
            basis.push(row);
        }
        subspaces.push(basis);
    }
    SpreadFamily { p, m, subspaces }
}

/// A balanced assignment `{1, …, p^m} → Z_{p^k}`: every value has exactly
/// `p^{m−k}` preimages.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BalancedMap {
    p: u64,
    k: u32,
    table: Vec<u64>,
}

impl BalancedMap {
    /// Validates balancedness of an explicit table; `table[s−1]` is the
    /// image of `s`.
    pub fn new(p: u64, m: u32, k: u32, table: Vec<u64>) -> Result<Self, ConstructError> {
        if !is_odd_prime(p) {
            return Err(ConstructError::NotOddPrime(p));
        }
        if k == 0 || k > m {
            return Err(ConstructError::BadShape("balanced map requires 1 <= k <= m"));
        }
        let pm = p.pow(m);
        let pk = p.pow(k);
        if table.len() as u64 != pm {
            return Err(ConstructError::BadShape("balanced map table must have p^m entries"));
        }
        let mut counts = vec![0u64; pk as usize];
        for &v in &table {
            if v >= pk {
                return Err(ConstructError::BadShape("balanced map value out of Z_{p^k}"));
            }
            counts[v as usize] += 1;
        }
        let quota = pm / pk;
        if counts.iter().any(|&c| c != quota) {
            return Err(ConstructError::UnbalancedMap);
        }
        Ok(BalancedMap { p, k, table })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Image of `s ∈ {1, …, p^m}`.
    pub fn value(&self, s: u64) -> u64 {
        self.table[(s - 1) as usize]
    }
}

/// The deterministic default balanced map `s ↦ (s−1) mod p^k`.
pub fn default_balanced_map(p: u64, m: u32, k: u32) -> Result<BalancedMap, ConstructError> {
    if k > m {
        return Err(ConstructError::BadShape("balanced map requires k <= m"));
    }
    let pm = p.checked_pow(m).ok_or(ConstructError::FieldTooLarge(u64::MAX))?;
    let pk = p.pow(k);
    let table = (0..pm).map(|s| s % pk).collect();
    BalancedMap::new(p, m, k, table)
}

/// The spread construction on `Z_p^{2m}`: zero on `U_0`, the constant
/// `φ̄(s)` on `U_s ∖ {0}`. With a balanced `φ̄` the result is
/// `Z_{p^k}`-bent.
pub fn spread_gbent(
    spread: &SpreadFamily,
    map: &BalancedMap,
    k: u32,
) -> Result<GbFunc, ConstructError> {
    let p = spread.p();
    let m = spread.m();
    if map.p != p || map.k() != k {
        return Err(ConstructError::BadShape("map does not match (p, k)"));
    }
    if map.table.len() as u64 != p.pow(m) {
        return Err(ConstructError::BadShape("map does not match the spread size"));
    }
    let n = 2 * m;
    let size = p.pow(n) as usize;
    let mut table = vec![0u64; size];
    let mut assigned = vec![false; size];
    for s in 1..=p.pow(m) {
        let value = map.value(s);
        for v in spread.subspace_elements(s as usize) {
            let enc = encode_vector(&v, p);
            if enc == 0 {
                continue;
            }
            if assigned[enc] {
                return Err(ConstructError::InvalidSpread);
            }
            assigned[enc] = true;
            table[enc] = value;
        }
    }
    // every nonzero vector outside U_0 must have been covered
    let covered = assigned.iter().filter(|&&a| a).count() as u64;
    if covered != p.pow(m).wrapping_sub(1) * p.pow(m) {
        return Err(ConstructError::InvalidSpread);
    }
    Ok(GbFunc::new(p, 1, n, k, table)?)
}

/// Lifts a p-ary function to `Z_{p^k}` by `f = p^{k−1}·g`, which turns
/// `ζ_{p^k}^{f}` into `ζ_p^{g}`; the lift is gbent exactly when `g` is
/// bent.
pub fn lift_bent(g: &GbFunc, k: u32) -> Result<GbFunc, ConstructError> {
    if g.k() != 1 {
        return Err(ConstructError::BadShape("lift input must be p-ary (k = 1)"));
    }
    if k == 0 {
        return Err(ConstructError::BadShape("lift target exponent must be at least 1"));
    }
    let place = g.p().pow(k - 1);
    let table = g.table().iter().map(|&v| place * v).collect();
    Ok(GbFunc::new(g.p(), g.l(), g.n(), k, table)?)
}

/// Quadratic witness on the wide domain: `f(x) = p^{k−l}·Σ_i x_i² mod p^k`
/// on `Z_{p^l}^n`, for `l < k`. Gbent-ness is not asserted here; callers
/// verify it with the transform oracle before relying on it.
pub fn quadratic_gbent_lk(p: u64, l: u32, k: u32, n: u32) -> Result<GbFunc, ConstructError> {
    if l >= k {
        return Err(ConstructError::BadShape("quadratic witness requires l < k"));
    }
    let pk = p.checked_pow(k).ok_or(ConstructError::FieldTooLarge(u64::MAX))?;
    let weight = p.pow(k - l);
    Ok(GbFunc::from_fn(p, l, n, k, |x| {
        let sq: u64 = x.iter().map(|&xi| xi * xi % pk).sum::<u64>() % pk;
        weight * sq % pk
    })?)
}
