//! Tabular representation of functions `Z_{p^l}^n → Z_{p^k}` and the
//! digit/block manipulations the analysis layer is built from.
//!
//! Index convention, used everywhere including the file format: the point
//! `x = (x_1, …, x_n)` maps to index `Σ_i x_i·(p^l)^{i−1}`, i.e.
//! little-endian mixed radix with `x_1` least significant. Digits of
//! codomain values are likewise 0-indexed from the least significant.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::cyclotomic::is_odd_prime;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FuncError {
    NotOddPrime(u64),
    /// l, n, k must be positive and l ≤ k.
    BadShape(&'static str),
    /// Domain or codomain size overflows the machine word.
    SizeOverflow,
    TableLength { expected: usize, got: usize },
    ValueOutOfRange { index: usize, value: u64 },
    /// Digit base t out of range for the requested decomposition.
    DigitBase(&'static str),
    /// Component coefficient vector has wrong arity or an entry out of range.
    ComponentShape(&'static str),
    /// Functions combined linearly must share shape and be p-ary.
    MixShape(&'static str),
}

impl fmt::Display for FuncError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FuncError::NotOddPrime(p) => write!(f, "{p} is not an odd prime"),
            FuncError::BadShape(what) => write!(f, "bad function shape: {what}"),
            FuncError::SizeOverflow => write!(f, "table size overflows the machine word"),
            FuncError::TableLength { expected, got } => {
                write!(f, "table has {got} entries, expected {expected}")
            }
            FuncError::ValueOutOfRange { index, value } => {
                write!(f, "table entry {value} at index {index} is out of range")
            }
            FuncError::DigitBase(what) => write!(f, "bad digit base: {what}"),
            FuncError::ComponentShape(what) => write!(f, "bad component spec: {what}"),
            FuncError::MixShape(what) => write!(f, "bad linear combination: {what}"),
        }
    }
}

impl core::error::Error for FuncError {}

pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// A function `Z_{p^l}^n → Z_{p^k}` as a dense value table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GbFunc {
    p: u64,
    l: u32,
    n: u32,
    k: u32,
    table: Vec<u64>,
}

impl GbFunc {
    pub fn new(p: u64, l: u32, n: u32, k: u32, table: Vec<u64>) -> Result<Self, FuncError> {
        if !is_odd_prime(p) {
            return Err(FuncError::NotOddPrime(p));
        }
        if l == 0 || n == 0 || k == 0 {
            return Err(FuncError::BadShape("l, n, k must all be at least 1"));
        }
        if l > k {
            return Err(FuncError::BadShape("domain radix exponent l exceeds codomain exponent k"));
        }
        let radix = p.checked_pow(l).ok_or(FuncError::SizeOverflow)?;
        let size = radix
            .checked_pow(n)
            .and_then(|s| usize::try_from(s).ok())
            .ok_or(FuncError::SizeOverflow)?;
        if table.len() != size {
            return Err(FuncError::TableLength { expected: size, got: table.len() });
        }
        let modulus = p.checked_pow(k).ok_or(FuncError::SizeOverflow)?;
        if let Some(index) = table.iter().position(|&v| v >= modulus) {
            return Err(FuncError::ValueOutOfRange { index, value: table[index] });
        }
        Ok(GbFunc { p, l, n, k, table })
    }

    /// Builds a table by evaluating `f` on every point, in index order.
    pub fn from_fn(
        p: u64,
        l: u32,
        n: u32,
        k: u32,
        mut f: impl FnMut(&[u64]) -> u64,
    ) -> Result<Self, FuncError> {
        let radix = p.checked_pow(l).ok_or(FuncError::SizeOverflow)?;
        let size = radix
            .checked_pow(n)
            .and_then(|s| usize::try_from(s).ok())
            .ok_or(FuncError::SizeOverflow)?;
        let mut table = Vec::with_capacity(size);
        let mut x = vec![0u64; n as usize];
        loop {
            table.push(f(&x));
            if !crate::cyclotomic::next_vector(&mut x, radix) {
                break;
            }
        }
        Self::new(p, l, n, k, table)
    }

    pub fn constant(p: u64, l: u32, n: u32, k: u32, value: u64) -> Result<Self, FuncError> {
        Self::from_fn(p, l, n, k, |_| value)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn table(&self) -> &[u64] {
        &self.table
    }

    /// `p^l`, the radix of each domain coordinate.
    pub fn domain_radix(&self) -> u64 {
        self.p.pow(self.l)
    }

    /// `p^{l·n}`, the number of points.
    pub fn domain_size(&self) -> usize {
        self.table.len()
    }

    /// `p^k`, the codomain modulus.
    pub fn codomain_modulus(&self) -> u64 {
        self.p.pow(self.k)
    }

    pub fn value(&self, index: usize) -> u64 {
        self.table[index]
    }

    /// Little-endian coordinates of a point index.
    pub fn coords_of(&self, index: usize) -> Vec<u64> {
        let radix = self.domain_radix();
        let mut rest = index as u64;
        (0..self.n)
            .map(|_| {
                let d = rest % radix;
                rest /= radix;
                d
            })
            .collect()
    }

    pub fn index_of(&self, coords: &[u64]) -> usize {
        debug_assert_eq!(coords.len(), self.n as usize);
        let radix = self.domain_radix();
        let mut idx = 0u64;
        for &c in coords.iter().rev() {
            debug_assert!(c < radix);
            idx = idx * radix + c;
        }
        idx as usize
    }

    /// Base-`p^t` digits of every table entry, least significant first.
    /// The final block absorbs the remainder when `t` does not divide `k`.
    pub fn digit_decompose(&self, t: u32) -> Result<Digits, FuncError> {
        if t == 0 || t > self.k {
            return Err(FuncError::DigitBase("digit base exponent must satisfy 1 <= t <= k"));
        }
        let count = self.k.div_ceil(t);
        let last_exp = self.k - (count - 1) * t;
        if t < self.l || last_exp < self.l {
            // A digit block is itself a GbFunc, so its codomain exponent
            // may not fall below the domain radix exponent.
            return Err(FuncError::DigitBase("digit block codomain falls below the domain radix"));
        }
        let pt = self.p.pow(t);
        let mut blocks = Vec::with_capacity(count as usize);
        for i in 0..count {
            let exp = if i + 1 == count { last_exp } else { t };
            let modulus = self.p.pow(exp);
            let divisor = pt.pow(i);
            let table = self.table.iter().map(|&v| v / divisor % modulus).collect();
            blocks.push(GbFunc::new(self.p, self.l, self.n, exp, table)?);
        }
        Ok(Digits { t, blocks })
    }

    /// Splits `f = g + p^t·h` with `g` the low `t` digits (into `Z_{p^t}`)
    /// and `h` the rest (into `Z_{p^{k−t}}`). Requires `k ≥ 2t`.
    pub fn split_low_high(&self, t: u32) -> Result<(GbFunc, GbFunc), FuncError> {
        if t == 0 || self.k < 2 * t {
            return Err(FuncError::DigitBase("split requires 1 <= t and k >= 2t"));
        }
        if t < self.l || self.k - t < self.l {
            return Err(FuncError::DigitBase("digit block codomain falls below the domain radix"));
        }
        let pt = self.p.pow(t);
        let low = self.table.iter().map(|&v| v % pt).collect();
        let high = self.table.iter().map(|&v| v / pt).collect();
        Ok((
            GbFunc::new(self.p, self.l, self.n, t, low)?,
            GbFunc::new(self.p, self.l, self.n, self.k - t, high)?,
        ))
    }

    /// The component function selected by `form`; see [`ComponentForm`].
    pub fn component(&self, form: &ComponentForm) -> Result<GbFunc, FuncError> {
        match form {
            ComponentForm::PairSplit { t, c } => {
                let t = *t;
                if t == 0 || self.k < 2 * t {
                    return Err(FuncError::ComponentShape("pair split requires k >= 2t >= 2"));
                }
                let pt = self.p.pow(t);
                if *c >= pt {
                    return Err(FuncError::ComponentShape("coefficient out of Z_{p^t}"));
                }
                let out_k = self.k - t;
                if out_k < self.l {
                    return Err(FuncError::ComponentShape("component codomain below domain radix"));
                }
                let out_mod = self.p.pow(out_k);
                let weight = mul_mod(*c, self.p.pow(self.k - 2 * t), out_mod);
                let table = self
                    .table
                    .iter()
                    .map(|&v| {
                        let g = v % pt;
                        let h = v / pt;
                        (h + mul_mod(weight, g, out_mod)) % out_mod
                    })
                    .collect();
                GbFunc::new(self.p, self.l, self.n, out_k, table)
            }
            ComponentForm::Nested { t, s, c } => {
                let (t, s) = (*t, *s);
                if t == 0 || s == 0 || s.checked_mul(t).is_none_or(|st| st > self.k) {
                    return Err(FuncError::ComponentShape("nested form requires s*t <= k"));
                }
                if c.len() != (s - 1) as usize {
                    return Err(FuncError::ComponentShape("nested form needs s-1 coefficients"));
                }
                let pt = self.p.pow(t);
                if c.iter().any(|&ci| ci >= pt) {
                    return Err(FuncError::ComponentShape("coefficient out of Z_{p^t}"));
                }
                let out_k = self.k - (s - 1) * t;
                if out_k < self.l {
                    return Err(FuncError::ComponentShape("component codomain below domain radix"));
                }
                let out_mod = self.p.pow(out_k);
                let mid_mod = self.p.pow(self.k - s * t);
                let mid_div = pt.pow(s - 1);
                let top_div = self.p.pow(self.k - t);
                let shift = self.p.pow(self.k - s * t);
                let table = self
                    .table
                    .iter()
                    .map(|&v| {
                        let mid = v / mid_div % mid_mod;
                        let top = v / top_div;
                        let mut mix = top % pt;
                        for (i, &ci) in c.iter().enumerate() {
                            let block = v / pt.pow(i as u32) % pt;
                            mix = (mix + mul_mod(ci, block, pt)) % pt;
                        }
                        (mid + mul_mod(shift, mix, out_mod)) % out_mod
                    })
                    .collect();
                GbFunc::new(self.p, self.l, self.n, out_k, table)
            }
            ComponentForm::BlockMix { t, c } => {
                let t = *t;
                if t == 0 || !self.k.is_multiple_of(t) {
                    return Err(FuncError::ComponentShape("block mix requires t dividing k"));
                }
                let count = self.k / t;
                if c.len() != (count - 1) as usize {
                    return Err(FuncError::ComponentShape("block mix needs k/t - 1 coefficients"));
                }
                let pt = self.p.pow(t);
                if c.iter().any(|&ci| ci >= pt) {
                    return Err(FuncError::ComponentShape("coefficient out of Z_{p^t}"));
                }
                if t < self.l {
                    return Err(FuncError::ComponentShape("component codomain below domain radix"));
                }
                let top_div = pt.pow(count - 1);
                let table = self
                    .table
                    .iter()
                    .map(|&v| {
                        let mut acc = v / top_div % pt;
                        for (i, &ci) in c.iter().enumerate() {
                            let block = v / pt.pow(i as u32) % pt;
                            acc = (acc + mul_mod(ci, block, pt)) % pt;
                        }
                        acc
                    })
                    .collect();
                GbFunc::new(self.p, self.l, self.n, t, table)
            }
            ComponentForm::DigitMix { c } => {
                if self.l >= self.k {
                    return Err(FuncError::ComponentShape("digit mix requires l < k"));
                }
                if c.len() != (self.k - self.l) as usize {
                    return Err(FuncError::ComponentShape("digit mix needs k-l coefficients"));
                }
                if c.iter().any(|&ci| ci >= self.p) {
                    return Err(FuncError::ComponentShape("coefficient out of Z_p"));
                }
                let out_mod = self.p.pow(self.l);
                let high_div = self.p.pow(self.k - self.l);
                let shift = self.p.pow(self.l - 1);
                let table = self
                    .table
                    .iter()
                    .map(|&v| {
                        let high = v / high_div;
                        let mut mix = 0u64;
                        for (i, &ci) in c.iter().enumerate() {
                            let digit = v / self.p.pow(i as u32) % self.p;
                            mix = (mix + ci * digit) % self.p;
                        }
                        (high + shift * mix) % out_mod
                    })
                    .collect();
                GbFunc::new(self.p, self.l, self.n, self.l, table)
            }
        }
    }

    /// Pointwise scalar multiple `x ↦ a·f(x) mod p^k`.
    pub fn scale(&self, a: u64) -> GbFunc {
        let modulus = self.codomain_modulus();
        let a = a % modulus;
        let table = self.table.iter().map(|&v| mul_mod(a, v, modulus)).collect();
        GbFunc { p: self.p, l: self.l, n: self.n, k: self.k, table }
    }

    /// The generalized Gray image: a p-ary function on `n + k − 1`
    /// variables defined by `(x, y_0, …, y_{k−2}) ↦ a_{k−1}(x) + Σ_i a_i(x)·y_i`
    /// where `a_i` are the base-p digits of `f`. Requires `l = 1`.
    pub fn gray_image(&self) -> Result<GbFunc, FuncError> {
        if self.l != 1 {
            return Err(FuncError::BadShape("gray image requires domain radix exponent l = 1"));
        }
        let p = self.p;
        let k = self.k;
        let top_div = p.pow(k - 1);
        let image = GbFunc::from_fn(p, 1, self.n + k - 1, 1, |coords| {
            let x_idx = self.index_of(&coords[..self.n as usize]);
            let y = &coords[self.n as usize..];
            let v = self.table[x_idx];
            let mut acc = v / top_div;
            for (i, &yi) in y.iter().enumerate() {
                let digit = v / p.pow(i as u32) % p;
                acc = (acc + digit * yi) % p;
            }
            acc
        })?;
        debug_assert_eq!(image.table.len() as u64, self.table.len() as u64 * p.pow(k - 1));
        Ok(image)
    }
}

/// A base-`p^t` digit decomposition, least significant block first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digits {
    t: u32,
    blocks: Vec<GbFunc>,
}

impl Digits {
    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn blocks(&self) -> &[GbFunc] {
        &self.blocks
    }

    /// Reassembles `Σ_i p^{i·t}·b_i(x)`; inverse of the decomposition.
    pub fn recompose(&self) -> GbFunc {
        let first = &self.blocks[0];
        let p = first.p();
        let k: u32 = self.blocks.iter().map(|b| b.k()).sum();
        let pt = p.pow(self.t);
        let size = first.domain_size();
        let mut table = vec![0u64; size];
        for (i, block) in self.blocks.iter().enumerate() {
            let place = pt.pow(i as u32);
            for (slot, &v) in table.iter_mut().zip(block.table()) {
                *slot += place * v;
            }
        }
        GbFunc { p, l: first.l(), n: first.n(), k, table }
    }
}

/// Which linear mix of digit data defines a component function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ComponentForm {
    /// `h + c·p^{k−2t}·g` in `Z_{p^{k−t}}`, where `f = g + p^t·h`.
    PairSplit { t: u32, c: u64 },
    /// Nested form in `Z_{p^{k−(s−1)t}}`: the middle digit run of `f`
    /// plus `p^{k−st}·(Σ_i c_i·block_i + top block)` over base-`p^t`
    /// blocks. With `s = 1` this is `f` itself.
    Nested { t: u32, s: u32, c: Vec<u64> },
    /// `b_L + Σ_j c_j·b_j` in `Z_{p^t}` over the base-`p^t` blocks
    /// `b_1, …, b_L` of `f`, `k = L·t`.
    BlockMix { t: u32, c: Vec<u64> },
    /// `(f div p^{k−l}) + p^{l−1}·(Σ_i c_i·f_i)` in `Z_{p^l}` over the
    /// base-p digits `f_i` of `f`; the form for domains `Z_{p^l}^n` with
    /// `l < k`.
    DigitMix { c: Vec<u64> },
}

/// Pointwise `Z_p`-linear combination of p-ary functions sharing a shape.
pub fn linear_combination(funcs: &[&GbFunc], coeffs: &[u64]) -> Result<GbFunc, FuncError> {
    let first = funcs.first().ok_or(FuncError::MixShape("empty function list"))?;
    if funcs.len() != coeffs.len() {
        return Err(FuncError::MixShape("one coefficient per function required"));
    }
    let p = first.p();
    if funcs.iter().any(|f| f.k() != 1) {
        return Err(FuncError::MixShape("all functions must be p-ary (k = 1)"));
    }
    if funcs
        .iter()
        .any(|f| f.p() != p || f.l() != first.l() || f.n() != first.n())
    {
        return Err(FuncError::MixShape("all functions must share (p, l, n)"));
    }
    if coeffs.iter().any(|&c| c >= p) {
        return Err(FuncError::MixShape("coefficient out of Z_p"));
    }
    let size = first.domain_size();
    let mut table = vec![0u64; size];
    for (f, &c) in funcs.iter().zip(coeffs) {
        if c == 0 {
            continue;
        }
        for (slot, &v) in table.iter_mut().zip(f.table()) {
            *slot = (*slot + c * v) % p;
        }
    }
    GbFunc::new(p, first.l(), first.n(), 1, table)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructor_validation() {
        assert!(matches!(
            GbFunc::new(2, 1, 1, 1, vec![0, 0]),
            Err(FuncError::NotOddPrime(2))
        ));
        assert!(matches!(
            GbFunc::new(3, 2, 1, 1, vec![0; 9]),
            Err(FuncError::BadShape(_))
        ));
        assert!(matches!(
            GbFunc::new(3, 1, 2, 1, vec![0; 8]),
            Err(FuncError::TableLength { expected: 9, got: 8 })
        ));
        assert!(matches!(
            GbFunc::new(3, 1, 1, 1, vec![0, 3, 0]),
            Err(FuncError::ValueOutOfRange { index: 1, value: 3 })
        ));
    }

    #[test]
    fn index_roundtrip() {
        let f = GbFunc::from_fn(3, 2, 2, 2, |x| (x[0] + x[1]) % 9).unwrap();
        for idx in 0..f.domain_size() {
            let coords = f.coords_of(idx);
            assert_eq!(f.index_of(&coords), idx);
        }
        // x_1 is least significant
        assert_eq!(f.index_of(&[1, 0]), 1);
        assert_eq!(f.index_of(&[0, 1]), 9);
    }

    #[test]
    fn digits_of_constant() {
        let f = GbFunc::constant(3, 1, 2, 2, 5).unwrap();
        let d = f.digit_decompose(1).unwrap();
        assert_eq!(d.blocks().len(), 2);
        assert!(d.blocks()[0].table().iter().all(|&v| v == 2));
        assert!(d.blocks()[1].table().iter().all(|&v| v == 1));
        assert_eq!(d.recompose(), f);

        let zero = GbFunc::constant(3, 1, 2, 2, 0).unwrap();
        let dz = zero.digit_decompose(1).unwrap();
        assert!(dz.blocks().iter().all(|b| b.table().iter().all(|&v| v == 0)));
    }

    #[test]
    fn digits_with_remainder_block() {
        // k = 3, t = 2: blocks of exponent 2 and 1
        let f = GbFunc::from_fn(3, 1, 1, 3, |x| (x[0] * 7 + 5) % 27).unwrap();
        let d = f.digit_decompose(2).unwrap();
        assert_eq!(d.blocks().len(), 2);
        assert_eq!(d.blocks()[0].k(), 2);
        assert_eq!(d.blocks()[1].k(), 1);
        assert_eq!(d.recompose(), f);
    }

    #[test]
    fn digits_reject_bad_base() {
        let f = GbFunc::constant(3, 1, 1, 2, 0).unwrap();
        assert!(f.digit_decompose(0).is_err());
        assert!(f.digit_decompose(3).is_err());
        // l = 2 function: base-p digits would have codomain below the
        // domain radix
        let g = GbFunc::constant(3, 2, 1, 3, 0).unwrap();
        assert!(matches!(g.digit_decompose(1), Err(FuncError::DigitBase(_))));
    }

    #[test]
    fn split_examples() {
        let zero = GbFunc::constant(3, 1, 1, 2, 0).unwrap();
        let (g, h) = zero.split_low_high(1).unwrap();
        assert!(g.table().iter().all(|&v| v == 0));
        assert!(h.table().iter().all(|&v| v == 0));

        let five = GbFunc::constant(3, 1, 1, 2, 5).unwrap();
        let (g, h) = five.split_low_high(1).unwrap();
        assert!(g.table().iter().all(|&v| v == 2));
        assert!(h.table().iter().all(|&v| v == 1));

        // k = t rejected
        let f = GbFunc::constant(3, 1, 1, 1, 0).unwrap();
        assert!(f.split_low_high(1).is_err());
    }

    #[test]
    fn split_recombines() {
        let f = GbFunc::from_fn(3, 1, 2, 3, |x| (5 * x[0] + 11 * x[1] + 2) % 27).unwrap();
        let (g, h) = f.split_low_high(1).unwrap();
        for i in 0..f.domain_size() {
            assert_eq!(g.value(i) + 3 * h.value(i), f.value(i));
        }
    }

    #[test]
    fn component_block_mix_zero_is_top_block() {
        let f = GbFunc::from_fn(3, 1, 1, 2, |x| (x[0] * 5) % 9).unwrap();
        let top = f.component(&ComponentForm::BlockMix { t: 1, c: vec![0] }).unwrap();
        let d = f.digit_decompose(1).unwrap();
        assert_eq!(top, d.blocks()[1]);
    }

    #[test]
    fn component_nested_s1_is_identity() {
        let f = GbFunc::from_fn(3, 1, 2, 2, |x| (x[0] * 4 + x[1]) % 9).unwrap();
        let g = f.component(&ComponentForm::Nested { t: 1, s: 1, c: vec![] }).unwrap();
        assert_eq!(g, f);
    }

    #[test]
    fn component_pair_split_example() {
        // f = g + 3h with g ≡ 1, h(x) = x_1, p = 3, k = 2, t = 1;
        // c = 2 gives x ↦ x_1 + 2 (mod 3)
        let f = GbFunc::from_fn(3, 1, 1, 2, |x| 1 + 3 * x[0]).unwrap();
        let comp = f.component(&ComponentForm::PairSplit { t: 1, c: 2 }).unwrap();
        assert_eq!(comp.table(), &[2, 0, 1]);
    }

    #[test]
    fn component_digit_mix() {
        // l = 2, k = 3: digit mix reduces the top l digits plus a Z_p mix
        // of the low k−l digits
        let f = GbFunc::from_fn(3, 2, 1, 3, |x| (x[0] * x[0] * 3) % 27).unwrap();
        let comp = f.component(&ComponentForm::DigitMix { c: vec![1] }).unwrap();
        assert_eq!(comp.k(), 2);
        for (i, &v) in f.table().iter().enumerate() {
            let expected = (v / 3 + 3 * (v % 3)) % 9;
            assert_eq!(comp.value(i), expected);
        }
        // wrong arity
        assert!(f.component(&ComponentForm::DigitMix { c: vec![] }).is_err());
    }

    #[test]
    fn scale_examples() {
        let f = GbFunc::from_fn(3, 1, 2, 2, |x| (x[0] + 2 * x[1]) % 9).unwrap();
        assert_eq!(f.scale(1), f);
        assert!(f.scale(0).table().iter().all(|&v| v == 0));
        let five = GbFunc::constant(3, 1, 1, 2, 5).unwrap();
        assert!(five.scale(3).table().iter().all(|&v| v == 6));
    }

    #[test]
    fn scale_composes() {
        let f = GbFunc::from_fn(3, 1, 2, 2, |x| (4 * x[0] + 7 * x[1] + 3) % 9).unwrap();
        assert_eq!(f.scale(2).scale(5), f.scale(2 * 5 % 9));
    }

    #[test]
    fn gray_image_k1_is_identity() {
        let f = GbFunc::from_fn(3, 1, 2, 1, |x| (x[0] * x[1]) % 3).unwrap();
        assert_eq!(f.gray_image().unwrap(), f);
    }

    #[test]
    fn gray_image_k2_formula() {
        // f = a_0 + 3a_1 → G(f)(x, y_0) = a_1(x) + a_0(x)·y_0
        let f = GbFunc::from_fn(3, 1, 1, 2, |x| (x[0] + 3 * (2 * x[0] % 3)) % 9).unwrap();
        let g = f.gray_image().unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.k(), 1);
        assert_eq!(g.domain_size(), 9);
        for idx in 0..g.domain_size() {
            let coords = g.coords_of(idx);
            let (x, y0) = (coords[0], coords[1]);
            let v = f.value(x as usize);
            let (a0, a1) = (v % 3, v / 3);
            assert_eq!(g.value(idx), (a1 + a0 * y0) % 3);
        }
        // restriction y = 0 equals the top digit
        for x in 0..3usize {
            assert_eq!(g.value(x), f.value(x) / 3);
        }

        let zero = GbFunc::constant(3, 1, 1, 2, 0).unwrap();
        assert!(zero.gray_image().unwrap().table().iter().all(|&v| v == 0));
    }

    #[test]
    fn gray_image_rejects_wide_domain() {
        let f = GbFunc::constant(3, 2, 1, 2, 0).unwrap();
        assert!(f.gray_image().is_err());
    }

    #[test]
    fn linear_combination_cases() {
        let a = GbFunc::from_fn(3, 1, 2, 1, |x| (x[0] * x[1]) % 3).unwrap();
        let b = GbFunc::from_fn(3, 1, 2, 1, |x| (x[0] + x[1]) % 3).unwrap();

        let zero = linear_combination(&[&a, &b], &[0, 0]).unwrap();
        assert!(zero.table().iter().all(|&v| v == 0));

        assert_eq!(linear_combination(&[&a], &[1]).unwrap(), a);

        // a + 2a = 3a = 0 in characteristic 3
        let sum = linear_combination(&[&a, &a], &[1, 2]).unwrap();
        assert!(sum.table().iter().all(|&v| v == 0));

        let c = GbFunc::constant(3, 1, 1, 1, 0).unwrap();
        assert!(linear_combination(&[&a, &c], &[1, 1]).is_err());
    }
}
