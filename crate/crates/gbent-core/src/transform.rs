//! Exact generalized Walsh–Hadamard transforms.
//!
//! All spectra are unnormalized integral sums
//! `S_f(u) = Σ_x ζ_{p^l}^{−u·x}·ζ_{p^k}^{f(x)}` held as [`CycInt`] values;
//! the usual `p^{−ln/2}` normalization is carried symbolically in
//! [`Spectrum::norm_exp`], so the gbent condition `|H_f(u)| = 1` becomes
//! the exact identity `|S_f(u)|² = p^{ln}`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::cyclotomic::{CycInt, CycloParams};
use crate::func::GbFunc;

/// The full table of unnormalized Walsh sums of one function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spectrum {
    params: CycloParams,
    p: u64,
    l: u32,
    n: u32,
    norm_exp: u32,
    table: Vec<CycInt>,
}

impl Spectrum {
    /// Ring of the spectrum values, `Z[ζ_{p^k}]`.
    pub fn params(&self) -> CycloParams {
        self.params
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

    /// `l·n`; the normalized transform is `p^{−norm_exp/2}·S_f`.
    pub fn norm_exp(&self) -> u32 {
        self.norm_exp
    }

    pub fn table(&self) -> &[CycInt] {
        &self.table
    }

    pub fn value(&self, u_index: usize) -> &CycInt {
        &self.table[u_index]
    }

    /// Exact Parseval identity `Σ_u |S_f(u)|² = p^{2ln}`; holds for every
    /// transform of a genuine value table, so it doubles as a self-test.
    pub fn parseval_check(&self) -> bool {
        let mut acc = CycInt::zero(self.params);
        for s in &self.table {
            acc.add_assign_unchecked(&s.norm_sq());
        }
        acc == CycInt::from_bigint(self.params, BigInt::from(self.p).pow(2 * self.norm_exp))
    }
}

fn spectrum_ring(f: &GbFunc) -> CycloParams {
    CycloParams::new(f.p(), f.k()).expect("GbFunc carries valid (p, k)")
}

/// Kernel exponent of `ζ_{p^l}^{−j·x}` inside `Z[ζ_{p^k}]`, for one
/// coordinate pair `(j, x)`.
fn kernel_table(params: CycloParams, radix: u64, embed: u64) -> Vec<Vec<u64>> {
    let pk = params.modulus();
    (0..radix)
        .map(|j| {
            (0..radix)
                .map(|x| (radix - j * x % radix) % radix * embed % pk)
                .collect()
        })
        .collect()
}

/// Direct double-loop evaluation of every Walsh sum. Quadratic in the
/// table size; the oracle against which [`wht_fast`] is checked.
pub fn wht_naive(f: &GbFunc) -> Spectrum {
    let params = spectrum_ring(f);
    let pk = params.modulus();
    let radix = f.domain_radix();
    let embed = params.embed_factor(f.l());
    let size = f.domain_size();
    let coords: Vec<Vec<u64>> = (0..size).map(|i| f.coords_of(i)).collect();

    let mut table = Vec::with_capacity(size);
    for u in &coords {
        let mut counts = vec![0i64; pk as usize];
        for (x, xc) in coords.iter().enumerate() {
            let dot = u
                .iter()
                .zip(xc)
                .fold(0u64, |acc, (&ui, &xi)| (acc + ui * xi) % radix);
            let e = ((radix - dot) % radix * embed + f.value(x)) % pk;
            counts[e as usize] += 1;
        }
        table.push(CycInt::from_exponent_counts(params, &counts));
    }
    Spectrum { params, p: f.p(), l: f.l(), n: f.n(), norm_exp: f.l() * f.n(), table }
}

/// Butterfly evaluation: one `p^l`-point character transform along each
/// coordinate, `O(n·p^{l(n+1)})` ring operations instead of `O(p^{2ln})`.
/// Output is identical to [`wht_naive`].
pub fn wht_fast(f: &GbFunc) -> Spectrum {
    let params = spectrum_ring(f);
    let radix = f.domain_radix() as usize;
    let embed = params.embed_factor(f.l());
    let size = f.domain_size();
    let kernel = kernel_table(params, radix as u64, embed);

    let mut cur: Vec<CycInt> = (0..size)
        .map(|x| CycInt::root(params, f.value(x) as i64))
        .collect();

    let mut stride = 1usize;
    for _ in 0..f.n() {
        let block = stride * radix;
        for base in (0..size).step_by(block) {
            for off in 0..stride {
                let idx = |t: usize| base + off + t * stride;
                let mut outs: Vec<CycInt> = Vec::with_capacity(radix);
                for row in kernel.iter() {
                    let mut acc = CycInt::zero(params);
                    for t in 0..radix {
                        cur[idx(t)].rotate_into_acc(row[t], &mut acc);
                    }
                    outs.push(acc);
                }
                for (t, out) in outs.into_iter().enumerate() {
                    cur[idx(t)] = out;
                }
            }
        }
        stride = block;
    }
    Spectrum { params, p: f.p(), l: f.l(), n: f.n(), norm_exp: f.l() * f.n(), table: cur }
}

/// Exact inversion identity: `p^{ln}·ζ_{p^k}^{f(x)} = Σ_u ζ_{p^l}^{u·x}·S_f(u)`
/// for every `x`. True for every spectrum actually computed from `f`.
pub fn inverse_check(f: &GbFunc, spectrum: &Spectrum) -> bool {
    let params = spectrum.params();
    if spectrum.p != f.p()
        || spectrum.l != f.l()
        || spectrum.n != f.n()
        || params.modulus() != f.codomain_modulus()
    {
        return false;
    }
    let pk = params.modulus();
    let radix = f.domain_radix();
    let embed = params.embed_factor(f.l());
    let size = f.domain_size();
    let coords: Vec<Vec<u64>> = (0..size).map(|i| f.coords_of(i)).collect();
    let scale = BigInt::from(f.p()).pow(spectrum.norm_exp);

    for (x, xc) in coords.iter().enumerate() {
        let lhs = CycInt::root(params, f.value(x) as i64).mul_scalar(&scale);
        let mut rhs = CycInt::zero(params);
        for (u, uc) in coords.iter().enumerate() {
            let dot = uc
                .iter()
                .zip(xc)
                .fold(0u64, |acc, (&ui, &xi)| (acc + ui * xi) % radix);
            spectrum.table[u].rotate_into_acc(dot * embed % pk, &mut rhs);
        }
        if lhs != rhs {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::func::GbFunc;

    /// Tiny deterministic generator for in-module randomized checks.
    struct Lcg(u64);

    impl Lcg {
        fn next(&mut self) -> u64 {
            self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            self.0 >> 33
        }
    }

    fn random_func(rng: &mut Lcg, p: u64, l: u32, n: u32, k: u32) -> GbFunc {
        let modulus = p.pow(k);
        GbFunc::from_fn(p, l, n, k, |_| rng.next() % modulus).unwrap()
    }

    #[test]
    fn zero_function_spectrum() {
        let f = GbFunc::constant(3, 1, 2, 2, 0).unwrap();
        let s = wht_naive(&f);
        let params = s.params();
        assert_eq!(*s.value(0), CycInt::from_i64(params, 9));
        for u in 1..9 {
            assert!(s.value(u).is_zero(), "u = {u}");
        }
    }

    #[test]
    fn linear_function_single_spike() {
        // f(x) = 1·x_1 + 2·x_2 into Z_3: spike of height p^n at u = (1, 2)
        let f = GbFunc::from_fn(3, 1, 2, 1, |x| (x[0] + 2 * x[1]) % 3).unwrap();
        let s = wht_naive(&f);
        let spike = f.index_of(&[1, 2]);
        for u in 0..9 {
            if u == spike {
                assert_eq!(*s.value(u), CycInt::from_i64(s.params(), 9));
            } else {
                assert!(s.value(u).is_zero());
            }
        }
    }

    #[test]
    fn quadratic_is_bent() {
        let f = GbFunc::from_fn(3, 1, 2, 1, |x| (x[0] * x[1]) % 3).unwrap();
        let s = wht_naive(&f);
        let nine = CycInt::from_i64(s.params(), 9);
        for u in 0..9 {
            assert_eq!(s.value(u).norm_sq(), nine, "u = {u}");
        }
    }

    #[test]
    fn fast_matches_naive_small() {
        let mut rng = Lcg(0xfeed);
        let shapes = [(3u64, 1u32, 1u32, 1u32), (3, 1, 2, 2), (3, 1, 3, 2), (3, 2, 1, 2), (3, 2, 2, 3), (5, 1, 2, 2)];
        for &(p, l, n, k) in &shapes {
            for _ in 0..3 {
                let f = random_func(&mut rng, p, l, n, k);
                assert_eq!(wht_fast(&f), wht_naive(&f), "shape ({p},{l},{n},{k})");
            }
        }
        let zero = GbFunc::constant(3, 1, 2, 2, 0).unwrap();
        assert_eq!(wht_fast(&zero), wht_naive(&zero));
    }

    #[test]
    fn inversion_identity() {
        let mut rng = Lcg(0xbead);
        let zero = GbFunc::constant(3, 1, 2, 2, 0).unwrap();
        assert!(inverse_check(&zero, &wht_fast(&zero)));
        for &(p, l, n, k) in &[(3u64, 1u32, 2u32, 2u32), (5, 1, 1, 2), (3, 2, 1, 3)] {
            let f = random_func(&mut rng, p, l, n, k);
            let s = wht_fast(&f);
            assert!(inverse_check(&f, &s), "shape ({p},{l},{n},{k})");
            assert!(s.parseval_check(), "shape ({p},{l},{n},{k})");
        }
    }

    #[test]
    fn inverse_check_rejects_foreign_spectrum() {
        let f = GbFunc::constant(3, 1, 2, 2, 0).unwrap();
        let g = GbFunc::constant(3, 1, 2, 2, 1).unwrap();
        assert!(!inverse_check(&g, &wht_fast(&f)));
    }
}
