//! The Buchsbaum-Rim function and polynomial, Hilbert polynomials of Koszul
//! homology, Euler characteristics of 𝔅•, and the identity checks relating
//! them.

mod poly;
mod verify;

use std::collections::HashMap;
use std::sync::Mutex;

use log::debug;
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{Monomial, MonomialOrder, PolyRing, Polynomial};
use crate::brcomplex::{assemble_b, finite_lengths, koszul_strand, InputDatum};
use crate::combinat::monomials_of_degree;
use crate::error::{Error, Result};
use crate::groebner::{Length, SVec};
use crate::modpres::euler_characteristic;

pub use poly::{newton_interpolate, HilbertPoly, HilbertPolyJson};
pub use verify::{
    grade_report, hilbert_samuel_multiplicity, partial_sums, verify_identities, verify_serre,
    GradeReport, GradeRow, NuRow, OracleRow, PartialSumRow, SerreReport, TopRow,
    VerificationReport,
};

/// Stability margin and back-off cap for every interpolation window.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Sampling {
    pub margin: usize,
    pub cap: i64,
}

impl Default for Sampling {
    fn default() -> Self {
        Sampling { margin: 4, cap: 40 }
    }
}

/// Result of the multiplicity computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BrResult {
    pub br: i128,
    pub is_parameter: bool,
    pub d: usize,
    pub br_poly: HilbertPoly,
}

/// Products γ^β for |β| = ν, expanded in the degree-ν T-monomial basis.
pub(crate) fn gamma_products(datum: &InputDatum, nu: u32) -> Vec<Vec<Polynomial>> {
    let g = datum.g();
    let ring = datum.base().poly();
    // (last index used, coefficients in degree-d basis)
    let mut level: Vec<(usize, Vec<Polynomial>)> = vec![(0, vec![Polynomial::one(ring)])];
    for d in 0..nu {
        let src = monomials_of_degree(g, d);
        let dst = monomials_of_degree(g, d + 1);
        let idx: HashMap<&[u32], usize> =
            dst.iter().enumerate().map(|(i, e)| (e.as_slice(), i)).collect();
        let mut next = Vec::new();
        for (last, v) in &level {
            for j in *last..datum.f() {
                let mut w = vec![Polynomial::zero(ring); dst.len()];
                for (a, coeff) in src.iter().zip(v) {
                    if coeff.is_zero() {
                        continue;
                    }
                    for i in 0..g {
                        let c = &datum.phi()[i][j];
                        if c.is_zero() {
                            continue;
                        }
                        let mut e = a.clone();
                        e[i] += 1;
                        let k = idx[e.as_slice()];
                        w[k] = w[k].combine(&coeff.mul_unchecked(c), false);
                    }
                }
                next.push((j, w));
            }
        }
        level = next;
    }
    level.into_iter().map(|(_, v)| v).collect()
}

/// Generators, in the free coordinates of (S ⊗ L)_ν, of the submodule whose
/// cokernel is (S / R[γ])_ν ⊗ L.
pub(crate) fn br_relations(datum: &InputDatum, nu: u32) -> (usize, Vec<SVec>) {
    let ctx = datum.base().ctx();
    let l = datum.l();
    let lr = l.rank();
    let nmon = monomials_of_degree(datum.g(), nu).len();
    let mut rels: Vec<SVec> = Vec::new();
    for b in 0..nmon as u32 {
        for r in l.relation_svecs() {
            rels.push(r.shift(b * lr as u32));
        }
    }
    for v in gamma_products(datum, nu) {
        for s in 0..lr as u32 {
            let mut terms = Vec::new();
            for (a, p) in v.iter().enumerate() {
                for (m, c) in p.terms() {
                    terms.push((a as u32 * lr as u32 + s, m.clone(), *c));
                }
            }
            let sv = SVec::from_terms(ctx.field, terms, ctx.order);
            if !sv.is_zero() {
                rels.push(sv);
            }
        }
    }
    (nmon * lr, rels)
}

/// P_Φ(ν, L) = ℓ((S / R[γ])_ν ⊗ L).
pub fn br_function(datum: &InputDatum, nu: i64) -> Result<u64> {
    datum.require_certificate()?;
    if nu < 0 {
        return Err(Error::InvalidInput("br_function needs nu >= 0".into()));
    }
    let (rank, rels) = br_relations(datum, nu as u32);
    match datum.base().module_gb(rank, rels).quotient_kdim() {
        Length::Finite(n) => Ok(n),
        Length::Infinite => Err(Error::CertificateMissing),
    }
}

/// Oracle value of P_Φ(ν, L): the γ-products are multiplied out as honest
/// polynomials in k[x, T] and the length is read off by dense linear algebra
/// in the truncation degree B = D + (max entry degree) ν + 1.
pub fn br_function_dense(datum: &InputDatum, nu: u32) -> Result<u64> {
    datum.require_certificate()?;
    let ring = datum.base().poly();
    let (n, g) = (ring.nvars(), datum.g());
    let mut vars = ring.vars.clone();
    vars.extend((0..g).map(|i| format!("_T{i}")));
    let big = PolyRing::new(ring.field, vars, MonomialOrder::Grevlex);
    let lift = |p: &Polynomial, t: Option<usize>| -> Polynomial {
        let terms = p
            .terms()
            .iter()
            .map(|(m, c)| {
                let mut e = m.exponents().to_vec();
                e.resize(n + g, 0);
                if let Some(i) = t {
                    e[n + i] += 1;
                }
                (Monomial::from_exponents(&e), *c)
            })
            .collect();
        Polynomial::from_terms(&big, terms)
    };
    let gammas: Vec<Polynomial> = (0..datum.f())
        .map(|j| {
            (0..g).fold(Polynomial::zero(&big), |acc, i| {
                acc.add(&lift(&datum.phi()[i][j], Some(i))).expect("same ring")
            })
        })
        .collect();

    let basis = monomials_of_degree(g, nu);
    let index: HashMap<Vec<u32>, u32> = basis
        .iter()
        .enumerate()
        .map(|(i, e)| (e.clone(), i as u32))
        .collect();
    let lr = datum.l().rank() as u32;
    let ctx = datum.base().ctx();
    let mut rels: Vec<SVec> = Vec::new();
    for b in 0..basis.len() as u32 {
        for r in datum.l().relation_svecs() {
            rels.push(r.shift(b * lr));
        }
    }
    let mut products = vec![(0usize, Polynomial::one(&big))];
    for _ in 0..nu {
        let mut next = Vec::new();
        for (last, p) in &products {
            for (j, gj) in gammas.iter().enumerate().skip(*last) {
                next.push((j, p.mul(gj).expect("same ring")));
            }
        }
        products = next;
    }
    for (_, p) in &products {
        for s in 0..lr {
            let terms = p
                .terms()
                .iter()
                .map(|(m, c)| {
                    let e = m.exponents();
                    let pos = index[&e[n..].to_vec()];
                    (pos * lr + s, Monomial::from_exponents(&e[..n]), *c)
                })
                .collect();
            rels.push(SVec::from_terms(ctx.field, terms, ctx.order));
        }
    }
    let d = datum.support_length().finite().unwrap_or(0) as u32;
    let maxdeg = datum
        .phi()
        .iter()
        .flatten()
        .filter_map(|p| p.degree())
        .max()
        .unwrap_or(0);
    let start = d + maxdeg * nu + 1;
    crate::oracle::local_length(datum.base(), basis.len() * lr as usize, &rels, start, start + 64)
}

/// Samples `f` on windows ν0..ν0+D+margin, doubling ν0 while the samples
/// are not yet polynomial of degree <= D.
fn interpolate_tail<F>(start: i64, degree: usize, sampling: Sampling, f: F) -> Result<HilbertPoly>
where
    F: Fn(i64) -> Result<i128> + Sync,
{
    let mut nu0 = start;
    loop {
        let count = degree + 1 + sampling.margin;
        let samples: Vec<(i64, i128)> = (nu0..nu0 + count as i64)
            .into_par_iter()
            .map(|nu| f(nu).map(|v| (nu, v)))
            .collect::<Result<_>>()?;
        match newton_interpolate(&samples, degree) {
            Ok(p) => return Ok(p),
            Err(Error::NotYetPolynomial(_)) => {
                debug!("window at nu0 = {nu0} not yet polynomial");
                let next = (nu0 * 2).max(nu0 + 1);
                if next > sampling.cap {
                    return Err(Error::NonPolynomialBehavior(nu0));
                }
                nu0 = next;
            }
            Err(e) => return Err(e),
        }
    }
}

pub fn br_polynomial(datum: &InputDatum, sampling: Sampling) -> Result<HilbertPoly> {
    datum.require_certificate()?;
    let d = datum.expected_degree()?;
    interpolate_tail(1, d, sampling, |nu| br_function(datum, nu).map(|v| v as i128))
}

/// br(M, L): the Newton coefficient at index d = Dim(L) + g - 1.
pub fn br_multiplicity(datum: &InputDatum, sampling: Sampling) -> Result<BrResult> {
    let br_poly = br_polynomial(datum, sampling)?;
    let d = datum.expected_degree()?;
    Ok(BrResult {
        br: br_poly.coeff(d),
        is_parameter: datum.is_parameter()?,
        d,
        br_poly,
    })
}

/// Homology lengths of the Koszul strands, cached per ν.
pub struct KoszulTable<'a> {
    datum: &'a InputDatum,
    cache: Mutex<HashMap<i64, Vec<u64>>>,
}

impl<'a> KoszulTable<'a> {
    pub fn new(datum: &'a InputDatum) -> Self {
        KoszulTable {
            datum,
            cache: Mutex::new(HashMap::new()),
        }
    }

    /// ℓ(H_j(γ, S ⊗ L)_ν) for j = 0..=f.
    pub fn lengths(&self, nu: i64) -> Result<Vec<u64>> {
        if let Some(v) = self.cache.lock().unwrap().get(&nu) {
            return Ok(v.clone());
        }
        let strand = koszul_strand(self.datum, nu)?;
        let mut v = finite_lengths(&strand.complex)?;
        v.resize(self.datum.f() + 1, 0);
        self.cache.lock().unwrap().insert(nu, v.clone());
        Ok(v)
    }

    /// P_{H_j^sat} for every j, on one shared window starting at f - g + 1.
    pub fn hilbert_polys(&self, sampling: Sampling) -> Result<Vec<HilbertPoly>> {
        self.datum.require_certificate()?;
        let d = self.datum.expected_degree()?;
        let f = self.datum.f();
        let start = (f - self.datum.g() + 1) as i64;
        let mut nu0 = start;
        loop {
            let count = d + 1 + sampling.margin;
            let rows: Vec<(i64, Vec<u64>)> = (nu0..nu0 + count as i64)
                .into_par_iter()
                .map(|nu| self.lengths(nu).map(|v| (nu, v)))
                .collect::<Result<_>>()?;
            let polys: Result<Vec<HilbertPoly>> = (0..=f)
                .map(|j| {
                    let s: Vec<(i64, i128)> = rows.iter().map(|(n, v)| (*n, v[j] as i128)).collect();
                    newton_interpolate(&s, d)
                })
                .collect();
            match polys {
                Ok(p) => return Ok(p),
                Err(Error::NotYetPolynomial(_)) => {
                    let next = (nu0 * 2).max(nu0 + 1);
                    if next > sampling.cap {
                        return Err(Error::NonPolynomialBehavior(nu0));
                    }
                    nu0 = next;
                }
                Err(e) => return Err(e),
            }
        }
    }
}

pub fn koszul_hilbert_poly(datum: &InputDatum, j: usize, sampling: Sampling) -> Result<HilbertPoly> {
    if j > datum.f() {
        return Err(Error::InvalidInput(format!("j must lie in 0..={}", datum.f())));
    }
    Ok(KoszulTable::new(datum).hilbert_polys(sampling)?.swap_remove(j))
}

/// χ(𝔅•(Φ, L, ν)).
pub fn chi_b(datum: &InputDatum, nu: i64) -> Result<i64> {
    datum.require_certificate()?;
    let b = assemble_b(datum, nu)?;
    let lengths = b.complex.homology_lengths()?;
    euler_characteristic(&lengths, b.offset())
}

/// ρ_j(ν), the Koszul homology Hilbert polynomial evaluated at ν.
pub fn rho(datum: &InputDatum, j: usize, nu: i64, sampling: Sampling) -> Result<i128> {
    Ok(koszul_hilbert_poly(datum, j, sampling)?.eval(nu))
}

/// Serializable summary of a `BrResult`.
#[derive(Debug, Clone, Serialize)]
pub struct BrJson {
    pub br: crate::report::Int,
    pub is_parameter: bool,
    pub d: usize,
    pub f: usize,
    pub g: usize,
    pub br_poly: HilbertPolyJson,
}

impl BrResult {
    pub fn to_json(&self, datum: &InputDatum) -> BrJson {
        BrJson {
            br: crate::report::Int(self.br),
            is_parameter: self.is_parameter,
            d: self.d,
            f: datum.f(),
            g: datum.g(),
            br_poly: self.br_poly.to_json(),
        }
    }
}

/// Caps the global rayon pool at `BRIMKIT_THREADS` when set. Safe to call
/// more than once; only the first call has an effect.
pub fn init_thread_pool() {
    if let Some(n) = std::env::var("BRIMKIT_THREADS")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
    {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

#[cfg(test)]
mod tests;
