use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use super::{
    br_function, br_function_dense, br_multiplicity, chi_b, interpolate_tail, BrJson, HilbertPoly,
    HilbertPolyJson, KoszulTable, Sampling,
};
use crate::arith::Polynomial;
use crate::brcomplex::{assemble_b, homology_length_vector, InputDatum};
use crate::combinat::monomials_of_degree;
use crate::error::{Error, Result};
use crate::groebner::{krull_dim, origin_supported, FreeVector, Length, QuotientRing};
use crate::modpres::{ext_grade, ext_module, hom_into, hom_module, sym_power, PresentedModule};
use crate::report::{ints, Int};

fn sign(j: usize) -> i128 {
    if j % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Per-ν row of the identity table.
#[derive(Debug, Clone, Serialize)]
pub struct NuRow {
    pub nu: i64,
    pub chi: i64,
    pub rho: Vec<Int>,
    pub rho_alternating: Int,
    pub pass: bool,
}

/// χ^j(ν) = Σ_{i>=j} (-1)^(i-j) P_{H_i}(ν) for every j.
#[derive(Debug, Clone, Serialize)]
pub struct PartialSumRow {
    pub nu: i64,
    pub values: Vec<Int>,
    pub all_positive: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleRow {
    pub nu: u32,
    pub groebner: u64,
    pub dense: u64,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub nu_range: (i64, i64),
    pub multiplicity: BrJson,
    pub br: Int,
    pub is_parameter: bool,
    pub rows: Vec<NuRow>,
    pub chi_rho_pass: bool,
    pub koszul_polys: Vec<HilbertPolyJson>,
    pub alternating_poly: HilbertPolyJson,
    pub tserre_constant: Option<Int>,
    pub tserre_expected: Int,
    pub tserre_pass: bool,
    pub chi_constant_pass: bool,
    pub sheaf_chi: Vec<Int>,
    pub sheaf_chi_alternating: Int,
    pub sheaf_chi_pass: bool,
    pub degree_bound: usize,
    pub degree_bound_pass: bool,
    pub partial_sums: Vec<PartialSumRow>,
    pub oracle: Option<Vec<OracleRow>>,
    pub oracle_pass: bool,
    pub all_pass: bool,
}

pub fn partial_sums(polys: &[HilbertPoly], range: (i64, i64)) -> Vec<PartialSumRow> {
    (range.0..=range.1)
        .map(|nu| {
            let vals: Vec<i128> = (0..polys.len())
                .map(|j| {
                    polys[j..]
                        .iter()
                        .enumerate()
                        .map(|(k, p)| sign(k) * p.eval(nu))
                        .sum()
                })
                .collect();
            PartialSumRow {
                nu,
                all_positive: vals.iter().all(|&v| v > 0),
                values: vals.into_iter().map(Int).collect(),
            }
        })
        .collect()
}

/// Runs every identity check on ν in `range`; `oracle` adds the dense
/// cross-check of the BR function for ν = 1, 2, 3.
pub fn verify_identities(
    datum: &InputDatum,
    range: (i64, i64),
    sampling: Sampling,
    oracle: bool,
) -> Result<VerificationReport> {
    datum.require_certificate()?;
    if range.0 > range.1 {
        return Err(Error::InvalidInput(format!(
            "empty range [{}, {}]",
            range.0, range.1
        )));
    }
    let br = br_multiplicity(datum, sampling)?;
    let table = KoszulTable::new(datum);
    let polys = table.hilbert_polys(sampling)?;
    let d = br.d;

    let chis: Vec<(i64, i64)> = (range.0..=range.1)
        .into_par_iter()
        .map(|nu| chi_b(datum, nu).map(|c| (nu, c)))
        .collect::<Result<_>>()?;
    let rows: Vec<NuRow> = chis
        .iter()
        .map(|&(nu, chi)| {
            let rho: Vec<i128> = polys.iter().map(|p| p.eval(nu)).collect();
            let alt: i128 = rho.iter().enumerate().map(|(j, v)| sign(j) * v).sum();
            NuRow {
                nu,
                chi,
                rho: ints(&rho),
                rho_alternating: Int(alt),
                pass: alt == chi as i128,
            }
        })
        .collect();
    let chi_rho_pass = rows.iter().all(|r| r.pass);

    let weighted: Vec<(i128, &HilbertPoly)> =
        polys.iter().enumerate().map(|(j, p)| (sign(j), p)).collect();
    let alternating = HilbertPoly::linear_combination(&weighted);
    let expected = if br.is_parameter { br.br } else { 0 };
    let tserre_constant = alternating.is_constant().then(|| alternating.coeff(0));
    let tserre_pass = tserre_constant == Some(expected);
    let chi_constant_pass = rows.windows(2).all(|w| w[0].chi == w[1].chi);

    let sheaf_chi: Vec<i128> = polys.iter().map(|p| p.eval(0)).collect();
    let sheaf_alt: i128 = sheaf_chi.iter().enumerate().map(|(j, v)| sign(j) * v).sum();
    let sheaf_chi_pass = sheaf_alt == expected;

    let degree_bound_pass = polys
        .iter()
        .chain(std::iter::once(&br.br_poly))
        .all(|p| p.effective_degree().map_or(true, |e| e <= d));

    let oracle_rows = if oracle {
        let rows: Vec<OracleRow> = (1..=3u32)
            .into_par_iter()
            .map(|nu| {
                let groebner = br_function(datum, nu as i64)?;
                let dense = br_function_dense(datum, nu)?;
                Ok(OracleRow {
                    nu,
                    groebner,
                    dense,
                    pass: groebner == dense,
                })
            })
            .collect::<Result<_>>()?;
        Some(rows)
    } else {
        None
    };
    let oracle_pass = oracle_rows
        .as_ref()
        .map_or(true, |r| r.iter().all(|row| row.pass));

    let all_pass = chi_rho_pass && tserre_pass && chi_constant_pass && sheaf_chi_pass && degree_bound_pass && oracle_pass;
    Ok(VerificationReport {
        nu_range: range,
        multiplicity: br.to_json(datum),
        br: Int(br.br),
        is_parameter: br.is_parameter,
        rows,
        chi_rho_pass,
        koszul_polys: polys.iter().map(|p| p.to_json()).collect(),
        alternating_poly: alternating.to_json(),
        tserre_constant: tserre_constant.map(Int),
        tserre_expected: Int(expected),
        tserre_pass,
        chi_constant_pass,
        sheaf_chi: ints(&sheaf_chi),
        sheaf_chi_alternating: Int(sheaf_alt),
        sheaf_chi_pass,
        degree_bound: d,
        degree_bound_pass,
        partial_sums: partial_sums(&polys, range),
        oracle: oracle_rows,
        oracle_pass,
        all_pass,
    })
}

/// e(I) through ℓ(R/I^ν), with I^ν generated by all ν-fold products.
pub fn hilbert_samuel_multiplicity(
    base: &Arc<QuotientRing>,
    ideal: &[Polynomial],
    sampling: Sampling,
) -> Result<(i128, HilbertPoly)> {
    let dim = krull_dim(base.ideal_gb())?
        .ok_or_else(|| Error::InvalidInput("base ring is zero".into()))?;
    let gens: Vec<&Polynomial> = ideal.iter().filter(|p| !p.is_zero()).collect();
    let length = |nu: i64| -> Result<i128> {
        let mut powers: Vec<Polynomial> = Vec::new();
        for e in monomials_of_degree(gens.len(), nu as u32) {
            let mut p = Polynomial::one(base.poly());
            for (g, &k) in gens.iter().zip(&e) {
                p = p.mul(&g.pow(k))?;
            }
            powers.push(p);
        }
        let m = PresentedModule::cyclic(base, &powers)?;
        match m.length() {
            Length::Finite(n) => Ok(n as i128),
            Length::Infinite => Err(Error::NotIdealOfDefinition),
        }
    };
    let p = interpolate_tail(1, dim, sampling, length)?;
    Ok((p.coeff(dim), p))
}

#[derive(Debug, Clone, Serialize)]
pub struct SerreReport {
    pub f: usize,
    pub lengths: Vec<u64>,
    pub alternating_sum: i64,
    pub is_parameter: bool,
    pub br: Int,
    pub hilbert_samuel: Int,
    pub expected: Int,
    pub euler_pass: bool,
    pub additivity_pass: bool,
    pub all_pass: bool,
}

/// The g = 1 case: Koszul homology of (a_1..a_f) against e((a), R).
pub fn verify_serre(
    base: &Arc<QuotientRing>,
    a: &[Polynomial],
    sampling: Sampling,
) -> Result<SerreReport> {
    if a.is_empty() {
        return Err(Error::InvalidInput("need at least one element".into()));
    }
    let mut gens: Vec<FreeVector> = a
        .iter()
        .chain(base.ideal())
        .map(|p| FreeVector::new(vec![p.clone()]))
        .collect::<Result<_>>()?;
    if gens.iter().all(|v| v.is_zero()) {
        gens.clear();
    }
    let gb = if gens.is_empty() {
        base.ideal_gb().clone()
    } else {
        crate::groebner::buchberger(&gens, base.poly().order, 1, None)?
    };
    if !gb.quotient_kdim().is_finite() || !origin_supported(&gb)? {
        return Err(Error::NotIdealOfDefinition);
    }
    let l = Arc::new(PresentedModule::free(base, 1));
    let datum = InputDatum::new(base.clone(), vec![a.to_vec()], l)?;
    let lengths = homology_length_vector(&datum, 0)?;
    let alt: i64 = lengths
        .iter()
        .enumerate()
        .map(|(i, &v)| sign(i) as i64 * v as i64)
        .sum();
    let br = br_multiplicity(&datum, sampling)?;
    let (hs, _) = hilbert_samuel_multiplicity(base, a, sampling)?;
    let expected = if br.is_parameter { br.br } else { 0 };
    let euler_pass = alt as i128 == expected;
    let additivity_pass = hs == br.br;
    Ok(SerreReport {
        f: a.len(),
        lengths,
        alternating_sum: alt,
        is_parameter: br.is_parameter,
        br: Int(br.br),
        hilbert_samuel: Int(hs),
        expected: Int(expected),
        euler_pass,
        additivity_pass,
        all_pass: euler_pass && additivity_pass,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct GradeRow {
    pub nu: i64,
    /// Positions whose homology vanishes.
    pub zero: Vec<bool>,
    pub first_nonzero_from_top: Option<usize>,
    pub acyclic: bool,
    pub pass: bool,
    /// ℓ(H at position f-g+1-grade) against ℓ(Ext^grade(Sym^{f-g-ν} M, L)).
    pub ext_length: Option<String>,
    pub homology_length: Option<String>,
    pub ext_pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct TopRow {
    pub nu: i64,
    pub top_homology: String,
    pub hom_length: String,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct GradeReport {
    pub grade: Option<usize>,
    pub eagon_bound: usize,
    pub eagon_pass: bool,
    pub rows: Vec<GradeRow>,
    pub grade_pass: bool,
    pub acyclicity_pass: bool,
    pub top: Vec<TopRow>,
    pub top_pass: bool,
    pub all_pass: bool,
}

/// Grade of I_g(Φ) on L read off from the homology of 𝔅• for 0 <= ν < f-g,
/// plus the top homology against Hom(Sym^{f-g-ν} M, L) for ν < f-g and
/// against Hom(R/I_g(Φ), L) at ν = f-g.
pub fn grade_report(datum: &InputDatum) -> Result<GradeReport> {
    let (f, g) = (datum.f(), datum.g());
    let top = f - g + 1;
    let base = datum.base();
    let l = datum.l();
    let ideal = datum.minor_ideal();
    let grade = match ext_grade(base, &ideal, l, top + 1) {
        Ok(n) => Some(n),
        Err(Error::GradeBoundExceeded(_)) => None,
        Err(e) => return Err(e),
    };
    let eagon_pass = grade.map_or(false, |n| n <= top);

    let rows: Vec<GradeRow> = (0..(f - g) as i64)
        .into_par_iter()
        .map(|nu| -> Result<GradeRow> {
            let b = assemble_b(datum, nu)?;
            let c = &b.complex;
            let zero: Vec<bool> = (0..c.len())
                .map(|i| c.homology_is_zero(i))
                .collect::<Result<_>>()?;
            let first = (0..=top).find(|&i| !zero.get(top - i).copied().unwrap_or(true));
            let acyclic = zero.iter().skip(1).all(|&z| z);
            let (mut ext_length, mut homology_length, mut ext_pass) = (None, None, grade.is_none());
            if let Some(gr) = grade.filter(|&n| n <= top) {
                let sym = sym_power(base, datum.phi(), (f - g) as u32 - nu as u32)?;
                let ext = ext_module(&sym, l, gr)?.length();
                let h = c.homology_length(top - gr)?;
                ext_pass = ext == h;
                ext_length = Some(ext.to_string());
                homology_length = Some(h.to_string());
            }
            Ok(GradeRow {
                nu,
                pass: first == grade,
                zero,
                first_nonzero_from_top: first,
                acyclic,
                ext_length,
                homology_length,
                ext_pass,
            })
        })
        .collect::<Result<_>>()?;
    let grade_pass = rows.iter().all(|r| r.pass && r.ext_pass);
    let maximal = grade == Some(top);
    let acyclicity_pass = rows.iter().all(|r| r.acyclic == maximal);

    let tops: Vec<TopRow> = (0..=(f - g) as i64)
        .into_par_iter()
        .map(|nu| -> Result<TopRow> {
            let b = assemble_b(datum, nu)?;
            let h = b.complex.homology_length(top)?;
            let hom = if nu == (f - g) as i64 {
                hom_into(base, &ideal, l)?.length()
            } else {
                let sym = sym_power(base, datum.phi(), (f - g) as u32 - nu as u32)?;
                hom_module(&sym, l)?.length()
            };
            Ok(TopRow {
                nu,
                top_homology: h.to_string(),
                hom_length: hom.to_string(),
                pass: h == hom,
            })
        })
        .collect::<Result<_>>()?;
    let top_pass = tops.iter().all(|t| t.pass);
    Ok(GradeReport {
        grade,
        eagon_bound: top,
        eagon_pass,
        grade_pass,
        acyclicity_pass,
        all_pass: eagon_pass && grade_pass && acyclicity_pass && top_pass,
        rows,
        top: tops,
        top_pass,
    })
}
