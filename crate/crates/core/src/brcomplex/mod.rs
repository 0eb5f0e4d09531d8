//! Degree strands of the Koszul complex on γ_j = Σ_i c_ij T_i, their
//! inverse-polynomial counterparts, the splice map given by maximal minors,
//! and the assembled complexes 𝔅•(Φ, L, ν).

mod datum;

use std::collections::HashMap;
use std::sync::Arc;

use crate::arith::Polynomial;
use crate::combinat::{binomial, monomials_of_degree, shuffle_sign, subsets};
use crate::error::{Error, Result};
use crate::groebner::{Length, SVec};
use crate::modpres::{tensor_columns, ChainComplex, ModuleMap, PresentedModule};

pub use datum::{gamma_of, GammaSystem, InputDatum};

/// Which construction produced a complex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    Koszul,
    Spliced,
    Inverse,
}

impl Regime {
    pub fn name(self) -> &'static str {
        match self {
            Regime::Koszul => "koszul",
            Regime::Spliced => "spliced",
            Regime::Inverse => "inverse",
        }
    }
}

/// A strand or assembled complex together with basis labels per position.
#[derive(Clone, Debug)]
pub struct BrComplex {
    pub nu: i64,
    pub regime: Regime,
    pub complex: ChainComplex,
    pub labels: Vec<Vec<String>>,
}

impl BrComplex {
    pub fn ranks(&self) -> Vec<usize> {
        self.complex.ranks()
    }

    pub fn offset(&self) -> i64 {
        self.complex.offset()
    }
}

/// One position of a strand, before tensoring with L: the exterior subsets
/// and the T-exponent vectors (for inverse pieces, b = a - 1).
struct Piece {
    ext: Vec<Vec<usize>>,
    mons: Vec<Vec<u32>>,
    inverse: bool,
}

impl Piece {
    fn koszul(f: usize, g: usize, p: usize, deg: u32) -> Piece {
        Piece {
            ext: subsets(f, p),
            mons: monomials_of_degree(g, deg),
            inverse: false,
        }
    }

    fn inverse(f: usize, g: usize, k: usize, m: u32) -> Piece {
        Piece {
            ext: subsets(f, k),
            mons: monomials_of_degree(g, m),
            inverse: true,
        }
    }

    fn rank(&self) -> usize {
        self.ext.len() * self.mons.len()
    }

    fn index(&self) -> (HashMap<&[usize], usize>, HashMap<&[u32], usize>) {
        (
            self.ext.iter().enumerate().map(|(i, e)| (e.as_slice(), i)).collect(),
            self.mons.iter().enumerate().map(|(i, e)| (e.as_slice(), i)).collect(),
        )
    }

    fn labels(&self, l: usize) -> Vec<String> {
        let mut out = Vec::with_capacity(self.rank() * l);
        for e in &self.ext {
            let ext: Vec<String> = e.iter().map(|j| (j + 1).to_string()).collect();
            for m in &self.mons {
                let mut t = Vec::new();
                for (i, &x) in m.iter().enumerate() {
                    let x = if self.inverse { x as i64 + 1 } else { x as i64 };
                    let x = if self.inverse { -x } else { x };
                    match x {
                        0 => {}
                        1 => t.push(format!("T{}", i + 1)),
                        _ => t.push(format!("T{}^{}", i + 1, x)),
                    }
                }
                let mono = if t.is_empty() { "1".to_string() } else { t.join("*") };
                for s in 0..l {
                    let base = format!("e[{}]*{}", ext.join(","), mono);
                    if l == 1 {
                        out.push(base);
                    } else {
                        out.push(format!("{base}@L{}", s + 1));
                    }
                }
            }
        }
        out
    }
}

/// Free matrix of the differential from `src` to `dst`, before ⊗ L:
/// e_J ⊗ t ↦ Σ_s (-1)^s e_{J \ j_s} ⊗ γ_{j_s} · t, where T_i raises a
/// polynomial exponent and lowers an inverse one (killing T_i^{-1}).
fn koszul_columns(datum: &InputDatum, src: &Piece, dst: &Piece) -> Vec<SVec> {
    let ctx = datum.base().ctx();
    let (ext_idx, mon_idx) = dst.index();
    let nm = dst.mons.len();
    let mut cols = Vec::with_capacity(src.rank());
    for jset in &src.ext {
        for mon in &src.mons {
            let mut terms = Vec::new();
            for (s, &j) in jset.iter().enumerate() {
                let mut rest = jset.clone();
                rest.remove(s);
                let row_ext = ext_idx[rest.as_slice()];
                let negate = s % 2 == 1;
                for i in 0..datum.g() {
                    let c = &datum.phi()[i][j];
                    if c.is_zero() {
                        continue;
                    }
                    let mut e = mon.clone();
                    if src.inverse {
                        if e[i] == 0 {
                            continue;
                        }
                        e[i] -= 1;
                    } else {
                        e[i] += 1;
                    }
                    let pos = (row_ext * nm + mon_idx[e.as_slice()]) as u32;
                    for (m, a) in c.terms() {
                        let a = if negate { ctx.field.neg(*a) } else { *a };
                        terms.push((pos, m.clone(), a));
                    }
                }
            }
            cols.push(SVec::from_terms(ctx.field, terms, ctx.order));
        }
    }
    cols
}

/// τ_ν before ⊗ L: e_J ⊗ (T_1⋯T_g)^{-1} ↦ Σ_{I ⊆ J, |I| = g}
/// sign(I, J \ I) det(Φ_I) e_{J \ I}.
fn tau_columns(datum: &InputDatum, src: &Piece, dst: &Piece) -> Vec<SVec> {
    let ctx = datum.base().ctx();
    let g = datum.g();
    let (ext_idx, _) = dst.index();
    let minor_of: HashMap<Vec<usize>, &Polynomial> = subsets(datum.f(), g)
        .into_iter()
        .zip(datum.minors())
        .collect();
    let mut cols = Vec::with_capacity(src.rank());
    for jset in &src.ext {
        let mut terms = Vec::new();
        for pick in subsets(jset.len(), g) {
            let i_set: Vec<usize> = pick.iter().map(|&t| jset[t]).collect();
            let rest: Vec<usize> = jset.iter().copied().filter(|j| !i_set.contains(j)).collect();
            let det = minor_of[&i_set];
            let negate = shuffle_sign(&i_set, &rest) < 0;
            let pos = ext_idx[rest.as_slice()] as u32;
            for (m, a) in det.terms() {
                let a = if negate { ctx.field.neg(*a) } else { *a };
                terms.push((pos, m.clone(), a));
            }
        }
        cols.push(SVec::from_terms(ctx.field, terms, ctx.order));
    }
    cols
}

struct Builder<'a> {
    datum: &'a InputDatum,
    pieces: Vec<Piece>,
    modules: Vec<Arc<PresentedModule>>,
}

impl<'a> Builder<'a> {
    fn new(datum: &'a InputDatum) -> Self {
        Builder {
            datum,
            pieces: Vec::new(),
            modules: Vec::new(),
        }
    }

    fn push(&mut self, p: Piece) {
        self.modules.push(Arc::new(self.datum.l().power(p.rank())));
        self.pieces.push(p);
    }

    fn map(&self, i: usize, tau: bool) -> ModuleMap {
        let (src, dst) = (&self.pieces[i], &self.pieces[i - 1]);
        let cols = if tau {
            tau_columns(self.datum, src, dst)
        } else {
            koszul_columns(self.datum, src, dst)
        };
        ModuleMap::from_svecs(
            self.modules[i].clone(),
            self.modules[i - 1].clone(),
            tensor_columns(&cols, self.datum.l().rank()),
        )
    }

    fn finish(
        self,
        nu: i64,
        regime: Regime,
        offset: i64,
        tau_at: Option<usize>,
    ) -> Result<BrComplex> {
        let maps: Vec<ModuleMap> = (1..self.pieces.len())
            .map(|i| self.map(i, Some(i) == tau_at))
            .collect();
        let l = self.datum.l().rank();
        let labels = self.pieces.iter().map(|p| p.labels(l)).collect();
        let complex = ChainComplex::unchecked(self.modules, maps, offset)?;
        if let Some(i) = complex.first_nonzero_composition() {
            return Err(match tau_at {
                Some(t) if i == t || i + 1 == t => Error::SpliceMismatch(i),
                _ => Error::NotAComplex(i),
            });
        }
        Ok(BrComplex {
            nu,
            regime,
            complex,
            labels,
        })
    }
}

/// (S ⊗ L)_ν as a module over the base ring; zero for ν < 0.
pub fn graded_piece(datum: &InputDatum, nu: i64) -> PresentedModule {
    if nu < 0 {
        return PresentedModule::free(datum.base(), 0);
    }
    let n = binomial(nu + datum.g() as i64 - 1, datum.g() as i64 - 1) as usize;
    datum.l().power(n)
}

/// K•(γ, S ⊗ L)_ν: position p is Λ^p ⊗ S_{ν-p} ⊗ L.
pub fn koszul_strand(datum: &InputDatum, nu: i64) -> Result<BrComplex> {
    if nu < 0 {
        return Err(Error::InvalidInput("koszul strand needs nu >= 0".into()));
    }
    let (f, g) = (datum.f(), datum.g());
    let mut b = Builder::new(datum);
    for p in 0..=(nu as usize).min(f) {
        b.push(Piece::koszul(f, g, p, (nu as usize - p) as u32));
    }
    b.finish(nu, Regime::Koszul, 0, None)
}

/// K•(γ, H ⊗ L)_ν with H the inverse polynomials: exterior degree k runs
/// from max(g + ν, 0) to f and sits at homological position k - g + 1.
pub fn inverse_strand(datum: &InputDatum, nu: i64) -> Result<BrComplex> {
    let (f, g) = (datum.f() as i64, datum.g() as i64);
    if nu > f - g {
        return Err(Error::InvalidInput(format!(
            "inverse strand is zero for nu > {}",
            f - g
        )));
    }
    let k0 = (g + nu).max(0);
    let mut b = Builder::new(datum);
    for k in k0..=f {
        b.push(Piece::inverse(
            f as usize,
            g as usize,
            k as usize,
            (k - nu - g) as u32,
        ));
    }
    b.finish(nu, Regime::Inverse, k0 - g + 1, None)
}

/// τ_ν: Λ^{g+ν} ⊗ H_{-g} ⊗ L -> Λ^ν ⊗ S_0 ⊗ L, for 0 <= ν <= f - g.
pub fn splice_tau(datum: &InputDatum, nu: i64) -> Result<ModuleMap> {
    let (f, g) = (datum.f(), datum.g());
    if nu < 0 || nu > (f - g) as i64 {
        return Err(Error::InvalidInput(format!("tau needs 0 <= nu <= {}", f - g)));
    }
    let nu = nu as usize;
    let mut b = Builder::new(datum);
    b.push(Piece::koszul(f, g, nu, 0));
    b.push(Piece::inverse(f, g, g + nu, 0));
    Ok(b.map(1, true))
}

/// 𝔅•(Φ, L, ν) for any integer ν.
pub fn assemble_b(datum: &InputDatum, nu: i64) -> Result<BrComplex> {
    let (f, g) = (datum.f(), datum.g());
    let top = (f - g) as i64;
    if nu > top {
        return koszul_strand(datum, nu);
    }
    if nu < 0 {
        return inverse_strand(datum, nu);
    }
    let v = nu as usize;
    let mut b = Builder::new(datum);
    for p in 0..=v {
        b.push(Piece::koszul(f, g, p, (v - p) as u32));
    }
    for k in g + v..=f {
        b.push(Piece::inverse(f, g, k, (k - v - g) as u32));
    }
    b.finish(nu, Regime::Spliced, 0, Some(v + 1))
}

/// ℓ(H_i(𝔅•(Φ, L, ν))) for every stored position.
pub fn homology_length_vector(datum: &InputDatum, nu: i64) -> Result<Vec<u64>> {
    datum.require_certificate()?;
    let b = assemble_b(datum, nu)?;
    finite_lengths(&b.complex)
}

pub(crate) fn finite_lengths(c: &ChainComplex) -> Result<Vec<u64>> {
    c.homology_lengths()?
        .into_iter()
        .enumerate()
        .map(|(i, l)| match l {
            Length::Finite(n) => Ok(n),
            Length::Infinite => Err(Error::InfiniteHomology(i as i64 + c.offset())),
        })
        .collect()
}

/// Closed-form rank of position i of the spliced complex, 0 <= ν <= f - g.
pub fn expected_rank(f: usize, g: usize, l: usize, nu: i64, i: i64) -> u64 {
    let (f, g, l) = (f as i64, g as i64, l as u64);
    if i <= nu {
        binomial(f, i) * binomial(nu - i + g - 1, g - 1) * l
    } else {
        binomial(f, g + i - 1) * binomial(i - nu + g - 2, g - 1) * l
    }
}
