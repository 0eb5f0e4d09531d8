//! Finitely presented modules over k[x]/J and the homological algebra built
//! on them: kernels, homology, symmetric powers, resolutions, Ext and grade.

mod complex;
mod module;

use std::collections::HashMap;
use std::sync::Arc;

use crate::arith::Polynomial;
use crate::combinat::monomials_of_degree;
use crate::error::{Error, Result};
use crate::groebner::{kernel_svecs, minimize_generators, FreeVector, Length, QuotientRing, SVec};

pub use complex::{map_kernel, ChainComplex};
pub(crate) use complex::euler_characteristic;
pub use module::{ModuleMap, PresentedModule};

pub fn presented_module(
    base: &Arc<QuotientRing>,
    rank: usize,
    relations: &[FreeVector],
) -> Result<PresentedModule> {
    PresentedModule::new(base, rank, relations)
}

pub fn module_length(p: &PresentedModule) -> Length {
    p.length()
}

pub fn module_is_zero(p: &PresentedModule) -> bool {
    p.is_zero()
}

/// Determinant by cofactor expansion along rows, memoized on the set of
/// remaining columns.
pub fn determinant(rows: &[Vec<Polynomial>]) -> Result<Polynomial> {
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(Error::InvalidInput("determinant of a non-square matrix".into()));
    }
    if n == 0 {
        return Err(Error::InvalidInput("empty matrix".into()));
    }
    let mut memo = HashMap::new();
    Ok(minor_rec(rows, 0, (1u64 << n) - 1, &mut memo))
}

fn minor_rec(
    rows: &[Vec<Polynomial>],
    k: usize,
    mask: u64,
    memo: &mut HashMap<u64, Polynomial>,
) -> Polynomial {
    if let Some(p) = memo.get(&mask) {
        return p.clone();
    }
    let ring = rows[0][0].ring();
    let out = if k == rows.len() {
        Polynomial::one(ring)
    } else {
        let mut acc = Polynomial::zero(ring);
        let mut t = 0usize;
        for c in 0..64 {
            if mask & (1 << c) == 0 {
                continue;
            }
            let a = &rows[k][c];
            if !a.is_zero() {
                let sub = minor_rec(rows, k + 1, mask & !(1 << c), memo);
                let term = a.mul_unchecked(&sub);
                acc = acc.combine(&term, t % 2 == 1);
            }
            t += 1;
        }
        acc
    };
    memo.insert(mask, out.clone());
    out
}

/// All r x r minors of an r x m matrix, columns chosen in lexicographic
/// order. Empty when m < r.
pub fn maximal_minors(rows: &[Vec<Polynomial>]) -> Vec<Polynomial> {
    let r = rows.len();
    if r == 0 {
        return Vec::new();
    }
    let m = rows[0].len();
    if m < r || m > 63 {
        return Vec::new();
    }
    let mut memo = HashMap::new();
    crate::combinat::subsets(m, r)
        .into_iter()
        .map(|cols| {
            let mask = cols.iter().fold(0u64, |acc, c| acc | 1 << c);
            minor_rec(rows, 0, mask, &mut memo)
        })
        .collect()
}

/// Columns of a free matrix tensored with a module of rank `l`: basis index
/// `i * l + s`.
pub(crate) fn tensor_columns(cols: &[SVec], l: usize) -> Vec<SVec> {
    let l32 = l as u32;
    let mut out = Vec::with_capacity(cols.len() * l);
    for c in cols {
        for s in 0..l32 {
            out.push(SVec {
                terms: c
                    .terms
                    .iter()
                    .map(|(p, m, a)| (p * l32 + s, m.clone(), *a))
                    .collect(),
            });
        }
    }
    out
}

/// Sym^k of coker(Φ) for a g x f matrix Φ over the base ring.
pub fn sym_power(
    base: &Arc<QuotientRing>,
    phi: &[Vec<Polynomial>],
    k: u32,
) -> Result<PresentedModule> {
    let g = phi.len();
    let f = phi.first().map(|r| r.len()).unwrap_or(0);
    let basis = monomials_of_degree(g, k);
    if k == 0 {
        return Ok(PresentedModule::free(base, basis.len()));
    }
    let index: HashMap<&[u32], usize> = basis
        .iter()
        .enumerate()
        .map(|(i, e)| (e.as_slice(), i))
        .collect();
    let ctx = base.ctx();
    let mut rels = Vec::new();
    for j in 0..f {
        for beta in monomials_of_degree(g, k - 1) {
            let mut terms = Vec::new();
            for (i, row) in phi.iter().enumerate() {
                let mut e = beta.clone();
                e[i] += 1;
                let pos = index[e.as_slice()] as u32;
                for (m, c) in row[j].terms() {
                    terms.push((pos, m.clone(), *c));
                }
            }
            rels.push(SVec::from_terms(ctx.field, terms, ctx.order));
        }
    }
    Ok(PresentedModule::from_svecs(base, basis.len(), rels))
}

/// F_bound -> ... -> F_0 by iterated syzygies with greedy pruning of
/// redundant generators; H_0 = P and exact in between.
pub fn free_resolution(p: &PresentedModule, bound: usize) -> Result<ChainComplex> {
    let q = p.base();
    let mut ranks = vec![p.rank()];
    let mut all_cols: Vec<Vec<SVec>> = Vec::new();
    let mut gens = minimize_generators(q, p.rank(), p.relation_svecs().to_vec());
    for i in 1..=bound {
        let target_rank = ranks[i - 1];
        ranks.push(gens.len());
        let next = if gens.is_empty() || target_rank == 0 {
            Vec::new()
        } else if i < bound {
            let k = kernel_svecs(q, target_rank, &gens, &[], &[]);
            minimize_generators(q, gens.len(), k)
        } else {
            Vec::new()
        };
        all_cols.push(std::mem::replace(&mut gens, next));
    }
    let modules: Vec<Arc<PresentedModule>> = ranks
        .iter()
        .map(|&r| Arc::new(PresentedModule::free(q, r)))
        .collect();
    let maps = all_cols
        .into_iter()
        .enumerate()
        .map(|(i, cols)| ModuleMap::from_svecs(modules[i + 1].clone(), modules[i].clone(), cols))
        .collect();
    ChainComplex::unchecked(modules, maps, 0)
}

/// Hom(F_•, L) laid out as a chain complex: position p holds
/// Hom(F_{N-p}, L), so cohomological degree i sits at position N - i.
pub(crate) fn hom_cocomplex(f: &ChainComplex, l: &PresentedModule) -> Result<ChainComplex> {
    let n = f.len() - 1;
    let lr = l.rank() as u32;
    let modules: Vec<Arc<PresentedModule>> = (0..=n)
        .map(|p| Arc::new(l.power(f.module(n - p).rank())))
        .collect();
    let ctx = l.base().ctx();
    let mut maps = Vec::with_capacity(n);
    for p in 1..=n {
        // transpose of d_{N-p+1}: F_{N-p+1} -> F_{N-p}
        let d = f.differential(n - p + 1).expect("differential exists");
        let src_rank = f.module(n - p).rank();
        let mut cols: Vec<Vec<(u32, crate::arith::Monomial, u64)>> =
            vec![Vec::new(); src_rank * l.rank()];
        for (b, col) in d.columns().iter().enumerate() {
            for (a, m, c) in &col.terms {
                for s in 0..lr {
                    cols[(*a * lr + s) as usize].push((b as u32 * lr + s, m.clone(), *c));
                }
            }
        }
        let cols = cols
            .into_iter()
            .map(|t| SVec::from_terms(ctx.field, t, ctx.order))
            .collect();
        maps.push(ModuleMap::from_svecs(
            modules[p].clone(),
            modules[p - 1].clone(),
            cols,
        ));
    }
    ChainComplex::unchecked(modules, maps, 0)
}

/// Ext^i(A, L) as the cohomology of Hom(F_•, L).
pub fn ext_module(a: &PresentedModule, l: &PresentedModule, i: usize) -> Result<PresentedModule> {
    let f = free_resolution(a, i + 1)?;
    let c = hom_cocomplex(&f, l)?;
    c.homology_at(1)
}

/// Lengths of Ext^0..Ext^bound from one resolution.
pub fn ext_lengths(a: &PresentedModule, l: &PresentedModule, bound: usize) -> Result<Vec<Length>> {
    let f = free_resolution(a, bound + 1)?;
    let c = hom_cocomplex(&f, l)?;
    let n = bound + 1;
    (0..=bound).map(|i| c.homology_length(n - i)).collect()
}

/// grade(I, L) = least i with Ext^i(R/I, L) != 0, searched up to `bound`.
pub fn ext_grade(
    base: &Arc<QuotientRing>,
    ideal: &[Polynomial],
    l: &PresentedModule,
    bound: usize,
) -> Result<usize> {
    let a = PresentedModule::cyclic(base, ideal)?;
    let f = free_resolution(&a, bound + 1)?;
    let c = hom_cocomplex(&f, l)?;
    let n = bound + 1;
    for i in 0..=bound {
        if !c.homology_is_zero(n - i)? {
            return Ok(i);
        }
    }
    Err(Error::GradeBoundExceeded(bound))
}

/// {v ∈ L : I v = 0}, the kernel of L -> L^t given by the generators of I.
pub fn hom_into(
    base: &Arc<QuotientRing>,
    ideal: &[Polynomial],
    l: &Arc<PresentedModule>,
) -> Result<PresentedModule> {
    let t = ideal.len();
    let lr = l.rank() as u32;
    let target = Arc::new(l.power(t));
    let ctx = base.ctx();
    let cols: Vec<SVec> = (0..lr)
        .map(|s| {
            let mut terms = Vec::new();
            for (u, a) in ideal.iter().enumerate() {
                for (m, c) in a.terms() {
                    terms.push((u as u32 * lr + s, m.clone(), *c));
                }
            }
            SVec::from_terms(ctx.field, terms, ctx.order)
        })
        .collect();
    let d = ModuleMap::from_svecs(l.clone(), target.clone(), cols);
    let c = ChainComplex::unchecked(vec![target, l.clone()], vec![d], 0)?;
    c.homology_at(1)
}

/// Hom(A, L) = Ext^0(A, L).
pub fn hom_module(a: &PresentedModule, l: &PresentedModule) -> Result<PresentedModule> {
    ext_module(a, l, 0)
}

#[cfg(test)]
mod tests;
