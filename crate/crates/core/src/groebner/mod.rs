//! Groebner bases of submodules of k[x]^r (position over term), normal
//! forms, syzygies, standard monomials and dimension.

mod buchberger;
pub(crate) mod hilbert;
mod vector;

use std::sync::Arc;

use crate::arith::{Monomial, MonomialOrder, PolyRing, Polynomial};
use crate::error::{Error, Result};

pub(crate) use buchberger::{groebner, Ctx, Reducer};
pub use vector::FreeVector;
pub(crate) use vector::{pot_cmp, SVec};

/// A reduced Groebner basis of a submodule of k[x]^r.
#[derive(Clone)]
pub struct GroebnerBasis {
    ring: Arc<PolyRing>,
    order: MonomialOrder,
    rank: usize,
    elems: Vec<SVec>,
}

impl std::fmt::Debug for GroebnerBasis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(self.generators()).finish()
    }
}

/// Size of a quotient: finite count of standard monomials or infinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Length {
    Finite(u64),
    Infinite,
}

impl Length {
    pub fn finite(self) -> Option<u64> {
        match self {
            Length::Finite(n) => Some(n),
            Length::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Length::Finite(_))
    }
}

impl std::fmt::Display for Length {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Length::Finite(n) => write!(f, "{n}"),
            Length::Infinite => f.write_str("INFINITE"),
        }
    }
}

impl GroebnerBasis {
    pub(crate) fn from_svecs(
        ring: &Arc<PolyRing>,
        order: MonomialOrder,
        rank: usize,
        gens: Vec<SVec>,
    ) -> Self {
        let ctx = Ctx {
            field: ring.field,
            order,
        };
        let ideal_case = gens.iter().all(|g| g.terms.iter().all(|t| t.0 == 0));
        let elems = groebner(ctx, gens, ideal_case);
        GroebnerBasis {
            ring: ring.clone(),
            order,
            rank,
            elems,
        }
    }

    pub(crate) fn ctx(&self) -> Ctx {
        Ctx {
            field: self.ring.field,
            order: self.order,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub(crate) fn elems(&self) -> &[SVec] {
        &self.elems
    }

    pub fn generators(&self) -> Vec<FreeVector> {
        self.elems
            .iter()
            .map(|e| FreeVector::from_svec(&self.ring, self.rank, e))
            .collect()
    }

    /// Leading terms as (component, monomial).
    pub fn leading_terms(&self) -> Vec<(usize, Monomial)> {
        self.elems
            .iter()
            .map(|e| (e.terms[0].0 as usize, e.terms[0].1.clone()))
            .collect()
    }

    pub(crate) fn reduce_svec(&self, v: &SVec) -> SVec {
        Reducer::new(self.ctx(), &self.elems).reduce(v)
    }

    pub(crate) fn contains_svec(&self, v: &SVec) -> bool {
        Reducer::new(self.ctx(), &self.elems).reduces_to_zero(v)
    }

    /// Unique remainder of `v` modulo the submodule.
    pub fn normal_form(&self, v: &FreeVector) -> Result<FreeVector> {
        self.check_rank(v)?;
        let r = self.reduce_svec(&v.to_svec(self.order));
        Ok(FreeVector::from_svec(&self.ring, self.rank, &r))
    }

    pub fn contains(&self, v: &FreeVector) -> Result<bool> {
        self.check_rank(v)?;
        Ok(self.contains_svec(&v.to_svec(self.order)))
    }

    fn check_rank(&self, v: &FreeVector) -> Result<()> {
        if v.rank() != self.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                found: v.rank(),
            });
        }
        Ok(())
    }

    /// Leading monomials grouped by component.
    pub(crate) fn lead_monomials_by_component(&self) -> Vec<Vec<Monomial>> {
        let mut out = vec![Vec::new(); self.rank];
        for e in &self.elems {
            out[e.terms[0].0 as usize].push(e.terms[0].1.clone());
        }
        out
    }

    /// k-dimension of k[x]^r / (submodule), counted by standard monomials.
    pub fn quotient_kdim(&self) -> Length {
        let n = self.ring.nvars();
        let mut total: u128 = 0;
        for comp in self.lead_monomials_by_component() {
            match hilbert::standard_count(&comp, n) {
                Some(c) => total += c,
                None => return Length::Infinite,
            }
        }
        Length::Finite(total as u64)
    }

    /// Explicit standard monomials, `None` when there are infinitely many.
    pub fn standard_monomials(&self) -> Option<Vec<(usize, Monomial)>> {
        if !self.quotient_kdim().is_finite() {
            return None;
        }
        let n = self.ring.nvars();
        let mut out = Vec::new();
        for (c, leads) in self.lead_monomials_by_component().into_iter().enumerate() {
            // finite: every variable has a pure power among the leads
            let bounds: Vec<u32> = (0..n)
                .map(|v| {
                    leads
                        .iter()
                        .filter(|m| {
                            m.exponents()
                                .iter()
                                .enumerate()
                                .all(|(k, &e)| k == v || e == 0)
                        })
                        .map(|m| m.exponents()[v])
                        .min()
                        .unwrap_or(0)
                })
                .collect();
            let mut exps = vec![0u32; n];
            enumerate_box(&bounds, 0, &mut exps, &mut |e| {
                let m = Monomial::from_exponents(e);
                if !leads.iter().any(|l| l.divides(&m)) {
                    out.push((c, m));
                }
            });
        }
        Some(out)
    }

    /// Verification pass: every S-pair of the basis reduces to zero.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        let ctx = self.ctx();
        let red = Reducer::new(ctx, &self.elems);
        for i in 0..self.elems.len() {
            for j in i + 1..self.elems.len() {
                let (a, b) = (&self.elems[i].terms[0], &self.elems[j].terms[0]);
                if a.0 != b.0 {
                    continue;
                }
                let lcm = a.1.lcm(&b.1);
                let s = self.elems[i]
                    .mul_monomial(&a.1.quotient_of(&lcm))
                    .sub_mul(ctx.field, ctx.order, 1, &b.1.quotient_of(&lcm), &self.elems[j]);
                if !red.reduces_to_zero(&s) {
                    return false;
                }
            }
        }
        true
    }

    /// Auto-reduced: no leading term divides any term of another element.
    pub fn is_reduced(&self) -> bool {
        for (i, e) in self.elems.iter().enumerate() {
            for (j, f) in self.elems.iter().enumerate() {
                if i == j {
                    continue;
                }
                let l = &e.terms[0];
                if f.terms.iter().any(|t| t.0 == l.0 && l.1.divides(&t.1)) {
                    return false;
                }
            }
        }
        true
    }
}

fn enumerate_box(bounds: &[u32], k: usize, exps: &mut Vec<u32>, f: &mut dyn FnMut(&[u32])) {
    if k == bounds.len() {
        f(exps);
        return;
    }
    for e in 0..bounds[k] {
        exps[k] = e;
        enumerate_box(bounds, k + 1, exps, f);
    }
    exps[k] = 0;
}

/// The base ring k[x_1..x_n]/J with J's Groebner basis computed once.
#[derive(Debug)]
pub struct QuotientRing {
    poly: Arc<PolyRing>,
    ideal: Vec<Polynomial>,
    ideal_gb: GroebnerBasis,
}

impl QuotientRing {
    pub fn new(poly: Arc<PolyRing>, ideal: Vec<Polynomial>) -> Result<Arc<Self>> {
        for g in &ideal {
            if !crate::arith::same_ring(g.ring(), &poly) {
                return Err(Error::RingMismatch);
            }
        }
        let gens: Vec<SVec> = ideal
            .iter()
            .map(|p| FreeVector::new(vec![p.clone()]).unwrap().to_svec(poly.order))
            .collect();
        let ideal_gb = GroebnerBasis::from_svecs(&poly, poly.order, 1, gens);
        Ok(Arc::new(QuotientRing {
            poly,
            ideal,
            ideal_gb,
        }))
    }

    pub fn polynomial_ring(poly: Arc<PolyRing>) -> Arc<Self> {
        Self::new(poly, Vec::new()).expect("no quotient generators")
    }

    pub fn poly(&self) -> &Arc<PolyRing> {
        &self.poly
    }

    pub fn ideal(&self) -> &[Polynomial] {
        &self.ideal
    }

    pub fn ideal_gb(&self) -> &GroebnerBasis {
        &self.ideal_gb
    }

    pub fn is_polynomial_ring(&self) -> bool {
        self.ideal_gb.is_empty()
    }

    pub(crate) fn ctx(&self) -> Ctx {
        Ctx {
            field: self.poly.field,
            order: self.poly.order,
        }
    }

    /// J * e_i for every i in `[offset, offset + rank)`.
    pub(crate) fn ideal_vectors(&self, offset: u32, rank: usize) -> Vec<SVec> {
        let mut out = Vec::new();
        for i in 0..rank as u32 {
            for g in self.ideal_gb.elems() {
                out.push(g.shift(offset + i));
            }
        }
        out
    }

    /// Groebner basis over the ring's order of `gens + J k[x]^rank`.
    pub(crate) fn module_gb(&self, rank: usize, mut gens: Vec<SVec>) -> GroebnerBasis {
        gens.extend(self.ideal_vectors(0, rank));
        GroebnerBasis::from_svecs(&self.poly, self.poly.order, rank, gens)
    }
}

/// Buchberger's algorithm on `gens` inside k[x]^rank. When `quotient` is
/// given, J * e_i is adjoined for every unit vector, so the result describes
/// the submodule of (k[x]/J)^rank.
pub fn buchberger(
    gens: &[FreeVector],
    order: MonomialOrder,
    rank: usize,
    quotient: Option<&QuotientRing>,
) -> Result<GroebnerBasis> {
    let ring = match (gens.first(), quotient) {
        (_, Some(q)) => q.poly().clone(),
        (Some(g), None) if g.rank() > 0 => g.get(0).ring().clone(),
        _ => {
            return Err(Error::InvalidInput(
                "cannot infer the ring of an empty generator list".into(),
            ))
        }
    };
    let mut svecs = Vec::with_capacity(gens.len());
    for g in gens {
        if g.rank() != rank {
            return Err(Error::RankMismatch {
                expected: rank,
                found: g.rank(),
            });
        }
        svecs.push(g.to_svec(order));
    }
    if let Some(q) = quotient {
        for i in 0..rank as u32 {
            for p in q.ideal() {
                svecs.push(FreeVector::new(vec![p.clone()])?.to_svec(order).shift(i));
            }
        }
    }
    Ok(GroebnerBasis::from_svecs(&ring, order, rank, svecs))
}

/// Generators of the kernel of k[x]^m -> k[x]^r, e_j -> gens[j].
///
/// Computed by elimination: the module generated by (gens[j] | e_j) inside
/// k[x]^(r+m) is intersected with 0 ⊕ k[x]^m through the POT order.
pub fn syzygy_basis(gens: &[FreeVector]) -> Result<Vec<FreeVector>> {
    let Some(first) = gens.first() else {
        return Err(Error::InvalidInput("syzygies of an empty list".into()));
    };
    let r = first.rank();
    if r == 0 {
        return Err(Error::InvalidInput("rank-zero generators".into()));
    }
    let ring = first.get(0).ring().clone();
    let order = ring.order;
    let mut cols = Vec::with_capacity(gens.len());
    for g in gens {
        if g.rank() != r {
            return Err(Error::RankMismatch {
                expected: r,
                found: g.rank(),
            });
        }
        cols.push(g.to_svec(order));
    }
    let q = QuotientRing::polynomial_ring(ring.clone());
    let kernel = kernel_svecs(&q, r, &cols, &[], &[]);
    let m = gens.len();
    let pruned = minimize_generators(&q, m, kernel);
    Ok(pruned
        .iter()
        .map(|v| FreeVector::from_svec(&ring, m, v))
        .collect())
}

/// Groebner basis (in source coordinates) of
/// { v in k[x]^m : sum v_j cols[j] ∈ ⟨target_rels⟩ + J k[x]^r } + ⟨source_rels⟩ + J k[x]^m.
pub(crate) fn kernel_svecs(
    q: &QuotientRing,
    r: usize,
    cols: &[SVec],
    target_rels: &[SVec],
    source_rels: &[SVec],
) -> Vec<SVec> {
    let m = cols.len();
    let r32 = r as u32;
    let mut gens: Vec<SVec> = Vec::with_capacity(m + target_rels.len());
    let ctx = q.ctx();
    for (j, c) in cols.iter().enumerate() {
        let mut terms = c.terms.clone();
        terms.push((r32 + j as u32, Monomial::one(q.poly().nvars()), 1));
        gens.push(SVec::from_terms(ctx.field, terms, ctx.order));
    }
    gens.extend(target_rels.iter().cloned());
    gens.extend(source_rels.iter().map(|s| s.shift(r32)));
    gens.extend(q.ideal_vectors(0, r));
    gens.extend(q.ideal_vectors(r32, m));
    let elems = groebner(ctx, gens, false);
    elems
        .into_iter()
        .filter(|e| e.terms[0].0 >= r32)
        .map(|e| e.shift_down(r32))
        .collect()
}

impl SVec {
    pub(crate) fn shift_down(&self, by: u32) -> SVec {
        SVec {
            terms: self
                .terms
                .iter()
                .map(|(p, m, c)| (p - by, m.clone(), *c))
                .collect(),
        }
    }
}

/// Greedy pruning of a generating set of a submodule of (k[x]/J)^rank:
/// generators are visited by increasing degree and dropped when they already
/// lie in the span of those kept (together with J).
pub(crate) fn minimize_generators(q: &QuotientRing, rank: usize, gens: Vec<SVec>) -> Vec<SVec> {
    let ctx = q.ctx();
    let ideal_part = q.ideal_vectors(0, rank);
    let mut sorted: Vec<SVec> = gens
        .into_iter()
        .filter(|g| !g.is_zero())
        .filter(|g| {
            let red = Reducer::new(ctx, &ideal_part).reduce(g);
            !red.is_zero()
        })
        .collect();
    sorted.sort_by(|a, b| {
        a.max_degree().cmp(&b.max_degree()).then_with(|| {
            let la = a.lead().unwrap();
            let lb = b.lead().unwrap();
            pot_cmp(ctx.order, (la.0, &la.1), (lb.0, &lb.1))
        })
    });
    let mut kept: Vec<SVec> = Vec::new();
    let mut span: Vec<SVec> = ideal_part;
    let mut span_gb = groebner(ctx, span.clone(), false);
    for g in sorted {
        if Reducer::new(ctx, &span_gb).reduces_to_zero(&g) {
            continue;
        }
        span.push(g.clone());
        kept.push(g);
        span_gb = groebner(ctx, span.clone(), false);
    }
    kept
}

/// Krull dimension of k[x]/I from a rank-one basis: the largest set of
/// variables containing the support of no leading monomial. `None` for the
/// unit ideal.
pub fn krull_dim(ideal_gb: &GroebnerBasis) -> Result<Option<usize>> {
    if ideal_gb.rank() != 1 {
        return Err(Error::RankMismatch {
            expected: 1,
            found: ideal_gb.rank(),
        });
    }
    let leads: Vec<u64> = ideal_gb
        .leading_terms()
        .iter()
        .map(|(_, m)| m.support_mask())
        .collect();
    if leads.contains(&0) {
        return Ok(None);
    }
    let n = ideal_gb.ring().nvars();
    if n > 24 {
        return Err(Error::InvalidInput("too many variables for dimension".into()));
    }
    let mut best = 0;
    for subset in 0u64..(1u64 << n) {
        let size = subset.count_ones() as usize;
        if size <= best {
            continue;
        }
        if leads.iter().all(|&l| l & !subset != 0) {
            best = size;
        }
    }
    Ok(Some(best))
}

/// True when k[x]/I is supported only at the origin: with D = dim_k k[x]/I,
/// every x_i^D reduces to zero.
pub fn origin_supported(ideal_gb: &GroebnerBasis) -> Result<bool> {
    if ideal_gb.rank() != 1 {
        return Err(Error::RankMismatch {
            expected: 1,
            found: ideal_gb.rank(),
        });
    }
    let d = match ideal_gb.quotient_kdim() {
        Length::Finite(d) => d,
        Length::Infinite => return Err(Error::InfiniteLength),
    };
    let n = ideal_gb.ring().nvars();
    let exp = u32::try_from(d).map_err(|_| Error::InvalidInput("dimension too large".into()))?;
    for i in 0..n {
        let v = SVec {
            terms: vec![(0, Monomial::variable(n, i, exp), 1)],
        };
        if !ideal_gb.contains_svec(&v) {
            return Ok(false);
        }
    }
    Ok(true)
}
