use std::sync::{Arc, OnceLock};

use crate::arith::{Monomial, Polynomial};
use crate::error::{Error, Result};
use crate::groebner::{FreeVector, GroebnerBasis, Length, QuotientRing, Reducer, SVec};

/// coker(k[x]^m -> k[x]^r) over the base ring k[x]/J.
pub struct PresentedModule {
    base: Arc<QuotientRing>,
    rank: usize,
    relations: Vec<SVec>,
    gb: OnceLock<GroebnerBasis>,
}

impl std::fmt::Debug for PresentedModule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PresentedModule")
            .field("rank", &self.rank)
            .field("relations", &self.relations())
            .finish()
    }
}

impl PresentedModule {
    pub fn new(base: &Arc<QuotientRing>, rank: usize, relations: &[FreeVector]) -> Result<Self> {
        let order = base.poly().order;
        let mut rels = Vec::with_capacity(relations.len());
        for v in relations {
            if v.rank() != rank {
                return Err(Error::RankMismatch {
                    expected: rank,
                    found: v.rank(),
                });
            }
            if v.rank() > 0 && !crate::arith::same_ring(v.get(0).ring(), base.poly()) {
                return Err(Error::RingMismatch);
            }
            rels.push(v.to_svec(order));
        }
        Ok(Self::from_svecs(base, rank, rels))
    }

    pub(crate) fn from_svecs(base: &Arc<QuotientRing>, rank: usize, relations: Vec<SVec>) -> Self {
        PresentedModule {
            base: base.clone(),
            rank,
            relations: relations.into_iter().filter(|r| !r.is_zero()).collect(),
            gb: OnceLock::new(),
        }
    }

    pub fn free(base: &Arc<QuotientRing>, rank: usize) -> Self {
        Self::from_svecs(base, rank, Vec::new())
    }

    /// R/I for an ideal given by generators.
    pub fn cyclic(base: &Arc<QuotientRing>, ideal: &[Polynomial]) -> Result<Self> {
        let rels: Vec<FreeVector> = ideal
            .iter()
            .map(|p| FreeVector::new(vec![p.clone()]))
            .collect::<Result<_>>()?;
        Self::new(base, 1, &rels)
    }

    pub fn base(&self) -> &Arc<QuotientRing> {
        &self.base
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn relations(&self) -> Vec<FreeVector> {
        self.relations
            .iter()
            .map(|r| FreeVector::from_svec(self.base.poly(), self.rank, r))
            .collect()
    }

    pub(crate) fn relation_svecs(&self) -> &[SVec] {
        &self.relations
    }

    /// Groebner basis of relations + J * free, computed on first use.
    pub fn gb(&self) -> &GroebnerBasis {
        self.gb
            .get_or_init(|| self.base.module_gb(self.rank, self.relations.clone()))
    }

    pub fn length(&self) -> Length {
        self.gb().quotient_kdim()
    }

    pub fn is_zero(&self) -> bool {
        let n = self.base.poly().nvars();
        let red = Reducer::new(self.base.ctx(), self.gb().elems());
        (0..self.rank as u32).all(|i| {
            red.reduces_to_zero(&SVec {
                terms: vec![(i, Monomial::one(n), 1)],
            })
        })
    }

    pub fn normal_form(&self, v: &FreeVector) -> Result<FreeVector> {
        self.gb().normal_form(v)
    }

    /// Fitt_0: the ideal of r x r minors of the relation matrix. The unit
    /// ideal when r = 0, the zero ideal (no generators) when there are
    /// fewer than r relations.
    pub fn fitting_ideal(&self) -> Vec<Polynomial> {
        let ring = self.base.poly();
        if self.rank == 0 {
            return vec![Polynomial::one(ring)];
        }
        let cols = self.relations();
        let rows: Vec<Vec<Polynomial>> = (0..self.rank)
            .map(|i| cols.iter().map(|c| c.get(i).clone()).collect())
            .collect();
        super::maximal_minors(&rows)
            .into_iter()
            .filter(|p| !p.is_zero())
            .collect()
    }

    /// Direct sum of `copies` copies, blocks laid out consecutively.
    pub(crate) fn power(&self, copies: usize) -> PresentedModule {
        let l = self.rank as u32;
        let mut rels = Vec::with_capacity(copies * self.relations.len());
        for b in 0..copies as u32 {
            for r in &self.relations {
                rels.push(r.shift(b * l));
            }
        }
        PresentedModule::from_svecs(&self.base, copies * self.rank, rels)
    }
}

/// A homomorphism of presented modules given by a matrix on free generators.
#[derive(Clone)]
pub struct ModuleMap {
    source: Arc<PresentedModule>,
    target: Arc<PresentedModule>,
    cols: Vec<SVec>,
}

impl std::fmt::Debug for ModuleMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ModuleMap")
            .field("source_rank", &self.source.rank())
            .field("target_rank", &self.target.rank())
            .finish()
    }
}

impl ModuleMap {
    /// `matrix` has `target.rank()` rows and `source.rank()` columns.
    pub fn new(
        source: Arc<PresentedModule>,
        target: Arc<PresentedModule>,
        matrix: &[Vec<Polynomial>],
    ) -> Result<Self> {
        if matrix.len() != target.rank() {
            return Err(Error::RankMismatch {
                expected: target.rank(),
                found: matrix.len(),
            });
        }
        let order = source.base().poly().order;
        let mut cols = Vec::with_capacity(source.rank());
        for j in 0..source.rank() {
            let mut comps = Vec::with_capacity(target.rank());
            for row in matrix {
                if row.len() != source.rank() {
                    return Err(Error::RankMismatch {
                        expected: source.rank(),
                        found: row.len(),
                    });
                }
                comps.push(row[j].clone());
            }
            cols.push(FreeVector::new(comps)?.to_svec(order));
        }
        let map = ModuleMap {
            source,
            target,
            cols,
        };
        if !map.is_well_defined() {
            return Err(Error::InvalidInput(
                "matrix does not respect the source relations".into(),
            ));
        }
        Ok(map)
    }

    pub(crate) fn from_svecs(
        source: Arc<PresentedModule>,
        target: Arc<PresentedModule>,
        cols: Vec<SVec>,
    ) -> Self {
        debug_assert_eq!(cols.len(), source.rank());
        ModuleMap {
            source,
            target,
            cols,
        }
    }

    pub fn source(&self) -> &Arc<PresentedModule> {
        &self.source
    }

    pub fn target(&self) -> &Arc<PresentedModule> {
        &self.target
    }

    pub(crate) fn columns(&self) -> &[SVec] {
        &self.cols
    }

    /// Dense matrix, `target.rank()` rows by `source.rank()` columns.
    pub fn matrix(&self) -> Vec<Vec<Polynomial>> {
        let ring = self.source.base().poly();
        let tr = self.target.rank();
        let cols: Vec<FreeVector> = self
            .cols
            .iter()
            .map(|c| FreeVector::from_svec(ring, tr, c))
            .collect();
        (0..tr)
            .map(|i| cols.iter().map(|c| c.get(i).clone()).collect())
            .collect()
    }

    pub(crate) fn apply_svec(&self, v: &SVec) -> SVec {
        let ctx = self.source.base().ctx();
        let mut terms = Vec::new();
        for (j, m, c) in &v.terms {
            for (p, t, a) in &self.cols[*j as usize].terms {
                terms.push((*p, t.mul(m), ctx.field.mul(*a, *c)));
            }
        }
        SVec::from_terms(ctx.field, terms, ctx.order)
    }

    pub fn apply(&self, v: &FreeVector) -> Result<FreeVector> {
        if v.rank() != self.source.rank() {
            return Err(Error::RankMismatch {
                expected: self.source.rank(),
                found: v.rank(),
            });
        }
        let order = self.source.base().poly().order;
        Ok(FreeVector::from_svec(
            self.source.base().poly(),
            self.target.rank(),
            &self.apply_svec(&v.to_svec(order)),
        ))
    }

    /// Every source relation maps into the target relations.
    pub fn is_well_defined(&self) -> bool {
        let red = Reducer::new(self.target.base().ctx(), self.target.gb().elems());
        self.source
            .relation_svecs()
            .iter()
            .all(|r| red.reduces_to_zero(&self.apply_svec(r)))
    }

    /// True when `self ∘ inner` is the zero map.
    pub(crate) fn composes_to_zero(&self, inner: &ModuleMap) -> bool {
        let red = Reducer::new(self.target.base().ctx(), self.target.gb().elems());
        inner
            .cols
            .iter()
            .all(|c| red.reduces_to_zero(&self.apply_svec(c)))
    }
}
