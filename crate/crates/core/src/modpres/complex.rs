use std::sync::Arc;

use rayon::prelude::*;

use crate::arith::Monomial;
use crate::error::{Error, Result};
use crate::groebner::{
    groebner, hilbert, kernel_svecs, FreeVector, Length, QuotientRing, Reducer, SVec,
};

use super::module::{ModuleMap, PresentedModule};

/// Modules at positions 0..N with differentials d_i: C_i -> C_{i-1}.
///
/// `offset` is added to every position to obtain the homological index used
/// for signs, so a complex living in degrees -1..2 is stored as 0..3 with
/// offset -1.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    modules: Vec<Arc<PresentedModule>>,
    maps: Vec<ModuleMap>,
    offset: i64,
}

impl ChainComplex {
    /// `maps[i]` is d_{i+1}: `modules[i+1] -> modules[i]`. Checks shapes and
    /// d^2 = 0.
    pub fn new(
        modules: Vec<Arc<PresentedModule>>,
        maps: Vec<ModuleMap>,
        offset: i64,
    ) -> Result<Self> {
        let c = Self::unchecked(modules, maps, offset)?;
        if let Some(i) = c.first_nonzero_composition() {
            return Err(Error::NotAComplex(i));
        }
        Ok(c)
    }

    pub(crate) fn unchecked(
        modules: Vec<Arc<PresentedModule>>,
        maps: Vec<ModuleMap>,
        offset: i64,
    ) -> Result<Self> {
        if modules.is_empty() || maps.len() + 1 != modules.len() {
            return Err(Error::InvalidInput(format!(
                "{} modules need {} maps, got {}",
                modules.len(),
                modules.len().saturating_sub(1),
                maps.len()
            )));
        }
        for (i, d) in maps.iter().enumerate() {
            if !Arc::ptr_eq(d.source(), &modules[i + 1]) || !Arc::ptr_eq(d.target(), &modules[i])
            {
                return Err(Error::InvalidInput(format!(
                    "differential {} does not connect positions {} and {}",
                    i + 1,
                    i + 1,
                    i
                )));
            }
        }
        Ok(ChainComplex {
            modules,
            maps,
            offset,
        })
    }

    /// Smallest i with d_i ∘ d_{i+1} != 0.
    pub fn first_nonzero_composition(&self) -> Option<usize> {
        (1..self.maps.len()).find(|&i| !self.maps[i - 1].composes_to_zero(&self.maps[i]))
    }

    pub fn len(&self) -> usize {
        self.modules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modules.is_empty()
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn modules(&self) -> &[Arc<PresentedModule>] {
        &self.modules
    }

    pub fn module(&self, i: usize) -> &Arc<PresentedModule> {
        &self.modules[i]
    }

    /// d_i: C_i -> C_{i-1}, for 1 <= i < len.
    pub fn differential(&self, i: usize) -> Option<&ModuleMap> {
        if i == 0 {
            None
        } else {
            self.maps.get(i - 1)
        }
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.modules.iter().map(|m| m.rank()).collect()
    }

    fn base(&self) -> &Arc<QuotientRing> {
        self.modules[0].base()
    }

    /// Groebner basis of the cycles Z_i (containing the relations of C_i).
    fn cycles_gb(&self, i: usize) -> Vec<SVec> {
        let m = &self.modules[i];
        let q = self.base();
        match self.differential(i) {
            Some(d) if d.target().rank() > 0 => kernel_svecs(
                q,
                d.target().rank(),
                d.columns(),
                d.target().relation_svecs(),
                m.relation_svecs(),
            ),
            _ => {
                let n = q.poly().nvars();
                (0..m.rank() as u32)
                    .map(|p| SVec {
                        terms: vec![(p, Monomial::one(n), 1)],
                    })
                    .collect()
            }
        }
    }

    /// Groebner basis of B_i + relations of C_i + J C_i.
    fn boundaries_gb(&self, i: usize) -> Vec<SVec> {
        let m = &self.modules[i];
        let q = self.base();
        let mut gens: Vec<SVec> = m.relation_svecs().to_vec();
        if let Some(d) = self.differential(i + 1) {
            gens.extend(d.columns().iter().cloned());
        }
        gens.extend(q.ideal_vectors(0, m.rank()));
        groebner(q.ctx(), gens, false)
    }

    fn cycles_and_boundaries(&self, i: usize) -> Result<(Vec<SVec>, Vec<SVec>)> {
        if i >= self.modules.len() {
            return Err(Error::InvalidInput(format!("no position {i}")));
        }
        let z = self.cycles_gb(i);
        let b = self.boundaries_gb(i);
        let red = Reducer::new(self.base().ctx(), &z);
        if !b.iter().all(|v| red.reduces_to_zero(v)) {
            return Err(Error::LiftFailure);
        }
        Ok((z, b))
    }

    /// ℓ(H_i), counted from the leading terms of cycles and boundaries.
    pub fn homology_length(&self, i: usize) -> Result<Length> {
        if self.modules.get(i).map(|m| m.rank()) == Some(0) {
            return Ok(Length::Finite(0));
        }
        let (z, b) = self.cycles_and_boundaries(i)?;
        Ok(subquotient_length(
            self.modules[i].rank(),
            self.base().poly().nvars(),
            &z,
            &b,
        ))
    }

    pub fn homology_is_zero(&self, i: usize) -> Result<bool> {
        if self.modules.get(i).map(|m| m.rank()) == Some(0) {
            return Ok(true);
        }
        let (z, b) = self.cycles_and_boundaries(i)?;
        let red = Reducer::new(self.base().ctx(), &b);
        Ok(z.iter().all(|v| red.reduces_to_zero(v)))
    }

    pub fn homology_lengths(&self) -> Result<Vec<Length>> {
        (0..self.len())
            .into_par_iter()
            .map(|i| self.homology_length(i))
            .collect()
    }

    /// Σ (-1)^(i + offset) ℓ(H_i).
    pub fn euler_characteristic(&self) -> Result<i64> {
        euler_characteristic(&self.homology_lengths()?, self.offset)
    }

    /// A presentation of H_i: generators are the cycle basis, relations the
    /// kernel of their map onto Z_i / B_i.
    pub fn homology_at(&self, i: usize) -> Result<PresentedModule> {
        let q = self.base();
        if self.modules.get(i).map(|m| m.rank()) == Some(0) {
            return Ok(PresentedModule::free(q, 0));
        }
        let (z, b) = self.cycles_and_boundaries(i)?;
        let s = z.len();
        if s == 0 {
            return Ok(PresentedModule::free(q, 0));
        }
        let rank = self.modules[i].rank();
        let rels = kernel_svecs(q, rank, &z, &b, &[]);
        let ideal = q.ideal_vectors(0, s);
        let red = Reducer::new(q.ctx(), &ideal);
        let rels: Vec<SVec> = rels
            .into_iter()
            .filter(|r| !red.reduces_to_zero(r))
            .collect();
        Ok(PresentedModule::from_svecs(q, s, rels))
    }

    /// Cycle generators Z_i in the free coordinates of C_i.
    pub fn cycles(&self, i: usize) -> Vec<FreeVector> {
        let rank = self.modules[i].rank();
        self.cycles_gb(i)
            .iter()
            .map(|v| FreeVector::from_svec(self.base().poly(), rank, v))
            .collect()
    }
}

/// #(LT(Z) \ LT(B)) summed over components.
pub(crate) fn subquotient_length(rank: usize, nvars: usize, z: &[SVec], b: &[SVec]) -> Length {
    let mut big = vec![Vec::new(); rank];
    let mut small = vec![Vec::new(); rank];
    for v in z {
        big[v.terms[0].0 as usize].push(v.terms[0].1.clone());
    }
    for v in b {
        small[v.terms[0].0 as usize].push(v.terms[0].1.clone());
    }
    let mut total: u128 = 0;
    for (bg, sm) in big.iter().zip(&small) {
        if bg.is_empty() {
            continue;
        }
        match hilbert::difference_count(bg, sm, nvars) {
            Some(c) => total += c,
            None => return Length::Infinite,
        }
    }
    Length::Finite(total as u64)
}

pub(crate) fn euler_characteristic(lengths: &[Length], offset: i64) -> Result<i64> {
    let mut chi = 0i64;
    for (i, l) in lengths.iter().enumerate() {
        let pos = i as i64 + offset;
        let v = l.finite().ok_or(Error::InfiniteHomology(pos))? as i64;
        chi += if pos.rem_euclid(2) == 0 { v } else { -v };
    }
    Ok(chi)
}

/// Generators of {v : f(v) ∈ relations of the target}, in source
/// coordinates; the source relations are included.
pub fn map_kernel(f: &ModuleMap) -> Vec<FreeVector> {
    let src = f.source();
    let q = src.base();
    let rank = src.rank();
    let gens = if f.target().rank() == 0 {
        let n = q.poly().nvars();
        (0..rank as u32)
            .map(|p| SVec {
                terms: vec![(p, Monomial::one(n), 1)],
            })
            .collect()
    } else {
        kernel_svecs(
            q,
            f.target().rank(),
            f.columns(),
            f.target().relation_svecs(),
            src.relation_svecs(),
        )
    };
    gens.iter()
        .map(|v| FreeVector::from_svec(q.poly(), rank, v))
        .collect()
}
