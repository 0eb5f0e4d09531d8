use std::sync::Arc;

use crate::arith::{same_ring, Polynomial};
use crate::error::{Error, Result};
use crate::groebner::{krull_dim, origin_supported, FreeVector, GroebnerBasis, Length, QuotientRing};
use crate::modpres::{maximal_minors, PresentedModule};

/// Φ (g x f over k[x]/J) and the module L, with the ideals derived from them.
#[derive(Debug)]
pub struct InputDatum {
    base: Arc<QuotientRing>,
    phi: Vec<Vec<Polynomial>>,
    l: Arc<PresentedModule>,
    minors: Vec<Polynomial>,
    fitting: Vec<Polynomial>,
    support_gb: GroebnerBasis,
    support_length: Length,
    certificate: bool,
    dim_l: Option<usize>,
}

/// The linear forms γ_j, stored as coefficient columns of Φ.
#[derive(Debug, Clone, PartialEq)]
pub struct GammaSystem {
    pub columns: Vec<Vec<Polynomial>>,
}

pub fn gamma_of(phi: &[Vec<Polynomial>]) -> GammaSystem {
    let f = phi.first().map(|r| r.len()).unwrap_or(0);
    GammaSystem {
        columns: (0..f)
            .map(|j| phi.iter().map(|row| row[j].clone()).collect())
            .collect(),
    }
}

fn ideal_gb(base: &QuotientRing, gens: &[Polynomial]) -> Result<GroebnerBasis> {
    let vecs: Vec<FreeVector> = gens
        .iter()
        .chain(base.ideal())
        .map(|p| FreeVector::new(vec![p.clone()]))
        .collect::<Result<_>>()?;
    if vecs.is_empty() {
        return Ok(base.ideal_gb().clone());
    }
    crate::groebner::buchberger(&vecs, base.poly().order, 1, None)
}

impl InputDatum {
    pub fn new(
        base: Arc<QuotientRing>,
        phi: Vec<Vec<Polynomial>>,
        l: Arc<PresentedModule>,
    ) -> Result<Self> {
        let g = phi.len();
        if g == 0 {
            return Err(Error::InvalidInput("matrix needs at least one row".into()));
        }
        let f = phi[0].len();
        if phi.iter().any(|r| r.len() != f) {
            return Err(Error::InvalidInput("ragged matrix".into()));
        }
        if f < g {
            return Err(Error::InvalidInput("f >= g required".into()));
        }
        if phi.iter().flatten().any(|p| !same_ring(p.ring(), base.poly())) {
            return Err(Error::RingMismatch);
        }
        if !Arc::ptr_eq(l.base(), &base) {
            return Err(Error::RingMismatch);
        }
        let minors = maximal_minors(&phi);
        let fitting = l.fitting_ideal();
        let mut support: Vec<Polynomial> = minors.iter().filter(|p| !p.is_zero()).cloned().collect();
        support.extend(fitting.iter().cloned());
        let support_gb = ideal_gb(&base, &support)?;
        let support_length = support_gb.quotient_kdim();
        let certificate = support_length.is_finite() && origin_supported(&support_gb)?;
        let fit_gb = ideal_gb(&base, &fitting)?;
        let dim_l = krull_dim(&fit_gb)?;
        Ok(InputDatum {
            base,
            phi,
            l,
            minors,
            fitting,
            support_gb,
            support_length,
            certificate,
            dim_l,
        })
    }

    pub fn base(&self) -> &Arc<QuotientRing> {
        &self.base
    }

    pub fn phi(&self) -> &[Vec<Polynomial>] {
        &self.phi
    }

    pub fn l(&self) -> &Arc<PresentedModule> {
        &self.l
    }

    pub fn g(&self) -> usize {
        self.phi.len()
    }

    pub fn f(&self) -> usize {
        self.phi[0].len()
    }

    pub fn gamma(&self) -> GammaSystem {
        gamma_of(&self.phi)
    }

    /// Every g x g minor, column subsets in lexicographic order (zeros kept).
    pub fn minors(&self) -> &[Polynomial] {
        &self.minors
    }

    /// Nonzero generators of I_g(Φ).
    pub fn minor_ideal(&self) -> Vec<Polynomial> {
        self.minors.iter().filter(|p| !p.is_zero()).cloned().collect()
    }

    pub fn fitting_ideal(&self) -> &[Polynomial] {
        &self.fitting
    }

    /// Groebner basis of I_g(Φ) + Fitt_0(L) + J.
    pub fn support_gb(&self) -> &GroebnerBasis {
        &self.support_gb
    }

    /// dim_k of k[x]/(I_g(Φ) + Fitt_0(L) + J).
    pub fn support_length(&self) -> Length {
        self.support_length
    }

    /// M ⊗ L is supported only at the origin.
    pub fn has_certificate(&self) -> bool {
        self.certificate
    }

    pub fn require_certificate(&self) -> Result<()> {
        if self.certificate {
            Ok(())
        } else {
            Err(Error::CertificateMissing)
        }
    }

    /// Krull dimension of k[x]/(Fitt_0(L) + J); `None` when L = 0.
    pub fn dim_l(&self) -> Option<usize> {
        self.dim_l
    }

    /// d = Dim(L) + g - 1.
    pub fn expected_degree(&self) -> Result<usize> {
        let dim = self
            .dim_l
            .ok_or_else(|| Error::InvalidInput("L is the zero module".into()))?;
        Ok(dim + self.g() - 1)
    }

    pub fn is_parameter(&self) -> Result<bool> {
        Ok(self.certificate && self.f() == self.expected_degree()?)
    }
}
