use std::cmp::Ordering;
use std::sync::Arc;

use crate::arith::{same_ring, Monomial, MonomialOrder, PolyRing, Polynomial, PrimeField};
use crate::error::{Error, Result};

/// An element of the free module k[x]^r, one polynomial per component.
#[derive(Clone, PartialEq, Eq)]
pub struct FreeVector {
    components: Vec<Polynomial>,
}

impl FreeVector {
    pub fn new(components: Vec<Polynomial>) -> Result<Self> {
        if let Some(first) = components.first() {
            if components.iter().any(|c| !same_ring(c.ring(), first.ring())) {
                return Err(Error::RingMismatch);
            }
        }
        Ok(FreeVector { components })
    }

    pub fn zero(ring: &Arc<PolyRing>, rank: usize) -> Self {
        FreeVector {
            components: vec![Polynomial::zero(ring); rank],
        }
    }

    /// `c * e_i`
    pub fn unit(ring: &Arc<PolyRing>, rank: usize, i: usize, c: Polynomial) -> Self {
        let mut v = Self::zero(ring, rank);
        v.components[i] = c;
        v
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn get(&self, i: usize) -> &Polynomial {
        &self.components[i]
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Polynomial::is_zero)
    }

    pub fn scale_by(&self, p: &Polynomial) -> Result<FreeVector> {
        let comps = self
            .components
            .iter()
            .map(|c| c.mul(p))
            .collect::<Result<Vec<_>>>()?;
        Ok(FreeVector { components: comps })
    }

    pub fn add(&self, other: &FreeVector) -> Result<FreeVector> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                found: other.rank(),
            });
        }
        let comps = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a.add(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(FreeVector { components: comps })
    }

    pub fn render(&self) -> String {
        let parts: Vec<String> = self.components.iter().map(Polynomial::render).collect();
        format!("({})", parts.join(", "))
    }

    pub(crate) fn to_svec(&self, order: MonomialOrder) -> SVec {
        let Some(first) = self.components.first() else {
            return SVec::new();
        };
        let field = first.ring().field;
        let mut terms = Vec::new();
        for (i, c) in self.components.iter().enumerate() {
            for (m, a) in c.terms() {
                terms.push((i as u32, m.clone(), *a));
            }
        }
        SVec::from_terms(field, terms, order)
    }

    pub(crate) fn from_svec(ring: &Arc<PolyRing>, rank: usize, v: &SVec) -> FreeVector {
        let mut parts: Vec<Vec<(Monomial, u64)>> = vec![Vec::new(); rank];
        for (pos, m, c) in &v.terms {
            parts[*pos as usize].push((m.clone(), *c));
        }
        FreeVector {
            components: parts
                .into_iter()
                .map(|t| Polynomial::from_terms(ring, t))
                .collect(),
        }
    }
}

impl std::fmt::Debug for FreeVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.render())
    }
}

/// Position-over-term comparison: lower component index is larger, then the
/// monomial order decides.
#[inline]
pub(crate) fn pot_cmp(
    order: MonomialOrder,
    a: (u32, &Monomial),
    b: (u32, &Monomial),
) -> Ordering {
    b.0.cmp(&a.0).then_with(|| order.cmp(a.1, b.1))
}

/// Sparse module element: terms `(component, monomial, coefficient)` sorted
/// strictly descending in the POT order. Internal workhorse of every
/// Groebner computation.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub(crate) struct SVec {
    pub terms: Vec<(u32, Monomial, u64)>,
}

impl SVec {
    pub fn new() -> Self {
        SVec { terms: Vec::new() }
    }

    /// Sorts and merges duplicate terms with proper field arithmetic.
    pub fn from_terms(
        field: PrimeField,
        mut terms: Vec<(u32, Monomial, u64)>,
        order: MonomialOrder,
    ) -> SVec {
        terms.sort_by(|a, b| pot_cmp(order, (b.0, &b.1), (a.0, &a.1)));
        let mut out: Vec<(u32, Monomial, u64)> = Vec::with_capacity(terms.len());
        for (p, m, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == p && last.1 == m => last.2 = field.add(last.2, c),
                _ => out.push((p, m, c % field.modulus())),
            }
        }
        out.retain(|t| t.2 != 0);
        SVec { terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&(u32, Monomial, u64)> {
        self.terms.first()
    }

    /// Largest total degree over all terms.
    pub fn max_degree(&self) -> u32 {
        self.terms.iter().map(|t| t.1.degree()).max().unwrap_or(0)
    }

    pub fn make_monic(&mut self, field: PrimeField) {
        if let Some(&(_, _, c)) = self.terms.first() {
            if c != 1 {
                let inv = field.inv(c);
                for t in &mut self.terms {
                    t.2 = field.mul(t.2, inv);
                }
            }
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> SVec {
        SVec {
            terms: self
                .terms
                .iter()
                .map(|(p, t, a)| (*p, t.mul(m), *a))
                .collect(),
        }
    }

    /// Shifts every component index by `by`.
    pub fn shift(&self, by: u32) -> SVec {
        SVec {
            terms: self
                .terms
                .iter()
                .map(|(p, m, c)| (p + by, m.clone(), *c))
                .collect(),
        }
    }

    /// Returns `self - c * m * other`, where `self` and `other` are sorted.
    pub fn sub_mul(
        &self,
        field: PrimeField,
        order: MonomialOrder,
        c: u64,
        m: &Monomial,
        other: &SVec,
    ) -> SVec {
        let a = &self.terms;
        let b = &other.terms;
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let negc = field.neg(c);
        let mut bt: Option<(u32, Monomial, u64)> = b.first().map(|t| (t.0, t.1.mul(m), t.2));
        while i < a.len() {
            let Some(bj) = bt.as_ref() else { break };
            match pot_cmp(order, (a[i].0, &a[i].1), (bj.0, &bj.1)) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let (p, mm, cc) = bt.take().unwrap();
                    out.push((p, mm, field.mul(cc, negc)));
                    j += 1;
                    bt = b.get(j).map(|t| (t.0, t.1.mul(m), t.2));
                }
                Ordering::Equal => {
                    let v = field.add(a[i].2, field.mul(bj.2, negc));
                    if v != 0 {
                        out.push((a[i].0, a[i].1.clone(), v));
                    }
                    i += 1;
                    j += 1;
                    bt = b.get(j).map(|t| (t.0, t.1.mul(m), t.2));
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        if let Some((p, mm, cc)) = bt {
            out.push((p, mm, field.mul(cc, negc)));
            for t in &b[j + 1..] {
                out.push((t.0, t.1.mul(m), field.mul(t.2, negc)));
            }
        }
        SVec { terms: out }
    }
}
