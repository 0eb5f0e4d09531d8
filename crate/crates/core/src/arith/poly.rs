use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use super::field::PrimeField;
use super::monomial::{Monomial, MonomialOrder};
use crate::error::{Error, Result};

/// The ambient polynomial ring F_p[x_1..x_n] together with its term order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyRing {
    pub field: PrimeField,
    pub vars: Vec<String>,
    pub order: MonomialOrder,
}

impl PolyRing {
    pub fn new(field: PrimeField, vars: Vec<String>, order: MonomialOrder) -> Arc<Self> {
        Arc::new(PolyRing { field, vars, order })
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }
}

/// A polynomial with coefficients in F_p.
///
/// Terms are kept sorted strictly descending in the ring's order and no
/// stored coefficient is zero.
#[derive(Clone)]
pub struct Polynomial {
    ring: Arc<PolyRing>,
    terms: Vec<(Monomial, u64)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

pub(crate) fn same_ring(a: &Arc<PolyRing>, b: &Arc<PolyRing>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl Polynomial {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<PolyRing>, c: u64) -> Self {
        let c = c % ring.field.modulus();
        let terms = if c == 0 {
            Vec::new()
        } else {
            vec![(Monomial::one(ring.nvars()), c)]
        };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        Self::constant(ring, 1)
    }

    pub fn variable(ring: &Arc<PolyRing>, i: usize) -> Self {
        Self::monomial(ring, Monomial::variable(ring.nvars(), i, 1), 1)
    }

    pub fn monomial(ring: &Arc<PolyRing>, m: Monomial, c: u64) -> Self {
        Self::from_terms(ring, vec![(m, c)])
    }

    /// Builds a normalized polynomial from arbitrary (possibly repeated) terms.
    pub fn from_terms(ring: &Arc<PolyRing>, mut terms: Vec<(Monomial, u64)>) -> Self {
        let f = ring.field;
        let order = ring.order;
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, u64)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            let c = c % f.modulus();
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = f.add(*lc, c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| *c != 0);
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, u64)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&(Monomial, u64)> {
        self.terms.first()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Coefficient of a monomial (zero when absent).
    pub fn coeff(&self, m: &Monomial) -> u64 {
        self.terms
            .iter()
            .find(|(t, _)| t == m)
            .map(|(_, c)| *c)
            .unwrap_or(0)
    }

    fn check(&self, other: &Polynomial) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        Ok(self.combine(other, false))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        Ok(self.combine(other, true))
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub fn scale(&self, c: u64) -> Polynomial {
        let f = self.ring.field;
        let c = c % f.modulus();
        if c == 0 {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), f.mul(*a, c)))
                .collect(),
        }
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(self.ring.field.neg(1))
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..e {
            acc = acc.mul_unchecked(self);
        }
        acc
    }

    pub(crate) fn combine(&self, other: &Polynomial, subtract: bool) -> Polynomial {
        let f = self.ring.field;
        let order = self.ring.order;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        let sgn = |c: u64| if subtract { f.neg(c) } else { c };
        while i < a.len() && j < b.len() {
            match order.cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0.clone(), sgn(b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = f.add(a[i].1, sgn(b[j].1));
                    if c != 0 {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), sgn(*c))));
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub(crate) fn mul_unchecked(&self, other: &Polynomial) -> Polynomial {
        let f = self.ring.field;
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                terms.push((ma.mul(mb), f.mul(*ca, *cb)));
            }
        }
        Polynomial::from_terms(&self.ring, terms)
    }

    /// Multiplies by a single term.
    pub fn mul_term(&self, m: &Monomial, c: u64) -> Polynomial {
        let f = self.ring.field;
        if c % f.modulus() == 0 {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(t, a)| (t.mul(m), f.mul(*a, c)))
                .collect(),
        }
    }

    /// Renders the polynomial in the input grammar (no spaces).
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let f = self.ring.field;
        let mut s = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let signed = f.to_signed(*c);
            let mag = signed.unsigned_abs();
            if signed < 0 {
                s.push('-');
            } else if k > 0 {
                s.push('+');
            }
            let mono = render_monomial(&self.ring.vars, m);
            match (mono.is_empty(), mag == 1) {
                (true, _) => s.push_str(&mag.to_string()),
                (false, true) => s.push_str(&mono),
                (false, false) => {
                    s.push_str(&mag.to_string());
                    s.push('*');
                    s.push_str(&mono);
                }
            }
        }
        s
    }
}

pub(crate) fn render_monomial(vars: &[String], m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (v, &e) in vars.iter().zip(m.exponents()) {
        match e {
            0 => {}
            1 => parts.push(v.clone()),
            _ => parts.push(format!("{v}^{e}")),
        }
    }
    parts.join("*")
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse_poly;

    fn ring(p: u64) -> Arc<PolyRing> {
        PolyRing::new(
            PrimeField::new(p).unwrap(),
            vec!["x".into(), "y".into()],
            MonomialOrder::Grevlex,
        )
    }

    #[test]
    fn difference_of_squares() {
        let r = ring(32003);
        let a = parse_poly("x+y", &r).unwrap();
        let b = parse_poly("x-y", &r).unwrap();
        assert_eq!(a.mul(&b).unwrap(), parse_poly("x^2-y^2", &r).unwrap());
    }

    #[test]
    fn cancellation() {
        let r = ring(32003);
        let a = parse_poly("x^2", &r).unwrap();
        assert!(a.add(&a.neg()).unwrap().is_zero());
    }

    #[test]
    fn characteristic_annihilates() {
        let r = ring(5);
        let x = Polynomial::variable(&r, 0);
        assert!(x.scale(5).is_zero());
    }

    #[test]
    fn ring_mismatch() {
        let a = Polynomial::one(&ring(5));
        let b = Polynomial::one(&ring(7));
        assert_eq!(a.add(&b), Err(Error::RingMismatch));
    }

    #[test]
    fn render_uses_symmetric_coefficients() {
        let r = ring(32003);
        let p = parse_poly("x^2*y - 3", &r).unwrap();
        assert_eq!(p.render(), "x^2*y-3");
        assert_eq!(p.terms()[1].1, 32000);
    }
}
