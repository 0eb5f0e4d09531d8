//! Independent length computation by linear algebra over F_p.
//!
//! For a submodule U of F = k[x]^r the quotient F / (U + m^(B+1) F) is finite
//! dimensional, spanned by the monomials of degree <= B, and its dimension
//! c(B) is non-decreasing in B. Once c(B) = c(B+1), Nakayama gives
//! m^(B+1) F ⊆ U locally at the origin, so c(B) is the length of F/U at the
//! origin. No Groebner basis is involved.

use std::collections::HashMap;

use crate::arith::{Monomial, PrimeField};
use crate::error::{Error, Result};
use crate::groebner::{QuotientRing, SVec};

/// dim_k F / (U + m^(B+1) F) for U generated by `gens` (J is adjoined).
pub(crate) fn truncated_corank(q: &QuotientRing, rank: usize, gens: &[SVec], b: u32) -> u64 {
    let n = q.poly().nvars();
    let field = q.poly().field;
    let mut all: Vec<SVec> = gens.to_vec();
    all.extend(q.ideal_vectors(0, rank));

    // monomials by descending degree so row leads sit at high degree
    let mut monos: Vec<Monomial> = Vec::new();
    for d in (0..=b).rev() {
        for e in crate::combinat::monomials_of_degree(n, d) {
            monos.push(Monomial::from_exponents(&e));
        }
    }
    if n == 0 {
        monos = vec![Monomial::one(0)];
    }
    let index: HashMap<&Monomial, usize> = monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let ncols = monos.len() * rank;

    let mut pivots: HashMap<u32, Vec<(u32, u64)>> = HashMap::new();
    for u in &all {
        let lo = u.terms.iter().map(|t| t.1.degree()).min().unwrap_or(0);
        for m in &monos {
            if m.degree() + lo > b {
                continue;
            }
            let mut row: Vec<(u32, u64)> = u
                .terms
                .iter()
                .filter(|t| t.1.degree() + m.degree() <= b)
                .map(|(p, t, c)| {
                    let col = index[&t.mul(m)] * rank + *p as usize;
                    (col as u32, *c)
                })
                .collect();
            row.sort_unstable_by_key(|t| t.0);
            insert_row(field, &mut pivots, row);
        }
    }
    (ncols - pivots.len()) as u64
}

fn insert_row(field: PrimeField, pivots: &mut HashMap<u32, Vec<(u32, u64)>>, mut row: Vec<(u32, u64)>) {
    loop {
        let Some(&(lead, c)) = row.first() else {
            return;
        };
        match pivots.get(&lead) {
            Some(p) => row = axpy(field, &row, field.neg(c), p),
            None => {
                let inv = field.inv(c);
                for t in &mut row {
                    t.1 = field.mul(t.1, inv);
                }
                pivots.insert(lead, row);
                return;
            }
        }
    }
}

/// a + s * b on sorted sparse rows.
fn axpy(field: PrimeField, a: &[(u32, u64)], s: u64, b: &[(u32, u64)]) -> Vec<(u32, u64)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i]);
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, field.mul(b[j].1, s)));
            j += 1;
        } else {
            let v = field.add(a[i].1, field.mul(b[j].1, s));
            if v != 0 {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Length at the origin of k[x]^rank / (gens + J), raising the truncation
/// from `start` until the corank stops growing.
pub(crate) fn local_length(
    q: &QuotientRing,
    rank: usize,
    gens: &[SVec],
    start: u32,
    cap: u32,
) -> Result<u64> {
    let mut b = start;
    let mut prev = truncated_corank(q, rank, gens, b);
    while b < cap {
        b += 1;
        let next = truncated_corank(q, rank, gens, b);
        if next == prev {
            return Ok(prev);
        }
        prev = next;
    }
    Err(Error::InvalidInput(format!(
        "dense oracle did not stabilize below degree {cap}"
    )))
}

/// Oracle value of the length of a presented module at the origin.
pub fn dense_module_length(p: &crate::modpres::PresentedModule, start: u32) -> Result<u64> {
    local_length(p.base(), p.rank(), p.relation_svecs(), start, start + 64)
}
