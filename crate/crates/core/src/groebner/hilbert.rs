//! Hilbert series numerators of monomial ideals, used to count the
//! monomials lying between two monomial submodules.

use crate::arith::Monomial;

/// Polynomial in t with integer coefficients, index = power.
type TPoly = Vec<i128>;

fn tp_sub(a: &TPoly, b: &TPoly) -> TPoly {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| a.get(i).copied().unwrap_or(0) - b.get(i).copied().unwrap_or(0))
        .collect()
}

fn tp_add_shifted(a: &mut TPoly, b: &TPoly, shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (i, c) in b.iter().enumerate() {
        a[i + shift] += c;
    }
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|m| m.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// Numerator N(t) of the Hilbert series N(t)/(1-t)^n of k[x]/I.
pub(crate) fn numerator(gens: &[Monomial], nvars: usize) -> TPoly {
    num_rec(minimalize(gens.to_vec()), nvars)
}

fn num_rec(gens: Vec<Monomial>, nvars: usize) -> TPoly {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(Monomial::is_one) {
        return vec![0];
    }
    let pairwise_coprime = gens
        .iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.coprime(b)));
    if pairwise_coprime {
        let mut acc: TPoly = vec![1];
        for g in &gens {
            let d = g.degree() as usize;
            let mut next = acc.clone();
            next.resize(acc.len() + d, 0);
            for (i, c) in acc.iter().enumerate() {
                next[i + d] -= c;
            }
            acc = next;
        }
        return acc;
    }
    // pivot: the variable shared by the most generators, at the smallest
    // positive exponent it carries among them
    let mut best = (0usize, 0usize);
    for v in 0..nvars {
        let count = gens.iter().filter(|g| g.exponents()[v] > 0).count();
        if count > best.1 {
            best = (v, count);
        }
    }
    let var = best.0;
    let e = gens
        .iter()
        .map(|g| g.exponents()[var])
        .filter(|&x| x > 0)
        .min()
        .unwrap();
    let pivot = Monomial::variable(nvars, var, e);

    let mut plus = gens.clone();
    plus.push(pivot.clone());
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| {
            let mut ex = g.exponents().to_vec();
            ex[var] = ex[var].saturating_sub(e);
            Monomial::from_exponents(&ex)
        })
        .collect();
    let mut out = num_rec(minimalize(plus), nvars);
    let q = num_rec(minimalize(colon), nvars);
    tp_add_shifted(&mut out, &q, e as usize);
    out
}

/// Divides by (1-t)^n and evaluates at 1; `None` when the quotient is not a
/// polynomial (infinitely many monomials).
fn total_count(mut num: TPoly, nvars: usize) -> Option<u128> {
    for _ in 0..nvars {
        let s: i128 = num.iter().sum();
        if s != 0 {
            return None;
        }
        // num = (1 - t) q  =>  q_k = sum_{i<=k} num_i
        let mut q = Vec::with_capacity(num.len());
        let mut acc = 0i128;
        for c in &num {
            acc += c;
            q.push(acc);
        }
        while q.last() == Some(&0) {
            q.pop();
        }
        num = q;
    }
    let total: i128 = num.iter().sum();
    debug_assert!(total >= 0);
    Some(total as u128)
}

/// Number of monomials outside the ideal generated by `gens`.
pub(crate) fn standard_count(gens: &[Monomial], nvars: usize) -> Option<u128> {
    total_count(numerator(gens, nvars), nvars)
}

/// Number of monomials in `big \ small`, where `small ⊆ big` are monomial
/// ideals. `None` when infinite.
pub(crate) fn difference_count(
    big: &[Monomial],
    small: &[Monomial],
    nvars: usize,
) -> Option<u128> {
    let d = tp_sub(&numerator(small, nvars), &numerator(big, nvars));
    if d.iter().all(|&c| c == 0) {
        return Some(0);
    }
    total_count(d, nvars)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn counts_standard_monomials() {
        assert_eq!(standard_count(&[m(&[2, 0]), m(&[0, 3])], 2), Some(6));
        assert_eq!(
            standard_count(&[m(&[2, 0]), m(&[1, 1]), m(&[0, 2])], 2),
            Some(3)
        );
        assert_eq!(standard_count(&[m(&[1, 0])], 2), None);
        assert_eq!(standard_count(&[m(&[0, 0])], 2), Some(0));
        assert_eq!(standard_count(&[], 0), Some(1));
    }

    #[test]
    fn difference_of_nested_ideals() {
        // (x) \ (x^2, xy) in k[x,y] = {x}
        assert_eq!(
            difference_count(&[m(&[1, 0])], &[m(&[2, 0]), m(&[1, 1])], 2),
            Some(1)
        );
        // (x) \ (x^2): infinitely many x*y^k
        assert_eq!(difference_count(&[m(&[1, 0])], &[m(&[2, 0])], 2), None);
        assert_eq!(difference_count(&[m(&[1, 0])], &[m(&[1, 0])], 2), Some(0));
    }

    #[test]
    fn brute_force_agreement() {
        // random-ish staircase in three variables versus enumeration
        let gens = [m(&[3, 1, 0]), m(&[0, 2, 2]), m(&[4, 0, 0]), m(&[0, 5, 0]), m(&[1, 1, 1]), m(&[0, 0, 3])];
        let mut brute = 0;
        for a in 0..8u32 {
            for b in 0..8u32 {
                for c in 0..8u32 {
                    let t = m(&[a, b, c]);
                    if !gens.iter().any(|g| g.divides(&t)) {
                        brute += 1;
                    }
                }
            }
        }
        assert_eq!(standard_count(&gens, 3), Some(brute));
    }
}
