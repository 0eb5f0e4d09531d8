use std::cmp::Ordering;

use crate::arith::{Monomial, MonomialOrder, PrimeField};

use super::vector::{pot_cmp, SVec};

#[derive(Clone, Copy)]
pub(crate) struct Ctx {
    pub field: PrimeField,
    pub order: MonomialOrder,
}

struct Pair {
    i: usize,
    j: usize,
    pos: u32,
    lcm: Monomial,
    sugar: u32,
}

struct Elem {
    v: SVec,
    sugar: u32,
    mask: u64,
}

/// Reducer over a fixed list of monic vectors, indexed by leading component.
pub(crate) struct Reducer<'a> {
    ctx: Ctx,
    elems: &'a [SVec],
    by_pos: Vec<Vec<(usize, u64)>>,
}

impl<'a> Reducer<'a> {
    pub fn new(ctx: Ctx, elems: &'a [SVec]) -> Self {
        let mut by_pos: Vec<Vec<(usize, u64)>> = Vec::new();
        for (k, e) in elems.iter().enumerate() {
            if let Some(lead) = e.lead() {
                let p = lead.0 as usize;
                if by_pos.len() <= p {
                    by_pos.resize_with(p + 1, Vec::new);
                }
                by_pos[p].push((k, lead.1.support_mask()));
            }
        }
        Reducer { ctx, elems, by_pos }
    }

    fn divisor(&self, pos: u32, m: &Monomial) -> Option<usize> {
        let bucket = self.by_pos.get(pos as usize)?;
        let mask = m.support_mask();
        bucket
            .iter()
            .find(|(k, em)| em & !mask == 0 && self.elems[*k].terms[0].1.divides(m))
            .map(|(k, _)| *k)
    }

    /// Full normal form.
    pub fn reduce(&self, v: &SVec) -> SVec {
        reduce_with(self.ctx, v, true, |p, m| {
            self.divisor(p, m).map(|k| &self.elems[k])
        })
    }

    pub fn reduces_to_zero(&self, v: &SVec) -> bool {
        reduce_with(self.ctx, v, false, |p, m| {
            self.divisor(p, m).map(|k| &self.elems[k])
        })
        .is_zero()
    }
}

/// Generic reduction loop. With `full == false` only the leading term is
/// reduced until it becomes irreducible.
fn reduce_with<'b, F>(ctx: Ctx, v: &SVec, full: bool, find: F) -> SVec
where
    F: Fn(u32, &Monomial) -> Option<&'b SVec>,
{
    let mut rem: Vec<(u32, Monomial, u64)> = Vec::new();
    let mut cur = v.clone();
    let mut start = 0usize;
    loop {
        if start >= cur.terms.len() {
            break;
        }
        let (pos, ref m, c) = cur.terms[start];
        if let Some(g) = find(pos, m) {
            let q = g.terms[0].1.quotient_of(m);
            let tail = SVec {
                terms: cur.terms[start..].to_vec(),
            };
            cur = tail.sub_mul(ctx.field, ctx.order, c, &q, g);
            start = 0;
        } else if full {
            rem.push(cur.terms[start].clone());
            start += 1;
        } else {
            rem.extend(cur.terms.drain(start..));
            break;
        }
    }
    SVec { terms: rem }
}

/// Buchberger's algorithm over k[x]^r with POT order, sugar selection and
/// the Gebauer-Moeller criteria. The product criterion is used only when all
/// leading terms sit in rank one, where it is valid.
pub(crate) fn groebner(ctx: Ctx, gens: Vec<SVec>, ideal_case: bool) -> Vec<SVec> {
    let mut elems: Vec<Elem> = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let mut input: Vec<SVec> = gens.into_iter().filter(|g| !g.is_zero()).collect();
    input.sort_by(|a, b| {
        let la = a.lead().unwrap();
        let lb = b.lead().unwrap();
        pot_cmp(ctx.order, (la.0, &la.1), (lb.0, &lb.1))
    });

    for g in input {
        let sugar = g.max_degree();
        let h = top_reduce(ctx, &g, &elems, &active);
        if h.is_zero() {
            continue;
        }
        insert(h, sugar, &mut elems, &mut active, &mut pairs, ideal_case);
    }

    while let Some(k) = select(&pairs, ctx.order) {
        let pair = pairs.swap_remove(k);
        let s = spoly(ctx, &elems[pair.i].v, &elems[pair.j].v, &pair.lcm);
        let h = top_reduce(ctx, &s, &elems, &active);
        if h.is_zero() {
            continue;
        }
        insert(h, pair.sugar, &mut elems, &mut active, &mut pairs, ideal_case);
    }

    let basis: Vec<SVec> = active.iter().map(|&k| elems[k].v.clone()).collect();
    reduce_basis(ctx, basis)
}

fn select(pairs: &[Pair], order: MonomialOrder) -> Option<usize> {
    let mut best: Option<usize> = None;
    for (k, p) in pairs.iter().enumerate() {
        best = match best {
            None => Some(k),
            Some(b) => {
                let q = &pairs[b];
                let ord = p
                    .sugar
                    .cmp(&q.sugar)
                    .then_with(|| pot_cmp(order, (q.pos, &q.lcm), (p.pos, &p.lcm)))
                    .then_with(|| (p.i, p.j).cmp(&(q.i, q.j)));
                if ord == Ordering::Less {
                    Some(k)
                } else {
                    Some(b)
                }
            }
        };
    }
    best
}

fn spoly(ctx: Ctx, f: &SVec, g: &SVec, lcm: &Monomial) -> SVec {
    let lf = &f.terms[0];
    let lg = &g.terms[0];
    let mf = lf.1.quotient_of(lcm);
    let mg = lg.1.quotient_of(lcm);
    // f and g are monic
    f.mul_monomial(&mf).sub_mul(ctx.field, ctx.order, 1, &mg, g)
}

fn top_reduce(ctx: Ctx, v: &SVec, elems: &[Elem], active: &[usize]) -> SVec {
    let mut out = reduce_with(ctx, v, false, |p, m| {
        let mask = m.support_mask();
        active
            .iter()
            .map(|&k| &elems[k])
            .find(|e| {
                e.v.terms[0].0 == p && e.mask & !mask == 0 && e.v.terms[0].1.divides(m)
            })
            .map(|e| &e.v)
    });
    out.make_monic(ctx.field);
    out
}

fn insert(
    h: SVec,
    sugar: u32,
    elems: &mut Vec<Elem>,
    active: &mut Vec<usize>,
    pairs: &mut Vec<Pair>,
    ideal_case: bool,
) {
    let hk = elems.len();
    let (hpos, hlead) = {
        let l = h.lead().unwrap();
        (l.0, l.1.clone())
    };
    elems.push(Elem {
        mask: hlead.support_mask(),
        v: h,
        sugar,
    });

    let hdeg = hlead.degree();
    let hsug = sugar;
    // candidate pairs {h, g}
    let mut cand: Vec<(usize, Monomial, bool)> = Vec::new();
    for &g in active.iter() {
        let gl = &elems[g].v.terms[0];
        if gl.0 != hpos {
            continue;
        }
        let lcm = hlead.lcm(&gl.1);
        let coprime = ideal_case && hlead.coprime(&gl.1);
        cand.push((g, lcm, coprime));
    }
    // Gebauer-Moeller: drop pairs whose lcm is a proper multiple of another's
    let mut keep: Vec<bool> = vec![true; cand.len()];
    for a in 0..cand.len() {
        if cand[a].2 {
            continue;
        }
        for b in 0..cand.len() {
            if a == b || !keep[b] {
                continue;
            }
            if cand[b].1.divides(&cand[a].1) && (cand[b].1 != cand[a].1 || b < a) {
                keep[a] = false;
                break;
            }
        }
    }
    // coprime pairs kill every pair with the same lcm, then vanish themselves
    for a in 0..cand.len() {
        if !cand[a].2 || !keep[a] {
            continue;
        }
        for b in 0..cand.len() {
            if b != a && cand[b].1 == cand[a].1 {
                keep[b] = false;
            }
        }
        keep[a] = false;
    }

    // prune old pairs: T(h) | lcm(g1,g2) and lcm(g1,h), lcm(g2,h) both differ
    pairs.retain(|p| {
        if p.pos != hpos || !hlead.divides(&p.lcm) {
            return true;
        }
        let l1 = elems[p.i].v.terms[0].1.lcm(&hlead);
        let l2 = elems[p.j].v.terms[0].1.lcm(&hlead);
        l1 == p.lcm || l2 == p.lcm
    });

    for (k, (g, lcm, _)) in cand.into_iter().enumerate() {
        if !keep[k] {
            continue;
        }
        let ge = &elems[g];
        let gdeg = ge.v.terms[0].1.degree();
        let ldeg = lcm.degree();
        let s = (hsug - hdeg.min(hsug)).max(ge.sugar - gdeg.min(ge.sugar)) + ldeg;
        pairs.push(Pair {
            i: g,
            j: hk,
            pos: hpos,
            lcm,
            sugar: s,
        });
    }

    active.retain(|&g| {
        let gl = &elems[g].v.terms[0];
        !(gl.0 == hpos && hlead.divides(&gl.1))
    });
    active.push(hk);
}

/// Minimalizes and tail-reduces a Groebner basis; the output is sorted
/// ascending by leading term.
pub(crate) fn reduce_basis(ctx: Ctx, mut basis: Vec<SVec>) -> Vec<SVec> {
    for b in basis.iter_mut() {
        b.make_monic(ctx.field);
    }
    basis.retain(|b| !b.is_zero());
    basis.sort_by(|a, b| {
        let la = a.lead().unwrap();
        let lb = b.lead().unwrap();
        pot_cmp(ctx.order, (la.0, &la.1), (lb.0, &lb.1))
    });
    basis.dedup_by(|a, b| a.terms[0].0 == b.terms[0].0 && a.terms[0].1 == b.terms[0].1);
    let mut minimal: Vec<SVec> = Vec::new();
    for b in basis {
        let l = b.lead().unwrap();
        let redundant = minimal.iter().any(|m| {
            let ml = m.lead().unwrap();
            ml.0 == l.0 && ml.1.divides(&l.1)
        });
        if !redundant {
            minimal.push(b);
        }
    }
    // a leading term never divides a smaller term, so every element may stay
    // in the reducer while its own tail is processed
    let reducer = Reducer::new(ctx, &minimal);
    let mut out = Vec::with_capacity(minimal.len());
    for v in &minimal {
        let tail = SVec {
            terms: v.terms[1..].to_vec(),
        };
        let red = reducer.reduce(&tail);
        let mut w = SVec {
            terms: vec![v.terms[0].clone()],
        };
        w.terms.extend(red.terms);
        out.push(w);
    }
    out
}
