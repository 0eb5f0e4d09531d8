//! Index bookkeeping shared by the complexes: monomials in the T variables,
//! exterior subsets, binomials and shuffle signs.

/// Exponent vectors of total degree `d` in `g` variables, in descending
/// lexicographic order (T1^2, T1*T2, T2^2 for g = d = 2).
pub fn monomials_of_degree(g: usize, d: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    if g == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    let mut cur = vec![0u32; g];
    fill(&mut cur, 0, d, &mut out);
    out
}

fn fill(cur: &mut Vec<u32>, k: usize, left: u32, out: &mut Vec<Vec<u32>>) {
    if k + 1 == cur.len() {
        cur[k] = left;
        out.push(cur.clone());
        return;
    }
    for e in (0..=left).rev() {
        cur[k] = e;
        fill(cur, k + 1, left - e, out);
    }
}

/// Strictly increasing `p`-subsets of `0..f`, lexicographic.
pub fn subsets(f: usize, p: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if p > f {
        return out;
    }
    let mut cur: Vec<usize> = (0..p).collect();
    loop {
        out.push(cur.clone());
        let mut i = p;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < f - p + i {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        cur[i] += 1;
        for k in i + 1..p {
            cur[k] = cur[k - 1] + 1;
        }
    }
}

pub fn binomial(n: i64, k: i64) -> u64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// Parity of the permutation sorting the concatenation `a ++ b` where both
/// are increasing and disjoint: +1 or -1.
pub fn shuffle_sign(a: &[usize], b: &[usize]) -> i64 {
    let mut inversions = 0usize;
    for x in a {
        inversions += b.iter().filter(|y| *y < x).count();
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_order_and_counts() {
        assert_eq!(
            monomials_of_degree(2, 2),
            vec![vec![2, 0], vec![1, 1], vec![0, 2]]
        );
        for g in 1..5 {
            for d in 0..6u32 {
                assert_eq!(
                    monomials_of_degree(g, d).len() as u64,
                    binomial(d as i64 + g as i64 - 1, g as i64 - 1)
                );
            }
        }
        assert_eq!(monomials_of_degree(0, 0), vec![Vec::<u32>::new()]);
    }

    #[test]
    fn subsets_are_lexicographic() {
        assert_eq!(
            subsets(3, 2),
            vec![vec![0, 1], vec![0, 2], vec![1, 2]]
        );
        assert_eq!(subsets(3, 0), vec![Vec::<usize>::new()]);
        assert_eq!(subsets(2, 3).len(), 0);
        assert_eq!(subsets(5, 3).len(), 10);
    }

    #[test]
    fn signs() {
        assert_eq!(shuffle_sign(&[0, 1], &[2]), 1);
        assert_eq!(shuffle_sign(&[0, 2], &[1]), -1);
        assert_eq!(shuffle_sign(&[1, 2], &[0]), 1);
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(3, -1), 0);
    }
}
