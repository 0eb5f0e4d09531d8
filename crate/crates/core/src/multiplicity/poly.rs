use serde::Serialize;

use crate::error::{Error, Result};
use crate::report::Int;

/// C(n, k) for any integer n.
pub(crate) fn binom(n: i128, k: usize) -> i128 {
    let mut acc: i128 = 1;
    for i in 0..k as i128 {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Integer-valued polynomial P(ν) = Σ c_i C(ν, i), valid on the sampled
/// tail ν >= `window_start`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertPoly {
    coeffs: Vec<i128>,
    degree_bound: usize,
    window_start: i64,
}

impl HilbertPoly {
    pub fn new(mut coeffs: Vec<i128>, degree_bound: usize, window_start: i64) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        HilbertPoly {
            coeffs,
            degree_bound,
            window_start,
        }
    }

    pub fn zero() -> Self {
        Self::new(Vec::new(), 0, 0)
    }

    /// Newton coefficients c_0..c_e, trailing zeros trimmed.
    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    /// c_i, zero beyond the stored range.
    pub fn coeff(&self, i: usize) -> i128 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    pub fn window_start(&self) -> i64 {
        self.window_start
    }

    /// Largest i with c_i != 0; `None` for the zero polynomial.
    pub fn effective_degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn eval(&self, nu: i64) -> i128 {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c * binom(nu as i128, i))
            .sum()
    }

    /// Σ sign_j P_j with integer weights.
    pub fn linear_combination(terms: &[(i128, &HilbertPoly)]) -> HilbertPoly {
        let len = terms.iter().map(|(_, p)| p.coeffs.len()).max().unwrap_or(0);
        let mut c = vec![0i128; len];
        for (w, p) in terms {
            for (i, v) in p.coeffs.iter().enumerate() {
                c[i] += w * v;
            }
        }
        let bound = terms.iter().map(|(_, p)| p.degree_bound).max().unwrap_or(0);
        let start = terms.iter().map(|(_, p)| p.window_start).max().unwrap_or(0);
        HilbertPoly::new(c, bound, start)
    }

    pub fn to_json(&self) -> HilbertPolyJson {
        HilbertPolyJson {
            newton: self.coeffs.iter().map(|&c| Int(c)).collect(),
            effective_degree: self.effective_degree(),
            degree_bound: self.degree_bound,
            window_start: self.window_start,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct HilbertPolyJson {
    pub newton: Vec<Int>,
    pub effective_degree: Option<usize>,
    pub degree_bound: usize,
    pub window_start: i64,
}

/// Newton interpolation from consecutive samples. The first D+1 samples fix
/// the forward differences; every difference of order > D across the whole
/// window must vanish. The result is expressed in the C(ν, i) basis.
pub fn newton_interpolate(samples: &[(i64, i128)], degree_bound: usize) -> Result<HilbertPoly> {
    if samples.len() < degree_bound + 1 {
        return Err(Error::InvalidInput(format!(
            "{} samples cannot fix a degree {} polynomial",
            samples.len(),
            degree_bound
        )));
    }
    if samples.windows(2).any(|w| w[1].0 != w[0].0 + 1) {
        return Err(Error::InvalidInput("samples must be at consecutive nu".into()));
    }
    let nu0 = samples[0].0;
    let mut row: Vec<i128> = samples.iter().map(|s| s.1).collect();
    let mut local = Vec::with_capacity(degree_bound + 1);
    for order in 0..row.len() {
        if order <= degree_bound {
            local.push(row[0]);
        } else if row.iter().any(|&v| v != 0) {
            return Err(Error::NotYetPolynomial(degree_bound));
        }
        row = row.windows(2).map(|w| w[1] - w[0]).collect();
    }
    // values of P on 0..=D, then forward differences at 0
    let at = |nu: i64| -> i128 {
        local
            .iter()
            .enumerate()
            .map(|(i, c)| c * binom((nu - nu0) as i128, i))
            .sum()
    };
    let mut vals: Vec<i128> = (0..=degree_bound as i64).map(at).collect();
    let mut coeffs = Vec::with_capacity(degree_bound + 1);
    while !vals.is_empty() {
        coeffs.push(vals[0]);
        vals = vals.windows(2).map(|w| w[1] - w[0]).collect();
    }
    Ok(HilbertPoly::new(coeffs, degree_bound, nu0))
}
