//! Hilbert functions, series and coefficients.

use num_integer::binomial;
use serde::{Deserialize, Serialize};

use crate::config::Config;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::spec::RingSpec;
use crate::truncated::Presentation;
use crate::with_field;

/// `Σ H(n) z^n = h(z) / (1 - z)^d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HilbertSeries {
    pub d: usize,
    pub h: Vec<i64>,
}

impl HilbertSeries {
    pub fn new(d: usize, mut h: Vec<i64>) -> Self {
        while h.last() == Some(&0) {
            h.pop();
        }
        HilbertSeries { d, h }
    }

    /// `e_i = h^{(i)}(1) / i!`, defined for every `i`.
    pub fn e(&self, i: usize) -> i64 {
        self.h
            .iter()
            .enumerate()
            .skip(i)
            .map(|(k, &c)| binomial(k as i64, i as i64) * c)
            .sum()
    }

    /// `e_0, ..., e_d`.
    pub fn coefficients(&self) -> Vec<i64> {
        (0..=self.d).map(|i| self.e(i)).collect()
    }

    pub fn multiplicity(&self) -> i64 {
        self.e(0)
    }

    /// `h = μ(m) - d`, the coefficient of `z`.
    pub fn embedding_codim(&self) -> i64 {
        self.h.get(1).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> usize {
        self.h.len().saturating_sub(1)
    }

    /// Coefficient of `z^n` in `h(z)/(1-z)^k`.
    fn coefficient(&self, k: usize, n: usize) -> i64 {
        self.h
            .iter()
            .enumerate()
            .take(n + 1)
            .map(|(j, &c)| c * stars_and_bars(n - j, k))
            .sum()
    }

    /// `H(n) = ℓ(m^n/m^{n+1})`.
    pub fn hilbert_function(&self, n: usize) -> i64 {
        self.coefficient(self.d, n)
    }

    /// `ℓ(A/m^{n+1})`.
    pub fn samuel_function(&self, n: usize) -> i64 {
        self.coefficient(self.d + 1, n)
    }

    /// `P(n) = Σ (-1)^i e_i C(n+d-i, d-i)`.
    pub fn samuel_polynomial(&self, n: usize) -> i64 {
        (0..=self.d)
            .map(|i| {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                sign * self.e(i) * binomial((n + self.d - i) as i64, (self.d - i) as i64)
            })
            .sum()
    }

    /// Least `n_0` with `ℓ(A/m^{n+1}) = P(n)` for all `n >= n_0`.
    pub fn postulation_index(&self) -> usize {
        // agreement is automatic once n >= deg h - d
        let mut n0 = self.degree().saturating_sub(self.d);
        while n0 > 0 && self.samuel_function(n0 - 1) == self.samuel_polynomial(n0 - 1) {
            n0 -= 1;
        }
        n0
    }
}

/// Coefficient of `z^n` in `1/(1-z)^k`.
fn stars_and_bars(n: usize, k: usize) -> i64 {
    if k == 0 {
        i64::from(n == 0)
    } else {
        binomial((n + k - 1) as i64, (k - 1) as i64)
    }
}

impl std::fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", render_polynomial(&self.h, "z"))
    }
}

/// `1 + 3z + 3z^3 - z^4`.
pub fn render_polynomial(coeffs: &[i64], var: &str) -> String {
    let mut out = String::new();
    for (k, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        if out.is_empty() {
            if c < 0 {
                out.push('-');
            }
        } else {
            out.push_str(if c < 0 { " - " } else { " + " });
        }
        let a = c.unsigned_abs();
        if a != 1 || k == 0 {
            out.push_str(&a.to_string());
        }
        match k {
            0 => {}
            1 => out.push_str(var),
            _ => out.push_str(&format!("{var}^{k}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// A series together with the Hilbert function values it was read from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    pub series: HilbertSeries,
    /// `H(0), ..., H(N-1)`, all exact.
    pub counts: Vec<u64>,
    pub truncation: u32,
}

/// Reads `(d, h)` off `H(0..N)`, if the counts already determine it.
///
/// The numerator `(1-z)^d Σ H(n) z^n` is accepted for the least `d` whose
/// truncation ends in at least `d + 2` zeros. A known dimension is the only
/// candidate tried.
pub fn read_series(counts: &[u64], max_dim: usize, known: Option<usize>) -> Option<HilbertSeries> {
    if let Some(k) = counts.iter().skip(1).position(|&c| c == 0) {
        return Some(HilbertSeries::new(0, counts[..=k].iter().map(|&c| c as i64).collect()));
    }
    let mut g: Vec<i64> = counts.iter().map(|&c| c as i64).collect();
    for d in 0..=known.unwrap_or(max_dim) {
        if d > 0 {
            for i in (1..g.len()).rev() {
                g[i] -= g[i - 1];
            }
        }
        if known.is_some_and(|k| k != d) {
            continue;
        }
        let last = g.iter().rposition(|&c| c != 0)?;
        if g.len() - 1 - last >= d + 2 {
            return Some(HilbertSeries::new(d, g[..=last].to_vec()));
        }
    }
    None
}

/// Truncation limit for the stabilization loop.
const MAX_ORDER: u32 = crate::groebner::MAX_TRUNCATION;

/// Hilbert series of a presentation, growing the truncation until the
/// numerator stabilizes.
pub fn compute_series<F: Field>(
    pres: &Presentation,
    field: &F,
    start: u32,
    cap: usize,
    declared: Option<usize>,
    max_dim: Option<usize>,
) -> Result<HilbertData> {
    let mut n = start.max(2);
    let mut first = true;
    loop {
        let counts = match pres.hilbert_counts(field, n, cap) {
            Ok(c) => c,
            Err(Error::ResourceLimit(msg)) if !first => {
                return Err(Error::NoStabilization(format!("numerator still moving at order {n}: {msg}")));
            }
            Err(e) => return Err(e),
        };
        first = false;
        if let Some(series) = read_series(&counts, max_dim.unwrap_or(pres.ngens()), pres.known_dimension()) {
            if let Some(declared) = declared {
                if declared != series.d {
                    return Err(Error::DeclaredDimension {
                        declared,
                        computed: series.d,
                    });
                }
            }
            return Ok(HilbertData {
                series,
                counts,
                truncation: n,
            });
        }
        if n >= MAX_ORDER {
            return Err(Error::NoStabilization(format!("numerator still moving at order {n}")));
        }
        n = (n + 2).min(MAX_ORDER);
    }
}

/// Hilbert data of a spec under `config`.
pub fn hilbert_data(spec: &RingSpec, config: &Config) -> Result<HilbertData> {
    let pres = Presentation::of(spec)?;
    let start = config.window_for(spec.max_generator_degree());
    with_field!(config.field_for(spec.field()), |f| compute_series(
        &pres,
        &f,
        start,
        config.cap,
        spec.declared_dimension(),
        None
    ))
}

pub fn h_polynomial(spec: &RingSpec, config: &Config) -> Result<HilbertSeries> {
    Ok(hilbert_data(spec, config)?.series)
}

/// `H(n)` computed directly in `A/m^{n+1}`.
pub fn hilbert_function(spec: &RingSpec, n: u32, config: &Config) -> Result<u64> {
    let pres = Presentation::of(spec)?;
    let counts = with_field!(config.field_for(spec.field()), |f| pres.hilbert_counts(
        &f,
        (n + 1).max(2),
        config.cap
    ))?;
    Ok(counts[n as usize])
}

pub fn hilbert_coefficient(hs: &HilbertSeries, i: usize) -> i64 {
    hs.e(i)
}

pub fn multiplicity(spec: &RingSpec, config: &Config) -> Result<i64> {
    Ok(h_polynomial(spec, config)?.multiplicity())
}

pub fn embedding_codim(spec: &RingSpec, config: &Config) -> Result<i64> {
    Ok(h_polynomial(spec, config)?.embedding_codim())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SamuelCheck {
    pub postulation_index: usize,
    /// `(n, ℓ(A/m^{n+1}))` for every checked `n`.
    pub lengths: Vec<(usize, i64)>,
}

/// Compares partial sums of measured Hilbert function values with the
/// Samuel polynomial of `hs` past the postulation index.
pub fn samuel_check(hs: &HilbertSeries, counts: &[u64]) -> Result<SamuelCheck> {
    let n0 = hs.postulation_index();
    let mut total = 0i64;
    let mut lengths = Vec::new();
    for (n, &c) in counts.iter().enumerate() {
        total += c as i64;
        if n >= n0 {
            let p = hs.samuel_polynomial(n);
            if p != total {
                return Err(Error::CrossCheckFailure(format!(
                    "length of A/m^{} is {total}, Samuel polynomial gives {p}",
                    n + 1
                )));
            }
            lengths.push((n, total));
        }
    }
    if lengths.is_empty() {
        return Err(Error::CrossCheckFailure(format!(
            "no measured value past the postulation index {n0}"
        )));
    }
    Ok(SamuelCheck {
        postulation_index: n0,
        lengths,
    })
}

/// Recomputes the Hilbert function a few orders past the postulation index
/// and checks it against the Samuel polynomial of `hs`.
pub fn hilbert_samuel_check(spec: &RingSpec, hs: &HilbertSeries, config: &Config) -> Result<SamuelCheck> {
    let pres = Presentation::of(spec)?;
    let n = (hs.postulation_index() + hs.d + 3).max(config.window_for(spec.max_generator_degree()) as usize) as u32;
    let counts = with_field!(config.field_for(spec.field()), |f| pres.hilbert_counts(&f, n, config.cap))?;
    samuel_check(hs, &counts)
}
