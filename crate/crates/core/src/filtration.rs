//! Superficial elements, minimal reductions, the Ratliff-Rush filtration and
//! the invariants read off them.
//!
//! Elements are linear forms, given by integer coefficient vectors in the
//! generators of the ring (interpreted in its field). All randomness comes
//! from a `ChaCha8Rng` seeded by the caller.

use std::sync::Arc;

use num_integer::binomial;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{SparseOperator, Subspace};
use crate::ring::LocalRing;
use crate::truncated::TruncatedAlgebra;

/// Widest truncation tried past the starting one when a table has not settled.
const EXTRA_ORDERS: u32 = 24;

/// A verified superficial element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuperficialElement {
    pub coeffs: Vec<i64>,
    pub seed: u64,
    /// Index of the successful draw.
    pub attempt: usize,
    /// `b_x(z)`; colon lengths and exact division agree on it.
    pub b: Vec<i64>,
    /// `ℓ((m^{n+1} : x)/m^n)` was measured for `n` below this order.
    pub checked_below: u32,
}

/// A superficial element together with the quotient it leaves.
#[derive(Debug)]
pub struct Step<F: Field> {
    pub element: SuperficialElement,
    pub quotient: LocalRing<F>,
}

pub fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A linear form with every coefficient nonzero.
pub fn random_form<F: Field>(field: &F, rng: &mut ChaCha8Rng, n: usize) -> Vec<i64> {
    (0..n).map(|_| field.random_nonzero(rng)).collect()
}

fn operator<F: Field>(t: &TruncatedAlgebra<F>, coeffs: &[i64]) -> SparseOperator<F> {
    let f = t.field();
    t.linear_form_op(&coeffs.iter().map(|&c| f.from_i64(c)).collect::<Vec<_>>())
}

/// `p / (1 - z)^d` when the division is exact.
pub fn divide_by_one_minus_z(p: &[i64], d: usize) -> Option<Vec<i64>> {
    let mut q = p.to_vec();
    for _ in 0..d {
        // (1 - z) q = p  means  q_k = p_k + q_{k-1}
        let mut acc = 0i64;
        let mut out = Vec::with_capacity(q.len());
        for c in &q {
            acc += c;
            out.push(acc);
        }
        if acc != 0 {
            return None;
        }
        q = out;
    }
    while q.last() == Some(&0) {
        q.pop();
    }
    Some(q)
}

/// `(1 - z)^d p`.
pub fn times_one_minus_z(p: &[i64], d: usize) -> Vec<i64> {
    let mut q = p.to_vec();
    q.resize(p.len() + d, 0);
    for _ in 0..d {
        for k in (1..q.len()).rev() {
            q[k] -= q[k - 1];
        }
    }
    while q.last() == Some(&0) {
        q.pop();
    }
    q
}

fn sub_poly(a: &[i64], b: &[i64]) -> Vec<i64> {
    let n = a.len().max(b.len());
    let mut out: Vec<i64> = (0..n)
        .map(|k| a.get(k).copied().unwrap_or(0) - b.get(k).copied().unwrap_or(0))
        .collect();
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

/// `ℓ((m^{n+1} : x)/m^n)` for `n < N`, computed in `A/m^N`.
pub fn colon_lengths<F: Field>(ring: &LocalRing<F>, coeffs: &[i64], n: u32) -> Result<Vec<i64>> {
    let t = ring.algebra(n)?;
    let x = operator(&t, coeffs);
    (0..n)
        .map(|j| {
            let c = t.colon(&t.power_subspace(j + 1)?, std::slice::from_ref(&x), 1)?;
            Ok(c.quotient_dim(&t.power_subspace(j)?)? as i64)
        })
        .collect()
}

/// `(b, window, A/(x))` for a superficial `x`: the b-polynomial, the number
/// of colon lengths measured directly, and the quotient ring.
pub type Superficial<F> = (Vec<i64>, u32, LocalRing<F>);

/// Tests `x` for superficiality: `A/(x)` must have dimension `d - 1` and
/// `(h_B - h_A)/(1 - z)^d` must be a polynomial. The colon lengths are then
/// measured directly and must reproduce it.
pub fn test_superficial<F: Field>(ring: &LocalRing<F>, coeffs: &[i64]) -> Result<Option<Superficial<F>>> {
    let d = ring.dim();
    if d == 0 {
        return Err(Error::WrongDimension { expected: 1, found: 0 });
    }
    let quotient = match ring.quotient(coeffs) {
        Ok(q) => q,
        Err(Error::NoStabilization(_)) => return Ok(None),
        Err(e) => return Err(e),
    };
    if quotient.dim() + 1 != d {
        return Ok(None);
    }
    let diff = sub_poly(&quotient.series().h, &ring.series().h);
    let Some(b) = divide_by_one_minus_z(&diff, d) else {
        return Ok(None);
    };
    if b.iter().any(|&c| c < 0) {
        return Ok(None);
    }
    let window = (b.len() as u32 + 2).max(3);
    let direct = colon_lengths(ring, coeffs, window)?;
    let padded: Vec<i64> = (0..window as usize).map(|k| b.get(k).copied().unwrap_or(0)).collect();
    if direct != padded {
        return Err(Error::InconsistentBPolynomial {
            direct,
            division: padded,
        });
    }
    Ok(Some((b, window, quotient)))
}

/// Draws random linear forms until one is superficial.
///
/// When every draw fails, a random system of `d` linear forms is tested: a
/// colength above the multiplicity proves the ring is not Cohen-Macaulay.
pub fn find_superficial<F: Field>(
    ring: &LocalRing<F>,
    rng: &mut ChaCha8Rng,
    seed: u64,
    attempts: usize,
) -> Result<Step<F>> {
    let n = ring.ngens();
    for attempt in 0..attempts {
        let coeffs = random_form(ring.field(), rng, n);
        if let Some((b, checked_below, quotient)) = test_superficial(ring, &coeffs)? {
            return Ok(Step {
                element: SuperficialElement {
                    coeffs,
                    seed,
                    attempt,
                    b,
                    checked_below,
                },
                quotient,
            });
        }
    }
    let forms: Vec<Vec<i64>> = (0..ring.dim()).map(|_| random_form(ring.field(), rng, n)).collect();
    if let Some(table) = reduction_table(ring, &forms)? {
        let e = ring.series().multiplicity();
        if table.colength() as i64 > e {
            return Err(Error::NotCohenMacaulay {
                colength: table.colength(),
                multiplicity: e,
            });
        }
    }
    Err(Error::NoSuperficialFound { attempts })
}

/// `x_1, ..., x_r` with `x_i` superficial on `A/(x_1, ..., x_{i-1})`.
pub fn superficial_sequence<F: Field>(
    ring: &LocalRing<F>,
    r: usize,
    seed: u64,
    attempts: usize,
) -> Result<Vec<Step<F>>> {
    if r > ring.dim() {
        return Err(Error::WrongDimension {
            expected: r,
            found: ring.dim(),
        });
    }
    let mut rng = rng_for(seed);
    let mut steps: Vec<Step<F>> = Vec::with_capacity(r);
    for _ in 0..r {
        let cur = steps.last().map_or(ring, |s| &s.quotient);
        let step = find_superficial(cur, &mut rng, seed, attempts)?;
        steps.push(step);
    }
    Ok(steps)
}

/// `ℓ(m^{j+1}/J m^j)` until the first zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LengthTable {
    pub lengths: Vec<usize>,
    pub truncation: u32,
}

impl LengthTable {
    pub fn reduction_number(&self) -> usize {
        self.lengths.len() - 1
    }

    /// `ℓ(A/J)`.
    pub fn colength(&self) -> usize {
        1 + self.lengths[0]
    }
}

/// The table for the ideal generated by linear forms, or `None` if `J` is
/// not a reduction of `m` within the tried truncations.
///
/// A zero `ℓ(m^{r+1}/(J m^r + m^N))` with `N >= r + 2` gives
/// `m^{r+1} = J m^r` by Nakayama, and then every entry is exact.
pub fn reduction_table<F: Field>(ring: &LocalRing<F>, elements: &[Vec<i64>]) -> Result<Option<LengthTable>> {
    let start = (ring.series().degree() as u32 + 2).max(3);
    let mut n = start;
    loop {
        let t = ring.algebra(n)?;
        let ops: Vec<SparseOperator<F>> = elements.iter().map(|c| operator(&t, c)).collect();
        let mut lengths = Vec::new();
        for j in 0..n - 1 {
            let len = t.power_subspace(j + 1)?.dim() - t.ideal_times_power(&ops, j)?.dim();
            lengths.push(len);
            if len == 0 {
                return Ok(Some(LengthTable { lengths, truncation: n }));
            }
        }
        if n >= start + EXTRA_ORDERS {
            return Ok(None);
        }
        n += 2;
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionData {
    /// Generators of `J`, a superficial sequence of length `d`.
    pub elements: Vec<Vec<i64>>,
    pub seed: u64,
    /// `ℓ(m^{j+1}/J m^j)` for `j = 0..=r`; the last entry is zero.
    pub lengths: Vec<usize>,
    pub reduction_number: usize,
    /// `ℓ(A/J)`.
    pub colength: usize,
    pub truncation: u32,
}

impl ReductionData {
    /// `ℓ(m^{j+1}/J m^j)` for any `j`.
    pub fn length(&self, j: usize) -> usize {
        self.lengths.get(j).copied().unwrap_or(0)
    }
}

/// A minimal reduction from a superficial sequence, with the Cohen-Macaulay
/// test `ℓ(A/J) = e_0` and the check `e_0 = h + 1 + ℓ(m^2/Jm)`.
pub fn minimal_reduction<F: Field>(
    ring: &LocalRing<F>,
    seed: u64,
    attempts: usize,
) -> Result<(ReductionData, Vec<Step<F>>)> {
    let steps = superficial_sequence(ring, ring.dim(), seed, attempts)?;
    let elements: Vec<Vec<i64>> = steps.iter().map(|s| s.element.coeffs.clone()).collect();
    let table = reduction_table(ring, &elements)?.ok_or_else(|| {
        Error::NoStabilization("superficial sequence does not reduce m within the truncation limit".into())
    })?;
    let e = ring.series().multiplicity();
    let colength = table.colength();
    if colength as i64 > e {
        return Err(Error::NotCohenMacaulay {
            colength,
            multiplicity: e,
        });
    }
    if (colength as i64) < e {
        return Err(Error::CrossCheckFailure(format!(
            "length of A/J is {colength}, below the multiplicity {e}"
        )));
    }
    let data = ReductionData {
        elements,
        seed,
        reduction_number: table.reduction_number(),
        colength,
        truncation: table.truncation,
        lengths: table.lengths,
    };
    let h = ring.series().embedding_codim();
    if e != h + 1 + data.length(1) as i64 {
        return Err(Error::CrossCheckFailure(format!(
            "e = {e} but h + 1 + length(m^2/Jm) = {}",
            h + 1 + data.length(1) as i64
        )));
    }
    Ok((data, steps))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RatliffRushData {
    /// `ℓ(m̃^i/m^i)` for `i = 1..=i_max`.
    pub lengths: Vec<usize>,
    /// `m̃^i = m^i` for every `i` at least this.
    pub stable_from: usize,
    /// `r(z) = Σ ℓ(m̃^{n+1}/m^{n+1}) z^n`.
    pub r: Vec<i64>,
    /// Numerator of the Hilbert series of the Ratliff-Rush filtration.
    pub h_tilde: Vec<i64>,
    pub truncation: u32,
}

/// The filtration itself, as subspaces of one truncation.
#[derive(Debug)]
pub struct RatliffRush<F: Field> {
    pub data: RatliffRushData,
    pub algebra: Arc<TruncatedAlgebra<F>>,
    /// `powers[i]` is `m̃^i`, for `i = 0..=i_max + 1`.
    pub powers: Vec<Subspace<F>>,
}

/// `∪_l (m^{i+l} : m^l)`: the first `l` whose colon repeats at `l + 1` and
/// `l + 2`. `None` if the truncation is too short to see that.
pub fn ratliff_rush_power<F: Field>(t: &TruncatedAlgebra<F>, i: u32) -> Result<Option<Subspace<F>>> {
    let n = t.truncation();
    let colon = |l: u32| t.colon_max_ideal_power(&t.power_subspace(i + l)?, l);
    if i + 3 > n {
        return Ok(None);
    }
    let mut window = [colon(1)?, colon(2)?, colon(3)?];
    let mut l = 1;
    loop {
        if window[0] == window[1] && window[1] == window[2] {
            return Ok(Some(window[0].clone()));
        }
        if i + l + 3 > n {
            return Ok(None);
        }
        window = [window[1].clone(), window[2].clone(), colon(l + 3)?];
        l += 1;
    }
}

/// The Ratliff-Rush filtration of `m` up to `i_max`.
///
/// `b` is the b-polynomial of a superficial element: `(m^{n+1} : x) = m^n`
/// for `n > deg b` forces `m̃^n = m^n` there, which fixes `stable_from`.
pub fn ratliff_rush<F: Field>(
    ring: &LocalRing<F>,
    b: &[i64],
    i_max: usize,
    min_truncation: u32,
) -> Result<RatliffRush<F>> {
    let d = ring.dim();
    if d == 0 {
        return Err(Error::WrongDimension { expected: 1, found: 0 });
    }
    let stable_from = b.len();
    let top = i_max.max(stable_from).max(1);
    let mut n = (top as u32 + 4).max(min_truncation);
    let limit = n + EXTRA_ORDERS;
    let (t, powers) = 'grow: loop {
        let t = ring.algebra(n)?;
        let mut powers = vec![t.power_subspace(0)?];
        for i in 1..=top as u32 + 1 {
            match ratliff_rush_power(&t, i)? {
                Some(p) => powers.push(p),
                None if n < limit => {
                    n += 2;
                    continue 'grow;
                }
                None => {
                    return Err(Error::NoStabilization(format!(
                        "Ratliff-Rush closure of m^{i} within truncation order {n}"
                    )))
                }
            }
        }
        break (t, powers);
    };
    let mut lengths = Vec::with_capacity(top);
    for (i, p) in powers.iter().enumerate().skip(1) {
        let mi = t.power_subspace(i as u32)?;
        if !p.contains_subspace(&mi) {
            return Err(Error::CrossCheckFailure(format!("Ratliff-Rush closure of m^{i} misses m^{i}")));
        }
        let len = p.quotient_dim(&mi)?;
        if i >= stable_from.max(1) && len != 0 {
            return Err(Error::CrossCheckFailure(format!(
                "Ratliff-Rush closure of m^{i} differs from m^{i} past the stable index {stable_from}"
            )));
        }
        lengths.push(len);
    }
    // m̃^i m̃^j ⊆ m̃^{i+j}: generators times m̃^i, and products of extra elements
    for i in 1..powers.len() - 1 {
        if !powers[i + 1].contains_subspace(&t.times_max_ideal(&powers[i])) {
            return Err(Error::CrossCheckFailure(format!("m times m̃^{i} is not in m̃^{}", i + 1)));
        }
    }
    for i in 1..powers.len() {
        for j in i..powers.len() - i {
            let extras = |k: usize| {
                let start = t.level_start(k as u32);
                powers[k].basis().iter().filter(move |v| v.first().is_some_and(|e| e.0 < start))
            };
            for a in extras(i) {
                for b in extras(j) {
                    if !powers[i + j].contains(&t.multiply(a, b)) {
                        return Err(Error::CrossCheckFailure(format!("m̃^{i} m̃^{j} is not in m̃^{}", i + j)));
                    }
                }
            }
        }
    }
    lengths.truncate(top);
    let r: Vec<i64> = {
        let mut r: Vec<i64> = lengths.iter().map(|&l| l as i64).collect();
        while r.last() == Some(&0) {
            r.pop();
        }
        r
    };
    // H̃(n) = H(n) for n >= stable_from, so only the head differs
    let h = &ring.series().h;
    let head: Vec<i64> = (0..stable_from.max(1))
        .map(|k| {
            let tilde = powers[k].dim() as i64 - powers[k + 1].dim() as i64;
            tilde - ring.series().hilbert_function(k)
        })
        .collect();
    let h_tilde = sub_poly(h, &sub_poly(&[], &times_one_minus_z(&head, d)));
    if sub_poly(h, &h_tilde) != times_one_minus_z(&r, d + 1) {
        return Err(Error::CrossCheckFailure("h = h̃ + (1-z)^{d+1} r fails".into()));
    }
    Ok(RatliffRush {
        data: RatliffRushData {
            lengths,
            stable_from,
            r,
            h_tilde,
            truncation: t.truncation(),
        },
        algebra: t,
        powers,
    })
}

/// `σ_j = ℓ(m̃^{j+1}/J m̃^j)` in dimension two, through the first zero.
pub fn sigma<F: Field>(ring: &LocalRing<F>, reduction: &ReductionData, b: &[i64]) -> Result<Vec<usize>> {
    if ring.dim() != 2 {
        return Err(Error::WrongDimension {
            expected: 2,
            found: ring.dim(),
        });
    }
    let top = reduction.reduction_number.max(b.len());
    let rr = ratliff_rush(ring, b, top + 1, top as u32 + 3)?;
    let t = &rr.algebra;
    let ops: Vec<SparseOperator<F>> = reduction.elements.iter().map(|c| operator(t, c)).collect();
    let sigma: Vec<usize> = (0..=top)
        .map(|j| rr.powers[j + 1].dim() - t.image_sum(&ops, &rr.powers[j]).dim())
        .collect();
    if sigma[top] != 0 {
        return Err(Error::CrossCheckFailure(format!("σ_{top} = {} should vanish", sigma[top])));
    }
    let hs = ring.series();
    let e1: i64 = sigma.iter().map(|&s| s as i64).sum();
    let e2: i64 = sigma.iter().enumerate().map(|(j, &s)| (j * s) as i64).sum();
    if e1 != hs.e(1) || e2 != hs.e(2) {
        return Err(Error::CrossCheckFailure(format!(
            "σ sums give e1 = {e1}, e2 = {e2}; series gives {}, {}",
            hs.e(1),
            hs.e(2)
        )));
    }
    Ok(sigma)
}

/// `ρ_n = ℓ(m^{n+1}/x m^n)` in dimension one, through the first zero, with
/// `H(n) = e - ρ_n` and `e_i = Σ_j C(j, i-1) ρ_j` checked.
pub fn rho<F: Field>(ring: &LocalRing<F>, coeffs: &[i64]) -> Result<Vec<usize>> {
    if ring.dim() != 1 {
        return Err(Error::WrongDimension {
            expected: 1,
            found: ring.dim(),
        });
    }
    let table = reduction_table(ring, &[coeffs.to_vec()])?
        .ok_or_else(|| Error::NoStabilization("x m^n never reaches m^{n+1}".into()))?;
    let rho = table.lengths;
    let hs = ring.series();
    let e = hs.multiplicity();
    for n in 0..rho.len() + 4 {
        let r = rho.get(n).copied().unwrap_or(0) as i64;
        if hs.hilbert_function(n) != e - r {
            return Err(Error::CrossCheckFailure(format!("H({n}) differs from e - ρ_{n}")));
        }
    }
    for i in 1..=3usize {
        let s: i64 = rho
            .iter()
            .enumerate()
            .skip(i - 1)
            .map(|(j, &r)| binomial(j as i64, i as i64 - 1) * r as i64)
            .sum();
        if s != hs.e(i) {
            return Err(Error::CrossCheckFailure(format!("e_{i} = {} but the ρ sum is {s}", hs.e(i))));
        }
    }
    Ok(rho)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TypeData {
    pub cm_type: usize,
    /// The same socle length for an independent random system of parameters.
    pub confirmation: usize,
    pub confirmation_forms: Vec<Vec<i64>>,
}

/// `dim (J : m)/J` for a reduction `J` generated by linear forms.
fn socle_length<F: Field>(ring: &LocalRing<F>, elements: &[Vec<i64>], table: &LengthTable) -> Result<usize> {
    let t = ring.algebra(table.truncation)?;
    let ops: Vec<SparseOperator<F>> = elements.iter().map(|c| operator(&t, c)).collect();
    let j = t.image_sum(&ops, &t.power_subspace(0)?);
    // m^N ⊆ J, so A/m^N over J is A/J itself
    if !j.contains_subspace(&t.power_subspace(table.reduction_number() as u32 + 1)?) {
        return Err(Error::CrossCheckFailure("J does not contain the reducing power of m".into()));
    }
    let socle = t.colon(&j, t.generator_ops(), 1)?;
    socle.quotient_dim(&j)
}

/// Cohen-Macaulay type as the socle length of `A/J`, confirmed with a
/// second, independently drawn system of parameters.
pub fn cm_type<F: Field>(ring: &LocalRing<F>, reduction: &ReductionData, seed: u64, attempts: usize) -> Result<TypeData> {
    let table = reduction_table(ring, &reduction.elements)?
        .ok_or_else(|| Error::NoStabilization("minimal reduction lost on recomputation".into()))?;
    let cm_type = socle_length(ring, &reduction.elements, &table)?;
    let e = ring.series().multiplicity();
    let mut rng = rng_for(seed ^ 0x7970_6521);
    for _ in 0..attempts {
        let forms: Vec<Vec<i64>> = (0..ring.dim()).map(|_| random_form(ring.field(), &mut rng, ring.ngens())).collect();
        let Some(other) = reduction_table(ring, &forms)? else {
            continue;
        };
        if other.colength() as i64 != e {
            continue;
        }
        let confirmation = socle_length(ring, &forms, &other)?;
        if confirmation != cm_type {
            return Err(Error::CrossCheckFailure(format!(
                "socle lengths {cm_type} and {confirmation} for two reductions"
            )));
        }
        return Ok(TypeData {
            cm_type,
            confirmation,
            confirmation_forms: forms,
        });
    }
    Err(Error::NoSuperficialFound { attempts })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DepthData {
    pub depth: usize,
    pub elements: Vec<Vec<i64>>,
    /// `b_{x_i}` of each step of the superficial sequence.
    pub b: Vec<Vec<i64>>,
    /// Whether the Ratliff-Rush filtration of `A/(x_1..x_r)` is trivial, `r < d`.
    pub ratliff_rush_trivial: Vec<bool>,
}

/// Depth of the associated graded ring: the number of leading steps of a
/// superficial sequence with `b = 0`.
///
/// Each prefix is cross-checked: the depth is at least `r + 1` exactly when
/// `A/(x_1..x_r)` has trivial Ratliff-Rush filtration.
pub fn depth_assoc_graded<F: Field>(ring: &LocalRing<F>, seed: u64, attempts: usize) -> Result<DepthData> {
    let steps = superficial_sequence(ring, ring.dim(), seed, attempts)?;
    depth_from_steps(ring, &steps)
}

/// [`depth_assoc_graded`] along a given superficial sequence of length `d`.
pub fn depth_from_steps<F: Field>(ring: &LocalRing<F>, steps: &[Step<F>]) -> Result<DepthData> {
    let d = ring.dim();
    if steps.len() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: steps.len(),
        });
    }
    let depth = steps.iter().take_while(|s| s.element.b.is_empty()).count();
    let mut trivial = Vec::with_capacity(d);
    let mut cur = ring;
    for (r, step) in steps.iter().enumerate() {
        if step.element.b.is_empty() && step.quotient.series().h != cur.series().h {
            return Err(Error::CrossCheckFailure(format!("numerator changed along regular step {}", r + 1)));
        }
        let rr = ratliff_rush(cur, &step.element.b, step.element.b.len().max(2), 0)?;
        let is_trivial = rr.data.r.is_empty();
        if is_trivial != (depth > r) {
            return Err(Error::CrossCheckFailure(format!(
                "step {}: Ratliff-Rush triviality {is_trivial} disagrees with depth {depth}",
                r + 1
            )));
        }
        trivial.push(is_trivial);
        cur = &step.quotient;
    }
    Ok(DepthData {
        depth,
        elements: steps.iter().map(|s| s.element.coeffs.clone()).collect(),
        b: steps.iter().map(|s| s.element.b.clone()).collect(),
        ratliff_rush_trivial: trivial,
    })
}

/// The three lengths of the exact sequence
/// `0 -> (m^3 : x)/m^2 -> m^3/J m^2 -> n^3/J̄ n^2 -> 0` in dimension three.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct M3JReport {
    pub elements: Vec<Vec<i64>>,
    pub total: usize,
    pub colon: usize,
    pub quotient: usize,
}

/// Picks `x, y` superficial and `z` superficial for both `A` and
/// `A/(x, y)`, then measures the three lengths independently.
pub fn check_m3j_lengths<F: Field>(ring: &LocalRing<F>, seed: u64, attempts: usize) -> Result<M3JReport> {
    if ring.dim() != 3 {
        return Err(Error::WrongDimension {
            expected: 3,
            found: ring.dim(),
        });
    }
    let steps = superficial_sequence(ring, 2, seed, attempts)?;
    let mut rng = rng_for(seed ^ 0x006d_334a);
    let mut z = None;
    for _ in 0..attempts {
        let c = random_form(ring.field(), &mut rng, ring.ngens());
        if test_superficial(&steps[1].quotient, &c)?.is_some() && test_superficial(ring, &c)?.is_some() {
            z = Some(c);
            break;
        }
    }
    let z = z.ok_or(Error::NoSuperficialFound { attempts })?;
    let (x, y) = (steps[0].element.coeffs.clone(), steps[1].element.coeffs.clone());
    let elements = vec![x.clone(), y.clone(), z.clone()];
    let not_reduction = || Error::NoStabilization("x, y, z do not reduce m".into());
    let total = reduction_table(ring, &elements)?.ok_or_else(not_reduction)?;
    let quotient = reduction_table(&steps[0].quotient, &[y, z])?.ok_or_else(not_reduction)?;
    let colon = colon_lengths(ring, &x, 3)?[2] as usize;
    let report = M3JReport {
        elements,
        total: total.lengths.get(2).copied().unwrap_or(0),
        colon,
        quotient: quotient.lengths.get(2).copied().unwrap_or(0),
    };
    if report.total != report.colon + report.quotient {
        return Err(Error::CrossCheckFailure(format!(
            "length(m^3/Jm^2) = {} but the outer terms sum to {} + {}",
            report.total, report.colon, report.quotient
        )));
    }
    Ok(report)
}

/// `f(j) = ℓ(m^j/(J m^{j-1} + m^{j+1}))`, the Hilbert function of
/// `G(A)/J*G(A)`, for `j = 0..=top`.
pub fn reduction_quotient_function<F: Field>(ring: &LocalRing<F>, elements: &[Vec<i64>], top: u32) -> Result<Vec<usize>> {
    let t = ring.algebra(top + 2)?;
    let ops: Vec<SparseOperator<F>> = elements.iter().map(|c| operator(&t, c)).collect();
    (0..=top)
        .map(|j| {
            let below = if j == 0 {
                t.power_subspace(1)?
            } else {
                t.ideal_times_power(&ops, j - 1)?.sum(&t.power_subspace(j + 1)?)?
            };
            t.power_subspace(j)?.quotient_dim(&below)
        })
        .collect()
}
