//! Exact linear algebra over a [`Field`]: echelon forms, kernels and the
//! subspace calculus (sum, intersection, preimage, quotient dimension) that
//! every length computation in this crate reduces to.
//!
//! Vectors are sparse (`(index, value)` pairs sorted by index, no zeros).
//! Elimination uses a dense accumulator per reduced vector, which is the
//! right trade-off for ambient dimensions in the low thousands.

use crate::error::{Error, Result};
use crate::field::Field;

pub type SparseVec<E> = Vec<(usize, E)>;

const NO_ROW: u32 = u32::MAX;

pub fn sparse_from_dense<F: Field>(field: &F, v: &[F::Elem]) -> SparseVec<F::Elem> {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !field.is_zero(x))
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn dense_from_sparse<F: Field>(field: &F, v: &SparseVec<F::Elem>, n: usize) -> Vec<F::Elem> {
    let mut out = vec![field.zero(); n];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

pub fn scale<F: Field>(field: &F, c: &F::Elem, v: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
    if field.is_zero(c) {
        return Vec::new();
    }
    v.iter().map(|(i, x)| (*i, field.mul(c, x))).collect()
}

/// `a + c * b`
pub fn add_scaled<F: Field>(
    field: &F,
    a: &SparseVec<F::Elem>,
    c: &F::Elem,
    b: &SparseVec<F::Elem>,
) -> SparseVec<F::Elem> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j >= b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i >= a.len() || b[j].0 < a[i].0 {
            let v = field.mul(c, &b[j].1);
            if !field.is_zero(&v) {
                out.push((b[j].0, v));
            }
            j += 1;
        } else {
            let v = field.add(&a[i].1, &field.mul(c, &b[j].1));
            if !field.is_zero(&v) {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Incremental semi-echelon basis: every row has leading coefficient one at
/// its pivot and no entries before it; pivots are distinct.
#[derive(Clone, Debug)]
pub struct Echelon<F: Field> {
    field: F,
    ambient: usize,
    rows: Vec<SparseVec<F::Elem>>,
    pivot_row: Vec<u32>,
}

impl<F: Field> Echelon<F> {
    pub fn new(field: F, ambient: usize) -> Self {
        Echelon {
            field,
            ambient,
            rows: Vec::new(),
            pivot_row: vec![NO_ROW; ambient],
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    fn reduce_dense(&self, acc: &mut [F::Elem], start: usize) {
        for i in start..self.ambient {
            if self.field.is_zero(&acc[i]) {
                continue;
            }
            let r = self.pivot_row[i];
            if r == NO_ROW {
                continue;
            }
            let c = acc[i].clone();
            for (j, v) in &self.rows[r as usize] {
                self.field.sub_mul_assign(&mut acc[*j], &c, v);
            }
        }
    }

    /// Reduces `v` against the current rows; the result has no entry at any pivot.
    pub fn reduce(&self, v: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
        let Some(start) = v.first().map(|e| e.0) else {
            return Vec::new();
        };
        let mut acc = dense_from_sparse(&self.field, v, self.ambient);
        self.reduce_dense(&mut acc, start);
        sparse_from_dense(&self.field, &acc)
    }

    /// Adds `v` to the span. Returns `false` when `v` was already in it.
    pub fn insert(&mut self, v: &SparseVec<F::Elem>) -> bool {
        let Some(start) = v.first().map(|e| e.0) else {
            return false;
        };
        let mut acc = dense_from_sparse(&self.field, v, self.ambient);
        self.reduce_dense(&mut acc, start);
        let Some(lead) = (start..self.ambient).find(|&i| !self.field.is_zero(&acc[i])) else {
            return false;
        };
        let inv = self.field.inv(&acc[lead]);
        let row: SparseVec<F::Elem> = (lead..self.ambient)
            .filter(|&i| !self.field.is_zero(&acc[i]))
            .map(|i| (i, self.field.mul(&inv, &acc[i])))
            .collect();
        self.pivot_row[lead] = self.rows.len() as u32;
        self.rows.push(row);
        true
    }

    pub fn contains(&self, v: &SparseVec<F::Elem>) -> bool {
        self.reduce(v).is_empty()
    }

    /// Canonical reduced row echelon form of the span.
    pub fn into_subspace(self) -> Subspace<F> {
        let Echelon {
            field,
            ambient,
            rows,
            pivot_row: _,
        } = self;
        let mut order: Vec<usize> = (0..rows.len()).collect();
        order.sort_by_key(|&r| rows[r][0].0);
        let sorted: Vec<SparseVec<F::Elem>> = order.into_iter().map(|r| rows[r].clone()).collect();
        let pivots: Vec<usize> = sorted.iter().map(|r| r[0].0).collect();
        let mut pivot_pos = vec![NO_ROW; ambient];
        for (k, p) in pivots.iter().enumerate() {
            pivot_pos[*p] = k as u32;
        }
        let mut reduced: Vec<SparseVec<F::Elem>> = vec![Vec::new(); sorted.len()];
        for k in (0..sorted.len()).rev() {
            let row = &sorted[k];
            if row.iter().skip(1).all(|(j, _)| pivot_pos[*j] == NO_ROW) {
                reduced[k] = row.clone();
                continue;
            }
            let mut acc = dense_from_sparse(&field, row, ambient);
            for j in pivots[k] + 1..ambient {
                let q = pivot_pos[j];
                if q == NO_ROW || field.is_zero(&acc[j]) {
                    continue;
                }
                let c = acc[j].clone();
                for (t, v) in &reduced[q as usize] {
                    field.sub_mul_assign(&mut acc[*t], &c, v);
                }
            }
            reduced[k] = sparse_from_dense(&field, &acc);
        }
        Subspace {
            field,
            ambient,
            rows: reduced,
            pivots,
        }
    }
}

/// A linear subspace of `F^n`, stored as its unique reduced row echelon basis.
/// Two subspaces are equal iff their bases are equal.
#[derive(Clone, Debug)]
pub struct Subspace<F: Field> {
    field: F,
    ambient: usize,
    rows: Vec<SparseVec<F::Elem>>,
    pivots: Vec<usize>,
}

impl<F: Field> PartialEq for Subspace<F> {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.rows == other.rows
    }
}

impl<F: Field> Eq for Subspace<F> {}

impl<F: Field> Subspace<F> {
    pub fn zero(field: F, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: F, ambient: usize) -> Self {
        Self::coordinate_tail(field, ambient, 0)
    }

    /// Span of the standard basis vectors `e_start, ..., e_{n-1}`.
    pub fn coordinate_tail(field: F, ambient: usize, start: usize) -> Self {
        let one = field.one();
        let start = start.min(ambient);
        Subspace {
            rows: (start..ambient).map(|i| vec![(i, one.clone())]).collect(),
            pivots: (start..ambient).collect(),
            field,
            ambient,
        }
    }

    pub fn span<'a, I>(field: F, ambient: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = &'a SparseVec<F::Elem>>,
        F::Elem: 'a,
    {
        let mut ech = Echelon::new(field, ambient);
        for v in vectors {
            ech.insert(v);
        }
        ech.into_subspace()
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[SparseVec<F::Elem>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    fn to_echelon(&self) -> Echelon<F> {
        let mut pivot_row = vec![NO_ROW; self.ambient];
        for (k, p) in self.pivots.iter().enumerate() {
            pivot_row[*p] = k as u32;
        }
        Echelon {
            field: self.field.clone(),
            ambient: self.ambient,
            rows: self.rows.clone(),
            pivot_row,
        }
    }

    /// Residue of `v` modulo this subspace: zero exactly at the pivots.
    pub fn reduce(&self, v: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
        if v.is_empty() || self.rows.is_empty() {
            return v.clone();
        }
        let mut acc = dense_from_sparse(&self.field, v, self.ambient);
        for (row, p) in self.rows.iter().zip(&self.pivots) {
            if self.field.is_zero(&acc[*p]) {
                continue;
            }
            let c = acc[*p].clone();
            for (j, x) in row {
                self.field.sub_mul_assign(&mut acc[*j], &c, x);
            }
        }
        sparse_from_dense(&self.field, &acc)
    }

    pub fn contains(&self, v: &SparseVec<F::Elem>) -> bool {
        self.reduce(v).is_empty()
    }

    pub fn contains_subspace(&self, other: &Subspace<F>) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    fn check_ambient(&self, other: &Subspace<F>) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace<F>) -> Result<Subspace<F>> {
        self.check_ambient(other)?;
        let mut ech = self.to_echelon();
        for r in &other.rows {
            ech.insert(r);
        }
        Ok(ech.into_subspace())
    }

    /// Intersection computed from the kernel of `[U | -V]`, so that
    /// `dim U + dim V = dim (U + V) + dim (U ∩ V)` holds by construction.
    pub fn intersect(&self, other: &Subspace<F>) -> Result<Subspace<F>> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.field.clone(), self.ambient));
        }
        let minus_one = self.field.neg(&self.field.one());
        let mut cols: Vec<SparseVec<F::Elem>> = self.rows.clone();
        cols.extend(other.rows.iter().map(|r| scale(&self.field, &minus_one, r)));
        let kernel = kernel_of_columns(&self.field, &cols, self.ambient);
        let a = self.rows.len();
        let vectors: Vec<SparseVec<F::Elem>> = kernel
            .iter()
            .map(|k| {
                let mut acc = Vec::new();
                for (i, c) in k.iter().take_while(|(i, _)| *i < a) {
                    acc = add_scaled(&self.field, &acc, c, &self.rows[*i]);
                }
                acc
            })
            .collect();
        Ok(Subspace::span(self.field.clone(), self.ambient, vectors.iter()))
    }

    /// `dim(self / sub)`; fails unless `sub ⊆ self`.
    pub fn quotient_dim(&self, sub: &Subspace<F>) -> Result<usize> {
        self.check_ambient(sub)?;
        if !self.contains_subspace(sub) {
            return Err(Error::NotASubspace);
        }
        Ok(self.dim() - sub.dim())
    }

    /// Coordinates of the quotient map `F^n -> F^n / self`, as the residue
    /// restricted to non-pivot positions.
    pub fn codim(&self) -> usize {
        self.ambient - self.rows.len()
    }
}

/// A linear map `F^ncols -> F^nrows` stored by columns.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseOperator<F: Field> {
    field: F,
    nrows: usize,
    cols: Vec<SparseVec<F::Elem>>,
}

impl<F: Field> SparseOperator<F> {
    pub fn from_columns(field: F, nrows: usize, cols: Vec<SparseVec<F::Elem>>) -> Self {
        SparseOperator { field, nrows, cols }
    }

    pub fn zero(field: F, nrows: usize, ncols: usize) -> Self {
        SparseOperator {
            field,
            nrows,
            cols: vec![Vec::new(); ncols],
        }
    }

    pub fn identity(field: F, n: usize) -> Self {
        let one = field.one();
        SparseOperator {
            cols: (0..n).map(|i| vec![(i, one.clone())]).collect(),
            field,
            nrows: n,
        }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, j: usize) -> &SparseVec<F::Elem> {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[SparseVec<F::Elem>] {
        &self.cols
    }

    pub fn apply(&self, v: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
        let mut acc = vec![self.field.zero(); self.nrows];
        let mut touched = false;
        for (j, c) in v {
            for (i, x) in &self.cols[*j] {
                let t = self.field.mul(c, x);
                acc[*i] = self.field.add(&acc[*i], &t);
                touched = true;
            }
        }
        if !touched {
            return Vec::new();
        }
        sparse_from_dense(&self.field, &acc)
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &SparseOperator<F>) -> SparseOperator<F> {
        SparseOperator {
            field: self.field.clone(),
            nrows: self.nrows,
            cols: other.cols.iter().map(|c| self.apply(c)).collect(),
        }
    }

    /// `self + c * other`
    pub fn add_scaled(&self, c: &F::Elem, other: &SparseOperator<F>) -> SparseOperator<F> {
        SparseOperator {
            field: self.field.clone(),
            nrows: self.nrows,
            cols: self
                .cols
                .iter()
                .zip(&other.cols)
                .map(|(a, b)| add_scaled(&self.field, a, c, b))
                .collect(),
        }
    }

    pub fn image(&self, u: &Subspace<F>) -> Subspace<F> {
        let imgs: Vec<_> = u.basis().iter().map(|r| self.apply(r)).collect();
        Subspace::span(self.field.clone(), self.nrows, imgs.iter())
    }

    pub fn kernel(&self) -> Subspace<F> {
        let k = kernel_of_columns(&self.field, &self.cols, self.nrows);
        Subspace::span(self.field.clone(), self.ncols(), k.iter())
    }

    pub fn rank(&self) -> usize {
        let mut ech = Echelon::new(self.field.clone(), self.nrows);
        for c in &self.cols {
            ech.insert(c);
        }
        ech.rank()
    }
}

/// Largest subspace `X` with `T(X) ⊆ W`.
pub fn preimage<F: Field>(op: &SparseOperator<F>, target: &Subspace<F>) -> Result<Subspace<F>> {
    preimage_all(std::slice::from_ref(op), target)
}

/// `{ v : T_k v ∈ W for every k }`, the intersection of the preimages.
pub fn preimage_all<F: Field>(ops: &[SparseOperator<F>], target: &Subspace<F>) -> Result<Subspace<F>> {
    let Some(first) = ops.first() else {
        return Err(Error::DimensionMismatch {
            expected: 1,
            found: 0,
        });
    };
    let ncols = first.ncols();
    for op in ops {
        if op.nrows != target.ambient() {
            return Err(Error::DimensionMismatch {
                expected: target.ambient(),
                found: op.nrows,
            });
        }
        if op.ncols() != ncols {
            return Err(Error::DimensionMismatch {
                expected: ncols,
                found: op.ncols(),
            });
        }
    }
    let field = first.field.clone();
    let n = target.ambient();
    let mut stacked: Vec<SparseVec<F::Elem>> = vec![Vec::new(); ncols];
    for (k, op) in ops.iter().enumerate() {
        for (j, col) in op.cols.iter().enumerate() {
            for (i, x) in target.reduce(col) {
                stacked[j].push((k * n + i, x));
            }
        }
    }
    let kernel = kernel_of_columns(&field, &stacked, n * ops.len());
    Ok(Subspace::span(field, ncols, kernel.iter()))
}

/// Basis of `{ c : Σ c_j col_j = 0 }` in the source coordinates.
pub fn kernel_of_columns<F: Field>(
    field: &F,
    cols: &[SparseVec<F::Elem>],
    nrows: usize,
) -> Vec<SparseVec<F::Elem>> {
    let ncols = cols.len();
    let mut rows: Vec<SparseVec<F::Elem>> = vec![Vec::new(); nrows];
    for (j, col) in cols.iter().enumerate() {
        for (i, x) in col {
            rows[*i].push((j, x.clone()));
        }
    }
    let mut ech = Echelon::new(field.clone(), ncols);
    for r in &rows {
        ech.insert(r);
    }
    let rref = ech.into_subspace();
    let mut is_pivot = vec![false; ncols];
    for p in rref.pivots() {
        is_pivot[*p] = true;
    }
    let mut kernel: Vec<SparseVec<F::Elem>> = vec![Vec::new(); ncols];
    for (row, p) in rref.basis().iter().zip(rref.pivots()) {
        for (j, x) in row.iter().skip(1) {
            kernel[*j].push((*p, field.neg(x)));
        }
    }
    let one = field.one();
    let mut out = Vec::new();
    for f in 0..ncols {
        if is_pivot[f] {
            continue;
        }
        let mut v = std::mem::take(&mut kernel[f]);
        v.push((f, one.clone()));
        v.sort_by_key(|e| e.0);
        out.push(v);
    }
    out
}

/// A dense matrix, for callers that think in rows and columns.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<F: Field> {
    field: F,
    nrows: usize,
    ncols: usize,
    data: Vec<Vec<F::Elem>>,
}

impl<F: Field> Matrix<F> {
    pub fn new(field: F, data: Vec<Vec<F::Elem>>) -> Result<Self> {
        let nrows = data.len();
        let ncols = data.first().map_or(0, |r| r.len());
        if let Some(bad) = data.iter().find(|r| r.len() != ncols) {
            return Err(Error::DimensionMismatch {
                expected: ncols,
                found: bad.len(),
            });
        }
        Ok(Matrix {
            field,
            nrows,
            ncols,
            data,
        })
    }

    pub fn from_i64(field: F, data: &[Vec<i64>]) -> Result<Self> {
        let rows = data
            .iter()
            .map(|r| r.iter().map(|x| field.from_i64(*x)).collect())
            .collect();
        Self::new(field, rows)
    }

    pub fn identity(field: F, n: usize) -> Self {
        let data = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { field.one() } else { field.zero() })
                    .collect()
            })
            .collect();
        Matrix {
            field,
            nrows: n,
            ncols: n,
            data,
        }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[Vec<F::Elem>] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i][j]
    }

    /// Canonical reduced row echelon form (zero rows dropped) and the rank.
    pub fn rref(&self) -> (Matrix<F>, usize) {
        let s = self.row_space();
        let rank = s.dim();
        let data = s
            .basis()
            .iter()
            .map(|r| dense_from_sparse(&self.field, r, self.ncols))
            .collect();
        (
            Matrix {
                field: self.field.clone(),
                nrows: rank,
                ncols: self.ncols,
                data,
            },
            rank,
        )
    }

    pub fn rank(&self) -> usize {
        self.row_space().dim()
    }

    pub fn row_space(&self) -> Subspace<F> {
        let rows: Vec<_> = self
            .data
            .iter()
            .map(|r| sparse_from_dense(&self.field, r))
            .collect();
        Subspace::span(self.field.clone(), self.ncols, rows.iter())
    }

    /// `{ v : M v = 0 }` as a subspace of `F^ncols`.
    pub fn kernel_basis(&self) -> Subspace<F> {
        self.to_operator().kernel()
    }

    pub fn to_operator(&self) -> SparseOperator<F> {
        let cols = (0..self.ncols)
            .map(|j| {
                (0..self.nrows)
                    .filter(|&i| !self.field.is_zero(&self.data[i][j]))
                    .map(|i| (i, self.data[i][j].clone()))
                    .collect()
            })
            .collect();
        SparseOperator::from_columns(self.field.clone(), self.nrows, cols)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn fp() -> PrimeField {
        PrimeField::default()
    }

    fn random_subspace(rng: &mut ChaCha8Rng, n: usize) -> Subspace<PrimeField> {
        let f = fp();
        let k = rng.gen_range(0..=n);
        let vs: Vec<SparseVec<u64>> = (0..k)
            .map(|_| {
                // sparse-ish vectors so that dimensions vary
                let dense: Vec<u64> = (0..n)
                    .map(|_| if rng.gen_bool(0.4) { rng.gen_range(0..f.modulus()) } else { 0 })
                    .collect();
                sparse_from_dense(&f, &dense)
            })
            .collect();
        Subspace::span(f, n, vs.iter())
    }

    #[test]
    fn rref_identity_and_rank_one() {
        let q = Rationals;
        let id = Matrix::identity(q, 3);
        let (r, rank) = id.rref();
        assert_eq!(rank, 3);
        assert_eq!(r, id);

        let m = Matrix::from_i64(q, &[vec![1, 2], vec![2, 4]]).unwrap();
        let (r, rank) = m.rref();
        assert_eq!(rank, 1);
        assert_eq!(r, Matrix::from_i64(q, &[vec![1, 2]]).unwrap());
    }

    /// Rank by expansion of minors: the largest k with a nonzero k×k minor.
    fn minor_rank(m: &[Vec<i64>], p: i64) -> usize {
        fn det(m: &[Vec<i64>], rows: &[usize], cols: &[usize], p: i64) -> i64 {
            if rows.len() == 1 {
                return m[rows[0]][cols[0]].rem_euclid(p);
            }
            let mut acc = 0i64;
            for (k, &c) in cols.iter().enumerate() {
                let sub_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                let sign = if k % 2 == 0 { 1 } else { p - 1 };
                let minor = det(m, &rows[1..], &sub_cols, p);
                acc = (acc + sign * (m[rows[0]][c].rem_euclid(p) * minor % p)) % p;
            }
            acc
        }
        fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            if n < k {
                return vec![];
            }
            let mut out = subsets(n - 1, k);
            for mut s in subsets(n - 1, k - 1) {
                s.push(n - 1);
                out.push(s);
            }
            out
        }
        let (r, c) = (m.len(), m[0].len());
        for k in (1..=r.min(c)).rev() {
            for rows in subsets(r, k) {
                for cols in subsets(c, k) {
                    if det(m, &rows, &cols, p) != 0 {
                        return k;
                    }
                }
            }
        }
        0
    }

    #[test]
    fn rank_matches_minor_expansion() {
        let p = 32003i64;
        for seed in 0..40u64 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let n = 5;
            // low-rank products make the check meaningful
            let k = rng.gen_range(1..=5);
            let a: Vec<Vec<i64>> = (0..n).map(|_| (0..k).map(|_| rng.gen_range(0..p)).collect()).collect();
            let b: Vec<Vec<i64>> = (0..k).map(|_| (0..n).map(|_| rng.gen_range(0..p)).collect()).collect();
            let m: Vec<Vec<i64>> = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| (0..k).map(|t| a[i][t] * b[t][j] % p).sum::<i64>() % p)
                        .collect()
                })
                .collect();
            let mat = Matrix::from_i64(fp(), &m).unwrap();
            assert_eq!(mat.rank(), minor_rank(&m, p), "seed {seed}");
        }
    }

    #[test]
    fn quotient_dim_of_self_is_zero() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let u = random_subspace(&mut rng, 6);
        assert_eq!(u.quotient_dim(&u).unwrap(), 0);
    }

    #[test]
    fn quotient_dim_requires_containment() {
        let f = fp();
        let u = Subspace::span(f, 3, [vec![(0, 1u64)]].iter());
        let v = Subspace::span(f, 3, [vec![(1, 1u64)]].iter());
        assert!(matches!(u.quotient_dim(&v), Err(Error::NotASubspace)));
        let w = Subspace::zero(f, 4);
        assert!(matches!(u.quotient_dim(&w), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn preimage_of_zero_under_zero_is_everything() {
        let f = fp();
        let op = SparseOperator::zero(f, 4, 4);
        let z = Subspace::zero(f, 4);
        assert_eq!(preimage(&op, &z).unwrap(), Subspace::full(f, 4));
    }

    #[test]
    fn grassmann_identity_over_seeds() {
        for seed in 0..100u64 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let u = random_subspace(&mut rng, 8);
            let v = random_subspace(&mut rng, 8);
            let s = u.sum(&v).unwrap();
            let i = u.intersect(&v).unwrap();
            assert_eq!(u.dim() + v.dim(), s.dim() + i.dim(), "seed {seed}");
            assert!(u.contains_subspace(&i) && v.contains_subspace(&i));
            assert!(s.contains_subspace(&u) && s.contains_subspace(&v));
        }
    }

    #[test]
    fn preimage_is_largest() {
        let f = fp();
        for seed in 0..30u64 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let n = 6;
            let cols: Vec<SparseVec<u64>> = (0..n)
                .map(|_| {
                    let d: Vec<u64> = (0..n)
                        .map(|_| if rng.gen_bool(0.3) { rng.gen_range(0..32003) } else { 0 })
                        .collect();
                    sparse_from_dense(&f, &d)
                })
                .collect();
            let op = SparseOperator::from_columns(f, n, cols);
            let w = random_subspace(&mut rng, n);
            let x = preimage(&op, &w).unwrap();
            for b in x.basis() {
                assert!(w.contains(&op.apply(b)));
            }
            // anything outside X maps outside W
            for _ in 0..10 {
                let d: Vec<u64> = (0..n).map(|_| rng.gen_range(0..32003)).collect();
                let v = sparse_from_dense(&f, &d);
                assert_eq!(x.contains(&v), w.contains(&op.apply(&v)));
            }
        }
    }

    #[test]
    fn subspace_equality_is_canonical() {
        let f = fp();
        let a = Subspace::span(f, 3, [vec![(0, 1u64), (1, 2)], vec![(1, 1), (2, 1)]].iter());
        let b = Subspace::span(f, 3, [vec![(0, 1u64), (1, 3), (2, 1)], vec![(0, 2u64), (1, 5), (2, 1)]].iter());
        assert_eq!(a, b);
    }

    #[test]
    fn rationals_kernel() {
        let q = Rationals;
        let m = Matrix::from_i64(q, &[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]).unwrap();
        let k = m.kernel_basis();
        assert_eq!(k.dim(), 1);
        let op = m.to_operator();
        assert!(op.apply(&k.basis()[0]).is_empty());
    }
}
