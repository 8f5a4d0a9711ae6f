//! The finite-dimensional algebra `A/m^N` and ideal-theoretic queries on it.
//!
//! Basis elements are sorted by order, so `m^j/m^N` is the span of a tail of
//! the basis and every question about the `m`-adic filtration becomes linear
//! algebra on coordinate vectors.
//!
//! Exactness: a colon `(I : f)` with `m^N ⊆ I` computed here is the true
//! colon modulo `m^N`. In particular `(m^{i+l} : m^l)` is exact whenever
//! `i + l <= N`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{index_map, StandardBasis};
use crate::linalg::{add_scaled, kernel_of_columns, scale, SparseOperator, SparseVec, Subspace};
use crate::poly::{IntPoly, Monomial};
use crate::semigroup::Semigroup;
use crate::spec::{fresh_names, Flat, RingSpec};

/// A presentation the engine can truncate.
#[derive(Clone, Debug)]
pub enum Presentation {
    Semigroup(Semigroup),
    Polynomial {
        names: Vec<String>,
        ideal: Vec<IntPoly>,
        /// Krull dimension, when known from the construction.
        dim: Option<usize>,
    },
}

impl Presentation {
    /// Extensions of semigroup rings go through the exact binomial presentation.
    pub fn of(spec: &RingSpec) -> Result<Presentation> {
        match spec.flatten() {
            Flat::Semigroup {
                generators,
                extra_vars: 0,
            } => Ok(Presentation::Semigroup(Semigroup::new(&generators)?)),
            Flat::Semigroup {
                generators,
                extra_vars,
            } => {
                let sg = Semigroup::new(&generators)?;
                let mut names: Vec<String> = generators.iter().map(|a| format!("t{a}")).collect();
                let fresh = fresh_names(&names, extra_vars);
                names.extend(fresh);
                Ok(Presentation::Polynomial {
                    names,
                    ideal: sg.toric_relations()?,
                    dim: Some(1 + extra_vars),
                })
            }
            Flat::Quotient {
                variables, ideal, ..
            } => Ok(Presentation::Polynomial {
                names: variables,
                ideal,
                dim: None,
            }),
        }
    }

    pub fn ngens(&self) -> usize {
        match self {
            Presentation::Semigroup(s) => s.embedding_dimension(),
            Presentation::Polynomial { names, .. } => names.len(),
        }
    }

    /// Krull dimension when it is known without computation.
    pub fn known_dimension(&self) -> Option<usize> {
        match self {
            Presentation::Semigroup(_) => Some(1),
            Presentation::Polynomial { dim, .. } => *dim,
        }
    }

    pub fn names(&self) -> Vec<String> {
        match self {
            Presentation::Semigroup(s) => s.generators().iter().map(|a| format!("t{a}")).collect(),
            Presentation::Polynomial { names, .. } => names.clone(),
        }
    }

    /// `H(n)` for `n < N`, without building multiplication tables.
    pub fn hilbert_counts<F: Field>(&self, field: &F, n: u32, cap: usize) -> Result<Vec<u64>> {
        if n < 2 {
            return Err(Error::TruncationTooSmall(n as usize));
        }
        match self {
            Presentation::Semigroup(s) => {
                let counts = s.hilbert_counts(n);
                let total: u64 = counts.iter().sum();
                if total as usize > cap {
                    return Err(Error::ResourceLimit(format!(
                        "truncation at order {n} has {total} basis elements, cap is {cap}"
                    )));
                }
                Ok(counts)
            }
            Presentation::Polynomial { names, ideal, .. } => {
                StandardBasis::compute(field.clone(), names.len(), ideal, n)?.hilbert_counts(cap)
            }
        }
    }
}

/// `A/m^N` with a basis adapted to the `m`-adic filtration.
#[derive(Clone, Debug)]
pub struct TruncatedAlgebra<F: Field> {
    field: F,
    n: u32,
    gen_names: Vec<String>,
    labels: Vec<String>,
    order: Vec<u32>,
    level_start: Vec<usize>,
    mult: Vec<SparseOperator<F>>,
    /// Basis element `b` equals generator `k` times basis element `p`.
    parent: Vec<Option<(usize, usize)>>,
}

pub fn build_truncation<F: Field>(spec: &RingSpec, field: F, n: u32, cap: usize) -> Result<TruncatedAlgebra<F>> {
    TruncatedAlgebra::build(field, &Presentation::of(spec)?, n, cap)
}

impl<F: Field> TruncatedAlgebra<F> {
    pub fn build(field: F, pres: &Presentation, n: u32, cap: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::TruncationTooSmall(n as usize));
        }
        match pres {
            Presentation::Semigroup(s) => Self::from_semigroup(field, s, n, cap),
            Presentation::Polynomial { names, ideal, .. } => {
                let sb = StandardBasis::compute(field, names.len(), ideal, n)?;
                Self::from_standard_basis(&sb, names.clone(), cap)
            }
        }
    }

    fn from_semigroup(field: F, s: &Semigroup, n: u32, cap: usize) -> Result<Self> {
        let basis = s.truncated_basis(n);
        if basis.len() > cap {
            return Err(Error::ResourceLimit(format!(
                "truncation at order {n} has {} basis elements, cap is {cap}",
                basis.len()
            )));
        }
        let bound = s.order_bound(n);
        let mut index = vec![usize::MAX; bound as usize];
        for (i, (e, _)) in basis.iter().enumerate() {
            index[*e as usize] = i;
        }
        let lookup = |e: u64| -> Option<usize> {
            index.get(e as usize).copied().filter(|&i| i != usize::MAX)
        };
        let one = field.one();
        let mult = s
            .generators()
            .iter()
            .map(|&a| {
                let cols = basis
                    .iter()
                    .map(|(e, _)| match lookup(e + a) {
                        Some(j) => vec![(j, one.clone())],
                        None => Vec::new(),
                    })
                    .collect();
                SparseOperator::from_columns(field.clone(), basis.len(), cols)
            })
            .collect();
        let parent = basis
            .iter()
            .map(|(e, o)| {
                if *o == 0 {
                    return None;
                }
                s.generators().iter().enumerate().find_map(|(k, &a)| {
                    let p = lookup(e.checked_sub(a)?)?;
                    (basis[p].1 + 1 == *o).then_some((k, p))
                })
            })
            .collect();
        let order: Vec<u32> = basis.iter().map(|b| b.1).collect();
        Ok(TruncatedAlgebra {
            field,
            n,
            gen_names: s.generators().iter().map(|a| format!("t{a}")).collect(),
            labels: basis.iter().map(|(e, _)| format!("t^{e}")).collect(),
            level_start: level_starts(&order, n),
            order,
            mult,
            parent,
        })
    }

    fn from_standard_basis(sb: &StandardBasis<F>, names: Vec<String>, cap: usize) -> Result<Self> {
        let field = sb.field().clone();
        let n = sb.truncation();
        let levels = sb.standard_monomials(cap)?;
        let basis: Vec<Monomial> = levels.into_iter().flatten().collect();
        let index = index_map(&basis);
        let nvars = sb.nvars();
        let mut nf_cache: HashMap<Monomial, SparseVec<F::Elem>> = HashMap::new();
        let mut mult = Vec::with_capacity(nvars);
        for i in 0..nvars {
            let x = Monomial::var(i);
            let mut cols = Vec::with_capacity(basis.len());
            for b in &basis {
                let p = b.mul(&x).expect("degree below the exponent limit");
                let col = if p.deg() >= n {
                    Vec::new()
                } else if let Some(&j) = index.get(&p) {
                    vec![(j, field.one())]
                } else {
                    nf_cache
                        .entry(p)
                        .or_insert_with(|| {
                            let nf = sb.normal_form(vec![(p, field.one())]);
                            let mut v: SparseVec<F::Elem> = nf.into_iter().map(|(m, c)| (index[&m], c)).collect();
                            v.sort_by_key(|e| e.0);
                            v
                        })
                        .clone()
                };
                cols.push(col);
            }
            mult.push(SparseOperator::from_columns(field.clone(), basis.len(), cols));
        }
        let parent = basis
            .iter()
            .map(|b| {
                let top = b.support_len();
                if top == 0 {
                    return None;
                }
                let x = Monomial::var(top - 1);
                Some((top - 1, index[&x.quotient_of(b)]))
            })
            .collect();
        let order: Vec<u32> = basis.iter().map(|m| m.deg()).collect();
        Ok(TruncatedAlgebra {
            field,
            n,
            labels: basis.iter().map(|m| m.render(&names)).collect(),
            gen_names: names,
            level_start: level_starts(&order, n),
            order,
            mult,
            parent,
        })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    /// The truncation order `N`.
    pub fn truncation(&self) -> u32 {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.order.len()
    }

    pub fn ngens(&self) -> usize {
        self.mult.len()
    }

    pub fn generator_names(&self) -> &[String] {
        &self.gen_names
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Order of each basis element, nondecreasing.
    pub fn orders(&self) -> &[u32] {
        &self.order
    }

    /// Index of the first basis element of order `>= j`.
    pub fn level_start(&self, j: u32) -> usize {
        self.level_start[j.min(self.n) as usize]
    }

    /// `dim m^j/m^{j+1}` for `j < N`.
    pub fn hilbert_counts(&self) -> Vec<u64> {
        (0..self.n)
            .map(|j| (self.level_start(j + 1) - self.level_start(j)) as u64)
            .collect()
    }

    pub fn generator_op(&self, i: usize) -> &SparseOperator<F> {
        &self.mult[i]
    }

    pub fn generator_ops(&self) -> &[SparseOperator<F>] {
        &self.mult
    }

    /// The unit `1`.
    pub fn one(&self) -> SparseVec<F::Elem> {
        vec![(0, self.field.one())]
    }

    /// Multiplication by `Σ c_i x_i`.
    pub fn linear_form_op(&self, coeffs: &[F::Elem]) -> SparseOperator<F> {
        let mut op = SparseOperator::zero(self.field.clone(), self.dim(), self.dim());
        for (c, m) in coeffs.iter().zip(&self.mult) {
            if !self.field.is_zero(c) {
                op = op.add_scaled(c, m);
            }
        }
        op
    }

    /// `Σ c_i x_i` as a coordinate vector.
    pub fn linear_form(&self, coeffs: &[F::Elem]) -> SparseVec<F::Elem> {
        let mut v = Vec::new();
        for (c, m) in coeffs.iter().zip(&self.mult) {
            v = add_scaled(&self.field, &v, c, m.column(0));
        }
        v
    }

    /// Product of two elements.
    pub fn multiply(&self, a: &SparseVec<F::Elem>, b: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
        let mut memo: HashMap<usize, SparseVec<F::Elem>> = HashMap::new();
        let mut out = Vec::new();
        for (i, c) in a {
            let w = self.basis_times(*i, b, &mut memo);
            out = add_scaled(&self.field, &out, c, &w);
        }
        out
    }

    fn basis_times(
        &self,
        i: usize,
        v: &SparseVec<F::Elem>,
        memo: &mut HashMap<usize, SparseVec<F::Elem>>,
    ) -> SparseVec<F::Elem> {
        if let Some(w) = memo.get(&i) {
            return w.clone();
        }
        let w = match self.parent[i] {
            None => v.clone(),
            Some((k, p)) => {
                let inner = self.basis_times(p, v, memo);
                self.mult[k].apply(&inner)
            }
        };
        memo.insert(i, w.clone());
        w
    }

    /// Multiplication by an arbitrary element.
    pub fn element_op(&self, a: &SparseVec<F::Elem>) -> SparseOperator<F> {
        let cols = (0..self.dim())
            .map(|j| self.multiply(a, &vec![(j, self.field.one())]))
            .collect();
        SparseOperator::from_columns(self.field.clone(), self.dim(), cols)
    }

    /// Image of `m^j`, a coordinate tail.
    pub fn power_subspace(&self, j: u32) -> Result<Subspace<F>> {
        if j > self.n {
            return Err(Error::OrderOutOfRange {
                order: j as usize,
                max: self.n as usize,
            });
        }
        Ok(Subspace::coordinate_tail(self.field.clone(), self.dim(), self.level_start(j)))
    }

    /// `m · U`.
    pub fn times_max_ideal(&self, u: &Subspace<F>) -> Subspace<F> {
        self.image_sum(&self.mult, u)
    }

    /// `Σ T_k(U)`.
    pub fn image_sum(&self, ops: &[SparseOperator<F>], u: &Subspace<F>) -> Subspace<F> {
        let vecs: Vec<SparseVec<F::Elem>> = ops
            .iter()
            .flat_map(|op| u.basis().iter().map(move |b| op.apply(b)))
            .collect();
        Subspace::span(self.field.clone(), self.dim(), vecs.iter())
    }

    /// The ideal generated by `elements`: their span closed under multiplication.
    pub fn ideal(&self, elements: &[SparseVec<F::Elem>]) -> Subspace<F> {
        let mut ech = crate::linalg::Echelon::new(self.field.clone(), self.dim());
        let mut queue: Vec<SparseVec<F::Elem>> = elements.to_vec();
        while let Some(v) = queue.pop() {
            if ech.insert(&v) {
                for m in &self.mult {
                    let w = m.apply(&v);
                    if !w.is_empty() {
                        queue.push(w);
                    }
                }
            }
        }
        ech.into_subspace()
    }

    /// Largest `t` with `m^t ⊆ U`.
    pub fn contained_power(&self, u: &Subspace<F>) -> u32 {
        let mut is_pivot = vec![false; self.dim()];
        for p in u.pivots() {
            is_pivot[*p] = true;
        }
        let mut first_missing = self.dim();
        for i in (0..self.dim()).rev() {
            if !is_pivot[i] {
                break;
            }
            first_missing = i;
        }
        (0..=self.n)
            .find(|&t| self.level_start(t) >= first_missing)
            .unwrap_or(self.n)
    }

    /// `{a : T_k a ∈ U for all k}` where every `T_k` multiplies by an element
    /// of order at least `mult_order`.
    ///
    /// When `m^t ⊆ U` the answer contains `m^{t - mult_order}`, so only the
    /// coordinates below that level enter the kernel computation.
    pub fn colon(&self, target: &Subspace<F>, ops: &[SparseOperator<F>], mult_order: u32) -> Result<Subspace<F>> {
        if target.ambient() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: target.ambient(),
            });
        }
        if ops.is_empty() {
            return Ok(Subspace::full(self.field.clone(), self.dim()));
        }
        let t = self.contained_power(target);
        let free_from = self.level_start(t.saturating_sub(mult_order));
        let d = self.dim();
        let mut stacked: Vec<SparseVec<F::Elem>> = Vec::with_capacity(free_from);
        for j in 0..free_from {
            let mut col = Vec::new();
            for (k, op) in ops.iter().enumerate() {
                for (i, x) in target.reduce(op.column(j)) {
                    col.push((k * d + i, x));
                }
            }
            stacked.push(col);
        }
        let mut vecs = kernel_of_columns(&self.field, &stacked, d * ops.len());
        let one = self.field.one();
        vecs.extend((free_from..d).map(|j| vec![(j, one.clone())]));
        Ok(Subspace::span(self.field.clone(), d, vecs.iter()))
    }

    /// `(U : m^l)`, by colons with `m` one at a time.
    pub fn colon_max_ideal_power(&self, target: &Subspace<F>, l: u32) -> Result<Subspace<F>> {
        let mut cur = target.clone();
        for _ in 0..l {
            cur = self.colon(&cur, &self.mult, 1)?;
        }
        Ok(cur)
    }

    /// Order of a nonzero element and its image in `m^j/m^{j+1}`.
    pub fn initial_form(&self, a: &SparseVec<F::Elem>) -> Result<(u32, SparseVec<F::Elem>)> {
        let Some(&(first, _)) = a.iter().min_by_key(|e| e.0) else {
            return Err(Error::ZeroElement);
        };
        let j = self.order[first];
        let end = self.level_start(j + 1);
        Ok((j, a.iter().filter(|e| e.0 < end).cloned().collect()))
    }

    /// `μ(J) = dim J/mJ` for an ideal `J ⊆ m`.
    pub fn min_generators(&self, ideal: &Subspace<F>) -> Result<usize> {
        ideal.quotient_dim(&self.times_max_ideal(ideal))
    }

    /// `J m^j` for `J` generated by the elements whose multiplication operators are given.
    pub fn ideal_times_power(&self, gens: &[SparseOperator<F>], j: u32) -> Result<Subspace<F>> {
        Ok(self.image_sum(gens, &self.power_subspace(j)?))
    }

    /// `a · v` for a scalar.
    pub fn scale(&self, c: &F::Elem, v: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
        scale(&self.field, c, v)
    }
}

fn level_starts(order: &[u32], n: u32) -> Vec<usize> {
    (0..=n).map(|j| order.partition_point(|&o| o < j)).collect()
}

/// Runs `query` at `start, start + step, ...` until two successive results
/// agree; returns the stable result and the truncation it was first seen at.
pub fn stabilize<T: PartialEq, Q>(start: u32, step: u32, max: u32, mut query: Q) -> Result<(T, u32)>
where
    Q: FnMut(u32) -> Result<T>,
{
    let step = step.max(1);
    let mut n = start;
    let mut prev = query(n)?;
    loop {
        let next_n = n + step;
        if next_n > max {
            return Err(Error::ResourceLimit(format!(
                "no stabilization before truncation order {max}"
            )));
        }
        let next = query(next_n)?;
        if next == prev {
            return Ok((prev, n));
        }
        prev = next;
        n = next_n;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::spec::parse_ring_spec;
    use proptest::prelude::*;

    fn algebra(text: &str, n: u32) -> TruncatedAlgebra<PrimeField> {
        build_truncation(&parse_ring_spec(text).unwrap(), PrimeField::default(), n, 20_000).unwrap()
    }

    const WANG: &str = "ring F32003[x,y,z,u,v] / (z^2, z*u, z*v, u*v, y*z - u^3, x*z - v^3)";

    #[test]
    fn artinian_basis_size() {
        let t = algebra("ring F32003[x,y,z] / (x^2, x*y, y^2, (x,y,z)^3)", 3);
        assert_eq!(t.dim(), 7);
        assert_eq!(t.power_subspace(2).unwrap().dim(), 3);
    }

    #[test]
    fn semigroup_low_truncation() {
        let t = algebra("semigroup 6 7 11 15 16", 2);
        assert_eq!(t.dim(), 6);
        assert_eq!(t.labels()[1..], ["t^6", "t^7", "t^11", "t^15", "t^16"]);
    }

    #[test]
    fn second_truncation_is_one_plus_embedding_dimension() {
        for (text, e) in [(WANG, 5), ("ring Q[x,y,z] / (x*z - y*z, x*z + y^3 - z^2)", 3), ("semigroup 3 5 7", 3)] {
            let spec = parse_ring_spec(text).unwrap();
            let t = build_truncation(&spec, PrimeField::default(), 2, 100).unwrap();
            assert_eq!(t.dim(), 1 + e, "{text}");
        }
    }

    #[test]
    fn powers_and_codimension() {
        let t = algebra(WANG, 6);
        assert_eq!(t.power_subspace(0).unwrap().dim(), t.dim());
        assert_eq!(t.power_subspace(1).unwrap().codim(), 1);
        assert!(t.power_subspace(6).unwrap().is_zero());
        assert!(matches!(t.power_subspace(7), Err(Error::OrderOutOfRange { .. })));
        for j in 0..6 {
            let next = t.times_max_ideal(&t.power_subspace(j).unwrap());
            assert_eq!(next, t.power_subspace(j + 1).unwrap());
        }
    }

    #[test]
    fn operators_commute() {
        for text in [WANG, "semigroup 6 7 11 15 16", "extend (semigroup 3 4) by 1"] {
            let t = algebra(text, 5);
            for a in t.generator_ops() {
                for b in t.generator_ops() {
                    assert_eq!(a.compose(b).columns(), b.compose(a).columns(), "{text}");
                }
            }
        }
    }

    #[test]
    fn colon_with_units_and_zero() {
        let t = algebra(WANG, 5);
        let m2 = t.power_subspace(2).unwrap();
        let id = SparseOperator::identity(*t.field(), t.dim());
        assert_eq!(t.colon(&m2, &[id], 0).unwrap(), m2);
        let zero = SparseOperator::zero(*t.field(), t.dim(), t.dim());
        assert_eq!(t.colon(&m2, &[zero], 1).unwrap().dim(), t.dim());
    }

    #[test]
    fn colon_matches_generic_preimage() {
        let t = algebra(WANG, 6);
        let f = *t.field();
        let x = t.linear_form_op(&[3, 5, 7, 11, 13].map(|c| f.from_i64(c)));
        for j in 1..=6 {
            let target = t.power_subspace(j).unwrap();
            let fast = t.colon(&target, std::slice::from_ref(&x), 1).unwrap();
            let slow = crate::linalg::preimage(&x, &target).unwrap();
            assert_eq!(fast, slow);
        }
    }

    #[test]
    fn initial_forms() {
        let t = algebra("ring Q[x,y,z] / (x*z - y*z, x*z + y^3 - z^2)", 6);
        let f = *t.field();
        let x = t.linear_form(&[f.one(), f.zero(), f.zero()]);
        assert_eq!(t.initial_form(&x).unwrap().0, 1);
        let y = t.linear_form(&[f.zero(), f.one(), f.zero()]);
        let (j, r) = t.initial_form(&t.multiply(&x, &y)).unwrap();
        assert_eq!(j, 2);
        assert!(!r.is_empty());
        let deep = vec![(t.dim() - 1, f.one())];
        assert_eq!(t.initial_form(&deep).unwrap().0, 5);
        assert!(matches!(t.initial_form(&Vec::new()), Err(Error::ZeroElement)));
    }

    #[test]
    fn minimal_generators() {
        let t = algebra("semigroup 6 7 11 15 16", 5);
        let m = t.power_subspace(1).unwrap();
        assert_eq!(t.min_generators(&m).unwrap(), 5);
        let t = algebra("ring Q[x,y,z] / (x*z - y*z, x*z + y^3 - z^2)", 5);
        assert_eq!(t.min_generators(&t.power_subspace(1).unwrap()).unwrap(), 3);
        let zero = Subspace::zero(*t.field(), t.dim());
        assert_eq!(t.min_generators(&zero).unwrap(), 0);
    }

    #[test]
    fn ideals_are_stable() {
        let t = algebra(WANG, 6);
        let f = *t.field();
        let x = t.linear_form(&[1, 2, 3, 4, 5].map(|c| f.from_i64(c)));
        let j = t.ideal(&[x]);
        for op in t.generator_ops() {
            for b in j.basis() {
                assert!(j.contains(&op.apply(b)));
            }
        }
    }

    #[test]
    fn multiply_matches_operators() {
        let t = algebra("semigroup 3 5 7", 6);
        let f = *t.field();
        let a = t.linear_form(&[f.from_i64(2), f.from_i64(1), f.zero()]);
        let sq = t.multiply(&a, &a);
        let op = t.element_op(&a);
        assert_eq!(op.apply(&a), sq);
    }

    #[test]
    fn stabilize_stops_on_agreement() {
        let (v, n) = stabilize(4, 2, 20, |n| Ok((n.min(8)) * 2)).unwrap();
        assert_eq!((v, n), (16, 8));
        assert!(stabilize(4, 2, 10, Ok).is_err());
    }

    #[test]
    fn wang_colon_by_superficial_element() {
        // one jump at n = 2: (m^3 : x) strictly contains m^2
        let t = algebra(WANG, 7);
        let f = *t.field();
        let x = t.linear_form_op(&[17, -3, 5, 9, 2].map(|c| f.from_i64(c)));
        let lengths: Vec<usize> = (0..6)
            .map(|n| {
                let c = t.colon(&t.power_subspace(n + 1).unwrap(), std::slice::from_ref(&x), 1).unwrap();
                c.quotient_dim(&t.power_subspace(n).unwrap()).unwrap()
            })
            .collect();
        assert_eq!(lengths, vec![0, 0, 1, 0, 0, 0]);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn semigroup_engine_matches_counts(gens in prop::collection::btree_set(2u64..14, 2..4), n in 3u32..7) {
            let gens: Vec<u64> = gens.into_iter().collect();
            prop_assume!(gens.iter().fold(0, |g, &a| num_integer::gcd(g, a)) == 1);
            let sg = Semigroup::new(&gens).unwrap();
            let t = TruncatedAlgebra::build(PrimeField::default(), &Presentation::Semigroup(sg.clone()), n, 100_000).unwrap();
            // m^{j+1} = m · m^j computed by images, compared level by level
            let mut cur = t.power_subspace(0).unwrap();
            for j in 0..n {
                let next = t.times_max_ideal(&cur);
                prop_assert_eq!(cur.dim() - next.dim(), sg.hilbert_counts(n)[j as usize] as usize);
                cur = next;
            }
            // the binomial presentation gives the same counts
            let toric = Presentation::Polynomial { names: sg.generators().iter().map(|a| format!("t{a}")).collect(), ideal: sg.toric_relations().unwrap(), dim: Some(1) };
            prop_assert_eq!(toric.hilbert_counts(&PrimeField::default(), n, 100_000).unwrap(), sg.hilbert_counts(n));
        }
    }
}
