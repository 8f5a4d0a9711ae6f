//! Numerical semigroups and their rings `k[[t^a : a ∈ gens]]`.
//!
//! The maximal ideal is spanned by `t^s`, `s ≠ 0`, and `m^n` by the `t^s`
//! whose longest factorization has length at least `n`. So the order of
//! `t^s` is that maximal length `L(s)` and everything here is counting.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::poly::{IntPoly, Monomial, MAX_VARS};
use crate::spec::{Diagnostic, RingSpec};

/// Membership tables past this size are refused.
const TABLE_LIMIT: u64 = 20_000_000;
/// Total factorizations enumerated while presenting the semigroup ring.
const FACTORIZATION_LIMIT: usize = 500_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Semigroup {
    gens: Vec<u64>,
    /// `member[s]` for `s <= frobenius + 1`.
    member: Vec<bool>,
    apery: Vec<u64>,
}

impl Semigroup {
    pub fn new(generators: &[u64]) -> Result<Self> {
        let mut gens = generators.to_vec();
        gens.sort_unstable();
        gens.dedup();
        if gens.is_empty() || gens[0] == 0 {
            return Err(Error::Validation(vec![Diagnostic::error(None, "semigroup needs positive generators")]));
        }
        if gens.iter().fold(0u64, |g, &a| g.gcd(&a)) != 1 {
            return Err(Error::Validation(vec![Diagnostic::error(None, "semigroup generators must have gcd 1")]));
        }
        let a1 = gens[0];
        // Schur: the Frobenius number is below (a1 - 1)(ak - 1)
        let bound = a1 * *gens.last().expect("nonempty") + 1;
        if bound > TABLE_LIMIT {
            return Err(Error::ResourceLimit(format!(
                "semigroup membership table of size {bound} is too large"
            )));
        }
        let mut member = vec![false; bound as usize + 1];
        member[0] = true;
        for s in 1..=bound as usize {
            member[s] = gens.iter().any(|&a| a as usize <= s && member[s - a as usize]);
        }
        let mut apery = vec![u64::MAX; a1 as usize];
        for (s, &m) in member.iter().enumerate() {
            let r = s % a1 as usize;
            if m && apery[r] == u64::MAX {
                apery[r] = s as u64;
            }
        }
        let frob = *apery.iter().max().expect("nonempty") as i64 - a1 as i64;
        member.truncate((frob + 2).max(1) as usize);
        Ok(Semigroup { gens, member, apery })
    }

    pub fn generators(&self) -> &[u64] {
        &self.gens
    }

    pub fn embedding_dimension(&self) -> usize {
        self.gens.len()
    }

    /// `e_0` of the semigroup ring.
    pub fn multiplicity(&self) -> u64 {
        self.gens[0]
    }

    /// Largest gap; `-1` for the whole of `N`.
    pub fn frobenius(&self) -> i64 {
        *self.apery.iter().max().expect("nonempty") as i64 - self.gens[0] as i64
    }

    pub fn conductor(&self) -> u64 {
        (self.frobenius() + 1) as u64
    }

    /// `Ap(S, a_1)`, indexed by residue mod `a_1`.
    pub fn apery_set(&self) -> &[u64] {
        &self.apery
    }

    pub fn contains(&self, s: u64) -> bool {
        match self.member.get(s as usize) {
            Some(m) => *m,
            None => true,
        }
    }

    /// Longest factorization length of every `s < bound`, `None` off the semigroup.
    pub fn max_lengths(&self, bound: u64) -> Vec<Option<u32>> {
        let mut l: Vec<Option<u32>> = vec![None; bound as usize];
        if bound == 0 {
            return l;
        }
        l[0] = Some(0);
        for s in 1..bound as usize {
            l[s] = self
                .gens
                .iter()
                .filter(|&&a| a as usize <= s)
                .filter_map(|&a| l[s - a as usize])
                .max()
                .map(|v| v + 1);
        }
        l
    }

    /// Every `s` with `L(s) < n` lies below this bound.
    pub fn order_bound(&self, n: u32) -> u64 {
        n as u64 * self.gens[0] + self.conductor()
    }

    /// Elements of order `< n` with their orders, sorted by `(order, s)`.
    pub fn truncated_basis(&self, n: u32) -> Vec<(u64, u32)> {
        let l = self.max_lengths(self.order_bound(n));
        let mut out: Vec<(u64, u32)> = l
            .iter()
            .enumerate()
            .filter_map(|(s, o)| o.filter(|&o| o < n).map(|o| (s as u64, o)))
            .collect();
        out.sort_by_key(|&(s, o)| (o, s));
        out
    }

    /// `H(n)` for `n < N`.
    pub fn hilbert_counts(&self, n: u32) -> Vec<u64> {
        let mut counts = vec![0u64; n as usize];
        for (_, o) in self.truncated_basis(n) {
            counts[o as usize] += 1;
        }
        counts
    }

    /// All exponent vectors `u` with `Σ u_i a_i = s`.
    pub fn factorizations(&self, s: u64) -> Vec<Vec<u32>> {
        fn rec(gens: &[u64], i: usize, rest: u64, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>, limit: usize) {
            if out.len() > limit {
                return;
            }
            if i + 1 == gens.len() {
                if rest.is_multiple_of(gens[i]) {
                    cur[i] = (rest / gens[i]) as u32;
                    out.push(cur.clone());
                    cur[i] = 0;
                }
                return;
            }
            let mut k = 0u64;
            while k * gens[i] <= rest {
                cur[i] = k as u32;
                rec(gens, i + 1, rest - k * gens[i], cur, out, limit);
                k += 1;
            }
            cur[i] = 0;
        }
        let mut out = Vec::new();
        rec(&self.gens, 0, s, &mut vec![0; self.gens.len()], &mut out, FACTORIZATION_LIMIT);
        out
    }

    /// Binomials generating the kernel of `k[x_1..x_k] -> k[t]`, `x_i ↦ t^{a_i}`.
    ///
    /// For each `s`, factorizations sharing a variable are linked; whenever
    /// this graph is disconnected one binomial per extra component is needed,
    /// and these binomials generate the ideal. Such `s` are either in the
    /// Apéry set of `a_1` or differ from it by one generator, so only those
    /// candidates are examined.
    pub fn toric_relations(&self) -> Result<Vec<IntPoly>> {
        let k = self.gens.len();
        if k > MAX_VARS {
            return Err(Error::ConversionOverflow(format!("{k} generators exceed the variable limit")));
        }
        let mut candidates: Vec<u64> = Vec::new();
        for &w in &self.apery {
            candidates.push(w);
            for &a in &self.gens {
                candidates.push(w + a);
            }
        }
        candidates.sort_unstable();
        candidates.dedup();
        let mut relations = Vec::new();
        let mut total = 0usize;
        for s in candidates {
            let facts = self.factorizations(s);
            total += facts.len();
            if total > FACTORIZATION_LIMIT {
                return Err(Error::ConversionOverflow(format!(
                    "more than {FACTORIZATION_LIMIT} factorizations below {s}"
                )));
            }
            if facts.len() < 2 {
                continue;
            }
            let comps = components(&facts, k);
            let reps: Vec<&Vec<u32>> = comps.iter().map(|c| &facts[c[0]]).collect();
            for r in reps.iter().skip(1) {
                let u = monomial_of(reps[0])?;
                let v = monomial_of(r)?;
                relations.push(IntPoly::from_terms(vec![(u, 1), (v, -1)]).expect("two terms"));
            }
        }
        Ok(relations)
    }

    /// Exact polynomial presentation, variables named `t<a>`.
    pub fn to_quotient(&self, field: FieldSpec) -> Result<RingSpec> {
        Ok(RingSpec::Quotient {
            field,
            variables: self.gens.iter().map(|a| format!("t{a}")).collect(),
            ideal: self.toric_relations()?,
            declared_dimension: Some(1),
        })
    }
}

fn monomial_of(u: &[u32]) -> Result<Monomial> {
    Monomial::from_exps(u).ok_or_else(|| Error::ConversionOverflow("relation exponent exceeds the supported maximum".into()))
}

/// Connected components (as index lists) of factorizations linked by shared support.
fn components(facts: &[Vec<u32>], k: usize) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..facts.len()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for j in 0..k {
        let mut first = None;
        for (i, f) in facts.iter().enumerate() {
            if f[j] > 0 {
                match first {
                    None => first = Some(i),
                    Some(r) => {
                        let (a, b) = (find(&mut parent, r), find(&mut parent, i));
                        parent[a] = b;
                    }
                }
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for i in 0..facts.len() {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(i);
    }
    let mut out: Vec<Vec<usize>> = groups.into_values().collect();
    out.sort_by_key(|c| c[0]);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sally_semigroup_invariants() {
        let s = Semigroup::new(&[6, 7, 11, 15, 16]).unwrap();
        assert_eq!(s.multiplicity(), 6);
        assert_eq!(s.embedding_dimension(), 5);
        // gaps: 1..5, 8, 9, 10, 17 -> Frobenius 17? 17 = 6+11 is in S; check directly
        let gaps: Vec<u64> = (1..40).filter(|&x| !s.contains(x)).collect();
        assert_eq!(s.frobenius(), *gaps.last().unwrap() as i64);
        // h = 1 + 4z + z^4 over (1 - z): H = 1,5,5,5,6,6,...
        assert_eq!(s.hilbert_counts(8), vec![1, 5, 5, 5, 6, 6, 6, 6]);
    }

    #[test]
    fn two_generator_relations() {
        let s = Semigroup::new(&[2, 3]).unwrap();
        assert_eq!(s.frobenius(), 1);
        let rel = s.toric_relations().unwrap();
        assert_eq!(rel.len(), 1);
        let names = vec!["x".to_string(), "y".to_string()];
        assert_eq!(rel[0].render(&names), "y^2 - x^3");
    }

    #[test]
    fn twisted_cubic_relations() {
        let s = Semigroup::new(&[3, 4, 5]).unwrap();
        assert_eq!(s.toric_relations().unwrap().len(), 3);
        assert_eq!(s.hilbert_counts(5), vec![1, 3, 3, 3, 3]);
    }

    #[test]
    fn trivial_semigroup() {
        let s = Semigroup::new(&[1]).unwrap();
        assert_eq!(s.frobenius(), -1);
        assert_eq!(s.hilbert_counts(4), vec![1, 1, 1, 1]);
        assert!(s.toric_relations().unwrap().is_empty());
    }

    #[test]
    fn gcd_rejected() {
        assert!(Semigroup::new(&[4, 6]).is_err());
    }
}
