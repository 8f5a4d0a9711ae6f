//! Standard bases of `I + m^N` in `k[x_1..x_n]`.
//!
//! Everything of degree `>= N` is zero, so the local degree order of
//! [`Monomial`] is a multiplicative well-order on the surviving monomials and
//! plain Buchberger terminates. The leading term of a polynomial is its
//! lowest-degree part: the leading ideal is the ideal of initial forms, and
//! the standard monomials of degree `n` count `m^n / m^{n+1}` of the local
//! ring for every `n < N`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{IntPoly, Monomial, MAX_EXP};

/// Terms in decreasing local order, nonzero coefficients.
pub type Poly<F> = Vec<(Monomial, <F as Field>::Elem)>;

/// Reduced standard basis of `I + m^N`; the monomials of degree `N` are implicit.
#[derive(Clone, Debug)]
pub struct StandardBasis<F: Field> {
    field: F,
    nvars: usize,
    n: u32,
    polys: Vec<Poly<F>>,
}

/// `N` must leave room for exponent arithmetic.
pub const MAX_TRUNCATION: u32 = MAX_EXP - 7;

pub fn poly_from_int<F: Field>(field: &F, p: &IntPoly, n: u32) -> Poly<F> {
    p.terms()
        .iter()
        .filter(|(m, _)| m.deg() < n)
        .map(|(m, c)| (*m, field.from_i64(*c)))
        .filter(|(_, c)| !field.is_zero(c))
        .collect()
}

/// `f - c * m * g`, dropping terms of degree `>= n`.
fn sub_shifted<F: Field>(field: &F, f: &[(Monomial, F::Elem)], c: &F::Elem, m: Monomial, g: &[(Monomial, F::Elem)], n: u32) -> Poly<F> {
    let mut out = Vec::with_capacity(f.len() + g.len());
    let mut i = 0;
    let mut gi = g.iter().map_while(|(t, a)| {
        let mt = m.mul(t).filter(|mt| mt.deg() < n)?;
        Some((mt, a))
    });
    let mut next_g = gi.next();
    while let Some((mt, a)) = next_g {
        if i < f.len() && f[i].0 > mt {
            out.push(f[i].clone());
            i += 1;
            continue;
        }
        let prod = field.mul(c, a);
        if i < f.len() && f[i].0 == mt {
            let v = field.sub(&f[i].1, &prod);
            if !field.is_zero(&v) {
                out.push((mt, v));
            }
            i += 1;
        } else {
            out.push((mt, field.neg(&prod)));
        }
        next_g = gi.next();
    }
    out.extend_from_slice(&f[i..]);
    out
}

fn make_monic<F: Field>(field: &F, f: &mut Poly<F>) {
    if let Some((_, lc)) = f.first() {
        if !field.is_one(lc) {
            let inv = field.inv(lc);
            for t in f.iter_mut() {
                t.1 = field.mul(&inv, &t.1);
            }
        }
    }
}

fn s_poly<F: Field>(field: &F, f: &Poly<F>, g: &Poly<F>, n: u32) -> Poly<F> {
    let (lf, lg) = (f[0].0, g[0].0);
    let l = lf.lcm(&lg);
    // both monic: (l/lf) f - (l/lg) g
    let uf = lf.quotient_of(&l);
    let ug = lg.quotient_of(&l);
    let scaled: Poly<F> = f
        .iter()
        .filter_map(|(t, a)| uf.mul(t).filter(|m| m.deg() < n).map(|m| (m, a.clone())))
        .collect();
    sub_shifted(field, &scaled, &field.one(), ug, g, n)
}

struct Reducer<'a, F: Field> {
    field: &'a F,
    n: u32,
    basis: &'a [Poly<F>],
}

impl<'a, F: Field> Reducer<'a, F> {
    fn divisor(&self, t: &Monomial) -> Option<&'a Poly<F>> {
        self.basis.iter().find(|g| g[0].0.divides(t))
    }

    /// Full normal form: no term of the result is divisible by a leading monomial.
    fn normal_form(&self, mut f: Poly<F>) -> Poly<F> {
        let mut out = Vec::new();
        let mut start = 0;
        while start < f.len() {
            let (t, c) = f[start].clone();
            match self.divisor(&t) {
                Some(g) => {
                    let u = g[0].0.quotient_of(&t);
                    f = sub_shifted(self.field, &f[start..], &c, u, g, self.n);
                    start = 0;
                }
                None => {
                    out.push((t, c));
                    start += 1;
                }
            }
        }
        out
    }
}

impl<F: Field> StandardBasis<F> {
    /// Buchberger on `gens + m^N`, followed by interreduction and the S-pair certificate.
    pub fn compute(field: F, nvars: usize, gens: &[IntPoly], n: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::TruncationTooSmall(n as usize));
        }
        if n > MAX_TRUNCATION {
            return Err(Error::ResourceLimit(format!(
                "truncation order {n} exceeds the supported maximum {MAX_TRUNCATION}"
            )));
        }
        let mut basis: Vec<Poly<F>> = Vec::new();
        let mut pairs: Vec<(u32, usize, usize)> = Vec::new();

        let add = |h: Poly<F>, basis: &mut Vec<Poly<F>>, pairs: &mut Vec<(u32, usize, usize)>| {
            let k = basis.len();
            let lh = h[0].0;
            for (i, g) in basis.iter().enumerate() {
                let lg = g[0].0;
                let l = lg.lcm(&lh);
                if l.deg() >= n || lg.is_coprime(&lh) {
                    continue;
                }
                pairs.push((l.deg(), i, k));
            }
            basis.push(h);
        };

        for g in gens {
            let p = poly_from_int(&field, g, n);
            let mut h = Reducer {
                field: &field,
                n,
                basis: &basis,
            }
            .normal_form(p);
            if !h.is_empty() {
                make_monic(&field, &mut h);
                add(h, &mut basis, &mut pairs);
            }
        }
        while !pairs.is_empty() {
            // lowest lcm degree first
            let (pos, _) = pairs
                .iter()
                .enumerate()
                .min_by_key(|(_, p)| (p.0, p.1, p.2))
                .expect("nonempty");
            let (_, i, j) = pairs.swap_remove(pos);
            let s = s_poly(&field, &basis[i], &basis[j], n);
            let mut h = Reducer {
                field: &field,
                n,
                basis: &basis,
            }
            .normal_form(s);
            if !h.is_empty() {
                make_monic(&field, &mut h);
                add(h, &mut basis, &mut pairs);
            }
        }

        let polys = interreduce(&field, basis, n);
        let sb = StandardBasis {
            field,
            nvars,
            n,
            polys,
        };
        if !sb.certificate() {
            return Err(Error::CrossCheckFailure(
                "standard basis certificate: an S-polynomial does not reduce to zero".into(),
            ));
        }
        for g in gens {
            if !sb.normal_form(poly_from_int(&sb.field, g, n)).is_empty() {
                return Err(Error::CrossCheckFailure(
                    "standard basis certificate: an ideal generator does not reduce to zero".into(),
                ));
            }
        }
        Ok(sb)
    }

    /// Every S-polynomial of the basis reduces to zero. Pairs whose lcm has
    /// degree `>= N` are skipped: every term of such an S-polynomial vanishes.
    pub fn certificate(&self) -> bool {
        let red = self.reducer();
        for i in 0..self.polys.len() {
            for j in i + 1..self.polys.len() {
                let l = self.polys[i][0].0.lcm(&self.polys[j][0].0);
                if l.deg() >= self.n {
                    continue;
                }
                let s = s_poly(&self.field, &self.polys[i], &self.polys[j], self.n);
                if !red.normal_form(s).is_empty() {
                    return false;
                }
            }
        }
        true
    }

    fn reducer(&self) -> Reducer<'_, F> {
        Reducer {
            field: &self.field,
            n: self.n,
            basis: &self.polys,
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn truncation(&self) -> u32 {
        self.n
    }

    pub fn polys(&self) -> &[Poly<F>] {
        &self.polys
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.polys.iter().map(|p| p[0].0).collect()
    }

    pub fn normal_form(&self, f: Poly<F>) -> Poly<F> {
        self.reducer().normal_form(f)
    }

    pub fn is_standard(&self, m: &Monomial) -> bool {
        m.deg() < self.n && !self.polys.iter().any(|g| g[0].0.divides(m))
    }

    /// Standard monomials grouped by degree `0..N`, each group in decreasing order.
    /// Stops with `ResourceLimit` once more than `cap` have been produced.
    pub fn standard_monomials(&self, cap: usize) -> Result<Vec<Vec<Monomial>>> {
        let mut levels: Vec<Vec<Monomial>> = Vec::new();
        let mut total = 0usize;
        let mut cur = if self.is_standard(&Monomial::ONE) {
            vec![Monomial::ONE]
        } else {
            Vec::new()
        };
        for _ in 0..self.n {
            total += cur.len();
            if total > cap {
                return Err(Error::ResourceLimit(format!(
                    "more than {cap} standard monomials below degree {}",
                    self.n
                )));
            }
            let mut next = Vec::new();
            for m in &cur {
                // each monomial is generated from its divisor with the largest
                // variable index stripped, so it appears once
                let top = m.support_len();
                for i in top.saturating_sub(1)..self.nvars {
                    if let Some(p) = m.mul(&Monomial::var(i)) {
                        if self.is_standard(&p) {
                            next.push(p);
                        }
                    }
                }
            }
            next.sort_by(|a, b| b.cmp(a));
            levels.push(std::mem::replace(&mut cur, next));
        }
        Ok(levels)
    }

    /// `H(n)` for `n < N`.
    pub fn hilbert_counts(&self, cap: usize) -> Result<Vec<u64>> {
        Ok(self
            .standard_monomials(cap)?
            .iter()
            .map(|l| l.len() as u64)
            .collect())
    }
}

fn interreduce<F: Field>(field: &F, mut basis: Vec<Poly<F>>, n: u32) -> Vec<Poly<F>> {
    basis.sort_by(|a, b| b[0].0.cmp(&a[0].0));
    let mut minimal: Vec<Poly<F>> = Vec::new();
    for g in basis {
        let lg = g[0].0;
        if !minimal.iter().any(|h| h[0].0.divides(&lg)) {
            minimal.retain(|h| !lg.divides(&h[0].0));
            minimal.push(g);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let g = &minimal[k];
        let others: Vec<Poly<F>> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != k)
            .map(|(_, p)| p.clone())
            .collect();
        let red = Reducer {
            field,
            n,
            basis: &others,
        };
        let mut tail = red.normal_form(g[1..].to_vec());
        let mut h = vec![g[0].clone()];
        h.append(&mut tail);
        out.push(h);
    }
    out.sort_by(|a, b| b[0].0.cmp(&a[0].0));
    out
}

/// Standard monomial index lookup for normal-form coordinates.
pub fn index_map(monomials: &[Monomial]) -> HashMap<Monomial, usize> {
    monomials.iter().enumerate().map(|(i, m)| (*m, i)).collect()
}
