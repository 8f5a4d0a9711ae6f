//! Packed monomials and sparse polynomials with integer coefficients.
//!
//! Monomials use a local degree ordering: lower total degree is *larger*,
//! ties broken reverse-lexicographically. In a truncation `k[x]/m^N` this is a
//! well-order compatible with multiplication, and the leading term of a
//! polynomial is its lowest-degree part, so normal forms never lower the
//! order of an element.

use std::cmp::Ordering;

pub const MAX_VARS: usize = 16;
pub const MAX_EXP: u32 = 127;

const HIGH_BITS: u128 = 0x8080_8080_8080_8080_8080_8080_8080_8080;

/// Exponent vector of up to [`MAX_VARS`] variables, one byte per variable.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: u128,
    deg: u16,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { exps: 0, deg: 0 };

    pub fn var(i: usize) -> Monomial {
        assert!(i < MAX_VARS);
        Monomial {
            exps: 1u128 << (8 * i),
            deg: 1,
        }
    }

    pub fn from_exps(exps: &[u32]) -> Option<Monomial> {
        if exps.len() > MAX_VARS {
            return None;
        }
        let mut packed = 0u128;
        let mut deg = 0u32;
        for (i, &e) in exps.iter().enumerate() {
            if e > MAX_EXP {
                return None;
            }
            packed |= (e as u128) << (8 * i);
            deg += e;
        }
        Some(Monomial {
            exps: packed,
            deg: deg as u16,
        })
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u32 {
        ((self.exps >> (8 * i)) & 0xff) as u32
    }

    pub fn exps(&self, nvars: usize) -> Vec<u32> {
        (0..nvars).map(|i| self.exp(i)).collect()
    }

    #[inline]
    pub fn deg(&self) -> u32 {
        self.deg as u32
    }

    pub fn is_one(&self) -> bool {
        self.exps == 0
    }

    /// Highest variable index with a nonzero exponent, plus one.
    pub fn support_len(&self) -> usize {
        if self.exps == 0 {
            0
        } else {
            (127 - self.exps.leading_zeros() as usize) / 8 + 1
        }
    }

    /// Product, or `None` when some exponent would exceed [`MAX_EXP`].
    #[inline]
    pub fn mul(&self, other: &Monomial) -> Option<Monomial> {
        let s = self.exps + other.exps;
        if s & HIGH_BITS != 0 {
            return None;
        }
        Some(Monomial {
            exps: s,
            deg: self.deg + other.deg,
        })
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && ((other.exps | HIGH_BITS) - self.exps) & HIGH_BITS == HIGH_BITS
    }

    /// `other / self`, assuming divisibility.
    #[inline]
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial {
            exps: other.exps - self.exps,
            deg: other.deg - self.deg,
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut packed = 0u128;
        let mut deg = 0u32;
        for i in 0..MAX_VARS {
            let e = self.exp(i).max(other.exp(i));
            packed |= (e as u128) << (8 * i);
            deg += e;
        }
        Monomial {
            exps: packed,
            deg: deg as u16,
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        (0..MAX_VARS).all(|i| self.exp(i) == 0 || other.exp(i) == 0)
    }

    /// Moves variable `i` to `map[i]`.
    pub fn remap(&self, map: &[usize]) -> Option<Monomial> {
        let mut exps = vec![0u32; MAX_VARS];
        for (i, &j) in map.iter().enumerate() {
            if j >= MAX_VARS {
                return None;
            }
            exps[j] += self.exp(i);
        }
        Monomial::from_exps(&exps)
    }

    pub fn render(&self, names: &[String]) -> String {
        let mut parts = Vec::new();
        for (i, name) in names.iter().enumerate() {
            match self.exp(i) {
                0 => {}
                1 => parts.push(name.clone()),
                e => parts.push(format!("{name}^{e}")),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }

    /// All monomials of total degree `d` in `n` variables, in decreasing local order.
    pub fn all_of_degree(n: usize, d: u32) -> Vec<Monomial> {
        fn rec(n: usize, d: u32, i: usize, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if i + 1 == n {
                cur[i] = d;
                out.push(Monomial::from_exps(cur).expect("exponent bound"));
                cur[i] = 0;
                return;
            }
            for e in (0..=d).rev() {
                cur[i] = e;
                rec(n, d - e, i + 1, cur, out);
            }
            cur[i] = 0;
        }
        if n == 0 {
            return if d == 0 { vec![Monomial::ONE] } else { vec![] };
        }
        let mut out = Vec::new();
        rec(n, d, 0, &mut vec![0; n], &mut out);
        out.sort_by(|a, b| b.cmp(a));
        out
    }
}

impl Ord for Monomial {
    /// Local degree reverse-lexicographic order; `Greater` means "leads".
    fn cmp(&self, other: &Self) -> Ordering {
        if self.deg != other.deg {
            return other.deg.cmp(&self.deg);
        }
        let x = self.exps ^ other.exps;
        if x == 0 {
            return Ordering::Equal;
        }
        let byte = (127 - x.leading_zeros() as usize) / 8;
        // smaller exponent in the last differing variable wins
        other.exp(byte).cmp(&self.exp(byte))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial with integer coefficients in canonical form: terms sorted by
/// decreasing local order, no zero coefficients, no repeated monomials.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    terms: Vec<(Monomial, i64)>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { terms: Vec::new() }
    }

    pub fn monomial(m: Monomial, c: i64) -> Self {
        IntPoly::from_terms(vec![(m, c)]).expect("single term")
    }

    /// Combines like terms; `None` on coefficient overflow.
    pub fn from_terms(mut terms: Vec<(Monomial, i64)>) -> Option<Self> {
        terms.sort_by_key(|t| std::cmp::Reverse(t.0));
        let mut out: Vec<(Monomial, i64)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = last.1.checked_add(c)?,
                _ => out.push((m, c)),
            }
        }
        out.retain(|t| t.1 != 0);
        Some(IntPoly { terms: out })
    }

    pub fn terms(&self) -> &[(Monomial, i64)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Smallest degree of a term; `None` for zero.
    pub fn order(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.deg()).min()
    }

    pub fn max_degree(&self) -> u32 {
        self.terms.iter().map(|t| t.0.deg()).max().unwrap_or(0)
    }

    pub fn constant_term(&self) -> i64 {
        self.terms
            .iter()
            .find(|t| t.0.is_one())
            .map_or(0, |t| t.1)
    }

    pub fn support_len(&self) -> usize {
        self.terms.iter().map(|t| t.0.support_len()).max().unwrap_or(0)
    }

    pub fn remap(&self, map: &[usize]) -> Option<IntPoly> {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| m.remap(map).map(|m| (m, *c)))
            .collect::<Option<Vec<_>>>()?;
        IntPoly::from_terms(terms)
    }

    pub fn render(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let (neg, abs) = (*c < 0, c.unsigned_abs());
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                out.push_str(&abs.to_string());
            } else if abs == 1 {
                out.push_str(&m.render(names));
            } else {
                out.push_str(&format!("{abs}*{}", m.render(names)));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(e: &[u32]) -> Monomial {
        Monomial::from_exps(e).unwrap()
    }

    #[test]
    fn local_order_prefers_low_degree() {
        assert!(Monomial::ONE > mono(&[1, 0]));
        assert!(mono(&[0, 1]) > mono(&[2, 0]));
        // revlex tie break: x^2 > x*y > y^2
        assert!(mono(&[2, 0]) > mono(&[1, 1]));
        assert!(mono(&[1, 1]) > mono(&[0, 2]));
        assert!(mono(&[1, 0, 0]) > mono(&[0, 1, 0]));
    }

    #[test]
    fn order_is_multiplicative() {
        let ms = Monomial::all_of_degree(3, 2);
        let w = mono(&[1, 0, 2]);
        for a in &ms {
            for b in &ms {
                let (aw, bw) = (a.mul(&w).unwrap(), b.mul(&w).unwrap());
                assert_eq!(a.cmp(b), aw.cmp(&bw));
            }
        }
    }

    #[test]
    fn divisibility_and_lcm() {
        let a = mono(&[1, 2, 0]);
        let b = mono(&[2, 2, 1]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(a.quotient_of(&b), mono(&[1, 0, 1]));
        assert_eq!(a.lcm(&mono(&[0, 3, 1])), mono(&[1, 3, 1]));
        assert!(mono(&[1, 0]).is_coprime(&mono(&[0, 4])));
        assert!(mono(&[127]).mul(&mono(&[1])).is_none());
    }

    #[test]
    fn monomials_of_degree() {
        assert_eq!(Monomial::all_of_degree(3, 2).len(), 6);
        assert_eq!(Monomial::all_of_degree(5, 3).len(), 35);
        assert_eq!(Monomial::all_of_degree(0, 0), vec![Monomial::ONE]);
    }

    #[test]
    fn canonical_form() {
        let names: Vec<String> = ["x", "y"].iter().map(|s| s.to_string()).collect();
        let p = IntPoly::from_terms(vec![
            (mono(&[0, 2]), 1),
            (mono(&[1, 0]), 3),
            (mono(&[0, 2]), -1),
            (mono(&[1, 1]), -1),
        ])
        .unwrap();
        assert_eq!(p.render(&names), "3*x - x*y");
        assert_eq!(p.order(), Some(1));
    }
}
