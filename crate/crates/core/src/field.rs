//! Exact coefficient fields: prime fields with a runtime modulus and the rationals.

use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

/// Default characteristic for modular computations.
pub const DEFAULT_PRIME: u64 = 32003;

/// Which field a ring is presented over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    Rationals,
    PrimeField { p: u64 },
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec::PrimeField { p: DEFAULT_PRIME }
    }
}

impl std::fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::PrimeField { p } => write!(f, "F{p}"),
        }
    }
}

/// Deterministic trial division; the moduli we accept fit in 31 bits.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// A field whose elements are plain values; the field value carries any
/// runtime parameters (the modulus).
pub trait Field: Clone + Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + Eq + Hash + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    #[allow(clippy::wrong_self_convention)]
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn spec(&self) -> FieldSpec;
    fn display(&self, a: &Self::Elem) -> String;

    /// A uniformly chosen nonzero element (prime fields) or a small nonzero
    /// integer (rationals).
    fn random_nonzero<R: Rng>(&self, rng: &mut R) -> i64;

    /// `acc -= c * b`
    fn sub_mul_assign(&self, acc: &mut Self::Elem, c: &Self::Elem, b: &Self::Elem) {
        let t = self.mul(c, b);
        *acc = self.sub(acc, &t);
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }
}

/// Runs `$body` with `$f` bound to the concrete field named by a [`FieldSpec`].
/// The enclosing function must return [`crate::Result`].
#[macro_export]
macro_rules! with_field {
    ($spec:expr, |$f:ident| $body:expr) => {
        match $spec {
            $crate::FieldSpec::Rationals => {
                let $f = $crate::Rationals;
                $body
            }
            $crate::FieldSpec::PrimeField { p } => {
                let $f = $crate::field::prime_field(p)?;
                $body
            }
        }
    };
}

/// `F_p`, or a validation error for unusable `p`.
pub fn prime_field(p: u64) -> crate::Result<PrimeField> {
    PrimeField::new(p).ok_or_else(|| {
        crate::Error::Validation(vec![crate::spec::Diagnostic::error(
            None,
            format!("{p} is not an odd prime below 2^31"),
        )])
    })
}

/// `Z/pZ` with `p` an odd prime below `2^31`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Option<Self> {
        if p > 2 && p < (1 << 31) && is_prime(p) {
            Some(PrimeField { p })
        } else {
            None
        }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = r * a % self.p;
            }
            a = a * a % self.p;
            e >>= 1;
        }
        r
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField { p: DEFAULT_PRIME }
    }
}

impl Field for PrimeField {
    type Elem = u64;

    #[inline]
    fn zero(&self) -> u64 {
        0
    }
    #[inline]
    fn one(&self) -> u64 {
        1
    }
    #[inline]
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    #[inline]
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    #[inline]
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    #[inline]
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    #[inline]
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero");
        self.pow(*a, self.p - 2)
    }
    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
    fn spec(&self) -> FieldSpec {
        FieldSpec::PrimeField { p: self.p }
    }
    fn display(&self, a: &u64) -> String {
        // symmetric representative reads better in reports
        if *a > self.p / 2 {
            format!("-{}", self.p - a)
        } else {
            a.to_string()
        }
    }
    fn random_nonzero<R: Rng>(&self, rng: &mut R) -> i64 {
        rng.gen_range(1..self.p) as i64
    }
    #[inline]
    fn sub_mul_assign(&self, acc: &mut u64, c: &u64, b: &u64) {
        let t = c * b % self.p;
        *acc = if *acc >= t { *acc - t } else { *acc + self.p - t };
    }
}

/// The rational numbers, as reduced fractions of arbitrary-precision integers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero(), "inverse of zero");
        a.recip()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn spec(&self) -> FieldSpec {
        FieldSpec::Rationals
    }
    fn display(&self, a: &BigRational) -> String {
        if a.is_integer() {
            a.to_integer().to_string()
        } else if a.is_negative() {
            format!("-{}/{}", a.numer().abs(), a.denom())
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
    fn random_nonzero<R: Rng>(&self, rng: &mut R) -> i64 {
        loop {
            let v = rng.gen_range(-9..=9);
            if v != 0 {
                return v;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        assert!(is_prime(32003));
        assert!(!is_prime(32001));
        assert!(PrimeField::new(2).is_none());
        assert!(PrimeField::new(15).is_none());
        assert!(PrimeField::new(7).is_some());
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.mul(&3, &5), 1);
        assert_eq!(f.inv(&3), 5);
        assert_eq!(f.from_i64(-1), 6);
        assert_eq!(f.sub(&2, &5), 4);
        let mut acc = 1;
        f.sub_mul_assign(&mut acc, &3, &3);
        assert_eq!(acc, 6);
        assert_eq!(f.display(&6), "-1");
    }

    #[test]
    fn rationals_stay_reduced() {
        let q = Rationals;
        let a = q.mul(&q.from_i64(2), &q.inv(&q.from_i64(4)));
        assert_eq!(*a.numer(), BigInt::from(1));
        assert_eq!(*a.denom(), BigInt::from(2));
        let b = q.neg(&q.inv(&q.from_i64(-3)));
        assert!(b.denom().is_positive());
        assert_eq!(q.display(&b), "1/3");
    }
}
