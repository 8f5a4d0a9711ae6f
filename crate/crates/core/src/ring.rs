//! A presented local ring together with its Hilbert series and cached truncations.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::config::Config;
use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec};
use crate::hilbert::{compute_series, HilbertData, HilbertSeries};
use crate::poly::{IntPoly, Monomial};
use crate::semigroup::Semigroup;
use crate::spec::{fresh_names, Flat, RingSpec};
use crate::truncated::{Presentation, TruncatedAlgebra};

/// `A/(x)` for the linear form `x = Σ c_i x_i` in the generators of `spec`.
///
/// Semigroup rings are first replaced by their binomial presentation, with
/// variables `t<a>` in increasing order of `a`.
pub fn quotient_spec(spec: &RingSpec, coeffs: &[i64], field: FieldSpec) -> Result<RingSpec> {
    let (variables, mut ideal) = match spec.flatten() {
        Flat::Semigroup {
            generators,
            extra_vars,
        } => {
            let sg = Semigroup::new(&generators)?;
            let mut names: Vec<String> = sg.generators().iter().map(|a| format!("t{a}")).collect();
            let fresh = fresh_names(&names, extra_vars);
            names.extend(fresh);
            (names, sg.toric_relations()?)
        }
        Flat::Quotient {
            variables, ideal, ..
        } => (variables, ideal),
    };
    if coeffs.len() != variables.len() {
        return Err(Error::DimensionMismatch {
            expected: variables.len(),
            found: coeffs.len(),
        });
    }
    let terms = coeffs
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| (Monomial::var(i), c))
        .collect();
    let x = IntPoly::from_terms(terms).ok_or(Error::ZeroElement)?;
    if x.is_zero() {
        return Err(Error::ZeroElement);
    }
    ideal.push(x);
    Ok(RingSpec::Quotient {
        field,
        variables,
        ideal,
        declared_dimension: None,
    })
}

#[derive(Debug)]
pub struct LocalRing<F: Field> {
    spec: RingSpec,
    pres: Presentation,
    field: F,
    hilbert: HilbertData,
    cap: usize,
    cache: Mutex<HashMap<u32, Arc<TruncatedAlgebra<F>>>>,
}

impl<F: Field> LocalRing<F> {
    pub fn new(spec: RingSpec, field: F, config: &Config) -> Result<Self> {
        let start = config.window_for(spec.max_generator_degree());
        Self::with_window(spec, field, start, config.cap, None)
    }

    /// `max_dim` bounds the dimensions tried when reading the series.
    pub fn with_window(spec: RingSpec, field: F, start: u32, cap: usize, max_dim: Option<usize>) -> Result<Self> {
        let pres = Presentation::of(&spec)?;
        let hilbert = compute_series(&pres, &field, start, cap, spec.declared_dimension(), max_dim)?;
        Ok(LocalRing {
            spec,
            pres,
            field,
            hilbert,
            cap,
            cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn spec(&self) -> &RingSpec {
        &self.spec
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn presentation(&self) -> &Presentation {
        &self.pres
    }

    pub fn hilbert(&self) -> &HilbertData {
        &self.hilbert
    }

    pub fn series(&self) -> &HilbertSeries {
        &self.hilbert.series
    }

    pub fn dim(&self) -> usize {
        self.hilbert.series.d
    }

    pub fn ngens(&self) -> usize {
        self.pres.ngens()
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// `A/m^n`, built once per `n`.
    pub fn algebra(&self, n: u32) -> Result<Arc<TruncatedAlgebra<F>>> {
        if let Some(t) = self.cache.lock().expect("cache lock").get(&n) {
            return Ok(t.clone());
        }
        let t = Arc::new(TruncatedAlgebra::build(self.field.clone(), &self.pres, n, self.cap)?);
        self.cache.lock().expect("cache lock").insert(n, t.clone());
        Ok(t)
    }

    /// `A/(x)`, read with the same window as `A`.
    pub fn quotient(&self, coeffs: &[i64]) -> Result<LocalRing<F>> {
        let spec = quotient_spec(&self.spec, coeffs, self.field.spec())?;
        LocalRing::with_window(spec, self.field.clone(), self.hilbert.truncation, self.cap, Some(self.dim()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::spec::parse_ring_spec;

    #[test]
    fn quotient_of_semigroup_ring() {
        let spec = RingSpec::semigroup(&[6, 7, 11, 15, 16]);
        let mut x = vec![0; 5];
        x[0] = 1;
        let q = quotient_spec(&spec, &x, FieldSpec::default()).unwrap();
        let ring = LocalRing::new(q, PrimeField::default(), &Config::default()).unwrap();
        // t^6 is a reduction: the quotient is Artinian of length e = 6
        assert_eq!(ring.dim(), 0);
        assert_eq!(ring.series().multiplicity(), 6);
    }

    #[test]
    fn quotient_rejects_bad_forms() {
        let spec = parse_ring_spec("ring Q[x,y] / (x*y)").unwrap();
        assert!(matches!(quotient_spec(&spec, &[0, 0], FieldSpec::Rationals), Err(Error::ZeroElement)));
        assert!(matches!(
            quotient_spec(&spec, &[1], FieldSpec::Rationals),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn algebras_are_cached() {
        let spec = parse_ring_spec("semigroup 3 5 7").unwrap();
        let ring = LocalRing::new(spec, PrimeField::default(), &Config::default()).unwrap();
        let a = ring.algebra(4).unwrap();
        let b = ring.algebra(4).unwrap();
        assert!(Arc::ptr_eq(&a, &b));
    }
}
