//! The full invariant report of a ring, computed end to end.

use serde::Serialize;

use crate::config::Config;
use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec};
use crate::filtration::{
    check_m3j_lengths, cm_type, depth_from_steps, minimal_reduction, ratliff_rush, reduction_quotient_function,
    rho, sigma, DepthData, M3JReport, RatliffRushData, ReductionData, SuperficialElement, TypeData,
};
use crate::hilbert::{samuel_check, HilbertSeries, SamuelCheck};
use crate::ring::LocalRing;
use crate::spec::RingSpec;
use crate::with_field;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certification {
    pub field: String,
    pub seed: u64,
    pub cap: usize,
    /// Truncation at which the Hilbert series was read.
    pub series_truncation: u32,
    /// Truncation that certified the reduction table.
    pub reduction_truncation: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub schema: u32,
    pub spec: String,
    pub d: usize,
    pub hpoly: HilbertSeries,
    /// `e_0, ..., e_max(d, 2)`.
    pub e: Vec<i64>,
    /// Embedding codimension `μ(m) - d`.
    pub h: i64,
    pub multiplicity: i64,
    pub depth_g: usize,
    #[serde(rename = "type")]
    pub cm_type: usize,
    pub type_data: TypeData,
    pub reduction: ReductionData,
    /// `ℓ(m^2/Jm)`.
    pub m2_jm: usize,
    /// `ℓ(m^3/Jm^2)`.
    pub m3_jm2: usize,
    /// Hilbert function of `G(A)/J*G(A)`.
    pub reduction_quotients: Vec<usize>,
    pub superficial: Option<SuperficialElement>,
    pub depth: Option<DepthData>,
    pub ratliff_rush: Option<RatliffRushData>,
    pub rho: Option<Vec<usize>>,
    pub sigma: Option<Vec<usize>>,
    pub m3j: Option<M3JReport>,
    pub samuel: SamuelCheck,
    pub certification: Certification,
}

impl InvariantReport {
    /// `e_i`, from the numerator for any `i`.
    pub fn e(&self, i: usize) -> i64 {
        self.hpoly.e(i)
    }

    /// `true` when `G(A)` is Cohen-Macaulay.
    pub fn graded_cm(&self) -> bool {
        self.depth_g == self.d
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Runs every computation on `spec`, over the field chosen by `config`.
pub fn analyze(spec: &RingSpec, config: &Config) -> Result<InvariantReport> {
    with_field!(config.field_for(spec.field()), |f| analyze_with(spec, f, config))
}

pub fn analyze_with<F: Field>(spec: &RingSpec, field: F, config: &Config) -> Result<InvariantReport> {
    let fspec: FieldSpec = field.spec();
    let ring = LocalRing::new(spec.clone(), field, config)?;
    analyze_ring(&ring, config, fspec)
}

pub fn analyze_ring<F: Field>(ring: &LocalRing<F>, config: &Config, fspec: FieldSpec) -> Result<InvariantReport> {
    let hs = ring.series().clone();
    let d = hs.d;
    let seed = config.seed;
    let samuel = {
        let n = (hs.postulation_index() + d + 3) as u32;
        let counts = ring.presentation().hilbert_counts(ring.field(), n.max(2), config.cap)?;
        samuel_check(&hs, &counts)?
    };
    let (reduction, steps) = minimal_reduction(ring, seed, config.attempts)?;
    let type_data = cm_type(ring, &reduction, seed, config.attempts)?;
    let reduction_quotients =
        reduction_quotient_function(ring, &reduction.elements, reduction.reduction_number as u32 + 1)?;
    let (superficial, depth, ratliff_rush_data, rho_data, sigma_data, m3j) = if d == 0 {
        (None, None, None, None, None, None)
    } else {
        let first = steps[0].element.clone();
        let depth = depth_from_steps(ring, &steps)?;
        let rr = ratliff_rush(ring, &first.b, (first.b.len() + 1).max(4), 0)?;
        if rr.data.r.is_empty() != first.b.is_empty() {
            return Err(Error::CrossCheckFailure(
                "Ratliff-Rush triviality disagrees with the b-polynomial".into(),
            ));
        }
        let rho_data = if d == 1 { Some(rho(ring, &first.coeffs)?) } else { None };
        let sigma_data = if d == 2 {
            Some(sigma(ring, &reduction, &first.b)?)
        } else {
            None
        };
        let m3j = if d == 3 {
            Some(check_m3j_lengths(ring, seed, config.attempts)?)
        } else {
            None
        };
        (Some(first), Some(depth), Some(rr.data), rho_data, sigma_data, m3j)
    };
    let depth_g = depth.as_ref().map_or(0, |x| x.depth);
    Ok(InvariantReport {
        schema: SCHEMA_VERSION,
        spec: ring.spec().to_string(),
        d,
        e: (0..=d.max(2)).map(|i| hs.e(i)).collect(),
        h: hs.embedding_codim(),
        multiplicity: hs.multiplicity(),
        depth_g,
        cm_type: type_data.cm_type,
        type_data,
        m2_jm: reduction.length(1),
        m3_jm2: reduction.length(2),
        reduction_quotients,
        superficial,
        depth,
        ratliff_rush: ratliff_rush_data,
        rho: rho_data,
        sigma: sigma_data,
        m3j,
        samuel,
        certification: Certification {
            field: fspec.to_string(),
            seed,
            cap: config.cap,
            series_truncation: ring.hilbert().truncation,
            reduction_truncation: reduction.truncation,
        },
        reduction,
        hpoly: hs,
    })
}
