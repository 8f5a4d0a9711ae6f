use serde::Serialize;

use crate::field::{FieldSpec, DEFAULT_PRIME};

/// Knobs shared by every computation. All randomness derives from `seed`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Config {
    /// Overrides the field of the presentation; semigroup rings use it directly.
    pub field: Option<FieldSpec>,
    /// Characteristic used when no field is given anywhere.
    pub prime: u64,
    /// Degrees within this distance of the truncation are not reported.
    pub window: Option<u32>,
    /// Largest admissible basis of a truncation.
    pub cap: usize,
    pub seed: u64,
    /// Attempts per superficial element before giving up.
    pub attempts: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            field: None,
            prime: DEFAULT_PRIME,
            window: None,
            cap: 20_000,
            seed: 0,
            attempts: 8,
        }
    }
}

impl Config {
    /// Field for `spec_field` under this configuration.
    pub fn field_for(&self, spec_field: Option<FieldSpec>) -> FieldSpec {
        self.field
            .or(spec_field)
            .unwrap_or(FieldSpec::PrimeField { p: self.prime })
    }

    /// Faithfulness window for a presentation whose generators have degree at most `max_deg`.
    pub fn window_for(&self, max_deg: u32) -> u32 {
        self.window.unwrap_or(3 + max_deg)
    }
}
