use super::bigfloat::BigFloat;

/// Precision and stopping rules shared by every numeric routine.
///
/// `rel_tolerance` is the acceptance threshold for verification; series are
/// summed until terms fall below `min(rel_tolerance, 2^-precision_bits)`
/// relative to the running sum, so truncation never dominates the verdict.
#[derive(Clone, Debug)]
pub struct PrecisionContext {
    pub precision_bits: u32,
    pub rel_tolerance: BigFloat,
    pub max_terms: usize,
    pub consecutive_small: usize,
}

/// Extra bits carried internally beyond the requested precision.
pub const GUARD_BITS: u32 = 32;

impl Default for PrecisionContext {
    fn default() -> Self {
        Self::new(256)
    }
}

impl PrecisionContext {
    pub fn new(precision_bits: u32) -> Self {
        Self {
            precision_bits,
            rel_tolerance: BigFloat::parse_decimal("1e-30", 128).expect("literal"),
            max_terms: 10_000,
            consecutive_small: 3,
        }
    }

    pub fn with_tolerance(mut self, tol: BigFloat) -> Self {
        self.rel_tolerance = tol;
        self
    }

    /// Precision used for intermediate arithmetic.
    pub fn working_bits(&self) -> u32 {
        self.precision_bits + GUARD_BITS
    }

    pub fn stop_threshold(&self) -> BigFloat {
        let eps = BigFloat::epsilon(self.precision_bits);
        if self.rel_tolerance < eps { self.rel_tolerance.clone() } else { eps }
    }

    /// Float `n` at working precision.
    pub fn int(&self, n: i64) -> BigFloat {
        BigFloat::from_i64(n).with_prec(self.working_bits())
    }

    pub fn rational(&self, r: &super::ExactRational) -> BigFloat {
        BigFloat::from_rational(r, self.working_bits())
    }
}
