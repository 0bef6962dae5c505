//! Laurent series with minimal subtraction: `R` projects onto the strictly
//! negative powers of `ε`. `R` is idempotent, which forces weight −1; the
//! images of `R` and `R̃ = id − R` are complementary subalgebras.

use super::Sample;
use crate::foundations::{LaurentSeries, Rational, Trunc};
use crate::rbcore::RBAlgebra;
use rand::RngExt;
use rand_chacha::ChaCha12Rng;

/// Handle for the minimal-subtraction model.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct LaurentMsModel;

/// Pole projection with an explicit window check: the series must know all
/// of its negative-exponent coefficients.
pub fn try_ms_project(x: &LaurentSeries) -> Result<LaurentSeries, WindowError> {
    if !x.trunc().covers(-1) {
        return Err(WindowError {
            needed: -1,
            trunc: x.trunc(),
        });
    }
    Ok(x.pole_part())
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
#[error("truncation window {trunc:?} does not reach exponent {needed}")]
pub struct WindowError {
    pub needed: i64,
    pub trunc: Trunc,
}

impl RBAlgebra for LaurentMsModel {
    type Elem = LaurentSeries;

    fn weight(&self) -> Rational {
        -Rational::from_integer(1.into())
    }

    fn is_commutative(&self) -> bool {
        true
    }

    fn zero(&self) -> LaurentSeries {
        LaurentSeries::zero()
    }

    fn unit(&self) -> Option<LaurentSeries> {
        Some(LaurentSeries::one())
    }

    fn add(&self, a: &LaurentSeries, b: &LaurentSeries) -> LaurentSeries {
        a.add(b)
    }

    fn neg(&self, a: &LaurentSeries) -> LaurentSeries {
        a.neg()
    }

    fn scalar_mul(&self, c: &Rational, a: &LaurentSeries) -> LaurentSeries {
        a.scalar_mul(c)
    }

    fn mul(&self, a: &LaurentSeries, b: &LaurentSeries) -> LaurentSeries {
        a.mul(b)
    }

    fn apply_r(&self, a: &LaurentSeries) -> LaurentSeries {
        try_ms_project(a).expect("pole projection needs the window to reach eps^-1")
    }

    fn render(&self, a: &LaurentSeries) -> String {
        a.to_string()
    }
}

impl Sample for LaurentMsModel {
    fn sample(&self, rng: &mut ChaCha12Rng) -> LaurentSeries {
        self.sample_with_pole_depth(rng, 2)
    }
}

impl LaurentMsModel {
    /// Random exact Laurent polynomial with poles no deeper than `depth`.
    pub fn sample_with_pole_depth(&self, rng: &mut ChaCha12Rng, depth: i64) -> LaurentSeries {
        let mut terms = Vec::new();
        for e in -depth..=2 {
            if rng.random_range(0..3) == 0 {
                continue;
            }
            terms.push((e, super::small_rational(rng)));
        }
        LaurentSeries::from_terms(terms)
    }
}
