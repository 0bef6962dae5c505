//! Concrete Rota-Baxter algebras behind the [`RBAlgebra`] interface:
//!
//! - [`SeqModel`]: truncated sequences of free noncommutative polynomials
//!   with the partial-sum operator — the free weight-one model,
//! - [`LaurentMsModel`]: Laurent series with minimal subtraction
//!   (idempotent, weight −1),
//! - [`PolyIntModel`]: polynomials with integration from 0 (weight 0),
//! - [`MatrixPolyModel`]: matrices of polynomials with entrywise
//!   integration (noncommutative, weight 0),
//! - [`RiemannModel`]: grid functions with Riemann summation
//!   (weights −θ and +θ for the two summation variants).

mod laurent_ms;
mod matrixpoly;
mod polyint;
mod riemann;
mod seq;

pub use laurent_ms::{try_ms_project, LaurentMsModel};
pub use matrixpoly::{MatPoly, MatrixPolyModel};
pub use polyint::{Poly, PolyIntModel};
pub use riemann::{RiemannModel, SummationVariant, TabulatedFn};
pub use seq::{SeqElement, SeqModel};

use crate::rbcore::{DoubleProductAlgebra, RBAlgebra, Rescaled};
use rand_chacha::ChaCha12Rng;

/// Deterministic random elements for property runs; every model draws small
/// exact rationals so residuals stay readable.
pub trait Sample: RBAlgebra {
    fn sample(&self, rng: &mut ChaCha12Rng) -> Self::Elem;
}

impl<H: Sample> Sample for Rescaled<H> {
    fn sample(&self, rng: &mut ChaCha12Rng) -> Self::Elem {
        self.inner().sample(rng)
    }
}

impl<H: Sample> Sample for DoubleProductAlgebra<H> {
    fn sample(&self, rng: &mut ChaCha12Rng) -> Self::Elem {
        self.0.sample(rng)
    }
}

pub(crate) fn small_rational(rng: &mut ChaCha12Rng) -> crate::Rational {
    use crate::foundations::rat;
    use rand::RngExt;
    let num = rng.random_range(-6i64..=6);
    let den = rng.random_range(1i64..=3);
    rat(num, den)
}
