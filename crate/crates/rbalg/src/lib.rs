//! Exact-arithmetic toolkit for Rota-Baxter algebras.
//!
//! A Rota-Baxter algebra of weight `θ` is an associative algebra `A` with a
//! linear operator `R` satisfying
//!
//! ```text
//! R(x)·R(y) = R( R(x)·y + x·R(y) + θ·x·y )
//! ```
//!
//! Everything here is computed over arbitrary-precision rationals, so every
//! identity check is a bit-exact zero-residual test rather than a numerical
//! approximation. The crate ships:
//!
//! - five concrete models behind one [`rbcore::RBAlgebra`] interface
//!   (partial-sum sequences over free noncommutative polynomials, Laurent
//!   series with minimal subtraction, polynomial and matrix integration,
//!   Riemann summation on a grid),
//! - truncated power series over any model with the Atkinson factorization,
//!   the classical Spitzer identity and three routes to the Magnus exponent,
//! - executable checkers for the Spitzer / Waring / Bohnenblust-Spitzer
//!   family of identities, commutative and noncommutative,
//! - graded connected Hopf algebras (ladder, rooted trees, noncommutative
//!   symmetric functions) with convolution, Dynkin operator and its inverse,
//! - the Bogoliubov recursion / Birkhoff decomposition for regularized
//!   characters together with closed-form counterterm formulas.

pub mod foundations;
pub mod hopf;
pub mod identities;
pub mod ncpoly;
pub mod rbcore;
pub mod rbmodels;
pub mod renorm;
pub mod series;

pub use foundations::Rational;
