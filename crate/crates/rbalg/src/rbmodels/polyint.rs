//! Univariate polynomials with `R(f) = ∫₀ˣ f`: the weight-zero model where
//! the Rota-Baxter relation is integration by parts.

use super::Sample;
use crate::foundations::{rat_int, rational_to_string, Rational};
use crate::rbcore::RBAlgebra;
use num_traits::Zero;
use rand::RngExt;
use rand_chacha::ChaCha12Rng;
use std::fmt;

/// Dense univariate polynomial over the rationals; trailing zeros pruned.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(rat_int(1))
    }

    pub fn constant(c: Rational) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// Coefficients in degree order, low to high.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        let mut p = Poly { coeffs };
        p.prune();
        p
    }

    fn prune(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::from_coeffs((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn neg(&self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn scalar_mul(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|v| v * c).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::from_coeffs(coeffs)
    }

    /// Antiderivative vanishing at 0.
    pub fn integrate(&self) -> Poly {
        let mut coeffs = vec![Rational::zero()];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c / rat_int((k + 1) as i64));
        }
        Poly::from_coeffs(coeffs)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{}", rational_to_string(c))?,
                1 => write!(f, "{}*x", rational_to_string(c))?,
                _ => write!(f, "{}*x^{}", rational_to_string(c), k)?,
            }
        }
        Ok(())
    }
}

/// Handle for the polynomial-integration model.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PolyIntModel;

impl RBAlgebra for PolyIntModel {
    type Elem = Poly;

    fn weight(&self) -> Rational {
        Rational::zero()
    }

    fn is_commutative(&self) -> bool {
        true
    }

    fn zero(&self) -> Poly {
        Poly::zero()
    }

    fn unit(&self) -> Option<Poly> {
        Some(Poly::one())
    }

    fn add(&self, a: &Poly, b: &Poly) -> Poly {
        a.add(b)
    }

    fn neg(&self, a: &Poly) -> Poly {
        a.neg()
    }

    fn scalar_mul(&self, c: &Rational, a: &Poly) -> Poly {
        a.scalar_mul(c)
    }

    fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        a.mul(b)
    }

    fn apply_r(&self, a: &Poly) -> Poly {
        a.integrate()
    }

    fn render(&self, a: &Poly) -> String {
        a.to_string()
    }
}

impl Sample for PolyIntModel {
    fn sample(&self, rng: &mut ChaCha12Rng) -> Poly {
        let deg = rng.random_range(0..=2);
        Poly::from_coeffs((0..=deg).map(|_| super::small_rational(rng)).collect())
    }
}
