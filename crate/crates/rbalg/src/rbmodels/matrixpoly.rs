//! Square matrices of polynomials with entrywise integration: the smallest
//! genuinely noncommutative weight-zero model.

use super::polyint::Poly;
use super::Sample;
use crate::foundations::Rational;
use crate::rbcore::RBAlgebra;
use num_traits::Zero;
use rand::RngExt;
use rand_chacha::ChaCha12Rng;

/// A `dim × dim` matrix of polynomials, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatPoly {
    dim: usize,
    entries: Vec<Poly>,
}

impl MatPoly {
    pub fn new(dim: usize, entries: Vec<Poly>) -> Self {
        assert_eq!(entries.len(), dim * dim);
        MatPoly { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i * self.dim + j]
    }
}

/// Handle for the matrix model at a fixed dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MatrixPolyModel {
    dim: usize,
}

impl MatrixPolyModel {
    pub fn new(dim: usize) -> Self {
        assert!(dim >= 1);
        MatrixPolyModel { dim }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
}

impl Default for MatrixPolyModel {
    fn default() -> Self {
        MatrixPolyModel::new(2)
    }
}

impl RBAlgebra for MatrixPolyModel {
    type Elem = MatPoly;

    fn weight(&self) -> Rational {
        Rational::zero()
    }

    fn is_commutative(&self) -> bool {
        self.dim == 1
    }

    fn zero(&self) -> MatPoly {
        MatPoly::new(self.dim, vec![Poly::zero(); self.dim * self.dim])
    }

    fn unit(&self) -> Option<MatPoly> {
        let mut entries = vec![Poly::zero(); self.dim * self.dim];
        for i in 0..self.dim {
            entries[i * self.dim + i] = Poly::one();
        }
        Some(MatPoly::new(self.dim, entries))
    }

    fn add(&self, a: &MatPoly, b: &MatPoly) -> MatPoly {
        self.check(a);
        self.check(b);
        MatPoly::new(
            self.dim,
            a.entries
                .iter()
                .zip(&b.entries)
                .map(|(x, y)| x.add(y))
                .collect(),
        )
    }

    fn neg(&self, a: &MatPoly) -> MatPoly {
        MatPoly::new(self.dim, a.entries.iter().map(|x| x.neg()).collect())
    }

    fn scalar_mul(&self, c: &Rational, a: &MatPoly) -> MatPoly {
        MatPoly::new(self.dim, a.entries.iter().map(|x| x.scalar_mul(c)).collect())
    }

    fn mul(&self, a: &MatPoly, b: &MatPoly) -> MatPoly {
        self.check(a);
        self.check(b);
        let d = self.dim;
        let mut entries = vec![Poly::zero(); d * d];
        for i in 0..d {
            for j in 0..d {
                let mut acc = Poly::zero();
                for k in 0..d {
                    acc = acc.add(&a.entry(i, k).mul(b.entry(k, j)));
                }
                entries[i * d + j] = acc;
            }
        }
        MatPoly::new(d, entries)
    }

    fn apply_r(&self, a: &MatPoly) -> MatPoly {
        MatPoly::new(self.dim, a.entries.iter().map(|x| x.integrate()).collect())
    }

    fn render(&self, a: &MatPoly) -> String {
        let rows: Vec<String> = (0..self.dim)
            .map(|i| {
                let cols: Vec<String> = (0..self.dim).map(|j| a.entry(i, j).to_string()).collect();
                format!("[{}]", cols.join(", "))
            })
            .collect();
        format!("[{}]", rows.join("; "))
    }
}

impl MatrixPolyModel {
    fn check(&self, a: &MatPoly) {
        assert_eq!(a.dim, self.dim, "matrix dimension mismatch");
    }
}

impl Sample for MatrixPolyModel {
    fn sample(&self, rng: &mut ChaCha12Rng) -> MatPoly {
        let entries = (0..self.dim * self.dim)
            .map(|_| {
                let deg = rng.random_range(0..=2);
                Poly::from_coeffs((0..=deg).map(|_| super::small_rational(rng)).collect())
            })
            .collect();
        MatPoly::new(self.dim, entries)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rbcore::{check_rb, commutator};
    use rand::SeedableRng;

    #[test]
    fn genuinely_noncommutative() {
        let m = MatrixPolyModel::default();
        let mut rng = ChaCha12Rng::seed_from_u64(9);
        let mut found = false;
        for _ in 0..10 {
            let a = m.sample(&mut rng);
            let b = m.sample(&mut rng);
            if !m.is_zero(&commutator(&m, &a, &b)) {
                found = true;
                break;
            }
        }
        assert!(found, "random matrices should fail to commute");
    }

    #[test]
    fn entrywise_integration_satisfies_rb() {
        let m = MatrixPolyModel::default();
        let mut rng = ChaCha12Rng::seed_from_u64(17);
        for _ in 0..40 {
            let a = m.sample(&mut rng);
            let b = m.sample(&mut rng);
            assert!(m.is_zero(&check_rb(&m, &a, &b)));
        }
    }

    #[test]
    fn unit_is_the_identity_matrix() {
        let m = MatrixPolyModel::default();
        let one = m.unit().unwrap();
        let mut rng = ChaCha12Rng::seed_from_u64(2);
        let a = m.sample(&mut rng);
        assert_eq!(m.mul(&one, &a), a);
        assert_eq!(m.mul(&a, &one), a);
    }
}
