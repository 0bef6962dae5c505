//! Riemann summation on a finite grid: values `f(θ), f(2θ), …, f(Mθ)` with
//! pointwise product. The inclusive sum `R_θ(f)(mθ) = θ Σ_{k≤m} f(kθ)` is a
//! Rota-Baxter operator of weight `−θ`; the exclusive variant
//! `R'_θ(f)(mθ) = θ Σ_{k<m} f(kθ)` has weight `+θ`. Only the algebraic
//! relation on the grid is claimed, no analytic limit.

use super::Sample;
use crate::foundations::{rational_to_string, Rational};
use crate::rbcore::RBAlgebra;
use num_traits::Zero;
use rand_chacha::ChaCha12Rng;

/// Grid samples `f(kθ)` for `k = 1..=M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TabulatedFn {
    samples: Vec<Rational>,
}

impl TabulatedFn {
    pub fn new(samples: Vec<Rational>) -> Self {
        TabulatedFn { samples }
    }

    pub fn samples(&self) -> &[Rational] {
        &self.samples
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SummationVariant {
    /// `Σ_{k≤m}`, weight `−θ`.
    Inclusive,
    /// `Σ_{k<m}`, weight `+θ`.
    Exclusive,
}

/// Handle for the Riemann-summation model on a fixed grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RiemannModel {
    len: usize,
    step: Rational,
    variant: SummationVariant,
}

impl RiemannModel {
    pub fn new(len: usize, step: Rational, variant: SummationVariant) -> Self {
        assert!(len >= 1);
        assert!(!step.is_zero(), "grid step must be nonzero");
        RiemannModel { len, step, variant }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn step(&self) -> &Rational {
        &self.step
    }

    pub fn variant(&self) -> SummationVariant {
        self.variant
    }

    fn check(&self, f: &TabulatedFn) {
        assert_eq!(f.samples.len(), self.len, "grid length mismatch");
    }
}

impl RBAlgebra for RiemannModel {
    type Elem = TabulatedFn;

    fn weight(&self) -> Rational {
        match self.variant {
            SummationVariant::Inclusive => -self.step.clone(),
            SummationVariant::Exclusive => self.step.clone(),
        }
    }

    fn is_commutative(&self) -> bool {
        true
    }

    fn zero(&self) -> TabulatedFn {
        TabulatedFn::new(vec![Rational::zero(); self.len])
    }

    fn unit(&self) -> Option<TabulatedFn> {
        Some(TabulatedFn::new(vec![
            Rational::from_integer(1.into());
            self.len
        ]))
    }

    fn add(&self, a: &TabulatedFn, b: &TabulatedFn) -> TabulatedFn {
        self.check(a);
        self.check(b);
        TabulatedFn::new(
            a.samples
                .iter()
                .zip(&b.samples)
                .map(|(x, y)| x + y)
                .collect(),
        )
    }

    fn neg(&self, a: &TabulatedFn) -> TabulatedFn {
        TabulatedFn::new(a.samples.iter().map(|x| -x.clone()).collect())
    }

    fn scalar_mul(&self, c: &Rational, a: &TabulatedFn) -> TabulatedFn {
        TabulatedFn::new(a.samples.iter().map(|x| x * c).collect())
    }

    fn mul(&self, a: &TabulatedFn, b: &TabulatedFn) -> TabulatedFn {
        self.check(a);
        self.check(b);
        TabulatedFn::new(
            a.samples
                .iter()
                .zip(&b.samples)
                .map(|(x, y)| x * y)
                .collect(),
        )
    }

    fn apply_r(&self, a: &TabulatedFn) -> TabulatedFn {
        self.check(a);
        let mut out = Vec::with_capacity(self.len);
        let mut acc = Rational::zero();
        for sample in &a.samples {
            match self.variant {
                SummationVariant::Inclusive => {
                    acc += sample * &self.step;
                    out.push(acc.clone());
                }
                SummationVariant::Exclusive => {
                    out.push(acc.clone());
                    acc += sample * &self.step;
                }
            }
        }
        TabulatedFn::new(out)
    }

    fn render(&self, a: &TabulatedFn) -> String {
        let parts: Vec<String> = a.samples.iter().map(rational_to_string).collect();
        format!("[{}]", parts.join(", "))
    }
}

impl Sample for RiemannModel {
    fn sample(&self, rng: &mut ChaCha12Rng) -> TabulatedFn {
        TabulatedFn::new((0..self.len).map(|_| super::small_rational(rng)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foundations::{rat, rat_int};
    use crate::rbcore::check_rb;
    use rand::SeedableRng;

    #[test]
    fn inclusive_sum_has_weight_minus_theta() {
        for step in [rat_int(1), rat(1, 2)] {
            let m = RiemannModel::new(8, step.clone(), SummationVariant::Inclusive);
            assert_eq!(m.weight(), -step);
            let mut rng = ChaCha12Rng::seed_from_u64(1);
            for _ in 0..40 {
                let f = m.sample(&mut rng);
                let g = m.sample(&mut rng);
                assert!(m.is_zero(&check_rb(&m, &f, &g)));
            }
        }
    }

    #[test]
    fn exclusive_sum_has_weight_plus_theta() {
        for step in [rat_int(1), rat(1, 2)] {
            let m = RiemannModel::new(8, step.clone(), SummationVariant::Exclusive);
            assert_eq!(m.weight(), step);
            let mut rng = ChaCha12Rng::seed_from_u64(2);
            for _ in 0..40 {
                let f = m.sample(&mut rng);
                let g = m.sample(&mut rng);
                assert!(m.is_zero(&check_rb(&m, &f, &g)));
            }
        }
    }

    #[test]
    fn summation_decomposition_spelled_out() {
        // R(f)R(g) = R(R(f)g) + R(fR(g)) − θR(fg) on the inclusive grid
        let theta = rat(1, 2);
        let m = RiemannModel::new(6, theta.clone(), SummationVariant::Inclusive);
        let mut rng = ChaCha12Rng::seed_from_u64(3);
        let f = m.sample(&mut rng);
        let g = m.sample(&mut rng);
        let lhs = m.mul(&m.apply_r(&f), &m.apply_r(&g));
        let rhs = m.add(
            &m.add(
                &m.apply_r(&m.mul(&m.apply_r(&f), &g)),
                &m.apply_r(&m.mul(&f, &m.apply_r(&g))),
            ),
            &m.scalar_mul(&-theta, &m.apply_r(&m.mul(&f, &g))),
        );
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn partial_sums_shift_between_variants() {
        let m_in = RiemannModel::new(4, rat_int(1), SummationVariant::Inclusive);
        let m_ex = RiemannModel::new(4, rat_int(1), SummationVariant::Exclusive);
        let f = TabulatedFn::new(vec![rat_int(1), rat_int(2), rat_int(3), rat_int(4)]);
        assert_eq!(
            m_in.apply_r(&f).samples(),
            &[rat_int(1), rat_int(3), rat_int(6), rat_int(10)]
        );
        assert_eq!(
            m_ex.apply_r(&f).samples(),
            &[rat_int(0), rat_int(1), rat_int(3), rat_int(6)]
        );
    }
}
