//! The sequence model: length-`N` truncations of countable sequences of free
//! noncommutative polynomials with pointwise operations and the partial-sum
//! operator `R(y₁, y₂, …) = (0, y₁, y₁+y₂, …)`, a weight-one Rota-Baxter
//! algebra. Components are independent, so a fixed truncation loses nothing
//! below it.

use super::Sample;
use crate::foundations::Rational;
use crate::ncpoly::{m_qsym_truncated, Generator, NCPoly, Word};
use crate::rbcore::RBAlgebra;
use num_traits::Zero;
use rand::RngExt;
use rand_chacha::ChaCha12Rng;

/// Handle for the sequence model at a fixed truncation length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeqModel {
    len: usize,
}

/// A truncated sequence; component `k` (1-indexed) sits at `components[k-1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeqElement {
    components: Vec<NCPoly>,
}

impl SeqModel {
    pub fn new(len: usize) -> Self {
        assert!(len >= 1);
        SeqModel { len }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn element(&self, components: Vec<NCPoly>) -> SeqElement {
        assert_eq!(components.len(), self.len, "sequence length mismatch");
        SeqElement { components }
    }

    /// The alphabet viewed as a sequence: component `k` is the single
    /// variable `x_k` of the given alphabet.
    pub fn generator_sequence(&self, alphabet: u32) -> SeqElement {
        SeqElement {
            components: (1..=self.len)
                .map(|k| NCPoly::generator(Generator::new(alphabet, k as u32)))
                .collect(),
        }
    }

    /// `(RX)^{[n]}` or `(RX)^{{n}}` for the canonical generator, via the
    /// generic iterated brackets.
    pub fn rx_bracket(&self, n: usize, variant: BracketVariant) -> SeqElement {
        let x = self.generator_sequence(0);
        match variant {
            BracketVariant::Left => crate::rbcore::bracket_left(self, &x, n),
            BracketVariant::Right => crate::rbcore::bracket_right(self, &x, n),
        }
    }

    /// Component `k` of the expected bracket value, as a quasi-symmetric
    /// monomial in `k−1` variables: `M^{k−1}_{[n]}` (left) or
    /// `M^{k−1}_{ω_n}` (right). For `n = 0` every component is 1.
    pub fn expected_bracket_component(
        &self,
        n: usize,
        k: usize,
        variant: BracketVariant,
    ) -> NCPoly {
        assert!((1..=self.len).contains(&k));
        if n == 0 {
            return NCPoly::one();
        }
        let f: Vec<usize> = match variant {
            BracketVariant::Left => (1..=n).collect(),
            BracketVariant::Right => (1..=n).rev().collect(),
        };
        if k == 1 {
            return NCPoly::zero();
        }
        m_qsym_truncated(&f, k - 1, 0).expect("identity and reversal are surjections")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BracketVariant {
    Left,
    Right,
}

impl SeqElement {
    pub fn component(&self, k: usize) -> &NCPoly {
        &self.components[k - 1]
    }

    pub fn components(&self) -> &[NCPoly] {
        &self.components
    }
}

impl RBAlgebra for SeqModel {
    type Elem = SeqElement;

    fn weight(&self) -> Rational {
        Rational::from_integer(1.into())
    }

    fn is_commutative(&self) -> bool {
        false
    }

    fn zero(&self) -> SeqElement {
        SeqElement {
            components: vec![NCPoly::zero(); self.len],
        }
    }

    fn unit(&self) -> Option<SeqElement> {
        Some(SeqElement {
            components: vec![NCPoly::one(); self.len],
        })
    }

    fn add(&self, a: &SeqElement, b: &SeqElement) -> SeqElement {
        self.zip(a, b, |x, y| x.add(y))
    }

    fn neg(&self, a: &SeqElement) -> SeqElement {
        SeqElement {
            components: a.components.iter().map(|p| p.neg()).collect(),
        }
    }

    fn scalar_mul(&self, c: &Rational, a: &SeqElement) -> SeqElement {
        SeqElement {
            components: a.components.iter().map(|p| p.scalar_mul(c)).collect(),
        }
    }

    fn mul(&self, a: &SeqElement, b: &SeqElement) -> SeqElement {
        self.zip(a, b, |x, y| x.mul(y))
    }

    fn apply_r(&self, a: &SeqElement) -> SeqElement {
        let mut components = Vec::with_capacity(self.len);
        let mut acc = NCPoly::zero();
        for p in &a.components {
            components.push(acc.clone());
            acc = acc.add(p);
        }
        SeqElement { components }
    }

    fn render(&self, a: &SeqElement) -> String {
        let parts: Vec<String> = a.components.iter().map(|p| p.to_string()).collect();
        format!("({})", parts.join(", "))
    }
}

impl SeqModel {
    fn zip(
        &self,
        a: &SeqElement,
        b: &SeqElement,
        f: impl Fn(&NCPoly, &NCPoly) -> NCPoly,
    ) -> SeqElement {
        assert_eq!(a.components.len(), b.components.len(), "length mismatch");
        SeqElement {
            components: a
                .components
                .iter()
                .zip(&b.components)
                .map(|(x, y)| f(x, y))
                .collect(),
        }
    }
}

impl Sample for SeqModel {
    fn sample(&self, rng: &mut ChaCha12Rng) -> SeqElement {
        // sparse components keep deep identity sums affordable
        let components = (0..self.len)
            .map(|_| {
                let n_terms = rng.random_range(0..=2);
                let mut p = NCPoly::zero();
                for _ in 0..n_terms {
                    let len = rng.random_range(1..=2);
                    let letters: Vec<Generator> = (0..len)
                        .map(|_| Generator::new(0, rng.random_range(1..=3)))
                        .collect();
                    let c = super::small_rational(rng);
                    if !c.is_zero() {
                        p = p.add(&NCPoly::from_terms([(Word(letters), c)]));
                    }
                }
                p
            })
            .collect();
        SeqElement { components }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foundations::rat_int;
    use crate::rbcore::{bracket_left, check_rb};
    use rand::SeedableRng;

    #[test]
    fn r_is_the_partial_sum_shift() {
        let m = SeqModel::new(5);
        let x = m.generator_sequence(0);
        let rx = m.apply_r(&x);
        assert!(rx.component(1).is_zero());
        for k in 2..=5 {
            let expect: NCPoly = (1..k)
                .map(|i| NCPoly::generator(Generator::new(0, i as u32)))
                .fold(NCPoly::zero(), |a, b| a.add(&b));
            assert_eq!(rx.component(k), &expect, "component {k}");
        }
        assert_eq!(m.apply_r(&m.zero()), m.zero());
    }

    #[test]
    fn pointwise_product_and_alphabets() {
        let m = SeqModel::new(4);
        let x = m.generator_sequence(0);
        let y = m.generator_sequence(1);
        assert_ne!(x, y);
        let sq = m.mul(&x, &x);
        for k in 1..=4 {
            let g = NCPoly::generator(Generator::new(0, k as u32));
            assert_eq!(sq.component(k), &g.mul(&g));
        }
    }

    #[test]
    fn rb_relation_holds_on_random_pairs() {
        let m = SeqModel::new(6);
        let mut rng = ChaCha12Rng::seed_from_u64(23);
        for _ in 0..40 {
            let a = m.sample(&mut rng);
            let b = m.sample(&mut rng);
            assert!(m.is_zero(&check_rb(&m, &a, &b)));
        }
    }

    #[test]
    fn brackets_match_quasi_symmetric_monomials() {
        let m = SeqModel::new(8);
        assert_eq!(
            m.rx_bracket(0, BracketVariant::Left),
            m.unit().unwrap()
        );
        for n in 1..=4 {
            for variant in [BracketVariant::Left, BracketVariant::Right] {
                let got = m.rx_bracket(n, variant);
                for k in 1..=8 {
                    assert_eq!(
                        got.component(k),
                        &m.expected_bracket_component(n, k, variant),
                        "n={n} k={k} {variant:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn right_bracket_reverses_the_surjection() {
        // (RX)^{{2}} component 4 = M^3_{2,1} = x2x1 + x3x1 + x3x2
        let m = SeqModel::new(4);
        let got = m.rx_bracket(2, BracketVariant::Right);
        let expect = m_qsym_truncated(&[2, 1], 3, 0).unwrap();
        assert_eq!(got.component(4), &expect);
    }

    #[test]
    fn bracket_via_generic_helper_agrees() {
        let m = SeqModel::new(7);
        let x = m.generator_sequence(0);
        assert_eq!(
            bracket_left(&m, &x, 3),
            m.rx_bracket(3, BracketVariant::Left)
        );
    }

    #[test]
    fn unit_behaves() {
        let m = SeqModel::new(3);
        let one = m.unit().unwrap();
        let mut rng = ChaCha12Rng::seed_from_u64(7);
        let a = m.sample(&mut rng);
        assert_eq!(m.mul(&one, &a), a);
        assert_eq!(m.mul(&a, &one), a);
        assert_eq!(m.scalar_mul(&rat_int(0), &a), m.zero());
    }
}
