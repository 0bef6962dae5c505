//! Free noncommutative polynomials over indexed alphabets, the word order
//! used to take leading monomials, and truncated quasi-symmetric monomials in
//! noncommuting variables.

use crate::foundations::{rational_to_string, Rational};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// A variable `x_index` drawn from alphabet `alphabet`. Generators compare
/// by `(alphabet, index)`, so letters of a later alphabet dominate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator {
    pub alphabet: u32,
    pub index: u32,
}

impl Generator {
    pub fn new(alphabet: u32, index: u32) -> Self {
        assert!(index >= 1, "generator indices start at 1");
        Generator { alphabet, index }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x[{},{}]", self.alphabet, self.index)
    }
}

/// A word over the generators; the empty word is the unit.
/// Ordered by graded lexicographic comparison: length first, then letters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<Generator>);

impl Word {
    pub fn unit() -> Self {
        Word(Vec::new())
    }

    pub fn single(g: Generator) -> Self {
        Word(vec![g])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, g) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "·")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// A finitely supported rational combination of words; zero coefficients are
/// never stored, so equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct NCPoly {
    terms: BTreeMap<Word, Rational>,
}

impl NCPoly {
    pub fn zero() -> Self {
        NCPoly::default()
    }

    pub fn one() -> Self {
        NCPoly::from_word(Word::unit())
    }

    pub fn from_word(w: Word) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(w, Rational::one());
        NCPoly { terms }
    }

    pub fn generator(g: Generator) -> Self {
        NCPoly::from_word(Word::single(g))
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, Rational)>>(it: I) -> Self {
        let mut p = NCPoly::zero();
        for (w, c) in it {
            p.add_term(w, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    fn add_term(&mut self, w: Word, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        NCPoly {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scalar_mul(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return NCPoly::zero();
        }
        NCPoly {
            terms: self.terms.iter().map(|(w, v)| (w.clone(), v * c)).collect(),
        }
    }

    /// Noncommutative product: words concatenate.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = NCPoly::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                out.add_term(w1.concat(w2), c1 * c2);
            }
        }
        out
    }

    /// The largest word with nonzero coefficient under the graded
    /// lexicographic order; `None` on the zero polynomial.
    pub fn sup_monomial(&self) -> Option<&Word> {
        self.terms.keys().next_back()
    }
}

impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() && !w.is_empty() {
                write!(f, "{w}")?;
            } else if w.is_empty() {
                write!(f, "{}", rational_to_string(c))?;
            } else {
                write!(f, "{}·{w}", rational_to_string(c))?;
            }
        }
        Ok(())
    }
}

/// The truncated quasi-symmetric monomial `M_f^{num_vars}` attached to a
/// surjection `f : [n] → [k]` (given by its value sequence): the sum over
/// increasing injections `φ : [k] → [num_vars]` of the words
/// `x_{φ(f(1))} ⋯ x_{φ(f(n))}`. Non-surjective value sequences are rejected.
pub fn m_qsym_truncated(
    f: &[usize],
    num_vars: usize,
    alphabet: u32,
) -> Result<NCPoly, NotASurjection> {
    if f.is_empty() {
        return Err(NotASurjection { values: f.to_vec() });
    }
    let k = *f.iter().max().unwrap();
    let mut hit = vec![false; k + 1];
    for &v in f {
        if v == 0 {
            return Err(NotASurjection { values: f.to_vec() });
        }
        hit[v] = true;
    }
    if !hit[1..].iter().all(|&h| h) {
        return Err(NotASurjection { values: f.to_vec() });
    }

    let mut out = NCPoly::zero();
    let mut subset: Vec<u32> = Vec::new();
    // increasing injections of [k] into [num_vars] are the sorted k-subsets
    fn rec(
        start: u32,
        remaining: usize,
        num_vars: usize,
        subset: &mut Vec<u32>,
        f: &[usize],
        alphabet: u32,
        out: &mut NCPoly,
    ) {
        if remaining == 0 {
            let word = Word(
                f.iter()
                    .map(|&v| Generator::new(alphabet, subset[v - 1]))
                    .collect(),
            );
            out.add_term(word, Rational::one());
            return;
        }
        for idx in start..=(num_vars as u32).saturating_sub(remaining as u32 - 1) {
            subset.push(idx);
            rec(idx + 1, remaining - 1, num_vars, subset, f, alphabet, out);
            subset.pop();
        }
    }
    rec(1, k, num_vars, &mut subset, f, alphabet, &mut out);
    Ok(out)
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
#[error("value sequence {values:?} is not a surjection onto 1..k")]
pub struct NotASurjection {
    values: Vec<usize>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foundations::rat_int;
    use proptest::prelude::*;

    fn x(i: u32) -> NCPoly {
        NCPoly::generator(Generator::new(0, i))
    }

    fn word(indices: &[u32]) -> Word {
        Word(indices.iter().map(|&i| Generator::new(0, i)).collect())
    }

    #[test]
    fn product_is_noncommutative_and_distributive() {
        let a = x(1).mul(&x(2));
        let b = x(2).mul(&x(1));
        assert_ne!(a, b);

        let lhs = x(1).add(&x(2)).mul(&x(1));
        let rhs = NCPoly::from_word(word(&[1, 1])).add(&NCPoly::from_word(word(&[2, 1])));
        assert_eq!(lhs, rhs);

        let p = x(1).mul(&x(3)).add(&x(2));
        assert_eq!(NCPoly::one().mul(&p), p);
        assert_eq!(p.mul(&NCPoly::one()), p);
    }

    #[test]
    fn sup_monomial_examples() {
        // x2 x6 x7 + x2 x7 x5 -> x2 x7 x5
        let p = NCPoly::from_word(word(&[2, 6, 7])).add(&NCPoly::from_word(word(&[2, 7, 5])));
        assert_eq!(p.sup_monomial(), Some(&word(&[2, 7, 5])));

        let single = NCPoly::from_word(word(&[4, 2]));
        assert_eq!(single.sup_monomial(), Some(&word(&[4, 2])));

        // enumerate and compare: M^3_{[2]} = x1x2 + x1x3 + x2x3
        let m = m_qsym_truncated(&[1, 2], 3, 0).unwrap();
        assert_eq!(m.sup_monomial(), Some(&word(&[2, 3])));

        assert_eq!(NCPoly::zero().sup_monomial(), None);
    }

    #[test]
    fn qsym_monomials_match_displayed_expansions() {
        let m3 = m_qsym_truncated(&[1, 3, 3, 2], 3, 0).unwrap();
        assert_eq!(m3, NCPoly::from_word(word(&[1, 3, 3, 2])));

        let m4 = m_qsym_truncated(&[1, 3, 3, 2], 4, 0).unwrap();
        let expect = NCPoly::from_word(word(&[1, 3, 3, 2]))
            .add(&NCPoly::from_word(word(&[1, 4, 4, 2])))
            .add(&NCPoly::from_word(word(&[1, 4, 4, 3])))
            .add(&NCPoly::from_word(word(&[2, 4, 4, 3])));
        assert_eq!(m4, expect);

        let singles = m_qsym_truncated(&[1], 5, 0).unwrap();
        let expect: NCPoly = (1..=5).map(x).fold(NCPoly::zero(), |a, b| a.add(&b));
        assert_eq!(singles, expect);
    }

    #[test]
    fn qsym_rejects_non_surjections() {
        assert!(m_qsym_truncated(&[1, 3], 4, 0).is_err()); // misses 2
        assert!(m_qsym_truncated(&[0, 1], 4, 0).is_err());
        assert!(m_qsym_truncated(&[], 4, 0).is_err());
    }

    #[test]
    fn qsym_term_count_is_binomial() {
        use crate::foundations::binomial;
        // all increasing injections give distinct words here
        for (f, k) in [(vec![1usize, 2], 2usize), (vec![2, 1, 3], 3), (vec![1, 2, 2], 2)] {
            for n in k..=7 {
                let m = m_qsym_truncated(&f, n, 0).unwrap();
                assert_eq!(rat_int(m.num_terms() as i64), binomial(n, k));
            }
        }
    }

    #[test]
    fn alphabets_stay_distinct() {
        let a = NCPoly::generator(Generator::new(0, 1));
        let b = NCPoly::generator(Generator::new(1, 1));
        assert_ne!(a, b);
        assert!(Generator::new(0, 9) < Generator::new(1, 1));
    }

    prop_compose! {
        fn arb_word(max_len: usize, max_index: u32)(letters in prop::collection::vec(1..=max_index, 0..=max_len)) -> Word {
            Word(letters.into_iter().map(|i| Generator::new(0, i)).collect())
        }
    }

    prop_compose! {
        fn arb_poly(max_terms: usize)(terms in prop::collection::vec((arb_word(4, 5), -4i64..=4), 0..=max_terms)) -> NCPoly {
            NCPoly::from_terms(terms.into_iter().map(|(w, c)| (w, rat_int(c))))
        }
    }

    proptest! {
        #[test]
        fn mul_is_associative_and_unital(a in arb_poly(4), b in arb_poly(4), c in arb_poly(4)) {
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(NCPoly::one().mul(&a), a.clone());
            prop_assert_eq!(a.mul(&NCPoly::one()), a);
        }

        #[test]
        fn mul_distributes(a in arb_poly(3), b in arb_poly(3), c in arb_poly(3)) {
            prop_assert_eq!(a.add(&b).mul(&c), a.mul(&c).add(&b.mul(&c)));
            prop_assert_eq!(c.mul(&a.add(&b)), c.mul(&a).add(&c.mul(&b)));
        }

        #[test]
        fn sup_is_multiplicative_on_homogeneous_words(
            len in 1usize..=3,
            a in prop::collection::vec(1u32..=5, 3),
            b in prop::collection::vec(1u32..=5, 3),
            z in arb_word(3, 5),
        ) {
            // the order is multiplicative on homogeneous comparisons
            let x = Word(a[..len].iter().map(|&i| Generator::new(0, i)).collect());
            let y = Word(b[..len].iter().map(|&i| Generator::new(0, i)).collect());
            prop_assume!(x != y);
            let (x, y) = if x < y { (x, y) } else { (y, x) };
            let (px, py, pz) = (NCPoly::from_word(x), NCPoly::from_word(y), NCPoly::from_word(z.clone()));
            prop_assert!(px.mul(&pz).sup_monomial().unwrap() < py.mul(&pz).sup_monomial().unwrap());
            prop_assert!(pz.mul(&px).sup_monomial().unwrap() < pz.mul(&py).sup_monomial().unwrap());
        }
    }
}
