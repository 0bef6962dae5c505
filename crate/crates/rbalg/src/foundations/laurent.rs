//! Truncated Laurent series in a formal variable `ε` with exact rational
//! coefficients. A series knows which coefficients it knows: everything at
//! exponents `<= trunc` is exact, everything above is unknown. `Trunc::Exact`
//! marks a series all of whose coefficients are known (a Laurent polynomial).

use super::{rational_to_string, Rational};
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

/// Upper edge of the known coefficient window.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Trunc {
    /// All coefficients are known; unstored ones are zero.
    Exact,
    /// Coefficients at exponents `> n` are unknown.
    UpTo(i64),
}

impl Trunc {
    pub fn min(self, other: Trunc) -> Trunc {
        match (self, other) {
            (Trunc::Exact, t) | (t, Trunc::Exact) => t,
            (Trunc::UpTo(a), Trunc::UpTo(b)) => Trunc::UpTo(a.min(b)),
        }
    }

    pub fn covers(self, exponent: i64) -> bool {
        match self {
            Trunc::Exact => true,
            Trunc::UpTo(n) => exponent <= n,
        }
    }
}

/// A Laurent series with finitely many stored terms; zero coefficients are
/// pruned, so equality is structural.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentSeries {
    coeffs: BTreeMap<i64, Rational>,
    trunc: Trunc,
}

impl LaurentSeries {
    pub fn zero() -> Self {
        LaurentSeries {
            coeffs: BTreeMap::new(),
            trunc: Trunc::Exact,
        }
    }

    pub fn one() -> Self {
        Self::monomial(0, Rational::from_integer(1.into()))
    }

    /// `c · ε^k` as an exact series.
    pub fn monomial(exponent: i64, coeff: Rational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !coeff.is_zero() {
            coeffs.insert(exponent, coeff);
        }
        LaurentSeries {
            coeffs,
            trunc: Trunc::Exact,
        }
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, Rational)>>(terms: I) -> Self {
        let mut s = Self::zero();
        for (e, c) in terms {
            s.add_term(e, c);
        }
        s
    }

    /// Restricts the known window, discarding stored coefficients above it.
    pub fn with_trunc(mut self, trunc: Trunc) -> Self {
        self.trunc = self.trunc.min(trunc);
        if let Trunc::UpTo(n) = self.trunc {
            self.coeffs.retain(|&e, _| e <= n);
        }
        self
    }

    pub fn trunc(&self) -> Trunc {
        self.trunc
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn min_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Coefficient at `exponent`; `None` when the exponent lies outside the
    /// known window.
    pub fn coeff(&self, exponent: i64) -> Option<Rational> {
        if !self.trunc.covers(exponent) {
            return None;
        }
        Some(
            self.coeffs
                .get(&exponent)
                .cloned()
                .unwrap_or_else(Rational::zero),
        )
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &Rational)> {
        self.coeffs.iter()
    }

    fn add_term(&mut self, exponent: i64, coeff: Rational) {
        if !self.trunc.covers(exponent) || coeff.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exponent).or_insert_with(Rational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.coeffs.remove(&exponent);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let trunc = self.trunc.min(other.trunc);
        let mut out = LaurentSeries {
            coeffs: BTreeMap::new(),
            trunc,
        };
        for (&e, c) in &self.coeffs {
            out.add_term(e, c.clone());
        }
        for (&e, c) in &other.coeffs {
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        LaurentSeries {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c.clone())).collect(),
            trunc: self.trunc,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scalar_mul(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return LaurentSeries {
                coeffs: BTreeMap::new(),
                trunc: self.trunc,
            };
        }
        LaurentSeries {
            coeffs: self.coeffs.iter().map(|(&e, v)| (e, v * c)).collect(),
            trunc: self.trunc,
        }
    }

    /// Product; the result carries the tightest truncation the factors
    /// support (`N₁ + min₂` against `N₂ + min₁`).
    pub fn mul(&self, other: &Self) -> Self {
        let trunc = match (self.trunc, other.trunc) {
            (Trunc::Exact, Trunc::Exact) => Trunc::Exact,
            _ => {
                let bound = |t: Trunc, o: &LaurentSeries| -> Option<i64> {
                    match t {
                        Trunc::Exact => None,
                        Trunc::UpTo(n) => Some(match o.min_exponent() {
                            Some(m) => n + m,
                            // the other factor is zero as far as it is known
                            None => match o.trunc {
                                Trunc::Exact => return None,
                                Trunc::UpTo(k) => n + k + 1,
                            },
                        }),
                    }
                };
                let b1 = bound(self.trunc, other);
                let b2 = bound(other.trunc, self);
                match (b1, b2) {
                    (None, None) => Trunc::Exact,
                    (Some(a), None) => Trunc::UpTo(a),
                    (None, Some(b)) => Trunc::UpTo(b),
                    (Some(a), Some(b)) => Trunc::UpTo(a.min(b)),
                }
            }
        };
        let mut out = LaurentSeries {
            coeffs: BTreeMap::new(),
            trunc,
        };
        for (&e1, c1) in &self.coeffs {
            for (&e2, c2) in &other.coeffs {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    /// Projection onto strictly negative exponents (the pole part).
    pub fn pole_part(&self) -> Self {
        LaurentSeries {
            coeffs: self
                .coeffs
                .iter()
                .filter(|(&e, _)| e < 0)
                .map(|(&e, c)| (e, c.clone()))
                .collect(),
            trunc: self.trunc,
        }
    }

    /// Complement of the pole part (nonnegative exponents only).
    pub fn regular_part(&self) -> Self {
        LaurentSeries {
            coeffs: self
                .coeffs
                .iter()
                .filter(|(&e, _)| e >= 0)
                .map(|(&e, c)| (e, c.clone()))
                .collect(),
            trunc: self.trunc,
        }
    }

    pub fn has_pole(&self) -> bool {
        self.min_exponent().is_some_and(|m| m < 0)
    }

    /// Compares on the common known window. The second component is false
    /// when the windows differ, which callers surface as a warning.
    pub fn common_window_eq(&self, other: &Self) -> (bool, bool) {
        let window = self.trunc.min(other.trunc);
        let eq = match window {
            Trunc::Exact => self.coeffs == other.coeffs,
            Trunc::UpTo(n) => {
                let a = self.coeffs.iter().filter(|(&e, _)| e <= n);
                let b = other.coeffs.iter().filter(|(&e, _)| e <= n);
                a.eq(b)
            }
        };
        (eq, self.trunc == other.trunc)
    }
}

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            write!(f, "0")?;
        } else {
            for (i, (e, c)) in self.coeffs.iter().enumerate() {
                if i > 0 {
                    write!(f, " + ")?;
                }
                match e {
                    0 => write!(f, "{}", rational_to_string(c))?,
                    1 => write!(f, "{}*eps", rational_to_string(c))?,
                    _ => write!(f, "{}*eps^{}", rational_to_string(c), e)?,
                }
            }
        }
        if let Trunc::UpTo(n) = self.trunc {
            write!(f, " + O(eps^{})", n + 1)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foundations::{rat, rat_int};

    fn eps(e: i64) -> LaurentSeries {
        LaurentSeries::monomial(e, rat_int(1))
    }

    #[test]
    fn arithmetic_prunes_zeros() {
        let a = eps(-1).add(&eps(2));
        let b = eps(-1).neg();
        let sum = a.add(&b);
        assert_eq!(sum, eps(2));
        assert_eq!(sum.min_exponent(), Some(2));
        assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn multiplication_is_exact_on_polynomials() {
        // (eps^-1 + 1)^2 = eps^-2 + 2 eps^-1 + 1
        let x = eps(-1).add(&eps(0));
        let sq = x.mul(&x);
        assert_eq!(sq.coeff(-2), Some(rat_int(1)));
        assert_eq!(sq.coeff(-1), Some(rat_int(2)));
        assert_eq!(sq.coeff(0), Some(rat_int(1)));
        assert_eq!(sq.trunc(), Trunc::Exact);
    }

    #[test]
    fn truncation_narrows_under_products() {
        let known_to_3 = eps(-1).add(&eps(1)).with_trunc(Trunc::UpTo(3));
        let exact = eps(-2).add(&eps(0));
        let prod = known_to_3.mul(&exact);
        // lowest term of the exact factor is eps^-2, so the product is known to 3 + (-2)
        assert_eq!(prod.trunc(), Trunc::UpTo(1));
        assert_eq!(prod.coeff(-3), Some(rat_int(1)));
        assert_eq!(prod.coeff(2), None);

        let sum = known_to_3.add(&exact);
        assert_eq!(sum.trunc(), Trunc::UpTo(3));
    }

    #[test]
    fn with_trunc_discards_unknown_terms() {
        let s = eps(-1).add(&eps(4)).with_trunc(Trunc::UpTo(2));
        assert_eq!(s.coeff(-1), Some(rat_int(1)));
        assert_eq!(s.coeff(4), None);
        assert_eq!(s.max_exponent(), Some(-1));
    }

    #[test]
    fn pole_projection() {
        let s = eps(-1).add(&eps(0).scalar_mul(&rat_int(2))).add(&eps(1));
        assert_eq!(s.pole_part(), eps(-1));
        assert_eq!(s.pole_part().pole_part(), s.pole_part());
        assert!(!s.regular_part().has_pole());
        assert_eq!(s.pole_part().add(&s.regular_part()), s);
    }

    #[test]
    fn common_window_comparison() {
        let a = eps(0).with_trunc(Trunc::UpTo(1));
        let b = eps(0).add(&eps(2)); // exact
        let (eq, same_window) = a.common_window_eq(&b);
        assert!(eq, "they agree up to eps^1");
        assert!(!same_window);
        let (eq2, _) = b.common_window_eq(&b);
        assert!(eq2);
    }

    #[test]
    fn display_renders_rationals() {
        let s = LaurentSeries::from_terms([(-1, rat_int(1)), (0, rat(1, 2))]);
        assert_eq!(s.to_string(), "1*eps^-1 + 1/2");
    }
}
