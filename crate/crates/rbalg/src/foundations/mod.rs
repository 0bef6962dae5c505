//! Exact scalar arithmetic and the combinatorial layer: permutations,
//! compositions, set partitions, descent statistics, Bernoulli fractions and
//! the `ω` weights that drive every identity in the crate.

mod combin;
mod laurent;

pub use combin::{
    bar_sets, bernoulli_fraction, compositions, cycle_type, descent_count, omega_composition,
    omega_refined, omega_symmetrization_check, ordered_set_partitions, permutations, refines,
    set_partitions, simplex_monomial_integral, Composition, OrderedSetPartition, Permutation,
    SetPartition,
};
pub use laurent::{LaurentSeries, Trunc};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Exact scalar type of the whole crate: arbitrary-precision rationals,
/// always in reduced form with positive denominator.
pub type Rational = num_rational::BigRational;

/// Rational from an integer pair. Panics on zero denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Rational from an integer.
pub fn rat_int(num: i64) -> Rational {
    Rational::from_integer(BigInt::from(num))
}

/// Exact factorial as a rational.
pub fn factorial(n: usize) -> Rational {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    Rational::from_integer(acc)
}

/// Exact binomial coefficient `C(n, k)` as a rational.
pub fn binomial(n: usize, k: usize) -> Rational {
    if k > n {
        return Rational::zero();
    }
    let k = k.min(n - k);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for j in 0..k {
        num *= BigInt::from(n - j);
        den *= BigInt::from(j + 1);
    }
    Rational::new(num, den)
}

/// Renders a rational as `p` or `p/q`, the format used in all JSON output.
pub fn rational_to_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p`, `-p`, or `p/q` into a rational. `q` must be nonzero.
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    let s = s.trim();
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num_str
        .parse()
        .map_err(|_| ParseRationalError::BadInteger(num_str.to_string()))?;
    let den: BigInt = den_str
        .parse()
        .map_err(|_| ParseRationalError::BadInteger(den_str.to_string()))?;
    if den.is_zero() {
        return Err(ParseRationalError::ZeroDenominator);
    }
    Ok(Rational::new(num, den))
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ParseRationalError {
    #[error("invalid integer literal `{0}`")]
    BadInteger(String),
    #[error("zero denominator")]
    ZeroDenominator,
}

/// `(-1)^k` as a rational.
pub fn sign_pow(k: usize) -> Rational {
    if k % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Exact integer power of a rational (exponent may be negative).
pub fn rat_pow(base: &Rational, exp: i64) -> Rational {
    if exp >= 0 {
        base.pow(exp as i32)
    } else {
        assert!(!base.is_zero(), "zero to a negative power");
        base.pow(exp as i32)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_round_trip() {
        assert_eq!(parse_rational("3/4").unwrap(), rat(3, 4));
        assert_eq!(parse_rational("-7").unwrap(), rat_int(-7));
        assert_eq!(parse_rational(" 2 / -6 ").unwrap(), rat(-1, 3));
        assert_eq!(rational_to_string(&rat(-1, 3)), "-1/3");
        assert_eq!(rational_to_string(&rat(8, 4)), "2");
        assert!(matches!(
            parse_rational("1/0"),
            Err(ParseRationalError::ZeroDenominator)
        ));
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn binomial_and_factorial() {
        assert_eq!(factorial(5), rat_int(120));
        assert_eq!(binomial(7, 3), rat_int(35));
        assert_eq!(binomial(3, 5), rat_int(0));
        assert_eq!(binomial(6, 0), rat_int(1));
    }
}
