//! Symbolic Rota-Baxter terms over generators `Z1..Zn`: an expression tree
//! with products, `R(·)` applications and rational-weighted sums, a
//! rewriting engine that eliminates adjacent `R`-factors via the
//! Rota-Baxter relation, and a parser/printer for the CLI `expand` command.

use super::RBAlgebra;
use crate::foundations::{parse_rational, rational_to_string, Rational};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// A symbolic term. `Product(vec![])` is the unit.
#[derive(Debug, Clone, PartialEq)]
pub enum RBTerm {
    Gen(u32),
    R(Box<RBTerm>),
    Product(Vec<RBTerm>),
    Sum(Vec<(Rational, RBTerm)>),
}

impl RBTerm {
    pub fn gen(i: u32) -> Self {
        assert!(i >= 1, "generators are Z1, Z2, …");
        RBTerm::Gen(i)
    }

    pub fn r(t: RBTerm) -> Self {
        RBTerm::R(Box::new(t))
    }

    pub fn product(ts: Vec<RBTerm>) -> Self {
        RBTerm::Product(ts)
    }

    pub fn unit() -> Self {
        RBTerm::Product(Vec::new())
    }

    pub fn sum(parts: Vec<(Rational, RBTerm)>) -> Self {
        RBTerm::Sum(parts)
    }
}

/// A product of atomic factors; `R` children hold fully expanded sums.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Factor {
    Gen(u32),
    R(LinComb),
}

/// A flattened monomial.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct Monomial(pub Vec<Factor>);

/// A collected rational combination of monomials.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct LinComb(pub BTreeMap<Monomial, Rational>);

impl LinComb {
    pub fn zero() -> Self {
        LinComb::default()
    }

    fn single(m: Monomial, c: Rational) -> Self {
        let mut out = LinComb::zero();
        out.add_term(m, c);
        out
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.0.entry(m) {
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

    fn add(&self, other: &LinComb) -> LinComb {
        let mut out = self.clone();
        for (m, c) in &other.0 {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    fn scale(&self, c: &Rational) -> LinComb {
        if c.is_zero() {
            return LinComb::zero();
        }
        LinComb(self.0.iter().map(|(m, v)| (m.clone(), v * c)).collect())
    }

    fn mul(&self, other: &LinComb) -> LinComb {
        let mut out = LinComb::zero();
        for (m1, c1) in &self.0 {
            for (m2, c2) in &other.0 {
                let mut fac = m1.0.clone();
                fac.extend(m2.0.iter().cloned());
                out.add_term(Monomial(fac), c1 * c2);
            }
        }
        out
    }

    pub fn num_terms(&self) -> usize {
        self.0.len()
    }

    /// Back to an expression tree.
    pub fn to_term(&self) -> RBTerm {
        let parts = self
            .0
            .iter()
            .map(|(m, c)| {
                let factors: Vec<RBTerm> = m
                    .0
                    .iter()
                    .map(|f| match f {
                        Factor::Gen(i) => RBTerm::Gen(*i),
                        Factor::R(child) => RBTerm::r(child.to_term()),
                    })
                    .collect();
                (c.clone(), RBTerm::Product(factors))
            })
            .collect();
        RBTerm::Sum(parts)
    }
}

/// `true` when no monomial anywhere contains two adjacent `R`-factors.
pub fn is_elementary(lc: &LinComb) -> bool {
    lc.0.keys().all(monomial_elementary)
}

fn monomial_elementary(m: &Monomial) -> bool {
    for w in m.0.windows(2) {
        if matches!((&w[0], &w[1]), (Factor::R(_), Factor::R(_))) {
            return false;
        }
    }
    m.0.iter().all(|f| match f {
        Factor::Gen(_) => true,
        Factor::R(child) => is_elementary(child),
    })
}

/// Expands a term into a collected sum of monomials and rewrites every
/// adjacent pair `R(c)·R(d)` to `R(cR(d)) + R(R(c)d) + θR(cd)` until all
/// monomials are elementary. Each rewrite lowers the nesting weight of the
/// offending pair, so the loop terminates.
pub fn normal_form(t: &RBTerm, theta: &Rational) -> LinComb {
    let expanded = expand(t, theta);
    fix(expanded, theta)
}

fn expand(t: &RBTerm, theta: &Rational) -> LinComb {
    match t {
        RBTerm::Gen(i) => LinComb::single(Monomial(vec![Factor::Gen(*i)]), Rational::one()),
        RBTerm::R(child) => {
            let inner = normal_form(child, theta);
            LinComb::single(Monomial(vec![Factor::R(inner)]), Rational::one())
        }
        RBTerm::Product(fs) => {
            let mut acc = LinComb::single(Monomial::default(), Rational::one());
            for f in fs {
                acc = acc.mul(&expand(f, theta));
            }
            acc
        }
        RBTerm::Sum(parts) => {
            let mut acc = LinComb::zero();
            for (c, t) in parts {
                acc = acc.add(&expand(t, theta).scale(c));
            }
            acc
        }
    }
}

fn fix(mut lc: LinComb, theta: &Rational) -> LinComb {
    loop {
        let offending = lc.0.keys().find_map(|m| {
            m.0.windows(2)
                .position(|w| matches!((&w[0], &w[1]), (Factor::R(_), Factor::R(_))))
                .map(|pos| (m.clone(), pos))
        });
        let Some((mono, pos)) = offending else {
            return lc;
        };
        let coef = lc.0.remove(&mono).expect("monomial present");
        let (Factor::R(c), Factor::R(d)) = (&mono.0[pos], &mono.0[pos + 1]) else {
            unreachable!()
        };
        let prefix = &mono.0[..pos];
        let suffix = &mono.0[pos + 2..];

        let r_of = |inner: LinComb| Factor::R(fix(inner, theta));
        let rd = LinComb::single(Monomial(vec![Factor::R(c.clone())]), Rational::one());
        let rc_d = rd.mul(d); // R(c)·d
        let c_rd = c.mul(&LinComb::single(
            Monomial(vec![Factor::R(d.clone())]),
            Rational::one(),
        )); // c·R(d)
        let cd = c.mul(d);

        let mut replacements = vec![
            (Rational::one(), r_of(c_rd)),
            (Rational::one(), r_of(rc_d)),
        ];
        if !theta.is_zero() {
            replacements.push((theta.clone(), r_of(cd)));
        }
        for (w, factor) in replacements {
            let mut fs = prefix.to_vec();
            fs.push(factor);
            fs.extend_from_slice(suffix);
            lc.add_term(Monomial(fs), &coef * &w);
        }
    }
}

/// Structural interpretation of a term in a model, sending `Zi` through the
/// assignment. Empty products need a unital model.
pub fn eval_term<H: RBAlgebra>(
    t: &RBTerm,
    h: &H,
    assignment: &BTreeMap<u32, H::Elem>,
) -> Result<H::Elem, EvalError> {
    match t {
        RBTerm::Gen(i) => assignment
            .get(i)
            .cloned()
            .ok_or(EvalError::MissingAssignment(*i)),
        RBTerm::R(child) => Ok(h.apply_r(&eval_term(child, h, assignment)?)),
        RBTerm::Product(fs) => {
            if fs.is_empty() {
                return h.unit().ok_or(EvalError::NonUnitalModel);
            }
            let mut acc = eval_term(&fs[0], h, assignment)?;
            for f in &fs[1..] {
                acc = h.mul(&acc, &eval_term(f, h, assignment)?);
            }
            Ok(acc)
        }
        RBTerm::Sum(parts) => {
            let mut acc = h.zero();
            for (c, t) in parts {
                acc = h.add(&acc, &h.scalar_mul(c, &eval_term(t, h, assignment)?));
            }
            Ok(acc)
        }
    }
}

/// Evaluates a collected normal form directly.
pub fn eval_lincomb<H: RBAlgebra>(
    lc: &LinComb,
    h: &H,
    assignment: &BTreeMap<u32, H::Elem>,
) -> Result<H::Elem, EvalError> {
    eval_term(&lc.to_term(), h, assignment)
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum EvalError {
    #[error("no assignment for generator Z{0}")]
    MissingAssignment(u32),
    #[error("empty product needs a unital model")]
    NonUnitalModel,
}

impl fmt::Display for RBTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RBTerm::Gen(i) => write!(f, "Z{i}"),
            RBTerm::R(child) => write!(f, "R({child})"),
            RBTerm::Product(fs) => {
                if fs.is_empty() {
                    return write!(f, "1");
                }
                for (i, t) in fs.iter().enumerate() {
                    if i > 0 {
                        write!(f, "*")?;
                    }
                    match t {
                        RBTerm::Sum(_) | RBTerm::Product(_) if !matches!(t, RBTerm::Product(p) if p.len() == 1) => {
                            write!(f, "({t})")?
                        }
                        _ => write!(f, "{t}")?,
                    }
                }
                Ok(())
            }
            RBTerm::Sum(parts) => {
                if parts.is_empty() {
                    return write!(f, "0");
                }
                for (i, (c, t)) in parts.iter().enumerate() {
                    let neg = c < &Rational::zero();
                    let mag = if neg { -c } else { c.clone() };
                    if i == 0 {
                        if neg {
                            write!(f, "-")?;
                        }
                    } else if neg {
                        write!(f, " - ")?;
                    } else {
                        write!(f, " + ")?;
                    }
                    if mag.is_one() && !matches!(t, RBTerm::Product(p) if p.is_empty()) {
                        write!(f, "{t}")?;
                    } else if matches!(t, RBTerm::Product(p) if p.is_empty()) {
                        write!(f, "{}", rational_to_string(&mag))?;
                    } else {
                        write!(f, "{}*{}", rational_to_string(&mag), t)?;
                    }
                }
                Ok(())
            }
        }
    }
}

/// Parses the prefix syntax used by the CLI: generators `Z1..Zn`, `R(...)`,
/// `*` for products, `+`/`-` for sums, rational literals `p` or `p/q`, and
/// parentheses.
pub fn parse_term(input: &str) -> Result<RBTerm, ParseTermError> {
    let mut p = Parser {
        chars: input.chars().collect(),
        pos: 0,
    };
    let t = p.parse_expr()?;
    p.skip_ws();
    if p.pos != p.chars.len() {
        return Err(ParseTermError::TrailingInput(p.pos));
    }
    Ok(t)
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ParseTermError {
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("unexpected character `{0}` at offset {1}")]
    UnexpectedChar(char, usize),
    #[error("invalid number at offset {0}")]
    BadNumber(usize),
    #[error("trailing input at offset {0}")]
    TrailingInput(usize),
    #[error("generator index must be >= 1 at offset {0}")]
    BadGenerator(usize),
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        self.skip_ws();
        let c = self.chars.get(self.pos).copied();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn expect(&mut self, want: char) -> Result<(), ParseTermError> {
        match self.bump() {
            Some(c) if c == want => Ok(()),
            Some(c) => Err(ParseTermError::UnexpectedChar(c, self.pos - 1)),
            None => Err(ParseTermError::UnexpectedEnd),
        }
    }

    fn parse_expr(&mut self) -> Result<RBTerm, ParseTermError> {
        let mut parts: Vec<(Rational, RBTerm)> = Vec::new();
        let mut sign = Rational::one();
        if let Some(c) = self.peek() {
            if c == '-' {
                self.bump();
                sign = -sign;
            } else if c == '+' {
                self.bump();
            }
        }
        loop {
            let (coef, term) = self.parse_product()?;
            parts.push((sign.clone() * coef, term));
            match self.peek() {
                Some('+') => {
                    self.bump();
                    sign = Rational::one();
                }
                Some('-') => {
                    self.bump();
                    sign = -Rational::one();
                }
                _ => break,
            }
        }
        if parts.len() == 1 && parts[0].0.is_one() {
            Ok(parts.pop().map(|(_, t)| t).unwrap())
        } else {
            Ok(RBTerm::Sum(parts))
        }
    }

    fn parse_product(&mut self) -> Result<(Rational, RBTerm), ParseTermError> {
        let mut coef = Rational::one();
        let mut factors: Vec<RBTerm> = Vec::new();
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    coef *= self.parse_number()?;
                }
                Some('Z') => {
                    self.bump();
                    let start = self.pos;
                    let mut digits = String::new();
                    while let Some(c) = self.chars.get(self.pos).copied() {
                        if c.is_ascii_digit() {
                            digits.push(c);
                            self.pos += 1;
                        } else {
                            break;
                        }
                    }
                    let idx: u32 = digits
                        .parse()
                        .map_err(|_| ParseTermError::BadNumber(start))?;
                    if idx == 0 {
                        return Err(ParseTermError::BadGenerator(start));
                    }
                    factors.push(RBTerm::Gen(idx));
                }
                Some('R') => {
                    self.bump();
                    self.expect('(')?;
                    let inner = self.parse_expr()?;
                    self.expect(')')?;
                    factors.push(RBTerm::r(inner));
                }
                Some('(') => {
                    self.bump();
                    let inner = self.parse_expr()?;
                    self.expect(')')?;
                    factors.push(inner);
                }
                Some(c) => {
                    if factors.is_empty() && coef.is_one() {
                        return Err(ParseTermError::UnexpectedChar(c, self.pos));
                    }
                    break;
                }
                None => {
                    if factors.is_empty() && coef.is_one() {
                        return Err(ParseTermError::UnexpectedEnd);
                    }
                    break;
                }
            }
            if self.peek() == Some('*') {
                self.bump();
                continue;
            }
            // implicit products like `2 R(Z1)` or `Z1 Z2` are also accepted
            match self.peek() {
                Some(c) if c.is_ascii_digit() || c == 'Z' || c == 'R' || c == '(' => continue,
                _ => break,
            }
        }
        let term = match factors.len() {
            0 => RBTerm::unit(),
            1 => factors.pop().unwrap(),
            _ => RBTerm::Product(factors),
        };
        Ok((coef, term))
    }

    fn parse_number(&mut self) -> Result<Rational, ParseTermError> {
        self.skip_ws();
        let start = self.pos;
        let mut s = String::new();
        while let Some(c) = self.chars.get(self.pos).copied() {
            if c.is_ascii_digit() {
                s.push(c);
                self.pos += 1;
            } else {
                break;
            }
        }
        // optional /q
        let save = self.pos;
        self.skip_ws();
        if self.chars.get(self.pos) == Some(&'/') {
            self.pos += 1;
            self.skip_ws();
            let mut began = false;
            s.push('/');
            while let Some(c) = self.chars.get(self.pos).copied() {
                if c.is_ascii_digit() {
                    s.push(c);
                    self.pos += 1;
                    began = true;
                } else {
                    break;
                }
            }
            if !began {
                return Err(ParseTermError::BadNumber(start));
            }
        } else {
            self.pos = save;
        }
        parse_rational(&s).map_err(|_| ParseTermError::BadNumber(start))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foundations::{rat, rat_int};

    fn z(i: u32) -> RBTerm {
        RBTerm::gen(i)
    }

    #[test]
    fn already_elementary_terms_pass_through() {
        let theta = rat_int(1);
        let nf = normal_form(&z(1), &theta);
        assert_eq!(nf.num_terms(), 1);
        assert!(is_elementary(&nf));

        let t = RBTerm::product(vec![z(1), RBTerm::r(z(2)), z(1)]);
        let nf = normal_form(&t, &theta);
        assert_eq!(nf.num_terms(), 1);
        assert!(is_elementary(&nf));
    }

    #[test]
    fn rewrites_adjacent_r_factors() {
        // R(Z1)·R(Z1) -> R(Z1·R(Z1)) + R(R(Z1)·Z1) + θ·R(Z1·Z1)
        let theta = rat(5, 7);
        let t = RBTerm::product(vec![RBTerm::r(z(1)), RBTerm::r(z(1))]);
        let nf = normal_form(&t, &theta);
        assert!(is_elementary(&nf));
        assert_eq!(nf.num_terms(), 3);

        let expected = {
            let z1 = normal_form(&z(1), &theta);
            let r_z1 = LinComb::single(Monomial(vec![Factor::R(z1.clone())]), Rational::one());
            let z_rz = z1.mul(&r_z1);
            let rz_z = r_z1.mul(&z1);
            let zz = z1.mul(&z1);
            let mut lc = LinComb::zero();
            lc.add_term(Monomial(vec![Factor::R(z_rz)]), Rational::one());
            lc.add_term(Monomial(vec![Factor::R(rz_z)]), Rational::one());
            lc.add_term(Monomial(vec![Factor::R(zz)]), theta.clone());
            lc
        };
        assert_eq!(nf, expected);
    }

    #[test]
    fn weight_zero_drops_diagonal_term() {
        let t = RBTerm::product(vec![RBTerm::r(z(1)), RBTerm::r(z(1))]);
        let nf = normal_form(&t, &rat_int(0));
        assert_eq!(nf.num_terms(), 2);
        assert!(is_elementary(&nf));
    }

    #[test]
    fn triple_r_product_becomes_elementary() {
        let theta = rat_int(1);
        let t = RBTerm::product(vec![RBTerm::r(z(1)), RBTerm::r(z(1)), RBTerm::r(z(1))]);
        let nf = normal_form(&t, &theta);
        assert!(is_elementary(&nf));
        assert!(nf.num_terms() > 3);
    }

    #[test]
    fn parser_round_trips() {
        let cases = [
            "Z1",
            "R(Z1)",
            "R(R(Z1)*Z2)",
            "Z1*Z2 + Z2*Z1",
            "2*R(Z1) - 1/3*Z2",
            "R(Z1*R(Z2) + R(Z1)*Z2)",
        ];
        for src in cases {
            let t = parse_term(src).unwrap();
            let printed = t.to_string();
            let re = parse_term(&printed).unwrap();
            let theta = rat(1, 2);
            assert_eq!(
                normal_form(&t, &theta),
                normal_form(&re, &theta),
                "round trip through `{printed}` from `{src}`"
            );
        }
    }

    #[test]
    fn parser_rejects_garbage() {
        assert!(parse_term("").is_err());
        assert!(parse_term("Z0").is_err());
        assert!(parse_term("R(Z1").is_err());
        assert!(parse_term("Z1 +").is_err());
        assert!(parse_term("1/0").is_err());
        assert!(parse_term("Q5").is_err());
        assert!(parse_term("Z1)").is_err());
    }

    #[test]
    fn parses_spec_syntax() {
        let t = parse_term("R(R(Z1)*Z2) + R(R(Z2)*Z1)").unwrap();
        let theta = rat_int(1);
        let nf = normal_form(&t, &theta);
        assert_eq!(nf.num_terms(), 2);
        assert!(is_elementary(&nf));
    }

    mod eval {
        use super::*;
        use crate::rbmodels::{LaurentMsModel, MatrixPolyModel, Sample, SeqModel};
        use rand::{RngExt, SeedableRng};
        use rand_chacha::ChaCha12Rng;

        fn random_term(rng: &mut ChaCha12Rng, depth: usize, n_gens: u32) -> RBTerm {
            let choice = if depth == 0 {
                0
            } else {
                rng.random_range(0..6)
            };
            match choice {
                0 => RBTerm::Gen(rng.random_range(1..=n_gens)),
                1 | 2 => RBTerm::r(random_term(rng, depth - 1, n_gens)),
                3 | 4 => {
                    let len = rng.random_range(1..=3);
                    RBTerm::Product((0..len).map(|_| random_term(rng, depth - 1, n_gens)).collect())
                }
                _ => {
                    let len = rng.random_range(1..=2);
                    RBTerm::Sum(
                        (0..len)
                            .map(|_| {
                                (rat_int(rng.random_range(-3i64..=3)), random_term(rng, depth - 1, n_gens))
                            })
                            .collect(),
                    )
                }
            }
        }

        fn invariance_in<H: crate::rbcore::RBAlgebra + Sample>(h: &H, seed: u64, rounds: usize) {
            let mut rng = ChaCha12Rng::seed_from_u64(seed);
            let theta = h.weight();
            for _ in 0..rounds {
                let t = random_term(&mut rng, 4, 3);
                let assignment: BTreeMap<u32, H::Elem> =
                    (1..=3).map(|i| (i, h.sample(&mut rng))).collect();
                let direct = eval_term(&t, h, &assignment).unwrap();
                let nf = normal_form(&t, &theta);
                assert!(is_elementary(&nf));
                let via_nf = eval_lincomb(&nf, h, &assignment).unwrap();
                assert_eq!(direct, via_nf, "normal form changed the value of {t}");
            }
        }

        #[test]
        fn normal_form_preserves_evaluation() {
            invariance_in(&SeqModel::new(4), 61, 40);
            invariance_in(&LaurentMsModel, 62, 40);
            invariance_in(&MatrixPolyModel::default(), 63, 20);
        }

        #[test]
        fn eval_examples() {
            let m = LaurentMsModel;
            let mut assignment = BTreeMap::new();
            assignment.insert(
                1u32,
                crate::foundations::LaurentSeries::monomial(-1, Rational::one())
                    .add(&crate::foundations::LaurentSeries::one()),
            );
            // R picks the pole part
            let t = RBTerm::r(z(1));
            assert_eq!(
                eval_term(&t, &m, &assignment).unwrap(),
                crate::foundations::LaurentSeries::monomial(-1, Rational::one())
            );
            // plain generator passes through
            assert_eq!(
                eval_term(&z(1), &m, &assignment).unwrap(),
                assignment[&1]
            );
            // missing assignments are reported
            assert_eq!(
                eval_term(&z(2), &m, &assignment),
                Err(EvalError::MissingAssignment(2))
            );
        }
    }
}
