//! Permutations, compositions, set partitions and the weight functions
//! attached to them. All enumerations are in a fixed lexicographic order so
//! reports diff cleanly; the identity checkers themselves never depend on
//! the order.

use super::{rat_int, Rational};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::sync::Mutex;

/// A permutation of `{1, …, n}`, stored as its sequence of values.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    values: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from its one-line notation; checks bijectivity.
    pub fn new(values: Vec<usize>) -> Result<Self, InvalidPermutation> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v > n || seen[v] {
                return Err(InvalidPermutation { values });
            }
            seen[v] = true;
        }
        Ok(Permutation { values })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            values: (1..=n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Value `σ(i)` with `i` 1-indexed.
    pub fn at(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
#[error("not a permutation of 1..n: {values:?}")]
pub struct InvalidPermutation {
    values: Vec<usize>,
}

/// A composition of a positive integer: a nonempty sequence of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self, InvalidComposition> {
        if parts.is_empty() || parts.iter().any(|&p| p == 0) {
            return Err(InvalidComposition { parts });
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Total weight `|I|`.
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Length `ℓ(I)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
#[error("not a composition (empty or zero part): {parts:?}")]
pub struct InvalidComposition {
    parts: Vec<usize>,
}

/// An ordered set partition of `{1, …, n}`: a sequence of disjoint nonempty
/// blocks covering it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedSetPartition {
    blocks: Vec<Vec<usize>>,
}

impl OrderedSetPartition {
    pub fn new(blocks: Vec<Vec<usize>>, n: usize) -> Result<Self, InvalidPartition> {
        validate_blocks(&blocks, n)?;
        Ok(OrderedSetPartition { blocks })
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Block sizes in order, as a composition of `n`.
    pub fn block_sizes(&self) -> Composition {
        Composition::new(self.blocks.iter().map(|b| b.len()).collect())
            .expect("blocks are nonempty")
    }
}

/// An unordered set partition of `{1, …, n}`; blocks are kept sorted by their
/// minimum so equality is structural.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetPartition {
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    pub fn new(mut blocks: Vec<Vec<usize>>, n: usize) -> Result<Self, InvalidPartition> {
        validate_blocks(&blocks, n)?;
        blocks.sort_by_key(|b| b[0]);
        Ok(SetPartition { blocks })
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
#[error("blocks do not partition 1..{n}: {blocks:?}")]
pub struct InvalidPartition {
    blocks: Vec<Vec<usize>>,
    n: usize,
}

fn validate_blocks(blocks: &[Vec<usize>], n: usize) -> Result<(), InvalidPartition> {
    let mut seen = vec![false; n + 1];
    let mut count = 0usize;
    for b in blocks {
        if b.is_empty() {
            return Err(InvalidPartition {
                blocks: blocks.to_vec(),
                n,
            });
        }
        for &v in b {
            if v == 0 || v > n || seen[v] {
                return Err(InvalidPartition {
                    blocks: blocks.to_vec(),
                    n,
                });
            }
            seen[v] = true;
            count += 1;
        }
    }
    if count != n {
        return Err(InvalidPartition {
            blocks: blocks.to_vec(),
            n,
        });
    }
    Ok(())
}

/// All permutations of `{1, …, n}` in lexicographic order of one-line
/// notation. `permutations(0)` yields the single empty permutation.
pub fn permutations(n: usize) -> impl Iterator<Item = Permutation> {
    let mut current: Option<Vec<usize>> = Some((1..=n).collect());
    std::iter::from_fn(move || {
        let out = current.clone()?;
        current = next_permutation(out.clone());
        Some(Permutation { values: out })
    })
}

fn next_permutation(mut v: Vec<usize>) -> Option<Vec<usize>> {
    let n = v.len();
    if n < 2 {
        return None;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return None;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    Some(v)
}

/// All compositions of `n ≥ 1` in lexicographic order of their part lists.
pub fn compositions(n: usize) -> impl Iterator<Item = Composition> {
    assert!(n >= 1, "compositions are defined for n >= 1");
    let mut stack: Vec<(Vec<usize>, usize)> = vec![(Vec::new(), n)];
    std::iter::from_fn(move || loop {
        let (prefix, rest) = stack.pop()?;
        if rest == 0 {
            return Some(Composition { parts: prefix });
        }
        // push largest next part first so the smallest is popped first
        for part in (1..=rest).rev() {
            let mut p = prefix.clone();
            p.push(part);
            stack.push((p, rest - part));
        }
    })
}

/// All ordered set partitions of `{1, …, n}`: for each block count `k`, the
/// surjections `[n] → [k]` in lexicographic order of their value sequences.
pub fn ordered_set_partitions(n: usize) -> impl Iterator<Item = OrderedSetPartition> {
    let mut k = 1usize;
    let mut surjections: Vec<Vec<usize>> = if n == 0 { Vec::new() } else { surjections_onto(n, 1) };
    let mut idx = 0usize;
    let mut emitted_empty = false;
    std::iter::from_fn(move || loop {
        if n == 0 {
            if emitted_empty {
                return None;
            }
            emitted_empty = true;
            return Some(OrderedSetPartition { blocks: Vec::new() });
        }
        if idx < surjections.len() {
            let f = &surjections[idx];
            idx += 1;
            let mut blocks = vec![Vec::new(); k];
            for (i, &v) in f.iter().enumerate() {
                blocks[v - 1].push(i + 1);
            }
            return Some(OrderedSetPartition { blocks });
        }
        k += 1;
        if k > n {
            return None;
        }
        surjections = surjections_onto(n, k);
        idx = 0;
    })
}

fn surjections_onto(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0usize; n];
    fn rec(cur: &mut Vec<usize>, pos: usize, n: usize, k: usize, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if pos == n {
            if used.iter().all(|&u| u) {
                out.push(cur.clone());
            }
            return;
        }
        // values with remaining positions must still be able to cover unused ones
        for v in 1..=k {
            cur[pos] = v;
            let fresh = !used[v - 1];
            used[v - 1] = true;
            let missing = used.iter().filter(|&&u| !u).count();
            if missing <= n - pos - 1 {
                rec(cur, pos + 1, n, k, used, out);
            }
            if fresh {
                used[v - 1] = false;
            }
        }
    }
    let mut used = vec![false; k];
    rec(&mut cur, 0, n, k, &mut used, &mut out);
    out
}

/// All set partitions of `{1, …, n}` via restricted growth strings in
/// lexicographic order. `set_partitions(0)` is empty.
pub fn set_partitions(n: usize) -> impl Iterator<Item = SetPartition> {
    let mut rgs: Option<Vec<usize>> = if n == 0 { None } else { Some(vec![1; n]) };
    let mut emitted_empty = false;
    std::iter::from_fn(move || {
        if n == 0 {
            if emitted_empty {
                return None;
            }
            emitted_empty = true;
            return Some(SetPartition { blocks: Vec::new() });
        }
        let cur = rgs.clone()?;
        let k = *cur.iter().max().unwrap();
        let mut blocks = vec![Vec::new(); k];
        for (i, &v) in cur.iter().enumerate() {
            blocks[v - 1].push(i + 1);
        }
        rgs = next_rgs(cur);
        Some(SetPartition { blocks })
    })
}

fn next_rgs(mut a: Vec<usize>) -> Option<Vec<usize>> {
    let n = a.len();
    // increment the last position that can grow (bounded by 1 + max of prefix)
    for i in (1..n).rev() {
        let cap = 1 + a[..i].iter().copied().max().unwrap();
        if a[i] < cap {
            a[i] += 1;
            for v in a.iter_mut().skip(i + 1) {
                *v = 1;
            }
            return Some(a);
        }
    }
    None
}

/// Number of descents of `σ`: positions `i < n` with `σ(i) > σ(i+1)`.
pub fn descent_count(sigma: &Permutation) -> usize {
    sigma
        .values()
        .windows(2)
        .filter(|w| w[0] > w[1])
        .count()
}

/// Cycle type of `σ` as a sorted (descending) list of cycle lengths; the
/// second component is the cycle count `k(σ)`.
pub fn cycle_type(sigma: &Permutation) -> (Vec<usize>, usize) {
    let n = sigma.len();
    let mut seen = vec![false; n + 1];
    let mut lengths = Vec::new();
    for start in 1..=n {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut cur = start;
        while !seen[cur] {
            seen[cur] = true;
            len += 1;
            cur = sigma.at(cur);
        }
        lengths.push(len);
    }
    lengths.sort_unstable_by(|a, b| b.cmp(a));
    let k = lengths.len();
    (lengths, k)
}

/// The bar sets of `σ`, both subsets of `{1, …, n−1}`:
/// `E_σ = {k : σ(k+1) > σ(j) for all j ≤ k}` and
/// `F_σ = {l : σ(l) < σ(j) for all j ≥ l+1}`.
pub fn bar_sets(sigma: &Permutation) -> (Vec<usize>, Vec<usize>) {
    let n = sigma.len();
    let mut e = Vec::new();
    let mut f = Vec::new();
    let mut prefix_max = 0usize;
    for k in 1..n {
        prefix_max = prefix_max.max(sigma.at(k));
        if sigma.at(k + 1) > prefix_max {
            e.push(k);
        }
    }
    let mut suffix_min = usize::MAX;
    for l in (1..n).rev() {
        suffix_min = suffix_min.min(sigma.at(l + 1));
        if sigma.at(l) < suffix_min {
            f.push(l);
        }
    }
    f.reverse();
    (e, f)
}

/// `ω(I) = 1 / (i₁ (i₁+i₂) ⋯ (i₁+⋯+i_k))`.
pub fn omega_composition(parts: &[usize]) -> Rational {
    assert!(!parts.is_empty() && parts.iter().all(|&p| p > 0));
    let mut acc = 0usize;
    let mut den = Rational::one();
    for &p in parts {
        acc += p;
        den *= rat_int(acc as i64);
    }
    den.recip()
}

/// Tests reversed refinement: true iff `J` is finer than `I`, that is the
/// parts of `J` group consecutively into the parts of `I`.
pub fn refines(finer: &Composition, coarser: &Composition) -> bool {
    block_decomposition(finer, coarser).is_some()
}

/// Splits the finer composition `J` into consecutive blocks whose weights
/// are the parts of `I`, or `None` if `J` does not refine `I`.
pub fn block_decomposition(finer: &Composition, coarser: &Composition) -> Option<Vec<Vec<usize>>> {
    let mut blocks = Vec::with_capacity(coarser.len());
    let mut it = finer.parts().iter().copied().peekable();
    for &target in coarser.parts() {
        let mut block = Vec::new();
        let mut sum = 0usize;
        while sum < target {
            let p = it.next()?;
            sum += p;
            block.push(p);
        }
        if sum != target {
            return None;
        }
        blocks.push(block);
    }
    if it.next().is_some() {
        return None;
    }
    Some(blocks)
}

/// `ω(J, I) = Π_k ω(J_k)` over the block decomposition of `J` along `I`.
/// Rejects pairs where `J` does not refine `I`.
pub fn omega_refined(finer: &Composition, coarser: &Composition) -> Result<Rational, NotARefinement> {
    let blocks = block_decomposition(finer, coarser).ok_or_else(|| NotARefinement {
        finer: finer.clone(),
        coarser: coarser.clone(),
    })?;
    Ok(blocks
        .iter()
        .map(|b| omega_composition(b))
        .fold(Rational::one(), |a, b| a * b))
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
#[error("{finer:?} does not refine {coarser:?}")]
pub struct NotARefinement {
    finer: Composition,
    coarser: Composition,
}

/// Exact value of the iterated integral
/// `∫₀¹ dt₁ ∫₀^{t₁} dt₂ ⋯ ∫₀^{t_{m−1}} dt_m  Π_j t_j^{e_j}`,
/// computed by monomial antiderivatives from the innermost variable out.
pub fn simplex_monomial_integral(exponents: &[usize]) -> Rational {
    let mut coeff = Rational::one();
    let mut power = 0usize;
    for &e in exponents.iter().rev() {
        let p = e + power;
        coeff /= rat_int((p + 1) as i64);
        power = p + 1;
    }
    coeff
}

/// Checks the symmetrization identity
/// `Σ_{σ∈S_k} ω((m_{σ(1)}, …, m_{σ(k)})) = Π_i 1/m_i` exactly.
pub fn omega_symmetrization_check(m: &[usize]) -> bool {
    assert!(!m.is_empty() && m.iter().all(|&v| v > 0));
    let k = m.len();
    let mut lhs = Rational::zero();
    for sigma in permutations(k) {
        let permuted: Vec<usize> = sigma.values().iter().map(|&j| m[j - 1]).collect();
        lhs += omega_composition(&permuted);
    }
    let rhs = m
        .iter()
        .map(|&v| rat_int(v as i64).recip())
        .fold(Rational::one(), |a, b| a * b);
    lhs == rhs
}

/// `b_n = B_n / n!` with `B_n` the Bernoulli numbers (`B_1 = -1/2`),
/// computed by the standard recurrence with memoization.
pub fn bernoulli_fraction(n: usize) -> Rational {
    static CACHE: Mutex<BTreeMap<usize, Rational>> = Mutex::new(BTreeMap::new());
    let mut cache = CACHE.lock().unwrap();
    if let Some(v) = cache.get(&n) {
        return v.clone();
    }
    // B_0 = 1; for m >= 1, sum_{j=0}^{m} C(m+1, j) B_j = 0.
    let mut bern: Vec<Rational> = vec![Rational::one()];
    for m in 1..=n {
        let mut acc = Rational::zero();
        for (j, bj) in bern.iter().enumerate() {
            acc += super::binomial(m + 1, j) * bj;
        }
        bern.push(-acc / super::binomial(m + 1, m));
    }
    for (m, b) in bern.iter().enumerate() {
        cache
            .entry(m)
            .or_insert_with(|| b / super::factorial(m));
    }
    cache[&n].clone()
}
