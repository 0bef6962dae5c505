//! The abstract Rota-Baxter algebra interface and everything derived from
//! the Rota-Baxter relation alone: the double product, the left and right
//! pre-Lie products, iterated pre-Lie words, iterated brackets, the relation
//! checker and weight rescaling.

pub mod term;

use crate::foundations::Rational;
use num_traits::Zero;

/// A Rota-Baxter algebra of weight `θ`: an associative algebra with a linear
/// operator `R` satisfying `R(x)R(y) = R(R(x)y + xR(y) + θxy)`. The relation
/// is never assumed — [`check_rb`] recomputes its residual on demand.
pub trait RBAlgebra {
    type Elem: Clone + PartialEq + std::fmt::Debug + Send + Sync;

    fn weight(&self) -> Rational;
    fn is_commutative(&self) -> bool;
    fn zero(&self) -> Self::Elem;
    /// Multiplicative unit, for unital models only.
    fn unit(&self) -> Option<Self::Elem>;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn scalar_mul(&self, c: &Rational, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn apply_r(&self, a: &Self::Elem) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    /// Plain-text rendering used by reports.
    fn render(&self, a: &Self::Elem) -> String;
}

/// `R̃ = −θ·id − R`, a Rota-Baxter operator of the same weight.
pub fn tilde_r<H: RBAlgebra>(h: &H, x: &H::Elem) -> H::Elem {
    let theta = h.weight();
    h.sub(&h.scalar_mul(&-theta, x), &h.apply_r(x))
}

/// Residual of the Rota-Baxter relation on `(x, y)`:
/// `R(x)R(y) − R(R(x)y + xR(y) + θxy)`. Zero iff the relation holds there.
pub fn check_rb<H: RBAlgebra>(h: &H, x: &H::Elem, y: &H::Elem) -> H::Elem {
    let lhs = h.mul(&h.apply_r(x), &h.apply_r(y));
    let rhs = h.apply_r(&double_product(h, x, y));
    h.sub(&lhs, &rhs)
}

/// The double product `x ∗_θ y = R(x)y + xR(y) + θxy`.
pub fn double_product<H: RBAlgebra>(h: &H, x: &H::Elem, y: &H::Elem) -> H::Elem {
    let mut out = h.mul(&h.apply_r(x), y);
    out = h.add(&out, &h.mul(x, &h.apply_r(y)));
    let theta = h.weight();
    if !theta.is_zero() {
        out = h.add(&out, &h.scalar_mul(&theta, &h.mul(x, y)));
    }
    out
}

/// Left pre-Lie product `a ▷_θ b = R(a)b − bR(a) − θba`.
pub fn pre_lie_left<H: RBAlgebra>(h: &H, a: &H::Elem, b: &H::Elem) -> H::Elem {
    let ra = h.apply_r(a);
    let mut out = h.sub(&h.mul(&ra, b), &h.mul(b, &ra));
    let theta = h.weight();
    if !theta.is_zero() {
        out = h.sub(&out, &h.scalar_mul(&theta, &h.mul(b, a)));
    }
    out
}

/// Right pre-Lie product `a ◁_θ b = aR(b) − R(b)a − θba`.
pub fn pre_lie_right<H: RBAlgebra>(h: &H, a: &H::Elem, b: &H::Elem) -> H::Elem {
    let rb = h.apply_r(b);
    let mut out = h.sub(&h.mul(a, &rb), &h.mul(&rb, a));
    let theta = h.weight();
    if !theta.is_zero() {
        out = h.sub(&out, &h.scalar_mul(&theta, &h.mul(b, a)));
    }
    out
}

/// Left-folded pre-Lie word `𝔩^{(n)}(a₁,…,aₙ) = (((a₁▷a₂)▷a₃)⋯)▷aₙ`.
/// Panics on an empty argument list.
pub fn iterated_left_word<H: RBAlgebra>(h: &H, args: &[H::Elem]) -> H::Elem {
    assert!(!args.is_empty(), "pre-Lie words need at least one argument");
    let mut acc = args[0].clone();
    for a in &args[1..] {
        acc = pre_lie_left(h, &acc, a);
    }
    acc
}

/// Right-folded pre-Lie word `𝔯^{(n)}(a₁,…,aₙ) = a₁◁(a₂◁(⋯◁aₙ))`.
pub fn iterated_right_word<H: RBAlgebra>(h: &H, args: &[H::Elem]) -> H::Elem {
    assert!(!args.is_empty(), "pre-Lie words need at least one argument");
    let mut acc = args[args.len() - 1].clone();
    for a in args[..args.len() - 1].iter().rev() {
        acc = pre_lie_right(h, a, &acc);
    }
    acc
}

/// Single-argument power `𝔩^{(n)}(a)`.
pub fn pre_lie_power_left<H: RBAlgebra>(h: &H, a: &H::Elem, n: usize) -> H::Elem {
    assert!(n >= 1);
    let mut acc = a.clone();
    for _ in 1..n {
        acc = pre_lie_left(h, &acc, a);
    }
    acc
}

/// Single-argument power `𝔯^{(n)}(a)`.
pub fn pre_lie_power_right<H: RBAlgebra>(h: &H, a: &H::Elem, n: usize) -> H::Elem {
    assert!(n >= 1);
    let mut acc = a.clone();
    for _ in 1..n {
        acc = pre_lie_right(h, a, &acc);
    }
    acc
}

/// `𝔏^{(n)}(a) = R(𝔩^{(n)}(a))`.
pub fn cap_l<H: RBAlgebra>(h: &H, a: &H::Elem, n: usize) -> H::Elem {
    h.apply_r(&pre_lie_power_left(h, a, n))
}

/// `ℜ^{(n)}(a) = R(𝔯^{(n)}(a))`.
pub fn cap_r<H: RBAlgebra>(h: &H, a: &H::Elem, n: usize) -> H::Elem {
    h.apply_r(&pre_lie_power_right(h, a, n))
}

/// Left iterated bracket `(Ra)^{[n]}`: `(Ra)^{[0]} = 1`,
/// `(Ra)^{[n+1]} = R((Ra)^{[n]} a)`. Requires a unital model for `n = 0`.
pub fn bracket_left<H: RBAlgebra>(h: &H, a: &H::Elem, n: usize) -> H::Elem {
    if n == 0 {
        return h.unit().expect("(Ra)^[0] needs a unital model");
    }
    let mut acc = h.apply_r(a);
    for _ in 1..n {
        acc = h.apply_r(&h.mul(&acc, a));
    }
    acc
}

/// Right iterated bracket `(Ra)^{{n}}`: `(Ra)^{{n+1}} = R(a (Ra)^{{n}})`.
pub fn bracket_right<H: RBAlgebra>(h: &H, a: &H::Elem, n: usize) -> H::Elem {
    if n == 0 {
        return h.unit().expect("(Ra)^{0} needs a unital model");
    }
    let mut acc = h.apply_r(a);
    for _ in 1..n {
        acc = h.apply_r(&h.mul(a, &acc));
    }
    acc
}

/// Right iterated bracket built with `R̃` instead of `R`, as it appears in
/// the second Atkinson series.
pub fn bracket_right_tilde<H: RBAlgebra>(h: &H, a: &H::Elem, n: usize) -> H::Elem {
    if n == 0 {
        return h.unit().expect("(R̃a)^{0} needs a unital model");
    }
    let mut acc = tilde_r(h, a);
    for _ in 1..n {
        acc = tilde_r(h, &h.mul(a, &acc));
    }
    acc
}

/// The same algebra with `R` replaced by `μ·R`; the weight becomes `μθ`.
#[derive(Debug, Clone)]
pub struct Rescaled<H> {
    inner: H,
    mu: Rational,
}

impl<H: RBAlgebra> Rescaled<H> {
    pub fn new(inner: H, mu: Rational) -> Self {
        Rescaled { inner, mu }
    }

    pub fn inner(&self) -> &H {
        &self.inner
    }
}

impl<H: RBAlgebra> RBAlgebra for Rescaled<H> {
    type Elem = H::Elem;

    fn weight(&self) -> Rational {
        &self.mu * self.inner.weight()
    }
    fn is_commutative(&self) -> bool {
        self.inner.is_commutative()
    }
    fn zero(&self) -> Self::Elem {
        self.inner.zero()
    }
    fn unit(&self) -> Option<Self::Elem> {
        self.inner.unit()
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.inner.add(a, b)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        self.inner.neg(a)
    }
    fn scalar_mul(&self, c: &Rational, a: &Self::Elem) -> Self::Elem {
        self.inner.scalar_mul(c, a)
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.inner.mul(a, b)
    }
    fn apply_r(&self, a: &Self::Elem) -> Self::Elem {
        self.inner.scalar_mul(&self.mu, &self.inner.apply_r(a))
    }
    fn render(&self, a: &Self::Elem) -> String {
        self.inner.render(a)
    }
}

/// The double Rota-Baxter algebra: the same space with the product `∗_θ`
/// and the same operator `R`. It is non-unital even when the base is.
#[derive(Debug, Clone)]
pub struct DoubleProductAlgebra<H>(pub H);

impl<H: RBAlgebra> RBAlgebra for DoubleProductAlgebra<H> {
    type Elem = H::Elem;

    fn weight(&self) -> Rational {
        self.0.weight()
    }
    fn is_commutative(&self) -> bool {
        self.0.is_commutative()
    }
    fn zero(&self) -> Self::Elem {
        self.0.zero()
    }
    fn unit(&self) -> Option<Self::Elem> {
        None
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.0.add(a, b)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        self.0.neg(a)
    }
    fn scalar_mul(&self, c: &Rational, a: &Self::Elem) -> Self::Elem {
        self.0.scalar_mul(c, a)
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        double_product(&self.0, a, b)
    }
    fn apply_r(&self, a: &Self::Elem) -> Self::Elem {
        self.0.apply_r(a)
    }
    fn render(&self, a: &Self::Elem) -> String {
        self.0.render(a)
    }
}

/// Associator `(x·y)·z − x·(y·z)` of the model product.
pub fn associator<H: RBAlgebra>(h: &H, x: &H::Elem, y: &H::Elem, z: &H::Elem) -> H::Elem {
    h.sub(&h.mul(&h.mul(x, y), z), &h.mul(x, &h.mul(y, z)))
}

/// Associator of the left pre-Lie product.
pub fn associator_pre_lie_left<H: RBAlgebra>(
    h: &H,
    x: &H::Elem,
    y: &H::Elem,
    z: &H::Elem,
) -> H::Elem {
    h.sub(
        &pre_lie_left(h, &pre_lie_left(h, x, y), z),
        &pre_lie_left(h, x, &pre_lie_left(h, y, z)),
    )
}

/// Associator of the right pre-Lie product.
pub fn associator_pre_lie_right<H: RBAlgebra>(
    h: &H,
    x: &H::Elem,
    y: &H::Elem,
    z: &H::Elem,
) -> H::Elem {
    h.sub(
        &pre_lie_right(h, &pre_lie_right(h, x, y), z),
        &pre_lie_right(h, x, &pre_lie_right(h, y, z)),
    )
}

/// Commutator `[x, y] = xy − yx` of the model product.
pub fn commutator<H: RBAlgebra>(h: &H, x: &H::Elem, y: &H::Elem) -> H::Elem {
    h.sub(&h.mul(x, y), &h.mul(y, x))
}
