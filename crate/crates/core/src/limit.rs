//! The tower `L(F^1) ⊂ L(F^2) ⊂ L(F^4) ⊂ ...` glued along the doubling
//! embedding `U ↦ U ⊕ U`, its normalized dimension and metric, and the
//! realification embedding `L(Q(i)^k) → L(Q^2k)`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Field, Gaussian, Rational};
use crate::lattice::Ortholattice;
use crate::matrix::Matrix;
use crate::random::Sampler;
use crate::subspace::Subspace;

/// Highest level handled by enumeration (ambient dimension 16).
pub const MAX_LEVEL: u32 = 4;

/// An element of the direct limit: a subspace of `F^(2^level)`.
///
/// Equality identifies an element with all of its doublings.
#[derive(Clone)]
pub struct LimitElement<F> {
    level: u32,
    space: Subspace<F>,
}

/// Normalized dimension `r / 2^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DyadicDim {
    pub numerator: u64,
    pub level: u32,
}

impl DyadicDim {
    pub fn new(numerator: u64, level: u32) -> Self {
        DyadicDim { numerator, level }
    }

    /// Lowest terms: odd numerator or level 0.
    pub fn reduced(self) -> Self {
        let mut r = self;
        while r.level > 0 && r.numerator.is_multiple_of(2) {
            r.numerator /= 2;
            r.level -= 1;
        }
        r
    }

    pub fn value(&self) -> Rational {
        Rational::new(BigInt::from(self.numerator), BigInt::one() << self.level)
    }

    /// The `r/2^n` form, unreduced.
    pub fn power_form(&self) -> String {
        format!("{}/2^{}", self.numerator, self.level)
    }

    /// Lowest terms as a fraction, e.g. `3/8`, `1/2`, `1`.
    pub fn lowest_terms(&self) -> String {
        self.value().to_string()
    }
}

impl PartialEq<Rational> for DyadicDim {
    fn eq(&self, other: &Rational) -> bool {
        self.value() == *other
    }
}

impl<F: Field> LimitElement<F> {
    pub fn new(level: u32, space: Subspace<F>) -> Result<Self> {
        let expected = ambient_at(level)?;
        if space.ambient() != expected {
            return Err(Error::AmbientMismatch { left: expected, right: space.ambient() });
        }
        Ok(LimitElement { level, space })
    }

    pub fn zero() -> Self {
        LimitElement { level: 0, space: Subspace::zero(1) }
    }

    pub fn one() -> Self {
        LimitElement { level: 0, space: Subspace::full(1) }
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn space(&self) -> &Subspace<F> {
        &self.space
    }

    /// `U ↦ U ⊕ U = {(u, v) : u, v ∈ U}` one level up.
    pub fn double(&self) -> Self {
        let m = self.space.ambient();
        let b = self.space.basis();
        let left = b.hstack(&Matrix::zeros(b.rows(), m));
        let right = Matrix::zeros(b.rows(), m).hstack(b);
        LimitElement { level: self.level + 1, space: Subspace::span(2 * m, &left.vstack(&right)) }
    }

    /// Iterated doubling up to level `m`.
    pub fn lift_to(&self, m: u32) -> Result<Self> {
        if m < self.level {
            return Err(Error::InvalidArgument(format!(
                "cannot lift a level-{} element down to level {m}",
                self.level
            )));
        }
        let mut x = self.clone();
        while x.level < m {
            x = x.double();
        }
        Ok(x)
    }

    /// The representative at the lowest level it is the doubling image from.
    pub fn reduce(&self) -> Self {
        let mut x = self.clone();
        while x.level > 0 {
            let half = x.space.ambient() / 2;
            // W = {u : (u, 0) ∈ U}; U is a doubling iff U = W ⊕ W.
            let first_half = Subspace::span(
                x.space.ambient(),
                &Matrix::identity(half).hstack(&Matrix::zeros(half, half)),
            );
            let w_rows = x.space.meet(&first_half).basis().select_columns(&(0..half).collect::<Vec<_>>());
            let w = LimitElement { level: x.level - 1, space: Subspace::span(half, &w_rows) };
            if w.double().space != x.space {
                break;
            }
            x = w;
        }
        x
    }

    fn common(&self, other: &Self) -> (Self, Self) {
        let m = self.level.max(other.level);
        (self.lift_to(m).expect("m >= level"), other.lift_to(m).expect("m >= level"))
    }

    pub fn meet(&self, other: &Self) -> Self {
        let (a, b) = self.common(other);
        LimitElement { level: a.level, space: a.space.meet(&b.space) }
    }

    pub fn join(&self, other: &Self) -> Self {
        let (a, b) = self.common(other);
        LimitElement { level: a.level, space: a.space.join(&b.space) }
    }

    pub fn ortho(&self) -> Self {
        LimitElement { level: self.level, space: self.space.ortho() }
    }

    pub fn leq(&self, other: &Self) -> bool {
        let (a, b) = self.common(other);
        a.space.leq(&b.space)
    }

    /// Normalized dimension `dim / 2^level`.
    pub fn delta(&self) -> DyadicDim {
        DyadicDim::new(self.space.dim() as u64, self.level)
    }
}

fn ambient_at(level: u32) -> Result<usize> {
    1usize
        .checked_shl(level)
        .filter(|_| level < usize::BITS - 1)
        .ok_or_else(|| Error::InvalidArgument(format!("level {level} is too large")))
}

impl<F: Field> PartialEq for LimitElement<F> {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = self.common(other);
        a.space == b.space
    }
}

impl<F: Field> Eq for LimitElement<F> {}

impl<F: Field> fmt::Debug for LimitElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L{}:{:?}", self.level, self.space)
    }
}

/// `d(x, y) = δ(x ∨ y) − δ(x ∧ y)`.
pub fn metric<F: Field>(x: &LimitElement<F>, y: &LimitElement<F>) -> Rational {
    x.join(y).delta().value() - x.meet(y).delta().value()
}

/// `L_∞(F)` as an [`Ortholattice`].
#[derive(Debug, Clone, Copy, Default)]
pub struct LimitLattice<F>(std::marker::PhantomData<F>);

impl<F: Field> LimitLattice<F> {
    pub fn new() -> Self {
        LimitLattice(std::marker::PhantomData)
    }
}

impl<F: Field> Ortholattice for LimitLattice<F> {
    type Elem = LimitElement<F>;

    fn zero(&self) -> LimitElement<F> {
        LimitElement::zero()
    }
    fn one(&self) -> LimitElement<F> {
        LimitElement::one()
    }
    fn meet(&self, a: &LimitElement<F>, b: &LimitElement<F>) -> LimitElement<F> {
        a.meet(b)
    }
    fn join(&self, a: &LimitElement<F>, b: &LimitElement<F>) -> LimitElement<F> {
        a.join(b)
    }
    fn ortho(&self, a: &LimitElement<F>) -> LimitElement<F> {
        a.ortho()
    }
    fn leq(&self, a: &LimitElement<F>, b: &LimitElement<F>) -> bool {
        a.leq(b)
    }
}

/// Deterministic prefix of the dyadic test set at one level: the `2^(2^n)`
/// coordinate subspaces by bitmask (bit `i` selects `e_{i+1}`), followed by
/// `samples` seeded pseudo-random subspaces.
pub fn testset_enumerate<F: Field>(
    level: u32,
    samples: usize,
    seed: u64,
) -> Result<impl Iterator<Item = LimitElement<F>>> {
    if level > MAX_LEVEL {
        return Err(Error::InvalidArgument(format!("enumeration level {level} exceeds {MAX_LEVEL}")));
    }
    let m = ambient_at(level)?;
    let coordinate = (0u64..1 << m).map(move |mask| {
        let rows: Vec<Vec<F>> = (0..m)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| (0..m).map(|j| if i == j { F::one() } else { F::zero() }).collect())
            .collect();
        let space = Subspace::from_vectors(m, rows).expect("unit vectors");
        LimitElement { level, space }
    });
    let mut sampler = Sampler::<F>::new(seed);
    let random = (0..samples).map(move |_| LimitElement { level, space: sampler.subspace(m) });
    Ok(coordinate.chain(random))
}

/// Realification `L(Q(i)^k) → L(Q^2k)`: coordinate `a + b·i` becomes the pair
/// `(a, b)`, and each basis vector `v` contributes the images of `v` and
/// `i·v`. The real dot product of images is the real part of the Hermitian
/// form, so orthocomplements are preserved.
pub fn realify(u: &Subspace<Gaussian>) -> Subspace<Rational> {
    let k = u.ambient();
    let mut rows = Vec::with_capacity(2 * u.dim());
    for v in u.basis().row_vecs() {
        for w in [v.clone(), v.iter().map(|x| x.mul(&Gaussian::i())).collect()] {
            let mut real = Vec::with_capacity(2 * k);
            for x in &w {
                real.push(x.re.clone());
                real.push(x.im.clone());
            }
            rows.push(real);
        }
    }
    Subspace::from_vectors(2 * k, rows).expect("interleaved rows")
}

/// Whether every coordinate of the basis is real (the subspace is defined
/// over `Q`).
pub fn is_real_subspace(u: &Subspace<Gaussian>) -> bool {
    u.basis().row_vecs().iter().flatten().all(|x| Zero::is_zero(&x.im))
}
