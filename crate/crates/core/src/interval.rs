//! Intervals `[b, c]` of a subspace lattice with the relative
//! orthocomplement, and the coordinate isomorphism `[0, a] ≅ L(F^k)`.

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::field::{Field, Rational};
use crate::lattice::Ortholattice;
use crate::matrix::Matrix;
use crate::subspace::Subspace;

/// The interval `[b, c]`, a modular ortholattice under
/// `x ↦ (x' ∧ c) ∨ b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalLattice<F: Field> {
    bottom: Subspace<F>,
    top: Subspace<F>,
}

impl<F: Field> IntervalLattice<F> {
    pub fn new(bottom: Subspace<F>, top: Subspace<F>) -> Result<Self> {
        if bottom.ambient() != top.ambient() {
            return Err(Error::AmbientMismatch { left: bottom.ambient(), right: top.ambient() });
        }
        if !bottom.leq(&top) {
            return Err(Error::InvalidArgument("interval bottom is not below top".into()));
        }
        Ok(IntervalLattice { bottom, top })
    }

    pub fn bottom(&self) -> &Subspace<F> {
        &self.bottom
    }

    pub fn top(&self) -> &Subspace<F> {
        &self.top
    }

    /// `a = b' ∧ c`; `[b, c]` is isomorphic to `[0, a]`.
    pub fn lower_top(&self) -> Subspace<F> {
        self.bottom.ortho().meet(&self.top)
    }

    /// `x ↦ x ∧ b'`, an isomorphism `[b, c] → [0, b' ∧ c]`.
    pub fn to_lower(&self, x: &Subspace<F>) -> Subspace<F> {
        x.meet(&self.bottom.ortho())
    }

    /// `y ↦ y ∨ b`, inverse of [`Self::to_lower`].
    pub fn from_lower(&self, y: &Subspace<F>) -> Subspace<F> {
        y.join(&self.bottom)
    }
}

impl<F: Field> Ortholattice for IntervalLattice<F> {
    type Elem = Subspace<F>;

    fn zero(&self) -> Subspace<F> {
        self.bottom.clone()
    }
    fn one(&self) -> Subspace<F> {
        self.top.clone()
    }
    fn meet(&self, a: &Subspace<F>, b: &Subspace<F>) -> Subspace<F> {
        a.meet(b)
    }
    fn join(&self, a: &Subspace<F>, b: &Subspace<F>) -> Subspace<F> {
        a.join(b)
    }
    fn ortho(&self, x: &Subspace<F>) -> Subspace<F> {
        x.ortho().meet(&self.top).join(&self.bottom)
    }
    fn leq(&self, a: &Subspace<F>, b: &Subspace<F>) -> bool {
        a.leq(b)
    }
    fn contains(&self, x: &Subspace<F>) -> bool {
        self.bottom.leq(x) && x.leq(&self.top)
    }
}

/// Coordinates for `[0, a]`: an orthogonal basis `w_1..w_k` of `a` and the
/// linear isomorphism `F^k → a`, `e_i ↦ w_i`.
///
/// The relative orthocomplement of `[0, a]` corresponds to the orthocomplement
/// of `F^k` for the diagonal form with weights `<w_i, w_i>`. When `a` admits
/// an orthonormal basis over `F` (every weight a rational square, e.g. for
/// coordinate subspaces) the weights are all 1 and the target is the standard
/// `L(F^k)`.
#[derive(Debug, Clone)]
pub struct IntervalIso<F: Field> {
    a: Subspace<F>,
    frame: Matrix<F>,
    weights: Vec<Rational>,
}

fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n: &BigInt = q.numer();
    let d: &BigInt = q.denom();
    let (rn, rd) = (n.sqrt(), d.sqrt());
    (&rn * &rn == *n && &rd * &rd == *d).then(|| Rational::new(rn, rd))
}

fn inner<F: Field>(v: &[F], w: &[F]) -> F {
    v.iter().zip(w).fold(F::zero(), |acc, (a, b)| acc.add(&a.mul(&b.conj())))
}

pub fn interval_iso<F: Field>(a: &Subspace<F>) -> IntervalIso<F> {
    let mut ws: Vec<Vec<F>> = Vec::new();
    let mut weights: Vec<Rational> = Vec::new();
    for v in a.basis().row_vecs() {
        let mut w = v.clone();
        for (u, q) in ws.iter().zip(&weights) {
            let coeff = inner(&v, u).mul(&F::from_rational(q.recip()));
            for (wl, ul) in w.iter_mut().zip(u) {
                *wl = wl.sub(&coeff.mul(ul));
            }
        }
        let q: Rational = w.iter().map(F::norm_sq).sum();
        ws.push(w);
        weights.push(q);
    }
    for (w, q) in ws.iter_mut().zip(weights.iter_mut()) {
        if let Some(r) = rational_sqrt(q) {
            let s = F::from_rational(r.recip());
            w.iter_mut().for_each(|x| *x = x.mul(&s));
            *q = Rational::from_i64(1);
        }
    }
    let frame = Matrix::from_rows(a.ambient(), ws).expect("basis rows");
    IntervalIso { a: a.clone(), frame, weights }
}

impl<F: Field> IntervalIso<F> {
    pub fn top(&self) -> &Subspace<F> {
        &self.a
    }

    /// Dimension `k` of the coordinate space.
    pub fn dim(&self) -> usize {
        self.a.dim()
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    /// Whether the coordinate form is the standard one.
    pub fn is_standard(&self) -> bool {
        self.weights.iter().all(|w| *w == Rational::from_i64(1))
    }

    /// Image in `[0, a]` of a subspace of `F^k`.
    pub fn to_interval(&self, x: &Subspace<F>) -> Subspace<F> {
        assert_eq!(x.ambient(), self.dim(), "coordinate subspace has wrong ambient");
        Subspace::span(self.a.ambient(), &x.basis().mul(&self.frame))
    }

    /// Coordinates of `y ≤ a`. Rows of `y` are `C · W` with `W W* = diag(q)`,
    /// so `C = Y W* diag(q)⁻¹`.
    pub fn from_interval(&self, y: &Subspace<F>) -> Result<Subspace<F>> {
        if !y.leq(&self.a) {
            return Err(Error::InvalidArgument("subspace is not below the interval top".into()));
        }
        let inv: Vec<F> = self.weights.iter().map(|q| F::from_rational(q.recip())).collect();
        let coords = y.basis().mul(&self.frame.conj_transpose()).mul(&Matrix::diagonal(&inv));
        Ok(Subspace::span(self.dim(), &coords))
    }

    /// Orthocomplement in `F^k` for the weighted coordinate form.
    pub fn coordinate_ortho(&self, x: &Subspace<F>) -> Subspace<F> {
        let w: Vec<F> = self.weights.iter().cloned().map(F::from_rational).collect();
        let constraints = x.basis().conj().mul(&Matrix::diagonal(&w));
        Subspace::span(self.dim(), &constraints.kernel())
    }

    /// `[0, a]` with the relative orthocomplement `x ↦ x' ∧ a`.
    pub fn interval(&self) -> IntervalLattice<F> {
        IntervalLattice::new(Subspace::zero(self.a.ambient()), self.a.clone()).expect("0 <= a")
    }
}
