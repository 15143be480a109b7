//! The modular ortholattice `L(F^d)` of subspaces.
//!
//! A [`Subspace`] stores its basis as the reduced row echelon form of any
//! spanning set, so two subspaces are equal exactly when their stored
//! matrices are. The orthocomplement is taken with respect to the standard
//! form `<v, w> = Σ v_i · w_i*`, which is anisotropic over both `Q` and
//! `Q(i)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::lattice::Ortholattice;
use crate::matrix::Matrix;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace<F> {
    ambient: usize,
    basis: Matrix<F>,
}

impl<F: Field> Subspace<F> {
    /// Span of the rows of `rows` inside `F^ambient`.
    pub fn span(ambient: usize, rows: &Matrix<F>) -> Self {
        assert_eq!(rows.cols(), ambient, "spanning vectors have wrong length");
        Subspace { ambient, basis: rows.rref() }
    }

    pub fn from_vectors(ambient: usize, vectors: Vec<Vec<F>>) -> Result<Self> {
        let m = Matrix::from_rows(ambient, vectors)?;
        Ok(Self::span(ambient, &m))
    }

    pub fn from_i64_vectors(ambient: usize, vectors: &[&[i64]]) -> Self {
        let rows = vectors
            .iter()
            .map(|v| {
                assert_eq!(v.len(), ambient, "vector length");
                v.iter().map(|&x| F::from_i64(x)).collect()
            })
            .collect();
        Self::from_vectors(ambient, rows).expect("shape checked")
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::zeros(0, ambient) }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::identity(ambient) }
    }

    /// `span(e_{i+1})`, the `i`-th coordinate axis (0-based).
    pub fn axis(ambient: usize, i: usize) -> Self {
        let mut m = Matrix::zeros(1, ambient);
        m[(0, i)] = F::one();
        Subspace { ambient, basis: m }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Matrix<F> {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch { left: self.ambient, right: other.ambient });
        }
        Ok(())
    }

    pub fn try_join(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if self.is_zero() || other.is_full() {
            return Ok(other.clone());
        }
        if other.is_zero() || self.is_full() {
            return Ok(self.clone());
        }
        Ok(Subspace::span(self.ambient, &self.basis.vstack(&other.basis)))
    }

    /// Intersection by the Zassenhaus method: reduce `[[A, A], [B, 0]]`; the
    /// rows whose left half vanishes carry a basis of the intersection in
    /// their right half.
    pub fn try_meet(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if self.is_zero() || other.is_full() {
            return Ok(self.clone());
        }
        if other.is_zero() || self.is_full() {
            return Ok(other.clone());
        }
        let d = self.ambient;
        let top = self.basis.hstack(&self.basis);
        let bottom = other.basis.hstack(&Matrix::zeros(other.dim(), d));
        let e = top.vstack(&bottom).echelon();
        let start = e.pivots.iter().take_while(|&&p| p < d).count();
        let rows: Vec<Vec<F>> = (start..e.matrix.rows())
            .map(|i| e.matrix.row(i)[d..].to_vec())
            .collect();
        let m = Matrix::from_rows(d, rows)?;
        Ok(Subspace::span(d, &m))
    }

    /// Sum of subspaces. Panics on ambient mismatch; see [`Self::try_join`].
    pub fn join(&self, other: &Self) -> Self {
        self.try_join(other).expect("join of subspaces in different ambients")
    }

    /// Intersection. Panics on ambient mismatch; see [`Self::try_meet`].
    pub fn meet(&self, other: &Self) -> Self {
        self.try_meet(other).expect("meet of subspaces in different ambients")
    }

    /// `{v : <v, w> = 0 for all w in self}`.
    pub fn ortho(&self) -> Self {
        if self.is_zero() {
            return Subspace::full(self.ambient);
        }
        if self.is_full() {
            return Subspace::zero(self.ambient);
        }
        // <v, b> = Σ v_i b_i*, so v is orthogonal to the row b iff conj(b)·vᵀ = 0.
        Subspace::span(self.ambient, &self.basis.conj().kernel())
    }

    pub fn leq(&self, other: &Self) -> bool {
        self.ambient == other.ambient
            && self.dim() <= other.dim()
            && other.basis.vstack(&self.basis).rank() == other.dim()
    }

    pub fn contains_vector(&self, v: &[F]) -> bool {
        let row = Matrix::from_rows(self.ambient, vec![v.to_vec()]).expect("vector length");
        self.basis.vstack(&row).rank() == self.dim()
    }

    /// Whether `m`, read as rows, is already the canonical basis matrix.
    pub fn is_canonical_basis(m: &Matrix<F>) -> bool {
        m.rref() == *m
    }
}

impl<F: fmt::Display> fmt::Debug for Subspace<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span{:?}@{}", self.basis, self.ambient)
    }
}

/// `L(F^d)` as an [`Ortholattice`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubspaceLattice<F> {
    ambient: usize,
    _field: std::marker::PhantomData<F>,
}

impl<F: Field> SubspaceLattice<F> {
    pub fn new(ambient: usize) -> Self {
        SubspaceLattice { ambient, _field: std::marker::PhantomData }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }
}

impl<F: Field> Ortholattice for SubspaceLattice<F> {
    type Elem = Subspace<F>;

    fn zero(&self) -> Subspace<F> {
        Subspace::zero(self.ambient)
    }
    fn one(&self) -> Subspace<F> {
        Subspace::full(self.ambient)
    }
    fn meet(&self, a: &Subspace<F>, b: &Subspace<F>) -> Subspace<F> {
        a.meet(b)
    }
    fn join(&self, a: &Subspace<F>, b: &Subspace<F>) -> Subspace<F> {
        a.join(b)
    }
    fn ortho(&self, a: &Subspace<F>) -> Subspace<F> {
        a.ortho()
    }
    fn leq(&self, a: &Subspace<F>, b: &Subspace<F>) -> bool {
        a.leq(b)
    }
    fn contains(&self, a: &Subspace<F>) -> bool {
        a.ambient() == self.ambient
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Gaussian, Rational};
    use crate::random::Sampler;

    type S = Subspace<Rational>;

    #[test]
    fn distinct_lines_meet_in_zero() {
        let a = S::from_i64_vectors(2, &[&[1, 0]]);
        let b = S::from_i64_vectors(2, &[&[1, 1]]);
        assert_eq!(a.meet(&b), S::zero(2));
        assert_eq!(a.meet(&a), a);
        assert_eq!(a.join(&S::axis(2, 1)), S::full(2));
        assert_eq!(a.join(&S::zero(2)), a);
    }

    #[test]
    fn coordinate_orthocomplement() {
        assert_eq!(S::axis(2, 0).ortho(), S::axis(2, 1));
        assert_eq!(S::zero(2).ortho(), S::full(2));
        assert_eq!(S::full(3).ortho(), S::zero(3));
    }

    #[test]
    fn mismatched_ambients_are_rejected() {
        let a = S::zero(2);
        let b = S::zero(3);
        assert_eq!(a.try_meet(&b), Err(Error::AmbientMismatch { left: 2, right: 3 }));
        assert!(a.try_join(&b).is_err());
    }

    #[test]
    fn meet_agrees_with_de_morgan() {
        let mut s = Sampler::<Rational>::new(3);
        for _ in 0..200 {
            let u = s.subspace(4);
            let v = s.subspace(4);
            let demorgan = u.ortho().join(&v.ortho()).ortho();
            assert_eq!(u.meet(&v), demorgan);
            assert_eq!(u.dim() + v.dim(), u.meet(&v).dim() + u.join(&v).dim());
        }
    }

    #[test]
    fn gaussian_orthocomplement_is_involutive() {
        let mut s = Sampler::<Gaussian>::new(4);
        for _ in 0..100 {
            let u = s.subspace(3);
            let o = u.ortho();
            assert_eq!(o.ortho(), u);
            assert_eq!(o.dim(), 3 - u.dim());
            assert!(u.meet(&o).is_zero());
            assert!(u.join(&o).is_full());
        }
    }

    #[test]
    fn gaussian_form_is_hermitian() {
        // <(a, b), (1, i)> = a - b·i vanishes on the line through (1, -i).
        let u = Subspace::<Gaussian>::from_vectors(2, vec![vec![Gaussian::one(), Gaussian::i()]]).unwrap();
        let w = Subspace::<Gaussian>::from_vectors(2, vec![vec![Gaussian::one(), Gaussian::i().neg()]])
            .unwrap();
        assert_eq!(u.ortho(), w);
        assert_ne!(u, w);
    }

    #[test]
    fn leq_and_containment() {
        let plane = S::from_i64_vectors(3, &[&[1, 0, 0], &[0, 1, 0]]);
        let line = S::from_i64_vectors(3, &[&[1, 1, 0]]);
        assert!(line.leq(&plane));
        assert!(!plane.leq(&line));
        assert!(plane.contains_vector(&[Rational::from_i64(2), Rational::from_i64(-1), Rational::zero()]));
    }
}
