//! Matrix `*`-rings over `Q` and `Q(i)`: the exact Moore–Penrose inverse,
//! the ortholattice of projections and its isomorphism with the subspace
//! lattice, and the block-doubling embedding `M_m → M_2m`.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::lattice::Ortholattice;
use crate::matrix::Matrix;
use crate::subspace::Subspace;

/// The unique `x` with `axa = a`, `xax = x`, `(ax)* = ax`, `(xa)* = xa`.
///
/// Computed from the rank factorization `a = b c` (`b` the pivot columns of
/// `a`, `c` the nonzero rows of its reduced echelon form) as
/// `c* (c c*)⁻¹ (b* b)⁻¹ b*`.
pub fn mp_inverse<F: Field>(a: &Matrix<F>) -> Matrix<F> {
    let ech = a.echelon();
    if ech.pivots.is_empty() {
        return Matrix::zeros(a.cols(), a.rows());
    }
    let b = a.select_columns(&ech.pivots);
    let c = ech.matrix;
    let cs = c.conj_transpose();
    let bs = b.conj_transpose();
    let cc = c.mul(&cs).inverse().expect("c has full row rank");
    let bb = bs.mul(&b).inverse().expect("b has full column rank");
    cs.mul(&cc).mul(&bb).mul(&bs)
}

/// Which of the four Penrose equations `x` satisfies for `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PenroseCheck {
    pub axa: bool,
    pub xax: bool,
    pub ax_hermitian: bool,
    pub xa_hermitian: bool,
}

impl PenroseCheck {
    pub fn all(&self) -> bool {
        self.axa && self.xax && self.ax_hermitian && self.xa_hermitian
    }
}

pub fn penrose_check<F: Field>(a: &Matrix<F>, x: &Matrix<F>) -> PenroseCheck {
    let ax = a.mul(x);
    let xa = x.mul(a);
    PenroseCheck {
        axa: ax.mul(a) == *a,
        xax: xa.mul(x) == *x,
        ax_hermitian: ax.conj_transpose() == ax,
        xa_hermitian: xa.conj_transpose() == xa,
    }
}

/// `2m × 2m` block-diagonal `diag(x, x)`.
pub fn block_double<F: Field>(x: &Matrix<F>) -> Matrix<F> {
    x.block_diag(x)
}

/// A self-adjoint idempotent square matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProjMatrix<F: Field>(Matrix<F>);

impl<F: Field> ProjMatrix<F> {
    pub fn new(p: Matrix<F>) -> Result<Self> {
        if !p.is_square() || p.mul(&p) != p || p.conj_transpose() != p {
            return Err(Error::NotAProjection);
        }
        Ok(ProjMatrix(p))
    }

    /// Orthogonal projection onto `u`: with the basis vectors of `u` as the
    /// columns of `v`, `v (v* v)⁻¹ v*`.
    pub fn onto(u: &Subspace<F>) -> Self {
        let m = u.ambient();
        if u.is_zero() {
            return ProjMatrix(Matrix::zeros(m, m));
        }
        let v = u.basis().transpose();
        let vs = v.conj_transpose();
        let g = vs.mul(&v).inverse().expect("gram matrix of a basis is invertible");
        ProjMatrix(v.mul(&g).mul(&vs))
    }

    pub fn zero(size: usize) -> Self {
        ProjMatrix(Matrix::zeros(size, size))
    }

    pub fn identity(size: usize) -> Self {
        ProjMatrix(Matrix::identity(size))
    }

    pub fn matrix(&self) -> &Matrix<F> {
        &self.0
    }

    pub fn into_matrix(self) -> Matrix<F> {
        self.0
    }

    pub fn size(&self) -> usize {
        self.0.rows()
    }

    /// Column space.
    pub fn range(&self) -> Subspace<F> {
        Subspace::span(self.size(), &self.0.transpose())
    }

    /// `e ≤ f ⇔ f e = e`.
    pub fn leq(&self, f: &Self) -> bool {
        f.0.mul(&self.0) == self.0
    }

    fn check_size(&self, f: &Self) -> Result<()> {
        if self.size() != f.size() {
            return Err(Error::Shape(format!(
                "projections of sizes {} and {}",
                self.size(),
                f.size()
            )));
        }
        Ok(())
    }

    /// `(e + f)(e + f)⁺`.
    pub fn join(&self, f: &Self) -> Result<Self> {
        self.check_size(f)?;
        let s = self.0.add(&f.0);
        Ok(ProjMatrix(s.mul(&mp_inverse(&s))))
    }

    /// `1 − ((1 − e) ∨ (1 − f))`.
    pub fn meet(&self, f: &Self) -> Result<Self> {
        let j = self.ortho().join(&f.ortho())?;
        Ok(j.ortho())
    }

    /// `1 − e`.
    pub fn ortho(&self) -> Self {
        ProjMatrix(Matrix::identity(self.size()).sub(&self.0))
    }

    /// `diag(e, e)`, the projection onto `range(e) ⊕ range(e)`.
    pub fn double(&self) -> Self {
        ProjMatrix(block_double(&self.0))
    }
}

pub fn proj_to_subspace<F: Field>(e: &ProjMatrix<F>) -> Subspace<F> {
    e.range()
}

pub fn subspace_to_proj<F: Field>(u: &Subspace<F>) -> ProjMatrix<F> {
    ProjMatrix::onto(u)
}

/// Projections of `M_m(F)` with the ring-term operations.
#[derive(Debug, Clone, Copy)]
pub struct ProjLattice<F> {
    size: usize,
    _field: std::marker::PhantomData<F>,
}

impl<F: Field> ProjLattice<F> {
    pub fn new(size: usize) -> Self {
        ProjLattice { size, _field: std::marker::PhantomData }
    }
}

impl<F: Field> Ortholattice for ProjLattice<F> {
    type Elem = ProjMatrix<F>;

    fn zero(&self) -> ProjMatrix<F> {
        ProjMatrix::zero(self.size)
    }
    fn one(&self) -> ProjMatrix<F> {
        ProjMatrix::identity(self.size)
    }
    fn meet(&self, a: &ProjMatrix<F>, b: &ProjMatrix<F>) -> ProjMatrix<F> {
        a.meet(b).expect("projections of one ring")
    }
    fn join(&self, a: &ProjMatrix<F>, b: &ProjMatrix<F>) -> ProjMatrix<F> {
        a.join(b).expect("projections of one ring")
    }
    fn ortho(&self, a: &ProjMatrix<F>) -> ProjMatrix<F> {
        a.ortho()
    }
    fn leq(&self, a: &ProjMatrix<F>, b: &ProjMatrix<F>) -> bool {
        a.leq(b)
    }
    fn contains(&self, a: &ProjMatrix<F>) -> bool {
        a.size() == self.size
    }
}
