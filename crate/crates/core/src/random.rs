//! Seeded generators for exact test data.

use std::marker::PhantomData;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::field::Field;
use crate::matrix::Matrix;
use crate::ring::ProjMatrix;
use crate::subspace::Subspace;

/// Entry bound for sampled integer coordinates.
const ENTRY_BOUND: i64 = 2;

pub struct Sampler<F> {
    rng: ChaCha8Rng,
    _field: PhantomData<F>,
}

impl<F: Field> Sampler<F> {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed), _field: PhantomData }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    /// Uniform integer in `lo..=hi`.
    pub fn index(&mut self, lo: usize, hi: usize) -> usize {
        self.rng.gen_range(lo..=hi)
    }

    pub fn coin(&mut self, p: f64) -> bool {
        self.rng.gen_bool(p)
    }

    pub fn scalar(&mut self) -> F {
        F::sample(&mut self.rng, ENTRY_BOUND)
    }

    pub fn matrix(&mut self, rows: usize, cols: usize) -> Matrix<F> {
        let data = (0..rows * cols).map(|_| self.scalar()).collect();
        Matrix::new(rows, cols, data).expect("shape")
    }

    /// A matrix of the given shape whose rank is at most `rank`.
    pub fn matrix_of_rank(&mut self, rows: usize, cols: usize, rank: usize) -> Matrix<F> {
        self.matrix(rows, rank).mul(&self.matrix(rank, cols))
    }

    /// A random subspace of `F^ambient`; the dimension is drawn uniformly
    /// before spanning, so every dimension (including 0 and full) occurs.
    pub fn subspace(&mut self, ambient: usize) -> Subspace<F> {
        let k = self.index(0, ambient);
        Subspace::span(ambient, &self.matrix(k, ambient))
    }

    /// A random subspace of `F^ambient` of exactly dimension `dim`.
    pub fn subspace_of_dim(&mut self, ambient: usize, dim: usize) -> Subspace<F> {
        loop {
            let u = Subspace::span(ambient, &self.matrix(dim, ambient));
            if u.dim() == dim {
                return u;
            }
        }
    }

    /// A random subspace of `parent`, formed from random combinations of its
    /// basis.
    pub fn subspace_within(&mut self, parent: &Subspace<F>) -> Subspace<F> {
        let k = self.index(0, parent.dim());
        let coeffs = self.matrix(k, parent.dim());
        Subspace::span(parent.ambient(), &coeffs.mul(parent.basis()))
    }

    /// A random vector of `parent`.
    pub fn vector_within(&mut self, parent: &Subspace<F>) -> Vec<F> {
        let coeffs = self.matrix(1, parent.dim());
        coeffs.mul(parent.basis()).row(0).to_vec()
    }

    pub fn projection(&mut self, size: usize) -> ProjMatrix<F> {
        ProjMatrix::onto(&self.subspace(size))
    }

    /// `count` pairwise distinct random subspaces.
    pub fn distinct_subspaces(&mut self, ambient: usize, count: usize) -> Vec<Subspace<F>> {
        assert!(ambient >= 2 || count <= ambient + 1, "L(F^{ambient}) has fewer than {count} elements");
        let mut out: Vec<Subspace<F>> = Vec::with_capacity(count);
        while out.len() < count {
            let u = self.subspace(ambient);
            if !out.contains(&u) {
                out.push(u);
            }
        }
        out
    }
}
