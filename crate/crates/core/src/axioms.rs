//! Seeded randomized law suites over exact arithmetic.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::field::{Field, Gaussian, Rational};
use crate::frame::{canonical_frame, line_atoms, normalize_frame, verify_frame, Frame};
use crate::lattice::Ortholattice;
use crate::random::Sampler;
use crate::ring::{block_double, mp_inverse, penrose_check, proj_to_subspace, ProjMatrix};
use crate::subspace::{Subspace, SubspaceLattice};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub passed: u64,
    pub failed: u64,
}

/// Named pass/fail counts.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub seed: u64,
    pub samples: usize,
    pub checks: BTreeMap<String, Tally>,
}

impl Report {
    pub fn new(suite: &str, seed: u64, samples: usize) -> Self {
        Report { suite: suite.to_string(), seed, samples, checks: BTreeMap::new() }
    }

    pub fn record(&mut self, name: &str, ok: bool) {
        let t = self.checks.entry(name.to_string()).or_default();
        if ok {
            t.passed += 1;
        } else {
            t.failed += 1;
        }
    }

    pub fn all_passed(&self) -> bool {
        self.checks.values().all(|t| t.failed == 0)
    }

    pub fn failures(&self) -> Vec<&str> {
        self.checks.iter().filter(|(_, t)| t.failed > 0).map(|(k, _)| k.as_str()).collect()
    }
}

/// Checks the ortholattice axioms and the modular law on one triple.
pub fn check_mol_triple<L: Ortholattice>(lat: &L, x: &L::Elem, y: &L::Elem, z: &L::Elem, r: &mut Report) {
    let (zero, one) = (lat.zero(), lat.one());
    let m = |a: &L::Elem, b: &L::Elem| lat.meet(a, b);
    let j = |a: &L::Elem, b: &L::Elem| lat.join(a, b);
    let o = |a: &L::Elem| lat.ortho(a);

    r.record("meet_commutative", m(x, y) == m(y, x));
    r.record("join_commutative", j(x, y) == j(y, x));
    r.record("meet_associative", m(&m(x, y), z) == m(x, &m(y, z)));
    r.record("join_associative", j(&j(x, y), z) == j(x, &j(y, z)));
    r.record("meet_idempotent", m(x, x) == *x);
    r.record("join_idempotent", j(x, x) == *x);
    r.record("absorption_meet", m(x, &j(x, y)) == *x);
    r.record("absorption_join", j(x, &m(x, y)) == *x);
    r.record("bounds", m(x, &zero) == zero && j(x, &one) == one && m(x, &one) == *x && j(x, &zero) == *x);
    r.record("complement_meet", m(x, &o(x)) == zero);
    r.record("complement_join", j(x, &o(x)) == one);
    r.record("involution", o(&o(x)) == *x);
    r.record("de_morgan", o(&m(x, y)) == j(&o(x), &o(y)) && o(&j(x, y)) == m(&o(x), &o(y)));
    let xy = m(x, y);
    r.record("order_reversing", !lat.leq(&xy, y) || lat.leq(&o(y), &o(&xy)));
    // z ∧ x lies below x, so the modular law applies to it.
    let w = m(z, x);
    r.record("modular", m(x, &j(y, &w)) == j(&m(x, y), &w));
    if lat.leq(z, x) {
        r.record("modular_direct", m(x, &j(y, z)) == j(&m(x, y), z));
    }
}

/// Ortholattice and modular laws on `samples` random triples of `L(Q^d)`
/// for each `d` in `dims`.
pub fn mol_suite(dims: &[usize], samples: usize, seed: u64) -> Report {
    let mut r = Report::new("mol", seed, samples);
    let mut s = Sampler::<Rational>::new(seed);
    for &d in dims {
        let lat = SubspaceLattice::new(d);
        for _ in 0..samples {
            let (x, y, z) = (s.subspace(d), s.subspace(d), s.subspace(d));
            check_mol_triple(&lat, &x, &y, &z, &mut r);
        }
    }
    r
}

fn penrose_for<F: Field>(r: &mut Report, s: &mut Sampler<F>, max: usize, samples: usize) {
    let tag = F::TAG;
    for _ in 0..samples {
        let (rows, cols) = (s.index(1, max), s.index(1, max));
        let rank = s.index(0, rows.min(cols));
        let a = s.matrix_of_rank(rows, cols, rank);
        let x = mp_inverse(&a);
        let c = penrose_check(&a, &x);
        r.record(&format!("{tag}/axa"), c.axa);
        r.record(&format!("{tag}/xax"), c.xax);
        r.record(&format!("{tag}/ax_hermitian"), c.ax_hermitian);
        r.record(&format!("{tag}/xa_hermitian"), c.xa_hermitian);

        let n = s.index(1, max);
        let rank = s.index(0, n);
        let sq = s.matrix_of_rank(n, n, rank);
        r.record(&format!("{tag}/double_commutes"), mp_inverse(&block_double(&sq)) == block_double(&mp_inverse(&sq)));
        let other = s.matrix(n, n);
        let b = sq.block_diag(&other);
        r.record(&format!("{tag}/heredity"), mp_inverse(&b) == mp_inverse(&sq).block_diag(&mp_inverse(&other)));

        let m = s.index(1, max);
        let (e, f) = (s.projection(m), s.projection(m));
        let (u, v) = (proj_to_subspace(&e), proj_to_subspace(&f));
        let (j, me) = (e.join(&f).expect("same size"), e.meet(&f).expect("same size"));
        r.record(&format!("{tag}/join_is_projection"), ProjMatrix::new(j.matrix().clone()).is_ok());
        r.record(&format!("{tag}/meet_is_projection"), ProjMatrix::new(me.matrix().clone()).is_ok());
        r.record(&format!("{tag}/join_matches"), proj_to_subspace(&j) == u.join(&v));
        r.record(&format!("{tag}/meet_matches"), proj_to_subspace(&me) == u.meet(&v));
        r.record(&format!("{tag}/ortho_matches"), proj_to_subspace(&e.ortho()) == u.ortho());
        r.record(&format!("{tag}/order_matches"), e.leq(&f) == u.leq(&v) && e.leq(&j) && me.leq(&e));
        r.record(&format!("{tag}/round_trip"), ProjMatrix::onto(&u) == e);
    }
}

/// Penrose equations, block-doubling, heredity and the projection/subspace
/// correspondence over `Q` and `Q(i)` with matrix sizes up to `max_size`.
pub fn penrose_suite(max_size: usize, samples: usize, seed: u64) -> Report {
    let mut r = Report::new("penrose", seed, samples);
    penrose_for(&mut r, &mut Sampler::<Rational>::new(seed), max_size, samples);
    penrose_for(&mut r, &mut Sampler::<Gaussian>::new(seed.wrapping_add(1)), max_size, samples);
    r
}

/// A random tuple biased toward frame-like configurations: all entries in
/// `[bot, top]` for a random `bot ≤ top`.
pub fn random_frame_candidate<F: Field>(s: &mut Sampler<F>, d: usize, ambient: usize) -> Frame<F> {
    let top = s.subspace(ambient);
    let bot = if s.coin(0.5) { Subspace::zero(ambient) } else { s.subspace_within(&top) };
    let a: Vec<Subspace<F>> = (0..=d).map(|_| s.subspace_within(&top).join(&bot)).collect();
    let top = if s.coin(0.5) { a.iter().fold(bot.clone(), |acc, x| acc.join(x)) } else { top };
    Frame { d, a, bot, top }
}

/// Coordinate frames verify for `2 ≤ d ≤ max_d`, random tuples in
/// `L(Q^(d-1))` are never nontrivial frames, normalization always returns a
/// frame, and line atoms are complements of `a_1`.
pub fn frame_suite(max_d: usize, samples: usize, seed: u64) -> Report {
    let mut r = Report::new("frame", seed, samples);
    let mut s = Sampler::<Rational>::new(seed);
    for d in 2..=max_d {
        let f = canonical_frame::<Rational>(d).expect("d >= 2");
        r.record("canonical_verifies", verify_frame(&f).is_frame() && !f.is_trivial());
        let atoms = line_atoms(&f, d + 1).expect("nontrivial frame");
        let line = f.a[0].join(&f.a[1]);
        r.record(
            "line_atoms_complement_a1",
            atoms.iter().all(|c| c.meet(&f.a[1]).is_zero() && c.join(&f.a[1]) == line),
        );
    }
    for i in 0..samples {
        let d = 2 + i % (max_d - 1).max(1);
        let cand = random_frame_candidate(&mut s, d, d - 1);
        let is_frame = verify_frame(&cand).is_frame();
        r.record("no_nontrivial_frame_below_dim_d", !is_frame || cand.is_trivial());
        let nf = normalize_frame(d, &cand.to_tuple()).expect("tuple arity");
        r.record("normalize_yields_frame", verify_frame(&nf).is_frame());
    }
    r
}
