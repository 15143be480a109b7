use proptest::prelude::*;

use molq_core::axioms::{check_mol_triple, Report};
use molq_core::interval::interval_iso;
use molq_core::lattice::Ortholattice;
use molq_core::limit::{metric, realify, LimitElement, LimitLattice};
use molq_core::random::Sampler;
use molq_core::ring::{proj_to_subspace, ProjLattice, ProjMatrix};
use molq_core::{Gaussian, Rational, Subspace, SubspaceLattice};

fn assert_mol<L: Ortholattice>(lat: &L, x: &L::Elem, y: &L::Elem, z: &L::Elem) {
    let mut r = Report::new("prop", 0, 1);
    check_mol_triple(lat, x, y, z, &mut r);
    assert!(r.all_passed(), "{:?}", r.failures());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn subspace_lattice_is_a_mol(seed in any::<u64>(), d in 1usize..=4) {
        let mut s = Sampler::<Rational>::new(seed);
        let (x, y, z) = (s.subspace(d), s.subspace(d), s.subspace(d));
        assert_mol(&SubspaceLattice::new(d), &x, &y, &z);
    }

    #[test]
    fn gaussian_subspace_lattice_is_a_mol(seed in any::<u64>(), d in 1usize..=3) {
        let mut s = Sampler::<Gaussian>::new(seed);
        let (x, y, z) = (s.subspace(d), s.subspace(d), s.subspace(d));
        assert_mol(&SubspaceLattice::new(d), &x, &y, &z);
    }

    #[test]
    fn limit_lattice_is_a_mol_across_levels(seed in any::<u64>()) {
        let mut s = Sampler::<Rational>::new(seed);
        let el = |s: &mut Sampler<Rational>| {
            let level = s.index(0, 3) as u32;
            LimitElement::new(level, s.subspace(1 << level)).unwrap()
        };
        let (x, y, z) = (el(&mut s), el(&mut s), el(&mut s));
        assert_mol(&LimitLattice::new(), &x, &y, &z);
    }

    #[test]
    fn metric_axioms(seed in any::<u64>()) {
        let mut s = Sampler::<Rational>::new(seed);
        let el = |s: &mut Sampler<Rational>| {
            let level = s.index(0, 3) as u32;
            LimitElement::new(level, s.subspace(1 << level)).unwrap()
        };
        let (x, y, z) = (el(&mut s), el(&mut s), el(&mut s));
        let zero = Rational::from_integer(0.into());
        prop_assert_eq!(metric(&x, &y), metric(&y, &x));
        prop_assert!(metric(&x, &y) >= zero);
        prop_assert_eq!(metric(&x, &y) == zero, x == y);
        prop_assert!(metric(&x, &z) <= metric(&x, &y) + metric(&y, &z));
        prop_assert_eq!(metric(&x.double(), &y), metric(&x, &y));
    }

    #[test]
    fn doubling_commutes_with_orthocomplement(seed in any::<u64>(), level in 0u32..=3) {
        let mut s = Sampler::<Rational>::new(seed);
        let x = LimitElement::new(level, s.subspace(1 << level)).unwrap();
        prop_assert_eq!(x.ortho().double(), x.double().ortho());
        prop_assert_eq!(x.double().delta().value(), x.delta().value());
        prop_assert_eq!(x.lift_to(level + 2).unwrap().reduce().space().clone(), x.reduce().space().clone());
    }

    #[test]
    fn realification_is_a_homomorphism(seed in any::<u64>(), k in 1usize..=3) {
        let mut s = Sampler::<Gaussian>::new(seed);
        let (u, v) = (s.subspace(k), s.subspace(k));
        prop_assert_eq!(realify(&u.meet(&v)), realify(&u).meet(&realify(&v)));
        prop_assert_eq!(realify(&u.join(&v)), realify(&u).join(&realify(&v)));
        prop_assert_eq!(realify(&u.ortho()), realify(&u).ortho());
        prop_assert_eq!(realify(&u).leq(&realify(&v)), u.leq(&v));
    }

    #[test]
    fn projection_lattice_is_isomorphic_to_subspaces(seed in any::<u64>(), m in 1usize..=4) {
        let mut s = Sampler::<Rational>::new(seed);
        let (e, f, g) = (s.projection(m), s.projection(m), s.projection(m));
        assert_mol(&ProjLattice::new(m), &e, &f, &g);
        let (u, v) = (proj_to_subspace(&e), proj_to_subspace(&f));
        prop_assert_eq!(proj_to_subspace(&e.join(&f).unwrap()), u.join(&v));
        prop_assert_eq!(proj_to_subspace(&e.meet(&f).unwrap()), u.meet(&v));
        prop_assert_eq!(ProjMatrix::onto(&u), e);
    }

    #[test]
    fn projection_double_matches_limit_double(seed in any::<u64>(), level in 0u32..=2) {
        let mut s = Sampler::<Rational>::new(seed);
        let x = LimitElement::new(level, s.subspace(1 << level)).unwrap();
        let e = ProjMatrix::onto(x.space());
        prop_assert_eq!(proj_to_subspace(&e.double()), x.double().space().clone());
    }

    #[test]
    fn interval_transport_downward(seed in any::<u64>(), m in 1usize..=4) {
        // L(Q^m) as [0, span(e_1..e_m)] inside L(Q^4)
        let a = (0..m).fold(Subspace::<Rational>::zero(4), |acc, i| acc.join(&Subspace::axis(4, i)));
        let iso = interval_iso(&a);
        let lat = iso.interval();
        let mut s = Sampler::<Rational>::new(seed);
        let (x, y, z) = (s.subspace(m), s.subspace(m), s.subspace(m));
        let (ix, iy, iz) = (iso.to_interval(&x), iso.to_interval(&y), iso.to_interval(&z));
        assert_mol(&lat, &ix, &iy, &iz);
        prop_assert_eq!(iso.from_interval(&lat.ortho(&ix)).unwrap(), x.ortho());
    }
}
