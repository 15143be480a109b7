//! `d`-frames: `d + 1` elements in general position over a bottom `a⊥`
//! spanning a top `a⊤`, i.e. an abstract projective coordinate system.
//!
//! A tuple `(a_0, ..., a_d, a⊥, a⊤)` is a frame when
//!
//! * `a⊤ = a_0 ∨ ... ∨ a_d`,
//! * every `d` of the components already join to `a⊤`,
//! * every `d` of the components are independent over `a⊥`: for `j ≠ k`,
//!   `a_j ∧ ⋁_{i ∉ {j, k}} a_i = a⊥`.
//!
//! The frame is trivial when `a⊥ = a⊤`.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::subspace::Subspace;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Frame<F: Field> {
    pub d: usize,
    pub a: Vec<Subspace<F>>,
    pub bot: Subspace<F>,
    pub top: Subspace<F>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FrameViolation {
    ComponentCount { expected: usize, found: usize },
    AmbientMismatch,
    TopIsNotJoin,
    /// The components other than `omitted` do not join to the top.
    NotSpanning { omitted: usize },
    /// `a_j` meets the join of the components outside `{j, k}` above the bottom.
    NotIndependent { j: usize, k: usize },
}

impl fmt::Display for FrameViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FrameViolation::ComponentCount { expected, found } => {
                write!(f, "expected {expected} components, found {found}")
            }
            FrameViolation::AmbientMismatch => write!(f, "components live in different ambients"),
            FrameViolation::TopIsNotJoin => write!(f, "top is not the join of the components"),
            FrameViolation::NotSpanning { omitted } => {
                write!(f, "components without a{omitted} do not join to the top")
            }
            FrameViolation::NotIndependent { j, k } => {
                write!(f, "a{j} meets the join of the components outside {{a{j}, a{k}}} above the bottom")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FrameReport {
    pub violations: Vec<FrameViolation>,
}

impl FrameReport {
    pub fn is_frame(&self) -> bool {
        self.violations.is_empty()
    }
}

fn join_except<F: Field>(a: &[Subspace<F>], skip: &[usize]) -> Subspace<F> {
    let ambient = a[0].ambient();
    a.iter()
        .enumerate()
        .filter(|(i, _)| !skip.contains(i))
        .fold(Subspace::zero(ambient), |acc, (_, x)| acc.join(x))
}

impl<F: Field> Frame<F> {
    /// Reads the tuple `(a⊥, a_0, ..., a_d, a⊤)`.
    pub fn from_tuple(d: usize, tuple: &[Subspace<F>]) -> Result<Self> {
        if tuple.len() != d + 3 {
            return Err(Error::InvalidArgument(format!(
                "a {d}-frame tuple has {} entries, got {}",
                d + 3,
                tuple.len()
            )));
        }
        Ok(Frame {
            d,
            bot: tuple[0].clone(),
            a: tuple[1..=d + 1].to_vec(),
            top: tuple[d + 2].clone(),
        })
    }

    /// The tuple `(a⊥, a_0, ..., a_d, a⊤)`.
    pub fn to_tuple(&self) -> Vec<Subspace<F>> {
        let mut v = Vec::with_capacity(self.d + 3);
        v.push(self.bot.clone());
        v.extend(self.a.iter().cloned());
        v.push(self.top.clone());
        v
    }

    pub fn ambient(&self) -> usize {
        self.top.ambient()
    }

    pub fn is_trivial(&self) -> bool {
        self.bot == self.top
    }

    /// The trivial frame with every entry equal to `j`.
    pub fn trivial(d: usize, j: Subspace<F>) -> Self {
        Frame { d, a: vec![j.clone(); d + 1], bot: j.clone(), top: j }
    }
}

pub fn verify_frame<F: Field>(frame: &Frame<F>) -> FrameReport {
    let mut violations = Vec::new();
    let d = frame.d;
    if frame.a.len() != d + 1 {
        violations.push(FrameViolation::ComponentCount { expected: d + 1, found: frame.a.len() });
        return FrameReport { violations };
    }
    let ambient = frame.top.ambient();
    if frame.bot.ambient() != ambient || frame.a.iter().any(|x| x.ambient() != ambient) {
        violations.push(FrameViolation::AmbientMismatch);
        return FrameReport { violations };
    }
    if join_except(&frame.a, &[]) != frame.top {
        violations.push(FrameViolation::TopIsNotJoin);
    }
    for j in 0..=d {
        if join_except(&frame.a, &[j]) != frame.top {
            violations.push(FrameViolation::NotSpanning { omitted: j });
        }
    }
    for j in 0..=d {
        for k in 0..=d {
            if j == k {
                continue;
            }
            if frame.a[j].meet(&join_except(&frame.a, &[j, k])) != frame.bot {
                violations.push(FrameViolation::NotIndependent { j, k });
            }
        }
    }
    FrameReport { violations }
}

/// Coordinate frame of `F^d`: the axes `span(e_1), ..., span(e_d)` and the unit
/// point `span(e_1 + ... + e_d)`, over `0` and spanning `F^d`.
pub fn canonical_frame<F: Field>(d: usize) -> Result<Frame<F>> {
    if d < 2 {
        return Err(Error::InvalidArgument(format!("canonical frame needs d >= 2, got {d}")));
    }
    let mut a: Vec<Subspace<F>> = (0..d).map(|i| Subspace::axis(d, i)).collect();
    a.push(Subspace::from_vectors(d, vec![vec![F::one(); d]])?);
    Ok(Frame { d, a, bot: Subspace::zero(d), top: Subspace::full(d) })
}

/// Stand-in for frame-producing lattice terms: frames are returned unchanged,
/// anything else collapses to the trivial frame at the join of all entries.
///
/// `tuple` is read as `(a⊥, a_0, ..., a_d, a⊤)`.
pub fn normalize_frame<F: Field>(d: usize, tuple: &[Subspace<F>]) -> Result<Frame<F>> {
    let candidate = Frame::from_tuple(d, tuple)?;
    let ambient = candidate.top.ambient();
    if tuple.iter().any(|x| x.ambient() != ambient) {
        return Err(Error::InvalidArgument("frame tuple mixes ambient dimensions".into()));
    }
    if verify_frame(&candidate).is_frame() {
        return Ok(candidate);
    }
    let j = tuple.iter().fold(Subspace::zero(ambient), |acc, x| acc.join(x));
    Ok(Frame::trivial(d, j))
}

/// `n` pairwise distinct atoms `span(v0 + i·v1)`, `i = 1..n`, of `[0, a_0 ∨ a_1]`,
/// each a complement of `a_1` there.
pub fn line_atoms<F: Field>(frame: &Frame<F>, n: usize) -> Result<Vec<Subspace<F>>> {
    if frame.is_trivial() {
        return Err(Error::InvalidArgument("line atoms need a nontrivial frame".into()));
    }
    if frame.a.len() < 2 || frame.a[0].dim() != 1 || frame.a[1].dim() != 1 {
        return Err(Error::InvalidArgument("line atoms need one-dimensional a0 and a1".into()));
    }
    let v0 = frame.a[0].basis().row(0).to_vec();
    let v1 = frame.a[1].basis().row(0).to_vec();
    (1..=n)
        .map(|i| {
            let t = F::from_i64(i as i64);
            let v = v0.iter().zip(&v1).map(|(x, y)| x.add(&t.mul(y))).collect();
            Subspace::from_vectors(frame.ambient(), vec![v])
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;
    use crate::random::Sampler;

    type S = Subspace<Rational>;

    #[test]
    fn canonical_frames_verify() {
        for d in 2..=6 {
            let f = canonical_frame::<Rational>(d).unwrap();
            let report = verify_frame(&f);
            assert!(report.is_frame(), "d={d}: {:?}", report.violations);
            assert!(!f.is_trivial());
        }
        assert!(canonical_frame::<Rational>(1).is_err());
    }

    #[test]
    fn canonical_two_frame_is_three_atoms() {
        let f = canonical_frame::<Rational>(2).unwrap();
        assert_eq!(f.a, vec![S::axis(2, 0), S::axis(2, 1), S::from_i64_vectors(2, &[&[1, 1]])]);
    }

    #[test]
    fn constant_tuple_is_a_trivial_frame() {
        let j = S::from_i64_vectors(3, &[&[1, 2, 0]]);
        let f = Frame::trivial(3, j);
        assert!(verify_frame(&f).is_frame());
        assert!(f.is_trivial());
    }

    #[test]
    fn repeated_axis_is_rejected() {
        let e1 = S::axis(2, 0);
        let f = Frame {
            d: 2,
            a: vec![e1.clone(), e1.clone(), S::from_i64_vectors(2, &[&[1, 1]])],
            bot: S::zero(2),
            top: S::full(2),
        };
        let report = verify_frame(&f);
        assert!(!report.is_frame());
        assert!(report.violations.contains(&FrameViolation::NotIndependent { j: 0, k: 2 }));
    }

    #[test]
    fn degenerate_tuple_without_spanning_is_rejected() {
        // pairwise meets vanish but two of the three components are 0.
        let l = S::axis(2, 0);
        let f = Frame { d: 2, a: vec![S::zero(2), S::zero(2), l.clone()], bot: S::zero(2), top: l };
        assert!(verify_frame(&f).violations.contains(&FrameViolation::NotSpanning { omitted: 2 }));
    }

    #[test]
    fn normalize_keeps_frames_and_trivializes_others() {
        let f = canonical_frame::<Rational>(3).unwrap();
        assert_eq!(normalize_frame(3, &f.to_tuple()).unwrap(), f);
        let zeros = vec![S::zero(3); 6];
        assert_eq!(normalize_frame(3, &zeros).unwrap(), Frame::trivial(3, S::zero(3)));
        let mut s = Sampler::<Rational>::new(21);
        for _ in 0..50 {
            let tuple: Vec<S> = (0..5).map(|_| s.subspace(2)).collect();
            let nf = normalize_frame(2, &tuple).unwrap();
            assert!(verify_frame(&nf).is_frame());
            assert_eq!(normalize_frame(2, &nf.to_tuple()).unwrap(), nf);
            if nf != Frame::from_tuple(2, &tuple).unwrap() {
                let j = tuple.iter().fold(S::zero(2), |a, x| a.join(x));
                assert_eq!(nf, Frame::trivial(2, j));
            }
        }
        assert!(normalize_frame(2, &zeros[..4]).is_err());
    }

    #[test]
    fn line_atoms_are_complements_of_a1() {
        let f = canonical_frame::<Rational>(2).unwrap();
        let atoms = line_atoms(&f, 2).unwrap();
        assert_eq!(atoms, vec![S::from_i64_vectors(2, &[&[1, 1]]), S::from_i64_vectors(2, &[&[1, 2]])]);
        let f4 = canonical_frame::<Rational>(4).unwrap();
        let atoms = line_atoms(&f4, 5).unwrap();
        let plane = f4.a[0].join(&f4.a[1]);
        for (i, c) in atoms.iter().enumerate() {
            assert_eq!(c.dim(), 1);
            assert!(c.meet(&f4.a[1]).is_zero());
            assert_eq!(c.join(&f4.a[1]), plane);
            assert!(atoms[..i].iter().all(|p| p != c));
        }
        let single = line_atoms(&f, 1).unwrap();
        assert_eq!(single.len(), 1);
        assert_ne!(single[0], f.a[1]);
    }

    #[test]
    fn line_atoms_reject_trivial_frames() {
        assert!(line_atoms(&Frame::trivial(2, S::full(2)), 2).is_err());
    }
}
