//! Abstract ortholattices and term evaluation.

use std::collections::BTreeMap;
use std::fmt::Debug;

use crate::error::{Error, Result};
use crate::term::Term;

/// A bounded lattice with an orthocomplementation.
///
/// Implementations: subspace lattices, intervals with the relative
/// orthocomplement, the dyadic direct limit and projection lattices of
/// matrix rings.
pub trait Ortholattice {
    type Elem: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn meet(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn join(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn ortho(&self, a: &Self::Elem) -> Self::Elem;

    fn leq(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        self.meet(a, b) == *a
    }

    /// Whether `a` is an element of this lattice instance.
    fn contains(&self, _a: &Self::Elem) -> bool {
        true
    }
}

/// Assignment of lattice elements to variable names.
pub type Substitution<E> = BTreeMap<String, E>;

/// Evaluates `t` under `sub` by structural recursion.
pub fn eval<L: Ortholattice>(lat: &L, t: &Term, sub: &Substitution<L::Elem>) -> Result<L::Elem> {
    Ok(match t {
        Term::Var(name) => {
            let v = sub.get(name).ok_or_else(|| Error::UnboundVariable(name.clone()))?;
            if !lat.contains(v) {
                return Err(Error::InvalidArgument(format!(
                    "value of `{name}` is not an element of the lattice"
                )));
            }
            v.clone()
        }
        Term::Zero => lat.zero(),
        Term::One => lat.one(),
        Term::Meet(a, b) => lat.meet(&eval(lat, a, sub)?, &eval(lat, b, sub)?),
        Term::Join(a, b) => lat.join(&eval(lat, a, sub)?, &eval(lat, b, sub)?),
        Term::Ortho(a) => lat.ortho(&eval(lat, a, sub)?),
    })
}

/// Builds a substitution from `(name, value)` pairs.
pub fn substitution<E, I, S>(pairs: I) -> Substitution<E>
where
    I: IntoIterator<Item = (S, E)>,
    S: Into<String>,
{
    pairs.into_iter().map(|(k, v)| (k.into(), v)).collect()
}
