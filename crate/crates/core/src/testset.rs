//! Universal-test-set semantics over finite candidate sets, and the witness
//! construction that defeats every finite candidate in `L(Q^d)`.
//!
//! A term holds over `T` when it evaluates to 1 under every substitution
//! with values in `T`. For `n = |T| + 1` the term `tᵈₙ` holds over `T` by
//! pigeonhole (two of the `x` variables coincide), yet evaluates to the
//! hyperplane `a_1 ∨ ... ∨ a_{d-1}` on the coordinate frame with `n`
//! distinct atoms on the line `a_0 ∨ a_1`.

use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::frame::{canonical_frame, line_atoms, normalize_frame};
pub use crate::par::Execution;
use crate::lattice::{eval, Ortholattice, Substitution};
use crate::search::{Compiled, FrameSlots, Search};
use crate::subspace::{Subspace, SubspaceLattice};
use crate::term::{frame_variables, tdn_term, tdn_variables, x_var, Term};

pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// A finite set of pairwise distinct subspaces of one `F^d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TestSet<F: Field> {
    elements: Vec<Subspace<F>>,
}

impl<F: Field> TestSet<F> {
    pub fn new(elements: Vec<Subspace<F>>) -> Result<Self> {
        let Some(first) = elements.first() else {
            return Err(Error::InvalidArgument("test set is empty".into()));
        };
        let ambient = first.ambient();
        if let Some(bad) = elements.iter().find(|e| e.ambient() != ambient) {
            return Err(Error::AmbientMismatch { left: ambient, right: bad.ambient() });
        }
        for (i, e) in elements.iter().enumerate() {
            if elements[..i].contains(e) {
                return Err(Error::InvalidArgument(format!("test set element {i} is a duplicate")));
            }
        }
        Ok(TestSet { elements })
    }

    pub fn elements(&self) -> &[Subspace<F>] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn ambient(&self) -> usize {
        self.elements[0].ambient()
    }

    pub fn subset(&self, keep: &[usize]) -> Result<Self> {
        TestSet::new(keep.iter().map(|&i| self.elements[i].clone()).collect())
    }
}

/// Replace the values of a block of frame variables, read as
/// `(a⊥, a_0, ..., a_d, a⊤)`, by their frame normalization before evaluating.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrameNormalization {
    pub d: usize,
    pub vars: Vec<String>,
}

impl FrameNormalization {
    /// The `z`-block of `tᵈₙ`.
    pub fn tdn(d: usize) -> Self {
        FrameNormalization { d, vars: frame_variables(d) }
    }
}

#[derive(Debug, Clone)]
pub struct SearchConfig {
    /// Maximum number of substitutions a search may enumerate.
    pub budget: u64,
    pub execution: Execution,
    pub frame: Option<FrameNormalization>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { budget: DEFAULT_BUDGET, execution: Execution::default(), frame: None }
    }
}

impl SearchConfig {
    pub fn with_frame(mut self, frame: FrameNormalization) -> Self {
        self.frame = Some(frame);
        self
    }

    pub fn with_execution(mut self, execution: Execution) -> Self {
        self.execution = execution;
        self
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample<F: Field> {
    /// Position in odometer order (first variable most significant).
    pub index: u64,
    pub substitution: Substitution<Subspace<F>>,
    pub value: Subspace<F>,
}

#[derive(Debug, Clone)]
pub struct Verdict<F: Field> {
    pub holds: bool,
    pub counterexample: Option<Counterexample<F>>,
    /// Size of the substitution space.
    pub total: u64,
    /// Substitutions examined in odometer order up to the verdict.
    pub examined: u64,
    pub elapsed: Duration,
}

/// `|T|^vars`, or `None` on overflow.
pub fn search_space(vars: usize, set_size: usize) -> Option<u64> {
    u64::try_from(set_size).ok()?.checked_pow(u32::try_from(vars).ok()?)
}

fn prepare<F: Field>(
    term: &Term,
    vars: &[String],
    t: &TestSet<F>,
    cfg: &SearchConfig,
) -> Result<(u64, Option<FrameSlots>)> {
    if t.is_empty() {
        return Err(Error::InvalidArgument("test set is empty".into()));
    }
    for (i, v) in vars.iter().enumerate() {
        if vars[..i].contains(v) {
            return Err(Error::InvalidArgument(format!("variable `{v}` listed twice")));
        }
    }
    if let Some(missing) = term.vars().into_iter().find(|v| !vars.contains(v)) {
        return Err(Error::UnboundVariable(missing));
    }
    let frame = match &cfg.frame {
        None => None,
        Some(fr) => {
            if fr.vars.len() != fr.d + 3 {
                return Err(Error::InvalidArgument(format!(
                    "frame normalization for d={} needs {} variables",
                    fr.d,
                    fr.d + 3
                )));
            }
            let slots = fr
                .vars
                .iter()
                .map(|v| vars.iter().position(|x| x == v).ok_or_else(|| Error::UnboundVariable(v.clone())))
                .collect::<Result<Vec<_>>>()?;
            Some(FrameSlots { d: fr.d, slots })
        }
    };
    let total = search_space(vars.len(), t.len())
        .filter(|&n| n <= cfg.budget)
        .ok_or_else(|| Error::BudgetExceeded {
            needed: format!("{}^{}", t.len(), vars.len()),
            budget: cfg.budget,
        })?;
    Ok((total, frame))
}

fn decode<F: Field>(index: u64, vars: &[String], t: &TestSet<F>) -> Vec<Subspace<F>> {
    let base = t.len() as u64;
    let mut out = vec![t.elements[0].clone(); vars.len()];
    let mut rest = index;
    for slot in out.iter_mut().rev() {
        *slot = t.elements[(rest % base) as usize].clone();
        rest /= base;
    }
    out
}

fn to_substitution<F: Field>(vars: &[String], values: Vec<Subspace<F>>) -> Substitution<Subspace<F>> {
    vars.iter().cloned().zip(values).collect()
}

/// Exhaustively checks `term = 1` over all substitutions `vars → T`.
///
/// Substitutions are enumerated in odometer order over `vars` (first variable
/// most significant); on failure the first failing substitution in that order
/// is reported, independently of the execution mode.
pub fn holds_over<F: Field>(
    term: &Term,
    vars: &[String],
    t: &TestSet<F>,
    cfg: &SearchConfig,
) -> Result<Verdict<F>> {
    let started = Instant::now();
    let (total, frame) = prepare(term, vars, t, cfg)?;
    let compiled = Compiled::new(term, vars)?;
    let search = Search { compiled: &compiled, elements: &t.elements, arity: vars.len(), frame };
    let failure = search.run(total, cfg.execution);
    let elapsed = started.elapsed();
    Ok(match failure {
        None => Verdict { holds: true, counterexample: None, total, examined: total, elapsed },
        Some((index, values, value)) => Verdict {
            holds: false,
            counterexample: Some(Counterexample { index, substitution: to_substitution(vars, values), value }),
            total,
            examined: index + 1,
            elapsed,
        },
    })
}

/// Same contract as [`holds_over`], evaluated naively: one tree walk per
/// substitution with no sharing or memoization. Serves as the independent
/// check of the optimized search.
pub fn holds_over_reference<F: Field>(
    term: &Term,
    vars: &[String],
    t: &TestSet<F>,
    cfg: &SearchConfig,
) -> Result<Verdict<F>> {
    let started = Instant::now();
    let (total, _) = prepare(term, vars, t, cfg)?;
    let lat = SubspaceLattice::<F>::new(t.ambient());
    for index in 0..total {
        let values = decode(index, vars, t);
        let mut sub = to_substitution(vars, values.clone());
        if let Some(fr) = &cfg.frame {
            let tuple: Vec<Subspace<F>> = fr.vars.iter().map(|v| sub[v].clone()).collect();
            let nf = normalize_frame(fr.d, &tuple)?;
            for (v, s) in fr.vars.iter().zip(nf.to_tuple()) {
                sub.insert(v.clone(), s);
            }
        }
        let value = eval(&lat, term, &sub)?;
        if value != lat.one() {
            return Ok(Verdict {
                holds: false,
                counterexample: Some(Counterexample {
                    index,
                    substitution: to_substitution(vars, values),
                    value,
                }),
                total,
                examined: index + 1,
                elapsed: started.elapsed(),
            });
        }
    }
    Ok(Verdict { holds: true, counterexample: None, total, examined: total, elapsed: started.elapsed() })
}

/// Evidence that a finite `T ⊂ L(F^d)` is not a universal test set.
#[derive(Debug, Clone)]
pub struct RefutationCertificate<F: Field> {
    pub d: usize,
    pub n: usize,
    pub term: Term,
    pub vars: Vec<String>,
    /// Coordinate frame on the `z` variables, distinct line atoms on `x1..xn`.
    pub witness: Substitution<Subspace<F>>,
    pub witness_value: Subspace<F>,
    /// Exhaustive confirmation that the term holds over `T`.
    pub testset_verdict: Verdict<F>,
}

/// The substitution refuting `tᵈₙ`: the coordinate frame of `F^d` on the
/// frame variables and `n` distinct atoms of `a_0 ∨ a_1` on `x1..xn`.
pub fn witness_substitution<F: Field>(d: usize, n: usize) -> Result<Substitution<Subspace<F>>> {
    let frame = canonical_frame::<F>(d)?;
    let mut sub: Substitution<Subspace<F>> = frame_variables(d).into_iter().zip(frame.to_tuple()).collect();
    for (i, atom) in line_atoms(&frame, n)?.into_iter().enumerate() {
        sub.insert(x_var(i + 1), atom);
    }
    Ok(sub)
}

/// Builds the certificate for `n = |T| + 1` in `L(F^d)`, `d` the ambient
/// dimension of `T`.
pub fn refute_testset<F: Field>(t: &TestSet<F>, cfg: &SearchConfig) -> Result<RefutationCertificate<F>> {
    let d = t.ambient();
    if d < 2 {
        return Err(Error::InvalidArgument(format!("refutation needs d >= 2, got {d}")));
    }
    let n = t.len() + 1;
    let term = tdn_term(d, n)?;
    let vars = tdn_variables(d, n);
    let witness = witness_substitution::<F>(d, n)?;
    let lat = SubspaceLattice::<F>::new(d);
    let witness_value = eval(&lat, &term, &witness)?;
    if witness_value == lat.one() {
        return Err(Error::InvalidArgument("witness evaluates to 1".into()));
    }
    let cfg = cfg.clone().with_frame(FrameNormalization::tdn(d));
    let testset_verdict = holds_over(&term, &vars, t, &cfg)?;
    if !testset_verdict.holds {
        return Err(Error::InvalidArgument("witness term fails over the test set".into()));
    }
    Ok(RefutationCertificate { d, n, term, vars, witness, witness_value, testset_verdict })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CertificateCheck {
    /// Re-evaluated witness value matches the certificate.
    pub witness_value_matches: bool,
    pub witness_below_top: bool,
    /// Naive exhaustive re-check over `T` finds no failing substitution.
    pub holds_over_testset: bool,
    pub term_matches: bool,
}

impl CertificateCheck {
    pub fn is_valid(&self) -> bool {
        self.witness_value_matches && self.witness_below_top && self.holds_over_testset && self.term_matches
    }
}

/// Independent re-verification: rebuilds the term, re-evaluates the witness
/// and re-runs the search with the naive evaluator.
pub fn verify_certificate<F: Field>(
    cert: &RefutationCertificate<F>,
    t: &TestSet<F>,
    budget: u64,
) -> Result<CertificateCheck> {
    let lat = SubspaceLattice::<F>::new(t.ambient());
    let term_matches = tdn_term(cert.d, cert.n)? == cert.term && cert.n > t.len();
    let value = eval(&lat, &cert.term, &cert.witness)?;
    let cfg = SearchConfig::default()
        .with_budget(budget)
        .with_execution(Execution::Sequential)
        .with_frame(FrameNormalization::tdn(cert.d));
    let verdict = holds_over_reference(&cert.term, &cert.vars, t, &cfg)?;
    Ok(CertificateCheck {
        witness_value_matches: value == cert.witness_value,
        witness_below_top: !lat.leq(&lat.one(), &value),
        holds_over_testset: verdict.holds,
        term_matches,
    })
}
