//! Ortholattice terms: syntax tree, parser, printer and the derived terms
//! used by the refutation machinery.

mod builders;
mod parser;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

pub use builders::{
    frame_variables, identity_to_term, rel_ortho, s_term, tdn_term, tdn_variables, x_var,
    xhat_term, z_var, Z_BOT, Z_TOP,
};
pub use parser::parse;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Term {
    Var(String),
    Zero,
    One,
    Meet(Box<Term>, Box<Term>),
    Join(Box<Term>, Box<Term>),
    Ortho(Box<Term>),
}

impl Term {
    pub fn var(name: impl Into<String>) -> Term {
        Term::Var(name.into())
    }

    pub fn meet(a: Term, b: Term) -> Term {
        Term::Meet(Box::new(a), Box::new(b))
    }

    pub fn join(a: Term, b: Term) -> Term {
        Term::Join(Box::new(a), Box::new(b))
    }

    pub fn ortho(a: Term) -> Term {
        Term::Ortho(Box::new(a))
    }

    /// Left-associated join of `terms`; `0` when empty.
    pub fn join_all(terms: impl IntoIterator<Item = Term>) -> Term {
        terms.into_iter().reduce(Term::join).unwrap_or(Term::Zero)
    }

    /// Variables in lexicographic order.
    pub fn vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Var(v) => {
                out.insert(v.clone());
            }
            Term::Zero | Term::One => {}
            Term::Meet(a, b) | Term::Join(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
            Term::Ortho(a) => a.collect_vars(out),
        }
    }

    /// Number of nodes in the tree.
    pub fn size(&self) -> usize {
        match self {
            Term::Var(_) | Term::Zero | Term::One => 1,
            Term::Meet(a, b) | Term::Join(a, b) => 1 + a.size() + b.size(),
            Term::Ortho(a) => 1 + a.size(),
        }
    }

    /// Replaces variables by terms; variables missing from `map` are kept.
    pub fn substitute(&self, map: &BTreeMap<String, Term>) -> Term {
        match self {
            Term::Var(v) => map.get(v).cloned().unwrap_or_else(|| self.clone()),
            Term::Zero | Term::One => self.clone(),
            Term::Meet(a, b) => Term::meet(a.substitute(map), b.substitute(map)),
            Term::Join(a, b) => Term::join(a.substitute(map), b.substitute(map)),
            Term::Ortho(a) => Term::ortho(a.substitute(map)),
        }
    }
}

/// Fully parenthesized: every binary node is wrapped, complements are
/// postfix.
impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) => f.write_str(v),
            Term::Zero => f.write_str("0"),
            Term::One => f.write_str("1"),
            Term::Meet(a, b) => write!(f, "({a} & {b})"),
            Term::Join(a, b) => write!(f, "({a} | {b})"),
            Term::Ortho(a) => write!(f, "{a}'"),
        }
    }
}

pub fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}
