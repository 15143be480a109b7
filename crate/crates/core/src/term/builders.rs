//! Derived terms: relative orthocomplement, identity-to-term translation,
//! the interval complement term `s`, and the witness family `x̂ᵈᵢ`, `tᵈₙ`.

use super::Term;
use crate::error::{Error, Result};

/// Variable standing for the bottom `a⊥` of a frame.
pub const Z_BOT: &str = "z_bot";
/// Variable standing for the top `a⊤` of a frame.
pub const Z_TOP: &str = "z_top";

/// Frame component variable `z_k`.
pub fn z_var(k: usize) -> String {
    format!("z{k}")
}

pub fn x_var(i: usize) -> String {
    format!("x{i}")
}

/// `(x' ∧ c) ∨ b`, the orthocomplement of `x` relative to `[b, c]`.
pub fn rel_ortho(x: Term, b: Term, c: Term) -> Term {
    Term::join(Term::meet(Term::ortho(x), c), b)
}

/// `(t1 ∧ t2) ∨ (t1' ∧ t2')`.
///
/// In a modular ortholattice this is 1 exactly when `t1` and `t2` take the
/// same value: meeting with `a` gives `a = a ∧ b` by modularity.
pub fn identity_to_term(t1: Term, t2: Term) -> Term {
    Term::join(
        Term::meet(t1.clone(), t2.clone()),
        Term::meet(Term::ortho(t1), Term::ortho(t2)),
    )
}

/// Complement of `y2` in `[y0, y3]`, equal to `y1` whenever `y1` already is
/// one (for `y0 ≤ y1, y2 ≤ y3`).
///
/// First `d1` is the complement of `y1 ∧ y2` relative to `[y0, y1]`, then the
/// result is the complement of `y1 ∨ y2` relative to `[d1, y3]`.
pub fn s_term(y0: Term, y1: Term, y2: Term, y3: Term) -> Term {
    let d1 = rel_ortho(Term::meet(y1.clone(), y2.clone()), y0, y1.clone());
    rel_ortho(Term::join(y1, y2), d1, y3)
}

/// `x̂ᵈᵢ = s(z⊥, (xᵢ ∧ (z0 ∨ z1)) ∨ z⊥, z1, z0 ∨ z1)`.
pub fn xhat_term(d: usize, i: usize) -> Result<Term> {
    if d < 2 {
        return Err(Error::InvalidArgument(format!("x̂ needs d >= 2, got {d}")));
    }
    if i < 1 {
        return Err(Error::InvalidArgument("x̂ index starts at 1".into()));
    }
    let bot = Term::var(Z_BOT);
    let z01 = Term::join(Term::var(z_var(0)), Term::var(z_var(1)));
    let lifted = Term::join(Term::meet(Term::var(x_var(i)), z01.clone()), bot.clone());
    Ok(s_term(bot, lifted, Term::var(z_var(1)), z01))
}

/// `tᵈₙ = (z⊤)' ∨ ⋁_{k=1}^{d-1} z_k ∨ ⋁_{1≤i<j≤n} (x̂ᵢ ∧ x̂ⱼ)`, joined left to
/// right in that order.
pub fn tdn_term(d: usize, n: usize) -> Result<Term> {
    if d < 2 || n < 2 {
        return Err(Error::InvalidArgument(format!("tdn needs d >= 2 and n >= 2, got d={d}, n={n}")));
    }
    let xhats = (1..=n).map(|i| xhat_term(d, i)).collect::<Result<Vec<_>>>()?;
    let mut parts = vec![Term::ortho(Term::var(Z_TOP))];
    parts.extend((1..d).map(|k| Term::var(z_var(k))));
    for i in 0..n {
        for j in i + 1..n {
            parts.push(Term::meet(xhats[i].clone(), xhats[j].clone()));
        }
    }
    Ok(Term::join_all(parts))
}

/// Frame variables in tuple order `(z⊥, z0, ..., zd, z⊤)`.
pub fn frame_variables(d: usize) -> Vec<String> {
    let mut v = vec![Z_BOT.to_string()];
    v.extend((0..=d).map(z_var));
    v.push(Z_TOP.to_string());
    v
}

/// Canonical variable list of `tᵈₙ`: the frame variables, then `x1..xn`.
pub fn tdn_variables(d: usize, n: usize) -> Vec<String> {
    let mut v = frame_variables(d);
    v.extend((1..=n).map(x_var));
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::parse;

    #[test]
    fn rel_ortho_shape() {
        let t = rel_ortho(Term::var("x"), Term::Zero, Term::One);
        assert_eq!(t.to_string(), "((x' & 1) | 0)");
    }

    #[test]
    fn identity_shape() {
        let t = identity_to_term(Term::var("x"), Term::var("x"));
        assert_eq!(t, parse("x & x | x' & x'").unwrap());
    }

    #[test]
    fn s_shape() {
        let t = s_term(Term::var("a"), Term::var("b"), Term::var("c"), Term::var("d"));
        let expected = parse("(b | c)' & d | ((b & c)' & b | a)").unwrap();
        assert_eq!(t, expected);
    }

    #[test]
    fn xhat_rejects_small_d() {
        assert!(xhat_term(1, 1).is_err());
        assert!(xhat_term(2, 0).is_err());
        let vars: Vec<_> = xhat_term(3, 2).unwrap().vars().into_iter().collect();
        assert_eq!(vars, ["x2", "z0", "z1", "z_bot"]);
    }

    #[test]
    fn tdn_two_two() {
        let t = tdn_term(2, 2).unwrap();
        let xh = |i| xhat_term(2, i).unwrap();
        let expected = Term::join(
            Term::join(Term::ortho(Term::var(Z_TOP)), Term::var("z1")),
            Term::meet(xh(1), xh(2)),
        );
        assert_eq!(t, expected);
        assert_eq!(tdn_variables(2, 2), ["z_bot", "z0", "z1", "z2", "z_top", "x1", "x2"]);
    }

    #[test]
    fn tdn_rejects_small_parameters() {
        assert!(tdn_term(1, 3).is_err());
        assert!(tdn_term(3, 1).is_err());
    }

    #[test]
    fn tdn_variable_count() {
        for d in 2..=5 {
            for n in 2..=5 {
                let t = tdn_term(d, n).unwrap();
                let listed = tdn_variables(d, n);
                assert_eq!(listed.len(), d + 3 + n);
                // z_d never occurs syntactically: it matters only through the
                // frame normalization applied to the whole z-tuple.
                let mut expected: std::collections::BTreeSet<String> = listed.into_iter().collect();
                expected.remove(&z_var(d));
                assert_eq!(t.vars(), expected, "d={d} n={n}");
            }
        }
    }
}
