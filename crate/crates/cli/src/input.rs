//! Reading terms, JSON documents and subspace arguments.

use std::fs;
use std::io::Read;

use anyhow::{bail, Context, Result};
use serde_json::Value;

use molq_core::json::subspace_from_value;
use molq_core::term::parse;
use molq_core::{Field, Subspace, Term};

/// `@path` reads a file, `-` reads stdin, anything else is taken literally.
pub fn text_arg(arg: &str) -> Result<String> {
    if let Some(path) = arg.strip_prefix('@') {
        return fs::read_to_string(path).with_context(|| format!("reading {path}"));
    }
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
        return Ok(s);
    }
    Ok(arg.to_string())
}

/// A JSON document given inline, as `@path`, as `-`, or as a bare path.
pub fn json_arg(arg: &str) -> Result<Value> {
    let trimmed = arg.trim_start();
    let text = if arg.starts_with('@') || arg == "-" || trimmed.starts_with('{') || trimmed.starts_with('[') {
        text_arg(arg)?
    } else {
        fs::read_to_string(arg).with_context(|| format!("reading {arg}"))?
    };
    serde_json::from_str(&text).with_context(|| format!("parsing JSON from {arg}"))
}

pub fn term_arg(arg: &str) -> Result<Term> {
    let text = text_arg(arg)?;
    Ok(parse(text.trim())?)
}

/// `0`, `1` (with a known ambient) or a subspace document.
pub fn subspace_arg<F: Field>(arg: &str, dim: Option<usize>) -> Result<Subspace<F>> {
    let bound = |d: Option<usize>| d.context("`0` and `1` need --dim");
    let u = match arg.trim() {
        "0" => Subspace::zero(bound(dim)?),
        "1" => Subspace::full(bound(dim)?),
        _ => subspace_from_value::<F>(&json_arg(arg)?)?.0,
    };
    if let Some(d) = dim {
        if u.ambient() != d {
            bail!("subspace has ambient {}, expected {d}", u.ambient());
        }
    }
    Ok(u)
}

/// Splits `name=value`.
pub fn binding(arg: &str) -> Result<(String, String)> {
    match arg.split_once('=') {
        Some((k, v)) if !k.trim().is_empty() => Ok((k.trim().to_string(), v.to_string())),
        _ => bail!("expected NAME=VALUE, got `{arg}`"),
    }
}
