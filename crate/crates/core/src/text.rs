//! Line-oriented text formats.
//!
//! ```text
//! # a comment
//! modrep p=2 dim=2 gens=1
//! 0 1
//! 0 0
//! ```
//!
//! ```text
//! series terms=3
//! term label=1 dim=0
//! term label=2 dim=1
//! 1 0
//! term label=3 dim=2
//! 1 0
//! 0 1
//! ```
//!
//! ```text
//! subspace dim=1
//! 0 1 0
//! ```
//!
//! Blank lines and lines starting with `#` are ignored everywhere.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::module::ModuleRep;
use crate::ordinal::Ordinal;
use crate::series::NormalSeries;
use crate::subspace::SubspaceBasis;

struct Lines<'a> {
    inner: std::iter::Peekable<Box<dyn Iterator<Item = (usize, &'a str)> + 'a>>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let it: Box<dyn Iterator<Item = (usize, &'a str)> + 'a> = Box::new(
            text.lines()
                .enumerate()
                .map(|(i, l)| (i + 1, l.trim()))
                .filter(|(_, l)| !l.is_empty() && !l.starts_with('#')),
        );
        Lines { inner: it.peekable(), last: 0 }
    }

    fn next(&mut self, what: &str) -> Result<(usize, &'a str)> {
        match self.inner.next() {
            Some((n, l)) => {
                self.last = n;
                Ok((n, l))
            }
            None => Err(parse_err(self.last + 1, format!("unexpected end of input, expected {what}"))),
        }
    }

    fn is_done(&mut self) -> bool {
        self.inner.peek().is_none()
    }

    fn expect_end(&mut self) -> Result<()> {
        match self.inner.next() {
            None => Ok(()),
            Some((n, _)) => Err(parse_err(n, "unexpected trailing content")),
        }
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

/// Splits `keyword k1=v1 k2=v2 …`, requiring exactly the given keys in order.
fn header<'a>(line_no: usize, line: &'a str, keyword: &str, keys: &[&str]) -> Result<Vec<&'a str>> {
    let mut tokens = line.split_whitespace();
    if tokens.next() != Some(keyword) {
        return Err(parse_err(line_no, format!("expected `{keyword}` header")));
    }
    let mut values = Vec::with_capacity(keys.len());
    for key in keys {
        let tok = tokens.next().ok_or_else(|| parse_err(line_no, format!("missing `{key}=`")))?;
        let value = tok
            .strip_prefix(key)
            .and_then(|rest| rest.strip_prefix('='))
            .ok_or_else(|| parse_err(line_no, format!("expected `{key}=<value>`, found `{tok}`")))?;
        values.push(value);
    }
    if let Some(extra) = tokens.next() {
        return Err(parse_err(line_no, format!("unexpected token `{extra}`")));
    }
    Ok(values)
}

fn count(line_no: usize, s: &str) -> Result<usize> {
    s.parse().map_err(|_| parse_err(line_no, format!("invalid count `{s}`")))
}

fn entries(line_no: usize, line: &str, expected: usize) -> Result<Vec<u64>> {
    let v = line
        .split_whitespace()
        .map(|t| t.parse::<u64>().map_err(|_| parse_err(line_no, format!("invalid entry `{t}`"))))
        .collect::<Result<Vec<_>>>()?;
    if v.len() != expected {
        return Err(parse_err(line_no, format!("expected {expected} entries, found {}", v.len())));
    }
    Ok(v)
}

fn vector(line_no: usize, line: &str, field: FieldSpec, dim: usize) -> Result<Vec<u32>> {
    let raw = entries(line_no, line, dim)?;
    raw.into_iter()
        .map(|x| {
            if x < field.modulus() as u64 {
                Ok(x as u32)
            } else {
                Err(parse_err(line_no, format!("entry {x} out of range for GF({})", field.modulus())))
            }
        })
        .collect()
}

pub fn parse_module(text: &str) -> Result<ModuleRep> {
    let mut lines = Lines::new(text);
    let (n, h) = lines.next("`modrep` header")?;
    let vals = header(n, h, "modrep", &["p", "dim", "gens"])?;
    let p: u64 = vals[0].parse().map_err(|_| parse_err(n, format!("invalid modulus `{}`", vals[0])))?;
    let dim = count(n, vals[1])?;
    let k = count(n, vals[2])?;
    // reject a bad modulus before reading entries against it
    FieldSpec::new(p)?;
    let mut gens = Vec::with_capacity(k);
    for g in 0..k {
        let mut m = Vec::with_capacity(dim);
        for _ in 0..dim {
            let (n, l) = lines.next(&format!("row of generator {}", g + 1))?;
            m.push(entries(n, l, dim)?);
        }
        gens.push(m);
    }
    lines.expect_end()?;
    ModuleRep::from_raw(p, dim, &gens)
}

fn push_row(out: &mut String, row: &[u32]) {
    let mut first = true;
    for x in row {
        if !first {
            out.push(' ');
        }
        first = false;
        write!(out, "{x}").expect("writing to a String");
    }
    out.push('\n');
}

pub fn render_module(rep: &ModuleRep) -> String {
    let mut out = format!("modrep p={} dim={} gens={}\n", rep.field().modulus(), rep.dim(), rep.num_gens());
    for g in rep.gens() {
        for r in 0..g.rows() {
            push_row(&mut out, g.row(r));
        }
    }
    out
}

/// Reads one `subspace dim=<r>` block.
fn subspace_block(lines: &mut Lines<'_>, field: FieldSpec, ambient: usize) -> Result<SubspaceBasis> {
    let (n, h) = lines.next("`subspace` header")?;
    let r = count(n, header(n, h, "subspace", &["dim"])?[0])?;
    let mut vecs = Vec::with_capacity(r);
    for _ in 0..r {
        let (n, l) = lines.next("basis vector")?;
        vecs.push(vector(n, l, field, ambient)?);
    }
    let basis = SubspaceBasis::from_vectors(field, ambient, &vecs)?;
    if basis.dim() != r {
        return Err(parse_err(n, format!("block declares dim={r} but its vectors span {}", basis.dim())));
    }
    Ok(basis)
}

/// All `subspace` blocks in `text`, as subspaces of `rep`'s carrier.
pub fn parse_subspaces(text: &str, rep: &ModuleRep) -> Result<Vec<SubspaceBasis>> {
    let mut lines = Lines::new(text);
    let mut out = Vec::new();
    while !lines.is_done() {
        out.push(subspace_block(&mut lines, rep.field(), rep.dim())?);
    }
    Ok(out)
}

pub fn render_subspace(s: &SubspaceBasis) -> String {
    let mut out = format!("subspace dim={}\n", s.dim());
    for r in s.rows() {
        push_row(&mut out, r);
    }
    out
}

/// Reads a series of `rep`. Structure is parsed only; use
/// [`validate_normal_series`](crate::series::validate_normal_series) for the series clauses.
pub fn parse_series(text: &str, rep: &ModuleRep) -> Result<NormalSeries> {
    let mut lines = Lines::new(text);
    let (n, h) = lines.next("`series` header")?;
    let t = count(n, header(n, h, "series", &["terms"])?[0])?;
    let mut terms = Vec::with_capacity(t);
    let mut labels = Vec::with_capacity(t);
    for _ in 0..t {
        let (n, h) = lines.next("`term` header")?;
        let vals = header(n, h, "term", &["label", "dim"])?;
        let label: Ordinal = vals[0].parse().map_err(|e| match e {
            Error::Parse { message, .. } => parse_err(n, message),
            other => other,
        })?;
        let r = count(n, vals[1])?;
        let mut vecs = Vec::with_capacity(r);
        for _ in 0..r {
            let (n, l) = lines.next("basis vector")?;
            vecs.push(vector(n, l, rep.field(), rep.dim())?);
        }
        let basis = SubspaceBasis::from_vectors(rep.field(), rep.dim(), &vecs)?;
        if basis.dim() != r {
            return Err(parse_err(n, format!("term declares dim={r} but its vectors span {}", basis.dim())));
        }
        terms.push(basis);
        labels.push(label);
    }
    lines.expect_end()?;
    Ok(NormalSeries::with_labels(rep.clone(), terms, labels))
}

pub fn render_series(s: &NormalSeries) -> String {
    let mut out = format!("series terms={}\n", s.len());
    for (t, l) in s.terms().iter().zip(s.labels()) {
        writeln!(out, "term label={l} dim={}", t.dim()).expect("writing to a String");
        for r in t.rows() {
            push_row(&mut out, r);
        }
    }
    out
}
