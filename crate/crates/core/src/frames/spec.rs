//! Frame spec mini-language.
//!
//! A spec is a whitespace-separated list of terms `side:operator`, where
//! `side` is `L` or `R` (omitted means `L`). An operator is
//!
//! * a catalog name (`id`, `A1`, `A2`, `A3`, `I`, `I1`, `I2`),
//! * a multiplication by a unit: `*i` is `x ↦ x·i`, `i*` is `x ↦ i·x`
//!   (likewise for `j`, `k`),
//! * a concatenation of the above, read as composition: `A1A1` is `A1 ∘ A1`
//!   and `A2I` applies `I` first,
//! * or an inline matrix `[r0;r1;r2;r3]` with rows of four comma-separated
//!   rationals, e.g. `[1,0,0,0;0,-1,0,0;0,0,-1,0;0,0,0,-1]`.
//!
//! `parse_frame` also accepts the builtin frame names.

use super::{BuiltinFrame, Frame, FrameTerm, Side};
use crate::autos;
use crate::error::{Error, Result};
use crate::linop::Operator4;
use crate::scalarq::{Quaternion, Rational};

const ATOMS: [&str; 13] = ["id", "A1", "A2", "A3", "I1", "I2", "I", "*i", "*j", "*k", "i*", "j*", "k*"];

fn atom(name: &str) -> Operator4 {
    let unit = |c: char| Quaternion::unit(" ijk".find(c).expect("unit letter"));
    match name {
        "*i" | "*j" | "*k" => Operator4::right_mul(&unit(name.chars().nth(1).unwrap())),
        "i*" | "j*" | "k*" => Operator4::left_mul(&unit(name.chars().next().unwrap())),
        _ => autos::catalog(name).expect("atom is a catalog name"),
    }
}

fn parse_inline_matrix(text: &str) -> Result<Operator4> {
    let bad = |why: &str| Error::Parse(format!("inline matrix `{text}`: {why}"));
    let inner = text
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| bad("must be enclosed in brackets"))?;
    let rows: Vec<&str> = inner.split(';').collect();
    if rows.len() != 4 {
        return Err(bad("needs 4 rows separated by `;`"));
    }
    let mut entries: [[Rational; 4]; 4] = Default::default();
    for (s, row) in rows.iter().enumerate() {
        let cells: Vec<&str> = row.split(',').collect();
        if cells.len() != 4 {
            return Err(bad("each row needs 4 entries separated by `,`"));
        }
        for (t, cell) in cells.iter().enumerate() {
            entries[s][t] = cell.parse()?;
        }
    }
    Ok(Operator4::from_rows(entries))
}

pub fn parse_operator(text: &str) -> Result<Operator4> {
    let text = text.trim();
    if text.starts_with('[') {
        return parse_inline_matrix(text);
    }
    if text.is_empty() {
        return Err(Error::Parse("empty operator name".to_string()));
    }
    let mut rest = text;
    let mut op = Operator4::identity();
    while !rest.is_empty() {
        let name = ATOMS
            .iter()
            .find(|a| rest.starts_with(**a))
            .ok_or_else(|| Error::UnknownName(text.to_string()))?;
        op = op.compose(&atom(name));
        rest = &rest[name.len()..];
    }
    Ok(op)
}

/// Splits on whitespace outside brackets.
fn tokens(text: &str) -> Result<Vec<String>> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut depth = 0usize;
    for ch in text.chars() {
        match ch {
            '[' => depth += 1,
            ']' => {
                depth = depth
                    .checked_sub(1)
                    .ok_or_else(|| Error::Parse(format!("unbalanced `]` in `{text}`")))?
            }
            c if c.is_whitespace() && depth == 0 => {
                if !cur.is_empty() {
                    out.push(std::mem::take(&mut cur));
                }
                continue;
            }
            c if c.is_whitespace() => continue,
            _ => {}
        }
        cur.push(ch);
    }
    if depth != 0 {
        return Err(Error::Parse(format!("unbalanced `[` in `{text}`")));
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    Ok(out)
}

fn parse_term(token: &str) -> Result<FrameTerm> {
    let (side, name) = match token.split_once(':') {
        Some(("L", name)) => (Side::Left, name),
        Some(("R", name)) => (Side::Right, name),
        Some((side, _)) => return Err(Error::Parse(format!("unknown side `{side}` in `{token}`"))),
        None => (Side::Left, token),
    };
    Ok(FrameTerm::new(side, parse_operator(name)?, name))
}

/// Parses a list of terms; a builtin frame name expands to its four terms.
pub fn parse_terms(text: &str) -> Result<Vec<FrameTerm>> {
    let trimmed = text.trim();
    if let Ok(builtin) = trimmed.parse::<BuiltinFrame>() {
        return Ok(builtin.frame().terms().to_vec());
    }
    let terms = tokens(trimmed)?.iter().map(|t| parse_term(t)).collect::<Result<Vec<_>>>()?;
    if terms.is_empty() {
        return Err(Error::Parse("empty frame spec".to_string()));
    }
    Ok(terms)
}

/// A builtin frame name or a spec with exactly four terms.
pub fn parse_frame(text: &str) -> Result<Frame> {
    let trimmed = text.trim();
    if let Ok(builtin) = trimmed.parse::<BuiltinFrame>() {
        return Ok(builtin.frame());
    }
    let terms = parse_terms(trimmed)?;
    let name = super::terms_spec(&terms);
    Frame::new(name, terms)
}
