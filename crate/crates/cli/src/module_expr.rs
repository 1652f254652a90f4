//! Module expressions: `U(top,len)`, `I[a,b]`, `#k` or a catalog name,
//! joined by `+`; and brick lists for selecting a sequence.

use mgs_core::{Descriptor, Error, IndecId, ModCat, ModuleSum, Result};

fn numbers(inner: &str, term: &str) -> Result<(usize, usize)> {
    let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
    match parts.as_slice() {
        [x, y] => match (x.parse(), y.parse()) {
            (Ok(x), Ok(y)) => Ok((x, y)),
            _ => Err(Error::Usage(format!("{term}: expected two integers"))),
        },
        _ => Err(Error::Usage(format!("{term}: expected two integers"))),
    }
}

pub fn parse_term(cat: &ModCat, term: &str) -> Result<IndecId> {
    let term = term.trim();
    let nakayama = cat.spec().is_nakayama();
    let descriptor = if let Some(inner) = term.strip_prefix("U(").and_then(|t| t.strip_suffix(')')) {
        if !nakayama {
            return Err(Error::Usage(format!("{term}: uniserial terms need a Nakayama algebra; use I[a,b]")));
        }
        let (top, length) = numbers(inner, term)?;
        Some(Descriptor::Uniserial { top, length })
    } else if let Some(inner) = term.strip_prefix("I[").and_then(|t| t.strip_suffix(']')) {
        if nakayama {
            return Err(Error::Usage(format!("{term}: interval terms need a type-A algebra; use U(top,len)")));
        }
        let (a, b) = numbers(inner, term)?;
        Some(Descriptor::Interval { a, b })
    } else {
        None
    };
    if let Some(d) = descriptor {
        return cat.id_of(d).ok_or_else(|| Error::Usage(format!("{term} is not an indecomposable of this algebra")));
    }
    if let Some(k) = term.strip_prefix('#') {
        let id = k.parse().map_err(|_| Error::Usage(format!("{term}: expected #<id>")))?;
        return cat.check_id(id);
    }
    cat.by_name(term).ok_or_else(|| Error::Usage(format!("{term:?} names no indecomposable")))
}

pub fn parse_module(cat: &ModCat, expr: &str) -> Result<ModuleSum> {
    if expr.trim().is_empty() {
        return Err(Error::Usage("empty module expression".into()));
    }
    let ids = expr.split('+').map(|t| parse_term(cat, t)).collect::<Result<Vec<_>>>()?;
    Ok(ModuleSum::new(ids))
}

/// Split on commas outside parentheses and brackets.
fn split_top_level(s: &str) -> Vec<&str> {
    let (mut depth, mut start, mut out) = (0i32, 0, Vec::new());
    for (i, c) in s.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

pub enum MgsSelector {
    Index(usize),
    Bricks(Vec<IndecId>),
}

/// A bare integer is an enumeration index; anything else is a brick list,
/// optionally wrapped in brackets.
pub fn parse_mgs(cat: &ModCat, arg: &str) -> Result<MgsSelector> {
    let arg = arg.trim();
    if let Ok(i) = arg.parse() {
        return Ok(MgsSelector::Index(i));
    }
    let inner = arg.strip_prefix('[').and_then(|a| a.strip_suffix(']')).unwrap_or(arg);
    let bricks = split_top_level(inner).into_iter().map(|t| parse_term(cat, t)).collect::<Result<Vec<_>>>()?;
    Ok(MgsSelector::Bricks(bricks))
}
