//! Text form of multivectors: `c0 + c1*e1 + c12*e1^e2 + ...`.
//!
//! Blades are written as `^`-joined generator names with ascending indices.
//! On the exact backends printing followed by parsing is the identity.

use crate::blade::Blade;
use crate::error::{CliffError, Result};
use crate::multivector::Multivector;
use crate::scalar::Scalar;
use crate::signature::{reorder_swaps, Signature};

pub fn format_multivector<S: Scalar>(x: &Multivector<S>) -> String {
    let mut terms: Vec<(Blade, &S)> = x.terms().collect();
    if terms.is_empty() {
        return "0".to_string();
    }
    terms.sort_by_key(|(b, _)| (b.grade(), b.indices().collect::<Vec<_>>()));
    let mut out = String::new();
    for (i, (blade, coeff)) in terms.into_iter().enumerate() {
        let c = coeff.format_coeff();
        let piece = match c.as_str() {
            _ if blade == Blade::SCALAR => c,
            "1" => blade.to_string(),
            "-1" => format!("-{blade}"),
            _ => format!("{c}*{blade}"),
        };
        if i == 0 {
            out.push_str(&piece);
        } else if let Some(rest) = piece.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&piece);
        }
    }
    out
}

fn parse_err(text: &str, reason: impl Into<String>) -> CliffError {
    CliffError::Parse {
        text: text.to_string(),
        reason: reason.into(),
    }
}

/// Split at top-level `+`/`-` signs, keeping each sign with its term.
fn split_terms(text: &str) -> Vec<String> {
    let chars: Vec<char> = text.chars().collect();
    let mut terms = Vec::new();
    let mut current = String::new();
    let mut depth = 0i32;
    for (i, &c) in chars.iter().enumerate() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' | '-' if depth == 0 => {
                let prev: Vec<char> = chars[..i].iter().rev().take(2).copied().collect();
                let exponent = matches!(prev.first(), Some('e' | 'E'))
                    && matches!(prev.get(1), Some(d) if d.is_ascii_digit() || *d == '.');
                if !exponent && !current.trim().is_empty() {
                    terms.push(std::mem::take(&mut current));
                }
            }
            _ => {}
        }
        current.push(c);
    }
    if !current.trim().is_empty() {
        terms.push(current);
    }
    terms
}

fn parse_blade(text: &str, sig: Signature, full: &str) -> Result<(bool, Blade)> {
    let mut indices = Vec::new();
    for factor in text.split('^') {
        let factor = factor.trim();
        let idx: u32 = factor
            .strip_prefix('e')
            .and_then(|d| d.parse().ok())
            .ok_or_else(|| parse_err(full, format!("bad generator {factor:?}")))?;
        if idx == 0 || idx > sig.n() {
            return Err(parse_err(
                full,
                format!("generator e{idx} outside 1..={}", sig.n()),
            ));
        }
        if indices.contains(&idx) {
            return Err(parse_err(full, format!("repeated generator e{idx}")));
        }
        indices.push(idx);
    }
    // Distinct orthogonal generators anticommute, so any order is accepted
    // and sorted with the permutation sign.
    let mut negative = false;
    let mut acc = 0u32;
    for idx in indices {
        let bit = 1u32 << (idx - 1);
        negative ^= reorder_swaps(acc, bit) % 2 == 1;
        acc |= bit;
    }
    Ok((negative, Blade::from_mask(acc)))
}

/// Parse the text form in the given signature.
pub fn parse_multivector<S: Scalar>(sig: Signature, text: &str) -> Result<Multivector<S>> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(parse_err(text, "empty input"));
    }
    let mut terms = Vec::new();
    for raw in split_terms(trimmed) {
        let mut term = raw.trim();
        let mut negative = false;
        while let Some(rest) = term.strip_prefix(['+', '-']) {
            negative ^= term.starts_with('-');
            term = rest.trim_start();
        }
        if term.is_empty() {
            return Err(parse_err(text, "dangling sign"));
        }
        let (coeff_text, blade_text) = match term.rsplit_once('*') {
            Some((c, b)) => (c.trim(), Some(b.trim())),
            None if term.starts_with('e') => ("1", Some(term)),
            None => (term, None),
        };
        let mut coeff = S::parse_coeff(coeff_text)
            .ok_or_else(|| parse_err(text, format!("bad coefficient {coeff_text:?}")))?;
        let blade = match blade_text {
            Some(b) => {
                let (flip, blade) = parse_blade(b, sig, text)?;
                if flip {
                    coeff = -coeff;
                }
                blade
            }
            None => Blade::SCALAR,
        };
        if negative {
            coeff = -coeff;
        }
        terms.push((blade, coeff));
    }
    Ok(Multivector::from_terms(sig, terms))
}
