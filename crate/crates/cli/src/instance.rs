//! Instance and certificate file formats.
//!
//! An instance file holds whitespace-separated integers: the modulus
//! `n` first, then exactly `2n - 1` values. Lines whose first non-space
//! character is `#` are comments. A certificate file holds either a
//! single 0/1 string, one character per input position, or
//! whitespace-separated 1-based positions.

use std::io::{self, Write};

use clap::ValueEnum;
use egz_core::{Selection, MAX_MODULUS};

/// Certificate layouts printed by `solve`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    /// One 0/1 character per input position.
    Mask,
    /// Space-separated 1-based positions of the selected values.
    Indices,
}

fn tokens(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .filter(|line| !line.trim_start().starts_with('#'))
        .flat_map(str::split_whitespace)
}

/// Parses an instance file into `(n, values)`.
pub fn parse_instance(text: &str) -> Result<(u64, Vec<i64>), String> {
    let mut tokens = tokens(text);
    let first = tokens
        .next()
        .ok_or_else(|| "empty instance: expected a modulus".to_string())?;
    let n: u64 = first
        .parse()
        .map_err(|_| format!("modulus {first:?} is not a valid integer"))?;
    if n == 0 || n > MAX_MODULUS {
        return Err(format!(
            "modulus must be between 1 and {MAX_MODULUS}, got {n}"
        ));
    }
    let expected = (2 * n - 1) as usize;
    let mut values = Vec::with_capacity(expected.min(1 << 20));
    for token in tokens {
        if values.len() == expected {
            return Err(format!(
                "expected exactly {expected} values after the modulus, found more"
            ));
        }
        let value: i64 = token
            .parse()
            .map_err(|_| format!("value {token:?} is not a valid integer"))?;
        values.push(value);
    }
    if values.len() != expected {
        return Err(format!(
            "expected {expected} values after the modulus, found {}",
            values.len()
        ));
    }
    Ok((n, values))
}

/// Parses a certificate file into a selection mask for a modulus-`n`
/// instance. Structural problems (bad tokens, out-of-range or repeated
/// positions) are errors; a wrong selection count is left for
/// verification to judge.
pub fn parse_certificate(text: &str, n: u64) -> Result<Vec<bool>, String> {
    let len = (2 * n - 1) as usize;
    let toks: Vec<&str> = tokens(text).collect();
    if toks.is_empty() {
        return Err("empty certificate".to_string());
    }
    if toks.len() == 1 && toks[0].len() == len && toks[0].chars().all(|c| c == '0' || c == '1') {
        return Ok(toks[0].chars().map(|c| c == '1').collect());
    }
    let mut mask = vec![false; len];
    for tok in toks {
        let position: usize = tok.parse().map_err(|_| {
            format!("certificate token {tok:?} is neither a 0/1 mask nor a position")
        })?;
        if position == 0 || position > len {
            return Err(format!("position {position} is out of range 1..={len}"));
        }
        if mask[position - 1] {
            return Err(format!("position {position} appears twice"));
        }
        mask[position - 1] = true;
    }
    Ok(mask)
}

/// Writes a selection in the requested layout, newline terminated.
pub fn write_certificate(
    out: &mut impl Write,
    selection: &Selection,
    format: OutputFormat,
) -> io::Result<()> {
    match format {
        OutputFormat::Mask => {
            let mut line = String::with_capacity(selection.mask().len());
            line.extend(selection.mask().iter().map(|&b| if b { '1' } else { '0' }));
            writeln!(out, "{line}")
        }
        OutputFormat::Indices => {
            for (i, pos) in selection.selected_positions().enumerate() {
                if i > 0 {
                    write!(out, " ")?;
                }
                write!(out, "{}", pos + 1)?;
            }
            writeln!(out)
        }
    }
}
