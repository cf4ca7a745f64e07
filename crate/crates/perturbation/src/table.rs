//! CSV emission and parsing of enumerated sequence tables.
//!
//! One row per sequence: 1-based index, concatenated segment tokens, the
//! signed symbolic denominator, and the signed numerical weight under the
//! configuration the table was emitted for. The format is deterministic —
//! emitting the same enumeration twice yields byte-identical text.

use crate::config::IslandChargeConfig;
use crate::ops::SegmentOp;
use crate::sequence::{ChargeSign, EnergyFactor, EnergyTerm, TransferSequence};
use crate::PerturbationError;
use num_traits::ToPrimitive;
use std::fmt::Write as _;

/// Header line of every emitted sequence table.
pub const SEQUENCE_TABLE_HEADER: &str = "index,sequence,denominator_symbolic,denominator_value";

/// Renders a sequence table for `sequences` under `config`.
pub fn emit_sequence_table(
    sequences: &[TransferSequence],
    config: &IslandChargeConfig,
) -> String {
    let mut out = String::new();
    out.push_str(SEQUENCE_TABLE_HEADER);
    out.push('\n');
    for (position, sequence) in sequences.iter().enumerate() {
        let weight = sequence
            .signed_weight(config)
            .to_f64()
            .unwrap_or(f64::NAN);
        let _ = writeln!(
            out,
            "{},{},{},{:.16e}",
            position + 1,
            sequence.sequence_string(),
            sequence.denominator_string(),
            weight
        );
    }
    out
}

/// One parsed row of a sequence table.
#[derive(Debug, Clone, PartialEq)]
pub struct ParsedRow {
    /// 1-based row index as printed.
    pub index: usize,
    /// Segment operators in printed order.
    pub ops: Vec<SegmentOp>,
    /// Sign relative to the table's first row.
    pub sign: i8,
    /// Denominator factors, last intermediate state first.
    pub denominator: Vec<EnergyFactor>,
    /// Signed numerical weight as printed.
    pub value: f64,
}

impl ParsedRow {
    /// Reassembles the row as a [`TransferSequence`] (dropping the printed
    /// index and value).
    pub fn to_sequence(&self) -> TransferSequence {
        TransferSequence {
            ops: self.ops.clone(),
            sign: self.sign,
            denominator: self.denominator.clone(),
        }
    }
}

/// Parses text produced by [`emit_sequence_table`] back into rows.
///
/// Lines starting with `#` are comments and are skipped wherever they
/// appear, so a table embedded in a larger report (metadata lines above,
/// summary lines below) parses the same as a bare table.
pub fn parse_sequence_table(text: &str) -> Result<Vec<ParsedRow>, PerturbationError> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, line)| !line.starts_with('#'));
    match lines.next() {
        Some((_, header)) if header == SEQUENCE_TABLE_HEADER => {}
        Some((line_index, header)) => {
            return Err(PerturbationError::TableParse {
                line: line_index + 1,
                message: format!("unexpected header {header:?}"),
            })
        }
        None => {
            return Err(PerturbationError::TableParse {
                line: 1,
                message: "empty table".to_string(),
            })
        }
    }
    let mut rows = Vec::new();
    for (line_index, line) in lines {
        if line.is_empty() {
            continue;
        }
        let line_number = line_index + 1;
        rows.push(parse_row(line, line_number)?);
    }
    Ok(rows)
}

fn parse_error(line: usize, message: impl Into<String>) -> PerturbationError {
    PerturbationError::TableParse {
        line,
        message: message.into(),
    }
}

fn parse_row(line: &str, line_number: usize) -> Result<ParsedRow, PerturbationError> {
    let fields: Vec<&str> = line.split(',').collect();
    if fields.len() != 4 {
        return Err(parse_error(
            line_number,
            format!("expected 4 comma-separated fields, found {}", fields.len()),
        ));
    }
    let index: usize = fields[0]
        .parse()
        .map_err(|_| parse_error(line_number, format!("bad row index {:?}", fields[0])))?;
    let ops = parse_sequence_string(fields[1], line_number)?;
    let (sign, denominator) = parse_denominator_string(fields[2], line_number)?;
    let value: f64 = fields[3]
        .parse()
        .map_err(|_| parse_error(line_number, format!("bad weight value {:?}", fields[3])))?;
    Ok(ParsedRow {
        index,
        ops,
        sign,
        denominator,
        value,
    })
}

/// Greedy longest-token-first scan of a concatenated segment string.
fn parse_sequence_string(
    text: &str,
    line_number: usize,
) -> Result<Vec<SegmentOp>, PerturbationError> {
    let mut remainder = text;
    let mut ops = Vec::new();
    while !remainder.is_empty() {
        let matched = SegmentOp::ALL
            .iter()
            .copied()
            .find(|op| remainder.starts_with(op.token()));
        match matched {
            Some(op) => {
                ops.push(op);
                remainder = &remainder[op.token().len()..];
            }
            None => {
                return Err(parse_error(
                    line_number,
                    format!("unrecognized segment token at {remainder:?}"),
                ))
            }
        }
    }
    if ops.is_empty() {
        return Err(parse_error(line_number, "empty sequence string"));
    }
    Ok(ops)
}

fn parse_denominator_string(
    text: &str,
    line_number: usize,
) -> Result<(i8, Vec<EnergyFactor>), PerturbationError> {
    let mut remainder = text;
    let sign = if let Some(rest) = remainder.strip_prefix('-') {
        remainder = rest;
        -1
    } else {
        1
    };
    let err = |message: String| parse_error(line_number, message);
    let body = remainder
        .strip_suffix("^-1")
        .ok_or_else(|| err(format!("denominator {text:?} does not end in ^-1")))?;
    let factors = if let Some(inner) = body
        .strip_prefix('(')
        .and_then(|rest| rest.strip_suffix(')'))
    {
        // Parenthesized form: a concatenation of single-term factors.
        let (terms, rest) = parse_terms(inner, None).map_err(&err)?;
        if !rest.is_empty() {
            return Err(err(format!("trailing characters {rest:?} in {text:?}")));
        }
        terms
            .into_iter()
            .map(|term| EnergyFactor { terms: vec![term] })
            .collect()
    } else if let Some(inner) = body
        .strip_prefix('[')
        .and_then(|rest| rest.strip_suffix(']'))
    {
        // Bracketed form: bare single-term factors and parenthesized
        // multi-term factors.
        let mut factors = Vec::new();
        let mut rest = inner;
        while !rest.is_empty() {
            if let Some(after_paren) = rest.strip_prefix('(') {
                let close = after_paren
                    .find(')')
                    .ok_or_else(|| err(format!("unclosed parenthesis in {text:?}")))?;
                let (terms, leftover) =
                    parse_terms(&after_paren[..close], Some('+')).map_err(&err)?;
                if !leftover.is_empty() {
                    return Err(err(format!(
                        "trailing characters {leftover:?} inside factor of {text:?}"
                    )));
                }
                factors.push(EnergyFactor { terms });
                rest = &after_paren[close + 1..];
            } else {
                let (term, leftover) = parse_term(rest).map_err(&err)?;
                factors.push(EnergyFactor { terms: vec![term] });
                rest = leftover;
            }
        }
        factors
    } else {
        return Err(err(format!(
            "denominator body {body:?} is neither parenthesized nor bracketed"
        )));
    };
    if factors.is_empty() {
        return Err(err(format!("denominator {text:?} has no factors")));
    }
    Ok((sign, factors))
}

/// Parses one `EC` / `Ej+` / `Ej-` term, returning it and the remainder.
fn parse_term(text: &str) -> Result<(EnergyTerm, &str), String> {
    let rest = text
        .strip_prefix('E')
        .ok_or_else(|| format!("expected energy term at {text:?}"))?;
    if let Some(rest) = rest.strip_prefix('C') {
        return Ok((EnergyTerm::ChargingUnit, rest));
    }
    let mut chars = rest.chars();
    let island_char = chars
        .next()
        .ok_or_else(|| format!("truncated energy term at {text:?}"))?;
    let island = island_char
        .to_digit(10)
        .ok_or_else(|| format!("bad island digit {island_char:?} in {text:?}"))?;
    let sign_char = chars
        .next()
        .ok_or_else(|| format!("truncated energy term at {text:?}"))?;
    let sign = match sign_char {
        '+' => ChargeSign::Excess,
        '-' => ChargeSign::Deficit,
        other => return Err(format!("bad charge sign {other:?} in {text:?}")),
    };
    let consumed = 1 + island_char.len_utf8() + sign_char.len_utf8();
    Ok((
        EnergyTerm::Excitation {
            island: island as u8,
            sign,
        },
        &text[consumed..],
    ))
}

/// Parses a run of terms, optionally joined by `separator`, returning the
/// terms and the unconsumed remainder.
fn parse_terms(
    text: &str,
    separator: Option<char>,
) -> Result<(Vec<EnergyTerm>, &str), String> {
    let mut terms = Vec::new();
    let (first, mut rest) = parse_term(text)?;
    terms.push(first);
    loop {
        match separator {
            Some(sep) => {
                if let Some(after) = rest.strip_prefix(sep) {
                    let (term, leftover) = parse_term(after)?;
                    terms.push(term);
                    rest = leftover;
                } else {
                    break;
                }
            }
            None => {
                if rest.starts_with('E') {
                    let (term, leftover) = parse_term(rest)?;
                    terms.push(term);
                    rest = leftover;
                } else {
                    break;
                }
            }
        }
    }
    Ok((terms, rest))
}
