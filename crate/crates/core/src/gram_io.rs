//! Plain-text Gram matrix files.
//!
//! ```text
//! # hyperbolic plane
//! 2
//! 0 1
//! 1 0
//! ```
//!
//! The first non-comment line holds the rank `r`; the next `r` lines hold `r`
//! whitespace-separated integers each. `#` starts a comment anywhere on a line.

use std::fmt::Write as _;
use std::path::Path;

use num_bigint::BigInt;

use crate::exact::IntegerMatrix;
use crate::lattice::{IntegralLattice, LatticeError};

#[derive(Debug, thiserror::Error)]
pub enum GramParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("unexpected end of input: expected {expected} more row(s)")]
    Truncated { expected: usize },
    #[error("line {line}: trailing content after the last row")]
    Trailing { line: usize },
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

pub fn parse_gram(text: &str) -> Result<IntegralLattice, GramParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let Some((line, head)) = lines.next() else {
        return Err(GramParseError::Truncated { expected: 1 });
    };
    let rank: usize = head.parse().map_err(|_| GramParseError::Syntax {
        line,
        message: format!("expected the rank as a nonnegative integer, found '{head}'"),
    })?;

    let mut entries = Vec::with_capacity(rank * rank);
    for row in 0..rank {
        let Some((line, content)) = lines.next() else {
            return Err(GramParseError::Truncated { expected: rank - row });
        };
        let values: Vec<BigInt> = content
            .split_whitespace()
            .map(|tok| {
                tok.parse::<BigInt>().map_err(|_| GramParseError::Syntax {
                    line,
                    message: format!("'{tok}' is not an integer"),
                })
            })
            .collect::<Result<_, _>>()?;
        if values.len() != rank {
            return Err(GramParseError::Syntax {
                line,
                message: format!("expected {rank} entries, found {}", values.len()),
            });
        }
        entries.extend(values);
    }
    if let Some((line, _)) = lines.next() {
        return Err(GramParseError::Trailing { line });
    }
    let gram = IntegerMatrix::from_entries(rank, rank, entries).expect("rank*rank entries");
    if let Err(e) = gram.require_symmetric() {
        return Err(LatticeError::from(e).into());
    }
    Ok(IntegralLattice::new(gram)?)
}

pub fn read_gram_file(path: &Path) -> Result<IntegralLattice, GramParseError> {
    let text = std::fs::read_to_string(path)
        .map_err(|source| GramParseError::Io { path: path.display().to_string(), source })?;
    parse_gram(&text)
}

/// Writes the lattice in the same text format [`parse_gram`] reads.
pub fn format_gram(l: &IntegralLattice) -> String {
    let g = l.gram();
    let mut out = format!("{}\n", l.rank());
    for i in 0..l.rank() {
        let row: Vec<String> = g.row(i).iter().map(|x| x.to_string()).collect();
        writeln!(out, "{}", row.join(" ")).unwrap();
    }
    out
}
