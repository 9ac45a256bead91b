//! Expansion tables between the Schur and stable Specht bases.

use std::collections::BTreeMap;
use std::fmt::Write;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use spst_core::symfunc::render_terms;
use spst_core::transitions::{CoeffMatrix, MatrixKind};
use spst_core::{partitions_up_to, Partition};

use crate::json;
use crate::session::Session;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Direction {
    /// Schur functions in the stable Specht basis.
    #[value(name = "s2dagger")]
    SchurToDagger,
    /// Stable Specht functions in the Schur basis.
    #[value(name = "dagger2s")]
    DaggerToSchur,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

/// One table row: the expanded element and its expansion.
pub struct Row {
    pub index: Partition,
    pub terms: BTreeMap<Partition, BigInt>,
}

/// Rows for every non-empty partition of size at most `max_degree`.
pub fn rows(session: &Session, direction: Direction, max_degree: usize) -> spst_core::Result<(Vec<Row>, CoeffMatrix)> {
    let m = match direction {
        Direction::SchurToDagger => session.matrix(MatrixKind::A, max_degree)?,
        Direction::DaggerToSchur => session.matrix(MatrixKind::B, max_degree)?,
    };
    let rows = partitions_up_to(max_degree)
        .into_iter()
        .filter(|p| !p.is_empty())
        .map(|p| {
            let terms = match direction {
                Direction::SchurToDagger => m.row(&p),
                Direction::DaggerToSchur => m.column(&p),
            };
            Row { index: p, terms }
        })
        .collect();
    Ok((rows, (*m).clone()))
}

pub fn render(session: &Session, direction: Direction, max_degree: usize, format: Format) -> spst_core::Result<String> {
    let (rows, m) = rows(session, direction, max_degree)?;
    let (lhs, rhs) = match direction {
        Direction::SchurToDagger => ("s", "sdag"),
        Direction::DaggerToSchur => ("sdag", "s"),
    };
    let mut out = String::new();
    match format {
        Format::Json => {
            out.push_str(&json::matrix_to_json(&m));
            out.push('\n');
        }
        Format::Text => {
            for row in &rows {
                writeln!(out, "{}{} = {}", lhs, row.index, render_terms(row.terms.iter(), rhs)).unwrap();
            }
        }
        Format::Latex => {
            for (i, row) in rows.iter().enumerate() {
                let left = match direction {
                    Direction::SchurToDagger => format!("s_{{{}}}", latex_partition(&row.index, "")),
                    Direction::DaggerToSchur => format!("s^{{\\dagger}}_{{{}}}", latex_partition(&row.index, " ")),
                };
                let symbol = match direction {
                    Direction::SchurToDagger => "s^{\\dagger}",
                    Direction::DaggerToSchur => "s",
                };
                let end = if i + 1 < rows.len() { " \\\\" } else { "" };
                writeln!(out, "{} & = & {}{}", left, latex_terms(&row.terms, symbol), end).unwrap();
            }
        }
    }
    Ok(out)
}

/// `(21)` style; parts are comma separated once any part has two digits.
fn latex_partition(p: &Partition, sep: &str) -> String {
    let sep = if p.parts().iter().any(|&x| x >= 10) { "," } else { sep };
    let parts: Vec<String> = p.parts().iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(sep))
}

fn latex_terms(terms: &BTreeMap<Partition, BigInt>, symbol: &str) -> String {
    let mut out = String::new();
    for (i, (p, c)) in terms.iter().enumerate() {
        if c.is_negative() {
            out.push('-');
        } else if i > 0 {
            out.push('+');
        }
        let mag = c.abs();
        if p.is_empty() {
            write!(out, "{}", mag).unwrap();
        } else {
            if !mag.is_one() {
                write!(out, "{}", mag).unwrap();
            }
            write!(out, "{}_{{{}}}", symbol, latex_partition(p, "")).unwrap();
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
