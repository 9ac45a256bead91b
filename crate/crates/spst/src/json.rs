//! JSON forms of symmetric functions, coefficient matrices, characters and
//! character tables. Integers are decimal strings and entries are listed in
//! canonical partition order.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use spst_core::characters::{CharacterTable, CharacterVector};
use spst_core::transitions::{CoeffMatrix, MatrixKind, StableSpechtExpansion};
use spst_core::{partitions_of, Basis, Partition, Rational, SymFunc};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("invalid json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid table: {0}")]
    Invalid(String),
}

fn invalid(msg: impl Into<String>) -> FormatError {
    FormatError::Invalid(msg.into())
}

fn partition(parts: Vec<usize>) -> Result<Partition, FormatError> {
    Partition::new(parts).map_err(|e| invalid(e.to_string()))
}

fn integer(s: &str) -> Result<BigInt, FormatError> {
    s.parse().map_err(|_| invalid(format!("not an integer: {:?}", s)))
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    partition: Vec<usize>,
    num: String,
    den: String,
}

#[derive(Serialize, Deserialize)]
struct SymFuncJson {
    basis: String,
    terms: Vec<TermJson>,
    cap: usize,
}

pub fn symfunc_to_json(f: &SymFunc) -> String {
    symfunc_terms_to_json(f.basis().name(), f.cap(), f.terms().iter().map(|(p, c)| (p, c.clone())))
}

/// A stable Specht expansion in the symmetric-function layout, with basis
/// name `stable_specht`.
pub fn expansion_to_json(f: &StableSpechtExpansion) -> String {
    symfunc_terms_to_json("stable_specht", f.cap(), f.terms().iter().map(|(p, c)| (p, Rational::from_integer(c.clone()))))
}

fn symfunc_terms_to_json<'a>(basis: &str, cap: usize, terms: impl Iterator<Item = (&'a Partition, Rational)>) -> String {
    let doc = SymFuncJson {
        basis: basis.to_string(),
        terms: terms
            .map(|(p, c)| TermJson { partition: p.parts().to_vec(), num: c.numer().to_string(), den: c.denom().to_string() })
            .collect(),
        cap,
    };
    serde_json::to_string(&doc).expect("serializable")
}

pub fn symfunc_from_json(s: &str) -> Result<SymFunc, FormatError> {
    let doc: SymFuncJson = serde_json::from_str(s)?;
    let basis = Basis::from_name(&doc.basis).ok_or_else(|| invalid(format!("unknown basis {:?}", doc.basis)))?;
    let mut terms = Vec::new();
    for t in doc.terms {
        let den = integer(&t.den)?;
        if den == BigInt::from(0) {
            return Err(invalid("zero denominator"));
        }
        terms.push((partition(t.partition)?, Rational::new(integer(&t.num)?, den)));
    }
    Ok(SymFunc::from_terms(basis, doc.cap, terms))
}

#[derive(Serialize, Deserialize)]
struct EntryJson {
    row: Vec<usize>,
    col: Vec<usize>,
    value: String,
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    kind: String,
    cap: usize,
    entries: Vec<EntryJson>,
}

pub fn matrix_to_json(m: &CoeffMatrix) -> String {
    let doc = MatrixJson {
        kind: m.kind().json_name().to_string(),
        cap: m.cap(),
        entries: m
            .entries()
            .iter()
            .map(|((r, c), v)| EntryJson { row: r.parts().to_vec(), col: c.parts().to_vec(), value: v.to_string() })
            .collect(),
    };
    serde_json::to_string(&doc).expect("serializable")
}

pub fn matrix_from_json(s: &str) -> Result<CoeffMatrix, FormatError> {
    let doc: MatrixJson = serde_json::from_str(s)?;
    let kind = MatrixKind::from_name(&doc.kind).ok_or_else(|| invalid(format!("unknown kind {:?}", doc.kind)))?;
    let mut entries = Vec::with_capacity(doc.entries.len());
    for e in doc.entries {
        entries.push(((partition(e.row)?, partition(e.col)?), integer(&e.value)?));
    }
    CoeffMatrix::from_entries(kind, doc.cap, entries).map_err(|e| invalid(e.to_string()))
}

#[derive(Serialize, Deserialize)]
struct ClassValueJson {
    class: Vec<usize>,
    value: String,
}

#[derive(Serialize, Deserialize)]
struct CharacterJson {
    t: usize,
    values: Vec<ClassValueJson>,
}

pub fn character_to_json(chi: &CharacterVector) -> String {
    let doc = CharacterJson {
        t: chi.t(),
        values: chi.iter().map(|(rho, v)| ClassValueJson { class: rho.parts().to_vec(), value: v.to_string() }).collect(),
    };
    serde_json::to_string(&doc).expect("serializable")
}

pub fn character_from_json(s: &str) -> Result<CharacterVector, FormatError> {
    let doc: CharacterJson = serde_json::from_str(s)?;
    let classes = partitions_of(doc.t);
    if doc.values.len() != classes.len() {
        return Err(invalid("character must list every class once"));
    }
    let mut values = Vec::with_capacity(classes.len());
    for (v, rho) in doc.values.iter().zip(&classes) {
        if partition(v.class.clone())? != *rho {
            return Err(invalid("classes out of canonical order"));
        }
        values.push(integer(&v.value)?);
    }
    CharacterVector::new(doc.t, values).map_err(|e| invalid(e.to_string()))
}

#[derive(Serialize, Deserialize)]
struct CharacterTableJson {
    t: usize,
    /// `values[i][j]` is the character of the `i`-th partition at the
    /// `j`-th class, both in canonical order.
    values: Vec<Vec<i64>>,
}

pub fn character_table_to_json(table: &CharacterTable) -> String {
    let doc = CharacterTableJson { t: table.n(), values: table.values().to_vec() };
    serde_json::to_string(&doc).expect("serializable")
}

pub fn character_table_from_json(s: &str) -> Result<CharacterTable, FormatError> {
    let doc: CharacterTableJson = serde_json::from_str(s)?;
    let n = partitions_of(doc.t).len();
    if doc.values.len() != n || doc.values.iter().any(|row| row.len() != n) {
        return Err(invalid("character table has the wrong shape"));
    }
    Ok(CharacterTable::from_values(doc.t, doc.values))
}
