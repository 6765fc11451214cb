//! JSON interchange documents for matrices over any supported domain.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::matrix::Matrix;
use super::poly::Poly;
use super::ring::{Domain, Gf2, Ring};

/// A matrix whose domain is only known at runtime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyMatrix {
    Int(Matrix<BigInt>),
    Rat(Matrix<BigRational>),
    Gf2(Matrix<Gf2>),
    Poly(Matrix<Poly>),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Int(i64),
    Text(String),
}

impl Entry {
    fn text(&self) -> String {
        match self {
            Entry::Int(n) => n.to_string(),
            Entry::Text(s) => s.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixDocument {
    pub ring: Domain,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<Entry>>,
}

impl AnyMatrix {
    pub fn domain(&self) -> Domain {
        match self {
            AnyMatrix::Int(_) => Domain::Int,
            AnyMatrix::Rat(_) => Domain::Rat,
            AnyMatrix::Gf2(_) => Domain::Gf2,
            AnyMatrix::Poly(_) => Domain::PolyRat,
        }
    }

    pub fn to_document(&self) -> MatrixDocument {
        fn rows_of<T: Ring>(m: &Matrix<T>) -> Vec<Vec<Entry>> {
            (0..m.rows())
                .map(|i| {
                    m.row(i)
                        .iter()
                        .map(|x| Entry::Text(x.to_string()))
                        .collect()
                })
                .collect()
        }
        let (rows, cols, entries) = match self {
            AnyMatrix::Int(m) => (m.rows(), m.cols(), rows_of(m)),
            AnyMatrix::Rat(m) => (m.rows(), m.cols(), rows_of(m)),
            AnyMatrix::Gf2(m) => (m.rows(), m.cols(), rows_of(m)),
            AnyMatrix::Poly(m) => (m.rows(), m.cols(), rows_of(m)),
        };
        MatrixDocument {
            ring: self.domain(),
            rows,
            cols,
            entries,
        }
    }

    pub fn from_document(doc: &MatrixDocument) -> Result<Self> {
        if doc.entries.len() != doc.rows || doc.entries.iter().any(|r| r.len() != doc.cols) {
            return Err(Error::Format(format!(
                "declared {}x{} but entries do not match",
                doc.rows, doc.cols
            )));
        }
        fn parse<T: Ring>(doc: &MatrixDocument) -> Result<Matrix<T>> {
            let mut data = Vec::with_capacity(doc.rows * doc.cols);
            for (i, row) in doc.entries.iter().enumerate() {
                for (j, e) in row.iter().enumerate() {
                    let x = T::parse_scalar(&e.text())
                        .map_err(|err| Error::Format(format!("entry ({i}, {j}): {err}")))?;
                    data.push(x);
                }
            }
            Matrix::new(doc.rows, doc.cols, data)
        }
        Ok(match doc.ring {
            Domain::Int => AnyMatrix::Int(parse(doc)?),
            Domain::Rat => AnyMatrix::Rat(parse(doc)?),
            Domain::Gf2 => AnyMatrix::Gf2(parse(doc)?),
            Domain::PolyRat => AnyMatrix::Poly(parse(doc)?),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_document()).expect("serializable document")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: MatrixDocument =
            serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
        AnyMatrix::from_document(&doc)
    }
}

impl From<Matrix<BigInt>> for AnyMatrix {
    fn from(m: Matrix<BigInt>) -> Self {
        AnyMatrix::Int(m)
    }
}

impl From<Matrix<BigRational>> for AnyMatrix {
    fn from(m: Matrix<BigRational>) -> Self {
        AnyMatrix::Rat(m)
    }
}

impl From<Matrix<Gf2>> for AnyMatrix {
    fn from(m: Matrix<Gf2>) -> Self {
        AnyMatrix::Gf2(m)
    }
}

impl From<Matrix<Poly>> for AnyMatrix {
    fn from(m: Matrix<Poly>) -> Self {
        AnyMatrix::Poly(m)
    }
}

impl std::fmt::Display for AnyMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AnyMatrix::Int(m) => m.fmt(f),
            AnyMatrix::Rat(m) => m.fmt(f),
            AnyMatrix::Gf2(m) => m.fmt(f),
            AnyMatrix::Poly(m) => m.fmt(f),
        }
    }
}
