//! File formats: exact matrices as JSON documents or CSV grids.
//!
//! Every coefficient travels as its canonical string form — `p/q` with
//! positive `q > 1`, plain integer otherwise — so a document round-trips
//! bit-exactly. Floats never appear.

use serde::{Deserialize, Serialize};
use zeromargin::{
    parse_rational, rational_to_string, BasisElement, Error, RationalMatrix, Result,
    TensorBasisElement,
};

/// Serialized form of one rational matrix, optionally carrying basis
/// metadata (role tag, generator index, squared norm).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MatrixDocument {
    pub rows: usize,
    pub cols: usize,
    /// Row-major canonical rational strings.
    pub entries: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tag: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub index: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub squared_norm: Option<String>,
}

impl MatrixDocument {
    pub fn from_matrix(m: &RationalMatrix) -> Self {
        let (rows, cols) = m.shape();
        MatrixDocument {
            rows,
            cols,
            entries: m.entries().iter().map(rational_to_string).collect(),
            tag: None,
            index: None,
            squared_norm: None,
        }
    }

    pub fn from_element(e: &BasisElement) -> Self {
        let mut doc = Self::from_matrix(&e.matrix);
        doc.tag = Some(e.tag.to_string());
        doc.index = Some(e.index.clone());
        doc.squared_norm = Some(rational_to_string(&e.squared_norm));
        doc
    }

    pub fn to_matrix(&self) -> Result<RationalMatrix> {
        if self.rows * self.cols != self.entries.len() {
            return Err(Error::Validation(format!(
                "{}x{} document carries {} entries",
                self.rows,
                self.cols,
                self.entries.len()
            )));
        }
        let mut parsed = Vec::with_capacity(self.entries.len());
        for s in &self.entries {
            parsed.push(parse_rational(s)?);
        }
        let mut m = RationalMatrix::zeros(self.rows, self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.set(r, c, parsed[r * self.cols + c].clone());
            }
        }
        Ok(m)
    }
}

/// Serialized form of one d-way array basis element.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TensorDocument {
    pub dims: Vec<usize>,
    /// Entries in row-major (last axis fastest) order.
    pub entries: Vec<String>,
    pub index: Vec<usize>,
    pub squared_norm: String,
}

impl TensorDocument {
    pub fn from_element(e: &TensorBasisElement) -> Self {
        TensorDocument {
            dims: e.array.dims().to_vec(),
            entries: e.array.entries().iter().map(rational_to_string).collect(),
            index: e.index.clone(),
            squared_norm: rational_to_string(&e.squared_norm),
        }
    }
}

/// Reads a matrix from either supported text form: a `MatrixDocument`
/// JSON object, or a bare CSV grid (one row per line, comma-separated
/// canonical rational strings).
pub fn parse_matrix_text(text: &str) -> Result<RationalMatrix> {
    if text.trim_start().starts_with('{') {
        let doc: MatrixDocument = serde_json::from_str(text)
            .map_err(|e| Error::Validation(format!("invalid matrix JSON: {e}")))?;
        doc.to_matrix()
    } else {
        parse_csv_matrix(text)
    }
}

/// Parses a bare CSV grid. Blank lines are ignored; every remaining line
/// must carry the same number of comma-separated entries.
pub fn parse_csv_matrix(text: &str) -> Result<RationalMatrix> {
    let mut rows: Vec<Vec<String>> = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        rows.push(line.split(',').map(|f| f.trim().to_string()).collect());
    }
    if rows.is_empty() {
        return Err(Error::Validation("empty matrix input".into()));
    }
    let cols = rows[0].len();
    if rows.iter().any(|r| r.len() != cols) {
        return Err(Error::Validation(
            "rows carry different numbers of entries".into(),
        ));
    }
    let mut m = RationalMatrix::zeros(rows.len(), cols);
    for (r, fields) in rows.iter().enumerate() {
        for (c, field) in fields.iter().enumerate() {
            m.set(r, c, parse_rational(field)?);
        }
    }
    Ok(m)
}

/// Renders a matrix as the CSV grid form accepted by [`parse_csv_matrix`].
pub fn matrix_to_csv(m: &RationalMatrix) -> String {
    let (rows, cols) = m.shape();
    let mut out = String::new();
    for r in 0..rows {
        let line: Vec<String> = (0..cols)
            .map(|c| rational_to_string(m.get(r, c)))
            .collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}

/// One CSV record per basis element: tag, dotted index, squared norm,
/// shape, then the row-major entries.
pub fn element_to_csv_record(doc: &MatrixDocument) -> String {
    let mut fields = vec![
        doc.tag.clone().unwrap_or_default(),
        doc.index
            .as_ref()
            .map(|ix| dotted(ix))
            .unwrap_or_default(),
        doc.squared_norm.clone().unwrap_or_default(),
        doc.rows.to_string(),
        doc.cols.to_string(),
    ];
    fields.extend(doc.entries.iter().cloned());
    fields.join(",")
}

pub fn dotted(index: &[usize]) -> String {
    index
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(".")
}
