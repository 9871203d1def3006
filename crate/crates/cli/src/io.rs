//! Matrix file parsing and entry formatting.
//!
//! File format: the first non-empty line holds the dimension n, followed
//! by n lines of n whitespace-separated entries. A scalar entry is a
//! decimal integer (reduced modulo p for prime fields); a polynomial
//! entry is a colon-joined ascending coefficient list `c0:c1:...:cd`.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use detkit::rings::{IntegerRing, PrimeField, SeriesRing};
use detkit::Matrix;

/// Raw parse: every entry is a coefficient list (length 1 for scalars).
#[derive(Debug)]
pub struct ParsedMatrix {
    pub n: usize,
    pub entries: Vec<Vec<Vec<BigInt>>>,
}

pub fn parse_matrix_text(text: &str) -> Result<ParsedMatrix, String> {
    let mut rows: Vec<Vec<Vec<BigInt>>> = Vec::new();
    let mut n: Option<usize> = None;
    for (idx, raw_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw_line.trim();
        if line.is_empty() {
            continue;
        }
        match n {
            None => {
                let dim: usize = line.parse().map_err(|_| {
                    format!("line {line_no}: expected the matrix dimension, found {line:?}")
                })?;
                if dim == 0 {
                    return Err(format!("line {line_no}: dimension must be positive"));
                }
                n = Some(dim);
            }
            Some(dim) => {
                if rows.len() == dim {
                    return Err(format!("line {line_no}: unexpected data after {dim} rows"));
                }
                let mut row = Vec::with_capacity(dim);
                for (col, token) in line.split_whitespace().enumerate() {
                    row.push(parse_entry(token, line_no, col + 1)?);
                }
                if row.len() != dim {
                    return Err(format!(
                        "line {line_no}: expected {dim} entries, found {}",
                        row.len()
                    ));
                }
                rows.push(row);
            }
        }
    }
    let n = n.ok_or_else(|| "empty matrix file".to_string())?;
    if rows.len() != n {
        return Err(format!("expected {n} rows, found {}", rows.len()));
    }
    Ok(ParsedMatrix { n, entries: rows })
}

fn parse_entry(token: &str, line: usize, col: usize) -> Result<Vec<BigInt>, String> {
    token
        .split(':')
        .map(|piece| {
            piece.parse::<BigInt>().map_err(|_| {
                format!("line {line}, entry {col}: {piece:?} is not a decimal integer")
            })
        })
        .collect()
}

fn reduce(field: &PrimeField, x: &BigInt) -> u64 {
    let p = BigInt::from(field.modulus());
    let r = ((x % &p) + &p) % &p;
    r.to_u64().expect("reduced below the modulus")
}

pub fn to_gf_matrix(
    parsed: &ParsedMatrix,
    field: &PrimeField,
) -> Result<Matrix<PrimeField>, String> {
    let mut data = Vec::with_capacity(parsed.n * parsed.n);
    for (i, row) in parsed.entries.iter().enumerate() {
        for (j, entry) in row.iter().enumerate() {
            if entry.len() != 1 {
                return Err(format!(
                    "entry ({},{}) is a polynomial; scalar expected (use inverse-series for polynomial matrices)",
                    i + 1,
                    j + 1
                ));
            }
            data.push(reduce(field, &entry[0]));
        }
    }
    Ok(Matrix::new(*field, parsed.n, parsed.n, data))
}

pub fn to_int_matrix(parsed: &ParsedMatrix) -> Result<Matrix<IntegerRing>, String> {
    let mut data = Vec::with_capacity(parsed.n * parsed.n);
    for (i, row) in parsed.entries.iter().enumerate() {
        for (j, entry) in row.iter().enumerate() {
            if entry.len() != 1 {
                return Err(format!(
                    "entry ({},{}) is a polynomial; scalar expected",
                    i + 1,
                    j + 1
                ));
            }
            data.push(entry[0].clone());
        }
    }
    Ok(Matrix::new(IntegerRing, parsed.n, parsed.n, data))
}

pub fn to_series_matrix(
    parsed: &ParsedMatrix,
    ring: &SeriesRing<PrimeField>,
) -> Result<Matrix<SeriesRing<PrimeField>>, String> {
    let field = *ring.base();
    let mut data = Vec::with_capacity(parsed.n * parsed.n);
    for (i, row) in parsed.entries.iter().enumerate() {
        for (j, entry) in row.iter().enumerate() {
            if entry.len() > ring.trunc() + 1 {
                return Err(format!(
                    "entry ({},{}) has degree {}, above the truncation order {}",
                    i + 1,
                    j + 1,
                    entry.len() - 1,
                    ring.trunc()
                ));
            }
            let coeffs = entry.iter().map(|c| reduce(&field, c)).collect();
            data.push(ring.from_coeffs(coeffs));
        }
    }
    Ok(Matrix::new(ring.clone(), parsed.n, parsed.n, data))
}

pub fn format_gf_matrix(m: &Matrix<PrimeField>) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m[(i, j)].to_string()).collect())
        .collect()
}

pub fn format_int_matrix(m: &Matrix<IntegerRing>) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m[(i, j)].to_string()).collect())
        .collect()
}

/// Colon-joined full coefficient list, mirroring the input format.
pub fn format_series(ring: &SeriesRing<PrimeField>, s: &detkit::rings::Series<u64>) -> String {
    (0..=ring.trunc())
        .map(|k| ring.coeff(s, k).to_string())
        .collect::<Vec<_>>()
        .join(":")
}

pub fn format_series_matrix(m: &Matrix<SeriesRing<PrimeField>>) -> Vec<Vec<String>> {
    let ring = m.ring().clone();
    (0..m.rows())
        .map(|i| {
            (0..m.cols())
                .map(|j| format_series(&ring, &m[(i, j)]))
                .collect()
        })
        .collect()
}
