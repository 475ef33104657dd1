//! File formats: complex matrices as JSON (`{"rows", "cols", "data"}` with
//! `[re, im]` pairs, row-major) or CSV (`a+bi` entries), and a JSON writer
//! that prints every float with 17 significant digits.

use std::io;

use num_complex::Complex;
use serde::{Deserialize, Serialize};
use serde_json::ser::{CompactFormatter, Formatter, PrettyFormatter};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::matrix::CMatrix;
use crate::scalar::Scalar;

/// Serialized complex matrix.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixFile {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<[f64; 2]>,
}

impl MatrixFile {
    pub fn from_matrix<T: Scalar>(m: &CMatrix<T>) -> Self {
        Self {
            rows: m.rows(),
            cols: m.cols(),
            data: m.as_slice().iter().map(|z| [z.re.to_f64_lossy(), z.im.to_f64_lossy()]).collect(),
        }
    }

    /// Column vector (`len × 1`).
    pub fn from_vector<T: Scalar>(v: &[Complex<T>]) -> Self {
        Self {
            rows: v.len(),
            cols: 1,
            data: v.iter().map(|z| [z.re.to_f64_lossy(), z.im.to_f64_lossy()]).collect(),
        }
    }

    pub fn to_matrix<T: Scalar>(&self) -> Result<CMatrix<T>> {
        let data: Vec<Complex<T>> = self.data.iter().map(|&[re, im]| Complex::new(T::lit(re), T::lit(im))).collect();
        let m = CMatrix::from_vec(self.rows, self.cols, data)?;
        if !m.is_finite() {
            return Err(Error::NonFinite("matrix file"));
        }
        Ok(m)
    }

    /// Accepts either a `1×n` or an `n×1` matrix.
    pub fn to_vector<T: Scalar>(&self) -> Result<Vec<Complex<T>>> {
        if self.rows != 1 && self.cols != 1 {
            return Err(Error::Parse(format!(
                "expected a vector (1×n or n×1), got {}×{}",
                self.rows, self.cols
            )));
        }
        Ok(self.to_matrix::<T>()?.as_slice().to_vec())
    }

    pub fn to_value(&self) -> Value {
        serde_json::to_value(self).expect("plain data serializes")
    }
}

pub fn parse_json_matrix(text: &str) -> Result<MatrixFile> {
    let m: MatrixFile = serde_json::from_str(text).map_err(|e| Error::Parse(format!("matrix JSON: {e}")))?;
    if m.data.len() != m.rows * m.cols {
        return Err(Error::Parse(format!(
            "matrix JSON: {}×{} needs {} entries, found {}",
            m.rows,
            m.cols,
            m.rows * m.cols,
            m.data.len()
        )));
    }
    Ok(m)
}

/// One row per non-empty line, comma-separated entries like `1.5`, `-2i`,
/// `0.5+1e-3i` or `3-4i`.
pub fn parse_csv_matrix(text: &str) -> Result<MatrixFile> {
    let mut rows = 0;
    let mut cols = None;
    let mut data = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut count = 0;
        for field in line.split(',') {
            let z = parse_complex(field.trim()).map_err(|e| Error::Parse(format!("CSV line {}: {e}", lineno + 1)))?;
            data.push([z.re, z.im]);
            count += 1;
        }
        match cols {
            None => cols = Some(count),
            Some(c) if c != count => {
                return Err(Error::Parse(format!(
                    "CSV line {}: expected {c} entries, found {count}",
                    lineno + 1
                )))
            }
            _ => {}
        }
        rows += 1;
    }
    Ok(MatrixFile {
        rows,
        cols: cols.unwrap_or(0),
        data,
    })
}

/// Parses `a`, `bi`, `a+bi`, `a-bi` (also `j` for the imaginary unit).
pub fn parse_complex(s: &str) -> std::result::Result<Complex<f64>, String> {
    let s = s.replace('j', "i");
    s.parse::<Complex<f64>>().map_err(|_| format!("cannot parse complex number {s:?}"))
}

/// Formats a complex entry for CSV output.
pub fn format_complex(z: Complex<f64>) -> String {
    let sign = if z.im.is_sign_negative() { '-' } else { '+' };
    format!("{}{}{}i", format_f64(z.re), sign, format_f64(z.im.abs()))
}

pub fn matrix_to_csv<T: Scalar>(m: &CMatrix<T>) -> String {
    let mut out = String::new();
    for i in 0..m.rows() {
        let line: Vec<String> = m
            .row(i)
            .iter()
            .map(|z| format_complex(Complex::new(z.re.to_f64_lossy(), z.im.to_f64_lossy())))
            .collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}

/// Loads a matrix, picking the format from the extension (`.csv` or JSON).
pub fn parse_matrix_auto(path_hint: &str, text: &str) -> Result<MatrixFile> {
    if path_hint.to_ascii_lowercase().ends_with(".csv") {
        parse_csv_matrix(text)
    } else {
        parse_json_matrix(text)
    }
}

/// 17 significant digits in scientific notation, which round-trips any `f64`.
pub fn format_f64(v: f64) -> String {
    if v == 0.0 {
        // keep "-0" out of reports
        return "0.0000000000000000e0".to_string();
    }
    format!("{v:.16e}")
}

/// `serde_json` formatter that writes floats through [`format_f64`].
#[derive(Default)]
pub struct DigitsFormatter<F = CompactFormatter>(F);

impl DigitsFormatter<PrettyFormatter<'static>> {
    pub fn pretty() -> Self {
        Self(PrettyFormatter::new())
    }
}

macro_rules! delegate {
    ($($name:ident($($arg:ident: $ty:ty),*)),* $(,)?) => {
        $(
            #[inline]
            fn $name<W: ?Sized + io::Write>(&mut self, writer: &mut W $(, $arg: $ty)*) -> io::Result<()> {
                self.0.$name(writer $(, $arg)*)
            }
        )*
    };
}

impl<F: Formatter> Formatter for DigitsFormatter<F> {
    fn write_f64<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        if value.is_finite() {
            writer.write_all(format_f64(value).as_bytes())
        } else {
            writer.write_all(b"null")
        }
    }

    fn write_f32<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(writer, value as f64)
    }

    delegate!(
        begin_array(),
        end_array(),
        begin_array_value(first: bool),
        end_array_value(),
        begin_object(),
        end_object(),
        begin_object_key(first: bool),
        end_object_key(),
        begin_object_value(),
        end_object_value(),
    );
}

/// Serializes with 17-significant-digit floats; pretty-printed, newline-terminated.
pub fn to_report_string<S: Serialize + ?Sized>(value: &S) -> String {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, DigitsFormatter::pretty());
    value.serialize(&mut ser).expect("in-memory serialization");
    let mut s = String::from_utf8(buf).expect("serde_json emits UTF-8");
    s.push('\n');
    s
}
