use std::path::Path;

use framekit::io::{matrix_to_csv, MatrixFile};
use framekit::{reconstruct, Frame64, Matrix64, Scalar};
use serde_json::{json, Value};

use crate::input::{read_frame, read_matrix, read_vector, vector_json};
use crate::{CmdResult, Report};

/// Frame vectors as a matrix object that `--input` accepts again, plus extra keys.
pub(crate) fn frame_value(frame: &Frame64, extra: Value) -> Value {
    let mut v = MatrixFile::from_matrix(frame.vector_matrix()).to_value();
    if let (Value::Object(map), Value::Object(more)) = (&mut v, extra) {
        map.extend(more);
    }
    v
}

pub(crate) fn frame_report(frame: &Frame64, csv: bool, extra: Value) -> Report {
    if csv {
        Report::Csv(matrix_to_csv(frame.vector_matrix()))
    } else {
        Report::Json(frame_value(frame, extra))
    }
}

pub(crate) fn analyze(input: &Path, signal: &Path, dual: Option<&Path>) -> CmdResult {
    let frame = read_frame(input)?;
    let x = read_vector(signal)?;
    let dual = match dual {
        Some(p) => read_frame(p)?,
        None => frame.canonical_dual()?,
    };
    let coeffs = frame.analyze(&x)?;
    let recon = reconstruct(&frame, &dual, &coeffs)?;
    let err = framekit::matrix::max_abs_diff(&recon, &x);
    Ok(Report::Json(json!({
        "coefficients": vector_json(&coeffs),
        "reconstruction": vector_json(&recon),
        "max_error": err,
    })))
}

pub(crate) fn bounds(input: &Path) -> CmdResult {
    let frame = read_frame(input)?;
    let b = frame.frame_bounds()?;
    Ok(Report::Json(json!({
        "lower": b.lower,
        "upper": b.upper,
        "tight": b.is_frame() && b.is_tight(f64::CHECK_TOL),
        "is_frame": b.is_frame(),
        "condition": b.condition(),
        "frame_size": frame.len(),
        "dimension": frame.dim(),
        "redundancy": frame.len() as f64 / frame.dim() as f64,
    })))
}

pub(crate) fn dual(input: &Path, param: Option<&Path>, csv: bool) -> CmdResult {
    let frame = read_frame(input)?;
    let m = match param {
        Some(p) => read_matrix(p)?,
        None => Matrix64::zeros(frame.dim(), frame.len()),
    };
    let li = frame.left_inverse(&m)?;
    let dual = li.dual_frame();
    Ok(frame_report(
        &dual,
        csv,
        json!({"canonical": param.is_none(), "left_inverse_residual": li.residual(&frame)}),
    ))
}

pub(crate) fn tighten(input: &Path, csv: bool) -> CmdResult {
    let tight = read_frame(input)?.tighten()?;
    let b = tight.frame_bounds()?;
    Ok(frame_report(&tight, csv, json!({"lower": b.lower, "upper": b.upper})))
}

pub(crate) fn naimark(input: &Path) -> CmdResult {
    let frame = read_frame(input)?;
    let nd = frame.naimark_dilate()?;
    let projection_error = (0..frame.len())
        .map(|k| framekit::matrix::max_abs_diff(&nd.projected(k), frame.vector(k)))
        .fold(0.0, f64::max);
    Ok(Report::Json(json!({
        "unitary": MatrixFile::from_matrix(&nd.unitary).to_value(),
        "subspace_dim": nd.subspace_dim,
        "unitarity_error": nd.unitarity_error(),
        "projection_error": projection_error,
    })))
}

pub(crate) fn exactness(input: &Path) -> CmdResult {
    let frame = read_frame(input)?;
    let p = frame.exactness_profile()?;
    Ok(Report::Json(json!({
        "classification": p.classification.as_str(),
        "diagonal": vector_json(&p.diagonal),
    })))
}
