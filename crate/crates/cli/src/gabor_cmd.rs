use std::path::Path;

use framekit::gabor::commutation_error;
use framekit::{build_gabor_frame, gabor_dual_prototype, verify_wh_structure, GaborParams, Prototype64, Scalar};
use serde_json::{json, Value};

use crate::frame_cmd::frame_report;
use crate::input::{read_vector, vector_json};
use crate::{CliError, CmdResult, GaborArgs, Report};

fn prototype(args: &GaborArgs) -> Result<Prototype64, CliError> {
    let need_n = || args.n.ok_or_else(|| CliError::Usage(format!("--proto {} needs --n", args.proto)));
    let g = match args.proto.as_str() {
        "delta" => Prototype64::delta(need_n()?)?,
        "gaussian" => Prototype64::gaussian(need_n()?)?,
        "boxcar" => Prototype64::boxcar(need_n()?)?,
        path => {
            let g = Prototype64::new(read_vector(Path::new(path))?)?;
            if let Some(n) = args.n {
                if n != g.dim() {
                    return Err(framekit::Error::DimensionMismatch {
                        context: "prototype file length vs --n",
                        expected: n,
                        actual: g.dim(),
                    }
                    .into());
                }
            }
            g
        }
    };
    Ok(g)
}

fn setup(args: &GaborArgs) -> Result<(Prototype64, GaborParams), CliError> {
    let g = prototype(args)?;
    let params = GaborParams::new(g.dim(), args.shift, args.mods)?;
    Ok((g, params))
}

fn params_json(p: &GaborParams) -> Value {
    json!({
        "n": p.dim(),
        "shift": p.shift(),
        "mods": p.mods(),
        "shifts": p.shifts(),
        "system_size": p.system_size(),
    })
}

pub(crate) fn build(args: &GaborArgs, csv: bool) -> CmdResult {
    let (g, params) = setup(args)?;
    let frame = build_gabor_frame(&g, &params)?;
    Ok(frame_report(&frame, csv, json!({"gabor": params_json(&params)})))
}

pub(crate) fn dual(args: &GaborArgs) -> CmdResult {
    let (g, params) = setup(args)?;
    let frame = build_gabor_frame(&g, &params)?;
    let gd = gabor_dual_prototype(&g, &params)?;
    let canonical = frame.canonical_dual()?;
    Ok(Report::Json(json!({
        "gabor": params_json(&params),
        "prototype": vector_json(g.as_slice()),
        "dual_prototype": vector_json(gd.as_slice()),
        "wh_structure": verify_wh_structure(&canonical, &gd, &params)?,
    })))
}

pub(crate) fn check(args: &GaborArgs) -> CmdResult {
    let (g, params) = setup(args)?;
    let frame = build_gabor_frame(&g, &params)?;
    let b = frame.frame_bounds()?;
    let wh_structure = if b.is_frame() {
        let gd = gabor_dual_prototype(&g, &params)?;
        Value::Bool(verify_wh_structure(&frame.canonical_dual()?, &gd, &params)?)
    } else {
        Value::Null
    };
    let full_density = params.shift() == 1 && params.mods() == params.dim();
    Ok(Report::Json(json!({
        "gabor": params_json(&params),
        "lower": b.lower,
        "upper": b.upper,
        "is_frame": b.is_frame(),
        "tight": b.is_frame() && b.is_tight(f64::CHECK_TOL),
        "undersized": params.system_size() < params.dim(),
        "full_density_bound": if full_density { json!(params.dim() as f64 * g.norm_sqr()) } else { Value::Null },
        "commutation_error": commutation_error(&frame, &params),
        "wh_structure": wh_structure,
    })))
}
