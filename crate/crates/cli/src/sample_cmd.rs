use std::path::{Path, PathBuf};

use framekit::io::format_f64;
use framekit::sampling::{
    analytic_mse, closed_form_mse, ideal_lowpass, make_bandlimited, make_recon_filter, monte_carlo_mse, mse_decomposition,
    reconstruct as run_reconstruction, rolloff_dontcare, sample, sampling_energy_ratio, Rolloff,
};
use framekit::{MonteCarloConfig, NoiseKind, ReconFilter64, SamplingModel, C64};
use serde_json::{json, Value};

use crate::input::{read_config, read_filter_file, read_vector, resolve_relative, vector_json};
use crate::{CliError, CmdResult, Report, SamplingArgs};

#[derive(Debug, Clone)]
enum FilterChoice {
    Ideal,
    Rolloff(Rolloff),
    File(PathBuf),
}

impl FilterChoice {
    fn parse(name: &str, config_path: Option<&Path>) -> Self {
        match name {
            "ideal" => FilterChoice::Ideal,
            "linear" => FilterChoice::Rolloff(Rolloff::Linear),
            "raised-cosine" | "rolloff" => FilterChoice::Rolloff(Rolloff::RaisedCosine),
            path => FilterChoice::File(resolve_relative(config_path, path)),
        }
    }

    fn label(&self) -> String {
        match self {
            FilterChoice::Ideal => "ideal".into(),
            FilterChoice::Rolloff(Rolloff::Linear) => "linear".into(),
            FilterChoice::Rolloff(Rolloff::RaisedCosine) => "raised-cosine".into(),
            FilterChoice::File(p) => p.display().to_string(),
        }
    }

    fn build(&self, model: &SamplingModel) -> Result<ReconFilter64, CliError> {
        Ok(match self {
            FilterChoice::Ideal => ideal_lowpass(model)?,
            FilterChoice::Rolloff(shape) => make_recon_filter(model, &rolloff_dontcare(model, *shape))?,
            FilterChoice::File(p) => make_recon_filter(model, &read_filter_file(p)?)?,
        })
    }
}

/// Config file values overridden by flags, then defaults.
#[derive(Debug, Clone)]
struct Resolved {
    n: usize,
    band: usize,
    period: usize,
    sigma2: f64,
    trials: usize,
    seed: u64,
    filter: FilterChoice,
    noise: NoiseKind,
}

impl Resolved {
    fn from_args(args: &SamplingArgs) -> Result<Self, CliError> {
        let cfg = match &args.input {
            Some(p) => read_config(p)?,
            None => Default::default(),
        };
        let noise = if args.real_noise {
            NoiseKind::Real
        } else {
            match cfg.noise.as_deref() {
                None | Some("complex") => NoiseKind::Complex,
                Some("real") => NoiseKind::Real,
                Some(other) => {
                    return Err(framekit::Error::Parse(format!("noise must be \"complex\" or \"real\", got {other:?}")).into())
                }
            }
        };
        let filter = match (&args.filter, &cfg.filter) {
            (Some(f), _) => FilterChoice::parse(f, None),
            (None, Some(f)) => FilterChoice::parse(f, args.input.as_deref()),
            (None, None) => FilterChoice::Ideal,
        };
        let sigma2 = args.sigma2.or(cfg.sigma2).unwrap_or(1.0);
        if !sigma2.is_finite() || sigma2 < 0.0 {
            return Err(CliError::Usage(format!("--sigma2 must be finite and non-negative, got {sigma2}")));
        }
        Ok(Self {
            n: args.n.or(cfg.n).unwrap_or(64),
            band: args.band.or(cfg.band).unwrap_or(4),
            period: args.period.or(cfg.period).unwrap_or(4),
            sigma2,
            trials: args.trials.or(cfg.trials).unwrap_or(10_000),
            seed: args.seed.or(cfg.seed).unwrap_or(42),
            filter,
            noise,
        })
    }

    fn model(&self, period: usize) -> Result<SamplingModel, CliError> {
        Ok(SamplingModel::new(self.n, self.band, period)?)
    }

    fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "band": self.band,
            "period": self.period,
            "sigma2": self.sigma2,
            "trials": self.trials,
            "seed": self.seed,
            "filter": self.filter.label(),
            "noise": noise_label(self.noise),
        })
    }

    fn signal(&self) -> Result<Vec<C64>, CliError> {
        Ok(make_bandlimited::<f64>(self.n, self.band, self.seed)?.into_vec())
    }

    fn monte_carlo(&self, x: &[C64], filter: &ReconFilter64, model: &SamplingModel) -> Result<Option<(f64, f64)>, CliError> {
        if self.trials == 0 {
            return Ok(None);
        }
        let cfg = MonteCarloConfig {
            sigma2: self.sigma2,
            trials: self.trials,
            seed: self.seed,
            noise: self.noise,
        };
        let r = monte_carlo_mse(x, filter, model, &cfg)?;
        Ok(Some((r.estimated, r.stderr)))
    }
}

fn noise_label(n: NoiseKind) -> &'static str {
    match n {
        NoiseKind::Complex => "complex",
        NoiseKind::Real => "real",
    }
}

pub(crate) fn reconstruct(args: &SamplingArgs, signal: Option<&Path>) -> CmdResult {
    let cfg = Resolved::from_args(args)?;
    let model = cfg.model(cfg.period)?;
    let filter = cfg.filter.build(&model)?;
    let x = match signal {
        Some(p) => read_vector(p)?,
        None => cfg.signal()?,
    };
    let y = sample(&x, &model)?;
    let xr = run_reconstruction(&y, &filter, &model)?;
    Ok(Report::Json(json!({
        "config": cfg.to_json(),
        "samples": model.samples(),
        "oversampling_factor": model.oversampling_factor(),
        "perfect_reconstruction": filter.is_perfect_reconstruction(&model),
        "pr_deviation": filter.pr_deviation(&model),
        "energy_ratio": sampling_energy_ratio(&x, &model)?,
        "max_error": framekit::matrix::max_abs_diff(&xr, &x),
        "reconstruction": vector_json(&xr),
    })))
}

pub(crate) fn mse(args: &SamplingArgs) -> CmdResult {
    let cfg = Resolved::from_args(args)?;
    let model = cfg.model(cfg.period)?;
    let filter = cfg.filter.build(&model)?;
    let profile = analytic_mse(&filter, &model, cfg.sigma2)?;
    let decomposition = match mse_decomposition(&filter, &model, cfg.sigma2) {
        Ok(d) => json!({"inband": d.inband, "outband": d.outband, "total": d.total()}),
        Err(framekit::Error::NotPerfectReconstruction { .. }) => Value::Null,
        Err(e) => return Err(e.into()),
    };
    let x = cfg.signal()?;
    let mc = cfg.monte_carlo(&x, &filter, &model)?;
    Ok(Report::Json(json!({
        "config": cfg.to_json(),
        "samples": model.samples(),
        "oversampling_factor": model.oversampling_factor(),
        "analytic_mse": profile.mean,
        "closed_form_mse": closed_form_mse(&filter, &model, cfg.sigma2),
        "profile_spread": profile.spread(),
        "profile": profile.profile,
        "decomposition": decomposition,
        "mc_mse": mc.map(|m| m.0),
        "stderr": mc.map(|m| m.1),
    })))
}

pub(crate) fn sweep(args: &SamplingArgs, periods: &[usize], csv: bool) -> CmdResult {
    if args.period.is_some() {
        return Err(CliError::Usage("sample-sweep takes --periods, not --period".into()));
    }
    let cfg = Resolved::from_args(args)?;
    let x = cfg.signal()?;
    let mut rows = Vec::with_capacity(periods.len());
    for &period in periods {
        let model = cfg.model(period)?;
        let filter = cfg.filter.build(&model)?;
        let analytic = analytic_mse(&filter, &model, cfg.sigma2)?.mean;
        let mc = cfg.monte_carlo(&x, &filter, &model)?;
        rows.push((model.oversampling_factor(), analytic, mc));
    }
    if csv {
        let mut out = String::from("oversampling_factor,analytic_mse,mc_mse,stderr\n");
        for (r, a, mc) in &rows {
            let (m, s) = match mc {
                Some((m, s)) => (format_f64(*m), format_f64(*s)),
                None => (String::new(), String::new()),
            };
            out.push_str(&format!("{},{},{m},{s}\n", format_f64(*r), format_f64(*a)));
        }
        return Ok(Report::Csv(out));
    }
    let mut config = cfg.to_json();
    if let Value::Object(map) = &mut config {
        map.remove("period");
        map.insert("periods".into(), json!(periods));
    }
    Ok(Report::Json(json!({
        "config": config,
        "rows": rows
            .iter()
            .map(|(r, a, mc)| json!({
                "oversampling_factor": r,
                "analytic_mse": a,
                "mc_mse": mc.map(|m| m.0),
                "stderr": mc.map(|m| m.1),
            }))
            .collect::<Vec<_>>(),
    })))
}
