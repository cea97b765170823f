//! Front end for `projdim-core`: argument parsing, system files, CSV point
//! clouds and versioned JSON reports.

pub mod args;
pub mod error;
pub mod io;
pub mod report;

use serde_json::{json, Value};

use projdim_core::cover::{box_dimension_estimate, svd_cover_upper};
use projdim_core::ergodic::{
    empirical_delta, lyapunov_dimension, lyapunov_exponents, shannon_entropy,
};
use projdim_core::linalg::parse_rational;
use projdim_core::pressure::rauzy::default_depth;
use projdim_core::pressure::{
    affinity_dimension, pressure_estimate, rauzy_dimension, rauzy_gamma_system,
};
use projdim_core::projective::attractor_points;
use projdim_core::semigroup::rauzy::traceless_part;
use projdim_core::semigroup::words::node_cap;
use projdim_core::semigroup::{
    diophantine_check, irreducibility_probe, lie_algebra_dimension, positivity_report,
};
use projdim_core::{DimensionEstimate, Matrix3};

pub use args::{Cli, Command};
pub use error::{CliError, CliResult};
pub use report::Report;

/// Side length of the rasterized SVG.
pub const SVG_SIZE: usize = 800;

/// Depth cap for the invariant-subspace probe of `check`.
const IRREDUCIBILITY_DEPTH: usize = 3;

fn estimate_json(est: &DimensionEstimate) -> Value {
    json!({
        "value": est.value,
        "bracket": [est.bracket_lo, est.bracket_hi],
        "depth": est.depth,
        "method": est.method,
        "diagnostics": est.diagnostics,
    })
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn parse_resolutions(text: &str) -> CliResult<Vec<u32>> {
    let bad = || {
        CliError::Usage(format!(
            "--res expects `lo:hi` or a comma list, got `{text}`"
        ))
    };
    let num = |s: &str| s.trim().parse::<u32>().map_err(|_| bad());
    let res: Vec<u32> = match text.split_once(':') {
        Some((lo, hi)) => (num(lo)?..=num(hi)?).collect(),
        None => text.split(',').map(num).collect::<CliResult<_>>()?,
    };
    if res.is_empty() || res.iter().any(|&n| n == 0 || n > 40) {
        return Err(bad());
    }
    Ok(res)
}

fn positive(name: &str, x: f64) -> CliResult<()> {
    if x > 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(CliError::Usage(format!(
            "--{name} must be positive, got {x}"
        )))
    }
}

fn execute(cmd: &Command) -> CliResult<Value> {
    Ok(match cmd {
        Command::Pressure(a) => {
            let sys = io::load_system(&a.system)?;
            let depth = a.depth.unwrap_or_else(|| default_depth(sys.len()));
            let p = pressure_estimate(&sys, a.s, depth)?;
            json!({
                "value": p.raw,
                "bracket": [p.lower, p.upper],
                "depth": p.depth,
                "diagnostics": {
                    "s": p.s,
                    "submult_constant": p.submult_constant,
                    "supermult_constant": p.supermult_constant,
                    "heuristic": p.heuristic,
                },
            })
        }
        Command::Dimension(a) => {
            positive("tol", a.tol)?;
            let sys = io::load_system(&a.system)?;
            let depth = a.depth.unwrap_or_else(|| default_depth(sys.len()));
            estimate_json(&affinity_dimension(&sys, a.tol, depth)?)
        }
        Command::Rauzy(a) => {
            positive("tol", a.tol)?;
            let eps = parse_rational(&a.epsilon)?;
            estimate_json(&rauzy_dimension(a.n as usize, a.depth, a.tol, &eps)?)
        }
        Command::Lyapunov(a) => {
            let sys = io::load_system(&a.system)?;
            let stats = lyapunov_exponents(&sys, a.steps, a.seed)?;
            let h = shannon_entropy(sys.probabilities_f64())?;
            let dim = lyapunov_dimension(h, stats.chi)?;
            json!({
                "value": dim,
                "chi": stats.chi,
                "stderr": stats.stderr,
                "sum": stats.sum(),
                "stderr_sum": stats.stderr_sum(),
                "entropy": h,
                "steps": stats.steps,
                "seed": stats.seed,
            })
        }
        Command::Delta(a) => {
            let sys = io::load_system(&a.system)?;
            estimate_json(&empirical_delta(&sys, a.planes, a.samples, a.res, a.seed)?)
        }
        Command::Render(a) => {
            let sys = io::load_system(&a.system)?;
            let cloud =
                attractor_points(&sys, a.sampler.into(), a.points, a.coords.into(), a.seed)?;
            io::write_cloud(&a.out, &cloud)?;
            if let Some(svg) = &a.svg {
                io::write_text(svg, &io::render_svg(&cloud, SVG_SIZE))?;
            }
            let dim = cloud.dim();
            let mut lo = vec![f64::INFINITY; dim];
            let mut hi = vec![f64::NEG_INFINITY; dim];
            for p in cloud.iter() {
                for k in 0..dim {
                    lo[k] = lo[k].min(p[k]);
                    hi[k] = hi[k].max(p[k]);
                }
            }
            json!({
                "points": cloud.len(),
                "coords": cloud.coords,
                "columns": io::header(cloud.coords),
                "min": lo,
                "max": hi,
            })
        }
        Command::Cover(a) => {
            let sys = io::load_system(&a.system)?;
            to_value(&svd_cover_upper(&sys, a.s, a.delta)?)
        }
        Command::Boxdim(a) => {
            let res = parse_resolutions(&a.res)?;
            let cloud = io::read_cloud(&a.cloud)?;
            estimate_json(&box_dimension_estimate(&cloud, &res)?)
        }
        Command::Check(a) => {
            let sys = io::load_system(&a.system)?;
            let pos = positivity_report(&sys);
            let dio = diophantine_check(&sys, a.depth)?;
            let gens: Vec<Matrix3> = sys.raw_letters().iter().map(traceless_part).collect();
            let lie_dim = lie_algebra_dimension(&gens)?;
            let irr = irreducibility_probe(&sys, a.depth.min(IRREDUCIBILITY_DEPTH))?;
            json!({
                "positive": pos.positive,
                "diophantine": dio.all_distinct,
                "diophantine_depth": a.depth,
                "lie_dim": lie_dim,
                "irreducible": irr.invariant_line.is_none() && irr.invariant_plane.is_none(),
                "positivity": to_value(&pos),
                "diophantine_levels": to_value(&dio),
                "invariant_subspaces": irr.to_json(),
            })
        }
        Command::Gamma(a) => {
            let eps = parse_rational(&a.epsilon)?;
            let sys = rauzy_gamma_system(a.n as usize, &eps)?;
            io::write_text(&a.out, &sys.to_json())?;
            json!({
                "label": sys.label(),
                "letters": sys.len(),
                "class": sys.contraction_class(),
            })
        }
    })
}

fn command_name(cmd: &Command) -> String {
    match to_value(cmd).get("command") {
        Some(Value::String(s)) => s.clone(),
        _ => unreachable!("commands serialize with a tag"),
    }
}

/// Runs one command and returns its report; thread and node-cap settings
/// are applied by the caller.
pub fn run(cli: &Cli) -> CliResult<Report> {
    let result = execute(&cli.command)?;
    let mut config = to_value(&cli.command);
    if let Value::Object(m) = &mut config {
        m.insert("threads".into(), json!(cli.threads));
        m.insert("node_cap".into(), json!(node_cap()));
    }
    Ok(Report::new(&command_name(&cli.command), config, result))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn resolution_syntax() {
        assert_eq!(parse_resolutions("4:7").unwrap(), vec![4, 5, 6, 7]);
        assert_eq!(parse_resolutions("3, 9").unwrap(), vec![3, 9]);
        assert!(parse_resolutions("7:4").is_err());
        assert!(parse_resolutions("0:3").is_err());
        assert!(parse_resolutions("a").is_err());
    }

    #[test]
    fn command_names_are_snake_case() {
        use clap::Parser;
        let cli = Cli::parse_from(["projdim", "boxdim", "--cloud", "c.csv"]);
        assert_eq!(command_name(&cli.command), "boxdim");
    }
}
