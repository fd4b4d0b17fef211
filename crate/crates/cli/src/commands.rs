use num_traits::ToPrimitive;
use rayon::prelude::*;
use zetasum::exact::{bernoulli, faulhaber_sum, pm_polynomial, zeta_neg_int};
use zetasum::finite_part::{
    fp_log_power_integral, fp_log_power_integral_exact, fp_power_integral, fp_power_integral_exact,
};
use zetasum::integral::{cesaro_integral, geometric_grid, IntegrandSpec};
use zetasum::series::{cesaro_sum, detect_order, SeriesSpec};
use zetasum::zeta::{default_order, zeta_prime_via_cesaro, zeta_via_cesaro};
use zetasum::{CesaroEvaluation, Rational};

use crate::parse;
use crate::record::OutputRecord;
use crate::{Command, EstimateArgs};

type Outcome = Result<Vec<OutputRecord>, String>;

pub(crate) fn execute(command: &Command) -> Outcome {
    match command {
        Command::Bernoulli { n } => Ok(vec![OutputRecord::new("bernoulli").input("n", n).exact(bernoulli(*n))]),
        Command::Faulhaber { n, m } => {
            let v = faulhaber_sum(*n, *m).map_err(|e| e.to_string())?;
            Ok(vec![OutputRecord::new("faulhaber")
                .input("n", n)
                .input("m", m)
                .exact(v)])
        }
        Command::Zeta { s } => {
            if *s > 0 {
                return Err(format!(
                    "exact values are available only at non-positive integers, got {s}; use zeta-estimate"
                ));
            }
            let n = u32::try_from(-s).map_err(|_| format!("{s} is out of range"))?;
            let v = zeta_neg_int(n);
            let f = v.to_f64().unwrap_or(f64::NAN);
            Ok(vec![OutputRecord::new("zeta").input("s", s).exact(v).float(f)])
        }
        Command::ZetaEstimate(a) => estimate("zeta-estimate", a, zeta_via_cesaro),
        Command::ZetaPrimeEstimate(a) => estimate("zeta-prime-estimate", a, zeta_prime_via_cesaro),
        Command::CesaroSum {
            series,
            param,
            order,
            terms,
            tol,
            detect,
        } => {
            let spec = named_series(series, *param)?;
            let mut r = OutputRecord::new("cesaro-sum")
                .input("series", series)
                .input("order", order)
                .input("terms", terms)
                .input("tol", tol);
            if let Some(p) = param {
                r = r.input("param", p);
            }
            if *detect {
                r = r.input("detect", true);
                match detect_order(&spec, *order, *terms, *tol).map_err(|e| e.to_string())? {
                    Some((_, e)) => r = r.evaluation(&e),
                    None => {
                        // Report the highest order tried, which did not converge.
                        let e = cesaro_sum(&spec, *order, *terms, *tol).map_err(|e| e.to_string())?;
                        r = r.evaluation(&e);
                    }
                }
            } else {
                let e = cesaro_sum(&spec, *order, *terms, *tol).map_err(|e| e.to_string())?;
                r = r.evaluation(&e);
            }
            Ok(vec![r])
        }
        Command::CesaroInt {
            integrand,
            param,
            order,
            xmax,
            tol,
        } => {
            let f = named_integrand(integrand, *param)?;
            if !(*xmax >= 1e2 && xmax.is_finite()) {
                return Err(format!("--xmax must be at least 100, got {xmax}"));
            }
            let grid = geometric_grid(xmax / 1e3, *xmax, 16);
            let e = cesaro_integral(&f, *order, &grid, *tol).map_err(|e| e.to_string())?;
            let mut r = OutputRecord::new("cesaro-int")
                .input("integrand", integrand)
                .input("order", order)
                .input("xmax", xmax)
                .input("tol", tol);
            if let Some(p) = param {
                r = r.input("param", p);
            }
            Ok(vec![r.evaluation(&e)])
        }
        Command::FpInt { alpha, upper } => finite_part("fp-int", alpha, upper, false),
        Command::FpLogInt { alpha, upper } => finite_part("fp-log-int", alpha, upper, true),
        Command::PmPoly { n, m } => {
            let p = pm_polynomial(*n, *m).map_err(|e| e.to_string())?;
            Ok(vec![OutputRecord::new("pm-poly").input("n", n).input("m", m).exact(p)])
        }
    }
}

fn estimate(
    name: &str,
    a: &EstimateArgs,
    f: fn(f64, Option<u32>, f64, f64) -> Result<CesaroEvaluation, zetasum::zeta::ZetaError>,
) -> Outcome {
    let alphas = match (&a.alpha_range, a.alpha) {
        (Some(r), _) => parse::range(r)?,
        (None, Some(alpha)) => vec![alpha],
        (None, None) => return Err("--alpha or --alpha-range is required".into()),
    };
    alphas
        .par_iter()
        .map(|&alpha| {
            let k = a.order.unwrap_or_else(|| default_order(alpha));
            let e = f(alpha, Some(k), a.xmax, a.tol).map_err(|e| format!("alpha = {alpha}: {e}"))?;
            Ok(OutputRecord::new(name)
                .input("alpha", alpha)
                .input("order", k)
                .input("xmax", a.xmax)
                .input("tol", a.tol)
                .evaluation(&e))
        })
        .collect()
}

fn need(param: Option<f64>, name: &str) -> Result<f64, String> {
    param.ok_or_else(|| format!("`{name}` needs a numeric parameter"))
}

fn named_series(name: &str, param: Option<f64>) -> Result<SeriesSpec, String> {
    let no_param = |s: SeriesSpec| match param {
        Some(_) => Err(format!("`{name}` takes no parameter")),
        None => Ok(s),
    };
    match name {
        "alt-sign" => no_param(SeriesSpec::alternating()),
        "alt-sign-n" => no_param(SeriesSpec::alternating_linear()),
        "alt-harmonic" => no_param(SeriesSpec::alternating_harmonic()),
        "geometric" => Ok(SeriesSpec::geometric(need(param, name)?)),
        _ => match name.strip_prefix("power-").or_else(|| name.strip_prefix("power")) {
            Some(p) if !p.is_empty() => {
                let p: f64 = p.parse().map_err(|_| format!("`{name}`: `{p}` is not a number"))?;
                no_param(SeriesSpec::power(p))
            }
            Some(_) => Ok(SeriesSpec::power(need(param, name)?)),
            None => Err(format!(
                "unknown series `{name}` (expected alt-sign, alt-sign-n, alt-harmonic, geometric R, power-P)"
            )),
        },
    }
}

fn named_integrand(name: &str, param: Option<f64>) -> Result<IntegrandSpec, String> {
    Ok(match name {
        "sin" => IntegrandSpec::sin(param.unwrap_or(1.0)),
        "cos" => IntegrandSpec::cos(param.unwrap_or(1.0)),
        "exp-decay" => IntegrandSpec::exp_decay(param.unwrap_or(1.0)),
        "square-wave" => IntegrandSpec::square_wave(),
        "const" => IntegrandSpec::constant(need(param, name)?),
        _ => {
            return Err(format!(
                "unknown integrand `{name}` (expected sin A, cos A, exp-decay R, square-wave, const C)"
            ))
        }
    })
}

fn finite_part(name: &str, alpha: &str, upper: &str, log: bool) -> Outcome {
    let a = parse::rational(alpha)?;
    let b = parse::rational(upper)?;
    let (af, bf) = (a.to_f64().unwrap_or(f64::NAN), b.to_f64().unwrap_or(f64::NAN));
    let v = if log {
        fp_log_power_integral(af, bf)
    } else {
        fp_power_integral(af, bf)
    }
    .map_err(|e| e.to_string())?;
    let exact: Option<Rational> = if log {
        (b == Rational::from_integer(1.into())).then(|| fp_log_power_integral_exact(&a))
    } else {
        fp_power_integral_exact(&a, &b)
    };
    let mut r = OutputRecord::new(name).input("alpha", &a).input("upper", &b).float(v);
    if let Some(e) = exact {
        r = r.exact(e);
    }
    Ok(vec![r])
}
