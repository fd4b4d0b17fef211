//! Acceptance suite: one PASS/FAIL line per criterion, with the measured
//! runtime against its budget. Exits non-zero if any criterion fails.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use zetasum::exact::{faulhaber_sum, periodic_mean, pm_polynomial, BernoulliTable, PeriodicPolynomial};
use zetasum::finite_part::{
    eps_grid, extract_finite_part, fp_log_power_integral, fp_log_power_integral_exact, fp_power_integral,
};
use zetasum::integral::{cesaro_integral, default_grid, IntegrandSpec};
use zetasum::quadrature::{integrate, QuadratureOptions};
use zetasum::series::{cesaro_sum, SeriesSpec};
use zetasum::zeta::{
    lemma_witness, staircase_value, zeta_prime_via_cesaro, zeta_via_cesaro, PrimitiveState, StaircaseSpec,
};
use zetasum::Rational;
use zetasum_cli::{run, OutputRecord};

type Check = Result<String, String>;

fn q(p: i64, d: i64) -> Rational {
    Rational::new(p.into(), d.into())
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Runs `work` under the clock; `verify` checks its output afterwards so
/// oracles are not billed to the implementation.
fn timed<T>(work: impl FnOnce() -> Result<T, String>) -> (Result<T, String>, Duration) {
    let start = Instant::now();
    let r = work();
    (r, start.elapsed())
}

struct Suite {
    failures: usize,
}

impl Suite {
    fn report(&mut self, id: u32, name: &str, budget: Duration, outcome: (Check, Duration)) {
        let (result, elapsed) = outcome;
        let timing = format!("{:.3} ms / {} ms", elapsed.as_secs_f64() * 1e3, budget.as_millis());
        let (status, detail) = match result {
            Ok(d) if elapsed <= budget => ("PASS", d),
            Ok(d) => ("FAIL", format!("over time budget; {d}")),
            Err(e) => ("FAIL", e),
        };
        if status == "FAIL" {
            self.failures += 1;
        }
        println!("{status} {id:>2} {name:<36} [{timing}] {detail}");
    }
}

fn cli_record(args: &[&str]) -> Result<OutputRecord, String> {
    let mut out = Vec::new();
    let argv = ["zetasum", "--format", "structured"]
        .into_iter()
        .chain(args.iter().copied());
    let code = run(argv, &mut out);
    if code != 0 {
        return Err(format!("{args:?} exited with {code}"));
    }
    serde_json::from_slice(&out).map_err(|e| e.to_string())
}

fn exact_zeta() -> (Check, Duration) {
    let expected = ["-1/2", "-1/12", "0", "1/120", "0", "-1/252"];
    let args: Vec<String> = (0..=5).map(|n| format!("-{n}")).collect();
    // the budget is per evaluation: report the slowest single call
    let mut t = Duration::ZERO;
    let records = args
        .iter()
        .map(|a| {
            let (r, dt) = timed(|| cli_record(&["zeta", a.as_str()]));
            t = t.max(dt);
            r
        })
        .collect::<Result<Vec<_>, _>>();
    let check = records.and_then(|recs| {
        for (n, (r, e)) in recs.iter().zip(expected).enumerate() {
            ensure(r.result.exact.as_deref() == Some(e), || {
                format!("zeta -{n} gave {:?}, expected {e}", r.result.exact)
            })?;
        }
        Ok(expected.join(", "))
    });
    (check, t)
}

/// Akiyama–Tanigawa; sign of index 1 flipped to the B_1 = −1/2 convention.
fn akiyama_tanigawa(n: usize) -> Vec<Rational> {
    let mut a = vec![Rational::zero(); n + 1];
    let mut out = Vec::with_capacity(n + 1);
    for m in 0..=n {
        a[m] = Rational::one() / Rational::from_integer(BigInt::from(m + 1));
        for j in (1..=m).rev() {
            a[j - 1] = Rational::from_integer(BigInt::from(j)) * (&a[j - 1] - &a[j]);
        }
        out.push(a[0].clone());
    }
    out[1] = -out[1].clone();
    out
}

fn bernoulli_numbers() -> (Check, Duration) {
    let (table, t) = timed(|| {
        let mut table = BernoulliTable::new();
        table.extend_to(30);
        Ok(table.values().to_vec())
    });
    let check = table.and_then(|b| {
        let listed = [q(1, 1), q(-1, 2), q(1, 6), q(0, 1), q(-1, 30), q(0, 1)];
        ensure(b[..6] == listed, || format!("B_0..B_5 = {:?}", &b[..6]))?;
        let oracle = akiyama_tanigawa(30);
        for i in 6..=30 {
            ensure(b[i] == oracle[i], || {
                format!("B_{i} = {} but oracle gives {}", b[i], oracle[i])
            })?;
        }
        Ok(format!("B_30 = {}", b[30]))
    });
    (check, t)
}

fn faulhaber() -> (Check, Duration) {
    let (sums, t) = timed(|| {
        let mut v = Vec::with_capacity(2000);
        for n in 1..=10u32 {
            for m in 1..=200u64 {
                v.push(faulhaber_sum(n, m).map_err(|e| e.to_string())?);
            }
        }
        Ok(v)
    });
    let check = sums.and_then(|v| {
        let mut it = v.iter();
        for n in 1..=10u32 {
            let mut brute = BigInt::zero();
            for m in 1..=200u64 {
                let got = it.next().unwrap();
                ensure(*got == Rational::from_integer(brute.clone()), || {
                    format!("n = {n}, m = {m}")
                })?;
                brute += BigInt::from(m).pow(n);
            }
        }
        Ok(format!("{} cases", v.len()))
    });
    (check, t)
}

fn pm_cancellation() -> (Check, Duration) {
    timed(|| {
        let mut count = 0;
        for n in 1..=12u32 {
            for m in 1..=n {
                let mean = periodic_mean(&pm_polynomial(n, m).map_err(|e| e.to_string())?);
                ensure(mean.is_zero(), || format!("mean of P_{m} for n = {n} is {mean}"))?;
                count += 1;
            }
            let b = BernoulliTable::new().get(n as usize + 1);
            let expected = -b / Rational::from_integer(BigInt::from(n + 1));
            let mean = periodic_mean(&pm_polynomial(n, 0).map_err(|e| e.to_string())?);
            ensure(mean == expected, || {
                format!("mean of P_0 for n = {n} is {mean}, expected {expected}")
            })?;
            count += 1;
        }
        Ok(format!("{count} polynomials"))
    })
}

fn cesaro_series() -> (Check, Duration) {
    timed(|| {
        let err = |e: zetasum::series::SeriesError| e.to_string();
        let grandi = cesaro_sum(&SeriesSpec::alternating(), 1, 10_000, 1e-4).map_err(err)?;
        ensure((grandi.value - 0.5).abs() < 1e-4, || {
            format!("(C,1) Σ(−1)^n = {}", grandi.value)
        })?;
        let lin = cesaro_sum(&SeriesSpec::alternating_linear(), 2, 100_000, 1e-3).map_err(err)?;
        ensure((lin.value + 0.25).abs() < 1e-3, || {
            format!("(C,2) Σ(−1)^n n = {}", lin.value)
        })?;
        for k in 0..=6 {
            let e = cesaro_sum(&SeriesSpec::geometric(2.0), k, 10_000, 1e-6).map_err(err)?;
            ensure(!e.converged, || format!("Σ2^n reported convergent at k = {k}"))?;
        }
        Ok(format!(
            "{:.6}, {:.6}, Σ2^n divergent for k ≤ 6",
            grandi.value, lin.value
        ))
    })
}

fn cesaro_integral_sine() -> (Check, Duration) {
    timed(|| {
        let grid = default_grid();
        let mut vals = Vec::new();
        for a in [1.0, 2.0] {
            let e = cesaro_integral(&IntegrandSpec::sin(a), 1.0, &grid, 1e-4).map_err(|e| e.to_string())?;
            ensure((e.value - 1.0 / a).abs() < 1e-4, || format!("a = {a}: {}", e.value))?;
            vals.push(format!("{:.7}", e.value));
        }
        Ok(vals.join(", "))
    })
}

/// `∫_ε^1 t^α (ln t)^p dt` by quadrature in `u = ln(1/t)`.
fn tail_integral(alpha: f64, log: bool, eps: f64) -> f64 {
    let opts = QuadratureOptions {
        abs_tol: 0.0,
        rel_tol: 1e-15,
        initial_intervals: 64,
        ..Default::default()
    };
    let beta = alpha + 1.0;
    let r = if log {
        integrate(|u| -u * (-beta * u).exp(), 0.0, -eps.ln(), opts)
    } else {
        integrate(|u| (-beta * u).exp(), 0.0, -eps.ln(), opts)
    };
    r.value
}

fn finite_parts() -> (Check, Duration) {
    let alphas = [q(-3, 1), q(-5, 2), q(-2, 1), q(0, 1), q(1, 2), q(2, 1)];
    let (fits, t) = timed(|| {
        ensure(fp_power_integral(-1.0, 1.0) == Ok(0.0), || "F.p.∫ x^-1 is not 0".into())?;
        for a in &alphas {
            let b = a + Rational::one();
            let expected = -(&b * &b).recip();
            let got = fp_log_power_integral_exact(a);
            ensure(got == expected, || format!("alpha = {a}: {got}"))?;
            let f = fp_log_power_integral(a.to_f64().unwrap(), 1.0).map_err(|e| e.to_string())?;
            ensure(f == expected.to_f64().unwrap(), || format!("alpha = {a}: float {f}"))?;
        }
        let mut fits = Vec::new();
        let d = extract_finite_part(|e| tail_integral(-1.0, false, e), &[(0.0, 1)], &eps_grid(0.5, 1e-6, 20))
            .map_err(|e| e.to_string())?;
        fits.push((-1.0, false, d.finite_part, 0.0));
        for a in &alphas {
            let af = a.to_f64().unwrap();
            let beta = af + 1.0;
            let (basis, grid) = if beta < 0.0 {
                (vec![(-beta, 0), (-beta, 1)], eps_grid(0.5, 2e-4, 24))
            } else {
                (Vec::new(), eps_grid(1e-9, 1e-12, 12))
            };
            let d = extract_finite_part(|e| tail_integral(af, true, e), &basis, &grid).map_err(|e| e.to_string())?;
            fits.push((af, true, d.finite_part, -1.0 / (beta * beta)));
        }
        Ok(fits)
    });
    let check = fits.and_then(|fits| {
        for &(a, log, got, want) in &fits {
            ensure((got - want).abs() < 1e-6, || {
                format!("alpha = {a}, log = {log}: fit {got}, expected {want}")
            })?;
        }
        Ok(format!("{} closed forms, {} fits", alphas.len() + 1, fits.len()))
    });
    (check, t)
}

fn zeta_estimator() -> (Check, Duration) {
    let (vals, t) = timed(|| {
        let e = |r: Result<zetasum::CesaroEvaluation, _>| {
            r.map(|e| e.value).map_err(|e: zetasum::zeta::ZetaError| e.to_string())
        };
        Ok((
            e(zeta_via_cesaro(0.0, Some(1), 1e4, 1e-3))?,
            e(zeta_via_cesaro(1.0, Some(2), 1e4, 1e-3))?,
            e(zeta_via_cesaro(-0.5, Some(0), 1e8, 1e-3))?,
        ))
    });
    let check = vals.and_then(|(z0, z1, zh)| {
        ensure((z0 + 0.5).abs() < 1e-3, || format!("ζ(0) ≈ {z0}"))?;
        ensure((z1 + 1.0 / 12.0).abs() < 1e-2, || format!("ζ(−1) ≈ {z1}"))?;
        let oracle = common::zeta_em(0.5);
        ensure((zh - oracle).abs() < 1e-4, || format!("ζ(1/2) ≈ {zh}, oracle {oracle}"))?;
        Ok(format!("{z0:.6}, {z1:.6}, {zh:.7}"))
    });
    (check, t)
}

fn zeta_prime_estimator() -> (Check, Duration) {
    let (vals, t) = timed(|| {
        let e = |r: Result<zetasum::CesaroEvaluation, _>| {
            r.map(|e| e.value).map_err(|e: zetasum::zeta::ZetaError| e.to_string())
        };
        Ok((
            e(zeta_prime_via_cesaro(0.0, Some(1), 1e4, 1e-3))?,
            e(zeta_prime_via_cesaro(-2.0, Some(0), 1e4, 1e-3))?,
        ))
    });
    let check = vals.and_then(|(d0, d2)| {
        let half_ln_2pi = -0.5 * (2.0 * std::f64::consts::PI).ln();
        ensure((d0 - half_ln_2pi).abs() < 1e-2, || format!("ζ′(0) ≈ {d0}"))?;
        let oracle = common::zeta_prime_direct(2.0);
        ensure((d2 - oracle).abs() < 1e-4, || format!("ζ′(2) ≈ {d2}, oracle {oracle}"))?;
        Ok(format!("{d0:.6}, {d2:.7}"))
    });
    (check, t)
}

fn property_suites() -> (Check, Duration) {
    timed(|| {
        // Convergent series keep their sum at every order.
        let tol = 1e-5;
        let series = [
            (SeriesSpec::power(-2.0), std::f64::consts::PI.powi(2) / 6.0),
            (SeriesSpec::geometric(0.5), 2.0),
            (SeriesSpec::alternating_harmonic(), std::f64::consts::LN_2),
        ];
        for (s, exact) in &series {
            for k in 0..=3 {
                let e = cesaro_sum(s, k, 1_000_000, tol).map_err(|e| e.to_string())?;
                ensure((e.value - exact).abs() < 10.0 * tol, || {
                    format!("k = {k}: {} vs {exact}", e.value)
                })?;
            }
        }

        // Mean-zero periodic polynomials have Cesàro limit 0.
        let mut periodic = vec![PeriodicPolynomial::from_ratios(&[(1, 2), (-1, 1)])];
        for n in 1..=6 {
            for m in 1..=n {
                periodic.push(pm_polynomial(n, m).map_err(|e| e.to_string())?);
            }
        }
        for p in &periodic {
            let e = lemma_witness(p, 1, 1e4).map_err(|e| e.to_string())?;
            ensure(e.value.abs() < 1e-6, || format!("{p}: {}", e.value))?;
        }

        // fp_power_integral is the ordinary integral for α > −1.
        for i in 0..50 {
            let alpha = -0.95 + 0.1 * i as f64;
            let m = (1.0 / (alpha + 1.0)).ceil().max(1.0);
            let opts = QuadratureOptions {
                abs_tol: 1e-15,
                initial_intervals: 8,
                ..Default::default()
            };
            let ordinary = integrate(|u: f64| m * u.powf(m - 1.0) * u.powf(m * alpha), 0.0, 1.0, opts).value;
            let fp = fp_power_integral(alpha, 1.0).map_err(|e| e.to_string())?;
            ensure((fp - ordinary).abs() < 1e-12 * (1.0 + ordinary.abs()), || {
                format!("alpha = {alpha}: {fp} vs {ordinary}")
            })?;
        }

        // Closed-form primitive iteration against quadrature of the staircase.
        for alpha in [0.0, 1.0, 0.5] {
            let spec = StaircaseSpec::new(alpha, false).map_err(|e| e.to_string())?;
            let mut state = PrimitiveState::initial(spec, 1).map_err(|e| e.to_string())?;
            for n in 1..=50u64 {
                if n > 1 {
                    state.advance();
                }
                let opts = QuadratureOptions {
                    initial_intervals: n as usize,
                    ..Default::default()
                };
                let quad = integrate(
                    |t| staircase_value(&spec, t.max(f64::MIN_POSITIVE)).unwrap_or(f64::NAN),
                    0.0,
                    n as f64,
                    opts,
                );
                ensure((state.value(1) - quad.value).abs() < 1e-10, || {
                    format!("alpha = {alpha}, n = {n}: {} vs {}", state.value(1), quad.value)
                })?;
            }
        }
        Ok(format!(
            "{} series, {} periodic, 50 fp, 150 primitives",
            series.len() * 4,
            periodic.len()
        ))
    })
}

fn main() {
    let mut suite = Suite { failures: 0 };
    let ms = Duration::from_millis;
    suite.report(1, "exact zeta values", ms(1), exact_zeta());
    suite.report(2, "Bernoulli numbers", ms(10), bernoulli_numbers());
    suite.report(3, "Faulhaber vs brute force", ms(1000), faulhaber());
    suite.report(4, "periodic coefficient cancellation", ms(1000), pm_cancellation());
    suite.report(5, "Cesàro series", ms(2000), cesaro_series());
    suite.report(6, "Cesàro integral of sin(at)", ms(1000), cesaro_integral_sine());
    suite.report(7, "finite parts", ms(1000), finite_parts());
    suite.report(8, "zeta estimator", ms(5000), zeta_estimator());
    suite.report(9, "zeta derivative estimator", ms(5000), zeta_prime_estimator());
    suite.report(10, "property suites", ms(30_000), property_suites());
    if suite.failures > 0 {
        println!("{} criteria failed", suite.failures);
        std::process::exit(1);
    }
    println!("all criteria passed");
}
