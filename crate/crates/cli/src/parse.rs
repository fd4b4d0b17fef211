//! Argument value parsers.

use num_bigint::BigInt;
use zetasum::Rational;

/// Parses `p`, `p/q` or a plain decimal like `-2.5` into an exact rational.
pub fn rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    let bad = || format!("`{s}` is not a rational number (expected p, p/q or a decimal)");
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q == BigInt::from(0) {
            return Err(format!("`{s}` has a zero denominator"));
        }
        return Ok(Rational::new(p, q));
    }
    let (negative, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if (int.is_empty() && frac.is_empty()) || !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits: BigInt = format!("0{int}{frac}").parse().map_err(|_| bad())?;
    let scale = BigInt::from(10u32).pow(frac.len() as u32);
    let r = Rational::new(digits, scale);
    Ok(if negative { -r } else { r })
}

/// Parses `start:end:step` into the inclusive list `start, start+step, …`.
pub fn range(s: &str) -> Result<Vec<f64>, String> {
    let parts: Vec<&str> = s.split(':').collect();
    let [a, b, step] = parts.as_slice() else {
        return Err(format!("`{s}` is not a range (expected start:end:step)"));
    };
    let num = |t: &str| {
        t.trim()
            .parse::<f64>()
            .map_err(|_| format!("`{t}` in `{s}` is not a number"))
    };
    let (a, b, step) = (num(a)?, num(b)?, num(step)?);
    if !(step > 0.0 && b >= a) || !a.is_finite() || !b.is_finite() {
        return Err(format!("`{s}` needs start <= end and step > 0"));
    }
    let count = ((b - a) / step + 1e-9).floor() as usize + 1;
    if count > 100_000 {
        return Err(format!("`{s}` expands to {count} values; the limit is 100000"));
    }
    Ok((0..count).map(|i| a + step * i as f64).collect())
}
