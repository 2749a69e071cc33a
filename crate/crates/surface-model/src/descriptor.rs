use exact_algebra::RatPoly;
use std::collections::BTreeMap;

use crate::poly_parse::parse_poly;
use crate::{Result, SurfaceError, WeierstrassSurface};

/// A parsed surface descriptor file: key-value lines with `a1`..`a6` as
/// polynomial strings in `s`, an optional `bad_primes` override, and optional
/// `expected.*` entries passed through for golden tests.
#[derive(Debug, Clone)]
pub struct SurfaceDescriptor {
    pub name: String,
    /// a1, a2, a3, a4, a6 (missing keys default to zero).
    pub coefficients: [RatPoly; 5],
    pub bad_primes: Option<Vec<u64>>,
    pub expected: BTreeMap<String, String>,
}

impl SurfaceDescriptor {
    /// Normalize into an integral model, carrying the bad-prime override.
    pub fn into_surface(self) -> Result<WeierstrassSurface> {
        let mut s = WeierstrassSurface::normalize_integral_model(&self.name, self.coefficients)?;
        s.declared_bad_primes = self.bad_primes;
        Ok(s)
    }
}

/// Parse a descriptor file. Lines are `key = value`; `#` starts a comment;
/// values may be double-quoted. Example:
///
/// ```text
/// name = example
/// a1 = "1 + 3*s^2*(s - 1)"
/// a3 = "s^6*(s - 1)^3"
/// bad_primes = [3, 7]
/// expected.rank = 5
/// ```
pub fn parse_descriptor(text: &str) -> Result<SurfaceDescriptor> {
    let mut name: Option<String> = None;
    let mut coeffs: [RatPoly; 5] = [
        RatPoly::zero(),
        RatPoly::zero(),
        RatPoly::zero(),
        RatPoly::zero(),
        RatPoly::zero(),
    ];
    let mut seen = [false; 5];
    let mut bad_primes: Option<Vec<u64>> = None;
    let mut expected = BTreeMap::new();

    for (lineno, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(SurfaceError::Parse(format!(
                "line {}: expected 'key = value'",
                lineno + 1
            )));
        };
        let key = key.trim();
        let value = unquote(value.trim());
        match key {
            "name" => name = Some(value.to_string()),
            "a1" | "a2" | "a3" | "a4" | "a6" => {
                let idx = match key {
                    "a1" => 0,
                    "a2" => 1,
                    "a3" => 2,
                    "a4" => 3,
                    _ => 4,
                };
                if seen[idx] {
                    return Err(SurfaceError::Parse(format!(
                        "line {}: duplicate key {key}",
                        lineno + 1
                    )));
                }
                seen[idx] = true;
                coeffs[idx] = parse_poly(value)?;
            }
            "bad_primes" => {
                let inner = value
                    .strip_prefix('[')
                    .and_then(|v| v.strip_suffix(']'))
                    .ok_or_else(|| {
                        SurfaceError::Parse(format!(
                            "line {}: bad_primes must look like [2, 3]",
                            lineno + 1
                        ))
                    })?;
                let mut ps = Vec::new();
                for part in inner.split(',') {
                    let part = part.trim();
                    if part.is_empty() {
                        continue;
                    }
                    ps.push(part.parse::<u64>().map_err(|e| {
                        SurfaceError::Parse(format!("line {}: {e}", lineno + 1))
                    })?);
                }
                bad_primes = Some(ps);
            }
            k if k.starts_with("expected.") => {
                expected.insert(k["expected.".len()..].to_string(), value.to_string());
            }
            _ => {
                return Err(SurfaceError::Parse(format!(
                    "line {}: unknown key {key:?}",
                    lineno + 1
                )));
            }
        }
    }

    Ok(SurfaceDescriptor {
        name: name.ok_or_else(|| SurfaceError::Parse("missing 'name'".into()))?,
        coefficients: coeffs,
        bad_primes,
        expected,
    })
}

fn unquote(v: &str) -> &str {
    v.strip_prefix('"')
        .and_then(|v| v.strip_suffix('"'))
        .unwrap_or(v)
}
