//! Input documents: reading, schema validation with field-path diagnostics,
//! and conversion into core types.
//!
//! Validation is strict: unknown fields are rejected, every integer must lie
//! in the documented ranges (chosen so that all internal exact-rational
//! arithmetic stays far inside 64 bits), and cross-field constraints
//! (`x ≤ x'`, vector lengths) are checked here. Anything that passes
//! constructs core objects infallibly; remaining failures are mathematical
//! domain errors reported by the core library.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::io::Read;

use serde_json::{Map, Value};

use orbimod_core::line::LineVBundle;
use orbimod_core::poly::PoincarePoly;
use orbimod_core::ranktwo::{
    IsotropyVector, RankTwoVBundle, StabilityClass, StabilityKind, SubBundleSpec,
};
use orbimod_core::surface::OrbifoldSurface;

/// Documented input ranges.
pub const MAX_GENUS: i64 = 30;
pub const MAX_POINTS: usize = 16;
pub const MAX_CONE_ORDER: i64 = 24;
pub const MAX_INTEGER_PART: i64 = 1_000_000;
const MAX_SECTION_COUNT: i64 = 1_000_000_000_000;
const MAX_POLY_COEFF: i64 = 1_000_000_000;
const MAX_POLY_LEN: usize = 64;
const MAX_COVER_KEY: i64 = 10_000;

/// A schema violation: the JSON path of the offending field and what was
/// expected there. Rendered as `schema error at <path>: <message>`.
#[derive(Debug)]
pub struct SchemaError {
    pub path: String,
    pub message: String,
}

impl fmt::Display for SchemaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.path.is_empty() {
            write!(f, "schema error: {}", self.message)
        } else {
            write!(f, "schema error at {}: {}", self.path, self.message)
        }
    }
}

fn fail<T>(path: impl Into<String>, message: impl Into<String>) -> Result<T, SchemaError> {
    Err(SchemaError {
        path: path.into(),
        message: message.into(),
    })
}

fn join(prefix: &str, key: &str) -> String {
    if prefix.is_empty() {
        key.to_string()
    } else {
        format!("{prefix}.{key}")
    }
}

/// Read the input document from a file path, or standard input for `-`.
pub fn read_document(path: &str) -> Result<Value, SchemaError> {
    let text = if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| SchemaError {
                path: String::new(),
                message: format!("cannot read standard input: {e}"),
            })?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| SchemaError {
            path: String::new(),
            message: format!("cannot read {path}: {e}"),
        })?
    };
    serde_json::from_str(&text).map_err(|e| SchemaError {
        path: String::new(),
        message: format!("invalid JSON: {e}"),
    })
}

fn as_object<'a>(v: &'a Value, path: &str) -> Result<&'a Map<String, Value>, SchemaError> {
    v.as_object()
        .ok_or(())
        .or_else(|_| fail(path, "must be a JSON object"))
}

fn as_array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>, SchemaError> {
    v.as_array()
        .ok_or(())
        .or_else(|_| fail(path, "must be a JSON array"))
}

fn as_int(v: &Value, path: &str) -> Result<i64, SchemaError> {
    match v.as_i64() {
        Some(n) => Ok(n),
        None => fail(path, "must be an integer"),
    }
}

fn int_in(v: &Value, path: &str, min: i64, max: i64) -> Result<i64, SchemaError> {
    let n = as_int(v, path)?;
    if n < min || n > max {
        return fail(path, format!("must be an integer between {min} and {max}"));
    }
    Ok(n)
}

fn require<'a>(
    obj: &'a Map<String, Value>,
    prefix: &str,
    key: &str,
) -> Result<&'a Value, SchemaError> {
    match obj.get(key) {
        Some(v) => Ok(v),
        None => fail(join(prefix, key), "missing required field"),
    }
}

/// An optional field; an explicit `null` counts as absent.
fn optional<'a>(obj: &'a Map<String, Value>, key: &str) -> Option<&'a Value> {
    obj.get(key).filter(|v| !v.is_null())
}

fn check_keys(
    obj: &Map<String, Value>,
    prefix: &str,
    allowed: &[&str],
) -> Result<(), SchemaError> {
    for key in obj.keys() {
        if !allowed.contains(&key.as_str()) {
            return fail(join(prefix, key), "unknown field");
        }
    }
    Ok(())
}

fn parse_genus(obj: &Map<String, Value>) -> Result<u32, SchemaError> {
    Ok(int_in(require(obj, "", "genus")?, "genus", 0, MAX_GENUS)? as u32)
}

fn parse_alphas(obj: &Map<String, Value>) -> Result<Vec<u32>, SchemaError> {
    let arr = as_array(require(obj, "", "alphas")?, "alphas")?;
    if arr.is_empty() {
        return fail("alphas", "must contain at least one cone order");
    }
    if arr.len() > MAX_POINTS {
        return fail("alphas", format!("must contain at most {MAX_POINTS} cone orders"));
    }
    let mut alphas = Vec::with_capacity(arr.len());
    for (i, v) in arr.iter().enumerate() {
        alphas.push(int_in(v, &format!("alphas[{i}]"), 2, MAX_CONE_ORDER)? as u32);
    }
    Ok(alphas)
}

/// `{"genus": g, "alphas": [α₁, ...]}`.
#[derive(Debug)]
pub struct SurfaceInput {
    pub surface: OrbifoldSurface,
}

pub fn parse_surface(doc: &Value) -> Result<SurfaceInput, SchemaError> {
    let obj = as_object(doc, "")?;
    check_keys(obj, "", &["genus", "alphas"])?;
    let genus = parse_genus(obj)?;
    let alphas = parse_alphas(obj)?;
    let surface =
        OrbifoldSurface::new(genus, alphas).expect("validated surface data is constructible");
    Ok(SurfaceInput { surface })
}

fn parse_cone_points(
    obj: &Map<String, Value>,
) -> Result<(Vec<u32>, Vec<(u32, u32)>), SchemaError> {
    let arr = as_array(require(obj, "", "cone_points")?, "cone_points")?;
    if arr.is_empty() {
        return fail("cone_points", "must contain at least one cone point");
    }
    if arr.len() > MAX_POINTS {
        return fail(
            "cone_points",
            format!("must contain at most {MAX_POINTS} cone points"),
        );
    }
    let mut alphas = Vec::with_capacity(arr.len());
    let mut pairs = Vec::with_capacity(arr.len());
    for (i, v) in arr.iter().enumerate() {
        let path = format!("cone_points[{i}]");
        let point = as_object(v, &path)?;
        check_keys(point, &path, &["alpha", "x", "x_prime"])?;
        let alpha = int_in(
            require(point, &path, "alpha")?,
            &join(&path, "alpha"),
            2,
            MAX_CONE_ORDER,
        )?;
        let x = int_in(
            require(point, &path, "x")?,
            &join(&path, "x"),
            0,
            alpha - 1,
        )?;
        let x_prime = int_in(
            require(point, &path, "x_prime")?,
            &join(&path, "x_prime"),
            0,
            alpha - 1,
        )?;
        if x > x_prime {
            return fail(path, "x must not exceed x_prime");
        }
        alphas.push(alpha as u32);
        pairs.push((x as u32, x_prime as u32));
    }
    Ok((alphas, pairs))
}

fn parse_bundle_core(obj: &Map<String, Value>) -> Result<RankTwoVBundle, SchemaError> {
    let genus = parse_genus(obj)?;
    let (alphas, pairs) = parse_cone_points(obj)?;
    let l = int_in(
        require(obj, "", "l")?,
        "l",
        -MAX_INTEGER_PART,
        MAX_INTEGER_PART,
    )?;
    let surface =
        OrbifoldSurface::new(genus, alphas).expect("validated surface data is constructible");
    Ok(RankTwoVBundle::new(surface, pairs, l)
        .expect("validated isotropy pairs are constructible"))
}

/// `{"genus", "cone_points": [{"alpha","x","x_prime"}...], "l"}` with
/// optional `sub_bundle` and `stability` sections for the `bundle` command.
#[derive(Debug)]
pub struct BundleInput {
    pub bundle: RankTwoVBundle,
    pub sub_bundle: Option<SubBundleSpec>,
    pub stability: Option<StabilityClass>,
}

fn parse_sub_bundle(
    v: &Value,
    n: usize,
) -> Result<SubBundleSpec, SchemaError> {
    let obj = as_object(v, "sub_bundle")?;
    check_keys(obj, "sub_bundle", &["m", "eps"])?;
    let m = int_in(
        require(obj, "sub_bundle", "m")?,
        "sub_bundle.m",
        -MAX_INTEGER_PART,
        MAX_INTEGER_PART,
    )?;
    let arr = as_array(require(obj, "sub_bundle", "eps")?, "sub_bundle.eps")?;
    if arr.len() != n {
        return fail("sub_bundle.eps", "must have one entry per cone point");
    }
    let mut eps = Vec::with_capacity(arr.len());
    for (i, e) in arr.iter().enumerate() {
        let path = format!("sub_bundle.eps[{i}]");
        let value = as_int(e, &path)?;
        if !(-1..=1).contains(&value) {
            return fail(path, "must be -1, 0, or 1");
        }
        eps.push(value as i8);
    }
    Ok(SubBundleSpec {
        m,
        eps: IsotropyVector::new(eps).expect("validated sign entries are constructible"),
    })
}

fn parse_stability(v: &Value) -> Result<StabilityClass, SchemaError> {
    let obj = as_object(v, "stability")?;
    check_keys(
        obj,
        "stability",
        &["kind", "h0_k_lm2_det", "h0_k_l2_det_dual"],
    )?;
    let kind_value = require(obj, "stability", "kind")?;
    let kind_str = kind_value
        .as_str()
        .ok_or(())
        .or_else(|_| fail::<&str>("stability.kind", "must be a string"))?;
    let kind = match kind_str {
        "stable" => StabilityKind::Stable,
        "semistable-indecomposable" => StabilityKind::SemistableIndecomposable,
        "semistable-decomposable" => StabilityKind::SemistableDecomposable,
        "non-semistable-indecomposable" => StabilityKind::NonSemistableIndecomposable,
        "non-semistable-decomposable" => StabilityKind::NonSemistableDecomposable,
        _ => {
            return fail(
                "stability.kind",
                "must be one of: stable, semistable-indecomposable, \
                 semistable-decomposable, non-semistable-indecomposable, \
                 non-semistable-decomposable",
            )
        }
    };
    let h0 = |key: &str| -> Result<Option<i64>, SchemaError> {
        optional(obj, key)
            .map(|v| int_in(v, &join("stability", key), -MAX_SECTION_COUNT, MAX_SECTION_COUNT))
            .transpose()
    };
    Ok(StabilityClass {
        kind,
        h0_k_lm2_det: h0("h0_k_lm2_det")?,
        h0_k_l2_det_dual: h0("h0_k_l2_det_dual")?,
    })
}

pub fn parse_bundle(doc: &Value) -> Result<BundleInput, SchemaError> {
    let obj = as_object(doc, "")?;
    check_keys(
        obj,
        "",
        &["genus", "cone_points", "l", "sub_bundle", "stability"],
    )?;
    let bundle = parse_bundle_core(obj)?;
    let n = bundle.surface().marked_points();
    let sub_bundle = optional(obj, "sub_bundle")
        .map(|v| parse_sub_bundle(v, n))
        .transpose()?;
    let stability = optional(obj, "stability").map(parse_stability).transpose()?;
    Ok(BundleInput {
        bundle,
        sub_bundle,
        stability,
    })
}

/// Bundle fields only (`strata` and `spectral` commands).
pub fn parse_plain_bundle(doc: &Value) -> Result<RankTwoVBundle, SchemaError> {
    let obj = as_object(doc, "")?;
    check_keys(obj, "", &["genus", "cone_points", "l"])?;
    parse_bundle_core(obj)
}

/// Bundle fields plus the optional symbolic inputs of the `poincare`
/// command: a numeric polynomial for the minimum and per-degree cover
/// polynomials, each as plain coefficient arrays (constant term first).
#[derive(Debug)]
pub struct PoincareInput {
    pub bundle: RankTwoVBundle,
    pub min_poly: Option<PoincarePoly>,
    pub cover_polys: BTreeMap<i64, PoincarePoly>,
    pub chi_min: Option<i64>,
}

fn parse_coeffs(v: &Value, path: &str) -> Result<PoincarePoly, SchemaError> {
    let arr = as_array(v, path)?;
    if arr.len() > MAX_POLY_LEN {
        return fail(path, format!("must have at most {MAX_POLY_LEN} coefficients"));
    }
    let mut coeffs = Vec::with_capacity(arr.len());
    for (i, c) in arr.iter().enumerate() {
        coeffs.push(int_in(
            c,
            &format!("{path}[{i}]"),
            -MAX_POLY_COEFF,
            MAX_POLY_COEFF,
        )?);
    }
    Ok(PoincarePoly::from_coeffs(coeffs))
}

pub fn parse_poincare(doc: &Value) -> Result<PoincareInput, SchemaError> {
    let obj = as_object(doc, "")?;
    check_keys(
        obj,
        "",
        &["genus", "cone_points", "l", "min_poly", "cover_polys", "chi_min"],
    )?;
    let bundle = parse_bundle_core(obj)?;
    let min_poly = optional(obj, "min_poly")
        .map(|v| parse_coeffs(v, "min_poly"))
        .transpose()?;
    let mut cover_polys = BTreeMap::new();
    if let Some(v) = optional(obj, "cover_polys") {
        let map = as_object(v, "cover_polys")?;
        for (key, coeffs) in map {
            let path = format!("cover_polys.{key}");
            let r: i64 = match key.parse() {
                Ok(r) if (0..=MAX_COVER_KEY).contains(&r) => r,
                _ => {
                    return fail(
                        path,
                        format!(
                            "key must be a symmetric-power degree between 0 and {MAX_COVER_KEY}"
                        ),
                    )
                }
            };
            cover_polys.insert(r, parse_coeffs(coeffs, &path)?);
        }
    }
    let chi_min = optional(obj, "chi_min")
        .map(|v| int_in(v, "chi_min", -MAX_SECTION_COUNT, MAX_SECTION_COUNT))
        .transpose()?;
    Ok(PoincareInput {
        bundle,
        min_poly,
        cover_polys,
        chi_min,
    })
}

/// Surface fields plus an optional line-bundle fragment `{"b", "y"}` and
/// optional `rotation_numbers` for the `reps` command.
#[derive(Debug)]
pub struct RepsInput {
    pub surface: OrbifoldSurface,
    pub line: Option<LineVBundle>,
    pub rotation_numbers: Option<Vec<u32>>,
}

pub fn parse_reps(doc: &Value) -> Result<RepsInput, SchemaError> {
    let obj = as_object(doc, "")?;
    check_keys(obj, "", &["genus", "alphas", "b", "y", "rotation_numbers"])?;
    let genus = parse_genus(obj)?;
    let alphas = parse_alphas(obj)?;
    let surface = OrbifoldSurface::new(genus, alphas.clone())
        .expect("validated surface data is constructible");

    let b = optional(obj, "b");
    let y = optional(obj, "y");
    let line = match (b, y) {
        (None, None) => None,
        (Some(_), None) => return fail("y", "fields b and y must be supplied together"),
        (None, Some(_)) => return fail("b", "fields b and y must be supplied together"),
        (Some(bv), Some(yv)) => {
            let b = int_in(bv, "b", -MAX_INTEGER_PART, MAX_INTEGER_PART)?;
            let arr = as_array(yv, "y")?;
            if arr.len() != alphas.len() {
                return fail("y", "must have one entry per cone point");
            }
            let mut iso = Vec::with_capacity(arr.len());
            for (i, (v, &alpha)) in arr.iter().zip(&alphas).enumerate() {
                iso.push(int_in(v, &format!("y[{i}]"), 0, alpha as i64 - 1)? as u32);
            }
            Some(
                LineVBundle::new(surface.clone(), b, iso)
                    .expect("validated isotropy exponents are constructible"),
            )
        }
    };

    let rotation_numbers = match optional(obj, "rotation_numbers") {
        None => None,
        Some(v) => {
            if line.is_none() {
                return fail("rotation_numbers", "requires the line-bundle fields b and y");
            }
            let arr = as_array(v, "rotation_numbers")?;
            if arr.len() != alphas.len() {
                return fail("rotation_numbers", "must have one entry per cone point");
            }
            let mut r = Vec::with_capacity(arr.len());
            for (i, (rv, &alpha)) in arr.iter().zip(&alphas).enumerate() {
                r.push(int_in(rv, &format!("rotation_numbers[{i}]"), 0, alpha as i64)? as u32);
            }
            Some(r)
        }
    };

    Ok(RepsInput {
        surface,
        line,
        rotation_numbers,
    })
}
