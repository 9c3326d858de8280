//! JSON schemas for algebras, r-matrices, `Ξ̂` and charts, plus value
//! encoders used by reports. Rationals travel as `"p/q"` strings.

use serde::Deserialize;
use serde_json::{json, Value};

use crate::bialgebra::RMatrix;
use crate::chart::{Chart, PolyTensor, RTensor};
use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::preconnection::XiHat;
use crate::rational::{format_rational, parse_rational, Rational};
use crate::su2::{InvariantOneForm, Su2Poly};
use crate::tensor::Tensor;

fn nested<T: Clone>(rank: usize, dim: usize, data: &[T], leaf: &impl Fn(&T) -> Value) -> Value {
    if rank == 0 {
        return leaf(&data[0]);
    }
    let stride = data.len() / dim;
    Value::Array(
        (0..dim)
            .map(|i| nested(rank - 1, dim, &data[i * stride..(i + 1) * stride], leaf))
            .collect(),
    )
}

/// Nested arrays of rational strings, first index outermost.
pub fn tensor_value(t: &Tensor) -> Value {
    nested(t.rank(), t.dim(), t.data(), &|x: &Rational| Value::String(format_rational(x)))
}

pub fn poly_tensor_value(t: &PolyTensor) -> Value {
    nested(t.rank(), t.n(), t.data(), &|p| Value::String(p.to_string()))
}

/// Exact real-basis terms together with the collapsed `dx` components.
pub fn rtensor_value(t: &RTensor, chart: &Chart) -> Value {
    json!({
        "basis_terms": t.num_terms(),
        "components": poly_tensor_value(&t.to_components(chart.vars(), chart.n())),
    })
}

pub fn su2_value(p: &Su2Poly) -> Value {
    Value::String(p.to_string())
}

pub fn form_value(f: &InvariantOneForm) -> Value {
    json!({
        "tau+": su2_value(&f.0[0]),
        "tau-": su2_value(&f.0[1]),
        "tau3": su2_value(&f.0[2]),
    })
}

fn flatten(v: &Value, rank: usize, dim: usize, path: &str, out: &mut Vec<String>) -> Result<()> {
    if rank == 0 {
        return match v {
            Value::String(s) => {
                out.push(s.clone());
                Ok(())
            }
            Value::Number(n) => {
                out.push(n.to_string());
                Ok(())
            }
            _ => Err(Error::Invalid(format!("{path}: expected a rational string"))),
        };
    }
    let arr = v
        .as_array()
        .filter(|a| a.len() == dim)
        .ok_or_else(|| Error::Invalid(format!("{path}: expected an array of length {dim}")))?;
    for (i, x) in arr.iter().enumerate() {
        flatten(x, rank - 1, dim, &format!("{path}[{i}]"), out)?;
    }
    Ok(())
}

pub fn tensor_from_value(v: &Value, rank: usize, dim: usize, path: &str) -> Result<Tensor> {
    let mut raw = Vec::new();
    flatten(v, rank, dim, path, &mut raw)?;
    let data = raw
        .iter()
        .enumerate()
        .map(|(k, s)| {
            parse_rational(s).map_err(|e| Error::Invalid(format!("{path} entry {k}: {e}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Tensor::from_data(rank, dim, data)
}

fn parse_json<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse {
        position: e.column(),
        message: format!("line {}: {e}", e.line()),
    })
}

#[derive(Deserialize)]
struct AlgebraFile {
    #[serde(default)]
    name: Option<String>,
    dim: usize,
    basis_names: Vec<String>,
    f: Value,
    r: Option<Value>,
}

/// `{dim, basis_names, f, r?}` with `f[a][b][c] = f_ab^c`.
pub fn parse_algebra(text: &str) -> Result<(LieAlgebra, Option<RMatrix>)> {
    let file: AlgebraFile = parse_json(text)?;
    if file.basis_names.len() != file.dim {
        return Err(Error::Invalid(format!(
            "basis_names has {} entries for dim {}",
            file.basis_names.len(),
            file.dim
        )));
    }
    let f = tensor_from_value(&file.f, 3, file.dim, "f")?;
    let g = LieAlgebra::new(file.name.unwrap_or_else(|| "custom".into()), file.basis_names, f)?;
    let r = file
        .r
        .map(|v| tensor_from_value(&v, 2, file.dim, "r").and_then(RMatrix::new))
        .transpose()?;
    Ok((g, r))
}

#[derive(Deserialize)]
struct XiHatFile {
    #[serde(default)]
    algebra: Option<String>,
    value: Value,
}

/// `{algebra?, value}` with `value[a][b][c] = Ξ̂_a^{bc}`.
pub fn parse_xihat(text: &str, g: &LieAlgebra) -> Result<XiHat> {
    let file: XiHatFile = parse_json(text)?;
    if let Some(name) = &file.algebra {
        if name != g.name() {
            return Err(Error::Invalid(format!(
                "Ξ̂ file is tagged `{name}` but the algebra is `{}`",
                g.name()
            )));
        }
    }
    Ok(XiHat {
        value: tensor_from_value(&file.value, 3, g.dim(), "value")?,
    })
}

#[derive(Deserialize)]
struct ChartFile {
    n: usize,
    omega: Vec<Vec<String>>,
    gamma: Vec<Vec<Vec<String>>>,
    omega_lower: Option<Vec<Vec<String>>>,
}

/// `{n, omega, gamma, omega_lower?}` over `x1..xn`, `gamma[k][i][j] = Γ^k_{ij}`.
pub fn parse_chart(text: &str) -> Result<Chart> {
    let file: ChartFile = parse_json(text)?;
    Chart::from_strings(file.n, &file.omega, &file.gamma, file.omega_lower.as_deref())
}

pub fn chart_value(c: &Chart) -> Value {
    let mut v = json!({
        "n": c.n(),
        "omega": poly_tensor_value(c.omega()),
        "gamma": poly_tensor_value(c.gamma()),
    });
    if let Some(low) = c.omega_lower() {
        v["omega_lower"] = poly_tensor_value(low);
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::preset_algebra;

    #[test]
    fn algebra_round_trip() {
        let g = preset_algebra("sl2").unwrap();
        let text = json!({
            "name": "sl2",
            "dim": 3,
            "basis_names": g.basis_names(),
            "f": tensor_value(g.f()),
        })
        .to_string();
        let (h, r) = parse_algebra(&text).unwrap();
        assert_eq!(h.f(), g.f());
        assert!(r.is_none());
    }

    #[test]
    fn malformed_json_has_a_position() {
        let err = parse_chart("{\"n\": 2,\n  \"omega\": [[\"0\" \"1\"]]}").unwrap_err();
        assert!(matches!(err, Error::Parse { position, .. } if position > 0), "{err}");
        let bad_poly = json!({"n": 1, "omega": [["x1 +"]], "gamma": [[["0"]]]}).to_string();
        assert!(matches!(parse_chart(&bad_poly), Err(Error::Parse { .. })));
    }

    #[test]
    fn chart_round_trip() {
        let t = Chart::torus();
        let text = chart_value(&t).to_string();
        assert_eq!(parse_chart(&text).unwrap(), t);
    }

    #[test]
    fn nested_tensor_round_trip() {
        let g = preset_algebra("sl3").unwrap();
        let v = tensor_value(g.f());
        assert_eq!(tensor_from_value(&v, 3, 8, "f").unwrap(), *g.f());
        assert!(tensor_from_value(&json!([["1"]]), 2, 2, "f").is_err());
    }
}
