//! JSON encodings shared by the CLI commands.
//!
//! Coefficients are written as `"num"`/`"den"` integer pairs of unbounded
//! size. Compositions are integer arrays; subsets are
//! `{"ambient": n, "elements": [...]}` (`ambient` may be omitted on input).

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Map, Number, Value};

use crate::bases::ExpansionReport;
use crate::compositions::{comp_of_subset, subset_of_comp, Composition, SubsetOfRange};
use crate::error::{Error, Result};
use crate::qsym::{Basis, Coeff, QSymExpr, Term};
use crate::tableaux::{Entry, Tableau};

fn bad(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn big(n: &BigInt) -> Value {
    Value::Number(n.to_string().parse::<Number>().expect("integer literal"))
}

fn parse_big(v: &Value, what: &str) -> Result<BigInt> {
    match v {
        Value::Number(n) => n
            .to_string()
            .parse::<BigInt>()
            .map_err(|_| bad(format!("{what} must be an integer, got {n}"))),
        _ => Err(bad(format!("{what} must be an integer"))),
    }
}

fn parse_u32(v: &Value, what: &str) -> Result<u32> {
    v.as_u64()
        .and_then(|x| u32::try_from(x).ok())
        .ok_or_else(|| bad(format!("{what} must be a non-negative integer")))
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<&'a Value> {
    obj.get(key)
        .ok_or_else(|| bad(format!("missing field \"{key}\"")))
}

fn object<'a>(v: &'a Value, what: &str) -> Result<&'a Map<String, Value>> {
    v.as_object()
        .ok_or_else(|| bad(format!("{what} must be an object")))
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array()
        .ok_or_else(|| bad(format!("{what} must be an array")))
}

fn coeff_fields(c: &Coeff, out: &mut Map<String, Value>) {
    out.insert("num".into(), big(c.numer()));
    out.insert("den".into(), big(c.denom()));
}

fn parse_coeff(obj: &Map<String, Value>) -> Result<Coeff> {
    let num = parse_big(field(obj, "num")?, "num")?;
    let den = match obj.get("den") {
        Some(d) => parse_big(d, "den")?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(bad("den must be nonzero"));
    }
    Ok(Coeff::new(num, den))
}

pub fn coefficient_to_json(c: &Coeff) -> Value {
    let mut obj = Map::new();
    coeff_fields(c, &mut obj);
    Value::Object(obj)
}

pub fn composition_to_json(c: &Composition) -> Value {
    json!(c.parts())
}

pub fn composition_from_json(v: &Value) -> Result<Composition> {
    let parts = array(v, "composition")?
        .iter()
        .map(|x| parse_u32(x, "composition part"))
        .collect::<Result<Vec<_>>>()?;
    Composition::new(parts)
}

pub fn subset_to_json(s: &SubsetOfRange) -> Value {
    json!({"ambient": s.ambient(), "elements": s.elements()})
}

/// `ambient` is the degree `n` of the subset `D ⊆ {1..n−1}`; it defaults to
/// `default_ambient` when absent.
pub fn subset_from_json(v: &Value, default_ambient: u32) -> Result<SubsetOfRange> {
    let obj = object(v, "subset")?;
    let ambient = match obj.get("ambient") {
        Some(a) => parse_u32(a, "ambient")?,
        None => default_ambient,
    };
    let elements = array(field(obj, "elements")?, "elements")?
        .iter()
        .map(|x| parse_u32(x, "subset element"))
        .collect::<Result<Vec<_>>>()?;
    SubsetOfRange::new(ambient, elements)
}

fn index_to_json(basis: Basis, index: &Composition) -> Value {
    match basis {
        Basis::M => composition_to_json(index),
        Basis::F | Basis::G => subset_to_json(&subset_of_comp(index)),
    }
}

pub fn expression_to_json(e: &QSymExpr) -> Value {
    let terms: Vec<Value> = e
        .terms()
        .map(|(t, c)| {
            let mut obj = Map::new();
            obj.insert("basis".into(), json!(t.basis.symbol()));
            obj.insert("index".into(), index_to_json(t.basis, &t.index));
            coeff_fields(c, &mut obj);
            Value::Object(obj)
        })
        .collect();
    json!({"degree": e.degree(), "terms": terms})
}

pub fn expression_from_json(v: &Value) -> Result<QSymExpr> {
    let obj = object(v, "expression")?;
    let degree = parse_u32(field(obj, "degree")?, "degree")?;
    let mut terms = Vec::new();
    for t in array(field(obj, "terms")?, "terms")? {
        let t = object(t, "term")?;
        let basis = match field(t, "basis")?.as_str() {
            Some("M") => Basis::M,
            Some("F") => Basis::F,
            Some("G") => Basis::G,
            _ => return Err(bad("basis must be \"M\", \"F\" or \"G\"")),
        };
        let raw = field(t, "index")?;
        let index = match basis {
            Basis::M => composition_from_json(raw)?,
            Basis::F | Basis::G => {
                if degree == 0 {
                    return Err(bad("F and G terms need positive degree"));
                }
                let s = subset_from_json(raw, degree)?;
                if s.ambient() != degree {
                    return Err(Error::DegreeMismatch {
                        left: s.ambient(),
                        right: degree,
                    });
                }
                comp_of_subset(&s)
            }
        };
        terms.push((Term { basis, index }, parse_coeff(t)?));
    }
    QSymExpr::from_terms(degree, terms)
}

pub fn tableau_to_json(t: &Tableau) -> Value {
    let rows: Vec<Value> = t
        .rows()
        .iter()
        .map(|row| {
            Value::Array(
                row.iter()
                    .map(|e| json!({"v": e.value, "m": e.marked}))
                    .collect(),
            )
        })
        .collect();
    json!({"shape": t.shape().parts(), "rows": rows})
}

pub fn tableau_from_json(v: &Value) -> Result<Tableau> {
    let obj = object(v, "tableau")?;
    let mut rows = Vec::new();
    for row in array(field(obj, "rows")?, "rows")? {
        let mut cells = Vec::new();
        for cell in array(row, "row")? {
            let cell = object(cell, "cell")?;
            let value = parse_u32(field(cell, "v")?, "v")?;
            let marked = match cell.get("m") {
                None => false,
                Some(m) => m.as_bool().ok_or_else(|| bad("m must be a boolean"))?,
            };
            cells.push(Entry { value, marked });
        }
        rows.push(cells);
    }
    let t = Tableau::new(rows)?;
    if let Some(shape) = obj.get("shape") {
        if composition_from_json(shape)? != t.shape() {
            return Err(bad("shape does not match the rows"));
        }
    }
    Ok(t)
}

pub fn report_to_json(r: &ExpansionReport) -> Value {
    let by_subset = r.family.indexed_by_subsets();
    let coefficients: Vec<Value> = r
        .coefficients
        .iter()
        .rev()
        .map(|(index, c)| {
            let mut obj = Map::new();
            let idx = if by_subset {
                subset_to_json(&subset_of_comp(index))
            } else {
                composition_to_json(index)
            };
            obj.insert("index".into(), idx);
            coeff_fields(c, &mut obj);
            Value::Object(obj)
        })
        .collect();
    json!({
        "family": r.family.name(),
        "degree": r.degree,
        "coefficients": coefficients,
        "residual_zero": r.residual_zero,
    })
}

/// Coefficients of a report, as `(index, coefficient)` pairs in document order.
pub fn report_coefficients_from_json(v: &Value) -> Result<Vec<(Value, Coeff)>> {
    let obj = object(v, "report")?;
    array(field(obj, "coefficients")?, "coefficients")?
        .iter()
        .map(|c| {
            let c = object(c, "coefficient")?;
            Ok((field(c, "index")?.clone(), parse_coeff(c)?))
        })
        .collect()
}

/// True when the value looks like a tableau rather than an expression.
pub fn is_tableau_json(v: &Value) -> bool {
    v.get("rows").is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bases::{expand_in_family, hat_p_monomial, Family, Route};
    use crate::qsym::peak_fn;

    fn c(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn expression_round_trip() {
        let e = hat_p_monomial(&c(&[2, 1]), Route::Statistic).unwrap();
        let v = expression_to_json(&e);
        assert_eq!(
            v.to_string(),
            r#"{"degree":3,"terms":[{"basis":"M","index":[2,1],"num":1,"den":1},{"basis":"M","index":[1,2],"num":1,"den":1},{"basis":"M","index":[1,1,1],"num":2,"den":1}]}"#
        );
        assert_eq!(expression_from_json(&v).unwrap(), e);
    }

    #[test]
    fn subset_indexed_terms() {
        let g = peak_fn(&SubsetOfRange::new(3, vec![2]).unwrap()).unwrap();
        let v = expression_to_json(&g);
        assert_eq!(
            v.to_string(),
            r#"{"degree":3,"terms":[{"basis":"G","index":{"ambient":3,"elements":[2]},"num":1,"den":1}]}"#
        );
        assert_eq!(expression_from_json(&v).unwrap(), g);
        let short: Value = serde_json::from_str(
            r#"{"degree":3,"terms":[{"basis":"G","index":{"elements":[2]},"num":1,"den":1}]}"#,
        )
        .unwrap();
        assert_eq!(expression_from_json(&short).unwrap(), g);
    }

    #[test]
    fn huge_coefficients_survive() {
        let text = r#"{"degree":1,"terms":[{"basis":"F","index":{"elements":[]},"num":123456789012345678901234567891,"den":4}]}"#;
        let e = expression_from_json(&serde_json::from_str(text).unwrap()).unwrap();
        let c = e.coefficient(Basis::F, &c(&[1]));
        assert_eq!(c.numer().to_string(), "123456789012345678901234567891");
        assert_eq!(
            expression_to_json(&e).to_string(),
            r#"{"degree":1,"terms":[{"basis":"F","index":{"ambient":1,"elements":[]},"num":123456789012345678901234567891,"den":4}]}"#
        );
    }

    #[test]
    fn malformed_expressions() {
        for text in [
            r#"{"terms":[]}"#,
            r#"{"degree":3,"terms":[{"basis":"X","index":[3],"num":1,"den":1}]}"#,
            r#"{"degree":3,"terms":[{"basis":"M","index":[2,2],"num":1,"den":1}]}"#,
            r#"{"degree":3,"terms":[{"basis":"M","index":[3],"num":1,"den":0}]}"#,
            r#"{"degree":3,"terms":[{"basis":"M","index":[3],"num":1.5,"den":1}]}"#,
            r#"{"degree":3,"terms":[{"basis":"F","index":{"ambient":5,"elements":[]},"num":1,"den":1}]}"#,
            r#"[1,2]"#,
        ] {
            let v: Value = serde_json::from_str(text).unwrap();
            assert!(expression_from_json(&v).is_err(), "{text}");
        }
    }

    #[test]
    fn tableau_round_trip() {
        let t: Tableau = "1 2 8' / 3 4' / 5 6 7' / 9'".parse().unwrap();
        let v = tableau_to_json(&t);
        assert_eq!(v["shape"], json!([3, 2, 3, 1]));
        assert_eq!(v["rows"][0][2], json!({"v": 8, "m": true}));
        assert_eq!(tableau_from_json(&v).unwrap(), t);
        let bad_shape = json!({"shape": [2], "rows": [[{"v": 1, "m": false}]]});
        assert!(tableau_from_json(&bad_shape).is_err());
    }

    #[test]
    fn report_encoding() {
        let e = hat_p_monomial(&c(&[2, 1]), Route::Statistic).unwrap();
        let r = expand_in_family(&e, Family::Basis(Basis::G)).unwrap();
        assert_eq!(
            report_to_json(&r).to_string(),
            r#"{"family":"G","degree":3,"coefficients":[{"index":{"ambient":3,"elements":[2]},"num":1,"den":1}],"residual_zero":true}"#
        );
        let r = expand_in_family(&e, Family::HatP).unwrap();
        let back = report_coefficients_from_json(&report_to_json(&r)).unwrap();
        assert_eq!(back, vec![(json!([2, 1]), Coeff::one())]);
    }
}
