//! JSON file formats.
//!
//! Scalars are strings `"p"` or `"p/q"` (plain JSON integers are accepted on
//! input; over ℚ(i) also `"a+bi"`). Polynomials are
//! `{"ring": [...], "terms": [{"c": "3/2", "e": [2, 0]}, ...]}`, with terms
//! written in descending monomial order; `"ring"` may be omitted inside a
//! larger document that fixes the ring, and a string such as `"x1^2 - 3*x2"`
//! is accepted in place of the object.
//!
//! A complex is `{"ring", "lo", "hi", "ranks", "diff"}` where `diff` maps each
//! degree `i` in `lo..hi` (as a string key) to the matrix of `d^i`: one row per
//! basis vector of the target `F^{i+1}`, one column per basis vector of the
//! source `F^i`, so the image of source basis vector `c` is column `c`.
//!
//! Parse errors carry the JSON path of the first violation, e.g.
//! `diff[0][1][0].terms[0].e`.

use std::sync::Arc;

use serde_json::{json, Map, Value};

use crate::artinian::{AMatrix, ArtinianAlgebra, Element, MapSpec};
use crate::deformation::{AlgebraModel, CupData};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::freecomplex::{FreeComplex, PolyMatrix};
use crate::ideal::Ideal;
use crate::linalg::{Matrix, Subspace};
use crate::poly::{Monomial, Polynomial, Ring};

/// Appends an object key to a JSON path.
pub fn key_path(path: &str, key: &str) -> String {
    if path.is_empty() {
        key.to_string()
    } else {
        format!("{path}.{key}")
    }
}

/// Appends an array index (or a degree key) to a JSON path.
pub fn index_path(path: &str, index: impl std::fmt::Display) -> String {
    format!("{path}[{index}]")
}

pub fn field<'a>(v: &'a Value, key: &str, path: &str) -> Result<&'a Value> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::parse(display(path), "expected an object"))?;
    obj.get(key)
        .ok_or_else(|| Error::parse(display(path), format!("missing field `{key}`")))
}

fn display(path: &str) -> String {
    if path.is_empty() {
        "$".to_string()
    } else {
        path.to_string()
    }
}

pub fn array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>> {
    v.as_array()
        .ok_or_else(|| Error::parse(display(path), "expected an array"))
}

pub fn usize_of(v: &Value, path: &str) -> Result<usize> {
    v.as_u64()
        .map(|n| n as usize)
        .ok_or_else(|| Error::parse(display(path), "expected a non-negative integer"))
}

pub fn i64_of(v: &Value, path: &str) -> Result<i64> {
    v.as_i64()
        .ok_or_else(|| Error::parse(display(path), "expected an integer"))
}

pub fn str_of<'a>(v: &'a Value, path: &str) -> Result<&'a str> {
    v.as_str()
        .ok_or_else(|| Error::parse(display(path), "expected a string"))
}

pub fn scalar_from_json<F: Field>(v: &Value, path: &str) -> Result<F> {
    match v {
        Value::String(s) => F::parse_scalar(s)
            .ok_or_else(|| Error::parse(display(path), format!("`{s}` is not a valid scalar"))),
        Value::Number(n) => n.as_i64().map(F::from_i64).ok_or_else(|| {
            Error::parse(
                display(path),
                "numbers must be integers; write fractions as \"p/q\"",
            )
        }),
        _ => Err(Error::parse(display(path), "expected a scalar string")),
    }
}

pub fn scalar_to_json<F: Field>(x: &F) -> Value {
    Value::String(x.to_string())
}

pub fn vector_from_json<F: Field>(v: &Value, len: Option<usize>, path: &str) -> Result<Vec<F>> {
    let items = array(v, path)?;
    if let Some(n) = len {
        if items.len() != n {
            return Err(Error::parse(
                display(path),
                format!("expected {n} entries, found {}", items.len()),
            ));
        }
    }
    items
        .iter()
        .enumerate()
        .map(|(k, x)| scalar_from_json(x, &index_path(path, k)))
        .collect()
}

pub fn vector_to_json<F: Field>(v: &[F]) -> Value {
    Value::Array(v.iter().map(scalar_to_json).collect())
}

pub fn ring_from_json(v: &Value, path: &str) -> Result<Arc<Ring>> {
    let items = array(v, path)?;
    let mut vars = Vec::with_capacity(items.len());
    for (k, x) in items.iter().enumerate() {
        let p = index_path(path, k);
        let name = str_of(x, &p)?;
        let valid = name
            .chars()
            .next()
            .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
            && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !valid || name == "I" {
            return Err(Error::parse(
                p,
                format!("`{name}` is not a valid variable name"),
            ));
        }
        if vars.iter().any(|v: &String| v == name) {
            return Err(Error::parse(p, format!("duplicate variable `{name}`")));
        }
        vars.push(name.to_string());
    }
    Ok(Ring::new(&vars))
}

pub fn ring_to_json(ring: &Ring) -> Value {
    json!(ring.vars())
}

pub fn poly_from_json<F: Field>(ring: &Arc<Ring>, v: &Value, path: &str) -> Result<Polynomial<F>> {
    if let Value::String(s) = v {
        return Polynomial::parse(ring, s).map_err(|e| Error::parse(display(path), e.to_string()));
    }
    if let Some(r) = v.as_object().and_then(|o| o.get("ring")) {
        let p = key_path(path, "ring");
        let own = ring_from_json(r, &p)?;
        if own.vars() != ring.vars() {
            return Err(Error::parse(
                p,
                format!("ring {:?} differs from {:?}", own.vars(), ring.vars()),
            ));
        }
    }
    let tpath = key_path(path, "terms");
    let terms = array(field(v, "terms", path)?, &tpath)?;
    let mut out = Vec::with_capacity(terms.len());
    for (k, t) in terms.iter().enumerate() {
        let p = index_path(&tpath, k);
        let c = scalar_from_json::<F>(field(t, "c", &p)?, &key_path(&p, "c"))?;
        let epath = key_path(&p, "e");
        let e = array(field(t, "e", &p)?, &epath)?;
        if e.len() != ring.nvars() {
            return Err(Error::parse(
                epath,
                format!(
                    "{} exponents for a ring with {} variables",
                    e.len(),
                    ring.nvars()
                ),
            ));
        }
        let exps = e
            .iter()
            .enumerate()
            .map(|(n, x)| {
                let ep = index_path(&epath, n);
                x.as_u64()
                    .and_then(|u| u32::try_from(u).ok())
                    .ok_or_else(|| Error::parse(ep, "exponents are non-negative integers"))
            })
            .collect::<Result<Vec<u32>>>()?;
        out.push((Monomial::new(exps), c));
    }
    Polynomial::from_terms(ring, out)
}

/// Terms in descending order; `with_ring` adds the `"ring"` field.
pub fn poly_to_json<F: Field>(p: &Polynomial<F>, with_ring: bool) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .iter()
        .map(|(m, c)| json!({"c": scalar_to_json(c), "e": m.exponents()}))
        .collect();
    let mut obj = Map::new();
    if with_ring {
        obj.insert("ring".into(), ring_to_json(p.ring()));
    }
    obj.insert("terms".into(), Value::Array(terms));
    Value::Object(obj)
}

pub fn polys_from_json<F: Field>(
    ring: &Arc<Ring>,
    v: &Value,
    path: &str,
) -> Result<Vec<Polynomial<F>>> {
    array(v, path)?
        .iter()
        .enumerate()
        .map(|(k, x)| poly_from_json(ring, x, &index_path(path, k)))
        .collect()
}

pub fn ideal_from_json<F: Field>(v: &Value, path: &str) -> Result<Ideal<F>> {
    let ring = ring_from_json(field(v, "ring", path)?, &key_path(path, "ring"))?;
    let gens = polys_from_json(&ring, field(v, "gens", path)?, &key_path(path, "gens"))?;
    Ideal::new(&ring, gens)
}

/// The reduced Gröbner basis is written as `gens`.
pub fn ideal_to_json<F: Field>(ideal: &Ideal<F>) -> Value {
    json!({
        "ring": ring_to_json(ideal.ring()),
        "gens": ideal.reduced_gb().iter().map(|p| poly_to_json(p, false)).collect::<Vec<_>>(),
    })
}

pub fn poly_matrix_from_json<F: Field>(
    ring: &Arc<Ring>,
    v: &Value,
    shape: (usize, usize),
    path: &str,
) -> Result<PolyMatrix<F>> {
    let rows = array(v, path)?;
    if rows.len() != shape.0 {
        return Err(Error::parse(
            display(path),
            format!("expected {} rows, found {}", shape.0, rows.len()),
        ));
    }
    let mut out = Vec::with_capacity(rows.len());
    for (r, row) in rows.iter().enumerate() {
        let rp = index_path(path, r);
        let entries = array(row, &rp)?;
        if entries.len() != shape.1 {
            return Err(Error::parse(
                rp,
                format!("expected {} columns, found {}", shape.1, entries.len()),
            ));
        }
        out.push(
            entries
                .iter()
                .enumerate()
                .map(|(c, x)| poly_from_json(ring, x, &index_path(&rp, c)))
                .collect::<Result<Vec<_>>>()?,
        );
    }
    PolyMatrix::new(ring, out, shape.1)
}

pub fn poly_matrix_to_json<F: Field>(m: &PolyMatrix<F>) -> Value {
    Value::Array(
        m.rows()
            .iter()
            .map(|row| Value::Array(row.iter().map(|p| poly_to_json(p, false)).collect()))
            .collect(),
    )
}

pub fn complex_from_json<F: Field>(v: &Value, path: &str) -> Result<FreeComplex<F>> {
    let ring = ring_from_json(field(v, "ring", path)?, &key_path(path, "ring"))?;
    let lo = i64_of(field(v, "lo", path)?, &key_path(path, "lo"))?;
    let rpath = key_path(path, "ranks");
    let ranks = array(field(v, "ranks", path)?, &rpath)?
        .iter()
        .enumerate()
        .map(|(k, x)| usize_of(x, &index_path(&rpath, k)))
        .collect::<Result<Vec<_>>>()?;
    if ranks.is_empty() {
        return Err(Error::parse(rpath, "a complex needs at least one term"));
    }
    let hi = lo + ranks.len() as i64 - 1;
    if let Some(h) = v.get("hi") {
        let hp = key_path(path, "hi");
        if i64_of(h, &hp)? != hi {
            return Err(Error::parse(
                hp,
                format!("hi must be lo + len(ranks) - 1 = {hi}"),
            ));
        }
    }
    let dpath = key_path(path, "diff");
    let dv = field(v, "diff", path)?;
    let dobj = dv
        .as_object()
        .ok_or_else(|| Error::parse(dpath.clone(), "expected an object keyed by degree"))?;
    for key in dobj.keys() {
        let ok = key.parse::<i64>().is_ok_and(|i| i >= lo && i < hi);
        if !ok {
            return Err(Error::parse(
                index_path(&dpath, key),
                format!("no differential d^{key} in degrees {lo}..{hi}"),
            ));
        }
    }
    let mut diffs = Vec::new();
    for i in lo..hi {
        let key = i.to_string();
        let mp = index_path(&dpath, &key);
        let m = dobj
            .get(&key)
            .ok_or_else(|| Error::parse(dpath.clone(), format!("missing d^{i}")))?;
        let s = (i - lo) as usize;
        diffs.push(poly_matrix_from_json(
            &ring,
            m,
            (ranks[s + 1], ranks[s]),
            &mp,
        )?);
    }
    FreeComplex::new(&ring, lo, ranks, diffs)
}

pub fn complex_to_json<F: Field>(c: &FreeComplex<F>) -> Value {
    let mut diff = Map::new();
    for i in c.lo()..c.hi() {
        diff.insert(i.to_string(), poly_matrix_to_json(&c.diff(i)));
    }
    json!({
        "ring": ring_to_json(c.ring()),
        "lo": c.lo(),
        "hi": c.hi(),
        "ranks": c.ranks(),
        "diff": Value::Object(diff),
    })
}

pub fn matrix_from_json<F: Field>(
    v: &Value,
    shape: Option<(usize, usize)>,
    path: &str,
) -> Result<Matrix<F>> {
    let rows = array(v, path)?;
    if let Some((r, _)) = shape {
        if rows.len() != r {
            return Err(Error::parse(
                display(path),
                format!("expected {r} rows, found {}", rows.len()),
            ));
        }
    }
    let cols = match shape {
        Some((_, c)) => c,
        None => rows
            .first()
            .and_then(|r| r.as_array())
            .map_or(0, |r| r.len()),
    };
    let out = rows
        .iter()
        .enumerate()
        .map(|(r, row)| vector_from_json(row, Some(cols), &index_path(path, r)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_rows_with_cols(out, cols))
}

pub fn matrix_to_json<F: Field>(m: &Matrix<F>) -> Value {
    Value::Array((0..m.nrows()).map(|r| vector_to_json(m.row(r))).collect())
}

pub fn subspace_to_json<F: Field>(s: &Subspace<F>) -> Value {
    json!({
        "ambient": s.ambient_dim(),
        "basis": s.basis().iter().map(|v| vector_to_json(v)).collect::<Vec<_>>(),
    })
}

pub fn algebra_from_json<F: Field>(v: &Value, path: &str) -> Result<ArtinianAlgebra<F>> {
    let ring = ring_from_json(field(v, "vars", path)?, &key_path(path, "vars"))?;
    let rels = polys_from_json(&ring, field(v, "rel", path)?, &key_path(path, "rel"))?;
    ArtinianAlgebra::new(Ideal::new(&ring, rels)?)
}

/// Relations are written as the reduced Gröbner basis.
pub fn algebra_to_json<F: Field>(a: &ArtinianAlgebra<F>) -> Value {
    json!({
        "vars": ring_to_json(a.ring()),
        "rel": a.presentation().reduced_gb().iter().map(|p| poly_to_json(p, false)).collect::<Vec<_>>(),
    })
}

/// Standard monomials of the algebra, in coordinate order.
pub fn algebra_basis_to_json<F: Field>(a: &ArtinianAlgebra<F>) -> Value {
    Value::Array(a.basis().iter().map(|m| json!(m.exponents())).collect())
}

pub fn element_from_json<F: Field>(
    a: &ArtinianAlgebra<F>,
    v: &Value,
    path: &str,
) -> Result<Element<F>> {
    vector_from_json(v, Some(a.dim()), path)
}

pub fn map_from_json<F: Field>(
    source: &Arc<Ring>,
    algebra: &Arc<ArtinianAlgebra<F>>,
    v: &Value,
    path: &str,
) -> Result<MapSpec<F>> {
    let point = vector_from_json(
        field(v, "point", path)?,
        Some(source.nvars()),
        &key_path(path, "point"),
    )?;
    let ipath = key_path(path, "images");
    let items = array(field(v, "images", path)?, &ipath)?;
    if items.len() != source.nvars() {
        return Err(Error::parse(
            ipath,
            format!("expected {} images, found {}", source.nvars(), items.len()),
        ));
    }
    let images = items
        .iter()
        .enumerate()
        .map(|(k, x)| element_from_json(algebra, x, &index_path(&ipath, k)))
        .collect::<Result<Vec<_>>>()?;
    MapSpec::new(source, algebra, point, images)
}

pub fn map_to_json<F: Field>(m: &MapSpec<F>) -> Value {
    json!({
        "point": vector_to_json(m.point()),
        "images": m.images().iter().map(|e| vector_to_json(e)).collect::<Vec<_>>(),
    })
}

pub fn amatrix_from_json<F: Field>(
    a: &ArtinianAlgebra<F>,
    v: &Value,
    path: &str,
) -> Result<AMatrix<F>> {
    let rows = array(v, path)?;
    let cols = rows
        .first()
        .and_then(|r| r.as_array())
        .map_or(0, |r| r.len());
    let out = rows
        .iter()
        .enumerate()
        .map(|(r, row)| {
            let rp = index_path(path, r);
            let entries = array(row, &rp)?;
            if entries.len() != cols {
                return Err(Error::parse(
                    rp,
                    format!("expected {cols} columns, found {}", entries.len()),
                ));
            }
            entries
                .iter()
                .enumerate()
                .map(|(c, x)| element_from_json(a, x, &index_path(&rp, c)))
                .collect()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(AMatrix::new(out, cols))
}

pub fn amatrix_to_json<F: Field>(m: &AMatrix<F>) -> Value {
    Value::Array(
        m.rows()
            .iter()
            .map(|row| Value::Array(row.iter().map(|e| vector_to_json(e)).collect()))
            .collect(),
    )
}

fn tensor_from_json<F: Field>(
    v: &Value,
    shape: [usize; 3],
    path: &str,
) -> Result<Vec<Vec<Vec<F>>>> {
    let outer = array(v, path)?;
    if outer.len() != shape[0] {
        return Err(Error::parse(
            display(path),
            format!("expected {} entries, found {}", shape[0], outer.len()),
        ));
    }
    outer
        .iter()
        .enumerate()
        .map(|(a, m)| {
            matrix_from_json(m, Some((shape[1], shape[2])), &index_path(path, a))
                .map(|m| m.to_rows())
        })
        .collect()
}

fn tensor_to_json<F: Field>(t: &[Vec<Vec<F>>]) -> Value {
    Value::Array(
        t.iter()
            .map(|m| Value::Array(m.iter().map(|r| vector_to_json(r)).collect()))
            .collect(),
    )
}

pub fn cup_from_json<F: Field>(v: &Value, path: &str) -> Result<CupData<F>> {
    let q = usize_of(field(v, "q", path)?, &key_path(path, "q"))?;
    let dpath = key_path(path, "dims");
    let dims = field(v, "dims", path)?;
    let dim =
        |k: &str| -> Result<usize> { usize_of(field(dims, k, &dpath)?, &key_path(&dpath, k)) };
    let (dp, di, dn, dh) = (dim("prev")?, dim("i")?, dim("next")?, dim("h2")?);
    let degree = match v.get("degree") {
        Some(d) => Some(i64_of(d, &key_path(path, "degree"))?),
        None => None,
    };
    let mu2 = tensor_from_json(field(v, "mu2", path)?, [q, q, dh], &key_path(path, "mu2"))?;
    let act_prev = tensor_from_json(
        field(v, "act_prev", path)?,
        [q, dp, di],
        &key_path(path, "act_prev"),
    )?;
    let act_i = tensor_from_json(
        field(v, "act_i", path)?,
        [q, di, dn],
        &key_path(path, "act_i"),
    )?;
    CupData::new(degree, q, dp, di, dn, dh, mu2, act_prev, act_i)
}

pub fn cup_to_json<F: Field>(c: &CupData<F>) -> Value {
    let mut obj = Map::new();
    if let Some(d) = c.degree {
        obj.insert("degree".into(), json!(d));
    }
    obj.insert("q".into(), json!(c.q));
    obj.insert(
        "dims".into(),
        json!({"prev": c.dim_prev, "i": c.dim_i, "next": c.dim_next, "h2": c.dim_h2}),
    );
    obj.insert("mu2".into(), tensor_to_json(&c.mu2));
    obj.insert("act_prev".into(), tensor_to_json(&c.act_prev));
    obj.insert("act_i".into(), tensor_to_json(&c.act_i));
    Value::Object(obj)
}

/// `{"exterior": g}` or `{"ranks": [...], "ops": [[b_ν in degree 0, ...], ...]}`.
pub fn model_from_json<F: Field>(v: &Value, path: &str) -> Result<AlgebraModel<F>> {
    if let Some(g) = v.get("exterior") {
        return Ok(AlgebraModel::exterior(usize_of(
            g,
            &key_path(path, "exterior"),
        )?));
    }
    let rpath = key_path(path, "ranks");
    let ranks = array(field(v, "ranks", path)?, &rpath)?
        .iter()
        .enumerate()
        .map(|(k, x)| usize_of(x, &index_path(&rpath, k)))
        .collect::<Result<Vec<_>>>()?;
    let opath = key_path(path, "ops");
    let ops = array(field(v, "ops", path)?, &opath)?
        .iter()
        .enumerate()
        .map(|(nu, b)| {
            let bp = index_path(&opath, nu);
            let degs = array(b, &bp)?;
            if degs.len() + 1 != ranks.len().max(1) {
                return Err(Error::parse(
                    bp,
                    format!("expected {} matrices", ranks.len().saturating_sub(1)),
                ));
            }
            degs.iter()
                .enumerate()
                .map(|(i, m)| {
                    matrix_from_json(m, Some((ranks[i + 1], ranks[i])), &index_path(&bp, i))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    AlgebraModel::new(ranks, ops)
}

pub fn model_to_json<F: Field>(m: &AlgebraModel<F>) -> Value {
    let ops: Vec<Value> = (0..m.g())
        .map(|nu| {
            Value::Array(
                (0..m.ranks().len().saturating_sub(1))
                    .map(|i| matrix_to_json(&m.op(nu, i as i64)))
                    .collect(),
            )
        })
        .collect();
    json!({"ranks": m.ranks(), "ops": ops})
}

/// Reads and parses a JSON file; syntax errors are reported at the root path.
pub fn read_json(path: &std::path::Path) -> Result<Value> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::parse("$", format!("{}: {e}", path.display())))
}

/// Pretty JSON with a trailing newline.
pub fn to_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{GaussianRational, Rational};
    use crate::freecomplex::koszul_family;

    type Q = Rational;

    #[test]
    fn polynomial_round_trip() {
        let ring = Ring::new(&["x1", "x2"]);
        let p: Polynomial<Q> = Polynomial::parse(&ring, "3/2*x1^2 - x2 + 4").unwrap();
        let v = poly_to_json(&p, true);
        assert_eq!(
            v,
            json!({"ring": ["x1", "x2"], "terms": [
                {"c": "3/2", "e": [2, 0]}, {"c": "-1", "e": [0, 1]}, {"c": "4", "e": [0, 0]}
            ]})
        );
        assert_eq!(poly_from_json::<Q>(&ring, &v, "").unwrap(), p);
        assert_eq!(
            poly_from_json::<Q>(&ring, &json!("3/2*x1^2 - x2 + 4"), "").unwrap(),
            p
        );
    }

    #[test]
    fn complex_round_trip() {
        let k = koszul_family::<Q>(2).unwrap();
        let v = complex_to_json(&k);
        assert_eq!(complex_from_json::<Q>(&v, "").unwrap(), k);
        assert_eq!(v["hi"], json!(2));
    }

    #[test]
    fn exponent_length_error_path() {
        let v = json!({"ring": ["x", "y", "z"], "lo": 0, "ranks": [1, 1],
            "diff": {"0": [[{"terms": [{"c": "1", "e": [2]}]}]]}});
        let err = complex_from_json::<Q>(&v, "").unwrap_err();
        assert!(
            matches!(&err, Error::Parse { path, .. } if path == "diff[0][0][0].terms[0].e"),
            "{err}"
        );
    }

    #[test]
    fn zero_denominator_is_rejected() {
        let err = scalar_from_json::<Q>(&json!("1/0"), "c").unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
    }

    #[test]
    fn gaussian_scalars() {
        let x: GaussianRational = scalar_from_json(&json!("1/2-3i"), "").unwrap();
        assert_eq!(
            scalar_from_json::<GaussianRational>(&scalar_to_json(&x), "").unwrap(),
            x
        );
    }

    #[test]
    fn algebra_and_map() {
        let v = json!({"vars": ["e"], "rel": ["e^3"]});
        let a = Arc::new(algebra_from_json::<Q>(&v, "").unwrap());
        assert_eq!(a.dim(), 3);
        let ring = Ring::new(&["x"]);
        let m = map_from_json(
            &ring,
            &a,
            &json!({"point": ["0"], "images": [["0", "1", "0"]]}),
            "",
        )
        .unwrap();
        assert_eq!(
            map_to_json(&m),
            json!({"point": ["0"], "images": [["0", "1", "0"]]})
        );
        let bad = map_from_json(
            &ring,
            &a,
            &json!({"point": ["0"], "images": [["0", "1"]]}),
            "case",
        );
        assert!(matches!(bad, Err(Error::Parse { path, .. }) if path == "case.images[0]"));
    }

    #[test]
    fn cup_round_trip() {
        let m = AlgebraModel::<Q>::exterior(2);
        let cup = m
            .fiber_cup_data(&[Q::from_integer(0.into()), Q::from_integer(0.into())], 1)
            .unwrap();
        let v = cup_to_json(&cup);
        assert_eq!(cup_from_json::<Q>(&v, "").unwrap(), cup);
    }

    #[test]
    fn model_round_trip() {
        let m = AlgebraModel::<Q>::exterior(2);
        let back = model_from_json::<Q>(&model_to_json(&m), "").unwrap();
        assert_eq!(back.family().unwrap(), m.family().unwrap());
        assert!(model_from_json::<Q>(
            &json!({"ranks": [1, 1, 1], "ops": [[[["1"]], [["1"]]]]}),
            ""
        )
        .is_err());
    }
}
