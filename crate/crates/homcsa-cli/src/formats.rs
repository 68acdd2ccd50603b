//! On-disk document formats.
//!
//! Every file holds a single JSON object with a `kind` field naming the
//! structure it carries. Scalars are strings, either an optionally signed
//! integer (`"3"`, `"-2"`) or a fraction `"p/q"` with positive denominator;
//! non-canonical fractions like `"2/4"` are accepted and normalized on parse.
//! All indices are 0-based. Product tensors are nested as `mul[i][j][k]` =
//! coefficient of basis vector k in the product of basis vectors i and j;
//! matrices are nested row-major with row = output coefficient index and
//! column = input basis index; action tensors are arrays of one matrix per
//! algebra basis vector.
//!
//! [`canonical_json`] emits the canonical form: compact JSON with keys
//! sorted alphabetically at every level and a single trailing newline.
//! Parsing accepts any key order.

use homcsa::{
    ActionTensor, BilinearTensor, Bimodule, HomAlgebra, LinearMap, MatchedPairCsa,
    MatchedPairHomLie, PairedAlgebras, Representation, Scalar,
};
use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A parse or validation failure, carrying the field path that caused it.
#[derive(Debug, Error)]
pub enum ParseError {
    #[error("malformed JSON: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error("{path}: {message}")]
    Value { path: String, message: String },
}

fn value_err(path: impl Into<String>, message: impl Into<String>) -> ParseError {
    ParseError::Value {
        path: path.into(),
        message: message.into(),
    }
}

/// Parses a scalar string: optionally signed integer or `p/q` with `q > 0`.
/// Fractions are reduced, so `"2/4"` yields the same value as `"1/2"`.
pub fn parse_rational(text: &str) -> Result<Scalar, String> {
    let (num, den) = match text.split_once('/') {
        None => (text, None),
        Some((n, d)) => (n, Some(d)),
    };
    let p: BigInt = num
        .parse()
        .map_err(|_| format!("{num:?} is not an integer"))?;
    let Some(den) = den else {
        return Ok(Scalar::from_integer(p));
    };
    let q: BigInt = den
        .parse()
        .map_err(|_| format!("{den:?} is not an integer"))?;
    if !q.is_positive() {
        return Err(format!("denominator {q} must be positive"));
    }
    Ok(Scalar::new(p, q))
}

/// Canonical string form of a scalar: `"p"` for integers, `"p/q"` otherwise.
pub fn rational_string(x: &Scalar) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

type Matrix = Vec<Vec<String>>;
type Cube = Vec<Vec<Vec<String>>>;

/// A structure file. The `kind` tag selects the variant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Doc {
    #[serde(rename = "algebra")]
    Algebra(AlgebraDoc),
    #[serde(rename = "bimodule")]
    Bimodule(BimoduleDoc),
    #[serde(rename = "representation")]
    Representation(RepresentationDoc),
    #[serde(rename = "matched-pair")]
    MatchedPair(MatchedPairDoc),
    #[serde(rename = "lie-matched-pair")]
    LieMatchedPair(LieMatchedPairDoc),
    #[serde(rename = "bialgebra")]
    Bialgebra(BialgebraDoc),
}

impl Doc {
    pub fn kind(&self) -> &'static str {
        match self {
            Doc::Algebra(_) => "algebra",
            Doc::Bimodule(_) => "bimodule",
            Doc::Representation(_) => "representation",
            Doc::MatchedPair(_) => "matched-pair",
            Doc::LieMatchedPair(_) => "lie-matched-pair",
            Doc::Bialgebra(_) => "bialgebra",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraDoc {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub dim: usize,
    pub mul: Cube,
    pub alpha: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BimoduleDoc {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub base: AlgebraDoc,
    pub mod_dim: usize,
    pub left: Cube,
    pub right: Cube,
    pub phi: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentationDoc {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub base: AlgebraDoc,
    pub mod_dim: usize,
    pub rho: Cube,
    pub psi: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchedPairDoc {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub a: AlgebraDoc,
    pub b: AlgebraDoc,
    pub left_a: Cube,
    pub right_a: Cube,
    pub left_b: Cube,
    pub right_b: Cube,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LieMatchedPairDoc {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub g: AlgebraDoc,
    pub h: AlgebraDoc,
    pub rho_g: Cube,
    pub rho_h: Cube,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BialgebraDoc {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub primal: AlgebraDoc,
    pub dual_mul: Cube,
}

/// Parses one document from UTF-8 text.
pub fn parse_doc(text: &str) -> Result<Doc, ParseError> {
    Ok(serde_json::from_str(text)?)
}

/// Canonical serialization: compact JSON, keys sorted at every level,
/// trailing newline.
pub fn canonical_json(doc: &Doc) -> String {
    // Round-tripping through Value sorts object keys (its map is ordered).
    let value = serde_json::to_value(doc).expect("documents are plain data");
    let mut out = serde_json::to_string(&value).expect("values serialize");
    out.push('\n');
    out
}

fn parse_entry(path: &str, indices: &[usize], text: &str) -> Result<Scalar, ParseError> {
    parse_rational(text).map_err(|message| {
        let suffix: String = indices.iter().map(|i| format!("[{i}]")).collect();
        value_err(format!("{path}{suffix}"), message)
    })
}

fn matrix_to_map(path: &str, rows: usize, cols: usize, m: &Matrix) -> Result<LinearMap, ParseError> {
    if m.len() != rows {
        return Err(value_err(path, format!("expected {rows} rows, found {}", m.len())));
    }
    let mut entries = Vec::with_capacity(rows * cols);
    for (i, row) in m.iter().enumerate() {
        if row.len() != cols {
            return Err(value_err(
                format!("{path}[{i}]"),
                format!("expected {cols} columns, found {}", row.len()),
            ));
        }
        for (j, cell) in row.iter().enumerate() {
            entries.push(parse_entry(path, &[i, j], cell)?);
        }
    }
    Ok(LinearMap::new(rows, cols, entries).expect("shape validated"))
}

fn cube_to_tensor(
    path: &str,
    dims: (usize, usize, usize),
    cube: &Cube,
) -> Result<BilinearTensor, ParseError> {
    let (nl, nr, no) = dims;
    if cube.len() != nl {
        return Err(value_err(path, format!("expected {nl} rows, found {}", cube.len())));
    }
    let mut entries = Vec::with_capacity(nl * nr * no);
    for (i, plane) in cube.iter().enumerate() {
        if plane.len() != nr {
            return Err(value_err(
                format!("{path}[{i}]"),
                format!("expected {nr} rows, found {}", plane.len()),
            ));
        }
        for (j, row) in plane.iter().enumerate() {
            if row.len() != no {
                return Err(value_err(
                    format!("{path}[{i}][{j}]"),
                    format!("expected {no} entries, found {}", row.len()),
                ));
            }
            for (k, cell) in row.iter().enumerate() {
                entries.push(parse_entry(path, &[i, j, k], cell)?);
            }
        }
    }
    Ok(BilinearTensor::new(nl, nr, no, entries).expect("shape validated"))
}

fn cube_to_actions(
    path: &str,
    alg_dim: usize,
    mod_dim: usize,
    cube: &Cube,
) -> Result<ActionTensor, ParseError> {
    if cube.len() != alg_dim {
        return Err(value_err(
            path,
            format!("expected {alg_dim} matrices, found {}", cube.len()),
        ));
    }
    let mut mats = Vec::with_capacity(alg_dim);
    for (i, m) in cube.iter().enumerate() {
        mats.push(matrix_to_map(&format!("{path}[{i}]"), mod_dim, mod_dim, m)?);
    }
    Ok(ActionTensor::new(alg_dim, mod_dim, mats).expect("shape validated"))
}

fn map_to_matrix(m: &LinearMap) -> Matrix {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| rational_string(m.entry(i, j))).collect())
        .collect()
}

fn tensor_to_cube(t: &BilinearTensor) -> Cube {
    (0..t.dim_left())
        .map(|i| {
            (0..t.dim_right())
                .map(|j| {
                    (0..t.dim_out())
                        .map(|k| rational_string(t.entry(i, j, k)))
                        .collect()
                })
                .collect()
        })
        .collect()
}

fn actions_to_cube(t: &ActionTensor) -> Cube {
    t.mats().iter().map(map_to_matrix).collect()
}

impl AlgebraDoc {
    pub fn to_algebra(&self) -> Result<HomAlgebra, ParseError> {
        let n = self.dim;
        let mul = cube_to_tensor("mul", (n, n, n), &self.mul)?;
        let alpha = matrix_to_map("alpha", n, n, &self.alpha)?;
        Ok(HomAlgebra::new(mul, alpha).expect("shape validated"))
    }

    pub fn from_algebra(name: Option<String>, a: &HomAlgebra) -> AlgebraDoc {
        AlgebraDoc {
            name,
            dim: a.dim(),
            mul: tensor_to_cube(a.mul()),
            alpha: map_to_matrix(a.twist()),
        }
    }
}

impl BimoduleDoc {
    pub fn to_bimodule(&self) -> Result<Bimodule, ParseError> {
        let base = self.base.to_algebra().map_err(nest("base"))?;
        let (n, m) = (base.dim(), self.mod_dim);
        let left = cube_to_actions("left", n, m, &self.left)?;
        let right = cube_to_actions("right", n, m, &self.right)?;
        let phi = matrix_to_map("phi", m, m, &self.phi)?;
        Ok(Bimodule::new(base, left, right, phi).expect("shape validated"))
    }

    pub fn from_bimodule(name: Option<String>, base: AlgebraDoc, b: &Bimodule) -> BimoduleDoc {
        BimoduleDoc {
            name,
            base,
            mod_dim: b.mod_dim(),
            left: actions_to_cube(b.left()),
            right: actions_to_cube(b.right()),
            phi: map_to_matrix(b.phi()),
        }
    }
}

impl RepresentationDoc {
    pub fn to_representation(&self) -> Result<Representation, ParseError> {
        let base = self.base.to_algebra().map_err(nest("base"))?;
        let (n, m) = (base.dim(), self.mod_dim);
        let rho = cube_to_actions("rho", n, m, &self.rho)?;
        let psi = matrix_to_map("psi", m, m, &self.psi)?;
        Ok(Representation::new(base, rho, psi).expect("shape validated"))
    }

    pub fn from_representation(
        name: Option<String>,
        base: AlgebraDoc,
        r: &Representation,
    ) -> RepresentationDoc {
        RepresentationDoc {
            name,
            base,
            mod_dim: r.mod_dim(),
            rho: actions_to_cube(r.rho()),
            psi: map_to_matrix(r.psi()),
        }
    }
}

impl MatchedPairDoc {
    pub fn to_pair(&self) -> Result<MatchedPairCsa, ParseError> {
        let a = self.a.to_algebra().map_err(nest("a"))?;
        let b = self.b.to_algebra().map_err(nest("b"))?;
        let (n, m) = (a.dim(), b.dim());
        let left_a = cube_to_actions("left_a", n, m, &self.left_a)?;
        let right_a = cube_to_actions("right_a", n, m, &self.right_a)?;
        let left_b = cube_to_actions("left_b", m, n, &self.left_b)?;
        let right_b = cube_to_actions("right_b", m, n, &self.right_b)?;
        Ok(MatchedPairCsa::new(a, b, left_a, right_a, left_b, right_b).expect("shape validated"))
    }

    pub fn from_pair(name: Option<String>, p: &MatchedPairCsa) -> MatchedPairDoc {
        MatchedPairDoc {
            name,
            a: AlgebraDoc::from_algebra(None, p.a()),
            b: AlgebraDoc::from_algebra(None, p.b()),
            left_a: actions_to_cube(p.left_a()),
            right_a: actions_to_cube(p.right_a()),
            left_b: actions_to_cube(p.left_b()),
            right_b: actions_to_cube(p.right_b()),
        }
    }
}

impl LieMatchedPairDoc {
    pub fn to_pair(&self) -> Result<MatchedPairHomLie, ParseError> {
        let g = self.g.to_algebra().map_err(nest("g"))?;
        let h = self.h.to_algebra().map_err(nest("h"))?;
        let (n, m) = (g.dim(), h.dim());
        let rho_g = cube_to_actions("rho_g", n, m, &self.rho_g)?;
        let rho_h = cube_to_actions("rho_h", m, n, &self.rho_h)?;
        Ok(MatchedPairHomLie::new(g, h, rho_g, rho_h).expect("shape validated"))
    }

    pub fn from_pair(name: Option<String>, p: &MatchedPairHomLie) -> LieMatchedPairDoc {
        LieMatchedPairDoc {
            name,
            g: AlgebraDoc::from_algebra(None, p.g()),
            h: AlgebraDoc::from_algebra(None, p.h()),
            rho_g: actions_to_cube(p.rho_g()),
            rho_h: actions_to_cube(p.rho_h()),
        }
    }
}

impl BialgebraDoc {
    pub fn to_paired(&self) -> Result<PairedAlgebras, ParseError> {
        let primal = self.primal.to_algebra().map_err(nest("primal"))?;
        let n = primal.dim();
        let dual_mul = cube_to_tensor("dual_mul", (n, n, n), &self.dual_mul)?;
        Ok(PairedAlgebras::new(primal, dual_mul).expect("shape validated"))
    }

    pub fn from_paired(name: Option<String>, p: &PairedAlgebras) -> BialgebraDoc {
        BialgebraDoc {
            name,
            primal: AlgebraDoc::from_algebra(None, p.primal()),
            dual_mul: tensor_to_cube(p.dual().mul()),
        }
    }
}

fn nest(outer: &str) -> impl Fn(ParseError) -> ParseError + '_ {
    move |err| match err {
        ParseError::Value { path, message } => value_err(format!("{outer}.{path}"), message),
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use homcsa::linalg::int;

    fn zero_strings(dims: &[usize]) -> serde_json::Value {
        fn build(dims: &[usize]) -> serde_json::Value {
            match dims.split_first() {
                None => serde_json::Value::String("0".into()),
                Some((&d, rest)) => (0..d).map(|_| build(rest)).collect(),
            }
        }
        build(dims)
    }

    #[test]
    fn rational_strings_parse_and_normalize() {
        assert_eq!(parse_rational("3").unwrap(), int(3));
        assert_eq!(parse_rational("-2").unwrap(), int(-2));
        assert_eq!(parse_rational("+4").unwrap(), int(4));
        assert_eq!(parse_rational("2/4").unwrap(), parse_rational("1/2").unwrap());
        assert_eq!(rational_string(&parse_rational("2/4").unwrap()), "1/2");
        assert_eq!(rational_string(&int(-7)), "-7");
    }

    #[test]
    fn malformed_rationals_are_rejected() {
        for bad in ["", "1/0", "1/-2", "1.5", "a", "1 / 2", "1/2/3", "/2", "2/"] {
            assert!(parse_rational(bad).is_err(), "{bad:?} should fail");
        }
    }

    #[test]
    fn algebra_documents_round_trip() {
        let text = r#"{"kind":"algebra","dim":1,"mul":[[["1"]]],"alpha":[["1"]]}"#;
        let doc = parse_doc(text).unwrap();
        let Doc::Algebra(ref a) = doc else { panic!("wrong kind") };
        let algebra = a.to_algebra().unwrap();
        assert_eq!(algebra.dim(), 1);
        assert_eq!(*algebra.mul().entry(0, 0, 0), int(1));
        let back = Doc::Algebra(AlgebraDoc::from_algebra(None, &algebra));
        assert_eq!(back, doc);
        // Canonical form sorts keys and ends with a newline.
        let canon = canonical_json(&doc);
        assert_eq!(
            canon,
            "{\"alpha\":[[\"1\"]],\"dim\":1,\"kind\":\"algebra\",\"mul\":[[[\"1\"]]]}\n"
        );
        assert_eq!(parse_doc(&canon).unwrap(), doc);
    }

    #[test]
    fn zero_dimensional_algebra_is_legal() {
        let doc = parse_doc(r#"{"kind":"algebra","dim":0,"mul":[],"alpha":[]}"#).unwrap();
        let Doc::Algebra(a) = doc else { panic!("wrong kind") };
        assert_eq!(a.to_algebra().unwrap().dim(), 0);
    }

    #[test]
    fn parse_normalizes_noncanonical_rationals() {
        let text = r#"{"kind":"algebra","dim":1,"mul":[[["2/4"]]],"alpha":[["-3/3"]]}"#;
        let Doc::Algebra(a) = parse_doc(text).unwrap() else { panic!("wrong kind") };
        let algebra = a.to_algebra().unwrap();
        let normalized = AlgebraDoc::from_algebra(None, &algebra);
        assert_eq!(normalized.mul[0][0][0], "1/2");
        assert_eq!(normalized.alpha[0][0], "-1");
    }

    #[test]
    fn errors_carry_the_field_path() {
        let text = r#"{"kind":"algebra","dim":1,"mul":[[["1/0"]]],"alpha":[["1"]]}"#;
        let Doc::Algebra(a) = parse_doc(text).unwrap() else { panic!("wrong kind") };
        let err = a.to_algebra().unwrap_err().to_string();
        assert!(err.contains("mul[0][0][0]"), "{err}");

        let text = r#"{"kind":"algebra","dim":2,"mul":[[["0","0"],["0","0"]],[["0","0"],["0","0"]]],"alpha":[["1","0"]]}"#;
        let Doc::Algebra(a) = parse_doc(text).unwrap() else { panic!("wrong kind") };
        let err = a.to_algebra().unwrap_err().to_string();
        assert!(err.contains("alpha"), "{err}");
    }

    #[test]
    fn nested_base_errors_name_the_outer_field() {
        let mut base = serde_json::json!({
            "name": null, "dim": 1, "mul": [[["1/0"]]], "alpha": [["1"]]
        });
        base["name"] = serde_json::Value::String("w".into());
        let text = serde_json::json!({
            "kind": "bimodule", "base": base, "mod_dim": 1,
            "left": zero_strings(&[1, 1, 1]),
            "right": zero_strings(&[1, 1, 1]),
            "phi": zero_strings(&[1, 1]),
        })
        .to_string();
        let Doc::Bimodule(b) = parse_doc(&text).unwrap() else { panic!("wrong kind") };
        let err = b.to_bimodule().unwrap_err().to_string();
        assert!(err.contains("base.mul[0][0][0]"), "{err}");
    }

    #[test]
    fn unknown_kind_is_a_syntax_error() {
        assert!(parse_doc(r#"{"kind":"frobenius","dim":0}"#).is_err());
        assert!(parse_doc("not json").is_err());
    }

    #[test]
    fn bialgebra_documents_round_trip() {
        let text = serde_json::json!({
            "kind": "bialgebra",
            "primal": {"dim": 2,
                "mul": zero_strings(&[2, 2, 2]),
                "alpha": [["1","0"],["0","1"]]},
            "dual_mul": zero_strings(&[2, 2, 2]),
        })
        .to_string();
        let doc = parse_doc(&text).unwrap();
        let Doc::Bialgebra(ref b) = doc else { panic!("wrong kind") };
        let paired = b.to_paired().unwrap();
        assert_eq!(paired.dim(), 2);
        // The dual twist is the transpose of the primal twist, never stored.
        assert_eq!(paired.dual().twist(), &paired.primal().twist().dual());
        let back = Doc::Bialgebra(BialgebraDoc::from_paired(None, &paired));
        assert_eq!(canonical_json(&back), canonical_json(&doc));
    }
}
