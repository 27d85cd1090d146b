//! Exact JSON serialization of representations.
//!
//! Scalars render as expression-grammar strings by default ("1/2 + q^2"), or
//! as raw power-basis coefficient arrays of "num/den" strings; both forms
//! round-trip exactly. The document pins the format version and the
//! conductor, which must match lcm(4, 2m).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::FamilyParams;
use crate::matrix::Matrix;
use crate::repcore::Representation;
use crate::scalar::{
    lcm, parse_scalar, rational_from_string, rational_to_string, render_scalar, Cyclotomic,
    QContext,
};

pub const FORMAT_VERSION: &str = "1";

/// One scalar entry: an expression string or a coefficient array.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum ScalarRepr {
    Expr(String),
    Coeffs(Vec<String>),
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct FamilyDoc {
    pub family: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub omega: Option<ScalarRepr>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<ScalarRepr>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<ScalarRepr>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<ScalarRepr>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct RepDocument {
    pub format_version: String,
    pub m: usize,
    pub conductor: usize,
    pub dim: usize,
    pub family: FamilyDoc,
    pub k: Vec<Vec<ScalarRepr>>,
    pub kinv: Vec<Vec<ScalarRepr>>,
    pub e: Vec<Vec<ScalarRepr>>,
    pub f: Vec<Vec<ScalarRepr>>,
}

fn scalar_repr(x: &Cyclotomic, ctx: &QContext, raw_coeffs: bool) -> ScalarRepr {
    if raw_coeffs {
        ScalarRepr::Coeffs(x.coeffs().iter().map(rational_to_string).collect())
    } else {
        ScalarRepr::Expr(render_scalar(x, ctx))
    }
}

fn scalar_parse(repr: &ScalarRepr, ctx: &QContext) -> Result<Cyclotomic> {
    match repr {
        ScalarRepr::Expr(text) => parse_scalar(text, ctx),
        ScalarRepr::Coeffs(strings) => {
            let expected = crate::scalar::field(ctx.conductor()).degree;
            if strings.len() != expected {
                return Err(Error::Schema(format!(
                    "coefficient array has length {}, field degree is {expected}",
                    strings.len()
                )));
            }
            let coeffs = strings
                .iter()
                .map(|s| rational_from_string(s))
                .collect::<Result<Vec<_>>>()?;
            Ok(Cyclotomic::reduce(ctx.conductor(), &coeffs))
        }
    }
}

fn matrix_doc(mat: &Matrix, ctx: &QContext, raw_coeffs: bool) -> Vec<Vec<ScalarRepr>> {
    (0..mat.rows())
        .map(|i| {
            (0..mat.cols())
                .map(|j| scalar_repr(mat.get(i, j), ctx, raw_coeffs))
                .collect()
        })
        .collect()
}

fn matrix_parse(doc: &[Vec<ScalarRepr>], dim: usize, ctx: &QContext) -> Result<Matrix> {
    if doc.len() != dim || doc.iter().any(|row| row.len() != dim) {
        return Err(Error::Schema(format!(
            "matrix is not {dim}x{dim} as the document claims"
        )));
    }
    let mut mat = Matrix::zero(dim, dim, ctx.conductor());
    for (i, row) in doc.iter().enumerate() {
        for (j, entry) in row.iter().enumerate() {
            mat.set(i, j, scalar_parse(entry, ctx)?);
        }
    }
    Ok(mat)
}

fn family_doc(params: &FamilyParams, ctx: &QContext, raw: bool) -> FamilyDoc {
    let mut doc = FamilyDoc {
        family: params.label().to_string(),
        n: None,
        omega: None,
        lambda: None,
        a: None,
        b: None,
    };
    match params {
        FamilyParams::Generic { n, omega } => {
            doc.n = Some(*n);
            doc.omega = Some(scalar_repr(omega, ctx, raw));
        }
        FamilyParams::HighestWeight { n, lambda } => {
            doc.n = Some(*n);
            doc.lambda = Some(scalar_repr(lambda, ctx, raw));
        }
        FamilyParams::HalfM { lambda } => {
            doc.lambda = Some(scalar_repr(lambda, ctx, raw));
        }
        FamilyParams::Cyclic { lambda, a, b } => {
            doc.lambda = Some(scalar_repr(lambda, ctx, raw));
            doc.a = Some(scalar_repr(a, ctx, raw));
            doc.b = Some(scalar_repr(b, ctx, raw));
        }
        FamilyParams::Counterexample | FamilyParams::Raw => {}
    }
    doc
}

fn family_parse(doc: &FamilyDoc, ctx: &QContext) -> Result<FamilyParams> {
    let get = |field: &Option<ScalarRepr>, name: &str| -> Result<Cyclotomic> {
        field
            .as_ref()
            .ok_or_else(|| Error::Schema(format!("family '{}' needs '{name}'", doc.family)))
            .and_then(|r| scalar_parse(r, ctx))
    };
    match doc.family.as_str() {
        "generic" => Ok(FamilyParams::Generic {
            n: doc
                .n
                .ok_or_else(|| Error::Schema("family 'generic' needs 'n'".into()))?,
            omega: get(&doc.omega, "omega")?,
        }),
        "highest_weight" => Ok(FamilyParams::HighestWeight {
            n: doc
                .n
                .ok_or_else(|| Error::Schema("family 'highest_weight' needs 'n'".into()))?,
            lambda: get(&doc.lambda, "lambda")?,
        }),
        "half_m" => Ok(FamilyParams::HalfM {
            lambda: get(&doc.lambda, "lambda")?,
        }),
        "cyclic" => Ok(FamilyParams::Cyclic {
            lambda: get(&doc.lambda, "lambda")?,
            a: get(&doc.a, "a")?,
            b: get(&doc.b, "b")?,
        }),
        "counterexample" => Ok(FamilyParams::Counterexample),
        "raw" => Ok(FamilyParams::Raw),
        other => Err(Error::Schema(format!("unknown family tag '{other}'"))),
    }
}

pub fn serialize_rep(rep: &Representation, raw_coeffs: bool) -> RepDocument {
    let ctx = rep.ctx();
    RepDocument {
        format_version: FORMAT_VERSION.to_string(),
        m: ctx.m(),
        conductor: ctx.conductor(),
        dim: rep.dim(),
        family: family_doc(rep.params(), ctx, raw_coeffs),
        k: matrix_doc(rep.k(), ctx, raw_coeffs),
        kinv: matrix_doc(rep.kinv(), ctx, raw_coeffs),
        e: matrix_doc(rep.e(), ctx, raw_coeffs),
        f: matrix_doc(rep.f(), ctx, raw_coeffs),
    }
}

pub fn deserialize_rep(doc: &RepDocument) -> Result<Representation> {
    if doc.format_version != FORMAT_VERSION {
        return Err(Error::Schema(format!(
            "unsupported format_version '{}'",
            doc.format_version
        )));
    }
    let ctx = QContext::new(doc.m)?;
    let expected = lcm(4, 2 * doc.m);
    if doc.conductor != expected {
        return Err(Error::ConductorMismatch {
            m: doc.m,
            expected,
            found: doc.conductor,
        });
    }
    let k = matrix_parse(&doc.k, doc.dim, &ctx)?;
    let kinv = matrix_parse(&doc.kinv, doc.dim, &ctx)?;
    let e = matrix_parse(&doc.e, doc.dim, &ctx)?;
    let f = matrix_parse(&doc.f, doc.dim, &ctx)?;
    let params = family_parse(&doc.family, &ctx)?;
    Representation::new(ctx, k, kinv, e, f, params)
}

pub fn document_to_string(doc: &RepDocument) -> String {
    serde_json::to_string_pretty(doc).expect("document serializes")
}

pub fn document_from_str(text: &str) -> Result<RepDocument> {
    serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn round_trip(rep: &Representation, raw: bool) {
        let doc = serialize_rep(rep, raw);
        let text = document_to_string(&doc);
        let doc2 = document_from_str(&text).unwrap();
        assert_eq!(doc, doc2);
        let back = deserialize_rep(&doc2).unwrap();
        assert_eq!(back.k(), rep.k());
        assert_eq!(back.kinv(), rep.kinv());
        assert_eq!(back.e(), rep.e());
        assert_eq!(back.f(), rep.f());
        assert_eq!(back.params(), rep.params());
    }

    #[test]
    fn round_trip_generic() {
        let ctx = QContext::new(3).unwrap();
        let rep = families::generic_irrep(&ctx, 2, ctx.one()).unwrap();
        round_trip(&rep, false);
        round_trip(&rep, true);
    }

    #[test]
    fn round_trip_cyclic() {
        let ctx = QContext::new(4).unwrap();
        let rep =
            families::cyclic_module(&ctx, ctx.root_of_unity(1), ctx.integer(2), ctx.one()).unwrap();
        round_trip(&rep, false);
        round_trip(&rep, true);
    }

    #[test]
    fn conductor_mismatch_is_rejected() {
        let ctx = QContext::new(3).unwrap();
        let rep = families::generic_irrep(&ctx, 2, ctx.one()).unwrap();
        let mut doc = serialize_rep(&rep, false);
        doc.conductor = 8;
        match deserialize_rep(&doc).unwrap_err() {
            Error::ConductorMismatch { m, expected, found } => {
                assert_eq!((m, expected, found), (3, 12, 8));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn malformed_entry_reports_position() {
        let ctx = QContext::new(3).unwrap();
        let rep = families::generic_irrep(&ctx, 2, ctx.one()).unwrap();
        let mut doc = serialize_rep(&rep, false);
        doc.e[0][1] = ScalarRepr::Expr("q^".into());
        match deserialize_rep(&doc).unwrap_err() {
            Error::Parse { position, .. } => assert_eq!(position, 2),
            other => panic!("unexpected error {other:?}"),
        }
    }
}
