//! Human-readable and JSON rendering of reports. All output is assembled
//! deterministically so classification tables are byte-stable across runs.

use crate::analysis::{ClassificationReport, ScanMode, Subspace};
use crate::families::FamilyParams;
use crate::matrix::Matrix;
use crate::repcore::Representation;
use crate::scalar::{render_scalar, QContext};

pub fn format_matrix(mat: &Matrix, ctx: &QContext) -> String {
    let mut out = String::new();
    for i in 0..mat.rows() {
        out.push_str("  [ ");
        for j in 0..mat.cols() {
            if j > 0 {
                out.push_str(", ");
            }
            out.push_str(&render_scalar(mat.get(i, j), ctx));
        }
        out.push_str(" ]\n");
    }
    out
}

pub fn matrix_json(mat: &Matrix, ctx: &QContext) -> serde_json::Value {
    let rows: Vec<Vec<String>> = (0..mat.rows())
        .map(|i| {
            (0..mat.cols())
                .map(|j| render_scalar(mat.get(i, j), ctx))
                .collect()
        })
        .collect();
    serde_json::json!(rows)
}

pub fn format_subspace(s: &Subspace, ctx: &QContext) -> String {
    let mut out = String::new();
    for row in s.basis() {
        out.push_str("  ( ");
        for (j, c) in row.iter().enumerate() {
            if j > 0 {
                out.push_str(", ");
            }
            out.push_str(&render_scalar(c, ctx));
        }
        out.push_str(" )\n");
    }
    out
}

pub fn subspace_json(s: &Subspace, ctx: &QContext) -> serde_json::Value {
    let rows: Vec<Vec<String>> = s
        .basis()
        .iter()
        .map(|row| row.iter().map(|c| render_scalar(c, ctx)).collect())
        .collect();
    serde_json::json!({
        "ambient_dim": s.ambient_dim(),
        "dim": s.dim(),
        "basis": rows,
    })
}

pub fn format_family(params: &FamilyParams, ctx: &QContext) -> String {
    match params {
        FamilyParams::Generic { n, omega } => {
            format!("generic(N={n}, omega={})", render_scalar(omega, ctx))
        }
        FamilyParams::HighestWeight { n, lambda } => {
            format!(
                "highest_weight(N={n}, lambda={})",
                render_scalar(lambda, ctx)
            )
        }
        FamilyParams::HalfM { lambda } => {
            format!("half_m(lambda={})", render_scalar(lambda, ctx))
        }
        FamilyParams::Cyclic { lambda, a, b } => format!(
            "cyclic(lambda={}, a={}, b={})",
            render_scalar(lambda, ctx),
            render_scalar(a, ctx),
            render_scalar(b, ctx)
        ),
        FamilyParams::Counterexample => "counterexample".to_string(),
        FamilyParams::Raw => "raw".to_string(),
    }
}

pub fn rep_summary(rep: &Representation) -> String {
    let ctx = rep.ctx();
    let relations = rep.verify_relations();
    let mut out = String::new();
    out.push_str(&format!(
        "{} representation, dimension {}, m = {}, conductor {}\n",
        rep.params().label(),
        rep.dim(),
        ctx.m(),
        ctx.conductor()
    ));
    out.push_str(&format!("family: {}\n", format_family(rep.params(), ctx)));
    out.push_str(&format!(
        "defining relations: {}\n",
        if relations.all_pass() {
            "hold exactly"
        } else {
            "VIOLATED"
        }
    ));
    out.push_str("K:\n");
    out.push_str(&format_matrix(rep.k(), ctx));
    out.push_str("E:\n");
    out.push_str(&format_matrix(rep.e(), ctx));
    out.push_str("F:\n");
    out.push_str(&format_matrix(rep.f(), ctx));
    out
}

/// Distinct family labels of the certified irreducibles in a dimension row.
fn family_labels(report: &crate::analysis::DimensionReport, ctx: &QContext) -> Vec<String> {
    let mut labels: Vec<String> = Vec::new();
    for family in report.realizing_families() {
        let label = format_family(&family, ctx);
        if !labels.contains(&label) {
            labels.push(label);
        }
    }
    labels
}

pub fn classification_table(report: &ClassificationReport, ctx: &QContext) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "classification for m = {} (conductor {})\n",
        report.m, report.conductor
    ));
    let dims: Vec<String> = report
        .irreducible_dimensions()
        .iter()
        .map(|d| d.to_string())
        .collect();
    out.push_str(&format!(
        "dimensions carrying an irreducible: {}\n\n",
        dims.join(", ")
    ));
    for dim in &report.dimensions {
        if dim.realized {
            let counts = match dim.mode {
                ScanMode::Torsion => format!("{} torsion weight candidates", dim.entries.len()),
                ScanMode::FreeParameter => {
                    format!("free weight parameter, {} samples", dim.entries.len())
                }
            };
            out.push_str(&format!("  N = {:<2} irreducible ({counts})\n", dim.dim));
            for label in family_labels(dim, ctx) {
                out.push_str(&format!("         {label}\n"));
            }
            if !dim.cyclic_entries.is_empty() {
                let irr = dim
                    .cyclic_entries
                    .iter()
                    .filter(|e| e.certificate.is_irreducible())
                    .count();
                out.push_str(&format!(
                    "         cyclic samples with a*b != 0: {} of {} irreducible\n",
                    irr,
                    dim.cyclic_entries.len()
                ));
            }
        } else {
            out.push_str(&format!(
                "  N = {:<2} no irreducible: all {} torsion weights degenerate\n",
                dim.dim,
                dim.entries.len()
            ));
        }
    }
    out
}

pub fn classification_json(report: &ClassificationReport, ctx: &QContext) -> String {
    let dimensions: Vec<serde_json::Value> = report
        .dimensions
        .iter()
        .map(|dim| {
            let entries: Vec<serde_json::Value> = dim
                .entries
                .iter()
                .map(|e| {
                    serde_json::json!({
                        "lambda": render_scalar(&e.lambda, ctx),
                        "family": format_family(&e.family, ctx),
                        "irreducible": e.certificate.is_irreducible(),
                        "witness": e.certificate.witness().map(|w| subspace_json(w, ctx)),
                    })
                })
                .collect();
            let cyclic: Vec<serde_json::Value> = dim
                .cyclic_entries
                .iter()
                .map(|e| {
                    serde_json::json!({
                        "lambda": render_scalar(&e.params.lambda, ctx),
                        "a": render_scalar(&e.params.a, ctx),
                        "b": render_scalar(&e.params.b, ctx),
                        "irreducible": e.certificate.is_irreducible(),
                    })
                })
                .collect();
            serde_json::json!({
                "dim": dim.dim,
                "mode": match dim.mode {
                    ScanMode::Torsion => "torsion",
                    ScanMode::FreeParameter => "free_parameter",
                },
                "realized": dim.realized,
                "entries": entries,
                "cyclic_entries": cyclic,
            })
        })
        .collect();
    let value = serde_json::json!({
        "m": report.m,
        "conductor": report.conductor,
        "irreducible_dimensions": report.irreducible_dimensions(),
        "dimensions": dimensions,
    });
    serde_json::to_string_pretty(&value).expect("json") + "\n"
}
