//! The highest-weight torsion scan and the classification report.
//!
//! For a ladder of dimension N the closing condition is
//! (N)_q (mu+1-N)_q = 0. When (N)_q != 0 this forces lambda^4 = q^(2(N-1)),
//! a torsion condition with exactly four solutions omega q^((N-1)/2),
//! omega^4 = 1 — so deciding which dimensions carry an irreducible becomes a
//! finite exact computation. When (N)_q = 0 (N = m, or N = m/2 for even m)
//! the weight is a free parameter and representative samples are certified
//! instead.

use crate::error::{Error, Result};
use crate::families::{self, CyclicParams, FamilyParams};
use crate::repcore::Representation;
use crate::scalar::{rat_frac, Cyclotomic, QContext};

use super::irreducibility::{is_irreducible, IrreducibilityCertificate};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScanMode {
    /// The boundary forces lambda into the four torsion candidates.
    Torsion,
    /// (N)_q = 0: every weight closes the ladder; samples are certified.
    FreeParameter,
}

pub struct ScanEntry {
    pub lambda: Cyclotomic,
    pub family: FamilyParams,
    pub certificate: IrreducibilityCertificate,
}

pub struct ScanReport {
    pub n: usize,
    pub mode: ScanMode,
    pub entries: Vec<ScanEntry>,
}

impl ScanReport {
    pub fn any_irreducible(&self) -> bool {
        self.entries.iter().any(|e| e.certificate.is_irreducible())
    }
}

/// Build the ladder module of dimension n with weight lambda, preferring the
/// named family constructors so the provenance tag is informative.
fn build_ladder(ctx: &QContext, n: usize, lambda: &Cyclotomic) -> Result<Representation> {
    for omega in ctx.fourth_roots() {
        if *lambda == &omega * &ctx.q_half_power(n as i64 - 1) {
            match families::generic_irrep(ctx, n, omega) {
                Ok(rep) => return Ok(rep),
                Err(Error::DegenerateInterior { .. }) => break,
                Err(e) => return Err(e),
            }
        }
    }
    if ctx.m().is_multiple_of(2) && n == ctx.m() / 2 {
        match families::half_m_irrep(ctx, lambda.clone()) {
            Ok(rep) => return Ok(rep),
            Err(Error::DegenerateParameter { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    families::highest_weight_module(ctx, n, lambda.clone())
}

/// Certify (ir)reducibility of every dimension-n ladder candidate.
pub fn scan_highest_weight(ctx: &QContext, n: usize) -> Result<ScanReport> {
    let m = ctx.m();
    if n == 0 || n > m {
        return Err(Error::DimensionMismatch(format!(
            "scan dimension must satisfy 1 <= N <= m, got N = {n}, m = {m}"
        )));
    }
    let torsion = !ctx.q_int(n as i64).is_zero();
    let mode = if torsion {
        ScanMode::Torsion
    } else {
        ScanMode::FreeParameter
    };

    let mut candidates: Vec<Cyclotomic> = Vec::new();
    let push = |lam: Cyclotomic, candidates: &mut Vec<Cyclotomic>| {
        if !lam.is_zero() && !candidates.contains(&lam) {
            candidates.push(lam);
        }
    };
    for omega in ctx.fourth_roots() {
        push(&omega * &ctx.q_half_power(n as i64 - 1), &mut candidates);
    }
    if !torsion {
        for t in 1..=ctx.conductor() {
            push(ctx.root_of_unity(t as i64), &mut candidates);
        }
        // A free parameter means exactly that: weights need not be roots of
        // unity at all.
        let extras = [
            ctx.integer(2),
            ctx.integer(3),
            Cyclotomic::from_rational(ctx.conductor(), rat_frac(1, 2)),
            &ctx.one() + &ctx.q_power(1),
            ctx.q_power(1).scale(&crate::scalar::rat(2)),
            &ctx.one() + ctx.q_half(),
        ];
        for x in extras {
            push(x, &mut candidates);
        }
    }

    let mut entries = Vec::new();
    let target = if torsion { usize::MAX } else { 6 };
    for lambda in candidates {
        if entries.len() >= target {
            break;
        }
        let rep = match build_ladder(ctx, n, &lambda) {
            Ok(rep) => rep,
            // In free mode a degenerate sample is simply skipped.
            Err(Error::DegenerateParameter { .. }) if !torsion => continue,
            Err(e) => return Err(e),
        };
        // At N = m/2 only nondegenerate weights are admissible labels; at
        // N = m interior zeros are the scan's subject matter and stay.
        if !torsion && n != m && (1..n).any(|p| rep.e().get(p - 1, p).is_zero()) {
            continue;
        }
        let certificate = is_irreducible(&rep)?;
        entries.push(ScanEntry {
            lambda,
            family: rep.params().clone(),
            certificate,
        });
    }
    if !torsion && entries.len() < 5 {
        return Err(Error::InternalInconsistency(format!(
            "free-parameter scan found only {} admissible samples",
            entries.len()
        )));
    }
    Ok(ScanReport { n, mode, entries })
}

pub struct CyclicEntry {
    pub params: CyclicParams,
    pub certificate: IrreducibilityCertificate,
}

/// Deterministic cyclic samples with a b != 0 for the dimension-m row.
pub fn cyclic_samples(ctx: &QContext, want: usize) -> Result<Vec<CyclicEntry>> {
    let half = Cyclotomic::from_rational(ctx.conductor(), rat_frac(1, 2));
    let boundary_pairs = [
        (ctx.one(), ctx.one()),
        (ctx.one(), ctx.integer(2)),
        (ctx.integer(2), ctx.one()),
        (ctx.integer(-1), ctx.one()),
        (ctx.one(), ctx.integer(-1)),
        (ctx.integer(2), half.clone()),
        (half, ctx.integer(3)),
        (ctx.i_unit().clone(), ctx.one()),
    ];
    let mut out = Vec::new();
    'outer: for j in 0..2 * ctx.m() {
        let lambda = ctx.q_half_power(j as i64);
        for (a, b) in &boundary_pairs {
            if out.len() >= want {
                break 'outer;
            }
            let params = CyclicParams {
                lambda: lambda.clone(),
                a: a.clone(),
                b: b.clone(),
            };
            match families::cyclic_module(ctx, params.lambda.clone(), a.clone(), b.clone()) {
                Ok(rep) => {
                    let certificate = is_irreducible(&rep)?;
                    out.push(CyclicEntry {
                        params,
                        certificate,
                    });
                }
                Err(Error::DegenerateParameter { .. }) => continue,
                Err(e) => return Err(e),
            }
        }
    }
    if out.len() < want {
        return Err(Error::InternalInconsistency(format!(
            "only {} admissible cyclic samples found",
            out.len()
        )));
    }
    Ok(out)
}

pub struct DimensionReport {
    pub dim: usize,
    pub mode: ScanMode,
    pub entries: Vec<ScanEntry>,
    /// Nonempty only in the dimension-m row.
    pub cyclic_entries: Vec<CyclicEntry>,
    pub realized: bool,
}

impl DimensionReport {
    /// Provenance tags of the certified irreducibles in this row; one
    /// representative tag stands for the sampled cyclic family.
    pub fn realizing_families(&self) -> Vec<FamilyParams> {
        let mut out: Vec<FamilyParams> = self
            .entries
            .iter()
            .filter(|e| e.certificate.is_irreducible())
            .map(|e| e.family.clone())
            .collect();
        if let Some(first) = self
            .cyclic_entries
            .iter()
            .find(|e| e.certificate.is_irreducible())
        {
            out.push(FamilyParams::Cyclic {
                lambda: first.params.lambda.clone(),
                a: first.params.a.clone(),
                b: first.params.b.clone(),
            });
        }
        out
    }
}

pub struct ClassificationReport {
    pub m: usize,
    pub conductor: usize,
    pub dimensions: Vec<DimensionReport>,
}

impl ClassificationReport {
    pub fn irreducible_dimensions(&self) -> Vec<usize> {
        self.dimensions
            .iter()
            .filter(|d| d.realized)
            .map(|d| d.dim)
            .collect()
    }
}

/// The dimension set the classification must reproduce: 1..m for odd m,
/// 1..m/2 together with m for even m.
pub fn predicted_dimensions(m: usize) -> Vec<usize> {
    if m % 2 == 1 {
        (1..=m).collect()
    } else {
        let mut v: Vec<usize> = (1..=m / 2).collect();
        v.push(m);
        v
    }
}

/// Scan every dimension 1..m, certify the dimension-m cyclic samples, and
/// cross-check the realized dimension set against the predicted one.
pub fn classify(ctx: &QContext) -> Result<ClassificationReport> {
    let m = ctx.m();
    let mut dimensions = Vec::with_capacity(m);
    for n in 1..=m {
        let scan = scan_highest_weight(ctx, n)?;
        let cyclic_entries = if n == m {
            cyclic_samples(ctx, 10)?
        } else {
            Vec::new()
        };
        let realized = scan.any_irreducible()
            || cyclic_entries
                .iter()
                .any(|e| e.certificate.is_irreducible());
        dimensions.push(DimensionReport {
            dim: n,
            mode: scan.mode,
            entries: scan.entries,
            cyclic_entries,
            realized,
        });
    }
    let report = ClassificationReport {
        m,
        conductor: ctx.conductor(),
        dimensions,
    };
    let got = report.irreducible_dimensions();
    let expected = predicted_dimensions(m);
    if got != expected {
        return Err(Error::TheoremMismatch(format!(
            "m = {m}: computed {got:?}, predicted {expected:?}"
        )));
    }
    Ok(report)
}
