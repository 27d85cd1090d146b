//! Constructors for every representation family, in a square-root-free
//! triangular normal form, plus the Sklyanin generator transform.
//!
//! Triangular convention, used throughout the exact backend: on the basis
//! e_0, ..., e_{N-1},
//!
//! ```text
//! K e_p = lambda q^-p e_p,
//! F e_p = e_{p+1}            (boundary: F e_{N-1} = a e_0, a = 0 for ladders),
//! E e_p = c_p e_{p-1}        (boundary: E e_0 = b e_{N-1}, b = 0 for ladders),
//! ```
//!
//! with family-specific interior coefficients c_p. Square roots never enter;
//! the module structure is identical to the familiar symmetric bases, which
//! are recovered (over floats) in [`symmetric`].

pub mod symmetric;

pub use symmetric::{cyclic_symmetric_form, symmetric_form, SymmetricForm};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::repcore::Representation;
use crate::scalar::{Cyclotomic, QContext};

/// Provenance tag naming which family a representation came from.
#[derive(Debug, Clone, PartialEq)]
pub enum FamilyParams {
    /// The (N, omega) family that survives from generic q; omega^4 = 1.
    Generic { n: usize, omega: Cyclotomic },
    /// Highest-weight ladder of dimension N with top weight lambda.
    HighestWeight { n: usize, lambda: Cyclotomic },
    /// Dimension m/2 (m even), labelled by a free weight lambda.
    HalfM { lambda: Cyclotomic },
    /// Dimension m with wrap-around boundary parameters a (on F) and b (on E).
    Cyclic {
        lambda: Cyclotomic,
        a: Cyclotomic,
        b: Cyclotomic,
    },
    /// The (m+1)-dimensional indecomposable that defeats complete
    /// reducibility.
    Counterexample,
    /// No provenance (hand-built or deserialized without a tag).
    Raw,
}

impl FamilyParams {
    pub fn label(&self) -> &'static str {
        match self {
            FamilyParams::Generic { .. } => "generic",
            FamilyParams::HighestWeight { .. } => "highest_weight",
            FamilyParams::HalfM { .. } => "half_m",
            FamilyParams::Cyclic { .. } => "cyclic",
            FamilyParams::Counterexample => "counterexample",
            FamilyParams::Raw => "raw",
        }
    }
}

/// Cyclic family parameters (lambda, a, b); dimension is always m.
#[derive(Debug, Clone, PartialEq)]
pub struct CyclicParams {
    pub lambda: Cyclotomic,
    pub a: Cyclotomic,
    pub b: Cyclotomic,
}

/// Shared triangular builder. `interior[p-1]` is c_p for p = 1..N-1.
fn triangular(
    ctx: &QContext,
    lambda: &Cyclotomic,
    interior: &[Cyclotomic],
    a: &Cyclotomic,
    b: &Cyclotomic,
    params: FamilyParams,
) -> Result<Representation> {
    if lambda.is_zero() {
        return Err(Error::ZeroWeight);
    }
    let n = interior.len() + 1;
    let l = ctx.conductor();
    let lambda_inv = lambda.inv().expect("nonzero weight");
    let k = Matrix::diagonal(
        (0..n).map(|p| lambda * &ctx.q_power(-(p as i64))).collect(),
        l,
    );
    let kinv = Matrix::diagonal(
        (0..n)
            .map(|p| &lambda_inv * &ctx.q_power(p as i64))
            .collect(),
        l,
    );
    let mut f = Matrix::zero(n, n, l);
    for p in 0..n.saturating_sub(1) {
        f.set(p + 1, p, ctx.one());
    }
    if !a.is_zero() {
        f.set(0, n - 1, a.clone());
    }
    let mut e = Matrix::zero(n, n, l);
    for (idx, c) in interior.iter().enumerate() {
        // c_{idx+1}: E e_{idx+1} = c e_idx.
        e.set(idx, idx + 1, c.clone());
    }
    if !b.is_zero() {
        e.set(n - 1, 0, b.clone());
    }
    Representation::new(ctx.clone(), k, kinv, e, f, params)
}

/// The family surviving from generic q, realized triangularly with
/// lambda = omega q^((N-1)/2) and c_p = omega^2 (p)_q (N-p)_q.
///
/// Refuses sizes at which an interior coefficient vanishes (for even m that
/// is every N > m/2, where (m/2)_q = 0 enters the ladder).
pub fn generic_irrep(ctx: &QContext, n: usize, omega: Cyclotomic) -> Result<Representation> {
    if !omega.pow(4).expect("nonnegative power").is_one() {
        return Err(Error::InvalidOmega);
    }
    if n == 0 {
        return Err(Error::EmptyRepresentation);
    }
    let omega2 = &omega * &omega;
    let lambda = &omega * &ctx.q_half_power(n as i64 - 1);
    let mut interior = Vec::with_capacity(n - 1);
    for p in 1..n {
        let c = &omega2 * &(&ctx.q_int(p as i64) * &ctx.q_int((n - p) as i64));
        if c.is_zero() {
            return Err(Error::DegenerateInterior { p });
        }
        interior.push(c);
    }
    triangular(
        ctx,
        &lambda,
        &interior,
        &ctx.zero(),
        &ctx.zero(),
        FamilyParams::Generic { n, omega },
    )
}

/// Highest-weight ladder of dimension N and top weight lambda = q^(mu/2):
/// c_p = (p)_q (mu+1-p)_q. The ladder closes only under the boundary
/// condition (N)_q (mu+1-N)_q = 0; interior coefficients may vanish, which
/// is what the torsion scan exploits.
pub fn highest_weight_module(
    ctx: &QContext,
    n: usize,
    lambda: Cyclotomic,
) -> Result<Representation> {
    if n == 0 {
        return Err(Error::EmptyRepresentation);
    }
    if lambda.is_zero() {
        return Err(Error::ZeroWeight);
    }
    let boundary = &ctx.q_int(n as i64) * &ctx.weight_q_shift(&lambda, 1 - n as i64)?;
    if !boundary.is_zero() {
        return Err(Error::BoundaryViolation);
    }
    let interior = ladder_interior(ctx, &lambda, n)?;
    let params = FamilyParams::HighestWeight {
        n,
        lambda: lambda.clone(),
    };
    triangular(ctx, &lambda, &interior, &ctx.zero(), &ctx.zero(), params)
}

fn ladder_interior(ctx: &QContext, lambda: &Cyclotomic, n: usize) -> Result<Vec<Cyclotomic>> {
    (1..n)
        .map(|p| Ok(&ctx.q_int(p as i64) * &ctx.weight_q_shift(lambda, 1 - p as i64)?))
        .collect()
}

/// The dimension-m/2 family for even m, labelled by a free weight lambda.
/// The boundary holds automatically since (m/2)_q = 0; degenerate lambda
/// (a vanishing interior coefficient) is refused with the offending index.
pub fn half_m_irrep(ctx: &QContext, lambda: Cyclotomic) -> Result<Representation> {
    if !ctx.m().is_multiple_of(2) {
        return Err(Error::MOdd);
    }
    if lambda.is_zero() {
        return Err(Error::ZeroWeight);
    }
    let n = ctx.m() / 2;
    let interior = ladder_interior(ctx, &lambda, n)?;
    if let Some(p) = interior.iter().position(|c| c.is_zero()) {
        return Err(Error::DegenerateParameter { p: p + 1 });
    }
    let params = FamilyParams::HalfM {
        lambda: lambda.clone(),
    };
    triangular(ctx, &lambda, &interior, &ctx.zero(), &ctx.zero(), params)
}

/// The m-dimensional cyclic family: wrap-around boundaries F e_{m-1} = a e_0
/// and E e_0 = b e_{m-1}, interior c_p = (p)_q (mu+1-p)_q + a b, all of
/// which must be nonzero. Irreducible whenever a b != 0.
pub fn cyclic_module(
    ctx: &QContext,
    lambda: Cyclotomic,
    a: Cyclotomic,
    b: Cyclotomic,
) -> Result<Representation> {
    if lambda.is_zero() {
        return Err(Error::ZeroWeight);
    }
    let m = ctx.m();
    let ab = &a * &b;
    let mut interior = Vec::with_capacity(m - 1);
    for p in 1..m {
        let c = &(&ctx.q_int(p as i64) * &ctx.weight_q_shift(&lambda, 1 - p as i64)?) + &ab;
        if c.is_zero() {
            return Err(Error::DegenerateParameter { p });
        }
        interior.push(c);
    }
    let params = FamilyParams::Cyclic {
        lambda: lambda.clone(),
        a: a.clone(),
        b: b.clone(),
    };
    triangular(ctx, &lambda, &interior, &a, &b, params)
}

/// Interior coefficients of a cyclic module, c_p = (p)_q (mu+1-p)_q + ab.
pub fn cyclic_interior(ctx: &QContext, params: &CyclicParams) -> Result<Vec<Cyclotomic>> {
    let ab = &params.a * &params.b;
    (1..ctx.m())
        .map(|p| {
            Ok(&(&ctx.q_int(p as i64) * &ctx.weight_q_shift(&params.lambda, 1 - p as i64)?) + &ab)
        })
        .collect()
}

/// The (m+1)-dimensional module witnessing the failure of complete
/// reducibility: K e_p = q^(m/2 - p) e_p, F a plain ladder, and
/// E e_p = (p)_q (1-p)_q e_{p-1}, whose coefficients vanish at both ends.
/// The span of e_m is a submodule with no invariant complement.
pub fn counterexample_module(ctx: &QContext) -> Representation {
    let m = ctx.m();
    let lambda = ctx.q_half_power(m as i64);
    let interior: Vec<Cyclotomic> = (1..=m)
        .map(|p| &ctx.q_int(p as i64) * &ctx.q_int(1 - p as i64))
        .collect();
    triangular(
        ctx,
        &lambda,
        &interior,
        &ctx.zero(),
        &ctx.zero(),
        FamilyParams::Counterexample,
    )
    .expect("counterexample parameters are never degenerate")
}

/// The Sklyanin generators of a representation:
///
/// ```text
/// S_0 = c (K + K^-1)/(s + s^-1),   S_1 = -c (K - K^-1)/(s - s^-1),
/// S_+ = c F,                        S_- = c E,      c = (q - q^-1)/(2i),
/// ```
///
/// with s = q^(1/2). K is recovered exactly from S_0 and S_1 by
/// [`SklyaninQuadruple::recover_k`].
pub fn sklyanin_generators(rep: &Representation) -> SklyaninQuadruple {
    let ctx = rep.ctx();
    let c = sklyanin_scale(ctx);
    let s = ctx.q_half();
    let s_inv = s.inv().expect("root of unity");
    let plus = &(s + &s_inv).inv().expect("s + s^-1 != 0 for m >= 3");
    let minus = &(s - &s_inv).inv().expect("s has order 2m >= 6");
    let k_plus = rep.k().add(rep.kinv());
    let k_minus = rep.k().sub(rep.kinv());
    SklyaninQuadruple {
        s0: k_plus.scale(&(&c * plus)),
        s1: k_minus.scale(&-&(&c * minus)),
        s_plus: rep.f().scale(&c),
        s_minus: rep.e().scale(&c),
    }
}

/// c = (q - q^-1) / (2i).
pub fn sklyanin_scale(ctx: &QContext) -> Cyclotomic {
    let qdiff = &ctx.q_power(1) - &ctx.q_power(-1);
    let two_i = ctx.i_unit().scale(&crate::scalar::rat(2));
    qdiff.div(&two_i).expect("2i is invertible")
}

#[derive(Debug, Clone)]
pub struct SklyaninQuadruple {
    pub s0: Matrix,
    pub s1: Matrix,
    pub s_plus: Matrix,
    pub s_minus: Matrix,
}

impl SklyaninQuadruple {
    /// K = [(s + s^-1) S_0 - (s - s^-1) S_1] / (2c), exactly.
    pub fn recover_k(&self, ctx: &QContext) -> Matrix {
        let s = ctx.q_half();
        let s_inv = s.inv().expect("root of unity");
        let c = sklyanin_scale(ctx);
        let two_c_inv = c.scale(&crate::scalar::rat(2)).inv().expect("c is nonzero");
        self.s0
            .scale(&(s + &s_inv))
            .sub(&self.s1.scale(&(s - &s_inv)))
            .scale(&two_c_inv)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat_frac;

    fn ctx(m: usize) -> QContext {
        QContext::new(m).unwrap()
    }

    #[test]
    fn generic_n1_is_trivial() {
        let ctx = ctx(5);
        let rep = generic_irrep(&ctx, 1, ctx.one()).unwrap();
        assert_eq!(rep.dim(), 1);
        assert!(rep.k().is_identity());
        assert!(rep.e().is_zero() && rep.f().is_zero());
    }

    #[test]
    fn generic_m3_n3_matrices() {
        // K = diag(q, 1, q^-1); E superdiagonal (-1, -1); F subdiagonal ones.
        let ctx = ctx(3);
        let rep = generic_irrep(&ctx, 3, ctx.one()).unwrap();
        assert_eq!(rep.k().get(0, 0), &ctx.q_power(1));
        assert!(rep.k().get(1, 1).is_one());
        assert_eq!(rep.k().get(2, 2), &ctx.q_power(-1));
        // (1)_q (2)_q and (2)_q (1)_q, both = -1 at a primitive cube root.
        let minus_one = ctx.integer(-1);
        assert_eq!(rep.e().get(0, 1), &minus_one);
        assert_eq!(rep.e().get(1, 2), &minus_one);
        assert!(rep.f().get(1, 0).is_one());
        assert!(rep.f().get(2, 1).is_one());
        assert!(rep.verify_relations().all_pass());
    }

    #[test]
    fn generic_even_m_full_size_degenerates() {
        // m = 4, N = 4: c_2 contains (2)_q = 0 at q = i.
        let ctx = ctx(4);
        let err = generic_irrep(&ctx, 4, ctx.one()).unwrap_err();
        assert_eq!(err, Error::DegenerateInterior { p: 2 });
    }

    #[test]
    fn generic_rejects_bad_omega() {
        let ctx = ctx(3);
        let err = generic_irrep(&ctx, 2, ctx.q_half().clone()).unwrap_err();
        assert_eq!(err, Error::InvalidOmega);
    }

    #[test]
    fn highest_weight_free_boundary_at_even_m() {
        // m = 4, N = 2: (2)_q = 0, so any weight closes the ladder; c_1 = 1
        // at lambda = zeta_8.
        let ctx = ctx(4);
        let rep = highest_weight_module(&ctx, 2, ctx.root_of_unity(1)).unwrap();
        assert!(rep.e().get(0, 1).is_one());
        assert!(rep.verify_relations().all_pass());
    }

    #[test]
    fn highest_weight_overlaps_generic() {
        // m = 3, N = 2, lambda = q^{1/2}: the omega = 1 module of the
        // generic family, entrywise.
        let ctx = ctx(3);
        let hw = highest_weight_module(&ctx, 2, ctx.q_half().clone()).unwrap();
        let gen = generic_irrep(&ctx, 2, ctx.one()).unwrap();
        assert_eq!(hw.k(), gen.k());
        assert_eq!(hw.e(), gen.e());
        assert_eq!(hw.f(), gen.f());
    }

    #[test]
    fn highest_weight_periodic_weight() {
        // m = 3, N = 2, lambda = q^2 (mu = 4): boundary (2)_q (3)_q = 0
        // holds; interior c_1 = (4)_q = (1)_q = 1.
        let ctx = ctx(3);
        let rep = highest_weight_module(&ctx, 2, ctx.q_power(2)).unwrap();
        assert!(rep.e().get(0, 1).is_one());
        assert!(rep.verify_relations().all_pass());
    }

    #[test]
    fn highest_weight_boundary_violation() {
        // m = 3, N = 2, lambda = zeta_12: (2)_q (mu-1)_q != 0.
        let ctx = ctx(3);
        let err = highest_weight_module(&ctx, 2, ctx.root_of_unity(1)).unwrap_err();
        assert_eq!(err, Error::BoundaryViolation);
    }

    #[test]
    fn half_m_at_four() {
        // m = 4, lambda = zeta_8: 2-dimensional, K = diag(zeta_8, zeta_8 q^-1),
        // E = [[0,1],[0,0]], F = [[0,0],[1,0]].
        let ctx = ctx(4);
        let rep = half_m_irrep(&ctx, ctx.root_of_unity(1)).unwrap();
        assert_eq!(rep.dim(), 2);
        assert_eq!(rep.k().get(0, 0), &ctx.root_of_unity(1));
        assert_eq!(
            rep.k().get(1, 1),
            &(&ctx.root_of_unity(1) * &ctx.q_power(-1))
        );
        assert!(rep.e().get(0, 1).is_one());
        assert!(rep.f().get(1, 0).is_one());
        assert!(rep.verify_relations().all_pass());
    }

    #[test]
    fn half_m_degenerate_weight() {
        // lambda = 1 makes (mu)_q = 0: degenerate at p = 1.
        let ctx = ctx(4);
        let err = half_m_irrep(&ctx, ctx.one()).unwrap_err();
        assert_eq!(err, Error::DegenerateParameter { p: 1 });
    }

    #[test]
    fn half_m_at_six() {
        // m = 6, lambda = q (mu = 2): c_1 = (2)_q, c_2 = (2)_q (1)_q, both
        // nonzero at a primitive 6th root.
        let ctx = ctx(6);
        let rep = half_m_irrep(&ctx, ctx.q_power(1)).unwrap();
        assert_eq!(rep.dim(), 3);
        let two_q = ctx.q_int(2);
        assert!(!two_q.is_zero());
        assert_eq!(rep.e().get(0, 1), &two_q);
        assert_eq!(rep.e().get(1, 2), &(&two_q * &ctx.q_int(1)));
        assert!(rep.verify_relations().all_pass());
    }

    #[test]
    fn half_m_requires_even_m() {
        let ctx = ctx(5);
        assert_eq!(half_m_irrep(&ctx, ctx.one()).unwrap_err(), Error::MOdd);
    }

    #[test]
    fn cyclic_with_zero_boundaries_matches_generic() {
        // lambda = q = omega q^{(m-1)/2} with omega = 1 at m = 3.
        let ctx = ctx(3);
        let cyc = cyclic_module(&ctx, ctx.q_power(1), ctx.zero(), ctx.zero()).unwrap();
        let gen = generic_irrep(&ctx, 3, ctx.one()).unwrap();
        assert_eq!(cyc.k(), gen.k());
        assert_eq!(cyc.e(), gen.e());
        assert_eq!(cyc.f(), gen.f());
    }

    #[test]
    fn cyclic_unit_boundaries() {
        // m = 3, lambda = 1, a = b = 1: c_1 = 1, c_2 = 2; E is nonsingular,
        // so there is no highest-weight vector.
        let ctx = ctx(3);
        let rep = cyclic_module(&ctx, ctx.one(), ctx.one(), ctx.one()).unwrap();
        assert!(rep.e().get(0, 1).is_one());
        assert_eq!(rep.e().get(1, 2), &ctx.integer(2));
        assert_eq!(rep.e().get(2, 0), &ctx.one());
        assert!(rep.verify_relations().all_pass());
    }

    #[test]
    fn cyclic_degenerate_pair() {
        // a = 1, b = -1: c_2 = 1 + ab = 0.
        let ctx = ctx(3);
        let err = cyclic_module(&ctx, ctx.one(), ctx.one(), ctx.integer(-1)).unwrap_err();
        assert_eq!(err, Error::DegenerateParameter { p: 2 });
    }

    #[test]
    fn counterexample_invariant_lines() {
        for m in 3..=6 {
            let ctx = ctx(m);
            let rep = counterexample_module(&ctx);
            assert_eq!(rep.dim(), m + 1);
            assert!(rep.verify_relations().all_pass());
            // E kills e_1 and e_m; F kills e_m: both displayed invariant
            // subspaces are closed under the action.
            assert!(rep.e().column(1).iter().all(|c| c.is_zero()));
            assert!(rep.e().column(m).iter().all(|c| c.is_zero()));
            assert!(rep.f().column(m).iter().all(|c| c.is_zero()));
        }
    }

    #[test]
    fn counterexample_weights_at_three() {
        let ctx = ctx(3);
        let rep = counterexample_module(&ctx);
        for p in 0..4 {
            assert_eq!(rep.k().get(p, p), &ctx.q_half_power(3 - 2 * p as i64));
        }
        // q^{1/2} = zeta_12^2.
        assert_eq!(ctx.q_half(), &Cyclotomic::root(12, 2));
    }

    #[test]
    fn sklyanin_s1_vanishes_on_trivial() {
        let ctx = ctx(3);
        let rep = generic_irrep(&ctx, 1, ctx.one()).unwrap();
        let quad = sklyanin_generators(&rep);
        assert!(quad.s1.is_zero());
        assert_eq!(quad.recover_k(&ctx), *rep.k());
    }

    #[test]
    fn sklyanin_round_trip_exact() {
        for m in 3..=6 {
            let ctx = ctx(m);
            let mut reps = vec![counterexample_module(&ctx)];
            reps.push(generic_irrep(&ctx, 2, ctx.i_unit().clone()).unwrap());
            if let Ok(r) = cyclic_module(&ctx, ctx.one(), ctx.one(), ctx.integer(2)) {
                reps.push(r);
            }
            for rep in reps {
                let quad = sklyanin_generators(&rep);
                assert_eq!(quad.recover_k(&ctx), *rep.k());
            }
        }
    }

    #[test]
    fn sklyanin_trivial_value_at_three() {
        // S_0 on the trivial module is c * 2 / (s + s^-1) = sqrt(3) at m = 3
        // (c = sqrt(3)/2 and s + s^-1 = 1).
        let ctx = ctx(3);
        let rep = generic_irrep(&ctx, 1, ctx.one()).unwrap();
        let quad = sklyanin_generators(&rep);
        let (re, im) = quad.s0.get(0, 0).embed();
        assert!((re - 3f64.sqrt()).abs() < 1e-12, "got {re}");
        assert!(im.abs() < 1e-12);
        // And c itself embeds to sqrt(3)/2.
        let (re, im) = sklyanin_scale(&ctx).embed();
        assert!((re - 3f64.sqrt() / 2.0).abs() < 1e-12);
        assert!(im.abs() < 1e-12);
    }

    #[test]
    fn half_m_overlap_with_generic() {
        // half_m(lambda = omega q^{(m/2-1)/2}) equals generic(N = m/2, omega)
        // entrywise, for every fourth root omega.
        for m in [4usize, 6, 8] {
            let ctx = ctx(m);
            let n = m / 2;
            for omega in ctx.fourth_roots() {
                let lambda = &omega * &ctx.q_half_power(n as i64 - 1);
                let half = half_m_irrep(&ctx, lambda).unwrap();
                let gen = generic_irrep(&ctx, n, omega).unwrap();
                assert_eq!(half.k(), gen.k());
                assert_eq!(half.e(), gen.e());
                assert_eq!(half.f(), gen.f());
            }
        }
    }

    #[test]
    fn cyclic_central_closed_forms() {
        // F^m = a, K^m = lambda^m, E^m = b * prod(c_p), against the direct
        // m-fold matrix product.
        let ctx = ctx(4);
        let lambda = ctx.root_of_unity(1);
        let a = ctx.integer(2);
        let b = Cyclotomic::from_rational(ctx.conductor(), rat_frac(1, 2));
        let rep = cyclic_module(&ctx, lambda.clone(), a.clone(), b.clone()).unwrap();
        let report = rep.central_scalars();
        assert_eq!(report.f_power.as_scalar().unwrap(), &a);
        assert_eq!(report.k_power.as_scalar().unwrap(), &lambda.pow(4).unwrap());
        let params = CyclicParams {
            lambda,
            a,
            b: b.clone(),
        };
        let mut prod = b;
        for c in cyclic_interior(&ctx, &params).unwrap() {
            prod = &prod * &c;
        }
        assert_eq!(report.e_power.as_scalar().unwrap(), &prod);
    }
}
