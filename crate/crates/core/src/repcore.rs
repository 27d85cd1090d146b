//! Representations of the algebra: matrices for the four generators,
//! the defining-relation verifier, weight decomposition, and evaluation of
//! the central elements E^m, F^m, K^m.

use crate::error::{Error, Result};
use crate::families::FamilyParams;
use crate::matrix::Matrix;
use crate::scalar::{Cyclotomic, QContext};

/// A generator symbol, for building words.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    K,
    KInv,
    E,
    F,
}

pub const GENERATORS: [Generator; 4] = [Generator::K, Generator::KInv, Generator::E, Generator::F];

/// Matrices for K, K^-1, E, F on a module of dimension `dim`, together with
/// the ambient context and a provenance tag. Construction stores the
/// matrices verbatim; whether the defining relations hold is checked
/// explicitly by [`Representation::verify_relations`], so deliberately
/// broken representations can be built for testing.
#[derive(Clone)]
pub struct Representation {
    ctx: QContext,
    dim: usize,
    k: Matrix,
    kinv: Matrix,
    e: Matrix,
    f: Matrix,
    params: FamilyParams,
}

impl Representation {
    pub fn new(
        ctx: QContext,
        k: Matrix,
        kinv: Matrix,
        e: Matrix,
        f: Matrix,
        params: FamilyParams,
    ) -> Result<Self> {
        let dim = Matrix::check_square_same_dim(&[&k, &kinv, &e, &f])?;
        if k.conductor() != ctx.conductor() {
            return Err(Error::DimensionMismatch(format!(
                "matrices have conductor {}, context has {}",
                k.conductor(),
                ctx.conductor()
            )));
        }
        Ok(Representation {
            ctx,
            dim,
            k,
            kinv,
            e,
            f,
            params,
        })
    }

    pub fn ctx(&self) -> &QContext {
        &self.ctx
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn k(&self) -> &Matrix {
        &self.k
    }

    pub fn kinv(&self) -> &Matrix {
        &self.kinv
    }

    pub fn e(&self) -> &Matrix {
        &self.e
    }

    pub fn f(&self) -> &Matrix {
        &self.f
    }

    pub fn params(&self) -> &FamilyParams {
        &self.params
    }

    pub fn with_params(mut self, params: FamilyParams) -> Self {
        self.params = params;
        self
    }

    pub fn generator(&self, g: Generator) -> &Matrix {
        match g {
            Generator::K => &self.k,
            Generator::KInv => &self.kinv,
            Generator::E => &self.e,
            Generator::F => &self.f,
        }
    }

    /// Exact check of the four defining identities. Failures are report
    /// content, not errors.
    pub fn verify_relations(&self) -> RelationReport {
        let ctx = &self.ctx;
        let id = Matrix::identity(self.dim, ctx.conductor());
        let mut checks = Vec::with_capacity(4);

        // K K^-1 = K^-1 K = 1
        let kk = self.k.mul(&self.kinv);
        let kk2 = self.kinv.mul(&self.k);
        let fail = kk
            .first_difference(&id)
            .or_else(|| kk2.first_difference(&id));
        checks.push(RelationCheck::new(Relation::KInverse, fail));

        // K E K^-1 = q E
        let lhs = self.k.mul(&self.e).mul(&self.kinv);
        let rhs = self.e.scale(ctx.q());
        checks.push(RelationCheck::new(
            Relation::ConjugationE,
            lhs.first_difference(&rhs),
        ));

        // K F K^-1 = q^-1 F
        let lhs = self.k.mul(&self.f).mul(&self.kinv);
        let rhs = self.f.scale(&ctx.q_power(-1));
        checks.push(RelationCheck::new(
            Relation::ConjugationF,
            lhs.first_difference(&rhs),
        ));

        // [E, F] = (K^2 - K^-2) / (q - q^-1)
        let lhs = self.e.mul(&self.f).sub(&self.f.mul(&self.e));
        let k2 = self.k.mul(&self.k);
        let kinv2 = self.kinv.mul(&self.kinv);
        let rhs = k2.sub(&kinv2).scale(ctx.qdiff_inv());
        checks.push(RelationCheck::new(
            Relation::Commutator,
            lhs.first_difference(&rhs),
        ));

        RelationReport { checks }
    }

    /// Weight decomposition with respect to K, which must be diagonal (all
    /// family constructors produce a weight basis). Groups equal eigenvalues
    /// and verifies that every eigenvalue is q^p times the first one, i.e.
    /// the spectrum lies in a single q-power orbit.
    pub fn weight_decomposition(&self) -> Result<WeightDecomposition> {
        if !self.k.is_diagonal() {
            return Err(Error::NonDiagonalK);
        }
        let mut spaces: Vec<WeightSpace> = Vec::new();
        for p in 0..self.dim {
            let ev = self.k.get(p, p).clone();
            if ev.is_zero() {
                return Err(Error::SingularK);
            }
            match spaces.iter_mut().find(|s| s.eigenvalue == ev) {
                Some(space) => space.columns.push(p),
                None => spaces.push(WeightSpace {
                    eigenvalue: ev,
                    orbit_exponent: 0,
                    columns: vec![p],
                }),
            }
        }
        if let Some(first) = spaces.first() {
            let base = first.eigenvalue.clone();
            let orbit: Vec<Cyclotomic> = (0..self.ctx.m())
                .map(|p| &base * &self.ctx.q_power(p as i64))
                .collect();
            for space in &mut spaces {
                match orbit.iter().position(|v| *v == space.eigenvalue) {
                    Some(p) => space.orbit_exponent = p,
                    None => return Err(Error::NotSingleOrbit),
                }
            }
        }
        Ok(WeightDecomposition {
            dim: self.dim,
            spaces,
        })
    }

    /// E^m, F^m and K^m, classified as exact scalars or not. On any
    /// irreducible module all three are scalar.
    pub fn central_scalars(&self) -> CentralReport {
        let m = self.ctx.m();
        let classify = |mat: Matrix| match mat.scalar_multiple_of_identity() {
            Some(c) => CentralValue::Scalar(c),
            None => CentralValue::NotScalar,
        };
        CentralReport {
            e_power: classify(self.e.pow(m)),
            f_power: classify(self.f.pow(m)),
            k_power: classify(self.k.pow(m)),
        }
    }

    /// Product of generator images in word order; the empty word is the
    /// identity.
    pub fn word_action(&self, word: &[Generator]) -> Matrix {
        let mut acc = Matrix::identity(self.dim, self.ctx.conductor());
        for g in word {
            acc = acc.mul(self.generator(*g));
        }
        acc
    }
}

impl std::fmt::Debug for Representation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Representation(dim={}, m={}, family={})",
            self.dim,
            self.ctx.m(),
            self.params.label()
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    KInverse,
    ConjugationE,
    ConjugationF,
    Commutator,
}

impl Relation {
    pub fn description(self) -> &'static str {
        match self {
            Relation::KInverse => "K K^-1 = K^-1 K = 1",
            Relation::ConjugationE => "K E K^-1 = q E",
            Relation::ConjugationF => "K F K^-1 = q^-1 F",
            Relation::Commutator => "E F - F E = (K^2 - K^-2)/(q - q^-1)",
        }
    }
}

#[derive(Debug, Clone)]
pub struct RelationCheck {
    pub relation: Relation,
    pub passed: bool,
    /// Row and column of the first entry violating the identity.
    pub first_failure: Option<(usize, usize)>,
}

impl RelationCheck {
    fn new(relation: Relation, failure: Option<(usize, usize)>) -> Self {
        RelationCheck {
            relation,
            passed: failure.is_none(),
            first_failure: failure,
        }
    }
}

#[derive(Debug, Clone)]
pub struct RelationReport {
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

#[derive(Debug, Clone)]
pub struct WeightSpace {
    pub eigenvalue: Cyclotomic,
    /// p with eigenvalue = (first eigenvalue) * q^p.
    pub orbit_exponent: usize,
    pub columns: Vec<usize>,
}

impl WeightSpace {
    pub fn multiplicity(&self) -> usize {
        self.columns.len()
    }
}

#[derive(Debug, Clone)]
pub struct WeightDecomposition {
    pub dim: usize,
    pub spaces: Vec<WeightSpace>,
}

impl WeightDecomposition {
    pub fn multiplicities_sum(&self) -> usize {
        self.spaces.iter().map(|s| s.multiplicity()).sum()
    }

    pub fn max_multiplicity(&self) -> usize {
        self.spaces
            .iter()
            .map(|s| s.multiplicity())
            .max()
            .unwrap_or(0)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum CentralValue {
    Scalar(Cyclotomic),
    NotScalar,
}

impl CentralValue {
    pub fn as_scalar(&self) -> Option<&Cyclotomic> {
        match self {
            CentralValue::Scalar(c) => Some(c),
            CentralValue::NotScalar => None,
        }
    }
}

/// Values of the central elements E^m, F^m, K^m.
#[derive(Debug, Clone)]
pub struct CentralReport {
    pub e_power: CentralValue,
    pub f_power: CentralValue,
    pub k_power: CentralValue,
}

impl CentralReport {
    pub fn all_scalar(&self) -> bool {
        self.e_power.as_scalar().is_some()
            && self.f_power.as_scalar().is_some()
            && self.k_power.as_scalar().is_some()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn ctx(m: usize) -> QContext {
        QContext::new(m).unwrap()
    }

    #[test]
    fn trivial_representation_is_valid() {
        let ctx = ctx(3);
        let one = Matrix::identity(1, ctx.conductor());
        let zero = Matrix::zero(1, 1, ctx.conductor());
        let rep = Representation::new(
            ctx.clone(),
            one.clone(),
            one,
            zero.clone(),
            zero,
            FamilyParams::Raw,
        )
        .unwrap();
        assert!(rep.verify_relations().all_pass());
        let wd = rep.weight_decomposition().unwrap();
        assert_eq!(wd.spaces.len(), 1);
        assert!(wd.spaces[0].eigenvalue.is_one());
    }

    #[test]
    fn mismatched_sizes_are_rejected() {
        let ctx = ctx(3);
        let one = Matrix::identity(1, ctx.conductor());
        let big = Matrix::identity(2, ctx.conductor());
        let zero = Matrix::zero(1, 1, ctx.conductor());
        let err = Representation::new(ctx, one.clone(), big, zero.clone(), zero, FamilyParams::Raw)
            .unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch(_)));
    }

    #[test]
    fn generic_family_passes_relations() {
        let ctx = ctx(3);
        let rep = families::generic_irrep(&ctx, 2, ctx.one()).unwrap();
        assert!(rep.verify_relations().all_pass());
    }

    #[test]
    fn corrupted_entry_fails_commutator() {
        let ctx = ctx(3);
        let rep = families::generic_irrep(&ctx, 2, ctx.one()).unwrap();
        let mut e = rep.e().clone();
        let bumped = &e.get(0, 0).clone() + &ctx.one();
        e.set(0, 0, bumped);
        let broken = Representation::new(
            rep.ctx().clone(),
            rep.k().clone(),
            rep.kinv().clone(),
            e,
            rep.f().clone(),
            FamilyParams::Raw,
        )
        .unwrap();
        let report = broken.verify_relations();
        assert!(!report.all_pass());
        let commutator = report
            .checks
            .iter()
            .find(|c| c.relation == Relation::Commutator)
            .unwrap();
        assert!(!commutator.passed);
        assert!(commutator.first_failure.is_some());
    }

    #[test]
    fn weight_decomposition_of_generic() {
        // N = 3 at m = 3: weights q, 1, q^-1, each multiplicity 1.
        let ctx = ctx(3);
        let rep = families::generic_irrep(&ctx, 3, ctx.one()).unwrap();
        let wd = rep.weight_decomposition().unwrap();
        let expected = [ctx.q_power(1), ctx.q_power(0), ctx.q_power(-1)];
        assert_eq!(wd.spaces.len(), 3);
        for (space, ev) in wd.spaces.iter().zip(expected.iter()) {
            assert_eq!(&space.eigenvalue, ev);
            assert_eq!(space.multiplicity(), 1);
        }
    }

    #[test]
    fn counterexample_has_doubled_weight() {
        // Top and bottom weights coincide: q^{m/2} = q^{m/2 - m}.
        let ctx = ctx(3);
        let rep = families::counterexample_module(&ctx);
        let wd = rep.weight_decomposition().unwrap();
        assert_eq!(wd.dim, 4);
        assert_eq!(wd.spaces.len(), 3);
        assert_eq!(wd.max_multiplicity(), 2);
        let doubled = wd.spaces.iter().find(|s| s.multiplicity() == 2).unwrap();
        assert_eq!(doubled.columns, vec![0, 3]);
        assert_eq!(doubled.eigenvalue, ctx.q_half_power(3));
    }

    #[test]
    fn multi_orbit_spectrum_is_detected() {
        // diag(1, zeta_8) at m = 4: zeta_8 is not a power of q = i.
        let ctx = ctx(4);
        let k = Matrix::diagonal(vec![ctx.one(), ctx.root_of_unity(1)], ctx.conductor());
        let kinv = Matrix::diagonal(vec![ctx.one(), ctx.root_of_unity(-1)], ctx.conductor());
        let zero = Matrix::zero(2, 2, ctx.conductor());
        let rep = Representation::new(ctx, k, kinv, zero.clone(), zero, FamilyParams::Raw).unwrap();
        assert_eq!(
            rep.weight_decomposition().unwrap_err(),
            Error::NotSingleOrbit
        );
    }

    #[test]
    fn central_scalars_of_generic() {
        // Highest-weight ladder of length 3: F^3 = 0, K^3 = 1.
        let ctx = ctx(3);
        let rep = families::generic_irrep(&ctx, 3, ctx.one()).unwrap();
        let report = rep.central_scalars();
        assert_eq!(report.f_power, CentralValue::Scalar(ctx.zero()));
        assert_eq!(report.k_power, CentralValue::Scalar(ctx.one()));
        assert!(report.e_power.as_scalar().unwrap().is_zero());
    }

    #[test]
    fn counterexample_f_power_not_scalar() {
        // F^m maps e_0 to e_m and kills the rest: not scalar.
        for m in 3..=5 {
            let ctx = ctx(m);
            let rep = families::counterexample_module(&ctx);
            let report = rep.central_scalars();
            assert_eq!(report.f_power, CentralValue::NotScalar);
        }
    }

    #[test]
    fn word_action_basics() {
        let ctx = ctx(4);
        let rep = families::counterexample_module(&ctx);
        let id = Matrix::identity(rep.dim(), ctx.conductor());
        assert_eq!(rep.word_action(&[]), id);
        assert_eq!(rep.word_action(&[Generator::K, Generator::KInv]), id);
    }

    #[test]
    fn ladder_commutation_identity_at_p2() {
        // [E, F^2] = F (2)_q (K^2 q^-1 - K^-2 q)/(q - q^-1), both sides
        // computed independently on the N = 3 module at m = 5.
        let ctx = ctx(5);
        let rep = families::generic_irrep(&ctx, 3, ctx.one()).unwrap();
        use Generator::{E, F};
        let lhs = rep
            .word_action(&[E, F, F])
            .sub(&rep.word_action(&[F, F, E]));
        let k2 = rep.k().mul(rep.k());
        let kinv2 = rep.kinv().mul(rep.kinv());
        let inner = k2
            .scale(&ctx.q_power(-1))
            .sub(&kinv2.scale(&ctx.q_power(1)))
            .scale(ctx.qdiff_inv())
            .scale(&ctx.q_int(2));
        let rhs = rep.f().mul(&inner);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn conjugation_in_commuting_form() {
        // K E = q E K and K F = q^-1 F K for a verified representation.
        let ctx = ctx(6);
        let rep = families::generic_irrep(&ctx, 3, ctx.i_unit().clone()).unwrap();
        assert_eq!(rep.k().mul(rep.e()), rep.e().mul(rep.k()).scale(ctx.q()));
        assert_eq!(
            rep.k().mul(rep.f()),
            rep.f().mul(rep.k()).scale(&ctx.q_power(-1))
        );
    }
}
