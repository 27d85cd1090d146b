//! Intertwiner spaces and the isomorphism criterion for cyclic modules.

use crate::error::{Error, Result};
use crate::families::{cyclic_interior, CyclicParams};
use crate::matrix::Matrix;
use crate::repcore::{Generator, Representation};
use crate::scalar::{Cyclotomic, QContext};

use super::irreducibility::is_irreducible;
use super::subspace::{nullspace, Echelon};

/// A basis of the space of module maps T with T rho_1(g) = rho_2(g) T for
/// g in {K, E, F} (K^-1 follows from K and invertibility).
pub struct HomBasis {
    pub source_dim: usize,
    pub target_dim: usize,
    pub basis: Vec<Matrix>,
}

impl HomBasis {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Solve the exact linear system for intertwiners rep1 -> rep2.
pub fn hom_space(rep1: &Representation, rep2: &Representation) -> HomBasis {
    assert_eq!(
        rep1.ctx().conductor(),
        rep2.ctx().conductor(),
        "intertwiners require a common session field"
    );
    let n1 = rep1.dim();
    let n2 = rep2.dim();
    let l = rep1.ctx().conductor();
    let unknowns = n1 * n2; // T is n2 x n1, index (i, j) -> i * n1 + j
    let mut rows = Vec::new();
    for g in [Generator::K, Generator::E, Generator::F] {
        let a = rep2.generator(g);
        let b = rep1.generator(g);
        for i in 0..n2 {
            for j in 0..n1 {
                // [rho2(g) T - T rho1(g)]_{ij} = 0
                let mut row = vec![Cyclotomic::zero(l); unknowns];
                for t in 0..n2 {
                    let c = a.get(i, t);
                    if !c.is_zero() {
                        row[t * n1 + j] = &row[t * n1 + j] + c;
                    }
                }
                for t in 0..n1 {
                    let c = b.get(t, j);
                    if !c.is_zero() {
                        row[i * n1 + t] = &row[i * n1 + t] - c;
                    }
                }
                rows.push(row);
            }
        }
    }
    let basis = nullspace(rows, unknowns, l)
        .into_iter()
        .map(|flat| {
            let mut t = Matrix::zero(n2, n1, l);
            for i in 0..n2 {
                for j in 0..n1 {
                    t.set(i, j, flat[i * n1 + j].clone());
                }
            }
            t
        })
        .collect();
    HomBasis {
        source_dim: n1,
        target_dim: n2,
        basis,
    }
}

pub fn matrix_rank(m: &Matrix) -> usize {
    let mut ech = Echelon::new(m.cols(), m.conductor());
    for i in 0..m.rows() {
        ech.insert((0..m.cols()).map(|j| m.get(i, j).clone()).collect());
    }
    ech.rank()
}

/// Exact check that T intertwines all four generators.
pub fn is_intertwiner(t: &Matrix, rep1: &Representation, rep2: &Representation) -> bool {
    crate::repcore::GENERATORS
        .iter()
        .all(|&g| rep2.generator(g).mul(t) == t.mul(rep1.generator(g)))
}

/// Isomorphism of certified irreducibles, by Schur: the hom space has
/// dimension one exactly when the modules are isomorphic, and its generator
/// is then invertible (checked, as an internal assertion).
pub fn are_isomorphic(rep1: &Representation, rep2: &Representation) -> Result<Option<Matrix>> {
    if !is_irreducible(rep1)?.is_irreducible() || !is_irreducible(rep2)?.is_irreducible() {
        return Err(Error::NotIrreducible);
    }
    if rep1.dim() != rep2.dim() {
        return Ok(None);
    }
    let homs = hom_space(rep1, rep2);
    match homs.dim() {
        0 => Ok(None),
        1 => {
            let t = homs.basis.into_iter().next().expect("dimension one");
            if matrix_rank(&t) != rep1.dim() {
                return Err(Error::InternalInconsistency(
                    "nonzero intertwiner between irreducibles is singular".into(),
                ));
            }
            Ok(Some(t))
        }
        d => Err(Error::InternalInconsistency(format!(
            "hom space between irreducibles has dimension {d}"
        ))),
    }
}

/// Parameter-level isomorphism test for cyclic modules with a b != 0.
///
/// Rotating the cyclic basis to start at e_j shows that M(lambda, a, b) is
/// isomorphic to M(lambda', a', b') exactly when, for some r (with
/// j = -r mod m),
///
/// ```text
/// lambda' = lambda q^r,
/// a' b'   = a b - (r)_q (mu + r + 1)_q,
/// a'      = a,
/// ```
///
/// together with the boundary-ratio condition
/// (a/b) / prod c_k = (a'/b') / prod c'_k, which the first three imply. The
/// shift r only matters modulo m, so r = 0..m-1 is exhausted. Returns the
/// matching r if any.
pub fn iso_criterion_cyclic(
    ctx: &QContext,
    p1: &CyclicParams,
    p2: &CyclicParams,
) -> Result<Option<usize>> {
    let ab1 = &p1.a * &p1.b;
    let ab2 = &p2.a * &p2.b;
    if ab1.is_zero() || ab2.is_zero() {
        return Err(Error::HighestWeightParams);
    }
    let prod1 = interior_product(ctx, p1)?;
    let prod2 = interior_product(ctx, p2)?;
    // alpha/beta in boundary-normalized terms: (a/b) / prod(c_k).
    let ratio1 = p1.a.div(&p1.b)?.div(&prod1)?;
    let ratio2 = p2.a.div(&p2.b)?.div(&prod2)?;
    for r in 0..ctx.m() {
        if p2.lambda != &p1.lambda * &ctx.q_power(r as i64) {
            continue;
        }
        let drop = &ctx.q_int(r as i64) * &ctx.weight_q_shift(&p1.lambda, r as i64 + 1)?;
        if ab2 != &ab1 - &drop {
            continue;
        }
        if ratio1 != ratio2 {
            continue;
        }
        // The product and ratio conditions pin (a', b') only up to a
        // simultaneous sign; F^m = a is central, hence an isomorphism
        // invariant, so the sign must match exactly.
        if p2.a != p1.a {
            continue;
        }
        return Ok(Some(r));
    }
    Ok(None)
}

fn interior_product(ctx: &QContext, p: &CyclicParams) -> Result<Cyclotomic> {
    let mut prod = ctx.one();
    for (idx, c) in cyclic_interior(ctx, p)?.into_iter().enumerate() {
        if c.is_zero() {
            return Err(Error::DegenerateParameter { p: idx + 1 });
        }
        prod = &prod * &c;
    }
    Ok(prod)
}

/// The parameters of the same module with the cyclic basis rotated to start
/// at e_j: (lambda q^-j, a, c_j / a). Useful for generating provably
/// isomorphic pairs.
pub fn rotate_cyclic_params(ctx: &QContext, p: &CyclicParams, j: usize) -> Result<CyclicParams> {
    let ab = &p.a * &p.b;
    if ab.is_zero() {
        return Err(Error::HighestWeightParams);
    }
    let j = j % ctx.m();
    if j == 0 {
        return Ok(p.clone());
    }
    let c_j = &(&ctx.q_int(j as i64) * &ctx.weight_q_shift(&p.lambda, 1 - j as i64)?) + &ab;
    Ok(CyclicParams {
        lambda: &p.lambda * &ctx.q_power(-(j as i64)),
        a: p.a.clone(),
        b: c_j.div(&p.a)?,
    })
}
