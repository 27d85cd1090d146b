//! Exact row-echelon machinery over the cyclotomic field.
//!
//! Subspaces are kept in reduced row echelon form (pivots 1, pivot columns
//! cleared, rows ordered by pivot), so each subspace has a unique canonical
//! representative and membership is elimination.

use crate::error::{Error, Result};
use crate::scalar::Cyclotomic;

/// Incrementally maintained reduced row echelon basis.
#[derive(Clone)]
pub struct Echelon {
    ncols: usize,
    conductor: usize,
    rows: Vec<Vec<Cyclotomic>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(ncols: usize, conductor: usize) -> Self {
        Echelon {
            ncols,
            conductor,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Cyclotomic>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn conductor(&self) -> usize {
        self.conductor
    }

    /// Eliminate the pivot coordinates of `v` in place.
    pub fn reduce(&self, v: &mut [Cyclotomic]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let coeff = v[p].clone();
            if coeff.is_zero() {
                continue;
            }
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x = &*x - &(&coeff * r);
                }
            }
        }
    }

    pub fn contains(&self, v: &[Cyclotomic]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|c| c.is_zero())
    }

    /// Insert a vector; returns the reduced, normalized row if it enlarged
    /// the span.
    pub fn insert(&mut self, v: Vec<Cyclotomic>) -> Option<Vec<Cyclotomic>> {
        assert_eq!(v.len(), self.ncols);
        let mut v = v;
        self.reduce(&mut v);
        let pivot = v.iter().position(|c| !c.is_zero())?;
        let lead_inv = v[pivot].inv().expect("leading entry is nonzero");
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x = &*x * &lead_inv;
            }
        }
        // Clear the new pivot column in the existing rows.
        for row in self.rows.iter_mut() {
            let coeff = row[pivot].clone();
            if coeff.is_zero() {
                continue;
            }
            for (x, nv) in row.iter_mut().zip(&v) {
                if !nv.is_zero() {
                    *x = &*x - &(&coeff * nv);
                }
            }
        }
        let at = self
            .pivots
            .iter()
            .position(|&p| p > pivot)
            .unwrap_or(self.pivots.len());
        self.rows.insert(at, v.clone());
        self.pivots.insert(at, pivot);
        Some(v)
    }
}

/// A subspace of coordinate space in canonical reduced echelon form.
#[derive(Clone)]
pub struct Subspace {
    ambient_dim: usize,
    echelon: Echelon,
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Subspace(dim={}, ambient={}, pivots={:?})",
            self.dim(),
            self.ambient_dim,
            self.echelon.pivots()
        )
    }
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim && self.echelon.rows == other.echelon.rows
    }
}

impl Subspace {
    pub fn zero(ambient_dim: usize, conductor: usize) -> Self {
        Subspace {
            ambient_dim,
            echelon: Echelon::new(ambient_dim, conductor),
        }
    }

    pub fn from_vectors(
        ambient_dim: usize,
        conductor: usize,
        vectors: impl IntoIterator<Item = Vec<Cyclotomic>>,
    ) -> Self {
        let mut echelon = Echelon::new(ambient_dim, conductor);
        for v in vectors {
            echelon.insert(v);
        }
        Subspace {
            ambient_dim,
            echelon,
        }
    }

    pub fn full(ambient_dim: usize, conductor: usize) -> Self {
        let mut vectors = Vec::with_capacity(ambient_dim);
        for i in 0..ambient_dim {
            let mut v = vec![Cyclotomic::zero(conductor); ambient_dim];
            v[i] = Cyclotomic::one(conductor);
            vectors.push(v);
        }
        Self::from_vectors(ambient_dim, conductor, vectors)
    }

    pub(crate) fn from_echelon(ambient_dim: usize, echelon: Echelon) -> Self {
        Subspace {
            ambient_dim,
            echelon,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.echelon.rank()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    pub fn is_proper_nonzero(&self) -> bool {
        !self.is_zero() && !self.is_full()
    }

    pub fn basis(&self) -> &[Vec<Cyclotomic>] {
        self.echelon.rows()
    }

    pub fn pivots(&self) -> &[usize] {
        self.echelon.pivots()
    }

    pub fn contains(&self, v: &[Cyclotomic]) -> bool {
        self.echelon.contains(v)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis().iter().all(|v| self.contains(v))
    }

    pub(crate) fn echelon(&self) -> &Echelon {
        &self.echelon
    }

    /// Coordinates of an in-space vector with respect to the echelon basis:
    /// the coefficient of row r is the entry at that row's pivot.
    pub fn coordinates(&self, v: &[Cyclotomic]) -> Result<Vec<Cyclotomic>> {
        let coords: Vec<Cyclotomic> = self
            .echelon
            .pivots()
            .iter()
            .map(|&p| v[p].clone())
            .collect();
        // Residual must vanish for membership.
        let mut w = v.to_vec();
        self.echelon.reduce(&mut w);
        if w.iter().any(|c| !c.is_zero()) {
            return Err(Error::NotInvariant);
        }
        Ok(coords)
    }
}

/// Canonical nullspace basis of a linear system (rows are equations over
/// `ncols` unknowns), one vector per free column.
pub fn nullspace(
    rows: impl IntoIterator<Item = Vec<Cyclotomic>>,
    ncols: usize,
    conductor: usize,
) -> Vec<Vec<Cyclotomic>> {
    let mut ech = Echelon::new(ncols, conductor);
    for row in rows {
        ech.insert(row);
    }
    let pivot_set: Vec<usize> = ech.pivots().to_vec();
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![Cyclotomic::zero(conductor); ncols];
        v[free] = Cyclotomic::one(conductor);
        for (row, &p) in ech.rows().iter().zip(ech.pivots()) {
            if !row[free].is_zero() {
                v[p] = -&row[free];
            }
        }
        basis.push(v);
    }
    basis
}

/// Exact solution of A x = b given as augmented rows [a | b]; returns the
/// particular solution with all free variables zero, or None if infeasible.
pub fn solve_affine(
    augmented_rows: impl IntoIterator<Item = Vec<Cyclotomic>>,
    ncols: usize,
    conductor: usize,
) -> Option<Vec<Cyclotomic>> {
    let mut ech = Echelon::new(ncols + 1, conductor);
    for row in augmented_rows {
        debug_assert_eq!(row.len(), ncols + 1);
        ech.insert(row);
    }
    // A pivot in the last column is the marker of inconsistency.
    if ech.pivots().contains(&ncols) {
        return None;
    }
    let mut x = vec![Cyclotomic::zero(conductor); ncols];
    for (row, &p) in ech.rows().iter().zip(ech.pivots()) {
        // With free variables at zero, x[p] = rhs of this row.
        x[p] = row[ncols].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::QContext;

    fn ctx() -> QContext {
        QContext::new(3).unwrap()
    }

    fn scaled(v: &[Cyclotomic]) -> Vec<Cyclotomic> {
        v.iter().map(|c| c.scale(&crate::scalar::rat(5))).collect()
    }

    #[test]
    fn echelon_is_canonical() {
        let ctx = ctx();
        let l = ctx.conductor();
        // Same plane presented by two different spanning sets.
        let v1 = vec![ctx.one(), ctx.q().clone(), ctx.zero()];
        let v2 = vec![ctx.zero(), ctx.one(), ctx.integer(2)];
        let sum = vec![ctx.one(), &ctx.q().clone() + &ctx.one(), ctx.integer(2)];
        let a = Subspace::from_vectors(3, l, [v1.clone(), v2.clone()]);
        let b = Subspace::from_vectors(3, l, [sum, scaled(&v2)]);
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
        assert!(a.contains(&v1));
    }

    #[test]
    fn nullspace_of_simple_system() {
        let ctx = ctx();
        let l = ctx.conductor();
        // x0 + x1 = 0 over 3 unknowns: nullity 2.
        let row = vec![ctx.one(), ctx.one(), ctx.zero()];
        let ns = nullspace([row], 3, l);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!((&v[0] + &v[1]).is_zero());
        }
    }

    #[test]
    fn affine_feasible_and_infeasible() {
        let ctx = ctx();
        let l = ctx.conductor();
        // x0 + x1 = 1 is feasible; adding x0 + x1 = 2 is not.
        let row1 = vec![ctx.one(), ctx.one(), ctx.one()];
        let sol = solve_affine([row1.clone()], 2, l).unwrap();
        assert!((&sol[0] + &sol[1]).is_one());
        let row2 = vec![ctx.one(), ctx.one(), ctx.integer(2)];
        assert!(solve_affine([row1, row2], 2, l).is_none());
    }

    #[test]
    fn coordinates_read_off_pivots() {
        let ctx = ctx();
        let l = ctx.conductor();
        let v1 = vec![ctx.one(), ctx.zero(), ctx.integer(3)];
        let v2 = vec![ctx.zero(), ctx.one(), ctx.q().clone()];
        let s = Subspace::from_vectors(3, l, [v1.clone(), v2.clone()]);
        let mut combo = vec![ctx.zero(); 3];
        for (i, (a, b)) in v1.iter().zip(&v2).enumerate() {
            combo[i] = &a.scale(&crate::scalar::rat(2)) + b;
        }
        let coords = s.coordinates(&combo).unwrap();
        assert_eq!(coords[0], ctx.integer(2));
        assert_eq!(coords[1], ctx.one());
        // A vector outside the plane has no coordinates.
        let outside = vec![ctx.zero(), ctx.zero(), ctx.one()];
        assert!(s.coordinates(&outside).is_err());
    }
}
