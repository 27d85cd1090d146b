//! Floating-point symmetric normal forms.
//!
//! The familiar bases carry square-rooted ladder entries, which generally
//! live outside the session field; they are built here over complex doubles
//! only, with the principal square root used consistently for E and F. The
//! construction checks the symmetry the form is supposed to have:
//! J^+ = (J^-)^t entrywise (for the cyclic family the wrap-around corners
//! carry alpha and beta, so the corners participate exactly when
//! alpha = beta), and in the unitary regime (alpha = conj(beta), real weight
//! exponent, nonnegative ladder products) J^+ = (J^-)^dagger.

use num::complex::Complex64;

use crate::error::{Error, Result};
use crate::families::{cyclic_interior, CyclicParams, FamilyParams};
use crate::scalar::QContext;

const TOLERANCE: f64 = 1e-10;

/// Small dense complex matrix.
#[derive(Debug, Clone)]
pub struct CMatrix {
    pub n: usize,
    entries: Vec<Complex64>,
}

impl CMatrix {
    pub fn zero(n: usize) -> Self {
        CMatrix {
            n,
            entries: vec![Complex64::new(0.0, 0.0); n * n],
        }
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        self.entries[i * self.n + j] = v;
    }

    /// max |self - rhs^t|.
    pub fn transpose_deviation(&self, rhs: &CMatrix) -> f64 {
        let mut max = 0.0f64;
        for i in 0..self.n {
            for j in 0..self.n {
                max = max.max((self.get(i, j) - rhs.get(j, i)).norm());
            }
        }
        max
    }

    /// max |self - conj(rhs)^t|.
    pub fn adjoint_deviation(&self, rhs: &CMatrix) -> f64 {
        let mut max = 0.0f64;
        for i in 0..self.n {
            for j in 0..self.n {
                max = max.max((self.get(i, j) - rhs.get(j, i).conj()).norm());
            }
        }
        max
    }
}

/// Square-root normal form over complex doubles.
#[derive(Debug, Clone)]
pub struct SymmetricForm {
    pub dim: usize,
    pub k: CMatrix,
    pub jplus: CMatrix,
    pub jminus: CMatrix,
    /// Max deviation of the checked transpose symmetry.
    pub transpose_deviation: f64,
    /// Max deviation of J^+ = (J^-)^dagger; present only when the unitary
    /// condition holds for the given parameters.
    pub adjoint_deviation: Option<f64>,
}

fn embed(x: &crate::scalar::Cyclotomic) -> Complex64 {
    let (re, im) = x.embed();
    Complex64::new(re, im)
}

struct FloatLadder {
    q: Complex64,
}

impl FloatLadder {
    fn qdiff(&self) -> Complex64 {
        self.q - 1.0 / self.q
    }

    fn q_int(&self, n: i64) -> Complex64 {
        (self.q.powi(n as i32) - self.q.powi(-n as i32)) / self.qdiff()
    }

    /// (mu + k)_q from lambda^2 = q^mu.
    fn weight_shift(&self, lam2: Complex64, k: i64) -> Complex64 {
        (lam2 * self.q.powi(k as i32) - self.q.powi(-k as i32) / lam2) / self.qdiff()
    }
}

/// Square-root form of an exact family: the ladder entries become
/// sqrt(c_p) with the principal branch shared by J^+ and J^-.
/// Supported for the generic, half-m and cyclic families.
pub fn symmetric_form(ctx: &QContext, params: &FamilyParams) -> Result<SymmetricForm> {
    let lad = FloatLadder { q: embed(ctx.q()) };
    match params {
        FamilyParams::Generic { n, omega } => {
            let omega_c = embed(omega);
            let lambda = omega_c * embed(ctx.q_half()).powi(*n as i32 - 1);
            let products: Vec<Complex64> = (1..*n)
                .map(|p| lad.q_int(p as i64) * lad.q_int((*n - p) as i64))
                .collect();
            build_ladder_form(&lad, *n, lambda, &products, omega_c, None)
        }
        FamilyParams::HalfM { lambda } => {
            let n = ctx.m() / 2;
            let lam = embed(lambda);
            let lam2 = lam * lam;
            let products: Vec<Complex64> = (1..n)
                .map(|p| lad.q_int(p as i64) * lad.weight_shift(lam2, 1 - p as i64))
                .collect();
            build_ladder_form(&lad, n, lam, &products, Complex64::new(1.0, 0.0), None)
        }
        FamilyParams::Cyclic { lambda, a, b } => {
            let cyc = CyclicParams {
                lambda: lambda.clone(),
                a: a.clone(),
                b: b.clone(),
            };
            let interior = cyclic_interior(ctx, &cyc)?;
            let products: Vec<Complex64> = interior.iter().map(embed).collect();
            // alpha = a / sqrt(P), beta = b sqrt(P) with P the interior
            // product; a b = alpha beta and the boundary ratio matches the
            // triangular one.
            let prod: Complex64 = products.iter().product();
            if prod.norm() < 1e-14 {
                return Err(Error::DegenerateParameter { p: 0 });
            }
            let sqrt_prod = prod.sqrt();
            let alpha = embed(a) / sqrt_prod;
            let beta = embed(b) * sqrt_prod;
            build_ladder_form(
                &lad,
                ctx.m(),
                embed(lambda),
                &products,
                Complex64::new(1.0, 0.0),
                Some((alpha, beta)),
            )
        }
        _ => Err(Error::UnsupportedFamily),
    }
}

/// Cyclic square-root form directly from complex parameters (mu, alpha,
/// beta); this is the entry point for weights that are not field elements.
pub fn cyclic_symmetric_form(
    m: usize,
    mu: Complex64,
    alpha: Complex64,
    beta: Complex64,
) -> Result<SymmetricForm> {
    if m < 3 {
        return Err(Error::OrderTooSmall(m));
    }
    let theta = 2.0 * std::f64::consts::PI / (m as f64);
    let q = Complex64::new(theta.cos(), theta.sin());
    let lad = FloatLadder { q };
    let qpow = |z: Complex64| (z * Complex64::new(0.0, theta)).exp();
    let lam2 = qpow(mu);
    let lambda = qpow(mu / 2.0);
    let ab = alpha * beta;
    let products: Vec<Complex64> = (1..m)
        .map(|p| lad.q_int(p as i64) * lad.weight_shift(lam2, 1 - p as i64) + ab)
        .collect();
    let mut form = build_ladder_form(
        &lad,
        m,
        lambda,
        &products,
        Complex64::new(1.0, 0.0),
        Some((alpha, beta)),
    )?;
    // The unitary regime: alpha = conj(beta), real mu, nonnegative ladder
    // products. There J^+ = (J^-)^dagger within tolerance.
    if mu.im.abs() < 1e-9
        && (alpha - beta.conj()).norm() < 1e-9
        && products.iter().all(|c| c.re > -1e-12 && c.im.abs() < 1e-9)
    {
        let dev = form.jplus.adjoint_deviation(&form.jminus);
        if dev > TOLERANCE {
            return Err(Error::ToleranceExceeded { deviation: dev });
        }
        form.adjoint_deviation = Some(dev);
    }
    Ok(form)
}

/// Assemble K, J^+, J^- from the per-step products c_p; entries are
/// omega * sqrt(c_p) with the principal branch, J^- built independently
/// from the same formulas shifted by one step, and the transpose symmetry
/// checked entrywise. `corners` carries (alpha, beta) for wrap-around
/// families; the corner entries join the transpose check exactly when
/// alpha = beta, which is when the form is symmetric at all.
fn build_ladder_form(
    _lad: &FloatLadder,
    n: usize,
    lambda: Complex64,
    products: &[Complex64],
    omega: Complex64,
    corners: Option<(Complex64, Complex64)>,
) -> Result<SymmetricForm> {
    assert_eq!(products.len(), n - 1);
    let mut k = CMatrix::zero(n);
    let q = _lad.q;
    for p in 0..n {
        k.set(p, p, lambda * q.powi(-(p as i32)));
    }
    let mut jplus = CMatrix::zero(n);
    let mut jminus = CMatrix::zero(n);
    for p in 1..n {
        // J^+ e_p = omega sqrt(c_p) e_{p-1}; J^- e_{p-1} = omega sqrt(c_p) e_p.
        let r = products[p - 1].sqrt();
        jplus.set(p - 1, p, omega * r);
        jminus.set(p, p - 1, omega * r);
    }
    let mut check_corners = true;
    if let Some((alpha, beta)) = corners {
        jminus.set(0, n - 1, alpha);
        jplus.set(n - 1, 0, beta);
        check_corners = (alpha - beta).norm() < 1e-9;
    }
    let deviation = if check_corners {
        jplus.transpose_deviation(&jminus)
    } else {
        // Exclude the corner entries from the symmetry check.
        let mut max = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                if (i, j) == (n - 1, 0) || (i, j) == (0, n - 1) {
                    continue;
                }
                max = max.max((jplus.get(i, j) - jminus.get(j, i)).norm());
            }
        }
        max
    };
    if deviation > TOLERANCE {
        return Err(Error::ToleranceExceeded { deviation });
    }
    Ok(SymmetricForm {
        dim: n,
        k,
        jplus,
        jminus,
        transpose_deviation: deviation,
        adjoint_deviation: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn ctx(m: usize) -> QContext {
        QContext::new(m).unwrap()
    }

    #[test]
    fn two_dimensional_form_is_exact() {
        // Generic(N = 2, omega = 1): E = F^t = [[0,1],[0,0]] exactly.
        for m in 3..=6 {
            let ctx = ctx(m);
            let params = FamilyParams::Generic {
                n: 2,
                omega: ctx.one(),
            };
            let form = symmetric_form(&ctx, &params).unwrap();
            assert!((form.jplus.get(0, 1) - 1.0).norm() < 1e-12);
            assert!((form.jminus.get(1, 0) - 1.0).norm() < 1e-12);
            assert!(form.transpose_deviation <= 1e-12);
        }
    }

    #[test]
    fn triangular_and_symmetric_are_diagonal_conjugates() {
        // d_p = prod_{k <= p} sqrt(c_k) conjugates the triangular module into
        // the square-root form; the diagonal of E F (its spectrum) matches.
        let ctx = ctx(5);
        let rep = families::generic_irrep(&ctx, 3, ctx.one()).unwrap();
        let form = symmetric_form(&ctx, rep.params()).unwrap();
        let embed_mat = |m: &crate::matrix::Matrix| {
            let n = m.rows();
            let mut out = CMatrix::zero(n);
            for i in 0..n {
                for j in 0..n {
                    out.set(i, j, super::embed(m.get(i, j)));
                }
            }
            out
        };
        let e_tri = embed_mat(rep.e());
        let f_tri = embed_mat(rep.f());
        let n = rep.dim();
        let mut d = vec![Complex64::new(1.0, 0.0); n];
        for p in 1..n {
            d[p] = d[p - 1] * super::embed(rep.e().get(p - 1, p)).sqrt();
        }
        for i in 0..n {
            for j in 0..n {
                let conj_e = d[i] * e_tri.get(i, j) / d[j];
                assert!((conj_e - form.jplus.get(i, j)).norm() < 1e-10);
                let conj_f = d[i] * f_tri.get(i, j) / d[j];
                assert!((conj_f - form.jminus.get(i, j)).norm() < 1e-10);
            }
        }
        // Spectra of E F agree: both are diagonal with entries c_{p+1}.
        for p in 0..n - 1 {
            let tri = e_tri.get(p, p + 1); // c_{p+1} since F is a unit ladder
            let sym = form.jplus.get(p, p + 1) * form.jminus.get(p + 1, p);
            assert!((tri - sym).norm() < 1e-10);
        }
    }

    #[test]
    fn unitary_cyclic_form() {
        // mu = 0.3, alpha = 0.5 + 0.2i, beta = conj(alpha) at m = 3:
        // J^+ = (J^-)^dagger within 1e-10.
        let form = cyclic_symmetric_form(
            3,
            Complex64::new(0.3, 0.0),
            Complex64::new(0.5, 0.2),
            Complex64::new(0.5, -0.2),
        )
        .unwrap();
        let dev = form.adjoint_deviation.expect("unitary case detected");
        assert!(dev <= 1e-10);
    }

    #[test]
    fn non_unitary_cyclic_skips_adjoint() {
        let form = cyclic_symmetric_form(
            3,
            Complex64::new(0.3, 0.0),
            Complex64::new(1.0, 0.0),
            Complex64::new(2.0, 0.0),
        )
        .unwrap();
        assert!(form.adjoint_deviation.is_none());
    }

    #[test]
    fn exact_cyclic_params_form() {
        let ctx = ctx(3);
        let rep = families::cyclic_module(&ctx, ctx.one(), ctx.one(), ctx.one()).unwrap();
        let form = symmetric_form(&ctx, rep.params()).unwrap();
        assert_eq!(form.dim, 3);
        // Interior symmetry always holds.
        assert!(form.transpose_deviation <= 1e-10);
    }

    #[test]
    fn raw_params_are_unsupported() {
        let ctx = ctx(3);
        assert_eq!(
            symmetric_form(&ctx, &FamilyParams::Raw).unwrap_err(),
            Error::UnsupportedFamily
        );
    }
}
