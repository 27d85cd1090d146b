//! Exact arithmetic in the cyclotomic field Q(zeta_L).
//!
//! Elements are stored in the power basis 1, zeta, ..., zeta^(phi(L)-1)
//! reduced modulo the L-th cyclotomic polynomial, so equality is coefficient
//! comparison and every operation is exact. The conductor is fixed per
//! session as L = lcm(4, 2m), which houses q = zeta^(L/m), the square root
//! q^(1/2) = zeta^(L/(2m)), and i = zeta^(L/4) in a single field.

mod context;
mod parse;

pub use context::QContext;
pub use parse::{parse_scalar, rational_from_string, rational_to_string, render_scalar};

use std::collections::HashMap;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational coefficient. `BigRational` keeps gcd-reduced form with a
/// positive denominator, which is exactly the canonical form we need.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat_frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Euler's totient.
pub fn euler_phi(n: usize) -> usize {
    let mut result = n;
    let mut n = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

pub fn gcd(a: usize, b: usize) -> usize {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a
}

pub fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// Monic cyclotomic polynomial Phi_n as integer coefficients, index = degree.
/// Computed by exact division of x^n - 1 by the Phi_d of the proper divisors.
fn cyclotomic_polynomial(n: usize) -> Vec<BigInt> {
    let mut memo: HashMap<usize, Vec<BigInt>> = HashMap::new();
    for d in 1..=n {
        if !n.is_multiple_of(d) {
            continue;
        }
        let mut poly = vec![BigInt::zero(); d + 1];
        poly[0] = -BigInt::one();
        poly[d] = BigInt::one();
        for (e, phi_e) in &memo {
            if d % e == 0 {
                poly = int_poly_div_exact(&poly, phi_e);
            }
        }
        memo.insert(d, poly);
    }
    memo.remove(&n).expect("n divides n")
}

/// Exact division of integer polynomials; the divisor must be monic.
fn int_poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = num.len() - 1;
    let dd = den.len() - 1;
    assert!(den[dd].is_one(), "divisor must be monic");
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); dn - dd + 1];
    for k in (0..=dn - dd).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        quot[k] = c.clone();
        for j in 0..=dd {
            let t = &den[j] * &c;
            rem[k + j] -= t;
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "division was not exact");
    quot
}

/// Shared per-conductor data: the minimal polynomial and the reduction table
/// expressing zeta^t (0 <= t < L) in the power basis.
pub struct CycloField {
    pub conductor: usize,
    pub degree: usize,
    modulus: Vec<BigInt>,
    power_table: Vec<Vec<Rational>>,
}

impl CycloField {
    fn new(conductor: usize) -> Self {
        assert!(conductor >= 1);
        let degree = euler_phi(conductor);
        let modulus = cyclotomic_polynomial(conductor);
        assert_eq!(modulus.len(), degree + 1);
        // row t = zeta^t in the power basis; rows past the degree fold the
        // overflow through x^phi = -(m_0 + ... + m_{phi-1} x^{phi-1}).
        let mut power_table: Vec<Vec<Rational>> = Vec::with_capacity(conductor);
        for t in 0..conductor {
            if t < degree {
                let mut row = vec![Rational::zero(); degree];
                row[t] = Rational::one();
                power_table.push(row);
            } else {
                let prev = &power_table[t - 1];
                let mut row = vec![Rational::zero(); degree];
                row[1..degree].clone_from_slice(&prev[..degree - 1]);
                let overflow = prev[degree - 1].clone();
                if !overflow.is_zero() {
                    for k in 0..degree {
                        let m_k = Rational::from_integer(modulus[k].clone());
                        row[k] -= m_k * overflow.clone();
                    }
                }
                power_table.push(row);
            }
        }
        CycloField {
            conductor,
            degree,
            modulus,
            power_table,
        }
    }

    fn power_row(&self, t: usize) -> &[Rational] {
        &self.power_table[t % self.conductor]
    }
}

fn field_registry() -> &'static Mutex<HashMap<usize, Arc<CycloField>>> {
    static REGISTRY: OnceLock<Mutex<HashMap<usize, Arc<CycloField>>>> = OnceLock::new();
    REGISTRY.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Field data for a conductor, computed once and shared.
pub fn field(conductor: usize) -> Arc<CycloField> {
    let mut registry = field_registry().lock().expect("field registry poisoned");
    registry
        .entry(conductor)
        .or_insert_with(|| Arc::new(CycloField::new(conductor)))
        .clone()
}

/// An element of Q(zeta_L) in canonical power-basis form. Two elements are
/// equal as field elements iff their coefficient sequences are identical.
#[derive(Clone, PartialEq, Eq)]
pub struct Cyclotomic {
    conductor: usize,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    pub fn zero(conductor: usize) -> Self {
        let degree = field(conductor).degree;
        Cyclotomic {
            conductor,
            coeffs: vec![Rational::zero(); degree],
        }
    }

    pub fn one(conductor: usize) -> Self {
        Self::from_rational(conductor, Rational::one())
    }

    pub fn from_rational(conductor: usize, value: Rational) -> Self {
        let mut out = Self::zero(conductor);
        out.coeffs[0] = value;
        out
    }

    pub fn from_integer(conductor: usize, value: i64) -> Self {
        Self::from_rational(conductor, rat(value))
    }

    /// zeta_L^k (k taken modulo L).
    pub fn root(conductor: usize, k: i64) -> Self {
        let f = field(conductor);
        let t = k.rem_euclid(conductor as i64) as usize;
        Cyclotomic {
            conductor,
            coeffs: f.power_row(t).to_vec(),
        }
    }

    /// Canonical form of a raw coefficient sequence indexed by powers of
    /// zeta_L. Exponents at or beyond L wrap around (zeta^L = 1), entries at
    /// or beyond the field degree fold through the minimal polynomial.
    /// Reducing an already-reduced element is the identity.
    pub fn reduce(conductor: usize, raw: &[Rational]) -> Self {
        let f = field(conductor);
        let mut coeffs = vec![Rational::zero(); f.degree];
        for (t, c) in raw.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (k, base) in f.power_row(t % conductor).iter().enumerate() {
                if !base.is_zero() {
                    coeffs[k] += c * base;
                }
            }
        }
        Cyclotomic { conductor, coeffs }
    }

    pub fn conductor(&self) -> usize {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    pub fn is_rational(&self) -> Option<&Rational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    fn assert_same_field(&self, other: &Self) {
        assert_eq!(
            self.conductor, other.conductor,
            "cyclotomic elements must share a conductor"
        );
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// the minimal polynomial (irreducible, so any nonzero element is a unit).
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let f = field(self.conductor);
        let modulus: Vec<Rational> = f
            .modulus
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect();
        // Invariant: r0 = s0 * self (mod Phi_L), r1 = s1 * self (mod Phi_L).
        let mut r0 = modulus;
        let mut r1 = trim(self.coeffs.clone());
        let mut s0 = vec![];
        let mut s1 = vec![Rational::one()];
        while !r1.is_empty() {
            let (q, r) = rat_poly_divmod(&r0, &r1);
            let s = rat_poly_sub(&s0, &rat_poly_mul(&q, &s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        // r0 is a nonzero constant gcd.
        debug_assert_eq!(r0.len(), 1, "cyclotomic polynomial must be irreducible");
        let scale = r0[0].recip();
        let mut coeffs: Vec<Rational> = s0.into_iter().map(|c| c * &scale).collect();
        coeffs.resize(f.degree, Rational::zero());
        Ok(Cyclotomic {
            conductor: self.conductor,
            coeffs,
        })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn pow(&self, exp: i64) -> Result<Self> {
        if exp == 0 {
            return Ok(Self::one(self.conductor));
        }
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let mut n = exp.unsigned_abs();
        let mut acc = Self::one(self.conductor);
        let mut sq = base;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &sq;
            }
            n >>= 1;
            if n > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Image under the standard complex embedding zeta_L -> exp(2 pi i / L);
    /// used for display and float cross-checks only, never exact decisions.
    pub fn embed(&self) -> (f64, f64) {
        let l = self.conductor as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let x = c.to_f64().expect("rational out of f64 range");
            let theta = 2.0 * std::f64::consts::PI * (j as f64) / l;
            re += x * theta.cos();
            im += x * theta.sin();
        }
        (re, im)
    }
}

fn trim(mut poly: Vec<Rational>) -> Vec<Rational> {
    while poly.last().is_some_and(|c| c.is_zero()) {
        poly.pop();
    }
    poly
}

fn rat_poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    trim(out)
}

fn rat_poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let mut out = vec![Rational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] = x.clone();
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(out)
}

fn rat_poly_divmod(num: &[Rational], den: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    assert!(!den.is_empty());
    let mut rem = num.to_vec();
    if rem.len() < den.len() {
        return (vec![], trim(rem));
    }
    let mut quot = vec![Rational::zero(); rem.len() - den.len() + 1];
    let lead = den.last().unwrap();
    for k in (0..quot.len()).rev() {
        let c = &rem[k + den.len() - 1] / lead;
        if c.is_zero() {
            continue;
        }
        quot[k] = c.clone();
        for (j, d) in den.iter().enumerate() {
            let t = d * &c;
            rem[k + j] -= t;
        }
    }
    (trim(quot), trim(rem))
}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.assert_same_field(rhs);
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.assert_same_field(rhs);
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.assert_same_field(rhs);
        let l = self.conductor;
        let mut raw = vec![Rational::zero(); l];
        for (j, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (k, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    raw[(j + k) % l] += a * b;
                }
            }
        }
        Cyclotomic::reduce(l, &raw)
    }
}

impl std::fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Cyclotomic(L={}; ", self.conductor)?;
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if j == 0 {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*z^{j}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, ")")
    }
}

/// Signed magnitude helper used by the renderer.
pub(crate) fn rational_is_negative(r: &Rational) -> bool {
    r.is_negative()
}
