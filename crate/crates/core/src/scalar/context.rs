use super::{lcm, Cyclotomic};
use crate::error::{Error, Result};

/// Ambient data for a session: the order m of q and the cyclotomic field
/// Q(zeta_L) with L = lcm(4, 2m), which contains q, q^(1/2) and i.
#[derive(Clone)]
pub struct QContext {
    m: usize,
    conductor: usize,
    q: Cyclotomic,
    q_half: Cyclotomic,
    i_unit: Cyclotomic,
    /// Cached inverse of q - q^{-1} (nonzero since m >= 3).
    qdiff_inv: Cyclotomic,
}

impl QContext {
    /// q in {1, -1} is excluded, so m >= 3.
    pub fn new(m: usize) -> Result<Self> {
        if m < 3 {
            return Err(Error::OrderTooSmall(m));
        }
        let conductor = lcm(4, 2 * m);
        let q = Cyclotomic::root(conductor, (conductor / m) as i64);
        let q_half = Cyclotomic::root(conductor, (conductor / (2 * m)) as i64);
        let i_unit = Cyclotomic::root(conductor, (conductor / 4) as i64);
        debug_assert!(q.pow(m as i64).unwrap().is_one());
        debug_assert!((&(&q_half * &q_half) - &q).is_zero());
        debug_assert_eq!(&i_unit * &i_unit, Cyclotomic::from_integer(conductor, -1));
        let qinv = q.inv().expect("q is a root of unity");
        let qdiff = &q - &qinv;
        let qdiff_inv = qdiff.inv().expect("q - q^{-1} is nonzero for m >= 3");
        Ok(QContext {
            m,
            conductor,
            q,
            q_half,
            i_unit,
            qdiff_inv,
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn conductor(&self) -> usize {
        self.conductor
    }

    pub fn q(&self) -> &Cyclotomic {
        &self.q
    }

    pub fn q_half(&self) -> &Cyclotomic {
        &self.q_half
    }

    pub fn i_unit(&self) -> &Cyclotomic {
        &self.i_unit
    }

    pub fn zero(&self) -> Cyclotomic {
        Cyclotomic::zero(self.conductor)
    }

    pub fn one(&self) -> Cyclotomic {
        Cyclotomic::one(self.conductor)
    }

    pub fn integer(&self, n: i64) -> Cyclotomic {
        Cyclotomic::from_integer(self.conductor, n)
    }

    /// zeta_L^k, with k taken modulo L.
    pub fn root_of_unity(&self, k: i64) -> Cyclotomic {
        Cyclotomic::root(self.conductor, k)
    }

    /// q^k for any integer k.
    pub fn q_power(&self, k: i64) -> Cyclotomic {
        self.root_of_unity(k * (self.conductor / self.m) as i64)
    }

    /// q^(k/2) for any integer k.
    pub fn q_half_power(&self, k: i64) -> Cyclotomic {
        self.root_of_unity(k * (self.conductor / (2 * self.m)) as i64)
    }

    /// The quantum integer (n)_q = (q^n - q^{-n}) / (q - q^{-1}).
    pub fn q_int(&self, n: i64) -> Cyclotomic {
        let num = &self.q_power(n) - &self.q_power(-n);
        &num * &self.qdiff_inv
    }

    /// (mu + k)_q for a weight lambda = q^(mu/2), computed without mu itself:
    /// (lambda^2 q^k - lambda^{-2} q^{-k}) / (q - q^{-1}).
    pub fn weight_q_shift(&self, lambda: &Cyclotomic, k: i64) -> Result<Cyclotomic> {
        if lambda.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let lam2 = lambda * lambda;
        let lam2_inv = lam2.inv()?;
        let num = &(&lam2 * &self.q_power(k)) - &(&lam2_inv * &self.q_power(-k));
        Ok(&num * &self.qdiff_inv)
    }

    /// The four fourth roots of unity 1, -1, i, -i.
    pub fn fourth_roots(&self) -> [Cyclotomic; 4] {
        [
            self.one(),
            self.integer(-1),
            self.i_unit.clone(),
            -&self.i_unit,
        ]
    }

    pub(crate) fn qdiff_inv(&self) -> &Cyclotomic {
        &self.qdiff_inv
    }
}

impl std::fmt::Debug for QContext {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "QContext(m={}, L={})", self.m, self.conductor)
    }
}
