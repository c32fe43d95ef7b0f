//! Exact rational arithmetic helpers, Bernoulli and Genocchi numbers, and
//! truncated formal power series over the rationals.
//!
//! Everything here is exact: rationals are `num_rational::BigRational`, which
//! keeps values in lowest terms with a positive denominator.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use num_rational::BigRational as Rational;

/// `p / q` as an exact rational. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// `1 / n!`
pub fn inv_factorial(n: u32) -> Rational {
    Rational::new(BigInt::one(), factorial(n))
}

pub fn pow2(n: u32) -> BigInt {
    BigInt::one() << n
}

/// `(-1)^n` as a rational.
pub fn sign(n: i64) -> Rational {
    if n.rem_euclid(2) == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn from_biguint(n: &BigUint) -> Rational {
    Rational::from_integer(BigInt::from(n.clone()))
}

/// Bernoulli numbers `B_0 ..= B_n` with the convention `B_1 = -1/2`, from the
/// recurrence `sum_{k=0}^{m} C(m+1, k) B_k = 0`.
pub fn bernoulli_numbers(n: u32) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::with_capacity(n as usize + 1);
    out.push(Rational::one());
    for m in 1..=n {
        let mut acc = Rational::zero();
        for (k, b) in out.iter().enumerate() {
            acc += Rational::from_integer(binomial(m + 1, k as u32)) * b;
        }
        out.push(-acc / Rational::from_integer(BigInt::from(m + 1)));
    }
    out
}

pub fn bernoulli(n: u32) -> Rational {
    bernoulli_numbers(n).pop().expect("table is never empty")
}

/// `G_n = 2 (1 - 2^n) B_n`.
pub fn genocchi(n: u32) -> Rational {
    let factor = Rational::from_integer(BigInt::from(2) * (BigInt::one() - pow2(n)));
    factor * bernoulli(n)
}

/// `true` when the rational has denominator one.
pub fn is_integer(q: &Rational) -> bool {
    q.denom().is_one()
}

/// Sign of a rational as -1, 0 or 1.
pub fn signum(q: &Rational) -> i32 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    /// The divisor has zero constant coefficient; factor out a power of `x`
    /// from numerator and denominator first.
    #[error("divisor has a zero constant term")]
    ZeroConstantTerm,
    #[error("cannot divide by x^{power}: coefficient of x^{index} is nonzero")]
    NotDivisible { power: usize, index: usize },
}

/// A power series known exactly modulo `x^(order + 1)`, i.e. with
/// coefficients for `x^0 ..= x^order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    /// Builds a series from leading coefficients; missing ones are zero and
    /// extra ones are dropped.
    pub fn new(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        Self::new(vec![c], order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    /// `c * x^k`
    pub fn monomial(c: Rational, k: usize, order: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); order + 1];
        if k <= order {
            coeffs[k] = c;
        }
        Self { coeffs }
    }

    pub fn x(order: usize) -> Self {
        Self::monomial(Rational::one(), 1, order)
    }

    /// `e^(scale * x)`
    pub fn exp(scale: &Rational, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut power = Rational::one();
        for k in 0..=order {
            coeffs.push(&power * inv_factorial(k as u32));
            power *= scale;
        }
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^k`; zero beyond the stored range is *not* implied,
    /// so asking past the order panics.
    pub fn coeff(&self, k: usize) -> &Rational {
        &self.coeffs[k]
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a truncated series");
        Self { coeffs: self.coeffs[..=order].to_vec() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Multiplies by `x^k`; the order is kept, so the top `k` coefficients
    /// fall off.
    pub fn shift_up(&self, k: usize) -> Self {
        let n = self.order();
        let mut coeffs = vec![Rational::zero(); n + 1];
        if k <= n {
            coeffs[k..].clone_from_slice(&self.coeffs[..=n - k]);
        }
        Self { coeffs }
    }

    /// Divides by `x^k`. The low `k` coefficients must vanish; the order
    /// drops by `k` because nothing is known about the new top terms.
    pub fn shift_down(&self, k: usize) -> Result<Self, SeriesError> {
        assert!(k <= self.order(), "shift exceeds truncation order");
        if let Some(index) = (0..k).find(|&i| !self.coeffs[i].is_zero()) {
            return Err(SeriesError::NotDivisible { power: k, index });
        }
        Ok(Self { coeffs: self.coeffs[k..].to_vec() })
    }

    fn common_order(a: &Self, b: &Self) -> usize {
        a.order().min(b.order())
    }

    /// Cauchy product truncated to the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let n = Self::common_order(self, other);
        let mut coeffs = vec![Rational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                coeffs[i + j] += a * b;
            }
        }
        Self { coeffs }
    }

    /// Quotient `self / divisor` by forward substitution.
    pub fn div(&self, divisor: &Self) -> Result<Self, SeriesError> {
        let b0 = &divisor.coeffs[0];
        if b0.is_zero() {
            return Err(SeriesError::ZeroConstantTerm);
        }
        let n = Self::common_order(self, divisor);
        let mut q: Vec<Rational> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = self.coeffs[k].clone();
            for i in 1..=k {
                acc -= &divisor.coeffs[i] * &q[k - i];
            }
            q.push(acc / b0);
        }
        Ok(Self { coeffs: q })
    }

    pub fn inverse(&self) -> Result<Self, SeriesError> {
        Self::one(self.order()).div(self)
    }
}

/// Coefficientwise product, see [`TruncatedSeries::mul`].
pub fn series_mul(a: &TruncatedSeries, b: &TruncatedSeries) -> TruncatedSeries {
    a.mul(b)
}

pub fn series_div(a: &TruncatedSeries, b: &TruncatedSeries) -> Result<TruncatedSeries, SeriesError> {
    a.div(b)
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: Self) -> TruncatedSeries {
        let n = TruncatedSeries::common_order(self, rhs);
        TruncatedSeries { coeffs: (0..=n).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect() }
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: Self) -> TruncatedSeries {
        let n = TruncatedSeries::common_order(self, rhs);
        TruncatedSeries { coeffs: (0..=n).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect() }
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: Self) -> TruncatedSeries {
        TruncatedSeries::mul(self, rhs)
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn neg(self) -> TruncatedSeries {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

/// `x / (e^x - 1)` to the given order, with the `x` cancelled before dividing.
pub fn bernoulli_series(order: usize) -> TruncatedSeries {
    let exp = TruncatedSeries::exp(&Rational::one(), order + 1);
    let shifted = (&exp - &TruncatedSeries::one(order + 1))
        .shift_down(1)
        .expect("e^x - 1 has no constant term");
    shifted.inverse().expect("(e^x - 1)/x has constant term 1")
}
