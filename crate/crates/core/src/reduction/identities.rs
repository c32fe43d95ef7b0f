//! Bernoulli-number identities behind the 3 → 2 closed forms, and
//! coefficientwise checks of the generating functions.

use std::borrow::Cow;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::coefficients::CoefficientTable;
use crate::exact::{
    bernoulli_numbers, bernoulli_series, binomial, factorial, inv_factorial, pow2, rat, Rational, TruncatedSeries,
};

fn over(num: Rational, den: BigInt) -> Rational {
    num / Rational::from_integer(den)
}

/// Left and right side of
/// `Σ_{i=1}^{n-2} B_{n-i}/(i!(n-i)!) = 1/(2(n-1)!) - 1/n!`.
pub fn ugly2_sides(n: u32) -> (Rational, Rational) {
    assert!(n >= 2);
    let b = bernoulli_numbers(n);
    let lhs = (1..=n.saturating_sub(2))
        .map(|i| over(b[(n - i) as usize].clone(), factorial(i) * factorial(n - i)))
        .sum();
    let rhs = over(Rational::one(), BigInt::from(2) * factorial(n - 1)) - inv_factorial(n);
    (lhs, rhs)
}

pub fn verify_identity_ugly2(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let (l, r) = ugly2_sides(n);
    l == r
}

/// Left and right side of
/// `Σ_{j=2}^{n-2} B_{n-j}/(2^{j+1}(j+2)!(n-j)!) + B_{n-1}/(24(n-1)!) + B_n/(4 n!)
///  + B_{n+1}/(n+1)! + B_{n+2}/(n+2)! (4 - 2^{-n}) = (n+1)/(2^{n+1}(n+2)!)`.
pub fn ugly1_sides(n: u32) -> (Rational, Rational) {
    assert!(n >= 3);
    let b = bernoulli_numbers(n + 2);
    let bn = |k: u32| b[k as usize].clone();
    let mut lhs: Rational = (2..=n - 2)
        .map(|j| over(bn(n - j), pow2(j + 1) * factorial(j + 2) * factorial(n - j)))
        .sum();
    lhs += over(bn(n - 1), BigInt::from(24) * factorial(n - 1));
    lhs += over(bn(n), BigInt::from(4) * factorial(n));
    lhs += bn(n + 1) * inv_factorial(n + 1);
    lhs += bn(n + 2) * inv_factorial(n + 2) * (Rational::from_integer(4.into()) - Rational::new(1.into(), pow2(n)));
    let rhs = over(Rational::from_integer((n + 1).into()), pow2(n + 1) * factorial(n + 2));
    (lhs, rhs)
}

pub fn verify_identity_ugly1(n: u32) -> bool {
    if n < 3 {
        return false;
    }
    let (l, r) = ugly1_sides(n);
    l == r
}

/// `β_n` for `n <= max_n` from
/// `β_n = -Σ_{2<=j<n} β_j/(n-j+1)! + 1/(n+1)! - 1/(2^n n!)`; entries 0 and 1
/// are zero.
pub fn beta_from_recurrence(max_n: u32) -> Vec<Rational> {
    let mut beta = vec![Rational::zero(); max_n as usize + 1];
    for n in 2..=max_n {
        let mut acc = inv_factorial(n + 1) - over(Rational::one(), pow2(n) * factorial(n));
        for j in 2..n {
            acc -= &beta[j as usize] * inv_factorial(n - j + 1);
        }
        beta[n as usize] = acc;
    }
    beta
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `P_n(y) = Σ_t α_{n,t} y^t` for `2 <= n <= max_n`, as coefficient lists
/// (index = power of `y`), from the polynomial form of the `α` recurrence:
///
/// `P_n(y) = -(1/y) Σ_{s=1}^{n-2} P_{n-s}(y) ((1+y)^{s+2} - y^{s+2} - 1)/(s+2)!
///           + Σ_{t=1}^{n-1} (y^t/((t+1)!(n-t+1)!) - y^t/(n+1)!)`
pub fn alpha_polynomials(max_n: u32) -> Vec<Vec<Rational>> {
    let mut p: Vec<Vec<Rational>> = vec![Vec::new(); max_n as usize + 1];
    for n in 2..=max_n {
        let mut acc = vec![Rational::zero(); n as usize];
        for t in 1..n {
            acc[t as usize] = inv_factorial(t + 1) * inv_factorial(n - t + 1) - inv_factorial(n + 1);
        }
        for s in 1..=n - 2 {
            // ((1+y)^{s+2} - y^{s+2} - 1) / (y (s+2)!)
            let kernel: Vec<Rational> = (1..=s + 1)
                .map(|k| Rational::from_integer(binomial(s + 2, k)) * inv_factorial(s + 2))
                .collect();
            for (k, c) in poly_mul(&p[(n - s) as usize], &kernel).into_iter().enumerate() {
                acc[k] -= c;
            }
        }
        p[n as usize] = acc;
    }
    p
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratingFunctionReport {
    pub series_order: usize,
    pub max_n: u32,
    /// `Σ β_n x^n = 1 - x/(e^{x/2}+1) - x/(e^x-1)`
    pub beta_closed_form: bool,
    /// `𝔅 = -𝔅𝔉 + (e^x-1-x)/x - (e^{x/2}-1)` with `𝔉 = (e^x-1-x)/x`
    pub beta_relation: bool,
    /// `Σ δ'_n x^n = -x²/4 + x - 2x/(e^{x/2}+1)`
    pub delta_closed_form: bool,
    /// `P_n(y) = B_n/n! (y + ... + y^{n-1})`
    pub alpha_polynomials: bool,
}

impl GeneratingFunctionReport {
    pub fn passed(&self) -> bool {
        self.beta_closed_form && self.beta_relation && self.delta_closed_form && self.alpha_polynomials
    }
}

/// `x / (e^{x/2} + 1)`
fn half_fermi(order: usize) -> TruncatedSeries {
    let denom = &TruncatedSeries::exp(&rat(1, 2), order) + &TruncatedSeries::one(order);
    TruncatedSeries::x(order).div(&denom).expect("constant term 2")
}

/// `(e^x - 1 - x) / x`
fn tail_of_exp(order: usize) -> TruncatedSeries {
    let e = TruncatedSeries::exp(&Rational::one(), order + 1);
    let head = &TruncatedSeries::one(order + 1) + &TruncatedSeries::x(order + 1);
    (&e - &head).shift_down(1).expect("low terms cancel")
}

/// Checks the three generating-function identities: the `β` and `δ'`
/// series to `x^series_order`, the `α` polynomials for `n <= max_n`.
pub fn verify_generating_functions(series_order: usize, max_n: u32) -> GeneratingFunctionReport {
    let n = series_order;
    let beta: Vec<Rational> = beta_from_recurrence(n as u32);
    let beta_series = TruncatedSeries::new(beta, n);

    let closed = &(&TruncatedSeries::one(n) - &half_fermi(n)) - &bernoulli_series(n);
    let beta_closed_form = closed == beta_series;

    let f = tail_of_exp(n);
    let half_exp = &TruncatedSeries::exp(&rat(1, 2), n) - &TruncatedSeries::one(n);
    let rhs = &(&(-&(&beta_series * &f)) + &f) - &half_exp;
    let beta_relation = rhs == beta_series;

    let table: Cow<'static, CoefficientTable> = if n as u32 <= CoefficientTable::shared().max_n() {
        Cow::Borrowed(CoefficientTable::shared())
    } else {
        Cow::Owned(CoefficientTable::new(n as u32))
    };
    let delta: Vec<Rational> = (0..=n as u32).map(|k| table.delta_prime(k).unwrap_or_else(Rational::zero)).collect();
    let e_closed = &(&TruncatedSeries::monomial(rat(-1, 4), 2, n) + &TruncatedSeries::x(n))
        - &half_fermi(n).scale(&rat(2, 1));
    let delta_closed_form = e_closed == TruncatedSeries::new(delta, n);

    let b = bernoulli_numbers(max_n.max(2));
    let polys = alpha_polynomials(max_n);
    let alpha_polynomials = (2..=max_n).all(|k| {
        let c = &b[k as usize] * inv_factorial(k);
        let mut target = vec![c; k as usize];
        target[0] = Rational::zero();
        polys[k as usize] == target
    });

    GeneratingFunctionReport {
        series_order,
        max_n,
        beta_closed_form,
        beta_relation,
        delta_closed_form,
        alpha_polynomials,
    }
}
