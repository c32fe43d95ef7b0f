//! Coefficient families of the weight-reduction formulas, built from their
//! recurrences, together with the closed forms they are expected to match.
//!
//! Naming: for an edge of weight 4 becoming 3, `b_n` (weight 3) and `b̃_n`
//! (weight 4) belong to a `B_n` simplex whose end edge is the one changing,
//! `f_4`/`f̃_4` to the middle edge of `F_4`. For an edge of weight 3 becoming
//! 2, `a_{n,t}`/`ã_{n,t}` belong to the `t`-th edge of an `A_n` path,
//! `d'_n` to a forked edge of `D_n`, `d_{n,t}` to the `t`-th edge from the
//! branch point, and the sporadic `e` values to `E_6`, `E_7`, `E_8`. In each
//! pair the plain letter is the value after the change and the tilde letter
//! the value before it.

use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::engine;
use super::ReductionError;
use crate::coxeter::{CoxeterType, EdgeKind};
use crate::exact::{bernoulli, factorial, inv_factorial, pow2, rat, sign, Rational};

pub const DEFAULT_MAX_N: u32 = 12;

/// `1 / k`
fn inv(k: &BigInt) -> Rational {
    Rational::new(BigInt::one(), k.clone())
}

fn r(p: i64, q: i64) -> Rational {
    rat(p, q)
}

/// Position of a weight-3 edge in an `E_n` diagram: the vertical edge, or
/// the `t`-th horizontal edge counted from the end of the length-two arm.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sporadic {
    Vertical(u32),
    Horizontal(u32, u32),
}

impl Sporadic {
    pub fn rank(self) -> u32 {
        match self {
            Sporadic::Vertical(n) | Sporadic::Horizontal(n, _) => n,
        }
    }

    pub fn is_valid(self) -> bool {
        match self {
            Sporadic::Vertical(n) => (6..=8).contains(&n),
            Sporadic::Horizontal(n, t) => (6..=8).contains(&n) && (1..=n - 2).contains(&t),
        }
    }

    /// All eighteen positions, vertical first within each rank.
    pub fn all() -> Vec<Sporadic> {
        let mut out = Vec::new();
        for n in 6..=8 {
            out.push(Sporadic::Vertical(n));
            out.extend((1..=n - 2).map(|t| Sporadic::Horizontal(n, t)));
        }
        out
    }

    pub fn coxeter_type(self) -> CoxeterType {
        match self.rank() {
            6 => CoxeterType::E6,
            7 => CoxeterType::E7,
            _ => CoxeterType::E8,
        }
    }

    /// The edge in the numbering of [`CoxeterType::diagram`].
    pub fn template_edge(self) -> (usize, usize) {
        match self {
            Sporadic::Vertical(n) => (2, n as usize - 1),
            Sporadic::Horizontal(_, t) => (t as usize - 1, t as usize),
        }
    }

    pub fn from_edge_kind(kind: EdgeKind) -> Option<Sporadic> {
        match kind {
            EdgeKind::EnPrime { n } => Some(Sporadic::Vertical(n)),
            EdgeKind::EnT { n, t } => Some(Sporadic::Horizontal(n, t)),
            _ => None,
        }
    }

    /// Representative under the left-right flip of `E_6`.
    fn canonical(self) -> Sporadic {
        match self {
            Sporadic::Horizontal(6, t) if t > 2 => Sporadic::Horizontal(6, 5 - t),
            s => s,
        }
    }
}

impl fmt::Display for Sporadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sporadic::Vertical(n) => write!(f, "E{n}'"),
            Sporadic::Horizontal(n, t) => write!(f, "E{n}^{t}"),
        }
    }
}

/// Memoized recurrence values up to `max_n`.
#[derive(Debug, Clone)]
pub struct CoefficientTable {
    max_n: u32,
    // [after, before] in every pair below
    b: [Vec<Rational>; 2],
    a: [Vec<Vec<Rational>>; 2],
    d_prime: [Vec<Rational>; 2],
    d: [Vec<Vec<Rational>>; 2],
    f4: [Rational; 2],
    e6: [Vec<(Sporadic, Rational)>; 2],
    sporadic_diffs: Vec<(Sporadic, Rational)>,
}

fn b_family(max_n: u32, tail: impl Fn(u32) -> Rational) -> Vec<Rational> {
    let mut b = vec![Rational::zero(); max_n as usize + 1];
    for n in 2..=max_n {
        let mut acc = tail(n);
        for j in 2..n {
            acc += sign((n - j + 1) as i64) * &b[j as usize] * inv_factorial(n - j + 1);
        }
        b[n as usize] = acc;
    }
    b
}

fn a_family(max_n: u32, tail: impl Fn(u32, u32) -> Rational) -> Vec<Vec<Rational>> {
    let mut a = vec![Vec::new(); max_n as usize + 1];
    for n in 2..=max_n {
        let mut row = vec![Rational::zero(); n as usize];
        for t in 1..n {
            let mut acc = tail(n, t);
            for i in 0..t {
                for j in 0..n - t {
                    if i + j == 0 {
                        continue;
                    }
                    let prev = &a[(n - i - j) as usize][(t - i) as usize];
                    acc += sign((i + j + 1) as i64) * prev * inv_factorial(i + 1) * inv_factorial(j + 1);
                }
            }
            row[t as usize] = acc;
        }
        a[n as usize] = row;
    }
    a
}

fn d_prime_family(max_n: u32, a: &[Vec<Rational>], tail: impl Fn(u32) -> Rational) -> Vec<Rational> {
    let mut d = vec![Rational::zero(); max_n as usize + 1];
    let half = r(1, 2);
    for n in 4..=max_n {
        let mut acc = tail(n);
        for i in 1..=n - 4 {
            acc += sign((i + 1) as i64) * &d[(n - i) as usize] * inv_factorial(i + 1);
        }
        // both forked edges kept, tail cut down to nothing
        acc += sign((n - 2) as i64) * &a[3][1] * inv_factorial(n - 2);
        // the other forked edge dropped
        for i in 0..=n - 3 {
            acc += sign(i as i64) * &a[(n - i - 1) as usize][1] * inv_factorial(i + 1) * &half;
        }
        d[n as usize] = acc;
    }
    d
}

fn d_family(max_n: u32, a: &[Vec<Rational>], tail: impl Fn(u32, u32) -> Rational) -> Vec<Vec<Rational>> {
    let mut d: Vec<Vec<Rational>> = vec![Vec::new(); max_n as usize + 1];
    for n in 4..=max_n {
        d[n as usize] = vec![Rational::zero(); n as usize - 1];
    }
    let a_at = |n: u32, t: u32| &a[n as usize][t as usize];
    for n in 4..=max_n {
        for t in 2..=n - 2 {
            let mut acc = tail(n, t);
            let cuts = n - t - 2;
            for i in 1..=cuts {
                acc += sign((i + 1) as i64) * &d[(n - i) as usize][t as usize] * inv_factorial(i + 1);
            }
            for i in 0..=cuts {
                let w = inv_factorial(i + 1);
                // one forked edge kept (two ways)
                acc += sign(i as i64) * a_at(n - i - 1, t) * &w;
                // both forked edges dropped, branch vertex kept
                acc += sign((i + 1) as i64) * a_at(n - i - 2, t - 1) * &w * r(1, 4);
                // branch vertex and j further vertices dropped: a D_{j+3}
                // (A_3 when j = 0) falls off
                for j in 0..=t.saturating_sub(3) {
                    if t < 3 {
                        break;
                    }
                    let dropped = inv(&(pow2(j + 2) * factorial(j + 3)));
                    acc += sign((i + j) as i64) * a_at(n - i - j - 3, t - j - 2) * &dropped * &w;
                }
            }
            d[n as usize][t as usize] = acc;
        }
    }
    d
}

impl CoefficientTable {
    /// Builds every family for `n <= max_n`; needs `max_n >= 6` so the
    /// sporadic combinations have all their ingredients.
    pub fn new(max_n: u32) -> Self {
        assert!(max_n >= 6, "coefficient tables need max_n >= 6");
        let b = [
            b_family(max_n, |n| sign(n as i64) * inv_factorial(n + 1)),
            b_family(max_n, |n| sign(n as i64) * inv(&(pow2(n) * factorial(n)))),
        ];
        let a = [
            a_family(max_n, |n, t| sign(n as i64) * inv_factorial(t + 1) * inv_factorial(n - t + 1)),
            a_family(max_n, |n, _| sign(n as i64) * inv_factorial(n + 1)),
        ];
        let d_type_tail = |n: u32| sign(n as i64) * inv(&(pow2(n - 1) * factorial(n)));
        let d_prime = [
            d_prime_family(max_n, &a[0], |n| sign(n as i64) * inv_factorial(n) * r(1, 2)),
            d_prime_family(max_n, &a[1], d_type_tail),
        ];
        let d = [
            d_family(max_n, &a[0], |n, t| {
                if t == 2 {
                    sign(n as i64) * inv_factorial(n - 2) * r(1, 24)
                } else {
                    sign(n as i64) * inv(&(pow2(t) * factorial(t + 1) * factorial(n - t)))
                }
            }),
            d_family(max_n, &a[1], |n, _| d_type_tail(n)),
        ];
        let f4 = [
            -&b[0][2] * r(1, 4) + &b[0][3] + r(1, 120),
            -&b[1][2] * r(1, 4) + &b[1][3] + r(1, 1152),
        ];
        let mut table = CoefficientTable {
            max_n,
            b,
            a,
            d_prime,
            d,
            f4,
            e6: [Vec::new(), Vec::new()],
            sporadic_diffs: Vec::new(),
        };
        table.e6 = [table.e6_displayed(0), table.e6_displayed(1)];
        table.sporadic_diffs = table.displayed_sporadic_diffs();
        table
    }

    /// The process-wide table with `max_n = 12`.
    pub fn shared() -> &'static CoefficientTable {
        static TABLE: OnceLock<CoefficientTable> = OnceLock::new();
        TABLE.get_or_init(|| CoefficientTable::new(DEFAULT_MAX_N))
    }

    pub fn max_n(&self) -> u32 {
        self.max_n
    }

    /// `b_n` for `w = 3`, `b̃_n` for `w = 4`.
    pub fn coeff_b(&self, n: u32, w: u32) -> Option<Rational> {
        let side = match w {
            3 => 0,
            4 => 1,
            _ => return None,
        };
        (2..=self.max_n).contains(&n).then(|| self.b[side][n as usize].clone())
    }

    pub fn coeff_f4(&self, w: u32) -> Option<Rational> {
        match w {
            3 => Some(self.f4[0].clone()),
            4 => Some(self.f4[1].clone()),
            _ => None,
        }
    }

    fn low_side(w: u32) -> Option<usize> {
        match w {
            2 => Some(0),
            3 => Some(1),
            _ => None,
        }
    }

    /// `a_{n,t}` for `w = 2`, `ã_{n,t}` for `w = 3`.
    pub fn coeff_a(&self, n: u32, t: u32, w: u32) -> Option<Rational> {
        let side = Self::low_side(w)?;
        ((2..=self.max_n).contains(&n) && (1..n).contains(&t)).then(|| self.a[side][n as usize][t as usize].clone())
    }

    pub fn coeff_d_prime(&self, n: u32, w: u32) -> Option<Rational> {
        let side = Self::low_side(w)?;
        (4..=self.max_n).contains(&n).then(|| self.d_prime[side][n as usize].clone())
    }

    pub fn coeff_d(&self, n: u32, t: u32, w: u32) -> Option<Rational> {
        let side = Self::low_side(w)?;
        ((4..=self.max_n).contains(&n) && (2..=n - 2).contains(&t)).then(|| self.d[side][n as usize][t as usize].clone())
    }

    /// Per-weight sporadic coefficient. `E_6` values follow the displayed
    /// combinations of `a` and `d` values; `E_7` and `E_8` have no such
    /// display and come from [`engine`].
    pub fn coeff_e_sporadic(&self, kind: Sporadic, w: u32) -> Option<Rational> {
        let side = Self::low_side(w)?;
        if !kind.is_valid() {
            return None;
        }
        if kind.rank() == 6 {
            let k = kind.canonical();
            return self.e6[side].iter().find(|(s, _)| *s == k).map(|(_, v)| v.clone());
        }
        sporadic_from_engine(kind, w).ok()
    }

    /// `(-1)^n (b_n - b̃_n)`
    pub fn beta(&self, n: u32) -> Option<Rational> {
        Some(sign(n as i64) * (self.coeff_b(n, 3)? - self.coeff_b(n, 4)?))
    }

    pub fn f4_diff(&self) -> Rational {
        &self.f4[0] - &self.f4[1]
    }

    /// `(-1)^n (a_{n,t} - ã_{n,t})`
    pub fn alpha(&self, n: u32, t: u32) -> Option<Rational> {
        Some(sign(n as i64) * (self.coeff_a(n, t, 2)? - self.coeff_a(n, t, 3)?))
    }

    pub fn delta_prime(&self, n: u32) -> Option<Rational> {
        Some(sign(n as i64) * (self.coeff_d_prime(n, 2)? - self.coeff_d_prime(n, 3)?))
    }

    pub fn delta(&self, n: u32, t: u32) -> Option<Rational> {
        Some(sign(n as i64) * (self.coeff_d(n, t, 2)? - self.coeff_d(n, t, 3)?))
    }

    /// `e - ẽ` for a sporadic edge position, from the displayed formulas.
    pub fn sporadic_diff(&self, kind: Sporadic) -> Option<Rational> {
        let k = kind.canonical();
        self.sporadic_diffs.iter().find(|(s, _)| *s == k).map(|(_, v)| v.clone())
    }

    fn e6_displayed(&self, side: usize) -> Vec<(Sporadic, Rational)> {
        let a = |n: usize, t: usize| &self.a[side][n][t];
        let d = |n: usize, t: usize| &self.d[side][n][t];
        let dp = |n: usize| &self.d_prime[side][n];
        let tails = if side == 0 {
            [r(1, 2 * 720), r(1, 2 * 16 * 120), r(1, 720)]
        } else {
            [r(1, 51840), r(1, 51840), r(1, 51840)]
        };
        let vertical = -a(2, 1) * r(1, 36) + a(3, 1) * r(2, 12) - a(4, 1) * r(2, 6) - d(4, 2) * r(1, 4)
            + dp(5) * r(1, 2)
            + &tails[0];
        let first = -a(2, 1) * r(1, 120) + a(3, 1) * r(1, 12) - a(4, 1) * r(1, 4) - a(4, 1) * r(1, 6)
            + a(5, 1) * r(1, 2)
            + d(5, 3) * r(1, 2)
            + &tails[1];
        let second = -a(2, 1) * r(1, 24) + a(3, 1) * r(2, 12) + a(3, 1) * r(1, 8) - a(4, 1) * r(1, 6)
            - a(4, 1) * r(2, 4)
            - d(4, 2) * r(1, 4)
            + a(5, 2) * r(1, 2)
            + d(5, 2) * r(1, 2)
            + dp(5) * r(1, 2)
            + &tails[2];
        vec![
            (Sporadic::Vertical(6), vertical),
            (Sporadic::Horizontal(6, 1), first),
            (Sporadic::Horizontal(6, 2), second),
        ]
    }

    fn displayed_sporadic_diffs(&self) -> Vec<(Sporadic, Rational)> {
        let al = |n: u32, t: u32| self.alpha(n, t).expect("within table");
        let dp = |n: u32| self.delta_prime(n).expect("within table");
        let dl = |n: u32, t: u32| self.delta(n, t).expect("within table");
        let e6 = |k: Sporadic| {
            let find = |side: usize| self.e6[side].iter().find(|(s, _)| *s == k).map(|(_, v)| v.clone()).unwrap();
            find(0) - find(1)
        };
        let e6v = e6(Sporadic::Vertical(6));
        let e61 = e6(Sporadic::Horizontal(6, 1));
        let e62 = e6(Sporadic::Horizontal(6, 2));
        let inv_e7 = r(1, 2_903_040);
        let inv_e8 = r(1, 696_729_600);
        let half = r(1, 2);

        let e7v = al(2, 1) * r(1, 6 * 24) + al(4, 1) * r(1, 24) + dp(4) * r(1, 12) + al(4, 1) * r(1, 12)
            + &e6v * &half
            + dp(6) * &half
            - r(1, 2 * 5040)
            + &inv_e7;
        let e71 = al(2, 1) * r(1, 720) + al(4, 1) * r(1, 24) + al(4, 1) * r(1, 12) + al(6, 1) * &half + &e61 * &half
            - r(1, 2 * 32 * 720)
            + &inv_e7;
        let e72 = al(2, 1) * r(1, 96) + al(4, 2) * r(1, 24) + al(4, 2) * r(1, 12) + al(4, 1) * r(1, 8)
            + dl(4, 2) * r(1, 12)
            + al(6, 2) * &half
            + &e62 * &half
            + dp(6) * &half
            - r(1, 6 * 720)
            + &inv_e7;
        let e73 = al(2, 1) * r(1, 72) + al(4, 1) * r(2, 12) + al(4, 2) * r(1, 8) + al(4, 2) * r(1, 12)
            + dl(4, 2) * r(1, 12)
            + al(6, 3) * &half
            + &e62 * &half
            + dl(6, 2) * &half
            - r(1, 24 * 120)
            + &inv_e7;
        let e74 = al(2, 1) * r(1, 240) + al(4, 2) * r(1, 12) + al(4, 1) * r(1, 8) + al(4, 1) * r(1, 12)
            + al(6, 2) * &half
            + &e61 * &half
            + dl(6, 3) * &half
            - r(1, 6 * 16 * 120)
            + &inv_e7;
        let e75 = al(2, 1) * r(1, 16 * 120) + al(4, 1) * r(1, 12) + al(6, 1) * &half + dl(6, 4) * &half
            - r(1, 2 * 128 * 81 * 5)
            + &inv_e7;

        let e8v = -al(2, 1) * r(1, 6 * 120) - al(4, 1) * r(1, 120) - dp(4) * r(1, 48) - al(4, 1) * r(1, 36)
            - &e6v * r(1, 6)
            - dp(6) * r(1, 4)
            - al(6, 1) * r(1, 6)
            + r(1, 2 * 40320)
            - &inv_e8;
        let e81 = -al(2, 1) * r(1, 5040) - al(4, 1) * r(1, 120) - al(4, 1) * r(1, 48) - &e61 * r(1, 6)
            - al(6, 1) * r(1, 4)
            + r(1, 2 * 64 * 5040)
            - &inv_e8;
        let e82 = -al(2, 1) * r(1, 4 * 120) - al(4, 2) * r(1, 120) - al(4, 2) * r(1, 48) - al(4, 1) * r(1, 24)
            - dl(4, 2) * r(1, 48)
            - al(6, 2) * r(1, 4)
            - al(6, 1) * r(1, 4)
            - &e62 * r(1, 6)
            - dp(6) * r(1, 4)
            + r(1, 6 * 5040)
            - &inv_e8;
        let e83 = -al(2, 1) * r(1, 2 * 6 * 24) - al(4, 1) * r(1, 48) - dl(4, 2) * r(1, 48) - al(4, 2) * r(1, 36)
            - al(4, 2) * r(1, 24)
            - al(4, 1) * r(1, 24)
            - al(6, 3) * r(1, 4)
            - &e62 * r(1, 6)
            - dl(6, 2) * r(1, 4)
            - al(6, 2) * r(1, 4)
            - al(6, 2) * r(1, 6)
            + r(1, 120 * 120)
            - &inv_e8;
        let e84 = -al(2, 1) * r(1, 6 * 120) - al(4, 1) * r(1, 120) - al(4, 2) * r(1, 24) - al(4, 1) * r(1, 24)
            - al(4, 1) * r(1, 36)
            - al(6, 3) * r(1, 4)
            - al(6, 3) * r(1, 6)
            - dl(6, 3) * r(1, 4)
            - al(6, 2) * r(1, 4)
            - &e61 * r(1, 6)
            + r(1, 24 * 16 * 120)
            - &inv_e8;
        let e85 = -al(2, 1) * r(1, 2 * 16 * 120) - al(4, 2) * r(1, 120) - al(4, 1) * r(1, 24) - al(6, 2) * r(1, 4)
            - al(6, 2) * r(1, 6)
            - dl(6, 4) * r(1, 4)
            - al(6, 1) * r(1, 4)
            + r(1, 6 * 128 * 81 * 5)
            - &inv_e8;
        let e86 = -al(2, 1) * r(1, 128 * 81 * 5) - al(4, 1) * r(1, 120) - al(6, 1) * r(1, 4) - al(6, 1) * r(1, 6)
            + r(1, 2 * 1024 * 81 * 5 * 7)
            - &inv_e8;

        vec![
            (Sporadic::Vertical(6), e6v),
            (Sporadic::Horizontal(6, 1), e61),
            (Sporadic::Horizontal(6, 2), e62),
            (Sporadic::Vertical(7), e7v),
            (Sporadic::Horizontal(7, 1), e71),
            (Sporadic::Horizontal(7, 2), e72),
            (Sporadic::Horizontal(7, 3), e73),
            (Sporadic::Horizontal(7, 4), e74),
            (Sporadic::Horizontal(7, 5), e75),
            (Sporadic::Vertical(8), e8v),
            (Sporadic::Horizontal(8, 1), e81),
            (Sporadic::Horizontal(8, 2), e82),
            (Sporadic::Horizontal(8, 3), e83),
            (Sporadic::Horizontal(8, 4), e84),
            (Sporadic::Horizontal(8, 5), e85),
            (Sporadic::Horizontal(8, 6), e86),
        ]
    }
}

/// Per-weight sporadic coefficient by inclusion–exclusion on the `E_n`
/// diagram itself.
pub fn sporadic_from_engine(kind: Sporadic, w: u32) -> Result<Rational, ReductionError> {
    let g = kind.coxeter_type().diagram();
    let (p, q) = kind.template_edge();
    engine::coefficient(&g, p, q, w)
}

/// Closed forms the recurrence differences are expected to equal.
pub mod closed_form {
    use super::*;

    fn bn_over_fact(n: u32) -> Rational {
        bernoulli(n) * inv_factorial(n)
    }

    /// `B_n/n! (1 - 2^{1-n})`
    pub fn beta(n: u32) -> Rational {
        bn_over_fact(n) * (Rational::one() - Rational::new(BigInt::from(2), pow2(n)))
    }

    /// `B_n/n!`, for every `t`.
    pub fn alpha(n: u32) -> Rational {
        bn_over_fact(n)
    }

    /// `B_n/n! (4 - 2^{2-n})`, shared by `δ'_n` and every `δ_{n,t}`.
    pub fn delta(n: u32) -> Rational {
        bn_over_fact(n) * (Rational::from_integer(BigInt::from(4)) - Rational::new(BigInt::from(4), pow2(n)))
    }

    pub fn f4_diff() -> Rational {
        rat(-17, 5760)
    }

    /// Common value of the `e - ẽ` differences for rank `n`.
    pub fn sporadic(n: u32) -> Rational {
        match n {
            6 => rat(13, 103_680),
            7 => Rational::zero(),
            8 => rat(-2537, 696_729_600),
            _ => panic!("no sporadic type of rank {n}"),
        }
    }
}

/// The two brackets of the 5 → 4 change for each simplex type through the
/// changing edge: `(coefficient at weight 4, coefficient at weight 5)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiveToFourBrackets {
    pub edge: (Rational, Rational),
    pub h3: (Rational, Rational),
    pub h4: (Rational, Rational),
}

impl FiveToFourBrackets {
    pub fn displayed() -> Self {
        let h3_4 = r(1, 16) - r(1, 48);
        let h3_5 = r(1, 20) - r(1, 120);
        FiveToFourBrackets {
            edge: (r(1, 8), r(1, 10)),
            h4: (r(-1, 48) + &h3_4 * r(1, 2) + r(1, 384), r(-1, 60) + &h3_5 * r(1, 2) + r(1, 14400)),
            h3: (h3_4, h3_5),
        }
    }

    pub fn edge_diff(&self) -> Rational {
        &self.edge.0 - &self.edge.1
    }

    pub fn h3_diff(&self) -> Rational {
        &self.h3.0 - &self.h3.1
    }

    pub fn h4_diff(&self) -> Rational {
        &self.h4.0 - &self.h4.1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::CoxeterType;

    fn table() -> &'static CoefficientTable {
        CoefficientTable::shared()
    }

    #[test]
    fn bases() {
        let t = table();
        assert_eq!(t.coeff_b(2, 3), Some(r(1, 6)));
        assert_eq!(t.coeff_b(2, 4), Some(r(1, 8)));
        assert_eq!(t.beta(2), Some(r(1, 24)));
        assert_eq!(t.coeff_a(2, 1, 2), Some(r(1, 4)));
        assert_eq!(t.coeff_a(2, 1, 3), Some(r(1, 6)));
        assert_eq!(t.alpha(2, 1), Some(r(1, 12)));
        assert_eq!(t.coeff_a(3, 1, 2), Some(r(1, 24)));
        assert_eq!(t.coeff_a(3, 1, 3), Some(r(1, 24)));
        assert_eq!(t.coeff_b(1, 3), None);
        assert_eq!(t.coeff_a(4, 4, 2), None);
        assert_eq!(t.coeff_d(5, 4, 2), None);
        assert_eq!(t.coeff_b(3, 2), None);
    }

    #[test]
    fn f4_values() {
        let t = table();
        assert_eq!(t.f4_diff(), r(-17, 5760));
        assert_eq!(-t.beta(2).unwrap() * r(1, 4) + t.beta(3).unwrap() + r(43, 5760), r(-17, 5760));
    }

    #[test]
    fn closed_forms_hold() {
        let t = table();
        for n in 2..=12 {
            assert_eq!(t.beta(n).unwrap(), closed_form::beta(n), "beta {n}");
            for k in 1..n {
                assert_eq!(t.alpha(n, k).unwrap(), closed_form::alpha(n), "alpha {n},{k}");
            }
        }
        for n in 4..=12 {
            assert_eq!(t.delta_prime(n).unwrap(), closed_form::delta(n), "delta' {n}");
            for k in 2..=n - 2 {
                assert_eq!(t.delta(n, k).unwrap(), closed_form::delta(n), "delta {n},{k}");
            }
        }
        assert_eq!(t.delta_prime(4), Some(r(-1, 192)));
    }

    #[test]
    fn structural_identities() {
        let t = table();
        for n in 2..=10 {
            for k in 1..n {
                for w in [2, 3] {
                    assert_eq!(t.coeff_a(n, k, w), t.coeff_a(n, n - k, w));
                }
            }
        }
        for w in [2, 3] {
            assert_eq!(t.coeff_d_prime(4, w), t.coeff_d(4, 2, w));
        }
    }

    #[test]
    fn recurrences_match_inclusion_exclusion() {
        let t = table();
        for n in 2..=7 {
            let g = CoxeterType::B(n).diagram();
            assert_eq!(engine::coefficient(&g, 0, 1, 3).unwrap(), t.coeff_b(n, 3).unwrap(), "b {n}");
            assert_eq!(engine::coefficient(&g, 0, 1, 4).unwrap(), t.coeff_b(n, 4).unwrap(), "b~ {n}");
        }
        let f4 = CoxeterType::F4.diagram();
        assert_eq!(engine::coefficient(&f4, 1, 2, 3).unwrap(), t.coeff_f4(3).unwrap());
        assert_eq!(engine::coefficient(&f4, 1, 2, 4).unwrap(), t.coeff_f4(4).unwrap());
        for n in 2..=7u32 {
            let g = CoxeterType::A(n).diagram();
            for k in 1..n {
                let (p, q) = (k as usize - 1, k as usize);
                for w in [2, 3] {
                    assert_eq!(engine::coefficient(&g, p, q, w).unwrap(), t.coeff_a(n, k, w).unwrap(), "a {n},{k} w{w}");
                }
            }
        }
        for n in 4..=8u32 {
            let g = CoxeterType::D(n).diagram();
            for w in [2, 3] {
                assert_eq!(engine::coefficient(&g, 0, 2, w).unwrap(), t.coeff_d_prime(n, w).unwrap(), "d' {n} w{w}");
                for k in 2..=n - 2 {
                    let (p, q) = (k as usize, k as usize + 1);
                    assert_eq!(engine::coefficient(&g, p, q, w).unwrap(), t.coeff_d(n, k, w).unwrap(), "d {n},{k} w{w}");
                }
            }
        }
    }

    #[test]
    fn sporadic_differences() {
        let t = table();
        for kind in Sporadic::all() {
            let shown = t.sporadic_diff(kind).unwrap();
            assert_eq!(shown, closed_form::sporadic(kind.rank()), "{kind}");
            let by_engine = sporadic_from_engine(kind, 2).unwrap() - sporadic_from_engine(kind, 3).unwrap();
            assert_eq!(by_engine, shown, "{kind} engine");
        }
        assert_eq!(t.sporadic_diff(Sporadic::Horizontal(6, 3)), t.sporadic_diff(Sporadic::Horizontal(6, 2)));
    }

    #[test]
    fn e6_displays_are_off_by_weight_independent_terms() {
        // vertical: d'_5 should enter with coefficient 1; second edge: the
        // a_{4,*} terms should read -a_{4,2}/4 - a_{4,2}/6 - a_{4,1}/4
        let t = table();
        for w in [2, 3] {
            let off = |k| t.coeff_e_sporadic(k, w).unwrap() - sporadic_from_engine(k, w).unwrap();
            assert_eq!(off(Sporadic::Vertical(6)), -t.coeff_d_prime(5, w).unwrap() * r(1, 2));
            assert_eq!(off(Sporadic::Vertical(6)), r(1, 2880));
            assert_eq!(off(Sporadic::Horizontal(6, 1)), Rational::zero());
            let a_gap = t.coeff_a(4, 2, w).unwrap() - t.coeff_a(4, 1, w).unwrap();
            assert_eq!(off(Sporadic::Horizontal(6, 2)), a_gap * r(5, 12));
            assert_eq!(off(Sporadic::Horizontal(6, 2)), r(5, 1728));
        }
    }

    #[test]
    fn five_to_four_constants() {
        let b = FiveToFourBrackets::displayed();
        assert_eq!(b.edge_diff(), r(1, 40));
        assert_eq!(b.h3_diff(), Rational::zero());
        assert_eq!(b.h4_diff(), r(-47, 28800));
    }

    #[test]
    fn sporadic_metadata() {
        assert_eq!(Sporadic::all().len(), 18);
        assert!(Sporadic::all().into_iter().all(Sporadic::is_valid));
        assert!(!Sporadic::Horizontal(6, 5).is_valid());
        assert_eq!(Sporadic::Vertical(7).to_string(), "E7'");
        assert_eq!(Sporadic::Horizontal(8, 3).to_string(), "E8^3");
    }
}
