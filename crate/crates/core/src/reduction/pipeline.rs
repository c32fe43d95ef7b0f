use std::fmt;

use super::delta::{
    delta_omega_3_to_2, delta_omega_4_to_3, delta_omega_5_to_4, delta_omega_direct, delta_omega_high, Edge,
};
use super::ReductionError;
use crate::charney::omega;
use crate::complex::{build_flag_complex, FlagComplex};
use crate::coxeter::Weight;
use crate::exact::Rational;

/// Which grouped formula covers a weight change.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Lemma {
    /// `m >= 6` to any smaller weight
    High,
    FiveToFour,
    FourToThree,
    ThreeToTwo,
}

impl Lemma {
    pub fn for_change(old: u32, new: u32) -> Option<Lemma> {
        match (old, new) {
            (m, u) if m >= 6 && (2..m).contains(&u) => Some(Lemma::High),
            (5, 4) => Some(Lemma::FiveToFour),
            (4, 3) => Some(Lemma::FourToThree),
            (3, 2) => Some(Lemma::ThreeToTwo),
            _ => None,
        }
    }
}

impl fmt::Display for Lemma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Lemma::High => "high",
            Lemma::FiveToFour => "five_to_four",
            Lemma::FourToThree => "four_to_three",
            Lemma::ThreeToTwo => "three_to_two",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionStep {
    /// Vertex ids, lexicographically ordered.
    pub edge: (String, String),
    pub old_weight: u32,
    pub new_weight: u32,
    pub lemma_used: Option<Lemma>,
    pub delta_direct: Rational,
    /// `None` when no grouped formula applies or its hypotheses fail.
    pub delta_formula: Option<Rational>,
    pub agreed: Option<bool>,
    pub omega_before: Rational,
    pub omega_after: Rational,
}

#[derive(Debug, Clone)]
pub struct ReductionTrace {
    pub steps: Vec<ReductionStep>,
    pub final_complex: FlagComplex,
}

impl ReductionTrace {
    pub fn total_delta(&self) -> Rational {
        self.steps.iter().map(|s| s.delta_direct.clone()).sum()
    }
}

fn formula(s: &FlagComplex, e: Edge, lemma: Lemma, u: u32) -> Result<Option<Rational>, ReductionError> {
    let value = match lemma {
        Lemma::High => delta_omega_high(s, e, u),
        Lemma::FiveToFour => delta_omega_5_to_4(s, e),
        Lemma::FourToThree => delta_omega_4_to_3(s, e),
        Lemma::ThreeToTwo => delta_omega_3_to_2(s, e),
    };
    match value {
        Ok(v) => Ok(Some(v)),
        Err(ReductionError::PreconditionViolated(_)) => Ok(None),
        Err(other) => Err(other),
    }
}

/// Lowers the weight of `e` to `u` and records both computations of the
/// change in `ω`.
pub fn reduce_once(s: &FlagComplex, e: Edge, u: u32) -> Result<(FlagComplex, ReductionStep), ReductionError> {
    let delta_direct = delta_omega_direct(s, e, u)?;
    let g = s.graph();
    let old_weight = g.weight(e.0, e.1).finite().expect("checked by the direct computation");
    let lemma_used = Lemma::for_change(old_weight, u);
    let delta_formula = match lemma_used {
        Some(lemma) => formula(s, e, lemma, u)?,
        None => None,
    };
    let agreed = delta_formula.as_ref().map(|f| *f == delta_direct);

    let mut next = g.clone();
    next.set_weight(e.0, e.1, Weight::Finite(u))?;
    let after = build_flag_complex(&next).map_err(|_| ReductionError::FinitenessViolation)?;
    let omega_before = omega(s);
    let omega_after = omega(&after);
    assert_eq!(&omega_after - &omega_before, delta_direct, "direct change disagrees with recomputed omega");

    let (a, b) = (e.0.min(e.1), e.0.max(e.1));
    let step = ReductionStep {
        edge: (g.id(a).to_owned(), g.id(b).to_owned()),
        old_weight,
        new_weight: u,
        lemma_used,
        delta_direct,
        delta_formula,
        agreed,
        omega_before,
        omega_after,
    };
    Ok((after, step))
}

/// Repeatedly lowers the lexicographically least edge of largest finite
/// weight: straight to 2 from 6 or more, otherwise by one. Ends with every
/// finite weight equal to 2.
pub fn reduce_pipeline(s: &FlagComplex) -> Result<ReductionTrace, ReductionError> {
    let mut current = s.clone();
    let mut steps = Vec::new();
    loop {
        let edges = current.graph().edges();
        let Some(top) = edges.iter().map(|&(_, _, m)| m).max().filter(|&m| m > 2) else {
            break;
        };
        let &(i, j, _) = edges.iter().find(|&&(_, _, m)| m == top).expect("maximum is attained");
        let target = if top >= 6 { 2 } else { top - 1 };
        let (next, step) = reduce_once(&current, (i, j), target)?;
        steps.push(step);
        current = next;
    }
    Ok(ReductionTrace { steps, final_complex: current })
}
