//! The Charney–Davis quantity
//!
//! `ω(S) = Σ_σ (-1)^(dim σ + 1) / #W_σ`
//!
//! summed over every simplex of a weighted flag complex, the empty one
//! included (it contributes `+1`), together with per-instance checks of the
//! sign prediction `(-1)^n ω(S) >= 0` for homology `(2n-1)`-spheres.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::complex::{build_flag_complex, FlagComplex, WeightedGraph};
use crate::coxeter::Weight;
use crate::exact::{from_biguint, rat, Rational};
use crate::homology::is_ghs;

fn term(dim: isize, order: &num_bigint::BigUint) -> Rational {
    let sign = if (dim + 1) % 2 == 0 { Rational::one() } else { -Rational::one() };
    sign / from_biguint(order)
}

pub fn omega(s: &FlagComplex) -> Rational {
    s.cells().fold(Rational::zero(), |acc, c| acc + term(c.simplex.dim(), &c.order))
}

/// Signed partial sums `(-1)^(d+1) Σ_{dim σ = d} 1/#W_σ` for `d = -1 ..= dim S`.
pub fn omega_by_dimension(s: &FlagComplex) -> Vec<Rational> {
    (-1..=s.dim())
        .map(|d| {
            let inv: Rational = s.cells_of_dim(d).iter().map(|c| Rational::one() / from_biguint(&c.order)).sum();
            if (d + 1) % 2 == 0 {
                inv
            } else {
                -inv
            }
        })
        .collect()
}

/// `Σ_σ (-1/2)^(dim σ + 1)`, computed from the f-vector alone. `None` unless
/// every edge of the complex has weight 2.
pub fn omega_right_angled(s: &FlagComplex) -> Option<Rational> {
    if !s.graph().is_right_angled() {
        return None;
    }
    let minus_half = rat(-1, 2);
    let mut power = Rational::one();
    let mut total = Rational::zero();
    for count in s.f_vector() {
        total += &power * Rational::from_integer(count.into());
        power *= &minus_half;
    }
    Some(total)
}

/// Sign that `ω` is predicted to have for a homology `(2n-1)`-sphere.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PredictedSign {
    /// `n` odd
    NonPositive,
    /// `n` even
    NonNegative,
}

impl PredictedSign {
    pub fn for_half_dimension(n: isize) -> Self {
        if n.rem_euclid(2) == 1 {
            PredictedSign::NonPositive
        } else {
            PredictedSign::NonNegative
        }
    }

    pub fn admits(self, value: &Rational) -> bool {
        match self {
            PredictedSign::NonPositive => !value.is_positive(),
            PredictedSign::NonNegative => !value.is_negative(),
        }
    }
}

impl fmt::Display for PredictedSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PredictedSign::NonPositive => "<= 0",
            PredictedSign::NonNegative => ">= 0",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureReport {
    pub dimension: isize,
    /// Odd dimension and a generalized homology sphere of that dimension.
    pub is_odd_sphere: bool,
    pub all_finite: bool,
    /// `None` exactly when some clique spans an infinite Coxeter group.
    pub omega: Option<Rational>,
    /// Present whenever the dimension is odd.
    pub predicted_sign: Option<PredictedSign>,
    /// `None` when the hypotheses fail.
    pub satisfied: Option<bool>,
}

impl fmt::Display for ConjectureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "dimension: {}", self.dimension)?;
        writeln!(f, "odd homology sphere: {}", self.is_odd_sphere)?;
        writeln!(f, "all cliques spherical: {}", self.all_finite)?;
        match &self.omega {
            Some(w) => writeln!(f, "omega: {w}")?,
            None => writeln!(f, "omega: undefined")?,
        }
        if let Some(sign) = self.predicted_sign {
            writeln!(f, "predicted sign: omega {sign}")?;
        }
        let verdict = match self.satisfied {
            Some(true) => "satisfied",
            Some(false) => "VIOLATED",
            None => "not applicable",
        };
        write!(f, "instance: {verdict}")
    }
}

fn report(topology: &FlagComplex, omega: Option<Rational>) -> ConjectureReport {
    let dimension = topology.dim();
    let odd = dimension.rem_euclid(2) == 1;
    let is_odd_sphere = odd && is_ghs(topology, dimension).holds;
    let predicted_sign = odd.then(|| PredictedSign::for_half_dimension((dimension + 1) / 2));
    let satisfied = match (&omega, predicted_sign) {
        (Some(w), Some(sign)) if is_odd_sphere => Some(sign.admits(w)),
        _ => None,
    };
    ConjectureReport { dimension, is_odd_sphere, all_finite: omega.is_some(), omega, predicted_sign, satisfied }
}

pub fn check_conjecture_instance(s: &FlagComplex) -> ConjectureReport {
    report(s, Some(omega(s)))
}

/// Same report for a raw weighted graph. If some clique has an infinite
/// Coxeter group the topology is still examined (it depends only on which
/// pairs have finite weight), but `ω` is left undefined.
pub fn check_conjecture_graph(g: &WeightedGraph) -> ConjectureReport {
    match build_flag_complex(g) {
        Ok(s) => check_conjecture_instance(&s),
        Err(_) => {
            let mut flat = g.clone();
            for (i, j, _) in g.edges() {
                flat.set_weight(i, j, Weight::Finite(2)).expect("existing pair");
            }
            let s = build_flag_complex(&flat).expect("right-angled cliques are always finite");
            report(&s, None)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::examples::{complete, cross_polytope_boundary, cycle};

    fn build(g: &WeightedGraph) -> FlagComplex {
        build_flag_complex(g).unwrap()
    }

    #[test]
    fn empty_complex() {
        let s = build(&WeightedGraph::new(Vec::<String>::new()).unwrap());
        assert_eq!(omega(&s), Rational::one());
    }

    #[test]
    fn cycles() {
        for k in 4..=12 {
            let s = build(&cycle(k));
            let expected = Rational::one() - rat(k as i64, 4);
            assert_eq!(omega(&s), expected, "k = {k}");
            assert_eq!(omega_right_angled(&s), Some(expected));
        }
    }

    #[test]
    fn pentagon_with_a_triple_edge() {
        let s = build(&cycle(5).with_edge("v00", "v01", 3));
        assert_eq!(omega(&s), rat(-1, 3));
        assert_eq!(omega_right_angled(&s), None);
    }

    #[test]
    fn sixteen_cell() {
        let s = build(&cross_polytope_boundary(4));
        assert_eq!(omega(&s), Rational::zero());
        assert_eq!(omega_by_dimension(&s).into_iter().sum::<Rational>(), Rational::zero());
    }

    #[test]
    fn grouped_sum_matches_flat_sum() {
        let g = complete(4, 2).with_edge("v00", "v01", 5).with_edge("v02", "v03", 3);
        let s = build(&g);
        assert_eq!(omega_by_dimension(&s).into_iter().sum::<Rational>(), omega(&s));
    }

    #[test]
    fn reports() {
        let r = check_conjecture_instance(&build(&cycle(4)));
        assert!(r.is_odd_sphere);
        assert_eq!(r.predicted_sign, Some(PredictedSign::NonPositive));
        assert_eq!((r.omega, r.satisfied), (Some(Rational::zero()), Some(true)));

        let r = check_conjecture_instance(&build(&cycle(5)));
        assert_eq!((r.omega, r.satisfied), (Some(rat(-1, 4)), Some(true)));

        let r = check_conjecture_instance(&build(&cross_polytope_boundary(3)));
        assert_eq!(r.dimension, 2);
        assert!(!r.is_odd_sphere);
        assert_eq!((r.predicted_sign, r.satisfied), (None, None));

        let r = check_conjecture_instance(&build(&cross_polytope_boundary(4)));
        assert_eq!(r.predicted_sign, Some(PredictedSign::NonNegative));
        assert_eq!(r.satisfied, Some(true));
    }

    #[test]
    fn infinite_clique_graph() {
        // 4-cycle with one triangle closed by weights 3, 3, 3: affine Ã2 clique
        let g = cycle(4)
            .with_edge("v00", "v01", 3)
            .with_edge("v01", "v02", 3)
            .with_edge("v00", "v02", 3);
        let r = check_conjecture_graph(&g);
        assert!(!r.all_finite);
        assert_eq!(r.omega, None);
        assert_eq!(r.satisfied, None);
        assert_eq!(r.dimension, 2);
    }

    #[test]
    fn graph_report_agrees_when_finite() {
        let g = cycle(6);
        assert_eq!(check_conjecture_graph(&g), check_conjecture_instance(&build(&g)));
    }
}
