//! Coefficients of the weight-change formulas computed straight from
//! inclusion–exclusion, without any of the closed recurrences.
//!
//! Fix a connected finite diagram `Γ` and an edge `e = (p, q)` of `Γ`. For
//! every vertex set `σ ∋ p, q` that is connected in `Γ`, the coefficient
//! with `e` carrying weight `w` is
//!
//! `c_w(σ) = (-1)^|σ| / #W^w_σ - Σ_{τ ⊊ σ} c_w(τ) (-1)^|σ∖τ| / #W_{σ∖τ}`
//!
//! where `τ` runs over proper subsets that again contain `p, q` and are
//! connected in `Γ`. Summing `c_w(σ) ω(Lk σ)` over such `σ` reproduces the
//! part of `ω` coming from simplices through `e`.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::Zero;

use super::ReductionError;
use crate::coxeter::{group_order, CoxeterGraph, TypeDecomposition, Weight};
use crate::exact::{from_biguint, sign, Rational};

const MAX_RANK: usize = 24;

fn members(mask: u32) -> Vec<usize> {
    (0..32).filter(|&i| mask & (1 << i) != 0).collect()
}

fn connected(g: &CoxeterGraph, mask: u32) -> bool {
    let verts = members(mask);
    let Some(&start) = verts.first() else {
        return true;
    };
    let mut seen = 1u32 << start;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for w in g.neighbors(v) {
            if mask & (1 << w) != 0 && seen & (1 << w) == 0 {
                seen |= 1 << w;
                stack.push(w);
            }
        }
    }
    seen == mask
}

fn order_of(g: &CoxeterGraph, mask: u32) -> Result<BigUint, ReductionError> {
    let d = TypeDecomposition::of(&g.induced(&members(mask))).ok_or(ReductionError::FinitenessViolation)?;
    Ok(group_order(&d))
}

/// Inclusion–exclusion coefficients of every connected `σ ∋ p, q`, keyed
/// by vertex bitmask, with `e` reweighted to `w`.
pub fn coefficient_map(g: &CoxeterGraph, p: usize, q: usize, w: u32) -> Result<HashMap<u32, Rational>, ReductionError> {
    let n = g.rank();
    assert!(n <= MAX_RANK, "diagram too large for subset enumeration");
    assert!(g.is_edge(p, q), "({p}, {q}) must be a diagram edge");
    let mut reweighted = g.clone();
    reweighted.set(p, q, Weight::Finite(w));

    let base = (1u32 << p) | (1u32 << q);
    let mut masks: Vec<u32> = (0..1u32 << n).filter(|m| m & base == base && connected(g, *m)).collect();
    masks.sort_by_key(|m| m.count_ones());

    let mut rest_orders: HashMap<u32, BigUint> = HashMap::new();
    let mut coef: HashMap<u32, Rational> = HashMap::new();
    for &mask in &masks {
        let size = mask.count_ones() as i64;
        let mut c = sign(size) / from_biguint(&order_of(&reweighted, mask)?);
        for (&sub, cs) in &coef {
            if sub != mask && sub & mask == sub {
                let rest = mask & !sub;
                if let std::collections::hash_map::Entry::Vacant(e) = rest_orders.entry(rest) {
                    e.insert(order_of(g, rest)?);
                }
                c -= cs * sign(rest.count_ones() as i64) / from_biguint(&rest_orders[&rest]);
            }
        }
        coef.insert(mask, c);
    }
    Ok(coef)
}

/// `c_w(Γ)` for the whole diagram, which must be connected.
pub fn coefficient(g: &CoxeterGraph, p: usize, q: usize, w: u32) -> Result<Rational, ReductionError> {
    let full = if g.rank() == 32 { u32::MAX } else { (1u32 << g.rank()) - 1 };
    Ok(coefficient_map(g, p, q, w)?.remove(&full).unwrap_or_else(Rational::zero))
}

/// `c_new(Γ) - c_old(Γ)`, with the old weight read off `g`.
pub fn coefficient_change(g: &CoxeterGraph, p: usize, q: usize, new_weight: u32) -> Result<Rational, ReductionError> {
    let old = g.weight(p, q).finite().ok_or(ReductionError::FinitenessViolation)?;
    Ok(coefficient(g, p, q, new_weight)? - coefficient(g, p, q, old)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::CoxeterType;
    use crate::exact::rat;

    #[test]
    fn single_edges() {
        let g = CoxeterGraph::path(&[3]);
        assert_eq!(coefficient(&g, 0, 1, 2).unwrap(), rat(1, 4));
        assert_eq!(coefficient(&g, 0, 1, 3).unwrap(), rat(1, 6));
        let g = CoxeterGraph::path(&[5]);
        assert_eq!(coefficient_change(&g, 0, 1, 4).unwrap(), rat(1, 40));
    }

    #[test]
    fn five_to_four_brackets() {
        let h3 = CoxeterType::H3.diagram();
        assert_eq!(coefficient(&h3, 0, 1, 4).unwrap(), rat(1, 16) - rat(1, 48));
        assert_eq!(coefficient(&h3, 0, 1, 5).unwrap(), rat(1, 20) - rat(1, 120));
        let h4 = CoxeterType::H4.diagram();
        assert_eq!(coefficient_change(&h4, 0, 1, 4).unwrap(), rat(-47, 28800));
    }

    #[test]
    fn path_values() {
        let a3 = CoxeterType::A(3).diagram();
        assert_eq!(coefficient(&a3, 0, 1, 2).unwrap(), rat(1, 24));
        assert_eq!(coefficient(&a3, 0, 1, 3).unwrap(), rat(1, 24));
    }
}
