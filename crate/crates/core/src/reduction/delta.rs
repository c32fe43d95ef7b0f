use std::borrow::Cow;

use num_traits::Zero;

use super::coefficients::{CoefficientTable, FiveToFourBrackets, Sporadic};
use super::{engine, ReductionError};
use crate::charney::omega;
use crate::complex::{link, simplices_containing, Cell, FlagComplex};
use crate::coxeter::{classify_component, edge_context, group_order, CoxeterGraph, EdgeKind, TypeDecomposition, Weight};
use crate::exact::{from_biguint, sign, Rational};

/// Unordered pair of vertex indices of the complex.
pub type Edge = (usize, usize);

struct Through<'a> {
    cell: &'a Cell,
    diagram: CoxeterGraph,
    p: usize,
    q: usize,
}

fn edge_weight(s: &FlagComplex, e: Edge) -> Result<u32, ReductionError> {
    simplices_containing(s, e.0, e.1)?;
    Ok(s.graph().weight(e.0, e.1).finite().expect("incident pairs have finite weight"))
}

fn through_edge(s: &FlagComplex, e: Edge) -> Result<Vec<Through<'_>>, ReductionError> {
    let cells = simplices_containing(s, e.0, e.1)?;
    Ok(cells
        .into_iter()
        .map(|cell| {
            let verts = cell.simplex.vertices();
            let local = |v: usize| verts.iter().position(|&x| x == v).expect("cell contains the edge");
            Through { cell, diagram: s.graph().coxeter_graph(verts), p: local(e.0), q: local(e.1) }
        })
        .collect())
}

fn link_omega(s: &FlagComplex, cell: &Cell) -> Result<Rational, ReductionError> {
    Ok(omega(&link(s, &cell.simplex)?))
}

fn no_weight_above(s: &FlagComplex, bound: u32, lemma: &str) -> Result<(), ReductionError> {
    match s.graph().max_finite_weight() {
        Some(m) if m > bound => Err(ReductionError::PreconditionViolated(format!(
            "{lemma} needs every finite weight to be at most {bound}, found {m}"
        ))),
        _ => Ok(()),
    }
}

fn require_weight(s: &FlagComplex, e: Edge, expected: u32, lemma: &str) -> Result<(), ReductionError> {
    let m = edge_weight(s, e)?;
    if m == expected {
        Ok(())
    } else {
        Err(ReductionError::PreconditionViolated(format!("{lemma} needs an edge of weight {expected}, found {m}")))
    }
}

fn table_covering(rank: usize) -> Cow<'static, CoefficientTable> {
    let shared = CoefficientTable::shared();
    if rank as u32 <= shared.max_n() {
        Cow::Borrowed(shared)
    } else {
        Cow::Owned(CoefficientTable::new(rank as u32))
    }
}

/// `ω(S') - ω(S)` where `S'` has the weight of `e` lowered to `u`, summed
/// over the simplices through `e` only.
pub fn delta_omega_direct(s: &FlagComplex, e: Edge, u: u32) -> Result<Rational, ReductionError> {
    let m = edge_weight(s, e)?;
    if u < 2 {
        return Err(ReductionError::BadWeight(u));
    }
    if u > m {
        return Err(ReductionError::PreconditionViolated(format!("new weight {u} exceeds current weight {m}")));
    }
    let mut total = Rational::zero();
    if u == m {
        return Ok(total);
    }
    for t in through_edge(s, e)? {
        let mut changed = t.diagram.clone();
        changed.set(t.p, t.q, Weight::Finite(u));
        let new_order = group_order(&TypeDecomposition::of(&changed).ok_or(ReductionError::FinitenessViolation)?);
        let size = t.cell.simplex.len() as i64;
        total += sign(size) * (from_biguint(&new_order).recip() - from_biguint(&t.cell.order).recip());
    }
    Ok(total)
}

/// Weight `m >= 6` lowered to any `2 <= u < m`: `(m - u)/(2mu) ω(Lk e)`.
pub fn delta_omega_high(s: &FlagComplex, e: Edge, u: u32) -> Result<Rational, ReductionError> {
    let m = edge_weight(s, e)?;
    if m < 6 {
        return Err(ReductionError::PreconditionViolated(format!("weight {m} is below 6")));
    }
    if !(2..m).contains(&u) {
        return Err(ReductionError::PreconditionViolated(format!("new weight must lie in 2..{m}, got {u}")));
    }
    let edge_cell = s.cell(&crate::complex::Simplex::new(vec![e.0, e.1])).expect("edge is a simplex");
    let factor = Rational::new(((m - u) as i64).into(), ((2 * m * u) as i64).into());
    Ok(factor * link_omega(s, edge_cell)?)
}

/// Weight 5 lowered to 4, with no finite weight above 5 anywhere.
pub fn delta_omega_5_to_4(s: &FlagComplex, e: Edge) -> Result<Rational, ReductionError> {
    require_weight(s, e, 5, "the 5 -> 4 formula")?;
    no_weight_above(s, 5, "the 5 -> 4 formula")?;
    let brackets = FiveToFourBrackets::displayed();
    let mut total = Rational::zero();
    for t in through_edge(s, e)? {
        if !t.diagram.is_connected() {
            continue;
        }
        let kind = edge_context(&t.diagram, t.p, t.q).map_err(|_| ReductionError::FinitenessViolation)?.kind;
        let coefficient = match kind {
            EdgeKind::I2 { m: 5 } => brackets.edge_diff(),
            EdgeKind::H3Edge { t: 1 } => brackets.h3_diff(),
            EdgeKind::H4Edge { t: 1 } => brackets.h4_diff(),
            other => return Err(ReductionError::UnexpectedType(format!("{other:?}"))),
        };
        if !coefficient.is_zero() {
            total += coefficient * link_omega(s, t.cell)?;
        }
    }
    Ok(total)
}

/// Weight 4 lowered to 3, with no finite weight above 4 anywhere.
pub fn delta_omega_4_to_3(s: &FlagComplex, e: Edge) -> Result<Rational, ReductionError> {
    require_weight(s, e, 4, "the 4 -> 3 formula")?;
    no_weight_above(s, 4, "the 4 -> 3 formula")?;
    let through = through_edge(s, e)?;
    let table = table_covering(through.iter().map(|t| t.diagram.rank()).max().unwrap_or(0));
    let mut total = Rational::zero();
    for t in through {
        if !t.diagram.is_connected() {
            continue;
        }
        let kind = edge_context(&t.diagram, t.p, t.q).map_err(|_| ReductionError::FinitenessViolation)?.kind;
        let coefficient = match kind {
            EdgeKind::BnEnd { n } => table.coeff_b(n, 3).unwrap() - table.coeff_b(n, 4).unwrap(),
            EdgeKind::F4Mid => table.f4_diff(),
            other => return Err(ReductionError::UnexpectedType(format!("{other:?}"))),
        };
        if !coefficient.is_zero() {
            total += coefficient * link_omega(s, t.cell)?;
        }
    }
    Ok(total)
}

/// Weight 3 lowered to 2, with no finite weight above 3 anywhere. Paths
/// are counted once under `t <= n - t`, and `D_4` once under its forked
/// position.
pub fn delta_omega_3_to_2(s: &FlagComplex, e: Edge) -> Result<Rational, ReductionError> {
    require_weight(s, e, 3, "the 3 -> 2 formula")?;
    no_weight_above(s, 3, "the 3 -> 2 formula")?;
    let through = through_edge(s, e)?;
    let table = table_covering(through.iter().map(|t| t.diagram.rank()).max().unwrap_or(0));
    let diff = |x: Option<Rational>, y: Option<Rational>| x.unwrap() - y.unwrap();
    let mut total = Rational::zero();
    for t in through {
        if !t.diagram.is_connected() {
            continue;
        }
        let kind = edge_context(&t.diagram, t.p, t.q).map_err(|_| ReductionError::FinitenessViolation)?.kind;
        let coefficient = match kind {
            EdgeKind::AnT { n, t } => diff(table.coeff_a(n, t, 2), table.coeff_a(n, t, 3)),
            EdgeKind::DnPrime { n } => diff(table.coeff_d_prime(n, 2), table.coeff_d_prime(n, 3)),
            EdgeKind::DnT { n, t } => diff(table.coeff_d(n, t, 2), table.coeff_d(n, t, 3)),
            EdgeKind::EnPrime { .. } | EdgeKind::EnT { .. } => {
                table.sporadic_diff(Sporadic::from_edge_kind(kind).unwrap()).unwrap()
            }
            other => return Err(ReductionError::UnexpectedType(format!("{other:?}"))),
        };
        if !coefficient.is_zero() {
            total += coefficient * link_omega(s, t.cell)?;
        }
    }
    Ok(total)
}

/// Any decrease, grouped over connected simplices through `e` with
/// coefficients from [`engine`].
pub fn delta_omega_inclusion_exclusion(s: &FlagComplex, e: Edge, u: u32) -> Result<Rational, ReductionError> {
    let m = edge_weight(s, e)?;
    if u < 2 {
        return Err(ReductionError::BadWeight(u));
    }
    if u > m {
        return Err(ReductionError::PreconditionViolated(format!("new weight {u} exceeds current weight {m}")));
    }
    let mut total = Rational::zero();
    if u == m {
        return Ok(total);
    }
    for t in through_edge(s, e)? {
        if !t.diagram.is_connected() {
            continue;
        }
        // a connected diagram through e is irreducible, so it must classify
        classify_component(&t.diagram).ok_or(ReductionError::FinitenessViolation)?;
        let coefficient = engine::coefficient_change(&t.diagram, t.p, t.q, u)?;
        if !coefficient.is_zero() {
            total += coefficient * link_omega(s, t.cell)?;
        }
    }
    Ok(total)
}
