//! Coxeter graphs, their decomposition into irreducible components and
//! recognition of the finite irreducible types.
//!
//! A [`CoxeterGraph`] stores `m_ij` for every unordered pair explicitly,
//! including `m_ij = 2`. The *diagram* of the graph has an edge wherever
//! `m_ij >= 3` (or `m_ij = ∞`).

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use thiserror::Error;

/// An edge weight `m` with `2 <= m <= ∞`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Weight {
    Finite(u32),
    Infinite,
}

impl Weight {
    pub fn is_finite(self) -> bool {
        matches!(self, Weight::Finite(_))
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Weight::Finite(m) => Some(m),
            Weight::Infinite => None,
        }
    }

    /// Whether the pair is joined in the Coxeter diagram.
    pub fn is_diagram_edge(self) -> bool {
        match self {
            Weight::Finite(m) => m >= 3,
            Weight::Infinite => true,
        }
    }
}

impl PartialOrd for Weight {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Weight {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Weight::Finite(a), Weight::Finite(b)) => a.cmp(b),
            (Weight::Finite(_), Weight::Infinite) => Ordering::Less,
            (Weight::Infinite, Weight::Finite(_)) => Ordering::Greater,
            (Weight::Infinite, Weight::Infinite) => Ordering::Equal,
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Weight::Finite(m) => write!(f, "{m}"),
            Weight::Infinite => write!(f, "inf"),
        }
    }
}

/// Symmetric matrix of Coxeter exponents on vertices `0..rank`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoxeterGraph {
    rank: usize,
    weights: Vec<Weight>,
}

impl CoxeterGraph {
    /// All pairs commuting (`m = 2`).
    pub fn new(rank: usize) -> Self {
        Self { rank, weights: vec![Weight::Finite(2); rank * rank] }
    }

    pub fn from_edges(rank: usize, edges: &[(usize, usize, u32)]) -> Self {
        let mut g = Self::new(rank);
        for &(i, j, m) in edges {
            g.set(i, j, Weight::Finite(m));
        }
        g
    }

    /// Path `0 - 1 - ... - (labels.len())` with the given consecutive labels.
    pub fn path(labels: &[u32]) -> Self {
        let edges: Vec<_> = labels.iter().enumerate().map(|(i, &m)| (i, i + 1, m)).collect();
        Self::from_edges(labels.len() + 1, &edges)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn weight(&self, i: usize, j: usize) -> Weight {
        self.weights[i * self.rank + j]
    }

    pub fn set(&mut self, i: usize, j: usize, w: Weight) {
        assert!(i != j, "diagonal entries are fixed");
        if let Weight::Finite(m) = w {
            assert!(m >= 2, "Coxeter exponents start at 2");
        }
        self.weights[i * self.rank + j] = w;
        self.weights[j * self.rank + i] = w;
    }

    pub fn is_edge(&self, i: usize, j: usize) -> bool {
        i != j && self.weight(i, j).is_diagram_edge()
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.rank).filter(move |&j| self.is_edge(i, j))
    }

    pub fn degree(&self, i: usize) -> usize {
        self.neighbors(i).count()
    }

    /// Diagram edges `(i, j, m)` with `i < j`.
    pub fn diagram_edges(&self) -> Vec<(usize, usize, Weight)> {
        let mut out = Vec::new();
        for i in 0..self.rank {
            for j in i + 1..self.rank {
                if self.is_edge(i, j) {
                    out.push((i, j, self.weight(i, j)));
                }
            }
        }
        out
    }

    /// The subgraph on `vertices`, renumbered in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Self {
        let mut g = Self::new(vertices.len());
        for (a, &i) in vertices.iter().enumerate() {
            for (b, &j) in vertices.iter().enumerate().skip(a + 1) {
                g.set(a, b, self.weight(i, j));
            }
        }
        g
    }

    pub fn is_connected(&self) -> bool {
        self.rank == 0 || decompose(self).len() == 1
    }

    pub fn is_right_angled(&self) -> bool {
        self.weights.iter().enumerate().all(|(k, w)| {
            k / self.rank == k % self.rank || matches!(w, Weight::Finite(2) | Weight::Infinite)
        })
    }
}

/// Connected components of the diagram, each as a sorted vertex list, ordered
/// by smallest vertex.
pub fn decompose(g: &CoxeterGraph) -> Vec<Vec<usize>> {
    let n = g.rank();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut stack = vec![start];
        let mut comp = Vec::new();
        while let Some(v) = stack.pop() {
            comp.push(v);
            for w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// A finite irreducible Coxeter type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CoxeterType {
    A(u32),
    B(u32),
    D(u32),
    E6,
    E7,
    E8,
    F4,
    H3,
    H4,
    I2(u32),
}

impl CoxeterType {
    /// Whether the parameters fall inside the classification
    /// (`A_n, n >= 1`; `B_n, n >= 2`; `D_n, n >= 4`; `I_2(m), m >= 5`).
    pub fn is_valid(self) -> bool {
        match self {
            CoxeterType::A(n) => n >= 1,
            CoxeterType::B(n) => n >= 2,
            CoxeterType::D(n) => n >= 4,
            CoxeterType::I2(m) => m >= 5,
            _ => true,
        }
    }

    pub fn rank(self) -> usize {
        match self {
            CoxeterType::A(n) | CoxeterType::B(n) | CoxeterType::D(n) => n as usize,
            CoxeterType::E6 => 6,
            CoxeterType::E7 => 7,
            CoxeterType::E8 => 8,
            CoxeterType::F4 | CoxeterType::H4 => 4,
            CoxeterType::H3 => 3,
            CoxeterType::I2(_) => 2,
        }
    }

    pub fn order(self) -> BigUint {
        let fact = |n: u32| (1..=n).fold(BigUint::one(), |acc, k| acc * k);
        let pow2 = |n: u32| BigUint::one() << n;
        match self {
            CoxeterType::A(n) => fact(n + 1),
            CoxeterType::B(n) => pow2(n) * fact(n),
            CoxeterType::D(n) => pow2(n - 1) * fact(n),
            CoxeterType::E6 => BigUint::from(51_840u32),
            CoxeterType::E7 => BigUint::from(2_903_040u32),
            CoxeterType::E8 => BigUint::from(696_729_600u32),
            CoxeterType::F4 => BigUint::from(1_152u32),
            CoxeterType::H3 => BigUint::from(120u32),
            CoxeterType::H4 => BigUint::from(14_400u32),
            CoxeterType::I2(m) => BigUint::from(2 * m),
        }
    }

    /// Reference diagram with a fixed vertex numbering:
    ///
    /// * `A_n`, `B_n`, `F_4`, `H_3`, `H_4`: paths `0 - 1 - ...`; the special
    ///   label sits on edge `(0, 1)` except for `F_4`, where it is `(1, 2)`.
    /// * `D_n`: leaves `0`, `1` hang off vertex `2`, then `2 - 3 - ... - (n-1)`.
    /// * `E_n`: horizontal path `0 - ... - (n-2)`, vertical vertex `n - 1`
    ///   attached to `2`.
    pub fn diagram(self) -> CoxeterGraph {
        match self {
            CoxeterType::A(n) => CoxeterGraph::path(&vec![3; n as usize - 1]),
            CoxeterType::B(n) => {
                let mut labels = vec![3; n as usize - 1];
                labels[0] = 4;
                CoxeterGraph::path(&labels)
            }
            CoxeterType::D(n) => {
                let n = n as usize;
                let mut edges = vec![(0, 2, 3), (1, 2, 3)];
                edges.extend((2..n - 1).map(|i| (i, i + 1, 3)));
                CoxeterGraph::from_edges(n, &edges)
            }
            CoxeterType::E6 | CoxeterType::E7 | CoxeterType::E8 => {
                let n = self.rank();
                let mut edges: Vec<_> = (0..n - 2).map(|i| (i, i + 1, 3)).collect();
                edges.push((2, n - 1, 3));
                CoxeterGraph::from_edges(n, &edges)
            }
            CoxeterType::F4 => CoxeterGraph::path(&[3, 4, 3]),
            CoxeterType::H3 => CoxeterGraph::path(&[5, 3]),
            CoxeterType::H4 => CoxeterGraph::path(&[5, 3, 3]),
            CoxeterType::I2(m) => CoxeterGraph::path(&[m]),
        }
    }

    /// Every finite irreducible type of rank at most `max_rank`, with
    /// `I_2(m)` for `5 <= m <= max_label`.
    pub fn all_up_to(max_rank: u32, max_label: u32) -> Vec<CoxeterType> {
        let mut out = Vec::new();
        for n in 1..=max_rank {
            out.push(CoxeterType::A(n));
        }
        for n in 2..=max_rank {
            out.push(CoxeterType::B(n));
        }
        for n in 4..=max_rank {
            out.push(CoxeterType::D(n));
        }
        for t in [CoxeterType::E6, CoxeterType::E7, CoxeterType::E8, CoxeterType::F4, CoxeterType::H3, CoxeterType::H4] {
            if t.rank() as u32 <= max_rank {
                out.push(t);
            }
        }
        if max_rank >= 2 {
            for m in 5..=max_label {
                out.push(CoxeterType::I2(m));
            }
        }
        out
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxeterType::A(n) => write!(f, "A{n}"),
            CoxeterType::B(n) => write!(f, "B{n}"),
            CoxeterType::D(n) => write!(f, "D{n}"),
            CoxeterType::E6 => f.write_str("E6"),
            CoxeterType::E7 => f.write_str("E7"),
            CoxeterType::E8 => f.write_str("E8"),
            CoxeterType::F4 => f.write_str("F4"),
            CoxeterType::H3 => f.write_str("H3"),
            CoxeterType::H4 => f.write_str("H4"),
            CoxeterType::I2(m) => write!(f, "I2({m})"),
        }
    }
}

/// Label-preserving isomorphism test by backtracking; returns the vertex map
/// `g -> h` when one exists.
pub fn find_isomorphism(g: &CoxeterGraph, h: &CoxeterGraph) -> Option<Vec<usize>> {
    let n = g.rank();
    if n != h.rank() {
        return None;
    }
    let gdeg: Vec<usize> = (0..n).map(|i| g.degree(i)).collect();
    let hdeg: Vec<usize> = (0..n).map(|i| h.degree(i)).collect();
    let mut gs = gdeg.clone();
    let mut hs = hdeg.clone();
    gs.sort_unstable();
    hs.sort_unstable();
    if gs != hs {
        return None;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn extend(
        k: usize,
        g: &CoxeterGraph,
        h: &CoxeterGraph,
        gdeg: &[usize],
        hdeg: &[usize],
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if k == g.rank() {
            return true;
        }
        for cand in 0..h.rank() {
            if used[cand] || gdeg[k] != hdeg[cand] {
                continue;
            }
            if (0..k).any(|prev| g.weight(prev, k) != h.weight(map[prev], cand)) {
                continue;
            }
            map[k] = cand;
            used[cand] = true;
            if extend(k + 1, g, h, gdeg, hdeg, map, used) {
                return true;
            }
            used[cand] = false;
        }
        false
    }
    extend(0, g, h, &gdeg, &hdeg, &mut map, &mut used).then_some(map)
}

/// Lengths of the arms hanging off `branch` in a tree diagram.
fn arm_lengths(g: &CoxeterGraph, branch: usize) -> Vec<usize> {
    let mut arms = Vec::new();
    for start in g.neighbors(branch) {
        let (mut prev, mut cur, mut len) = (branch, start, 1);
        loop {
            let next: Vec<usize> = g.neighbors(cur).filter(|&w| w != prev).collect();
            match next.as_slice() {
                [] => break,
                [w] => {
                    prev = cur;
                    cur = *w;
                    len += 1;
                }
                _ => return Vec::new(),
            }
        }
        arms.push(len);
    }
    arms.sort_unstable();
    arms
}

/// Cheap structural guess: the only type the diagram could possibly be.
fn candidate(g: &CoxeterGraph) -> Option<CoxeterType> {
    let n = g.rank();
    if n == 0 || !g.is_connected() {
        return None;
    }
    if n == 1 {
        return Some(CoxeterType::A(1));
    }
    let edges = g.diagram_edges();
    let mut labels = Vec::with_capacity(edges.len());
    for &(_, _, w) in &edges {
        labels.push(w.finite()?);
    }
    if n == 2 {
        return Some(match labels[0] {
            3 => CoxeterType::A(2),
            4 => CoxeterType::B(2),
            m => CoxeterType::I2(m),
        });
    }
    if edges.len() != n - 1 {
        return None;
    }
    let special: Vec<u32> = labels.iter().copied().filter(|&m| m != 3).collect();
    let degrees: Vec<usize> = (0..n).map(|i| g.degree(i)).collect();
    let branches: Vec<usize> = (0..n).filter(|&i| degrees[i] >= 3).collect();
    let n32 = n as u32;
    match (special.as_slice(), branches.as_slice()) {
        ([], []) => Some(CoxeterType::A(n32)),
        ([4], []) => {
            let end_label = (0..n).any(|i| degrees[i] == 1 && g.neighbors(i).any(|j| g.weight(i, j) == Weight::Finite(4)));
            if end_label {
                Some(CoxeterType::B(n32))
            } else if n == 4 {
                Some(CoxeterType::F4)
            } else {
                None
            }
        }
        ([5], []) if n == 3 => Some(CoxeterType::H3),
        ([5], []) if n == 4 => Some(CoxeterType::H4),
        ([], [b]) if degrees[*b] == 3 => match arm_lengths(g, *b).as_slice() {
            [1, 1, k] => Some(CoxeterType::D(*k as u32 + 3)),
            [1, 2, 2] => Some(CoxeterType::E6),
            [1, 2, 3] => Some(CoxeterType::E7),
            [1, 2, 4] => Some(CoxeterType::E8),
            _ => None,
        },
        _ => None,
    }
}

/// Recognizes a connected diagram as a finite irreducible type. `None` means
/// the group is infinite (or the graph is not connected).
pub fn classify_component(g: &CoxeterGraph) -> Option<CoxeterType> {
    let t = candidate(g)?;
    find_isomorphism(g, &t.diagram()).map(|_| t)
}

/// Multiset of irreducible factors of a finite Coxeter group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct TypeDecomposition {
    factors: Vec<CoxeterType>,
}

impl TypeDecomposition {
    pub fn new(mut factors: Vec<CoxeterType>) -> Self {
        factors.sort();
        Self { factors }
    }

    /// Decomposes and classifies every component; `None` when some component
    /// is of infinite type.
    pub fn of(g: &CoxeterGraph) -> Option<Self> {
        let mut factors = Vec::new();
        for comp in decompose(g) {
            factors.push(classify_component(&g.induced(&comp))?);
        }
        Some(Self::new(factors))
    }

    pub fn factors(&self) -> &[CoxeterType] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.iter().map(|t| t.rank()).sum()
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1
    }
}

impl fmt::Display for TypeDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        // runs of equal factors print as `A1^3`
        let mut counts: BTreeMap<CoxeterType, usize> = BTreeMap::new();
        for t in &self.factors {
            *counts.entry(*t).or_default() += 1;
        }
        let parts: Vec<String> = counts
            .into_iter()
            .map(|(t, c)| if c == 1 { t.to_string() } else { format!("{t}^{c}") })
            .collect();
        f.write_str(&parts.join(" x "))
    }
}

pub fn group_order(d: &TypeDecomposition) -> BigUint {
    d.factors.iter().fold(BigUint::one(), |acc, t| acc * t.order())
}

/// Position of an edge inside an irreducible finite diagram.
///
/// `t` indices are 1-based. For `A_n` the edge between the `t`-th and
/// `(t+1)`-th node of the path; for `D_n` the `t`-th edge from the branched
/// end (`t >= 2`); for `E_n` the `t`-th horizontal edge from the end of the
/// length-two arm; for `B_n`, `H_3`, `H_4` counted from the special label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeKind {
    AnT { n: u32, t: u32 },
    BnEnd { n: u32 },
    BnT { n: u32, t: u32 },
    DnPrime { n: u32 },
    DnT { n: u32, t: u32 },
    EnPrime { n: u32 },
    EnT { n: u32, t: u32 },
    F4Mid,
    F4End,
    H3Edge { t: u32 },
    H4Edge { t: u32 },
    I2 { m: u32 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EdgeContext {
    pub kind: EdgeKind,
    /// Set when a symmetry of the diagram was used to pick the reported
    /// position (`A_n^t` vs `A_n^{n-t}`, the `E_6` flip, `D_4` triality).
    pub canonicalized: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoxeterError {
    #[error("vertices {0} and {1} are not joined in the diagram")]
    NotAnEdge(usize, usize),
    #[error("diagram is not a connected finite-type diagram")]
    NotFiniteIrreducible,
}

/// Locates the diagram edge `(u, v)` inside the connected finite diagram `g`.
pub fn edge_context(g: &CoxeterGraph, u: usize, v: usize) -> Result<EdgeContext, CoxeterError> {
    if u >= g.rank() || v >= g.rank() || !g.is_edge(u, v) {
        return Err(CoxeterError::NotAnEdge(u, v));
    }
    let t = classify_component(g).ok_or(CoxeterError::NotFiniteIrreducible)?;
    let map = find_isomorphism(g, &t.diagram()).expect("classification confirmed an isomorphism");
    let (a, b) = {
        let (x, y) = (map[u], map[v]);
        (x.min(y), x.max(y))
    };
    let plain = |kind| EdgeContext { kind, canonicalized: false };
    let ctx = match t {
        CoxeterType::A(n) => {
            let t = a as u32 + 1;
            let c = t.min(n - t);
            EdgeContext { kind: EdgeKind::AnT { n, t: c }, canonicalized: c != t }
        }
        CoxeterType::B(n) => {
            if a == 0 {
                plain(EdgeKind::BnEnd { n })
            } else {
                plain(EdgeKind::BnT { n, t: a as u32 + 1 })
            }
        }
        CoxeterType::D(n) => {
            if b == 2 || (n == 4 && a == 2) {
                EdgeContext { kind: EdgeKind::DnPrime { n }, canonicalized: n == 4 }
            } else {
                plain(EdgeKind::DnT { n, t: a as u32 })
            }
        }
        CoxeterType::E6 | CoxeterType::E7 | CoxeterType::E8 => {
            let n = t.rank() as u32;
            if b == n as usize - 1 {
                plain(EdgeKind::EnPrime { n })
            } else {
                let t = a as u32 + 1;
                if n == 6 && t > 2 {
                    EdgeContext { kind: EdgeKind::EnT { n, t: 5 - t }, canonicalized: true }
                } else {
                    plain(EdgeKind::EnT { n, t })
                }
            }
        }
        CoxeterType::F4 => plain(if a == 1 { EdgeKind::F4Mid } else { EdgeKind::F4End }),
        CoxeterType::H3 => plain(EdgeKind::H3Edge { t: a as u32 + 1 }),
        CoxeterType::H4 => plain(EdgeKind::H4Edge { t: a as u32 + 1 }),
        CoxeterType::I2(m) => plain(EdgeKind::I2 { m }),
    };
    Ok(ctx)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ty(g: &CoxeterGraph) -> Option<CoxeterType> {
        classify_component(g)
    }

    #[test]
    fn decompose_examples() {
        let path = CoxeterGraph::path(&[3, 3]);
        assert_eq!(decompose(&path), vec![vec![0, 1, 2]]);
        assert_eq!(decompose(&CoxeterGraph::new(3)), vec![vec![0], vec![1], vec![2]]);
        let g = CoxeterGraph::from_edges(3, &[(0, 1, 3)]);
        assert_eq!(decompose(&g), vec![vec![0, 1], vec![2]]);
    }

    #[test]
    fn classify_examples() {
        assert_eq!(ty(&CoxeterGraph::new(1)), Some(CoxeterType::A(1)));
        assert_eq!(ty(&CoxeterGraph::path(&[5])), Some(CoxeterType::I2(5)));
        assert_eq!(ty(&CoxeterGraph::path(&[3, 3, 3])), Some(CoxeterType::A(4)));
        assert_eq!(ty(&CoxeterGraph::path(&[3, 6])), None);
        assert_eq!(ty(&CoxeterGraph::path(&[3, 4, 3])), Some(CoxeterType::F4));
        assert_eq!(ty(&CoxeterGraph::path(&[3, 4])), Some(CoxeterType::B(3)));
        assert_eq!(ty(&CoxeterGraph::path(&[3, 5])), Some(CoxeterType::H3));
        assert_eq!(ty(&CoxeterGraph::path(&[3, 3, 5])), Some(CoxeterType::H4));
    }

    #[test]
    fn infinite_diagrams() {
        // affine A2: triangle of 3s
        assert_eq!(ty(&CoxeterGraph::from_edges(3, &[(0, 1, 3), (1, 2, 3), (0, 2, 3)])), None);
        assert_eq!(ty(&CoxeterGraph::path(&[4, 3, 4])), None);
        assert_eq!(ty(&CoxeterGraph::path(&[3, 5, 3])), None);
        assert_eq!(ty(&CoxeterGraph::path(&[5, 3, 3, 3])), None);
        assert_eq!(ty(&CoxeterGraph::path(&[3, 4, 3, 3])), None); // affine F4
        let mut inf = CoxeterGraph::new(2);
        inf.set(0, 1, Weight::Infinite);
        assert_eq!(ty(&inf), None);
        // star with four arms
        let star = CoxeterGraph::from_edges(5, &[(0, 4, 3), (1, 4, 3), (2, 4, 3), (3, 4, 3)]);
        assert_eq!(ty(&star), None);
        // E arms (1,3,3) is affine E7
        let mut edges: Vec<_> = (0..6).map(|i| (i, i + 1, 3)).collect();
        edges.push((3, 7, 3));
        assert_eq!(ty(&CoxeterGraph::from_edges(8, &edges)), None);
        // disconnected input is not a component
        assert_eq!(ty(&CoxeterGraph::new(2)), None);
    }

    #[test]
    fn templates_round_trip() {
        for t in CoxeterType::all_up_to(9, 12) {
            assert!(t.is_valid());
            assert_eq!(classify_component(&t.diagram()), Some(t), "{t}");
        }
    }

    #[test]
    fn orders() {
        let d = |v: Vec<CoxeterType>| group_order(&TypeDecomposition::new(v));
        assert_eq!(d(vec![CoxeterType::A(3)]), BigUint::from(24u32));
        assert_eq!(d(vec![CoxeterType::H4]), BigUint::from(14400u32));
        assert_eq!(d(vec![CoxeterType::A(1), CoxeterType::A(1)]), BigUint::from(4u32));
        assert_eq!(d(vec![CoxeterType::E8]), BigUint::from(696_729_600u32));
        assert_eq!(d(vec![]), BigUint::from(1u32));
        // Cardinality column as products of prime powers
        assert_eq!(CoxeterType::E6.order(), BigUint::from(2u32.pow(7) * 81 * 5));
        assert_eq!(CoxeterType::E7.order(), BigUint::from(2u32.pow(10) * 81 * 5 * 7));
        assert_eq!(CoxeterType::F4.order(), BigUint::from(2u32.pow(7) * 9));
        assert_eq!(CoxeterType::D(4).order(), BigUint::from(192u32));
        assert_eq!(CoxeterType::B(3).order(), BigUint::from(48u32));
    }

    #[test]
    fn edge_context_a5() {
        let g = CoxeterType::A(5).diagram();
        let c = edge_context(&g, 0, 1).unwrap();
        assert_eq!(c.kind, EdgeKind::AnT { n: 5, t: 1 });
        assert!(!c.canonicalized);
        let c = edge_context(&g, 3, 4).unwrap();
        assert_eq!(c.kind, EdgeKind::AnT { n: 5, t: 1 });
        assert!(c.canonicalized);
        assert_eq!(edge_context(&g, 2, 3).unwrap().kind, EdgeKind::AnT { n: 5, t: 2 });
    }

    #[test]
    fn edge_context_d_and_e() {
        let d4 = CoxeterType::D(4).diagram();
        for (u, v) in [(0, 2), (1, 2), (2, 3)] {
            assert_eq!(edge_context(&d4, u, v).unwrap().kind, EdgeKind::DnPrime { n: 4 });
        }
        let d6 = CoxeterType::D(6).diagram();
        assert_eq!(edge_context(&d6, 1, 2).unwrap().kind, EdgeKind::DnPrime { n: 6 });
        assert_eq!(edge_context(&d6, 2, 3).unwrap().kind, EdgeKind::DnT { n: 6, t: 2 });
        assert_eq!(edge_context(&d6, 4, 5).unwrap().kind, EdgeKind::DnT { n: 6, t: 4 });
        let e7 = CoxeterType::E7.diagram();
        assert_eq!(edge_context(&e7, 2, 6).unwrap().kind, EdgeKind::EnPrime { n: 7 });
        assert_eq!(edge_context(&e7, 0, 1).unwrap().kind, EdgeKind::EnT { n: 7, t: 1 });
        assert_eq!(edge_context(&e7, 4, 5).unwrap().kind, EdgeKind::EnT { n: 7, t: 5 });
        let e6 = CoxeterType::E6.diagram();
        let c = edge_context(&e6, 3, 4).unwrap();
        assert_eq!(c.kind, EdgeKind::EnT { n: 6, t: 1 });
        assert!(c.canonicalized);
    }

    #[test]
    fn edge_context_relabelled_d5() {
        // D5 given with the long arm first: 4 - 3 - 2, forks 0 and 1 on 2
        let g = CoxeterGraph::from_edges(5, &[(4, 3, 3), (3, 2, 3), (2, 0, 3), (2, 1, 3)]);
        assert_eq!(edge_context(&g, 0, 2).unwrap().kind, EdgeKind::DnPrime { n: 5 });
        assert_eq!(edge_context(&g, 3, 4).unwrap().kind, EdgeKind::DnT { n: 5, t: 3 });
        assert_eq!(edge_context(&g, 0, 1), Err(CoxeterError::NotAnEdge(0, 1)));
    }

    #[test]
    fn edge_context_special_labels() {
        assert_eq!(edge_context(&CoxeterType::B(4).diagram(), 0, 1).unwrap().kind, EdgeKind::BnEnd { n: 4 });
        assert_eq!(edge_context(&CoxeterType::F4.diagram(), 1, 2).unwrap().kind, EdgeKind::F4Mid);
        assert_eq!(edge_context(&CoxeterType::H4.diagram(), 0, 1).unwrap().kind, EdgeKind::H4Edge { t: 1 });
        assert_eq!(edge_context(&CoxeterType::I2(7).diagram(), 0, 1).unwrap().kind, EdgeKind::I2 { m: 7 });
    }
}
