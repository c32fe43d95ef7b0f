//! Weighted flag complexes: the clique complex of a graph whose edges carry
//! Coxeter weights, with every simplex's Coxeter group classified up front.

mod format;

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use thiserror::Error;

use crate::coxeter::{group_order, CoxeterGraph, TypeDecomposition, Weight};

pub use format::{parse_complex, serialize_complex, ParseError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("simplex {{{}}} spans an infinite Coxeter group", .0.join(","))]
    InfiniteCoxeterGroup(Vec<String>),
    #[error("simplex {{{}}} is not in the complex", .0.join(","))]
    SimplexNotInComplex(Vec<String>),
    #[error("{0} and {1} are not joined by a finite-weight edge")]
    NotAnEdge(String, String),
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("duplicate vertex {0}")]
    DuplicateVertex(String),
    #[error("weight {0} is below 2")]
    BadWeight(u32),
    #[error("a vertex cannot be joined to itself")]
    SelfLoop,
}

/// Vertices with opaque string ids (kept sorted) and a symmetric weight on
/// every pair of distinct vertices; unset pairs are `∞`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightedGraph {
    vertices: Vec<String>,
    weights: Vec<Weight>,
}

impl WeightedGraph {
    pub fn new<I, S>(ids: I) -> Result<Self, ComplexError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut vertices: Vec<String> = ids.into_iter().map(Into::into).collect();
        vertices.sort();
        if let Some(w) = vertices.windows(2).find(|w| w[0] == w[1]) {
            return Err(ComplexError::DuplicateVertex(w[0].clone()));
        }
        let n = vertices.len();
        Ok(Self { vertices, weights: vec![Weight::Infinite; n * n] })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn id(&self, i: usize) -> &str {
        &self.vertices[i]
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.vertices.binary_search_by(|v| v.as_str().cmp(id)).ok()
    }

    fn require(&self, id: &str) -> Result<usize, ComplexError> {
        self.index_of(id).ok_or_else(|| ComplexError::UnknownVertex(id.to_owned()))
    }

    pub fn weight(&self, i: usize, j: usize) -> Weight {
        self.weights[i * self.len() + j]
    }

    pub fn weight_by_id(&self, a: &str, b: &str) -> Result<Weight, ComplexError> {
        Ok(self.weight(self.require(a)?, self.require(b)?))
    }

    pub fn set_weight(&mut self, i: usize, j: usize, w: Weight) -> Result<(), ComplexError> {
        if i == j {
            return Err(ComplexError::SelfLoop);
        }
        if let Weight::Finite(m) = w {
            if m < 2 {
                return Err(ComplexError::BadWeight(m));
            }
        }
        let n = self.len();
        self.weights[i * n + j] = w;
        self.weights[j * n + i] = w;
        Ok(())
    }

    pub fn set_weight_by_id(&mut self, a: &str, b: &str, w: Weight) -> Result<(), ComplexError> {
        let (i, j) = (self.require(a)?, self.require(b)?);
        self.set_weight(i, j, w)
    }

    /// Builder-style `set_weight_by_id` for finite weights; panics on error.
    pub fn with_edge(mut self, a: &str, b: &str, m: u32) -> Self {
        self.set_weight_by_id(a, b, Weight::Finite(m)).expect("valid edge");
        self
    }

    pub fn is_incident(&self, i: usize, j: usize) -> bool {
        i != j && self.weight(i, j).is_finite()
    }

    /// Finite-weight pairs `(i, j, m)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize, u32)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if let Weight::Finite(m) = self.weight(i, j) {
                    out.push((i, j, m));
                }
            }
        }
        out
    }

    pub fn max_finite_weight(&self) -> Option<u32> {
        self.edges().into_iter().map(|(_, _, m)| m).max()
    }

    pub fn is_right_angled(&self) -> bool {
        self.edges().iter().all(|&(_, _, m)| m == 2)
    }

    /// Subgraph on the given (sorted) vertex indices.
    pub fn induced(&self, vertices: &[usize]) -> WeightedGraph {
        let ids: Vec<String> = vertices.iter().map(|&i| self.vertices[i].clone()).collect();
        let mut g = WeightedGraph::new(ids).expect("distinct ids");
        // ids stay in order because `vertices` is sorted
        for (a, &i) in vertices.iter().enumerate() {
            for (b, &j) in vertices.iter().enumerate().skip(a + 1) {
                let w = self.weight(i, j);
                g.weights[a * vertices.len() + b] = w;
                g.weights[b * vertices.len() + a] = w;
            }
        }
        g
    }

    /// The Coxeter graph spanned by a vertex set.
    pub fn coxeter_graph(&self, vertices: &[usize]) -> CoxeterGraph {
        let mut g = CoxeterGraph::new(vertices.len());
        for (a, &i) in vertices.iter().enumerate() {
            for (b, &j) in vertices.iter().enumerate().skip(a + 1) {
                g.set(a, b, self.weight(i, j));
            }
        }
        g
    }

    /// Ids for a list of vertex indices.
    pub fn names(&self, vertices: &[usize]) -> Vec<String> {
        vertices.iter().map(|&i| self.vertices[i].clone()).collect()
    }
}

/// A sorted list of vertex indices into the owning complex's graph. The
/// empty simplex has dimension -1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Simplex(Vec<usize>);

impl Simplex {
    pub fn new(mut vertices: Vec<usize>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        Self(vertices)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn dim(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_face_of(&self, other: &Simplex) -> bool {
        self.0.iter().all(|&v| other.contains(v))
    }
}

impl From<Vec<usize>> for Simplex {
    fn from(v: Vec<usize>) -> Self {
        Self::new(v)
    }
}

/// A simplex together with its Coxeter group data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cell {
    pub simplex: Simplex,
    pub decomposition: TypeDecomposition,
    pub order: BigUint,
}

/// Clique complex of a [`WeightedGraph`]; `cells[k]` holds the simplices with
/// `k` vertices, each list in lexicographic order.
#[derive(Debug, Clone)]
pub struct FlagComplex {
    graph: WeightedGraph,
    cells: Vec<Vec<Cell>>,
    index: HashMap<Simplex, usize>,
}

impl FlagComplex {
    pub fn graph(&self) -> &WeightedGraph {
        &self.graph
    }

    /// Dimension of the top simplex; -1 for the empty complex.
    pub fn dim(&self) -> isize {
        self.cells.len() as isize - 2
    }

    /// Simplices of dimension `d` (`d = -1` gives the empty simplex).
    pub fn cells_of_dim(&self, d: isize) -> &[Cell] {
        let k = d + 1;
        if k < 0 || k as usize >= self.cells.len() {
            &[]
        } else {
            &self.cells[k as usize]
        }
    }

    pub fn cells(&self) -> impl Iterator<Item = &Cell> {
        self.cells.iter().flatten()
    }

    pub fn num_simplices(&self) -> usize {
        self.cells.iter().map(Vec::len).sum()
    }

    /// Number of simplices of each dimension, starting at dimension -1.
    pub fn f_vector(&self) -> Vec<usize> {
        self.cells.iter().map(Vec::len).collect()
    }

    pub fn cell(&self, s: &Simplex) -> Option<&Cell> {
        let k = s.len();
        self.index.get(s).map(|&i| &self.cells[k][i])
    }

    /// Position of `s` inside `cells_of_dim(s.dim())`.
    pub fn position(&self, s: &Simplex) -> Option<usize> {
        self.index.get(s).copied()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.index.contains_key(s)
    }

    pub fn simplex_by_ids(&self, ids: &[&str]) -> Result<Simplex, ComplexError> {
        let mut v = Vec::with_capacity(ids.len());
        for id in ids {
            v.push(self.graph.require(id)?);
        }
        Ok(Simplex::new(v))
    }

    pub fn names(&self, s: &Simplex) -> Vec<String> {
        self.graph.names(s.vertices())
    }

    /// Euler characteristic `sum_k (-1)^k f_k` over nonempty simplices.
    pub fn euler_characteristic(&self) -> i64 {
        self.cells
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| if k % 2 == 1 { c.len() as i64 } else { -(c.len() as i64) })
            .sum()
    }
}

/// Enumerates every clique of the finite-weight graph and classifies its
/// Coxeter group.
pub fn build_flag_complex(graph: &WeightedGraph) -> Result<FlagComplex, ComplexError> {
    let n = graph.len();
    let adjacency: Vec<Vec<usize>> =
        (0..n).map(|i| (i + 1..n).filter(|&j| graph.is_incident(i, j)).collect()).collect();
    let mut cells: Vec<Vec<Cell>> = vec![vec![Cell {
        simplex: Simplex::empty(),
        decomposition: TypeDecomposition::default(),
        order: BigUint::from(1u32),
    }]];

    // breadth-first by size: extend each clique by larger vertices adjacent
    // to all of it, so every clique appears once and lists stay sorted
    let mut frontier: Vec<Vec<usize>> = vec![Vec::new()];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        let mut level = Vec::new();
        for clique in &frontier {
            let candidates: Box<dyn Iterator<Item = usize>> = match clique.last() {
                None => Box::new(0..n),
                Some(&last) => Box::new(adjacency[last].iter().copied()),
            };
            for v in candidates {
                if clique.iter().all(|&u| graph.is_incident(u, v)) {
                    let mut c = clique.clone();
                    c.push(v);
                    next.push(c);
                }
            }
        }
        next.sort();
        for c in &next {
            let decomposition = TypeDecomposition::of(&graph.coxeter_graph(c))
                .ok_or_else(|| ComplexError::InfiniteCoxeterGroup(graph.names(c)))?;
            let order = group_order(&decomposition);
            level.push(Cell { simplex: Simplex(c.clone()), decomposition, order });
        }
        if level.is_empty() {
            break;
        }
        cells.push(level);
        frontier = next;
    }

    let mut index = HashMap::new();
    for level in &cells {
        for (i, cell) in level.iter().enumerate() {
            index.insert(cell.simplex.clone(), i);
        }
    }
    Ok(FlagComplex { graph: graph.clone(), cells, index })
}

fn require_simplex(s: &FlagComplex, sigma: &Simplex) -> Result<(), ComplexError> {
    if s.contains(sigma) {
        Ok(())
    } else {
        let g = s.graph();
        Err(ComplexError::SimplexNotInComplex(
            sigma.vertices().iter().map(|&i| g.vertices().get(i).cloned().unwrap_or_else(|| i.to_string())).collect(),
        ))
    }
}

/// Vertices outside `sigma` incident to all of it.
pub fn link_vertices(s: &FlagComplex, sigma: &Simplex) -> Result<Vec<usize>, ComplexError> {
    require_simplex(s, sigma)?;
    let g = s.graph();
    Ok((0..g.len())
        .filter(|&v| !sigma.contains(v) && sigma.vertices().iter().all(|&u| g.is_incident(u, v)))
        .collect())
}

/// The link of `sigma`, as the full subcomplex on [`link_vertices`].
pub fn link(s: &FlagComplex, sigma: &Simplex) -> Result<FlagComplex, ComplexError> {
    let verts = link_vertices(s, sigma)?;
    build_flag_complex(&s.graph().induced(&verts))
}

/// Every simplex containing both endpoints of the finite-weight edge `(u, v)`.
pub fn simplices_containing(s: &FlagComplex, u: usize, v: usize) -> Result<Vec<&Cell>, ComplexError> {
    let g = s.graph();
    if u >= g.len() || v >= g.len() || !g.is_incident(u, v) {
        let name = |i: usize| g.vertices().get(i).cloned().unwrap_or_else(|| i.to_string());
        return Err(ComplexError::NotAnEdge(name(u), name(v)));
    }
    Ok(s.cells().filter(|c| c.simplex.contains(u) && c.simplex.contains(v)).collect())
}

impl fmt::Display for WeightedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serialize_complex(self))
    }
}

/// Frequently used example graphs.
pub mod examples {
    use super::WeightedGraph;

    fn ids(n: usize) -> Vec<String> {
        // zero-padded so lexicographic order matches numeric order
        (0..n).map(|i| format!("v{i:02}")).collect()
    }

    /// `k`-cycle with all cycle edges of weight 2.
    pub fn cycle(k: usize) -> WeightedGraph {
        let names = ids(k);
        let mut g = WeightedGraph::new(names.clone()).expect("distinct");
        for i in 0..k {
            g = g.with_edge(&names[i], &names[(i + 1) % k], 2);
        }
        g
    }

    /// Boundary of the `d`-dimensional cross-polytope: `2d` vertices, every
    /// pair except antipodes joined with weight 2.
    pub fn cross_polytope_boundary(d: usize) -> WeightedGraph {
        let names = ids(2 * d);
        let mut g = WeightedGraph::new(names.clone()).expect("distinct");
        for i in 0..2 * d {
            for j in i + 1..2 * d {
                if j != i + d {
                    g = g.with_edge(&names[i], &names[j], 2);
                }
            }
        }
        g
    }

    pub fn complete(n: usize, m: u32) -> WeightedGraph {
        let names = ids(n);
        let mut g = WeightedGraph::new(names.clone()).expect("distinct");
        for i in 0..n {
            for j in i + 1..n {
                g = g.with_edge(&names[i], &names[j], m);
            }
        }
        g
    }
}
