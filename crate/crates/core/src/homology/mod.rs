//! Reduced integer homology of flag complexes and homology-level
//! certification of homology manifolds and generalized homology spheres.
//!
//! A complex is certified as a generalized homology `n`-sphere when its own
//! reduced homology is that of `S^n` and, for every nonempty simplex `σ`, the
//! link of `σ` has the reduced homology of `S^(n - dim σ - 1)`. Since the
//! link of `τ` inside `Lk(σ)` is `Lk(σ ∪ τ)`, this flat check over all
//! simplices is the same as recursing into links.

mod snf;

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::complex::{link, FlagComplex, Simplex};

pub use snf::{smith_normal_form, IntMatrix};

/// `Z^rank ⊕ Z/t_1 ⊕ ... ⊕ Z/t_k` with `t_1 | t_2 | ... | t_k`, all `t_i >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AbelianGroupDescriptor {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianGroupDescriptor {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        Self { rank, torsion: Vec::new() }
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for AbelianGroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_owned()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        f.write_str(&parts.join(" + "))
    }
}

/// Reduced homology in degrees `-1 ..= dim`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyProfile {
    reduced: Vec<AbelianGroupDescriptor>,
}

impl HomologyProfile {
    /// Group in degree `k`; trivial outside the stored range.
    pub fn degree(&self, k: isize) -> AbelianGroupDescriptor {
        let idx = k + 1;
        if idx < 0 {
            return AbelianGroupDescriptor::trivial();
        }
        self.reduced.get(idx as usize).cloned().unwrap_or_default()
    }

    pub fn top_degree(&self) -> isize {
        self.reduced.len() as isize - 2
    }

    /// `(degree, group)` for every stored degree.
    pub fn groups(&self) -> impl Iterator<Item = (isize, &AbelianGroupDescriptor)> {
        self.reduced.iter().enumerate().map(|(i, g)| (i as isize - 1, g))
    }

    /// Reduced Betti numbers.
    pub fn betti(&self) -> Vec<usize> {
        self.reduced.iter().map(|g| g.rank).collect()
    }

    /// First degree where this differs from the reduced homology of `S^n`
    /// (for `n < -1` nothing matches, and degree `-1` is reported if
    /// everything else is trivial).
    pub fn sphere_mismatch(&self, n: isize) -> Option<isize> {
        let top = self.top_degree().max(n);
        for k in -1..=top {
            let expected = if k == n { AbelianGroupDescriptor::free(1) } else { AbelianGroupDescriptor::trivial() };
            if self.degree(k) != expected {
                return Some(k);
            }
        }
        None
    }

    pub fn is_sphere(&self, n: isize) -> bool {
        self.sphere_mismatch(n).is_none()
    }
}

impl fmt::Display for HomologyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.groups().map(|(k, g)| format!("H~{k} = {g}")).collect();
        f.write_str(&parts.join(", "))
    }
}

/// Boundary map from `k`-simplices to `(k-1)`-simplices (`k >= 0`), with the
/// augmentation to the empty simplex at `k = 0`. Rows and columns follow the
/// lexicographic simplex order of the complex.
pub fn boundary_matrix(s: &FlagComplex, k: isize) -> IntMatrix {
    let cols = s.cells_of_dim(k);
    let rows = s.cells_of_dim(k - 1);
    let mut m = IntMatrix::zeros(rows.len(), cols.len());
    for (j, cell) in cols.iter().enumerate() {
        let verts = cell.simplex.vertices();
        for i in 0..verts.len() {
            let mut face = verts.to_vec();
            face.remove(i);
            let row = s.position(&Simplex::new(face)).expect("faces of simplices are simplices");
            let sign = if i % 2 == 0 { 1 } else { -1 };
            m.set(row, j, BigInt::from(sign));
        }
    }
    m
}

/// Reduced simplicial homology with integer coefficients.
pub fn homology(s: &FlagComplex) -> HomologyProfile {
    let dim = s.dim();
    // invariant factors of ∂_k for k = 0 ..= dim
    let factors: Vec<Vec<BigInt>> = (0..=dim).map(|k| smith_normal_form(&boundary_matrix(s, k))).collect();
    let rank_of = |k: isize| -> usize {
        if k < 0 || k > dim {
            0
        } else {
            factors[k as usize].len()
        }
    };
    let reduced = (-1..=dim)
        .map(|k| {
            let chains = s.cells_of_dim(k).len();
            let rank = chains - rank_of(k) - rank_of(k + 1);
            let torsion = if k < dim {
                factors[(k + 1) as usize].iter().filter(|d| !d.is_one()).cloned().collect()
            } else {
                Vec::new()
            };
            AbelianGroupDescriptor { rank, torsion }
        })
        .collect();
    HomologyProfile { reduced }
}

/// Why a sphere or manifold check failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GhsFailure {
    /// Vertex ids of the simplex whose link failed (empty: the complex itself).
    pub simplex: Vec<String>,
    /// Dimension of the sphere the link was required to be.
    pub expected_sphere: isize,
    pub degree: isize,
    pub found: AbelianGroupDescriptor,
}

impl fmt::Display for GhsFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let expected = if self.degree == self.expected_sphere { "Z" } else { "0" };
        write!(
            f,
            "link of {{{}}} should be a homology {}-sphere but has H~{} = {} (expected {})",
            self.simplex.join(","),
            self.expected_sphere,
            self.degree,
            self.found,
            expected
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GhsVerdict {
    pub holds: bool,
    pub failure: Option<GhsFailure>,
}

fn check_links<'a>(
    s: &'a FlagComplex,
    n: isize,
    simplices: impl Iterator<Item = &'a Simplex>,
) -> GhsVerdict {
    for sigma in simplices {
        let target = n - sigma.dim() - 1;
        let lk = link(s, sigma).expect("simplex comes from the complex");
        let h = homology(&lk);
        if let Some(degree) = h.sphere_mismatch(target) {
            return GhsVerdict {
                holds: false,
                failure: Some(GhsFailure {
                    simplex: s.names(sigma),
                    expected_sphere: target,
                    degree,
                    found: h.degree(degree),
                }),
            };
        }
    }
    GhsVerdict { holds: true, failure: None }
}

/// Generalized homology `n`-sphere check. The certificate names the first
/// failing simplex (in dimension-then-lexicographic order, starting with the
/// empty simplex, i.e. the complex itself) and the lowest bad degree.
pub fn is_ghs(s: &FlagComplex, n: isize) -> GhsVerdict {
    check_links(s, n, s.cells().map(|c| &c.simplex))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomologyError {
    #[error("complex has dimension {actual}, expected {expected}")]
    DimensionMismatch { expected: isize, actual: isize },
}

/// Homology `n`-manifold check through links of nonempty simplices.
pub fn is_homology_manifold(s: &FlagComplex, n: isize) -> Result<GhsVerdict, HomologyError> {
    if s.dim() != n {
        return Err(HomologyError::DimensionMismatch { expected: n, actual: s.dim() });
    }
    Ok(check_links(s, n, s.cells().skip(1).map(|c| &c.simplex)))
}
