#![allow(dead_code)]

use flagomega::complex::{build_flag_complex, FlagComplex, WeightedGraph};
use flagomega::coxeter::{CoxeterType, Weight};
use rand::rngs::StdRng;
use rand::Rng;

/// The simplex spanned by a finite diagram, with `variant` picking how many
/// weight-2 apex vertices are attached to give its faces nontrivial links.
///
/// * 0: the bare simplex
/// * 1: one apex joined to everything
/// * 2: a second apex missing the first diagram vertex, the two apexes
///   joined by weight 3
/// * 3: three apexes, the third missing the last diagram vertex
pub fn type_complex(t: CoxeterType, variant: usize) -> WeightedGraph {
    let d = t.diagram();
    let r = d.rank();
    let xs: Vec<String> = (0..r).map(|i| format!("x{i}")).collect();
    let ps: Vec<String> = (0..variant).map(|i| format!("p{i}")).collect();
    let mut g = WeightedGraph::new(xs.iter().chain(ps.iter()).cloned()).unwrap();
    for i in 0..r {
        for j in i + 1..r {
            let m = match d.weight(i, j) {
                Weight::Finite(m) => m,
                Weight::Infinite => unreachable!("finite diagrams"),
            };
            g = g.with_edge(&xs[i], &xs[j], m);
        }
    }
    for (k, p) in ps.iter().enumerate() {
        for (i, x) in xs.iter().enumerate() {
            let skip = (k == 1 && i == 0) || (k == 2 && i == r - 1);
            if !skip {
                g = g.with_edge(p, x, 2);
            }
        }
    }
    if variant >= 2 {
        g = g.with_edge("p0", "p1", 3);
    }
    if variant >= 3 {
        g = g.with_edge("p1", "p2", 2).with_edge("p0", "p2", 2);
    }
    g
}

/// Every irreducible type of rank at most 8, dihedral labels up to 12.
pub fn all_types() -> Vec<CoxeterType> {
    CoxeterType::all_up_to(8, 12)
}

/// A random weighted graph whose flag complex has only finite groups.
pub fn random_finite_complex(rng: &mut StdRng, vertices: usize, density: f64) -> FlagComplex {
    loop {
        let ids: Vec<String> = (0..vertices).map(|i| format!("v{i:02}")).collect();
        let mut g = WeightedGraph::new(ids.clone()).unwrap();
        for i in 0..vertices {
            for j in i + 1..vertices {
                if rng.gen_bool(density) {
                    let m = if rng.gen_bool(0.5) { 2 } else { rng.gen_range(3..=8) };
                    g = g.with_edge(&ids[i], &ids[j], m);
                }
            }
        }
        if let Ok(s) = build_flag_complex(&g) {
            return s;
        }
    }
}
