use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use super::guards_pass;
use reeb_core::random::generic_graph;
use reeb_core::{
    extended_diagram, transport, truncated_smooth, ReebGraph, TransportParams, Vineyard,
    DEFAULT_TOL,
};

/// A generated admissible vineyard: an initial graph and up to `max_steps`
/// random steps, each keeping every graph along the way clear of the
/// degenerate cases.
pub struct Generated {
    pub graph: ReebGraph,
    pub params: Vec<TransportParams>,
    pub vineyard: Vineyard,
}

pub fn generated_vineyard(seed: u64, max_steps: usize) -> Generated {
    let mut rng = StdRng::seed_from_u64(seed);
    let ops = rng.gen_range(1..=5);
    let graph = generic_graph(&mut rng, ops);
    let steps = rng.gen_range(1..=max_steps);
    let mut current = graph.clone();
    let mut diagrams = vec![extended_diagram(&graph).unwrap()];
    let mut params = Vec::new();
    while params.len() < steps && !current.is_empty() {
        let eps = rng.gen_range(0.05..1.5);
        let p = TransportParams::new(eps, rng.gen_range(0.0..2.0 * eps));
        if !guards_pass(&current, p) {
            break;
        }
        let next = transport(diagrams.last().unwrap(), p, DEFAULT_TOL).unwrap();
        current = truncated_smooth(&current, p, DEFAULT_TOL).unwrap();
        diagrams.push(next);
        params.push(p);
    }
    Generated {
        graph,
        params,
        vineyard: Vineyard::new(diagrams),
    }
}
