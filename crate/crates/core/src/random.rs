//! Random graphs and diagrams for tests and benchmarks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::ReebGraph;
use crate::persistence::{ExtendedDiagram, PairKind, PersistencePair};

/// Values are drawn from `[0, LEVEL_MAX]`.
pub const LEVEL_MAX: f64 = 10.0;

/// Minimum gap kept between distinct vertex values of generic graphs.
pub const MIN_GAP: f64 = 1e-4;

struct Builder {
    graph: ReebGraph,
    next: usize,
}

impl Builder {
    fn vertex(&mut self, value: f64) -> String {
        let id = format!("v{}", self.next);
        self.next += 1;
        self.graph.add_vertex(id.clone(), value);
        id
    }

    /// Every edge copy as `(lower, upper)`.
    fn edge_copies(&self) -> Vec<(String, String)> {
        let g = &self.graph;
        let mut out = Vec::new();
        for (a, b, m) in g.edges() {
            let (lo, hi) = if g.value(a) < g.value(b) { (a, b) } else { (b, a) };
            for _ in 0..m {
                out.push((lo.to_owned(), hi.to_owned()));
            }
        }
        out
    }

    /// A value in the open interval `(lo, hi)` away from every existing one.
    fn fresh<R: Rng>(&self, rng: &mut R, lo: f64, hi: f64) -> Option<f64> {
        if hi - lo <= 2.0 * MIN_GAP {
            return None;
        }
        (0..64).find_map(|_| {
            let v = rng.gen_range(lo + MIN_GAP..hi - MIN_GAP);
            self.graph
                .vertices()
                .all(|(_, w)| (v - w).abs() > MIN_GAP)
                .then_some(v)
        })
    }

    fn split(&mut self, lower: &str, upper: &str, value: f64) -> String {
        self.graph.remove_edge(lower, upper);
        let s = self.vertex(value);
        self.graph.add_edge(lower, &s);
        self.graph.add_edge(&s, upper);
        s
    }

    fn span(&self, e: &(String, String)) -> (f64, f64) {
        (
            self.graph.value(&e.0).unwrap(),
            self.graph.value(&e.1).unwrap(),
        )
    }

    fn try_op<R: Rng>(&mut self, rng: &mut R) -> bool {
        let edges = self.edge_copies();
        let e = edges.choose(rng).unwrap().clone();
        let (lo, hi) = self.span(&e);
        match rng.gen_range(0..4) {
            // New maximum hanging off an up fork.
            0 => {
                let Some(s) = self.fresh(rng, lo, hi) else { return false };
                let Some(x) = self.fresh(rng, s, LEVEL_MAX + MIN_GAP) else { return false };
                let s = self.split(&e.0, &e.1, s);
                let x = self.vertex(x);
                self.graph.add_edge(&s, &x);
            }
            // New minimum below a down fork.
            1 => {
                let Some(s) = self.fresh(rng, lo, hi) else { return false };
                let Some(y) = self.fresh(rng, -MIN_GAP, s) else { return false };
                let s = self.split(&e.0, &e.1, s);
                let y = self.vertex(y);
                self.graph.add_edge(&y, &s);
            }
            // Loop from an up fork on one edge to a down fork on another (or
            // the same) edge.
            2 => {
                let f = edges.choose(rng).unwrap().clone();
                let Some(p) = self.fresh(rng, lo, hi) else { return false };
                if f == e {
                    let Some(q) = self.fresh(rng, p, hi) else { return false };
                    let ps = self.split(&e.0, &e.1, p);
                    let qs = self.split(&ps, &e.1, q);
                    self.graph.add_edge(&ps, &qs);
                } else {
                    let (flo, fhi) = self.span(&f);
                    let Some(q) = self.fresh(rng, p.max(flo), fhi) else { return false };
                    let ps = self.split(&e.0, &e.1, p);
                    let qs = self.split(&f.0, &f.1, q);
                    self.graph.add_edge(&ps, &qs);
                }
            }
            // Separate component.
            _ => {
                let Some(a) = self.fresh(rng, -MIN_GAP, LEVEL_MAX + MIN_GAP) else { return false };
                let Some(b) = self.fresh(rng, -MIN_GAP, LEVEL_MAX + MIN_GAP) else { return false };
                let (a, b) = (self.vertex(a.min(b)), self.vertex(a.max(b)));
                self.graph.add_edge(&a, &b);
            }
        }
        true
    }
}

/// A Morse-generic graph with distinct values in `[0, 10]` and
/// `2 + 2 * ops` vertices, grown from a single edge by attaching branches,
/// loops and components.
pub fn generic_graph<R: Rng>(rng: &mut R, ops: usize) -> ReebGraph {
    let mut b = Builder {
        graph: ReebGraph::new(),
        next: 0,
    };
    loop {
        let lo = rng.gen_range(0.0..LEVEL_MAX / 2.0);
        let hi = rng.gen_range(LEVEL_MAX / 2.0..=LEVEL_MAX);
        if hi - lo > 1.0 {
            let (a, c) = (b.vertex(lo), b.vertex(hi));
            b.graph.add_edge(&a, &c);
            break;
        }
    }
    let mut done = 0;
    while done < ops {
        if b.try_op(rng) {
            done += 1;
        }
    }
    b.graph
}

/// Any valid graph on at most `max_vertices` vertices. With `ties`, values
/// are small integers so equal values and non-Morse vertices are common.
pub fn arbitrary_graph<R: Rng>(rng: &mut R, max_vertices: usize, ties: bool) -> ReebGraph {
    loop {
        let n = rng.gen_range(2..=max_vertices.max(2));
        let values: Vec<f64> = (0..n)
            .map(|_| {
                if ties {
                    rng.gen_range(0..=4) as f64
                } else {
                    rng.gen_range(0.0..LEVEL_MAX)
                }
            })
            .collect();
        let mut g = ReebGraph::new();
        for (i, &v) in values.iter().enumerate() {
            g.add_vertex(format!("v{i}"), v);
        }
        for _ in 0..rng.gen_range(1..=2 * n) {
            let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
            if values[i] != values[j] {
                g.add_edge(&format!("v{i}"), &format!("v{j}"));
            }
        }
        let isolated: Vec<String> = g
            .vertices()
            .filter(|(id, _)| !g.edges().any(|(a, b, _)| a == *id || b == *id))
            .map(|(id, _)| id.to_owned())
            .collect();
        for id in isolated {
            g.remove_vertex(&id);
        }
        if !g.is_empty() {
            return g;
        }
    }
}

pub fn random_pair<R: Rng>(rng: &mut R, kind: PairKind) -> PersistencePair {
    let low = rng.gen_range(0.0..LEVEL_MAX);
    let high = low + rng.gen_range(0.05..LEVEL_MAX / 2.0);
    PersistencePair::new(kind, low, high)
}

/// Up to `max_per_kind` random points of each kind.
pub fn random_diagram<R: Rng>(rng: &mut R, max_per_kind: usize) -> ExtendedDiagram {
    let mut d = ExtendedDiagram::new();
    for kind in PairKind::ALL {
        for _ in 0..rng.gen_range(0..=max_per_kind) {
            d.push(random_pair(rng, kind));
        }
    }
    d
}

/// Exactly `n` random points of one kind.
pub fn single_kind_diagram<R: Rng>(rng: &mut R, kind: PairKind, n: usize) -> ExtendedDiagram {
    ExtendedDiagram::from_pairs((0..n).map(|_| random_pair(rng, kind)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{betti, genericity, validate};
    use crate::DEFAULT_TOL;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    #[test]
    fn generic_graphs_are_generic() {
        let mut rng = StdRng::seed_from_u64(7);
        for ops in 1..=5 {
            for _ in 0..50 {
                let g = generic_graph(&mut rng, ops);
                assert!(validate(&g).is_valid());
                assert!(genericity(&g, DEFAULT_TOL).is_generic(), "{g:?}");
                assert_eq!(g.vertex_count(), 2 + 2 * ops);
                assert!(g.vertices().all(|(_, v)| (0.0..=LEVEL_MAX).contains(&v)));
            }
        }
    }

    #[test]
    fn generic_graphs_have_loops_sometimes() {
        let mut rng = StdRng::seed_from_u64(11);
        let loops = (0..100)
            .filter(|_| betti(&generic_graph(&mut rng, 4)).1 > 0)
            .count();
        assert!(loops > 10);
    }

    #[test]
    fn arbitrary_graphs_are_valid() {
        let mut rng = StdRng::seed_from_u64(3);
        for _ in 0..200 {
            let ties = rng.gen_bool(0.5);
            let g = arbitrary_graph(&mut rng, 10, ties);
            assert!(validate(&g).is_valid(), "{g:?}");
            assert!(g.vertex_count() <= 10);
        }
    }
}
