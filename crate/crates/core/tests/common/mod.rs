//! Independent oracles shared by the integration suites.

#![allow(dead_code)]

pub mod vineyards;

use reeb_core::{
    extended_diagram, genericity, genericity_guard, ExtendedDiagram, PairKind, PersistencePair,
    ReebGraph, ShiftVector, TransportParams,
};

/// Separation used to keep random instances away from degenerate
/// coincidences.
pub const MARGIN: f64 = 1e-6;

/// Exhaustive bottleneck distance: for each kind, every partial injection
/// of the left points into the right ones, the rest going to the diagonal.
pub fn brute_bottleneck(d1: &ExtendedDiagram, d2: &ExtendedDiagram) -> f64 {
    PairKind::ALL
        .iter()
        .map(|&k| {
            let a: Vec<&PersistencePair> = d1.of_kind(k).collect();
            let b: Vec<&PersistencePair> = d2.of_kind(k).collect();
            let mut used = vec![false; b.len()];
            brute(&a, &b, 0, &mut used, 0.0, f64::INFINITY)
        })
        .fold(0.0, f64::max)
}

fn brute(
    a: &[&PersistencePair],
    b: &[&PersistencePair],
    i: usize,
    used: &mut Vec<bool>,
    cost: f64,
    best: f64,
) -> f64 {
    if cost >= best {
        return best;
    }
    if i == a.len() {
        let rest = b
            .iter()
            .zip(used.iter())
            .filter(|(_, u)| !**u)
            .map(|(q, _)| q.diagonal_distance())
            .fold(cost, f64::max);
        return rest.min(best);
    }
    let mut best = brute(a, b, i + 1, used, cost.max(a[i].diagonal_distance()), best);
    for j in 0..b.len() {
        if !used[j] {
            used[j] = true;
            best = brute(a, b, i + 1, used, cost.max(a[i].linf(b[j])), best);
            used[j] = false;
        }
    }
    best
}

/// Number of points of the graph at value `b`: vertices at `b` plus edges
/// passing strictly through it.
pub fn points_at_level(graph: &ReebGraph, b: f64, tol: f64) -> usize {
    let vertices = graph.vertices().filter(|(_, v)| (v - b).abs() <= tol).count();
    let edges: usize = graph
        .edges()
        .filter(|(x, y, _)| {
            let (fx, fy) = (graph.value(x).unwrap(), graph.value(y).unwrap());
            fx.min(fy) < b - tol && fx.max(fy) > b + tol
        })
        .map(|(_, _, m)| m)
        .sum();
    vertices + edges
}

/// True when the instance stays clear of the degenerate cases: distinct
/// values, no value gap equal to 2ε, and no transported point within
/// `MARGIN` of the diagonal.
pub fn guards_pass(graph: &ReebGraph, params: TransportParams) -> bool {
    if !genericity(graph, MARGIN).is_generic() {
        return false;
    }
    if genericity_guard(graph, params.epsilon, MARGIN).is_err() {
        return false;
    }
    let d = extended_diagram(graph).unwrap();
    d.pairs.iter().all(|p| {
        let v = ShiftVector::for_kind(p.kind, params);
        ((p.high + v.dy) - (p.low + v.dx)).abs() > MARGIN
    })
}

pub fn sorted(mut v: Vec<f64>) -> Vec<f64> {
    v.sort_by(f64::total_cmp);
    v
}

pub fn multisets_close(a: &[f64], b: &[f64], tol: f64) -> bool {
    let (a, b) = (sorted(a.to_vec()), sorted(b.to_vec()));
    a.len() == b.len() && a.iter().zip(&b).all(|(x, y)| (x - y).abs() <= tol)
}
