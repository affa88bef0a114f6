//! ε-smoothing, τ-truncation and truncated smoothing.
//!
//! [`smooth`] builds the Reeb graph of `X × [−ε, ε]` with function `f + t`
//! by sweeping a window of width `2ε`. The fibre of the thickened space at
//! level `s` has one component per component of `f⁻¹([s − ε, s + ε])`, and
//! the component count can only change at levels `a ± ε` for vertex values
//! `a`. One node is placed per band component at every such level and at the
//! midpoint between consecutive levels; a midpoint node is wired to the node
//! on each side whose band it meets inside the union band.
//!
//! [`truncate`] keeps the points with a monotone path of height `τ` both up
//! and down, which on each edge is an interval bounded by the reach values of
//! its endpoints.

use std::collections::BTreeMap;
use std::fmt;

use crate::band::band_labels;
use crate::error::{Error, Result};
use crate::graph::{ensure_valid, suppress_regular, Indexed, ReebGraph};
use crate::par::Exec;
use crate::persistence::ExtendedDiagram;
use crate::transport::transport;

/// The pair `(ε, τ)` of a truncated smoothing.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct TransportParams {
    pub epsilon: f64,
    pub tau: f64,
}

impl TransportParams {
    pub fn new(epsilon: f64, tau: f64) -> Self {
        Self { epsilon, tau }
    }

    /// Checks `0 ≤ τ ≤ 2ε`, the upper bound relaxed by `tol`.
    pub fn check(&self, tol: f64) -> Result<()> {
        if self.epsilon < 0.0 || !self.epsilon.is_finite() {
            return Err(Error::NegativeEpsilon(self.epsilon));
        }
        if self.tau < 0.0 || !self.tau.is_finite() {
            return Err(Error::NegativeTau(self.tau));
        }
        if self.tau > 2.0 * self.epsilon + tol {
            return Err(Error::TauTooLarge {
                epsilon: self.epsilon,
                tau: self.tau,
            });
        }
        Ok(())
    }

    pub fn scaled(&self, t: f64) -> Self {
        Self::new(t * self.epsilon, t * self.tau)
    }

    /// Coordinatewise distance to another parameter pair.
    pub fn distance(&self, other: &TransportParams) -> f64 {
        (self.epsilon - other.epsilon)
            .abs()
            .max((self.tau - other.tau).abs())
    }
}

impl fmt::Display for TransportParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.epsilon, self.tau)
    }
}

/// Extreme values reachable from each vertex along monotone paths.
#[derive(Debug, Clone, PartialEq)]
pub struct ReachTable {
    pub up: BTreeMap<String, f64>,
    pub down: BTreeMap<String, f64>,
}

impl ReachTable {
    pub fn up_reach(&self, id: &str) -> Option<f64> {
        self.up.get(id).copied()
    }

    pub fn down_reach(&self, id: &str) -> Option<f64> {
        self.down.get(id).copied()
    }
}

fn reaches(ix: &Indexed) -> (Vec<f64>, Vec<f64>) {
    let n = ix.len();
    let mut up = ix.values.clone();
    for v in (0..n).rev() {
        for &w in &ix.up[v] {
            up[v] = up[v].max(up[w]);
        }
    }
    let mut down = ix.values.clone();
    for v in 0..n {
        for &u in &ix.down[v] {
            down[v] = down[v].min(down[u]);
        }
    }
    (up, down)
}

pub fn reach_table(graph: &ReebGraph) -> Result<ReachTable> {
    ensure_valid(graph)?;
    let ix = Indexed::new(graph);
    let (up, down) = reaches(&ix);
    Ok(ReachTable {
        up: ix.ids.iter().cloned().zip(up).collect(),
        down: ix.ids.iter().cloned().zip(down).collect(),
    })
}

/// Sorted candidate levels `a ± ε`, merged when closer than `tol`.
fn candidate_levels(values: &[f64], epsilon: f64, tol: f64) -> Vec<f64> {
    let mut levels: Vec<f64> = values
        .iter()
        .flat_map(|&a| [a - epsilon, a + epsilon])
        .collect();
    levels.sort_by(f64::total_cmp);
    let mut out: Vec<f64> = Vec::with_capacity(levels.len());
    for b in levels {
        match out.last() {
            Some(&last) if b - last <= tol => {}
            _ => out.push(b),
        }
    }
    out
}

pub fn smooth(graph: &ReebGraph, epsilon: f64, tol: f64) -> Result<ReebGraph> {
    smooth_with(graph, epsilon, tol, Exec::default())
}

/// [`smooth`] with an explicit execution strategy for the per-level band
/// computations.
pub fn smooth_with(graph: &ReebGraph, epsilon: f64, tol: f64, exec: Exec) -> Result<ReebGraph> {
    if epsilon < 0.0 || !epsilon.is_finite() {
        return Err(Error::NegativeEpsilon(epsilon));
    }
    ensure_valid(graph)?;
    if epsilon == 0.0 {
        return Ok(suppress_regular(graph));
    }
    let ix = Indexed::new(graph);
    let levels = candidate_levels(&ix.values, epsilon, tol);
    if levels.is_empty() {
        return Ok(ReebGraph::new());
    }

    // Even positions are candidate levels, odd positions midpoints.
    let mut samples = Vec::with_capacity(2 * levels.len() - 1);
    for (i, &b) in levels.iter().enumerate() {
        if i > 0 {
            samples.push((levels[i - 1] + b) / 2.0);
        }
        samples.push(b);
    }
    let exec = exec.at_least(samples.len(), 32);
    let nodes = exec.map_range(samples.len(), |k| {
        let t = if k % 2 == 0 { tol } else { 0.0 };
        band_labels(&ix, samples[k] - epsilon, samples[k] + epsilon, t)
    });
    let unions = exec.map_range(samples.len() - 1, |k| {
        band_labels(&ix, samples[k] - epsilon, samples[k + 1] + epsilon, tol)
    });

    let mut out = ReebGraph::new();
    let id = |k: usize, c: usize| format!("s{k}.{c}");
    for (k, labels) in nodes.iter().enumerate() {
        for c in 0..labels.count {
            out.add_vertex(id(k, c), samples[k]);
        }
    }
    for (k, outer) in unions.iter().enumerate() {
        let (crit, mid) = if k % 2 == 0 { (k, k + 1) } else { (k + 1, k) };
        let mut crit_of_outer = BTreeMap::new();
        for (c, &rep) in nodes[crit].representatives().iter().enumerate() {
            if let Some(o) = outer.labels[rep] {
                crit_of_outer.entry(o).or_insert(c);
            }
        }
        for (m, &rep) in nodes[mid].representatives().iter().enumerate() {
            if let Some(c) = outer.labels[rep].and_then(|o| crit_of_outer.get(&o)) {
                out.add_edge(&id(crit, *c), &id(mid, m));
            }
        }
    }
    Ok(suppress_regular(&out))
}

pub fn truncate(graph: &ReebGraph, tau: f64, tol: f64) -> Result<ReebGraph> {
    if tau < 0.0 || !tau.is_finite() {
        return Err(Error::NegativeTau(tau));
    }
    ensure_valid(graph)?;
    if tau == 0.0 {
        return Ok(suppress_regular(graph));
    }
    let ix = Indexed::new(graph);
    let (up, down) = reaches(&ix);
    let mut out = ReebGraph::new();
    for &(u, v, k) in &ix.edges {
        let lo = ix.values[u].max(down[u] + tau);
        let hi = ix.values[v].min(up[v] - tau);
        if hi - lo <= tol {
            continue;
        }
        let mut end = |x: usize, value: f64| -> String {
            if (value - ix.values[x]).abs() <= tol {
                out.add_vertex(ix.ids[x].clone(), ix.values[x]);
                ix.ids[x].clone()
            } else {
                let clip = format!("{}|{}|{}@{}", ix.ids[u], ix.ids[v], k, value);
                out.add_vertex(clip.clone(), value);
                clip
            }
        };
        let a = end(u, lo);
        let b = end(v, hi);
        out.add_edge(&a, &b);
    }
    Ok(suppress_regular(&out))
}

/// `truncate(smooth(graph, ε), τ)` for `0 ≤ τ ≤ 2ε`.
pub fn truncated_smooth(graph: &ReebGraph, params: TransportParams, tol: f64) -> Result<ReebGraph> {
    params.check(tol)?;
    let smoothed = smooth(graph, params.epsilon, tol)?;
    truncate(&smoothed, params.tau, tol)
}

/// Predicted critical values of the truncated smoothing: the coordinates of
/// the transported diagram.
pub fn predict_critical_values(
    diagram: &ExtendedDiagram,
    params: TransportParams,
    tol: f64,
) -> Result<Vec<f64>> {
    Ok(transport(diagram, params, tol)?.coordinates())
}

/// Pairs of vertex values whose difference equals `2ε` within `tol`.
pub fn genericity_guard(
    graph: &ReebGraph,
    epsilon: f64,
    tol: f64,
) -> std::result::Result<(), Vec<(f64, f64)>> {
    let values = graph.critical_values();
    let mut violations = Vec::new();
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            if ((values[j] - values[i]) - 2.0 * epsilon).abs() <= tol {
                violations.push((values[i], values[j]));
            }
        }
    }
    if violations.is_empty() {
        Ok(())
    } else {
        Err(violations)
    }
}
