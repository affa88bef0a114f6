//! Parameter recovery, admissibility and realization of diagram sequences.
//!
//! A step `D → D'` is admissible when `D' = transport(D, (ε, τ))` for some
//! `τ < 2ε`. Transport is a per-kind translation with removal at the
//! diagonal, so any solution is pinned down by a few kinds of constraint:
//! matched points fix `ε` (Ext1, Rel1, Ord0) or `τ − ε` (Ord0, Ext0, Rel1),
//! and removed points give thresholds. [`recover_params`] enumerates those
//! values and keeps the pairs that verify.

use crate::error::{Error, Result};
use crate::graph::ReebGraph;
use crate::par::Exec;
use crate::persistence::{diagram_equal, extended_diagram, ExtendedDiagram, PairKind};
use crate::smoothing::{truncated_smooth, TransportParams};
use crate::transport::transport;
use crate::DEFAULT_TOL;

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Vineyard {
    pub diagrams: Vec<ExtendedDiagram>,
    /// One entry per step, when known.
    pub params: Option<Vec<TransportParams>>,
}

impl Vineyard {
    pub fn new(diagrams: Vec<ExtendedDiagram>) -> Self {
        Self {
            diagrams,
            params: None,
        }
    }

    pub fn with_params(mut self, params: Vec<TransportParams>) -> Self {
        self.params = Some(params);
        self
    }

    pub fn steps(&self) -> usize {
        self.diagrams.len().saturating_sub(1)
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Realization {
    pub graphs: Vec<ReebGraph>,
    pub params: Vec<TransportParams>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RealizeOptions {
    pub tol: f64,
    /// Accept `(0, 0)` for steps that leave the diagram unchanged.
    pub allow_identity: bool,
}

impl Default for RealizeOptions {
    fn default() -> Self {
        Self {
            tol: DEFAULT_TOL,
            allow_identity: false,
        }
    }
}

impl RealizeOptions {
    /// Tolerance for comparing diagrams of realized graphs.
    pub fn verify_tol(&self) -> f64 {
        10.0 * self.tol
    }
}

fn points(d: &ExtendedDiagram, kind: PairKind) -> Vec<(f64, f64)> {
    d.of_kind(kind).map(|p| (p.low, p.high)).collect()
}

fn cross<'a, F>(a: &'a [(f64, f64)], b: &'a [(f64, f64)], f: F) -> impl Iterator<Item = f64> + 'a
where
    F: Fn((f64, f64), (f64, f64)) -> f64 + Copy + 'static,
{
    a.iter().flat_map(move |&p| b.iter().map(move |&q| f(p, q)))
}

/// All verified `(ε, τ)` with `0 ≤ τ ≤ 2ε` carrying `from` onto `to`,
/// sorted by `ε` then `τ`.
pub fn recover_params(from: &ExtendedDiagram, to: &ExtendedDiagram, tol: f64) -> Vec<TransportParams> {
    let [e0, o0, r1, x1] = PairKind::ALL.map(|k| points(from, k));
    let [e0t, o0t, r1t, x1t] = PairKind::ALL.map(|k| points(to, k));
    let dlow = |p: (f64, f64), q: (f64, f64)| q.0 - p.0;
    let dhigh = |p: (f64, f64), q: (f64, f64)| q.1 - p.1;
    let len = |p: &(f64, f64)| p.1 - p.0;

    let mut eps = vec![0.0];
    eps.extend(cross(&x1, &x1t, dlow));
    eps.extend(cross(&x1, &x1t, move |p, q| -dhigh(p, q)));
    eps.extend(cross(&r1, &r1t, dlow));
    eps.extend(cross(&o0, &o0t, move |p, q| -dhigh(p, q)));
    eps.extend(x1.iter().map(|p| len(p) / 2.0));
    // Removing a point of another kind needs τ ≥ its threshold, so ε must
    // clear half of it for τ < 2ε to hold.
    let margin = 10.0 * tol;
    eps.extend(e0.iter().chain(&o0).chain(&r1).map(|p| len(p) / 2.0 + margin));
    // Smallest strictly admissible step, for diagrams nothing can move.
    eps.push(margin);

    // τ − ε offsets from matched points, and τ thresholds for removal.
    let mut offsets: Vec<f64> = Vec::new();
    offsets.extend(cross(&o0, &o0t, dlow));
    offsets.extend(cross(&e0, &e0t, dlow));
    offsets.extend(cross(&e0, &e0t, move |p, q| -dhigh(p, q)));
    offsets.extend(cross(&r1, &r1t, move |p, q| -dhigh(p, q)));
    let mut removal: Vec<f64> = o0.iter().chain(&r1).map(len).collect();

    let mut candidates = Vec::new();
    for &e in &eps {
        candidates.push((e, 0.0));
        candidates.extend(offsets.iter().map(|&o| (e, e + o)));
        candidates.extend(removal.iter().map(|&t| (e, t)));
        candidates.extend(e0.iter().map(|p| (e, e + len(p) / 2.0)));
    }

    // When only Ext0 points constrain the step, c = ε − τ is fixed and the
    // rest of the family is pinned by removal thresholds.
    let ext1_bounds: Vec<f64> = x1.iter().map(|p| len(p) / 2.0).collect();
    removal.push(0.0);
    for c in cross(&e0, &e0t, dhigh) {
        let mut taus = removal.clone();
        taus.extend(ext1_bounds.iter().map(|&b| b - c));
        taus.push(-2.0 * c + margin);
        candidates.extend(taus.into_iter().map(|t| (c + t, t)));
    }

    let mut found: Vec<TransportParams> = candidates
        .into_iter()
        .filter_map(|(e, t)| {
            let e = if e < 0.0 && e >= -tol { 0.0 } else { e };
            let t = if t < 0.0 && t >= -tol { 0.0 } else { t };
            let p = TransportParams::new(e, t);
            p.check(tol).ok()?;
            let image = transport(from, p, tol).ok()?;
            diagram_equal(&image, to, tol).then_some(p)
        })
        .collect();
    found.sort_by(|a, b| a.epsilon.total_cmp(&b.epsilon).then(a.tau.total_cmp(&b.tau)));
    let mut out: Vec<TransportParams> = Vec::with_capacity(found.len());
    for p in found {
        if !out.iter().any(|q| q.distance(&p) <= tol) {
            out.push(p);
        }
    }
    out
}

fn admissible_choice(
    candidates: &[TransportParams],
    allow_identity: bool,
    tol: f64,
) -> Option<TransportParams> {
    candidates.iter().copied().find(|p| {
        p.tau + tol < 2.0 * p.epsilon || (allow_identity && p.epsilon <= tol && p.tau <= tol)
    })
}

/// Minimal-ε admissible parameters per step, or the first step without any.
pub fn is_admissible(vineyard: &Vineyard, allow_identity: bool, tol: f64) -> Result<Vec<TransportParams>> {
    let steps = vineyard.steps();
    let exec = Exec::default().at_least(steps, 4);
    let recovered = exec.map_range(steps, |i| {
        recover_params(&vineyard.diagrams[i], &vineyard.diagrams[i + 1], tol)
    });
    recovered
        .iter()
        .enumerate()
        .map(|(step, c)| admissible_choice(c, allow_identity, tol).ok_or(Error::Inadmissible { step }))
        .collect()
}

/// Builds `R_{i+1} = truncated_smooth(R_i, (ε_i, τ_i))` and checks every
/// graph against its diagram. Step indices in errors count transitions from 0.
pub fn realize(r0: &ReebGraph, vineyard: &Vineyard, options: RealizeOptions) -> Result<Realization> {
    let tol = options.tol;
    let vtol = options.verify_tol();
    let Some(d0) = vineyard.diagrams.first() else {
        return Ok(Realization {
            graphs: vec![r0.clone()],
            params: Vec::new(),
        });
    };
    if !diagram_equal(&extended_diagram(r0)?, d0, vtol) {
        return Err(Error::InitialMismatch);
    }
    let steps = vineyard.steps();
    if let Some(given) = &vineyard.params {
        if given.len() != steps {
            return Err(Error::ParamCount {
                expected: steps,
                got: given.len(),
            });
        }
    }
    let exec = Exec::default().at_least(steps, 4);
    let recovered = exec.map_range(steps, |i| {
        recover_params(&vineyard.diagrams[i], &vineyard.diagrams[i + 1], tol)
    });

    let mut graphs = vec![r0.clone()];
    let mut params = Vec::with_capacity(steps);
    for (step, found) in recovered.into_iter().enumerate() {
        let mut options_for_step: Vec<TransportParams> = found
            .into_iter()
            .filter(|p| admissible_choice(&[*p], options.allow_identity, tol).is_some())
            .collect();
        if let Some(given) = vineyard.params.as_ref().map(|g| g[step]) {
            options_for_step.insert(0, given);
        }
        if options_for_step.is_empty() {
            return Err(Error::Inadmissible { step });
        }
        let current = &graphs[step];
        let next = options_for_step.iter().find_map(|&p| {
            let g = truncated_smooth(current, p, tol).ok()?;
            let d = extended_diagram(&g).ok()?;
            diagram_equal(&d, &vineyard.diagrams[step + 1], vtol).then_some((g, p))
        });
        let Some((g, p)) = next else {
            return Err(Error::StepMismatch { step });
        };
        graphs.push(g);
        params.push(p);
    }
    Ok(Realization { graphs, params })
}

/// The graph at time `t` along one segment: truncated smoothing by
/// `(tε, tτ)`.
pub fn interpolate(r: &ReebGraph, params: TransportParams, t: f64, tol: f64) -> Result<ReebGraph> {
    if !(0.0..=1.0).contains(&t) {
        return Err(Error::TimeOutOfRange(t));
    }
    params.check(tol)?;
    truncated_smooth(r, params.scaled(t), tol)
}

#[derive(Debug, Clone, PartialEq)]
pub struct PathSample {
    pub time: f64,
    pub graph: ReebGraph,
    pub diagram: ExtendedDiagram,
}

/// `steps_per_segment + 1` samples per segment, endpoints included, at times
/// `i + j / steps_per_segment`.
pub fn sample_path(
    realization: &Realization,
    steps_per_segment: usize,
    tol: f64,
) -> Result<Vec<PathSample>> {
    let Some(first) = realization.graphs.first() else {
        return Ok(Vec::new());
    };
    if realization.params.is_empty() {
        return Ok(vec![PathSample {
            time: 0.0,
            graph: first.clone(),
            diagram: extended_diagram(first)?,
        }]);
    }
    let k = steps_per_segment.max(1);
    let jobs: Vec<(usize, usize)> = (0..realization.params.len())
        .flat_map(|i| (0..=k).map(move |j| (i, j)))
        .collect();
    let exec = Exec::default().at_least(jobs.len(), 8);
    exec.map(&jobs, |&(i, j)| {
        let t = j as f64 / k as f64;
        let graph = interpolate(&realization.graphs[i], realization.params[i], t, tol)?;
        let diagram = extended_diagram(&graph)?;
        Ok(PathSample {
            time: i as f64 + t,
            graph,
            diagram,
        })
    })
    .into_iter()
    .collect()
}
