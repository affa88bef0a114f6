//! Type-preserving bottleneck distance.
//!
//! Each kind is solved separately. The optimal radius is one of the pairwise
//! L∞ distances or diagonal distances, so a binary search over those
//! candidates with a perfect-matching feasibility test is exact. The
//! feasibility graph is the usual diagonal-augmented one: left side `A ∪ B'`,
//! right side `B ∪ A'`, where primed copies stand for diagonal projections.

use crate::matching::hopcroft_karp;
use crate::par::Exec;
use crate::persistence::{ExtendedDiagram, PairKind, PersistencePair};

/// One entry of a matching between two diagrams. Indices refer to
/// `ExtendedDiagram::pairs` of the left and right diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Assignment {
    Pair { kind: PairKind, left: usize, right: usize },
    LeftToDiagonal(usize),
    RightToDiagonal(usize),
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Matching {
    pub assignments: Vec<Assignment>,
    pub cost: f64,
}

impl Matching {
    /// Cost of the matching between `left` and `right`, or `None` if it is
    /// not a valid type-preserving matching of the two diagrams.
    pub fn evaluate(&self, left: &ExtendedDiagram, right: &ExtendedDiagram) -> Option<f64> {
        let mut seen_l = vec![false; left.len()];
        let mut seen_r = vec![false; right.len()];
        let mut cost: f64 = 0.0;
        for a in &self.assignments {
            match *a {
                Assignment::Pair { kind, left: i, right: j } => {
                    mark(&mut seen_l, i)?;
                    mark(&mut seen_r, j)?;
                    let (p, q) = (&left.pairs[i], &right.pairs[j]);
                    if p.kind != kind || q.kind != kind {
                        return None;
                    }
                    cost = cost.max(p.linf(q));
                }
                Assignment::LeftToDiagonal(i) => {
                    mark(&mut seen_l, i)?;
                    cost = cost.max(left.pairs[i].diagonal_distance());
                }
                Assignment::RightToDiagonal(j) => {
                    mark(&mut seen_r, j)?;
                    cost = cost.max(right.pairs[j].diagonal_distance());
                }
            }
        }
        (seen_l.iter().all(|&s| s) && seen_r.iter().all(|&s| s)).then_some(cost)
    }
}

/// Marks index `i` as used; `None` if it is out of range or already used.
fn mark(seen: &mut [bool], i: usize) -> Option<()> {
    let slot = seen.get_mut(i)?;
    if *slot {
        return None;
    }
    *slot = true;
    Some(())
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct BottleneckResult {
    pub distance: f64,
    pub matching: Matching,
}

pub fn bottleneck(d1: &ExtendedDiagram, d2: &ExtendedDiagram) -> BottleneckResult {
    let total = d1.len() + d2.len();
    bottleneck_with(d1, d2, Exec::default().at_least(total, 64))
}

/// [`bottleneck`] with an explicit strategy for the per-kind subproblems.
pub fn bottleneck_with(d1: &ExtendedDiagram, d2: &ExtendedDiagram, exec: Exec) -> BottleneckResult {
    let (k1, k2) = (d1.indices_by_kind(), d2.indices_by_kind());
    let parts = exec.map(&PairKind::ALL, |&kind| {
        let i = kind as usize;
        per_kind(d1, d2, &k1[i], &k2[i], kind)
    });
    let mut result = BottleneckResult::default();
    for (distance, assignments) in parts {
        result.distance = result.distance.max(distance);
        result.matching.assignments.extend(assignments);
    }
    result.matching.cost = result.distance;
    result
}

fn per_kind(
    d1: &ExtendedDiagram,
    d2: &ExtendedDiagram,
    left: &[usize],
    right: &[usize],
    kind: PairKind,
) -> (f64, Vec<Assignment>) {
    let a: Vec<&PersistencePair> = left.iter().map(|&i| &d1.pairs[i]).collect();
    let b: Vec<&PersistencePair> = right.iter().map(|&j| &d2.pairs[j]).collect();
    if a.is_empty() && b.is_empty() {
        return (0.0, Vec::new());
    }
    let mut candidates = vec![0.0];
    candidates.extend(a.iter().map(|p| p.diagonal_distance()));
    candidates.extend(b.iter().map(|q| q.diagonal_distance()));
    for p in &a {
        candidates.extend(b.iter().map(|q| p.linf(q)));
    }
    candidates.sort_by(f64::total_cmp);
    candidates.dedup();

    // Everything to the diagonal is feasible at the largest candidate.
    let (mut lo, mut hi) = (0, candidates.len() - 1);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if feasible(&a, &b, candidates[mid]).is_some() {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    let r = candidates[lo];
    let matched = feasible(&a, &b, r).expect("largest candidate is always feasible");
    let (n, m) = (a.len(), b.len());
    let mut assignments = Vec::with_capacity(n + m);
    for (i, &j) in matched.iter().enumerate() {
        match (i < n, j < m) {
            (true, true) => assignments.push(Assignment::Pair {
                kind,
                left: left[i],
                right: right[j],
            }),
            (true, false) => assignments.push(Assignment::LeftToDiagonal(left[i])),
            (false, true) => assignments.push(Assignment::RightToDiagonal(right[j])),
            (false, false) => {}
        }
    }
    (r, assignments)
}

/// Perfect matching of the augmented graph at radius `r`, as the right
/// partner of each left vertex.
fn feasible(a: &[&PersistencePair], b: &[&PersistencePair], r: f64) -> Option<Vec<usize>> {
    let (n, m) = (a.len(), b.len());
    let mut adj = vec![Vec::new(); n + m];
    for (i, p) in a.iter().enumerate() {
        for (j, q) in b.iter().enumerate() {
            if p.linf(q) <= r {
                adj[i].push(j);
            }
        }
        if p.diagonal_distance() <= r {
            adj[i].push(m + i);
        }
    }
    for (j, q) in b.iter().enumerate() {
        if q.diagonal_distance() <= r {
            adj[n + j].push(j);
        }
        adj[n + j].extend(m..m + n);
    }
    hopcroft_karp(&adj, n + m).into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use PairKind::*;

    #[test]
    fn identical_diagrams() {
        let d = ExtendedDiagram::from_tuples(&[(Ext0, 0.0, 4.0), (Ext1, 1.0, 3.0), (Ext1, 1.5, 2.0)]);
        let r = bottleneck(&d, &d);
        assert_eq!(r.distance, 0.0);
        assert_eq!(r.matching.evaluate(&d, &d), Some(0.0));
        for a in &r.matching.assignments {
            assert!(matches!(a, Assignment::Pair { left, right, .. } if left == right));
        }
    }

    #[test]
    fn cross_pair_beats_diagonal() {
        let d1 = ExtendedDiagram::from_tuples(&[(Ext0, 0.0, 1.0)]);
        let d2 = ExtendedDiagram::from_tuples(&[(Ext0, 0.0, 1.5)]);
        assert_eq!(bottleneck(&d1, &d2).distance, 0.5);
    }

    #[test]
    fn unmatched_point_goes_to_diagonal() {
        let d1 = ExtendedDiagram::from_tuples(&[(Ord0, 1.0, 2.0)]);
        let r = bottleneck(&d1, &ExtendedDiagram::new());
        assert_eq!(r.distance, 0.5);
        assert_eq!(r.matching.assignments, vec![Assignment::LeftToDiagonal(0)]);
    }

    #[test]
    fn kinds_never_cross() {
        let d1 = ExtendedDiagram::from_tuples(&[(Ord0, 0.0, 10.0)]);
        let d2 = ExtendedDiagram::from_tuples(&[(Rel1, 0.0, 10.0)]);
        assert_eq!(bottleneck(&d1, &d2).distance, 5.0);
    }

    #[test]
    fn strategies_agree() {
        let d1 = ExtendedDiagram::from_tuples(&[(Ord0, 0.0, 3.0), (Ext1, 1.0, 4.0), (Rel1, 2.0, 2.5)]);
        let d2 = ExtendedDiagram::from_tuples(&[(Ord0, 0.5, 3.0), (Ext1, 1.0, 6.0)]);
        let s = bottleneck_with(&d1, &d2, Exec::Sequential);
        let p = bottleneck_with(&d1, &d2, Exec::Parallel);
        assert_eq!(s, p);
        assert_eq!(s.matching.evaluate(&d1, &d2), Some(s.distance));
    }
}
