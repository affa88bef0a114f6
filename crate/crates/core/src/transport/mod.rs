//! The diagram-side counterpart of truncated smoothing, bottleneck distance
//! and shift matchings.
//!
//! Under `(ε, τ)` every point moves by a translation that depends only on its
//! kind (see [`ShiftVector::for_kind`]) and is removed when it reaches the
//! diagonal.

mod bottleneck;

pub use bottleneck::{bottleneck, bottleneck_with, Assignment, BottleneckResult, Matching};

use crate::error::{Error, Result};
use crate::persistence::{ExtendedDiagram, PairKind, PersistencePair};
use crate::smoothing::TransportParams;

/// Translation `(dx, dy)` applied to `(low, high)`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ShiftVector {
    pub dx: f64,
    pub dy: f64,
}

impl ShiftVector {
    pub fn new(dx: f64, dy: f64) -> Self {
        Self { dx, dy }
    }

    pub fn magnitude(&self) -> f64 {
        self.dx.abs().max(self.dy.abs())
    }

    /// Displacement of a point of `kind` under truncated smoothing.
    pub fn for_kind(kind: PairKind, params: TransportParams) -> Self {
        let TransportParams { epsilon: e, tau: t } = params;
        match kind {
            PairKind::Ext0 => Self::new(-e + t, e - t),
            PairKind::Ord0 => Self::new(-e + t, -e),
            PairKind::Rel1 => Self::new(e, e - t),
            PairKind::Ext1 => Self::new(e, -e),
        }
    }

    fn apply(&self, pair: &PersistencePair) -> PersistencePair {
        PersistencePair::new(pair.kind, pair.low + self.dx, pair.high + self.dy)
    }
}

/// Image of one point, or `None` when it is pushed onto or across the
/// diagonal (within `tol`).
pub fn transport_point(
    pair: &PersistencePair,
    params: TransportParams,
    tol: f64,
) -> Result<Option<PersistencePair>> {
    params.check(tol)?;
    let moved = ShiftVector::for_kind(pair.kind, params).apply(pair);
    Ok((moved.high - moved.low > tol).then_some(moved))
}

pub fn transport(
    diagram: &ExtendedDiagram,
    params: TransportParams,
    tol: f64,
) -> Result<ExtendedDiagram> {
    params.check(tol)?;
    let mut out = ExtendedDiagram::new();
    for p in &diagram.pairs {
        if let Some(q) = transport_point(p, params, tol)? {
            out.push(q);
        }
    }
    Ok(out.sorted())
}

fn single_kind(diagram: &ExtendedDiagram) -> Result<()> {
    match diagram.pairs.first() {
        Some(first) if diagram.pairs.iter().any(|p| p.kind != first.kind) => {
            Err(Error::MixedKinds)
        }
        _ => Ok(()),
    }
}

/// Half the smallest of: any point's distance to the diagonal, and any two
/// points' L∞ distance. Infinite for the empty diagram.
pub fn shift_bound(diagram: &ExtendedDiagram) -> Result<f64> {
    single_kind(diagram)?;
    let pts = &diagram.pairs;
    let mut m = f64::INFINITY;
    for (i, x) in pts.iter().enumerate() {
        m = m.min(x.diagonal_distance());
        for y in &pts[i + 1..] {
            m = m.min(x.linf(y));
        }
    }
    Ok(m / 2.0)
}

/// Translates every point by `v`. Points landing on or across the diagonal
/// are dropped and matched to it; the others are matched to their images.
pub fn shift_diagram(
    diagram: &ExtendedDiagram,
    v: ShiftVector,
    tol: f64,
) -> Result<(ExtendedDiagram, Matching)> {
    single_kind(diagram)?;
    let mut shifted = ExtendedDiagram::new();
    let mut assignments = Vec::with_capacity(diagram.len());
    let mut cost: f64 = 0.0;
    for (i, p) in diagram.pairs.iter().enumerate() {
        let q = v.apply(p);
        if q.high - q.low > tol {
            cost = cost.max(p.linf(&q));
            assignments.push(Assignment::Pair {
                kind: p.kind,
                left: i,
                right: shifted.len(),
            });
            shifted.push(q);
        } else {
            cost = cost.max(p.diagonal_distance());
            assignments.push(Assignment::LeftToDiagonal(i));
        }
    }
    Ok((shifted, Matching { assignments, cost }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::persistence::diagram_equal;
    use crate::DEFAULT_TOL;
    use PairKind::*;

    fn g2_diagram() -> ExtendedDiagram {
        ExtendedDiagram::from_tuples(&[(Ext0, 0.0, 4.0), (Ext1, 1.0, 3.0)])
    }

    #[test]
    fn point_rows() {
        let (e, t) = (0.7, 0.4);
        let p = TransportParams::new(e, t);
        let (a, b) = (1.0, 9.0);
        let rows = [
            (Ext0, a - e + t, b + e - t),
            (Ord0, a - e + t, b - e),
            (Rel1, a + e, b + e - t),
            (Ext1, a + e, b - e),
        ];
        for (kind, low, high) in rows {
            let q = transport_point(&PersistencePair::new(kind, a, b), p, DEFAULT_TOL)
                .unwrap()
                .unwrap();
            assert_eq!(q.kind, kind);
            assert!((q.low - low).abs() < 1e-12 && (q.high - high).abs() < 1e-12);
        }
    }

    #[test]
    fn point_examples() {
        let q = transport_point(
            &PersistencePair::new(Ext1, 1.0, 3.0),
            TransportParams::new(0.5, 0.0),
            DEFAULT_TOL,
        )
        .unwrap()
        .unwrap();
        assert_eq!((q.low, q.high), (1.5, 2.5));
        let gone = transport_point(
            &PersistencePair::new(Ord0, 2.0, 3.0),
            TransportParams::new(1.0, 1.5),
            DEFAULT_TOL,
        )
        .unwrap();
        assert!(gone.is_none());
        // Exactly reaching the diagonal also removes the point.
        let gone = transport_point(
            &PersistencePair::new(Ext1, 1.0, 3.0),
            TransportParams::new(1.0, 0.0),
            DEFAULT_TOL,
        )
        .unwrap();
        assert!(gone.is_none());
    }

    #[test]
    fn diagram_examples() {
        let d = g2_diagram();
        let t = transport(&d, TransportParams::new(0.5, 0.0), DEFAULT_TOL).unwrap();
        let e = ExtendedDiagram::from_tuples(&[(Ext0, -0.5, 4.5), (Ext1, 1.5, 2.5)]);
        assert!(diagram_equal(&t, &e, 0.0));
        let t = transport(&d, TransportParams::new(1.2, 0.0), DEFAULT_TOL).unwrap();
        let e = ExtendedDiagram::from_tuples(&[(Ext0, -1.2, 5.2)]);
        assert!(diagram_equal(&t, &e, 0.0));
        let t = transport(&d, TransportParams::default(), DEFAULT_TOL).unwrap();
        assert!(diagram_equal(&t, &d, 0.0));
        assert!(transport(&d, TransportParams::new(0.5, 2.0), DEFAULT_TOL).is_err());
    }

    #[test]
    fn bound_examples() {
        let one = ExtendedDiagram::from_tuples(&[(Ord0, 0.0, 2.0)]);
        assert_eq!(shift_bound(&one).unwrap(), 0.5);
        let two = ExtendedDiagram::from_tuples(&[(Ord0, 0.0, 2.0), (Ord0, 0.0, 5.0)]);
        assert_eq!(shift_bound(&two).unwrap(), 0.5);
        assert_eq!(shift_bound(&ExtendedDiagram::new()).unwrap(), f64::INFINITY);
        let mixed = ExtendedDiagram::from_tuples(&[(Ord0, 0.0, 2.0), (Ext0, 0.0, 5.0)]);
        assert_eq!(shift_bound(&mixed), Err(Error::MixedKinds));
    }

    #[test]
    fn shift_examples() {
        let d = ExtendedDiagram::from_tuples(&[(Ord0, 0.0, 2.0)]);
        let (s, w) = shift_diagram(&d, ShiftVector::new(0.1, 0.1), DEFAULT_TOL).unwrap();
        assert!(diagram_equal(&s, &ExtendedDiagram::from_tuples(&[(Ord0, 0.1, 2.1)]), 1e-12));
        assert_eq!(
            w.assignments,
            vec![Assignment::Pair { kind: Ord0, left: 0, right: 0 }]
        );
        let (s, w) = shift_diagram(&d, ShiftVector::new(1.1, -1.1), DEFAULT_TOL).unwrap();
        assert!(s.is_empty());
        assert_eq!(w.assignments, vec![Assignment::LeftToDiagonal(0)]);
        let (s, w) = shift_diagram(&d, ShiftVector::default(), DEFAULT_TOL).unwrap();
        assert_eq!(s, d);
        assert_eq!(w.cost, 0.0);
    }

    #[test]
    fn shift_is_optimal_below_bound() {
        let d = ExtendedDiagram::from_tuples(&[(Rel1, 0.0, 2.0), (Rel1, 1.0, 6.0), (Rel1, 3.0, 4.5)]);
        let bound = shift_bound(&d).unwrap();
        let v = ShiftVector::new(-bound, 0.3 * bound);
        let (s, w) = shift_diagram(&d, v, DEFAULT_TOL).unwrap();
        let r = bottleneck(&d, &s);
        assert_eq!(r.distance, v.magnitude());
        assert_eq!(w.evaluate(&d, &s), Some(v.magnitude()));
    }
}
