//! Static SVG rendering of diagrams and graphs.
//!
//! Output depends only on the input, so equal inputs give byte-identical
//! files. Coordinates are printed with three decimals.

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::graph::{classify, ReebGraph};
use crate::persistence::{ExtendedDiagram, PairKind};

const SIZE: f64 = 480.0;
const MARGIN: f64 = 48.0;

struct Frame {
    lo: f64,
    hi: f64,
}

impl Frame {
    fn new(values: impl Iterator<Item = f64>) -> Self {
        let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
        for v in values {
            lo = lo.min(v);
            hi = hi.max(v);
        }
        if !lo.is_finite() {
            (lo, hi) = (0.0, 1.0);
        }
        let pad = ((hi - lo) * 0.05).max(0.5);
        Frame {
            lo: lo - pad,
            hi: hi + pad,
        }
    }

    fn x(&self, v: f64) -> f64 {
        MARGIN + (v - self.lo) / (self.hi - self.lo) * (SIZE - 2.0 * MARGIN)
    }

    fn y(&self, v: f64) -> f64 {
        SIZE - self.x(v)
    }
}

fn header(out: &mut String, title: &str) {
    writeln!(
        out,
        r#"<?xml version="1.0" encoding="UTF-8"?>
<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">
<title>{title}</title>
<rect x="0" y="0" width="{SIZE}" height="{SIZE}" fill="white"/>"#
    )
    .unwrap();
}

fn axes(out: &mut String, frame: &Frame) {
    let (a, b) = (MARGIN, SIZE - MARGIN);
    writeln!(
        out,
        r#"<g class="axes" stroke="black" stroke-width="1">
<line x1="{a:.3}" y1="{b:.3}" x2="{b:.3}" y2="{b:.3}"/>
<line x1="{a:.3}" y1="{b:.3}" x2="{a:.3}" y2="{a:.3}"/>
</g>
<text x="{a:.3}" y="{:.3}" font-size="11">{:.3}</text>
<text x="{:.3}" y="{:.3}" font-size="11" text-anchor="end">{:.3}</text>"#,
        b + 16.0,
        frame.lo,
        b,
        b + 16.0,
        frame.hi,
    )
    .unwrap();
}

fn marker(kind: PairKind, x: f64, y: f64) -> String {
    let r = 5.0;
    match kind {
        PairKind::Ext0 => format!(r#"<circle class="ext0" cx="{x:.3}" cy="{y:.3}" r="{r:.3}"/>"#),
        PairKind::Ord0 => format!(
            r#"<rect class="ord0" x="{:.3}" y="{:.3}" width="{:.3}" height="{:.3}"/>"#,
            x - r,
            y - r,
            2.0 * r,
            2.0 * r
        ),
        PairKind::Rel1 => format!(
            r#"<polygon class="rel1" points="{:.3},{:.3} {:.3},{:.3} {:.3},{:.3}"/>"#,
            x,
            y - r,
            x + r,
            y + r,
            x - r,
            y + r
        ),
        PairKind::Ext1 => format!(
            r#"<polygon class="ext1" points="{:.3},{:.3} {:.3},{:.3} {:.3},{:.3} {:.3},{:.3}"/>"#,
            x,
            y - r,
            x + r,
            y,
            x,
            y + r,
            x - r,
            y
        ),
    }
}

fn fill(kind: PairKind) -> &'static str {
    match kind {
        PairKind::Ext0 => "#1f77b4",
        PairKind::Ord0 => "#2ca02c",
        PairKind::Rel1 => "#d62728",
        PairKind::Ext1 => "#9467bd",
    }
}

/// Scatter of `(low, high)` with one marker shape per kind and the diagonal.
pub fn plot_diagram(diagram: &ExtendedDiagram) -> String {
    let frame = Frame::new(diagram.coordinates().into_iter());
    let mut out = String::new();
    header(&mut out, "extended persistence diagram");
    axes(&mut out, &frame);
    writeln!(
        out,
        r#"<line class="diagonal" x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="gray" stroke-dasharray="4 3"/>"#,
        frame.x(frame.lo),
        frame.y(frame.lo),
        frame.x(frame.hi),
        frame.y(frame.hi)
    )
    .unwrap();
    for kind in PairKind::ALL {
        writeln!(out, r#"<g fill="{}">"#, fill(kind)).unwrap();
        for p in diagram.sorted().of_kind(kind) {
            out.push_str(&marker(kind, frame.x(p.low), frame.y(p.high)));
            out.push('\n');
        }
        out.push_str("</g>\n");
    }
    out.push_str("</svg>\n");
    out
}

/// Horizontal slot of each vertex: start from the canonical order, then
/// alternate neighbour averaging with re-ranking.
fn layout(graph: &ReebGraph) -> BTreeMap<String, f64> {
    let order = graph.canonical_order();
    let n = order.len();
    let mut x: BTreeMap<&str, f64> = order.iter().enumerate().map(|(i, &id)| (id, i as f64)).collect();
    let mut nbrs: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
    for (a, b, m) in graph.edges() {
        for _ in 0..m {
            nbrs.entry(a).or_default().push(b);
            nbrs.entry(b).or_default().push(a);
        }
    }
    for _ in 0..12 {
        let avg: BTreeMap<&str, f64> = order
            .iter()
            .map(|&id| {
                let ns = nbrs.get(id).map(Vec::as_slice).unwrap_or(&[]);
                let sum: f64 = ns.iter().map(|w| x[w]).sum::<f64>() + x[id];
                (id, sum / (ns.len() + 1) as f64)
            })
            .collect();
        let mut ranked: Vec<&str> = order.clone();
        ranked.sort_by(|a, b| avg[a].total_cmp(&avg[b]).then(a.cmp(b)));
        for (i, id) in ranked.into_iter().enumerate() {
            x.insert(id, i as f64);
        }
    }
    let span = (n.max(2) - 1) as f64;
    x.into_iter()
        .map(|(id, v)| (id.to_owned(), MARGIN + v / span * (SIZE - 2.0 * MARGIN)))
        .collect()
}

/// Graph drawing with height equal to function value.
pub fn plot_graph(graph: &ReebGraph) -> String {
    let frame = Frame::new(graph.vertices().map(|(_, v)| v));
    let xs = layout(graph);
    let mut out = String::new();
    header(&mut out, "Reeb graph");
    out.push_str(r#"<g class="edges" fill="none" stroke="black" stroke-width="1.5">"#);
    out.push('\n');
    for (a, b, m) in graph.edges() {
        let (Some(fa), Some(fb)) = (graph.value(a), graph.value(b)) else {
            continue;
        };
        let (x1, y1, x2, y2) = (xs[a], frame.y(fa), xs[b], frame.y(fb));
        for k in 0..m {
            let bend = (k as f64 - (m as f64 - 1.0) / 2.0) * 24.0;
            writeln!(
                out,
                r#"<path d="M {x1:.3} {y1:.3} Q {:.3} {:.3} {x2:.3} {y2:.3}"/>"#,
                (x1 + x2) / 2.0 + bend,
                (y1 + y2) / 2.0
            )
            .unwrap();
        }
    }
    out.push_str("</g>\n<g class=\"vertices\">\n");
    for (id, value) in graph.vertices() {
        let class = match classify(graph, id) {
            Ok(c) if c.is_local_min() => "min",
            Ok(c) if c.is_local_max() => "max",
            Ok(c) if c.is_up_fork() || c.is_down_fork() => "fork",
            _ => "regular",
        };
        writeln!(
            out,
            r#"<circle class="{class}" cx="{:.3}" cy="{:.3}" r="4"><title>{id} {value}</title></circle>"#,
            xs[id],
            frame.y(value)
        )
        .unwrap();
    }
    out.push_str("</g>\n</svg>\n");
    out
}
