//! Extended persistence by boundary matrix reduction over GF(2).
//!
//! The filtration first inserts vertices in `(value, id)` order, each
//! followed by the edges it tops. It then cones off superlevel sets in
//! descending order: a cone edge `(ω, u)` per vertex, then a cone triangle
//! `(ω, x, y)` for every edge whose lower endpoint is `u`. The cone vertex ω
//! comes first and is the one essential class.

use super::{ExtendedDiagram, PairKind, PersistencePair};
use crate::error::Result;
use crate::graph::{ensure_valid, Indexed, ReebGraph};

#[derive(Debug, Clone, Copy, PartialEq)]
enum Cell {
    Apex,
    Vertex,
    Edge,
    ConeEdge,
    ConeTriangle,
}

pub fn extended_diagram_oracle(graph: &ReebGraph) -> Result<ExtendedDiagram> {
    ensure_valid(graph)?;
    let ix = Indexed::new(graph);
    let n = ix.len();

    let mut cells = vec![Cell::Apex];
    let mut values = vec![f64::NEG_INFINITY];
    let mut columns: Vec<Vec<usize>> = vec![Vec::new()];
    let mut vertex_pos = vec![0; n];
    let mut edge_pos = vec![0; ix.edges.len()];

    let mut e = 0;
    for v in 0..n {
        vertex_pos[v] = cells.len();
        cells.push(Cell::Vertex);
        values.push(ix.values[v]);
        columns.push(Vec::new());
        while e < ix.edges.len() && ix.edges[e].1 == v {
            let lo = ix.edges[e].0;
            edge_pos[e] = cells.len();
            cells.push(Cell::Edge);
            values.push(ix.values[v]);
            columns.push(vec![vertex_pos[lo], vertex_pos[v]]);
            e += 1;
        }
    }

    let mut cone_pos = vec![0; n];
    for u in (0..n).rev() {
        cone_pos[u] = cells.len();
        cells.push(Cell::ConeEdge);
        values.push(ix.values[u]);
        columns.push(vec![0, vertex_pos[u]]);
        for (k, &(lo, hi, _)) in ix.edges.iter().enumerate() {
            if lo != u {
                continue;
            }
            let mut boundary = vec![cone_pos[lo], cone_pos[hi], edge_pos[k]];
            boundary.sort_unstable();
            cells.push(Cell::ConeTriangle);
            values.push(ix.values[u]);
            columns.push(boundary);
        }
    }

    let mut pivot_owner: Vec<Option<usize>> = vec![None; cells.len()];
    let mut diagram = ExtendedDiagram::new();
    for j in 0..columns.len() {
        while let Some(&pivot) = columns[j].last() {
            match pivot_owner[pivot] {
                Some(k) => {
                    let reduced = symmetric_difference(&columns[j], &columns[k]);
                    columns[j] = reduced;
                }
                None => break,
            }
        }
        let Some(&birth) = columns[j].last() else {
            continue;
        };
        pivot_owner[birth] = Some(j);
        let (kind, low, high) = match (cells[birth], cells[j]) {
            (Cell::Vertex, Cell::Edge) => (PairKind::Ord0, values[birth], values[j]),
            (Cell::Vertex, Cell::ConeEdge) => (PairKind::Ext0, values[birth], values[j]),
            (Cell::Edge, Cell::ConeTriangle) => (PairKind::Ext1, values[j], values[birth]),
            (Cell::ConeEdge, Cell::ConeTriangle) => (PairKind::Rel1, values[j], values[birth]),
            (b, d) => unreachable!("unexpected pairing {b:?} / {d:?}"),
        };
        if low < high {
            diagram.push(PersistencePair::new(kind, low, high));
        }
    }
    Ok(diagram.sorted())
}

fn symmetric_difference(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}
