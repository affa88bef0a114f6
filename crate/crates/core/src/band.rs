//! Connected components of interval preimages `f⁻¹([l, r])`.
//!
//! The elements of a band are the vertices with value in `[l, r]` and the
//! edges whose value span meets `[l, r]`. An edge is joined to an endpoint
//! exactly when that endpoint lies in the band; an edge crossing the whole
//! band is a component on its own.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{ensure_valid, Indexed, ReebGraph};
use crate::union_find::DisjointSet;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum BandElement {
    Vertex(String),
    /// One copy of a (possibly parallel) edge, endpoints ordered by value.
    Edge {
        lower: String,
        upper: String,
        copy: usize,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct BandPartition {
    pub l: f64,
    pub r: f64,
    pub elements: Vec<BandElement>,
    /// Component label of each element, numbered by first appearance.
    pub labels: Vec<usize>,
    pub count: usize,
}

impl BandPartition {
    pub fn component_of(&self, element: &BandElement) -> Option<usize> {
        self.elements
            .iter()
            .position(|e| e == element)
            .map(|i| self.labels[i])
    }
}

/// Component labels over the dense element space of an [`Indexed`] graph:
/// vertices first, then edges in `ix.edges` order.
#[derive(Debug, Clone)]
pub(crate) struct BandLabels {
    pub labels: Vec<Option<usize>>,
    pub count: usize,
}

impl BandLabels {
    /// Label of one representative element per component.
    pub fn representatives(&self) -> Vec<usize> {
        let mut reps = vec![usize::MAX; self.count];
        for (i, l) in self.labels.iter().enumerate() {
            if let Some(l) = *l {
                if reps[l] == usize::MAX {
                    reps[l] = i;
                }
            }
        }
        reps
    }
}

pub(crate) fn band_labels(ix: &Indexed, l: f64, r: f64, tol: f64) -> BandLabels {
    let n = ix.len();
    let (lo, hi) = (l - tol, r + tol);
    // Vertices are sorted by value, so the band's vertices are a contiguous run.
    let first = ix.values.partition_point(|&v| v < lo);
    let last = ix.values.partition_point(|&v| v <= hi);
    let mut inside = vec![false; n + ix.edges.len()];
    for flag in &mut inside[first..last] {
        *flag = true;
    }
    let mut ds = DisjointSet::new(n + ix.edges.len());
    for (e, &(a, b, _)) in ix.edges.iter().enumerate() {
        if ix.values[a] > hi || ix.values[b] < lo {
            continue;
        }
        inside[n + e] = true;
        if inside[a] {
            ds.union(n + e, a);
        }
        if inside[b] {
            ds.union(n + e, b);
        }
    }
    let mut root_label = BTreeMap::new();
    let mut labels = vec![None; inside.len()];
    for (i, &ins) in inside.iter().enumerate() {
        if ins {
            let root = ds.find(i);
            let next = root_label.len();
            labels[i] = Some(*root_label.entry(root).or_insert(next));
        }
    }
    BandLabels {
        labels,
        count: root_label.len(),
    }
}

pub fn band_components(graph: &ReebGraph, l: f64, r: f64, tol: f64) -> Result<BandPartition> {
    if l > r {
        return Err(Error::ReversedBand { l, r });
    }
    ensure_valid(graph)?;
    let ix = Indexed::new(graph);
    let bl = band_labels(&ix, l, r, tol);
    let n = ix.len();
    let mut elements = Vec::new();
    let mut labels = Vec::new();
    for (i, label) in bl.labels.iter().enumerate() {
        let Some(label) = *label else { continue };
        let element = if i < n {
            BandElement::Vertex(ix.ids[i].clone())
        } else {
            let (a, b, copy) = ix.edges[i - n];
            BandElement::Edge {
                lower: ix.ids[a].clone(),
                upper: ix.ids[b].clone(),
                copy,
            }
        };
        elements.push(element);
        labels.push(label);
    }
    Ok(BandPartition {
        l,
        r,
        elements,
        labels,
        count: bl.count,
    })
}

/// Maps each component of `inner` to the component of `outer` containing it.
/// Both partitions must come from the same graph.
pub fn band_inclusion(inner: &BandPartition, outer: &BandPartition, tol: f64) -> Result<Vec<usize>> {
    if inner.l < outer.l - tol || inner.r > outer.r + tol {
        return Err(Error::NotNested {
            inner_l: inner.l,
            inner_r: inner.r,
            outer_l: outer.l,
            outer_r: outer.r,
        });
    }
    let outer_label: BTreeMap<&BandElement, usize> =
        outer.elements.iter().zip(outer.labels.iter().copied()).collect();
    let mut map = vec![usize::MAX; inner.count];
    for (element, &label) in inner.elements.iter().zip(&inner.labels) {
        if map[label] == usize::MAX {
            map[label] = *outer_label
                .get(element)
                .expect("element of nested band missing from enclosing band");
        }
    }
    Ok(map)
}
