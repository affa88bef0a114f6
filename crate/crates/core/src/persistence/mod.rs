//! Extended persistence diagrams of Reeb graphs.
//!
//! [`extended_diagram`] pairs vertices with three union-find sweeps:
//!
//! * ascending: a vertex merging sublevel components kills the younger ones,
//!   giving `Ord0` pairs (the higher of the two minima dies);
//! * descending: the mirror image on superlevel components, giving `Rel1`;
//! * per cycle-creating down fork, a descending sweep below the fork that
//!   finds the highest level at which its lower branches reconnect. That level
//!   is the value of the up fork closing the loop, giving `Ext1`.
//!
//! `Ext0` pairs each component's global minimum with its global maximum.
//!
//! Ties in value are broken by vertex id everywhere, so the sweeps see a total
//! order. [`extended_diagram_oracle`] computes the same diagram by reducing
//! the boundary matrix of the coned two-pass filtration over GF(2).

mod oracle;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{ensure_valid, Indexed, ReebGraph};
use crate::matching::hopcroft_karp;
use crate::union_find::DisjointSet;

pub use oracle::extended_diagram_oracle;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PairKind {
    Ext0,
    Ord0,
    Rel1,
    Ext1,
}

impl PairKind {
    pub const ALL: [PairKind; 4] = [PairKind::Ext0, PairKind::Ord0, PairKind::Rel1, PairKind::Ext1];

    pub fn as_str(self) -> &'static str {
        match self {
            PairKind::Ext0 => "ext0",
            PairKind::Ord0 => "ord0",
            PairKind::Rel1 => "rel1",
            PairKind::Ext1 => "ext1",
        }
    }

    pub(crate) fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for PairKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PairKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "ext0" => Ok(PairKind::Ext0),
            "ord0" => Ok(PairKind::Ord0),
            "rel1" => Ok(PairKind::Rel1),
            "ext1" => Ok(PairKind::Ext1),
            other => Err(format!("unknown pair kind `{other}`")),
        }
    }
}

/// A point of the extended diagram, stored as `(low, high)` with `low < high`
/// whatever its kind.
#[derive(Debug, Clone, PartialEq)]
pub struct PersistencePair {
    pub kind: PairKind,
    pub low: f64,
    pub high: f64,
    /// Ids of the vertices at `low` and `high` in the source graph.
    pub provenance: Option<(String, String)>,
}

impl PersistencePair {
    pub fn new(kind: PairKind, low: f64, high: f64) -> Self {
        Self {
            kind,
            low,
            high,
            provenance: None,
        }
    }

    pub fn with_provenance(mut self, low_vertex: &str, high_vertex: &str) -> Self {
        self.provenance = Some((low_vertex.to_owned(), high_vertex.to_owned()));
        self
    }

    /// L∞ distance to the diagonal.
    pub fn diagonal_distance(&self) -> f64 {
        (self.high - self.low) / 2.0
    }

    pub fn linf(&self, other: &PersistencePair) -> f64 {
        (self.low - other.low).abs().max((self.high - other.high).abs())
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct ExtendedDiagram {
    pub pairs: Vec<PersistencePair>,
}

impl ExtendedDiagram {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs(pairs: Vec<PersistencePair>) -> Self {
        Self { pairs }
    }

    pub fn from_tuples(points: &[(PairKind, f64, f64)]) -> Self {
        Self {
            pairs: points
                .iter()
                .map(|&(k, l, h)| PersistencePair::new(k, l, h))
                .collect(),
        }
    }

    pub fn push(&mut self, pair: PersistencePair) {
        self.pairs.push(pair);
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn of_kind(&self, kind: PairKind) -> impl Iterator<Item = &PersistencePair> + '_ {
        self.pairs.iter().filter(move |p| p.kind == kind)
    }

    pub fn count(&self, kind: PairKind) -> usize {
        self.of_kind(kind).count()
    }

    /// Indices of the pairs of each kind, in `PairKind::ALL` order.
    pub(crate) fn indices_by_kind(&self) -> [Vec<usize>; 4] {
        let mut out: [Vec<usize>; 4] = Default::default();
        for (i, p) in self.pairs.iter().enumerate() {
            out[p.kind.index()].push(i);
        }
        out
    }

    /// Canonical order: by kind, then low, then high.
    pub fn sorted(&self) -> ExtendedDiagram {
        let mut pairs = self.pairs.clone();
        pairs.sort_by(|a, b| {
            a.kind
                .cmp(&b.kind)
                .then(a.low.total_cmp(&b.low))
                .then(a.high.total_cmp(&b.high))
        });
        ExtendedDiagram { pairs }
    }

    /// Sorted multiset of all coordinates.
    pub fn coordinates(&self) -> Vec<f64> {
        let mut v: Vec<f64> = self.pairs.iter().flat_map(|p| [p.low, p.high]).collect();
        v.sort_by(f64::total_cmp);
        v
    }

    /// Drops provenance, e.g. before comparing diagrams of different graphs.
    pub fn without_provenance(&self) -> ExtendedDiagram {
        ExtendedDiagram {
            pairs: self
                .pairs
                .iter()
                .map(|p| PersistencePair::new(p.kind, p.low, p.high))
                .collect(),
        }
    }
}

pub fn extended_diagram(graph: &ReebGraph) -> Result<ExtendedDiagram> {
    ensure_valid(graph)?;
    let ix = Indexed::new(graph);
    let mut diagram = ExtendedDiagram::new();
    let births = ordinary_sweep(&ix, &mut diagram);
    relative_sweep(&ix, &mut diagram);
    extended_components(&ix, &mut diagram);
    for (v, &born) in births.iter().enumerate() {
        if born > 0 {
            for a in loop_partners(&ix, v, born) {
                diagram.push(
                    PersistencePair::new(PairKind::Ext1, ix.values[a], ix.values[v])
                        .with_provenance(&ix.ids[a], &ix.ids[v]),
                );
            }
        }
    }
    Ok(diagram.sorted())
}

/// Ascending sweep emitting `Ord0` pairs. Returns, per vertex, the number of
/// independent cycles it closes.
fn ordinary_sweep(ix: &Indexed, diagram: &mut ExtendedDiagram) -> Vec<usize> {
    let n = ix.len();
    let mut ds = DisjointSet::new(n);
    let mut oldest = (0..n).collect::<Vec<_>>();
    let mut cycles = vec![0; n];
    #[allow(clippy::needless_range_loop)]
    for v in 0..n {
        let mut roots: Vec<usize> = ix.down[v].iter().map(|&u| ds.find(u)).collect();
        roots.sort_unstable();
        roots.dedup();
        cycles[v] = ix.down[v].len() - roots.len();
        if roots.is_empty() {
            continue;
        }
        roots.sort_by_key(|&r| oldest[r]);
        let elder = oldest[roots[0]];
        for &r in &roots[1..] {
            let m = oldest[r];
            if ix.values[m] < ix.values[v] {
                diagram.push(
                    PersistencePair::new(PairKind::Ord0, ix.values[m], ix.values[v])
                        .with_provenance(&ix.ids[m], &ix.ids[v]),
                );
            }
        }
        for &r in &roots {
            ds.union(r, v);
        }
        let root = ds.find(v);
        oldest[root] = elder;
    }
    cycles
}

/// Descending sweep emitting `Rel1` pairs: an up fork kills the lower of the
/// maxima it joins.
fn relative_sweep(ix: &Indexed, diagram: &mut ExtendedDiagram) {
    let n = ix.len();
    let mut ds = DisjointSet::new(n);
    let mut oldest = (0..n).collect::<Vec<_>>();
    for v in (0..n).rev() {
        let mut roots: Vec<usize> = ix.up[v].iter().map(|&w| ds.find(w)).collect();
        roots.sort_unstable();
        roots.dedup();
        if roots.is_empty() {
            continue;
        }
        roots.sort_by_key(|&r| std::cmp::Reverse(oldest[r]));
        let elder = oldest[roots[0]];
        for &r in &roots[1..] {
            let m = oldest[r];
            if ix.values[v] < ix.values[m] {
                diagram.push(
                    PersistencePair::new(PairKind::Rel1, ix.values[v], ix.values[m])
                        .with_provenance(&ix.ids[v], &ix.ids[m]),
                );
            }
        }
        for &r in &roots {
            ds.union(r, v);
        }
        let root = ds.find(v);
        oldest[root] = elder;
    }
}

fn extended_components(ix: &Indexed, diagram: &mut ExtendedDiagram) {
    let n = ix.len();
    let mut ds = DisjointSet::new(n);
    for &(a, b, _) in &ix.edges {
        ds.union(a, b);
    }
    let mut lowest = vec![usize::MAX; n];
    let mut highest = vec![0usize; n];
    for v in 0..n {
        let r = ds.find(v);
        lowest[r] = lowest[r].min(v);
        highest[r] = highest[r].max(v);
    }
    for r in 0..n {
        if ds.find(r) != r {
            continue;
        }
        let (lo, hi) = (lowest[r], highest[r]);
        if ix.values[lo] < ix.values[hi] {
            diagram.push(
                PersistencePair::new(PairKind::Ext0, ix.values[lo], ix.values[hi])
                    .with_provenance(&ix.ids[lo], &ix.ids[hi]),
            );
        }
    }
}

/// Partners of the `births` cycles closed at `v`, highest first.
///
/// Grows the induced subgraph on `[a, v)` downward from `v`. The number of
/// independent cycles through `v` inside `[a, v]` is the number of lower
/// edges of `v` landing in the subgraph minus the number of distinct
/// components they land in; each increment is a cycle whose lowest vertex is
/// `a`.
fn loop_partners(ix: &Indexed, v: usize, births: usize) -> Vec<usize> {
    let mut endpoint_mult = vec![0usize; v];
    for &u in &ix.down[v] {
        endpoint_mult[u] += 1;
    }
    let mut ds = DisjointSet::new(v);
    let mut has_endpoint = vec![false; v];
    let mut added = vec![false; v];
    let (mut edges_in, mut comps) = (0usize, 0usize);
    let mut found = Vec::with_capacity(births);
    for a in (0..v).rev() {
        added[a] = true;
        if endpoint_mult[a] > 0 {
            edges_in += endpoint_mult[a];
            comps += 1;
            has_endpoint[a] = true;
        }
        for &w in &ix.up[a] {
            if w >= v || !added[w] {
                continue;
            }
            let (ra, rw) = (ds.find(a), ds.find(w));
            if ra == rw {
                continue;
            }
            let both = has_endpoint[ra] && has_endpoint[rw];
            let either = has_endpoint[ra] || has_endpoint[rw];
            ds.union(ra, rw);
            let r = ds.find(a);
            has_endpoint[r] = either;
            if both {
                comps -= 1;
            }
        }
        let total = edges_in - comps;
        while found.len() < total {
            found.push(a);
        }
        if found.len() == births {
            break;
        }
    }
    found
}

/// Values of the up forks closing loops at down fork `id`, highest first.
/// Empty when the fork is ordinary.
pub fn ext1_partners(graph: &ReebGraph, id: &str) -> Result<Vec<f64>> {
    ensure_valid(graph)?;
    let ix = Indexed::new(graph);
    let v = ix
        .ids
        .iter()
        .position(|x| x == id)
        .ok_or_else(|| Error::UnknownVertex(id.to_owned()))?;
    if ix.down[v].len() < 2 {
        return Err(Error::NotDownFork(id.to_owned()));
    }
    let mut ds = DisjointSet::new(ix.len());
    for &(a, b, _) in &ix.edges {
        if b < v {
            ds.union(a, b);
        }
    }
    let mut roots: Vec<usize> = ix.down[v].iter().map(|&u| ds.find(u)).collect();
    roots.sort_unstable();
    roots.dedup();
    let births = ix.down[v].len() - roots.len();
    if births == 0 {
        return Ok(Vec::new());
    }
    Ok(loop_partners(&ix, v, births)
        .into_iter()
        .map(|a| ix.values[a])
        .collect())
}

/// Max-bottleneck level joining the lower branches of down fork `id`, or
/// `None` if the fork is ordinary.
pub fn ext1_partner(graph: &ReebGraph, id: &str) -> Result<Option<f64>> {
    Ok(ext1_partners(graph, id)?.first().copied())
}

/// True when, kind by kind, the diagrams admit a bijection moving no
/// coordinate by more than `tol`.
pub fn diagram_equal(d1: &ExtendedDiagram, d2: &ExtendedDiagram, tol: f64) -> bool {
    let (k1, k2) = (d1.indices_by_kind(), d2.indices_by_kind());
    for kind in PairKind::ALL {
        let (a, b) = (&k1[kind.index()], &k2[kind.index()]);
        if a.len() != b.len() {
            return false;
        }
        let adj: Vec<Vec<usize>> = a
            .iter()
            .map(|&i| {
                (0..b.len())
                    .filter(|&j| d1.pairs[i].linf(&d2.pairs[b[j]]) <= tol)
                    .collect()
            })
            .collect();
        if hopcroft_karp(&adj, b.len()).iter().any(Option::is_none) {
            return false;
        }
    }
    true
}
