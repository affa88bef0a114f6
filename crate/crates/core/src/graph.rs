//! Combinatorial Reeb graphs: a finite multigraph whose vertices carry real
//! function values, with every edge joining vertices of distinct value.
//!
//! Edges are unordered and stored with multiplicity, so a loop between one up
//! fork and one down fork is two parallel edges. The function is extended
//! linearly over each edge, which makes every edge monotone.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::union_find::DisjointSet;

#[derive(Debug, Clone, Default, PartialEq)]
pub struct ReebGraph {
    values: BTreeMap<String, f64>,
    // Keyed by (smaller id, larger id); value is the multiplicity.
    edges: BTreeMap<(String, String), usize>,
}

fn edge_key(a: &str, b: &str) -> (String, String) {
    if a <= b {
        (a.to_owned(), b.to_owned())
    } else {
        (b.to_owned(), a.to_owned())
    }
}

impl ReebGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a graph from vertex and edge lists. No validation is performed.
    pub fn from_parts(vertices: &[(&str, f64)], edges: &[(&str, &str)]) -> Self {
        let mut g = Self::new();
        for &(id, value) in vertices {
            g.add_vertex(id, value);
        }
        for &(a, b) in edges {
            g.add_edge(a, b);
        }
        g
    }

    /// Inserts or overwrites a vertex, returning the previous value if any.
    pub fn add_vertex(&mut self, id: impl Into<String>, value: f64) -> Option<f64> {
        self.values.insert(id.into(), value)
    }

    /// Adds one copy of the edge `a`-`b`.
    pub fn add_edge(&mut self, a: &str, b: &str) {
        *self.edges.entry(edge_key(a, b)).or_insert(0) += 1;
    }

    /// Adds `count` parallel copies of the edge `a`-`b`.
    pub fn add_edges(&mut self, a: &str, b: &str, count: usize) {
        if count > 0 {
            *self.edges.entry(edge_key(a, b)).or_insert(0) += count;
        }
    }

    /// Removes one copy of the edge `a`-`b`; false if there was none.
    pub fn remove_edge(&mut self, a: &str, b: &str) -> bool {
        let key = edge_key(a, b);
        match self.edges.get_mut(&key) {
            Some(m) if *m > 1 => *m -= 1,
            Some(_) => {
                self.edges.remove(&key);
            }
            None => return false,
        }
        true
    }

    /// Removes a vertex together with every incident edge.
    pub fn remove_vertex(&mut self, id: &str) -> Option<f64> {
        let value = self.values.remove(id)?;
        self.edges.retain(|(a, b), _| a != id && b != id);
        Some(value)
    }

    pub fn value(&self, id: &str) -> Option<f64> {
        self.values.get(id).copied()
    }

    pub fn contains(&self, id: &str) -> bool {
        self.values.contains_key(id)
    }

    /// Vertices in id order.
    pub fn vertices(&self) -> impl Iterator<Item = (&str, f64)> + '_ {
        self.values.iter().map(|(id, &v)| (id.as_str(), v))
    }

    /// Distinct edges in id order with their multiplicity.
    pub fn edges(&self) -> impl Iterator<Item = (&str, &str, usize)> + '_ {
        self.edges
            .iter()
            .map(|((a, b), &m)| (a.as_str(), b.as_str(), m))
    }

    pub fn multiplicity(&self, a: &str, b: &str) -> usize {
        self.edges.get(&edge_key(a, b)).copied().unwrap_or(0)
    }

    pub fn vertex_count(&self) -> usize {
        self.values.len()
    }

    /// Number of edges counted with multiplicity.
    pub fn edge_count(&self) -> usize {
        self.edges.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty() && self.edges.is_empty()
    }

    /// Sorted multiset of vertex values.
    pub fn critical_values(&self) -> Vec<f64> {
        let mut v: Vec<f64> = self.values.values().copied().collect();
        v.sort_by(f64::total_cmp);
        v
    }

    /// Down- and up-degree of every vertex, counting multiplicity and
    /// ignoring edges with missing or equal-valued endpoints.
    fn degrees(&self) -> BTreeMap<&str, (usize, usize)> {
        let mut deg: BTreeMap<&str, (usize, usize)> =
            self.values.keys().map(|id| (id.as_str(), (0, 0))).collect();
        for ((a, b), &m) in &self.edges {
            let (Some(&fa), Some(&fb)) = (self.values.get(a), self.values.get(b)) else {
                continue;
            };
            let (lo, hi) = match fa.partial_cmp(&fb) {
                Some(Ordering::Less) => (a, b),
                Some(Ordering::Greater) => (b, a),
                _ => continue,
            };
            deg.get_mut(lo.as_str()).unwrap().1 += m;
            deg.get_mut(hi.as_str()).unwrap().0 += m;
        }
        deg
    }

    /// Vertex ids in canonical order: by value, degree profile and the
    /// sorted values of neighbours, with remaining ties broken by id.
    pub fn canonical_order(&self) -> Vec<&str> {
        let sigs = self.signatures();
        let mut ids: Vec<&str> = self.values.keys().map(String::as_str).collect();
        ids.sort_by(|a, b| cmp_signature(&sigs[a], &sigs[b]).then_with(|| a.cmp(b)));
        ids
    }

    fn signatures(&self) -> BTreeMap<&str, Signature> {
        let deg = self.degrees();
        let mut nbrs: BTreeMap<&str, Vec<f64>> =
            self.values.keys().map(|id| (id.as_str(), Vec::new())).collect();
        for ((a, b), &m) in &self.edges {
            let (Some(&fa), Some(&fb)) = (self.values.get(a), self.values.get(b)) else {
                continue;
            };
            for _ in 0..m {
                nbrs.get_mut(a.as_str()).unwrap().push(fb);
                nbrs.get_mut(b.as_str()).unwrap().push(fa);
            }
        }
        nbrs.into_iter()
            .map(|(id, mut nv)| {
                nv.sort_by(f64::total_cmp);
                let (down, up) = deg[id];
                (
                    id,
                    Signature {
                        value: self.values[id],
                        down,
                        up,
                        neighbours: nv,
                    },
                )
            })
            .collect()
    }

    /// Structural equality up to renaming of vertex ids, comparing values
    /// within `tol`.
    pub fn isomorphic(&self, other: &ReebGraph, tol: f64) -> bool {
        if self.vertex_count() != other.vertex_count() || self.edge_count() != other.edge_count()
        {
            return false;
        }
        let (sa, sb) = (self.signatures(), other.signatures());
        let (oa, ob) = (self.canonical_order(), other.canonical_order());
        let n = oa.len();
        for i in 0..n {
            if !sig_close(&sa[oa[i]], &sb[ob[i]], tol) {
                return false;
            }
        }
        // Tie classes: maximal runs of positions with matching signatures.
        let mut class = vec![0usize; n];
        for i in 1..n {
            let same = sig_close(&sa[oa[i - 1]], &sa[oa[i]], tol)
                && sig_close(&sb[ob[i - 1]], &sb[ob[i]], tol);
            class[i] = if same { class[i - 1] } else { class[i - 1] + 1 };
        }
        let adj = |g: &ReebGraph, ids: &[&str]| -> Vec<Vec<usize>> {
            let idx: BTreeMap<&str, usize> = ids.iter().enumerate().map(|(i, &id)| (id, i)).collect();
            let mut m = vec![vec![0usize; ids.len()]; ids.len()];
            for (a, b, k) in g.edges() {
                if let (Some(&i), Some(&j)) = (idx.get(a), idx.get(b)) {
                    m[i][j] += k;
                    if i != j {
                        m[j][i] += k;
                    }
                }
            }
            m
        };
        let ma = adj(self, &oa);
        let mb = adj(other, &ob);
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        let mut budget = 200_000usize;
        backtrack(0, &class, &ma, &mb, &mut map, &mut used, &mut budget)
    }
}

#[derive(Debug, Clone)]
struct Signature {
    value: f64,
    down: usize,
    up: usize,
    neighbours: Vec<f64>,
}

fn cmp_signature(a: &Signature, b: &Signature) -> Ordering {
    a.value
        .total_cmp(&b.value)
        .then(a.down.cmp(&b.down))
        .then(a.up.cmp(&b.up))
        .then_with(|| {
            for (x, y) in a.neighbours.iter().zip(&b.neighbours) {
                match x.total_cmp(y) {
                    Ordering::Equal => {}
                    o => return o,
                }
            }
            a.neighbours.len().cmp(&b.neighbours.len())
        })
}

fn sig_close(a: &Signature, b: &Signature, tol: f64) -> bool {
    (a.value - b.value).abs() <= tol
        && a.down == b.down
        && a.up == b.up
        && a.neighbours.len() == b.neighbours.len()
        && a
            .neighbours
            .iter()
            .zip(&b.neighbours)
            .all(|(x, y)| (x - y).abs() <= tol)
}

fn backtrack(
    i: usize,
    class: &[usize],
    ma: &[Vec<usize>],
    mb: &[Vec<usize>],
    map: &mut [usize],
    used: &mut [bool],
    budget: &mut usize,
) -> bool {
    let n = class.len();
    if i == n {
        return true;
    }
    if *budget == 0 {
        return false;
    }
    *budget -= 1;
    for j in 0..n {
        if used[j] || class[j] != class[i] {
            continue;
        }
        let consistent = ma[i][i] == mb[j][j] && (0..i).all(|k| ma[i][k] == mb[j][map[k]]);
        if !consistent {
            continue;
        }
        map[i] = j;
        used[j] = true;
        if backtrack(i + 1, class, ma, mb, map, used, budget) {
            return true;
        }
        used[j] = false;
    }
    map[i] = usize::MAX;
    false
}

#[derive(Debug, Clone, PartialEq)]
pub enum Violation {
    NonFiniteValue { id: String },
    UnknownEndpoint { id: String },
    SelfLoop { id: String },
    HorizontalEdge { a: String, b: String },
    IsolatedVertex { id: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NonFiniteValue { id } => write!(f, "non-finite value at {id}"),
            Violation::UnknownEndpoint { id } => write!(f, "unknown endpoint {id}"),
            Violation::SelfLoop { id } => write!(f, "self-loop at {id}"),
            Violation::HorizontalEdge { a, b } => {
                write!(f, "equal adjacent values on edge {a}-{b}")
            }
            Violation::IsolatedVertex { id } => write!(f, "isolated vertex {id}"),
        }
    }
}

/// Result of [`validate`]; an empty list of violations means the graph is valid.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "valid");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Checks referential integrity and the no-horizontal-edge rule. Isolated
/// vertices are rejected too: a single point has no extended persistence
/// pair off the diagonal.
pub fn validate(graph: &ReebGraph) -> ValidationReport {
    let mut violations = Vec::new();
    for (id, v) in graph.vertices() {
        if !v.is_finite() {
            violations.push(Violation::NonFiniteValue { id: id.to_owned() });
        }
    }
    let mut touched = std::collections::BTreeSet::new();
    for (a, b, _) in graph.edges() {
        touched.insert(a);
        touched.insert(b);
        let mut missing = false;
        for id in [a, b] {
            if !graph.contains(id) {
                missing = true;
                violations.push(Violation::UnknownEndpoint { id: id.to_owned() });
                if a == b {
                    break;
                }
            }
        }
        if a == b {
            violations.push(Violation::SelfLoop { id: a.to_owned() });
        } else if !missing && graph.value(a) == graph.value(b) {
            violations.push(Violation::HorizontalEdge {
                a: a.to_owned(),
                b: b.to_owned(),
            });
        }
    }
    for (id, _) in graph.vertices() {
        if !touched.contains(id) {
            violations.push(Violation::IsolatedVertex { id: id.to_owned() });
        }
    }
    ValidationReport { violations }
}

pub(crate) fn ensure_valid(graph: &ReebGraph) -> Result<()> {
    let report = validate(graph);
    if report.is_valid() {
        Ok(())
    } else {
        Err(Error::InvalidGraph(report))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexTag {
    LocalMin,
    LocalMax,
    UpFork,
    DownFork,
    Regular,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VertexClass {
    pub down_degree: usize,
    pub up_degree: usize,
}

impl VertexClass {
    pub fn is_local_min(&self) -> bool {
        self.down_degree == 0
    }
    pub fn is_local_max(&self) -> bool {
        self.up_degree == 0
    }
    pub fn is_up_fork(&self) -> bool {
        self.up_degree >= 2
    }
    pub fn is_down_fork(&self) -> bool {
        self.down_degree >= 2
    }
    pub fn is_regular(&self) -> bool {
        self.down_degree == 1 && self.up_degree == 1
    }

    /// Every tag that applies; a non-generic vertex can carry several.
    pub fn tags(&self) -> Vec<VertexTag> {
        let mut tags = Vec::new();
        if self.is_local_min() {
            tags.push(VertexTag::LocalMin);
        }
        if self.is_local_max() {
            tags.push(VertexTag::LocalMax);
        }
        if self.is_up_fork() {
            tags.push(VertexTag::UpFork);
        }
        if self.is_down_fork() {
            tags.push(VertexTag::DownFork);
        }
        if self.is_regular() {
            tags.push(VertexTag::Regular);
        }
        tags
    }
}

pub fn classify(graph: &ReebGraph, id: &str) -> Result<VertexClass> {
    if !graph.contains(id) {
        return Err(Error::UnknownVertex(id.to_owned()));
    }
    let (down_degree, up_degree) = graph.degrees()[id];
    Ok(VertexClass {
        down_degree,
        up_degree,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Genericity {
    pub function_generic: bool,
    pub morse_generic: bool,
}

impl Genericity {
    pub fn is_generic(&self) -> bool {
        self.function_generic && self.morse_generic
    }
}

pub fn genericity(graph: &ReebGraph, tol: f64) -> Genericity {
    let values = graph.critical_values();
    let function_generic = values.windows(2).all(|w| w[1] - w[0] > tol);
    let morse_generic = graph
        .degrees()
        .values()
        .all(|d| matches!(d, (0, 1) | (1, 2) | (2, 1) | (1, 0)));
    Genericity {
        function_generic,
        morse_generic,
    }
}

/// Replaces every vertex of down- and up-degree 1 by a single edge.
///
/// One pass suffices: suppressing a vertex never changes the degrees of its
/// two neighbours.
pub fn suppress_regular(graph: &ReebGraph) -> ReebGraph {
    let mut g = graph.clone();
    let regular: Vec<String> = g
        .degrees()
        .into_iter()
        .filter(|(_, d)| *d == (1, 1))
        .map(|(id, _)| id.to_owned())
        .collect();
    for id in regular {
        let f = g.values[&id];
        let mut lower = None;
        let mut upper = None;
        for ((a, b), _) in g.edges.range(..) {
            let other = if *a == id {
                b
            } else if *b == id {
                a
            } else {
                continue;
            };
            if g.values[other] < f {
                lower = Some(other.clone());
            } else {
                upper = Some(other.clone());
            }
        }
        let (Some(lower), Some(upper)) = (lower, upper) else {
            continue;
        };
        g.remove_vertex(&id);
        g.add_edge(&lower, &upper);
    }
    g
}

/// Number of connected components and independent cycles.
pub fn betti(graph: &ReebGraph) -> (usize, usize) {
    let idx: BTreeMap<&str, usize> = graph
        .vertices()
        .enumerate()
        .map(|(i, (id, _))| (id, i))
        .collect();
    let mut ds = DisjointSet::new(idx.len());
    let mut edges = 0usize;
    for (a, b, m) in graph.edges() {
        if let (Some(&i), Some(&j)) = (idx.get(a), idx.get(b)) {
            ds.union(i, j);
            edges += m;
        }
    }
    let b0 = (0..idx.len()).filter(|&i| ds.find(i) == i).count();
    (b0, edges + b0 - idx.len())
}

/// Dense view of a valid graph: vertices sorted by `(value, id)`, which is
/// the total order every sweep uses, and edges as `(lower, upper)` index
/// pairs expanded by multiplicity.
#[derive(Debug, Clone)]
pub(crate) struct Indexed {
    pub ids: Vec<String>,
    pub values: Vec<f64>,
    /// `(lower, upper, copy)` sorted by upper, then lower, then copy.
    pub edges: Vec<(usize, usize, usize)>,
    pub up: Vec<Vec<usize>>,
    pub down: Vec<Vec<usize>>,
}

impl Indexed {
    pub fn new(graph: &ReebGraph) -> Self {
        let mut order: Vec<(&str, f64)> = graph.vertices().collect();
        order.sort_by(|a, b| a.1.total_cmp(&b.1).then(a.0.cmp(b.0)));
        let pos: BTreeMap<&str, usize> = order.iter().enumerate().map(|(i, v)| (v.0, i)).collect();
        let n = order.len();
        let mut edges = Vec::new();
        for (a, b, m) in graph.edges() {
            let (Some(&i), Some(&j)) = (pos.get(a), pos.get(b)) else {
                continue;
            };
            if i == j {
                continue;
            }
            let (lo, hi) = if i < j { (i, j) } else { (j, i) };
            for k in 0..m {
                edges.push((lo, hi, k));
            }
        }
        edges.sort_by_key(|&(lo, hi, k)| (hi, lo, k));
        let mut up = vec![Vec::new(); n];
        let mut down = vec![Vec::new(); n];
        for &(lo, hi, _) in &edges {
            up[lo].push(hi);
            down[hi].push(lo);
        }
        Indexed {
            ids: order.iter().map(|v| v.0.to_owned()).collect(),
            values: order.iter().map(|v| v.1).collect(),
            edges,
            up,
            down,
        }
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g2() -> ReebGraph {
        ReebGraph::from_parts(
            &[("a", 0.0), ("b", 1.0), ("c", 3.0), ("d", 4.0)],
            &[("a", "b"), ("b", "c"), ("b", "c"), ("c", "d")],
        )
    }

    #[test]
    fn minimal_edge_is_valid() {
        let g = ReebGraph::from_parts(&[("v1", 0.0), ("v2", 1.0)], &[("v1", "v2")]);
        assert!(validate(&g).is_valid());
    }

    #[test]
    fn equal_adjacent_values_rejected() {
        let g = ReebGraph::from_parts(&[("v1", 0.0), ("v2", 0.0)], &[("v1", "v2")]);
        let report = validate(&g);
        assert_eq!(report.violations.len(), 1);
        assert!(report.to_string().contains("equal adjacent values"));
    }

    #[test]
    fn unknown_endpoint_rejected() {
        let g = ReebGraph::from_parts(&[("v1", 0.0)], &[("v1", "v9")]);
        let report = validate(&g);
        assert_eq!(
            report.violations,
            vec![Violation::UnknownEndpoint { id: "v9".into() }]
        );
        assert!(report.to_string().contains("unknown endpoint v9"));
    }

    #[test]
    fn self_loop_and_isolated_rejected() {
        let g = ReebGraph::from_parts(&[("a", 0.0), ("b", 2.0)], &[("a", "a")]);
        let v = validate(&g).violations;
        assert!(v.contains(&Violation::SelfLoop { id: "a".into() }));
        assert!(v.contains(&Violation::IsolatedVertex { id: "b".into() }));
    }

    #[test]
    fn empty_graph_is_valid() {
        assert!(validate(&ReebGraph::new()).is_valid());
        assert_eq!(betti(&ReebGraph::new()), (0, 0));
    }

    #[test]
    fn classify_g2() {
        let g = g2();
        let b = classify(&g, "b").unwrap();
        assert_eq!((b.down_degree, b.up_degree), (1, 2));
        assert_eq!(b.tags(), vec![VertexTag::UpFork]);
        let a = classify(&g, "a").unwrap();
        assert_eq!((a.down_degree, a.up_degree), (0, 1));
        assert_eq!(a.tags(), vec![VertexTag::LocalMin]);
        let c = classify(&g, "c").unwrap();
        assert_eq!((c.down_degree, c.up_degree), (2, 1));
        assert_eq!(c.tags(), vec![VertexTag::DownFork]);
        assert_eq!(
            classify(&g, "zz"),
            Err(Error::UnknownVertex("zz".into()))
        );
    }

    #[test]
    fn genericity_flags() {
        assert!(genericity(&g2(), 1e-9).is_generic());
        let twins = ReebGraph::from_parts(
            &[("m1", 0.0), ("m2", 0.0), ("f", 1.0), ("x", 2.0)],
            &[("m1", "f"), ("m2", "f"), ("f", "x")],
        );
        assert!(!genericity(&twins, 1e-9).function_generic);
        let cross = ReebGraph::from_parts(
            &[("a", 0.0), ("b", 1.0), ("c", 2.0), ("d", 3.0), ("e", 4.0), ("f", 5.0)],
            &[("a", "c"), ("b", "c"), ("c", "d"), ("c", "e"), ("d", "f"), ("e", "f")],
        );
        let gen = genericity(&cross, 1e-9);
        assert!(gen.function_generic);
        assert!(!gen.morse_generic);
    }

    #[test]
    fn suppress_single_and_chain() {
        let path = ReebGraph::from_parts(&[("a", 0.0), ("b", 1.0), ("c", 2.0)], &[("a", "b"), ("b", "c")]);
        let s = suppress_regular(&path);
        assert_eq!(s, ReebGraph::from_parts(&[("a", 0.0), ("c", 2.0)], &[("a", "c")]));

        let chain = ReebGraph::from_parts(
            &[("a", 0.0), ("b", 1.0), ("c", 2.0), ("d", 3.0)],
            &[("a", "b"), ("b", "c"), ("c", "d")],
        );
        let s = suppress_regular(&chain);
        assert_eq!(s, ReebGraph::from_parts(&[("a", 0.0), ("d", 3.0)], &[("a", "d")]));
        assert_eq!(suppress_regular(&g2()), g2());
    }

    #[test]
    fn suppress_keeps_loops() {
        // Regular vertex on one of two parallel strands.
        let g = ReebGraph::from_parts(
            &[("a", 0.0), ("b", 1.0), ("m", 2.0), ("c", 3.0), ("d", 4.0)],
            &[("a", "b"), ("b", "c"), ("b", "m"), ("m", "c"), ("c", "d")],
        );
        let s = suppress_regular(&g);
        assert!(s.isomorphic(&g2(), 0.0));
        assert_eq!(betti(&s), (1, 1));
    }

    #[test]
    fn betti_counts() {
        assert_eq!(betti(&g2()), (1, 1));
        let two = ReebGraph::from_parts(
            &[("a", 0.0), ("b", 1.0), ("c", 0.0), ("d", 1.0)],
            &[("a", "b"), ("c", "d")],
        );
        assert_eq!(betti(&two), (2, 0));
    }

    #[test]
    fn isomorphism_ignores_ids() {
        let renamed = ReebGraph::from_parts(
            &[("w", 0.0), ("x", 1.0), ("y", 3.0), ("z", 4.0)],
            &[("w", "x"), ("x", "y"), ("y", "x"), ("y", "z")],
        );
        assert!(g2().isomorphic(&renamed, 0.0));
        let tree = ReebGraph::from_parts(
            &[("w", 0.0), ("x", 1.0), ("y", 3.0), ("z", 4.0)],
            &[("w", "x"), ("x", "y"), ("x", "z"), ("y", "z")],
        );
        assert!(!g2().isomorphic(&tree, 0.0));
    }

    #[test]
    fn isomorphism_resolves_symmetric_ties() {
        // Two mins at equal value feeding different forks.
        let g = ReebGraph::from_parts(
            &[("m1", 0.0), ("m2", 0.0), ("f1", 1.0), ("f2", 2.0), ("top", 3.0)],
            &[("m1", "f1"), ("m2", "f2"), ("f1", "f2"), ("f2", "top"), ("f1", "top")],
        );
        let h = ReebGraph::from_parts(
            &[("q", 0.0), ("p", 0.0), ("f1", 1.0), ("f2", 2.0), ("top", 3.0)],
            &[("p", "f1"), ("q", "f2"), ("f1", "f2"), ("f2", "top"), ("f1", "top")],
        );
        assert!(g.isomorphic(&h, 0.0));
    }

    #[test]
    fn indexed_orders_by_value_then_id() {
        let ix = Indexed::new(&g2());
        assert_eq!(ix.ids, vec!["a", "b", "c", "d"]);
        assert_eq!(ix.edges, vec![(0, 1, 0), (1, 2, 0), (1, 2, 1), (2, 3, 0)]);
        assert_eq!(ix.down[2], vec![1, 1]);
    }
}
