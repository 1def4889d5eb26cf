//! Finite quivers, paths, simple cycles and cycle contraction.
//!
//! Vertices and arrows carry string ids for I/O but are addressed internally by
//! their position in the declaration order. All orderings ("smallest vertex",
//! "lexicographic by arrow ids") refer to these positions.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub id: String,
    pub src: usize,
    pub tgt: usize,
}

/// A finite quiver; multiple arrows and loops are allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    vertex_index: HashMap<String, usize>,
}

impl Quiver {
    /// Builds a quiver from vertex ids and `(arrow id, source id, target id)` triples.
    pub fn new<V, A>(vertices: V, arrows: A) -> Result<Self>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        A: IntoIterator<Item = (String, String, String)>,
    {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let mut vertex_index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if vertex_index.insert(v.clone(), i).is_some() {
                return Err(Error::InvalidInput(format!("duplicate vertex id {v:?}")));
            }
        }
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for (id, s, t) in arrows {
            if !seen.insert(id.clone()) {
                return Err(Error::InvalidInput(format!("duplicate arrow id {id:?}")));
            }
            let lookup = |v: &str| {
                vertex_index
                    .get(v)
                    .copied()
                    .ok_or_else(|| Error::InvalidInput(format!("arrow {id:?} uses unknown vertex {v:?}")))
            };
            out.push(Arrow { src: lookup(&s)?, tgt: lookup(&t)?, id });
        }
        Ok(Quiver { vertices, arrows: out, vertex_index })
    }

    /// Builds a quiver on vertices `0..n` from index pairs; arrow ids are `a0, a1, ...`
    /// and vertex ids are the decimal indices.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Quiver::new(
            (0..n).map(|i| i.to_string()),
            edges
                .iter()
                .enumerate()
                .map(|(k, &(s, t))| (format!("a{k}"), s.to_string(), t.to_string())),
        )
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, a: usize) -> &Arrow {
        &self.arrows[a]
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.vertex_index.get(id).copied()
    }

    pub fn arrow_index(&self, id: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.id == id)
    }

    pub fn arrows_into(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].tgt == v)
    }

    pub fn arrows_from(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].src == v)
    }

    /// Checks composability and returns the path.
    pub fn path(&self, source: usize, arrows: Vec<usize>) -> Result<Path> {
        if source >= self.vertex_count() {
            return Err(Error::InvalidPath(format!("no vertex {source}")));
        }
        let mut at = source;
        for &a in &arrows {
            let arrow = self
                .arrows
                .get(a)
                .ok_or_else(|| Error::InvalidPath(format!("no arrow {a}")))?;
            if arrow.src != at {
                return Err(Error::InvalidPath(format!(
                    "arrow {} starts at {} but the path is at {}",
                    arrow.id, self.vertices[arrow.src], self.vertices[at]
                )));
            }
            at = arrow.tgt;
        }
        Ok(Path { source, arrows })
    }

    /// Path from arrow ids listed in traversal order (first arrow first).
    pub fn path_from_ids(&self, source: &str, arrow_ids: &[&str]) -> Result<Path> {
        let s = self
            .vertex_index(source)
            .ok_or_else(|| Error::InvalidPath(format!("unknown vertex {source:?}")))?;
        let arrows = arrow_ids
            .iter()
            .map(|id| self.arrow_index(id).ok_or_else(|| Error::InvalidPath(format!("unknown arrow {id:?}"))))
            .collect::<Result<Vec<_>>>()?;
        self.path(s, arrows)
    }

    /// Renders a path as a product `a_n*...*a_1` (rightmost arrow traversed first).
    pub fn path_string(&self, p: &Path) -> String {
        if p.arrows.is_empty() {
            return format!("e_{}", self.vertices[p.source]);
        }
        p.arrows.iter().rev().map(|&a| self.arrows[a].id.as_str()).collect::<Vec<_>>().join("*")
    }
}

/// A path, stored as its arrows in traversal order. The trivial path `e_v` has
/// no arrows and records its vertex as `source`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    source: usize,
    arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path { source: v, arrows: Vec::new() }
    }

    /// Unchecked constructor for callers that already know the arrows compose.
    pub(crate) fn from_parts(source: usize, arrows: Vec<usize>) -> Self {
        Path { source, arrows }
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self, q: &Quiver) -> usize {
        self.arrows.last().map_or(self.source, |&a| q.arrows[a].tgt)
    }

    pub fn arrows(&self) -> &[usize] {
        &self.arrows
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    /// The visited vertices, `len() + 1` of them.
    pub fn vertices(&self, q: &Quiver) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.arrows.len() + 1);
        out.push(self.source);
        out.extend(self.arrows.iter().map(|&a| q.arrows[a].tgt));
        out
    }

    pub fn is_acyclic(&self, q: &Quiver) -> bool {
        let vs = self.vertices(q);
        let set: BTreeSet<_> = vs.iter().collect();
        set.len() == vs.len()
    }

    /// `self` followed by `then` (the product `then * self`). Panics if they do not compose.
    pub fn then(&self, then: &Path, q: &Quiver) -> Path {
        assert_eq!(self.target(q), then.source, "paths do not compose");
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&then.arrows);
        Path { source: self.source, arrows }
    }
}

/// Orders by length, then lexicographically by arrow position, then by base vertex.
impl Ord for Path {
    fn cmp(&self, other: &Self) -> Ordering {
        self.arrows
            .len()
            .cmp(&other.arrows.len())
            .then_with(|| self.arrows.cmp(&other.arrows))
            .then_with(|| self.source.cmp(&other.source))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A simple cycle in canonical rotation: the first arrow leaves the smallest
/// vertex on the cycle.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimpleCycle {
    arrows: Vec<usize>,
}

impl SimpleCycle {
    /// Validates that `arrows` (traversal order, any rotation) form a simple cycle.
    pub fn new(q: &Quiver, arrows: Vec<usize>) -> Result<Self> {
        let bad = |why: &str| Error::InvalidCycle(why.to_string());
        if arrows.is_empty() {
            return Err(bad("empty arrow list"));
        }
        if arrows.iter().any(|&a| a >= q.arrow_count()) {
            return Err(bad("unknown arrow"));
        }
        let n = arrows.len();
        for i in 0..n {
            if q.arrows[arrows[i]].tgt != q.arrows[arrows[(i + 1) % n]].src {
                return Err(bad("arrows do not compose into a closed path"));
            }
        }
        let sources: BTreeSet<usize> = arrows.iter().map(|&a| q.arrows[a].src).collect();
        if sources.len() != n {
            return Err(bad("a vertex repeats"));
        }
        let start = (0..n).min_by_key(|&i| q.arrows[arrows[i]].src).unwrap();
        let mut canon = arrows[start..].to_vec();
        canon.extend_from_slice(&arrows[..start]);
        Ok(SimpleCycle { arrows: canon })
    }

    pub fn arrows(&self) -> &[usize] {
        &self.arrows
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Vertices on the cycle in traversal order, starting at the smallest.
    pub fn vertices(&self, q: &Quiver) -> Vec<usize> {
        self.arrows.iter().map(|&a| q.arrows[a].src).collect()
    }

    pub fn base_vertex(&self, q: &Quiver) -> usize {
        q.arrows[self.arrows[0]].src
    }

    pub fn contains_vertex(&self, q: &Quiver, v: usize) -> bool {
        self.arrows.iter().any(|&a| q.arrows[a].src == v)
    }

    /// The rotation starting at `v`, as a path from `v` back to `v`.
    pub fn rotated_at(&self, q: &Quiver, v: usize) -> Option<Path> {
        let i = self.arrows.iter().position(|&a| q.arrows[a].src == v)?;
        let mut arrows = self.arrows[i..].to_vec();
        arrows.extend_from_slice(&self.arrows[..i]);
        Some(Path { source: v, arrows })
    }
}

impl Ord for SimpleCycle {
    fn cmp(&self, other: &Self) -> Ordering {
        self.arrows.len().cmp(&other.arrows.len()).then_with(|| self.arrows.cmp(&other.arrows))
    }
}

impl PartialOrd for SimpleCycle {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All simple cycles, one per rotation class, sorted by (length, canonical rotation).
///
/// Depth-first search from each start vertex `s`, restricted to vertices larger
/// than `s`, so every cycle is found exactly once in its canonical rotation.
pub fn enumerate_simple_cycles(q: &Quiver) -> Vec<SimpleCycle> {
    let mut out = Vec::new();
    let mut on_path = vec![false; q.vertex_count()];
    let mut stack = Vec::new();
    for s in 0..q.vertex_count() {
        on_path[s] = true;
        extend_cycles(q, s, s, &mut on_path, &mut stack, &mut out);
        on_path[s] = false;
    }
    out.sort();
    out
}

fn extend_cycles(
    q: &Quiver,
    start: usize,
    at: usize,
    on_path: &mut [bool],
    stack: &mut Vec<usize>,
    out: &mut Vec<SimpleCycle>,
) {
    for a in q.arrows_from(at) {
        let t = q.arrows[a].tgt;
        if t == start {
            stack.push(a);
            out.push(SimpleCycle { arrows: stack.clone() });
            stack.pop();
        } else if t > start && !on_path[t] {
            on_path[t] = true;
            stack.push(a);
            extend_cycles(q, start, t, on_path, stack, out);
            stack.pop();
            on_path[t] = false;
        }
    }
}

/// Every pair of distinct simple cycles shares at most one vertex.
pub fn has_transverse_cycles(q: &Quiver) -> bool {
    cycles_are_transverse(q, &enumerate_simple_cycles(q))
}

pub(crate) fn cycles_are_transverse(q: &Quiver, cycles: &[SimpleCycle]) -> bool {
    let sets: Vec<BTreeSet<usize>> = cycles.iter().map(|c| c.vertices(q).into_iter().collect()).collect();
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            if sets[i].intersection(&sets[j]).nth(1).is_some() {
                return false;
            }
        }
    }
    true
}

/// All paths visiting no vertex twice, trivial paths included, in path order.
pub fn acyclic_paths(q: &Quiver) -> Vec<Path> {
    let mut out = Vec::new();
    let mut on_path = vec![false; q.vertex_count()];
    for v in 0..q.vertex_count() {
        let mut p = Path::trivial(v);
        on_path[v] = true;
        extend_acyclic(q, &mut p, v, &mut on_path, &mut out);
        on_path[v] = false;
    }
    out.sort();
    out
}

fn extend_acyclic(q: &Quiver, p: &mut Path, at: usize, on_path: &mut [bool], out: &mut Vec<Path>) {
    out.push(p.clone());
    for a in q.arrows_from(at) {
        let t = q.arrows[a].tgt;
        if !on_path[t] {
            on_path[t] = true;
            p.arrows.push(a);
            extend_acyclic(q, p, t, on_path, out);
            p.arrows.pop();
            on_path[t] = false;
        }
    }
}

/// Identifies the vertices of `cycle` (the smallest survives) and deletes its
/// arrows. Returns the new quiver and the map old vertex index -> new index.
pub fn contract_cycle(q: &Quiver, cycle: &SimpleCycle) -> Result<(Quiver, Vec<usize>)> {
    // Re-validate: the cycle must belong to this quiver.
    let checked = SimpleCycle::new(q, cycle.arrows.clone())?;
    let on_cycle: BTreeSet<usize> = checked.vertices(q).into_iter().collect();
    let keep = *on_cycle.iter().next().unwrap();
    let mut map = vec![0; q.vertex_count()];
    let mut vertices = Vec::new();
    for v in 0..q.vertex_count() {
        if on_cycle.contains(&v) && v != keep {
            continue;
        }
        map[v] = vertices.len();
        vertices.push(q.vertices[v].clone());
    }
    for &v in &on_cycle {
        map[v] = map[keep];
    }
    let removed: BTreeSet<usize> = checked.arrows.iter().copied().collect();
    let arrows = q
        .arrows
        .iter()
        .enumerate()
        .filter(|(i, _)| !removed.contains(i))
        .map(|(_, a)| (a.id.clone(), vertices[map[a.src]].clone(), vertices[map[a.tgt]].clone()));
    let out = Quiver::new(vertices.clone(), arrows)?;
    Ok((out, map))
}

/// Arrow positions that survive in `contract_cycle(q, cycle)`, in order.
pub(crate) fn surviving_arrows(cycle: &SimpleCycle, arrow_count: usize) -> Vec<usize> {
    let removed: BTreeSet<usize> = cycle.arrows.iter().copied().collect();
    (0..arrow_count).filter(|a| !removed.contains(a)).collect()
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "vertices [{}]; arrows [", self.vertices.join(", "))?;
        for (i, a) in self.arrows.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}: {} -> {}", a.id, self.vertices[a.src], self.vertices[a.tgt])?;
        }
        f.write_str("]")
    }
}

/// JSON shape `{"vertices": [...], "arrows": [{"id", "src", "tgt"}]}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct QuiverJson {
    pub vertices: Vec<IdJson>,
    pub arrows: Vec<ArrowJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ArrowJson {
    pub id: IdJson,
    pub src: IdJson,
    pub tgt: IdJson,
}

/// Ids may be written as JSON strings or integers.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum IdJson {
    Str(String),
    Int(i64),
}

impl IdJson {
    pub fn as_string(&self) -> String {
        match self {
            IdJson::Str(s) => s.clone(),
            IdJson::Int(n) => n.to_string(),
        }
    }
}

impl TryFrom<&QuiverJson> for Quiver {
    type Error = Error;

    fn try_from(j: &QuiverJson) -> Result<Self> {
        Quiver::new(
            j.vertices.iter().map(IdJson::as_string),
            j.arrows.iter().map(|a| (a.id.as_string(), a.src.as_string(), a.tgt.as_string())),
        )
    }
}

impl From<&Quiver> for QuiverJson {
    fn from(q: &Quiver) -> Self {
        QuiverJson {
            vertices: q.vertices.iter().cloned().map(IdJson::Str).collect(),
            arrows: q
                .arrows
                .iter()
                .map(|a| ArrowJson {
                    id: IdJson::Str(a.id.clone()),
                    src: IdJson::Str(q.vertices[a.src].clone()),
                    tgt: IdJson::Str(q.vertices[a.tgt].clone()),
                })
                .collect(),
        }
    }
}
