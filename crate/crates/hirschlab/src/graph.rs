//! Weighted graphs, diameters, l- and (r,w)-connectivity, and the three
//! diameter bounds (Menger, the weighted bound, and its prefix refinement).

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A natural number or infinity. Infinity is a distinct value, never an
/// integer sentinel.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtNat {
    Finite(u64),
    Infinite,
}

impl ExtNat {
    pub fn finite(self) -> Option<u64> {
        match self {
            ExtNat::Finite(v) => Some(v),
            ExtNat::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, ExtNat::Infinite)
    }

    /// Order with infinity on top.
    pub fn le(self, other: ExtNat) -> bool {
        match (self, other) {
            (_, ExtNat::Infinite) => true,
            (ExtNat::Infinite, ExtNat::Finite(_)) => false,
            (ExtNat::Finite(a), ExtNat::Finite(b)) => a <= b,
        }
    }

    /// At least `r` (infinity exceeds everything).
    pub fn at_least(self, r: u64) -> bool {
        match self {
            ExtNat::Infinite => true,
            ExtNat::Finite(v) => v >= r,
        }
    }
}

impl std::fmt::Display for ExtNat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ExtNat::Finite(v) => write!(f, "{v}"),
            ExtNat::Infinite => write!(f, "inf"),
        }
    }
}

/// A finite simple graph with positive integer vertex weights. Vertices are
/// 0-based internally; the JSON interchange format is 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedGraph {
    s: usize,
    edges: BTreeSet<(usize, usize)>,
    weights: Vec<u64>,
}

/// On-disk form: `{"s": .., "edges": [[i,j],..] (1-based), "weights": [..]}`.
#[derive(Debug, Serialize, Deserialize)]
pub struct GraphDocument {
    pub s: usize,
    pub edges: Vec<[usize; 2]>,
    pub weights: Vec<u64>,
}

impl WeightedGraph {
    pub fn new(s: usize, edges: BTreeSet<(usize, usize)>, weights: Vec<u64>) -> Result<Self> {
        if s == 0 {
            return Err(Error::invalid("a graph needs at least one vertex"));
        }
        if weights.len() != s {
            return Err(Error::invalid(format!(
                "expected {s} weights, got {}",
                weights.len()
            )));
        }
        if weights.contains(&0) {
            return Err(Error::invalid("vertex weights must be positive"));
        }
        let mut normalized = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::invalid(format!("loop at vertex {}", a + 1)));
            }
            if a >= s || b >= s {
                return Err(Error::invalid(format!(
                    "edge ({},{}) out of range for {s} vertices",
                    a + 1,
                    b + 1
                )));
            }
            normalized.insert((a.min(b), a.max(b)));
        }
        Ok(WeightedGraph { s, edges: normalized, weights })
    }

    pub fn unit_weights(s: usize, edges: BTreeSet<(usize, usize)>) -> Result<Self> {
        WeightedGraph::new(s, edges, vec![1; s])
    }

    pub fn from_document(doc: &GraphDocument) -> Result<Self> {
        let mut edges = BTreeSet::new();
        for [i, j] in &doc.edges {
            if *i == 0 || *j == 0 {
                return Err(Error::invalid("graph file edges are 1-based"));
            }
            edges.insert((i - 1, j - 1));
        }
        WeightedGraph::new(doc.s, edges, doc.weights.clone())
    }

    pub fn to_document(&self) -> GraphDocument {
        GraphDocument {
            s: self.s,
            edges: self.edges.iter().map(|(a, b)| [a + 1, b + 1]).collect(),
            weights: self.weights.clone(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.s
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn total_weight(&self) -> u64 {
        self.weights.iter().sum()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.s).filter(|&u| u != v && self.has_edge(u, v)).collect()
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.s * (self.s - 1) / 2
    }

    /// The same graph with different vertex weights.
    pub fn with_weights(&self, weights: Vec<u64>) -> Result<WeightedGraph> {
        WeightedGraph::new(self.s, self.edges.clone(), weights)
    }

    /// BFS distances from `v`; `None` marks unreachable vertices.
    pub fn distances_from(&self, v: usize) -> Vec<Option<u64>> {
        let mut dist = vec![None; self.s];
        dist[v] = Some(0);
        let mut queue = VecDeque::from([v]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].expect("queued vertices have distances");
            for w in self.neighbors(u) {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.distances_from(0).iter().all(Option::is_some)
    }

    /// Max over vertex pairs of the shortest-path length; infinite iff
    /// disconnected; 0 for a single vertex.
    pub fn diameter(&self) -> ExtNat {
        let mut max = 0;
        for v in 0..self.s {
            for d in self.distances_from(v) {
                match d {
                    None => return ExtNat::Infinite,
                    Some(d) => max = max.max(d),
                }
            }
        }
        ExtNat::Finite(max)
    }

    /// Minimum total weight of a vertex set separating `a` from `b`
    /// (nonadjacent), by max-flow on the node-split digraph: every other
    /// vertex x becomes x_in -> x_out with capacity w(x), edges get
    /// effectively unbounded capacity.
    fn min_weight_separator(&self, a: usize, b: usize) -> u64 {
        debug_assert!(!self.has_edge(a, b) && a != b);
        let inf: u64 = self.total_weight() + 1;
        // Node ids: 2v = v_in, 2v+1 = v_out.
        let node = |v: usize, out: bool| 2 * v + usize::from(out);
        let n = 2 * self.s;
        let mut cap = vec![std::collections::HashMap::<usize, u64>::new(); n];
        let mut add = |from: usize, to: usize, c: u64| {
            *cap[from].entry(to).or_insert(0) += c;
            cap[to].entry(from).or_insert(0);
        };
        for v in 0..self.s {
            let c = if v == a || v == b { inf } else { self.weights[v] };
            add(node(v, false), node(v, true), c);
        }
        for &(u, v) in &self.edges {
            add(node(u, true), node(v, false), inf);
            add(node(v, true), node(u, false), inf);
        }
        let (source, sink) = (node(a, true), node(b, false));
        // Edmonds-Karp.
        let mut flow = 0;
        loop {
            let mut parent: Vec<Option<usize>> = vec![None; n];
            parent[source] = Some(source);
            let mut queue = VecDeque::from([source]);
            'bfs: while let Some(u) = queue.pop_front() {
                for (&w, &c) in &cap[u] {
                    if c > 0 && parent[w].is_none() {
                        parent[w] = Some(u);
                        if w == sink {
                            break 'bfs;
                        }
                        queue.push_back(w);
                    }
                }
            }
            if parent[sink].is_none() {
                return flow;
            }
            let mut bottleneck = u64::MAX;
            let mut v = sink;
            while v != source {
                let u = parent[v].expect("path exists");
                bottleneck = bottleneck.min(cap[u][&v]);
                v = u;
            }
            let mut v = sink;
            while v != source {
                let u = parent[v].expect("path exists");
                *cap[u].get_mut(&v).expect("forward arc") -= bottleneck;
                *cap[v].get_mut(&u).expect("reverse arc") += bottleneck;
                v = u;
            }
            flow += bottleneck;
        }
    }

    fn connectivity_with(&self, weights: &[u64]) -> ExtNat {
        if !self.is_connected() {
            return ExtNat::Finite(0);
        }
        if self.s <= 2 || self.is_complete() {
            return ExtNat::Infinite;
        }
        let reweighted = WeightedGraph {
            s: self.s,
            edges: self.edges.clone(),
            weights: weights.to_vec(),
        };
        let mut best: Option<u64> = None;
        for a in 0..self.s {
            for b in a + 1..self.s {
                if !self.has_edge(a, b) {
                    let cut = reweighted.min_weight_separator(a, b);
                    best = Some(best.map_or(cut, |m| m.min(cut)));
                }
            }
        }
        ExtNat::Finite(best.expect("incomplete graphs have a nonadjacent pair"))
    }

    /// The largest r for which the graph is (r,w)-connected: the minimum
    /// weight of a disconnecting vertex set. 0 when disconnected; infinite
    /// when no separating set exists.
    pub fn weighted_connectivity(&self) -> ExtNat {
        self.connectivity_with(&self.weights.clone())
    }

    /// Classical vertex connectivity (all weights 1).
    pub fn vertex_connectivity(&self) -> ExtNat {
        self.connectivity_with(&vec![1; self.s])
    }

    pub fn connectivity_profile(&self) -> ConnectivityProfile {
        ConnectivityProfile {
            connected: self.is_connected(),
            vertex_connectivity: self.vertex_connectivity(),
            weighted_connectivity: self.weighted_connectivity(),
        }
    }

    /// At least l vertices, and no set of l-1 or fewer vertices disconnects.
    pub fn is_l_connected(&self, l: u64) -> bool {
        debug_assert!(l >= 1);
        self.s as u64 >= l && self.vertex_connectivity().at_least(l)
    }

    /// Connected, and no vertex set of total weight at most r-1 disconnects.
    pub fn is_rw_connected(&self, r: u64) -> bool {
        debug_assert!(r >= 1);
        self.is_connected() && self.weighted_connectivity().at_least(r)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConnectivityProfile {
    pub connected: bool,
    pub vertex_connectivity: ExtNat,
    pub weighted_connectivity: ExtNat,
}

/// diam(G) <= floor((s-2)/l) + 1 for an l-connected graph on s vertices.
pub fn menger_bound(s: u64, l: u64) -> Result<u64> {
    if s < 2 {
        return Err(Error::invalid("Menger bound needs at least 2 vertices"));
    }
    if l < 1 {
        return Err(Error::invalid("Menger bound needs l >= 1"));
    }
    Ok((s - 2) / l + 1)
}

/// diam(G) <= floor((e-2)/r) + 1 for an (r,w)-connected graph of total
/// weight e.
pub fn rw_bound(e: u64, r: u64) -> Result<u64> {
    if e < 2 {
        return Err(Error::invalid("weighted bound needs total weight >= 2"));
    }
    if r < 1 {
        return Err(Error::invalid("weighted bound needs r >= 1"));
    }
    Ok((e - 2) / r + 1)
}

/// The prefix sets A_i for i = l+1..h over the nondecreasingly sorted
/// weights: A_i is the longest prefix whose i-1 largest weights sum to at
/// most r-1, and b_i counts the vertices outside it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrefixProfile {
    pub l: u64,
    pub r: u64,
    pub sorted_weights: Vec<u64>,
    /// One entry per i in l+1..=h: (i, prefix length k_i, deficiency b_i).
    pub entries: Vec<PrefixEntry>,
    /// Largest i with A_i nonempty; `None` when already A_{l+1} is empty.
    pub h: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrefixEntry {
    pub i: u64,
    pub k: u64,
    pub b: u64,
}

pub fn prefix_profile(weights: &[u64], r: u64, l: u64) -> Result<PrefixProfile> {
    if l < 1 || r < l {
        return Err(Error::invalid("prefix profile needs r >= l >= 1"));
    }
    if weights.is_empty() || weights.contains(&0) {
        return Err(Error::invalid("weights must be positive and nonempty"));
    }
    let mut sorted = weights.to_vec();
    sorted.sort_unstable();
    let s = sorted.len() as u64;
    let mut entries = Vec::new();
    for i in (l + 1)..=s {
        // Largest k >= i-1 such that the i-1 largest weights of the prefix
        // [1..k], i.e. w_{k-i+2} + .. + w_k, sum to at most r-1.
        let need = (i - 1) as usize;
        let mut best: Option<u64> = None;
        for k in need..=sorted.len() {
            let top: u64 = sorted[k - need..k].iter().sum();
            if top < r {
                best = Some(k as u64);
            }
        }
        match best {
            Some(k) => entries.push(PrefixEntry { i, k, b: s - k }),
            None => break,
        }
    }
    let h = entries.last().map(|e| e.i);
    Ok(PrefixProfile { l, r, sorted_weights: sorted, entries, h })
}

/// The refined bound floor((s - 2 + sum b_i)/h) + 1; falls back to the
/// Menger bound (flagged) when no A_i is nonempty.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RefinedBound {
    pub value: u64,
    pub fallback: bool,
}

pub fn refined_bound(s: u64, profile: &PrefixProfile) -> Result<RefinedBound> {
    if s < 2 {
        return Err(Error::invalid("refined bound needs at least 2 vertices"));
    }
    match profile.h {
        None => Ok(RefinedBound { value: menger_bound(s, profile.l)?, fallback: true }),
        Some(h) => {
            let b_sum: u64 = profile.entries.iter().map(|e| e.b).sum();
            Ok(RefinedBound { value: (s - 2 + b_sum) / h + 1, fallback: false })
        }
    }
}

/// The layered extremal construction attaining the weighted bound with unit
/// weights: x joined to V_1, y to V_a, consecutive layers complete, with
/// (e-2) mod r layers of size r+1 and the rest of size r.
pub fn layered_extremal_graph(e: u64, r: u64) -> Result<WeightedGraph> {
    if e < 2 || r < 1 || e - 2 < r {
        return Err(Error::invalid("layered construction needs e-2 >= r >= 1"));
    }
    let a = ((e - 2) / r) as usize;
    let big = ((e - 2) % r) as usize;
    let mut layers: Vec<Vec<usize>> = Vec::new();
    let mut next = 1usize; // 0 is x
    for idx in 0..a {
        let size = if idx < big { (r + 1) as usize } else { r as usize };
        layers.push((next..next + size).collect());
        next += size;
    }
    let y = next;
    let s = y + 1;
    let mut edges = BTreeSet::new();
    for &v in &layers[0] {
        edges.insert((0, v));
    }
    for &v in &layers[a - 1] {
        edges.insert((v.min(y), v.max(y)));
    }
    for w in layers.windows(2) {
        for &u in &w[0] {
            for &v in &w[1] {
                edges.insert((u.min(v), u.max(v)));
            }
        }
    }
    WeightedGraph::unit_weights(s, edges)
}

/// The star of the weighted-connectivity example: one center of weight 5
/// adjacent to six ray ends of weight 2 (center is the last vertex).
pub fn star_example() -> WeightedGraph {
    let edges: BTreeSet<_> = (0..6).map(|i| (i, 6)).collect();
    WeightedGraph::new(7, edges, vec![2, 2, 2, 2, 2, 2, 5]).expect("static example is valid")
}
