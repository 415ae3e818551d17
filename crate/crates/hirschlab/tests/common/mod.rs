//! Shared brute-force oracles and fixture helpers. Everything here is
//! independent of the library's own algorithms: subsets are enumerated
//! exhaustively and distances come from a plain adjacency-matrix BFS.

#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};
use std::path::PathBuf;
use std::sync::Arc;

use hirschlab::{CoefficientField, Monomial, MonomialIdeal, PolyRing, Polynomial, WeightedGraph};

pub fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

pub fn read_data(name: &str) -> String {
    std::fs::read_to_string(data(name)).expect("test data file exists")
}

pub fn xring(n: usize) -> Arc<PolyRing> {
    let names = (1..=n).map(|i| format!("x{i}")).collect();
    PolyRing::new(names, CoefficientField::Rationals).unwrap()
}

pub fn named_ring(names: &[&str]) -> Arc<PolyRing> {
    PolyRing::new(names.iter().map(|s| s.to_string()).collect(), CoefficientField::Rationals)
        .unwrap()
}

pub fn var(r: &Arc<PolyRing>, i: usize) -> Polynomial {
    Polynomial::variable(r, i)
}

pub fn mono(r: &Arc<PolyRing>, exps: &[u32]) -> Monomial {
    assert_eq!(exps.len(), r.nvars());
    Monomial::new(exps.to_vec())
}

/// Adjacency-matrix BFS diameter; `None` when disconnected.
pub fn bfs_diameter(s: usize, edges: &BTreeSet<(usize, usize)>) -> Option<u64> {
    let adj = |a: usize, b: usize| edges.contains(&(a.min(b), a.max(b)));
    let mut diam = 0u64;
    for start in 0..s {
        let mut dist = vec![None; s];
        dist[start] = Some(0u64);
        let mut q = VecDeque::from([start]);
        while let Some(u) = q.pop_front() {
            for v in 0..s {
                if v != u && adj(u, v) && dist[v].is_none() {
                    dist[v] = Some(dist[u].unwrap() + 1);
                    q.push_back(v);
                }
            }
        }
        for d in dist {
            diam = diam.max(d?);
        }
    }
    Some(diam)
}

/// True when removing `cut` leaves two vertices in different components
/// (the definition requires at least two survivors).
fn disconnects(s: usize, edges: &BTreeSet<(usize, usize)>, cut: &[bool]) -> bool {
    let survivors: Vec<usize> = (0..s).filter(|&v| !cut[v]).collect();
    if survivors.len() < 2 {
        return false;
    }
    let adj = |a: usize, b: usize| edges.contains(&(a.min(b), a.max(b)));
    let start = survivors[0];
    let mut seen = vec![false; s];
    seen[start] = true;
    let mut q = VecDeque::from([start]);
    while let Some(u) = q.pop_front() {
        for &v in &survivors {
            if v != u && adj(u, v) && !seen[v] {
                seen[v] = true;
                q.push_back(v);
            }
        }
    }
    survivors.iter().any(|&v| !seen[v])
}

/// Minimum cardinality of a disconnecting set by exhaustive enumeration;
/// `None` when no set disconnects.
pub fn exhaustive_vertex_connectivity(g: &WeightedGraph) -> Option<u64> {
    let s = g.vertex_count();
    let edges: BTreeSet<_> = g.edges().collect();
    let mut best: Option<u64> = None;
    for mask in 0u32..(1 << s) {
        let cut: Vec<bool> = (0..s).map(|v| mask & (1 << v) != 0).collect();
        if disconnects(s, &edges, &cut) {
            let size = cut.iter().filter(|b| **b).count() as u64;
            best = Some(best.map_or(size, |b| b.min(size)));
        }
    }
    best
}

/// Minimum total weight of a disconnecting set by exhaustive enumeration;
/// `None` when no set disconnects.
pub fn exhaustive_weighted_connectivity(g: &WeightedGraph) -> Option<u64> {
    let s = g.vertex_count();
    let edges: BTreeSet<_> = g.edges().collect();
    let mut best: Option<u64> = None;
    for mask in 0u32..(1 << s) {
        let cut: Vec<bool> = (0..s).map(|v| mask & (1 << v) != 0).collect();
        if disconnects(s, &edges, &cut) {
            let weight: u64 = (0..s).filter(|&v| cut[v]).map(|v| g.weights()[v]).sum();
            best = Some(best.map_or(weight, |b| b.min(weight)));
        }
    }
    best
}

/// All inclusion-minimal hitting sets of the generator supports, by
/// enumerating every variable subset.
pub fn brute_minimal_transversals(ideal: &MonomialIdeal) -> Vec<Vec<usize>> {
    let n = ideal.ring().nvars();
    assert!(n <= 20);
    let supports: Vec<Vec<usize>> =
        ideal.gens().iter().map(|g| g.support().collect()).collect();
    let mut hitting: Vec<Vec<usize>> = Vec::new();
    for mask in 0u32..(1 << n) {
        let set: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        if supports.iter().all(|sup| sup.iter().any(|v| set.contains(v))) {
            hitting.push(set);
        }
    }
    let mut minimal: Vec<Vec<usize>> = hitting
        .iter()
        .filter(|s| !hitting.iter().any(|t| t.len() < s.len() && t.iter().all(|v| s.contains(v))))
        .cloned()
        .collect();
    minimal.sort_by_key(|a| (a.len(), a.clone()));
    minimal
}

/// Counts monomials of each degree that avoid the ideal, up to `upto`.
pub fn standard_monomial_counts(ideal: &MonomialIdeal, upto: u32) -> Vec<u64> {
    let n = ideal.ring().nvars();
    let mut counts = vec![0u64; upto as usize + 1];
    let mut stack = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for stub in &stack {
            let used: u32 = stub.iter().sum();
            for e in 0..=(upto - used) {
                let mut s = stub.clone();
                s.push(e);
                next.push(s);
            }
        }
        stack = next;
    }
    for exps in stack {
        let m = Monomial::new(exps);
        if !ideal.contains(&m) {
            counts[m.degree() as usize] += 1;
        }
    }
    counts
}
