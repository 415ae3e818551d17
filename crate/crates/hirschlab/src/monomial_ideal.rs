//! Monomial-ideal combinatorics: minimal generators, radicals, minimal
//! primes as minimal transversals of generator supports, heights,
//! intersections and colons, and the facet-ridge graph of a pure complex.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::algebra::{Monomial, PolyRing, Polynomial, TermOrder};
use crate::error::{Error, Result};
use crate::graph::WeightedGraph;

/// Default cap on the number of minimal primes enumerated.
pub const DEFAULT_PRIME_CAP: usize = 100_000;

/// A monomial ideal held by its minimal generating set (an antichain under
/// divisibility, sorted in decreasing degrevlex). Empty `gens` is the zero
/// ideal; the unit ideal is represented by the single generator 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    ring: Arc<PolyRing>,
    gens: Vec<Monomial>,
}

/// A prime generated by variables, stored as sorted 0-based indices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct MonomialPrime {
    vars: Vec<usize>,
}

impl MonomialPrime {
    pub fn new(mut vars: Vec<usize>) -> Self {
        vars.sort_unstable();
        vars.dedup();
        MonomialPrime { vars }
    }

    pub fn vars(&self) -> &[usize] {
        &self.vars
    }

    pub fn height(&self) -> u64 {
        self.vars.len() as u64
    }

    pub fn display(&self, ring: &PolyRing) -> String {
        let names: Vec<_> = self.vars.iter().map(|&i| ring.name(i).to_string()).collect();
        format!("({})", names.join(","))
    }

    /// The ideal presentation generated by this prime's variables.
    pub fn to_presentation(&self, ring: &Arc<PolyRing>) -> crate::groebner::IdealPresentation {
        let gens = self.vars.iter().map(|&i| Polynomial::variable(ring, i)).collect();
        crate::groebner::IdealPresentation::new(ring, gens).expect("variables are nonzero")
    }

    pub fn to_ideal(&self, ring: &Arc<PolyRing>) -> MonomialIdeal {
        MonomialIdeal::minimalize(
            ring,
            self.vars.iter().map(|&i| Monomial::variable(i, ring.nvars())).collect(),
        )
    }
}

/// Keeps the divisibility-minimal monomials, deduplicated, in decreasing
/// degrevlex order.
fn minimal_antichain(mut monomials: Vec<Monomial>) -> Vec<Monomial> {
    monomials.sort();
    monomials.dedup();
    let mut keep: Vec<Monomial> = Vec::new();
    for m in &monomials {
        if !monomials.iter().any(|d| d != m && d.divides(m)) {
            keep.push(m.clone());
        }
    }
    keep.sort_by(|a, b| TermOrder::DegRevLex.cmp_unchecked(b, a));
    keep
}

impl MonomialIdeal {
    /// The zero ideal (no generators).
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        MonomialIdeal { ring: Arc::clone(ring), gens: Vec::new() }
    }

    /// Minimalizes a generating set.
    pub fn minimalize(ring: &Arc<PolyRing>, monomials: Vec<Monomial>) -> Self {
        debug_assert!(monomials.iter().all(|m| m.nvars() == ring.nvars()));
        MonomialIdeal { ring: Arc::clone(ring), gens: minimal_antichain(monomials) }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    /// Proper means 1 is not a generator. The zero ideal is proper.
    pub fn is_proper(&self) -> bool {
        !self.gens.iter().any(Monomial::is_one)
    }

    /// Membership by divisibility.
    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    pub fn radical(&self) -> MonomialIdeal {
        MonomialIdeal::minimalize(
            &self.ring,
            self.gens.iter().map(Monomial::support_monomial).collect(),
        )
    }

    /// Generators as polynomials, for feeding the Gröbner layer.
    pub fn to_presentation(&self) -> Result<crate::groebner::IdealPresentation> {
        if self.gens.is_empty() {
            return Err(Error::invalid("the zero ideal has no generators to present"));
        }
        let field = self.ring.field();
        let gens = self
            .gens
            .iter()
            .map(|m| Polynomial::term(&self.ring, m.clone(), field.one()))
            .collect();
        crate::groebner::IdealPresentation::new(&self.ring, gens)
    }

    /// All inclusion-minimal variable sets hitting the support of every
    /// generator, enumerated by branching on the support of the first unhit
    /// generator, with dominance pruning against primes already found.
    /// Output sorted by (cardinality, variable list).
    pub fn minimal_primes_capped(&self, cap: usize) -> Result<Vec<MonomialPrime>> {
        if !self.is_proper() {
            return Err(Error::ImproperIdeal);
        }
        if self.is_zero_ideal() {
            return Err(Error::invalid("the zero ideal has no minimal primes over a domain"));
        }
        let supports: Vec<Vec<usize>> =
            self.gens.iter().map(|g| g.support().collect()).collect();
        let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut partial: Vec<usize> = Vec::new();
        enumerate_transversals(&supports, &mut partial, &mut found, cap)?;
        let mut out: Vec<MonomialPrime> =
            found.into_iter().map(MonomialPrime::new).collect();
        out.sort_by(|a, b| (a.vars.len(), &a.vars).cmp(&(b.vars.len(), &b.vars)));
        Ok(out)
    }

    pub fn minimal_primes(&self) -> Result<Vec<MonomialPrime>> {
        self.minimal_primes_capped(DEFAULT_PRIME_CAP)
    }

    /// Minimum cardinality over the minimal primes.
    pub fn height(&self) -> Result<u64> {
        if !self.is_proper() {
            return Err(Error::ImproperIdeal);
        }
        if self.is_zero_ideal() {
            return Ok(0);
        }
        // The minimum transversal cardinality is cheap to get from the full
        // enumeration at desk scale.
        Ok(self
            .minimal_primes()?
            .iter()
            .map(MonomialPrime::height)
            .min()
            .expect("proper nonzero ideals have at least one minimal prime"))
    }

    /// Intersection via pairwise lcms.
    pub fn intersection(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if !self.ring.same_as(&other.ring) {
            return Err(Error::RingMismatch);
        }
        if self.is_zero_ideal() || other.is_zero_ideal() {
            return Ok(MonomialIdeal::zero(&self.ring));
        }
        let mut lcms = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                lcms.push(a.lcm(b));
            }
        }
        Ok(MonomialIdeal::minimalize(&self.ring, lcms))
    }

    /// The colon ideal I : m, generators g / gcd(g, m).
    pub fn colon_by_monomial(&self, m: &Monomial) -> MonomialIdeal {
        debug_assert_eq!(m.nvars(), self.ring.nvars());
        MonomialIdeal::minimalize(
            &self.ring,
            self.gens
                .iter()
                .map(|g| g.checked_div(&g.gcd(m)).expect("gcd divides"))
                .collect(),
        )
    }

    /// Sum of two monomial ideals, minimalized.
    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if !self.ring.same_as(&other.ring) {
            return Err(Error::RingMismatch);
        }
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ok(MonomialIdeal::minimalize(&self.ring, gens))
    }

    pub fn display(&self) -> String {
        if self.gens.is_empty() {
            return "(0)".to_string();
        }
        let names = self.ring.names();
        let parts: Vec<_> = self.gens.iter().map(|m| m.display(names)).collect();
        format!("({})", parts.join(", "))
    }
}

fn enumerate_transversals(
    supports: &[Vec<usize>],
    partial: &mut Vec<usize>,
    found: &mut BTreeSet<Vec<usize>>,
    cap: usize,
) -> Result<()> {
    let unhit = supports
        .iter()
        .find(|sup| !sup.iter().any(|v| partial.contains(v)));
    match unhit {
        None => {
            // partial is a transversal; keep it only if inclusion-minimal.
            let is_minimal = partial.iter().all(|v| {
                supports
                    .iter()
                    .any(|sup| sup.contains(v) && !sup.iter().any(|u| u != v && partial.contains(u)))
            });
            if is_minimal {
                let mut key = partial.clone();
                key.sort_unstable();
                if found.insert(key) && found.len() > cap {
                    return Err(Error::MinimalPrimeCap { cap });
                }
            }
            Ok(())
        }
        Some(sup) => {
            for &v in sup {
                partial.push(v);
                // Dominance pruning: a strict superset of a known minimal
                // transversal can never complete to a minimal one.
                let dominated = found.iter().any(|t| {
                    t.len() < partial.len() && t.iter().all(|u| partial.contains(u))
                });
                if !dominated {
                    enumerate_transversals(supports, partial, found, cap)?;
                }
                partial.pop();
            }
            Ok(())
        }
    }
}

/// Builds the facet-ridge adjacency graph of a pure simplicial complex:
/// vertices are facets, with an edge when two facets share all but one
/// vertex. All weights are 1.
pub fn facets_to_dual_graph(facets: &[BTreeSet<usize>]) -> Result<WeightedGraph> {
    if facets.is_empty() {
        return Err(Error::invalid("facet list must be nonempty"));
    }
    let d = facets[0].len();
    for f in facets {
        if f.len() != d {
            return Err(Error::NonPureFacets { expected: d, found: f.len() });
        }
    }
    let s = facets.len();
    let mut edges = BTreeSet::new();
    for i in 0..s {
        for j in i + 1..s {
            if facets[i].intersection(&facets[j]).count() == d.saturating_sub(1) && d >= 1 {
                edges.insert((i, j));
            }
        }
    }
    WeightedGraph::new(s, edges, vec![1; s])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::CoefficientField;

    fn ring(n: usize) -> Arc<PolyRing> {
        let names = (1..=n).map(|i| format!("x{i}")).collect();
        PolyRing::new(names, CoefficientField::Rationals).unwrap()
    }

    fn mono(ring: &Arc<PolyRing>, exps: &[u32]) -> Monomial {
        assert_eq!(exps.len(), ring.nvars());
        Monomial::new(exps.to_vec())
    }

    /// Brute-force minimal transversals over all variable subsets.
    fn brute_min_primes(ideal: &MonomialIdeal) -> Vec<Vec<usize>> {
        let n = ideal.ring().nvars();
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
            .filter(|s| {
                !hitting.iter().any(|t| t.len() < s.len() && t.iter().all(|v| s.contains(v)))
            })
            .cloned()
            .collect();
        minimal.sort_by_key(|a| (a.len(), a.clone()));
        minimal
    }

    #[test]
    fn minimalize_examples() {
        let r = ring(2);
        // {x^2, x^2 y} -> {x^2}
        let i = MonomialIdeal::minimalize(&r, vec![mono(&r, &[2, 0]), mono(&r, &[2, 1])]);
        assert_eq!(i.gens(), &[mono(&r, &[2, 0])]);
        // duplicates collapse
        let j = MonomialIdeal::minimalize(
            &r,
            vec![mono(&r, &[1, 0]), mono(&r, &[1, 0]), mono(&r, &[0, 1])],
        );
        assert_eq!(j.gens().len(), 2);

        // a mixed antichain stays untouched
        let r3 = ring(3);
        let gens = vec![
            mono(&r3, &[1, 1, 0]),
            mono(&r3, &[1, 0, 1]),
            mono(&r3, &[0, 1, 1]),
            mono(&r3, &[0, 0, 2]),
        ];
        let k = MonomialIdeal::minimalize(&r3, gens.clone());
        let as_set: BTreeSet<_> = k.gens().iter().cloned().collect();
        assert_eq!(as_set, gens.into_iter().collect());
    }

    #[test]
    fn squarefree_checks() {
        let r3 = ring(3);
        let i = MonomialIdeal::minimalize(
            &r3,
            vec![
                mono(&r3, &[1, 1, 0]),
                mono(&r3, &[1, 0, 1]),
                mono(&r3, &[0, 1, 1]),
                mono(&r3, &[0, 0, 2]),
            ],
        );
        assert!(!i.is_squarefree());
        let r4 = ring(4);
        // x1x3, x2x4 is the n=2 coordinate complete intersection
        let ci = MonomialIdeal::minimalize(&r4, vec![mono(&r4, &[1, 0, 1, 0]), mono(&r4, &[0, 1, 0, 1])]);
        assert!(ci.is_squarefree());
        let r1 = ring(1);
        assert!(!MonomialIdeal::minimalize(&r1, vec![mono(&r1, &[3])]).is_squarefree());
    }

    #[test]
    fn radical_minimalizes() {
        let r3 = ring(3);
        let i = MonomialIdeal::minimalize(
            &r3,
            vec![
                mono(&r3, &[1, 1, 0]),
                mono(&r3, &[1, 0, 1]),
                mono(&r3, &[0, 1, 1]),
                mono(&r3, &[0, 0, 2]),
            ],
        );
        let rad = i.radical();
        let as_set: BTreeSet<_> = rad.gens().iter().cloned().collect();
        // (x3, x1x2) after minimalization
        assert_eq!(
            as_set,
            vec![mono(&r3, &[0, 0, 1]), mono(&r3, &[1, 1, 0])].into_iter().collect()
        );
        assert_eq!(rad.radical(), rad);
        assert!(MonomialIdeal::minimalize(&r3, vec![mono(&r3, &[0, 0, 2])]).radical().gens()
            == [mono(&r3, &[0, 0, 1])]);
    }

    #[test]
    fn minimal_primes_paper_examples() {
        let r3 = ring(3);
        let i = MonomialIdeal::minimalize(
            &r3,
            vec![
                mono(&r3, &[1, 1, 0]),
                mono(&r3, &[1, 0, 1]),
                mono(&r3, &[0, 1, 1]),
                mono(&r3, &[0, 0, 2]),
            ],
        );
        let primes = i.minimal_primes().unwrap();
        let sets: Vec<Vec<usize>> = primes.iter().map(|p| p.vars().to_vec()).collect();
        assert_eq!(sets, vec![vec![0, 2], vec![1, 2]]);
        assert_eq!(i.height().unwrap(), 2);

        // m=3 determinantal initial ideal (x1x5, x1x6, x2x6)
        let r6 = ring(6);
        let det = MonomialIdeal::minimalize(
            &r6,
            vec![
                mono(&r6, &[1, 0, 0, 0, 1, 0]),
                mono(&r6, &[1, 0, 0, 0, 0, 1]),
                mono(&r6, &[0, 1, 0, 0, 0, 1]),
            ],
        );
        let primes = det.minimal_primes().unwrap();
        let sets: BTreeSet<Vec<usize>> = primes.iter().map(|p| p.vars().to_vec()).collect();
        let expect: BTreeSet<Vec<usize>> =
            vec![vec![4, 5], vec![0, 5], vec![0, 1]].into_iter().collect();
        assert_eq!(sets, expect);
        assert_eq!(primes.len(), 3);

        // (x1y1, x2y2) laid out as x1,x2,y1,y2
        let r4 = ring(4);
        let ci = MonomialIdeal::minimalize(
            &r4,
            vec![mono(&r4, &[1, 0, 1, 0]), mono(&r4, &[0, 1, 0, 1])],
        );
        let primes = ci.minimal_primes().unwrap();
        assert_eq!(primes.len(), 4);
        assert_eq!(brute_min_primes(&ci), primes.iter().map(|p| p.vars().to_vec()).collect::<Vec<_>>());
    }

    #[test]
    fn minimal_primes_match_brute_force() {
        let r = ring(5);
        let ideals = vec![
            MonomialIdeal::minimalize(&r, vec![mono(&r, &[1, 1, 0, 0, 0]), mono(&r, &[0, 1, 1, 0, 0]), mono(&r, &[0, 0, 1, 1, 0]), mono(&r, &[0, 0, 0, 1, 1])]),
            MonomialIdeal::minimalize(&r, vec![mono(&r, &[2, 0, 0, 0, 0]), mono(&r, &[1, 1, 1, 0, 0]), mono(&r, &[0, 0, 1, 0, 2])]),
            MonomialIdeal::minimalize(&r, vec![mono(&r, &[1, 1, 1, 1, 1])]),
        ];
        for i in &ideals {
            let got: Vec<Vec<usize>> =
                i.minimal_primes().unwrap().iter().map(|p| p.vars().to_vec()).collect();
            assert_eq!(got, brute_min_primes(i));
        }
    }

    #[test]
    fn height_of_coordinate_ci() {
        // x1y1, x2y2, x3y3 with layout x1..x3,y1..y3
        let r6 = ring(6);
        let ci = MonomialIdeal::minimalize(
            &r6,
            vec![
                mono(&r6, &[1, 0, 0, 1, 0, 0]),
                mono(&r6, &[0, 1, 0, 0, 1, 0]),
                mono(&r6, &[0, 0, 1, 0, 0, 1]),
            ],
        );
        assert_eq!(ci.height().unwrap(), 3);
        assert_eq!(ci.minimal_primes().unwrap().len(), 8);
    }

    #[test]
    fn improper_ideal_refused() {
        let r = ring(2);
        let i = MonomialIdeal::minimalize(&r, vec![mono(&r, &[0, 0])]);
        assert!(!i.is_proper());
        assert_eq!(i.minimal_primes().unwrap_err(), Error::ImproperIdeal);
        assert_eq!(i.height().unwrap_err(), Error::ImproperIdeal);
    }

    #[test]
    fn prime_cap_enforced() {
        let r = ring(4);
        let ci = MonomialIdeal::minimalize(
            &r,
            vec![mono(&r, &[1, 0, 1, 0]), mono(&r, &[0, 1, 0, 1])],
        );
        assert!(matches!(
            ci.minimal_primes_capped(3).unwrap_err(),
            Error::MinimalPrimeCap { cap: 3 }
        ));
    }

    #[test]
    fn intersection_examples() {
        let r3 = ring(3);
        let a = MonomialIdeal::minimalize(&r3, vec![mono(&r3, &[1, 0, 0]), mono(&r3, &[0, 0, 1])]);
        let b = MonomialIdeal::minimalize(&r3, vec![mono(&r3, &[0, 1, 0]), mono(&r3, &[0, 0, 1])]);
        let meet = a.intersection(&b).unwrap();
        let expect = MonomialIdeal::minimalize(&r3, vec![mono(&r3, &[0, 0, 1]), mono(&r3, &[1, 1, 0])]);
        assert_eq!(meet, expect);
        assert_eq!(a.intersection(&a).unwrap(), a);

        // intersection of the three m=3 determinantal primes
        let r6 = ring(6);
        let p1 = MonomialPrime::new(vec![4, 5]).to_ideal(&r6);
        let p2 = MonomialPrime::new(vec![0, 5]).to_ideal(&r6);
        let p3 = MonomialPrime::new(vec![0, 1]).to_ideal(&r6);
        let meet = p1.intersection(&p2).unwrap().intersection(&p3).unwrap();
        let expect = MonomialIdeal::minimalize(
            &r6,
            vec![
                mono(&r6, &[1, 0, 0, 0, 1, 0]),
                mono(&r6, &[1, 0, 0, 0, 0, 1]),
                mono(&r6, &[0, 1, 0, 0, 0, 1]),
            ],
        );
        assert_eq!(meet, expect);
    }

    #[test]
    fn decomposition_identity() {
        // intersection over all minimal primes equals the radical
        let r3 = ring(3);
        let samples = vec![
            MonomialIdeal::minimalize(
                &r3,
                vec![
                    mono(&r3, &[1, 1, 0]),
                    mono(&r3, &[1, 0, 1]),
                    mono(&r3, &[0, 1, 1]),
                    mono(&r3, &[0, 0, 2]),
                ],
            ),
            MonomialIdeal::minimalize(&r3, vec![mono(&r3, &[2, 1, 0]), mono(&r3, &[0, 1, 2])]),
            MonomialIdeal::minimalize(&r3, vec![mono(&r3, &[3, 0, 0])]),
        ];
        for i in &samples {
            let primes = i.minimal_primes().unwrap();
            let mut meet: Option<MonomialIdeal> = None;
            for p in &primes {
                let pi = p.to_ideal(&r3);
                meet = Some(match meet {
                    None => pi,
                    Some(acc) => acc.intersection(&pi).unwrap(),
                });
            }
            assert_eq!(meet.unwrap(), i.radical());
        }
    }

    #[test]
    fn colon_examples() {
        let r2 = ring(2);
        // (x^2 y) : x = (x y)
        let i = MonomialIdeal::minimalize(&r2, vec![mono(&r2, &[2, 1])]);
        assert_eq!(i.colon_by_monomial(&mono(&r2, &[1, 0])).gens(), &[mono(&r2, &[1, 1])]);

        let r3 = ring(3);
        // (x1x2, x3) : x3 = (1)
        let j = MonomialIdeal::minimalize(&r3, vec![mono(&r3, &[1, 1, 0]), mono(&r3, &[0, 0, 1])]);
        let c = j.colon_by_monomial(&mono(&r3, &[0, 0, 1]));
        assert!(!c.is_proper());

        // (x1x2, x1x3, x2x3) : x1 = (x2, x3)
        let k = MonomialIdeal::minimalize(
            &r3,
            vec![mono(&r3, &[1, 1, 0]), mono(&r3, &[1, 0, 1]), mono(&r3, &[0, 1, 1])],
        );
        let c = k.colon_by_monomial(&mono(&r3, &[1, 0, 0]));
        let expect = MonomialIdeal::minimalize(&r3, vec![mono(&r3, &[0, 1, 0]), mono(&r3, &[0, 0, 1])]);
        assert_eq!(c, expect);
    }

    #[test]
    fn facet_graphs() {
        // boundary of a triangle: 3-cycle, diameter 1
        let tri: Vec<BTreeSet<usize>> = vec![
            [1, 2].into_iter().collect(),
            [2, 3].into_iter().collect(),
            [1, 3].into_iter().collect(),
        ];
        let g = facets_to_dual_graph(&tri).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.diameter().finite(), Some(1));

        // two disjoint edges: disconnected
        let disjoint: Vec<BTreeSet<usize>> =
            vec![[1, 2].into_iter().collect(), [3, 4].into_iter().collect()];
        let g = facets_to_dual_graph(&disjoint).unwrap();
        assert!(g.diameter().finite().is_none());

        // non-pure input rejected
        let bad: Vec<BTreeSet<usize>> =
            vec![[1, 2].into_iter().collect(), [1, 2, 3].into_iter().collect()];
        assert!(matches!(facets_to_dual_graph(&bad), Err(Error::NonPureFacets { .. })));
    }

    #[test]
    fn octahedron_facet_graph_is_the_cube_graph() {
        // Octahedron on vertex pairs {1,2},{3,4},{5,6}: facets pick one from
        // each pair. The facet-ridge graph is the 3-cube; brute-force BFS
        // gives diameter 3.
        let mut facets: Vec<BTreeSet<usize>> = Vec::new();
        for a in [1, 2] {
            for b in [3, 4] {
                for c in [5, 6] {
                    facets.push([a, b, c].into_iter().collect());
                }
            }
        }
        let g = facets_to_dual_graph(&facets).unwrap();
        assert_eq!(g.vertex_count(), 8);
        assert_eq!(g.edge_count(), 12);
        assert_eq!(g.diameter().finite(), Some(3));
    }
}
