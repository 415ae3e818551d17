//! Cross-cutting engine checks: Gröbner degeneration invariants across
//! term orders, the coordinate-change collapse of the dual graph, the
//! Stanley-Reisner facet correspondence, and exact-arithmetic regressions.

mod common;

use std::collections::BTreeSet;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use common::*;
use hirschlab::commands;
use hirschlab::dual_graph::{dual_graph_from_primes, dual_graph_monomial, AnalyzerConfig, WeightChoice};
use hirschlab::graph::ExtNat;
use hirschlab::groebner::{initial_ideal, intersect_all, IdealPresentation};
use hirschlab::input::parse_document;
use hirschlab::monomial_ideal::MonomialIdeal;
use hirschlab::{hilbert, Coeff, Monomial, Polynomial, PrimeList, TermOrder};

const ORDERS: [TermOrder; 3] = [TermOrder::Lex, TermOrder::DegLex, TermOrder::DegRevLex];

/// Multiplicity and Krull dimension computed through initial ideals agree
/// across term orders on every example ideal.
#[test]
fn degeneration_invariance_across_orders() {
    let files = [
        "gorenstein_ci_reg3.ideal",
        "disconnected_pair.ideal",
        "determinantal_m3.ideal",
        "hypercube_n3.ideal",
        "path_m4.ideal",
        "diagonal_minors_2x4.ideal",
        "quadric_surface.ideal",
    ];
    for file in files {
        let doc = parse_document(&read_data(file)).unwrap();
        let ideal = commands::document_ideal(&doc, TermOrder::Lex).unwrap();
        let mut seen: Option<(u64, u64)> = None;
        for ord in ORDERS {
            let init = initial_ideal(&ideal, ord);
            let data = hilbert::hilbert(&init).unwrap();
            let pair = (data.dim, data.multiplicity);
            match seen {
                None => seen = Some(pair),
                Some(expect) => {
                    assert_eq!(pair, expect, "{file}: (dim, e) must not depend on the order")
                }
            }
        }
    }
}

/// A generic coordinate change collapses the degrevlex initial ideal to a
/// single minimal prime, while the dual graph of the ideal itself keeps its
/// path shape: the gap between diam(I) and diam(in I) is unbounded in this
/// direction.
#[test]
fn coordinate_change_collapses_initial_dual_graph() {
    let ring = xring(4);
    // fixed invertible matrix, generic enough for this instance
    let change: [[i64; 4]; 4] =
        [[1, 2, 3, 5], [7, 1, 2, 3], [3, 5, 7, 1], [2, 3, 1, 4]];
    let image = |v: usize| -> Polynomial {
        let mut acc = Polynomial::zero(&ring);
        for (j, &c) in change[v].iter().enumerate() {
            let term = var(&ring, j).scale(&ring.field().from_int(c));
            acc = acc.add(&term).unwrap();
        }
        acc
    };
    let path_pairs = [(0usize, 1usize), (1, 2), (2, 3)];
    let transformed: Vec<IdealPresentation> = path_pairs
        .iter()
        .map(|&(a, b)| IdealPresentation::new(&ring, vec![image(a), image(b)]).unwrap())
        .collect();

    // the dual graph survives the coordinate change: a path of length 2
    let list = PrimeList::new(&ring, transformed.clone(), TermOrder::DegRevLex).unwrap();
    let report = dual_graph_from_primes(&list, &WeightChoice::Unit).unwrap();
    assert_eq!(report.diameter, ExtNat::Finite(2));

    // but the degrevlex initial ideal of the intersection has one minimal
    // prime, so its dual graph is a point
    let meet = intersect_all(&transformed).unwrap();
    let init = initial_ideal(&meet, TermOrder::DegRevLex);
    let primes = init.minimal_primes().unwrap();
    assert_eq!(primes.len(), 1, "generic initial ideal has a unique minimal prime");
    let init_report = dual_graph_monomial(&init, &AnalyzerConfig::default()).unwrap();
    assert_eq!(init_report.diameter, ExtNat::Finite(0));
}

/// Facet-ridge adjacency equals the dual graph of the Stanley-Reisner
/// ideal: minimal primes are facet complements and the edge rules coincide.
#[test]
fn facet_graph_matches_stanley_reisner_dual_graph() {
    let complexes: Vec<(usize, Vec<BTreeSet<usize>>)> = vec![
        // triangle boundary
        (3, vec![[0, 1].into(), [1, 2].into(), [0, 2].into()]),
        // octahedron boundary
        (6, {
            let mut f = Vec::new();
            for a in [0, 1] {
                for b in [2, 3] {
                    for c in [4, 5] {
                        f.push([a, b, c].into());
                    }
                }
            }
            f
        }),
        // a strip of three triangles
        (5, vec![[0, 1, 2].into(), [1, 2, 3].into(), [2, 3, 4].into()]),
    ];
    for (n, facets) in complexes {
        let facet_graph = hirschlab::facets_to_dual_graph(&facets).unwrap();

        // Stanley-Reisner ideal: minimal subsets contained in no facet
        let ring = xring(n);
        let mut nonfaces: Vec<Monomial> = Vec::new();
        for mask in 1u32..(1 << n) {
            let set: BTreeSet<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
            if !facets.iter().any(|f| set.is_subset(f)) {
                nonfaces.push(Monomial::new(
                    (0..n).map(|i| u32::from(set.contains(&i))).collect(),
                ));
            }
        }
        let sr = MonomialIdeal::minimalize(&ring, nonfaces);
        let report = dual_graph_monomial(&sr, &AnalyzerConfig::default()).unwrap();

        // minimal primes are exactly the facet complements
        let complements: BTreeSet<Vec<usize>> = facets
            .iter()
            .map(|f| (0..n).filter(|v| !f.contains(v)).collect())
            .collect();
        let primes: BTreeSet<Vec<usize>> = report
            .vertices
            .iter()
            .map(|v| {
                v.generators
                    .iter()
                    .map(|name| ring.names().iter().position(|x| x == name).unwrap())
                    .collect()
            })
            .collect();
        assert_eq!(primes, complements);

        // identical graphs after matching facet labels to prime labels
        let label_of_facet: Vec<usize> = facets
            .iter()
            .map(|f| {
                let comp: Vec<usize> = (0..n).filter(|v| !f.contains(v)).collect();
                report
                    .vertices
                    .iter()
                    .position(|p| {
                        let vars: Vec<usize> = p
                            .generators
                            .iter()
                            .map(|name| ring.names().iter().position(|x| x == name).unwrap())
                            .collect();
                        vars == comp
                    })
                    .unwrap()
            })
            .collect();
        for i in 0..facets.len() {
            for j in i + 1..facets.len() {
                assert_eq!(
                    facet_graph.has_edge(i, j),
                    report.graph.has_edge(label_of_facet[i], label_of_facet[j]),
                    "edge rules must coincide"
                );
            }
        }
        assert_eq!(facet_graph.diameter(), report.graph.diameter());
    }
}

/// Multiplying 50 random rational binomials agrees with an
/// integer-arithmetic oracle after clearing denominators.
#[test]
fn rational_products_match_integer_oracle() {
    let ring = xring(1);
    let mut rng = StdRng::seed_from_u64(42);

    // dense integer polynomial oracle
    let mut int_poly: Vec<BigInt> = vec![BigInt::one()];
    let mut scale = BigInt::one();
    let mut rat_poly = Polynomial::constant(&ring, ring.field().one());

    for _ in 0..50 {
        let e1 = rng.random_range(0..=2u32);
        let e2 = rng.random_range(0..=2u32);
        let p1 = rng.random_range(-9..=9i64).max(1);
        let q1 = rng.random_range(1..=9i64);
        let p2 = rng.random_range(-9..=9i64);
        let q2 = rng.random_range(1..=9i64);

        let c1 = BigRational::new(BigInt::from(p1), BigInt::from(q1));
        let c2 = BigRational::new(BigInt::from(p2), BigInt::from(q2));
        let binom = Polynomial::from_terms(
            &ring,
            vec![
                (Monomial::new(vec![e1]), Coeff::Rat(c1.clone())),
                (Monomial::new(vec![e2]), Coeff::Rat(c2.clone())),
            ],
        );
        rat_poly = rat_poly.mul(&binom).unwrap();

        // clear denominators: d * binom has integer coefficients
        let d = q1.lcm(&q2);
        scale *= BigInt::from(d);
        let i1 = &c1 * BigRational::from_integer(BigInt::from(d));
        let i2 = &c2 * BigRational::from_integer(BigInt::from(d));
        assert!(i1.denom().is_one() && i2.denom().is_one());
        let mut int_binom = vec![BigInt::zero(); (e1.max(e2) + 1) as usize];
        int_binom[e1 as usize] += i1.numer();
        int_binom[e2 as usize] += i2.numer();
        let mut next = vec![BigInt::zero(); int_poly.len() + int_binom.len() - 1];
        for (i, a) in int_poly.iter().enumerate() {
            for (j, b) in int_binom.iter().enumerate() {
                next[i + j] += a * b;
            }
        }
        int_poly = next;
    }

    // rat_poly * scale must equal the integer oracle coefficientwise
    for (deg, int_coeff) in int_poly.iter().enumerate() {
        let got = rat_poly
            .coeff(&Monomial::new(vec![deg as u32]))
            .cloned()
            .unwrap_or(Coeff::Rat(BigRational::zero()));
        let Coeff::Rat(got) = got else { panic!("rational ring") };
        let scaled = got * BigRational::from_integer(scale.clone());
        assert!(scaled.denom().is_one(), "scaling clears all denominators");
        assert_eq!(scaled.numer(), int_coeff, "coefficient of degree {deg}");
    }
}

/// The edge rule is route-independent: monomial ideals analyzed directly
/// and through variable-generated prime presentations give identical
/// graphs.
#[test]
fn edge_rule_route_independence_on_random_squarefree_ideals() {
    let mut rng = StdRng::seed_from_u64(77);
    for _ in 0..20 {
        let n = rng.random_range(3..=6usize);
        let ring = xring(n);
        let count = rng.random_range(2..=4usize);
        let gens: Vec<Monomial> = (0..count)
            .map(|_| loop {
                let exps: Vec<u32> = (0..n).map(|_| u32::from(rng.random_bool(0.4))).collect();
                if exps.iter().any(|e| *e > 0) {
                    break Monomial::new(exps);
                }
            })
            .collect();
        let ideal = MonomialIdeal::minimalize(&ring, gens);
        let direct = dual_graph_monomial(&ideal, &AnalyzerConfig::default()).unwrap();
        let primes = ideal.minimal_primes().unwrap();
        let list = PrimeList::from_monomial_primes(&ring, &primes, TermOrder::Lex).unwrap();
        let via_primes = dual_graph_from_primes(&list, &WeightChoice::Unit).unwrap();
        assert_eq!(direct.graph, via_primes.graph);
        assert_eq!(direct.height, via_primes.height);
        assert_eq!(direct.diameter, via_primes.diameter);
        assert_eq!(direct.unmixed, via_primes.unmixed);
    }
}

/// Improper pairwise sums are warnings, not errors, and mark
/// non-homogeneous input.
#[test]
fn improper_sum_is_flagged_not_fatal() {
    let ring = named_ring(&["x", "y"]);
    let one = Polynomial::constant(&ring, ring.field().one());
    // x - 1 and x are coprime: their sum is improper; inputs are not
    // homogeneous
    let p1 = IdealPresentation::new(&ring, vec![var(&ring, 0).sub(&one).unwrap()]).unwrap();
    let p2 = IdealPresentation::new(&ring, vec![var(&ring, 0)]).unwrap();
    let list = PrimeList::new(&ring, vec![p1, p2], TermOrder::Lex).unwrap();
    let report = dual_graph_from_primes(&list, &WeightChoice::Unit).unwrap();
    assert_eq!(report.graph.edge_count(), 0);
    assert_eq!(report.warnings.len(), 1);
    assert!(report.warnings[0].contains("not homogeneous"));
}

/// GF(p) Gröbner bases work end to end.
#[test]
fn prime_field_groebner() {
    let doc = parse_document(
        "ring GF(7)[x,y]\norder lex\ngens: x^2+y; 3*x*y+1",
    )
    .unwrap();
    let ideal = commands::document_ideal(&doc, TermOrder::Lex).unwrap();
    let gb = hirschlab::buchberger(&ideal, TermOrder::Lex);
    assert!(gb.reduced);
    // the basis generates the same ideal
    for g in ideal.generators() {
        assert!(gb.contains(g));
    }
    // zero-dimensional: the initial ideal contains powers of both variables
    let init = MonomialIdeal::minimalize(ideal.ring(), gb.leading_monomials());
    assert_eq!(init.height().unwrap(), 2);
}

/// Complete intersections cut out by products of linear forms stay within
/// distance 2 in the dual graph (checked on the supplied decompositions).
#[test]
fn products_of_linear_forms_have_diameter_at_most_two() {
    // the checked-in curve in a union of two planes: a 4-cycle
    let doc = parse_document(&read_data("plane_arrangement_ci.ideal")).unwrap();
    let order = doc.effective_order(None);
    let primes = commands::document_primes(&doc, order).unwrap();
    let report = dual_graph_from_primes(&primes, &WeightChoice::Unit).unwrap();
    assert_eq!(report.height, 2);
    assert_eq!(report.graph.edge_count(), 4);
    assert_eq!(report.diameter, ExtNat::Finite(2));
    assert!(matches!(report.hirsch, hirschlab::HirschVerdict::Yes));

    // both generators split into three linear forms: the rook graph on 3x3
    let ring = xring(4);
    let f_factors = [
        var(&ring, 2),
        var(&ring, 3),
        var(&ring, 2).add(&var(&ring, 3)).unwrap(),
    ];
    let g_factors = [
        var(&ring, 0),
        var(&ring, 1),
        var(&ring, 0).add(&var(&ring, 1)).unwrap(),
    ];
    let mut presentations = Vec::new();
    for f in &f_factors {
        for g in &g_factors {
            presentations.push(IdealPresentation::new(&ring, vec![f.clone(), g.clone()]).unwrap());
        }
    }
    let list = PrimeList::new(&ring, presentations, TermOrder::Lex).unwrap();
    let report = dual_graph_from_primes(&list, &WeightChoice::Unit).unwrap();
    assert_eq!(report.vertices.len(), 9);
    assert_eq!(report.height, 2);
    assert_eq!(report.diameter, ExtNat::Finite(2));
}

/// Reduced bases of random quadric triples are independent of generator
/// order.
#[test]
fn random_quadric_triples_shuffle_invariance() {
    let mut rng = StdRng::seed_from_u64(4242);
    for case in 0..10 {
        let n = rng.random_range(3..=5usize);
        let ring = xring(n);
        let quadric = |rng: &mut StdRng| -> Polynomial {
            let mut acc = Polynomial::zero(&ring);
            for i in 0..n {
                for j in i..n {
                    let c = rng.random_range(-2..=2i64);
                    if c != 0 {
                        let mut exps = vec![0u32; n];
                        exps[i] += 1;
                        exps[j] += 1;
                        let term = Polynomial::term(
                            &ring,
                            Monomial::new(exps),
                            ring.field().from_int(c),
                        );
                        acc = acc.add(&term).unwrap();
                    }
                }
            }
            if acc.is_zero() {
                acc = var(&ring, 0).mul(&var(&ring, 1)).unwrap();
            }
            acc
        };
        let gens = vec![quadric(&mut rng), quadric(&mut rng), quadric(&mut rng)];
        let ideal = IdealPresentation::new(&ring, gens.clone()).unwrap();
        let base = hirschlab::buchberger(&ideal, TermOrder::DegRevLex);
        let mut shuffled = gens;
        shuffled.rotate_left(1);
        shuffled.swap(0, 1);
        let again = hirschlab::buchberger(
            &IdealPresentation::new(&ring, shuffled).unwrap(),
            TermOrder::DegRevLex,
        );
        assert_eq!(base.elements, again.elements, "case {case}");
    }
}

/// For square-free unmixed monomial ideals the multiplicity counts the
/// minimal primes.
#[test]
fn radical_multiplicity_counts_unmixed_min_primes() {
    let mut rng = StdRng::seed_from_u64(55);
    let mut verified = 0;
    for _ in 0..60 {
        let n = rng.random_range(2..=6usize);
        let ring = xring(n);
        let count = rng.random_range(1..=4usize);
        let gens: Vec<Monomial> = (0..count)
            .map(|_| loop {
                let exps: Vec<u32> = (0..n).map(|_| u32::from(rng.random_bool(0.45))).collect();
                if exps.iter().any(|e| *e > 0) {
                    break Monomial::new(exps);
                }
            })
            .collect();
        let ideal = MonomialIdeal::minimalize(&ring, gens);
        assert!(ideal.is_squarefree());
        let primes = ideal.minimal_primes().unwrap();
        let heights: BTreeSet<u64> = primes.iter().map(|p| p.height()).collect();
        if heights.len() != 1 {
            continue; // the additive formula needs unmixedness
        }
        let data = hilbert::hilbert(&ideal).unwrap();
        assert_eq!(data.multiplicity, primes.len() as u64, "{}", ideal.display());
        verified += 1;
    }
    assert!(verified >= 15, "enough unmixed samples ({verified})");
}
