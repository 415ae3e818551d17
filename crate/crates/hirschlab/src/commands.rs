//! Document-level command implementations shared by the CLI and the Python
//! bindings: input document in, report document out.

use std::time::Instant;

use crate::algebra::{Monomial, TermOrder};
use crate::dual_graph::{self, AnalyzerConfig, BoundEntry, WeightChoice};
use crate::error::{Error, Result};
use crate::graph::{self, GraphDocument, WeightedGraph};
use crate::groebner::{buchberger, initial_ideal, intersect_all, IdealPresentation};
use crate::hilbert;
use crate::input::InputDocument;
use crate::monomial_ideal::MonomialIdeal;
use crate::report::{self, RingDoc, SCHEMA};
use crate::PrimeList;

#[derive(Debug, Clone, Copy, Default)]
pub struct Options {
    pub order: Option<TermOrder>,
    pub config: AnalyzerConfig,
}

/// Requested vertex weights for dual-graph reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightsRequest {
    Unit,
    Multiplicity,
    /// Use the document's `weights:` annotation.
    File,
}

/// The ideal a document describes: its gens block, or the intersection of
/// its primes.
pub fn document_ideal(doc: &InputDocument, order: TermOrder) -> Result<IdealPresentation> {
    if let Some(gens) = &doc.gens {
        return IdealPresentation::new(&doc.ring, gens.clone());
    }
    let primes = document_primes(doc, order)?;
    intersect_all(primes.primes())
}

pub fn document_primes(doc: &InputDocument, order: TermOrder) -> Result<PrimeList> {
    let blocks = doc
        .primes
        .as_ref()
        .ok_or_else(|| Error::invalid("this command needs a primes: block"))?;
    let presentations = blocks
        .iter()
        .map(|gens| IdealPresentation::new(&doc.ring, gens.clone()))
        .collect::<Result<Vec<_>>>()?;
    PrimeList::new(&doc.ring, presentations, order)
}

/// Monomial form of a gens block, if every generator is a single term.
pub fn monomial_ideal_of(doc: &InputDocument) -> Option<MonomialIdeal> {
    let gens = doc.gens.as_ref()?;
    let mut monos: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !g.is_monomial() {
            return None;
        }
        let (m, _) = g.terms().next().expect("nonzero");
        monos.push(m.clone());
    }
    Some(MonomialIdeal::minimalize(&doc.ring, monos))
}

pub fn gb_report(doc: &InputDocument, opts: &Options) -> Result<report::GbDoc> {
    let start = Instant::now();
    let order = doc.effective_order(opts.order);
    let ideal = document_ideal(doc, order)?;
    let gb = buchberger(&ideal, order);
    let init = MonomialIdeal::minimalize(&doc.ring, gb.leading_monomials());
    Ok(report::GbDoc {
        schema: SCHEMA.to_string(),
        command: "gb".to_string(),
        ring: RingDoc::from_ring(&doc.ring),
        order: order.to_string(),
        basis: gb.elements.iter().map(|g| g.display(order)).collect(),
        initial: init.gens().iter().map(|m| m.display(doc.ring.names())).collect(),
        timing_ms: start.elapsed().as_millis() as u64,
    })
}

pub fn initial_report(doc: &InputDocument, opts: &Options) -> Result<report::InitialDoc> {
    let start = Instant::now();
    let order = doc.effective_order(opts.order);
    let ideal = document_ideal(doc, order)?;
    let init = initial_ideal(&ideal, order);
    Ok(report::InitialDoc {
        schema: SCHEMA.to_string(),
        command: "initial".to_string(),
        ring: RingDoc::from_ring(&doc.ring),
        order: order.to_string(),
        generators: init.gens().iter().map(|m| m.display(doc.ring.names())).collect(),
        squarefree: init.is_squarefree(),
        timing_ms: start.elapsed().as_millis() as u64,
    })
}

pub fn minprimes_report(doc: &InputDocument, opts: &Options) -> Result<report::MinprimesDoc> {
    let start = Instant::now();
    let Some(ideal) = monomial_ideal_of(doc) else {
        return Err(Error::invalid(
            "minprimes needs monomial generators; run `initial` first and feed its output",
        ));
    };
    let primes = ideal.minimal_primes_capped(opts.config.prime_cap)?;
    let height = primes.iter().map(|p| p.height()).min().expect("nonempty");
    Ok(report::MinprimesDoc {
        schema: SCHEMA.to_string(),
        command: "minprimes".to_string(),
        ring: RingDoc::from_ring(&doc.ring),
        height,
        count: primes.len(),
        primes: primes
            .iter()
            .map(|p| p.vars().iter().map(|&i| doc.ring.name(i).to_string()).collect())
            .collect(),
        timing_ms: start.elapsed().as_millis() as u64,
    })
}

pub fn hilbert_report(doc: &InputDocument, opts: &Options) -> Result<report::HilbertDoc> {
    let start = Instant::now();
    let order = doc.effective_order(opts.order);
    let (ideal, via_initial) = match monomial_ideal_of(doc) {
        Some(m) => (m, false),
        None => {
            // multiplicity and dimension are invariant under passing to the
            // initial ideal
            let presentation = document_ideal(doc, order)?;
            (initial_ideal(&presentation, order), true)
        }
    };
    let data = hilbert::hilbert(&ideal)?;
    let mut out = report::HilbertDoc::new(&doc.ring, order, via_initial, &data);
    out.timing_ms = start.elapsed().as_millis() as u64;
    Ok(out)
}

/// Builds the dual-graph report document; `verdict_only` trims it to the
/// Hirsch verdict.
pub fn dualgraph_report(
    doc: &InputDocument,
    weights: WeightsRequest,
    opts: &Options,
) -> Result<report::DualGraphDoc> {
    let start = Instant::now();
    let order = doc.effective_order(opts.order);

    let (mut graph_report, primes_asserted, prime_list) = if doc.primes.is_some() {
        let primes = document_primes(doc, order)?;
        let choice = match weights {
            WeightsRequest::Unit => WeightChoice::Unit,
            WeightsRequest::Multiplicity => WeightChoice::Multiplicity,
            WeightsRequest::File => WeightChoice::Explicit(doc.weights.clone().ok_or_else(
                || Error::invalid("weights from file need a weights: annotation"),
            )?),
        };
        let r = dual_graph::dual_graph_from_primes(&primes, &choice)?;
        (r, true, Some(primes))
    } else {
        let Some(ideal) = monomial_ideal_of(doc) else {
            return Err(Error::invalid(
                "dual graphs need a primes: block or monomial generators \
                 (prime decompositions of general ideals are user input)",
            ));
        };
        let r = dual_graph::dual_graph_monomial(&ideal, &opts.config)?;
        (r, false, None)
    };

    let theorem_deg = match doc.reg {
        Some(reg) if reg >= 1 => {
            let mult = match &prime_list {
                Some(primes) => dual_graph::multiplicity_weights(primes)?,
                // minimal primes of a monomial ideal are variable-generated,
                // multiplicity 1 each
                None => vec![1; graph_report.graph.vertex_count()],
            };
            let weighted = graph_report.graph.with_weights(mult)?;
            Some(dual_graph::theorem_deg_from_graph(&weighted, reg))
        }
        Some(_) => return Err(Error::invalid("reg: must be positive")),
        None => None,
    };
    if let Some(td) = &theorem_deg {
        graph_report.bounds.push(BoundEntry {
            name: "theorem-deg".to_string(),
            value: td.deg_bound,
            applicable: td.deg_bound.is_some(),
            note: Some(format!("reg {} as asserted", td.reg)),
        });
        graph_report.bounds.push(BoundEntry {
            name: "theorem-deg-cor".to_string(),
            value: td.refined.map(|b| b.value),
            applicable: td.refined.is_some(),
            note: td
                .refined
                .and_then(|b| b.fallback.then(|| "fell back to the Menger bound".to_string())),
        });
    }
    if let Some(hvec) = &doc.hvec {
        let value = dual_graph::gorenstein_hvec_bound(hvec)?;
        graph_report.bounds.push(BoundEntry {
            name: "hvec".to_string(),
            value: Some(value),
            applicable: true,
            note: Some("Gorenstein h-vector as asserted".to_string()),
        });
    }

    let mut out =
        report::DualGraphDoc::new("dualgraph", &doc.ring, order, primes_asserted, &graph_report);
    out.theorem_deg = theorem_deg.as_ref().map(report::TheoremDegDoc::from_report);
    out.timing_ms = start.elapsed().as_millis() as u64;
    Ok(out)
}

pub fn hirsch_report(doc: &InputDocument, opts: &Options) -> Result<report::HirschDoc> {
    let start = Instant::now();
    let full = dualgraph_report(doc, WeightsRequest::Unit, opts)?;
    Ok(report::HirschDoc {
        schema: SCHEMA.to_string(),
        command: "hirsch".to_string(),
        height: full.height,
        connected: full.connected,
        diameter: full.diameter,
        hirsch: full.hirsch,
        timing_ms: start.elapsed().as_millis() as u64,
    })
}

pub fn bounds_report(
    weights: &[u64],
    r: u64,
    l: u64,
    s: Option<u64>,
    hvec: Option<&[u64]>,
) -> Result<report::BoundsDoc> {
    let start = Instant::now();
    if weights.is_empty() {
        return Err(Error::invalid("weights are required"));
    }
    let s = match s {
        None => weights.len() as u64,
        Some(s) if s == weights.len() as u64 => s,
        Some(s) => {
            return Err(Error::invalid(format!(
                "vertex count {s} disagrees with {} weights",
                weights.len()
            )))
        }
    };
    let e: u64 = weights.iter().sum();
    let menger = graph::menger_bound(s, l)?;
    let prop = graph::rw_bound(e, r)?;
    let profile = graph::prefix_profile(weights, r, l)?;
    let refined = graph::refined_bound(s, &profile)?;
    let hvec_bound = hvec.map(dual_graph::gorenstein_hvec_bound).transpose()?;
    Ok(report::BoundsDoc {
        schema: SCHEMA.to_string(),
        command: "bounds".to_string(),
        s,
        weights: weights.to_vec(),
        total_weight: e,
        r,
        l,
        menger,
        prop_bound: prop,
        prop_cor: refined.value,
        prop_cor_fallback: refined.fallback,
        profile: report::ProfileDoc::from_profile(&profile),
        hvec_bound,
        timing_ms: start.elapsed().as_millis() as u64,
    })
}

pub fn connectivity_report(graph: &WeightedGraph) -> report::ConnectivityDoc {
    let start = Instant::now();
    let mut out = report::ConnectivityDoc::new(graph, &graph.connectivity_profile());
    out.timing_ms = start.elapsed().as_millis() as u64;
    out
}

pub fn connectivity_report_from_json(text: &str) -> Result<report::ConnectivityDoc> {
    let doc: GraphDocument = serde_json::from_str(text)
        .map_err(|e| Error::invalid(format!("invalid graph file: {e}")))?;
    let graph = WeightedGraph::from_document(&doc)?;
    Ok(connectivity_report(&graph))
}

pub fn compare_report(doc: &InputDocument, opts: &Options) -> Result<report::CompareDoc> {
    let start = Instant::now();
    let order = doc.effective_order(opts.order);
    let primes = document_primes(doc, order)?;
    let comp = dual_graph::verify_comp(&primes, &opts.config)?;
    let mut out = report::CompareDoc::new(&doc.ring, order, &comp);
    out.timing_ms = start.elapsed().as_millis() as u64;
    Ok(out)
}

pub fn certify_report(doc: &InputDocument, opts: &Options) -> Result<report::CertifyDoc> {
    let start = Instant::now();
    let order = doc.effective_order(opts.order);
    let ideal = document_ideal(doc, order)?;
    let cert = dual_graph::certify_squarefree_ci(&ideal, order)?;
    let mut out = report::CertifyDoc::new(&doc.ring, order, &cert);
    out.timing_ms = start.elapsed().as_millis() as u64;
    Ok(out)
}
