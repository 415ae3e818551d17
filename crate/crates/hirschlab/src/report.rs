//! Machine-readable report documents. Field order is fixed by declaration,
//! `diameter: null` appears exactly when `connected: false`, and infinite
//! connectivity values render as null plus an `*_infinite` flag. The schema
//! ships in `docs/report.schema.json`.

use serde::{Deserialize, Serialize};

use crate::algebra::{PolyRing, TermOrder};
use crate::dual_graph::{
    BoundEntry, CiCertificate, CompReport, DualGraphReport, TheoremDegReport,
};
use crate::graph::{ConnectivityProfile, ExtNat, PrefixEntry, PrefixProfile, WeightedGraph};
use crate::hilbert::HilbertData;

pub const SCHEMA: &str = "hirschlab-report/v1";

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct RingDoc {
    pub field: String,
    pub variables: Vec<String>,
}

impl RingDoc {
    pub fn from_ring(ring: &PolyRing) -> Self {
        RingDoc {
            field: ring.field().to_string(),
            variables: ring.names().to_vec(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct BoundDoc {
    pub name: String,
    pub value: Option<u64>,
    pub applicable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl BoundDoc {
    pub fn from_entry(e: &BoundEntry) -> Self {
        BoundDoc {
            name: e.name.clone(),
            value: e.value,
            applicable: e.applicable,
            note: e.note.clone(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GbDoc {
    pub schema: String,
    pub command: String,
    pub ring: RingDoc,
    pub order: String,
    pub basis: Vec<String>,
    pub initial: Vec<String>,
    pub timing_ms: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InitialDoc {
    pub schema: String,
    pub command: String,
    pub ring: RingDoc,
    pub order: String,
    pub generators: Vec<String>,
    pub squarefree: bool,
    pub timing_ms: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MinprimesDoc {
    pub schema: String,
    pub command: String,
    pub ring: RingDoc,
    pub height: u64,
    pub count: usize,
    pub primes: Vec<Vec<String>>,
    pub timing_ms: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HilbertDoc {
    pub schema: String,
    pub command: String,
    pub ring: RingDoc,
    pub order: String,
    pub via_initial: bool,
    pub numerator: Vec<i64>,
    pub dim: u64,
    pub multiplicity: u64,
    pub timing_ms: u64,
}

impl HilbertDoc {
    pub fn new(ring: &PolyRing, order: TermOrder, via_initial: bool, data: &HilbertData) -> Self {
        HilbertDoc {
            schema: SCHEMA.to_string(),
            command: "hilbert".to_string(),
            ring: RingDoc::from_ring(ring),
            order: order.to_string(),
            via_initial,
            numerator: data.numerator_i64(),
            dim: data.dim,
            multiplicity: data.multiplicity,
            timing_ms: 0,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VertexDoc {
    pub index: usize,
    pub generators: Vec<String>,
    pub height: u64,
    pub weight: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TheoremDegDoc {
    pub reg: u64,
    pub weights: Vec<u64>,
    pub total_weight: u64,
    pub deg_bound: Option<u64>,
    pub refined_bound: Option<u64>,
    pub refined_fallback: bool,
    pub l_used: Option<u64>,
    pub rw_connectivity_confirmed: bool,
    pub consistent: bool,
    pub disclaimers: Vec<String>,
}

impl TheoremDegDoc {
    pub fn from_report(r: &TheoremDegReport) -> Self {
        TheoremDegDoc {
            reg: r.reg,
            weights: r.weights.clone(),
            total_weight: r.total_weight,
            deg_bound: r.deg_bound,
            refined_bound: r.refined.map(|b| b.value),
            refined_fallback: r.refined.is_some_and(|b| b.fallback),
            l_used: r.l_used,
            rw_connectivity_confirmed: r.rw_connectivity_confirmed,
            consistent: r.consistent,
            disclaimers: r.disclaimers.clone(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DualGraphDoc {
    pub schema: String,
    pub command: String,
    pub ring: RingDoc,
    pub order: String,
    pub primes_asserted: bool,
    pub vertices: Vec<VertexDoc>,
    pub edges: Vec<[usize; 2]>,
    pub height: u64,
    pub unmixed: bool,
    pub connected: bool,
    pub diameter: Option<u64>,
    pub hirsch: String,
    pub weights: Vec<u64>,
    pub bounds: Vec<BoundDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theorem_deg: Option<TheoremDegDoc>,
    pub warnings: Vec<String>,
    pub disclaimers: Vec<String>,
    pub timing_ms: u64,
}

impl DualGraphDoc {
    pub fn new(
        command: &str,
        ring: &PolyRing,
        order: TermOrder,
        primes_asserted: bool,
        report: &DualGraphReport,
    ) -> Self {
        DualGraphDoc {
            schema: SCHEMA.to_string(),
            command: command.to_string(),
            ring: RingDoc::from_ring(ring),
            order: order.to_string(),
            primes_asserted,
            vertices: report
                .vertices
                .iter()
                .map(|v| VertexDoc {
                    index: v.index,
                    generators: v.generators.clone(),
                    height: v.height,
                    weight: v.weight,
                })
                .collect(),
            edges: report.edges_1based(),
            height: report.height,
            unmixed: report.unmixed,
            connected: !report.diameter.is_infinite(),
            diameter: report.diameter.finite(),
            hirsch: report.hirsch.as_str().to_string(),
            weights: report.graph.weights().to_vec(),
            bounds: report.bounds.iter().map(BoundDoc::from_entry).collect(),
            theorem_deg: None,
            warnings: report.warnings.clone(),
            disclaimers: report.disclaimers.clone(),
            timing_ms: 0,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HirschDoc {
    pub schema: String,
    pub command: String,
    pub height: u64,
    pub connected: bool,
    pub diameter: Option<u64>,
    pub hirsch: String,
    pub timing_ms: u64,
}

impl HirschDoc {
    pub fn from_report(report: &DualGraphReport) -> Self {
        HirschDoc {
            schema: SCHEMA.to_string(),
            command: "hirsch".to_string(),
            height: report.height,
            connected: !report.diameter.is_infinite(),
            diameter: report.diameter.finite(),
            hirsch: report.hirsch.as_str().to_string(),
            timing_ms: 0,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ProfileDoc {
    pub l: u64,
    pub r: u64,
    pub sorted_weights: Vec<u64>,
    pub entries: Vec<PrefixEntry>,
    pub h: Option<u64>,
}

impl ProfileDoc {
    pub fn from_profile(p: &PrefixProfile) -> Self {
        ProfileDoc {
            l: p.l,
            r: p.r,
            sorted_weights: p.sorted_weights.clone(),
            entries: p.entries.clone(),
            h: p.h,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BoundsDoc {
    pub schema: String,
    pub command: String,
    pub s: u64,
    pub weights: Vec<u64>,
    pub total_weight: u64,
    pub r: u64,
    pub l: u64,
    pub menger: u64,
    pub prop_bound: u64,
    pub prop_cor: u64,
    pub prop_cor_fallback: bool,
    pub profile: ProfileDoc,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hvec_bound: Option<u64>,
    pub timing_ms: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConnectivityDoc {
    pub schema: String,
    pub command: String,
    pub s: usize,
    pub total_weight: u64,
    pub connected: bool,
    pub vertex_connectivity: Option<u64>,
    pub vertex_connectivity_infinite: bool,
    pub weighted_connectivity: Option<u64>,
    pub weighted_connectivity_infinite: bool,
    pub diameter: Option<u64>,
    pub timing_ms: u64,
}

impl ConnectivityDoc {
    pub fn new(graph: &WeightedGraph, profile: &ConnectivityProfile) -> Self {
        let split = |v: ExtNat| -> (Option<u64>, bool) {
            match v {
                ExtNat::Finite(x) => (Some(x), false),
                ExtNat::Infinite => (None, true),
            }
        };
        let (vc, vc_inf) = split(profile.vertex_connectivity);
        let (wc, wc_inf) = split(profile.weighted_connectivity);
        ConnectivityDoc {
            schema: SCHEMA.to_string(),
            command: "connectivity".to_string(),
            s: graph.vertex_count(),
            total_weight: graph.total_weight(),
            connected: profile.connected,
            vertex_connectivity: vc,
            vertex_connectivity_infinite: vc_inf,
            weighted_connectivity: wc,
            weighted_connectivity_infinite: wc_inf,
            diameter: graph.diameter().finite(),
            timing_ms: 0,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CompareDoc {
    pub schema: String,
    pub command: String,
    pub ring: RingDoc,
    pub order: String,
    pub prime_count: usize,
    pub subsets_checked: usize,
    pub hypothesis_holds: bool,
    pub failing_subsets: Vec<Vec<usize>>,
    pub initial_of_intersection: Vec<String>,
    pub ideal_connected: bool,
    pub diam_ideal: Option<u64>,
    pub initial_connected: bool,
    pub diam_initial: Option<u64>,
    pub conclusion_holds: bool,
    pub theorem_violated: bool,
    pub timing_ms: u64,
}

impl CompareDoc {
    pub fn new(ring: &PolyRing, order: TermOrder, report: &CompReport) -> Self {
        CompareDoc {
            schema: SCHEMA.to_string(),
            command: "compare-initial".to_string(),
            ring: RingDoc::from_ring(ring),
            order: order.to_string(),
            prime_count: report.prime_count,
            subsets_checked: report.subsets_checked,
            hypothesis_holds: report.hypothesis_holds,
            failing_subsets: report.failing_subsets.clone(),
            initial_of_intersection: report
                .initial_of_intersection
                .gens()
                .iter()
                .map(|m| m.display(ring.names()))
                .collect(),
            ideal_connected: !report.diam_ideal.is_infinite(),
            diam_ideal: report.diam_ideal.finite(),
            initial_connected: !report.diam_initial.is_infinite(),
            diam_initial: report.diam_initial.finite(),
            conclusion_holds: report.conclusion_holds,
            theorem_violated: report.theorem_violated,
            timing_ms: 0,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CertifyDoc {
    pub schema: String,
    pub command: String,
    pub ring: RingDoc,
    pub order: String,
    pub positive: bool,
    pub height: u64,
    pub basis_size: usize,
    pub initial_generators: Vec<String>,
    pub squarefree: bool,
    pub pairwise_coprime: bool,
    pub basis_count_equals_height: bool,
    pub hirsch: Option<String>,
    pub timing_ms: u64,
}

impl CertifyDoc {
    pub fn new(ring: &PolyRing, order: TermOrder, cert: &CiCertificate) -> Self {
        CertifyDoc {
            schema: SCHEMA.to_string(),
            command: "certify-ci".to_string(),
            ring: RingDoc::from_ring(ring),
            order: order.to_string(),
            positive: cert.positive,
            height: cert.height,
            basis_size: cert.basis_size,
            initial_generators: cert.initial_generators.clone(),
            squarefree: cert.squarefree,
            pairwise_coprime: cert.pairwise_coprime,
            basis_count_equals_height: cert.basis_count_equals_height,
            hirsch: cert.positive.then(|| "yes".to_string()),
            timing_ms: 0,
        }
    }
}

fn fmt_opt(v: Option<u64>) -> String {
    v.map_or_else(|| "inf".to_string(), |x| x.to_string())
}

/// Human summaries mirroring the worked-example tables.
pub mod text {
    use super::*;

    pub fn dual_graph(doc: &DualGraphDoc) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "dual graph over {}[{}], order {}\n",
            doc.ring.field,
            doc.ring.variables.join(","),
            doc.order
        ));
        for v in &doc.vertices {
            out.push_str(&format!(
                "  p{} (height {}, weight {}): ({})\n",
                v.index,
                v.height,
                v.weight,
                v.generators.join(", ")
            ));
        }
        let edges: Vec<String> =
            doc.edges.iter().map(|[a, b]| format!("{{{a},{b}}}")).collect();
        out.push_str(&format!("edges: {}\n", if edges.is_empty() { "none".to_string() } else { edges.join(" ") }));
        out.push_str(&format!(
            "height {} | unmixed {} | diameter {} | hirsch {}\n",
            doc.height,
            doc.unmixed,
            fmt_opt(doc.diameter),
            doc.hirsch
        ));
        out.push_str("bounds:\n");
        for b in &doc.bounds {
            let val = b.value.map_or("-".to_string(), |v| v.to_string());
            let note = b.note.as_deref().unwrap_or("");
            out.push_str(&format!(
                "  {:<16} {:<6} applicable={} {}\n",
                b.name, val, b.applicable, note
            ));
        }
        if let Some(td) = &doc.theorem_deg {
            out.push_str(&format!(
                "regularity bound (reg {}): deg-bound {} | refined {} | (r,w)-connected {} | consistent {}\n",
                td.reg,
                fmt_opt(td.deg_bound),
                td.refined_bound.map_or("-".to_string(), |v| if td.refined_fallback {
                    format!("{v} (menger fallback)")
                } else {
                    v.to_string()
                }),
                td.rw_connectivity_confirmed,
                td.consistent,
            ));
        }
        for w in &doc.warnings {
            out.push_str(&format!("warning: {w}\n"));
        }
        for d in &doc.disclaimers {
            out.push_str(&format!("note: {d}\n"));
        }
        out
    }

    pub fn hirsch(doc: &HirschDoc) -> String {
        format!(
            "height {} | diameter {} | hirsch {}\n",
            doc.height,
            fmt_opt(doc.diameter),
            doc.hirsch
        )
    }

    pub fn gb(doc: &GbDoc) -> String {
        let mut out = format!("reduced basis under {} ({} elements):\n", doc.order, doc.basis.len());
        for b in &doc.basis {
            out.push_str(&format!("  {b}\n"));
        }
        out.push_str(&format!("initial ideal: ({})\n", doc.initial.join(", ")));
        out
    }

    pub fn initial(doc: &InitialDoc) -> String {
        format!(
            "initial ideal under {}: ({})\nsquarefree: {}\n",
            doc.order,
            doc.generators.join(", "),
            doc.squarefree
        )
    }

    pub fn minprimes(doc: &MinprimesDoc) -> String {
        let mut out = format!("{} minimal primes, height {}:\n", doc.count, doc.height);
        for p in &doc.primes {
            out.push_str(&format!("  ({})\n", p.join(",")));
        }
        out
    }

    pub fn hilbert(doc: &HilbertDoc) -> String {
        let h: Vec<String> = doc
            .numerator
            .iter()
            .enumerate()
            .map(|(i, c)| match i {
                0 => c.to_string(),
                1 => format!("{c}*t"),
                _ => format!("{c}*t^{i}"),
            })
            .collect();
        format!(
            "h(t) = {} | dim {} | multiplicity {}{}\n",
            h.join(" + "),
            doc.dim,
            doc.multiplicity,
            if doc.via_initial { " (via initial ideal)" } else { "" }
        )
    }

    pub fn bounds(doc: &BoundsDoc) -> String {
        let mut out = format!(
            "s {} | e {} | r {} | l {}\nmenger     {}\nprop-bound {}\nprop-cor   {}{}\n",
            doc.s,
            doc.total_weight,
            doc.r,
            doc.l,
            doc.menger,
            doc.prop_bound,
            doc.prop_cor,
            if doc.prop_cor_fallback { " (menger fallback)" } else { "" }
        );
        if let Some(h) = doc.profile.h {
            let bs: Vec<String> =
                doc.profile.entries.iter().map(|e| format!("b_{}={}", e.i, e.b)).collect();
            out.push_str(&format!("profile: h={h}, {}\n", bs.join(", ")));
        } else {
            out.push_str("profile: no nonempty A_i\n");
        }
        if let Some(hb) = doc.hvec_bound {
            out.push_str(&format!("hvec bound: {hb}\n"));
        }
        out
    }

    pub fn connectivity(doc: &ConnectivityDoc) -> String {
        let show = |v: Option<u64>, inf: bool| {
            if inf {
                "inf".to_string()
            } else {
                fmt_opt(v)
            }
        };
        format!(
            "s {} | total weight {} | connected {}\nvertex connectivity   {}\nweighted connectivity {}\ndiameter {}\n",
            doc.s,
            doc.total_weight,
            doc.connected,
            show(doc.vertex_connectivity, doc.vertex_connectivity_infinite),
            show(doc.weighted_connectivity, doc.weighted_connectivity_infinite),
            fmt_opt(doc.diameter)
        )
    }

    pub fn compare(doc: &CompareDoc) -> String {
        let mut out = format!(
            "{} primes, {} subset intersections checked\nhypothesis (all initial ideals squarefree): {}\n",
            doc.prime_count,
            doc.subsets_checked,
            if doc.hypothesis_holds { "holds" } else { "fails" }
        );
        for f in &doc.failing_subsets {
            let ids: Vec<String> = f.iter().map(|i| format!("p{i}")).collect();
            out.push_str(&format!("  non-squarefree subset: {{{}}}\n", ids.join(",")));
        }
        out.push_str(&format!(
            "in(I) = ({})\ndiam(I) = {} | diam(in I) = {} | diam(I) <= diam(in I): {}\n",
            doc.initial_of_intersection.join(", "),
            fmt_opt(doc.diam_ideal),
            fmt_opt(doc.diam_initial),
            doc.conclusion_holds
        ));
        if doc.theorem_violated {
            out.push_str("FATAL: hypothesis holds but the diameter comparison fails\n");
        }
        out
    }

    pub fn certify(doc: &CertifyDoc) -> String {
        format!(
            "certificate: {}\nbasis size {} | height {} | squarefree {} | pairwise coprime {}\ninitial generators: ({}){}\n",
            if doc.positive { "POSITIVE" } else { "negative" },
            doc.basis_size,
            doc.height,
            doc.squarefree,
            doc.pairwise_coprime,
            doc.initial_generators.join(", "),
            if doc.positive { "\nhirsch: yes (certified)" } else { "" }
        )
    }
}
