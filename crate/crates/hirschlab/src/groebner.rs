//! Buchberger's algorithm with the normal selection strategy and the
//! product and chain criteria, reduced bases, normal forms, initial ideals,
//! elimination-based ideal intersection, and heights via initial ideals.

use std::cmp::Ordering;
use std::sync::Arc;

use crate::algebra::{BaseOrder, Coeff, CoefficientField, Monomial, PolyRing, Polynomial, TermOrder};
use crate::error::{Error, Result};
use crate::monomial_ideal::MonomialIdeal;

/// A finitely presented ideal: nonzero generators in a common ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealPresentation {
    ring: Arc<PolyRing>,
    generators: Vec<Polynomial>,
}

impl IdealPresentation {
    pub fn new(ring: &Arc<PolyRing>, generators: Vec<Polynomial>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::invalid("ideal presentations need at least one generator"));
        }
        for g in &generators {
            if g.is_zero() {
                return Err(Error::ZeroGenerator);
            }
            if !g.ring().same_as(ring) {
                return Err(Error::RingMismatch);
            }
        }
        Ok(IdealPresentation { ring: Arc::clone(ring), generators })
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// The concatenated presentation of a sum of ideals.
    pub fn sum(&self, other: &IdealPresentation) -> Result<IdealPresentation> {
        if !self.ring.same_as(&other.ring) {
            return Err(Error::RingMismatch);
        }
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        IdealPresentation::new(&self.ring, gens)
    }
}

/// A Gröbner basis. `reduced` bases are monic, no term of any element is
/// divisible by the leading monomial of another, and the element list is
/// sorted by decreasing leading monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    pub order: TermOrder,
    pub elements: Vec<Polynomial>,
    pub reduced: bool,
}

impl GroebnerBasis {
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|g| g.leading_monomial(self.order).expect("basis elements are nonzero"))
            .collect()
    }

    /// True when the basis contains a nonzero constant, i.e. the ideal is
    /// the whole ring.
    pub fn is_improper(&self) -> bool {
        self.elements.iter().any(|g| !g.is_zero() && g.is_constant())
    }

    /// Ideal membership through the normal form.
    pub fn contains(&self, f: &Polynomial) -> bool {
        normal_form_unchecked(f, &self.elements, self.order).is_zero()
    }
}

/// The S-polynomial lcm/lt(f)*f - lcm/lt(g)*g.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, ord: TermOrder) -> Result<Polynomial> {
    let (fm, fc) = f.leading_term(ord)?;
    let (gm, gc) = g.leading_term(ord)?;
    let field = f.ring().field();
    let lcm = fm.lcm(&gm);
    let fq = lcm.checked_div(&fm).expect("lcm is divisible by both");
    let gq = lcm.checked_div(&gm).expect("lcm is divisible by both");
    let left = f.mul_term(&fq, &field.inv(&fc)?);
    let right = g.mul_term(&gq, &field.inv(&gc)?);
    left.sub(&right)
}

/// Deterministic normal form: at each step the greatest reducible term is
/// reduced by the first basis element (in sequence order) whose leading
/// monomial divides it. No term of the result is divisible by any basis
/// leading monomial, and f minus the result lies in the ideal of the basis.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial], ord: TermOrder) -> Result<Polynomial> {
    for g in basis {
        if g.is_zero() {
            return Err(Error::ZeroGenerator);
        }
        if !g.ring().same_as(f.ring()) {
            return Err(Error::RingMismatch);
        }
    }
    Ok(normal_form_unchecked(f, basis, ord))
}

fn normal_form_unchecked(f: &Polynomial, basis: &[Polynomial], ord: TermOrder) -> Polynomial {
    let field = f.ring().field();
    let leads: Vec<(Monomial, Coeff)> = basis
        .iter()
        .map(|g| g.leading_term(ord).expect("basis elements are nonzero"))
        .collect();
    let mut current = f.clone();
    loop {
        // Greatest reducible term of the current polynomial.
        let mut target: Option<(Monomial, Coeff, usize)> = None;
        for (m, c) in current.terms() {
            if let Some(k) = leads.iter().position(|(lm, _)| lm.divides(m)) {
                let better = match &target {
                    None => true,
                    Some((tm, _, _)) => ord.cmp_unchecked(m, tm) == Ordering::Greater,
                };
                if better {
                    target = Some((m.clone(), c.clone(), k));
                }
            }
        }
        let Some((m, c, k)) = target else {
            return current;
        };
        let (lm, lc) = &leads[k];
        let factor_m = m.checked_div(lm).expect("divisibility checked");
        let factor_c = field.div(&c, lc).expect("leading coefficients are invertible");
        current = current
            .sub(&basis[k].mul_term(&factor_m, &factor_c))
            .expect("same ring");
    }
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    created: usize,
}

/// Buchberger's algorithm returning the unique reduced Gröbner basis.
///
/// Pair selection is the normal strategy: smallest lcm under the order,
/// ties broken by creation index. Pairs with coprime leading monomials are
/// skipped (product criterion); a pair is also skipped when a third basis
/// element divides its lcm and both side pairs were already treated
/// (chain criterion).
pub fn buchberger(ideal: &IdealPresentation, ord: TermOrder) -> GroebnerBasis {
    let field = ideal.ring().field();
    let mut basis: Vec<Polynomial> = Vec::new();
    for g in ideal.generators() {
        let g = g.remove_content();
        if !basis.contains(&g) {
            basis.push(g);
        }
    }

    let mut leads: Vec<Monomial> = basis
        .iter()
        .map(|g| g.leading_monomial(ord).expect("generators are nonzero"))
        .collect();
    let mut queue: Vec<Pair> = Vec::new();
    let mut treated: Vec<(usize, usize)> = Vec::new();
    let mut created = 0usize;
    for i in 0..basis.len() {
        for j in 0..i {
            queue.push(Pair { i: j, j: i, lcm: leads[j].lcm(&leads[i]), created });
            created += 1;
        }
    }

    while !queue.is_empty() {
        // Normal selection.
        let mut best = 0;
        for k in 1..queue.len() {
            let cmp = ord
                .cmp_unchecked(&queue[k].lcm, &queue[best].lcm)
                .then(queue[k].created.cmp(&queue[best].created));
            if cmp == Ordering::Less {
                best = k;
            }
        }
        let pair = queue.swap_remove(best);
        treated.push((pair.i, pair.j));

        // Product criterion: coprime leading monomials reduce to zero.
        if leads[pair.i].coprime(&leads[pair.j]) {
            continue;
        }
        // Chain criterion.
        let chained = (0..basis.len()).any(|k| {
            k != pair.i
                && k != pair.j
                && leads[k].divides(&pair.lcm)
                && treated.contains(&key(pair.i, k))
                && treated.contains(&key(pair.j, k))
        });
        if chained {
            continue;
        }

        let s = s_polynomial(&basis[pair.i], &basis[pair.j], ord)
            .expect("basis elements are nonzero");
        let reduced = normal_form_unchecked(&s, &basis, ord);
        if reduced.is_zero() {
            continue;
        }
        let reduced = reduced.remove_content();
        let new_lead = reduced.leading_monomial(ord).expect("nonzero");
        let new_index = basis.len();
        for (i, lead) in leads.iter().enumerate() {
            queue.push(Pair { i, j: new_index, lcm: lead.lcm(&new_lead), created });
            created += 1;
        }
        basis.push(reduced);
        leads.push(new_lead);
    }

    let reduced = reduce_basis(basis, ord, field);

    #[cfg(debug_assertions)]
    {
        for (i, f) in reduced.iter().enumerate() {
            for g in reduced.iter().skip(i + 1) {
                let s = s_polynomial(f, g, ord).expect("nonzero");
                debug_assert!(
                    normal_form_unchecked(&s, &reduced, ord).is_zero(),
                    "S-polynomial does not reduce to zero"
                );
            }
        }
        for g in ideal.generators() {
            debug_assert!(
                normal_form_unchecked(g, &reduced, ord).is_zero(),
                "input generator escapes the computed basis"
            );
        }
    }

    GroebnerBasis { order: ord, elements: reduced, reduced: true }
}

fn key(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

/// Minimalizes and autoreduces to the unique reduced basis, sorted by
/// decreasing leading monomial.
fn reduce_basis(basis: Vec<Polynomial>, ord: TermOrder, field: CoefficientField) -> Vec<Polynomial> {
    let _ = field;
    let leads: Vec<Monomial> = basis
        .iter()
        .map(|g| g.leading_monomial(ord).expect("nonzero"))
        .collect();
    let mut keep: Vec<Polynomial> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let redundant = leads
            .iter()
            .enumerate()
            .any(|(j, lj)| j != i && lj.divides(&leads[i]) && (leads[i] != *lj || j < i));
        if !redundant {
            keep.push(g.clone());
        }
    }
    // Tail-reduce every element against the others until stable.
    loop {
        let mut changed = false;
        for i in 0..keep.len() {
            let others: Vec<Polynomial> = keep
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, g)| g.clone())
                .collect();
            let reduced = normal_form_unchecked(&keep[i], &others, ord);
            debug_assert!(!reduced.is_zero(), "minimal basis element reduced away");
            let reduced = reduced.remove_content();
            if reduced != keep[i] {
                keep[i] = reduced;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let mut monic: Vec<Polynomial> = keep
        .into_iter()
        .map(|g| g.monic(ord).expect("nonzero"))
        .collect();
    monic.sort_by(|a, b| {
        let la = a.leading_monomial(ord).expect("nonzero");
        let lb = b.leading_monomial(ord).expect("nonzero");
        ord.cmp_unchecked(&lb, &la)
    });
    monic
}

/// The monomial ideal of leading monomials of the reduced basis.
pub fn initial_ideal(ideal: &IdealPresentation, ord: TermOrder) -> MonomialIdeal {
    let gb = buchberger(ideal, ord);
    MonomialIdeal::minimalize(ideal.ring(), gb.leading_monomials())
}

/// Intersection by elimination: adjoin an auxiliary variable t ranked above
/// every other, form t*A + (1-t)*B, and keep the basis elements free of t.
pub fn ideal_intersection(
    a: &IdealPresentation,
    b: &IdealPresentation,
) -> Result<IdealPresentation> {
    if !a.ring().same_as(b.ring()) {
        return Err(Error::RingMismatch);
    }
    let ring = a.ring();
    let mut aux = "t".to_string();
    let mut k = 0;
    while ring.names().contains(&aux) {
        aux = format!("t{k}");
        k += 1;
    }
    let mut names = vec![aux];
    names.extend(ring.names().iter().cloned());
    let ext_ring = PolyRing::new(names, ring.field())?;

    let lift = |f: &Polynomial| -> Polynomial {
        Polynomial::from_terms(
            &ext_ring,
            f.terms().map(|(m, c)| {
                let mut exps = vec![0u32];
                exps.extend_from_slice(m.exponents());
                (Monomial::new(exps), c.clone())
            }),
        )
    };
    let t = Polynomial::variable(&ext_ring, 0);
    let one = Polynomial::constant(&ext_ring, ext_ring.field().one());
    let one_minus_t = one.sub(&t).expect("same ring");

    let mut gens = Vec::new();
    for f in a.generators() {
        gens.push(t.mul(&lift(f)).expect("same ring"));
    }
    for g in b.generators() {
        gens.push(one_minus_t.mul(&lift(g)).expect("same ring"));
    }
    let extended = IdealPresentation::new(&ext_ring, gens)?;
    let elim = TermOrder::Elimination { prefix: 1, base: BaseOrder::DegRevLex };
    let gb = buchberger(&extended, elim);

    let mut result = Vec::new();
    for g in &gb.elements {
        if g.terms().all(|(m, _)| m.exponent(0) == 0) {
            let lowered = Polynomial::from_terms(
                ring,
                g.terms().map(|(m, c)| (Monomial::new(m.exponents()[1..].to_vec()), c.clone())),
            );
            result.push(lowered);
        }
    }
    if result.is_empty() {
        // The intersection of nonzero ideals in a domain is nonzero, so this
        // only happens for improper arithmetic artifacts; keep the zero ideal
        // visible rather than panicking.
        return Err(Error::invalid("empty intersection basis"));
    }
    IdealPresentation::new(ring, result)
}

/// Intersection of a nonempty family, left to right.
pub fn intersect_all(ideals: &[IdealPresentation]) -> Result<IdealPresentation> {
    let mut iter = ideals.iter();
    let first = iter.next().ok_or_else(|| Error::invalid("empty intersection family"))?;
    let mut acc = first.clone();
    for next in iter {
        acc = ideal_intersection(&acc, next)?;
    }
    Ok(acc)
}

/// Height of a proper ideal, computed from its initial ideal (heights are
/// preserved under Gröbner degeneration).
pub fn height_via_initial(ideal: &IdealPresentation, ord: TermOrder) -> Result<u64> {
    let gb = buchberger(ideal, ord);
    if gb.is_improper() {
        return Err(Error::ImproperIdeal);
    }
    let init = MonomialIdeal::minimalize(ideal.ring(), gb.leading_monomials());
    init.height()
}

/// Equality of ideals by mutual membership against each other's bases.
pub fn same_ideal(a: &IdealPresentation, b: &IdealPresentation, ord: TermOrder) -> Result<bool> {
    if !a.ring().same_as(b.ring()) {
        return Err(Error::RingMismatch);
    }
    let gb_a = buchberger(a, ord);
    let gb_b = buchberger(b, ord);
    Ok(a.generators().iter().all(|g| gb_b.contains(g))
        && b.generators().iter().all(|g| gb_a.contains(g)))
}
