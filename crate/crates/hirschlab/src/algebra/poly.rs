//! Polynomial rings and exact multivariate polynomials.
//!
//! Polynomials are immutable values: arithmetic returns fresh polynomials and
//! never stores zero coefficients, so shared references are always safe.

use std::collections::BTreeMap;
use std::sync::Arc;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Zero};

use crate::algebra::field::{Coeff, CoefficientField};
use crate::algebra::monomial::Monomial;
use crate::algebra::order::TermOrder;
use crate::error::{Error, Result};

/// A polynomial ring: variable names (declaration order ranks them, first
/// greatest) over Q or GF(p).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyRing {
    names: Vec<String>,
    field: CoefficientField,
}

impl PolyRing {
    pub fn new(names: Vec<String>, field: CoefficientField) -> Result<Arc<PolyRing>> {
        if names.is_empty() {
            return Err(Error::invalid("a polynomial ring needs at least one variable"));
        }
        for (i, a) in names.iter().enumerate() {
            if names[..i].contains(a) {
                return Err(Error::invalid(format!("duplicate variable name `{a}`")));
            }
        }
        Ok(Arc::new(PolyRing { names, field }))
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn field(&self) -> CoefficientField {
        self.field
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Same ring for the purpose of mixing elements: identical names and field.
    pub fn same_as(&self, other: &PolyRing) -> bool {
        self == other
    }
}

impl std::fmt::Display for PolyRing {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}[{}]", self.field, self.names.join(","))
    }
}

/// An exact multivariate polynomial. Invariant: no zero coefficients are
/// stored, and every exponent vector has the ring's length.
#[derive(Debug, Clone)]
pub struct Polynomial {
    ring: Arc<PolyRing>,
    terms: BTreeMap<Monomial, Coeff>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_as(&other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: &Arc<PolyRing>) -> Polynomial {
        Polynomial { ring: Arc::clone(ring), terms: BTreeMap::new() }
    }

    pub fn constant(ring: &Arc<PolyRing>, c: Coeff) -> Polynomial {
        let mut p = Polynomial::zero(ring);
        if !ring.field().is_zero(&c) {
            p.terms.insert(Monomial::one(ring.nvars()), c);
        }
        p
    }

    pub fn variable(ring: &Arc<PolyRing>, i: usize) -> Polynomial {
        Polynomial::term(ring, Monomial::variable(i, ring.nvars()), ring.field().one())
    }

    pub fn term(ring: &Arc<PolyRing>, m: Monomial, c: Coeff) -> Polynomial {
        debug_assert_eq!(m.nvars(), ring.nvars());
        let mut p = Polynomial::zero(ring);
        if !ring.field().is_zero(&c) {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms(
        ring: &Arc<PolyRing>,
        terms: impl IntoIterator<Item = (Monomial, Coeff)>,
    ) -> Polynomial {
        let mut p = Polynomial::zero(ring);
        for (m, c) in terms {
            p.add_term_in_place(m, c);
        }
        p
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn field(&self) -> CoefficientField {
        self.ring.field()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Option<&Coeff> {
        self.terms.get(m)
    }

    /// Max total degree, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    fn add_term_in_place(&mut self, m: Monomial, c: Coeff) {
        let field = self.ring.field();
        if field.is_zero(&c) {
            return;
        }
        match self.terms.remove(&m) {
            None => {
                self.terms.insert(m, c);
            }
            Some(old) => {
                let sum = field.add(&old, &c);
                if !field.is_zero(&sum) {
                    self.terms.insert(m, sum);
                }
            }
        }
    }

    fn check_same_ring(&self, other: &Polynomial) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring.same_as(&other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term_in_place(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        let field = self.ring.field();
        Polynomial {
            ring: Arc::clone(&self.ring),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), field.neg(c))).collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        let field = self.ring.field();
        if field.is_zero(c) {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: Arc::clone(&self.ring),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), field.mul(k, c))).collect(),
        }
    }

    /// Multiplies by the single term `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Polynomial {
        let field = self.ring.field();
        if field.is_zero(c) {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: Arc::clone(&self.ring),
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), field.mul(v, c))).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same_ring(other)?;
        let mut out = Polynomial::zero(&self.ring);
        let field = self.ring.field();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term_in_place(m1.mul(m2), field.mul(c1, c2));
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Result<Polynomial> {
        let mut out = Polynomial::constant(&self.ring, self.ring.field().one());
        for _ in 0..e {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// The term maximal under `ord`.
    pub fn leading_term(&self, ord: TermOrder) -> Result<(Monomial, Coeff)> {
        let mut best: Option<(&Monomial, &Coeff)> = None;
        for (m, c) in &self.terms {
            best = match best {
                None => Some((m, c)),
                Some((bm, bc)) => {
                    if ord.cmp_unchecked(m, bm) == std::cmp::Ordering::Greater {
                        Some((m, c))
                    } else {
                        Some((bm, bc))
                    }
                }
            };
        }
        best.map(|(m, c)| (m.clone(), c.clone())).ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_monomial(&self, ord: TermOrder) -> Result<Monomial> {
        Ok(self.leading_term(ord)?.0)
    }

    /// Divides through by the leading coefficient.
    pub fn monic(&self, ord: TermOrder) -> Result<Polynomial> {
        let (_, lc) = self.leading_term(ord)?;
        let inv = self.ring.field().inv(&lc)?;
        Ok(self.scale(&inv))
    }

    /// Over Q, clears denominators and divides by the gcd of the numerators,
    /// keeping coefficients small during long reductions. Over GF(p) this is
    /// the identity. The result generates the same ideal.
    pub fn remove_content(&self) -> Polynomial {
        if self.ring.field() != CoefficientField::Rationals || self.is_zero() {
            return self.clone();
        }
        let mut den_lcm = BigInt::one();
        let mut num_gcd = BigInt::zero();
        for c in self.terms.values() {
            if let Coeff::Rat(r) = c {
                den_lcm = den_lcm.lcm(r.denom());
                num_gcd = num_gcd.gcd(r.numer());
            }
        }
        let factor = Coeff::Rat(BigRational::new(den_lcm, num_gcd));
        self.scale(&factor)
    }

    /// Terms sorted in decreasing order under `ord`.
    pub fn sorted_terms(&self, ord: TermOrder) -> Vec<(&Monomial, &Coeff)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| ord.cmp_unchecked(b, a));
        v
    }

    /// Canonical display form: terms in decreasing order under `ord`,
    /// coefficients as integers or `a/b`.
    pub fn display(&self, ord: TermOrder) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let field = self.ring.field();
        let names = self.ring.names();
        let mut out = String::new();
        for (idx, (m, c)) in self.sorted_terms(ord).into_iter().enumerate() {
            let neg = field.is_display_negative(c);
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let abs = field.display_abs(c);
            if m.is_one() {
                out.push_str(&abs);
            } else if abs == "1" {
                out.push_str(&m.display(names));
            } else {
                out.push_str(&abs);
                out.push('*');
                out.push_str(&m.display(names));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qring(names: &[&str]) -> Arc<PolyRing> {
        PolyRing::new(names.iter().map(|s| s.to_string()).collect(), CoefficientField::Rationals)
            .unwrap()
    }

    fn var(ring: &Arc<PolyRing>, i: usize) -> Polynomial {
        Polynomial::variable(ring, i)
    }

    #[test]
    fn cancellation_drops_zero_terms() {
        let r = qring(&["x", "y"]);
        let (x, y) = (var(&r, 0), var(&r, 1));
        let sum = x.add(&y).unwrap().add(&y.neg()).unwrap();
        assert_eq!(sum, x);
        assert_eq!(sum.num_terms(), 1);
    }

    #[test]
    fn difference_of_squares() {
        let r = qring(&["x", "y"]);
        let (x, y) = (var(&r, 0), var(&r, 1));
        let prod = x.add(&y).unwrap().mul(&x.sub(&y).unwrap()).unwrap();
        let expect = x.mul(&x).unwrap().sub(&y.mul(&y).unwrap()).unwrap();
        assert_eq!(prod, expect);
    }

    #[test]
    fn frobenius_in_characteristic_two() {
        let field = CoefficientField::prime_field(2).unwrap();
        let r = PolyRing::new(vec!["x".into(), "y".into()], field).unwrap();
        let (x, y) = (var(&r, 0), var(&r, 1));
        let sq = x.add(&y).unwrap().pow(2).unwrap();
        let expect = x.pow(2).unwrap().add(&y.pow(2).unwrap()).unwrap();
        assert_eq!(sq, expect);
    }

    #[test]
    fn leading_term_constant() {
        let r = qring(&["x"]);
        let five = Polynomial::constant(&r, r.field().from_int(5));
        let (m, c) = five.leading_term(TermOrder::Lex).unwrap();
        assert!(m.is_one());
        assert_eq!(r.field().display(&c), "5");
        assert!(Polynomial::zero(&r).leading_term(TermOrder::Lex).is_err());
    }

    #[test]
    fn leading_term_examples() {
        let r = qring(&["x1", "x2", "x3"]);
        let f = var(&r, 0).add(&var(&r, 1)).unwrap();
        let (m, _) = f.leading_term(TermOrder::Lex).unwrap();
        assert_eq!(m, Monomial::variable(0, 3));

        // degrevlex: x1x3 + x2^2 has leading term x2^2
        let g = Polynomial::term(&r, Monomial::new(vec![1, 0, 1]), r.field().one())
            .add(&Polynomial::term(&r, Monomial::new(vec![0, 2, 0]), r.field().one()))
            .unwrap();
        let (m, _) = g.leading_term(TermOrder::DegRevLex).unwrap();
        assert_eq!(m, Monomial::new(vec![0, 2, 0]));
    }

    #[test]
    fn ring_mismatch_rejected() {
        let r1 = qring(&["x"]);
        let r2 = qring(&["y"]);
        assert_eq!(var(&r1, 0).add(&var(&r2, 0)).unwrap_err(), Error::RingMismatch);
    }

    #[test]
    fn content_removal_preserves_monic_direction() {
        let r = qring(&["x", "y"]);
        let f = var(&r, 0)
            .scale(&r.field().from_ratio(&BigInt::from(3), &BigInt::from(4)).unwrap())
            .add(&var(&r, 1).scale(&r.field().from_ratio(&BigInt::from(9), &BigInt::from(2)).unwrap()))
            .unwrap();
        let g = f.remove_content();
        // 3/4 x + 9/2 y -> x + 6y
        assert_eq!(g.display(TermOrder::Lex), "x + 6*y");
    }
}
