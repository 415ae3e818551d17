//! Hilbert series of monomial quotients via the pivot recursion
//! K(I) = K(I \ {m}) - t^deg(m) * K((I \ {m}) : m), and the derived
//! numerator h(t), Krull dimension, and multiplicity e = h(1).

use num::bigint::BigInt;
use num::{One, Zero};

use crate::algebra::{Monomial, TermOrder};
use crate::error::{Error, Result};
use crate::monomial_ideal::MonomialIdeal;

/// Dense integer polynomial in t, ascending coefficients, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        IntPoly { coeffs: vec![BigInt::one()] }
    }

    fn normalize(mut self) -> Self {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        self
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| self.coeff(i) - other.coeff(i)).collect();
        IntPoly { coeffs }.normalize()
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly { coeffs }.normalize()
    }

    /// Multiplies by t^k.
    pub fn shift(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    /// 1 - t^k.
    pub fn one_minus_t_pow(k: usize) -> IntPoly {
        if k == 0 {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[0] = BigInt::one();
        coeffs[k] = -BigInt::one();
        IntPoly { coeffs }
    }

    /// Exact division by (1 - t); `None` when the division leaves a remainder.
    pub fn div_one_minus_t(&self) -> Option<IntPoly> {
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        // Synthetic division: q_i = sum_{j<=i} c_j, remainder = q at the end.
        let mut acc = BigInt::zero();
        let mut q = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            acc += c;
            q.push(acc.clone());
        }
        if !acc.is_zero() {
            return None;
        }
        q.pop();
        Some(IntPoly { coeffs: q }.normalize())
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Power-series coefficients of self / (1-t)^d up to degree `upto`.
    pub fn series_over_unit_pole(&self, d: usize, upto: usize) -> Vec<BigInt> {
        let mut series: Vec<BigInt> =
            (0..=upto).map(|i| self.coeff(i)).collect();
        for _ in 0..d {
            let mut acc = BigInt::zero();
            for c in series.iter_mut() {
                acc += &*c;
                *c = acc.clone();
            }
        }
        series
    }
}

/// Hilbert data of S/I: numerator h(t) with H = h(t)/(1-t)^dim, the Krull
/// dimension, and the multiplicity h(1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertData {
    pub numerator: IntPoly,
    pub dim: u64,
    pub multiplicity: u64,
}

impl HilbertData {
    pub fn numerator_i64(&self) -> Vec<i64> {
        self.numerator
            .coeffs()
            .iter()
            .map(|c| i64::try_from(c).expect("numerator coefficient fits in i64"))
            .collect()
    }
}

fn pivot_index(gens: &[Monomial]) -> usize {
    let mut best = 0;
    for i in 1..gens.len() {
        let a = &gens[i];
        let b = &gens[best];
        let better = match a.degree().cmp(&b.degree()) {
            std::cmp::Ordering::Greater => true,
            std::cmp::Ordering::Less => false,
            std::cmp::Ordering::Equal => {
                TermOrder::DegRevLex.cmp_unchecked(a, b) == std::cmp::Ordering::Greater
            }
        };
        if better {
            best = i;
        }
    }
    best
}

/// Raw numerator K(t) with H_{S/I}(t) = K(t)/(1-t)^n.
fn raw_numerator(ideal: &MonomialIdeal) -> IntPoly {
    if !ideal.is_proper() {
        return IntPoly::zero();
    }
    let gens = ideal.gens();
    // Base case: pure variable powers (the zero ideal included) expand as a
    // product of (1 - t^a).
    if gens.iter().all(|g| g.pure_power().is_some()) {
        let mut k = IntPoly::one();
        for g in gens {
            let (_, a) = g.pure_power().expect("checked");
            k = k.mul(&IntPoly::one_minus_t_pow(a as usize));
        }
        return k;
    }
    let p = pivot_index(gens);
    let pivot = &gens[p];
    let rest: Vec<Monomial> =
        gens.iter().enumerate().filter(|(i, _)| *i != p).map(|(_, g)| g.clone()).collect();
    let without = MonomialIdeal::minimalize(ideal.ring(), rest);
    let colon = without.colon_by_monomial(pivot);
    raw_numerator(&without).sub(&raw_numerator(&colon).shift(pivot.degree() as usize))
}

/// Hilbert numerator, dimension, and multiplicity of S/I for a proper
/// monomial ideal (the zero ideal gives numerator 1, dim n).
pub fn hilbert(ideal: &MonomialIdeal) -> Result<HilbertData> {
    if !ideal.is_proper() {
        return Err(Error::ImproperIdeal);
    }
    let n = ideal.ring().nvars() as u64;
    let height = if ideal.is_zero_ideal() { 0 } else { ideal.height()? };
    let dim = n - height;
    let mut h = raw_numerator(ideal);
    for _ in 0..height {
        h = h
            .div_one_minus_t()
            .expect("(1-t)^height divides the raw Hilbert numerator exactly");
    }
    let e = h.eval_at_one();
    let multiplicity = u64::try_from(&e).expect("multiplicity is a positive integer");
    Ok(HilbertData { numerator: h, dim, multiplicity })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{CoefficientField, PolyRing};
    use std::sync::Arc;

    fn ring(n: usize) -> Arc<PolyRing> {
        let names = (1..=n).map(|i| format!("x{i}")).collect();
        PolyRing::new(names, CoefficientField::Rationals).unwrap()
    }

    fn ideal(r: &Arc<PolyRing>, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::minimalize(r, gens.iter().map(|e| Monomial::new(e.to_vec())).collect())
    }

    fn int_poly(cs: &[i64]) -> IntPoly {
        IntPoly { coeffs: cs.iter().map(|c| BigInt::from(*c)).collect() }.normalize()
    }

    /// Counts monomials of each degree outside the ideal, up to `upto`.
    fn standard_monomial_counts(ideal: &MonomialIdeal, upto: u32) -> Vec<u64> {
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

    #[test]
    fn one_variable_square() {
        let r = ring(1);
        let h = hilbert(&ideal(&r, &[&[2]])).unwrap();
        assert_eq!(h.numerator, int_poly(&[1, 1]));
        assert_eq!(h.dim, 0);
        assert_eq!(h.multiplicity, 2);
    }

    #[test]
    fn edge_ideal_in_two_variables() {
        let r = ring(2);
        let h = hilbert(&ideal(&r, &[&[1, 1]])).unwrap();
        assert_eq!(h.numerator, int_poly(&[1, 1]));
        assert_eq!(h.dim, 1);
        assert_eq!(h.multiplicity, 2);
    }

    #[test]
    fn zero_ideal_is_the_free_ring() {
        let r = ring(3);
        let h = hilbert(&MonomialIdeal::zero(&r)).unwrap();
        assert_eq!(h.numerator, IntPoly::one());
        assert_eq!(h.dim, 3);
        assert_eq!(h.multiplicity, 1);
    }

    #[test]
    fn improper_refused() {
        let r = ring(2);
        assert_eq!(hilbert(&ideal(&r, &[&[0, 0]])).unwrap_err(), Error::ImproperIdeal);
    }

    #[test]
    fn radical_multiplicity_counts_min_primes() {
        // square-free, unmixed: e equals the number of minimal primes
        let r = ring(6);
        let ci = ideal(&r, &[&[1, 0, 0, 1, 0, 0], &[0, 1, 0, 0, 1, 0], &[0, 0, 1, 0, 0, 1]]);
        let h = hilbert(&ci).unwrap();
        assert_eq!(h.multiplicity, ci.minimal_primes().unwrap().len() as u64);

        let r3 = ring(3);
        let tri = ideal(&r3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        let h = hilbert(&tri).unwrap();
        assert_eq!(h.multiplicity, 3);
        assert_eq!(tri.minimal_primes().unwrap().len(), 3);
    }

    #[test]
    fn series_matches_standard_monomials() {
        let r = ring(3);
        let samples = vec![
            ideal(&r, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1], &[0, 0, 2]]),
            ideal(&r, &[&[2, 1, 0], &[0, 3, 0]]),
            ideal(&r, &[&[1, 2, 3]]),
            MonomialIdeal::zero(&r),
        ];
        for i in &samples {
            let h = hilbert(i).unwrap();
            let series = h.numerator.series_over_unit_pole(h.dim as usize, 8);
            let counts = standard_monomial_counts(i, 8);
            for d in 0..=8usize {
                assert_eq!(series[d], BigInt::from(counts[d]), "degree {d} of {}", i.display());
            }
        }
    }

    #[test]
    fn int_poly_division() {
        // 1 - t^3 = (1-t)(1+t+t^2)
        let p = IntPoly::one_minus_t_pow(3);
        assert_eq!(p.div_one_minus_t().unwrap(), int_poly(&[1, 1, 1]));
        // 1 + t is not divisible
        assert!(int_poly(&[1, 1]).div_one_minus_t().is_none());
    }
}
