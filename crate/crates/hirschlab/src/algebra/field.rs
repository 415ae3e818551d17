//! Coefficient fields: the rationals and prime fields Z/p.
//!
//! Elements carry no field pointer; every arithmetic routine takes the
//! [`CoefficientField`] as context, so the modulus lives in one place.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The coefficient field of a polynomial ring: Q or Z/p with p prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CoefficientField {
    Rationals,
    PrimeField(u64),
}

/// A coefficient. Rational values are kept in lowest terms with positive
/// denominator (num-rational maintains that canonical form); prime-field
/// values are reduced to 0..p-1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Coeff {
    Rat(BigRational),
    Fp(u64),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3u64;
    while d.checked_mul(d).is_some_and(|sq| sq <= p) {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

impl CoefficientField {
    pub fn rationals() -> Self {
        CoefficientField::Rationals
    }

    pub fn prime_field(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(CoefficientField::PrimeField(p))
        } else {
            Err(Error::invalid(format!("{p} is not prime; GF(p) requires a prime modulus")))
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            CoefficientField::Rationals => 0,
            CoefficientField::PrimeField(p) => *p,
        }
    }

    pub fn zero(&self) -> Coeff {
        match self {
            CoefficientField::Rationals => Coeff::Rat(BigRational::zero()),
            CoefficientField::PrimeField(_) => Coeff::Fp(0),
        }
    }

    pub fn one(&self) -> Coeff {
        match self {
            CoefficientField::Rationals => Coeff::Rat(BigRational::one()),
            CoefficientField::PrimeField(_) => Coeff::Fp(1),
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> Coeff {
        match self {
            CoefficientField::Rationals => Coeff::Rat(BigRational::from_integer(n.clone())),
            CoefficientField::PrimeField(p) => {
                let p_big = BigInt::from(*p);
                let mut r = n % &p_big;
                if r.is_negative() {
                    r += &p_big;
                }
                let (_, digits) = r.to_u64_digits();
                Coeff::Fp(digits.first().copied().unwrap_or(0))
            }
        }
    }

    pub fn from_int(&self, n: i64) -> Coeff {
        self.from_bigint(&BigInt::from(n))
    }

    /// Builds numer/denom. Rational literals are rejected over GF(p); use an
    /// integer representative instead.
    pub fn from_ratio(&self, numer: &BigInt, denom: &BigInt) -> Result<Coeff> {
        if denom.is_zero() {
            return Err(Error::invalid("zero denominator in rational literal"));
        }
        match self {
            CoefficientField::Rationals => {
                Ok(Coeff::Rat(BigRational::new(numer.clone(), denom.clone())))
            }
            CoefficientField::PrimeField(p) => Err(Error::invalid(format!(
                "rational coefficient not in GF({p}); use an integer literal"
            ))),
        }
    }

    pub fn is_zero(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Rat(r) => r.is_zero(),
            Coeff::Fp(v) => *v == 0,
        }
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (CoefficientField::Rationals, Coeff::Rat(x), Coeff::Rat(y)) => Coeff::Rat(x + y),
            (CoefficientField::PrimeField(p), Coeff::Fp(x), Coeff::Fp(y)) => {
                Coeff::Fp((x + y) % p)
            }
            _ => unreachable!("coefficient does not match field"),
        }
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        match (self, a) {
            (CoefficientField::Rationals, Coeff::Rat(x)) => Coeff::Rat(-x),
            (CoefficientField::PrimeField(p), Coeff::Fp(x)) => {
                Coeff::Fp(if *x == 0 { 0 } else { p - x })
            }
            _ => unreachable!("coefficient does not match field"),
        }
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (CoefficientField::Rationals, Coeff::Rat(x), Coeff::Rat(y)) => Coeff::Rat(x * y),
            (CoefficientField::PrimeField(p), Coeff::Fp(x), Coeff::Fp(y)) => {
                Coeff::Fp(mul_mod(*x, *y, *p))
            }
            _ => unreachable!("coefficient does not match field"),
        }
    }

    pub fn inv(&self, a: &Coeff) -> Result<Coeff> {
        if self.is_zero(a) {
            return Err(Error::invalid("division by zero coefficient"));
        }
        Ok(match (self, a) {
            (CoefficientField::Rationals, Coeff::Rat(x)) => Coeff::Rat(x.recip()),
            (CoefficientField::PrimeField(p), Coeff::Fp(x)) => Coeff::Fp(pow_mod(*x, p - 2, *p)),
            _ => unreachable!("coefficient does not match field"),
        })
    }

    pub fn div(&self, a: &Coeff, b: &Coeff) -> Result<Coeff> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn display(&self, a: &Coeff) -> String {
        match a {
            Coeff::Rat(r) => {
                if r.denom().is_one() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            Coeff::Fp(v) => v.to_string(),
        }
    }

    /// True when the coefficient prints with a leading minus sign.
    pub fn is_display_negative(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Rat(r) => r.is_negative(),
            Coeff::Fp(_) => false,
        }
    }

    /// The coefficient with the display sign stripped.
    pub fn display_abs(&self, a: &Coeff) -> String {
        match a {
            Coeff::Rat(r) => self.display(&Coeff::Rat(r.abs())),
            Coeff::Fp(_) => self.display(a),
        }
    }
}

impl std::fmt::Display for CoefficientField {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CoefficientField::Rationals => write!(f, "QQ"),
            CoefficientField::PrimeField(p) => write!(f, "GF({p})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_screen() {
        assert!(CoefficientField::prime_field(2).is_ok());
        assert!(CoefficientField::prime_field(7).is_ok());
        assert!(CoefficientField::prime_field(32003).is_ok());
        assert!(CoefficientField::prime_field(1).is_err());
        assert!(CoefficientField::prime_field(9).is_err());
        assert!(CoefficientField::prime_field(0).is_err());
    }

    #[test]
    fn rational_canonical_form() {
        let f = CoefficientField::Rationals;
        let c = f.from_ratio(&BigInt::from(4), &BigInt::from(-6)).unwrap();
        assert_eq!(f.display(&c), "-2/3");
        let s = f.add(&c, &f.from_ratio(&BigInt::from(2), &BigInt::from(3)).unwrap());
        assert!(f.is_zero(&s));
    }

    #[test]
    fn prime_field_inverse() {
        let f = CoefficientField::prime_field(7).unwrap();
        for v in 1..7u64 {
            let inv = f.inv(&Coeff::Fp(v)).unwrap();
            assert_eq!(f.mul(&Coeff::Fp(v), &inv), Coeff::Fp(1));
        }
        assert!(f.inv(&Coeff::Fp(0)).is_err());
    }

    #[test]
    fn rationals_rejected_over_gf() {
        let f = CoefficientField::prime_field(7).unwrap();
        assert!(f.from_ratio(&BigInt::from(1), &BigInt::from(2)).is_err());
    }
}
