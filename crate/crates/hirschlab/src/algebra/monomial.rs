//! Monomials as exponent vectors with a cached total degree.

/// A monomial in a fixed number of variables.
///
/// The derived `Ord` compares exponent vectors entrywise and exists only so
/// monomials can key ordered maps; term-order comparison lives in
/// [`crate::algebra::order::TermOrder`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
    degree: u32,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    /// The monomial 1 in `n` variables.
    pub fn one(n: usize) -> Self {
        Monomial { exps: vec![0; n], degree: 0 }
    }

    /// The variable with index `i` (0-based).
    pub fn variable(i: usize, n: usize) -> Self {
        let mut exps = vec![0; n];
        exps[i] = 1;
        Monomial { exps, degree: 1 }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect();
        Monomial::new(exps)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if other.divides(self) {
            let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect();
            Some(Monomial::new(exps))
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect();
        Monomial::new(exps)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)).collect();
        Monomial::new(exps)
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Indices of the variables that occur.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().enumerate().filter(|(_, e)| **e > 0).map(|(i, _)| i)
    }

    /// The square-free monomial on the same support.
    pub fn support_monomial(&self) -> Monomial {
        Monomial::new(self.exps.iter().map(|e| if *e > 0 { 1 } else { 0 }).collect())
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|e| *e <= 1)
    }

    /// `Some((var, exp))` when the monomial is a positive power of one variable.
    pub fn pure_power(&self) -> Option<(usize, u32)> {
        let mut found = None;
        for (i, e) in self.exps.iter().enumerate() {
            if *e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((i, *e));
            }
        }
        found
    }

    /// Total degree restricted to the first `prefix` variables.
    pub fn prefix_degree(&self, prefix: usize) -> u32 {
        self.exps[..prefix].iter().sum()
    }

    pub fn display(&self, names: &[String]) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (i, e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(names[i].clone()),
                _ => parts.push(format!("{}^{}", names[i], e)),
            }
        }
        parts.join("*")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisibility_and_quotient() {
        let a = Monomial::new(vec![2, 1, 0]);
        let b = Monomial::new(vec![1, 0, 0]);
        assert!(b.divides(&a));
        assert_eq!(a.checked_div(&b), Some(Monomial::new(vec![1, 1, 0])));
        assert_eq!(b.checked_div(&a), None);
        assert_eq!(a.lcm(&b), a);
        assert_eq!(a.gcd(&b), b);
    }

    #[test]
    fn degree_is_cached_sum() {
        let m = Monomial::new(vec![3, 0, 2]);
        assert_eq!(m.degree(), 5);
        assert_eq!(m.support().collect::<Vec<_>>(), vec![0, 2]);
        assert_eq!(m.support_monomial(), Monomial::new(vec![1, 0, 1]));
        assert_eq!(m.pure_power(), None);
        assert_eq!(Monomial::new(vec![0, 4, 0]).pure_power(), Some((1, 4)));
    }
}
