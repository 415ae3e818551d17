//! Term orders. The variable ranking is declaration order: the first
//! declared variable is the greatest, so for exponent vectors `a`, `b`,
//! lex says a > b iff the first nonzero entry of a-b is positive.

use std::cmp::Ordering;

use crate::algebra::monomial::Monomial;
use crate::error::{Error, Result};

/// Order applied inside a block of an elimination order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BaseOrder {
    Lex,
    DegLex,
    DegRevLex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TermOrder {
    Lex,
    DegLex,
    DegRevLex,
    /// The first `prefix` variables are ranked above the rest: prefix-degree
    /// decides first, then `base` within the prefix block, then `base` on the
    /// remaining block. Used internally for ideal intersection.
    Elimination { prefix: usize, base: BaseOrder },
}

fn lex_slices(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => {}
            ord => return ord,
        }
    }
    Ordering::Equal
}

fn revlex_tiebreak(a: &[u32], b: &[u32]) -> Ordering {
    // a > b iff the last nonzero entry of a-b is negative.
    for (x, y) in a.iter().zip(b).rev() {
        match x.cmp(y) {
            Ordering::Equal => {}
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

fn base_cmp(base: BaseOrder, a: &[u32], b: &[u32]) -> Ordering {
    let deg = |v: &[u32]| v.iter().sum::<u32>();
    match base {
        BaseOrder::Lex => lex_slices(a, b),
        BaseOrder::DegLex => deg(a).cmp(&deg(b)).then_with(|| lex_slices(a, b)),
        BaseOrder::DegRevLex => deg(a).cmp(&deg(b)).then_with(|| revlex_tiebreak(a, b)),
    }
}

impl TermOrder {
    /// Compares two monomials from the same ring.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.nvars() != b.nvars() {
            return Err(Error::RingMismatch);
        }
        Ok(self.cmp_unchecked(a, b))
    }

    pub(crate) fn cmp_unchecked(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        let (ea, eb) = (a.exponents(), b.exponents());
        match self {
            TermOrder::Lex => lex_slices(ea, eb),
            TermOrder::DegLex => a.degree().cmp(&b.degree()).then_with(|| lex_slices(ea, eb)),
            TermOrder::DegRevLex => {
                a.degree().cmp(&b.degree()).then_with(|| revlex_tiebreak(ea, eb))
            }
            TermOrder::Elimination { prefix, base } => a
                .prefix_degree(*prefix)
                .cmp(&b.prefix_degree(*prefix))
                .then_with(|| base_cmp(*base, &ea[..*prefix], &eb[..*prefix]))
                .then_with(|| base_cmp(*base, &ea[*prefix..], &eb[*prefix..])),
        }
    }

    pub fn parse(name: &str) -> Result<TermOrder> {
        match name {
            "lex" => Ok(TermOrder::Lex),
            "deglex" => Ok(TermOrder::DegLex),
            "degrevlex" => Ok(TermOrder::DegRevLex),
            other => Err(Error::invalid(format!(
                "unknown term order `{other}` (expected lex | deglex | degrevlex)"
            ))),
        }
    }
}

impl std::fmt::Display for TermOrder {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TermOrder::Lex => write!(f, "lex"),
            TermOrder::DegLex => write!(f, "deglex"),
            TermOrder::DegRevLex => write!(f, "degrevlex"),
            TermOrder::Elimination { prefix, .. } => write!(f, "elim({prefix})"),
        }
    }
}
