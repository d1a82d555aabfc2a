//! Exponent vectors and the monomial orders used throughout the crate.

use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::fmt;

/// A monomial: an exponent vector with a cached total degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exponents: Vec<u32>,
    degree: u64,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Monomial {
        let degree = exponents.iter().map(|&e| e as u64).sum();
        Monomial { exponents, degree }
    }

    pub fn one(arity: usize) -> Monomial {
        Monomial { exponents: vec![0; arity], degree: 0 }
    }

    pub fn var(arity: usize, index: usize) -> Monomial {
        let mut e = vec![0; arity];
        e[index] = 1;
        Monomial { exponents: e, degree: 1 }
    }

    pub fn arity(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exponents[i]
    }

    /// Total degree with unit weights.
    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.arity(), other.arity());
        let exponents = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(a, b)| a + b)
            .collect();
        Monomial { exponents, degree: self.degree + other.degree }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.arity() == other.arity()
            && self.degree <= other.degree
            && self.exponents.iter().zip(&other.exponents).all(|(a, b)| a <= b)
    }

    /// `other / self`; caller must ensure divisibility.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        let exponents = other
            .exponents
            .iter()
            .zip(&self.exponents)
            .map(|(b, a)| b - a)
            .collect();
        Monomial { exponents, degree: other.degree - self.degree }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.arity(), other.arity());
        Monomial::new(
            self.exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn gcd_is_one(&self, other: &Monomial) -> bool {
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Restrict to the variables selected by `keep` (true = keep).
    pub fn project(&self, keep: &[bool]) -> Monomial {
        Monomial::new(
            self.exponents
                .iter()
                .zip(keep)
                .map(|(e, k)| if *k { *e } else { 0 })
                .collect(),
        )
    }

    pub fn supported_on(&self, allowed: &[bool]) -> bool {
        self.exponents
            .iter()
            .zip(allowed)
            .all(|(e, a)| *e == 0 || *a)
    }
}

/// The monomial orders the toolkit understands. All are global (1 is minimal).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic.
    Grevlex,
    /// Pure lexicographic, first variable largest.
    Lex,
    /// Eliminate the first `split` variables: grevlex on the first block,
    /// ties broken by grevlex on the rest.
    Block { split: usize },
    /// Grevlex with respect to a strictly positive weight vector.
    WeightedGrevlex { weights: Vec<u32> },
}

impl MonomialOrder {
    /// Compare two monomials of equal arity.
    pub fn try_compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.arity() != b.arity() {
            return Err(Error::ArityMismatch(a.arity(), b.arity()));
        }
        Ok(self.compare(a, b))
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.arity(), b.arity());
        match self {
            MonomialOrder::Grevlex => grevlex(a.exponents(), b.exponents()),
            MonomialOrder::Lex => a.exponents().cmp(b.exponents()),
            MonomialOrder::Block { split } => {
                let s = (*split).min(a.arity());
                grevlex(&a.exponents()[..s], &b.exponents()[..s])
                    .then_with(|| grevlex(&a.exponents()[s..], &b.exponents()[s..]))
            }
            MonomialOrder::WeightedGrevlex { weights } => {
                let wa: u64 = a
                    .exponents()
                    .iter()
                    .zip(weights)
                    .map(|(e, w)| *e as u64 * *w as u64)
                    .sum();
                let wb: u64 = b
                    .exponents()
                    .iter()
                    .zip(weights)
                    .map(|(e, w)| *e as u64 * *w as u64)
                    .sum();
                wa.cmp(&wb).then_with(|| revlex_tie(a.exponents(), b.exponents()))
            }
        }
    }
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| revlex_tie(a, b))
}

/// Reverse-lex tie break: the monomial with the smaller exponent in the
/// last position where they differ is the larger one.
fn revlex_tie(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Grevlex => write!(f, "grevlex"),
            MonomialOrder::Lex => write!(f, "lex"),
            MonomialOrder::Block { split } => write!(f, "block({})", split),
            MonomialOrder::WeightedGrevlex { weights } => write!(f, "wgrevlex{:?}", weights),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn grevlex_spec_example() {
        // grevlex in 3 vars: (1,2,0) vs (2,0,1): equal degree, last differing
        // exponent is position 2 (0 vs 1), smaller wins, so (1,2,0) is greater.
        let ord = MonomialOrder::Grevlex;
        assert_eq!(ord.compare(&m(&[1, 2, 0]), &m(&[2, 0, 1])), Ordering::Greater);
    }

    #[test]
    fn lex_spec_example() {
        // lex x>y: x vs y^2 -> x greater
        let ord = MonomialOrder::Lex;
        assert_eq!(ord.compare(&m(&[1, 0]), &m(&[0, 2])), Ordering::Greater);
        assert_eq!(ord.compare(&m(&[1, 1]), &m(&[1, 1])), Ordering::Equal);
    }

    #[test]
    fn block_elimination_dominance() {
        // any monomial using a block-1 variable beats any monomial that does not
        let ord = MonomialOrder::Block { split: 1 };
        assert_eq!(ord.compare(&m(&[1, 0, 0]), &m(&[0, 9, 9])), Ordering::Greater);
        assert_eq!(ord.compare(&m(&[0, 2, 0]), &m(&[0, 0, 1])), Ordering::Greater);
    }

    #[test]
    fn monomial_ops() {
        let a = m(&[2, 1, 0]);
        let b = m(&[1, 0, 3]);
        assert_eq!(a.lcm(&b), m(&[2, 1, 3]));
        assert!(!a.divides(&b));
        assert!(m(&[1, 0, 0]).divides(&a));
        assert_eq!(m(&[1, 0, 0]).quotient_of(&a), m(&[1, 1, 0]));
        assert!(m(&[0, 1, 0]).gcd_is_one(&m(&[1, 0, 1])));
        assert_eq!(a.degree(), 3);
    }
}
