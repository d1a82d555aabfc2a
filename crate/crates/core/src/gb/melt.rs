//! Free-module elements flattened to sorted term lists, the common currency
//! of the Buchberger engine. A polynomial is the rank-one case.

use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;
use crate::ring::PolyRing;
use crate::scalar::Scalar;
use std::cmp::Ordering;

/// Position of a term inside a free module: component index plus monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MKey {
    pub comp: u32,
    pub mono: Monomial,
}

/// Order on module terms. Components below `split` dominate the rest
/// (an elimination block); inside a block terms compare by the ring order
/// with lower component index winning ties.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModOrder {
    pub split: usize,
    pub order: MonomialOrder,
}

impl ModOrder {
    pub fn plain(order: MonomialOrder) -> ModOrder {
        ModOrder { split: 0, order }
    }

    pub fn eliminating(split: usize, order: MonomialOrder) -> ModOrder {
        ModOrder { split, order }
    }

    pub fn compare(&self, a: &MKey, b: &MKey) -> Ordering {
        let ba = (a.comp as usize) < self.split;
        let bb = (b.comp as usize) < self.split;
        match (ba, bb) {
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            _ => self
                .order
                .compare(&a.mono, &b.mono)
                .then_with(|| b.comp.cmp(&a.comp)),
        }
    }
}

/// A free-module element with terms strictly descending under a `ModOrder`.
/// The order is supplied by context, not stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MElt {
    pub terms: Vec<(MKey, Scalar)>,
}

impl MElt {
    pub fn zero() -> MElt {
        MElt { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn leading(&self) -> Option<(&MKey, &Scalar)> {
        self.terms.first().map(|(k, c)| (k, c))
    }

    /// Build from a dense column of polynomials (entry `i` = component `i`).
    pub fn from_column(ord: &ModOrder, column: &[Polynomial]) -> MElt {
        let mut terms = Vec::new();
        for (comp, p) in column.iter().enumerate() {
            for (m, c) in p.terms() {
                terms.push((MKey { comp: comp as u32, mono: m.clone() }, c.clone()));
            }
        }
        terms.sort_by(|a, b| ord.compare(&b.0, &a.0));
        MElt { terms }
    }

    pub fn from_poly(ord: &ModOrder, p: &Polynomial) -> MElt {
        MElt::from_column(ord, std::slice::from_ref(p))
    }

    /// Expand back to a dense column of the given rank.
    pub fn to_column(&self, ring: &PolyRing, rank: usize) -> Vec<Polynomial> {
        let mut cols: Vec<Vec<(Monomial, Scalar)>> = vec![Vec::new(); rank];
        for (k, c) in &self.terms {
            cols[k.comp as usize].push((k.mono.clone(), c.clone()));
        }
        cols.into_iter()
            .map(|ts| Polynomial::from_terms(ring, ts))
            .collect()
    }

    pub fn to_poly(&self, ring: &PolyRing) -> Polynomial {
        debug_assert!(self.terms.iter().all(|(k, _)| k.comp == 0));
        Polynomial::from_terms(
            ring,
            self.terms
                .iter()
                .map(|(k, c)| (k.mono.clone(), c.clone()))
                .collect(),
        )
    }

    pub fn add(&self, ord: &ModOrder, other: &MElt) -> MElt {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match ord.compare(&self.terms[i].0, &other.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = self.terms[i].1.add(&other.terms[j].1);
                    if !c.is_zero() {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        MElt { terms: out }
    }

    pub fn neg(&self) -> MElt {
        MElt {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, ord: &ModOrder, other: &MElt) -> MElt {
        self.add(ord, &other.neg())
    }

    /// Multiply by the ring term `c * m`; preserves term order.
    pub fn mul_term(&self, m: &Monomial, c: &Scalar) -> MElt {
        if c.is_zero() {
            return MElt::zero();
        }
        MElt {
            terms: self
                .terms
                .iter()
                .map(|(k, a)| {
                    (MKey { comp: k.comp, mono: k.mono.mul(m) }, a.mul(c))
                })
                .collect(),
        }
    }

    pub fn mul_scalar(&self, c: &Scalar) -> MElt {
        if c.is_zero() {
            return MElt::zero();
        }
        MElt {
            terms: self.terms.iter().map(|(k, a)| (k.clone(), a.mul(c))).collect(),
        }
    }

    /// Multiply by a full polynomial.
    pub fn mul_poly(&self, ord: &ModOrder, p: &Polynomial) -> MElt {
        let mut acc = MElt::zero();
        for (m, c) in p.terms() {
            acc = acc.add(ord, &self.mul_term(m, c));
        }
        acc
    }

    pub fn monic(&self) -> MElt {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => self.mul_scalar(&c.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Smallest component index shifted by `-shift` (elimination retract).
    pub fn shift_components_down(&self, shift: u32) -> MElt {
        MElt {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (MKey { comp: k.comp - shift, mono: k.mono.clone() }, c.clone()))
                .collect(),
        }
    }

    /// True when every term lives in components `>= bound`.
    pub fn supported_at_or_above(&self, bound: u32) -> bool {
        self.terms.iter().all(|(k, _)| k.comp >= bound)
    }

    /// Append a tag term `1 * e_{comp}` (used to build syzygy carriers);
    /// caller guarantees `comp` is fresh and below-everything in the order.
    pub fn with_unit_tag(&self, ord: &ModOrder, arity: usize, comp: u32) -> MElt {
        let tag = MElt {
            terms: vec![(
                MKey { comp, mono: Monomial::one(arity) },
                Scalar::one(
                    self.terms
                        .first()
                        .map(|(_, c)| c.field())
                        .expect("tagging a zero element"),
                ),
            )],
        };
        self.add(ord, &tag)
    }

    pub fn degree_with_twists(&self, twists: &[i64]) -> Option<i64> {
        self.terms
            .iter()
            .map(|(k, _)| k.mono.degree() as i64 + twists[k.comp as usize])
            .max()
    }

    /// `Some(d)` iff nonzero and homogeneous for the given component twists.
    pub fn homogeneous_degree(&self, twists: &[i64]) -> Option<i64> {
        let d = self
            .terms
            .first()
            .map(|(k, _)| k.mono.degree() as i64 + twists[k.comp as usize])?;
        self.terms
            .iter()
            .all(|(k, _)| k.mono.degree() as i64 + twists[k.comp as usize] == d)
            .then_some(d)
    }
}
