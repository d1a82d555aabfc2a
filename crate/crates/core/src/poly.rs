//! Sparse multivariate polynomials over an exact coefficient field.

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::ring::PolyRing;
use crate::scalar::Scalar;
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

/// A polynomial with terms kept strictly descending under the ring's order
/// and no zero coefficients stored.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: PolyRing,
    terms: Vec<(Monomial, Scalar)>,
}

impl Polynomial {
    pub fn zero(ring: &PolyRing) -> Polynomial {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &PolyRing, c: Scalar) -> Polynomial {
        assert_eq!(c.field(), ring.field(), "scalar from the wrong field");
        if c.is_zero() {
            return Polynomial::zero(ring);
        }
        Polynomial { ring: ring.clone(), terms: vec![(Monomial::one(ring.arity()), c)] }
    }

    pub fn one(ring: &PolyRing) -> Polynomial {
        Polynomial::constant(ring, Scalar::one(ring.field()))
    }

    pub fn from_int(ring: &PolyRing, n: i64) -> Polynomial {
        Polynomial::constant(ring, Scalar::from_integer(ring.field(), n))
    }

    pub fn var(ring: &PolyRing, index: usize) -> Polynomial {
        Polynomial {
            ring: ring.clone(),
            terms: vec![(Monomial::var(ring.arity(), index), Scalar::one(ring.field()))],
        }
    }

    pub fn var_by_name(ring: &PolyRing, name: &str) -> Result<Polynomial> {
        let i = ring.var_index(name).ok_or_else(|| Error::UnknownVariable(name.into()))?;
        Ok(Polynomial::var(ring, i))
    }

    pub fn monomial_term(ring: &PolyRing, m: Monomial, c: Scalar) -> Polynomial {
        assert_eq!(m.arity(), ring.arity());
        if c.is_zero() {
            return Polynomial::zero(ring);
        }
        Polynomial { ring: ring.clone(), terms: vec![(m, c)] }
    }

    /// Build from an unsorted term list, merging duplicates.
    pub fn from_terms(ring: &PolyRing, terms: Vec<(Monomial, Scalar)>) -> Polynomial {
        let mut map: HashMap<Monomial, Scalar> = HashMap::with_capacity(terms.len());
        for (m, c) in terms {
            assert_eq!(m.arity(), ring.arity());
            match map.entry(m) {
                std::collections::hash_map::Entry::Occupied(mut e) => {
                    let s = e.get().add(&c);
                    if s.is_zero() {
                        e.remove();
                    } else {
                        e.insert(s);
                    }
                }
                std::collections::hash_map::Entry::Vacant(e) => {
                    if !c.is_zero() {
                        e.insert(c);
                    }
                }
            }
        }
        let mut terms: Vec<(Monomial, Scalar)> = map.into_iter().collect();
        terms.sort_by(|a, b| ring.order().compare(&b.0, &a.0));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coeff(&self) -> Option<&Scalar> {
        self.terms.first().map(|(_, c)| c)
    }

    /// Total degree (unit weights); `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u64> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// `Some(d)` iff nonzero and every term has total degree `d`.
    pub fn homogeneous_degree(&self) -> Option<u64> {
        let d = self.terms.first()?.0.degree();
        self.terms.iter().all(|(m, _)| m.degree() == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    fn same_ring(&self, other: &Polynomial) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_ring(other)?;
        Ok(self.add(other))
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.ring, other.ring);
        let ord = self.ring.order();
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
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_ring(other)?;
        Ok(self.mul(other))
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.ring, other.ring);
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let mut map: HashMap<Monomial, Scalar> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca.mul(cb);
                match map.entry(m) {
                    std::collections::hash_map::Entry::Occupied(mut e) => {
                        let s = e.get().add(&c);
                        if s.is_zero() {
                            e.remove();
                        } else {
                            e.insert(s);
                        }
                    }
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                }
            }
        }
        let mut terms: Vec<(Monomial, Scalar)> = map.into_iter().collect();
        terms.sort_by(|a, b| self.ring.order().compare(&b.0, &a.0));
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn mul_scalar(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a.mul(c))).collect(),
        }
    }

    /// Multiply by the term `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(mm, a)| (mm.mul(m), a.mul(c)))
                .collect(),
        }
    }

    pub fn pow(&self, mut n: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(&self.ring);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Leading coefficient scaled to 1; zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => self.mul_scalar(&c.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Exact division; fails with `NonExactDivision` when `divisor` does not
    /// divide `self`.
    pub fn exact_divide(&self, divisor: &Polynomial) -> Result<Polynomial> {
        self.same_ring(divisor)?;
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let dm = divisor.leading_monomial().unwrap();
        let dc = divisor.leading_coeff().unwrap();
        let mut rem = self.clone();
        let mut quo = Polynomial::zero(&self.ring);
        while let Some(lm) = rem.leading_monomial() {
            if !dm.divides(lm) {
                return Err(Error::NonExactDivision);
            }
            let qm = dm.quotient_of(lm);
            let qc = rem.leading_coeff().unwrap().div(dc)?;
            let t = Polynomial::monomial_term(&self.ring, qm, qc);
            rem = rem.sub(&t.mul(divisor));
            quo = quo.add(&t);
        }
        Ok(quo)
    }

    /// Substitute `images[i]` for variable `i`; images live in `target`.
    pub fn substitute(&self, target: &PolyRing, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.ring.arity() {
            return Err(Error::ShapeMismatch(format!(
                "expected {} images, got {}",
                self.ring.arity(),
                images.len()
            )));
        }
        for im in images {
            if im.ring() != target {
                return Err(Error::RingMismatch);
            }
        }
        let mut acc = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(
                target,
                match (c, target.field() == self.ring.field()) {
                    (c, true) => c.clone(),
                    _ => return Err(Error::FieldMismatch),
                },
            );
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t = t.mul(&images[i].pow(e));
                }
            }
            acc = acc.add(&t);
        }
        Ok(acc)
    }

    /// Map into another ring by matching variable names. Fails if a variable
    /// actually used by the polynomial is missing from the target.
    pub fn into_ring(&self, target: &PolyRing) -> Result<Polynomial> {
        if target.field() != self.ring.field() {
            return Err(Error::FieldMismatch);
        }
        let mapping: Vec<Option<usize>> =
            self.ring.vars().iter().map(|v| target.var_index(v)).collect();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut e = vec![0u32; target.arity()];
            for (i, &exp) in m.exponents().iter().enumerate() {
                if exp > 0 {
                    match mapping[i] {
                        Some(j) => e[j] += exp,
                        None => {
                            return Err(Error::UnknownVariable(self.ring.vars()[i].clone()))
                        }
                    }
                }
            }
            terms.push((Monomial::new(e), c.clone()));
        }
        Ok(Polynomial::from_terms(target, terms))
    }

    /// Map variable `i` of `self` to variable `map[i]` of `target`.
    pub fn rename_by_index(&self, target: &PolyRing, map: &[usize]) -> Polynomial {
        assert_eq!(map.len(), self.ring.arity());
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0u32; target.arity()];
                for (i, &exp) in m.exponents().iter().enumerate() {
                    e[map[i]] += exp;
                }
                (Monomial::new(e), c.clone())
            })
            .collect();
        Polynomial::from_terms(target, terms)
    }

    /// True when no term uses any of the variables flagged in `dropped`.
    pub fn avoids_vars(&self, dropped: &[bool]) -> bool {
        let keep: Vec<bool> = dropped.iter().map(|d| !d).collect();
        self.terms.iter().all(|(m, _)| m.supported_on(&keep))
    }

    /// Invariant check used by tests: strictly descending terms, no zeros.
    pub fn validate(&self) -> bool {
        if self.terms.iter().any(|(_, c)| c.is_zero()) {
            return false;
        }
        self.terms
            .windows(2)
            .all(|w| self.ring.order().compare(&w[0].0, &w[1].0) == Ordering::Greater)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { c.neg() } else { c.clone() };
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut wrote_factor = false;
            if !abs.is_one() || m.is_one() {
                write!(f, "{}", abs)?;
                wrote_factor = true;
            }
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if wrote_factor {
                    write!(f, "*")?;
                }
                write!(f, "{}", self.ring.vars()[i])?;
                if e > 1 {
                    write!(f, "^{}", e)?;
                }
                wrote_factor = true;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::MonomialOrder;
    use crate::scalar::Field;

    fn ring() -> PolyRing {
        PolyRing::new(&["x", "y", "z"], Field::Rationals, MonomialOrder::Grevlex).unwrap()
    }

    #[test]
    fn add_and_mul() {
        let r = ring();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let sum = x.add(&y); // x + y
        let diff = x.sub(&y); // x - y
        let prod = sum.mul(&diff);
        let expect = x.mul(&x).sub(&y.mul(&y));
        assert_eq!(prod, expect);
        assert!(prod.validate());
        assert_eq!(sum.add(&Polynomial::zero(&r)), sum);
    }

    #[test]
    fn exact_division() {
        let r = ring();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let f = x.add(&y).mul(&x.sub(&y));
        let q = f.exact_divide(&x.add(&y)).unwrap();
        assert_eq!(q, x.sub(&y));
        assert_eq!(
            x.exact_divide(&y).unwrap_err(),
            Error::NonExactDivision
        );
    }

    #[test]
    fn ring_mismatch_detected() {
        let r = ring();
        let s = PolyRing::new(&["a"], Field::Rationals, MonomialOrder::Grevlex).unwrap();
        let x = Polynomial::var(&r, 0);
        let a = Polynomial::var(&s, 0);
        assert_eq!(x.try_add(&a).unwrap_err(), Error::RingMismatch);
    }

    #[test]
    fn substitution() {
        let r = ring();
        let target = PolyRing::new(&["t"], Field::Rationals, MonomialOrder::Grevlex).unwrap();
        let t = Polynomial::var(&target, 0);
        // x^2 - y  with  x -> t^3, y -> t^6  gives 0
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let f = x.pow(2).sub(&y);
        let images = vec![t.pow(3), t.pow(6), Polynomial::one(&target)];
        assert!(f.substitute(&target, &images).unwrap().is_zero());
    }

    #[test]
    fn homogeneity() {
        let r = ring();
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        assert_eq!(x.mul(&y).homogeneous_degree(), Some(2));
        assert!(x.add(&Polynomial::one(&r)).homogeneous_degree().is_none());
    }
}
