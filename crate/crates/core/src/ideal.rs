//! Ideals with cached Gröbner bases, ideal arithmetic, saturation,
//! dimension/height, Fitting ideals, and minimal generating sets.

use crate::error::{Error, Result};
use crate::gb::{self, GroebnerBasis};
use crate::hilbert;
use crate::matrix::PolyMatrix;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;
use crate::ring::PolyRing;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, Mutex};

/// Height of an ideal; the unit ideal carries no obstruction and reports
/// infinite height.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, serde::Serialize)]
pub enum Height {
    Finite(usize),
    Infinite,
}

impl Height {
    pub fn at_least(&self, bound: usize) -> bool {
        match self {
            Height::Finite(h) => *h >= bound,
            Height::Infinite => true,
        }
    }
}

impl fmt::Display for Height {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Height::Finite(h) => write!(f, "{}", h),
            Height::Infinite => write!(f, "inf"),
        }
    }
}

/// An ideal of a polynomial ring, holding its generator list and caching
/// reduced Gröbner bases per monomial order.
#[derive(Clone)]
pub struct Ideal {
    ring: PolyRing,
    gens: Vec<Polynomial>,
    cache: Arc<Mutex<BTreeMap<MonomialOrder, Arc<GroebnerBasis>>>>,
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.gens == other.gens
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.gens.iter().map(|g| format!("{}", g)).collect();
        write!(f, "({})", gens.join(", "))
    }
}

impl Ideal {
    pub fn new(ring: &PolyRing, gens: Vec<Polynomial>) -> Ideal {
        let gens = gens
            .into_iter()
            .filter(|g| {
                assert!(g.ring() == ring, "generator from a different ring");
                !g.is_zero()
            })
            .collect();
        Ideal { ring: ring.clone(), gens, cache: Arc::new(Mutex::new(BTreeMap::new())) }
    }

    pub fn zero(ring: &PolyRing) -> Ideal {
        Ideal::new(ring, Vec::new())
    }

    pub fn unit(ring: &PolyRing) -> Ideal {
        Ideal::new(ring, vec![Polynomial::one(ring)])
    }

    /// The irrelevant maximal ideal (all variables).
    pub fn irrelevant(ring: &PolyRing) -> Ideal {
        Ideal::new(ring, (0..ring.arity()).map(|i| Polynomial::var(ring, i)).collect())
    }

    pub fn parse(ring: &PolyRing, texts: &[&str]) -> Result<Ideal> {
        let gens = texts
            .iter()
            .map(|t| crate::parse::parse_polynomial(ring, t))
            .collect::<Result<Vec<_>>>()?;
        Ok(Ideal::new(ring, gens))
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    /// The cached reduced Gröbner basis for the given order.
    pub fn gb(&self, order: &MonomialOrder) -> Result<Arc<GroebnerBasis>> {
        {
            let cache = self.cache.lock().unwrap();
            if let Some(g) = cache.get(order) {
                return Ok(g.clone());
            }
        }
        let computed = if self.gens.is_empty() {
            Arc::new(gb::groebner_basis_in(&self.ring, &[], order, true)?)
        } else {
            Arc::new(gb::groebner_basis(&self.gens, order, true)?)
        };
        let mut cache = self.cache.lock().unwrap();
        Ok(cache.entry(order.clone()).or_insert(computed).clone())
    }

    /// Reduced GB under the ring's own order.
    pub fn std_gb(&self) -> Result<Arc<GroebnerBasis>> {
        self.gb(&self.ring.order().clone())
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        if f.is_zero() {
            return Ok(true);
        }
        gb::is_member(f, self.std_gb()?.as_ref())
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        gb::normal_form(f, self.std_gb()?.as_ref())
    }

    pub fn is_unit_ideal(&self) -> Result<bool> {
        Ok(self.std_gb()?.is_unit_ideal())
    }

    /// Ideal equality via canonical reduced Gröbner bases.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let order = self.ring.order().clone();
        Ok(self.gb(&order)?.generators() == other.gb(&order)?.generators())
    }

    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ok(Ideal::new(&self.ring, gens))
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.mul(b));
            }
        }
        Ok(Ideal::new(&self.ring, gens))
    }

    /// Intersection via one auxiliary elimination variable:
    /// `I ∩ J = (z·I + (1-z)·J) ∩ k[vars]`.
    pub fn intersection(&self, other: &Ideal) -> Result<Ideal> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        if self.is_zero_ideal() || other.is_zero_ideal() {
            return Ok(Ideal::zero(&self.ring));
        }
        let tag = "#z";
        let big = self.ring.prepended(&[tag], MonomialOrder::Block { split: 1 })?;
        let z = Polynomial::var(&big, 0);
        let one_minus_z = Polynomial::one(&big).sub(&z);
        let mut gens = Vec::new();
        for g in &self.gens {
            gens.push(z.mul(&g.clone().into_ring(&big)?));
        }
        for g in &other.gens {
            gens.push(one_minus_z.mul(&g.clone().into_ring(&big)?));
        }
        let out = gb::eliminate(&big, &gens, &[tag.to_string()])?;
        let back = out
            .into_iter()
            .map(|p| p.into_ring(&self.ring))
            .collect::<Result<Vec<_>>>()?;
        Ok(Ideal::new(&self.ring, back))
    }

    /// Colon ideal `(self : g)` for a single nonzero element, via syzygies
    /// of `[gens, g]`: the coefficient on `g` of every syzygy generates it.
    fn colon_single(&self, g: &Polynomial) -> Result<Ideal> {
        if g.is_zero() {
            return Err(Error::ZeroIdealQuotient);
        }
        if self.gens.is_empty() {
            // (0 : g) = 0 in a domain
            return Ok(Ideal::zero(&self.ring));
        }
        let mut cols: Vec<Vec<Polynomial>> = self.gens.iter().map(|f| vec![f.clone()]).collect();
        cols.push(vec![g.clone()]);
        let syz = gb::module_syzygies(&self.ring, 1, &cols)?;
        let k = cols.len() - 1;
        let gens: Vec<Polynomial> = syz.into_iter().map(|s| s[k].clone()).collect();
        Ok(Ideal::new(&self.ring, gens))
    }

    /// `(self : other) = ∩_g (self : g)` over the generators of `other`.
    pub fn quotient(&self, other: &Ideal) -> Result<Ideal> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        if other.is_zero_ideal() {
            return Err(Error::ZeroIdealQuotient);
        }
        let mut acc: Option<Ideal> = None;
        for g in &other.gens {
            let c = self.colon_single(g)?;
            acc = Some(match acc {
                None => c,
                Some(a) => a.intersection(&c)?,
            });
        }
        Ok(acc.unwrap())
    }

    /// Saturation: iterate `I : J` to a fixed point, certified by one extra
    /// quotient.
    pub fn saturate(&self, other: &Ideal) -> Result<Ideal> {
        let mut cur = self.clone();
        loop {
            let next = cur.quotient(other)?;
            if next.equals(&cur)? {
                return Ok(cur);
            }
            cur = next;
        }
    }

    /// Krull dimension of `R/I` and height of `I`. The dimension is the
    /// maximum size of a variable set independent modulo the initial ideal;
    /// the height is `dim R - dim R/I`, valid in a polynomial ring.
    pub fn dimension_and_height(&self) -> Result<(usize, usize)> {
        let gb = self.std_gb()?;
        if gb.is_unit_ideal() {
            return Err(Error::UnitIdeal);
        }
        let lts: Vec<Monomial> = gb
            .generators()
            .iter()
            .map(|g| g.leading_monomial().unwrap().clone())
            .collect();
        let dim = max_independent_set(&lts, self.ring.arity());
        Ok((dim, self.ring.arity() - dim))
    }

    pub fn height(&self) -> Result<Height> {
        if self.is_unit_ideal()? {
            return Ok(Height::Infinite);
        }
        Ok(Height::Finite(self.dimension_and_height()?.1))
    }

    /// A minimal homogeneous generating set, by pruning redundant
    /// generators (graded Nakayama). Surviving generators keep their
    /// original relative order; redundant ones are dropped highest degree
    /// first.
    pub fn minimal_generating_set(&self) -> Result<Vec<Polynomial>> {
        if !self.is_homogeneous() {
            return Err(Error::NonHomogeneous);
        }
        let mut gens: Vec<Polynomial> = self.gens.clone();
        loop {
            // candidate removal order: degree descending, later position first
            let mut order: Vec<usize> = (0..gens.len()).collect();
            order.sort_by_key(|&i| (std::cmp::Reverse(gens[i].degree()), std::cmp::Reverse(i)));
            let mut removed = false;
            for i in order {
                let rest: Vec<Polynomial> = gens
                    .iter()
                    .enumerate()
                    .filter_map(|(j, g)| (j != i).then(|| g.clone()))
                    .collect();
                let rest_ideal = Ideal::new(&self.ring, rest.clone());
                if rest_ideal.contains(&gens[i])? {
                    gens = rest;
                    removed = true;
                    break;
                }
            }
            if !removed {
                return Ok(gens);
            }
        }
    }

    /// ν(I): the size of a minimal homogeneous generating set.
    pub fn minimal_generator_count(&self) -> Result<usize> {
        Ok(self.minimal_generating_set()?.len())
    }

    /// Map generators into another ring by variable names.
    pub fn into_ring(&self, target: &PolyRing) -> Result<Ideal> {
        let gens = self
            .gens
            .iter()
            .map(|g| g.clone().into_ring(target))
            .collect::<Result<Vec<_>>>()?;
        Ok(Ideal::new(target, gens))
    }

    /// Hilbert function of `R/I` at total degree `d` (via the initial ideal).
    pub fn quotient_hilbert(&self, d: u64) -> Result<usize> {
        let gb = self.std_gb()?;
        let lts: Vec<Monomial> = gb
            .generators()
            .iter()
            .map(|g| g.leading_monomial().unwrap().clone())
            .collect();
        Ok(hilbert::quotient_hf(&lts, self.ring.arity(), d))
    }
}

/// Largest subset of variables supporting no leading monomial, by
/// exhaustive search (rings here are small).
fn max_independent_set(lts: &[Monomial], arity: usize) -> usize {
    assert!(arity <= 20, "independent-set search limited to small rings");
    let mut best = 0usize;
    for mask in 0..(1u32 << arity) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let allowed: Vec<bool> = (0..arity).map(|i| mask & (1 << i) != 0).collect();
        if !lts.iter().any(|m| m.supported_on(&allowed)) {
            best = size;
        }
    }
    best
}

/// The ideal of all `t x t` minors of a presentation matrix, with the
/// paper's minor-size indexing: `t <= 0` gives the unit ideal, `t` beyond
/// the matrix dimensions the zero ideal.
pub fn fitting_ideal(m: &PolyMatrix, t: i64) -> Ideal {
    if t <= 0 {
        return Ideal::unit(m.ring());
    }
    let t = t as usize;
    if t > m.rows() || t > m.cols() {
        return Ideal::zero(m.ring());
    }
    Ideal::new(m.ring(), m.minors(t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Field;

    fn qring(vars: &[&str]) -> PolyRing {
        PolyRing::new(vars, Field::Rationals, MonomialOrder::Grevlex).unwrap()
    }

    fn p_ex1(r: &PolyRing) -> Ideal {
        Ideal::parse(r, &["u*t - v^2", "u*w - t*v", "v*w - t^2"]).unwrap()
    }

    #[test]
    fn quotient_and_intersection_basics() {
        let r = qring(&["x", "y"]);
        let x2 = Ideal::parse(&r, &["x^2"]).unwrap();
        let x = Ideal::parse(&r, &["x"]).unwrap();
        let y = Ideal::parse(&r, &["y"]).unwrap();
        assert!(x2.quotient(&x).unwrap().equals(&x).unwrap());
        let xy = Ideal::parse(&r, &["x*y"]).unwrap();
        assert!(x.intersection(&y).unwrap().equals(&xy).unwrap());
    }

    #[test]
    fn sum_with_maximal_ideal() {
        let r = qring(&["u", "v", "t", "w"]);
        let p = p_ex1(&r);
        let m = Ideal::irrelevant(&r);
        assert!(p.sum(&m).unwrap().equals(&m).unwrap());
    }

    #[test]
    fn saturation_examples() {
        let r = qring(&["x", "y"]);
        let xy = Ideal::parse(&r, &["x*y"]).unwrap();
        let y = Ideal::parse(&r, &["y"]).unwrap();
        let x = Ideal::parse(&r, &["x"]).unwrap();
        assert!(xy.saturate(&y).unwrap().equals(&x).unwrap());

        let i = Ideal::parse(&r, &["x^2", "x*y"]).unwrap();
        let m = Ideal::irrelevant(&r);
        // (x^2, xy) = (x) ∩ (x,y)^2; saturating at m strips the embedded part
        assert!(i.saturate(&m).unwrap().equals(&x).unwrap());
        // saturating at (1) changes nothing
        let unit = Ideal::unit(&r);
        assert!(i.saturate(&unit).unwrap().equals(&i).unwrap());
        // idempotence
        let s = i.saturate(&m).unwrap();
        assert!(s.saturate(&m).unwrap().equals(&s).unwrap());
    }

    #[test]
    fn dimension_examples() {
        let r = qring(&["u", "v", "t", "w"]);
        let p = p_ex1(&r);
        assert_eq!(p.dimension_and_height().unwrap(), (2, 2));
        let m = Ideal::irrelevant(&r);
        assert_eq!(m.dimension_and_height().unwrap(), (0, 4));
        let zero = Ideal::zero(&r);
        assert_eq!(zero.dimension_and_height().unwrap(), (4, 0));
        let unit = Ideal::unit(&r);
        assert_eq!(unit.dimension_and_height().unwrap_err(), Error::UnitIdeal);
        assert_eq!(unit.height().unwrap(), Height::Infinite);
    }

    #[test]
    fn fitting_ideals_of_ex1_syzygy_matrix() {
        let r = qring(&["u", "v", "t", "w"]);
        let phi = PolyMatrix::parse(&r, &[&["-t", "w"], &["v", "-t"], &["-u", "v"]]).unwrap();
        let i1 = fitting_ideal(&phi, 1);
        let m = Ideal::irrelevant(&r);
        assert!(i1.equals(&m).unwrap());
        assert_eq!(i1.dimension_and_height().unwrap().1, 4);
        // I_2(phi) = p (Hilbert-Burch)
        let i2 = fitting_ideal(&phi, 2);
        assert!(i2.equals(&p_ex1(&r)).unwrap());
        // conventions at the ends
        assert!(fitting_ideal(&phi, 0).is_unit_ideal().unwrap());
        assert!(fitting_ideal(&phi, 3).is_zero_ideal());
        let z = PolyMatrix::zero(&r, 2, 2);
        assert!(fitting_ideal(&z, 1).is_zero_ideal());
    }

    #[test]
    fn minimal_generators() {
        let r = qring(&["u", "v", "t", "w"]);
        assert_eq!(p_ex1(&r).minimal_generator_count().unwrap(), 3);
        let redundant = Ideal::parse(&r, &["u", "v", "u + v"]).unwrap();
        assert_eq!(redundant.minimal_generator_count().unwrap(), 2);
        assert_eq!(Ideal::irrelevant(&r).minimal_generator_count().unwrap(), 4);
        let inhom = Ideal::parse(&r, &["u + 1"]).unwrap();
        assert_eq!(
            inhom.minimal_generator_count().unwrap_err(),
            Error::NonHomogeneous
        );
    }

    #[test]
    fn quotient_by_zero_rejected() {
        let r = qring(&["x"]);
        let x = Ideal::parse(&r, &["x"]).unwrap();
        assert_eq!(
            x.quotient(&Ideal::zero(&r)).unwrap_err(),
            Error::ZeroIdealQuotient
        );
    }
}
