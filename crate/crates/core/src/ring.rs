//! Polynomial ring descriptors.

use crate::error::{Error, Result};
use crate::monomial::MonomialOrder;
use crate::scalar::Field;
use std::fmt;
use std::sync::Arc;

#[derive(Debug, PartialEq, Eq, Hash)]
struct RingRepr {
    vars: Vec<String>,
    field: Field,
    order: MonomialOrder,
    weights: Vec<u32>,
}

/// A handle to a polynomial ring `k[vars]` with a fixed monomial order and
/// grading weights. Cheap to clone; two handles compare equal when their
/// contents agree.
#[derive(Clone)]
pub struct PolyRing {
    repr: Arc<RingRepr>,
}

impl PartialEq for PolyRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.repr, &other.repr) || self.repr == other.repr
    }
}

impl Eq for PolyRing {}

impl PolyRing {
    /// Create a ring; variable names must be distinct and weights positive.
    pub fn new(vars: &[&str], field: Field, order: MonomialOrder) -> Result<PolyRing> {
        let weights = vec![1; vars.len()];
        PolyRing::with_weights(vars, field, order, weights)
    }

    pub fn with_weights(
        vars: &[&str],
        field: Field,
        order: MonomialOrder,
        weights: Vec<u32>,
    ) -> Result<PolyRing> {
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(Error::DuplicateVariable(v.to_string()));
            }
        }
        if weights.len() != vars.len() || weights.iter().any(|&w| w == 0) {
            return Err(Error::ShapeMismatch("weights must be positive, one per variable".into()));
        }
        Ok(PolyRing {
            repr: Arc::new(RingRepr {
                vars: vars.iter().map(|s| s.to_string()).collect(),
                field,
                order,
                weights,
            }),
        })
    }

    pub fn vars(&self) -> &[String] {
        &self.repr.vars
    }

    pub fn arity(&self) -> usize {
        self.repr.vars.len()
    }

    pub fn field(&self) -> Field {
        self.repr.field
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.repr.order
    }

    pub fn weights(&self) -> &[u32] {
        &self.repr.weights
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.repr.vars.iter().position(|v| v == name)
    }

    /// Same variables and field, different monomial order.
    pub fn with_order(&self, order: MonomialOrder) -> PolyRing {
        PolyRing {
            repr: Arc::new(RingRepr {
                vars: self.repr.vars.clone(),
                field: self.repr.field,
                order,
                weights: self.repr.weights.clone(),
            }),
        }
    }

    /// Extend by fresh variables appended after the existing ones.
    pub fn extended(&self, new_vars: &[&str], order: MonomialOrder) -> Result<PolyRing> {
        let mut vars: Vec<&str> = self.repr.vars.iter().map(|s| s.as_str()).collect();
        vars.extend_from_slice(new_vars);
        let mut weights = self.repr.weights.clone();
        weights.extend(std::iter::repeat(1).take(new_vars.len()));
        PolyRing::with_weights(&vars, self.repr.field, order, weights)
    }

    /// Fresh variables *prepended* before the existing ones (elimination blocks).
    pub fn prepended(&self, new_vars: &[&str], order: MonomialOrder) -> Result<PolyRing> {
        let mut vars: Vec<&str> = new_vars.to_vec();
        vars.extend(self.repr.vars.iter().map(|s| s.as_str()));
        let mut weights = vec![1; new_vars.len()];
        weights.extend_from_slice(&self.repr.weights);
        PolyRing::with_weights(&vars, self.repr.field, order, weights)
    }
}

impl fmt::Debug for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.repr.field, self.repr.vars.join(","))
    }
}

impl fmt::Display for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}] order {}", self.repr.field, self.repr.vars.join(","), self.repr.order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn create_rings() {
        let r = PolyRing::new(&["u", "v", "t", "w"], Field::Rationals, MonomialOrder::Grevlex)
            .unwrap();
        assert_eq!(r.arity(), 4);
        let k = PolyRing::new(&[], Field::Rationals, MonomialOrder::Lex).unwrap();
        assert_eq!(k.arity(), 0);
        let fp = PolyRing::new(&["x", "y"], Field::prime(7).unwrap(), MonomialOrder::Lex).unwrap();
        assert_eq!(fp.field(), Field::Prime(7));
    }

    #[test]
    fn duplicate_variable_rejected() {
        let e = PolyRing::new(&["x", "x"], Field::Rationals, MonomialOrder::Grevlex);
        assert_eq!(e.unwrap_err(), Error::DuplicateVariable("x".into()));
    }

    #[test]
    fn ring_equality_is_structural() {
        let a = PolyRing::new(&["x", "y"], Field::Rationals, MonomialOrder::Grevlex).unwrap();
        let b = PolyRing::new(&["x", "y"], Field::Rationals, MonomialOrder::Grevlex).unwrap();
        let c = a.with_order(MonomialOrder::Lex);
        assert_eq!(a, b);
        assert_ne!(a, c);
    }
}
