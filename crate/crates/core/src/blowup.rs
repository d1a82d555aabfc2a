//! Blowup algebras: Rees algebras of ideals and modules, symmetric
//! algebras, associated graded rings, graded components, linear-type tests,
//! and analytic spread.

use crate::error::{Error, Result};
use crate::gb;
use crate::hilbert;
use crate::ideal::Ideal;
use crate::matrix::PolyMatrix;
use crate::module::{self, FPModule};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;
use crate::ring::PolyRing;
use crate::scalar::Scalar;

pub const DEFAULT_COMPONENT_BOUND: i64 = 4;

/// A standard-graded quotient of `base[x1..xn]`: the presentation variables
/// carry degree one, the base ring degree zero. `base_quotient` is the ideal
/// of the coefficient ring (e.g. `p` for the associated graded ring), and is
/// contained in `defining`.
#[derive(Debug, Clone)]
pub struct GradedAlgebra {
    ambient: PolyRing,
    base_ring: PolyRing,
    base_quotient: Ideal,
    defining: Ideal,
    n_pres_vars: usize,
    /// internal (base) degree of the element each presentation variable maps to
    pres_weights: Vec<i64>,
    component_bound: i64,
}

impl GradedAlgebra {
    pub fn ambient(&self) -> &PolyRing {
        &self.ambient
    }

    pub fn base_ring(&self) -> &PolyRing {
        &self.base_ring
    }

    pub fn base_quotient(&self) -> &Ideal {
        &self.base_quotient
    }

    pub fn defining_ideal(&self) -> &Ideal {
        &self.defining
    }

    pub fn presentation_vars(&self) -> usize {
        self.n_pres_vars
    }

    pub fn pres_weights(&self) -> &[i64] {
        &self.pres_weights
    }

    pub fn component_bound(&self) -> i64 {
        self.component_bound
    }

    pub fn with_component_bound(mut self, bound: i64) -> GradedAlgebra {
        self.component_bound = bound;
        self
    }

    /// Degree in the presentation variables.
    fn x_degree(&self, m: &Monomial) -> u64 {
        let base = self.base_ring.arity();
        (base..self.ambient.arity()).map(|i| m.exponent(i) as u64).sum()
    }

    /// Split an ambient polynomial into (x-monomial, base coefficient) parts.
    fn split_by_x(&self, f: &Polynomial) -> Vec<(Monomial, Polynomial)> {
        let base_arity = self.base_ring.arity();
        let n = self.n_pres_vars;
        let mut groups: std::collections::BTreeMap<Vec<u32>, Vec<(Monomial, Scalar)>> =
            std::collections::BTreeMap::new();
        for (m, c) in f.terms() {
            let xpart: Vec<u32> = (0..n).map(|j| m.exponent(base_arity + j)).collect();
            let bpart = Monomial::new(m.exponents()[..base_arity].to_vec());
            groups.entry(xpart).or_default().push((bpart, c.clone()));
        }
        groups
            .into_iter()
            .map(|(x, terms)| {
                (Monomial::new(x), Polynomial::from_terms(&self.base_ring, terms))
            })
            .collect()
    }

    /// The degree-`t` component as a module over the base ring, presented on
    /// the degree-`t` monomials in the presentation variables.
    pub fn graded_component(&self, t: i64) -> Result<FPModule> {
        if t < 0 {
            return Err(Error::IndexOutOfRange(t, 0, i64::MAX));
        }
        if t > self.component_bound {
            return Err(Error::DegreeBoundExceeded(t, self.component_bound));
        }
        let n = self.n_pres_vars;
        let basis = hilbert::monomials_of_degree(n, t as u64);
        let index_of = |m: &Monomial| basis.iter().position(|b| b == m).unwrap();
        let twists: Vec<i64> = basis
            .iter()
            .map(|m| {
                (0..n)
                    .map(|j| m.exponent(j) as i64 * self.pres_weights[j])
                    .sum()
            })
            .collect();
        let mut rel_cols: Vec<Vec<Polynomial>> = Vec::new();
        for g in self.defining.generators() {
            let parts = self.split_by_x(g);
            // generators of the defining ideal are homogeneous in x
            let dg = parts
                .iter()
                .map(|(m, _)| m.degree())
                .max()
                .unwrap_or(0);
            debug_assert!(
                parts.iter().all(|(m, _)| m.degree() == dg),
                "defining ideal generator not x-homogeneous"
            );
            if dg as i64 > t {
                continue;
            }
            for mu in hilbert::monomials_of_degree(n, (t - dg as i64) as u64) {
                let mut col = vec![Polynomial::zero(&self.base_ring); basis.len()];
                for (xm, coeff) in &parts {
                    col[index_of(&xm.mul(&mu))] = coeff.clone();
                }
                if !col.iter().all(|p| p.is_zero()) {
                    rel_cols.push(col);
                }
            }
        }
        let pres = PolyMatrix::from_columns(&self.base_ring, basis.len(), &rel_cols)?;
        FPModule::new(&self.base_ring, self.base_quotient.clone(), twists, pres)
    }

    /// Dimension of the degree-`t`, internal-degree-`d` bigraded slice,
    /// computed directly from the defining ideal's initial ideal. Internal
    /// degree weights presentation variables by `pres_weights`.
    pub fn bigraded_hf(&self, t: i64, d: i64) -> Result<usize> {
        if t < 0 || d < 0 {
            return Ok(0);
        }
        let gbase = self.defining.std_gb()?;
        let lts: Vec<Monomial> = gbase
            .generators()
            .iter()
            .map(|g| g.leading_monomial().unwrap().clone())
            .collect();
        let base_arity = self.base_ring.arity();
        let n = self.n_pres_vars;
        let mut count = 0usize;
        for mu in hilbert::monomials_of_degree(n, t as u64) {
            let w: i64 = (0..n)
                .map(|j| mu.exponent(j) as i64 * self.pres_weights[j])
                .sum();
            let rem = d - w;
            if rem < 0 {
                continue;
            }
            for bm in hilbert::monomials_of_degree(base_arity, rem as u64) {
                let mut exps = bm.exponents().to_vec();
                exps.extend_from_slice(mu.exponents());
                let full = Monomial::new(exps);
                if !lts.iter().any(|l| l.divides(&full)) {
                    count += 1;
                }
            }
        }
        Ok(count)
    }

    /// Krull dimension of the algebra.
    pub fn dimension(&self) -> Result<usize> {
        Ok(self.defining.dimension_and_height()?.0)
    }
}

fn pres_var_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{}", i)).collect()
}

fn ambient_ring(base: &PolyRing, n: usize) -> Result<PolyRing> {
    let names = pres_var_names(n);
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    base.extended(&refs, MonomialOrder::Grevlex)
}

/// The Rees algebra `R[I·s] = base[x1..xn]/J`, `x_i` mapped to the `i`-th
/// stored generator of `I`; `J` is computed by eliminating the tag variable
/// from the graph ideal.
pub fn rees_of_ideal(ideal: &Ideal) -> Result<GradedAlgebra> {
    if ideal.is_zero_ideal() {
        return Err(Error::ZeroIdeal);
    }
    if !ideal.is_homogeneous() {
        return Err(Error::NonHomogeneous);
    }
    let base = ideal.ring().clone();
    let gens = ideal.generators().to_vec();
    let n = gens.len();
    let ambient = ambient_ring(&base, n)?;
    // big ring with a leading tag block to eliminate
    let big = ambient.prepended(&["#s"], MonomialOrder::Block { split: 1 })?;
    let s = Polynomial::var(&big, 0);
    let graph: Vec<Polynomial> = (0..n)
        .map(|i| {
            let x = Polynomial::var(&big, 1 + base.arity() + i);
            let f = gens[i].clone().into_ring(&big).expect("base vars present");
            x.sub(&f.mul(&s))
        })
        .collect::<Vec<_>>();
    let kernel = gb::eliminate(&big, &graph, &["#s".to_string()])?;
    let defin = kernel
        .into_iter()
        .map(|p| p.into_ring(&ambient))
        .collect::<Result<Vec<_>>>()?;
    let pres_weights = gens
        .iter()
        .map(|g| g.homogeneous_degree().unwrap() as i64)
        .collect();
    Ok(GradedAlgebra {
        ambient: ambient.clone(),
        base_ring: base.clone(),
        base_quotient: Ideal::zero(&base),
        defining: Ideal::new(&ambient, defin),
        n_pres_vars: n,
        pres_weights,
        component_bound: DEFAULT_COMPONENT_BOUND,
    })
}

/// The associated graded ring `G = R(p)/pR(p)`.
pub fn associated_graded(p: &Ideal) -> Result<GradedAlgebra> {
    if p.is_unit_ideal()? {
        return Err(Error::UnitIdeal);
    }
    let mut rees = rees_of_ideal(p)?;
    let mut gens = rees.defining.generators().to_vec();
    for g in p.generators() {
        gens.push(g.clone().into_ring(&rees.ambient)?);
    }
    rees.defining = Ideal::new(&rees.ambient, gens);
    rees.base_quotient = p.clone();
    Ok(rees)
}

/// The symmetric algebra of a presented module: one variable per generator,
/// modulo the linear forms read off the presentation columns.
pub fn symmetric_algebra(m: &FPModule) -> Result<GradedAlgebra> {
    let base = m.ring().clone();
    let n = m.rank();
    let ambient = ambient_ring(&base, n)?;
    let mut gens: Vec<Polynomial> = Vec::new();
    for q in m.base().generators() {
        gens.push(q.clone().into_ring(&ambient)?);
    }
    for col in m.relations().columns() {
        let mut form = Polynomial::zero(&ambient);
        for (i, entry) in col.iter().enumerate() {
            let x = Polynomial::var(&ambient, base.arity() + i);
            form = form.add(&entry.clone().into_ring(&ambient)?.mul(&x));
        }
        if !form.is_zero() {
            gens.push(form);
        }
    }
    Ok(GradedAlgebra {
        ambient: ambient.clone(),
        base_ring: base.clone(),
        base_quotient: m.base().clone(),
        defining: Ideal::new(&ambient, gens),
        n_pres_vars: n,
        pres_weights: m.twists().to_vec(),
        component_bound: DEFAULT_COMPONENT_BOUND,
    })
}

/// Rees algebra of a module along its attached embedding into
/// `base^e`: the kernel of `base[x] -> base[T1..Te]`, `x_j` mapped to the
/// `j`-th embedded generator.
pub fn rees_of_module(m: &FPModule) -> Result<GradedAlgebra> {
    let emb = m.embedding().ok_or(Error::MissingEmbedding)?;
    let base = m.ring().clone();
    let e = emb.amb_rank;
    let n = emb.matrix.cols();
    // rank over the quotient field of the base: some e x e minor outside the base ideal
    if e > 0 {
        let mut full_rank = e <= n && false;
        for minor in emb.matrix.minors(e) {
            if !m.base().contains(&minor)? {
                full_rank = true;
                break;
            }
        }
        if !full_rank {
            return Err(Error::RankMismatch);
        }
    }
    let ambient = ambient_ring(&base, n)?;
    let tags: Vec<String> = (0..e).map(|i| format!("#T{}", i)).collect();
    let tag_refs: Vec<&str> = tags.iter().map(|s| s.as_str()).collect();
    let big = ambient.prepended(&tag_refs, MonomialOrder::Block { split: e })?;
    let mut graph: Vec<Polynomial> = Vec::new();
    for j in 0..n {
        let x = Polynomial::var(&big, e + base.arity() + j);
        let mut img = Polynomial::zero(&big);
        for i in 0..e {
            let t = Polynomial::var(&big, i);
            img = img.add(&emb.matrix.entry(i, j).clone().into_ring(&big)?.mul(&t));
        }
        graph.push(x.sub(&img));
    }
    for q in m.base().generators() {
        graph.push(q.clone().into_ring(&big)?);
    }
    let kernel = gb::eliminate(&big, &graph, &tags)?;
    let defin = kernel
        .into_iter()
        .map(|p| p.into_ring(&ambient))
        .collect::<Result<Vec<_>>>()?;
    Ok(GradedAlgebra {
        ambient: ambient.clone(),
        base_ring: base.clone(),
        base_quotient: m.base().clone(),
        defining: Ideal::new(&ambient, defin),
        n_pres_vars: n,
        pres_weights: m.twists().to_vec(),
        component_bound: DEFAULT_COMPONENT_BOUND,
    })
}

/// Linear type: the defining ideal of the associated graded ring agrees
/// with the symmetric-algebra ideal (base ideal plus syzygy linear forms).
pub fn linear_type_check(p: &Ideal) -> Result<bool> {
    let g = associated_graded(p)?;
    let base = p.ring().clone();
    let cols: Vec<Vec<Polynomial>> = p.generators().iter().map(|f| vec![f.clone()]).collect();
    let syz = gb::module_syzygies(&base, 1, &cols)?;
    let mut gens: Vec<Polynomial> = Vec::new();
    for q in p.generators() {
        gens.push(q.clone().into_ring(&g.ambient)?);
    }
    for col in syz {
        let mut form = Polynomial::zero(&g.ambient);
        for (i, entry) in col.iter().enumerate() {
            let x = Polynomial::var(&g.ambient, base.arity() + i);
            form = form.add(&entry.clone().into_ring(&g.ambient)?.mul(&x));
        }
        gens.push(form);
    }
    let sym_ideal = Ideal::new(&g.ambient, gens);
    g.defining.equals(&sym_ideal)
}

/// Analytic spread `ℓ(p) = dim G/mG`.
pub fn analytic_spread(p: &Ideal) -> Result<usize> {
    let g = associated_graded(p)?;
    let mut gens = g.defining.generators().to_vec();
    for i in 0..p.ring().arity() {
        gens.push(Polynomial::var(&g.ambient, i));
    }
    let fiber = Ideal::new(&g.ambient, gens);
    Ok(fiber.dimension_and_height()?.0)
}

/// A candidate integral closure of a graded algebra: finitely many new
/// variables, each satisfying a monic integral equation among the supplied
/// relations.
#[derive(Debug, Clone)]
pub struct ClosureCandidate {
    pub base: GradedAlgebra,
    pub new_vars: Vec<String>,
    /// presentation degree of each new variable
    pub new_degrees: Vec<i64>,
    /// relations in the extended ambient ring
    pub relations: Vec<Polynomial>,
}

impl ClosureCandidate {
    /// The extended polynomial ring `ambient[new_vars]`.
    pub fn extended_ring(&self) -> Result<PolyRing> {
        let refs: Vec<&str> = self.new_vars.iter().map(|s| s.as_str()).collect();
        self.base.ambient().extended(&refs, MonomialOrder::Grevlex)
    }

    /// Full defining ideal of the candidate in the extended ring.
    pub fn defining_ideal(&self) -> Result<Ideal> {
        let ring = self.extended_ring()?;
        let mut gens: Vec<Polynomial> = self
            .base
            .defining_ideal()
            .generators()
            .iter()
            .map(|g| g.clone().into_ring(&ring))
            .collect::<Result<_>>()?;
        for r in &self.relations {
            gens.push(r.clone().into_ring(&ring)?);
        }
        Ok(Ideal::new(&ring, gens))
    }

    /// The monic integral equation for each new variable: a relation whose
    /// leading coefficient in that variable is a nonzero constant and whose
    /// other coefficients avoid every new variable.
    pub fn monic_relation_for(&self, var: &str) -> Result<Polynomial> {
        let ring = self.extended_ring()?;
        let vi = ring.var_index(var).ok_or_else(|| Error::UnknownVariable(var.into()))?;
        let new_idx: Vec<usize> = self
            .new_vars
            .iter()
            .map(|v| ring.var_index(v).unwrap())
            .collect();
        'rel: for r in &self.relations {
            let r = r.clone().into_ring(&ring)?;
            let d = r
                .terms()
                .iter()
                .map(|(m, _)| m.exponent(vi))
                .max()
                .unwrap_or(0);
            if d == 0 {
                continue;
            }
            let mut top_is_constant = false;
            for (m, _) in r.terms() {
                let e = m.exponent(vi);
                // other new variables must not appear at all
                if new_idx.iter().any(|&j| j != vi && m.exponent(j) > 0) {
                    continue 'rel;
                }
                if e == d && m.degree() == d as u64 {
                    top_is_constant = true;
                } else if e == d && m.exponents().iter().enumerate().any(|(j, &ex)| j != vi && ex > 0)
                {
                    // top coefficient involves other variables: not monic
                    continue 'rel;
                }
            }
            if top_is_constant {
                return Ok(r);
            }
        }
        Err(Error::MissingMonicRelation(var.into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::present_conormal;
    use crate::parse::parse_polynomial;
    use crate::scalar::Field;

    fn qring(vars: &[&str]) -> PolyRing {
        PolyRing::new(vars, Field::Rationals, MonomialOrder::Grevlex).unwrap()
    }

    fn p_ex1(r: &PolyRing) -> Ideal {
        Ideal::parse(r, &["u*t - v^2", "u*w - t*v", "v*w - t^2"]).unwrap()
    }

    #[test]
    fn rees_of_complete_intersection() {
        let r = qring(&["u", "v"]);
        let i = Ideal::parse(&r, &["u", "v"]).unwrap();
        let rees = rees_of_ideal(&i).unwrap();
        let expect =
            Ideal::parse(rees.ambient(), &["u*x2 - v*x1"]).unwrap();
        assert!(rees.defining_ideal().equals(&expect).unwrap());
    }

    #[test]
    fn rees_of_principal_ideal_is_polynomial_ring() {
        let r = qring(&["u", "v"]);
        let i = Ideal::parse(&r, &["u*v"]).unwrap();
        let rees = rees_of_ideal(&i).unwrap();
        assert!(rees.defining_ideal().is_zero_ideal());
    }

    #[test]
    fn associated_graded_of_ex1_matches_paper_presentation() {
        let r = qring(&["u", "v", "t", "w"]);
        let p = p_ex1(&r);
        let g = associated_graded(&p).unwrap();
        let expect = Ideal::parse(
            g.ambient(),
            &[
                "u*t - v^2",
                "u*w - t*v",
                "v*w - t^2",
                "-t*x1 + v*x2 - u*x3",
                "w*x1 - t*x2 + v*x3",
            ],
        )
        .unwrap();
        assert!(g.defining_ideal().equals(&expect).unwrap());
    }

    #[test]
    fn associated_graded_of_ci_is_polynomial_over_quotient() {
        let r = qring(&["u", "v", "t", "w"]);
        let p = Ideal::parse(&r, &["u", "v"]).unwrap();
        let g = associated_graded(&p).unwrap();
        // defining ideal is exactly p extended (no relations among x's)
        let expect = Ideal::parse(g.ambient(), &["u", "v"]).unwrap();
        assert!(g.defining_ideal().equals(&expect).unwrap());
    }

    #[test]
    fn graded_components_of_ex1() {
        let r = qring(&["u", "v", "t", "w"]);
        let p = p_ex1(&r);
        let g = associated_graded(&p).unwrap();
        // G_0 = S
        let g0 = g.graded_component(0).unwrap();
        assert_eq!(g0.minimal_generators().unwrap(), 1);
        // G_1 = E, three generators with the phi-bar presentation
        let g1 = g.graded_component(1).unwrap();
        assert_eq!(g1.minimal_generators().unwrap(), 3);
        let e = present_conormal(&p).unwrap();
        // same Hilbert function in low degrees
        for d in 0..6 {
            assert_eq!(
                g1.hilbert_function(d).unwrap(),
                e.hilbert_function(d).unwrap(),
                "degree {}",
                d
            );
        }
        // bound enforced
        assert!(matches!(
            g.graded_component(5),
            Err(Error::DegreeBoundExceeded(5, 4))
        ));
    }

    #[test]
    fn hilbert_consistency_of_components() {
        let r = qring(&["u", "v", "t", "w"]);
        let p = p_ex1(&r);
        let g = associated_graded(&p).unwrap();
        for t in 0..=3i64 {
            let comp = g.graded_component(t).unwrap();
            for d in 0..8i64 {
                assert_eq!(
                    comp.hilbert_function(d).unwrap(),
                    g.bigraded_hf(t, d).unwrap(),
                    "component {} degree {}",
                    t,
                    d
                );
            }
        }
    }

    #[test]
    fn symmetric_algebra_of_free_module_is_polynomial_ring() {
        let r = qring(&["u", "v"]);
        let base = Ideal::parse(&r, &["u"]).unwrap();
        let f = FPModule::free(&r, base.clone(), vec![1, 1]);
        let sym = symmetric_algebra(&f).unwrap();
        let expect = Ideal::parse(sym.ambient(), &["u"]).unwrap();
        assert!(sym.defining_ideal().equals(&expect).unwrap());
    }

    #[test]
    fn symmetric_algebra_of_conormal_matches_associated_graded_for_ex1() {
        let r = qring(&["u", "v", "t", "w"]);
        let p = p_ex1(&r);
        let e = present_conormal(&p).unwrap();
        let sym = symmetric_algebra(&e).unwrap();
        let g = associated_graded(&p).unwrap();
        assert!(sym
            .defining_ideal()
            .equals(g.defining_ideal())
            .unwrap());
        assert!(linear_type_check(&p).unwrap());
    }

    #[test]
    fn veronese_square_is_not_of_linear_type() {
        let r = qring(&["u", "v"]);
        let p = Ideal::parse(&r, &["u^2", "u*v", "v^2"]).unwrap();
        assert!(!linear_type_check(&p).unwrap());
        // the quadratic Rees relation x1*x3 - x2^2 is in the kernel
        let rees = rees_of_ideal(&p).unwrap();
        let quad = parse_polynomial(rees.ambient(), "x1*x3 - x2^2").unwrap();
        assert!(rees.defining_ideal().contains(&quad).unwrap());
    }

    #[test]
    fn linear_type_for_complete_intersection() {
        let r = qring(&["u", "v", "t", "w"]);
        let p = Ideal::parse(&r, &["u", "v"]).unwrap();
        assert!(linear_type_check(&p).unwrap());
    }

    #[test]
    fn analytic_spread_examples() {
        let r = qring(&["u", "v", "t", "w"]);
        assert_eq!(analytic_spread(&p_ex1(&r)).unwrap(), 3);
        let ci = Ideal::parse(&r, &["u", "v"]).unwrap();
        assert_eq!(analytic_spread(&ci).unwrap(), 2);
        let f = Ideal::parse(&r, &["u*w - t*v"]).unwrap();
        assert_eq!(analytic_spread(&f).unwrap(), 1);
    }

    #[test]
    fn dimension_formulas() {
        let r = qring(&["u", "v", "t", "w"]);
        let p = p_ex1(&r);
        let rees = rees_of_ideal(&p).unwrap();
        assert_eq!(rees.dimension().unwrap(), 5); // dim R + 1
        let g = associated_graded(&p).unwrap();
        assert_eq!(g.dimension().unwrap(), 4); // dim R
    }

    #[test]
    fn rees_of_module_consistency_for_ideal() {
        // rank-1 module = the ideal itself with its inclusion embedding
        let r = qring(&["u", "v"]);
        let i = Ideal::parse(&r, &["u", "v"]).unwrap();
        let cols: Vec<Vec<Polynomial>> =
            i.generators().iter().map(|g| vec![g.clone()]).collect();
        let syz = gb::module_syzygies(&r, 1, &cols).unwrap();
        let pres = PolyMatrix::from_columns(&r, 2, &syz).unwrap();
        let m = FPModule::new(&r, Ideal::zero(&r), vec![1, 1], pres)
            .unwrap()
            .with_embedding(crate::module::Embedding {
                amb_rank: 1,
                amb_twists: vec![0],
                matrix: PolyMatrix::from_columns(&r, 1, &cols).unwrap(),
            });
        let rm = rees_of_module(&m).unwrap();
        let ri = rees_of_ideal(&i).unwrap();
        assert!(rm.defining_ideal().equals(ri.defining_ideal()).unwrap());
    }
}
