//! Gröbner bases of ideals and submodules, normal forms, elimination, and
//! kernels of ring maps.

pub mod buchberger;
pub mod melt;

use crate::error::{Error, Result};
use crate::monomial::MonomialOrder;
use crate::poly::Polynomial;
use crate::ring::PolyRing;
use buchberger::Engine;
use melt::{MElt, ModOrder};

/// A Gröbner basis of an ideal under a fixed monomial order. When `reduced`
/// is set the basis is the canonical one for (ideal, order): inter-reduced,
/// monic, sorted descending by leading term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: PolyRing,
    order: MonomialOrder,
    generators: Vec<Polynomial>,
    reduced: bool,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// The basis contains a nonzero constant, i.e. the ideal is the unit ideal.
    pub fn is_unit_ideal(&self) -> bool {
        self.generators.iter().any(|g| g.is_constant() && !g.is_zero())
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty()
    }
}

/// Compute a Gröbner basis of the ideal generated by `gens` under `order`.
pub fn groebner_basis(
    gens: &[Polynomial],
    order: &MonomialOrder,
    reduced: bool,
) -> Result<GroebnerBasis> {
    let ring = match gens.first() {
        Some(g) => g.ring().clone(),
        None => {
            return Err(Error::ShapeMismatch("cannot infer the ring of an empty list".into()))
        }
    };
    for g in gens {
        if g.ring() != &ring {
            return Err(Error::RingMismatch);
        }
    }
    groebner_basis_in(&ring, gens, order, reduced)
}

pub fn groebner_basis_in(
    ring: &PolyRing,
    gens: &[Polynomial],
    order: &MonomialOrder,
    reduced: bool,
) -> Result<GroebnerBasis> {
    let work_ring = if ring.order() == order { ring.clone() } else { ring.with_order(order.clone()) };
    let eng = Engine::for_ideal(&work_ring);
    let ord = eng.ord.clone();
    let melts: Vec<MElt> = gens
        .iter()
        .map(|g| MElt::from_poly(&ord, &g.clone().into_ring(&work_ring).expect("same vars")))
        .collect();
    let gb = if reduced {
        eng.reduced_gb(&melts)?
    } else {
        eng.buchberger(&melts)?
    };
    let generators = gb
        .iter()
        .map(|g| g.to_poly(&work_ring).into_ring(ring).expect("same vars"))
        .collect();
    Ok(GroebnerBasis { ring: ring.clone(), order: order.clone(), generators, reduced })
}

/// Normal form of `f` against a Gröbner basis: no term of the result is
/// divisible by any basis leading term, and `f - result` lies in the ideal.
pub fn normal_form(f: &Polynomial, gb: &GroebnerBasis) -> Result<Polynomial> {
    if f.ring() != gb.ring() {
        return Err(Error::RingMismatch);
    }
    let work_ring = if gb.ring.order() == &gb.order {
        gb.ring.clone()
    } else {
        gb.ring.with_order(gb.order.clone())
    };
    let eng = Engine::for_ideal(&work_ring);
    let ord = eng.ord.clone();
    let basis: Vec<MElt> = gb
        .generators
        .iter()
        .map(|g| MElt::from_poly(&ord, &g.clone().into_ring(&work_ring).unwrap()))
        .collect();
    let fin = MElt::from_poly(&ord, &f.clone().into_ring(&work_ring).unwrap());
    let nf = eng.normal_form(&fin, &basis)?;
    nf.to_poly(&work_ring).into_ring(f.ring())
}

/// Ideal membership via normal form.
pub fn is_member(f: &Polynomial, gb: &GroebnerBasis) -> Result<bool> {
    Ok(normal_form(f, gb)?.is_zero())
}

/// Generators of `I ∩ k[vars \ drop]`, computed with a block elimination
/// order. `drop` holds variable names to eliminate; the result lives in the
/// original ring but involves none of the dropped variables.
pub fn eliminate(ring: &PolyRing, gens: &[Polynomial], drop: &[String]) -> Result<Vec<Polynomial>> {
    for d in drop {
        if ring.var_index(d).is_none() {
            return Err(Error::UnknownVariable(d.clone()));
        }
    }
    if drop.is_empty() {
        return Ok(gens.to_vec());
    }
    let dropped: Vec<bool> = ring.vars().iter().map(|v| drop.contains(v)).collect();
    // permuted ring: dropped block first
    let mut names: Vec<&str> = Vec::with_capacity(ring.arity());
    for (v, d) in ring.vars().iter().zip(&dropped) {
        if *d {
            names.push(v);
        }
    }
    let split = names.len();
    for (v, d) in ring.vars().iter().zip(&dropped) {
        if !*d {
            names.push(v);
        }
    }
    let elim_ring = PolyRing::new(&names, ring.field(), MonomialOrder::Block { split })?;
    let eng = Engine::for_ideal(&elim_ring);
    let ord = eng.ord.clone();
    let melts: Vec<MElt> = gens
        .iter()
        .map(|g| Ok(MElt::from_poly(&ord, &g.clone().into_ring(&elim_ring)?)))
        .collect::<Result<_>>()?;
    let gb = eng.reduced_gb(&melts)?;
    let dropped_in_elim: Vec<bool> = elim_ring
        .vars()
        .iter()
        .enumerate()
        .map(|(i, _)| i < split)
        .collect();
    let mut out = Vec::new();
    for g in gb {
        let p = g.to_poly(&elim_ring);
        if p.avoids_vars(&dropped_in_elim) {
            out.push(p.into_ring(ring)?);
        }
    }
    Ok(out)
}

/// Defining ideal of the image of the ring map `source -> target` sending
/// the i-th source variable to `images[i]`. Computed by eliminating the
/// target variables from the graph ideal.
pub fn kernel_of_ring_map(
    source: &PolyRing,
    target: &PolyRing,
    images: &[Polynomial],
) -> Result<Vec<Polynomial>> {
    if images.len() != source.arity() {
        return Err(Error::ShapeMismatch(format!(
            "need {} images, got {}",
            source.arity(),
            images.len()
        )));
    }
    for im in images {
        if im.ring() != target {
            return Err(Error::RingMismatch);
        }
    }
    if source.field() != target.field() {
        return Err(Error::FieldMismatch);
    }
    // fresh names for the target block avoid collisions with source names
    let fresh: Vec<String> = (0..target.arity()).map(|i| format!("#t{}", i)).collect();
    let mut names: Vec<&str> = fresh.iter().map(|s| s.as_str()).collect();
    names.extend(source.vars().iter().map(|s| s.as_str()));
    let split = target.arity();
    let big = PolyRing::new(&names, source.field(), MonomialOrder::Block { split })?;

    let target_map: Vec<usize> = (0..target.arity()).collect();
    let source_map: Vec<usize> = (0..source.arity()).map(|i| split + i).collect();
    let graph: Vec<Polynomial> = (0..source.arity())
        .map(|i| {
            let x = Polynomial::var(&big, split + i);
            let img = images[i].rename_by_index(&big, &target_map);
            x.sub(&img)
        })
        .collect();

    let eng = Engine::for_ideal(&big);
    let ord = eng.ord.clone();
    let melts: Vec<MElt> = graph.iter().map(|g| MElt::from_poly(&ord, g)).collect();
    let gb = eng.reduced_gb(&melts)?;
    let in_target_block: Vec<bool> = (0..big.arity()).map(|i| i < split).collect();
    let mut out = Vec::new();
    let back: Vec<usize> = source_map.clone();
    let _ = back;
    for g in gb {
        let p = g.to_poly(&big);
        if p.avoids_vars(&in_target_block) {
            // rebuild in the source ring
            let mut map = vec![0usize; big.arity()];
            for (i, slot) in map.iter_mut().enumerate().skip(split) {
                *slot = i - split;
            }
            let q = p.rename_by_index(source, &map[..]);
            out.push(q);
        }
    }
    Ok(out)
}

/// Module-level seam used by the module toolkit: columns are dense vectors
/// of length `rank`.

pub fn module_reduced_gb(
    ring: &PolyRing,
    rank: usize,
    columns: &[Vec<Polynomial>],
) -> Result<Vec<Vec<Polynomial>>> {
    let eng = Engine::new(ring, ModOrder::plain(ring.order().clone()));
    let ord = eng.ord.clone();
    let melts: Vec<MElt> = columns.iter().map(|c| MElt::from_column(&ord, c)).collect();
    let gb = eng.reduced_gb(&melts)?;
    Ok(gb.into_iter().map(|g| g.to_column(ring, rank)).collect())
}

pub fn module_normal_form(
    ring: &PolyRing,
    rank: usize,
    gb_columns: &[Vec<Polynomial>],
    v: &[Polynomial],
) -> Result<Vec<Polynomial>> {
    let eng = Engine::new(ring, ModOrder::plain(ring.order().clone()));
    let ord = eng.ord.clone();
    let basis: Vec<MElt> = gb_columns.iter().map(|c| MElt::from_column(&ord, c)).collect();
    let nf = eng.normal_form(&MElt::from_column(&ord, v), &basis)?;
    Ok(nf.to_column(ring, rank))
}

pub fn module_member(
    ring: &PolyRing,
    rank: usize,
    gb_columns: &[Vec<Polynomial>],
    v: &[Polynomial],
) -> Result<bool> {
    Ok(module_normal_form(ring, rank, gb_columns, v)?
        .iter()
        .all(|p| p.is_zero()))
}

/// Syzygies of the given columns: generators of
/// `{ c : sum_i c_i * columns_i = 0 }`, one column per syzygy.
pub fn module_syzygies(
    ring: &PolyRing,
    rank: usize,
    columns: &[Vec<Polynomial>],
) -> Result<Vec<Vec<Polynomial>>> {
    if columns.is_empty() {
        return Ok(Vec::new());
    }
    let eng = Engine::new(ring, ModOrder::plain(ring.order().clone()));
    let ord = eng.ord.clone();
    let melts: Vec<MElt> = columns.iter().map(|c| MElt::from_column(&ord, c)).collect();
    let syz = eng.syzygies(&melts, rank)?;
    Ok(syz.into_iter().map(|s| s.to_column(ring, columns.len())).collect())
}

/// Cofactors of `v` with respect to `columns`, when `v` lies in their span.
pub fn module_lift(
    ring: &PolyRing,
    rank: usize,
    columns: &[Vec<Polynomial>],
    v: &[Polynomial],
) -> Result<Option<Vec<Polynomial>>> {
    let eng = Engine::new(ring, ModOrder::plain(ring.order().clone()));
    let ord = eng.ord.clone();
    let melts: Vec<MElt> = columns.iter().map(|c| MElt::from_column(&ord, c)).collect();
    eng.lift(&MElt::from_column(&ord, v), &melts, rank)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;
    use crate::scalar::Field;

    fn qring(vars: &[&str]) -> PolyRing {
        PolyRing::new(vars, Field::Rationals, MonomialOrder::Grevlex).unwrap()
    }

    #[test]
    fn single_generator_gb_is_monic() {
        let r = qring(&["x", "y"]);
        let f = parse_polynomial(&r, "2*x^2 - 4*y").unwrap();
        let gb = groebner_basis(&[f], &MonomialOrder::Grevlex, true).unwrap();
        assert_eq!(gb.generators().len(), 1);
        assert_eq!(
            gb.generators()[0],
            parse_polynomial(&r, "x^2 - 2*y").unwrap()
        );
    }

    #[test]
    fn nf_examples() {
        let r = qring(&["x", "y"]);
        let f = parse_polynomial(&r, "x^2 - y").unwrap();
        let gb = groebner_basis(&[f.clone()], &MonomialOrder::Grevlex, true).unwrap();
        assert_eq!(
            normal_form(&parse_polynomial(&r, "x^2").unwrap(), &gb).unwrap(),
            parse_polynomial(&r, "y").unwrap()
        );
        assert!(is_member(&f, &gb).unwrap());
    }

    #[test]
    fn eliminate_parametrization() {
        // eliminate t from (x - t*u, y - t*v) -> (x*v - y*u)
        let r = qring(&["t", "u", "v", "x", "y"]);
        let gens = vec![
            parse_polynomial(&r, "x - t*u").unwrap(),
            parse_polynomial(&r, "y - t*v").unwrap(),
        ];
        let out = eliminate(&r, &gens, &["t".to_string()]).unwrap();
        assert_eq!(out.len(), 1);
        let expect = parse_polynomial(&r, "x*v - y*u").unwrap();
        let got = out[0].monic();
        assert!(got == expect.monic() || got == expect.neg().monic());
        // check it vanishes under the parametrization
        let s = qring(&["t", "u", "v"]);
        let t = Polynomial::var(&s, 0);
        let u = Polynomial::var(&s, 1);
        let v = Polynomial::var(&s, 2);
        let images = vec![t.clone(), u.clone(), v.clone(), t.mul(&u), t.mul(&v)];
        assert!(out[0].substitute(&s, &images).unwrap().is_zero());
    }

    #[test]
    fn eliminate_unit_free_slice() {
        // (t - 1) ∩ k[x] = (0)
        let r = qring(&["t", "x"]);
        let gens = vec![parse_polynomial(&r, "t - 1").unwrap()];
        let out = eliminate(&r, &gens, &["t".to_string()]).unwrap();
        assert!(out.is_empty());
    }

    #[test]
    fn eliminate_nothing_is_identity() {
        let r = qring(&["x", "y"]);
        let gens = vec![parse_polynomial(&r, "x*y - 1").unwrap()];
        let out = eliminate(&r, &gens, &[]).unwrap();
        assert_eq!(out, gens);
    }

    #[test]
    fn kernel_of_diagonal_map() {
        // x -> t, y -> t has kernel (x - y)
        let src = qring(&["x", "y"]);
        let tgt = qring(&["t"]);
        let t = Polynomial::var(&tgt, 0);
        let ker = kernel_of_ring_map(&src, &tgt, &[t.clone(), t]).unwrap();
        assert_eq!(ker.len(), 1);
        let expect = parse_polynomial(&src, "x - y").unwrap();
        assert!(ker[0].monic() == expect || ker[0].monic() == expect.neg());
    }

    #[test]
    fn kernel_of_independent_images_is_zero() {
        let src = qring(&["x", "y"]);
        let tgt = qring(&["s", "t"]);
        let ker = kernel_of_ring_map(
            &src,
            &tgt,
            &[Polynomial::var(&tgt, 0), Polynomial::var(&tgt, 1)],
        )
        .unwrap();
        assert!(ker.is_empty());
    }

    #[test]
    fn veronese_cubic_kernel_matches_p_ex1() {
        // u,v,t,w -> x^3, x^2 y, x y^2, y^3: kernel is the twisted cubic cone ideal
        let src = qring(&["u", "v", "t", "w"]);
        let tgt = qring(&["x", "y"]);
        let x = Polynomial::var(&tgt, 0);
        let y = Polynomial::var(&tgt, 1);
        let images = vec![
            x.pow(3),
            x.pow(2).mul(&y),
            x.mul(&y.pow(2)),
            y.pow(3),
        ];
        let ker = kernel_of_ring_map(&src, &tgt, &images).unwrap();
        let kgb = groebner_basis(&ker, &MonomialOrder::Grevlex, true).unwrap();
        let p: Vec<Polynomial> = ["u*w - t*v", "u*t - v^2", "v*w - t^2"]
            .iter()
            .map(|s| parse_polynomial(&src, s).unwrap())
            .collect();
        let pgb = groebner_basis(&p, &MonomialOrder::Grevlex, true).unwrap();
        assert_eq!(kgb.generators(), pgb.generators());
    }

    #[test]
    fn module_syzygies_compose_to_zero() {
        // generators ordered as in the presentation whose syzygy matrix is
        // [-t w; v -t; -u v]
        let r = qring(&["u", "v", "t", "w"]);
        let gens: Vec<Vec<Polynomial>> = ["u*t - v^2", "u*w - t*v", "v*w - t^2"]
            .iter()
            .map(|s| vec![parse_polynomial(&r, s).unwrap()])
            .collect();
        let syz = module_syzygies(&r, 1, &gens).unwrap();
        for s in &syz {
            let mut acc = Polynomial::zero(&r);
            for (c, g) in s.iter().zip(&gens) {
                acc = acc.add(&c.mul(&g[0]));
            }
            assert!(acc.is_zero());
        }
        let phi_cols: Vec<Vec<Polynomial>> = vec![
            vec!["-t", "v", "-u"],
            vec!["w", "-t", "v"],
        ]
        .into_iter()
        .map(|c| c.into_iter().map(|s| parse_polynomial(&r, s).unwrap()).collect())
        .collect();
        let syz_gb = module_reduced_gb(&r, 3, &syz).unwrap();
        let phi_gb = module_reduced_gb(&r, 3, &phi_cols).unwrap();
        for c in &phi_cols {
            assert!(module_member(&r, 3, &syz_gb, c).unwrap());
        }
        for c in &syz {
            assert!(module_member(&r, 3, &phi_gb, c).unwrap());
        }
    }

    #[test]
    fn syzygies_of_identity_are_zero() {
        let r = qring(&["x"]);
        let one = Polynomial::one(&r);
        let zero = Polynomial::zero(&r);
        let cols = vec![
            vec![one.clone(), zero.clone()],
            vec![zero.clone(), one.clone()],
        ];
        let syz = module_syzygies(&r, 2, &cols).unwrap();
        assert!(syz.is_empty());
    }
}
