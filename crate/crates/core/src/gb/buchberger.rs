//! Buchberger's algorithm over free modules, with Gebauer-Möller pair
//! elimination and sugar-degree selection. Syzygies and lifts come from the
//! same engine through an elimination block of tag components.

use super::melt::{MElt, MKey, ModOrder};
use crate::error::{Error, Result};
use crate::limits;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::PolyRing;
use crate::scalar::Scalar;
use std::cmp::Ordering;

pub struct Engine<'a> {
    pub ring: &'a PolyRing,
    pub ord: ModOrder,
    /// Enables the coprimality (product) criterion; sound for ideals only.
    pub rank_one: bool,
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    comp: u32,
    lcm: Monomial,
    sugar: u64,
}

impl<'a> Engine<'a> {
    pub fn new(ring: &'a PolyRing, ord: ModOrder) -> Engine<'a> {
        Engine { ring, ord, rank_one: false }
    }

    pub fn for_ideal(ring: &'a PolyRing) -> Engine<'a> {
        Engine {
            ring,
            ord: ModOrder::plain(ring.order().clone()),
            rank_one: true,
        }
    }

    fn charge(&self, n: u64) -> Result<()> {
        if limits::charge(n) {
            Ok(())
        } else {
            Err(Error::StepLimitExceeded(limits::steps_used()))
        }
    }

    /// Full normal form: every term of the result is reducible by no basis
    /// leading term. Basis elements need not be monic.
    pub fn normal_form(&self, f: &MElt, basis: &[MElt]) -> Result<MElt> {
        let mut work = f.clone();
        let mut remainder: Vec<(MKey, Scalar)> = Vec::new();
        'outer: while let Some((key, coeff)) = work.leading().map(|(k, c)| (k.clone(), c.clone())) {
            for g in basis {
                if let Some((gk, gc)) = g.leading() {
                    if gk.comp == key.comp && gk.mono.divides(&key.mono) {
                        self.charge(g.len() as u64)?;
                        let qm = gk.mono.quotient_of(&key.mono);
                        let qc = coeff.div(gc)?;
                        work = work.sub(&self.ord, &g.mul_term(&qm, &qc));
                        continue 'outer;
                    }
                }
            }
            remainder.push((key, coeff));
            work.terms.remove(0);
        }
        Ok(MElt { terms: remainder })
    }

    /// Reduce only until the leading term is irreducible (cheaper; used
    /// inside the main loop).
    fn head_normal_form(&self, f: &MElt, basis: &[MElt]) -> Result<MElt> {
        let mut work = f.clone();
        'outer: while let Some((key, coeff)) = work.leading().map(|(k, c)| (k.clone(), c.clone())) {
            for g in basis {
                if let Some((gk, gc)) = g.leading() {
                    if gk.comp == key.comp && gk.mono.divides(&key.mono) {
                        self.charge(g.len() as u64)?;
                        let qm = gk.mono.quotient_of(&key.mono);
                        let qc = coeff.div(gc)?;
                        work = work.sub(&self.ord, &g.mul_term(&qm, &qc));
                        continue 'outer;
                    }
                }
            }
            break;
        }
        Ok(work)
    }

    fn make_pair(&self, basis: &[MElt], sugars: &[u64], i: usize, j: usize) -> Pair {
        let (ki, _) = basis[i].leading().unwrap();
        let (kj, _) = basis[j].leading().unwrap();
        debug_assert_eq!(ki.comp, kj.comp);
        let lcm = ki.mono.lcm(&kj.mono);
        let sugar = (sugars[i] + (lcm.degree() - ki.mono.degree()))
            .max(sugars[j] + (lcm.degree() - kj.mono.degree()));
        Pair { i, j, comp: ki.comp, lcm, sugar }
    }

    /// Gebauer-Möller update: install pairs for the new element `t` and
    /// discard old pairs made redundant by it.
    fn update_pairs(&self, basis: &[MElt], sugars: &[u64], pairs: &mut Vec<Pair>, t: usize) {
        let (kt, _) = basis[t].leading().unwrap();

        // B: drop (i,j) when lt(t) divides lcm(i,j) strictly inside both
        // lcm(i,t) and lcm(j,t)
        pairs.retain(|p| {
            if p.comp != kt.comp || !kt.mono.divides(&p.lcm) {
                return true;
            }
            let lit = basis[p.i].leading().unwrap().0.mono.lcm(&kt.mono);
            let ljt = basis[p.j].leading().unwrap().0.mono.lcm(&kt.mono);
            lit == p.lcm || ljt == p.lcm
        });

        let cand: Vec<Pair> = (0..t)
            .filter(|&i| {
                basis[i]
                    .leading()
                    .map(|(k, _)| k.comp == kt.comp)
                    .unwrap_or(false)
            })
            .map(|i| self.make_pair(basis, sugars, i, t))
            .collect();

        // M: keep only pairs whose lcm is minimal under divisibility
        let mut keep = vec![true; cand.len()];
        for a in 0..cand.len() {
            if !keep[a] {
                continue;
            }
            for b in 0..cand.len() {
                if a == b || !keep[b] {
                    continue;
                }
                if cand[b].lcm.divides(&cand[a].lcm) && cand[b].lcm != cand[a].lcm {
                    keep[a] = false;
                    break;
                }
            }
        }
        // F: one representative per lcm value
        for a in 0..cand.len() {
            if !keep[a] {
                continue;
            }
            for b in (a + 1)..cand.len() {
                if keep[b] && cand[a].lcm == cand[b].lcm {
                    keep[b] = false;
                }
            }
        }
        // product criterion, ideals only
        if self.rank_one {
            for (a, p) in cand.iter().enumerate() {
                if keep[a] {
                    let li = &basis[p.i].leading().unwrap().0.mono;
                    let lj = &basis[p.j].leading().unwrap().0.mono;
                    if li.gcd_is_one(lj) {
                        keep[a] = false;
                    }
                }
            }
        }
        pairs.extend(
            cand.into_iter()
                .zip(keep)
                .filter_map(|(p, k)| k.then_some(p)),
        );
    }

    fn pop_best_pair(&self, pairs: &mut Vec<Pair>) -> Option<Pair> {
        if pairs.is_empty() {
            return None;
        }
        let mut best = 0;
        for i in 1..pairs.len() {
            let a = &pairs[i];
            let b = &pairs[best];
            let ord = a
                .sugar
                .cmp(&b.sugar)
                .then_with(|| self.ord.order.compare(&a.lcm, &b.lcm))
                .then_with(|| a.comp.cmp(&b.comp))
                .then_with(|| a.i.cmp(&b.i))
                .then_with(|| a.j.cmp(&b.j));
            if ord == Ordering::Less {
                best = i;
            }
        }
        Some(pairs.swap_remove(best))
    }

    fn s_pair(&self, basis: &[MElt], p: &Pair) -> Result<MElt> {
        let (ki, ci) = basis[p.i].leading().unwrap();
        let (kj, cj) = basis[p.j].leading().unwrap();
        let mi = ki.mono.quotient_of(&p.lcm);
        let mj = kj.mono.quotient_of(&p.lcm);
        let one = Scalar::one(ci.field());
        let a = basis[p.i].mul_term(&mi, &one.div(ci)?);
        let b = basis[p.j].mul_term(&mj, &one.div(cj)?);
        Ok(a.sub(&self.ord, &b))
    }

    /// Compute a (non-reduced) Gröbner basis; elements come out monic.
    pub fn buchberger(&self, gens: &[MElt]) -> Result<Vec<MElt>> {
        let mut basis: Vec<MElt> = Vec::new();
        let mut sugars: Vec<u64> = Vec::new();
        let mut pairs: Vec<Pair> = Vec::new();
        for g in gens {
            if g.is_zero() {
                continue;
            }
            let g = g.monic();
            let sugar = g.terms.iter().map(|(k, _)| k.mono.degree()).max().unwrap();
            basis.push(g);
            sugars.push(sugar);
            self.update_pairs(&basis, &sugars, &mut pairs, basis.len() - 1);
        }
        while let Some(p) = self.pop_best_pair(&mut pairs) {
            let s = self.s_pair(&basis, &p)?;
            let h = self.head_normal_form(&s, &basis)?;
            if h.is_zero() {
                continue;
            }
            let h = h.monic();
            basis.push(h);
            sugars.push(p.sugar);
            self.update_pairs(&basis, &sugars, &mut pairs, basis.len() - 1);
        }
        Ok(basis)
    }

    /// The unique reduced Gröbner basis: minimal leading terms, fully
    /// inter-reduced tails, monic, sorted descending by leading term.
    pub fn reduce_basis(&self, basis: Vec<MElt>) -> Result<Vec<MElt>> {
        // minimality: drop elements whose lt is divisible by another's
        let mut kept: Vec<MElt> = Vec::new();
        let mut sorted = basis;
        sorted.sort_by(|a, b| {
            self.ord
                .compare(a.leading().unwrap().0, b.leading().unwrap().0)
        });
        for g in sorted {
            let (gk, _) = g.leading().unwrap();
            let redundant = kept.iter().any(|h| {
                let (hk, _) = h.leading().unwrap();
                hk.comp == gk.comp && hk.mono.divides(&gk.mono)
            });
            if !redundant {
                kept.push(g);
            }
        }
        // inter-reduce tails until stable
        loop {
            let mut changed = false;
            for i in 0..kept.len() {
                let others: Vec<MElt> = kept
                    .iter()
                    .enumerate()
                    .filter_map(|(j, h)| (j != i).then(|| h.clone()))
                    .collect();
                let r = self.normal_form(&kept[i], &others)?.monic();
                if r != kept[i] {
                    kept[i] = r;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        kept.sort_by(|a, b| {
            self.ord
                .compare(b.leading().unwrap().0, a.leading().unwrap().0)
        });
        Ok(kept)
    }

    pub fn reduced_gb(&self, gens: &[MElt]) -> Result<Vec<MElt>> {
        let gb = self.buchberger(gens)?;
        self.reduce_basis(gb)
    }

    /// Embed generators of a rank-`rank` submodule with unit tags, so that a
    /// Gröbner basis of the extension computes syzygies, lifts and kernels.
    fn tagged_engine_and_gens(
        &self,
        gens: &[MElt],
        rank: usize,
    ) -> (Engine<'a>, Vec<MElt>) {
        let big = ModOrder::eliminating(rank, self.ord.order.clone());
        let eng = Engine { ring: self.ring, ord: big.clone(), rank_one: false };
        let field = self.ring.field();
        let ext: Vec<MElt> = gens
            .iter()
            .enumerate()
            .map(|(i, g)| {
                let tag = MElt {
                    terms: vec![(
                        MKey {
                            comp: (rank + i) as u32,
                            mono: Monomial::one(self.ring.arity()),
                        },
                        Scalar::one(field),
                    )],
                };
                g.add(&big, &tag)
            })
            .collect();
        (eng, ext)
    }

    /// Generators of the syzygy module of `gens` (each of rank `rank`);
    /// the result is a reduced Gröbner basis of the syzygies, as elements of
    /// the free module of rank `gens.len()`.
    pub fn syzygies(&self, gens: &[MElt], rank: usize) -> Result<Vec<MElt>> {
        let (eng, ext) = self.tagged_engine_and_gens(gens, rank);
        let gb = eng.reduced_gb(&ext)?;
        Ok(gb
            .into_iter()
            .filter(|g| g.supported_at_or_above(rank as u32))
            .map(|g| g.shift_components_down(rank as u32))
            .collect())
    }

    /// Express `v` as a combination of `gens`, if possible. Returns the
    /// cofactor vector `q` with `v = sum q_i gens_i`.
    pub fn lift(&self, v: &MElt, gens: &[MElt], rank: usize) -> Result<Option<Vec<Polynomial>>> {
        let (eng, ext) = self.tagged_engine_and_gens(gens, rank);
        let gb = eng.buchberger(&ext)?;
        let nf = eng.normal_form(v, &gb)?;
        if !nf.supported_at_or_above(rank as u32) {
            return Ok(None);
        }
        let col = nf
            .shift_components_down(rank as u32)
            .to_column(self.ring, gens.len());
        Ok(Some(col.into_iter().map(|p| p.neg()).collect()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::MonomialOrder;
    use crate::parse::parse_polynomial;
    use crate::scalar::Field;

    fn melt(ring: &PolyRing, ord: &ModOrder, text: &str) -> MElt {
        MElt::from_poly(ord, &parse_polynomial(ring, text).unwrap())
    }

    #[test]
    fn lex_twisted_cubic() {
        // reduced lex GB of (x^2 - y, x^3 - z) is {x^2 - y, x*y - z, x*z - y^2, y^3 - z^2}
        let r = PolyRing::new(&["x", "y", "z"], Field::Rationals, MonomialOrder::Lex).unwrap();
        let eng = Engine::for_ideal(&r);
        let ord = eng.ord.clone();
        let gens = vec![melt(&r, &ord, "x^2 - y"), melt(&r, &ord, "x^3 - z")];
        let gb = eng.reduced_gb(&gens).unwrap();
        let got: Vec<Polynomial> = gb.iter().map(|g| g.to_poly(&r)).collect();
        let expect: Vec<Polynomial> = ["x^2 - y", "x*y - z", "x*z - y^2", "y^3 - z^2"]
            .iter()
            .map(|t| parse_polynomial(&r, t).unwrap())
            .collect();
        let mut got_sorted = got.clone();
        got_sorted.sort_by_key(|p| format!("{}", p));
        let mut exp_sorted = expect.clone();
        exp_sorted.sort_by_key(|p| format!("{}", p));
        assert_eq!(got_sorted, exp_sorted);
    }

    #[test]
    fn koszul_syzygy() {
        let r = PolyRing::new(&["u", "v"], Field::Rationals, MonomialOrder::Grevlex).unwrap();
        let eng = Engine::for_ideal(&r);
        let ord = eng.ord.clone();
        let gens = vec![melt(&r, &ord, "u"), melt(&r, &ord, "v")];
        let syz = eng.syzygies(&gens, 1).unwrap();
        assert_eq!(syz.len(), 1);
        let col = syz[0].to_column(&r, 2);
        // (-v, u) up to sign and scale
        let v = parse_polynomial(&r, "v").unwrap();
        let u = parse_polynomial(&r, "u").unwrap();
        let ok = (col[0] == v.neg() && col[1] == u) || (col[0] == v && col[1] == u.neg());
        assert!(ok, "unexpected syzygy {:?}", col);
    }

    #[test]
    fn lift_finds_cofactors() {
        let r = PolyRing::new(&["x", "y"], Field::Rationals, MonomialOrder::Grevlex).unwrap();
        let eng = Engine::for_ideal(&r);
        let ord = eng.ord.clone();
        let f = melt(&r, &ord, "x^2 - y");
        let g = melt(&r, &ord, "x*y - 1");
        let gens = vec![f.clone(), g.clone()];
        // v = x*(x^2 - y) + y*(x*y - 1)
        let v = melt(&r, &ord, "x^3 - x*y + x*y^2 - y");
        let q = eng.lift(&v, &gens, 1).unwrap().expect("must lift");
        let rebuilt = q[0]
            .mul(&f.to_poly(&r))
            .add(&q[1].mul(&g.to_poly(&r)));
        assert_eq!(rebuilt, v.to_poly(&r));
        // and something outside the ideal does not lift
        let one = melt(&r, &ord, "1");
        assert!(eng.lift(&one, &gens, 1).unwrap().is_none());
    }
}
