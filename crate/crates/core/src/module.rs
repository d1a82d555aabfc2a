//! Finitely presented graded modules over `R` or a quotient `R/I`:
//! presentations and minimal generators, Hom/dual/bidual and reflexivity,
//! Koszul homology, depth, Ext against the ring, determinant ideals, and the
//! m-fullness witness search.
//!
//! A module over `S = R/I` is carried as an `R`-presentation; the quotient
//! ideal is adjoined to the relations on demand, so every Gröbner
//! computation happens over the polynomial ring.

use crate::error::{Error, Result};
use crate::gb;
use crate::hilbert;
use crate::ideal::Ideal;
use crate::matrix::{combinations, PolyMatrix};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::resolution::{self, FreeResolution};
use crate::ring::PolyRing;

/// An embedding of a module into a free module over its base ring: the
/// columns of `matrix` are the images of the module's generators in
/// `base^{amb_rank}` (represented over `R`).
#[derive(Debug, Clone, PartialEq)]
pub struct Embedding {
    pub amb_rank: usize,
    pub amb_twists: Vec<i64>,
    pub matrix: PolyMatrix,
}

/// A finitely presented graded module: the cokernel of `relations` inside a
/// free module with generator degrees `twists`, over `ring/base`.
#[derive(Debug, Clone)]
pub struct FPModule {
    ring: PolyRing,
    base: Ideal,
    twists: Vec<i64>,
    relations: PolyMatrix,
    embedding: Option<Embedding>,
}

/// A map of finitely presented modules, given on generators.
#[derive(Debug, Clone)]
pub struct ModuleMap {
    pub source: FPModule,
    pub target: FPModule,
    /// `target.rank() x source.rank()`
    pub matrix: PolyMatrix,
}

/// Depth with the zero module mapped to the infinite sentinel.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum Depth {
    Finite(usize),
    Infinite,
}

impl Depth {
    pub fn at_least(&self, bound: i64) -> bool {
        match self {
            Depth::Finite(d) => *d as i64 >= bound,
            Depth::Infinite => true,
        }
    }
}

impl std::fmt::Display for Depth {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Depth::Finite(d) => write!(f, "{}", d),
            Depth::Infinite => write!(f, "inf"),
        }
    }
}

impl FPModule {
    pub fn new(
        ring: &PolyRing,
        base: Ideal,
        twists: Vec<i64>,
        relations: PolyMatrix,
    ) -> Result<FPModule> {
        if relations.rows() != twists.len() {
            return Err(Error::ShapeMismatch(format!(
                "presentation has {} rows for {} generators",
                relations.rows(),
                twists.len()
            )));
        }
        if base.ring() != ring || relations.ring() != ring {
            return Err(Error::RingMismatch);
        }
        Ok(FPModule { ring: ring.clone(), base, twists, relations, embedding: None })
    }

    pub fn free(ring: &PolyRing, base: Ideal, twists: Vec<i64>) -> FPModule {
        let rank = twists.len();
        FPModule {
            ring: ring.clone(),
            base,
            twists,
            relations: PolyMatrix::zero(ring, rank, 0),
            embedding: None,
        }
    }

    pub fn zero(ring: &PolyRing, base: Ideal) -> FPModule {
        FPModule::free(ring, base, Vec::new())
    }

    pub fn with_embedding(mut self, emb: Embedding) -> FPModule {
        self.embedding = Some(emb);
        self
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn base(&self) -> &Ideal {
        &self.base
    }

    pub fn twists(&self) -> &[i64] {
        &self.twists
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    pub fn relations(&self) -> &PolyMatrix {
        &self.relations
    }

    pub fn embedding(&self) -> Option<&Embedding> {
        self.embedding.as_ref()
    }

    fn same_base(&self, other: &FPModule) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        if !self.base.equals(&other.base)? {
            return Err(Error::BaseMismatch);
        }
        Ok(())
    }

    /// Relation columns together with the base-ideal multiples of every
    /// generator; this is the full relation module over `R`.
    pub fn full_relation_columns(&self) -> Vec<Vec<Polynomial>> {
        let mut cols = self.relations.columns();
        cols.retain(|c| !c.iter().all(|p| p.is_zero()));
        for q in self.base.generators() {
            for i in 0..self.rank() {
                let mut col = vec![Polynomial::zero(&self.ring); self.rank()];
                col[i] = q.clone();
                cols.push(col);
            }
        }
        cols
    }

    /// Minimal presentation of the same module (scalar entries pruned).
    /// The embedding, when present, is transported along the pruning by
    /// re-lifting generators, so it is dropped here.
    pub fn minimalize(&self) -> Result<FPModule> {
        let cols = self.full_relation_columns();
        let (twists, pres) = resolution::minimal_presentation(&self.ring, &self.twists, &cols)?;
        FPModule::new(&self.ring, self.base.clone(), twists, pres)
    }

    /// ν(M): minimal number of generators.
    pub fn minimal_generators(&self) -> Result<usize> {
        Ok(self.minimalize()?.rank())
    }

    pub fn is_zero_module(&self) -> Result<bool> {
        Ok(self.minimal_generators()? == 0)
    }

    /// Minimal graded free resolution over the polynomial ring `R`
    /// (base-ideal multiples included among the relations).
    pub fn resolve_over_r(&self) -> Result<FreeResolution> {
        resolution::resolve(&self.ring, &self.twists, &self.full_relation_columns())
    }

    /// Depth over `R` by Auslander-Buchsbaum; the zero module reports the
    /// infinite sentinel.
    pub fn depth_via_ab(&self) -> Result<Depth> {
        if self.is_zero_module()? {
            return Ok(Depth::Infinite);
        }
        let res = self.resolve_over_r()?;
        Ok(Depth::Finite(resolution::depth_from_resolution(&res)))
    }

    /// Reduced Gröbner basis of the full relation module.
    fn relation_gb(&self) -> Result<Vec<Vec<Polynomial>>> {
        gb::module_reduced_gb(&self.ring, self.rank(), &self.full_relation_columns())
    }

    /// Hilbert function of the module at internal degree `d`.
    pub fn hilbert_function(&self, d: i64) -> Result<usize> {
        let gbcols = self.relation_gb()?;
        let lts = module_leading_terms(&self.ring, &gbcols);
        Ok(hilbert::module_quotient_hf(&lts, self.ring.arity(), &self.twists, d))
    }

    /// Graded dimension function of a finite-length module: the list of
    /// `(degree, dimension)` pairs over the support. Errors when the module
    /// is not finite length.
    pub fn finite_length_dimensions(&self) -> Result<Vec<(i64, usize)>> {
        let gbcols = self.relation_gb()?;
        let lts = module_leading_terms(&self.ring, &gbcols);
        let n = self.ring.arity();
        if self.rank() == 0 {
            return Ok(Vec::new());
        }
        // finite length over R means every (component, variable) pair is
        // killed by a pure power among the leading terms
        let mut power_bound = vec![vec![None::<u32>; n]; self.rank()];
        for (c, m) in &lts {
            let support: Vec<usize> = (0..n).filter(|&j| m.exponent(j) > 0).collect();
            if support.len() == 1 {
                let j = support[0];
                let e = m.exponent(j);
                let slot = &mut power_bound[*c as usize][j];
                *slot = Some(slot.map_or(e, |old: u32| old.min(e)));
            }
            if support.is_empty() {
                // unit leading term kills the whole component
                for j in 0..n {
                    power_bound[*c as usize][j] = Some(0);
                }
            }
        }
        for (i, per_var) in power_bound.iter().enumerate() {
            if per_var.iter().any(|b| b.is_none()) {
                return Err(Error::Unsupported(format!(
                    "module is not finite length (generator {} unbounded)",
                    i
                )));
            }
        }
        let mut out = Vec::new();
        let dmin = *self.twists.iter().min().unwrap();
        let dmax = self
            .twists
            .iter()
            .enumerate()
            .map(|(i, a)| {
                a + power_bound[i]
                    .iter()
                    .map(|b| b.unwrap().saturating_sub(1) as i64)
                    .sum::<i64>()
            })
            .max()
            .unwrap();
        for d in dmin..=dmax {
            let h = hilbert::module_quotient_hf(&lts, n, &self.twists, d);
            if h > 0 {
                out.push((d, h));
            }
        }
        Ok(out)
    }

    /// Total vector-space dimension of a finite-length module.
    pub fn total_dimension(&self) -> Result<usize> {
        Ok(self.finite_length_dimensions()?.iter().map(|(_, h)| h).sum())
    }
}

fn module_leading_terms(ring: &PolyRing, cols: &[Vec<Polynomial>]) -> Vec<(u32, Monomial)> {
    use crate::gb::melt::{MElt, ModOrder};
    let ord = ModOrder::plain(ring.order().clone());
    cols.iter()
        .filter_map(|c| {
            let m = MElt::from_column(&ord, c);
            m.leading().map(|(k, _)| (k.comp, k.mono.clone()))
        })
        .collect()
}

/// Present the subquotient `(U + W)/W` of a free module of rank `amb_rank`
/// over `ring/base`, on the images of the `u` columns. The attached
/// embedding is only meaningful when `w` consists of base-ideal multiples,
/// so it is attached exactly when `w` is empty.
pub fn subquotient(
    ring: &PolyRing,
    base: &Ideal,
    amb_twists: &[i64],
    u: &[Vec<Polynomial>],
    w: &[Vec<Polynomial>],
) -> Result<FPModule> {
    let amb_rank = amb_twists.len();
    let mut gens: Vec<Vec<Polynomial>> = u.to_vec();
    gens.retain(|c| !c.iter().all(|p| p.is_zero()));
    let mut twists = Vec::with_capacity(gens.len());
    for c in &gens {
        twists.push(column_degree(c, amb_twists)?);
    }
    // full W: provided columns plus base multiples of the ambient basis
    let mut w_full: Vec<Vec<Polynomial>> = w.to_vec();
    w_full.retain(|c| !c.iter().all(|p| p.is_zero()));
    for q in base.generators() {
        for i in 0..amb_rank {
            let mut col = vec![Polynomial::zero(ring); amb_rank];
            col[i] = q.clone();
            w_full.push(col);
        }
    }
    let mut all = gens.clone();
    all.extend(w_full.iter().cloned());
    let relations: Vec<Vec<Polynomial>> = if gens.is_empty() {
        Vec::new()
    } else {
        gb::module_syzygies(ring, amb_rank, &all)?
            .into_iter()
            .map(|s| s[..gens.len()].to_vec())
            .filter(|c| !c.iter().all(|p| p.is_zero()))
            .collect()
    };
    let pres = PolyMatrix::from_columns(ring, gens.len(), &relations)?;
    let mut md = FPModule::new(ring, base.clone(), twists, pres)?;
    if w.iter().all(|c| c.iter().all(|p| p.is_zero())) {
        md = md.with_embedding(Embedding {
            amb_rank,
            amb_twists: amb_twists.to_vec(),
            matrix: PolyMatrix::from_columns(ring, amb_rank, &gens)?,
        });
    }
    Ok(md)
}

fn column_degree(col: &[Polynomial], twists: &[i64]) -> Result<i64> {
    let mut deg = None;
    for (i, p) in col.iter().enumerate() {
        if p.is_zero() {
            continue;
        }
        let d = p.homogeneous_degree().ok_or(Error::NonHomogeneous)? as i64 + twists[i];
        match deg {
            None => deg = Some(d),
            Some(e) if e == d => {}
            _ => return Err(Error::NonHomogeneous),
        }
    }
    deg.ok_or(Error::NonHomogeneous)
}

/// The conormal module `p/p²` as a module over `R/p`, presented by the
/// syzygies of a minimal generating set reduced modulo `p`.
pub fn present_conormal(p: &Ideal) -> Result<FPModule> {
    if !p.is_homogeneous() {
        return Err(Error::NonHomogeneous);
    }
    if p.is_unit_ideal()? {
        return Err(Error::UnitIdeal);
    }
    let ring = p.ring().clone();
    let gens = p.minimal_generating_set()?;
    let twists: Vec<i64> = gens
        .iter()
        .map(|g| g.homogeneous_degree().unwrap() as i64)
        .collect();
    let cols: Vec<Vec<Polynomial>> = gens.iter().map(|g| vec![g.clone()]).collect();
    let syz = gb::module_syzygies(&ring, 1, &cols)?;
    // reduce each relation column modulo p and drop those that vanish
    let pgb = p.std_gb()?;
    let mut rels: Vec<Vec<Polynomial>> = Vec::new();
    for col in syz {
        let reduced: Vec<Polynomial> = col
            .iter()
            .map(|e| gb::normal_form(e, pgb.as_ref()))
            .collect::<Result<_>>()?;
        if !reduced.iter().all(|p| p.is_zero()) {
            rels.push(reduced);
        }
    }
    let pres = PolyMatrix::from_columns(&ring, gens.len(), &rels)?;
    FPModule::new(&ring, p.clone(), twists, pres)
}

/// `Hom_base(M, N)` presented on generators that are honest matrices
/// `source generators -> target`. The second component of the return value
/// holds those matrices (one per generator of the Hom module).
pub fn hom_module(m: &FPModule, n: &FPModule) -> Result<(FPModule, Vec<PolyMatrix>)> {
    m.same_base(n)?;
    let ring = m.ring().clone();
    let (rm, rn) = (m.rank(), n.rank());
    // flatten a matrix L (rn x rm) column-major: slot (a, i) -> i*rn + a
    let amb_rank = rn * rm;
    let mut amb_twists = vec![0i64; amb_rank];
    for i in 0..rm {
        for a in 0..rn {
            amb_twists[i * rn + a] = n.twists()[a] - m.twists()[i];
        }
    }
    if amb_rank == 0 {
        return Ok((FPModule::zero(&ring, m.base().clone()), Vec::new()));
    }

    // condition columns: for every honest relation w of M, L·w must fall in
    // the full relation module of N
    let m_rel_cols: Vec<Vec<Polynomial>> = m
        .relations
        .columns()
        .into_iter()
        .filter(|c| !c.iter().all(|p| p.is_zero()))
        .collect();
    let n_rel_full = n.full_relation_columns();

    let gens: Vec<Vec<Polynomial>> = if m_rel_cols.is_empty() {
        // every matrix is a homomorphism
        (0..amb_rank)
            .map(|s| {
                let mut col = vec![Polynomial::zero(&ring); amb_rank];
                col[s] = Polynomial::one(&ring);
                col
            })
            .collect()
    } else {
        // A: R^{amb_rank} -> R^{rn * #rels}; block row b (one per relation w):
        // x -> sum_i w_i * x-block_i
        let nrels = m_rel_cols.len();
        let big_rank = rn * nrels;
        let mut a_cols: Vec<Vec<Polynomial>> = Vec::with_capacity(amb_rank);
        for i in 0..rm {
            for a in 0..rn {
                let mut col = vec![Polynomial::zero(&ring); big_rank];
                for (b, w) in m_rel_cols.iter().enumerate() {
                    col[b * rn + a] = w[i].clone();
                }
                a_cols.push(col);
            }
        }
        // target submodule: per relation-slot copies of N's full relations
        let mut t_cols: Vec<Vec<Polynomial>> = Vec::new();
        for b in 0..nrels {
            for v in &n_rel_full {
                let mut col = vec![Polynomial::zero(&ring); big_rank];
                for a in 0..rn {
                    col[b * rn + a] = v[a].clone();
                }
                t_cols.push(col);
            }
        }
        let mut all = a_cols.clone();
        all.extend(t_cols);
        gb::module_syzygies(&ring, big_rank, &all)?
            .into_iter()
            .map(|s| s[..amb_rank].to_vec())
            .filter(|c| !c.iter().all(|p| p.is_zero()))
            .collect()
    };

    // quotient by maps into the relations of N: slot copies of N's full
    // relation columns
    let mut w_cols: Vec<Vec<Polynomial>> = Vec::new();
    for i in 0..rm {
        for v in &n_rel_full {
            let mut col = vec![Polynomial::zero(&ring); amb_rank];
            for a in 0..rn {
                col[i * rn + a] = v[a].clone();
            }
            w_cols.push(col);
        }
    }
    let homm = subquotient(&ring, m.base(), &amb_twists, &gens, &w_cols)?;
    let mats = gens
        .iter()
        .map(|g| {
            let mut mat = PolyMatrix::zero(&ring, rn, rm);
            for i in 0..rm {
                for a in 0..rn {
                    mat.set(a, i, g[i * rn + a].clone());
                }
            }
            mat
        })
        .collect();
    Ok((homm, mats))
}

/// The dual `Hom(M, base)`; generators carry their vectors in
/// `base^{rank M}` as an embedding.
pub fn dual(m: &FPModule) -> Result<FPModule> {
    let base_free = FPModule::free(&m.ring, m.base.clone(), vec![0]);
    let (d, mats) = hom_module(m, &base_free)?;
    // attach the embedding into base^{rm} with the dual twists
    let cols: Vec<Vec<Polynomial>> = mats.iter().map(|mat| mat.row(0)).collect();
    let amb_twists: Vec<i64> = m.twists().iter().map(|a| -a).collect();
    let matrix = PolyMatrix::from_columns(&m.ring, m.rank(), &cols)?;
    Ok(d.with_embedding(Embedding { amb_rank: m.rank(), amb_twists, matrix }))
}

/// Result of comparing a module with its bidual.
#[derive(Debug, Clone)]
pub struct BidualReport {
    pub bidual: FPModule,
    pub canonical_map: ModuleMap,
    pub is_injective: bool,
    pub is_surjective: bool,
    pub is_reflexive: bool,
    pub defect: FPModule,
}

/// Compute `M**`, the evaluation map `M -> M**`, reflexivity, and the
/// cokernel of the evaluation map. The caller asserts that the base is a
/// domain and `M` is torsionfree when interpreting reflexivity as in the
/// double-dual sense; the computation itself is unconditional.
pub fn bidual_and_compare(m: &FPModule) -> Result<BidualReport> {
    let ring = m.ring().clone();
    let d = dual(m)?;
    let dd = dual(&d)?;
    let v = &d.embedding().expect("dual carries its embedding").matrix; // rm x s
    let w = &dd.embedding().expect("dual carries its embedding").matrix; // s x q
    let s = d.rank();
    let q = dd.rank();
    let rm = m.rank();

    // evaluation of generator i of M: the i-th row of V, as an element of
    // base^s; lift through the generators of DD (plus base multiples)
    let mut lift_cols: Vec<Vec<Polynomial>> = w.columns();
    let mut base_cols: Vec<Vec<Polynomial>> = Vec::new();
    for g in m.base.generators() {
        for a in 0..s {
            let mut col = vec![Polynomial::zero(&ring); s];
            col[a] = g.clone();
            base_cols.push(col);
        }
    }
    lift_cols.extend(base_cols.iter().cloned());

    let mut ev = PolyMatrix::zero(&ring, q, rm);
    for i in 0..rm {
        let target: Vec<Polynomial> = (0..s).map(|k| v.entry(i, k).clone()).collect();
        let lift = gb::module_lift(&ring, s, &lift_cols, &target)?.ok_or_else(|| {
            Error::Unsupported("evaluation image failed to lift into the bidual".into())
        })?;
        for l in 0..q {
            ev.set(l, i, lift[l].clone());
        }
    }

    // injectivity: kernel of M -> base^s vanishes in M
    let vt = v.transpose(); // s x rm, columns indexed by M generators
    let mut ker_all: Vec<Vec<Polynomial>> = vt.columns();
    ker_all.extend(base_cols.iter().cloned());
    let presyz = gb::module_syzygies(&ring, s, &ker_all)?;
    let m_rel_gb = gb::module_reduced_gb(&ring, rm, &m.full_relation_columns())?;
    let mut injective = true;
    for sz in &presyz {
        let cand: Vec<Polynomial> = sz[..rm].to_vec();
        if cand.iter().all(|p| p.is_zero()) {
            continue;
        }
        if !gb::module_member(&ring, rm, &m_rel_gb, &cand)? {
            injective = false;
            break;
        }
    }

    // surjectivity: every generator of DD lies in the image of ev inside
    // base^s
    let mut image_cols: Vec<Vec<Polynomial>> = vt.columns();
    image_cols.extend(base_cols.iter().cloned());
    let image_gb = gb::module_reduced_gb(&ring, s, &image_cols)?;
    let mut surjective = true;
    for l in 0..q {
        let col = w.column(l);
        if !gb::module_member(&ring, s, &image_gb, &col)? {
            surjective = false;
            break;
        }
    }

    // defect: DD / image(ev), inside base^s with the dual slot twists
    let dd_amb_twists: Vec<i64> = d.twists().iter().map(|a| -a).collect();
    let defect = subquotient(&ring, &m.base, &dd_amb_twists, &w.columns(), &vt.columns())?;

    let canonical_map = ModuleMap { source: m.clone(), target: dd.clone(), matrix: ev };
    Ok(BidualReport {
        bidual: dd,
        canonical_map,
        is_injective: injective,
        is_surjective: surjective,
        is_reflexive: injective && surjective,
        defect,
    })
}

/// Koszul complex differential `d_j: K_j -> K_{j-1}` on the generator
/// sequence `f`.
fn koszul_differential(ring: &PolyRing, f: &[Polynomial], j: usize) -> PolyMatrix {
    let n = f.len();
    let rows = combinations(n, j - 1);
    let cols = combinations(n, j);
    let row_index = |s: &[usize]| rows.iter().position(|r| r == s).unwrap();
    let mut m = PolyMatrix::zero(ring, rows.len(), cols.len());
    for (cj, subset) in cols.iter().enumerate() {
        for (pos, &elem) in subset.iter().enumerate() {
            let mut rest = subset.clone();
            rest.remove(pos);
            let ri = row_index(&rest);
            let sign = if pos % 2 == 0 { 1 } else { -1 };
            let entry = if sign == 1 { f[elem].clone() } else { f[elem].neg() };
            m.set(ri, cj, entry);
        }
    }
    m
}

/// The `i`-th Koszul homology of the stored generator sequence of `I`,
/// as an `R`-module.
pub fn koszul_homology(ideal: &Ideal, i: usize) -> Result<FPModule> {
    let ring = ideal.ring().clone();
    let f = ideal.generators().to_vec();
    let n = f.len();
    if i > n {
        return Err(Error::IndexOutOfRange(i as i64, 0, n as i64));
    }
    let degs: Vec<i64> = f
        .iter()
        .map(|g| {
            g.homogeneous_degree()
                .map(|d| d as i64)
                .ok_or(Error::NonHomogeneous)
        })
        .collect::<Result<_>>()?;
    let basis_i = combinations(n, i);
    let amb_twists: Vec<i64> = basis_i
        .iter()
        .map(|s| s.iter().map(|&k| degs[k]).sum())
        .collect();
    let empty = Ideal::zero(&ring);
    // kernel of d_i (everything for i = 0), image of d_{i+1}
    let u: Vec<Vec<Polynomial>> = if i == 0 {
        vec![vec![Polynomial::one(&ring)]]
    } else {
        let di = koszul_differential(&ring, &f, i);
        gb::module_syzygies(&ring, di.rows(), &di.columns())?
    };
    let w: Vec<Vec<Polynomial>> = if i == n {
        Vec::new()
    } else {
        koszul_differential(&ring, &f, i + 1).columns()
    };
    subquotient(&ring, &empty, &amb_twists, &u, &w)
}

/// `Ext^i_R(M, R)`: homology of the dualized minimal free resolution.
pub fn ext_against_ring(m: &FPModule, i: usize) -> Result<FPModule> {
    let ring = m.ring().clone();
    let res = m.resolve_over_r()?;
    let ell = res.length();
    let empty = Ideal::zero(&ring);
    if i > ell {
        return Ok(FPModule::zero(&ring, empty));
    }
    let dual_twists: Vec<i64> = res.twists[i].iter().map(|a| -a).collect();
    let rank_i = res.twists[i].len();
    // kernel of maps[i]^T (or everything at the end of the complex)
    let u: Vec<Vec<Polynomial>> = if i == ell {
        (0..rank_i)
            .map(|s| {
                let mut col = vec![Polynomial::zero(&ring); rank_i];
                col[s] = Polynomial::one(&ring);
                col
            })
            .collect()
    } else {
        let t = res.maps[i].transpose();
        gb::module_syzygies(&ring, t.rows(), &t.columns())?
    };
    let w: Vec<Vec<Polynomial>> = if i == 0 {
        Vec::new()
    } else {
        res.maps[i - 1].transpose().columns()
    };
    subquotient(&ring, &empty, &dual_twists, &u, &w)
}

/// Ideal of maximal minors of a module embedding: the `r x r` minors of the
/// embedding matrix, as an ideal of the base ring (the base ideal is
/// adjoined so equality tests happen modulo it).
pub fn determinant_ideal(m: &FPModule) -> Result<Ideal> {
    let emb = m.embedding().ok_or(Error::MissingEmbedding)?;
    let r = emb.amb_rank;
    if emb.matrix.cols() < r {
        return Err(Error::RankMismatch);
    }
    let mut gens = emb.matrix.minors(r);
    gens.extend(m.base.generators().iter().cloned());
    Ok(Ideal::new(&m.ring, gens))
}

/// Search the candidate linear forms for an m-fullness witness:
/// an `x` with `(mM :_F x) = M` inside the ambient free module.
/// Returns the first witness, or `None` (inconclusive).
pub fn m_full_test(m: &FPModule, candidates: &[Polynomial]) -> Result<Option<Polynomial>> {
    let emb = m.embedding().ok_or(Error::MissingEmbedding)?;
    let ring = m.ring().clone();
    let r = emb.amb_rank;
    let mut base_cols: Vec<Vec<Polynomial>> = Vec::new();
    for g in m.base.generators() {
        for a in 0..r {
            let mut col = vec![Polynomial::zero(&ring); r];
            col[a] = g.clone();
            base_cols.push(col);
        }
    }
    // mM: variable multiples of the embedded generators
    let mut mm_cols: Vec<Vec<Polynomial>> = Vec::new();
    for j in 0..emb.matrix.cols() {
        let col = emb.matrix.column(j);
        for v in 0..ring.arity() {
            let x = Polynomial::var(&ring, v);
            mm_cols.push(col.iter().map(|p| p.mul(&x)).collect());
        }
    }
    let mut module_cols: Vec<Vec<Polynomial>> = emb.matrix.columns();
    module_cols.extend(base_cols.iter().cloned());
    let module_gb = gb::module_reduced_gb(&ring, r, &module_cols)?;

    'next: for x in candidates {
        if x.is_zero() {
            continue;
        }
        // colon: first r coordinates of syzygies of [x*e_a | mM | base]
        let mut all: Vec<Vec<Polynomial>> = (0..r)
            .map(|a| {
                let mut col = vec![Polynomial::zero(&ring); r];
                col[a] = x.clone();
                col
            })
            .collect();
        all.extend(mm_cols.iter().cloned());
        all.extend(base_cols.iter().cloned());
        let syz = gb::module_syzygies(&ring, r, &all)?;
        for s in &syz {
            let w: Vec<Polynomial> = s[..r]
                .iter()
                .map(|c| c.mul(&Polynomial::one(&ring)))
                .collect();
            if w.iter().all(|p| p.is_zero()) {
                continue;
            }
            // w satisfies x*w ∈ mM; witness requires w ∈ M
            if !gb::module_member(&ring, r, &module_gb, &w)? {
                continue 'next;
            }
        }
        return Ok(Some(x.clone()));
    }
    Ok(None)
}

/// Deterministic pseudo-random linear forms for the witness search.
pub fn seeded_linear_forms(ring: &PolyRing, seed: u64, count: usize) -> Vec<Polynomial> {
    let mut state = seed.wrapping_add(0x9e3779b97f4a7c15);
    let mut next = move || {
        state = state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    };
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let mut f = Polynomial::zero(ring);
        for i in 0..ring.arity() {
            let c = (next() % 7) as i64 - 3;
            if c != 0 {
                f = f.add(&Polynomial::var(ring, i).mul(&Polynomial::from_int(ring, c)));
            }
        }
        if !f.is_zero() {
            out.push(f);
        }
    }
    out
}

impl ModuleMap {
    /// The matrix carries every source relation into the full relation
    /// module of the target.
    pub fn is_well_defined(&self) -> Result<bool> {
        let ring = self.source.ring().clone();
        let t_gb = gb::module_reduced_gb(
            &ring,
            self.target.rank(),
            &self.target.full_relation_columns(),
        )?;
        for col in self.source.full_relation_columns() {
            let image: Vec<Polynomial> = (0..self.target.rank())
                .map(|a| {
                    let mut acc = Polynomial::zero(&ring);
                    for (i, item) in col.iter().enumerate() {
                        acc = acc.add(&self.matrix.entry(a, i).mul(item));
                    }
                    acc
                })
                .collect();
            if !gb::module_member(&ring, self.target.rank(), &t_gb, &image)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::MonomialOrder;
    use crate::parse::parse_polynomial;
    use crate::scalar::Field;

    fn qring(vars: &[&str]) -> PolyRing {
        PolyRing::new(vars, Field::Rationals, MonomialOrder::Grevlex).unwrap()
    }

    fn ex1() -> (PolyRing, Ideal) {
        let r = qring(&["u", "v", "t", "w"]);
        let p = Ideal::parse(&r, &["u*t - v^2", "u*w - t*v", "v*w - t^2"]).unwrap();
        (r, p)
    }

    #[test]
    fn conormal_of_ex1_has_three_generators() {
        let (_r, p) = ex1();
        let e = present_conormal(&p).unwrap();
        assert_eq!(e.rank(), 3);
        assert_eq!(e.minimal_generators().unwrap(), 3);
        assert_eq!(e.twists(), &[2, 2, 2]);
        // relation matrix is phi-bar: 2 columns of linear forms
        assert_eq!(e.relations().cols(), 2);
    }

    #[test]
    fn conormal_of_complete_intersection_is_free() {
        let r = qring(&["u", "v", "t", "w"]);
        let p = Ideal::parse(&r, &["u", "v"]).unwrap();
        let e = present_conormal(&p).unwrap();
        assert_eq!(e.rank(), 2);
        assert_eq!(e.relations().cols(), 0);
    }

    #[test]
    fn conormal_of_maximal_ideal_in_two_vars() {
        let r = qring(&["u", "v"]);
        let m = Ideal::irrelevant(&r);
        let e = present_conormal(&m).unwrap();
        assert_eq!(e.minimal_generators().unwrap(), 2);
    }

    #[test]
    fn hom_of_free_modules_is_free_of_product_rank() {
        let r = qring(&["x", "y"]);
        let base = Ideal::zero(&r);
        let a = FPModule::free(&r, base.clone(), vec![0, 0]);
        let b = FPModule::free(&r, base, vec![0, 0, 0]);
        let (h, _) = hom_module(&a, &b).unwrap();
        assert_eq!(h.minimal_generators().unwrap(), 6);
    }

    #[test]
    fn hom_into_zero_is_zero() {
        let r = qring(&["x", "y"]);
        let base = Ideal::zero(&r);
        let a = FPModule::free(&r, base.clone(), vec![0, 0]);
        let z = FPModule::zero(&r, base);
        let (h, _) = hom_module(&a, &z).unwrap();
        assert!(h.is_zero_module().unwrap());
    }

    #[test]
    fn free_module_is_reflexive() {
        let r = qring(&["x", "y"]);
        let base = Ideal::zero(&r);
        let a = FPModule::free(&r, base, vec![1, 2]);
        let rep = bidual_and_compare(&a).unwrap();
        assert!(rep.is_reflexive);
        assert!(rep.defect.is_zero_module().unwrap());
        assert!(rep.canonical_map.is_well_defined().unwrap());
    }

    #[test]
    fn koszul_h0_is_quotient_ring() {
        let r = qring(&["u", "v"]);
        let p = Ideal::parse(&r, &["u", "v"]).unwrap();
        let h0 = koszul_homology(&p, 0).unwrap();
        // R/(u,v) has Hilbert function 1, 0, 0, ...
        assert_eq!(h0.hilbert_function(0).unwrap(), 1);
        assert_eq!(h0.hilbert_function(1).unwrap(), 0);
    }

    #[test]
    fn koszul_top_homology_of_regular_sequence_vanishes() {
        let r = qring(&["u", "v", "t", "w"]);
        let p = Ideal::parse(&r, &["u", "v"]).unwrap();
        let h2 = koszul_homology(&p, 2).unwrap();
        assert!(h2.is_zero_module().unwrap());
        let h1 = koszul_homology(&p, 1).unwrap();
        assert!(h1.is_zero_module().unwrap());
    }

    #[test]
    fn depth_examples() {
        let (r, p) = ex1();
        // R/p has depth 2 (Hilbert-Burch: pd = 2, dim R = 4)
        let s_mod = FPModule::new(
            &r,
            Ideal::zero(&r),
            vec![0],
            PolyMatrix::from_columns(&r, 1, &p.generators().iter().map(|g| vec![g.clone()]).collect::<Vec<_>>()).unwrap(),
        )
        .unwrap();
        assert_eq!(s_mod.depth_via_ab().unwrap(), Depth::Finite(2));
        // R/m has depth 0
        let m = Ideal::irrelevant(&r);
        let m_mod = FPModule::new(
            &r,
            Ideal::zero(&r),
            vec![0],
            PolyMatrix::from_columns(&r, 1, &m.generators().iter().map(|g| vec![g.clone()]).collect::<Vec<_>>()).unwrap(),
        )
        .unwrap();
        assert_eq!(m_mod.depth_via_ab().unwrap(), Depth::Finite(0));
        // free module has depth dim R
        let f = FPModule::free(&r, Ideal::zero(&r), vec![0, 1]);
        assert_eq!(f.depth_via_ab().unwrap(), Depth::Finite(4));
        // zero module reports the sentinel
        let z = FPModule::zero(&r, Ideal::zero(&r));
        assert_eq!(z.depth_via_ab().unwrap(), Depth::Infinite);
    }

    #[test]
    fn ext_koszul_self_duality() {
        let r = qring(&["u", "v", "t", "w"]);
        let m = Ideal::irrelevant(&r);
        let m_mod = FPModule::new(
            &r,
            Ideal::zero(&r),
            vec![0],
            PolyMatrix::from_columns(&r, 1, &m.generators().iter().map(|g| vec![g.clone()]).collect::<Vec<_>>()).unwrap(),
        )
        .unwrap();
        let e4 = ext_against_ring(&m_mod, 4).unwrap();
        assert_eq!(e4.total_dimension().unwrap(), 1);
        // Ext^i(free, R) = 0 for i >= 1
        let f = FPModule::free(&r, Ideal::zero(&r), vec![0]);
        assert!(ext_against_ring(&f, 1).unwrap().is_zero_module().unwrap());
        // Ext^i vanishes below the codimension
        assert!(ext_against_ring(&m_mod, 2).unwrap().is_zero_module().unwrap());
    }

    #[test]
    fn determinant_of_identity_embedding_is_unit() {
        let r = qring(&["x", "y"]);
        let base = Ideal::zero(&r);
        let free = FPModule::free(&r, base.clone(), vec![0, 0]).with_embedding(Embedding {
            amb_rank: 2,
            amb_twists: vec![0, 0],
            matrix: PolyMatrix::identity(&r, 2),
        });
        let d = determinant_ideal(&free).unwrap();
        assert!(d.is_unit_ideal().unwrap());
        let zero = FPModule::free(&r, base, vec![0, 0]).with_embedding(Embedding {
            amb_rank: 2,
            amb_twists: vec![0, 0],
            matrix: PolyMatrix::zero(&r, 2, 2),
        });
        assert!(determinant_ideal(&zero).unwrap().is_zero_ideal());
    }

    #[test]
    fn m_full_free_module_witness() {
        let r = qring(&["x", "y"]);
        let base = Ideal::zero(&r);
        let free = FPModule::free(&r, base, vec![0, 0]).with_embedding(Embedding {
            amb_rank: 2,
            amb_twists: vec![0, 0],
            matrix: PolyMatrix::identity(&r, 2),
        });
        let x = Polynomial::var(&r, 0);
        let w = m_full_test(&free, &[x.clone()]).unwrap();
        assert_eq!(w, Some(x));
    }

    #[test]
    fn missing_embedding_is_reported() {
        let r = qring(&["x", "y"]);
        let m = FPModule::free(&r, Ideal::zero(&r), vec![0]);
        assert!(matches!(determinant_ideal(&m), Err(Error::MissingEmbedding)));
        assert!(matches!(m_full_test(&m, &[]), Err(Error::MissingEmbedding)));
    }
}
