//! Minimal graded free resolutions: iterated syzygies followed by pruning
//! of scalar entries (splitting off trivial complexes).

use crate::error::{Error, Result};
use crate::gb;
use crate::matrix::PolyMatrix;
use crate::poly::Polynomial;
use crate::ring::PolyRing;

/// A graded complex `F_0 <- F_1 <- ... <- F_L` of free modules.
/// `maps[k]` is the matrix of `F_{k+1} -> F_k`; `twists[k]` the generator
/// degrees of `F_k`.
#[derive(Debug, Clone)]
pub struct FreeResolution {
    pub ring: PolyRing,
    pub twists: Vec<Vec<i64>>,
    pub maps: Vec<PolyMatrix>,
}

impl FreeResolution {
    /// Ranks of the free modules: the graded Betti numbers when minimal.
    pub fn betti(&self) -> Vec<usize> {
        self.twists.iter().map(|t| t.len()).collect()
    }

    /// Projective dimension: index of the last nonzero free module.
    pub fn length(&self) -> usize {
        self.twists.len() - 1
    }

    /// Consecutive composites must vanish.
    pub fn is_exact_complex(&self) -> bool {
        for k in 0..self.maps.len().saturating_sub(1) {
            match self.maps[k].mul(&self.maps[k + 1]) {
                Ok(m) if m.is_zero() => {}
                _ => return false,
            }
        }
        true
    }

    /// No map entry is a nonzero scalar.
    pub fn is_minimal(&self) -> bool {
        self.maps.iter().all(|m| find_scalar_entry(m).is_none())
    }
}

fn find_scalar_entry(m: &PolyMatrix) -> Option<(usize, usize)> {
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let e = m.entry(i, j);
            if !e.is_zero() && e.is_constant() {
                return Some((i, j));
            }
        }
    }
    None
}

/// Remove one unit pivot from `maps[k]`, adjusting the neighbours so the
/// complex keeps the same homology.
fn prune_pivot(
    ring: &PolyRing,
    maps: &mut [PolyMatrix],
    twists: &mut [Vec<i64>],
    k: usize,
    pivot: (usize, usize),
) {
    let (pi, pj) = pivot;
    let a = maps[k].entry(pi, pj).clone();
    debug_assert!(a.is_constant() && !a.is_zero());
    let ainv = Polynomial::constant(
        ring,
        a.leading_coeff().unwrap().inv().expect("unit pivot"),
    );

    // column operations on maps[k]; mirrored as row operations on maps[k+1]
    for l in 0..maps[k].cols() {
        if l == pj {
            continue;
        }
        let c = maps[k].entry(pi, l).mul(&ainv);
        if c.is_zero() {
            continue;
        }
        for r in 0..maps[k].rows() {
            let v = maps[k].entry(r, l).sub(&c.mul(maps[k].entry(r, pj)));
            maps[k].set(r, l, v);
        }
        if k + 1 < maps.len() {
            for q in 0..maps[k + 1].cols() {
                let v = maps[k + 1].entry(pj, q).add(&c.mul(maps[k + 1].entry(l, q)));
                maps[k + 1].set(pj, q, v);
            }
        }
    }
    // row operations on maps[k]; mirrored as column operations on maps[k-1]
    for m in 0..maps[k].rows() {
        if m == pi {
            continue;
        }
        let d = maps[k].entry(m, pj).mul(&ainv);
        if d.is_zero() {
            continue;
        }
        for q in 0..maps[k].cols() {
            let v = maps[k].entry(m, q).sub(&d.mul(maps[k].entry(pi, q)));
            maps[k].set(m, q, v);
        }
        if k > 0 {
            for r in 0..maps[k - 1].rows() {
                let v = maps[k - 1].entry(r, pi).add(&d.mul(maps[k - 1].entry(r, m)));
                maps[k - 1].set(r, pi, v);
            }
        }
    }

    // after clearing, the pivot row/column carry only the unit; the mirrored
    // column of maps[k-1] and row of maps[k+1] are zero by exactness
    if k > 0 {
        debug_assert!((0..maps[k - 1].rows()).all(|r| maps[k - 1].entry(r, pi).is_zero()));
        maps[k - 1] = maps[k - 1].without_row_col(None, Some(pi));
    }
    if k + 1 < maps.len() {
        debug_assert!((0..maps[k + 1].cols()).all(|q| maps[k + 1].entry(pj, q).is_zero()));
        maps[k + 1] = maps[k + 1].without_row_col(Some(pj), None);
    }
    maps[k] = maps[k].without_row_col(Some(pi), Some(pj));
    twists[k].remove(pi);
    twists[k + 1].remove(pj);
}

/// Prune every scalar entry in the complex.
fn prune_all(ring: &PolyRing, maps: &mut Vec<PolyMatrix>, twists: &mut Vec<Vec<i64>>) {
    loop {
        let mut found = None;
        for (k, m) in maps.iter().enumerate() {
            if let Some(p) = find_scalar_entry(m) {
                found = Some((k, p));
                break;
            }
        }
        match found {
            Some((k, p)) => prune_pivot(ring, maps, twists, k, p),
            None => break,
        }
    }
    // drop trailing zero modules
    while let Some(last) = maps.last() {
        if last.cols() == 0 {
            maps.pop();
            twists.pop();
        } else {
            break;
        }
    }
}

/// Minimal graded free resolution of the cokernel of the given relation
/// columns inside a free module with generator degrees `gen_twists`.
/// Rejects non-homogeneous input.
pub fn resolve(
    ring: &PolyRing,
    gen_twists: &[i64],
    relations: &[Vec<Polynomial>],
) -> Result<FreeResolution> {
    let rank = gen_twists.len();
    let mut twists: Vec<Vec<i64>> = vec![gen_twists.to_vec()];
    let mut maps: Vec<PolyMatrix> = Vec::new();

    let mut current: Vec<Vec<Polynomial>> = Vec::new();
    for col in relations {
        if col.len() != rank {
            return Err(Error::ShapeMismatch("relation column of wrong length".into()));
        }
        if col.iter().all(|p| p.is_zero()) {
            continue;
        }
        current.push(col.clone());
    }

    loop {
        if current.is_empty() {
            break;
        }
        let col_twists = column_twists(&twists[twists.len() - 1], &current)?;
        let m = PolyMatrix::from_columns(ring, twists[twists.len() - 1].len(), &current)?;
        maps.push(m);
        twists.push(col_twists);
        prune_all(ring, &mut maps, &mut twists);
        if maps.len() + 1 != twists.len() {
            // everything above the presentation got pruned away
            break;
        }
        if maps.len() > ring.arity() + 1 {
            return Err(Error::Unsupported(
                "resolution exceeds the Hilbert syzygy bound; input is likely not graded".into(),
            ));
        }
        let last = maps.last().unwrap();
        current = gb::module_syzygies(ring, last.rows(), &last.columns())?;
    }
    Ok(FreeResolution { ring: ring.clone(), twists, maps })
}

/// Degrees of homogeneous columns relative to the target twists.
fn column_twists(target: &[i64], cols: &[Vec<Polynomial>]) -> Result<Vec<i64>> {
    let mut out = Vec::with_capacity(cols.len());
    for col in cols {
        let mut deg: Option<i64> = None;
        for (i, p) in col.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            let d = p.homogeneous_degree().ok_or(Error::NonHomogeneous)? as i64 + target[i];
            match deg {
                None => deg = Some(d),
                Some(existing) if existing == d => {}
                _ => return Err(Error::NonHomogeneous),
            }
        }
        out.push(deg.ok_or(Error::NonHomogeneous)?);
    }
    Ok(out)
}

/// Depth of a module with the given minimal resolution, by
/// Auslander-Buchsbaum: `depth = dim R - pd`.
pub fn depth_from_resolution(res: &FreeResolution) -> usize {
    res.ring.arity() - res.length()
}

/// Scalar-entry pruning of a single presentation: returns the minimal
/// presentation (twists, relation matrix) of the same module.
pub fn minimal_presentation(
    ring: &PolyRing,
    gen_twists: &[i64],
    relations: &[Vec<Polynomial>],
) -> Result<(Vec<i64>, PolyMatrix)> {
    let rank = gen_twists.len();
    let mut cols: Vec<Vec<Polynomial>> = Vec::new();
    for col in relations {
        if col.len() != rank {
            return Err(Error::ShapeMismatch("relation column of wrong length".into()));
        }
        if !col.iter().all(|p| p.is_zero()) {
            cols.push(col.clone());
        }
    }
    let col_twists = column_twists(gen_twists, &cols)?;
    let mut maps = vec![PolyMatrix::from_columns(ring, rank, &cols)?];
    let mut twists = vec![gen_twists.to_vec(), col_twists];
    prune_all(ring, &mut maps, &mut twists);
    let pres = match maps.pop() {
        Some(m) => m,
        None => PolyMatrix::zero(ring, twists[0].len(), 0),
    };
    Ok((twists[0].clone(), pres))
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

    #[test]
    fn koszul_resolution_of_residue_field() {
        // R/m for m = (u,v,t,w): Betti numbers 1,4,6,4,1
        let r = qring(&["u", "v", "t", "w"]);
        let rels: Vec<Vec<Polynomial>> = (0..4)
            .map(|i| vec![Polynomial::var(&r, i)])
            .collect();
        let res = resolve(&r, &[0], &rels).unwrap();
        assert_eq!(res.betti(), vec![1, 4, 6, 4, 1]);
        assert!(res.is_exact_complex());
        assert!(res.is_minimal());
        assert_eq!(depth_from_resolution(&res), 0);
    }

    #[test]
    fn resolution_of_p_ex1_as_module() {
        // 0 -> R^2 -> R^3 -> p -> 0
        let r = qring(&["u", "v", "t", "w"]);
        let gens = ["u*t - v^2", "u*w - t*v", "v*w - t^2"];
        let cols: Vec<Vec<Polynomial>> = gens
            .iter()
            .map(|s| vec![parse_polynomial(&r, s).unwrap()])
            .collect();
        let syz = gb::module_syzygies(&r, 1, &cols).unwrap();
        let res = resolve(&r, &[2, 2, 2], &syz).unwrap();
        assert_eq!(res.betti(), vec![3, 2]);
        assert_eq!(res.length(), 1);
        assert!(res.is_minimal());
        // twists of the syzygy module: linear syzygies of quadrics live in degree 3
        assert_eq!(res.twists[1], vec![3, 3]);
    }

    #[test]
    fn free_module_resolves_to_length_zero() {
        let r = qring(&["u", "v"]);
        let res = resolve(&r, &[-2, -2, -2], &[]).unwrap();
        assert_eq!(res.betti(), vec![3]);
        assert_eq!(res.length(), 0);
        assert_eq!(depth_from_resolution(&res), 2);
    }

    #[test]
    fn redundant_generator_is_pruned() {
        // module on generators (e1, e2) with relation e1 - e2: free of rank 1
        let r = qring(&["x", "y"]);
        let one = Polynomial::one(&r);
        let rels = vec![vec![one.clone(), one.neg()]];
        let (tw, pres) = minimal_presentation(&r, &[1, 1], &rels).unwrap();
        assert_eq!(tw.len(), 1);
        assert_eq!(pres.cols(), 0);
    }

    #[test]
    fn non_homogeneous_rejected() {
        let r = qring(&["x", "y"]);
        let rels = vec![vec![parse_polynomial(&r, "x + 1").unwrap()]];
        assert!(matches!(
            resolve(&r, &[0], &rels),
            Err(Error::NonHomogeneous)
        ));
    }

    #[test]
    fn ci_quotient_resolution() {
        // R/(u,v) over k[u,v,t,w]: Koszul on two elements: 1,2,1; depth 2
        let r = qring(&["u", "v", "t", "w"]);
        let rels: Vec<Vec<Polynomial>> = vec![
            vec![Polynomial::var(&r, 0)],
            vec![Polynomial::var(&r, 1)],
        ];
        let res = resolve(&r, &[0], &rels).unwrap();
        assert_eq!(res.betti(), vec![1, 2, 1]);
        assert_eq!(depth_from_resolution(&res), 2);
    }
}
