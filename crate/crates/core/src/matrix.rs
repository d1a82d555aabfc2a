//! Dense matrices of polynomials: presentation matrices, module maps,
//! Koszul differentials, and minor extraction.

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::ring::PolyRing;
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    ring: PolyRing,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>, // row-major
}

impl PolyMatrix {
    pub fn zero(ring: &PolyRing, rows: usize, cols: usize) -> PolyMatrix {
        PolyMatrix {
            ring: ring.clone(),
            rows,
            cols,
            entries: vec![Polynomial::zero(ring); rows * cols],
        }
    }

    pub fn identity(ring: &PolyRing, n: usize) -> PolyMatrix {
        let mut m = PolyMatrix::zero(ring, n, n);
        for i in 0..n {
            m.set(i, i, Polynomial::one(ring));
        }
        m
    }

    pub fn from_rows(ring: &PolyRing, rows: Vec<Vec<Polynomial>>) -> Result<PolyMatrix> {
        let nrows = rows.len();
        let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
        let mut entries = Vec::with_capacity(nrows * ncols);
        for r in &rows {
            if r.len() != ncols {
                return Err(Error::ShapeMismatch("ragged rows".into()));
            }
            for e in r {
                if e.ring() != ring {
                    return Err(Error::RingMismatch);
                }
                entries.push(e.clone());
            }
        }
        Ok(PolyMatrix { ring: ring.clone(), rows: nrows, cols: ncols, entries })
    }

    pub fn from_columns(ring: &PolyRing, rank: usize, cols: &[Vec<Polynomial>]) -> Result<PolyMatrix> {
        let mut m = PolyMatrix::zero(ring, rank, cols.len());
        for (j, c) in cols.iter().enumerate() {
            if c.len() != rank {
                return Err(Error::ShapeMismatch("column of wrong length".into()));
            }
            for (i, e) in c.iter().enumerate() {
                if e.ring() != ring {
                    return Err(Error::RingMismatch);
                }
                m.set(i, j, e.clone());
            }
        }
        Ok(m)
    }

    pub fn parse(ring: &PolyRing, rows: &[&[&str]]) -> Result<PolyMatrix> {
        let mut out = Vec::new();
        for r in rows {
            let mut row = Vec::new();
            for s in *r {
                row.push(crate::parse::parse_polynomial(ring, s)?);
            }
            out.push(row);
        }
        PolyMatrix::from_rows(ring, out)
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial) {
        self.entries[i * self.cols + j] = p;
    }

    pub fn column(&self, j: usize) -> Vec<Polynomial> {
        (0..self.rows).map(|i| self.entry(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Polynomial>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn row(&self, i: usize) -> Vec<Polynomial> {
        (0..self.cols).map(|j| self.entry(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut m = PolyMatrix::zero(&self.ring, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(j, i, self.entry(i, j).clone());
            }
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != other.rows || self.ring != other.ring {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut m = PolyMatrix::zero(&self.ring, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Polynomial::zero(&self.ring);
                for k in 0..self.cols {
                    acc = acc.add(&self.entry(i, k).mul(other.entry(k, j)));
                }
                m.set(i, j, acc);
            }
        }
        Ok(m)
    }

    /// Delete one row and one column.
    pub fn without_row_col(&self, row: Option<usize>, col: Option<usize>) -> PolyMatrix {
        let mut rows = Vec::new();
        for i in 0..self.rows {
            if Some(i) == row {
                continue;
            }
            let mut r = Vec::new();
            for j in 0..self.cols {
                if Some(j) == col {
                    continue;
                }
                r.push(self.entry(i, j).clone());
            }
            rows.push(r);
        }
        PolyMatrix::from_rows(&self.ring, rows).unwrap()
    }

    /// Determinant by cofactor expansion along the first row.
    pub fn determinant(&self) -> Result<Polynomial> {
        if self.rows != self.cols {
            return Err(Error::ShapeMismatch("determinant of a non-square matrix".into()));
        }
        Ok(self.det_inner())
    }

    fn det_inner(&self) -> Polynomial {
        match self.rows {
            0 => Polynomial::one(&self.ring),
            1 => self.entry(0, 0).clone(),
            2 => self
                .entry(0, 0)
                .mul(self.entry(1, 1))
                .sub(&self.entry(0, 1).mul(self.entry(1, 0))),
            _ => {
                let mut acc = Polynomial::zero(&self.ring);
                for j in 0..self.cols {
                    let e = self.entry(0, j);
                    if e.is_zero() {
                        continue;
                    }
                    let sub = self.without_row_col(Some(0), Some(j)).det_inner();
                    let term = e.mul(&sub);
                    acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
                }
                acc
            }
        }
    }

    /// All `t x t` minors (zero minors skipped).
    pub fn minors(&self, t: usize) -> Vec<Polynomial> {
        if t == 0 || t > self.rows || t > self.cols {
            return Vec::new();
        }
        let row_sets = combinations(self.rows, t);
        let col_sets = combinations(self.cols, t);
        let mut out = Vec::new();
        for rs in &row_sets {
            for cs in &col_sets {
                let mut sub_rows = Vec::with_capacity(t);
                for &i in rs {
                    let mut r = Vec::with_capacity(t);
                    for &j in cs {
                        r.push(self.entry(i, j).clone());
                    }
                    sub_rows.push(r);
                }
                let sub = PolyMatrix::from_rows(&self.ring, sub_rows).unwrap();
                let d = sub.det_inner();
                if !d.is_zero() {
                    out.push(d);
                }
            }
        }
        out
    }

    /// Map every entry into another ring by variable name.
    pub fn into_ring(&self, target: &PolyRing) -> Result<PolyMatrix> {
        let mut m = PolyMatrix::zero(target, self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.entry(i, j).clone().into_ring(target)?);
            }
        }
        Ok(m)
    }

    /// Horizontal concatenation.
    pub fn hcat(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.rows != other.rows || self.ring != other.ring {
            return Err(Error::ShapeMismatch("hcat with mismatched rows".into()));
        }
        let mut m = PolyMatrix::zero(&self.ring, self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.entry(i, j).clone());
            }
            for j in 0..other.cols {
                m.set(i, self.cols + j, other.entry(i, j).clone());
            }
        }
        Ok(m)
    }

    /// Kronecker product: (A ⊗ B)[(i·p + k), (j·q + l)] = A[i][j] * B[k][l].
    pub fn kron(&self, other: &PolyMatrix) -> PolyMatrix {
        let (p, q) = (other.rows, other.cols);
        let mut m = PolyMatrix::zero(&self.ring, self.rows * p, self.cols * q);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.entry(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..p {
                    for l in 0..q {
                        m.set(i * p + k, j * q + l, a.mul(other.entry(k, l)));
                    }
                }
            }
        }
        m
    }
}

/// All `t`-element subsets of `0..n`, lexicographically.
pub fn combinations(n: usize, t: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if t > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..t).collect();
    loop {
        out.push(cur.clone());
        // advance
        let mut i = t;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] != i + n - t {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        cur[i] += 1;
        for j in i + 1..t {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| format!("{}", self.entry(i, j))).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::MonomialOrder;
    use crate::scalar::Field;

    fn ring() -> PolyRing {
        PolyRing::new(&["u", "v", "t", "w"], Field::Rationals, MonomialOrder::Grevlex).unwrap()
    }

    #[test]
    fn combinations_enumerate() {
        assert_eq!(combinations(4, 2).len(), 6);
        assert_eq!(combinations(3, 3), vec![vec![0, 1, 2]]);
        assert_eq!(combinations(2, 3).len(), 0);
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn minors_of_ex1_embedding() {
        // [w 0 -t; 0 u -v] has 2x2 minors u*w, -v*w, t*u
        let r = ring();
        let m = PolyMatrix::parse(&r, &[&["w", "0", "-t"], &["0", "u", "-v"]]).unwrap();
        let minors = m.minors(2);
        assert_eq!(minors.len(), 3);
        let strs: Vec<String> = minors.iter().map(|p| format!("{}", p.monic())).collect();
        assert!(strs.contains(&"u*w".to_string()));
        assert!(strs.contains(&"v*w".to_string()));
        assert!(strs.contains(&"u*t".to_string()));
    }

    #[test]
    fn hilbert_burch_minors_recover_p() {
        // signed 2x2 minors of [-t w; v -t; -u v] generate p_ex1
        let r = ring();
        let phi = PolyMatrix::parse(&r, &[&["-t", "w"], &["v", "-t"], &["-u", "v"]]).unwrap();
        let minors = phi.minors(2);
        assert_eq!(minors.len(), 3);
        for m in &minors {
            assert!(m.is_homogeneous());
            assert_eq!(m.degree(), Some(2));
        }
    }

    #[test]
    fn matrix_product_and_transpose() {
        let r = ring();
        let a = PolyMatrix::parse(&r, &[&["u", "v"], &["t", "w"]]).unwrap();
        let id = PolyMatrix::identity(&r, 2);
        assert_eq!(a.mul(&id).unwrap(), a);
        assert_eq!(a.transpose().transpose(), a);
    }
}
