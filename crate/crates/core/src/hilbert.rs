//! Monomial enumeration and Hilbert-function counting against initial
//! ideals and initial submodules.

use crate::monomial::Monomial;

/// All monomials of total degree `d` in `arity` variables.
pub fn monomials_of_degree(arity: usize, d: u64) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; arity];
    fill(&mut out, &mut cur, 0, d);
    out
}

fn fill(out: &mut Vec<Monomial>, cur: &mut Vec<u32>, pos: usize, rest: u64) {
    if pos + 1 == cur.len() {
        cur[pos] = rest as u32;
        out.push(Monomial::new(cur.clone()));
        cur[pos] = 0;
        return;
    }
    if cur.is_empty() {
        if rest == 0 {
            out.push(Monomial::new(Vec::new()));
        }
        return;
    }
    for e in 0..=rest {
        cur[pos] = e as u32;
        fill(out, cur, pos + 1, rest - e);
    }
    cur[pos] = 0;
}

/// Number of degree-`d` monomials not divisible by any of `lts`
/// (the Hilbert function of `R/in(I)` at `d`).
pub fn quotient_hf(lts: &[Monomial], arity: usize, d: u64) -> usize {
    monomials_of_degree(arity, d)
        .into_iter()
        .filter(|m| !lts.iter().any(|l| l.divides(m)))
        .count()
}

/// Hilbert function of a graded quotient of a free module: for each basis
/// element `i` with twist `twists[i]`, count degree-`(d - twists[i])`
/// monomials whose product with `e_i` avoids the leading terms `(comp, mono)`.
pub fn module_quotient_hf(
    lts: &[(u32, Monomial)],
    arity: usize,
    twists: &[i64],
    d: i64,
) -> usize {
    let mut count = 0;
    for (i, a) in twists.iter().enumerate() {
        let deg = d - a;
        if deg < 0 {
            continue;
        }
        count += monomials_of_degree(arity, deg as u64)
            .into_iter()
            .filter(|m| {
                !lts.iter()
                    .any(|(c, l)| *c as usize == i && l.divides(m))
            })
            .count();
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_counts() {
        assert_eq!(monomials_of_degree(3, 2).len(), 6); // C(4,2)
        assert_eq!(monomials_of_degree(1, 5).len(), 1);
        assert_eq!(monomials_of_degree(0, 0).len(), 1);
        assert_eq!(monomials_of_degree(0, 1).len(), 0);
    }

    #[test]
    fn hf_of_quadric_quotient() {
        // R = k[x,y], I = (x^2): HF(R/I) = 1, 2, 2, 2, ...
        let lts = vec![Monomial::new(vec![2, 0])];
        assert_eq!(quotient_hf(&lts, 2, 0), 1);
        assert_eq!(quotient_hf(&lts, 2, 1), 2);
        assert_eq!(quotient_hf(&lts, 2, 5), 2);
    }
}
