//! Exact linear algebra over the rationals.
//!
//! Sparse vectors are sorted `(column, value)` lists without zero entries.
//! Reduced row echelon forms pivot on the smallest column index first, so
//! callers control tie-breaking by choosing the column order.

use num_traits::{One, Zero};

use crate::ratpoly::Rational;

pub type SparseVec = Vec<(usize, Rational)>;

/// `a + c * b`, dropping cancelled entries.
pub fn axpy(a: &SparseVec, c: &Rational, b: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, c * &b[j].1));
            j += 1;
        } else {
            let v = &a[i].1 + c * &b[j].1;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn get(v: &SparseVec, col: usize) -> Option<&Rational> {
    v.binary_search_by_key(&col, |e| e.0).ok().map(|k| &v[k].1)
}

fn scale(v: &mut SparseVec, c: &Rational) {
    for e in v.iter_mut() {
        e.1 *= c;
    }
}

/// Sparse vector from a dense one.
pub fn sparse(dense: &[Rational]) -> SparseVec {
    dense
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(i, v)| (i, v.clone()))
        .collect()
}

pub fn densify(v: &SparseVec, ncols: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); ncols];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

/// Reduced row echelon form: row `k` has a leading 1 in column `pivots[k]`
/// and every other row is zero in that column. Pivots are increasing.
#[derive(Clone, Debug, Default)]
pub struct Rref {
    pub rows: Vec<SparseVec>,
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn new(input: impl IntoIterator<Item = SparseVec>) -> Self {
        let mut r = Rref::default();
        for row in input {
            r.insert(row);
        }
        r
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Remainder of `v` after eliminating every pivot column; zero iff `v`
    /// lies in the row space.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut v = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if let Some(c) = get(&v, p).cloned() {
                v = axpy(&v, &-c, row);
            }
        }
        v
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds a row, keeping the form reduced. Returns whether the rank grew.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let mut v = self.reduce(&v);
        let Some((p, lead)) = v.first().cloned() else {
            return false;
        };
        scale(&mut v, &(Rational::one() / lead));
        for row in self.rows.iter_mut() {
            if let Some(c) = get(row, p).cloned() {
                *row = axpy(row, &-c, &v);
            }
        }
        let k = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(k, p);
        self.rows.insert(k, v);
        true
    }
}

/// Canonical basis of `{x : row · x = 0 for every row}` over `ncols`
/// columns, returned in reduced row echelon form.
pub fn nullspace(rows: impl IntoIterator<Item = SparseVec>, ncols: usize) -> Vec<SparseVec> {
    let r = Rref::new(rows);
    let mut is_pivot = vec![false; ncols];
    for &p in &r.pivots {
        is_pivot[p] = true;
    }
    let mut kernel = Vec::new();
    for f in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v: SparseVec = Vec::new();
        for (row, &p) in r.rows.iter().zip(&r.pivots) {
            if let Some(c) = get(row, f) {
                v.push((p, -c.clone()));
            }
        }
        v.push((f, Rational::one()));
        v.sort_by_key(|e| e.0);
        kernel.push(v);
    }
    Rref::new(kernel).rows
}

/// Rank of a dense matrix given by rows.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    Rref::new(rows.iter().map(|r| sparse(r))).rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratpoly::int;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn rank_and_kernel() {
        let m = vec![v(&[1, 2, 3]), v(&[2, 4, 6]), v(&[0, 1, 1])];
        assert_eq!(rank(&m), 2);
        let k = nullspace(m.iter().map(|r| sparse(r)), 3);
        assert_eq!(k.len(), 1);
        let x = densify(&k[0], 3);
        assert_eq!(x, v(&[1, 1, -1]));
        for r in &m {
            let dot: Rational = r.iter().zip(&x).map(|(a, b)| a * b).sum();
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn empty_system_has_full_kernel() {
        let k = nullspace(Vec::<SparseVec>::new(), 3);
        assert_eq!(k.len(), 3);
        assert_eq!(densify(&k[0], 3), v(&[1, 0, 0]));
    }

    #[test]
    fn membership() {
        let r = Rref::new([sparse(&v(&[1, 1, 0])), sparse(&v(&[0, 1, 1]))]);
        assert!(r.contains(&sparse(&v(&[1, 2, 1]))));
        assert!(!r.contains(&sparse(&v(&[0, 0, 1]))));
        assert_eq!(r.pivots, vec![0, 1]);
        assert_eq!(densify(&r.rows[0], 3), v(&[1, 0, -1]));
    }
}
