//! Row-reduction based linear algebra over a finite field.
//!
//! Subspaces are kept in reduced row echelon form with strictly increasing
//! pivot columns, so two subspaces are equal exactly when their basis
//! matrices are identical. Every operation here is exact.

use crate::error::Error;
use crate::field::{Field, FieldElement};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl Mat {
    pub fn zeros(f: &Field, rows: usize, cols: usize) -> Mat {
        Mat { rows, cols, data: vec![f.zero(); rows * cols] }
    }

    pub fn identity(f: &Field, n: usize) -> Mat {
        let mut m = Mat::zeros(f, n, n);
        for i in 0..n {
            m.set(i, i, f.one());
        }
        m
    }

    pub fn from_rows(cols: usize, rows: &[Vec<FieldElement>]) -> Mat {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "row length mismatch");
            data.extend_from_slice(r);
        }
        Mat { rows: rows.len(), cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> FieldElement {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: FieldElement) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<FieldElement>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, f: &Field, i: usize, s: FieldElement) {
        for j in 0..self.cols {
            let v = self.get(i, j);
            self.set(i, j, f.mul(v, s));
        }
    }

    /// row[dst] -= s * row[src]
    fn row_sub_scaled(&mut self, f: &Field, dst: usize, src: usize, s: FieldElement) {
        if s.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = f.sub(self.get(dst, j), f.mul(s, self.get(src, j)));
            self.set(dst, j, v);
        }
    }

    pub fn vstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Mat { rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn matmul(&self, f: &Field, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows);
        let mut out = Mat::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.add(out.get(i, j), f.mul(a, other.get(l, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn matpow(&self, f: &Field, e: usize) -> Mat {
        assert_eq!(self.rows, self.cols);
        let mut acc = Mat::identity(f, self.rows);
        for _ in 0..e {
            acc = acc.matmul(f, self);
        }
        acc
    }

    pub fn apply(&self, f: &Field, v: &[FieldElement]) -> Vec<FieldElement> {
        assert_eq!(self.cols, v.len());
        let mut out = vec![f.zero(); self.rows];
        for i in 0..self.rows {
            let mut acc = f.zero();
            for j in 0..self.cols {
                acc = f.add(acc, f.mul(self.get(i, j), v[j]));
            }
            out[i] = acc;
        }
        out
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self, f: &Field) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            self.swap_rows(r, pr);
            let inv = f.inv(self.get(r, c)).expect("pivot is nonzero");
            self.scale_row(f, r, inv);
            for i in 0..self.rows {
                if i != r {
                    let s = self.get(i, c);
                    self.row_sub_scaled(f, i, r, s);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }
}

/// A subspace of F_q^n held as a reduced-row-echelon basis with no zero rows.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    basis: Mat,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(f: &Field, ambient: usize) -> Subspace {
        Subspace { basis: Mat::zeros(f, 0, ambient), pivots: Vec::new() }
    }

    pub fn full(f: &Field, ambient: usize) -> Subspace {
        Subspace { basis: Mat::identity(f, ambient), pivots: (0..ambient).collect() }
    }

    pub fn span(f: &Field, ambient: usize, vecs: &[Vec<FieldElement>]) -> Subspace {
        let mut m = Mat::from_rows(ambient, vecs);
        let pivots = m.rref(f);
        let rank = pivots.len();
        let mut basis = Mat::zeros(f, rank, ambient);
        for i in 0..rank {
            for j in 0..ambient {
                basis.set(i, j, m.get(i, j));
            }
        }
        Subspace { basis, pivots }
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient(&self) -> usize {
        self.basis.cols()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis columns without a pivot, in increasing order.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ambient()).filter(|c| !self.pivots.contains(c)).collect()
    }

    /// Number of vectors in the subspace, q^dim.
    pub fn vector_count(&self, f: &Field) -> u128 {
        (f.q() as u128).pow(self.dim() as u32)
    }

    /// Residual of v after subtracting its projection onto the basis rows.
    /// Zero residual is membership.
    pub fn reduce(&self, f: &Field, v: &[FieldElement]) -> Vec<FieldElement> {
        assert_eq!(v.len(), self.ambient());
        let mut v = v.to_vec();
        for (i, &pc) in self.pivots.iter().enumerate() {
            let c = v[pc];
            if c.is_zero() {
                continue;
            }
            for j in 0..v.len() {
                v[j] = f.sub(v[j], f.mul(c, self.basis.get(i, j)));
            }
        }
        v
    }

    pub fn contains(&self, f: &Field, v: &[FieldElement]) -> bool {
        self.reduce(f, v).iter().all(|e| e.is_zero())
    }

    pub fn contains_subspace(&self, f: &Field, other: &Subspace) -> bool {
        (0..other.dim()).all(|i| self.contains(f, other.basis.row(i)))
    }

    pub fn sum(f: &Field, a: &Subspace, b: &Subspace) -> Subspace {
        assert_eq!(a.ambient(), b.ambient());
        let stacked = a.basis.vstack(&b.basis);
        Subspace::span(f, a.ambient(), &stacked.row_vecs())
    }

    /// Zassenhaus: row-reduce [A|A; B|0]; rows with zero left half carry the
    /// intersection in their right half.
    pub fn intersect(f: &Field, a: &Subspace, b: &Subspace) -> Subspace {
        let n = a.ambient();
        assert_eq!(n, b.ambient());
        let mut rows = Vec::new();
        for i in 0..a.dim() {
            let mut r = a.basis.row(i).to_vec();
            r.extend_from_slice(a.basis.row(i));
            rows.push(r);
        }
        for i in 0..b.dim() {
            let mut r = b.basis.row(i).to_vec();
            r.extend(vec![f.zero(); n]);
            rows.push(r);
        }
        let mut m = Mat::from_rows(2 * n, &rows);
        m.rref(f);
        let mut inter_rows = Vec::new();
        for i in 0..m.rows() {
            let left_zero = (0..n).all(|j| m.get(i, j).is_zero());
            let right_nonzero = (n..2 * n).any(|j| !m.get(i, j).is_zero());
            if left_zero && right_nonzero {
                inter_rows.push(m.row(i)[n..].to_vec());
            }
        }
        Subspace::span(f, n, &inter_rows)
    }

    /// All vectors of the subspace: every linear combination of the basis,
    /// coefficients cycling with the first basis row fastest.
    pub fn vectors(&self, f: &Field) -> Vec<Vec<FieldElement>> {
        let d = self.dim();
        let n = self.ambient();
        let q = f.q();
        let total = (q as u128).pow(d as u32) as usize;
        let mut out = Vec::with_capacity(total);
        for mut m in 0..total as u64 {
            let mut v = vec![f.zero(); n];
            for i in 0..d {
                let c = f.element(m % q);
                m /= q;
                if !c.is_zero() {
                    for j in 0..n {
                        v[j] = f.add(v[j], f.mul(c, self.basis.get(i, j)));
                    }
                }
            }
            out.push(v);
        }
        out
    }

    /// Basis of { w : w . v = 0 for all v in self }, the annihilator under
    /// the standard dot product. Encodes membership as linear conditions:
    /// v lies in self iff every annihilator row dots to zero against v.
    pub fn annihilator(&self, f: &Field) -> Subspace {
        kernel(f, &self.basis)
    }
}

/// Null space { x : m x = 0 }.
pub fn kernel(f: &Field, m: &Mat) -> Subspace {
    let n = m.cols();
    let mut r = m.clone();
    let pivots = r.rref(f);
    let mut rows = Vec::new();
    for free in 0..n {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![f.zero(); n];
        v[free] = f.one();
        for (i, &pc) in pivots.iter().enumerate() {
            v[pc] = f.neg(r.get(i, free));
        }
        rows.push(v);
    }
    Subspace::span(f, n, &rows)
}

/// Coefficients expressing target as a combination of the rows of `rows`,
/// or None if target is outside their span. Free coefficients are zero.
pub fn solve_coords(f: &Field, rows: &Mat, target: &[FieldElement]) -> Option<Vec<FieldElement>> {
    let r = rows.rows();
    let n = rows.cols();
    assert_eq!(target.len(), n);
    let mut aug = Mat::zeros(f, n, r + 1);
    for i in 0..n {
        for j in 0..r {
            aug.set(i, j, rows.get(j, i));
        }
        aug.set(i, r, target[i]);
    }
    let pivots = aug.rref(f);
    if pivots.contains(&r) {
        return None;
    }
    let mut coords = vec![f.zero(); r];
    for (i, &pc) in pivots.iter().enumerate() {
        coords[pc] = aug.get(i, r);
    }
    Some(coords)
}

/// Number of subspaces of F_q^n of every dimension (sum of Gaussian binomials),
/// counted through RREF pivot patterns.
pub fn count_subspaces(q: u128, n: usize) -> u128 {
    let mut total = 0u128;
    for r in 0..=n {
        for_each_combination(n, r, &mut |pivots| {
            total += q.pow(free_cells(n, pivots) as u32);
        });
    }
    total
}

fn free_cells(n: usize, pivots: &[usize]) -> usize {
    pivots.iter().map(|&p| (p + 1..n).filter(|c| !pivots.contains(c)).count()).sum()
}

fn for_each_combination(n: usize, r: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(n: usize, r: usize, start: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == r {
            f(cur);
            return;
        }
        let remaining = r - cur.len();
        for c in start..=n.saturating_sub(remaining) {
            cur.push(c);
            rec(n, r, c + 1, cur, f);
            cur.pop();
        }
    }
    if r > n {
        return;
    }
    let mut cur = Vec::new();
    rec(n, r, 0, &mut cur, f);
}

/// Every subspace of F_q^n, produced directly in reduced row echelon form:
/// one matrix per (pivot set, free-cell assignment) pair. The count is
/// checked against `cap` before anything is materialized.
pub fn enumerate_subspaces(f: &Field, n: usize, cap: u64) -> Result<Vec<Subspace>, Error> {
    let total = count_subspaces(f.q() as u128, n);
    if total > cap as u128 {
        return Err(Error::TooManySubspaces { actual: total, cap });
    }
    let mut out = Vec::with_capacity(total as usize);
    for r in 0..=n {
        for_each_combination(n, r, &mut |pivots| {
            let free: Vec<(usize, usize)> = (0..r)
                .flat_map(|i| {
                    let pivots = pivots.to_vec();
                    let pi = pivots[i];
                    (pi + 1..n).filter(move |c| !pivots.contains(c)).map(move |c| (i, c))
                })
                .collect();
            let q = f.q();
            let combos = q.pow(free.len() as u32);
            for mut m in 0..combos {
                let mut basis = Mat::zeros(f, r, n);
                for (i, &p) in pivots.iter().enumerate() {
                    basis.set(i, p, f.one());
                }
                for &(i, c) in &free {
                    basis.set(i, c, f.element(m % q));
                    m /= q;
                }
                out.push(Subspace { basis, pivots: pivots.to_vec() });
            }
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> Field {
        Field::new(2, 1).unwrap()
    }

    fn f3() -> Field {
        Field::new(3, 1).unwrap()
    }

    fn vecs(f: &Field, rows: &[&[u64]]) -> Vec<Vec<FieldElement>> {
        rows.iter().map(|r| r.iter().map(|&x| f.element(x)).collect()).collect()
    }

    #[test]
    fn rref_canonical_form() {
        let f = f3();
        // span{(1,2,0),(2,1,1)} and the same vectors scaled/permuted agree.
        let a = Subspace::span(&f, 3, &vecs(&f, &[&[1, 2, 0], &[2, 1, 1]]));
        let b = Subspace::span(&f, 3, &vecs(&f, &[&[2, 1, 1], &[2, 4 % 3, 0]]));
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
        // Elimination turns the second generator into (0,0,1).
        assert_eq!(a.pivots(), &[0, 2]);
    }

    #[test]
    fn membership() {
        let f = f2();
        let s = Subspace::span(&f, 3, &vecs(&f, &[&[1, 0, 1], &[0, 1, 0]]));
        assert!(s.contains(&f, &vecs(&f, &[&[1, 1, 1]])[0]));
        assert!(!s.contains(&f, &vecs(&f, &[&[0, 0, 1]])[0]));
    }

    #[test]
    fn sum_and_intersection_dimension_identity() {
        let f = f3();
        let s = Subspace::span(&f, 4, &vecs(&f, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]));
        let t = Subspace::span(&f, 4, &vecs(&f, &[&[0, 1, 0, 0], &[0, 0, 1, 0]]));
        let sum = Subspace::sum(&f, &s, &t);
        let inter = Subspace::intersect(&f, &s, &t);
        assert_eq!(sum.dim(), 3);
        assert_eq!(inter.dim(), 1);
        assert_eq!(s.dim() + t.dim(), sum.dim() + inter.dim());
        assert!(inter.contains(&f, &vecs(&f, &[&[0, 2, 0, 0]])[0]));
    }

    #[test]
    fn intersection_members_exact() {
        // Intersection must be exactly the common vectors, not merely the
        // right dimension.
        let f = f2();
        let s = Subspace::span(&f, 3, &vecs(&f, &[&[1, 1, 0], &[0, 0, 1]]));
        let t = Subspace::span(&f, 3, &vecs(&f, &[&[1, 1, 1], &[0, 1, 0]]));
        let inter = Subspace::intersect(&f, &s, &t);
        for v in inter.vectors(&f) {
            assert!(s.contains(&f, &v) && t.contains(&f, &v));
        }
        let common: Vec<_> =
            s.vectors(&f).into_iter().filter(|v| t.contains(&f, v)).collect();
        assert_eq!(common.len() as u128, inter.vector_count(&f));
    }

    #[test]
    fn kernel_of_singular_map() {
        let f = f3();
        // rows (1,1,0) and (0,0,1): kernel is span{(1,-1,0)} = span{(1,2,0)}.
        let m = Mat::from_rows(3, &vecs(&f, &[&[1, 1, 0], &[0, 0, 1]]));
        let k = kernel(&f, &m);
        assert_eq!(k.dim(), 1);
        assert!(k.contains(&f, &vecs(&f, &[&[1, 2, 0]])[0]));
        for v in k.vectors(&f) {
            assert!(m.apply(&f, &v).iter().all(|e| e.is_zero()));
        }
    }

    #[test]
    fn annihilator_encodes_membership() {
        let f = f3();
        let s = Subspace::span(&f, 3, &vecs(&f, &[&[1, 2, 0], &[0, 0, 1]]));
        let ann = s.annihilator(&f);
        assert_eq!(ann.dim(), 1);
        for v in s.vectors(&f) {
            for i in 0..ann.dim() {
                let row = ann.basis().row(i);
                let mut dot = f.zero();
                for j in 0..3 {
                    dot = f.add(dot, f.mul(row[j], v[j]));
                }
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn solve_coords_roundtrip() {
        let f = f3();
        let rows = Mat::from_rows(3, &vecs(&f, &[&[1, 2, 0], &[0, 1, 1]]));
        // 2*(1,2,0) + 1*(0,1,1) = (2,2,1).
        let target = vecs(&f, &[&[2, 2, 1]])[0].clone();
        let coords = solve_coords(&f, &rows, &target).unwrap();
        let mut acc = vec![f.zero(); 3];
        for (i, &c) in coords.iter().enumerate() {
            for j in 0..3 {
                acc[j] = f.add(acc[j], f.mul(c, rows.get(i, j)));
            }
        }
        assert_eq!(acc, target);
        assert!(solve_coords(&f, &rows, &vecs(&f, &[&[0, 0, 1]])[0]).is_none());
    }

    #[test]
    fn subspace_counts_match_enumeration() {
        // F_2^3 has 1 + 7 + 7 + 1 = 16 subspaces; F_3^2 has 1 + 4 + 1 = 6.
        assert_eq!(count_subspaces(2, 3), 16);
        assert_eq!(count_subspaces(3, 2), 6);
        let f = f2();
        let subs = enumerate_subspaces(&f, 3, 1000).unwrap();
        assert_eq!(subs.len(), 16);
        // All distinct, all genuinely in canonical form.
        for s in &subs {
            let respanned = Subspace::span(&f, 3, &s.basis().row_vecs());
            assert_eq!(*s, respanned);
        }
        let mut keys: Vec<_> = subs.iter().map(|s| format!("{:?}", s.basis())).collect();
        keys.sort();
        keys.dedup();
        assert_eq!(keys.len(), 16);
    }

    #[test]
    fn subspace_cap_is_enforced() {
        let f = f2();
        match enumerate_subspaces(&f, 3, 10) {
            Err(Error::TooManySubspaces { actual: 16, cap: 10 }) => {}
            other => panic!("expected cap error, got {:?}", other.map(|v| v.len())),
        }
    }

    #[test]
    fn vectors_enumerates_whole_space() {
        let f = f3();
        let s = Subspace::span(&f, 3, &vecs(&f, &[&[1, 0, 2], &[0, 1, 1]]));
        let vs = s.vectors(&f);
        assert_eq!(vs.len(), 9);
        let mut uniq: Vec<_> = vs.iter().map(|v| format!("{:?}", v)).collect();
        uniq.sort();
        uniq.dedup();
        assert_eq!(uniq.len(), 9);
    }
}
