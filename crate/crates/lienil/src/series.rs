//! Central series, derived series, centralizers, Engel sets, and the
//! brute-force radicals. All of it works on subspaces in canonical form, so
//! chains stabilize by dimension comparison alone.

use crate::algebra::{Element, LieAlgebra};
use crate::error::Error;
use crate::linalg::{enumerate_subspaces, kernel, Mat, Subspace};
use crate::Caps;

impl LieAlgebra {
    /// S = S^1 >= S^2 = [S^1, S] >= ... until zero or stable. S must be a
    /// subalgebra. The last term is zero exactly when S is nilpotent.
    pub fn lower_central_series(&self, s: &Subspace) -> Result<Vec<Subspace>, Error> {
        if !self.is_subalgebra(s) {
            return Err(Error::NotASubalgebra);
        }
        Ok(self.lcs_unchecked(s))
    }

    pub(crate) fn lcs_unchecked(&self, s: &Subspace) -> Vec<Subspace> {
        let mut terms = vec![s.clone()];
        loop {
            let last = terms.last().unwrap();
            let next = self.bracket_space(last, s);
            if next.dim() == last.dim() {
                break;
            }
            let zero = next.is_zero();
            terms.push(next);
            if zero {
                break;
            }
        }
        terms
    }

    pub fn is_nilpotent(&self, s: &Subspace) -> Result<bool, Error> {
        if !self.is_subalgebra(s) {
            return Err(Error::NotASubalgebra);
        }
        Ok(self.is_nilpotent_unchecked(s))
    }

    pub(crate) fn is_nilpotent_unchecked(&self, s: &Subspace) -> bool {
        self.lcs_unchecked(s).last().unwrap().is_zero()
    }

    /// Number of nonzero terms of the lower central series, or None when S
    /// is not nilpotent. The zero algebra has class 0, abelian algebras 1.
    pub fn nilpotency_class(&self, s: &Subspace) -> Result<Option<usize>, Error> {
        let terms = self.lower_central_series(s)?;
        if terms.last().unwrap().is_zero() {
            Ok(Some(terms.iter().filter(|t| !t.is_zero()).count()))
        } else {
            Ok(None)
        }
    }

    /// S = S^(0) >= S^(1) = [S, S] >= ... until zero or stable.
    pub fn derived_series(&self, s: &Subspace) -> Result<Vec<Subspace>, Error> {
        if !self.is_subalgebra(s) {
            return Err(Error::NotASubalgebra);
        }
        let mut terms = vec![s.clone()];
        loop {
            let last = terms.last().unwrap();
            let next = self.bracket_space(last, last);
            if next.dim() == last.dim() {
                break;
            }
            let zero = next.is_zero();
            terms.push(next);
            if zero {
                break;
            }
        }
        Ok(terms)
    }

    pub fn is_solvable(&self, s: &Subspace) -> Result<bool, Error> {
        Ok(self.derived_series(s)?.last().unwrap().is_zero())
    }

    /// The derived subalgebra [L, L] (always an ideal).
    pub fn derived_subalgebra(&self) -> Subspace {
        let full = self.full_space();
        self.bracket_space(&full, &full)
    }

    /// L is completely solvable when [L, L] is nilpotent.
    pub fn is_completely_solvable(&self) -> bool {
        self.is_nilpotent_unchecked(&self.derived_subalgebra())
    }

    /// { y : [y, s] = 0 for every s in S }: the kernel of the ad matrices of
    /// S's basis vectors, stacked.
    pub fn centralizer_of_subspace(&self, s: &Subspace) -> Subspace {
        let f = self.field();
        let mut stacked = Mat::zeros(f, 0, self.dim());
        for i in 0..s.dim() {
            let v = Element::from_coords(s.basis().row(i).to_vec());
            stacked = stacked.vstack(&self.ad_matrix(&v));
        }
        kernel(f, &stacked)
    }

    pub fn centralizer_of_element(&self, x: &Element) -> Subspace {
        kernel(self.field(), &self.ad_matrix(x))
    }

    pub fn center(&self) -> Subspace {
        self.centralizer_of_subspace(&self.full_space())
    }

    /// Z_1 <= Z_2 <= ... computed without passing to quotients: with A the
    /// annihilator of Z_{i-1}, x lies in Z_i iff A * ad_matrix(b_j) kills x
    /// for every basis vector b_j (that is, [x, b_j] lands in Z_{i-1}).
    /// The first term is the center; the list ends at the first repeat.
    pub fn upper_central_series(&self) -> Vec<Subspace> {
        let f = self.field();
        let mut terms: Vec<Subspace> = Vec::new();
        let mut last = Subspace::zero(f, self.dim());
        loop {
            let ann = last.annihilator(f);
            let mut stacked = Mat::zeros(f, 0, self.dim());
            for j in 0..self.dim() {
                let cond = ann.basis().matmul(f, &self.ad_matrix(&self.basis_element(j)));
                stacked = stacked.vstack(&cond);
            }
            let next = kernel(f, &stacked);
            if next.dim() == last.dim() && !terms.is_empty() {
                break;
            }
            let stable = next.dim() == last.dim();
            terms.push(next.clone());
            last = next;
            if stable {
                break;
            }
        }
        terms
    }

    /// Terminal term of the upper central series.
    pub fn hypercenter(&self) -> Subspace {
        self.upper_central_series().last().unwrap().clone()
    }

    /// E_L(x) = ker(ad x)^n with n = dim L: the Fitting null component of ad x.
    pub fn engel_set(&self, x: &Element) -> Subspace {
        let m = self.ad_matrix(x).matpow(self.field(), self.dim());
        kernel(self.field(), &m)
    }

    /// E(L): elements y with y in E_L(x) for every x in L. The intersection
    /// runs over all of L, not just a basis: E_L is not linear in x, and for
    /// the 2-dimensional nonabelian algebra the basis intersection is
    /// strictly larger than E(L). The result is always bracket-closed,
    /// which is asserted.
    pub fn engel_elements(&self, caps: Caps) -> Result<Subspace, Error> {
        let f = self.field();
        let mut over_all = Subspace::full(f, self.dim());
        for x in self.enumerate_elements(caps)? {
            if over_all.is_zero() {
                break;
            }
            over_all = Subspace::intersect(f, &over_all, &self.engel_set(&x));
        }
        assert!(self.is_subalgebra(&over_all), "Engel elements must form a subalgebra");
        Ok(over_all)
    }

    /// S is an ideal when [S, L] lies back in S.
    pub fn is_ideal(&self, s: &Subspace) -> bool {
        s.contains_subspace(self.field(), &self.bracket_space(s, &self.full_space()))
    }

    /// All subspaces that are closed under the bracket.
    pub fn enumerate_subalgebras(&self, caps: Caps) -> Result<Vec<Subspace>, Error> {
        let subs = enumerate_subspaces(self.field(), self.dim(), caps.max_subspaces)?;
        Ok(subs.into_iter().filter(|s| self.is_subalgebra(s)).collect())
    }

    /// The nilradical N(L): all subspaces are enumerated, the nilpotent
    /// ideals kept, and the unique maximal one returned. Maximality and
    /// closure of the family under sums are both asserted, not assumed.
    pub fn nilradical(&self, caps: Caps) -> Result<Subspace, Error> {
        let f = self.field();
        let ideals = self.nilpotent_ideals(caps)?;
        let best = ideals.iter().max_by_key(|s| s.dim()).expect("zero ideal always present").clone();
        for i in &ideals {
            assert!(
                best.contains_subspace(f, i),
                "nilpotent ideal of dimension {} escapes the maximal one",
                i.dim()
            );
        }
        for a in &ideals {
            for b in &ideals {
                let sum = Subspace::sum(f, a, b);
                assert!(
                    self.is_ideal(&sum) && self.is_nilpotent_unchecked(&sum),
                    "sum of nilpotent ideals failed to be a nilpotent ideal"
                );
            }
        }
        Ok(best)
    }

    fn nilpotent_ideals(&self, caps: Caps) -> Result<Vec<Subspace>, Error> {
        let subs = enumerate_subspaces(self.field(), self.dim(), caps.max_subspaces)?;
        Ok(subs
            .into_iter()
            .filter(|s| self.is_ideal(s) && self.is_nilpotent_unchecked(s))
            .collect())
    }

    /// The radical R(L): unique maximal solvable ideal, by the same
    /// brute-force enumeration as the nilradical.
    pub fn radical(&self, caps: Caps) -> Result<Subspace, Error> {
        let f = self.field();
        let subs = enumerate_subspaces(f, self.dim(), caps.max_subspaces)?;
        let solvable: Vec<Subspace> = subs
            .into_iter()
            .filter(|s| self.is_ideal(s) && self.derived_series(s).map(|d| d.last().unwrap().is_zero()).unwrap_or(false))
            .collect();
        let best = solvable.iter().max_by_key(|s| s.dim()).expect("zero ideal always present").clone();
        for i in &solvable {
            assert!(best.contains_subspace(f, i), "solvable ideal escapes the maximal one");
        }
        Ok(best)
    }

    /// Maximal members, under inclusion, of the nilpotent subalgebras that
    /// contain x.
    pub fn maximal_nilpotent_subalgebras_through(
        &self,
        x: &Element,
        caps: Caps,
    ) -> Result<Vec<Subspace>, Error> {
        let f = self.field();
        let through: Vec<Subspace> = self
            .enumerate_subalgebras(caps)?
            .into_iter()
            .filter(|s| s.contains(f, x.coords()) && self.is_nilpotent_unchecked(s))
            .collect();
        Ok(through
            .iter()
            .filter(|u| {
                !through.iter().any(|v| v.dim() > u.dim() && v.contains_subspace(f, u))
            })
            .cloned()
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use std::sync::Arc;

    fn aff(q: u64) -> LieAlgebra {
        let f = Arc::new(Field::new(q, 1).unwrap());
        LieAlgebra::from_brackets(f, vec!["x".into(), "y".into()], &[(0, 1, 1, 1)]).unwrap()
    }

    fn heis(q: u64) -> LieAlgebra {
        // Heisenberg: [a, b] = c, everything else zero. Nilpotent of class 2.
        let f = Arc::new(Field::new(q, 1).unwrap());
        LieAlgebra::from_brackets(f, vec!["a".into(), "b".into(), "c".into()], &[(0, 1, 2, 1)])
            .unwrap()
    }

    #[test]
    fn series_of_nonnilpotent_algebra_stabilize() {
        let l = aff(3);
        let full = l.full_space();
        let lcs = l.lower_central_series(&full).unwrap();
        // L^2 = span{y} and then [span{y}, L] = span{y}: stable, nonzero.
        assert_eq!(lcs.len(), 2);
        assert_eq!(lcs[1].dim(), 1);
        assert!(!l.is_nilpotent(&full).unwrap());
        // Solvable though: derived series hits zero in two steps.
        assert!(l.is_solvable(&full).unwrap());
        assert!(l.is_completely_solvable());
        assert_eq!(l.nilpotency_class(&full).unwrap(), None);
    }

    #[test]
    fn heisenberg_is_nilpotent_class_two() {
        let l = heis(3);
        let full = l.full_space();
        assert!(l.is_nilpotent(&full).unwrap());
        assert_eq!(l.nilpotency_class(&full).unwrap(), Some(2));
        let abelian = l.span(&[l.basis_element(0), l.basis_element(2)]);
        assert_eq!(l.nilpotency_class(&abelian).unwrap(), Some(1));
        let zero = l.span(&[]);
        assert_eq!(l.nilpotency_class(&zero).unwrap(), Some(0));
    }

    #[test]
    fn non_subalgebra_is_rejected() {
        let l = heis(3);
        let s = l.span(&[l.basis_element(0), l.basis_element(1)]);
        assert!(matches!(l.lower_central_series(&s), Err(Error::NotASubalgebra)));
    }

    #[test]
    fn center_and_centralizers() {
        let l = heis(3);
        let center = l.center();
        assert_eq!(center.dim(), 1);
        assert!(l.member(&center, &l.basis_element(2)));
        // Centralizer of a single generator contains itself and the center.
        let ca = l.centralizer_of_element(&l.basis_element(0));
        assert_eq!(ca.dim(), 2);
        assert!(l.member(&ca, &l.basis_element(0)));
        assert!(l.member(&ca, &l.basis_element(2)));
        // Centralizer of the zero subspace is everything.
        let zero = l.span(&[]);
        assert_eq!(l.centralizer_of_subspace(&zero).dim(), 3);
    }

    #[test]
    fn upper_central_series_climbs_to_hypercenter() {
        // Nilpotent algebras: hypercenter is everything.
        let l = heis(2);
        let ucs = l.upper_central_series();
        assert_eq!(ucs.first().unwrap().dim(), 1);
        assert_eq!(ucs.last().unwrap().dim(), 3);
        assert_eq!(l.hypercenter().dim(), 3);
        // Non-nilpotent 2-dim algebra: center is zero and stays zero.
        let a = aff(3);
        assert!(a.hypercenter().is_zero());
    }

    #[test]
    fn engel_sets() {
        let l = aff(3);
        // ad y is nilpotent (y is an Engel element), ad x is not.
        let ex = l.engel_set(&l.basis_element(0));
        assert_eq!(ex.dim(), 1);
        assert!(l.member(&ex, &l.basis_element(0)));
        let ey = l.engel_set(&l.basis_element(1));
        assert_eq!(ey.dim(), 2);
        let e = l.engel_elements(Caps::default()).unwrap();
        assert!(e.is_zero());
        // Nilpotent algebra: every element is Engel.
        let h = heis(3);
        assert_eq!(h.engel_elements(Caps::default()).unwrap().dim(), 3);
    }

    #[test]
    fn ideals_and_nilradical() {
        let l = aff(3);
        let y = l.span(&[l.basis_element(1)]);
        assert!(l.is_ideal(&y));
        let x = l.span(&[l.basis_element(0)]);
        assert!(!l.is_ideal(&x));
        // N(aff) = span{y}: the whole algebra is an ideal but not nilpotent.
        let n = l.nilradical(Caps::default()).unwrap();
        assert_eq!(n, y);
        // R(aff) = aff itself (solvable).
        let r = l.radical(Caps::default()).unwrap();
        assert_eq!(r.dim(), 2);
        // Nilpotent algebra: nilradical is everything.
        let h = heis(2);
        assert_eq!(h.nilradical(Caps::default()).unwrap().dim(), 3);
    }

    #[test]
    fn maximal_nilpotent_subalgebras() {
        let l = aff(3);
        // x generates a 1-dim nilpotent subalgebra; the only nilpotent
        // subalgebras containing x are span{x} itself (anything bigger is L).
        let x = l.basis_element(0);
        let maxes = l.maximal_nilpotent_subalgebras_through(&x, Caps::default()).unwrap();
        assert_eq!(maxes.len(), 1);
        assert_eq!(maxes[0].dim(), 1);
    }

    #[test]
    fn subalgebra_enumeration() {
        let l = aff(2);
        let subs = l.enumerate_subalgebras(Caps::default()).unwrap();
        // Subspaces of F_2^2: 0, three lines, plane. All five are closed
        // under the bracket except span{x+y}... check against brute force.
        let f = l.field();
        let all = enumerate_subspaces(f, 2, 100).unwrap();
        let expected: Vec<_> = all.into_iter().filter(|s| l.is_subalgebra(s)).collect();
        assert_eq!(subs.len(), expected.len());
    }
}
