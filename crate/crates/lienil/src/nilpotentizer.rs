//! Nil sets: nil_L(h) = {x | the subalgebra generated by h and x is
//! nilpotent} and nil(L) = the x that pair nilpotently with everything.
//!
//! These are sets of elements, not subspaces: whether nil(L) is always a
//! subspace is an open question, so membership lists are the ground truth
//! and subspace-ness is a computed flag. The scanner exploits two exact
//! symmetries: scaling either generator by a nonzero scalar leaves the
//! generated subalgebra unchanged, and distinct pairs often generate the
//! same subalgebra, so nilpotency results are memoized by the closure's
//! canonical (reduced row echelon) basis. A naive mode disables every
//! shortcut and recomputes each pair from scratch; tests compare the two.

use std::sync::Arc;

use dashmap::DashMap;

use crate::algebra::{Element, LieAlgebra};
use crate::error::Error;
use crate::field::FieldElement;
use crate::linalg::{enumerate_subspaces, Subspace};
use crate::Caps;

/// A set of elements of one algebra, stored as sorted canonical indices.
///
/// Invariants: contains index 0, and is closed under nonzero scalings
/// (both hold for every nil set by construction).
#[derive(Clone, Debug)]
pub struct NilSet {
    members: Vec<u64>,
    span: Subspace,
    is_subspace: bool,
}

impl NilSet {
    fn from_members(l: &LieAlgebra, members: Vec<u64>) -> NilSet {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        let vecs: Vec<Vec<FieldElement>> = members
            .iter()
            .map(|&m| l.element_from_index(m).coords().to_vec())
            .collect();
        let span = Subspace::span(l.field(), l.dim(), &vecs);
        // The members always sit inside their span and are closed under
        // scaling, so the set is a subspace exactly when it has the full
        // cardinality of the span.
        let is_subspace = members.len() as u128 == span.vector_count(l.field());
        NilSet { members, span, is_subspace }
    }

    pub fn members(&self) -> &[u64] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, index: u64) -> bool {
        self.members.binary_search(&index).is_ok()
    }

    pub fn is_subspace(&self) -> bool {
        self.is_subspace
    }

    /// Linear span of the members (equals the set iff `is_subspace`).
    pub fn span(&self) -> &Subspace {
        &self.span
    }

    pub fn as_subspace(&self) -> Option<&Subspace> {
        if self.is_subspace {
            Some(&self.span)
        } else {
            None
        }
    }
}

/// Intersection of two sorted index lists.
pub fn intersect_sorted(a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// One verified law: `applicable` is false when the hypothesis fails
/// (then `holds` is vacuously true and the check is reported as skipped).
#[derive(Clone, Debug)]
pub struct LawCheck {
    pub name: &'static str,
    pub applicable: bool,
    pub holds: bool,
    pub witness: Option<String>,
}

impl LawCheck {
    fn pass(name: &'static str) -> LawCheck {
        LawCheck { name, applicable: true, holds: true, witness: None }
    }

    fn skip(name: &'static str, why: &str) -> LawCheck {
        LawCheck { name, applicable: false, holds: true, witness: Some(why.to_string()) }
    }

    fn fail(name: &'static str, witness: String) -> LawCheck {
        LawCheck { name, applicable: true, holds: false, witness: Some(witness) }
    }
}

#[derive(Clone, Debug)]
pub struct NilLawReport {
    pub checks: Vec<LawCheck>,
}

impl NilLawReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

/// Computes nil sets over one algebra, with memoization keyed on the
/// canonical basis of each generated subalgebra.
pub struct NilScanner<'a> {
    l: &'a LieAlgebra,
    caps: Caps,
    naive: bool,
    count: u64,
    /// Minimal index in the scalar orbit {lambda * x : lambda != 0}.
    rep: Vec<u64>,
    /// Sorted orbit representatives, zero excluded.
    reps: Vec<u64>,
    pair_cache: DashMap<(u64, u64), bool>,
    closure_memo: DashMap<Vec<u64>, bool>,
    nil_cache: DashMap<u64, Arc<NilSet>>,
}

impl<'a> NilScanner<'a> {
    pub fn new(l: &'a LieAlgebra, caps: Caps) -> Result<NilScanner<'a>, Error> {
        Self::build(l, caps, false)
    }

    /// Every pair is recomputed from its generated subalgebra, with no
    /// memoization and no orbit reduction. Slow; exists as the oracle.
    pub fn naive(l: &'a LieAlgebra, caps: Caps) -> Result<NilScanner<'a>, Error> {
        Self::build(l, caps, true)
    }

    fn build(l: &'a LieAlgebra, caps: Caps, naive: bool) -> Result<NilScanner<'a>, Error> {
        let count = l.element_count();
        if count > caps.max_elements as u128 {
            return Err(Error::TooManyElements { actual: count, cap: caps.max_elements });
        }
        let count = count as u64;
        let f = l.field();
        let nonzero: Vec<FieldElement> = f.elements().filter(|c| !c.is_zero()).collect();
        let mut rep = vec![u64::MAX; count as usize];
        let mut reps = Vec::new();
        for idx in 0..count {
            if rep[idx as usize] != u64::MAX {
                continue;
            }
            let x = l.element_from_index(idx);
            for &c in &nonzero {
                rep[l.index_of(&l.scale(c, &x)) as usize] = idx;
            }
            if idx != 0 {
                reps.push(idx);
            }
        }
        Ok(NilScanner {
            l,
            caps,
            naive,
            count,
            rep,
            reps,
            pair_cache: DashMap::new(),
            closure_memo: DashMap::new(),
            nil_cache: DashMap::new(),
        })
    }

    pub fn algebra(&self) -> &LieAlgebra {
        self.l
    }

    pub fn caps(&self) -> Caps {
        self.caps
    }

    pub fn is_naive(&self) -> bool {
        self.naive
    }

    pub fn element_count(&self) -> u64 {
        self.count
    }

    /// Minimal index in the scalar orbit of `idx`.
    pub fn orbit_rep(&self, idx: u64) -> u64 {
        self.rep[idx as usize]
    }

    /// Sorted nonzero orbit representatives.
    pub fn orbit_reps(&self) -> &[u64] {
        &self.reps
    }

    fn index_of_coords(&self, coords: &[FieldElement]) -> u64 {
        let q = self.l.field().q();
        coords.iter().rev().fold(0u64, |acc, c| acc * q + c.index())
    }

    fn closure_nilpotent(&self, x: &Element, y: &Element) -> bool {
        let span = self.l.span(&[x.clone(), y.clone()]);
        let closed = self.l.closure_of_subspace(&span);
        if self.naive {
            return self.l.is_nilpotent_unchecked(&closed);
        }
        let key: Vec<u64> =
            (0..closed.dim()).map(|r| self.index_of_coords(closed.basis().row(r))).collect();
        if let Some(hit) = self.closure_memo.get(&key) {
            return *hit;
        }
        let value = self.l.is_nilpotent_unchecked(&closed);
        self.closure_memo.insert(key, value);
        value
    }

    /// Is the subalgebra generated by elements `i` and `j` nilpotent?
    pub fn pair_nilpotent(&self, i: u64, j: u64) -> bool {
        if self.naive {
            return self
                .closure_nilpotent(&self.l.element_from_index(i), &self.l.element_from_index(j));
        }
        let (a, b) = (self.rep[i as usize], self.rep[j as usize]);
        // Equal orbits (or a zero) span at most one dimension: abelian.
        if a == b || a == 0 || b == 0 {
            return true;
        }
        let key = (a.min(b), a.max(b));
        if let Some(hit) = self.pair_cache.get(&key) {
            return *hit;
        }
        let value =
            self.closure_nilpotent(&self.l.element_from_index(key.0), &self.l.element_from_index(key.1));
        self.pair_cache.insert(key, value);
        value
    }

    fn nil_members_of_index(&self, idx: u64) -> Vec<u64> {
        (0..self.count).filter(|&x| self.pair_nilpotent(idx, x)).collect()
    }

    /// nil_L(h) by exhaustive scan. Results are cached per scalar orbit
    /// (nil_L(h) = nil_L(lambda h) for nonzero lambda).
    pub fn nil_of_element(&self, h: &Element) -> NilSet {
        self.nil_of_element_index(self.l.index_of(h))
    }

    pub fn nil_of_element_index(&self, idx: u64) -> NilSet {
        if self.naive {
            return NilSet::from_members(self.l, self.nil_members_of_index(idx));
        }
        let r = self.rep[idx as usize];
        if let Some(hit) = self.nil_cache.get(&r) {
            return NilSet::clone(&hit);
        }
        let set = Arc::new(NilSet::from_members(self.l, self.nil_members_of_index(r)));
        self.nil_cache.insert(r, set.clone());
        NilSet::clone(&set)
    }

    /// nil(L) = intersection of nil_L(h) over all h, with the containment
    /// chain Z*(L) <= nil(L) <= E(L) asserted on the result.
    pub fn nil_of_algebra(&self) -> Result<NilSet, Error> {
        let mut members: Vec<u64> = (0..self.count).collect();
        let reps: Vec<u64> = if self.naive { (1..self.count).collect() } else { self.reps.clone() };
        for &r in &reps {
            if members.len() == 1 {
                break;
            }
            let nil_r = self.nil_of_element_index(r);
            members = intersect_sorted(&members, nil_r.members());
        }
        let set = NilSet::from_members(self.l, members);

        let hyper = self.l.hypercenter();
        for v in hyper.vectors(self.l.field()) {
            let idx = self.index_of_coords(&v);
            assert!(set.contains(idx), "hypercentral element escaped nil(L)");
        }
        let engel = self.l.engel_elements(self.caps)?;
        for &m in set.members() {
            let e = self.l.element_from_index(m);
            assert!(
                self.l.member(&engel, &e),
                "nil(L) member outside the Engel set"
            );
        }
        Ok(set)
    }

    /// C_L(x) = U for every nonzero x in U. (Such a U is automatically an
    /// abelian subalgebra: its members centralize each other.)
    pub fn is_strongly_self_centralizing(&self, u: &Subspace) -> bool {
        if u.is_zero() {
            return false;
        }
        u.vectors(self.l.field()).into_iter().all(|v| {
            if v.iter().all(|c| c.is_zero()) {
                return true;
            }
            self.l.centralizer_of_element(&Element::from_coords(v)) == *u
        })
    }

    /// All strongly self-centralizing subspaces of dimension 1..=max_dim.
    pub fn find_strongly_self_centralizing(
        &self,
        max_dim: usize,
    ) -> Result<Vec<Subspace>, Error> {
        let all = enumerate_subspaces(self.l.field(), self.l.dim(), self.caps.max_subspaces)?;
        Ok(all
            .into_iter()
            .filter(|u| {
                u.dim() >= 1
                    && u.dim() <= max_dim
                    && self.l.is_subalgebra(u)
                    && self.is_strongly_self_centralizing(u)
            })
            .collect())
    }

    fn quotient_image(&self, members: &[u64], proj: &crate::algebra::Projection, q: &LieAlgebra) -> Vec<u64> {
        let mut image: Vec<u64> = members
            .iter()
            .map(|&m| q.index_of(&proj.apply(self.l, &self.l.element_from_index(m))))
            .collect();
        image.sort_unstable();
        image.dedup();
        image
    }

    /// Verifies the nil-set laws relating an algebra to a quotient by the
    /// ideal `j`, plus equivariance under cheap automorphisms:
    ///
    ///   core-containment          nil(L) inside every nil_L(x)
    ///   quotient-image            image of nil_L(x) inside nil_{L/J}(image of x)
    ///   quotient-equality         equality of the two, when J lies in the hypercenter
    ///   subalgebra-transfer       "every nil_L(x) is a subspace" agrees between L and L/J,
    ///                             when J lies in the hypercenter
    ///   local-constancy           when nil_L(x) is a subspace, nil_L(y) = nil_L(x) for
    ///                             every y in it outside nil(L); x outside nil(L)
    ///   automorphism-equivariance theta(nil_L(x)) = nil_L(theta(x)) for diagonal
    ///                             basis scalings and basis permutations that
    ///                             preserve the bracket
    pub fn check_nil_laws(&self, j: &Subspace) -> Result<NilLawReport, Error> {
        if !self.l.is_ideal(j) {
            return Err(Error::NotAnIdeal);
        }
        let (q_alg, proj) = self.l.quotient(j)?;
        let q_scanner = NilScanner::new(&q_alg, self.caps)?;
        let nil_l = self.nil_of_algebra()?;
        let hyper = self.l.hypercenter();
        let j_in_hypercenter = hyper.contains_subspace(self.l.field(), j);

        let mut checks = Vec::new();
        let mut scan_reps: Vec<u64> = vec![0];
        scan_reps.extend_from_slice(&self.reps);

        // nil(L) is in every nilpotentizer.
        let mut check = LawCheck::pass("core-containment");
        'core: for &r in &scan_reps {
            let nil_r = self.nil_of_element_index(r);
            for &m in nil_l.members() {
                if !nil_r.contains(m) {
                    check = LawCheck::fail(
                        "core-containment",
                        format!(
                            "x = {}, missing {}",
                            self.l.render_element(&self.l.element_from_index(r)),
                            self.l.render_element(&self.l.element_from_index(m))
                        ),
                    );
                    break 'core;
                }
            }
        }
        checks.push(check);

        // Both sides are scalar-invariant, so orbit representatives suffice.
        let mut check = LawCheck::pass("quotient-image");
        for &r in &scan_reps {
            let image = self.quotient_image(self.nil_of_element_index(r).members(), &proj, &q_alg);
            let x_bar = proj.apply(self.l, &self.l.element_from_index(r));
            let target = q_scanner.nil_of_element(&x_bar);
            if let Some(&bad) = image.iter().find(|&&m| !target.contains(m)) {
                check = LawCheck::fail(
                    "quotient-image",
                    format!(
                        "x = {}, image member {} not in the quotient nil set",
                        self.l.render_element(&self.l.element_from_index(r)),
                        q_alg.render_element(&q_alg.element_from_index(bad))
                    ),
                );
                break;
            }
        }
        checks.push(check);

        let mut check = if j_in_hypercenter {
            LawCheck::pass("quotient-equality")
        } else {
            LawCheck::skip("quotient-equality", "ideal is not inside the hypercenter")
        };
        if j_in_hypercenter {
            for &r in &scan_reps {
                let image =
                    self.quotient_image(self.nil_of_element_index(r).members(), &proj, &q_alg);
                let x_bar = proj.apply(self.l, &self.l.element_from_index(r));
                let target = q_scanner.nil_of_element(&x_bar);
                if image != target.members() {
                    check = LawCheck::fail(
                        "quotient-equality",
                        format!(
                            "x = {}: image has {} members, quotient nil set {}",
                            self.l.render_element(&self.l.element_from_index(r)),
                            image.len(),
                            target.len()
                        ),
                    );
                    break;
                }
            }
        }
        checks.push(check);

        let mut check = if j_in_hypercenter {
            LawCheck::pass("subalgebra-transfer")
        } else {
            LawCheck::skip("subalgebra-transfer", "ideal is not inside the hypercenter")
        };
        if j_in_hypercenter {
            let all_l = self.reps.iter().all(|&r| self.nil_of_element_index(r).is_subspace());
            let all_q =
                q_scanner.reps.iter().all(|&r| q_scanner.nil_of_element_index(r).is_subspace());
            if all_l != all_q {
                check = LawCheck::fail(
                    "subalgebra-transfer",
                    format!("all subspaces in source: {}, in quotient: {}", all_l, all_q),
                );
            }
        }
        checks.push(check);

        // For x outside nil(L) with nil_L(x) a subspace: every y in
        // nil_L(x) outside nil(L) has the same nilpotentizer. (Members of
        // nil(L) are excluded on both ends: their nilpotentizer is all of L.)
        let mut check = LawCheck::pass("local-constancy");
        'lc: for &r in &self.reps {
            if nil_l.contains(r) {
                continue;
            }
            let nil_r = self.nil_of_element_index(r);
            if !nil_r.is_subspace() {
                continue;
            }
            for &y in nil_r.members() {
                if nil_l.contains(y) {
                    continue;
                }
                if self.nil_of_element_index(y).members() != nil_r.members() {
                    check = LawCheck::fail(
                        "local-constancy",
                        format!(
                            "x = {}, y = {}",
                            self.l.render_element(&self.l.element_from_index(r)),
                            self.l.render_element(&self.l.element_from_index(y))
                        ),
                    );
                    break 'lc;
                }
            }
        }
        checks.push(check);

        let mut check = LawCheck::pass("automorphism-equivariance");
        'auto: for theta in self.cheap_automorphisms() {
            for &r in &scan_reps {
                let x = self.l.element_from_index(r);
                let lhs_set = self.nil_of_element_index(r);
                let mut lhs: Vec<u64> = lhs_set
                    .members()
                    .iter()
                    .map(|&m| self.l.index_of(&theta.apply(self.l, &self.l.element_from_index(m))))
                    .collect();
                lhs.sort_unstable();
                let rhs = self.nil_of_element(&theta.apply(self.l, &x));
                if lhs != rhs.members() {
                    check = LawCheck::fail(
                        "automorphism-equivariance",
                        format!(
                            "map {:?}, x = {}",
                            theta,
                            self.l.render_element(&x)
                        ),
                    );
                    break 'auto;
                }
            }
        }
        checks.push(check);

        Ok(NilLawReport { checks })
    }

    /// Diagonal basis scalings and basis permutations that preserve the
    /// structure constants. Scaling tuples are enumerated exhaustively
    /// while (q-1)^n stays small, otherwise only the global scalings;
    /// permutations are enumerated for dimensions up to 7.
    fn cheap_automorphisms(&self) -> Vec<AutoMap> {
        const SCALING_LIMIT: u64 = 4096;
        const PERM_DIM_LIMIT: usize = 7;
        let f = self.l.field();
        let n = self.l.dim();
        let nonzero: Vec<FieldElement> = f.elements().filter(|c| !c.is_zero()).collect();
        let mut out = Vec::new();

        let preserves_scaling = |lambda: &[FieldElement]| {
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        let c = self.l.sc(i, j, k);
                        if c.is_zero() {
                            continue;
                        }
                        if lambda[k] != f.mul(lambda[i], lambda[j]) {
                            return false;
                        }
                    }
                }
            }
            true
        };

        let mut tuple_count = 1u64;
        let exhaustive = (0..n).all(|_| {
            tuple_count = tuple_count.saturating_mul(nonzero.len() as u64);
            tuple_count <= SCALING_LIMIT
        });
        if exhaustive && n > 0 {
            let mut digits = vec![0usize; n];
            loop {
                let lambda: Vec<FieldElement> = digits.iter().map(|&d| nonzero[d]).collect();
                if preserves_scaling(&lambda) {
                    out.push(AutoMap::Scale(lambda));
                }
                let mut pos = 0;
                loop {
                    if pos == n {
                        break;
                    }
                    digits[pos] += 1;
                    if digits[pos] < nonzero.len() {
                        break;
                    }
                    digits[pos] = 0;
                    pos += 1;
                }
                if pos == n {
                    break;
                }
            }
        } else {
            // Global scalings are always bracket-compatible up to the
            // quadratic factor; keep only the ones that truly preserve sc.
            for &c in &nonzero {
                let lambda = vec![c; n];
                if preserves_scaling(&lambda) {
                    out.push(AutoMap::Scale(lambda));
                }
            }
        }

        if n >= 1 && n <= PERM_DIM_LIMIT {
            let mut perm: Vec<usize> = (0..n).collect();
            permute(&mut perm, 0, &mut |p| {
                let ok = (0..n).all(|i| {
                    (0..n).all(|j| (0..n).all(|k| self.l.sc(i, j, k) == self.l.sc(p[i], p[j], p[k])))
                });
                if ok {
                    out.push(AutoMap::Perm(p.to_vec()));
                }
            });
        }
        out
    }
}

/// A linear map given by diagonal scaling or basis permutation.
#[derive(Clone, Debug)]
enum AutoMap {
    Scale(Vec<FieldElement>),
    Perm(Vec<usize>),
}

impl AutoMap {
    fn apply(&self, l: &LieAlgebra, x: &Element) -> Element {
        let f = l.field();
        let coords = x.coords();
        match self {
            AutoMap::Scale(lambda) => Element::from_coords(
                coords.iter().zip(lambda).map(|(&c, &s)| f.mul(c, s)).collect(),
            ),
            AutoMap::Perm(p) => {
                let mut out = vec![f.zero(); coords.len()];
                for (i, &c) in coords.iter().enumerate() {
                    out[p[i]] = c;
                }
                Element::from_coords(out)
            }
        }
    }
}

fn permute(items: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, visit);
        items.swap(k, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{t, three_dim_example, two_dim_nonabelian, u};
    use crate::field::Field;
    use std::sync::Arc;

    fn fq(p: u64, k: u32) -> Arc<Field> {
        Arc::new(Field::new(p, k).unwrap())
    }

    #[test]
    fn t2_f2_nil_of_e11() {
        // Basis (E11, E12, E22): nil of E11 is span{E11, I} = indices
        // {0, 1, 4, 5} with I = (1,0,1).
        let l = t(2, fq(2, 1));
        let scan = NilScanner::new(&l, Caps::default()).unwrap();
        let set = scan.nil_of_element(&l.basis_element(0));
        assert_eq!(set.members(), &[0, 1, 4, 5]);
        assert!(set.is_subspace());
        assert_eq!(set.span().dim(), 2);
        assert!(set.as_subspace().is_some());
    }

    #[test]
    fn t2_nil_is_scalars() {
        let l2 = t(2, fq(2, 1));
        let scan = NilScanner::new(&l2, Caps::default()).unwrap();
        let nil = scan.nil_of_algebra().unwrap();
        assert_eq!(nil.members(), &[0, 5]);
        assert!(nil.is_subspace());

        let l3 = t(2, fq(3, 1));
        let scan = NilScanner::new(&l3, Caps::default()).unwrap();
        let nil = scan.nil_of_algebra().unwrap();
        // I = (1,0,1) -> 10, 2I -> 20.
        assert_eq!(nil.members(), &[0, 10, 20]);
    }

    #[test]
    fn t2_f3_noncentral_nil_has_nine_members() {
        let l = t(2, fq(3, 1));
        let scan = NilScanner::new(&l, Caps::default()).unwrap();
        let nil = scan.nil_of_algebra().unwrap();
        for idx in 1..scan.element_count() {
            if nil.contains(idx) {
                assert_eq!(scan.nil_of_element_index(idx).len(), 27);
            } else {
                assert_eq!(scan.nil_of_element_index(idx).len(), 9);
            }
        }
    }

    #[test]
    fn nilpotent_algebra_nil_is_everything() {
        let l = u(3, fq(2, 1));
        let scan = NilScanner::new(&l, Caps::default()).unwrap();
        let nil = scan.nil_of_algebra().unwrap();
        assert_eq!(nil.len(), 8);
        assert!(nil.is_subspace());
        assert_eq!(nil.span().dim(), 3);
    }

    #[test]
    fn central_element_has_full_nil_set() {
        let l = t(2, fq(2, 1));
        let scan = NilScanner::new(&l, Caps::default()).unwrap();
        let eye = l.element_from_coords(&[1, 0, 1]);
        assert_eq!(scan.nil_of_element(&eye).len(), 8);
    }

    #[test]
    fn naive_and_fast_agree_on_t2_f3() {
        let l = t(2, fq(3, 1));
        let fast = NilScanner::new(&l, Caps::default()).unwrap();
        let slow = NilScanner::naive(&l, Caps::default()).unwrap();
        for idx in 0..fast.element_count() {
            assert_eq!(
                fast.nil_of_element_index(idx).members(),
                slow.nil_of_element_index(idx).members(),
                "nil sets differ at index {}",
                idx
            );
        }
        assert_eq!(
            fast.nil_of_algebra().unwrap().members(),
            slow.nil_of_algebra().unwrap().members()
        );
    }

    #[test]
    fn strongly_self_centralizing_examples() {
        let aff = two_dim_nonabelian(fq(3, 1));
        let scan = NilScanner::new(&aff, Caps::default()).unwrap();
        let u_x = aff.span(&[aff.basis_element(0)]);
        assert!(scan.is_strongly_self_centralizing(&u_x));

        let ex = three_dim_example(fq(2, 1));
        let scan_ex = NilScanner::new(&ex, Caps::default()).unwrap();
        let u_ef = ex.span(&[ex.basis_element(0), ex.basis_element(1)]);
        assert!(scan_ex.is_strongly_self_centralizing(&u_ef));

        // The identity is central in t(2), so its line centralizes everything.
        let t2 = t(2, fq(3, 1));
        let scan_t = NilScanner::new(&t2, Caps::default()).unwrap();
        let u_eye = t2.span(&[t2.element_from_coords(&[1, 0, 1])]);
        assert!(!scan_t.is_strongly_self_centralizing(&u_eye));
        assert!(!scan_t.is_strongly_self_centralizing(&t2.span(&[])));
    }

    #[test]
    fn ssc_search_finds_the_lines_of_aff() {
        // Every line of the two-dim nonabelian algebra self-centralizes.
        let aff = two_dim_nonabelian(fq(2, 1));
        let scan = NilScanner::new(&aff, Caps::default()).unwrap();
        let found = scan.find_strongly_self_centralizing(2).unwrap();
        assert_eq!(found.len(), 3);
        assert!(found.iter().all(|u| u.dim() == 1));
    }

    #[test]
    fn nil_set_of_ssc_members_is_the_subalgebra() {
        let aff = two_dim_nonabelian(fq(3, 1));
        let scan = NilScanner::new(&aff, Caps::default()).unwrap();
        let u_x = aff.span(&[aff.basis_element(0)]);
        for v in u_x.vectors(aff.field()) {
            if v.iter().all(|c| c.is_zero()) {
                continue;
            }
            let set = scan.nil_of_element(&Element::from_coords(v));
            assert!(set.is_subspace());
            assert_eq!(*set.span(), u_x);
            assert_eq!(set.len(), 3);
        }
    }

    #[test]
    fn nil_laws_t2_f2_by_scalars() {
        let l = t(2, fq(2, 1));
        let scan = NilScanner::new(&l, Caps::default()).unwrap();
        let scalars = l.span(&[l.element_from_coords(&[1, 0, 1])]);
        let report = scan.check_nil_laws(&scalars).unwrap();
        assert!(report.all_hold(), "{:?}", report);
        // The scalars form the hypercenter here, so nothing is skipped.
        assert!(report.checks.iter().all(|c| c.applicable));
    }

    #[test]
    fn nil_laws_zero_ideal_reduce_to_identities() {
        let l = t(2, fq(3, 1));
        let scan = NilScanner::new(&l, Caps::default()).unwrap();
        let report = scan.check_nil_laws(&l.span(&[])).unwrap();
        assert!(report.all_hold(), "{:?}", report);
    }

    #[test]
    fn nil_laws_skip_quotient_equality_outside_hypercenter() {
        let l = t(2, fq(2, 1));
        let scan = NilScanner::new(&l, Caps::default()).unwrap();
        let e12_line = l.span(&[l.basis_element(1)]);
        assert!(l.is_ideal(&e12_line));
        let report = scan.check_nil_laws(&e12_line).unwrap();
        assert!(report.all_hold(), "{:?}", report);
        let eq = report.checks.iter().find(|c| c.name == "quotient-equality").unwrap();
        assert!(!eq.applicable);
    }

    #[test]
    fn nil_laws_reject_non_ideal() {
        let l = t(2, fq(2, 1));
        let scan = NilScanner::new(&l, Caps::default()).unwrap();
        let e11_line = l.span(&[l.basis_element(0)]);
        assert!(matches!(scan.check_nil_laws(&e11_line), Err(Error::NotAnIdeal)));
    }

    #[test]
    fn element_cap_is_enforced() {
        let l = t(2, fq(3, 1));
        let caps = Caps { max_elements: 10, ..Caps::default() };
        assert!(matches!(
            NilScanner::new(&l, caps),
            Err(Error::TooManyElements { actual: 27, cap: 10 })
        ));
    }

    #[test]
    fn intersect_sorted_basics() {
        assert_eq!(intersect_sorted(&[0, 2, 4, 8], &[0, 3, 4, 9]), vec![0, 4]);
        assert_eq!(intersect_sorted(&[], &[1]), Vec::<u64>::new());
    }
}
