//! Lie algebras presented by structure constants, and the exact operations
//! on their elements and subspaces that everything else builds on.
//!
//! The table c[i][j][k] stores the k-th coordinate of [b_i, b_j]. The axioms
//! (alternating, antisymmetry, Jacobi on basis triples) are verified when an
//! algebra is constructed; bilinearity then extends the bracket to all
//! elements, and Jacobi holds everywhere because it holds on a basis.

use std::sync::Arc;

use crate::error::{Error, Violation};
use crate::field::{Field, FieldElement};
use crate::linalg::{Mat, Subspace};
use crate::Caps;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Element {
    coords: Vec<FieldElement>,
}

impl Element {
    pub fn coords(&self) -> &[FieldElement] {
        &self.coords
    }

    pub fn from_coords(coords: Vec<FieldElement>) -> Element {
        Element { coords }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }
}

#[derive(Clone, Debug)]
pub struct LieAlgebra {
    field: Arc<Field>,
    dim: usize,
    labels: Vec<String>,
    /// Structure constants, sc[(i*n + j)*n + k] = c_{ij}^k.
    sc: Vec<FieldElement>,
}

impl LieAlgebra {
    /// Build from a full n*n*n structure-constant table and validate it.
    pub fn new(field: Arc<Field>, labels: Vec<String>, sc: Vec<FieldElement>) -> Result<LieAlgebra, Error> {
        let n = labels.len();
        assert_eq!(sc.len(), n * n * n, "structure constant table must have n^3 entries");
        let alg = LieAlgebra { field, dim: n, labels, sc };
        alg.validate()?;
        Ok(alg)
    }

    /// Build from the nonzero brackets only: entries are (i, j, k, value
    /// index) with 0-based basis positions, giving c_{ij}^k. The mirrored
    /// entry c_{ji}^k = -c_{ij}^k is filled in automatically; explicitly
    /// contradictory entries are rejected.
    pub fn from_brackets(
        field: Arc<Field>,
        labels: Vec<String>,
        entries: &[(usize, usize, usize, u64)],
    ) -> Result<LieAlgebra, Error> {
        let n = labels.len();
        let mut sc = vec![field.zero(); n * n * n];
        let mut given = vec![false; n * n * n];
        let idx = |i: usize, j: usize, k: usize| (i * n + j) * n + k;
        for &(i, j, k, v) in entries {
            if i >= n || j >= n || k >= n {
                return Err(Error::Parse(format!(
                    "structure constant index ({}, {}, {}) out of range for dimension {}",
                    i, j, k, n
                )));
            }
            if v >= field.q() {
                return Err(Error::Parse(format!(
                    "value {} is not an element index of GF({})",
                    v,
                    field.q()
                )));
            }
            let val = field.element(v);
            if given[idx(i, j, k)] && sc[idx(i, j, k)] != val {
                return Err(Error::Parse(format!(
                    "conflicting values for structure constant ({}, {}, {})",
                    i, j, k
                )));
            }
            sc[idx(i, j, k)] = val;
            given[idx(i, j, k)] = true;
            let mirrored = field.neg(val);
            if given[idx(j, i, k)] && sc[idx(j, i, k)] != mirrored {
                return Err(Error::Parse(format!(
                    "entries ({}, {}, {}) and ({}, {}, {}) are not antisymmetric",
                    i, j, k, j, i, k
                )));
            }
            sc[idx(j, i, k)] = mirrored;
            given[idx(j, i, k)] = true;
        }
        LieAlgebra::new(field, labels, sc)
    }

    /// The abelian algebra of the given dimension: every bracket is zero.
    pub fn abelian(field: Arc<Field>, dim: usize) -> LieAlgebra {
        let labels = (0..dim).map(|i| format!("a{}", i + 1)).collect();
        let sc = vec![field.zero(); dim * dim * dim];
        LieAlgebra { field, dim, labels, sc }
    }

    /// Check the table against the Lie algebra axioms, reporting the first
    /// violating basis triple found.
    pub fn validate(&self) -> Result<(), Violation> {
        let n = self.dim;
        let f = &*self.field;
        for i in 0..n {
            for k in 0..n {
                if !self.sc(i, i, k).is_zero() {
                    return Err(Violation::Alternating { i, k });
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if self.sc(i, j, k) != f.neg(self.sc(j, i, k)) {
                        return Err(Violation::Antisymmetry { i, j, k });
                    }
                }
            }
        }
        // [b_i, [b_j, b_k]] + [b_j, [b_k, b_i]] + [b_k, [b_i, b_j]] = 0,
        // expanded through the table: sum_m c_{jk}^m c_{im}^l + cyclic.
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let mut acc = f.zero();
                        for m in 0..n {
                            let t1 = f.mul(self.sc(j, k, m), self.sc(i, m, l));
                            let t2 = f.mul(self.sc(k, i, m), self.sc(j, m, l));
                            let t3 = f.mul(self.sc(i, j, m), self.sc(k, m, l));
                            acc = f.add(acc, f.add(t1, f.add(t2, t3)));
                        }
                        if !acc.is_zero() {
                            return Err(Violation::Jacobi { i, j, k });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn field_arc(&self) -> Arc<Field> {
        self.field.clone()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn sc(&self, i: usize, j: usize, k: usize) -> FieldElement {
        self.sc[(i * self.dim + j) * self.dim + k]
    }

    /// Number of elements, q^n.
    pub fn element_count(&self) -> u128 {
        (self.field.q() as u128).pow(self.dim as u32)
    }

    pub fn zero_element(&self) -> Element {
        Element { coords: vec![self.field.zero(); self.dim] }
    }

    pub fn basis_element(&self, i: usize) -> Element {
        assert!(i < self.dim);
        let mut coords = vec![self.field.zero(); self.dim];
        coords[i] = self.field.one();
        Element { coords }
    }

    /// Element from coordinate indices in the field's canonical numbering.
    pub fn element_from_coords(&self, coords: &[u64]) -> Element {
        assert_eq!(coords.len(), self.dim);
        Element { coords: coords.iter().map(|&c| self.field.element(c)).collect() }
    }

    /// Canonical element index: base-q digits of the coordinates, coordinate
    /// 0 least significant. Index 0 is the zero element.
    pub fn index_of(&self, x: &Element) -> u64 {
        assert_eq!(x.coords.len(), self.dim);
        let q = self.field.q();
        let mut idx = 0u64;
        for c in x.coords.iter().rev() {
            idx = idx * q + c.index();
        }
        idx
    }

    pub fn element_from_index(&self, mut idx: u64) -> Element {
        let q = self.field.q();
        let mut coords = Vec::with_capacity(self.dim);
        for _ in 0..self.dim {
            coords.push(self.field.element(idx % q));
            idx /= q;
        }
        assert_eq!(idx, 0, "element index out of range");
        Element { coords }
    }

    /// All q^n elements in index order, refused above the element cap.
    pub fn enumerate_elements(&self, caps: Caps) -> Result<Vec<Element>, Error> {
        let count = self.element_count();
        if count > caps.max_elements as u128 {
            return Err(Error::TooManyElements { actual: count, cap: caps.max_elements });
        }
        Ok((0..count as u64).map(|i| self.element_from_index(i)).collect())
    }

    pub fn add(&self, x: &Element, y: &Element) -> Element {
        let f = &*self.field;
        Element { coords: x.coords.iter().zip(&y.coords).map(|(&a, &b)| f.add(a, b)).collect() }
    }

    pub fn neg(&self, x: &Element) -> Element {
        let f = &*self.field;
        Element { coords: x.coords.iter().map(|&a| f.neg(a)).collect() }
    }

    pub fn sub(&self, x: &Element, y: &Element) -> Element {
        self.add(x, &self.neg(y))
    }

    pub fn scale(&self, c: FieldElement, x: &Element) -> Element {
        let f = &*self.field;
        Element { coords: x.coords.iter().map(|&a| f.mul(c, a)).collect() }
    }

    /// [x, y], extended bilinearly from the table.
    pub fn bracket(&self, x: &Element, y: &Element) -> Element {
        assert_eq!(x.coords.len(), self.dim, "element does not belong to this algebra");
        assert_eq!(y.coords.len(), self.dim, "element does not belong to this algebra");
        let f = &*self.field;
        let n = self.dim;
        let mut out = vec![f.zero(); n];
        for i in 0..n {
            let xi = x.coords[i];
            if xi.is_zero() {
                continue;
            }
            for j in 0..n {
                let yj = y.coords[j];
                if yj.is_zero() {
                    continue;
                }
                let s = f.mul(xi, yj);
                for k in 0..n {
                    let c = self.sc(i, j, k);
                    if !c.is_zero() {
                        out[k] = f.add(out[k], f.mul(s, c));
                    }
                }
            }
        }
        Element { coords: out }
    }

    /// Matrix of ad x acting on the right, (ad x)(y) = [y, x]: column j holds
    /// the coordinates of [b_j, x], so ad_matrix(x) * coords(y) = coords([y, x]).
    pub fn ad_matrix(&self, x: &Element) -> Mat {
        let f = &*self.field;
        let n = self.dim;
        let mut m = Mat::zeros(f, n, n);
        for j in 0..n {
            let col = self.bracket(&self.basis_element(j), x);
            for k in 0..n {
                m.set(k, j, col.coords[k]);
            }
        }
        m
    }

    pub fn span(&self, elems: &[Element]) -> Subspace {
        let rows: Vec<Vec<FieldElement>> = elems.iter().map(|e| e.coords.clone()).collect();
        Subspace::span(&self.field, self.dim, &rows)
    }

    pub fn full_space(&self) -> Subspace {
        Subspace::full(&self.field, self.dim)
    }

    pub fn member(&self, s: &Subspace, x: &Element) -> bool {
        s.contains(&self.field, &x.coords)
    }

    /// Elements of a subspace, as Elements, in the coefficient-odometer order
    /// of [`Subspace::vectors`].
    pub fn subspace_elements(&self, s: &Subspace) -> Vec<Element> {
        s.vectors(&self.field).into_iter().map(|coords| Element { coords }).collect()
    }

    /// span{ [s, t] : s in S, t in T }, computed over basis pairs.
    pub fn bracket_space(&self, s: &Subspace, t: &Subspace) -> Subspace {
        let mut products = Vec::new();
        for i in 0..s.dim() {
            let si = Element { coords: s.basis().row(i).to_vec() };
            for j in 0..t.dim() {
                let tj = Element { coords: t.basis().row(j).to_vec() };
                products.push(self.bracket(&si, &tj).coords);
            }
        }
        Subspace::span(&self.field, self.dim, &products)
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        s.contains_subspace(&self.field, &self.bracket_space(s, s))
    }

    /// Smallest subalgebra containing the generators: grow span(gens) by
    /// bracket products until the dimension is stable. At most n rounds.
    pub fn subalgebra_closure(&self, gens: &[Element]) -> Subspace {
        self.closure_of_subspace(&self.span(gens))
    }

    pub fn closure_of_subspace(&self, s: &Subspace) -> Subspace {
        let mut cur = s.clone();
        loop {
            let products = self.bracket_space(&cur, &cur);
            let next = Subspace::sum(&self.field, &cur, &products);
            if next.dim() == cur.dim() {
                return cur;
            }
            cur = next;
        }
    }

    /// Quotient by an ideal. The quotient basis consists of the coset images
    /// of the basis vectors at J's pivot-free coordinates; the projection
    /// reduces an element by J's basis and keeps those coordinates.
    pub fn quotient(&self, j: &Subspace) -> Result<(LieAlgebra, Projection), Error> {
        if !self.is_ideal(j) {
            return Err(Error::NotAnIdeal);
        }
        let f = &*self.field;
        let keep = j.free_columns();
        let m = keep.len();
        let proj = Projection { ideal: j.clone(), keep: keep.clone(), source_dim: self.dim };
        let labels: Vec<String> = keep.iter().map(|&c| self.labels[c].clone()).collect();
        let mut sc = vec![f.zero(); m * m * m];
        for a in 0..m {
            for b in 0..m {
                let br = self.bracket(&self.basis_element(keep[a]), &self.basis_element(keep[b]));
                let img = proj.apply_coords(f, &br.coords);
                for c in 0..m {
                    sc[(a * m + b) * m + c] = img[c];
                }
            }
        }
        let alg = LieAlgebra::new(self.field.clone(), labels, sc)?;
        Ok((alg, proj))
    }

    /// Render coordinates as a tuple of field-element indices, "(1,0,2)".
    pub fn render_element(&self, x: &Element) -> String {
        let parts: Vec<String> = x.coords.iter().map(|c| c.index().to_string()).collect();
        format!("({})", parts.join(","))
    }

    /// Render an element as a combination of labeled basis vectors.
    pub fn render_combination(&self, x: &Element) -> String {
        let f = &*self.field;
        let mut parts = Vec::new();
        for (i, &c) in x.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if c == f.one() {
                parts.push(self.labels[i].clone());
            } else if f.k() == 1 {
                parts.push(format!("{}*{}", c.index(), self.labels[i]));
            } else {
                parts.push(format!("({})*{}", f.render(c), self.labels[i]));
            }
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join("+")
        }
    }
}

/// The coset map L -> L/J produced by [`LieAlgebra::quotient`].
#[derive(Clone, Debug)]
pub struct Projection {
    ideal: Subspace,
    keep: Vec<usize>,
    source_dim: usize,
}

impl Projection {
    pub fn ideal(&self) -> &Subspace {
        &self.ideal
    }

    /// Coordinates kept from the source algebra, one per quotient basis vector.
    pub fn kept_columns(&self) -> &[usize] {
        &self.keep
    }

    fn apply_coords(&self, f: &Field, coords: &[FieldElement]) -> Vec<FieldElement> {
        let reduced = self.ideal.reduce(f, coords);
        self.keep.iter().map(|&c| reduced[c]).collect()
    }

    pub fn apply(&self, source: &LieAlgebra, x: &Element) -> Element {
        assert_eq!(x.coords.len(), self.source_dim);
        Element { coords: self.apply_coords(source.field(), &x.coords) }
    }
}

/// L1 (+) L2 with block structure constants and zero cross brackets.
/// Labels are suffixed ".1" and ".2" so the two copies stay readable.
pub struct DirectSum {
    pub algebra: LieAlgebra,
    pub left_dim: usize,
    pub right_dim: usize,
}

pub fn direct_sum(l1: &LieAlgebra, l2: &LieAlgebra) -> Result<DirectSum, Error> {
    if l1.field().q() != l2.field().q() {
        return Err(Error::MixedFields);
    }
    let f = l1.field_arc();
    let (n1, n2) = (l1.dim(), l2.dim());
    let n = n1 + n2;
    let mut labels: Vec<String> = l1.labels().iter().map(|l| format!("{}.1", l)).collect();
    labels.extend(l2.labels().iter().map(|l| format!("{}.2", l)));
    let mut sc = vec![f.zero(); n * n * n];
    for i in 0..n1 {
        for j in 0..n1 {
            for k in 0..n1 {
                sc[(i * n + j) * n + k] = l1.sc(i, j, k);
            }
        }
    }
    for i in 0..n2 {
        for j in 0..n2 {
            for k in 0..n2 {
                sc[((n1 + i) * n + (n1 + j)) * n + (n1 + k)] = l2.sc(i, j, k);
            }
        }
    }
    let algebra = LieAlgebra::new(f, labels, sc)?;
    Ok(DirectSum { algebra, left_dim: n1, right_dim: n2 })
}

impl DirectSum {
    pub fn embed_left(&self, x: &Element) -> Element {
        assert_eq!(x.coords().len(), self.left_dim);
        let f = self.algebra.field();
        let mut coords = x.coords().to_vec();
        coords.extend(vec![f.zero(); self.right_dim]);
        Element::from_coords(coords)
    }

    pub fn embed_right(&self, y: &Element) -> Element {
        assert_eq!(y.coords().len(), self.right_dim);
        let f = self.algebra.field();
        let mut coords = vec![f.zero(); self.left_dim];
        coords.extend_from_slice(y.coords());
        Element::from_coords(coords)
    }

    pub fn split(&self, x: &Element) -> (Element, Element) {
        assert_eq!(x.coords().len(), self.left_dim + self.right_dim);
        let left = Element::from_coords(x.coords()[..self.left_dim].to_vec());
        let right = Element::from_coords(x.coords()[self.left_dim..].to_vec());
        (left, right)
    }
}
