//! Exact arithmetic in GF(p^k).
//!
//! Elements are residue polynomials of degree < k over GF(p), stored by their
//! canonical index sum(coeffs[i] * p^i); index 0 is zero, index 1 is one.
//! For k > 1 the modulus is the lexicographically smallest monic irreducible
//! polynomial of degree k, comparing coefficient vectors low-degree-first, so
//! a field is determined by (p, k) alone and indices are reproducible.

use crate::error::Error;

/// Largest field order accepted by [`Field::new`].
pub const DEFAULT_ORDER_CAP: u64 = 1 << 16;

/// Field orders up to this get full addition/multiplication lookup tables.
const TABLE_LIMIT: u64 = 256;

/// An element of a specific finite field, tagged with the field order so that
/// mixing elements of different fields is caught at use.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FieldElement {
    q: u32,
    idx: u32,
}

impl FieldElement {
    /// Canonical index in [0, q).
    pub fn index(self) -> u64 {
        self.idx as u64
    }

    pub fn is_zero(self) -> bool {
        self.idx == 0
    }
}

/// GF(p^k) with reproducible element indexing.
#[derive(Debug)]
pub struct Field {
    p: u64,
    k: u32,
    q: u64,
    /// Monic modulus of degree k, low-degree-first, length k+1. Empty when k == 1.
    modulus: Vec<u64>,
    add_t: Option<Vec<u32>>,
    mul_t: Option<Vec<u32>>,
    inv_t: Option<Vec<u32>>,
    neg_t: Vec<u32>,
}

impl Field {
    pub fn new(p: u64, k: u32) -> Result<Field, Error> {
        Field::with_cap(p, k, DEFAULT_ORDER_CAP)
    }

    pub fn with_cap(p: u64, k: u32, cap: u64) -> Result<Field, Error> {
        if k == 0 {
            return Err(Error::ZeroDegree);
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let cap = cap.min(u32::MAX as u64);
        let mut q: u128 = 1;
        for _ in 0..k {
            q *= p as u128;
            if q > cap as u128 {
                return Err(Error::FieldTooLarge { q, cap });
            }
        }
        let q = q as u64;
        let modulus = if k == 1 { Vec::new() } else { smallest_irreducible(p, k) };
        let mut f = Field { p, k, q, modulus, add_t: None, mul_t: None, inv_t: None, neg_t: Vec::new() };
        f.neg_t = (0..q).map(|i| f.neg_raw(i) as u32).collect();
        if q <= TABLE_LIMIT {
            let mut add_t = vec![0u32; (q * q) as usize];
            let mut mul_t = vec![0u32; (q * q) as usize];
            let mut inv_t = vec![0u32; q as usize];
            for a in 0..q {
                for b in 0..q {
                    add_t[(a * q + b) as usize] = f.add_raw(a, b) as u32;
                    mul_t[(a * q + b) as usize] = f.mul_raw(a, b) as u32;
                }
                if a != 0 {
                    inv_t[a as usize] = f.inv_raw(a) as u32;
                }
            }
            f.add_t = Some(add_t);
            f.mul_t = Some(mul_t);
            f.inv_t = Some(inv_t);
        }
        Ok(f)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Field order q = p^k.
    pub fn q(&self) -> u64 {
        self.q
    }

    /// Modulus coefficients (low-degree-first, monic, length k+1); empty for prime fields.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { q: self.q as u32, idx: 0 }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement { q: self.q as u32, idx: 1 }
    }

    pub fn element(&self, idx: u64) -> FieldElement {
        assert!(idx < self.q, "element index {} out of range for field of order {}", idx, self.q);
        FieldElement { q: self.q as u32, idx: idx as u32 }
    }

    /// Element with the given polynomial coefficients (low-degree-first).
    /// Coefficients are reduced mod p; at most k may be given.
    pub fn from_coeffs(&self, coeffs: &[u64]) -> FieldElement {
        assert!(coeffs.len() <= self.k as usize, "too many coefficients for GF({}^{})", self.p, self.k);
        let mut idx = 0u64;
        for (i, &c) in coeffs.iter().enumerate() {
            idx += (c % self.p) * self.p.pow(i as u32);
        }
        self.element(idx)
    }

    /// Polynomial coefficients of an element, low-degree-first, length k.
    pub fn coeffs(&self, a: FieldElement) -> Vec<u64> {
        self.check(a);
        let mut v = Vec::with_capacity(self.k as usize);
        let mut rest = a.idx as u64;
        for _ in 0..self.k {
            v.push(rest % self.p);
            rest /= self.p;
        }
        v
    }

    /// All q elements in canonical index order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        let q = self.q as u32;
        (0..q).map(move |idx| FieldElement { q, idx })
    }

    fn check(&self, a: FieldElement) {
        assert_eq!(a.q as u64, self.q, "element of GF({}) used with GF({})", a.q, self.q);
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.check(a);
        self.check(b);
        let idx = match &self.add_t {
            Some(t) => t[(a.idx as u64 * self.q + b.idx as u64) as usize] as u64,
            None => self.add_raw(a.idx as u64, b.idx as u64),
        };
        FieldElement { q: self.q as u32, idx: idx as u32 }
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        self.check(a);
        FieldElement { q: self.q as u32, idx: self.neg_t[a.idx as usize] }
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.check(a);
        self.check(b);
        let idx = match &self.mul_t {
            Some(t) => t[(a.idx as u64 * self.q + b.idx as u64) as usize] as u64,
            None => self.mul_raw(a.idx as u64, b.idx as u64),
        };
        FieldElement { q: self.q as u32, idx: idx as u32 }
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement, Error> {
        self.check(a);
        if a.idx == 0 {
            return Err(Error::InverseOfZero);
        }
        let idx = match &self.inv_t {
            Some(t) => t[a.idx as usize] as u64,
            None => self.inv_raw(a.idx as u64),
        };
        Ok(FieldElement { q: self.q as u32, idx: idx as u32 })
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement, Error> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Render an element for humans: prime fields as the residue, extension
    /// fields as a polynomial in x.
    pub fn render(&self, a: FieldElement) -> String {
        self.check(a);
        if self.k == 1 {
            return a.idx.to_string();
        }
        let coeffs = self.coeffs(a);
        let mut parts = Vec::new();
        for (i, &c) in coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let var = match i {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{}", i),
            };
            let part = match (c, i) {
                (_, 0) => c.to_string(),
                (1, _) => var,
                _ => format!("{}{}", c, var),
            };
            parts.push(part);
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join("+")
        }
    }

    fn decode(&self, mut idx: u64) -> Vec<u64> {
        let mut v = vec![0u64; self.k as usize];
        for c in v.iter_mut() {
            *c = idx % self.p;
            idx /= self.p;
        }
        v
    }

    fn encode(&self, coeffs: &[u64]) -> u64 {
        let mut idx = 0u64;
        for &c in coeffs.iter().rev() {
            idx = idx * self.p + c;
        }
        idx
    }

    fn add_raw(&self, a: u64, b: u64) -> u64 {
        if self.k == 1 {
            return (a + b) % self.p;
        }
        let (va, vb) = (self.decode(a), self.decode(b));
        let sum: Vec<u64> = va.iter().zip(&vb).map(|(x, y)| (x + y) % self.p).collect();
        self.encode(&sum)
    }

    fn neg_raw(&self, a: u64) -> u64 {
        if self.k == 1 {
            return (self.p - a % self.p) % self.p;
        }
        let va = self.decode(a);
        let neg: Vec<u64> = va.iter().map(|x| (self.p - x) % self.p).collect();
        self.encode(&neg)
    }

    fn mul_raw(&self, a: u64, b: u64) -> u64 {
        if self.k == 1 {
            return (a * b) % self.p;
        }
        let (va, vb) = (self.decode(a), self.decode(b));
        let prod = poly_mul(&va, &vb, self.p);
        let rem = poly_rem(&prod, &self.modulus, self.p);
        let mut coeffs = vec![0u64; self.k as usize];
        coeffs[..rem.len()].copy_from_slice(&rem);
        self.encode(&coeffs)
    }

    fn inv_raw(&self, a: u64) -> u64 {
        if self.k == 1 {
            let (g, s, _) = ext_gcd(a as i128, self.p as i128);
            assert_eq!(g, 1);
            return (s.rem_euclid(self.p as i128)) as u64;
        }
        let va = poly_trim(&self.decode(a));
        let inv = poly_inv_mod(&va, &self.modulus, self.p);
        let mut coeffs = vec![0u64; self.k as usize];
        coeffs[..inv.len()].copy_from_slice(&inv);
        self.encode(&coeffs)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Polynomials over GF(p) as coefficient vectors, low-degree-first, no
/// trailing zeros (the zero polynomial is the empty vector).
fn poly_trim(v: &[u64]) -> Vec<u64> {
    let mut v = v.to_vec();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    poly_trim(&out)
}

/// Remainder of a by the monic polynomial m.
fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    assert_eq!(*m.last().unwrap(), 1, "modulus must be monic");
    let mut r = poly_trim(a);
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        for (i, &mc) in m.iter().enumerate() {
            let pos = shift + i;
            r[pos] = (r[pos] + (p - lead % p) * mc) % p;
        }
        r = poly_trim(&r);
    }
    r
}

fn poly_divmod(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let b = poly_trim(b);
    assert!(!b.is_empty(), "polynomial division by zero");
    let lead_inv = scalar_inv(*b.last().unwrap(), p);
    let mut r = poly_trim(a);
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut quot = vec![0u64; r.len() - b.len() + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let coef = (*r.last().unwrap() * lead_inv) % p;
        let shift = r.len() - b.len();
        quot[shift] = coef;
        for (i, &bc) in b.iter().enumerate() {
            let pos = shift + i;
            r[pos] = (r[pos] + (p - (coef * bc) % p)) % p;
        }
        r = poly_trim(&r);
    }
    (poly_trim(&quot), r)
}

fn scalar_inv(a: u64, p: u64) -> u64 {
    let (g, s, _) = ext_gcd(a as i128, p as i128);
    assert_eq!(g, 1);
    s.rem_euclid(p as i128) as u64
}

fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, s, t) = ext_gcd(b, a % b);
        (g, t, s - (a / b) * t)
    }
}

/// Inverse of a modulo the monic polynomial m, via the extended Euclidean
/// algorithm in GF(p)[x].
fn poly_inv_mod(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    // Invariants: r0 = s0*a (mod m), r1 = s1*a (mod m).
    let mut r0 = m.to_vec();
    let mut r1 = poly_trim(a);
    let mut s0: Vec<u64> = Vec::new();
    let mut s1: Vec<u64> = vec![1];
    while !r1.is_empty() {
        let (quot, rem) = poly_divmod(&r0, &r1, p);
        let qs = poly_mul(&quot, &s1, p);
        let s_new = poly_sub(&s0, &qs, p);
        r0 = std::mem::replace(&mut r1, rem);
        s0 = std::mem::replace(&mut s1, s_new);
    }
    assert_eq!(r0.len(), 1, "element not invertible: gcd has positive degree");
    let scale = scalar_inv(r0[0], p);
    let inv: Vec<u64> = s0.iter().map(|&c| (c * scale) % p).collect();
    poly_rem(&poly_trim(&inv), m, p)
}

fn poly_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out = vec![0u64; n];
    for i in 0..n {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        out[i] = (x + p - y % p) % p;
    }
    poly_trim(&out)
}

/// Irreducibility over GF(p) by trial division: no monic divisor of degree
/// 1..=deg/2 divides f.
fn poly_is_irreducible(f: &[u64], p: u64) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        let count = p.pow(d as u32);
        for m in 0..count {
            let mut g = vec![0u64; d + 1];
            let mut rest = m;
            for c in g.iter_mut().take(d) {
                *c = rest % p;
                rest /= p;
            }
            g[d] = 1;
            if poly_rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Lexicographically smallest monic irreducible of degree k over GF(p),
/// comparing coefficient vectors (c0, c1, ..., c_{k-1}) left to right.
fn smallest_irreducible(p: u64, k: u32) -> Vec<u64> {
    let k = k as usize;
    let total = p.pow(k as u32);
    for m in 0..total {
        // Digit d_{k-1}..d_0 of m maps to c_0..c_{k-1}: increasing m walks
        // the candidate list in low-degree-first lexicographic order.
        let mut f = vec![0u64; k + 1];
        let mut rest = m;
        for i in (0..k).rev() {
            f[k - 1 - i] = rest / p.pow(i as u32);
            rest %= p.pow(i as u32);
        }
        f[k] = 1;
        if poly_is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("an irreducible polynomial of each degree exists over every prime field")
}
