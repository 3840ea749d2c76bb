//! The built-in algebra catalog the verification suites and the search
//! command run over. Small by design: everything here is exhaustively
//! checkable in seconds.

use std::sync::Arc;

use crate::algebra::{direct_sum, LieAlgebra};
use crate::constructions::{gl, sl, t, three_dim_example, two_dim_nonabelian, u};
use crate::field::Field;

pub struct CatalogEntry {
    pub name: String,
    pub algebra: LieAlgebra,
}

fn fq(p: u64, k: u32) -> Arc<Field> {
    Arc::new(Field::new(p, k).expect("catalog fields are valid"))
}

/// The standard algebras: triangular families over small fields, the two
/// rank-2 classical families, the two tiny solvable examples, and one
/// direct sum.
pub fn standard_catalog() -> Vec<CatalogEntry> {
    let entry = |name: &str, algebra: LieAlgebra| CatalogEntry { name: name.to_string(), algebra };
    vec![
        entry("t(2,F2)", t(2, fq(2, 1))),
        entry("t(2,F3)", t(2, fq(3, 1))),
        entry("t(2,F4)", t(2, fq(2, 2))),
        entry("t(2,F5)", t(2, fq(5, 1))),
        entry("gl(2,F2)", gl(2, fq(2, 1))),
        entry("t(3,F2)", t(3, fq(2, 1))),
        entry("sl(2,F3)", sl(2, fq(3, 1))),
        entry("sl(2,F5)", sl(2, fq(5, 1))),
        entry("aff1(F2)", two_dim_nonabelian(fq(2, 1))),
        entry("aff1(F3)", two_dim_nonabelian(fq(3, 1))),
        entry("ex3d(F2)", three_dim_example(fq(2, 1))),
        entry("ex3d(F3)", three_dim_example(fq(3, 1))),
        entry(
            "u(3,F2)+t(2,F2)",
            direct_sum(&u(3, fq(2, 1)), &t(2, fq(2, 1))).expect("same field").algebra,
        ),
    ]
}

/// Pairs for the direct-sum law suite. Mixes both-non-nilpotent pairs
/// (connectivity) with one-nilpotent pairs (component-count preservation).
/// Every pair has at most 2^10 elements, so the checks stay exhaustive.
pub fn direct_sum_pairs() -> Vec<(String, LieAlgebra, LieAlgebra)> {
    let pair = |name: &str, a: LieAlgebra, b: LieAlgebra| (name.to_string(), a, b);
    vec![
        pair("aff1(F2)+aff1(F2)", two_dim_nonabelian(fq(2, 1)), two_dim_nonabelian(fq(2, 1))),
        pair("t(2,F2)+u(3,F2)", t(2, fq(2, 1)), u(3, fq(2, 1))),
        pair("t(2,F2)+u(2,F2)", t(2, fq(2, 1)), u(2, fq(2, 1))),
        pair("t(2,F2)+t(2,F2)", t(2, fq(2, 1)), t(2, fq(2, 1))),
        pair("aff1(F3)+u(2,F3)", two_dim_nonabelian(fq(3, 1)), u(2, fq(3, 1))),
        pair("aff1(F3)+aff1(F3)", two_dim_nonabelian(fq(3, 1)), two_dim_nonabelian(fq(3, 1))),
        pair("ex3d(F2)+u(2,F2)", three_dim_example(fq(2, 1)), u(2, fq(2, 1))),
        pair("t(2,F3)+u(3,F3)", t(2, fq(3, 1)), u(3, fq(3, 1))),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_entries_are_valid_and_small() {
        let entries = standard_catalog();
        assert_eq!(entries.len(), 13);
        for e in &entries {
            assert!(e.algebra.validate().is_ok(), "{} failed validation", e.name);
            assert!(e.algebra.element_count() <= 4096, "{} too large", e.name);
        }
    }

    #[test]
    fn pair_catalog_fits_exhaustive_budget() {
        let pairs = direct_sum_pairs();
        assert_eq!(pairs.len(), 8);
        for (name, a, b) in &pairs {
            assert_eq!(a.field().q(), b.field().q(), "{} mixes fields", name);
            assert!(a.element_count() * b.element_count() <= 1024, "{} too large", name);
        }
        // Both law shapes are represented.
        let nilp = |l: &LieAlgebra| l.is_nilpotent(&l.full_space()).unwrap();
        assert!(pairs.iter().any(|(_, a, b)| !nilp(a) && !nilp(b)));
        assert!(pairs.iter().any(|(_, a, b)| nilp(a) ^ nilp(b)));
    }
}
