//! The acceptance gate: one test per shipped guarantee, each printing a
//! single PASS line when it holds. Frozen values are asserted exactly,
//! with zero tolerance; timing budgets are enforced with Instant.

use std::sync::Arc;
use std::time::{Duration, Instant};

use lienil::catalog::{direct_sum_pairs, standard_catalog};
use lienil::constructions::{sl, t, three_dim_example, two_dim_nonabelian, u};
use lienil::graph::{
    check_direct_sum_theorems, check_disconnection, check_t2_theorem, clique_lower_bound,
    clique_of_subalgebra, verify_degree_formula, CheckReport,
};
use lienil::io::algebra_from_str;
use lienil::linalg::enumerate_subspaces;
use lienil::{Caps, Error, Field, GraphKind, LieAlgebra, NilGraph, NilScanner, Subspace};

fn field(p: u64, k: u32) -> Arc<Field> {
    Arc::new(Field::new(p, k).unwrap())
}

fn assert_report(report: &CheckReport) {
    for item in &report.items {
        assert!(
            item.passed,
            "[{}] {}: {}",
            report.name,
            item.label,
            item.detail.as_deref().unwrap_or("failed")
        );
    }
}

fn sorted_member_indices(l: &LieAlgebra, s: &Subspace) -> Vec<u64> {
    let mut v: Vec<u64> = l.subspace_elements(s).iter().map(|e| l.index_of(e)).collect();
    v.sort_unstable();
    v
}

#[test]
fn criterion_1_t2_component_structure_within_budget() {
    let caps = Caps::default();
    let start = Instant::now();
    for q in [2u64, 3, 4, 5] {
        assert_report(&check_t2_theorem(q, caps).unwrap());
    }
    let small = start.elapsed();
    assert!(small < Duration::from_secs(5), "q in 2..=5 took {:?}", small);

    let start = Instant::now();
    assert_report(&check_t2_theorem(7, caps).unwrap());
    let large = start.elapsed();
    assert!(large < Duration::from_secs(60), "q = 7 took {:?}", large);

    println!(
        "criterion 1: t(2,F_q) has q+1 complete components of order q(q-1), \
         (q^2-q-1)-regular, q in {{2,3,4,5}} in {:?} and q=7 in {:?}: PASS",
        small, large
    );
}

#[test]
fn criterion_2_t2_f2_frozen_edge_sets() {
    let l = t(2, field(2, 1));
    let scanner = NilScanner::new(&l, Caps::default()).unwrap();
    let g = NilGraph::build(&scanner, GraphKind::Nilpotent).unwrap();
    assert_eq!(g.edges(), vec![(1, 4), (2, 7), (3, 6)]);

    // The same edge set under the labeling that lists the six vertices as
    // 1: E22, 2: E12, 3: E12+E22, 4: E11, 5: E11+E12, 6: E11+E12+E22.
    let listed = [
        l.element_from_coords(&[0, 0, 1]),
        l.element_from_coords(&[0, 1, 0]),
        l.element_from_coords(&[0, 1, 1]),
        l.element_from_coords(&[1, 0, 0]),
        l.element_from_coords(&[1, 1, 0]),
        l.element_from_coords(&[1, 1, 1]),
    ];
    let mut relabeled: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(a, b)| {
            let pos = |idx: u64| {
                1 + listed.iter().position(|e| l.index_of(e) == idx).expect("vertex is listed")
            };
            let (x, y) = (pos(a), pos(b));
            (x.min(y), x.max(y))
        })
        .collect();
    relabeled.sort_unstable();
    assert_eq!(relabeled, vec![(1, 4), (2, 6), (3, 5)]);

    let c = g.complement();
    assert_eq!(c.vertex_count(), 6);
    assert_eq!(c.edge_count(), 12);
    assert_eq!(c.components().kappa, 1);

    println!("criterion 2: frozen edge sets for t(2,F_2) and its complement: PASS");
}

#[test]
fn criterion_3_degree_identity_across_the_catalog() {
    let catalog = standard_catalog();
    assert_eq!(catalog.len(), 13);
    for entry in &catalog {
        let scanner = NilScanner::new(&entry.algebra, Caps::default()).unwrap();
        let g = NilGraph::build(&scanner, GraphKind::Nilpotent).unwrap();
        let report = verify_degree_formula(&scanner, &g);
        assert!(report.passed(), "degree identity fails in {}", entry.name);
    }
    println!(
        "criterion 3: deg(h) = |nil_L(h)| - |nil(L)| - 1 at every vertex of all {} catalog \
         algebras: PASS",
        catalog.len()
    );
}

#[test]
fn criterion_4_containment_chain_and_traceless_f5_core() {
    let caps = Caps::default();
    let catalog = standard_catalog();
    let mut saw_traceless_f5 = false;
    for entry in &catalog {
        let l = &entry.algebra;
        let scanner = NilScanner::new(l, caps).unwrap();
        let nil = scanner.nil_of_algebra().unwrap();
        let hyper = l.hypercenter();
        let engel = l.engel_elements(caps).unwrap();
        for idx in sorted_member_indices(l, &hyper) {
            assert!(nil.contains(idx), "Z*(L) escapes nil(L) in {}", entry.name);
        }
        for &m in nil.members() {
            assert!(
                l.member(&engel, &l.element_from_index(m)),
                "nil(L) escapes E(L) in {}",
                entry.name
            );
        }
        if entry.name == "sl(2,F5)" {
            assert_eq!(nil.members(), &[0], "nil(sl(2,F_5)) must be trivial");
            saw_traceless_f5 = true;
        }
    }
    assert!(saw_traceless_f5);
    println!(
        "criterion 4: Z*(L) within nil(L) within E(L) on all {} catalog algebras, and \
         nil(sl(2,F_5)) = 0: PASS",
        catalog.len()
    );
}

#[test]
fn criterion_5_direct_sum_laws() {
    let caps = Caps::default();
    let pairs = direct_sum_pairs();
    let mut connected_fired = 0;
    let mut kappa_fired = 0;
    let mut nil_product_fired = 0;
    for (name, a, b) in &pairs {
        assert!(
            a.element_count() * b.element_count() <= 1 << 10,
            "pair {} exceeds the exhaustive budget",
            name
        );
        let report = check_direct_sum_theorems(a, b, caps).unwrap();
        assert_report(&report);
        for item in &report.items {
            if item.skipped {
                continue;
            }
            if item.label.starts_with("nil of the sum") {
                nil_product_fired += 1;
            } else if item.label.starts_with("sum graph connected") {
                connected_fired += 1;
            } else if item.label.starts_with("nilpotent summand preserves") {
                kappa_fired += 1;
            }
        }
    }
    assert_eq!(nil_product_fired, pairs.len(), "nil product law must fire on every pair");
    assert!(connected_fired >= 1, "no pair exercised the connectivity law");
    assert!(kappa_fired >= 1, "no pair exercised component-count preservation");
    println!(
        "criterion 5: direct-sum nil product ({} pairs), connectivity ({}), component-count \
         preservation ({}): PASS",
        nil_product_fired, connected_fired, kappa_fired
    );
}

#[test]
fn criterion_6_strongly_self_centralizing_examples() {
    // (algebra, the designated subalgebra) for the three worked examples
    let cases: Vec<(&str, LieAlgebra, Vec<usize>)> = vec![
        ("two-dim nonabelian over F_2", two_dim_nonabelian(field(2, 1)), vec![0]),
        ("two-dim nonabelian over F_3", two_dim_nonabelian(field(3, 1)), vec![0]),
        ("three-dim example over F_2", three_dim_example(field(2, 1)), vec![0, 1]),
        ("three-dim example over F_3", three_dim_example(field(3, 1)), vec![0, 1]),
        ("diagonal of sl(2,F_3)", sl(2, field(3, 1)), vec![2]),
    ];
    for (name, l, basis_indices) in &cases {
        let u = l.span(&basis_indices.iter().map(|&i| l.basis_element(i)).collect::<Vec<_>>());
        let scanner = NilScanner::new(l, Caps::default()).unwrap();
        assert!(scanner.is_strongly_self_centralizing(&u), "{}", name);

        let members = sorted_member_indices(l, &u);
        for &x in members.iter().filter(|&&x| x != 0) {
            let set = scanner.nil_of_element_index(x);
            assert_eq!(set.members(), &members[..], "nil_L(x) != U in {}", name);
        }

        let g = NilGraph::build(&scanner, GraphKind::Nilpotent).unwrap();
        assert!(g.components().kappa >= 2, "{} graph is connected", name);
        assert_report(&check_disconnection(&scanner, &u).unwrap());
    }
    println!(
        "criterion 6: strongly self-centralizing subalgebras give nil_L(x) = U and a \
         disconnected graph on all {} examples: PASS",
        cases.len()
    );
}

#[test]
fn criterion_7_memoized_build_equals_naive_build() {
    let catalog = standard_catalog();
    for entry in &catalog {
        let fast = NilScanner::new(&entry.algebra, Caps::default()).unwrap();
        let slow = NilScanner::naive(&entry.algebra, Caps::default()).unwrap();
        let g1 = NilGraph::build(&fast, GraphKind::Nilpotent).unwrap();
        let g2 = NilGraph::build(&slow, GraphKind::Nilpotent).unwrap();
        assert_eq!(g1.vertices(), g2.vertices(), "{}", entry.name);
        assert_eq!(g1.edges(), g2.edges(), "{}", entry.name);
    }
    println!(
        "criterion 7: memoized and naive builds agree edge-for-edge on all {} catalog \
         algebras: PASS",
        catalog.len()
    );
}

#[test]
fn criterion_8_property_suite() {
    let caps = Caps::default();

    // (a) every construction validates
    let catalog = standard_catalog();
    for entry in &catalog {
        entry.algebra.validate().unwrap_or_else(|v| panic!("{} fails: {}", entry.name, v));
    }

    // (b) nonzero ideals of nilpotent algebras meet the center
    let heisenberg = algebra_from_str("field 3^1\ndim 3\nlabels x y z\nsc 1 2 3 1\n").unwrap();
    let nilpotent_roster: Vec<(&str, LieAlgebra)> = vec![
        ("u(2,F_2)", u(2, field(2, 1))),
        ("u(3,F_2)", u(3, field(2, 1))),
        ("u(4,F_2)", u(4, field(2, 1))),
        ("u(3,F_3)", u(3, field(3, 1))),
        ("sl(2,F_2)", sl(2, field(2, 1))),
        ("abelian dim 2 over F_3", LieAlgebra::abelian(field(3, 1), 2)),
        ("Heisenberg from text", heisenberg),
    ];
    let mut ideals_checked = 0;
    for (name, l) in &nilpotent_roster {
        l.validate().unwrap();
        assert!(l.is_nilpotent(&l.full_space()).unwrap(), "{} is not nilpotent", name);
        let center = l.center();
        let f = l.field();
        for s in enumerate_subspaces(f, l.dim(), caps.max_subspaces).unwrap() {
            if s.dim() == 0 || !l.is_ideal(&s) {
                continue;
            }
            let met = Subspace::intersect(f, &s, &center);
            assert!(met.dim() > 0, "a nonzero ideal of {} misses the center", name);
            ideals_checked += 1;
        }
    }
    assert!(ideals_checked > 50, "only {} ideals were checked", ideals_checked);

    // (c) quotient by the scalars is a bracket homomorphism, exhaustively
    let l = t(2, field(2, 1));
    let scalars = l.span(&[l.element_from_coords(&[1, 0, 1])]);
    let (q, proj) = l.quotient(&scalars).unwrap();
    for i in 0..l.element_count() as u64 {
        for j in 0..l.element_count() as u64 {
            let x = l.element_from_index(i);
            let y = l.element_from_index(j);
            let lhs = proj.apply(&l, &l.bracket(&x, &y));
            let rhs = q.bracket(&proj.apply(&l, &x), &proj.apply(&l, &y));
            assert_eq!(lhs.coords(), rhs.coords());
        }
    }

    // (d) no nilpotent graph in the catalog is a star
    for entry in &catalog {
        let scanner = NilScanner::new(&entry.algebra, Caps::default()).unwrap();
        let g = NilGraph::build(&scanner, GraphKind::Nilpotent).unwrap();
        assert!(!g.is_star(), "{} produced a star", entry.name);
    }

    // (e) every enumerated nilpotent subalgebra yields a clique, and the
    // nilradical count is below the clique lower bound
    for q in [2u64, 3] {
        let l = t(2, field(q, 1));
        let scanner = NilScanner::new(&l, Caps::default()).unwrap();
        let g = NilGraph::build(&scanner, GraphKind::Nilpotent).unwrap();
        let nil = scanner.nil_of_algebra().unwrap();
        let mut cliques = 0;
        for s in l.enumerate_subalgebras(caps).unwrap() {
            if s.is_zero() || !l.is_nilpotent(&s).unwrap() {
                continue;
            }
            let outside: Vec<u64> = sorted_member_indices(&l, &s)
                .into_iter()
                .filter(|&i| !nil.contains(i))
                .collect();
            match clique_of_subalgebra(&scanner, &g, &s) {
                Ok(found) => {
                    assert_eq!(found, outside);
                    cliques += 1;
                }
                Err(Error::InsideNil) => assert!(outside.is_empty()),
                Err(e) => panic!("unexpected error for a nilpotent subalgebra: {}", e),
            }
        }
        assert!(cliques > 0, "no clique-bearing subalgebra found over q = {}", q);
        let radical = l.nilradical(caps).unwrap();
        let radical_outside = sorted_member_indices(&l, &radical)
            .into_iter()
            .filter(|&i| !nil.contains(i))
            .count();
        assert!(radical_outside <= clique_lower_bound(&scanner, &g).unwrap());
    }

    println!(
        "criterion 8: validation, central ideals ({} checked), quotient homomorphism, no \
         stars, cliques from nilpotent subalgebras: PASS",
        ideals_checked
    );
}
