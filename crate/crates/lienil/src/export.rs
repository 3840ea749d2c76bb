//! Graph and nil-set exports: DOT, JSON (schema 1), CSV. Every export
//! uses canonical element-index ordering, so repeated runs of the same
//! input are byte-identical.

use serde::Serialize;

use crate::algebra::LieAlgebra;
use crate::graph::{GraphKind, NilGraph};
use crate::nilpotentizer::NilSet;

fn kind_name(kind: GraphKind) -> &'static str {
    match kind {
        GraphKind::Nilpotent => "nilpotent",
        GraphKind::Complement => "complement",
    }
}

fn label_of(l: &LieAlgebra, index: u64) -> String {
    l.render_combination(&l.element_from_index(index))
}

/// Graphviz source with vertices labeled as basis combinations.
pub fn graph_dot(l: &LieAlgebra, g: &NilGraph) -> String {
    let mut out = String::new();
    out.push_str(&format!("graph {} {{\n", kind_name(g.kind())));
    out.push_str("  node [shape=ellipse];\n");
    for &v in g.vertices() {
        out.push_str(&format!("  v{} [label=\"{}\"];\n", v, label_of(l, v).replace('"', "\\\"")));
    }
    for (a, b) in g.edges() {
        out.push_str(&format!("  v{} -- v{};\n", a, b));
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize)]
struct FieldDoc {
    p: u64,
    k: u32,
    q: u64,
}

fn field_doc(l: &LieAlgebra) -> FieldDoc {
    let f = l.field();
    FieldDoc { p: f.p(), k: f.k(), q: f.q() }
}

#[derive(Serialize)]
struct GraphDoc<'a> {
    schema: u32,
    kind: &'static str,
    field: FieldDoc,
    dim: usize,
    labels: &'a [String],
    nil: &'a [u64],
    vertices: &'a [u64],
    vertex_labels: Vec<String>,
    edges: Vec<(u64, u64)>,
    kappa: usize,
    component_sizes: Vec<usize>,
    degree_sequence: Vec<usize>,
    regular_degree: Option<usize>,
}

pub fn graph_json(l: &LieAlgebra, g: &NilGraph) -> String {
    let summary = g.components();
    let doc = GraphDoc {
        schema: 1,
        kind: kind_name(g.kind()),
        field: field_doc(l),
        dim: l.dim(),
        labels: l.labels(),
        nil: g.nil_members(),
        vertices: g.vertices(),
        vertex_labels: g.vertices().iter().map(|&v| label_of(l, v)).collect(),
        edges: g.edges(),
        kappa: summary.kappa,
        component_sizes: summary.sizes,
        degree_sequence: summary.degree_sequence,
        regular_degree: summary.regular_degree,
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("graph document serializes");
    s.push('\n');
    s
}

/// Edge list by element index.
pub fn graph_csv(g: &NilGraph) -> String {
    let mut out = String::from("source,target\n");
    for (a, b) in g.edges() {
        out.push_str(&format!("{},{}\n", a, b));
    }
    out
}

#[derive(Serialize)]
struct NilDoc<'a> {
    schema: u32,
    field: FieldDoc,
    dim: usize,
    labels: &'a [String],
    /// Coordinates of the element whose nil set this is; absent for nil(L).
    element: Option<Vec<u64>>,
    members: Vec<Vec<u64>>,
    count: usize,
    is_subspace: bool,
    span_dim: usize,
}

/// Machine-readable nil set: members as coordinate vectors.
pub fn nil_set_json(l: &LieAlgebra, element: Option<&crate::algebra::Element>, set: &NilSet) -> String {
    let coords_of = |idx: u64| -> Vec<u64> {
        l.element_from_index(idx).coords().iter().map(|c| c.index()).collect()
    };
    let doc = NilDoc {
        schema: 1,
        field: field_doc(l),
        dim: l.dim(),
        labels: l.labels(),
        element: element.map(|e| e.coords().iter().map(|c| c.index()).collect()),
        members: set.members().iter().map(|&m| coords_of(m)).collect(),
        count: set.len(),
        is_subspace: set.is_subspace(),
        span_dim: set.span().dim(),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("nil document serializes");
    s.push('\n');
    s
}

/// One-line graph summary, e.g.
/// `24 vertices, 60 edges, κ=4, sizes=[6,6,6,6], 5-regular`.
pub fn summary_line(g: &NilGraph) -> String {
    let summary = g.components();
    let sizes: Vec<String> = summary.sizes.iter().map(|s| s.to_string()).collect();
    let mut line = format!(
        "{} vertices, {} edges, κ={}, sizes=[{}]",
        g.vertex_count(),
        g.edge_count(),
        summary.kappa,
        sizes.join(",")
    );
    if let Some(d) = summary.regular_degree {
        line.push_str(&format!(", {}-regular", d));
    }
    line
}
