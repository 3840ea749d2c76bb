//! `lienil`: build nilpotent graphs of finite Lie algebras, print nil
//! sets, run the verification suites, and scan the catalog for the open
//! questions.
//!
//! Exit codes: 0 success, 1 a verification assertion failed, 2 bad
//! arguments or input, 3 a cap was exceeded.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use lienil::catalog::{direct_sum_pairs, standard_catalog};
use lienil::export;
use lienil::graph::{
    check_direct_sum_theorems, check_t2_theorem, verify_degree_formula, CheckReport,
};
use lienil::io::{algebra_from_file, parse_algebra_spec, parse_field};
use lienil::{
    Caps, Element, Error, GraphKind, LieAlgebra, NilGraph, NilLawReport, NilScanner,
};

#[derive(Parser)]
#[command(name = "lienil", version, about = "Nilpotent graphs of Lie algebras over finite fields")]
struct Cli {
    /// Worker threads for graph builds (1 = fully sequential).
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,

    /// Recompute every pair from scratch instead of using memoized,
    /// symmetry-reduced scans. Same results, much slower.
    #[arg(long, global = true)]
    naive: bool,

    /// Refuse algebras with more than this many elements.
    #[arg(long, global = true, default_value_t = 4096)]
    max_elements: u64,

    /// Refuse subspace enumerations past this many subspaces.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    max_subspaces: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, ValueEnum)]
enum KindArg {
    Nilpotent,
    Complement,
}

#[derive(Subcommand)]
enum Command {
    /// Build the nilpotent graph or its complement and export/summarize it
    Graph {
        /// Algebra spec: gl:n, t:n, u:n, sl:n, aff1, ex3d, file:path, sums with +
        #[arg(long)]
        algebra: String,
        /// Field spec p^k (required for named algebras)
        #[arg(long)]
        field: Option<String>,
        #[arg(long, value_enum, default_value = "nilpotent")]
        kind: KindArg,
        /// Repeatable: dot:path, json:path, or csv:path
        #[arg(long)]
        export: Vec<String>,
        /// Print only the one-line summary
        #[arg(long)]
        summary: bool,
    },
    /// Print nil(L), or nil_L(x) for a given element
    Nil {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        field: Option<String>,
        /// Element coordinates as comma-separated canonical indices, e.g. 1,0,2
        #[arg(long)]
        element: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Run a verification suite; exits 1 if any assertion fails
    Verify {
        #[command(subcommand)]
        suite: Suite,
    },
    /// Report open-question indicators over the catalog
    Search {
        /// Extra algebra definition files to include
        #[arg(long)]
        file: Vec<PathBuf>,
    },
}

#[derive(Subcommand)]
enum Suite {
    /// Component structure of t(2, F_q)
    T2 {
        /// Prime powers to check
        #[arg(long, value_delimiter = ',', default_values_t = vec![2u64, 3, 4, 5])]
        q: Vec<u64>,
    },
    /// Direct-sum laws over the built-in pair catalog
    Sums,
    /// Nil-set laws for one algebra over its central ideals, plus the
    /// degree identity on its graph
    Lemmas {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        field: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads)
        .build_global()
        .expect("rayon pool is initialized once");
    let caps = Caps { max_elements: cli.max_elements, max_subspaces: cli.max_subspaces };
    match run(&cli, caps) {
        Ok(all_passed) => {
            if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn run(cli: &Cli, caps: Caps) -> Result<bool, Error> {
    match &cli.command {
        Command::Graph { algebra, field, kind, export, summary } => {
            let l = load_algebra(algebra, field)?;
            let scanner = new_scanner(&l, caps, cli.naive)?;
            let g = NilGraph::build(
                &scanner,
                match kind {
                    KindArg::Nilpotent => GraphKind::Nilpotent,
                    KindArg::Complement => GraphKind::Complement,
                },
            )?;
            for spec in export {
                write_export(&l, &g, spec)?;
            }
            if *summary {
                println!("{}", export::summary_line(&g));
            } else {
                print_graph_details(&g);
            }
            Ok(true)
        }
        Command::Nil { algebra, field, element, json } => {
            let l = load_algebra(algebra, field)?;
            let scanner = new_scanner(&l, caps, cli.naive)?;
            let chosen = element.as_deref().map(|e| parse_element(&l, e)).transpose()?;
            let set = match &chosen {
                Some(x) => scanner.nil_of_element(x),
                None => scanner.nil_of_algebra()?,
            };
            if *json {
                print!("{}", export::nil_set_json(&l, chosen.as_ref(), &set));
            } else {
                match &chosen {
                    Some(x) => println!("nil_L(h) for h = {}:", l.render_element(x)),
                    None => println!("nil(L):"),
                }
                for &m in set.members() {
                    let e = l.element_from_index(m);
                    println!("  {}  {}", l.render_element(&e), l.render_combination(&e));
                }
                println!(
                    "{} members, subspace: {} (span dimension {})",
                    set.len(),
                    if set.is_subspace() { "yes" } else { "no" },
                    set.span().dim()
                );
            }
            Ok(true)
        }
        Command::Verify { suite } => run_verify(cli, suite, caps),
        Command::Search { file } => run_search(cli, file, caps),
    }
}

fn load_algebra(spec: &str, field: &Option<String>) -> Result<LieAlgebra, Error> {
    let field = field.as_deref().map(parse_field).transpose()?;
    parse_algebra_spec(spec, field.as_ref())
}

fn new_scanner<'a>(l: &'a LieAlgebra, caps: Caps, naive: bool) -> Result<NilScanner<'a>, Error> {
    if naive {
        NilScanner::naive(l, caps)
    } else {
        NilScanner::new(l, caps)
    }
}

fn parse_element(l: &LieAlgebra, text: &str) -> Result<Element, Error> {
    let coords: Vec<u64> = text
        .split(',')
        .map(|t| t.trim().parse::<u64>())
        .collect::<Result<_, _>>()
        .map_err(|_| Error::Parse(format!("bad element coordinates '{}'", text)))?;
    if coords.len() != l.dim() {
        return Err(Error::Parse(format!(
            "element has {} coordinates, algebra has dimension {}",
            coords.len(),
            l.dim()
        )));
    }
    if let Some(&c) = coords.iter().find(|&&c| c >= l.field().q()) {
        return Err(Error::Parse(format!("coordinate {} is not a field element index", c)));
    }
    Ok(l.element_from_coords(&coords))
}

fn write_export(l: &LieAlgebra, g: &NilGraph, spec: &str) -> Result<(), Error> {
    let (format, path) = spec
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("bad export spec '{}': expected format:path", spec)))?;
    let content = match format {
        "dot" => export::graph_dot(l, g),
        "json" => export::graph_json(l, g),
        "csv" => export::graph_csv(g),
        other => return Err(Error::Parse(format!("unknown export format '{}'", other))),
    };
    std::fs::write(path, content)?;
    Ok(())
}

fn print_graph_details(g: &NilGraph) {
    let summary = g.components();
    println!("kind:        {:?}", g.kind());
    println!("vertices:    {}", g.vertex_count());
    println!("edges:       {}", g.edge_count());
    println!("|nil(L)|:    {}", g.nil_members().len());
    println!("components:  κ={}, sizes={:?}", summary.kappa, summary.sizes);
    match summary.regular_degree {
        Some(d) => println!("regular:     yes, degree {}", d),
        None => println!("regular:     no, degrees {:?}", summary.degree_sequence),
    }
    println!("complete:    {:?}", summary.complete);
    println!("bipartite:   {}", g.is_bipartite());
    println!("eulerian:    {}", g.is_eulerian());
    println!("star:        {}", g.is_star());
}

fn print_report(report: &CheckReport) -> bool {
    println!("[{}]", report.name);
    for item in &report.items {
        if item.skipped {
            println!("  SKIP {} ({})", item.label, item.detail.as_deref().unwrap_or(""));
        } else if item.passed {
            println!("  PASS {}", item.label);
        } else {
            println!("  FAIL {}: {}", item.label, item.detail.as_deref().unwrap_or(""));
        }
    }
    report.passed()
}

fn print_law_report(ideal_name: &str, report: &NilLawReport) -> bool {
    println!("[nil-set laws, J = {}]", ideal_name);
    for check in &report.checks {
        if !check.applicable {
            println!("  SKIP {} ({})", check.name, check.witness.as_deref().unwrap_or(""));
        } else if check.holds {
            println!("  PASS {}", check.name);
        } else {
            println!("  FAIL {}: {}", check.name, check.witness.as_deref().unwrap_or(""));
        }
    }
    report.all_hold()
}

fn run_verify(cli: &Cli, suite: &Suite, caps: Caps) -> Result<bool, Error> {
    match suite {
        Suite::T2 { q } => {
            let mut ok = true;
            for &q in q {
                ok &= print_report(&check_t2_theorem(q, caps)?);
            }
            Ok(ok)
        }
        Suite::Sums => {
            let mut ok = true;
            for (name, a, b) in direct_sum_pairs() {
                println!("pair {}:", name);
                ok &= print_report(&check_direct_sum_theorems(&a, &b, caps)?);
            }
            Ok(ok)
        }
        Suite::Lemmas { algebra, field } => {
            let l = load_algebra(algebra, field)?;
            let scanner = new_scanner(&l, caps, cli.naive)?;
            let zero = l.span(&[]);
            let center = l.center();
            let hyper = l.hypercenter();
            let mut ideals: Vec<(&str, lienil::Subspace)> = vec![("0", zero)];
            if center != ideals[0].1 {
                ideals.push(("Z(L)", center));
            }
            if hyper != ideals.last().unwrap().1 && hyper != ideals[0].1 {
                ideals.push(("Z*(L)", hyper));
            }
            let mut ok = true;
            for (name, ideal) in &ideals {
                ok &= print_law_report(name, &scanner.check_nil_laws(ideal)?);
            }
            let g = NilGraph::build(&scanner, GraphKind::Nilpotent)?;
            ok &= print_report(&verify_degree_formula(&scanner, &g));
            Ok(ok)
        }
    }
}

fn run_search(cli: &Cli, files: &[PathBuf], caps: Caps) -> Result<bool, Error> {
    let mut entries: Vec<(String, LieAlgebra)> =
        standard_catalog().into_iter().map(|e| (e.name, e.algebra)).collect();
    for path in files {
        entries.push((path.display().to_string(), algebra_from_file(path)?));
    }
    let mut findings = Vec::new();
    for (name, l) in &entries {
        let scanner = match new_scanner(l, caps, cli.naive) {
            Ok(s) => s,
            Err(e @ (Error::TooManyElements { .. } | Error::TooManySubspaces { .. })) => {
                println!("{}: skipped ({})", name, e);
                continue;
            }
            Err(e) => return Err(e),
        };
        let nil = scanner.nil_of_algebra()?;
        let hyper = l.hypercenter();
        let hyper_equal = hyper.vector_count(l.field()) == nil.len() as u128
            && nil.is_subspace()
            && nil.span() == &hyper;
        let g = NilGraph::build(&scanner, GraphKind::Nilpotent)?;
        let bipartite = g.is_bipartite();
        println!(
            "{}: nil subspace: {}; Z*(L) = nil(L): {}; bipartite: {}",
            name,
            if nil.is_subspace() { "yes" } else { "no" },
            if hyper_equal { "yes" } else { "no" },
            bipartite
        );
        if !nil.is_subspace() {
            findings.push(format!("{}: nil(L) is not a subspace", name));
        }
        if !hyper_equal {
            findings.push(format!("{}: Z*(L) differs from nil(L)", name));
        }
        if bipartite && g.vertex_count() > 0 && name != "t(2,F2)" {
            findings.push(format!("{}: bipartite nilpotent graph", name));
        }
    }
    if findings.is_empty() {
        println!("no findings");
    } else {
        for f in &findings {
            println!("FINDING: {}", f);
        }
    }
    Ok(true)
}
