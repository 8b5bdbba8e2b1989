use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use classunion::automorphisms::verify_proposition1;
use classunion::catalog::{closure_cap_from_env, default_catalog_specifiers, GroupSpecifier};
use classunion::class_union::{m_invariant, union_with_identity};
use classunion::classes::decompose;
use classunion::landau::{landau_solutions, LandauConfig, DEFAULT_TERMS_CAP};
use classunion::report::{
    all_passed, group_info, render_json, render_text, run_verification, CatalogEntry, VerifyOptions,
};
use classunion::{Execution, GroupError};

#[derive(Parser)]
#[command(name = "classunion")]
#[command(about = "Conjugacy-class unions, the invariant m(G), and unit-fraction class equations")]
#[command(version)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Run every kernel on a single thread
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Order, class equation, k, m and rationality of a group
    Info { spec: String },
    /// Check m = 1 or m = k - 1 and the supporting predicates
    Verify {
        /// Group specifiers such as C12, E2^3, D4, S4, A5, Q8, C2xC3, file:path.cay
        specs: Vec<String>,
        /// Verify the built-in catalog
        #[arg(long)]
        catalog: bool,
    },
    /// Enumerate k-term unit-fraction decompositions of 1
    Landau {
        #[arg(long)]
        terms: usize,
        #[arg(long)]
        count_only: bool,
        /// One solution per line, denominators descending
        #[arg(long)]
        csv: bool,
        #[arg(long, default_value_t = DEFAULT_TERMS_CAP)]
        terms_cap: usize,
    },
    /// Instance check of the rational-group splitting statement
    Prop1 { spec: String },
    /// Compute m(G)
    M {
        spec: String,
        /// Print the failing class subset for each n < m
        #[arg(long)]
        witnesses: bool,
    },
    /// Print a group's multiplication table in the Cayley file format
    Cayley { spec: String },
}

enum Failure {
    /// A verification came back FAIL.
    Verdict,
    /// Bad input: unparsable specifier or file, cap violations.
    Usage(String),
}

impl From<GroupError> for Failure {
    fn from(e: GroupError) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verdict) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn build_entry(spec: &str, cap: usize) -> Result<CatalogEntry, Failure> {
    let spec = GroupSpecifier::parse(spec)?;
    Ok(CatalogEntry::from_specifier(&spec, cap)?)
}

fn print_json(value: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("json"));
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let exec = if cli.sequential {
        Execution::Sequential
    } else {
        Execution::default()
    };
    let cap = closure_cap_from_env()?;

    match &cli.command {
        Command::Info { spec } => {
            let entry = build_entry(spec, cap)?;
            let info = group_info(&entry.name, &entry.group, exec);
            match cli.format {
                Format::Json => print_json(&serde_json::to_value(&info).expect("json")),
                Format::Text => {
                    let list = |v: &[usize]| {
                        v.iter()
                            .map(usize::to_string)
                            .collect::<Vec<_>>()
                            .join(" + ")
                    };
                    println!("group: {}", info.group);
                    println!("order: {}", info.order);
                    println!("abelian: {}", info.abelian);
                    println!("k: {}", info.k);
                    println!(
                        "class equation: {} = {}",
                        info.order,
                        list(&info.class_sizes)
                    );
                    let recips: Vec<String> = info
                        .class_indices
                        .iter()
                        .map(|m| format!("1/{m}"))
                        .collect();
                    println!("unit fractions: 1 = {}", recips.join(" + "));
                    match info.m {
                        Some(m) => println!("m: {m}"),
                        None => println!("m: undefined (trivial group)"),
                    }
                    println!("rational: {}", info.rational);
                    if let Some(b) = info.max_order_bound {
                        println!("max order for k = {}: {b}", info.k);
                    }
                }
            }
            Ok(())
        }
        Command::Verify { specs, catalog } => {
            if !catalog && specs.is_empty() {
                return Err(Failure::Usage("give group specifiers or --catalog".into()));
            }
            let mut entries = Vec::new();
            if *catalog {
                for s in default_catalog_specifiers() {
                    entries.push(CatalogEntry::from_specifier(&s, cap)?);
                }
            }
            for s in specs {
                entries.push(build_entry(s, cap)?);
            }
            let reports = run_verification(&entries, &VerifyOptions { execution: exec });
            match cli.format {
                Format::Json => println!("{}", render_json(&reports)),
                Format::Text => print!("{}", render_text(&reports)),
            }
            if all_passed(&reports) {
                Ok(())
            } else {
                Err(Failure::Verdict)
            }
        }
        Command::Landau {
            terms,
            count_only,
            csv,
            terms_cap,
        } => {
            let cfg = LandauConfig {
                terms_cap: *terms_cap,
                execution: exec,
            };
            let solutions = landau_solutions(*terms, &cfg)?;
            let bound = solutions
                .iter()
                .map(|s| s.denominators()[0])
                .max()
                .unwrap_or(0);
            if *count_only {
                match cli.format {
                    Format::Json => {
                        print_json(&json!({ "terms": terms, "count": solutions.len() }))
                    }
                    Format::Text => println!("{}", solutions.len()),
                }
            } else if *csv {
                for s in &solutions {
                    println!("{}", s.to_csv_line());
                }
            } else {
                match cli.format {
                    Format::Json => print_json(&json!({
                        "terms": terms,
                        "count": solutions.len(),
                        "max_order_bound": bound,
                        "solutions": solutions,
                    })),
                    Format::Text => {
                        println!(
                            "{} solutions with {terms} terms; max order bound {bound}",
                            solutions.len()
                        );
                        for s in &solutions {
                            println!("{s}");
                        }
                    }
                }
            }
            Ok(())
        }
        Command::Prop1 { spec } => {
            let entry = build_entry(spec, cap)?;
            let dec = decompose(&entry.group);
            let report = verify_proposition1(&entry.group, &dec)?;
            match cli.format {
                Format::Json => {
                    let mut v = serde_json::to_value(&report).expect("json");
                    v["group"] = json!(entry.name);
                    print_json(&v);
                }
                Format::Text => {
                    println!("group: {}", entry.name);
                    println!("rational: {}", report.rational);
                    println!("sylow2_abelian: {}", report.sylow2_abelian);
                    println!("sylow2_elementary: {}", report.sylow2_elementary);
                    println!("splits_over_derived: {}", report.splits_over_derived);
                    println!("derived_is_3group: {}", report.derived_is_3group);
                    println!("applicable: {}", report.applicable);
                    println!(
                        "pass: {}",
                        report.pass.map_or("-".to_string(), |p| p.to_string())
                    );
                }
            }
            if report.pass == Some(false) {
                Err(Failure::Verdict)
            } else {
                Ok(())
            }
        }
        Command::M { spec, witnesses } => {
            let entry = build_entry(spec, cap)?;
            let g = &entry.group;
            let dec = decompose(g);
            let result = m_invariant(g, &dec, exec)?;
            let witness_rows: Vec<(usize, Vec<usize>, Vec<usize>)> = result
                .counterexamples
                .iter()
                .map(|(&n, s)| {
                    let elements = union_with_identity(g, &dec, s)
                        .iter()
                        .map(|e| e.index())
                        .collect();
                    (n, s.indices().to_vec(), elements)
                })
                .collect();
            match cli.format {
                Format::Json => {
                    let mut v = json!({ "group": entry.name, "order": g.order(), "k": result.k, "m": result.m });
                    if *witnesses {
                        v["counterexamples"] = witness_rows
                            .iter()
                            .map(|(n, classes, elements)| json!({ "n": n, "classes": classes, "elements": elements }))
                            .collect();
                    }
                    print_json(&v);
                }
                Format::Text => {
                    println!(
                        "{}: order={} k={} m={}",
                        entry.name,
                        g.order(),
                        result.k,
                        result.m
                    );
                    if *witnesses {
                        for (n, classes, elements) in &witness_rows {
                            println!("  n={n}: classes {classes:?} -> {} elements {elements:?}, not a subgroup", elements.len());
                        }
                    }
                }
            }
            Ok(())
        }
        Command::Cayley { spec } => {
            let entry = build_entry(spec, cap)?;
            print!("{}", entry.group.to_cayley_text());
            Ok(())
        }
    }
}
