use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use cubicsym::forms::parse_form;
use cubicsym::invariants::{relative_invariants, strict_invariants, InvariantSpace};
use cubicsym::jacobian::{coordinate_singular_point, is_nonsingular};
use cubicsym::projgroup::catalog::{Catalog, Variant};
use cubicsym::verifier::{self, CheckReport, Config, Status};
use cubicsym::Error;

#[derive(Parser)]
#[command(name = "cubicsym", version, about = "Exact checks on cubic surfaces and their projective symmetry groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one check (id or name) or `all`.
    Verify {
        target: String,
        #[arg(long)]
        json: bool,
        /// Also write the report to this file.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Perturb a catalog entry: `NAME` (first nonzero entry) or `NAME[r,c]` (0-based).
        #[arg(long)]
        mutate: Vec<String>,
        #[arg(long, default_value_t = cubicsym::projgroup::DEFAULT_CLOSURE_CAP)]
        max_closure: usize,
        /// Use matrices exactly as printed instead of the corrected readings.
        #[arg(long)]
        printed: bool,
        /// Run the checks one after another.
        #[arg(long)]
        sequential: bool,
    },
    /// Relative-invariant forms of a catalog group.
    Invariants {
        #[arg(long)]
        group: String,
        #[arg(long)]
        degree: u32,
        #[arg(long, value_enum, default_value_t = CharacterChoice::All)]
        character: CharacterChoice,
        #[arg(long)]
        printed: bool,
    },
    /// Decide whether V(f) is nonsingular.
    Singular {
        #[arg(long)]
        form: String,
    },
    /// Print a catalog matrix or generator list.
    Catalog {
        name: String,
        #[arg(long)]
        printed: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CharacterChoice {
    All,
    Trivial,
}

fn catalog(printed: bool) -> Catalog {
    Catalog::new(if printed { Variant::AsPrinted } else { Variant::Corrected })
}

// `NAME` or `NAME[r,c]`
fn apply_mutation(cat: &mut Catalog, mutation: &str) -> Result<String, Error> {
    let bad = || Error::InvalidArgument(format!("bad mutation `{mutation}`, expected NAME or NAME[r,c]"));
    match mutation.split_once('[') {
        None => {
            let (r, c) = cat.perturb_first_nonzero(mutation)?;
            Ok(format!("{mutation}[{r},{c}]"))
        }
        Some((name, rest)) => {
            let inner = rest.strip_suffix(']').ok_or_else(bad)?;
            let (r, c) = inner.split_once(',').ok_or_else(bad)?;
            let r: usize = r.trim().parse().map_err(|_| bad())?;
            let c: usize = c.trim().parse().map_err(|_| bad())?;
            cat.perturb(name, r, c)?;
            Ok(format!("{name}[{r},{c}]"))
        }
    }
}

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
        Status::Error => "ERROR",
    }
}

fn render_text(reports: &[CheckReport]) -> String {
    let mut out = String::new();
    for r in reports {
        out.push_str(&format!(
            "{:<4} {:<20} {:<5} {:>6} ms  {}\n",
            r.check_id,
            r.name,
            status_word(r.status),
            r.elapsed_ms,
            r.details
        ));
        for a in r.failed() {
            out.push_str(&format!("       - {}\n         expected: {}\n         computed: {}\n", a.name, a.expected, a.computed));
        }
        for n in &r.notes {
            out.push_str(&format!("       note: {n}\n"));
        }
    }
    let passed = reports.iter().filter(|r| r.status == Status::Pass).count();
    let total_ms: u64 = reports.iter().map(|r| r.elapsed_ms).sum();
    out.push_str(&format!("{passed}/{} checks pass ({total_ms} ms of check time)\n", reports.len()));
    out
}

fn verify(
    target: &str,
    json: bool,
    out: Option<PathBuf>,
    mutate: &[String],
    max_closure: usize,
    printed: bool,
    sequential: bool,
) -> Result<ExitCode, Error> {
    let mut cfg = Config {
        catalog: catalog(printed),
        max_closure,
        parallel: !sequential,
    };
    for mutation in mutate {
        let applied = apply_mutation(&mut cfg.catalog, mutation)?;
        eprintln!("mutation: {applied} += 1");
    }
    let reports = if target == "all" {
        verifier::run_all(&cfg)
    } else {
        vec![verifier::run_check(target, &cfg)?]
    };
    let text = if json {
        serde_json::to_string_pretty(&reports).expect("reports serialize") + "\n"
    } else {
        render_text(&reports)
    };
    print!("{text}");
    if let Some(path) = out {
        fs::write(&path, &text).map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))?;
    }
    Ok(if reports.iter().any(|r| r.resource_limited) {
        ExitCode::from(2)
    } else if reports.iter().all(|r| r.status == Status::Pass) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn print_space(s: &InvariantSpace) {
    let scalars: Vec<String> = s.scalars().iter().map(|x| x.to_string()).collect();
    println!("character {}  scalars [{}]  dim {}", s.character, scalars.join(", "), s.dim());
    for f in &s.basis {
        println!("  {f}");
    }
}

fn invariants(group: &str, degree: u32, character: CharacterChoice, printed: bool) -> Result<ExitCode, Error> {
    let gens = catalog(printed).entry(group)?.generators;
    match character {
        CharacterChoice::Trivial => {
            let s = strict_invariants(&gens, degree)?;
            if s.is_zero() {
                println!("no nonzero invariant forms of degree {degree}");
            } else {
                print_space(&s);
            }
        }
        CharacterChoice::All => {
            let spaces = relative_invariants(&gens, degree)?;
            if spaces.is_empty() {
                println!("no nonzero relative-invariant forms of degree {degree}");
            }
            for s in &spaces {
                print_space(s);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn singular(text: &str) -> Result<ExitCode, Error> {
    let f = parse_form(text)?;
    if is_nonsingular(&f)? {
        println!("nonsingular");
    } else {
        match coordinate_singular_point(&f) {
            Some(p) => println!("singular at {p}"),
            None => println!("singular"),
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn show_catalog(name: &str, printed: bool) -> Result<ExitCode, Error> {
    let entry = catalog(printed).entry(name)?;
    for (k, m) in entry.generators.iter().enumerate() {
        if entry.generators.len() > 1 {
            println!("{name}[{k}]");
        }
        print!("{m}");
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify {
            target,
            json,
            out,
            mutate,
            max_closure,
            printed,
            sequential,
        } => verify(&target, json, out, &mutate, max_closure, printed, sequential),
        Command::Invariants {
            group,
            degree,
            character,
            printed,
        } => invariants(&group, degree, character, printed),
        Command::Singular { form } => singular(&form),
        Command::Catalog { name, printed } => show_catalog(&name, printed),
    };
    result.unwrap_or_else(|e| {
        eprintln!("error: {e}");
        ExitCode::from(if e.is_resource_limit() { 2 } else { 1 })
    })
}
