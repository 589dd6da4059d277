//! `odtool` builds catalog designs to flat matrix files, verifies
//! user-supplied matrices against claims, and answers existence and bound
//! queries with printable rule chains.
//!
//! Exit codes: 0 = pass/exists, 1 = fail/not-exists, 2 = undecided,
//! 3 = usage or parse error.

mod format;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use od_core::algebra::VarRegistry;
use od_core::constructions::{catalog, catalog_entry, Design};
use od_core::designs::{
    is_full, verify_amicable, verify_aod, verify_disjoint, verify_od, verify_pd, TypeVector,
    VerificationReport,
};
use od_core::numtheory::{
    decide_pd133, radon_hurwitz, rational_family_exists, rho_t_bound, wolfe_bound, ExistenceStatus,
    ExistenceVerdict, RFType,
};

const EXIT_PASS: u8 = 0;
const EXIT_FAIL: u8 = 1;
const EXIT_UNDECIDED: u8 = 2;
const EXIT_USAGE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "odtool",
    version,
    about = "Exact construction and verification of orthogonal designs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a catalog design and write it as matrix file(s).
    Build {
        /// Catalog name (see `odtool catalog`).
        name: String,
        /// Output directory.
        #[arg(short, long, default_value = ".")]
        out: PathBuf,
    },
    /// Verify matrix files against a claim.
    Verify {
        claim: Claim,
        /// Claimed type weights, one comma-separated group per file,
        /// groups separated by `/` (e.g. `4,10,34/4,44`). Weights bind to
        /// each file's variables in header order.
        #[arg(long)]
        types: Option<String>,
        /// Suppress the report; the exit code carries the verdict.
        #[arg(long)]
        quiet: bool,
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Decide an existence or bound query.
    Decide {
        #[command(subcommand)]
        query: Query,
    },
    /// List the catalog.
    Catalog,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Claim {
    Od,
    Aod,
    Pd,
    Full,
    Amicable,
    Disjoint,
}

#[derive(Subcommand)]
enum Query {
    /// Does a PD(n; 1,1,1; 1,1,1; n-3) exist?
    Pd133 {
        n: u64,
        #[arg(long)]
        explain: bool,
        #[arg(long)]
        quiet: bool,
    },
    /// Does a rational family of this type and order exist?
    RationalFamily {
        /// Comma-separated positive weights, e.g. `1,1,1,3,3,3,17,17,34`.
        weights: String,
        #[arg(long)]
        order: u64,
        #[arg(long)]
        explain: bool,
        #[arg(long)]
        quiet: bool,
    },
    /// Radon-Hurwitz number of n.
    Rho { n: u64 },
    /// Upper bound on total AOD variables at order n.
    Wolfe { n: u64 },
    /// Bound on one side's variables when the other side has t.
    RhoT {
        n: u64,
        #[arg(long)]
        t: u64,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are not usage errors.
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_PASS,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let code = match cli.command {
        Command::Build { name, out } => cmd_build(&name, &out),
        Command::Verify {
            claim,
            types,
            quiet,
            files,
        } => cmd_verify(claim, types.as_deref(), quiet, &files),
        Command::Decide { query } => cmd_decide(query),
        Command::Catalog => cmd_catalog(),
    };
    ExitCode::from(code)
}

fn cmd_build(name: &str, out: &Path) -> u8 {
    let Some(entry) = catalog_entry(name) else {
        eprintln!("unknown catalog name `{name}`; see `odtool catalog`");
        return EXIT_USAGE;
    };
    let mut reg = VarRegistry::new();
    let design = match (entry.build)(&mut reg) {
        Ok(d) => d,
        Err(e) => {
            eprintln!("building `{name}` failed: {e}");
            return EXIT_FAIL;
        }
    };
    // Builders verify their output; refuse to write anything that does not
    // re-verify here.
    match design.verify() {
        Ok(r) if r.passed() => {}
        Ok(r) => {
            eprintln!("`{name}` failed verification: {}", r.display(&reg));
            return EXIT_FAIL;
        }
        Err(e) => {
            eprintln!("`{name}` failed verification: {e}");
            return EXIT_FAIL;
        }
    }
    let parts: Vec<(String, &od_core::algebra::PolyMatrix, &TypeVector)> = match &design {
        Design::Od { matrix, od_type } => vec![(format!("{name}.mat"), matrix, od_type)],
        Design::Aod(pair) => vec![
            (format!("{name}.c.mat"), &pair.c, &pair.type_c),
            (format!("{name}.d.mat"), &pair.d, &pair.type_d),
        ],
        Design::Pd(triple) => vec![
            (format!("{name}.m1.mat"), &triple.m1, &triple.type_m1),
            (format!("{name}.m2.mat"), &triple.m2, &triple.type_m2),
            (format!("{name}.n.mat"), &triple.n, &triple.type_n),
        ],
    };
    for (file, matrix, od_type) in parts {
        let text = match format::serialize(matrix, od_type.vars(), &reg) {
            Ok(t) => t,
            Err(e) => {
                eprintln!("serializing `{name}` failed: {e}");
                return EXIT_FAIL;
            }
        };
        let path = out.join(file);
        if let Err(e) = std::fs::write(&path, text) {
            eprintln!("writing {} failed: {e}", path.display());
            return EXIT_FAIL;
        }
        println!("{}", path.display());
    }
    EXIT_PASS
}

fn cmd_verify(claim: Claim, types: Option<&str>, quiet: bool, files: &[PathBuf]) -> u8 {
    let expected_files = match claim {
        Claim::Od | Claim::Full => 1,
        Claim::Aod | Claim::Amicable | Claim::Disjoint => 2,
        Claim::Pd => 3,
    };
    if files.len() != expected_files {
        eprintln!(
            "claim expects {expected_files} file(s), {} given",
            files.len()
        );
        return EXIT_USAGE;
    }
    let mut reg = VarRegistry::new();
    let mut parsed = Vec::new();
    for path in files {
        let text = match std::fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) => {
                eprintln!("reading {} failed: {e}", path.display());
                return EXIT_USAGE;
            }
        };
        match format::parse(&text, &mut reg) {
            Ok(f) => parsed.push(f),
            Err(e) => {
                eprintln!("parsing {} failed: {e}", path.display());
                return EXIT_USAGE;
            }
        }
    }
    let needs_types = matches!(claim, Claim::Od | Claim::Aod | Claim::Pd);
    let type_vectors = if needs_types {
        let Some(spec) = types else {
            eprintln!("this claim requires --types");
            return EXIT_USAGE;
        };
        match bind_types(spec, &parsed) {
            Ok(ts) => ts,
            Err(msg) => {
                eprintln!("{msg}");
                return EXIT_USAGE;
            }
        }
    } else {
        if types.is_some() {
            eprintln!("this claim does not take --types");
            return EXIT_USAGE;
        }
        Vec::new()
    };
    let report: Result<VerificationReport, od_core::designs::DesignError> = match claim {
        Claim::Od => Ok(verify_od(&parsed[0].matrix, &type_vectors[0])),
        Claim::Full => Ok(is_full(&parsed[0].matrix)),
        Claim::Aod => verify_aod(
            &parsed[0].matrix,
            &parsed[1].matrix,
            &type_vectors[0],
            &type_vectors[1],
        ),
        Claim::Pd => Ok(verify_pd(
            &parsed[0].matrix,
            &parsed[1].matrix,
            &parsed[2].matrix,
            &type_vectors[0],
            &type_vectors[1],
            &type_vectors[2],
        )),
        Claim::Amicable => verify_amicable(&parsed[0].matrix, &parsed[1].matrix),
        Claim::Disjoint => verify_disjoint(&parsed[0].matrix, &parsed[1].matrix),
    };
    match report {
        Ok(r) => {
            if !quiet {
                println!("{}", r.display(&reg));
            }
            if r.passed() {
                EXIT_PASS
            } else {
                EXIT_FAIL
            }
        }
        Err(e) => {
            eprintln!("verification could not run: {e}");
            EXIT_USAGE
        }
    }
}

fn bind_types(spec: &str, files: &[format::MatrixFile]) -> Result<Vec<TypeVector>, String> {
    let groups: Vec<&str> = spec.split('/').collect();
    if groups.len() != files.len() {
        return Err(format!(
            "--types has {} group(s), {} file(s) given",
            groups.len(),
            files.len()
        ));
    }
    groups
        .iter()
        .zip(files)
        .enumerate()
        .map(|(k, (group, file))| {
            let weights: Vec<u64> = group
                .split(',')
                .map(|w| w.trim().parse::<u64>())
                .collect::<Result<_, _>>()
                .map_err(|_| format!("bad weight in type group {}", k + 1))?;
            if weights.len() != file.vars.len() {
                return Err(format!(
                    "type group {} has {} weight(s) but the file declares {} variable(s)",
                    k + 1,
                    weights.len(),
                    file.vars.len()
                ));
            }
            TypeVector::new(weights.into_iter().zip(file.vars.iter().copied()).collect())
                .map_err(|e| e.to_string())
        })
        .collect()
}

fn cmd_decide(query: Query) -> u8 {
    match query {
        Query::Pd133 { n, explain, quiet } => {
            let verdict = decide_pd133(n);
            print_verdict(&verdict, explain, quiet);
            status_code(verdict.status())
        }
        Query::RationalFamily {
            weights,
            order,
            explain,
            quiet,
        } => {
            if order < 1 {
                eprintln!("order must be at least 1");
                return EXIT_USAGE;
            }
            let parsed: Result<Vec<u64>, _> = weights
                .split(',')
                .map(|w| w.trim().parse::<u64>())
                .collect();
            let Ok(parsed) = parsed else {
                eprintln!("weights must be a comma-separated list of positive integers");
                return EXIT_USAGE;
            };
            let t = match RFType::new(parsed) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("{e}");
                    return EXIT_USAGE;
                }
            };
            let verdict = rational_family_exists(&t, order);
            print_verdict(&verdict, explain, quiet);
            status_code(verdict.status())
        }
        Query::Rho { n } => {
            if n < 1 {
                eprintln!("n must be at least 1");
                return EXIT_USAGE;
            }
            println!("{}", radon_hurwitz(n));
            EXIT_PASS
        }
        Query::Wolfe { n } => {
            if n < 1 {
                eprintln!("n must be at least 1");
                return EXIT_USAGE;
            }
            println!("{}", wolfe_bound(n));
            EXIT_PASS
        }
        Query::RhoT { n, t } => {
            if n < 1 || t < 1 {
                eprintln!("n and t must be at least 1");
                return EXIT_USAGE;
            }
            println!("{}", rho_t_bound(n, t));
            EXIT_PASS
        }
    }
}

fn print_verdict(verdict: &ExistenceVerdict, explain: bool, quiet: bool) {
    if quiet {
        return;
    }
    if explain {
        for step in verdict.chain() {
            println!("{step}");
        }
    }
    println!(
        "{}",
        match verdict.status() {
            ExistenceStatus::Exists => "exists",
            ExistenceStatus::NotExists => "not-exists",
            ExistenceStatus::Undecided => "undecided",
        }
    );
}

fn status_code(status: ExistenceStatus) -> u8 {
    match status {
        ExistenceStatus::Exists => EXIT_PASS,
        ExistenceStatus::NotExists => EXIT_FAIL,
        ExistenceStatus::Undecided => EXIT_UNDECIDED,
    }
}

fn cmd_catalog() -> u8 {
    for entry in catalog() {
        println!(
            "{:<28} order {:>5}  {}",
            entry.name, entry.order, entry.summary
        );
    }
    EXIT_PASS
}
