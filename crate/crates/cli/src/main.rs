//! `ghr`: batch workbench for finite Γ-hemirings.
//!
//! Exit codes: 0 success, 1 a negative verdict (invalid structure, failed
//! claim), 2 usage, parse or precondition errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use ghr_core::crisp::{
    h_closure, h_condition_witness, is_h_ideal, is_ideal, is_prime_h_ideal, CrispSubset, PrimeMethod, Side,
};
use ghr_core::enumerate::{enumerate_hemirings, is_canonical};
use ghr_core::extension::{fuzzy_extension, iterated_extension_chain};
use ghr_core::fuzzy::{classify_fuzzy, FuzzySubset, Grid};
use ghr_core::harness::{mutation_sensitivity, resolve_claims, run_claims, InstanceFamily, Verdict};
use ghr_core::hemiring::{validate_hemiring, validate_hemiring_verbose};
use ghr_core::prime::prime_by_characterization;
use ghr_core::product::{generalized_h_product, h_product};
use ghr_core::{ElementId, GammaHemiring, GammaId};
use serde_json::json;

use ghr_cli::files::{
    self, load_fuzzy, load_structure, read_structure_file, read_subset_like, to_json, FuzzyFile, SubsetFile, SubsetLike,
};

#[derive(Parser)]
#[command(name = "ghr", version, about = "Finite Gamma-hemirings, fuzzy h-ideals and their extensions")]
struct Cli {
    /// Accept structure files that break the axioms (shape is still checked).
    #[arg(long, global = true)]
    no_validate: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a structure file against the axioms.
    Validate {
        structure: PathBuf,
        /// List every failing instance, not just the first per axiom.
        #[arg(long)]
        verbose: bool,
    },
    /// Report ideal classes of a fuzzy or crisp subset.
    Classify { structure: PathBuf, subset: PathBuf },
    /// Print the extension of a fuzzy subset by an element.
    Extend {
        structure: PathBuf,
        fuzzy: PathBuf,
        #[arg(long)]
        by: usize,
        /// Print the chain for (x gamma)^k x, k = 0..=N.
        #[arg(long, num_args = 2, value_names = ["GAMMA", "N"])]
        iterate: Option<Vec<usize>>,
        /// Also write the result as a subset file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print an h-product of two fuzzy subsets.
    Product {
        structure: PathBuf,
        first: PathBuf,
        second: PathBuf,
        #[arg(long, value_enum, default_value_t = ProductMode::Generalized)]
        mode: ProductMode,
        /// Also write the result as a subset file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the h-closure of an ideal.
    Closure {
        structure: PathBuf,
        subset: PathBuf,
        #[arg(long, value_enum, default_value_t = SideArg::Two)]
        side: SideArg,
        /// Also write the result as a subset file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List every structure within the size bounds.
    Enumerate {
        #[arg(long)]
        s_max: usize,
        #[arg(long)]
        g_max: usize,
        /// Keep one structure per isomorphism class.
        #[arg(long)]
        canonical: bool,
        /// Print structure files as a JSON array instead of a summary.
        #[arg(long)]
        json: bool,
    },
    /// Check the registered claims over a family of structures.
    Verify {
        #[arg(long, default_value_t = 2)]
        s_max: usize,
        #[arg(long, default_value_t = 2)]
        g_max: usize,
        #[arg(long, default_value = "0,1/2,1")]
        grid: String,
        /// Comma-separated claim ids or aliases; all claims when omitted.
        #[arg(long, value_delimiter = ',')]
        claims: Vec<String>,
        /// Structure files to use instead of enumeration.
        #[arg(long, num_args = 1..)]
        fixtures: Vec<PathBuf>,
        /// Reserved; every computation is deterministic.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        canonical: bool,
        /// Also rerun under each registered mutation.
        #[arg(long)]
        mutations: bool,
        /// Write a JSON report here.
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ProductMode {
    GammaH,
    Generalized,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Left,
    Right,
    Two,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Left => Side::Left,
            SideArg::Right => Side::Right,
            SideArg::Two => Side::TwoSided,
        }
    }
}

/// Anything that ends a command with exit code 2.
struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

type Outcome = Result<ExitCode, Usage>;

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn element(h: &GammaHemiring, x: usize) -> Result<ElementId, Usage> {
    h.check_element(ElementId(x))?;
    Ok(ElementId(x))
}

fn validate(path: &Path, verbose: bool) -> Outcome {
    let raw = read_structure_file(path)?.into();
    let report = if verbose { validate_hemiring_verbose(&raw)? } else { validate_hemiring(&raw)? };
    if report.valid {
        println!("{}: valid", raw.name);
        return Ok(ExitCode::SUCCESS);
    }
    println!("{}: invalid", raw.name);
    for v in &report.violations {
        println!("  {v}");
    }
    Ok(ExitCode::from(1))
}

fn classify(h: &GammaHemiring, path: &Path) -> Outcome {
    match read_subset_like(path)? {
        SubsetLike::Crisp(file) => {
            files::check_name(path, h, &file.hemiring)?;
            let a = file.to_subset(h.s_size())?;
            classify_crisp(h, &a)
        }
        SubsetLike::Fuzzy(_) => {
            let mu = load_fuzzy(path, h)?;
            let c = classify_fuzzy(h, &mu)?;
            let line = |label: &str, flag: &str, holds: bool| match c.witness(flag) {
                Some(w) if !holds => println!("{label}: no ({w})"),
                _ => println!("{label}: {}", yes(holds)),
            };
            println!("nonempty: {}", yes(c.nonempty));
            line("left h-ideal", "left_h_ideal", c.left_h_ideal);
            line("right h-ideal", "right_h_ideal", c.right_h_ideal);
            line("h-ideal", "h_ideal", c.h_ideal);
            line("h-bi-ideal", "h_bi_ideal", c.h_bi_ideal);
            line("h-interior ideal", "h_interior_ideal", c.h_interior_ideal);
            line("h-quasi-ideal", "h_quasi_ideal", c.h_quasi_ideal);
            if c.h_ideal {
                println!("prime (characterization): {}", yes(prime_by_characterization(h, &mu)?));
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn classify_crisp(h: &GammaHemiring, a: &CrispSubset) -> Outcome {
    if a.is_empty() {
        println!("ideal: no (empty)");
        return Ok(ExitCode::SUCCESS);
    }
    println!("left ideal: {}", yes(is_ideal(h, a, Side::Left)?));
    println!("right ideal: {}", yes(is_ideal(h, a, Side::Right)?));
    let ideal = is_ideal(h, a, Side::TwoSided)?;
    println!("ideal: {}", yes(ideal));
    if !ideal {
        return Ok(ExitCode::SUCCESS);
    }
    if is_h_ideal(h, a, Side::TwoSided)? {
        println!("h-ideal: yes");
        println!("prime: {}", yes(is_prime_h_ideal(h, a, PrimeMethod::ByElements)?));
    } else {
        let w = h_condition_witness(h, a).expect("an ideal that is not an h-ideal has a witness");
        println!("h-ideal: no (witness x={},a={},b={},z={})", w.x, w.a, w.b, w.z);
    }
    Ok(ExitCode::SUCCESS)
}

fn write_fuzzy(out: Option<&Path>, h: &GammaHemiring, mu: &FuzzySubset) -> Result<(), Usage> {
    if let Some(path) = out {
        fs::write(path, to_json(&FuzzyFile::from_subset(h.name(), mu)))?;
    }
    Ok(())
}

fn extend(h: &GammaHemiring, path: &Path, by: usize, iterate: Option<Vec<usize>>, out: Option<&Path>) -> Outcome {
    let mu = load_fuzzy(path, h)?;
    let x = element(h, by)?;
    match iterate.as_deref() {
        None => {
            let e = fuzzy_extension(h, x, &mu)?;
            println!("{e}");
            write_fuzzy(out, h, &e)?;
        }
        Some([gamma, n]) => {
            let chain = iterated_extension_chain(h, x, GammaId(*gamma), &mu, *n)?;
            for (k, e) in chain.iter().enumerate() {
                println!("{k}: {e}");
            }
        }
        Some(_) => return Err(Usage("--iterate takes GAMMA and N".into())),
    }
    if iterate.is_some() && out.is_some() {
        return Err(Usage("--out applies to a single extension, not a chain".into()));
    }
    Ok(ExitCode::SUCCESS)
}

fn product(h: &GammaHemiring, first: &Path, second: &Path, mode: ProductMode, out: Option<&Path>) -> Outcome {
    let mu = load_fuzzy(first, h)?;
    let theta = load_fuzzy(second, h)?;
    let result: FuzzySubset = match mode {
        ProductMode::GammaH => h_product(h, &mu, &theta)?,
        ProductMode::Generalized => generalized_h_product(h, &mu, &theta)?,
    };
    println!("{result}");
    write_fuzzy(out, h, &result)?;
    Ok(ExitCode::SUCCESS)
}

fn closure(h: &GammaHemiring, path: &Path, side: Side, out: Option<&Path>) -> Outcome {
    let a = match read_subset_like(path)? {
        SubsetLike::Crisp(file) => {
            files::check_name(path, h, &file.hemiring)?;
            file.to_subset(h.s_size())?
        }
        SubsetLike::Fuzzy(_) => return Err(Usage(format!("{}: closure needs a crisp subset", path.display()))),
    };
    let c = h_closure(h, &a, side)?;
    println!("{c}");
    if let Some(path) = out {
        fs::write(path, to_json(&SubsetFile::from_subset(h.name(), &c)))?;
    }
    Ok(ExitCode::SUCCESS)
}

fn enumerate(s_max: usize, g_max: usize, canonical: bool, as_json: bool) -> Outcome {
    if s_max == 0 || g_max == 0 {
        return Err(Usage("size bounds must be at least 1".into()));
    }
    let all: Vec<GammaHemiring> = enumerate_hemirings(s_max, g_max).filter(|h| !canonical || is_canonical(h)).collect();
    if as_json {
        let tables: Vec<files::StructureFile> = all.iter().map(|h| h.to_raw().into()).collect();
        println!("{}", to_json(&tables));
    } else {
        for h in &all {
            println!("{} s={} g={} commutative={}", h.name(), h.s_size(), h.g_size(), yes(h.is_commutative()));
        }
        println!("total: {}", all.len());
    }
    Ok(ExitCode::SUCCESS)
}

#[allow(clippy::too_many_arguments)]
fn verify(
    s_max: usize,
    g_max: usize,
    grid: &str,
    claims: &[String],
    fixtures: &[PathBuf],
    canonical: bool,
    mutations: bool,
    report: Option<&Path>,
    validate_files: bool,
) -> Outcome {
    let grid: Grid = grid.parse()?;
    let family = if fixtures.is_empty() {
        let f = InstanceFamily::enumerated(s_max, g_max, grid)?;
        if canonical {
            f.canonical_only()
        } else {
            f
        }
    } else {
        let structures = fixtures.iter().map(|p| load_structure(p, validate_files)).collect::<Result<Vec<_>, _>>()?;
        InstanceFamily::fixtures(structures, grid)?
    };
    let claims = resolve_claims(claims)?;
    let reports = run_claims(&family, &claims)?;
    for r in &reports {
        println!("{r}");
    }
    let failed = reports.iter().filter(|r| r.verdict != Verdict::Pass).count();
    println!("{} claims, {} passed, {} not passed", reports.len(), reports.len() - failed, failed);

    let sensitivity = if mutations { Some(mutation_sensitivity(&family, &claims)?) } else { None };
    if let Some(runs) = &sensitivity {
        for run in runs {
            println!("mutation {}: {} failing claim(s) {}", run.mutation, run.failed.len(), run.failed.join(","));
        }
    }
    if let Some(path) = report {
        let doc = json!({ "grid": family.grid.to_string(), "reports": reports, "mutations": sensitivity });
        fs::write(path, to_json(&doc))?;
    }
    Ok(if failed == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn threads_from_env() -> Result<(), Usage> {
    let Ok(value) = std::env::var("GHR_THREADS") else {
        return Ok(());
    };
    let n: usize = value.trim().parse().map_err(|_| Usage(format!("GHR_THREADS={value:?} is not a count")))?;
    if n > 0 {
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    Ok(())
}

fn run(cli: Cli) -> Outcome {
    threads_from_env()?;
    let check = !cli.no_validate;
    match cli.command {
        Command::Validate { structure, verbose } => validate(&structure, verbose),
        Command::Classify { structure, subset } => classify(&load_structure(&structure, check)?, &subset),
        Command::Extend { structure, fuzzy, by, iterate, out } => {
            extend(&load_structure(&structure, check)?, &fuzzy, by, iterate, out.as_deref())
        }
        Command::Product { structure, first, second, mode, out } => {
            product(&load_structure(&structure, check)?, &first, &second, mode, out.as_deref())
        }
        Command::Closure { structure, subset, side, out } => {
            closure(&load_structure(&structure, check)?, &subset, side.into(), out.as_deref())
        }
        Command::Enumerate { s_max, g_max, canonical, json } => enumerate(s_max, g_max, canonical, json),
        Command::Verify { s_max, g_max, grid, claims, fixtures, seed: _, canonical, mutations, report } => {
            verify(s_max, g_max, &grid, &claims, &fixtures, canonical, mutations, report.as_deref(), check)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
