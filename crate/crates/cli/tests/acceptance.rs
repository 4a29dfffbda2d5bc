//! Acceptance run: one PASS/FAIL line per criterion, then a single assertion
//! over all of them. Each check carries its own reference evaluation and
//! does not reuse the library's oracles.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use ghr_cli::files::{read_structure_file, read_subset_like, to_json, StructureFile, SubsetLike};
use ghr_core::crisp::{crisp_extension, enumerate_h_ideals, is_prime_h_ideal, CrispSubset, PrimeMethod};
use ghr_core::enumerate::enumerate_hemirings;
use ghr_core::extension::fuzzy_extension;
use ghr_core::fixtures;
use ghr_core::fuzzy::{enumerate_grid_fuzzy, quasi_containment_failure, FuzzySubset, Grid};
use ghr_core::harness::{mutation_sensitivity, resolve_claims, InstanceFamily};
use ghr_core::prime::{grid_h_ideals, prime_by_characterization, prime_grid_counterexample};
use ghr_core::product::generalized_h_product;
use ghr_core::{ElementId, GammaHemiring, Mutation, UnitRational};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn fixture_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

fn ghr(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_ghr"))
        .args(args)
        .current_dir(fixture_dir())
        .env("GHR_THREADS", "0")
        .output()
        .expect("ghr runs");
    (out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into_owned())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn extension_by_scan(h: &GammaHemiring, x: ElementId, mu: &FuzzySubset) -> Vec<UnitRational> {
    h.elements()
        .map(|y| {
            let mut inf = UnitRational::ONE;
            for al in h.gammas() {
                for s in h.elements() {
                    for g in h.gammas() {
                        inf = inf.min(mu.grade(h.mul(h.mul(x, al, s), g, y)));
                    }
                }
            }
            inf
        })
        .collect()
}

/// Sum lengths `1..=n_max`, one threshold at a time.
fn generalized_by_lengths(h: &GammaHemiring, mu: &FuzzySubset, theta: &FuzzySubset, n_max: usize) -> Vec<UnitRational> {
    let grades: BTreeSet<UnitRational> =
        mu.grades().iter().chain(theta.grades()).copied().filter(|g| *g > UnitRational::ZERO).collect();
    let mut out = vec![UnitRational::ZERO; h.s_size()];
    for t in grades {
        let mut prods = BTreeSet::new();
        for a in h.elements().filter(|&a| mu.grade(a) >= t) {
            for g in h.gammas() {
                for b in h.elements().filter(|&b| theta.grade(b) >= t) {
                    prods.insert(h.mul(a, g, b));
                }
            }
        }
        let mut layer: BTreeSet<(ElementId, ElementId)> =
            prods.iter().flat_map(|&p| prods.iter().map(move |&q| (p, q))).collect();
        let mut all = layer.clone();
        for _ in 1..n_max {
            let mut next = BTreeSet::new();
            for &(u, v) in &layer {
                for &p in &prods {
                    for &q in &prods {
                        next.insert((h.add(u, p), h.add(v, q)));
                    }
                }
            }
            layer = next;
            all.extend(layer.iter().copied());
        }
        for x in h.elements() {
            if all.iter().any(|&(u, v)| h.elements().any(|z| h.add(h.add(x, u), z) == h.add(v, z))) {
                out[x.0] = out[x.0].max(t);
            }
        }
    }
    out
}

fn central_run() -> Check {
    let report = std::env::temp_dir().join(format!("ghr-acceptance-{}.json", std::process::id()));
    let started = Instant::now();
    let (code, stdout) =
        ghr(&["verify", "--s-max", "2", "--g-max", "2", "--grid", "0,1/2,1", "--report", report.to_str().unwrap()]);
    let elapsed = started.elapsed();
    let doc: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&report).map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    let _ = std::fs::remove_file(&report);
    ensure(code == 0, || format!("exit {code}\n{stdout}"))?;
    let reports = doc["reports"].as_array().ok_or("report has no claims")?;
    for r in reports {
        ensure(r["verdict"] == "pass", || format!("{} is {}", r["claim"], r["verdict"]))?;
        ensure(r["witness"].is_null(), || format!("{} has a witness", r["claim"]))?;
        ensure(r["hypothesis_instances"].as_u64() > Some(0), || format!("{} is vacuous", r["claim"]))?;
    }
    ensure(elapsed < Duration::from_secs(600), || format!("took {elapsed:?}"))?;
    Ok(format!("{} claims pass, none vacuous, {:.2?}", reports.len(), elapsed))
}

fn dichotomy() -> Check {
    let h = fixtures::z4();
    let mu = FuzzySubset::from_grades(["1", "1/2", "1", "1/2"].iter().map(|g| g.parse().unwrap()).collect());
    let by_one = fuzzy_extension(&h, ElementId(1), &mu).map_err(|e| e.to_string())?;
    let by_two = fuzzy_extension(&h, ElementId(2), &mu).map_err(|e| e.to_string())?;
    ensure(by_one.grades() == extension_by_scan(&h, ElementId(1), &mu).as_slice(), || {
        "<1,mu> disagrees with scan".into()
    })?;
    ensure(by_two.grades() == extension_by_scan(&h, ElementId(2), &mu).as_slice(), || {
        "<2,mu> disagrees with scan".into()
    })?;
    ensure(by_one == mu, || format!("<1,mu> = {by_one}"))?;
    ensure(by_two.grades().iter().all(|g| *g == UnitRational::ONE), || format!("<2,mu> = {by_two}"))?;
    Ok(format!("<1,mu> = ({by_one}), <2,mu> = ({by_two})"))
}

fn product_oracle() -> Check {
    let grid = Grid::standard();
    let mut pairs = 0u64;
    let mut structures = 0;
    for h in enumerate_hemirings(3, 2) {
        let subsets: Vec<FuzzySubset> = enumerate_grid_fuzzy(&h, &grid).collect();
        let n_max = h.s_size() * h.s_size();
        for mu in &subsets {
            for theta in &subsets {
                let fast = generalized_h_product(&h, mu, theta).map_err(|e| e.to_string())?;
                let slow = generalized_by_lengths(&h, mu, theta, n_max);
                ensure(fast.grades() == slow.as_slice(), || format!("{} ({mu}) ({theta}): {fast}", h.name()))?;
                pairs += 1;
            }
        }
        structures += 1;
    }
    Ok(format!("{pairs} pairs over {structures} structures"))
}

fn prime_methods() -> Check {
    let mut ideals = 0;
    for h in enumerate_hemirings(3, 2) {
        for i in enumerate_h_ideals(&h) {
            let a = is_prime_h_ideal(&h, &i, PrimeMethod::ByDefinition).map_err(|e| e.to_string())?;
            let b = is_prime_h_ideal(&h, &i, PrimeMethod::ByElements).map_err(|e| e.to_string())?;
            ensure(a == b, || format!("{} {i}: definition {a}, elements {b}", h.name()))?;
            ideals += 1;
        }
    }
    Ok(format!("{ideals} h-ideals agree"))
}

fn prime_characterization() -> Check {
    let grid = Grid::standard();
    let mut primes = 0;
    for h in enumerate_hemirings(2, 2).chain([fixtures::z4()]) {
        let ideals = grid_h_ideals(&h, &grid);
        for mu in &ideals {
            if prime_by_characterization(&h, mu).map_err(|e| e.to_string())? {
                primes += 1;
                let cex = prime_grid_counterexample(&h, mu, &ideals).map_err(|e| e.to_string())?;
                ensure(cex.is_none(), || format!("{} ({mu}): {cex:?}", h.name()))?;
            }
        }
    }
    let z4 = fixtures::z4();
    let chi0 = FuzzySubset::characteristic(&CrispSubset::from_members(4, [0]).unwrap());
    ensure(!prime_by_characterization(&z4, &chi0).unwrap(), || "chi_{0} accepted on Z4".into())?;
    ensure(prime_by_characterization(&z4, &fixtures::mu_p()).unwrap(), || "mu_P rejected".into())?;
    Ok(format!("{primes} characterized primes, none refuted"))
}

fn lambda_translation() -> Check {
    let mut checked = 0;
    for h in [fixtures::z4()].into_iter().chain(enumerate_hemirings(2, 2)) {
        let n = h.s_size();
        for mask in 0u64..1 << n {
            let a = CrispSubset::from_mask(n, mask);
            let lambda = FuzzySubset::characteristic(&a);
            for x in h.elements() {
                let lhs = extension_by_scan(&h, x, &lambda);
                let rhs = FuzzySubset::characteristic(&crisp_extension(&h, x, &a));
                ensure(lhs.as_slice() == rhs.grades(), || format!("{} x={} A={a}", h.name(), x.0))?;
                let fast = fuzzy_extension(&h, x, &lambda).map_err(|e| e.to_string())?;
                ensure(fast == rhs, || format!("{} x={} A={a}: extension {fast}", h.name(), x.0))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (x, A) pairs"))
}

fn mutation_sensitivity_check() -> Check {
    let family = InstanceFamily::enumerated(2, 2, Grid::standard()).map_err(|e| e.to_string())?;
    let claims = resolve_claims::<&str>(&[]).map_err(|e| e.to_string())?;
    let runs = mutation_sensitivity(&family, &claims).map_err(|e| e.to_string())?;
    let mut lines = Vec::new();
    for run in &runs {
        lines.push(format!("  {}: {} failing [{}]", run.mutation, run.failed.len(), run.failed.join(", ")));
    }
    let undetected: Vec<String> = runs.iter().filter(|r| r.failed.is_empty()).map(|r| r.mutation.to_string()).collect();

    // outside the central family: three-term sums on the 64-element fixture
    let h = fixtures::three_lines();
    let probe = fixtures::three_lines_quasi_probe();
    let plain = quasi_containment_failure(&h, &probe).map_err(|e| e.to_string())?;
    let mutated =
        quasi_containment_failure(&h.with_mutation(Mutation::QuasiGammaProduct), &probe).map_err(|e| e.to_string())?;
    lines.push(format!(
        "  (outside the central run, {}: quasi containment fails at {:?}, mutated check fails at {:?})",
        h.name(),
        plain.map(|x| x.0),
        mutated.map(|x| x.0)
    ));
    let detail = lines.join("\n");
    if undetected.is_empty() {
        Ok(format!("every mutation is caught\n{detail}"))
    } else {
        Err(format!("no claim fails under {}\n{detail}", undetected.join(", ")))
    }
}

fn round_trips() -> Result<usize, String> {
    let mut n = 0;
    let mut paths: Vec<PathBuf> = std::fs::read_dir(fixture_dir())
        .map_err(|e| e.to_string())?
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "json"))
        .collect();
    paths.sort();
    let scratch = std::env::temp_dir().join(format!("ghr-roundtrip-{}.json", std::process::id()));
    for path in paths {
        let text = std::fs::read_to_string(&path).map_err(|e| e.to_string())?;
        let value: serde_json::Value = match serde_json::from_str(&text) {
            Ok(v) => v,
            Err(_) => continue,
        };
        let (first, second) = if value.get("s_add").is_some() {
            let parsed = read_structure_file(&path).map_err(|e| e.to_string())?;
            let printed = to_json(&parsed);
            std::fs::write(&scratch, &printed).unwrap();
            let again: StructureFile = read_structure_file(&scratch).map_err(|e| e.to_string())?;
            ensure(parsed == again, || format!("{}: structure changed", path.display()))?;
            (printed, to_json(&again))
        } else {
            let parsed = read_subset_like(&path).map_err(|e| e.to_string())?;
            let printed = to_json(&parsed);
            std::fs::write(&scratch, &printed).unwrap();
            let again: SubsetLike = read_subset_like(&scratch).map_err(|e| e.to_string())?;
            ensure(parsed == again, || format!("{}: subset changed", path.display()))?;
            (printed, to_json(&again))
        };
        ensure(first == second, || format!("{}: serialization not stable", path.display()))?;
        n += 1;
    }
    let _ = std::fs::remove_file(&scratch);
    Ok(n)
}

fn cli_contract() -> Check {
    let files = round_trips()?;
    let cases: &[(&[&str], i32, Option<&str>)] = &[
        (&["validate", "z4.json"], 0, Some("valid")),
        (&["validate", "b2-or.json"], 1, Some("axiom (vi)")),
        (&["validate", "truncated.json"], 2, None),
        (&["classify", "z4.json", "mu_p.json"], 0, Some("prime (characterization): yes")),
        (&["classify", "z4.json", "z4-0-2.json"], 0, Some("h-ideal: yes\nprime: yes")),
        (&["classify", "b2.json", "b2-0.json"], 0, Some("h-ideal: no (witness x=1,")),
        (&["extend", "z4.json", "mu_p.json", "--by", "2"], 0, Some("1 1 1 1\n")),
        (&["extend", "z4.json", "mu_p.json", "--by", "1"], 0, Some("1 1/2 1 1/2\n")),
        (&["extend", "z4.json", "mu_p.json", "--by", "0"], 0, Some("1 1 1 1\n")),
        (&["extend", "z4.json", "mu_p.json", "--by", "4"], 2, None),
        (&["product", "z4.json", "z4-0-2.json", "z4-0-2.json", "--mode", "gamma-h"], 0, Some("1 0 0 0\n")),
        (&["product", "z4.json", "z4-0-2.json", "z4-0-2.json", "--mode", "generalized"], 0, Some("1 0 0 0\n")),
        (&["product", "t1.json", "t1-a.json", "t1-b.json", "--mode", "gamma-h"], 0, Some("1/3\n")),
        (&["product", "z4.json", "z4-0-2.json", "z4-0-2.json", "--mode", "sideways"], 2, None),
        (&["classify", "b2.json", "z4-0-2.json"], 2, None),
        (&["verify", "--fixtures", "z4.json", "--claims", "DICHOTOMY"], 0, Some("2 claims, 2 passed")),
        (&["verify", "--grid", "1/2"], 2, None),
    ];
    for (args, want, needle) in cases {
        let (code, stdout) = ghr(args);
        ensure(code == *want, || format!("ghr {}: exit {code}, expected {want}", args.join(" ")))?;
        if let Some(needle) = needle {
            ensure(stdout.contains(needle), || format!("ghr {}: output lacks {needle:?}:\n{stdout}", args.join(" ")))?;
        }
    }
    Ok(format!("{files} files round-trip, {} invocations", cases.len()))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 8] = [
        ("1 central verification run", central_run),
        ("2 prime extension dichotomy on Z4", dichotomy),
        ("3 generalized product against bounded sums", product_oracle),
        ("4 prime h-ideals by definition and by elements", prime_methods),
        ("5 prime characterization against grid search", prime_characterization),
        ("6 lambda translation", lambda_translation),
        ("7 mutation sensitivity in the central run", mutation_sensitivity_check),
        ("8 CLI round trips and exit codes", cli_contract),
    ];
    let mut failed = Vec::new();
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("criterion {name}: PASS  {detail}"),
            Err(detail) => {
                println!("criterion {name}: FAIL  {detail}");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
