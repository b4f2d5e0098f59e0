//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines are always printed.

use std::panic::{self, AssertUnwindSafe};
use std::process::{Command, ExitCode, Output};
use std::time::{Duration, Instant};

use num::{BigInt, BigRational};
use otsym::graph::{connected_graphs, f_polynomial, h_polynomial, Graph};
use otsym::recursion::{natural_cap, MnCache, RecursionOptions};
use otsym::rep::{ch_c, ch_d, ch_r, poincare_product};
use otsym::{enumerate_partitions, Basis, Partition, QSeries, SymFunc};
use otsym_oracle as oracle;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

const SMALL_RUNTIME_LIMIT: Duration = Duration::from_secs(60);
const LARGE_RUNTIME_LIMIT: Duration = Duration::from_secs(30 * 60);
const CONJECTURE_MAX_N: usize = 10;
const POINCARE_MAX_N: usize = 10;
const RESTRICTION_MAX_N: usize = 9;
const STRUCTURAL_MAX_N: usize = 10;
const PLETHYSM_MAX_DEGREE: usize = 6;
const KRONECKER_MAX_N: usize = 6;
const ROUND_TRIP_MAX_N: usize = 8;
const ROUND_TRIP_SAMPLES: usize = 100;
const CONE_MAX_VERTICES: usize = 6;
const COMPLETE_GRAPH_MAX_N: usize = 10;

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn otsym(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_otsym"))
        .args(args)
        .env_remove("OTSYM_CACHE")
        .output()
        .expect("binary runs")
}

/// Runs `verify`, requiring exit 0 and exactly the expected `(check, n)`
/// records, all passing.
fn verify_all_pass(args: &[&str], expected: &[(&str, usize)]) -> Result<Duration, String> {
    let start = Instant::now();
    let out = otsym(args);
    let elapsed = start.elapsed();
    if out.status.code() != Some(0) {
        return Err(format!(
            "`otsym {}` exited with {:?}: {}",
            args.join(" "),
            out.status.code(),
            String::from_utf8_lossy(&out.stderr).trim()
        ));
    }
    let text = String::from_utf8(out.stdout).map_err(|e| e.to_string())?;
    let records: Vec<Value> = text
        .lines()
        .map(serde_json::from_str)
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    let got: Vec<(String, u64, String)> = records
        .iter()
        .map(|r| {
            (
                r["check"].as_str().unwrap_or("").to_string(),
                r["n"].as_u64().unwrap_or(0),
                r["status"].as_str().unwrap_or("").to_string(),
            )
        })
        .collect();
    let want: Vec<(String, u64, String)> = expected
        .iter()
        .map(|&(c, n)| (c.to_string(), n as u64, "pass".to_string()))
        .collect();
    if got != want {
        return Err(format!("records differ: got {got:?}"));
    }
    Ok(elapsed)
}

fn records(checks: &[&'static str], max_n: usize) -> Vec<(&'static str, usize)> {
    checks
        .iter()
        .flat_map(|&c| (2..=max_n).map(move |n| (c, n)))
        .collect()
}

fn conjecture_reproduction() -> Verdict {
    let small = verify_all_pass(
        &["verify", "--max-n", "8", "--checks", "conjecture_main", "--no-cache"],
        &records(&["conjecture_main"], 8),
    )?;
    let max = CONJECTURE_MAX_N.to_string();
    let large = verify_all_pass(
        &["verify", "--max-n", &max, "--checks", "conjecture_main", "--no-cache"],
        &records(&["conjecture_main"], CONJECTURE_MAX_N),
    )?;
    if small > SMALL_RUNTIME_LIMIT || large > LARGE_RUNTIME_LIMIT {
        return Err(format!("too slow: n<=8 {small:.2?}, n={CONJECTURE_MAX_N} {large:.2?}"));
    }
    Ok(format!(
        "M_n = D_n exactly for 2 <= n <= {CONJECTURE_MAX_N}; n <= 8 in {small:.2?} (limit 60 s), n = {CONJECTURE_MAX_N} in {large:.2?} (limit 30 min)"
    ))
}

fn poincare_identities() -> Verdict {
    let mut cache = MnCache::new();
    cache
        .extend_to(POINCARE_MAX_N, RecursionOptions::default())
        .map_err(|e| e.to_string())?;
    for n in 2..=POINCARE_MAX_N {
        let cap = natural_cap(n);
        let product = poincare_product(n - 2, cap);
        let m = cache.get(n).expect("filled").graded_dimension();
        let d = ch_d(n, cap).map_err(|e| e.to_string())?.graded_dimension();
        if m != product || d != product {
            return Err(format!("n={n}: dim M = {m}, dim D = {d}, product = {product}"));
        }
    }
    Ok(format!(
        "dim M_n = dim D_n = prod_(k=1..n-2) (1+kq) for 2 <= n <= {POINCARE_MAX_N}"
    ))
}

fn structural_identities() -> Verdict {
    let r = RESTRICTION_MAX_N.to_string();
    verify_all_pass(
        &["verify", "--max-n", &r, "--checks", "restriction", "--no-cache"],
        &records(&["restriction"], RESTRICTION_MAX_N),
    )?;
    let s = STRUCTURAL_MAX_N.to_string();
    let names = ["cdw", "ungraded", "regular", "degrees_024"];
    verify_all_pass(
        &["verify", "--max-n", &s, "--checks", &names.join(","), "--no-cache"],
        &records(&names, STRUCTURAL_MAX_N),
    )?;
    Ok(format!(
        "restriction for n <= {RESTRICTION_MAX_N}; cdw, ungraded, regular, degrees_024 for n <= {STRUCTURAL_MAX_N}"
    ))
}

fn schur(items: &[(&[usize], &[i64])], cap: usize) -> SymFunc {
    let degree = items[0].0.iter().sum();
    SymFunc::from_terms(
        degree,
        Basis::Schur,
        cap,
        items.iter().map(|(p, c)| {
            (
                Partition::new(p.to_vec()).expect("partition"),
                QSeries::from_ints(c.iter().copied(), cap),
            )
        }),
    )
    .expect("valid terms")
}

fn golden_values() -> Verdict {
    let c3 = schur(&[(&[3], &[1, 0, 0]), (&[2, 1], &[0, 1, 1]), (&[1, 1, 1], &[0, 1, 0])], 2);
    let d3 = schur(&[(&[3], &[1, 0]), (&[1, 1, 1], &[0, 1])], 1);
    let m3 = d3.clone();
    let r2 = schur(&[(&[2], &[1, 0, 1, 0]), (&[1, 1], &[0, 1, 0, 1])], 3);
    let mut cache = MnCache::new();
    cache
        .extend_to(3, RecursionOptions::default())
        .map_err(|e| e.to_string())?;
    let checks = [
        ("ch C_3", ch_c(3, 2).map_err(|e| e.to_string())?, c3),
        ("ch D_3", ch_d(3, 1).map_err(|e| e.to_string())?, d3),
        ("ch M_3", cache.get(3).expect("filled").clone(), m3),
        ("ch R_2", ch_r(2, 3).map_err(|e| e.to_string())?, r2),
    ];
    for (label, got, want) in &checks {
        if !got.same_as(want) {
            return Err(format!("{label} = {got}, expected {want}"));
        }
    }
    Ok("ch C_3, ch D_3, ch M_3 and ch R_2 (cap 3) match the hand-derived expansions".into())
}

fn schur_terms(f: &SymFunc) -> Result<Vec<(Vec<usize>, BigInt)>, String> {
    f.to_schur()
        .terms()
        .map(|(p, c)| {
            let x = c.coeff(0);
            if x.is_integer() {
                Ok((p.parts().to_vec(), x.to_integer()))
            } else {
                Err(format!("non-integral coefficient in {f}"))
            }
        })
        .collect()
}

fn kernel_oracles() -> Verdict {
    let mut plethysms = 0;
    for a in 1..=PLETHYSM_MAX_DEGREE {
        for b in 1..=PLETHYSM_MAX_DEGREE / a {
            let vars = a * b;
            let shapes = |d: usize| -> Vec<(SymFunc, Vec<usize>)> {
                let mut v: Vec<(SymFunc, Vec<usize>)> = enumerate_partitions(d)
                    .into_iter()
                    .map(|p| (SymFunc::schur(p.clone(), 0), p.parts().to_vec()))
                    .collect();
                v.push((SymFunc::complete(d, 0), vec![d]));
                v.push((SymFunc::elementary(d, 0), vec![1; d]));
                v
            };
            for (f, mu) in &shapes(a) {
                for (g, lambda) in &shapes(b) {
                    let got = f.plethysm(g).map_err(|e| e.to_string())?;
                    let want = oracle::plethysm_by_monomials(mu, lambda, vars);
                    if oracle::schur_combination(&schur_terms(&got)?, vars) != want {
                        return Err(format!("plethysm {f} [ {g} ] disagrees with the monomial oracle"));
                    }
                    plethysms += 1;
                }
            }
        }
    }
    let mut kroneckers = 0;
    for n in 1..=KRONECKER_MAX_N {
        for lam in enumerate_partitions(n) {
            for mu in enumerate_partitions(n) {
                let got = SymFunc::schur(lam.clone(), 0)
                    .kronecker(&SymFunc::schur(mu.clone(), 0))
                    .map_err(|e| e.to_string())?;
                if schur_terms(&got)? != oracle::kronecker_product(lam.parts(), mu.parts()) {
                    return Err(format!("kronecker s{lam} * s{mu} disagrees with characters"));
                }
                kroneckers += 1;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for n in 1..=ROUND_TRIP_MAX_N {
        let parts = enumerate_partitions(n);
        for _ in 0..ROUND_TRIP_SAMPLES {
            let cap = rng.random_range(0..=3);
            let mut terms = Vec::new();
            for p in &parts {
                if rng.random_bool(0.5) {
                    let coeffs: Vec<BigRational> = (0..=cap)
                        .map(|_| {
                            BigRational::new(
                                BigInt::from(rng.random_range(-20i64..=20)),
                                BigInt::from(rng.random_range(1i64..=6)),
                            )
                        })
                        .collect();
                    terms.push((p.clone(), QSeries::from_coeffs(coeffs, cap)));
                }
            }
            for basis in [Basis::Schur, Basis::PowerSum] {
                let f = SymFunc::from_terms(n, basis, cap, terms.clone()).map_err(|e| e.to_string())?;
                let back = match basis {
                    Basis::Schur => f.to_powersum().to_schur(),
                    Basis::PowerSum => f.to_schur().to_powersum(),
                };
                if back != f {
                    return Err(format!("basis round trip changed {f}"));
                }
            }
        }
    }
    Ok(format!(
        "{plethysms} plethysms (output degree <= {PLETHYSM_MAX_DEGREE}), {kroneckers} Kronecker products (n <= {KRONECKER_MAX_N}), {ROUND_TRIP_SAMPLES} round trips per n <= {ROUND_TRIP_MAX_N} in each basis"
    ))
}

fn graph_identities() -> Verdict {
    let mut graphs = 0;
    for n in 1..=CONE_MAX_VERTICES {
        for g in connected_graphs(n) {
            let f = f_polynomial(&g).map_err(|e| e.to_string())?;
            let h = h_polynomial(&g.cone().map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
            if f != h {
                return Err(format!("h(cone) != f for {g}"));
            }
            graphs += 1;
        }
    }
    for n in 2..=COMPLETE_GRAPH_MAX_N {
        let k = Graph::complete(n).map_err(|e| e.to_string())?;
        let f = f_polynomial(&k).map_err(|e| e.to_string())?;
        let h = h_polynomial(&k).map_err(|e| e.to_string())?;
        let want_f = poincare_product(n - 1, n - 1).to_integers().expect("integral");
        let want_h = poincare_product(n - 2, n - 2).to_integers().expect("integral");
        if f != want_f || h != want_h {
            return Err(format!("K_{n}: f = {f:?}, h = {h:?}"));
        }
    }
    let out = otsym(&["graph", "cone-check", "--all-connected", &CONE_MAX_VERTICES.to_string()]);
    let summary = String::from_utf8_lossy(&out.stdout);
    let want = format!("cone-check: {graphs} connected graphs, {graphs} passed, 0 failed\n");
    if !out.status.success() || summary != want {
        return Err(format!("cli cone-check reported {summary:?}"));
    }
    Ok(format!(
        "h(cone) = f on all {graphs} connected graphs with <= {CONE_MAX_VERTICES} vertices; K_n products for n <= {COMPLETE_GRAPH_MAX_N}"
    ))
}

fn determinism() -> Verdict {
    let run = |jobs: &str| otsym(&["verify", "--max-n", "8", "--no-cache", "--jobs", jobs]);
    let base = run("1");
    if base.status.code() != Some(0) || base.stdout.is_empty() {
        return Err("baseline verify run failed".into());
    }
    for jobs in ["1", "2", "4", "7"] {
        if run(jobs).stdout != base.stdout {
            return Err(format!("verify output with --jobs {jobs} differs from --jobs 1"));
        }
    }
    let compute = |jobs: &str| otsym(&["compute", "--what", "M", "--n", "9", "--no-cache", "--jobs", jobs]);
    let m = compute("1");
    if !m.status.success() || m.stdout.is_empty() {
        return Err("baseline compute run failed".into());
    }
    for jobs in ["1", "3"] {
        if compute(jobs).stdout != m.stdout {
            return Err(format!("compute output with --jobs {jobs} differs"));
        }
    }
    Ok(format!(
        "verify (n <= 8, {} bytes) and compute M_9 byte-identical across repeated runs and --jobs 1, 2, 3, 4, 7",
        base.stdout.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("conjecture reproduction", conjecture_reproduction),
        ("Poincare identities", poincare_identities),
        ("structural identities", structural_identities),
        ("hand-derived golden values", golden_values),
        ("kernel oracle equivalence", kernel_oracles),
        ("graph module", graph_identities),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    println!();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let verdict = panic::catch_unwind(AssertUnwindSafe(run))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        match verdict {
            Ok(detail) => println!("criterion {} {name}: PASS ({detail})", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} {name}: FAIL ({detail})", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
