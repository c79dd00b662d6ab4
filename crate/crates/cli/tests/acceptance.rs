//! Acceptance run over the desk corpus. Prints one PASS/FAIL line per
//! criterion and exits non-zero if any criterion fails.
//!
//! The full claim suite runs once and feeds criteria 2, 3 and 6.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use hollow_core::catalog::desk_catalog;
use hollow_core::construct::{amalgam, regular, theta_power};
use hollow_core::enumerate::count_acts;
use hollow_core::format::ActFile;
use hollow_core::lab::{self, ClaimReport, Corpus, Mode, NO_FINITE_WITNESS};
use hollow_core::predicates::*;
use hollow_core::{enumerate_acts, Act, ElemSet, Lattice, Monoid};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn timed<T>(limit: Duration, what: &str, f: impl FnOnce() -> T) -> Result<T, String> {
    let start = Instant::now();
    let out = f();
    let took = start.elapsed();
    ensure(took < limit, || format!("{what} took {took:.2?}"))?;
    Ok(out)
}

fn named_examples() -> Outcome {
    let second = Duration::from_secs(1);
    let mut checked = 0;
    for e in desk_catalog() {
        let m = &e.monoid;
        let spec = e.spec.to_string();
        timed(second, &format!("Θ⊔Θ over {spec}"), || -> Result<(), String> {
            let a = theta_power(m, 2);
            let t1 = a.subact(ElemSet::singleton(0)).unwrap();
            ensure(is_coessential(&a, t1).holds, || format!("{{θ1}} not coessential over {spec}"))?;
            ensure(!is_superfluous(&a, t1).holds, || format!("{{θ1}} superfluous over {spec}"))?;
            ensure(is_co_uniform(&a).holds, || format!("Θ⊔Θ not co-uniform over {spec}"))?;
            ensure(!is_hollow(&a).holds, || format!("Θ⊔Θ hollow over {spec}"))
        })??;
        timed(second, &format!("Θ⊔Θ⊔Θ over {spec}"), || -> Result<(), String> {
            let a = theta_power(m, 3);
            ensure(!is_co_uniform(&a).holds, || format!("Θ⊔Θ⊔Θ co-uniform over {spec}"))?;
            for r in SupplementReading::ALL {
                ensure(is_supplemented(&a, r).holds, || format!("Θ⊔Θ⊔Θ not {r}-supplemented over {spec}"))?;
            }
            Ok(())
        })??;
        let s = regular(m);
        for i in Lattice::of(&s).proper() {
            timed(second, &format!("amalgam over {spec}"), || -> Result<(), String> {
                let am = amalgam(&s, s.subact(i).unwrap()).unwrap();
                ensure(is_indecomposable(&am).holds, || format!("amalgam decomposes over {spec} along {i:?}"))?;
                ensure(!is_hollow(&am).holds, || format!("amalgam hollow over {spec} along {i:?}"))
            })??;
            checked += 1;
        }
    }
    Ok(format!("20 monoids, {checked} amalgams"))
}

fn summarize(reports: &[&ClaimReport]) -> (u64, Vec<String>) {
    let instances = reports.iter().map(|r| r.instances_checked).sum();
    let failing = reports
        .iter()
        .filter(|r| !r.passed() && !r.open_question)
        .map(|r| format!("{} ({} failures)", r.claim, r.failure_count))
        .collect();
    (instances, failing)
}

fn oracle_equivalence(reports: &[ClaimReport], took: Duration) -> Outcome {
    let oracles: Vec<&ClaimReport> = reports.iter().filter(|r| r.claim.starts_with("oracle.")).collect();
    for id in ["superfluous", "coessential", "hollow", "uniserial", "radical", "supplement"] {
        ensure(oracles.iter().any(|r| r.claim == format!("oracle.{id}")), || format!("oracle.{id} missing"))?;
    }
    let (instances, failing) = summarize(&oracles);
    ensure(failing.is_empty(), || format!("disagreements: {}", failing.join(", ")))?;
    ensure(took < Duration::from_secs(600), || format!("full corpus took {took:.0?}"))?;
    Ok(format!("{} oracles agree on {instances} instances; full suite {took:.0?}", oracles.len()))
}

fn theorem_suite(reports: &[ClaimReport], corpus: &Corpus) -> Outcome {
    let claims: Vec<&ClaimReport> = reports.iter().filter(|r| !r.claim.starts_with("oracle.")).collect();
    let (instances, failing) = summarize(&claims);
    // Open questions may split by reading but must come out the same twice.
    let open: Vec<String> = claims
        .iter()
        .filter(|r| lab::find(&r.claim).is_some_and(|c| c.open != lab::OpenQuestion::No))
        .map(|r| r.claim.clone())
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect();
    let again = lab::run_suite(corpus, Some(&open), Mode::Both).map_err(|e| e.to_string())?;
    for r in &again {
        let first = claims
            .iter()
            .find(|c| c.claim == r.claim && c.reading == r.reading)
            .ok_or_else(|| format!("{} missing from the first run", r.claim))?;
        ensure(first.failures == r.failures && first.failure_count == r.failure_count, || {
            format!("{} differs between runs", r.claim)
        })?;
    }
    let split: Vec<String> = claims
        .iter()
        .filter(|r| r.open_question && !r.passed())
        .map(|r| format!("{}[{}]", r.claim, r.reading.map(|x| x.to_string()).unwrap_or_default()))
        .collect();
    ensure(failing.is_empty(), || {
        format!("{} claims fail: {}", failing.len(), failing.join(", "))
    })?;
    Ok(format!(
        "{} reports, {instances} instances, open questions failing only under: {}",
        claims.len(),
        if split.is_empty() { "none".into() } else { split.join(", ") }
    ))
}

fn strictness(corpus: &Corpus) -> Outcome {
    let entries = lab::strictness_witness_search(corpus);
    let get = |name: &str| {
        entries
            .iter()
            .find(|e| e.implication == name)
            .ok_or_else(|| format!("no entry for {name}"))
    };
    let mut found = Vec::new();
    for name in [
        "coessential ⇏ superfluous",
        "co-uniform ⇏ hollow",
        "indecomposable ⇏ hollow",
        "supplemented ⇏ co-uniform",
    ] {
        let e = get(name)?;
        let file = e.witness.as_ref().ok_or_else(|| format!("no witness for {name}"))?;
        let w = file.load().map_err(|e| e.to_string())?;
        let a = &w.act;
        let separates = match name {
            "coessential ⇏ superfluous" => {
                let b = w.subact("B").map_err(|e| e.to_string())?;
                is_coessential(a, b).holds && !is_superfluous(a, b).holds
            }
            "co-uniform ⇏ hollow" => is_co_uniform(a).holds && !is_hollow(a).holds,
            "indecomposable ⇏ hollow" => is_indecomposable(a).holds && !is_hollow(a).holds,
            _ => {
                SupplementReading::ALL.iter().all(|&r| is_supplemented(a, r).holds) && !is_co_uniform(a).holds
            }
        };
        ensure(separates, || format!("witness for {name} does not separate"))?;
        found.push(format!("{name} over {}", e.monoid.as_deref().unwrap_or("?")));
    }
    for name in ["hollow ⇏ locally cyclic", "locally cyclic ⇏ cyclic"] {
        let e = get(name)?;
        ensure(!e.found, || format!("unexpected finite witness for {name}"))?;
        ensure(e.note.as_deref().is_some_and(|n| n.starts_with(NO_FINITE_WITNESS)), || {
            format!("missing note for {name}")
        })?;
    }
    Ok(format!("{}; notes for the two finite coincidences", found.join("; ")))
}

/// Independent count: fix the forced identity column, try every other entry.
fn filtered_count(m: &Monoid, size: usize) -> usize {
    let n = m.size();
    let free: Vec<usize> = (0..n).filter(|&s| s != m.identity()).collect();
    let mut table = vec![0usize; size * n];
    let mut count = 0;
    for code in 0..size.pow((size * free.len()) as u32) {
        let mut c = code;
        for a in 0..size {
            table[a * n + m.identity()] = a;
            for &s in &free {
                table[a * n + s] = c % size;
                c /= size;
            }
        }
        count += (0..size)
            .all(|a| (0..n).all(|s| (0..n).all(|t| table[table[a * n + s] * n + t] == table[a * n + m.mul(s, t)])))
            as usize;
    }
    count
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    (0..n).fold(vec![vec![]], |acc, k| {
        acc.into_iter()
            .flat_map(|p: Vec<usize>| {
                (0..=k).map(move |i| {
                    let mut q = p.clone();
                    q.insert(i, k);
                    q
                })
            })
            .collect()
    })
}

fn isomorphic(a: &Act, b: &Act, perms: &[Vec<usize>]) -> bool {
    let m = a.monoid().size();
    perms
        .iter()
        .any(|p| (0..a.size()).all(|x| (0..m).all(|s| p[a.act(x, s)] == b.act(p[x], s))))
}

fn enumeration_soundness() -> Outcome {
    let mut pairs = 0;
    for e in desk_catalog() {
        let m = &e.monoid;
        for n in (1..).take_while(|n| n * m.size() <= 9) {
            let (ours, oracle) = (count_acts(m, n), filtered_count(m, n));
            ensure(ours == oracle, || format!("{} size {n}: {ours} acts, filtering gives {oracle}", e.spec))?;
            pairs += 1;
        }
    }
    let mut classes = 0;
    for e in desk_catalog().into_iter().filter(|e| e.monoid.size() <= 3) {
        for n in 1..=4 {
            let perms = permutations(n);
            let reps = enumerate_acts(&e.monoid, n, true);
            for (i, a) in reps.iter().enumerate() {
                ensure(reps[i + 1..].iter().all(|b| !isomorphic(a, b, &perms)), || {
                    format!("{} size {n}: two representatives are isomorphic", e.spec)
                })?;
            }
            for raw in enumerate_acts(&e.monoid, n, false) {
                let hits = reps.iter().filter(|r| isomorphic(&raw, r, &perms)).count();
                ensure(hits == 1, || format!("{} size {n}: a raw act matches {hits} representatives", e.spec))?;
            }
            classes += reps.len();
        }
    }
    Ok(format!("{pairs} raw counts match; {classes} classes partition the raw acts"))
}

fn replayability(reports: &[ClaimReport]) -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut replayed = 0;
    for r in reports {
        for (k, f) in r.failures.iter().enumerate() {
            let path = dir.path().join(format!("{k}.json"));
            std::fs::write(&path, f.instance.to_json()).map_err(|e| e.to_string())?;
            let mut args = vec![
                "hollow".to_string(),
                "check".into(),
                path.display().to_string(),
                "--claim".into(),
                r.claim.clone(),
                "--json".into(),
            ];
            if let Some(reading) = r.reading {
                args.extend(["--reading".into(), reading.to_string()]);
            }
            let out = hollow_cli::run(&args);
            ensure(out.code == 1, || format!("{} replay exited {}: {}", r.claim, out.code, out.stderr))?;
            let v: serde_json::Value = serde_json::from_str(out.stdout.trim()).map_err(|e| e.to_string())?;
            let (got, want) = (v["detail"].to_string(), f.detail.to_string());
            ensure(got == want, || format!("{} replay gave {got}, report has {want}", r.claim))?;
            ActFile::parse(&f.instance.to_json()).map_err(|e| e.to_string())?;
            replayed += 1;
        }
    }
    ensure(replayed > 0, || "no counterexamples to replay".into())?;
    Ok(format!("{replayed} counterexample payloads reproduced through `check --claim`"))
}

fn main() -> ExitCode {
    let corpus = Corpus::desk();
    let start = Instant::now();
    let reports = lab::run_suite(&corpus, None, Mode::Both);
    let took = start.elapsed();
    let results: Vec<(&str, Outcome)> = match &reports {
        Ok(reports) => vec![
            ("named examples", named_examples()),
            ("oracle equivalence", oracle_equivalence(reports, took)),
            ("theorem suite", theorem_suite(reports, &corpus)),
            ("strictness witnesses", strictness(&corpus)),
            ("enumeration soundness", enumeration_soundness()),
            ("replayability", replayability(reports)),
        ],
        Err(e) => vec![("suite", Err(e.to_string()))],
    };
    let mut all = true;
    for (i, (name, outcome)) in results.iter().enumerate() {
        match outcome {
            Ok(detail) => println!("criterion {} {name}: PASS ({detail})", i + 1),
            Err(why) => {
                all = false;
                println!("criterion {} {name}: FAIL ({why})", i + 1);
            }
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
