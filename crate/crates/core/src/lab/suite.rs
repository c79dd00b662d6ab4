//! Running the registry over a corpus and replaying what it reports.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::Serialize;
use serde_json::Value;

use crate::act::Act;
use crate::bitset::ElemSet;
use crate::error::{Error, Result};
use crate::format::{ActFile, Loaded};
use crate::hom::Hom;
use crate::par::{self, Execution};
use crate::predicates::SupplementReading;

use super::claims::{find, registry, Claim, Reading, Scope};
use super::corpus::{Corpus, Descriptor};
use super::ctx::Ctx;

/// Reports keep at most this many counterexamples; `failure_count` still
/// counts all of them.
pub const FAILURE_CAP: usize = 20;

/// Which supplement readings to run reading-dependent claims under.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Mode {
    Strict,
    Relaxed,
    #[default]
    Both,
}

impl Mode {
    pub fn readings(self) -> &'static [SupplementReading] {
        match self {
            Mode::Strict => &[SupplementReading::Strict],
            Mode::Relaxed => &[SupplementReading::Relaxed],
            Mode::Both => &SupplementReading::ALL,
        }
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "strict" => Ok(Mode::Strict),
            "relaxed" => Ok(Mode::Relaxed),
            "both" => Ok(Mode::Both),
            _ => Err(Error::Invalid(format!("unknown mode `{s}`"))),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Strict => "strict",
            Mode::Relaxed => "relaxed",
            Mode::Both => "both",
        })
    }
}

/// A counterexample: the instance as a self-contained act file (subacts
/// named after the claim's variables) and what the check saw.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Failure {
    pub monoid: String,
    pub instance: ActFile,
    pub detail: Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClaimReport {
    pub claim: String,
    pub statement: String,
    pub scope: Scope,
    pub reading: Option<SupplementReading>,
    pub open_question: bool,
    pub instances_checked: u64,
    pub failure_count: u64,
    pub failures: Vec<Failure>,
    #[serde(serialize_with = "as_seconds")]
    pub elapsed: Duration,
    pub corpus: Descriptor,
}

fn as_seconds<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

impl ClaimReport {
    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("reports always serialize")
    }
}

/// Whether a run is clean: no failures outside open questions.
pub fn suite_passed(reports: &[ClaimReport]) -> bool {
    reports.iter().all(|r| r.open_question || r.passed())
}

/// Resolves claim ids; `None` or `"all"` selects the whole registry.
pub fn select(ids: Option<&[String]>) -> Result<Vec<&'static Claim>> {
    match ids {
        None => Ok(registry().iter().collect()),
        Some(ids) if ids.iter().any(|i| i == "all") => Ok(registry().iter().collect()),
        Some(ids) => {
            let mut out = Vec::new();
            for id in ids {
                let c = find(id).ok_or_else(|| Error::UnknownClaim(id.clone()))?;
                if !out.iter().any(|o: &&Claim| o.id == c.id) {
                    out.push(c);
                }
            }
            out.sort_by(|a, b| a.id.cmp(b.id));
            Ok(out)
        }
    }
}

struct Job {
    claim: &'static Claim,
    reading: Reading,
}

#[derive(Default)]
struct Tally {
    checked: u64,
    failed: u64,
    kept: Vec<(Vec<ElemSet>, Value)>,
    elapsed: Duration,
}

#[derive(Default)]
struct Totals {
    checked: u64,
    failed: u64,
    failures: Vec<Failure>,
    elapsed: Duration,
}

pub fn run_suite(corpus: &Corpus, ids: Option<&[String]>, mode: Mode) -> Result<Vec<ClaimReport>> {
    run_suite_with(corpus, ids, mode, Execution::default())
}

/// Checks every selected claim on every applicable instance of `corpus`.
/// Reports come sorted by claim id, then reading, and keep the first
/// [`FAILURE_CAP`] failures in corpus order whatever `exec` is.
pub fn run_suite_with(corpus: &Corpus, ids: Option<&[String]>, mode: Mode, exec: Execution) -> Result<Vec<ClaimReport>> {
    let claims = select(ids)?;
    let jobs: Vec<Job> = claims
        .iter()
        .flat_map(|&claim| {
            let readings: Vec<Reading> = if claim.reading_dependent {
                mode.readings().iter().map(|&r| Some(r)).collect()
            } else {
                vec![None]
            };
            readings.into_iter().map(move |reading| Job { claim, reading })
        })
        .collect();
    let mut totals: Vec<Totals> = jobs.iter().map(|_| Totals::default()).collect();
    let wants = |scope: Scope| jobs.iter().any(|j| j.claim.scope == scope);

    for (spec, m) in &corpus.monoids {
        let spec = spec.to_string();
        let mut absorb = |source: &Act, hom: Option<&Hom>, tallies: Vec<Tally>| {
            for ((job, total), tally) in jobs.iter().zip(&mut totals).zip(tallies) {
                total.checked += tally.checked;
                total.failed += tally.failed;
                total.elapsed += tally.elapsed;
                for (tuple, detail) in tally.kept {
                    if total.failures.len() < FAILURE_CAP {
                        let instance = instance_file(job.claim, source, hom, &tuple);
                        total.failures.push(Failure { monoid: spec.clone(), instance, detail });
                    }
                }
            }
        };
        if wants(Scope::Monoid) {
            let ctx = super::claims::monoid_instance(m);
            let tallies = run_jobs(&jobs, Scope::Monoid, &ctx);
            absorb(&ctx.act, None, tallies);
        }
        if wants(Scope::Act) {
            let acts = corpus.acts(m);
            let results = par::map(exec, &acts, |a| run_jobs(&jobs, Scope::Act, &Ctx::new(a.clone(), None)));
            for (a, tallies) in acts.iter().zip(results) {
                absorb(a, None, tallies);
            }
        }
        if wants(Scope::Hom) {
            let homs = corpus.homs(m);
            let results = par::map(exec, &homs, |f| {
                run_jobs(&jobs, Scope::Hom, &Ctx::new(f.source().clone(), Some(f.clone())))
            });
            for (f, tallies) in homs.iter().zip(results) {
                absorb(f.source(), Some(f), tallies);
            }
        }
    }

    let descriptor = corpus.descriptor();
    Ok(jobs
        .iter()
        .zip(totals)
        .map(|(job, t)| ClaimReport {
            claim: job.claim.id.to_string(),
            statement: job.claim.statement.to_string(),
            scope: job.claim.scope,
            reading: job.reading,
            open_question: job.claim.is_open(job.reading),
            instances_checked: t.checked,
            failure_count: t.failed,
            failures: t.failures,
            elapsed: t.elapsed,
            corpus: descriptor.clone(),
        })
        .collect())
}

fn run_jobs(jobs: &[Job], scope: Scope, ctx: &Ctx) -> Vec<Tally> {
    jobs.iter()
        .map(|job| {
            let mut tally = Tally::default();
            if job.claim.scope != scope {
                return tally;
            }
            let start = Instant::now();
            for tuple in job.claim.tuples(ctx, job.reading) {
                tally.checked += 1;
                if let Some(detail) = job.claim.check(ctx, &tuple, job.reading) {
                    tally.failed += 1;
                    if tally.kept.len() < FAILURE_CAP {
                        tally.kept.push((tuple, detail));
                    }
                }
            }
            tally.elapsed = start.elapsed();
            tally
        })
        .collect()
}

fn instance_file(claim: &Claim, source: &Act, hom: Option<&Hom>, tuple: &[ElemSet]) -> ActFile {
    let mut file = ActFile::from_act(source);
    if let Some(f) = hom {
        file = file.with_hom(f);
    }
    for (name, &set) in claim.names.iter().zip(tuple) {
        file = match (claim.on_target, hom) {
            (true, Some(f)) => file.with_target_subset(name, f.target(), set),
            _ => file.with_subset(name, source, set),
        };
    }
    file
}

/// Re-runs `claim` on a loaded instance. `Ok(None)` means the claim holds
/// there, `Ok(Some(detail))` reproduces a failure. The instance must be one
/// the claim actually quantifies over.
pub fn replay(claim_id: &str, reading: Option<SupplementReading>, instance: &Loaded) -> Result<Option<Value>> {
    let claim = find(claim_id).ok_or_else(|| Error::UnknownClaim(claim_id.to_string()))?;
    let reading = if claim.reading_dependent {
        Some(reading.ok_or_else(|| Error::Invalid(format!("`{claim_id}` needs a supplement reading")))?)
    } else {
        None
    };
    let ctx = match claim.scope {
        Scope::Hom => {
            let f = instance
                .hom
                .clone()
                .ok_or_else(|| Error::Invalid(format!("`{claim_id}` needs a homomorphism")))?;
            Ctx::new(instance.act.clone(), Some(f))
        }
        _ => Ctx::new(instance.act.clone(), None),
    };
    let named = if claim.on_target { &instance.target_subacts } else { &instance.subacts };
    let tuple = claim
        .names
        .iter()
        .map(|name| {
            named
                .get(*name)
                .map(|s| s.set())
                .ok_or_else(|| Error::Invalid(format!("`{claim_id}` needs a subact named `{name}`")))
        })
        .collect::<Result<Vec<ElemSet>>>()?;
    if !claim.tuples(&ctx, reading).contains(&tuple) {
        return Err(Error::Invalid(format!("instance lies outside the hypotheses of `{claim_id}`")));
    }
    Ok(claim.check(&ctx, &tuple, reading))
}
