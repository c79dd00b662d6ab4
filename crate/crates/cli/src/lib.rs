//! The `hollow` command line, as a library so it can be driven in-process.
//!
//! Exit codes: 0 when the queried property (or the whole suite) holds, 1
//! when it fails (a witness is printed), 2 on any input error.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hollow_core::construct::{amalgam, coproduct, induced, rees_quotient};
use hollow_core::enumerate::{enumerate_acts_ordered, SeedOrder};
use hollow_core::format::{read_act_file, ActFile, Loaded};
use hollow_core::lab::{self, Corpus, Mode};
use hollow_core::predicates::{self as p, PropertyVerdict, SupplementReading, Witness};
use hollow_core::{Act, ElemSet, Lattice, MonoidSpec, Subact};

#[derive(Debug, Parser)]
#[command(name = "hollow", version, about = "Subact structure of finite right acts over finite monoids")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide a property of an act (or of one of its subacts), or replay a claim instance.
    Check(CheckArgs),
    /// List subact structure or build a new act.
    Compute(ComputeArgs),
    /// Run the claim registry over a corpus of acts.
    Suite(SuiteArgs),
    /// List every act of a given size over a monoid.
    Enumerate(EnumerateArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Property {
    Superfluous,
    Coessential,
    Hollow,
    CoUniform,
    Indecomposable,
    Cyclic,
    LocallyCyclic,
    Simple,
    Local,
    Uniserial,
    Supplemented,
    Projective,
    Supplement,
    Cover,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReadingArg {
    Strict,
    Relaxed,
}

impl From<ReadingArg> for SupplementReading {
    fn from(r: ReadingArg) -> Self {
        match r {
            ReadingArg::Strict => SupplementReading::Strict,
            ReadingArg::Relaxed => SupplementReading::Relaxed,
        }
    }
}

#[derive(Debug, clap::Args)]
pub struct CheckArgs {
    /// Act file (JSON).
    pub file: PathBuf,
    #[arg(long, value_enum, required_unless_present = "claim", conflicts_with = "claim")]
    pub property: Option<Property>,
    /// Named subact(s) of the file the property is about, in order (B, then C).
    #[arg(long = "subact")]
    pub subacts: Vec<String>,
    /// Evaluate the property on this named subact, viewed as an act.
    #[arg(long)]
    pub within: Option<String>,
    /// Replay a registry claim on the instance stored in the file.
    #[arg(long)]
    pub claim: Option<String>,
    /// Supplement reading (default relaxed).
    #[arg(long, value_enum)]
    pub reading: Option<ReadingArg>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Computation {
    Subacts,
    Maximals,
    Radical,
    Decompose,
    MinGens,
    Supplements,
    Quotient,
    Coproduct,
    Amalgam,
}

#[derive(Debug, clap::Args)]
pub struct ComputeArgs {
    pub file: PathBuf,
    #[arg(value_enum)]
    pub what: Computation,
    /// Named subact for supplements, quotient and amalgam.
    #[arg(long)]
    pub subact: Option<String>,
    /// Further act files for coproduct.
    #[arg(long = "with")]
    pub others: Vec<PathBuf>,
    #[arg(long, value_enum, default_value = "relaxed")]
    pub reading: ReadingArg,
    /// Write a constructed act here instead of printing it.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Strict,
    Relaxed,
    Both,
}

#[derive(Debug, clap::Args)]
pub struct SuiteArgs {
    /// `catalog`, or monoid specs / monoid files (comma separated or repeated).
    #[arg(long, value_delimiter = ',', default_value = "catalog")]
    pub monoids: Vec<String>,
    #[arg(long, default_value_t = 6)]
    pub max_size: usize,
    /// Largest size enumerated on every labelling (default min(max-size, 5)).
    #[arg(long)]
    pub raw_max: Option<usize>,
    /// Claim ids, `all`, or `strictness` for the witness search.
    #[arg(long, value_delimiter = ',', default_value = "all")]
    pub claims: Vec<String>,
    #[arg(long, value_enum, default_value = "both")]
    pub mode: ModeArg,
    /// JSON-lines report destination (stdout when absent).
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Run on a single thread.
    #[arg(long)]
    pub sequential: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeedOrderArg {
    Lex,
    Search,
}

#[derive(Debug, clap::Args)]
pub struct EnumerateArgs {
    /// Monoid spec (e.g. `S2`, `min_chain(3)`) or monoid file.
    #[arg(long)]
    pub monoid: String,
    #[arg(long)]
    pub size: usize,
    /// One act per isomorphism class.
    #[arg(long)]
    pub iso: bool,
    #[arg(long, value_enum, default_value = "lex")]
    pub seed_order: SeedOrderArg,
    /// Print only the number of acts.
    #[arg(long)]
    pub count: bool,
    /// Emit each act as a one-line act file.
    #[arg(long)]
    pub json: bool,
}

/// What a command printed and how it ended.
#[derive(Debug, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, ..Default::default() }
            } else {
                Outcome { code, stderr: text, ..Default::default() }
            };
        }
    };
    let mut out = Outcome::default();
    let result = match &cli.command {
        Command::Check(a) => check(a, &mut out),
        Command::Compute(a) => compute(a, &mut out),
        Command::Suite(a) => suite(a, &mut out),
        Command::Enumerate(a) => enumerate(a, &mut out),
    };
    match result {
        Ok(code) => out.code = code,
        Err(e) => {
            out.code = 2;
            let _ = writeln!(out.stderr, "error: {e:#}");
        }
    }
    out
}

fn labels(act: &Act, set: ElemSet) -> Vec<String> {
    set.iter().map(|a| act.label(a).to_string()).collect()
}

fn label_list(act: &Act, v: &[usize]) -> Vec<String> {
    v.iter().map(|&a| act.label(a).to_string()).collect()
}

fn show(act: &Act, set: ElemSet) -> String {
    if set.is_empty() {
        "∅".into()
    } else {
        format!("{{{}}}", labels(act, set).join(", "))
    }
}

fn witness_json(act: &Act, w: &Witness) -> Value {
    match w {
        Witness::Subact { subact } => json!({ "kind": "subact", "subact": label_list(act, subact) }),
        Witness::Pair { subact, partner } => json!({
            "kind": "pair", "subact": label_list(act, subact), "partner": label_list(act, partner),
        }),
        Witness::Subacts { subacts } => json!({
            "kind": "subacts",
            "subacts": subacts.iter().map(|s| label_list(act, s)).collect::<Vec<_>>(),
        }),
        Witness::Element { element } => json!({ "kind": "element", "element": act.label(*element) }),
        Witness::Elements { first, second } => json!({
            "kind": "elements", "first": act.label(*first), "second": act.label(*second),
        }),
        Witness::NotEpi => json!({ "kind": "not_epi" }),
        Witness::Note { note } => json!({ "kind": "note", "note": note }),
    }
}

fn witness_text(act: &Act, w: &Witness) -> String {
    let set = |v: &[usize]| show(act, v.iter().copied().collect());
    match w {
        Witness::Subact { subact } => set(subact),
        Witness::Pair { subact, partner } => format!("{} with {}", set(subact), set(partner)),
        Witness::Subacts { subacts } => subacts.iter().map(|s| set(s)).collect::<Vec<_>>().join(", "),
        Witness::Element { element } => act.label(*element).to_string(),
        Witness::Elements { first, second } => format!("{}, {}", act.label(*first), act.label(*second)),
        Witness::NotEpi => "not onto".into(),
        Witness::Note { note } => note.clone(),
    }
}

fn subact_named(loaded: &Loaded, name: &str) -> Result<Subact> {
    Ok(loaded.subact(name)?)
}

fn reading_of(r: Option<ReadingArg>) -> SupplementReading {
    r.map(Into::into).unwrap_or(SupplementReading::Relaxed)
}

fn check(a: &CheckArgs, out: &mut Outcome) -> Result<i32> {
    let loaded = read_act_file(&a.file)?;
    if let Some(id) = &a.claim {
        return check_claim(a, id, &loaded, out);
    }
    let prop = a.property.expect("clap requires a property or a claim");
    let (act, rename): (Act, Option<Vec<usize>>) = match &a.within {
        Some(name) => {
            let (sub, embed) = induced(&loaded.act, subact_named(&loaded, name)?);
            (sub, Some(embed))
        }
        None => (loaded.act.clone(), None),
    };
    let subacts: Vec<Subact> = a
        .subacts
        .iter()
        .map(|n| {
            let s = subact_named(&loaded, n)?;
            match &rename {
                None => Ok(s),
                Some(embed) => {
                    let set: ElemSet = embed
                        .iter()
                        .enumerate()
                        .filter(|(_, &x)| s.contains(x))
                        .map(|(i, _)| i)
                        .collect();
                    if set.len() != s.len() {
                        bail!("subact `{n}` is not inside `{}`", a.within.as_deref().unwrap_or_default());
                    }
                    Ok(act.subact(set)?)
                }
            }
        })
        .collect::<Result<_>>()?;
    let arity = match prop {
        Property::Superfluous | Property::Coessential => 1,
        Property::Supplement => 2,
        _ => 0,
    };
    if subacts.len() != arity {
        bail!("`{}` takes {arity} subact(s), got {}", prop_name(prop), subacts.len());
    }
    let reading = reading_of(a.reading);
    let verdict: PropertyVerdict = match prop {
        Property::Superfluous => p::is_superfluous(&act, subacts[0]),
        Property::Coessential => p::is_coessential(&act, subacts[0]),
        Property::Hollow => p::is_hollow(&act),
        Property::CoUniform => p::is_co_uniform(&act),
        Property::Indecomposable => p::is_indecomposable(&act),
        Property::Cyclic | Property::LocallyCyclic | Property::Simple => {
            let c = p::cyclicity(&act);
            let holds = match prop {
                Property::Cyclic => c.is_cyclic,
                Property::LocallyCyclic => c.is_locally_cyclic,
                _ => c.is_simple,
            };
            if holds {
                PropertyVerdict::yes()
            } else if let (Property::LocallyCyclic, Some((x, y))) = (prop, c.separated_pair) {
                PropertyVerdict::no(Witness::Elements { first: x, second: y })
            } else if prop == Property::Simple {
                let proper = Lattice::of(&act).proper().next().expect("not simple");
                PropertyVerdict::no(Witness::subact(proper))
            } else {
                PropertyVerdict::no(Witness::Note { note: "no single generator".into() })
            }
        }
        Property::Local => p::is_local_act(&act),
        Property::Uniserial => p::is_uniserial(&act),
        Property::Supplemented => p::is_supplemented(&act, reading),
        Property::Projective => p::is_projective(&act),
        Property::Supplement => p::is_supplement(&act, subacts[0], subacts[1], reading)?,
        Property::Cover => {
            if a.within.is_some() {
                bail!("`cover` is about the file's homomorphism and takes no --within");
            }
            let f = loaded.hom.as_ref().ok_or_else(|| anyhow!("`cover` needs a `hom` in the file"))?;
            p::is_cover(f)
        }
    };
    let uses_reading = matches!(prop, Property::Supplemented | Property::Supplement);
    if a.json {
        let mut report = json!({
            "property": prop_name(prop),
            "holds": verdict.holds,
            "witness": verdict.witness.as_ref().map(|w| witness_json(&act, w)),
        });
        if let Some(n) = &a.within {
            report["within"] = json!(n);
        }
        if !a.subacts.is_empty() {
            report["subacts"] = json!(a.subacts);
        }
        if uses_reading {
            report["reading"] = json!(reading);
        }
        writeln!(out.stdout, "{}", serde_json::to_string(&report)?)?;
    } else {
        let what = match (&a.within, a.subacts.is_empty()) {
            (Some(w), _) => format!("{} (within {w})", prop_name(prop)),
            (None, true) => prop_name(prop).to_string(),
            (None, false) => format!("{} {}", prop_name(prop), a.subacts.join(" ")),
        };
        match &verdict.witness {
            None => writeln!(out.stdout, "{what}: holds")?,
            Some(w) => writeln!(out.stdout, "{what}: fails, witness {}", witness_text(&act, w))?,
        }
    }
    Ok(if verdict.holds { 0 } else { 1 })
}

fn check_claim(a: &CheckArgs, id: &str, loaded: &Loaded, out: &mut Outcome) -> Result<i32> {
    let claim = lab::find(id).ok_or_else(|| anyhow!("unknown claim `{id}`"))?;
    let reading = claim.reading_dependent.then(|| reading_of(a.reading));
    let detail = lab::replay(id, reading, loaded)?;
    if a.json {
        let report = json!({ "claim": id, "reading": reading, "holds": detail.is_none(), "detail": detail });
        writeln!(out.stdout, "{}", serde_json::to_string(&report)?)?;
    } else {
        match &detail {
            None => writeln!(out.stdout, "{id}: holds on this instance")?,
            Some(d) => writeln!(out.stdout, "{id}: fails, {d}")?,
        }
    }
    Ok(if detail.is_none() { 0 } else { 1 })
}

fn prop_name(p: Property) -> &'static str {
    match p {
        Property::Superfluous => "superfluous",
        Property::Coessential => "coessential",
        Property::Hollow => "hollow",
        Property::CoUniform => "co-uniform",
        Property::Indecomposable => "indecomposable",
        Property::Cyclic => "cyclic",
        Property::LocallyCyclic => "locally-cyclic",
        Property::Simple => "simple",
        Property::Local => "local",
        Property::Uniserial => "uniserial",
        Property::Supplemented => "supplemented",
        Property::Projective => "projective",
        Property::Supplement => "supplement",
        Property::Cover => "cover",
    }
}

fn compute(a: &ComputeArgs, out: &mut Outcome) -> Result<i32> {
    let loaded = read_act_file(&a.file)?;
    let act = &loaded.act;
    let need_subact = || -> Result<Subact> {
        let name = a.subact.as_deref().ok_or_else(|| anyhow!("this computation needs --subact"))?;
        subact_named(&loaded, name)
    };
    let sets = |v: &[ElemSet]| v.iter().map(|&s| labels(act, s)).collect::<Vec<_>>();
    let shows = |v: &[ElemSet]| v.iter().map(|&s| show(act, s)).collect::<Vec<_>>().join(" ");
    let (report, text): (Value, String) = match a.what {
        Computation::Subacts => {
            let l = Lattice::of(act);
            (json!({ "subacts": sets(l.subacts()) }), shows(l.subacts()))
        }
        Computation::Maximals => {
            let m = Lattice::of(act).maximals();
            (json!({ "maximals": sets(&m) }), if m.is_empty() { "none".into() } else { shows(&m) })
        }
        Computation::Radical => {
            let r = p::radical(act);
            (
                json!({ "radical": labels(act, r.subset), "is_whole": r.is_whole, "maximals": sets(&r.maximals) }),
                format!("{} (maximals: {})", show(act, r.subset), if r.maximals.is_empty() { "none".into() } else { shows(&r.maximals) }),
            )
        }
        Computation::Decompose => {
            let parts: Vec<ElemSet> = p::decompose(act).into_iter().map(Subact::set).collect();
            (json!({ "components": sets(&parts) }), shows(&parts))
        }
        Computation::MinGens => {
            let g = p::minimal_generating_sets(act);
            (json!({ "minimal_generating_sets": sets(&g) }), shows(&g))
        }
        Computation::Supplements => {
            let b = need_subact()?;
            let reading = SupplementReading::from(a.reading);
            let s: Vec<ElemSet> = p::supplements_of(act, b, reading)?.into_iter().map(Subact::set).collect();
            (
                json!({ "subact": labels(act, b.set()), "reading": reading, "supplements": sets(&s) }),
                if s.is_empty() { "none".into() } else { shows(&s) },
            )
        }
        Computation::Quotient => return emit_act(a, out, &rees_quotient(act, need_subact()?).0),
        Computation::Amalgam => return emit_act(a, out, &amalgam(act, need_subact()?)?),
        Computation::Coproduct => {
            let mut parts = vec![act.clone()];
            for f in &a.others {
                parts.push(read_act_file(f)?.act);
            }
            return emit_act(a, out, &coproduct(&parts)?.0);
        }
    };
    if a.json {
        writeln!(out.stdout, "{}", serde_json::to_string(&report)?)?;
    } else {
        writeln!(out.stdout, "{text}")?;
    }
    Ok(0)
}

fn emit_act(a: &ComputeArgs, out: &mut Outcome, act: &Act) -> Result<i32> {
    let text = ActFile::from_act(act).to_json();
    match &a.out {
        Some(path) => {
            std::fs::write(path, format!("{text}\n")).with_context(|| format!("writing {}", path.display()))?;
            writeln!(out.stdout, "wrote {}-element act to {}", act.size(), path.display())?;
        }
        None => writeln!(out.stdout, "{text}")?,
    }
    Ok(0)
}

/// A spec string, or a path to a monoid (or act) file.
pub fn parse_monoid_spec(s: &str) -> Result<MonoidSpec> {
    if Path::new(s).is_file() {
        return Ok(MonoidSpec::Table(s.to_string()));
    }
    Ok(s.parse()?)
}

fn suite(a: &SuiteArgs, out: &mut Outcome) -> Result<i32> {
    let mut corpus = if a.monoids.iter().any(|m| m == "catalog") {
        if a.monoids.len() > 1 {
            bail!("`catalog` cannot be combined with other monoids");
        }
        Corpus::catalog(a.max_size)
    } else {
        let specs = a.monoids.iter().map(|s| parse_monoid_spec(s)).collect::<Result<Vec<_>>>()?;
        Corpus::from_specs(&specs, a.max_size)?
    };
    if let Some(r) = a.raw_max {
        corpus.raw_max = r.min(a.max_size);
    }
    let strictness = a.claims.iter().any(|c| c == "strictness");
    let ids: Vec<String> = a.claims.iter().filter(|c| *c != "strictness").cloned().collect();
    let mode = match a.mode {
        ModeArg::Strict => Mode::Strict,
        ModeArg::Relaxed => Mode::Relaxed,
        ModeArg::Both => Mode::Both,
    };
    let exec = if a.sequential { hollow_core::Execution::Sequential } else { hollow_core::Execution::default() };
    let reports = if ids.is_empty() {
        lab::select(Some(&[]))?;
        Vec::new()
    } else {
        lab::run_suite_with(&corpus, Some(&ids), mode, exec)?
    };
    let mut lines = String::new();
    for r in &reports {
        lines.push_str(&r.to_json_line());
        lines.push('\n');
    }
    let mut summary = String::new();
    if strictness {
        for e in lab::strictness_witness_search(&corpus) {
            lines.push_str(&serde_json::to_string(&json!({ "strictness": e }))?);
            lines.push('\n');
            match (&e.monoid, &e.note) {
                (Some(m), _) => writeln!(summary, "{:32} witness over {m}", e.implication)?,
                (None, Some(n)) => writeln!(summary, "{:32} {n}", e.implication)?,
                (None, None) => writeln!(summary, "{:32} not found", e.implication)?,
            }
        }
    }
    for r in &reports {
        let reading = r.reading.map(|x| format!(" [{x}]")).unwrap_or_default();
        let status = match (r.passed(), r.open_question) {
            (true, _) => "ok",
            (false, true) => "open",
            (false, false) => "FAIL",
        };
        writeln!(
            summary,
            "{:30} {:5} {:>10} instances {:>8} failures",
            format!("{}{reading}", r.claim),
            status,
            r.instances_checked,
            r.failure_count
        )?;
    }
    match &a.out {
        Some(path) => {
            let mut f = std::fs::File::create(path).with_context(|| format!("creating {}", path.display()))?;
            f.write_all(lines.as_bytes())?;
            out.stdout.push_str(&summary);
        }
        None => {
            out.stdout.push_str(&lines);
            out.stderr.push_str(&summary);
        }
    }
    Ok(if lab::suite_passed(&reports) { 0 } else { 1 })
}

fn enumerate(a: &EnumerateArgs, out: &mut Outcome) -> Result<i32> {
    if a.size == 0 {
        bail!("--size must be at least 1");
    }
    let m = parse_monoid_spec(&a.monoid)?.build()?;
    let order = match a.seed_order {
        SeedOrderArg::Lex => SeedOrder::Lex,
        SeedOrderArg::Search => SeedOrder::Search,
    };
    let acts = enumerate_acts_ordered(&m, a.size, a.iso, order);
    if a.count {
        writeln!(out.stdout, "{}", acts.len())?;
        return Ok(0);
    }
    for act in &acts {
        if a.json {
            writeln!(out.stdout, "{}", serde_json::to_string(&ActFile::from_act(act))?)?;
        } else {
            let rows: Vec<String> = act
                .action_table()
                .iter()
                .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
                .collect();
            writeln!(out.stdout, "{}", rows.join(" | "))?;
        }
    }
    if !a.json {
        writeln!(out.stdout, "{} act(s)", acts.len())?;
    }
    Ok(0)
}
