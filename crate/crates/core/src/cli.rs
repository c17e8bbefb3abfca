//! The `matchstat` command line.
//!
//! Exit codes: 0 on success (or a PASS/WARN report), 1 on a FAIL report or a
//! runtime error, 2 on a usage error.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::dyck::{profile_weight, to_dyck};
use crate::error::{Error, Result};
use crate::group::{GroupElement, GroupSpec, Preset};
use crate::limits::{Limits, CAP_ENV};
use crate::matching::{enumerate_matchings, Matching};
use crate::sequence::{level_distribution, DistributionMethod};
use crate::similarity::{
    cr_class_count_formula, crossing_sequence, mod2_class_count_formula, ne_class_count_formula,
    nesting_sequence, partition_classes, similarity_key, Mod2Stat,
};
use crate::transforms::{min_width_pair, PairKind};
use crate::verify::{check_theorem1, run_all, run_check, CheckId, CheckParams, Report, Status};

#[derive(Parser, Debug)]
#[command(name = "matchstat", version, about = "Crossing and nesting statistics of perfect matchings")]
struct Cli {
    #[command(flatten)]
    output: OutputArgs,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Largest number of matchings a command may enumerate (overrides MATCHSTAT_CAP).
    #[arg(long, global = true)]
    cap: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct OutputArgs {
    /// Emit JSON.
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,
    /// Emit CSV.
    #[arg(long, global = true)]
    csv: bool,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Format {
    Human,
    Json,
    Csv,
}

#[derive(Args, Debug)]
struct SpecArgs {
    /// Named statistic.
    #[arg(long, default_value = "cr", conflicts_with = "spec")]
    stat: String,
    /// Custom statistic as JSON: {"k":2,"m":0,"alpha":[1,0],"beta":[0,1]}.
    #[arg(long)]
    spec: Option<String>,
}

impl SpecArgs {
    fn resolve(&self) -> Result<GroupSpec> {
        match &self.spec {
            Some(text) => GroupSpec::from_json(text),
            None => crate::group::preset(&self.stat),
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Method {
    Brute,
    Sequence,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ClassStat {
    Cr,
    Ne,
    Cr2,
    Ne2,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    Nc,
    Cn,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Statistics of one matching.
    Stats { matching: String },
    /// Distribution of a statistic on one level of the tree below a matching.
    Level {
        matching: String,
        #[arg(long)]
        depth: usize,
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, value_enum, default_value = "brute")]
        method: Method,
    },
    /// Whether two matchings are similar.
    Similar {
        m: String,
        n: String,
        #[command(flatten)]
        spec: SpecArgs,
        /// Compare the statistic below M with the swapped statistic below N.
        #[arg(long)]
        swapped: bool,
        /// Also compare levels 0..=L by brute force.
        #[arg(long)]
        check_depth: Option<usize>,
    },
    /// Similarity classes of all matchings on [2n], with the closed-form count.
    Classes {
        n: usize,
        #[arg(long, value_enum, default_value = "cr")]
        stat: ClassStat,
    },
    /// All matchings on [2n].
    Enumerate { n: usize },
    /// Run a named check, or `all`.
    Verify {
        id: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        depth: Option<usize>,
    },
    /// Apply width-minimal exchanges.
    Transform {
        matching: String,
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, default_value_t = 1)]
        steps: usize,
    },
}

/// Parses `args` (program name first), runs the command and writes its
/// output to `out`. Diagnostics go to stderr.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            if e.use_stderr() {
                eprint!("{e}");
            } else {
                let _ = write!(out, "{e}");
            }
            return code;
        }
    };
    let mut limits = Limits::from_env();
    if let Some(cap) = cli.cap {
        limits.max_items = cap;
    }
    let format = if cli.output.json {
        Format::Json
    } else if cli.output.csv {
        Format::Csv
    } else {
        Format::Human
    };
    let result = match cli.threads {
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
            Ok(pool) => pool.install(|| execute(&cli.command, format, &limits)),
            Err(e) => {
                eprintln!("error: {e}");
                return 2;
            }
        },
        None => execute(&cli.command, format, &limits),
    };
    match result {
        Ok((text, code)) => match out.write_all(text.as_bytes()) {
            Ok(()) => code,
            Err(e) => {
                eprintln!("error: {e}");
                1
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            if matches!(e, Error::CapExceeded { .. }) {
                eprintln!("hint: raise the cap with --cap or {CAP_ENV}");
            }
            1
        }
    }
}

type Output = (String, i32);

fn execute(cmd: &Command, format: Format, limits: &Limits) -> Result<Output> {
    match cmd {
        Command::Stats { matching } => stats(&matching.parse()?, format),
        Command::Level { matching, depth, spec, method } => {
            let method = match method {
                Method::Brute => DistributionMethod::Brute,
                Method::Sequence => DistributionMethod::Sequence,
            };
            level_cmd(&matching.parse()?, *depth, &spec.resolve()?, method, format, limits)
        }
        Command::Similar { m, n, spec, swapped, check_depth } => {
            similar(&m.parse()?, &n.parse()?, &spec.resolve()?, *swapped, *check_depth, format, limits)
        }
        Command::Classes { n, stat } => classes(*n, *stat, format, limits),
        Command::Enumerate { n } => enumerate(*n, format, limits),
        Command::Verify { id, n, depth } => verify(id, CheckParams { n: *n, depth: *depth }, format, limits),
        Command::Transform { matching, kind, steps } => transform(&matching.parse()?, *kind, *steps, format),
    }
}

fn to_json<T: Serialize + ?Sized>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("value serializes");
    s.push('\n');
    s
}

fn csv_text(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

/// Map key for a group element: `3` or `1,0`.
fn element_key(e: &GroupElement) -> String {
    join(e.coords())
}

fn stats(m: &Matching, format: Format) -> Result<Output> {
    let cn = m.cross_nest();
    let ca = m.camels();
    let crs = crossing_sequence(m);
    let nes = nesting_sequence(m);
    let path = to_dyck(m);
    let profile = path.profile();
    let s = profile_weight(&profile);
    let text = match format {
        Format::Json => to_json(&json!({
            "matching": m.to_string(),
            "cr": cn.cr,
            "ne": cn.ne,
            "ca": ca,
            "crs": crs,
            "nes": nes,
            "dyck": path.to_string(),
            "profile": profile.parts(),
            "S": s,
        })),
        Format::Csv => csv_text(
            &["matching", "cr", "ne", "ca", "crs", "nes", "dyck", "profile", "S"],
            [vec![
                m.to_string(),
                cn.cr.to_string(),
                cn.ne.to_string(),
                ca.to_string(),
                join(&crs),
                join(&nes),
                path.to_string(),
                join(profile.parts()),
                s.to_string(),
            ]],
        ),
        Format::Human => format!(
            "cr={} ne={} ca={}\ncrs=({})\nnes=({})\ndyck={}\nprofile={}\nS={}\n",
            cn.cr,
            cn.ne,
            ca,
            join(&crs),
            join(&nes),
            path,
            profile,
            s
        ),
    };
    Ok((text, 0))
}

fn level_cmd(
    m: &Matching,
    depth: usize,
    spec: &GroupSpec,
    method: DistributionMethod,
    format: Format,
    limits: &Limits,
) -> Result<Output> {
    let dist = level_distribution(m, depth, spec, method, limits)?;
    let text = match format {
        Format::Json => {
            let map: Map<String, Value> = dist.iter().map(|(e, &k)| (element_key(e), json!(k))).collect();
            let mut s = serde_json::to_string(&map).expect("map serializes");
            s.push('\n');
            s
        }
        Format::Csv => csv_text(&["value", "multiplicity"], dist.iter().map(|(e, k)| vec![element_key(e), k.to_string()])),
        Format::Human => {
            let mut s = format!("{:>12}  multiplicity\n", "value");
            for (e, k) in &dist {
                s.push_str(&format!("{:>12}  {}\n", e.to_string(), k));
            }
            s.push_str(&format!("{:>12}  {}\n", "total", dist.len()));
            s
        }
    };
    Ok((text, 0))
}

fn similar(
    m: &Matching,
    n: &Matching,
    spec: &GroupSpec,
    swapped: bool,
    check_depth: Option<usize>,
    format: Format,
    limits: &Limits,
) -> Result<Output> {
    if m.n() != n.n() {
        return Err(Error::SizeMismatch { left: m.n(), right: n.n() });
    }
    let other = if swapped { spec.swapped() } else { spec.clone() };
    let (km, kn) = (similarity_key(m, spec), similarity_key(n, &other));
    let similar = km == kn;
    let report = check_depth.map(|d| check_theorem1(m, n, spec, swapped, d, limits)).transpose()?;
    let code = i32::from(report.as_ref().is_some_and(|r| r.status.is_fail()));
    let text = match format {
        Format::Json => {
            let mut v = json!({
                "m": m.to_string(),
                "n": n.to_string(),
                "spec": spec,
                "swapped": swapped,
                "similar": similar,
                "key_m": km,
                "key_n": kn,
            });
            if let Some(r) = &report {
                v["check"] = serde_json::to_value(r).expect("report serializes");
            }
            to_json(&v)
        }
        Format::Csv => {
            let mut header = vec!["m", "n", "swapped", "similar"];
            let mut row = vec![m.to_string(), n.to_string(), swapped.to_string(), similar.to_string()];
            if let Some(r) = &report {
                header.extend(["check_depth", "status"]);
                row.extend([check_depth.unwrap_or(0).to_string(), r.status.to_string()]);
            }
            csv_text(&header, [row])
        }
        Format::Human => {
            let mut s = format!("similar={similar}\n");
            if let Some(r) = &report {
                s.push_str(&format!(
                    "levels 0..={} equal: {}  {}\n",
                    check_depth.unwrap_or(0),
                    r.details["conclusion_holds"],
                    r.status
                ));
            }
            s
        }
    };
    Ok((text, code))
}

#[derive(Serialize)]
struct ClassRow {
    key: crate::similarity::SimilarityKey,
    size: usize,
    representative: String,
}

fn classes(n: usize, stat: ClassStat, format: Format, limits: &Limits) -> Result<Output> {
    let (preset, formula) = match stat {
        ClassStat::Cr => (Preset::Cr, cr_class_count_formula(n)),
        ClassStat::Ne => (Preset::Ne, ne_class_count_formula(n)),
        ClassStat::Cr2 => (Preset::Cr2, BigUint::from(mod2_class_count_formula(n, Mod2Stat::Cr2))),
        ClassStat::Ne2 => (Preset::Ne2, BigUint::from(mod2_class_count_formula(n, Mod2Stat::Ne2))),
    };
    let rows: Vec<ClassRow> = partition_classes(n, &preset.spec(), false, limits)?
        .into_iter()
        .map(|c| ClassRow { size: c.size(), representative: c.representative().to_string(), key: c.key })
        .collect();
    let ok = BigUint::from(rows.len()) == formula;
    let status = Status::from_ok(ok);
    let text = match format {
        Format::Json => to_json(&json!({
            "n": n,
            "stat": preset.name(),
            "brute": rows.len(),
            "formula": formula.to_string(),
            "status": status,
            "classes": rows,
        })),
        Format::Csv => csv_text(
            &["value", "bag", "size", "representative"],
            rows.iter().map(|r| {
                vec![
                    r.key.value.to_string(),
                    r.key.bag.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "),
                    r.size.to_string(),
                    r.representative.clone(),
                ]
            }),
        ),
        Format::Human => format!("brute={} formula={} {}\n", rows.len(), formula, status),
    };
    Ok((text, i32::from(!ok)))
}

fn enumerate(n: usize, format: Format, limits: &Limits) -> Result<Output> {
    limits.guard("matchings to list", &crate::counting::double_factorial_odd(n))?;
    let all: Vec<String> = enumerate_matchings(n).map(|m| m.to_string()).collect();
    let text = match format {
        Format::Json => to_json(&all),
        Format::Csv => csv_text(&["matching"], all.into_iter().map(|m| vec![m])),
        Format::Human => all.into_iter().map(|m| m + "\n").collect(),
    };
    Ok((text, 0))
}

fn report_line(r: &Report) -> String {
    format!("[{}] {} {} ({} ms)\n", r.status, r.id, r.params, r.runtime_ms)
}

fn verify(id: &str, params: CheckParams, format: Format, limits: &Limits) -> Result<Output> {
    let reports: Vec<Report> = if id == "all" {
        run_all(limits).into_iter().collect::<Result<_>>()?
    } else {
        vec![run_check(id.parse::<CheckId>()?, params, limits)?]
    };
    let code = i32::from(reports.iter().any(|r| r.status.is_fail()));
    let text = match format {
        Format::Json if id == "all" => to_json(&reports),
        Format::Json => to_json(&reports[0]),
        Format::Csv => csv_text(
            &["id", "status", "params", "runtime_ms", "counterexamples"],
            reports.iter().map(|r| {
                vec![
                    r.id.clone(),
                    r.status.to_string(),
                    r.params.to_string(),
                    r.runtime_ms.to_string(),
                    r.counterexamples.len().to_string(),
                ]
            }),
        ),
        Format::Human => {
            let mut s = String::new();
            for r in &reports {
                s.push_str(&report_line(r));
                if let Some(w) = r.details.get("warning").and_then(Value::as_str) {
                    s.push_str(&format!("  warning: {w}\n"));
                }
                for c in r.counterexamples.iter().take(10) {
                    s.push_str(&format!("  counterexample: {c}\n"));
                }
            }
            s
        }
    };
    Ok((text, code))
}

#[derive(Serialize)]
struct TransformStep {
    step: usize,
    matching: String,
    cr: u64,
    ne: u64,
}

fn transform(m: &Matching, kind: Kind, steps: usize, format: Format) -> Result<Output> {
    let pair_kind = match kind {
        Kind::Nc => PairKind::Nesting,
        Kind::Cn => PairKind::Crossing,
    };
    let record = |step, m: &Matching| {
        let cn = m.cross_nest();
        TransformStep { step, matching: m.to_string(), cr: cn.cr, ne: cn.ne }
    };
    let mut trail = vec![record(0, m)];
    let mut cur = m.clone();
    for step in 1..=steps {
        if min_width_pair(&cur, pair_kind).is_none() {
            break;
        }
        cur = match kind {
            Kind::Nc => crate::transforms::nc_transform(&cur)?,
            Kind::Cn => crate::transforms::cn_transform(&cur)?,
        };
        trail.push(record(step, &cur));
    }
    // Fewer steps than requested means the statistic ran out of pairs.
    let code = i32::from(trail.len() != steps + 1);
    if code != 0 {
        let what = match kind {
            Kind::Nc => "nesting",
            Kind::Cn => "crossing",
        };
        eprintln!("error: no {what} left after {} step(s)", trail.len() - 1);
    }
    let text = match format {
        Format::Json => to_json(&trail),
        Format::Csv => csv_text(
            &["step", "matching", "cr", "ne"],
            trail.iter().map(|t| vec![t.step.to_string(), t.matching.clone(), t.cr.to_string(), t.ne.to_string()]),
        ),
        Format::Human => trail
            .iter()
            .map(|t| format!("{}: {}  cr={} ne={}\n", t.step, t.matching, t.cr, t.ne))
            .collect(),
    };
    Ok((text, code))
}
