//! Command-line front end for `optknots`.
//!
//! [`run`] parses arguments, writes the rendering to `out` and diagnostics to
//! `err`, and returns the exit code: 0 on success, 1 when a verification or
//! witness search fails, 2 on usage errors.

use std::io::Write;
use std::ops::RangeInclusive;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use optknots::families::{Atlas, FamilyId, FamilyInstance, VerificationReport};
use optknots::fatgraph::{self, ArcSystemConfig, FaceReport, Topology};
use optknots::gridknots::{self, SequenceFailure};
use optknots::linkcalc::{self, AbelianGroup, Coefficient, FramedLink, Order};
use optknots::ptbundle::{self, ConjugacyToken, MappingWord, NTClass, SL2Matrix};

pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "optknots", version, about = "Once-punctured-torus knots in lens spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Show one member of a family.
    Family(FamilyArgs),
    /// Run the verification battery over a parameter range.
    Verify(VerifyArgs),
    /// First homology and core orders of a surgery description.
    Homology(HomologyArgs),
    /// Matrix, trace and Nielsen-Thurston class of a mapping class word.
    Mcg(McgArgs),
    /// Torus knot grid number one witness in L(r,q).
    Grid(GridArgs),
    /// Arc systems on the once-punctured torus passing the parity rule.
    EnumGraphs(EnumArgs),
}

#[derive(Debug, Args)]
struct FamilyArgs {
    /// I, II, III, IV, V or VI.
    #[arg(long)]
    id: FamilyId,
    /// Twist parameter for families I-V.
    #[arg(long, allow_hyphen_values = true)]
    k: Option<i64>,
    /// Lens space L(r,q) for family VI.
    #[arg(long, allow_hyphen_values = true)]
    r: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    q: Option<i64>,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// `all` or a comma-separated list of family ids.
    #[arg(long, default_value = "all")]
    families: String,
    /// Inclusive range `lo..hi` of k; family VI runs over every L(r,q)
    /// with 2 <= r <= max |k|.
    #[arg(long, default_value = "-20..20", allow_hyphen_values = true)]
    k_range: String,
    /// Worker threads; the report does not depend on this.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct HomologyArgs {
    /// Link file (TOML with `linking`, `coefficients` and optional `name`).
    #[arg(long)]
    link: std::path::PathBuf,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct McgArgs {
    /// Word in x and y, e.g. "x^4 y".
    #[arg(long, allow_hyphen_values = true)]
    word: String,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct GridArgs {
    #[arg(long, allow_hyphen_values = true)]
    r: i64,
    #[arg(long, allow_hyphen_values = true)]
    q: i64,
    #[arg(long)]
    da: i64,
    #[arg(long)]
    db: i64,
    /// Test this step instead of searching q, -q, 1/q, -1/q.
    #[arg(long, allow_hyphen_values = true)]
    qdot: Option<i64>,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct EnumArgs {
    #[arg(long, default_value_t = 2)]
    t: usize,
    #[arg(long)]
    max_parallel: usize,
    /// Keep only systems where some class has exactly max-parallel arcs.
    #[arg(long)]
    require_max: bool,
    #[arg(long, default_value_t = 1)]
    s_min: usize,
    #[arg(long)]
    s_max: Option<usize>,
    #[arg(long)]
    json: bool,
}

/// `family` output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FamilyOutput {
    pub schema_version: u32,
    pub instance: FamilyInstance,
    pub class: Option<NTClass>,
}

/// `verify` output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyOutput {
    pub schema_version: u32,
    pub passed: bool,
    pub total: usize,
    pub failed: usize,
    pub reports: Vec<VerificationReport>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoreEntry {
    /// 1-based.
    pub component: usize,
    pub coefficient: Coefficient,
    pub order: Option<Order>,
}

/// `homology` output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HomologyOutput {
    pub schema_version: u32,
    pub link: FramedLink,
    pub h1: AbelianGroup,
    pub cores: Vec<CoreEntry>,
}

/// `mcg` output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct McgOutput {
    pub schema_version: u32,
    pub word: MappingWord,
    pub matrix: SL2Matrix,
    pub trace: i64,
    pub class: NTClass,
    pub order: Option<u32>,
    pub conjugacy: ConjugacyToken,
    pub bundle_h1: AbelianGroup,
}

/// `grid` output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridOutput {
    pub schema_version: u32,
    pub r: i64,
    pub q: i64,
    pub da: i64,
    pub db: i64,
    pub qdot: Option<i64>,
    pub sequence: Option<Vec<i64>>,
    pub failure: Option<SequenceFailure>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphEntry {
    pub config: ArcSystemConfig,
    pub word: String,
    pub faces: FaceReport,
}

/// `enum-graphs` output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnumOutput {
    pub schema_version: u32,
    pub t: usize,
    pub max_parallel: usize,
    pub require_max: bool,
    pub count: usize,
    pub configs: Vec<GraphEntry>,
}

enum Failure {
    Usage(String),
    Io(std::io::Error),
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

/// Run with the standard atlas.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run_with_atlas(args, &Atlas::standard(), out, err)
}

/// Run with the closed forms of `atlas` in place of the standard ones.
pub fn run_with_atlas<I, T>(args: I, atlas: &Atlas, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    let result = match cli.command {
        Command::Family(a) => cmd_family(&a, atlas, out),
        Command::Verify(a) => cmd_verify(&a, atlas, out),
        Command::Homology(a) => cmd_homology(&a, out),
        Command::Mcg(a) => cmd_mcg(&a, out),
        Command::Grid(a) => cmd_grid(&a, out),
        Command::EnumGraphs(a) => cmd_enum(&a, out),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_FAILED
        }
    }
}

fn print_json<T: Serialize>(out: &mut dyn Write, v: &T) -> Result<(), Failure> {
    let s = serde_json::to_string_pretty(v).map_err(|e| Failure::Io(e.into()))?;
    writeln!(out, "{s}")?;
    Ok(())
}

fn cmd_family(a: &FamilyArgs, atlas: &Atlas, out: &mut dyn Write) -> Result<i32, Failure> {
    let inst = match (a.id, a.k, a.r, a.q) {
        (FamilyId::VI, None, Some(r), Some(q)) => optknots::families::instantiate_lens(r, q).map_err(usage)?,
        (FamilyId::VI, ..) => return Err(usage("family VI takes --r and --q")),
        (f, Some(k), None, None) => atlas.instantiate(f, k).map_err(usage)?,
        (f, ..) => return Err(usage(format!("family {f} takes --k"))),
    };
    let class = inst.monodromy.as_ref().map(|w| ptbundle::classify(&ptbundle::evaluate(w)));
    if a.json {
        print_json(out, &FamilyOutput { schema_version: SCHEMA_VERSION, instance: inst, class })?;
    } else {
        writeln!(out, "{inst}")?;
    }
    Ok(EXIT_OK)
}

/// `lo..hi`, inclusive at both ends.
pub fn parse_k_range(s: &str) -> Result<RangeInclusive<i64>, String> {
    let (lo, hi) = s.split_once("..").ok_or_else(|| format!("expected lo..hi, got {s:?}"))?;
    let hi = hi.strip_prefix('=').unwrap_or(hi);
    let parse = |x: &str| x.trim().parse::<i64>().map_err(|_| format!("bad bound {x:?} in {s:?}"));
    let (lo, hi) = (parse(lo)?, parse(hi)?);
    if lo > hi {
        return Err(format!("empty range {s:?}"));
    }
    Ok(lo..=hi)
}

pub fn parse_families(s: &str) -> Result<Vec<FamilyId>, String> {
    if s.trim().eq_ignore_ascii_case("all") {
        return Ok(FamilyId::ALL.to_vec());
    }
    s.split(',').map(|x| x.parse::<FamilyId>().map_err(|e| e.to_string())).collect()
}

fn cmd_verify(a: &VerifyArgs, atlas: &Atlas, out: &mut dyn Write) -> Result<i32, Failure> {
    let families = parse_families(&a.families).map_err(usage)?;
    let ks = parse_k_range(&a.k_range).map_err(usage)?;
    if a.jobs == 0 {
        return Err(usage("--jobs must be at least 1"));
    }
    let reports = atlas.verify_range(&families, ks, a.jobs).map_err(usage)?;
    let failed = reports.iter().filter(|r| !r.passed()).count();
    let code = if failed == 0 { EXIT_OK } else { EXIT_FAILED };
    if a.json {
        print_json(
            out,
            &VerifyOutput {
                schema_version: SCHEMA_VERSION,
                passed: failed == 0,
                total: reports.len(),
                failed,
                reports,
            },
        )?;
        return Ok(code);
    }
    for r in &reports {
        if r.passed() {
            writeln!(out, "{} {}: pass", r.family, r.parameter)?;
        } else {
            writeln!(out, "{r}")?;
        }
    }
    writeln!(out, "verified {} instances, {} failed", reports.len(), failed)?;
    Ok(code)
}

fn cmd_homology(a: &HomologyArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let text = std::fs::read_to_string(&a.link).map_err(|e| usage(format!("{}: {e}", a.link.display())))?;
    let link = FramedLink::from_link_file(&text).map_err(usage)?;
    let h1 = linkcalc::h1(&link);
    let cores: Vec<CoreEntry> = link
        .coefficients()
        .iter()
        .enumerate()
        .map(|(i, &c)| CoreEntry { component: i + 1, coefficient: c, order: linkcalc::core_order(&link, i).ok() })
        .collect();
    if a.json {
        print_json(out, &HomologyOutput { schema_version: SCHEMA_VERSION, link, h1, cores })?;
        return Ok(EXIT_OK);
    }
    writeln!(out, "link: {link}")?;
    writeln!(out, "H1: {h1}")?;
    for c in &cores {
        match &c.order {
            Some(o) => writeln!(out, "core {} ({}): order {o}", c.component, c.coefficient)?,
            None => writeln!(out, "core {} ({}): order undefined", c.component, c.coefficient)?,
        }
    }
    Ok(EXIT_OK)
}

fn cmd_mcg(a: &McgArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let word: MappingWord = a.word.parse().map_err(usage)?;
    let matrix = ptbundle::evaluate(&word);
    let o = McgOutput {
        schema_version: SCHEMA_VERSION,
        trace: matrix.trace(),
        class: ptbundle::classify(&matrix),
        order: ptbundle::order(&matrix),
        conjugacy: ptbundle::conjugacy_invariant(&matrix),
        bundle_h1: ptbundle::bundle_h1(&word),
        word,
        matrix,
    };
    if a.json {
        print_json(out, &o)?;
        return Ok(EXIT_OK);
    }
    let shown = if o.word.is_identity() { "1".to_string() } else { o.word.to_string() };
    writeln!(out, "word: {shown}")?;
    writeln!(out, "matrix: {}", o.matrix)?;
    writeln!(out, "trace: {}", o.trace)?;
    writeln!(out, "class: {}", o.class)?;
    match o.order {
        Some(n) => writeln!(out, "order: {n}")?,
        None => writeln!(out, "order: infinite")?,
    }
    writeln!(out, "conjugacy: {}", o.conjugacy)?;
    writeln!(out, "bundle H1: {}", o.bundle_h1)?;
    Ok(EXIT_OK)
}

fn cmd_grid(a: &GridArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let result = match a.qdot {
        Some(qdot) => gridknots::torus_knot_sequence(a.r, qdot, a.da, a.db).map(|s| (qdot, s)),
        None => gridknots::find_torus_grid_witness(a.r, a.q, a.da, a.db).map(|w| (w.qdot, w.sequence)),
    };
    let (qdot, sequence, failure) = match result {
        Ok((qdot, s)) => (Some(qdot), Some(s), None),
        Err(f) => (a.qdot, None, Some(f)),
    };
    let code = if failure.is_none() { EXIT_OK } else { EXIT_FAILED };
    let o = GridOutput { schema_version: SCHEMA_VERSION, r: a.r, q: a.q, da: a.da, db: a.db, qdot, sequence, failure };
    if a.json {
        print_json(out, &o)?;
        return Ok(code);
    }
    match (&o.sequence, &o.failure) {
        (Some(seq), _) => {
            let s: Vec<String> = seq.iter().map(|v| v.to_string()).collect();
            writeln!(out, "qdot: {}", o.qdot.unwrap_or_default())?;
            writeln!(out, "sequence: {}", s.join(","))?;
        }
        (None, Some(f)) => writeln!(out, "FAILURE: {}", failure_text(f))?,
        (None, None) => unreachable!("either a sequence or a failure"),
    }
    Ok(code)
}

fn failure_text(f: &SequenceFailure) -> String {
    match f {
        SequenceFailure::InvalidInput => "invalid input".into(),
        SequenceFailure::NotClosed { last } => format!("walk ends at {last}, not 0"),
        SequenceFailure::Revisit { position } => format!("vertex revisited at position {position}"),
        SequenceFailure::NoWitness => "no choice of qdot closes the walk".into(),
    }
}

fn face_summary(r: &FaceReport) -> String {
    let parts: Vec<String> = r
        .faces
        .iter()
        .map(|f| {
            let color = f.color.map(|c| format!(" {c}")).unwrap_or_default();
            match f.topology {
                Topology::Disk => format!("{}-gon{color}", f.sides()),
                Topology::Annulus => format!("annulus({}){color}", f.sides()),
            }
        })
        .collect();
    parts.join(", ")
}

fn cmd_enum(a: &EnumArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    if a.t < 2 || !a.t.is_multiple_of(2) {
        return Err(usage("--t must be even and at least 2"));
    }
    let s_max = a.s_max.unwrap_or(usize::MAX);
    let configs = fatgraph::enumerate(a.t, a.max_parallel, a.require_max, a.s_min..=s_max);
    let entries: Vec<GraphEntry> =
        configs.into_iter().map(|c| GraphEntry { word: c.word(), faces: fatgraph::faces(&c), config: c }).collect();
    if a.json {
        let o = EnumOutput {
            schema_version: SCHEMA_VERSION,
            t: a.t,
            max_parallel: a.max_parallel,
            require_max: a.require_max,
            count: entries.len(),
            configs: entries,
        };
        print_json(out, &o)?;
        return Ok(EXIT_OK);
    }
    for e in &entries {
        writeln!(out, "{}  faces: {}", e.config, face_summary(&e.faces))?;
    }
    writeln!(out, "count: {}", entries.len())?;
    Ok(EXIT_OK)
}
