//! `cuspidal`: invariants of cuspidal singularities and obstruction checks
//! for cusp configurations on curves in surfaces.
//!
//! Subcommands: `semigroup`, `r-table`, `d-invariants`, `check`, `search`,
//! `validate-surface`. Machine-readable JSON goes to `--out <path>` or to
//! stdout under `--format json`; `--reproducible` strips the timestamp so
//! identical inputs produce byte-identical reports.
//!
//! Exit codes: 0 no FAIL verdict, 1 at least one FAIL, 2 input/validation
//! error, 3 invariant violation, 4 largeness violation, 5 search cap hit.

use cuspidal_cli::{report, request, search};

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use cuspidal_core::{
    build_semigroup, char_sequence_to_generators, check_genus_feasibility, d_invariant_table,
    r_table, r_table_with_witness, run_check, validate_r_table, AlexanderPoly, CheckRequest,
    Configuration, DivisorClass, Error, Mode, SurfaceData, SurfaceFinding, SurfaceKind,
    SurgeryProblem, Verdict,
};

use report::{status_token, summarize, ConfigReport, GenusFeasibility, Report};
use request::{configuration_from, CheckDoc, CuspSpec, CuspsDoc, SearchDoc, SurfaceDoc};

#[derive(Parser)]
#[command(
    name = "cuspidal",
    version,
    about = "Cusp invariants and obstruction checks"
)]
struct Cli {
    /// Write the JSON document to this path as well.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Suppress the timestamp so identical runs are byte-identical.
    #[arg(long, global = true)]
    reproducible: bool,

    /// Stdout format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Gap set, delta, conductor and Alexander polynomial of one cusp.
    Semigroup {
        /// Semigroup generators, e.g. 4,5
        #[arg(long, value_delimiter = ',')]
        gens: Option<Vec<u64>>,
        /// Puiseux characteristic sequence, e.g. 4,6,7
        #[arg(long = "char", value_delimiter = ',')]
        char_seq: Option<Vec<u64>>,
        /// Explicit gap set (L-space-knot mode), e.g. 1,3
        #[arg(long, value_delimiter = ',')]
        gaps: Option<Vec<u64>>,
    },
    /// Table of the aggregated counting function R of a configuration.
    RTable {
        /// JSON file with a "cusps" array.
        file: PathBuf,
        /// Largest argument M; the table covers R[0..=M].
        #[arg(long)]
        horizon: usize,
        /// Also report an optimal composition per value.
        #[arg(long)]
        witness: bool,
    },
    /// d-invariants of the q-surgery on the connected sum of the links.
    DInvariants {
        /// JSON file with a "cusps" array.
        file: PathBuf,
        /// Surgery coefficient; must exceed twice the total genus.
        #[arg(long)]
        q: i64,
    },
    /// Evaluate one obstruction criterion over a divisor scan.
    Check {
        /// JSON request with surface, curve, cusps, mode and scan.
        file: PathBuf,
    },
    /// Enumerate cusp configurations within a delta budget and check each.
    Search {
        /// JSON request with surface, curve, mode, scan and search bounds.
        file: PathBuf,
    },
    /// Consistency findings for a surface description.
    ValidateSurface {
        /// JSON file with a "surface" object; alternative to --preset.
        file: Option<PathBuf>,
        /// Builtin surface id: cp2 or hirzebruch:e
        #[arg(long)]
        preset: Option<String>,
    },
}

/// A failure with the process exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::SurgeryNotLarge { .. } => 4,
            _ => 2,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::new(2, e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::new(2, format!("parse error: {}", e))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = Output {
        out: cli.out.clone(),
        format: cli.format,
        reproducible: cli.reproducible,
    };
    match run(cli.cmd, &ctx) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

struct Output {
    out: Option<PathBuf>,
    format: Format,
    reproducible: bool,
}

impl Output {
    /// Print the text form (or the JSON under --format json) and copy the
    /// JSON document to --out when given.
    fn emit<T: Serialize>(&self, doc: &T, text: &str) -> Result<(), Failure> {
        let json = serde_json::to_string_pretty(doc)?;
        if let Some(path) = &self.out {
            std::fs::write(path, format!("{}\n", json))?;
        }
        match self.format {
            Format::Text => print!("{}", text),
            Format::Json => println!("{}", json),
        }
        Ok(())
    }
}

fn run(cmd: Cmd, ctx: &Output) -> Result<u8, Failure> {
    match cmd {
        Cmd::Semigroup {
            gens,
            char_seq,
            gaps,
        } => cmd_semigroup(gens, char_seq, gaps, ctx),
        Cmd::RTable {
            file,
            horizon,
            witness,
        } => cmd_r_table(&file, horizon, witness, ctx),
        Cmd::DInvariants { file, q } => cmd_d_invariants(&file, q, ctx),
        Cmd::Check { file } => cmd_check(&file, ctx),
        Cmd::Search { file } => cmd_search(&file, ctx),
        Cmd::ValidateSurface { file, preset } => cmd_validate_surface(file, preset, ctx),
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let data = std::fs::read_to_string(path)
        .map_err(|e| Failure::new(2, format!("cannot read {}: {}", path.display(), e)))?;
    Ok(serde_json::from_str(&data)?)
}

fn join<T: std::fmt::Display>(items: &[T], sep: &str) -> String {
    items
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

// ---------------------------------------------------------------- semigroup

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct SemigroupOut {
    descriptor: CuspSpec,
    #[serde(skip_serializing_if = "Option::is_none")]
    generators: Option<Vec<u64>>,
    gaps: Vec<u64>,
    delta: u64,
    conductor: u64,
    symmetric: bool,
    alexander: Vec<i64>,
}

fn cmd_semigroup(
    gens: Option<Vec<u64>>,
    char_seq: Option<Vec<u64>>,
    gaps: Option<Vec<u64>>,
    ctx: &Output,
) -> Result<u8, Failure> {
    let given =
        usize::from(gens.is_some()) + usize::from(char_seq.is_some()) + usize::from(gaps.is_some());
    if given != 1 {
        return Err(Failure::new(
            2,
            "give exactly one of --gens, --char, --gaps",
        ));
    }
    let (spec, generators) = if let Some(g) = gens {
        (CuspSpec::Gens { gens: g.clone() }, Some(g))
    } else if let Some(c) = char_seq {
        let gens = char_sequence_to_generators(&c).map_err(Failure::from)?;
        (CuspSpec::Char { char_seq: c }, Some(gens))
    } else {
        (
            CuspSpec::Gaps {
                gaps: gaps.unwrap(),
            },
            None,
        )
    };
    let table = build_semigroup(&spec.to_descriptor()).map_err(Failure::from)?;
    let poly = AlexanderPoly::from_table(&table);

    let doc = SemigroupOut {
        descriptor: spec,
        generators: generators.clone(),
        gaps: table.gaps().to_vec(),
        delta: table.delta(),
        conductor: table.conductor(),
        symmetric: table.symmetric(),
        alexander: poly.coefficients().to_vec(),
    };
    let mut text = String::new();
    match &generators {
        Some(g) => writeln!(text, "generators: {}", join(g, ",")).unwrap(),
        None => writeln!(text, "generators: (gap-set mode)").unwrap(),
    }
    writeln!(text, "gaps      : {}", join(table.gaps(), ",")).unwrap();
    writeln!(text, "delta     : {}", table.delta()).unwrap();
    writeln!(text, "conductor : {}", table.conductor()).unwrap();
    writeln!(text, "symmetric : {}", table.symmetric()).unwrap();
    writeln!(text, "alexander : {}", join(poly.coefficients(), ",")).unwrap();
    ctx.emit(&doc, &text)?;
    Ok(0)
}

// ------------------------------------------------------------------ r-table

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct RFindingOut {
    name: String,
    holds: bool,
    enforced: bool,
    detail: String,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct RTableOut {
    g: u64,
    horizon: usize,
    values: Vec<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witnesses: Option<Vec<Vec<i64>>>,
    findings: Vec<RFindingOut>,
}

fn cmd_r_table(path: &Path, horizon: usize, witness: bool, ctx: &Output) -> Result<u8, Failure> {
    if horizon > 1_000_000 {
        return Err(Failure::new(2, "horizon capped at 1000000"));
    }
    if witness && horizon > 10_000 {
        return Err(Failure::new(2, "witness tables capped at horizon 10000"));
    }
    let doc: CuspsDoc = read_json(path)?;
    let cfg = configuration_from(&doc.cusps).map_err(Failure::from)?;
    let (table, witnesses) = if witness {
        let (t, w) = r_table_with_witness(&cfg, horizon);
        (t, Some(w))
    } else {
        (r_table(&cfg, horizon), None)
    };
    let findings = validate_r_table(&cfg, &table);
    if let Some(f) = findings.iter().find(|f| f.enforced && !f.holds) {
        return Err(Failure::new(
            3,
            format!("invariant violation: {}: {}", f.name, f.detail),
        ));
    }

    let out = RTableOut {
        g: cfg.g(),
        horizon,
        values: table.values().to_vec(),
        witnesses: witnesses.clone(),
        findings: findings
            .iter()
            .map(|f| RFindingOut {
                name: f.name.into(),
                holds: f.holds,
                enforced: f.enforced,
                detail: f.detail.clone(),
            })
            .collect(),
    };
    let mut text = String::new();
    writeln!(text, "g = {}", cfg.g()).unwrap();
    for m in 0..=horizon {
        match &witnesses {
            Some(w) => writeln!(
                text,
                "R[{:>4}] = {:<6} witness ({})",
                m,
                table.value(m),
                join(&w[m], ",")
            )
            .unwrap(),
            None => writeln!(text, "R[{:>4}] = {}", m, table.value(m)).unwrap(),
        }
    }
    for f in &findings {
        writeln!(
            text,
            "{} {} ({}){}",
            if f.holds { "ok  " } else { "FAIL" },
            f.name,
            f.detail,
            if f.enforced { "" } else { " [reported only]" }
        )
        .unwrap();
    }
    ctx.emit(&out, &text)?;
    Ok(0)
}

// ------------------------------------------------------------- d-invariants

#[derive(Serialize)]
struct DEntry {
    m: i64,
    d: String,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct DInvariantsOut {
    q: i64,
    g: u64,
    invariants: Vec<DEntry>,
}

fn cmd_d_invariants(path: &Path, q: i64, ctx: &Output) -> Result<u8, Failure> {
    if q > 1_000_000 {
        return Err(Failure::new(2, "surgery coefficient capped at 1000000"));
    }
    let doc: CuspsDoc = read_json(path)?;
    let cfg = configuration_from(&doc.cusps).map_err(Failure::from)?;
    let g = cfg.g();
    let prob = SurgeryProblem::new(cfg, q).map_err(Failure::from)?;
    let table = d_invariant_table(&prob).map_err(Failure::from)?;

    let out = DInvariantsOut {
        q,
        g,
        invariants: table
            .iter()
            .map(|(m, d)| DEntry {
                m: *m,
                d: d.to_string(),
            })
            .collect(),
    };
    let mut text = String::new();
    writeln!(text, "q = {}, g = {}", q, g).unwrap();
    for (m, d) in &table {
        writeln!(text, "d(s_{:>4}) = {}", m, d).unwrap();
    }
    ctx.emit(&out, &text)?;
    Ok(0)
}

// -------------------------------------------------------------------- check

fn regime_for(mode: Mode) -> SurfaceKind {
    match mode {
        Mode::Algebraic | Mode::Topological => SurfaceKind::Projective,
        Mode::AlmostComplex => SurfaceKind::AlmostComplex,
    }
}

fn require_findings(findings: &[SurfaceFinding]) -> Result<(), Failure> {
    match findings.iter().find(|f| !f.holds) {
        Some(f) => Err(Failure::new(
            2,
            format!("invalid surface: finding '{}' failed: {}", f.name, f.detail),
        )),
        None => Ok(()),
    }
}

fn render_verdict(text: &mut String, v: &Verdict) {
    let nums = match (v.lhs, v.rhs, v.margin) {
        (Some(l), Some(r), Some(m)) => format!("lhs={} rhs={} margin={}", l, r, m),
        _ => String::new(),
    };
    writeln!(
        text,
        "  D=({}) {:<24} {}",
        join(&v.divisor, ","),
        status_token(&v.status),
        nums
    )
    .unwrap();
    if let Some(d) = &v.detail {
        writeln!(text, "      {}", d).unwrap();
    }
}

fn render_config(text: &mut String, c: &ConfigReport) {
    let cusps: Vec<String> = c
        .cusps
        .iter()
        .map(|s| match s {
            CuspSpec::Gens { gens } => format!("gens {}", join(gens, ",")),
            CuspSpec::Char { char_seq } => format!("char {}", join(char_seq, ",")),
            CuspSpec::Gaps { gaps } => format!("gaps {}", join(gaps, ",")),
        })
        .collect();
    writeln!(
        text,
        "configuration [{}] genus {} (required {}, {})",
        cusps.join("; "),
        c.genus,
        c.genus_feasibility.required,
        if c.genus_feasibility.pass {
            "feasible"
        } else {
            "infeasible"
        }
    )
    .unwrap();
    for v in &c.verdicts {
        render_verdict(text, v);
    }
    writeln!(
        text,
        "summary: {}",
        serde_json::to_value(c.summary)
            .unwrap()
            .as_str()
            .unwrap_or("?")
    )
    .unwrap();
}

fn render_findings(text: &mut String, findings: &[SurfaceFinding]) {
    for f in findings {
        writeln!(
            text,
            "{} {} ({})",
            if f.holds { "ok  " } else { "FAIL" },
            f.name,
            f.detail
        )
        .unwrap();
    }
}

fn evaluate_configuration(
    surface: &SurfaceData,
    curve: &DivisorClass,
    cusps: Vec<CuspSpec>,
    cfg: Configuration,
    scan: cuspidal_core::Scan,
    mode: Mode,
    flags: request::FlagsSpec,
) -> Result<ConfigReport, Failure> {
    let (pass, configured, required) =
        check_genus_feasibility(surface, curve, &cfg).map_err(Failure::from)?;
    let req = CheckRequest {
        surface: surface.clone(),
        curve: curve.clone(),
        cfg,
        scan,
        mode,
        statement_form: flags.use_statement_form,
        assert_nonvanishing: flags.assert_non_vanishing,
    };
    let verdicts = run_check(&req).map_err(Failure::from)?;
    let summary = summarize(&verdicts);
    Ok(ConfigReport {
        cusps,
        genus: configured,
        genus_feasibility: GenusFeasibility {
            pass,
            configured,
            required,
        },
        verdicts,
        summary,
    })
}

fn cmd_check(path: &Path, ctx: &Output) -> Result<u8, Failure> {
    let doc: CheckDoc = read_json(path)?;
    let surface = doc.surface.to_surface().map_err(Failure::from)?;
    let curve = DivisorClass(doc.curve.clone());
    let cfg = configuration_from(&doc.cusps).map_err(Failure::from)?;

    let mut report = Report::new(serde_json::to_value(&doc)?, ctx.reproducible);
    report.surface_findings = surface.validate_for(regime_for(doc.mode));
    require_findings(&report.surface_findings)?;
    report.configurations.push(evaluate_configuration(
        &surface,
        &curve,
        doc.cusps.clone(),
        cfg,
        doc.scan.to_scan(),
        doc.mode,
        doc.flags,
    )?);

    let mut text = String::new();
    render_findings(&mut text, &report.surface_findings);
    render_config(&mut text, &report.configurations[0]);
    ctx.emit(&report, &text)?;
    Ok(report.exit_code() as u8)
}

// ------------------------------------------------------------------- search

fn cmd_search(path: &Path, ctx: &Output) -> Result<u8, Failure> {
    let doc: SearchDoc = read_json(path)?;
    let surface = doc.surface.to_surface().map_err(Failure::from)?;
    let curve = DivisorClass(doc.curve.clone());

    let mut report = Report::new(serde_json::to_value(&doc)?, ctx.reproducible);
    report.surface_findings = surface.validate_for(regime_for(doc.mode));
    require_findings(&report.surface_findings)?;

    let required = surface.required_genus(&curve).map_err(Failure::from)?;
    let budget = match doc.search.delta_budget {
        Some(b) => b,
        None if required >= 0 => required as u64,
        None => {
            return Err(Failure::new(
                2,
                format!(
                "required genus of the curve class is negative ({}); give an explicit deltaBudget",
                required
            ),
            ))
        }
    };
    let max_cusps = doc.search.max_cusps.unwrap_or(budget as usize);
    let catalog = search::build_catalog(budget, doc.search.max_pairs).map_err(Failure::from)?;
    let partitions =
        search::enumerate_partitions(&catalog, budget, max_cusps, doc.search.max_candidates)
            .map_err(|e| match e {
                Error::CapExceeded(msg) => Failure::new(5, msg),
                other => Failure::from(other),
            })?;

    for indices in &partitions {
        let cfg = search::candidate_configuration(&catalog, indices).map_err(Failure::from)?;
        report.configurations.push(evaluate_configuration(
            &surface,
            &curve,
            search::candidate_specs(&catalog, indices),
            cfg,
            doc.scan.to_scan(),
            doc.mode,
            doc.flags,
        )?);
    }

    let mut text = String::new();
    writeln!(
        text,
        "catalog: {} cusp types, budget {}, {} candidate configuration(s)",
        catalog.len(),
        budget,
        partitions.len()
    )
    .unwrap();
    render_findings(&mut text, &report.surface_findings);
    for c in &report.configurations {
        render_config(&mut text, c);
    }
    ctx.emit(&report, &text)?;
    Ok(report.exit_code() as u8)
}

// --------------------------------------------------------- validate-surface

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct SurfaceOut {
    rank: usize,
    sigma: i64,
    b2_plus: i64,
    euler_characteristic: i64,
    findings: Vec<SurfaceFinding>,
}

fn cmd_validate_surface(
    file: Option<PathBuf>,
    preset: Option<String>,
    ctx: &Output,
) -> Result<u8, Failure> {
    let surface = match (file, preset) {
        (Some(path), None) => {
            let doc: SurfaceDoc = read_json(&path)?;
            doc.surface.to_surface().map_err(Failure::from)?
        }
        (None, Some(id)) => SurfaceData::from_preset_id(&id).map_err(Failure::from)?,
        _ => return Err(Failure::new(2, "give a surface file or --preset, not both")),
    };
    let findings = surface.validate();
    let out = SurfaceOut {
        rank: surface.rank(),
        sigma: surface.sigma(),
        b2_plus: surface.b2_plus(),
        euler_characteristic: surface.euler_characteristic(),
        findings: findings.clone(),
    };
    let mut text = String::new();
    writeln!(
        text,
        "rank {}, sigma {}, b2+ {}, euler characteristic {}",
        out.rank, out.sigma, out.b2_plus, out.euler_characteristic
    )
    .unwrap();
    render_findings(&mut text, &findings);
    ctx.emit(&out, &text)?;
    Ok(if findings.iter().all(|f| f.holds) {
        0
    } else {
        2
    })
}
