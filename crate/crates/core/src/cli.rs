//! Command-line front end. [`run`] parses arguments, merges an optional TOML
//! config (flags win), executes one subcommand and returns the exit status:
//! 0 success, 1 failed check, 2 usage error, 3 resource limit.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::blambda;
use crate::chroma;
use crate::error::{Error, Result};
use crate::partition::{self, staircase};
use crate::perm;
use crate::pid;
use crate::report::{findings_markdown, findings_text, Compared, Finding, Verdict};
use crate::rwgraph;
use crate::toric;
use crate::{binomial, Limits};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Markdown,
    Dot,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Which {
    C1,
    C2,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Artifact {
    Words,
    Rwgraph,
    Blambda,
    Cartoon,
    Graver,
}

/// Inclusive range written `A` or `A..B`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Span {
    pub lo: usize,
    pub hi: usize,
}

impl Span {
    pub fn iter(&self) -> impl Iterator<Item = usize> {
        self.lo..=self.hi
    }
}

impl std::str::FromStr for Span {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("bad bound {t:?}: {e}"));
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
            None => {
                let v = num(s)?;
                (v, v)
            }
        };
        if lo > hi {
            return Err(format!("empty range {s}"));
        }
        Ok(Span { lo, hi })
    }
}

#[derive(Debug, Parser)]
#[command(name = "stairgraph", version, about = "Staircase reduced-word graphs, colourings and binomial ideals")]
pub struct Cli {
    /// TOML file with defaults for the flags below.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Fail (exit 1) on any mismatch with a published claim.
    #[arg(long, global = true)]
    pub strict: bool,
    #[arg(long, global = true)]
    pub degree_bound: Option<u32>,
    #[arg(long, global = true)]
    pub cap_vertices: Option<usize>,
    #[arg(long, global = true)]
    pub cap_cyclerank: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reduced words of the z-permutations of degree r.
    Words {
        #[arg(long)]
        r: Span,
    },
    /// Word-graph structure against the published counts.
    Graph {
        #[arg(long)]
        ell: Span,
    },
    /// Layered staircase graphs, the bijection and parity pairs.
    Blambda {
        #[arg(long)]
        ell: Span,
    },
    /// Chromatic polynomials and chromatic numbers.
    Chroma {
        #[arg(long)]
        ell: Span,
    },
    /// 2-colour separations and the balance bound.
    Separation {
        #[arg(long)]
        ell: Span,
    },
    /// Colour-separation identities and truncated Graver bases.
    Identities {
        #[arg(long)]
        ell: Span,
    },
    /// Binomial-ideal audits.
    Conjectures {
        #[arg(long)]
        ell: Span,
        #[arg(long, value_enum, default_value = "both")]
        which: Which,
    },
    /// Every check over a range, in one report.
    VerifyAll {
        #[arg(long)]
        ell: Span,
    },
    /// A single artifact for one length.
    Export {
        #[arg(value_enum)]
        what: Artifact,
        #[arg(long)]
        ell: usize,
    },
}

/// Values read from `--config`; any flag given on the command line wins.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct FileConfig {
    pub format: Option<Format>,
    pub out: Option<PathBuf>,
    pub strict: Option<bool>,
    pub degree_bound: Option<u32>,
    pub limits: Option<Limits>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub format: Format,
    pub out: Option<PathBuf>,
    pub strict: bool,
    pub degree_bound: u32,
    pub limits: Limits,
}

impl RunConfig {
    pub fn resolve(cli: &Cli, file: FileConfig) -> Self {
        let mut limits = file.limits.unwrap_or_default();
        if let Some(v) = cli.cap_vertices {
            limits.max_iso_vertices = v;
        }
        if let Some(c) = cli.cap_cyclerank {
            limits.max_cycle_rank = c;
        }
        Self {
            format: cli.format.or(file.format).unwrap_or(Format::Text),
            out: cli.out.clone().or(file.out),
            strict: cli.strict || file.strict.unwrap_or(false),
            degree_bound: cli.degree_bound.or(file.degree_bound).unwrap_or(3),
            limits,
        }
    }
}

/// Rendered output plus whether any check failed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub body: String,
    /// A published claim disagreed with the computation.
    pub claim_mismatch: bool,
    /// An internal consistency check failed.
    pub invariant_failure: bool,
}

impl Outcome {
    pub fn exit_code(&self, strict: bool) -> i32 {
        if self.invariant_failure || (strict && self.claim_mismatch) {
            EXIT_CHECK_FAILED
        } else {
            EXIT_OK
        }
    }
}

fn exit_for(e: &Error) -> i32 {
    match e {
        Error::Resource { .. } => EXIT_RESOURCE,
        _ => EXIT_USAGE,
    }
}

/// Parses `args` (program name first), runs, writes to `--out` or `stdout`.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{e}");
            return code;
        }
    };
    let file = match &cli.config {
        Some(path) => match std::fs::read_to_string(path)
            .map_err(|e| e.to_string())
            .and_then(|s| toml::from_str::<FileConfig>(&s).map_err(|e| e.to_string()))
        {
            Ok(f) => f,
            Err(e) => {
                let _ = writeln!(stderr, "config {}: {e}", path.display());
                return EXIT_USAGE;
            }
        },
        None => FileConfig::default(),
    };
    let cfg = RunConfig::resolve(&cli, file);
    match execute(&cli.command, &cfg) {
        Ok(outcome) => {
            let written = match &cfg.out {
                Some(path) => std::fs::write(path, &outcome.body).map_err(|e| e.to_string()),
                None => stdout.write_all(outcome.body.as_bytes()).map_err(|e| e.to_string()),
            };
            if let Err(e) = written {
                let _ = writeln!(stderr, "write failed: {e}");
                return EXIT_USAGE;
            }
            outcome.exit_code(cfg.strict)
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_for(&e)
        }
    }
}

pub fn execute(cmd: &Command, cfg: &RunConfig) -> Result<Outcome> {
    match cmd {
        Command::Words { r } => cmd_words(*r, cfg),
        Command::Graph { ell } => cmd_graph(*ell, cfg),
        Command::Blambda { ell } => cmd_blambda(*ell, cfg),
        Command::Chroma { ell } => cmd_chroma(*ell, cfg),
        Command::Separation { ell } => cmd_separation(*ell, cfg),
        Command::Identities { ell } => cmd_identities(*ell, cfg),
        Command::Conjectures { ell, which } => cmd_conjectures(*ell, *which, cfg),
        Command::VerifyAll { ell } => cmd_verify_all(*ell, cfg),
        Command::Export { what, ell } => cmd_export(*what, *ell, cfg),
    }
}

fn no_dot(cfg: &RunConfig, what: &str) -> Result<()> {
    if cfg.format == Format::Dot {
        return Err(Error::domain(format!("{what} has no DOT rendering")));
    }
    Ok(())
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable report");
    s.push('\n');
    s
}

fn render_findings(cfg: &RunConfig, rows: &[Finding]) -> String {
    match cfg.format {
        Format::Markdown => findings_markdown(rows),
        _ => findings_text(rows),
    }
}

fn outcome(body: String, rows: &[Finding]) -> Outcome {
    Outcome {
        body,
        claim_mismatch: rows.iter().any(|f| f.verdict == Verdict::Mismatch),
        invariant_failure: false,
    }
}

#[derive(Serialize)]
struct WordsRow {
    r: usize,
    permutation: String,
    words: Vec<String>,
    count: Compared<u64>,
    last_letter_split: std::collections::BTreeMap<usize, usize>,
}

pub fn cmd_words(r: Span, cfg: &RunConfig) -> Result<Outcome> {
    no_dot(cfg, "words")?;
    if r.lo < 4 {
        return Err(Error::domain(format!("z-permutations need r >= 4, got {}", r.lo)));
    }
    let mut rows = Vec::new();
    for r in r.iter() {
        let sigma = perm::z_permutation(r)?;
        let words = perm::enumerate_reduced_words_with(&sigma, &cfg.limits)?;
        rows.push(WordsRow {
            r,
            permutation: sigma.to_string(),
            count: Compared::new(words.len() as u64, binomial(r as u64, 2)),
            last_letter_split: perm::last_letter_split(&words),
            words: words.iter().map(|w| w.label()).collect(),
        });
    }
    let findings: Vec<Finding> = rows
        .iter()
        .map(|w| Finding::compared(format!("r={} reduced words of {}", w.r, w.permutation), &w.count))
        .collect();
    let body = match cfg.format {
        Format::Json => json(&rows),
        Format::Markdown => findings_markdown(&findings),
        _ => {
            let mut s = String::new();
            for w in &rows {
                let _ = writeln!(s, "r={} sigma={} count={} (claim {})", w.r, w.permutation, w.count.observed, w.count.claimed);
                let _ = writeln!(s, "  {}", w.words.join(" "));
            }
            s
        }
    };
    Ok(outcome(body, &findings))
}

pub fn cmd_graph(ell: Span, cfg: &RunConfig) -> Result<Outcome> {
    let mut reports = Vec::new();
    let mut dots = String::new();
    for l in ell.iter() {
        reports.push(rwgraph::verify_structure_with(l, &cfg.limits)?);
        if cfg.format == Format::Dot {
            let g = rwgraph::build_rwgraph_with(&perm::z_permutation(l + 1)?, &cfg.limits)?;
            dots.push_str(&rwgraph::export_dot(&g));
        }
    }
    let findings: Vec<Finding> = reports.iter().flat_map(|r| r.findings()).collect();
    let body = match cfg.format {
        Format::Json => json(&reports),
        Format::Dot => dots,
        _ => render_findings(cfg, &findings),
    };
    Ok(outcome(body, &findings))
}

#[derive(Serialize)]
struct BlambdaRow {
    ell: usize,
    layer_sizes: Vec<usize>,
    vertices: usize,
    edges: Compared<u64>,
    pseudo_multipartite: bool,
    isomorphic_to_word_graph: Option<bool>,
    edge_missing_polynomial: String,
    parity_with_next: blambda::ParityReport,
}

pub fn cmd_blambda(ell: Span, cfg: &RunConfig) -> Result<Outcome> {
    if ell.lo == 0 {
        return Err(Error::domain("ell must be at least 1"));
    }
    let mut rows = Vec::new();
    let mut dots = String::new();
    for l in ell.iter() {
        let lam = staircase(l)?;
        let b = blambda::build_blambda(&lam)?;
        let iso = if l >= 3 {
            let g = rwgraph::build_rwgraph_with(&perm::z_permutation(l + 1)?, &cfg.limits)?;
            Some(blambda::iso_check_with(&g, &b, &cfg.limits)?)
        } else {
            None
        };
        dots.push_str(&b.to_dot());
        rows.push(BlambdaRow {
            ell: l,
            layer_sizes: b.layer_sizes(),
            vertices: b.vertex_count(),
            edges: Compared::new(b.edge_count() as u64, (l * (l - 1)) as u64),
            pseudo_multipartite: b.is_pseudo_multipartite(),
            isomorphic_to_word_graph: iso,
            edge_missing_polynomial: blambda::edge_missing_polynomial(l)?.to_string_in("e"),
            parity_with_next: blambda::is_parity_pair(&lam, &staircase(l + 1)?)?,
        });
    }
    let mut findings = Vec::new();
    let mut broken = false;
    for r in &rows {
        findings.push(Finding::compared(format!("B ell={} edges vs ell(ell-1)", r.ell), &r.edges));
        if let Some(iso) = r.isomorphic_to_word_graph {
            findings.push(Finding::compared(format!("B ell={} isomorphic to word graph", r.ell), &Compared::new(iso, true)));
            broken |= !iso;
        }
        let p = &r.parity_with_next;
        findings.push(Finding::compared(format!("B ell={} parity conditions agree", r.ell), &Compared::new(p.all_agree, true)));
        broken |= !p.all_agree || !r.pseudo_multipartite || !r.edges.matches;
    }
    let body = match cfg.format {
        Format::Json => json(&rows),
        Format::Dot => dots,
        _ => render_findings(cfg, &findings),
    };
    Ok(Outcome {
        invariant_failure: broken,
        ..outcome(body, &findings)
    })
}

pub fn cmd_chroma(ell: Span, cfg: &RunConfig) -> Result<Outcome> {
    no_dot(cfg, "chroma")?;
    if ell.lo < 3 {
        return Err(Error::domain("closed-form comparison needs ell >= 3"));
    }
    let mut audits = Vec::new();
    let mut findings = Vec::new();
    let mut broken = false;
    for l in ell.iter() {
        let a = chroma::chi_blambda_audit_with(l, &cfg.limits)?;
        let b = blambda::build_blambda(&staircase(l)?)?;
        let chi_num = chroma::chromatic_number_with(&b.to_simple(), &cfg.limits)?;
        findings.push(Finding::compared(format!("chi ell={l} degree"), &a.degree));
        findings.push(Finding::new(
            format!("chi ell={l} polynomial"),
            a.computed.to_string_in("k"),
            a.formula.to_string_in("k"),
            if a.polynomial_matches { Verdict::Match } else { Verdict::Mismatch },
        ));
        findings.push(Finding::compared(format!("chromatic number ell={l}"), &Compared::new(chi_num, 2)));
        broken |= !a.degree_is_vertex_count;
        audits.push(a);
    }
    let body = match cfg.format {
        Format::Json => json(&audits),
        _ => render_findings(cfg, &findings),
    };
    Ok(Outcome {
        invariant_failure: broken,
        ..outcome(body, &findings)
    })
}

#[derive(Serialize)]
struct SeparationOut {
    separations: Vec<chroma::ColourSeparation>,
    bound: chroma::BoundReport,
    shared_balance: Vec<(usize, bool)>,
}

pub fn cmd_separation(ell: Span, cfg: &RunConfig) -> Result<Outcome> {
    no_dot(cfg, "separation")?;
    if ell.lo == 0 {
        return Err(Error::domain("ell must be at least 1"));
    }
    let separations = ell
        .iter()
        .map(|l| chroma::colour_separation(&staircase(l)?))
        .collect::<Result<Vec<_>>>()?;
    let bound = chroma::balance_bound_check(ell.hi)?;
    let shared_balance = (1..=ell.hi.div_ceil(2))
        .map(|k| Ok((k, chroma::shared_balance_check(k)?)))
        .collect::<Result<Vec<_>>>()?;
    let mut findings = Vec::new();
    for row in bound.rows.iter().filter(|r| r.ell >= ell.lo) {
        findings.push(Finding::new(
            format!("balance ell={}", row.ell),
            row.balance,
            format!("<= {}", row.bound),
            if row.within_bound { Verdict::Match } else { Verdict::Mismatch },
        ));
    }
    for (k, ok) in &shared_balance {
        findings.push(Finding::compared(format!("shared balance k={k}"), &Compared::new(*ok, true)));
    }
    let broken = !bound.all_within_bound() || shared_balance.iter().any(|(_, ok)| !ok);
    let out = SeparationOut {
        separations,
        bound,
        shared_balance,
    };
    let body = match cfg.format {
        Format::Json => json(&out),
        _ => {
            let mut s = String::new();
            for sep in &out.separations {
                let _ = writeln!(s, "ell={} mu={} kappa={} balance={}", sep.ell, sep.mu, sep.kappa, sep.balance);
            }
            s + &render_findings(cfg, &findings)
        }
    };
    Ok(Outcome {
        invariant_failure: broken,
        ..outcome(body, &findings)
    })
}

#[derive(Serialize)]
struct IdentityOut {
    cspi: pid::CspiReport,
    graver_degree_bound: u32,
    graver: Vec<String>,
}

pub fn cmd_identities(ell: Span, cfg: &RunConfig) -> Result<Outcome> {
    no_dot(cfg, "identities")?;
    let mut outs = Vec::new();
    let mut findings = Vec::new();
    for l in ell.iter() {
        if l < 5 {
            findings.push(Finding::skipped(format!("cspi ell={l}"), "requires ell >= 5"));
            continue;
        }
        let lam = staircase(l)?;
        let report = pid::cspi_report(&lam)?;
        let sep = chroma::colour_separation(&lam)?;
        let mut weights: Vec<u64> = (1..=l as u64).collect();
        weights.extend([sep.mu as u64, sep.kappa as u64]);
        let graver = pid::graver_1xn_with(&weights, cfg.degree_bound, &cfg.limits)?;
        findings.push(Finding::compared(format!("cspi ell={l} parts distinct"), &Compared::new(report.all_parts_distinct, true)));
        findings.push(Finding::compared(format!("cspi ell={l} primitive"), &Compared::new(report.primitive, false)));
        findings.push(Finding::compared(
            format!("cspi ell={l} primitive subidentities"),
            &Compared::new(report.primitive_subidentities.len(), 2),
        ));
        outs.push(IdentityOut {
            cspi: report,
            graver_degree_bound: cfg.degree_bound,
            graver: graver.to_strings(),
        });
    }
    let body = match cfg.format {
        Format::Json => json(&outs),
        _ => {
            let mut s = format!("reading: {}\n", pid::PRIMITIVITY_READING);
            for o in &outs {
                let _ = writeln!(s, "ell={} {}", o.cspi.ell, o.cspi.identity);
                for sub in &o.cspi.primitive_subidentities {
                    let _ = writeln!(s, "  primitive: {sub}");
                }
                let _ = writeln!(s, "  graver (degree <= {}): {} elements", o.graver_degree_bound, o.graver.len());
            }
            s + &render_findings(cfg, &findings)
        }
    };
    Ok(outcome(body, &findings))
}

#[derive(Serialize)]
#[serde(untagged)]
enum ConjectureEntry {
    Report(Box<toric::ConjectureReport>),
    Skipped { conjecture: String, ell: usize, skipped: String },
}

pub fn cmd_conjectures(ell: Span, which: Which, cfg: &RunConfig) -> Result<Outcome> {
    no_dot(cfg, "conjectures")?;
    type Check = fn(usize, &Limits) -> Result<toric::ConjectureReport>;
    let runs: [(&str, bool, std::ops::RangeInclusive<usize>, Check); 2] = [
        ("I", which != Which::C2, 5..=10, toric::conjecture1_check_with),
        ("2", which != Which::C1, 2..=8, toric::conjecture2_check_with),
    ];
    let mut entries = Vec::new();
    for l in ell.iter() {
        for (name, on, range, check) in &runs {
            if !on {
                continue;
            }
            let skipped = |why: String| ConjectureEntry::Skipped {
                conjecture: name.to_string(),
                ell: l,
                skipped: why,
            };
            // errors, resource limits included, become rows so the range continues
            entries.push(if !range.contains(&l) {
                skipped(format!("requires {} <= ell <= {}", range.start(), range.end()))
            } else {
                match check(l, &cfg.limits) {
                    Ok(r) => ConjectureEntry::Report(Box::new(r)),
                    Err(e) => skipped(e.to_string()),
                }
            });
        }
    }
    let mut findings = Vec::new();
    for e in &entries {
        match e {
            ConjectureEntry::Report(r) => findings.extend(r.findings.iter().map(|f| Finding {
                check: format!("conjecture {} ell={} {}", r.conjecture, r.ell, f.check),
                ..f.clone()
            })),
            ConjectureEntry::Skipped { conjecture, ell, skipped } => {
                findings.push(Finding::skipped(format!("conjecture {conjecture} ell={ell}"), skipped.clone()))
            }
        }
    }
    let body = match cfg.format {
        Format::Json => json(&entries),
        Format::Markdown => {
            let mut s = String::new();
            for e in &entries {
                match e {
                    ConjectureEntry::Report(r) => s.push_str(&r.to_markdown()),
                    ConjectureEntry::Skipped { conjecture, ell, skipped } => {
                        let _ = writeln!(s, "### Conjecture {conjecture} at ell = {ell}\n\nSKIPPED: {skipped}");
                    }
                }
                s.push('\n');
            }
            s
        }
        _ => findings_text(&findings),
    };
    let oracle_broken = entries.iter().any(|e| match e {
        ConjectureEntry::Report(r) => !r.oracle_agrees,
        ConjectureEntry::Skipped { .. } => false,
    });
    Ok(Outcome {
        invariant_failure: oracle_broken,
        ..outcome(body, &findings)
    })
}

/// A verify-all row: invariant rows fail the run, claim rows only under `--strict`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyRow {
    #[serde(flatten)]
    pub finding: Finding,
    pub invariant: bool,
}

/// Turns a resource error into a skip reason; other errors pass through.
fn capped<T>(r: Result<T>) -> Result<std::result::Result<T, String>> {
    match r {
        Ok(v) => Ok(Ok(v)),
        Err(e @ Error::Resource { .. }) => Ok(Err(e.to_string())),
        Err(e) => Err(e),
    }
}

pub fn verify_all_rows(ell: Span, limits: &Limits) -> Result<Vec<VerifyRow>> {
    let mut rows = Vec::new();
    let skip = |check: String, reason: String| VerifyRow {
        finding: Finding::skipped(check, reason),
        invariant: false,
    };
    let claim = |f: Finding| VerifyRow { finding: f, invariant: false };
    let inv = |check: String, ok: bool| VerifyRow {
        finding: Finding::compared(check, &Compared::new(ok, true)),
        invariant: true,
    };
    for l in ell.iter() {
        let lam = staircase(l)?;
        if l >= 3 {
            let s = rwgraph::verify_structure_with(l, limits)?;
            rows.extend(s.findings().into_iter().map(claim));
            rows.push(inv(format!("graph ell={l} edges equal ell(ell-1)"), s.edges.observed == (l * (l - 1)) as u64));
            let g = rwgraph::build_rwgraph_with(&perm::z_permutation(l + 1)?, limits)?;
            let b = blambda::build_blambda(&lam)?;
            let check = format!("bijection ell={l} word graph isomorphic to B");
            match capped(blambda::iso_check_with(&g, &b, limits))? {
                Ok(iso) => rows.push(inv(check, iso)),
                Err(reason) => rows.push(skip(check, reason)),
            }
            match capped(chroma::chi_blambda_audit_with(l, limits))? {
                Ok(a) => {
                    rows.push(claim(Finding::compared(format!("chi ell={l} degree vs closed form"), &a.degree)));
                    rows.push(inv(format!("chi ell={l} degree equals vertex count"), a.degree_is_vertex_count));
                }
                Err(reason) => rows.push(skip(format!("chi ell={l}"), reason)),
            }
            let check = format!("chromatic number ell={l}");
            match capped(chroma::chromatic_number_with(&b.to_simple(), limits))? {
                Ok(n) => rows.push(claim(Finding::compared(check, &Compared::new(n, 2)))),
                Err(reason) => rows.push(skip(check, reason)),
            }
        }
        let sep = chroma::colour_separation(&lam)?;
        rows.push(inv(format!("balance ell={l} within ceil(ell/2)"), sep.balance <= l.div_ceil(2)));
        rows.push(inv(
            format!("checkerboard ell={l} matches separation"),
            partition::checkerboard_counts(&lam) == (sep.mu, sep.kappa)
                || partition::checkerboard_counts(&lam) == (sep.kappa, sep.mu),
        ));
        if l % 2 == 0 {
            let k = l / 2;
            rows.push(inv(format!("shared balance k={k}"), chroma::shared_balance_check(k)?));
            let m = blambda::parity_matrix(k as u64)?;
            let sums = m.column_sums();
            rows.push(inv(
                format!("parity matrix k={k} det and column sums"),
                m.determinant() == (k * k) as i128
                    && sums == (partition::triangular(2 * k - 1) as i128, partition::triangular(2 * k) as i128),
            ));
        }
        if l >= 5 {
            let c = pid::cspi(&lam)?;
            let mut parts: Vec<u64> = c.lhs().iter().chain(c.rhs()).copied().collect();
            parts.sort_unstable();
            rows.push(inv(format!("cspi ell={l} parts distinct"), parts.windows(2).all(|w| w[0] != w[1])));
        }
    }
    let tri = partition::triangular_gf_check(10)?;
    rows.push(inv("gf triangular numbers through z^10".into(), tri.all_match()));
    let n = ell.hi.max(2);
    let fam = blambda::family_gf_check(n, n)?;
    let bad: Vec<String> = fam
        .mismatches()
        .map(|r| format!("z^{} e^{}", r.z_degree, r.e_degree.unwrap_or(0)))
        .collect();
    rows.push(claim(Finding::new(
        format!("gf edge-missing family through z^{n} e^{n}"),
        if bad.is_empty() { "no mismatched rows".to_string() } else { format!("mismatched at {}", bad.join(", ")) },
        "no mismatched rows",
        if bad.is_empty() { Verdict::Match } else { Verdict::Mismatch },
    )));
    Ok(rows)
}

pub fn cmd_verify_all(ell: Span, cfg: &RunConfig) -> Result<Outcome> {
    no_dot(cfg, "verify-all")?;
    if ell.lo == 0 {
        return Err(Error::domain("ell must be at least 1"));
    }
    let rows = verify_all_rows(ell, &cfg.limits)?;
    let findings: Vec<Finding> = rows.iter().map(|r| r.finding.clone()).collect();
    let body = match cfg.format {
        Format::Json => json(&rows),
        _ => render_findings(cfg, &findings),
    };
    Ok(Outcome {
        body,
        claim_mismatch: rows.iter().any(|r| !r.invariant && r.finding.verdict == Verdict::Mismatch),
        invariant_failure: rows.iter().any(|r| r.invariant && r.finding.verdict == Verdict::Mismatch),
    })
}

pub fn cmd_export(what: Artifact, ell: usize, cfg: &RunConfig) -> Result<Outcome> {
    let dot_or_json = |dot: String, json: String| match cfg.format {
        Format::Json => Ok(json),
        Format::Dot | Format::Text => Ok(dot),
        Format::Markdown => Err(Error::domain("export supports dot and json")),
    };
    let body = match what {
        Artifact::Words => {
            let w = perm::enumerate_reduced_words_with(&perm::z_permutation(ell + 1)?, &cfg.limits)?;
            perm::words_to_json(&w) + "\n"
        }
        Artifact::Rwgraph => {
            let g = rwgraph::build_rwgraph_with(&perm::z_permutation(ell + 1)?, &cfg.limits)?;
            dot_or_json(rwgraph::export_dot(&g), g.to_json() + "\n")?
        }
        Artifact::Blambda => {
            let b = blambda::build_blambda(&staircase(ell)?)?;
            dot_or_json(b.to_dot(), b.to_json() + "\n")?
        }
        Artifact::Cartoon => {
            let c = toric::cartoon_diagram(&staircase(ell)?)?;
            dot_or_json(c.to_dot(), json(&c))?
        }
        Artifact::Graver => {
            let sep = chroma::colour_separation(&staircase(ell)?)?;
            let mut weights: Vec<u64> = (1..=ell as u64).collect();
            weights.extend([sep.mu as u64, sep.kappa as u64]);
            pid::graver_1xn_with(&weights, cfg.degree_bound, &cfg.limits)?.to_json() + "\n"
        }
    };
    Ok(Outcome {
        body,
        ..Outcome::default()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("stairgraph").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn spans() {
        assert_eq!("3..5".parse::<Span>().unwrap(), Span { lo: 3, hi: 5 });
        assert_eq!("4".parse::<Span>().unwrap(), Span { lo: 4, hi: 4 });
        assert_eq!("3..=5".parse::<Span>().unwrap(), Span { lo: 3, hi: 5 });
        assert!("5..3".parse::<Span>().is_err());
    }

    #[test]
    fn words_command() {
        let (code, out, _) = run_str(&["words", "--r", "4"]);
        assert_eq!(code, 0);
        assert!(out.contains("count=6"));
        let (code, out, _) = run_str(&["words", "--r", "5", "--format", "json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v[0]["words"].as_array().unwrap().len(), 10);
        assert_eq!(run_str(&["words", "--r", "3"]).0, EXIT_USAGE);
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_str(&["verify-all", "--ell", "5..3"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["nonsense"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn strict_fails_on_edge_claim() {
        assert_eq!(run_str(&["graph", "--ell", "3"]).0, EXIT_OK);
        assert_eq!(run_str(&["graph", "--ell", "3", "--strict"]).0, EXIT_CHECK_FAILED);
    }

    #[test]
    fn resource_exit() {
        assert_eq!(run_str(&["chroma", "--ell", "5", "--cap-cyclerank", "2"]).0, EXIT_RESOURCE);
    }

    #[test]
    fn conjecture_skips() {
        let (code, out, _) = run_str(&["conjectures", "--ell", "3", "--which", "c1"]);
        assert_eq!(code, 0);
        assert!(out.contains("[SKIPPED] conjecture I ell=3"));
    }

    #[test]
    fn flags_override_config() {
        let dir = std::env::temp_dir().join(format!("stairgraph-cli-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let cfg = dir.join("cfg.toml");
        std::fs::write(&cfg, "format = \"json\"\nstrict = true\n").unwrap();
        let c = cfg.to_str().unwrap();
        let (code, out, _) = run_str(&["graph", "--ell", "3", "--config", c]);
        assert_eq!(code, EXIT_CHECK_FAILED);
        assert!(out.trim_start().starts_with('['));
        let (_, out, _) = run_str(&["graph", "--ell", "3", "--config", c, "--format", "text"]);
        assert!(out.starts_with('['));
        assert!(out.contains("MISMATCH"));
        std::fs::write(&cfg, "colour = 1\n").unwrap();
        assert_eq!(run_str(&["graph", "--ell", "3", "--config", c]).0, EXIT_USAGE);
    }
}
