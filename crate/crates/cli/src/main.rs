//! `kr-soliton`: evolve states, scatter solitons, query the R-matrix and run
//! the verification suites.

use std::fmt;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use kr_soliton::automaton::{energies, evolve_tl, evolve_tl_inverse, spectrum, State};
use kr_soliton::golden;
use kr_soliton::natural::check_commutations;
use kr_soliton::rmatrix::{hw_table, r_general};
use kr_soliton::soliton::{detect, scatter, Label};
use kr_soliton::sweep::Mode;
use kr_soliton::verify::{self, Config, Outcome, CRITERIA};
use kr_soliton::{Algebra, Error, Row};

/// Writes one line to stdout; a closed pipe ends the process quietly.
fn emit(args: fmt::Arguments<'_>) {
    if let Err(e) = writeln!(io::stdout().lock(), "{args}") {
        if e.kind() == io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}

macro_rules! say {
    ($($t:tt)*) => { emit(format_args!($($t)*)) };
}

#[derive(Parser)]
#[command(name = "kr-soliton", version, about = "Soliton cellular automata on KR crystals")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Trace,
    Labels,
    JsonLines,
}

#[derive(Args)]
struct StateInput {
    /// Algebra descriptor such as `C1:3`; optional when the state line has `alg=`.
    #[arg(long)]
    alg: Option<Algebra>,
    /// Inline state: site tokens, or `alg=<descriptor> | <sites>`.
    #[arg(long, conflicts_with_all = ["input", "example"])]
    state: Option<String>,
    /// File holding one state line; blank lines and `#` comments are skipped.
    #[arg(long, conflicts_with = "example")]
    input: Option<PathBuf>,
    /// Row 0 of a bundled trace (`a1`, `b1`, `inhomo`, ...).
    #[arg(long)]
    example: Option<String>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print `t: <sites>` for t = 0..steps under T_r.
    Evolve {
        #[command(flatten)]
        input: StateInput,
        #[arg(long)]
        r: Option<u16>,
        #[arg(long)]
        steps: Option<usize>,
        /// Apply the inverse of T_r instead.
        #[arg(long)]
        inverse: bool,
        #[arg(long, value_enum, default_value = "trace")]
        format: Format,
    },
    /// Scatter solitons `l:(coords)@phase` and compare with the R prediction.
    Scatter {
        #[arg(long)]
        alg: Algebra,
        /// Space separated `l:(coords)@phase`, coords in the lowered algebra;
        /// a larger phase places a soliton further left
        #[arg(long)]
        solitons: String,
        /// Defaults to one more than the longest soliton.
        #[arg(long)]
        r: Option<u16>,
        #[arg(long, default_value_t = 200)]
        tmax: usize,
        /// Capacities of vacuum sites placed to the right of the solitons.
        #[arg(long)]
        region: Option<String>,
        #[arg(long, default_value_t = 8)]
        region_gap: usize,
        #[arg(long, value_enum, default_value = "labels")]
        format: Format,
    },
    /// `R(b (x) c)` for `--in "<b>|<c>"`; prints `c~|b~ ; H=<h>`.
    Rmatrix {
        #[arg(long)]
        alg: Algebra,
        #[arg(long)]
        l: u16,
        #[arg(long)]
        k: u16,
        #[arg(long = "in")]
        pair: String,
        #[arg(long, value_enum, default_value = "trace")]
        format: Format,
    },
    /// Energies E_l and soliton content N_l of a state.
    Conserved {
        #[command(flatten)]
        input: StateInput,
        #[arg(long, value_enum, default_value = "trace")]
        format: Format,
    },
    /// Dump the highest weight table of B_l (x) B_k, l >= k.
    Table {
        #[arg(long)]
        alg: Algebra,
        #[arg(long)]
        l: u16,
        #[arg(long)]
        k: u16,
    },
    /// Run verification suites; exits with 2 on any failure.
    Verify {
        /// One of golden, theorem, corollary, conservation, rmatrix, natural, type3, inhomogeneous, all.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Run the suites of one acceptance criterion instead.
        #[arg(long)]
        criterion: Option<u8>,
        #[arg(long, default_value_t = Config::default().seed)]
        seed: u64,
        #[arg(long)]
        sequential: bool,
        /// Experiments per algebra for randomized suites.
        #[arg(long)]
        runs: Option<usize>,
        #[arg(long, value_enum, default_value = "trace")]
        format: Format,
    },
    /// Exhaustive T_nat checks on the highest weight elements of B_l (x) B_k.
    VerifyNatural {
        #[arg(long)]
        alg: Algebra,
        #[arg(long)]
        l: u16,
        #[arg(long)]
        k: u16,
    },
}

/// What a command reports besides hard errors.
enum Verdict {
    Ok,
    Mismatch,
}

type Run = Result<Verdict, Error>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.cmd) {
        Ok(Verdict::Ok) => ExitCode::SUCCESS,
        Ok(Verdict::Mismatch) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn dispatch(cmd: Cmd) -> Run {
    match cmd {
        Cmd::Evolve { input, r, steps, inverse, format } => evolve(input, r, steps, inverse, format),
        Cmd::Scatter { alg, solitons, r, tmax, region, region_gap, format } => {
            scatter_cmd(alg, &solitons, r, tmax, region.as_deref(), region_gap, format)
        }
        Cmd::Rmatrix { alg, l, k, pair, format } => rmatrix(alg, l, k, &pair, format),
        Cmd::Conserved { input, format } => conserved(input, format),
        Cmd::Table { alg, l, k } => {
            say!("{}", hw_table(alg, l, k)?.dump().trim_end());
            Ok(Verdict::Ok)
        }
        Cmd::Verify { suite, criterion, seed, sequential, runs, format } => {
            let mode = if sequential { Mode::Sequential } else { Mode::default() };
            verify_cmd(&suite, criterion, Config { seed, mode }, runs, format)
        }
        Cmd::VerifyNatural { alg, l, k } => verify_natural(alg, l, k),
    }
}

/// The state plus defaults for `r` and `steps` taken from a bundled trace.
fn load(input: &StateInput) -> Result<(State, Option<u16>, Option<usize>), Error> {
    if let Some(name) = &input.example {
        let tr = golden::find(name).ok_or_else(|| Error::Parse(format!("no bundled trace `{name}`")))?;
        let steps = tr.rows.last().map(|r| r.0);
        return Ok((tr.initial()?, Some(tr.l), steps));
    }
    let line = match (&input.state, &input.input) {
        (Some(s), _) => s.clone(),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
            text.lines()
                .map(str::trim)
                .find(|l| !l.is_empty() && !l.starts_with('#'))
                .ok_or_else(|| Error::Parse(format!("{}: no state line", path.display())))?
                .to_string()
        }
        (None, None) => return Err(Error::Parse("give --state, --input or --example".into())),
    };
    Ok((State::parse_line(&line, input.alg)?, None, None))
}

fn label_list(state: &State) -> Result<Vec<String>, Error> {
    Ok(detect(state)?.into_iter().map(|f| f.label.to_string()).collect())
}

fn evolve(input: StateInput, r: Option<u16>, steps: Option<usize>, inverse: bool, format: Format) -> Run {
    let (mut state, r0, s0) = load(&input)?;
    let r = r.or(r0).ok_or_else(|| Error::Parse("--r is required".into()))?;
    let steps = steps.or(s0).unwrap_or(10);
    for t in 0..=steps {
        if t > 0 {
            state = if inverse { evolve_tl_inverse(&state, r)? } else { evolve_tl(&state, r)?.state };
        }
        match format {
            Format::Trace => say!("{t}: {state}"),
            Format::Labels => match label_list(&state) {
                Ok(v) => say!("{t}: {}", v.join(" ; ")),
                Err(e) => say!("{t}: ({e})"),
            },
            Format::JsonLines => {
                let labels = label_list(&state).ok();
                say!("{}", json!({ "t": t, "state": state.render(), "left_slot": state.left_slot(), "labels": labels }));
            }
        }
    }
    Ok(Verdict::Ok)
}

/// Parses `l:(coords)@phase` tokens; labels live at the lowered rank.
fn parse_solitons(alg: Algebra, text: &str) -> Result<Vec<Label>, Error> {
    let low = alg.lowered()?;
    let mut out = Vec::new();
    for tok in text.split_whitespace() {
        let bad = || Error::Parse(format!("expected l:(coords)@phase, got `{tok}`"));
        let (l, rest) = tok.split_once(':').ok_or_else(bad)?;
        let (coords, phase) = rest.split_once('@').ok_or_else(bad)?;
        let l: u16 = l.parse().map_err(|_| bad())?;
        let phase: i64 = phase.parse().map_err(|_| bad())?;
        out.push(Label::new(phase, Row::parse_tuple(low, Some(l), coords)?));
    }
    out.sort_by(|a, b| b.phase.cmp(&a.phase));
    Ok(out)
}

fn scatter_cmd(
    alg: Algebra,
    solitons: &str,
    r: Option<u16>,
    tmax: usize,
    region: Option<&str>,
    region_gap: usize,
    format: Format,
) -> Run {
    let labels = parse_solitons(alg, solitons)?;
    let r = r.unwrap_or_else(|| labels.iter().map(Label::len).max().unwrap_or(0) + 1);
    let region: Vec<Row> = match region {
        Some(s) => s
            .split_whitespace()
            .map(|t| t.parse::<u16>().map(|m| Row::vacuum(alg, m)))
            .collect::<Result<_, _>>()
            .map_err(|_| Error::Parse(format!("bad capacities `{s}`")))?,
        None => Vec::new(),
    };
    let sc = scatter(alg, &labels, &region, region_gap, r, tmax)?;
    let verdict = if sc.matches() { "MATCH" } else { "MISMATCH" };
    match format {
        Format::JsonLines => {
            let strs = |v: &[Label]| v.iter().map(|l| l.to_string()).collect::<Vec<_>>();
            say!(
                "{}",
                json!({
                    "incoming": strs(&sc.incoming),
                    "outgoing": strs(&sc.outgoing),
                    "predicted": strs(&sc.predicted),
                    "steps": sc.steps,
                    "match": sc.matches(),
                })
            );
        }
        _ => {
            for l in &sc.incoming {
                say!("in   {l}");
            }
            for l in &sc.outgoing {
                say!("out  {l}");
            }
            for l in &sc.predicted {
                say!("pred {l}");
            }
            say!("steps {}", sc.steps);
            say!("{verdict}");
        }
    }
    Ok(if sc.matches() { Verdict::Ok } else { Verdict::Mismatch })
}

fn rmatrix(alg: Algebra, l: u16, k: u16, pair: &str, format: Format) -> Run {
    let (b, c) = pair
        .split_once('|')
        .ok_or_else(|| Error::Parse(format!("expected `<b>|<c>`, got `{pair}`")))?;
    let b = Row::parse_tuple(alg, Some(l), b)?;
    let c = Row::parse_tuple(alg, Some(k), c)?;
    let (c2, b2, h) = r_general(alg, &b, &c)?;
    match format {
        Format::JsonLines => say!("{}", json!({ "c": c2.tuple(), "b": b2.tuple(), "H": h })),
        _ => say!("{}|{} ; H={h}", c2.tuple(), b2.tuple()),
    }
    Ok(Verdict::Ok)
}

fn conserved(input: StateInput, format: Format) -> Run {
    let (state, _, _) = load(&input)?;
    let e = energies(&state)?;
    let n = spectrum(&state)?;
    for (i, el) in e.iter().enumerate() {
        let l = i + 1;
        let nl = n.get(i).copied().unwrap_or(0);
        match format {
            Format::JsonLines => say!("{}", json!({ "l": l, "E": el, "N": nl })),
            _ => say!("l={l} E={el} N={nl}"),
        }
    }
    Ok(Verdict::Ok)
}

fn suites(name: &str, cfg: &Config, runs: Option<usize>) -> Result<Vec<Outcome>, Error> {
    let scat = verify::scattering_algebras();
    let n = |d: usize| runs.unwrap_or(d);
    let all = [
        "golden",
        "theorem",
        "corollary",
        "conservation",
        "rmatrix",
        "natural",
        "type3",
        "inhomogeneous",
    ];
    let pick = |s: &str| -> Result<Vec<Outcome>, Error> {
        Ok(match s {
            "golden" => vec![verify::golden_suite(cfg)],
            "theorem" => scat.iter().map(|&a| verify::theorem_suite(cfg, a, n(200))).collect(),
            "corollary" => scat.iter().map(|&a| verify::corollary_suite(cfg, a, n(50))).collect(),
            "conservation" => scat.iter().map(|&a| verify::conservation_suite(cfg, a, n(100))).collect(),
            "rmatrix" => verify::criterion(5, cfg),
            "natural" => verify::criterion(6, cfg),
            "type3" => verify::criterion(7, cfg),
            "inhomogeneous" => vec![verify::inhomogeneous_suite(cfg, n(100))],
            other => return Err(Error::Parse(format!("unknown suite `{other}`"))),
        })
    };
    if name == "all" {
        let mut out = Vec::new();
        for s in all {
            out.extend(pick(s)?);
        }
        Ok(out)
    } else {
        pick(name)
    }
}

fn verify_cmd(suite: &str, criterion: Option<u8>, cfg: Config, runs: Option<usize>, format: Format) -> Run {
    let outcomes = match criterion {
        Some(id) if CRITERIA.iter().any(|c| c.0 == id) => verify::criterion(id, &cfg),
        Some(id) => return Err(Error::Parse(format!("no criterion {id}"))),
        None => suites(suite, &cfg, runs)?,
    };
    if format == Format::JsonLines {
        say!("{}", json!({ "seed": cfg.seed }));
    } else {
        say!("seed {}", cfg.seed);
    }
    let mut ok = true;
    for o in &outcomes {
        ok &= o.passed();
        match format {
            Format::JsonLines => say!(
                "{}",
                json!({
                    "suite": o.name,
                    "cases": o.cases,
                    "passed": o.passed(),
                    "failures": o.failures,
                    "seconds": o.elapsed.as_secs_f64(),
                })
            ),
            _ => {
                say!("{} {}", if o.passed() { "PASS" } else { "FAIL" }, o.summary());
                for f in o.failures.iter().take(10) {
                    say!("    {f}");
                }
            }
        }
    }
    Ok(if ok { Verdict::Ok } else { Verdict::Mismatch })
}

fn verify_natural(alg: Algebra, l: u16, k: u16) -> Run {
    let rep = check_commutations(alg, l, k)?;
    say!("{alg} l={l} k={k}: {} highest weight elements, max degree {}", rep.hw_count, rep.max_degree);
    for (name, ok, n) in rep.lines() {
        say!("{:<14} {} ({n} failures)", name, if ok { "PASS" } else { "FAIL" });
    }
    Ok(if rep.ok() { Verdict::Ok } else { Verdict::Mismatch })
}
