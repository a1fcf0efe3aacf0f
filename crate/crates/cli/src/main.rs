mod render;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};

use fence_core::format::{parse_fence, parse_front, serialize_fence};
use fence_core::legendrian::{cusped_render_data, fence_from_front, legendrian_invariants, reduce};
use fence_core::moves::{apply_move, End, Move, MoveKind, SlideForm, Split};
use fence_core::oracles::{
    compare_surfaces, kauffman_bracket, linking_number, normalized_bracket, DEFAULT_CROSSING_BOUND,
};
use fence_core::search::{
    bfs_equivalence, classify_annuli_many, enumerate_diagrams, SearchBudget, Verdict,
};
use fence_core::{Error, FenceDiagram};

#[derive(Parser)]
#[command(name = "fence", version, about = "Quasipositive fence diagrams and their Legendrian invariants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Surface summary, and for annuli lk, tb and rotation counters.
    Invariants { file: PathBuf },
    /// Reduced diagram: segments, corners, crossings, vertices.
    Reduce { file: PathBuf },
    /// Apply one move and print the resulting diagram.
    Move {
        #[arg(long, value_parser = parse_kind)]
        kind: MoveKind,
        #[arg(long)]
        at: Option<usize>,
        #[arg(long)]
        line: Option<usize>,
        #[arg(long, value_parser = parse_form)]
        target: Option<SlideForm>,
        #[arg(long, value_parser = parse_end)]
        end: Option<End>,
        #[arg(long, value_parser = parse_split)]
        split: Option<Split>,
        file: PathBuf,
    },
    /// Decide whether two diagrams are related by moves.
    Search {
        a: PathBuf,
        b: PathBuf,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Print every diagram with the given size.
    Enumerate {
        #[arg(long)]
        strands: usize,
        #[arg(long)]
        bands: usize,
        /// Keep only connected annuli.
        #[arg(long)]
        annulus: bool,
        /// Keep only connected diagrams.
        #[arg(long)]
        connected: bool,
    },
    /// Rotation classes of annuli with a given linking number.
    Classify {
        #[arg(long, allow_negative_numbers = true)]
        lk: i64,
        /// Include annuli whose core curve is knotted.
        #[arg(long)]
        any_core: bool,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Independent oracle values.
    Oracle {
        #[arg(long, value_enum)]
        check: OracleCheck,
        file: PathBuf,
        /// Second diagram, compared against the first by `gate`.
        file2: Option<PathBuf>,
    },
    /// Draw a diagram.
    Render {
        #[arg(long, value_enum, default_value_t = Format::Ascii)]
        format: Format,
        /// Draw the reduced diagram with cusps.
        #[arg(long)]
        cusped: bool,
        file: PathBuf,
    },
    /// Fence diagram approximating a rectilinear front.
    FromFront { file: PathBuf },
}

#[derive(clap::Args)]
struct BudgetArgs {
    #[arg(long)]
    max_steps: Option<usize>,
    #[arg(long)]
    max_strands: Option<usize>,
    #[arg(long)]
    max_bands: Option<usize>,
    #[arg(long)]
    max_visited: Option<usize>,
}

impl BudgetArgs {
    fn budget(&self) -> SearchBudget {
        let d = SearchBudget::default();
        SearchBudget {
            max_steps: self.max_steps.unwrap_or(d.max_steps),
            max_strands: self.max_strands.unwrap_or(d.max_strands),
            max_bands: self.max_bands.unwrap_or(d.max_bands),
            max_visited: self.max_visited.unwrap_or(d.max_visited),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleCheck {
    Lk,
    Bracket,
    Gate,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Ascii,
    Svg,
}

fn parse_kind(s: &str) -> Result<MoveKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_form(s: &str) -> Result<SlideForm, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_end(s: &str) -> Result<End, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_split(s: &str) -> Result<Split, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Failure mapped to an exit status: 1 for input errors, 2 for moves and
/// invariants that do not apply.
struct Failure {
    status: u8,
    error: anyhow::Error,
}

impl From<anyhow::Error> for Failure {
    fn from(error: anyhow::Error) -> Self {
        let status = match error.downcast_ref::<Error>() {
            Some(
                Error::NotApplicable(_)
                | Error::BadTarget
                | Error::BadSplit(_)
                | Error::NotAnnulus
                | Error::NotConnected
                | Error::TooLarge { .. },
            ) => 2,
            _ => 1,
        };
        Failure { status, error }
    }
}

impl From<Error> for Failure {
    fn from(error: Error) -> Self {
        anyhow::Error::from(error).into()
    }
}

fn read(path: &Path) -> anyhow::Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load(path: &Path) -> anyhow::Result<FenceDiagram> {
    parse_fence(&read(path)?).with_context(|| path.display().to_string())
}

fn invariants(f: &FenceDiagram) -> Result<String, Failure> {
    let s = f.surface_summary();
    let mut out = format!(
        "chi={}\ncomponents={}\nconnected={}\nannulus={}\n",
        s.euler_characteristic,
        s.boundary_components,
        s.connected,
        s.is_annulus()
    );
    if s.is_annulus() {
        let inv = legendrian_invariants(f)?;
        let _ = write!(
            out,
            "lk={}\ntb={}\nrot={}\nrot_abs={}\np={}\nn={}\nr_c={}\nd_c={}\nu_c={}\n",
            linking_number(f)?,
            inv.tb,
            inv.rot,
            inv.rot_abs,
            inv.p,
            inv.n,
            inv.r_c,
            inv.d_c,
            inv.u_c
        );
    }
    Ok(out)
}

fn reduction(f: &FenceDiagram) -> Result<String, Failure> {
    let r = reduce(f)?;
    let mut out = format!("core {}\nsegments\n", r.core());
    for h in r.horizontals() {
        let _ = writeln!(out, "H {} {} {}", h.line, h.from, h.to);
    }
    for v in r.verticals() {
        let _ = writeln!(out, "V {} {} {}", v.position, v.top, v.bottom);
    }
    out.push_str("corners\n");
    for c in r.corners() {
        let _ = writeln!(out, "{} {} {}", c.line, c.position, c.shape);
    }
    out.push_str("crossings\n");
    for c in r.crossings() {
        let _ = writeln!(out, "{} {}", c.line, c.position);
    }
    out.push_str("vertices\n");
    for v in r.trivalent_vertices() {
        let _ = writeln!(out, "{} {}", v.line, v.position);
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn build_move(
    kind: MoveKind,
    at: Option<usize>,
    line: Option<usize>,
    target: Option<SlideForm>,
    end: Option<End>,
    split: Option<Split>,
) -> anyhow::Result<Move> {
    let need = |v: Option<usize>, flag: &str| {
        v.with_context(|| format!("{kind} needs {flag}"))
    };
    Ok(match kind {
        MoveKind::Inflate => Move::Inflate {
            line: need(line, "--line")?,
            after: need(at, "--at")?,
            split: split.unwrap_or_default(),
        },
        MoveKind::Deflate => Move::Deflate {
            line: need(line, "--line")?,
        },
        MoveKind::Slip => Move::Slip {
            at: need(at, "--at")?,
        },
        MoveKind::Slide => Move::Slide {
            at: need(at, "--at")?,
            target: target.context("slide needs --target")?,
        },
        MoveKind::Twirl => Move::Twirl {
            end: end.unwrap_or(End::Front),
        },
        MoveKind::Turn => Move::Turn,
    })
}

fn search(a: &FenceDiagram, b: &FenceDiagram, budget: &SearchBudget) -> String {
    let result = bfs_equivalence(a, b, budget);
    let mut out = match &result.verdict {
        Verdict::Related(path) => {
            let mut s = format!("verdict=Related\nsteps={}\n", path.len());
            for m in path {
                let _ = writeln!(s, "move {m}");
            }
            s
        }
        Verdict::NotRelatedByInvariant(name) => format!("verdict=NotRelatedByInvariant({name})\n"),
        Verdict::Unknown => "verdict=Unknown\n".to_string(),
    };
    let _ = writeln!(out, "visited={}", result.visited);
    out
}

fn oracle(check: OracleCheck, f: &FenceDiagram, g: Option<&FenceDiagram>) -> Result<String, Failure> {
    Ok(match check {
        OracleCheck::Lk => format!("lk={}\n", linking_number(f)?),
        OracleCheck::Bracket => {
            let word = f.expand();
            format!(
                "crossings={}\nbracket={}\nnormalized={}\n",
                word.len(),
                kauffman_bracket(&word, DEFAULT_CROSSING_BOUND)?,
                normalized_bracket(&word, DEFAULT_CROSSING_BOUND)?
            )
        }
        OracleCheck::Gate => {
            let g = g.context("gate needs a second diagram")?;
            format!("gate={}\n", compare_surfaces(f, g, DEFAULT_CROSSING_BOUND))
        }
    })
}

fn run(cli: Cli) -> Result<String, Failure> {
    Ok(match cli.command {
        Command::Invariants { file } => invariants(&load(&file)?)?,
        Command::Reduce { file } => reduction(&load(&file)?)?,
        Command::Move {
            kind,
            at,
            line,
            target,
            end,
            split,
            file,
        } => {
            let f = load(&file)?;
            let m = build_move(kind, at, line, target, end, split)?;
            serialize_fence(&apply_move(&f, &m)?)
        }
        Command::Search { a, b, budget } => search(&load(&a)?, &load(&b)?, &budget.budget()),
        Command::Enumerate {
            strands,
            bands,
            annulus,
            connected,
        } => {
            if strands == 0 {
                return Err(anyhow::anyhow!("--strands must be positive").into());
            }
            let diagrams = enumerate_diagrams(strands, bands, move |f| {
                (!annulus || f.is_quasipositive_annulus()) && (!connected || f.is_connected())
            });
            diagrams
                .map(|f| serialize_fence(&f))
                .collect::<Vec<_>>()
                .join("\n")
        }
        Command::Classify {
            lk,
            any_core,
            budget,
        } => {
            let mut out = String::new();
            for c in classify_annuli_many(&[lk], &budget.budget(), !any_core) {
                let _ = writeln!(
                    out,
                    "rot_abs={} tb={} members={} representative={}",
                    c.rot_abs, c.tb, c.members, c.representative
                );
            }
            out
        }
        Command::Oracle { check, file, file2 } => {
            let g = file2.as_deref().map(load).transpose()?;
            oracle(check, &load(&file)?, g.as_ref())?
        }
        Command::Render {
            format,
            cusped,
            file,
        } => {
            let f = load(&file)?;
            match (format, cusped) {
                (Format::Ascii, false) => render::ascii_fence(&f),
                (Format::Svg, false) => render::svg_fence(&f),
                (Format::Ascii, true) => render::ascii_cusped(&cusped_render_data(&reduce(&f)?)),
                (Format::Svg, true) => render::svg_cusped(&cusped_render_data(&reduce(&f)?)),
            }
        }
        Command::FromFront { file } => {
            let front = parse_front(&read(&file)?).with_context(|| file.display().to_string())?;
            serialize_fence(&fence_from_front(&front)?)
        }
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure { status, error }) => {
            eprintln!("error: {error:#}");
            ExitCode::from(status)
        }
    }
}
