//! Command line: argument types and the dispatcher behind the `totdist`
//! binary.
//!
//! Results go to `out`. Configuration echoes for formats without a header
//! (graph6, CSV, plain values) and all timings go to `err`, which keeps
//! `out` byte-identical between runs.

use std::fs;
use std::io::{self, BufReader, Read, Write};
use std::path::PathBuf;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use totdist_core::constructions::{Built, ConstructionSpec};
use totdist_core::formulas::{evaluate, FormulaId};
use totdist_core::search::chord_augmentation_search;
use totdist_core::search::survey::OUTRADIUS1_LIMIT;

use crate::codec::{self, read_json_edges, write_json_edges};
use crate::parallel::{run_survey, SurveyJob};
use crate::report::{
    chord_doc, figure_by_name, metrics_doc, survey_doc, table_csv, to_json, Table,
};
use crate::verify::{run_suite, Constructions, Suite};

/// Seed for randomised checks when none is given.
pub const DEFAULT_SEED: u64 = 20_240_601;

#[derive(Debug, Parser)]
#[command(
    name = "totdist",
    version,
    about = "Total distance and radius of small graphs and digraphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a named family and write it out.
    Construct(ConstructArgs),
    /// Distances, radii and eccentricities of graph6/digraph6/JSON input.
    Metrics(MetricsArgs),
    /// Evaluate a closed form.
    Formula(FormulaArgs),
    /// Run verification suites; exit code 1 if any check fails.
    Verify(VerifyArgs),
    /// Exhaustive surveys and the chord search.
    Survey(SurveyArgs),
    /// CSV tables of average distances over an (n, r) grid.
    Report(ReportArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    /// graph6 for graphs, digraph6 for digraphs.
    Auto,
    Graph6,
    Digraph6,
    Json,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    /// clique, empty, path, cycle, hypercube, star, bidirected-clique,
    /// directed-cycle, G_nrs, D_2r_r_1, D_nrs, DP, max-rad, min-rad,
    /// min-rad2, min-rad-3/2, chord-augmented, rad3-core, maxrad-chords,
    /// max-outradius, outradius1
    pub family: String,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub s: Option<usize>,
    /// Cycle length for DP, dimension for hypercube.
    #[arg(long)]
    pub d: Option<usize>,
    /// Twice the radius, for min-rad.
    #[arg(long)]
    pub doubled_r: Option<usize>,
    #[arg(long)]
    pub leaves: Option<usize>,
    /// Chords as `i,j` pairs separated by `;`, e.g. `5,1;4,2`.
    #[arg(long)]
    pub chords: Option<String>,
    /// Comma-separated cycle lengths for min-rad2.
    #[arg(long)]
    pub cycle_lengths: Option<String>,
    #[arg(long, default_value_t = 0)]
    pub variant: usize,
    #[arg(long, value_enum, default_value_t = OutputFormat::Auto)]
    pub format: OutputFormat,
    /// Prefix graph6/digraph6 output with its header.
    #[arg(long)]
    pub header: bool,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    /// JSON if the input starts with `{`, otherwise graph6/digraph6 lines.
    Auto,
    Graph6,
    Json,
}

#[derive(Debug, Args)]
pub struct MetricsArgs {
    /// File to read, or `-` for stdin.
    #[arg(default_value = "-")]
    pub input: String,
    #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
    pub format: InputFormat,
}

#[derive(Debug, Args)]
pub struct FormulaArgs {
    /// eq1, eq2, vizing, digraph-max-arcs, min-digraph-small, min-rad-bound,
    /// maxrad-lower, maxradplus, radplus1-max
    pub id: String,
    pub params: Vec<u64>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// A suite name or `all`.
    pub suite: String,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SurveyMode {
    MinWiener,
    MaxWiener,
    #[value(name = "outradius1-max")]
    OutRadius1Max,
    Chord,
}

#[derive(Debug, Args)]
pub struct SurveyArgs {
    #[arg(value_enum)]
    pub mode: SurveyMode,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
    /// Number of shards; the output does not depend on it.
    #[arg(long, default_value_t = 16)]
    pub shards: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableArg {
    Graphs,
    Digraphs,
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    #[arg(value_enum)]
    pub table: TableArg,
    /// Orders: `N` or `A..=B`.
    #[arg(long, default_value = "10..=30")]
    pub n: String,
    /// Radii: `R` or `A..=B`.
    #[arg(long, default_value = "3..=5")]
    pub r: String,
}

/// Parses `N` or `A..=B`.
pub fn parse_range(s: &str) -> Result<std::ops::RangeInclusive<usize>> {
    let bad = || anyhow!("expected N or A..=B, got '{s}'");
    match s.split_once("..=") {
        Some((a, b)) => {
            let (a, b) = (
                a.trim().parse().map_err(|_| bad())?,
                b.trim().parse().map_err(|_| bad())?,
            );
            if a > b {
                return Err(bad());
            }
            Ok(a..=b)
        }
        None => {
            let v = s.trim().parse().map_err(|_| bad())?;
            Ok(v..=v)
        }
    }
}

fn parse_chords(s: &str) -> Result<Vec<(usize, usize)>> {
    s.split(';')
        .filter(|p| !p.trim().is_empty())
        .map(|p| {
            let (i, j) = p
                .split_once(',')
                .ok_or_else(|| anyhow!("chord '{p}' is not i,j"))?;
            Ok((i.trim().parse()?, j.trim().parse()?))
        })
        .collect()
}

fn need(v: Option<usize>, family: &str, flag: &str) -> Result<usize> {
    v.ok_or_else(|| anyhow!("{family} needs --{flag}"))
}

pub fn spec_from_args(a: &ConstructArgs) -> Result<ConstructionSpec> {
    let f = a.family.as_str();
    let n = || need(a.n, f, "n");
    let r = || need(a.r, f, "r");
    let s = || need(a.s, f, "s");
    use ConstructionSpec as C;
    let spec = match f {
        "clique" => C::Clique { n: n()? },
        "empty" => C::Empty { n: n()? },
        "path" => C::Path { n: n()? },
        "cycle" => C::Cycle { n: n()? },
        "hypercube" => C::Hypercube {
            d: u32::try_from(need(a.d, f, "d")?)?,
        },
        "star" => C::Star {
            leaves: need(a.leaves, f, "leaves")?,
        },
        "bidirected-clique" => C::BidirectedClique { n: n()? },
        "directed-cycle" => C::DirectedCycle { n: n()? },
        "G_nrs" => C::Gnrs {
            n: n()?,
            r: r()?,
            s: s()?,
        },
        "D_2r_r_1" => C::D2r { r: r()? },
        "D_nrs" => C::Dnrs {
            n: n()?,
            r: r()?,
            s: s()?,
        },
        "DP" => C::Dp {
            n: n()?,
            d: need(a.d, f, "d")?,
        },
        "max-rad" => C::MaxRad { n: n()?, r: r()? },
        "min-rad" => C::MinRad {
            n: n()?,
            doubled_r: need(a.doubled_r, f, "doubled-r")?,
        },
        "min-rad2" => {
            let lengths = a
                .cycle_lengths
                .as_deref()
                .ok_or_else(|| anyhow!("min-rad2 needs --cycle-lengths"))?
                .split(',')
                .map(|x| x.trim().parse::<usize>())
                .collect::<Result<Vec<_>, _>>()?;
            C::MinRad2 {
                n: n()?,
                cycle_lengths: lengths,
            }
        }
        "min-rad-3/2" => C::MinRadThreeHalves { n: n()? },
        "chord-augmented" => C::ChordAugmented {
            n: n()?,
            r: r()?,
            chords: parse_chords(a.chords.as_deref().unwrap_or(""))?,
        },
        other => match figure_by_name(other, a.r, a.variant) {
            Some(figure) => C::Figure { figure, n: n()? },
            None if figure_by_name(other, Some(0), a.variant).is_some() => {
                bail!("{other} needs --r")
            }
            None => bail!("unknown family '{other}'"),
        },
    };
    Ok(spec)
}

fn read_input(path: &str) -> Result<String> {
    let mut text = String::new();
    if path == "-" {
        io::stdin().read_to_string(&mut text)?;
    } else {
        text = fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
    }
    Ok(text)
}

fn decode_all(text: &str, format: InputFormat) -> Result<Vec<Built>> {
    let json = match format {
        InputFormat::Json => true,
        InputFormat::Graph6 => false,
        InputFormat::Auto => text.trim_start().starts_with('{'),
    };
    if json {
        Ok(vec![read_json_edges(text)?.graph])
    } else {
        Ok(codec::read_stream(BufReader::new(text.as_bytes()))?)
    }
}

/// Runs one command and returns the process exit code.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match cli.command {
        Command::Construct(a) => {
            let spec = spec_from_args(&a)?;
            let built = spec.build()?;
            let text = match (a.format, &built) {
                (OutputFormat::Json, _) => write_json_edges(&built, Some(&spec)),
                (OutputFormat::Graph6, Built::Digraph(_)) => {
                    bail!("{} is a digraph; use --format digraph6", spec.name())
                }
                (OutputFormat::Digraph6, Built::Graph(g)) => {
                    let d = totdist_core::Digraph::bidirected(g);
                    codec::write_stream(&[Built::Digraph(d)], a.header)
                }
                _ => codec::write_stream(std::slice::from_ref(&built), a.header),
            };
            let params: Vec<String> = spec
                .params()
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect();
            writeln!(err, "# construct {} {}", spec.name(), params.join(" "))?;
            match &a.output {
                Some(p) => {
                    fs::write(p, text).with_context(|| format!("writing {}", p.display()))?
                }
                None => out.write_all(text.as_bytes())?,
            }
            Ok(0)
        }
        Command::Metrics(a) => {
            let items = decode_all(&read_input(&a.input)?, a.format)?;
            let docs: Vec<_> = items.iter().map(metrics_doc).collect();
            let text = match docs.as_slice() {
                [one] => to_json(one),
                many => to_json(&many),
            };
            out.write_all(text.as_bytes())?;
            Ok(0)
        }
        Command::Formula(a) => {
            let id: FormulaId = a.id.parse().map_err(|e| anyhow!("{e}"))?;
            let res = evaluate(id, &a.params)?;
            writeln!(err, "# formula {} {:?}", id, a.params)?;
            writeln!(out, "{}", res.value)?;
            Ok(0)
        }
        Command::Verify(a) => {
            let suites: Vec<Suite> = if a.suite == "all" {
                Suite::ALL.to_vec()
            } else {
                vec![a.suite.parse().map_err(|e: String| anyhow!(e))?]
            };
            writeln!(err, "# verify {} seed={}", a.suite, a.seed)?;
            let constructions = Constructions::default();
            let mut all_passed = true;
            for s in suites {
                let start = Instant::now();
                let rep = run_suite(s, &constructions, a.seed);
                writeln!(out, "{rep}")?;
                for f in rep.failures.iter().take(20) {
                    writeln!(out, "  {f}")?;
                }
                writeln!(err, "# {} took {:.2?}", s, start.elapsed())?;
                all_passed &= rep.passed();
            }
            Ok(if all_passed { 0 } else { 1 })
        }
        Command::Survey(a) => {
            let start = Instant::now();
            let n = || a.n.ok_or_else(|| anyhow!("this survey needs --n"));
            let r = || a.r.ok_or_else(|| anyhow!("this survey needs --r"));
            let text = match a.mode {
                SurveyMode::Chord => to_json(&chord_doc(&chord_augmentation_search(r()?)?)?),
                mode => {
                    let job = match mode {
                        SurveyMode::MinWiener => SurveyJob::MinWiener { n: n()?, r: r()? },
                        SurveyMode::MaxWiener => SurveyJob::MaxWiener { n: n()?, r: r()? },
                        SurveyMode::OutRadius1Max => {
                            let n = n()?;
                            if n > OUTRADIUS1_LIMIT {
                                bail!(
                                    "the out-radius 1 survey is limited to n <= {OUTRADIUS1_LIMIT}"
                                );
                            }
                            SurveyJob::OutRadiusOneMax { n }
                        }
                        SurveyMode::Chord => unreachable!(),
                    };
                    let rep = run_survey(job, a.shards, a.threads)?;
                    to_json(&survey_doc(&rep, a.shards)?)
                }
            };
            writeln!(
                err,
                "# survey took {:.2?} on {} thread(s)",
                start.elapsed(),
                a.threads
            )?;
            out.write_all(text.as_bytes())?;
            Ok(0)
        }
        Command::Report(a) => {
            let ns = parse_range(&a.n)?;
            let rs = parse_range(&a.r)?;
            let table = match a.table {
                TableArg::Graphs => Table::Graphs,
                TableArg::Digraphs => Table::Digraphs,
            };
            writeln!(err, "# report {:?} n={} r={}", a.table, a.n, a.r)?;
            out.write_all(table_csv(table, ns, rs)?.as_bytes())?;
            Ok(0)
        }
    }
}
