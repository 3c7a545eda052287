//! `horofano`: invariants, Chern numbers and 2-Fano classification from the
//! command line.
//!
//! Exit codes: 0 success, 1 usage/parse/domain error, 2 internal consistency
//! failure (a derived quantity disagreed with a stored closed form).

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use horofano::classification::{self, Bounds};
use horofano::root_system::Series;
use horofano::{descriptor, pasquier, ClassifiedVariety, Error};
use horofano_cli::record::{self, OutputRecord};

#[derive(Parser)]
#[command(
    name = "horofano",
    version,
    about = "Exact-arithmetic invariants and 2-Fano classification of horospherical varieties"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RecordFormat {
    Table,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StreamFormat {
    Table,
    Jsonl,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Numerical invariants of a two-orbit family, with closed-form cross-checks
    Invariants {
        /// Family descriptor: X1(n), X2, X3(n,m), X4 or X5
        descriptor: String,
        #[arg(long, value_enum, default_value = "table")]
        format: RecordFormat,
    },
    /// 2-Fano classification of a variety descriptor
    Classify {
        /// X1(n)/X2/X3(n,m)/X4/X5, a homogeneous space like B5/P3, a section like G(3,6)+c1 or OG(5,10)+c3, or WCI(a0,..,an; d1,..,dc)
        descriptor: String,
        #[arg(long, value_enum, default_value = "table")]
        format: RecordFormat,
    },
    /// Classify every variety in a bounded sweep, in canonical order
    Enumerate {
        /// Include the two-orbit families up to --max-n
        #[arg(long)]
        horospherical: bool,
        /// Include the homogeneous spaces up to --max-rank
        #[arg(long)]
        homogeneous: bool,
        /// Restrict the homogeneous sweep to these series (default: all)
        #[arg(long, value_delimiter = ',')]
        series: Vec<String>,
        /// Parameter cap for the two-orbit families
        #[arg(long, default_value_t = 9)]
        max_n: i64,
        /// Rank cap for the homogeneous sweep
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
        #[arg(long, value_enum, default_value = "table")]
        format: StreamFormat,
        /// Write byte-stable golden files into this directory instead of stdout
        #[arg(long)]
        golden: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("horofano: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}

/// Error-to-exit-code mapping used by `main`.
fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Consistency { .. } => 2,
        Error::Domain(_) | Error::Parse(_) | Error::Unsupported(_) => 1,
    }
}

fn run(command: Command) -> Result<(), Error> {
    match command {
        Command::Invariants { descriptor, format } => {
            let family = pasquier::Family::parse(&descriptor)?;
            let check = pasquier::cross_check_table1(family)?;
            let record =
                OutputRecord::for_invariants(family, &pasquier::invariants(family)?, &check);
            emit_record(&record, format);
            // invariants() already hard-errors on mismatch; keep the report
            // path honest anyway.
            check.into_result()?;
            Ok(())
        }
        Command::Classify { descriptor, format } => {
            let variety = descriptor::parse(&descriptor)?;
            let record = classify_record(&variety)?;
            emit_record(&record, format);
            Ok(())
        }
        Command::Enumerate {
            mut horospherical,
            mut homogeneous,
            series,
            max_n,
            max_rank,
            format,
            golden,
        } => {
            if !horospherical && !homogeneous {
                // Bare `enumerate` sweeps everything within the default caps.
                horospherical = true;
                homogeneous = true;
            }
            let series = parse_series_filter(&series)?;
            let mut homogeneous_rows = Vec::new();
            let mut horospherical_rows = Vec::new();
            if homogeneous {
                let bounds = Bounds {
                    horospherical_max_n: 0,
                    series_rank_caps: series.iter().map(|&s| (s, max_rank)).collect(),
                };
                homogeneous_rows = rows_for(&bounds)?;
            }
            if horospherical {
                let bounds = Bounds {
                    horospherical_max_n: max_n,
                    series_rank_caps: Default::default(),
                };
                horospherical_rows = rows_for(&bounds)?;
            }
            match golden {
                None => {
                    let all: Vec<OutputRecord> = homogeneous_rows
                        .into_iter()
                        .chain(horospherical_rows)
                        .collect();
                    print!("{}", render_stream(&all, format));
                    Ok(())
                }
                Some(dir) => {
                    std::fs::create_dir_all(&dir).map_err(|e| {
                        Error::Domain(format!("cannot create {}: {e}", dir.display()))
                    })?;
                    if homogeneous {
                        write_golden(
                            &dir,
                            &format!("homogeneous-rank{max_rank}"),
                            &homogeneous_rows,
                            format,
                        )?;
                    }
                    if horospherical {
                        write_golden(
                            &dir,
                            &format!("horospherical-n{max_n}"),
                            &horospherical_rows,
                            format,
                        )?;
                    }
                    Ok(())
                }
            }
        }
    }
}

fn parse_series_filter(series: &[String]) -> Result<Vec<Series>, Error> {
    if series.is_empty() {
        return Ok(Series::ALL.to_vec());
    }
    series
        .iter()
        .map(|s| {
            let tok = s.trim();
            let mut chars = tok.chars();
            match (chars.next().and_then(Series::from_letter), chars.next()) {
                (Some(series), None) => Ok(series),
                _ => Err(Error::Parse(format!(
                    "expected a series letter A-G, got `{tok}`"
                ))),
            }
        })
        .collect()
}

fn classify_record(variety: &ClassifiedVariety) -> Result<OutputRecord, Error> {
    let verdict = classification::classify(variety)?;
    let ch2 = match variety {
        ClassifiedVariety::Horospherical(f) => Some(horofano::chern::ch2_surfaces(*f)?),
        _ => None,
    };
    Ok(OutputRecord::for_verdict(variety, &verdict, ch2.as_ref()))
}

fn rows_for(bounds: &Bounds) -> Result<Vec<OutputRecord>, Error> {
    classification::enumerate(bounds)?
        .iter()
        .map(|(variety, verdict)| {
            let ch2 = match variety {
                ClassifiedVariety::Horospherical(f) => Some(horofano::chern::ch2_surfaces(*f)?),
                _ => None,
            };
            Ok(OutputRecord::for_verdict(variety, verdict, ch2.as_ref()))
        })
        .collect()
}

fn emit_record(record: &OutputRecord, format: RecordFormat) {
    match format {
        RecordFormat::Table => print!("{}", record.render_table()),
        RecordFormat::Json => println!("{}", record.to_json()),
    }
}

fn render_stream(records: &[OutputRecord], format: StreamFormat) -> String {
    if records.is_empty() {
        return String::new();
    }
    match format {
        StreamFormat::Table => record::render_aligned_table(records),
        StreamFormat::Jsonl => {
            let mut out = String::new();
            for r in records {
                out.push_str(&r.to_json());
                out.push('\n');
            }
            out
        }
        StreamFormat::Csv => record::render_csv(records),
    }
}

fn write_golden(
    dir: &std::path::Path,
    slug: &str,
    records: &[OutputRecord],
    format: StreamFormat,
) -> Result<(), Error> {
    let ext = match format {
        StreamFormat::Table => "txt",
        StreamFormat::Jsonl => "jsonl",
        StreamFormat::Csv => "csv",
    };
    let path = dir.join(format!("{slug}.{ext}"));
    let mut file = std::fs::File::create(&path)
        .map_err(|e| Error::Domain(format!("cannot create {}: {e}", path.display())))?;
    file.write_all(render_stream(records, format).as_bytes())
        .map_err(|e| Error::Domain(format!("cannot write {}: {e}", path.display())))?;
    eprintln!("wrote {}", path.display());
    Ok(())
}
