//! Argument parsing and validation for the `ramp` binary.

use std::error::Error;
use std::fmt;

use ramp::dataset::ParseError;
use ramp::miner::{MineOptions, Mode, Projection};
use ramp::output::DEFAULT_FLUSH_THRESHOLD;
use ramp::synth::SynthConfig;

pub const USAGE: &str = "\
usage: ramp <subcommand> [flags]

subcommands:
  mine    --mode {all|max|closed} --min-sup <int|frac> [--input F] [--output F]
          [--no-pair-prune] [--no-pep] [--no-fhut] [--no-hutmfi] [--no-erfco]
          [--projection {pbr|full}] [--sorted] [--buffer N]
  oracle  --mode {all|max|closed} --min-sup <int|frac> [--input F] [--output F] [--sorted]
  gen     --transactions N --items K --avg-len L --patterns P [--seed S] [--output F]
  bench   <mine flags> [--runs N]
  help

--min-sup takes an absolute count (integer >= 1) or a fraction in (0,1],
converted to ceil(frac * transactions). Results go to stdout (or --output);
the summary goes to stderr. RAMP_WORD_WIDTH={32|64} selects the region
width (default 64).

Pruning flags only apply where the mode uses them: --no-pep needs max or
closed; --no-fhut and --no-hutmfi need max.
";

#[derive(Debug)]
pub enum CliError {
    /// Bad flags or invalid configuration (exit 4).
    Config(String),
    /// Input text did not parse (exit 2).
    Parse(ParseError),
    /// Reading or writing failed (exit 3).
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Io(_) => 3,
            CliError::Config(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Config(m) => write!(f, "{m}"),
            CliError::Parse(e) => write!(f, "{e}"),
            CliError::Io(m) => write!(f, "{m}"),
        }
    }
}

impl Error for CliError {}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum MinSup {
    Absolute(u32),
    Fraction(f64),
}

#[derive(Clone, Copy, Debug)]
pub enum WordWidth {
    W32,
    W64,
}

#[derive(Debug)]
pub struct MineArgs {
    pub mode: Mode,
    pub min_sup: MinSup,
    pub input: Option<String>,
    pub output: Option<String>,
    pub sorted: bool,
    pub buffer: usize,
    pub options: MineOptions,
}

#[derive(Debug)]
pub struct GenArgs {
    pub config: SynthConfig,
    pub output: Option<String>,
}

pub enum Command {
    Mine(MineArgs),
    Oracle(MineArgs),
    Gen(GenArgs),
    Bench(MineArgs, usize),
    Help,
}

pub fn word_width() -> Result<WordWidth, CliError> {
    match std::env::var("RAMP_WORD_WIDTH") {
        Ok(v) => match v.as_str() {
            "32" => Ok(WordWidth::W32),
            "64" => Ok(WordWidth::W64),
            other => Err(CliError::Config(format!(
                "RAMP_WORD_WIDTH must be 32 or 64, got {other:?}"
            ))),
        },
        Err(_) => Ok(WordWidth::W64),
    }
}

fn config_err<T>(msg: impl Into<String>) -> Result<T, CliError> {
    Err(CliError::Config(msg.into()))
}

fn parse_min_sup(s: &str) -> Result<MinSup, CliError> {
    if let Ok(abs) = s.parse::<u32>() {
        if abs == 0 {
            return config_err("--min-sup must be at least 1");
        }
        return Ok(MinSup::Absolute(abs));
    }
    if let Ok(f) = s.parse::<f64>() {
        if f.is_finite() && f > 0.0 && f <= 1.0 {
            return Ok(MinSup::Fraction(f));
        }
        return config_err(format!("fractional --min-sup must be in (0,1], got {s}"));
    }
    config_err(format!("cannot parse --min-sup value {s:?}"))
}

fn parse_mode(s: &str) -> Result<Mode, CliError> {
    match s {
        "all" => Ok(Mode::All),
        "max" => Ok(Mode::Max),
        "closed" => Ok(Mode::Closed),
        other => config_err(format!("--mode must be all, max or closed, got {other:?}")),
    }
}

struct Cursor<'a> {
    argv: &'a [String],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn next_flag(&mut self) -> Option<&'a str> {
        let s = self.argv.get(self.pos)?;
        self.pos += 1;
        Some(s)
    }

    fn value(&mut self, flag: &str) -> Result<&'a str, CliError> {
        match self.argv.get(self.pos) {
            Some(v) => {
                self.pos += 1;
                Ok(v)
            }
            None => config_err(format!("{flag} requires a value")),
        }
    }
}

fn parse_usize(flag: &str, v: &str, min: usize) -> Result<usize, CliError> {
    match v.parse::<usize>() {
        Ok(n) if n >= min => Ok(n),
        _ => config_err(format!("{flag} must be an integer >= {min}, got {v:?}")),
    }
}

fn parse_mine_args(cur: &mut Cursor, bench: bool) -> Result<(MineArgs, usize), CliError> {
    let mut mode = None;
    let mut min_sup = None;
    let mut input = None;
    let mut output = None;
    let mut sorted = false;
    let mut buffer = DEFAULT_FLUSH_THRESHOLD;
    let mut options = MineOptions::default();
    let mut runs = 5usize;
    let mut saw = Vec::new();

    while let Some(flag) = cur.next_flag() {
        match flag {
            "--mode" => mode = Some(parse_mode(cur.value(flag)?)?),
            "--min-sup" => min_sup = Some(parse_min_sup(cur.value(flag)?)?),
            "--input" => input = Some(cur.value(flag)?.to_string()),
            "--output" => output = Some(cur.value(flag)?.to_string()),
            "--sorted" => sorted = true,
            "--buffer" => buffer = parse_usize(flag, cur.value(flag)?, 1)?,
            "--no-pair-prune" => options.pair_prune = false,
            "--no-pep" => {
                options.pep = false;
                saw.push("--no-pep");
            }
            "--no-fhut" => {
                options.fhut = false;
                saw.push("--no-fhut");
            }
            "--no-hutmfi" => {
                options.hutmfi = false;
                saw.push("--no-hutmfi");
            }
            "--no-erfco" => options.erfco = false,
            "--projection" => {
                options.projection = match cur.value(flag)? {
                    "pbr" => Projection::Pbr,
                    "full" => Projection::FullScan,
                    other => {
                        return config_err(format!(
                            "--projection must be pbr or full, got {other:?}"
                        ))
                    }
                }
            }
            "--runs" if bench => runs = parse_usize(flag, cur.value(flag)?, 1)?,
            other => return config_err(format!("unknown flag {other:?} (see `ramp help`)")),
        }
    }

    let Some(mode) = mode else {
        return config_err("--mode is required");
    };
    let Some(min_sup) = min_sup else {
        return config_err("--min-sup is required");
    };

    for flag in saw {
        let valid = match flag {
            "--no-pep" => mode != Mode::All,
            "--no-fhut" | "--no-hutmfi" => mode == Mode::Max,
            _ => true,
        };
        if !valid {
            return config_err(format!("{flag} does not apply to this mode"));
        }
    }

    Ok((
        MineArgs {
            mode,
            min_sup,
            input,
            output,
            sorted,
            buffer,
            options,
        },
        runs,
    ))
}

fn parse_gen_args(cur: &mut Cursor) -> Result<GenArgs, CliError> {
    let mut transactions = None;
    let mut items = None;
    let mut avg_len = None;
    let mut patterns = None;
    let mut seed = 1u64;
    let mut output = None;

    while let Some(flag) = cur.next_flag() {
        match flag {
            "--transactions" => transactions = Some(parse_usize(flag, cur.value(flag)?, 1)?),
            "--items" => {
                let v = cur.value(flag)?;
                items = Some(match v.parse::<u32>() {
                    Ok(n) if n >= 1 => n,
                    _ => return config_err(format!("--items must be an integer >= 1, got {v:?}")),
                });
            }
            "--avg-len" => avg_len = Some(parse_usize(flag, cur.value(flag)?, 1)?),
            "--patterns" => patterns = Some(parse_usize(flag, cur.value(flag)?, 1)?),
            "--seed" => {
                let v = cur.value(flag)?;
                seed = v.parse::<u64>().map_err(|_| {
                    CliError::Config(format!("--seed must be an integer, got {v:?}"))
                })?;
            }
            "--output" => output = Some(cur.value(flag)?.to_string()),
            other => return config_err(format!("unknown flag {other:?} (see `ramp help`)")),
        }
    }

    let (Some(transactions), Some(items), Some(avg_len), Some(patterns)) =
        (transactions, items, avg_len, patterns)
    else {
        return config_err("gen requires --transactions, --items, --avg-len and --patterns");
    };
    if avg_len as u64 > items as u64 {
        return config_err("--avg-len must not exceed --items");
    }

    Ok(GenArgs {
        config: SynthConfig {
            transactions,
            items,
            avg_len,
            patterns,
            seed,
        },
        output,
    })
}

pub fn parse(argv: &[String]) -> Result<Command, CliError> {
    let Some(sub) = argv.first() else {
        return config_err(format!("missing subcommand\n{USAGE}"));
    };
    let mut cur = Cursor { argv, pos: 1 };
    match sub.as_str() {
        "mine" => Ok(Command::Mine(parse_mine_args(&mut cur, false)?.0)),
        "oracle" => {
            let (args, _) = parse_mine_args(&mut cur, false)?;
            Ok(Command::Oracle(args))
        }
        "gen" => Ok(Command::Gen(parse_gen_args(&mut cur)?)),
        "bench" => {
            let (args, runs) = parse_mine_args(&mut cur, true)?;
            Ok(Command::Bench(args, runs))
        }
        "help" | "--help" | "-h" => Ok(Command::Help),
        other => config_err(format!("unknown subcommand {other:?}\n{USAGE}")),
    }
}
