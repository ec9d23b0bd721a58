//! `ramp`: frequent itemset mining from the command line.
//!
//! Subcommands: `mine` (all/max/closed over a transaction file), `oracle`
//! (brute-force reference, small inputs), `gen` (synthetic data), `bench`
//! (repeated mine, median wall time). Run `ramp help` for the flag list.
//!
//! Exit codes: 0 success, 2 input parse error, 3 I/O error, 4 invalid
//! configuration.

mod args;

use std::fs::File;
use std::io::{self, BufReader, BufWriter, Read, Write};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use ramp::dataset::{parse_transactions, DatasetError, TransactionDatabase};
use ramp::index::build_root_index;
use ramp::miner::{mine_all, MineRun, Mode};
use ramp::oracle::{apriori_all, closed_filter, maximal_filter};
use ramp::output::{mine_to_bytes, render_lines, sort_itemsets, ItemsetWriter};
use ramp::synth::generate_text;
use ramp::words::Word;

use args::{CliError, Command, GenArgs, MinSup, MineArgs, WordWidth};

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    match run(&argv) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(argv: &[String]) -> Result<(), CliError> {
    match args::parse(argv)? {
        Command::Help => {
            print!("{}", args::USAGE);
            Ok(())
        }
        Command::Mine(a) => match args::word_width()? {
            WordWidth::W32 => mine_cmd::<u32>(&a),
            WordWidth::W64 => mine_cmd::<u64>(&a),
        },
        Command::Oracle(a) => oracle_cmd(&a),
        Command::Gen(a) => gen_cmd(&a),
        Command::Bench(a, runs) => match args::word_width()? {
            WordWidth::W32 => bench_cmd::<u32>(&a, runs),
            WordWidth::W64 => bench_cmd::<u64>(&a, runs),
        },
    }
}

fn read_database(input: Option<&str>) -> Result<TransactionDatabase, CliError> {
    let result = match input {
        Some(path) => {
            let file =
                File::open(path).map_err(|e| CliError::Io(format!("cannot open {path}: {e}")))?;
            parse_transactions(BufReader::new(file))
        }
        None => {
            let stdin = io::stdin();
            parse_transactions(stdin.lock())
        }
    };
    result.map_err(dataset_error)
}

fn dataset_error(e: DatasetError) -> CliError {
    match e {
        DatasetError::Parse(p) => CliError::Parse(p),
        DatasetError::Io(e) => CliError::Io(format!("read failed: {e}")),
    }
}

fn open_output(output: Option<&str>) -> Result<Box<dyn Write>, CliError> {
    match output {
        Some(path) => {
            let file = File::create(path)
                .map_err(|e| CliError::Io(format!("cannot create {path}: {e}")))?;
            Ok(Box::new(BufWriter::new(file)))
        }
        None => Ok(Box::new(io::stdout().lock())),
    }
}

fn absolute_min_sup(min_sup: &MinSup, n_transactions: usize) -> u32 {
    match *min_sup {
        MinSup::Absolute(a) => a,
        MinSup::Fraction(f) => ((f * n_transactions as f64).ceil() as u32).max(1),
    }
}

fn partial_output(e: io::Error, emitted: u64) -> CliError {
    CliError::Io(format!(
        "write failed after {emitted} itemsets (output may be partial): {e}"
    ))
}

fn mine_cmd<W: Word>(a: &MineArgs) -> Result<(), CliError> {
    let started = Instant::now();
    let db = read_database(a.input.as_deref())?;
    let min_sup = absolute_min_sup(&a.min_sup, db.len());
    let root = build_root_index::<W>(&db, min_sup);
    let sink = open_output(a.output.as_deref())?;

    let run = if a.mode == Mode::All && !a.sorted {
        // stream straight through the batched writer
        let mut writer = ItemsetWriter::new(sink, a.buffer);
        let run = mine_all(&root, min_sup, &a.options, &mut writer)
            .map_err(|e| partial_output(e, writer.emitted()))?;
        writer
            .finish()
            .map_err(|e| partial_output(e, writer.emitted()))?;
        run
    } else {
        let (bytes, run) = mine_to_bytes(&root, min_sup, a.mode, &a.options, a.sorted);
        let mut sink = sink;
        sink.write_all(&bytes)
            .and_then(|_| sink.flush())
            .map_err(|e| partial_output(e, run.count))?;
        run
    };

    print_summary::<W>(run.count, started.elapsed(), &run);
    Ok(())
}

fn print_summary<W: Word>(count: u64, elapsed: Duration, run: &MineRun) {
    eprintln!("{} itemsets in {:.3} s", count, elapsed.as_secs_f64());
    eprintln!(
        "width {} | {} counting ops | {} subsumption ops | {} nodes",
        W::BITS,
        run.stats.and_ops,
        run.stats.subsume_ops,
        run.stats.nodes
    );
}

fn oracle_cmd(a: &MineArgs) -> Result<(), CliError> {
    let started = Instant::now();
    let db = read_database(a.input.as_deref())?;
    let min_sup = absolute_min_sup(&a.min_sup, db.len());
    let fi = apriori_all(&db, min_sup);
    let mut results: Vec<(Vec<u32>, u32)> = match a.mode {
        Mode::All => fi.iter().map(|(k, &v)| (k.clone(), v)).collect(),
        Mode::Max => maximal_filter(&fi),
        Mode::Closed => closed_filter(&fi),
    };
    if a.sorted {
        sort_itemsets(&mut results);
    }
    let bytes = render_lines(&results);
    let mut sink = open_output(a.output.as_deref())?;
    sink.write_all(&bytes)
        .and_then(|_| sink.flush())
        .map_err(|e| partial_output(e, results.len() as u64))?;
    eprintln!(
        "{} itemsets in {:.3} s (oracle)",
        results.len(),
        started.elapsed().as_secs_f64()
    );
    Ok(())
}

fn gen_cmd(a: &GenArgs) -> Result<(), CliError> {
    let text = generate_text(&a.config);
    let mut sink = open_output(a.output.as_deref())?;
    sink.write_all(text.as_bytes())
        .and_then(|_| sink.flush())
        .map_err(|e| CliError::Io(format!("write failed: {e}")))?;
    eprintln!("generated {} transactions", a.config.transactions);
    Ok(())
}

fn bench_cmd<W: Word>(a: &MineArgs, runs: usize) -> Result<(), CliError> {
    // read the input once; each run re-parses from memory so the timing
    // covers the full parse → index → mine pipeline
    let mut raw = Vec::new();
    match a.input.as_deref() {
        Some(path) => {
            File::open(path)
                .and_then(|mut f| f.read_to_end(&mut raw))
                .map_err(|e| CliError::Io(format!("cannot read {path}: {e}")))?;
        }
        None => {
            io::stdin()
                .lock()
                .read_to_end(&mut raw)
                .map_err(|e| CliError::Io(format!("read failed: {e}")))?;
        }
    }

    let mut times: Vec<Duration> = Vec::with_capacity(runs);
    let mut count = 0u64;
    for _ in 0..runs {
        let started = Instant::now();
        let db = parse_transactions(&raw[..]).map_err(dataset_error)?;
        let min_sup = absolute_min_sup(&a.min_sup, db.len());
        let root = build_root_index::<W>(&db, min_sup);
        let run = if a.mode == Mode::All && !a.sorted {
            let mut writer = ItemsetWriter::new(io::sink(), a.buffer);
            let run = mine_all(&root, min_sup, &a.options, &mut writer)
                .map_err(|e| CliError::Io(format!("write failed: {e}")))?;
            writer
                .finish()
                .map_err(|e| CliError::Io(format!("write failed: {e}")))?;
            run
        } else {
            let (bytes, run) = mine_to_bytes(&root, min_sup, a.mode, &a.options, a.sorted);
            io::sink()
                .write_all(&bytes)
                .map_err(|e| CliError::Io(format!("write failed: {e}")))?;
            run
        };
        count = run.count;
        times.push(started.elapsed());
    }

    times.sort();
    let median = times[times.len() / 2];
    let min = times.first().copied().unwrap_or_default();
    let max = times.last().copied().unwrap_or_default();
    println!(
        "median {:.3} s over {} runs (min {:.3} s, max {:.3} s, {} itemsets)",
        median.as_secs_f64(),
        runs,
        min.as_secs_f64(),
        max.as_secs_f64(),
        count
    );
    Ok(())
}
