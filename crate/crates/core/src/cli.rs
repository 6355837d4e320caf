//! Command-line front end. Exit codes: 0 success, 1 failed check,
//! 2 usage or input error.

use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};

use crate::chow::{closed_form_error, BlockShape, ChowOracle, Variant};
use crate::error::{Error, Result};
use crate::io::{
    cache_load, cache_save, format_table, format_value, parse_tau_word, CacheRecord, TableFormat,
};
use crate::recursion::Engine;
use crate::symbol::{tau_to_symbol, IntersectionSymbol};
use crate::verify::{crosscheck, lemma_suites, oracle_suite, path_suites, SuiteReport};
use crate::BigRational;

#[derive(Parser, Debug)]
#[command(
    name = "mstable-psi",
    version,
    about = "Exact psi-class intersection numbers on m-stable genus-one moduli spaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate one intersection number.
    Compute(ComputeArgs),
    /// Print the reference table for m < n <= max-n.
    Table(TableArgs),
    /// Run the consistency suites.
    Verify(VerifyArgs),
    /// Evaluate every symbol with n points at level m along every route.
    Crosscheck(CrosscheckArgs),
    /// Compare the symbolic error-term degree with its closed form.
    Oracle(OracleArgs),
}

#[derive(Args, Debug)]
struct ComputeArgs {
    #[arg(long)]
    m: usize,
    /// Tau word such as "t0^2 t1 t3".
    #[arg(long, conflicts_with = "d", required_unless_present = "d")]
    tau: Option<String>,
    /// Comma-separated exponents.
    #[arg(long, value_delimiter = ',')]
    d: Option<Vec<usize>>,
    #[arg(long)]
    cache: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[arg(long)]
    max_n: usize,
    /// Multiply every value by 24.
    #[arg(long)]
    scale24: bool,
    #[arg(long, default_value = "tsv", value_parser = TableFormat::from_str)]
    format: TableFormat,
    #[arg(long)]
    cache: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long)]
    lemmas: bool,
    #[arg(long)]
    oracle: bool,
    #[arg(long)]
    paths: bool,
    /// Largest n for the path suites.
    #[arg(long, default_value_t = 7)]
    max_n: usize,
}

#[derive(Args, Debug)]
struct CrosscheckArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: usize,
}

#[derive(Args, Debug)]
struct OracleArgs {
    #[arg(long, value_parser = Variant::from_str)]
    variant: Variant,
    /// Comma-separated block sizes, each at least 2.
    #[arg(long, value_delimiter = ',')]
    blocks: Vec<usize>,
    /// Exponents per block: ',' within a block, ';' between blocks.
    #[arg(long)]
    block_d: String,
    #[arg(long)]
    m: usize,
    /// Exponent mass on the singleton points.
    #[arg(long)]
    d: usize,
    /// Value of the top intersection at level m, as P/Q; defaults to m!/24.
    #[arg(long)]
    c0: Option<String>,
}

/// Parses `argv` (including the program name), runs the command and returns
/// the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e @ Error::Verification(_)) => {
            eprintln!("error: {e}");
            1
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn dispatch(command: Command) -> Result<bool> {
    match command {
        Command::Compute(a) => compute(a),
        Command::Table(a) => table(a),
        Command::Verify(a) => verify(a),
        Command::Crosscheck(a) => run_crosscheck(a),
        Command::Oracle(a) => oracle(a),
    }
}

fn engine_with_cache(path: Option<&Path>) -> Result<Engine> {
    let engine = Engine::new();
    if let Some(path) = path.filter(|p| p.exists()) {
        let records = cache_load(path)?;
        let seeded = records
            .into_iter()
            .map(|r| Ok((r.symbol()?, r.value)))
            .collect::<Result<Vec<_>>>()?;
        engine.seed(seeded);
    }
    Ok(engine)
}

fn save_cache(engine: &Engine, path: Option<&Path>) -> Result<()> {
    if let Some(path) = path {
        let records: Vec<CacheRecord> = engine
            .memo()
            .snapshot()
            .into_iter()
            .map(|(sym, v)| CacheRecord::new(&sym, v))
            .collect();
        cache_save(path, &records)?;
    }
    Ok(())
}

fn compute(a: ComputeArgs) -> Result<bool> {
    let sym = match (&a.tau, &a.d) {
        (Some(word), _) => tau_to_symbol(&parse_tau_word(word)?, a.m)?,
        (None, Some(d)) => IntersectionSymbol::new(d, a.m)?,
        (None, None) => {
            return Err(Error::InvalidArgument(
                "one of --tau or --d is required".into(),
            ))
        }
    };
    let engine = engine_with_cache(a.cache.as_deref())?;
    let value = engine.value(&sym)?;
    println!("symbol = {sym}");
    println!("value = {}/{}", value.numer(), value.denom());
    println!("scaled24 = {}", format_value(&value, true));
    save_cache(&engine, a.cache.as_deref())?;
    Ok(true)
}

fn table(a: TableArgs) -> Result<bool> {
    let engine = engine_with_cache(a.cache.as_deref())?;
    print!("{}", format_table(&engine, a.max_n, a.scale24, a.format)?);
    save_cache(&engine, a.cache.as_deref())?;
    Ok(true)
}

fn verify(a: VerifyArgs) -> Result<bool> {
    let all = !(a.lemmas || a.oracle || a.paths);
    let mut reports: Vec<SuiteReport> = Vec::new();
    if all || a.lemmas {
        reports.extend(lemma_suites());
    }
    if all || a.oracle {
        reports.push(oracle_suite(3, 7, 5)?);
    }
    if all || a.paths {
        reports.extend(path_suites(&Engine::new(), a.max_n)?);
    }
    for r in &reports {
        println!("{r}");
    }
    Ok(reports.iter().all(SuiteReport::passed))
}

fn run_crosscheck(a: CrosscheckArgs) -> Result<bool> {
    let engine = Engine::new();
    let rows = crosscheck(&engine, a.n, a.m)?;
    let mut ok = true;
    for row in &rows {
        let values: Vec<String> = row
            .routes
            .iter()
            .map(|(s, v)| format!("{s:?}={v}"))
            .collect();
        let status = if row.agrees() { "ok" } else { "MISMATCH" };
        println!("{}\t{}\t{status}", row.symbol, values.join("\t"));
        ok &= row.agrees();
    }
    Ok(ok)
}

fn parse_rational(text: &str) -> Result<BigRational> {
    BigRational::from_str(text.trim())
        .map_err(|_| Error::InvalidArgument(format!("bad rational {text:?}, expected P/Q")))
}

fn parse_block_exponents(text: &str) -> Result<Vec<Vec<usize>>> {
    text.split(';')
        .map(|block| {
            block
                .split(',')
                .map(|x| {
                    x.trim().parse::<usize>().map_err(|_| {
                        Error::InvalidArgument(format!("bad exponent {x:?} in --block-d"))
                    })
                })
                .collect()
        })
        .collect()
}

fn oracle(a: OracleArgs) -> Result<bool> {
    let exps = parse_block_exponents(&a.block_d)?;
    let sizes: Vec<usize> = exps.iter().map(Vec::len).collect();
    if sizes != a.blocks {
        return Err(Error::InvalidArgument(format!(
            "--blocks {:?} does not match the block lengths {sizes:?} of --block-d",
            a.blocks
        )));
    }
    let c0 = match &a.c0 {
        Some(text) => parse_rational(text)?,
        None => crate::recursion::initial_condition(a.m),
    };
    let shape = BlockShape::new(a.m, exps, c0)?;
    let n = shape.check(a.variant, a.d)?;
    let symbolic = ChowOracle::new().deg_z(a.variant, &shape, a.d)?;
    let closed = closed_form_error(a.variant, &shape, a.d)?;
    println!("n = {n}");
    println!("deg_Z = {symbolic}");
    println!("closed_form = {closed}");
    let ok = symbolic == closed;
    println!("{}", if ok { "agree" } else { "DIFFER" });
    Ok(ok)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn block_exponent_syntax() {
        assert_eq!(
            parse_block_exponents("1,0;0,0,2").unwrap(),
            vec![vec![1, 0], vec![0, 0, 2]]
        );
        assert!(parse_block_exponents("1,x").is_err());
        assert_eq!(
            parse_rational("-1/24").unwrap(),
            BigRational::new((-1).into(), 24.into())
        );
        assert!(parse_rational("1/0").is_err() || parse_rational("abc").is_err());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(
            run(["mstable-psi", "compute", "--m", "0", "--tau", "t1"]),
            0
        );
        assert_eq!(
            run(["mstable-psi", "compute", "--m", "0", "--tau", "t-1"]),
            2
        );
        assert_eq!(run(["mstable-psi", "compute", "--m", "3", "--d", "2,1"]), 2);
        assert_eq!(run(["mstable-psi", "bogus"]), 2);
        assert_eq!(run(["mstable-psi", "--help"]), 0);
    }
}
