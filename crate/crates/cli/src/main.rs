use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use lfsr_cycles::oracle::brute_partition;
use lfsr_cycles::parse::{parse_poly, parse_state, render_state};
use lfsr_cycles::structure::{build_p, enumerate_cycles, same_cycle, CycleStructure, SameCycle};
use lfsr_cycles::{Error, Field, Options, Poly};

/// Cycle structure of linear feedback shift registers over finite fields.
#[derive(Parser, Debug)]
#[command(name = "lfsr-cycles", version)]
struct Cli {
    /// Field characteristic.
    #[arg(long, global = true, default_value_t = 2)]
    p: u64,
    /// Extension degree.
    #[arg(long, global = true, default_value_t = 1)]
    m: usize,
    /// Defining polynomial of GF(p^m) over GF(p), e.g. "x^2+x+1".
    #[arg(long, global = true)]
    modulus: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Largest state space walked by the exhaustive checker.
    #[arg(long, global = true, default_value_t = 1 << 22, value_parser = clap::value_parser!(u64).range(1..))]
    oracle_cap: u64,
    /// Largest trial divisor used when factoring integers.
    #[arg(long, global = true, default_value_t = lfsr_cycles::arith::DEFAULT_FACTOR_CAP, value_parser = clap::value_parser!(u64).range(1..))]
    factor_cap: u64,
    /// Seed for randomized polynomial factorization.
    #[arg(long, global = true, default_value_t = lfsr_cycles::poly::DEFAULT_FACTOR_SEED)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Records,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Factor f into monic irreducibles.
    Factor { f: String },
    /// Per-factor data followed by every cycle of the register.
    Analyze { f: String },
    /// One representative state per cycle.
    States { f: String },
    /// Decide whether two states lie on one cycle.
    SameCycle { f: String, v1: String, v2: String },
    /// Compare the enumeration with an exhaustive walk.
    OracleCheck { f: String },
}

fn field(cli: &Cli) -> Result<Field, Error> {
    let modulus = match &cli.modulus {
        None => None,
        Some(text) => {
            let prime = Field::prime(cli.p)?;
            let g = parse_poly(text, &prime)?;
            Some(g.coeffs().iter().map(|c| c.index()).collect::<Vec<u64>>())
        }
    };
    Field::new(cli.p, cli.m, modulus.as_deref())
}

fn register_poly(text: &str, f: &Field) -> Result<Poly, Error> {
    let g = parse_poly(text, f)?;
    if g.degree().is_none_or(|d| d == 0) {
        return Err(Error::Domain("f must have degree at least 1".into()));
    }
    if !g.is_monic(f) {
        return Err(Error::Domain("f must be monic".into()));
    }
    if g.coeff(0).is_zero() {
        return Err(Error::Domain("f(0) = 0 is not supported".into()));
    }
    Ok(g)
}

fn join<T: ToString>(xs: impl IntoIterator<Item = T>) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn cycle_lines(cs: &CycleStructure, f: &Field, format: Format, out: &mut String) {
    for (i, c) in cs.classes.iter().enumerate() {
        let state = render_state(c.key_state(), f);
        match format {
            Format::Records => {
                let _ = writeln!(out, "cycle {i} exps={} period={} state={state}", join(&c.factor_exponents), c.period);
            }
            Format::Table => {
                let _ = writeln!(out, "{i:>6}  {:<10} {:>12}  {state}", join(&c.factor_exponents), c.period);
            }
        }
    }
}

fn analyze(cs: &CycleStructure, f: &Field, format: Format) -> String {
    let mut out = String::new();
    if format == Format::Table {
        let _ = writeln!(out, "{:<24} {:>3} {:>3} {:>12} {:>8} {:>8}", "factor", "b", "n", "e", "t", "cycles");
    }
    for pp in &cs.per_factor {
        let info = &pp.info;
        let g = info.g.render(f);
        match format {
            Format::Table => {
                let _ = writeln!(out, "{g:<24} {:>3} {:>3} {:>12} {:>8} {:>8}", pp.b, info.n, info.e, info.t, pp.nonzero_count());
            }
            Format::Records => {
                let _ = writeln!(out, "factor g={g} b={} n={} e={} t={} sigma={}", pp.b, info.n, info.e, info.t, pp.nonzero_count());
            }
        }
    }
    if format == Format::Table {
        let _ = writeln!(out, "\n{:>6}  {:<10} {:>12}  state", "cycle", "exps", "period");
    }
    cycle_lines(cs, f, format, &mut out);
    let n = cs.f.deg() as u32;
    let expected = (f.q() as u128).checked_pow(n);
    let total = cs.total_states();
    let ok = expected == Some(total);
    match format {
        Format::Table => {
            let _ = writeln!(out, "\ncycles: {}  states: {total}  q^n check: {}", cs.classes.len(), if ok { "ok" } else { "MISMATCH" });
        }
        Format::Records => {
            let _ = writeln!(out, "total cycles={} states={total} check={}", cs.classes.len(), if ok { "ok" } else { "mismatch" });
        }
    }
    out
}

fn run(cli: &Cli) -> Result<String, Error> {
    let f = field(cli)?;
    let opts = Options { factor_cap: cli.factor_cap, seed: cli.seed, oracle_cap: cli.oracle_cap, ..Options::default() };
    let mut out = String::new();
    match &cli.command {
        Command::Factor { f: text } => {
            let g = register_poly(text, &f)?;
            let fac = g.factorize_with_seed(&f, cli.seed)?;
            for (h, b) in &fac.factors {
                match cli.format {
                    Format::Table => {
                        let _ = writeln!(out, "({})^{b}", h.render(&f));
                    }
                    Format::Records => {
                        let _ = writeln!(out, "factor g={} b={b}", h.render(&f));
                    }
                }
            }
        }
        Command::Analyze { f: text } => {
            let g = register_poly(text, &f)?;
            out = analyze(&enumerate_cycles(&g, &f, &opts)?, &f, cli.format);
        }
        Command::States { f: text } => {
            let g = register_poly(text, &f)?;
            let cs = enumerate_cycles(&g, &f, &opts)?;
            match cli.format {
                Format::Table => {
                    for c in &cs.classes {
                        let _ = writeln!(out, "{}", render_state(c.key_state(), &f));
                    }
                }
                Format::Records => cycle_lines(&cs, &f, cli.format, &mut out),
            }
        }
        Command::SameCycle { f: text, v1, v2 } => {
            let g = register_poly(text, &f)?;
            let (a, b) = (parse_state(v1, &f)?, parse_state(v2, &f)?);
            if a.len() != g.deg() || b.len() != g.deg() {
                return Err(Error::Domain(format!("states must have {} entries", g.deg())));
            }
            let p = build_p(&g.factorize_with_seed(&f, cli.seed)?, &f)?;
            match same_cycle(&p, &a, &b, &f)? {
                SameCycle::Yes { shift, .. } => {
                    let _ = writeln!(out, "YES ℓ={shift}");
                }
                SameCycle::No => out.push_str("NO\n"),
            }
        }
        Command::OracleCheck { f: text } => {
            let g = register_poly(text, &f)?;
            let brute = brute_partition(&g, &f, cli.oracle_cap)?;
            let cs = enumerate_cycles(&g, &f, &Options { canonical_cap: cli.oracle_cap, ..opts })?;
            let mut ours: Vec<(u64, Vec<_>)> = cs
                .classes
                .iter()
                .map(|c| (c.period, c.key_state().clone()))
                .collect();
            ours.sort_by(|x, y| x.1.cmp(&y.1));
            let verdict = if ours == brute.cycles { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "{verdict} cycles={} states={}", brute.cycles.len(), brute.visited_count);
            if verdict == "FAIL" {
                return Err(Error::Internal(out));
            }
        }
    }
    Ok(out)
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } => 2,
        Error::ResourceCap(_) => 4,
        Error::Internal(_) => 1,
        _ => 3,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            if let Error::ResourceCap(_) = e {
                eprintln!("hint: raise --oracle-cap or --factor-cap, or pick a smaller polynomial");
            }
            ExitCode::from(exit_code(&e))
        }
    }
}
