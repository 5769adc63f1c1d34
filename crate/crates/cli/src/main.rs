//! Command-line front end: signatures, channel corruption, component-code
//! membership and decoding, codebook builds and scans, end-to-end decoding,
//! disjointness verification, and rate reports.
//!
//! Exit codes: 0 success, 1 decode/verify failure, 2 usage or parameter
//! error. Payload goes to stdout, diagnostics to stderr; `--json` output
//! streams carry no prose. The only nondeterminism knob is `--seed`, which is
//! always echoed; output is identical for any `--threads` value.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use ctcodes::alphabet::{Alphabet, Word};
use ctcodes::analysis::{capacity_noisy, rates_table, render_rates_text};
use ctcodes::channel::{
    apply_trace, enumerate_ct_descendants, enumerate_noisy_descendants, sample_noisy_trace,
    DEFAULT_CONE_CAP,
};
use ctcodes::codes::{
    burst_decode_insertion, compsub_decode, qvt_decode_insertion, svt_decode_deletion,
    svt_decode_insertion, BurstParams, CompSubParams, QvtParams, SvtParams,
};
use ctcodes::error::Error;
use ctcodes::final_code::{
    decode, scan_best_params, verify_disjoint_cones, CodeParams, Codebook, FinalParams,
    DEFAULT_ENUMERATION_CAP,
};
use ctcodes::signature::{compute_signature, count_irr};

#[derive(Parser)]
#[command(name = "ctcodes", version, about = "Codes for noisy DNA-storage insertion channels")]
struct Cli {
    /// Worker threads for scans and verification (output is identical for any value)
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Signature computation and irreducible-word counting
    Sig {
        #[command(subcommand)]
        command: SigCommand,
    },
    /// Corrupt words and enumerate descendant cones
    Channel {
        #[command(subcommand)]
        command: ChannelCommand,
    },
    /// Component-code membership tests and decoders
    Code {
        #[command(subcommand)]
        command: CodeCommand,
    },
    /// Build or scan codebooks
    Codebook {
        #[command(subcommand)]
        command: CodebookCommand,
    },
    /// Decode a noisy-channel output back to its codeword
    Decode(DecodeArgs),
    /// Verification reports
    Verify {
        #[command(subcommand)]
        command: VerifyCommand,
    },
    /// Rate and bound reports
    Report {
        #[command(subcommand)]
        command: ReportCommand,
    },
}

#[derive(Subcommand)]
enum SigCommand {
    /// Print the signature word and its block lengths
    Compute {
        word: String,
        #[arg(long)]
        q: u16,
    },
    /// Print the exact number of irreducible words of length n
    Count {
        #[arg(long)]
        q: u16,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand)]
enum ChannelCommand {
    /// Sample a corruption trace and print it with the corrupted word
    Corrupt {
        word: String,
        #[arg(long)]
        q: u16,
        /// Number of complement/tandem insertions
        #[arg(long, default_value_t = 0)]
        ct: usize,
        /// 1 to add one random insertion, 0 otherwise
        #[arg(long, default_value_t = 0)]
        random: u8,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Enumerate the bounded descendant cone of a word
    Cone {
        word: String,
        #[arg(long)]
        q: u16,
        #[arg(long)]
        budget: usize,
        /// Include up to one random insertion
        #[arg(long)]
        noisy: bool,
        /// Print the cone words, not only the size
        #[arg(long)]
        words: bool,
        #[arg(long, default_value_t = DEFAULT_CONE_CAP)]
        cap: usize,
    },
}

#[derive(Args)]
struct FamilyParams {
    #[arg(long)]
    q: u16,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    a: Option<u64>,
    #[arg(long)]
    b: Option<u64>,
    #[arg(long)]
    c: Option<u64>,
    #[arg(long)]
    d: Option<u64>,
    #[arg(long)]
    h: Option<u64>,
    #[arg(long)]
    w: Option<u64>,
    #[arg(long)]
    e: Option<u64>,
    #[arg(long)]
    f: Option<u64>,
    #[arg(long)]
    g: Option<u64>,
    /// Window width P (svt family only)
    #[arg(long)]
    p: Option<usize>,
}

impl FamilyParams {
    fn require(&self, name: &str, value: Option<u64>) -> Result<u64, CliError> {
        value.ok_or_else(|| CliError::Usage(format!("missing required parameter --{name}")))
    }

    fn build(&self, family: &str) -> Result<CodeParams, CliError> {
        let alphabet = Alphabet::new(self.q).map_err(usage)?;
        let params = match family {
            "compsub" => CodeParams::CompSub(
                CompSubParams::new(
                    alphabet,
                    self.n,
                    self.require("a", self.a)?,
                    self.require("b", self.b)?,
                )
                .map_err(usage)?,
            ),
            "qvt" => CodeParams::Qvt(
                QvtParams::new(
                    alphabet,
                    self.n,
                    self.require("c", self.c)?,
                    self.require("d", self.d)?,
                )
                .map_err(usage)?,
            ),
            "svt" => {
                let window = self
                    .p
                    .ok_or_else(|| CliError::Usage("missing required parameter --p".into()))?;
                CodeParams::Svt(
                    SvtParams::new(
                        alphabet,
                        self.n,
                        window,
                        self.require("e", self.e)?,
                        self.require("f", self.f)?,
                        self.require("g", self.g)?,
                    )
                    .map_err(usage)?,
                )
            }
            "burst" => CodeParams::Burst(
                BurstParams::new(
                    alphabet,
                    self.n,
                    self.require("h", self.h)?,
                    self.require("w", self.w)?,
                    self.require("e", self.e)?,
                    self.require("f", self.f)?,
                    self.require("g", self.g)?,
                )
                .map_err(usage)?,
            ),
            "final" => CodeParams::Final(
                FinalParams::new(
                    alphabet,
                    self.n,
                    self.require("a", self.a)?,
                    self.require("b", self.b)?,
                    self.require("d", self.d)?,
                    self.require("h", self.h)?,
                    self.require("w", self.w)?,
                    self.require("e", self.e)?,
                    self.require("f", self.f)?,
                    self.require("g", self.g)?,
                )
                .map_err(usage)?,
            ),
            other => {
                return Err(CliError::Usage(format!(
                    "unknown family {other:?}; expected compsub|qvt|svt|burst|final"
                )))
            }
        };
        Ok(params)
    }
}

#[derive(Subcommand)]
enum CodeCommand {
    /// Test membership of a word in a component code
    Member {
        word: String,
        #[arg(long)]
        family: String,
        #[command(flatten)]
        params: FamilyParams,
    },
    /// Decode a corrupted word with a component-code decoder
    Decode {
        word: String,
        #[arg(long)]
        family: String,
        #[command(flatten)]
        params: FamilyParams,
        /// 1-based window start for the svt decoder
        #[arg(long)]
        window: Option<usize>,
    },
}

#[derive(Subcommand)]
enum CodebookCommand {
    /// Enumerate a codebook and write it to a file or stdout
    Build {
        #[arg(long, default_value = "final")]
        family: String,
        #[command(flatten)]
        params: FamilyParams,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: u64,
    },
    /// Scan all parameter tuples for the largest final code
    Scan {
        #[arg(long)]
        q: u16,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: u64,
    },
}

#[derive(Args)]
struct DecodeArgs {
    word: String,
    /// Read the code parameters from a codebook file
    #[arg(long)]
    codebook: Option<PathBuf>,
    #[arg(long)]
    q: Option<u16>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    a: Option<u64>,
    #[arg(long)]
    b: Option<u64>,
    #[arg(long)]
    d: Option<u64>,
    #[arg(long)]
    h: Option<u64>,
    #[arg(long)]
    w: Option<u64>,
    #[arg(long)]
    e: Option<u64>,
    #[arg(long)]
    f: Option<u64>,
    #[arg(long)]
    g: Option<u64>,
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Pairwise disjointness of bounded noisy descendant cones
    Disjoint {
        #[arg(long)]
        codebook: PathBuf,
        #[arg(long)]
        budget: usize,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_CONE_CAP)]
        cap: usize,
    },
}

#[derive(Subcommand)]
enum ReportCommand {
    /// Best-code sizes, rates, capacity, and bounds for a list of lengths
    Rates {
        #[arg(long)]
        q: u16,
        /// Comma-separated list of code lengths, e.g. 4,6,8
        #[arg(long)]
        n: String,
        /// Write the report as JSON to this file
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: u64,
    },
}

enum CliError {
    /// Decode or verification failure: exit 1.
    Failure(String),
    /// Usage, parameter, parse, or environment error: exit 2.
    Usage(String),
}

/// Decode and verification failures exit 1; everything else is a usage or
/// environment problem and exits 2.
fn core(e: Error) -> CliError {
    match e {
        Error::NoCandidate
        | Error::AmbiguousCandidates { .. }
        | Error::NotAChannelOutput { .. }
        | Error::Uncorrectable
        | Error::NotComplementarySubstitution
        | Error::NotACodeword => CliError::Failure(e.to_string()),
        other => CliError::Usage(other.to_string()),
    }
}

fn usage(e: Error) -> CliError {
    CliError::Usage(e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            eprintln!("error: cannot configure {threads} threads: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn parse_word(q: u16, text: &str) -> Result<Word, CliError> {
    let alphabet = Alphabet::new(q).map_err(usage)?;
    Word::parse(alphabet, text).map_err(usage)
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Sig { command } => run_sig(command),
        Command::Channel { command } => run_channel(command),
        Command::Code { command } => run_code(command),
        Command::Codebook { command } => run_codebook(command),
        Command::Decode(args) => run_decode(args),
        Command::Verify { command } => run_verify(command),
        Command::Report { command } => run_report(command),
    }
}

fn run_sig(command: SigCommand) -> Result<(), CliError> {
    match command {
        SigCommand::Compute { word, q } => {
            let word = parse_word(q, &word)?;
            let sig = compute_signature(&word);
            println!("{}", sig.word());
            let lengths: Vec<String> =
                sig.block_lengths().iter().map(|l| l.to_string()).collect();
            println!("{}", lengths.join(" "));
        }
        SigCommand::Count { q, n } => {
            let alphabet = Alphabet::new(q).map_err(usage)?;
            println!("{}", count_irr(alphabet, n));
        }
    }
    Ok(())
}

fn run_channel(command: ChannelCommand) -> Result<(), CliError> {
    match command {
        ChannelCommand::Corrupt {
            word,
            q,
            ct,
            random,
            seed,
        } => {
            if random > 1 {
                return Err(CliError::Usage("--random takes 0 or 1".into()));
            }
            let word = parse_word(q, &word)?;
            let trace = sample_noisy_trace(&word, ct, random == 1, seed);
            let corrupted = apply_trace(&word, &trace).map_err(core)?;
            println!("seed {seed}");
            for event in &trace.events {
                match event.symbol {
                    Some(s) => println!("{} {} {}", event.kind.name(), event.position, s),
                    None => println!("{} {}", event.kind.name(), event.position),
                }
            }
            println!("{corrupted}");
        }
        ChannelCommand::Cone {
            word,
            q,
            budget,
            noisy,
            words,
            cap,
        } => {
            let word = parse_word(q, &word)?;
            let cone = if noisy {
                enumerate_noisy_descendants(&word, budget, cap).map_err(core)?
            } else {
                enumerate_ct_descendants(&word, budget, cap).map_err(core)?
            };
            println!("size {}", cone.len());
            if words {
                for w in &cone {
                    println!("{w}");
                }
            }
        }
    }
    Ok(())
}

fn run_code(command: CodeCommand) -> Result<(), CliError> {
    match command {
        CodeCommand::Member {
            word,
            family,
            params,
        } => {
            let code = params.build(&family)?;
            let word = parse_word(params.q, &word)?;
            let member = code.member(&word).map_err(core)?;
            println!("{member}");
        }
        CodeCommand::Decode {
            word,
            family,
            params,
            window,
        } => {
            let code = params.build(&family)?;
            let word = parse_word(params.q, &word)?;
            let decoded = match code {
                CodeParams::CompSub(p) => compsub_decode(&word, &p).map_err(core)?,
                CodeParams::Qvt(p) => qvt_decode_insertion(&word, &p).map_err(core)?,
                CodeParams::Svt(p) => {
                    let start = window.ok_or_else(|| {
                        CliError::Usage("svt decoding needs --window (1-based start)".into())
                    })?;
                    if word.len() + 1 == p.n() {
                        svt_decode_deletion(&word, &p, start).map_err(core)?
                    } else {
                        svt_decode_insertion(&word, &p, start).map_err(core)?
                    }
                }
                CodeParams::Burst(p) => burst_decode_insertion(&word, &p).map_err(core)?,
                CodeParams::Final(p) => decode(&word, &p).map_err(core)?,
            };
            println!("{decoded}");
        }
    }
    Ok(())
}

fn write_or_print(text: &str, out: Option<PathBuf>) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(&path, text)
            .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run_codebook(command: CodebookCommand) -> Result<(), CliError> {
    match command {
        CodebookCommand::Build {
            family,
            params,
            out,
            cap,
        } => {
            let code = params.build(&family)?;
            let cb = Codebook::build(code, cap).map_err(core)?;
            eprintln!("{} codewords", cb.len());
            write_or_print(&cb.to_file_string(), out)
        }
        CodebookCommand::Scan { q, n, out, cap } => {
            let alphabet = Alphabet::new(q).map_err(usage)?;
            let (best, size) = scan_best_params(alphabet, n, cap).map_err(core)?;
            let [a, b, d, h, w, e, f, g] = best.residues();
            println!(
                "q={q} n={n} size={size} a={a} b={b} d={d} h={h} w={w} e={e} f={f} g={g} T={} P={}",
                best.rll_threshold(),
                best.window()
            );
            if out.is_some() {
                let cb = Codebook::build(CodeParams::Final(best), cap).map_err(core)?;
                write_or_print(&cb.to_file_string(), out)?;
            }
            Ok(())
        }
    }
}

fn run_decode(args: DecodeArgs) -> Result<(), CliError> {
    let params = if let Some(path) = &args.codebook {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
        let cb = Codebook::from_file_str(&text).map_err(usage)?;
        match cb.params() {
            CodeParams::Final(p) => *p,
            other => {
                return Err(CliError::Usage(format!(
                    "decode needs a final-family codebook, found {}",
                    other.family_name()
                )))
            }
        }
    } else {
        let need = |name: &str, v: Option<u64>| {
            v.ok_or_else(|| CliError::Usage(format!("missing --{name} (or use --codebook)")))
        };
        let q = args
            .q
            .ok_or_else(|| CliError::Usage("missing --q (or use --codebook)".into()))?;
        let n = args
            .n
            .ok_or_else(|| CliError::Usage("missing --n (or use --codebook)".into()))?;
        let alphabet = Alphabet::new(q).map_err(usage)?;
        FinalParams::new(
            alphabet,
            n,
            need("a", args.a)?,
            need("b", args.b)?,
            need("d", args.d)?,
            need("h", args.h)?,
            need("w", args.w)?,
            need("e", args.e)?,
            need("f", args.f)?,
            need("g", args.g)?,
        )
        .map_err(usage)?
    };
    let word = Word::parse(params.alphabet(), &args.word).map_err(usage)?;
    let decoded = decode(&word, &params).map_err(core)?;
    println!("{decoded}");
    Ok(())
}

fn run_verify(command: VerifyCommand) -> Result<(), CliError> {
    match command {
        VerifyCommand::Disjoint {
            codebook,
            budget,
            json,
            cap,
        } => {
            let text = fs::read_to_string(&codebook)
                .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", codebook.display())))?;
            let cb = Codebook::from_file_str(&text).map_err(usage)?;
            let report = verify_disjoint_cones(cb.words(), budget, cap);
            if json {
                let payload = serde_json::to_string_pretty(&report)
                    .map_err(|e| CliError::Usage(e.to_string()))?;
                println!("{payload}");
            } else {
                println!(
                    "words {} pairs {} violations {} max_cone {} elapsed_ms {} complete {}",
                    report.word_count,
                    report.pairs_checked,
                    report.violations.len(),
                    report.max_cone_size,
                    report.elapsed_ms,
                    report.complete
                );
                for (i, j) in &report.violations {
                    println!("violation {} {}", cb.words()[*i], cb.words()[*j]);
                }
            }
            if !report.violations.is_empty() {
                return Err(CliError::Failure(format!(
                    "{} cone intersections found",
                    report.violations.len()
                )));
            }
            if !report.complete {
                return Err(CliError::Usage(
                    "report incomplete: some cones exceeded the cap".into(),
                ));
            }
            Ok(())
        }
    }
}

fn run_report(command: ReportCommand) -> Result<(), CliError> {
    match command {
        ReportCommand::Rates { q, n, json, cap } => {
            let alphabet = Alphabet::new(q).map_err(usage)?;
            let lengths: Vec<usize> = n
                .split(',')
                .map(|part| {
                    part.trim()
                        .parse()
                        .map_err(|_| CliError::Usage(format!("invalid length {part:?}")))
                })
                .collect::<Result<_, _>>()?;
            let reports = rates_table(alphabet, &lengths, cap).map_err(core)?;
            print!("{}", render_rates_text(&reports));
            println!("capacity {}", capacity_noisy(alphabet));
            if let Some(path) = json {
                let payload = serde_json::to_string_pretty(&reports)
                    .map_err(|e| CliError::Usage(e.to_string()))?;
                fs::write(&path, payload)
                    .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))?;
            }
            Ok(())
        }
    }
}
