//! Command-line front end. Every subcommand is a thin wrapper over one
//! library entry point; all machine descriptions travel as `.amd` files
//! (see [`machinae::amd`] for the format).
//!
//! Exit codes are part of the interface: `0` when a run produced a result
//! or a verdict holds, `1` when a verdict fails (the witness goes to
//! standard output), `2` for usage, parse, or file errors. Identical
//! invocations print identical bytes.

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use machinae::amd::{self, parse_word, AmdDocument, CompositeRef};
use machinae::dovetail::bidiagonal_stream;
use machinae::error::MachineError;
use machinae::exec::{run, RunStatus};
use machinae::machine::{MachineDescription, PairKind};
use machinae::modes::{self, Mode};
use machinae::theorems::{
    acceptor_from_computer, acceptor_from_weak_decider, computer_from_acceptor,
    computer_from_weak_decider, decider_from_acceptors, decider_from_computers,
    decider_from_weak_and_co, dfa_equiv_exact, echo_filter, functional_equiv, limit_decider,
    power_report, weak_decider_from_acceptor, weak_decider_from_computer, ClassDescriptor,
};
use machinae::word::{Alphabet, BoundedDomain, Word};

#[derive(Parser)]
#[command(
    name = "machinae",
    about = "Machines, modes, and the constructions between them",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct DomainArgs {
    /// Domain alphabet; defaults to the input alphabet(s) of the machines
    /// involved.
    #[arg(long)]
    alphabet: Option<String>,
    /// Longest word in the bounded domain.
    #[arg(long, default_value_t = 8)]
    maxlen: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Run a machine on one word and print the outcome.
    Run {
        file: PathBuf,
        /// Input word; `eps` is the empty word.
        word: String,
        #[arg(long, default_value_t = 10_000)]
        budget: u64,
    },
    /// Combine two machine files under a composition discipline.
    ///
    /// KIND is one of seq, disj_par, conj_par, p_seq, p_conj_par,
    /// p_disj_par, p_disj_seq; the gated p_* kinds take a predicate
    /// machine as the third file.
    Compose {
        kind: String,
        a: PathBuf,
        b: PathBuf,
        predicate: Option<PathBuf>,
        /// Output file; parts are referenced, not copied.
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Walk the fair interleaved schedule of a machine and print each
    /// emission.
    Enumerate {
        file: PathBuf,
        #[arg(long, default_value_t = 64)]
        rounds: u64,
        /// Print round, input index, and halting step alongside the word.
        #[arg(long)]
        verbose: bool,
    },
    /// Build a machine from existing ones by a named construction rule.
    ///
    /// Rules and their inputs: prop2.3 WEAK-DECIDER; prop2.4 ACCEPTOR;
    /// prop2.5 ACCEPTOR; prop2.6 WEAK-DECIDER; prop2.8 WEAK-DECIDER
    /// CODECIDER; prop2.9 COMPUTER; prop2.10 COMPUTER; thm2.1 COMPUTER
    /// CO-COMPUTER (or one DECIDER: split it and rebuild); thm2.3 ACCEPTOR
    /// CO-ACCEPTOR; prop3.4 TURING-MACHINE (which must never move left of
    /// its starting cell). Stream-driven rules take --rounds.
    Transform {
        #[arg(long)]
        rule: String,
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
        #[arg(short, long)]
        out: PathBuf,
        #[arg(long, default_value_t = 64)]
        rounds: u64,
    },
    /// Check a machine against a word set in an operating mode.
    ///
    /// MODE is one of enumerate, accept, weak_decide, codecide, decide.
    /// The set file lists one word per line (`eps` for the empty word);
    /// the line `@all` stands for the whole bounded domain.
    Verify {
        #[arg(long)]
        mode: String,
        file: PathBuf,
        #[arg(long = "set")]
        set_file: PathBuf,
        #[arg(long, default_value_t = 10_000)]
        budget: u64,
        #[command(flatten)]
        domain: DomainArgs,
    },
    /// Compare classes of machines over a battery of languages.
    ///
    /// CLASSDIR holds one subdirectory per class: its `.amd` files are the
    /// members (`*.pN.amd` part files are skipped) and an optional
    /// `closure.txt` lists composition kinds the class is closed under.
    /// The battery file has lines `name: word word ...` or `name: @all`.
    Power {
        class_dir: PathBuf,
        battery_file: PathBuf,
        #[arg(long, default_value_t = 10_000)]
        budget: u64,
        #[command(flatten)]
        domain: DomainArgs,
    },
    /// Test two machines for equal behaviour.
    Equiv {
        a: PathBuf,
        b: PathBuf,
        /// Exact automaton equivalence with a shortest distinguishing
        /// witness, instead of a bounded-domain sweep.
        #[arg(long)]
        exact_dfa: bool,
        /// Behavioural mode for the bounded sweep: compute, enumerate,
        /// accept, weak_decide, codecide, or decide.
        #[arg(long, default_value = "compute")]
        mode: String,
        #[arg(long, default_value_t = 10_000)]
        budget: u64,
        #[command(flatten)]
        domain: DomainArgs,
    },
}

fn main() -> ExitCode {
    match dispatch(Cli::parse().command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("machinae: {e}");
            ExitCode::from(2)
        }
    }
}

fn usage(message: impl Into<String>) -> MachineError {
    MachineError::Parse {
        line: 0,
        message: message.into(),
    }
}

fn read_file(path: &Path) -> Result<String, MachineError> {
    fs::read_to_string(path).map_err(|e| MachineError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

fn domain_of(args: &DomainArgs, fallback: Alphabet) -> Result<BoundedDomain, MachineError> {
    let alphabet = match &args.alphabet {
        Some(s) => Alphabet::new_input(s)?,
        None => fallback,
    };
    Ok(BoundedDomain::new(alphabet, args.maxlen))
}

/// Reads a set file: one word per line, `@all` for the whole domain.
fn read_set(path: &Path, d: &BoundedDomain) -> Result<BTreeSet<Word>, MachineError> {
    let mut x = BTreeSet::new();
    for (i, raw) in read_file(path)?.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if line == "@all" {
            x.extend(d.words());
            continue;
        }
        for tok in line.split_whitespace() {
            let w = parse_word(tok);
            if !d.contains(&w) {
                return Err(MachineError::Parse {
                    line: i + 1,
                    message: format!(
                        "word `{tok}` lies outside the domain (alphabet {}, maxlen {})",
                        d.alphabet(),
                        d.max_len()
                    ),
                });
            }
            x.insert(w);
        }
    }
    Ok(x)
}

fn dispatch(command: Command) -> Result<ExitCode, MachineError> {
    match command {
        Command::Run { file, word, budget } => {
            let m = amd::load_machine(&file)?;
            let outcome = run(&m, &parse_word(&word), budget)?;
            match outcome.status {
                RunStatus::Produced(w) => {
                    println!("produced\t{w}");
                    Ok(ExitCode::SUCCESS)
                }
                RunStatus::LimitStable { value, stabilized_at } => {
                    println!("limit\t{value}\t{stabilized_at}");
                    Ok(ExitCode::SUCCESS)
                }
                RunStatus::Exhausted => {
                    println!("no-result");
                    Ok(ExitCode::from(1))
                }
            }
        }

        Command::Compose { kind, a, b, predicate, out } => {
            let Some(pair) = PairKind::parse(&kind) else {
                return Err(usage(format!("unknown composition kind `{kind}`")));
            };
            if pair.takes_predicate() != predicate.is_some() {
                return Err(usage(if pair.takes_predicate() {
                    format!("kind `{kind}` needs a predicate machine as the third file")
                } else {
                    format!("kind `{kind}` takes no predicate")
                }));
            }
            // Load every part so a bad reference or an ill-typed pairing
            // (sequential alphabet mismatch) fails before anything is
            // written.
            let ma = amd::load_machine(&a)?;
            let mb = amd::load_machine(&b)?;
            let mp = predicate.as_deref().map(amd::load_machine).transpose()?;
            build_pair(pair, &ma, &mb, mp.as_ref())?;

            if let Some(dir) = out.parent().filter(|p| !p.as_os_str().is_empty()) {
                fs::create_dir_all(dir).map_err(|e| MachineError::Io {
                    path: dir.display().to_string(),
                    message: e.to_string(),
                })?;
            }
            let reference = CompositeRef::Pair {
                kind: pair,
                first: part_reference(&a, &out),
                second: part_reference(&b, &out),
                predicate: predicate.map(|p| part_reference(&p, &out)),
            };
            let text = amd::serialize_amd(&AmdDocument::Composite(reference))?;
            fs::write(&out, text).map_err(|e| MachineError::Io {
                path: out.display().to_string(),
                message: e.to_string(),
            })?;
            println!("{}", out.display());
            Ok(ExitCode::SUCCESS)
        }

        Command::Enumerate { file, rounds, verbose } => {
            let m = amd::load_machine(&file)?;
            for e in bidiagonal_stream(&m, rounds)? {
                println!("{}", amd::format_emission(&e, verbose));
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Transform { rule, inputs, out, rounds } => {
            let arity_error = |needs: &str| {
                usage(format!(
                    "rule `{rule}` takes {needs}, got {} input file(s)",
                    inputs.len()
                ))
            };
            let load = |i: usize| amd::load_machine(&inputs[i]);
            let built = match (rule.as_str(), inputs.len()) {
                ("prop2.3", 1) => computer_from_weak_decider(&load(0)?)?,
                ("prop2.3", _) => return Err(arity_error("one weak decider")),
                ("prop2.4", 1) => weak_decider_from_acceptor(&load(0)?)?,
                ("prop2.4", _) => return Err(arity_error("one acceptor")),
                ("prop2.5", 1) => computer_from_acceptor(&load(0)?)?,
                ("prop2.5", _) => return Err(arity_error("one acceptor")),
                ("prop2.6", 1) => acceptor_from_weak_decider(&load(0)?)?,
                ("prop2.6", _) => return Err(arity_error("one weak decider")),
                ("prop2.8", 2) => decider_from_weak_and_co(&load(0)?, &load(1)?)?,
                ("prop2.8", _) => return Err(arity_error("a weak decider and a codecider")),
                ("prop2.9", 1) => weak_decider_from_computer(&load(0)?, rounds)?,
                ("prop2.9", _) => return Err(arity_error("one computer")),
                ("prop2.10", 1) => acceptor_from_computer(&load(0)?, rounds)?,
                ("prop2.10", _) => return Err(arity_error("one computer")),
                ("thm2.1", 2) => decider_from_computers(&load(0)?, &load(1)?, rounds)?,
                ("thm2.1", 1) => {
                    // Round trip from a single decider: split it into the
                    // computer of its set and the computer of the
                    // complement, then race the two searches.
                    let d = load(0)?;
                    let t_yes = echo_filter(&d, &Word::parse("1"))?;
                    let t_no = echo_filter(&d, &Word::parse("0"))?;
                    decider_from_computers(&t_yes, &t_no, rounds)?
                }
                ("thm2.1", _) => {
                    return Err(arity_error("two computers (or one decider to split)"))
                }
                ("thm2.3", 2) => decider_from_acceptors(&load(0)?, &load(1)?)?,
                ("thm2.3", _) => return Err(arity_error("an acceptor and a co-acceptor")),
                ("prop3.4", 1) => limit_decider(&load(0)?)?,
                ("prop3.4", _) => return Err(arity_error("one Turing machine")),
                (other, _) => return Err(usage(format!("unknown rule `{other}`"))),
            };
            if let Some(dir) = out.parent().filter(|p| !p.as_os_str().is_empty()) {
                fs::create_dir_all(dir).map_err(|e| MachineError::Io {
                    path: dir.display().to_string(),
                    message: e.to_string(),
                })?;
            }
            for written in amd::write_machine(&built, &out)? {
                println!("{}", written.display());
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Verify { mode, file, set_file, budget, domain } => {
            let m = amd::load_machine(&file)?;
            let d = domain_of(&domain, m.input_alphabet())?;
            let x = read_set(&set_file, &d)?;
            let verdict = match Mode::parse(&mode) {
                Some(Mode::Enumerate) => modes::enumerates(&m, &x, &d, budget)?,
                Some(Mode::Accept) => modes::accepts_exactly(&m, &x, &d, budget)?,
                Some(Mode::WeakDecide) => modes::weakly_decides(&m, &x, &d, budget)?,
                Some(Mode::Codecide) => modes::codecides(&m, &x, &d, budget)?,
                Some(Mode::Decide) => modes::decides(&m, &x, &d, budget)?,
                Some(Mode::Compute) => {
                    return Err(usage(
                        "mode `compute` compares machines, not sets; use `enumerate` \
                         for a range check or `equiv --mode compute`",
                    ))
                }
                None => return Err(usage(format!("unknown mode `{mode}`"))),
            };
            println!("{verdict}");
            Ok(if verdict.holds { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }

        Command::Power { class_dir, battery_file, budget, domain } => {
            let classes = read_classes(&class_dir)?;
            if classes.is_empty() {
                return Err(usage(format!(
                    "no class directories under `{}`",
                    class_dir.display()
                )));
            }
            let Some(fallback) = classes
                .iter()
                .flat_map(|c| c.members.iter())
                .map(|m| m.input_alphabet())
                .reduce(|a, b| a.union(&b))
            else {
                return Err(usage("classes have no members; pass --alphabet"));
            };
            let d = domain_of(&domain, fallback)?;
            let battery = read_battery(&battery_file, &d)?;
            let report = power_report(&classes, &battery, &d, budget)?;
            print!("{report}");
            Ok(ExitCode::SUCCESS)
        }

        Command::Equiv { a, b, exact_dfa, mode, budget, domain } => {
            let ma = amd::load_machine(&a)?;
            let mb = amd::load_machine(&b)?;
            if exact_dfa {
                let answer = dfa_equiv_exact(&ma, &mb)?;
                return Ok(if answer.equivalent {
                    println!("equivalent");
                    ExitCode::SUCCESS
                } else {
                    let w = answer.witness.expect("inequivalence carries a witness");
                    println!("distinguished\t{w}");
                    ExitCode::from(1)
                });
            }
            let Some(mode) = Mode::parse(&mode) else {
                return Err(usage(format!("unknown mode `{mode}`")));
            };
            let d = domain_of(&domain, ma.input_alphabet().union(&mb.input_alphabet()))?;
            let verdict = functional_equiv(&ma, &mb, mode, &d, budget)?;
            println!("{verdict}");
            Ok(if verdict.holds { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

fn build_pair(
    kind: PairKind,
    a: &MachineDescription,
    b: &MachineDescription,
    predicate: Option<&MachineDescription>,
) -> Result<MachineDescription, MachineError> {
    use machinae::combinators::*;
    Ok(match kind {
        PairKind::Seq => seq_compose(a, b)?,
        PairKind::DisjPar => disj_parallel(a, b),
        PairKind::ConjPar => conj_parallel(a, b),
        gated => {
            let p = predicate.expect("checked by caller");
            match gated {
                PairKind::PSeq => p_seq(a, p, b),
                PairKind::PConjPar => p_conj_parallel(a, p, b),
                PairKind::PDisjPar => p_disj_parallel(a, p, b),
                PairKind::PDisjSeq => p_disj_seq(a, p, b),
                _ => unreachable!("non-gated kinds handled above"),
            }
        }
    })
}

/// How a composite file should refer to a part: relative to the composite's
/// directory when the part lives beneath it, absolute otherwise.
fn part_reference(part: &Path, out: &Path) -> String {
    let out_dir = out.parent().filter(|p| !p.as_os_str().is_empty());
    let canon_part = part.canonicalize().unwrap_or_else(|_| part.to_path_buf());
    let canon_dir = out_dir
        .map(|d| d.canonicalize().unwrap_or_else(|_| d.to_path_buf()))
        .unwrap_or_else(|| PathBuf::from("."));
    match canon_part.strip_prefix(&canon_dir) {
        Ok(rel) => rel.display().to_string(),
        Err(_) => canon_part.display().to_string(),
    }
}

/// One class per subdirectory: `.amd` files are members (part files of
/// flattened composites are skipped; they are reachable from their roots),
/// `closure.txt` lists the composition kinds the class is closed under.
fn read_classes(dir: &Path) -> Result<Vec<ClassDescriptor>, MachineError> {
    let entries = fs::read_dir(dir).map_err(|e| MachineError::Io {
        path: dir.display().to_string(),
        message: e.to_string(),
    })?;
    let mut class_dirs: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_dir())
        .collect();
    class_dirs.sort();

    let mut classes = Vec::new();
    for class_dir in class_dirs {
        let name = class_dir
            .file_name()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default();
        let mut member_files: Vec<PathBuf> = fs::read_dir(&class_dir)
            .map_err(|e| MachineError::Io {
                path: class_dir.display().to_string(),
                message: e.to_string(),
            })?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| {
                p.extension().is_some_and(|x| x == "amd") && !is_part_file(p)
            })
            .collect();
        member_files.sort();

        let mut members = Vec::new();
        for f in &member_files {
            members.push(amd::load_machine(f)?);
        }
        let admitted: Vec<&'static str> = {
            let tags: BTreeSet<&'static str> =
                members.iter().map(|m| static_model_tag(m.model())).collect();
            tags.into_iter().collect()
        };
        let mut class = ClassDescriptor::new(&name, &admitted, members)?;

        let closure_file = class_dir.join("closure.txt");
        if closure_file.exists() {
            let mut kinds = Vec::new();
            for (i, line) in read_file(&closure_file)?.lines().enumerate() {
                let tok = line.trim();
                if tok.is_empty() {
                    continue;
                }
                let Some(kind) = PairKind::parse(tok) else {
                    return Err(MachineError::Parse {
                        line: i + 1,
                        message: format!("unknown composition kind `{tok}`"),
                    });
                };
                kinds.push(kind);
            }
            class = class.closed_under(&kinds);
        }
        classes.push(class);
    }
    Ok(classes)
}

/// `<stem>.pN.amd` names written by the flattener.
fn is_part_file(p: &Path) -> bool {
    let Some(stem) = p.file_stem().and_then(|s| s.to_str()) else {
        return false;
    };
    match stem.rsplit_once(".p") {
        Some((_, digits)) => !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit()),
        None => false,
    }
}

fn static_model_tag(model: &str) -> &'static str {
    match model {
        "dfa" => "dfa",
        "nfa" => "nfa",
        "pda" => "pda",
        "tm" => "tm",
        "itm" => "itm",
        _ => "composite",
    }
}

/// Battery lines look like `name: word word ...` or `name: @all`.
fn read_battery(
    path: &Path,
    d: &BoundedDomain,
) -> Result<Vec<(String, BTreeSet<Word>)>, MachineError> {
    let mut battery = Vec::new();
    for (i, raw) in read_file(path)?.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let Some((name, words)) = line.split_once(':') else {
            return Err(MachineError::Parse {
                line: i + 1,
                message: format!("expected `name: word word ...`, got `{line}`"),
            });
        };
        let mut x = BTreeSet::new();
        for tok in words.split_whitespace() {
            if tok == "@all" {
                x.extend(d.words());
                continue;
            }
            let w = parse_word(tok);
            if !d.contains(&w) {
                return Err(MachineError::Parse {
                    line: i + 1,
                    message: format!(
                        "word `{tok}` lies outside the domain (alphabet {}, maxlen {})",
                        d.alphabet(),
                        d.max_len()
                    ),
                });
            }
            x.insert(w);
        }
        battery.push((name.trim().to_string(), x));
    }
    Ok(battery)
}
