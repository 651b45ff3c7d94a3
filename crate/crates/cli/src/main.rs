use std::fmt::Display;
use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use sdm::algebra::{
    enumerate, flags_string, heterogenize, kernel, parse_algebra_file, validate, validate_single,
    AlgebraFile, DmaFile, FiniteSma, Flags, HeteroAlgebra, HeteroFile, SmaFile, Validity, Variety,
};
use sdm::calculus::{
    check_proof, cut_complexities, parse_linear, parse_proof_json, reduce_cut, Budget, Prover,
    ProofTree, SearchError, System,
};
use sdm::inductive::is_analytic_inductive;
use sdm::suite::{run_criterion, Profile};
use sdm::syntax::{
    parse_any_term, parse_formula, parse_formula_sequent, parse_pattern, parse_sequent, render,
    render_sequent, translate, unicode, unicode_sequent, Sequent,
};
use sdm::Exec;

#[derive(Parser)]
#[command(name = "sdm", version, about = "Display calculi for semi De Morgan logic")]
struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Parse a term, sequent or single-type formula and print it back.
    Parse { text: String },
    /// Translate a single-type formula or `(seq A B)` into the multi-type language.
    Translate { text: String },
    /// Check an SMA or heterogeneous algebra file and print its flags.
    CheckAlgebra { file: String },
    /// Print the kernel of an SMA file.
    Kernel { file: String },
    /// Print the heterogeneous algebra of an SMA file.
    Heterogenize { file: String },
    /// Check a sequent on an algebra file.
    Validate { file: String, sequent: String },
    /// Search for a cut-free derivation.
    Prove {
        #[arg(long, default_value = "sm")]
        system: System,
        #[arg(long, default_value_t = 40)]
        depth: usize,
        sequent: String,
    },
    /// Check a proof file (JSON tree or linear format).
    CheckProof {
        #[arg(long, default_value = "sm")]
        system: System,
        file: String,
    },
    /// Apply one principal cut reduction.
    ReduceCut {
        #[arg(long, default_value = "sm")]
        system: System,
        /// Dot-separated premise indices of the cut node; the first reducible cut by default.
        #[arg(long)]
        path: Option<String>,
        file: String,
    },
    /// Run the analytic inductive test on `(seq lhs rhs)`.
    Classify { text: String },
    /// List SMAs up to a size bound.
    Enumerate {
        #[arg(long, default_value_t = 4)]
        max_size: usize,
        /// Keep only algebras in these varieties, e.g. `--variety DPL`.
        #[arg(long)]
        variety: Vec<String>,
    },
    /// Run the acceptance battery.
    Suite {
        #[arg(long, default_value = "quick")]
        profile: Profile,
        /// Run only this criterion.
        #[arg(long)]
        criterion: Option<usize>,
        #[arg(long)]
        sequential: bool,
    },
}

/// Exit status of a command.
enum Verdict {
    Yes,
    No,
}

struct InputError(String);

impl<E: Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

type Outcome = Result<Verdict, InputError>;

fn verdict(ok: bool) -> Verdict {
    if ok {
        Verdict::Yes
    } else {
        Verdict::No
    }
}

fn read(path: &str) -> Result<String, InputError> {
    fs::read_to_string(path).map_err(|e| InputError(format!("{path}: {e}")))
}

fn emit(json: bool, value: Value, text: impl FnOnce() -> String) {
    if json {
        println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
    } else {
        print!("{}", text());
    }
}

fn load_sma(path: &str) -> Result<FiniteSma, InputError> {
    match parse_algebra_file(&read(path)?)? {
        AlgebraFile::Sma(f) => {
            let (report, sma) = f.check()?;
            sma.ok_or_else(|| InputError(format!("{path}: not an SMA: {}", first_failure(&report.to_string()))))
        }
        AlgebraFile::Hetero(_) => Err(InputError(format!("{path}: expected an SMA file"))),
    }
}

fn first_failure(report: &str) -> &str {
    report.lines().find(|l| l.contains(" fails ")).unwrap_or(report)
}

fn load_hetero(path: &str) -> Result<(Option<FiniteSma>, HeteroAlgebra), InputError> {
    match parse_algebra_file(&read(path)?)? {
        AlgebraFile::Sma(_) => {
            let a = load_sma(path)?;
            let hh = heterogenize(&a)?;
            Ok((Some(a), hh))
        }
        AlgebraFile::Hetero(f) => {
            let (report, hh) = f.check()?;
            let hh = hh.ok_or_else(|| {
                InputError(format!("{path}: not a heterogeneous algebra: {}", first_failure(&report.core.to_string())))
            })?;
            Ok((None, hh))
        }
    }
}

/// A multi-type sequent, or a single-type `(seq A B)` translated.
fn goal(text: &str) -> Result<Sequent, InputError> {
    match parse_sequent(text) {
        Ok(s) => Ok(s),
        Err(e) => match parse_formula_sequent(text) {
            Ok((a, b)) => Ok(Sequent::new(translate(&a), translate(&b))),
            Err(_) => Err(e.into()),
        },
    }
}

fn load_proof(path: &str) -> Result<ProofTree, InputError> {
    let text = read(path)?;
    if text.trim_start().starts_with('{') {
        Ok(parse_proof_json(&text)?)
    } else {
        Ok(parse_linear(&text)?)
    }
}

fn print_proof(json: bool, t: &ProofTree) {
    if json {
        println!("{}", t.to_json_string());
    } else {
        print!("{}", t.outline());
    }
}

fn parse_cmd(json: bool, text: &str) -> Outcome {
    if let Ok(s) = parse_pattern(text) {
        emit(json, json!({"kind": "sequent", "text": render_sequent(&s), "unicode": unicode_sequent(&s)}), || {
            format!("{}\n{}\n", render_sequent(&s), unicode_sequent(&s))
        });
        return Ok(Verdict::Yes);
    }
    if let Ok(t) = parse_any_term(text) {
        let sort = t.sort().to_string();
        emit(json, json!({"kind": "term", "sort": sort, "text": render(&t), "unicode": unicode(&t)}), || {
            format!("{}\n{}\nsort {sort}\n", render(&t), unicode(&t))
        });
        return Ok(Verdict::Yes);
    }
    let f = parse_formula(text)?;
    emit(json, json!({"kind": "formula", "text": f.to_string(), "depth": f.depth()}), || {
        format!("{f}\ndepth {}\n", f.depth())
    });
    Ok(Verdict::Yes)
}

fn translate_cmd(json: bool, text: &str) -> Outcome {
    if let Ok((a, b)) = parse_formula_sequent(text) {
        let s = Sequent::new(translate(&a), translate(&b));
        emit(json, json!({"text": render_sequent(&s), "unicode": unicode_sequent(&s)}), || {
            format!("{}\n", render_sequent(&s))
        });
    } else {
        let t = translate(&parse_formula(text)?);
        emit(json, json!({"text": render(&t), "unicode": unicode(&t)}), || format!("{}\n", render(&t)));
    }
    Ok(Verdict::Yes)
}

fn check_algebra(json: bool, path: &str) -> Outcome {
    match parse_algebra_file(&read(path)?)? {
        AlgebraFile::Sma(f) => {
            let (report, sma) = f.check()?;
            let flags = sma.as_ref().map(|a| flags_string(&a.classify()));
            emit(json, json!({"kind": "sma", "report": report, "flags": flags}), || {
                let mut out = report.to_string();
                if let Some(fl) = &flags {
                    out.push_str(&format!("flags: {fl}\n"));
                }
                out
            });
            Ok(verdict(sma.is_some()))
        }
        AlgebraFile::Hetero(f) => {
            let (report, hh) = f.check()?;
            let flags = hh.as_ref().map(HeteroAlgebra::flags);
            emit(json, json!({"kind": "hetero", "report": report, "flags": flags}), || {
                let mut out = report.core.to_string();
                out.push_str(&report.optional.to_string());
                out
            });
            Ok(verdict(hh.is_some()))
        }
    }
}

fn kernel_cmd(json: bool, path: &str) -> Outcome {
    let a = load_sma(path)?;
    let k = kernel(&a)?;
    let file = DmaFile {
        size: k.k.size(),
        leq: k.k.lattice().leq_table(),
        star: k.k.star_table().to_vec(),
    };
    emit(json, json!({"kernel": file, "members": k.members}), || {
        format!(
            "members {:?}\nstar {:?}\nboolean {}\n",
            k.members,
            file.star,
            k.k.is_boolean()
        )
    });
    Ok(Verdict::Yes)
}

fn heterogenize_cmd(json: bool, path: &str) -> Outcome {
    let a = load_sma(path)?;
    let hh = heterogenize(&a)?;
    let file = HeteroFile::from_hetero(&hh);
    let f = hh.flags();
    emit(json, json!({"algebra": file, "flags": f}), || {
        format!(
            "|L| = {} |D| = {}\ne {:?}\nh {:?}\nstar {:?}\nH6a {} H6b {} boolean {} H7 {} H8 {}\n",
            hh.l().size(),
            hh.d().size(),
            hh.e_table(),
            hh.h_table(),
            hh.d().star_table(),
            f.h6a,
            f.h6b,
            f.boolean,
            f.h7,
            f.h8
        )
    });
    Ok(Verdict::Yes)
}

fn validate_cmd(json: bool, path: &str, text: &str) -> Outcome {
    let (sma, hh) = load_hetero(path)?;
    let v = match (parse_formula_sequent(text), sma) {
        (Ok((a, b)), Some(sma)) => validate_single(&a, &b, &sma)?,
        _ => validate(&goal(text)?, &hh)?,
    };
    match &v {
        Validity::Valid => emit(json, json!({"valid": true}), || "valid\n".into()),
        Validity::Countermodel(val) => {
            let cm = format!("{val:?}");
            emit(json, json!({"valid": false, "countermodel": cm}), || format!("countermodel {cm}\n"))
        }
    }
    Ok(verdict(v.is_valid()))
}

fn prove(json: bool, system: System, depth: usize, text: &str) -> Outcome {
    let g = goal(text)?;
    let mut p = Prover::new(system);
    match p.search(&g, Budget::depth(depth)) {
        Ok(t) => {
            print_proof(json, &t);
            Ok(Verdict::Yes)
        }
        Err(e) => {
            let reason = match &e {
                SearchError::Refuted { .. } => "refuted",
                SearchError::Exhausted { .. } => "exhausted",
            };
            emit(json, json!({"found": false, "reason": reason, "detail": e.to_string()}), || {
                format!("not found: {e}\n")
            });
            Ok(Verdict::No)
        }
    }
}

fn check_proof_cmd(json: bool, system: System, path: &str) -> Outcome {
    let t = load_proof(path)?;
    let r = check_proof(&t, system);
    emit(json, serde_json::to_value(&r).expect("serializable"), || {
        let mut out = String::new();
        for d in &r.diagnostics {
            out.push_str(&format!("{d}\n"));
        }
        out.push_str(&format!(
            "{} in {system}: size {} height {} cut-free {} subformula {}\n",
            if r.accepted { "accepted" } else { "rejected" },
            r.size,
            r.height,
            r.cut_free,
            r.subformula
        ));
        out
    });
    Ok(verdict(r.accepted))
}

fn reduce_cut_cmd(json: bool, system: System, path: Option<&str>, file: &str) -> Outcome {
    let t = load_proof(file)?;
    let reduced = match path {
        Some(p) => {
            let idx: Vec<usize> = if p.is_empty() {
                vec![]
            } else {
                p.split('.')
                    .map(|s| s.parse::<usize>())
                    .collect::<Result<_, _>>()
                    .map_err(|e| InputError(format!("bad path {p:?}: {e}")))?
            };
            reduce_cut(&t, &idx).map_err(|e| e.to_string())
        }
        None => {
            let mut cuts = Vec::new();
            t.walk(&mut |p, n| {
                if n.rule.starts_with("Cut") {
                    cuts.push(p.to_vec());
                }
            });
            cuts.iter()
                .find_map(|p| reduce_cut(&t, p).ok())
                .ok_or_else(|| "no principal cut to reduce".to_string())
        }
    };
    match reduced {
        Ok(r) => {
            let ok = check_proof(&r, system).accepted;
            if json {
                println!("{}", r.to_json_string());
            } else {
                print!("{}", r.outline());
                println!(
                    "cut complexities {:?} -> {:?}",
                    cut_complexities(&t),
                    cut_complexities(&r)
                );
            }
            Ok(verdict(ok))
        }
        Err(e) => {
            emit(json, json!({"reduced": false, "detail": e}), || format!("{e}\n"));
            Ok(Verdict::No)
        }
    }
}

fn classify(json: bool, text: &str) -> Outcome {
    let s = parse_pattern(text)?;
    if !s.ant.is_formula() || !s.suc.is_formula() {
        return Err(InputError("classify expects an inequality between formulas".into()));
    }
    match is_analytic_inductive(&s.ant, &s.suc) {
        Some(w) => {
            let vars: Vec<String> = w.vars.iter().map(unicode).collect();
            emit(
                json,
                json!({
                    "verdict": "analytic-inductive",
                    "vars": vars,
                    "epsilon": w.epsilon.to_string(),
                    "omega": w.omega.iter().map(|&(k, i)| [vars[k].clone(), vars[i].clone()]).collect::<Vec<_>>(),
                }),
                || format!("analytic-inductive\nvars ({})\nε = {}\nΩ = {}\n", vars.join(", "), w.epsilon, w.omega_text()),
            );
            Ok(Verdict::Yes)
        }
        None => {
            emit(json, json!({"verdict": "not-analytic-inductive"}), || "not-analytic-inductive\n".into());
            Ok(Verdict::No)
        }
    }
}

fn enumerate_cmd(json: bool, max_size: usize, variety: &[String]) -> Outcome {
    let mut want = Flags::new();
    for v in variety {
        want.insert(Variety::parse(v).ok_or_else(|| InputError(format!("unknown variety {v:?}")))?);
    }
    let all = enumerate(max_size, &want)?;
    if json {
        let items: Vec<Value> = all
            .iter()
            .map(|a| json!({"algebra": SmaFile::from_sma(a), "flags": flags_string(&a.classify())}))
            .collect();
        println!("{}", serde_json::to_string_pretty(&items).expect("serializable"));
    } else {
        for a in &all {
            println!("size {} neg {:?} {}", a.size(), a.neg_table(), flags_string(&a.classify()));
        }
        println!("{} algebras", all.len());
    }
    Ok(verdict(!all.is_empty()))
}

fn suite(json: bool, profile: Profile, only: Option<usize>, sequential: bool) -> Outcome {
    let exec = if sequential { Exec::Sequential } else { Exec::default() };
    let ids: Vec<usize> = match only {
        Some(i) if (1..=8).contains(&i) => vec![i],
        Some(i) => return Err(InputError(format!("no criterion {i} (expected 1..=8)"))),
        None => (1..=8).collect(),
    };
    let mut all = true;
    let mut rows = Vec::new();
    for i in ids {
        let o = run_criterion(i, profile, exec);
        all &= o.passed;
        if json {
            rows.push(json!({
                "id": o.id,
                "title": o.title,
                "passed": o.passed,
                "detail": o.detail,
                "seconds": o.elapsed.as_secs_f64(),
            }));
        } else {
            println!("{o}");
        }
    }
    if json {
        println!("{}", serde_json::to_string_pretty(&rows).expect("serializable"));
    }
    Ok(verdict(all))
}

fn run(cli: Cli) -> Outcome {
    let j = cli.json;
    match cli.cmd {
        Cmd::Parse { text } => parse_cmd(j, &text),
        Cmd::Translate { text } => translate_cmd(j, &text),
        Cmd::CheckAlgebra { file } => check_algebra(j, &file),
        Cmd::Kernel { file } => kernel_cmd(j, &file),
        Cmd::Heterogenize { file } => heterogenize_cmd(j, &file),
        Cmd::Validate { file, sequent } => validate_cmd(j, &file, &sequent),
        Cmd::Prove { system, depth, sequent } => prove(j, system, depth, &sequent),
        Cmd::CheckProof { system, file } => check_proof_cmd(j, system, &file),
        Cmd::ReduceCut { system, path, file } => reduce_cut_cmd(j, system, path.as_deref(), &file),
        Cmd::Classify { text } => classify(j, &text),
        Cmd::Enumerate { max_size, variety } => enumerate_cmd(j, max_size, &variety),
        Cmd::Suite {
            profile,
            criterion,
            sequential,
        } => suite(j, profile, criterion, sequential),
    }
}

fn main() -> ExitCode {
    // clap exits with status 2 on usage errors
    let cli = Cli::parse();
    match run(cli) {
        Ok(Verdict::Yes) => ExitCode::SUCCESS,
        Ok(Verdict::No) => ExitCode::from(1),
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
