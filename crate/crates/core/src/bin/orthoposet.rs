use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use orthoposet::adjoint::{find_o6_subalgebra, Condition, SasakiTables};
use orthoposet::enumeration::{dedupe_isomorphic, search, with_display_names, Flag, SearchGoal};
use orthoposet::fixtures;
use orthoposet::io::report::describe_witness;
use orthoposet::io::{
    export_dot, parse_poset, render_cell, render_table, report_json, PosetDocument, TableFormat,
};
use orthoposet::properties::Property;
use orthoposet::sasaki::{check_projection_laws, sasaki_proj, OpKind, OpTable, SubsetSample};
use orthoposet::verify::{run_criterion, VerifyOptions};
use orthoposet::OpPoset;

/// Sasaki operations and adjointness on finite posets with a unary operation.
///
/// FILE arguments that do not exist on disk are looked up among the bundled
/// fixtures (ex1, m3, fig3, benzene, cube8).
#[derive(Parser)]
#[command(name = "orthoposet", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Structural properties, with witnesses for the ones that fail.
    Check {
        file: PathBuf,
        /// Comma-separated subset of the properties (default: all).
        #[arg(long, value_delimiter = ',')]
        props: Vec<Property>,
        /// Print the full JSON report instead.
        #[arg(long)]
        json: bool,
    },
    /// Operation tables of ⊙ and →.
    Tables {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "both")]
        op: OpChoice,
        #[arg(long, default_value = "text")]
        format: TableFormat,
    },
    /// Whether ⊙ and → form an adjoint pair.
    Adjoint {
        file: PathBuf,
        /// Print the violating triple for each failing direction.
        #[arg(long)]
        witness: bool,
    },
    /// (A1), (A2) and the six equivalent conditions side by side.
    Thm1 { file: PathBuf },
    /// Looks for a six-element benzene subalgebra.
    O6 { file: PathBuf },
    /// The Sasaki projection p_a and its laws.
    Proj {
        file: PathBuf,
        #[arg(long)]
        a: String,
    },
    /// Bounded structures with required and forbidden properties.
    Search {
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[arg(long, value_delimiter = ',')]
        require: Vec<Flag>,
        #[arg(long, value_delimiter = ',')]
        forbid: Vec<Flag>,
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random maps tried per poset when maps are sampled.
        #[arg(long, default_value_t = 64)]
        samples: usize,
        /// Keep one representative per isomorphism class.
        #[arg(long)]
        dedupe: bool,
    },
    /// Hasse diagram in Graphviz DOT.
    Dot {
        file: PathBuf,
        #[arg(short, long)]
        o: Option<PathBuf>,
    },
    /// Runs the full reproduction checklist.
    VerifyPaper {
        /// Smaller sweeps (n <= 4) for a fast run.
        #[arg(long)]
        quick: bool,
    },
}

#[derive(Copy, Clone, ValueEnum)]
enum OpChoice {
    Odot,
    Arrow,
    Both,
}

/// Exit status 2: unreadable or malformed input.
struct InputError(String);

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn load(path: &Path) -> Result<(String, OpPoset), InputError> {
    let text = match fs::read_to_string(path) {
        Ok(text) => text,
        Err(err) => {
            let name = path
                .file_name()
                .and_then(|s| s.to_str())
                .unwrap_or_default();
            match fixtures::bundled(name) {
                Some(text) if !path.exists() => text.to_string(),
                _ => return Err(InputError(format!("{}: {err}", path.display()))),
            }
        }
    };
    let doc = parse_poset(&text).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    let op = doc
        .to_op_poset()
        .map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    Ok((doc.name, op))
}

fn tables(op: &OpPoset) -> Result<SasakiTables<'_>, InputError> {
    SasakiTables::new(op).map_err(|e| {
        InputError(format!(
            "operations are not total ({}); the structure is not orthogonal",
            label_error(op, &e)
        ))
    })
}

fn label_error(op: &OpPoset, e: &orthoposet::SasakiError) -> String {
    use orthoposet::SasakiError::*;
    match *e {
        UndefinedMeet {
            left,
            right,
            bound,
            with,
        } => format!(
            "{} ∧ {} undefined in {} ⊙ {}",
            op.name(bound),
            op.name(with),
            op.name(left),
            op.name(right)
        ),
        UndefinedJoin {
            left,
            right,
            bound,
            with,
        } => format!(
            "{} ∨ {} undefined in {} → {}",
            op.name(with),
            op.name(bound),
            op.name(left),
            op.name(right)
        ),
        SampleTooLarge(_) => e.to_string(),
    }
}

fn run(command: Command) -> Result<bool, InputError> {
    match command {
        Command::Check { file, props, json } => {
            let (name, op) = load(&file)?;
            if json {
                print!("{}", report_json(&name, &op));
                return Ok(true);
            }
            let requested = !props.is_empty();
            let props = if requested {
                props
            } else {
                Property::STRUCTURAL.to_vec()
            };
            let mut all = true;
            for prop in props {
                let r = prop.check(&op).expect("structural property");
                match &r.witness {
                    None => println!("{prop}: true"),
                    Some(w) => println!(
                        "{prop}: false  {} {}",
                        describe_witness(op.poset(), w),
                        w.condition
                    ),
                }
                all &= r.holds;
            }
            Ok(all || !requested)
        }
        Command::Tables {
            file,
            op: which,
            format,
        } => {
            let (_, op) = load(&file)?;
            let kinds = match which {
                OpChoice::Odot => vec![OpKind::Odot],
                OpChoice::Arrow => vec![OpKind::Arrow],
                OpChoice::Both => vec![OpKind::Odot, OpKind::Arrow],
            };
            for (i, kind) in kinds.into_iter().enumerate() {
                let t = OpTable::build(&op, kind).map_err(|e| InputError(label_error(&op, &e)))?;
                if i > 0 && format == TableFormat::Text {
                    println!();
                }
                print!("{}", render_table(&t, op.poset(), format));
            }
            Ok(true)
        }
        Command::Adjoint { file, witness } => {
            let (_, op) = load(&file)?;
            let t = tables(&op)?;
            let (a1, a2) = (t.check_a1(), t.check_a2());
            for r in [&a1, &a2] {
                let verdict = if r.holds { "holds" } else { "violated" };
                println!("{}: {verdict}", r.property.name().to_uppercase());
                if let (true, Some(w)) = (witness, &r.witness) {
                    println!(
                        "  witness (x, y, z) = {}: {}",
                        describe_witness(op.poset(), w),
                        w.condition
                    );
                }
            }
            let adjoint = a1.holds && a2.holds;
            println!("adjoint: {adjoint}");
            Ok(adjoint)
        }
        Command::Thm1 { file } => {
            let (_, op) = load(&file)?;
            let report = tables(&op)?
                .report()
                .map_err(|e| InputError(label_error(&op, &e)))?;
            println!("A1: {}", report.a1.holds);
            for c in Condition::ALL.into_iter().filter(|c| c.characterizes_a1()) {
                println!("{c}: {}", report.condition(c).holds);
            }
            println!("A2: {}", report.a2.holds);
            for c in Condition::ALL.into_iter().filter(|c| !c.characterizes_a1()) {
                println!("{c}: {}", report.condition(c).holds);
            }
            match report.equivalence_violation() {
                None => {
                    println!("equivalence: consistent");
                    Ok(true)
                }
                Some(c) => {
                    println!("equivalence: {c} disagrees");
                    Ok(false)
                }
            }
        }
        Command::O6 { file } => {
            let (_, op) = load(&file)?;
            match find_o6_subalgebra(&op).map_err(|e| InputError(e.to_string()))? {
                Some(found) => {
                    let labels: Vec<&str> = found.iter().map(|&x| op.name(x)).collect();
                    println!("O6 subalgebra: {{{}}}", labels.join(", "));
                    println!(
                        "  chains {} < {} and {} < {}",
                        labels[1], labels[3], labels[2], labels[4]
                    );
                }
                None => println!("no O6 subalgebra"),
            }
            Ok(true)
        }
        Command::Proj { file, a } => {
            let (_, op) = load(&file)?;
            let p = op.poset();
            let a = p
                .index_of(&a)
                .ok_or_else(|| InputError(format!("unknown element `{a}`")))?;
            for x in 0..op.len() {
                let image = sasaki_proj(&op, a, x).map_err(|e| InputError(label_error(&op, &e)))?;
                println!("p_{}({}) = {}", p.name(a), p.name(x), render_cell(p, image));
            }
            let laws = check_projection_laws(&op, SubsetSample::Small)
                .map_err(|e| InputError(label_error(&op, &e)))?;
            match &laws.report.witness {
                None => println!(
                    "projection laws: hold (orthomodular clauses checked: {})",
                    laws.orthomodular_checked
                ),
                Some(w) => println!(
                    "projection laws: fail {} {}",
                    describe_witness(p, w),
                    w.condition
                ),
            }
            Ok(laws.report.holds)
        }
        Command::Search {
            max_n,
            require,
            forbid,
            limit,
            seed,
            samples,
            dedupe,
        } => {
            let mut goal =
                SearchGoal::new(&require, &forbid, max_n).map_err(|e| InputError(e.to_string()))?;
            goal.limit = limit;
            goal.seed = seed;
            goal.samples_per_poset = samples;
            let mut found = search(&goal).map_err(|e| InputError(e.to_string()))?;
            if dedupe {
                found = dedupe_isomorphic(found);
            }
            for (i, op) in found.iter().enumerate() {
                let doc = PosetDocument::from_op_poset(
                    &format!("found{}", i + 1),
                    &with_display_names(op),
                );
                println!("{}", doc.to_text());
            }
            eprintln!("{} structure(s)", found.len());
            Ok(true)
        }
        Command::Dot { file, o } => {
            let (name, op) = load(&file)?;
            let dot = export_dot(op.poset(), &name);
            match o {
                Some(out) => fs::write(&out, dot)
                    .map_err(|e| InputError(format!("{}: {e}", out.display())))?,
                None => print!("{dot}"),
            }
            Ok(true)
        }
        Command::VerifyPaper { quick } => {
            let options = if quick {
                VerifyOptions {
                    sweep_max_n: 4,
                    totality_max_n: 3,
                    probes: 1000,
                    count_max_n: 4,
                    ..Default::default()
                }
            } else {
                VerifyOptions::default()
            };
            let mut all = true;
            for id in 1..=12 {
                let r = run_criterion(id, &options, &mut |line| eprintln!("    {line}"));
                println!("{r}");
                all &= r.passed;
            }
            println!(
                "{}",
                if all {
                    "all criteria passed"
                } else {
                    "some criteria FAILED"
                }
            );
            Ok(all)
        }
    }
}
