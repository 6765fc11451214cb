//! Command-line front end: each subcommand runs a computation from
//! `crosscap-core` and collects its outcome as a list of named checks.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use crosscap_core::homology::{
    conjugacy_obstruction, derive_psi, rep_table, verify_relations, RelationStatus, RepName,
};
use crosscap_core::mod2::{
    brute_force_isov, decompose, epsilon_word, make_a, make_b, rho_word, special_vectors, BitMatrix,
};
use crosscap_core::scenarios::{run_scenario_with, scenario_matrix, ScenarioId};
use crosscap_core::surface::{abelianize, dihedral_eval, relations_for, Surface, Word};
use crosscap_core::{AnyMatrix, Error, IntMatrix};
use serde::Serialize;
use serde_json::{json, Value};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Parser)]
#[command(
    name = "crosscap",
    version,
    about = "Linear representations of mapping class groups of nonorientable surfaces"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Write the report to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    #[value(alias = "json")]
    Structured,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check every defining relation under a representation.
    VerifyRelations {
        #[arg(long, value_parser = parse_rep)]
        rep: RepName,
        #[arg(long)]
        genus: usize,
    },
    /// Print generator images, all of them or those occurring in a word.
    ShowGenerator {
        #[arg(long, value_parser = parse_rep)]
        rep: RepName,
        #[arg(long)]
        genus: usize,
        #[arg(long)]
        word: Option<String>,
    },
    /// Recompute the twist images from the double cover and compare.
    DerivePsi {
        #[arg(long, value_parser = parse_rep, default_value = "psi1")]
        rep: RepName,
        #[arg(long)]
        genus: usize,
    },
    /// Decide whether the two representations are conjugate.
    Conjugacy {
        #[arg(long)]
        genus: usize,
    },
    /// Image of a word under the epimorphism onto Sp(2r, Z_2).
    Epsilon {
        #[arg(long)]
        genus: usize,
        #[arg(long)]
        word: String,
    },
    /// Split the mod 2 action of a word as B_{x,z} A_R.
    DecomposeIsov {
        #[arg(long)]
        genus: usize,
        #[arg(long)]
        word: String,
    },
    /// Enumerate the isometry group of V by brute force.
    BruteIsov {
        #[arg(long, default_value_t = 4)]
        genus: usize,
    },
    /// Run a derivation scenario.
    Scenario {
        id: String,
        #[arg(long, default_value_t = 16)]
        branch_limit: usize,
        /// Also print an intermediate matrix of the scenario.
        #[arg(long)]
        matrix: Vec<String>,
    },
    /// Class of a word in the abelianization.
    Abelianize {
        #[arg(long)]
        genus: usize,
        #[arg(long)]
        word: String,
    },
    /// Image of a word of M(N_4) in the infinite dihedral group.
    Dihedral {
        #[arg(long)]
        word: String,
    },
    /// Evaluate a word under a representation.
    Eval {
        #[arg(long, value_parser = parse_rep)]
        rep: RepName,
        #[arg(long)]
        genus: usize,
        #[arg(long)]
        word: String,
    },
}

fn parse_rep(s: &str) -> Result<RepName, String> {
    match s.parse::<RepName>() {
        Ok(RepName::Custom) | Err(_) => Err(format!(
            "unknown representation `{s}` (expected phi, psi1, psi2, psi1p or psi2p)"
        )),
        Ok(r) => Ok(r),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl Status {
    fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub id: String,
    pub description: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub version: String,
    pub invocation: Vec<String>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(invocation: Vec<String>) -> Self {
        Report {
            version: VERSION.to_string(),
            invocation,
            checks: Vec::new(),
        }
    }

    fn push(
        &mut self,
        id: impl Into<String>,
        description: impl Into<String>,
        status: Status,
        witness: Option<Value>,
    ) {
        self.checks.push(Check {
            id: id.into(),
            description: description.into(),
            status,
            witness,
        });
    }

    pub fn failed(&self) -> bool {
        self.checks.iter().any(|c| c.status == Status::Fail)
    }

    pub fn exit_code(&self) -> i32 {
        i32::from(self.failed())
    }

    fn sort(&mut self) {
        self.checks.sort_by(|a, b| a.id.cmp(&b.id));
    }
}

fn int_doc(m: &IntMatrix) -> Value {
    serde_json::to_value(AnyMatrix::Int(m.clone()).to_document()).expect("serializable matrix")
}

fn bit_doc(m: &BitMatrix) -> Value {
    serde_json::to_value(AnyMatrix::Gf2(m.clone()).to_document()).expect("serializable matrix")
}

fn closed_word(text: &str, g: usize) -> Result<Word, Error> {
    Word::parse(text, Surface::closed(g))
}

/// Runs one parsed command.
pub fn execute(cli: &Cli, invocation: Vec<String>) -> Result<Report, Error> {
    let mut report = Report::new(invocation);
    match &cli.command {
        Command::VerifyRelations { rep, genus } => {
            let table = rep_table(*rep, *genus)?;
            for c in verify_relations(&table)? {
                let status = match c.status {
                    RelationStatus::Holds => Status::Pass,
                    RelationStatus::Fails => Status::Fail,
                    RelationStatus::Skipped => Status::Skip,
                };
                let witness = c.defect.as_ref().map(int_doc);
                report.push(
                    c.relation.label.clone(),
                    format!("{} = {}", c.relation.lhs, c.relation.rhs),
                    status,
                    witness,
                );
            }
        }
        Command::ShowGenerator { rep, genus, word } => {
            let table = rep_table(*rep, *genus)?;
            let gens: Vec<_> = match word {
                Some(w) => {
                    let surface = table.surface;
                    let w = Word::parse(w, surface)?;
                    let mut gs: Vec<_> = w.letters().iter().map(|l| l.generator).collect();
                    gs.sort();
                    gs.dedup();
                    gs
                }
                None => table.generators().collect(),
            };
            for gen in gens {
                match table.image(gen) {
                    Some(m) => report.push(
                        gen.to_string(),
                        format!("{}({gen}), determinant {}", rep, m.det()?),
                        Status::Pass,
                        Some(int_doc(m)),
                    ),
                    None => report.push(
                        gen.to_string(),
                        format!("{rep} has no image for {gen}"),
                        Status::Skip,
                        None,
                    ),
                }
            }
        }
        Command::DerivePsi { rep, genus } => {
            let k = match rep {
                RepName::Psi1 => 1,
                RepName::Psi2 => 2,
                other => {
                    return Err(Error::InvalidArgument(format!(
                        "derive-psi takes psi1 or psi2, got {other}"
                    )))
                }
            };
            let derived = derive_psi(*genus, k)?;
            let table = rep_table(*rep, *genus)?;
            for (gen, m) in derived.entries() {
                let ok = table.image(gen) == Some(m);
                report.push(
                    gen.to_string(),
                    format!("derived image of {gen} equals the {rep} table"),
                    Status::from_bool(ok),
                    (!ok).then(|| int_doc(m)),
                );
            }
        }
        Command::Conjugacy { genus } => {
            let c = conjugacy_obstruction(*genus)?;
            let expected = if genus % 2 == 1 { 1 } else { 2 };
            report.push(
                "intertwiners",
                format!(
                    "intertwiners over the shared twists span dimension {}",
                    c.intertwiner_dim
                ),
                Status::from_bool(c.intertwiner_dim == expected),
                Some(json!({
                    "shared": c.shared.iter().map(ToString::to_string).collect::<Vec<_>>(),
                    "remaining": c.remaining.iter().map(ToString::to_string).collect::<Vec<_>>(),
                    "constrained_dim": c.constrained_dim,
                })),
            );
            report.push(
                "not-conjugate",
                format!("psi1 and psi2 are not conjugate at genus {genus}"),
                Status::from_bool(!c.conjugate),
                None,
            );
        }
        Command::Epsilon { genus, word } => {
            let w = closed_word(word, *genus)?;
            let m = epsilon_word(*genus, &w)?;
            let rels = relations_for(*genus, 0)?;
            let bad: Vec<String> = rels
                .iter()
                .filter(|r| {
                    !epsilon_word(*genus, &r.relator())
                        .map(|m| m.is_identity())
                        .unwrap_or(false)
                })
                .map(|r| r.label.clone())
                .collect();
            report.push(
                "relators",
                format!("epsilon kills all {} relators", rels.len()),
                Status::from_bool(bad.is_empty()),
                (!bad.is_empty()).then(|| json!(bad)),
            );
            report.push(
                "word",
                format!("epsilon({w})"),
                Status::Pass,
                Some(bit_doc(&m)),
            );
        }
        Command::DecomposeIsov { genus, word } => {
            let w = closed_word(word, *genus)?;
            let l = rho_word(*genus, &w)?;
            let r = genus.checked_sub(2).map(|h| h / 2).unwrap_or(0);
            let sv = special_vectors(r)?;
            let d = decompose(&sv, &l)?;
            let back = &make_b(&sv, d.x, &d.z)? * &make_a(&sv, &d.r)?;
            report.push(
                "decomposition",
                format!("rho({w}) = B_(x,z) A_R"),
                Status::from_bool(back == l),
                Some(json!({
                    "x": d.x.to_string(),
                    "z": d.z.0.iter().map(ToString::to_string).collect::<String>(),
                    "R": bit_doc(&d.r),
                    "rho": bit_doc(&l),
                })),
            );
        }
        Command::BruteIsov { genus } => {
            let r = genus.checked_sub(2).map(|h| h / 2).unwrap_or(0);
            let b = brute_force_isov(r)?;
            report.push(
                "order",
                format!(
                    "Iso(V) has order {} (constructive count {})",
                    b.order, b.constructive_order
                ),
                Status::from_bool(b.order == b.constructive_order),
                None,
            );
            report.push(
                "matches",
                "every isometry is some B A_R",
                Status::from_bool(b.matches_constructive),
                None,
            );
            report.push(
                "fixes-d",
                "every isometry fixes d",
                Status::from_bool(b.all_fix_d),
                None,
            );
        }
        Command::Scenario {
            id,
            branch_limit,
            matrix,
        } => {
            let sid: ScenarioId = id.parse()?;
            let r = run_scenario_with(sid, *branch_limit)?;
            for (n, s) in r.steps.iter().enumerate() {
                report.push(
                    format!("{:02}.{}", n + 1, s.id),
                    format!("{}: {}", s.description, s.expected),
                    Status::from_bool(s.passed),
                    Some(json!(s.evidence)),
                );
            }
            report.push(
                "conclusion",
                r.conclusion.clone(),
                Status::from_bool(r.passed()),
                None,
            );
            for name in matrix {
                let m = scenario_matrix(sid, name)?;
                report.push(
                    format!("matrix.{name}"),
                    format!("{name} in {sid}"),
                    Status::Pass,
                    Some(
                        serde_json::to_value(AnyMatrix::Poly(m).to_document())
                            .expect("serializable matrix"),
                    ),
                );
            }
        }
        Command::Abelianize { genus, word } => {
            let w = closed_word(word, *genus)?;
            let c = abelianize(&w)?;
            report.push(
                "class",
                format!("[{w}] = {c}"),
                Status::Pass,
                Some(json!(c.to_string())),
            );
        }
        Command::Dihedral { word } => {
            let w = closed_word(word, 4)?;
            let e = dihedral_eval(&w)?;
            let order = e
                .order()
                .map_or_else(|| "infinite".to_string(), |n| n.to_string());
            report.push(
                "image",
                format!("phi({w}) = {e}, order {order}"),
                Status::Pass,
                Some(json!(e.to_string())),
            );
        }
        Command::Eval { rep, genus, word } => {
            let table = rep_table(*rep, *genus)?;
            let w = Word::parse(word, table.surface)?;
            let m = table.eval(&w)?;
            report.push(
                "image",
                format!("{rep}({w})"),
                Status::Pass,
                Some(int_doc(&m)),
            );
        }
    }
    report.sort();
    Ok(report)
}

pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Structured => {
            let mut s = serde_json::to_string_pretty(report).expect("serializable report");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut out = format!(
                "crosscap {} {}\n",
                report.version,
                report.invocation.join(" ")
            );
            for c in &report.checks {
                out.push_str(&format!(
                    "{} {} — {}\n",
                    c.status.label(),
                    c.id,
                    c.description
                ));
                if let Some(w) = &c.witness {
                    if c.status == Status::Fail || w.get("ring").is_some() {
                        out.push_str(&format!("  witness: {w}\n"));
                    }
                }
            }
            let count = |s: Status| report.checks.iter().filter(|c| c.status == s).count();
            out.push_str(&format!(
                "{} checks ({} pass, {} fail, {} skip)\n",
                report.checks.len(),
                count(Status::Pass),
                count(Status::Fail),
                count(Status::Skip)
            ));
            out
        }
    }
}

/// The result of a full invocation: exit code plus what goes to each stream.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
    pub report: Option<Report>,
}

/// Parses `argv` (including the program name), runs the command and renders
/// its report. Exit codes: 0 all checks pass, 1 some check failed, 2 usage
/// or argument error.
pub fn dispatch<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            let (stdout, stderr) = if code == 0 {
                (text, String::new())
            } else {
                (String::new(), text)
            };
            return Outcome {
                code,
                stdout,
                stderr,
                report: None,
            };
        }
    };
    let invocation: Vec<String> = argv
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect();
    let report = match execute(&cli, invocation) {
        Ok(r) => r,
        Err(e) => {
            return Outcome {
                code: 2,
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
                report: None,
            }
        }
    };
    let text = render(&report, cli.format);
    let code = report.exit_code();
    match &cli.out {
        Some(path) => match std::fs::write(path, &text) {
            Ok(()) => Outcome {
                code,
                stdout: String::new(),
                stderr: String::new(),
                report: Some(report),
            },
            Err(e) => Outcome {
                code: 2,
                stdout: String::new(),
                stderr: format!("error: cannot write {}: {e}\n", path.display()),
                report: Some(report),
            },
        },
        None => Outcome {
            code,
            stdout: text,
            stderr: String::new(),
            report: Some(report),
        },
    }
}
