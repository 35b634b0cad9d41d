//! Command-line front end: `check`, `chow`, `fantastack`, `compare`, `examples`.
//!
//! Exit codes: 0 success, 1 mathematical or hypothesis failure, 2 input or
//! parse failure. Diagnostics and `--verbose` output go to the error stream so
//! standard output stays byte-stable for fixed inputs and flags.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactla::{FgAbelianGroup, IntMatrix};
use crate::fan::Fan;
use crate::present::{
    from_doc, graded_invariants, parse_presentation, render, simplify, to_doc, Format, GradedTable,
    Presentation, PresentationDoc,
};
use crate::stacky::{induced_stacky_fan, CoxQuotientReport, StackyFan};

pub const SUCCESS: i32 = 0;
pub const MATH_FAILURE: i32 = 1;
pub const INPUT_FAILURE: i32 = 2;

pub const FIXTURE_NAMES: [&str; 4] = ["p64", "blowupA3", "bg", "fanta"];

/// Canonical input documents for the worked examples.
pub fn fixture(name: &str) -> Option<&'static str> {
    match name {
        "p64" => Some(include_str!("../fixtures/p64.json")),
        "blowupA3" => Some(include_str!("../fixtures/blowupA3.json")),
        "bg" => Some(include_str!("../fixtures/bg.json")),
        "fanta" => Some(include_str!("../fixtures/fanta.json")),
        _ => None,
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    #[default]
    Stacky,
    Fantastack,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TargetDoc {
    pub rank: usize,
    pub torsion: Vec<i64>,
}

/// The JSON input file.
///
/// In fantastack mode `rays`/`max_cones` describe `Σ` on `Z^{target.rank}`
/// and the columns of `lift` are the images `β(e_i)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mode: Option<Mode>,
    pub lattice_rank: usize,
    pub rays: Vec<Vec<i64>>,
    pub max_cones: Vec<Vec<usize>>,
    pub target: TargetDoc,
    pub lift: Vec<Vec<i64>>,
}

fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

impl InputDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Input(e.to_string()))
    }

    pub fn mode(&self) -> Mode {
        self.mode.unwrap_or_default()
    }

    fn fan(&self) -> Result<Fan> {
        if let Some(i) = self.rays.iter().position(|r| r.len() != self.lattice_rank) {
            return Err(Error::Input(format!(
                "ray {i} has length {}, expected lattice_rank = {}",
                self.rays[i].len(),
                self.lattice_rank
            )));
        }
        Fan::new(
            self.lattice_rank,
            self.rays.iter().map(|r| big(r)).collect(),
            self.max_cones.clone(),
        )
    }

    fn check_torsion(&self) -> Result<()> {
        match self.target.torsion.iter().find(|&&a| a < 1) {
            Some(a) => Err(Error::Input(format!(
                "torsion coefficient {a} must be positive"
            ))),
            None => Ok(()),
        }
    }

    pub fn stacky_fan(&self) -> Result<StackyFan> {
        if self.mode() != Mode::Stacky {
            return Err(Error::Input("expected a stacky-mode document".into()));
        }
        self.check_torsion()?;
        let rows = self.target.rank + self.target.torsion.len();
        if self.lift.len() != rows {
            return Err(Error::Input(format!(
                "lift has {} rows, expected target.rank + |torsion| = {rows}",
                self.lift.len()
            )));
        }
        if let Some(i) = self.lift.iter().position(|r| r.len() != self.lattice_rank) {
            return Err(Error::Input(format!(
                "lift row {i} has length {}, expected lattice_rank = {}",
                self.lift[i].len(),
                self.lattice_rank
            )));
        }
        let lift = IntMatrix::from_rows(self.lattice_rank, &self.lift)?;
        StackyFan::new(
            self.fan()?,
            self.target.rank,
            big(&self.target.torsion),
            lift,
        )
    }

    /// The fan `Σ` and the image vectors `β(e_i)` of a fantastack document.
    pub fn fantastack(&self) -> Result<(Fan, Vec<Vec<BigInt>>)> {
        if self.mode() != Mode::Fantastack {
            return Err(Error::Input("expected a fantastack-mode document".into()));
        }
        if !self.target.torsion.is_empty() {
            return Err(Error::Input(
                "fantastack mode requires empty torsion".into(),
            ));
        }
        if self.lattice_rank != self.target.rank {
            return Err(Error::Input(format!(
                "fantastack mode needs lattice_rank = target.rank, got {} and {}",
                self.lattice_rank, self.target.rank
            )));
        }
        if self.lift.len() != self.target.rank {
            return Err(Error::Input(format!(
                "lift has {} rows, expected target.rank = {}",
                self.lift.len(),
                self.target.rank
            )));
        }
        let n = self.lift.first().map_or(0, Vec::len);
        if self.lift.iter().any(|r| r.len() != n) {
            return Err(Error::Input("lift rows have different lengths".into()));
        }
        let images = (0..n)
            .map(|i| self.lift.iter().map(|r| BigInt::from(r[i])).collect())
            .collect();
        Ok((self.fan()?, images))
    }

    /// The stacky fan the pipeline runs on, in either mode.
    pub fn pipeline_input(&self) -> Result<StackyFan> {
        match self.mode() {
            Mode::Stacky => self.stacky_fan(),
            Mode::Fantastack => {
                let (fan, images) = self.fantastack()?;
                induced_stacky_fan(&fan, &images)
            }
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Hypotheses(_)
        | Error::InfiniteCokernel
        | Error::ImageOutsideSupport(_)
        | Error::RayWithoutImage(_)
        | Error::NotSaturated(_)
        | Error::ZeroVector => MATH_FAILURE,
        _ => INPUT_FAILURE,
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "toric-chow",
    version,
    about = "Integral Chow rings of smooth non-strict toric stacks"
)]
struct Cli {
    /// Skip the pairwise cone compatibility check (unsafe on untrusted input).
    #[arg(long, global = true)]
    skip_fan_check: bool,
    /// Extra diagnostics on standard error.
    #[arg(long, short, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct RingArgs {
    file: PathBuf,
    #[arg(long)]
    simplify: bool,
    /// Also print the graded components up to this degree.
    #[arg(long, value_name = "D")]
    graded: Option<usize>,
    #[arg(long, value_name = "F", default_value = "text", value_parser = parse_format)]
    format: Format,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate the input and report which hypotheses hold.
    Check { file: PathBuf },
    /// Compute the Chow ring presentation.
    Chow(RingArgs),
    /// Chow ring of a fantastack (fantastack-mode input).
    Fantastack(RingArgs),
    /// Compare the Chow ring with a target ring degree by degree.
    Compare {
        file: PathBuf,
        /// A presentation (`Z[s,t]/(2*t)`, bare relations, or a json-doc) or a file holding one.
        #[arg(long)]
        target: String,
        #[arg(long, default_value_t = 6)]
        max_degree: usize,
    },
    /// Print the input document of a worked example.
    Examples {
        name: String,
        /// Write to this file instead of standard output.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

fn parse_format(s: &str) -> std::result::Result<Format, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Runs the command line `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                INPUT_FAILURE
            } else {
                SUCCESS
            };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    let mut ctx = Context {
        out,
        err,
        skip_fan_check: cli.skip_fan_check,
        verbose: cli.verbose,
    };
    let result = match &cli.command {
        Command::Check { file } => ctx.check(file),
        Command::Chow(a) => ctx.chow(a, false),
        Command::Fantastack(a) => ctx.chow(a, true),
        Command::Compare {
            file,
            target,
            max_degree,
        } => ctx.compare(file, target, *max_degree),
        Command::Examples { name, output } => ctx.examples(name, output.as_deref()),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(ctx.err, "error: {e}");
            exit_code(&e)
        }
    }
}

struct Context<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
    skip_fan_check: bool,
    verbose: bool,
}

fn io(e: std::io::Error) -> Error {
    Error::Input(e.to_string())
}

fn read_input(path: &Path) -> Result<InputDocument> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
    InputDocument::from_json(&text)
}

fn int_value(x: &BigInt) -> Value {
    x.to_i64()
        .map_or_else(|| Value::String(x.to_string()), Value::from)
}

fn matrix_value(m: &IntMatrix) -> Value {
    Value::Array(
        m.to_rows()
            .iter()
            .map(|r| Value::Array(r.iter().map(int_value).collect()))
            .collect(),
    )
}

fn group_value(g: &FgAbelianGroup) -> Value {
    json!({
        "rank": g.rank(),
        "torsion": g.torsion().iter().map(int_value).collect::<Vec<_>>(),
    })
}

impl Context<'_> {
    fn say(&mut self, line: impl std::fmt::Display) -> Result<()> {
        writeln!(self.out, "{line}").map_err(io)
    }

    fn note(&mut self, line: impl std::fmt::Display) {
        if self.verbose {
            let _ = writeln!(self.err, "{line}");
        }
    }

    fn check(&mut self, file: &Path) -> Result<i32> {
        let doc = read_input(file)?;
        let sf = match doc.mode() {
            Mode::Stacky => doc.stacky_fan()?,
            Mode::Fantastack => {
                let (fan, images) = doc.fantastack()?;
                let report = fan.validate();
                if !self.skip_fan_check && !report.is_ok() {
                    for v in &report.violations {
                        self.say(format!("target fan: invalid ({v})"))?;
                    }
                    self.say("hypotheses: FAILED")?;
                    return Ok(MATH_FAILURE);
                }
                match induced_stacky_fan(&fan, &images) {
                    Ok(sf) => {
                        self.say("hat fan: ok")?;
                        sf
                    }
                    Err(e) => {
                        self.say(format!("hat fan: {e}"))?;
                        self.say("hypotheses: FAILED")?;
                        return Ok(MATH_FAILURE);
                    }
                }
            }
        };
        let report = sf.validate_hypotheses_with(self.skip_fan_check);
        match &report.fan {
            None => self.say("fan: skipped")?,
            Some(r) if r.is_ok() => self.say("fan: ok")?,
            Some(r) => {
                for v in &r.violations {
                    self.say(format!("fan: invalid ({v})"))?;
                }
            }
        }
        self.say(format!(
            "smooth: {}",
            if report.smooth { "yes" } else { "no" }
        ))?;
        self.say(format!(
            "torus factor: {}",
            if report.torus_factor { "yes" } else { "no" }
        ))?;
        if sf.cokernel_is_finite() {
            self.say("cokernel: finite")?;
        } else {
            let (n0, _) = sf.split_infinite();
            self.say(format!("cokernel: infinite (free part of rank {n0})"))?;
        }
        if report.is_ok() {
            self.say("hypotheses: ok")?;
            Ok(SUCCESS)
        } else {
            self.say(format!(
                "hypotheses: FAILED ({})",
                report.failures().join("; ")
            ))?;
            Ok(MATH_FAILURE)
        }
    }

    fn verbose_details(&mut self, sf: &StackyFan) -> Result<()> {
        if !self.verbose {
            return Ok(());
        }
        self.note(format!("target N: {}", sf.target()));
        self.note(format!(
            "lift (torsion rows reduced): {}",
            sf.normalized_lift()
        ));
        self.note(format!("maximal cones: {:?}", sf.fan().max_cones()));
        let nonfaces = sf.fan().minimal_nonfaces()?;
        self.note(format!("minimal non-faces: {nonfaces:?}"));
        Ok(())
    }

    fn chow(&mut self, a: &RingArgs, require_fantastack: bool) -> Result<i32> {
        let doc = read_input(&a.file)?;
        if require_fantastack && doc.mode() != Mode::Fantastack {
            return Err(Error::Input(
                "the fantastack command needs a fantastack-mode document".into(),
            ));
        }
        let (sf, ring) = match doc.mode() {
            Mode::Stacky => {
                let sf = doc.stacky_fan()?;
                let ring = sf.chow_ring_with(self.skip_fan_check)?;
                (sf, ring)
            }
            Mode::Fantastack => {
                let (fan, images) = doc.fantastack()?;
                let ring = crate::stacky::fantastack_chow_with(&fan, &images, self.skip_fan_check)?;
                (induced_stacky_fan(&fan, &images)?, ring)
            }
        };
        self.verbose_details(&sf)?;
        let ring = if a.simplify { simplify(&ring) } else { ring };
        let table = a.graded.map(|d| graded_invariants(&ring, d)).transpose()?;
        let cox = sf.assemble_block_matrix();
        self.emit(&ring, table.as_ref(), &cox, a.format)?;
        Ok(SUCCESS)
    }

    fn emit(
        &mut self,
        ring: &Presentation,
        table: Option<&GradedTable>,
        cox: &CoxQuotientReport,
        format: Format,
    ) -> Result<()> {
        if format == Format::Json {
            let mut v = json!({
                "presentation": to_doc(ring),
                "cox": {
                    "matrix": matrix_value(&cox.matrix),
                    "character_group": group_value(&cox.character_group),
                    "weights": matrix_value(&cox.weights),
                },
            });
            if let Some(t) = table {
                v["graded"] = Value::Array(t.degrees.iter().map(group_value).collect());
            }
            return self.say(serde_json::to_string_pretty(&v).expect("plain data"));
        }
        self.say(render(ring, format))?;
        if let Some(t) = table {
            write!(self.out, "{t}").map_err(io)?;
        }
        self.say(format!("cox matrix: {}", cox.matrix))?;
        self.say(format!("character group: {}", cox.character_group))?;
        self.say(format!("weights: {}", cox.weights))
    }

    fn compare(&mut self, file: &Path, target: &str, max_degree: usize) -> Result<i32> {
        let doc = read_input(file)?;
        let sf = doc.pipeline_input()?;
        let ring = match doc.mode() {
            Mode::Stacky => sf.chow_ring_with(self.skip_fan_check)?,
            Mode::Fantastack => {
                let (fan, images) = doc.fantastack()?;
                crate::stacky::fantastack_chow_with(&fan, &images, self.skip_fan_check)?
            }
        };
        let target = load_target(target)?;
        let lhs = graded_invariants(&ring, max_degree)?;
        let rhs = graded_invariants(&target, max_degree)?;
        self.say(format!("{:<6} {:<32} {}", "deg", "input", "target"))?;
        for (k, (g, h)) in lhs.degrees.iter().zip(&rhs.degrees).enumerate() {
            let mark = if g == h { "" } else { "  <-" };
            self.say(format!("{k:<6} {:<32} {h}{mark}", g.to_string()))?;
        }
        match lhs
            .degrees
            .iter()
            .zip(&rhs.degrees)
            .position(|(g, h)| g != h)
        {
            None => {
                self.say(format!("PASS (degrees 0..={max_degree})"))?;
                Ok(SUCCESS)
            }
            Some(k) => {
                self.say(format!("FAIL at degree {k}"))?;
                Ok(MATH_FAILURE)
            }
        }
    }

    fn examples(&mut self, name: &str, output: Option<&Path>) -> Result<i32> {
        let text = fixture(name).ok_or_else(|| {
            Error::Input(format!(
                "unknown example `{name}`; expected one of {}",
                FIXTURE_NAMES.join(", ")
            ))
        })?;
        match output {
            Some(path) => std::fs::write(path, text).map_err(io)?,
            None => write!(self.out, "{text}").map_err(io)?,
        }
        Ok(SUCCESS)
    }
}

/// A target ring given inline or as a file: json-doc, `Z[...]/(...)` or a bare
/// relation list.
pub fn load_target(target: &str) -> Result<Presentation> {
    let path = Path::new(target);
    let text = if path.is_file() {
        std::fs::read_to_string(path).map_err(io)?
    } else {
        target.to_string()
    };
    if text.trim_start().starts_with('{') {
        let doc: PresentationDoc =
            serde_json::from_str(&text).map_err(|e| Error::Input(e.to_string()))?;
        from_doc(&doc)
    } else {
        parse_presentation(&text)
    }
}
