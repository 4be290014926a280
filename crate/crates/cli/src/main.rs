use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use quandlekit::error::{QuandleError, TableError};
use quandlekit::gelfand::{double_cosets, is_gelfand_pair, is_multiplicity_free, Certificate};
use quandlekit::inner::inner_group;
use quandlekit::io::{bundled_order12_text, parse_table, Convention, TableFormat};
use quandlekit::report::{self, recognize_affine, AffineMatch, AnalysisOptions};
use quandlekit::repr::{decompose_prime_affine, DEFAULT_TOLERANCE};
use quandlekit::tensor::{tau_quotient, tensor_square};
use quandlekit::{affine_quandle, AffineSpec, CayleyQuandle};

#[derive(Parser)]
#[command(name = "quandlekit", version, about = "Analyze finite quandles and their quandle rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the quandle axioms on a table.
    Validate(InputArgs),
    /// Full structural report.
    Analyze {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tol: f64,
    },
    /// Orbits of Inn(X) on X × X.
    Tensor {
        #[command(flatten)]
        input: InputArgs,
        /// Also list the quotient by the swap (x, y) ↦ (y, x).
        #[arg(long)]
        tau: bool,
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
    },
    /// Irreducible decomposition of C[X] for affine quandles of prime order.
    Decompose {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tol: f64,
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
    },
    /// Multiplicity-freeness by orbital matrices and by double cosets.
    Gelfand {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
    },
    /// Analyze every connected affine quandle Z_m with m up to a bound.
    Scan {
        #[arg(long, default_value_t = 47)]
        max_order: u64,
        #[arg(long)]
        affine_only: bool,
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ConventionArg {
    Left,
    Right,
}

#[derive(Clone, Copy, ValueEnum)]
enum Bundled {
    Order12,
}

#[derive(Args)]
struct InputArgs {
    /// Cayley table file ("-" for standard input).
    #[arg(required_unless_present_any = ["affine", "bundled"], conflicts_with_all = ["affine", "bundled"])]
    path: Option<PathBuf>,
    /// Affine quandle on Z_M with x ▷ y = T·x + (1 - T)·y.
    #[arg(long, num_args = 2, value_names = ["M", "T"], allow_negative_numbers = true, conflicts_with = "bundled")]
    affine: Option<Vec<i64>>,
    #[arg(long, value_enum)]
    bundled: Option<Bundled>,
    #[arg(long, value_enum, default_value = "right")]
    convention: ConventionArg,
    /// Table entries run from 1 to n.
    #[arg(long)]
    one_indexed: bool,
}

struct Input {
    quandle: CayleyQuandle,
    label: String,
    spec: Option<AffineSpec>,
}

enum LoadError {
    Table(TableError),
    Other(anyhow::Error),
}

impl From<anyhow::Error> for LoadError {
    fn from(e: anyhow::Error) -> Self {
        LoadError::Other(e)
    }
}

impl InputArgs {
    fn load(&self) -> std::result::Result<Input, LoadError> {
        if let Some(mt) = &self.affine {
            let m = u64::try_from(mt[0]).map_err(|_| anyhow::anyhow!("modulus must be positive"))?;
            let spec = AffineSpec::new(m, mt[1]).map_err(anyhow::Error::from)?;
            return Ok(Input {
                quandle: affine_quandle(&spec),
                label: report::spec_label(&spec),
                spec: Some(spec),
            });
        }
        let (text, label, format) = match (self.bundled, &self.path) {
            (Some(Bundled::Order12), _) => (
                bundled_order12_text().to_string(),
                "bundled:order12".to_string(),
                TableFormat::BUNDLED,
            ),
            (None, Some(path)) => {
                let text = if path.as_os_str() == "-" {
                    std::io::read_to_string(std::io::stdin()).context("reading standard input")?
                } else {
                    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
                };
                let format = TableFormat {
                    one_indexed: self.one_indexed,
                    convention: match self.convention {
                        ConventionArg::Left => Convention::Left,
                        ConventionArg::Right => Convention::Right,
                    },
                };
                (text, format!("file:{}", path.display()), format)
            }
            (None, None) => unreachable!("clap requires an input"),
        };
        let quandle = parse_table(&text, format).map_err(LoadError::Table)?;
        Ok(Input {
            quandle,
            label,
            spec: None,
        })
    }

    fn require(&self) -> Result<Input> {
        match self.load() {
            Ok(i) => Ok(i),
            Err(LoadError::Table(e)) => Err(e.into()),
            Err(LoadError::Other(e)) => Err(e),
        }
    }
}

fn emit_json(path: &Option<PathBuf>, text: &str) -> Result<()> {
    match path {
        None => Ok(()),
        Some(p) if p.as_os_str() == "-" => {
            println!("{text}");
            Ok(())
        }
        Some(p) => fs::write(p, format!("{text}\n")).with_context(|| format!("writing {}", p.display())),
    }
}

fn pretty(v: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn validate(input: &InputArgs) -> Result<ExitCode> {
    match input.load() {
        Ok(i) => {
            println!("valid quandle of order {}", i.quandle.order());
            Ok(ExitCode::SUCCESS)
        }
        Err(LoadError::Table(TableError::Quandle(QuandleError::AxiomViolation(v)))) => {
            println!("invalid: {v}");
            Ok(ExitCode::from(1))
        }
        Err(LoadError::Table(e)) => Err(e.into()),
        Err(LoadError::Other(e)) => Err(e),
    }
}

fn analyze(input: &InputArgs, json: &Option<PathBuf>, tol: f64) -> Result<()> {
    let i = input.require()?;
    let opts = AnalysisOptions {
        tol,
        known_affine: i.spec,
    };
    let r = report::analyze(&i.quandle, i.label, &opts)?;
    println!("input             {}", r.input);
    println!("order             {}", r.order);
    println!("connected         {}", r.connected);
    println!("latin             {}", r.latin);
    println!("affine            {}", describe_affine(&r.affine));
    println!("|Inn|             {}", r.inner_order);
    println!("|stabilizer|      {}", r.stabilizer_order);
    println!("rank              {}", r.rank);
    println!("tensor classes    {}", r.tensor_size);
    println!("tau classes       {}", r.tau_size);
    println!("R_0               {}", r.r0_cycles);
    println!("multiplicity-free {}", r.multiplicity_free);
    println!("Gelfand pair      {}", r.gelfand_pair);
    if let Some(d) = &r.decomposition {
        let parts: Vec<String> = d.multiplicities.iter().map(|(l, m)| format!("{l}:{m}")).collect();
        println!("decomposition     {}", parts.join(" "));
    }
    for w in &r.warnings {
        println!("warning: {w}");
    }
    emit_json(json, &report::to_json(&r))
}

fn describe_affine(a: &AffineMatch) -> String {
    match a {
        AffineMatch::Cyclic { m, t } => format!("Z_{m}, t = {t}"),
        AffineMatch::Abelian { factors, automorphism } => {
            let f: Vec<String> = factors.iter().map(|m| format!("Z_{m}")).collect();
            format!("{}, f = {automorphism}", f.join(" x "))
        }
        AffineMatch::None => "no".into(),
        AffineMatch::Unknown => "unknown".into(),
    }
}

fn tensor(input: &InputArgs, tau: bool, json: &Option<PathBuf>) -> Result<()> {
    let i = input.require()?;
    let t = tensor_square(&i.quandle);
    println!("{} classes", t.len());
    for (rep, size) in t.representatives().iter().zip(t.sizes()) {
        println!("[({},{})] size {size}", rep.0, rep.1);
    }
    let mut out = json!({
        "schema": report::SCHEMA_VERSION,
        "input": i.label,
        "representatives": t.representatives(),
        "sizes": t.sizes(),
    });
    if tau {
        let q = tau_quotient(&t);
        println!("{} classes modulo tau", q.len());
        for (rep, merged) in q.representatives.iter().zip(&q.classes) {
            println!("[({},{})] merges {merged:?}", rep.0, rep.1);
        }
        out["tau"] = json!(q);
    }
    emit_json(json, &pretty(&out))
}

fn decompose(input: &InputArgs, tol: f64, json: &Option<PathBuf>) -> Result<()> {
    let i = input.require()?;
    let spec = match i.spec {
        Some(s) => s,
        None => match recognize_affine(&i.quandle) {
            AffineMatch::Cyclic { m, t } => AffineSpec::new(m, t as i64)?,
            _ => bail!("decompose needs an affine quandle on Z_p"),
        },
    };
    let d = decompose_prime_affine(&spec, tol)?;
    for ((label, m), deg) in d.multiplicities.iter().zip(&d.degrees) {
        println!("{label:<8} degree {deg:<3} multiplicity {m}");
    }
    println!("multiplicity-free {}", d.is_multiplicity_free);
    println!("rank {}", d.rank);
    emit_json(json, &pretty(&d))
}

fn gelfand(input: &InputArgs, json: &Option<PathBuf>) -> Result<()> {
    let i = input.require()?;
    let mf = is_multiplicity_free(&i.quandle)?;
    let g = inner_group(&i.quandle)?;
    let k = g.stabilizer(0);
    let dc = double_cosets(&g, &k)?;
    let gp = is_gelfand_pair(&g, &k)?;
    println!("orbital matrices commute  {}", mf.multiplicity_free);
    if let Certificate::NonCommuting {
        first,
        second,
        row,
        col,
        product,
        reversed,
    } = &mf.certificate
    {
        println!(
            "witness: (M{first} M{second})[{row}][{col}] = {product}, (M{second} M{first})[{row}][{col}] = {reversed}"
        );
    }
    println!("double cosets K\\G/K       {}", dc.len());
    println!("Gelfand pair (Inn, stab)  {gp}");
    emit_json(
        json,
        &pretty(&json!({
            "schema": report::SCHEMA_VERSION,
            "input": i.label,
            "multiplicity_free": mf.multiplicity_free,
            "certificate": mf.certificate,
            "double_cosets": dc.len(),
            "gelfand_pair": gp,
        })),
    )
}

fn scan(max_order: u64, affine_only: bool, json: &Option<PathBuf>) -> Result<()> {
    let s = report::scan(max_order, affine_only)?;
    println!(
        "{:<18} {:>5} {:>3} {:>5} {:>5} {:>7} {:>5} {:>6} {:>8}",
        "input", "order", "n", "|Inn|", "rank", "tensor", "tau", "MF", "Gelfand"
    );
    for r in &s.rows {
        println!(
            "{:<18} {:>5} {:>3} {:>5} {:>5} {:>7} {:>5} {:>6} {:>8}",
            r.input,
            r.order,
            r.rotation_order.map_or("-".into(), |n| n.to_string()),
            r.inner_order,
            r.rank,
            r.tensor_size,
            r.tau_size,
            r.multiplicity_free.to_string(),
            r.gelfand_pair.to_string(),
        );
    }
    if s.all_affine_multiplicity_free {
        println!("all {} affine rows multiplicity-free", s.affine_rows);
    } else {
        println!(
            "{} affine rows NOT multiplicity-free: {}",
            s.affine_non_multiplicity_free.len(),
            s.affine_non_multiplicity_free.join(", ")
        );
    }
    emit_json(json, &pretty(&s))
}

fn run(cli: Cli) -> Result<ExitCode> {
    match &cli.command {
        Command::Validate(input) => return validate(input),
        Command::Analyze { input, json, tol } => analyze(input, json, *tol)?,
        Command::Tensor { input, tau, json } => tensor(input, *tau, json)?,
        Command::Decompose { input, tol, json } => decompose(input, *tol, json)?,
        Command::Gelfand { input, json } => gelfand(input, json)?,
        Command::Scan {
            max_order,
            affine_only,
            json,
        } => scan(*max_order, *affine_only, json)?,
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
