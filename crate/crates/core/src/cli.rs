//! JSON document format and the `ohgraph` command-line front end.
//!
//! A document lists vertex labels and, per edge, its label and signed
//! incidences by vertex label. Serialization is canonical: fixed key order,
//! incidences sorted by vertex within each edge, 2-space indentation, trailing
//! newline.
//!
//! Exit codes: 0 success (all bounds hold), 1 usage or input error, 2 a
//! verified bound violation.

use std::collections::HashMap;
use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::bounds::{all_hold, verify_with, Bound, VerifyOptions};
use crate::error::{Error, Result};
use crate::linalg::Spectrum;
use crate::matrices::{bundle, IntMatrix};
use crate::model::OrientedHypergraph;
use crate::oracle::{
    cospectral_pair_search, random_instance, switching_equivalent, GeneratorConfig,
};
use crate::spectra::{
    adjacency_spectrum, is_cospectral, laplacian_spectrum, relative_tolerance,
    same_nonzero_spectrum,
};
use crate::transform::{dual, switch, weak_delete_edge, weak_delete_vertex, SwitchingFunction};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeEntry {
    pub label: String,
    pub incidences: Vec<IncidenceEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IncidenceEntry {
    pub v: String,
    pub sign: i64,
}

impl Document {
    pub fn from_graph(g: &OrientedHypergraph) -> Self {
        Self {
            vertices: g.vertex_labels().to_vec(),
            edges: g
                .edges()
                .map(|e| EdgeEntry {
                    label: g.edge_label(e).to_string(),
                    incidences: g
                        .edge(e)
                        .iter()
                        .map(|inc| IncidenceEntry {
                            v: g.vertex_label(inc.vertex).to_string(),
                            sign: inc.sign.value(),
                        })
                        .collect(),
                })
                .collect(),
        }
    }

    pub fn to_graph(&self) -> Result<OrientedHypergraph> {
        let index: HashMap<&str, usize> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(i, label)| (label.as_str(), i))
            .collect();
        let mut incidences = Vec::new();
        for (e, edge) in self.edges.iter().enumerate() {
            for inc in &edge.incidences {
                let v = *index.get(inc.v.as_str()).ok_or_else(|| {
                    Error::Schema(format!("edges[{e}].incidences: unknown vertex {:?}", inc.v))
                })?;
                incidences.push((v, e, inc.sign));
            }
        }
        let edge_labels = self.edges.iter().map(|e| e.label.clone()).collect();
        OrientedHypergraph::with_labels(self.vertices.clone(), edge_labels, &incidences)
    }
}

fn json_error(err: serde_json::Error) -> Error {
    use serde_json::error::Category;
    match err.classify() {
        Category::Data => Error::Schema(err.to_string()),
        Category::Syntax | Category::Eof | Category::Io => Error::Syntax {
            line: err.line(),
            column: err.column(),
            message: err.to_string(),
        },
    }
}

/// Parses a UTF-8 JSON document; vertex and edge indices follow document order.
pub fn parse(text: &[u8]) -> Result<OrientedHypergraph> {
    serde_json::from_slice::<Document>(text)
        .map_err(json_error)?
        .to_graph()
}

/// Canonical document text.
pub fn serialize(g: &OrientedHypergraph) -> String {
    let mut out =
        serde_json::to_string_pretty(&Document::from_graph(g)).expect("documents serialize");
    out.push('\n');
    out
}

/// Rounds to 12 significant digits; `-0` becomes `0`.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() {
        return x;
    }
    let rounded: f64 = format!("{x:.11e}")
        .parse()
        .expect("round trip of formatted float");
    if rounded == 0.0 {
        0.0
    } else {
        rounded
    }
}

fn round_value(v: &mut Value) {
    match v {
        Value::Number(num) if num.is_f64() => {
            let x = round_sig(num.as_f64().expect("f64 number"));
            if let Some(n) = serde_json::Number::from_f64(x) {
                *num = n;
            }
        }
        Value::Array(items) => items.iter_mut().for_each(round_value),
        Value::Object(map) => map.values_mut().for_each(round_value),
        _ => {}
    }
}

fn to_json<T: Serialize>(value: &T, pretty: bool) -> String {
    let mut v = serde_json::to_value(value).expect("reports serialize");
    round_value(&mut v);
    let mut s = if pretty {
        serde_json::to_string_pretty(&v)
    } else {
        serde_json::to_string(&v)
    }
    .expect("values serialize");
    s.push('\n');
    s
}

/// Spectrum values for display: zero-band values snap to `0`, then 12
/// significant digits.
fn display_values(sp: &Spectrum) -> Vec<f64> {
    let band = relative_tolerance(sp.values().iter().fold(0.0, |acc: f64, x| acc.max(x.abs())));
    sp.values()
        .iter()
        .map(|&x| if x.abs() <= band { 0.0 } else { round_sig(x) })
        .collect()
}

#[derive(Debug, Parser)]
#[command(
    name = "ohgraph",
    version,
    about = "Oriented hypergraph spectra and eigenvalue bounds"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    #[value(name = "H", alias = "h")]
    H,
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "D", alias = "d")]
    D,
    #[value(name = "L", alias = "l")]
    L,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MatrixKind {
    Adjacency,
    Laplacian,
}

#[derive(Debug, Clone, Args)]
pub struct GeneratorArgs {
    #[arg(long)]
    pub seed: u64,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub m: usize,
    #[arg(long, default_value_t = 0)]
    pub size_min: usize,
    /// Defaults to `min(n, 3)`.
    #[arg(long)]
    pub size_max: Option<usize>,
    #[arg(long, default_value_t = 0.5)]
    pub p_neg: f64,
}

impl GeneratorArgs {
    fn config(&self) -> GeneratorConfig {
        GeneratorConfig {
            seed: self.seed,
            n: self.n,
            m: self.m,
            size_min: self.size_min,
            size_max: self.size_max.unwrap_or(self.n.min(3)),
            p_negative: self.p_neg,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print incidence, adjacency, degree and Laplacian matrices.
    Matrices {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "all")]
        which: Which,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Print sorted eigenvalues.
    Spectrum {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "laplacian")]
        matrix: MatrixKind,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print the incidence dual.
    Dual { file: PathBuf },
    /// Apply a vertex switching, e.g. `--zeta +,-,+`.
    Switch {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        zeta: String,
    },
    /// Weakly delete a vertex by label.
    DeleteVertex {
        file: PathBuf,
        #[arg(long = "v")]
        vertex: String,
    },
    /// Weakly delete an edge by label.
    DeleteEdge {
        file: PathBuf,
        #[arg(long = "e")]
        edge: String,
    },
    /// Evaluate every applicable eigenvalue bound.
    Verify {
        file: PathBuf,
        #[arg(long)]
        only: Option<String>,
        /// Moment order for both moment bounds, replacing the default 1, 2, 3.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        k: Option<u32>,
    },
    /// Compare two spectra.
    Cospectral {
        first: PathBuf,
        second: PathBuf,
        #[arg(long, value_enum, default_value = "laplacian")]
        matrix: MatrixKind,
        /// Compare nonzero eigenvalues only.
        #[arg(long)]
        nonzero: bool,
    },
    /// Search for a switching function taking the first file to the second.
    SwitchEquiv { first: PathBuf, second: PathBuf },
    /// Generate a seeded random instance.
    Random {
        #[command(flatten)]
        generator: GeneratorArgs,
    },
    /// Search random pairs for unexplained Laplacian cospectrality.
    Hunt {
        #[arg(long)]
        trials: u64,
        #[command(flatten)]
        generator: GeneratorArgs,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn input_error(message: impl std::fmt::Display) -> Self {
        Self {
            code: 1,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

#[derive(Debug)]
enum Failure {
    Library(Error),
    Input(String),
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        Failure::Library(err)
    }
}

fn load(path: &Path) -> std::result::Result<OrientedHypergraph, Failure> {
    let bytes = fs::read(path)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
    parse(&bytes).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn spectrum_of(g: &OrientedHypergraph, kind: MatrixKind) -> Result<Spectrum> {
    match kind {
        MatrixKind::Adjacency => adjacency_spectrum(g),
        MatrixKind::Laplacian => laplacian_spectrum(g),
    }
}

fn matrix_name(kind: MatrixKind) -> &'static str {
    match kind {
        MatrixKind::Adjacency => "adjacency",
        MatrixKind::Laplacian => "laplacian",
    }
}

#[derive(Serialize)]
struct MatrixOutput {
    #[serde(rename = "H", skip_serializing_if = "Option::is_none")]
    h: Option<Vec<Vec<i64>>>,
    #[serde(rename = "A", skip_serializing_if = "Option::is_none")]
    a: Option<Vec<Vec<i64>>>,
    #[serde(rename = "D", skip_serializing_if = "Option::is_none")]
    d: Option<Vec<Vec<i64>>>,
    #[serde(rename = "L", skip_serializing_if = "Option::is_none")]
    l: Option<Vec<Vec<i64>>>,
}

fn matrix_text(name: &str, m: &IntMatrix) -> String {
    let mut out = format!("{name} ({}x{})\n", m.rows(), m.cols());
    for row in m.to_rows() {
        let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
        out.push_str(cells.join(" ").trim_end());
        out.push('\n');
    }
    out
}

fn matrices(g: &OrientedHypergraph, which: Which, format: Format) -> Result<String> {
    let b = bundle(g)?;
    let wanted = |w: Which| which == Which::All || which == w;
    let chosen: Vec<(Which, &str, &IntMatrix)> = [
        (Which::H, "H", &b.incidence),
        (Which::A, "A", b.adjacency.as_dense()),
        (Which::D, "D", b.degree.as_dense()),
        (Which::L, "L", b.laplacian.as_dense()),
    ]
    .into_iter()
    .filter(|(w, _, _)| wanted(*w))
    .collect();
    Ok(match format {
        Format::Text => chosen
            .iter()
            .map(|(_, name, m)| matrix_text(name, m))
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Json => {
            let pick = |w: Which| chosen.iter().find(|c| c.0 == w).map(|c| c.2.to_rows());
            to_json(
                &MatrixOutput {
                    h: pick(Which::H),
                    a: pick(Which::A),
                    d: pick(Which::D),
                    l: pick(Which::L),
                },
                true,
            )
        }
    })
}

#[derive(Serialize)]
struct CospectralVerdict {
    matrix: &'static str,
    mode: &'static str,
    cospectral: bool,
    spectra: [Vec<f64>; 2],
}

#[derive(Serialize)]
struct SwitchVerdict {
    found: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    zeta: Option<String>,
}

#[derive(Serialize)]
struct HuntLine {
    trial: u64,
    kind: &'static str,
    first: Document,
    second: Document,
}

fn execute(command: Command) -> std::result::Result<Outcome, Failure> {
    let out = match command {
        Command::Matrices {
            file,
            which,
            format,
        } => Outcome::ok(matrices(&load(&file)?, which, format)?),
        Command::Spectrum {
            file,
            matrix,
            format,
        } => {
            let values = display_values(&spectrum_of(&load(&file)?, matrix)?);
            Outcome::ok(match format {
                Format::Json => to_json(&values, false),
                Format::Text => values.iter().map(|x| format!("{x}\n")).collect(),
            })
        }
        Command::Dual { file } => Outcome::ok(serialize(&dual(&load(&file)?))),
        Command::Switch { file, zeta } => {
            let g = load(&file)?;
            let zeta: SwitchingFunction = zeta.parse()?;
            Outcome::ok(serialize(&switch(&g, &zeta)?))
        }
        Command::DeleteVertex { file, vertex } => {
            let g = load(&file)?;
            let v = g
                .vertex_by_label(&vertex)
                .ok_or_else(|| Failure::Input(format!("unknown vertex label {vertex:?}")))?;
            Outcome::ok(serialize(&weak_delete_vertex(&g, v)?.graph))
        }
        Command::DeleteEdge { file, edge } => {
            let g = load(&file)?;
            let e = g
                .edge_by_label(&edge)
                .ok_or_else(|| Failure::Input(format!("unknown edge label {edge:?}")))?;
            Outcome::ok(serialize(&weak_delete_edge(&g, e)?.graph))
        }
        Command::Verify { file, only, k } => {
            let g = load(&file)?;
            let mut opts = VerifyOptions::default();
            if let Some(name) = only {
                let bound = Bound::from_name(&name).ok_or_else(|| {
                    let known: Vec<_> = Bound::ALL.iter().map(|b| b.name()).collect();
                    Failure::Input(format!(
                        "unknown bound {name:?}; expected one of {}",
                        known.join(", ")
                    ))
                })?;
                opts.only = Some(bound);
            }
            if let Some(k) = k {
                opts.moment_orders = vec![k];
            }
            let checks = verify_with(&g, &opts)?;
            let mut out = Outcome::ok(to_json(&checks, true));
            if !all_hold(&checks) {
                out.code = 2;
                out.stderr = "error: bound violation detected\n".into();
            }
            out
        }
        Command::Cospectral {
            first,
            second,
            matrix,
            nonzero,
        } => {
            let (a, b) = (
                spectrum_of(&load(&first)?, matrix)?,
                spectrum_of(&load(&second)?, matrix)?,
            );
            let cospectral = if nonzero {
                same_nonzero_spectrum(&a, &b, None)
            } else {
                a.order() == b.order() && is_cospectral(&a, &b, None)?
            };
            Outcome::ok(to_json(
                &CospectralVerdict {
                    matrix: matrix_name(matrix),
                    mode: if nonzero { "nonzero" } else { "full" },
                    cospectral,
                    spectra: [display_values(&a), display_values(&b)],
                },
                true,
            ))
        }
        Command::SwitchEquiv { first, second } => {
            let w = switching_equivalent(&load(&first)?, &load(&second)?)?;
            Outcome::ok(to_json(
                &SwitchVerdict {
                    found: w.found(),
                    zeta: w.zeta.map(|z| z.to_string()),
                },
                true,
            ))
        }
        Command::Random { generator } => {
            Outcome::ok(serialize(&random_instance(&generator.config())?))
        }
        Command::Hunt { trials, generator } => {
            let finds = cospectral_pair_search(&generator.config(), trials)?;
            Outcome::ok(
                finds
                    .iter()
                    .map(|f| {
                        to_json(
                            &HuntLine {
                                trial: f.trial,
                                kind: f.kind.as_str(),
                                first: Document::from_graph(&f.first),
                                second: Document::from_graph(&f.second),
                            },
                            false,
                        )
                    })
                    .collect(),
            )
        }
    };
    Ok(out)
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let text = err.render().to_string();
            return if err.use_stderr() {
                Outcome {
                    code: 1,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::ok(text)
            };
        }
    };
    match execute(cli.command) {
        Ok(out) => out,
        Err(Failure::Library(err)) => Outcome::input_error(err),
        Err(Failure::Input(message)) => Outcome::input_error(message),
    }
}
