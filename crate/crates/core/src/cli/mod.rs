//! The `framelink` command line.
//!
//! Exit status: 0 on success, 1 on a domain error (reported as JSON on
//! stderr with a stable `code`), 2 on a usage error.

mod render;

use std::ffi::OsString;
use std::io::{IsTerminal, Read, Write};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::codecs::{
    diagram_to_dt, diagram_to_gauss, dt_to_diagram, gauss_to_diagram, parse_pd_file, serialize_pd, write_framed_link,
    DtCode, FramedLinkDoc, GaussCode,
};
use crate::diagram::{ComponentId, LinkDiagram};
use crate::geometry::{self, FramePair, Vec3};
use crate::invariants::{blackboard_framing, component_writhes, linking_matrix, total_writhe, FramedLink};
use crate::moves::{enumerate_moves, framed_equivalent_with, realize_framing, Budget, MoveKind};
use crate::surgery::{first_homology, recognize, SurgeryDescription};
use crate::torus::{self, PeripheralClass, TorusClass};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Notation {
    Pd,
    Gauss,
    Dt,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "framelink", version, about = "Framed links: diagrams, invariants, moves, surgery and curves")]
pub struct Cli {
    /// Output format (default: table on a terminal, json otherwise).
    #[arg(long, value_enum, global = true)]
    pub format: Option<Format>,
    /// Worker threads for the equivalence search (0 = automatic).
    #[arg(long, global = true, default_value_t = 0)]
    pub threads: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse links and report basic data, one record per link.
    Parse {
        input: String,
        #[arg(long, value_enum, default_value = "pd")]
        from: Notation,
    },
    /// Writhe, framings and linking matrix.
    Inv { input: String },
    /// List applicable move sites.
    Moves {
        input: String,
        /// Comma-separated kinds, e.g. R1_add,R3 (default: all).
        #[arg(long, value_delimiter = ',')]
        kinds: Vec<MoveKind>,
    },
    /// Bounded search for a framed move sequence between two diagrams.
    Equiv {
        first: String,
        second: String,
        #[arg(long)]
        depth: Option<usize>,
        /// Largest crossing count allowed along the path.
        #[arg(long)]
        maxx: Option<usize>,
        #[arg(long)]
        max_nodes: Option<usize>,
    },
    /// Curve classes on the boundary torus.
    Torus {
        #[command(subcommand)]
        op: TorusOp,
    },
    /// Surgery coefficients, recognized manifold and first homology.
    Surgery { input: String },
    /// Polygonal space curves read from CSV.
    Geom {
        #[command(subcommand)]
        op: GeomOp,
    },
    /// Convert between notations.
    Convert {
        input: String,
        #[arg(long, value_enum, default_value = "pd")]
        from: Notation,
        #[arg(long, value_enum)]
        to: Notation,
    },
}

#[derive(Debug, Subcommand)]
pub enum TorusOp {
    #[command(allow_negative_numbers = true)]
    Embeddable { a: i64, b: i64 },
    #[command(allow_negative_numbers = true)]
    Normalize { a: i64, b: i64 },
    /// Longitude class of framing n.
    #[command(allow_negative_numbers = true)]
    Longitude { n: i64 },
    /// Framing of the class m[eta] + l[gamma].
    #[command(allow_negative_numbers = true)]
    Framing { meridian: i64, longitude: i64 },
}

#[derive(Debug, Subcommand)]
pub enum GeomOp {
    /// Linking numbers of every curve pair, by integral and by projection.
    Lk {
        input: String,
        #[arg(long, value_delimiter = ',', num_args = 1, allow_negative_numbers = true)]
        direction: Option<Vec<f64>>,
    },
    /// Project the curves to a PD code.
    Project {
        input: String,
        #[arg(long, value_delimiter = ',', num_args = 1, allow_negative_numbers = true)]
        direction: Option<Vec<f64>>,
    },
    /// Twist of the second curve's normals relative to the first's (same vertices).
    Twist { input: String },
    /// Linking number of the first curve with its pushoff along its normals.
    Pushoff {
        input: String,
        #[arg(long, default_value_t = 0.05)]
        offset: f64,
    },
}

/// A domain failure with a stable code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: String,
    pub message: String,
}

impl CliError {
    fn new(code: &str, message: impl Into<String>) -> Self {
        CliError {
            code: code.into(),
            message: message.into(),
        }
    }
}

macro_rules! from_domain {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::new(e.code(), e.to_string())
            }
        }
    )*};
}

from_domain!(
    crate::codecs::CodecError,
    crate::diagram::DiagramError,
    crate::invariants::InvariantError,
    crate::moves::MoveError,
    crate::surgery::SurgeryError,
    crate::torus::TorusError,
    crate::geometry::GeometryError
);

/// I/O handles for one invocation.
pub struct Io<'a> {
    pub stdin: &'a mut dyn Read,
    pub stdout: &'a mut dyn Write,
    pub stderr: &'a mut dyn Write,
    pub stdout_is_tty: bool,
    /// Seed for projection retries.
    pub seed: u64,
}

/// Runs the binary with the process environment.
pub fn main_with_env() -> i32 {
    let seed = std::env::var("FRAMELINK_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(0);
    let stdout = std::io::stdout();
    let tty = stdout.is_terminal();
    let mut io = Io {
        stdin: &mut std::io::stdin(),
        stdout: &mut stdout.lock(),
        stderr: &mut std::io::stderr(),
        stdout_is_tty: tty,
        seed,
    };
    run(std::env::args_os(), &mut io)
}

pub fn run<I, T>(args: I, io: &mut Io<'_>) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { io.stdout } else { io.stderr };
            let _ = write!(sink, "{text}");
            return code;
        }
    };
    let format = cli
        .format
        .unwrap_or(if io.stdout_is_tty { Format::Table } else { Format::Json });
    match execute(&cli, io) {
        Ok(value) => {
            let text = match format {
                Format::Json => serde_json::to_string_pretty(&value).expect("json values serialize") + "\n",
                Format::Table => render::table(&value),
            };
            let _ = io.stdout.write_all(text.as_bytes());
            0
        }
        Err(e) => {
            let body = json!({"error": {"code": e.code, "message": e.message}});
            let _ = writeln!(io.stderr, "{body}");
            1
        }
    }
}

fn read_input(path: &str, io: &mut Io<'_>) -> Result<String, CliError> {
    let mut text = String::new();
    let res = if path == "-" {
        io.stdin.read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| CliError::new("IoError", format!("{path}: {e}")))?;
    Ok(text)
}

fn looks_like_json(text: &str) -> bool {
    text.trim_start().starts_with('{')
}

/// First link of a PD file, or the framed link of a JSON document. PD input
/// gets the blackboard framing.
fn read_framed(text: &str) -> Result<FramedLink, CliError> {
    if looks_like_json(text) {
        Ok(FramedLinkDoc::from_json(text)?.to_framed_link()?)
    } else {
        let d = parse_pd_file(text)?.into_iter().next().map(|(_, d)| d).unwrap_or_default();
        Ok(blackboard_framing(&d))
    }
}

fn read_diagrams(text: &str, from: Notation) -> Result<Vec<LinkDiagram>, CliError> {
    Ok(match from {
        Notation::Pd => parse_pd_file(text)?.into_iter().map(|(_, d)| d).collect(),
        Notation::Json => vec![FramedLinkDoc::from_json(text)?.to_framed_link()?.into_parts().0],
        Notation::Gauss => lines(text)
            .map(|l| Ok(gauss_to_diagram(&l.parse::<GaussCode>()?)?))
            .collect::<Result<_, CliError>>()?,
        Notation::Dt => lines(text)
            .map(|l| Ok(dt_to_diagram(&l.parse::<DtCode>()?)?.diagram))
            .collect::<Result<_, CliError>>()?,
    })
}

fn lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
}

fn encode(d: &LinkDiagram, to: Notation) -> Result<String, CliError> {
    Ok(match to {
        Notation::Pd => serialize_pd(d),
        Notation::Gauss => diagram_to_gauss(&d.canonical()).to_string(),
        Notation::Dt => diagram_to_dt(&d.canonical())?.to_string(),
        Notation::Json => write_framed_link(&blackboard_framing(d)),
    })
}

fn direction(v: &Option<Vec<f64>>) -> Result<Option<Vec3>, CliError> {
    match v {
        None => Ok(None),
        Some(v) if v.len() == 3 => Ok(Some(Vec3::new(v[0], v[1], v[2]))),
        Some(_) => Err(CliError::new("UsageError", "--direction takes three comma-separated numbers")),
    }
}

fn execute(cli: &Cli, io: &mut Io<'_>) -> Result<Value, CliError> {
    match &cli.command {
        Command::Parse { input, from } => {
            let text = read_input(input, io)?;
            let records: Vec<Value> = read_diagrams(&text, *from)?
                .iter()
                .map(|d| {
                    json!({
                        "pd": serialize_pd(d),
                        "crossings": d.crossing_count(),
                        "components": d.component_count(),
                        "planar": d.is_planar(),
                    })
                })
                .collect();
            Ok(Value::Array(records))
        }
        Command::Inv { input } => {
            let fl = read_framed(&read_input(input, io)?)?;
            let d = fl.diagram();
            Ok(json!({
                "pd": serialize_pd(d),
                "components": d.component_count(),
                "crossings": d.crossing_count(),
                "writhe": total_writhe(d),
                "component_writhes": component_writhes(d),
                "framings": fl.framings(),
                "linking_matrix": linking_matrix(&fl)?,
            }))
        }
        Command::Moves { input, kinds } => {
            let fl = read_framed(&read_input(input, io)?)?;
            let kinds = if kinds.is_empty() { MoveKind::ALL.to_vec() } else { kinds.clone() };
            Ok(serde_json::to_value(enumerate_moves(fl.diagram(), &kinds)).expect("sites serialize"))
        }
        Command::Equiv {
            first,
            second,
            depth,
            maxx,
            max_nodes,
        } => {
            let a = realize_framing(&read_framed(&read_input(first, io)?)?);
            let b = realize_framing(&read_framed(&read_input(second, io)?)?);
            let mut budget = Budget::for_inputs(&a, &b);
            if let Some(x) = depth {
                budget.max_depth = *x;
            }
            if let Some(x) = maxx {
                budget.max_crossings = *x;
            }
            if let Some(x) = max_nodes {
                budget.max_nodes = *x;
            }
            let r = framed_equivalent_with(&a, &b, budget, cli.threads);
            Ok(serde_json::to_value(r).expect("results serialize"))
        }
        Command::Torus { op } => Ok(match op {
            TorusOp::Embeddable { a, b } => json!({"embeddable": torus::is_embeddable(TorusClass::new(*a, *b))}),
            TorusOp::Normalize { a, b } => json!(torus::normalize(TorusClass::new(*a, *b))),
            TorusOp::Longitude { n } => json!(torus::framing_to_longitude(*n)),
            TorusOp::Framing { meridian, longitude } => {
                let f = torus::longitude_to_framing(PeripheralClass {
                    meridian_coeff: *meridian,
                    longitude_coeff: *longitude,
                })?;
                json!({"framing": f})
            }
        }),
        Command::Surgery { input } => {
            let text = read_input(input, io)?;
            let s = if looks_like_json(&text) {
                SurgeryDescription::from_doc(&FramedLinkDoc::from_json(&text)?)?
            } else {
                SurgeryDescription::from_framed_link(&read_framed(&text)?)
            };
            let rec = recognize(&s);
            let h1 = first_homology(&s).ok().map(|h| {
                json!({"rank": h.rank, "torsion": h.torsion, "group": h.to_string()})
            });
            Ok(json!({
                "coefficients": s.coefficients(),
                "recognized": rec.tag,
                "evidence": rec.evidence,
                "H1": h1,
            }))
        }
        Command::Geom { op } => geom(op, io),
        Command::Convert { input, from, to } => {
            let text = read_input(input, io)?;
            let codes = read_diagrams(&text, *from)?
                .iter()
                .map(|d| encode(d, *to))
                .collect::<Result<Vec<String>, CliError>>()?;
            Ok(json!(codes))
        }
    }
}

fn geom(op: &GeomOp, io: &mut Io<'_>) -> Result<Value, CliError> {
    let curves = |path: &str, io: &mut Io<'_>| -> Result<Vec<geometry::SpaceCurve>, CliError> {
        Ok(geometry::parse_curves(&read_input(path, io)?)?)
    };
    match op {
        GeomOp::Lk { input, direction: dir } => {
            let cs = curves(input, io)?;
            let p = geometry::project_to_diagram(&cs, direction(dir)?, io.seed)?;
            let mut pairs = Vec::new();
            for i in 0..cs.len() {
                for j in i + 1..cs.len() {
                    let g = geometry::gauss_linking(&cs[i], &cs[j])?;
                    let d = crate::invariants::linking_number(&p.diagram, p.components[i], p.components[j])?;
                    pairs.push(json!({"first": i, "second": j, "gauss": g, "projected": d}));
                }
            }
            Ok(Value::Array(pairs))
        }
        GeomOp::Project { input, direction: dir } => {
            let cs = curves(input, io)?;
            let p = geometry::project_to_diagram(&cs, direction(dir)?, io.seed)?;
            let comps: Vec<usize> = p.components.iter().map(|c: &ComponentId| c.0).collect();
            Ok(json!({
                "pd": serialize_pd(&p.diagram),
                "crossings": p.diagram.crossing_count(),
                "components": comps,
                "direction": [p.direction.x, p.direction.y, p.direction.z],
                "attempts": p.attempts,
            }))
        }
        GeomOp::Twist { input } => {
            let cs = curves(input, io)?;
            let [reference, candidate] = cs.as_slice() else {
                return Err(CliError::new("UsageError", "twist needs exactly two curve blocks"));
            };
            if reference.vertices() != candidate.vertices() {
                return Err(CliError::new("UsageError", "both blocks must list the same vertices"));
            }
            let field = |c: &geometry::SpaceCurve| c.normals().map(<[Vec3]>::to_vec).ok_or(geometry::GeometryError::MissingNormals);
            let fp = FramePair {
                reference: field(reference)?,
                candidate: field(candidate)?,
            };
            Ok(json!({"twist": geometry::relative_twist(reference, &fp)?}))
        }
        GeomOp::Pushoff { input, offset } => {
            let cs = curves(input, io)?;
            let c = cs.first().ok_or_else(|| CliError::new("UsageError", "no curve in input"))?;
            let p = geometry::pushoff_curve(c, *offset)?;
            Ok(json!({"offset": offset, "linking": geometry::gauss_linking(c, &p)?}))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], stdin: &str) -> (i32, String, String) {
        let mut input = stdin.as_bytes();
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut io = Io {
            stdin: &mut input,
            stdout: &mut out,
            stderr: &mut err,
            stdout_is_tty: false,
            seed: 0,
        };
        let mut argv = vec!["framelink"];
        argv.extend_from_slice(args);
        let code = run(argv, &mut io);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    fn json_out(args: &[&str], stdin: &str) -> Value {
        let (code, out, err) = call(args, stdin);
        assert_eq!(code, 0, "{err}");
        serde_json::from_str(&out).unwrap()
    }

    const TREFOIL: &str = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]\n";

    #[test]
    fn inv_trefoil() {
        let v = json_out(&["inv", "-"], TREFOIL);
        assert_eq!(v["writhe"], -3);
        assert_eq!(v["linking_matrix"], json!([[-3]]));
    }

    #[test]
    fn torus_commands() {
        assert_eq!(json_out(&["torus", "embeddable", "2", "0"], ""), json!({"embeddable": false}));
        assert_eq!(json_out(&["torus", "normalize", "-2", "-3"], ""), json!({"a": 2, "b": 3}));
        assert_eq!(
            json_out(&["torus", "longitude", "5"], ""),
            json!({"meridian_coeff": 5, "longitude_coeff": 1})
        );
        let (code, _, err) = call(&["torus", "framing", "2", "2"], "");
        assert_eq!(code, 1);
        let e: Value = serde_json::from_str(&err).unwrap();
        assert_eq!(e["error"]["code"], "NotALongitude");
    }

    #[test]
    fn surgery_on_unknot() {
        let v = json_out(&["surgery", "-"], r#"{"pd": "U", "framings": [0]}"#);
        assert_eq!(v["recognized"], "S2xS1");
        assert_eq!(v["H1"]["group"], "Z");
        let v = json_out(&["surgery", "-"], r#"{"pd": "U", "coefficients": ["5/2"]}"#);
        assert_eq!(v["recognized"], "L(5,2)");
        assert_eq!(v["H1"], Value::Null);
    }

    #[test]
    fn usage_and_domain_errors() {
        assert_eq!(call(&["bogus"], "").0, 2);
        assert_eq!(call(&["inv", "-", "--nope"], "").0, 2);
        let (code, _, err) = call(&["inv", "-"], "X[1,2,3]");
        assert_eq!(code, 1);
        assert!(err.contains("\"ArcCountError\""));
        let (code, _, err) = call(&["inv", "/no/such/file"], "");
        assert_eq!(code, 1);
        assert!(err.contains("IoError"));
    }

    #[test]
    fn moves_and_equiv() {
        let v = json_out(&["moves", "-", "--kinds", "R1_remove"], "X[1,1,2,2]");
        assert_eq!(v.as_array().unwrap().len(), 1);
        let dir = std::env::temp_dir().join(format!("framelink-cli-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let a = dir.join("a.pd");
        let b = dir.join("b.json");
        std::fs::write(&a, TREFOIL).unwrap();
        std::fs::write(&b, format!(r#"{{"pd": "{}", "framings": [-3]}}"#, TREFOIL.trim())).unwrap();
        let v = json_out(&["equiv", a.to_str().unwrap(), b.to_str().unwrap()], "");
        assert_eq!(v["status"], "equivalent");
        std::fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn convert_and_parse() {
        let v = json_out(&["convert", "-", "--to", "dt"], TREFOIL);
        assert_eq!(v, json!(["-4 -6 -2"]));
        let v = json_out(&["convert", "-", "--from", "dt", "--to", "pd"], "-4 -6 -2\n");
        let back = json_out(&["inv", "-"], v[0].as_str().unwrap());
        // DT fixes the knot only up to mirror image
        assert_eq!(back["writhe"].as_i64().unwrap().abs(), 3);
        let v = json_out(&["parse", "-"], "U\nX[1,1,2,2] U\n");
        assert_eq!(v[1]["components"], 2);
        let (code, out, _) = call(&["--format", "table", "torus", "embeddable", "2", "3"], "");
        assert_eq!((code, out.as_str()), (0, "embeddable  true\n"));
    }

    #[test]
    fn deterministic_output() {
        let a = call(&["moves", "-"], TREFOIL);
        let b = call(&["moves", "-"], TREFOIL);
        assert_eq!(a, b);
    }
}
