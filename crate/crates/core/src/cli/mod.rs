//! The `troprat` command line.

mod json;
mod svg;

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::curve::{
    balancing_check, curve_to_divisor, duality_samples, graph_duality_check, plane_curve, Divisor,
};
use crate::error::{Error, Result};
use crate::geom::{area2, lattice_points, Polygon};
use crate::parse::{infer_vars, parse_poly, parse_rational};
use crate::rep::{
    enumerate_factorizations, fcomp, minrep_uni, try_divide, vol_pair, DEFAULT_DEPTH,
};
use crate::subdiv::{dual_subdivision, mcomp};
use crate::tropical::{TropPoly, TropRational};

pub use svg::{render_curve, render_divisor, render_subdivision};

#[derive(Debug, Parser)]
#[command(
    name = "troprat",
    version,
    about = "Exact tropical polynomial and rational function toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Comma-separated variable names (default: x, y, z as needed)
    #[arg(long, global = true)]
    vars: Option<String>,

    /// Emit SVG instead of JSON (subdiv, curve, divisor)
    #[arg(long, global = true)]
    svg: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RenderKind {
    Subdiv,
    Curve,
    Divisor,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate a polynomial at a point
    Eval {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        /// Comma-separated rational coordinates such as "1/2,-3"
        #[arg(long, allow_hyphen_values = true)]
        at: String,
    },
    /// Newton polytope of a polynomial in one or two variables
    Newt {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
    },
    /// Dual subdivision
    Subdiv {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
    },
    /// Weighted tropical plane curve
    Curve {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
    },
    /// Volume of the pair (num, den)
    Vol {
        #[arg(long, allow_hyphen_values = true)]
        num: String,
        #[arg(long, allow_hyphen_values = true)]
        den: String,
    },
    /// Minimum-volume representation of a univariate rational function
    Minrep {
        #[arg(long, allow_hyphen_values = true)]
        num: String,
        #[arg(long, allow_hyphen_values = true)]
        den: String,
    },
    /// mComp of one polynomial, or fComp of a factor list
    Comp {
        #[arg(long, allow_hyphen_values = true)]
        poly: Option<String>,
        #[arg(long = "factor", allow_hyphen_values = true)]
        factors: Vec<String>,
    },
    /// Exact quotient num ⊘ den when it is a polynomial
    Divide {
        #[arg(long, allow_hyphen_values = true)]
        num: String,
        #[arg(long, allow_hyphen_values = true)]
        den: String,
    },
    /// Factorizations into Newton-irreducible factors
    Factor {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long, default_value_t = DEFAULT_DEPTH)]
        depth: usize,
    },
    /// Divisor V(num) - V(den) of two plane curves
    Divisor {
        #[arg(long, allow_hyphen_values = true)]
        num: String,
        #[arg(long, allow_hyphen_values = true)]
        den: String,
    },
    /// Sample the hypersurface of num ⊕ (t ⊙ den) against the graph of num ⊘ den
    CheckDuality {
        #[arg(long, allow_hyphen_values = true)]
        num: String,
        #[arg(long, allow_hyphen_values = true)]
        den: String,
        #[arg(long, default_value_t = 1000)]
        count: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
    /// SVG of a subdivision, curve or divisor
    Render {
        #[arg(long, allow_hyphen_values = true)]
        poly: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        num: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        den: Option<String>,
        #[arg(long, value_enum)]
        kind: Option<RenderKind>,
    },
}

enum Output {
    Json(Value),
    Svg(String),
}

struct Session {
    vars: Vec<String>,
    inputs: Map<String, Value>,
}

impl Session {
    fn new(explicit: Option<&str>, sources: &[(&str, &str)]) -> Result<Session> {
        let vars = match explicit {
            Some(list) => list.split(',').map(|v| v.trim().to_string()).collect(),
            None => infer_vars(sources.iter().map(|(_, s)| *s))?,
        };
        let mut session = Session {
            vars,
            inputs: Map::new(),
        };
        for (name, src) in sources {
            let p = session.parse(src)?;
            session
                .inputs
                .insert((*name).to_string(), json::poly(&p, &session.vars));
        }
        session.inputs.insert("vars".into(), json!(session.vars));
        Ok(session)
    }

    fn parse(&self, src: &str) -> Result<TropPoly> {
        Ok(parse_poly(src, &self.vars)?)
    }
}

fn newt_report(f: &TropPoly) -> Result<Value> {
    f.require_nonempty("a Newton polytope")?;
    match f.arity() {
        1 => {
            let exps: Vec<i64> = f.support().map(|e| e.0[0]).collect();
            let (lo, hi) = (exps[0], exps[exps.len() - 1]);
            Ok(
                json!({ "vertices": if lo == hi { json!([[lo]]) } else { json!([[lo], [hi]]) }, "width": hi - lo }),
            )
        }
        2 => {
            let pts: Vec<(i64, i64)> = f.support().map(|e| (e.0[0], e.0[1])).collect();
            let p = Polygon::from_lattice(&pts);
            let verts: Vec<[i64; 2]> = p
                .vertices()
                .iter()
                .map(|v| {
                    let (x, y) = v.to_lattice().expect("lattice");
                    [x, y]
                })
                .collect();
            let area = area2(&p);
            Ok(json!({
                "vertices": verts,
                "dimension": p.dimension(),
                "area": json::rational(&area),
                "lattice_points": lattice_points(&p)?.len(),
            }))
        }
        n => Err(Error::ArityOutOfRange {
            arity: n,
            supported: "1 or 2",
        }),
    }
}

fn execute(cli: &Cli) -> Result<(String, Map<String, Value>, Output)> {
    let vars = cli.vars.as_deref();
    let (verb, session, out) = match &cli.command {
        Command::Eval { poly, at } => {
            let s = Session::new(vars, &[("poly", poly)])?;
            let f = s.parse(poly)?;
            let point = at
                .split(',')
                .map(parse_rational)
                .collect::<std::result::Result<Vec<_>, _>>()?;
            let value = f.eval(&point)?;
            let mut s = s;
            s.inputs.insert(
                "at".into(),
                json!(point.iter().map(json::rational).collect::<Vec<_>>()),
            );
            (
                "eval",
                s,
                Output::Json(json!({ "value": json::trop_num(&value) })),
            )
        }
        Command::Newt { poly } => {
            let s = Session::new(vars, &[("poly", poly)])?;
            let f = s.parse(poly)?;
            ("newt", s, Output::Json(newt_report(&f)?))
        }
        Command::Subdiv { poly } => {
            let s = Session::new(vars, &[("poly", poly)])?;
            let sub = dual_subdivision(&s.parse(poly)?)?;
            let out = if cli.svg {
                Output::Svg(render_subdivision(&sub))
            } else {
                let mut v = json::subdivision(&sub);
                v["mcomp"] = json!(sub.vertices().len());
                Output::Json(v)
            };
            ("subdiv", s, out)
        }
        Command::Curve { poly } => {
            let s = Session::new(vars, &[("poly", poly)])?;
            let c = plane_curve(&s.parse(poly)?)?;
            let out = if cli.svg {
                Output::Svg(render_curve(&c))
            } else {
                Output::Json(json::curve(&c, balancing_check(&c)))
            };
            ("curve", s, out)
        }
        Command::Vol { num, den } => {
            let s = Session::new(vars, &[("num", num), ("den", den)])?;
            let v = vol_pair(&s.parse(num)?, &s.parse(den)?)?;
            (
                "vol",
                s,
                Output::Json(json!({ "volume": json::rational(&v) })),
            )
        }
        Command::Minrep { num, den } => {
            let s = Session::new(vars, &[("num", num), ("den", den)])?;
            let phi = TropRational::new(s.parse(num)?, s.parse(den)?)?;
            let r = minrep_uni(&phi)?;
            let out = json!({
                "num": json::poly(r.num(), &s.vars),
                "den": json::poly(r.den(), &s.vars),
                "volume": json::rational(r.volume()),
            });
            ("minrep", s, Output::Json(out))
        }
        Command::Comp { poly, factors } => match (poly, factors.is_empty()) {
            (Some(p), true) => {
                let s = Session::new(vars, &[("poly", p)])?;
                let m = mcomp(&s.parse(p)?)?;
                ("comp", s, Output::Json(json!({ "mcomp": m })))
            }
            (None, false) => {
                let names: Vec<String> = (0..factors.len()).map(|k| format!("factor{k}")).collect();
                let sources: Vec<(&str, &str)> = names
                    .iter()
                    .map(String::as_str)
                    .zip(factors.iter().map(String::as_str))
                    .collect();
                let s = Session::new(vars, &sources)?;
                let polys = factors
                    .iter()
                    .map(|f| s.parse(f))
                    .collect::<Result<Vec<_>>>()?;
                let total = fcomp(&polys)?;
                ("comp", s, Output::Json(json!({ "fcomp": total })))
            }
            _ => {
                return Err(Error::Precondition(
                    "give either --poly or one or more --factor".into(),
                ))
            }
        },
        Command::Divide { num, den } => {
            let s = Session::new(vars, &[("num", num), ("den", den)])?;
            let q = try_divide(&s.parse(num)?, &s.parse(den)?)?;
            let quotient = q.map_or(Value::Null, |h| json::poly(&h, &s.vars));
            ("divide", s, Output::Json(json!({ "quotient": quotient })))
        }
        Command::Factor { poly, depth } => {
            let s = Session::new(vars, &[("poly", poly)])?;
            let found = enumerate_factorizations(&s.parse(poly)?, *depth)?;
            let mut list = Vec::new();
            for fact in &found.factorizations {
                list.push(json!({
                    "unit": { "coeff": json::rational(&fact.unit_coeff), "exponent": fact.unit_exp.0 },
                    "factors": fact.factors.iter().map(|f| json::poly(f, &s.vars)).collect::<Vec<_>>(),
                    "fcomp": fcomp(&fact.factors)?,
                }));
            }
            let out = json!({ "factorizations": list, "complete": found.complete, "truncated": found.truncated });
            ("factor", s, Output::Json(out))
        }
        Command::Divisor { num, den } => {
            let s = Session::new(vars, &[("num", num), ("den", den)])?;
            let d = divisor_of(&s, num, den)?;
            let out = if cli.svg {
                Output::Svg(render_divisor(&d))
            } else {
                let pieces: Vec<Value> = d
                    .pieces()
                    .iter()
                    .map(|(sh, w)| json::shape(sh, *w))
                    .collect();
                Output::Json(json!({ "pieces": pieces }))
            };
            ("divisor", s, out)
        }
        Command::CheckDuality {
            num,
            den,
            count,
            seed,
        } => {
            let mut s = Session::new(vars, &[("num", num), ("den", den)])?;
            let (f, g) = (s.parse(num)?, s.parse(den)?);
            let samples = duality_samples(&f, &g, *count, *seed)?;
            let report = graph_duality_check(&f, &g, &samples)?;
            s.inputs.insert("count".into(), json!(count));
            s.inputs.insert("seed".into(), json!(seed));
            ("check-duality", s, Output::Json(json::duality(&report)))
        }
        Command::Render {
            poly,
            num,
            den,
            kind,
        } => {
            let out = match (poly, num, den) {
                (Some(p), None, None) => {
                    let s = Session::new(vars, &[("poly", p)])?;
                    let f = s.parse(p)?;
                    let svg = match kind.unwrap_or(RenderKind::Curve) {
                        RenderKind::Subdiv => render_subdivision(&dual_subdivision(&f)?),
                        RenderKind::Curve => render_curve(&plane_curve(&f)?),
                        RenderKind::Divisor => render_divisor(&curve_to_divisor(&plane_curve(&f)?)),
                    };
                    (s, svg)
                }
                (None, Some(n), Some(d)) if kind.is_none_or(|k| k == RenderKind::Divisor) => {
                    let s = Session::new(vars, &[("num", n), ("den", d)])?;
                    let svg = render_divisor(&divisor_of(&s, n, d)?);
                    (s, svg)
                }
                _ => {
                    return Err(Error::Precondition(
                        "render takes --poly [--kind subdiv|curve|divisor] or --num and --den"
                            .into(),
                    ))
                }
            };
            ("render", out.0, Output::Svg(out.1))
        }
    };
    if cli.svg && matches!(out, Output::Json(_)) {
        return Err(Error::Precondition(format!(
            "the {verb} command has no SVG output"
        )));
    }
    Ok((verb.to_string(), session.inputs, out))
}

fn divisor_of(s: &Session, num: &str, den: &str) -> Result<Divisor> {
    let part = |src: &str| -> Result<Divisor> {
        let p = s.parse(src)?;
        if p.is_neg_inf() {
            return Err(Error::EmptyPolynomial("a curve"));
        }
        Ok(curve_to_divisor(&plane_curve(&p)?))
    };
    Ok(part(num)?.sub(&part(den)?))
}

/// Runs the CLI on `args` (including the program name). Returns the exit
/// code: 0 on success, 2 on any usage, parse or validation error.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                0
            } else {
                let _ = write!(err, "{e}");
                2
            };
        }
    };
    match execute(&cli) {
        Ok((verb, inputs, Output::Json(result))) => {
            let report =
                json!({ "schema_version": "1", "verb": verb, "inputs": inputs, "result": result });
            let _ = writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&report).expect("serializable")
            );
            0
        }
        Ok((_, _, Output::Svg(doc))) => {
            let _ = write!(out, "{doc}");
            0
        }
        Err(e) => {
            let _ = writeln!(err, "troprat: error: {e}");
            2
        }
    }
}
