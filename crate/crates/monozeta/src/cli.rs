//! Command-line front end. Parses one subcommand per invocation, dispatches
//! into the library, and prints either the plain text form or the shared JSON
//! forms. Results go to stdout, warnings about assumed hypotheses go to
//! stderr. Exit codes: 0 success, 1 violated precondition, 2 parse error.

use std::io::Read;
use std::str::FromStr;

use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::json;

use crate::cizeta::{
    euler_ci_generic_fiber, zeta_ci_at_infinity, zeta_ci_fiber, FiberMode, PolyMap,
};
use crate::error::{Error, Result};
use crate::exactlat::{convex_hull, mixed_volume, num::to_i64, LatticePoint, Polyhedron, Polytope};
use crate::newton::{bifurcation_polyhedron, gamma_infinity, newton_polytope_minus_constant};
use crate::polyio::{parse_polynomial, Polynomial};
use crate::zetacore::{
    euler_generic_fiber, jumping_number_2d, jumping_number_nd, lefschetz_numbers,
    varchenko_local_zeta, zeta_at_infinity, zeta_central_fiber_smooth, zeta_fiber_nondegenerate,
    Route, SingularDatum, ZetaFunction,
};

#[derive(Parser)]
#[command(
    name = "monozeta",
    about = "Monodromy zeta functions, Euler characteristics and jumping numbers \
             computed from Newton polytopes",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Monodromy zeta function at infinity of a polynomial
    #[command(name = "zeta-infinity")]
    ZetaInfinity {
        #[command(flatten)]
        poly: PolyArg,
        #[command(flatten)]
        hyp: Hypotheses,
        #[command(flatten)]
        out: Output,
    },
    /// Monodromy zeta function along the fiber over a value
    #[command(name = "zeta-fiber")]
    ZetaFiber {
        #[command(flatten)]
        poly: PolyArg,
        #[command(flatten)]
        fiber: FiberArgs,
        #[command(flatten)]
        hyp: Hypotheses,
        #[command(flatten)]
        out: Output,
    },
    /// Lefschetz numbers of the monodromy at infinity
    Lefschetz {
        #[command(flatten)]
        poly: PolyArg,
        /// Compute L^1 .. L^kmax
        #[arg(long, default_value_t = 10)]
        kmax: u64,
        #[command(flatten)]
        hyp: Hypotheses,
        #[command(flatten)]
        out: Output,
    },
    /// Euler characteristic of the generic fiber
    Euler {
        #[command(flatten)]
        poly: PolyArg,
        #[command(flatten)]
        hyp: Hypotheses,
        #[command(flatten)]
        out: Output,
    },
    /// Jump of the Euler characteristic at the central fiber
    Jump {
        #[command(flatten)]
        poly: PolyArg,
        /// Milnor number of one singular point; repeat per point. In two
        /// variables the points are the isolated singular points of the
        /// reduced central fiber, otherwise those inside the big torus.
        #[arg(long = "mu")]
        mu: Vec<u64>,
        #[command(flatten)]
        hyp: Hypotheses,
        #[command(flatten)]
        out: Output,
    },
    /// Local monodromy zeta function at the origin of f - a
    Varchenko {
        #[command(flatten)]
        poly: PolyArg,
        #[command(flatten)]
        hyp: Hypotheses,
        #[command(flatten)]
        out: Output,
    },
    /// Newton-polytope bodies of a polynomial
    Polytope {
        #[command(flatten)]
        poly: PolyArg,
        /// Which body to print
        #[arg(long, value_enum)]
        which: WhichBody,
        /// Restrict to the variable subset given by 1-based indices, e.g. 1,3
        #[arg(long, value_delimiter = ',')]
        subset: Option<Vec<usize>>,
        #[command(flatten)]
        out: Output,
    },
    /// Mixed volume of polytopes read as JSON from stdin:
    /// [{"ambient_dim": n, "points": [[..], ..]}, ..]
    #[command(name = "mixed-volume")]
    MixedVolume {
        #[command(flatten)]
        out: Output,
    },
    /// Zeta function at infinity of a polynomial map along its last component
    #[command(name = "ci-zeta-infinity")]
    CiZetaInfinity {
        #[command(flatten)]
        map: MapArgs,
        #[command(flatten)]
        hyp: Hypotheses,
        #[command(flatten)]
        out: Output,
    },
    /// Zeta function of a polynomial map along the fiber over a value of its
    /// last component
    #[command(name = "ci-zeta-fiber")]
    CiZetaFiber {
        #[command(flatten)]
        map: MapArgs,
        #[command(flatten)]
        fiber: FiberArgs,
        #[command(flatten)]
        hyp: Hypotheses,
        #[command(flatten)]
        out: Output,
    },
    /// Euler characteristic of the generic fiber of a polynomial map
    #[command(name = "ci-euler")]
    CiEuler {
        #[command(flatten)]
        map: MapArgs,
        #[command(flatten)]
        hyp: Hypotheses,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args)]
struct PolyArg {
    /// Polynomial over the variables of --vars, e.g. "x - x^2*y"
    poly: String,
    /// Comma-separated variable names
    #[arg(long, value_delimiter = ',', required = true)]
    vars: Vec<String>,
}

#[derive(Args)]
struct MapArgs {
    /// One component per -f, last one is the monodromy direction
    #[arg(short = 'f', required = true)]
    f: Vec<String>,
    /// Comma-separated variable names
    #[arg(long, value_delimiter = ',', required = true)]
    vars: Vec<String>,
}

#[derive(Args)]
struct FiberArgs {
    /// Fiber value as a rational, e.g. 0 or -3/2
    #[arg(long, conflicts_with = "central")]
    value: Option<String>,
    /// Take the fiber over the constant term
    #[arg(long)]
    central: bool,
    /// Which assembly of the central-fiber formula to use
    #[arg(long, value_enum, default_value_t = RouteArg::A)]
    route: RouteArg,
}

#[derive(Args)]
struct Hypotheses {
    /// Acknowledge the assumed non-degeneracy hypotheses (silences the warning)
    #[arg(long)]
    assume_nondegenerate: bool,
    /// Refuse to assume unverified hypotheses; error out instead
    #[arg(long, conflicts_with = "assume_nondegenerate")]
    strict: bool,
}

impl Hypotheses {
    /// The hypotheses named in `what` are asserted, not verified: warn by
    /// default, stay silent once acknowledged, fail under --strict.
    fn assume(&self, what: &str) -> Result<()> {
        if self.strict {
            return Err(Error::precondition(format!(
                "--strict refuses to assume {}; drop --strict to accept the hypothesis",
                what
            )));
        }
        if !self.assume_nondegenerate {
            eprintln!("warning: assuming {}", what);
        }
        Ok(())
    }
}

#[derive(Args)]
struct Output {
    /// Emit JSON instead of plain text
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "UPPER")]
enum RouteArg {
    A,
    B,
}

impl From<RouteArg> for Route {
    fn from(r: RouteArg) -> Route {
        match r {
            RouteArg::A => Route::A,
            RouteArg::B => Route::B,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum WhichBody {
    /// Convex hull of the support and the origin
    #[value(name = "gamma-inf")]
    GammaInf,
    /// Newton polytope of f minus its constant term
    #[value(name = "np")]
    Np,
    /// Newton polyhedron of f - a plus the cone over the support
    #[value(name = "bif")]
    Bif,
}

pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {}", e);
            e.exit_code()
        }
    }
}

fn dispatch(cmd: Command) -> Result<()> {
    match cmd {
        Command::ZetaInfinity { poly, hyp, out } => {
            let f = parse_poly(&poly)?;
            hyp.assume("non-degeneracy at infinity (Def 3.3)")?;
            emit_zeta(&zeta_at_infinity(&f)?, out.json)
        }
        Command::ZetaFiber { poly, fiber, hyp, out } => {
            let f = parse_poly(&poly)?;
            let (c, central) = fiber_value(&fiber, &f)?;
            hyp.assume("strict non-degeneracy along the fiber (Def 4.7)")?;
            let z = if central {
                zeta_central_fiber_smooth(&f, fiber.route.into())?
            } else {
                zeta_fiber_nondegenerate(&f, &c)?
            };
            emit_zeta(&z, out.json)
        }
        Command::Lefschetz { poly, kmax, hyp, out } => {
            let f = parse_poly(&poly)?;
            hyp.assume("non-degeneracy at infinity (Def 3.3)")?;
            let values = lefschetz_numbers(&zeta_at_infinity(&f)?, kmax);
            if out.json {
                let nums = values.iter().map(int_json).collect::<Result<Vec<_>>>()?;
                println!("{}", json!({ "kmax": kmax, "values": nums }));
            } else {
                let words: Vec<String> = values.iter().map(|v| v.to_string()).collect();
                println!("{}", words.join(" "));
            }
            Ok(())
        }
        Command::Euler { poly, hyp, out } => {
            let f = parse_poly(&poly)?;
            hyp.assume("non-degeneracy at infinity (Def 3.3)")?;
            emit_int("euler", &euler_generic_fiber(&f)?, out.json)
        }
        Command::Jump { poly, mu, hyp, out } => {
            let f = parse_poly(&poly)?;
            let jump = if f.n_vars() == 2 {
                hyp.assume("strong non-degeneracy along the central fiber (Def 4.2)")?;
                let data: Vec<SingularDatum> = mu
                    .iter()
                    .map(|&m| SingularDatum {
                        local_zeta: ZetaFunction::factor(1, 1 - m as i64),
                        milnor_number: m,
                    })
                    .collect();
                jumping_number_2d(&f, &data)?
            } else {
                hyp.assume("strict non-degeneracy along the central fiber (Def 4.7)")?;
                jumping_number_nd(&f, &mu)?
            };
            emit_int("jump", &jump, out.json)
        }
        Command::Varchenko { poly, hyp, out } => {
            let f = parse_poly(&poly)?;
            hyp.assume("strict non-degeneracy along the fiber (Def 4.7)")?;
            emit_zeta(&varchenko_local_zeta(&f)?, out.json)
        }
        Command::Polytope { poly, which, subset, out } => {
            let f = parse_poly(&poly)?;
            let s = match &subset {
                None => (0..f.n_vars()).collect::<Vec<_>>(),
                Some(ix) => {
                    let mut s = Vec::with_capacity(ix.len());
                    for &i in ix {
                        if i == 0 {
                            return Err(Error::precondition(
                                "--subset indices are 1-based; 0 is not a variable",
                            ));
                        }
                        s.push(i - 1);
                    }
                    s
                }
            };
            match which {
                WhichBody::GammaInf => emit_polytope(&gamma_infinity(&f, &s)?, out.json),
                WhichBody::Np => emit_polytope(&newton_polytope_minus_constant(&f, &s)?, out.json),
                WhichBody::Bif => emit_polyhedron(&bifurcation_polyhedron(&f, &s)?, out.json),
            }
        }
        Command::MixedVolume { out } => {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Error::Parse { pos: 0, msg: format!("cannot read stdin: {}", e) })?;
            let bodies = parse_polytopes_json(&text)?;
            emit_int("mixed_volume", &mixed_volume(&bodies)?, out.json)
        }
        Command::CiZetaInfinity { map, hyp, out } => {
            let m = parse_map(&map)?;
            hyp.assume("non-degeneracy at infinity (Def 5.3)")?;
            emit_zeta(&zeta_ci_at_infinity(&m)?, out.json)
        }
        Command::CiZetaFiber { map, fiber, hyp, out } => {
            let m = parse_map(&map)?;
            let (c, central) = fiber_value(&fiber, m.last())?;
            hyp.assume("strict non-degeneracy along the fiber (Def 5.8)")?;
            let mode = if central { FiberMode::Central } else { FiberMode::Generic };
            emit_zeta(&zeta_ci_fiber(&m, &c, mode, fiber.route.into())?, out.json)
        }
        Command::CiEuler { map, hyp, out } => {
            let m = parse_map(&map)?;
            hyp.assume("non-degeneracy at infinity (Def 5.3)")?;
            emit_int("euler", &euler_ci_generic_fiber(&m)?, out.json)
        }
    }
}

fn parse_poly(arg: &PolyArg) -> Result<Polynomial> {
    parse_polynomial(&arg.poly, &arg.vars)
}

fn parse_map(arg: &MapArgs) -> Result<PolyMap> {
    let comps: Vec<Polynomial> =
        arg.f.iter().map(|t| parse_polynomial(t, &arg.vars)).collect::<Result<_>>()?;
    PolyMap::new(comps)
}

/// Resolve --value/--central to the fiber value and whether it is the
/// central one (equal to the constant term).
fn fiber_value(fiber: &FiberArgs, f: &Polynomial) -> Result<(BigRational, bool)> {
    let a = f.constant_term();
    let c = match (&fiber.value, fiber.central) {
        (Some(text), false) => BigRational::from_str(text.trim()).map_err(|e| Error::Parse {
            pos: 0,
            msg: format!("--value must be a rational number: {}", e),
        })?,
        (None, true) => a.clone(),
        _ => {
            return Err(Error::precondition(
                "the fiber must be chosen: pass exactly one of --value c or --central",
            ));
        }
    };
    let central = c == a;
    Ok((c, central))
}

fn emit_zeta(z: &ZetaFunction, as_json: bool) -> Result<()> {
    if as_json {
        let text = serde_json::to_string(z)
            .map_err(|e| Error::internal(format!("zeta serialization failed: {}", e)))?;
        println!("{}", text);
    } else {
        println!("{}", z);
    }
    Ok(())
}

fn int_json(v: &BigInt) -> Result<serde_json::Value> {
    Ok(serde_json::Value::Number(to_i64(v, "result")?.into()))
}

fn emit_int(key: &str, v: &BigInt, as_json: bool) -> Result<()> {
    if as_json {
        println!("{}", json!({ key: int_json(v)? }));
    } else {
        println!("{}", v);
    }
    Ok(())
}

fn points_json(pts: &[LatticePoint]) -> Result<serde_json::Value> {
    let rows = pts
        .iter()
        .map(|p| Ok(serde_json::Value::Array(p.0.iter().map(int_json).collect::<Result<_>>()?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(serde_json::Value::Array(rows))
}

fn points_text(pts: &[LatticePoint]) -> String {
    pts.iter().map(|p| format!("{}", p)).collect::<Vec<_>>().join(" ")
}

fn emit_polytope(p: &Polytope, as_json: bool) -> Result<()> {
    if as_json {
        println!(
            "{}",
            json!({ "ambient_dim": p.ambient_dim(), "points": points_json(p.vertices())? })
        );
    } else {
        println!("ambient_dim: {}", p.ambient_dim());
        println!("dim: {}", p.dim());
        println!("vertices: {}", points_text(p.vertices()));
    }
    Ok(())
}

fn emit_polyhedron(q: &Polyhedron, as_json: bool) -> Result<()> {
    if as_json {
        println!(
            "{}",
            json!({
                "ambient_dim": q.ambient_dim(),
                "points": points_json(q.generator_points())?,
                "rays": points_json(q.generator_rays())?,
            })
        );
    } else {
        println!("ambient_dim: {}", q.ambient_dim());
        println!("dim: {}", q.dim());
        println!("vertices: {}", points_text(q.generator_points()));
        println!("rays: {}", points_text(q.generator_rays()));
    }
    Ok(())
}

fn parse_polytopes_json(text: &str) -> Result<Vec<Polytope>> {
    let parsed: serde_json::Value = serde_json::from_str(text)
        .map_err(|e| Error::Parse { pos: 0, msg: format!("invalid JSON: {}", e) })?;
    let arr = parsed
        .as_array()
        .ok_or_else(|| Error::Parse { pos: 0, msg: "expected a JSON array of polytopes".into() })?;
    arr.iter().map(parse_polytope_json).collect()
}

fn parse_polytope_json(v: &serde_json::Value) -> Result<Polytope> {
    let bad = |msg: &str| Error::Parse { pos: 0, msg: msg.into() };
    let ambient = v
        .get("ambient_dim")
        .and_then(|d| d.as_u64())
        .ok_or_else(|| bad("polytope needs a nonnegative integer \"ambient_dim\""))? as usize;
    let rows = v
        .get("points")
        .and_then(|p| p.as_array())
        .ok_or_else(|| bad("polytope needs a \"points\" array"))?;
    let mut pts = Vec::with_capacity(rows.len());
    for row in rows {
        let coords = row.as_array().ok_or_else(|| bad("each point must be an array"))?;
        let mut p = Vec::with_capacity(coords.len());
        for c in coords {
            p.push(BigInt::from(
                c.as_i64().ok_or_else(|| bad("point coordinates must be integers"))?,
            ));
        }
        if p.len() != ambient {
            return Err(bad("each point must have ambient_dim coordinates"));
        }
        pts.push(LatticePoint(p));
    }
    convex_hull(&pts, ambient)
}

/// Used by tests to confirm the argument grammar stays parseable.
pub fn debug_check_cli() {
    Cli::command().debug_assert();
}
