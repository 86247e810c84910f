//! Command-line front end for the triangle-extremum engine.
//!
//! Exit codes: 0 success, 2 invalid input, 3 operation undefined for the
//! given input (conjugate of a vertex, no inequality bound, ...), 4 internal
//! verification failure from `verify`.

mod output;

use clap::{Args, Parser, Subcommand};
use lemoine::oracle::verify::{verify_corpus, VerifyConfig};
use lemoine::*;
use output::{
    canonical_triple, class_str, fmt_num, print_json, print_rows, sig12, solve_human, solve_json,
    triple_human,
};
use serde::Serialize;

type CliResult<T> = std::result::Result<T, CliError>;
type ParseResult<T> = std::result::Result<T, String>;

#[derive(Parser)]
#[command(
    name = "lemoine",
    version,
    about = "Extrema of weighted sums of squared distances to a triangle's sidelines"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Classify and compute the extremum of F = l*x^2 + m*y^2 + n*z^2.
    Solve(SolveArgs),
    /// Isogonal conjugate of a point.
    Conjugate(ConjugateArgs),
    /// Region label (and J, where defined) of a point.
    Classify(ClassifyArgs),
    /// Evaluate F at a point.
    Eval(EvalArgs),
    /// Barycentric coordinates of a named triangle center.
    Center(CenterArgs),
    /// The geometric inequality generated by the weights, evaluated at X.
    Inequality(InequalityArgs),
    /// Run the solver-versus-oracle verification corpus.
    Verify(VerifyArgs),
    /// Render an SVG figure of the triangle, circumcircle, and optional level curve.
    Render(RenderArgs),
}

#[derive(Args)]
struct TriangleArgs {
    /// Side lengths, comma-separated: A,B,C
    #[arg(long, value_name = "A,B,C", value_parser = parse_triple, allow_hyphen_values = true)]
    sides: Option<[f64; 3]>,
    /// Vertices, semicolon-separated pairs: X1,Y1;X2,Y2;X3,Y3
    #[arg(long, value_name = "X1,Y1;X2,Y2;X3,Y3", value_parser = parse_vertices, allow_hyphen_values = true)]
    vertices: Option<[[f64; 2]; 3]>,
}

#[derive(Args)]
struct CommonArgs {
    /// Emit a single JSON object on stdout.
    #[arg(long)]
    json: bool,
    /// Override the relative tolerance (default 1e-9).
    #[arg(long, value_name = "T")]
    tol: Option<f64>,
}

#[derive(Args)]
struct PointArgs {
    /// Point in homogeneous barycentric coordinates: L,M,N
    #[arg(long = "point-bary", value_name = "L,M,N", value_parser = parse_triple, allow_hyphen_values = true)]
    point_bary: Option<[f64; 3]>,
    /// Point as directed distances to BC, CA, AB: X,Y,Z
    #[arg(long = "point-tri", value_name = "X,Y,Z", value_parser = parse_triple, allow_hyphen_values = true)]
    point_tri: Option<[f64; 3]>,
    /// Point in Cartesian coordinates of the embedding: PX,PY
    #[arg(long = "point-xy", value_name = "PX,PY", value_parser = parse_pair, allow_hyphen_values = true)]
    point_xy: Option<[f64; 2]>,
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    triangle: TriangleArgs,
    /// Weights L,M,N (not all zero).
    #[arg(long, value_name = "L,M,N", value_parser = parse_triple, allow_hyphen_values = true)]
    weights: [f64; 3],
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct ConjugateArgs {
    #[command(flatten)]
    triangle: TriangleArgs,
    #[command(flatten)]
    point: PointArgs,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct ClassifyArgs {
    #[command(flatten)]
    triangle: TriangleArgs,
    #[command(flatten)]
    point: PointArgs,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct EvalArgs {
    #[command(flatten)]
    triangle: TriangleArgs,
    #[arg(long, value_name = "L,M,N", value_parser = parse_triple, allow_hyphen_values = true)]
    weights: [f64; 3],
    #[command(flatten)]
    point: PointArgs,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct CenterArgs {
    #[command(flatten)]
    triangle: TriangleArgs,
    /// centroid | incenter | circumcenter | orthocenter | symmedian
    #[arg(long, value_name = "NAME")]
    name: String,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct InequalityArgs {
    #[command(flatten)]
    triangle: TriangleArgs,
    #[arg(long, value_name = "L,M,N", value_parser = parse_triple, allow_hyphen_values = true)]
    weights: [f64; 3],
    /// Evaluate the inequality at a named center.
    #[arg(long = "x-center", value_name = "NAME")]
    x_center: Option<String>,
    /// Evaluate the inequality at a barycentric point.
    #[arg(long = "x-bary", value_name = "L,M,N", value_parser = parse_triple, allow_hyphen_values = true)]
    x_bary: Option<[f64; 3]>,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    triangle: TriangleArgs,
    /// Number of random instances.
    #[arg(long, default_value_t = 200)]
    trials: usize,
    /// Seed for the reproducible corpus.
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct RenderArgs {
    #[command(flatten)]
    triangle: TriangleArgs,
    /// Output file path.
    #[arg(long, value_name = "FILE.svg")]
    out: std::path::PathBuf,
    /// Level value of F to trace (requires --weights).
    #[arg(long, value_name = "V", requires = "weights", allow_hyphen_values = true)]
    level: Option<f64>,
    #[arg(long, value_name = "L,M,N", value_parser = parse_triple, allow_hyphen_values = true)]
    weights: Option<[f64; 3]>,
    /// Mark a named center (repeatable).
    #[arg(long = "mark", value_name = "NAME")]
    marks: Vec<String>,
    #[command(flatten)]
    common: CommonArgs,
}

struct CliError {
    code: i32,
    message: String,
}

impl CliError {
    fn input(message: impl Into<String>) -> Self {
        CliError { code: 2, message: message.into() }
    }
}

/// Exit 2 for malformed input, 3 for operations undefined at the input.
fn map_err(e: Error) -> CliError {
    let code = match e {
        Error::NonPositiveSide
        | Error::TriangleInequalityViolated
        | Error::CollinearVertices
        | Error::NonFinite
        | Error::ZeroHomogeneous
        | Error::ConstraintPlaneViolated
        | Error::InvalidWeights
        | Error::ZeroScale
        | Error::UnknownCenter(_) => 2,
        Error::PointAtInfinity
        | Error::ZeroCoordinate
        | Error::VertexUndefined
        | Error::SumNotZero
        | Error::SingularSystem
        | Error::NoBound => 3,
        Error::IoFailure(_) => 1,
    };
    CliError { code, message: e.to_string() }
}

fn parse_triple(s: &str) -> ParseResult<[f64; 3]> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(format!("expected three comma-separated numbers, got `{s}`"));
    }
    let mut out = [0.0; 3];
    for (i, p) in parts.iter().enumerate() {
        out[i] = p.parse::<f64>().map_err(|_| format!("invalid number `{p}`"))?;
    }
    Ok(out)
}

fn parse_pair(s: &str) -> ParseResult<[f64; 2]> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err(format!("expected two comma-separated numbers, got `{s}`"));
    }
    Ok([
        parts[0].parse::<f64>().map_err(|_| format!("invalid number `{}`", parts[0]))?,
        parts[1].parse::<f64>().map_err(|_| format!("invalid number `{}`", parts[1]))?,
    ])
}

fn parse_vertices(s: &str) -> ParseResult<[[f64; 2]; 3]> {
    let parts: Vec<&str> = s.split(';').collect();
    if parts.len() != 3 {
        return Err(format!("expected three semicolon-separated pairs, got `{s}`"));
    }
    Ok([parse_pair(parts[0])?, parse_pair(parts[1])?, parse_pair(parts[2])?])
}

impl TriangleArgs {
    fn build(&self) -> CliResult<Triangle> {
        match self.build_opt()? {
            Some(t) => Ok(t),
            None => Err(CliError::input("exactly one of --sides or --vertices is required")),
        }
    }

    fn build_opt(&self) -> CliResult<Option<Triangle>> {
        match (&self.sides, &self.vertices) {
            (Some(_), Some(_)) => {
                Err(CliError::input("give either --sides or --vertices, not both"))
            }
            (Some([a, b, c]), None) => Triangle::from_sides(*a, *b, *c).map(Some).map_err(map_err),
            (None, Some(vs)) => Triangle::from_vertices(
                Point2::new(vs[0][0], vs[0][1]),
                Point2::new(vs[1][0], vs[1][1]),
                Point2::new(vs[2][0], vs[2][1]),
            )
            .map(Some)
            .map_err(map_err),
            (None, None) => Ok(None),
        }
    }
}

impl PointArgs {
    fn resolve(&self, t: &Triangle) -> CliResult<BaryPoint> {
        let given = usize::from(self.point_bary.is_some())
            + usize::from(self.point_tri.is_some())
            + usize::from(self.point_xy.is_some());
        if given != 1 {
            return Err(CliError::input(
                "exactly one of --point-bary, --point-tri, --point-xy is required",
            ));
        }
        if let Some([l, m, n]) = self.point_bary {
            return BaryPoint::new(l, m, n).map_err(map_err);
        }
        if let Some([x, y, z]) = self.point_tri {
            let p = TriPoint::new(x, y, z);
            let residual = t.a() * x + t.b() * y + t.c() * z - t.twice_area();
            if residual.abs() > tolerance() * t.twice_area().max(1.0) {
                return Err(map_err(Error::ConstraintPlaneViolated));
            }
            return Ok(tri_to_bary(t, p));
        }
        let [px, py] = self.point_xy.unwrap();
        if !(px.is_finite() && py.is_finite()) {
            return Err(map_err(Error::NonFinite));
        }
        Ok(cartesian_to_bary(t, Point2::new(px, py)))
    }
}

fn weights_of(raw: [f64; 3]) -> CliResult<WeightTriple> {
    WeightTriple::new(raw[0], raw[1], raw[2]).map_err(map_err)
}

fn apply_tol(common: &CommonArgs) -> CliResult<()> {
    if let Some(t) = common.tol {
        if !(t.is_finite() && t > 0.0) {
            return Err(CliError::input("--tol must be finite and positive"));
        }
        set_tolerance(t);
    }
    Ok(())
}

fn main() {
    let cli = Cli::parse();
    if let Err(e) = run(cli) {
        eprintln!("error: {}", e.message);
        std::process::exit(e.code);
    }
}

fn run(cli: Cli) -> CliResult<()> {
    match cli.cmd {
        Cmd::Solve(args) => cmd_solve(args),
        Cmd::Conjugate(args) => cmd_conjugate(args),
        Cmd::Classify(args) => cmd_classify(args),
        Cmd::Eval(args) => cmd_eval(args),
        Cmd::Center(args) => cmd_center(args),
        Cmd::Inequality(args) => cmd_inequality(args),
        Cmd::Verify(args) => cmd_verify(args),
        Cmd::Render(args) => cmd_render(args),
    }
}

fn cmd_solve(args: SolveArgs) -> CliResult<()> {
    apply_tol(&args.common)?;
    let t = args.triangle.build()?;
    let w = weights_of(args.weights)?;
    let r = solve_extremum(&t, &w);

    let mut diagnostics = Vec::new();
    if r.kind == ExtremumKind::NoExtremum {
        if let Some(j) = r.j {
            let j_scale = [
                t.a() * t.a() / w.coord(0),
                t.b() * t.b() / w.coord(1),
                t.c() * t.c() / w.coord(2),
            ]
            .iter()
            .fold(0.0f64, |acc, v| acc.max(v.abs()));
            if j.abs() <= tolerance() * j_scale {
                diagnostics
                    .push("J is zero within tolerance; the tangency degenerates".to_string());
            }
        }
    }

    if args.common.json {
        print_json(&solve_json(&r, diagnostics));
    } else {
        solve_human(&r, &diagnostics);
    }
    Ok(())
}

#[derive(Serialize)]
struct PointJson {
    point_bary: [f64; 3],
    class: &'static str,
}

fn cmd_conjugate(args: ConjugateArgs) -> CliResult<()> {
    apply_tol(&args.common)?;
    let t = args.triangle.build()?;
    let p = args.point.resolve(&t)?;
    let img = isogonal(&t, &p).map_err(map_err)?;
    if args.common.json {
        print_json(&PointJson { point_bary: canonical_triple(&img), class: class_str(&img) });
    } else {
        println!("{} {}", triple_human(&img), class_str(&img));
    }
    Ok(())
}

#[derive(Serialize)]
struct ClassifyJson {
    region: String,
    #[serde(rename = "J", skip_serializing_if = "Option::is_none")]
    j: Option<f64>,
}

fn cmd_classify(args: ClassifyArgs) -> CliResult<()> {
    apply_tol(&args.common)?;
    let t = args.triangle.build()?;
    let p = args.point.resolve(&t)?;
    let region = region_classify(&t, &p).map_err(map_err)?;
    let j = compute_j(&t, &p).ok();
    if args.common.json {
        print_json(&ClassifyJson { region: region.to_string(), j: j.map(sig12) });
    } else {
        print_rows(&[("region", Some(region.to_string())), ("J", j.map(fmt_num))]);
    }
    Ok(())
}

#[derive(Serialize)]
struct EvalJson {
    #[serde(rename = "F")]
    f: f64,
}

fn cmd_eval(args: EvalArgs) -> CliResult<()> {
    apply_tol(&args.common)?;
    let t = args.triangle.build()?;
    let w = weights_of(args.weights)?;
    let p = args.point.resolve(&t)?;
    let tri = bary_to_tri(&t, &p).map_err(map_err)?;
    let f = eval_objective(&w, tri);
    if args.common.json {
        print_json(&EvalJson { f: sig12(f) });
    } else {
        println!("F          {}", fmt_num(f));
    }
    Ok(())
}

#[derive(Serialize)]
struct CenterJson {
    name: String,
    point_bary: [f64; 3],
    point_xy: [f64; 2],
}

fn cmd_center(args: CenterArgs) -> CliResult<()> {
    apply_tol(&args.common)?;
    let t = args.triangle.build()?;
    let name: CenterName = args.name.parse().map_err(map_err)?;
    let p = named_center(&t, name);
    let xy = bary_to_cartesian(&t, &p).map_err(map_err)?;
    if args.common.json {
        print_json(&CenterJson {
            name: name.to_string(),
            point_bary: canonical_triple(&p),
            point_xy: [sig12(xy.x), sig12(xy.y)],
        });
    } else {
        print_rows(&[
            ("name", Some(name.to_string())),
            ("point", Some(triple_human(&p))),
            ("xy", Some(format!("{},{}", fmt_num(xy.x), fmt_num(xy.y)))),
        ]);
    }
    Ok(())
}

#[derive(Serialize)]
struct InequalityJson {
    lhs: f64,
    rhs: f64,
    slack: f64,
    tight: bool,
    case: &'static str,
    #[serde(rename = "M")]
    m: [f64; 3],
    #[serde(rename = "X")]
    x: [f64; 3],
    #[serde(rename = "N")]
    n: [f64; 3],
}

fn cmd_inequality(args: InequalityArgs) -> CliResult<()> {
    apply_tol(&args.common)?;
    let t = args.triangle.build()?;
    let w = weights_of(args.weights)?;
    let x = match (&args.x_center, &args.x_bary) {
        (Some(name), None) => {
            let center: CenterName = name.parse().map_err(map_err)?;
            named_center(&t, center)
        }
        (None, Some([l, m, n])) => BaryPoint::new(*l, *m, *n).map_err(map_err)?,
        _ => {
            return Err(CliError::input("exactly one of --x-center or --x-bary is required"))
        }
    };
    let rep = inequality_report(&t, &w, &x).map_err(map_err)?;
    if args.common.json {
        print_json(&InequalityJson {
            lhs: sig12(rep.lhs),
            rhs: sig12(rep.rhs),
            slack: sig12(rep.slack),
            tight: rep.tight,
            case: rep.case_label,
            m: canonical_triple(&rep.m),
            x: canonical_triple(&rep.x),
            n: canonical_triple(&rep.n),
        });
    } else {
        print_rows(&[
            ("lhs", Some(fmt_num(rep.lhs))),
            ("rhs", Some(fmt_num(rep.rhs))),
            ("slack", Some(fmt_num(rep.slack))),
            ("tight", Some(rep.tight.to_string())),
            ("case", Some(rep.case_label.to_string())),
            ("N", Some(triple_human(&rep.n))),
        ]);
    }
    Ok(())
}

#[derive(Serialize)]
struct VerifyJson {
    trials: usize,
    seed: u64,
    attained: usize,
    unbounded: usize,
    degenerate: usize,
    grid_checked: usize,
    failures: Vec<String>,
}

fn cmd_verify(args: VerifyArgs) -> CliResult<()> {
    apply_tol(&args.common)?;
    let fixed = args.triangle.build_opt()?;
    let out =
        verify_corpus(fixed.as_ref(), &VerifyConfig { trials: args.trials, seed: args.seed });
    if args.common.json {
        print_json(&VerifyJson {
            trials: out.trials,
            seed: args.seed,
            attained: out.attained,
            unbounded: out.unbounded,
            degenerate: out.degenerate,
            grid_checked: out.grid_checked,
            failures: out.failures.clone(),
        });
    } else {
        print_rows(&[
            ("trials", Some(out.trials.to_string())),
            ("attained", Some(out.attained.to_string())),
            ("unbounded", Some(out.unbounded.to_string())),
            ("degenerate", Some(out.degenerate.to_string())),
            ("grid", Some(out.grid_checked.to_string())),
            ("failures", Some(out.failures.len().to_string())),
        ]);
        for f in &out.failures {
            eprintln!("mismatch: {f}");
        }
    }
    if !out.passed() {
        return Err(CliError {
            code: 4,
            message: format!("{} solver/oracle mismatches", out.failures.len()),
        });
    }
    Ok(())
}

#[derive(Serialize)]
struct RenderJson {
    out: String,
}

fn cmd_render(args: RenderArgs) -> CliResult<()> {
    apply_tol(&args.common)?;
    let t = args.triangle.build()?;
    let weights = args.weights.map(weights_of).transpose()?;
    let mut annotations = Vec::new();
    for mark in &args.marks {
        let name: CenterName = mark.parse().map_err(map_err)?;
        annotations.push(Annotation::new(named_center(&t, name), name.to_string()));
    }

    let mut file = std::fs::File::create(&args.out).map_err(|e| map_err(Error::IoFailure(e)))?;
    render_svg(&t, &annotations, args.level, weights.as_ref(), &mut file).map_err(map_err)?;

    let path = args.out.display().to_string();
    if args.common.json {
        print_json(&RenderJson { out: path });
    } else {
        println!("wrote {path}");
    }
    Ok(())
}
