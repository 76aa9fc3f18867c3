//! Command-line front end: argument parsing, output formatting and exit
//! codes. `run` is the whole program; `main` only binds it to the process.

pub mod verify;

use std::io::Write;
use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};
use frises::cluster::{cross_construct, enumerate_cluster_vars, frieze_period, laurent_tsv, ones_tsv, ClusterError, ClusterType, CrossSeed, CrossTiling};
use frises::correspondence::{probe_conjecture, CorrespondenceError};
use frises::diagrams::{check_subadditive, classify, find_additive_function, CartanMatrix, Quiver};
use frises::frises::{detect_period, frise_extend_vars_with, frise_extend_with, FriseError, Limits};
use frises::laurent::{big_json, Label, LabelPattern, LaurentPoly, VarFrontier};
use frises::recurrences::{find_min_recurrence, nrational_witness, LinearRecurrence, RecurrenceError};
use frises::report::Report;
use frises::tilings::{Embedding, Frontier, Grid, Location, Rect};
use num_bigint::BigUint;
use serde_json::{json, Value};

pub const EXIT_ASSERTION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "frises", version, about = "Frises of acyclic quivers, SL2-tilings and their recurrences")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(flatten)]
    limits: LimitArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    Json,
    Text,
}

/// Resource limits; each also reads its environment variable.
#[derive(Args, Debug, Clone, Copy)]
struct LimitArgs {
    /// Largest number of frise steps, ray terms or cluster steps.
    #[arg(long, global = true, env = "FRISES_MAX_STEPS", default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..))]
    max_steps: u64,
    /// Largest number of grid cells.
    #[arg(long, global = true, env = "FRISES_MAX_REGION", default_value_t = 250_000, value_parser = clap::value_parser!(u64).range(1..))]
    max_region: u64,
    /// Largest recurrence order searched.
    #[arg(long, global = true, env = "FRISES_MAX_ORDER", default_value_t = 256, value_parser = clap::value_parser!(u64).range(1..))]
    max_order: u64,
    /// Largest frise value, in bits.
    #[arg(long, global = true, env = "FRISES_MAX_BITS", default_value_t = 1 << 24, value_parser = clap::value_parser!(u64).range(1..))]
    max_bits: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dynkin, Euclidean or indefinite type, with the additive function.
    Classify {
        /// Shorthand (A3, Dtilde5, kronecker), quiver JSON, or a JSON file.
        #[arg(long, conflicts_with = "cartan")]
        quiver: Option<String>,
        /// Rows separated by ';', entries by ','.
        #[arg(long)]
        cartan: Option<String>,
    },
    /// The frise a(j, n), with all initial values 1 or variables u1..ud.
    Frise {
        #[arg(long)]
        quiver: String,
        #[arg(long)]
        steps: u64,
        #[arg(long)]
        vars: bool,
    },
    /// A window of the SL2-tiling of a frontier.
    Tile {
        /// `[LEFT]* CENTER [RIGHT]*`.
        #[arg(long)]
        frontier: String,
        /// u0 v0 u1 v1, inclusive.
        #[arg(long, num_args = 4, allow_negative_numbers = true, value_names = ["U0", "V0", "U1", "V1"])]
        region: Vec<i64>,
        /// Vertex labels repeated along the frontier, making values symbolic.
        #[arg(long, num_args = 1.., value_delimiter = ',')]
        labels: Option<Vec<String>>,
        /// Recompute by 2×2 completion and check det = 1.
        #[arg(long)]
        check: bool,
        /// Leave cells above the frontier blank.
        #[arg(long)]
        below: bool,
    },
    /// Values along origin + n·direction.
    Rays {
        #[arg(long)]
        frontier: String,
        #[arg(long, num_args = 2, allow_negative_numbers = true, value_names = ["U", "V"])]
        origin: Vec<i64>,
        #[arg(long, num_args = 2, allow_negative_numbers = true, value_names = ["DU", "DV"])]
        direction: Vec<i64>,
        #[arg(long)]
        count: u64,
        /// Also build and validate an N-rational witness.
        #[arg(long)]
        witness: bool,
    },
    /// Minimal linear recurrence of a sequence, frise vertex or ray.
    Recur {
        /// Comma-separated naturals.
        #[arg(long, conflicts_with_all = ["quiver", "frontier"])]
        sequence: Option<String>,
        #[arg(long, requires = "steps")]
        quiver: Option<String>,
        #[arg(long, default_value_t = 0)]
        vertex: usize,
        #[arg(long)]
        steps: Option<u64>,
        #[arg(long, requires_all = ["origin", "direction", "steps"])]
        frontier: Option<String>,
        #[arg(long, num_args = 2, allow_negative_numbers = true)]
        origin: Option<Vec<i64>>,
        #[arg(long, num_args = 2, allow_negative_numbers = true)]
        direction: Option<Vec<i64>>,
        /// Defaults to the largest order the prefix certifies.
        #[arg(long)]
        order: Option<u64>,
    },
    /// The cross construction from a seed such as aybycxdxexfxgyhyiyj.
    Frieze {
        #[arg(long)]
        seed: String,
        /// Replace every label by 1.
        #[arg(long)]
        ones: bool,
        /// u0 v0 u1 v1; defaults to the whole cross figure.
        #[arg(long, num_args = 4, allow_negative_numbers = true, value_names = ["U0", "V0", "U1", "V1"])]
        region: Option<Vec<i64>>,
        /// Report the translation period over this many blocks instead.
        #[arg(long)]
        period: Option<usize>,
    },
    /// Cluster variables of A_n, Ã_m or the Kronecker quiver.
    ClusterVars {
        /// A5, Atilde3, kronecker.
        #[arg(long = "type")]
        ty: String,
        /// Orientation; defaults to the catalog one.
        #[arg(long)]
        quiver: Option<String>,
        /// Steps per vertex for Ã_m.
        #[arg(long, default_value_t = 12)]
        bound: u64,
    },
    /// Boundedness and per-vertex recurrences against the dichotomy.
    Probe {
        #[arg(long)]
        quiver: String,
        #[arg(long)]
        steps: u64,
        #[arg(long = "max-recurrence-order", default_value_t = 8)]
        order: u64,
    },
    /// Run the acceptance suites.
    Verify {
        /// all, a criterion number 1..12, or a suite name.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = verify::DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Assertion(String),
    Resource(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Assertion(_) => EXIT_ASSERTION,
            Failure::Resource(_) => EXIT_RESOURCE,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Assertion(m) | Failure::Resource(m) => m,
        }
    }
}

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

impl From<FriseError> for Failure {
    fn from(e: FriseError) -> Failure {
        match e {
            FriseError::ResourceLimit { .. } | FriseError::VariableBudget { .. } => Failure::Resource(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<CorrespondenceError> for Failure {
    fn from(e: CorrespondenceError) -> Failure {
        match e {
            CorrespondenceError::Frise(f) => f.into(),
            _ => usage(e),
        }
    }
}

impl From<ClusterError> for Failure {
    fn from(e: ClusterError) -> Failure {
        match e {
            ClusterError::Frise(f) => f.into(),
            _ => usage(e),
        }
    }
}

impl From<RecurrenceError> for Failure {
    fn from(e: RecurrenceError) -> Failure {
        usage(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure::Resource(format!("output: {e}"))
    }
}

/// Parses `argv` (including the program name), writes data to `out` and
/// diagnostics to `err`, and returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(&cli, out, err) {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message());
            f.code()
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    let lim = cli.limits;
    let limits = Limits { max_bits: Some(lim.max_bits) };
    let fmt = cli.format;
    match &cli.command {
        Command::Classify { quiver, cartan } => {
            let c = match (quiver, cartan) {
                (Some(q), _) => load_quiver(q)?.cartan().clone(),
                (None, Some(text)) => parse_cartan(text)?,
                (None, None) => return Err(usage("classify needs --quiver or --cartan")),
            };
            classify_cmd(&c, fmt, out)
        }
        Command::Frise { quiver, steps, vars } => {
            let q = load_quiver(quiver)?;
            let steps = bounded(*steps, lim.max_steps, "steps")?;
            if *vars {
                let vf = frise_extend_vars_with(&q, steps, q.d(), limits)?;
                assert_report(vf.verify())?;
                match fmt {
                    Format::Json => emit_json(out, &vf.to_json()),
                    _ => Ok(out.write_all(vf.to_tsv().as_bytes())?),
                }
            } else {
                let fr = frise_extend_with(&q, steps, limits)?;
                assert_report(fr.verify())?;
                match fmt {
                    Format::Json => {
                        let mut v = fr.to_json();
                        if steps >= 2 {
                            v["period"] = period_json(detect_period(&fr)?);
                        }
                        emit_json(out, &v)
                    }
                    Format::Tsv => Ok(out.write_all(fr.to_tsv().as_bytes())?),
                    Format::Text => {
                        for j in 0..q.d() {
                            let row: Vec<String> = fr.sequence(j).iter().map(BigUint::to_string).collect();
                            writeln!(out, "a({j}, ·): {}", row.join(" "))?;
                        }
                        if steps >= 2 {
                            match detect_period(&fr)? {
                                Some(p) => writeln!(out, "period {} after {} steps", p.period, p.preperiod)?,
                                None => writeln!(out, "no period within {steps} steps")?,
                            }
                        }
                        Ok(())
                    }
                }
            }
        }
        Command::Tile { frontier, region, labels, check, below } => {
            let f = Frontier::parse(frontier).map_err(usage)?;
            let rect = rect_of(region, lim.max_region)?;
            let hidden = Grid::from_fn(rect, |p| *below && matches!(f.locate(p), Location::Above(..)));
            let shown = |p| !*hidden.get(p);
            match labels {
                None => {
                    let e = Embedding::new(f);
                    let grid = e.grid(rect);
                    if *check {
                        let filled = e.brute_fill(rect).map_err(|x| Failure::Assertion(x.to_string()))?;
                        if filled != grid {
                            return Err(Failure::Assertion("brute-force completion disagrees".into()));
                        }
                        if let Some(p) = grid.sl2_violation() {
                            return Err(Failure::Assertion(format!("det ≠ 1 at {p:?}")));
                        }
                        writeln!(err, "checked cells: {}", rect.width() * rect.height())?;
                    }
                    let grid = Grid::from_fn(rect, |p| shown(p).then(|| grid.get(p).clone()));
                    match fmt {
                        Format::Json => emit_json(out, &grid_json(&grid, |x| x.as_ref().map_or(Value::Null, big_json))),
                        _ => Ok(out.write_all(sparse_tsv(&grid).as_bytes())?),
                    }
                }
                Some(names) => {
                    let pattern = LabelPattern::periodic(names.iter().map(|s| Label::parse(s)).collect());
                    let vf = VarFrontier::new(f, pattern);
                    let grid = Grid::from_fn(rect, |p| vf.tile_value(p).canonical());
                    if *check {
                        if let Some(p) = symbolic_violation(&grid) {
                            return Err(Failure::Assertion(format!("det ≠ 1 at {p:?}")));
                        }
                        writeln!(err, "checked cells: {}", rect.width() * rect.height())?;
                    }
                    let grid = Grid::from_fn(rect, |p| shown(p).then(|| grid.get(p).clone()));
                    match fmt {
                        Format::Json => emit_json(out, &grid_json(&grid, |x| x.as_ref().map_or(Value::Null, |p| p.canonical().to_json()))),
                        _ => Ok(out.write_all(sparse_tsv(&grid).as_bytes())?),
                    }
                }
            }
        }
        Command::Rays { frontier, origin, direction, count, witness } => {
            let e = Embedding::new(Frontier::parse(frontier).map_err(usage)?);
            let count = bounded(*count, lim.max_steps, "count")?;
            let (o, d) = ((origin[0], origin[1]), (direction[0], direction[1]));
            let ray = e.ray_values(o, d, count).map_err(usage)?;
            let w = if *witness {
                let w = nrational_witness(&e, o, d)?;
                let r = w.validate(&e, count.max(1));
                assert_report(r)?;
                Some(w)
            } else {
                None
            };
            match fmt {
                Format::Json => {
                    let mut v = json!({ "origin": [o.0, o.1], "direction": [d.0, d.1], "values": ray.values.iter().map(big_json).collect::<Vec<_>>() });
                    if let Some(w) = &w {
                        v["witness"] = json!({ "base": w.base, "residues": w.q, "mirrored": w.mirrored });
                    }
                    emit_json(out, &v)
                }
                Format::Tsv => {
                    for (n, x) in ray.values.iter().enumerate() {
                        writeln!(out, "{n}\t{x}")?;
                    }
                    Ok(())
                }
                Format::Text => {
                    let vals: Vec<String> = ray.values.iter().map(BigUint::to_string).collect();
                    writeln!(out, "{}", vals.join(" "))?;
                    if let Some(w) = &w {
                        writeln!(out, "N-rational witness: {} residue classes from term {}, validated on {count} terms", w.q, w.base)?;
                    }
                    Ok(())
                }
            }
        }
        Command::Recur { sequence, quiver, vertex, steps, frontier, origin, direction, order } => {
            let seq: Vec<BigUint> = match (sequence, quiver, frontier) {
                (Some(s), _, _) => s
                    .split(',')
                    .map(|t| t.trim().parse::<BigUint>().map_err(|_| usage(format!("{t:?} is not a natural number"))))
                    .collect::<Result<_, _>>()?,
                (None, Some(q), _) => {
                    let q = load_quiver(q)?;
                    if *vertex >= q.d() {
                        return Err(usage(format!("vertex {vertex} of a {}-vertex quiver", q.d())));
                    }
                    let steps = bounded(steps.unwrap_or(0), lim.max_steps, "steps")?;
                    frise_extend_with(&q, steps, limits)?.table.swap_remove(*vertex)
                }
                (None, None, Some(f)) => {
                    let e = Embedding::new(Frontier::parse(f).map_err(usage)?);
                    let (o, d) = (origin.as_ref().unwrap(), direction.as_ref().unwrap());
                    let steps = bounded(steps.unwrap_or(0), lim.max_steps, "steps")?;
                    e.ray_values((o[0], o[1]), (d[0], d[1]), steps + 1).map_err(usage)?.values
                }
                _ => return Err(usage("recur needs --sequence, --quiver or --frontier")),
            };
            let certifiable = (seq.len().saturating_sub(frises::recurrences::GUARD) / 2) as u64;
            let max_order = order.unwrap_or(certifiable).min(lim.max_order);
            let rec = find_min_recurrence(&seq, max_order as usize)?;
            recurrence_out(rec.as_ref(), seq.len(), max_order, fmt, out)
        }
        Command::Frieze { seed, ones, region, period } => {
            let mut s = CrossSeed::parse(seed)?;
            if *ones {
                s = CrossSeed::ones(s.word.clone());
            }
            if let Some(blocks) = period {
                let blocks = bounded(*blocks as u64, lim.max_steps, "blocks")?;
                let fp = frieze_period(&s, *ones, blocks)?;
                return match fmt {
                    Format::Json => emit_json(out, &fp.to_json()),
                    _ => Ok(writeln!(out, "{fp}")?),
                };
            }
            let rect = match region {
                Some(r) => rect_of(r, lim.max_region)?,
                None => CrossTiling::new(s.clone()).bounds(),
            };
            let grid = cross_construct(&s, rect)?;
            match fmt {
                Format::Json => emit_json(out, &grid_json(&grid, |x| x.as_ref().map_or(Value::Null, |p| p.canonical().to_json()))),
                _ if *ones => Ok(out.write_all(ones_tsv(&grid).as_bytes())?),
                _ => Ok(out.write_all(laurent_tsv(&grid).as_bytes())?),
            }
        }
        Command::ClusterVars { ty, quiver, bound } => {
            let ty = ClusterType::parse(ty)?;
            let q = quiver.as_deref().map(load_quiver).transpose()?;
            let bound = bounded(*bound, lim.max_steps, "bound")?;
            let cv = enumerate_cluster_vars(ty, q.as_ref(), bound, limits)?;
            match fmt {
                Format::Json => emit_json(out, &cv.to_json())?,
                _ => {
                    for x in &cv.vars {
                        writeln!(out, "{x}")?;
                    }
                    writeln!(err, "{} variables; {}", cv.vars.len(), cv.certificate)?;
                }
            }
            assert_report(cv.certificate)
        }
        Command::Probe { quiver, steps, order } => {
            let q = load_quiver(quiver)?;
            let steps = bounded(*steps, lim.max_steps, "steps")?;
            let order = (*order).min(lim.max_order) as usize;
            let p = probe_conjecture(&q, steps, order, limits)?;
            let recs: Vec<Value> = p.recurrences.iter().map(|r| r.as_ref().map_or(Value::Null, LinearRecurrence::to_json)).collect();
            match fmt {
                Format::Json => emit_json(
                    out,
                    &json!({
                        "class": p.class.to_string(),
                        "steps": p.steps,
                        "period": period_json(p.period),
                        "max_bits": p.max_bits,
                        "recurrences": recs,
                        "expectation": p.expectation,
                        "consistent": p.consistent(),
                    }),
                )?,
                _ => {
                    writeln!(out, "class\t{}", p.class)?;
                    writeln!(out, "steps\t{}", p.steps)?;
                    match p.period {
                        Some(per) => writeln!(out, "period\t{} after {}", per.period, per.preperiod)?,
                        None => writeln!(out, "period\tnone")?,
                    }
                    writeln!(out, "max bits\t{}", p.max_bits)?;
                    for (j, r) in p.recurrences.iter().enumerate() {
                        match r {
                            Some(r) => writeln!(out, "vertex {j}\t{r}")?,
                            None => writeln!(out, "vertex {j}\tnone of order ≤ {order}")?,
                        }
                    }
                    let verdict = match p.consistent() {
                        Some(true) => "consistent",
                        Some(false) => "INCONSISTENT",
                        None => "no prediction",
                    };
                    writeln!(out, "expectation\t{:?}: {verdict}", p.expectation)?;
                }
            }
            if p.consistent() == Some(false) {
                return Err(Failure::Assertion("the probe contradicts the expected dichotomy".into()));
            }
            Ok(())
        }
        Command::Verify { suite, seed } => {
            let suites = verify::select(suite).ok_or_else(|| usage(format!("unknown suite {suite:?}")))?;
            let mut failed = 0;
            let mut results = Vec::new();
            for s in suites {
                let r = (s.run)(*seed);
                failed += usize::from(!r.passed());
                match fmt {
                    Format::Json => results.push(json!({ "criterion": s.id, "suite": s.name, "passed": r.passed(), "checks": r.checked, "failed": r.failed, "failures": r.failures, "notes": r.notes })),
                    _ => writeln!(out, "{}", verify::summary(s, &r))?,
                }
            }
            if fmt == Format::Json {
                emit_json(out, &Value::Array(results))?;
            }
            if failed > 0 {
                return Err(Failure::Assertion(format!("{failed} suite(s) failed")));
            }
            Ok(())
        }
    }
}

fn bounded(n: u64, max: u64, what: &str) -> Result<usize, Failure> {
    if n > max {
        return Err(Failure::Resource(format!("{what} = {n} exceeds the limit {max}")));
    }
    Ok(n as usize)
}

fn rect_of(r: &[i64], max_cells: u64) -> Result<Rect, Failure> {
    let [u0, v0, u1, v1] = r.try_into().map_err(|_| usage("region takes four integers"))?;
    if u0 > u1 || v0 > v1 {
        return Err(usage("region needs u0 ≤ u1 and v0 ≤ v1"));
    }
    let cells = (u1 - u0 + 1) as u64 * (v1 - v0 + 1) as u64;
    if cells > max_cells {
        return Err(Failure::Resource(format!("region of {cells} cells exceeds the limit {max_cells}")));
    }
    Ok(Rect::new(u0, v0, u1, v1))
}

/// Shorthand, inline JSON, or a path to a JSON file.
fn load_quiver(spec: &str) -> Result<Quiver, Failure> {
    let path = Path::new(spec);
    if !spec.trim_start().starts_with('{') && path.is_file() {
        let text = std::fs::read_to_string(path).map_err(usage)?;
        return Quiver::parse(&text).map_err(usage);
    }
    Quiver::parse(spec).map_err(usage)
}

fn parse_cartan(text: &str) -> Result<CartanMatrix, Failure> {
    let rows = text
        .split(';')
        .map(|row| row.split(',').map(|x| x.trim().parse::<i64>().map_err(|_| usage(format!("bad entry {x:?}")))).collect())
        .collect::<Result<Vec<Vec<i64>>, _>>()?;
    CartanMatrix::new(rows).map_err(usage)
}

fn classify_cmd(c: &CartanMatrix, fmt: Format, out: &mut dyn Write) -> Result<(), Failure> {
    let class = classify(c);
    let additive = find_additive_function(c);
    let sub = additive.as_ref().map(|f| check_subadditive(c, f));
    let values: Option<Vec<String>> = additive.as_ref().map(|f| f.values().iter().map(|x| x.to_string()).collect());
    match fmt {
        Format::Json => emit_json(out, &json!({ "class": class.to_string(), "vertices": c.d(), "additive": values, "check": sub })),
        _ => {
            writeln!(out, "{class}")?;
            match values {
                Some(v) => writeln!(out, "additive function: {}", v.join(" "))?,
                None => writeln!(out, "additive function: none")?,
            }
            Ok(())
        }
    }
}

fn recurrence_out(rec: Option<&LinearRecurrence>, len: usize, max_order: u64, fmt: Format, out: &mut dyn Write) -> Result<(), Failure> {
    match fmt {
        Format::Json => emit_json(out, &json!({ "terms": len, "max_order": max_order, "recurrence": rec.map(LinearRecurrence::to_json) })),
        Format::Tsv => {
            match rec {
                Some(r) => {
                    let coeffs: Vec<String> = r.to_json()["coeffs"].as_array().into_iter().flatten().map(|c| format!("{}/{}", c[0].as_str().unwrap_or(""), c[1].as_str().unwrap_or(""))).collect();
                    writeln!(out, "{}\t{}", r.order(), coeffs.join("\t"))?;
                }
                None => writeln!(out, "none")?,
            }
            Ok(())
        }
        Format::Text => {
            match rec {
                Some(r) => writeln!(out, "order {}: {r}", r.order())?,
                None => writeln!(out, "no recurrence of order ≤ {max_order} on {len} terms")?,
            }
            Ok(())
        }
    }
}

fn period_json(p: Option<frises::frises::Periodicity>) -> Value {
    p.map_or(Value::Null, |p| json!({ "period": p.period, "preperiod": p.preperiod }))
}

fn grid_json<T>(grid: &Grid<T>, cell: impl Fn(&T) -> Value) -> Value {
    let r = grid.region;
    let rows: Vec<Vec<Value>> = grid.rows().into_iter().map(|row| row.into_iter().map(&cell).collect()).collect();
    json!({ "region": [r.u0, r.v0, r.u1, r.v1], "rows": rows })
}

/// Blank cells for `None`, trailing blanks dropped.
fn sparse_tsv<T: std::fmt::Display>(grid: &Grid<Option<T>>) -> String {
    let mut out = String::new();
    for row in grid.rows() {
        let cells: Vec<String> = row.iter().map(|c| c.as_ref().map_or(String::new(), T::to_string)).collect();
        out.push_str(cells.join("\t").trim_end_matches('\t'));
        out.push('\n');
    }
    out
}

fn symbolic_violation(grid: &Grid<LaurentPoly>) -> Option<(i64, i64)> {
    let r = grid.region;
    let one = LaurentPoly::one().to_signed();
    for v in r.v0..r.v1 {
        for u in r.u0..r.u1 {
            let t = |p| grid.get(p).to_signed();
            let det = &(&t((u, v + 1)) * &t((u + 1, v))) - &(&t((u, v)) * &t((u + 1, v + 1)));
            if det != one {
                return Some((u, v));
            }
        }
    }
    None
}

fn assert_report(r: Report) -> Result<(), Failure> {
    if r.passed() {
        Ok(())
    } else {
        Err(Failure::Assertion(r.to_string()))
    }
}

fn emit_json(out: &mut dyn Write, v: &Value) -> Result<(), Failure> {
    serde_json::to_writer(&mut *out, v).map_err(|e| Failure::Resource(e.to_string()))?;
    writeln!(out)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failed_reports_exit_1() {
        let mut r = Report::new("demo");
        r.check(false, || "broken".into());
        let f = assert_report(r).unwrap_err();
        assert_eq!(f.code(), EXIT_ASSERTION);
        assert!(f.message().contains("broken"));
        assert!(assert_report(Report::new("empty")).is_ok());
    }
}
