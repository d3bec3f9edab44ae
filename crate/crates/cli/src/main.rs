//! `ss3`: supersingular curves over binary fields from the command line.

mod render;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};
use ss3_core::auxgeom::{analyze_d, DParams};
use ss3_core::elliptic::{classify, frobenius_trace, AsModel};
use ss3_core::field::DESK_MAX_DEGREE;
use ss3_core::quartic::{
    point_counts_guarded, type_of, weil_from_counts, weil_poly, Quartic, WeilPoly, NAIVE_MAX_DEGREE,
};
use ss3_core::synthesis::census::CENSUS_MAX_DEGREE;
use ss3_core::synthesis::{
    census, construct_for_weil, contains_jacobian, enumerate_classes, extremal_weil, lookup, CensusOptions,
    Construction, TableReport,
};
use ss3_core::tower::Tower;
use ss3_core::{Error, Fe, Field, ModulusTable};

const MODULI_ENV: &str = "SS3_MODULI_FILE";

#[derive(Parser, Debug)]
#[command(name = "ss3", version, about = "Supersingular elliptic curves and plane quartics over F_2^n")]
struct Cli {
    /// Render a human-readable table instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,

    /// Worker threads (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    threads: Option<u16>,

    /// Raise or lower the largest degree the exhaustive commands accept.
    #[arg(long, global = true)]
    max_degree: Option<u32>,

    /// Write output here instead of stdout.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct QuarticArgs {
    #[arg(short)]
    n: u32,
    #[arg(long, value_parser = parse_fe)]
    d: Fe,
    #[arg(long, value_parser = parse_fe)]
    e: Fe,
    #[arg(long, value_parser = parse_fe)]
    f: Fe,
    #[arg(long, value_parser = parse_fe)]
    g: Fe,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify y² + y = ax³ + bx² + c up to k-isomorphism.
    ClassifyElliptic {
        #[arg(short)]
        n: u32,
        #[arg(long, value_parser = parse_fe)]
        a: Fe,
        #[arg(long, value_parser = parse_fe)]
        b: Fe,
        #[arg(long, value_parser = parse_fe)]
        c: Fe,
    },
    /// Point count of y² + y = Ax⁹ + Bx³ + Cx + D.
    CountD {
        #[arg(short)]
        n: u32,
        #[arg(long = "A", value_parser = parse_fe)]
        a: Fe,
        #[arg(long = "B", value_parser = parse_fe)]
        b: Fe,
        #[arg(long = "C", value_parser = parse_fe)]
        c: Fe,
        #[arg(long = "D", value_parser = parse_fe, default_value = "0")]
        d: Fe,
    },
    /// Count points of a quartic over k, k₂ and k₃.
    CountQuartic(QuarticArgs),
    /// Type, quotients and Weil polynomial of a quartic.
    Weil {
        #[command(flatten)]
        quartic: QuarticArgs,
        /// Derive the polynomial from point counts instead.
        #[arg(long)]
        naive: bool,
    },
    /// All supersingular isogeny classes of threefolds with verdicts.
    Catalog {
        #[arg(short)]
        n: u32,
    },
    /// Build a quartic in a prescribed isogeny class.
    #[command(group(ArgGroup::new("target").required(true).args(["weil", "maximal", "minimal"])))]
    Construct {
        #[arg(short)]
        n: u32,
        /// Coefficients a1,a2,a3 of the Weil polynomial.
        #[arg(long, allow_hyphen_values = true)]
        weil: Option<String>,
        #[arg(long)]
        maximal: bool,
        #[arg(long)]
        minimal: bool,
    },
    /// Enumerate every quartic over k and compare with the predictions.
    Census {
        #[arg(short)]
        n: u32,
        /// Count points instead of using the quotient formula.
        #[arg(long)]
        oracle: bool,
    },
    /// Compare realized quotient patterns with the attainment tables.
    VerifyTables {
        #[arg(short)]
        n: u32,
    },
    /// The field moduli in use.
    Moduli {
        #[arg(short)]
        n: Option<u32>,
    },
}

fn parse_fe(s: &str) -> Result<Fe, String> {
    Fe::from_hex(s).map_err(|e| e.to_string())
}

/// A finished command: its JSON and whether it reported agreement.
struct Report {
    value: Value,
    ok: bool,
}

impl Report {
    fn ok(v: impl Serialize) -> Result<Report, Error> {
        Ok(Report {
            value: to_value(v),
            ok: true,
        })
    }
}

fn to_value(v: impl Serialize) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

fn quartic_json(c: &Quartic, n: u32) -> Value {
    let mut v = to_value(c);
    v["n"] = json!(n);
    v
}

struct Ctx {
    table: ModulusTable,
    max_degree: Option<u32>,
}

impl Ctx {
    fn field(&self, n: u32) -> Result<Field, Error> {
        Field::from_table(n, &self.table)
    }

    fn tower(&self, n: u32) -> Result<Tower, Error> {
        Tower::from_table(n, &self.table)
    }

    fn guard(&self, what: &'static str, n: u32, default: u32) -> Result<u32, Error> {
        let limit = self.max_degree.unwrap_or(default);
        if n > limit {
            return Err(Error::ScaleGuard { what, n, limit });
        }
        Ok(limit)
    }

    fn quartic(&self, a: &QuarticArgs) -> Result<(Tower, Quartic), Error> {
        let t = self.tower(a.n)?;
        let k = t.base();
        for x in [a.d, a.e, a.f, a.g] {
            k.elem(x.0)?;
        }
        Ok((t, Quartic::new(a.d, a.e, a.f, a.g)?))
    }
}

fn weil_json(w: &WeilPoly) -> Value {
    let mut v = to_value(w);
    v["polynomial"] = json!(w.to_string());
    v
}

fn construction_json(c: &Construction, n: u32) -> Value {
    let mut v = to_value(c);
    if let Some(w) = c.witness() {
        v["quartic"] = quartic_json(&w.quartic, n);
        v["polynomial"] = json!(w.weil.to_string());
    }
    v
}

fn run(cmd: &Command, ctx: &Ctx) -> Result<Report, Error> {
    match cmd {
        Command::ClassifyElliptic { n, a, b, c } => {
            let k = ctx.field(*n)?;
            for x in [a, b, c] {
                k.elem(x.0)?;
            }
            let cl = classify(&k, &AsModel::new(*a, *b, *c)?)?;
            let mut v = json!({ "label": cl.label, "t": frobenius_trace(cl.label, *n)? });
            if let Some(coset) = cl.coset {
                v["coset"] = json!(coset);
            }
            Report::ok(v)
        }
        Command::CountD { n, a, b, c, d } => {
            ctx.guard("point count", *n, DESK_MAX_DEGREE)?;
            let k = ctx.field(*n)?;
            for x in [a, b, c, d] {
                k.elem(x.0)?;
            }
            Report::ok(analyze_d(&k, &DParams::new(*a, *b, *c, *d))?)
        }
        Command::CountQuartic(args) => {
            let limit = ctx.guard("naive point count", args.n, NAIVE_MAX_DEGREE)?;
            let (t, c) = ctx.quartic(args)?;
            let counts = point_counts_guarded(&t, &c, limit)?;
            Report::ok(json!({ "quartic": quartic_json(&c, args.n), "q": t.base().q(), "counts": counts }))
        }
        Command::Weil { quartic, naive } => {
            let (t, c) = ctx.quartic(quartic)?;
            let w = if *naive {
                let limit = ctx.guard("naive point count", quartic.n, NAIVE_MAX_DEGREE)?;
                weil_from_counts(t.base().q(), point_counts_guarded(&t, &c, limit)?)
            } else {
                weil_poly(&t, &c)?
            };
            let ty = type_of(&t, c.f, c.g)?;
            Report::ok(json!({
                "quartic": quartic_json(&c, quartic.n),
                "type": ty.kind.as_str(),
                "roots": ty.roots,
                "quotients": ss3_core::quartic::elliptic_quotients(&t, &c)?,
                "weil": weil_json(&w),
                "method": if *naive { "point counting" } else { "quotients" },
            }))
        }
        Command::Catalog { n } => {
            ctx.tower(*n)?;
            let mut rows = Vec::new();
            for entry in enumerate_classes(*n) {
                let verdict = contains_jacobian(*n, &entry.spec)?;
                let mut v = to_value(&entry);
                v["polynomial"] = json!(entry.weil.to_string());
                v["verdict"] = to_value(&verdict);
                if let Some(c) = &verdict.witness {
                    v["verdict"]["witness"] = quartic_json(c, *n);
                }
                rows.push(v);
            }
            Report::ok(rows)
        }
        Command::Construct {
            n,
            weil,
            maximal,
            minimal,
        } => {
            let t = ctx.tower(*n)?;
            let target = match weil {
                Some(s) => {
                    let w = WeilPoly::parse(s, t.base().q())?;
                    lookup(*n, &w)?;
                    w
                }
                None => extremal_weil(*n, *maximal && !*minimal)?,
            };
            let c = construct_for_weil(&t, &target)?;
            Report::ok(construction_json(&c, *n))
        }
        Command::Census { n, oracle } => {
            let t = ctx.tower(*n)?;
            let r = census(
                &t,
                CensusOptions {
                    oracle: *oracle,
                    max_degree: ctx.max_degree.unwrap_or(CENSUS_MAX_DEGREE),
                },
            )?;
            Ok(Report {
                ok: r.agrees(),
                value: to_value(&r),
            })
        }
        Command::VerifyTables { n } => {
            let t = ctx.tower(*n)?;
            let opts = CensusOptions {
                oracle: false,
                max_degree: ctx.max_degree.unwrap_or(CENSUS_MAX_DEGREE),
            };
            let r = TableReport::from_census(&census(&t, opts)?);
            Ok(Report {
                ok: r.agrees(),
                value: to_value(&r),
            })
        }
        Command::Moduli { n } => {
            let degrees: Vec<u32> = match n {
                Some(n) => vec![*n],
                None => (1..=DESK_MAX_DEGREE).collect(),
            };
            let infos = degrees
                .into_iter()
                .map(|d| ctx.field(d).map(|k| k.info()))
                .collect::<Result<Vec<_>, _>>()?;
            Report::ok(infos)
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::ScaleGuard { .. } => 3,
        Error::Verification(_) => 4,
        _ => 2,
    }
}

fn emit(text: &str, path: Option<&PathBuf>) -> std::io::Result<()> {
    match path {
        Some(p) => std::fs::write(p, text),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => e.exit(),
    };
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads.into()).build_global() {
            eprintln!("ss3: {e}");
            return ExitCode::from(2);
        }
    }
    let table = match std::env::var_os(MODULI_ENV) {
        Some(path) => match ModulusTable::load(path.as_ref()) {
            Ok(t) => t,
            Err(e) => {
                eprintln!("ss3: {MODULI_ENV}: {e}");
                return ExitCode::from(2);
            }
        },
        None => ModulusTable::default(),
    };
    let ctx = Ctx {
        table,
        max_degree: cli.max_degree,
    };
    let report = match run(&cli.command, &ctx) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("ss3: {e}");
            return ExitCode::from(exit_code(&e));
        }
    };
    let text = if cli.pretty {
        render::table(&report.value)
    } else {
        format!("{}\n", report.value)
    };
    if let Err(e) = emit(&text, cli.output.as_ref()) {
        eprintln!("ss3: {e}");
        return ExitCode::from(2);
    }
    if report.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
