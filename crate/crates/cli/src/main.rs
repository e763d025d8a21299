mod render;

use std::process::ExitCode;

use cartan_core::catalog::{enumerate_table, Table};
use cartan_core::geometry::{product, report, report_for_entry, GeometryReport, SliceContext};
use cartan_core::killing::KillingData;
use cartan_core::oracle::{run_suite, OracleReport, SuiteConfig};
use cartan_core::scalar::{format_rational, parse_rational, parse_rational_list};
use cartan_core::{
    CartanPolytope, Error, MetricSpec, PiSqrtValue, Rational, RationalVector, RootSystem,
    RootSystemKind, SpaceLabel,
};
use clap::{Args, Parser, Subcommand};
use serde_json::json;

use render::{json, Format, Grid};

#[derive(Parser)]
#[command(
    name = "cartan",
    version,
    about = "Injectivity radius, diameter and cut loci of compact symmetric spaces"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Root system data and its Cartan simplex, e.g. `rootsystem f4`.
    Rootsystem { kind: String },
    /// Geometry of one symmetric space, e.g. `space AIII:p=2,q=5`.
    Space {
        label: String,
        #[command(flatten)]
        metric: MetricArgs,
    },
    /// Regenerate Table 4.1 (Type I) or 4.2 (groups).
    Table {
        /// `4.1` or `4.2`.
        which: String,
        /// Largest value of n, p or q to enumerate.
        #[arg(long, default_value_t = 4)]
        max_param: usize,
    },
    /// Classify a Cartan slice point against the cut locus.
    Cut {
        label: String,
        /// Comma-separated coordinates over the restricted simple roots, in
        /// Killing units divided by pi.
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Riemannian product of spaces; each factor is `LABEL` or `LABEL@EPS`.
    Product {
        #[arg(required = true)]
        factors: Vec<String>,
    },
    /// Run every numeric oracle and the table reproduction checks.
    Verify {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Samples per simplex check.
        #[arg(long, default_value_t = 100_000)]
        samples: usize,
    },
}

#[derive(Args)]
#[group(multiple = false)]
struct MetricArgs {
    /// Metric scale: the metric is -eps times the Killing form.
    #[arg(long, allow_hyphen_values = true)]
    epsilon: Option<String>,
    /// Ricci constant r, equivalent to eps = 1/(2r).
    #[arg(long, allow_hyphen_values = true)]
    ric: Option<String>,
    /// The canonical metric of the real Grassmannians.
    #[arg(long)]
    canonical: bool,
}

impl MetricArgs {
    fn spec(&self) -> Result<MetricSpec, Error> {
        Ok(match (&self.epsilon, &self.ric, self.canonical) {
            (Some(e), _, _) => MetricSpec::Epsilon(parse_rational(e)?),
            (_, Some(r), _) => MetricSpec::RicciConstant(parse_rational(r)?),
            (_, _, true) => MetricSpec::CanonicalPreset,
            _ => MetricSpec::default(),
        })
    }
}

/// Command failures with their exit codes.
enum Failure {
    Core(Error),
    Verification(usize),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Verification(n)) => {
            eprintln!("verify: {n} check(s) failed");
            ExitCode::from(1)
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            match e {
                Error::NoCanonicalMetric(_) | Error::MissingSatakeData(_) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn run(cli: &Cli) -> Result<String, Failure> {
    let f = cli.format;
    match &cli.command {
        Command::Rootsystem { kind } => Ok(cmd_rootsystem(&kind.parse()?, f)?),
        Command::Space { label, metric } => {
            let r = report(&label.parse()?, &metric.spec()?)?;
            Ok(render_report(&r, f))
        }
        Command::Table { which, max_param } => Ok(cmd_table(which.parse()?, *max_param, f)),
        Command::Cut { label, point } => Ok(cmd_cut(&label.parse()?, point, f)?),
        Command::Product { factors } => Ok(cmd_product(factors, f)?),
        Command::Verify { seed, samples } => cmd_verify(*seed, *samples, f),
    }
}

fn ints(v: &[i64]) -> String {
    v.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

fn rationals<'a>(v: impl IntoIterator<Item = &'a Rational>) -> String {
    v.into_iter().map(format_rational).collect::<Vec<_>>().join(",")
}

fn matrix_rows(rows: Vec<String>) -> String {
    rows.join("; ")
}

fn cmd_rootsystem(kind: &RootSystemKind, f: Format) -> Result<String, Error> {
    let rs = RootSystem::build(*kind)?;
    let p = CartanPolytope::build(&rs)?;
    let killing = KillingData::compute(&rs).ok();
    if f == Format::Json {
        let mut v = rs.to_json();
        let poly = p.to_json();
        for key in ["vertices", "vertex_norms_sq", "i_sq", "d_sq", "argmax_vertex"] {
            v[key] = poly[key].clone();
        }
        v["killing"] = killing.as_ref().map_or(serde_json::Value::Null, |k| json!(k));
        return Ok(json(&v));
    }
    let cartan = matrix_rows(rs.cartan().iter().map(|r| ints(r)).collect());
    let gram = matrix_rows(rs.gram().to_rows().iter().map(|r| rationals(r)).collect());
    let mut fields = vec![
        ("kind", kind.to_string()),
        ("rank", rs.rank().to_string()),
        ("root_count", rs.roots().len().to_string()),
        ("highest_root", ints(rs.highest_root())),
        ("cartan_matrix", cartan),
        ("gram", gram),
        ("vertex_norms_sq", rationals(p.vertex_norms_sq())),
        ("i_sq", format_rational(p.i_sq())),
        ("d_sq", format_rational(p.d_sq())),
        ("argmax_vertex", (p.argmax_vertex() + 1).to_string()),
    ];
    if let Some(k) = killing {
        fields.push(("killing_delta_sq", format_rational(&k.delta_sq)));
        let perp = k.perp_subsystem.iter().map(ToString::to_string).collect::<Vec<_>>();
        fields.push(("perp_subsystem", if perp.is_empty() { "empty".into() } else { perp.join("+") }));
    }
    Ok(Grid::record(fields).render(f))
}

fn pi(v: &PiSqrtValue) -> String {
    v.to_string()
}

fn render_report(r: &GeometryReport, f: Format) -> String {
    if f == Format::Json {
        return json(r);
    }
    let e = &r.space;
    let realized = |nominal: &str, kind: RootSystemKind| {
        if nominal == kind.to_string() {
            nominal.to_string()
        } else {
            format!("{nominal} (= {kind})")
        }
    };
    let fields = vec![
        ("label", e.label.to_string()),
        ("model", e.model.clone()),
        ("table", e.table.to_string()),
        ("case", e.case.clone().unwrap_or_else(|| "-".into())),
        ("ambient", realized(&e.ambient.nominal, e.ambient.kind)),
        ("restricted", realized(&e.restricted.nominal, e.restricted.kind)),
        ("restriction_factor", format_rational(&e.restriction_factor)),
        ("psi_sq", format_rational(&r.psi_sq)),
        ("epsilon", format_rational(&r.epsilon)),
        ("ricci", format_rational(&r.ricci)),
        ("kappa", format_rational(&r.kappa)),
        ("sigma_d_sq", format_rational(&r.sigma_d_sq)),
        ("injectivity_radius", pi(&r.injectivity_radius)),
        ("diameter", pi(&r.diameter)),
    ];
    Grid::record(fields).render(f)
}

fn cmd_table(table: Table, bound: usize, f: Format) -> String {
    let reports: Vec<GeometryReport> = enumerate_table(table, bound)
        .into_iter()
        .map(|e| report_for_entry(e, &MetricSpec::default()).expect("catalog rows have a unit metric"))
        .collect();
    if f == Format::Json {
        return json(&reports);
    }
    let mut g = Grid::new(["label", "type", "space", "case", "sigma", "psi_sq", "i", "d"]);
    for r in &reports {
        let e = &r.space;
        g.push(vec![
            e.label.to_string(),
            e.label.series().to_string(),
            e.model.clone(),
            e.case.clone().unwrap_or_else(|| "-".into()),
            e.restricted.nominal.clone(),
            format_rational(&r.psi_sq),
            pi(&r.injectivity_radius),
            pi(&r.diameter),
        ]);
    }
    g.render(f)
}

fn cmd_cut(label: &SpaceLabel, point: &str, f: Format) -> Result<String, Error> {
    let h = RationalVector::new(parse_rational_list(point)?);
    let ctx = SliceContext::new(label)?;
    let outcome = ctx.cut_classify(&h)?;
    let conjugate = ctx.is_conjugate(&h)?;
    if f == Format::Json {
        return Ok(json(&json!({
            "label": label.to_string(),
            "point": h.iter().map(format_rational).collect::<Vec<_>>(),
            "classification": outcome.classification.to_string(),
            "dominant": outcome.dominant.iter().map(format_rational).collect::<Vec<_>>(),
            "reflections": outcome.reflections,
            "conjugate": conjugate,
        })));
    }
    Ok(Grid::record(vec![
        ("label", label.to_string()),
        ("point", rationals(h.iter())),
        ("classification", outcome.classification.to_string()),
        ("dominant", rationals(outcome.dominant.iter())),
        ("reflections", outcome.reflections.to_string()),
        ("conjugate", conjugate.to_string()),
    ])
    .render(f))
}

fn parse_factor(spec: &str) -> Result<GeometryReport, Error> {
    let (label, metric) = match spec.split_once('@') {
        Some((l, e)) => (l, MetricSpec::Epsilon(parse_rational(e)?)),
        None => (spec, MetricSpec::default()),
    };
    report(&label.parse()?, &metric)
}

fn cmd_product(factors: &[String], f: Format) -> Result<String, Error> {
    let reports = factors.iter().map(|s| parse_factor(s)).collect::<Result<Vec<_>, _>>()?;
    let (i, d) = product(&reports)?;
    let names: Vec<String> = reports
        .iter()
        .map(|r| format!("{}@{}", r.space.label, format_rational(&r.epsilon)))
        .collect();
    if f == Format::Json {
        return Ok(json(&json!({
            "factors": names,
            "injectivity_radius": i,
            "diameter": d,
        })));
    }
    Ok(Grid::record(vec![
        ("factors", names.join(" x ")),
        ("injectivity_radius", pi(&i)),
        ("diameter", pi(&d)),
    ])
    .render(f))
}

fn cmd_verify(seed: u64, samples: usize, f: Format) -> Result<String, Failure> {
    let mut config = SuiteConfig::new(seed);
    config.samples = samples;
    let reports = run_suite(&config);
    let failed = reports.iter().filter(|r| !r.pass).count();
    let out = match f {
        Format::Json => json(&reports),
        Format::Markdown => {
            let mut g = Grid::new(["name", "exact", "numeric", "error", "pass"]);
            for r in &reports {
                let cells: Vec<String> = r.tsv_line().split('\t').map(str::to_string).collect();
                g.push(cells);
            }
            g.render(f)
        }
        Format::Text | Format::Tsv => {
            let mut s = String::from(OracleReport::TSV_HEADER);
            s.push('\n');
            for r in &reports {
                s.push_str(&r.tsv_line());
                s.push('\n');
            }
            s
        }
    };
    if failed > 0 {
        print!("{out}");
        return Err(Failure::Verification(failed));
    }
    Ok(out)
}
