//! Command implementations behind the `reeb-forest` binary.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use reeb_forest_core::bench;
use reeb_forest_core::poset::MfMode;
use reeb_forest_core::reeb::{FilteredPoset, ReebTree};
use reeb_forest_core::{FiniteMetricSpace, MetricGraph};
use serde_json::json;

use crate::formats::{read_input, Input, InputFormat};
use crate::report::{self, sig12};
use crate::{dot, newick, CliError, EXIT_OK};

#[derive(Parser)]
#[command(
    name = "reeb-forest",
    about = "Tree approximations of filtered posets, metric graphs and finite metric spaces, \
             with certified distortion bounds"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum MfArg {
    /// Exact longest-fence search (budgeted; falls back to the bound).
    Exact,
    /// The 2*betti + 2 upper bound.
    Bound,
}

impl From<MfArg> for MfMode {
    fn from(m: MfArg) -> MfMode {
        match m {
            MfArg::Exact => MfMode::Exact,
            MfArg::Bound => MfMode::Bound,
        }
    }
}

#[derive(Args)]
pub struct InputArgs {
    /// Input file.
    #[arg(long)]
    pub input: PathBuf,
    /// Input format; `auto` detects by extension, then content.
    #[arg(long, value_enum, default_value = "auto")]
    pub format: InputFormat,
    /// Base point (label or index) for graph and metric pipelines.
    /// Defaults to the input's base, else a sweep minimizing the bound.
    #[arg(long)]
    pub base: Option<String>,
    /// Longest-fence computation mode.
    #[arg(long, value_enum, default_value = "exact")]
    pub mf_mode: MfArg,
    /// Validation tolerance for metric and regularity checks.
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
}

#[derive(Args)]
pub struct ApproximateArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Write the output tree in Newick format here.
    #[arg(long)]
    pub out_tree: Option<PathBuf>,
    /// Write the output tree's covering graph in DOT format here.
    #[arg(long)]
    pub out_dot: Option<PathBuf>,
    /// Write the JSON report here (default: stdout).
    #[arg(long)]
    pub out_report: Option<PathBuf>,
}

#[derive(Args)]
pub struct ZnArgs {
    /// Range of n, e.g. `1..8` or a single value.
    #[arg(long, default_value = "1..8")]
    pub n_range: String,
    /// Spoke length.
    #[arg(long = "R", default_value_t = 1.0)]
    pub spoke: f64,
    /// Rung length.
    #[arg(long = "r", default_value_t = 1.0)]
    pub rung: f64,
    /// Write the CSV table here (default: stdout).
    #[arg(long)]
    pub out_report: Option<PathBuf>,
}

#[derive(Args)]
pub struct VerifyArgs {
    /// RNG seed for the instance streams.
    #[arg(long, default_value_t = 7)]
    pub seed: u64,
    /// Instances per suite.
    #[arg(long, default_value_t = 200)]
    pub count: usize,
    /// Maximum instance size.
    #[arg(long, default_value_t = 10)]
    pub size: usize,
    /// Write the JSON summary here (default: stdout).
    #[arg(long)]
    pub out_report: Option<PathBuf>,
}

#[derive(Subcommand)]
pub enum Command {
    /// Run the tree-approximation pipeline and certify its distortion.
    Approximate(ApproximateArgs),
    /// Print the hyperbolicity of the input.
    Hyp(InputArgs),
    /// Print the certified bounds without running the pipeline.
    Bounds(InputArgs),
    /// Emit the worst-case fan family growth table as CSV.
    Zn(ZnArgs),
    /// Re-check every verifiable inequality on random instances.
    Verify(VerifyArgs),
}

pub fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Approximate(args) => cmd_approximate(args),
        Command::Hyp(args) => cmd_hyp(args),
        Command::Bounds(args) => cmd_bounds(args),
        Command::Zn(args) => cmd_zn(args),
        Command::Verify(args) => cmd_verify(args),
    }
}

fn resolve_base(spec: Option<&str>, labels: &[String], n: usize) -> Result<Option<usize>, CliError> {
    match spec {
        None => Ok(None),
        Some(s) => {
            if let Some(i) = labels.iter().position(|l| l == s) {
                return Ok(Some(i));
            }
            match s.parse::<usize>() {
                Ok(i) if i < n => Ok(Some(i)),
                _ => Err(CliError::Parse(format!("unknown base point {s:?}"))),
            }
        }
    }
}

fn write_out(path: Option<&PathBuf>, content: &str) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, content)
            .map_err(|e| CliError::Parse(format!("{}: {e}", p.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn emit_tree_artifacts(
    tree: &ReebTree,
    out_tree: Option<&PathBuf>,
    out_dot: Option<&PathBuf>,
) -> Result<(), CliError> {
    if let Some(p) = out_tree {
        let mut s = newick::write_newick(tree);
        s.push('\n');
        std::fs::write(p, s).map_err(|e| CliError::Parse(format!("{}: {e}", p.display())))?;
    }
    if let Some(p) = out_dot {
        let f: Vec<f64> = (0..tree.len()).map(|x| tree.f(x)).collect();
        let s = dot::write_dot(tree.poset(), Some(&f));
        std::fs::write(p, s).map_err(|e| CliError::Parse(format!("{}: {e}", p.display())))?;
    }
    Ok(())
}

fn graph_space(g: &MetricGraph, tol: f64) -> Result<FiniteMetricSpace, CliError> {
    FiniteMetricSpace::with_tol(g.shortest_paths(), tol)
        .map(|s| s.with_labels(g.labels().to_vec()))
        .map_err(|e| CliError::Invariant(e.to_string()))
}

fn cmd_approximate(args: ApproximateArgs) -> Result<i32, CliError> {
    let input = read_input(&args.input.input, args.input.format)?;
    let mf = args.input.mf_mode.into();
    let base_spec = args.input.base.as_deref();
    match input {
        Input::Graph(g) => {
            let base = resolve_base(base_spec, g.labels(), g.len())?.or(g.base());
            let space = graph_space(&g, args.input.tol)?;
            let out = space
                .tree_approx(Some(&g), base, mf)
                .map_err(|e| CliError::Invariant(e.to_string()))?;
            emit_tree_artifacts(&out.graph.tree, args.out_tree.as_ref(), args.out_dot.as_ref())?;
            write_out(
                args.out_report.as_ref(),
                &report::to_stable_string(&report::metric_report(&out.report)),
            )?;
            finish(out.report.ok, || {
                let (x, y) = out.report.graph.poset.worst_pair;
                format!(
                    "distortion {} exceeds bound {} at pair ({x}, {y})",
                    out.report.distortion, out.report.graph.poset.bound
                )
            })
        }
        Input::Metric(space) => {
            let base = resolve_base(base_spec, space.labels(), space.len())?;
            let out = space
                .tree_approx(None, base, mf)
                .map_err(|e| CliError::Invariant(e.to_string()))?;
            emit_tree_artifacts(&out.graph.tree, args.out_tree.as_ref(), args.out_dot.as_ref())?;
            write_out(
                args.out_report.as_ref(),
                &report::to_stable_string(&report::metric_report(&out.report)),
            )?;
            finish(out.report.ok, || {
                let (x, y) = out.report.graph.poset.worst_pair;
                format!(
                    "distortion {} exceeds bound {} at pair ({x}, {y})",
                    out.report.distortion, out.report.graph.poset.bound
                )
            })
        }
        Input::Poset(poset, f) => {
            let f = f.ok_or_else(|| {
                CliError::Invariant("poset input needs a filtration \"f\" to approximate".into())
            })?;
            let fp = FilteredPoset::new(poset, f).map_err(|e| CliError::Invariant(e.to_string()))?;
            let (rp, _) = fp.reeb_poset();
            let out = rp
                .approximate(mf)
                .map_err(|e| CliError::Invariant(e.to_string()))?;
            emit_tree_artifacts(&out.tree, args.out_tree.as_ref(), args.out_dot.as_ref())?;
            write_out(
                args.out_report.as_ref(),
                &report::to_stable_string(&report::poset_report(&out.report)),
            )?;
            finish(out.report.ok, || {
                let (x, y) = out.report.worst_pair;
                format!(
                    "distortion {} exceeds bound {} at pair ({x}, {y})",
                    out.report.distortion, out.report.bound
                )
            })
        }
    }
}

fn finish(ok: bool, describe: impl FnOnce() -> String) -> Result<i32, CliError> {
    if ok {
        Ok(EXIT_OK)
    } else {
        Err(CliError::BoundFailure(describe()))
    }
}

fn cmd_hyp(args: InputArgs) -> Result<i32, CliError> {
    let input = read_input(&args.input, args.format)?;
    let h = match input {
        Input::Graph(g) => graph_space(&g, args.tol)?.hyp(),
        Input::Metric(space) => space.hyp(),
        Input::Poset(poset, f) => {
            let f = f.ok_or_else(|| {
                CliError::Invariant("poset input needs a filtration \"f\" for hyperbolicity".into())
            })?;
            let fp = FilteredPoset::new(poset, f).map_err(|e| CliError::Invariant(e.to_string()))?;
            let (rp, _) = fp.reeb_poset();
            rp.hyperbolicity()
        }
    };
    println!("{}", sig12(h));
    Ok(EXIT_OK)
}

fn cmd_bounds(args: InputArgs) -> Result<i32, CliError> {
    let input = read_input(&args.input, args.format)?;
    let mf: MfMode = args.mf_mode.into();
    let value = match input {
        Input::Graph(g) => {
            let space = graph_space(&g, args.tol)?;
            let base = resolve_base(args.base.as_deref(), g.labels(), g.len())?
                .or(g.base())
                .unwrap_or(0);
            let (reg, _) = g
                .regularize(base)
                .map_err(|e| CliError::Invariant(e.to_string()))?;
            let betti = 1 + reg.edges().len() - reg.len();
            let phi = reeb_forest_core::metric::phi_of_embedding(&g)
                .map_err(|e| CliError::Invariant(e.to_string()))?;
            json!({
                "kind": "graph",
                "base": base,
                "betti": betti,
                "hyp": report::num(space.hyp()),
                "upsilon": report::num(space.upsilon()),
                "phi": report::num(phi),
                "log_base": 2,
            })
        }
        Input::Metric(space) => {
            let phi = reeb_forest_core::metric::phi_of_embedding(&space.complete_graph_embedding())
                .map_err(|e| CliError::Invariant(e.to_string()))?;
            json!({
                "kind": "metric",
                "points": space.len(),
                "hyp": report::num(space.hyp()),
                "upsilon": report::num(space.upsilon()),
                "phi_complete_embedding": report::num(phi),
                "log_base": 2,
            })
        }
        Input::Poset(poset, f) => {
            let mf_len = poset
                .max_fence_length(mf)
                .map_err(|e| CliError::Invariant(e.to_string()))?;
            let mut obj = json!({
                "kind": "poset",
                "elements": poset.len(),
                "MF": mf_len,
                "MF_mode": MfMode::from(args.mf_mode).to_string(),
                "log_base": 2,
            });
            if let Some(f) = f {
                let fp = FilteredPoset::new(poset, f)
                    .map_err(|e| CliError::Invariant(e.to_string()))?;
                let (rp, _) = fp.reeb_poset();
                let hyp = rp.hyperbolicity();
                let bound = if hyp == 0.0 {
                    0.0
                } else {
                    2.0 * reeb_forest_core::log2(2.0 * mf_len as f64) * hyp
                };
                obj["hyp_f"] = report::num(hyp);
                obj["bound"] = report::num(bound);
            }
            obj
        }
    };
    print!("{}", report::to_stable_string(&value));
    Ok(EXIT_OK)
}

fn parse_range(spec: &str) -> Result<Vec<usize>, CliError> {
    let parse = |s: &str| {
        s.trim()
            .parse::<usize>()
            .map_err(|e| CliError::Parse(format!("bad n value {s:?}: {e}")))
    };
    let (lo, hi) = if let Some((a, b)) = spec.split_once("..") {
        (parse(a)?, parse(b)?)
    } else if let Some((a, b)) = spec.split_once('-') {
        (parse(a)?, parse(b)?)
    } else {
        let v = parse(spec)?;
        (v, v)
    };
    if lo < 1 || hi < lo {
        return Err(CliError::Parse(format!("bad range {spec:?}")));
    }
    Ok((lo..=hi).collect())
}

fn cmd_zn(args: ZnArgs) -> Result<i32, CliError> {
    if !(args.rung > 0.0 && args.spoke >= args.rung) {
        return Err(CliError::Invariant("need R >= r > 0".into()));
    }
    let ns = parse_range(&args.n_range)?;
    let rows = bench::growth_comparison(&ns, args.spoke, args.rung)
        .map_err(|e| CliError::Invariant(e.to_string()))?;
    let mut csv = String::from("n,hyp,upsilon,phi,distortion,ratio\n");
    for row in rows {
        csv.push_str(&format!(
            "{},{},{},{},{},{}\n",
            row.n,
            sig12(row.hyp),
            sig12(row.upsilon),
            sig12(row.phi),
            sig12(row.distortion),
            sig12(row.ratio),
        ));
    }
    write_out(args.out_report.as_ref(), &csv)?;
    Ok(EXIT_OK)
}

fn cmd_verify(args: VerifyArgs) -> Result<i32, CliError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(threads) = std::env::var("REEB_FOREST_THREADS") {
        let threads: usize = threads
            .parse()
            .map_err(|e| CliError::Parse(format!("REEB_FOREST_THREADS: {e}")))?;
        builder = builder.num_threads(threads);
    }
    let pool = builder
        .build()
        .map_err(|e| CliError::Invariant(e.to_string()))?;
    type Suite = fn(u64, usize, usize) -> bench::SuiteResult;
    let suites: Vec<Suite> = vec![
        bench::suite_distortion_bound,
        bench::suite_graph_bound,
        bench::suite_oracles,
        bench::suite_tree_characterization,
        bench::suite_combinatorial,
        bench::suite_chain_inequality,
        bench::suite_base_change,
        bench::suite_quotient_laws,
    ];
    let results: Vec<bench::SuiteResult> = pool.install(|| {
        suites
            .par_iter()
            .map(|suite| suite(args.seed, args.count, args.size))
            .collect()
    });
    let all_ok = results.iter().all(|r| r.passed());
    let summary = json!({
        "seed": args.seed,
        "count": args.count,
        "size": args.size,
        "ok": all_ok,
        "suites": results.iter().map(|r| json!({
            "name": r.name,
            "instances": r.instances,
            "failures": r.failures.len(),
            "first_failures": r.failures.iter().take(3).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    });
    write_out(args.out_report.as_ref(), &report::to_stable_string(&summary))?;
    if all_ok {
        Ok(EXIT_OK)
    } else {
        let failing: Vec<&str> = results
            .iter()
            .filter(|r| !r.passed())
            .map(|r| r.name)
            .collect();
        Err(CliError::BoundFailure(format!(
            "verification suites failed: {}",
            failing.join(", ")
        )))
    }
}
