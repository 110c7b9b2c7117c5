use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use bruhat_forge::arrangements::{r_poly_generic, InversionGraph};
use bruhat_forge::bp::{complete_bp, is_bp};
use bruhat_forge::patterns::classify;
use bruhat_forge::staircase::{enumerate_diagrams, series_coefficients, DiagramFilter, SeriesName, SeriesSpec};
use bruhat_forge::verify::{run, SweepConfig, Theorem};
use bruhat_forge::{parse_element, CoxeterSystem, Family, GroupElement};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "bruhat-forge", version, about = "Bruhat intervals, BP decompositions and staircase diagrams")]
struct Cli {
    /// Worker threads for sweeps.
    #[arg(long, global = true, env = "BRUHAT_FORGE_JOBS")]
    jobs: Option<usize>,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// `json` by default; `dot` for exports.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Dot,
}

#[derive(Args, Clone)]
struct GroupArgs {
    #[arg(long, default_value = "A")]
    family: Family,
    /// Inferred from the literal when omitted.
    #[arg(long)]
    rank: Option<usize>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Poincaré and distance polynomials, pattern flags and BP data for one element.
    Analyze {
        literal: String,
        #[command(flatten)]
        group: GroupArgs,
    },
    /// Run a theorem sweep (id, number 1-11, or `all`).
    Verify {
        theorem: Option<String>,
        #[arg(long = "theorem")]
        theorem_flag: Option<String>,
        #[arg(long)]
        family: Option<Family>,
        #[arg(long)]
        max_rank: Option<usize>,
        /// Affine containment horizon.
        #[arg(long)]
        horizon: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        trials: Option<usize>,
    },
    #[command(subcommand)]
    Enumerate(EnumCmd),
    #[command(subcommand)]
    Export(ExportCmd),
}

#[derive(Subcommand)]
enum EnumCmd {
    /// Staircase diagrams over a path, cycle, or Dynkin diagram.
    Diagrams {
        /// Path graph on this many vertices.
        #[arg(long, conflicts_with_all = ["cycle", "family"])]
        path: Option<usize>,
        /// Cycle graph on this many vertices (spherical diagrams).
        #[arg(long, conflicts_with = "family")]
        cycle: Option<usize>,
        #[arg(long, requires = "rank")]
        family: Option<Family>,
        #[arg(long)]
        rank: Option<usize>,
        #[arg(long, default_value = "all")]
        filter: DiagramFilter,
        /// Print every diagram, not just the count.
        #[arg(long)]
        list: bool,
    },
    /// Rationally smooth elements of a finite group.
    Smooth {
        #[arg(long, default_value = "A")]
        family: Family,
        #[arg(long)]
        rank: usize,
    },
    /// Taylor coefficients of a generating function.
    Series {
        name: SeriesName,
        #[arg(long, default_value_t = 10)]
        terms: usize,
    },
}

#[derive(Subcommand)]
enum ExportCmd {
    /// Lower Bruhat interval `[e, w]` as DOT or JSON.
    Interval {
        literal: String,
        #[command(flatten)]
        group: GroupArgs,
    },
    /// Inversion graph of a permutation.
    Graph { perm: String },
    /// Staircase diagrams over a path as JSON.
    Diagrams {
        #[arg(long)]
        path: usize,
        #[arg(long, default_value = "all")]
        filter: DiagramFilter,
    },
}

type CmdResult = Result<(String, bool), String>;

fn infer_rank(family: Family, literal: &str) -> Result<usize, String> {
    let lit = literal.trim();
    if lit == "e" {
        return Err("cannot infer a rank from the identity; pass --rank".into());
    }
    if lit.contains('s') {
        let max = lit
            .split(|c: char| !c.is_ascii_digit())
            .filter_map(|t| t.parse::<usize>().ok())
            .max()
            .ok_or("no generators in word")?;
        return Ok(match family {
            Family::AffineA => max + 1,
            _ => max,
        });
    }
    let entries = if lit.contains(',') || lit.contains(' ') || lit.starts_with('[') {
        lit.trim_matches(|c| c == '[' || c == ']')
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .count()
    } else {
        lit.chars().count()
    };
    Ok(match family {
        Family::A => entries.saturating_sub(1),
        _ => entries,
    })
}

fn element(literal: &str, g: &GroupArgs) -> Result<GroupElement, String> {
    let rank = match g.rank {
        Some(r) => r,
        None => infer_rank(g.family, literal)?,
    };
    let sys = CoxeterSystem::new(g.family, rank).map_err(|e| e.to_string())?;
    parse_element(&sys, literal).map_err(|e| e.to_string())
}

fn analyze(literal: &str, g: &GroupArgs, format: Format) -> CmdResult {
    let w = element(literal, g)?;
    let sys = w.system().clone();
    let p = w.poincare();
    let r = if sys.is_finite() { r_poly_generic(&w).ok() } else { None };
    let flags = w.one_line().filter(|_| sys.family() == Family::A).map(|p| classify(&p));
    let bp_at: Vec<usize> = w
        .support()
        .iter()
        .filter(|&s| is_bp(&w, sys.generators().without(s)))
        .map(|s| sys.label(s))
        .collect();
    let chain = complete_bp(&w);
    let report = json!({
        "schema": "1",
        "element": w.to_string(),
        "family": sys.family(),
        "rank": sys.rank(),
        "length": w.length(),
        "P_w": p,
        "R_w": r,
        "rationallySmooth": p.is_palindromic(),
        "P_w_equals_R_w": r.as_ref().map(|r| r == &p),
        "patternFlags": flags,
        "grassmannianBpAt": bp_at,
        "completeBpChain": chain.as_ref().map(|c| json!({
            "factors": c.factors,
            "supports": c.supports.iter().map(|j| j.iter().map(|g| sys.label(g)).collect::<Vec<_>>()).collect::<Vec<_>>(),
        })),
    });
    Ok(match format {
        Format::Text => {
            let mut s = format!("element  {}\nlength   {}\nP_w      {}\n", w, w.length(), p);
            if let Some(r) = &r {
                s += &format!("R_w      {r}\n");
            }
            s += &format!("smooth   {}\nBP at    {:?}\n", p.is_palindromic(), bp_at);
            if let Some(c) = &chain {
                let f: Vec<String> = c.factors.iter().map(|x| x.to_string()).collect();
                s += &format!("chain    {}\n", f.join(" | "));
            }
            (s, true)
        }
        _ => (pretty(&report), true),
    })
}

fn verify(selector: &str, cfg: &SweepConfig, format: Format) -> CmdResult {
    let theorems: Vec<Theorem> = if selector.eq_ignore_ascii_case("all") {
        Theorem::ALL.to_vec()
    } else {
        selector
            .split(',')
            .map(|t| t.trim().parse::<Theorem>().map_err(|e| e.to_string()))
            .collect::<Result<_, _>>()?
    };
    let mut reports = Vec::new();
    for t in theorems {
        reports.push(run(t, cfg).map_err(|e| e.to_string())?);
    }
    let ok = reports.iter().all(|r| r.passed());
    let out = match format {
        Format::Text => {
            let mut s = String::new();
            for r in &reports {
                let tag = if r.passed() { "PASS" } else { "FAIL" };
                s += &format!("{tag} {} ({} checks)\n", r.theorem.id(), r.checked);
                for c in &r.counterexamples {
                    s += &format!("  counterexample: {c}\n");
                }
            }
            s
        }
        _ => pretty(&json!({
            "schema": "1",
            "config": cfg,
            "passed": ok,
            "reports": reports,
        })),
    };
    Ok((out, ok))
}

fn diagram_system(
    path: Option<usize>,
    cycle: Option<usize>,
    family: Option<Family>,
    rank: Option<usize>,
) -> Result<CoxeterSystem, String> {
    let (f, r) = match (path, cycle, family) {
        (Some(n), _, _) => (Family::A, n),
        (_, Some(n), _) => (Family::AffineA, n),
        (_, _, Some(f)) => (f, rank.ok_or("--rank is required with --family")?),
        _ => return Err("give one of --path, --cycle, or --family with --rank".into()),
    };
    CoxeterSystem::new(f, r).map_err(|e| e.to_string())
}

fn enumerate(cmd: &EnumCmd, format: Format) -> CmdResult {
    match cmd {
        EnumCmd::Diagrams { path, cycle, family, rank, filter, list } => {
            let sys = diagram_system(*path, *cycle, *family, *rank)?;
            let filter = if cycle.is_some() && *filter == DiagramFilter::All {
                DiagramFilter::Spherical
            } else {
                *filter
            };
            let ds = enumerate_diagrams(&sys, filter).map_err(|e| e.to_string())?;
            Ok(match format {
                Format::Text => {
                    let mut s = format!("{}\n", ds.len());
                    if *list {
                        for d in &ds {
                            s += &format!("{d}\n");
                        }
                    }
                    (s, true)
                }
                _ => {
                    let mut v = json!({
                        "schema": "1",
                        "system": format!("{}{}", sys.family(), sys.rank()),
                        "filter": filter,
                        "count": ds.len(),
                    });
                    if *list {
                        v["diagrams"] = ds.iter().map(|d| json!(d.to_json_value())).collect();
                    }
                    (pretty(&v), true)
                }
            })
        }
        EnumCmd::Smooth { family, rank } => {
            let sys = CoxeterSystem::new(*family, *rank).map_err(|e| e.to_string())?;
            if !sys.is_finite() {
                return Err("smooth enumeration needs a finite group".into());
            }
            let all = sys.enumerate(None).map_err(|e| e.to_string())?;
            let n = all.iter().filter(|w| w.is_rationally_smooth()).count();
            Ok(match format {
                Format::Text => (format!("{n}\n"), true),
                _ => (
                    pretty(&json!({
                        "schema": "1",
                        "system": format!("{family}{rank}"),
                        "groupOrder": all.len(),
                        "rationallySmooth": n,
                    })),
                    true,
                ),
            })
        }
        EnumCmd::Series { name, terms } => {
            let c = series_coefficients(&SeriesSpec::new(*name), *terms).map_err(|e| e.to_string())?;
            let strs: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            Ok(match format {
                Format::Text => (format!("{}\n", strs.join(" ")), true),
                _ => (
                    pretty(&json!({ "schema": "1", "series": name.to_string(), "coefficients": strs })),
                    true,
                ),
            })
        }
    }
}

fn export(cmd: &ExportCmd, format: Format) -> CmdResult {
    match cmd {
        ExportCmd::Interval { literal, group } => {
            let w = element(literal, group)?;
            if !w.system().is_finite() && w.length() > 12 {
                return Err("interval too large to export".into());
            }
            let iv = w.lower_interval();
            Ok(match format {
                Format::Json => {
                    let mut v = json!(iv.to_json_value());
                    v["schema"] = json!("1");
                    (pretty(&v), true)
                }
                _ => (iv.to_dot(), true),
            })
        }
        ExportCmd::Graph { perm } => {
            let p = bruhat_forge::patterns::parse_perm(perm).map_err(|e| e.to_string())?;
            let g = InversionGraph::from_perm(&p);
            Ok(match format {
                Format::Json => {
                    let edges: Vec<(usize, usize)> = (1..=p.len())
                        .flat_map(|a| (a + 1..=p.len()).map(move |b| (a, b)))
                        .filter(|&(a, b)| g.has_edge(a, b))
                        .collect();
                    (pretty(&json!({ "schema": "1", "vertices": p.len(), "edges": edges })), true)
                }
                _ => (g.to_dot(), true),
            })
        }
        ExportCmd::Diagrams { path, filter } => {
            let sys = CoxeterSystem::new(Family::A, *path).map_err(|e| e.to_string())?;
            let ds = enumerate_diagrams(&sys, *filter).map_err(|e| e.to_string())?;
            let v: Vec<Value> = ds.iter().map(|d| json!(d.to_json_value())).collect();
            Ok((pretty(&json!({ "schema": "1", "path": path, "diagrams": v })), true))
        }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn dispatch(cli: &Cli) -> CmdResult {
    let format = cli.format.unwrap_or(match cli.cmd {
        Cmd::Export(ExportCmd::Interval { .. } | ExportCmd::Graph { .. }) => Format::Dot,
        _ => Format::Json,
    });
    match &cli.cmd {
        Cmd::Analyze { literal, group } => analyze(literal, group, format),
        Cmd::Verify { theorem, theorem_flag, family, max_rank, horizon, seed, trials } => {
            let selector = theorem_flag.as_deref().or(theorem.as_deref()).unwrap_or("all");
            let mut cfg = SweepConfig {
                family: *family,
                max_rank: *max_rank,
                horizon: *horizon,
                ..SweepConfig::default()
            };
            if let Some(s) = seed {
                cfg.seed = *s;
            }
            if let Some(t) = trials {
                cfg.trials = *t;
            }
            verify(selector, &cfg, format)
        }
        Cmd::Enumerate(e) => enumerate(e, format),
        Cmd::Export(e) => export(e, format),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j).build_global() {
            eprintln!("warning: {e}");
        }
    }
    match dispatch(&cli) {
        Ok((text, ok)) => {
            match &cli.out {
                Some(p) => {
                    if let Err(e) = fs::write(p, text) {
                        eprintln!("error: {}: {e}", p.display());
                        return ExitCode::from(2);
                    }
                }
                None => print!("{text}"),
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
