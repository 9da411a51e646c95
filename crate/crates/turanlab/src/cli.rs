//! Command-line front door: construct, check, count, bound, exact
//! search, DRC extraction, and the end-to-end verification suites.
//!
//! Exit codes: 0 success, 1 domain/usage error, 2 resource budget
//! exhausted.

use std::io::Read as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::bounds;
use crate::constructions::{self, ConstructionManifest};
use crate::error::SearchError;
use crate::gf::PrimePowerField;
use crate::graph::{named_graph, Graph};
use crate::graph6;
use crate::patterns::{self, ConstraintSet, Mode, PatternSpec};
use crate::search::{self, SearchConfig};
use crate::verify;

/// Pattern mini-language: "Ck", "Pk", "Kr", "Ka,b", "petersen" (case
/// insensitive), or "@file.g6" for a graph6 file.
pub fn parse_pattern_name(name: &str) -> Result<Graph, String> {
    if let Some(path) = name.strip_prefix('@') {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read pattern file {path}: {e}"))?;
        let line = text
            .lines()
            .find(|l| !l.trim().is_empty())
            .ok_or_else(|| format!("pattern file {path} is empty"))?;
        return graph6::parse_graph6(line.trim()).map_err(|e| format!("{path}: {e}"));
    }
    if name.eq_ignore_ascii_case("petersen") {
        return named_graph("petersen", &[]).map_err(|e| e.to_string());
    }
    let bad = || {
        format!(
            "unparseable pattern {name:?}: expected Ck, Pk, Kr, Ka,b, petersen, or @file.g6"
        )
    };
    let mut chars = name.chars();
    let family = chars.next().ok_or_else(bad)?.to_ascii_uppercase();
    let rest: &str = chars.as_str();
    let params: Vec<usize> = rest
        .split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|_| bad()))
        .collect::<Result<_, _>>()?;
    match (family, params.len()) {
        ('C', 1) | ('P', 1) | ('K', 1) | ('K', 2) => {
            named_graph(&family.to_string(), &params).map_err(|e| e.to_string())
        }
        _ => Err(bad()),
    }
}

/// Repeatable --forbid-sub / --forbid-ind flags to a constraint set.
pub fn parse_constraints(sub: &[String], ind: &[String]) -> Result<ConstraintSet, String> {
    let mut specs = Vec::new();
    for name in sub {
        specs.push(PatternSpec::new(parse_pattern_name(name)?, Mode::Subgraph, name));
    }
    for name in ind {
        specs.push(PatternSpec::new(parse_pattern_name(name)?, Mode::Induced, name));
    }
    if specs.is_empty() {
        return Err("at least one --forbid-sub or --forbid-ind is required".into());
    }
    Ok(ConstraintSet::new(specs))
}

fn load_graph(path: &str) -> Result<Graph, String> {
    let text = if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| format!("stdin: {e}"))?;
        buf
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?
    };
    let line = text
        .lines()
        .find(|l| !l.trim().is_empty())
        .ok_or_else(|| format!("{path}: no graph6 line"))?;
    graph6::parse_graph6(line.trim()).map_err(|e| format!("{path}: {e}"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Parser, Debug)]
#[command(
    name = "turanlab",
    version,
    about = "Workbench for induced Turán numbers: exact search, bounds, constructions"
)]
struct Cli {
    /// Seed for all randomized operations (replayable).
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads (accepted for compatibility; the engine is
    /// single-threaded and results never depend on this).
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    /// Search node budget (overrides TURANLAB_BUDGET_NODES).
    #[arg(long, global = true)]
    budget: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Args, Debug, Default)]
struct ConstraintFlags {
    /// Forbid a subgraph copy of this pattern (repeatable).
    #[arg(long = "forbid-sub", value_name = "PATTERN")]
    forbid_sub: Vec<String>,
    /// Forbid an induced copy of this pattern (repeatable).
    #[arg(long = "forbid-ind", value_name = "PATTERN")]
    forbid_ind: Vec<String>,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Build a named construction and certify it.
    Construct {
        /// turan | kab | incidence | polarity | bg | furedi
        family: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        b: Option<usize>,
        /// Prime power field order for the geometric families.
        #[arg(long)]
        q: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
    },
    /// Check a graph against forbidden patterns.
    Check {
        /// graph6 file, or - for stdin.
        #[arg(long)]
        graph: String,
        #[command(flatten)]
        constraints: ConstraintFlags,
    },
    /// Count m-cliques t_m(G).
    Cliques {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        m: usize,
    },
    /// Evaluate a named bound.
    Bound {
        /// thm1 | thm2 | thm3 | thm4 | es-c4c5 | cor5 | eh | kss |
        /// eg-cap | drc-threshold | ramsey-upper | ramsey-exact
        id: String,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        r: Option<u64>,
        #[arg(long)]
        s: Option<u64>,
        #[arg(long)]
        t: Option<u64>,
        #[arg(long)]
        m: Option<u64>,
        #[arg(long)]
        k: Option<u64>,
        #[arg(long)]
        d: Option<f64>,
        #[arg(long, default_value_t = 0.0)]
        beta: f64,
        #[arg(long)]
        v_h: Option<u64>,
        #[arg(long)]
        a: Option<u64>,
        #[arg(long)]
        b: Option<u64>,
        #[arg(long)]
        r_target: Option<u64>,
        #[arg(long)]
        t_exp: Option<u64>,
    },
    /// Exact ex(n; constraints) by isomorph-free exhaustive search.
    Exact {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        constraints: ConstraintFlags,
    },
    /// Dependent-random-choice set extraction.
    Drc {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        /// Fix the exponent t instead of sweeping 0..=n.
        #[arg(long)]
        t_exp: Option<usize>,
    },
    /// Run a named verification suite.
    Verify {
        /// thm1 | thm2 | thm3 | thm4-eg | c3c4-identity | es-c4c5 |
        /// constructions
        #[arg(long)]
        suite: String,
        #[arg(long)]
        max_n: Option<usize>,
        /// Graphs collected per order where the suite samples (thm3).
        #[arg(long, default_value_t = 100)]
        per_n: usize,
    },
}

fn missing(flag: &str) -> String {
    format!("missing required option --{flag}")
}

fn run_bound(
    id: &str,
    cli: &Verb,
) -> Result<serde_json::Value, String> {
    let Verb::Bound {
        n,
        r,
        s,
        t,
        m,
        k,
        d,
        beta,
        v_h,
        a,
        b,
        r_target,
        t_exp,
        ..
    } = cli
    else {
        unreachable!()
    };
    let need = |o: &Option<u64>, f: &str| o.ok_or_else(|| missing(f));
    let report = match id {
        "thm1" => bounds::thm1_bound(
            need(n, "n")?,
            need(r, "r")?,
            need(s, "s")?,
            need(t, "t")?,
        ),
        "thm2" => bounds::thm2_clique_bound(
            need(n, "n")?,
            need(r, "r")?,
            need(s, "s")?,
            need(t, "t")?,
            need(m, "m")?,
        ),
        "thm3" => bounds::thm3_clique_lb(
            need(n, "n")?,
            d.ok_or_else(|| missing("d"))?,
            need(t, "t")?,
        ),
        "thm4" => bounds::thm4_odd_cycle_bound(need(n, "n")?, need(k, "k")?, need(t, "t")?, *beta),
        "es-c4c5" => bounds::es_c4c5_bound(need(n, "n")?),
        "cor5" => bounds::cor5_leading(need(n, "n")?, need(v_h, "v-h")?, need(t, "t")?),
        "kss" => bounds::kss_leading(need(n, "n")?, need(k, "k")?, need(s, "s")?),
        "eh" => {
            let (num, den) = bounds::eh_exponent(need(s, "s")?, need(t, "t")?)
                .map_err(|e| e.to_string())?;
            return Ok(json!({"name": "eh", "exponent": format!("{num}/{den}"),
                             "numerator": num, "denominator": den}));
        }
        "eg-cap" => {
            let v = bounds::erdos_gallai_cap(need(k, "k")?, need(t, "t")?);
            return Ok(json!({"name": "eg-cap", "value": v, "certified": true}));
        }
        "drc-threshold" => {
            let v = bounds::drc_threshold(
                need(n, "n")?,
                d.ok_or_else(|| missing("d"))?,
                need(s, "s")?,
                need(r_target, "r-target")?,
                need(t_exp, "t-exp")?,
            );
            return Ok(json!({"name": "drc-threshold", "value": v, "certified": true}));
        }
        "ramsey-upper" => {
            let v = bounds::ramsey_upper(need(a, "a")?, need(b, "b")?);
            return Ok(json!({"name": "ramsey-upper", "value": v, "certified": true}));
        }
        "ramsey-exact" => {
            let table = bounds::RamseyTable::default();
            let (a, b) = (need(a, "a")?, need(b, "b")?);
            return match table.exact(a, b) {
                Some(v) => Ok(json!({"name": "ramsey-exact", "value": v, "certified": true})),
                None => Err(format!("R({a},{b}) is not in the exact table")),
            };
        }
        other => return Err(format!("unknown bound id {other:?}")),
    }
    .map_err(|e| e.to_string())?;
    serde_json::to_value(&report).map_err(|e| e.to_string())
}

fn run_construct(
    family: &str,
    n: Option<usize>,
    r: Option<usize>,
    a: Option<usize>,
    b: Option<usize>,
    q: Option<usize>,
    t: Option<usize>,
) -> Result<(Graph, ConstructionManifest), String> {
    let field = |q: Option<usize>| -> Result<PrimePowerField, String> {
        PrimePowerField::new(q.ok_or_else(|| missing("q"))?).map_err(|e| e.to_string())
    };
    let (g, params, cert_specs): (Graph, Vec<(String, usize)>, Vec<PatternSpec>) = match family {
        "turan" => {
            let (n, r) = (n.ok_or_else(|| missing("n"))?, r.ok_or_else(|| missing("r"))?);
            let g = constructions::turan_graph(n, r).map_err(|e| e.to_string())?;
            let kr1 = named_graph("K", &[r + 1]).map_err(|e| e.to_string())?;
            (
                g,
                vec![("n".into(), n), ("r".into(), r)],
                vec![PatternSpec::new(kr1, Mode::Subgraph, format!("K{}", r + 1))],
            )
        }
        "kab" => {
            let (a, b) = (a.ok_or_else(|| missing("a"))?, b.ok_or_else(|| missing("b"))?);
            let g = constructions::complete_bipartite(a, b).map_err(|e| e.to_string())?;
            let k3 = named_graph("K", &[3]).map_err(|e| e.to_string())?;
            (
                g,
                vec![("a".into(), a), ("b".into(), b)],
                vec![PatternSpec::new(k3, Mode::Subgraph, "K3")],
            )
        }
        "incidence" => {
            let f = field(q)?;
            let g = constructions::projective_plane_incidence(&f);
            (
                g,
                vec![("q".into(), f.q())],
                ["C3", "C4", "C5"]
                    .iter()
                    .map(|p| {
                        PatternSpec::new(parse_pattern_name(p).unwrap(), Mode::Subgraph, *p)
                    })
                    .collect(),
            )
        }
        "polarity" => {
            let f = field(q)?;
            let g = constructions::polarity_graph(&f);
            (
                g,
                vec![("q".into(), f.q())],
                vec![PatternSpec::new(
                    parse_pattern_name("K2,2").unwrap(),
                    Mode::Subgraph,
                    "K2,2",
                )],
            )
        }
        "bg" => {
            let f = field(q)?;
            let g = constructions::bollobas_gyori(&f);
            (
                g,
                vec![("q".into(), f.q())],
                vec![
                    PatternSpec::new(parse_pattern_name("C5").unwrap(), Mode::Subgraph, "C5"),
                    PatternSpec::new(parse_pattern_name("C4").unwrap(), Mode::Induced, "C4"),
                ],
            )
        }
        "furedi" => {
            let f = field(q)?;
            let t = t.ok_or_else(|| missing("t"))?;
            let g = constructions::furedi_k2t(&f, t).map_err(|e| e.to_string())?;
            let forb = format!("K2,{}", t + 1);
            (
                g,
                vec![("q".into(), f.q()), ("t".into(), t)],
                vec![PatternSpec::new(
                    parse_pattern_name(&forb).unwrap(),
                    Mode::Subgraph,
                    &forb,
                )],
            )
        }
        other => return Err(format!("unknown construction family {other:?}")),
    };
    let report = patterns::check_constraints(&g, &ConstraintSet::new(cert_specs));
    let manifest = ConstructionManifest::new(family, &params, &g, &report);
    Ok((g, manifest))
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn execute(cli: Cli) -> Result<i32, (i32, String)> {
    let usage = |m: String| (1, m);
    let mut cfg = SearchConfig::default();
    if let Some(b) = cli.budget {
        cfg.node_budget = b;
    }
    // replay line: parameters + seed on stderr, never in the report
    eprintln!(
        "# turanlab replay: seed={} budget={} verb={:?}",
        cli.seed, cfg.node_budget, cli.verb
    );
    let budget_exit = |e: &SearchError| {
        matches!(
            e,
            SearchError::BudgetExhausted(_) | SearchError::TimeExhausted(_)
        )
    };
    let search_err = |e: SearchError| (if budget_exit(&e) { 2 } else { 1 }, e.to_string());

    let report: String = match &cli.verb {
        Verb::Construct { family, n, r, a, b, q, t } => {
            let (g, manifest) =
                run_construct(family, *n, *r, *a, *b, *q, *t).map_err(usage)?;
            let g6 = graph6::write_graph6(&g);
            match cli.format {
                Format::Json => format!(
                    "{}\n",
                    serde_json::json!({"graph6": g6, "manifest": manifest})
                ),
                _ => format!(
                    "{g6}\n{}\n",
                    serde_json::to_string_pretty(&manifest).unwrap()
                ),
            }
        }
        Verb::Check { graph, constraints } => {
            let g = load_graph(graph).map_err(usage)?;
            let c = parse_constraints(&constraints.forbid_sub, &constraints.forbid_ind)
                .map_err(usage)?;
            let rep = patterns::check_constraints(&g, &c);
            match cli.format {
                Format::Json => format!("{}\n", serde_json::to_string_pretty(&rep).unwrap()),
                _ => {
                    let mut s = String::new();
                    for chk in &rep.checks {
                        s.push_str(&format!(
                            "{}: {}{}\n",
                            chk.constraint,
                            if chk.passed { "free" } else { "present" },
                            chk.witness
                                .as_ref()
                                .map(|w| format!(" at {w:?}"))
                                .unwrap_or_default()
                        ));
                    }
                    s.push_str(if rep.all_passed { "all free\n" } else { "violated\n" });
                    s
                }
            }
        }
        Verb::Cliques { graph, m } => {
            let g = load_graph(graph).map_err(usage)?;
            format!("{}\n", patterns::count_cliques(&g, *m))
        }
        Verb::Bound { id, .. } => {
            let value = run_bound(id, &cli.verb).map_err(usage)?;
            match cli.format {
                Format::Json => format!("{}\n", serde_json::to_string_pretty(&value).unwrap()),
                _ => {
                    if let Some(v) = value.get("value") {
                        format!("{v}\n")
                    } else {
                        format!("{}\n", value.get("exponent").unwrap_or(&value))
                    }
                }
            }
        }
        Verb::Exact { n, constraints } => {
            let c = parse_constraints(&constraints.forbid_sub, &constraints.forbid_ind)
                .map_err(usage)?;
            let result = search::extremal_number(*n, &c, &cfg).map_err(search_err)?;
            match cli.format {
                Format::Json => {
                    format!("{}\n", serde_json::to_string_pretty(&result.to_json()).unwrap())
                }
                _ => {
                    let mut s = format!(
                        "ex({}; {}) = {}\n",
                        result.n, result.constraints, result.max_edges
                    );
                    for w in &result.witnesses {
                        s.push_str(&format!("witness: {}\n", graph6::write_graph6(w)));
                    }
                    s.push_str(&format!(
                        "nodes={} pruned={} wall_ms={}\n",
                        result.stats.nodes_expanded, result.stats.pruned, result.stats.wall_ms
                    ));
                    s
                }
            }
        }
        Verb::Drc { graph, s, r, samples, t_exp } => {
            let g = load_graph(graph).map_err(usage)?;
            let found = search::drc_find_set(&g, *s, *r, *samples, cli.seed, *t_exp)
                .map_err(search_err)?;
            match found {
                Some(set) => {
                    let members: Vec<usize> = set.iter().collect();
                    match cli.format {
                        Format::Json => format!(
                            "{}\n",
                            json!({"found": true, "size": members.len(), "vertices": members})
                        ),
                        _ => format!("A = {members:?} (|A| = {})\n", members.len()),
                    }
                }
                None => match cli.format {
                    Format::Json => format!("{}\n", json!({"found": false})),
                    _ => "no non-empty set found\n".to_string(),
                },
            }
        }
        Verb::Verify { suite, max_n, per_n } => {
            let rows = match suite.as_str() {
                "thm1" => verify::suite_thm1(max_n.unwrap_or(7), &cfg),
                "thm2" => verify::suite_thm2(max_n.unwrap_or(7), &cfg),
                "thm3" => verify::suite_thm3(max_n.unwrap_or(9), *per_n, &cfg),
                "thm4-eg" => verify::suite_thm4_eg(max_n.unwrap_or(7), &cfg),
                "c3c4-identity" => verify::suite_c3c4_identity(max_n.unwrap_or(7), &cfg),
                "es-c4c5" => verify::suite_es_c4c5(max_n.unwrap_or(7), &cfg),
                "constructions" => verify::suite_constructions(&cfg),
                other => return Err((1, format!("unknown suite {other:?}"))),
            }
            .map_err(search_err)?;
            let all_pass = rows.iter().all(|r| r.pass);
            let body = match cli.format {
                Format::Csv => verify::emit_csv(&rows),
                Format::Json => format!("{}\n", serde_json::to_string_pretty(&rows).unwrap()),
                Format::Text => {
                    let mut s = String::new();
                    for row in &rows {
                        s.push_str(&format!(
                            "n={:<3} {:<40} exact={:<10} {} [{}]\n",
                            row.n,
                            row.constraints,
                            row.exact,
                            row.bounds
                                .iter()
                                .map(|(k, v)| format!("{k}={v}"))
                                .collect::<Vec<_>>()
                                .join(" "),
                            if row.pass { "pass" } else { "FAIL" }
                        ));
                    }
                    s
                }
            };
            emit(&cli.out, &body).map_err(usage)?;
            return Ok(if all_pass { 0 } else { 1 });
        }
    };
    emit(&cli.out, &report).map_err(usage)?;
    Ok(0)
}

/// Parse argv and run; returns the process exit code.
pub fn run<I>(argv: I) -> i32
where
    I: IntoIterator,
    I::Item: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli) {
        Ok(code) => code,
        Err((code, msg)) => {
            eprintln!("error: {msg}");
            code
        }
    }
}
