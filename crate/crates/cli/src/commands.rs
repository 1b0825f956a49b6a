use std::io::Read;

use serde_json::{json, Value};

use pmpgraph::bipartite::{bfs_bipartition_oracle, rotation_two_coloring, spectral_bipartite_test};
use pmpgraph::coloring::{
    brute_force_chromatic, function_graph_color, greedy_list_coloring, min_degree_peel_color, wilf_color, Coloring,
    ListAssignment,
};
use pmpgraph::generators::{self, GraphFamily};
use pmpgraph::io::{self, EdgeList};
use pmpgraph::limits::{accumulate_spectra, gap_persistence, max_gap};
use pmpgraph::matching::{brouwer_haemers_test, tutte_scan, ScanMode};
use pmpgraph::spectral;
use pmpgraph::{Graph, VertexSubset};

use crate::report::{digest, report};
use crate::{Algorithm, Cli, ColorArgs, Command, Failure, Family, GenArgs, LimitArgs, Mode};

type Outcome = Result<String, Failure>;

fn input_error(code: &str, message: impl Into<String>) -> Failure {
    Failure::Input { code: code.into(), message: message.into() }
}

pub fn run(cli: &Cli) -> Outcome {
    let g = &cli.global;
    if !(g.tol.is_finite() && g.tol > 0.0) {
        return Err(input_error("invalid_value", format!("--tol {} must be positive", g.tol)));
    }
    match &cli.command {
        Command::Gen(args) => gen(cli, args),
        Command::Verify => crate::verify::run(),
        Command::Limit(args) => limit(cli, args),
        Command::Bipartite(args) if args.alpha.is_some() => {
            let alpha = args.alpha.expect("checked");
            let r = rotation_two_coloring(alpha, args.gamma, args.samples)?;
            let payload = json!({
                "alpha": alpha,
                "gamma": args.gamma,
                "samples": args.samples,
                "defect_count": r.defect_count,
                "violations": r.violations,
                "labels": r.labels,
                "hit_times": r.hit_times,
            });
            Ok(report("bipartite", None, payload))
        }
        cmd => {
            let input = load(cli)?;
            let d = Some(digest(&input.to_text()));
            let payload = match cmd {
                Command::Spectrum => spectrum(cli, &input)?,
                Command::Bounds => bounds(cli, &input)?,
                Command::Color(args) => color(&input, args)?,
                Command::Bipartite(_) => bipartite(&input)?,
                Command::Tutte(args) => tutte(cli, &input, args.samples)?,
                _ => unreachable!("handled above"),
            };
            Ok(report(cmd.name(), d, payload))
        }
    }
}

fn load(cli: &Cli) -> Result<EdgeList, Failure> {
    let text = match &cli.global.input {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| input_error("io", format!("{}: {e}", path.display())))?,
        None => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(|e| input_error("io", e.to_string()))?;
            s
        }
    };
    let list = io::parse(&text)?;
    let n = list.undirected().n();
    if let Some(cap) = cli.global.max_n {
        if n > cap {
            return Err(Failure::Cap(format!("input has {n} vertices, --max-n is {cap}")));
        }
    }
    Ok(list)
}

fn gen(cli: &Cli, args: &GenArgs) -> Outcome {
    let s = &args.source;
    let seed = cli.global.seed;
    let pair = |v: &Vec<usize>| (v[0], v[1]);
    let list = if s.paley {
        EdgeList::Directed(generators::paley_tournament())
    } else if let Some(v) = &s.torus {
        let (r, c) = pair(v);
        if r == 0 || c == 0 {
            return Err(input_error("invalid_parameter", "torus sides must be positive"));
        }
        EdgeList::Directed(generators::function_graph(generators::torus_shifts(r, c))?)
    } else {
        let g = if let Some(n) = s.cycle {
            generators::cycle(n)?
        } else if let Some(n) = s.path {
            generators::path(n)?
        } else if let Some(n) = s.complete {
            generators::complete(n)?
        } else if let Some(v) = &s.complete_bipartite {
            let (a, b) = pair(v);
            generators::complete_bipartite(a, b)?
        } else if let Some(k) = s.star {
            generators::star(k)?
        } else if s.petersen {
            generators::petersen()
        } else if let Some(v) = &s.random_regular {
            let (n, d) = pair(v);
            generators::random_regular(n, d, seed)?
        } else if let Some(n) = s.gnp {
            generators::gnp(n, args.p, seed)?
        } else {
            unreachable!("clap requires one generator")
        };
        EdgeList::Undirected(g)
    };
    let list = match (args.subdivide, list) {
        (false, list) => list,
        (true, EdgeList::Undirected(g)) => EdgeList::Undirected(generators::subdivide(&g)?),
        (true, EdgeList::Directed(_)) => {
            return Err(input_error("invalid_parameter", "--subdivide needs an undirected graph"));
        }
    };
    if let Some(cap) = cli.global.max_n {
        let n = list.undirected().n();
        if n > cap {
            return Err(Failure::Cap(format!("generated graph has {n} vertices, --max-n is {cap}")));
        }
    }
    Ok(list.to_text())
}

fn subset(s: &VertexSubset) -> Value {
    json!(s.to_vec())
}

fn spectrum(cli: &Cli, input: &EdgeList) -> Result<Value, Failure> {
    let g = input.undirected();
    let tol = cli.global.tol;
    let adj = spectral::adjacency_spectrum(&g)?.with_tol(tol);
    let lap = spectral::laplacian_spectrum(&g)?.with_tol(tol);
    let (min, max) = spectral::extremes(&adj)?;
    Ok(json!({
        "n": g.n(),
        "edges": g.edge_count(),
        "directed_input": matches!(input, EdgeList::Directed(_)),
        "spectrum": adj.values(),
        "laplacian": lap.values(),
        "min": min,
        "max": max,
        "symmetric": adj.is_symmetric(),
    }))
}

fn bounds(cli: &Cli, input: &EdgeList) -> Result<Value, Failure> {
    let g = input.undirected();
    let b = spectral::bounds_with_tol(&g, cli.global.tol)?;
    Ok(json!({
        "n": b.n,
        "max_degree": b.max_degree,
        "min_degree": b.min_degree,
        "avg_degree": b.avg_degree,
        "big_m": b.big_m,
        "m": b.m,
        "wilf": b.wilf,
        "hoffman": b.hoffman,
        "gap": b.gap,
        "mean_zero": b.mean_zero.map(|(lo, hi)| json!({"m_l": lo, "big_m_l": hi})),
        "laplacian_max": b.laplacian_max,
        "independence_bound": b.independence_bound,
        "mindeg_independence_bound": b.mindeg_independence_bound,
    }))
}

fn coloring_json(name: &str, g: &Graph, c: &Coloring, bound: usize) -> Value {
    json!({
        "algorithm": name,
        "palette": c.palette_size(),
        "bound": bound,
        "proper": c.is_proper(g),
        "total": c.is_total(),
        "colors": c.colors(),
    })
}

fn color(input: &EdgeList, args: &ColorArgs) -> Result<Value, Failure> {
    if args.algorithm == Algorithm::Function {
        let EdgeList::Directed(d) = input else {
            return Err(input_error("expected_directed", "--algorithm function needs a directed edge list"));
        };
        let c = function_graph_color(d)?;
        let n_f = d.generator_count();
        let mut v = coloring_json("function", &d.underlying(), &c, 2 * n_f + 1);
        v["generators"] = json!(n_f);
        return Ok(v);
    }
    let g = input.undirected();
    Ok(match args.algorithm {
        Algorithm::Greedy => {
            let k = g.max_degree() + 1;
            let c = greedy_list_coloring(&g, &ListAssignment::uniform(g.n(), k))?;
            coloring_json("greedy", &g, &c, k)
        }
        Algorithm::Wilf => {
            let b = spectral::bounds(&g)?;
            let c = wilf_color(&g)?;
            coloring_json("wilf", &g, &c, b.wilf)
        }
        Algorithm::Peel => {
            let m = args
                .bound
                .ok_or_else(|| input_error("missing_bound", "--algorithm peel needs --bound"))?;
            let c = min_degree_peel_color(&g, m)?;
            coloring_json("peel", &g, &c, m.max(0.0).floor() as usize + 1)
        }
        Algorithm::Exact => {
            let chi = brute_force_chromatic(&g)?;
            json!({ "algorithm": "exact", "chromatic_number": chi })
        }
        Algorithm::Function => unreachable!("handled above"),
    })
}

fn bipartite(input: &EdgeList) -> Result<Value, Failure> {
    let g = input.undirected();
    let v = spectral_bipartite_test(&g)?;
    let bfs = bfs_bipartition_oracle(&g);
    Ok(json!({
        "symmetric_spectrum": v.symmetric_spectrum,
        "minus_d_in_spectrum": v.minus_d_in_spectrum,
        "regular": v.regular,
        "bipartition": v.bipartition.as_ref().map(|(a, b)| json!([subset(a), subset(b)])),
        "defect": subset(&v.defect),
        "note": v.note,
        "consistent": v.consistent(),
        "bfs_bipartite": bfs.is_some(),
        "bfs_bipartition": bfs.as_ref().map(|(a, b)| json!([subset(a), subset(b)])),
    }))
}

fn tutte(cli: &Cli, input: &EdgeList, samples: usize) -> Result<Value, Failure> {
    let g = input.undirected();
    let mode = match cli.global.mode {
        Mode::Exhaustive => ScanMode::Exhaustive,
        Mode::Randomized => ScanMode::Randomized { seed: cli.global.seed, samples },
    };
    let r = tutte_scan(&g, mode)?;
    let bh = if g.regular_degree().is_some() && g.is_connected() && g.n() >= 2 {
        Some(brouwer_haemers_test(&g)?)
    } else {
        None
    };
    Ok(json!({
        "c_star": r.c_star,
        "witness": subset(&r.witness),
        "witness_odd_components": r.witness_odd_components,
        "classical_holds": r.classical_holds,
        "strict_holds": r.strict_holds,
        "mode": match mode { ScanMode::Exhaustive => "exhaustive", ScanMode::Randomized { .. } => "randomized" },
        "subsets_scanned": r.subsets_scanned,
        "bh_condition": r.bh_condition,
        "brouwer_haemers": bh,
        "matching": r.matching,
    }))
}

fn limit(cli: &Cli, args: &LimitArgs) -> Outcome {
    if let Some(cap) = cli.global.max_n {
        if args.up_to > cap {
            return Err(Failure::Cap(format!("--up-to {} exceeds --max-n {cap}", args.up_to)));
        }
    }
    let family = match args.family {
        Family::Cycles => GraphFamily::cycles(args.up_to),
        Family::RandomRegular => {
            let d = args.degree;
            let index_set = (d + 1..=args.up_to).filter(|k| (k * d).is_multiple_of(2)).collect();
            GraphFamily::random_regular(d, cli.global.seed, index_set)
        }
    };
    let acc = accumulate_spectra(&family, args.up_to)?;
    let bound = family.degree_bound as f64;
    let (lo, hi) = match &args.interval {
        Some(v) => (v[0], v[1]),
        None => (-bound, bound),
    };
    let gap = max_gap(&acc, (lo, hi))?;
    let persistence = gap_persistence(&family, args.up_to);
    let per_index: Vec<Value> = persistence
        .per_index
        .iter()
        .map(|(k, r)| match r {
            Ok(x) => json!({"index": k, "gap": x}),
            Err(e) => json!({"index": k, "error": e.code()}),
        })
        .collect();
    let mut payload = json!({
        "family": family.name,
        "degree_bound": family.degree_bound,
        "up_to": args.up_to,
        "indices": acc.per_index.len(),
        "point_count": acc.points.len(),
        "interval": [lo, hi],
        "max_gap": gap,
        "gaps": per_index,
        "gap_min": persistence.min,
        "gap_max": persistence.max,
        "gap_trend": format!("{:?}", persistence.trend).to_lowercase(),
    });
    if args.points {
        payload["points"] = json!(acc.points);
    }
    Ok(report("limit", None, payload))
}
