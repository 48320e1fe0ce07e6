use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use drg_spectra::classify::{
    classify, d3_family, identities::run_identity_suites, sieve, summary_line, Classification,
    Verdict, MAX_CLASSIFY_DIAMETER,
};
use drg_spectra::exactnum::ExactValue;
use drg_spectra::graphs::{
    bipartite_double, construct_family, intersection_array, parse_edge_list, write_edge_list,
    write_labels, DrgReport, Family, Graph,
};
use drg_spectra::spectral::{spectrum, IntersectionArray, SpectralData};
use drg_spectra::Error;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "drg-spectra",
    version,
    about = "Exact spectra and classification of almost-bipartite distance-regular graphs"
)]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a family member and write it as an edge list.
    Construct {
        /// cycle, hypercube, folded_cube or odd.
        family: Family,
        /// Cycle length, cube dimension or ground-set size.
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write vertex labels here.
        #[arg(long)]
        labels: Option<PathBuf>,
    },
    /// Intersection array, spectrum, Q-polynomial orderings and
    /// classification of a graph or an array.
    Analyze {
        /// Edge-list file.
        #[arg(required_unless_present = "array", conflicts_with = "array")]
        path: Option<PathBuf>,
        /// An array such as {4,3,3;1,1,2}.
        #[arg(long)]
        array: Option<String>,
        /// Check every p^h_ij, not only b_i and c_i.
        #[arg(long)]
        strict_drg: bool,
    },
    /// Bipartite double of a graph.
    Double {
        path: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Parameters of the diameter-3 family at (beta, mu).
    Family {
        #[arg(long, allow_hyphen_values = true)]
        beta: ExactValue,
        #[arg(long)]
        mu: i64,
    },
    /// Feasibility sieve over integral beta and mu.
    Sieve {
        #[arg(long, allow_hyphen_values = true)]
        beta_min: i64,
        #[arg(long, allow_hyphen_values = true)]
        beta_max: i64,
        #[arg(long)]
        mu_max: i64,
        /// Allow beta >= -2.
        #[arg(long)]
        wide: bool,
        /// Write the records here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Randomized checks of the closed-form identities.
    CheckIdentities {
        #[arg(long, default_value_t = 500)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        dmax: usize,
    },
}

/// Exit 0 on success, 1 on a negative answer, 2 on bad input.
enum Outcome {
    Yes,
    No,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = std::env::var("DRG_SPECTRA_THREADS")
        .ok()
        .and_then(|v| v.parse().ok())
    {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
    match run(cli) {
        Ok(Outcome::Yes) => ExitCode::SUCCESS,
        Ok(Outcome::No) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn read_graph(path: &PathBuf) -> Result<Graph, Error> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Parameter(format!("{}: {e}", path.display())))?;
    parse_edge_list(&text)
}

fn write_file(path: &PathBuf, text: &str) -> Result<(), Error> {
    fs::write(path, text).map_err(|e| Error::Parameter(format!("{}: {e}", path.display())))
}

fn print_json(v: &Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(v).expect("values serialize")
    );
}

fn spectrum_text(sd: &SpectralData) -> String {
    sd.eigenvalues
        .iter()
        .zip(&sd.multiplicities)
        .map(|(e, m)| format!("{e}^{m}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn spectrum_json(sd: &SpectralData) -> Value {
    sd.eigenvalues
        .iter()
        .zip(&sd.multiplicities)
        .map(|(e, m)| json!({"eigenvalue": e, "multiplicity": m}))
        .collect()
}

fn run(cli: Cli) -> Result<Outcome, Error> {
    let json = cli.json;
    match cli.command {
        Command::Construct {
            family,
            n,
            out,
            labels,
        } => {
            let g = construct_family(family, n)?;
            let report = intersection_array(&g, false)?;
            if let Some(p) = &labels {
                write_file(p, &write_labels(&g))?;
            }
            match &out {
                Some(p) => write_file(p, &write_edge_list(&g))?,
                None if !json => print!("{}", write_edge_list(&g)),
                None => {}
            }
            let array = report.array().map(ToString::to_string);
            if json {
                print_json(&json!({
                    "family": family.to_string(), "n": n, "vertices": g.n(),
                    "edges": g.num_edges(), "array": array,
                }));
            } else {
                eprintln!(
                    "{family}({n}): {} vertices, {} edges, array {}",
                    g.n(),
                    g.num_edges(),
                    array.as_deref().unwrap_or("none")
                );
            }
            Ok(Outcome::Yes)
        }
        Command::Analyze {
            path,
            array,
            strict_drg,
        } => {
            let mut graph_info = Value::Null;
            let arr: IntersectionArray = match (path, array) {
                (_, Some(a)) => a.parse()?,
                (Some(p), None) => {
                    let g = read_graph(&p)?;
                    graph_info = json!({"vertices": g.n(), "edges": g.num_edges()});
                    match intersection_array(&g, strict_drg)? {
                        DrgReport::DistanceRegular(a) => a,
                        DrgReport::NotDistanceRegular(w) => {
                            if json {
                                print_json(
                                    &json!({"graph": graph_info, "distance_regular": false, "witness": w}),
                                );
                            } else {
                                println!("not distance-regular");
                                println!(
                                    "witness: vertices {} and {} at distance {}: {} expected {} found {}",
                                    w.x, w.y, w.distance, w.parameter, w.expected, w.found
                                );
                            }
                            return Ok(Outcome::No);
                        }
                    }
                }
                (None, None) => unreachable!("clap requires one of them"),
            };
            analyze_array(&arr, graph_info, json)
        }
        Command::Double { path, out } => {
            let g = read_graph(&path)?;
            let d = bipartite_double(&g);
            if let Some(p) = &out {
                write_file(p, &write_edge_list(&d))?;
            }
            let report = intersection_array(&d, false)?;
            let array = report.array().map(ToString::to_string);
            if json {
                print_json(&json!({
                    "vertices": d.n(), "edges": d.num_edges(), "bipartite": d.is_bipartite(), "array": array,
                }));
            } else {
                println!("vertices {} edges {}", d.n(), d.num_edges());
                println!("bipartite {}", d.is_bipartite());
                println!(
                    "array {}",
                    array.as_deref().unwrap_or("none (not distance-regular)")
                );
                if out.is_none() {
                    print!("{}", write_edge_list(&d));
                }
            }
            Ok(Outcome::Yes)
        }
        Command::Family { beta, mu } => {
            let p = d3_family(&beta, mu)?;
            if json {
                print_json(&serde_json::to_value(&p).expect("serializes"));
            } else {
                let th: Vec<String> = p.theta.iter().map(ToString::to_string).collect();
                println!("beta {} mu {}", p.beta, p.mu);
                println!("k {} c2 {} c3 {}", p.k, p.c2, p.c3);
                println!(
                    "b2 {} (k - mu: {})",
                    p.b2,
                    if p.b2_consistent { "equal" } else { "differs" }
                );
                println!("theta {}", th.join(" "));
                match &p.array {
                    Some(a) => println!("array {a}"),
                    None => println!("array none (k or c3 not an integer)"),
                }
            }
            Ok(Outcome::Yes)
        }
        Command::Sieve {
            beta_min,
            beta_max,
            mu_max,
            wide,
            out,
        } => {
            let records = sieve(beta_min, beta_max, mu_max, wide)?;
            let body = if json {
                serde_json::to_string_pretty(&records).expect("records serialize") + "\n"
            } else {
                records.iter().map(|r| format!("{r}\n")).collect()
            };
            match &out {
                Some(p) => write_file(p, &body)?,
                None => print!("{body}"),
            }
            eprintln!("{}", summary_line(&records));
            Ok(Outcome::Yes)
        }
        Command::CheckIdentities { trials, seed, dmax } => {
            if trials == 0 {
                eprintln!("warning: zero trials; the randomized suites pass vacuously");
            }
            if dmax < 3 {
                return Err(Error::Parameter(format!(
                    "dmax must be at least 3, got {dmax}"
                )));
            }
            let results = run_identity_suites(trials, seed, dmax);
            let ok = results.iter().all(|r| r.passed());
            if json {
                print_json(&json!({"seed": seed, "trials": trials, "results": results}));
            } else {
                for r in &results {
                    let status = if r.passed() { "pass" } else { "FAIL" };
                    print!(
                        "{status} {} samples={} failures={}",
                        r.name, r.samples, r.failures
                    );
                    match &r.first_failure {
                        Some(f) => println!(" first: {f}"),
                        None => println!(),
                    }
                }
            }
            Ok(if ok { Outcome::Yes } else { Outcome::No })
        }
    }
}

fn analyze_array(arr: &IntersectionArray, graph_info: Value, json: bool) -> Result<Outcome, Error> {
    arr.check_feasible()?;
    let sd = spectrum(arr)?;
    let orderings = sd.q_polynomial_orderings()?;
    let d = arr.diameter();
    let classification: Option<Classification> =
        if arr.is_almost_bipartite() && (3..=MAX_CLASSIFY_DIAMETER).contains(&d) {
            Some(classify(arr)?)
        } else {
            None
        };
    let alarm = matches!(
        classification.as_ref().map(|c| &c.verdict),
        Some(Verdict::TheoremContradiction(_))
    );
    if json {
        let ords: Vec<Value> = orderings
            .iter()
            .map(|o| json!({"permutation": o.permutation, "eigenvalues": o.eigenvalues, "formal": o.formal}))
            .collect();
        print_json(&json!({
            "graph": graph_info,
            "distance_regular": true,
            "array": arr.to_string(),
            "vertices": sd.vertex_count().to_string(),
            "spectrum": spectrum_json(&sd),
            "almost_bipartite": arr.is_almost_bipartite(),
            "q_polynomial_orderings": ords,
            "classification": classification,
        }));
    } else {
        println!("array {arr}");
        println!("vertices {}", sd.vertex_count());
        println!("spectrum {}", spectrum_text(&sd));
        println!("almost-bipartite {}", arr.is_almost_bipartite());
        if orderings.is_empty() {
            println!("Q-polynomial orderings: none");
        }
        for o in &orderings {
            let ev: Vec<String> = o.eigenvalues.iter().map(ToString::to_string).collect();
            let formal = if o.formal { " (formal)" } else { "" };
            println!("Q-polynomial ordering {}{formal}", ev.join(", "));
        }
        if let Some(c) = &classification {
            println!("classification {}", c.verdict);
            for (beta, mu) in c.beta_mu_pairs() {
                println!("  beta {beta} mu {mu}");
            }
            if let Some(flags) = &c.flags {
                for f in flags {
                    let v = f.pass.map_or("na".to_string(), |b| b.to_string());
                    println!("  {} {v}", f.name);
                }
            }
        }
    }
    Ok(if alarm { Outcome::No } else { Outcome::Yes })
}
