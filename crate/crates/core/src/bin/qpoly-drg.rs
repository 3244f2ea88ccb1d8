use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use qpoly_drg::analysis::{analyze, CaughmanReport};
use qpoly_drg::arith::{QuadraticNumber, Rational};
use qpoly_drg::classify::{
    classify, report_render, search, ClassifyInput, ClassifyOptions, Document, Format, SearchParams,
};
use qpoly_drg::graphs::{
    build_folded_hypercube, build_hypercube, build_odd_graph, build_projective_incidence, verify_distance_regular_with,
    Graph, VerifyOptions,
};
use qpoly_drg::{Error, IntersectionArray};

/// Q-polynomial distance-regular graphs of girth 6: parameters, spectra,
/// constructions and certificates.
#[derive(Parser)]
#[command(name = "qpoly-drg", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Derived parameters, spectrum, Krein parameters and Q-polynomial orderings.
    Analyze {
        array: String,
        #[arg(long)]
        json: bool,
    },
    /// Classify an intersection array or a graph file.
    Classify {
        /// `{b_0,...;c_1,...}` or the path of a graph file.
        input: String,
        #[arg(long)]
        no_external: bool,
        #[arg(long)]
        json: bool,
    },
    /// Build a family member and write it in `p`/`e` edge format.
    Construct {
        family: FamilyArg,
        /// D for hypercube, m for folded-cube and odd, the order for projective.
        param: u32,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// BFS verification of distance-regularity.
    Verify {
        graph: PathBuf,
        /// Also check every p^h_ij (cubic in the vertex count).
        #[arg(long)]
        full: bool,
        #[arg(long)]
        json: bool,
    },
    /// The bipartite Q-polynomial array for (q, s*, D).
    Caughman {
        #[arg(allow_hyphen_values = true)]
        q: String,
        #[arg(allow_hyphen_values = true)]
        s_star: String,
        d: usize,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate arrays with a_1 = a_2 = 0, c_2 = 1 and decide each one.
    Search {
        #[arg(long, default_value_t = 3)]
        dmin: usize,
        #[arg(long, default_value_t = 8)]
        dmax: usize,
        #[arg(long, default_value_t = 20)]
        kmax: u64,
        #[arg(long)]
        no_external: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Hypercube,
    FoldedCube,
    Odd,
    Projective,
}

fn format(json: bool) -> Format {
    if json {
        Format::Json
    } else {
        Format::Text
    }
}

fn parse_rational(s: &str) -> Result<Rational, Error> {
    s.trim().parse().map_err(|_| Error::Parse(format!("not a rational number: {s:?}")))
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn run(cmd: Command) -> Result<String, Error> {
    match cmd {
        Command::Analyze { array, json } => {
            let a = analyze(&array.parse::<IntersectionArray>()?);
            Ok(if json { pretty(&a.to_json()) } else { a.to_text() })
        }
        Command::Classify {
            input,
            no_external,
            json,
        } => {
            let input = if input.trim_start().starts_with('{') {
                ClassifyInput::Array(input.parse()?)
            } else {
                ClassifyInput::Graph(Graph::read_file(&input)?)
            };
            let v = classify(&input, ClassifyOptions { no_external })?;
            Ok(report_render(Document::Verdict(&v), format(json)))
        }
        Command::Construct { family, param, output } => {
            let g = match family {
                FamilyArg::Hypercube => build_hypercube(param as usize)?,
                FamilyArg::FoldedCube => build_folded_hypercube(param as usize)?,
                FamilyArg::Odd => build_odd_graph(param as usize)?,
                FamilyArg::Projective => build_projective_incidence(param)?,
            };
            match output {
                Some(path) => {
                    g.write_file(&path)?;
                    Ok(format!(
                        "wrote {} vertices, {} edges to {}\n",
                        g.vertex_count(),
                        g.edge_count(),
                        path.display()
                    ))
                }
                None => Ok(g.to_edge_format()),
            }
        }
        Command::Verify { graph, full, json } => {
            let g = Graph::read_file(&graph)?;
            let p = verify_distance_regular_with(
                &g,
                VerifyOptions {
                    full_intersection_numbers: full,
                },
            );
            let array = p.array.as_ref().map(|a| a.to_string());
            if json {
                Ok(pretty(&serde_json::json!({
                    "schemaVersion": qpoly_drg::classify::SCHEMA_VERSION,
                    "kind": "distanceProfile",
                    "vertexCount": p.vertex_count,
                    "edgeCount": p.edge_count,
                    "connected": p.connected,
                    "diameter": p.diameter,
                    "girth": p.girth,
                    "bipartite": p.bipartite,
                    "distanceRegular": p.is_distance_regular(),
                    "array": array,
                    "failure": p.failure,
                    "intersectionNumbers": p.intersection_numbers,
                })))
            } else {
                let mut s = format!(
                    "{} vertices, {} edges, diameter {}, girth {}, {}\n",
                    p.vertex_count,
                    p.edge_count,
                    p.diameter,
                    p.girth.map_or("none".into(), |g| g.to_string()),
                    if p.bipartite { "bipartite" } else { "not bipartite" }
                );
                match (&array, &p.failure) {
                    (Some(a), _) => s += &format!("distance-regular with array {a}\n"),
                    (None, Some(f)) => s += &format!("not distance-regular: {f}\n"),
                    (None, None) => s += "not distance-regular\n",
                }
                Ok(s)
            }
        }
        Command::Caughman { q, s_star, d, json } => {
            let q = parse_rational(&q)?;
            let s = QuadraticNumber::from_rational(parse_rational(&s_star)?);
            let r = CaughmanReport::compute(q, s, d)?;
            Ok(if json { pretty(&r.to_json()) } else { r.to_text() })
        }
        Command::Search {
            dmin,
            dmax,
            kmax,
            no_external,
            json,
        } => {
            let r = search(SearchParams {
                d_min: dmin,
                d_max: dmax,
                k_max: kmax,
                no_external,
            })?;
            Ok(report_render(Document::Search(&r), format(json)))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_internal() { 2 } else { 1 })
        }
    }
}
