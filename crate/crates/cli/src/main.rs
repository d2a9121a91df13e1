use std::io::Read;
use std::process::ExitCode;
use std::time::Instant;

use cheeger::cochains::{cheeger_constant, Augmentation};
use cheeger::graphs::{mw_certificate, staircase, CutVerdict};
use cheeger::search::{self, cheeger_number, conjectures_of};
use cheeger::{cmcomplex, verify, Error, Graph, Partition};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "cheeger", version, about = "Exact Cheeger constants of simplices via cut-minimal graphs")]
struct Cli {
    /// Worker threads; defaults to CHEEGER_JOBS or the available parallelism.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Accepted for interface stability; nothing is randomized.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Report wall time where supported.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Partition calculus.
    Partition {
        #[command(subcommand)]
        cmd: PartitionCmd,
    },
    /// Print the staircase graph G_n(λ) as an edge list.
    Staircase { n: usize, lambda: Partition },
    /// Check cut-minimality of a graph file (`-` for stdin).
    CheckCutmin { file: String },
    /// The expansion h(G) of a graph file.
    Hgraph { file: String },
    /// Print the c-fold blowup of a graph file.
    Blowup { file: String, c: usize },
    /// Meshulam–Wallach counts of a graph file.
    MwCert { file: String },
    /// Cochain computations on the full simplex.
    Cochain {
        #[command(subcommand)]
        cmd: CochainCmd,
    },
    /// Summary of the complex of cut-minimal graphs.
    Cm {
        n: usize,
        #[arg(long)]
        betti: bool,
        #[arg(long)]
        maximal: bool,
    },
    /// Exact h(n) by exhaustive search.
    Search {
        n: usize,
        /// List every Cheeger graph instead of the first.
        #[arg(long)]
        all_cheeger: bool,
        #[arg(long)]
        conjectures: bool,
    },
    /// CSV of known bounds on h(n).
    Table {
        n_max: usize,
        /// Add a decimal column for reading.
        #[arg(long)]
        approx: bool,
    },
    /// Run the reproduction checks.
    Verify {
        #[command(subcommand)]
        cmd: VerifyCmd,
    },
}

#[derive(Subcommand)]
enum PartitionCmd {
    Info { lambda: Partition },
}

#[derive(Subcommand)]
enum CochainCmd {
    /// h_k of the simplex on n vertices.
    Hk {
        n: usize,
        k: i32,
        #[arg(long)]
        no_augment: bool,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    Paper,
}

enum Output {
    Json(Value),
    Text(String),
    /// Text output that counts as a failed verification.
    Failed(String),
}

fn read_graph(file: &str) -> Result<Graph, Error> {
    let text = if file == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::Parse(format!("stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(file).map_err(|e| Error::Parse(format!("{file}: {e}")))?
    };
    Graph::from_text(&text)
}

fn to_json<T: serde::Serialize + ?Sized>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn partition_info(l: &Partition) -> Value {
    json!({
        "parts": l,
        "conjugate": l.conjugate(),
        "box": l.box_size(),
        "depth": l.depth(),
        "weight": l.weight(),
        "sq_weight": l.sq_weight(),
        "n_r": l.n_r(),
        "n_r_conj": l.conjugate().n_r(),
        "n_d": l.n_d(),
        "n_min": l.n_min(),
        "h": l.h(),
        "deficiency": l.deficiency(),
    })
}

fn run(cli: &Cli) -> Result<Output, Error> {
    let start = Instant::now();
    let out = match &cli.cmd {
        Cmd::Partition {
            cmd: PartitionCmd::Info { lambda },
        } => Output::Json(partition_info(lambda)),
        Cmd::Staircase { n, lambda } => Output::Text(staircase(*n, lambda)?.to_text()),
        Cmd::CheckCutmin { file } => {
            let g = read_graph(file)?;
            Output::Json(match g.is_cut_minimal()? {
                CutVerdict::Ok => json!({ "cut_minimal": true }),
                CutVerdict::Violated(w) => json!({ "cut_minimal": false, "witness": w }),
            })
        }
        Cmd::Hgraph { file } => {
            let g = read_graph(file)?;
            let (ones, threes) = g.tau_counts();
            Output::Json(json!({
                "n": g.n(),
                "edges": g.edge_count(),
                "h": g.h()?,
                "odd_triangles": g.count_odd_triangles(),
                "tau_ones": ones,
                "tau_thirds": threes,
            }))
        }
        Cmd::Blowup { file, c } => Output::Text(read_graph(file)?.blowup(*c)?.to_text()),
        Cmd::MwCert { file } => {
            let g = read_graph(file)?;
            let cert = mw_certificate(&g);
            Output::Json(json!({
                "edges": g.edge_count(),
                "m_total": cert.m_total,
                "m_v": cert.m_v,
                "min_m_v": cert.min_m_v(),
                "sharp": cert.sharp,
                "bound_holds": cert.min_m_v() >= g.edge_count(),
            }))
        }
        Cmd::Cochain {
            cmd: CochainCmd::Hk { n, k, no_augment },
        } => {
            let aug = if *no_augment { Augmentation::Plain } else { Augmentation::Augmented };
            Output::Json(to_json(&cheeger_constant(*n, *k, aug)?))
        }
        Cmd::Cm { n, betti, maximal } => {
            let mut v = to_json(&cmcomplex::summary(*n, *betti)?);
            if !maximal {
                v.as_object_mut().expect("object").remove("num_maximal_faces_by_dim");
            }
            Output::Json(v)
        }
        Cmd::Search {
            n,
            all_cheeger,
            conjectures,
        } => {
            let mut r = cheeger_number(*n)?;
            if cli.timing {
                r.stats.wall_time_ms = Some(start.elapsed().as_millis());
            }
            let mut v = to_json(&r);
            v["cheeger_count"] = json!(r.cheeger_graphs.len());
            if !all_cheeger {
                v["cheeger_graphs"] = to_json(&r.cheeger_graphs[..1]);
            }
            if *conjectures {
                let mut c = to_json(&conjectures_of(&r));
                c.as_object_mut().expect("object").remove("graphs");
                v["conjectures"] = c;
            }
            Output::Json(v)
        }
        Cmd::Table { n_max, approx } => {
            let rows = search::h_table(*n_max, None)?;
            let mut s = String::from(if *approx {
                "n,lower,upper,exact,source,approx\n"
            } else {
                "n,lower,upper,exact,source\n"
            });
            for r in rows {
                let exact = r.exact.map(|e| e.to_string()).unwrap_or_default();
                s += &format!("{},{},{},{},{}", r.n, r.lower, r.upper, exact, r.source);
                if *approx {
                    s += &format!(",{:.6}", r.upper.to_f64());
                }
                s.push('\n');
            }
            Output::Text(s)
        }
        Cmd::Verify { cmd: VerifyCmd::Paper } => {
            let claims = verify::paper_claims()?;
            let mut s = String::new();
            for c in &claims {
                s += &format!("{c}\n");
            }
            let failed = claims.iter().filter(|c| !c.pass).count();
            s += &format!("{} claims, {} passed, {} failed\n", claims.len(), claims.len() - failed, failed);
            if failed == 0 {
                Output::Text(s)
            } else {
                Output::Failed(s)
            }
        }
    };
    Ok(out)
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Infeasible { .. } => 3,
        Error::Parse(_) | Error::InvalidPartition(_) | Error::Precondition { .. } | Error::IndexOutOfRange { .. } => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command: Vec<String> = std::env::args().skip(1).collect();
    let command = command.join(" ");

    let jobs = cli
        .jobs
        .or_else(|| std::env::var("CHEEGER_JOBS").ok().and_then(|s| s.parse().ok()))
        .unwrap_or(0);
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("cannot start worker pool: {e}");
            return ExitCode::from(1);
        }
    };

    match pool.install(|| run(&cli)) {
        Ok(Output::Json(payload)) => {
            let v = json!({ "command": command, "status": "ok", "payload": payload });
            println!("{}", serde_json::to_string_pretty(&v).expect("json"));
            ExitCode::SUCCESS
        }
        Ok(Output::Text(s)) => {
            print!("{s}");
            ExitCode::SUCCESS
        }
        Ok(Output::Failed(s)) => {
            print!("{s}");
            ExitCode::from(1)
        }
        Err(e) => {
            let v = json!({ "command": command, "status": "error", "message": e.to_string() });
            println!("{}", serde_json::to_string_pretty(&v).expect("json"));
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

