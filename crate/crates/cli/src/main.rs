mod builtin;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use unicyclic::edgelist::{parse_edge_list, write_edge_list};
use unicyclic::enumerate::verify_minimizer_jobs;
use unicyclic::properties::{run_properties, Scope};
use unicyclic::reproduce::{reproduce, REPRODUCE_TOL};
use unicyclic::spectra::{laplacian_spectral_radius, perron_vector, signless_spectral_radius};
use unicyclic::theory::{build_ordering, check_theorem_hypotheses};
use unicyclic::transforms::{chain_paths, flatten_trees, graft_edge, open_and_chain, open_cycle, GraftSite};
use unicyclic::{decompose_unicyclic, EnumerateError, Graph, TheoryError, TransformError};

const EXIT_FALSE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_NUMERIC: u8 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "unicyclic", version, about = "Laplacian spectral radius of unicyclic graphs")]
struct Cli {
    /// Eigensolver tolerance.
    #[arg(long, global = true, default_value_t = 1e-12)]
    tol: f64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads for the eigenvalue fan-out (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Spectral summary of a builtin graph or an edge-list file.
    Spectral {
        /// u(n,g), ubar(n,g), cyc_pend(g,[p,...]), s1, cycle(g), path(n), star(n), or a path.
        input: String,
        /// Number of largest Perron components to list.
        #[arg(long, default_value_t = 5)]
        top: usize,
    },
    /// Exhaustive check that U(n,g) uniquely minimizes the spectral radius.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        g: usize,
    },
    /// Recompute the reference spectral radii.
    Reproduce,
    /// Run the randomized property suites.
    Properties {
        #[arg(long, default_value = "all")]
        scope: String,
    },
    /// Apply a surgery and print the resulting edge list.
    Surgery {
        #[command(subcommand)]
        op: Surgery,
    },
}

#[derive(Debug, Subcommand)]
enum Surgery {
    /// Move the last edge of the shorter path onto the tip of the longer one.
    Graft {
        input: String,
        /// Shorter path, anchor first: v,v1,..,vk.
        #[arg(long, value_delimiter = ',')]
        p: Vec<usize>,
        /// Longer path, anchor first: v,u1,..,ul.
        #[arg(long, value_delimiter = ',')]
        q: Vec<usize>,
    },
    /// Graft until every attached tree is a path.
    Flatten { input: String },
    /// Delete the cycle edge opposite a vertex (odd girth).
    Open {
        input: String,
        #[arg(long)]
        at: usize,
    },
    /// Chain the pendant paths of a flattened graph into one path.
    Chain {
        input: String,
        /// Loaded cycle vertices in chaining order; built automatically if omitted.
        #[arg(long, value_delimiter = ',')]
        order: Vec<usize>,
        /// Also delete the cycle edge opposite the first vertex (odd girth).
        #[arg(long)]
        open: bool,
    },
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Numeric(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => EXIT_INPUT,
            Failure::Numeric(_) => EXIT_NUMERIC,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Numeric(m) => m,
        }
    }
}

impl From<TransformError> for Failure {
    fn from(e: TransformError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<TheoryError> for Failure {
    fn from(e: TheoryError) -> Self {
        match e {
            TheoryError::Spectra(s) => Failure::Numeric(s.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

impl From<EnumerateError> for Failure {
    fn from(e: EnumerateError) -> Self {
        match e {
            EnumerateError::Graph(g) => Failure::Input(g.to_string()),
            other => Failure::Numeric(other.to_string()),
        }
    }
}

fn load(input: &str) -> Result<Graph, Failure> {
    if let Some(graph) = builtin::parse_builtin(input).map_err(Failure::Input)? {
        return Ok(graph);
    }
    let text = fs::read_to_string(input).map_err(|e| Failure::Input(format!("{input}: {e}")))?;
    parse_edge_list(&text).map_err(|e| Failure::Input(format!("{input}: {e}")))
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn lambda(g: &Graph) -> Result<f64, Failure> {
    laplacian_spectral_radius(g).map_err(|e| Failure::Numeric(e.to_string()))
}

#[derive(Debug, Serialize)]
struct SpectralReport {
    n: usize,
    m: usize,
    girth: Option<usize>,
    bipartite: bool,
    lambda: f64,
    mu: f64,
    degree_bound: usize,
    /// `(vertex, component)`, largest first.
    perron_top: Vec<(usize, f64)>,
}

impl SpectralReport {
    fn to_csv(&self) -> String {
        let mut s = String::from("field,value\n");
        s += &format!("n,{}\nm,{}\n", self.n, self.m);
        s += &format!("girth,{}\n", self.girth.map_or("none".into(), |g| g.to_string()));
        s += &format!("bipartite,{}\n", self.bipartite);
        s += &format!("lambda,{:.12}\nmu,{:.12}\n", self.lambda, self.mu);
        s += &format!("degree_bound,{}\n", self.degree_bound);
        for (v, x) in &self.perron_top {
            s += &format!("x{v},{x:.12}\n");
        }
        s
    }
}

fn spectral(cli: &Cli, input: &str, top: usize) -> Result<u8, Failure> {
    let graph = load(input)?;
    let numeric = |e: unicyclic::SpectraError| Failure::Numeric(e.to_string());
    let mu = signless_spectral_radius(&graph).map_err(numeric)?;
    let mut perron_top = Vec::new();
    if graph.is_connected() {
        let p = perron_vector(&graph, cli.tol).map_err(numeric)?;
        let mut comps: Vec<(usize, f64)> = graph.vertices().map(|v| (v, p.x(v))).collect();
        comps.sort_by(|a, b| b.1.total_cmp(&a.1).then(a.0.cmp(&b.0)));
        comps.truncate(top);
        perron_top = comps;
    }
    let report = SpectralReport {
        n: graph.order(),
        m: graph.size(),
        girth: graph.girth(),
        bipartite: graph.is_bipartite(),
        lambda: lambda(&graph)?,
        mu,
        degree_bound: graph.max_degree() + 1,
        perron_top,
    };
    let text = match cli.format {
        Format::Csv => report.to_csv(),
        Format::Json => serde_json::to_string_pretty(&report).expect("serializable") + "\n",
    };
    emit(&cli.out, &text)?;
    Ok(0)
}

fn verify(cli: &Cli, n: usize, g: usize) -> Result<u8, Failure> {
    let jobs = cli
        .jobs
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |j| j.get()));
    let report = verify_minimizer_jobs(n, g, cli.tol, jobs)?;
    let text = match cli.format {
        Format::Csv => report.to_csv(),
        Format::Json => report.to_json() + "\n",
    };
    emit(&cli.out, &text)?;
    eprintln!(
        "n={n} g={g} total={} minimizer_is_u={} unique={} margin={} winner={} ordering_exceptions={} coverage={:?}",
        report.total,
        report.minimizer_is_u,
        report.unique,
        report.margin.map_or("none".into(), |m| format!("{m:.3e}")),
        report.winner,
        report.ordering_exceptions,
        check_theorem_hypotheses(n, g),
    );
    Ok(if report.holds() { 0 } else { EXIT_FALSE })
}

fn reproduce_cmd(cli: &Cli) -> Result<u8, Failure> {
    let table = reproduce()?;
    let text = match cli.format {
        Format::Csv => table.to_csv(),
        Format::Json => table.to_json() + "\n",
    };
    emit(&cli.out, &text)?;
    Ok(if table.all_within(REPRODUCE_TOL) { 0 } else { EXIT_FALSE })
}

fn properties(cli: &Cli, scope: &str) -> Result<u8, Failure> {
    let scope: Scope = scope.parse().map_err(Failure::Input)?;
    let report = run_properties(scope, cli.seed);
    let text = match cli.format {
        Format::Csv => report.to_csv(),
        Format::Json => report.to_json() + "\n",
    };
    emit(&cli.out, &text)?;
    for s in report.suites.iter().filter(|s| !s.passed()) {
        eprintln!("{} failed: {}", s.name, s.first_failure.as_deref().unwrap_or("no instances"));
    }
    Ok(if report.passed() { 0 } else { EXIT_FALSE })
}

fn surgery(cli: &Cli, op: &Surgery) -> Result<u8, Failure> {
    let (before, after) = match op {
        Surgery::Graft { input, p, q } => {
            let g = load(input)?;
            let h = graft_edge(&g, &GraftSite::new(p.clone(), q.clone()))?;
            (g, h)
        }
        Surgery::Flatten { input } => {
            let g = load(input)?;
            let (h, grafts) = flatten_trees(&g)?;
            eprintln!("grafts={grafts}");
            (g, h)
        }
        Surgery::Open { input, at } => {
            let g = load(input)?;
            let h = open_cycle(&g, *at)?;
            (g, h)
        }
        Surgery::Chain { input, order, open } => {
            let g = load(input)?;
            let order = if order.is_empty() {
                let d = decompose_unicyclic(&g).map_err(|e| Failure::Input(e.to_string()))?;
                if d.c_set().len() < 2 {
                    d.c_set()
                } else {
                    let factor = if *open { 2 } else { 1 };
                    build_ordering(&d, factor)?
                        .ok_or_else(|| Failure::Input("no ordering satisfies the prefix condition".into()))?
                        .sequence
                }
            } else {
                order.clone()
            };
            eprintln!("order={order:?}");
            let h = if *open { open_and_chain(&g, &order)? } else { chain_paths(&g, &order)? };
            (g, h)
        }
    };
    eprintln!("lambda_before={:.12} lambda_after={:.12}", lambda(&before)?, lambda(&after)?);
    emit(&cli.out, &write_edge_list(&after))?;
    Ok(0)
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    if !(cli.tol > 0.0 && cli.tol.is_finite()) {
        return Err(Failure::Input(format!("--tol must be positive, got {}", cli.tol)));
    }
    if cli.jobs == Some(0) {
        return Err(Failure::Input("--jobs must be at least 1".into()));
    }
    match &cli.command {
        Command::Spectral { input, top } => spectral(cli, input, *top),
        Command::Verify { n, g } => verify(cli, *n, *g),
        Command::Reproduce => reproduce_cmd(cli),
        Command::Properties { scope } => properties(cli, scope),
        Command::Surgery { op } => surgery(cli, op),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
