//! Command-line front end. Every subcommand prints one JSON document.
//!
//! Exit codes: 0 success, 1 rejected by the engine, 2 malformed input or usage.

use clap::{Parser, Subcommand};

use crate::api::{self, ApiError, ApiResult};

#[derive(Debug, Parser)]
#[command(name = "cyclic-cluster", version, about = "Exact type-D cluster category workbench")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// JSON arguments are file paths, or inline JSON when they start with `{` or `[`.
#[derive(Debug, Subcommand)]
enum Command {
    /// Check the cocycle identities on samples: band elements with --band, circle angles without.
    CocycleCheck {
        #[arg(long)]
        band: Option<String>,
        #[arg(long)]
        samples: String,
    },
    /// Compatibility of two objects.
    Compat {
        a: String,
        b: String,
        #[arg(long, default_value_t = 2)]
        p: u32,
    },
    /// Dimension of Hom(A, B).
    Hom {
        a: String,
        b: String,
        #[arg(long, default_value_t = 2)]
        p: u32,
    },
    /// Whether Ext¹(A, B) is nonzero in the band of width b.
    Ext {
        a: String,
        #[arg(value_name = "B")]
        other: String,
        #[arg(long = "b", value_name = "P/Q")]
        width: String,
    },
    /// Mutate a cluster at a 1-based position.
    Mutate {
        cluster: String,
        #[arg(long)]
        at: usize,
    },
    /// All clusters of a model.
    Enumerate {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        n: u32,
    },
    /// Exchange graph of a model.
    Graph {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        n: u32,
    },
    /// Valued quiver and exchange matrix of a cluster.
    Quiver { cluster: String },
    /// Matrix mutation at a 1-based vertex.
    Fz {
        matrix: String,
        #[arg(long)]
        at: usize,
    },
    /// Scalar check for a distinguished triangle pattern.
    TriangleCheck { pattern: String },
    /// Orbit-category decomposition report for z2, z3, z4 or s3.
    OrbitDemo {
        #[arg(long)]
        group: String,
    },
    /// HTTP JSON service on 127.0.0.1.
    Serve {
        #[arg(long, default_value_t = 8080)]
        port: u16,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn read_input(arg: &str) -> Result<String, ApiError> {
    let t = arg.trim_start();
    if t.starts_with('{') || t.starts_with('[') {
        return Ok(arg.to_string());
    }
    std::fs::read_to_string(arg).map_err(|e| ApiError::Malformed(format!("{arg}: {e}")))
}

fn one_based(k: usize, len: usize) -> Result<usize, ApiError> {
    if k == 0 || k > len {
        return Err(ApiError::Domain(format!("position {k} out of range 1..={len}")));
    }
    Ok(k - 1)
}

fn dispatch(cmd: Command) -> ApiResult {
    match cmd {
        Command::CocycleCheck { band, samples } => {
            let band = band.as_deref().map(api::parse_rational).transpose()?;
            api::cocycle_check(band, &read_input(&samples)?)
        }
        Command::Compat { a, b, p } => {
            api::compat(&api::read_object(&read_input(&a)?)?, &api::read_object(&read_input(&b)?)?, p)
        }
        Command::Hom { a, b, p } => {
            api::hom(&api::read_object(&read_input(&a)?)?, &api::read_object(&read_input(&b)?)?, p)
        }
        Command::Ext { a, other, width } => api::ext(
            &api::read_object(&read_input(&a)?)?,
            &api::read_object(&read_input(&other)?)?,
            api::parse_rational(&width)?,
        ),
        Command::Mutate { cluster, at } => {
            let c = api::read_cluster(&read_input(&cluster)?)?;
            api::mutate(&c, one_based(at, c.arcs.len())?)
        }
        Command::Enumerate { p, n } => api::enumerate(p, n),
        Command::Graph { p, n } => api::graph(p, n),
        Command::Quiver { cluster } => api::quiver_json(&api::read_cluster(&read_input(&cluster)?)?),
        Command::Fz { matrix, at } => {
            let b = api::read_matrix(&read_input(&matrix)?)?;
            api::fz(&b, one_based(at, b.size())?)
        }
        Command::TriangleCheck { pattern } => api::triangle_check(&api::read_pattern(&read_input(&pattern)?)?),
        Command::OrbitDemo { group } => api::orbit_demo(&group),
        Command::Serve { .. } => unreachable!("handled by run"),
    }
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    if let Command::Serve { port } = cli.command {
        return match crate::server::run_blocking(port) {
            Ok(()) => Outcome { code: 0, stdout: String::new(), stderr: String::new() },
            Err(e) => Outcome { code: 1, stdout: String::new(), stderr: format!("{e}\n") },
        };
    }
    match dispatch(cli.command) {
        Ok(stdout) => Outcome { code: 0, stdout, stderr: String::new() },
        Err(e) => Outcome { code: e.exit_code(), stdout: e.to_json(), stderr: format!("{e}\n") },
    }
}
