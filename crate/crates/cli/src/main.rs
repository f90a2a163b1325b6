//! `lawrence`: exact Graver bases, circuits, Markov bases, complexities,
//! model matrices and face certificates from the command line.
//!
//! Nothing in the pipeline is randomized; two runs on the same input
//! produce identical bytes. Exit codes: 0 success, 1 domain error
//! (malformed input, overflow, resource limit), 2 usage error.

mod matrixfile;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use lawrence_core::*;

use matrixfile::{parse_matrix, print_matrix, print_rows};

#[derive(Parser)]
#[command(name = "lawrence", version, about = "Exact lattice bases and complexities of integer configurations and their higher liftings")]
struct Cli {
    /// Worker threads; affects wall time only, never the output bytes.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    jobs: u32,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct FileArg {
    /// Matrix file: `ROWS COLS` header, then the entries.
    file: PathBuf,
}

#[derive(Subcommand)]
enum Cmd {
    /// Graver basis of the configuration, one element per output row.
    Graver(FileArg),
    /// Circuits of the configuration, one element per output row.
    Circuits(FileArg),
    /// A minimal Markov basis of the configuration.
    Markov(FileArg),
    /// The r-th lifting as an explicit matrix.
    Lift {
        #[command(flatten)]
        file: FileArg,
        /// Lifting order (number of row blocks).
        #[arg(long)]
        r: usize,
    },
    /// Complexities with witnesses; with no selector, all of them.
    Complexity {
        #[command(flatten)]
        file: FileArg,
        /// Graver complexity only.
        #[arg(long)]
        graver: bool,
        /// Markov complexity only.
        #[arg(long)]
        markov: bool,
        /// Circuit complexity only.
        #[arg(long)]
        circuit: bool,
        /// Closed-form upper bounds only.
        #[arg(long)]
        bounds: bool,
        /// Largest lifting order examined for the Markov complexity.
        #[arg(long)]
        rmax: Option<usize>,
    },
    /// Matrix of the hierarchical model given by generating sets.
    Model {
        /// Generators in bracket notation, e.g. "[12][13][23]".
        brackets: String,
        /// Level counts per variable, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        levels: Vec<usize>,
    },
    /// The associated logit model, in bracket notation.
    Logit {
        /// Generators in bracket notation.
        brackets: String,
    },
    /// Face certificate for the columns vanishing at the given indices.
    Face {
        #[command(flatten)]
        file: FileArg,
        /// 0-based column indices that the face functional must kill.
        #[arg(long, value_delimiter = ',', required = true)]
        zeros: Vec<usize>,
    },
    /// Covector test for a sign pattern against the circuits.
    Covector {
        #[command(flatten)]
        file: FileArg,
        /// One of + - 0 per column, e.g. "+0-+".
        #[arg(long)]
        signs: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn load(file: &FileArg) -> std::result::Result<Configuration, String> {
    let name = file.file.display();
    let text = std::fs::read_to_string(&file.file).map_err(|e| format!("{name}: {e}"))?;
    parse_matrix(&text).map_err(|e| format!("{name}:{e}"))
}

fn moves_to_rows(elems: &[Move]) -> Vec<Vec<i64>> {
    elems.iter().map(|m| m.coords().to_vec()).collect()
}

fn join(v: &[i64]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn run(cmd: Cmd) -> std::result::Result<String, String> {
    let dom = |e: Error| e.to_string();
    match cmd {
        Cmd::Graver(f) => {
            let m = load(&f)?;
            let g = graver_basis(&m).map_err(dom)?;
            Ok(print_rows(&moves_to_rows(g.elements()), m.n()))
        }
        Cmd::Circuits(f) => {
            let m = load(&f)?;
            let c = circuits(&m).map_err(dom)?;
            Ok(print_rows(&moves_to_rows(c.elements()), m.n()))
        }
        Cmd::Markov(f) => {
            let m = load(&f)?;
            let b = minimal_markov_basis(&m).map_err(dom)?;
            Ok(print_rows(&moves_to_rows(b.elements()), m.n()))
        }
        Cmd::Lift { file, r } => {
            let m = load(&file)?;
            let l = lift(&m, r).map_err(dom)?;
            Ok(print_matrix(l.matrix()))
        }
        Cmd::Complexity {
            file,
            graver,
            markov,
            circuit,
            bounds,
            rmax,
        } => {
            let m = load(&file)?;
            let mut out = String::new();
            let all = !(graver || markov || circuit || bounds);
            if graver || all {
                let (g, w) = graver_complexity(&m).map_err(dom)?;
                out.push_str(&format!("graver_complexity = {g}\nwitness = {}\n", join(&w)));
            }
            if markov || all {
                let (v, stable, profile) = markov_complexity(&m, rmax).map_err(dom)?;
                out.push_str(&format!("markov_complexity = {v}\nstabilized = {stable}\n"));
                let p: Vec<String> = profile.iter().map(|(r, t)| format!("{r}:{t}")).collect();
                out.push_str(&format!("profile = {}\n", p.join(" ")));
            }
            if circuit || all {
                let (v, w) = circuit_complexity(&m).map_err(dom)?;
                out.push_str(&format!(
                    "circuit_complexity = {v}\nwitness = {}\n",
                    join(&w)
                ));
            }
            if bounds || all {
                let b = graver_complexity_bounds(&m).map_err(dom)?;
                out.push_str(&format!(
                    "minor_bound = {}\ndegree_bound = {}\ncardinality_bound = {}\ncomplexity_bound = {}\n",
                    b.d_max, b.degree, b.cardinality, b.complexity
                ));
            }
            Ok(out)
        }
        Cmd::Model { brackets, levels } => {
            let gens = parse_brackets(&brackets).map_err(dom)?;
            let spec = ModelSpec::new(&gens, levels).map_err(dom)?;
            let m = model_matrix(&spec).map_err(dom)?;
            Ok(print_matrix(&m))
        }
        Cmd::Logit { brackets } => {
            let gens = parse_brackets(&brackets).map_err(dom)?;
            let m = gens.iter().flatten().copied().max().unwrap_or(0);
            let spec = ModelSpec::new(&gens, vec![0; m]).map_err(dom)?;
            let logit = logit_model(&spec).map_err(dom)?;
            Ok(format!("{}\n", logit.to_bracket_string()))
        }
        Cmd::Face { file, zeros } => {
            let m = load(&file)?;
            for &z in &zeros {
                if z >= m.n() {
                    return Err(format!("zero index {z} out of range for {} columns", m.n()));
                }
            }
            match face_certificate(&m, &zeros).map_err(dom)? {
                Some(cert) => {
                    let f: Vec<String> = cert.functional.iter().map(|x| x.to_string()).collect();
                    Ok(format!("face = true\nfunctional = {}\n", f.join(" ")))
                }
                None => Ok("face = false\n".to_string()),
            }
        }
        Cmd::Covector { file, signs } => {
            let m = load(&file)?;
            let x = SignVector::parse(&signs).map_err(dom)?;
            if x.len() != m.n() {
                return Err(format!(
                    "sign pattern has {} entries, configuration has {} columns",
                    x.len(),
                    m.n()
                ));
            }
            let v = is_covector(&m, &x).map_err(dom)?;
            Ok(format!("covector = {v}\n"))
        }
    }
}
