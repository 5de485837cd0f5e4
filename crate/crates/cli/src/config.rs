use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use tauq::link::catalog;
use tauq::skein::Budget;
use tauq::{Error, LinkDiagram, PrimeLevel};

pub const DEFAULT_PRIMES: [i64; 3] = [3, 5, 7];

#[derive(Parser, Debug)]
#[command(name = "tauq", version, about = "Exact quantum SO(3) invariants of 3-manifolds from surgery on framed links")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: Flags,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    /// List the built-in links
    Catalog,
    /// p-bracket of a framed link by both evaluation routes
    Bracket,
    /// Full invariant report for surgery on a framed link
    Invariant,
    /// Tables of p-sums, Gauss sums and the related closed forms
    Sums,
    /// Run the acceptance suite
    Verify,
}

#[derive(Args, Debug, Clone)]
pub struct Flags {
    /// Odd primes, comma separated [default: 3,5,7]
    #[arg(short = 'p', long = "prime", value_delimiter = ',', global = true, allow_negative_numbers = true)]
    pub primes: Vec<i64>,
    /// Catalog name (`unknot_<a>` for a framed unknot) or path to a link file
    #[arg(long, global = true)]
    pub link: Option<String>,
    /// Deepest finite-type projection to report
    #[arg(long, default_value_t = 0, global = true)]
    pub depth: u64,
    /// Crossing limit for the surgery diagram
    #[arg(long, default_value_t = 48, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_crossings: u64,
    /// Sweep width limit (boundary points) for every evaluated cable
    #[arg(long, default_value_t = 20, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_width: u64,
    /// Write JSON here instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub jobs: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinkSource {
    Catalog(String),
    File(PathBuf),
}

impl LinkSource {
    /// An existing path is read as a link file; anything else is a catalog name.
    pub fn from_arg(arg: &str) -> LinkSource {
        if Path::new(arg).is_file() {
            LinkSource::File(arg.into())
        } else {
            LinkSource::Catalog(arg.into())
        }
    }

    pub fn load(&self) -> Result<LinkDiagram, Error> {
        match self {
            LinkSource::Catalog(name) => catalog::get(name),
            LinkSource::File(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
                LinkDiagram::parse(&text)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub primes: Vec<PrimeLevel>,
    pub link: Option<LinkSource>,
    pub depth: u64,
    pub budget: Budget,
    pub out: Option<PathBuf>,
    pub jobs: Option<usize>,
}

impl RunConfig {
    pub fn from_cli(cli: &Cli) -> Result<RunConfig, Error> {
        let f = &cli.opts;
        let raw: &[i64] = if f.primes.is_empty() { &DEFAULT_PRIMES } else { &f.primes };
        let mut primes = raw.iter().map(|&p| PrimeLevel::new(p)).collect::<Result<Vec<_>, _>>()?;
        primes.sort();
        primes.dedup();
        Ok(RunConfig {
            command: cli.command,
            primes,
            link: f.link.as_deref().map(LinkSource::from_arg),
            depth: f.depth,
            budget: Budget { max_crossings: f.max_crossings as usize, max_width: f.max_width as usize },
            out: f.out.clone(),
            jobs: f.jobs.map(|j| j as usize),
        })
    }

    pub fn load_link(&self) -> Result<LinkDiagram, Error> {
        self.link
            .as_ref()
            .ok_or_else(|| Error::Parse("this command needs --link".into()))?
            .load()
    }
}
