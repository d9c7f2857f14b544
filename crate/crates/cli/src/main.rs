use std::path::PathBuf;
use std::process::exit;

use clap::{Parser, Subcommand, ValueEnum};

use mincover::report::{
    run_report, run_stabilizer, run_verify, ReportDocument, RunConfig, Subject, TreeChoice,
};
use mincover::{FaceListMap, PlatonicSolid};

/// Builds polyhedral maps as flag systems, computes their monodromy groups,
/// and verifies the structure of their minimal regular covers.
#[derive(Parser)]
#[command(name = "mincover", version, about)]
struct Cli {
    #[command(subcommand)]
    object: ObjectCmd,

    /// Emit the report as JSON instead of text
    #[arg(long, global = true)]
    json: bool,

    /// Cap on live cosets during coset enumeration
    #[arg(long, global = true, default_value_t = 1_000_000, value_name = "N")]
    coset_cap: usize,

    /// Cap on full subgroup enumerations
    #[arg(long, global = true, default_value_t = 100_000, value_name = "N")]
    enum_cap: usize,

    /// Run only the verification checks whose names start with this prefix
    /// (repeatable)
    #[arg(long, global = true, value_name = "CHECK")]
    only: Vec<String>,
}

#[derive(Subcommand)]
enum ObjectCmd {
    /// The n-gonal prism (n ≥ 3)
    Prism {
        n: usize,
        #[command(subcommand)]
        verb: Verb,
    },
    /// The n-gonal antiprism (n ≥ 3)
    Antiprism {
        n: usize,
        #[command(subcommand)]
        verb: Verb,
    },
    /// A Platonic solid by name (tetrahedron, cube, octahedron,
    /// dodecahedron, icosahedron)
    Platonic {
        name: String,
        #[command(subcommand)]
        verb: Verb,
    },
    /// A map read from a JSON face-list file: {"faces": [[v, ...], ...]}
    Map {
        file: PathBuf,
        #[command(subcommand)]
        verb: Verb,
    },
}

#[derive(Subcommand)]
enum Verb {
    /// Orders, f-vectors, Euler characteristic, genus, and closed-form
    /// comparisons
    Report,
    /// The full verification suite for this map
    Verify,
    /// Emit stabilizer generator words and their generation verdicts
    Stabilizer {
        #[arg(long, value_enum, default_value_t = TreeArg::Bfs)]
        tree: TreeArg,
    },
}

#[derive(Copy, Clone, ValueEnum)]
enum TreeArg {
    Bfs,
    Dfs,
    Paper,
}

impl From<TreeArg> for TreeChoice {
    fn from(value: TreeArg) -> TreeChoice {
        match value {
            TreeArg::Bfs => TreeChoice::Bfs,
            TreeArg::Dfs => TreeChoice::Dfs,
            TreeArg::Paper => TreeChoice::Paper,
        }
    }
}

fn invalid_input(message: impl std::fmt::Display) -> ! {
    eprintln!("error: {message}");
    exit(2)
}

fn main() {
    let cli = Cli::parse();
    let cfg = RunConfig {
        coset_cap: cli.coset_cap,
        enum_cap: cli.enum_cap,
        only: cli.only,
    };

    let (subject, verb) = match cli.object {
        ObjectCmd::Prism { n, verb } => (Subject::Prism(n), verb),
        ObjectCmd::Antiprism { n, verb } => (Subject::Antiprism(n), verb),
        ObjectCmd::Platonic { name, verb } => {
            let solid: PlatonicSolid = match name.parse() {
                Ok(solid) => solid,
                Err(err) => invalid_input(err),
            };
            (Subject::Platonic(solid), verb)
        }
        ObjectCmd::Map { file, verb } => {
            let text = match std::fs::read_to_string(&file) {
                Ok(text) => text,
                Err(err) => invalid_input(format!("cannot read {}: {err}", file.display())),
            };
            let map: FaceListMap = match serde_json::from_str(&text) {
                Ok(map) => map,
                Err(err) => invalid_input(format!("{}: {err}", file.display())),
            };
            (Subject::Map(map), verb)
        }
    };

    let result: Result<ReportDocument, _> = match verb {
        Verb::Report => run_report(&subject, &cfg),
        Verb::Verify => run_verify(&subject, &cfg),
        Verb::Stabilizer { tree } => run_stabilizer(&subject, tree.into(), &cfg),
    };
    let doc = match result {
        Ok(doc) => doc,
        Err(err) => invalid_input(err),
    };

    if cli.json {
        print!("{}", doc.to_json());
    } else {
        print!("{}", doc.to_text());
    }
    exit(doc.exit_code() as i32);
}
