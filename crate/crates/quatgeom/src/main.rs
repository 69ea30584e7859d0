use clap::Parser;
use quatgeom::cli::{run, Cli};

fn main() {
    std::process::exit(run(Cli::parse()));
}
