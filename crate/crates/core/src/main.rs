use clap::Parser;
use fullcomm::cli::{run, Cli};

fn main() {
    std::process::exit(run(Cli::parse()));
}
