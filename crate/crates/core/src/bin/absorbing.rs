use clap::Parser;

use absorbing_ideals::cli::{run, Args};

fn main() {
    let config = Args::parse().into_config();
    std::process::exit(run(&config));
}
