use clap::Parser;

use trimoduli::cli::{run, Cli};

fn main() {
    let outcome = run(Cli::parse());
    print!("{}", outcome.stdout);
    std::process::exit(outcome.code);
}
