use clap::Parser;
use repgrowth_cli::{run, Cli};

fn main() {
    let cli = Cli::parse();
    let outcome = run(&cli);
    print!("{}", outcome.stdout);
    std::process::exit(outcome.code);
}
