use clap::Parser;
use reeb_forest::commands::{run, Cli};

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("reeb-forest: {err}");
            std::process::exit(err.exit_code());
        }
    }
}
