use clap::Parser;

fn main() {
    let cli = hemforce_cli::Cli::parse();
    std::process::exit(hemforce_cli::run(cli));
}
