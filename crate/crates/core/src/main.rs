use clap::Parser;

fn main() {
    let cli = filippov::cli::Cli::parse();
    std::process::exit(filippov::cli::run(cli));
}
