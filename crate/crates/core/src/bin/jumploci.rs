use clap::Parser;

fn main() {
    let cli = jumploci::cli::Cli::parse();
    std::process::exit(jumploci::cli::run(&cli));
}
