use clap::Parser;

fn main() {
    let cli = regugame::cli::Cli::parse();
    if let Err(e) = regugame::cli::run(&cli) {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}
