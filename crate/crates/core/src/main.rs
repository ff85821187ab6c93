use clap::Parser;

fn main() {
    let cli = qpd::cli::Cli::parse();
    if let Err(e) = qpd::cli::execute(cli) {
        eprintln!("error: {}", e.message);
        std::process::exit(e.code);
    }
}
