use clap::Parser;

fn main() {
    // clap exits with code 2 on usage errors
    let cli = logharm::cli::Cli::parse();
    match logharm::cli::run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(1);
        }
    }
}
