use clap::Parser;

fn main() -> std::process::ExitCode {
    sandpile::cli::main_with(sandpile::cli::Cli::parse())
}
