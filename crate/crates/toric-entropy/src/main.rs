use clap::Parser;
use toric_entropy::cli;

fn main() {
    let args = cli::Cli::parse();
    let (status, doc) = cli::run(&args);
    if doc.ends_with('\n') {
        print!("{doc}");
    } else {
        println!("{doc}");
    }
    std::process::exit(status);
}
