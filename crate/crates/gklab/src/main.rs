use std::io;

fn main() {
    let code = gklab::cli::run_command(std::env::args(), &mut io::stdout(), &mut io::stderr());
    std::process::exit(code);
}
