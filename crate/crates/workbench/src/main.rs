use std::io::Write;

fn main() {
    let run = koszul_workbench::cli::run(std::env::args_os());
    print!("{}", run.stdout);
    eprint!("{}", run.stderr);
    std::io::stdout().flush().ok();
    std::process::exit(run.code);
}
