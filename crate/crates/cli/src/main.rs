use std::io::Write;

fn main() {
    let out = bei_cli::main_with_args(std::env::args_os(), &mut std::io::stdin().lock());
    // a closed pipe on stdout is not worth a panic
    let _ = std::io::stdout().lock().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().lock().write_all(out.stderr.as_bytes());
    std::process::exit(out.code);
}
