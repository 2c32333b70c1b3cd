use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let out = carlitz_cli::run(std::env::args_os());
    let mut code = out.code;
    match (&out.out_path, out.stdout.is_empty()) {
        (Some(path), false) => {
            if let Err(e) = std::fs::write(path, &out.stdout) {
                eprintln!("error: cannot write {path}: {e}");
                code = carlitz_cli::EXIT_DOMAIN;
            }
        }
        _ => {
            let _ = std::io::stdout().write_all(out.stdout.as_bytes());
        }
    }
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(code as u8)
}
