use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let max_vertices = std::env::var(minorlab::cli::MAX_VERTICES_ENV).ok();
    let code = minorlab::cli::run(std::env::args_os(), max_vertices.as_deref(), &mut io::stdout().lock(), &mut io::stderr().lock());
    ExitCode::from(code as u8)
}
