use std::process::ExitCode;

fn main() -> ExitCode {
    let code = pwt_cli::run(std::env::args_os(), &mut std::io::stdout().lock());
    ExitCode::from(code as u8)
}
