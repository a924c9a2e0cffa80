mod commands;
mod report;

use std::process::ExitCode;

/// Exit conventions: 0 success, 1 invalid input, 2 verification failure,
/// 3 structured algorithm failure.
fn main() -> ExitCode {
    #[cfg(unix)]
    unsafe {
        // die quietly when the output pipe closes (e.g. `| head`)
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    match commands::run(std::env::args_os()) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
