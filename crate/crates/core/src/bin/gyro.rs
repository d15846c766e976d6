use std::io::Write;
use std::process::ExitCode;

use einstein_gyro::cli::run_with;
use einstein_gyro::gyration::ExplicitGyration;

fn main() -> ExitCode {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let code = run_with(std::env::args_os(), &ExplicitGyration, &mut out);
    let _ = out.flush();
    ExitCode::from(code as u8)
}
