use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn"))
        .format_timestamp(None)
        .init();
    let (status, out) = cfmonoid_cli::run_args(std::env::args_os());
    let mut stdout = std::io::stdout().lock();
    if stdout.write_all(&out).and_then(|_| stdout.flush()).is_err() {
        return ExitCode::from(cfmonoid_cli::Status::InputError as u8);
    }
    ExitCode::from(status as u8)
}
