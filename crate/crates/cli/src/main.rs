use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let (mut out, mut err) = (io::stdout().lock(), io::stderr().lock());
    let code = shknot::run_args(std::env::args_os(), &mut shknot::Io { out: &mut out, err: &mut err });
    ExitCode::from(code as u8)
}
