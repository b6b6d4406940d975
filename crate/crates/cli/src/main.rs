use std::process::ExitCode;

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let mut out = String::new();
    let code = einfty_cli::run(&argv, &mut out);
    print!("{out}");
    ExitCode::from(code as u8)
}
