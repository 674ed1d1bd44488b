use bolalg::cli;

fn main() {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let (report, format) = cli::run(&argv);
    print!("{}", cli::emit_report(&report, format));
    std::process::exit(cli::exit_code(&report));
}
