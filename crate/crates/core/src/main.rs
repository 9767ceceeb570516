fn main() {
    let (code, output) = foldprod::cli::dispatch(std::env::args_os());
    if code == foldprod::cli::EXIT_USAGE {
        eprint!("{output}");
    } else {
        print!("{output}");
    }
    std::process::exit(code);
}
