fn main() {
    let (code, report) = genroof::cli::run(std::env::args_os());
    if code == genroof::cli::EXIT_ERROR {
        eprint!("{report}");
    } else {
        print!("{report}");
    }
    std::process::exit(code);
}
