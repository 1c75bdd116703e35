fn main() {
    std::process::exit(chordal_complexes::cli::run(std::env::args_os()));
}
