fn main() {
    // placeholder while the library comes up; the real CLI lands with the
    // config/report modules
    eprintln!("expanse: not yet wired");
    std::process::exit(2);
}
