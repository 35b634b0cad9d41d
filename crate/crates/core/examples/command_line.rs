//! Driving the command-line front end in-process.

use toric_chow::cli::run;

fn main() {
    let dir = std::env::temp_dir().join("toric-chow-example");
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("p64.json");
    let file = file.to_str().unwrap();

    let mut out = std::io::stdout();
    let mut err = std::io::stderr();
    for args in [
        vec!["examples", "p64", "--output", file],
        vec!["check", file],
        vec!["chow", file, "--simplify", "--graded", "3"],
        vec!["compare", file, "--target", "24*t^2"],
    ] {
        println!("$ toric-chow {}", args.join(" "));
        let code = run(
            std::iter::once("toric-chow").chain(args),
            &mut out,
            &mut err,
        );
        println!("(exit {code})");
    }
}
