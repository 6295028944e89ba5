//! Drive the command-line front end from code and read its JSON report.
//!
//! cargo run --example reports

use lattice_voa::cli::run_args;

fn main() {
    for args in [
        vec!["lattice-voa", "lattice-info", "--algebra", "Bn", "--n", "3", "--format", "json"],
        vec!["lattice-voa", "kernel", "--algebra", "B2", "--module", "green", "--format", "tsv"],
        vec!["lattice-voa", "degeneracy", "--algebra", "G2", "--ell", "6"],
    ] {
        println!("$ {}", args.join(" "));
        let out = run_args(args);
        println!("(exit {})", out.code);
        println!("{}", out.stdout);
        if !out.stderr.is_empty() {
            eprintln!("{}", out.stderr);
        }
    }
}
