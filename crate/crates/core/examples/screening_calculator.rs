//! Apply a screening operator to a state written in the text syntax.
//!
//! cargo run --example screening_calculator -- "-a1 - a2" "d phi[-a2]"
//!
//! Momenta use `a1..an` (the ambient basis `α_i/√p`), `l1..ln`
//! (fundamental weights) and `Q`. With no arguments a few B2 evaluations
//! are shown.

use lattice_voa::expr::{parse_momentum, parse_state, print_state};
use lattice_voa::lattice::build_screening_lattices;
use lattice_voa::rootdata::{build_root_system, Series};
use lattice_voa::screening::apply_screening;
use lattice_voa::vertexop::VertexEngine;

fn main() -> lattice_voa::Result<()> {
    let sl = build_screening_lattices(&build_root_system(Series::B, 2)?, 4)?;
    let args: Vec<String> = std::env::args().skip(1).collect();
    let pairs: Vec<(String, String)> = if args.len() >= 2 {
        vec![(args[0].clone(), args[1].clone())]
    } else {
        [
            ("-a2", "exp[a1 + 2*a2]"),
            ("-a1 - a2", "exp[a1 + 2*a2]"),
            ("-a1 - a2", "d phi[-a2] * exp[a1 + 2*a2]"),
            ("-a2", "exp[2*a2]"),
        ]
        .iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect()
    };
    for (z, state) in pairs {
        let gamma = parse_momentum(&z, &sl)?;
        let v = parse_state(&state, &sl)?;
        match apply_screening(&sl.ambient, &gamma, &v) {
            Ok(out) => println!("Z[{z}]({state}) = {}", print_state(&out)),
            Err(e) => {
                // Non-integral pairing: show the leading terms of the
                // contour integral instead.
                let a = lattice_voa::freefield::FieldElement::exp(gamma.clone());
                let fr = VertexEngine::new(&sl.ambient).residue_fractional(&a, &v, 3)?;
                println!("Z[{z}]({state}): {e}; approximate expansion:");
                for t in &fr.terms {
                    println!("  ({:.4}) * {}", t.prefactor, print_state(&t.state));
                }
            }
        }
    }
    Ok(())
}
