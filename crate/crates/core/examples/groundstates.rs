//! Groundstates and conformal dimensions of the four Bn modules at ℓ = 4.
//!
//! cargo run --example groundstates -- [n]

use lattice_voa::lattice::{build_screening_lattices, groundstates, NamedModule};
use lattice_voa::rootdata::{build_root_system, Series};

fn main() -> lattice_voa::Result<()> {
    let n = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(2);
    let series = if n == 1 { Series::A } else { Series::B };
    let sl = build_screening_lattices(&build_root_system(series, n)?, 4)?;
    for m in NamedModule::ALL {
        let coset = sl.named_module(m)?;
        let (states, h) = groundstates(&sl, &coset);
        let shown: Vec<String> = states.iter().map(|s| s.to_string()).collect();
        println!("{:<10} [{}]  h = {h:<6} {} states: {}", m.name(), coset.rep, states.len(), shown.join(" "));
    }
    // Every coset, not only the named ones.
    for c in sl.all_cosets() {
        let (states, h) = groundstates(&sl, &c);
        println!("coset [{}]: {} groundstates at h = {h}", c.rep, states.len());
    }
    Ok(())
}
