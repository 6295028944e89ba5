//! Screening lattices, Q, central charge and the module count for a root
//! system at a given ℓ.
//!
//! cargo run --example lattice_data -- [series] [rank] [ell]

use lattice_voa::lattice::{build_screening_lattices, conformal_dim, quotient_group};
use lattice_voa::rootdata::build_root_system;

fn main() -> lattice_voa::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let series = args.first().map(|s| s.parse()).transpose()?.unwrap_or(lattice_voa::rootdata::Series::B);
    let rank = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(2);
    let ell = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(4);
    let sl = build_screening_lattices(&build_root_system(series, rank)?, ell)?;
    println!("{} at ell = {ell}, p = {}", sl.rs.label(), sl.p);
    println!("Q = {}   c = {}", sl.q, sl.central_charge);
    for (name, basis) in [("short", &sl.basis_short), ("long", &sl.basis_long), ("dual", &sl.basis_dual)] {
        let shown: Vec<String> = basis.iter().map(|b| format!("{b} (h = {})", conformal_dim(&sl, b))).collect();
        println!("{name:>5}: {}", shown.join(", "));
    }
    let q = quotient_group(&sl.dual, &sl.long)?;
    println!("(L+)*/L+ has order {} with invariant factors {:?}", q.order(), q.invariant_factors);
    Ok(())
}
