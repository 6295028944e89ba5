//! Graded dimensions: the A1 vacuum against the symplectic fermion
//! character and the B2 kernels against χ1..χ4 of two pairs.
//!
//! cargo run --release --example characters -- [order]

use lattice_voa::characters::{graded_dim_module, jtp_check, kernel_char_match, sf_characters};
use lattice_voa::lattice::build_screening_lattices;
use lattice_voa::rootdata::{build_root_system, Series};

fn main() -> lattice_voa::Result<()> {
    let order = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(8);
    let j = jtp_check(order)?;
    println!("A1 vacuum = chi_ns+ to order {order}: {}", j.matches);

    let sf = sf_characters(2, order)?;
    for (name, s) in [("ns+", &sf.ns_plus), ("ns-", &sf.ns_minus), ("r+", &sf.r_plus), ("r-", &sf.r_minus)] {
        println!("chi_{name:<3} t^{} step {}: {:?}", s.offset, s.step, s.int_coeffs().unwrap_or_default());
    }

    let m = kernel_char_match(2, 1, order)?;
    for r in &m.rows {
        println!("{:<10} t^{:<6} kernel {:?} chi {:?} {}", r.name, r.offset, r.kernel_dims, r.chi_coeffs, r.matches);
    }

    let sl = build_screening_lattices(&build_root_system(Series::B, 2)?, 4)?;
    for c in sl.all_cosets() {
        let g = graded_dim_module(&sl, &c, 4);
        println!("dim V[{}] = t^{} {:?}", c.rep, g.offset, g.int_coeffs().unwrap_or_default());
    }
    Ok(())
}
