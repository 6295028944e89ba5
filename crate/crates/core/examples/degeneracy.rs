//! Which screenings survive at a given ℓ, and the extension data of the
//! degenerate cases.
//!
//! cargo run --example degeneracy

use lattice_voa::degeneracy::{classification_table, extension_report};
use lattice_voa::rootdata::{build_root_system, Series};

fn main() -> lattice_voa::Result<()> {
    println!("{:<6} {:>3}  {:<10} {:<8} {:<8}", "g", "ell", "case", "g0", "g_ell");
    for r in classification_table()? {
        let note = if r.computed { "" } else { "  (from the table, not computed)" };
        println!("{:<6} {:>3}  {:<10} {:<8} {:<8}{note}", r.g, r.ell, format!("{:?}", r.case), r.g0, r.gell);
    }
    println!();
    let rows = [(Series::B, 2, 4), (Series::B, 3, 4), (Series::C, 3, 4), (Series::F, 4, 4), (Series::G, 2, 6)];
    for (s, n, ell) in rows {
        let r = extension_report(&build_root_system(s, n)?, ell)?;
        println!(
            "{} ell={}: {} simples, dim X = {}, g0 = {} with {} simples, c = {}, symmetry {}",
            r.g, r.ell, r.num_simples, r.dim_x, r.g0, r.g0_num_simples, r.central_charge, r.global_symmetry
        );
    }
    Ok(())
}
