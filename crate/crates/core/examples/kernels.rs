//! Kernels of the short screenings, layer by layer, on each B2 module,
//! plus the A1 vacuum kernel with its h = 2 generator.
//!
//! cargo run --release --example kernels -- [max_level]

use lattice_voa::expr::print_state;
use lattice_voa::lattice::{build_screening_lattices, NamedModule};
use lattice_voa::rootdata::{build_root_system, Series};
use lattice_voa::screening::{module_kernel, short_screening_set};

fn main() -> lattice_voa::Result<()> {
    let level = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1);
    let sl = build_screening_lattices(&build_root_system(Series::B, 2)?, 4)?;
    let z = short_screening_set(&sl);
    println!("B2, ell = 4; columns: h, dim, dim ker Z_i, dim of the intersection");
    for m in NamedModule::ALL {
        let rep = module_kernel(&sl, &sl.named_module(m)?, &z, level, false)?;
        println!("{} (Weyl powers {:?})", m.name(), rep.weyl_powers);
        for r in &rep.rows {
            println!("  h = {:<5} {:>4} {:?} {:>4}", r.h, r.dim, r.per_screening, r.intersection);
        }
    }

    let a1 = build_screening_lattices(&build_root_system(Series::A, 1)?, 4)?;
    let rep = module_kernel(&a1, &a1.named_module(NamedModule::Blue)?, &short_screening_set(&a1), 3, true)?;
    println!("A1 vacuum kernel:");
    for r in &rep.rows {
        println!("  h = {}: {}", r.h, r.intersection);
        if r.h == "2" {
            for b in &r.basis {
                println!("    {}", print_state(b));
            }
        }
    }
    Ok(())
}
