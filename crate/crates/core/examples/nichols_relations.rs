//! Nichols relations of the short screenings on the B2 and B3 modules.
//!
//! cargo run --release --example nichols_relations -- [max_level]

use lattice_voa::lattice::{build_screening_lattices, NamedModule};
use lattice_voa::rootdata::{build_root_system, Series};
use lattice_voa::screening::{nichols_check, short_screening_set};

fn main() -> lattice_voa::Result<()> {
    let level: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    for (n, max) in [(2, level + 1), (3, level)] {
        let sl = build_screening_lattices(&build_root_system(Series::B, n)?, 4)?;
        let z = short_screening_set(&sl);
        for m in [NamedModule::Blue, NamedModule::Green] {
            let t = std::time::Instant::now();
            let rep = nichols_check(&sl, &sl.named_module(m)?, &z, max)?;
            for r in &rep.relations {
                println!(
                    "B{n} {:<6} level <= {max}: {:<12} on {:>5} states: {}",
                    m.name(),
                    r.relation,
                    r.states_checked,
                    if r.counterexample.is_none() { "holds" } else { "FAILS" }
                );
            }
            eprintln!("  ({:.2?})", t.elapsed());
        }
    }
    Ok(())
}
