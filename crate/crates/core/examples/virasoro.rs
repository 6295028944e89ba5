//! The Virasoro algebra from T = ½(∂φ,∂φ) + ∂²φ_Q: stress tensor, L0 on
//! groundstates and the commutator identity on low layers.
//!
//! cargo run --release --example virasoro -- [series] [rank] [max_level]

use lattice_voa::expr::print_state;
use lattice_voa::lattice::{build_screening_lattices, groundstates};
use lattice_voa::rootdata::{build_root_system, Series};
use lattice_voa::virasoro::{commutator_check, stress_tensor, Virasoro};

fn main() -> lattice_voa::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let series: Series = args.first().map(|s| s.parse()).transpose()?.unwrap_or(Series::A);
    let rank = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(1);
    let level = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(3);
    let sl = build_screening_lattices(&build_root_system(series, rank)?, 4)?;
    let st = stress_tensor(&sl);
    println!("T = {}", print_state(&st.element));
    println!("c = {}", st.c);
    let vir = Virasoro::new(&sl.ambient, st);
    for coset in sl.all_cosets() {
        let (gs, h) = groundstates(&sl, &coset);
        let v = lattice_voa::freefield::FieldElement::exp(gs[0].clone());
        let l0 = vir.mode(0, &v)?;
        println!("[{}]: L0 e^{} = {}  (h = {h})", coset.rep, gs[0], print_state(&l0));
    }
    let vac = sl.coset(&lattice_voa::lattice::Momentum::zero(rank));
    let rep = commutator_check(&sl, &vac, 3, level)?;
    println!(
        "[L_m, L_n] on the vacuum module to level {level}: {} checks, {} failures",
        rep.checks,
        rep.failures.len()
    );
    Ok(())
}
