//! Worked screening evaluations for A1 and B2 at ell = 4.
//!
//! States are written in the ambient basis `a_i = α_i/√2`, so `√2 α_i` is
//! `2*a_i`. Rows whose printed value is not what the residue gives carry
//! the computed value; the test also asserts the printed one fails.

mod common;

use common::{evaluate, lattices, Row, A1_LONG, A1_SHORT, B2_BLUE, B2_GREEN};
use lattice_voa::expr::{parse_state, print_state};
use lattice_voa::freefield::FieldElement;
use lattice_voa::lattice::{Momentum, ScreeningLattices};
use lattice_voa::rootdata::Series;
use lattice_voa::screening::{apply_screening, long_screening_suite, short_screening_set};
use lattice_voa::vertexop::VertexEngine;
use lattice_voa::virasoro::stress_tensor;

fn run(sl: &ScreeningLattices, screenings: &[Momentum], rows: &[Row]) {
    for (k, r) in rows.iter().enumerate() {
        let o = evaluate(sl, screenings, r);
        assert!(o.matches_expected, "row {k}: Z{}({}) = {}", r.z, r.source, print_state(&o.result));
        assert_eq!(o.matches_printed, r.computed.is_none(), "row {k}");
    }
}

#[test]
fn a1_short_screening() {
    let sl = lattices(Series::A, 1);
    let z = short_screening_set(&sl);
    run(&sl, &z, A1_SHORT);
}

#[test]
fn a1_long_screening() {
    let sl = lattices(Series::A, 1);
    let z = vec![sl.basis_long[0].clone()];
    assert_eq!(z[0], Momentum::from_ints(&[2]));
    run(&sl, &z, A1_LONG);
    let t = stress_tensor(&sl).element;
    assert!(apply_screening(&sl.ambient, &z[0], &t).unwrap().is_zero());
}

#[test]
fn a1_triplet_orbit() {
    let sl = lattices(Series::A, 1);
    let rep = long_screening_suite(&sl).unwrap();
    let t = rep.triplet.expect("rank one");
    assert_eq!(t.h, "3");
    assert!(t.cube_vanishes);
    assert_eq!(t.in_short_kernel, [true; 3]);
    assert_eq!(t.states[0], parse_state("exp[-2*a]", &sl).unwrap());
    assert!(!t.states[1].is_zero() && !t.states[2].is_zero());
    assert_eq!(t.states[2].momenta(), vec![Momentum::from_ints(&[2])]);
}

#[test]
fn a1_center_fractional() {
    let sl = lattices(Series::A, 1);
    let e = VertexEngine::new(&sl.ambient);
    let a = FieldElement::exp(Momentum::from_ints(&[-1]));
    let b = parse_state("exp[1/2*a]", &sl).unwrap();
    assert!(apply_screening(&sl.ambient, &Momentum::from_ints(&[-1]), &b).is_err());
    let fr = e.residue_fractional(&a, &b, 4).unwrap();
    let mut d = a.clone();
    let mut fact = 1.0;
    for (k, term) in fr.terms.iter().enumerate() {
        let x = k as f64 + 0.5;
        let arg = 2.0 * std::f64::consts::PI * x;
        let want = num_complex::Complex64::new(arg.cos() - 1.0, arg.sin()) / num_complex::Complex64::new(0.0, arg);
        assert!((term.prefactor - want).norm() < 1e-12, "k = {k}");
        if k > 0 {
            d = d.derive();
            fact *= k as f64;
        }
        let expect = b.mul(&d).scale(lattice_voa::rational::rat(1, fact as i128));
        assert_eq!(term.state, expect, "k = {k}");
    }
}

/// `Z1 = Z_{-(a1+a2)}`, `Z2 = Z_{-a2}`.
#[test]
fn b2_blue() {
    let sl = lattices(Series::B, 2);
    let z = short_screening_set(&sl);
    assert_eq!(z, vec![Momentum::from_ints(&[-1, -1]), Momentum::from_ints(&[0, -1])]);
    assert!(!sl.long.contains(&Momentum::from_ints(&[2, 1])));
    assert!(sl.long.contains(&Momentum::from_ints(&[1, 2])));
    run(&sl, &z, B2_BLUE);
}

#[test]
fn b2_green() {
    let sl = lattices(Series::B, 2);
    let z = short_screening_set(&sl);
    run(&sl, &z, B2_GREEN);
}
