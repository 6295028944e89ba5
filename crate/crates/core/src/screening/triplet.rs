//! Long screenings: annihilation of the vacuum and of `T^Q`, and the
//! triplet orbit `W⁻, W⁰, W⁺` for rank one.

use serde::Serialize;

use super::{long_screening_set, short_screening_set, Screener};
use crate::error::Result;
use crate::freefield::FieldElement;
use crate::lattice::{conformal_dim, ScreeningLattices};
use crate::rational::{fmt_rat, Rational};
use crate::virasoro::stress_tensor;

#[derive(Clone, Debug, Serialize)]
pub struct TripletOrbit {
    #[serde(skip)]
    pub states: [FieldElement; 3],
    pub h: String,
    /// `Z_{α⊕}³ W⁻ = 0`.
    pub cube_vanishes: bool,
    /// Each of `W⁻, W⁰, W⁺` is killed by the short screening.
    pub in_short_kernel: [bool; 3],
}

#[derive(Clone, Debug, Serialize)]
pub struct LongScreeningReport {
    pub kills_vacuum: Vec<bool>,
    pub kills_stress_tensor: Vec<bool>,
    pub triplet: Option<TripletOrbit>,
}

impl LongScreeningReport {
    pub fn passed(&self) -> bool {
        self.kills_vacuum.iter().all(|b| *b)
            && self.kills_stress_tensor.iter().all(|b| *b)
            && self
                .triplet
                .as_ref()
                .is_none_or(|t| t.cube_vanishes && t.in_short_kernel.iter().all(|b| *b))
    }
}

pub fn long_screening_suite(sl: &ScreeningLattices) -> Result<LongScreeningReport> {
    let amb = &sl.ambient;
    let long = long_screening_set(sl);
    let sc = Screener::new(amb, long.clone());
    let t = stress_tensor(sl).element;
    let vac = FieldElement::vacuum(sl.rank());
    let mut kills_vacuum = Vec::new();
    let mut kills_stress_tensor = Vec::new();
    for i in 0..long.len() {
        kills_vacuum.push(sc.apply(i, &vac)?.is_zero());
        kills_stress_tensor.push(sc.apply(i, &t)?.is_zero());
    }
    let triplet = if sl.rank() == 1 {
        let short = Screener::new(amb, short_screening_set(sl));
        let wm = FieldElement::exp(long[0].neg());
        let w0 = sc.apply(0, &wm)?;
        let wp = sc.apply(0, &w0)?;
        let cube = sc.apply(0, &wp)?;
        let h: Rational = conformal_dim(sl, &long[0].neg());
        let states = [wm, w0, wp];
        let mut in_short_kernel = [false; 3];
        for (k, s) in states.iter().enumerate() {
            in_short_kernel[k] = short.apply(0, s)?.is_zero();
        }
        Some(TripletOrbit {
            states,
            h: fmt_rat(&h),
            cube_vanishes: cube.is_zero(),
            in_short_kernel,
        })
    } else {
        None
    };
    Ok(LongScreeningReport {
        kills_vacuum,
        kills_stress_tensor,
        triplet,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::build_screening_lattices;
    use crate::rootdata::{build_root_system, Series};

    #[test]
    fn a1_and_b2() {
        let a1 = build_screening_lattices(&build_root_system(Series::A, 1).unwrap(), 4).unwrap();
        let r = long_screening_suite(&a1).unwrap();
        assert!(r.passed(), "{r:?}");
        let t = r.triplet.unwrap();
        assert_eq!(t.h, "3");
        assert!(!t.states[1].is_zero() && !t.states[2].is_zero());
        let b2 = build_screening_lattices(&build_root_system(Series::B, 2).unwrap(), 4).unwrap();
        assert!(long_screening_suite(&b2).unwrap().passed());
    }
}
