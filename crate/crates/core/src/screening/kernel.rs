//! Layer-by-layer kernels of the short screenings.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;

use super::layers::{layer_basis, GradedLayer};
use super::{check_layer, weyl_power_exponent, Screener};
use crate::error::{Error, Result};
use crate::freefield::{FieldElement, Key};
use crate::lattice::{groundstates, Coset, Momentum, ScreeningLattices};
use crate::linalg::{nullspace, rank, SparseRow};
use crate::rational::{fmt_rat, int, Rational};

#[derive(Clone, Debug, Serialize)]
pub struct KernelRow {
    pub h: String,
    pub dim: usize,
    pub per_screening: Vec<usize>,
    pub intersection: usize,
    #[serde(skip)]
    pub basis: Vec<FieldElement>,
}

impl KernelRow {
    /// `[dim, per-screening kernel, intersection]`; the middle entry is the
    /// common value when all screenings agree and the first one otherwise.
    pub fn triple(&self) -> [usize; 3] {
        [
            self.dim,
            self.per_screening.first().copied().unwrap_or(self.dim),
            self.intersection,
        ]
    }

    pub fn screenings_agree(&self) -> bool {
        self.per_screening.windows(2).all(|w| w[0] == w[1])
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct KernelReport {
    pub coset_rep: Momentum,
    pub screenings: Vec<Momentum>,
    pub weyl_powers: Vec<i64>,
    pub rows: Vec<KernelRow>,
}

fn matrix_of(
    sl: &ScreeningLattices,
    screener: &Screener,
    i: usize,
    layer: &GradedLayer,
    row_index: &mut HashMap<(usize, Key), usize>,
    rows: &mut Vec<SparseRow>,
) -> Result<()> {
    let target = layer.coset.shifted(&screener.momenta[i]);
    for j in 0..layer.dim() {
        let img = screener.apply(i, &layer.element(j))?;
        check_layer(sl, &target, layer.h, &img)?;
        for (m, u, c) in img.terms() {
            let key = (i, (m.clone(), u.clone()));
            let r = *row_index.entry(key).or_insert_with(|| {
                rows.push(Vec::new());
                rows.len() - 1
            });
            rows[r].push((j, *c));
        }
    }
    Ok(())
}

fn big_to_rat(b: &BigInt) -> Result<Rational> {
    b.to_i128()
        .map(int)
        .ok_or_else(|| Error::Unsupported("kernel vector entry exceeds i128".into()))
}

/// Kernel dimensions of each screening power and of their intersection on
/// one layer. Powers `k = 0` give the zero kernel, `k = N` the full layer,
/// `k = 1` is computed exactly; other powers are not supported.
pub fn kernel_layer_with(
    sl: &ScreeningLattices,
    screener: &Screener,
    powers: &[i64],
    layer: &GradedLayer,
    want_basis: bool,
) -> Result<KernelRow> {
    let n = layer.dim();
    let mut per = Vec::new();
    let mut all_rows: Vec<SparseRow> = Vec::new();
    let mut all_index = HashMap::new();
    let mut zero = false;
    for (i, &k) in powers.iter().enumerate() {
        match k {
            0 => {
                per.push(0);
                zero = true;
            }
            1 => {
                let mut idx = HashMap::new();
                let mut rows = Vec::new();
                matrix_of(sl, screener, i, layer, &mut idx, &mut rows)?;
                per.push(n - rank(&rows, n));
                matrix_of(sl, screener, i, layer, &mut all_index, &mut all_rows)?;
            }
            k if k as i128 == super::screening_order(sl, &screener.momenta[i]) => per.push(n),
            k => {
                return Err(Error::WeylPower(format!(
                    "power {k} of screening {} is neither 0, 1 nor nilpotent",
                    screener.momenta[i]
                )))
            }
        }
    }
    let (intersection, basis) = if zero {
        (0, vec![])
    } else {
        let ns = if want_basis {
            nullspace(&all_rows, n)
        } else {
            vec![]
        };
        let dim = if want_basis { ns.len() } else { n - rank(&all_rows, n) };
        let mut basis = Vec::new();
        for v in &ns {
            let mut f = FieldElement::zero(sl.rank());
            for (j, c) in v.iter().enumerate() {
                let c = big_to_rat(c)?;
                if c != int(0) {
                    let (m, u) = &layer.basis[j];
                    f.add_term(m.clone(), u.clone(), c);
                }
            }
            basis.push(f);
        }
        (dim, basis)
    };
    Ok(KernelRow {
        h: fmt_rat(&layer.h),
        dim: n,
        per_screening: per,
        intersection,
        basis,
    })
}

pub fn kernel_layer(
    sl: &ScreeningLattices,
    coset: &Coset,
    screenings: &[Momentum],
    h: Rational,
) -> Result<KernelRow> {
    let powers = screenings
        .iter()
        .map(|g| weyl_power_exponent(sl, coset, g))
        .collect::<Result<Vec<_>>>()?;
    let screener = Screener::new(&sl.ambient, screenings.to_vec());
    kernel_layer_with(sl, &screener, &powers, &layer_basis(sl, coset, h), true)
}

/// Kernel rows for the layers `h_min, …, h_min + max_level` of a module.
pub fn module_kernel(
    sl: &ScreeningLattices,
    coset: &Coset,
    screenings: &[Momentum],
    max_level: u32,
    want_basis: bool,
) -> Result<KernelReport> {
    let powers = screenings
        .iter()
        .map(|g| weyl_power_exponent(sl, coset, g))
        .collect::<Result<Vec<_>>>()?;
    let screener = Screener::new(&sl.ambient, screenings.to_vec());
    let (_, h0) = groundstates(sl, coset);
    let mut rows = Vec::new();
    for k in 0..=max_level {
        let layer = layer_basis(sl, coset, h0 + int(k as i128));
        rows.push(kernel_layer_with(sl, &screener, &powers, &layer, want_basis)?);
    }
    Ok(KernelReport {
        coset_rep: coset.rep.clone(),
        screenings: screenings.to_vec(),
        weyl_powers: powers,
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{build_screening_lattices, NamedModule};
    use crate::rootdata::{build_root_system, Series};
    use crate::screening::short_screening_set;

    fn table(s: Series, n: usize, m: NamedModule, levels: u32) -> Vec<[usize; 3]> {
        let sl = build_screening_lattices(&build_root_system(s, n).unwrap(), 4).unwrap();
        let c = sl.named_module(m).unwrap();
        let r = module_kernel(&sl, &c, &short_screening_set(&sl), levels, false).unwrap();
        assert!(r.rows.iter().all(|x| x.screenings_agree()));
        r.rows.iter().map(|x| x.triple()).collect()
    }

    #[test]
    fn b2_table() {
        assert_eq!(table(Series::B, 2, NamedModule::Blue, 1), vec![[2, 1, 1], [8, 4, 0]]);
        assert_eq!(table(Series::B, 2, NamedModule::Green, 1), vec![[2, 1, 0], [8, 4, 4]]);
        assert_eq!(table(Series::B, 2, NamedModule::Center, 1), vec![[1, 0, 0], [6, 0, 0]]);
        assert_eq!(table(Series::B, 2, NamedModule::Steinberg, 1), vec![[4, 4, 4], [8, 8, 8]]);
    }

    #[test]
    fn a1_vacuum() {
        let t = table(Series::A, 1, NamedModule::Blue, 3);
        let k: Vec<usize> = t.iter().map(|x| x[2]).collect();
        assert_eq!(k, vec![1, 0, 1, 4]);
    }
}
