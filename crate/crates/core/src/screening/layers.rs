//! Graded layers `V_{[λ]}` at fixed conformal dimension.

use std::collections::HashMap;

use num_traits::{Signed, ToPrimitive};

use crate::freefield::{Factor, FieldElement, Key, Monomial};
use crate::lattice::{conformal_dim, groundstates, points_up_to, Coset, ScreeningLattices};
use crate::rational::{int, Rational};

/// Monomials `Π ∂^m φ_{e_i}` of total order `n` in `rank` colours.
pub fn colored_partitions(rank: usize, n: u32) -> Vec<Monomial> {
    fn rec(rank: usize, left: u32, max: (u32, usize), acc: &mut Vec<Factor>, out: &mut Vec<Monomial>) {
        if left == 0 {
            out.push(Monomial::from_factors(acc.clone()));
            return;
        }
        for order in (1..=left.min(max.0)).rev() {
            let top = if order == max.0 { max.1 } else { rank - 1 };
            for basis in (0..=top).rev() {
                acc.push(Factor::new(basis, order));
                rec(rank, left - order, (order, basis), acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    if rank == 0 {
        if n == 0 {
            out.push(Monomial::one());
        }
        return out;
    }
    rec(rank, n, (n, rank - 1), &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Number of `rank`-coloured partitions of `n`.
pub fn colored_partition_count(rank: usize, n: u32) -> u64 {
    let n = n as usize;
    let mut p = vec![0u64; n + 1];
    p[0] = 1;
    for _ in 0..rank {
        for k in 1..=n {
            for m in k..=n {
                p[m] += p[m - k];
            }
        }
    }
    p[n]
}

/// Basis states `u e^{φ_μ}` of a module with `h(μ) + |u| = h`.
#[derive(Clone, Debug)]
pub struct GradedLayer {
    pub coset: Coset,
    pub h: Rational,
    pub basis: Vec<Key>,
}

impl GradedLayer {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn element(&self, i: usize) -> FieldElement {
        let (m, u) = &self.basis[i];
        FieldElement::term(int(1), m.clone(), u.clone())
    }

    pub fn index(&self) -> HashMap<Key, usize> {
        self.basis.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect()
    }
}

pub fn layer_basis(sl: &ScreeningLattices, coset: &Coset, h: Rational) -> GradedLayer {
    let mut basis = Vec::new();
    for mu in points_up_to(sl, coset, h) {
        let gap = h - conformal_dim(sl, &mu);
        if !gap.is_integer() || gap.is_negative() {
            continue;
        }
        for u in colored_partitions(sl.rank(), gap.to_integer().to_u32().unwrap()) {
            basis.push((mu.clone(), u));
        }
    }
    basis.sort();
    GradedLayer {
        coset: coset.clone(),
        h,
        basis,
    }
}

/// Lowest conformal dimension of the module and the layers
/// `h_min, h_min + 1, …, h_min + max_level`.
pub fn module_layers(sl: &ScreeningLattices, coset: &Coset, max_level: u32) -> Vec<GradedLayer> {
    let (_, h0) = groundstates(sl, coset);
    (0..=max_level)
        .map(|k| layer_basis(sl, coset, h0 + int(k as i128)))
        .collect()
}
