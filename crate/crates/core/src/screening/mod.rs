//! Screening operators `Z_α = res Y(e^{φ_α})`, the braiding matrix, Weyl
//! powers, kernels and Nichols relations.

pub mod kernel;
pub mod layers;
pub mod nichols;
pub mod triplet;

use std::cell::RefCell;
use std::collections::HashMap;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::freefield::{FieldElement, Key};
use crate::lattice::{Ambient, Coset, Momentum, ScreeningLattices};
use crate::rational::{fmt_rat, int, RatMatrix, Rational};
use crate::rootdata::subsystem_simple_roots;
use crate::scalar::Phase;
use crate::vertexop::VertexEngine;

pub use kernel::{kernel_layer, module_kernel, KernelReport, KernelRow};
pub use layers::{layer_basis, GradedLayer};
pub use nichols::{nichols_check, NicholsReport};
pub use triplet::{long_screening_suite, LongScreeningReport};

/// `q_ij = e^{πi r_ij}` with `r_ij = (α_i⊖, α_j⊖) = (α_i, α_j)/p`.
#[derive(Clone, Debug, PartialEq)]
pub struct BraidingMatrix {
    pub q_exponents: RatMatrix,
}

impl BraidingMatrix {
    pub fn q(&self, i: usize, j: usize) -> Phase {
        Phase::new(self.q_exponents[(i, j)])
    }
}

pub fn braiding_matrix(sl: &ScreeningLattices) -> BraidingMatrix {
    BraidingMatrix {
        q_exponents: sl.ambient.gram.clone(),
    }
}

/// `Z_α` on a state whose momenta pair integrally with `α`.
pub fn apply_screening(amb: &Ambient, alpha: &Momentum, state: &FieldElement) -> Result<FieldElement> {
    VertexEngine::new(amb).residue_integer(&FieldElement::exp(alpha.clone()), state)
}

/// A fixed family of screenings with memoised images of basis terms.
pub struct Screener<'a> {
    pub momenta: Vec<Momentum>,
    engine: VertexEngine<'a>,
    memo: RefCell<HashMap<(usize, Key), FieldElement>>,
}

impl<'a> Screener<'a> {
    pub fn new(amb: &'a Ambient, momenta: Vec<Momentum>) -> Self {
        Screener {
            momenta,
            engine: VertexEngine::new(amb),
            memo: RefCell::new(HashMap::new()),
        }
    }

    pub fn apply(&self, i: usize, state: &FieldElement) -> Result<FieldElement> {
        let mut out = FieldElement::zero(state.rank());
        for (m, u, c) in state.terms() {
            let key = (i, (m.clone(), u.clone()));
            let cached = self.memo.borrow().get(&key).cloned();
            let img = match cached {
                Some(v) => v,
                None => {
                    let s = FieldElement::term(int(1), m.clone(), u.clone());
                    let a = FieldElement::exp(self.momenta[i].clone());
                    let v = self.engine.residue_integer(&a, &s)?;
                    self.memo.borrow_mut().insert(key, v.clone());
                    v
                }
            };
            out.add_scaled(&img, *c);
        }
        Ok(out)
    }

    pub fn power(&self, i: usize, k: u32, state: &FieldElement) -> Result<FieldElement> {
        let mut s = state.clone();
        for _ in 0..k {
            s = self.apply(i, &s)?;
        }
        Ok(s)
    }
}

/// The short screenings whose kernels define the algebra. For
/// non-degenerate data these are all `−α_i/√p`; when some simple root has
/// `(α_i⊖, α_i⊖)` an even integer, they are the simple roots of the
/// subsystem of roots whose rescaled norm is not an even integer, ordered by
/// decreasing height.
pub fn short_screening_set(sl: &ScreeningLattices) -> Vec<Momentum> {
    let n = sl.rank();
    let p = sl.p as i128;
    let degenerate = (0..n).any(|i| {
        let r = Rational::new(sl.rs.gram[i][i] as i128, p);
        r.is_integer() && r.to_integer().is_even()
    });
    if !degenerate {
        return sl.basis_short.clone();
    }
    let keep: Vec<Vec<i64>> = sl
        .rs
        .positive_roots
        .iter()
        .filter(|r| {
            let x = Rational::new(sl.rs.pairing_int(r, r) as i128, p);
            !(x.is_integer() && x.to_integer().is_even())
        })
        .cloned()
        .collect();
    let mut simple = subsystem_simple_roots(&keep);
    simple.sort_by_key(|r| (-r.iter().sum::<i64>(), r.clone()));
    simple
        .iter()
        .map(|r| Momentum::from_ints(r).neg())
        .collect()
}

/// The long screenings `α_i⊕ = α_i^∨ √p`.
pub fn long_screening_set(sl: &ScreeningLattices) -> Vec<Momentum> {
    sl.basis_long.clone()
}

/// Smallest `N > 0` with `N γ ∈ Λ⊕`.
pub fn screening_order(sl: &ScreeningLattices, gamma: &Momentum) -> i128 {
    sl.long
        .coords_of(gamma)
        .iter()
        .fold(1i128, |acc, c| acc.lcm(c.denom()))
}

/// Power `k` of `Z_γ` acting on a module, `0 ≤ k ≤ N`. `k` solves
/// `(γ, ν) + (k−1)(γ,γ)/2 ∈ ℤ`, which fixes it modulo `N = ord(γ)` since
/// `(γ,γ)/2 = 1/N`. In the class `k ≡ 0` the module containing `Q` gets
/// `k = 0` (identity), every other one `k = N` (zero by the Nichols
/// relation).
pub fn weyl_power_exponent(sl: &ScreeningLattices, coset: &Coset, gamma: &Momentum) -> Result<i64> {
    let amb = &sl.ambient;
    let n = screening_order(sl, gamma);
    let half = amb.norm(gamma) / int(2);
    if half * int(n) != int(1) {
        return Err(Error::WeylPower(format!(
            "(γ,γ)/2 = {} is not 1/N for N = {n}",
            fmt_rat(&half)
        )));
    }
    let x = int(n) * amb.pair(gamma, &coset.rep);
    if !x.is_integer() {
        return Err(Error::WeylPower(format!(
            "N(γ,λ) = {} is not an integer",
            fmt_rat(&x)
        )));
    }
    let k = (1 - x.to_integer()).mod_floor(&n);
    if k != 0 {
        return Ok(k as i64);
    }
    Ok(if coset.contains(&sl.q) { 0 } else { n as i64 })
}

/// Eigenvalues of the grading operators on a homogeneous state.
#[derive(Clone, Debug, PartialEq)]
pub struct Grading {
    /// `K_{α_i⊖} = e^{(2πi/ℓ)(α_i, λ√p)}`, stored as an exponent of `e^{iπ}`.
    pub k_phase: Phase,
    /// `H = (α_i^∨, λ/√p) d` with `d` half the long root norm.
    pub h_value: Rational,
}

pub fn grading_ops(sl: &ScreeningLattices, i: usize, state: &FieldElement) -> Result<Grading> {
    let nu = state.single_momentum()?;
    let e = Momentum::unit(sl.rank(), i);
    let x = sl.ambient.pair(&e, &nu);
    let d = int(sl.rs.long_norm() as i128) / int(2);
    Ok(Grading {
        k_phase: Phase::new(x),
        h_value: int(2) * x / int(sl.rs.gram[i][i] as i128) * d,
    })
}

/// Checks that `state` lies in the layer `h` of the coset `coset`.
pub(crate) fn check_layer(
    sl: &ScreeningLattices,
    coset: &Coset,
    h: Rational,
    state: &FieldElement,
) -> Result<()> {
    for (m, u, _) in state.terms() {
        let hh = crate::lattice::conformal_dim(sl, m) + int(u.degree() as i128);
        if hh != h || !coset.contains(m) {
            return Err(Error::LayerMismatch(format!(
                "term at momentum {m} with h = {} outside layer {} of {}",
                fmt_rat(&hh),
                fmt_rat(&h),
                coset.rep
            )));
        }
    }
    Ok(())
}
