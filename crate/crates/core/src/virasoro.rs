//! The stress tensor `T^Q` and its modes `L_n = Y(T)_{−2−n}`.

use std::cell::RefCell;
use std::collections::HashMap;

use serde::Serialize;

use crate::error::Result;
use crate::freefield::{FieldElement, Key};
use crate::lattice::{Ambient, Coset, Momentum, ScreeningLattices};
use crate::rational::{fmt_rat, int, RatMatrix, Rational};
use crate::screening::layers::module_layers;
use crate::vertexop::VertexEngine;

#[derive(Clone, Debug, PartialEq)]
pub struct StressTensor {
    pub element: FieldElement,
    pub q: Momentum,
    pub c: Rational,
}

/// `T = ½ Σ_i ∂φ_{b_i} ∂φ_{b_i*} + ∂²φ_Q` for a basis `b` of the ambient
/// space and its dual basis `b*`.
pub fn stress_tensor_in_basis(amb: &Ambient, basis: &[Momentum], q: &Momentum) -> StressTensor {
    let n = amb.rank();
    let m = RatMatrix::from_rows(
        &basis
            .iter()
            .map(|u| basis.iter().map(|v| amb.pair(u, v)).collect())
            .collect::<Vec<_>>(),
    );
    let minv = m.inverse().expect("basis is linearly independent");
    let mut t = FieldElement::zero(n);
    for (i, bi) in basis.iter().enumerate() {
        let mut dual = Momentum::zero(n);
        for (j, bj) in basis.iter().enumerate() {
            dual = dual.add(&bj.scale(minv[(i, j)]));
        }
        let term = FieldElement::dphi(1, bi).mul(&FieldElement::dphi(1, &dual));
        t.add_scaled(&term, Rational::new(1, 2));
    }
    t.add_assign(&FieldElement::dphi(2, q));
    StressTensor {
        element: t,
        q: q.clone(),
        c: int(n as i128) - int(12) * amb.norm(q),
    }
}

pub fn stress_tensor(sl: &ScreeningLattices) -> StressTensor {
    let basis: Vec<Momentum> = (0..sl.rank()).map(|i| Momentum::unit(sl.rank(), i)).collect();
    stress_tensor_in_basis(&sl.ambient, &basis, &sl.q)
}

/// Virasoro action with memoised images of basis terms.
pub struct Virasoro<'a> {
    pub st: StressTensor,
    engine: VertexEngine<'a>,
    memo: RefCell<HashMap<(i64, Key), FieldElement>>,
}

impl<'a> Virasoro<'a> {
    pub fn new(amb: &'a Ambient, st: StressTensor) -> Self {
        Virasoro {
            st,
            engine: VertexEngine::new(amb),
            memo: RefCell::new(HashMap::new()),
        }
    }

    /// `L_n b`.
    pub fn mode(&self, n: i64, b: &FieldElement) -> Result<FieldElement> {
        let mut out = FieldElement::zero(b.rank());
        for (m, u, c) in b.terms() {
            let key = (n, (m.clone(), u.clone()));
            let cached = self.memo.borrow().get(&key).cloned();
            let img = match cached {
                Some(v) => v,
                None => {
                    let s = FieldElement::term(int(1), m.clone(), u.clone());
                    let v = self.engine.mode(&self.st.element, int(-2 - n as i128), &s)?;
                    self.memo.borrow_mut().insert(key, v.clone());
                    v
                }
            };
            out.add_scaled(&img, *c);
        }
        Ok(out)
    }
}

pub fn virasoro_mode(amb: &Ambient, st: &StressTensor, n: i64, b: &FieldElement) -> Result<FieldElement> {
    Virasoro::new(amb, st.clone()).mode(n, b)
}

/// `L₀` eigenvalue `(β,β)/2 − (β,Q) + |u|` of a basis state.
pub fn l0_eigenvalue(amb: &Ambient, q: &Momentum, beta: &Momentum, degree: u32) -> Rational {
    amb.norm(beta) / int(2) - amb.pair(beta, q) + int(degree as i128)
}

#[derive(Clone, Debug, Serialize)]
pub struct CommutatorFailure {
    pub m: i64,
    pub n: i64,
    pub h: String,
    pub state: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CommutatorReport {
    pub central_charge: String,
    pub max_mode: i64,
    pub max_level: u32,
    pub layer_dims: Vec<usize>,
    pub checks: usize,
    pub failures: Vec<CommutatorFailure>,
}

impl CommutatorReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// `[L_m, L_n] v = (m−n) L_{m+n} v + c/12 (m³−m) δ_{m+n,0} v` for every
/// basis state `v` of the layers `h_min … h_min + max_level` of a module
/// and all `|m|, |n| ≤ max_mode`. Both sides are computed exactly; the
/// intermediate layers are whatever the modes reach.
pub fn commutator_check(
    sl: &ScreeningLattices,
    coset: &Coset,
    max_mode: i64,
    max_level: u32,
) -> Result<CommutatorReport> {
    let st = stress_tensor(sl);
    let c = st.c;
    let vir = Virasoro::new(&sl.ambient, st);
    let layers = module_layers(sl, coset, max_level);
    let mut failures = Vec::new();
    let mut checks = 0;
    for layer in &layers {
        for i in 0..layer.dim() {
            let v = layer.element(i);
            for m in -max_mode..=max_mode {
                let lm_v = vir.mode(m, &v)?;
                for n in -max_mode..=max_mode {
                    let ln_v = vir.mode(n, &v)?;
                    let lhs = vir.mode(m, &ln_v)?.sub(&vir.mode(n, &lm_v)?);
                    let mut rhs = vir.mode(m + n, &v)?.scale(int((m - n) as i128));
                    if m + n == 0 {
                        rhs.add_scaled(&v, c / int(12) * int((m * m * m - m) as i128));
                    }
                    checks += 1;
                    if lhs != rhs {
                        failures.push(CommutatorFailure {
                            m,
                            n,
                            h: fmt_rat(&layer.h),
                            state: format!("{:?}", layer.basis[i]),
                        });
                    }
                }
            }
        }
    }
    Ok(CommutatorReport {
        central_charge: fmt_rat(&c),
        max_mode,
        max_level,
        layer_dims: layers.iter().map(|l| l.dim()).collect(),
        checks,
        failures,
    })
}
