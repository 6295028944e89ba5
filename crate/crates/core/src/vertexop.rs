//! The vertex operator
//! `Y(a)b = Σ_k ⟨a⁽²⁾, b⁽²⁾⟩ · b⁽¹⁾ · z^k/k! ∂^k.a⁽¹⁾`,
//! its modes and the residue operator.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};

use num_complex::Complex64;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::freefield::pairing::WickContext;
use crate::freefield::{derive_term_into, FieldElement, Monomial};
use crate::lattice::{Ambient, Momentum};
use crate::rational::{factorial, fmt_rat, int, to_f64, Rational};
use crate::scalar::Phase;

/// Largest number of derivatives a single mode may require.
pub const DERIVATIVE_CAP: i64 = 48;

/// Coefficients of `Y(a)b` for exponents inside a window.
#[derive(Clone, Debug, PartialEq)]
pub struct StateSeries {
    pub coeffs: BTreeMap<Rational, FieldElement>,
    pub window: (Rational, Rational),
    /// No exponent below this occurs in `Y(a)b`.
    pub lower_bound: Rational,
}

impl StateSeries {
    pub fn coeff(&self, m: &Rational) -> Option<&FieldElement> {
        self.coeffs.get(m)
    }
}

/// Vertex operator evaluation over a fixed ambient space, caching `∂^k`.
pub struct VertexEngine<'a> {
    pub amb: &'a Ambient,
    cache: RefCell<HashMap<(Momentum, Monomial, u32), FieldElement>>,
}

impl<'a> VertexEngine<'a> {
    pub fn new(amb: &'a Ambient) -> Self {
        VertexEngine {
            amb,
            cache: RefCell::new(HashMap::new()),
        }
    }

    /// `∂^k.(u e^{φ_α})` for a single term with unit coefficient.
    fn derived(&self, al: &Momentum, u: &Monomial, k: u32) -> FieldElement {
        let key = (al.clone(), u.clone(), k);
        if let Some(v) = self.cache.borrow().get(&key) {
            return v.clone();
        }
        let val = if k == 0 {
            FieldElement::term(int(1), al.clone(), u.clone())
        } else {
            let prev = self.derived(al, u, k - 1);
            let mut out = FieldElement::zero(al.rank());
            for (m, w, c) in prev.terms() {
                derive_term_into(&mut out, m, w, *c);
            }
            out
        };
        self.cache.borrow_mut().insert(key, val.clone());
        val
    }

    /// Guaranteed lower bound on the exponents of `Y(a)b`.
    pub fn lower_bound(&self, a: &FieldElement, b: &FieldElement) -> Rational {
        let mut lb: Option<Rational> = None;
        for (al, u, _) in a.terms() {
            for (be, v, _) in b.terms() {
                let e = self.amb.pair(al, be) - int((u.degree() + v.degree()) as i128);
                lb = Some(lb.map_or(e, |x| x.min(e)));
            }
        }
        lb.unwrap_or_else(Rational::zero)
    }

    /// All coefficients with exponent in `[lo, hi]`.
    pub fn series(
        &self,
        a: &FieldElement,
        b: &FieldElement,
        lo: Rational,
        hi: Rational,
    ) -> Result<StateSeries> {
        let rank = a.rank().max(b.rank());
        if a.rank() != b.rank() {
            return Err(Error::RankMismatch {
                expected: a.rank(),
                found: b.rank(),
            });
        }
        let mut coeffs: BTreeMap<Rational, FieldElement> = BTreeMap::new();
        for (al, u, ca) in a.terms() {
            for (be, v, cb) in b.terms() {
                let ctx = WickContext::new(self.amb, al, be);
                let base = self.amb.pair(al, be);
                let r = u.len();
                for mask in 0..(1u64 << r) {
                    let kept_a = u.select(mask, true);
                    let paired_a = u.select(mask, false);
                    for c in ctx.contractions(&paired_a.0, &v.0, true) {
                        let e = base + int(c.offset as i128);
                        // exponents e + k with k ≥ 0 inside the window
                        let first = (lo - e).ceil().max(Rational::zero());
                        let mut k = first.to_integer();
                        loop {
                            let m = e + int(k);
                            if m > hi {
                                break;
                            }
                            if k as i64 > DERIVATIVE_CAP {
                                return Err(Error::ModeOutOfWindow {
                                    mode: fmt_rat(&m),
                                    order: k as i64,
                                    cap: DERIVATIVE_CAP,
                                });
                            }
                            let kept_b = Monomial(
                                v.0.iter()
                                    .enumerate()
                                    .filter(|(j, _)| c.kept >> j & 1 == 1)
                                    .map(|(_, f)| *f)
                                    .collect(),
                            );
                            let s = c.coeff * ca * cb / factorial(k as u32);
                            let d = self.derived(al, &kept_a, k as u32);
                            let entry = coeffs.entry(m).or_insert_with(|| FieldElement::zero(rank));
                            for (mm, w, cw) in d.terms() {
                                entry.add_term(mm.add(be), w.mul(&kept_b), cw * s);
                            }
                            k += 1;
                        }
                    }
                }
            }
        }
        coeffs.retain(|_, v| !v.is_zero());
        Ok(StateSeries {
            coeffs,
            window: (lo, hi),
            lower_bound: self.lower_bound(a, b),
        })
    }

    /// `Y(a)_m b`, the `z^m` coefficient.
    pub fn mode(&self, a: &FieldElement, m: Rational, b: &FieldElement) -> Result<FieldElement> {
        let s = self.series(a, b, m, m)?;
        Ok(s.coeffs
            .get(&m)
            .cloned()
            .unwrap_or_else(|| FieldElement::zero(a.rank())))
    }

    /// Residue in the integer case: `Y(a)_{−1} b`.
    pub fn residue_integer(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        for (al, _, _) in a.terms() {
            for (be, _, _) in b.terms() {
                let p = self.amb.pair(al, be);
                if !p.is_integer() {
                    return Err(Error::FractionalPairing { pairing: fmt_rat(&p) });
                }
            }
        }
        self.mode(a, int(-1), b)
    }

    /// Residue in the fractional case: the first `truncation` terms of
    /// `(e^{2πim} − 1)/(2πi) Σ_k 1/(m+k+1) Y(a)_{m+k} b`.
    pub fn residue_fractional(
        &self,
        a: &FieldElement,
        b: &FieldElement,
        truncation: usize,
    ) -> Result<FractionalResidue> {
        let mut class: Option<Rational> = None;
        for (al, _, _) in a.terms() {
            for (be, _, _) in b.terms() {
                let p = self.amb.pair(al, be);
                let f = p - p.floor();
                match class {
                    None => class = Some(f),
                    Some(c) if c != f => return Err(Error::MixedMomentum),
                    _ => {}
                }
            }
        }
        let frac = class.unwrap_or_else(Rational::zero);
        if frac.is_zero() {
            return Err(Error::Unsupported(
                "integral pairing: use the integer residue".into(),
            ));
        }
        let lb = self.lower_bound(a, b);
        let m0 = lb.floor() + frac;
        let m0 = if m0 < lb { m0 + int(1) } else { m0 };
        let phase = Phase::new(int(2) * m0);
        let numer = phase.to_complex() - Complex64::new(1.0, 0.0);
        let two_pi_i = Complex64::new(0.0, 2.0 * std::f64::consts::PI);
        let mut terms = Vec::new();
        for j in 0..truncation {
            let m = m0 + int(j as i128);
            let pref = numer / (two_pi_i * to_f64(&(m + int(1))));
            let y = self.mode(a, m, b)?;
            terms.push(FractionalTerm {
                mode: m,
                prefactor: pref,
                state: y,
            });
        }
        let exact_below = if truncation == 0 {
            None
        } else {
            Some(m0 + int(truncation as i128))
        };
        Ok(FractionalResidue {
            phase,
            terms,
            first_omitted_mode: exact_below,
        })
    }
}

/// One summand `prefactor · Y(a)_mode b` of a fractional residue.
#[derive(Clone, Debug)]
pub struct FractionalTerm {
    pub mode: Rational,
    pub prefactor: Complex64,
    pub state: FieldElement,
}

/// Truncated fractional residue. Each summand sits in its own graded
/// component (its degree grows with the mode), so every component produced
/// by modes below `first_omitted_mode` is exact up to float rounding of the
/// prefactor.
#[derive(Clone, Debug)]
pub struct FractionalResidue {
    pub phase: Phase,
    pub terms: Vec<FractionalTerm>,
    pub first_omitted_mode: Option<Rational>,
}

impl FractionalResidue {
    /// Largest prefactor magnitude among omitted terms.
    pub fn tail_prefactor_bound(&self) -> f64 {
        match self.first_omitted_mode {
            Some(m) => {
                let numer = (self.phase.to_complex() - Complex64::new(1.0, 0.0)).norm();
                numer / (2.0 * std::f64::consts::PI * to_f64(&(m + int(1))).abs())
            }
            None => f64::INFINITY,
        }
    }
}

pub fn vertex_op(
    amb: &Ambient,
    a: &FieldElement,
    b: &FieldElement,
    window: (Rational, Rational),
) -> Result<StateSeries> {
    VertexEngine::new(amb).series(a, b, window.0, window.1)
}

pub fn mode_op(amb: &Ambient, a: &FieldElement, m: Rational, b: &FieldElement) -> Result<FieldElement> {
    VertexEngine::new(amb).mode(a, m, b)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ResidueMode {
    Integer,
    Fractional { truncation: usize },
}

#[derive(Clone, Debug)]
pub enum Residue {
    Exact(FieldElement),
    Approximate(FractionalResidue),
}

pub fn residue_op(amb: &Ambient, a: &FieldElement, b: &FieldElement, mode: ResidueMode) -> Result<Residue> {
    let e = VertexEngine::new(amb);
    match mode {
        ResidueMode::Integer => e.residue_integer(a, b).map(Residue::Exact),
        ResidueMode::Fractional { truncation } => {
            e.residue_fractional(a, b, truncation).map(Residue::Approximate)
        }
    }
}
