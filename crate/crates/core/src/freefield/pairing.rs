//! The Hopf pairing `V ⊗ V → R`, values in Laurent polynomials of `z`.
//!
//! Base values, with left `∂` acting as `+d/dz` and right `∂` as `−d/dz`:
//!
//! | left            | right           | value                              |
//! |-----------------|-----------------|------------------------------------|
//! | `e^{φ_α}`       | `e^{φ_β}`       | `z^{(α,β)}`                        |
//! | `∂^mφ_{e_i}`    | `e^{φ_β}`       | `(−1)^{m−1}(m−1)! (e_i,β) z^{−m}`  |
//! | `e^{φ_α}`       | `∂^nφ_{e_j}`    | `−(n−1)! (α,e_j) z^{−n}`           |
//! | `∂^mφ_{e_i}`    | `∂^nφ_{e_j}`    | `(−1)^{m−1}(m+n−1)! (e_i,e_j) z^{−m−n}` |
//!
//! Multiplicativity turns the pairing of two terms into a sum over partial
//! matchings: each primitive on either side contracts with one primitive of
//! the other side or with the other side's exponential.

use num_traits::Zero;

use super::{FieldElement, FracLaurent, Factor, Monomial};
use crate::lattice::{Ambient, Momentum};
use crate::rational::{factorial, Rational};

/// One way of contracting: coefficient, z-power offset (≤ 0), and the
/// positions of right-hand primitives left uncontracted.
#[derive(Clone, Debug)]
pub(crate) struct Contraction {
    pub coeff: Rational,
    pub offset: i64,
    pub kept: u64,
}

pub(crate) struct WickContext<'a> {
    amb: &'a Ambient,
    /// `(α, e_j)`
    ga: Vec<Rational>,
    /// `(e_i, β)`
    gb: Vec<Rational>,
}

impl<'a> WickContext<'a> {
    pub fn new(amb: &'a Ambient, alpha: &Momentum, beta: &Momentum) -> Self {
        WickContext {
            amb,
            ga: amb.gram.vec_mul(&alpha.0),
            gb: amb.gram.mul_vec(&beta.0),
        }
    }

    fn pp(&self, x: Factor, y: Factor) -> Rational {
        let (m, n) = (x.order as u32, y.order as u32);
        let g = self.amb.gram[(x.basis as usize, y.basis as usize)];
        sign(m - 1) * factorial(m + n - 1) * g
    }

    fn pe(&self, x: Factor) -> Rational {
        let m = x.order as u32;
        sign(m - 1) * factorial(m - 1) * self.gb[x.basis as usize]
    }

    fn ep(&self, y: Factor) -> Rational {
        let n = y.order as u32;
        -factorial(n - 1) * self.ga[y.basis as usize]
    }

    /// All contractions in which every `x` is paired, and every `y` is paired
    /// unless `allow_keep`.
    pub fn contractions(&self, xs: &[Factor], ys: &[Factor], allow_keep: bool) -> Vec<Contraction> {
        let mut out = Vec::new();
        self.walk(xs, ys, allow_keep, 0, 0, Rational::from(1), 0, 0, &mut out);
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn walk(
        &self,
        xs: &[Factor],
        ys: &[Factor],
        allow_keep: bool,
        j: usize,
        used_x: u64,
        coeff: Rational,
        offset: i64,
        kept: u64,
        out: &mut Vec<Contraction>,
    ) {
        if j == ys.len() {
            let mut c = coeff;
            let mut off = offset;
            for (i, x) in xs.iter().enumerate() {
                if used_x >> i & 1 == 0 {
                    c *= self.pe(*x);
                    if c.is_zero() {
                        return;
                    }
                    off -= x.order as i64;
                }
            }
            out.push(Contraction {
                coeff: c,
                offset: off,
                kept,
            });
            return;
        }
        let y = ys[j];
        if allow_keep {
            self.walk(xs, ys, allow_keep, j + 1, used_x, coeff, offset, kept | 1 << j, out);
        }
        let v = self.ep(y);
        if !v.is_zero() {
            self.walk(
                xs,
                ys,
                allow_keep,
                j + 1,
                used_x,
                coeff * v,
                offset - y.order as i64,
                kept,
                out,
            );
        }
        for (i, x) in xs.iter().enumerate() {
            if used_x >> i & 1 == 1 {
                continue;
            }
            let v = self.pp(*x, y);
            if !v.is_zero() {
                self.walk(
                    xs,
                    ys,
                    allow_keep,
                    j + 1,
                    used_x | 1 << i,
                    coeff * v,
                    offset - (x.order + y.order) as i64,
                    kept,
                    out,
                );
            }
        }
    }
}

fn sign(k: u32) -> Rational {
    Rational::from(if k.is_multiple_of(2) { 1 } else { -1 })
}

/// `⟨a, b⟩` as a Laurent polynomial in `z`.
pub fn pair(amb: &Ambient, a: &FieldElement, b: &FieldElement) -> FracLaurent {
    let mut out = FracLaurent::zero();
    for (al, u, ca) in a.terms() {
        for (be, v, cb) in b.terms() {
            let ctx = WickContext::new(amb, al, be);
            let base = amb.pair(al, be);
            for c in ctx.contractions(&u.0, &v.0, false) {
                out.add_term(base + Rational::from(c.offset as i128), c.coeff * ca * cb);
            }
        }
    }
    out
}

/// Convenience for a single term.
pub fn pair_terms(
    amb: &Ambient,
    al: &Momentum,
    u: &Monomial,
    be: &Momentum,
    v: &Monomial,
) -> FracLaurent {
    pair(
        amb,
        &FieldElement::term(Rational::from(1), al.clone(), u.clone()),
        &FieldElement::term(Rational::from(1), be.clone(), v.clone()),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, RatMatrix};

    fn amb() -> Ambient {
        Ambient::new(RatMatrix::from_int_rows(&[vec![2, -1], vec![-1, 1]]))
    }

    #[test]
    fn base_cases() {
        let a = amb();
        let al = Momentum::from_ints(&[1, 2]);
        let be = Momentum::from_ints(&[0, 1]);
        let ab = a.pair(&al, &be);
        let ea = FieldElement::exp(al.clone());
        let eb = FieldElement::exp(be.clone());
        let da = FieldElement::dphi(1, &al);
        let db = FieldElement::dphi(1, &be);
        assert_eq!(pair(&a, &ea, &eb), FracLaurent::monomial(int(1), ab));
        assert_eq!(pair(&a, &da, &db), FracLaurent::monomial(ab, int(-2)));
        assert_eq!(pair(&a, &da, &eb), FracLaurent::monomial(ab, int(-1)));
        assert_eq!(pair(&a, &ea, &db), FracLaurent::monomial(-ab, int(-1)));
        let d2a = FieldElement::dphi(2, &al);
        assert_eq!(pair(&a, &d2a, &eb), FracLaurent::monomial(-ab, int(-2)));
    }

    #[test]
    fn equivariance_on_samples() {
        let a = amb();
        let x = FieldElement::dphi(1, &Momentum::from_ints(&[1, -1]))
            .mul(&FieldElement::exp(Momentum::from_ints(&[1, 1])));
        let y = FieldElement::dphi(2, &Momentum::from_ints(&[0, 1]))
            .mul(&FieldElement::dphi(1, &Momentum::from_ints(&[1, 0])))
            .mul(&FieldElement::exp(Momentum::from_ints(&[-1, 2])));
        let base = pair(&a, &x, &y);
        assert_eq!(pair(&a, &x.derive(), &y), base.derivative());
        assert_eq!(pair(&a, &x, &y.derive()), base.derivative().scale(int(-1)));
    }
}
