//! Finite Laurent polynomials in `z` with rational exponents.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::rational::{fmt_rat, Rational};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FracLaurent {
    pub terms: BTreeMap<Rational, Rational>,
}

impl FracLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(coeff: Rational, exp: Rational) -> Self {
        let mut f = Self::zero();
        f.add_term(exp, coeff);
        f
    }

    pub fn add_term(&mut self, exp: Rational, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let e = self.terms.entry(exp).or_insert_with(Rational::zero);
        *e += coeff;
        if e.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn add(&self, o: &FracLaurent) -> FracLaurent {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, *c);
        }
        out
    }

    pub fn mul(&self, o: &FracLaurent) -> FracLaurent {
        let mut out = FracLaurent::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, s: Rational) -> FracLaurent {
        let mut out = FracLaurent::zero();
        for (e, c) in &self.terms {
            out.add_term(*e, c * s);
        }
        out
    }

    /// `d/dz`.
    pub fn derivative(&self) -> FracLaurent {
        let mut out = FracLaurent::zero();
        for (e, c) in &self.terms {
            out.add_term(e - Rational::from(1), c * e);
        }
        out
    }

    pub fn coeff(&self, exp: &Rational) -> Rational {
        self.terms.get(exp).copied().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for FracLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| format!("{}*z^({})", fmt_rat(c), fmt_rat(e)))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
