//! Tiered scalars: exact rationals, exact rational multiples of roots of
//! unity, and complex floats for the fractional residue.

use std::fmt;

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::rational::{fmt_rat, int, to_f64, Rational};

/// `e^{iπ r}` with `r` reduced into `[0, 2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Phase {
    turns: Rational,
}

impl Phase {
    pub fn new(r: Rational) -> Self {
        let two = int(2);
        let k = (r / two).floor();
        Phase { turns: r - k * two }
    }

    pub fn one() -> Self {
        Phase::new(Rational::zero())
    }

    /// Exponent `r` in `[0, 2)` such that the phase is `e^{iπ r}`.
    pub fn exponent(&self) -> Rational {
        self.turns
    }

    pub fn mul(&self, other: &Phase) -> Phase {
        Phase::new(self.turns + other.turns)
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::from_polar(1.0, std::f64::consts::PI * to_f64(&self.turns))
    }

    /// Real value when the phase is ±1.
    pub fn as_sign(&self) -> Option<i32> {
        if self.turns.is_zero() {
            Some(1)
        } else if self.turns == Rational::one() {
            Some(-1)
        } else {
            None
        }
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e^{{i pi {}}}", fmt_rat(&self.turns))
    }
}

/// A scalar in the lowest tier that represents it.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Scalar {
    Exact(Rational),
    Root { coeff: Rational, phase: Phase },
    Approx(Complex64),
}

impl Scalar {
    pub fn root(coeff: Rational, phase: Phase) -> Scalar {
        match phase.as_sign() {
            Some(s) => Scalar::Exact(coeff * int(s as i128)),
            None if coeff.is_zero() => Scalar::Exact(coeff),
            None => Scalar::Root { coeff, phase },
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        match self {
            Scalar::Exact(r) => Complex64::new(to_f64(r), 0.0),
            Scalar::Root { coeff, phase } => phase.to_complex() * to_f64(coeff),
            Scalar::Approx(c) => *c,
        }
    }

    pub fn is_exact(&self) -> bool {
        !matches!(self, Scalar::Approx(_))
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        use Scalar::*;
        match (self, other) {
            (Exact(a), Exact(b)) => Exact(a * b),
            (Exact(a), Root { coeff, phase }) | (Root { coeff, phase }, Exact(a)) => {
                Scalar::root(a * coeff, *phase)
            }
            (Root { coeff: a, phase: p }, Root { coeff: b, phase: q }) => {
                Scalar::root(a * b, p.mul(q))
            }
            _ => Approx(self.to_complex() * other.to_complex()),
        }
    }

    /// Sum; promotes to complex floats when the phases differ.
    pub fn add(&self, other: &Scalar) -> Scalar {
        use Scalar::*;
        match (self, other) {
            (Exact(a), Exact(b)) => Exact(a + b),
            (Root { coeff: a, phase: p }, Root { coeff: b, phase: q }) if p == q => {
                Scalar::root(a + b, *p)
            }
            (Exact(a), x) | (x, Exact(a)) if a.is_zero() => *x,
            _ => Approx(self.to_complex() + other.to_complex()),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(r) => write!(f, "{}", fmt_rat(r)),
            Scalar::Root { coeff, phase } => write!(f, "{}*{}", fmt_rat(coeff), phase),
            Scalar::Approx(c) => write!(f, "({:.12}{:+.12}i)", c.re, c.im),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn phase_reduction() {
        assert_eq!(Phase::new(rat(-1, 4)), Phase::new(rat(7, 4)));
        assert_eq!(Phase::new(int(3)).as_sign(), Some(-1));
        assert_eq!(Phase::new(rat(1, 2)).to_string(), "e^{i pi 1/2}");
    }

    #[test]
    fn tiers() {
        let i = Scalar::root(int(1), Phase::new(rat(1, 2)));
        assert_eq!(i.mul(&i), Scalar::Exact(int(-1)));
        let s = i.add(&Scalar::Exact(int(1)));
        assert!(!s.is_exact());
        assert!((s.to_complex() - Complex64::new(1.0, 1.0)).norm() < 1e-12);
    }
}
