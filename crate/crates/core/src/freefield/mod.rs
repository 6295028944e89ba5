//! The lattice vertex algebra as a commutative Hopf algebra: differential
//! monomials in `∂^m φ_{e_i}` times exponentials `e^{φ_λ}`.
//!
//! `e_i = α_i/√p` is the ambient basis. The degree of `∂^m φ` is `m`.

pub mod laurent;
pub mod pairing;

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::Momentum;
use crate::rational::Rational;

pub use laurent::FracLaurent;
pub use pairing::pair;

/// `∂^order φ_{e_basis}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Factor {
    pub basis: u16,
    pub order: u16,
}

impl Factor {
    pub fn new(basis: usize, order: u32) -> Self {
        assert!(order >= 1, "derivative order must be positive");
        Factor {
            basis: basis as u16,
            order: order as u16,
        }
    }
}

/// Sorted multiset of factors.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub Vec<Factor>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn from_factors(mut f: Vec<Factor>) -> Self {
        f.sort();
        Monomial(f)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|f| f.order as u32).sum()
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        let mut v = Vec::with_capacity(self.0.len() + o.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < o.0.len() {
            if self.0[i] <= o.0[j] {
                v.push(self.0[i]);
                i += 1;
            } else {
                v.push(o.0[j]);
                j += 1;
            }
        }
        v.extend_from_slice(&self.0[i..]);
        v.extend_from_slice(&o.0[j..]);
        Monomial(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sub-multiset selected by a bit mask over positions.
    pub fn select(&self, mask: u64, keep: bool) -> Monomial {
        Monomial(
            self.0
                .iter()
                .enumerate()
                .filter(|(i, _)| ((mask >> i) & 1 == 1) == keep)
                .map(|(_, f)| *f)
                .collect(),
        )
    }
}

pub type Key = (Momentum, Monomial);

/// Finite linear combination of `u · e^{φ_λ}` with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldElement {
    rank: usize,
    terms: BTreeMap<Key, Rational>,
}

impl FieldElement {
    pub fn zero(rank: usize) -> Self {
        FieldElement {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn term(coeff: Rational, momentum: Momentum, monomial: Monomial) -> Self {
        let mut f = Self::zero(momentum.rank());
        f.add_term(momentum, monomial, coeff);
        f
    }

    /// `e^{φ_λ}`.
    pub fn exp(momentum: Momentum) -> Self {
        Self::term(Rational::one(), momentum, Monomial::one())
    }

    /// The vacuum `e⁰`.
    pub fn vacuum(rank: usize) -> Self {
        Self::exp(Momentum::zero(rank))
    }

    pub fn scalar(rank: usize, c: Rational) -> Self {
        Self::vacuum(rank).scale(c)
    }

    /// `∂^m φ_β = Σ β_i ∂^m φ_{e_i}`.
    pub fn dphi(order: u32, beta: &Momentum) -> Self {
        let n = beta.rank();
        let mut f = Self::zero(n);
        for (i, c) in beta.0.iter().enumerate() {
            f.add_term(
                Momentum::zero(n),
                Monomial(vec![Factor::new(i, order)]),
                *c,
            );
        }
        f
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn add_term(&mut self, momentum: Momentum, monomial: Monomial, coeff: Rational) {
        assert_eq!(momentum.rank(), self.rank, "rank mismatch");
        if coeff.is_zero() {
            return;
        }
        let key = (momentum, monomial);
        match self.terms.get_mut(&key) {
            Some(c) => {
                *c += coeff;
                if c.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, coeff);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Momentum, &Monomial, &Rational)> {
        self.terms.iter().map(|((m, u), c)| (m, u, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, momentum: &Momentum, monomial: &Monomial) -> Rational {
        self.terms
            .get(&(momentum.clone(), monomial.clone()))
            .copied()
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &FieldElement) -> FieldElement {
        let mut out = self.clone();
        out.add_assign(o);
        out
    }

    pub fn add_assign(&mut self, o: &FieldElement) {
        assert_eq!(self.rank, o.rank, "rank mismatch");
        for ((m, u), c) in &o.terms {
            self.add_term(m.clone(), u.clone(), *c);
        }
    }

    pub fn add_scaled(&mut self, o: &FieldElement, s: Rational) {
        assert_eq!(self.rank, o.rank, "rank mismatch");
        for ((m, u), c) in &o.terms {
            self.add_term(m.clone(), u.clone(), c * s);
        }
    }

    pub fn sub(&self, o: &FieldElement) -> FieldElement {
        let mut out = self.clone();
        out.add_scaled(o, -Rational::one());
        out
    }

    pub fn scale(&self, s: Rational) -> FieldElement {
        let mut out = Self::zero(self.rank);
        if s.is_zero() {
            return out;
        }
        for (k, c) in &self.terms {
            out.terms.insert(k.clone(), c * s);
        }
        out
    }

    pub fn neg(&self) -> FieldElement {
        self.scale(-Rational::one())
    }

    /// Product; `e^{φ_α} e^{φ_β} = e^{φ_{α+β}}`.
    pub fn try_mul(&self, o: &FieldElement) -> Result<FieldElement> {
        if self.rank != o.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                found: o.rank,
            });
        }
        let mut out = Self::zero(self.rank);
        for ((m1, u1), c1) in &self.terms {
            for ((m2, u2), c2) in &o.terms {
                out.add_term(m1.add(m2), u1.mul(u2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn mul(&self, o: &FieldElement) -> FieldElement {
        self.try_mul(o).expect("rank mismatch in product")
    }

    /// The derivation `∂`: `∂.e^{φ_α} = ∂φ_α e^{φ_α}`, `∂.∂^kφ = ∂^{k+1}φ`.
    pub fn derive(&self) -> FieldElement {
        let mut out = Self::zero(self.rank);
        for ((m, u), c) in &self.terms {
            derive_term_into(&mut out, m, u, *c);
        }
        out
    }

    pub fn derive_n(&self, k: u32) -> FieldElement {
        let mut x = self.clone();
        for _ in 0..k {
            x = x.derive();
        }
        x
    }

    /// Maximal degree of the differential part.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|(_, u)| u.degree()).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> u32 {
        self.terms.keys().map(|(_, u)| u.degree()).min().unwrap_or(0)
    }

    /// Distinct momenta, sorted.
    pub fn momenta(&self) -> Vec<Momentum> {
        let mut v: Vec<Momentum> = self.terms.keys().map(|(m, _)| m.clone()).collect();
        v.dedup();
        v
    }

    /// The unique momentum if the element is homogeneous.
    pub fn single_momentum(&self) -> Result<Momentum> {
        let m = self.momenta();
        match m.len() {
            0 => Ok(Momentum::zero(self.rank)),
            1 => Ok(m[0].clone()),
            _ => Err(Error::MixedMomentum),
        }
    }

    /// `Δ`: `∂^mφ` primitive, `e^{φ_β}` grouplike.
    pub fn coproduct(&self) -> Tensor2 {
        let mut out = Tensor2::default();
        for ((m, u), c) in &self.terms {
            let r = u.len();
            assert!(r < 64);
            for mask in 0..(1u64 << r) {
                let left = u.select(mask, true);
                let right = u.select(mask, false);
                out.add((m.clone(), left), (m.clone(), right), *c);
            }
        }
        out
    }
}

pub(crate) fn derive_term_into(out: &mut FieldElement, m: &Momentum, u: &Monomial, c: Rational) {
    for i in 0..u.0.len() {
        if i > 0 && u.0[i] == u.0[i - 1] {
            continue;
        }
        let mult = u.0.iter().filter(|f| **f == u.0[i]).count() as i128;
        let mut f = u.0.clone();
        f[i].order += 1;
        out.add_term(m.clone(), Monomial::from_factors(f), c * Rational::from(mult));
    }
    for (j, a) in m.0.iter().enumerate() {
        if !a.is_zero() {
            let extra = Monomial(vec![Factor::new(j, 1)]);
            out.add_term(m.clone(), u.mul(&extra), c * a);
        }
    }
}

/// Element of `V ⊗ V`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tensor2 {
    pub terms: BTreeMap<(Key, Key), Rational>,
}

impl Tensor2 {
    pub fn add(&mut self, a: Key, b: Key, c: Rational) {
        if c.is_zero() {
            return;
        }
        let k = (a, b);
        let e = self.terms.entry(k.clone()).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn from_pair(a: &FieldElement, b: &FieldElement) -> Tensor2 {
        let mut t = Tensor2::default();
        for ((m1, u1), c1) in &a.terms {
            for ((m2, u2), c2) in &b.terms {
                t.add((m1.clone(), u1.clone()), (m2.clone(), u2.clone()), c1 * c2);
            }
        }
        t
    }

    /// Componentwise product in `V ⊗ V`.
    pub fn mul(&self, o: &Tensor2) -> Tensor2 {
        let mut t = Tensor2::default();
        for (((ma, ua), (mb, ub)), c1) in &self.terms {
            for (((mc, uc), (md, ud)), c2) in &o.terms {
                t.add(
                    (ma.add(mc), ua.mul(uc)),
                    (mb.add(md), ub.mul(ud)),
                    c1 * c2,
                );
            }
        }
        t
    }

    /// `(Δ ⊗ id)` as triples.
    pub fn coassoc_left(&self) -> BTreeMap<(Key, Key, Key), Rational> {
        let mut out = BTreeMap::new();
        for ((a, b), c) in &self.terms {
            let da = FieldElement::term(*c, a.0.clone(), a.1.clone()).coproduct();
            for ((x, y), c2) in &da.terms {
                *out.entry((x.clone(), y.clone(), b.clone()))
                    .or_insert_with(Rational::zero) += c2;
            }
        }
        out.retain(|_, v: &mut Rational| !v.is_zero());
        out
    }

    /// `(id ⊗ Δ)` as triples.
    pub fn coassoc_right(&self) -> BTreeMap<(Key, Key, Key), Rational> {
        let mut out = BTreeMap::new();
        for ((a, b), c) in &self.terms {
            let db = FieldElement::term(*c, b.0.clone(), b.1.clone()).coproduct();
            for ((x, y), c2) in &db.terms {
                *out.entry((a.clone(), x.clone(), y.clone()))
                    .or_insert_with(Rational::zero) += c2;
            }
        }
        out.retain(|_, v: &mut Rational| !v.is_zero());
        out
    }
}
