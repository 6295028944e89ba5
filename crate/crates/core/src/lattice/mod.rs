//! Rescaled screening lattices, cosets and groundstates.
//!
//! Every vector is stored in the ambient basis `{α_i/√p}`, where the pairing
//! is `uᵀ G v` with `G_ij = (α_i, α_j)/p`. Square roots never appear.

pub mod enumerate;
pub mod snf;

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{bilinear, fmt_rat, int, RatMatrix, Rational};
use crate::rootdata::{RootSystem, Series};
use crate::scalar::Phase;

/// Rational coordinate vector in the ambient basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Momentum(pub Vec<Rational>);

impl Momentum {
    pub fn zero(rank: usize) -> Self {
        Momentum(vec![Rational::zero(); rank])
    }

    pub fn from_ints(v: &[i64]) -> Self {
        Momentum(v.iter().map(|&x| int(x as i128)).collect())
    }

    pub fn unit(rank: usize, i: usize) -> Self {
        let mut m = Momentum::zero(rank);
        m.0[i] = Rational::one();
        m
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|x| x.is_zero())
    }

    pub fn add(&self, o: &Momentum) -> Momentum {
        Momentum(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &Momentum) -> Momentum {
        Momentum(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, s: Rational) -> Momentum {
        Momentum(self.0.iter().map(|a| a * s).collect())
    }

    pub fn neg(&self) -> Momentum {
        self.scale(-Rational::one())
    }
}

impl fmt::Display for Momentum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(fmt_rat).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl Serialize for Momentum {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<String> = self.0.iter().map(fmt_rat).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Momentum {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v: Vec<String> = Vec::deserialize(d)?;
        v.iter()
            .map(|s| {
                crate::rational::parse_rat(s)
                    .ok_or_else(|| serde::de::Error::custom(format!("bad rational {s}")))
            })
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(Momentum)
    }
}

/// Ambient inner product space with Gram `G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ambient {
    pub gram: RatMatrix,
}

impl Ambient {
    pub fn new(gram: RatMatrix) -> Self {
        Ambient { gram }
    }

    pub fn rank(&self) -> usize {
        self.gram.rows
    }

    pub fn pair(&self, u: &Momentum, v: &Momentum) -> Rational {
        bilinear(&self.gram, &u.0, &v.0)
    }

    pub fn norm(&self, u: &Momentum) -> Rational {
        self.pair(u, u)
    }

    /// Row `i` gives the coordinates of the dual basis vector `e_i^*`.
    pub fn dual_basis(&self) -> RatMatrix {
        self.gram.inverse().expect("ambient gram is nondegenerate")
    }
}

/// Full-rank sublattice given by basis rows in ambient coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    pub basis: RatMatrix,
    inverse: RatMatrix,
}

impl Lattice {
    pub fn new(basis: Vec<Momentum>) -> Self {
        let rows: Vec<Vec<Rational>> = basis.into_iter().map(|m| m.0).collect();
        let basis = RatMatrix::from_rows(&rows);
        let inverse = basis.inverse().expect("lattice basis must be full rank");
        Lattice { basis, inverse }
    }

    pub fn rank(&self) -> usize {
        self.basis.rows
    }

    pub fn vectors(&self) -> Vec<Momentum> {
        self.basis.to_rows().into_iter().map(Momentum).collect()
    }

    /// Coordinates `c` with `v = c · B`.
    pub fn coords_of(&self, v: &Momentum) -> Vec<Rational> {
        self.inverse.vec_mul(&v.0)
    }

    pub fn from_coords(&self, c: &[Rational]) -> Momentum {
        Momentum(self.basis.vec_mul(c))
    }

    pub fn contains(&self, v: &Momentum) -> bool {
        self.coords_of(v).iter().all(|x| x.is_integer())
    }

    /// Canonical representative of `v + L` in the fundamental parallelepiped.
    pub fn reduce(&self, v: &Momentum) -> Momentum {
        let c: Vec<Rational> = self.coords_of(v).iter().map(|x| x - x.floor()).collect();
        self.from_coords(&c)
    }

    pub fn contains_lattice(&self, other: &Lattice) -> bool {
        other.vectors().iter().all(|v| self.contains(v))
    }

    pub fn gram(&self, amb: &Ambient) -> RatMatrix {
        self.basis.mul(&amb.gram).mul(&self.basis.transpose())
    }

    /// Lattice points of `rep + L` within `radius_sq` of `center`.
    pub fn points_near(
        &self,
        amb: &Ambient,
        rep: &Momentum,
        center: &Momentum,
        radius_sq: Rational,
    ) -> Vec<Momentum> {
        let c = self.coords_of(&center.sub(rep));
        enumerate::integer_points_in_ball(&self.basis, &amb.gram, &c, radius_sq)
            .into_iter()
            .map(|n| {
                let nr: Vec<Rational> = n.into_iter().map(Rational::from).collect();
                rep.add(&self.from_coords(&nr))
            })
            .collect()
    }
}

/// A coset `rep + L`; equality is decided by lattice membership of the
/// difference, and the stored representative is canonical.
#[derive(Clone, Debug)]
pub struct Coset {
    pub rep: Momentum,
    pub lattice: Lattice,
}

impl Coset {
    pub fn new(rep: Momentum, lattice: &Lattice) -> Self {
        Coset {
            rep: lattice.reduce(&rep),
            lattice: lattice.clone(),
        }
    }

    pub fn contains(&self, v: &Momentum) -> bool {
        self.lattice.contains(&v.sub(&self.rep))
    }

    pub fn shifted(&self, by: &Momentum) -> Coset {
        Coset::new(self.rep.add(by), &self.lattice)
    }
}

impl PartialEq for Coset {
    fn eq(&self, other: &Self) -> bool {
        self.lattice == other.lattice && self.contains(&other.rep)
    }
}

impl Eq for Coset {}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientGroup {
    pub invariant_factors: Vec<i128>,
    pub coset_reps: Vec<Momentum>,
}

impl QuotientGroup {
    pub fn order(&self) -> i128 {
        self.invariant_factors.iter().product()
    }

    pub fn is_cyclic(&self) -> bool {
        self.invariant_factors.len() <= 1
    }
}

/// `fine / coarse` via Smith normal form.
pub fn quotient_group(fine: &Lattice, coarse: &Lattice) -> Result<QuotientGroup> {
    let r = fine.rank();
    let m = coarse.basis.mul(&fine.inverse);
    if !m.is_integral() {
        return Err(Error::NotContained);
    }
    let mi: Vec<Vec<i128>> = m
        .to_rows()
        .iter()
        .map(|row| row.iter().map(|x| x.to_integer()).collect())
        .collect();
    let (d, _u, v) = snf::smith_normal_form(&mi);
    // Cosets are x' ∈ Π[0, d_i) in coordinates x' = x V.
    let vmat = RatMatrix::from_rows(
        &v.iter()
            .map(|row| row.iter().map(|&x| Rational::from(x)).collect())
            .collect::<Vec<_>>(),
    );
    let vinv = vmat.inverse().expect("unimodular");
    let mut reps = Vec::new();
    let mut cur = vec![0i128; r];
    loop {
        let xp: Vec<Rational> = cur.iter().map(|&x| Rational::from(x)).collect();
        let x = vinv.vec_mul(&xp);
        reps.push(fine.from_coords(&x));
        let mut k = 0;
        loop {
            if k == r {
                let factors = d.iter().copied().filter(|&x| x != 1).collect();
                return Ok(QuotientGroup {
                    invariant_factors: factors,
                    coset_reps: reps,
                });
            }
            cur[k] += 1;
            if cur[k] < d[k] {
                break;
            }
            cur[k] = 0;
            k += 1;
        }
    }
}

/// The rescaled lattices `Λ⊕ ⊂ Λ⊖ ⊂ (Λ⊕)*` for a root system at level ℓ.
#[derive(Clone, Debug)]
pub struct ScreeningLattices {
    pub rs: RootSystem,
    pub ell: i64,
    pub p: i64,
    pub ambient: Ambient,
    /// `α_i⊖ = −α_i/√p`.
    pub basis_short: Vec<Momentum>,
    /// `α_i⊕ = α_i^∨ √p`.
    pub basis_long: Vec<Momentum>,
    /// `λ_i/√p`.
    pub basis_dual: Vec<Momentum>,
    pub q: Momentum,
    pub central_charge: Rational,
    pub short: Lattice,
    pub long: Lattice,
    pub dual: Lattice,
}

pub fn build_screening_lattices(rs: &RootSystem, ell: i64) -> Result<ScreeningLattices> {
    if ell <= 0 || ell % 2 != 0 {
        return Err(Error::InvalidLevel {
            ell,
            reason: "ell must be a positive even integer".into(),
        });
    }
    for i in 0..rs.rank {
        if ell % rs.gram[i][i] != 0 {
            return Err(Error::InvalidLevel {
                ell,
                reason: format!(
                    "(α_{0}, α_{0}) = {1} does not divide ell",
                    i + 1,
                    rs.gram[i][i]
                ),
            });
        }
    }
    let p = ell / 2;
    let n = rs.rank;
    let ambient = Ambient::new(rs.gram_matrix().scale(Rational::new(1, p as i128)));
    let basis_short: Vec<Momentum> = (0..n).map(|i| Momentum::unit(n, i).neg()).collect();
    let basis_long: Vec<Momentum> = (0..n)
        .map(|i| Momentum::unit(n, i).scale(int((ell / rs.gram[i][i]) as i128)))
        .collect();
    let basis_dual: Vec<Momentum> = (0..n).map(|i| Momentum(rs.fund_weights.row(i))).collect();
    let q = q_vector(rs, p);
    let central_charge = int(n as i128) - int(12) * ambient.norm(&q);
    Ok(ScreeningLattices {
        rs: rs.clone(),
        ell,
        p,
        short: Lattice::new(basis_short.clone()),
        long: Lattice::new(basis_long.clone()),
        dual: Lattice::new(basis_dual.clone()),
        ambient,
        basis_short,
        basis_long,
        basis_dual,
        q,
        central_charge,
    })
}

/// `Q = (p ρ^∨ − ρ)/√p`; its ambient coordinates are the α-coordinates of
/// `p ρ^∨ − ρ`.
pub fn q_vector(rs: &RootSystem, p: i64) -> Momentum {
    Momentum(
        rs.rho_dual
            .iter()
            .zip(&rs.rho)
            .map(|(rd, r)| int(p as i128) * rd - r)
            .collect(),
    )
}

pub fn central_charge(sl: &ScreeningLattices) -> Rational {
    sl.central_charge
}

/// `h(λ) = ½(λ, λ) − (λ, Q)`.
pub fn conformal_dim(sl: &ScreeningLattices, lambda: &Momentum) -> Rational {
    sl.ambient.norm(lambda) / int(2) - sl.ambient.pair(lambda, &sl.q)
}

/// `|Λ_W/Λ_R| · Π ℓ/(α_i, α_i)`.
pub fn num_simples(rs: &RootSystem, ell: i64) -> i64 {
    rs.fundamental_group_order * (0..rs.rank).map(|i| ell / rs.gram[i][i]).product::<i64>()
}

/// Conventional names for the four modules of the B_n (and A_1) theory at
/// ℓ = 4.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum NamedModule {
    Blue,
    Green,
    Center,
    Steinberg,
}

impl NamedModule {
    pub const ALL: [NamedModule; 4] = [
        NamedModule::Blue,
        NamedModule::Center,
        NamedModule::Green,
        NamedModule::Steinberg,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            NamedModule::Blue => "blue",
            NamedModule::Green => "green",
            NamedModule::Center => "center",
            NamedModule::Steinberg => "steinberg",
        }
    }
}

impl std::str::FromStr for NamedModule {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "blue" => Ok(NamedModule::Blue),
            "green" => Ok(NamedModule::Green),
            "center" => Ok(NamedModule::Center),
            "steinberg" => Ok(NamedModule::Steinberg),
            _ => Err(Error::Unsupported(format!("unknown module {s}"))),
        }
    }
}

impl ScreeningLattices {
    pub fn rank(&self) -> usize {
        self.rs.rank
    }

    pub fn coset(&self, rep: &Momentum) -> Coset {
        Coset::new(rep.clone(), &self.long)
    }

    /// All cosets of `(Λ⊕)*/Λ⊕`.
    pub fn all_cosets(&self) -> Vec<Coset> {
        quotient_group(&self.dual, &self.long)
            .expect("long lattice lies in its dual")
            .coset_reps
            .iter()
            .map(|r| self.coset(r))
            .collect()
    }

    /// Representative of a named module; only for B_n (n ≥ 1) at ℓ = 4.
    pub fn named_module(&self, m: NamedModule) -> Result<Coset> {
        let b_type = matches!(self.rs.series, Series::B)
            || (self.rs.series == Series::A && self.rs.rank == 1);
        if !b_type || self.ell != 4 {
            return Err(Error::Unsupported(
                "named modules exist for B_n and A_1 at ell = 4".into(),
            ));
        }
        let n = self.rank();
        let e_last = Momentum::unit(n, n - 1);
        let rep = match m {
            NamedModule::Blue => Momentum::zero(n),
            NamedModule::Green => e_last,
            NamedModule::Center => self.q.clone(),
            NamedModule::Steinberg => self.q.add(&e_last),
        };
        Ok(self.coset(&rep))
    }
}

/// Coset elements of minimal conformal dimension (closest to `Q`) and that
/// dimension.
pub fn groundstates(sl: &ScreeningLattices, coset: &Coset) -> (Vec<Momentum>, Rational) {
    let r2 = sl.ambient.norm(&coset.rep.sub(&sl.q));
    let pts = coset.lattice.points_near(&sl.ambient, &coset.rep, &sl.q, r2);
    let best = pts
        .iter()
        .map(|v| sl.ambient.norm(&v.sub(&sl.q)))
        .min()
        .expect("the representative itself is within the radius");
    let mut out: Vec<Momentum> = pts
        .into_iter()
        .filter(|v| sl.ambient.norm(&v.sub(&sl.q)) == best)
        .collect();
    out.sort();
    let h = (best - sl.ambient.norm(&sl.q)) / int(2);
    (out, h)
}

/// Coset points with conformal dimension at most `h_max`.
pub fn points_up_to(sl: &ScreeningLattices, coset: &Coset, h_max: Rational) -> Vec<Momentum> {
    // h(ν) = ½|ν − Q|² − ½|Q|²
    let r2 = int(2) * h_max + sl.ambient.norm(&sl.q);
    if r2.is_negative() {
        return vec![];
    }
    let mut pts = coset.lattice.points_near(&sl.ambient, &coset.rep, &sl.q, r2);
    pts.sort_by(|a, b| {
        conformal_dim(sl, a)
            .cmp(&conformal_dim(sl, b))
            .then_with(|| a.cmp(b))
    });
    pts
}

/// `F([λ]) = e^{πi((λ−Q,λ−Q) − (Q,Q))} = e^{2πi h(λ)}`.
pub fn quadratic_form_f(sl: &ScreeningLattices, coset: &Coset) -> Phase {
    Phase::new(int(2) * conformal_dim(sl, &coset.rep))
}
