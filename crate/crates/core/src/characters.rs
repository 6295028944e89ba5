//! Truncated q-series: eta, coset theta functions, module graded
//! dimensions and the symplectic-fermion characters.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::lattice::{build_screening_lattices, Coset, Momentum, NamedModule, ScreeningLattices};
use crate::rational::{fmt_rat, int, parse_rat, Rational};
use crate::rootdata::{build_root_system, Series};
use crate::screening::{module_kernel, short_screening_set};

/// `t^offset Σ_k coeffs[k] t^{k·step}`, exact up to `t^{offset + order}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSeries {
    pub offset: Rational,
    pub step: Rational,
    pub coeffs: Vec<Rational>,
}

impl QSeries {
    pub fn new(offset: Rational, step: Rational, coeffs: Vec<Rational>) -> Self {
        QSeries { offset, step, coeffs }
    }

    /// Zero series with room up to relative order `order`.
    pub fn zero(offset: Rational, step: Rational, order: Rational) -> Self {
        let n = (order / step).floor().to_integer().max(-1) + 1;
        QSeries::new(offset, step, vec![Rational::zero(); n as usize])
    }

    pub fn one(order: i64) -> Self {
        let mut s = QSeries::zero(Rational::zero(), int(1), int(order as i128));
        s.coeffs[0] = Rational::one();
        s
    }

    /// Highest relative exponent that is exact.
    pub fn order(&self) -> Rational {
        self.step * int(self.coeffs.len() as i128 - 1)
    }

    pub fn exponent(&self, k: usize) -> Rational {
        self.offset + self.step * int(k as i128)
    }

    /// Coefficient of `t^e` for an absolute exponent `e`.
    pub fn coeff_at(&self, e: Rational) -> Rational {
        let k = (e - self.offset) / self.step;
        if !k.is_integer() || k.is_negative() {
            return Rational::zero();
        }
        self.coeffs
            .get(k.to_integer() as usize)
            .copied()
            .unwrap_or_else(Rational::zero)
    }

    /// Re-expresses the series on a finer grid `step / m`.
    pub fn refine(&self, step: Rational) -> Result<QSeries> {
        let m = self.step / step;
        if !m.is_integer() || !m.is_positive() {
            return Err(Error::Unsupported(format!(
                "step {} does not divide {}",
                fmt_rat(&step),
                fmt_rat(&self.step)
            )));
        }
        let m = m.to_integer() as usize;
        let mut c = vec![Rational::zero(); (self.coeffs.len() - 1) * m + 1];
        for (k, v) in self.coeffs.iter().enumerate() {
            c[k * m] = *v;
        }
        Ok(QSeries::new(self.offset, step, c))
    }

    fn common_step(a: Rational, b: Rational) -> Rational {
        // gcd of two positive rationals
        let n = a.numer() * b.denom();
        let m = b.numer() * a.denom();
        Rational::new(n.gcd(&m), a.denom() * b.denom())
    }

    pub fn truncate(&self, order: Rational) -> QSeries {
        let n = ((order / self.step).floor().to_integer() + 1).max(0) as usize;
        let mut s = self.clone();
        s.coeffs.truncate(n);
        s
    }

    pub fn scale(&self, s: Rational) -> QSeries {
        QSeries::new(self.offset, self.step, self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn add(&self, o: &QSeries) -> Result<QSeries> {
        let step = Self::common_step(self.step, o.step);
        let off = self.offset.min(o.offset);
        let gap_a = (self.offset - off) / step;
        let gap_b = (o.offset - off) / step;
        if !gap_a.is_integer() || !gap_b.is_integer() {
            return Err(Error::Unsupported("series offsets are not aligned".into()));
        }
        let top = (self.offset + self.order()).min(o.offset + o.order());
        let mut out = QSeries::zero(off, step, top - off);
        for s in [self, o] {
            for (k, c) in s.coeffs.iter().enumerate() {
                let idx = (s.exponent(k) - off) / step;
                let idx = idx.to_integer() as usize;
                if idx < out.coeffs.len() {
                    out.coeffs[idx] += c;
                }
            }
        }
        Ok(out)
    }

    pub fn sub(&self, o: &QSeries) -> Result<QSeries> {
        self.add(&o.scale(-Rational::one()))
    }

    pub fn mul(&self, o: &QSeries) -> QSeries {
        let step = Self::common_step(self.step, o.step);
        let a = self.refine(step).expect("common step divides");
        let b = o.refine(step).expect("common step divides");
        let n = a.coeffs.len().min(b.coeffs.len());
        let mut c = vec![Rational::zero(); n];
        for (i, x) in a.coeffs.iter().enumerate().take(n) {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate().take(n - i) {
                c[i + j] += x * y;
            }
        }
        QSeries::new(a.offset + b.offset, step, c)
    }

    pub fn pow(&self, n: u32) -> QSeries {
        let mut out = QSeries::new(Rational::zero(), self.step, vec![Rational::one(); 1]);
        out.coeffs.resize(self.coeffs.len(), Rational::zero());
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Drops leading zero coefficients into the offset.
    pub fn normalized(&self) -> QSeries {
        let k = self.coeffs.iter().position(|c| !c.is_zero());
        match k {
            Some(k) if k > 0 => QSeries::new(self.exponent(k), self.step, self.coeffs[k..].to_vec()),
            _ => self.clone(),
        }
    }

    /// Integer coefficients, if all are integral.
    pub fn int_coeffs(&self) -> Option<Vec<i128>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    /// `{offset: "p/q", step: "1/s", coeffs: [...]}`; integral coefficients
    /// are JSON integers, others strings.
    pub fn to_json(&self) -> Value {
        let coeffs: Vec<Value> = self
            .coeffs
            .iter()
            .map(|c| {
                if c.is_integer() {
                    json!(c.to_integer() as i64)
                } else {
                    json!(fmt_rat(c))
                }
            })
            .collect();
        json!({"offset": fmt_rat(&self.offset), "step": fmt_rat(&self.step), "coeffs": coeffs})
    }

    pub fn from_json(v: &Value) -> Result<QSeries> {
        let bad = |m: &str| Error::Parse { pos: 0, msg: m.to_string() };
        let r = |k: &str| {
            v.get(k)
                .and_then(|x| x.as_str())
                .and_then(parse_rat)
                .ok_or_else(|| bad(&format!("missing or invalid {k}")))
        };
        let offset = r("offset")?;
        let step = r("step")?;
        let coeffs = v
            .get("coeffs")
            .and_then(|c| c.as_array())
            .ok_or_else(|| bad("missing coeffs"))?
            .iter()
            .map(|c| {
                c.as_i64()
                    .map(|i| int(i as i128))
                    .or_else(|| c.as_str().and_then(parse_rat))
                    .ok_or_else(|| bad("invalid coefficient"))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(QSeries::new(offset, step, coeffs))
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t^({})(", fmt_rat(&self.offset))?;
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() && !(first && k + 1 == self.coeffs.len()) {
                continue;
            }
            let e = self.step * int(k as i128);
            let sign = if c.is_negative() { " - " } else if first { "" } else { " + " };
            let a = if first && c.is_negative() { format!("-{}", fmt_rat(&c.abs())) } else { fmt_rat(&c.abs()) };
            let sign = if first { "" } else { sign };
            if e.is_zero() {
                write!(f, "{sign}{a}")?;
            } else {
                write!(f, "{sign}{a} t^{}", fmt_rat(&e))?;
            }
            first = false;
        }
        write!(f, " + ...)")
    }
}

/// `η(t)^{−rank}`: offset `−rank/24`, coefficients the `rank`-coloured
/// partition numbers.
pub fn eta_inverse_power(rank: usize, order: usize) -> QSeries {
    let mut c = vec![Rational::zero(); order + 1];
    c[0] = Rational::one();
    for _ in 0..rank {
        for m in 1..=order {
            for k in m..=order {
                let prev = c[k - m];
                c[k] += prev;
            }
        }
    }
    QSeries::new(Rational::new(-(rank as i128), 24), int(1), c)
}

/// `Θ = Σ_{ν ∈ rep − shift + Λ⊕} t^{½(ν,ν)}` to relative order `order`.
pub fn theta_coset(sl: &ScreeningLattices, coset: &Coset, shift: &Momentum, order: usize) -> QSeries {
    let amb = &sl.ambient;
    let rep = coset.rep.sub(shift);
    let zero = Momentum::zero(sl.rank());
    let lat = &coset.lattice;
    let near = lat.points_near(amb, &rep, &zero, amb.norm(&rep));
    let min = near.iter().map(|v| amb.norm(v)).min().expect("rep is in range") / int(2);
    let top = min + int(order as i128);
    let pts = lat.points_near(amb, &rep, &zero, int(2) * top);
    let exps: Vec<Rational> = pts.iter().map(|v| amb.norm(v) / int(2)).collect();
    let den = exps.iter().fold(1i128, |l, e| l.lcm((e - min).denom()));
    let step = Rational::new(1, den);
    let mut s = QSeries::zero(min, step, int(order as i128));
    for e in exps {
        let k = ((e - min) / step).to_integer() as usize;
        s.coeffs[k] += Rational::one();
    }
    s
}

/// `dim V_{[μ]}(t) = Θ_{μ−Q+Λ⊕}(t) / η(t)^rank`, offset `−c/24 + h_min`.
pub fn graded_dim_module(sl: &ScreeningLattices, coset: &Coset, order: usize) -> QSeries {
    let th = theta_coset(sl, coset, &sl.q, order);
    th.mul(&eta_inverse_power(sl.rank(), order))
}

/// `t^{a} Π_{m≥1} (1 + sign·t^{m − shift})` raised to `power`, exact to
/// relative order `order`.
fn fermion_product(a: Rational, shift: Rational, sign: i128, power: u32, order: usize) -> QSeries {
    let step = if shift.is_zero() { int(1) } else { Rational::new(1, 2) };
    let mut base = QSeries::zero(Rational::zero(), step, int(order as i128));
    base.coeffs[0] = Rational::one();
    let mut m = 1;
    loop {
        let e = int(m) - shift;
        if e > int(order as i128) {
            break;
        }
        let mut f = QSeries::zero(Rational::zero(), step, int(order as i128));
        f.coeffs[0] = Rational::one();
        f.coeffs[(e / step).to_integer() as usize] += int(sign);
        base = base.mul(&f);
        m += 1;
    }
    let mut out = base.pow(power);
    out.offset = a * int(power as i128);
    out
}

/// Characters of `n` pairs of symplectic fermions and of the four modules
/// of their even part.
#[derive(Clone, Debug)]
pub struct SfCharacters {
    pub n: usize,
    pub ns_plus: QSeries,
    pub ns_minus: QSeries,
    pub r_plus: QSeries,
    pub r_minus: QSeries,
    /// `χ₁ … χ₄`.
    pub chi: [QSeries; 4],
}

pub fn sf_characters(n: usize, order: usize) -> Result<SfCharacters> {
    if n == 0 {
        return Err(Error::Unsupported("need at least one pair".into()));
    }
    let p = 2 * n as u32;
    let ns_plus = fermion_product(Rational::new(1, 24), int(0), 1, p, order);
    let ns_minus = fermion_product(Rational::new(1, 24), int(0), -1, p, order);
    let r_plus = fermion_product(Rational::new(-1, 48), Rational::new(1, 2), 1, p, order);
    let r_minus = fermion_product(Rational::new(-1, 48), Rational::new(1, 2), -1, p, order);
    let half = Rational::new(1, 2);
    let chi = [
        ns_plus.add(&ns_minus)?.scale(half),
        ns_plus.sub(&ns_minus)?.scale(half),
        r_plus.add(&r_minus)?.scale(half),
        r_plus.sub(&r_minus)?.scale(half),
    ];
    Ok(SfCharacters {
        n,
        ns_plus,
        ns_minus,
        r_plus,
        r_minus,
        chi,
    })
}

/// Vacuum graded dimension of `A₁, ℓ=4` against `χ_{ns,+}` for one pair.
#[derive(Clone, Debug, Serialize)]
pub struct JtpCheck {
    pub order: usize,
    pub vacuum: Value,
    pub chi_ns_plus: Value,
    pub matches: bool,
}

pub fn jtp_check(order: usize) -> Result<JtpCheck> {
    let sl = build_screening_lattices(&build_root_system(Series::A, 1)?, 4)?;
    let v = graded_dim_module(&sl, &sl.named_module(NamedModule::Blue)?, order);
    let chi = sf_characters(1, order)?.ns_plus;
    let matches = series_equal(&v, &chi);
    Ok(JtpCheck {
        order,
        vacuum: v.to_json(),
        chi_ns_plus: chi.to_json(),
        matches,
    })
}

/// Equality of the exact parts of two series.
pub fn series_equal(a: &QSeries, b: &QSeries) -> bool {
    match a.sub(b) {
        Ok(d) => d.coeffs.iter().all(|c| c.is_zero()),
        Err(_) => false,
    }
}

/// Kernel layers of the `Bₙ, ℓ=4` modules against `χ₁ … χ₄`.
#[derive(Clone, Debug, Serialize)]
pub struct CharMatchRow {
    /// `Λ(1)`, `Π(1)`, `Λ(2)`, `Π(2)`.
    pub name: String,
    pub module: String,
    pub offset: String,
    /// Exponent of the first nonzero coefficient of the character.
    pub chi_leading: String,
    pub kernel_dims: Vec<i128>,
    pub chi_coeffs: Vec<i128>,
    pub matches: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CharMatchReport {
    pub n: usize,
    pub levels: u32,
    pub rows: Vec<CharMatchRow>,
    /// `2^{n−1}(χ₁ + χ₂) = dim V_{[0]}` to the character order.
    pub vacuum_sum_matches: bool,
}

impl CharMatchReport {
    pub fn passed(&self) -> bool {
        self.vacuum_sum_matches && self.rows.iter().all(|r| r.matches)
    }
}

/// `Λ(1) = ∩ Ker` on Blue, `Π(1) = ∩ Ker` on Green, `Λ(2)` the whole Center
/// module and `Π(2) = ∩ Ker` on Steinberg (all of it), each compared
/// layer by layer to `χ₁ … χ₄` of `n` pairs.
pub fn kernel_char_match(n: usize, levels: u32, order: usize) -> Result<CharMatchReport> {
    let rs = build_root_system(Series::B, n)?;
    let sl = build_screening_lattices(&rs, 4)?;
    let screenings = short_screening_set(&sl);
    let sf = sf_characters(n, order.max(levels as usize + 1))?;
    let c24 = -sl.central_charge / int(24);
    let modules = [
        ("Lambda(1)", NamedModule::Blue),
        ("Pi(1)", NamedModule::Green),
        ("Lambda(2)", NamedModule::Center),
        ("Pi(2)", NamedModule::Steinberg),
    ];
    let mut rows = Vec::new();
    for (k, (name, m)) in modules.iter().enumerate() {
        let coset = sl.named_module(*m)?;
        let rep = module_kernel(&sl, &coset, &screenings, levels, false)?;
        let dims: Vec<i128> = rep
            .rows
            .iter()
            .map(|r| if *m == NamedModule::Center { r.dim } else { r.intersection } as i128)
            .collect();
        let h0 = crate::lattice::groundstates(&sl, &coset).1;
        let offset = c24 + h0;
        let chi = &sf.chi[k];
        let chi_coeffs: Vec<i128> = (0..=levels)
            .map(|j| chi.coeff_at(offset + int(j as i128)).to_integer())
            .collect();
        let below = (0..chi.coeffs.len()).all(|j| chi.exponent(j) >= offset || chi.coeffs[j].is_zero());
        let matches = below && chi_coeffs == dims;
        rows.push(CharMatchRow {
            name: name.to_string(),
            module: m.name().to_string(),
            offset: fmt_rat(&offset),
            chi_leading: fmt_rat(&chi.normalized().offset),
            kernel_dims: dims,
            chi_coeffs,
            matches,
        });
    }
    let blue = graded_dim_module(&sl, &sl.named_module(NamedModule::Blue)?, order);
    let mult = int(1i128 << (n - 1));
    let sum = sf.chi[0].add(&sf.chi[1])?.scale(mult).truncate(int(order as i128));
    Ok(CharMatchReport {
        n,
        levels,
        rows,
        vacuum_sum_matches: series_equal(&blue, &sum),
    })
}
