//! Finite-type root systems.
//!
//! Normalization: short roots have norm 2, long roots norm 4 (norm 6 for the
//! long root of G2). Numbering follows Bourbaki, so for B_n the unique short
//! simple root is `α_n` and for C_n the unique long one is `α_n`.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{int, RatMatrix, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self)
    }
}

impl std::str::FromStr for Series {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Series::A),
            "B" => Ok(Series::B),
            "C" => Ok(Series::C),
            "D" => Ok(Series::D),
            "E" => Ok(Series::E),
            "F" => Ok(Series::F),
            "G" => Ok(Series::G),
            other => Err(Error::InvalidRootSystem {
                series: other.to_string(),
                rank: 0,
                reason: "unknown series".into(),
            }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    pub series: Series,
    pub rank: usize,
    /// `cartan[i][j] = (α_i, α_j^∨)`.
    pub cartan: Vec<Vec<i64>>,
    /// `gram[i][j] = (α_i, α_j)`.
    pub gram: Vec<Vec<i64>>,
    /// `d[i] = (α_i, α_i) / 2`.
    pub d: Vec<i64>,
    /// Positive roots in the simple-root basis, sorted by height.
    pub positive_roots: Vec<Vec<i64>>,
    pub rho: Vec<Rational>,
    pub rho_dual: Vec<Rational>,
    /// Row `i` is `λ_i` in the α-basis.
    pub fund_weights: RatMatrix,
    pub fundamental_group_order: i64,
}

fn chain(n: usize, diag: impl Fn(usize) -> i64, off: impl Fn(usize) -> i64) -> Vec<Vec<i64>> {
    let mut g = vec![vec![0; n]; n];
    for i in 0..n {
        g[i][i] = diag(i);
        if i + 1 < n {
            g[i][i + 1] = off(i);
            g[i + 1][i] = off(i);
        }
    }
    g
}

fn invalid(series: Series, rank: usize, reason: &str) -> Error {
    Error::InvalidRootSystem {
        series: series.to_string(),
        rank,
        reason: reason.to_string(),
    }
}

/// Builds the root system of the given finite type.
pub fn build_root_system(series: Series, rank: usize) -> Result<RootSystem> {
    if rank == 0 {
        return Err(invalid(series, rank, "rank must be positive"));
    }
    let gram = match series {
        Series::A => chain(rank, |_| 2, |_| -1),
        Series::B if rank == 1 => return build_root_system(Series::A, 1),
        Series::B => chain(rank, |i| if i + 1 == rank { 2 } else { 4 }, |_| -2),
        Series::C if rank == 1 => return build_root_system(Series::A, 1),
        Series::C => chain(rank, |i| if i + 1 == rank { 4 } else { 2 }, |i| {
            if i + 2 == rank {
                -2
            } else {
                -1
            }
        }),
        Series::D if rank >= 3 => {
            let mut g = chain(rank, |_| 2, |_| -1);
            g[rank - 2][rank - 1] = 0;
            g[rank - 1][rank - 2] = 0;
            g[rank - 3][rank - 1] = -1;
            g[rank - 1][rank - 3] = -1;
            g
        }
        Series::D => return Err(invalid(series, rank, "D_n needs n >= 3")),
        Series::E if (6..=8).contains(&rank) => {
            // Bourbaki: α2 attached to α4, chain α1-α3-α4-...-αn.
            let mut g = vec![vec![0; rank]; rank];
            for (i, row) in g.iter_mut().enumerate() {
                row[i] = 2;
            }
            let mut link = |a: usize, b: usize| {
                g[a][b] = -1;
                g[b][a] = -1;
            };
            link(0, 2);
            link(1, 3);
            for i in 2..rank - 1 {
                link(i, i + 1);
            }
            g
        }
        Series::E => return Err(invalid(series, rank, "E_n needs 6 <= n <= 8")),
        Series::F if rank == 4 => vec![
            vec![4, -2, 0, 0],
            vec![-2, 4, -2, 0],
            vec![0, -2, 2, -1],
            vec![0, 0, -1, 2],
        ],
        Series::F => return Err(invalid(series, rank, "only F4 exists")),
        Series::G if rank == 2 => vec![vec![2, -3], vec![-3, 6]],
        Series::G => return Err(invalid(series, rank, "only G2 exists")),
    };
    from_gram(series, gram)
}

/// Builds all derived data from a symmetric Gram matrix of simple roots.
pub fn from_gram(series: Series, gram: Vec<Vec<i64>>) -> Result<RootSystem> {
    let rank = gram.len();
    let d: Vec<i64> = (0..rank).map(|i| gram[i][i] / 2).collect();
    let mut cartan = vec![vec![0; rank]; rank];
    for i in 0..rank {
        for j in 0..rank {
            if gram[i][j] != gram[j][i] {
                return Err(invalid(series, rank, "gram not symmetric"));
            }
            if (2 * gram[i][j]) % gram[j][j] != 0 {
                return Err(invalid(series, rank, "non-integral Cartan entry"));
            }
            cartan[i][j] = 2 * gram[i][j] / gram[j][j];
        }
    }
    let gm = RatMatrix::from_int_rows(&gram);
    let ginv = gm
        .inverse()
        .ok_or_else(|| invalid(series, rank, "singular gram"))?;
    let mut fund_weights = RatMatrix::zeros(rank, rank);
    for i in 0..rank {
        for j in 0..rank {
            fund_weights[(i, j)] = int(d[i] as i128) * ginv[(i, j)];
        }
    }
    let positive_roots = closure(&cartan);
    let half = Rational::new(1, 2);
    let mut rho = vec![Rational::zero(); rank];
    let mut rho_dual = vec![Rational::zero(); rank];
    for r in &positive_roots {
        let norm: i64 = (0..rank)
            .map(|i| (0..rank).map(|j| r[i] * gram[i][j] * r[j]).sum::<i64>())
            .sum();
        for i in 0..rank {
            rho[i] += half * int(r[i] as i128);
            rho_dual[i] += int(r[i] as i128) / int(norm as i128);
        }
    }
    let det = RatMatrix::from_int_rows(&cartan).determinant();
    Ok(RootSystem {
        series,
        rank,
        cartan,
        gram,
        d,
        positive_roots,
        rho,
        rho_dual,
        fund_weights,
        fundamental_group_order: det.to_integer() as i64,
    })
}

/// Positive roots by height induction using root strings.
fn closure(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let mut known: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut all = Vec::new();
    let mut layer: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        })
        .collect();
    while !layer.is_empty() {
        for r in &layer {
            known.insert(r.clone());
        }
        all.extend(layer.iter().cloned());
        let mut next = BTreeSet::new();
        for beta in &layer {
            for i in 0..n {
                // β − rα_i, …, β + qα_i with r − q = ⟨β, α_i^∨⟩.
                let mut r = 0;
                let mut probe = beta.clone();
                loop {
                    probe[i] -= 1;
                    if known.contains(&probe) {
                        r += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..n).map(|j| beta[j] * cartan[j][i]).sum();
                if r - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    next.insert(up);
                }
            }
        }
        layer = next.into_iter().collect();
    }
    all
}

/// Number of positive roots for the classical count of each series.
pub fn classical_positive_count(series: Series, rank: usize) -> usize {
    match series {
        Series::A => rank * (rank + 1) / 2,
        Series::B | Series::C => rank * rank,
        Series::D => rank * (rank - 1),
        Series::E => match rank {
            6 => 36,
            7 => 63,
            _ => 120,
        },
        Series::F => 24,
        Series::G => 6,
    }
}

impl RootSystem {
    pub fn label(&self) -> String {
        format!("{}{}", self.series, self.rank)
    }

    pub fn gram_matrix(&self) -> RatMatrix {
        RatMatrix::from_int_rows(&self.gram)
    }

    pub fn is_simply_laced(&self) -> bool {
        self.d.iter().all(|&x| x == self.d[0])
    }

    pub fn long_norm(&self) -> i64 {
        2 * self.d.iter().copied().max().unwrap_or(1)
    }

    /// `(β, γ)` for vectors in the simple-root basis.
    pub fn pairing_int(&self, b: &[i64], c: &[i64]) -> i64 {
        (0..self.rank)
            .map(|i| (0..self.rank).map(|j| b[i] * self.gram[i][j] * c[j]).sum::<i64>())
            .sum()
    }

    pub fn pairing_rat(&self, b: &[Rational], c: &[Rational]) -> Rational {
        crate::rational::bilinear(&self.gram_matrix(), b, c)
    }

    /// All roots, positive and negative.
    pub fn all_roots(&self) -> Vec<Vec<i64>> {
        let mut v = self.positive_roots.clone();
        v.extend(
            self.positive_roots
                .iter()
                .map(|r| r.iter().map(|x| -x).collect::<Vec<_>>()),
        );
        v
    }
}

/// `(ρ, ρ^∨)` in the α-basis.
pub fn weyl_vectors(rs: &RootSystem) -> (Vec<Rational>, Vec<Rational>) {
    (rs.rho.clone(), rs.rho_dual.clone())
}

pub fn positive_roots(rs: &RootSystem) -> Vec<Vec<i64>> {
    rs.positive_roots.clone()
}

pub fn fundamental_weights(rs: &RootSystem) -> RatMatrix {
    rs.fund_weights.clone()
}

/// Root system with transposed Cartan matrix, renormalized so that its short
/// roots have norm 2.
pub fn dual_root_system(rs: &RootSystem) -> RootSystem {
    let n = rs.rank;
    // (α_i^∨, α_j^∨) = 4 (α_i, α_j) / ((α_i,α_i)(α_j,α_j)), then rescale.
    let raw: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    int(4 * rs.gram[i][j] as i128)
                        / int((rs.gram[i][i] * rs.gram[j][j]) as i128)
                })
                .collect()
        })
        .collect();
    let min_diag = (0..n).map(|i| raw[i][i]).min().unwrap_or_else(Rational::one);
    let scale = int(2) / min_diag;
    let gram: Vec<Vec<i64>> = raw
        .iter()
        .map(|r| r.iter().map(|x| (x * scale).to_integer() as i64).collect())
        .collect();
    let series = match rs.series {
        Series::B if n >= 2 => Series::C,
        Series::C if n >= 2 => Series::B,
        s => s,
    };
    from_gram(series, gram).expect("dual of a valid root system is valid")
}

/// Isomorphism class of a (possibly reducible) root system, as a sorted list
/// of simple components. Low-rank coincidences are normalized:
/// B1 = C1 = A1, C2 = B2, D2 = A1×A1, D3 = A3.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct TypeLabel(pub Vec<(Series, usize)>);

impl TypeLabel {
    pub fn simple(series: Series, rank: usize) -> Self {
        TypeLabel(vec![(series, rank)]).normalized()
    }

    pub fn empty() -> Self {
        TypeLabel(vec![])
    }

    pub fn normalized(&self) -> Self {
        let mut out = Vec::new();
        for &(s, n) in &self.0 {
            match (s, n) {
                (Series::B | Series::C, 1) => out.push((Series::A, 1)),
                (Series::C, 2) => out.push((Series::B, 2)),
                (Series::D, 2) => {
                    out.push((Series::A, 1));
                    out.push((Series::A, 1));
                }
                (Series::D, 3) => out.push((Series::A, 3)),
                other => out.push(other),
            }
        }
        out.sort();
        TypeLabel(out)
    }

    pub fn rank(&self) -> usize {
        self.0.iter().map(|x| x.1).sum()
    }
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let mut j = i;
            while j < self.0.len() && self.0[j] == self.0[i] {
                j += 1;
            }
            let (s, n) = self.0[i];
            if j - i > 1 {
                parts.push(format!("{}{}^{}", s, n, j - i));
            } else {
                parts.push(format!("{}{}", s, n));
            }
            i = j;
        }
        write!(f, "{}", parts.join("x"))
    }
}

/// Identifies the type of a root system from the Gram matrix of a simple
/// system.
pub fn identify_gram(gram: &[Vec<i64>]) -> TypeLabel {
    let n = gram.len();
    let mut seen = vec![false; n];
    let mut comps = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut k = 0;
        while k < comp.len() {
            let v = comp[k];
            for w in 0..n {
                if !seen[w] && gram[v][w] != 0 {
                    seen[w] = true;
                    comp.push(w);
                }
            }
            k += 1;
        }
        comps.push(identify_component(gram, &comp));
    }
    TypeLabel(comps).normalized()
}

fn identify_component(gram: &[Vec<i64>], nodes: &[usize]) -> (Series, usize) {
    let k = nodes.len();
    if k == 1 {
        return (Series::A, 1);
    }
    let bond = |a: usize, b: usize| -> i64 {
        // number of lines in the Dynkin diagram: 4(a,b)^2 / (|a|^2 |b|^2)
        let g = gram[a][b];
        4 * g * g / (gram[a][a] * gram[b][b])
    };
    let deg = |v: usize| nodes.iter().filter(|&&w| w != v && gram[v][w] != 0).count();
    let mut multi = None;
    for (x, &a) in nodes.iter().enumerate() {
        for &b in &nodes[x + 1..] {
            let m = bond(a, b);
            if m > 1 {
                multi = Some((a, b, m));
            }
        }
    }
    match multi {
        Some((_, _, 3)) => (Series::G, 2),
        Some((a, b, _)) => {
            if k == 2 {
                return (Series::B, 2);
            }
            let (short, long) = if gram[a][a] < gram[b][b] { (a, b) } else { (b, a) };
            if deg(short) == 1 {
                (Series::B, k)
            } else if deg(long) == 1 {
                (Series::C, k)
            } else {
                (Series::F, 4)
            }
        }
        None => {
            let Some(branch) = nodes.iter().copied().find(|&v| deg(v) == 3) else {
                return (Series::A, k);
            };
            // Arm lengths from the branch node.
            let mut arms = Vec::new();
            for &start in nodes.iter().filter(|&&w| w != branch && gram[branch][w] != 0) {
                let (mut prev, mut cur, mut len) = (branch, start, 1);
                loop {
                    let next = nodes
                        .iter()
                        .copied()
                        .find(|&w| w != prev && w != cur && gram[cur][w] != 0);
                    match next {
                        Some(nx) => {
                            prev = cur;
                            cur = nx;
                            len += 1;
                        }
                        None => break,
                    }
                }
                arms.push(len);
            }
            arms.sort();
            if arms[0] == 1 && arms[1] == 1 {
                (Series::D, k)
            } else {
                (Series::E, k)
            }
        }
    }
}

/// Root system of a root subsystem given by its positive roots (in the
/// simple-root basis of `rs`): simple roots are the positive ones that are not
/// a sum of two positive ones in the subsystem.
pub fn subsystem_simple_roots(positive: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let set: BTreeSet<&Vec<i64>> = positive.iter().collect();
    positive
        .iter()
        .filter(|r| {
            !positive.iter().any(|a| {
                let diff: Vec<i64> = r.iter().zip(a.iter()).map(|(x, y)| x - y).collect();
                set.contains(&diff)
            })
        })
        .cloned()
        .collect()
}
