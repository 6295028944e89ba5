//! Divided-power orders, the `(𝔤⁽⁰⁾, 𝔤⁽ℓ⁾)` classification and the
//! extension table.

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{build_screening_lattices, num_simples, quotient_group, Lattice, Momentum};
use crate::rational::{fmt_rat, int, Rational};
use crate::rootdata::{
    build_root_system, dual_root_system, identify_gram, subsystem_simple_roots, RootSystem, Series,
    TypeLabel,
};

/// `ℓ_α = ord(q^{(α,α)}) = ℓ / gcd(ℓ, (α,α))` for each simple root.
pub fn divided_power_orders(rs: &RootSystem, ell: i64) -> Vec<i64> {
    (0..rs.rank).map(|i| ell / ell.gcd(&rs.gram[i][i])).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Case {
    Trivial,
    Generic,
    Duality,
    Degenerate,
    Exotic,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub case: Case,
    pub g0: TypeLabel,
    pub gell: TypeLabel,
    /// False for the exotic case, whose `𝔤⁽⁰⁾` is not derived here.
    pub computed: bool,
}

/// Simple roots (in the simple-root basis) of the roots with
/// `q^{(α,α)} ≠ 1`, i.e. `ℓ ∤ (α,α)`.
pub fn small_subsystem(rs: &RootSystem, ell: i64) -> Vec<Vec<i64>> {
    let keep: Vec<Vec<i64>> = rs
        .positive_roots
        .iter()
        .filter(|r| rs.pairing_int(r, r) % ell != 0)
        .cloned()
        .collect();
    subsystem_simple_roots(&keep)
}

fn label_of(rs: &RootSystem, simple: &[Vec<i64>]) -> TypeLabel {
    let g: Vec<Vec<i64>> = simple
        .iter()
        .map(|a| simple.iter().map(|b| rs.pairing_int(a, b)).collect())
        .collect();
    identify_gram(&g)
}

pub fn own_label(rs: &RootSystem) -> TypeLabel {
    TypeLabel::simple(rs.series, rs.rank)
}

pub fn classify(rs: &RootSystem, ell: i64) -> Result<Classification> {
    if ell <= 0 {
        return Err(Error::InvalidLevel {
            ell,
            reason: "ell must be positive".into(),
        });
    }
    let orders = divided_power_orders(rs, ell);
    let scaled: Vec<Vec<i64>> = (0..rs.rank)
        .map(|i| (0..rs.rank).map(|j| rs.gram[i][j] * orders[i] * orders[j]).collect())
        .collect();
    let gell = identify_gram(&scaled);
    if rs.series == Series::G && ell == 4 {
        return Ok(Classification {
            case: Case::Exotic,
            g0: TypeLabel::simple(Series::A, 3),
            gell,
            computed: false,
        });
    }
    let g0 = label_of(rs, &small_subsystem(rs, ell));
    let me = own_label(rs);
    let case = if ell <= 2 {
        Case::Trivial
    } else if g0 != me {
        Case::Degenerate
    } else if orders.iter().any(|&o| o != orders[0]) {
        Case::Duality
    } else {
        Case::Generic
    };
    Ok(Classification {
        case,
        g0,
        gell,
        computed: true,
    })
}

/// One row of the classification table with its tabulated entries.
#[derive(Clone, Debug, Serialize)]
pub struct ClassificationRow {
    pub g: String,
    pub ell: i64,
    pub case: Case,
    pub g0: String,
    pub gell: String,
    pub table_g0: String,
    pub table_gell: String,
    pub computed: bool,
    pub matches: bool,
}

/// Representative `(𝔤, ℓ)` for every row of the classification table and
/// the printed `(𝔤⁽⁰⁾, 𝔤⁽ℓ⁾)`.
pub fn classification_table() -> Result<Vec<ClassificationRow>> {
    use Series::*;
    let rows: &[(Series, usize, i64, Case, &str, &str)] = &[
        (A, 2, 1, Case::Trivial, "0", "A2"),
        (B, 3, 2, Case::Trivial, "0", "B3"),
        (A, 3, 5, Case::Generic, "A3", "A3"),
        (D, 4, 3, Case::Generic, "D4", "D4"),
        (E, 6, 7, Case::Generic, "E6", "E6"),
        (B, 3, 6, Case::Generic, "B3", "B3"),
        (C, 3, 6, Case::Generic, "C3", "C3"),
        (F, 4, 6, Case::Generic, "F4", "F4"),
        (G, 2, 5, Case::Generic, "G2", "G2"),
        (B, 3, 8, Case::Duality, "B3", "C3"),
        (C, 3, 8, Case::Duality, "C3", "B3"),
        (F, 4, 8, Case::Duality, "F4", "F4"),
        (G, 2, 9, Case::Duality, "G2", "G2"),
        (B, 2, 4, Case::Degenerate, "A1^2", "C2"),
        (B, 3, 4, Case::Degenerate, "A1^3", "C3"),
        (C, 3, 4, Case::Degenerate, "D3", "B3"),
        (C, 4, 4, Case::Degenerate, "D4", "B4"),
        (F, 4, 4, Case::Degenerate, "D4", "F4"),
        (G, 2, 3, Case::Degenerate, "A2", "G2"),
        (G, 2, 6, Case::Degenerate, "A2", "G2"),
        (G, 2, 4, Case::Exotic, "A3", "G2"),
    ];
    let mut out = Vec::new();
    for &(s, n, ell, case, pg0, pgl) in rows {
        let rs = build_root_system(s, n)?;
        let c = classify(&rs, ell)?;
        let norm = |t: &str| parse_label(t).map(|l| l.to_string());
        let matches = c.case == case
            && Some(c.g0.to_string()) == norm(pg0)
            && Some(c.gell.to_string()) == norm(pgl);
        out.push(ClassificationRow {
            g: own_label(&rs).to_string(),
            ell,
            case: c.case,
            g0: c.g0.to_string(),
            gell: c.gell.to_string(),
            table_g0: pg0.into(),
            table_gell: pgl.into(),
            computed: c.computed,
            matches,
        });
    }
    Ok(out)
}

/// Parses labels like `A1^3`, `D4`, `A2xB3`, `0`.
pub fn parse_label(s: &str) -> Option<TypeLabel> {
    if s.trim() == "0" {
        return Some(TypeLabel::empty());
    }
    let mut comps = Vec::new();
    for part in s.split('x') {
        let (base, mult) = match part.split_once('^') {
            Some((b, m)) => (b, m.parse::<usize>().ok()?),
            None => (part, 1),
        };
        let series: Series = base.get(..1)?.parse().ok()?;
        let rank: usize = base.get(1..)?.parse().ok()?;
        for _ in 0..mult {
            comps.push((series, rank));
        }
    }
    Some(TypeLabel(comps).normalized())
}

/// Number of simple modules `|(Λ⊕)*/Λ⊕|` of a product of simple types.
fn num_simples_label(t: &TypeLabel, ell: i64) -> Result<i64> {
    let mut n = 1;
    for &(s, r) in &t.0 {
        n *= num_simples(&build_root_system(s, r)?, ell);
    }
    Ok(n)
}

#[derive(Clone, Debug, Serialize)]
pub struct ExtensionReport {
    pub g: String,
    pub ell: i64,
    pub orders: Vec<i64>,
    pub g0: String,
    pub gell: String,
    /// `|Λ_W/Λ_R|` and `Π ℓ/(α_i,α_i)`.
    pub simples_factors: (i64, i64),
    pub num_simples: i64,
    /// Order of `(Λ⊕)*/Λ⊕` from the Smith normal form.
    pub quotient_order: i64,
    pub g0_num_simples: i64,
    pub dim_x: i64,
    /// `√(#simples(𝔤⁽⁰⁾)/#simples(𝔤))`.
    pub dim_x_from_counts: Option<i64>,
    pub central_charge: String,
    pub table_central_charge: String,
    pub central_charge_agrees: bool,
    pub global_symmetry: String,
    /// The table's label of the `𝔤⁽⁰⁾` theory, reproduced verbatim.
    pub table_g0_theory: String,
}

fn isqrt_exact(x: Rational) -> Option<i64> {
    if !x.is_integer() || x < int(0) {
        return None;
    }
    let v = x.to_integer();
    let r = (v as f64).sqrt().round() as i128;
    (r * r == v).then_some(r as i64)
}

/// The table's central-charge entry for the row.
pub fn table_central_charge(series: Series, n: usize) -> Option<Rational> {
    let n = n as i128;
    match series {
        Series::B => Some(int(-2 * n)),
        Series::C => Some(int(3 * n * n - 2 * n * n * n)),
        Series::F => Some(int(-80)),
        Series::G => Some(int(-30)),
        _ => None,
    }
}

pub fn extension_report(rs: &RootSystem, ell: i64) -> Result<ExtensionReport> {
    let (series, n) = (rs.series, rs.rank);
    let in_scope = matches!(
        (series, ell),
        (Series::B, 4) | (Series::C, 4) | (Series::F, 4) | (Series::G, 6)
    ) && n >= 2;
    if !in_scope {
        return Err(Error::Unsupported(format!(
            "extension table covers (Bn,4), (Cn,4), (F4,4), (G2,6); got {}{} at ell = {ell}",
            series, n
        )));
    }
    let cl = classify(rs, ell)?;
    let sl = build_screening_lattices(rs, ell)?;
    let factors = (
        rs.fundamental_group_order,
        (0..n).map(|i| ell / rs.gram[i][i]).product::<i64>(),
    );
    let q = quotient_group(&sl.dual, &sl.long)?;
    let g0_simple = small_subsystem(rs, ell);
    let g0_num = num_simples_label(&cl.g0, ell)?;
    // Λ⊕ of the subsystem: (ℓ/(γ,γ)) γ for its simple roots γ.
    let sub = Lattice::new(
        g0_simple
            .iter()
            .map(|r| Momentum::from_ints(r).scale(int((ell / rs.pairing_int(r, r)) as i128)))
            .collect(),
    );
    let det_sub = sub.gram(&sl.ambient).determinant();
    let det_full = sl.long.gram(&sl.ambient).determinant();
    let dim_x = isqrt_exact(det_sub / det_full).ok_or_else(|| {
        Error::Unsupported("index of the subsystem lattice is not a perfect square root".into())
    })?;
    let num = num_simples(rs, ell);
    let from_counts = isqrt_exact(Rational::new(g0_num as i128, num as i128));
    let c = sl.central_charge;
    let pc = table_central_charge(series, n).expect("in scope");
    let g0_theory = match series {
        Series::B => format!("W_{{A1^{n},l=2}}"),
        Series::C => format!("W_{{D{n},l=2}}"),
        Series::F => "W_{D4,l=2}".to_string(),
        _ => "W_{A2,l=6}".to_string(),
    };
    Ok(ExtensionReport {
        g: own_label(rs).to_string(),
        ell,
        orders: divided_power_orders(rs, ell),
        g0: cl.g0.to_string(),
        gell: cl.gell.to_string(),
        simples_factors: factors,
        num_simples: num,
        quotient_order: q.order() as i64,
        g0_num_simples: g0_num,
        dim_x,
        dim_x_from_counts: from_counts,
        central_charge: fmt_rat(&c),
        table_central_charge: fmt_rat(&pc),
        central_charge_agrees: c == pc,
        global_symmetry: own_label(&dual_root_system(rs)).to_string(),
        table_g0_theory: g0_theory,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: Series, n: usize) -> RootSystem {
        build_root_system(s, n).unwrap()
    }

    #[test]
    fn orders() {
        assert_eq!(divided_power_orders(&rs(Series::B, 3), 4), vec![1, 1, 2]);
        assert_eq!(divided_power_orders(&rs(Series::G, 2), 6), vec![3, 1]);
    }

    #[test]
    fn table_rows() {
        for r in classification_table().unwrap() {
            assert!(r.matches, "{r:?}");
        }
    }

    #[test]
    fn coprime_is_generic() {
        for (s, n) in [(Series::B, 3), (Series::C, 2), (Series::F, 4), (Series::A, 2)] {
            let c = classify(&rs(s, n), 7).unwrap();
            assert_eq!(c.g0, own_label(&rs(s, n)));
            assert_eq!(c.gell, own_label(&rs(s, n)));
        }
    }

    #[test]
    fn extension_rows() {
        for n in 2..5 {
            let r = extension_report(&rs(Series::B, n), 4).unwrap();
            assert_eq!(r.num_simples, 4);
            assert_eq!(r.dim_x, 1 << (n - 1));
            assert_eq!(r.dim_x_from_counts, Some(r.dim_x));
            assert_eq!(r.g0_num_simples, 1 << (2 * n));
            assert!(r.central_charge_agrees);
            assert_eq!(r.global_symmetry, format!("C{n}").replace("C2", "B2"));
        }
        let f4 = extension_report(&rs(Series::F, 4), 4).unwrap();
        assert_eq!((f4.num_simples, f4.dim_x, f4.g0_num_simples), (4, 4, 64));
        let g2 = extension_report(&rs(Series::G, 2), 6).unwrap();
        assert_eq!((g2.num_simples, g2.dim_x, g2.g0_num_simples), (3, 3, 27));
        for n in 2..4 {
            let c = extension_report(&rs(Series::C, n), 4).unwrap();
            assert_eq!(c.num_simples, 1 << n);
            assert_eq!(c.dim_x, 2);
            assert_eq!(c.g0_num_simples, 4 << n);
        }
    }
}
