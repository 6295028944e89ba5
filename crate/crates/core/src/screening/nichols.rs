//! Quadratic relations among short screenings on module layers.

use serde::Serialize;

use super::layers::module_layers;
use super::Screener;
use crate::error::{Error, Result};
use crate::lattice::{Coset, Momentum, ScreeningLattices};
use crate::rational::{fmt_rat, int};

#[derive(Clone, Debug, Serialize)]
pub struct RelationResult {
    /// `"Z1^2"` or `"[Z1,Z2]"` with the sign used.
    pub relation: String,
    pub sign: i32,
    pub states_checked: usize,
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct NicholsReport {
    pub coset_rep: Momentum,
    pub max_level: u32,
    pub relations: Vec<RelationResult>,
}

impl NicholsReport {
    pub fn passed(&self) -> bool {
        self.relations.iter().all(|r| r.counterexample.is_none())
    }
}

/// `Z_i² = 0` for odd `(γ_i,γ_i)` and `Z_i Z_j − (−1)^{(γ_i,γ_j)} Z_j Z_i = 0`
/// for integral `(γ_i,γ_j)`, on the basis states of the layers up to
/// `max_level`.
pub fn nichols_check(
    sl: &ScreeningLattices,
    coset: &Coset,
    screenings: &[Momentum],
    max_level: u32,
) -> Result<NicholsReport> {
    let amb = &sl.ambient;
    let sc = Screener::new(amb, screenings.to_vec());
    let layers = module_layers(sl, coset, max_level);
    let mut relations = Vec::new();
    let n = screenings.len();
    for i in 0..n {
        for j in i..n {
            let r = amb.pair(&screenings[i], &screenings[j]);
            if !r.is_integer() {
                return Err(Error::FractionalPairing { pairing: fmt_rat(&r) });
            }
            let odd = r.to_integer() % 2 != 0;
            if i == j && !odd {
                continue;
            }
            let sign = if odd { -1 } else { 1 };
            let name = if i == j {
                format!("Z{}^2", i + 1)
            } else {
                format!("[Z{},Z{}]", i + 1, j + 1)
            };
            let mut checked = 0;
            let mut counterexample = None;
            'outer: for layer in &layers {
                for s in 0..layer.dim() {
                    let v = layer.element(s);
                    let zij = sc.apply(i, &sc.apply(j, &v)?)?;
                    let val = if i == j {
                        zij
                    } else {
                        let zji = sc.apply(j, &sc.apply(i, &v)?)?;
                        zij.sub(&zji.scale(int(sign as i128)))
                    };
                    checked += 1;
                    if !val.is_zero() {
                        counterexample = Some(format!("{:?}", layer.basis[s]));
                        break 'outer;
                    }
                }
            }
            relations.push(RelationResult {
                relation: name,
                sign: if i == j { 0 } else { sign },
                states_checked: checked,
                counterexample,
            });
        }
    }
    Ok(NicholsReport {
        coset_rep: coset.rep.clone(),
        max_level,
        relations,
    })
}
