//! Complete enumeration of lattice points in a ball.

use crate::rational::{to_f64, RatMatrix, Rational};

/// All integer vectors `n` with `|(n − c)·B|²_G ≤ radius_sq`.
///
/// Uses the bound `|n_j − c_j| ≤ sqrt(radius_sq · (M⁻¹)_jj)` where
/// `M = B G Bᵀ`; every candidate in the box is then checked exactly.
pub fn integer_points_in_ball(
    basis: &RatMatrix,
    gram: &RatMatrix,
    center: &[Rational],
    radius_sq: Rational,
) -> Vec<Vec<i128>> {
    let r = basis.rows;
    let m = basis.mul(gram).mul(&basis.transpose());
    let minv = m.inverse().expect("lattice gram must be nondegenerate");
    let rad = to_f64(&radius_sq).max(0.0);
    let ranges: Vec<(i128, i128)> = (0..r)
        .map(|j| {
            let w = (rad * to_f64(&minv[(j, j)])).sqrt() + 1e-9;
            let c = to_f64(&center[j]);
            ((c - w).floor() as i128, (c + w).ceil() as i128)
        })
        .collect();
    let mut out = Vec::new();
    let mut cur = vec![0i128; r];
    walk(0, &ranges, &mut cur, &mut |n| {
        let diff: Vec<Rational> = (0..r).map(|j| Rational::from(n[j]) - center[j]).collect();
        if crate::rational::bilinear(&m, &diff, &diff) <= radius_sq {
            out.push(n.to_vec());
        }
    });
    out
}

fn walk(i: usize, ranges: &[(i128, i128)], cur: &mut Vec<i128>, f: &mut impl FnMut(&[i128])) {
    if i == ranges.len() {
        f(cur);
        return;
    }
    for x in ranges[i].0..=ranges[i].1 {
        cur[i] = x;
        walk(i + 1, ranges, cur, f);
    }
}
