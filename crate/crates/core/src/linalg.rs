//! Exact rank and nullspace over the rationals.
//!
//! Rows are cleared of denominators and reduced with fraction-free
//! (Bareiss) elimination over big integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

/// Sparse rational vector as (column, value) pairs.
pub type SparseRow = Vec<(usize, Rational)>;

fn to_int_row(row: &SparseRow, cols: usize) -> Vec<BigInt> {
    let mut l = BigInt::one();
    for (_, v) in row {
        l = l.lcm(&BigInt::from(*v.denom()));
    }
    let mut out = vec![BigInt::zero(); cols];
    for (j, v) in row {
        out[*j] += &l / BigInt::from(*v.denom()) * BigInt::from(*v.numer());
    }
    out
}

/// Echelon form by Bareiss elimination. Returns the nonzero rows and their
/// pivot columns.
fn bareiss(rows: &[SparseRow], cols: usize) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let mut m: Vec<Vec<BigInt>> = rows.iter().map(|r| to_int_row(r, cols)).collect();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == m.len() {
            break;
        }
        let Some(pr) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        for i in r + 1..m.len() {
            let f = m[i][c].clone();
            let p = m[r][c].clone();
            for j in c..cols {
                let v = (&p * &m[i][j] - &f * &m[r][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    for row in m.iter_mut() {
        let g = row.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
        if !g.is_zero() && !g.is_one() {
            for x in row.iter_mut() {
                *x /= &g;
            }
        }
    }
    (m, pivots)
}

pub fn rank(rows: &[SparseRow], cols: usize) -> usize {
    bareiss(rows, cols).1.len()
}

/// Basis of `{x : R x = 0}`, each vector with integer entries of gcd 1.
pub fn nullspace(rows: &[SparseRow], cols: usize) -> Vec<Vec<BigInt>> {
    let (ech, pivots) = bareiss(rows, cols);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let mut out = Vec::new();
    for &f in &free {
        let mut x = vec![BigRational::zero(); cols];
        x[f] = BigRational::one();
        for (k, &pc) in pivots.iter().enumerate().rev() {
            let row = &ech[k];
            let mut s = BigRational::zero();
            for j in pc + 1..cols {
                if !row[j].is_zero() {
                    s += BigRational::from_integer(row[j].clone()) * &x[j];
                }
            }
            x[pc] = -s / BigRational::from_integer(row[pc].clone());
        }
        let l = x.iter().fold(BigInt::one(), |l, v| l.lcm(v.denom()));
        let mut v: Vec<BigInt> = x.iter().map(|v| (v * BigRational::from_integer(l.clone())).to_integer()).collect();
        let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
        if !g.is_one() {
            for e in v.iter_mut() {
                *e /= &g;
            }
        }
        if let Some(first) = v.iter().find(|e| !e.is_zero()) {
            if first.is_negative() {
                for e in v.iter_mut() {
                    *e = -e.clone();
                }
            }
        }
        out.push(v);
    }
    out
}
