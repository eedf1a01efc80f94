//! Small dense exact linear algebra over the rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Reduced row echelon form in place; returns the pivot columns.
fn rref(m: &mut [Vec<BigRational>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = BigRational::one() / &m[row][col];
        for c in col..m[row].len() {
            m[row][c] = &m[row][c] * &inv;
        }
        for r in 0..m.len() {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..m[r].len() {
                    let v = &m[row][c] * &f;
                    m[r][c] -= v;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

fn to_rational_rows(rows: &[Vec<BigInt>]) -> Vec<Vec<BigRational>> {
    rows.iter()
        .map(|r| r.iter().map(|c| BigRational::from_integer(c.clone())).collect())
        .collect()
}

pub fn rank_int(rows: &[Vec<BigInt>], cols: usize) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let mut m = to_rational_rows(rows);
    rref(&mut m, cols).len()
}

pub fn rank(rows: &[Vec<BigRational>], cols: usize) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let mut m = rows.to_vec();
    rref(&mut m, cols).len()
}

/// Indices of a maximal linearly independent subset of `rows`, chosen greedily in order.
pub fn independent_rows(rows: &[Vec<BigInt>], cols: usize) -> Vec<usize> {
    let mut chosen: Vec<usize> = Vec::new();
    let mut basis: Vec<Vec<BigInt>> = Vec::new();
    for (i, r) in rows.iter().enumerate() {
        if chosen.len() == cols {
            break;
        }
        basis.push(r.clone());
        if rank_int(&basis, cols) == basis.len() {
            chosen.push(i);
        } else {
            basis.pop();
        }
    }
    chosen
}

/// Solves `A x = b`. Returns `None` if inconsistent; free variables are set to zero.
pub fn solve(a: &[Vec<BigRational>], b: &[BigRational], cols: usize) -> Option<Vec<BigRational>> {
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut m, cols);
    for row in m.iter().skip(pivots.len()) {
        if !row[cols].is_zero() {
            return None;
        }
    }
    let mut x = vec![BigRational::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = m[r][cols].clone();
    }
    Some(x)
}

/// Basis of the right kernel `{x : A x = 0}`.
pub fn kernel(a: &[Vec<BigRational>], cols: usize) -> Vec<Vec<BigRational>> {
    let mut m = a.to_vec();
    let pivots = rref(&mut m, cols);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![BigRational::zero(); cols];
            x[f] = BigRational::one();
            for (r, &c) in pivots.iter().enumerate() {
                x[c] = -m[r][f].clone();
            }
            x
        })
        .collect()
}
