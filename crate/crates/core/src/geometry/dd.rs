//! Double description: extreme rays of a pointed cone `{y : a_i . y >= 0}`.
//!
//! Incremental Motzkin iteration with the algebraic adjacency test. Everything
//! is carried in primitive integer vectors, so the output is canonical.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::linalg;
use super::vector::primitive_bigint;

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Extreme rays of `{y in R^dim : a . y >= 0 for every row a}`, primitive and sorted.
///
/// Returns `None` when the rows have rank below `dim`, i.e. the cone contains a line.
/// The trivial cone `{0}` yields an empty list.
pub fn extreme_rays(constraints: &[Vec<BigInt>], dim: usize) -> Option<Vec<Vec<BigInt>>> {
    let basis = linalg::independent_rows(constraints, dim);
    if basis.len() < dim {
        return None;
    }

    // Columns of A_B^{-1}: ray j is tight on every basis row except j.
    let a_b: Vec<Vec<BigRational>> = basis
        .iter()
        .map(|&i| {
            constraints[i]
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect()
        })
        .collect();
    let mut rays: Vec<Vec<BigInt>> = Vec::with_capacity(dim);
    for j in 0..dim {
        let rhs: Vec<BigRational> = (0..dim)
            .map(|i| {
                if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            })
            .collect();
        let x = linalg::solve(&a_b, &rhs, dim).expect("basis rows are independent");
        rays.push(integral_direction(&x));
    }

    let mut processed: Vec<usize> = basis.clone();
    let in_basis: BTreeSet<usize> = basis.iter().copied().collect();

    for (c, row) in constraints.iter().enumerate() {
        if in_basis.contains(&c) {
            continue;
        }
        let vals: Vec<BigInt> = rays.iter().map(|r| dot(row, r)).collect();
        if vals.iter().all(|v| !v.is_negative()) {
            processed.push(c);
            continue;
        }
        let mut next: Vec<Vec<BigInt>> = Vec::new();
        for (r, v) in rays.iter().zip(&vals) {
            if !v.is_negative() {
                next.push(r.clone());
            }
        }
        let tight: Vec<Vec<bool>> = rays
            .iter()
            .map(|r| processed.iter().map(|&i| dot(&constraints[i], r).is_zero()).collect())
            .collect();
        for (pi, pv) in vals.iter().enumerate() {
            if !pv.is_positive() {
                continue;
            }
            for (ni, nv) in vals.iter().enumerate() {
                if !nv.is_negative() {
                    continue;
                }
                let common: Vec<Vec<BigInt>> = processed
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| tight[pi][*k] && tight[ni][*k])
                    .map(|(_, &i)| constraints[i].clone())
                    .collect();
                if dim >= 2 && (common.len() + 2 < dim || linalg::rank_int(&common, dim) != dim - 2) {
                    continue;
                }
                let combined: Vec<BigInt> = rays[ni].iter().zip(&rays[pi]).map(|(n, p)| n * pv - p * nv).collect();
                next.push(primitive_bigint(&combined));
            }
        }
        processed.push(c);
        let dedup: BTreeSet<Vec<BigInt>> = next.into_iter().filter(|r| r.iter().any(|x| !x.is_zero())).collect();
        rays = dedup.into_iter().collect();
    }
    rays.sort();
    Some(rays)
}

fn integral_direction(x: &[BigRational]) -> Vec<BigInt> {
    let den = x
        .iter()
        .fold(BigInt::one(), |l, c| num_integer::Integer::lcm(&l, c.denom()));
    let ints: Vec<BigInt> = x
        .iter()
        .map(|c| (c * BigRational::from_integer(den.clone())).to_integer())
        .collect();
    primitive_bigint(&ints)
}
