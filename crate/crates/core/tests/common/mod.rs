#![allow(dead_code)]

use std::sync::Arc;

use proptest::prelude::*;
use toric_cartier::cartier::{CartierData, TripleData};
use toric_cartier::geometry::{Cone, LatticePoint};
use toric_cartier::ideal::MonomialIdeal;
use toric_cartier::semigroup::Semigroup;

pub fn p(v: &[i64]) -> LatticePoint {
    LatticePoint::new(v.to_vec())
}

pub fn skew() -> Arc<Semigroup> {
    Arc::new(Semigroup::from_rays(&[p(&[1, 0]), p(&[1, 3])]).unwrap())
}

pub fn orthant() -> Arc<Semigroup> {
    Arc::new(Semigroup::new(Cone::orthant(2)))
}

pub fn ideal(s: &Arc<Semigroup>, gens: &[[i64; 2]]) -> MonomialIdeal {
    let pts: Vec<LatticePoint> = gens.iter().map(|g| LatticePoint::from(*g)).collect();
    MonomialIdeal::from_generators(s.clone(), &pts).unwrap()
}

pub fn pair(s: &Arc<Semigroup>, prime: u64, e: u32, w: [i64; 2]) -> TripleData {
    TripleData::pair(CartierData::new(s.clone(), prime, e, LatticePoint::from(w)).unwrap())
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Two primitive rays with positive determinant, entries in `[-3, 3]`.
pub fn cone2() -> impl Strategy<Value = Cone> {
    ((-3i64..=3, -3i64..=3), (-3i64..=3, -3i64..=3))
        .prop_filter("primitive rays spanning a pointed cone", |((a, b), (c, d))| {
            a * d - b * c > 0 && gcd(*a, *b) == 1 && gcd(*c, *d) == 1
        })
        .prop_map(|((a, b), (c, d))| Cone::from_rays(&[p(&[a, b]), p(&[c, d])]).unwrap())
}

/// Small simplicial or four-ray cones in dimension three, all rays in the upper half space.
pub fn cone3() -> impl Strategy<Value = Cone> {
    proptest::collection::vec((-2i64..=2, -2i64..=2, 1i64..=2), 3..=4).prop_filter_map(
        "full-dimensional pointed cone",
        |rays| {
            let pts: Vec<LatticePoint> = rays.iter().map(|&(a, b, c)| p(&[a, b, c])).collect();
            Cone::from_rays(&pts).ok()
        },
    )
}

pub fn cone_any() -> impl Strategy<Value = Cone> {
    prop_oneof![3 => cone2(), 1 => cone3()]
}

/// Points of the cone obtained as small nonnegative combinations of its rays.
pub fn points_in(cone: &Cone, coeffs: &[u8]) -> Vec<LatticePoint> {
    let rays = cone.rays();
    coeffs
        .chunks(rays.len())
        .filter(|c| c.len() == rays.len())
        .map(|c| {
            let mut x = LatticePoint::zero(cone.dim());
            for (r, &k) in rays.iter().zip(c) {
                x = &x + &r.scale(i64::from(k));
            }
            x
        })
        .collect()
}

/// A cone with a nonzero monomial ideal in it.
pub fn cone_and_ideal() -> impl Strategy<Value = (Arc<Semigroup>, MonomialIdeal)> {
    (cone2(), proptest::collection::vec(0u8..=3, 2..=8)).prop_map(|(cone, coeffs)| {
        let s = Arc::new(Semigroup::new(cone));
        let mut gens = points_in(s.cone(), &coeffs);
        if gens.is_empty() {
            gens.push(LatticePoint::zero(2));
        }
        let i = MonomialIdeal::from_generators(s.clone(), &gens).unwrap();
        (s, i)
    })
}

/// Every lattice point in `[-r, r]^d`.
pub fn box_points(d: usize, r: i64) -> Vec<LatticePoint> {
    let mut out = vec![Vec::new()];
    for _ in 0..d {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i64>| {
                (-r..=r).map(move |c| {
                    let mut w = v.clone();
                    w.push(c);
                    w
                })
            })
            .collect();
    }
    out.into_iter().map(LatticePoint::new).collect()
}
